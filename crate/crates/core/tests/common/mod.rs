#![allow(dead_code)]

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;
use ruspini::{
    AssignmentClass, Assignment, Forest, Formula, Partition, PiecewiseLinearFuzzySet, Rational,
    Subforest, TruthValue,
};

pub fn q(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn random_formula(rng: &mut StdRng, vars: usize, depth: usize) -> Formula {
    if depth == 0 || rng.gen_bool(0.2) {
        return match rng.gen_range(0..10) {
            0 => Formula::Bot,
            1 => Formula::Top,
            _ => Formula::var(rng.gen_range(1..=vars)),
        };
    }
    let a = random_formula(rng, vars, depth - 1);
    match rng.gen_range(0..6) {
        0 => a.not(),
        k => {
            let b = random_formula(rng, vars, depth - 1);
            match k {
                1 => a.and(b),
                2 => a.or(b),
                3 => a.implies(b),
                4 => a.iff(b),
                _ => a.lhd(b),
            }
        }
    }
}

/// A random assignment in the given class, with mid values drawn from a
/// fine grid of `(0,1)`.
pub fn random_witness(rng: &mut StdRng, class: &AssignmentClass) -> Assignment {
    let k = class.mid_count();
    let den = 997i64;
    let mut picks: Vec<i64> = (1..den).collect::<Vec<_>>();
    picks.shuffle(rng);
    let mut mids: Vec<i64> = picks[..k].to_vec();
    mids.sort_unstable();
    let mut values = vec![TruthValue::zero(); class.n()];
    for i in class.one_block() {
        values[i - 1] = TruthValue::one();
    }
    for (b, block) in class.mid_blocks().iter().enumerate() {
        for &i in block {
            values[i - 1] = TruthValue::new(q(mids[b], den)).unwrap();
        }
    }
    Assignment::new(values)
}

/// Downset of a random nonempty set of leaves of the Ruspini forest.
pub fn random_ruspini_subforest<'f>(rng: &mut StdRng, forest: &'f Forest) -> Subforest<'f> {
    let leaves: Vec<usize> = forest.ruspini().leaf_ids().collect();
    loop {
        let picked: Vec<usize> = leaves.iter().copied().filter(|_| rng.gen_bool(0.3)).collect();
        if !picked.is_empty() {
            return forest.downset_of_ids(picked);
        }
    }
}

/// Triangular partition with evenly spaced peaks; an exact Ruspini partition.
pub fn triangular_partition(n: usize) -> Partition {
    let m = (n - 1) as i64;
    let sets = (0..n as i64)
        .map(|i| {
            let mut pts = Vec::new();
            if i > 0 {
                pts.push((q(0, 1), q(0, 1)));
                if i > 1 {
                    pts.push((q(i - 1, m), q(0, 1)));
                }
            }
            pts.push((q(i, m), q(1, 1)));
            if i < m {
                if i + 1 < m {
                    pts.push((q(i + 1, m), q(0, 1)));
                }
                pts.push((q(1, 1), q(0, 1)));
            }
            PiecewiseLinearFuzzySet::new(format!("f{}", i + 1), pts).unwrap()
        })
        .collect();
    Partition::new(sets).unwrap()
}

/// A random piecewise-linear family: values on a random grid, with an
/// occasional jump.
pub fn random_partition(rng: &mut StdRng, n: usize) -> Partition {
    let sets = (0..n)
        .map(|i| {
            let grid = rng.gen_range(1..=4i64);
            let mut pts = Vec::new();
            for j in 0..=grid {
                let y = q(rng.gen_range(0..=4), 4);
                pts.push((q(j, grid), y));
                if j > 0 && j < grid && rng.gen_bool(0.15) {
                    pts.push((q(j, grid), q(rng.gen_range(0..=4), 4)));
                }
            }
            PiecewiseLinearFuzzySet::new(format!("f{}", i + 1), pts).unwrap()
        })
        .collect();
    Partition::new(sets).unwrap()
}
