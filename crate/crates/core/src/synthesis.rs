//! Chain normal forms, axiomatization of subforests and partitions, the
//! Ruspini and 2-overlapping axioms, and synthesis of step-function
//! partitions from Ruspini subforests.

use num_traits::{One, Zero};

use crate::class::{AssignmentClass, Relation};
use crate::error::{Error, Result};
use crate::forest::{Forest, Subforest};
use crate::formula::Formula;
use crate::partition::{Partition, PiecewiseLinearFuzzySet};
use crate::truth::{ratio, Rational};

/// `ψ_c`: the conjunction along the chain `⊥ ⋈ X_σ(1) ⋈ ... ⋈ X_σ(n) ⋈ ⊤` of
/// `c`, with `<|` for strict steps and `<->` for ties. Its value-1 set is
/// exactly the downset of `c`.
pub fn chain_normal_form(class: &AssignmentClass) -> Formula {
    let items: Vec<Formula> = std::iter::once(Formula::Bot)
        .chain(class.chain_order().into_iter().map(Formula::var))
        .chain(std::iter::once(Formula::Top))
        .collect();
    Formula::conjunction(items.windows(2).zip(class.relations()).map(|(pair, rel)| {
        let (a, b) = (pair[0].clone(), pair[1].clone());
        match rel {
            Relation::Less => a.lhd(b),
            Relation::Equal => a.iff(b),
        }
    }))
}

/// Disjunction of the chain normal forms of the leaves of `sub`; its
/// value-1 set is `sub` itself. The empty subforest yields `⊥`.
pub fn axiomatize_subforest(sub: &Subforest<'_>) -> Formula {
    if sub.is_empty() {
        log::warn!("axiomatizing the empty subforest; returning bottom");
        return Formula::Bot;
    }
    Formula::disjunction(sub.leaves().into_iter().map(chain_normal_form))
}

/// `α_P`: the formula whose value-1 set is `F(P)`.
pub fn axiomatize_partition(partition: &Partition) -> Result<Formula> {
    let forest = Forest::new(partition.n())?;
    Ok(axiomatize_subforest(&partition.forest_in(&forest)?))
}

/// `ρ_n = ⋁_{i<j} (¬¬Xi ∧ ¬¬Xj) ∨ ⋁_i (Xi ∧ ⋀_{j≠i} ¬Xj)`.
pub fn ruspini_axiom(n: usize) -> Formula {
    assert!(n >= 1, "the Ruspini axiom needs at least one variable");
    let nn = |i| Formula::var(i).not().not();
    let pairs = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j)));
    let two_positive = pairs.map(|(i, j)| nn(i).and(nn(j)));
    let exactly_one = (1..=n).map(|i| {
        let others = (1..=n).filter(|&j| j != i).map(|j| Formula::var(j).not());
        Formula::conjunction(std::iter::once(Formula::var(i)).chain(others))
    });
    Formula::disjunction(two_positive.chain(exactly_one))
}

/// `τ_n = ⋀_{i<j<k} ¬(Xi ∧ Xj ∧ Xk)`; `⊤` when `n < 3`.
pub fn overlap_axiom(n: usize) -> Formula {
    let mut clauses = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                let triple = Formula::var(i).and(Formula::var(j)).and(Formula::var(k));
                clauses.push(triple.not());
            }
        }
    }
    Formula::conjunction(clauses)
}

/// Values of `X1..Xn` at which a Ruspini leaf is realized with sum 1.
///
/// A leaf with a single variable at 1 keeps its Boolean values. Otherwise the
/// intermediate blocks `b_1 < ... < b_k` with sizes `w_1..w_k` get
/// `v_i = i / Σ_j j·w_j`, which is strictly increasing, below 1 because at
/// least two variables are positive, and satisfies `Σ w_i v_i = 1`.
pub fn ruspini_values(leaf: &AssignmentClass) -> Result<Vec<Rational>> {
    if !leaf.is_ruspini_leaf() {
        return Err(Error::NotRuspini(format!("{leaf} is not a leaf of the Ruspini forest")));
    }
    let mut values = vec![Rational::zero(); leaf.n()];
    if leaf.is_root() {
        for i in leaf.one_block() {
            values[i - 1] = Rational::one();
        }
        return Ok(values);
    }
    let blocks = leaf.mid_blocks();
    let weight: usize = blocks.iter().enumerate().map(|(j, b)| (j + 1) * b.len()).sum();
    for (j, block) in blocks.iter().enumerate() {
        for &i in block {
            values[i - 1] = ratio(j + 1, weight);
        }
    }
    Ok(values)
}

/// A Ruspini step-function partition `P'` with `F(P') = sub`.
///
/// With `m` leaves (in forest order), `[0,1]` is cut into `[0,1/m)`, ...,
/// `[(m-1)/m, 1]` and on the `j`-th piece the sets take the
/// [`ruspini_values`] of the `j`-th leaf. Each set jumps at most `m - 1` times.
pub fn synthesize_partition(sub: &Subforest<'_>) -> Result<Partition> {
    if sub.is_empty() {
        return Err(Error::EmptySubforest);
    }
    if !sub.is_ruspini() {
        let offender = sub
            .classes()
            .find(|c| !c.is_in_ruspini_forest())
            .map(|c| format!("{c} lies outside the Ruspini forest"))
            .or_else(|| {
                sub.leaves()
                    .into_iter()
                    .find(|c| !c.is_ruspini_leaf())
                    .map(|c| format!("leaf {c} is not a leaf of the Ruspini forest"))
            })
            .unwrap_or_default();
        return Err(Error::NotRuspini(offender));
    }
    let leaves = sub.leaves();
    let m = leaves.len();
    let columns = leaves.iter().map(|l| ruspini_values(l)).collect::<Result<Vec<_>>>()?;
    let n = sub.forest().n();
    let sets = (0..n)
        .map(|i| {
            let mut points = vec![(Rational::zero(), columns[0][i].clone())];
            for j in 1..m {
                let (prev, next) = (&columns[j - 1][i], &columns[j][i]);
                if prev != next {
                    let x = ratio(j, m);
                    points.push((x.clone(), prev.clone()));
                    points.push((x, next.clone()));
                }
            }
            points.push((Rational::one(), columns[m - 1][i].clone()));
            PiecewiseLinearFuzzySet::new(format!("f{}", i + 1), points)
        })
        .collect::<Result<Vec<_>>>()?;
    Partition::new(sets)
}
