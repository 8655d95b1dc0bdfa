//! Value-1 subforests of formulas and tautology checking in `G∞` and `G_t`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::forest::{Forest, Subforest};
use crate::formula::Formula;
use crate::truth::{Assignment, TruthValue};

/// Maximum number of assignments the grid oracle will enumerate.
pub const GRID_BUDGET: u64 = 1_000_000;

/// Gödel logic over `[0,1]` or over the `t`-element chain `{0, 1/(t-1), ..., 1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Logic {
    Infinite,
    Finite(usize),
}

impl Logic {
    pub fn finite(t: usize) -> Result<Logic> {
        if t < 2 {
            return Err(Error::InvalidTruthCount(t));
        }
        Ok(Logic::Finite(t))
    }

    fn validate(self) -> Result<Logic> {
        match self {
            Logic::Finite(t) => Logic::finite(t),
            Logic::Infinite => Ok(self),
        }
    }
}

impl FromStr for Logic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Logic> {
        let lower = s.trim().to_ascii_lowercase();
        if lower == "ginf" {
            return Ok(Logic::Infinite);
        }
        lower
            .strip_prefix('g')
            .and_then(|t| t.parse::<usize>().ok())
            .ok_or_else(|| Error::UnknownLogic(s.to_string()))
            .and_then(Logic::finite)
    }
}

impl fmt::Display for Logic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Logic::Infinite => f.write_str("ginf"),
            Logic::Finite(t) => write!(f, "g{t}"),
        }
    }
}

/// `F_α`: the classes on which `formula` takes value 1.
///
/// Each class is evaluated on its integer-scaled canonical witness (block
/// `i` of `k` at `i`, top at `k + 1`), which is order-isomorphic to the
/// rational representative `i/(k+1)`.
pub fn formula_forest<'f>(formula: &Formula, forest: &'f Forest) -> Result<Subforest<'f>> {
    if formula.arity() > forest.n() {
        return Err(Error::ArityMismatch { expected: forest.n(), found: formula.arity() });
    }
    let members = forest
        .nodes()
        .iter()
        .map(|c| {
            let (ranks, top) = c.ranks();
            formula.eval_ordered(&ranks, 0, top) == top
        })
        .collect();
    let sub = Subforest::from_flags(forest, members);
    assert!(sub.is_downward_closed(), "value-1 set of {formula} is not downward closed");
    Ok(sub)
}

/// The part of the forest that matters for `logic`: everything for `G∞`,
/// the truncation to height `t - 1` for `G_t`.
pub fn relevant_part(forest: &Forest, logic: Logic) -> Result<Subforest<'_>> {
    Ok(match logic.validate()? {
        Logic::Infinite => forest.full(),
        Logic::Finite(t) => forest.truncated(t),
    })
}

/// Tautology test over `X1..Xn` using an already built forest.
pub fn is_tautology_in(formula: &Formula, forest: &Forest, logic: Logic) -> Result<bool> {
    let value_one = formula_forest(formula, forest)?;
    Ok(relevant_part(forest, logic)?.is_subset(&value_one))
}

/// Whether `formula` (over at most `n` variables) is a tautology of `logic`;
/// by completeness, whether it is provable.
pub fn is_tautology(formula: &Formula, n: usize, logic: Logic) -> Result<bool> {
    is_tautology_in(formula, &Forest::new(n)?, logic)
}

pub fn proves_equiv_in(a: &Formula, b: &Formula, forest: &Forest, logic: Logic) -> Result<bool> {
    let part = relevant_part(forest, logic)?;
    let fa = formula_forest(a, forest)?.meet(&part)?;
    let fb = formula_forest(b, forest)?.meet(&part)?;
    Ok(fa == fb)
}

pub fn proves_implies_in(a: &Formula, b: &Formula, forest: &Forest, logic: Logic) -> Result<bool> {
    let part = relevant_part(forest, logic)?;
    let fa = formula_forest(a, forest)?.meet(&part)?;
    let fb = formula_forest(b, forest)?.meet(&part)?;
    Ok(fa.is_subset(&fb))
}

/// `⊢ a ↔ b` in `logic`, restricted to `X1..Xn`.
pub fn proves_equiv(a: &Formula, b: &Formula, n: usize, logic: Logic) -> Result<bool> {
    proves_equiv_in(a, b, &Forest::new(n)?, logic)
}

/// `⊢ a → b` in `logic`, restricted to `X1..Xn`.
pub fn proves_implies(a: &Formula, b: &Formula, n: usize, logic: Logic) -> Result<bool> {
    proves_implies_in(a, b, &Forest::new(n)?, logic)
}

/// Brute-force `G_t` tautology check: evaluates `formula` on every assignment
/// of `X1..Xn` into `{0, 1/(t-1), ..., 1}` with exact rationals.
pub fn grid_tautology_oracle(formula: &Formula, n: usize, t: usize) -> Result<bool> {
    if t < 2 {
        return Err(Error::InvalidTruthCount(t));
    }
    formula.check_arity(n)?;
    let total = (t as u64).checked_pow(n as u32).filter(|&c| c <= GRID_BUDGET);
    if total.is_none() {
        return Err(Error::GridBudget { t, n, budget: GRID_BUDGET });
    }
    let grid: Vec<TruthValue> = (0..t).map(|k| TruthValue::ratio(k, t - 1)).collect();
    let mut digits = vec![0usize; n];
    loop {
        let assignment = Assignment::new(digits.iter().map(|&d| grid[d].clone()).collect());
        if !formula.eval(&assignment)?.is_one() {
            return Ok(false);
        }
        let Some(pos) = digits.iter().position(|&d| d + 1 < t) else {
            return Ok(true);
        };
        digits[pos] += 1;
        digits[..pos].iter_mut().for_each(|d| *d = 0);
    }
}

/// `Lin_t` instantiated with `X1..Xt`:
/// `X1 ∨ (X1 → X2) ∨ (X1 ∧ X2 → X3) ∨ ... ∨ (X1 ∧ ... ∧ X(t-1) → Xt)`.
pub fn lin_axiom(t: usize) -> Formula {
    assert!(t >= 1);
    Formula::disjunction((1..=t).map(|k| {
        if k == 1 {
            Formula::var(1)
        } else {
            Formula::conjunction((1..k).map(Formula::var)).implies(Formula::var(k))
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_formula;

    fn p(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn parses_logic_names() {
        assert_eq!("ginf".parse::<Logic>().unwrap(), Logic::Infinite);
        assert_eq!("G4".parse::<Logic>().unwrap(), Logic::Finite(4));
        assert!("g1".parse::<Logic>().is_err());
        assert!("lukasiewicz".parse::<Logic>().is_err());
        assert_eq!(Logic::Finite(3).to_string(), "g3");
    }

    #[test]
    fn constants() {
        let f = Forest::new(2).unwrap();
        assert_eq!(formula_forest(&Formula::Top, &f).unwrap(), f.full());
        assert!(formula_forest(&Formula::Bot, &f).unwrap().is_empty());
        assert!(formula_forest(&p("X3"), &f).is_err());
    }

    #[test]
    fn generators_are_variable_forests() {
        for n in 1..=3 {
            let f = Forest::new(n).unwrap();
            for i in 1..=n {
                assert_eq!(formula_forest(&Formula::var(i), &f).unwrap(), f.generating(i).unwrap());
            }
        }
        let f = Forest::new(2).unwrap();
        let chi = |i| f.generating(i).unwrap();
        assert_eq!(chi(1).implies(&chi(2)).unwrap(), formula_forest(&p("X1 -> X2"), &f).unwrap());
    }

    #[test]
    fn prelinearity_and_excluded_middle() {
        for n in 2..=4 {
            assert!(is_tautology(&p("(X1 -> X2) | (X2 -> X1)"), n, Logic::Infinite).unwrap());
        }
        assert!(!is_tautology(&p("X1 | ~X1"), 1, Logic::Infinite).unwrap());
        assert!(is_tautology(&p("X1 | ~X1"), 1, Logic::Finite(2)).unwrap());
    }

    #[test]
    fn lin_axioms_separate_finite_valued_logics() {
        for t in 2..=5 {
            let lin = lin_axiom(t);
            assert!(is_tautology(&lin, t, Logic::Finite(t)).unwrap(), "Lin_{t} in G{t}");
            assert!(!is_tautology(&lin, t, Logic::Finite(t + 1)).unwrap());
            assert!(!is_tautology(&lin, t, Logic::Infinite).unwrap());
            assert!(grid_tautology_oracle(&lin, t, t).unwrap());
        }
        assert_eq!(lin_axiom(3).to_string(), "X1 | (X1 -> X2) | (X1 & X2 -> X3)");
    }

    #[test]
    fn oracle_examples() {
        let f = p("~~X1 -> X1");
        assert!(grid_tautology_oracle(&f, 1, 2).unwrap());
        assert!(!grid_tautology_oracle(&f, 1, 3).unwrap());
        for t in 2..=6 {
            assert!(grid_tautology_oracle(&Formula::Top, 2, t).unwrap());
        }
        assert!(matches!(grid_tautology_oracle(&f, 21, 2), Err(Error::GridBudget { .. })));
        assert!(grid_tautology_oracle(&f, 1, 1).is_err());
    }

    #[test]
    fn equivalence_and_implication() {
        let a = p("X1 <-> X2");
        let b = p("(X1 -> X2) & (X2 -> X1)");
        assert!(proves_equiv(&a, &b, 2, Logic::Infinite).unwrap());
        assert!(proves_implies(&p("X1 & X2"), &p("X1"), 2, Logic::Infinite).unwrap());
        assert!(!proves_implies(&p("X1"), &p("X1 & X2"), 2, Logic::Infinite).unwrap());
        // ¬¬X1 and X1 agree in Boolean logic only
        assert!(proves_equiv(&p("~~X1"), &p("X1"), 1, Logic::Finite(2)).unwrap());
        assert!(!proves_equiv(&p("~~X1"), &p("X1"), 1, Logic::Finite(3)).unwrap());
    }
}
