//! Gödel-logic formulas: AST, evaluation and printing.
//!
//! Evaluation is over any totally ordered carrier with a bottom and a top.
//! Conjunction is the minimum, disjunction the maximum, implication the
//! residuum (`top` when the antecedent is below or equal to the consequent,
//! the consequent otherwise) and negation is implication into bottom.
//! `<->` and `<|` are evaluated through their expansions.

use std::fmt;

use crate::error::{Error, Result};
use crate::truth::{Assignment, TruthValue};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    /// Propositional variable `X{index}`, `index >= 1`.
    Var(usize),
    Bot,
    Top,
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Not(Box<Formula>),
    /// `a <-> b`, shorthand for `(a -> b) & (b -> a)`.
    Iff(Box<Formula>, Box<Formula>),
    /// `a <| b`, shorthand for `(b -> a) -> b`: value 1 exactly when
    /// `a < b` or `a = b = 1`.
    Lhd(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn var(index: usize) -> Self {
        assert!(index >= 1, "variables are numbered from 1");
        Formula::Var(index)
    }

    pub fn and(self, other: Formula) -> Self {
        Formula::And(Box::new(self), Box::new(other))
    }

    pub fn or(self, other: Formula) -> Self {
        Formula::Or(Box::new(self), Box::new(other))
    }

    pub fn implies(self, other: Formula) -> Self {
        Formula::Implies(Box::new(self), Box::new(other))
    }

    pub fn iff(self, other: Formula) -> Self {
        Formula::Iff(Box::new(self), Box::new(other))
    }

    pub fn lhd(self, other: Formula) -> Self {
        Formula::Lhd(Box::new(self), Box::new(other))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> Self {
        Formula::Not(Box::new(self))
    }

    /// Left-nested conjunction; `Top` when empty.
    pub fn conjunction<I: IntoIterator<Item = Formula>>(items: I) -> Self {
        items.into_iter().reduce(Formula::and).unwrap_or(Formula::Top)
    }

    /// Left-nested disjunction; `Bot` when empty.
    pub fn disjunction<I: IntoIterator<Item = Formula>>(items: I) -> Self {
        items.into_iter().reduce(Formula::or).unwrap_or(Formula::Bot)
    }

    /// Largest variable index occurring in the formula (0 for closed formulas).
    pub fn arity(&self) -> usize {
        match self {
            Formula::Var(i) => *i,
            Formula::Bot | Formula::Top => 0,
            Formula::Not(a) => a.arity(),
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Implies(a, b)
            | Formula::Iff(a, b)
            | Formula::Lhd(a, b) => a.arity().max(b.arity()),
        }
    }

    /// Number of AST nodes.
    pub fn size(&self) -> usize {
        match self {
            Formula::Var(_) | Formula::Bot | Formula::Top => 1,
            Formula::Not(a) => 1 + a.size(),
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Implies(a, b)
            | Formula::Iff(a, b)
            | Formula::Lhd(a, b) => 1 + a.size() + b.size(),
        }
    }

    /// Rewrites every `<->` and `<|` into the primitive connectives.
    pub fn expand(&self) -> Formula {
        match self {
            Formula::Var(_) | Formula::Bot | Formula::Top => self.clone(),
            Formula::Not(a) => a.expand().not(),
            Formula::And(a, b) => a.expand().and(b.expand()),
            Formula::Or(a, b) => a.expand().or(b.expand()),
            Formula::Implies(a, b) => a.expand().implies(b.expand()),
            Formula::Iff(a, b) => {
                let (a, b) = (a.expand(), b.expand());
                a.clone().implies(b.clone()).and(b.implies(a))
            }
            Formula::Lhd(a, b) => {
                let (a, b) = (a.expand(), b.expand());
                b.clone().implies(a).implies(b)
            }
        }
    }

    /// Gödel value of the formula under `assignment`.
    pub fn eval(&self, assignment: &Assignment) -> Result<TruthValue> {
        let values = assignment.values();
        self.check_arity(values.len())?;
        let zero = TruthValue::zero();
        let one = TruthValue::one();
        let refs: Vec<&TruthValue> = values.iter().collect();
        Ok(self.eval_ordered(&refs, &zero, &one).clone())
    }

    pub(crate) fn check_arity(&self, len: usize) -> Result<()> {
        let arity = self.arity();
        if arity > len {
            return Err(Error::VariableOutOfRange { index: arity, len });
        }
        Ok(())
    }

    /// Evaluates over an arbitrary chain. `values[i]` is the value of
    /// `X(i+1)`; the caller guarantees `arity() <= values.len()` and that every
    /// value lies between `bot` and `top`.
    pub(crate) fn eval_ordered<T: Ord + Copy>(&self, values: &[T], bot: T, top: T) -> T {
        let imp = |x: T, y: T| if x <= y { top } else { y };
        match self {
            Formula::Var(i) => values[i - 1],
            Formula::Bot => bot,
            Formula::Top => top,
            Formula::And(a, b) => {
                a.eval_ordered(values, bot, top).min(b.eval_ordered(values, bot, top))
            }
            Formula::Or(a, b) => {
                a.eval_ordered(values, bot, top).max(b.eval_ordered(values, bot, top))
            }
            Formula::Implies(a, b) => imp(
                a.eval_ordered(values, bot, top),
                b.eval_ordered(values, bot, top),
            ),
            Formula::Not(a) => imp(a.eval_ordered(values, bot, top), bot),
            Formula::Iff(a, b) => {
                let (x, y) = (a.eval_ordered(values, bot, top), b.eval_ordered(values, bot, top));
                imp(x, y).min(imp(y, x))
            }
            Formula::Lhd(a, b) => {
                let (x, y) = (a.eval_ordered(values, bot, top), b.eval_ordered(values, bot, top));
                imp(imp(y, x), y)
            }
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Implies(..) | Formula::Iff(..) | Formula::Lhd(..) => 1,
            Formula::Or(..) => 2,
            Formula::And(..) => 3,
            Formula::Not(_) => 4,
            Formula::Var(_) | Formula::Bot | Formula::Top => 5,
        }
    }
}

fn same_connective(a: &Formula, b: &Formula) -> bool {
    std::mem::discriminant(a) == std::mem::discriminant(b)
}

fn write_operand(f: &mut fmt::Formatter<'_>, sub: &Formula, parens: bool) -> fmt::Result {
    if parens {
        write!(f, "({sub})")
    } else {
        write!(f, "{sub}")
    }
}

/// Prints with the fewest parentheses that still parse back to the same tree:
/// `~` binds tightest, then `&`, then `|` (both left-associative), then the
/// right-associative `->`, `<->`, `<|`, which may not be mixed unparenthesised.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Var(i) => write!(f, "X{i}"),
            Formula::Bot => f.write_str("0"),
            Formula::Top => f.write_str("1"),
            Formula::Not(a) => {
                f.write_str("~")?;
                write_operand(f, a, a.precedence() < 4)
            }
            Formula::And(a, b) | Formula::Or(a, b) => {
                let p = self.precedence();
                write_operand(f, a, a.precedence() < p)?;
                f.write_str(if p == 3 { " & " } else { " | " })?;
                write_operand(f, b, b.precedence() <= p)
            }
            Formula::Implies(a, b) | Formula::Iff(a, b) | Formula::Lhd(a, b) => {
                write_operand(f, a, a.precedence() <= 1)?;
                f.write_str(match self {
                    Formula::Implies(..) => " -> ",
                    Formula::Iff(..) => " <-> ",
                    _ => " <| ",
                })?;
                write_operand(f, b, b.precedence() == 1 && !same_connective(self, b))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> Formula {
        Formula::var(i)
    }

    fn assign(values: &[(usize, usize)]) -> Assignment {
        Assignment::new(values.iter().map(|&(p, q)| TruthValue::ratio(p, q)).collect())
    }

    #[test]
    fn implication_takes_consequent_when_antecedent_is_larger() {
        let v = x(1).implies(x(2)).eval(&assign(&[(1, 2), (1, 3)])).unwrap();
        assert_eq!(v, TruthValue::ratio(1, 3));
        let v = x(2).implies(x(1)).eval(&assign(&[(1, 2), (1, 3)])).unwrap();
        assert!(v.is_one());
    }

    #[test]
    fn double_negation_is_crisp() {
        let v = x(1).not().not().eval(&assign(&[(1, 4)])).unwrap();
        assert!(v.is_one());
        let v = x(1).not().not().eval(&assign(&[(0, 1)])).unwrap();
        assert!(v.is_zero());
    }

    #[test]
    fn lhd_is_strict_order_or_both_one() {
        let f = x(1).lhd(x(2));
        assert!(f.eval(&assign(&[(1, 1), (1, 1)])).unwrap().is_one());
        assert_eq!(f.eval(&assign(&[(1, 2), (1, 2)])).unwrap(), TruthValue::ratio(1, 2));
        assert!(f.eval(&assign(&[(1, 3), (1, 2)])).unwrap().is_one());
        assert_eq!(f.eval(&assign(&[(2, 3), (1, 2)])).unwrap(), TruthValue::ratio(1, 2));
    }

    #[test]
    fn missing_variable_is_an_error() {
        let err = x(3).eval(&assign(&[(0, 1)])).unwrap_err();
        assert!(matches!(err, Error::VariableOutOfRange { index: 3, len: 1 }));
    }

    #[test]
    fn prints_minimal_parentheses() {
        assert_eq!(x(1).and(x(2)).not().to_string(), "~(X1 & X2)");
        assert_eq!(x(1).and(x(2).or(x(3))).to_string(), "X1 & (X2 | X3)");
        assert_eq!(x(1).and(x(2)).or(x(3)).to_string(), "X1 & X2 | X3");
        assert_eq!(Formula::Bot.to_string(), "0");
        assert_eq!(x(1).implies(x(2).implies(x(3))).to_string(), "X1 -> X2 -> X3");
        assert_eq!(x(1).implies(x(2)).implies(x(3)).to_string(), "(X1 -> X2) -> X3");
        assert_eq!(x(1).iff(x(2).implies(x(3))).to_string(), "X1 <-> (X2 -> X3)");
        assert_eq!(x(1).and(x(2).and(x(3))).to_string(), "X1 & (X2 & X3)");
        assert_eq!(x(1).not().not().to_string(), "~~X1");
    }

    #[test]
    fn big_connectives_have_units() {
        assert_eq!(Formula::conjunction(vec![]), Formula::Top);
        assert_eq!(Formula::disjunction(vec![]), Formula::Bot);
        assert_eq!(Formula::disjunction(vec![x(1), x(2), x(3)]), x(1).or(x(2)).or(x(3)));
    }

    #[test]
    fn expansion_removes_sugar() {
        let f = x(1).iff(x(2).lhd(x(1)));
        let e = f.expand();
        assert_eq!(e.expand(), e);
        assert_eq!(e.to_string(), "(X1 -> (X1 -> X2) -> X1) & (((X1 -> X2) -> X1) -> X1)");
    }
}
