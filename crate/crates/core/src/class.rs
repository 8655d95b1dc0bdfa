//! Assignment classes: the order/equality pattern of `X1..Xn` between 0 and 1.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::truth::{Assignment, TruthValue};

const ONE: u16 = u16::MAX;

/// Relation between consecutive entries of the chain
/// `0 ≼ X_σ(1) ≼ ... ≼ X_σ(n) ≼ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Less,
    Equal,
}

/// Equivalence class of assignments to `X1..Xn` sharing the same pattern of
/// zeros, ones, and strictly increasing intermediate blocks.
///
/// Stored as one level per variable: `0` for the zero block, `1..=k` for the
/// `k` intermediate blocks in increasing order, and a sentinel for the one
/// block. Every level in `1..=k` is used, so equal classes have equal fields.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AssignmentClass {
    mids: u16,
    levels: Box<[u16]>,
}

impl AssignmentClass {
    /// Builds a class from its blocks (1-based variable indices).
    pub fn from_blocks(n: usize, zero: &[usize], mid: &[Vec<usize>], one: &[usize]) -> Result<Self> {
        if n == 0 || n >= ONE as usize {
            return Err(Error::InvalidClass(format!("unsupported variable count {n}")));
        }
        let mut levels = vec![None; n];
        let mut place = |vars: &[usize], level: u16| -> Result<()> {
            for &v in vars {
                let slot = v
                    .checked_sub(1)
                    .and_then(|i| levels.get_mut(i))
                    .ok_or(Error::IndexOutOfRange { index: v, n })?;
                if slot.replace(level).is_some() {
                    return Err(Error::InvalidClass(format!("X{v} appears in two blocks")));
                }
            }
            Ok(())
        };
        place(zero, 0)?;
        for (k, block) in mid.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidClass("intermediate blocks must be nonempty".into()));
            }
            place(block, k as u16 + 1)?;
        }
        place(one, ONE)?;
        let levels = levels
            .into_iter()
            .enumerate()
            .map(|(i, l)| l.ok_or_else(|| Error::InvalidClass(format!("X{} is in no block", i + 1))))
            .collect::<Result<Vec<_>>>()?;
        Ok(AssignmentClass { mids: mid.len() as u16, levels: levels.into() })
    }

    /// The class of the assignment `X(i+1) ↦ values[i]`.
    pub fn of_values(values: &[TruthValue]) -> Result<Self> {
        let zero = TruthValue::zero();
        let one = TruthValue::one();
        let refs: Vec<&TruthValue> = values.iter().collect();
        Self::of_chain_values(&refs, &zero, &one)
    }

    pub fn of_assignment(assignment: &Assignment) -> Result<Self> {
        Self::of_values(assignment.values())
    }

    /// Classifies values from any chain with the given bottom and top.
    pub(crate) fn of_chain_values<T: Ord + Copy>(values: &[T], bot: T, top: T) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyValues);
        }
        if values.len() >= ONE as usize {
            return Err(Error::InvalidClass(format!("unsupported variable count {}", values.len())));
        }
        let mids: Vec<T> = values
            .iter()
            .copied()
            .filter(|&v| v != bot && v != top)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let levels = values
            .iter()
            .map(|&v| {
                if v == bot {
                    0
                } else if v == top {
                    ONE
                } else {
                    mids.binary_search(&v).expect("collected above") as u16 + 1
                }
            })
            .collect();
        Ok(AssignmentClass { mids: mids.len() as u16, levels })
    }

    pub fn n(&self) -> usize {
        self.levels.len()
    }

    /// Number of intermediate blocks.
    pub fn mid_count(&self) -> usize {
        self.mids as usize
    }

    fn vars_at(&self, level: u16) -> Vec<usize> {
        (1..=self.n()).filter(|&i| self.levels[i - 1] == level).collect()
    }

    pub fn zero_block(&self) -> Vec<usize> {
        self.vars_at(0)
    }

    pub fn one_block(&self) -> Vec<usize> {
        self.vars_at(ONE)
    }

    pub fn mid_blocks(&self) -> Vec<Vec<usize>> {
        (1..=self.mids).map(|l| self.vars_at(l)).collect()
    }

    /// Number of variables with a nonzero value.
    pub fn positive_count(&self) -> usize {
        self.levels.iter().filter(|&&l| l != 0).count()
    }

    fn one_count(&self) -> usize {
        self.levels.iter().filter(|&&l| l == ONE).count()
    }

    /// Integer witness order-isomorphic to [`Self::representative`]: the zero
    /// block maps to 0, the i-th intermediate block to i, and the one block
    /// to `k + 1`. Returns the values together with that top.
    pub(crate) fn ranks(&self) -> (Vec<u16>, u16) {
        let top = self.mids + 1;
        let ranks = self.levels.iter().map(|&l| if l == ONE { top } else { l }).collect();
        (ranks, top)
    }

    /// Canonical witness: zero block ↦ 0, one block ↦ 1, the i-th of `k`
    /// intermediate blocks ↦ `i/(k+1)`.
    pub fn representative(&self) -> Assignment {
        let (ranks, top) = self.ranks();
        Assignment::new(
            ranks
                .into_iter()
                .map(|r| TruthValue::ratio(r as usize, top as usize))
                .collect(),
        )
    }

    /// Immediate predecessor: the top intermediate block collapsed to 1.
    pub fn parent(&self) -> Option<AssignmentClass> {
        if self.mids == 0 {
            return None;
        }
        let top = self.mids;
        let levels = self.levels.iter().map(|&l| if l == top { ONE } else { l }).collect();
        Some(AssignmentClass { mids: top - 1, levels })
    }

    /// Immediate successors: a nonempty part of the one block split off as a
    /// new topmost intermediate block.
    pub fn children(&self) -> Vec<AssignmentClass> {
        let ones: Vec<usize> = (0..self.n()).filter(|&i| self.levels[i] == ONE).collect();
        let new_level = self.mids + 1;
        (1u64..(1u64 << ones.len()))
            .map(|mask| {
                let mut levels = self.levels.clone();
                for (bit, &i) in ones.iter().enumerate() {
                    if mask & (1 << bit) != 0 {
                        levels[i] = new_level;
                    }
                }
                AssignmentClass { mids: new_level, levels }
            })
            .collect()
    }

    /// `self ≤ other` in the forest order: `self` is `other` or one of its
    /// ancestors, obtained by collapsing a top segment of `other`'s chain to 1.
    pub fn leq(&self, other: &AssignmentClass) -> Result<bool> {
        if self.n() != other.n() {
            return Err(Error::ArityMismatch { expected: self.n(), found: other.n() });
        }
        if self.mids > other.mids {
            return Ok(false);
        }
        let mut cur = other.clone();
        while cur.mids > self.mids {
            cur = cur.parent().expect("mids > 0");
        }
        Ok(&cur == self)
    }

    /// Height of the chain from the root of this class's tree to the class.
    pub fn depth(&self) -> usize {
        self.mids as usize + 1
    }

    /// Root of a tree: a Boolean class.
    pub fn is_root(&self) -> bool {
        self.mids == 0
    }

    /// Leaf of the full forest: no variable is 1.
    pub fn is_leaf(&self) -> bool {
        self.one_count() == 0
    }

    pub fn is_all_zero(&self) -> bool {
        self.levels.iter().all(|&l| l == 0)
    }

    /// Member of the Ruspini forest: neither the all-zero class nor a leaf of a
    /// height-2 tree (a single variable strictly between 0 and 1, the rest 0).
    pub fn is_in_ruspini_forest(&self) -> bool {
        let lone_mid = self.mids == 1 && self.positive_count() == 1 && self.one_count() == 0;
        !self.is_all_zero() && !lone_mid
    }

    /// Leaf of the Ruspini forest: either exactly one variable is 1 and the
    /// rest 0, or nothing is 1 and at least two variables are positive.
    pub fn is_ruspini_leaf(&self) -> bool {
        let ones = self.one_count();
        (self.mids == 0 && ones == 1) || (ones == 0 && self.positive_count() >= 2)
    }

    /// Member of the 2-overlapping forest: at most two positive variables.
    pub fn is_in_overlap_forest(&self) -> bool {
        self.positive_count() <= 2
    }

    /// Member of the forest truncated to height `t - 1` (the `t`-valued forest).
    pub fn is_in_truncated(&self, t: usize) -> bool {
        self.depth() < t
    }

    /// Variables in chain order: zero block, intermediate blocks, one block,
    /// each block ascending.
    pub fn chain_order(&self) -> Vec<usize> {
        let mut vars: Vec<usize> = (1..=self.n()).collect();
        vars.sort_by_key(|&i| (self.levels[i - 1], i));
        vars
    }

    /// The `n + 1` relations of `0 ≼₀ X_σ(1) ≼₁ ... ≼ₙ 1` along [`Self::chain_order`].
    pub fn relations(&self) -> Vec<Relation> {
        let chain: Vec<u16> = std::iter::once(0)
            .chain(self.chain_order().into_iter().map(|i| self.levels[i - 1]))
            .chain(std::iter::once(ONE))
            .collect();
        chain
            .windows(2)
            .map(|w| if w[0] == w[1] { Relation::Equal } else { Relation::Less })
            .collect()
    }

    /// Chain label such as `0=X1<X2<1`.
    pub fn label(&self) -> String {
        let mut out = String::from("0");
        for (i, rel) in self.chain_order().into_iter().zip(self.relations()) {
            out.push(if rel == Relation::Equal { '=' } else { '<' });
            out.push_str(&format!("X{i}"));
        }
        let last = *self.relations().last().expect("n + 1 relations");
        out.push(if last == Relation::Equal { '=' } else { '<' });
        out.push('1');
        out
    }
}

impl fmt::Display for AssignmentClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}
