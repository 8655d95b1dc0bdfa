//! Side-by-side evaluation of the three characterisation theorems for a
//! partition: weak Ruspini, 2-overlapping, and both together.

use std::fmt;

use crate::class::AssignmentClass;
use crate::error::Result;
use crate::forest::Forest;
use crate::formula::Formula;
use crate::partition::Partition;
use crate::semantics::{formula_forest, is_tautology_in, proves_equiv_in, Logic};
use crate::synthesis::{axiomatize_subforest, chain_normal_form, overlap_axiom};

/// Verdicts of the three equivalent conditions of one theorem.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TheoremVerdicts {
    /// Condition on the fuzzy sets themselves.
    pub direct: bool,
    /// Condition on the forest `F(P)`.
    pub forest: bool,
    /// Provability condition on `α_P`.
    pub provable: bool,
}

impl TheoremVerdicts {
    pub fn consistent(&self) -> bool {
        self.direct == self.forest && self.forest == self.provable
    }

    pub fn holds(&self) -> bool {
        self.consistent() && self.direct
    }
}

#[derive(Clone, Debug)]
pub struct AnalysisReport {
    pub n: usize,
    /// Every class realized at some point of `[0,1]`.
    pub realized: Vec<AssignmentClass>,
    /// Maximal elements of `F(P)`.
    pub leaves: Vec<AssignmentClass>,
    pub forest_size: usize,
    pub is_exact_ruspini: bool,
    pub is_weak_ruspini: bool,
    pub is_2_overlapping: bool,
    pub alpha_p: Formula,
    pub weak_ruspini: TheoremVerdicts,
    pub overlap: TheoremVerdicts,
    pub overlap_weak_ruspini: TheoremVerdicts,
    /// `⊢_G4 α_P → τ_n` agrees with `⊢ α_P → τ_n`.
    pub g4_ginf_agree: bool,
}

impl AnalysisReport {
    pub fn all_consistent(&self) -> bool {
        self.weak_ruspini.consistent()
            && self.overlap.consistent()
            && self.overlap_weak_ruspini.consistent()
            && self.g4_ginf_agree
    }
}

pub fn analyze(partition: &Partition) -> Result<AnalysisReport> {
    let n = partition.n();
    let forest = Forest::new(n)?;
    let realized: Vec<AssignmentClass> = partition.realized_classes()?.into_iter().collect();
    let fp = forest.downset(&realized)?;
    let alpha = axiomatize_subforest(&fp);
    let f_alpha = formula_forest(&alpha, &forest)?;
    let ruspini = forest.ruspini();
    let overlap = forest.overlap2();
    let tau = overlap_axiom(n);
    let g4 = Logic::Finite(4);

    // weak Ruspini read through comparison maps: every realized class lies
    // below some realized leaf of the Ruspini forest
    let mut direct_weak = true;
    for mu in &realized {
        let mut covered = false;
        for nu in &realized {
            if nu.is_ruspini_leaf() && mu.leq(nu)? {
                covered = true;
                break;
            }
        }
        direct_weak &= covered;
    }
    let ruspini_leaves: Vec<usize> = ruspini.leaf_ids().collect();
    let normal_form = Formula::disjunction(
        f_alpha
            .leaf_ids()
            .filter(|id| ruspini_leaves.binary_search(id).is_ok())
            .map(|id| chain_normal_form(forest.node(id))),
    );
    let weak_ruspini = TheoremVerdicts {
        direct: direct_weak,
        forest: fp.is_ruspini(),
        provable: proves_equiv_in(&alpha, &normal_form, &forest, Logic::Infinite)?,
    };

    let bounded = alpha.clone().implies(tau.clone());
    let direct_overlap = partition.is_2_overlapping()?;
    let overlap_verdicts = TheoremVerdicts {
        direct: direct_overlap,
        forest: fp.is_subset(&overlap),
        provable: is_tautology_in(&bounded, &forest, g4)?,
    };
    let g4_ginf_agree = overlap_verdicts.provable == is_tautology_in(&bounded, &forest, Logic::Infinite)?;

    let combined = alpha.clone().iff(normal_form).and(bounded);
    let overlap_weak_ruspini = TheoremVerdicts {
        direct: direct_weak && direct_overlap,
        forest: fp.is_ruspini() && fp.is_subset(&overlap),
        provable: is_tautology_in(&combined, &forest, g4)?,
    };

    Ok(AnalysisReport {
        n,
        leaves: fp.leaves().into_iter().cloned().collect(),
        forest_size: fp.len(),
        realized,
        is_exact_ruspini: partition.is_exact_ruspini()?,
        is_weak_ruspini: weak_ruspini.forest,
        is_2_overlapping: direct_overlap,
        alpha_p: alpha,
        weak_ruspini,
        overlap: overlap_verdicts,
        overlap_weak_ruspini,
        g4_ginf_agree,
    })
}

fn verdict_line(f: &mut fmt::Formatter<'_>, name: &str, v: &TheoremVerdicts) -> fmt::Result {
    writeln!(
        f,
        "{name:<28} direct={} forest={} provable={}{}",
        v.direct,
        v.forest,
        v.provable,
        if v.consistent() { "" } else { "  INCONSISTENT" }
    )
}

impl fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "fuzzy sets: {}", self.n)?;
        writeln!(f, "realized classes: {}", self.realized.len())?;
        for c in &self.realized {
            writeln!(f, "  {c}")?;
        }
        writeln!(f, "F(P): {} nodes, {} leaves", self.forest_size, self.leaves.len())?;
        for c in &self.leaves {
            writeln!(f, "  {c}")?;
        }
        writeln!(f, "exact Ruspini: {}", self.is_exact_ruspini)?;
        writeln!(f, "weak Ruspini: {}", self.is_weak_ruspini)?;
        writeln!(f, "2-overlapping: {}", self.is_2_overlapping)?;
        writeln!(f, "alpha_P: {}", self.alpha_p)?;
        verdict_line(f, "weak Ruspini", &self.weak_ruspini)?;
        verdict_line(f, "2-overlapping", &self.overlap)?;
        verdict_line(f, "2-overlapping weak Ruspini", &self.overlap_weak_ruspini)?;
        writeln!(f, "G4/Ginf agreement on alpha_P -> tau_n: {}", self.g4_ginf_agree)
    }
}
