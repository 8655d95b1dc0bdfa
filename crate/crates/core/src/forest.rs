//! The forest of all assignment classes over `n` variables and the Gödel
//! algebra of its subforests.

use std::collections::HashMap;
use std::fmt;

use crate::class::AssignmentClass;
use crate::error::{Error, Result};

/// Largest `n` accepted by [`Forest::new`]; the node count grows like the
/// ordered Bell numbers.
pub const MAX_FOREST_VARS: usize = 8;

/// All assignment classes over `X1..Xn` with parent/child links.
///
/// Nodes are stored breadth-first from the roots, so every parent precedes
/// its children and node positions are a function of `n` alone.
pub struct Forest {
    n: usize,
    nodes: Vec<AssignmentClass>,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    roots: Vec<usize>,
    index: HashMap<AssignmentClass, usize>,
}

impl Forest {
    pub fn new(n: usize) -> Result<Forest> {
        if n == 0 || n > MAX_FOREST_VARS {
            return Err(Error::ForestTooLarge { n, max: MAX_FOREST_VARS });
        }
        let mut nodes = Vec::new();
        let mut parent = Vec::new();
        let mut roots = Vec::new();
        for mask in 0u32..(1 << n) {
            let one: Vec<usize> = (1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
            let zero: Vec<usize> = (1..=n).filter(|i| mask & (1 << (i - 1)) == 0).collect();
            roots.push(nodes.len());
            nodes.push(AssignmentClass::from_blocks(n, &zero, &[], &one)?);
            parent.push(None);
        }
        let mut children = Vec::new();
        let mut next = 0;
        while next < nodes.len() {
            let kids = nodes[next].children();
            let first = nodes.len();
            parent.extend(std::iter::repeat_n(Some(next), kids.len()));
            nodes.extend(kids);
            children.push((first..nodes.len()).collect());
            next += 1;
        }
        let index = nodes.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        Ok(Forest { n, nodes, parent, children, roots, index })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[AssignmentClass] {
        &self.nodes
    }

    pub fn node(&self, id: usize) -> &AssignmentClass {
        &self.nodes[id]
    }

    pub fn id_of(&self, class: &AssignmentClass) -> Option<usize> {
        self.index.get(class).copied()
    }

    pub fn parent_of(&self, id: usize) -> Option<usize> {
        self.parent[id]
    }

    pub fn children_of(&self, id: usize) -> &[usize] {
        &self.children[id]
    }

    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    /// Maximal elements: classes where no variable is 1.
    pub fn leaves(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&i| self.children[i].is_empty())
    }

    /// Root of the tree containing `id`.
    pub fn root_of(&self, mut id: usize) -> usize {
        while let Some(p) = self.parent[id] {
            id = p;
        }
        id
    }

    /// Height of the forest: the longest root-to-leaf chain.
    pub fn height(&self) -> usize {
        self.nodes.iter().map(AssignmentClass::depth).max().unwrap_or(0)
    }

    /// Height of each tree, indexed like [`Self::roots`].
    pub fn tree_heights(&self) -> Vec<usize> {
        let mut heights: HashMap<usize, usize> = HashMap::new();
        for (id, c) in self.nodes.iter().enumerate() {
            let h = heights.entry(self.root_of(id)).or_default();
            *h = (*h).max(c.depth());
        }
        self.roots.iter().map(|r| heights[r]).collect()
    }

    pub fn empty(&self) -> Subforest<'_> {
        Subforest { forest: self, members: vec![false; self.len()] }
    }

    pub fn full(&self) -> Subforest<'_> {
        Subforest { forest: self, members: vec![true; self.len()] }
    }

    /// Subforest of the classes satisfying `keep`; the caller guarantees the
    /// predicate is downward closed.
    fn filtered(&self, keep: impl Fn(&AssignmentClass) -> bool) -> Subforest<'_> {
        let sub = Subforest { forest: self, members: self.nodes.iter().map(keep).collect() };
        debug_assert!(sub.is_downward_closed());
        sub
    }

    /// The forest with the all-zero tree and the leaves of height-2 trees removed.
    pub fn ruspini(&self) -> Subforest<'_> {
        self.filtered(AssignmentClass::is_in_ruspini_forest)
    }

    /// Trees of height at most 3: at most two positive variables.
    pub fn overlap2(&self) -> Subforest<'_> {
        self.filtered(AssignmentClass::is_in_overlap_forest)
    }

    /// Truncation to height `t - 1`, the forest of `t`-valued Gödel logic.
    pub fn truncated(&self, t: usize) -> Subforest<'_> {
        self.filtered(|c| c.is_in_truncated(t))
    }

    /// `χ_i`: the classes in which `X_i` takes value 1.
    pub fn generating(&self, i: usize) -> Result<Subforest<'_>> {
        if i == 0 || i > self.n {
            return Err(Error::IndexOutOfRange { index: i, n: self.n });
        }
        Ok(self.filtered(|c| c.one_block().contains(&i)))
    }

    /// Smallest subforest containing `seeds`.
    pub fn downset<'a, I>(&self, seeds: I) -> Result<Subforest<'_>>
    where
        I: IntoIterator<Item = &'a AssignmentClass>,
    {
        let mut sub = self.empty();
        for seed in seeds {
            let id = self
                .id_of(seed)
                .ok_or(Error::ArityMismatch { expected: self.n, found: seed.n() })?;
            sub.insert_with_ancestors(id);
        }
        Ok(sub)
    }

    pub fn downset_of_ids(&self, ids: impl IntoIterator<Item = usize>) -> Subforest<'_> {
        let mut sub = self.empty();
        for id in ids {
            sub.insert_with_ancestors(id);
        }
        sub
    }
}

impl fmt::Debug for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Forest").field("n", &self.n).field("nodes", &self.len()).finish()
    }
}

/// Downward-closed set of nodes of a [`Forest`].
///
/// Membership is a flag per node position. Positions are canonical for each
/// `n`, so equality of subforests is equality of class sets.
#[derive(Clone)]
pub struct Subforest<'f> {
    forest: &'f Forest,
    members: Vec<bool>,
}

impl<'f> Subforest<'f> {
    pub fn forest(&self) -> &'f Forest {
        self.forest
    }

    pub(crate) fn from_flags(forest: &'f Forest, members: Vec<bool>) -> Self {
        Subforest { forest, members }
    }

    fn insert_with_ancestors(&mut self, mut id: usize) {
        loop {
            if self.members[id] {
                return;
            }
            self.members[id] = true;
            match self.forest.parent[id] {
                Some(p) => id = p,
                None => return,
            }
        }
    }

    pub fn contains_id(&self, id: usize) -> bool {
        self.members[id]
    }

    pub fn contains(&self, class: &AssignmentClass) -> bool {
        self.forest.id_of(class).is_some_and(|id| self.members[id])
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&m| m).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.members.iter().any(|&m| m)
    }

    pub fn ids(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.members.len()).filter(|&i| self.members[i])
    }

    pub fn classes(&self) -> impl Iterator<Item = &'f AssignmentClass> + '_ {
        let forest = self.forest;
        self.ids().map(move |i| &forest.nodes[i])
    }

    /// Maximal elements (leaves) of the subforest.
    pub fn leaf_ids(&self) -> impl Iterator<Item = usize> + '_ {
        self.ids()
            .filter(|&i| !self.forest.children[i].iter().any(|&c| self.members[c]))
    }

    pub fn leaves(&self) -> Vec<&'f AssignmentClass> {
        let forest = self.forest;
        self.leaf_ids().map(|i| &forest.nodes[i]).collect()
    }

    pub fn is_downward_closed(&self) -> bool {
        self.ids()
            .all(|i| self.forest.parent[i].is_none_or(|p| self.members[p]))
    }

    pub fn is_subset(&self, other: &Subforest<'_>) -> bool {
        self.members.len() == other.members.len()
            && self.members.iter().zip(&other.members).all(|(&a, &b)| !a || b)
    }

    fn check_ambient(&self, other: &Subforest<'_>) -> Result<()> {
        if self.forest.n != other.forest.n {
            return Err(Error::AmbientMismatch { left: self.forest.n, right: other.forest.n });
        }
        Ok(())
    }

    fn zip_with(&self, other: &Subforest<'_>, op: impl Fn(bool, bool) -> bool) -> Result<Subforest<'f>> {
        self.check_ambient(other)?;
        let members = self.members.iter().zip(&other.members).map(|(&a, &b)| op(a, b)).collect();
        Ok(Subforest { forest: self.forest, members })
    }

    /// Intersection.
    pub fn meet(&self, other: &Subforest<'_>) -> Result<Subforest<'f>> {
        self.zip_with(other, |a, b| a && b)
    }

    /// Union.
    pub fn join(&self, other: &Subforest<'_>) -> Result<Subforest<'f>> {
        self.zip_with(other, |a, b| a || b)
    }

    /// `{q | ↓q ∩ self ⊆ ↓q ∩ other}`.
    pub fn implies(&self, other: &Subforest<'_>) -> Result<Subforest<'f>> {
        self.check_ambient(other)?;
        // parents precede children, so one forward pass propagates the chain condition
        let mut members = vec![false; self.members.len()];
        for id in 0..members.len() {
            let here = !self.members[id] || other.members[id];
            members[id] = here && self.forest.parent[id].is_none_or(|p| members[p]);
        }
        Ok(Subforest { forest: self.forest, members })
    }

    /// Pseudo-complement: implication into the empty subforest.
    pub fn not(&self) -> Subforest<'f> {
        self.implies(&self.forest.empty()).expect("same ambient forest")
    }

    /// A subforest of the Ruspini forest whose leaves are all leaves of the
    /// Ruspini forest. The empty subforest does not qualify.
    pub fn is_ruspini(&self) -> bool {
        !self.is_empty()
            && self.classes().all(AssignmentClass::is_in_ruspini_forest)
            && self.leaf_ids().all(|i| self.forest.nodes[i].is_ruspini_leaf())
    }
}

impl PartialEq for Subforest<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.forest.n == other.forest.n && self.members == other.members
    }
}

impl Eq for Subforest<'_> {}

impl fmt::Debug for Subforest<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.classes().map(|c| c.label())).finish()
    }
}
