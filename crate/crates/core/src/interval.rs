//! Interval-posets of the Tamari lattice.
//!
//! An interval-poset on `1..=n` is stored as its two cover maps: each vertex
//! has at most one decreasing parent (a smaller label it precedes) and at
//! most one increasing parent (a larger label it precedes). The decreasing
//! relations form the final forest of the lower tree of the interval, the
//! increasing relations the initial forest of the upper tree.

use std::fmt;

use thiserror::Error;

use crate::catalan::{
    dec_forest_of_tree, inc_forest_of_tree, tree_from_dec_forest, tree_from_inc_forest, BinaryTree,
    PlanarForest, TreeError,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Increasing,
    Decreasing,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Increasing => "increasing",
            Direction::Decreasing => "decreasing",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("vertex {vertex} is outside 1..={size}")]
    VertexOutOfRange { vertex: usize, size: usize },
    #[error("relations {0} -> {1} and {1} -> {0} form a cycle")]
    Cycle(usize, usize),
    #[error("vertex {vertex} has two incomparable {direction} parents {first} and {second}")]
    DuplicateParent {
        vertex: usize,
        direction: Direction,
        first: usize,
        second: usize,
    },
    #[error("{direction} relation between {a} and {c} requires {b} to precede {target}",
        target = if *direction == Direction::Increasing { c } else { a })]
    AxiomViolation {
        direction: Direction,
        a: usize,
        b: usize,
        c: usize,
    },
    #[error("the pair of trees is not a Tamari interval")]
    NotAnInterval,
    #[error(transparent)]
    Tree(#[from] TreeError),
}

/// Size and the two statistics swapped by the bijection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntervalStats {
    pub size: usize,
    pub trees: usize,
    pub ir: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IntervalPoset {
    dec: Vec<Option<usize>>,
    inc: Vec<Option<usize>>,
}

/// Reflexive-transitive closure as a dense boolean matrix, 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Closure {
    n: usize,
    m: Vec<bool>,
}

impl Closure {
    fn new(n: usize) -> Self {
        let mut m = vec![false; (n + 1) * (n + 1)];
        for v in 1..=n {
            m[v * (n + 1) + v] = true;
        }
        Self { n, m }
    }

    fn set(&mut self, a: usize, b: usize) {
        self.m[a * (self.n + 1) + b] = true;
    }

    /// Whether `a` precedes `b`.
    pub fn get(&self, a: usize, b: usize) -> bool {
        self.m[a * (self.n + 1) + b]
    }

    fn close(&mut self) {
        let n = self.n;
        for k in 1..=n {
            for i in 1..=n {
                if self.get(i, k) {
                    for j in 1..=n {
                        if self.get(k, j) {
                            self.set(i, j);
                        }
                    }
                }
            }
        }
    }

    /// Every strict pair `a -> b`, ordered by `a` then `b`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 1..=self.n {
            for b in 1..=self.n {
                if a != b && self.get(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

impl IntervalPoset {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Poset on `1..=n` without relations: the interval from the minimal to
    /// the maximal tree.
    pub fn antichain(n: usize) -> Self {
        Self {
            dec: vec![None; n],
            inc: vec![None; n],
        }
    }

    /// Builds a poset from a relation list (`(a, b)` meaning `a` precedes
    /// `b`), closing it transitively and checking every interval-poset
    /// condition. Redundant relations are accepted.
    pub fn validate(n: usize, relations: &[(usize, usize)]) -> Result<Self, PosetError> {
        let mut cl = Closure::new(n);
        for &(a, b) in relations {
            for v in [a, b] {
                if v == 0 || v > n {
                    return Err(PosetError::VertexOutOfRange { vertex: v, size: n });
                }
            }
            cl.set(a, b);
        }
        cl.close();

        for a in 1..=n {
            for b in a + 1..=n {
                if cl.get(a, b) && cl.get(b, a) {
                    return Err(PosetError::Cycle(a, b));
                }
            }
        }

        // The ancestors of a vertex in each direction must be totally ordered.
        for v in 1..=n {
            let below: Vec<usize> = (1..v).filter(|&a| cl.get(v, a)).collect();
            for w in below.windows(2) {
                if !cl.get(w[1], w[0]) {
                    return Err(PosetError::DuplicateParent {
                        vertex: v,
                        direction: Direction::Decreasing,
                        first: w[0],
                        second: w[1],
                    });
                }
            }
            let above: Vec<usize> = (v + 1..=n).filter(|&c| cl.get(v, c)).collect();
            for w in above.windows(2) {
                if !cl.get(w[0], w[1]) {
                    return Err(PosetError::DuplicateParent {
                        vertex: v,
                        direction: Direction::Increasing,
                        first: w[0],
                        second: w[1],
                    });
                }
            }
        }

        for a in 1..=n {
            for c in a + 2..=n {
                for b in a + 1..c {
                    if cl.get(a, c) && !cl.get(b, c) {
                        return Err(PosetError::AxiomViolation {
                            direction: Direction::Increasing,
                            a,
                            b,
                            c,
                        });
                    }
                    if cl.get(c, a) && !cl.get(b, a) {
                        return Err(PosetError::AxiomViolation {
                            direction: Direction::Decreasing,
                            a,
                            b,
                            c,
                        });
                    }
                }
            }
        }

        let dec = (1..=n)
            .map(|v| (1..v).rev().find(|&a| cl.get(v, a)))
            .collect();
        let inc = (1..=n)
            .map(|v| (v + 1..=n).find(|&c| cl.get(v, c)))
            .collect();
        Ok(Self { dec, inc })
    }

    /// Validates a pair of parent maps (indexed by `vertex - 1`).
    pub fn from_parent_maps(
        dec: &[Option<usize>],
        inc: &[Option<usize>],
    ) -> Result<Self, PosetError> {
        let n = dec.len().max(inc.len());
        let pairs: Vec<_> = dec
            .iter()
            .enumerate()
            .filter_map(|(i, p)| p.map(|p| (i + 1, p)))
            .chain(
                inc.iter()
                    .enumerate()
                    .filter_map(|(i, p)| p.map(|p| (i + 1, p))),
            )
            .collect();
        Self::validate(n, &pairs)
    }

    /// Trusted constructor for maps produced by the algorithms of this crate.
    pub(crate) fn from_covers(dec: Vec<Option<usize>>, inc: Vec<Option<usize>>) -> Self {
        debug_assert_eq!(dec.len(), inc.len());
        Self { dec, inc }
    }

    /// Interval `[t1, t2]`: decreasing relations of the final forest of `t1`
    /// together with the increasing relations of the initial forest of `t2`.
    pub fn from_tree_pair(t1: &BinaryTree, t2: &BinaryTree) -> Result<Self, PosetError> {
        let (n1, n2) = (t1.size(), t2.size());
        if n1 != n2 {
            return Err(TreeError::SizeMismatch(n1, n2).into());
        }
        let dec = dec_forest_of_tree(t1);
        let inc = inc_forest_of_tree(t2).increasing_parents();
        Self::from_parent_maps(dec.parents(), &inc).map_err(|_| PosetError::NotAnInterval)
    }

    pub fn size(&self) -> usize {
        self.dec.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dec.is_empty()
    }

    pub fn dec_parent(&self, v: usize) -> Option<usize> {
        self.dec[v - 1]
    }

    pub fn inc_parent(&self, v: usize) -> Option<usize> {
        self.inc[v - 1]
    }

    pub fn dec_parents(&self) -> &[Option<usize>] {
        &self.dec
    }

    pub fn inc_parents(&self) -> &[Option<usize>] {
        &self.inc
    }

    /// Whether `a` precedes `b` (reflexive).
    pub fn precedes(&self, a: usize, b: usize) -> bool {
        let parents = match a.cmp(&b) {
            std::cmp::Ordering::Equal => return true,
            std::cmp::Ordering::Less => &self.inc,
            std::cmp::Ordering::Greater => &self.dec,
        };
        let mut v = a;
        while let Some(p) = parents[v - 1] {
            if p == b {
                return true;
            }
            if (a < b && p > b) || (a > b && p < b) {
                return false;
            }
            v = p;
        }
        false
    }

    pub fn closure(&self) -> Closure {
        let n = self.size();
        let mut cl = Closure::new(n);
        for (b, a) in self.dec_relations().into_iter().chain(self.inc_relations()) {
            cl.set(b, a);
        }
        cl.close();
        cl
    }

    /// Decreasing cover relations `(b, a)` with `b > a`, ascending in `b`.
    pub fn dec_relations(&self) -> Vec<(usize, usize)> {
        (1..=self.size())
            .filter_map(|v| self.dec_parent(v).map(|p| (v, p)))
            .collect()
    }

    /// Increasing cover relations `(a, c)` with `a < c`, ascending in `a`.
    pub fn inc_relations(&self) -> Vec<(usize, usize)> {
        (1..=self.size())
            .filter_map(|v| self.inc_parent(v).map(|p| (v, p)))
            .collect()
    }

    /// All cover relations, decreasing ones first.
    pub fn cover_relations(&self) -> Vec<(usize, usize)> {
        let mut out = self.dec_relations();
        out.extend(self.inc_relations());
        out
    }

    pub fn dec_children(&self, v: usize) -> Vec<usize> {
        (v + 1..=self.size())
            .filter(|&c| self.dec_parent(c) == Some(v))
            .collect()
    }

    pub fn dec_roots(&self) -> Vec<usize> {
        (1..=self.size())
            .filter(|&v| self.dec_parent(v).is_none())
            .collect()
    }

    pub fn inc_roots(&self) -> Vec<usize> {
        (1..=self.size())
            .filter(|&v| self.inc_parent(v).is_none())
            .collect()
    }

    /// Final forest; its preorder is the label order.
    pub fn dec_forest(&self) -> PlanarForest {
        PlanarForest::from_parents(self.dec.clone())
            .expect("decreasing covers of an interval-poset form a preorder forest")
    }

    /// Initial forest, stored mirrored (see [`PlanarForest::increasing_parents`]).
    pub fn inc_forest(&self) -> PlanarForest {
        PlanarForest::from_increasing_parents(&self.inc)
            .expect("increasing covers of an interval-poset form a forest")
    }

    /// Number of vertices strictly above `v` that precede it, i.e. the size of
    /// its final-forest subtree minus one.
    pub fn dec_descendant_count(&self, v: usize) -> usize {
        (v + 1..=self.size())
            .take_while(|&b| self.precedes(b, v))
            .count()
    }

    /// Number of vertices strictly below `v` that precede it.
    pub fn inc_descendant_count(&self, v: usize) -> usize {
        (1..v).rev().take_while(|&a| self.precedes(a, v)).count()
    }

    pub fn lower_tree(&self) -> BinaryTree {
        tree_from_dec_forest(&self.dec_forest())
    }

    pub fn upper_tree(&self) -> BinaryTree {
        tree_from_inc_forest(&self.inc_forest())
    }

    /// Components of the final forest.
    pub fn stat_trees(&self) -> usize {
        self.dec.iter().filter(|p| p.is_none()).count()
    }

    /// Largest `k` such that no `v - 1` precedes `v` for `2 <= v <= k`.
    pub fn stat_ir(&self) -> usize {
        let n = self.size();
        if n == 0 {
            return 0;
        }
        let mut k = 1;
        while k < n && !self.precedes(k, k + 1) {
            k += 1;
        }
        k
    }

    pub fn stats(&self) -> IntervalStats {
        IntervalStats {
            size: self.size(),
            trees: self.stat_trees(),
            ir: self.stat_ir(),
        }
    }

    /// Subposet on the labels `lo..=hi`, relabelled to start at 1.
    pub fn restrict(&self, lo: usize, hi: usize) -> IntervalPoset {
        if lo > hi {
            return IntervalPoset::empty();
        }
        let keep = |p: Option<usize>| p.filter(|&p| p >= lo && p <= hi).map(|p| p - lo + 1);
        let dec = (lo..=hi).map(|v| keep(self.dec_parent(v))).collect();
        let inc = (lo..=hi).map(|v| keep(self.inc_parent(v))).collect();
        IntervalPoset { dec, inc }
    }
}

/// Tamari comparison through interval-poset construction.
pub fn tamari_leq(t1: &BinaryTree, t2: &BinaryTree) -> Result<bool, TreeError> {
    match IntervalPoset::from_tree_pair(t1, t2) {
        Ok(_) => Ok(true),
        Err(PosetError::Tree(e)) => Err(e),
        Err(_) => Ok(false),
    }
}
