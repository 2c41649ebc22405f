use thiserror::Error;

use super::tree::BinaryTree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ForestError {
    #[error("node {node} has parent {parent}, which is not on the current rightmost branch")]
    NotPreorder { node: usize, parent: usize },
    #[error("child counts leave {0} unfilled child slot(s)")]
    UnfilledChildren(usize),
}

/// Ordered forest of ordered rooted trees.
///
/// Nodes are labelled `1..=n` in preorder (each root, then its child
/// subtrees from left to right), so the forest is fully described by its
/// parent map and the descendants of `v` are exactly the labels
/// `v+1..v+subtree_size(v)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PlanarForest {
    // parent[v - 1] is the parent label of v.
    parent: Vec<Option<usize>>,
}

impl PlanarForest {
    /// Checks that `parent` (indexed by `label - 1`) is a preorder labelling.
    pub fn from_parents(parent: Vec<Option<usize>>) -> Result<Self, ForestError> {
        let mut branch: Vec<usize> = Vec::new();
        for (i, p) in parent.iter().enumerate() {
            let v = i + 1;
            match *p {
                None => branch.clear(),
                Some(p) => {
                    while branch.last().is_some_and(|&top| top != p) {
                        branch.pop();
                    }
                    if branch.is_empty() {
                        return Err(ForestError::NotPreorder { node: v, parent: p });
                    }
                }
            }
            branch.push(v);
        }
        Ok(Self { parent })
    }

    /// Rebuilds the unique forest whose preorder child-count sequence is
    /// `counts`.
    pub fn from_child_counts(counts: &[usize]) -> Result<Self, ForestError> {
        let mut parent = Vec::with_capacity(counts.len());
        // (label, remaining child slots)
        let mut open: Vec<(usize, usize)> = Vec::new();
        for (i, &c) in counts.iter().enumerate() {
            let v = i + 1;
            match open.last_mut() {
                Some((p, rem)) => {
                    parent.push(Some(*p));
                    *rem -= 1;
                    if *rem == 0 {
                        open.pop();
                    }
                }
                None => parent.push(None),
            }
            if c > 0 {
                open.push((v, c));
            }
        }
        let missing: usize = open.iter().map(|(_, rem)| rem).sum();
        if missing > 0 {
            return Err(ForestError::UnfilledChildren(missing));
        }
        Ok(Self { parent })
    }

    pub fn singletons(n: usize) -> Self {
        Self {
            parent: vec![None; n],
        }
    }

    /// Single path `1 - 2 - ... - n` rooted at 1.
    pub fn chain(n: usize) -> Self {
        let parent = (0..n).map(|i| (i > 0).then_some(i)).collect();
        Self { parent }
    }

    pub fn size(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v - 1]
    }

    /// Parent map indexed by `label - 1`.
    pub fn parents(&self) -> &[Option<usize>] {
        &self.parent
    }

    pub fn roots(&self) -> Vec<usize> {
        (1..=self.size())
            .filter(|&v| self.parent(v).is_none())
            .collect()
    }

    pub fn num_roots(&self) -> usize {
        self.parent.iter().filter(|p| p.is_none()).count()
    }

    pub fn children(&self, v: usize) -> Vec<usize> {
        (v + 1..=self.size())
            .filter(|&c| self.parent(c) == Some(v))
            .collect()
    }

    pub fn child_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.size()];
        for p in self.parent.iter().flatten() {
            counts[p - 1] += 1;
        }
        counts
    }

    /// Number of nodes in the subtree of each label, itself included.
    pub fn subtree_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![1; self.size()];
        for v in (1..=self.size()).rev() {
            if let Some(p) = self.parent(v) {
                sizes[p - 1] += sizes[v - 1];
            }
        }
        sizes
    }

    /// Reads the forest with label `n + 1 - v` on the node with preorder label
    /// `v`. This is how initial (increasing) forests are stored: parents have
    /// larger labels and descendants sit just below their ancestor.
    pub fn increasing_parents(&self) -> Vec<Option<usize>> {
        let n = self.size();
        (1..=n)
            .map(|v| self.parent(n + 1 - v).map(|p| n + 1 - p))
            .collect()
    }

    /// Inverse of [`PlanarForest::increasing_parents`].
    pub fn from_increasing_parents(inc: &[Option<usize>]) -> Result<Self, ForestError> {
        let n = inc.len();
        let parent = (1..=n).map(|p| inc[n - p].map(|q| n + 1 - q)).collect();
        Self::from_parents(parent)
    }
}

/// Final forest of `t`: `b` is a descendant of `a` iff `b` lies in the
/// right subtree of `a`. Labels are the in-order labels of `t`, which are a
/// preorder of the resulting forest.
pub fn dec_forest_of_tree(t: &BinaryTree) -> PlanarForest {
    fn walk(t: &BinaryTree, offset: usize, up: Option<usize>, out: &mut Vec<Option<usize>>) {
        if let BinaryTree::Node(l, r) = t {
            walk(l, offset, up, out);
            let label = offset + l.size() + 1;
            out.push(up);
            walk(r, label, Some(label), out);
        }
    }
    let mut parent = Vec::with_capacity(t.size());
    walk(t, 0, None, &mut parent);
    PlanarForest { parent }
}

/// Initial forest of `t`: `a` is a descendant of `c` iff `a` lies in the left
/// subtree of `c`. Stored mirrored, see [`PlanarForest::increasing_parents`].
pub fn inc_forest_of_tree(t: &BinaryTree) -> PlanarForest {
    dec_forest_of_tree(&t.mirror())
}

/// Inverse of [`dec_forest_of_tree`]. The root of the tree is the last root
/// of the forest; everything before it builds the left subtree and its own
/// children build the right subtree.
pub fn tree_from_dec_forest(f: &PlanarForest) -> BinaryTree {
    fn build(f: &PlanarForest, lo: usize, hi: usize) -> BinaryTree {
        if lo > hi {
            return BinaryTree::Empty;
        }
        let last_root = (lo..=hi)
            .rev()
            .find(|&v| f.parent(v).is_none_or(|p| p < lo))
            .expect("a nonempty label range of a forest holds a root");
        BinaryTree::node(build(f, lo, last_root - 1), build(f, last_root + 1, hi))
    }
    build(f, 1, f.size())
}

/// Inverse of [`inc_forest_of_tree`].
pub fn tree_from_inc_forest(f: &PlanarForest) -> BinaryTree {
    tree_from_dec_forest(f).mirror()
}
