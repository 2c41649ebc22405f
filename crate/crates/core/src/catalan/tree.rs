use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("node {0} has no left child to rotate")]
    NoLeftChild(usize),
    #[error("position {pos} is outside 1..={size}")]
    PositionOutOfRange { pos: usize, size: usize },
    #[error("trees have different sizes ({0} and {1})")]
    SizeMismatch(usize, usize),
}

/// Unlabelled binary tree.
///
/// Nodes are implicitly labelled `1..=n` in in-order, which is the unique
/// binary-search-tree labelling of the shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum BinaryTree {
    #[default]
    Empty,
    Node(Box<BinaryTree>, Box<BinaryTree>),
}

impl BinaryTree {
    pub fn node(left: BinaryTree, right: BinaryTree) -> Self {
        BinaryTree::Node(Box::new(left), Box::new(right))
    }

    pub fn single() -> Self {
        Self::node(BinaryTree::Empty, BinaryTree::Empty)
    }

    /// Every node has only a left child; the minimum of the Tamari order.
    pub fn left_comb(n: usize) -> Self {
        (0..n).fold(BinaryTree::Empty, |acc, _| {
            Self::node(acc, BinaryTree::Empty)
        })
    }

    /// Every node has only a right child; the maximum of the Tamari order.
    pub fn right_comb(n: usize) -> Self {
        (0..n).fold(BinaryTree::Empty, |acc, _| {
            Self::node(BinaryTree::Empty, acc)
        })
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, BinaryTree::Empty)
    }

    pub fn size(&self) -> usize {
        match self {
            BinaryTree::Empty => 0,
            BinaryTree::Node(l, r) => l.size() + 1 + r.size(),
        }
    }

    pub fn left(&self) -> Option<&BinaryTree> {
        match self {
            BinaryTree::Empty => None,
            BinaryTree::Node(l, _) => Some(l),
        }
    }

    pub fn right(&self) -> Option<&BinaryTree> {
        match self {
            BinaryTree::Empty => None,
            BinaryTree::Node(_, r) => Some(r),
        }
    }

    /// Left/right mirror image. In-order label `v` becomes `n + 1 - v`.
    pub fn mirror(&self) -> BinaryTree {
        match self {
            BinaryTree::Empty => BinaryTree::Empty,
            BinaryTree::Node(l, r) => Self::node(r.mirror(), l.mirror()),
        }
    }

    /// In-order labels whose node has an empty left subtree.
    pub fn nodes_without_left_child(&self) -> Vec<usize> {
        fn walk(t: &BinaryTree, offset: usize, out: &mut Vec<usize>) {
            if let BinaryTree::Node(l, r) = t {
                walk(l, offset, out);
                let label = offset + l.size() + 1;
                if l.is_empty() {
                    out.push(label);
                }
                walk(r, label, out);
            }
        }
        let mut out = Vec::new();
        walk(self, 0, &mut out);
        out
    }

    /// Right rotation `y(x(A,B),C) -> x(A,y(B,C))` at the node with in-order
    /// label `pos`.
    pub fn right_rotate(&self, pos: usize) -> Result<BinaryTree, TreeError> {
        let size = self.size();
        if pos == 0 || pos > size {
            return Err(TreeError::PositionOutOfRange { pos, size });
        }
        rotate_at(self, pos, pos)
    }

    /// In-order labels at which a right rotation applies.
    pub fn rotatable_positions(&self) -> Vec<usize> {
        let mut out = Vec::new();
        fn walk(t: &BinaryTree, offset: usize, out: &mut Vec<usize>) {
            if let BinaryTree::Node(l, r) = t {
                walk(l, offset, out);
                let label = offset + l.size() + 1;
                if !l.is_empty() {
                    out.push(label);
                }
                walk(r, label, out);
            }
        }
        walk(self, 0, &mut out);
        out
    }
}

fn rotate_at(t: &BinaryTree, pos: usize, global: usize) -> Result<BinaryTree, TreeError> {
    let BinaryTree::Node(l, r) = t else {
        unreachable!("position checked against size")
    };
    let ls = l.size();
    if pos <= ls {
        Ok(BinaryTree::node(rotate_at(l, pos, global)?, (**r).clone()))
    } else if pos == ls + 1 {
        match &**l {
            BinaryTree::Node(a, b) => Ok(BinaryTree::node(
                (**a).clone(),
                BinaryTree::node((**b).clone(), (**r).clone()),
            )),
            BinaryTree::Empty => Err(TreeError::NoLeftChild(global)),
        }
    } else {
        Ok(BinaryTree::node(
            (**l).clone(),
            rotate_at(r, pos - ls - 1, global)?,
        ))
    }
}

/// All binary trees with `n` nodes, ordered by left-subtree size (smaller
/// first), then recursively.
pub fn enumerate_trees(n: usize) -> Vec<BinaryTree> {
    let mut table: Vec<Vec<BinaryTree>> = vec![vec![BinaryTree::Empty]];
    for size in 1..=n {
        let mut level = Vec::new();
        for ls in 0..size {
            for l in &table[ls] {
                for r in &table[size - 1 - ls] {
                    level.push(BinaryTree::node(l.clone(), r.clone()));
                }
            }
        }
        table.push(level);
    }
    table.swap_remove(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_counts_are_catalan() {
        assert_eq!(enumerate_trees(0), vec![BinaryTree::Empty]);
        assert_eq!(enumerate_trees(3).len(), 5);
        assert_eq!(enumerate_trees(5).len(), 42);
        assert_eq!(enumerate_trees(8).len(), 1430);
    }

    #[test]
    fn enumeration_order_starts_with_empty_left() {
        let two = enumerate_trees(2);
        assert_eq!(
            two,
            vec![BinaryTree::right_comb(2), BinaryTree::left_comb(2)]
        );
    }

    #[test]
    fn rotate_comb() {
        assert_eq!(
            BinaryTree::left_comb(2).right_rotate(2).unwrap(),
            BinaryTree::right_comb(2)
        );
        assert_eq!(
            BinaryTree::right_comb(2).right_rotate(1),
            Err(TreeError::NoLeftChild(1))
        );
        assert_eq!(
            BinaryTree::right_comb(2).right_rotate(3),
            Err(TreeError::PositionOutOfRange { pos: 3, size: 2 })
        );
    }

    #[test]
    fn rotate_with_nonempty_subtrees() {
        let s = BinaryTree::single;
        // y(x(A,B),C): A=1, x=2, B=3, y=4, C=5
        let before = BinaryTree::node(BinaryTree::node(s(), s()), s());
        let after = BinaryTree::node(s(), BinaryTree::node(s(), s()));
        assert_eq!(before.right_rotate(4).unwrap(), after);
        // rotation inside a subtree leaves the rest alone
        let wrapped = BinaryTree::node(BinaryTree::Empty, before);
        assert_eq!(
            wrapped.right_rotate(5).unwrap(),
            BinaryTree::node(BinaryTree::Empty, after)
        );
    }

    #[test]
    fn mirror_is_involutive() {
        for t in enumerate_trees(5) {
            assert_eq!(t.mirror().mirror(), t);
        }
        assert_eq!(BinaryTree::left_comb(4).mirror(), BinaryTree::right_comb(4));
    }
}
