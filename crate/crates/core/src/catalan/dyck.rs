use thiserror::Error;

use super::tree::BinaryTree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DyckError {
    #[error("path goes below zero at step {0}")]
    BelowZero(usize),
    #[error("path ends at height {0}, expected 0")]
    Unbalanced(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up,
    Down,
}

/// Balanced sequence of up and down steps never going below height 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self, DyckError> {
        let mut h = 0usize;
        for (i, s) in steps.iter().enumerate() {
            match s {
                Step::Up => h += 1,
                Step::Down => {
                    h = h.checked_sub(1).ok_or(DyckError::BelowZero(i + 1))?;
                }
            }
        }
        if h != 0 {
            return Err(DyckError::Unbalanced(h));
        }
        Ok(Self { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Number of up steps.
    pub fn size(&self) -> usize {
        self.steps.len() / 2
    }

    /// Returns to height 0, the starting point excluded.
    pub fn contacts(&self) -> usize {
        let mut h = 0i64;
        let mut count = 0;
        for s in &self.steps {
            h += if *s == Step::Up { 1 } else { -1 };
            if h == 0 {
                count += 1;
            }
        }
        count
    }

    /// Length of the maximal prefix of up steps.
    pub fn initial_rise(&self) -> usize {
        self.steps.iter().take_while(|s| **s == Step::Up).count()
    }
}

/// Splits `D = D1 u D2 d` at the last up step `u` leaving height 0 and maps
/// it to the tree with left subtree `D1` and right subtree `D2`.
pub fn tree_from_dyck(d: &DyckPath) -> BinaryTree {
    fn build(steps: &[Step]) -> BinaryTree {
        if steps.is_empty() {
            return BinaryTree::Empty;
        }
        let mut h = 0i64;
        let mut split = 0;
        for (i, s) in steps.iter().enumerate() {
            if h == 0 && *s == Step::Up {
                split = i;
            }
            h += if *s == Step::Up { 1 } else { -1 };
        }
        BinaryTree::node(
            build(&steps[..split]),
            build(&steps[split + 1..steps.len() - 1]),
        )
    }
    build(&d.steps)
}

pub fn dyck_from_tree(t: &BinaryTree) -> DyckPath {
    fn walk(t: &BinaryTree, out: &mut Vec<Step>) {
        if let BinaryTree::Node(l, r) = t {
            walk(l, out);
            out.push(Step::Up);
            walk(r, out);
            out.push(Step::Down);
        }
    }
    let mut steps = Vec::with_capacity(2 * t.size());
    walk(t, &mut steps);
    DyckPath { steps }
}
