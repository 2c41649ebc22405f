//! Tamari order by brute force: the reflexive-transitive closure of right
//! rotation. Only used as an independent oracle at small sizes.

use std::collections::{HashMap, HashSet, VecDeque};

use super::tree::{enumerate_trees, BinaryTree, TreeError};

fn rotations(t: &BinaryTree) -> impl Iterator<Item = BinaryTree> + '_ {
    t.rotatable_positions()
        .into_iter()
        .map(move |p| t.right_rotate(p).expect("position admits a rotation"))
}

/// Whether `t2` is reachable from `t1` by right rotations.
pub fn tamari_leq_bruteforce(t1: &BinaryTree, t2: &BinaryTree) -> Result<bool, TreeError> {
    let (n1, n2) = (t1.size(), t2.size());
    if n1 != n2 {
        return Err(TreeError::SizeMismatch(n1, n2));
    }
    let mut seen = HashSet::from([t1.clone()]);
    let mut queue = VecDeque::from([t1.clone()]);
    while let Some(t) = queue.pop_front() {
        if &t == t2 {
            return Ok(true);
        }
        for s in rotations(&t) {
            if seen.insert(s.clone()) {
                queue.push_back(s);
            }
        }
    }
    Ok(false)
}

/// Rotation cover graph of one size with every upper set precomputed.
///
/// Owned by the caller; nothing is shared between instances.
#[derive(Debug, Clone)]
pub struct RotationOracle {
    trees: Vec<BinaryTree>,
    index: HashMap<BinaryTree, usize>,
    above: Vec<Vec<bool>>,
}

impl RotationOracle {
    pub fn new(n: usize) -> Self {
        let trees = enumerate_trees(n);
        let index: HashMap<_, _> = trees.iter().cloned().zip(0..).collect();
        let covers: Vec<Vec<usize>> = trees
            .iter()
            .map(|t| rotations(t).map(|s| index[&s]).collect())
            .collect();
        let above = (0..trees.len())
            .map(|start| {
                let mut seen = vec![false; trees.len()];
                seen[start] = true;
                let mut stack = vec![start];
                while let Some(i) = stack.pop() {
                    for &j in &covers[i] {
                        if !seen[j] {
                            seen[j] = true;
                            stack.push(j);
                        }
                    }
                }
                seen
            })
            .collect();
        Self {
            trees,
            index,
            above,
        }
    }

    pub fn trees(&self) -> &[BinaryTree] {
        &self.trees
    }

    pub fn leq(&self, t1: &BinaryTree, t2: &BinaryTree) -> Result<bool, TreeError> {
        let lookup = |t: &BinaryTree| {
            self.index
                .get(t)
                .copied()
                .ok_or_else(|| TreeError::SizeMismatch(t.size(), self.trees[0].size()))
        };
        Ok(self.above[lookup(t1)?][lookup(t2)?])
    }

    /// Number of comparable pairs `t1 <= t2`, i.e. the number of intervals.
    pub fn count_intervals(&self) -> usize {
        self.above.iter().flatten().filter(|&&b| b).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reflexive_and_extremes() {
        for n in 0..=4 {
            for t in enumerate_trees(n) {
                assert!(tamari_leq_bruteforce(&t, &t).unwrap());
                assert!(tamari_leq_bruteforce(&BinaryTree::left_comb(n), &t).unwrap());
                assert!(tamari_leq_bruteforce(&t, &BinaryTree::right_comb(n)).unwrap());
            }
        }
        assert_eq!(
            tamari_leq_bruteforce(&BinaryTree::single(), &BinaryTree::Empty),
            Err(TreeError::SizeMismatch(1, 0))
        );
    }

    #[test]
    fn interval_counts() {
        assert_eq!(RotationOracle::new(3).count_intervals(), 13);
        assert_eq!(RotationOracle::new(4).count_intervals(), 68);
        let mut pairs = 0;
        for a in enumerate_trees(3) {
            for b in enumerate_trees(3) {
                pairs += usize::from(tamari_leq_bruteforce(&a, &b).unwrap());
            }
        }
        assert_eq!(pairs, 13);
    }

    #[test]
    fn partial_order_up_to_five() {
        for n in 0..=5 {
            let o = RotationOracle::new(n);
            let ts = o.trees();
            for a in ts {
                for b in ts {
                    let ab = o.leq(a, b).unwrap();
                    if a != b && ab {
                        assert!(!o.leq(b, a).unwrap(), "antisymmetry");
                    }
                    for c in ts {
                        if ab && o.leq(b, c).unwrap() {
                            assert!(o.leq(a, c).unwrap(), "transitivity");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn rotation_goes_strictly_up() {
        for n in 1..=5 {
            for t in enumerate_trees(n) {
                for s in rotations(&t) {
                    assert_ne!(s, t);
                    assert!(tamari_leq_bruteforce(&t, &s).unwrap());
                    assert!(!tamari_leq_bruteforce(&s, &t).unwrap());
                }
            }
        }
    }
}
