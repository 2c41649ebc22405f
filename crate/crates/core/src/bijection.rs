//! The lower-contacts (LC) and initial-rise (IR) decompositions of
//! interval-posets and the bijection `beta` built from them.
//!
//! Both decompositions write a nonempty interval-poset uniquely as a triple
//! `(I1, I2, r)` with `size(I1) + size(I2) + 1 = size(I)`. For LC the
//! parameter satisfies `0 <= r <= trees(I2)`, for IR `0 <= r <= ir(I2)`.
//! `beta` decomposes with LC and recomposes with IR, recursively, and
//! exchanges the `trees` and `ir` statistics.

use thiserror::Error;

use crate::catalan::PlanarForest;
use crate::interval::IntervalPoset;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompError {
    #[error("parameter r = {r} exceeds its bound {max}")]
    ROutOfRange { r: usize, max: usize },
    #[error("the empty poset has no decomposition")]
    EmptyPoset,
    #[error("no initial-rise decomposition reproduces the poset")]
    NoDecomposition,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LcTriple {
    pub left: IntervalPoset,
    pub right: IntervalPoset,
    pub r: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IrTriple {
    pub left: IntervalPoset,
    pub right: IntervalPoset,
    pub r: usize,
}

impl LcTriple {
    pub fn new(left: IntervalPoset, right: IntervalPoset, r: usize) -> Self {
        Self { left, right, r }
    }
}

impl IrTriple {
    pub fn new(left: IntervalPoset, right: IntervalPoset, r: usize) -> Self {
        Self { left, right, r }
    }
}

fn shift(p: Option<usize>, by: usize) -> Option<usize> {
    p.map(|p| p + by)
}

/// Shifted concatenation of `left`, a new vertex `k`, and `right`, where
/// every vertex of `left` precedes `k` and the `r` first final-forest roots
/// of `right` become children of `k`.
pub fn lc_compose(t: &LcTriple) -> Result<IntervalPoset, DecompError> {
    let max = t.right.stat_trees();
    if t.r > max {
        return Err(DecompError::ROutOfRange { r: t.r, max });
    }
    let n1 = t.left.size();
    let k = n1 + 1;

    let mut dec: Vec<Option<usize>> = t.left.dec_parents().to_vec();
    let mut inc: Vec<Option<usize>> = t.left.inc_parents().iter().map(|p| p.or(Some(k))).collect();
    dec.push(None);
    inc.push(None);

    let mut attached = 0;
    for v in 1..=t.right.size() {
        let mut p = shift(t.right.dec_parent(v), k);
        if p.is_none() && attached < t.r {
            p = Some(k);
            attached += 1;
        }
        dec.push(p);
        inc.push(shift(t.right.inc_parent(v), k));
    }
    Ok(IntervalPoset::from_covers(dec, inc))
}

/// Inverse of [`lc_compose`]. The new vertex `k` is the largest label that
/// every smaller label precedes; `r` is its number of final-forest children.
pub fn lc_decompose(i: &IntervalPoset) -> Result<LcTriple, DecompError> {
    let n = i.size();
    if n == 0 {
        return Err(DecompError::EmptyPoset);
    }
    let k = (1..=n)
        .rev()
        .find(|&k| i.inc_descendant_count(k) == k - 1)
        .expect("vertex 1 always qualifies");
    Ok(LcTriple {
        left: i.restrict(1, k - 1),
        right: i.restrict(k + 1, n),
        r: i.dec_children(k).len(),
    })
}

/// First step of the IR composition: inserts a vertex at
/// `k = ir(i2) - r + 1`, adds `k -> k+1` when that vertex exists, and
/// redistributes the decreasing relations so that every former vertex keeps
/// its number of final-forest children.
pub fn ir_insert(i2: &IntervalPoset, r: usize) -> Result<IntervalPoset, DecompError> {
    let ir = i2.stat_ir();
    if r > ir {
        return Err(DecompError::ROutOfRange { r, max: ir });
    }
    let n2 = i2.size();
    let k = ir - r + 1;
    let up = |v: usize| if v >= k { v + 1 } else { v };

    let mut inc = Vec::with_capacity(n2 + 1);
    for w in 1..=n2 + 1 {
        inc.push(match w.cmp(&k) {
            std::cmp::Ordering::Less => i2.inc_parent(w).map(up),
            std::cmp::Ordering::Equal => (k <= n2).then_some(k + 1),
            std::cmp::Ordering::Greater => i2.inc_parent(w - 1).map(up),
        });
    }

    let mut counts = i2.dec_forest().child_counts();
    counts.insert(k - 1, 0);
    let dec = PlanarForest::from_child_counts(&counts)
        .expect("one extra childless vertex keeps the count sequence decodable")
        .parents()
        .to_vec();
    Ok(IntervalPoset::from_covers(dec, inc))
}

/// IR composition: inserts into `right` (see [`ir_insert`]), then places the
/// result right after `a = ir(left)`, below `a` in the final forest and, if
/// `a` had an increasing parent, below that parent in the initial forest.
pub fn ir_compose(t: &IrTriple) -> Result<IntervalPoset, DecompError> {
    let block = ir_insert(&t.right, t.r)?;
    if t.left.is_empty() {
        return Ok(block);
    }
    let n1 = t.left.size();
    let m = block.size();
    let a = t.left.stat_ir();
    let place = |v: usize| if v <= a { v } else { v + m };
    let above_block = (a != n1).then_some(a + 1 + m);

    let mut dec = Vec::with_capacity(n1 + m);
    let mut inc = Vec::with_capacity(n1 + m);
    for v in 1..=a {
        dec.push(t.left.dec_parent(v).map(place));
        inc.push(t.left.inc_parent(v).map(place));
    }
    for w in 1..=m {
        dec.push(shift(block.dec_parent(w), a).or(Some(a)));
        inc.push(shift(block.inc_parent(w), a).or(above_block));
    }
    for v in a + 1..=n1 {
        dec.push(t.left.dec_parent(v).map(place));
        inc.push(t.left.inc_parent(v).map(place));
    }
    Ok(IntervalPoset::from_covers(dec, inc))
}

/// Undoes [`ir_insert`] given the label `k` of the inserted vertex.
fn ir_remove(block: &IntervalPoset, k: usize) -> Option<IntervalPoset> {
    let m = block.size();
    if !block.dec_children(k).is_empty() || block.inc_parents().contains(&Some(k)) {
        return None;
    }
    let down = |v: usize| if v > k { v - 1 } else { v };
    let inc = (1..=m)
        .filter(|&v| v != k)
        .map(|v| block.inc_parent(v).map(down))
        .collect();
    let mut counts = block.dec_forest().child_counts();
    counts.remove(k - 1);
    let dec = PlanarForest::from_child_counts(&counts)
        .ok()?
        .parents()
        .to_vec();
    Some(IntervalPoset::from_covers(dec, inc))
}

fn is_valid(p: &IntervalPoset) -> bool {
    IntervalPoset::validate(p.size(), &p.cover_relations()).as_ref() == Ok(p)
}

/// Tries to read `i` as an IR composition whose merge vertex is `a`
/// (`a = 0` meaning an empty left part).
fn ir_candidate(i: &IntervalPoset, a: usize) -> Option<IrTriple> {
    let n = i.size();
    let ir = i.stat_ir();
    let end = if a == 0 {
        n
    } else {
        i.inc_parent(a).map_or(n, |b| b - 1)
    };
    if end < ir || (a > 0 && !i.precedes(end, a)) {
        return None;
    }
    let block = i.restrict(a + 1, end);
    let k = ir - a;
    if block.stat_ir() != k {
        return None;
    }
    let right = ir_remove(&block, k)?;
    let right_ir = right.stat_ir();
    if k > right_ir + 1 || !is_valid(&right) {
        return None;
    }

    let m = block.size();
    let keep = |v: usize| v <= a || v > end;
    let squeeze = |p: usize| if p > end { p - m } else { p };
    let mut dec = Vec::with_capacity(n - m);
    let mut inc = Vec::with_capacity(n - m);
    for v in (1..=n).filter(|&v| keep(v)) {
        dec.push(i.dec_parent(v).filter(|&p| keep(p)).map(squeeze));
        inc.push(i.inc_parent(v).filter(|&p| keep(p)).map(squeeze));
    }
    let left = IntervalPoset::from_covers(dec, inc);
    if !is_valid(&left) {
        return None;
    }

    let triple = IrTriple {
        left,
        right,
        r: right_ir + 1 - k,
    };
    (ir_compose(&triple).ok()? == *i).then_some(triple)
}

/// Every triple whose IR composition is `i`, largest merge vertex first.
///
/// The merge vertex is a final-forest ancestor of `ir(i)` (or absent), and
/// the inserted vertex sits at `ir(i)`; each such candidate is rebuilt and
/// checked against `i`.
pub fn ir_decompositions(i: &IntervalPoset) -> Vec<IrTriple> {
    let mut candidates = Vec::new();
    let mut v = i.stat_ir();
    while let Some(p) = i.dec_parent(v) {
        candidates.push(p);
        v = p;
    }
    candidates.push(0);
    candidates
        .into_iter()
        .filter_map(|a| ir_candidate(i, a))
        .collect()
}

/// Inverse of [`ir_compose`].
pub fn ir_decompose(i: &IntervalPoset) -> Result<IrTriple, DecompError> {
    if i.is_empty() {
        return Err(DecompError::EmptyPoset);
    }
    ir_decompositions(i)
        .into_iter()
        .next()
        .ok_or(DecompError::NoDecomposition)
}

/// `beta(I) = IR(beta(I1), beta(I2), r)` where `I = LC(I1, I2, r)`.
pub fn beta(i: &IntervalPoset) -> IntervalPoset {
    if i.is_empty() {
        return IntervalPoset::empty();
    }
    let t = lc_decompose(i).expect("nonempty");
    ir_compose(&IrTriple::new(beta(&t.left), beta(&t.right), t.r))
        .expect("trees(I2) = ir(beta(I2)) bounds r")
}

/// `beta_inverse(I) = LC(beta_inverse(I1), beta_inverse(I2), r)` where
/// `I = IR(I1, I2, r)`.
pub fn beta_inverse(i: &IntervalPoset) -> IntervalPoset {
    if i.is_empty() {
        return IntervalPoset::empty();
    }
    let t = ir_decompose(i).expect("every interval-poset has an IR decomposition");
    lc_compose(&LcTriple::new(
        beta_inverse(&t.left),
        beta_inverse(&t.right),
        t.r,
    ))
    .expect("ir(I2) = trees(beta_inverse(I2)) bounds r")
}
