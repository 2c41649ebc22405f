//! Exhaustive checks of the enumerative identities: interval counts, the
//! generating function `Phi(y; x, z)` and its functional equations, the
//! properties of `beta`, and the closed-flow theorem.

use std::collections::HashSet;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::bijection::{beta, beta_inverse, lc_compose, LcTriple};
use crate::catalan::{dec_forest_of_tree, enumerate_trees, PlanarForest};
use crate::flows::{
    enumerate_closed_flows, enumerate_flows_with_exit, flow_to_interval_poset, forest_to_upper_tree,
};
use crate::interval::{tamari_leq, IntervalPoset};
use crate::poly::{binomial, PolyError, TriPoly, UniPoly, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("count formula is not an integer at n = {0}")]
    NonIntegerResult(usize),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SizeReport {
    pub n: usize,
    pub enumerated: BigUint,
    pub formula: BigUint,
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaReport {
    pub n: usize,
    pub count: usize,
    /// `beta` keeps the size and exchanges `trees` and `ir` on every poset.
    pub swaps_statistics: bool,
    pub injective: bool,
    /// `beta(beta(I)) = I` for every poset.
    pub involution: bool,
    /// Recursive IR decomposition followed by LC recomposition agrees with
    /// `beta` on every poset.
    pub ir_then_lc_is_beta: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowTheoremReport {
    pub forest: PlanarForest,
    pub closed_flows: usize,
    pub ideal_size: usize,
}

/// Interval-posets of every size `0..=max_n`, generated through the LC
/// decomposition: for each size split `n1 + n2 + 1`, every `I1`, every `I2`
/// and every `0 <= r <= trees(I2)`, in that nesting order.
pub fn interval_posets_up_to(max_n: usize) -> Vec<Vec<IntervalPoset>> {
    let mut table: Vec<Vec<IntervalPoset>> = vec![vec![IntervalPoset::empty()]];
    for n in 1..=max_n {
        let mut level = Vec::new();
        for n1 in 0..n {
            for left in &table[n1] {
                for right in &table[n - 1 - n1] {
                    for r in 0..=right.stat_trees() {
                        let t = LcTriple::new(left.clone(), right.clone(), r);
                        level.push(lc_compose(&t).expect("r is in range"));
                    }
                }
            }
        }
        table.push(level);
    }
    table
}

pub fn enumerate_interval_posets(n: usize) -> Vec<IntervalPoset> {
    interval_posets_up_to(n).swap_remove(n)
}

/// `2 / (n (n + 1)) * binomial(4n + 1, n - 1)`, with `1` for the empty
/// interval at `n = 0`.
pub fn count_formula(n: usize) -> Result<BigUint, VerifyError> {
    if n == 0 {
        return Ok(BigUint::from(1u32));
    }
    let num = binomial(4 * n as u64 + 1, n as i64 - 1) * 2u32;
    let den = BigUint::from(n) * BigUint::from(n + 1);
    if !(&num % &den).is_zero() {
        return Err(VerifyError::NonIntegerResult(n));
    }
    Ok(num / den)
}

pub fn size_reports(max_n: usize) -> Result<Vec<SizeReport>, VerifyError> {
    let table = interval_posets_up_to(max_n);
    (1..=max_n)
        .map(|n| {
            let enumerated = BigUint::from(table[n].len());
            let formula = count_formula(n)?;
            Ok(SizeReport {
                n,
                matches: enumerated == formula,
                enumerated,
                formula,
            })
        })
        .collect()
}

/// `sum y^size x^trees z^ir` over the given posets.
pub fn phi_of<'a>(posets: impl IntoIterator<Item = &'a IntervalPoset>) -> TriPoly {
    let mut out = TriPoly::zero();
    for p in posets {
        let s = p.stats();
        out.add_term((s.size as u32, s.trees as u32, s.ir as u32), 1.into());
    }
    out
}

/// Truncation of `Phi(y; x, z)` to sizes `<= max_n`.
pub fn phi(max_n: usize) -> TriPoly {
    phi_of(interval_posets_up_to(max_n).iter().flatten())
}

pub fn check_symmetry(max_n: usize) -> bool {
    let p = phi(max_n);
    p.swap_xz() == p
}

fn mono(a: u32, b: u32, c: u32) -> TriPoly {
    TriPoly::monomial(1, (a, b, c))
}

/// Right-hand side of
/// `Phi = 1 + x y z Phi(y;x,1) (x Phi - Phi(y;1,z)) / (x - 1)`.
pub fn first_equation_rhs(p: &TriPoly, max_n: u32) -> Result<TriPoly, PolyError> {
    let inner = max_n.saturating_sub(1);
    let at_z1 = p.substitute_one(Var::Z)?.truncate_y(inner);
    let at_x1 = p.substitute_one(Var::X)?;
    let q = (&(&mono(0, 1, 0) * p) - &at_x1)
        .div_x_minus_1()?
        .truncate_y(inner);
    let rhs = TriPoly::one() + &(&mono(1, 1, 1) * &at_z1) * &q;
    Ok(rhs.truncate_y(max_n))
}

/// Right-hand side of
/// `Phi = 1 + x y z (x Phi - Phi(y;1,z)) / (x - 1)
///      + x y (Phi - 1) (x Phi(y;x,1) - Phi(y;1,1)) / (x - 1)`.
pub fn second_equation_rhs(p: &TriPoly, max_n: u32) -> Result<TriPoly, PolyError> {
    let inner = max_n.saturating_sub(1);
    let x = mono(0, 1, 0);
    let at_x1 = p.substitute_one(Var::X)?;
    let at_z1 = p.substitute_one(Var::Z)?;
    let at_11 = at_z1.substitute_one(Var::X)?;
    let q1 = (&(&x * p) - &at_x1).div_x_minus_1()?.truncate_y(inner);
    let q2 = (&(&x * &at_z1) - &at_11).div_x_minus_1()?.truncate_y(inner);
    let shifted = (p - &TriPoly::one()).truncate_y(inner);
    let rhs = TriPoly::one() + &mono(1, 1, 1) * &q1 + &(&mono(1, 1, 0) * &shifted) * &q2;
    Ok(rhs.truncate_y(max_n))
}

/// Whether the truncated `Phi` satisfies each functional equation up to
/// y-degree `max_n`.
pub fn check_functional_equations(max_n: usize) -> Result<(bool, bool), VerifyError> {
    let p = phi(max_n);
    let m = max_n as u32;
    Ok((
        first_equation_rhs(&p, m)? == p,
        second_equation_rhs(&p, m)? == p,
    ))
}

/// Properties of `beta` on every poset of size `1..=max_n`.
pub fn check_beta_involution(max_n: usize) -> Vec<BetaReport> {
    let table = interval_posets_up_to(max_n);
    (1..=max_n)
        .map(|n| {
            let posets = &table[n];
            let images: Vec<IntervalPoset> = posets.par_iter().map(beta).collect();
            let swaps_statistics = posets.iter().zip(&images).all(|(i, b)| {
                let (s, t) = (i.stats(), b.stats());
                s.size == t.size && s.trees == t.ir && s.ir == t.trees
            });
            let distinct: HashSet<&IntervalPoset> = images.iter().collect();
            let involution = posets
                .par_iter()
                .zip(images.par_iter())
                .all(|(i, b)| beta(b) == *i);
            let ir_then_lc_is_beta = posets
                .par_iter()
                .zip(images.par_iter())
                .all(|(i, b)| beta_inverse(i) == *b);
            BetaReport {
                n,
                count: posets.len(),
                swaps_statistics,
                injective: distinct.len() == posets.len(),
                involution,
                ir_then_lc_is_beta,
            }
        })
        .collect()
}

/// Every ordered forest on `n` nodes, as final forests of the binary trees
/// of size `n`.
pub fn enumerate_forests(n: usize) -> Vec<PlanarForest> {
    enumerate_trees(n).iter().map(dec_forest_of_tree).collect()
}

/// Number of binary trees below or equal to `t` in the Tamari order.
pub fn ideal_size(t: &crate::catalan::BinaryTree) -> usize {
    enumerate_trees(t.size())
        .iter()
        .filter(|s| tamari_leq(s, t).expect("same size"))
        .count()
}

/// Closed-flow count against Tamari ideal size for every forest with
/// `1..=max_size` nodes, ordered by size then tree enumeration order.
pub fn flow_theorem_reports(max_size: usize) -> Vec<FlowTheoremReport> {
    (1..=max_size)
        .flat_map(enumerate_forests)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|forest| FlowTheoremReport {
            closed_flows: enumerate_closed_flows(&forest).len(),
            ideal_size: ideal_size(&forest_to_upper_tree(&forest)),
            forest,
        })
        .collect()
}

pub fn check_flow_theorem(max_size: usize) -> bool {
    flow_theorem_reports(max_size)
        .iter()
        .all(|r| r.closed_flows == r.ideal_size)
}

/// `sum u^r_f` over the closed flows `f` of `forest`, with `r_f` the number
/// of final-forest trees of the associated interval-poset. Substituting
/// `u = 1 / (1 - t)` gives the generating series of all flows by exit rate.
pub fn flow_series(forest: &PlanarForest) -> UniPoly {
    let mut out = UniPoly::zero();
    for f in enumerate_closed_flows(forest) {
        let p = flow_to_interval_poset(&f).expect("enumerated flows are closed");
        out.add_term(p.stat_trees() as u32, 1.into());
    }
    out
}

/// For every forest with `1..=max_size` nodes and every `k <= max_k`, the
/// number of flows with exit rate `k` equals the `t^k` coefficient of the
/// flow series.
pub fn check_open_flow_series(max_size: usize, max_k: u64) -> bool {
    (1..=max_size)
        .flat_map(enumerate_forests)
        .collect::<Vec<_>>()
        .par_iter()
        .all(|forest| {
            let series = flow_series(forest);
            (0..=max_k).all(|k| {
                let expected = series.series_coeff(k).to_usize();
                expected == Some(enumerate_flows_with_exit(forest, k).len())
            })
        })
}
