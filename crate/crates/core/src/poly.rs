//! Exact integer polynomials.
//!
//! [`TriPoly`] is a sparse polynomial in the three variables `y`, `x`, `z`
//! (size, trees and initial rise when it holds a generating function of
//! intervals). [`UniPoly`] is a univariate polynomial in `u`, used for the
//! open-flow series after substituting `u = 1/(1-t)`.
//!
//! Coefficients are [`BigInt`]s and zero coefficients are never stored, so
//! structural equality is mathematical equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomial does not vanish at x = 1, cannot divide by (x - 1)")]
    NotDivisible,
    #[error("variable `{0}` cannot be set to 1 here")]
    UnsupportedVariable(Var),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    Y,
    X,
    Z,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Var::Y => "y",
            Var::X => "x",
            Var::Z => "z",
        })
    }
}

impl std::str::FromStr for Var {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "y" => Ok(Var::Y),
            "x" => Ok(Var::X),
            "z" => Ok(Var::Z),
            other => Err(PolyError::UnknownVariable(other.to_string())),
        }
    }
}

/// Exponent triple `(a, b, c)` of the monomial `y^a x^b z^c`.
pub type Exponents = (u32, u32, u32);

/// Sparse polynomial in `y`, `x`, `z` with arbitrary-precision integer
/// coefficients. Terms are kept in lexicographic order of `(a, b, c)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct TriPoly {
    terms: BTreeMap<Exponents, BigInt>,
}

impl TriPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, (0, 0, 0))
    }

    pub fn monomial(coeff: impl Into<BigInt>, exps: Exponents) -> Self {
        let mut p = Self::zero();
        p.add_term(exps, coeff.into());
        p
    }

    pub fn var(v: Var) -> Self {
        let exps = match v {
            Var::Y => (1, 0, 0),
            Var::X => (0, 1, 0),
            Var::Z => (0, 0, 1),
        };
        Self::monomial(1, exps)
    }

    /// Builds a polynomial from `(coefficient, exponents)` pairs, merging
    /// repeated monomials.
    pub fn from_terms<C, I>(terms: I) -> Self
    where
        C: Into<BigInt>,
        I: IntoIterator<Item = (C, Exponents)>,
    {
        let mut p = Self::zero();
        for (c, e) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn add_term(&mut self, exps: Exponents, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: Exponents) -> BigInt {
        self.terms.get(&exps).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    /// Highest power of `y` present, `None` for the zero polynomial.
    pub fn y_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.0).max()
    }

    /// The part of `self` whose `y` exponent equals `a`.
    pub fn y_layer(&self, a: u32) -> TriPoly {
        let terms = self
            .terms
            .range((a, 0, 0)..=(a, u32::MAX, u32::MAX))
            .map(|(e, c)| (*e, c.clone()))
            .collect();
        TriPoly { terms }
    }

    /// Drops every term of `y` degree above `max_a`.
    pub fn truncate_y(&self, max_a: u32) -> TriPoly {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e.0 <= max_a)
            .map(|(e, c)| (*e, c.clone()))
            .collect();
        TriPoly { terms }
    }

    /// Exchanges the exponents of `x` and `z`.
    pub fn swap_xz(&self) -> TriPoly {
        let terms = self
            .terms
            .iter()
            .map(|(&(a, b, c), k)| ((a, c, b), k.clone()))
            .collect();
        TriPoly { terms }
    }

    /// Sum of all coefficients of the `y^a` layer.
    pub fn layer_sum(&self, a: u32) -> BigInt {
        self.y_layer(a).terms.values().sum()
    }

    /// Sets `x` or `z` to 1 and merges like terms.
    pub fn substitute_one(&self, var: Var) -> Result<TriPoly, PolyError> {
        let mut out = TriPoly::zero();
        for (&(a, b, c), k) in &self.terms {
            let e = match var {
                Var::X => (a, 0, c),
                Var::Z => (a, b, 0),
                // Truncated series in y cannot be evaluated at y = 1.
                Var::Y => return Err(PolyError::UnsupportedVariable(Var::Y)),
            };
            out.add_term(e, k.clone());
        }
        Ok(out)
    }

    /// Exact quotient by `(x - 1)`.
    ///
    /// Each `(a, c)` slice is a univariate polynomial in `x`; the slice is
    /// divided by synthetic division from the top degree down. Fails with
    /// [`PolyError::NotDivisible`] if some slice does not vanish at `x = 1`.
    pub fn div_x_minus_1(&self) -> Result<TriPoly, PolyError> {
        let mut slices: BTreeMap<(u32, u32), BTreeMap<u32, &BigInt>> = BTreeMap::new();
        for (&(a, b, c), k) in &self.terms {
            slices.entry((a, c)).or_default().insert(b, k);
        }
        let mut out = TriPoly::zero();
        for ((a, c), slice) in slices {
            // p_b = q_{b-1} - q_b  =>  q_{b-1} = p_b + q_b, starting from the top.
            let top = *slice.keys().next_back().expect("slices are nonempty");
            let mut carry = BigInt::zero();
            for b in (1..=top).rev() {
                if let Some(p) = slice.get(&b) {
                    carry += *p;
                }
                out.add_term((a, b - 1, c), carry.clone());
            }
            if let Some(p0) = slice.get(&0) {
                carry += *p0;
            }
            if !carry.is_zero() {
                return Err(PolyError::NotDivisible);
            }
        }
        Ok(out)
    }
}

impl Add for &TriPoly {
    type Output = TriPoly;

    fn add(self, rhs: &TriPoly) -> TriPoly {
        let mut out = self.clone();
        for (e, k) in &rhs.terms {
            out.add_term(*e, k.clone());
        }
        out
    }
}

impl Add for TriPoly {
    type Output = TriPoly;

    fn add(self, rhs: TriPoly) -> TriPoly {
        &self + &rhs
    }
}

impl Neg for &TriPoly {
    type Output = TriPoly;

    fn neg(self) -> TriPoly {
        let terms = self.terms.iter().map(|(e, k)| (*e, -k)).collect();
        TriPoly { terms }
    }
}

impl Sub for &TriPoly {
    type Output = TriPoly;

    fn sub(self, rhs: &TriPoly) -> TriPoly {
        self + &(-rhs)
    }
}

impl Sub for TriPoly {
    type Output = TriPoly;

    fn sub(self, rhs: TriPoly) -> TriPoly {
        &self - &rhs
    }
}

impl Mul for &TriPoly {
    type Output = TriPoly;

    fn mul(self, rhs: &TriPoly) -> TriPoly {
        let mut out = TriPoly::zero();
        for (&(a1, b1, c1), k1) in &self.terms {
            for (&(a2, b2, c2), k2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2, c1 + c2), k1 * k2);
            }
        }
        out
    }
}

impl Mul for TriPoly {
    type Output = TriPoly;

    fn mul(self, rhs: TriPoly) -> TriPoly {
        &self * &rhs
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, var: &str, exp: u32) -> fmt::Result {
    match exp {
        0 => Ok(()),
        1 => write!(f, "*{var}"),
        e => write!(f, "*{var}^{e}"),
    }
}

/// Renders `<coeff>*y^a*x^b*z^c` terms joined by `+` in lexicographic order.
/// Exponent 1 is omitted, exponent 0 drops the variable, and the zero
/// polynomial renders as `0`.
impl fmt::Display for TriPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (&(a, b, c), k)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{k}")?;
            write_power(f, "y", a)?;
            write_power(f, "x", b)?;
            write_power(f, "z", c)?;
        }
        Ok(())
    }
}

/// Univariate polynomial in `u` with integer coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: BTreeMap<u32, BigInt>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(coeff: impl Into<BigInt>, exp: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff.into());
        p
    }

    pub fn add_term(&mut self, exp: u32, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: u32) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&u32, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Sum of the coefficients, i.e. the value at `u = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Coefficient of `t^k` once `u` is replaced by `1/(1-t)`:
    /// `u^r` contributes `C(k + r - 1, r - 1)` (and `[k = 0]` for `r = 0`).
    pub fn series_coeff(&self, k: u64) -> BigInt {
        self.coeffs
            .iter()
            .map(|(&r, c)| {
                let m = if r == 0 {
                    BigUint::from(u8::from(k == 0))
                } else {
                    binomial(k + u64::from(r) - 1, i64::from(r) - 1)
                };
                c * BigInt::from(m)
            })
            .sum()
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;

    fn add(self, rhs: &UniPoly) -> UniPoly {
        let mut out = self.clone();
        for (e, k) in &rhs.coeffs {
            out.add_term(*e, k.clone());
        }
        out
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;

    fn mul(self, rhs: &UniPoly) -> UniPoly {
        let mut out = UniPoly::zero();
        for (e1, k1) in &self.coeffs {
            for (e2, k2) in &rhs.coeffs {
                out.add_term(e1 + e2, k1 * k2);
            }
        }
        out
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (&e, k)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{k}")?;
            write_power(f, "u", e)?;
        }
        Ok(())
    }
}

/// Exact binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > n {
        return BigUint::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigUint::one();
    for i in 0..k {
        // acc = C(n, i) here; C(n, i+1) = C(n, i) * (n - i) / (i + 1) exactly.
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}
