//! Exponent vectors, the fixed monomial order, and the apolarity pairing.
//!
//! Monomials are ordered by total degree first; within a degree the vector
//! with the larger exponent at the first differing position comes first, so
//! `enumerate_monomials(3, 2)` yields `u1^2, u1*u2, u1*u3, u2^2, u2*u3, u3^2`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::MonomialError;

/// Exponent vector over a fixed number of variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial {
    exps: Vec<u32>,
}

/// Monomial in the `u` variables.
pub type UMonomial = Monomial;

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Self { exps }
    }

    /// The constant monomial `1` in `nvars` variables.
    pub fn one(nvars: usize) -> Self {
        Self {
            exps: vec![0; nvars],
        }
    }

    /// The variable at 0-based position `k`, raised to `power`.
    pub fn var_power(nvars: usize, k: usize, power: u32) -> Self {
        let mut exps = vec![0; nvars];
        exps[k] = power;
        Self { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_square_free(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// 0-based indices of the variables that occur.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(k, _)| k)
            .collect()
    }

    fn check_same(&self, other: &Self) -> Result<(), MonomialError> {
        if self.nvars() == other.nvars() {
            Ok(())
        } else {
            Err(MonomialError::DimensionMismatch {
                left: self.nvars(),
                right: other.nvars(),
            })
        }
    }

    /// Componentwise `self <= other`.
    ///
    /// Panics if the variable counts differ; see [`Monomial::try_divides`].
    pub fn divides(&self, other: &Self) -> bool {
        self.try_divides(other)
            .expect("monomials over different rings")
    }

    pub fn try_divides(&self, other: &Self) -> Result<bool, MonomialError> {
        self.check_same(other)?;
        Ok(self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b))
    }

    /// Componentwise minimum. Panics if the variable counts differ.
    pub fn gcd(&self, other: &Self) -> Self {
        self.try_gcd(other).expect("monomials over different rings")
    }

    pub fn try_gcd(&self, other: &Self) -> Result<Self, MonomialError> {
        self.check_same(other)?;
        Ok(Self {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        })
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(
            self.nvars(),
            other.nvars(),
            "monomials over different rings"
        );
        Self {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Self) -> Option<Self> {
        if !other.divides(self) {
            return None;
        }
        Some(Self {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Render with the given variable prefix; `base` is the index of the
    /// first variable (0 for `x`, 1 for `u`).
    pub fn render(&self, prefix: &str, base: usize) -> String {
        let factors: Vec<String> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(k, &e)| {
                if e == 1 {
                    format!("{prefix}{}", k + base)
                } else {
                    format!("{prefix}{}^{e}", k + base)
                }
            })
            .collect();
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("*")
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("u", 1))
    }
}

/// All monomials of degree `d` in `m` variables, in the fixed monomial order.
pub fn enumerate_monomials(m: usize, d: u32) -> Result<Vec<Monomial>, MonomialError> {
    if m == 0 {
        return if d == 0 {
            Ok(vec![Monomial::one(0)])
        } else {
            Err(MonomialError::EmptyDomain { degree: d })
        };
    }
    let mut out = Vec::new();
    let mut current = vec![0u32; m];
    fill(&mut current, 0, d, &mut out);
    Ok(out)
}

fn fill(current: &mut [u32], pos: usize, remaining: u32, out: &mut Vec<Monomial>) {
    if pos + 1 == current.len() {
        current[pos] = remaining;
        out.push(Monomial::new(current.to_vec()));
        current[pos] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        current[pos] = e;
        fill(current, pos + 1, remaining - e, out);
    }
    current[pos] = 0;
}

/// Degree-`j` monomials dividing `g`, in the fixed order. Empty when `j > deg g`.
pub fn divisors_of_degree(g: &Monomial, j: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    if j > g.degree() {
        return out;
    }
    let mut current = vec![0u32; g.nvars()];
    bounded_fill(g.exps(), &mut current, 0, j, &mut out);
    out
}

fn bounded_fill(
    bound: &[u32],
    current: &mut [u32],
    pos: usize,
    remaining: u32,
    out: &mut Vec<Monomial>,
) {
    if pos == bound.len() {
        if remaining == 0 {
            out.push(Monomial::new(current.to_vec()));
        }
        return;
    }
    let tail: u32 = bound[pos + 1..].iter().sum();
    let hi = bound[pos].min(remaining);
    let lo = remaining.saturating_sub(tail);
    for e in (lo..=hi).rev() {
        current[pos] = e;
        bounded_fill(bound, current, pos + 1, remaining - e, out);
    }
    current[pos] = 0;
}

/// Monomial in both variable groups: `x0..xn` and `u1..um`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BiMonomial {
    pub x: Monomial,
    pub u: Monomial,
}

impl BiMonomial {
    pub fn new(x: Monomial, u: Monomial) -> Self {
        Self { x, u }
    }

    pub fn bidegree(&self) -> (u32, u32) {
        (self.x.degree(), self.u.degree())
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self {
            x: self.x.mul(&other.x),
            u: self.u.mul(&other.u),
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.x.divides(&other.x) && self.u.divides(&other.u)
    }

    pub fn div(&self, other: &Self) -> Option<Self> {
        Some(Self {
            x: self.x.div(&other.x)?,
            u: self.u.div(&other.u)?,
        })
    }

    fn render(&self, xs: &str, us: &str) -> String {
        match (self.x.is_one(), self.u.is_one()) {
            (true, true) => "1".to_string(),
            (false, true) => self.x.render(xs, 0),
            (true, false) => self.u.render(us, 1),
            (false, false) => format!("{}*{}", self.x.render(xs, 0), self.u.render(us, 1)),
        }
    }

    /// Lower-case rendering, as an element of the polynomial ring.
    pub fn to_poly_string(&self) -> String {
        self.render("x", "u")
    }

    /// Upper-case rendering, as a differential operator.
    pub fn to_operator_string(&self) -> String {
        self.render("X", "U")
    }
}

impl Ord for BiMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (self.bidegree(), other.bidegree());
        (a.0 + a.1)
            .cmp(&(b.0 + b.1))
            .then_with(|| self.x.cmp(&other.x))
            .then_with(|| self.u.cmp(&other.u))
    }
}

impl PartialOrd for BiMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All bihomogeneous monomials of bidegree `(i, j)` in `nx` x-variables and
/// `m` u-variables, x-part major.
pub fn enumerate_bimonomials(nx: usize, m: usize, i: u32, j: u32) -> Vec<BiMonomial> {
    let xs = enumerate_monomials(nx, i).unwrap_or_default();
    let us = enumerate_monomials(m, j).unwrap_or_default();
    let mut out = Vec::with_capacity(xs.len() * us.len());
    for x in &xs {
        for u in &us {
            out.push(BiMonomial::new(x.clone(), u.clone()));
        }
    }
    out
}

/// How an operator monomial acts on a polynomial monomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PairingAction {
    /// `X^a ∘ x^b = x^(b-a)` with coefficient 1.
    #[default]
    Contraction,
    /// `X_i = ∂/∂x_i`; the coefficient is a product of falling factorials.
    Differentiation,
}

impl PairingAction {
    pub fn name(self) -> &'static str {
        match self {
            PairingAction::Contraction => "contraction",
            PairingAction::Differentiation => "differentiation",
        }
    }

    /// Coefficient of `op` acting on `target` within one variable group;
    /// zero unless `op` divides `target`.
    pub fn coefficient(self, op: &Monomial, target: &Monomial) -> BigInt {
        if !op.divides(target) {
            return BigInt::zero();
        }
        match self {
            PairingAction::Contraction => BigInt::one(),
            PairingAction::Differentiation => op
                .exps()
                .iter()
                .zip(target.exps())
                .map(|(&a, &b)| falling_factorial(b, a))
                .product(),
        }
    }
}

impl std::str::FromStr for PairingAction {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "contraction" => Ok(PairingAction::Contraction),
            "differentiation" => Ok(PairingAction::Differentiation),
            other => Err(format!(
                "unknown action `{other}` (expected contraction or differentiation)"
            )),
        }
    }
}

/// `b (b-1) ... (b-a+1)`.
fn falling_factorial(b: u32, a: u32) -> BigInt {
    (0..a).map(|t| BigInt::from(b - t)).product()
}

/// Coefficient `c` with `op(target) = c · (target / op)`, or zero.
pub fn apply(action: PairingAction, op: &BiMonomial, target: &BiMonomial) -> BigInt {
    let cx = action.coefficient(&op.x, &target.x);
    if cx.is_zero() {
        return cx;
    }
    cx * action.coefficient(&op.u, &target.u)
}
