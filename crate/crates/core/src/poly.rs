//! Sparse polynomials with rational coefficients, used both for elements of
//! `S = K[x, u]` and for operators in `T = K[X, U]`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use crate::face::NagataInput;
use crate::monomial::{BiMonomial, PairingAction};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Polynomial {
    terms: BTreeMap<BiMonomial, BigRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(mono: BiMonomial) -> Self {
        let mut p = Self::zero();
        p.add_term(mono, BigRational::one());
        p
    }

    /// `f` itself: every term with coefficient 1.
    pub fn of_input(input: &NagataInput) -> Self {
        let mut p = Self::zero();
        for t in input.terms() {
            p.add_term(t, BigRational::one());
        }
        p
    }

    pub fn add_term(&mut self, mono: BiMonomial, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<BiMonomial, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Apply a single operator monomial to every term.
    pub fn apply_monomial(&self, action: PairingAction, op: &BiMonomial) -> Self {
        let mut out = Self::zero();
        for (t, c) in &self.terms {
            let k = crate::monomial::apply(action, op, t);
            if !k.is_zero() {
                out.add_term(t.div(op).unwrap(), c * BigRational::from_integer(k));
            }
        }
        out
    }

    /// Apply `self`, read as an operator in `T`, to `target`.
    pub fn apply_to(&self, action: PairingAction, target: &Polynomial) -> Self {
        let mut out = Self::zero();
        for (op, c) in &self.terms {
            for (t, v) in target.apply_monomial(action, op).terms {
                out.add_term(t, c * v);
            }
        }
        out
    }

    /// Product in the polynomial ring.
    pub fn mul(&self, other: &Polynomial) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.mul(b), ca * cb);
            }
        }
        out
    }

    /// Evaluate at `point = (x_0, ..., x_n, u_1, ..., u_m)`.
    pub fn evaluate(&self, point: &[BigRational]) -> BigRational {
        let mut total = BigRational::zero();
        for (mono, c) in &self.terms {
            let mut v = c.clone();
            for (coord, &e) in point.iter().zip(mono.x.exps().iter().chain(mono.u.exps())) {
                if e > 0 {
                    v *= Pow::pow(coord, e);
                }
            }
            total += v;
        }
        total
    }

    /// Coefficients along the given labels, scaled to integers.
    pub fn integer_coefficients(&self) -> BTreeMap<BiMonomial, BigInt> {
        let (keys, vals): (Vec<_>, Vec<_>) = self
            .terms
            .iter()
            .map(|(k, v)| (k.clone(), v.clone()))
            .unzip();
        let ints = crate::linalg::clear_denominators(&vals);
        keys.into_iter().zip(ints).collect()
    }
}
