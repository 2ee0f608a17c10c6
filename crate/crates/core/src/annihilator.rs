//! Generators of `Ann(f)` read off from the face model.
//!
//! The generators come in six families:
//!
//! 1. `X_i X_j` for `i < j`, and `X_k^(d1+1)`;
//! 2. every `U`-monomial of degree `d2 + 1` (kept symbolic until expanded);
//! 3. `U^w` for each minimal non-face `w`;
//! 4. `X_s U_k` for each variable `u_k` not dividing `g_s`;
//! 5. `X_s U^w` for each higher-degree minimal non-divisor `w` of `g_s`;
//! 6. for each pair `r < s` with `g_r = rho * gcd`, `g_s = sigma * gcd`, the
//!    binomial `c_s X_r^d1 U^rho - c_r X_s^d1 U^sigma` where `c_r` is the
//!    coefficient of `U^rho` acting on `g_r` (both are 1 under contraction).

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::face::{FaceModel, NagataInput};
use crate::monomial::{enumerate_monomials, BiMonomial, Monomial, PairingAction};
use crate::oracle;
use crate::poly::Polynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Item {
    XProduct,
    UPower,
    NonFace,
    MissingVariable,
    NonDivisor,
    Binomial,
}

impl Item {
    pub const ALL: [Item; 6] = [
        Item::XProduct,
        Item::UPower,
        Item::NonFace,
        Item::MissingVariable,
        Item::NonDivisor,
        Item::Binomial,
    ];

    /// Family number 1 through 6.
    pub fn number(self) -> u8 {
        self as u8 + 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Body {
    Terms(Vec<(BigInt, BiMonomial)>),
    /// All `U`-monomials of the given degree.
    UPower(u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub item: Item,
    pub body: Body,
}

impl Generator {
    fn monomial(item: Item, mono: BiMonomial) -> Self {
        Self {
            item,
            body: Body::Terms(vec![(BigInt::one(), mono)]),
        }
    }

    pub fn bidegree(&self) -> (u32, u32) {
        match &self.body {
            Body::Terms(t) => t[0].1.bidegree(),
            Body::UPower(d) => (0, *d),
        }
    }

    pub fn terms(&self) -> Option<&[(BigInt, BiMonomial)]> {
        match &self.body {
            Body::Terms(t) => Some(t),
            Body::UPower(_) => None,
        }
    }

    /// The single monomial of a one-term generator.
    pub fn as_monomial(&self) -> Option<&BiMonomial> {
        match &self.body {
            Body::Terms(t) if t.len() == 1 => Some(&t[0].1),
            _ => None,
        }
    }

    pub fn to_polynomial(&self) -> Option<Polynomial> {
        let mut p = Polynomial::zero();
        for (c, mono) in self.terms()? {
            p.add_term(mono.clone(), BigRational::from_integer(c.clone()));
        }
        Some(p)
    }

    /// Monomial generators of item 2 are expanded; everything else is cloned.
    fn expand(&self, nx: usize, m: usize) -> Vec<Generator> {
        match &self.body {
            Body::Terms(_) => vec![self.clone()],
            Body::UPower(d) => enumerate_monomials(m, *d)
                .unwrap_or_default()
                .into_iter()
                .map(|u| Generator::monomial(Item::UPower, BiMonomial::new(Monomial::one(nx), u)))
                .collect(),
        }
    }

    /// Sort key for minimalization: total degree, then leading monomial.
    fn order_key(&self) -> (u32, Option<BiMonomial>) {
        let (a, b) = self.bidegree();
        (a + b, self.terms().map(|t| t[0].1.clone()))
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.body {
            Body::UPower(d) => write!(f, "(U)^{d}"),
            Body::Terms(terms) => {
                for (k, (c, mono)) in terms.iter().enumerate() {
                    let body = mono.to_operator_string();
                    let mag = c.abs();
                    let scaled = if mag.is_one() {
                        body
                    } else {
                        format!("{mag}*{body}")
                    };
                    match (k, c.is_negative()) {
                        (0, false) => write!(f, "{scaled}")?,
                        (0, true) => write!(f, "-{scaled}")?,
                        (_, false) => write!(f, " + {scaled}")?,
                        (_, true) => write!(f, " - {scaled}")?,
                    }
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    pub generators: Vec<Generator>,
    pub action: PairingAction,
    pub minimalized: bool,
    /// Number of `x` variables.
    pub nx: usize,
    pub m: usize,
}

impl GeneratorSet {
    pub fn empty(input: &NagataInput) -> Self {
        Self {
            generators: Vec::new(),
            action: input.action(),
            minimalized: false,
            nx: input.n_terms(),
            m: input.m(),
        }
    }

    pub fn by_item(&self, item: Item) -> impl Iterator<Item = &Generator> {
        self.generators.iter().filter(move |g| g.item == item)
    }

    /// Copy with every symbolic power replaced by its monomials.
    pub fn expanded(&self) -> GeneratorSet {
        GeneratorSet {
            generators: self
                .generators
                .iter()
                .flat_map(|g| g.expand(self.nx, self.m))
                .collect(),
            ..self.clone()
        }
    }

    /// One generator per line, `*` for products and `^` for powers.
    pub fn to_plain_text(&self) -> String {
        let mut out = String::new();
        for g in &self.expanded().generators {
            out.push_str(&g.to_string());
            out.push('\n');
        }
        out
    }
}

pub fn build_generators(input: &NagataInput, model: &FaceModel) -> GeneratorSet {
    let nx = input.n_terms();
    let m = input.m();
    let d1 = input.d1();
    let one_u = Monomial::one(m);
    let x_power = |r: usize, e: u32| Monomial::var_power(nx, r, e);
    let mut gens = Vec::new();

    for i in 0..nx {
        for j in i + 1..nx {
            let x = x_power(i, 1).mul(&x_power(j, 1));
            gens.push(Generator::monomial(
                Item::XProduct,
                BiMonomial::new(x, one_u.clone()),
            ));
        }
    }
    for k in 0..nx {
        gens.push(Generator::monomial(
            Item::XProduct,
            BiMonomial::new(x_power(k, d1 + 1), one_u.clone()),
        ));
    }

    gens.push(Generator {
        item: Item::UPower,
        body: Body::UPower(input.d2() + 1),
    });

    for w in model.minimal_nonfaces() {
        gens.push(Generator::monomial(
            Item::NonFace,
            BiMonomial::new(Monomial::one(nx), w),
        ));
    }

    for s in 0..nx {
        for w in model.minimal_nondivisors(s).expect("index in range") {
            let item = if w.degree() == 1 {
                Item::MissingVariable
            } else {
                Item::NonDivisor
            };
            gens.push(Generator::monomial(item, BiMonomial::new(x_power(s, 1), w)));
        }
    }

    let action = input.action();
    for r in 0..nx {
        for s in r + 1..nx {
            let (_, rho, sigma) = model.pair_cofactors(r, s).expect("distinct indices");
            let c_r = action.coefficient(&rho, &input.facets()[r]);
            let c_s = action.coefficient(&sigma, &input.facets()[s]);
            gens.push(Generator {
                item: Item::Binomial,
                body: Body::Terms(vec![
                    (c_s, BiMonomial::new(x_power(r, d1), rho)),
                    (-c_r, BiMonomial::new(x_power(s, d1), sigma)),
                ]),
            });
        }
    }

    GeneratorSet {
        generators: gens,
        action,
        minimalized: false,
        nx,
        m,
    }
}

/// Drop every generator lying in the span, at its own bidegree, of the
/// multiples of generators kept before it. Candidates are visited by total
/// degree and then by leading monomial, so the result is deterministic.
pub fn minimalize(gens: &GeneratorSet) -> GeneratorSet {
    let mut candidates = gens.expanded().generators;
    candidates.sort_by_key(Generator::order_key);
    let mut kept: Vec<Generator> = Vec::new();
    for cand in candidates {
        if !oracle::in_ideal_span(&kept, &cand, gens.nx, gens.m) {
            kept.push(cand);
        }
    }
    // present in family order, stable within a family
    kept.sort_by_key(|g| g.item);
    GeneratorSet {
        generators: kept,
        minimalized: true,
        ..gens.clone()
    }
}

/// A generator that does not kill `f`, with what it leaves behind.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Residue {
    pub index: usize,
    pub generator: String,
    pub residue: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnnihilationReport {
    pub action: PairingAction,
    pub checked: usize,
    pub failures: Vec<Residue>,
}

impl AnnihilationReport {
    pub fn all_pass(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn render_polynomial(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (mono, c)) in p.terms().iter().enumerate() {
        let mag = c.abs();
        let body = if mag.is_one() {
            mono.to_poly_string()
        } else {
            format!("{mag}*{}", mono.to_poly_string())
        };
        match (k, c.is_negative()) {
            (0, false) => out.push_str(&body),
            (0, true) => out.push_str(&format!("-{body}")),
            (_, false) => out.push_str(&format!(" + {body}")),
            (_, true) => out.push_str(&format!(" - {body}")),
        }
    }
    out
}

/// Apply each generator to `f` under the set's action.
pub fn verify_annihilation(gens: &GeneratorSet, input: &NagataInput) -> AnnihilationReport {
    let f = Polynomial::of_input(input);
    let mut failures = Vec::new();
    for (index, g) in gens.generators.iter().enumerate() {
        let residue = match g.to_polynomial() {
            Some(op) => op.apply_to(gens.action, &f),
            // u-degree d2 + 1 exceeds every term of f
            None if g.bidegree().1 > input.d2() => Polynomial::zero(),
            None => {
                let mut total = Polynomial::zero();
                for e in g.expand(gens.nx, gens.m) {
                    for (mono, c) in e.to_polynomial().unwrap().apply_to(gens.action, &f).terms() {
                        total.add_term(mono.clone(), c.clone());
                    }
                }
                total
            }
        };
        if !residue.is_zero() {
            failures.push(Residue {
                index,
                generator: g.to_string(),
                residue: render_polynomial(&residue),
            });
        }
    }
    AnnihilationReport {
        action: gens.action,
        checked: gens.generators.len(),
        failures,
    }
}
