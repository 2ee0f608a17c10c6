//! Weak and strong Lefschetz checks by exact rank computation.
//!
//! `A_t` is identified with `W_t = { alpha(f) : alpha in T_t }`, a subspace
//! of `S_(d-t)`, and multiplication by `L` on `A` becomes `w -> L(w)` on the
//! inverse system. Ranks are then ranks of explicit polynomial families.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::face::{FaceModel, NagataInput};
use crate::hilbert::basis_of;
use crate::linalg;
use crate::monomial::{enumerate_monomials, BiMonomial, Monomial};
use crate::poly::Polynomial;

/// Smallest number of random points behind a vanishing flag.
pub const MIN_HESSIAN_POINTS: usize = 10;

/// Height bound for random coefficients and point coordinates.
const HEIGHT: i64 = 9;

/// `a_0 X_0 + ... + a_n X_n + b_1 U_1 + ... + b_m U_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm {
    coefficients: Vec<BigRational>,
}

impl LinearForm {
    pub fn new(input: &NagataInput, coefficients: Vec<BigRational>) -> Result<Self> {
        let expected = input.n_terms() + input.m();
        if coefficients.len() != expected {
            return Err(Error::FormDimension {
                expected,
                found: coefficients.len(),
            });
        }
        if coefficients.iter().all(Zero::is_zero) {
            return Err(Error::ZeroForm);
        }
        Ok(Self { coefficients })
    }

    pub fn from_integers(input: &NagataInput, coefficients: &[i64]) -> Result<Self> {
        Self::new(
            input,
            coefficients
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    /// `X_0 + ... + X_n`.
    pub fn sum_of_x(input: &NagataInput) -> Self {
        let mut c = vec![BigRational::one(); input.n_terms()];
        c.resize(input.n_terms() + input.m(), BigRational::zero());
        Self { coefficients: c }
    }

    /// Nonzero integer coefficients in `[-9, 9]`.
    pub fn random(input: &NagataInput, rng: &mut ChaCha8Rng) -> Self {
        let c = (0..input.n_terms() + input.m())
            .map(|_| loop {
                let v = rng.random_range(-HEIGHT..=HEIGHT);
                if v != 0 {
                    break BigRational::from_integer(v.into());
                }
            })
            .collect();
        Self { coefficients: c }
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    /// The form as an element of `T`.
    pub fn to_operator(&self, input: &NagataInput) -> Polynomial {
        let (nx, m) = (input.n_terms(), input.m());
        let mut p = Polynomial::zero();
        for (k, c) in self.coefficients.iter().enumerate() {
            let mono = if k < nx {
                BiMonomial::new(Monomial::var_power(nx, k, 1), Monomial::one(m))
            } else {
                BiMonomial::new(Monomial::one(nx), Monomial::var_power(m, k - nx, 1))
            };
            p.add_term(mono, c.clone());
        }
        p
    }
}

impl Serialize for LinearForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coefficients.len()))?;
        for c in &self.coefficients {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

/// A random point `(x_0, ..., x_n, u_1, ..., u_m)` with coordinates `p/q`,
/// `p` in `[-9, 9]` and `q` in `[1, 9]`.
pub fn random_point(input: &NagataInput, rng: &mut ChaCha8Rng) -> Vec<BigRational> {
    (0..input.n_terms() + input.m())
        .map(|_| {
            let p = rng.random_range(-HEIGHT..=HEIGHT);
            let q = rng.random_range(1..=HEIGHT);
            BigRational::new(p.into(), q.into())
        })
        .collect()
}

/// `count` points from a generator seeded with `seed`.
pub fn random_points(input: &NagataInput, count: usize, seed: u64) -> Vec<Vec<BigRational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_point(input, &mut rng)).collect()
}

fn to_row(p: &Polynomial) -> BTreeMap<BiMonomial, BigInt> {
    p.integer_coefficients()
}

fn from_row(row: BTreeMap<BiMonomial, BigInt>) -> Polynomial {
    let mut p = Polynomial::zero();
    for (k, v) in row {
        p.add_term(k, BigRational::from_integer(v));
    }
    p
}

fn independent(polys: &[Polynomial]) -> Vec<Polynomial> {
    let rows: Vec<_> = polys.iter().filter(|p| !p.is_zero()).map(to_row).collect();
    linalg::row_basis(&rows).into_iter().map(from_row).collect()
}

/// Bases of `W_t` for every `t = 0..=d`.
#[derive(Debug, Clone)]
pub struct InverseSystem {
    input: NagataInput,
    bases: Vec<Vec<Polynomial>>,
}

impl InverseSystem {
    /// Only operators `X_s^i U^b` can be nonzero on `f`, since every term
    /// of `f` holds a single x-variable.
    pub fn new(input: &NagataInput) -> Self {
        let (nx, m) = (input.n_terms(), input.m());
        let (d1, d2) = (input.d1(), input.d2());
        let f = Polynomial::of_input(input);
        let bases = (0..=d1 + d2)
            .map(|t| {
                let mut span = Vec::new();
                for i in t.saturating_sub(d2)..=t.min(d1) {
                    let xs: Vec<Monomial> = if i == 0 {
                        vec![Monomial::one(nx)]
                    } else {
                        (0..nx).map(|s| Monomial::var_power(nx, s, i)).collect()
                    };
                    let us = enumerate_monomials(m, t - i).expect("m >= 1");
                    for x in &xs {
                        for u in &us {
                            let op = BiMonomial::new(x.clone(), u.clone());
                            span.push(f.apply_monomial(input.action(), &op));
                        }
                    }
                }
                independent(&span)
            })
            .collect();
        Self {
            input: input.clone(),
            bases,
        }
    }

    pub fn top(&self) -> u32 {
        self.input.degree()
    }

    pub fn dim(&self, t: u32) -> usize {
        self.bases.get(t as usize).map_or(0, Vec::len)
    }

    pub fn hilbert_vector(&self) -> Vec<usize> {
        self.bases.iter().map(Vec::len).collect()
    }

    /// `rank(L^k : A_deg -> A_(deg+k))` for `k = 0..=d-deg`.
    pub fn power_ranks(&self, form: &LinearForm, deg: u32) -> Result<Vec<usize>> {
        self.check_degree(deg)?;
        let op = form.to_operator(&self.input);
        let action = self.input.action();
        let mut current = self.bases[deg as usize].clone();
        let mut ranks = vec![current.len()];
        for _ in deg..self.top() {
            let image: Vec<Polynomial> = current.iter().map(|w| op.apply_to(action, w)).collect();
            current = independent(&image);
            ranks.push(current.len());
        }
        Ok(ranks)
    }

    /// `(rank, min(dim A_deg, dim A_(deg+k)))` for `L^k` on `A_deg`.
    pub fn multiplication_rank(
        &self,
        form: &LinearForm,
        k: u32,
        deg: u32,
    ) -> Result<(usize, usize)> {
        self.check_degree(deg + k)?;
        let rank = self.power_ranks(form, deg)?[k as usize];
        Ok((rank, self.dim(deg).min(self.dim(deg + k))))
    }

    fn check_degree(&self, t: u32) -> Result<()> {
        if t > self.top() {
            return Err(Error::Degree {
                degree: t,
                top: self.top(),
            });
        }
        Ok(())
    }

    /// Every `(deg, k)` with `k >= 1` and `deg + k <= d`.
    fn all_maps(&self, form: &LinearForm, powers: impl Fn(u32) -> u32) -> Result<Vec<MapRank>> {
        let mut out = Vec::new();
        for deg in 0..self.top() {
            let ranks = self.power_ranks(form, deg)?;
            for k in 1..=powers(deg).min(self.top() - deg) {
                let rank = ranks[k as usize];
                let max = self.dim(deg).min(self.dim(deg + k));
                out.push(MapRank {
                    degree: deg,
                    power: k,
                    rank,
                    max,
                    maximal: rank == max,
                });
            }
        }
        Ok(out)
    }
}

pub fn multiplication_rank(
    input: &NagataInput,
    form: &LinearForm,
    k: u32,
    deg: u32,
) -> Result<(usize, usize)> {
    InverseSystem::new(input).multiplication_rank(form, k, deg)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Property {
    Weak,
    Strong,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MapRank {
    pub degree: u32,
    pub power: u32,
    pub rank: usize,
    pub max: usize,
    pub maximal: bool,
}

/// Ranks of `hess^k` at sampled points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HessianEvidence {
    pub k: u32,
    pub size: usize,
    pub ranks: Vec<usize>,
    /// Some point gave full rank, so `hess^k` is not identically zero.
    pub nonvanishing_certified: bool,
    /// Deficient at every one of at least ten points. Probabilistic.
    pub vanishing_evidence: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LefschetzReport {
    pub property: Property,
    pub form: Option<LinearForm>,
    pub seed: Option<u64>,
    pub trials: Option<usize>,
    pub maps: Vec<MapRank>,
    pub verdict: bool,
    pub note: Option<String>,
    pub hessians: Vec<HessianEvidence>,
}

pub fn check_wlp(input: &NagataInput, form: &LinearForm) -> Result<LefschetzReport> {
    let system = InverseSystem::new(input);
    wlp_with(&system, form)
}

fn wlp_with(system: &InverseSystem, form: &LinearForm) -> Result<LefschetzReport> {
    let maps = system.all_maps(form, |_| 1)?;
    Ok(LefschetzReport {
        property: Property::Weak,
        form: Some(form.clone()),
        seed: None,
        trials: None,
        verdict: maps.iter().all(|m| m.maximal),
        maps,
        note: None,
        hessians: Vec::new(),
    })
}

/// Search `trials` random forms for a strong Lefschetz element. Without a
/// witness the report carries Hessian ranks for `k = 0..=d/2` at
/// `max(trials, 10)` random points.
pub fn check_slp(input: &NagataInput, trials: usize, seed: u64) -> Result<LefschetzReport> {
    if trials == 0 {
        return Err(Error::NoTrials);
    }
    let system = InverseSystem::new(input);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut first: Option<(LinearForm, Vec<MapRank>)> = None;
    for _ in 0..trials {
        let form = LinearForm::random(input, &mut rng);
        let maps = system.all_maps(&form, |_| u32::MAX)?;
        if maps.iter().all(|m| m.maximal) {
            return Ok(LefschetzReport {
                property: Property::Strong,
                form: Some(form),
                seed: Some(seed),
                trials: Some(trials),
                maps,
                verdict: true,
                note: None,
                hessians: Vec::new(),
            });
        }
        first.get_or_insert((form, maps));
    }
    let (form, maps) = first.expect("trials >= 1");
    let mut points = ChaCha8Rng::seed_from_u64(seed);
    points.set_stream(1);
    let hessians = hessian_evidence(input, trials.max(MIN_HESSIAN_POINTS), &mut points)?;
    Ok(LefschetzReport {
        property: Property::Strong,
        form: Some(form),
        seed: Some(seed),
        trials: Some(trials),
        maps,
        verdict: false,
        note: Some(format!("no witness found in {trials} trials")),
        hessians,
    })
}

/// Evaluated `hess^k` at `count` random points for each `k <= d/2`.
pub fn hessian_evidence(
    input: &NagataInput,
    count: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<HessianEvidence>> {
    let mut out = Vec::new();
    for k in 0..=input.degree() / 2 {
        let hess = HessianMatrix::new(input, k)?;
        let ranks: Vec<usize> = (0..count)
            .map(|_| hess.rank_at(&random_point(input, rng)))
            .collect::<Result<_>>()?;
        let size = hess.size();
        out.push(HessianEvidence {
            k,
            size,
            nonvanishing_certified: ranks.contains(&size),
            vanishing_evidence: count >= MIN_HESSIAN_POINTS && ranks.iter().all(|&r| r < size),
            ranks,
        });
    }
    Ok(out)
}

/// `(alpha_a alpha_b (f))` over a monomial basis of `A_k`, kept symbolic
/// so it can be evaluated at many points.
#[derive(Debug, Clone)]
pub struct HessianMatrix {
    entries: Vec<Vec<Polynomial>>,
    nvars: usize,
}

impl HessianMatrix {
    pub fn new(input: &NagataInput, k: u32) -> Result<Self> {
        let top = input.degree();
        if 2 * k > top {
            return Err(Error::HessianOrder { k, top });
        }
        let (d1, d2) = (input.d1(), input.d2());
        let model = FaceModel::build(input);
        let mut basis = Vec::new();
        for i in k.saturating_sub(d2)..=k.min(d1) {
            for b in basis_of(&model, d1, i, k - i)? {
                let mut p = Polynomial::zero();
                for (c, mono) in b.terms {
                    p.add_term(mono, BigRational::from_integer(c));
                }
                basis.push(p);
            }
        }
        let f = Polynomial::of_input(input);
        let action = input.action();
        let n = basis.len();
        let mut entries = vec![vec![Polynomial::zero(); n]; n];
        for a in 0..n {
            for b in a..n {
                let e = basis[a].mul(&basis[b]).apply_to(action, &f);
                entries[b][a] = e.clone();
                entries[a][b] = e;
            }
        }
        Ok(Self {
            entries,
            nvars: input.n_terms() + input.m(),
        })
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn rank_at(&self, point: &[BigRational]) -> Result<usize> {
        if point.len() != self.nvars {
            return Err(Error::PointDimension {
                expected: self.nvars,
                found: point.len(),
            });
        }
        let rows: Vec<Vec<BigInt>> = self
            .entries
            .iter()
            .map(|row| {
                let vals: Vec<BigRational> = row.iter().map(|e| e.evaluate(point)).collect();
                linalg::clear_denominators(&vals)
            })
            .collect();
        Ok(linalg::rank(&rows))
    }
}

/// `(rank, size)` of `hess^k` at `point`.
pub fn hessian_rank(input: &NagataInput, k: u32, point: &[BigRational]) -> Result<(usize, usize)> {
    let hess = HessianMatrix::new(input, k)?;
    Ok((hess.rank_at(point)?, hess.size()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::hilbert::bigraded_table;
    use crate::monomial::PairingAction;

    fn int(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    #[test]
    fn inverse_system_dimensions_match_table() {
        for input in [
            fixtures::edges_and_loop(2),
            fixtures::octahedron(1),
            fixtures::binary_cubics(),
        ] {
            let table = bigraded_table(&FaceModel::build(&input), input.d1());
            assert_eq!(
                InverseSystem::new(&input).hilbert_vector(),
                table.hilbert_vector()
            );
        }
    }

    #[test]
    fn power_zero_is_identity_and_top_maps_to_nothing() {
        let input = fixtures::edges_and_loop(3);
        let system = InverseSystem::new(&input);
        let form = LinearForm::sum_of_x(&input);
        assert_eq!(system.multiplication_rank(&form, 0, 2).unwrap(), (11, 11));
        assert_eq!(system.power_ranks(&form, 5).unwrap(), [1]);
        assert!(system.multiplication_rank(&form, 1, 5).is_err());
    }

    #[test]
    fn sum_of_x_is_weak_lefschetz_for_edges_and_loop() {
        let input = fixtures::edges_and_loop(3);
        let report = check_wlp(&input, &LinearForm::sum_of_x(&input)).unwrap();
        assert!(report.verdict);
        assert_eq!(report.maps.len(), 5);
    }

    #[test]
    fn single_x_is_not_weak_lefschetz() {
        let input = fixtures::edges_and_loop(2);
        let form = LinearForm::from_integers(&input, &[1, 0, 0, 0, 0, 0]).unwrap();
        let report = check_wlp(&input, &form).unwrap();
        assert!(!report.verdict);
        assert!(report.maps.iter().any(|m| !m.maximal));
    }

    #[test]
    fn form_validation() {
        let input = fixtures::edges_and_loop(2);
        assert!(matches!(
            LinearForm::from_integers(&input, &[0; 6]),
            Err(Error::ZeroForm)
        ));
        assert!(matches!(
            LinearForm::from_integers(&input, &[1; 5]),
            Err(Error::FormDimension {
                expected: 6,
                found: 5
            })
        ));
    }

    #[test]
    fn composed_powers_never_gain_rank() {
        let input = fixtures::edges_and_loop(2);
        let system = InverseSystem::new(&input);
        let form = LinearForm::from_integers(&input, &[2, -1, 3, 1, 5, -2]).unwrap();
        for deg in 0..=input.degree() {
            let ranks = system.power_ranks(&form, deg).unwrap();
            assert!(ranks.windows(2).all(|w| w[1] <= w[0]));
        }
    }

    #[test]
    fn monomial_case_has_a_witness() {
        // f = x0 u1 u2: A is a complete intersection of X0^2, U1^2, U2^2
        let input = NagataInput::new(
            1,
            2,
            vec![Monomial::new(vec![1, 1])],
            PairingAction::Contraction,
        )
        .unwrap();
        let report = check_slp(&input, 3, 0).unwrap();
        assert!(report.verdict);
        assert!(report.hessians.is_empty());
        assert!(report.maps.iter().all(|m| m.maximal));
    }

    #[test]
    fn hessian_zero_is_value_of_f() {
        let input = fixtures::binary_cubics();
        let ones = vec![int(1); 6];
        assert_eq!(hessian_rank(&input, 0, &ones).unwrap(), (1, 1));
        let mut root = vec![int(0); 6];
        root[4] = int(1);
        root[5] = int(1);
        // x = 0 kills every term
        assert_eq!(hessian_rank(&input, 0, &root).unwrap(), (0, 1));
        assert!(hessian_rank(&input, 3, &ones).is_err());
        assert!(hessian_rank(&input, 1, &ones[..5]).is_err());
    }

    #[test]
    fn binary_cubics_hessian_is_deficient() {
        let input = fixtures::binary_cubics();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..MIN_HESSIAN_POINTS {
            let (rank, size) = hessian_rank(&input, 1, &random_point(&input, &mut rng)).unwrap();
            assert_eq!(size, 6);
            assert!(rank < size);
        }
    }

    #[test]
    fn binary_cubics_have_no_witness() {
        let report = check_slp(&fixtures::binary_cubics(), 4, 0).unwrap();
        assert!(!report.verdict);
        assert_eq!(report.note.as_deref(), Some("no witness found in 4 trials"));
        let h1 = &report.hessians[1];
        assert!(h1.vanishing_evidence);
        assert_eq!(h1.ranks.len(), MIN_HESSIAN_POINTS);
        assert!(report.hessians[0].nonvanishing_certified);
    }

    #[test]
    fn slp_is_reproducible() {
        let input = fixtures::edges_and_loop(1);
        assert_eq!(
            check_slp(&input, 2, 5).unwrap(),
            check_slp(&input, 2, 5).unwrap()
        );
        assert!(matches!(check_slp(&input, 0, 5), Err(Error::NoTrials)));
    }

    #[test]
    fn actions_agree_on_ranks() {
        let input = fixtures::edges_and_loop(2);
        let diff = input.with_action(PairingAction::Differentiation);
        let form = LinearForm::from_integers(&input, &[1, 2, -3, 1, 1, 4]).unwrap();
        let a = InverseSystem::new(&input);
        let b = InverseSystem::new(&diff);
        assert_eq!(a.hilbert_vector(), b.hilbert_vector());
        // WLP verdicts coincide for sum_of_x
        assert_eq!(
            check_wlp(&input, &LinearForm::sum_of_x(&input))
                .unwrap()
                .verdict,
            check_wlp(&diff, &LinearForm::sum_of_x(&diff))
                .unwrap()
                .verdict
        );
        assert!(a.power_ranks(&form, 1).is_ok());
    }
}
