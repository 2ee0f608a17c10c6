//! Brute-force ground truth from catalecticant matrices.
//!
//! The catalecticant at bidegree `(i, j)` is the matrix of the evaluation
//! map `T_(i,j) -> S_(d1-i, d2-j)`, `alpha -> alpha(f)`. Its rank is
//! `dim A_(i,j)` and its left kernel is `Ann(f)_(i,j)`. Nothing here uses
//! the face model.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::annihilator::{Body, Generator, GeneratorSet};
use crate::error::Result;
use crate::face::{binomial, NagataInput};
use crate::hilbert::BigradedTable;
use crate::linalg;
use crate::monomial::{enumerate_bimonomials, BiMonomial};
use crate::poly::Polynomial;

/// Integer matrix with monomial labels; rows are operators, columns are
/// monomials of `S`. Stored by sparse rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    pub rows: Vec<BiMonomial>,
    pub cols: Vec<BiMonomial>,
    entries: Vec<Vec<(usize, BigInt)>>,
}

impl ExactMatrix {
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn entry(&self, r: usize, c: usize) -> BigInt {
        self.entries[r]
            .iter()
            .find(|(k, _)| *k == c)
            .map(|(_, v)| v.clone())
            .unwrap_or_default()
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        self.entries
            .iter()
            .map(|row| {
                let mut dense = vec![BigInt::zero(); self.ncols()];
                for (c, v) in row {
                    dense[*c] = v.clone();
                }
                dense
            })
            .collect()
    }

    /// Rank, computed on the nonzero rows and columns only.
    pub fn rank(&self) -> usize {
        let live: Vec<BTreeMap<usize, BigInt>> = self
            .entries
            .iter()
            .filter(|row| !row.is_empty())
            .map(|row| row.iter().cloned().collect())
            .collect();
        linalg::sparse_rank(&live)
    }

    /// Rank and a primitive integer basis of the left kernel, indexed by rows.
    pub fn rank_and_kernel(&self) -> (usize, Vec<Vec<BigInt>>) {
        linalg::rank_and_kernel(&self.to_dense())
    }
}

pub fn catalecticant(input: &NagataInput, i: u32, j: u32) -> Result<ExactMatrix> {
    input.check_bidegree(i, j)?;
    let (nx, m) = (input.n_terms(), input.m());
    let rows = enumerate_bimonomials(nx, m, i, j);
    let cols = enumerate_bimonomials(nx, m, input.d1() - i, input.d2() - j);
    let index: HashMap<&BiMonomial, usize> = cols.iter().enumerate().map(|(k, c)| (c, k)).collect();
    let terms = input.terms();
    let action = input.action();
    let entries = rows
        .iter()
        .map(|op| {
            let mut row: Vec<(usize, BigInt)> = Vec::new();
            for t in &terms {
                let c = crate::monomial::apply(action, op, t);
                if c.is_zero() {
                    continue;
                }
                let col = index[&t.div(op).unwrap()];
                match row.iter_mut().find(|(k, _)| *k == col) {
                    Some((_, v)) => *v += c,
                    None => row.push((col, c)),
                }
            }
            row.retain(|(_, v)| !v.is_zero());
            row.sort_by_key(|(k, _)| *k);
            row
        })
        .collect();
    Ok(ExactMatrix {
        rows,
        cols,
        entries,
    })
}

/// `a[i][j]` = rank of the catalecticant at `(i, j)`.
pub fn oracle_bigraded_table(input: &NagataInput) -> BigradedTable {
    let (d1, d2) = (input.d1(), input.d2());
    let a = (0..=d1)
        .map(|i| {
            (0..=d2)
                .map(|j| catalecticant(input, i, j).expect("in range").rank())
                .collect()
        })
        .collect();
    BigradedTable { d1, d2, a }
}

/// Basis of `Ann(f)_(i,j)` as operators.
pub fn kernel_operators(input: &NagataInput, i: u32, j: u32) -> Result<Vec<Polynomial>> {
    let mat = catalecticant(input, i, j)?;
    let (_, kernel) = mat.rank_and_kernel();
    Ok(kernel
        .into_iter()
        .map(|v| {
            let mut p = Polynomial::zero();
            for (c, mono) in v.into_iter().zip(&mat.rows) {
                p.add_term(mono.clone(), BigRational::from_integer(c));
            }
            p
        })
        .collect())
}

/// `dim T_(i,j)` for `nx` x-variables and `m` u-variables.
pub fn ambient_dimension(nx: usize, m: usize, i: u32, j: u32) -> u128 {
    binomial(nx as u64 + i as u64 - 1, i as u64) * binomial(m as u64 + j as u64 - 1, j as u64)
}

/// The monomial part of a generator list: single monomials plus symbolic
/// powers of the `U` ideal.
struct MonomialPart<'a> {
    monomials: Vec<&'a BiMonomial>,
    u_power: Option<u32>,
}

impl<'a> MonomialPart<'a> {
    fn of(gens: &'a [Generator]) -> Self {
        let monomials = gens.iter().filter_map(Generator::as_monomial).collect();
        let u_power = gens
            .iter()
            .filter_map(|g| match g.body {
                Body::UPower(d) => Some(d),
                _ => None,
            })
            .min();
        Self { monomials, u_power }
    }

    fn contains(&self, t: &BiMonomial) -> bool {
        self.u_power.is_some_and(|d| t.u.degree() >= d)
            || self.monomials.iter().any(|g| g.divides(t))
    }
}

/// Multiples of the non-monomial generators landing in `(i, j)`, with
/// every monomial of the monomial part removed.
fn projected_multiples(
    gens: &[Generator],
    part: &MonomialPart<'_>,
    nx: usize,
    m: usize,
    i: u32,
    j: u32,
) -> Vec<BTreeMap<BiMonomial, BigInt>> {
    let mut out = Vec::new();
    for g in gens {
        let Some(terms) = g.terms() else { continue };
        if terms.len() < 2 {
            continue;
        }
        let (a, b) = g.bidegree();
        if a > i || b > j {
            continue;
        }
        for mu in enumerate_bimonomials(nx, m, i - a, j - b) {
            let mut v = BTreeMap::new();
            for (c, t) in terms {
                let prod = mu.mul(t);
                if !part.contains(&prod) {
                    *v.entry(prod).or_insert_with(BigInt::zero) += c;
                }
            }
            v.retain(|_, c| !c.is_zero());
            if !v.is_empty() {
                out.push(v);
            }
        }
    }
    out
}

/// Dimension of `(T * gens)_(i,j)`.
pub fn ideal_span_dimension(gens: &GeneratorSet, i: u32, j: u32) -> usize {
    let part = MonomialPart::of(&gens.generators);
    let in_part = enumerate_bimonomials(gens.nx, gens.m, i, j)
        .iter()
        .filter(|t| part.contains(t))
        .count();
    let rest = projected_multiples(&gens.generators, &part, gens.nx, gens.m, i, j);
    in_part + linalg::sparse_rank(&rest)
}

/// Whether `cand` lies in the span of multiples of `kept` at its bidegree.
pub(crate) fn in_ideal_span(kept: &[Generator], cand: &Generator, nx: usize, m: usize) -> bool {
    let part = MonomialPart::of(kept);
    let Some(terms) = cand.terms() else {
        return false;
    };
    let mut target = BTreeMap::new();
    for (c, t) in terms {
        if !part.contains(t) {
            target.insert(t.clone(), c.clone());
        }
    }
    if target.is_empty() {
        return true;
    }
    let (i, j) = cand.bidegree();
    let mut vectors = projected_multiples(kept, &part, nx, m, i, j);
    if vectors.is_empty() {
        return false;
    }
    let before = linalg::sparse_rank(&vectors);
    vectors.push(target);
    linalg::sparse_rank(&vectors) == before
}

/// One bidegree of the generation check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpanCheck {
    pub i: u32,
    pub j: u32,
    pub span: usize,
    pub expected: usize,
}

/// Oracle table compared against the closed form and a generator set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub table: BigradedTable,
    pub self_dual: bool,
    pub matches_closed_form: bool,
    pub mismatches: Vec<(u32, u32, usize, usize)>,
    pub generation: Vec<SpanCheck>,
    pub generators_complete: bool,
}

/// For each bidegree in the box, the generator span should have dimension
/// `dim T_(i,j) - a[i][j]` with `a` from the oracle.
pub fn generation_checks(gens: &GeneratorSet, table: &BigradedTable) -> Vec<SpanCheck> {
    let mut out = Vec::new();
    for i in 0..=table.d1 {
        for j in 0..=table.d2 {
            let total = ambient_dimension(gens.nx, gens.m, i, j) as usize;
            out.push(SpanCheck {
                i,
                j,
                span: ideal_span_dimension(gens, i, j),
                expected: total - table.get(i, j),
            });
        }
    }
    out
}

pub fn report(
    input: &NagataInput,
    closed_form: &BigradedTable,
    gens: &GeneratorSet,
) -> OracleReport {
    let table = oracle_bigraded_table(input);
    let mismatches = closed_form.mismatches(&table);
    let generation = generation_checks(gens, &table);
    OracleReport {
        self_dual: table.is_self_dual(),
        matches_closed_form: mismatches.is_empty(),
        mismatches,
        generators_complete: generation.iter().all(|c| c.span == c.expected),
        generation,
        table,
    }
}
