//! Bigraded Hilbert table of `A = T / Ann(f)` by counting faces.
//!
//! Row `i = 0` counts faces, rows `0 < i < d1` count divisors facet by
//! facet, and row `i = d1` is the mirror of row 0. When `d1 = 1` there are
//! no interior rows and row 1 is the mirror row.

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::face::FaceModel;
use crate::monomial::{divisors_of_degree, BiMonomial, Monomial};

/// `a[i][j] = dim A_(i,j)` for `0 <= i <= d1`, `0 <= j <= d2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BigradedTable {
    pub d1: u32,
    pub d2: u32,
    pub a: Vec<Vec<usize>>,
}

impl BigradedTable {
    pub fn get(&self, i: u32, j: u32) -> usize {
        self.a[i as usize][j as usize]
    }

    /// `h_k = sum_{i+j=k} a[i][j]` for `k = 0..=d1+d2`.
    pub fn hilbert_vector(&self) -> Vec<usize> {
        let mut h = vec![0; (self.d1 + self.d2) as usize + 1];
        for (i, row) in self.a.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                h[i + j] += v;
            }
        }
        h
    }

    /// `a[i][j] == a[d1-i][d2-j]` everywhere.
    pub fn is_self_dual(&self) -> bool {
        let (d1, d2) = (self.d1 as usize, self.d2 as usize);
        (0..=d1).all(|i| (0..=d2).all(|j| self.a[i][j] == self.a[d1 - i][d2 - j]))
    }

    /// Cells where `self` and `other` differ, as `(i, j, self, other)`.
    pub fn mismatches(&self, other: &BigradedTable) -> Vec<(u32, u32, usize, usize)> {
        let mut out = Vec::new();
        for i in 0..=self.d1 {
            for j in 0..=self.d2 {
                let (a, b) = (self.get(i, j), other.get(i, j));
                if a != b {
                    out.push((i, j, a, b));
                }
            }
        }
        out
    }
}

/// `sum_r f_{j,r}` for each `j`.
pub fn interior_row(model: &FaceModel) -> Vec<usize> {
    (0..=model.d2())
        .map(|j| {
            (0..model.facets().len())
                .map(|r| model.facet_count(j, r))
                .sum()
        })
        .collect()
}

pub fn bigraded_table(model: &FaceModel, d1: u32) -> BigradedTable {
    let d2 = model.d2();
    let f = model.f_vector();
    let interior = interior_row(model);
    let a = (0..=d1)
        .map(|i| {
            (0..=d2)
                .map(|j| {
                    if i == 0 {
                        f[j as usize]
                    } else if i == d1 {
                        f[(d2 - j) as usize]
                    } else {
                        interior[j as usize]
                    }
                })
                .collect()
        })
        .collect();
    BigradedTable { d1, d2, a }
}

/// A bihomogeneous operator given as integer-weighted monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisElement {
    pub terms: Vec<(BigInt, BiMonomial)>,
    pub bidegree: (u32, u32),
}

impl BasisElement {
    fn monomial(mono: BiMonomial) -> Self {
        let bidegree = mono.bidegree();
        Self {
            terms: vec![(BigInt::one(), mono)],
            bidegree,
        }
    }
}

/// Monomial operators whose classes form a basis of `A_(i,j)`.
///
/// For `i = d1` the element attached to a face `w` of degree `d2 - j` is
/// `X_r^d1 U^(g_r / w)` for the first facet `g_r` divisible by `w`; it maps
/// `f` to a nonzero multiple of `w`, so these classes are dual to the
/// monomial basis of `A_(0, d2-j)`.
pub fn basis_of(model: &FaceModel, d1: u32, i: u32, j: u32) -> Result<Vec<BasisElement>> {
    let d2 = model.d2();
    if i > d1 || j > d2 {
        return Err(Error::Bidegree { i, j, d1, d2 });
    }
    let nx = model.facets().len();
    let x_power = |s: usize, e: u32| Monomial::var_power(nx, s, e);
    let out = if i == 0 {
        model
            .faces(j)
            .map(|w| BasisElement::monomial(BiMonomial::new(Monomial::one(nx), w.clone())))
            .collect()
    } else if i < d1 {
        let mut out = Vec::new();
        for (s, g) in model.facets().iter().enumerate() {
            for w in divisors_of_degree(g, j) {
                out.push(BasisElement::monomial(BiMonomial::new(x_power(s, i), w)));
            }
        }
        out
    } else {
        model
            .faces(d2 - j)
            .map(|w| {
                let (s, g) = model
                    .facets()
                    .iter()
                    .enumerate()
                    .find(|(_, g)| w.divides(g))
                    .expect("every face divides a facet");
                let cofactor = g.div(w).unwrap();
                BasisElement::monomial(BiMonomial::new(x_power(s, d1), cofactor))
            })
            .collect()
    };
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn table(input: &crate::NagataInput) -> BigradedTable {
        bigraded_table(&FaceModel::build(input), input.d1())
    }

    #[test]
    fn octahedron_cells() {
        let t = table(&fixtures::octahedron(2));
        assert_eq!(t.get(1, 1), 24);
        assert_eq!(t.get(0, 2), 12);
        assert_eq!(t.get(2, 0), 8);
        assert_eq!(t.hilbert_vector(), [1, 14, 44, 44, 14, 1]);
        let t5 = table(&fixtures::octahedron(5));
        assert_eq!(t5.hilbert_vector(), [1, 14, 44, 64, 64, 64, 44, 14, 1]);
        assert!(t5.is_self_dual());
    }

    #[test]
    fn edges_and_loop_vectors() {
        let t = table(&fixtures::edges_and_loop(2));
        assert_eq!(t.get(1, 1), 5);
        assert_eq!(
            table(&fixtures::edges_and_loop(1)).hilbert_vector(),
            [1, 6, 6, 1]
        );
        assert_eq!(t.hilbert_vector(), [1, 6, 11, 6, 1]);
        assert_eq!(
            table(&fixtures::edges_and_loop(3)).hilbert_vector(),
            [1, 6, 11, 11, 6, 1]
        );
    }

    #[test]
    fn interior_rows_are_facet_count_in_degree_zero() {
        for d1 in 2..5 {
            let t = table(&fixtures::octahedron(d1));
            for i in 1..d1 {
                assert_eq!(t.get(i, 0), 8);
                assert_eq!(t.a[i as usize], t.a[1]);
            }
        }
    }

    #[test]
    fn single_row_for_d1_one() {
        let t = table(&fixtures::octahedron(1));
        // top row mirrors the face counts: (8, 12, 6, 1)
        assert_eq!(t.a[1], vec![8, 12, 6, 1]);
        assert_eq!(t.hilbert_vector(), [1, 14, 24, 14, 1]);
    }

    #[test]
    fn basis_examples() {
        let input = fixtures::edges_and_loop(2);
        let model = FaceModel::build(&input);
        let render = |i, j| -> Vec<String> {
            basis_of(&model, 2, i, j)
                .unwrap()
                .iter()
                .map(|b| b.terms[0].1.to_operator_string())
                .collect()
        };
        assert_eq!(render(0, 1), ["U1", "U2", "U3"]);
        assert_eq!(render(1, 1), ["X0*U1", "X0*U2", "X1*U1", "X2*U2", "X2*U3"]);
        assert_eq!(render(2, 2), ["X0^2*U1*U2"]);
        assert!(basis_of(&model, 2, 3, 0).is_err());
        let t = bigraded_table(&model, 2);
        for i in 0..=2 {
            for j in 0..=2 {
                assert_eq!(basis_of(&model, 2, i, j).unwrap().len(), t.get(i, j));
            }
        }
    }
}
