//! Exact elimination over the integers.
//!
//! Row reduction is fraction-free (Bareiss): after each pivot step every
//! entry below the pivot is a minor of the input, so the division by the
//! previous pivot is exact. Pivots are taken column by column, choosing the
//! first row (in label order) with a nonzero entry.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Bareiss elimination in place. When `aug` is given, the same row
/// operations are applied to it. Returns the rank.
fn bareiss(mat: &mut [Vec<BigInt>], mut aug: Option<&mut [Vec<BigInt>]>) -> usize {
    let nrows = mat.len();
    let ncols = mat.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&p| !mat[p][c].is_zero()) else {
            continue;
        };
        mat.swap(rank, p);
        if let Some(aug) = aug.as_deref_mut() {
            aug.swap(rank, p);
        }
        let (head, tail) = mat.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        let pivot = pivot_row[c].clone();
        for (offset, row) in tail.iter_mut().enumerate() {
            let factor = std::mem::take(&mut row[c]);
            for k in c + 1..ncols {
                let v = &pivot * &row[k] - &factor * &pivot_row[k];
                row[k] = v / &prev;
            }
            if let Some(aug) = aug.as_deref_mut() {
                let (ahead, atail) = aug.split_at_mut(rank + 1);
                let apivot = &ahead[rank];
                let arow = &mut atail[offset];
                for k in 0..arow.len() {
                    let v = &pivot * &arow[k] - &factor * &apivot[k];
                    arow[k] = v / &prev;
                }
            }
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Rank over the rationals of an integer matrix given by rows.
pub fn rank(rows: &[Vec<BigInt>]) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let live_cols: Vec<usize> = (0..ncols)
        .filter(|&c| rows.iter().any(|r| !r[c].is_zero()))
        .collect();
    let mut mat: Vec<Vec<BigInt>> = rows
        .iter()
        .filter(|r| r.iter().any(|v| !v.is_zero()))
        .map(|r| live_cols.iter().map(|&c| r[c].clone()).collect())
        .collect();
    // eliminate along the shorter side
    if mat.len() > live_cols.len() {
        mat = transpose(&mat, live_cols.len());
    }
    bareiss(&mut mat, None)
}

fn transpose(mat: &[Vec<BigInt>], ncols: usize) -> Vec<Vec<BigInt>> {
    (0..ncols)
        .map(|c| mat.iter().map(|r| r[c].clone()).collect())
        .collect()
}

/// Rank together with a basis of the left kernel `{ v : v · M = 0 }`.
///
/// Kernel vectors are primitive integer vectors whose first nonzero entry
/// is positive.
pub fn rank_and_kernel(rows: &[Vec<BigInt>]) -> (usize, Vec<Vec<BigInt>>) {
    let n = rows.len();
    let mut mat = rows.to_vec();
    let mut aug: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let mut e = vec![BigInt::zero(); n];
            e[i] = BigInt::one();
            e
        })
        .collect();
    let rank = bareiss(&mut mat, Some(&mut aug));
    let kernel = aug.into_iter().skip(rank).map(primitive).collect();
    (rank, kernel)
}

/// Divide by the content and normalize the sign of the leading entry.
pub fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let content = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if content.is_zero() {
        return v;
    }
    let negate = v
        .iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.is_negative());
    for x in &mut v {
        *x = &*x / &content;
        if negate {
            *x = -&*x;
        }
    }
    v
}

/// Scale a rational vector by the lcm of its denominators.
pub fn clear_denominators(v: &[BigRational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
}

/// Rank of a list of sparse vectors keyed by any ordered label.
pub fn sparse_rank<K: Ord + Clone>(vectors: &[BTreeMap<K, BigInt>]) -> usize {
    row_basis(vectors).len()
}

/// Echelon basis of the row span, eliminating on the smallest label.
/// Rows are kept primitive; the result has one row per pivot label.
pub fn row_basis<K: Ord + Clone>(vectors: &[BTreeMap<K, BigInt>]) -> Vec<BTreeMap<K, BigInt>> {
    let mut pivots: BTreeMap<K, BTreeMap<K, BigInt>> = BTreeMap::new();
    for v in vectors {
        let mut row = v.clone();
        row.retain(|_, x| !x.is_zero());
        while let Some(lead) = row.keys().next().cloned() {
            let Some(p) = pivots.get(&lead) else {
                pivots.insert(lead, make_primitive(row));
                break;
            };
            let (a, b) = (p[&lead].clone(), row[&lead].clone());
            for x in row.values_mut() {
                *x *= &a;
            }
            for (k, x) in p {
                *row.entry(k.clone()).or_insert_with(BigInt::zero) -= x * &b;
            }
            row.retain(|_, x| !x.is_zero());
            row = make_primitive(row);
        }
    }
    pivots.into_values().collect()
}

fn make_primitive<K: Ord>(mut row: BTreeMap<K, BigInt>) -> BTreeMap<K, BigInt> {
    let g = row.values().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.values_mut() {
            *x /= &g;
        }
    }
    row
}

/// Column labels (sorted) and dense rows for a list of sparse vectors.
pub fn densify<K: Ord + Clone>(vectors: &[BTreeMap<K, BigInt>]) -> (Vec<K>, Vec<Vec<BigInt>>) {
    let mut labels: Vec<K> = vectors.iter().flat_map(|v| v.keys().cloned()).collect();
    labels.sort();
    labels.dedup();
    let index: BTreeMap<&K, usize> = labels.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let rows = vectors
        .iter()
        .map(|v| {
            let mut row = vec![BigInt::zero(); labels.len()];
            for (k, x) in v {
                row[index[k]] = x.clone();
            }
            row
        })
        .collect();
    (labels, rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    /// Plain Gauss–Jordan over the rationals, used as a second route.
    fn rational_rank(rows: &[Vec<BigInt>]) -> usize {
        let mut a: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|r| r.iter().map(|x| Ratio::from_integer(x.clone())).collect())
            .collect();
        let ncols = a.first().map_or(0, Vec::len);
        let mut r = 0;
        for c in 0..ncols {
            let Some(p) = (r..a.len()).find(|&p| !a[p][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            let pivot = a[r][c].clone();
            let prow = a[r].clone();
            for row in a.iter_mut().skip(r + 1) {
                let f = &row[c] / &pivot;
                for k in 0..ncols {
                    row[k] = &row[k] - &f * &prow[k];
                }
            }
            r += 1;
        }
        r
    }

    #[test]
    fn zero_matrix() {
        let z = m(&[&[0, 0, 0], &[0, 0, 0]]);
        let (r, k) = rank_and_kernel(&z);
        assert_eq!(r, 0);
        assert_eq!(k, m(&[&[1, 0], &[0, 1]]));
    }

    #[test]
    fn row_basis_matches_rank() {
        let rows: Vec<BTreeMap<u8, BigInt>> = [
            vec![(0, 2), (2, 4)],
            vec![(0, 1), (1, 3)],
            vec![(1, 6), (2, -4)],
            vec![(3, 0)],
        ]
        .iter()
        .map(|r| r.iter().map(|&(k, v)| (k, BigInt::from(v))).collect())
        .collect();
        let basis = row_basis(&rows);
        assert_eq!(basis.len(), rank(&densify(&rows).1));
        assert_eq!(basis.len(), 2);
        // leading labels are distinct and the rows are primitive
        assert_eq!(basis[0][&0], BigInt::one());
        assert!(!basis[1].contains_key(&0));
    }

    #[test]
    fn identity() {
        let id = m(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(rank_and_kernel(&id), (3, vec![]));
        assert_eq!(rank(&id), 3);
    }

    #[test]
    fn kernel_is_left_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1], &[2, 2, 4]]);
        let (r, k) = rank_and_kernel(&a);
        assert_eq!(r, 2);
        assert_eq!(k.len(), 2);
        for v in &k {
            for c in 0..3 {
                let s: BigInt = v.iter().zip(&a).map(|(x, row)| x * &row[c]).sum();
                assert!(s.is_zero());
            }
        }
    }

    #[test]
    fn agrees_with_rational_elimination() {
        // deterministic pseudo-random small matrices
        let mut state = 12345u64;
        let mut next = || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((state >> 33) % 7) as i64 - 3
        };
        for rows in 1..6 {
            for cols in 1..6 {
                let a: Vec<Vec<BigInt>> = (0..rows)
                    .map(|_| (0..cols).map(|_| BigInt::from(next())).collect())
                    .collect();
                let expected = rational_rank(&a);
                assert_eq!(rank(&a), expected);
                assert_eq!(rank_and_kernel(&a).0, expected);
            }
        }
    }

    #[test]
    fn primitive_normalizes() {
        let v = primitive(m(&[&[0, -4, 6, 2]]).remove(0));
        assert_eq!(v, m(&[&[0, 2, -3, -1]]).remove(0));
    }
}
