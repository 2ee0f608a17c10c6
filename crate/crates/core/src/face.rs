//! The polynomial `f = sum_r x_r^d1 g_r` and the divisor-closed family of
//! monomials generated by its `u`-parts.
//!
//! A degree-`j` monomial `w` is a face exactly when it divides some `g_r`.
//! Everything the Hilbert function and the annihilator need is read off
//! from this family: face counts per degree, divisor counts per facet,
//! minimal non-faces and pairwise gcd cofactors.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, InputError, Result};
use crate::monomial::{divisors_of_degree, BiMonomial, Monomial, PairingAction, UMonomial};

/// A validated CW-Nagata polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NagataInput {
    d1: u32,
    m: usize,
    d2: u32,
    facets: Vec<UMonomial>,
    action: PairingAction,
}

/// `C(n, k)` saturating at `u128::MAX`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for t in 0..k {
        acc = match acc.checked_mul((n - t) as u128) {
            Some(v) => v / (t as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

impl NagataInput {
    pub fn new(
        d1: u32,
        m: usize,
        facets: Vec<UMonomial>,
        action: PairingAction,
    ) -> Result<Self, InputError> {
        if d1 == 0 {
            return Err(InputError::ZeroXDegree);
        }
        if m == 0 {
            return Err(InputError::NoVariables);
        }
        let first = facets.first().ok_or(InputError::NoFacets)?;
        for (index, g) in facets.iter().enumerate() {
            if g.nvars() != m {
                return Err(InputError::WrongVariableCount {
                    index,
                    expected: m,
                    found: g.nvars(),
                });
            }
        }
        let d2 = first.degree();
        for (index, g) in facets.iter().enumerate() {
            if g.degree() != d2 {
                return Err(InputError::MixedUDegree {
                    index,
                    expected: d2,
                    found: g.degree(),
                });
            }
        }
        if d2 < 2 {
            return Err(InputError::UDegreeTooSmall { d2 });
        }
        for second in 1..facets.len() {
            if let Some(first) = facets[..second].iter().position(|g| *g == facets[second]) {
                return Err(InputError::DuplicateFacet { first, second });
            }
        }
        let simplicial = facets.iter().all(Monomial::is_square_free);
        let bound = if simplicial {
            binomial(m as u64, d2 as u64)
        } else {
            binomial(m as u64 + d2 as u64 - 1, d2 as u64)
        };
        if facets.len() as u128 > bound {
            return Err(InputError::TooManyFacets {
                count: facets.len(),
                bound,
                d2,
            });
        }
        Ok(Self {
            d1,
            m,
            d2,
            facets,
            action,
        })
    }

    pub fn d1(&self) -> u32 {
        self.d1
    }

    pub fn d2(&self) -> u32 {
        self.d2
    }

    /// Number of `u` variables.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of terms `n + 1`, which is also the number of `x` variables.
    pub fn n_terms(&self) -> usize {
        self.facets.len()
    }

    pub fn facets(&self) -> &[UMonomial] {
        &self.facets
    }

    pub fn action(&self) -> PairingAction {
        self.action
    }

    /// Socle degree `d1 + d2`.
    pub fn degree(&self) -> u32 {
        self.d1 + self.d2
    }

    pub fn is_simplicial(&self) -> bool {
        self.facets.iter().all(Monomial::is_square_free)
    }

    pub fn with_action(&self, action: PairingAction) -> Self {
        Self {
            action,
            ..self.clone()
        }
    }

    /// Same facets with a different x-degree.
    pub fn with_d1(&self, d1: u32) -> Result<Self, InputError> {
        Self::new(d1, self.m, self.facets.clone(), self.action)
    }

    /// The terms `x_r^d1 g_r` of `f`, each with coefficient 1.
    pub fn terms(&self) -> Vec<BiMonomial> {
        let nx = self.n_terms();
        self.facets
            .iter()
            .enumerate()
            .map(|(r, g)| BiMonomial::new(Monomial::var_power(nx, r, self.d1), g.clone()))
            .collect()
    }

    pub(crate) fn check_bidegree(&self, i: u32, j: u32) -> Result<()> {
        if i > self.d1 || j > self.d2 {
            return Err(Error::Bidegree {
                i,
                j,
                d1: self.d1,
                d2: self.d2,
            });
        }
        Ok(())
    }
}

/// Face counts and non-face data for one input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceModel {
    m: usize,
    d2: u32,
    facets: Vec<UMonomial>,
    /// `divisor_sets[j]` = degree-`j` monomials dividing some facet.
    divisor_sets: Vec<BTreeSet<UMonomial>>,
    f_vector: Vec<usize>,
    /// `per_facet_counts[r][j]` = number of degree-`j` divisors of `g_r`.
    per_facet_counts: Vec<Vec<usize>>,
    support_sets: Vec<Vec<usize>>,
}

impl FaceModel {
    pub fn build(input: &NagataInput) -> Self {
        let d2 = input.d2();
        let mut divisor_sets = vec![BTreeSet::new(); d2 as usize + 1];
        let mut per_facet_counts = Vec::with_capacity(input.n_terms());
        for g in input.facets() {
            let mut counts = Vec::with_capacity(d2 as usize + 1);
            for j in 0..=d2 {
                let divs = divisors_of_degree(g, j);
                counts.push(divs.len());
                divisor_sets[j as usize].extend(divs);
            }
            per_facet_counts.push(counts);
        }
        let f_vector = divisor_sets.iter().map(BTreeSet::len).collect();
        let support_sets = input.facets().iter().map(Monomial::support).collect();
        Self {
            m: input.m(),
            d2,
            facets: input.facets().to_vec(),
            divisor_sets,
            f_vector,
            per_facet_counts,
            support_sets,
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn d2(&self) -> u32 {
        self.d2
    }

    pub fn facets(&self) -> &[UMonomial] {
        &self.facets
    }

    /// `(f_0, ..., f_d2)` with `f_0 = 1`.
    pub fn f_vector(&self) -> &[usize] {
        &self.f_vector
    }

    /// Faces of degree `j` in the fixed monomial order; empty beyond `d2`.
    pub fn faces(&self, j: u32) -> impl Iterator<Item = &UMonomial> {
        self.divisor_sets.get(j as usize).into_iter().flatten()
    }

    pub fn is_face(&self, w: &UMonomial) -> bool {
        self.divisor_sets
            .get(w.degree() as usize)
            .is_some_and(|set| set.contains(w))
    }

    /// `f_{j,r}`: number of degree-`j` divisors of facet `r`.
    pub fn facet_count(&self, j: u32, r: usize) -> usize {
        self.per_facet_counts[r]
            .get(j as usize)
            .copied()
            .unwrap_or(0)
    }

    pub fn support(&self, r: usize) -> &[usize] {
        &self.support_sets[r]
    }

    fn check_index(&self, index: usize) -> Result<()> {
        if index >= self.facets.len() {
            return Err(Error::FacetIndex {
                index,
                count: self.facets.len(),
            });
        }
        Ok(())
    }

    /// Non-faces of degree `1..=d2` all of whose maximal proper divisors are faces.
    pub fn minimal_nonfaces(&self) -> Vec<UMonomial> {
        let mut out = BTreeSet::new();
        for j in 1..=self.d2 {
            for v in self.faces(j - 1) {
                for k in 0..self.m {
                    let w = v.mul(&Monomial::var_power(self.m, k, 1));
                    if !self.is_face(&w) && self.lower_covers(&w).all(|c| self.is_face(&c)) {
                        out.insert(w);
                    }
                }
            }
        }
        out.into_iter().collect()
    }

    /// Monomials of degree `1..=d2` that do not divide `g_r` but whose maximal
    /// proper divisors all do. The degree-1 entries are the variables outside
    /// the support of `g_r`.
    pub fn minimal_nondivisors(&self, r: usize) -> Result<Vec<UMonomial>> {
        self.check_index(r)?;
        let g = &self.facets[r];
        let mut out = BTreeSet::new();
        for j in 1..=self.d2 {
            for v in divisors_of_degree(g, j - 1) {
                for k in 0..self.m {
                    let w = v.mul(&Monomial::var_power(self.m, k, 1));
                    if !w.divides(g) && self.lower_covers(&w).all(|c| c.divides(g)) {
                        out.insert(w);
                    }
                }
            }
        }
        Ok(out.into_iter().collect())
    }

    /// `(gcd, rho, sigma)` with `g_r = rho * gcd` and `g_s = sigma * gcd`.
    pub fn pair_cofactors(&self, r: usize, s: usize) -> Result<(UMonomial, UMonomial, UMonomial)> {
        self.check_index(r)?;
        self.check_index(s)?;
        if r == s {
            return Err(Error::InvalidPair { index: r });
        }
        let (gr, gs) = (&self.facets[r], &self.facets[s]);
        let common = gr.gcd(gs);
        let rho = gr.div(&common).expect("gcd divides its arguments");
        let sigma = gs.div(&common).expect("gcd divides its arguments");
        Ok((common, rho, sigma))
    }

    /// Divisors of `w` of degree one less.
    fn lower_covers<'a>(&'a self, w: &'a UMonomial) -> impl Iterator<Item = UMonomial> + 'a {
        w.support()
            .into_iter()
            .map(move |k| w.div(&Monomial::var_power(self.m, k, 1)).unwrap())
    }

    /// Graphviz rendering of the face poset; edges are the covering relations.
    pub fn hasse_dot(&self) -> String {
        let nodes: Vec<&UMonomial> = self.divisor_sets.iter().flatten().collect();
        let index = |w: &UMonomial| nodes.iter().position(|n| *n == w).unwrap();
        let mut out = String::from("digraph hasse {\n  rankdir=BT;\n");
        for (id, w) in nodes.iter().enumerate() {
            let _ = writeln!(out, "  n{id} [label=\"{w}\"];");
        }
        let mut edges = BTreeSet::new();
        for (id, w) in nodes.iter().enumerate() {
            for below in self.lower_covers(w) {
                edges.insert((index(&below), id));
            }
        }
        for (a, b) in edges {
            let _ = writeln!(out, "  n{a} -> n{b};");
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn u(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn strings(ws: &[UMonomial]) -> Vec<String> {
        ws.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn validation_errors() {
        let a = PairingAction::Contraction;
        assert_eq!(
            NagataInput::new(0, 2, vec![u(&[1, 1])], a),
            Err(InputError::ZeroXDegree)
        );
        assert_eq!(
            NagataInput::new(1, 2, vec![u(&[1, 0])], a),
            Err(InputError::UDegreeTooSmall { d2: 1 })
        );
        assert_eq!(
            NagataInput::new(1, 2, vec![u(&[1, 1]), u(&[1, 1])], a),
            Err(InputError::DuplicateFacet {
                first: 0,
                second: 1
            })
        );
        assert!(matches!(
            NagataInput::new(1, 2, vec![u(&[1, 1]), u(&[3, 0])], a),
            Err(InputError::MixedUDegree { index: 1, .. })
        ));
        assert!(matches!(
            NagataInput::new(1, 3, vec![u(&[1, 1])], a),
            Err(InputError::WrongVariableCount { index: 0, .. })
        ));
        assert_eq!(NagataInput::new(1, 2, vec![], a), Err(InputError::NoFacets));
    }

    #[test]
    fn f_vectors() {
        let oct = FaceModel::build(&fixtures::octahedron(2));
        assert_eq!(oct.f_vector(), &[1, 6, 12, 8]);
        let ex2 = FaceModel::build(&fixtures::edges_and_loop(2));
        assert_eq!(ex2.f_vector(), &[1, 3, 3]);
        let chain = NagataInput::new(1, 2, vec![u(&[4, 0])], PairingAction::Contraction).unwrap();
        assert_eq!(FaceModel::build(&chain).f_vector(), &[1, 1, 1, 1, 1]);
    }

    #[test]
    fn minimal_nonfaces_examples() {
        let oct = FaceModel::build(&fixtures::octahedron(1));
        assert_eq!(
            strings(&oct.minimal_nonfaces()),
            ["u1^2", "u1*u6", "u2^2", "u2*u5", "u3^2", "u3*u4", "u4^2", "u5^2", "u6^2"]
        );
        let ex2 = FaceModel::build(&fixtures::edges_and_loop(2));
        assert_eq!(strings(&ex2.minimal_nonfaces()), ["u1*u3", "u2^2", "u3^2"]);

        let full: Vec<_> = crate::monomial::enumerate_monomials(3, 2).unwrap();
        let simplex = NagataInput::new(1, 3, full, PairingAction::Contraction).unwrap();
        assert!(FaceModel::build(&simplex).minimal_nonfaces().is_empty());
    }

    #[test]
    fn minimal_nondivisors_examples() {
        let ex2 = FaceModel::build(&fixtures::edges_and_loop(2));
        assert_eq!(strings(&ex2.minimal_nondivisors(1).unwrap()), ["u2", "u3"]);
        assert_eq!(
            strings(&ex2.minimal_nondivisors(0).unwrap()),
            ["u3", "u1^2", "u2^2"]
        );
        assert_eq!(
            ex2.minimal_nondivisors(3),
            Err(Error::FacetIndex { index: 3, count: 3 })
        );

        let full = NagataInput::new(1, 3, vec![u(&[1, 1, 1])], PairingAction::Contraction).unwrap();
        assert_eq!(
            strings(&FaceModel::build(&full).minimal_nondivisors(0).unwrap()),
            ["u1^2", "u2^2", "u3^2"]
        );
    }

    #[test]
    fn pair_cofactor_examples() {
        let ex2 = FaceModel::build(&fixtures::edges_and_loop(2));
        assert_eq!(
            ex2.pair_cofactors(0, 1).unwrap(),
            (u(&[1, 0, 0]), u(&[0, 1, 0]), u(&[1, 0, 0]))
        );
        assert_eq!(
            ex2.pair_cofactors(1, 2).unwrap(),
            (u(&[0, 0, 0]), u(&[2, 0, 0]), u(&[0, 1, 1]))
        );
        assert_eq!(
            ex2.pair_cofactors(1, 1),
            Err(Error::InvalidPair { index: 1 })
        );

        let oct = FaceModel::build(&fixtures::octahedron(2));
        let (g, rho, sigma) = oct.pair_cofactors(0, 1).unwrap();
        assert_eq!(
            (g.to_string(), rho.to_string(), sigma.to_string()),
            ("u1*u2".into(), "u3".into(), "u4".into())
        );
    }

    /// Counts nodes and covering edges by testing every ordered pair.
    fn brute_force_hasse(model: &FaceModel) -> (usize, usize) {
        let nodes: Vec<&UMonomial> = (0..=model.d2()).flat_map(|j| model.faces(j)).collect();
        let mut edges = 0;
        for a in &nodes {
            for b in &nodes {
                if a.divides(b) && a.degree() + 1 == b.degree() {
                    edges += 1;
                }
            }
        }
        (nodes.len(), edges)
    }

    fn dot_counts(dot: &str) -> (usize, usize) {
        let nodes = dot.lines().filter(|l| l.contains("[label=")).count();
        let edges = dot.lines().filter(|l| l.contains("->")).count();
        (nodes, edges)
    }

    #[test]
    fn hasse_matches_brute_force() {
        let ex2 = FaceModel::build(&fixtures::edges_and_loop(2));
        assert_eq!(brute_force_hasse(&ex2), (7, 8));
        assert_eq!(dot_counts(&ex2.hasse_dot()), (7, 8));

        let oct = FaceModel::build(&fixtures::octahedron(2));
        assert_eq!(brute_force_hasse(&oct), (27, 54));
        assert_eq!(dot_counts(&oct.hasse_dot()), (27, 54));

        let chain = NagataInput::new(1, 1, vec![u(&[3])], PairingAction::Contraction).unwrap();
        let dot = FaceModel::build(&chain).hasse_dot();
        assert_eq!(dot_counts(&dot), (4, 3));
        assert!(dot.contains("n0 -> n1;\n  n1 -> n2;\n  n2 -> n3;"));
    }
}
