//! Named inputs used throughout the tests and the documentation.

use crate::face::NagataInput;
use crate::monomial::{Monomial, PairingAction};

fn build(d1: u32, m: usize, facets: &[&[u32]]) -> NagataInput {
    let facets = facets.iter().map(|e| Monomial::new(e.to_vec())).collect();
    NagataInput::new(d1, m, facets, PairingAction::Contraction).expect("fixture is valid")
}

/// Boundary of the octahedron on `u1..u6`: eight square-free cubic facets,
/// with `u1u6`, `u2u5`, `u3u4` the missing edges.
pub fn octahedron(d1: u32) -> NagataInput {
    build(
        d1,
        6,
        &[
            &[1, 1, 1, 0, 0, 0],
            &[1, 1, 0, 1, 0, 0],
            &[1, 0, 0, 1, 1, 0],
            &[1, 0, 1, 0, 1, 0],
            &[0, 1, 1, 0, 0, 1],
            &[0, 1, 0, 1, 0, 1],
            &[0, 0, 0, 1, 1, 1],
            &[0, 0, 1, 0, 1, 1],
        ],
    )
}

/// `x0^d1 u1 u2 + x1^d1 u1^2 + x2^d1 u2 u3`: two edges and a loop at `u1`.
pub fn edges_and_loop(d1: u32) -> NagataInput {
    build(d1, 3, &[&[1, 1, 0], &[2, 0, 0], &[0, 1, 1]])
}

/// `x0 u1^3 + x1 u1^2 u2 + x2 u1 u2^2 + x3 u2^3`: four binary cubics with
/// linear x-parts, more terms than linear forms in two variables.
pub fn binary_cubics() -> NagataInput {
    build(1, 2, &[&[3, 0], &[2, 1], &[1, 2], &[0, 3]])
}
