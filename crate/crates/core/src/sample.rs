//! Seeded random inputs for property and acceptance runs.

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::face::{binomial, NagataInput};
use crate::monomial::{enumerate_monomials, Monomial, PairingAction};

/// Ranges for a random input. Facets are distinct monomials of degree
/// `d2`, square-free with probability one half when `m >= d2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ranges {
    pub m: (usize, usize),
    pub d2: (u32, u32),
    pub d1: (u32, u32),
    pub max_terms: usize,
}

impl Default for Ranges {
    fn default() -> Self {
        Self {
            m: (2, 5),
            d2: (2, 4),
            d1: (1, 3),
            max_terms: 6,
        }
    }
}

pub fn random_input(ranges: &Ranges, rng: &mut ChaCha8Rng) -> NagataInput {
    let m = rng.random_range(ranges.m.0..=ranges.m.1);
    let d2 = rng.random_range(ranges.d2.0..=ranges.d2.1);
    let d1 = rng.random_range(ranges.d1.0..=ranges.d1.1);
    let square_free = m as u32 >= d2 && rng.random_bool(0.5);
    let mut pool = enumerate_monomials(m, d2).expect("m >= 1");
    if square_free {
        pool.retain(Monomial::is_square_free);
    }
    let bound = if square_free {
        binomial(m as u64, d2 as u64)
    } else {
        binomial((m as u64) + d2 as u64 - 1, d2 as u64)
    };
    let most = ranges.max_terms.min(bound as usize).min(pool.len());
    let s = rng.random_range(1..=most);
    let facets: Vec<Monomial> = pool.choose_multiple(rng, s).cloned().collect();
    NagataInput::new(d1, m, facets, PairingAction::Contraction).expect("valid by construction")
}

pub fn seeded_input(ranges: &Ranges, seed: u64) -> NagataInput {
    random_input(ranges, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// `count` inputs with the default ranges.
pub fn corpus(count: usize, seed: u64) -> Vec<NagataInput> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_input(&Ranges::default(), &mut rng))
        .collect()
}

/// Inputs with `d1 >= d2` and `n + 1 >= m >= 2`.
pub fn wlp_corpus(count: usize, seed: u64) -> Vec<NagataInput> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ranges = Ranges {
        m: (2, 3),
        d2: (2, 3),
        d1: (3, 4),
        max_terms: 5,
    };
    let mut out = Vec::new();
    while out.len() < count {
        let input = random_input(&ranges, &mut rng);
        if input.d1() >= input.d2() && input.n_terms() >= input.m() {
            out.push(input);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_respects_ranges() {
        let inputs = corpus(50, 0);
        assert_eq!(inputs.len(), 50);
        for input in &inputs {
            assert!((2..=5).contains(&input.m()));
            assert!((2..=4).contains(&input.d2()));
            assert!((1..=3).contains(&input.d1()));
            assert!((1..=6).contains(&input.n_terms()));
        }
        assert_eq!(inputs, corpus(50, 0));
        assert_ne!(inputs, corpus(50, 1));
    }

    #[test]
    fn wlp_corpus_shape() {
        for input in wlp_corpus(20, 3) {
            assert!(input.d1() >= input.d2());
            assert!(input.n_terms() >= input.m());
        }
    }
}
