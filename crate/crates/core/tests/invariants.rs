use nagata_core::face::binomial;
use nagata_core::monomial::{apply, divisors_of_degree, enumerate_monomials};
use nagata_core::sample::{random_input, Ranges};
use nagata_core::{BiMonomial, FaceModel, Monomial, PairingAction};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn monomial(m: usize) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..4, m).prop_map(Monomial::new)
}

fn pair() -> impl Strategy<Value = (Monomial, Monomial)> {
    (1usize..5).prop_flat_map(|m| (monomial(m), monomial(m)))
}

proptest! {
    #[test]
    fn divisibility_is_antisymmetric((a, b) in pair()) {
        if a.divides(&b) && b.divides(&a) {
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn gcd_divides_both((a, b) in pair()) {
        let g = a.gcd(&b);
        prop_assert!(g.divides(&a) && g.divides(&b));
        let c = a.div(&g).unwrap().gcd(&b.div(&g).unwrap());
        prop_assert!(c.is_one());
    }

    #[test]
    fn divisor_total_is_product_of_exponents(g in (1usize..5).prop_flat_map(monomial)) {
        let total: usize = (0..=g.degree()).map(|j| divisors_of_degree(&g, j).len()).sum();
        let expected: u32 = g.exps().iter().map(|e| e + 1).product();
        prop_assert_eq!(total, expected as usize);
        for j in 0..=g.degree() {
            prop_assert!(divisors_of_degree(&g, j).iter().all(|w| w.divides(&g) && w.degree() == j));
        }
    }

    #[test]
    fn actions_share_support((a, b) in pair(), (c, d) in pair()) {
        prop_assume!(a.nvars() == b.nvars() && c.nvars() == d.nvars());
        let op = BiMonomial::new(a, c);
        let target = BiMonomial::new(b, d);
        let contraction = apply(PairingAction::Contraction, &op, &target);
        let derivative = apply(PairingAction::Differentiation, &op, &target);
        prop_assert_eq!(contraction == 0.into(), derivative == 0.into());
        prop_assert_eq!(contraction != 0.into(), op.divides(&target));
    }

    #[test]
    fn enumeration_is_sorted_and_complete(m in 1usize..5, d in 0u32..5) {
        let all = enumerate_monomials(m, d).unwrap();
        prop_assert!(all.windows(2).all(|w| w[0] < w[1]));
        prop_assert_eq!(all.len() as u128, binomial(m as u64 + d as u64 - 1, d as u64));
        prop_assert!(all.iter().all(|w| w.degree() == d));
    }

    #[test]
    fn faces_are_closed_downward(seed in any::<u64>()) {
        let input = random_input(&Ranges::default(), &mut ChaCha8Rng::seed_from_u64(seed));
        let model = FaceModel::build(&input);
        for j in 1..=model.d2() {
            for w in model.faces(j) {
                for k in w.support() {
                    let mut e = w.exps().to_vec();
                    e[k] -= 1;
                    prop_assert!(model.is_face(&Monomial::new(e)));
                }
            }
        }
    }

    #[test]
    fn minimal_nonfaces_detect_exactly_the_nonfaces(seed in any::<u64>()) {
        let input = random_input(&Ranges::default(), &mut ChaCha8Rng::seed_from_u64(seed));
        let model = FaceModel::build(&input);
        let nonfaces = model.minimal_nonfaces();
        for j in 0..=model.d2() {
            for w in enumerate_monomials(model.m(), j).unwrap() {
                let face = input.facets().iter().any(|g| w.divides(g));
                let blocked = nonfaces.iter().any(|v| v.divides(&w));
                prop_assert_eq!(face, !blocked, "{}", w);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn closed_form_equals_oracle(seed in any::<u64>()) {
        let input = random_input(&Ranges::default(), &mut ChaCha8Rng::seed_from_u64(seed));
        let model = FaceModel::build(&input);
        let closed = nagata_core::hilbert::bigraded_table(&model, input.d1());
        prop_assert_eq!(closed, nagata_core::oracle::oracle_bigraded_table(&input));
    }
}
