use proptest::prelude::*;
use tspaces::freealg::{left_normed_commutator, Polynomial, Word};
use tspaces::gfp::Prime;
use tspaces::symmetric::{
    frobenius_expand, linearize_inclusion_exclusion, s_partial, sym, witness_w, x_subset_word,
};

fn monomial(vars: u32, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(1..=vars, 1..=max_len).prop_map(Word::new)
}

fn small_poly(p: Prime) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((monomial(3, 2), 1..p.value()), 1..=2)
        .prop_map(move |ts| Polynomial::from_terms(p, ts.into_iter().map(|(w, c)| (w, c as i64))))
}

fn prime() -> impl Strategy<Value = Prime> {
    prop::sample::select(vec![2u64, 3, 5]).prop_map(|n| Prime::new(n).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn multilinear_in_each_slot(
        (args, a, b, lambda, slot) in prime().prop_flat_map(|p| (
            prop::collection::vec(small_poly(p), 1..=4),
            small_poly(p),
            small_poly(p),
            0..p.value(),
            0usize..4,
        ))
    ) {
        let p = a.prime();
        let slot = slot % args.len();
        let mut with_a = args.clone();
        with_a[slot] = a.clone();
        let mut with_b = args.clone();
        with_b[slot] = b.clone();
        let mut mixed = args.clone();
        mixed[slot] = &a + &b.scale_raw(lambda);
        let lhs = sym(&mixed).unwrap();
        let rhs = &sym(&with_a).unwrap() + &sym(&with_b).unwrap().scale_raw(lambda);
        prop_assert_eq!(lhs, rhs);
        let _ = p;
    }

    #[test]
    fn symmetric_under_permutation(
        (args, perm) in prime().prop_flat_map(|p| (
            prop::collection::vec(small_poly(p), 4),
            Just((0..4usize).collect::<Vec<_>>()).prop_shuffle(),
        ))
    ) {
        let permuted: Vec<Polynomial> = perm.iter().map(|&i| args[i].clone()).collect();
        prop_assert_eq!(sym(&args).unwrap(), sym(&permuted).unwrap());
    }

    #[test]
    fn frobenius_on_random_binomials((u, v) in prop::sample::select(vec![3u64, 5]).prop_flat_map(|n| {
        let p = Prime::new(n).unwrap();
        (small_poly(p), small_poly(p))
    })) {
        let p = u.prime().value();
        prop_assert_eq!(frobenius_expand(&u, &v).unwrap(), (&u + &v).pow(p));
    }

    #[test]
    fn linearization_matches_s_d((args, _) in prime().prop_flat_map(|p| (prop::collection::vec(small_poly(p), 2..=3), Just(p)))) {
        prop_assert_eq!(linearize_inclusion_exclusion(&args).unwrap(), sym(&args).unwrap());
    }
}

#[test]
fn commutator_form_of_s_p() {
    for n in [3u64, 5, 7] {
        let p = Prime::new(n).unwrap();
        let (x, y) = (Polynomial::var(1, p), Polynomial::var(2, p));
        let s = s_partial(&x, &y, 1, p).unwrap();
        let c = left_normed_commutator(&x, &y, n as usize - 1).unwrap();
        assert!((&s + &c).is_zero(), "p={n}");
    }
}

#[test]
fn equal_arguments_vanish() {
    for n in [2u64, 3, 5] {
        let p = Prime::new(n).unwrap();
        let u = Polynomial::var(1, p) + Polynomial::var(2, p);
        for i in 1..n as usize {
            assert!(s_partial(&u, &u, i, p).unwrap().is_zero());
        }
    }
}

#[test]
fn witness_coefficients() {
    for n in [3u64, 5] {
        let p = Prime::new(n).unwrap();
        let w = witness_w(p, 1, 2).unwrap();
        let half = (n as usize).div_ceil(2);
        let f = p.factorial_mod(half as u64) * p.factorial_mod(half as u64 - 1);
        assert_eq!(w.coeff(&Word::new([1, 2]).pow(n as usize)), f * f);
        assert!(w.coeff(&Word::new([2, 1]).pow(n as usize)).is_zero());
        assert_eq!(w.multidegree().unwrap().to_string(), format!("{{x1:{n}, x2:{n}}}"));
    }
}

#[test]
fn subset_words() {
    assert_eq!(x_subset_word(4, &[1, 3], 1, 2).unwrap(), Word::new([1, 2, 1, 2]));
    assert!(x_subset_word(3, &[4], 1, 2).is_err());
}
