use proptest::prelude::*;
use tspaces::freealg::{parse, MultiDegree, Polynomial, Substitution, Word};
use tspaces::gfp::{FieldElement, Prime};

const PRIMES: [u64; 4] = [2, 3, 5, 7];

fn word(vars: u32, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(1..=vars, 0..=max_len).prop_map(Word::new)
}

fn poly_over(p: Prime, terms: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((word(3, 3), 0..p.value()), 0..=terms).prop_map(move |ts| {
        Polynomial::from_terms(p, ts.into_iter().map(|(w, c)| (w, c as i64)))
    })
}

/// A prime with three polynomials over it.
fn triple() -> impl Strategy<Value = (Polynomial, Polynomial, Polynomial)> {
    prop::sample::select(PRIMES.to_vec()).prop_flat_map(|n| {
        let p = Prime::new(n).unwrap();
        (poly_over(p, 4), poly_over(p, 4), poly_over(p, 4))
    })
}

proptest! {
    #[test]
    fn ring_laws((a, b, c) in triple()) {
        let p = a.prime();
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &Polynomial::one(p), a.clone());
        prop_assert_eq!(&Polynomial::one(p) * &a, a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert!((&a + &(-&a)).is_zero());
        prop_assert!((&a * &Polynomial::zero(p)).is_zero());
    }

    #[test]
    fn scaling_is_linear((a, b, _c) in triple(), k in 0i64..100) {
        let s = FieldElement::new(k, a.prime());
        prop_assert_eq!((&a + &b).scale(s), &a.scale(s) + &b.scale(s));
    }

    #[test]
    fn substitution_is_an_algebra_endomorphism((a, b, g) in triple(), h in any::<u8>()) {
        let p = a.prime();
        let x2 = MultiDegree::of_word(&Word::new([2]));
        let h = Polynomial::var(1 + (h as u32 % 3), p) + g.component(&x2);
        let s = Substitution::new().with(1, h).unwrap().with(3, Polynomial::var(2, p)).unwrap();
        let sa = a.substitute(&s).unwrap();
        let sb = b.substitute(&s).unwrap();
        prop_assert_eq!((&a * &b).substitute(&s).unwrap(), &sa * &sb);
        prop_assert_eq!((&a + &b).substitute(&s).unwrap(), &sa + &sb);
    }

    #[test]
    fn components_partition_the_terms((a, _b, _c) in triple()) {
        let comps = a.components();
        let mut sum = Polynomial::zero(a.prime());
        for (d, f) in &comps {
            prop_assert_eq!(f.multidegree(), Some(d.clone()));
            prop_assert_eq!(&a.component(d), f);
            sum = &sum + f;
        }
        prop_assert_eq!(sum, a.clone());
        prop_assert_eq!(a.is_multihomogeneous(), comps.len() == 1);
    }

    #[test]
    fn format_parse_round_trip((a, _b, _c) in triple()) {
        prop_assert_eq!(parse(&a.to_string(), a.prime()).unwrap(), a);
    }

    #[test]
    fn deg_lex_is_total_and_by_length(u in word(3, 4), v in word(3, 4)) {
        if u.len() < v.len() {
            prop_assert!(u < v);
        }
        prop_assert_eq!(u.cmp(&v), v.cmp(&u).reverse());
        prop_assert_eq!(u.concat(&v).multidegree(), u.multidegree().add(&v.multidegree()));
    }
}

#[test]
fn leading_term_is_deg_lex_greatest() {
    let p = Prime::new(5).unwrap();
    let f = parse("x3 + x1*x1 + 2*x2*x1", p).unwrap();
    assert_eq!(f.leading().map(|(w, c)| (w.to_string(), c)), Some(("x2*x1".into(), 2)));
}

#[test]
fn constant_images_are_rejected_unless_unital() {
    let p = Prime::new(3).unwrap();
    assert!(Substitution::new().with(1, Polynomial::one(p)).is_err());
    let s = Substitution::unital().with(1, Polynomial::one(p)).unwrap();
    let f = parse("x1*x2*x1", p).unwrap();
    assert_eq!(f.substitute(&s).unwrap(), Polynomial::var(2, p));
}
