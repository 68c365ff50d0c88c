use std::collections::{BTreeMap, BTreeSet};
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::freealg::{MultiDegree, Word};
use crate::gfp::{FieldElement, Prime};

/// An element of the free associative algebra over GF(p).
///
/// Terms are kept in a sparse map from [`Word`] to a nonzero residue, so two
/// polynomials are equal exactly when their term maps are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Word, u32>,
    prime: Prime,
}

impl Polynomial {
    pub fn zero(prime: Prime) -> Self {
        Polynomial {
            terms: BTreeMap::new(),
            prime,
        }
    }

    pub fn one(prime: Prime) -> Self {
        Self::monomial(Word::empty(), 1, prime)
    }

    pub fn constant(c: i64, prime: Prime) -> Self {
        Self::monomial(Word::empty(), c, prime)
    }

    pub fn var(index: u32, prime: Prime) -> Self {
        Self::monomial(Word::letter(index), 1, prime)
    }

    pub fn monomial(word: Word, coeff: i64, prime: Prime) -> Self {
        let mut p = Self::zero(prime);
        p.add_term(word, prime.reduce(coeff));
        p
    }

    /// Builds a polynomial from `(word, coefficient)` pairs, summing repeats.
    pub fn from_terms(prime: Prime, terms: impl IntoIterator<Item = (Word, i64)>) -> Self {
        let mut p = Self::zero(prime);
        for (w, c) in terms {
            p.add_term(w, prime.reduce(c));
        }
        p
    }

    /// Adds `coeff * word` in place, keeping the map free of zeros.
    pub fn add_term(&mut self, word: Word, coeff: u32) {
        if coeff == 0 {
            return;
        }
        let prime = self.prime;
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = prime.add(*e.get(), coeff);
                if s == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending deg-lex order with raw residues.
    pub fn raw_terms(&self) -> &BTreeMap<Word, u32> {
        &self.terms
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, FieldElement)> + '_ {
        self.terms
            .iter()
            .map(move |(w, &c)| (w, FieldElement::new(c as i64, self.prime)))
    }

    pub fn coeff(&self, word: &Word) -> FieldElement {
        FieldElement::new(
            self.terms.get(word).copied().unwrap_or(0) as i64,
            self.prime,
        )
    }

    /// The deg-lex greatest word with its coefficient.
    pub fn leading(&self) -> Option<(&Word, u32)> {
        self.terms.iter().next_back().map(|(w, &c)| (w, c))
    }

    pub fn constant_term(&self) -> FieldElement {
        self.coeff(&Word::empty())
    }

    pub fn variables(&self) -> BTreeSet<u32> {
        self.terms
            .keys()
            .flat_map(|w| w.letters().iter().copied())
            .collect()
    }

    fn check_prime(&self, other: &Polynomial) -> Result<()> {
        if self.prime != other.prime {
            return Err(Error::PrimeMismatch {
                left: self.prime.value(),
                right: other.prime.value(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_prime(other)?;
        let mut out = self.clone();
        for (w, &c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_prime(other)?;
        let mut out = self.clone();
        for (w, &c) in &other.terms {
            out.add_term(w.clone(), self.prime.neg(c));
        }
        Ok(out)
    }

    /// Concatenation product extended bilinearly.
    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_prime(other)?;
        let p = self.prime;
        let mut out = Polynomial::zero(p);
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                out.add_term(a.concat(b), p.mul(ca, cb));
            }
        }
        Ok(out)
    }

    pub fn try_commutator(&self, other: &Polynomial) -> Result<Polynomial> {
        self.try_mul(other)?.try_sub(&other.try_mul(self)?)
    }

    pub fn scale(&self, c: FieldElement) -> Polynomial {
        assert_eq!(c.prime(), self.prime, "prime mismatch");
        self.scale_raw(c.residue())
    }

    pub fn scale_raw(&self, c: u32) -> Polynomial {
        let p = self.prime;
        let c = c % p.value();
        if c == 0 {
            return Polynomial::zero(p);
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(w, &a)| (w.clone(), p.mul(a, c)))
                .collect(),
            prime: p,
        }
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.prime);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Letter-count of every term, or `None` when terms differ in
    /// multidegree. The zero polynomial has no multidegree either.
    pub fn multidegree(&self) -> Option<MultiDegree> {
        let mut words = self.terms.keys();
        let first = words.next()?.multidegree();
        words.all(|w| w.multidegree() == first).then_some(first)
    }

    pub fn is_multihomogeneous(&self) -> bool {
        self.multidegree().is_some()
    }

    /// Terms whose word has multidegree exactly `d`.
    pub fn component(&self, d: &MultiDegree) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.len() as u32 == d.total() && &w.multidegree() == d)
                .map(|(w, &c)| (w.clone(), c))
                .collect(),
            prime: self.prime,
        }
    }

    /// All multihomogeneous components, keyed by multidegree.
    pub fn components(&self) -> BTreeMap<MultiDegree, Polynomial> {
        let mut out: BTreeMap<MultiDegree, Polynomial> = BTreeMap::new();
        for (w, &c) in &self.terms {
            out.entry(w.multidegree())
                .or_insert_with(|| Polynomial::zero(self.prime))
                .terms
                .insert(w.clone(), c);
        }
        out
    }

    /// Image under the algebra endomorphism determined by `s`. Variables
    /// without an image are fixed.
    pub fn substitute(&self, s: &Substitution) -> Result<Polynomial> {
        let p = self.prime;
        for img in s.images.values() {
            self.check_prime(img)?;
        }
        let mut out = Polynomial::zero(p);
        for (w, &c) in &self.terms {
            let mut acc = Polynomial::monomial(Word::empty(), c as i64, p);
            for &v in w.letters() {
                acc = match s.images.get(&v) {
                    Some(img) => &acc * img,
                    None => acc.mul_word_right(&Word::letter(v)),
                };
                if acc.is_zero() {
                    break;
                }
            }
            for (ww, cc) in acc.terms {
                out.add_term(ww, cc);
            }
        }
        Ok(out)
    }

    fn mul_word_right(&self, w: &Word) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(a, &c)| (a.concat(w), c)).collect(),
            prime: self.prime,
        }
    }
}

impl std::fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Polynomial[GF({})]({})", self.prime, self)
    }
}

/// `[a, b] = ab - ba`.
pub fn commutator(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    a.try_commutator(b)
}

/// `[x, y, ..., y]` with `n` copies of `y`, associated to the left.
pub fn left_normed_commutator(x: &Polynomial, y: &Polynomial, n: usize) -> Result<Polynomial> {
    let mut acc = x.clone();
    for _ in 0..n {
        acc = acc.try_commutator(y)?;
    }
    Ok(acc)
}

/// `[a_1, a_2, ..., a_k]` associated to the left; a single entry is itself.
pub fn left_normed_commutator_of(args: &[Polynomial]) -> Result<Polynomial> {
    let (first, rest) = args.split_first().ok_or_else(|| Error::IndexOutOfRange {
        index: 0,
        context: "commutator of an empty list".into(),
    })?;
    rest.iter()
        .try_fold(first.clone(), |acc, b| acc.try_commutator(b))
}

macro_rules! binop {
    ($tr:ident, $m:ident, $try:ident) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;

            fn $m(self, rhs: &Polynomial) -> Polynomial {
                self.$try(rhs).expect("prime mismatch")
            }
        }

        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;

            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$try(&rhs).expect("prime mismatch")
            }
        }

        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;

            fn $m(self, rhs: &Polynomial) -> Polynomial {
                (&self).$try(rhs).expect("prime mismatch")
            }
        }

        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;

            fn $m(self, rhs: Polynomial) -> Polynomial {
                self.$try(&rhs).expect("prime mismatch")
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scale_raw(self.prime.value() - 1)
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Images for variables, defining an algebra endomorphism.
///
/// Unless `unital_allowed` is set, no image may carry a constant term, so
/// the substitution preserves the constant-free subalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Substitution {
    images: BTreeMap<u32, Polynomial>,
    unital_allowed: bool,
}

impl Substitution {
    /// A constant-free substitution (T-space closure).
    pub fn new() -> Self {
        Substitution {
            images: BTreeMap::new(),
            unital_allowed: false,
        }
    }

    /// A substitution whose images may have constant terms.
    pub fn unital() -> Self {
        Substitution {
            images: BTreeMap::new(),
            unital_allowed: true,
        }
    }

    pub fn unital_allowed(&self) -> bool {
        self.unital_allowed
    }

    pub fn images(&self) -> &BTreeMap<u32, Polynomial> {
        &self.images
    }

    pub fn set(&mut self, var: u32, image: Polynomial) -> Result<()> {
        if !self.unital_allowed && !image.constant_term().is_zero() {
            return Err(Error::ConstantImage { var });
        }
        self.images.insert(var, image);
        Ok(())
    }

    pub fn with(mut self, var: u32, image: Polynomial) -> Result<Self> {
        self.set(var, image)?;
        Ok(self)
    }
}

impl Default for Substitution {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn w(l: &[u32]) -> Word {
        Word::new(l.iter().copied())
    }

    #[test]
    fn add_cancels_to_canonical_form() {
        let p3 = p(3);
        let a = Polynomial::from_terms(p3, [(w(&[1, 2]), 1), (w(&[2, 1]), 2)]);
        let b = Polynomial::monomial(w(&[2, 1]), 1, p3);
        assert_eq!(&a + &b, Polynomial::monomial(w(&[1, 2]), 1, p3));

        let x = Polynomial::var(1, p(2));
        assert!((&x + &x).is_zero());
        assert_eq!((&x + &x).len(), 0);

        let f = Polynomial::from_terms(p(5), [(w(&[1]), 3), (w(&[2, 2]), 4)]);
        assert_eq!(&f + &Polynomial::zero(p(5)), f);
    }

    #[test]
    fn mul_examples() {
        let p3 = p(3);
        let sum = Polynomial::var(1, p3) + Polynomial::var(2, p3);
        let prod = &sum * &Polynomial::var(3, p3);
        assert_eq!(
            prod,
            Polynomial::from_terms(p3, [(w(&[1, 3]), 1), (w(&[2, 3]), 1)])
        );
        let xy = Polynomial::monomial(w(&[1, 2]), 1, p3);
        assert_eq!(&xy * &Polynomial::var(1, p3), Polynomial::monomial(w(&[1, 2, 1]), 1, p3));
        assert_eq!(&Polynomial::one(p3) * &sum, sum);
    }

    #[test]
    fn prime_mismatch_is_an_error() {
        let a = Polynomial::var(1, p(3));
        let b = Polynomial::var(1, p(5));
        assert!(matches!(a.try_add(&b), Err(Error::PrimeMismatch { .. })));
        assert!(a.try_mul(&b).is_err());
        assert!(commutator(&a, &b).is_err());
    }

    #[test]
    fn commutator_examples() {
        let p3 = p(3);
        let x = Polynomial::var(1, p3);
        let y = Polynomial::var(2, p3);
        assert_eq!(
            commutator(&x, &y).unwrap(),
            Polynomial::from_terms(p3, [(w(&[1, 2]), 1), (w(&[2, 1]), -1)])
        );
        let f = &x * &y + x.clone();
        assert!(commutator(&f, &f).unwrap().is_zero());
        let x1x2 = Polynomial::monomial(w(&[1, 2]), 1, p3);
        assert_eq!(
            commutator(&x1x2, &x).unwrap(),
            Polynomial::from_terms(p3, [(w(&[1, 2, 1]), 1), (w(&[1, 1, 2]), 2)])
        );
    }

    #[test]
    fn left_normed_examples() {
        let p3 = p(3);
        let x = Polynomial::var(1, p3);
        let y = Polynomial::var(2, p3);
        assert_eq!(
            left_normed_commutator(&x, &y, 1).unwrap(),
            commutator(&x, &y).unwrap()
        );
        // xyy - 2yxy + yyx with -2 = 1 mod 3
        assert_eq!(
            left_normed_commutator(&x, &y, 2).unwrap(),
            Polynomial::from_terms(p3, [(w(&[1, 2, 2]), 1), (w(&[2, 1, 2]), 1), (w(&[2, 2, 1]), 1)])
        );
        let p7 = p(7);
        let (x, y) = (Polynomial::var(1, p7), Polynomial::var(2, p7));
        assert_eq!(
            left_normed_commutator(&x, &y, 2).unwrap(),
            Polynomial::from_terms(p7, [(w(&[1, 2, 2]), 1), (w(&[2, 1, 2]), -2), (w(&[2, 2, 1]), 1)])
        );
        assert_eq!(
            left_normed_commutator_of(&[x.clone(), y.clone(), y.clone()]).unwrap(),
            left_normed_commutator(&x, &y, 2).unwrap()
        );
    }

    #[test]
    fn component_and_coeff() {
        let p3 = p(3);
        let f = Polynomial::var(1, p3) + Polynomial::monomial(w(&[1, 2]), 1, p3);
        assert_eq!(
            f.component(&MultiDegree::from_pairs([(1, 1)])),
            Polynomial::var(1, p3)
        );
        let z = Polynomial::var(1, p3) + Polynomial::var(2, p3);
        let sq = z.pow(2);
        assert_eq!(
            sq.component(&MultiDegree::from_pairs([(1, 1), (2, 1)])),
            Polynomial::from_terms(p3, [(w(&[1, 2]), 1), (w(&[2, 1]), 1)])
        );
        let total = sq
            .components()
            .values()
            .fold(Polynomial::zero(p3), |acc, c| &acc + c);
        assert_eq!(total, sq);

        let g = Polynomial::monomial(w(&[1, 2]), 2, p3);
        assert_eq!(g.coeff(&w(&[1, 2])).residue(), 2);
        assert_eq!(g.coeff(&w(&[2, 1])).residue(), 0);
    }

    #[test]
    fn substitution_examples() {
        let p3 = p(3);
        let x1 = Polynomial::var(1, p3);
        let x1x2 = Polynomial::monomial(w(&[1, 2]), 1, p3);
        let s = Substitution::new().with(2, x1.clone()).unwrap();
        assert_eq!(x1x2.substitute(&s).unwrap(), Polynomial::monomial(w(&[1, 1]), 1, p3));

        let y = Polynomial::var(2, p3);
        let comm = commutator(&x1, &y).unwrap();
        assert!(comm.substitute(&s).unwrap().is_zero());

        let err = Substitution::new().with(2, Polynomial::one(p3)).unwrap_err();
        assert_eq!(err, Error::ConstantImage { var: 2 });

        // x -> x, y -> 1 sends r(xy)^3 + s(yx)^3 to (r+s) x^3
        let alpha = Substitution::unital().with(2, Polynomial::one(p3)).unwrap();
        let f = Polynomial::from_terms(
            p3,
            [(w(&[1, 2]).pow(3), 2), (w(&[2, 1]).pow(3), 2)],
        );
        assert_eq!(
            f.substitute(&alpha).unwrap(),
            Polynomial::monomial(w(&[1, 1, 1]), 1, p3)
        );
    }
}
