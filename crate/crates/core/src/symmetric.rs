//! Builders for the structured polynomials of the theory: full
//! symmetrizations `S_d`, the one-x words `M_i^{n+1}`, subset words, the
//! separating witness, the Frobenius expansion of `(u + v)^p`, and the
//! division-free multilinearization.

use crate::error::{Error, Result};
use crate::freealg::{Polynomial, Substitution, Word};
use crate::gfp::Prime;

/// Default cap on the arity of `S_d`; `8!` products is the largest expansion
/// we allow by default.
pub const DEFAULT_ARITY_CAP: usize = 8;

/// The ordered argument list of an `S_d` expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArgList {
    entries: Vec<Polynomial>,
}

impl ArgList {
    pub fn new(entries: Vec<Polynomial>) -> Result<Self> {
        Self::with_cap(entries, DEFAULT_ARITY_CAP)
    }

    pub fn with_cap(entries: Vec<Polynomial>, cap: usize) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::IndexOutOfRange {
                index: 0,
                context: "S_d needs at least one argument".into(),
            });
        }
        if entries.len() > cap {
            return Err(Error::CapExceeded {
                what: "S_d arity",
                got: entries.len() as u64,
                cap: cap as u64,
            });
        }
        let prime = entries[0].prime();
        if let Some(bad) = entries.iter().find(|e| e.prime() != prime) {
            return Err(Error::PrimeMismatch {
                left: prime.value(),
                right: bad.prime().value(),
            });
        }
        Ok(ArgList { entries })
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn arity(&self) -> usize {
        self.entries.len()
    }

    pub fn prime(&self) -> Prime {
        self.entries[0].prime()
    }
}

/// `S_d(a_1, ..., a_d)`: the sum over all `d!` orderings of the product of
/// the arguments. Repeated arguments are not collapsed.
pub fn s_d(args: &ArgList) -> Polynomial {
    let prime = args.prime();
    let mut out = Polynomial::zero(prime);
    let mut used = vec![false; args.arity()];
    expand_perms(args.entries(), &mut used, Polynomial::one(prime), &mut out);
    out
}

fn expand_perms(args: &[Polynomial], used: &mut [bool], prefix: Polynomial, out: &mut Polynomial) {
    if used.iter().all(|&u| u) {
        for (w, &c) in prefix.raw_terms() {
            out.add_term(w.clone(), c);
        }
        return;
    }
    for i in 0..args.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        let next = &prefix * &args[i];
        if !next.is_zero() {
            expand_perms(args, used, next, out);
        }
        used[i] = false;
    }
}

/// `S_d` on a plain slice of arguments with the default arity cap.
pub fn sym(args: &[Polynomial]) -> Result<Polynomial> {
    Ok(s_d(&ArgList::new(args.to_vec())?))
}

/// `S_p(u, ..., u, v, ..., v)` with `u` repeated `i` times and `v` repeated
/// `p - i` times.
pub fn s_partial(u: &Polynomial, v: &Polynomial, i: usize, prime: Prime) -> Result<Polynomial> {
    let p = prime.value() as usize;
    if i == 0 || i >= p {
        return Err(Error::IndexOutOfRange {
            index: i as i64,
            context: format!("partial repeat count must lie in 1..={}", p - 1),
        });
    }
    let mut args = vec![u.clone(); i];
    args.extend(std::iter::repeat_n(v.clone(), p - i));
    sym(&args)
}

/// The word of length `n + 1` with `x` in slot `i` (1-based) and `y`
/// everywhere else.
pub fn m_word(i: usize, n: usize, x: u32, y: u32) -> Result<Word> {
    if i == 0 || i > n + 1 {
        return Err(Error::IndexOutOfRange {
            index: i as i64,
            context: format!("slot must lie in 1..={}", n + 1),
        });
    }
    Ok((1..=n + 1).map(|j| if j == i { x } else { y }).collect())
}

/// The length-`n` word with `z1` at the (1-based) positions in `subset` and
/// `z2` at the others.
pub fn x_subset_word(n: usize, subset: &[usize], z1: u32, z2: u32) -> Result<Word> {
    if let Some(&bad) = subset.iter().find(|&&i| i == 0 || i > n) {
        return Err(Error::IndexOutOfRange {
            index: bad as i64,
            context: format!("subset positions must lie in 1..={n}"),
        });
    }
    Ok((1..=n)
        .map(|i| if subset.contains(&i) { z1 } else { z2 })
        .collect())
}

/// Sum of the subset words over all `j`-element subsets of `{1..n}`.
pub fn subset_word_sum(n: usize, j: usize, z1: u32, z2: u32, prime: Prime) -> Result<Polynomial> {
    let mut out = Polynomial::zero(prime);
    let mut subset = Vec::with_capacity(j);
    subsets_of_size(1, n, j, &mut subset, &mut |s| {
        let w = x_subset_word(n, s, z1, z2).expect("positions are in range");
        out.add_term(w, 1);
    });
    Ok(out)
}

fn subsets_of_size(start: usize, n: usize, j: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if cur.len() == j {
        f(cur);
        return;
    }
    for i in start..=n {
        if n - i + 1 < j - cur.len() {
            break;
        }
        cur.push(i);
        subsets_of_size(i + 1, n, j, cur, f);
        cur.pop();
    }
}

/// `S_p(x^{(p+1)/2}, y^{(p-1)/2}) * S_p(y^{(p+1)/2}, x^{(p-1)/2})` where the
/// exponents denote repeat counts. Only defined for odd `p`.
pub fn witness_w(prime: Prime, x: u32, y: u32) -> Result<Polynomial> {
    let p = prime.value() as usize;
    if p == 2 {
        return Err(Error::Unsupported(
            "the witness needs an odd characteristic".into(),
        ));
    }
    let xv = Polynomial::var(x, prime);
    let yv = Polynomial::var(y, prime);
    let big = p.div_ceil(2);
    let left = s_partial(&xv, &yv, big, prime)?;
    let right = s_partial(&yv, &xv, big, prime)?;
    Ok(&left * &right)
}

/// `u^p + v^p + sum_{i=1}^{p-1} (i!(p-i)!)^{-1} S_p(u, v; i)`, which equals
/// `(u + v)^p`.
pub fn frobenius_expand(u: &Polynomial, v: &Polynomial) -> Result<Polynomial> {
    let prime = u.prime();
    if v.prime() != prime {
        return Err(Error::PrimeMismatch {
            left: prime.value(),
            right: v.prime().value(),
        });
    }
    let p = prime.value();
    if p as usize > DEFAULT_ARITY_CAP {
        return Err(Error::CapExceeded {
            what: "S_p arity",
            got: p as u64,
            cap: DEFAULT_ARITY_CAP as u64,
        });
    }
    let mut out = &u.pow(p) + &v.pow(p);
    for i in 1..p as u64 {
        let denom = prime.factorial_mod(i) * prime.factorial_mod(p as u64 - i);
        let scale = denom.inv()?;
        out = &out + &s_partial(u, v, i as usize, prime)?.scale(scale);
    }
    Ok(out)
}

/// `sum_{T nonempty} (-1)^{d-|T|} (sum_{i in T} a_i)^d`, the division-free
/// full linearization of `z^d`; equal to `S_d(a_1, ..., a_d)`.
pub fn linearize_inclusion_exclusion(args: &[Polynomial]) -> Result<Polynomial> {
    let list = ArgList::new(args.to_vec())?;
    let prime = list.prime();
    let d = list.arity();
    let mut out = Polynomial::zero(prime);
    for mask in 1u32..(1 << d) {
        let subset_sum = (0..d)
            .filter(|i| mask & (1 << i) != 0)
            .fold(Polynomial::zero(prime), |acc, i| &acc + &args[i]);
        let power = subset_sum.pow(d as u32);
        let size = mask.count_ones() as usize;
        out = if (d - size).is_multiple_of(2) {
            &out + &power
        } else {
            &out - &power
        };
    }
    Ok(out)
}

/// The unital homomorphism fixing `x`, sending `y` to 1 and every other
/// variable of `f` to 0.
pub fn collapse_homomorphism(f: &Polynomial, x: u32, y: u32) -> Substitution {
    let prime = f.prime();
    let mut s = Substitution::unital();
    for v in f.variables() {
        let image = if v == x {
            Polynomial::var(x, prime)
        } else if v == y {
            Polynomial::one(prime)
        } else {
            Polynomial::zero(prime)
        };
        s.set(v, image).expect("unital substitution accepts constants");
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::{left_normed_commutator, parse};

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn var(i: u32, prime: Prime) -> Polynomial {
        Polynomial::var(i, prime)
    }

    #[test]
    fn s2_is_sum_of_both_orders() {
        let p5 = p(5);
        let s = sym(&[var(1, p5), var(2, p5)]).unwrap();
        assert_eq!(s, parse("x1*x2 + x2*x1", p5).unwrap());
    }

    #[test]
    fn s3_with_repeat() {
        let p3 = p(3);
        let (x, y) = (var(1, p3), var(2, p3));
        let s = sym(&[x.clone(), y.clone(), y.clone()]).unwrap();
        assert_eq!(s, parse("2*x1*x2*x2 + 2*x2*x1*x2 + 2*x2*x2*x1", p3).unwrap());
        assert_eq!(s, -left_normed_commutator(&x, &y, 2).unwrap());
    }

    #[test]
    fn arity_cap_enforced() {
        let p3 = p(3);
        let args = vec![var(1, p3); 9];
        assert!(matches!(
            ArgList::new(args),
            Err(Error::CapExceeded { got: 9, cap: 8, .. })
        ));
        assert!(ArgList::new(vec![]).is_err());
    }

    #[test]
    fn partial_repeats() {
        let p3 = p(3);
        let (x, y) = (var(1, p3), var(2, p3));
        assert_eq!(
            s_partial(&x, &y, 1, p3).unwrap(),
            sym(&[x.clone(), y.clone(), y.clone()]).unwrap()
        );
        assert_eq!(
            s_partial(&x, &y, 2, p3).unwrap(),
            parse("2*x1*x1*x2 + 2*x1*x2*x1 + 2*x2*x1*x1", p3).unwrap()
        );
        assert!(s_partial(&x, &x, 1, p3).unwrap().is_zero());
        assert!(s_partial(&x, &y, 0, p3).is_err());
        assert!(s_partial(&x, &y, 3, p3).is_err());
    }

    #[test]
    fn m_words() {
        assert_eq!(m_word(1, 2, 1, 2).unwrap(), Word::new([1, 2, 2]));
        assert_eq!(m_word(2, 2, 1, 2).unwrap(), Word::new([2, 1, 2]));
        assert_eq!(m_word(4, 3, 1, 2).unwrap(), Word::new([2, 2, 2, 1]));
        assert!(m_word(0, 2, 1, 2).is_err());
        assert!(m_word(4, 2, 1, 2).is_err());
    }

    #[test]
    fn subset_words() {
        assert_eq!(x_subset_word(4, &[1, 3], 7, 8).unwrap(), Word::new([7, 8, 7, 8]));
        assert_eq!(
            x_subset_word(6, &[1, 2, 3], 7, 8).unwrap(),
            Word::new([7, 7, 7, 8, 8, 8])
        );
        assert_eq!(x_subset_word(3, &[], 7, 8).unwrap(), Word::new([8, 8, 8]));
        assert!(x_subset_word(3, &[4], 7, 8).is_err());
        assert_eq!(subset_word_sum(4, 2, 1, 2, p(5)).unwrap().len(), 6);
    }

    #[test]
    fn witness_at_three() {
        let p3 = p(3);
        let w = witness_w(p3, 1, 2).unwrap();
        let expected = &sym(&[var(1, p3), var(1, p3), var(2, p3)]).unwrap()
            * &sym(&[var(2, p3), var(2, p3), var(1, p3)]).unwrap();
        assert_eq!(w, expected);
        assert_eq!(
            w.multidegree().unwrap(),
            crate::freealg::MultiDegree::from_pairs([(1, 3), (2, 3)])
        );
        assert_eq!(w.coeff(&Word::new([1, 2]).pow(3)).residue(), 1);
        assert_eq!(w.coeff(&Word::new([2, 1]).pow(3)).residue(), 0);
        assert!(matches!(witness_w(p(2), 1, 2), Err(Error::Unsupported(_))));
    }

    #[test]
    fn frobenius_examples() {
        let p3 = p(3);
        let (x, y) = (var(1, p3), var(2, p3));
        let expected = x.pow(3)
            + y.pow(3)
            + s_partial(&x, &y, 1, p3).unwrap().scale_raw(2)
            + s_partial(&x, &y, 2, p3).unwrap().scale_raw(2);
        let got = frobenius_expand(&x, &y).unwrap();
        assert_eq!(got, expected);
        assert_eq!(got, (&x + &y).pow(3));
        assert_eq!(frobenius_expand(&x, &Polynomial::zero(p3)).unwrap(), x.pow(3));
    }

    #[test]
    fn linearization_examples() {
        let p5 = p(5);
        let (u, v) = (var(1, p5), var(2, p5));
        assert_eq!(
            linearize_inclusion_exclusion(&[u.clone(), v.clone()]).unwrap(),
            sym(&[u.clone(), v.clone()]).unwrap()
        );
        let xs: Vec<_> = (1..=3).map(|i| var(i, p5)).collect();
        assert_eq!(linearize_inclusion_exclusion(&xs).unwrap(), sym(&xs).unwrap());
        let same = vec![u.clone(); 3];
        assert_eq!(
            linearize_inclusion_exclusion(&same).unwrap(),
            u.pow(3).scale_raw(6)
        );
    }

    #[test]
    fn collapse_kills_symmetrizations() {
        let p3 = p(3);
        let f = parse("x1*x2*x1 + x2*x2*x3", p3).unwrap();
        let s = collapse_homomorphism(&f, 1, 2);
        assert_eq!(f.substitute(&s).unwrap(), parse("x1*x1", p3).unwrap());
    }
}
