//! Structured expressions, family specifications and slice syntax.
//!
//! The expression grammar extends the polynomial grammar:
//!
//! ```text
//! expr   := ['-'] prod (('+'|'-') prod)*
//! prod   := power ('*' power)*
//! power  := atom ('^' positive-integer)?
//! atom   := integer | var | '(' expr ')'
//!         | 'S(' d ';' expr (',' expr)* ')'
//!         | 'comm(' expr ';' expr ',' n ')'
//!         | 'frob(' expr ',' expr ')'
//!         | 'w(' p ')'
//! ```
//!
//! `comm(a; b, n)` is `[a, b, ..., b]` with `n` copies of `b`, and `w(p)` is
//! the witness in `x1`, `x2`.

use crate::error::{Error, Result};
use crate::freealg::{left_normed_commutator, Cursor, MultiDegree, Polynomial};
use crate::gfp::Prime;
use crate::symmetric::{frobenius_expand, s_d, witness_w, ArgList};
use crate::tspace::GeneratorFamily;

/// Evaluates an expression over GF(p).
pub fn parse_expr(text: &str, prime: Prime) -> Result<Polynomial> {
    let mut cur = Cursor::new(text);
    let f = sum(&mut cur, prime)?;
    finish(&cur)?;
    Ok(f)
}

fn finish(cur: &Cursor<'_>) -> Result<()> {
    match cur.peek() {
        None => Ok(()),
        Some(c) => Err(cur.error(format!("unexpected '{c}'"))),
    }
}

fn sum(cur: &mut Cursor<'_>, prime: Prime) -> Result<Polynomial> {
    let mut negate = cur.eat("-");
    let mut out = Polynomial::zero(prime);
    loop {
        let t = product(cur, prime)?;
        out = if negate { out - t } else { out + t };
        match cur.peek() {
            Some('+') => negate = false,
            Some('-') => negate = true,
            _ => return Ok(out),
        }
        cur.bump();
    }
}

fn product(cur: &mut Cursor<'_>, prime: Prime) -> Result<Polynomial> {
    let mut out = power(cur, prime)?;
    while cur.eat("*") {
        out = out * power(cur, prime)?;
    }
    Ok(out)
}

fn power(cur: &mut Cursor<'_>, prime: Prime) -> Result<Polynomial> {
    let base = atom(cur, prime)?;
    if cur.eat("^") {
        let n = cur.positive_integer("exponent")?;
        return Ok(base.pow(n));
    }
    Ok(base)
}

fn small_integer(cur: &mut Cursor<'_>, what: &str) -> Result<usize> {
    let start = cur.pos();
    let n = cur.positive_integer(what)?;
    usize::try_from(n).map_err(|_| Error::Parse {
        pos: start,
        message: format!("{what} too large"),
    })
}

fn atom(cur: &mut Cursor<'_>, prime: Prime) -> Result<Polynomial> {
    match cur.peek() {
        Some(c) if c.is_ascii_digit() => Ok(Polynomial::constant(cur.integer_mod(prime)? as i64, prime)),
        Some('x') => Ok(Polynomial::var(cur.variable()?, prime)),
        Some('(') => {
            cur.bump();
            let f = sum(cur, prime)?;
            cur.expect(')')?;
            Ok(f)
        }
        Some('S') => {
            cur.bump();
            cur.expect('(')?;
            let start = cur.pos();
            let d = small_integer(cur, "arity")?;
            cur.expect(';')?;
            let mut args = vec![sum(cur, prime)?];
            while cur.eat(",") {
                args.push(sum(cur, prime)?);
            }
            cur.expect(')')?;
            if args.len() != d {
                return Err(Error::Parse {
                    pos: start,
                    message: format!("S({d}; ...) needs {d} arguments, found {}", args.len()),
                });
            }
            Ok(s_d(&ArgList::new(args)?))
        }
        Some(_) if cur.eat("comm") => {
            cur.expect('(')?;
            let a = sum(cur, prime)?;
            cur.expect(';')?;
            let b = sum(cur, prime)?;
            cur.expect(',')?;
            let n = small_integer(cur, "commutator length")?;
            cur.expect(')')?;
            left_normed_commutator(&a, &b, n)
        }
        Some(_) if cur.eat("frob") => {
            cur.expect('(')?;
            let u = sum(cur, prime)?;
            cur.expect(',')?;
            let v = sum(cur, prime)?;
            cur.expect(')')?;
            frobenius_expand(&u, &v)
        }
        Some('w') => {
            cur.bump();
            cur.expect('(')?;
            let start = cur.pos();
            let p = cur.positive_integer("prime")?;
            cur.expect(')')?;
            if p != prime.value() {
                return Err(Error::Parse {
                    pos: start,
                    message: format!("w({p}) requested while working over GF({})", prime.value()),
                });
            }
            witness_w(prime, 1, 2)
        }
        Some(c) => Err(cur.error(format!("expected a term, found '{c}'"))),
        None => Err(cur.error("expected a term, found end of input".into())),
    }
}

/// Parses `R(n=2,d=3)`, `L(n=1)` or `T[ expr ; expr ... ]`.
pub fn parse_family(text: &str, prime: Prime) -> Result<GeneratorFamily> {
    let mut cur = Cursor::new(text);
    let fam = match cur.peek() {
        Some('R') => {
            cur.bump();
            cur.expect('(')?;
            let n = named_integer(&mut cur, "n")?;
            cur.expect(',')?;
            let d = named_integer(&mut cur, "d")?;
            cur.expect(')')?;
            GeneratorFamily::r(n, d)?
        }
        Some('L') => {
            cur.bump();
            cur.expect('(')?;
            let n = named_integer(&mut cur, "n")?;
            cur.expect(')')?;
            GeneratorFamily::l(n)?
        }
        Some('T') => {
            cur.bump();
            cur.expect('[')?;
            let mut gens = vec![sum(&mut cur, prime)?];
            while cur.eat(";") {
                gens.push(sum(&mut cur, prime)?);
            }
            cur.expect(']')?;
            GeneratorFamily::tspace_of(gens)?
        }
        _ => return Err(cur.error("expected a family: R(n=..,d=..), L(n=..) or T[...]".into())),
    };
    finish(&cur)?;
    Ok(fam)
}

fn named_integer(cur: &mut Cursor<'_>, name: &str) -> Result<u32> {
    if !cur.eat(name) {
        return Err(cur.error(format!("expected '{name}='")));
    }
    cur.expect('=')?;
    cur.positive_integer(name)
}

/// Parses `{x1:3, x2:3}`; `{}` is the empty slice.
pub fn parse_slice(text: &str) -> Result<MultiDegree> {
    let mut cur = Cursor::new(text);
    cur.expect('{')?;
    let mut pairs = Vec::new();
    if !cur.eat("}") {
        loop {
            let v = cur.variable()?;
            cur.expect(':')?;
            let c = cur.positive_integer("letter count")?;
            if pairs.iter().any(|&(u, _)| u == v) {
                return Err(cur.error(format!("x{v} listed twice")));
            }
            pairs.push((v, c));
            if cur.eat("}") {
                break;
            }
            cur.expect(',')?;
        }
    }
    finish(&cur)?;
    Ok(MultiDegree::from_pairs(pairs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::parse;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn builder_forms() {
        let f = parse_expr("S(3; x1, x2, x2)", p(3)).unwrap();
        assert_eq!(f.to_string(), "2*x1*x2*x2 + 2*x2*x1*x2 + 2*x2*x2*x1");
        let g = parse_expr("comm(x1; x2, 2)", p(3)).unwrap();
        assert_eq!(g.to_string(), "x1*x2*x2 + x2*x1*x2 + x2*x2*x1");
        assert!(parse_expr("0", p(5)).unwrap().is_zero());
        assert!((f + g).is_zero());
        let w = parse_expr("w(3)", p(3)).unwrap();
        assert_eq!(w, witness_w(p(3), 1, 2).unwrap());
        assert!(parse_expr("w(5)", p(3)).is_err());
    }

    #[test]
    fn superset_of_polynomial_grammar() {
        for text in ["2*x1*x2 + x2^3", "x1*x2 - x2*x1", "7", "x1^2*x3 + 4*x2"] {
            assert_eq!(parse_expr(text, p(5)).unwrap(), parse(text, p(5)).unwrap());
        }
    }

    #[test]
    fn arithmetic_forms() {
        let q = p(5);
        assert_eq!(parse_expr("(x1 + x2)^2", q).unwrap().to_string(), "x1*x1 + x1*x2 + x2*x1 + x2*x2");
        assert_eq!(parse_expr("-x1 + x1", q).unwrap(), Polynomial::zero(q));
        assert_eq!(parse_expr("frob(x1, x2)", q).unwrap(), parse_expr("(x1+x2)^5", q).unwrap());
        assert_eq!(parse_expr("S(2; x1*x2, x3)", q).unwrap().to_string(), "x1*x2*x3 + x3*x1*x2");
    }

    #[test]
    fn errors() {
        let q = p(3);
        for bad in ["", "S(2; x1)", "comm(x1, x2)", "x1 +", "(x1", "x0", "y1", "x1 x2"] {
            assert!(matches!(parse_expr(bad, q), Err(Error::Parse { .. })), "{bad}");
        }
    }

    #[test]
    fn families() {
        let q = p(3);
        assert_eq!(parse_family("R(n=2,d=3)", q).unwrap(), GeneratorFamily::R { n: 2, d: 3 });
        assert_eq!(parse_family(" L( n = 1 ) ", q).unwrap(), GeneratorFamily::L { n: 1 });
        let t = parse_family("T[ comm(x1; x2, 2) ; x1*x2 ]", q).unwrap();
        assert_eq!(t.to_string(), "T[ x1*x2*x2 + x2*x1*x2 + x2*x2*x1 ; x1*x2 ]");
        assert!(parse_family("R(d=3,n=2)", q).is_err());
        assert!(parse_family("T[ 1 ]", q).is_err());
        assert!(parse_family("Q(n=1)", q).is_err());
    }

    #[test]
    fn slices() {
        let d = parse_slice("{x1:3, x2:3}").unwrap();
        assert_eq!(d, MultiDegree::from_pairs([(1, 3), (2, 3)]));
        assert_eq!(d.to_string(), "{x1:3, x2:3}");
        assert!(parse_slice("{}").unwrap().is_zero());
        assert!(parse_slice("{x1:3, x1:2}").is_err());
        assert!(parse_slice("{x1:0}").is_err());
    }
}
