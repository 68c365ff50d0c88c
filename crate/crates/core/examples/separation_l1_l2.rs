//! (xy)^3 separates R(1,3) from L(1); w separates L(1) from L(2).

use tspaces::freealg::{Polynomial, Word};
use tspaces::gfp::Prime;
use tspaces::symmetric::{collapse_homomorphism, sym, witness_w};
use tspaces::tspace::{membership, Budget, GeneratorFamily};

fn main() -> tspaces::Result<()> {
    let p = Prime::new(3)?;
    let b = Budget::default();
    let xy3 = Polynomial::monomial(Word::new([1, 2]).pow(3), 1, p);
    let w = witness_w(p, 1, 2)?;
    let cases = [
        ("(x1 x2)^3", &xy3, GeneratorFamily::r(1, 3)?),
        ("(x1 x2)^3", &xy3, GeneratorFamily::l(1)?),
        ("w", &w, GeneratorFamily::l(1)?),
        ("w", &w, GeneratorFamily::l(2)?),
    ];
    for (name, target, fam) in cases {
        let v = membership(target, &fam, &b, false)?;
        println!("{name:<10} in {fam:<11} {}", v.status_label());
    }
    // x -> x, y -> 1, z -> 0 kills every S_3 instance but not w's square part
    let args: Vec<Polynomial> = [[1u32, 2].as_slice(), &[2, 2, 1], &[3]]
        .iter()
        .map(|l| Polynomial::monomial(Word::new(l.iter().copied()), 1, p))
        .collect();
    let s = sym(&args)?;
    println!("alpha(S_3(x1 x2, x2 x2 x1, x3)) = {}", s.substitute(&collapse_homomorphism(&s, 1, 2))?);
    Ok(())
}
