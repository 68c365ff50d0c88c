//! T-spaces of user generators: [x, y, y] spans S_3 instances through its
//! partial polarizations.

use tspaces::expr::{parse_expr, parse_family};
use tspaces::gfp::Prime;
use tspaces::tspace::{family_generators, membership, Budget};

fn main() -> tspaces::Result<()> {
    let p = Prime::new(3)?;
    let fam = parse_family("T[ comm(x1; x2, 2) ]", p)?;
    let slice = tspaces::expr::parse_slice("{x1:1, x2:1, x3:1}")?;
    let (gens, _) = family_generators(&fam, &slice, p, 100)?;
    println!("{} generators of {fam} at {slice}:", gens.len());
    for (spec, g) in &gens {
        println!("  {spec} = {g}");
    }
    for target in ["S(3; x1, x2, x3)", "x1*x2*x3"] {
        let t = parse_expr(target, p)?;
        let v = membership(&t, &fam, &Budget::default(), false)?;
        println!("{target}: {}", v.status_label());
    }
    Ok(())
}
