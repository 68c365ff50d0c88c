//! Expanding S_d with polynomial arguments, and the expression grammar.

use tspaces::expr::parse_expr;
use tspaces::freealg::Polynomial;
use tspaces::gfp::Prime;
use tspaces::symmetric::{s_d, ArgList};

fn main() -> tspaces::Result<()> {
    let p = Prime::new(3)?;
    let (x, y) = (Polynomial::var(1, p), Polynomial::var(2, p));
    let s = s_d(&ArgList::new(vec![x.clone(), y.clone(), y.clone()])?);
    println!("S_3(x1, x2, x2) = {s}");

    let u = &x * &y;
    let s = s_d(&ArgList::new(vec![u, x + y])?);
    println!("S_2(x1*x2, x1 + x2) = {s}");

    for e in ["S(3; x1, x2, x3)", "S(2; x1^2, x2) - x1*x1*x2", "w(3)"] {
        let f = parse_expr(e, p)?;
        println!("{e:<28} -> {} terms, multidegree {:?}", f.len(), f.multidegree().map(|d| d.to_string()));
    }
    Ok(())
}
