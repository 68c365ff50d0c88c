//! (u+v)^p through partial symmetrizations, and the division-free
//! linearization of z^d.

use tspaces::expr::parse_expr;
use tspaces::gfp::Prime;
use tspaces::symmetric::{frobenius_expand, linearize_inclusion_exclusion, sym};

fn main() -> tspaces::Result<()> {
    let p = Prime::new(3)?;
    let u = parse_expr("x1 + 2*x1*x2", p)?;
    let v = parse_expr("x2*x2", p)?;
    let lhs = frobenius_expand(&u, &v)?;
    let rhs = (&u + &v).pow(3);
    println!("u = {u}, v = {v}");
    println!("(u+v)^3 has {} terms; expansion matches: {}", rhs.len(), lhs == rhs);

    for n in [2u64, 3, 5] {
        let q = Prime::new(n)?;
        let args = vec![parse_expr("x1", q)?, parse_expr("x2*x3", q)?, parse_expr("x4 + x1", q)?];
        let lin = linearize_inclusion_exclusion(&args)?;
        println!("p={n}: linearization equals S_3: {}", lin == sym(&args)?);
    }
    Ok(())
}
