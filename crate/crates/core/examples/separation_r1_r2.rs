//! The witness w lies in R(2,3) but not in R(1,3) over GF(3).

use tspaces::gfp::Prime;
use tspaces::symmetric::witness_w;
use tspaces::tspace::{membership, Budget, GeneratorFamily};

fn main() -> tspaces::Result<()> {
    let p = Prime::new(3)?;
    let w = witness_w(p, 1, 2)?;
    println!("w = {w}");
    let budget = Budget::default();
    for fam in [GeneratorFamily::r(1, 3)?, GeneratorFamily::r(2, 3)?] {
        let v = membership(&w, &fam, &budget, true)?;
        println!(
            "{fam}: {} (span {} of {}, {} generators)",
            v.status_label(),
            v.dimension,
            v.ambient_dimension,
            v.generators_used
        );
        if let Some(r) = &v.remainder {
            println!("  reduced remainder: {r}");
        }
        if let Some(cert) = &v.certificate {
            for t in cert {
                println!("  {} * {}", t.coefficient, t.generator);
            }
            println!("  certificate re-expands to w: {}", v.verify_certificate(&w, &fam)?);
        }
    }
    Ok(())
}
