//! S_2 S_2 S_2 in six variables lies in R(2,2) over GF(2), in a
//! 720-dimensional slice.

use std::time::Instant;

use tspaces::freealg::Polynomial;
use tspaces::gfp::Prime;
use tspaces::symmetric::sym;
use tspaces::tspace::{membership, Budget, GeneratorFamily};

fn main() -> tspaces::Result<()> {
    let p = Prime::new(2)?;
    let mut target = Polynomial::one(p);
    for b in 0..3 {
        target = target * sym(&[Polynomial::var(2 * b + 1, p), Polynomial::var(2 * b + 2, p)])?;
    }
    let fam = GeneratorFamily::r(2, 2)?;
    let t = Instant::now();
    let v = membership(&target, &fam, &Budget::default(), true)?;
    println!(
        "{} in {fam}: span {} of {} after {} generators ({:.3} s)",
        v.status_label(),
        v.dimension,
        v.ambient_dimension,
        v.generators_used,
        t.elapsed().as_secs_f64()
    );
    let cert = v.certificate.as_deref().unwrap_or_default();
    println!("certificate: {} generators, verified {}", cert.len(), v.verify_certificate(&target, &fam)?);
    for term in cert.iter().take(5) {
        println!("  {} * {}", term.coefficient, term.generator);
    }
    Ok(())
}
