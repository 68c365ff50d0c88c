//! Span dimensions of R(n,3) and L(n) over GF(3) across small slices.

use tspaces::expr::parse_slice;
use tspaces::gfp::Prime;
use tspaces::tspace::{span_dimension, Budget, GeneratorFamily};

fn main() -> tspaces::Result<()> {
    let p = Prime::new(3)?;
    let b = Budget::default();
    let families = [
        GeneratorFamily::r(1, 3)?,
        GeneratorFamily::r(2, 3)?,
        GeneratorFamily::l(1)?,
        GeneratorFamily::l(2)?,
    ];
    print!("{:<22} {:>7}", "slice", "words");
    for f in &families {
        print!(" {:>11}", f.to_string());
    }
    println!();
    for s in ["{x1:1, x2:2}", "{x1:3, x2:3}", "{x1:2, x2:2, x3:2}", "{x1:4, x2:2}", "{x1:3, x2:3, x3:3}"] {
        let slice = parse_slice(s)?;
        print!("{s:<22} {:>7}", slice.word_count());
        for f in &families {
            print!(" {:>11}", span_dimension(f, &slice, p, &b)?);
        }
        println!();
    }
    Ok(())
}
