//! GF(p) arithmetic: inverses, Wilson's theorem, binomials mod p.

use tspaces::gfp::Prime;

fn main() -> tspaces::Result<()> {
    let p = Prime::new(7)?;
    let a = p.element(3);
    println!("in GF(7): 3^-1 = {}, 3^6 = {}", a.inv()?, a.pow(6));
    for n in [3u64, 5, 7, 11, 13] {
        let q = Prime::new(n)?;
        println!("({}-1)! = {} mod {n}", n, q.factorial_mod(n - 1));
    }
    let q = Prime::new(11)?;
    let row: Vec<String> = (0..11).map(|i| q.binomial_mod(10, i).to_string()).collect();
    println!("C(10, i) mod 11: {}", row.join(" "));
    // beyond the Pascal row, Lucas' theorem takes over
    println!("C(100000, 300) mod 7 = {}", p.binomial_mod(100_000, 300));
    Ok(())
}
