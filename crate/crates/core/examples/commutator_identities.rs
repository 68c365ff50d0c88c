//! Left-normed commutators [x, y, ..., y] against the one-x words M_i^{n+1},
//! and S_p(x, y, ..., y) = -[x, y, ..., y].

use tspaces::freealg::{left_normed_commutator, Polynomial};
use tspaces::gfp::Prime;
use tspaces::symmetric::{m_word, s_partial};

fn main() -> tspaces::Result<()> {
    let p = Prime::new(5)?;
    let (x, y) = (Polynomial::var(1, p), Polynomial::var(2, p));
    for n in 1..=4usize {
        let c = left_normed_commutator(&x, &y, n)?;
        let mut sum = Polynomial::zero(p);
        for i in 1..=n + 1 {
            let coeff = p.binomial_mod(n as u64, i as u64 - 1);
            let coeff = if i % 2 == 0 { -coeff } else { coeff };
            sum = sum + Polynomial::monomial(m_word(i, n, 1, 2)?, 1, p).scale(coeff);
        }
        println!("n={n}: [x, y, ..({n})] = {c}   (binomial form agrees: {})", c == sum);
    }
    for n in [3u64, 5, 7] {
        let q = Prime::new(n)?;
        let (x, y) = (Polynomial::var(1, q), Polynomial::var(2, q));
        let s = s_partial(&x, &y, 1, q)?;
        let c = left_normed_commutator(&x, &y, n as usize - 1)?;
        println!("p={n}: S_p(x, y, ..., y) + [x, y, ..., y] = {}", &s + &c);
    }
    Ok(())
}
