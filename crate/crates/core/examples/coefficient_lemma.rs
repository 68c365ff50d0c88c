//! For random word tuples, the coefficients of (xy)^p and (yx)^p in
//! S_p(u_1, ..., u_p) cancel.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tspaces::freealg::{Polynomial, Word};
use tspaces::gfp::Prime;
use tspaces::symmetric::sym;

fn main() -> tspaces::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for n in [3usize, 5] {
        let p = Prime::new(n as u64)?;
        let mut nonzero = 0;
        for k in 0..10 {
            let mut letters: Vec<u32> = [1, 2].iter().flat_map(|&v| std::iter::repeat_n(v, n)).collect();
            letters.shuffle(&mut rng);
            // cut after the first n-1 of a shuffled set of positions
            let mut cuts: Vec<usize> = (1..2 * n).collect();
            cuts.shuffle(&mut rng);
            let mut cuts = cuts[..n - 1].to_vec();
            cuts.sort_unstable();
            cuts.insert(0, 0);
            cuts.push(2 * n);
            let args: Vec<Polynomial> = cuts
                .windows(2)
                .map(|c| Polynomial::monomial(Word::new(letters[c[0]..c[1]].iter().copied()), 1, p))
                .collect();
            let s = sym(&args)?;
            let a = s.coeff(&Word::new([1, 2]).pow(n));
            let b = s.coeff(&Word::new([2, 1]).pow(n));
            if !(a + b).is_zero() {
                nonzero += 1;
            }
            if k < 3 {
                let shown: Vec<String> = args.iter().map(|f| f.to_string()).collect();
                println!("p={n} ({}): {a} + {b}", shown.join(", "));
            }
        }
        println!("p={n}: {nonzero} of 10 sums nonzero");
    }
    Ok(())
}
