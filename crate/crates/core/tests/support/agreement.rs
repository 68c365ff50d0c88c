//! Engine-versus-oracle comparison on one slice.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tspaces::freealg::{MultiDegree, Polynomial, Word};
use tspaces::gfp::Prime;
use tspaces::tspace::{membership, span_basis, span_dimension, Budget, GeneratorFamily, Status};

use super::naive_span::{naive_echelon, partitions, NaiveFamily, NaiveSlice};

/// Every slice of total degree `1..=max_total`, one per integer partition,
/// with parts assigned to x1, x2, ...
pub fn slices_up_to(max_total: u32) -> Vec<Vec<(u32, u32)>> {
    (1..=max_total)
        .flat_map(partitions)
        .map(|parts| parts.into_iter().enumerate().map(|(i, c)| (i as u32 + 1, c)).collect())
        .collect()
}

fn engine_family(f: NaiveFamily) -> GeneratorFamily {
    match f {
        NaiveFamily::R { d } => GeneratorFamily::r(1, d as u32).unwrap(),
        NaiveFamily::L => GeneratorFamily::l(1).unwrap(),
    }
}

fn to_poly(slice: &NaiveSlice, v: &[u32], p: Prime) -> Polynomial {
    let mut f = Polynomial::zero(p);
    for (i, &c) in v.iter().enumerate() {
        f.add_term(Word::new(slice.words[i].iter().copied()), c);
    }
    f
}

/// Compares span dimension and the verdicts on `targets` random vectors plus
/// every unit vector. Returns a description of the first disagreement.
pub fn compare(family: NaiveFamily, pairs: &[(u32, u32)], p: u32, targets: usize, seed: u64) -> Result<usize, String> {
    let prime = Prime::new(p as u64).unwrap();
    let fam = engine_family(family);
    let slice = MultiDegree::from_pairs(pairs.iter().copied());
    let naive = NaiveSlice::new(pairs, p);
    let oracle = naive_echelon(&naive, family);
    let budget = Budget::default();
    let dim = span_dimension(&fam, &slice, prime, &budget).map_err(|e| e.to_string())?;
    if dim != oracle.rank() {
        return Err(format!("{fam} at {slice}: engine dimension {dim}, oracle {}", oracle.rank()));
    }
    let mut basis = span_basis(&fam, &slice, prime, &budget).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut vectors: Vec<Vec<u32>> = (0..naive.dim())
        .map(|i| {
            let mut v = vec![0; naive.dim()];
            v[i] = 1;
            v
        })
        .collect();
    vectors.extend((0..targets).map(|_| (0..naive.dim()).map(|_| rng.random_range(0..p)).collect()));
    // a random combination of oracle generators is always a member
    let gens = naive.generators(family);
    if !gens.is_empty() {
        let mut comb = vec![0u32; naive.dim()];
        for _ in 0..4 {
            let g = &gens[rng.random_range(0..gens.len())];
            let c = rng.random_range(1..p);
            for (x, &y) in comb.iter_mut().zip(g) {
                *x = (*x + c * y) % p;
            }
        }
        vectors.push(comb);
    }
    for (k, v) in vectors.iter().enumerate() {
        let want = oracle.contains(v);
        let f = to_poly(&naive, v, prime);
        let got = basis.contains(&f).map_err(|e| e.to_string())?;
        if got != want {
            return Err(format!("{fam} at {slice}: vector {k} engine {got}, oracle {want}: {f}"));
        }
        // the full membership path on a few of them
        if k % 7 == 0 && !f.is_zero() {
            let verdict = membership(&f, &fam, &budget, false).map_err(|e| e.to_string())?;
            let expect = if want { Status::Member } else { Status::NotMember };
            if verdict.status != expect {
                return Err(format!("{fam} at {slice}: membership {} for vector {k}, oracle {want}", verdict.status));
            }
        }
    }
    Ok(vectors.len())
}
