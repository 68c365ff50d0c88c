use crate::error::{Error, Result};
use crate::freealg::{MultiDegree, Word};

/// All words with exactly the letter counts of `d`, in ascending deg-lex
/// order. Fails when there are more than `cap` of them.
pub fn enumerate_words(d: &MultiDegree, cap: u64) -> Result<Vec<Word>> {
    let count = d.word_count();
    if count > cap {
        return Err(Error::CapExceeded {
            what: "slice dimension",
            got: count,
            cap,
        });
    }
    let mut letters: Vec<u32> = d
        .counts()
        .iter()
        .flat_map(|(&v, &c)| std::iter::repeat_n(v, c as usize))
        .collect();
    let mut out = Vec::with_capacity(count as usize);
    loop {
        out.push(Word::new(letters.iter().copied()));
        if !next_permutation(&mut letters) {
            break;
        }
    }
    Ok(out)
}

/// Advances to the next lexicographic permutation; `false` once the last
/// one has been reached.
fn next_permutation(xs: &mut [u32]) -> bool {
    let n = xs.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && xs[i - 1] >= xs[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while xs[j] <= xs[i - 1] {
        j -= 1;
    }
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

/// Every nonzero `c` with `scale * c <= bound` componentwise, in a fixed
/// order.
pub(crate) fn scaled_sub_multidegrees(bound: &MultiDegree, scale: u32) -> Vec<MultiDegree> {
    let vars: Vec<(u32, u32)> = bound
        .counts()
        .iter()
        .map(|(&v, &c)| (v, c / scale.max(1)))
        .collect();
    let mut out = Vec::new();
    let mut cur = vec![0u32; vars.len()];
    loop {
        if cur.iter().any(|&c| c > 0) {
            out.push(MultiDegree::from_pairs(
                vars.iter().zip(&cur).map(|(&(v, _), &c)| (v, c)),
            ));
        }
        // odometer increment
        let mut k = 0;
        loop {
            if k == vars.len() {
                return out;
            }
            if cur[k] < vars[k].1 {
                cur[k] += 1;
                break;
            }
            cur[k] = 0;
            k += 1;
        }
    }
}

/// All ordered tuples of `parts` nonzero multidegrees summing to `target`.
pub fn split_multidegree(target: &MultiDegree, parts: usize) -> Vec<Vec<MultiDegree>> {
    let mut out = Vec::new();
    if parts == 0 {
        if target.is_zero() {
            out.push(Vec::new());
        }
        return out;
    }
    let mut cur = Vec::with_capacity(parts);
    split_rec(target, parts, &mut cur, &mut out);
    out
}

fn split_rec(rest: &MultiDegree, parts: usize, cur: &mut Vec<MultiDegree>, out: &mut Vec<Vec<MultiDegree>>) {
    if (rest.total() as usize) < parts {
        return;
    }
    if parts == 1 {
        cur.push(rest.clone());
        out.push(cur.clone());
        cur.pop();
        return;
    }
    for first in scaled_sub_multidegrees(rest, 1) {
        let remaining = rest.checked_sub(&first).expect("sub-multidegree fits");
        if (remaining.total() as usize) < parts - 1 {
            continue;
        }
        cur.push(first);
        split_rec(&remaining, parts - 1, cur, out);
        cur.pop();
    }
}
