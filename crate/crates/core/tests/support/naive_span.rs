//! Brute-force span oracle for the R(1, d) and L(1) families.
//!
//! Shares nothing with the engine: words are found by filtering every
//! sequence over the alphabet, argument tuples are every ordered cut of every
//! word (no multiset dedup), `S_d` is expanded with `itertools`
//! permutations, and spans are computed with dense Gaussian elimination.

#![allow(dead_code)]

use std::collections::HashMap;

use itertools::Itertools;

#[derive(Clone, Copy, Debug)]
pub enum NaiveFamily {
    /// `R(1, d)`: all `S_d(m_1, ..., m_d)` for nonempty words `m_i`.
    R { d: usize },
    /// `L(1)`: all `m^p` and all `S_p(m_1, ..., m_p)`.
    L,
}

pub struct NaiveSlice {
    pub words: Vec<Vec<u32>>,
    pub index: HashMap<Vec<u32>, usize>,
    pub p: u32,
}

impl NaiveSlice {
    /// `counts[i]` letters of variable `vars[i]`.
    pub fn new(slice: &[(u32, u32)], p: u32) -> Self {
        let alphabet: Vec<u32> = slice.iter().map(|&(v, _)| v).collect();
        let total: u32 = slice.iter().map(|&(_, c)| c).sum();
        let mut words = Vec::new();
        let mut cur = Vec::new();
        all_sequences(&alphabet, total as usize, &mut cur, &mut |w| {
            let ok = slice
                .iter()
                .all(|&(v, c)| w.iter().filter(|&&l| l == v).count() as u32 == c);
            if ok {
                words.push(w.to_vec());
            }
        });
        words.sort();
        let index = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        NaiveSlice { words, index, p }
    }

    pub fn dim(&self) -> usize {
        self.words.len()
    }

    pub fn generators(&self, family: NaiveFamily) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let arity = match family {
            NaiveFamily::R { d } => d,
            NaiveFamily::L => self.p as usize,
        };
        if let NaiveFamily::L = family {
            let p = self.p as usize;
            // every word m with m^p in the slice
            let len = self.words.first().map_or(0, |w| w.len());
            if len.is_multiple_of(p) {
                for w in &self.words {
                    let m = &w[..len / p];
                    let power: Vec<u32> = m.iter().copied().cycle().take(len).collect();
                    if &power == w {
                        let mut v = vec![0; self.dim()];
                        v[self.index[w]] = 1;
                        out.push(v);
                    }
                }
            }
        }
        for w in &self.words {
            for cuts in (1..w.len()).combinations(arity.saturating_sub(1)) {
                if arity == 0 || cuts.len() + 1 != arity {
                    continue;
                }
                let mut bounds = vec![0];
                bounds.extend(cuts);
                bounds.push(w.len());
                let pieces: Vec<&[u32]> = bounds.windows(2).map(|b| &w[b[0]..b[1]]).collect();
                let mut v = vec![0u32; self.dim()];
                for perm in (0..arity).permutations(arity) {
                    let word: Vec<u32> = perm.iter().flat_map(|&i| pieces[i].iter().copied()).collect();
                    let col = self.index[&word];
                    v[col] = (v[col] + 1) % self.p;
                }
                out.push(v);
            }
        }
        out
    }

    pub fn dense(&self, terms: &[(Vec<u32>, u32)]) -> Vec<u32> {
        let mut v = vec![0; self.dim()];
        for (w, c) in terms {
            let col = self.index[w];
            v[col] = (v[col] + c) % self.p;
        }
        v
    }
}

fn all_sequences(alphabet: &[u32], len: usize, cur: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
    if cur.len() == len {
        f(cur);
        return;
    }
    for &a in alphabet {
        cur.push(a);
        all_sequences(alphabet, len, cur, f);
        cur.pop();
    }
}

fn inv(a: u32, p: u32) -> u32 {
    (1..p).find(|&b| (a as u64 * b as u64) % p as u64 == 1).unwrap()
}

/// Dense echelon form; each stored row is normalized and reduced against
/// the rows before it.
pub struct DenseEchelon {
    p: u32,
    dim: usize,
    rows: Vec<(usize, Vec<u32>)>,
}

impl DenseEchelon {
    pub fn new(dim: usize, p: u32) -> Self {
        DenseEchelon { p, dim, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let p = self.p as u64;
        let mut v = v.to_vec();
        for (pivot, row) in &self.rows {
            let c = v[*pivot] as u64;
            if c != 0 {
                for (x, &r) in v.iter_mut().zip(row) {
                    *x = ((*x as u64 + (p - c) * r as u64) % p) as u32;
                }
            }
        }
        v
    }

    pub fn insert(&mut self, v: &[u32]) -> bool {
        if self.rows.len() == self.dim {
            return false;
        }
        let mut r = self.reduce(v);
        let Some(pivot) = r.iter().position(|&x| x != 0) else {
            return false;
        };
        let s = inv(r[pivot], self.p) as u64;
        for x in r.iter_mut() {
            *x = ((*x as u64 * s) % self.p as u64) as u32;
        }
        self.rows.push((pivot, r));
        true
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }
}

pub fn naive_echelon(slice: &NaiveSlice, family: NaiveFamily) -> DenseEchelon {
    let mut ech = DenseEchelon::new(slice.dim(), slice.p);
    for g in slice.generators(family) {
        ech.insert(&g);
    }
    ech
}

/// Integer partitions of `n` in non-increasing order of parts.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            cur.push(part);
            go(n - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}
