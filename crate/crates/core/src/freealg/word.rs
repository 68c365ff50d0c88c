use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

/// A noncommutative monomial: a finite sequence of variable indices.
///
/// Indices are the `k` of `x<k>` and are positive. The empty word is the
/// unit monomial. Words are ordered degree first, then lexicographically.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(SmallVec<[u32; 8]>);

impl Word {
    pub fn empty() -> Self {
        Word(SmallVec::new())
    }

    pub fn new(letters: impl IntoIterator<Item = u32>) -> Self {
        Word(letters.into_iter().collect())
    }

    pub fn letter(var: u32) -> Self {
        Word(smallvec::smallvec![var])
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = SmallVec::with_capacity(self.0.len() + other.0.len());
        out.extend_from_slice(&self.0);
        out.extend_from_slice(&other.0);
        Word(out)
    }

    pub fn push(&mut self, var: u32) {
        self.0.push(var);
    }

    pub fn extend_from(&mut self, other: &Word) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn pow(&self, n: usize) -> Word {
        let mut out = SmallVec::with_capacity(self.0.len() * n);
        for _ in 0..n {
            out.extend_from_slice(&self.0);
        }
        Word(out)
    }

    pub fn multidegree(&self) -> MultiDegree {
        MultiDegree::of_word(self)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.as_slice().cmp(other.0.as_slice()))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "x{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromIterator<u32> for Word {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        Word::new(iter)
    }
}

/// Letter counts per variable. Absent variables have count zero; zero
/// counts are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MultiDegree {
    counts: BTreeMap<u32, u32>,
    total: u32,
}

impl MultiDegree {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut md = MultiDegree::zero();
        for (var, count) in pairs {
            md.add_count(var, count);
        }
        md
    }

    pub fn of_word(word: &Word) -> Self {
        let mut md = MultiDegree::zero();
        for &v in word.letters() {
            md.add_count(v, 1);
        }
        md
    }

    fn add_count(&mut self, var: u32, count: u32) {
        if count > 0 {
            *self.counts.entry(var).or_insert(0) += count;
            self.total += count;
        }
    }

    pub fn get(&self, var: u32) -> u32 {
        self.counts.get(&var).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u32 {
        self.total
    }

    pub fn is_zero(&self) -> bool {
        self.total == 0
    }

    pub fn counts(&self) -> &BTreeMap<u32, u32> {
        &self.counts
    }

    pub fn vars(&self) -> impl Iterator<Item = u32> + '_ {
        self.counts.keys().copied()
    }

    pub fn add(&self, other: &MultiDegree) -> MultiDegree {
        let mut out = self.clone();
        for (&v, &c) in &other.counts {
            out.add_count(v, c);
        }
        out
    }

    /// Componentwise `self <= other`.
    pub fn fits_in(&self, other: &MultiDegree) -> bool {
        self.counts.iter().all(|(&v, &c)| other.get(v) >= c)
    }

    pub fn checked_sub(&self, other: &MultiDegree) -> Option<MultiDegree> {
        if !other.fits_in(self) {
            return None;
        }
        Some(MultiDegree::from_pairs(
            self.counts.iter().map(|(&v, &c)| (v, c - other.get(v))),
        ))
    }

    pub fn scale(&self, k: u32) -> MultiDegree {
        MultiDegree::from_pairs(self.counts.iter().map(|(&v, &c)| (v, c * k)))
    }

    /// `self / k` when every count is divisible by `k`.
    pub fn divide_exact(&self, k: u32) -> Option<MultiDegree> {
        if k == 0 || self.counts.values().any(|c| c % k != 0) {
            return None;
        }
        Some(MultiDegree::from_pairs(
            self.counts.iter().map(|(&v, &c)| (v, c / k)),
        ))
    }

    /// Number of words with exactly these letter counts, saturating at
    /// `u64::MAX`.
    pub fn word_count(&self) -> u64 {
        let mut acc: u128 = 1;
        let mut n: u128 = 0;
        for &c in self.counts.values() {
            for i in 1..=c as u128 {
                n += 1;
                acc = acc * n / i;
                if acc > u64::MAX as u128 {
                    return u64::MAX;
                }
            }
        }
        acc as u64
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (v, c)) in self.counts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "x{v}:{c}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deg_lex_order() {
        let a = Word::new([2]);
        let b = Word::new([1, 1]);
        let c = Word::new([1, 2]);
        assert!(Word::empty() < a);
        assert!(a < b);
        assert!(b < c);
    }

    #[test]
    fn multidegree_examples() {
        let md = Word::new([1, 2, 1]).multidegree();
        assert_eq!(md, MultiDegree::from_pairs([(1, 2), (2, 1)]));
        assert_eq!(Word::empty().multidegree().total(), 0);
        let xy3 = Word::new([1, 2]).pow(3);
        assert_eq!(xy3.multidegree(), MultiDegree::from_pairs([(1, 3), (2, 3)]));
    }

    #[test]
    fn no_zero_counts() {
        let md = MultiDegree::from_pairs([(1, 0), (2, 3)]);
        assert_eq!(md.counts().len(), 1);
        let diff = md.checked_sub(&MultiDegree::from_pairs([(2, 3)])).unwrap();
        assert!(diff.is_zero());
        assert_eq!(diff, MultiDegree::zero());
    }

    #[test]
    fn word_count_is_multinomial() {
        assert_eq!(MultiDegree::from_pairs([(1, 3), (2, 3)]).word_count(), 20);
        assert_eq!(MultiDegree::from_pairs([(1, 3), (2, 3), (3, 3)]).word_count(), 1680);
        let ones = MultiDegree::from_pairs((1..=6).map(|v| (v, 1)));
        assert_eq!(ones.word_count(), 720);
        assert_eq!(MultiDegree::zero().word_count(), 1);
    }
}
