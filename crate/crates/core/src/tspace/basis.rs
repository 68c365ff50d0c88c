//! Incremental reduced echelon basis of a slice over GF(p).
//!
//! Rows are sparse vectors over the slice's word columns (ascending deg-lex
//! order); each row is normalized with leading coefficient 1 at its pivot,
//! the greatest word it contains, and no pivot column appears in any other
//! row. Because rows carry no foreign pivots, reducing a vector is a single
//! pass over its own pivot entries.
//!
//! With recording enabled every row version is written to a linear tape in
//! terms of inserted generators and earlier row versions. Expressing a
//! member in terms of generators is then one reverse sweep over the tape.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::freealg::{MultiDegree, Polynomial, Word};
use crate::gfp::Prime;
use crate::tspace::enumerate::enumerate_words;

const NO_ROW: u32 = u32::MAX;

/// The word columns of one slice.
#[derive(Debug)]
pub struct SliceColumns {
    slice: MultiDegree,
    words: Vec<Word>,
    index: HashMap<Word, u32>,
}

impl SliceColumns {
    pub fn new(slice: &MultiDegree, max_dimension: u64) -> Result<Self> {
        let words = if slice.is_zero() {
            Vec::new()
        } else {
            enumerate_words(slice, max_dimension)?
        };
        let index = words
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i as u32))
            .collect();
        Ok(SliceColumns {
            slice: slice.clone(),
            words,
            index,
        })
    }

    pub fn slice(&self) -> &MultiDegree {
        &self.slice
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn word(&self, col: u32) -> &Word {
        &self.words[col as usize]
    }

    /// Sparse `(column, residue)` form, ascending by column.
    pub fn vector(&self, f: &Polynomial) -> Result<Vec<(u32, u32)>> {
        let mut v = Vec::with_capacity(f.len());
        for (w, &c) in f.raw_terms() {
            match self.index.get(w) {
                Some(&col) => v.push((col, c)),
                None => {
                    return Err(Error::SliceMismatch {
                        expected: self.slice.clone(),
                    })
                }
            }
        }
        v.sort_unstable_by_key(|e| e.0);
        Ok(v)
    }

    pub fn polynomial(&self, v: &[(u32, u32)], prime: Prime) -> Polynomial {
        let mut out = Polynomial::zero(prime);
        for &(col, c) in v {
            out.add_term(self.words[col as usize].clone(), c);
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum TapeRef {
    Generator(u32),
    Node(u32),
}

#[derive(Clone, Debug, Default)]
struct Tape {
    nodes: Vec<Vec<(TapeRef, u32)>>,
}

#[derive(Clone, Debug)]
struct Row {
    entries: Vec<(u32, u32)>,
    node: u32,
}

impl Row {
    fn pivot(&self) -> u32 {
        self.entries.last().expect("rows are nonzero").0
    }

    fn get(&self, col: u32) -> u32 {
        self.entries
            .binary_search_by_key(&col, |e| e.0)
            .map(|i| self.entries[i].1)
            .unwrap_or(0)
    }
}

/// Reduction of a vector against the basis: the remainder and the pivot
/// rows used with their multipliers.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub remainder: Vec<(u32, u32)>,
    used: Vec<(u32, u32)>,
}

impl Reduction {
    pub fn is_zero(&self) -> bool {
        self.remainder.is_empty()
    }
}

/// Echelon basis of a span inside one slice.
#[derive(Clone, Debug)]
pub struct SpanBasis {
    columns: Arc<SliceColumns>,
    prime: Prime,
    rows: Vec<Row>,
    pivot_row: Vec<u32>,
    tape: Option<Tape>,
    scratch: Vec<u32>,
}

impl SpanBasis {
    pub fn new(slice: &MultiDegree, prime: Prime, max_dimension: u64) -> Result<Self> {
        Ok(Self::with_columns(Arc::new(SliceColumns::new(slice, max_dimension)?), prime))
    }

    pub fn with_columns(columns: Arc<SliceColumns>, prime: Prime) -> Self {
        let dim = columns.len();
        SpanBasis {
            columns,
            prime,
            rows: Vec::new(),
            pivot_row: vec![NO_ROW; dim],
            tape: None,
            scratch: vec![0; dim],
        }
    }

    /// Starts recording row provenance for certificates. Only meaningful on
    /// an empty basis.
    pub fn record_provenance(&mut self) {
        debug_assert!(self.rows.is_empty());
        self.tape = Some(Tape::default());
    }

    pub fn slice(&self) -> &MultiDegree {
        self.columns.slice()
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn columns(&self) -> &Arc<SliceColumns> {
        &self.columns
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dimension(&self) -> usize {
        self.columns.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.columns.len()
    }

    /// Rows keyed by pivot word, as polynomials.
    pub fn rows(&self) -> BTreeMap<Word, Polynomial> {
        self.rows
            .iter()
            .map(|r| {
                (
                    self.columns.word(r.pivot()).clone(),
                    self.columns.polynomial(&r.entries, self.prime),
                )
            })
            .collect()
    }

    pub fn reduce_vector(&mut self, v: &[(u32, u32)]) -> Reduction {
        let p = self.prime;
        let mut used = Vec::new();
        let mut touched: Vec<u32> = Vec::with_capacity(v.len());
        for &(col, c) in v {
            if c == 0 {
                continue;
            }
            self.scratch[col as usize] = p.add(self.scratch[col as usize], c);
            touched.push(col);
            let r = self.pivot_row[col as usize];
            if r != NO_ROW {
                used.push((r, c));
            }
        }
        for &(r, c) in &used {
            let neg = p.neg(c);
            for &(col, a) in &self.rows[r as usize].entries {
                let s = &mut self.scratch[col as usize];
                *s = p.add(*s, p.mul(neg, a));
                touched.push(col);
            }
        }
        touched.sort_unstable();
        touched.dedup();
        let mut remainder = Vec::new();
        for col in touched {
            let s = std::mem::take(&mut self.scratch[col as usize]);
            if s != 0 {
                remainder.push((col, s));
            }
        }
        Reduction { remainder, used }
    }

    pub fn reduce(&mut self, f: &Polynomial) -> Result<Polynomial> {
        self.check_prime(f)?;
        let v = self.columns.vector(f)?;
        let red = self.reduce_vector(&v);
        Ok(self.columns.polynomial(&red.remainder, self.prime))
    }

    pub fn contains(&mut self, f: &Polynomial) -> Result<bool> {
        Ok(self.reduce(f)?.is_zero())
    }

    /// Reduces `g` and adjoins the normalized remainder when it is nonzero.
    /// Returns the remainder before normalization.
    pub fn insert(&mut self, g: &Polynomial) -> Result<Polynomial> {
        self.check_prime(g)?;
        let v = self.columns.vector(g)?;
        let red = self.reduce_vector(&v);
        let out = self.columns.polynomial(&red.remainder, self.prime);
        self.adjoin(red, None);
        Ok(out)
    }

    /// Inserts a vector tagged with a generator id for provenance. Returns
    /// true when the dimension grew.
    pub fn insert_vector(&mut self, v: &[(u32, u32)], generator: u32) -> bool {
        if self.is_full() {
            return false;
        }
        let red = self.reduce_vector(v);
        self.adjoin(red, Some(generator))
    }

    fn adjoin(&mut self, red: Reduction, generator: Option<u32>) -> bool {
        let p = self.prime;
        let Reduction {
            mut remainder,
            used,
        } = red;
        let Some(&(pivot, lead)) = remainder.last() else {
            return false;
        };
        let inv = p.inv(lead).expect("nonzero lead");
        for e in remainder.iter_mut() {
            e.1 = p.mul(e.1, inv);
        }
        let node = match &mut self.tape {
            Some(tape) => {
                let mut inputs = Vec::with_capacity(used.len() + 1);
                if let Some(g) = generator {
                    inputs.push((TapeRef::Generator(g), inv));
                }
                for (r, c) in used {
                    let row_node = self.rows[r as usize].node;
                    inputs.push((TapeRef::Node(row_node), p.neg(p.mul(c, inv))));
                }
                tape.nodes.push(inputs);
                (tape.nodes.len() - 1) as u32
            }
            None => 0,
        };
        // clear the new pivot from every existing row
        let new_node = node;
        for row in self.rows.iter_mut() {
            let a = row.get(pivot);
            if a == 0 {
                continue;
            }
            row.entries = axpy(&row.entries, p.neg(a), &remainder, p);
            if let Some(tape) = &mut self.tape {
                tape.nodes.push(vec![
                    (TapeRef::Node(row.node), 1),
                    (TapeRef::Node(new_node), p.neg(a)),
                ]);
                row.node = (tape.nodes.len() - 1) as u32;
            }
        }
        self.pivot_row[pivot as usize] = self.rows.len() as u32;
        self.rows.push(Row {
            entries: remainder,
            node,
        });
        true
    }

    /// For a vector in the span, its coefficients on the recorded
    /// generators (generator id, residue), sorted by id. `None` when the
    /// vector is not in the span or provenance was not recorded.
    pub fn express(&mut self, v: &[(u32, u32)]) -> Option<Vec<(u32, u32)>> {
        let red = self.reduce_vector(v);
        if !red.is_zero() {
            return None;
        }
        let tape = self.tape.as_ref()?;
        let p = self.prime;
        let mut weight = vec![0u32; tape.nodes.len()];
        for &(r, c) in &red.used {
            let n = self.rows[r as usize].node as usize;
            weight[n] = p.add(weight[n], c);
        }
        let mut gens: BTreeMap<u32, u32> = BTreeMap::new();
        for n in (0..tape.nodes.len()).rev() {
            let w = weight[n];
            if w == 0 {
                continue;
            }
            for &(input, a) in &tape.nodes[n] {
                let contrib = p.mul(w, a);
                match input {
                    TapeRef::Node(k) => weight[k as usize] = p.add(weight[k as usize], contrib),
                    TapeRef::Generator(g) => {
                        let e = gens.entry(g).or_insert(0);
                        *e = p.add(*e, contrib);
                    }
                }
            }
        }
        Some(gens.into_iter().filter(|&(_, c)| c != 0).collect())
    }

    fn check_prime(&self, f: &Polynomial) -> Result<()> {
        if f.prime() != self.prime {
            return Err(Error::PrimeMismatch {
                left: self.prime.value(),
                right: f.prime().value(),
            });
        }
        Ok(())
    }
}

/// `x + a*y` for sorted sparse vectors.
fn axpy(x: &[(u32, u32)], a: u32, y: &[(u32, u32)], p: Prime) -> Vec<(u32, u32)> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j == y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i == x.len() || (j < y.len() && y[j].0 < x[i].0);
        let (col, val) = if take_x {
            i += 1;
            x[i - 1]
        } else if take_y {
            j += 1;
            (y[j - 1].0, p.mul(a, y[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (x[i - 1].0, p.add(x[i - 1].1, p.mul(a, y[j - 1].1)))
        };
        if val != 0 {
            out.push((col, val));
        }
    }
    out
}
