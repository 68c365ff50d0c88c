//! Generator families and their explicit spanning sets inside one slice.
//!
//! For `R(n, d)` a slice is spanned by products of at most `n` factors
//! `S_d(m_1, ..., m_d)` with monomial arguments, because `S_d` is
//! multilinear and polynomial substitutions expand into monomial ones.
//! For `L(n)` each factor is either `m^p` or `S_p(m_1, ..., m_p)`: the
//! multinomial expansion of `u^p` only produces those two shapes, with unit
//! coefficients. For `T[g_1; ...]` we take monomial substitution instances
//! of every partial polarization of every multihomogeneous component of the
//! generators.

use std::collections::HashMap;
use std::fmt;
use std::ops::ControlFlow;
use std::rc::Rc;

use crate::error::{Error, Result};
use crate::freealg::{MultiDegree, Polynomial, Substitution, Word};
use crate::gfp::Prime;
use crate::symmetric::{self, DEFAULT_ARITY_CAP};
use crate::tspace::enumerate::{enumerate_words, scaled_sub_multidegrees, split_multidegree};

/// First variable index used for polarization variables; slice variables
/// must stay below it.
pub const FRESH_BASE: u32 = 1 << 30;

/// A T-space family whose slices the engine can span explicitly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorFamily {
    /// The `n`-th space of the chain built from `S_d`.
    R { n: u32, d: u32 },
    /// The `n`-th space of the chain built from `x^p`, `p` the ambient prime.
    L { n: u32 },
    /// The T-space generated by constant-free polynomials.
    TSpaceOf(Vec<Polynomial>),
}

/// How a verdict relates to the true T-space slice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Semantics {
    /// The enumerated span is the slice of the T-space over any
    /// infinite extension of GF(p), and a GF(p)-coefficient target lies in it
    /// iff it lies in the GF(p)-span.
    SliceSpan,
    /// Span of monomial instances of partial polarizations; negatives are
    /// relative to this span.
    PolarizedSpan,
}

impl Semantics {
    pub fn label(self) -> &'static str {
        match self {
            Semantics::SliceSpan => "slice-span semantics",
            Semantics::PolarizedSpan => "polarized-span semantics",
        }
    }
}

impl GeneratorFamily {
    pub fn r(n: u32, d: u32) -> Result<Self> {
        if n == 0 || d == 0 {
            return Err(Error::IndexOutOfRange {
                index: n.min(d) as i64,
                context: "R(n, d) needs n >= 1 and d >= 1".into(),
            });
        }
        Ok(GeneratorFamily::R { n, d })
    }

    pub fn l(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::IndexOutOfRange {
                index: 0,
                context: "L(n) needs n >= 1".into(),
            });
        }
        Ok(GeneratorFamily::L { n })
    }

    pub fn tspace_of(generators: Vec<Polynomial>) -> Result<Self> {
        let fam = GeneratorFamily::TSpaceOf(generators);
        if let GeneratorFamily::TSpaceOf(gens) = &fam {
            if let Some(g) = gens.first() {
                fam.validate(g.prime())?;
            }
        }
        Ok(fam)
    }

    /// Checks parameters and that every generator is a constant-free
    /// polynomial over `prime`.
    pub fn validate(&self, prime: Prime) -> Result<()> {
        match self {
            GeneratorFamily::R { n, d } => GeneratorFamily::r(*n, *d).map(|_| ()),
            GeneratorFamily::L { n } => GeneratorFamily::l(*n).map(|_| ()),
            GeneratorFamily::TSpaceOf(gens) => {
                for (i, g) in gens.iter().enumerate() {
                    if g.prime() != prime {
                        return Err(Error::PrimeMismatch {
                            left: prime.value(),
                            right: g.prime().value(),
                        });
                    }
                    if !g.constant_term().is_zero() {
                        return Err(Error::Unsupported(format!(
                            "generator {i} of a T-space must be constant-free"
                        )));
                    }
                    if g.variables().iter().any(|&v| v >= FRESH_BASE) {
                        return Err(Error::Unsupported(format!(
                            "generator {i} uses a variable index reserved for polarization"
                        )));
                    }
                }
                Ok(())
            }
        }
    }

    pub fn semantics(&self) -> Semantics {
        match self {
            GeneratorFamily::TSpaceOf(_) => Semantics::PolarizedSpan,
            _ => Semantics::SliceSpan,
        }
    }
}

impl fmt::Display for GeneratorFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorFamily::R { n, d } => write!(f, "R(n={n},d={d})"),
            GeneratorFamily::L { n } => write!(f, "L(n={n})"),
            GeneratorFamily::TSpaceOf(gens) => {
                write!(f, "T[ ")?;
                for (i, g) in gens.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ; ")?;
                    }
                    write!(f, "{g}")?;
                }
                write!(f, " ]")
            }
        }
    }
}

/// One factor of a product generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Factor {
    /// `S_d` of the listed words (a sorted multiset).
    Sym(Vec<Word>),
    /// `base^exp`.
    Power { base: Word, exp: u32 },
}

impl Factor {
    pub fn realize(&self, prime: Prime) -> Result<Polynomial> {
        match self {
            Factor::Sym(words) => {
                let args: Vec<Polynomial> = words
                    .iter()
                    .map(|w| Polynomial::monomial(w.clone(), 1, prime))
                    .collect();
                symmetric::sym(&args)
            }
            Factor::Power { base, exp } => Ok(Polynomial::monomial(base.clone(), 1, prime).pow(*exp)),
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Sym(words) => {
                write!(f, "S({}; ", words.len())?;
                for (i, w) in words.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{w}")?;
                }
                write!(f, ")")
            }
            Factor::Power { base, exp } => write!(f, "({base})^{exp}"),
        }
    }
}

/// Polarization pattern: for each variable of a generator component, the
/// partition of its degree among fresh variables.
pub type Pattern = Vec<(u32, Vec<u32>)>;

/// A reproducible description of one spanning generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorSpec {
    Product(Vec<Factor>),
    Polarized {
        generator: usize,
        component: MultiDegree,
        pattern: Pattern,
        /// Images of the fresh variables in pattern order.
        images: Vec<Word>,
    },
}

impl GeneratorSpec {
    /// Rebuilds the generator from scratch through the algebra operations
    /// (symmetrization, products, substitution, component extraction).
    pub fn realize(&self, family: &GeneratorFamily, prime: Prime) -> Result<Polynomial> {
        match self {
            GeneratorSpec::Product(factors) => factors.iter().try_fold(Polynomial::one(prime), |acc, f| {
                Ok(&acc * &f.realize(prime)?)
            }),
            GeneratorSpec::Polarized {
                generator,
                component,
                pattern,
                images,
            } => {
                let GeneratorFamily::TSpaceOf(gens) = family else {
                    return Err(Error::Unsupported(
                        "polarized generator outside a T[...] family".into(),
                    ));
                };
                let g = gens.get(*generator).ok_or_else(|| Error::IndexOutOfRange {
                    index: *generator as i64,
                    context: "generator index".into(),
                })?;
                let h = g.component(component);
                let (polarized, fresh) = polarize_by_substitution(&h, pattern)?;
                if fresh.len() != images.len() {
                    return Err(Error::IndexOutOfRange {
                        index: images.len() as i64,
                        context: "image count does not match the polarization".into(),
                    });
                }
                let mut s = Substitution::new();
                for (&(var, _), w) in fresh.iter().zip(images) {
                    s.set(var, Polynomial::monomial(w.clone(), 1, prime))?;
                }
                polarized.substitute(&s)
            }
        }
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorSpec::Product(factors) => {
                for (i, fac) in factors.iter().enumerate() {
                    if i > 0 {
                        write!(f, " * ")?;
                    }
                    write!(f, "{fac}")?;
                }
                Ok(())
            }
            GeneratorSpec::Polarized {
                generator,
                pattern,
                images,
                ..
            } => {
                write!(f, "pol(T{generator}; ")?;
                for (i, (v, parts)) in pattern.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    let parts: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                    write!(f, "x{v}={}", parts.join("+"))?;
                }
                write!(f, ")[")?;
                for (i, w) in images.iter().enumerate() {
                    if i > 0 {
                        write!(f, " | ")?;
                    }
                    write!(f, "{w}")?;
                }
                write!(f, "]")
            }
        }
    }
}

/// Fresh variables of a pattern as `(index, exponent, original variable)`.
fn fresh_variables(pattern: &Pattern) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for (v, parts) in pattern {
        for &a in parts {
            out.push((FRESH_BASE + out.len() as u32, a, *v));
        }
    }
    out
}

/// Partial polarization through the algebra: substitute each variable by
/// the sum of its fresh variables, then keep the component with the
/// pattern's degrees. Returns the polarized polynomial and its fresh
/// variables with exponents.
pub fn polarize_by_substitution(h: &Polynomial, pattern: &Pattern) -> Result<(Polynomial, Vec<(u32, u32)>)> {
    let prime = h.prime();
    let fresh = fresh_variables(pattern);
    let mut s = Substitution::new();
    for (v, _) in pattern {
        let sum = fresh
            .iter()
            .filter(|f| f.2 == *v)
            .fold(Polynomial::zero(prime), |acc, f| &acc + &Polynomial::var(f.0, prime));
        s.set(*v, sum)?;
    }
    let target = MultiDegree::from_pairs(fresh.iter().map(|f| (f.0, f.1)));
    let polarized = h.substitute(&s)?.component(&target);
    Ok((polarized, fresh.iter().map(|f| (f.0, f.1)).collect()))
}

/// The same polarization computed combinatorially: every distinct placement
/// of fresh labels onto the positions of their variable.
fn polarize_direct(h: &Polynomial, pattern: &Pattern) -> Polynomial {
    let prime = h.prime();
    let fresh = fresh_variables(pattern);
    let mut out = Polynomial::zero(prime);
    let labels: Vec<(u32, Vec<u32>)> = pattern
        .iter()
        .map(|(v, _)| {
            let mut ls: Vec<u32> = fresh
                .iter()
                .filter(|f| f.2 == *v)
                .flat_map(|f| std::iter::repeat_n(f.0, f.1 as usize))
                .collect();
            ls.sort_unstable();
            (*v, ls)
        })
        .collect();
    for (w, &c) in h.raw_terms() {
        let mut letters: Vec<u32> = w.letters().to_vec();
        place_labels(&labels, 0, w.letters(), &mut letters, &mut |word| {
            out.add_term(Word::new(word.iter().copied()), c)
        });
    }
    out
}

fn place_labels(labels: &[(u32, Vec<u32>)], k: usize, original: &[u32], cur: &mut Vec<u32>, emit: &mut impl FnMut(&[u32])) {
    if k == labels.len() {
        emit(cur);
        return;
    }
    let (v, ls) = &labels[k];
    let positions: Vec<usize> = original
        .iter()
        .enumerate()
        .filter(|(_, &l)| l == *v)
        .map(|(i, _)| i)
        .collect();
    let mut perm = ls.clone();
    loop {
        for (&pos, &l) in positions.iter().zip(&perm) {
            cur[pos] = l;
        }
        place_labels(labels, k + 1, original, cur, emit);
        if !next_perm(&mut perm) {
            break;
        }
    }
}

fn next_perm(xs: &mut [u32]) -> bool {
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

/// Integer partitions of `n`, parts in non-increasing order.
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

type FactorList = Rc<Vec<(Factor, Polynomial)>>;

/// Streams the spanning generators of `family` inside `slice`, without
/// duplicate descriptions, in a fixed order. Generators that vanish
/// identically are skipped. The callback may stop the stream early.
pub fn for_each_generator(
    family: &GeneratorFamily,
    slice: &MultiDegree,
    prime: Prime,
    mut emit: impl FnMut(GeneratorSpec, Polynomial) -> ControlFlow<()>,
) -> Result<ControlFlow<()>> {
    family.validate(prime)?;
    if slice.is_zero() {
        return Ok(ControlFlow::Continue(()));
    }
    if slice.vars().any(|v| v >= FRESH_BASE) {
        return Err(Error::Unsupported(
            "slice uses a variable index reserved for polarization".into(),
        ));
    }
    let mut en = Enumerator {
        prime,
        words: HashMap::new(),
        factors: HashMap::new(),
    };
    match family {
        GeneratorFamily::R { n, d } => en.products(slice, *n, FactorKind::Sym(*d as usize), &mut emit),
        GeneratorFamily::L { n } => en.products(slice, *n, FactorKind::PowerOrSym(prime.value() as usize), &mut emit),
        GeneratorFamily::TSpaceOf(gens) => en.polarized(gens, slice, &mut emit),
    }
}

#[derive(Clone, Copy)]
enum FactorKind {
    Sym(usize),
    PowerOrSym(usize),
}

struct Enumerator {
    prime: Prime,
    words: HashMap<MultiDegree, Rc<Vec<Word>>>,
    factors: HashMap<MultiDegree, FactorList>,
}

impl Enumerator {
    fn words(&mut self, d: &MultiDegree) -> Rc<Vec<Word>> {
        self.words
            .entry(d.clone())
            .or_insert_with(|| Rc::new(enumerate_words(d, u64::MAX).expect("uncapped")))
            .clone()
    }

    fn products(
        &mut self,
        slice: &MultiDegree,
        n: u32,
        kind: FactorKind,
        emit: &mut impl FnMut(GeneratorSpec, Polynomial) -> ControlFlow<()>,
    ) -> Result<ControlFlow<()>> {
        let arity = match kind {
            FactorKind::Sym(d) | FactorKind::PowerOrSym(d) => d,
        };
        if arity > DEFAULT_ARITY_CAP {
            return Err(Error::CapExceeded {
                what: "S_d arity",
                got: arity as u64,
                cap: DEFAULT_ARITY_CAP as u64,
            });
        }
        for j in 1..=n as usize {
            if (slice.total() as usize) < j * arity {
                break;
            }
            for split in split_multidegree(slice, j) {
                let lists: Vec<FactorList> = split.iter().map(|d| self.factor_list(d, kind)).collect::<Result<_>>()?;
                if lists.iter().any(|l| l.is_empty()) {
                    continue;
                }
                let mut chosen = Vec::with_capacity(j);
                let prefix = Polynomial::one(self.prime);
                if cartesian(&lists, 0, &prefix, &mut chosen, emit).is_break() {
                    return Ok(ControlFlow::Break(()));
                }
            }
        }
        Ok(ControlFlow::Continue(()))
    }

    fn factor_list(&mut self, d: &MultiDegree, kind: FactorKind) -> Result<FactorList> {
        if let Some(l) = self.factors.get(d) {
            return Ok(l.clone());
        }
        let mut list = Vec::new();
        let arity = match kind {
            FactorKind::PowerOrSym(p) => {
                if let Some(base) = d.divide_exact(p as u32) {
                    for w in self.words(&base).iter() {
                        let f = Factor::Power {
                            base: w.clone(),
                            exp: p as u32,
                        };
                        let poly = Polynomial::monomial(w.pow(p), 1, self.prime);
                        list.push((f, poly));
                    }
                }
                p
            }
            FactorKind::Sym(d) => d,
        };
        let mut chosen = Vec::with_capacity(arity);
        let mut multisets = Vec::new();
        self.word_multisets(d, arity, &mut chosen, &mut multisets);
        for ws in multisets {
            let f = Factor::Sym(ws);
            let poly = f.realize(self.prime)?;
            if !poly.is_zero() {
                list.push((f, poly));
            }
        }
        let list = Rc::new(list);
        self.factors.insert(d.clone(), list.clone());
        Ok(list)
    }

    /// Sorted tuples `w_1 <= ... <= w_k` of nonempty words whose
    /// multidegrees sum to `rest`.
    fn word_multisets(&mut self, rest: &MultiDegree, k: usize, chosen: &mut Vec<Word>, out: &mut Vec<Vec<Word>>) {
        if k == 0 {
            if rest.is_zero() {
                out.push(chosen.clone());
            }
            return;
        }
        if (rest.total() as usize) < k {
            return;
        }
        let candidates = if k == 1 {
            vec![rest.clone()]
        } else {
            scaled_sub_multidegrees(rest, 1)
        };
        for c in candidates {
            let remaining = rest.checked_sub(&c).expect("fits");
            if (remaining.total() as usize) < k - 1 {
                continue;
            }
            // later words are at least as long as this one
            if (c.total() as usize) * (k - 1) > remaining.total() as usize {
                continue;
            }
            for w in self.words(&c).iter() {
                if chosen.last().is_some_and(|prev| w < prev) {
                    continue;
                }
                chosen.push(w.clone());
                self.word_multisets(&remaining, k - 1, chosen, out);
                chosen.pop();
            }
        }
    }

    fn polarized(
        &mut self,
        gens: &[Polynomial],
        slice: &MultiDegree,
        emit: &mut impl FnMut(GeneratorSpec, Polynomial) -> ControlFlow<()>,
    ) -> Result<ControlFlow<()>> {
        for (gi, g) in gens.iter().enumerate() {
            for (md, h) in g.components() {
                let vars: Vec<(u32, u32)> = md.counts().iter().map(|(&v, &c)| (v, c)).collect();
                let per_var: Vec<Vec<Vec<u32>>> = vars.iter().map(|&(_, e)| partitions(e)).collect();
                let mut idx = vec![0usize; vars.len()];
                loop {
                    let pattern: Pattern = vars
                        .iter()
                        .zip(&idx)
                        .enumerate()
                        .map(|(k, (&(v, _), &i))| (v, per_var[k][i].clone()))
                        .collect();
                    let polarized = polarize_direct(&h, &pattern);
                    if !polarized.is_zero() {
                        let fresh = fresh_variables(&pattern);
                        let need: u32 = fresh.iter().map(|f| f.1).sum();
                        if need <= slice.total() {
                            let mut images = Vec::with_capacity(fresh.len());
                            let flow = self.assign_images(&fresh, 0, slice, &polarized, &mut images, &mut |images, poly| {
                                emit(
                                    GeneratorSpec::Polarized {
                                        generator: gi,
                                        component: md.clone(),
                                        pattern: pattern.clone(),
                                        images: images.to_vec(),
                                    },
                                    poly,
                                )
                            });
                            if flow.is_break() {
                                return Ok(ControlFlow::Break(()));
                            }
                        }
                    }
                    // next pattern
                    let mut k = 0;
                    loop {
                        if k == idx.len() {
                            break;
                        }
                        idx[k] += 1;
                        if idx[k] < per_var[k].len() {
                            break;
                        }
                        idx[k] = 0;
                        k += 1;
                    }
                    if k == idx.len() {
                        break;
                    }
                }
            }
        }
        Ok(ControlFlow::Continue(()))
    }

    #[allow(clippy::too_many_arguments)]
    fn assign_images(
        &mut self,
        fresh: &[(u32, u32, u32)],
        k: usize,
        rest: &MultiDegree,
        polarized: &Polynomial,
        images: &mut Vec<Word>,
        emit: &mut impl FnMut(&[Word], Polynomial) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if k == fresh.len() {
            if !rest.is_zero() {
                return ControlFlow::Continue(());
            }
            let poly = substitute_words(polarized, fresh, images);
            if poly.is_zero() {
                return ControlFlow::Continue(());
            }
            return emit(images, poly);
        }
        let (_, exp, orig) = fresh[k];
        let later: u32 = fresh[k + 1..].iter().map(|f| f.1).sum();
        // fresh variables from the same original with equal exponent are
        // interchangeable in the polarization; keep their images sorted
        let floor = (k > 0 && fresh[k - 1].2 == orig && fresh[k - 1].1 == exp).then(|| images[k - 1].clone());
        for c in scaled_sub_multidegrees(rest, exp) {
            let used = c.scale(exp);
            let Some(remaining) = rest.checked_sub(&used) else {
                continue;
            };
            if remaining.total() < later || (later == 0 && !remaining.is_zero()) {
                continue;
            }
            for w in self.words(&c).iter() {
                if floor.as_ref().is_some_and(|f| w < f) {
                    continue;
                }
                images.push(w.clone());
                let flow = self.assign_images(fresh, k + 1, &remaining, polarized, images, emit);
                images.pop();
                flow?;
            }
        }
        ControlFlow::Continue(())
    }
}

fn cartesian(
    lists: &[FactorList],
    k: usize,
    prefix: &Polynomial,
    chosen: &mut Vec<Factor>,
    emit: &mut impl FnMut(GeneratorSpec, Polynomial) -> ControlFlow<()>,
) -> ControlFlow<()> {
    if k == lists.len() {
        return emit(GeneratorSpec::Product(chosen.clone()), prefix.clone());
    }
    for (f, poly) in lists[k].iter() {
        let next = prefix * poly;
        if next.is_zero() {
            continue;
        }
        chosen.push(f.clone());
        let flow = cartesian(lists, k + 1, &next, chosen, emit);
        chosen.pop();
        flow?;
    }
    ControlFlow::Continue(())
}

/// Replaces each fresh letter by its image word.
fn substitute_words(polarized: &Polynomial, fresh: &[(u32, u32, u32)], images: &[Word]) -> Polynomial {
    let mut out = Polynomial::zero(polarized.prime());
    for (w, &c) in polarized.raw_terms() {
        let mut word = Word::empty();
        for &l in w.letters() {
            word.extend_from(&images[(l - FRESH_BASE) as usize]);
        }
        out.add_term(word, c);
    }
    debug_assert!(fresh.len() == images.len());
    out
}

/// Collects the whole stream; `complete` is false when more than
/// `max_generators` generators exist.
pub fn family_generators(
    family: &GeneratorFamily,
    slice: &MultiDegree,
    prime: Prime,
    max_generators: u64,
) -> Result<(Vec<(GeneratorSpec, Polynomial)>, bool)> {
    let mut out = Vec::new();
    let flow = for_each_generator(family, slice, prime, |spec, poly| {
        if out.len() as u64 >= max_generators {
            return ControlFlow::Break(());
        }
        out.push((spec, poly));
        ControlFlow::Continue(())
    })?;
    Ok((out, flow.is_continue()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::{left_normed_commutator, parse};

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn md(pairs: &[(u32, u32)]) -> MultiDegree {
        MultiDegree::from_pairs(pairs.iter().copied())
    }

    fn all(family: &GeneratorFamily, slice: &MultiDegree, prime: Prime) -> Vec<(GeneratorSpec, Polynomial)> {
        let (gens, complete) = family_generators(family, slice, prime, u64::MAX).unwrap();
        assert!(complete);
        gens
    }

    #[test]
    fn r13_single_generator_at_xyy() {
        let p3 = p(3);
        let gens = all(&GeneratorFamily::r(1, 3).unwrap(), &md(&[(1, 1), (2, 2)]), p3);
        assert_eq!(gens.len(), 1);
        assert_eq!(gens[0].0.to_string(), "S(3; x1, x2, x2)");
        assert_eq!(gens[0].1, parse("2*x1*x2*x2 + 2*x2*x1*x2 + 2*x2*x2*x1", p3).unwrap());
    }

    #[test]
    fn l13_powers_at_33() {
        let p3 = p(3);
        let gens = all(&GeneratorFamily::l(1).unwrap(), &md(&[(1, 3), (2, 3)]), p3);
        let powers: Vec<String> = gens
            .iter()
            .filter(|(s, _)| matches!(s, GeneratorSpec::Product(f) if matches!(f[0], Factor::Power { .. })))
            .map(|(s, _)| s.to_string())
            .collect();
        assert_eq!(powers, vec!["(x1*x2)^3", "(x2*x1)^3"]);
        assert!(gens.len() > 2);
    }

    #[test]
    fn r22_products_partition_variables() {
        let p2 = p(2);
        let slice = md(&[(1, 1), (2, 1), (3, 1), (4, 1)]);
        let gens = all(&GeneratorFamily::r(2, 2).unwrap(), &slice, p2);
        let target = "S(2; x1, x2) * S(2; x3, x4)";
        assert!(gens.iter().any(|(s, _)| s.to_string() == target));
        let descs: std::collections::HashSet<String> = gens.iter().map(|(s, _)| s.to_string()).collect();
        assert_eq!(descs.len(), gens.len());
        for (s, poly) in &gens {
            assert_eq!(poly, &s.realize(&GeneratorFamily::r(2, 2).unwrap(), p2).unwrap());
            assert_eq!(poly.multidegree().unwrap(), slice);
        }
    }

    #[test]
    fn unreachable_slice_is_empty() {
        let gens = all(&GeneratorFamily::r(1, 3).unwrap(), &md(&[(1, 1), (2, 1)]), p(3));
        assert!(gens.is_empty());
        let gens = all(&GeneratorFamily::r(1, 3).unwrap(), &MultiDegree::zero(), p(3));
        assert!(gens.is_empty());
    }

    #[test]
    fn multisets_have_no_repeats() {
        let p5 = p(5);
        let slice = md(&[(1, 2), (2, 2)]);
        let gens = all(&GeneratorFamily::r(1, 2).unwrap(), &slice, p5);
        // unordered pairs {m1, m2} with m1 m2 of multidegree {2,2}: 6 words,
        // 3 cuts each, 18 ordered tuples; pairs with m1 = m2 are xy|xy, yx|yx.
        assert_eq!(gens.len(), (18 - 2) / 2 + 2);
    }

    #[test]
    fn polarization_routes_agree() {
        let p5 = p(5);
        let x = Polynomial::var(1, p5);
        let y = Polynomial::var(2, p5);
        let g = left_normed_commutator(&x, &y, 3).unwrap() + (&x * &x) * &y;
        for (md, h) in g.components() {
            let vars: Vec<(u32, u32)> = md.counts().iter().map(|(&v, &c)| (v, c)).collect();
            for px in partitions(vars[0].1) {
                for py in partitions(vars[1].1) {
                    let pattern = vec![(vars[0].0, px.clone()), (vars[1].0, py.clone())];
                    let (sub, _) = polarize_by_substitution(&h, &pattern).unwrap();
                    assert_eq!(sub, polarize_direct(&h, &pattern), "{pattern:?}");
                }
            }
        }
    }

    #[test]
    fn polarized_instances_realize_consistently() {
        let p3 = p(3);
        let x = Polynomial::var(1, p3);
        let y = Polynomial::var(2, p3);
        let fam = GeneratorFamily::tspace_of(vec![left_normed_commutator(&x, &y, 2).unwrap()]).unwrap();
        let slice = md(&[(1, 1), (2, 1), (3, 1)]);
        let gens = all(&fam, &slice, p3);
        assert!(!gens.is_empty());
        for (spec, poly) in &gens {
            assert_eq!(&spec.realize(&fam, p3).unwrap(), poly, "{spec}");
        }
    }

    #[test]
    fn tspace_generators_must_be_constant_free() {
        let p3 = p(3);
        let g = parse("1 + x1", p3).unwrap();
        assert!(GeneratorFamily::tspace_of(vec![g]).is_err());
    }

    #[test]
    fn integer_partitions() {
        assert_eq!(partitions(3), vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
        assert_eq!(partitions(5).len(), 7);
    }
}
