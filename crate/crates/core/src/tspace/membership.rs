use std::fmt;
use std::ops::ControlFlow;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::freealg::{MultiDegree, Polynomial};
use crate::gfp::{FieldElement, Prime};
use crate::tspace::basis::{SliceColumns, SpanBasis};
use crate::tspace::family::{for_each_generator, GeneratorFamily, GeneratorSpec, Semantics};

/// Generators are inserted in batches of this size; the target is tested
/// after each batch.
pub const BATCH_SIZE: usize = 256;

/// Resource limits for one enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub max_generators: u64,
    pub max_dimension: u64,
    pub time_limit: Duration,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_generators: 5_000_000,
            max_dimension: 1_000_000,
            time_limit: Duration::from_secs(600),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    Member,
    NotMember,
    BudgetExceeded,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Member => "Member",
            Status::NotMember => "NotMember",
            Status::BudgetExceeded => "BudgetExceeded",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateTerm {
    pub generator: GeneratorSpec,
    pub coefficient: FieldElement,
}

/// Outcome of a membership query.
#[derive(Clone, Debug)]
pub struct MembershipVerdict {
    pub status: Status,
    /// Present for `Member` when a certificate was requested.
    pub certificate: Option<Vec<CertificateTerm>>,
    pub generators_used: u64,
    /// Dimension of the enumerated span (summed over components).
    pub dimension: usize,
    /// Number of words in the slice(s).
    pub ambient_dimension: usize,
    /// Reduced target when it did not reduce to zero.
    pub remainder: Option<Polynomial>,
    pub semantics: Semantics,
    pub slices: Vec<MultiDegree>,
}

impl MembershipVerdict {
    /// Human-readable status; negatives over polarized spans say so.
    pub fn status_label(&self) -> String {
        match (self.status, self.semantics) {
            (Status::NotMember, Semantics::PolarizedSpan) => "NotMember (polarized-span semantics)".into(),
            (s, _) => s.to_string(),
        }
    }

    /// Re-expands the certificate through the algebra and compares with
    /// `target`.
    pub fn verify_certificate(&self, target: &Polynomial, family: &GeneratorFamily) -> Result<bool> {
        let Some(cert) = &self.certificate else {
            return Ok(false);
        };
        let prime = target.prime();
        let mut sum = Polynomial::zero(prime);
        for term in cert {
            sum = &sum + &term.generator.realize(family, prime)?.scale(term.coefficient);
        }
        Ok(&sum == target)
    }
}

/// Decides whether `target` lies in the span of `family`'s generators in
/// its slice. A target that is not multihomogeneous is split into its
/// components, and is a member iff every component is.
pub fn membership(
    target: &Polynomial,
    family: &GeneratorFamily,
    budget: &Budget,
    want_certificate: bool,
) -> Result<MembershipVerdict> {
    let prime = target.prime();
    family.validate(prime)?;
    let started = Instant::now();
    if target.is_zero() {
        return Ok(MembershipVerdict {
            status: Status::Member,
            certificate: want_certificate.then(Vec::new),
            generators_used: 0,
            dimension: 0,
            ambient_dimension: 0,
            remainder: None,
            semantics: family.semantics(),
            slices: Vec::new(),
        });
    }
    let mut combined: Option<MembershipVerdict> = None;
    for (slice, component) in target.components() {
        let remaining = budget.time_limit.saturating_sub(started.elapsed());
        let b = Budget {
            time_limit: remaining,
            ..*budget
        };
        let v = membership_in_slice(&component, &slice, family, &b, want_certificate)?;
        combined = Some(match combined {
            None => v,
            Some(acc) => merge(acc, v),
        });
    }
    Ok(combined.expect("nonzero target has a component"))
}

fn merge(a: MembershipVerdict, b: MembershipVerdict) -> MembershipVerdict {
    let status = match (a.status, b.status) {
        (Status::BudgetExceeded, _) | (_, Status::BudgetExceeded) => Status::BudgetExceeded,
        (Status::NotMember, _) | (_, Status::NotMember) => Status::NotMember,
        _ => Status::Member,
    };
    let certificate = match (a.certificate, b.certificate) {
        (Some(mut x), Some(y)) if status == Status::Member => {
            x.extend(y);
            Some(x)
        }
        _ => None,
    };
    let remainder = match (a.remainder, b.remainder) {
        (Some(x), Some(y)) => Some(&x + &y),
        (x, y) => x.or(y),
    };
    let mut slices = a.slices;
    slices.extend(b.slices);
    MembershipVerdict {
        status,
        certificate,
        generators_used: a.generators_used + b.generators_used,
        dimension: a.dimension + b.dimension,
        ambient_dimension: a.ambient_dimension + b.ambient_dimension,
        remainder,
        semantics: a.semantics,
        slices,
    }
}

/// Outcome of driving one slice's generator stream into a basis.
struct Drive {
    basis: SpanBasis,
    generators_used: u64,
    /// Generators that enlarged the basis, indexed by provenance id.
    kept: Vec<GeneratorSpec>,
    complete: bool,
    target_member: bool,
}

fn drive(
    family: &GeneratorFamily,
    slice: &MultiDegree,
    prime: Prime,
    budget: &Budget,
    target: Option<&[(u32, u32)]>,
    record: bool,
) -> Result<Drive> {
    let started = Instant::now();
    let columns = Arc::new(SliceColumns::new(slice, budget.max_dimension)?);
    let mut basis = SpanBasis::with_columns(columns.clone(), prime);
    if record {
        basis.record_provenance();
    }
    let mut state = Drive {
        basis,
        generators_used: 0,
        kept: Vec::new(),
        complete: true,
        target_member: false,
    };
    if let Some(t) = target {
        if t.is_empty() {
            state.target_member = true;
            return Ok(state);
        }
    }
    let mut batch: Vec<(GeneratorSpec, Polynomial)> = Vec::with_capacity(BATCH_SIZE);
    let mut failure: Option<Error> = None;

    let flush = |state: &mut Drive, batch: &mut Vec<(GeneratorSpec, Polynomial)>| -> Result<()> {
        let vectors: Vec<Vec<(u32, u32)>> = batch
            .par_iter()
            .map(|(_, poly)| columns.vector(poly))
            .collect::<Result<_>>()?;
        for ((spec, _), v) in batch.drain(..).zip(vectors) {
            let id = state.kept.len() as u32;
            if state.basis.insert_vector(&v, id) && record {
                state.kept.push(spec);
            }
        }
        if let Some(t) = target {
            if state.basis.reduce_vector(t).is_zero() {
                state.target_member = true;
            }
        }
        Ok(())
    };

    let flow = for_each_generator(family, slice, prime, |spec, poly| {
        if state.generators_used >= budget.max_generators || started.elapsed() > budget.time_limit {
            state.complete = false;
            return ControlFlow::Break(());
        }
        state.generators_used += 1;
        batch.push((spec, poly));
        if batch.len() == BATCH_SIZE {
            if let Err(e) = flush(&mut state, &mut batch) {
                failure = Some(e);
                return ControlFlow::Break(());
            }
            if state.target_member || (target.is_none() && state.basis.is_full()) {
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    })?;
    if let Some(e) = failure {
        return Err(e);
    }
    if !batch.is_empty() {
        flush(&mut state, &mut batch)?;
    }
    if flow.is_break() && !state.target_member && !state.basis.is_full() && state.complete {
        // only the budget or a member target stops the stream early
        state.complete = false;
    }
    Ok(state)
}

fn membership_in_slice(
    target: &Polynomial,
    slice: &MultiDegree,
    family: &GeneratorFamily,
    budget: &Budget,
    want_certificate: bool,
) -> Result<MembershipVerdict> {
    let prime = target.prime();
    let semantics = family.semantics();
    let ambient = slice.word_count();
    if slice.is_zero() {
        return Ok(MembershipVerdict {
            status: Status::NotMember,
            certificate: None,
            generators_used: 0,
            dimension: 0,
            ambient_dimension: 1,
            remainder: Some(target.clone()),
            semantics,
            slices: vec![slice.clone()],
        });
    }
    if ambient > budget.max_dimension {
        return Ok(MembershipVerdict {
            status: Status::BudgetExceeded,
            certificate: None,
            generators_used: 0,
            dimension: 0,
            ambient_dimension: ambient.min(usize::MAX as u64) as usize,
            remainder: Some(target.clone()),
            semantics,
            slices: vec![slice.clone()],
        });
    }
    let columns = SliceColumns::new(slice, budget.max_dimension)?;
    let t = columns.vector(target)?;
    let mut state = drive(family, slice, prime, budget, Some(&t), want_certificate)?;
    let reduced = state.basis.reduce_vector(&t);
    let status = if reduced.is_zero() {
        Status::Member
    } else if state.complete {
        Status::NotMember
    } else {
        Status::BudgetExceeded
    };
    let certificate = if status == Status::Member && want_certificate {
        let coeffs = state
            .basis
            .express(&t)
            .expect("member with recorded provenance");
        Some(
            coeffs
                .into_iter()
                .map(|(g, c)| CertificateTerm {
                    generator: state.kept[g as usize].clone(),
                    coefficient: FieldElement::new(c as i64, prime),
                })
                .collect(),
        )
    } else {
        None
    };
    let remainder = (status != Status::Member).then(|| columns.polynomial(&reduced.remainder, prime));
    Ok(MembershipVerdict {
        status,
        certificate,
        generators_used: state.generators_used,
        dimension: state.basis.dimension(),
        ambient_dimension: state.basis.ambient_dimension(),
        remainder,
        semantics,
        slices: vec![slice.clone()],
    })
}

/// Dimension of the enumerated span of `family` inside `slice`.
pub fn span_dimension(family: &GeneratorFamily, slice: &MultiDegree, prime: Prime, budget: &Budget) -> Result<usize> {
    family.validate(prime)?;
    let ambient = slice.word_count();
    if ambient > budget.max_dimension {
        return Err(Error::BudgetExceeded(format!(
            "slice {slice} has {ambient} words, above the dimension cap {}",
            budget.max_dimension
        )));
    }
    if slice.is_zero() {
        return Ok(0);
    }
    let state = drive(family, slice, prime, budget, None, false)?;
    if !state.complete {
        return Err(Error::BudgetExceeded(format!(
            "generator stream for {family} at {slice} truncated after {} generators",
            state.generators_used
        )));
    }
    Ok(state.basis.dimension())
}

/// The complete span of `family` inside `slice` as an echelon basis.
pub fn span_basis(family: &GeneratorFamily, slice: &MultiDegree, prime: Prime, budget: &Budget) -> Result<SpanBasis> {
    family.validate(prime)?;
    let state = drive(family, slice, prime, budget, None, false)?;
    if !state.complete {
        return Err(Error::BudgetExceeded(format!(
            "generator stream for {family} at {slice} truncated after {} generators",
            state.generators_used
        )));
    }
    Ok(state.basis)
}
