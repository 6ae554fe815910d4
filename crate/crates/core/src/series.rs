//! Derived and lower central series, class verdicts, and validators for
//! user-supplied solvable/central series.
//!
//! Both series are iterations of a deterministic map on canonical subspaces
//! (`S ↦ [S, S]` or `S ↦ [L, S]`), so the first repetition `S_{i+1} = S_i ≠ 0`
//! proves that the series never reaches zero. Iteration stops there or at the
//! zero subspace, whichever comes first.

use serde::Serialize;

use crate::algebra::HomLieAlgebra;
use crate::error::{Error, Result};
use crate::linalg::Subspace;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesKind {
    /// `L^(0) = L`, `L^(i) = [L^(i-1), L^(i-1)]`
    Derived,
    /// `L^0 = L`, `L^i = [L, L^(i-1)]`
    LowerCentral,
}

impl SeriesKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SeriesKind::Derived => "derived",
            SeriesKind::LowerCentral => "lower-central",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// The series first reaches `{0}` at this index.
    Class(usize),
    /// `chain[stabilized_at + 1] == chain[stabilized_at] != {0}`.
    NotTerminating { stabilized_at: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    /// `chain[0]` is the full space. For a non-terminating series the last
    /// entry repeats the one before it.
    pub chain: Vec<Subspace>,
    pub dims: Vec<usize>,
    pub verdict: Verdict,
}

impl SeriesReport {
    /// Term `i` of the infinite series; indices past the end repeat the last
    /// computed term, which is either `{0}` or the stable value.
    pub fn term(&self, i: usize) -> &Subspace {
        &self.chain[i.min(self.chain.len() - 1)]
    }

    pub fn class(&self) -> Option<usize> {
        match self.verdict {
            Verdict::Class(k) => Some(k),
            Verdict::NotTerminating { .. } => None,
        }
    }

    /// Dimension of the subspace the series stabilized at, if it did.
    pub fn stable_dim(&self) -> Option<usize> {
        match self.verdict {
            Verdict::Class(_) => None,
            Verdict::NotTerminating { stabilized_at } => Some(self.dims[stabilized_at]),
        }
    }
}

fn next_term(l: &HomLieAlgebra, kind: SeriesKind, current: &Subspace) -> Result<Subspace> {
    match kind {
        SeriesKind::Derived => l.bracket_subspaces(current, current),
        SeriesKind::LowerCentral => l.bracket_subspaces(&l.full_space(), current),
    }
}

/// Compute a series, refusing algebras that are not multiplicative Hom-Lie
/// algebras. `max_steps` bounds the number of bracket steps; the default of
/// `dim + 1` always suffices because dimensions strictly drop until the
/// series terminates or stabilizes.
pub fn compute_series(
    l: &HomLieAlgebra,
    kind: SeriesKind,
    max_steps: Option<usize>,
) -> Result<SeriesReport> {
    l.certify()?;
    let limit = max_steps.unwrap_or(l.dim() + 1);
    let mut chain = vec![l.full_space()];
    let verdict = loop {
        let current = chain.last().expect("chain is never empty");
        if current.is_zero() {
            break Verdict::Class(chain.len() - 1);
        }
        if chain.len() > limit {
            return Err(Error::StepLimit(limit));
        }
        let next = next_term(l, kind, current)?;
        if let Some(witness) = next
            .basis_vectors()
            .into_iter()
            .find(|v| !current.contains(v).unwrap_or(false))
        {
            return Err(Error::NotDescending {
                index: chain.len(),
                witness,
            });
        }
        let repeated = &next == current;
        chain.push(next);
        if repeated {
            break Verdict::NotTerminating {
                stabilized_at: chain.len() - 2,
            };
        }
    };
    let dims = chain.iter().map(Subspace::dim).collect();
    Ok(SeriesReport {
        kind,
        chain,
        dims,
        verdict,
    })
}

pub fn derived_series(l: &HomLieAlgebra) -> Result<SeriesReport> {
    compute_series(l, SeriesKind::Derived, None)
}

pub fn lower_central_series(l: &HomLieAlgebra) -> Result<SeriesReport> {
    compute_series(l, SeriesKind::LowerCentral, None)
}

/// `Some(k)` if solvable of class `k`, `None` if not solvable.
pub fn solvable_class(l: &HomLieAlgebra) -> Result<Option<usize>> {
    Ok(derived_series(l)?.class())
}

/// `Some(k)` if nilpotent of class `k`, `None` if not nilpotent.
pub fn nilpotent_class(l: &HomLieAlgebra) -> Result<Option<usize>> {
    Ok(lower_central_series(l)?.class())
}

fn validate_chain(l: &HomLieAlgebra, chain: &[Subspace]) -> Result<()> {
    let (Some(first), Some(last)) = (chain.first(), chain.last()) else {
        return Err(Error::MalformedChain("empty chain".into()));
    };
    if let Some(bad) = chain.iter().find(|s| s.ambient_dim() != l.dim()) {
        return Err(Error::DimensionMismatch {
            expected: l.dim(),
            found: bad.ambient_dim(),
        });
    }
    if !first.is_full() {
        return Err(Error::MalformedChain(
            "first term is not the whole algebra".into(),
        ));
    }
    if !last.is_zero() {
        return Err(Error::MalformedChain(
            "last term is not the zero subspace".into(),
        ));
    }
    for (i, pair) in chain.windows(2).enumerate() {
        if !pair[1].is_subspace_of(&pair[0])? {
            return Err(Error::MalformedChain(format!(
                "term {} is not contained in term {i}",
                i + 1
            )));
        }
    }
    Ok(())
}

/// `[L_i, L_i] ⊆ L_{i+1}` for every consecutive pair.
pub fn is_solvable_series(l: &HomLieAlgebra, chain: &[Subspace]) -> Result<bool> {
    validate_chain(l, chain)?;
    for pair in chain.windows(2) {
        if !l
            .bracket_subspaces(&pair[0], &pair[0])?
            .is_subspace_of(&pair[1])?
        {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `[L, L_i] ⊆ L_{i+1}` for every consecutive pair.
pub fn is_central_series(l: &HomLieAlgebra, chain: &[Subspace]) -> Result<bool> {
    validate_chain(l, chain)?;
    let full = l.full_space();
    for pair in chain.windows(2) {
        if !l
            .bracket_subspaces(&full, &pair[0])?
            .is_subspace_of(&pair[1])?
        {
            return Ok(false);
        }
    }
    Ok(true)
}
