//! Quotients, direct sums, restriction to subalgebras, and morphisms.

use serde::Serialize;

use crate::algebra::HomLieAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{is_zero_vector, sub_vectors, unit_vector, Matrix, Subspace, Vector};
use crate::series::{compute_series, SeriesKind};

/// A linear map between two algebras; `matrix` is `target.dim × source.dim`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    source: HomLieAlgebra,
    target: HomLieAlgebra,
    matrix: Matrix,
}

impl LinearMap {
    pub fn new(source: HomLieAlgebra, target: HomLieAlgebra, matrix: Matrix) -> Result<Self> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::InvalidParameter(format!(
                "map matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.dim(),
                source.dim()
            )));
        }
        Ok(Self {
            source,
            target,
            matrix,
        })
    }

    pub fn identity(l: &HomLieAlgebra) -> Self {
        Self {
            source: l.clone(),
            target: l.clone(),
            matrix: Matrix::identity(l.dim()),
        }
    }

    pub fn source(&self) -> &HomLieAlgebra {
        &self.source
    }

    pub fn target(&self) -> &HomLieAlgebra {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[crate::linalg::Scalar]) -> Result<Vector> {
        self.matrix.mul_vec(v)
    }

    pub fn image_of(&self, s: &Subspace) -> Result<Subspace> {
        s.image(&self.matrix)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MorphismWitness {
    /// `φ([e_i, e_j]₁) − [φ(e_i), φ(e_j)]₂ ≠ 0`
    Bracket {
        i: usize,
        j: usize,
        residual: Vector,
    },
    /// `φ(α₁(e_i)) − α₂(φ(e_i)) ≠ 0`
    Alpha { i: usize, residual: Vector },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MorphismVerdict {
    Morphism,
    Isomorphism,
    NotMorphism(MorphismWitness),
}

impl MorphismVerdict {
    pub fn is_morphism(&self) -> bool {
        !matches!(self, MorphismVerdict::NotMorphism(_))
    }
}

/// Check both morphism identities on basis elements; bilinearity makes that
/// sufficient.
pub fn check_morphism(f: &LinearMap) -> MorphismVerdict {
    let (src, tgt) = (&f.source, &f.target);
    let n = src.dim();
    for i in 0..n {
        let lhs = f.apply(&src.alpha().column(i)).expect("shape checked");
        let rhs = tgt.apply_alpha(&f.matrix.column(i)).expect("shape checked");
        let residual = sub_vectors(&lhs, &rhs);
        if !is_zero_vector(&residual) {
            return MorphismVerdict::NotMorphism(MorphismWitness::Alpha { i, residual });
        }
    }
    for i in 0..n {
        for j in 0..n {
            let lhs = f
                .apply(src.structure_constant(i, j))
                .expect("shape checked");
            let rhs = tgt
                .bracket(&f.matrix.column(i), &f.matrix.column(j))
                .expect("shape checked");
            let residual = sub_vectors(&lhs, &rhs);
            if !is_zero_vector(&residual) {
                return MorphismVerdict::NotMorphism(MorphismWitness::Bracket { i, j, residual });
            }
        }
    }
    if f.matrix.is_invertible() {
        MorphismVerdict::Isomorphism
    } else {
        MorphismVerdict::Morphism
    }
}

#[derive(Debug, Clone)]
pub struct QuotientResult {
    pub quotient: HomLieAlgebra,
    /// `L → L/I`
    pub projection: LinearMap,
    /// Coset representatives in `L`, one per quotient basis element.
    pub section: Vec<Vector>,
    pub ideal: Subspace,
}

impl QuotientResult {
    /// Quotient coordinates of `v + I`.
    pub fn coordinates(&self, v: &[crate::linalg::Scalar]) -> Result<Vector> {
        quotient_coordinates(&self.ideal, v)
    }
}

fn quotient_coordinates(ideal: &Subspace, v: &[crate::linalg::Scalar]) -> Result<Vector> {
    let residual = ideal.reduce(v)?;
    Ok(ideal
        .complement_indices()
        .into_iter()
        .map(|c| residual[c].clone())
        .collect())
}

/// `L/I`, with basis the cosets of the unit vectors at the non-pivot columns
/// of `I`.
pub fn quotient(l: &HomLieAlgebra, ideal: &Subspace) -> Result<QuotientResult> {
    l.certify()?;
    if let Some(violation) = l.closure_violation(ideal, true)? {
        return Err(Error::NotIdeal(violation.to_string()));
    }
    let comp = ideal.complement_indices();
    let m = comp.len();
    let n = l.dim();
    let mut structure = vec![vec![Vec::new(); m]; m];
    for (a, &ca) in comp.iter().enumerate() {
        for (b, &cb) in comp.iter().enumerate() {
            structure[a][b] = quotient_coordinates(ideal, l.structure_constant(ca, cb))?;
        }
    }
    let alpha_columns = comp
        .iter()
        .map(|&c| quotient_coordinates(ideal, &l.alpha().column(c)))
        .collect::<Result<Vec<_>>>()?;
    let alpha = Matrix::from_columns(&alpha_columns, m)?;
    let names = comp.iter().map(|&c| l.basis_names()[c].clone()).collect();
    let q = HomLieAlgebra::new(format!("{}/ideal", l.name()), names, structure, alpha)?;

    let projection_columns = (0..n)
        .map(|j| quotient_coordinates(ideal, &unit_vector(n, j)))
        .collect::<Result<Vec<_>>>()?;
    let projection = LinearMap::new(
        l.clone(),
        q.clone(),
        Matrix::from_columns(&projection_columns, m)?,
    )?;
    let section = comp.iter().map(|&c| unit_vector(n, c)).collect();
    Ok(QuotientResult {
        quotient: q,
        projection,
        section,
        ideal: ideal.clone(),
    })
}

/// `L1 ⊕ L2` with componentwise bracket and block-diagonal twisting map.
/// Coordinates of `L1` come first; basis names get `_1` / `_2` suffixes.
pub fn direct_sum(l1: &HomLieAlgebra, l2: &HomLieAlgebra) -> HomLieAlgebra {
    let (n1, n2) = (l1.dim(), l2.dim());
    let n = n1 + n2;
    let mut structure = vec![vec![vec![crate::linalg::Scalar::zero(); n]; n]; n];
    for (i, row) in structure.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            if i < n1 && j < n1 {
                slot[..n1].clone_from_slice(l1.structure_constant(i, j));
            } else if i >= n1 && j >= n1 {
                slot[n1..].clone_from_slice(l2.structure_constant(i - n1, j - n1));
            }
        }
    }
    let names = l1
        .basis_names()
        .iter()
        .map(|s| format!("{s}_1"))
        .chain(l2.basis_names().iter().map(|s| format!("{s}_2")))
        .collect();
    HomLieAlgebra::new(
        format!("{}+{}", l1.name(), l2.name()),
        names,
        structure,
        l1.alpha().block_diag(l2.alpha()),
    )
    .expect("block shapes are consistent")
}

/// The subalgebra `H` in its own coordinates (the canonical RREF basis of
/// `H`), together with the inclusion `H → L`.
pub fn restrict(l: &HomLieAlgebra, h: &Subspace) -> Result<(HomLieAlgebra, LinearMap)> {
    if let Some(violation) = l.closure_violation(h, false)? {
        return Err(Error::NotSubalgebra(violation.to_string()));
    }
    let basis = h.basis_vectors();
    let d = basis.len();
    let coords = |v: &[crate::linalg::Scalar]| -> Result<Vector> {
        Ok(h.coordinates(v)?.expect("closure verified above"))
    };
    let mut structure = vec![vec![Vec::new(); d]; d];
    for a in 0..d {
        for b in 0..d {
            structure[a][b] = coords(&l.bracket(&basis[a], &basis[b])?)?;
        }
    }
    let alpha_columns = basis
        .iter()
        .map(|v| coords(&l.apply_alpha(v)?))
        .collect::<Result<Vec<_>>>()?;
    let names = basis
        .iter()
        .enumerate()
        .map(|(a, v)| {
            let mut support = v.iter().enumerate().filter(|(_, x)| !x.is_zero());
            match (support.next(), support.next()) {
                (Some((k, x)), None) if x.is_one() => l.basis_names()[k].clone(),
                _ => format!("h{}", a + 1),
            }
        })
        .collect();
    let sub = HomLieAlgebra::new(
        format!("{}|sub", l.name()),
        names,
        structure,
        Matrix::from_columns(&alpha_columns, d)?,
    )?;
    let inclusion = LinearMap::new(
        sub.clone(),
        l.clone(),
        Matrix::from_columns(&basis, l.dim())?,
    )?;
    Ok((sub, inclusion))
}

/// Smallest ideal containing the given vectors: close under `α`, `[·, L]`.
pub fn ideal_generated_by(l: &HomLieAlgebra, vectors: &[Vector]) -> Result<Subspace> {
    generated(l, vectors, true)
}

/// Smallest subalgebra containing the given vectors: close under `α`, `[·, ·]`.
pub fn subalgebra_generated_by(l: &HomLieAlgebra, vectors: &[Vector]) -> Result<Subspace> {
    generated(l, vectors, false)
}

fn generated(l: &HomLieAlgebra, vectors: &[Vector], ideal: bool) -> Result<Subspace> {
    let mut s = Subspace::span(vectors, l.dim())?;
    loop {
        let partner = if ideal { l.full_space() } else { s.clone() };
        let grown = s
            .sum(&s.image(l.alpha())?)?
            .sum(&l.bracket_subspaces(&s, &partner)?)?;
        if grown == s {
            return Ok(s);
        }
        s = grown;
    }
}

/// Per-index comparison of `φ(L₁ series term)` with the same series of the
/// image subalgebra `φ(L₁)`, both in target coordinates.
#[derive(Debug, Clone, Serialize)]
pub struct SeriesComparison {
    pub kind: SeriesKind,
    pub mapped_terms: Vec<Subspace>,
    pub image_terms: Vec<Subspace>,
    pub equal: Vec<bool>,
}

impl SeriesComparison {
    pub fn all_equal(&self) -> bool {
        self.equal.iter().all(|&e| e)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PushforwardReport {
    pub derived: SeriesComparison,
    pub lower_central: SeriesComparison,
}

impl PushforwardReport {
    pub fn all_equal(&self) -> bool {
        self.derived.all_equal() && self.lower_central.all_equal()
    }
}

pub fn pushforward_series(f: &LinearMap) -> Result<PushforwardReport> {
    if !check_morphism(f).is_morphism() {
        return Err(Error::NotMorphism);
    }
    let image = f.image_of(&f.source.full_space())?;
    let (image_algebra, inclusion) = restrict(&f.target, &image)?;
    let compare = |kind: SeriesKind| -> Result<SeriesComparison> {
        let source_series = compute_series(&f.source, kind, None)?;
        let image_series = compute_series(&image_algebra, kind, None)?;
        let len = source_series.chain.len().max(image_series.chain.len());
        let mut mapped_terms = Vec::with_capacity(len);
        let mut image_terms = Vec::with_capacity(len);
        for i in 0..len {
            mapped_terms.push(f.image_of(source_series.term(i))?);
            image_terms.push(inclusion.image_of(image_series.term(i))?);
        }
        let equal = mapped_terms
            .iter()
            .zip(&image_terms)
            .map(|(a, b)| a == b)
            .collect();
        Ok(SeriesComparison {
            kind,
            mapped_terms,
            image_terms,
            equal,
        })
    };
    Ok(PushforwardReport {
        derived: compare(SeriesKind::Derived)?,
        lower_central: compare(SeriesKind::LowerCentral)?,
    })
}
