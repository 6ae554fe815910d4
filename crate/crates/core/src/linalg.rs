//! Dense exact linear algebra over ℚ(i).
//!
//! [`Subspace`] always stores its basis in reduced row echelon form with the
//! zero rows dropped. RREF is unique per row space, so two subspaces are equal
//! as sets exactly when their stored values compare equal.

use std::fmt;
use std::ops::{Index, IndexMut};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::GaussianRational;

pub type Scalar = GaussianRational;
pub type Vector = Vec<Scalar>;

pub fn zero_vector(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

/// The `k`-th standard basis vector of `Fⁿ` (0-based).
pub fn unit_vector(n: usize, k: usize) -> Vector {
    let mut v = zero_vector(n);
    v[k] = Scalar::one();
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `y += a·x`
pub fn add_scaled(y: &mut [Scalar], a: &Scalar, x: &[Scalar]) {
    if a.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi += &(a * xi);
        }
    }
}

pub fn scale_vector(a: &Scalar, x: &[Scalar]) -> Vector {
    x.iter().map(|xi| a * xi).collect()
}

pub fn sub_vectors(x: &[Scalar], y: &[Scalar]) -> Vector {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

fn check_len(v: &[Scalar], expected: usize) -> Result<()> {
    if v.len() != expected {
        return Err(Error::DimensionMismatch {
            expected,
            found: v.len(),
        });
    }
    Ok(())
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        check_len(&entries, rows * cols)?;
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: zero_vector(rows * cols),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m[(k, k)] = Scalar::one();
        }
        m
    }

    /// Build from row vectors; every row must have `cols` entries.
    pub fn from_rows(rows: &[Vector], cols: usize) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            check_len(r, cols)?;
            entries.extend(r.iter().cloned());
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            entries,
        })
    }

    /// Build from column vectors; every column must have `rows` entries.
    pub fn from_columns(columns: &[Vector], rows: usize) -> Result<Self> {
        Ok(Self::from_rows(columns, rows)?.transpose())
    }

    /// Small integer matrices for tests and fixtures.
    pub fn from_i64(rows: &[&[i64]], cols: usize) -> Result<Self> {
        let rows: Vec<Vector> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect())
            .collect();
        Self::from_rows(&rows, cols)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.entries)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vector> {
        check_len(v, self.cols)?;
        let mut out = zero_vector(self.rows);
        for (c, vc) in v.iter().enumerate() {
            if vc.is_zero() {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                let a = &self[(r, c)];
                if !a.is_zero() {
                    *o += &(a * vc);
                }
            }
        }
        Ok(out)
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let columns = (0..rhs.cols)
            .map(|c| self.mul_vec(&rhs.column(c)))
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_columns(&columns, self.rows)
    }

    pub fn sub(&self, rhs: &Matrix) -> Result<Matrix> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: rhs.rows * rhs.cols,
            });
        }
        Matrix::new(
            self.rows,
            self.cols,
            sub_vectors(&self.entries, &rhs.entries),
        )
    }

    /// Block-diagonal `diag(self, other)`.
    pub fn block_diag(&self, other: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m[(r, c)] = self[(r, c)].clone();
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                m[(self.rows + r, self.cols + c)] = other[(r, c)].clone();
            }
        }
        m
    }

    /// Reduced row echelon form with zero rows removed, plus the pivot columns.
    pub fn rref_with_pivots(&self) -> (Matrix, Vec<usize>) {
        let mut rows = self.row_vectors();
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..self.cols {
            if next == rows.len() {
                break;
            }
            let Some(found) = (next..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(next, found);
            let inv = rows[next][col].inv().expect("pivot is nonzero");
            let pivot_row: Vector = rows[next].iter().map(|x| &inv * x).collect();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != next && !row[col].is_zero() {
                    let factor = -&row[col];
                    add_scaled(row, &factor, &pivot_row);
                }
            }
            rows[next] = pivot_row;
            pivots.push(col);
            next += 1;
        }
        rows.truncate(next);
        let m = Matrix::from_rows(&rows, self.cols).expect("row lengths preserved");
        (m, pivots)
    }

    pub fn rref(&self) -> Matrix {
        self.rref_with_pivots().0
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Basis of the right null space `{x : self·x = 0}`.
    pub fn kernel(&self) -> Vec<Vector> {
        let (r, pivots) = self.rref_with_pivots();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = unit_vector(self.cols, f);
                for (row, &p) in pivots.iter().enumerate() {
                    x[p] = -&r[(row, f)];
                }
                x
            })
            .collect()
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        assert!(r < self.rows && c < self.cols, "matrix index out of range");
        &self.entries[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        assert!(r < self.rows && c < self.cols, "matrix index out of range");
        &mut self.entries[r * self.cols + c]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix({}x{})[", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                f.write_str("; ")?;
            }
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            f.write_str(&row.join(", "))?;
        }
        f.write_str("]")
    }
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq((0..self.rows).map(|r| self.row(r)))
    }
}

/// A subspace of `Fⁿ` held as a canonical RREF basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Matrix::zeros(0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Matrix::identity(ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Row space of `m`.
    pub fn row_space(m: &Matrix) -> Self {
        let (basis, pivots) = m.rref_with_pivots();
        Self {
            ambient_dim: m.cols(),
            basis,
            pivots,
        }
    }

    pub fn span(vectors: &[Vector], ambient_dim: usize) -> Result<Self> {
        Ok(Self::row_space(&Matrix::from_rows(vectors, ambient_dim)?))
    }

    /// Span of the standard unit vectors at the given (0-based) indices.
    pub fn coordinate(indices: impl IntoIterator<Item = usize>, ambient_dim: usize) -> Self {
        let vectors: Vec<Vector> = indices
            .into_iter()
            .map(|k| unit_vector(ambient_dim, k))
            .collect();
        Self::span(&vectors, ambient_dim).expect("unit vectors have the ambient length")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        Ok(())
    }

    /// `v` minus its component along the basis, eliminating every pivot
    /// coordinate. Zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Result<Vector> {
        check_len(v, self.ambient_dim)?;
        let mut residual = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            let factor = -&residual[p];
            add_scaled(&mut residual, &factor, self.basis.row(r));
        }
        Ok(residual)
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        Ok(is_zero_vector(&self.reduce(v)?))
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is not in
    /// the subspace. In RREF these are just the entries of `v` at the pivots.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vector>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    /// Re-express `self` (which must lie inside `parent`) in the intrinsic
    /// coordinates given by `parent`'s canonical basis.
    pub fn in_coordinates_of(&self, parent: &Subspace) -> Result<Option<Subspace>> {
        self.check_ambient(parent)?;
        let mut coords = Vec::with_capacity(self.dim());
        for r in 0..self.dim() {
            match parent.coordinates(self.basis.row(r))? {
                Some(c) => coords.push(c),
                None => return Ok(None),
            }
        }
        Subspace::span(&coords, parent.dim()).map(Some)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        for r in 0..self.dim() {
            if !other.contains(self.basis.row(r))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut vectors = self.basis_vectors();
        vectors.extend(other.basis_vectors());
        Subspace::span(&vectors, self.ambient_dim)
    }

    /// Intersection through the null space of `[A | -B]`: each kernel vector
    /// `(x, y)` gives `Σ xᵣ aᵣ = Σ yₛ bₛ`, a common element.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut columns = self.basis_vectors();
        columns.extend(
            other
                .basis_vectors()
                .iter()
                .map(|b| scale_vector(&-Scalar::one(), b)),
        );
        if columns.is_empty() {
            return Ok(Subspace::zero(self.ambient_dim));
        }
        let system = Matrix::from_columns(&columns, self.ambient_dim)?;
        let p = self.dim();
        let common: Vec<Vector> = system
            .kernel()
            .iter()
            .map(|sol| {
                let mut v = zero_vector(self.ambient_dim);
                for (r, coef) in sol[..p].iter().enumerate() {
                    add_scaled(&mut v, coef, self.basis.row(r));
                }
                v
            })
            .collect();
        Subspace::span(&common, self.ambient_dim)
    }

    /// Standard unit vectors at the non-pivot columns; together with the
    /// basis they span the ambient space.
    pub fn complement_basis(&self) -> Vec<Vector> {
        self.complement_indices()
            .into_iter()
            .map(|k| unit_vector(self.ambient_dim, k))
            .collect()
    }

    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient_dim)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }

    /// Image `m(S)`; `m` must have `ambient_dim` columns.
    pub fn image(&self, m: &Matrix) -> Result<Subspace> {
        if m.cols() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: m.cols(),
            });
        }
        let images = (0..self.dim())
            .map(|r| m.mul_vec(self.basis.row(r)))
            .collect::<Result<Vec<_>>>()?;
        Subspace::span(&images, m.rows())
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}) ", self.dim(), self.ambient_dim)?;
        fmt::Debug::fmt(&self.basis, f)
    }
}

impl Serialize for Subspace {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Subspace", 3)?;
        s.serialize_field("ambient_dim", &self.ambient_dim)?;
        s.serialize_field("dim", &self.dim())?;
        s.serialize_field("basis", &self.basis)?;
        s.end()
    }
}

/// `apply_map(m, S)`, the image of a subspace under a matrix.
pub fn apply_map(m: &Matrix, s: &Subspace) -> Result<Subspace> {
    s.image(m)
}
