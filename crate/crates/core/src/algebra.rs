//! Finite-dimensional Hom-Lie algebras given by structure constants.
//!
//! An algebra is a triple `(L, [·,·], α)`: the bracket is stored as the full
//! tensor `c[i][j]` with `[e_i, e_j] = Σ_k c[i][j][k] e_k`, and `α` as an
//! `n × n` matrix acting on column vectors (column `j` is `α(e_j)`).
//!
//! Constructing an algebra does not validate the axioms; [`HomLieAlgebra::check_axioms`]
//! reports failures with witnesses and [`HomLieAlgebra::certify`] turns a
//! failing report into an error for the operations that need a valid,
//! multiplicative algebra.
//!
//! # Why basis checks suffice
//!
//! Both the bracket and `α` are (bi)linear, so every identity tested here is a
//! multilinear expression in its arguments and vanishes everywhere iff it
//! vanishes on basis elements. When skew-symmetry holds the Hom-Jacobi
//! expression `J(x,y,z) = [α(x),[y,z]] + [α(y),[z,x]] + [α(z),[x,y]]` is
//! alternating (cyclic by construction, and swapping `y,z` negates it), so the
//! triples `i < j < k` determine it; likewise the multiplicativity defect
//! `α([x,y]) − [α(x),α(y)]` is skew and the pairs `i < j` determine it. When
//! skew-symmetry fails neither reduction is valid and every ordered tuple is
//! checked instead.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{
    add_scaled, is_zero_vector, sub_vectors, unit_vector, zero_vector, Matrix, Scalar, Subspace,
    Vector,
};

#[derive(Clone, PartialEq, Eq)]
pub struct HomLieAlgebra {
    name: String,
    basis_names: Vec<String>,
    /// `structure[i * dim + j] = c[i][j]`
    structure: Vec<Vector>,
    alpha: Matrix,
}

pub fn default_basis_names(n: usize) -> Vec<String> {
    (1..=n).map(|k| format!("e{k}")).collect()
}

impl HomLieAlgebra {
    /// Build from the full tensor `c[i][j]` (all ordered pairs).
    pub fn new(
        name: impl Into<String>,
        basis_names: Vec<String>,
        structure: Vec<Vec<Vector>>,
        alpha: Matrix,
    ) -> Result<Self> {
        let n = basis_names.len();
        if structure.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: structure.len(),
            });
        }
        let mut flat = Vec::with_capacity(n * n);
        for row in structure {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            for c in row {
                if c.len() != n {
                    return Err(Error::DimensionMismatch {
                        expected: n,
                        found: c.len(),
                    });
                }
                flat.push(c);
            }
        }
        if alpha.rows() != n || alpha.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: alpha.rows().max(alpha.cols()),
            });
        }
        Ok(Self {
            name: name.into(),
            basis_names,
            structure: flat,
            alpha,
        })
    }

    /// Build from brackets `[e_i, e_j] = v` for `i < j`; `[e_j, e_i]` is filled
    /// in as `-v` and unspecified pairs are zero. A pair with `i >= j` is
    /// rejected.
    pub fn from_brackets(
        name: impl Into<String>,
        basis_names: Vec<String>,
        brackets: impl IntoIterator<Item = ((usize, usize), Vector)>,
        alpha: Matrix,
    ) -> Result<Self> {
        let n = basis_names.len();
        let mut structure = vec![vec![zero_vector(n); n]; n];
        for ((i, j), v) in brackets {
            if i >= j || j >= n {
                return Err(Error::InvalidParameter(format!(
                    "bracket pair ({i}, {j}) must satisfy i < j < {n}"
                )));
            }
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: v.len(),
                });
            }
            structure[j][i] = v.iter().map(|x| -x).collect();
            structure[i][j] = v;
        }
        Self::new(name, basis_names, structure, alpha)
    }

    /// The abelian algebra of dimension `n` with twisting map `alpha`.
    pub fn abelian(name: impl Into<String>, alpha: Matrix) -> Result<Self> {
        let n = alpha.rows();
        Self::from_brackets(name, default_basis_names(n), [], alpha)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn with_basis_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: names.len(),
            });
        }
        self.basis_names = names;
        Ok(self)
    }

    /// `c[i][j]`, the coordinates of `[e_i, e_j]`.
    pub fn structure_constant(&self, i: usize, j: usize) -> &[Scalar] {
        &self.structure[i * self.dim() + j]
    }

    pub fn alpha(&self) -> &Matrix {
        &self.alpha
    }

    /// Same bracket and twisting map (names are ignored).
    pub fn same_structure(&self, other: &HomLieAlgebra) -> bool {
        self.structure == other.structure && self.alpha == other.alpha
    }

    pub fn full_space(&self) -> Subspace {
        Subspace::full(self.dim())
    }

    pub fn zero_space(&self) -> Subspace {
        Subspace::zero(self.dim())
    }

    fn check_vector(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            });
        }
        Ok(())
    }

    fn check_subspace(&self, s: &Subspace) -> Result<()> {
        if s.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: s.ambient_dim(),
            });
        }
        Ok(())
    }

    /// Bilinear extension `[u, v] = Σ_{i,j} u_i v_j c[i][j]`.
    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vector> {
        self.check_vector(u)?;
        self.check_vector(v)?;
        let n = self.dim();
        let mut out = zero_vector(n);
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let c = self.structure_constant(i, j);
                if !is_zero_vector(c) {
                    add_scaled(&mut out, &(ui * vj), c);
                }
            }
        }
        Ok(out)
    }

    pub fn apply_alpha(&self, v: &[Scalar]) -> Result<Vector> {
        self.alpha.mul_vec(v)
    }

    fn basis_vector(&self, k: usize) -> Vector {
        unit_vector(self.dim(), k)
    }

    /// Cyclic sum `[t(e_i),[e_j,e_k]] + [t(e_j),[e_k,e_i]] + [t(e_k),[e_i,e_j]]`
    /// with `t = α`, or `t = id` for the classical Jacobi identity.
    pub fn jacobi_residual(&self, i: usize, j: usize, k: usize, twisted: bool) -> Vector {
        let twist = |a: usize| {
            if twisted {
                self.alpha.column(a)
            } else {
                self.basis_vector(a)
            }
        };
        let n = self.dim();
        let mut total = zero_vector(n);
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            let inner = self.structure_constant(b, c).to_vec();
            let term = self.bracket(&twist(a), &inner).expect("dimensions match");
            add_scaled(&mut total, &Scalar::one(), &term);
        }
        total
    }

    /// `α([e_i, e_j]) − [α(e_i), α(e_j)]`
    pub fn multiplicativity_residual(&self, i: usize, j: usize) -> Vector {
        let lhs = self
            .apply_alpha(self.structure_constant(i, j))
            .expect("dimensions match");
        let rhs = self
            .bracket(&self.alpha.column(i), &self.alpha.column(j))
            .expect("dimensions match");
        sub_vectors(&lhs, &rhs)
    }

    pub fn check_axioms(&self) -> AxiomReport {
        let n = self.dim();
        let mut witnesses = Vec::new();

        let mut skew_ok = true;
        for i in 0..n {
            for j in i..n {
                let residual: Vector = self
                    .structure_constant(i, j)
                    .iter()
                    .zip(self.structure_constant(j, i))
                    .map(|(a, b)| a + b)
                    .collect();
                if !is_zero_vector(&residual) {
                    skew_ok = false;
                    witnesses.push(Witness::new(Axiom::SkewSymmetry, vec![i, j], residual));
                }
            }
        }

        let triples: Vec<(usize, usize, usize)> = if skew_ok {
            (0..n)
                .flat_map(|i| (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| (i, j, k))))
                .collect()
        } else {
            (0..n)
                .flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
                .collect()
        };
        let mut hom_jacobi_ok = true;
        let mut classical_jacobi_ok = true;
        for &(i, j, k) in &triples {
            let twisted = self.jacobi_residual(i, j, k, true);
            if !is_zero_vector(&twisted) {
                hom_jacobi_ok = false;
                witnesses.push(Witness::new(Axiom::HomJacobi, vec![i, j, k], twisted));
            }
            let plain = self.jacobi_residual(i, j, k, false);
            if !is_zero_vector(&plain) {
                classical_jacobi_ok = false;
                witnesses.push(Witness::new(Axiom::ClassicalJacobi, vec![i, j, k], plain));
            }
        }

        let mut multiplicative_ok = true;
        for i in 0..n {
            let start = if skew_ok { i + 1 } else { 0 };
            for j in start..n {
                let residual = self.multiplicativity_residual(i, j);
                if !is_zero_vector(&residual) {
                    multiplicative_ok = false;
                    witnesses.push(Witness::new(Axiom::Multiplicativity, vec![i, j], residual));
                }
            }
        }

        AxiomReport {
            skew_ok,
            hom_jacobi_ok,
            multiplicative_ok,
            classical_jacobi_ok,
            witnesses,
        }
    }

    /// Ok iff the algebra is a multiplicative Hom-Lie algebra.
    pub fn certify(&self) -> Result<()> {
        let report = self.check_axioms();
        if report.is_multiplicative_hom_lie() {
            Ok(())
        } else {
            Err(Error::NotCertified(Box::new(report)))
        }
    }

    /// `[H, K] = span{[h, k]}`, computed on basis pairs.
    pub fn bracket_subspaces(&self, h: &Subspace, k: &Subspace) -> Result<Subspace> {
        self.check_subspace(h)?;
        self.check_subspace(k)?;
        let ks = k.basis_vectors();
        let mut products = Vec::with_capacity(h.dim() * ks.len());
        for hv in h.basis_vectors() {
            for kv in &ks {
                let p = self.bracket(&hv, kv)?;
                if !is_zero_vector(&p) {
                    products.push(p);
                }
            }
        }
        Subspace::span(&products, self.dim())
    }

    /// The first defining containment `H` violates as an ideal (or as a
    /// subalgebra, when `ideal` is false).
    pub fn closure_violation(&self, h: &Subspace, ideal: bool) -> Result<Option<Containment>> {
        self.check_subspace(h)?;
        if !h.image(&self.alpha)?.is_subspace_of(h)? {
            return Ok(Some(Containment::AlphaStable));
        }
        if !self.bracket_subspaces(h, h)?.is_subspace_of(h)? {
            return Ok(Some(Containment::BracketClosed));
        }
        if ideal
            && !self
                .bracket_subspaces(h, &self.full_space())?
                .is_subspace_of(h)?
        {
            return Ok(Some(Containment::AbsorbsBrackets));
        }
        Ok(None)
    }

    pub fn is_subalgebra(&self, h: &Subspace) -> Result<bool> {
        Ok(self.closure_violation(h, false)?.is_none())
    }

    pub fn is_ideal(&self, h: &Subspace) -> Result<bool> {
        Ok(self.closure_violation(h, true)?.is_none())
    }

    pub fn is_abelian(&self) -> bool {
        self.structure.iter().all(|c| is_zero_vector(c))
    }
}

impl std::fmt::Debug for HomLieAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("HomLieAlgebra")
            .field("name", &self.name)
            .field("dim", &self.dim())
            .field("basis", &self.basis_names)
            .field("alpha", &self.alpha)
            .finish_non_exhaustive()
    }
}

/// Defining condition of a subalgebra or ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Containment {
    /// `α(H) ⊆ H`
    AlphaStable,
    /// `[H, H] ⊆ H`
    BracketClosed,
    /// `[H, L] ⊆ H`
    AbsorbsBrackets,
}

impl std::fmt::Display for Containment {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Containment::AlphaStable => "alpha(H) is not contained in H",
            Containment::BracketClosed => "[H, H] is not contained in H",
            Containment::AbsorbsBrackets => "[H, L] is not contained in H",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    SkewSymmetry,
    HomJacobi,
    Multiplicativity,
    ClassicalJacobi,
}

/// A basis tuple on which an identity fails, with its nonzero residual.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub axiom: Axiom,
    /// 0-based basis indices.
    pub indices: Vec<usize>,
    pub residual: Vector,
}

impl Witness {
    fn new(axiom: Axiom, indices: Vec<usize>, residual: Vector) -> Self {
        Self {
            axiom,
            indices,
            residual,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub skew_ok: bool,
    pub hom_jacobi_ok: bool,
    pub multiplicative_ok: bool,
    /// Informational: the Jacobi identity with `α` replaced by the identity.
    pub classical_jacobi_ok: bool,
    pub witnesses: Vec<Witness>,
}

impl AxiomReport {
    pub fn is_hom_lie(&self) -> bool {
        self.skew_ok && self.hom_jacobi_ok
    }

    pub fn is_multiplicative_hom_lie(&self) -> bool {
        self.is_hom_lie() && self.multiplicative_ok
    }

    pub fn witnesses_for(&self, axiom: Axiom) -> impl Iterator<Item = &Witness> {
        self.witnesses.iter().filter(move |w| w.axiom == axiom)
    }
}
