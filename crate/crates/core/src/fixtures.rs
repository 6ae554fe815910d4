//! Constructors for the worked-example algebras, each with its expected
//! verdicts. These are the golden-test corpus and the `example` command's
//! catalogue.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{default_basis_names, HomLieAlgebra};
use crate::constructions::LinearMap;
use crate::error::{Error, Result};
use crate::field::{GaussianRational, Rational};
use crate::linalg::{unit_vector, zero_vector, Matrix, Scalar, Vector};

/// Expected outcome of a class computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassExpectation {
    Class(usize),
    /// The series never reaches zero.
    Never,
    /// No claim (random fixtures).
    Unspecified,
}

impl ClassExpectation {
    pub fn matches(self, computed: Option<usize>) -> bool {
        match self {
            ClassExpectation::Class(k) => computed == Some(k),
            ClassExpectation::Never => computed.is_none(),
            ClassExpectation::Unspecified => true,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Expected {
    /// Skew-symmetry and Hom-Jacobi.
    pub hom_lie: bool,
    pub multiplicative: bool,
    pub classical_jacobi: Option<bool>,
    pub solvable: ClassExpectation,
    pub nilpotent: ClassExpectation,
    /// Where the expected verdicts come from.
    pub provenance: String,
}

#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: String,
    pub algebra: HomLieAlgebra,
    pub expected: Expected,
}

fn ints(xs: &[i64]) -> Vector {
    xs.iter().map(|&x| Scalar::from_int(x)).collect()
}

/// `[e_i, e_j] = e_{i-1}` for `1 < i < j ≤ n`, zero when `i = 1`, with
/// `α = 0`. Requires `n ≥ 5`.
///
/// Solvable of class `⌈n/2⌉`. The lower central series has dimensions
/// `n, n-2, n-3, …, 2, 1, 0`: at `L^{n-3} = span{e1, e2}` the bracket
/// `[e3, e2] = -e1` is still nonzero, so the class is `n - 1`.
pub fn family_nil(n: usize) -> Result<Fixture> {
    if n < 5 {
        return Err(Error::InvalidParameter(format!(
            "family_nil needs n >= 5, got {n}"
        )));
    }
    let brackets = (1..n).flat_map(|i| (i + 1..n).map(move |j| ((i, j), unit_vector(n, i - 1))));
    let algebra = HomLieAlgebra::from_brackets(
        format!("family-nil-{n}"),
        default_basis_names(n),
        brackets,
        Matrix::zeros(n, n),
    )?;
    Ok(Fixture {
        name: algebra.name().to_string(),
        algebra,
        expected: Expected {
            hom_lie: true,
            multiplicative: true,
            classical_jacobi: Some(false),
            solvable: ClassExpectation::Class(n.div_ceil(2)),
            nilpotent: ClassExpectation::Class(n - 1),
            provenance:
                "derived series halves the span e1..e_{n-2i}; lower central series drops one \
                         generator per step and ends with span{e1} before zero"
                    .into(),
        },
    })
}

fn c2_algebra(name: &str) -> HomLieAlgebra {
    let i = GaussianRational::i();
    HomLieAlgebra::from_brackets(
        name,
        default_basis_names(2),
        [((0, 1), vec![i.clone(), i])],
        Matrix::from_i64(&[&[0, -1], &[-1, 0]], 2).expect("2x2"),
    )
    .expect("valid shape")
}

fn c2_expected(provenance: &str) -> Expected {
    Expected {
        hom_lie: true,
        multiplicative: true,
        classical_jacobi: Some(true),
        solvable: ClassExpectation::Class(2),
        nilpotent: ClassExpectation::Never,
        provenance: provenance.into(),
    }
}

/// `ℂ²` with `[(x1,x2),(y1,y2)] = i(x1y2 − x2y1)·(1, 1)` and `α(x, y) = (−y, −x)`.
pub fn c2_fixture() -> Fixture {
    Fixture {
        name: "c2".into(),
        algebra: c2_algebra("c2"),
        expected: c2_expected("[L,L] = span{(1,1)}, [L,(1,1)] = span{(1,1)}"),
    }
}

/// The matrix element `A(x, y) = [[i(x+y)/2, x], [y, −i(x+y)/2]]`.
fn matrix_element(x: &Scalar, y: &Scalar) -> Matrix {
    let half_i = GaussianRational::new(Rational::zero(), Rational::new(1, 2).expect("2 != 0"));
    let d = &half_i * &(x + y);
    Matrix::new(2, 2, vec![d.clone(), x.clone(), y.clone(), -d]).expect("2x2")
}

/// Coordinates `(x, y)` of a 2×2 matrix, checking it lies in the family.
fn matrix_coordinates(m: &Matrix) -> Result<Vector> {
    let (x, y) = (m[(0, 1)].clone(), m[(1, 0)].clone());
    if &matrix_element(&x, &y) != m {
        return Err(Error::InvalidParameter(format!(
            "{m:?} is not of the form A(x, y)"
        )));
    }
    Ok(vec![x, y])
}

/// The algebra of matrices `A(x, y)` with `[A, B] = AᵀBᵀ − BᵀAᵀ` and
/// `α(A) = −Aᵀ`, in the basis `B1 = A(1, 0)`, `B2 = A(0, 1)`. Constants are
/// computed from the matrix products. Also returns the coordinate map
/// `A(x, y) ↦ (x, y)` to [`c2_fixture`].
pub fn matrix_fixture() -> Result<(Fixture, LinearMap)> {
    let one = Scalar::one();
    let zero = Scalar::zero();
    let basis = [matrix_element(&one, &zero), matrix_element(&zero, &one)];
    let bracket = |a: &Matrix, b: &Matrix| -> Result<Matrix> {
        let (at, bt) = (a.transpose(), b.transpose());
        at.mul(&bt)?.sub(&bt.mul(&at)?)
    };
    let mut structure = vec![vec![zero_vector(2); 2]; 2];
    for (p, a) in basis.iter().enumerate() {
        for (q, b) in basis.iter().enumerate() {
            structure[p][q] = matrix_coordinates(&bracket(a, b)?)?;
        }
    }
    let neg_one = -Scalar::one();
    let alpha_columns = basis
        .iter()
        .map(|a| {
            let image = Matrix::new(
                2,
                2,
                a.transpose()
                    .entries()
                    .iter()
                    .map(|x| &neg_one * x)
                    .collect(),
            )?;
            matrix_coordinates(&image)
        })
        .collect::<Result<Vec<_>>>()?;
    let algebra = HomLieAlgebra::new(
        "matrix",
        vec!["B1".into(), "B2".into()],
        structure,
        Matrix::from_columns(&alpha_columns, 2)?,
    )?;
    let iso = LinearMap::new(algebra.clone(), c2_fixture().algebra, Matrix::identity(2))?;
    let fixture = Fixture {
        name: "matrix".into(),
        algebra,
        expected: c2_expected("isomorphic to c2 through A(x, y) -> (x, y)"),
    };
    Ok((fixture, iso))
}

/// Dense polynomial with rational coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq)]
struct Poly(Vec<Rational>);

impl Poly {
    fn monomial(k: usize) -> Self {
        let mut c = vec![Rational::zero(); k + 1];
        c[k] = Rational::one();
        Poly(c)
    }

    fn constant(c: Rational) -> Self {
        Poly(vec![c])
    }

    fn derivative(&self) -> Self {
        Poly(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| &Rational::from(k as i64) * c)
                .collect(),
        )
    }

    fn at_zero(&self) -> Rational {
        self.0.first().cloned().unwrap_or_default()
    }

    fn mul(&self, other: &Poly) -> Poly {
        if self.0.is_empty() || other.0.is_empty() {
            return Poly(Vec::new());
        }
        let mut out = vec![Rational::zero(); self.0.len() + other.0.len() - 1];
        for (a, x) in self.0.iter().enumerate() {
            for (b, y) in other.0.iter().enumerate() {
                out[a + b] = &out[a + b] + &(x * y);
            }
        }
        Poly(out)
    }

    fn sub(&self, other: &Poly) -> Poly {
        let len = self.0.len().max(other.0.len());
        let get = |p: &Poly, k: usize| p.0.get(k).cloned().unwrap_or_default();
        Poly((0..len).map(|k| &get(self, k) - &get(other, k)).collect())
    }

    fn degree(&self) -> Option<usize> {
        self.0.iter().rposition(|c| !c.is_zero())
    }
}

/// `[p, q] = p''q' − q''p' − p''(0)q'(0) + q''(0)p'(0)`
fn poly_bracket(p: &Poly, q: &Poly) -> Poly {
    let (p1, q1) = (p.derivative(), q.derivative());
    let (p2, q2) = (p1.derivative(), q1.derivative());
    let correction = &(&p2.at_zero() * &q1.at_zero()) - &(&q2.at_zero() * &p1.at_zero());
    p2.mul(&q1)
        .sub(&q2.mul(&p1))
        .sub(&Poly::constant(correction))
}

/// Polynomials of degree `≤ degree_bound` under the bracket above with
/// `α(p) = p(0)`, basis `x^0, x^1, …, x^d`. A bracket that leaves the degree
/// bound is an error; this happens for `d ≥ 5`.
pub fn poly_fixture(degree_bound: usize) -> Result<Fixture> {
    let n = degree_bound + 1;
    let mut structure = vec![vec![zero_vector(n); n]; n];
    for (a, row) in structure.iter_mut().enumerate() {
        for (b, slot) in row.iter_mut().enumerate() {
            let r = poly_bracket(&Poly::monomial(a), &Poly::monomial(b));
            if let Some(deg) = r.degree() {
                if deg > degree_bound {
                    return Err(Error::InvalidParameter(format!(
                        "[x^{a}, x^{b}] has degree {deg}, outside the bound {degree_bound}"
                    )));
                }
            }
            for (k, c) in r.0.into_iter().enumerate().take(n) {
                slot[k] = Scalar::real(c);
            }
        }
    }
    let mut alpha = Matrix::zeros(n, n);
    alpha[(0, 0)] = Scalar::one();
    let names = (0..n).map(|k| format!("x^{k}")).collect();
    let algebra = HomLieAlgebra::new(format!("poly-{degree_bound}"), names, structure, alpha)?;
    let (classical, solvable, nilpotent, provenance) = match degree_bound {
        3 => (
            Some(true),
            ClassExpectation::Class(2),
            ClassExpectation::Never,
            "[H,H] = span{x, x^2}, which is abelian and satisfies [H, span{x, x^2}] = span{x, x^2}",
        ),
        4 => (
            Some(false),
            ClassExpectation::Never,
            ClassExpectation::Never,
            "[H,H] = span{x, .., x^4} is perfect; Jacobi fails on (x^2, x^3, x^4) with residual 96x^3",
        ),
        _ => (None, ClassExpectation::Unspecified, ClassExpectation::Unspecified, "no recorded verdict"),
    };
    Ok(Fixture {
        name: algebra.name().to_string(),
        algebra,
        expected: Expected {
            hom_lie: true,
            multiplicative: true,
            classical_jacobi: classical,
            solvable,
            nilpotent,
            provenance: provenance.into(),
        },
    })
}

/// `[e1, e2] = e1`, `α = 0`.
pub fn counterexample_2dim() -> Fixture {
    let algebra = HomLieAlgebra::from_brackets(
        "counterexample-2",
        default_basis_names(2),
        [((0, 1), ints(&[1, 0]))],
        Matrix::zeros(2, 2),
    )
    .expect("valid shape");
    Fixture {
        name: algebra.name().to_string(),
        algebra,
        expected: Expected {
            hom_lie: true,
            multiplicative: true,
            classical_jacobi: Some(true),
            solvable: ClassExpectation::Class(2),
            nilpotent: ClassExpectation::Never,
            provenance: "[L,L] = span{e1} is abelian, [L, span{e1}] = span{e1}".into(),
        },
    }
}

/// Zero bracket, identity twisting map.
pub fn abelian(n: usize) -> Fixture {
    let algebra =
        HomLieAlgebra::abelian(format!("abelian-{n}"), Matrix::identity(n)).expect("square alpha");
    let class = if n == 0 {
        ClassExpectation::Class(0)
    } else {
        ClassExpectation::Class(1)
    };
    Fixture {
        name: algebra.name().to_string(),
        algebra,
        expected: Expected {
            hom_lie: true,
            multiplicative: true,
            classical_jacobi: Some(true),
            solvable: class,
            nilpotent: class,
            provenance: "[L,L] = 0".into(),
        },
    }
}

/// A seeded random skew bracket with `α = 0`. Each coefficient of
/// `[e_i, e_j]` (`i < j`) is nonzero with probability 1/3, drawn from
/// `{±1, ±2}`. Always a multiplicative Hom-Lie algebra because every term
/// of both identities contains `α`.
pub fn zero_alpha_random(n: usize, seed: u64) -> Fixture {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let v: Vector = (0..n)
                .map(|_| {
                    if rng.gen_ratio(1, 3) {
                        let magnitude = rng.gen_range(1..=2);
                        Scalar::from_int(if rng.gen_bool(0.5) {
                            magnitude
                        } else {
                            -magnitude
                        })
                    } else {
                        Scalar::zero()
                    }
                })
                .collect();
            brackets.push(((i, j), v));
        }
    }
    let algebra = HomLieAlgebra::from_brackets(
        format!("zero-alpha-random-{n}-{seed}"),
        default_basis_names(n),
        brackets,
        Matrix::zeros(n, n),
    )
    .expect("valid shape");
    Fixture {
        name: algebra.name().to_string(),
        algebra,
        expected: Expected {
            hom_lie: true,
            multiplicative: true,
            classical_jacobi: None,
            solvable: ClassExpectation::Unspecified,
            nilpotent: ClassExpectation::Unspecified,
            provenance: "alpha = 0 makes both identities vanish".into(),
        },
    }
}

/// Every deterministic fixture: the family for `n = 5..=12`, `c2`, the
/// matrix algebra, both polynomial algebras, the 2-dim counterexample and
/// abelian algebras of dimension 0 to 3.
pub fn catalogue() -> Vec<Fixture> {
    let mut all: Vec<Fixture> = (5..=12).map(|n| family_nil(n).expect("n >= 5")).collect();
    all.push(c2_fixture());
    all.push(matrix_fixture().expect("matrix realization is closed").0);
    all.push(poly_fixture(3).expect("closed"));
    all.push(poly_fixture(4).expect("closed"));
    all.push(counterexample_2dim());
    all.extend((0..=3).map(abelian));
    all
}
