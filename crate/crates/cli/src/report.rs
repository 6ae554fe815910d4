//! Text and JSON renderings of command results. The JSON shapes are described
//! by `docs/report.schema.json`.

use std::fmt;

use homlie::algebra::{Axiom, AxiomReport, Witness};
use homlie::constructions::{check_morphism, LinearMap, MorphismVerdict, MorphismWitness};
use homlie::document::{emit_algebra, format_linear_combination, format_subspace_spec, Field};
use homlie::fixtures::{ClassExpectation, Fixture};
use homlie::series::{compute_series, SeriesKind, SeriesReport, Verdict};
use homlie::{HomLieAlgebra, Matrix, Vector};
use serde::Serialize;

#[derive(Serialize)]
#[serde(untagged)]
pub enum Report {
    Check(CheckReport),
    Series(SeriesOutput),
    Class(ClassReport),
    Construction(ConstructionReport),
    Morphism(MorphismReport),
    Example(Box<ExampleReport>),
}

#[derive(Serialize)]
pub struct AlgebraSummary {
    name: String,
    dim: usize,
    field: &'static str,
    basis: Vec<String>,
}

fn summary(l: &HomLieAlgebra) -> AlgebraSummary {
    AlgebraSummary {
        name: l.name().to_string(),
        dim: l.dim(),
        field: Field::of(l).as_str(),
        basis: l.basis_names().to_vec(),
    }
}

impl fmt::Display for AlgebraSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (dim {}, field {})", self.name, self.dim, self.field)
    }
}

#[derive(Serialize)]
pub struct WitnessOutput {
    axiom: Axiom,
    basis: Vec<String>,
    residual: Vector,
    residual_text: String,
}

#[derive(Serialize)]
pub struct CheckReport {
    command: &'static str,
    algebra: AlgebraSummary,
    skew_symmetry: bool,
    hom_jacobi: bool,
    multiplicative: bool,
    classical_jacobi: bool,
    /// Skew-symmetry, Hom-Jacobi and multiplicativity all hold.
    pub passed: bool,
    witnesses: Vec<WitnessOutput>,
}

fn witness_output(l: &HomLieAlgebra, w: &Witness) -> WitnessOutput {
    WitnessOutput {
        axiom: w.axiom,
        basis: w
            .indices
            .iter()
            .map(|&k| l.basis_names()[k].clone())
            .collect(),
        residual: w.residual.clone(),
        residual_text: format_linear_combination(&w.residual, l.basis_names()),
    }
}

pub fn check(l: &HomLieAlgebra) -> CheckReport {
    let r: AxiomReport = l.check_axioms();
    CheckReport {
        command: "check",
        algebra: summary(l),
        skew_symmetry: r.skew_ok,
        hom_jacobi: r.hom_jacobi_ok,
        multiplicative: r.multiplicative_ok,
        classical_jacobi: r.classical_jacobi_ok,
        passed: r.is_multiplicative_hom_lie(),
        witnesses: r.witnesses.iter().map(|w| witness_output(l, w)).collect(),
    }
}

impl CheckReport {
    fn verdict(&self) -> &'static str {
        if self.passed {
            "multiplicative Hom-Lie algebra"
        } else if self.skew_symmetry && self.hom_jacobi {
            "Hom-Lie algebra, not multiplicative"
        } else {
            "not a Hom-Lie algebra"
        }
    }

    fn axiom_line(
        &self,
        f: &mut fmt::Formatter<'_>,
        label: &str,
        axiom: Axiom,
        ok: bool,
        note: &str,
    ) -> fmt::Result {
        if ok {
            return writeln!(f, "{label}: ok{note}");
        }
        let mut failures = self.witnesses.iter().filter(|w| w.axiom == axiom);
        let first = failures.next().expect("a failed axiom has a witness");
        let more = failures.count();
        write!(
            f,
            "{label}: fails at ({}), residual {}",
            first.basis.join(", "),
            first.residual_text
        )?;
        if more > 0 {
            write!(f, " (+{more} more)")?;
        }
        writeln!(f, "{note}")
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "algebra: {}", self.algebra)?;
        self.axiom_line(
            f,
            "skew-symmetry",
            Axiom::SkewSymmetry,
            self.skew_symmetry,
            "",
        )?;
        self.axiom_line(f, "Hom-Jacobi", Axiom::HomJacobi, self.hom_jacobi, "")?;
        self.axiom_line(
            f,
            "multiplicativity",
            Axiom::Multiplicativity,
            self.multiplicative,
            "",
        )?;
        self.axiom_line(
            f,
            "classical Jacobi",
            Axiom::ClassicalJacobi,
            self.classical_jacobi,
            " (informational)",
        )?;
        writeln!(f, "verdict: {}", self.verdict())
    }
}

/// `solvable: class 3` or `not nilpotent (stabilized at dim 1)`.
pub fn verdict_line(s: &SeriesReport) -> String {
    let property = match s.kind {
        SeriesKind::Derived => "solvable",
        SeriesKind::LowerCentral => "nilpotent",
    };
    match s.verdict {
        Verdict::Class(k) => format!("{property}: class {k}"),
        Verdict::NotTerminating { stabilized_at } => {
            format!(
                "not {property} (stabilized at dim {})",
                s.dims[stabilized_at]
            )
        }
    }
}

#[derive(Serialize)]
pub struct SeriesOutput {
    command: &'static str,
    algebra: AlgebraSummary,
    series: SeriesReport,
}

pub fn series(l: &HomLieAlgebra, s: SeriesReport) -> SeriesOutput {
    SeriesOutput {
        command: "series",
        algebra: summary(l),
        series: s,
    }
}

impl fmt::Display for SeriesOutput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = &self.series;
        let title = match s.kind {
            SeriesKind::Derived => "derived series",
            SeriesKind::LowerCentral => "lower central series",
        };
        writeln!(f, "{title} of {}", self.algebra)?;
        for (i, term) in s.chain.iter().enumerate() {
            if term.is_zero() {
                writeln!(f, "step {i}: dim 0")?;
            } else {
                writeln!(
                    f,
                    "step {i}: dim {}, basis {}",
                    term.dim(),
                    format_subspace_spec(term)
                )?;
            }
        }
        writeln!(f, "{}", verdict_line(s))
    }
}

#[derive(Serialize)]
pub struct ClassReport {
    command: &'static str,
    algebra: AlgebraSummary,
    property: &'static str,
    class: Option<usize>,
    stable_dim: Option<usize>,
    verdict: Verdict,
    dims: Vec<usize>,
    #[serde(skip)]
    line: String,
}

pub fn class(l: &HomLieAlgebra, s: SeriesReport) -> ClassReport {
    ClassReport {
        command: "class",
        algebra: summary(l),
        property: match s.kind {
            SeriesKind::Derived => "solvable",
            SeriesKind::LowerCentral => "nilpotent",
        },
        class: s.class(),
        stable_dim: s.stable_dim(),
        verdict: s.verdict,
        line: verdict_line(&s),
        dims: s.dims,
    }
}

impl fmt::Display for ClassReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.line)
    }
}

#[derive(Serialize)]
pub struct ConstructionReport {
    command: &'static str,
    algebra: AlgebraSummary,
    document: String,
}

pub fn construction(command: &'static str, l: &HomLieAlgebra) -> Report {
    Report::Construction(ConstructionReport {
        command,
        algebra: summary(l),
        document: emit_algebra(l),
    })
}

impl fmt::Display for ConstructionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.document)
    }
}

#[derive(Serialize)]
pub struct MorphismReport {
    command: &'static str,
    source: AlgebraSummary,
    target: AlgebraSummary,
    matrix: Matrix,
    verdict: &'static str,
    witness: Option<MorphismWitness>,
    #[serde(skip)]
    line: String,
}

fn morphism_line(f: &LinearMap, v: &MorphismVerdict) -> String {
    let src = f.source().basis_names();
    let tgt = f.target().basis_names();
    match v {
        MorphismVerdict::Isomorphism => "isomorphism".into(),
        MorphismVerdict::Morphism => "morphism".into(),
        MorphismVerdict::NotMorphism(MorphismWitness::Alpha { i, residual }) => format!(
            "not a morphism: does not commute with alpha at {}, residual {}",
            src[*i],
            format_linear_combination(residual, tgt)
        ),
        MorphismVerdict::NotMorphism(MorphismWitness::Bracket { i, j, residual }) => format!(
            "not a morphism: does not preserve [{}, {}], residual {}",
            src[*i],
            src[*j],
            format_linear_combination(residual, tgt)
        ),
    }
}

pub fn morphism(f: &LinearMap, v: &MorphismVerdict) -> MorphismReport {
    let (verdict, witness) = match v {
        MorphismVerdict::Isomorphism => ("isomorphism", None),
        MorphismVerdict::Morphism => ("morphism", None),
        MorphismVerdict::NotMorphism(w) => ("not_morphism", Some(w.clone())),
    };
    MorphismReport {
        command: "morphism",
        source: summary(f.source()),
        target: summary(f.target()),
        matrix: f.matrix().clone(),
        verdict,
        witness,
        line: morphism_line(f, v),
    }
}

impl fmt::Display for MorphismReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.line)
    }
}

#[derive(Serialize)]
pub struct ExpectedOutput {
    solvable: String,
    nilpotent: String,
    provenance: String,
}

fn expectation_text(e: ClassExpectation) -> String {
    match e {
        ClassExpectation::Class(k) => format!("class {k}"),
        ClassExpectation::Never => "never".into(),
        ClassExpectation::Unspecified => "unspecified".into(),
    }
}

#[derive(Serialize)]
pub struct ExampleReport {
    command: &'static str,
    fixture: String,
    check: CheckReport,
    solvable: ClassReport,
    nilpotent: ClassReport,
    isomorphism: Option<MorphismReport>,
    expected: ExpectedOutput,
    /// Computed axioms and verdicts agree with the fixture's expectations.
    pub matches: bool,
}

pub fn example(
    fx: &Fixture,
    iso: Option<&LinearMap>,
    max_steps: Option<usize>,
) -> homlie::Result<ExampleReport> {
    let l = &fx.algebra;
    let check = check(l);
    let derived = compute_series(l, SeriesKind::Derived, max_steps)?;
    let lower = compute_series(l, SeriesKind::LowerCentral, max_steps)?;
    let e = &fx.expected;
    let isomorphism = iso.map(|f| morphism(f, &check_morphism(f)));
    let matches = e.hom_lie == (check.skew_symmetry && check.hom_jacobi)
        && e.multiplicative == check.multiplicative
        && e.classical_jacobi
            .is_none_or(|c| c == check.classical_jacobi)
        && e.solvable.matches(derived.class())
        && e.nilpotent.matches(lower.class())
        && isomorphism
            .as_ref()
            .is_none_or(|m| m.verdict == "isomorphism");
    Ok(ExampleReport {
        command: "example",
        fixture: fx.name.clone(),
        check,
        solvable: class(l, derived),
        nilpotent: class(l, lower),
        isomorphism,
        expected: ExpectedOutput {
            solvable: expectation_text(e.solvable),
            nilpotent: expectation_text(e.nilpotent),
            provenance: e.provenance.clone(),
        },
        matches,
    })
}

impl fmt::Display for ExampleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.check)?;
        write!(f, "{}", self.solvable)?;
        write!(f, "{}", self.nilpotent)?;
        if let Some(m) = &self.isomorphism {
            writeln!(f, "map to {}: {}", m.target.name, m.line)?;
        }
        writeln!(
            f,
            "expected: solvable {}, nilpotent {}",
            self.expected.solvable, self.expected.nilpotent
        )?;
        writeln!(
            f,
            "matches expectation: {}",
            if self.matches { "yes" } else { "no" }
        )
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Report::Check(r) => r.fmt(f),
            Report::Series(r) => r.fmt(f),
            Report::Class(r) => r.fmt(f),
            Report::Construction(r) => r.fmt(f),
            Report::Morphism(r) => r.fmt(f),
            Report::Example(r) => r.fmt(f),
        }
    }
}
