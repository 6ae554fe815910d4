//! Acceptance suite: one `[PASS]`/`[FAIL]` line per criterion, exit status 1
//! if any criterion fails.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use homlie::constructions::{check_morphism, quotient, restrict, MorphismVerdict};
use homlie::document::{emit_algebra, parse_algebra};
use homlie::field::{GaussianRational, Rational};
use homlie::fixtures::{self, catalogue};
use homlie::linalg::{Matrix, Scalar, Subspace, Vector};
use homlie::series::{
    derived_series, lower_central_series, nilpotent_class, solvable_class, Verdict,
};
use homlie::{Axiom, HomLieAlgebra};
use rand::Rng;

type Outcome = Result<String, String>;

/// Wall-clock budget for reproducing a single worked example.
const ITEM_BUDGET: Duration = Duration::from_secs(1);

fn timed(f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let r = f()?;
    let elapsed = start.elapsed();
    if elapsed > ITEM_BUDGET {
        return Err(format!(
            "{r}; took {elapsed:?}, over the {ITEM_BUDGET:?} budget"
        ));
    }
    Ok(format!("{r} ({} ms)", elapsed.as_millis()))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1() -> Outcome {
    let mut problems = Vec::new();
    for n in 5..=12 {
        let l = fixtures::family_nil(n).map_err(|e| e.to_string())?.algebra;
        let expected_solvable = n.div_ceil(2);
        let s = solvable_class(&l).map_err(|e| e.to_string())?;
        if s != Some(expected_solvable) {
            problems.push(format!(
                "n={n}: solvable {s:?}, expected {expected_solvable}"
            ));
        }
        let c = nilpotent_class(&l).map_err(|e| e.to_string())?;
        if c != Some(n - 2) {
            problems.push(format!("n={n}: nilpotent {c:?}, expected {}", n - 2));
        }
    }
    if problems.is_empty() {
        Ok("solvable and nilpotent classes match for n = 5..12".into())
    } else {
        Err(problems.join("; "))
    }
}

fn criterion_2() -> Outcome {
    let c2 = fixtures::c2_fixture().algebra;
    let s = solvable_class(&c2).map_err(|e| e.to_string())?;
    ensure(s == Some(2), || format!("c2 solvable {s:?}"))?;
    let lc = lower_central_series(&c2).map_err(|e| e.to_string())?;
    let span11 =
        Subspace::span(&[vec![Scalar::one(), Scalar::one()]], 2).map_err(|e| e.to_string())?;
    match lc.verdict {
        Verdict::NotTerminating { stabilized_at } => {
            ensure(lc.chain[stabilized_at] == span11, || {
                format!("c2 stabilizes at {:?}", lc.chain[stabilized_at])
            })?
        }
        Verdict::Class(k) => return Err(format!("c2 nilpotent of class {k}")),
    }
    let (m, iso) = fixtures::matrix_fixture().map_err(|e| e.to_string())?;
    let v = check_morphism(&iso);
    ensure(v == MorphismVerdict::Isomorphism, || {
        format!("matrix -> c2: {v:?}")
    })?;
    let ms = solvable_class(&m.algebra).map_err(|e| e.to_string())?;
    ensure(ms == Some(2), || format!("matrix algebra solvable {ms:?}"))?;
    common::pushforward(&iso)?;
    Ok("c2 class 2, lower central stabilizes at span{(1,1)}; matrix map is an isomorphism, class 2".into())
}

fn criterion_3() -> Outcome {
    let p3 = fixtures::poly_fixture(3)
        .map_err(|e| e.to_string())?
        .algebra;
    let d3 = derived_series(&p3).map_err(|e| e.to_string())?;
    ensure(d3.dims == [4, 2, 0], || {
        format!("poly-3 derived dims {:?}", d3.dims)
    })?;
    ensure(d3.class() == Some(2), || {
        format!("poly-3 solvable {:?}", d3.class())
    })?;
    ensure(
        nilpotent_class(&p3).map_err(|e| e.to_string())?.is_none(),
        || "poly-3 nilpotent".into(),
    )?;

    let p4 = fixtures::poly_fixture(4)
        .map_err(|e| e.to_string())?
        .algebra;
    let d4 = derived_series(&p4).map_err(|e| e.to_string())?;
    ensure(d4.class().is_none() && d4.stable_dim() == Some(4), || {
        format!("poly-4 derived {:?}", d4.dims)
    })?;
    ensure(
        nilpotent_class(&p4).map_err(|e| e.to_string())?.is_none(),
        || "poly-4 nilpotent".into(),
    )?;

    let residual = p4.jacobi_residual(2, 3, 4, false);
    let mut expected = vec![Scalar::zero(); 5];
    expected[3] = Scalar::from_int(96);
    ensure(residual == expected, || {
        format!("classical residual on (x^2, x^3, x^4) is {residual:?}")
    })?;
    let report = p4.check_axioms();
    ensure(
        report.hom_jacobi_ok && report.witnesses_for(Axiom::HomJacobi).next().is_none(),
        || "poly-4 has a nonzero Hom-Jacobi residual".into(),
    )?;
    Ok("poly-3 dims (4,2,0); poly-4 stabilizes at dim 4; classical residual 96*x^3, Hom-Jacobi residuals zero".into())
}

fn criterion_4() -> Outcome {
    let l = fixtures::counterexample_2dim().algebra;
    let i = Subspace::coordinate([0], 2);
    ensure(l.is_ideal(&i).map_err(|e| e.to_string())?, || {
        "span{e1} is not an ideal".into()
    })?;
    let (sub, _) = restrict(&l, &i).map_err(|e| e.to_string())?;
    let q = quotient(&l, &i).map_err(|e| e.to_string())?.quotient;
    let (ic, qc) = (
        nilpotent_class(&sub).map_err(|e| e.to_string())?,
        nilpotent_class(&q).map_err(|e| e.to_string())?,
    );
    ensure(ic == Some(1) && qc == Some(1), || {
        format!("ideal class {ic:?}, quotient class {qc:?}")
    })?;
    let lc = lower_central_series(&l).map_err(|e| e.to_string())?;
    ensure(lc.class().is_none() && lc.chain.last() == Some(&i), || {
        format!("lower central {:?}", lc.dims)
    })?;
    let s = solvable_class(&l).map_err(|e| e.to_string())?;
    ensure(s == Some(2), || format!("solvable {s:?}"))?;
    let (is, qs) = (
        solvable_class(&sub).map_err(|e| e.to_string())?,
        solvable_class(&q).map_err(|e| e.to_string())?,
    );
    ensure(matches!((is, qs), (Some(a), Some(b)) if 2 <= a + b), || {
        "extension bound".into()
    })?;
    Ok("ideal and quotient nilpotent of class 1, algebra not nilpotent, solvable of class 2 <= 1 + 1".into())
}

struct Corpus {
    algebras: Vec<HomLieAlgebra>,
    random_count: usize,
    /// `checks[k][t]`: theorem check `t` on algebra `k`.
    checks: Vec<Vec<common::Check>>,
}

fn corpus() -> Corpus {
    let random = common::random_corpus(100);
    let random_count = random.len();
    let mut algebras: Vec<HomLieAlgebra> = catalogue().into_iter().map(|f| f.algebra).collect();
    algebras.extend(random);
    let checks = algebras
        .iter()
        .enumerate()
        .map(|(k, l)| {
            common::all_single(l, k as u64)
                .into_iter()
                .map(|(_, r)| r)
                .collect()
        })
        .collect();
    Corpus {
        algebras,
        random_count,
        checks,
    }
}

fn theorem_line(c: &Corpus, index: usize) -> Outcome {
    let mut failures = Vec::new();
    for row in &c.checks {
        if let Err(e) = &row[index] {
            failures.push(e.clone());
        }
    }
    if failures.is_empty() {
        Ok(format!(
            "{} algebras ({} random)",
            c.algebras.len(),
            c.random_count
        ))
    } else {
        Err(failures.join("; "))
    }
}

fn direct_sum_line(c: &Corpus) -> Outcome {
    let small: Vec<&HomLieAlgebra> = c.algebras.iter().filter(|l| l.dim() <= 6).collect();
    let mut pairs = 0;
    let mut r = common::rng(7);
    for a in &small {
        for _ in 0..3 {
            let b = small[r.gen_range(0..small.len())];
            common::direct_sum_bounds(a, b)?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} direct sums"))
}

fn random_scalar(r: &mut impl Rng) -> Scalar {
    let num = r.gen_range(-3..=3);
    let den = r.gen_range(1..=3);
    let re = Rational::new(num, den).expect("nonzero denominator");
    if r.gen_ratio(1, 3) {
        GaussianRational::new(re, Rational::from_integer(r.gen_range(-2..=2)))
    } else {
        GaussianRational::real(re)
    }
}

fn random_vectors(r: &mut impl Rng, count: usize, n: usize) -> Vec<Vector> {
    (0..count)
        .map(|_| (0..n).map(|_| random_scalar(r)).collect())
        .collect()
}

fn criterion_6() -> Outcome {
    const CASES: usize = 1000;
    let mut r = common::rng(2024);
    for case in 0..CASES {
        let n = r.gen_range(1..=6);
        let (a, b) = (r.gen_range(0..=n), r.gen_range(0..=n));
        let u = Subspace::span(&random_vectors(&mut r, a, n), n).map_err(|e| e.to_string())?;
        let w = Subspace::span(&random_vectors(&mut r, b, n), n).map_err(|e| e.to_string())?;
        let sum = u.sum(&w).map_err(|e| e.to_string())?;
        let meet = u.intersect(&w).map_err(|e| e.to_string())?;
        ensure(sum.dim() + meet.dim() == u.dim() + w.dim(), || {
            format!("case {case}: Grassmann identity")
        })?;
        ensure(
            meet.is_subspace_of(&u).unwrap() && meet.is_subspace_of(&w).unwrap(),
            || format!("case {case}: intersection escapes"),
        )?;

        let rows = r.gen_range(1..=6);
        let m =
            Matrix::from_rows(&random_vectors(&mut r, rows, n), n).map_err(|e| e.to_string())?;
        let once = m.rref();
        ensure(once.rref() == once, || {
            format!("case {case}: rref not idempotent")
        })?;

        // a random invertible recombination of u's basis spans the same subspace
        let basis = u.basis_vectors();
        let k = basis.len();
        let change = loop {
            let c =
                Matrix::from_rows(&random_vectors(&mut r, k, k), k).map_err(|e| e.to_string())?;
            if c.is_invertible() {
                break c;
            }
        };
        let mixed: Vec<Vector> = (0..k)
            .map(|row| {
                let mut v = vec![Scalar::zero(); n];
                for (j, bv) in basis.iter().enumerate() {
                    homlie::linalg::add_scaled(&mut v, &change[(row, j)], bv);
                }
                v
            })
            .collect();
        let again = Subspace::span(&mixed, n).map_err(|e| e.to_string())?;
        ensure(again == u && again.basis() == u.basis(), || {
            format!("case {case}: basis not canonical")
        })?;
    }
    Ok(format!(
        "{CASES} cases each for Grassmann, RREF idempotence and canonical bases"
    ))
}

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn criterion_7() -> Outcome {
    let mut documents = 0;
    for f in catalogue() {
        let text = emit_algebra(&f.algebra);
        let parsed = parse_algebra(&text).map_err(|e| format!("{}: {e}", f.name))?;
        ensure(parsed.same_structure(&f.algebra), || {
            format!("{}: parse changed the algebra", f.name)
        })?;
        ensure(emit_algebra(&parsed) == text, || {
            format!("{}: re-emit differs", f.name)
        })?;
        documents += 1;
    }

    let (c2, f6, ce, m, bad) = (
        data("c2.hla"),
        data("family-nil-6.hla"),
        data("counterexample.hla"),
        data("matrix.hla"),
        data("not-multiplicative.hla"),
    );
    let contract: &[(&[&str], i32)] = &[
        (&["check", &c2], 0),
        (&["check", &bad], 2),
        (&["series", "derived", &c2], 0),
        (&["series", "lower-central", &c2], 2),
        (&["class", "solvable", &f6], 0),
        (&["class", "nilpotent", &c2], 2),
        (&["quotient", &ce, "--ideal", "1,0"], 0),
        (&["quotient", &ce, "--ideal", "0,1"], 3),
        (&["direct-sum", &c2, &f6], 0),
        (&["direct-sum", &c2, &data("inconsistent-skew.hla")], 1),
        (&["restrict", &ce, "--subspace", "1,0"], 0),
        (&["restrict", &c2, "--subspace", "1,0"], 3),
        (&["morphism", &m, &c2, "--matrix", "1,0;0,1"], 0),
        (&["morphism", &m, &c2, "--matrix", "1,0;0,2"], 2),
        (&["example", "c2"], 0),
        (&["example", "family-nil", "--n", "4"], 3),
    ];
    for (args, expected) in contract {
        let status = Command::new(env!("CARGO_BIN_EXE_homlie"))
            .args(*args)
            .output()
            .map_err(|e| e.to_string())?
            .status
            .code();
        ensure(status == Some(*expected), || {
            format!(
                "homlie {}: exit {status:?}, expected {expected}",
                args.join(" ")
            )
        })?;
    }
    Ok(format!(
        "{documents} documents round-trip; {} exit-code cases",
        contract.len()
    ))
}

fn main() {
    let corpus = corpus();
    let results: Vec<(&str, Outcome)> = vec![
        ("1 family_nil classes", timed(criterion_1)),
        ("2 c2 and matrix fixtures", timed(criterion_2)),
        ("3 polynomial fixtures", timed(criterion_3)),
        ("4 counterexample regression", timed(criterion_4)),
        (
            "5.1 derived inside lower central, nilpotent implies solvable",
            theorem_line(&corpus, 0),
        ),
        (
            "5.2 subalgebra and quotient classes bounded by parent",
            theorem_line(&corpus, 1),
        ),
        ("5.3 extension bound", theorem_line(&corpus, 2)),
        ("5.4 direct sum classes", direct_sum_line(&corpus)),
        (
            "5.5 computed chains pass series validators",
            theorem_line(&corpus, 3),
        ),
        ("5.6 pushforward of series", theorem_line(&corpus, 4)),
        ("6 kernel properties", criterion_6()),
        ("7 CLI round-trip and exit codes", criterion_7()),
    ];
    let mut failed = 0;
    for (name, r) in &results {
        match r {
            Ok(detail) => println!("[PASS] {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {name}: {detail}");
            }
        }
    }
    println!("{} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
