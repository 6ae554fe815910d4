//! Structural checks shared by the property suites and the acceptance
//! harness. Each returns `Err` with a description of the first violation.

#![allow(dead_code)]

use homlie::algebra::default_basis_names;
use homlie::constructions::{
    check_morphism, direct_sum, ideal_generated_by, pushforward_series, quotient, restrict,
    subalgebra_generated_by, LinearMap,
};
use homlie::fixtures;
use homlie::linalg::{unit_vector, Matrix, Scalar, Subspace, Vector};
use homlie::series::{
    derived_series, is_central_series, is_solvable_series, lower_central_series, nilpotent_class,
    solvable_class,
};
use homlie::HomLieAlgebra;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Check = Result<(), String>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_vector(rng: &mut impl Rng, n: usize) -> Vector {
    (0..n)
        .map(|_| Scalar::from_int(rng.gen_range(-2..=2)))
        .collect()
}

/// `[e_i, e_j]` supported on `e_k` with `k < min(i, j)`, `α = 0`: nilpotent
/// by construction since each bracket lowers the smallest index.
pub fn triangular_nilpotent(n: usize, seed: u64) -> HomLieAlgebra {
    let mut r = rng(seed);
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut v = vec![Scalar::zero(); n];
            for slot in v.iter_mut().take(i) {
                if r.gen_ratio(1, 2) {
                    *slot = Scalar::from_int(r.gen_range(-2..=2));
                }
            }
            brackets.push(((i, j), v));
        }
    }
    HomLieAlgebra::from_brackets(
        format!("triangular-{n}-{seed}"),
        default_basis_names(n),
        brackets,
        Matrix::zeros(n, n),
    )
    .expect("valid shape")
}

/// The random corpus: `count` zero-twist algebras of dimension 1..=6 and a
/// few triangular nilpotent ones.
pub fn random_corpus(count: u64) -> Vec<HomLieAlgebra> {
    let mut out: Vec<HomLieAlgebra> = (0..count)
        .map(|seed| fixtures::zero_alpha_random(1 + (seed % 6) as usize, seed).algebra)
        .collect();
    out.extend((0..count / 5).map(|seed| triangular_nilpotent(2 + (seed % 5) as usize, seed)));
    out
}

fn dedup(mut v: Vec<Subspace>) -> Vec<Subspace> {
    let mut out: Vec<Subspace> = Vec::new();
    for s in v.drain(..) {
        if !out.contains(&s) {
            out.push(s);
        }
    }
    out
}

/// Ideals: zero, everything, the series terms that happen to be ideals, and
/// the ideals generated by single basis vectors and a few random vectors.
pub fn ideals(l: &HomLieAlgebra, seed: u64) -> Vec<Subspace> {
    let n = l.dim();
    let mut r = rng(seed);
    let mut out = vec![l.zero_space(), l.full_space()];
    for s in derived_series(l)
        .unwrap()
        .chain
        .into_iter()
        .chain(lower_central_series(l).unwrap().chain)
    {
        if l.is_ideal(&s).unwrap() {
            out.push(s);
        }
    }
    for k in 0..n {
        out.push(ideal_generated_by(l, &[unit_vector(n, k)]).unwrap());
    }
    for _ in 0..3 {
        out.push(ideal_generated_by(l, &[random_vector(&mut r, n)]).unwrap());
    }
    dedup(out)
}

pub fn subalgebras(l: &HomLieAlgebra, seed: u64) -> Vec<Subspace> {
    let n = l.dim();
    let mut r = rng(seed ^ 0x5eed);
    let mut out = vec![l.zero_space()];
    for k in 0..n {
        out.push(subalgebra_generated_by(l, &[unit_vector(n, k)]).unwrap());
        if k + 1 < n {
            out.push(
                subalgebra_generated_by(l, &[unit_vector(n, k), unit_vector(n, k + 1)]).unwrap(),
            );
        }
    }
    for _ in 0..3 {
        out.push(subalgebra_generated_by(l, &[random_vector(&mut r, n)]).unwrap());
    }
    dedup(out)
}

/// `L^(i) ⊆ L^i` for every `i`; nilpotent implies solvable with
/// `class(solvable) ≤ class(nilpotent)`.
pub fn series_containment(l: &HomLieAlgebra) -> Check {
    let d = derived_series(l).map_err(|e| e.to_string())?;
    let c = lower_central_series(l).map_err(|e| e.to_string())?;
    for i in 0..d.chain.len().max(c.chain.len()) {
        if !d.term(i).is_subspace_of(c.term(i)).unwrap() {
            return Err(format!(
                "{}: derived term {i} not inside lower central term {i}",
                l.name()
            ));
        }
    }
    if let Some(k) = c.class() {
        match d.class() {
            Some(s) if s <= k => {}
            other => {
                return Err(format!(
                    "{}: nilpotent of class {k} but solvable class {other:?}",
                    l.name()
                ))
            }
        }
    }
    Ok(())
}

fn le(child: Option<usize>, parent: Option<usize>) -> bool {
    match (child, parent) {
        (_, None) => true,
        (Some(c), Some(p)) => c <= p,
        (None, Some(_)) => false,
    }
}

/// Subalgebras and quotients have class at most that of the parent, for
/// both notions.
pub fn substructure_bounds(l: &HomLieAlgebra, ideals: &[Subspace], subs: &[Subspace]) -> Check {
    let (s, n) = (solvable_class(l).unwrap(), nilpotent_class(l).unwrap());
    for h in subs {
        let (sub, _) = restrict(l, h).map_err(|e| e.to_string())?;
        let (hs, hn) = (
            solvable_class(&sub).unwrap(),
            nilpotent_class(&sub).unwrap(),
        );
        if !le(hs, s) || !le(hn, n) {
            return Err(format!(
                "{}: subalgebra {h:?} has classes {hs:?}/{hn:?} vs parent {s:?}/{n:?}",
                l.name()
            ));
        }
    }
    for i in ideals {
        let q = quotient(l, i).map_err(|e| e.to_string())?.quotient;
        let (qs, qn) = (solvable_class(&q).unwrap(), nilpotent_class(&q).unwrap());
        if !le(qs, s) || !le(qn, n) {
            return Err(format!(
                "{}: quotient by {i:?} has classes {qs:?}/{qn:?} vs parent {s:?}/{n:?}",
                l.name()
            ));
        }
    }
    Ok(())
}

/// If `I` and `L/I` are solvable of classes `k` and `m`, then `L` is
/// solvable of class at most `k + m`.
pub fn extension_bound(l: &HomLieAlgebra, ideals: &[Subspace]) -> Check {
    let s = solvable_class(l).unwrap();
    for i in ideals {
        let (sub, _) = restrict(l, i).map_err(|e| e.to_string())?;
        let q = quotient(l, i).map_err(|e| e.to_string())?.quotient;
        if let (Some(k), Some(m)) = (solvable_class(&sub).unwrap(), solvable_class(&q).unwrap()) {
            match s {
                Some(c) if c <= k + m => {}
                _ => {
                    return Err(format!(
                        "{}: ideal {i:?} class {k}, quotient class {m}, but L has {s:?}",
                        l.name()
                    ))
                }
            }
        }
    }
    Ok(())
}

/// `L1 ⊕ L2` is solvable of class `≤ k + m` (in fact `max(k, m)`), and
/// nilpotent of class exactly `max(k, m)` when both summands are.
pub fn direct_sum_bounds(l1: &HomLieAlgebra, l2: &HomLieAlgebra) -> Check {
    let sum = direct_sum(l1, l2);
    let (s1, s2, s) = (
        solvable_class(l1).unwrap(),
        solvable_class(l2).unwrap(),
        solvable_class(&sum).unwrap(),
    );
    if let (Some(k), Some(m)) = (s1, s2) {
        if !matches!(s, Some(c) if c <= k + m && c == k.max(m)) {
            return Err(format!(
                "{}: solvable {k}, {m} but direct sum {s:?}",
                sum.name()
            ));
        }
    } else if s.is_some() {
        return Err(format!(
            "{}: a summand is not solvable but the sum is",
            sum.name()
        ));
    }
    let (n1, n2, n) = (
        nilpotent_class(l1).unwrap(),
        nilpotent_class(l2).unwrap(),
        nilpotent_class(&sum).unwrap(),
    );
    if let (Some(k), Some(m)) = (n1, n2) {
        if n != Some(k.max(m)) {
            return Err(format!(
                "{}: nilpotent {k}, {m} but direct sum {n:?}",
                sum.name()
            ));
        }
    } else if n.is_some() {
        return Err(format!(
            "{}: a summand is not nilpotent but the sum is",
            sum.name()
        ));
    }
    Ok(())
}

/// Computed terminating chains pass the series validators, and every
/// central chain is also a solvable chain.
pub fn chain_validators(l: &HomLieAlgebra) -> Check {
    let d = derived_series(l).unwrap();
    if d.class().is_some() && !is_solvable_series(l, &d.chain).map_err(|e| e.to_string())? {
        return Err(format!(
            "{}: derived series rejected as a solvable series",
            l.name()
        ));
    }
    let c = lower_central_series(l).unwrap();
    if c.class().is_some() {
        if !is_central_series(l, &c.chain).map_err(|e| e.to_string())? {
            return Err(format!(
                "{}: lower central series rejected as a central series",
                l.name()
            ));
        }
        if !is_solvable_series(l, &c.chain).map_err(|e| e.to_string())? {
            return Err(format!(
                "{}: central series rejected as a solvable series",
                l.name()
            ));
        }
    }
    Ok(())
}

/// Morphisms out of `l`: identity, quotient projections and subalgebra
/// inclusions (the latter with `l` as target).
pub fn morphisms(l: &HomLieAlgebra, ideals: &[Subspace], subs: &[Subspace]) -> Vec<LinearMap> {
    let mut out = vec![LinearMap::identity(l)];
    for i in ideals {
        out.push(quotient(l, i).unwrap().projection);
    }
    for h in subs {
        out.push(restrict(l, h).unwrap().1);
    }
    out
}

/// `φ(L^(i)) = φ(L)^(i)` and `φ(L^i) = φ(L)^i`.
pub fn pushforward(f: &LinearMap) -> Check {
    if !check_morphism(f).is_morphism() {
        return Err(format!(
            "{} -> {}: not a morphism",
            f.source().name(),
            f.target().name()
        ));
    }
    let r = pushforward_series(f).map_err(|e| e.to_string())?;
    if !r.all_equal() {
        return Err(format!(
            "{} -> {}: image series differ",
            f.source().name(),
            f.target().name()
        ));
    }
    Ok(())
}

/// Run every theorem check on one algebra.
pub fn all_single(l: &HomLieAlgebra, seed: u64) -> Vec<(&'static str, Check)> {
    let is = ideals(l, seed);
    let ss = subalgebras(l, seed);
    let mut push = Ok(());
    for f in morphisms(l, &is, &ss) {
        push = push.and_then(|_| pushforward(&f));
    }
    vec![
        ("series containment", series_containment(l)),
        ("substructure bounds", substructure_bounds(l, &is, &ss)),
        ("extension bound", extension_bound(l, &is)),
        ("chain validators", chain_validators(l)),
        ("pushforward", push),
    ]
}
