//! Named verification suites. Each suite runs a family of exact or numeric
//! checks and returns one line per check.

use num_complex::Complex64;
use serde::Serialize;

use crate::boson::{
    apply_phi, apply_phi_star, apply_word, nc_e_apply, nc_h_apply, nc_schur_apply, nc_schur_apply_h, tq_coeff_apply,
};
use crate::error::{Error, Result};
use crate::fermion::{
    apply_symmetry, apply_u_word, nc_e_u_apply, nc_h_u_apply, nc_schur_u_apply, nc_schur_u_apply_e, nc_schur_u_apply_h,
    Symmetry,
};
use crate::identities::{
    cauchy_kostka_check, fusion_recursion_check, fusion_symmetry_check, gw_recursion_down, gw_recursion_up,
    gw_symmetry_check, hierarchy_build, schur_commutation_check, CheckReport, CoeffTable, GwSymmetry,
};
use crate::laurent::LaurentInt;
use crate::partition::Partition;
use crate::spectral::{
    apply_at_one, bethe_norm_check, bethe_roots_boson, bethe_roots_fermion, bethe_vector_boson, bethe_vector_fermion,
    boson_bethe_residual, complete_relations_residual, eigen_residual, elementary_of, fermion_bethe_residual,
    fermion_norms, fermion_relations_residual, smatrix, verify_transfer_eigen,
};
use crate::state::{BosonState, FermionState};
use crate::symfunc::complete_upto;
use crate::weight::AffineWeight;
use crate::word::Word01;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub ok: bool,
    /// Numeric (tolerance based) rather than exact.
    pub numeric: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    fn new(suite: &str) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            checks: Vec::new(),
        }
    }

    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn numeric_failure(&self) -> bool {
        self.checks.iter().any(|c| !c.ok && c.numeric)
    }

    fn exact(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            ok,
            numeric: false,
            detail: detail.into(),
        });
    }

    fn residual(&mut self, name: impl Into<String>, value: f64, tol: f64) {
        let ok = value.is_finite() && value < tol;
        self.checks.push(Check {
            name: name.into(),
            ok,
            numeric: true,
            detail: format!("{value:.3e} < {tol:.0e}"),
        });
    }

    fn report(&mut self, r: &CheckReport) {
        let detail = match r.violations.first() {
            None => format!("{} checked", r.checked),
            Some(v) => format!("{} violations, first: {v}", r.violations.len()),
        };
        self.exact(r.name.clone(), r.ok(), detail);
    }

    pub fn merge(&mut self, other: SuiteReport) {
        self.checks.extend(other.checks);
    }
}

/// Sample spectral parameters for T(u) checks.
pub const SAMPLE_U: [Complex64; 5] = [
    Complex64::new(0.173, 0.0),
    Complex64::new(-0.41, 0.27),
    Complex64::new(0.62, -0.35),
    Complex64::new(-0.08, -0.77),
    Complex64::new(1.31, 0.52),
];

/// Bethe equations, eigenvectors, transfer matrix, norms and orthogonality.
pub fn bethe_suite(n: usize, k: usize, tol: f64) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(&format!("bethe n={n} k={k}"));
    let boson = bethe_roots_boson(n, k)?;
    let fermion = bethe_roots_fermion(n, k)?;
    let mx = |it: &mut dyn Iterator<Item = f64>| it.fold(0.0f64, f64::max);
    rep.residual(
        "boson roots: Bethe equations",
        mx(&mut boson.iter().map(boson_bethe_residual)),
        tol,
    );
    rep.residual(
        "boson roots: complete-function relations",
        mx(&mut boson.iter().map(complete_relations_residual)),
        tol,
    );
    rep.residual(
        "fermion roots: free-fermion Bethe equations",
        mx(&mut fermion.iter().map(fermion_bethe_residual)),
        tol,
    );
    rep.residual(
        "fermion roots: quotient ideal relations",
        mx(&mut fermion.iter().map(fermion_relations_residual)),
        tol,
    );
    let mut eb = 0.0f64;
    for r in &boson {
        let b = bethe_vector_boson(r);
        let h = complete_upto(n, &r.x);
        for s in 1..n {
            eb = eb.max(eigen_residual(&apply_at_one(|v| nc_e_apply(s, v), &b), &b, h[s]));
        }
    }
    rep.residual("boson Bethe vectors: e_r eigen", eb, tol * 10.0);
    let mut ef = 0.0f64;
    for r in &fermion {
        let b = bethe_vector_fermion(r);
        for s in 1..n + k {
            ef = ef.max(eigen_residual(
                &apply_at_one(|v| nc_e_u_apply(s, v), &b),
                &b,
                elementary_of(&r.y, s),
            ));
        }
    }
    rep.residual("fermion Bethe vectors: e_r eigen", ef, tol * 10.0);
    let mut tr = 0.0f64;
    for r in &boson {
        for u in SAMPLE_U {
            match verify_transfer_eigen(r, u) {
                Ok(x) => tr = tr.max(x),
                Err(Error::Pole) => {}
                Err(e) => return Err(e),
            }
        }
    }
    rep.residual("T(u) eigenvectors at 5 sample u", tr, 1e-8);
    let norms = bethe_norm_check(n, k)?;
    rep.residual(
        "boson norm n(n+k)^(n-1)/|Van|^2 (relative)",
        norms.max_rel_norm_error,
        1e-8,
    );
    rep.residual("boson orthogonality", norms.max_orthogonality, 1e-8);
    let (fe, orth) = fermion_norms(n, k)?;
    rep.residual("fermion orthogonality", orth, 1e-8);
    let worst = fe
        .iter()
        .map(|e| (e.measured / e.nk_over_van - 1.0).abs())
        .fold(0.0f64, f64::max);
    rep.checks.push(Check {
        name: "fermion norms (recorded)".into(),
        ok: true,
        numeric: true,
        detail: format!("max |measured/(N^k/|Van|^2) - 1| = {worst:.3e}"),
    });
    Ok(rep)
}

/// Modular S-matrix identities.
pub fn smatrix_suite(n: usize, k: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(&format!("smatrix n={n} k={k}"));
    let s = smatrix(n, k)?;
    rep.residual("unitarity", s.unitarity_residual(), 1e-9);
    rep.residual("symmetry", s.symmetry_residual(), 1e-9);
    rep.residual("S_0sigma sine product", s.sin_product_residual(), 1e-9);
    rep.residual("S^2 = charge conjugation", s.charge_conjugation_residual(), 1e-8);
    rep.residual("characters", s.character_residual(), 1e-8);
    rep.residual("rotation", s.rotation_residual(), 1e-8);
    rep.residual("(ST)^3 = S^2", s.modular_relation_residual(), 1e-8);
    if n == 2 {
        let mut worst = 0.0f64;
        for (i, l) in s.basis.iter().enumerate() {
            for (j, m) in s.basis.iter().enumerate() {
                let (a, b) = (l.to_partition().size() as f64, m.to_partition().size() as f64);
                let kk = k as f64 + 2.0;
                let want = (2.0 / kk).sqrt() * (std::f64::consts::PI * (a + 1.0) * (b + 1.0) / kk).sin();
                worst = worst.max((s.entries[i][j] - want).norm());
            }
        }
        rep.residual("sl(2) closed form", worst, 1e-9);
    }
    Ok(rep)
}

/// All four GW symmetries on Gr(k, n+k) and the three fusion symmetries at (n, k).
pub fn symmetry_suite(n: usize, k: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(&format!("symmetry n={n} k={k}"));
    let t = CoeffTable::gw_direct(k, n + k)?;
    for s in [
        GwSymmetry::S3,
        GwSymmetry::LevelRank,
        GwSymmetry::Rotation,
        GwSymmetry::Curious,
    ] {
        rep.report(&gw_symmetry_check(&t, s)?);
    }
    if n >= 2 {
        rep.report(&fusion_symmetry_check(n, k)?);
    }
    Ok(rep)
}

/// GW recursions at every site, the hierarchy algorithm, and the fusion recursion.
pub fn recursion_suite(n: usize, k: usize) -> Result<SuiteReport> {
    let nn = n + k;
    let mut rep = SuiteReport::new(&format!("recursion n={n} k={k}"));
    let t = CoeffTable::gw_direct(k, nn)?;
    let parts = t.basis();
    let (mut checked, mut bad) = (0, Vec::new());
    for a in &parts {
        for b in &parts {
            for c in &parts {
                let Some(d) = crate::fermion::gw_degree(a, b, c, nn) else {
                    continue;
                };
                let want = t.get(a, b, c).map_or(0, |x| x.1 as i64);
                let wb = Word01::from_partition(b, k, nn)?;
                for j in 1..=nn {
                    let got = if wb.get(j) {
                        gw_recursion_down(a, b, c, d as i64, j, k, nn)?
                    } else {
                        gw_recursion_up(a, b, c, d as i64, j, k, nn)?
                    };
                    checked += 1;
                    if got != want {
                        bad.push(format!("{a}|{b}|{c} j={j}: {got} vs {want}"));
                    }
                }
            }
        }
    }
    rep.exact(
        format!("GW recursions reproduce Gr({k},{nn})"),
        bad.is_empty(),
        bad.first().cloned().unwrap_or_else(|| format!("{checked} checked")),
    );
    let h = hierarchy_build(nn)?;
    let same = (0..=nn).all(|kk| CoeffTable::gw_direct(kk, nn).map(|d| d == h[kk]).unwrap_or(false));
    rep.exact(format!("hierarchy from the point reproduces Gr(*,{nn})"), same, "");
    if n >= 2 && k >= 1 {
        let all = AffineWeight::all(n, k - 1);
        let alphas: Vec<Vec<usize>> = vec![vec![1], vec![2], vec![1, 1], vec![2, 1], vec![1, 1, 1]];
        let (mut checked, mut bad) = (0, Vec::new());
        for alpha in alphas.iter().filter(|a| a.iter().all(|&x| x <= n)) {
            for js in sites(n, alpha.len()) {
                for mu in &all {
                    for nu in &all {
                        let r = fusion_recursion_check(mu, nu, alpha, &js)?;
                        checked += 1;
                        if !r.ok() {
                            bad.push(format!("{mu}->{nu} alpha={alpha:?} j={js:?}: {} vs {}", r.lhs, r.rhs));
                        }
                    }
                }
            }
        }
        rep.exact(
            format!("fusion recursion level {} <-> {k}", k - 1),
            bad.is_empty(),
            bad.first().cloned().unwrap_or_else(|| format!("{checked} checked")),
        );
    }
    Ok(rep)
}

fn sites(n: usize, l: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..l {
        out = out
            .into_iter()
            .flat_map(|v| (0..n).map(move |j| [v.clone(), vec![j]].concat()))
            .collect();
    }
    out
}

/// Compositions with |alpha| <= 3.
pub fn small_compositions() -> Vec<Vec<usize>> {
    vec![
        vec![1],
        vec![2],
        vec![3],
        vec![1, 1],
        vec![1, 2],
        vec![2, 1],
        vec![1, 1, 1],
    ]
}

/// Cauchy/Kostka operator and coefficient identities.
pub fn cauchy_suite(n: usize, k: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(&format!("cauchy n={n} k={k}"));
    for a in small_compositions() {
        rep.report(&cauchy_kostka_check(n, k, &a)?);
    }
    Ok(rep)
}

fn boson_basis(n: usize, k: usize) -> Vec<BosonState> {
    AffineWeight::all(n, k).into_iter().map(BosonState::basis).collect()
}

fn fermion_basis(nn: usize) -> Vec<FermionState> {
    Word01::all_levels(nn).into_iter().map(FermionState::basis).collect()
}

/// TQ relation and phi_i T(u) phi*_i = T(u) at z = 1.
pub fn tq_suite(n: usize, k: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(&format!("tq n={n} k={k}"));
    let basis = boson_basis(n, k);
    let mut bad = Vec::new();
    for r in 0..=n + k + 2 {
        for v in &basis {
            let want = if r == 0 {
                v.clone()
            } else if r == n + k {
                let s = if k % 2 == 0 { 1 } else { -1 };
                nc_h_apply(k, v).scale(&LaurentInt::monomial(s, 1))
            } else {
                BosonState::zero()
            };
            if tq_coeff_apply(r, k, v) != want {
                bad.push(format!("u^{r} on {v}"));
            }
        }
    }
    rep.exact(
        format!("T(u) Q(-u) = 1 + (-1)^k z h_k u^(n+k) (n={n} k={k})"),
        bad.is_empty(),
        bad.first().cloned().unwrap_or_default(),
    );
    let mut bad = Vec::new();
    for i in 0..n {
        for r in 0..=n {
            for v in &basis {
                let lhs = apply_phi(i, &nc_e_apply(r, &apply_phi_star(i, v))).at_one();
                if lhs != nc_e_apply(r, v).at_one() {
                    bad.push(format!("i={i} r={r} on {v}"));
                }
            }
        }
    }
    rep.exact(
        format!("phi_i T(u) phi*_i = T(u) (n={n} k={k})"),
        bad.is_empty(),
        bad.first().cloned().unwrap_or_default(),
    );
    Ok(rep)
}

fn first_failure<T>(
    items: impl IntoIterator<Item = T>,
    pred: impl Fn(&T) -> bool,
    show: impl Fn(&T) -> String,
) -> Option<String> {
    items.into_iter().find(|x| !pred(x)).map(|x| show(&x))
}

fn push_op(rep: &mut SuiteReport, name: &str, fail: Option<String>) {
    rep.exact(name, fail.is_none(), fail.unwrap_or_default());
}

/// Exact operator identities in both lattice models.
pub fn operator_suite() -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("operators");

    // local affine plactic relations on the boson model
    let mut fail = None;
    'pl: for n in 3..=5 {
        for k in 0..=3 {
            let b = boson_basis(n, k);
            for i in 0..n {
                let i1 = (i + 1) % n;
                for j in 0..n {
                    let d = (i + n - j) % n;
                    if d != 1 && d != n - 1 {
                        if let Some(f) = first_failure(
                            &b,
                            |v| apply_word(&[i, j], v) == apply_word(&[j, i], v),
                            |v| format!("distant commutation {i},{j} on {v}"),
                        ) {
                            fail = Some(f);
                            break 'pl;
                        }
                    }
                }
                let pairs = [(vec![i1, i, i], vec![i, i1, i]), (vec![i1, i1, i], vec![i1, i, i1])];
                for (l, r) in pairs {
                    if let Some(f) = first_failure(
                        &b,
                        |v| apply_word(&l, v) == apply_word(&r, v),
                        |v| format!("plactic relation {l:?} on {v}"),
                    ) {
                        fail = Some(f);
                        break 'pl;
                    }
                }
            }
        }
    }
    push_op(&mut rep, "local affine plactic relations (n=3..5, k<=3)", fail);

    // affine nil-Temperley-Lieb relations on the fermion model
    let mut fail = None;
    'tl: for nn in 3..=6 {
        let b = fermion_basis(nn);
        let nxt = |i: usize| i % nn + 1;
        for i in 1..=nn {
            let j = nxt(i);
            for w in [vec![i, i], vec![i, j, i], vec![j, i, j]] {
                if let Some(f) = first_failure(&b, |v| apply_u_word(&w, v).is_zero(), |v| format!("{w:?} on {v}")) {
                    fail = Some(f);
                    break 'tl;
                }
            }
            for l in (1..=nn).filter(|&l| l != i && l != j && nxt(l) != i) {
                if let Some(f) = first_failure(
                    &b,
                    |v| apply_u_word(&[i, l], v) == apply_u_word(&[l, i], v),
                    |v| format!("u{i}u{l} on {v}"),
                ) {
                    fail = Some(f);
                    break 'tl;
                }
            }
        }
    }
    push_op(&mut rep, "affine nil-Temperley-Lieb relations (N=3..6)", fail);

    // commuting families, boson
    let mut fail = None;
    'cb: for n in 2..=4 {
        for k in 0..=3 {
            let b = boson_basis(n, k);
            for r in 0..=n {
                for s in 0..=n {
                    let ok = |v: &&BosonState| {
                        nc_e_apply(r, &nc_e_apply(s, v)) == nc_e_apply(s, &nc_e_apply(r, v))
                            && nc_e_apply(r, &nc_h_apply(s, v)) == nc_h_apply(s, &nc_e_apply(r, v))
                    };
                    if let Some(f) = first_failure(&b, ok, |v| format!("n={n} r={r} s={s} on {v}")) {
                        fail = Some(f);
                        break 'cb;
                    }
                }
            }
        }
    }
    push_op(&mut rep, "[e_r,e_s] = [e_r,h_s] = 0 (boson)", fail);

    // commuting families, fermion
    let mut fail = None;
    'cf: for nn in 2..=6 {
        let b = fermion_basis(nn);
        for r in 0..=nn {
            for s in 0..=nn {
                let ok = |v: &&FermionState| {
                    nc_e_u_apply(r, &nc_e_u_apply(s, v)) == nc_e_u_apply(s, &nc_e_u_apply(r, v))
                        && nc_e_u_apply(r, &nc_h_u_apply(s, v)) == nc_h_u_apply(s, &nc_e_u_apply(r, v))
                };
                if let Some(f) = first_failure(&b, ok, |v| format!("N={nn} r={r} s={s} on {v}")) {
                    fail = Some(f);
                    break 'cf;
                }
            }
        }
    }
    push_op(&mut rep, "[e_r,e_s] = [e_r,h_s] = 0 (fermion)", fail);

    // e-form vs h-form Schur determinants
    let mut fail = None;
    for n in 2..=4 {
        for k in 0..=3 {
            let b = boson_basis(n, k);
            for lam in Partition::all_in_box(n, k + 1) {
                if fail.is_none() {
                    fail = first_failure(
                        &b,
                        |v| {
                            nc_schur_apply(&lam, v)
                                .map(|x| x == nc_schur_apply_h(&lam, v))
                                .unwrap_or(false)
                        },
                        |v| format!("boson {lam} on {v}"),
                    );
                }
            }
        }
    }
    for nn in 2..=6 {
        for k in 0..=nn {
            let b: Vec<_> = Word01::all(nn, k).into_iter().map(FermionState::basis).collect();
            for lam in Partition::all_in_box(k, nn - k) {
                if fail.is_none() {
                    fail = first_failure(
                        &b,
                        |v| nc_schur_u_apply_e(&lam, v) == nc_schur_u_apply_h(&lam, v),
                        |v| format!("fermion {lam} on {v}"),
                    );
                }
            }
        }
    }
    push_op(&mut rep, "e-form = h-form Schur determinants", fail);

    // Cauchy/Kostka, TQ, phi conjugation
    for a in small_compositions() {
        rep.report(&cauchy_kostka_check(3, 2, &a)?);
    }
    rep.merge(tq_suite(3, 2)?);
    for (n, k) in [(2, 1), (3, 1), (4, 2)] {
        rep.merge(tq_suite(n, k)?);
    }

    // PC duality
    let mut fail = None;
    for nn in 3..=6 {
        let b = fermion_basis(nn);
        let pc = |v: &FermionState| apply_symmetry(Symmetry::P, &apply_symmetry(Symmetry::C, v));
        for r in 0..nn {
            if fail.is_none() {
                fail = first_failure(
                    &b,
                    |v| pc(&nc_e_u_apply(r, v)) == nc_h_u_apply(r, &pc(v)),
                    |v| format!("N={nn} r={r} on {v}"),
                );
            }
        }
        for k in 0..=nn {
            let bk: Vec<_> = Word01::all(nn, k).into_iter().map(FermionState::basis).collect();
            for lam in Partition::all_in_box(k, nn - k) {
                if fail.is_none() {
                    fail = first_failure(
                        &bk,
                        |v| {
                            pc(&nc_schur_u_apply(&lam, v).expect("in box"))
                                == nc_schur_u_apply(&lam.transpose(), &pc(v)).expect("in box")
                        },
                        |v| format!("N={nn} s_{lam} on {v}"),
                    );
                }
            }
        }
    }
    push_op(&mut rep, "PC duality e_r <-> h_r, s_lam <-> s_lam^t", fail);

    rep.report(&schur_commutation_check(4, 4));
    Ok(rep)
}

/// Dispatch by suite name.
pub fn run_suite(name: &str, n: usize, k: usize, tol: f64) -> Result<SuiteReport> {
    match name {
        "bethe" => bethe_suite(n, k, tol),
        "smatrix" => smatrix_suite(n, k),
        "symmetry" => symmetry_suite(n, k),
        "recursion" => recursion_suite(n, k),
        "cauchy" => cauchy_suite(n, k),
        "tq" => tq_suite(n, k),
        "operators" => operator_suite(),
        _ => Err(Error::Param(format!("unknown suite {name:?}"))),
    }
}

pub const SUITES: [&str; 7] = ["bethe", "smatrix", "symmetry", "recursion", "cauchy", "tq", "operators"];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        for name in ["bethe", "smatrix", "symmetry", "recursion", "cauchy", "tq"] {
            let r = run_suite(name, 3, 2, 1e-9).unwrap();
            let bad: Vec<_> = r.checks.iter().filter(|c| !c.ok).collect();
            assert!(bad.is_empty(), "{name}: {bad:?}");
        }
        assert!(run_suite("nope", 3, 2, 1e-9).is_err());
    }

    #[test]
    fn operator_suite_passes() {
        let r = operator_suite().unwrap();
        let bad: Vec<_> = r.checks.iter().filter(|c| !c.ok).collect();
        assert!(bad.is_empty(), "{bad:?}");
    }
}
