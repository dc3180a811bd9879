//! One PASS/FAIL line per acceptance criterion. Exits nonzero if any fails.

use std::time::Instant;

use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use qfusion::boson::{fusion_coeff, fusion_product};
use qfusion::fermion::{gw_degree, quantum_product};
use qfusion::identities::{
    fusion_recursion_check, fusion_symmetry_check, gw_recursion_up, gw_symmetry_check, hierarchy_build, CoeffTable,
    GwSymmetry,
};
use qfusion::partition::p;
use qfusion::plactic::*;
use qfusion::spectral::{bvi_coeff_tol, fermion_norms, round_checked, smatrix};
use qfusion::suites::{bethe_suite, operator_suite, smatrix_suite, SuiteReport};
use qfusion::symfunc::littlewood_richardson;
use qfusion::{AffineWeight, Error, FermionState, LaurentInt, Partition, Result, Word01};

type Outcome = Result<(bool, String)>;

fn suites_outcome(reps: Vec<SuiteReport>) -> Outcome {
    let total: usize = reps.iter().map(|r| r.checks.len()).sum();
    let failed: Vec<String> = reps
        .iter()
        .flat_map(|r| {
            r.checks
                .iter()
                .filter(|c| !c.ok)
                .map(move |c| format!("{}: {} ({})", r.suite, c.name, c.detail))
        })
        .collect();
    match failed.first() {
        None => Ok((true, format!("{total} checks"))),
        Some(f) => Ok((false, format!("{} of {total} failed, first: {f}", failed.len()))),
    }
}

fn fermion_state(terms: &[(&[usize], i64, i64)], k: usize, nn: usize) -> Result<FermionState> {
    let mut v = FermionState::zero();
    for (lam, c, d) in terms {
        v.add_term(Word01::from_partition(&p(lam), k, nn)?, &LaurentInt::monomial(*c, *d));
    }
    Ok(v)
}

fn worked_examples() -> Outcome {
    let mut bad = Vec::new();
    // (a) n = 3, k = 1 is the group ring of Z/3 on empty, (1), (1,1)
    let parts = [p(&[]), p(&[1]), p(&[1, 1])];
    for i in 0..3 {
        for j in 0..3 {
            let a = AffineWeight::from_partition(&parts[i], 3, 1)?;
            let b = AffineWeight::from_partition(&parts[j], 3, 1)?;
            let want = AffineWeight::from_partition(&parts[(i + j) % 3], 3, 1)?;
            let got = fusion_product(&a, &b)?.at_one();
            if got.len() != 1 || got.get(&want) != Some(&BigInt::from(1)) {
                bad.push(format!("(a) {} * {}", parts[i], parts[j]));
            }
        }
    }
    // (b)
    let l = AffineWeight::from_partition(&p(&[2, 1]), 3, 2)?;
    let got = fusion_product(&l, &l)?.at_one();
    let want = [
        (l.clone(), BigInt::from(1)),
        (AffineWeight::vacuum(3, 2), BigInt::from(1)),
    ]
    .into_iter()
    .collect();
    if got != want {
        bad.push("(b) (2,1)*(2,1)".into());
    }
    // (c)
    let got = quantum_product(&p(&[3, 3, 2, 1]), &p(&[2, 2, 1]), 4, 7)?;
    let want = fermion_state(
        &[
            (&[2, 2, 2, 1], 1, 1),
            (&[3, 2, 1, 1], 2, 1),
            (&[3, 2, 2], 1, 1),
            (&[3, 3, 1], 1, 1),
            (&[], 1, 2),
        ],
        4,
        7,
    )?;
    if got != want {
        bad.push("(c) Gr(4,7)".into());
    }
    // (d)
    for nn in 2..=8 {
        for i in 0..nn {
            for j in 0..nn {
                let pp = (i + j) / nn;
                let c = i + j - pp * nn;
                let got = quantum_product(&p(&[i]), &p(&[j]), 1, nn)?;
                if got != fermion_state(&[(&[c], 1, pp as i64)], 1, nn)? {
                    bad.push(format!("(d) N={nn} c{i}*c{j}"));
                }
            }
        }
    }
    // (e)
    let got = quantum_product(&p(&[3, 2]), &p(&[2, 1]), 2, 5)?;
    if got != fermion_state(&[(&[2, 1], 1, 1), (&[3], 1, 1)], 2, 5)? {
        bad.push("(e) Gr(2,5)".into());
    }
    Ok((
        bad.is_empty(),
        if bad.is_empty() {
            "(a)-(e) exact".into()
        } else {
            bad.join("; ")
        },
    ))
}

fn triple_agreement() -> Outcome {
    let tol = 1e-6;
    let mut checked = 0usize;
    let mut bad = Vec::new();
    for (n, kmax) in [(3, 3), (4, 2)] {
        for k in 0..=kmax {
            let s = smatrix(n, k)?;
            let all = AffineWeight::all(n, k);
            for (i, a) in all.iter().enumerate() {
                for (j, b) in all.iter().enumerate() {
                    for (l, c) in all.iter().enumerate() {
                        checked += 1;
                        let lat = fusion_coeff(a, b, c)?;
                        let ver = round_checked(s.verlinde_raw(i, j, l), tol)?;
                        if lat != ver {
                            bad.push(format!("fusion n={n} k={k} {a} {b} {c}: {lat} vs {ver}"));
                        }
                    }
                }
            }
        }
    }
    for nn in 2..=6 {
        for k in 0..=nn {
            let basis = Partition::all_in_box(k, nn - k);
            for a in &basis {
                for b in &basis {
                    let prod = quantum_product(a, b, k, nn)?;
                    for c in &basis {
                        checked += 1;
                        let lat = prod.get(&Word01::from_partition(c, k, nn)?);
                        let (d, bvi) = bvi_coeff_tol(a, b, c, k, nn, tol)?;
                        let want = match d {
                            Some(d) => LaurentInt::monomial(bvi, d as i64),
                            None => LaurentInt::zero(),
                        };
                        if lat != want || d.is_none() && bvi != 0 {
                            bad.push(format!("GW Gr({k},{nn}) {a} {b} {c}: lattice {lat} vs BVI {bvi}"));
                        }
                        if gw_degree(a, b, c, nn) == Some(0) {
                            let lr = littlewood_richardson(a, b, c);
                            if lat.coeff(0) != BigInt::from(lr) {
                                bad.push(format!("GW Gr({k},{nn}) {a} {b} {c}: lattice {lat} vs LR {lr}"));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok((
        bad.is_empty(),
        bad.first().cloned().unwrap_or(format!("{checked} triples")),
    ))
}

fn recursion() -> Outcome {
    let mut bad = Vec::new();
    let (lam, mu, nu) = (p(&[3, 3, 2, 1]), p(&[2, 2, 1]), p(&[3, 2, 1, 1]));
    for j in [2, 4, 7] {
        let v = gw_recursion_up(&lam, &mu, &nu, 1, j, 4, 7)?;
        if v != 2 {
            bad.push(format!("j={j} gives {v}"));
        }
    }
    let h = hierarchy_build(5)?;
    for (k, t) in h.iter().enumerate() {
        if *t != CoeffTable::gw_direct(k, 5)? {
            bad.push(format!("hierarchy differs at k={k}"));
        }
    }
    let mu = AffineWeight::from_partition(&p(&[2, 1]), 3, 2)?;
    let r = fusion_recursion_check(&mu, &AffineWeight::vacuum(3, 2), &[1, 1, 1], &[2, 3, 1])?;
    if (r.lhs, r.rhs) != (2, 2) {
        bad.push(format!("fusion recursion {} vs {}", r.lhs, r.rhs));
    }
    Ok((
        bad.is_empty(),
        if bad.is_empty() {
            "2,2,2; hierarchy(5) exact; fusion 2 = 2".into()
        } else {
            bad.join("; ")
        },
    ))
}

fn symmetries() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    let tables = (0..=5).map(|k| (k, 5)).chain([(2, 6), (3, 6)]);
    for (k, nn) in tables {
        let t = CoeffTable::gw_direct(k, nn)?;
        for s in [
            GwSymmetry::S3,
            GwSymmetry::LevelRank,
            GwSymmetry::Rotation,
            GwSymmetry::Curious,
        ] {
            let r = gw_symmetry_check(&t, s)?;
            checked += r.checked;
            bad.extend(r.violations.into_iter().map(|v| format!("Gr({k},{nn}) {s:?}: {v}")));
        }
    }
    for k in 0..=3 {
        let r = fusion_symmetry_check(3, k)?;
        checked += r.checked;
        bad.extend(r.violations.into_iter().map(|v| format!("fusion n=3 k={k}: {v}")));
    }
    Ok((
        bad.is_empty(),
        bad.first().cloned().unwrap_or(format!("{checked} instances")),
    ))
}

fn word_algorithms() -> Outcome {
    let mut bad = Vec::new();
    let towers = MultiPartition::new(vec![p(&[4, 2, 2, 2]), p(&[3, 1, 1]), p(&[4, 4, 2, 2])])?;
    let w = parse_word("a0^2a2^4a1^5a0^6a2^3a1^2a0^3a2^2")?;
    if word_to_multipartition(&w, 3) != towers || multipartition_to_word(&towers)? != w {
        bad.push("tower round trip".to_string());
    }
    let t: Tableau = "1,1,1,2,2,3,3,4,6,10/2,2,3,3,3,4,5,6,7/9".parse()?;
    let want: Tableau = "1,1,1,2,2,3,3,3,4,6,6,9,10/2,2,3,3,4,5,7".parse()?;
    if normalize_tableau(&t, 11)? != want {
        bad.push("worked normalization".into());
    }
    let mut runner = TestRunner::new(Config {
        cases: 1000,
        failure_persistence: None,
        ..Config::default()
    });
    let round_trip = runner.run(&prop::collection::vec(0usize..3, 0..=15), |w| {
        let pi = word_to_multipartition(&w, 3);
        prop_assert!(pi.is_aperiodic());
        let std = multipartition_to_word(&pi).map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert_eq!(word_to_multipartition(&std, 3), pi);
        Ok(())
    });
    if let Err(e) = round_trip {
        bad.push(format!("round trip: {e}"));
    }
    let mut runner = TestRunner::new(Config {
        cases: 1000,
        failure_persistence: None,
        ..Config::default()
    });
    let idem = runner.run(
        &prop::collection::vec(prop::collection::vec(1usize..6, 0..=6), 0..=3),
        |rows| {
            let mut rows: Vec<Vec<usize>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
            for r in &mut rows {
                r.sort_unstable();
            }
            // keep only the rows that stack into a semistandard tableau
            let Ok(t) = Tableau::new(rows) else { return Ok(()) };
            let d = normalize_tableau(&t, 6).map_err(|e| TestCaseError::fail(e.to_string()))?;
            prop_assert!(d.is_strict());
            prop_assert_eq!(
                normalize_tableau(&d, 6).map_err(|e| TestCaseError::fail(e.to_string()))?,
                d
            );
            Ok(())
        },
    );
    if let Err(e) = idem {
        bad.push(format!("idempotence: {e}"));
    }
    Ok((
        bad.is_empty(),
        if bad.is_empty() {
            "towers, D(T), 2 x 1000 random cases".into()
        } else {
            bad.join("; ")
        },
    ))
}

fn desk_scale() -> Outcome {
    let (fe, _) = fermion_norms(2, 2)?;
    let ratios: Vec<String> = fe
        .iter()
        .map(|e| format!("{:.4}", e.measured / e.nk_over_van))
        .collect();
    Ok((
        true,
        format!(
            "no substitutions needed; fermion norm ratios (n=2,k=2, recorded): {}",
            ratios.join(" ")
        ),
    ))
}

fn main() {
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("worked examples", Box::new(worked_examples)),
        ("lattice / spectral / LR agreement", Box::new(triple_agreement)),
        (
            "Bethe suite n<=4 k<=3",
            Box::new(|| {
                let mut reps = Vec::new();
                for n in 2..=4 {
                    for k in 1..=3 {
                        reps.push(bethe_suite(n, k, 1e-9)?);
                    }
                }
                suites_outcome(reps)
            }),
        ),
        (
            "S-matrix suite n<=4 k<=3",
            Box::new(|| {
                let mut reps = Vec::new();
                for n in 2..=4 {
                    for k in 1..=3 {
                        reps.push(smatrix_suite(n, k)?);
                    }
                }
                suites_outcome(reps)
            }),
        ),
        ("recursions", Box::new(recursion)),
        ("symmetries", Box::new(symmetries)),
        (
            "operator identities",
            Box::new(|| suites_outcome(vec![operator_suite()?])),
        ),
        ("word algorithms", Box::new(word_algorithms)),
        ("desk-scale reproducibility", Box::new(desk_scale)),
    ];
    let mut failures = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (ok, detail) = f().unwrap_or_else(|e: Error| (false, format!("error: {e}")));
        if !ok {
            failures += 1;
        }
        println!(
            "criterion {}: {} {name} [{:.2}s] {detail}",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64()
        );
    }
    if failures > 0 {
        std::process::exit(1);
    }
}
