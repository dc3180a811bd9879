use std::collections::BTreeMap;

use clap::ValueEnum;
use qfusion::boson::{fusion_degree, fusion_product};
use qfusion::fermion::{gw_degree, quantum_product};
use qfusion::identities::hierarchy_products;
use qfusion::spectral::{bvi_coeff_tol, round_checked, smatrix};
use qfusion::symfunc::littlewood_richardson;
use qfusion::{AffineWeight, Error, Partition, Result, Word01};
use rayon::prelude::*;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Lattice,
    Spectral,
    Recursion,
    All,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Lattice => "lattice",
            Method::Spectral => "spectral",
            Method::Recursion => "recursion",
            Method::All => "all",
        }
    }
}

pub type Entries = BTreeMap<(Partition, Partition, Partition), (i64, u64)>;

/// Largest n + k accepted by the spectral methods.
pub const SPECTRAL_MAX: usize = 12;

fn check_spectral(n: usize, k: usize) -> Result<()> {
    if n + k > SPECTRAL_MAX {
        return Err(Error::Param(format!(
            "spectral method needs n + k <= {SPECTRAL_MAX}, got {}",
            n + k
        )));
    }
    Ok(())
}

fn to_u64(c: &num_bigint::BigInt) -> Result<u64> {
    use num_traits::ToPrimitive;
    c.to_u64()
        .ok_or_else(|| Error::Precondition(format!("coefficient {c} is not a small nonnegative integer")))
}

/// Fusion coefficients for the given pairs of P-partitions at level k.
pub fn fusion_entries(
    method: Method,
    n: usize,
    k: usize,
    pairs: &[(Partition, Partition)],
    tol: f64,
) -> Result<Entries> {
    let w = |p: &Partition| AffineWeight::from_partition(p, n, k);
    let rows: Vec<Vec<_>> = match method {
        Method::Lattice => pairs
            .par_iter()
            .map(|(a, b)| {
                let prod = fusion_product(&w(a)?, &w(b)?)?;
                let mut out = Vec::new();
                for (nu, c) in prod.iter() {
                    for (d, x) in c.terms() {
                        out.push(((a.clone(), b.clone(), nu.to_partition()), (d, to_u64(x)?)));
                    }
                }
                Ok(out)
            })
            .collect::<Result<_>>()?,
        Method::Spectral => {
            check_spectral(n, k)?;
            let s = smatrix(n, k)?;
            pairs
                .par_iter()
                .map(|(a, b)| {
                    let (wa, wb) = (w(a)?, w(b)?);
                    let (i, j) = (s.index_of(&wa)?, s.index_of(&wb)?);
                    let mut out = Vec::new();
                    for (l, nu) in s.basis.iter().enumerate() {
                        let c = round_checked(s.verlinde_raw(i, j, l), tol)?;
                        if c > 0 {
                            let d = fusion_degree(&wa, &wb, nu)
                                .ok_or_else(|| Error::Precondition(format!("no z-degree for {nu}")))?;
                            out.push(((a.clone(), b.clone(), nu.to_partition()), (d, c)));
                        }
                    }
                    Ok(out)
                })
                .collect::<Result<_>>()?
        }
        Method::Recursion | Method::All => {
            return Err(Error::Param(
                "fusion supports the lattice and spectral methods (and all)".into(),
            ))
        }
    };
    Ok(rows.into_iter().flatten().collect())
}

/// Gromov-Witten invariants of Gr(k, N) for the given pairs.
pub fn gw_entries(method: Method, k: usize, nn: usize, pairs: &[(Partition, Partition)], tol: f64) -> Result<Entries> {
    let n = nn - k;
    let basis = Partition::all_in_box(k, n);
    let rows: Vec<Vec<_>> = match method {
        Method::Lattice => pairs
            .par_iter()
            .map(|(a, b)| {
                let prod = quantum_product(a, b, k, nn)?;
                let mut out = Vec::new();
                for (nu, c) in prod.iter() {
                    for (d, x) in c.terms() {
                        out.push(((a.clone(), b.clone(), nu.to_partition()), (d, to_u64(x)?)));
                    }
                }
                Ok(out)
            })
            .collect::<Result<_>>()?,
        Method::Spectral => {
            check_spectral(n, k)?;
            pairs
                .par_iter()
                .map(|(a, b)| {
                    let mut out = Vec::new();
                    for nu in &basis {
                        if let (Some(d), c) = bvi_coeff_tol(a, b, nu, k, nn, tol)? {
                            if c > 0 {
                                out.push(((a.clone(), b.clone(), nu.clone()), (d as i64, c)));
                            }
                        }
                    }
                    Ok(out)
                })
                .collect::<Result<_>>()?
        }
        Method::Recursion => {
            let level = hierarchy_products(nn).swap_remove(k);
            let mut out = Vec::new();
            for (a, b) in pairs {
                let wb = Word01::from_partition(b, k, nn)?;
                a.check_box(k, n)?;
                let prod = &level[&(a.clone(), wb)];
                let mut v = Vec::new();
                for (nu, c) in prod.iter() {
                    for (d, x) in c.terms() {
                        v.push(((a.clone(), b.clone(), nu.to_partition()), (d, to_u64(x)?)));
                    }
                }
                out.push(v);
            }
            out
        }
        Method::All => return Err(Error::Param("internal: resolve 'all' before calling".into())),
    };
    Ok(rows.into_iter().flatten().collect())
}

/// Degree-0 invariants must equal Littlewood-Richardson coefficients.
pub fn lr_disagreements(entries: &Entries, k: usize, nn: usize, pairs: &[(Partition, Partition)]) -> Vec<String> {
    let basis = Partition::all_in_box(k, nn - k);
    let mut bad = Vec::new();
    for (a, b) in pairs {
        for nu in &basis {
            if gw_degree(a, b, nu, nn) != Some(0) {
                continue;
            }
            let lat = entries.get(&(a.clone(), b.clone(), nu.clone())).map_or(0, |x| x.1);
            let lr = littlewood_richardson(a, b, nu);
            if lat != lr {
                bad.push(format!("{a} * {b} -> {nu}: {lat} vs LR {lr}"));
            }
        }
    }
    bad
}

/// Keys present in one map but not the other, or with different values.
pub fn diff(a: &Entries, b: &Entries) -> Vec<String> {
    let mut out = Vec::new();
    for (key, va) in a {
        if b.get(key) != Some(va) {
            out.push(format!("{}|{}|{}: {:?} vs {:?}", key.0, key.1, key.2, va, b.get(key)));
        }
    }
    for (key, vb) in b {
        if !a.contains_key(key) {
            out.push(format!("{}|{}|{}: None vs {:?}", key.0, key.1, key.2, vb));
        }
    }
    out
}
