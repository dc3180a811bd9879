//! Checkable identities between structure constants: Gromov-Witten
//! symmetries and recursions, the hierarchy algorithm, fusion recursions,
//! Kostka/Cauchy identities and fusion symmetries.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::boson::{fusion_coeff, fusion_product, nc_e_apply, nc_h_apply, nc_schur_apply};
use crate::error::{Error, Result};
use crate::fermion::{apply_psi_ext, apply_psi_star_ext, nc_schur_u_apply_any, quantum_product, twist};
use crate::laurent::LaurentInt;
use crate::partition::Partition;
use crate::state::{BosonState, FermionState};
use crate::symfunc::kostka;
use crate::weight::AffineWeight;
use crate::word::Word01;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableKind {
    Fusion,
    Gw,
}

/// Structure constants (lambda, mu, nu) -> (d, C). Fusion tables use
/// P-partitions of level-k weights and d is the z-power; GW tables use
/// partitions in the k x n box and d is the q-degree. Zero entries are omitted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffTable {
    pub kind: TableKind,
    pub n: usize,
    pub k: usize,
    pub entries: BTreeMap<(Partition, Partition, Partition), (i64, u64)>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CoeffRecord {
    pub lambda: String,
    pub mu: String,
    pub nu: String,
    pub d: i64,
    pub c: u64,
}

#[derive(Serialize, Deserialize)]
struct TableFile {
    kind: TableKind,
    n: usize,
    k: usize,
    entries: Vec<CoeffRecord>,
}

fn to_u64(x: &BigInt) -> Result<u64> {
    x.to_u64()
        .ok_or_else(|| Error::Precondition(format!("coefficient {x} is negative or too large")))
}

impl CoeffTable {
    pub fn empty(kind: TableKind, n: usize, k: usize) -> Self {
        CoeffTable {
            kind,
            n,
            k,
            entries: BTreeMap::new(),
        }
    }

    /// N = n + k for GW tables.
    pub fn sites(&self) -> usize {
        self.n + self.k
    }

    pub fn get(&self, lam: &Partition, mu: &Partition, nu: &Partition) -> Option<(i64, u64)> {
        self.entries.get(&(lam.clone(), mu.clone(), nu.clone())).copied()
    }

    /// Coefficient as a monomial q^d C (zero if absent).
    pub fn monomial(&self, lam: &Partition, mu: &Partition, nu: &Partition) -> LaurentInt {
        match self.get(lam, mu, nu) {
            Some((d, c)) => LaurentInt::monomial(c, d),
            None => LaurentInt::zero(),
        }
    }

    /// Basis partitions of the table, sorted.
    pub fn basis(&self) -> Vec<Partition> {
        match self.kind {
            TableKind::Gw => Partition::all_in_box(self.k, self.n),
            TableKind::Fusion => Partition::all_in_box(self.n - 1, self.k),
        }
    }

    fn insert_product(&mut self, lam: &Partition, mu: &Partition, prod: &FermionState) -> Result<()> {
        for (w, c) in prod.iter() {
            for (d, x) in c.terms() {
                if !x.is_zero() {
                    self.entries
                        .insert((lam.clone(), mu.clone(), w.to_partition()), (d, to_u64(x)?));
                }
            }
        }
        Ok(())
    }

    /// Gr(k, N) table from the direct lattice product.
    pub fn gw_direct(k: usize, nn: usize) -> Result<Self> {
        if k > nn {
            return Err(Error::Param(format!("k = {k} > N = {nn}")));
        }
        let parts = Partition::all_in_box(k, nn - k);
        let pairs: Vec<_> = parts.iter().flat_map(|a| parts.iter().map(move |b| (a, b))).collect();
        let prods: Vec<_> = pairs
            .par_iter()
            .map(|(a, b)| quantum_product(a, b, k, nn).map(|p| ((*a).clone(), (*b).clone(), p)))
            .collect::<Result<_>>()?;
        let mut t = CoeffTable::empty(TableKind::Gw, nn - k, k);
        for (a, b, p) in &prods {
            t.insert_product(a, b, p)?;
        }
        Ok(t)
    }

    /// Level-k sl(n) fusion table from the direct lattice product.
    pub fn fusion_direct(n: usize, k: usize) -> Result<Self> {
        let mut t = CoeffTable::empty(TableKind::Fusion, n, k);
        for (a, b, p) in crate::boson::fusion_table(n, k) {
            for (w, c) in p.iter() {
                for (d, x) in c.terms() {
                    if !x.is_zero() {
                        t.entries
                            .insert((a.to_partition(), b.to_partition(), w.to_partition()), (d, to_u64(x)?));
                    }
                }
            }
        }
        Ok(t)
    }

    pub fn records(&self) -> Vec<CoeffRecord> {
        self.entries
            .iter()
            .map(|((l, m, v), (d, c))| CoeffRecord {
                lambda: l.to_string(),
                mu: m.to_string(),
                nu: v.to_string(),
                d: *d,
                c: *c,
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        let f = TableFile {
            kind: self.kind,
            n: self.n,
            k: self.k,
            entries: self.records(),
        };
        serde_json::to_string_pretty(&f).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let f: TableFile = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let mut t = CoeffTable::empty(f.kind, f.n, f.k);
        for r in f.entries {
            let key = (r.lambda.parse()?, r.mu.parse()?, r.nu.parse()?);
            t.entries.insert(key, (r.d, r.c));
        }
        Ok(t)
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("lambda,mu,nu,d,c\n");
        for r in self.records() {
            let _ = writeln!(s, "\"{}\",\"{}\",\"{}\",{},{}", r.lambda, r.mu, r.nu, r.d, r.c);
        }
        s
    }
}

/// Outcome of an exhaustive identity check.
#[derive(Clone, Debug, Default, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub checked: usize,
    pub violations: Vec<String>,
}

impl CheckReport {
    fn new(name: &str) -> Self {
        CheckReport {
            name: name.to_string(),
            ..Default::default()
        }
    }

    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    fn check(&mut self, cond: bool, msg: impl FnOnce() -> String) {
        self.checked += 1;
        if !cond && self.violations.len() < 50 {
            self.violations.push(msg());
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GwSymmetry {
    S3,
    LevelRank,
    Rotation,
    Curious,
}

/// C_{lam,mu,nu}(q) = q^d C_{lam,mu}^{nu^vee,d}.
pub fn c3(t: &CoeffTable, lam: &Partition, mu: &Partition, nu: &Partition) -> LaurentInt {
    match nu.complement(t.k, t.n) {
        Ok(nv) => t.monomial(lam, mu, &nv),
        Err(_) => LaurentInt::zero(),
    }
}

fn word_of(lam: &Partition, k: usize, nn: usize) -> Word01 {
    Word01::from_partition(lam, k, nn).expect("in box")
}

/// R^a on partitions through 01-words; a may be negative.
pub fn rot_pow(lam: &Partition, a: i64, k: usize, nn: usize) -> Partition {
    let mut w = word_of(lam, k, nn);
    for _ in 0..a.rem_euclid(nn as i64) {
        w = w.rot();
    }
    w.to_partition()
}

/// n_a(lam) with n_{a+N} = n_a + k.
pub fn n_ext(lam: &Partition, a: i64, k: usize, nn: usize) -> i64 {
    word_of(lam, k, nn).n_count(a)
}

/// Verify one of the four GW symmetries on every applicable triple of a GW table.
pub fn gw_symmetry_check(t: &CoeffTable, which: GwSymmetry) -> Result<CheckReport> {
    if t.kind != TableKind::Gw {
        return Err(Error::Param("gw_symmetry_check needs a GW table".into()));
    }
    let (k, nn) = (t.k, t.sites());
    let parts = t.basis();
    let mut rep = CheckReport::new(&format!("{which:?} k={k} N={nn}"));
    match which {
        GwSymmetry::S3 => {
            for a in &parts {
                for b in &parts {
                    for c in &parts {
                        let base = c3(t, a, b, c);
                        for (x, y, z) in [(a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
                            rep.check(c3(t, x, y, z) == base, || format!("{a}|{b}|{c} vs {x}|{y}|{z}"));
                        }
                    }
                }
            }
        }
        GwSymmetry::LevelRank => {
            let dual = CoeffTable::gw_direct(nn - k, nn)?;
            for a in &parts {
                for b in &parts {
                    for c in &parts {
                        let l = c3(t, a, b, c);
                        let r = c3(&dual, &a.transpose(), &b.transpose(), &c.transpose());
                        rep.check(l == r, || format!("{a}|{b}|{c}: {l} vs {r}"));
                    }
                }
            }
        }
        GwSymmetry::Rotation => {
            let ni = nn as i64;
            for a in &parts {
                for b in &parts {
                    for c in &parts {
                        for s in 0..ni {
                            let l = c3(t, &rot_pow(a, s, k, nn), b, c);
                            let m = c3(t, a, &rot_pow(b, s, k, nn), c).shift(n_ext(a, s, k, nn) - n_ext(b, s, k, nn));
                            let r = c3(t, a, b, &rot_pow(c, s, k, nn)).shift(n_ext(a, s, k, nn) - n_ext(c, s, k, nn));
                            rep.check(l == m && l == r, || format!("a={s} {a}|{b}|{c}: {l}, {m}, {r}"));
                        }
                        for s in 0..ni {
                            for u in 0..ni {
                                let v = -s - u;
                                let l = c3(t, &rot_pow(a, s, k, nn), &rot_pow(b, u, k, nn), &rot_pow(c, v, k, nn));
                                let e = n_ext(a, s, k, nn) + n_ext(b, u, k, nn) + n_ext(c, v, k, nn);
                                let want = c3(t, a, b, c).shift(e);
                                rep.check(l == want, || format!("({s},{u},{v}) {a}|{b}|{c}: {l} vs {want}"));
                            }
                        }
                    }
                }
            }
        }
        GwSymmetry::Curious => {
            let ni = nn as i64;
            let tot = (nn - k) as i64;
            for a in &parts {
                for b in &parts {
                    for c in &parts {
                        let dual = c3(
                            t,
                            &a.complement(k, nn - k)?,
                            &b.complement(k, nn - k)?,
                            &c.complement(k, nn - k)?,
                        )
                        .conj();
                        for s in 0..ni {
                            for u in 0..ni {
                                let v = tot - s - u;
                                let l = c3(t, &rot_pow(a, s, k, nn), &rot_pow(b, u, k, nn), &rot_pow(c, v, k, nn));
                                let e = n_ext(a, s, k, nn) + n_ext(b, u, k, nn) + n_ext(c, v, k, nn);
                                let r = dual.shift(e);
                                rep.check(l == r, || format!("({s},{u},{v}) {a}|{b}|{c}: {l} vs {r}"));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(rep)
}

/// Coefficient of q^d nu in s_rho(U) mu for any partition rho (signed).
pub fn gw_coeff_general(rho: &Partition, mu: &Word01, nu: &Word01, d: i64) -> i64 {
    let c = nc_schur_u_apply_any(rho, &FermionState::basis(*mu)).get(nu).coeff(d);
    c.to_i64().expect("small coefficient")
}

fn sgn(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Up-recursion: C_{lam mu}^{nu,d}(k, N) from level k+1 when w(mu)_j = 0.
pub fn gw_recursion_up(
    lam: &Partition,
    mu: &Partition,
    nu: &Partition,
    d: i64,
    j: usize,
    k: usize,
    nn: usize,
) -> Result<i64> {
    check_rec_args(lam, mu, nu, j, k, nn)?;
    let (wm, wn) = (word_of(mu, k, nn), word_of(nu, k, nn));
    if wm.get(j) {
        return Err(Error::Precondition(format!("psi_{j} mu != 0")));
    }
    let mu1 = wm.with(j, true);
    let mut total = 0;
    for r in 0..=lam.len() {
        let t = j as i64 - r as i64;
        let (site, dr) = if t <= 0 {
            ((t + nn as i64) as usize, d - 1)
        } else {
            (t as usize, d)
        };
        if wn.get(site) {
            continue;
        }
        let nu1 = wn.with(site, true);
        let s = sgn(d + r as i64 + wm.n_count(j as i64 - 1) + wn.n_count(t - 1));
        for rho in lam.remove_vertical_strip(r) {
            total += s * gw_coeff_general(&rho, &mu1, &nu1, dr);
        }
    }
    Ok(total)
}

/// Down-recursion: C_{lam mu}^{nu,d}(k, N) from level k-1 when w(mu)_j = 1.
pub fn gw_recursion_down(
    lam: &Partition,
    mu: &Partition,
    nu: &Partition,
    d: i64,
    j: usize,
    k: usize,
    nn: usize,
) -> Result<i64> {
    check_rec_args(lam, mu, nu, j, k, nn)?;
    let (wm, wn) = (word_of(mu, k, nn), word_of(nu, k, nn));
    if !wm.get(j) {
        return Err(Error::Precondition(format!("psi*_{j} mu != 0")));
    }
    let mu1 = wm.with(j, false);
    let mut total = 0;
    for r in 0..=lam.first() {
        let t = j + r;
        let (site, dr) = if t > nn { (t - nn, d - 1) } else { (t, d) };
        if !wn.get(site) {
            continue;
        }
        let nu1 = wn.with(site, false);
        let s = sgn(d + wm.n_count(j as i64 - 1) + wn.n_count(t as i64 - 1));
        for rho in lam.remove_horizontal_strip(r) {
            total += s * gw_coeff_general(&rho, &mu1, &nu1, dr);
        }
    }
    Ok(total)
}

fn check_rec_args(lam: &Partition, mu: &Partition, nu: &Partition, j: usize, k: usize, nn: usize) -> Result<()> {
    if !(1..=nn).contains(&j) || k > nn {
        return Err(Error::Param(format!(
            "need 1 <= j <= N and k <= N (j={j}, k={k}, N={nn})"
        )));
    }
    for x in [lam, mu, nu] {
        x.check_box(k, nn - k)?;
    }
    Ok(())
}

/// Products lam * w of one level, keyed by (lam, w).
pub type ProductTable = BTreeMap<(Partition, Word01), FermionState>;

/// Next level of the hierarchy: lam * psi*_i(mu) = sum_r sum_{lam/nu=(r)} psi*_{i+r}(nu *' mu),
/// with i the first occupied site of the target word.
pub fn hierarchy_step(prev: &ProductTable, k: usize, nn: usize) -> ProductTable {
    let parts = Partition::all_in_box(k + 1, nn - k - 1);
    let words = Word01::all(nn, k + 1);
    let jobs: Vec<_> = parts.iter().flat_map(|l| words.iter().map(move |w| (l, w))).collect();
    jobs.par_iter()
        .map(|(lam, w)| {
            let i = w.positions()[0];
            let mu = w.with(i, false);
            let mut out = FermionState::zero();
            for r in 0..=lam.first() {
                for nu in lam.remove_horizontal_strip(r) {
                    if let Some(p) = prev.get(&(nu, mu)) {
                        out.add_assign(&apply_psi_star_ext((i + r) as i64, &twist(p)));
                    }
                }
            }
            (((*lam).clone(), **w), out)
        })
        .collect()
}

/// Build Gr(k, N) product tables for k = 0..N from the point, using only
/// the commutation formula.
pub fn hierarchy_products(nn: usize) -> Vec<ProductTable> {
    let mut levels = Vec::with_capacity(nn + 1);
    let mut base = ProductTable::new();
    let vac = Word01::new(nn, 0);
    base.insert((Partition::empty(), vac), FermionState::basis(vac));
    levels.push(base);
    for k in 0..nn {
        let next = hierarchy_step(&levels[k], k, nn);
        levels.push(next);
    }
    levels
}

/// Coefficient tables for k = 0..N from the hierarchy algorithm.
pub fn hierarchy_build(nn: usize) -> Result<Vec<CoeffTable>> {
    hierarchy_products(nn)
        .into_iter()
        .enumerate()
        .map(|(k, prods)| {
            let mut t = CoeffTable::empty(TableKind::Gw, nn - k, k);
            for ((lam, w), p) in &prods {
                t.insert_product(lam, &w.to_partition(), p)?;
            }
            Ok(t)
        })
        .collect()
}

/// Report for the level k <-> k+1 fusion recursion.
#[derive(Clone, Debug, Serialize)]
pub struct FusionRecursionReport {
    pub lhs: u64,
    pub rhs: u64,
    /// Sequences (nu = mu^(0), ..., mu^(l) = mu) with nonzero product.
    pub chains: Vec<Vec<Partition>>,
}

impl FusionRecursionReport {
    pub fn ok(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn phi_star_weight(w: &AffineWeight, j: usize) -> AffineWeight {
    let mut l = w.labels().to_vec();
    let n = l.len();
    l[j % n] += 1;
    AffineWeight::new(l).expect("n >= 2")
}

fn column_weight(r: usize, n: usize, k: usize) -> Result<AffineWeight> {
    AffineWeight::from_boxed(&Partition::new(vec![1; r])?, n, k)
}

fn row_weight(r: usize, n: usize, k: usize) -> Result<AffineWeight> {
    let p = if r == 0 {
        Partition::empty()
    } else {
        Partition::new(vec![r])?
    };
    AffineWeight::from_partition(&p, n, k)
}

/// sum_{lam in n x k box, |lam| = |alpha|} K_{lam^t alpha} N_{lam mu}^{nu} (n-columns deleted).
fn kostka_rhs_e(alpha: &[usize], mu: &AffineWeight, nu: &AffineWeight) -> Result<u64> {
    let (n, k) = (mu.n(), mu.level());
    let size: usize = alpha.iter().sum();
    let mut s = 0;
    for lam in Partition::all_in_box(n, k).into_iter().filter(|l| l.size() == size) {
        let kk = kostka(&lam.transpose(), alpha)?;
        if kk > 0 {
            s += kk * fusion_coeff(&AffineWeight::from_boxed(&lam, n, k)?, mu, nu)?;
        }
    }
    Ok(s)
}

/// sum_{lam in (n-1) x k box, |lam| = |alpha|} K_{lam alpha} N_{lam mu}^{nu}.
fn kostka_rhs_h(alpha: &[usize], mu: &AffineWeight, nu: &AffineWeight) -> Result<u64> {
    let (n, k) = (mu.n(), mu.level());
    let size: usize = alpha.iter().sum();
    let mut s = 0;
    for lam in Partition::all_in_box(n - 1, k).into_iter().filter(|l| l.size() == size) {
        let kk = kostka(&lam, alpha)?;
        if kk > 0 {
            s += kk * fusion_coeff(&AffineWeight::from_partition(&lam, n, k)?, mu, nu)?;
        }
    }
    Ok(s)
}

/// Sum over chains nu = m0, m1, ..., ml = mu of prod_i coef(i, m_i, m_{i-1}).
fn chain_sum(
    all: &[AffineWeight],
    mu: &AffineWeight,
    nu: &AffineWeight,
    l: usize,
    coef: &dyn Fn(usize, &AffineWeight, &AffineWeight) -> Result<u64>,
) -> Result<(u64, Vec<Vec<AffineWeight>>)> {
    // walk from m_l = mu down to m_0 = nu
    let mut partial: Vec<(Vec<AffineWeight>, u64)> = vec![(vec![mu.clone()], 1)];
    for i in (1..=l).rev() {
        let mut next = Vec::new();
        for (chain, c) in &partial {
            let cur = chain.last().expect("nonempty");
            let cands: Vec<&AffineWeight> = if i == 1 { vec![nu] } else { all.iter().collect() };
            for prev in cands {
                let x = coef(i, cur, prev)?;
                if x > 0 {
                    let mut ch = chain.clone();
                    ch.push(prev.clone());
                    next.push((ch, c * x));
                }
            }
        }
        partial = next;
    }
    let total = partial.iter().map(|(_, c)| c).sum();
    let chains = partial
        .into_iter()
        .map(|(mut ch, _)| {
            ch.reverse();
            ch
        })
        .collect();
    Ok((total, chains))
}

/// Level k <-> k+1 recursion for fusion coefficients: chains of vertical-strip
/// coefficients at level k+1, shifted by phi*_{j_i}, against
/// sum K_{lam^t alpha} N_{lam mu}^{nu} at level k.
pub fn fusion_recursion_check(
    mu: &AffineWeight,
    nu: &AffineWeight,
    alpha: &[usize],
    j: &[usize],
) -> Result<FusionRecursionReport> {
    let (n, k) = (mu.n(), mu.level());
    if alpha.len() != j.len() || alpha.is_empty() {
        return Err(Error::Param("alpha and j need the same nonzero length".into()));
    }
    if alpha.iter().any(|&a| a > n) {
        return Err(Error::Param(format!("alpha parts must be <= n = {n}")));
    }
    let all = AffineWeight::all(n, k);
    let l = alpha.len();
    let coef = |i: usize, cur: &AffineWeight, prev: &AffineWeight| -> Result<u64> {
        let col = column_weight(alpha[i - 1], n, k + 1)?;
        let jj = j[i - 1];
        fusion_coeff(&col, &phi_star_weight(cur, jj), &phi_star_weight(prev, jj))
    };
    let (lhs, chains) = chain_sum(&all, mu, nu, l, &coef)?;
    let rhs = kostka_rhs_e(alpha, mu, nu)?;
    Ok(FusionRecursionReport {
        lhs,
        rhs,
        chains: chains
            .iter()
            .map(|c| c.iter().map(|w| w.to_partition()).collect())
            .collect(),
    })
}

/// Kostka identities at the coefficient level: chains of row (resp. column)
/// fusion coefficients against sum_lam K N.
pub fn kostka_coeff_check(mu: &AffineWeight, nu: &AffineWeight, alpha: &[usize]) -> Result<(u64, u64, u64, u64)> {
    let (n, k) = (mu.n(), mu.level());
    let all = AffineWeight::all(n, k);
    let l = alpha.len();
    let (lh, rh) = if alpha.iter().all(|&a| a <= k) && l <= n - 1 {
        let row = |i: usize, cur: &AffineWeight, prev: &AffineWeight| -> Result<u64> {
            fusion_coeff(&row_weight(alpha[i - 1], n, k)?, cur, prev)
        };
        (chain_sum(&all, mu, nu, l, &row)?.0, kostka_rhs_h(alpha, mu, nu)?)
    } else {
        (0, 0)
    };
    let (le, re) = if alpha.iter().all(|&a| a <= n) {
        let col = |i: usize, cur: &AffineWeight, prev: &AffineWeight| -> Result<u64> {
            fusion_coeff(&column_weight(alpha[i - 1], n, k)?, cur, prev)
        };
        (chain_sum(&all, mu, nu, l, &col)?.0, kostka_rhs_e(alpha, mu, nu)?)
    } else {
        (0, 0)
    };
    Ok((lh, rh, le, re))
}

fn apply_seq(v: &BosonState, alpha: &[usize], f: fn(usize, &BosonState) -> BosonState) -> BosonState {
    let mut cur = v.clone();
    for &a in alpha.iter().rev() {
        cur = f(a, &cur);
    }
    cur
}

/// Operator identities h_alpha = sum K_{lam alpha} s_lam and
/// e_alpha = sum K_{lam^t alpha} s_lam on the level-k space, plus the
/// coefficient identities for all mu, nu.
pub fn cauchy_kostka_check(n: usize, k: usize, alpha: &[usize]) -> Result<CheckReport> {
    let mut rep = CheckReport::new(&format!("cauchy/kostka n={n} k={k} alpha={alpha:?}"));
    let size: usize = alpha.iter().sum();
    let basis = AffineWeight::all(n, k);
    let l = alpha.len();
    for w in &basis {
        let v = BosonState::basis(w.clone());
        if l <= n - 1 {
            let lhs = apply_seq(&v, alpha, nc_h_apply);
            let mut rhs = BosonState::zero();
            for lam in Partition::all_of_size(size).into_iter().filter(|x| x.len() <= l) {
                let kk = kostka(&lam, alpha)?;
                if kk > 0 {
                    rhs.add_assign(&nc_schur_apply(&lam, &v)?.scale_int(kk as i64));
                }
            }
            rep.check(lhs == rhs, || format!("h-form on {w}: {lhs} vs {rhs}"));
        }
        let lhs = apply_seq(&v, alpha, nc_e_apply);
        let mut rhs = BosonState::zero();
        for lam in Partition::all_of_size(size)
            .into_iter()
            .filter(|x| x.len() <= n && x.first() <= l)
        {
            let kk = kostka(&lam.transpose(), alpha)?;
            if kk > 0 {
                rhs.add_assign(&nc_schur_apply(&lam, &v)?.scale_int(kk as i64));
            }
        }
        rep.check(lhs == rhs, || format!("e-form on {w}: {lhs} vs {rhs}"));
    }
    for mu in &basis {
        for nu in &basis {
            let (lh, rh, le, re) = kostka_coeff_check(mu, nu, alpha)?;
            rep.check(lh == rh && le == re, || {
                format!("{mu} -> {nu}: ({lh},{rh}) ({le},{re})")
            });
        }
    }
    Ok(rep)
}

/// The three fusion symmetries with N_{lam mu nu} = N_{lam mu}^{nu*}:
/// S3 invariance, rot-equivariance and charge conjugation.
pub fn fusion_symmetry_check(n: usize, k: usize) -> Result<CheckReport> {
    let all = AffineWeight::all(n, k);
    let mut rep = CheckReport::new(&format!("fusion symmetries n={n} k={k}"));
    let mut prods = BTreeMap::new();
    for a in &all {
        for b in &all {
            let p = fusion_product(a, b)?;
            prods.insert((a.clone(), b.clone()), p);
        }
    }
    let nn3 = |a: &AffineWeight, b: &AffineWeight, c: &AffineWeight| -> BigInt {
        prods[&(a.clone(), b.clone())].get(&c.flip()).at_one()
    };
    for a in &all {
        for b in &all {
            for c in &all {
                let base = nn3(a, b, c);
                for (x, y, z) in [(a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
                    rep.check(nn3(x, y, z) == base, || format!("S3 {a} {b} {c}"));
                }
                let r1 = nn3(&a.rot(), b, c);
                rep.check(r1 == nn3(a, &b.rot(), c) && r1 == nn3(a, b, &c.rot()), || {
                    format!("rot {a} {b} {c}")
                });
                rep.check(nn3(&a.flip(), &b.flip(), &c.flip()) == base, || {
                    format!("conj {a} {b} {c}")
                });
            }
        }
    }
    Ok(rep)
}

/// S_lam psi*_i = psi*_i S'_lam + sum_{r>=1} psi*_{i+r} sum_{lam/mu=(r)} S'_mu and
/// S_lam psi_i = psi_i S'_lam + sum_{r>=1} (-1)^r psi_{i-r} sum_{lam/mu=(1^r)} S'_mu,
/// checked on every basis word of every particle number for lam_1 + l(lam) <= N.
pub fn schur_commutation_check(nn: usize, max_size: usize) -> CheckReport {
    let mut rep = CheckReport::new(&format!("schur commutation N={nn}"));
    let words = Word01::all_levels(nn);
    let sp = |lam: &Partition, v: &FermionState| twist(&nc_schur_u_apply_any(lam, &twist(v)));
    let lams: Vec<Partition> = (0..=max_size)
        .flat_map(Partition::all_of_size)
        .filter(|l| l.first() + l.len() <= nn)
        .collect();
    for lam in &lams {
        for w in &words {
            let v = FermionState::basis(*w);
            for i in 1..=nn {
                let ii = i as i64;
                let lhs = nc_schur_u_apply_any(lam, &apply_psi_star_ext(ii, &v));
                let mut rhs = apply_psi_star_ext(ii, &sp(lam, &v));
                for r in 1..=lam.first() {
                    for mu in lam.remove_horizontal_strip(r) {
                        rhs.add_assign(&apply_psi_star_ext(ii + r as i64, &sp(&mu, &v)));
                    }
                }
                rep.check(lhs == rhs, || format!("psi* {lam} i={i} on {w}: {lhs} vs {rhs}"));
                let lhs = nc_schur_u_apply_any(lam, &apply_psi_ext(ii, &v));
                let mut rhs = apply_psi_ext(ii, &sp(lam, &v));
                for r in 1..=lam.len() {
                    for mu in lam.remove_vertical_strip(r) {
                        let t = apply_psi_ext(ii - r as i64, &sp(&mu, &v));
                        rhs.add_assign(&if r % 2 == 0 { t } else { t.scale_int(-1) });
                    }
                }
                rep.check(lhs == rhs, || format!("psi {lam} i={i} on {w}: {lhs} vs {rhs}"));
            }
        }
    }
    rep
}
