//! Floating-point spectral route: Bethe roots and vectors, the modular S and
//! T matrices, the Verlinde formula and the Bertram-Vafa-Intriligator sum.
//! Everything is evaluated at z = 1 (resp. q = 1); variable powers come back
//! from the degree constraints.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use itertools::Itertools;
use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::state::{complex_inner, BasisLabel, ComplexState, StateVector};
use crate::symfunc::{complete_upto, elementary_all, schur_eval};
use crate::weight::AffineWeight;
use crate::word::Word01;

/// Rounding tolerance for coefficients recovered from complex sums.
pub const ROUND_TOL: f64 = 1e-6;

fn cis(t: f64) -> Complex64 {
    Complex64::from_polar(1.0, t)
}

/// Pairwise summation in input order; deterministic regardless of threads.
pub fn tree_sum(v: &[Complex64]) -> Complex64 {
    match v.len() {
        0 => Complex64::new(0.0, 0.0),
        1 => v[0],
        m => tree_sum(&v[..m / 2]) + tree_sum(&v[m / 2..]),
    }
}

/// Round a complex value to a nonnegative integer, rejecting large residuals.
pub fn round_checked(c: Complex64, tol: f64) -> Result<u64> {
    let r = c.re.round();
    let residual = (c.re - r).abs().max(c.im.abs());
    if residual >= tol || r < -0.5 {
        return Err(Error::Residual {
            residual: residual.max(-r),
            tol,
        });
    }
    Ok(r as u64)
}

/// I(sigma^t) = ((k+1)/2 + sigma^t_k - k, ..., (k+1)/2 + sigma^t_1 - 1), increasing.
pub fn i_tuple(sigma: &Partition, k: usize) -> Vec<f64> {
    let st = sigma.transpose();
    (1..=k)
        .map(|j| (k as f64 + 1.0) / 2.0 + st.part(k - j) as f64 - (k + 1 - j) as f64)
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct BetheRootsBoson {
    pub n: usize,
    pub k: usize,
    pub sigma: Partition,
    pub i: Vec<f64>,
    pub x: Vec<Complex64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BetheRootsFermion {
    pub n: usize,
    pub k: usize,
    pub sigma: Partition,
    pub i: Vec<f64>,
    pub y: Vec<Complex64>,
}

/// One root tuple per sigma in the (n-1) x k box:
/// x_j = zeta^{|sigma|/n} zeta^{I_j}, zeta = exp(2 pi i/(n+k)).
pub fn bethe_roots_boson(n: usize, k: usize) -> Result<Vec<BetheRootsBoson>> {
    if n < 2 {
        return Err(Error::Param(format!("n = {n} < 2")));
    }
    let m = (n + k) as f64;
    Ok(Partition::all_in_box(n - 1, k)
        .into_iter()
        .map(|sigma| {
            let i = i_tuple(&sigma, k);
            let shift = sigma.size() as f64 / n as f64;
            let x = i.iter().map(|&ij| cis(2.0 * PI * (shift + ij) / m)).collect();
            BetheRootsBoson { n, k, sigma, i, x }
        })
        .collect())
}

/// One root tuple per sigma in the n x k box: y_j = zeta^{I_j}, zeta = exp(2 pi i/N).
pub fn bethe_roots_fermion(n: usize, k: usize) -> Result<Vec<BetheRootsFermion>> {
    if n + k < 2 {
        return Err(Error::Param(format!("N = {} < 2", n + k)));
    }
    let m = (n + k) as f64;
    Ok(Partition::all_in_box(n, k)
        .into_iter()
        .map(|sigma| {
            let i = i_tuple(&sigma, k);
            let y = i.iter().map(|&ij| cis(2.0 * PI * ij / m)).collect();
            BetheRootsFermion { n, k, sigma, i, y }
        })
        .collect())
}

fn inverse(x: &[Complex64]) -> Vec<Complex64> {
    x.iter().map(|v| v.inv()).collect()
}

/// b(x): component s_{P-hat(lambda)^t}(x^{-1}) on each level-k weight.
pub fn bethe_vector_boson(r: &BetheRootsBoson) -> ComplexState<AffineWeight> {
    let xi = inverse(&r.x);
    AffineWeight::all(r.n, r.k)
        .into_iter()
        .map(|w| {
            let c = schur_eval(&w.to_boxed().transpose(), &xi);
            (w, c)
        })
        .collect()
}

/// b~(y): component s_lambda(y^{-1}) on each k-particle word.
pub fn bethe_vector_fermion(r: &BetheRootsFermion) -> ComplexState<Word01> {
    let yi = inverse(&r.y);
    let nn = r.n + r.k;
    Word01::all(nn, r.k)
        .into_iter()
        .map(|w| {
            let c = schur_eval(&w.to_partition(), &yi);
            (w, c)
        })
        .collect()
}

/// Apply an exact operator at z = 1 (q = 1) to a complex vector.
pub fn apply_at_one<L: BasisLabel>(
    f: impl Fn(&StateVector<L>) -> StateVector<L>,
    v: &ComplexState<L>,
) -> ComplexState<L> {
    let mut out: ComplexState<L> = BTreeMap::new();
    for (l, c) in v {
        for (m, x) in f(&StateVector::basis(l.clone())).at_one() {
            let xf: f64 = x.to_string().parse().expect("integer");
            *out.entry(m).or_insert(Complex64::new(0.0, 0.0)) += c * xf;
        }
    }
    out
}

/// max |u_l - s v_l| over the union of supports.
pub fn eigen_residual<L: Ord + Clone>(u: &ComplexState<L>, v: &ComplexState<L>, s: Complex64) -> f64 {
    let zero = Complex64::new(0.0, 0.0);
    u.keys()
        .chain(v.keys())
        .map(|l| (u.get(l).copied().unwrap_or(zero) - s * v.get(l).copied().unwrap_or(zero)).norm())
        .fold(0.0, f64::max)
}

fn sign_pm(k: usize) -> f64 {
    if k % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// max_i |x_i^{n+k} - (-1)^{k-1} e_k(x)|.
pub fn boson_bethe_residual(r: &BetheRootsBoson) -> f64 {
    let ek: Complex64 = r.x.iter().product();
    r.x.iter()
        .map(|x| (x.powu((r.n + r.k) as u32) + sign_pm(r.k) * ek).norm())
        .fold(0.0, f64::max)
}

/// h_{n+1} = ... = h_{n+k-1} = 0, h_{n+k} + (-1)^k e_k = 0, h_n = 1.
pub fn complete_relations_residual(r: &BetheRootsBoson) -> f64 {
    let (n, k) = (r.n, r.k);
    if k == 0 {
        return 0.0;
    }
    let h = complete_upto(n + k, &r.x);
    let ek: Complex64 = r.x.iter().product();
    let mut res = (h[n] - 1.0).norm();
    for j in n + 1..n + k {
        res = res.max(h[j].norm());
    }
    res.max((h[n + k] + sign_pm(k) * ek).norm())
}

/// max_i |y_i^N - (-1)^{k-1}|.
pub fn fermion_bethe_residual(r: &BetheRootsFermion) -> f64 {
    let nn = (r.n + r.k) as u32;
    r.y.iter()
        .map(|y| (y.powu(nn) + sign_pm(r.k)).norm())
        .fold(0.0, f64::max)
}

/// h_{N-k+1} = ... = h_{N-1} = 0, h_N + (-1)^k = 0.
pub fn fermion_relations_residual(r: &BetheRootsFermion) -> f64 {
    let nn = r.n + r.k;
    if r.k == 0 {
        return 0.0;
    }
    let h = complete_upto(nn, &r.y);
    let mut res = (h[nn] + sign_pm(r.k)).norm();
    for j in nn - r.k + 1..nn {
        res = res.max(h[j].norm());
    }
    res
}

fn same_set(a: &[Complex64], b: &[Complex64], tol: f64) -> bool {
    a.len() == b.len() && a.iter().all(|x| b.iter().any(|y| (x - y).norm() < tol))
}

/// Index of the root tuple equal (as a set) to e^{2 pi i/n} x, if any.
pub fn zn_partner(r: &BetheRootsBoson, all: &[BetheRootsBoson]) -> Option<usize> {
    let w = cis(2.0 * PI / r.n as f64);
    let moved: Vec<_> = r.x.iter().map(|x| x * w).collect();
    all.iter().position(|s| same_set(&moved, &s.x, 1e-9))
}

/// T(u) b(x) against [1 + (-1)^k e_k(x) u^{n+k}] prod 1/(1 - u x_i) b(x), z = 1.
pub fn verify_transfer_eigen(r: &BetheRootsBoson, u: Complex64) -> Result<f64> {
    if r.x.iter().any(|x| (Complex64::new(1.0, 0.0) - u * x).norm() < 1e-12) {
        return Err(Error::Pole);
    }
    let b = bethe_vector_boson(r);
    let mut tb: ComplexState<AffineWeight> = BTreeMap::new();
    let mut up = Complex64::new(1.0, 0.0);
    for s in 0..=r.n {
        for (l, c) in apply_at_one(|v| crate::boson::nc_e_apply(s, v), &b) {
            *tb.entry(l).or_insert(Complex64::new(0.0, 0.0)) += up * c;
        }
        up *= u;
    }
    let ek: Complex64 = r.x.iter().product();
    let mut lam = Complex64::new(1.0, 0.0) + sign_pm(r.k) * ek * u.powu((r.n + r.k) as u32);
    for x in &r.x {
        lam /= Complex64::new(1.0, 0.0) - u * x;
    }
    Ok(eigen_residual(&tb, &b, lam))
}

/// |Van_sigma|^2 = prod_{i<j} (2 sin(pi (sigma_i - sigma_j + j - i)/(k+n)))^2, sigma padded to n parts.
pub fn van_sq_sin(sigma: &Partition, n: usize, k: usize) -> f64 {
    sin_product(sigma, n, k).powi(2)
}

/// prod_{i<j} 2 sin(pi (rho + sigma, e_i - e_j)/(k+n)).
pub fn sin_product(sigma: &Partition, n: usize, k: usize) -> f64 {
    let m = (n + k) as f64;
    let mut p = 1.0;
    for i in 0..n {
        for j in i + 1..n {
            let a = sigma.part(i) as f64 - sigma.part(j) as f64 + (j - i) as f64;
            p *= 2.0 * (PI * a / m).sin();
        }
    }
    p
}

#[derive(Clone, Debug, Serialize)]
pub struct NormReport {
    pub n: usize,
    pub k: usize,
    pub max_rel_norm_error: f64,
    pub max_orthogonality: f64,
}

/// Compare <b_sigma, b_sigma> with n (n+k)^{n-1}/|Van_sigma|^2 and check orthogonality.
pub fn bethe_norm_check(n: usize, k: usize) -> Result<NormReport> {
    let roots = bethe_roots_boson(n, k)?;
    let vecs: Vec<_> = roots.iter().map(bethe_vector_boson).collect();
    let mut rel: f64 = 0.0;
    let mut orth: f64 = 0.0;
    for (a, ra) in roots.iter().enumerate() {
        let direct = complex_inner(&vecs[a], &vecs[a]).re;
        let formula = n as f64 * ((n + k) as f64).powi(n as i32 - 1) / van_sq_sin(&ra.sigma, n, k);
        rel = rel.max(((direct - formula) / formula).abs());
        for b in a + 1..roots.len() {
            orth = orth.max(complex_inner(&vecs[a], &vecs[b]).norm());
        }
    }
    Ok(NormReport {
        n,
        k,
        max_rel_norm_error: rel,
        max_orthogonality: orth,
    })
}

/// |prod_{i<j} (y_i - y_j)|^2.
pub fn van_sq(y: &[Complex64]) -> f64 {
    let mut p = 1.0;
    for i in 0..y.len() {
        for j in i + 1..y.len() {
            p *= (y[i] - y[j]).norm_sqr();
        }
    }
    p
}

#[derive(Clone, Debug, Serialize)]
pub struct FermionNormEntry {
    pub sigma: Partition,
    pub measured: f64,
    /// N^k / |Van(y)|^2 over the k roots, recorded for comparison only.
    pub nk_over_van: f64,
}

/// Measured fermionic Bethe vector norms and fermionic orthogonality.
pub fn fermion_norms(n: usize, k: usize) -> Result<(Vec<FermionNormEntry>, f64)> {
    let roots = bethe_roots_fermion(n, k)?;
    let vecs: Vec<_> = roots.iter().map(bethe_vector_fermion).collect();
    let nn = (n + k) as f64;
    let mut orth: f64 = 0.0;
    for a in 0..vecs.len() {
        for b in a + 1..vecs.len() {
            orth = orth.max(complex_inner(&vecs[a], &vecs[b]).norm());
        }
    }
    let entries = roots
        .iter()
        .zip(&vecs)
        .map(|(r, v)| FermionNormEntry {
            sigma: r.sigma.clone(),
            measured: complex_inner(v, v).re,
            nk_over_van: nn.powi(k as i32) / van_sq(&r.y),
        })
        .collect();
    Ok((entries, orth))
}

/// Finite part (lambda_i - |lambda|/n) of a P-partition, as an n-vector.
fn finite_part(lam: &Partition, n: usize) -> Vec<f64> {
    let avg = lam.size() as f64 / n as f64;
    (0..n).map(|i| lam.part(i) as f64 - avg).collect()
}

fn rho(n: usize) -> Vec<f64> {
    (1..=n).map(|i| (n as f64 + 1.0) / 2.0 - i as f64).collect()
}

fn perm_sign(p: &[usize]) -> f64 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    sign_pm(inv)
}

/// Modular S-matrix of affine sl(n) at level k, indexed by AffineWeight::all(n, k).
#[derive(Clone, Debug)]
pub struct SMatrix {
    pub n: usize,
    pub k: usize,
    pub basis: Vec<AffineWeight>,
    pub entries: Vec<Vec<Complex64>>,
    index: BTreeMap<AffineWeight, usize>,
}

/// Kac-Peterson Weyl sum over S_n.
pub fn smatrix(n: usize, k: usize) -> Result<SMatrix> {
    if !(2..=6).contains(&n) {
        return Err(Error::Param(format!("smatrix needs 2 <= n <= 6, got {n}")));
    }
    let basis = AffineWeight::all(n, k);
    let m = (n + k) as f64;
    let rh = rho(n);
    let shifted: Vec<Vec<f64>> = basis
        .iter()
        .map(|w| {
            finite_part(&w.to_partition(), n)
                .iter()
                .zip(&rh)
                .map(|(a, b)| a + b)
                .collect()
        })
        .collect();
    let perms: Vec<(Vec<usize>, f64)> = (0..n)
        .permutations(n)
        .map(|p| {
            let s = perm_sign(&p);
            (p, s)
        })
        .collect();
    let pref = cis(PI * (n * (n - 1)) as f64 / 4.0) / (n as f64 * m.powi(n as i32 - 1)).sqrt();
    let entries: Vec<Vec<Complex64>> = shifted
        .par_iter()
        .map(|lr| {
            shifted
                .iter()
                .map(|sr| {
                    let terms: Vec<Complex64> = perms
                        .iter()
                        .map(|(p, s)| {
                            let dot: f64 = (0..n).map(|i| sr[i] * lr[p[i]]).sum();
                            cis(-2.0 * PI * dot / m) * *s
                        })
                        .collect();
                    pref * tree_sum(&terms)
                })
                .collect()
        })
        .collect();
    let index = basis.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    Ok(SMatrix {
        n,
        k,
        basis,
        entries,
        index,
    })
}

fn cmatmul(a: &[Vec<Complex64>], b: &[Vec<Complex64>]) -> Vec<Vec<Complex64>> {
    let m = a.len();
    (0..m)
        .map(|i| (0..m).map(|j| (0..m).map(|l| a[i][l] * b[l][j]).sum()).collect())
        .collect()
}

fn max_diff(a: &[Vec<Complex64>], b: &[Vec<Complex64>]) -> f64 {
    a.iter()
        .zip(b)
        .flat_map(|(r, s)| r.iter().zip(s).map(|(x, y)| (x - y).norm()))
        .fold(0.0, f64::max)
}

impl SMatrix {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, w: &AffineWeight) -> Result<usize> {
        self.index
            .get(w)
            .copied()
            .ok_or_else(|| Error::Mismatch(format!("{w} is not a level-{} weight of sl({})", self.k, self.n)))
    }

    pub fn get(&self, lam: &AffineWeight, sigma: &AffineWeight) -> Result<Complex64> {
        Ok(self.entries[self.index_of(lam)?][self.index_of(sigma)?])
    }

    /// max |(S S^dagger - 1)_{ij}|.
    pub fn unitarity_residual(&self) -> f64 {
        let m = self.dim();
        let mut r: f64 = 0.0;
        for s in 0..m {
            for t in 0..m {
                let v: Complex64 = (0..m).map(|l| self.entries[l][s] * self.entries[l][t].conj()).sum();
                let want = if s == t { 1.0 } else { 0.0 };
                r = r.max((v - want).norm());
            }
        }
        r
    }

    pub fn symmetry_residual(&self) -> f64 {
        let m = self.dim();
        let mut r: f64 = 0.0;
        for i in 0..m {
            for j in 0..m {
                r = r.max((self.entries[i][j] - self.entries[j][i]).norm());
            }
        }
        r
    }

    /// max |S_{0 sigma} - sin product / sqrt(n (k+n)^{n-1})|.
    pub fn sin_product_residual(&self) -> f64 {
        let (n, k) = (self.n, self.k);
        let norm = (n as f64 * ((n + k) as f64).powi(n as i32 - 1)).sqrt();
        self.basis
            .iter()
            .enumerate()
            .map(|(j, s)| (self.entries[0][j] - sin_product(&s.to_partition(), n, k) / norm).norm())
            .fold(0.0, f64::max)
    }

    /// max |S^2 - C| with C the charge conjugation permutation.
    pub fn charge_conjugation_residual(&self) -> f64 {
        let s2 = cmatmul(&self.entries, &self.entries);
        let m = self.dim();
        let mut c = vec![vec![Complex64::new(0.0, 0.0); m]; m];
        for (i, w) in self.basis.iter().enumerate() {
            c[i][self.index[&w.flip()]] = Complex64::new(1.0, 0.0);
        }
        max_diff(&s2, &c)
    }

    /// max |(S T)^3 - S^2|.
    pub fn modular_relation_residual(&self) -> f64 {
        let t = tmatrix(self.n, self.k);
        let st: Vec<Vec<Complex64>> = self
            .entries
            .iter()
            .map(|row| row.iter().zip(&t).map(|(a, b)| a * b).collect())
            .collect();
        let st3 = cmatmul(&cmatmul(&st, &st), &st);
        max_diff(&st3, &cmatmul(&self.entries, &self.entries))
    }

    /// max over lambda, sigma of |S_{lambda sigma}/S_{0 sigma} - s_lambda(y_sigma)|,
    /// y_j = exp(-2 pi i (sigma + rho, e_j)/(k+n)).
    pub fn character_residual(&self) -> f64 {
        let (n, k) = (self.n, self.k);
        let m = (n + k) as f64;
        let rh = rho(n);
        let mut r: f64 = 0.0;
        for (j, s) in self.basis.iter().enumerate() {
            let y = self.character_points(s, &rh, m);
            for (i, l) in self.basis.iter().enumerate() {
                let ratio = self.entries[i][j] / self.entries[0][j];
                r = r.max((ratio - schur_eval(&l.to_partition(), &y)).norm());
            }
        }
        r
    }

    fn character_points(&self, s: &AffineWeight, rh: &[f64], m: f64) -> Vec<Complex64> {
        finite_part(&s.to_partition(), self.n)
            .iter()
            .zip(rh)
            .map(|(a, b)| cis(-2.0 * PI * (a + b) / m))
            .collect()
    }

    /// max |S_{rot(lambda) mu} - e^{-2 pi i |mu|/n} S_{lambda mu}|.
    pub fn rotation_residual(&self) -> f64 {
        let mut r: f64 = 0.0;
        for (i, l) in self.basis.iter().enumerate() {
            let ri = self.index[&l.rot()];
            for (j, mu) in self.basis.iter().enumerate() {
                let ph = cis(-2.0 * PI * mu.to_partition().size() as f64 / self.n as f64);
                r = r.max((self.entries[ri][j] - ph * self.entries[i][j]).norm());
            }
        }
        r
    }

    /// Unrounded Verlinde sum for basis indices (i, j, l).
    pub fn verlinde_raw(&self, i: usize, j: usize, l: usize) -> Complex64 {
        let ls = self.index[&self.basis[l].flip()];
        let terms: Vec<Complex64> = (0..self.dim())
            .map(|s| self.entries[i][s] * self.entries[j][s] * self.entries[ls][s] / self.entries[0][s])
            .collect();
        tree_sum(&terms)
    }

    /// Verlinde formula N_{lambda mu}^{nu} = sum_sigma S S S_{nu* sigma}/S_{0 sigma}, rounded.
    pub fn verlinde(&self, lam: &AffineWeight, mu: &AffineWeight, nu: &AffineWeight) -> Result<u64> {
        let (i, j, l) = (self.index_of(lam)?, self.index_of(mu)?, self.index_of(nu)?);
        round_checked(self.verlinde_raw(i, j, l), ROUND_TOL)
    }

    /// Full table N[i][j][l] in basis order; parallel over i.
    pub fn verlinde_table(&self) -> Result<Vec<Vec<Vec<u64>>>> {
        let m = self.dim();
        (0..m)
            .into_par_iter()
            .map(|i| {
                (0..m)
                    .map(|j| {
                        (0..m)
                            .map(|l| round_checked(self.verlinde_raw(i, j, l), ROUND_TOL))
                            .collect()
                    })
                    .collect()
            })
            .collect()
    }
}

/// Diagonal of the T-matrix: exp(2 pi i m(lambda)), m = |lambda+rho|^2/(2(k+n)) - |rho|^2/(2n).
pub fn tmatrix(n: usize, k: usize) -> Vec<Complex64> {
    let rh = rho(n);
    let rho2: f64 = rh.iter().map(|x| x * x).sum();
    AffineWeight::all(n, k)
        .iter()
        .map(|w| {
            let lr: f64 = finite_part(&w.to_partition(), n)
                .iter()
                .zip(&rh)
                .map(|(a, b)| (a + b).powi(2))
                .sum();
            let m = lr / (2.0 * (n + k) as f64) - rho2 / (2.0 * n as f64);
            cis(2.0 * PI * m)
        })
        .collect()
}

/// Verlinde coefficient through a freshly built S-matrix.
pub fn verlinde_coeff(lam: &AffineWeight, mu: &AffineWeight, nu: &AffineWeight) -> Result<u64> {
    if lam.n() != mu.n() || lam.n() != nu.n() || lam.level() != mu.level() || lam.level() != nu.level() {
        return Err(Error::Mismatch(format!("{lam}, {mu}, {nu}")));
    }
    smatrix(lam.n(), lam.level())?.verlinde(lam, mu, nu)
}

/// Fusion coefficient from the character sum
/// (1/(n (k+n)^{n-1})) sum_sigma chi_lambda chi_mu chi_{nu*} |Van_sigma|^2,
/// chi evaluated as Schur polynomials at y_j = exp(-2 pi i (sigma+rho, e_j)/(k+n)).
pub fn verlinde_character_coeff(lam: &AffineWeight, mu: &AffineWeight, nu: &AffineWeight) -> Result<u64> {
    let (n, k) = (lam.n(), lam.level());
    let m = (n + k) as f64;
    let rh = rho(n);
    let (pl, pm, pn) = (lam.to_partition(), mu.to_partition(), nu.flip().to_partition());
    let terms: Vec<Complex64> = AffineWeight::all(n, k)
        .par_iter()
        .map(|s| {
            let y: Vec<Complex64> = finite_part(&s.to_partition(), n)
                .iter()
                .zip(&rh)
                .map(|(a, b)| cis(-2.0 * PI * (a + b) / m))
                .collect();
            schur_eval(&pl, &y) * schur_eval(&pm, &y) * schur_eval(&pn, &y) * van_sq_sin(&s.to_partition(), n, k)
        })
        .collect();
    round_checked(tree_sum(&terms) / (n as f64 * m.powi(n as i32 - 1)), ROUND_TOL)
}

fn bvi_sum(
    lam: &Partition,
    mu: &Partition,
    k: usize,
    nn: usize,
    third: impl Fn(&BetheRootsFermion) -> Complex64 + Sync,
) -> Result<Complex64> {
    let roots = bethe_roots_fermion(nn - k, k)?;
    let terms: Vec<Complex64> = roots
        .par_iter()
        .map(|r| schur_eval(lam, &r.y) * schur_eval(mu, &r.y) * third(r) * van_sq(&r.y))
        .collect();
    Ok(tree_sum(&terms) / (nn as f64).powi(k as i32))
}

/// Bertram-Vafa-Intriligator sum at q = 1 in the orthogonality form
/// (1/N^k) sum_sigma s_lambda(y) s_mu(y) conj(s_nu(y)) |Van(y)|^2, y = zeta^{I(sigma)}.
/// Returns (d, C) with d from |lambda| + |mu| - |nu| = dN, or (None, 0) if no such d >= 0.
pub fn bvi_coeff(lam: &Partition, mu: &Partition, nu: &Partition, k: usize, nn: usize) -> Result<(Option<usize>, u64)> {
    bvi_coeff_tol(lam, mu, nu, k, nn, ROUND_TOL)
}

/// [`bvi_coeff`] with an explicit rounding tolerance.
pub fn bvi_coeff_tol(
    lam: &Partition,
    mu: &Partition,
    nu: &Partition,
    k: usize,
    nn: usize,
    tol: f64,
) -> Result<(Option<usize>, u64)> {
    if nn < k {
        return Err(Error::Param(format!("N = {nn} < k = {k}")));
    }
    let n = nn - k;
    for x in [lam, mu, nu] {
        x.check_box(k, n)?;
    }
    let Some(d) = crate::fermion::gw_degree(lam, mu, nu, nn) else {
        return Ok((None, 0));
    };
    let s = bvi_sum(lam, mu, k, nn, |r| schur_eval(nu, &inverse(&r.y)))?;
    Ok((Some(d), round_checked(s, tol)?))
}

/// The same sum with the third factor written as s_{nu^vee}(zeta^{-I}) zeta^{-k|sigma|}
/// (nu^vee the complement in the k x n box); returned unrounded.
pub fn bvi_literal(lam: &Partition, mu: &Partition, nu: &Partition, k: usize, nn: usize) -> Result<Complex64> {
    let n = nn - k;
    let nuv = nu.complement(k, n)?;
    let z = 2.0 * PI / nn as f64;
    bvi_sum(lam, mu, k, nn, |r| {
        schur_eval(&nuv, &inverse(&r.y)) * cis(-z * (k * r.sigma.size()) as f64)
    })
}

/// e_r(y) for the fermionic eigenvalue check.
pub fn elementary_of(y: &[Complex64], r: usize) -> Complex64 {
    elementary_all(y).get(r).copied().unwrap_or(Complex64::new(0.0, 0.0))
}
