//! Free-fermion operators on 01-words: Clifford generators, affine
//! nil-Temperley-Lieb generators u_i, noncommutative symmetric polynomials
//! in them, the quantum product and the discrete symmetries P, T, C, Rot.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::laurent::LaurentInt;
use crate::ncpoly::{apply_poly, jt_det};
use crate::partition::Partition;
use crate::state::FermionState;
use crate::word::Word01;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FermionOp {
    Psi(usize),
    PsiStar(usize),
    U(usize),
}

fn sign_of(n: i64) -> i64 {
    if n.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// psi*_i: creates a particle at site i with sign (-1)^{n_{i-1}}.
pub fn apply_psi_star(i: usize, v: &FermionState) -> FermionState {
    v.map_monomial(|w| {
        if w.get(i) {
            None
        } else {
            Some((w.with(i, true), sign_of(w.n_count(i as i64 - 1)), 0))
        }
    })
}

/// psi_i: annihilates the particle at site i with sign (-1)^{n_{i-1}}.
pub fn apply_psi(i: usize, v: &FermionState) -> FermionState {
    v.map_monomial(|w| {
        if !w.get(i) {
            None
        } else {
            Some((w.with(i, false), sign_of(w.n_count(i as i64 - 1)), 0))
        }
    })
}

/// u_i literally from the Clifford generators: psi*_{i+1} psi_i for i < N,
/// -q (-1)^{n_N} psi*_1 psi_N for i = N.
pub fn apply_u_raw(i: usize, v: &FermionState) -> FermionState {
    let Some(nn) = sites(v) else {
        return FermionState::zero();
    };
    if i < nn {
        apply_psi_star(i + 1, &apply_psi(i, v))
    } else {
        let t = apply_psi_star(1, &apply_psi(nn, v));
        t.map_monomial(|w| Some((*w, -sign_of(w.n_count(nn as i64)), 1)))
    }
}

/// u_i with the sign simplification: a particle hops i -> i+1 (sign +1);
/// u_N moves a particle N -> 1 with coefficient +q.
pub fn apply_u(i: usize, v: &FermionState) -> FermionState {
    v.map_monomial(|w| {
        let nn = w.len();
        let j = if i == nn { 1 } else { i + 1 };
        if !w.get(i) || w.get(j) {
            return None;
        }
        Some((w.with(i, false).with(j, true), 1, if i == nn { 1 } else { 0 }))
    })
}

pub fn apply_op(op: FermionOp, v: &FermionState) -> FermionState {
    match op {
        FermionOp::Psi(i) => apply_psi(i, v),
        FermionOp::PsiStar(i) => apply_psi_star(i, v),
        FermionOp::U(i) => apply_u(i, v),
    }
}

/// Apply u-word written left to right (rightmost acts first).
pub fn apply_u_word(word: &[usize], v: &FermionState) -> FermionState {
    let mut cur = v.clone();
    for &i in word.iter().rev() {
        cur = apply_u(i, &cur);
        if cur.is_zero() {
            break;
        }
    }
    cur
}

fn sites(v: &FermionState) -> Option<usize> {
    v.iter().next().map(|(w, _)| w.len())
}

/// Clockwise product over a proper subset of {1..N}: u_i written left of
/// u_{i+1}, linearized at the smallest gap.
pub fn clockwise_u_word(nn: usize, set: &[usize]) -> Vec<usize> {
    let used: Vec<bool> = (1..=nn).map(|i| set.contains(&i)).collect();
    let g = used.iter().position(|&u| !u).expect("proper subset") + 1;
    (1..nn).map(|t| (g - 1 + t) % nn + 1).filter(|i| used[i - 1]).collect()
}

/// Anticlockwise product: u_{i+1} written left of u_i.
pub fn anticlockwise_u_word(nn: usize, set: &[usize]) -> Vec<usize> {
    let mut w = clockwise_u_word(nn, set);
    w.reverse();
    w
}

pub fn e_u_words(nn: usize, r: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    (1..=nn).combinations(r).map(|s| clockwise_u_word(nn, &s)).collect()
}

pub fn h_u_words(nn: usize, r: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    (1..=nn).combinations(r).map(|s| anticlockwise_u_word(nn, &s)).collect()
}

/// e_r(U): clockwise subset sum; e_N = (-1)^{k+1} q on F_k; zero above N.
pub fn nc_e_u_apply(r: usize, v: &FermionState) -> FermionState {
    let Some(nn) = sites(v) else {
        return FermionState::zero();
    };
    match r {
        0 => v.clone(),
        r if r == nn => v.map_monomial(|w| Some((*w, -sign_of(w.weight() as i64), 1))),
        r if r > nn => FermionState::zero(),
        _ => {
            let mut out = FermionState::zero();
            for w in e_u_words(nn, r) {
                out.add_assign(&apply_u_word(&w, v));
            }
            out
        }
    }
}

/// h_r(U): anticlockwise subset sum; h_N = q on F_N and 0 elsewhere; zero above N.
pub fn nc_h_u_apply(r: usize, v: &FermionState) -> FermionState {
    let Some(nn) = sites(v) else {
        return FermionState::zero();
    };
    match r {
        0 => v.clone(),
        r if r == nn => v.map_monomial(|w| if w.weight() == nn { Some((*w, 1, 1)) } else { None }),
        r if r > nn => FermionState::zero(),
        _ => {
            let mut out = FermionState::zero();
            for w in h_u_words(nn, r) {
                out.add_assign(&apply_u_word(&w, v));
            }
            out
        }
    }
}

/// s_lambda(U) from the e-determinant.
pub fn nc_schur_u_apply_e(lam: &Partition, v: &FermionState) -> FermionState {
    apply_poly(&jt_det(lam.transpose().parts()), v, &nc_e_u_apply)
}

/// s_lambda(U) from the h-determinant.
pub fn nc_schur_u_apply_h(lam: &Partition, v: &FermionState) -> FermionState {
    apply_poly(&jt_det(lam.parts()), v, &nc_h_u_apply)
}

/// s_lambda(U) using whichever determinant is smaller.
pub fn nc_schur_u_apply(lam: &Partition, v: &FermionState) -> Result<FermionState> {
    if let Some((w, _)) = v.iter().next() {
        let nn = w.len();
        if lam.len() > nn || lam.first() > nn {
            return Err(Error::BoxViolation {
                part: lam.to_string(),
                rows: nn,
                cols: nn,
            });
        }
    }
    Ok(if lam.len() <= lam.first() {
        nc_schur_u_apply_h(lam, v)
    } else {
        nc_schur_u_apply_e(lam, v)
    })
}

/// lambda * mu = s_lambda(U) mu in F_k[q], N = n + k.
pub fn quantum_product(lam: &Partition, mu: &Partition, k: usize, nn: usize) -> Result<FermionState> {
    lam.check_box(k, nn - k)?;
    let w = Word01::from_partition(mu, k, nn)?;
    nc_schur_u_apply(lam, &FermionState::basis(w))
}

/// Degree d with |lam| + |mu| - |nu| = dN, if a nonnegative integer.
pub fn gw_degree(lam: &Partition, mu: &Partition, nu: &Partition, nn: usize) -> Option<usize> {
    let num = lam.size() as i64 + mu.size() as i64 - nu.size() as i64;
    if num < 0 || num % nn as i64 != 0 {
        None
    } else {
        Some((num / nn as i64) as usize)
    }
}

/// Coefficient of q^d nu in lam * mu, checking the degree constraint.
pub(crate) fn gw_from_product(
    prod: &FermionState,
    nu: &Partition,
    d: Option<usize>,
    k: usize,
    nn: usize,
) -> Result<u64> {
    let w = Word01::from_partition(nu, k, nn)?;
    let c = prod.get(&w);
    if c.is_zero() {
        return Ok(0);
    }
    let d = d.ok_or_else(|| Error::Precondition(format!("nonzero coefficient {c} violates the degree constraint")))?;
    let (e, x) = c
        .as_monomial()
        .ok_or_else(|| Error::Precondition(format!("coefficient {c} is not a monomial")))?;
    if e != d as i64 || x.is_negative() {
        return Err(Error::Precondition(format!("coefficient {c} at degree {d}")));
    }
    x.to_u64().ok_or_else(|| Error::Precondition("overflow".into()))
}

/// Gromov-Witten invariant C_{lam,mu}^{nu,d} on Gr(k, N); zero unless the
/// degree constraint gives exactly d.
pub fn gw_invariant(lam: &Partition, mu: &Partition, nu: &Partition, d: usize, k: usize, nn: usize) -> Result<u64> {
    nu.check_box(k, nn - k)?;
    if gw_degree(lam, mu, nu, nn) != Some(d) {
        return Ok(0);
    }
    let prod = quantum_product(lam, mu, k, nn)?;
    gw_from_product(&prod, nu, Some(d), k, nn)
}

/// Discrete symmetries of the fermion space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symmetry {
    /// word reversal (Poincare duality)
    P,
    /// antilinear, q -> 1/q
    T,
    /// particle-hole exchange
    C,
    /// cyclic shift w_2 ... w_N w_1
    Rot,
}

pub fn apply_symmetry(s: Symmetry, v: &FermionState) -> FermionState {
    match s {
        Symmetry::P => v.map_monomial(|w| Some((w.reverse(), 1, 0))),
        Symmetry::C => v.map_monomial(|w| Some((w.complement(), 1, 0))),
        Symmetry::Rot => v.map_monomial(|w| Some((w.rot(), 1, 0))),
        Symmetry::T => v.map_coeffs(|c| c.conj()),
    }
}

/// q -> -q on coefficients.
pub fn twist(v: &FermionState) -> FermionState {
    v.map_coeffs(|c| c.twist())
}

/// S'_lambda: s_lambda(U) with q -> -q.
pub fn schur_u_twisted(lam: &Partition, v: &FermionState) -> FermionState {
    twist(&nc_schur_u_apply_any(lam, &twist(v)))
}

/// s_lambda(U) for any partition (the e-determinant, e_r = 0 above N); used
/// where recursions produce shapes outside the k x n box.
pub fn nc_schur_u_apply_any(lam: &Partition, v: &FermionState) -> FermionState {
    match sites(v) {
        Some(nn) if lam.len() <= nn && lam.first() <= nn => nc_schur_u_apply(lam, v).expect("checked"),
        Some(_) => nc_schur_u_apply_e(lam, v),
        None => FermionState::zero(),
    }
}

/// psi*_j for any integer j, with the quasi-periodic rule
/// psi*_{j+N} = -q (-1)^K psi*_j, K the particle number of the image.
pub fn apply_psi_star_ext(j: i64, v: &FermionState) -> FermionState {
    let Some(nn) = sites(v) else {
        return FermionState::zero();
    };
    let nn_i = nn as i64;
    let wraps = (j - 1).div_euclid(nn_i);
    let base = ((j - 1).rem_euclid(nn_i) + 1) as usize;
    let out = apply_psi_star(base, v);
    quasi_periodic_factor(out, wraps)
}

/// psi_j for any integer j: psi_{j-N} = -q (-1)^K psi_j, K the particle number of the image.
pub fn apply_psi_ext(j: i64, v: &FermionState) -> FermionState {
    let Some(nn) = sites(v) else {
        return FermionState::zero();
    };
    let nn_i = nn as i64;
    // psi_j = (-q (-1)^K)^{-m} psi_{j + mN}... written with the forward shift count
    let wraps = -(j - 1).div_euclid(nn_i);
    let base = ((j - 1).rem_euclid(nn_i) + 1) as usize;
    let out = apply_psi(base, v);
    quasi_periodic_factor(out, wraps)
}

/// Multiply each basis term by (-q (-1)^K)^m, K its particle number.
fn quasi_periodic_factor(v: FermionState, m: i64) -> FermionState {
    if m == 0 {
        return v;
    }
    v.map_monomial(|w| {
        let f = -sign_of(w.weight() as i64);
        let s = if m.rem_euclid(2) == 0 { 1 } else { f };
        Some((*w, s, m))
    })
}

/// Matrix element <w, s_lambda(U) mu> as a Laurent polynomial in q.
pub fn schur_matrix_element(lam: &Partition, w: &Word01, mu: &Word01) -> LaurentInt {
    nc_schur_u_apply_any(lam, &FermionState::basis(*mu)).get(w)
}

/// Integer coefficient at q = 1.
pub fn at_one(v: &FermionState, w: &Word01) -> BigInt {
    v.get(w).at_one()
}
