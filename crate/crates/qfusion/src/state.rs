use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::LaurentInt;
use crate::weight::AffineWeight;
use crate::word::Word01;

/// Basis labels of the boson and fermion state spaces.
pub trait BasisLabel: Ord + Clone + fmt::Debug + fmt::Display + Send + Sync {
    /// Number of sites (n for bosons, N for fermions).
    fn sites(&self) -> usize;
    /// Particle number (the level k).
    fn level(&self) -> usize;
}

impl BasisLabel for AffineWeight {
    fn sites(&self) -> usize {
        self.n()
    }
    fn level(&self) -> usize {
        AffineWeight::level(self)
    }
}

impl BasisLabel for Word01 {
    fn sites(&self) -> usize {
        self.len()
    }
    fn level(&self) -> usize {
        self.weight()
    }
}

/// Finitely supported vector with exact Laurent coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound(serialize = "L: Serialize", deserialize = "L: Deserialize<'de>"))]
pub struct StateVector<L: BasisLabel> {
    terms: BTreeMap<L, LaurentInt>,
}

pub type BosonState = StateVector<AffineWeight>;
pub type FermionState = StateVector<Word01>;

impl<L: BasisLabel> Default for StateVector<L> {
    fn default() -> Self {
        StateVector { terms: BTreeMap::new() }
    }
}

impl<L: BasisLabel> StateVector<L> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(l: L) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(l, LaurentInt::one());
        StateVector { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&L, &LaurentInt)> {
        self.terms.iter()
    }

    pub fn get(&self, l: &L) -> LaurentInt {
        self.terms.get(l).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, l: L, c: &LaurentInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(l.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&l);
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (l, c) in &other.terms {
            self.add_term(l.clone(), c);
        }
    }

    pub fn sub_assign(&mut self, other: &Self) {
        for (l, c) in &other.terms {
            self.add_term(l.clone(), &-c);
        }
    }

    pub fn scale(&self, c: &LaurentInt) -> Self {
        let mut out = Self::zero();
        for (l, x) in &self.terms {
            out.add_term(l.clone(), &(x * c));
        }
        out
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&LaurentInt::from(c))
    }

    /// Apply a coefficient-wise map (conj, twist, ...).
    pub fn map_coeffs(&self, f: impl Fn(&LaurentInt) -> LaurentInt) -> Self {
        let mut out = Self::zero();
        for (l, x) in &self.terms {
            out.add_term(l.clone(), &f(x));
        }
        out
    }

    /// Extend a monomial operator linearly: each label maps to at most one label,
    /// times sign * x^shift.
    pub fn map_monomial(&self, f: impl Fn(&L) -> Option<(L, i64, i64)>) -> Self {
        let mut out = Self::zero();
        for (l, x) in &self.terms {
            if let Some((l2, sign, shift)) = f(l) {
                let mut c = x.shift(shift);
                if sign < 0 {
                    c = -c;
                }
                out.add_term(l2, &c);
            }
        }
        out
    }

    /// Extend a basis-label operator linearly.
    pub fn apply_linear(&self, f: impl Fn(&L) -> StateVector<L>) -> Self {
        let mut out = Self::zero();
        for (l, x) in &self.terms {
            for (l2, y) in f(l).terms {
                out.add_term(l2, &(x * &y));
            }
        }
        out
    }

    fn space_of(&self) -> Option<usize> {
        self.terms.keys().next().map(|l| l.sites())
    }

    /// Sesquilinear pairing: conjugate-linear in the first slot.
    pub fn inner(&self, other: &Self) -> Result<LaurentInt> {
        if let (Some(a), Some(b)) = (self.space_of(), other.space_of()) {
            if a != b {
                return Err(Error::Mismatch(format!("basis on {a} sites vs {b} sites")));
            }
        }
        let mut acc = LaurentInt::zero();
        for (l, x) in &self.terms {
            if let Some(y) = other.terms.get(l) {
                acc += &(&x.conj() * y);
            }
        }
        Ok(acc)
    }

    /// Specialize the formal variable to 1.
    pub fn at_one(&self) -> BTreeMap<L, BigInt> {
        self.terms
            .iter()
            .map(|(l, c)| (l.clone(), c.at_one()))
            .filter(|(_, c)| *c != BigInt::from(0))
            .collect()
    }

    pub fn eval(&self, x: Complex64) -> Result<BTreeMap<L, Complex64>> {
        self.terms.iter().map(|(l, c)| Ok((l.clone(), c.eval(x)?))).collect()
    }
}

impl<L: BasisLabel> FromIterator<(L, LaurentInt)> for StateVector<L> {
    fn from_iter<I: IntoIterator<Item = (L, LaurentInt)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (l, c) in iter {
            out.add_term(l, &c);
        }
        out
    }
}

impl<L: BasisLabel> fmt::Display for StateVector<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(l, c)| format!("({c}) {l}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Complex-valued vector used by the spectral route.
pub type ComplexState<L> = BTreeMap<L, Complex64>;

pub fn complex_inner<L: Ord>(u: &ComplexState<L>, v: &ComplexState<L>) -> Complex64 {
    u.iter().filter_map(|(l, x)| v.get(l).map(|y| x.conj() * y)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orthonormal_basis() {
        let a = BosonState::basis(AffineWeight::vacuum(3, 1));
        let b = BosonState::basis(AffineWeight::fundamental(3, 1));
        assert_eq!(a.inner(&a).unwrap(), LaurentInt::one());
        assert!(a.inner(&b).unwrap().is_zero());
        let za = a.scale(&LaurentInt::var(1));
        assert_eq!(za.inner(&a).unwrap(), LaurentInt::var(-1));
        assert_eq!(a.inner(&za).unwrap(), LaurentInt::var(1));
    }

    #[test]
    fn mismatch() {
        let a = BosonState::basis(AffineWeight::vacuum(3, 1));
        let b = BosonState::basis(AffineWeight::vacuum(4, 1));
        assert!(a.inner(&b).is_err());
    }

    #[test]
    fn sesquilinear() {
        let a = BosonState::basis(AffineWeight::vacuum(3, 1));
        let b = BosonState::basis(AffineWeight::fundamental(3, 1));
        let mut u = a.scale(&LaurentInt::var(2));
        u.add_assign(&b.scale_int(3));
        let mut v = a.scale(&LaurentInt::var(-1));
        v.add_assign(&b);
        let c = LaurentInt::monomial(5, 1);
        assert_eq!(u.scale(&c).inner(&v).unwrap(), &c.conj() * &u.inner(&v).unwrap());
        assert_eq!(u.inner(&v.scale(&c)).unwrap(), &c * &u.inner(&v).unwrap());
    }
}
