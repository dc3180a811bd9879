use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::partition::Partition;
use crate::state::{BasisLabel, StateVector};

/// Integer polynomial in commuting symbols X_1, X_2, ...; a monomial is the
/// weakly decreasing list of its symbol indices. X_0 is the unit.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NcPoly {
    terms: BTreeMap<Vec<usize>, BigInt>,
}

impl NcPoly {
    pub fn one() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Vec::new(), BigInt::from(1));
        NcPoly { terms }
    }

    pub fn symbol(r: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(if r == 0 { vec![] } else { vec![r] }, BigInt::from(1));
        NcPoly { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_scaled(&mut self, other: &NcPoly, sym: Option<usize>, c: &BigInt) {
        for (m, x) in &other.terms {
            let mut m2 = m.clone();
            if let Some(s) = sym {
                let pos = m2.iter().position(|&y| y < s).unwrap_or(m2.len());
                m2.insert(pos, s);
            }
            let slot = self.terms.entry(m2.clone()).or_default();
            *slot += x * c;
            if slot.is_zero() {
                self.terms.remove(&m2);
            }
        }
    }

    /// Drop every monomial containing a symbol with index > max.
    pub fn truncate(&self, max: usize) -> NcPoly {
        NcPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.first().is_none_or(|&s| s <= max))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }
}

/// det(X_{c_i - i + j}) over commuting symbols, with X_0 = 1 and X_{<0} = 0,
/// by Laplace expansion along rows with memoization over used-column masks.
pub fn jt_det(c: &[usize]) -> NcPoly {
    let l = c.len();
    if l == 0 {
        return NcPoly::one();
    }
    let mut memo: HashMap<u32, NcPoly> = HashMap::new();
    fn rec(row: usize, used: u32, c: &[usize], memo: &mut HashMap<u32, NcPoly>) -> NcPoly {
        let l = c.len();
        if row == l {
            return NcPoly::one();
        }
        if let Some(p) = memo.get(&used) {
            return p.clone();
        }
        let mut out = NcPoly::default();
        let mut sign_pos = 0usize;
        for j in 0..l {
            if used & (1 << j) != 0 {
                continue;
            }
            let idx = c[row] as i64 - row as i64 + j as i64;
            if idx >= 0 {
                let minor = rec(row + 1, used | (1 << j), c, memo);
                let s = if sign_pos % 2 == 0 {
                    BigInt::from(1)
                } else {
                    BigInt::from(-1)
                };
                let sym = if idx == 0 { None } else { Some(idx as usize) };
                out.add_scaled(&minor, sym, &s);
            }
            sign_pos += 1;
        }
        memo.insert(used, out.clone());
        out
    }
    rec(0, 0, c, &mut memo)
}

/// s_lambda = det(e_{lambda^t_i - i + j}) as a polynomial in the e's.
pub fn schur_in_e(lam: &Partition) -> NcPoly {
    jt_det(lam.transpose().parts())
}

/// s_lambda = det(h_{lambda_i - i + j}) as a polynomial in the h's.
pub fn schur_in_h(lam: &Partition) -> NcPoly {
    jt_det(lam.parts())
}

/// Apply a polynomial in commuting operators X_r, given the action of each X_r.
/// Monomials sharing a prefix reuse the partial result.
pub fn apply_poly<L: BasisLabel>(
    poly: &NcPoly,
    v: &StateVector<L>,
    gen: &dyn Fn(usize, &StateVector<L>) -> StateVector<L>,
) -> StateVector<L> {
    let mut out = StateVector::zero();
    let mut cache: HashMap<Vec<usize>, StateVector<L>> = HashMap::new();
    for (mono, c) in poly.terms() {
        // apply from the smallest index up; monomials are stored decreasing
        let mut cur = v.clone();
        let mut key = Vec::new();
        for &s in mono.iter().rev() {
            key.push(s);
            cur = match cache.get(&key) {
                Some(x) => x.clone(),
                None => {
                    let x = gen(s, &cur);
                    cache.insert(key.clone(), x.clone());
                    x
                }
            };
            if cur.is_zero() {
                break;
            }
        }
        if !cur.is_zero() {
            out.add_assign(&cur.scale(&crate::laurent::LaurentInt::from(c.clone())));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::p;

    fn mono(m: &[usize]) -> Vec<usize> {
        m.to_vec()
    }

    #[test]
    fn small_determinants() {
        // s_(1,1) in h: h1^2 - h2
        let d = schur_in_h(&p(&[1, 1]));
        let t: BTreeMap<_, _> = d.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        assert_eq!(t.len(), 2);
        assert_eq!(t[&mono(&[1, 1])], BigInt::from(1));
        assert_eq!(t[&mono(&[2])], BigInt::from(-1));
        // h_3 in e: e1^3 - 2 e2 e1 + e3
        let d = schur_in_e(&p(&[3]));
        let t: BTreeMap<_, _> = d.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        assert_eq!(t[&mono(&[1, 1, 1])], BigInt::from(1));
        assert_eq!(t[&mono(&[2, 1])], BigInt::from(-2));
        assert_eq!(t[&mono(&[3])], BigInt::from(1));
        assert_eq!(schur_in_e(&Partition::empty()), NcPoly::one());
    }

    #[test]
    fn numeric_agreement_with_commutative_schur() {
        use crate::symfunc::{complete_upto, elementary_all, schur_eval};
        use num_complex::Complex64;
        let x = vec![
            Complex64::new(0.3, 0.1),
            Complex64::new(-0.7, 0.4),
            Complex64::new(0.2, -0.5),
        ];
        let e = elementary_all(&x);
        let h = complete_upto(12, &x);
        for m in 0..=6 {
            for lam in Partition::all_of_size(m) {
                let direct = schur_eval(&lam, &x);
                let via = |poly: &NcPoly, vals: &dyn Fn(usize) -> Complex64| -> Complex64 {
                    poly.terms()
                        .map(|(mo, c)| {
                            let c: f64 = c.to_string().parse().unwrap();
                            mo.iter().map(|&s| vals(s)).product::<Complex64>() * c
                        })
                        .sum()
                };
                let a = via(&schur_in_e(&lam), &|s| e.get(s).copied().unwrap_or_default());
                let b = via(&schur_in_h(&lam), &|s| h[s]);
                assert!((a - direct).norm() < 1e-9 && (b - direct).norm() < 1e-9, "{lam}");
            }
        }
    }
}
