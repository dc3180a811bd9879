use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Level-k dominant integral weight of affine sl(n), as Dynkin labels
/// (m_0, ..., m_{n-1}). The level is the sum of the labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AffineWeight {
    labels: Vec<usize>,
}

impl AffineWeight {
    pub fn new(labels: Vec<usize>) -> Result<Self> {
        if labels.len() < 2 {
            return Err(Error::Param(format!("need n >= 2 labels, got {}", labels.len())));
        }
        Ok(AffineWeight { labels })
    }

    /// k * omega_0.
    pub fn vacuum(n: usize, k: usize) -> Self {
        let mut labels = vec![0; n];
        labels[0] = k;
        AffineWeight { labels }
    }

    /// The fundamental weight omega_i (level 1).
    pub fn fundamental(n: usize, i: usize) -> Self {
        let mut labels = vec![0; n];
        labels[i % n] = 1;
        AffineWeight { labels }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn level(&self) -> usize {
        self.labels.iter().sum()
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> usize {
        self.labels[i % self.n()]
    }

    pub(crate) fn labels_mut(&mut self) -> &mut Vec<usize> {
        &mut self.labels
    }

    /// The map P: mu_i - mu_{i+1} = m_i, i = 1..n-1. Lies in the (n-1) x k box.
    pub fn to_partition(&self) -> Partition {
        let n = self.n();
        let mut parts = vec![0; n - 1];
        let mut acc = 0;
        for i in (1..n).rev() {
            acc += self.labels[i];
            parts[i - 1] = acc;
        }
        Partition::from_sorted(parts)
    }

    /// The map P-hat: P plus m_0 columns of height n. Lies in the n x k box.
    pub fn to_boxed(&self) -> Partition {
        self.to_partition().add_full_columns(self.n(), self.labels[0])
    }

    /// Inverse of P on the (n-1) x k box.
    pub fn from_partition(mu: &Partition, n: usize, k: usize) -> Result<Self> {
        mu.check_box(n - 1, k)?;
        let mut labels = vec![0; n];
        labels[0] = k - mu.first();
        for i in 1..n {
            labels[i] = mu.part(i - 1) - mu.part(i);
        }
        Ok(AffineWeight { labels })
    }

    /// Inverse of P-hat up to n-columns: strips full columns and applies P^{-1}.
    pub fn from_boxed(mu: &Partition, n: usize, k: usize) -> Result<Self> {
        mu.check_box(n, k)?;
        let (red, _) = mu.strip_full_columns(n);
        Self::from_partition(&red, n, k)
    }

    /// rot: label m_i moves to slot i-1.
    pub fn rot(&self) -> Self {
        let n = self.n();
        AffineWeight {
            labels: (0..n).map(|j| self.labels[(j + 1) % n]).collect(),
        }
    }

    /// rot^{-1}: on diagrams this adds a row of k boxes on top and strips the n-columns.
    pub fn rot_inv(&self) -> Self {
        let n = self.n();
        AffineWeight {
            labels: (0..n).map(|j| self.labels[(j + n - 1) % n]).collect(),
        }
    }

    /// flip: fixes m_0, reverses m_1..m_{n-1}.
    pub fn flip(&self) -> Self {
        let n = self.n();
        AffineWeight {
            labels: (0..n).map(|j| self.labels[(n - j) % n]).collect(),
        }
    }

    /// All level-k weights, ordered lexicographically by their P-partition.
    pub fn all(n: usize, k: usize) -> Vec<Self> {
        Partition::all_in_box(n - 1, k)
            .iter()
            .map(|mu| Self::from_partition(mu, n, k).expect("in box"))
            .collect()
    }
}

/// rot^{-1} computed on diagrams: add a k-row, strip n-columns.
pub fn rot_inv_partition(mu: &Partition, n: usize, k: usize) -> Partition {
    let mut parts = vec![k];
    parts.extend_from_slice(mu.parts());
    Partition::from_sorted(parts).strip_full_columns(n).0
}

impl fmt::Display for AffineWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.labels.iter().map(|m| m.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::p;

    fn w(l: &[usize]) -> AffineWeight {
        AffineWeight::new(l.to_vec()).unwrap()
    }

    #[test]
    fn p_map_examples() {
        assert_eq!(w(&[2, 1, 0]).to_partition(), p(&[1]));
        assert_eq!(w(&[0, 0, 3]).to_partition(), p(&[3, 3]));
        // 3 omega_1 at n=3
        assert_eq!(w(&[0, 3, 0]).to_partition(), p(&[3]));
        assert_eq!(AffineWeight::fundamental(3, 0).to_boxed(), p(&[1, 1, 1]));
        assert_eq!(AffineWeight::fundamental(3, 1).to_boxed(), p(&[1]));
    }

    #[test]
    fn p_roundtrip_exhaustive() {
        for n in 2..=4 {
            for k in 0..=4 {
                let all = AffineWeight::all(n, k);
                assert_eq!(all.len(), Partition::all_in_box(n - 1, k).len());
                for l in &all {
                    assert_eq!(l.level(), k);
                    assert_eq!(&AffineWeight::from_partition(&l.to_partition(), n, k).unwrap(), l);
                    assert_eq!(&AffineWeight::from_boxed(&l.to_boxed(), n, k).unwrap(), l);
                    assert!(l.to_boxed().fits(n, k));
                    assert_eq!(l.to_boxed().first(), k);
                }
                let mut boxed: Vec<_> = all.iter().map(|l| l.to_boxed()).collect();
                boxed.sort();
                boxed.dedup();
                assert_eq!(boxed.len(), all.len());
            }
        }
    }

    #[test]
    fn rot_flip() {
        assert_eq!(w(&[1, 1, 0]).rot(), w(&[1, 0, 1]));
        assert_eq!(w(&[2, 1, 1]).flip(), w(&[2, 1, 1]));
        for n in 2..=4 {
            for k in 0..=3 {
                for l in AffineWeight::all(n, k) {
                    let mut r = l.clone();
                    for _ in 0..n {
                        r = r.rot();
                    }
                    assert_eq!(r, l);
                    assert_eq!(l.flip().flip(), l);
                    assert_eq!(l.rot().rot_inv(), l);
                    // diagram description of rot^{-1}
                    assert_eq!(rot_inv_partition(&l.to_partition(), n, k), l.rot_inv().to_partition());
                }
            }
        }
    }

    #[test]
    fn flip_is_complement() {
        let (n, k) = (3, 2);
        for l in AffineWeight::all(n, k) {
            let c = l.to_partition().complement(n, k).unwrap();
            assert_eq!(l.flip().to_boxed(), c);
        }
    }
}
