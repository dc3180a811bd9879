use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Binary word w_1...w_N. Bit i (1-based) is stored at position i-1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word01 {
    len: u8,
    bits: u64,
}

impl Word01 {
    pub fn new(len: usize, bits: u64) -> Self {
        assert!(len <= 63, "word too long");
        debug_assert!(bits >> len == 0);
        Word01 { len: len as u8, bits }
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        let b = bits
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, &x)| acc | ((x as u64 & 1) << i));
        Word01::new(bits.len(), b)
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn raw(&self) -> u64 {
        self.bits
    }

    /// Number of ones.
    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// w_i for 1 <= i <= N.
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(1 <= i && i <= self.len());
        (self.bits >> (i - 1)) & 1 == 1
    }

    pub(crate) fn with(&self, i: usize, v: bool) -> Self {
        let m = 1u64 << (i - 1);
        Word01 {
            len: self.len,
            bits: if v { self.bits | m } else { self.bits & !m },
        }
    }

    /// n_i(w) = number of ones among w_1..w_i, extended by n_{i+N} = n_i + k.
    pub fn n_count(&self, i: i64) -> i64 {
        let nn = self.len() as i64;
        let k = self.weight() as i64;
        let q = i.div_euclid(nn);
        let r = i.rem_euclid(nn);
        let mask = if r == 0 { 0 } else { (1u64 << r) - 1 };
        q * k + (self.bits & mask).count_ones() as i64
    }

    /// Rot(w) = w_2 ... w_N w_1.
    pub fn rot(&self) -> Self {
        let n = self.len();
        if n == 0 {
            return *self;
        }
        let first = self.bits & 1;
        Word01 {
            len: self.len,
            bits: (self.bits >> 1) | (first << (n - 1)),
        }
    }

    /// Reversal w_N ... w_1.
    pub fn reverse(&self) -> Self {
        let n = self.len();
        let b = (0..n).fold(0u64, |acc, i| acc | (((self.bits >> i) & 1) << (n - 1 - i)));
        Word01 { len: self.len, bits: b }
    }

    /// Flip every bit.
    pub fn complement(&self) -> Self {
        let mask = if self.len() == 0 { 0 } else { (1u64 << self.len()) - 1 };
        Word01 {
            len: self.len,
            bits: !self.bits & mask,
        }
    }

    /// 1-positions l_1 < ... < l_k.
    pub fn positions(&self) -> Vec<usize> {
        (1..=self.len()).filter(|&i| self.get(i)).collect()
    }

    /// l_i = lambda_{k+1-i} + i.
    pub fn from_partition(lam: &Partition, k: usize, nn: usize) -> Result<Self> {
        if k > nn {
            return Err(Error::Param(format!("k={k} > N={nn}")));
        }
        lam.check_box(k, nn - k)?;
        let mut bits = 0u64;
        for i in 1..=k {
            let l = lam.part(k - i) + i;
            bits |= 1 << (l - 1);
        }
        Ok(Word01::new(nn, bits))
    }

    pub fn to_partition(&self) -> Partition {
        let pos = self.positions();
        let k = pos.len();
        let parts = (0..k).map(|j| pos[k - 1 - j] - (k - j)).collect();
        Partition::from_sorted(parts)
    }

    /// All words of length N and weight k, ordered by their partitions.
    pub fn all(nn: usize, k: usize) -> Vec<Self> {
        Partition::all_in_box(k, nn - k)
            .iter()
            .map(|l| Word01::from_partition(l, k, nn).expect("in box"))
            .collect()
    }

    /// Every word of length N.
    pub fn all_levels(nn: usize) -> Vec<Self> {
        (0..=nn).flat_map(|k| Word01::all(nn, k)).collect()
    }
}

/// Rot on partitions in the k x n box (N = n + k).
pub fn rot_partition(lam: &Partition, k: usize, n: usize) -> Partition {
    if k == 0 {
        return lam.clone();
    }
    if lam.len() == k {
        Partition::from_sorted(lam.parts().iter().map(|x| x - 1).collect())
    } else {
        let mut parts = vec![n];
        parts.extend((0..k - 1).map(|i| lam.part(i)));
        Partition::from_sorted(parts)
    }
}

impl fmt::Display for Word01 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.len() {
            write!(f, "{}", if self.get(i) { '1' } else { '0' })?;
        }
        Ok(())
    }
}

impl FromStr for Word01 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(0u8),
                '1' => Ok(1u8),
                _ => Err(Error::Parse(format!("bad bit {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        if bits.len() > 63 {
            return Err(Error::Parse("word longer than 63".into()));
        }
        Ok(Word01::from_bits(&bits))
    }
}
