use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// always stripped so that equal partitions compare equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotPartition(parts));
        }
        Ok(Self::from_sorted(parts))
    }

    /// Caller guarantees weakly decreasing input.
    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// i-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn first(&self) -> usize {
        self.part(0)
    }

    pub fn fits(&self, rows: usize, cols: usize) -> bool {
        self.len() <= rows && self.first() <= cols
    }

    pub fn check_box(&self, rows: usize, cols: usize) -> Result<()> {
        if self.fits(rows, cols) {
            Ok(())
        } else {
            Err(Error::BoxViolation {
                part: self.to_string(),
                rows,
                cols,
            })
        }
    }

    pub fn transpose(&self) -> Partition {
        let c = self.first();
        let parts = (0..c)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// Complement inside the rows x cols box.
    pub fn complement(&self, rows: usize, cols: usize) -> Result<Partition> {
        self.check_box(rows, cols)?;
        let parts = (0..rows).map(|i| cols - self.part(rows - 1 - i)).collect();
        Ok(Partition::from_sorted(parts))
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| self.parts[i] >= other.parts[i])
    }

    /// Remove every column of height `h` (the diagram must have length <= h).
    /// Returns the reduced partition and the number of columns removed.
    pub fn strip_full_columns(&self, h: usize) -> (Partition, usize) {
        if h == 0 || self.len() < h {
            return (self.clone(), 0);
        }
        let m = self.part(h - 1);
        (Partition::from_sorted(self.parts.iter().map(|p| p - m).collect()), m)
    }

    /// Add `m` columns of height `h` on the left.
    pub fn add_full_columns(&self, h: usize, m: usize) -> Partition {
        let mut parts: Vec<usize> = (0..h.max(self.len())).map(|i| self.part(i)).collect();
        for p in parts.iter_mut().take(h) {
            *p += m;
        }
        Partition::from_sorted(parts)
    }

    /// All partitions inside the rows x cols box, in lexicographic order.
    pub fn all_in_box(rows: usize, cols: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(rows);
        fn rec(rows: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if cur.len() == rows {
                out.push(Partition::from_sorted(cur.clone()));
                return;
            }
            for p in 0..=max {
                cur.push(p);
                rec(rows, p, cur, out);
                cur.pop();
            }
        }
        rec(rows, cols, &mut cur, &mut out);
        out.sort();
        out
    }

    /// All partitions of `n`.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition::from_sorted(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All mu with self/mu a horizontal strip of size r.
    pub fn remove_horizontal_strip(&self, r: usize) -> Vec<Partition> {
        let l = self.len();
        let mut out = Vec::new();
        // mu_i in [lambda_{i+1}, lambda_i]
        fn rec(lam: &[usize], i: usize, rem: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if i == lam.len() {
                if rem == 0 {
                    out.push(Partition::from_sorted(cur.clone()));
                }
                return;
            }
            let lo = lam.get(i + 1).copied().unwrap_or(0);
            for mu in lo..=lam[i] {
                let take = lam[i] - mu;
                if take > rem {
                    continue;
                }
                cur.push(mu);
                rec(lam, i + 1, rem - take, cur, out);
                cur.pop();
            }
        }
        let mut cur = Vec::with_capacity(l);
        rec(&self.parts, 0, r, &mut cur, &mut out);
        out
    }

    /// All mu with self/mu a vertical strip of size r.
    pub fn remove_vertical_strip(&self, r: usize) -> Vec<Partition> {
        self.transpose()
            .remove_horizontal_strip(r)
            .into_iter()
            .map(|p| p.transpose())
            .collect()
    }

    /// All nu with nu/self a horizontal strip of size r (no box constraint).
    pub fn add_horizontal_strip(&self, r: usize) -> Vec<Partition> {
        let l = self.len();
        let mut out = Vec::new();
        fn rec(lam: &[usize], i: usize, rem: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if i == lam.len() + 1 {
                if rem == 0 {
                    out.push(Partition::from_sorted(cur.clone()));
                }
                return;
            }
            let li = lam.get(i).copied().unwrap_or(0);
            let hi = if i == 0 { li + rem } else { lam[i - 1] };
            for nu in li..=hi {
                let add = nu - li;
                if add > rem {
                    break;
                }
                cur.push(nu);
                rec(lam, i + 1, rem - add, cur, out);
                cur.pop();
            }
        }
        rec(&self.parts, 0, r, &mut Vec::with_capacity(l + 1), &mut out);
        out
    }

    /// All nu with nu/self a vertical strip of size r (no box constraint).
    pub fn add_vertical_strip(&self, r: usize) -> Vec<Partition> {
        self.transpose()
            .add_horizontal_strip(r)
            .into_iter()
            .map(|p| p.transpose())
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// "3,3,2,1"; "0" or "" is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Shorthand used heavily in tests.
pub fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("not a partition")
}
