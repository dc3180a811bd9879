//! Words in the local (affine) plactic algebra: the Deng-Du correspondence
//! between words and aperiodic multipartitions, and a normal form for
//! tableaux under the local plactic relations.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::boson::apply_word;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::state::BosonState;
use crate::weight::AffineWeight;

/// An n-tuple of partitions (pi^(0), ..., pi^(n-1)).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MultiPartition {
    parts: Vec<Partition>,
}

fn columns_of(p: &Partition) -> Vec<usize> {
    p.transpose().parts().to_vec()
}

fn from_columns(mut cols: Vec<usize>) -> Partition {
    cols.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(cols).expect("sorted").transpose()
}

impl MultiPartition {
    pub fn new(parts: Vec<Partition>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Param("multipartition needs n >= 1 components".into()));
        }
        Ok(MultiPartition { parts })
    }

    pub fn empty(n: usize) -> Self {
        MultiPartition {
            parts: vec![Partition::empty(); n.max(1)],
        }
    }

    pub fn n(&self) -> usize {
        self.parts.len()
    }

    pub fn components(&self) -> &[Partition] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(Partition::size).sum()
    }

    /// Every column height l >= 1 is missing from some component.
    pub fn is_aperiodic(&self) -> bool {
        let cols: Vec<Vec<usize>> = self.parts.iter().map(columns_of).collect();
        let hmax = cols.iter().flatten().copied().max().unwrap_or(0);
        (1..=hmax).all(|l| cols.iter().any(|c| !c.contains(&l)))
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join("|"))
    }
}

impl FromStr for MultiPartition {
    type Err = Error;

    /// "4,2,2,2|3,1,1|4,4,2,2"; "0" or "" for an empty component.
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split('|')
            .map(|t| t.trim().trim_start_matches('(').trim_end_matches(')').parse())
            .collect::<Result<Vec<Partition>>>()?;
        MultiPartition::new(parts)
    }
}

/// a_i on a multipartition: add a first-row box to pi^(i) if pi^(i+1) is
/// empty, else move the first column of pi^(i+1), one box longer, into pi^(i).
pub fn dengdu_apply(i: usize, pi: &MultiPartition) -> MultiPartition {
    let n = pi.n();
    let (i, next) = (i % n, (i + 1) % n);
    let mut parts = pi.parts.clone();
    let h = parts[next].len();
    if h == 0 {
        let mut cols = columns_of(&parts[i]);
        cols.push(1);
        parts[i] = from_columns(cols);
    } else {
        let rest: Vec<usize> = parts[next].parts().iter().map(|x| x - 1).collect();
        parts[next] = Partition::new(rest).expect("still decreasing");
        let mut cols = columns_of(&parts[i]);
        cols.push(h + 1);
        parts[i] = from_columns(cols);
    }
    MultiPartition { parts }
}

/// pi(w) = w(empty, ..., empty); the rightmost letter acts first. With this
/// reading pi is constant on classes of the opposite monoid: reversed words
/// that are plactic-equivalent give the same multipartition.
pub fn word_to_multipartition(w: &[usize], n: usize) -> MultiPartition {
    w.iter()
        .rev()
        .fold(MultiPartition::empty(n), |pi, &i| dengdu_apply(i, &pi))
}

/// Standard word of an aperiodic multipartition. Columns are pushed down to a
/// common baseline; cyclically for c = 0, 1, ..., every column whose top label
/// is c and which is strictly taller than all columns with top label c+1 loses
/// its top box, and the letter a_c is recorded.
pub fn multipartition_to_word(pi: &MultiPartition) -> Result<Vec<usize>> {
    let n = pi.n();
    // (top label, height)
    let mut towers: Vec<(usize, usize)> = pi
        .parts
        .iter()
        .enumerate()
        .flat_map(|(i, p)| columns_of(p).into_iter().map(move |h| (i, h)))
        .collect();
    let mut word = Vec::new();
    let (mut c, mut idle) = (0, 0);
    while !towers.is_empty() {
        let next = (c + 1) % n;
        let bar = towers.iter().filter(|t| t.0 == next).map(|t| t.1).max().unwrap_or(0);
        let mut removed = 0;
        for t in towers.iter_mut().filter(|t| t.0 == c && t.1 > bar) {
            *t = (next, t.1 - 1);
            removed += 1;
        }
        if removed == 0 {
            idle += 1;
            if idle >= n {
                return Err(Error::NotAperiodic);
            }
        } else {
            idle = 0;
            towers.retain(|t| t.1 > 0);
            word.extend(std::iter::repeat(c).take(removed));
        }
        c = next;
    }
    Ok(word)
}

/// "a0^2a2^4a1" style, as accepted by [`parse_word`].
pub fn format_word(w: &[usize]) -> String {
    let mut s = String::new();
    let mut i = 0;
    while i < w.len() {
        let mut j = i;
        while j < w.len() && w[j] == w[i] {
            j += 1;
        }
        s.push_str(&format!("a{}", w[i]));
        if j - i > 1 {
            s.push_str(&format!("^{}", j - i));
        }
        i = j;
    }
    s
}

/// Parse "a0^2 a2^4 a1" (spaces optional) or a plain list "0,0,2,2".
pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = |t: &str| Error::Parse(format!("bad word token {t:?}"));
    if s.is_empty() {
        return Ok(Vec::new());
    }
    if !s.starts_with('a') {
        return s.split(',').map(|t| t.parse::<usize>().map_err(|_| bad(t))).collect();
    }
    let mut out = Vec::new();
    for tok in s.split('a').skip(1) {
        let (g, e) = match tok.split_once('^') {
            Some((g, e)) => (g, e.parse::<usize>().map_err(|_| bad(tok))?),
            None => (tok, 1),
        };
        let g = g.trim_matches(|c| c == '{' || c == '}' || c == '_');
        let g = g.parse::<usize>().map_err(|_| bad(tok))?;
        out.extend(std::iter::repeat(g).take(e));
    }
    Ok(out)
}

/// Semistandard tableau stored by rows (English notation).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let rows: Vec<Vec<usize>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
        let t = Tableau { rows };
        if !t.is_semistandard() {
            return Err(Error::Param(format!("not a semistandard tableau: {t}")));
        }
        Ok(t)
    }

    pub fn empty() -> Self {
        Tableau { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).unwrap_or_default()
    }

    pub fn max_entry(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    fn is_semistandard(&self) -> bool {
        let shape_ok = self.rows.windows(2).all(|w| w[0].len() >= w[1].len());
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|p| p[0] <= p[1]));
        let cols_ok = self.rows.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(b, a)| a < b));
        let pos = self.rows.iter().flatten().all(|&x| x >= 1);
        shape_ok && rows_ok && cols_ok && pos
    }

    /// Columns, top to bottom.
    pub fn columns(&self) -> Vec<Vec<usize>> {
        let w = self.rows.first().map_or(0, Vec::len);
        (0..w)
            .map(|c| self.rows.iter().filter_map(|r| r.get(c).copied()).collect())
            .collect()
    }

    /// In the strict class: the number of j's in row i is at most the
    /// number of (j-1)'s in row i-1.
    pub fn is_strict(&self) -> bool {
        let count = |r: &[usize], v: usize| r.iter().filter(|&&x| x == v).count();
        self.rows
            .windows(2)
            .all(|w| w[1].iter().all(|&j| count(&w[1], j) <= count(&w[0], j - 1)))
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", s.join("\n"))
    }
}

impl FromStr for Tableau {
    type Err = Error;

    /// Newline- (or '/'-) separated rows of comma-separated entries.
    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .split(['\n', '/'])
            .map(str::trim)
            .filter(|r| !r.is_empty())
            .map(|r| {
                r.split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<usize>()
                            .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Tableau::new(rows)
    }
}

/// Columns left to right, each read bottom to top; the result is a word
/// a_{w_1} a_{w_2} ... whose rightmost letter acts first.
pub fn column_word(t: &Tableau) -> Vec<usize> {
    t.columns().into_iter().flat_map(|c| c.into_iter().rev()).collect()
}

/// Situations of the basic procedure, in dispatch order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Rule {
    /// (1) next column empty: start a new column.
    Empty,
    /// (2) contains j-1 and j: pass j on.
    BelowAndEqual,
    /// (3) contains j-1 only: place j under it.
    Below,
    /// (4) contains j+1 only: swap in j, pass j+1 on.
    Above,
    /// (5) contains j+1 and j: pass j on.
    AboveAndEqual,
    /// (6a) contains just j: duplicate the column.
    Copy,
    /// (6b) all entries greater: swap in j for the top, pass the top on.
    AllGreater,
    /// (6c) all entries smaller: pass j on.
    AllLess,
}

impl Rule {
    pub fn label(self) -> &'static str {
        match self {
            Rule::Empty => "(1)",
            Rule::BelowAndEqual => "(2)",
            Rule::Below => "(3)",
            Rule::Above => "(4)",
            Rule::AboveAndEqual => "(5)",
            Rule::Copy => "(6a)",
            Rule::AllGreater => "(6b)",
            Rule::AllLess => "(6c)",
        }
    }
}

/// One step of the normalization: `rule` applied at column `column`
/// (0-based) while carrying `value`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleApplication {
    pub rule: Rule,
    pub column: usize,
    pub value: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Cell {
    v: usize,
    crossed: bool,
}

impl Cell {
    fn new(v: usize) -> Self {
        Cell { v, crossed: false }
    }
}

struct Grid {
    cols: Vec<Vec<Cell>>,
    log: Vec<RuleApplication>,
}

impl Grid {
    fn has(&self, d: usize, x: usize) -> bool {
        self.cols[d].iter().any(|c| !c.crossed && c.v == x)
    }

    fn pos(&self, d: usize, x: usize) -> usize {
        self.cols[d]
            .iter()
            .position(|c| !c.crossed && c.v == x)
            .expect("present")
    }

    /// Row index of the lower member of the first pair of consecutive
    /// (uncrossed) entries differing by more than one.
    fn breaking(&self, d: usize) -> Option<usize> {
        let live: Vec<(usize, usize)> = self.cols[d]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.crossed)
            .map(|(r, c)| (r, c.v))
            .collect();
        live.windows(2).find(|w| w[1].1 > w[0].1 + 1).map(|w| w[1].0)
    }

    fn push_log(&mut self, rule: Rule, column: usize, value: usize) {
        self.log.push(RuleApplication { rule, column, value });
    }

    /// Basic procedure: value j leaves column c and travels right.
    fn carry(&mut self, mut c: usize, mut j: usize) {
        loop {
            let d = c + 1;
            if d == self.cols.len() || self.cols[d].iter().all(|x| x.crossed) {
                self.push_log(Rule::Empty, d, j);
                if d == self.cols.len() {
                    self.cols.push(vec![Cell::new(j)]);
                } else {
                    self.cols[d][0] = Cell::new(j);
                }
                return;
            }
            let lower = j > 1 && self.has(d, j - 1);
            let (upper, same) = (self.has(d, j + 1), self.has(d, j));
            if lower && same {
                self.push_log(Rule::BelowAndEqual, d, j);
            } else if lower {
                self.push_log(Rule::Below, d, j);
                let p = self.pos(d, j - 1) + 1;
                let col = &mut self.cols[d];
                if p < col.len() && col[p].crossed {
                    col[p] = Cell::new(j);
                } else {
                    col.insert(p, Cell::new(j));
                }
                return;
            } else if upper && !same {
                self.push_log(Rule::Above, d, j);
                let p = self.pos(d, j + 1);
                self.cols[d][p].v = j;
                j += 1;
            } else if upper {
                self.push_log(Rule::AboveAndEqual, d, j);
            } else if same {
                self.push_log(Rule::Copy, d, j);
                let copy: Vec<Cell> = self.cols[d]
                    .iter()
                    .map(|x| Cell {
                        v: x.v,
                        crossed: x.crossed || x.v != j,
                    })
                    .collect();
                self.cols.insert(d + 1, copy);
                return;
            } else if self.cols[d].iter().filter(|x| !x.crossed).all(|x| x.v > j) {
                self.push_log(Rule::AllGreater, d, j);
                let top = self.cols[d].iter_mut().find(|x| !x.crossed).expect("nonempty");
                std::mem::swap(&mut top.v, &mut j);
            } else {
                self.push_log(Rule::AllLess, d, j);
            }
            c = d;
        }
    }

    /// Drop crossed cells and slide every row to the left.
    fn finish(&self) -> Tableau {
        let h = self.cols.iter().map(Vec::len).max().unwrap_or(0);
        let rows = (0..h)
            .map(|r| {
                self.cols
                    .iter()
                    .filter_map(|c| c.get(r).filter(|x| !x.crossed).map(|x| x.v))
                    .collect()
            })
            .collect();
        Tableau { rows }.trimmed()
    }
}

impl Tableau {
    fn trimmed(mut self) -> Self {
        self.rows.retain(|r| !r.is_empty());
        self
    }
}

/// D(T): a tableau in the strict class whose column word is equivalent to
/// that of T under the local plactic relations, together with the list of
/// rule applications in order.
pub fn normalize_tableau_logged(t: &Tableau, n: usize) -> Result<(Tableau, Vec<RuleApplication>)> {
    if t.max_entry() >= n.max(1) {
        return Err(Error::Param(format!("entries must lie in 1..={}", n.saturating_sub(1))));
    }
    if t.is_strict() {
        return Ok((t.clone(), Vec::new()));
    }
    let mut g = Grid {
        cols: t
            .columns()
            .into_iter()
            .map(|c| c.into_iter().map(Cell::new).collect())
            .collect(),
        log: Vec::new(),
    };
    while let Some((c, r)) = (0..g.cols.len()).rev().find_map(|c| g.breaking(c).map(|r| (c, r))) {
        g.cols[c][r].crossed = true;
        let j = g.cols[c][r].v;
        g.carry(c, j);
    }
    Ok((g.finish(), g.log))
}

pub fn normalize_tableau(t: &Tableau, n: usize) -> Result<Tableau> {
    normalize_tableau_logged(t, n).map(|x| x.0)
}

/// Two words of the finite local plactic algebra act identically on every
/// basis vector of the level-k boson space for sl(n).
pub fn words_act_equal(w1: &[usize], w2: &[usize], n: usize, k: usize) -> bool {
    AffineWeight::all(n, k).into_iter().all(|b| {
        let v = BosonState::basis(b);
        apply_word(w1, &v) == apply_word(w2, &v)
    })
}
