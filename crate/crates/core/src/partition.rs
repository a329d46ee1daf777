//! Integer partitions and the small amount of tableau-free combinatorics
//! the rest of the crate needs: conjugation, containment, dominance,
//! enumeration and Pieri strips.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Ordering is by size first and then lexicographically on the parts, so
/// enumeration output is deterministic and a larger partition in dominance
/// order never sorts below a smaller one of the same size.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?}: zero part before a positive part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?}: parts must be weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Builds a partition from parts that are already known to be valid.
    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The `i`th part, 0-indexed, with zeros past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|c| self.0.iter().take_while(|&&p| p > c).count())
            .collect();
        Partition(parts)
    }

    /// True iff no nonzero part is repeated `e` or more times.
    pub fn is_e_regular(&self, e: usize) -> Result<bool> {
        if e < 2 {
            return Err(Error::InvalidParameter(format!("e must be at least 2, got {e}")));
        }
        Ok(self.is_e_regular_unchecked(e))
    }

    pub(crate) fn is_e_regular_unchecked(&self, e: usize) -> bool {
        let mut run = 0;
        let mut prev = 0;
        for &p in &self.0 {
            if p == prev {
                run += 1;
            } else {
                prev = p;
                run = 1;
            }
            if run >= e {
                return false;
            }
        }
        true
    }

    /// `[other] ⊆ [self]`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Dominance order on partitions of the same size.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let (mut s, mut t) = (0, 0);
        for i in 0..self.len().max(other.len()) {
            s += self.part(i);
            t += other.part(i);
            if s < t {
                return false;
            }
        }
        true
    }

    /// Cells `(row, col)`, both 1-indexed, in row-reading order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| (1..=p).map(move |c| (r + 1, c)))
    }

    /// All partitions `λ ⊇ self` with `|λ/self| = s` and no two added
    /// nodes in the same column.
    pub fn add_horizontal_strips(&self, s: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = self.0.clone();
        cur.push(0);
        fn rec(base: &Partition, row: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if row == cur.len() {
                if left == 0 {
                    out.push(Partition::new(cur.clone()).expect("strip stays a partition"));
                }
                return;
            }
            // Row `row` may grow up to the old length of the row above.
            let cap = if row == 0 { left } else { (base.part(row - 1) - base.part(row)).min(left) };
            for add in 0..=cap {
                cur[row] = base.part(row) + add;
                rec(base, row + 1, left - add, cur, out);
            }
            cur[row] = base.part(row);
        }
        rec(self, 0, s, &mut cur, &mut out);
        out.sort();
        out
    }

    /// All partitions `λ ⊇ self` with `|λ/self| = s` and no two added
    /// nodes in the same row.
    pub fn add_vertical_strips(&self, s: usize) -> Vec<Partition> {
        let mut out: Vec<Partition> = self
            .conjugate()
            .add_horizontal_strips(s)
            .into_iter()
            .map(|p| p.conjugate())
            .collect();
        out.sort();
        out
    }

    /// Every partition obtained by removing one node.
    pub fn removable_cells(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .filter(|&r| self.part(r) > self.part(r + 1))
            .map(|r| (r + 1, self.part(r)))
            .collect()
    }

    /// Every `(row, col)` where a node may be added.
    pub fn addable_cells(&self) -> Vec<(usize, usize)> {
        (0..=self.len())
            .filter(|&r| r == 0 || self.part(r - 1) > self.part(r))
            .map(|r| (r + 1, self.part(r) + 1))
            .collect()
    }

    /// Lexicographic comparison of the parts, ignoring size.
    pub fn lex_cmp(&self, other: &Partition) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Accepts `"-"` or the empty string for ∅ and `"3,1,1"` otherwise.
/// Surrounding parentheses are tolerated.
impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if s.is_empty() || s == "-" || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad part {t:?} in partition {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n`, in the crate's canonical order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=left.min(max)).rev() {
            cur.push(p);
            rec(left - p, p, cur, out);
            cur.pop();
        }
    }
    rec(n, n, &mut cur, &mut out);
    out.sort();
    out
}

/// All partitions of `n` whose diagram fits inside `outer`.
pub fn partitions_inside(outer: &Partition, n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(outer: &Partition, row: usize, left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        let cap = outer.part(row).min(max).min(left);
        for p in (1..=cap).rev() {
            cur.push(p);
            rec(outer, row + 1, left - p, p, cur, out);
            cur.pop();
        }
    }
    rec(outer, 0, n, usize::MAX, &mut cur, &mut out);
    out.sort();
    out
}

/// All partitions of `n` whose diagram contains `inner`.
pub fn partitions_containing(inner: &Partition, n: usize) -> Vec<Partition> {
    if inner.size() > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(inner: &Partition, row: usize, left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        // the remaining rows must still be able to cover inner
        let need: usize = inner.parts().iter().skip(row).sum();
        if need > left {
            return;
        }
        if left == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        let lo = inner.part(row).max(1);
        let hi = max.min(left);
        for p in (lo..=hi).rev() {
            cur.push(p);
            rec(inner, row + 1, left - p, p, cur, out);
            cur.pop();
        }
    }
    rec(inner, 0, n, usize::MAX, &mut cur, &mut out);
    out.sort();
    out
}
