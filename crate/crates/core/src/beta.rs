//! β-sets, abacus runners, and single-partition cores and quotients.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A set of integers containing every integer below some point.
///
/// Stored as the first non-bead `threshold` together with the finitely many
/// beads above it, largest first. Every position `< threshold` is a bead and
/// `threshold` itself is not, so the representation is canonical.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BetaSet {
    threshold: i64,
    beads: Vec<i64>,
}

pub(crate) fn div_floor(a: i64, e: i64) -> i64 {
    a.div_euclid(e)
}

pub(crate) fn modulo(a: i64, e: i64) -> i64 {
    a.rem_euclid(e)
}

impl BetaSet {
    /// `{λ_i − i + a : i ≥ 1}`.
    pub fn new(lambda: &Partition, a: i64) -> Self {
        let beads = lambda
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &p)| p as i64 - (i as i64 + 1) + a)
            .collect();
        BetaSet { threshold: a - lambda.len() as i64, beads }
    }

    /// Builds a β-set from a point `floor` below which everything is a bead
    /// and the beads at or above it.
    pub fn from_beads(floor: i64, beads: impl IntoIterator<Item = i64>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for b in beads {
            if b < floor {
                return Err(Error::InvalidParameter(format!("bead {b} lies below the floor {floor}")));
            }
            set.insert(b);
        }
        let mut threshold = floor;
        while set.remove(&threshold) {
            threshold += 1;
        }
        Ok(BetaSet { threshold, beads: set.into_iter().rev().collect() })
    }

    pub fn threshold(&self) -> i64 {
        self.threshold
    }

    /// The beads at or above the threshold, in decreasing order.
    pub fn upper_beads(&self) -> &[i64] {
        &self.beads
    }

    pub fn charge(&self) -> i64 {
        self.threshold + self.beads.len() as i64
    }

    /// The charge modulo `e`, recovered by counting the beads at or above
    /// the largest multiple of `e` below which every position is a bead.
    pub fn charge_mod(&self, e: usize) -> i64 {
        let e = e as i64;
        let x = div_floor(self.threshold, e);
        let m = (self.threshold - x * e) + self.beads.len() as i64;
        modulo(m, e)
    }

    pub fn contains(&self, b: i64) -> bool {
        b < self.threshold || self.beads.binary_search_by(|x| b.cmp(x)).is_ok()
    }

    /// The first `n` beads in decreasing order.
    pub fn first_beads(&self, n: usize) -> Vec<i64> {
        let mut out: Vec<i64> = self.beads.iter().copied().take(n).collect();
        let mut next = self.threshold - 1;
        while out.len() < n {
            out.push(next);
            next -= 1;
        }
        out
    }

    pub fn partition(&self) -> Partition {
        let c = self.charge();
        let parts = self
            .beads
            .iter()
            .enumerate()
            .map(|(i, &b)| (b + i as i64 + 1 - c) as usize)
            .collect();
        Partition::from_parts_unchecked(parts)
    }

    pub fn to_partition_and_charge(&self) -> (Partition, i64) {
        (self.partition(), self.charge())
    }

    /// Applies an injective map that moves only finitely many beads and
    /// fixes every position below `floor`.
    pub(crate) fn map_beads(&self, floor: i64, f: impl Fn(i64) -> i64) -> BetaSet {
        let lo = floor.min(self.threshold);
        let mut moved: Vec<i64> = (lo..self.threshold).chain(self.beads.iter().copied()).map(f).collect();
        moved.sort_unstable();
        BetaSet::from_beads(lo, moved).expect("map keeps beads above the floor")
    }

    /// Splits into `e` runner β-sets: runner `i` holds `(b − i)/e` for the
    /// beads `b ≡ i mod e`.
    pub fn runners(&self, e: usize) -> Vec<BetaSet> {
        let e = e as i64;
        (0..e)
            .map(|i| {
                // smallest level g with g·e + i ≥ threshold
                let floor = div_floor(self.threshold - i + e - 1, e);
                let beads = self.beads.iter().filter(|&&b| modulo(b, e) == i).map(|&b| (b - i) / e);
                BetaSet::from_beads(floor, beads).expect("runner beads lie above their floor")
            })
            .collect()
    }

    /// Inverse of [`BetaSet::runners`].
    pub fn from_runners(runners: &[BetaSet]) -> BetaSet {
        let e = runners.len() as i64;
        let floor = runners
            .iter()
            .enumerate()
            .map(|(i, r)| r.threshold * e + i as i64)
            .min()
            .unwrap_or(0);
        let mut beads = Vec::new();
        for (i, r) in runners.iter().enumerate() {
            let i = i as i64;
            for g in div_floor(floor - i, e)..r.threshold {
                let b = g * e + i;
                if b >= floor {
                    beads.push(b);
                }
            }
            beads.extend(r.beads.iter().map(|&g| g * e + i));
        }
        BetaSet::from_beads(floor, beads).expect("runner beads lie above the floor")
    }

    /// Moves every bead as high as it will go on its runner.
    pub fn core(&self, e: usize) -> BetaSet {
        let runners: Vec<BetaSet> = self
            .runners(e)
            .iter()
            .map(|r| BetaSet::new(&Partition::empty(), r.charge()))
            .collect();
        BetaSet::from_runners(&runners)
    }
}

impl fmt::Debug for BetaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for b in &self.beads {
            write!(f, "{b},")?;
        }
        write!(f, "{},{},…}}", self.threshold - 1, self.threshold - 2)
    }
}

/// Core, quotient and weight of a single partition drawn on an abacus
/// with `e` runners at charge `a`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoreQuotient {
    pub core: Partition,
    pub quotient: Vec<Partition>,
    /// Runner charges `c_i`; they sum to `a` and determine the core.
    pub runner_charges: Vec<i64>,
    pub weight: usize,
}

pub fn e_core_and_quotient(lambda: &Partition, a: i64, e: usize) -> Result<CoreQuotient> {
    if e < 2 {
        return Err(Error::InvalidParameter(format!("e must be at least 2, got {e}")));
    }
    let beta = BetaSet::new(lambda, a);
    let runners = beta.runners(e);
    let quotient: Vec<Partition> = runners.iter().map(BetaSet::partition).collect();
    let runner_charges: Vec<i64> = runners.iter().map(BetaSet::charge).collect();
    let weight = quotient.iter().map(Partition::size).sum();
    let core = beta.core(e).partition();
    Ok(CoreQuotient { core, quotient, runner_charges, weight })
}

/// Rebuilds a partition from runner charges and runner partitions.
pub fn from_core_and_quotient(runner_charges: &[i64], quotient: &[Partition]) -> Result<Partition> {
    if runner_charges.len() != quotient.len() || quotient.len() < 2 {
        return Err(Error::InvalidParameter(format!(
            "need one charge per runner and at least two runners, got {} charges and {} runners",
            runner_charges.len(),
            quotient.len()
        )));
    }
    let runners: Vec<BetaSet> = runner_charges
        .iter()
        .zip(quotient)
        .map(|(&c, q)| BetaSet::new(q, c))
        .collect();
    Ok(BetaSet::from_runners(&runners).partition())
}
