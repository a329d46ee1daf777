//! Enumeration of blocks. A block splits into ≈-classes, each fixed by a
//! multicore and a hook count; the members of a class are in bijection with
//! quotient tuples of total size equal to the hook count.

use serde::{Deserialize, Serialize};

use crate::beta::{from_core_and_quotient, BetaSet};
use crate::error::Result;
use crate::multipartition::{
    addable_nodes, compose, decompose, partition_residues, quotient_size, residue_data, BlockData,
    Multicharge, Multicore, Multipartition, Quotient, RouquierData,
};
use crate::partition::{partitions_of, Partition};

/// One ≈-class: a multicore (as runner charges) and a hook count.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ApproxClass {
    pub core: Multicore,
    pub hook: usize,
}

impl ApproxClass {
    pub fn of(lambda: &Multipartition, mc: &Multicharge) -> Result<Self> {
        let (core, q) = decompose(lambda, mc)?;
        Ok(ApproxClass { core, hook: quotient_size(&q) })
    }

    pub fn rouquier_data(&self) -> RouquierData {
        RouquierData::from_multicore(&self.core, self.hook)
    }

    pub fn multicore(&self) -> Result<Multipartition> {
        let r = self.core.len();
        let e = self.core[0].len();
        compose(&self.core, &vec![vec![Partition::empty(); e]; r])
    }

    pub fn quotients(&self) -> Vec<Quotient> {
        quotient_tuples(self.core.len(), self.core[0].len(), self.hook)
    }

    /// All members, ordered as their quotients are enumerated.
    pub fn members(&self) -> Result<Vec<Multipartition>> {
        self.quotients().iter().map(|q| compose(&self.core, q)).collect()
    }
}

/// All `r × e` arrays of partitions with total size `h`.
pub fn quotient_tuples(r: usize, e: usize, h: usize) -> Vec<Quotient> {
    let slots = r * e;
    let by_size: Vec<Vec<Partition>> = (0..=h).map(partitions_of).collect();
    let mut out = Vec::new();
    let mut cur: Vec<Partition> = Vec::with_capacity(slots);
    fn rec(
        slot: usize,
        slots: usize,
        left: usize,
        by_size: &[Vec<Partition>],
        cur: &mut Vec<Partition>,
        out: &mut Vec<Vec<Partition>>,
    ) {
        if slot + 1 == slots {
            for p in &by_size[left] {
                cur.push(p.clone());
                out.push(cur.clone());
                cur.pop();
            }
            return;
        }
        for sz in 0..=left {
            for p in &by_size[sz] {
                cur.push(p.clone());
                rec(slot + 1, slots, left - sz, by_size, cur, out);
                cur.pop();
            }
        }
    }
    rec(0, slots, h, &by_size, &mut cur, &mut out);
    out.into_iter().map(|flat| flat.chunks(e).map(<[Partition]>::to_vec).collect()).collect()
}

/// Every `e`-core at charge `a` with at most `max_size` nodes, as runner
/// charges together with the core partition.
pub fn ecores(e: usize, a: i64, max_size: usize) -> Vec<(Vec<i64>, Partition)> {
    // Runner charges differing by D force at least D(D−1)/2 nodes.
    let mut spread = 0i64;
    while spread * (spread - 1) / 2 <= max_size as i64 {
        spread += 1;
    }
    let centre = a.div_euclid(e as i64);
    let lo = centre - spread;
    let hi = centre + spread;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(e);
    fn rec(e: usize, a: i64, lo: i64, hi: i64, max: usize, cur: &mut Vec<i64>, out: &mut Vec<(Vec<i64>, Partition)>) {
        if cur.len() + 1 == e {
            let last = a - cur.iter().sum::<i64>();
            if last < lo || last > hi {
                return;
            }
            cur.push(last);
            let empties = vec![Partition::empty(); e];
            let core = from_core_and_quotient(cur, &empties).expect("valid runner data");
            if core.size() <= max {
                out.push((cur.clone(), core));
            }
            cur.pop();
            return;
        }
        for c in lo..=hi {
            cur.push(c);
            rec(e, a, lo, hi, max, cur, out);
            cur.pop();
        }
    }
    rec(e, a, lo, hi, max_size, &mut cur, &mut out);
    out
}

/// The ≈-classes making up the block with the given residue data.
pub fn block_classes(data: &BlockData, mc: &Multicharge) -> Vec<ApproxClass> {
    let e = mc.e();
    let per_comp: Vec<Vec<(Vec<i64>, Vec<usize>)>> = (0..mc.rank())
        .map(|k| {
            ecores(e, mc.charge(k), data.n)
                .into_iter()
                .map(|(c, p)| {
                    let res = partition_residues(&p, mc.charge(k), e);
                    (c, res)
                })
                .filter(|(_, res)| res.iter().zip(&data.counts).all(|(x, y)| x <= y))
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut chosen: Vec<Vec<i64>> = Vec::new();
    fn rec(
        k: usize,
        per_comp: &[Vec<(Vec<i64>, Vec<usize>)>],
        left: Vec<usize>,
        chosen: &mut Vec<Vec<i64>>,
        out: &mut Vec<ApproxClass>,
    ) {
        if k == per_comp.len() {
            let h = left[0];
            if left.iter().all(|&x| x == h) {
                out.push(ApproxClass { core: chosen.clone(), hook: h });
            }
            return;
        }
        for (c, res) in &per_comp[k] {
            if res.iter().zip(&left).any(|(x, y)| x > y) {
                continue;
            }
            let next: Vec<usize> = left.iter().zip(res).map(|(y, x)| y - x).collect();
            chosen.push(c.clone());
            rec(k + 1, per_comp, next, chosen, out);
            chosen.pop();
        }
    }
    rec(0, &per_comp, data.counts.clone(), &mut chosen, &mut out);
    out.sort();
    out
}

pub fn block_classes_of(lambda: &Multipartition, mc: &Multicharge) -> Result<Vec<ApproxClass>> {
    Ok(block_classes(&residue_data(lambda, mc)?, mc))
}

pub fn block_members(lambda: &Multipartition, mc: &Multicharge) -> Result<Vec<Multipartition>> {
    let mut out = Vec::new();
    for c in block_classes_of(lambda, mc)? {
        out.extend(c.members()?);
    }
    out.sort();
    Ok(out)
}

/// Every member of the block of `lambda` is a Rouquier multipartition.
pub fn is_rouquier_block(lambda: &Multipartition, mc: &Multicharge) -> Result<bool> {
    Ok(block_classes_of(lambda, mc)?.iter().all(|c| c.rouquier_data().is_rouquier()))
}

pub fn is_rock_block(lambda: &Multipartition, mc: &Multicharge) -> Result<bool> {
    Ok(block_classes_of(lambda, mc)?.iter().all(|c| c.rouquier_data().is_rock()))
}

/// A Scopes move `Φ_i` is legal on a block when no member of the block has
/// an addable `i`-node. Decided by enumerating the whole block.
pub fn scopes_move_legal(lambda: &Multipartition, mc: &Multicharge, i: usize) -> Result<bool> {
    for m in block_members(lambda, mc)? {
        if !addable_nodes(&m, mc, i)?.is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Runner charges of the smallest core at charge `a` whose consecutive
/// runner levels differ by at least `d`.
pub fn minimal_rouquier_core(e: usize, a: i64, d: i64) -> Vec<i64> {
    let e_i = e as i64;
    // Σ_i (x + i·d) + m = a with 0 ≤ m < e; the extra bead goes on the last m runners
    let s = a - d * e_i * (e_i - 1) / 2;
    let x = s.div_euclid(e_i);
    let m = s.rem_euclid(e_i);
    (0..e_i).map(|i| x + i * d + i64::from(i >= e_i - m)).collect()
}

pub fn rouquier_multicore(mc: &Multicharge, d: i64) -> Multicore {
    (0..mc.rank()).map(|k| minimal_rouquier_core(mc.e(), mc.charge(k), d)).collect()
}

/// The smallest gap `d ≥ max(h − 1, 0)` for which the block of the minimal
/// multicore with `h` added hooks is a Rouquier block, searched up to `limit`.
pub fn rouquier_block_gap(mc: &Multicharge, h: usize, limit: i64) -> Result<Option<(i64, ApproxClass)>> {
    let start = (h as i64 - 1).max(0);
    for d in start..=limit {
        let class = ApproxClass { core: rouquier_multicore(mc, d), hook: h };
        let rep = compose(&class.core, &hook_quotient(mc.rank(), mc.e(), h))?;
        if is_rouquier_block(&rep, mc)? {
            return Ok(Some((d, class)));
        }
    }
    Ok(None)
}

/// A quotient with all `h` boxes in one row on the last runner of the
/// first component.
pub fn hook_quotient(r: usize, e: usize, h: usize) -> Quotient {
    let mut q = vec![vec![Partition::empty(); e]; r];
    q[0][e - 1] = Partition::row(h);
    q
}

/// The β-set of a core given by runner charges.
pub fn core_beta(charges: &[i64]) -> BetaSet {
    let runners: Vec<BetaSet> = charges.iter().map(|&c| BetaSet::new(&Partition::empty(), c)).collect();
    BetaSet::from_runners(&runners)
}
