//! Multipartitions with a multicharge: residues, multicores, quotients,
//! node combinatorics, Rouquier and RoCK recognition, and Scopes moves.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::beta::{modulo, BetaSet};
use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Multicharge {
    e: usize,
    charges: Vec<usize>,
}

impl Multicharge {
    pub fn new(e: usize, charges: Vec<usize>) -> Result<Self> {
        if e < 2 {
            return Err(Error::InvalidParameter(format!("e must be at least 2, got {e}")));
        }
        if charges.is_empty() {
            return Err(Error::InvalidParameter("multicharge must have at least one entry".into()));
        }
        if let Some(&a) = charges.iter().find(|&&a| a >= e) {
            return Err(Error::InvalidParameter(format!("multicharge entry {a} is not in 0..{e}")));
        }
        Ok(Multicharge { e, charges })
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn charges(&self) -> &[usize] {
        &self.charges
    }

    pub fn charge(&self, k: usize) -> i64 {
        self.charges[k] as i64
    }

    pub fn rank(&self) -> usize {
        self.charges.len()
    }

    /// The multicharge with its first entry removed.
    pub fn tail(&self) -> Option<Multicharge> {
        (self.rank() > 1).then(|| Multicharge { e: self.e, charges: self.charges[1..].to_vec() })
    }

    pub(crate) fn check_rank(&self, lambda: &Multipartition) -> Result<()> {
        if lambda.rank() != self.rank() {
            return Err(Error::RankMismatch { expected: self.rank(), got: lambda.rank() });
        }
        Ok(())
    }
}

/// Parses `"0,1"` given `e` separately.
pub fn parse_charges(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad multicharge entry {t:?}"))))
        .collect()
}

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Multipartition(Vec<Partition>);

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidParameter("a multipartition needs at least one component".into()));
        }
        Ok(Multipartition(components))
    }

    pub fn empty(r: usize) -> Self {
        Multipartition(vec![Partition::empty(); r])
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    pub fn component(&self, k: usize) -> &Partition {
        &self.0[k]
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(Partition::size).sum()
    }

    pub fn is_e_regular(&self, e: usize) -> bool {
        self.0.iter().all(|p| p.is_e_regular_unchecked(e))
    }

    /// Drops the first component.
    pub fn tail(&self) -> Option<Multipartition> {
        (self.rank() > 1).then(|| Multipartition(self.0[1..].to_vec()))
    }

    /// Prepends an empty first component.
    pub fn lift(&self) -> Multipartition {
        let mut c = vec![Partition::empty()];
        c.extend(self.0.iter().cloned());
        Multipartition(c)
    }

    pub fn with_component(&self, k: usize, p: Partition) -> Multipartition {
        let mut c = self.0.clone();
        c[k] = p;
        Multipartition(c)
    }

    /// Every node `(row, col, component)` of the diagram.
    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(k, p)| p.cells().map(move |(x, y)| Node { row: x, col: y, comp: k }))
    }

    /// Total order used to order canonical basis labels: first component
    /// size, then its parts, then the next component, and so on. It extends
    /// the dominance order on multipartitions.
    pub fn order_key(&self) -> Vec<usize> {
        let mut key = Vec::new();
        for p in &self.0 {
            key.push(p.size());
            key.extend(p.parts().iter().copied());
            // separator so that a shorter part list sorts first
            key.push(0);
        }
        key
    }

    pub fn abacus(&self, mc: &Multicharge) -> Result<AbacusConfig> {
        mc.check_rank(self)?;
        Ok(AbacusConfig {
            betas: self.0.iter().enumerate().map(|(k, p)| BetaSet::new(p, mc.charge(k))).collect(),
        })
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(";"))
    }
}

impl fmt::Debug for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Semicolon-separated components, each in partition syntax.
impl FromStr for Multipartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let comps = s.split(';').map(str::parse).collect::<Result<Vec<Partition>>>()?;
        Multipartition::new(comps)
    }
}

/// A node `(row, col, component)`, rows and columns 1-indexed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Node {
    pub row: usize,
    pub col: usize,
    pub comp: usize,
}

impl Node {
    pub fn residue(&self, mc: &Multicharge) -> usize {
        let e = mc.e() as i64;
        modulo(mc.charge(self.comp) + self.col as i64 - self.row as i64, e) as usize
    }

    /// `self` lies above `other`.
    pub fn is_above(&self, other: &Node) -> bool {
        self.comp < other.comp || (self.comp == other.comp && self.row < other.row)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BlockData {
    /// `counts[i]` is the number of nodes of residue `i`.
    pub counts: Vec<usize>,
    pub n: usize,
}

pub fn residue_data(lambda: &Multipartition, mc: &Multicharge) -> Result<BlockData> {
    mc.check_rank(lambda)?;
    let mut counts = vec![0; mc.e()];
    for node in lambda.nodes() {
        counts[node.residue(mc)] += 1;
    }
    Ok(BlockData { counts, n: lambda.size() })
}

pub(crate) fn partition_residues(p: &Partition, a: i64, e: usize) -> Vec<usize> {
    let mut counts = vec![0; e];
    for (x, y) in p.cells() {
        counts[modulo(a + y as i64 - x as i64, e as i64) as usize] += 1;
    }
    counts
}

pub fn same_block(lambda: &Multipartition, mu: &Multipartition, mc: &Multicharge) -> Result<bool> {
    mc.check_rank(lambda)?;
    mc.check_rank(mu)?;
    Ok(residue_data(lambda, mc)? == residue_data(mu, mc)?)
}

/// The per-component β-sets of a multipartition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbacusConfig {
    pub betas: Vec<BetaSet>,
}

/// Runner charges per component; these determine the multicore.
pub type Multicore = Vec<Vec<i64>>;

/// `quotient[k][i]` is the partition on runner `i` of component `k`.
pub type Quotient = Vec<Vec<Partition>>;

/// Multicore (as runner charges) and quotient of a multipartition.
pub fn decompose(lambda: &Multipartition, mc: &Multicharge) -> Result<(Multicore, Quotient)> {
    let ab = lambda.abacus(mc)?;
    let mut core = Vec::new();
    let mut quot = Vec::new();
    for b in &ab.betas {
        let runners = b.runners(mc.e());
        core.push(runners.iter().map(BetaSet::charge).collect());
        quot.push(runners.iter().map(BetaSet::partition).collect());
    }
    Ok((core, quot))
}

/// Inverse of [`decompose`].
pub fn compose(core: &Multicore, quotient: &Quotient) -> Result<Multipartition> {
    if core.len() != quotient.len() {
        return Err(Error::RankMismatch { expected: core.len(), got: quotient.len() });
    }
    let comps = core
        .iter()
        .zip(quotient)
        .map(|(c, q)| crate::beta::from_core_and_quotient(c, q))
        .collect::<Result<Vec<_>>>()?;
    Multipartition::new(comps)
}

pub fn quotient(lambda: &Multipartition, mc: &Multicharge) -> Result<Quotient> {
    Ok(decompose(lambda, mc)?.1)
}

pub fn quotient_size(q: &Quotient) -> usize {
    q.iter().flatten().map(Partition::size).sum()
}

/// Componentwise `e`-core and the number of `e`-rim hooks removed.
pub fn multicore_hook(lambda: &Multipartition, e: usize) -> Result<(Multipartition, usize)> {
    if e < 2 {
        return Err(Error::InvalidParameter(format!("e must be at least 2, got {e}")));
    }
    let core = Multipartition(
        lambda
            .components()
            .iter()
            .map(|p| BetaSet::new(p, 0).core(e).partition())
            .collect(),
    );
    let hook = (lambda.size() - core.size()) / e;
    Ok((core, hook))
}

/// Same multicore and same number of hooks.
pub fn approx_equiv(lambda: &Multipartition, mu: &Multipartition, e: usize) -> Result<bool> {
    if lambda.rank() != mu.rank() {
        return Err(Error::RankMismatch { expected: lambda.rank(), got: mu.rank() });
    }
    Ok(lambda.size() == mu.size() && multicore_hook(lambda, e)?.0 == multicore_hook(mu, e)?.0)
}

pub fn omega(q: &Quotient, e: usize) -> usize {
    q.iter()
        .enumerate()
        .map(|(k, row)| {
            row.iter().enumerate().map(|(i, p)| (e - i + k - 1) * p.size()).sum::<usize>()
        })
        .sum()
}

pub fn omega_of(lambda: &Multipartition, mc: &Multicharge) -> Result<usize> {
    Ok(omega(&quotient(lambda, mc)?, mc.e()))
}

/// Addable `i`-nodes read from the Young diagram, in the "above" order.
pub fn addable_nodes(lambda: &Multipartition, mc: &Multicharge, i: usize) -> Result<Vec<Node>> {
    mc.check_rank(lambda)?;
    let mut out = Vec::new();
    for (k, p) in lambda.components().iter().enumerate() {
        for (x, y) in p.addable_cells() {
            let n = Node { row: x, col: y, comp: k };
            if n.residue(mc) == i {
                out.push(n);
            }
        }
    }
    Ok(out)
}

/// Removable `i`-nodes read from the Young diagram, in the "above" order.
pub fn removable_nodes(lambda: &Multipartition, mc: &Multicharge, i: usize) -> Result<Vec<Node>> {
    mc.check_rank(lambda)?;
    let mut out = Vec::new();
    for (k, p) in lambda.components().iter().enumerate() {
        for (x, y) in p.removable_cells() {
            let n = Node { row: x, col: y, comp: k };
            if n.residue(mc) == i {
                out.push(n);
            }
        }
    }
    Ok(out)
}

/// Addable `i`-nodes read from the abacus: a bead at `b ≡ i − 1` with
/// `b + 1` empty. Beads are listed largest first, which is the "above"
/// order within a component.
pub fn addable_nodes_beta(lambda: &Multipartition, mc: &Multicharge, i: usize) -> Result<Vec<Node>> {
    beta_nodes(lambda, mc, i, true)
}

/// Removable `i`-nodes read from the abacus: a bead at `b ≡ i` with
/// `b − 1` empty.
pub fn removable_nodes_beta(lambda: &Multipartition, mc: &Multicharge, i: usize) -> Result<Vec<Node>> {
    beta_nodes(lambda, mc, i, false)
}

fn beta_nodes(lambda: &Multipartition, mc: &Multicharge, i: usize, addable: bool) -> Result<Vec<Node>> {
    let ab = lambda.abacus(mc)?;
    let e = mc.e() as i64;
    let mut out = Vec::new();
    for (k, b) in ab.betas.iter().enumerate() {
        let a = mc.charge(k);
        // one extra bead below the threshold covers the first empty row
        let beads = b.first_beads(b.upper_beads().len() + 1);
        for (idx, &x) in beads.iter().enumerate() {
            let row = idx + 1;
            let hit = if addable {
                modulo(x, e) == modulo(i as i64 - 1, e) && !b.contains(x + 1)
            } else {
                modulo(x, e) == i as i64 && !b.contains(x - 1)
            };
            if hit {
                let part = (x + row as i64 - a) as usize;
                let col = if addable { part + 1 } else { part };
                out.push(Node { row, col, comp: k });
            }
        }
    }
    Ok(out)
}

/// Adds or removes one node, returning `None` if the result is not a
/// multipartition.
pub fn add_node(lambda: &Multipartition, n: &Node) -> Option<Multipartition> {
    let p = lambda.component(n.comp);
    if p.part(n.row - 1) + 1 != n.col || (n.row > 1 && p.part(n.row - 2) < n.col) {
        return None;
    }
    let mut parts = p.parts().to_vec();
    if n.row > parts.len() {
        parts.push(1);
    } else {
        parts[n.row - 1] += 1;
    }
    Some(lambda.with_component(n.comp, Partition::new(parts).ok()?))
}

/// `𝔟^k_i` (lowest bead level on each runner of each core component) and
/// `𝔡^k_i = 𝔟^k_i − 𝔟^k_{i−1}` for `1 ≤ i ≤ e − 1`, stored at `d[k][i − 1]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RouquierData {
    pub b: Vec<Vec<i64>>,
    pub d: Vec<Vec<i64>>,
    pub hook: usize,
}

impl RouquierData {
    pub fn from_multicore(core: &Multicore, hook: usize) -> Self {
        let b: Vec<Vec<i64>> = core.iter().map(|row| row.iter().map(|c| c - 1).collect()).collect();
        let d = b.iter().map(|row| row.windows(2).map(|w| w[1] - w[0]).collect()).collect();
        RouquierData { b, d, hook }
    }

    pub fn is_rouquier(&self) -> bool {
        self.d.iter().flatten().all(|&d| self.hook as i64 <= d + 1)
    }

    /// `𝔟*_i = Σ_k 𝔟^k_i`.
    pub fn b_star(&self) -> Vec<i64> {
        let e = self.b[0].len();
        (0..e).map(|i| self.b.iter().map(|row| row[i]).sum()).collect()
    }

    /// Runners sorted by `(𝔟*_i, i)`.
    pub fn pi(&self) -> Vec<usize> {
        let bs = self.b_star();
        let mut pi: Vec<usize> = (0..bs.len()).collect();
        pi.sort_by_key(|&i| (bs[i], i));
        pi
    }

    pub fn is_rock(&self) -> bool {
        let pi = self.pi();
        self.b.iter().all(|row| {
            pi.windows(2).all(|w| self.hook as i64 <= row[w[1]] - row[w[0]] + 1)
        })
    }
}

pub fn rouquier_data(lambda: &Multipartition, mc: &Multicharge) -> Result<RouquierData> {
    let (core, q) = decompose(lambda, mc)?;
    Ok(RouquierData::from_multicore(&core, quotient_size(&q)))
}

pub fn is_rouquier(lambda: &Multipartition, mc: &Multicharge) -> Result<bool> {
    Ok(rouquier_data(lambda, mc)?.is_rouquier())
}

/// `(π, is_rock)`.
pub fn rock_data(lambda: &Multipartition, mc: &Multicharge) -> Result<(Vec<usize>, bool)> {
    let rd = rouquier_data(lambda, mc)?;
    Ok((rd.pi(), rd.is_rock()))
}

/// `φ_i`: `b ≡ i − 1 ↦ b + 1`, `b ≡ i ↦ b − 1`, everything else fixed.
pub fn phi(i: usize, e: usize, b: i64) -> i64 {
    let (i, e) = (i as i64, e as i64);
    let r = modulo(b, e);
    if r == modulo(i - 1, e) {
        b + 1
    } else if r == i {
        b - 1
    } else {
        b
    }
}

/// Applies `φ_i` to every bead of every component.
pub fn scopes_move(lambda: &Multipartition, mc: &Multicharge, i: usize) -> Result<Multipartition> {
    if i >= mc.e() {
        return Err(Error::InvalidParameter(format!("residue {i} is not in 0..{}", mc.e())));
    }
    let ab = lambda.abacus(mc)?;
    let e = mc.e() as i64;
    let comps = ab
        .betas
        .iter()
        .map(|b| {
            // start the explicit range on the lower end of a swapped pair
            let top = b.threshold() - 1;
            let floor = top - modulo(top - (i as i64 - 1), e) - e;
            b.map_beads(floor, |x| phi(i, mc.e(), x)).partition()
        })
        .collect();
    Multipartition::new(comps)
}
