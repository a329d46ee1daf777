//! The closed formula for `g_{λμ}(v)` in Rouquier blocks, the action of
//! `f^{(s,j)}` on Rouquier multipartitions, `Q`-vectors, the RoCK variant
//! and the conjectural Schur-algebra multiplicities.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::block::{is_rock_block, ApproxClass};
use crate::error::{Error, Result};
use crate::fock::FockVector;
use crate::laurent::LaurentPoly;
use crate::lr::{lr_coeff, lr_coeff_multi, lr_product};
use crate::multipartition::{
    compose, decompose, omega, quotient_size, Multicharge, Multicore, Multipartition, Quotient,
    RouquierData,
};
use crate::partition::{partitions_inside, partitions_of, Partition};

/// An `s × f` array of partitions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PartitionMatrix {
    pub entries: Vec<Vec<Partition>>,
}

impl PartitionMatrix {
    pub fn empty(rows: usize, cols: usize) -> Self {
        PartitionMatrix { entries: vec![vec![Partition::empty(); cols]; rows] }
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.entries.first().map_or(0, Vec::len)
    }

    pub fn get(&self, k: usize, i: usize) -> &Partition {
        &self.entries[k][i]
    }

    pub fn total_size(&self) -> usize {
        self.entries.iter().flatten().map(Partition::size).sum()
    }
}

impl fmt::Display for PartitionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .iter()
            .map(|row| row.iter().map(|p| format!("({p})")).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join(" | "))
    }
}

/// A pair `(λ, μ)` of ≈-equivalent Rouquier multipartitions with `μ`
/// `e`-regular, stored as a shared multicore and two quotients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RouquierPair {
    pub lambda: Multipartition,
    pub mu: Multipartition,
    pub mc: Multicharge,
    pub core: Multicore,
    pub lambda_quotient: Quotient,
    pub mu_quotient: Quotient,
}

impl RouquierPair {
    pub fn new(lambda: &Multipartition, mu: &Multipartition, mc: &Multicharge) -> Result<Self> {
        let (core, lq) = decompose(lambda, mc)?;
        let (core_mu, mq) = decompose(mu, mc)?;
        if core != core_mu || quotient_size(&lq) != quotient_size(&mq) {
            return Err(Error::Precondition(format!("approx_equiv fails for {lambda} and {mu}")));
        }
        let rd = RouquierData::from_multicore(&core, quotient_size(&lq));
        if !rd.is_rouquier() {
            return Err(Error::Precondition(format!("is_rouquier fails for {lambda}")));
        }
        if !mu.is_e_regular(mc.e()) {
            return Err(Error::Precondition(format!("{mu} is not {}-regular", mc.e())));
        }
        if mq.iter().any(|row| !row[0].is_empty()) {
            return Err(Error::Precondition(format!("{mu} has a nonempty quotient on runner 0")));
        }
        Ok(RouquierPair {
            lambda: lambda.clone(),
            mu: mu.clone(),
            mc: mc.clone(),
            core,
            lambda_quotient: lq,
            mu_quotient: mq,
        })
    }

    /// Builds the pair from runner charges and two quotients.
    pub fn from_quotients(core: &Multicore, lambda_quotient: &Quotient, mu_quotient: &Quotient) -> Result<Self> {
        let mc = multicharge_of_core(core)?;
        Self::new(&compose(core, lambda_quotient)?, &compose(core, mu_quotient)?, &mc)
    }

    pub fn e(&self) -> usize {
        self.mc.e()
    }

    pub fn rank(&self) -> usize {
        self.mc.rank()
    }

    pub fn omega_difference(&self) -> i64 {
        omega(&self.lambda_quotient, self.e()) as i64 - omega(&self.mu_quotient, self.e()) as i64
    }

    pub fn hook(&self) -> usize {
        quotient_size(&self.mu_quotient)
    }
}

/// The multicharge read off runner charges: `a_k = Σ_i c^k_i`, which must
/// already lie in `0..e`.
pub fn multicharge_of_core(core: &Multicore) -> Result<Multicharge> {
    let e = core.first().map_or(0, Vec::len);
    let charges = core
        .iter()
        .map(|row| {
            let a: i64 = row.iter().sum();
            usize::try_from(a)
                .ok()
                .filter(|&a| a < e)
                .ok_or_else(|| Error::InvalidParameter(format!("runner charges {row:?} sum to {a}, outside 0..{e}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Multicharge::new(e, charges)
}

/// One term `(α, β, γ, δ)` of the defining sum with its nonzero product of
/// Littlewood–Richardson coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LrTuple {
    pub alpha: PartitionMatrix,
    pub beta: PartitionMatrix,
    pub gamma: PartitionMatrix,
    pub delta: PartitionMatrix,
    pub weight: u64,
}

fn sizes(q: &Quotient) -> Vec<Vec<i64>> {
    q.iter().map(|row| row.iter().map(|p| p.size() as i64).collect()).collect()
}

/// Row totals `Σ_i |γ^k_i|` forced by the sizes of the two quotients, for
/// `k = 0..=r`. `None` when some total is negative.
fn gamma_row_totals(lq: &Quotient, mq: &Quotient) -> Option<Vec<usize>> {
    let (ls, ms) = (sizes(lq), sizes(mq));
    let r = lq.len();
    let mut out = vec![0usize];
    let mut acc = 0i64;
    for k in 0..r {
        acc += ms[k].iter().sum::<i64>() - ls[k].iter().sum::<i64>();
        if k + 1 < r {
            if acc < 0 {
                return None;
            }
            out.push(acc as usize);
        }
    }
    (acc == 0).then_some(())?;
    out.push(0);
    Some(out)
}

/// `(|α^k_i|)_{i=0..=e}` and `(|β^k_i|)_{i<e}` for one row, or `None` when a
/// size goes negative or `α^k_e` is not empty.
fn row_sizes(l: &[i64], m: &[i64], g_here: &[i64], g_next: &[i64]) -> Option<(Vec<i64>, Vec<i64>)> {
    let e = l.len();
    let mut a = vec![0i64; e + 1];
    let mut b = vec![0i64; e];
    for i in 0..e {
        b[i] = m[i] + g_here[i] - a[i] - g_next[i];
        a[i + 1] = l[i] - b[i];
        if b[i] < 0 || a[i + 1] < 0 {
            return None;
        }
    }
    (a[e] == 0).then_some((a, b))
}

fn compositions(total: usize, parts: usize, first_free: bool) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(parts);
    fn rec(left: usize, parts: usize, first_free: bool, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() + 1 == parts {
            if cur.is_empty() && !first_free && left > 0 {
                return;
            }
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        let hi = if cur.is_empty() && !first_free { 0 } else { left };
        for x in 0..=hi {
            cur.push(x);
            rec(left - x, parts, first_free, cur, out);
            cur.pop();
        }
    }
    if parts == 0 {
        return out;
    }
    rec(total, parts, first_free, &mut cur, &mut out);
    out
}

fn partition_rows(sizes: &[usize]) -> Vec<Vec<Partition>> {
    let mut out = vec![Vec::new()];
    for &n in sizes {
        let choices = partitions_of(n);
        out = out
            .into_iter()
            .flat_map(|row| {
                choices.iter().map(move |p| {
                    let mut r = row.clone();
                    r.push(p.clone());
                    r
                })
            })
            .collect();
    }
    out
}

/// Every admissible `γ ∈ Γ^{r+1}_e`: rows `0` and `r` empty, the forced row
/// totals, all induced sizes of `α` and `β` nonnegative. Column 0 is kept
/// empty unless `free_first_column` is set.
fn gammas(lq: &Quotient, mq: &Quotient, free_first_column: bool) -> Vec<PartitionMatrix> {
    let r = lq.len();
    let e = lq[0].len();
    let Some(totals) = gamma_row_totals(lq, mq) else { return Vec::new() };
    let (ls, ms) = (sizes(lq), sizes(mq));
    // size patterns per row, then check the α/β sizes row by row
    let mut patterns: Vec<Vec<Vec<usize>>> = vec![vec![vec![0; e]]];
    for k in 1..r {
        let rows = compositions(totals[k], e, free_first_column);
        let mut next = Vec::new();
        for prefix in &patterns {
            for row in &rows {
                let mut p = prefix.clone();
                p.push(row.clone());
                next.push(p);
            }
        }
        patterns = next;
    }
    let mut out = Vec::new();
    for mut p in patterns {
        p.push(vec![0; e]);
        let as_i64: Vec<Vec<i64>> = p.iter().map(|row| row.iter().map(|&x| x as i64).collect()).collect();
        let ok = (0..r).all(|k| row_sizes(&ls[k], &ms[k], &as_i64[k], &as_i64[k + 1]).is_some());
        if !ok {
            continue;
        }
        let mut mats: Vec<Vec<Vec<Partition>>> = vec![Vec::new()];
        for row in &p {
            let choices = partition_rows(row);
            mats = mats
                .into_iter()
                .flat_map(|m| {
                    choices.iter().map(move |c| {
                        let mut m = m.clone();
                        m.push(c.clone());
                        m
                    })
                })
                .collect();
        }
        out.extend(mats.into_iter().map(|entries| PartitionMatrix { entries }));
    }
    out.sort();
    out
}

/// The admissible `γ` matrices for a pair.
pub fn enumerate_gamma(pair: &RouquierPair) -> Vec<PartitionMatrix> {
    gammas(&pair.lambda_quotient, &pair.mu_quotient, false)
}

/// One step of the row transfer: for a fixed `α^k_i`, every
/// `(β, δ, α^k_{i+1}, weight)` with a nonzero product of the three factors
/// at column `i`.
fn column_step(
    alpha: &Partition,
    mu: &Partition,
    lam: &Partition,
    g_here: &Partition,
    g_next: &Partition,
) -> Vec<(Partition, Partition, Partition, u64)> {
    let mut out = Vec::new();
    let delta_size = mu.size() + g_here.size();
    let Some(beta_size) = delta_size.checked_sub(alpha.size() + g_next.size()) else { return out };
    let Some(next_size) = lam.size().checked_sub(beta_size) else { return out };
    let betas = partitions_inside(lam, beta_size);
    let nexts = partitions_inside(lam, next_size);
    for (delta, c1) in lr_product(mu, g_here) {
        for beta in betas.iter().filter(|b| delta.contains(b)) {
            let c2 = lr_coeff_multi(&delta, &[alpha.clone(), beta.clone(), g_next.clone()]).expect("nonempty factors");
            if c2 == 0 {
                continue;
            }
            for nt in &nexts {
                let c3 = lr_coeff(lam, beta, nt);
                if c3 > 0 {
                    out.push((beta.clone(), delta.clone(), nt.conjugate(), c1 * c2 * c3));
                }
            }
        }
    }
    out
}

/// `Σ_{α,β,δ} Π_i (…)` for row `k` of a fixed `γ`, by transfer along the
/// chain `α^k_0 = ∅ → α^k_1 → … → α^k_e = ∅`.
fn row_sum(lam: &[Partition], mu: &[Partition], g_here: &[Partition], g_next: &[Partition]) -> u64 {
    let mut states: HashMap<Partition, u64> = HashMap::from([(Partition::empty(), 1)]);
    for i in 0..lam.len() {
        let mut next: HashMap<Partition, u64> = HashMap::new();
        for (alpha, w) in &states {
            for (_, _, a_next, c) in column_step(alpha, &mu[i], &lam[i], &g_here[i], &g_next[i]) {
                *next.entry(a_next).or_default() += w * c;
            }
        }
        states = next;
        if states.is_empty() {
            return 0;
        }
    }
    states.get(&Partition::empty()).copied().unwrap_or(0)
}

/// All `(α, β, δ, weight)` rows for row `k` of a fixed `γ`.
fn row_terms(
    lam: &[Partition],
    mu: &[Partition],
    g_here: &[Partition],
    g_next: &[Partition],
) -> Vec<(Vec<Partition>, Vec<Partition>, Vec<Partition>, u64)> {
    let e = lam.len();
    let mut partial = vec![(vec![Partition::empty()], Vec::new(), Vec::new(), 1u64)];
    for i in 0..e {
        let mut next = Vec::new();
        for (alphas, betas, deltas, w) in &partial {
            for (b, d, a, c) in column_step(&alphas[i], &mu[i], &lam[i], &g_here[i], &g_next[i]) {
                let mut alphas = alphas.clone();
                alphas.push(a);
                let mut betas = betas.clone();
                betas.push(b);
                let mut deltas = deltas.clone();
                deltas.push(d);
                next.push((alphas, betas, deltas, w * c));
            }
        }
        partial = next;
    }
    partial.retain(|(alphas, ..)| alphas[e].is_empty());
    partial
}

/// `Σ_γ Π_k row_sum`, the integer part of the defining sum.
fn lr_sum(lq: &Quotient, mq: &Quotient, free_first_column: bool) -> u64 {
    let gs = gammas(lq, mq, free_first_column);
    let r = lq.len();
    gs.par_iter()
        .map(|g| {
            let mut prod = 1u64;
            for k in 0..r {
                let s = row_sum(&lq[k], &mq[k], &g.entries[k], &g.entries[k + 1]);
                if s == 0 {
                    return 0;
                }
                prod *= s;
            }
            prod
        })
        .sum()
}

fn omega_check(pair: &RouquierPair, t: &LrTuple) {
    let lhs = pair.omega_difference();
    let rhs = (t.alpha.total_size() + t.gamma.total_size()) as i64;
    assert_eq!(lhs, rhs, "grading identity fails at γ = {}", t.gamma);
}

/// Every term of the defining sum with a nonzero product.
pub fn contributing_tuples(pair: &RouquierPair) -> Vec<LrTuple> {
    let (lq, mq) = (&pair.lambda_quotient, &pair.mu_quotient);
    let r = pair.rank();
    let mut out = Vec::new();
    for g in enumerate_gamma(pair) {
        let rows: Vec<_> = (0..r).map(|k| row_terms(&lq[k], &mq[k], &g.entries[k], &g.entries[k + 1])).collect();
        if rows.iter().any(Vec::is_empty) {
            continue;
        }
        let mut acc: Vec<(Vec<Vec<Partition>>, Vec<Vec<Partition>>, Vec<Vec<Partition>>, u64)> =
            vec![(Vec::new(), Vec::new(), Vec::new(), 1)];
        for row in &rows {
            let mut next = Vec::new();
            for (a, b, d, w) in &acc {
                for (ra, rb, rd, rw) in row {
                    let (mut a, mut b, mut d) = (a.clone(), b.clone(), d.clone());
                    a.push(ra.clone());
                    b.push(rb.clone());
                    d.push(rd.clone());
                    next.push((a, b, d, w * rw));
                }
            }
            acc = next;
        }
        for (a, b, d, w) in acc {
            let t = LrTuple {
                alpha: PartitionMatrix { entries: a },
                beta: PartitionMatrix { entries: b },
                gamma: g.clone(),
                delta: PartitionMatrix { entries: d },
                weight: w,
            };
            omega_check(pair, &t);
            out.push(t);
        }
    }
    out
}

/// `g_{λμ}(v)`.
pub fn g_poly(pair: &RouquierPair) -> LaurentPoly {
    let n = lr_sum(&pair.lambda_quotient, &pair.mu_quotient, false);
    let w = pair.omega_difference();
    if n > 0 {
        assert!(w >= 0, "nonzero g with ω(λ) < ω(μ) for {} and {}", pair.lambda, pair.mu);
    }
    LaurentPoly::monomial(n as i64, w as i32)
}

/// The level-one specialization, summing over chains `α_0, …, α_e` and
/// `β_0, …, β_{e−1}` of the forced sizes.
pub fn g_r1(pair: &RouquierPair) -> Result<LaurentPoly> {
    if pair.rank() != 1 {
        return Err(Error::InvalidParameter(format!("g_r1 needs rank 1, got {}", pair.rank())));
    }
    let lam = &pair.lambda_quotient[0];
    let mu = &pair.mu_quotient[0];
    let e = lam.len();
    let mut a_sizes = vec![0i64; e + 1];
    let mut b_sizes = vec![0i64; e];
    for i in 0..e {
        a_sizes[i + 1] = a_sizes[i] + lam[i].size() as i64 - mu[i].size() as i64;
        b_sizes[i] = lam[i].size() as i64 - a_sizes[i + 1];
    }
    if a_sizes.iter().chain(&b_sizes).any(|&x| x < 0) || a_sizes[e] != 0 {
        return Ok(LaurentPoly::zero());
    }
    // chains[α_i] = weighted count of (α_0..α_i, β_0..β_{i-1})
    let mut chains: Vec<(Partition, u64)> = vec![(Partition::empty(), 1)];
    for i in 0..e {
        let mut next = Vec::new();
        for (alpha, w) in &chains {
            for beta in partitions_of(b_sizes[i] as usize) {
                let c1 = lr_coeff(&mu[i], alpha, &beta);
                if c1 == 0 {
                    continue;
                }
                for a_next in partitions_of(a_sizes[i + 1] as usize) {
                    let c2 = lr_coeff(&lam[i], &beta, &a_next.conjugate());
                    if c2 > 0 {
                        next.push((a_next, w * c1 * c2));
                    }
                }
            }
        }
        chains = next;
    }
    let total: u64 = chains.iter().filter(|(a, _)| a.is_empty()).map(|(_, w)| w).sum();
    let deg: i64 = (0..e).map(|i| i as i64 * (mu[i].size() as i64 - lam[i].size() as i64)).sum();
    Ok(LaurentPoly::monomial(total as i64, deg as i32))
}

/// `f^{(s,j)}` as a word in operator notation.
pub fn f_sj_word(s: usize, j: usize, e: usize) -> Vec<(usize, usize)> {
    let mut w: Vec<(usize, usize)> = (1..=j).rev().map(|i| (i, s)).collect();
    w.extend((j + 1..e).map(|i| (i, s)));
    w.push((0, s));
    w
}

/// Adding `s` hooks to any member of the class of `tau` stays Rouquier.
pub fn in_r_s(tau: &Multipartition, mc: &Multicharge, s: usize) -> Result<bool> {
    let c = ApproxClass::of(tau, mc)?;
    let rd = c.rouquier_data();
    Ok(rd.is_rouquier() && RouquierData::from_multicore(&c.core, c.hook + s).is_rouquier())
}

/// `f^{(s,j)} s_τ` from the closed form: horizontal strips on runner
/// `j − 1`, vertical strips on runner `j`, graded by `Σ_k (k+1)l_k + kℓ_k`.
pub fn rouquier_f_action(tau: &Multipartition, s: usize, j: usize, mc: &Multicharge) -> Result<FockVector> {
    let e = mc.e();
    if s == 0 || j == 0 || j >= e {
        return Err(Error::InvalidParameter(format!("need s ≥ 1 and 1 ≤ j ≤ {}, got s = {s}, j = {j}", e - 1)));
    }
    if !in_r_s(tau, mc, s)? {
        return Err(Error::Precondition(format!("adding {s} hooks to {tau} leaves the Rouquier multipartitions")));
    }
    let (core, q) = decompose(tau, mc)?;
    let r = mc.rank();
    // per component: every (runner j−1, runner j, l, ℓ)
    let per_comp: Vec<Vec<(Partition, Partition, usize, usize)>> = (0..r)
        .map(|k| {
            let mut v = Vec::new();
            for l in 0..=s {
                for ell in 0..=(s - l) {
                    for h in q[k][j - 1].add_horizontal_strips(l) {
                        for vs in q[k][j].add_vertical_strips(ell) {
                            v.push((h.clone(), vs, l, ell));
                        }
                    }
                }
            }
            v
        })
        .collect();
    let mut out = FockVector::zero(mc);
    let mut chosen: Vec<usize> = Vec::with_capacity(r);
    fn rec(
        k: usize,
        left: usize,
        per_comp: &[Vec<(Partition, Partition, usize, usize)>],
        chosen: &mut Vec<usize>,
        emit: &mut dyn FnMut(&[usize]),
    ) {
        if k == per_comp.len() {
            if left == 0 {
                emit(chosen);
            }
            return;
        }
        for (idx, (_, _, l, ell)) in per_comp[k].iter().enumerate() {
            if l + ell <= left {
                chosen.push(idx);
                rec(k + 1, left - l - ell, per_comp, chosen, emit);
                chosen.pop();
            }
        }
    }
    let mut err = None;
    rec(0, s, &per_comp, &mut chosen, &mut |pick: &[usize]| {
        let mut nq = q.clone();
        let mut deg = 0i32;
        for (k, &idx) in pick.iter().enumerate() {
            let (h, vs, l, ell) = &per_comp[k][idx];
            nq[k][j - 1] = h.clone();
            nq[k][j] = vs.clone();
            deg += ((k + 1) * l + k * ell) as i32;
        }
        match compose(&core, &nq) {
            Ok(lam) => out.add_term(lam, &LaurentPoly::v_pow(deg)),
            Err(e) => err = Some(e),
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// `Q(μ) = Σ_{λ ≈ μ} g_{λμ}(v) s_λ`.
pub fn q_vector(mu: &Multipartition, mc: &Multicharge) -> Result<FockVector> {
    let class = ApproxClass::of(mu, mc)?;
    let mut out = FockVector::zero(mc);
    for lam in class.members()? {
        let pair = RouquierPair::new(&lam, mu, mc)?;
        out.add_term(lam, &g_poly(&pair));
    }
    Ok(out)
}

fn permute(q: &Quotient, pi: &[usize]) -> Quotient {
    q.iter().map(|row| pi.iter().map(|&p| row[p].clone()).collect()).collect()
}

/// The ungraded value for `λ ≈ μ` in a RoCK block, with the runners of
/// both quotients read in the order `π`.
pub fn rock_g(lambda: &Multipartition, mu: &Multipartition, mc: &Multicharge) -> Result<u64> {
    let (core, lq) = decompose(lambda, mc)?;
    let (core_mu, mq) = decompose(mu, mc)?;
    if core != core_mu || quotient_size(&lq) != quotient_size(&mq) {
        return Err(Error::Precondition(format!("approx_equiv fails for {lambda} and {mu}")));
    }
    if !is_rock_block(lambda, mc)? {
        return Err(Error::Precondition(format!("the block of {lambda} is not a RoCK block")));
    }
    let pi = RouquierData::from_multicore(&core, quotient_size(&lq)).pi();
    let (lp, mp) = (permute(&lq, &pi), permute(&mq, &pi));
    if mp.iter().any(|row| !row[0].is_empty()) {
        return Err(Error::Precondition(format!("{mu} has a nonempty quotient on runner {}", pi[0])));
    }
    Ok(lr_sum(&lp, &mp, false))
}

/// The conjectured Weyl-module multiplicity `[Δ(λ) : L(μ)]` for `λ ≈ μ` in
/// a Rouquier block, with `μ` arbitrary.
pub fn conjectural_schur_multiplicity(lambda: &Multipartition, mu: &Multipartition, mc: &Multicharge) -> Result<u64> {
    let (core, lq) = decompose(lambda, mc)?;
    let (core_mu, mq) = decompose(mu, mc)?;
    if core != core_mu || quotient_size(&lq) != quotient_size(&mq) {
        return Err(Error::Precondition(format!("approx_equiv fails for {lambda} and {mu}")));
    }
    if !RouquierData::from_multicore(&core, quotient_size(&lq)).is_rouquier() {
        return Err(Error::Precondition(format!("is_rouquier fails for {lambda}")));
    }
    Ok(lr_sum(&lq, &mq, true))
}

/// True when `p = 0` or every component of `μ` has fewer than `p`
/// removable `e`-rim hooks.
pub fn charp_validity(mu: &Multipartition, mc: &Multicharge, p: usize) -> Result<bool> {
    if p == 0 {
        return Ok(true);
    }
    let (_, q) = decompose(mu, mc)?;
    Ok(q.iter().all(|row| row.iter().map(Partition::size).sum::<usize>() < p))
}

/// The largest number of `e`-rim hooks on a single component of `μ`.
pub fn max_component_hook(mu: &Multipartition, mc: &Multicharge) -> Result<usize> {
    let (_, q) = decompose(mu, mc)?;
    Ok(q.iter().map(|row| row.iter().map(Partition::size).sum()).max().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::block::rouquier_multicore;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn quot(rows: &[&[&str]]) -> Quotient {
        rows.iter().map(|r| r.iter().map(|s| p(s)).collect()).collect()
    }

    fn example_pair() -> RouquierPair {
        let mc = Multicharge::new(3, vec![0, 1]).unwrap();
        let core = rouquier_multicore(&mc, 2);
        let mq = quot(&[&["-", "1", "1"], &["-", "-", "-"]]);
        let lq = quot(&[&["-", "1", "-"], &["-", "1", "-"]]);
        RouquierPair::from_quotients(&core, &lq, &mq).unwrap()
    }

    #[test]
    fn two_tuples_give_two_v_squared() {
        let pair = example_pair();
        let tuples = contributing_tuples(&pair);
        assert_eq!(tuples.len(), 2);
        assert!(tuples.iter().all(|t| t.weight == 1));
        assert_eq!(g_poly(&pair), "2v^2".parse().unwrap());
        let gammas: Vec<String> = tuples.iter().map(|t| t.gamma.to_string()).collect();
        assert!(gammas.contains(&"[(-) (-) (-) | (-) (-) (1) | (-) (-) (-)]".to_string()));
        assert!(gammas.contains(&"[(-) (-) (-) | (-) (1) (-) | (-) (-) (-)]".to_string()));
    }

    #[test]
    fn diagonal_is_one() {
        let pair = example_pair();
        let diag = RouquierPair::new(&pair.mu, &pair.mu, &pair.mc).unwrap();
        assert_eq!(g_poly(&diag), LaurentPoly::one());
        assert_eq!(enumerate_gamma(&diag).len(), 1);
    }

    #[test]
    fn level_one_single_chain() {
        let mc = Multicharge::new(2, vec![0]).unwrap();
        let core = rouquier_multicore(&mc, 1);
        let pair = RouquierPair::from_quotients(&core, &quot(&[&["1", "-"]]), &quot(&[&["-", "1"]])).unwrap();
        assert_eq!(g_r1(&pair).unwrap(), LaurentPoly::v_pow(1));
        assert_eq!(g_poly(&pair), LaurentPoly::v_pow(1));
    }

    #[test]
    fn charp_examples() {
        let mc = Multicharge::new(2, vec![0, 0]).unwrap();
        let core = rouquier_multicore(&mc, 3);
        let mu = compose(&core, &quot(&[&["-", "1"], &["-", "2"]])).unwrap();
        assert!(charp_validity(&mu, &mc, 0).unwrap());
        assert!(charp_validity(&mu, &mc, 3).unwrap());
        let mu = compose(&core, &quot(&[&["-", "1"], &["-", "3"]])).unwrap();
        assert!(!charp_validity(&mu, &mc, 3).unwrap());
    }

    #[test]
    fn word_shape() {
        assert_eq!(f_sj_word(2, 1, 3), vec![(1, 2), (2, 2), (0, 2)]);
        assert_eq!(f_sj_word(1, 2, 4), vec![(2, 1), (1, 1), (3, 1), (0, 1)]);
    }
}
