//! Brute-force oracles and generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;
use rouquier::block::{quotient_tuples, rouquier_multicore};
use rouquier::fock::FockVector;
use rouquier::formula::{in_r_s, q_vector, rouquier_f_action};
use rouquier::lr::{lr_coeff, lr_product};
use rouquier::multipartition::{compose, decompose, Multicore, Quotient};
use rouquier::partition::{partitions_containing, partitions_inside, partitions_of};
use rouquier::{Multicharge, Multipartition, Partition};

pub fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

pub fn mp(s: &str) -> Multipartition {
    s.parse().unwrap()
}

pub fn mc(e: usize, charges: &[usize]) -> Multicharge {
    Multicharge::new(e, charges.to_vec()).unwrap()
}

/// Every multicharge of rank `r` for `e`.
pub fn all_multicharges(e: usize, r: usize) -> Vec<Multicharge> {
    let mut out = vec![vec![]];
    for _ in 0..r {
        out = out
            .into_iter()
            .flat_map(|v: Vec<usize>| {
                (0..e).map(move |a| {
                    let mut w = v.clone();
                    w.push(a);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(|c| Multicharge::new(e, c).unwrap()).collect()
}

pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

pub fn random_partition(rng: &mut StdRng, max: usize) -> Partition {
    let n = rng.gen_range(0..=max);
    partitions_of(n).choose(rng).unwrap().clone()
}

pub fn random_multipartition(rng: &mut StdRng, r: usize, max: usize) -> Multipartition {
    Multipartition::new((0..r).map(|_| random_partition(rng, max)).collect()).unwrap()
}

/// Cells of `λ/ν` read off the diagrams, or `None` if `ν ⊄ λ`.
pub fn skew_cells(lambda: &Partition, nu: &Partition) -> Option<Vec<(usize, usize)>> {
    let inner: BTreeSet<(usize, usize)> = nu.cells().collect();
    let outer: BTreeSet<(usize, usize)> = lambda.cells().collect();
    if !inner.is_subset(&outer) {
        return None;
    }
    Some(outer.difference(&inner).copied().collect())
}

/// `c^λ_{ν(1^s)}` by the diagram rule.
pub fn column_strip_rule(lambda: &Partition, nu: &Partition, s: usize) -> u64 {
    match skew_cells(lambda, nu) {
        Some(cells) if cells.len() == s => {
            let rows: BTreeSet<usize> = cells.iter().map(|c| c.0).collect();
            u64::from(rows.len() == cells.len())
        }
        _ => 0,
    }
}

/// `c^λ_{ν(s)}` by the diagram rule.
pub fn row_strip_rule(lambda: &Partition, nu: &Partition, s: usize) -> u64 {
    match skew_cells(lambda, nu) {
        Some(cells) if cells.len() == s => {
            let cols: BTreeSet<usize> = cells.iter().map(|c| c.1).collect();
            u64::from(cols.len() == cells.len())
        }
        _ => 0,
    }
}

/// `Σ_σ c^λ_{xσ} c^σ_{yz}`.
pub fn assoc_sum(lambda: &Partition, x: &Partition, y: &Partition, z: &Partition) -> u64 {
    lr_product(y, z).iter().map(|(sigma, c)| c * lr_coeff(lambda, x, sigma)).sum()
}

/// `Σ_μ c^μ_{ab} c^μ_{σ(1^t)}`.
pub fn column_product_lhs(a: &Partition, b: &Partition, sigma: &Partition, t: usize) -> u64 {
    let col = Partition::column(t);
    lr_product(a, b).iter().map(|(m, c)| c * lr_coeff(m, sigma, &col)).sum()
}

/// `Σ_l Σ_{α,β} c^σ_{α′β} c^{a′}_{α(l)} c^b_{β(1^{t−l})}`.
pub fn column_product_rhs(a: &Partition, b: &Partition, sigma: &Partition, t: usize) -> u64 {
    let ac = a.conjugate();
    let mut total = 0;
    for l in 0..=t {
        if l > a.size() || t - l > b.size() {
            continue;
        }
        let row = Partition::row(l);
        let col = Partition::column(t - l);
        for alpha in partitions_inside(&ac, a.size() - l) {
            let c1 = lr_coeff(&ac, &alpha, &row);
            if c1 == 0 {
                continue;
            }
            for beta in partitions_inside(b, b.size() + l - t) {
                let c2 = lr_coeff(b, &beta, &col);
                if c2 == 0 {
                    continue;
                }
                total += c1 * c2 * lr_coeff(sigma, &alpha.conjugate(), &beta);
            }
        }
    }
    total
}

fn total(ps: &[Partition]) -> usize {
    ps.iter().map(Partition::size).sum()
}

/// Size forced on `γ^0` by the nested strip identity, if nonnegative.
fn nested_strip_gamma0(eta: &[Partition], nu: &[Partition], s: usize) -> Option<usize> {
    (total(eta) as i64 - total(nu) as i64 - s as i64).try_into().ok()
}

/// Left side of the nested strip identity.
pub fn nested_strip_lhs(eta: &[Partition], nu: &[Partition], s: usize) -> u64 {
    let r = eta.len();
    let Some(g0) = nested_strip_gamma0(eta, nu, s) else { return 0 };
    // state (γ^k, Σ_{l<k} z_l)
    let mut states: HashMap<(Partition, usize), u64> = partitions_of(g0).into_iter().map(|g| ((g, 0), 1)).collect();
    for k in 0..r {
        let mut next: HashMap<(Partition, usize), u64> = HashMap::new();
        for ((gamma, used), w) in states {
            for (delta, c1) in lr_product(&nu[k], &gamma) {
                for z in 0..=(s - used) {
                    if z > eta[k].size() {
                        continue;
                    }
                    let col = Partition::column(z);
                    for eps in partitions_inside(&eta[k], eta[k].size() - z) {
                        let c3 = lr_coeff(&eta[k], &eps, &col);
                        if c3 == 0 || eps.size() > delta.size() {
                            continue;
                        }
                        for g in partitions_inside(&delta, delta.size() - eps.size()) {
                            let c2 = lr_coeff(&delta, &g, &eps);
                            if c2 > 0 {
                                *next.entry((g, used + z)).or_default() += w * c1 * c2 * c3;
                            }
                        }
                    }
                }
            }
        }
        states = next;
    }
    states.get(&(Partition::empty(), s)).copied().unwrap_or(0)
}

/// Right side of the nested strip identity with the split at component `m`.
pub fn nested_strip_rhs(eta: &[Partition], nu: &[Partition], s: usize, m: usize) -> u64 {
    let r = eta.len();
    assert!(m < r);
    let Some(g0) = nested_strip_gamma0(eta, nu, s) else { return 0 };
    let mut states: HashMap<(Partition, usize), u64> = partitions_of(g0).into_iter().map(|g| ((g, 0), 1)).collect();
    for k in 0..m {
        let mut next: HashMap<(Partition, usize), u64> = HashMap::new();
        for ((gamma, used), w) in states {
            for (delta, c1) in lr_product(&nu[k], &gamma) {
                for z in 0..=(s - used) {
                    if z > eta[k].size() {
                        continue;
                    }
                    let col = Partition::column(z);
                    for eps in partitions_inside(&eta[k], eta[k].size() - z) {
                        let c3 = lr_coeff(&eta[k], &eps, &col);
                        if c3 == 0 || eps.size() > delta.size() {
                            continue;
                        }
                        for g in partitions_inside(&delta, delta.size() - eps.size()) {
                            let c2 = lr_coeff(&delta, &g, &eps);
                            if c2 > 0 {
                                *next.entry((g, used + z)).or_default() += w * c1 * c2 * c3;
                            }
                        }
                    }
                }
            }
        }
        states = next;
    }
    // δ^m from ν^m γ^m (1^Z)
    let mut deltas: HashMap<Partition, u64> = HashMap::new();
    for ((gamma, used), w) in states {
        let big_z = s - used;
        for (sigma, c1) in lr_product(&nu[m], &gamma) {
            for (delta, c2) in lr_product(&sigma, &Partition::column(big_z)) {
                *deltas.entry(delta).or_default() += w * c1 * c2;
            }
        }
    }
    for k in m + 1..r {
        let mut next: HashMap<Partition, u64> = HashMap::new();
        for (prev, w) in deltas {
            if eta[k - 1].size() > prev.size() {
                continue;
            }
            for g in partitions_inside(&prev, prev.size() - eta[k - 1].size()) {
                let c1 = lr_coeff(&prev, &g, &eta[k - 1]);
                if c1 == 0 {
                    continue;
                }
                for (delta, c2) in lr_product(&nu[k], &g) {
                    *next.entry(delta).or_default() += w * c1 * c2;
                }
            }
        }
        deltas = next;
    }
    deltas.get(&eta[r - 1]).copied().unwrap_or(0)
}

/// A uniformly chosen quotient of total size `h`, optionally with runner 0
/// empty in every component.
pub fn random_quotient(rng: &mut StdRng, r: usize, e: usize, h: usize, regular: bool) -> Quotient {
    let all: Vec<Quotient> = quotient_tuples(r, e, h)
        .into_iter()
        .filter(|q| !regular || q.iter().all(|row| row[0].is_empty()))
        .collect();
    all.choose(rng).unwrap().clone()
}

/// An instance `(τ, s, j)` with `τ` in a block where `s` more hooks keep it
/// Rouquier.
pub struct FInstance {
    pub mc: Multicharge,
    pub core: Multicore,
    pub tau: Multipartition,
    pub s: usize,
    pub j: usize,
}

pub fn random_f_instance(rng: &mut StdRng, regular: bool) -> FInstance {
    loop {
        let e = rng.gen_range(2..=3);
        let r = rng.gen_range(1..=2);
        let charges: Vec<usize> = (0..r).map(|_| rng.gen_range(0..e)).collect();
        let mc = Multicharge::new(e, charges).unwrap();
        let h = rng.gen_range(0..=2);
        let s = rng.gen_range(1..=2);
        let j = rng.gen_range(1..e);
        let d = (h + s) as i64 - rng.gen_range(0..=1);
        let core = rouquier_multicore(&mc, d.max(0));
        let q = random_quotient(rng, r, e, h, regular);
        let tau = compose(&core, &q).unwrap();
        if in_r_s(&tau, &mc, s).unwrap() {
            return FInstance { mc, core, tau, s, j };
        }
    }
}

/// `Σ_Δ c^Δ_{ν^0_j (1^s)} Q(Δ)`, where `Δ` replaces runner `j` of the first
/// component of the quotient of `ν`.
pub fn q_recursion_rhs(nu: &Multipartition, mc: &Multicharge, s: usize, j: usize) -> FockVector {
    let (core, q) = decompose(nu, mc).unwrap();
    let inner = q[0][j].clone();
    let col = Partition::column(s);
    let mut out = FockVector::zero(mc);
    for delta in partitions_containing(&inner, inner.size() + s) {
        let c = lr_coeff(&delta, &inner, &col);
        if c == 0 {
            continue;
        }
        let mut q2 = q.clone();
        q2[0][j] = delta;
        let target = compose(&core, &q2).unwrap();
        out.add_scaled(&rouquier::LaurentPoly::from(c as i64), &q_vector(&target, mc).unwrap());
    }
    out
}

/// `f^{(s,j)}` applied termwise to `Q(ν)`.
pub fn q_recursion_lhs(nu: &Multipartition, mc: &Multicharge, s: usize, j: usize) -> FockVector {
    let q = q_vector(nu, mc).unwrap();
    let mut out = FockVector::zero(mc);
    for (lam, c) in q.iter() {
        out.add_scaled(c, &rouquier_f_action(lam, s, j, mc).unwrap());
    }
    out
}
