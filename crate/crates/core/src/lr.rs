//! Littlewood–Richardson coefficients.
//!
//! `c^λ_{αβ}` is the number of LR tableaux of shape `λ/α` and content `β`,
//! counted by backtracking. Results are cached per thread; the cache size is
//! read once from `ROUQUIER_LR_CACHE` (number of entries, `0` disables it).

use std::cell::RefCell;
use std::collections::HashMap;
use std::sync::OnceLock;

use crate::beta::BetaSet;
use crate::error::{Error, Result};
use crate::partition::{partitions_containing, partitions_inside, Partition};

const DEFAULT_CACHE: usize = 1 << 20;

fn cache_capacity() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("ROUQUIER_LR_CACHE")
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(DEFAULT_CACHE)
    })
}

type Key = (Vec<usize>, Vec<usize>, Vec<usize>);

thread_local! {
    static CACHE: RefCell<HashMap<Key, u64>> = RefCell::new(HashMap::new());
}

/// `c^λ_{αβ}`.
pub fn lr_coeff(lambda: &Partition, alpha: &Partition, beta: &Partition) -> u64 {
    if lambda.size() != alpha.size() + beta.size() || !lambda.contains(alpha) || !lambda.contains(beta) {
        return 0;
    }
    if alpha.is_empty() {
        return u64::from(lambda == beta);
    }
    if beta.is_empty() {
        return u64::from(lambda == alpha);
    }
    // c^λ_{αβ} = c^λ_{βα}; fill the smaller content
    let (alpha, beta) = if beta.size() <= alpha.size() { (alpha, beta) } else { (beta, alpha) };
    if beta.len() == 1 {
        return u64::from(horizontal_strip(lambda, alpha));
    }
    if beta.part(0) == 1 {
        return u64::from(vertical_strip(lambda, alpha));
    }
    let cap = cache_capacity();
    if cap == 0 {
        return count_lr_tableaux(lambda, alpha, beta);
    }
    let key = (lambda.parts().to_vec(), alpha.parts().to_vec(), beta.parts().to_vec());
    if let Some(v) = CACHE.with(|c| c.borrow().get(&key).copied()) {
        return v;
    }
    let v = count_lr_tableaux(lambda, alpha, beta);
    CACHE.with(|c| {
        let mut c = c.borrow_mut();
        if c.len() >= cap {
            c.clear();
        }
        c.insert(key, v);
    });
    v
}

/// Plain backtracking count with no shortcuts or cache. Used directly by
/// tests as the reference implementation.
pub fn count_lr_tableaux(lambda: &Partition, alpha: &Partition, beta: &Partition) -> u64 {
    if lambda.size() != alpha.size() + beta.size() || !lambda.contains(alpha) {
        return 0;
    }
    let rows = lambda.len();
    let mut fill: Vec<Vec<usize>> = (0..rows).map(|r| vec![0; lambda.part(r)]).collect();
    let mut counts = vec![0usize; beta.len() + 1];
    let mut st = Search { lambda, alpha, beta, fill: &mut fill, counts: &mut counts };
    st.go(0, lambda.part(0))
}

struct Search<'a> {
    lambda: &'a Partition,
    alpha: &'a Partition,
    beta: &'a Partition,
    fill: &'a mut Vec<Vec<usize>>,
    counts: &'a mut Vec<usize>,
}

impl Search<'_> {
    // Fill cell (row, col - 1), moving right to left then down.
    fn go(&mut self, row: usize, col: usize) -> u64 {
        if row == self.lambda.len() {
            return 1;
        }
        if col == self.alpha.part(row) {
            let next = row + 1;
            return self.go(next, self.lambda.part(next));
        }
        let c = col - 1;
        let right = if c + 1 < self.lambda.part(row) { self.fill[row][c + 1] } else { usize::MAX };
        let above = if row > 0 && c >= self.alpha.part(row - 1) { self.fill[row - 1][c] } else { 0 };
        let hi = right.min(row + 1).min(self.beta.len());
        let mut total = 0;
        for k in (above + 1)..=hi {
            if self.counts[k] == self.beta.part(k - 1) {
                continue;
            }
            if k > 1 && self.counts[k] == self.counts[k - 1] {
                continue;
            }
            self.counts[k] += 1;
            self.fill[row][c] = k;
            total += self.go(row, c);
            self.counts[k] -= 1;
        }
        total
    }
}

/// `c^λ_{α₁α₂…α_t}` by left-to-right contraction.
pub fn lr_coeff_multi(lambda: &Partition, factors: &[Partition]) -> Result<u64> {
    if factors.is_empty() {
        return Err(Error::InvalidParameter("at least one factor is required".into()));
    }
    Ok(multi(lambda, factors))
}

fn multi(lambda: &Partition, factors: &[Partition]) -> u64 {
    let total: usize = factors.iter().map(Partition::size).sum();
    if total != lambda.size() {
        return 0;
    }
    match factors {
        [a] => u64::from(a == lambda),
        [a, b] => lr_coeff(lambda, a, b),
        [a, rest @ ..] => {
            if a.is_empty() {
                return multi(lambda, rest);
            }
            if !lambda.contains(a) {
                return 0;
            }
            partitions_inside(lambda, lambda.size() - a.size())
                .iter()
                .map(|b| {
                    let c = lr_coeff(lambda, a, b);
                    if c == 0 { 0 } else { c * multi(b, rest) }
                })
                .sum()
        }
        [] => unreachable!(),
    }
}

/// All `λ` with `c^λ_{αβ} ≠ 0`, with their coefficients.
pub fn lr_product(alpha: &Partition, beta: &Partition) -> Vec<(Partition, u64)> {
    let (a, b) = if alpha.size() >= beta.size() { (alpha, beta) } else { (beta, alpha) };
    partitions_containing(a, a.size() + b.size())
        .into_iter()
        .filter(|l| l.contains(b))
        .filter_map(|l| {
            let c = lr_coeff(&l, a, b);
            (c > 0).then_some((l, c))
        })
        .collect()
}

fn vertical_strip(lambda: &Partition, nu: &Partition) -> bool {
    lambda.contains(nu) && (0..lambda.len()).all(|i| lambda.part(i) - nu.part(i) <= 1)
}

fn horizontal_strip(lambda: &Partition, nu: &Partition) -> bool {
    lambda.contains(nu) && (1..lambda.len()).all(|i| lambda.part(i) <= nu.part(i - 1))
}

/// `c^λ_{ν(1^s)}` via the row test.
pub fn pieri_vertical(lambda: &Partition, nu: &Partition, s: usize) -> u64 {
    u64::from(lambda.size() == nu.size() + s && vertical_strip(lambda, nu))
}

/// `c^λ_{ν(s)}` via the column test.
pub fn pieri_horizontal(lambda: &Partition, nu: &Partition, s: usize) -> u64 {
    u64::from(lambda.size() == nu.size() + s && horizontal_strip(lambda, nu))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StripKind {
    Vertical,
    Horizontal,
}

/// The Pieri coefficient read off two β-sets of equal charge: the beads
/// leaving `B_ν` and arriving in `B_λ` must interleave, and every position
/// strictly between a leaving bead and its arrival must be occupied in both
/// sets (vertical) or in neither (horizontal).
pub fn pieri_beta(b_nu: &BetaSet, b_lambda: &BetaSet, kind: StripKind) -> Result<u64> {
    if b_nu.charge() != b_lambda.charge() {
        return Err(Error::ChargeMismatch(b_nu.charge(), b_lambda.charge()));
    }
    let lo = b_nu.threshold().min(b_lambda.threshold());
    let hi = [b_nu.upper_beads().first(), b_lambda.upper_beads().first(), Some(&lo)]
        .into_iter()
        .flatten()
        .copied()
        .max()
        .unwrap();
    let leaving: Vec<i64> = (lo..=hi).filter(|&b| b_nu.contains(b) && !b_lambda.contains(b)).collect();
    let arriving: Vec<i64> = (lo..=hi).filter(|&b| b_lambda.contains(b) && !b_nu.contains(b)).collect();
    debug_assert_eq!(leaving.len(), arriving.len());
    for (t, (&b, &c)) in leaving.iter().zip(&arriving).enumerate() {
        if b >= c || leaving.get(t + 1).is_some_and(|&nb| nb <= c) {
            return Ok(0);
        }
        for x in (b + 1)..c {
            let ok = match kind {
                StripKind::Vertical => b_nu.contains(x) && b_lambda.contains(x),
                StripKind::Horizontal => !b_nu.contains(x) && !b_lambda.contains(x),
            };
            if !ok {
                return Ok(0);
            }
        }
    }
    Ok(1)
}
