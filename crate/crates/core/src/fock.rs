//! The level-`r` Fock space: divided-power `f_i` actions and a canonical
//! basis oracle built from ladder words and bar-invariant straightening.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::block::block_classes;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::multipartition::{
    addable_nodes, add_node, removable_nodes, residue_data, same_block, BlockData, Multicharge,
    Multipartition,
};
use crate::partition::Partition;

/// A finitely supported map from multipartitions to Laurent polynomials.
#[derive(Clone, PartialEq, Eq)]
pub struct FockVector {
    mc: Multicharge,
    terms: BTreeMap<Multipartition, LaurentPoly>,
}

impl FockVector {
    pub fn zero(mc: &Multicharge) -> Self {
        FockVector { mc: mc.clone(), terms: BTreeMap::new() }
    }

    /// The standard basis vector `s_λ`.
    pub fn basis(mc: &Multicharge, lambda: Multipartition) -> Result<Self> {
        mc.check_rank(&lambda)?;
        let mut v = Self::zero(mc);
        v.terms.insert(lambda, LaurentPoly::one());
        Ok(v)
    }

    /// `s_{∅^r}`.
    pub fn vacuum(mc: &Multicharge) -> Self {
        Self::basis(mc, Multipartition::empty(mc.rank())).expect("rank matches")
    }

    pub fn multicharge(&self) -> &Multicharge {
        &self.mc
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, lambda: &Multipartition) -> LaurentPoly {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Multipartition, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, lambda: Multipartition, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(lambda).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, p| !p.is_zero());
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, c: &LaurentPoly, other: &FockVector) {
        for (l, p) in &other.terms {
            let term = c * p;
            if term.is_zero() {
                continue;
            }
            match self.terms.get_mut(l) {
                Some(slot) => {
                    *slot += &term;
                    if slot.is_zero() {
                        self.terms.remove(l);
                    }
                }
                None => {
                    self.terms.insert(l.clone(), term);
                }
            }
        }
    }

    /// The coefficient list in the order of [`Multipartition::order_key`],
    /// largest first.
    pub fn sorted_terms(&self) -> Vec<(&Multipartition, &LaurentPoly)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.order_key().cmp(&a.0.order_key()));
        v
    }

    /// Puts an empty first component in front of every label.
    pub fn lift(&self, mc: &Multicharge) -> Result<FockVector> {
        if mc.tail().as_ref() != Some(&self.mc) {
            return Err(Error::InvalidParameter("lift target must extend the multicharge by one component".into()));
        }
        Ok(FockVector {
            mc: mc.clone(),
            terms: self.terms.iter().map(|(l, p)| (l.lift(), p.clone())).collect(),
        })
    }

    /// `f_i^{(m)}` applied to every term.
    pub fn f_divided(&self, i: usize, m: usize) -> Result<FockVector> {
        if i >= self.mc.e() {
            return Err(Error::InvalidParameter(format!("residue {i} is not in 0..{}", self.mc.e())));
        }
        let mut out: HashMap<Multipartition, LaurentPoly> = HashMap::new();
        for (nu, c) in &self.terms {
            for (lambda, n) in f_divided_basis(nu, &self.mc, i, m)? {
                let slot = out.entry(lambda).or_default();
                *slot += &c.shift(n);
            }
        }
        Ok(FockVector { mc: self.mc.clone(), terms: out.into_iter().filter(|(_, p)| !p.is_zero()).collect() })
    }

    /// Applies a word of divided powers written in operator notation, so
    /// the rightmost letter acts first.
    pub fn f_word(&self, word: &[(usize, usize)]) -> Result<FockVector> {
        let mut x = self.clone();
        for &(i, m) in word.iter().rev() {
            x = x.f_divided(i, m)?;
        }
        Ok(x)
    }
}

impl fmt::Debug for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.sorted_terms().iter().map(|(l, p)| format!("({p})·s({l})")).collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// `f_i^{(m)} s_ν` as a list of `(λ, N(ν, λ))`.
pub fn f_divided_basis(nu: &Multipartition, mc: &Multicharge, i: usize, m: usize) -> Result<Vec<(Multipartition, i32)>> {
    let add = addable_nodes(nu, mc, i)?;
    if m > add.len() {
        return Ok(Vec::new());
    }
    if m == 0 {
        return Ok(vec![(nu.clone(), 0)]);
    }
    let rem = removable_nodes(nu, mc, i)?;
    // removable i-nodes of ν above each addable node
    let rem_above: Vec<i32> = add
        .iter()
        .map(|a| rem.iter().filter(|r| r.is_above(a)).count() as i32)
        .collect();
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(m);
    fn rec(
        start: usize,
        m: usize,
        n_add: usize,
        rem_above: &[i32],
        chosen: &mut Vec<usize>,
        out: &mut Vec<(Vec<usize>, i32)>,
    ) {
        if chosen.len() == m {
            let mut n = 0;
            for (s_idx, &j) in chosen.iter().enumerate() {
                // addable nodes above j that were not chosen
                n += (j - s_idx) as i32 - rem_above[j];
            }
            out.push((chosen.clone(), n));
            return;
        }
        for j in start..=(n_add - (m - chosen.len())) {
            chosen.push(j);
            rec(j + 1, m, n_add, rem_above, chosen, out);
            chosen.pop();
        }
    }
    let mut subsets = Vec::new();
    rec(0, m, add.len(), &rem_above, &mut chosen, &mut subsets);
    for (s, n) in subsets {
        let mut lambda = nu.clone();
        for &j in &s {
            lambda = add_node(&lambda, &add[j]).expect("distinct addable nodes stay addable");
        }
        out.push((lambda, n));
    }
    Ok(out)
}

/// The ladder word of an `e`-regular partition at charge `a`, listed in the
/// order of application: node `(x, y)` lies on ladder `(x − 1) + (e − 1)(y − 1)`,
/// whose nodes all have residue `a − ladder`.
pub fn ladder_word(p: &Partition, a: usize, e: usize) -> Vec<(usize, usize)> {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for (x, y) in p.cells() {
        *counts.entry((x - 1) + (e - 1) * (y - 1)).or_default() += 1;
    }
    counts.into_iter().map(|(l, k)| ((a + e * (l / e + 1) - l) % e, k)).collect()
}

/// A canonical basis element `G(μ)`.
#[derive(Clone, Debug)]
pub struct CanonicalBasisElement {
    pub label: Multipartition,
    pub vector: FockVector,
}

/// Memoized canonical basis computations for a fixed multicharge. Labels
/// are the multipartitions whose components are all `e`-regular.
pub struct CanonicalBasis {
    mc: Multicharge,
    cache: HashMap<Multipartition, FockVector>,
    lower: Option<Box<CanonicalBasis>>,
    max_steps: usize,
}

impl CanonicalBasis {
    pub fn new(mc: &Multicharge) -> Self {
        CanonicalBasis {
            mc: mc.clone(),
            cache: HashMap::new(),
            lower: mc.tail().map(|t| Box::new(CanonicalBasis::new(&t))),
            max_steps: 100_000,
        }
    }

    pub fn multicharge(&self) -> &Multicharge {
        &self.mc
    }

    pub fn is_label(&self, mu: &Multipartition) -> bool {
        mu.rank() == self.mc.rank() && mu.is_e_regular(self.mc.e())
    }

    /// `G(μ)`.
    pub fn g(&mut self, mu: &Multipartition) -> Result<FockVector> {
        if let Some(v) = self.cache.get(mu) {
            return Ok(v.clone());
        }
        if !self.is_label(mu) {
            return Err(Error::UnknownLabel(mu.to_string()));
        }
        let e = self.mc.e();
        let base = match &mut self.lower {
            None => FockVector::vacuum(&self.mc),
            Some(lower) => lower.g(&mu.tail().expect("rank ≥ 2"))?.lift(&self.mc)?,
        };
        let mut word = ladder_word(mu.component(0), self.mc.charges()[0], e);
        word.reverse();
        let mut x = base.f_word(&word)?;
        let lead = x.coeff(mu);
        if lead != LaurentPoly::one() {
            return Err(Error::OrderingViolation(format!(
                "ladder word for {mu} gives leading coefficient {lead}"
            )));
        }
        let key = mu.order_key();
        let mut steps = 0;
        loop {
            steps += 1;
            if steps > self.max_steps {
                return Err(Error::OrderingViolation(format!("straightening {mu} did not terminate")));
            }
            let target = x
                .terms
                .iter()
                .filter(|(l, c)| *l != mu && !c.in_v_z_v())
                .max_by(|a, b| a.0.order_key().cmp(&b.0.order_key()))
                .map(|(l, c)| (l.clone(), c.clone()));
            let Some((lambda, c)) = target else { break };
            if lambda.order_key() >= key {
                return Err(Error::OrderingViolation(format!(
                    "{lambda} has coefficient {c} in the expansion for {mu} but does not sort below it"
                )));
            }
            if !c.is_bar_symmetric() && c.nonpositive_closure().is_zero() {
                return Err(Error::OrderingViolation(format!("coefficient {c} at {lambda} cannot be straightened")));
            }
            let gl = self.g(&lambda)?;
            x.add_scaled(&-&c.nonpositive_closure(), &gl);
        }
        if let Some((l, _)) = x.terms.iter().find(|(l, _)| l.order_key() > key) {
            return Err(Error::OrderingViolation(format!("{l} sorts above the label {mu} in its own expansion")));
        }
        self.cache.insert(mu.clone(), x.clone());
        Ok(x)
    }

    /// `d_{λμ}(v)`.
    pub fn d(&mut self, lambda: &Multipartition, mu: &Multipartition) -> Result<LaurentPoly> {
        if !self.is_label(mu) {
            return Err(Error::UnknownLabel(mu.to_string()));
        }
        if lambda.size() != mu.size() || !same_block(lambda, mu, &self.mc)? {
            return Ok(LaurentPoly::zero());
        }
        if lambda.component(0).size() > mu.component(0).size() {
            return Ok(LaurentPoly::zero());
        }
        Ok(self.g(mu)?.coeff(lambda))
    }

    /// Decomposes `x` as `Σ b_ν G(ν)` with bar-symmetric `b_ν`, peeling off
    /// the largest label each time. Returns `false` as soon as that fails.
    pub fn is_bar_invariant(&mut self, x: &FockVector) -> Result<bool> {
        let mut x = x.clone();
        let mut steps = 0;
        while let Some((top, c)) = x
            .terms
            .iter()
            .max_by(|a, b| a.0.order_key().cmp(&b.0.order_key()))
            .map(|(l, c)| (l.clone(), c.clone()))
        {
            steps += 1;
            if steps > self.max_steps || !self.is_label(&top) || !c.is_bar_symmetric() {
                return Ok(false);
            }
            let g = self.g(&top)?;
            x.add_scaled(&-&c, &g);
        }
        Ok(true)
    }
}

/// Canonical basis elements for every label in the block with residue data
/// `block`, optionally restricted to labels whose first component has at
/// most `max_first_component` nodes.
pub fn canonical_basis_block(
    mc: &Multicharge,
    block: &BlockData,
    max_first_component: Option<usize>,
) -> Result<Vec<CanonicalBasisElement>> {
    let mut labels = Vec::new();
    for class in block_classes(block, mc) {
        for m in class.members()? {
            if m.is_e_regular(mc.e()) && max_first_component.is_none_or(|c| m.component(0).size() <= c) {
                labels.push(m);
            }
        }
    }
    labels.sort_by_key(|m| m.order_key());
    let mut cb = CanonicalBasis::new(mc);
    labels
        .into_iter()
        .map(|label| {
            let vector = cb.g(&label)?;
            Ok(CanonicalBasisElement { label, vector })
        })
        .collect()
}

/// Canonical basis elements for the block containing `lambda`.
pub fn canonical_basis_block_of(lambda: &Multipartition, mc: &Multicharge) -> Result<Vec<CanonicalBasisElement>> {
    canonical_basis_block(mc, &residue_data(lambda, mc)?, None)
}

/// Serializable transition matrix: rows are `λ`, columns are labels `μ`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct TransitionMatrix {
    pub rows: Vec<String>,
    pub columns: Vec<String>,
    pub entries: Vec<Vec<LaurentPoly>>,
}

impl TransitionMatrix {
    pub fn from_elements(elements: &[CanonicalBasisElement]) -> Self {
        let mut rows: Vec<&Multipartition> = elements.iter().flat_map(|g| g.vector.terms.keys()).collect();
        rows.sort_by(|a, b| b.order_key().cmp(&a.order_key()).then_with(|| a.cmp(b)));
        rows.dedup();
        let columns: Vec<&Multipartition> = elements.iter().map(|g| &g.label).collect();
        let entries = rows
            .iter()
            .map(|l| elements.iter().map(|g| g.vector.coeff(l)).collect())
            .collect();
        TransitionMatrix {
            rows: rows.iter().map(|l| l.to_string()).collect(),
            columns: columns.iter().map(|l| l.to_string()).collect(),
            entries,
        }
    }
}
