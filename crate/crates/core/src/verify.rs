//! Comparison of the closed formula with the canonical basis oracle over
//! whole blocks.

use serde::{Deserialize, Serialize};

use crate::block::block_classes_of;
use crate::error::Result;
use crate::fock::CanonicalBasis;
use crate::formula::{g_poly, RouquierPair};
use crate::laurent::LaurentPoly;
use crate::multipartition::{Multicharge, Multipartition};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Mismatch {
    pub lambda: String,
    pub mu: String,
    pub formula: LaurentPoly,
    pub oracle: LaurentPoly,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub classes: usize,
    pub labels: usize,
    pub pairs: usize,
    /// Classes left out because they are not Rouquier or exceed the hook cap.
    pub skipped_classes: usize,
    pub mismatches: Vec<Mismatch>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// For every Rouquier ≈-class of the block of `rep` with at most `max_hook`
/// hooks, compares `g_{λμ}(v)` with `d_{λμ}(v)` for every `e`-regular `μ`
/// and every `λ` in the class.
pub fn verify_block(rep: &Multipartition, mc: &Multicharge, max_hook: usize) -> Result<VerifyReport> {
    let mut report = VerifyReport::default();
    let mut cb = CanonicalBasis::new(mc);
    let mut classes = block_classes_of(rep, mc)?;
    // labels with larger first components are computed last
    classes.sort_by_key(|c| c.hook);
    for class in classes {
        if class.hook > max_hook || !class.rouquier_data().is_rouquier() {
            report.skipped_classes += 1;
            continue;
        }
        report.classes += 1;
        let members = class.members()?;
        for mu in members.iter().filter(|m| m.is_e_regular(mc.e())) {
            report.labels += 1;
            let g_mu = cb.g(mu)?;
            for lam in &members {
                let pair = RouquierPair::new(lam, mu, mc)?;
                let g = g_poly(&pair);
                let d = g_mu.coeff(lam);
                report.pairs += 1;
                if g != d {
                    report.mismatches.push(Mismatch {
                        lambda: lam.to_string(),
                        mu: mu.to_string(),
                        formula: g,
                        oracle: d,
                    });
                }
            }
        }
    }
    Ok(report)
}
