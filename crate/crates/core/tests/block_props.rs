mod common;

use std::collections::BTreeSet;

use common::*;
use proptest::prelude::*;
use rouquier::beta::{e_core_and_quotient, from_core_and_quotient};
use rouquier::block::{block_classes_of, block_members, quotient_tuples, ApproxClass};
use rouquier::multipartition::{
    approx_equiv, compose, decompose, residue_data, same_block, scopes_move, Multicharge,
};
use rouquier::partition::partitions_of;
use rouquier::{Multipartition, Partition};

fn hook_lengths(lam: &Partition) -> Vec<usize> {
    let conj = lam.conjugate();
    lam.cells().map(|(x, y)| lam.part(x - 1) - y + conj.part(y - 1) - x + 1).collect()
}

/// Residue counts straight from the definition.
fn residues(lam: &Multipartition, mc: &Multicharge) -> Vec<usize> {
    let e = mc.e() as i64;
    let mut out = vec![0; mc.e()];
    for (k, comp) in lam.components().iter().enumerate() {
        for (x, y) in comp.cells() {
            out[(mc.charge(k) + y as i64 - x as i64).rem_euclid(e) as usize] += 1;
        }
    }
    out
}

fn all_multipartitions(r: usize, n: usize) -> Vec<Multipartition> {
    let mut out = vec![vec![]];
    for k in 0..r {
        let mut next = vec![];
        for v in out {
            let used: usize = v.iter().map(Partition::size).sum();
            let sizes: Vec<usize> = if k + 1 == r { vec![n - used] } else { (0..=n - used).collect() };
            for s in sizes {
                for p in partitions_of(s) {
                    let mut w = v.clone();
                    w.push(p);
                    next.push(w);
                }
            }
        }
        out = next;
    }
    out.into_iter().map(|v| Multipartition::new(v).unwrap()).collect()
}

fn partition(max: usize) -> impl Strategy<Value = Partition> {
    (0..=max).prop_flat_map(|n| {
        let all = partitions_of(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn setting() -> impl Strategy<Value = (Multicharge, Multipartition)> {
    (2usize..=4, 1usize..=3).prop_flat_map(|(e, r)| {
        (
            proptest::collection::vec(0..e, r),
            proptest::collection::vec(partition(6), r),
        )
            .prop_map(move |(c, parts)| (Multicharge::new(e, c).unwrap(), Multipartition::new(parts).unwrap()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn core_has_no_e_hooks(lam in partition(25), e in 2usize..=5, a in -3i64..=3) {
        let cq = e_core_and_quotient(&lam, a, e).unwrap();
        prop_assert_eq!(cq.core.size() + e * cq.weight, lam.size());
        prop_assert!(hook_lengths(&cq.core).iter().all(|h| h % e != 0));
        prop_assert_eq!(hook_lengths(&lam).iter().filter(|h| *h % e == 0).count(), cq.weight);
        prop_assert_eq!(from_core_and_quotient(&cq.runner_charges, &cq.quotient).unwrap(), lam);
    }

    #[test]
    fn decompose_round_trips((mc, lam) in setting()) {
        let (core, q) = decompose(&lam, &mc).unwrap();
        prop_assert_eq!(compose(&core, &q).unwrap(), lam.clone());
        prop_assert_eq!(residue_data(&lam, &mc).unwrap().counts, residues(&lam, &mc));
    }

    #[test]
    fn scopes_move_is_an_involution((mc, lam) in setting(), i in 0usize..5) {
        let i = i % mc.e();
        let moved = scopes_move(&lam, &mc, i).unwrap();
        prop_assert_eq!(scopes_move(&moved, &mc, i).unwrap(), lam);
    }

    #[test]
    fn approx_implies_same_block((mc, lam) in setting(), pick in 0usize..1000) {
        let members = block_members(&lam, &mc).unwrap();
        let mu = &members[pick % members.len()];
        prop_assert!(same_block(&lam, mu, &mc).unwrap());
        for class in block_classes_of(&lam, &mc).unwrap() {
            for x in class.members().unwrap() {
                prop_assert!(same_block(&lam, &x, &mc).unwrap());
            }
        }
    }
}

#[test]
fn level_one_block_is_one_class() {
    for e in 2..=3 {
        for a in 0..e {
            let mc = mc(e, &[a]);
            for n in 0..=7 {
                let all = all_multipartitions(1, n);
                for lam in &all {
                    for mu in &all {
                        assert_eq!(
                            same_block(lam, mu, &mc).unwrap(),
                            approx_equiv(lam, mu, e).unwrap() && decompose(lam, &mc).unwrap().0 == decompose(mu, &mc).unwrap().0,
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn classes_match_brute_force() {
    for e in 2..=3 {
        for m in all_multicharges(e, 2) {
            for n in 0..=5 {
                let all = all_multipartitions(2, n);
                for lam in all.iter().step_by(3) {
                    let expected: BTreeSet<Multipartition> =
                        all.iter().filter(|mu| residues(mu, &m) == residues(lam, &m)).cloned().collect();
                    let got: BTreeSet<Multipartition> = block_members(lam, &m).unwrap().into_iter().collect();
                    assert_eq!(got, expected, "block of {lam}");
                    let class = ApproxClass::of(lam, &m).unwrap();
                    let members = class.members().unwrap();
                    let (core, _) = decompose(lam, &m).unwrap();
                    let brute: BTreeSet<Multipartition> = all
                        .iter()
                        .filter(|mu| decompose(mu, &m).unwrap().0 == core)
                        .cloned()
                        .collect();
                    assert_eq!(members.iter().cloned().collect::<BTreeSet<_>>(), brute, "class of {lam}");
                    assert_eq!(members.len(), quotient_tuples(2, e, class.hook).len());
                }
            }
        }
    }
}

#[test]
fn approx_is_finer_than_block_at_level_two() {
    let m = mc(2, &[0, 1]);
    let lam = mp("2;-");
    let mu = mp("1;1");
    assert!(same_block(&lam, &mu, &m).unwrap());
    assert!(!approx_equiv(&lam, &mu, 2).unwrap());
    assert!(block_classes_of(&lam, &m).unwrap().len() > 1);
}
