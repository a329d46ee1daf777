mod common;

use common::*;
use proptest::prelude::*;
use rouquier::block::block_members;
use rouquier::fock::{canonical_basis_block_of, ladder_word, CanonicalBasis, FockVector, TransitionMatrix};
use rouquier::multipartition::{residue_data, same_block};
use rouquier::{Error, LaurentPoly, Multicharge, Multipartition};

fn word() -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (2usize..=3).prop_flat_map(|e| (Just(e), proptest::collection::vec((0..e, 1usize..=2), 0..=5)))
}

fn lp(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn words_compose((e, w) in word(), split in 0usize..6, a in 0usize..3) {
        let m = Multicharge::new(e, vec![a % e, (a + 1) % e]).unwrap();
        let split = split.min(w.len());
        let v = FockVector::vacuum(&m);
        let whole = v.f_word(&w).unwrap();
        // operator notation: the right part acts first
        let staged = v.f_word(&w[split..]).unwrap().f_word(&w[..split]).unwrap();
        prop_assert_eq!(whole, staged);
    }

    #[test]
    fn divided_powers(e in 2usize..=3, i in 0usize..3, m in 1u32..=3, seed in any::<u64>()) {
        use rand::SeedableRng;
        let i = i % e;
        let mc = Multicharge::new(e, vec![0, 1 % e]).unwrap();
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let x = FockVector::basis(&mc, random_multipartition(&mut rng, 2, 4)).unwrap();
        let mut plain = x.clone();
        for _ in 0..m {
            plain = plain.f_divided(i, 1).unwrap();
        }
        let div = x.f_divided(i, m as usize).unwrap();
        let fact = LaurentPoly::quantum_factorial(m);
        prop_assert_eq!(plain.len(), div.len());
        for (l, c) in plain.iter() {
            prop_assert_eq!(c.div_exact(&fact), Some(div.coeff(l)));
        }
    }

    #[test]
    fn f_preserves_residue_content((e, w) in word()) {
        let m = Multicharge::new(e, vec![0]).unwrap();
        let out = FockVector::vacuum(&m).f_word(&w).unwrap();
        let terms: Vec<&Multipartition> = out.iter().map(|x| x.0).collect();
        for t in &terms {
            prop_assert!(same_block(t, terms[0], &m).unwrap());
        }
    }
}

#[test]
fn level_one_small_blocks() {
    let m = mc(2, &[0]);
    let mut cb = CanonicalBasis::new(&m);
    let g = cb.g(&mp("2")).unwrap();
    assert_eq!(g.coeff(&mp("2")), LaurentPoly::one());
    assert_eq!(g.coeff(&mp("1,1")), lp("v"));
    assert_eq!(g.len(), 2);

    let m = mc(3, &[0]);
    let mut cb = CanonicalBasis::new(&m);
    let g3 = cb.g(&mp("3")).unwrap();
    assert_eq!(g3.coeff(&mp("2,1")), lp("v"));
    assert_eq!(g3.coeff(&mp("1,1,1")), LaurentPoly::zero());
    let g21 = cb.g(&mp("2,1")).unwrap();
    assert_eq!(g21.coeff(&mp("2,1")), LaurentPoly::one());
    assert_eq!(g21.coeff(&mp("1,1,1")), lp("v"));
    assert_eq!(g21.len(), 2);
}

#[test]
fn level_one_weight_two_at_e_two() {
    // the principal block of size 4 at e = 2
    let m = mc(2, &[0]);
    let mut cb = CanonicalBasis::new(&m);
    let g4 = cb.g(&mp("4")).unwrap();
    assert_eq!(g4.coeff(&mp("3,1")), lp("v"));
    assert_eq!(g4.coeff(&mp("2,1,1")), lp("v"));
    assert_eq!(g4.coeff(&mp("1,1,1,1")), lp("v^2"));
    assert_eq!(g4.coeff(&mp("2,2")), LaurentPoly::zero());
    let g31 = cb.g(&mp("3,1")).unwrap();
    assert_eq!(g31.coeff(&mp("2,2")), lp("v"));
    assert_eq!(g31.coeff(&mp("2,1,1")), lp("v^2"));
    assert_eq!(g31.coeff(&mp("1,1,1,1")), LaurentPoly::zero());
}

#[test]
fn canonical_basis_defining_properties() {
    for (e, charges, rep) in [(2, vec![0, 1], "2;1"), (3, vec![0, 1], "2,1;1"), (3, vec![0, 0], "2;2"), (2, vec![0, 0, 1], "1;1;1")] {
        let m = mc(e, &charges);
        let rep = mp(rep);
        let block = residue_data(&rep, &m).unwrap();
        let mut cb = CanonicalBasis::new(&m);
        for mu in block_members(&rep, &m).unwrap().iter().filter(|x| x.is_e_regular(e)) {
            let g = cb.g(mu).unwrap();
            assert_eq!(g.coeff(mu), LaurentPoly::one());
            for (lam, c) in g.iter() {
                assert_eq!(residue_data(lam, &m).unwrap(), block, "support of G({mu})");
                if lam != mu {
                    assert!(c.in_v_z_v(), "G({mu}) at {lam} is {c}");
                    assert!(lam.component(0).size() <= mu.component(0).size(), "G({mu}) at {lam}");
                }
            }
            assert!(cb.is_bar_invariant(&g).unwrap());
        }
    }
}

#[test]
fn empty_first_component_reduces_level() {
    for (e, charges, rep) in [(2, vec![1, 0], "-;2,1"), (3, vec![0, 1], "-;3,1"), (3, vec![2, 0, 1], "-;2;1")] {
        let m = mc(e, &charges);
        let tail = m.tail().unwrap();
        let mut full = CanonicalBasis::new(&m);
        let mut hat = CanonicalBasis::new(&tail);
        let members = block_members(&mp(rep), &m).unwrap();
        let empty_first: Vec<&Multipartition> = members.iter().filter(|x| x.component(0).is_empty()).collect();
        for mu in empty_first.iter().filter(|x| x.is_e_regular(e)) {
            for lam in &empty_first {
                assert_eq!(
                    full.d(lam, mu).unwrap(),
                    hat.d(&lam.tail().unwrap(), &mu.tail().unwrap()).unwrap(),
                    "λ={lam} μ={mu}"
                );
            }
        }
    }
}

#[test]
fn ladder_word_leads_with_the_label() {
    for e in 2..=4 {
        let m = mc(e, &[1 % e]);
        for n in 1..=6 {
            for p in rouquier::partition::partitions_of(n) {
                if !p.is_e_regular(e).unwrap() {
                    continue;
                }
                let w = ladder_word(&p, 1 % e, e);
                let mut rev = w.clone();
                rev.reverse();
                let x = FockVector::vacuum(&m).f_word(&rev).unwrap();
                let label = Multipartition::new(vec![p.clone()]).unwrap();
                assert_eq!(x.coeff(&label), LaurentPoly::one(), "{p}");
                assert!(x.iter().all(|(l, _)| l.order_key() <= label.order_key()), "{p}");
            }
        }
    }
}

#[test]
fn unknown_labels_are_rejected() {
    let m = mc(2, &[0]);
    let mut cb = CanonicalBasis::new(&m);
    assert!(matches!(cb.g(&mp("1,1")), Err(Error::UnknownLabel(_))));
}

#[test]
fn transition_matrix_is_square_on_labels() {
    let m = mc(2, &[0, 1]);
    let elems = canonical_basis_block_of(&mp("2;1"), &m).unwrap();
    let tm = TransitionMatrix::from_elements(&elems);
    assert_eq!(tm.columns.len(), elems.len());
    assert!(tm.rows.len() >= tm.columns.len());
    let json = serde_json::to_string(&tm).unwrap();
    let back: TransitionMatrix = serde_json::from_str(&json).unwrap();
    assert_eq!(back, tm);
}
