mod common;

use std::collections::BTreeSet;

use common::{a, degree_lists, ideals_in_box};
use lppkit_core::growth::{ci_hilbert_function, lpp_bound};
use lppkit_core::vector::{all_valid_vectors, sequence_alpha, sequence_sigma};
use lppkit_core::{colon, decompose, is_lpp_sequence, vector_of_hf, DegreeList, HilbertFunction, MonomialIdeal};

/// Every lpp≤A-sequence, by walking the growth bound degree by degree.
fn sequences(aa: &DegreeList) -> Vec<HilbertFunction> {
    let ci = ci_hilbert_function(aa);
    let mut out = Vec::new();
    let mut cur = vec![1u64];
    fn rec(cur: &mut Vec<u64>, aa: &DegreeList, ci: &HilbertFunction, out: &mut Vec<HilbertFunction>) {
        let d = cur.len() - 1;
        let top = lpp_bound(cur[d], d as u32, aa).unwrap().min(ci.at(d + 1));
        out.push(HilbertFunction::new(cur.clone()).unwrap());
        for next in 1..=top {
            cur.push(next);
            rec(cur, aa, ci, out);
            cur.pop();
        }
    }
    rec(&mut cur, aa, &ci, &mut out);
    out
}

fn alpha_of_ideal(w: &MonomialIdeal, aa: &DegreeList) -> Option<u32> {
    w.alpha_relative(aa.as_slice())
}

#[test]
fn bijection_round_trips_exhaustively() {
    let mut instances = 0;
    for aa in degree_lists(3, 4) {
        let vectors = all_valid_vectors(&aa);
        let seqs = sequences(&aa);
        assert_eq!(vectors.len(), seqs.len(), "A={aa}");
        let mut seen = BTreeSet::new();
        for t in &vectors {
            let h = t.hilbert_function().unwrap();
            assert!(is_lpp_sequence(&h, &aa), "A={aa} T={t}");
            assert_eq!(&vector_of_hf(&h, &aa).unwrap(), t, "A={aa} H={h}");
            assert!(seen.insert(h.values().to_vec()), "two vectors share {h}");
            instances += 1;
        }
        for s in &seqs {
            let t = vector_of_hf(s, &aa).unwrap();
            assert_eq!(&t.hilbert_function().unwrap(), s);
        }
    }
    assert!(instances > 300, "{instances}");
}

#[test]
fn ideals_of_vectors_realize_their_invariants() {
    for aa in degree_lists(3, 4) {
        for t in all_valid_vectors(&aa) {
            let w = t.ideal(&aa).unwrap();
            let st = t.stats(&aa).unwrap();
            let h = t.hilbert_function().unwrap();
            assert_eq!(w.hilbert_function().unwrap(), h, "A={aa} T={t}");
            assert_eq!(h.sigma() as u32, st.sigma);
            assert_eq!(alpha_of_ideal(&w, &aa), st.alpha, "A={aa} T={t}");
            assert_eq!(sequence_alpha(&h, &aa), st.alpha);
            assert_eq!(sequence_sigma(&h), st.sigma);
            assert_eq!(st.alpha.is_none(), st.is_ci);
            assert!(st.is_ci || st.alpha.unwrap() <= st.sigma);
            let b = w.pure_power_profile().degree_list().unwrap();
            assert!(w.is_lpp(&b), "A={aa} T={t} W={w}");
            assert!(b.as_slice().iter().zip(aa.as_slice()).all(|(x, y)| x <= y));
            assert!(t.containment_chain_check(&aa));
        }
    }
}

/// Vector ideals are lex-plus-powers ideals containing `x^A`, and they
/// realize every Hilbert function such ideals have.
#[test]
fn vector_ideals_cover_all_lpp_hilbert_functions() {
    for aa in degree_lists(3, 3).into_iter().chain([a(&[2, 5]), a(&[4, 4])]) {
        let brute: Vec<(Vec<u64>, MonomialIdeal)> = ideals_in_box(&aa)
            .into_iter()
            .filter(|(_, i)| i.pure_power_profile().degree_list().is_some_and(|b| i.is_lpp(&b)))
            .collect();
        let brute_hf: BTreeSet<Vec<u64>> = brute.iter().map(|(h, _)| h.clone()).collect();
        let ideals: Vec<MonomialIdeal> = all_valid_vectors(&aa).iter().map(|t| t.ideal(&aa).unwrap()).collect();
        for w in &ideals {
            assert!(brute.iter().any(|(_, i)| i == w), "A={aa} W={w}");
        }
        let ours: BTreeSet<Vec<u64>> = ideals.iter().map(|w| w.hilbert_function().unwrap().values().to_vec()).collect();
        assert_eq!(ours, brute_hf, "A={aa}");
    }
}

#[test]
fn decompositions_recompose() {
    for aa in degree_lists(3, 4) {
        for s in sequences(&aa) {
            if s.at(1) < 2 {
                assert!(decompose(&s, &aa).is_err());
                continue;
            }
            let dec = decompose(&s, &aa).unwrap();
            for i in 0..=s.sigma() + 1 {
                let prev = if i == 0 { 0 } else { dec.s1.at(i - 1) };
                assert_eq!(s.at(i), dec.s1_prime.at(i) + prev, "A={aa} S={s} i={i}");
            }
            assert!(is_lpp_sequence(&dec.s1, &aa), "S1 of {s}");
            let a2 = aa.tail().unwrap();
            assert!(is_lpp_sequence(&dec.s1_prime, &a2), "S1' of {s}");
            if s.at(1) as usize == aa.len() {
                let alpha = sequence_alpha(&s, &aa).map_or(u32::MAX, |x| x);
                assert!(sequence_alpha(&dec.s1, &aa).map_or(u32::MAX, |x| x) < alpha, "A={aa} S={s}");
            }
        }
    }
}

#[test]
fn duals_are_residuals() {
    for aa in degree_lists(3, 4) {
        let pp = MonomialIdeal::complete_intersection(&aa);
        let sigma_ci = aa.ci_sigma();
        for t in all_valid_vectors(&aa) {
            let d = t.dual(&aa).unwrap();
            assert!(d.is_empty() || d.is_valid(&aa), "A={aa} T={t} T*={d}");
            assert_eq!(d.dual(&aa).unwrap(), t);
            let residual = colon(&pp, &t.ideal(&aa).unwrap()).unwrap();
            assert_eq!(d.ideal(&aa).unwrap(), residual);
            let st = t.stats(&aa).unwrap();
            let sd = d.stats(&aa).unwrap();
            // Empty has alpha = sigma = 0
            if let Some(alpha) = st.alpha {
                assert_eq!(alpha + sd.sigma, sigma_ci, "A={aa} T={t}");
            }
            assert_eq!(st.sigma + sd.alpha.expect("a dual is never the complete intersection"), sigma_ci, "A={aa} T={t}");
        }
    }
}

#[test]
fn sigma_below_alpha_flips_under_duality() {
    for aa in degree_lists(2, 4).into_iter().chain(DegreeList::all_up_to(3, 3)) {
        let vs = all_valid_vectors(&aa);
        let stats: Vec<_> = vs.iter().map(|t| (t.stats(&aa).unwrap(), t.dual(&aa).unwrap())).collect();
        for (s, ds) in &stats {
            for (t, dt) in &stats {
                let Some(alpha_t) = t.alpha else { continue };
                if s.sigma < alpha_t && !ds.is_empty() && !dt.is_empty() {
                    let sigma_t_star = dt.stats(&aa).unwrap().sigma;
                    if let Some(alpha_s_star) = ds.stats(&aa).unwrap().alpha {
                        assert!(sigma_t_star < alpha_s_star);
                    }
                }
            }
        }
    }
}
