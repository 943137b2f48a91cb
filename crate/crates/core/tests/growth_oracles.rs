mod common;

use common::{a, box_monomials, degree_lists};
use lppkit_core::growth::{binomial, ci_hilbert_function, GkRectangle};
use lppkit_core::{
    classical_bound, codim_from_monomial, gk_expansion, is_lpp_sequence, lpp_bound, lpp_bound_oracle,
    monomial_from_codim, HilbertFunction, Monomial,
};

fn standard_desc(a: &[u32], d: u32) -> Vec<Monomial> {
    let mut v: Vec<Monomial> = box_monomials(a).into_iter().filter(|m| m.degree() == d).collect();
    v.sort_by(|x, y| y.cmp(x));
    v
}

/// Degree-(d+1) standard monomials outside the ideal of the pure powers and
/// the `count - h` lex-largest degree-d standard monomials.
fn bound_by_counting(h: u64, d: u32, a: &[u32]) -> u64 {
    let top = standard_desc(a, d);
    let segment = &top[..top.len() - h as usize];
    standard_desc(a, d + 1).iter().filter(|m| !segment.iter().any(|s| s.divides(m))).count() as u64
}

#[test]
fn bound_matches_oracles_exhaustively() {
    for aa in degree_lists(3, 6) {
        let rect = GkRectangle::new(&aa);
        for d in 0..=10u32 {
            let full = rect.ci(d as usize);
            for h in 0..=full {
                let b = lpp_bound(h, d, &aa).unwrap();
                assert_eq!(b, lpp_bound_oracle(h, d, &aa).unwrap(), "A={aa} d={d} h={h}");
                assert_eq!(b, bound_by_counting(h, d, aa.as_slice()), "A={aa} d={d} h={h}");
            }
            assert!(gk_expansion(full + 1, d, &aa).is_err());
        }
    }
}

/// The expansion read off from the lex-smallest monomial of the segment.
fn expansion_from_monomial(m: &Monomial, rect: &GkRectangle) -> Vec<(usize, u32, u64)> {
    let n = m.n();
    let mut out = Vec::new();
    let mut rest = m.degree();
    for i in 0..n - 1 {
        for k in 0..m.exps()[i] {
            let col = rest - k;
            out.push((n - 1 - i, col, rect.get(n - 1 - i, col as usize)));
        }
        rest -= m.exps()[i];
    }
    while out.last().is_some_and(|t| t.2 == 0) {
        out.pop();
    }
    out
}

#[test]
fn greedy_expansion_matches_monomial_reading() {
    for aa in degree_lists(3, 6) {
        let rect = GkRectangle::new(&aa);
        let n = aa.len();
        for d in 1..=10u32 {
            let desc = standard_desc(aa.as_slice(), d);
            for (pos, m) in desc.iter().enumerate() {
                let h = (desc.len() - 1 - pos) as u64;
                if h == 0 {
                    continue;
                }
                let e = gk_expansion(h, d, &aa).unwrap();
                let got: Vec<(usize, u32, u64)> = e.terms.iter().map(|t| (t.row, t.column, t.value)).collect();
                assert_eq!(got, expansion_from_monomial(m, &rect), "A={aa} d={d} h={h} m={m}");
                for r in 1..n {
                    let count = e.terms.iter().filter(|t| t.row == r).count();
                    assert!(count < aa.as_slice()[n - r - 1] as usize);
                }
                assert!(e.terms.windows(2).all(|w| w[0].k() > w[1].k()));
                assert_eq!(e.terms.iter().map(|t| t.value).sum::<u64>(), h);
            }
        }
    }
}

#[test]
fn codim_is_lex_position() {
    for aa in degree_lists(3, 6) {
        for d in 0..=12u32 {
            let desc = standard_desc(aa.as_slice(), d);
            for (pos, m) in desc.iter().enumerate() {
                let h = (desc.len() - 1 - pos) as u64;
                assert_eq!(codim_from_monomial(m, &aa).unwrap(), h);
                assert_eq!(&monomial_from_codim(h, d, &aa).unwrap(), m);
            }
            assert!(monomial_from_codim(desc.len() as u64, d, &aa).is_err());
        }
    }
}

#[test]
fn classical_bound_is_the_limit_case() {
    for n in 1..=3usize {
        for d in 1..=5u32 {
            let aa = a(&vec![d + 2; n]);
            let full = GkRectangle::new(&aa).ci(d as usize);
            for h in 1..=full {
                assert_eq!(classical_bound(h, d).unwrap(), lpp_bound(h, d, &aa).unwrap(), "n={n} d={d} h={h}");
            }
        }
    }
}

#[test]
fn classical_expansions_reconstruct_h() {
    for d in 1..=6u32 {
        for h in 1..=500u64 {
            let e = lppkit_core::classical_expansion(h, d).unwrap();
            let sum: u128 = e.terms.iter().map(|&(k, t)| binomial(k, t as u64)).sum();
            assert_eq!(sum, h as u128);
            assert!(e.terms.windows(2).all(|w| w[0].0 > w[1].0));
            assert!(e.terms.iter().all(|&(k, t)| k >= t as u64 && t >= 1));
        }
    }
}

#[test]
fn complete_intersection_sequences() {
    for aa in degree_lists(3, 5) {
        let ci = ci_hilbert_function(&aa);
        assert!(is_lpp_sequence(&ci, &aa));
        let rect = GkRectangle::new(&aa);
        for d in 0..ci.sigma() {
            assert_eq!(lpp_bound(ci.at(d), d as u32, &aa).unwrap(), ci.at(d + 1));
            assert_eq!(ci.at(d), rect.ci(d));
        }
        if ci.sigma() > 1 {
            let mut bumped = ci.values().to_vec();
            bumped[1] += 1;
            assert!(!is_lpp_sequence(&HilbertFunction::new(bumped).unwrap(), &aa));
        }
    }
}
