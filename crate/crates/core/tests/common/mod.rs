//! Brute-force helpers shared by the integration tests.
#![allow(dead_code)]

use lppkit_core::{minimalize, DegreeList, Monomial, MonomialIdeal};

/// All monomials in `n` variables of degree `<= max`, ordered by degree.
pub fn monomials_up_to(n: usize, max: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == cur.len() {
            out.push(Monomial::new(cur.clone()).unwrap());
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, max, &mut cur, &mut out);
    out.sort_by_key(|m| (m.degree(), std::cmp::Reverse(m.clone())));
    out
}

/// Monomials with `e_i < bounds[i]`, ordered by degree.
pub fn box_monomials(bounds: &[u32]) -> Vec<Monomial> {
    let max = bounds.iter().map(|b| b - 1).sum();
    monomials_up_to(bounds.len(), max)
        .into_iter()
        .filter(|m| m.exps().iter().zip(bounds).all(|(e, b)| e < b))
        .collect()
}

/// Every divisor-closed subset of `universe` (sorted by degree) avoiding `forbidden`.
pub fn down_sets(universe: &[Monomial], forbidden: &[Monomial]) -> Vec<Vec<Monomial>> {
    let mut out = Vec::new();
    let mut cur: Vec<Monomial> = Vec::new();
    fn rec(k: usize, u: &[Monomial], forbidden: &[Monomial], cur: &mut Vec<Monomial>, out: &mut Vec<Vec<Monomial>>) {
        if k == u.len() {
            out.push(cur.clone());
            return;
        }
        rec(k + 1, u, forbidden, cur, out);
        let m = &u[k];
        let closed = (0..m.n()).all(|i| m.div_var(i).is_none_or(|q| cur.contains(&q)));
        if closed && !forbidden.contains(m) {
            cur.push(m.clone());
            rec(k + 1, u, forbidden, cur, out);
            cur.pop();
        }
    }
    rec(0, universe, forbidden, &mut cur, &mut out);
    out
}

/// Hilbert function values of a finite down-set, by counting.
pub fn count_by_degree(down: &[Monomial]) -> Vec<u64> {
    let top = down.iter().map(Monomial::degree).max().map_or(0, |d| d as usize + 1);
    let mut v = vec![0u64; top];
    for m in down {
        v[m.degree() as usize] += 1;
    }
    v
}

/// The ideal of everything in `universe` outside `down`, plus `extra`.
pub fn complement_ideal(n: usize, universe: &[Monomial], down: &[Monomial], extra: &[Monomial]) -> MonomialIdeal {
    let gens = universe.iter().filter(|m| !down.contains(m)).chain(extra).cloned();
    minimalize(n, gens).unwrap()
}

/// All monomial ideals containing `x^A`, keyed by their Hilbert function.
pub fn ideals_in_box(a: &DegreeList) -> Vec<(Vec<u64>, MonomialIdeal)> {
    let n = a.len();
    let universe = box_monomials(a.as_slice());
    let pp: Vec<Monomial> = a.as_slice().iter().enumerate().map(|(i, &e)| Monomial::var_power(n, i, e)).collect();
    down_sets(&universe, &[])
        .into_iter()
        .map(|d| (count_by_degree(&d), complement_ideal(n, &universe, &d, &pp)))
        .collect()
}

/// Artinian monomial ideals in `n` variables minimally generated in degree `<= max`,
/// excluding the unit ideal.
pub fn corpus(n: usize, max: u32) -> Vec<MonomialIdeal> {
    let universe = monomials_up_to(n, max);
    let forbidden: Vec<Monomial> = (0..n).map(|i| Monomial::var_power(n, i, max)).collect();
    down_sets(&universe, &forbidden)
        .into_iter()
        .filter(|d| !d.is_empty())
        .map(|d| complement_ideal(n, &universe, &d, &[]))
        .collect()
}

pub fn a(v: &[u32]) -> DegreeList {
    DegreeList::new(v.to_vec()).unwrap()
}

/// Degree lists with `n <= max_n` and entries `<= max_entry`.
pub fn degree_lists(max_n: usize, max_entry: u32) -> Vec<DegreeList> {
    (1..=max_n).flat_map(|n| DegreeList::all_up_to(n, max_entry)).collect()
}
