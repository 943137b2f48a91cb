//! Shared fixtures for the benchmarks.

use lppkit_core::{DegreeList, HilbertFunction, LppVector, MonomialIdeal};

pub fn degrees(a: &[u32]) -> DegreeList {
    DegreeList::new(a.to_vec()).unwrap()
}

/// The lex-plus-powers ideal of `T = ((1,2),(1,3,4),(2,3,6,6),(5,6,6,6))` in `A = {4,4,6}`.
pub fn sample_lpp() -> (DegreeList, MonomialIdeal) {
    let a = degrees(&[4, 4, 6]);
    let t = LppVector::parse("[[1,2],[1,3,4],[2,3,6,6],[5,6,6,6]]", 3).unwrap();
    let i = t.ideal(&a).unwrap();
    (a, i)
}

/// A four-variable ideal with mixed generators.
pub fn sample_mixed() -> MonomialIdeal {
    MonomialIdeal::parse("x1^3, x2^3, x3^3, x4^3, x1x2x3, x2^2x4, x1x3^2x4, x1^2x4^2", None).unwrap()
}

pub fn hf(s: &str) -> HilbertFunction {
    s.parse().unwrap()
}
