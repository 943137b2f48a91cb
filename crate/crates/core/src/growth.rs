//! Macaulay's binomial expansions and their generalization to ideals
//! containing pure powers (Greene-Kleitman rows, Clements-Lindström bound).

use std::fmt;

use serde::Serialize;

use crate::error::{check_dim, Error, Result};
use crate::hilbert::HilbertFunction;
use crate::ideal::MonomialIdeal;
use crate::monomial::{standard_monomials_of_degree, DegreeList, Monomial};

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// `h = C(k(d), d) + C(k(d-1), d-1) + ... + C(k(j), j)`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct MacaulayExpansion {
    pub value: u64,
    /// Pairs `(k(t), t)`, `t` descending.
    pub terms: Vec<(u64, u32)>,
}

pub fn classical_expansion(h: u64, d: u32) -> Result<MacaulayExpansion> {
    if h == 0 || d == 0 {
        return Err(Error::OutOfRange(format!("need h >= 1 and d >= 1, got h={h}, d={d}")));
    }
    let mut rem = h as u128;
    let mut terms = Vec::new();
    for t in (1..=d).rev() {
        if rem == 0 {
            break;
        }
        let mut k = t as u64;
        while binomial(k + 1, t as u64) <= rem {
            k += 1;
        }
        rem -= binomial(k, t as u64);
        terms.push((k, t));
    }
    Ok(MacaulayExpansion { value: h, terms })
}

/// Macaulay's `h^<d>`.
pub fn classical_bound(h: u64, d: u32) -> Result<u64> {
    if h == 0 {
        return Ok(0);
    }
    let e = classical_expansion(h, d)?;
    let s: u128 = e.terms.iter().map(|&(k, t)| binomial(k + 1, t as u64 + 1)).sum();
    u64::try_from(s).map_err(|_| Error::OutOfRange("bound overflows u64".into()))
}

/// Coefficients of `prod_j (1 + t + ... + t^{e_j})` in degrees `0..=upto`.
pub fn gk_coefficients(e: &[u32], upto: usize) -> Vec<u64> {
    let mut poly = vec![0u64; upto + 1];
    poly[0] = 1;
    for &ej in e {
        let mut next = vec![0u64; upto + 1];
        for (i, &c) in poly.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for s in 0..=ej as usize {
                if i + s > upto {
                    break;
                }
                next[i + s] += c;
            }
        }
        poly = next;
    }
    poly
}

/// The rows of the generalized Pascal rectangle for `A`.
///
/// Row `r` (1-based, `1..=n`) counts standard monomials in the last `r`
/// variables: coefficients of `prod_{l > n-r} (1 + ... + t^{a_l - 1})`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GkRectangle {
    a: DegreeList,
    rows: Vec<Vec<u64>>,
}

impl GkRectangle {
    pub fn new(a: &DegreeList) -> Self {
        let n = a.len();
        let width = a.ci_sigma() as usize;
        let rows = (1..=n)
            .map(|r| {
                let e: Vec<u32> = a.as_slice()[n - r..].iter().rev().map(|x| x - 1).collect();
                gk_coefficients(&e, width)
            })
            .collect();
        GkRectangle { a: a.clone(), rows }
    }

    pub fn degrees(&self) -> &DegreeList {
        &self.a
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    /// Entry of row `r` at column `t`; 0 outside the support.
    pub fn get(&self, r: usize, t: usize) -> u64 {
        self.rows[r - 1].get(t).copied().unwrap_or(0)
    }

    /// Row `r` through its first zero.
    pub fn row(&self, r: usize) -> Vec<u64> {
        let row = &self.rows[r - 1];
        let end = row.iter().position(|&v| v == 0).unwrap_or(row.len());
        let mut out = row[..end].to_vec();
        out.push(0);
        out
    }

    /// Label `(1, ..., 1, a_{n-r+1}, ..., a_n)` of row `r`.
    pub fn label(&self, r: usize) -> Vec<u32> {
        let n = self.n();
        (0..n).map(|i| if i < n - r { 1 } else { self.a.as_slice()[i] }).collect()
    }

    /// `H(R/c.i.(A), t)`.
    pub fn ci(&self, t: usize) -> u64 {
        self.get(self.n(), t)
    }
}

/// One boxed entry of the rectangle.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct GkTerm {
    pub row: usize,
    pub column: u32,
    pub value: u64,
}

impl GkTerm {
    /// `k(t) = t + r - 1`, so that `k(t) - t` is the row depth below the top.
    pub fn k(&self) -> u32 {
        self.column + self.row as u32 - 1
    }
}

/// The `d_A`-Macaulay expansion of `h`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct GkExpansion {
    pub degrees: Vec<u32>,
    pub d: u32,
    pub value: u64,
    pub terms: Vec<GkTerm>,
}

impl GkExpansion {
    /// Sum of the entries one column to the right of each term.
    pub fn shifted_sum(&self, rect: &GkRectangle) -> u64 {
        self.terms.iter().map(|t| rect.get(t.row, t.column as usize + 1)).sum()
    }
}

impl fmt::Display for GkExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.terms.iter().map(|t| format!("{} (row {}, col {})", t.value, t.row, t.column)).collect();
        write!(f, "{} = {}", self.value, parts.join(" + "))
    }
}

pub fn gk_expansion(h: u64, d: u32, a: &DegreeList) -> Result<GkExpansion> {
    gk_expansion_in(h, d, &GkRectangle::new(a))
}

/// Greedy column-by-column expansion against a prebuilt rectangle.
pub fn gk_expansion_in(h: u64, d: u32, rect: &GkRectangle) -> Result<GkExpansion> {
    let n = rect.n();
    let full = rect.ci(d as usize);
    if h == 0 || h > full {
        return Err(Error::OutOfRange(format!("h={h} not in 1..={full} at degree {d} for A={}", rect.a)));
    }
    let mut terms = Vec::new();
    let mut rem = h;
    let mut max_row = n;
    let lowest = if d == 0 { 0 } else { 1 };
    for t in (lowest..=d).rev() {
        if rem == 0 {
            break;
        }
        let r = (1..=max_row)
            .rev()
            .find(|&r| rect.get(r, t as usize) <= rem)
            .ok_or_else(|| Error::Inconsistent(format!("no row fits remainder {rem} at column {t}")))?;
        let value = rect.get(r, t as usize);
        terms.push(GkTerm { row: r, column: t, value });
        rem -= value;
        max_row = r;
    }
    if rem != 0 {
        return Err(Error::Inconsistent(format!("greedy expansion of {h} left remainder {rem}")));
    }
    while terms.last().is_some_and(|t| t.value == 0) {
        terms.pop();
    }
    let exp = GkExpansion { degrees: rect.a.as_slice().to_vec(), d, value: h, terms };
    check_expansion(&exp, rect)?;
    Ok(exp)
}

fn check_expansion(exp: &GkExpansion, rect: &GkRectangle) -> Result<()> {
    let n = rect.n();
    let a = rect.a.as_slice();
    let fail = |why: String| Err(Error::Inconsistent(format!("expansion {exp} violates {why}")));
    if exp.terms.iter().map(|t| t.value).sum::<u64>() != exp.value {
        return fail("the value".into());
    }
    if exp.terms.windows(2).any(|w| w[0].k() <= w[1].k()) {
        return fail("strict descent of k(t)".into());
    }
    for r in 1..n {
        let count = exp.terms.iter().filter(|t| t.row == r).count();
        if count >= a[n - r - 1] as usize {
            return fail(format!("the row {r} count bound a_{} = {}", n - r, a[n - r - 1]));
        }
    }
    Ok(())
}

/// `h^<d>_A`, the largest possible `H(d+1)` given `H(d) = h`.
pub fn lpp_bound(h: u64, d: u32, a: &DegreeList) -> Result<u64> {
    lpp_bound_in(h, d, &GkRectangle::new(a))
}

pub fn lpp_bound_in(h: u64, d: u32, rect: &GkRectangle) -> Result<u64> {
    if h == 0 {
        return Ok(0);
    }
    Ok(gk_expansion_in(h, d, rect)?.shifted_sum(rect))
}

/// `H(R/<L_d>, d+1)` computed directly: pure powers plus the lex segment of
/// degree `d` leaving exactly `h` standard monomials.
pub fn lpp_bound_oracle(h: u64, d: u32, a: &DegreeList) -> Result<u64> {
    let standard: Vec<Monomial> = standard_monomials_of_degree(a.as_slice(), d).collect();
    let count = standard.len() as u64;
    if h > count {
        return Err(Error::OutOfRange(format!("h={h} exceeds {count} standard monomials in degree {d}")));
    }
    let mut gens: Vec<Monomial> = standard[..(count - h) as usize].to_vec();
    let n = a.len();
    gens.extend(a.as_slice().iter().enumerate().map(|(i, &e)| Monomial::var_power(n, i, e)));
    let ideal = MonomialIdeal::new(n, gens)?;
    Ok(standard_monomials_of_degree(a.as_slice(), d + 1).filter(|m| !ideal.contains(m)).count() as u64)
}

/// First failing condition, if `S` is not an lpp≤A-sequence.
pub fn lpp_sequence_violation(s: &HilbertFunction, a: &DegreeList) -> Option<String> {
    let rect = GkRectangle::new(a);
    if s.at(0) != 1 {
        return Some(format!("S(0) = {} must be 1", s.at(0)));
    }
    for i in 0..s.sigma() {
        let ci = rect.ci(i);
        if s.at(i) > ci {
            return Some(format!("S({i}) = {} exceeds the complete intersection value {ci}", s.at(i)));
        }
        let bound = lpp_bound_in(s.at(i), i as u32, &rect).ok()?;
        if s.at(i + 1) > bound {
            return Some(format!("S({}) = {} exceeds the growth bound {bound}", i + 1, s.at(i + 1)));
        }
    }
    None
}

pub fn is_lpp_sequence(s: &HilbertFunction, a: &DegreeList) -> bool {
    lpp_sequence_violation(s, a).is_none()
}

/// Hilbert function of `R / <x_i^{a_i}>`.
pub fn ci_hilbert_function(a: &DegreeList) -> HilbertFunction {
    let rect = GkRectangle::new(a);
    HilbertFunction::new(rect.row(a.len())).expect("rows are positive up to their first zero")
}

fn check_standard(m: &Monomial, a: &DegreeList) -> Result<()> {
    check_dim(a.len(), m.n())?;
    if let Some(i) = m.exps().iter().zip(a.as_slice()).position(|(e, b)| e >= b) {
        return Err(Error::OutOfRange(format!(
            "exponent {} of x{} is not below a_{} = {}",
            m.exps()[i],
            i + 1,
            i + 1,
            a.as_slice()[i]
        )));
    }
    Ok(())
}

/// Number of standard monomials of the same degree lex-smaller than `m`.
pub fn codim_from_monomial(m: &Monomial, a: &DegreeList) -> Result<u64> {
    check_standard(m, a)?;
    let rect = GkRectangle::new(a);
    let n = a.len();
    let mut rest = m.degree();
    let mut h = 0;
    for (i, &mi) in m.exps()[..n - 1].iter().enumerate() {
        let r = n - 1 - i;
        for k in 0..mi {
            h += rect.get(r, (rest - k) as usize);
        }
        rest -= mi;
    }
    Ok(h)
}

/// Inverse of [`codim_from_monomial`] in degree `d`.
pub fn monomial_from_codim(h: u64, d: u32, a: &DegreeList) -> Result<Monomial> {
    let rect = GkRectangle::new(a);
    let n = a.len();
    let count = rect.ci(d as usize);
    if h >= count {
        return Err(Error::OutOfRange(format!("codimension {h} not below {count} in degree {d}")));
    }
    let mut exps = Vec::with_capacity(n);
    let mut rest = d;
    let mut left = h;
    for i in 0..n - 1 {
        let r = n - 1 - i;
        let top = rest.min(a.as_slice()[i] - 1);
        let mut chosen = None;
        for k in 0..=top {
            let block = rect.get(r, (rest - k) as usize);
            if left < block {
                chosen = Some(k);
                break;
            }
            left -= block;
        }
        let k = chosen.ok_or_else(|| Error::Inconsistent(format!("no exponent for x{} at codim {h}", i + 1)))?;
        exps.push(k);
        rest -= k;
    }
    exps.push(rest);
    let m = Monomial::new(exps)?;
    check_standard(&m, a)?;
    Ok(m)
}
