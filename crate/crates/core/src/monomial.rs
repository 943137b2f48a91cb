//! Monomials, degree lists and degree slices.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Error, Result};

/// A monomial `x_1^{e_1} ... x_n^{e_n}` stored as its exponent vector.
///
/// The derived `Ord` is pure lexicographic order with `x_1 > ... > x_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Result<Self> {
        if exps.is_empty() {
            return Err(Error::Dimension { expected: 1, found: 0 });
        }
        Ok(Monomial(exps))
    }

    /// The monomial 1 in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    /// `x_i^e` (0-based `i`).
    pub fn var_power(n: usize, i: usize, e: u32) -> Self {
        let mut v = vec![0; n];
        v[i] = e;
        Monomial(v)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// `Some((i, e))` if this is `x_i^e` with `e > 0`.
    pub fn pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// `x^{max(u - v, 0)}`, the generator of `<self> : <other>`.
    pub fn quotient(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a.saturating_sub(*b)).collect())
    }

    /// Multiply by `x_i`.
    pub fn times_var(&self, i: usize) -> Monomial {
        let mut v = self.0.clone();
        v[i] += 1;
        Monomial(v)
    }

    /// Divide by `x_i`, if possible.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.0[i] == 0 {
            return None;
        }
        let mut v = self.0.clone();
        v[i] -= 1;
        Some(Monomial(v))
    }

    /// Embed into one more variable, placed first with exponent `e`.
    pub fn prepend(&self, e: u32) -> Monomial {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(e);
        v.extend_from_slice(&self.0);
        Monomial(v)
    }

    /// Human form, e.g. `x1^2*x3`; `1` for the unit monomial.
    pub fn to_human(&self) -> String {
        if self.is_one() {
            return "1".into();
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, e) })
            .collect();
        parts.join("*")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_human())
    }
}

/// Lexicographic comparison, `x_1 > ... > x_n`.
pub fn lex_compare(m1: &Monomial, m2: &Monomial) -> Result<Ordering> {
    check_dim(m1.n(), m2.n())?;
    Ok(m1.0.cmp(&m2.0))
}

/// The degree list `A = {a_1 <= ... <= a_n}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct DegreeList(Vec<u32>);

impl DegreeList {
    pub fn new(degrees: Vec<u32>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::DegreeList("empty".into()));
        }
        if degrees[0] == 0 {
            return Err(Error::DegreeList("degrees must be positive".into()));
        }
        if degrees.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::DegreeList(format!("{degrees:?} is not non-decreasing")));
        }
        Ok(DegreeList(degrees))
    }

    /// Sort arbitrary positive degrees into a degree list.
    pub fn sorted(mut degrees: Vec<u32>) -> Result<Self> {
        degrees.sort_unstable();
        Self::new(degrees)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// `a_i`, 1-based as in the literature.
    pub fn a(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    pub fn first(&self) -> u32 {
        self.0[0]
    }

    pub fn omega(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `|j|`, the number of `a_i` equal to `j`.
    pub fn multiplicity(&self, j: u32) -> usize {
        self.0.iter().filter(|&&a| a == j).count()
    }

    /// `A_2 = {a_2, ..., a_n}`; `None` when `n = 1`.
    pub fn tail(&self) -> Option<DegreeList> {
        (self.0.len() > 1).then(|| DegreeList(self.0[1..].to_vec()))
    }

    /// Socle degree plus one of the complete intersection: `sum(a_i - 1) + 1`.
    pub fn ci_sigma(&self) -> u32 {
        self.0.iter().map(|a| a - 1).sum::<u32>() + 1
    }

    /// All degree lists of length `n` with entries in `1..=max`.
    pub fn all_up_to(n: usize, max: u32) -> Vec<DegreeList> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        fn rec(n: usize, lo: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<DegreeList>) {
            if cur.len() == n {
                out.push(DegreeList(cur.clone()));
                return;
            }
            for a in lo..=max {
                cur.push(a);
                rec(n, a, max, cur, out);
                cur.pop();
            }
        }
        rec(n, 1, max, &mut cur, &mut out);
        out
    }
}

impl TryFrom<Vec<u32>> for DegreeList {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        DegreeList::new(v)
    }
}

impl From<DegreeList> for Vec<u32> {
    fn from(a: DegreeList) -> Self {
        a.0
    }
}

impl fmt::Display for DegreeList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Degree-`d` monomials in `n` variables, lex-descending.
#[derive(Clone, Debug)]
pub struct DegreeSlice {
    cur: Option<Vec<u32>>,
}

impl Iterator for DegreeSlice {
    type Item = Monomial;

    fn next(&mut self) -> Option<Monomial> {
        let cur = self.cur.as_mut()?;
        let out = Monomial(cur.clone());
        let n = cur.len();
        match (0..n.saturating_sub(1)).rev().find(|&i| cur[i] > 0) {
            Some(i) => {
                let rest: u32 = cur[i + 1..].iter().sum();
                cur[i] -= 1;
                cur[i + 1] = rest + 1;
                for e in &mut cur[i + 2..] {
                    *e = 0;
                }
            }
            None => self.cur = None,
        }
        Some(out)
    }
}

pub fn monomials_of_degree(n: usize, d: u32) -> DegreeSlice {
    let mut v = vec![0; n];
    if n > 0 {
        v[0] = d;
    }
    DegreeSlice { cur: (n > 0).then_some(v) }
}

/// Degree-`d` monomials with `e_i < bounds[i]`, lex-descending.
pub fn standard_monomials_of_degree(bounds: &[u32], d: u32) -> impl Iterator<Item = Monomial> + '_ {
    monomials_of_degree(bounds.len(), d)
        .filter(move |m| m.exps().iter().zip(bounds).all(|(e, b)| e < b))
}
