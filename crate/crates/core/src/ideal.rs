//! Monomial ideals stored by their minimal generators.

use std::cmp::Reverse;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{check_dim, Error, Result};
use crate::hilbert::HilbertFunction;
use crate::monomial::{monomials_of_degree, DegreeList, Monomial};

/// A monomial ideal in `n` variables.
///
/// Generators are minimal and kept sorted by degree, then lex-descending,
/// so structural equality is ideal equality. No generators means the zero
/// ideal; the unit ideal is generated by the monomial 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

/// Per-variable least pure power contained in an ideal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PurePowerProfile(pub Vec<Option<u32>>);

impl PurePowerProfile {
    pub fn is_artinian(&self) -> bool {
        self.0.iter().all(Option::is_some)
    }

    /// Per-variable exponents when all are finite.
    pub fn finite(&self) -> Option<Vec<u32>> {
        self.0.iter().copied().collect()
    }

    /// Sorted degree list, when all entries are finite and positive.
    pub fn degree_list(&self) -> Option<DegreeList> {
        DegreeList::sorted(self.finite()?).ok()
    }

    /// True iff the profile is exactly `A` variable by variable.
    pub fn matches(&self, a: &DegreeList) -> bool {
        self.0.len() == a.len() && self.0.iter().zip(a.as_slice()).all(|(p, &x)| *p == Some(x))
    }
}

/// Reduce a generating set to its minimal generators.
pub fn minimalize(n: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<MonomialIdeal> {
    let mut gens: Vec<Monomial> = gens.into_iter().collect();
    for g in &gens {
        check_dim(n, g.n())?;
    }
    gens.sort_by_key(|g| (g.degree(), Reverse(g.clone())));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        // anything dividing g has degree <= deg g, so it is already in `kept`
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    Ok(MonomialIdeal { n, gens: kept })
}

impl MonomialIdeal {
    pub fn new(n: usize, gens: Vec<Monomial>) -> Result<Self> {
        minimalize(n, gens)
    }

    pub fn from_exponents(n: usize, gens: &[&[u32]]) -> Result<Self> {
        let gens = gens.iter().map(|g| Monomial::new(g.to_vec())).collect::<Result<Vec<_>>>()?;
        minimalize(n, gens)
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal { n, gens: vec![Monomial::one(n)] }
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    /// `<x_1^{a_1}, ..., x_n^{a_n}>` for per-variable powers.
    pub fn pure_powers(powers: &[u32]) -> Self {
        let n = powers.len();
        minimalize(n, powers.iter().enumerate().map(|(i, &a)| Monomial::var_power(n, i, a)))
            .expect("arity is consistent")
    }

    /// The complete intersection `<x_i^{a_i}>`.
    pub fn complete_intersection(a: &DegreeList) -> Self {
        Self::pure_powers(a.as_slice())
    }

    /// `m^t`, all monomials of degree `t`.
    pub fn maximal_power(n: usize, t: u32) -> Self {
        MonomialIdeal { n, gens: monomials_of_degree(n, t).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `self ⊇ other`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dim(self.n, other.n)?;
        minimalize(self.n, self.gens.iter().chain(&other.gens).cloned())
    }

    pub fn intersection(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dim(self.n, other.n)?;
        let lcms = self.gens.iter().flat_map(|a| other.gens.iter().map(move |b| a.lcm(b)));
        minimalize(self.n, lcms)
    }

    /// `(self : m)` for a single monomial.
    pub fn quotient_by(&self, m: &Monomial) -> MonomialIdeal {
        minimalize(self.n, self.gens.iter().map(|g| g.quotient(m))).expect("arity is consistent")
    }

    pub fn pure_power_profile(&self) -> PurePowerProfile {
        let mut out = vec![None; self.n];
        for g in &self.gens {
            if g.is_one() {
                return PurePowerProfile(vec![Some(0); self.n]);
            }
            if let Some((i, e)) = g.pure_power() {
                out[i] = Some(out[i].map_or(e, |x: u32| x.min(e)));
            }
        }
        PurePowerProfile(out)
    }

    pub fn is_artinian(&self) -> bool {
        self.pure_power_profile().is_artinian()
    }

    fn artinian_profile(&self) -> Result<Vec<u32>> {
        let p = self.pure_power_profile();
        match p.0.iter().position(Option::is_none) {
            Some(i) => Err(Error::NotArtinian(i + 1)),
            None => Ok(p.finite().expect("all finite")),
        }
    }

    /// Standard monomials (not in the ideal) of degree `d`, lex-descending.
    pub fn standard_monomials(&self, d: u32) -> Vec<Monomial> {
        monomials_of_degree(self.n, d).filter(|m| !self.contains(m)).collect()
    }

    pub fn hilbert_function(&self) -> Result<HilbertFunction> {
        let profile = self.artinian_profile()?;
        let mut values = Vec::new();
        for d in 0.. {
            let bounds = &profile;
            let count = monomials_of_degree(self.n, d)
                .filter(|m| m.exps().iter().zip(bounds).all(|(e, b)| e < b))
                .filter(|m| !self.contains(m))
                .count() as u64;
            if count == 0 {
                break;
            }
            values.push(count);
        }
        HilbertFunction::new(values)
    }

    /// Socle monomials of `R/I` grouped by degree.
    pub fn socle_monomials(&self) -> Result<BTreeMap<u32, Vec<Monomial>>> {
        let sigma = self.hilbert_function()?.sigma() as u32;
        let mut out: BTreeMap<u32, Vec<Monomial>> = BTreeMap::new();
        for d in 0..sigma {
            for m in self.standard_monomials(d) {
                if (0..self.n).all(|i| self.contains(&m.times_var(i))) {
                    out.entry(d).or_default().push(m);
                }
            }
        }
        Ok(out)
    }

    /// `I + m^t`.
    pub fn add_maximal_power(&self, t: u32) -> MonomialIdeal {
        self.sum(&Self::maximal_power(self.n, t)).expect("same arity")
    }

    /// Least degree of a generator outside `<x_i^{a_i}>`; `None` if there is none.
    pub fn alpha_relative(&self, powers: &[u32]) -> Option<u32> {
        let pp = Self::pure_powers(powers);
        self.gens.iter().filter(|g| !pp.contains(g)).map(Monomial::degree).min()
    }

    /// Is the degree-`d` part of the ideal upward closed in lex order?
    pub fn is_lex_segment(&self, d: u32) -> bool {
        let mut left = false;
        for m in monomials_of_degree(self.n, d) {
            let inside = self.contains(&m);
            if inside && left {
                return false;
            }
            left |= !inside;
        }
        true
    }

    /// Lex-plus-powers test against `A`, in the given variable order.
    pub fn is_lpp(&self, a: &DegreeList) -> bool {
        if a.len() != self.n {
            return false;
        }
        let powers: Vec<Monomial> =
            a.as_slice().iter().enumerate().map(|(i, &e)| Monomial::var_power(self.n, i, e)).collect();
        if !powers.iter().all(|p| self.gens.contains(p)) {
            return false;
        }
        self.gens.iter().filter(|g| !powers.contains(g)).all(|g| {
            monomials_of_degree(self.n, g.degree()).take_while(|m| m > g).all(|m| self.contains(&m))
        })
    }

    /// Human form: `x1^2, x2^3, x1*x2^2`.
    pub fn to_human(&self) -> String {
        if self.gens.is_empty() {
            return "0".into();
        }
        self.gens.iter().map(Monomial::to_human).collect::<Vec<_>>().join(", ")
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "n": self.n, "gens": self.gens })
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.to_human())
    }
}

fn parse_err(token: &str, reason: impl Into<String>) -> Error {
    Error::Parse { token: token.to_string(), reason: reason.into() }
}

/// Factors of one generator: `x1^2*x3`, `x^2y`, `x y^3`.
fn parse_term(term: &str) -> Result<Vec<(usize, u32)>> {
    let b = term.as_bytes();
    let digits = |mut k: usize| {
        while k < b.len() && b[k].is_ascii_digit() {
            k += 1;
        }
        k
    };
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let start = i;
        let var = match b[i] {
            b'*' | b' ' | b'\t' => {
                i += 1;
                continue;
            }
            b'x' if i + 1 < b.len() && b[i + 1].is_ascii_digit() => {
                i = digits(i + 1);
                let tok = &term[start..i];
                tok[1..].parse::<usize>().ok().filter(|&v| v >= 1).ok_or_else(|| parse_err(tok, "expected a variable x1, x2, ..."))?
            }
            b'x' => 1,
            b'y' => 2,
            b'z' => 3,
            _ => {
                let end = term[start..].find(|c: char| "*^ xyz".contains(c)).map_or(term.len(), |k| start + k.max(1));
                return Err(parse_err(&term[start..end], "expected a variable x1, x2, ..."));
            }
        };
        if i == start {
            i += 1;
        }
        let mut exp = 1;
        if i < b.len() && b[i] == b'^' {
            let e_end = digits(i + 1);
            let tok = &term[i + 1..e_end];
            exp = tok.parse::<u32>().map_err(|_| {
                let rest = &term[i + 1..];
                let shown = match rest.find(['*', ' ']).map_or(rest, |k| &rest[..k]) {
                    "" => "^",
                    t => t,
                };
                parse_err(shown, "expected a nonnegative exponent")
            })?;
            i = e_end;
        }
        out.push((var, exp));
    }
    Ok(out)
}

impl MonomialIdeal {
    /// Parse either JSON (`{"n": 2, "gens": [[2,0],[0,3]]}`) or the human
    /// form (`x1^2, x2^3, x1*x2`, with `x, y, z` accepted for `x1, x2, x3`
    /// and juxtaposed factors as in `x^2y`).
    ///
    /// In the human form `n` defaults to the largest variable index used.
    pub fn parse(s: &str, n: Option<usize>) -> Result<MonomialIdeal> {
        let s = s.trim();
        if s.starts_with('{') {
            return Self::parse_json(s, n);
        }
        let body = s.strip_prefix('<').and_then(|b| b.strip_suffix('>')).unwrap_or(s);
        let mut factored: Vec<Vec<(usize, u32)>> = Vec::new();
        for term in body.split(',').map(str::trim) {
            if term.is_empty() {
                return Err(parse_err(s, "empty generator"));
            }
            if term == "1" {
                factored.push(Vec::new());
                continue;
            }
            factored.push(parse_term(term)?);
        }
        let used = factored.iter().flatten().map(|&(v, _)| v).max().unwrap_or(1);
        let n = n.unwrap_or(used);
        if used > n {
            return Err(parse_err(&format!("x{used}"), format!("variable index exceeds n = {n}")));
        }
        let gens = factored.into_iter().map(|fs| {
            let mut e = vec![0u32; n];
            for (v, x) in fs {
                e[v - 1] += x;
            }
            Monomial::new(e)
        });
        minimalize(n, gens.collect::<Result<Vec<_>>>()?)
    }

    fn parse_json(s: &str, n: Option<usize>) -> Result<MonomialIdeal> {
        #[derive(serde::Deserialize)]
        struct Raw {
            n: usize,
            gens: Vec<Vec<u32>>,
        }
        let raw: Raw = serde_json::from_str(s).map_err(|e| parse_err(s, format!("invalid ideal JSON: {e}")))?;
        if let Some(n) = n {
            check_dim(n, raw.n)?;
        }
        let gens = raw.gens.into_iter().map(Monomial::new).collect::<Result<Vec<_>>>()?;
        minimalize(raw.n, gens)
    }
}

/// `(J : I) = {f : f I ⊆ J}`.
pub fn colon(j: &MonomialIdeal, i: &MonomialIdeal) -> Result<MonomialIdeal> {
    check_dim(j.n, i.n)?;
    let mut acc = MonomialIdeal::unit(j.n);
    for g in &i.gens {
        acc = acc.intersection(&j.quotient_by(g))?;
    }
    Ok(acc)
}
