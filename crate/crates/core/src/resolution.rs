//! Graded Betti numbers of `R/I` for Artinian monomial `I`, via the upper
//! Koszul simplicial complexes `K^b(I) = {τ ⊆ supp b : x^{b-τ} ∈ I}`:
//! `β_{i,b}(R/I) = dim H̃_{i-2}(K^b; F)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hilbert::HilbertFunction;
use crate::ideal::{colon, MonomialIdeal};
use crate::linalg::FieldSpec;
use crate::monomial::Monomial;

const MAX_VARS: usize = 8;
const MAX_MULTIDEGREES: usize = 4_000_000;
const MAX_TAYLOR_GENS: usize = 22;

/// `(i, j) ↦ β_{i,j}` for the quotient `R/I`; only nonzero entries are stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BettiDiagram {
    n: usize,
    entries: BTreeMap<(usize, u32), u64>,
}

impl BettiDiagram {
    pub fn new(n: usize) -> Self {
        BettiDiagram { n, entries: BTreeMap::new() }
    }

    pub fn from_entries(n: usize, entries: impl IntoIterator<Item = ((usize, u32), u64)>) -> Self {
        let mut b = Self::new(n);
        for ((i, j), v) in entries {
            b.add(i, j, v);
        }
        b
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn set(&mut self, i: usize, j: u32, v: u64) {
        if v == 0 {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), v);
        }
    }

    fn add(&mut self, i: usize, j: u32, v: u64) {
        if v > 0 {
            *self.entries.entry((i, j)).or_insert(0) += v;
        }
    }

    /// Nonzero entries `((i, j), β_{i,j})`.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, u32), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn total(&self, i: usize) -> u64 {
        self.entries.iter().filter(|((a, _), _)| *a == i).map(|(_, v)| v).sum()
    }

    /// Entrywise `self ≥ other`.
    pub fn dominates(&self, other: &BettiDiagram) -> bool {
        other.entries().all(|((i, j), v)| self.get(i, j) >= v)
    }

    /// `Σ_i (-1)^i β_{i,j}` for `j = 0..=max degree`.
    pub fn numerator(&self) -> Vec<i64> {
        let top = self.entries.keys().map(|&(_, j)| j).max().map_or(0, |j| j as usize + 1);
        let mut out = vec![0i64; top];
        for ((i, j), v) in self.entries() {
            let s = if i % 2 == 0 { 1 } else { -1 };
            out[j as usize] += s * v as i64;
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let betti: Vec<[u64; 3]> = self.entries().map(|((i, j), v)| [i as u64, j as u64, v]).collect();
        serde_json::json!({ "n": self.n, "betti": betti })
    }

    /// Macaulay2 layout: column `i`, row `j - i`, dots for zeros.
    pub fn render(&self) -> String {
        let cols = self.n + 1;
        let max_row = self.entries.keys().map(|&(i, j)| j as usize - i).max();
        let rows: Vec<usize> = max_row.map_or(Vec::new(), |m| (0..=m).collect());
        let cell = |i: usize, r: usize| {
            let v = self.get(i, (i + r) as u32);
            if v == 0 {
                ".".to_string()
            } else {
                v.to_string()
            }
        };
        let mut width = vec![1usize; cols];
        for (i, w) in width.iter_mut().enumerate() {
            *w = (*w).max(i.to_string().len()).max(self.total(i).to_string().len());
            for &r in &rows {
                *w = (*w).max(cell(i, r).len());
            }
        }
        let label_w = "total:".len().max(rows.last().map_or(0, |r| r.to_string().len() + 1));
        let mut lines = Vec::new();
        let line = |label: String, cells: Vec<String>| {
            let body: Vec<String> = cells.iter().zip(&width).map(|(c, w)| format!("{c:>w$}")).collect();
            format!("{label:>label_w$} {}", body.join(" ")).trim_end().to_string()
        };
        lines.push(line(String::new(), (0..cols).map(|i| i.to_string()).collect()));
        lines.push(line("total:".into(), (0..cols).map(|i| self.total(i).to_string()).collect()));
        for &r in &rows {
            lines.push(line(format!("{r}:"), (0..cols).map(|i| cell(i, r)).collect()));
        }
        lines.join("\n")
    }
}

impl fmt::Display for BettiDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Serialize for BettiDiagram {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

/// Multigraded Betti numbers `(i, b) ↦ β_{i,b}(R/I)`.
pub type MultigradedBetti = BTreeMap<(usize, Monomial), u64>;

fn guard_inputs(i: &MonomialIdeal) -> Result<Vec<Vec<u32>>> {
    let n = i.n();
    if n > MAX_VARS {
        return Err(Error::GuardExceeded(format!("{n} variables, at most {MAX_VARS} supported")));
    }
    if let Some(v) = i.pure_power_profile().0.iter().position(Option::is_none) {
        return Err(Error::NotArtinian(v + 1));
    }
    // every multidegree of the lcm lattice has coordinates among generator exponents
    let values: Vec<Vec<u32>> = (0..n)
        .map(|v| {
            let set: BTreeSet<u32> = std::iter::once(0).chain(i.gens().iter().map(|g| g.exps()[v])).collect();
            set.into_iter().collect()
        })
        .collect();
    let count = values.iter().try_fold(1usize, |acc, v| acc.checked_mul(v.len()));
    match count {
        Some(c) if c <= MAX_MULTIDEGREES => Ok(values),
        _ => Err(Error::GuardExceeded("too many multidegrees to examine".into())),
    }
}

fn multidegrees(values: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for vals in values {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                vals.iter().map(move |&x| {
                    let mut p = prefix.clone();
                    p.push(x);
                    p
                })
            })
            .collect();
    }
    out
}

/// Reduced homology dimensions of `K^b`, indexed by `k + 1` for `k = -1..n-1`.
fn koszul_homology(ideal: &MonomialIdeal, b: &[u32], field: FieldSpec) -> Vec<u64> {
    let n = b.len();
    let support: u32 = (0..n).filter(|&v| b[v] > 0).fold(0, |m, v| m | (1 << v));
    let mut faces_by_size: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
    let mut tau = support;
    loop {
        let exps: Vec<u32> = (0..n).map(|v| b[v] - ((tau >> v) & 1)).collect();
        if ideal.contains(&Monomial::new(exps).expect("n >= 1")) {
            faces_by_size[tau.count_ones() as usize].push(tau);
        }
        if tau == 0 {
            break;
        }
        tau = (tau - 1) & support;
    }
    if faces_by_size[0].is_empty() {
        return vec![0; n + 1];
    }
    // rank of ∂ from faces of size s to faces of size s - 1, s = 1..=n
    let mut ranks = vec![0usize; n + 2];
    for s in 1..=n {
        let (lower, upper) = (&faces_by_size[s - 1], &faces_by_size[s]);
        if lower.is_empty() || upper.is_empty() {
            continue;
        }
        let index: BTreeMap<u32, usize> = lower.iter().enumerate().map(|(k, &f)| (f, k)).collect();
        let rows: Vec<Vec<i64>> = upper
            .iter()
            .map(|&f| {
                let mut row = vec![0i64; lower.len()];
                let mut sign = 1;
                for v in 0..n {
                    if f & (1 << v) != 0 {
                        row[index[&(f & !(1 << v))]] = sign;
                        sign = -sign;
                    }
                }
                row
            })
            .collect();
        ranks[s] = field.rank(&rows);
    }
    (0..=n).map(|s| (faces_by_size[s].len() - ranks[s] - ranks[s + 1]) as u64).collect()
}

pub fn multigraded_betti(ideal: &MonomialIdeal, field: FieldSpec) -> Result<MultigradedBetti> {
    let mut out = MultigradedBetti::new();
    if ideal.is_unit() {
        return Ok(out);
    }
    let values = guard_inputs(ideal)?;
    let n = ideal.n();
    out.insert((0, Monomial::one(n)), 1);
    let found: Vec<(Vec<u32>, Vec<u64>)> = multidegrees(&values)
        .into_par_iter()
        .filter(|b| b.iter().any(|&x| x > 0))
        .map(|b| {
            let h = koszul_homology(ideal, &b, field);
            (b, h)
        })
        .filter(|(_, h)| h.iter().any(|&x| x > 0))
        .collect();
    for (b, h) in found {
        let m = Monomial::new(b).expect("n >= 1");
        for (k1, &v) in h.iter().enumerate() {
            if v > 0 {
                out.insert((k1 + 1, m.clone()), v);
            }
        }
    }
    Ok(out)
}

/// Graded Betti numbers of `R/I`. The unit ideal gives the zero diagram.
pub fn betti_diagram(ideal: &MonomialIdeal, field: FieldSpec) -> Result<BettiDiagram> {
    let mg = multigraded_betti(ideal, field)?;
    let mut b = BettiDiagram::new(ideal.n());
    for ((i, m), v) in mg {
        b.add(i, m.degree(), v);
    }
    Ok(b)
}

/// Multigraded Euler characteristics of the Taylor complex, keyed by lcm.
pub fn taylor_euler_characteristics(ideal: &MonomialIdeal) -> Result<BTreeMap<Monomial, i64>> {
    let gens = ideal.gens();
    if gens.len() > MAX_TAYLOR_GENS {
        return Err(Error::GuardExceeded(format!("{} generators for the Taylor complex", gens.len())));
    }
    let mut out: BTreeMap<Monomial, i64> = BTreeMap::new();
    let n = ideal.n();
    let mut lcms: Vec<(Monomial, bool)> = vec![(Monomial::one(n), false)];
    for g in gens {
        let more: Vec<(Monomial, bool)> = lcms.iter().map(|(m, odd)| (m.lcm(g), !odd)).collect();
        lcms.extend(more);
    }
    for (m, odd) in lcms {
        *out.entry(m).or_insert(0) += if odd { -1 } else { 1 };
    }
    out.retain(|_, v| *v != 0);
    Ok(out)
}

/// Compare `Σ_i (-1)^i β_{i,b}` against the Taylor complex in every multidegree.
pub fn taylor_check(ideal: &MonomialIdeal, field: FieldSpec) -> Result<bool> {
    let mg = multigraded_betti(ideal, field)?;
    let mut euler: BTreeMap<Monomial, i64> = BTreeMap::new();
    for ((i, m), v) in mg {
        *euler.entry(m).or_insert(0) += if i % 2 == 0 { v as i64 } else { -(v as i64) };
    }
    euler.retain(|_, v| *v != 0);
    Ok(euler == taylor_euler_characteristics(ideal)?)
}

/// First degree where the numerator differs from `H(t) (1-t)^n`.
pub fn stanley_mismatch(h: &HilbertFunction, b: &BettiDiagram) -> Option<u32> {
    let n = b.n();
    let mut expected = vec![0i64; h.sigma() + n + 1];
    for (d, &v) in h.values().iter().enumerate() {
        let mut c = 1i64;
        for k in 0..=n {
            expected[d + k] += v as i64 * c;
            c = -c * (n - k) as i64 / (k as i64 + 1);
        }
    }
    let got = b.numerator();
    let len = expected.len().max(got.len());
    (0..len).find(|&j| expected.get(j).copied().unwrap_or(0) != got.get(j).copied().unwrap_or(0)).map(|j| j as u32)
}

pub fn stanley_check(h: &HilbertFunction, b: &BettiDiagram) -> bool {
    stanley_mismatch(h, b).is_none()
}

/// `d ↦ β_{n, d+n}`, cross-checked against the socle monomials.
pub fn socle_dims(ideal: &MonomialIdeal, field: FieldSpec) -> Result<BTreeMap<u32, u64>> {
    let b = betti_diagram(ideal, field)?;
    let n = b.n();
    let dims: BTreeMap<u32, u64> = b.entries().filter(|((i, _), _)| *i == n).map(|((_, j), v)| (j - n as u32, v)).collect();
    let direct: BTreeMap<u32, u64> =
        ideal.socle_monomials()?.into_iter().map(|(d, ms)| (d, ms.len() as u64)).collect();
    if dims != direct {
        return Err(Error::Inconsistent(format!("socle from homology {dims:?} differs from monomial socle {direct:?}")));
    }
    Ok(dims)
}

/// The two equalities forced by a common Hilbert function at the regularity `rho`.
pub fn last_betti_consequences(h: &HilbertFunction, b1: &BettiDiagram, b2: &BettiDiagram) -> bool {
    let Some(rho) = h.regularity() else {
        return true;
    };
    let n = b1.n();
    let rho = rho as u32;
    let top = n as u32 + rho;
    let diff = |b: &BettiDiagram| b.get(n - 1, top - 1) as i64 - b.get(n, top - 1) as i64;
    b1.get(n, top) == b2.get(n, top) && diff(b1) == diff(b2)
}

/// One degree of the mapping cone relation `β_{n,ω-j}(x:I) = β_{1,j}(I) - t_j`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct MappingConeRow {
    pub j: u32,
    pub beta_1: u64,
    pub beta_n_colon: u64,
    pub t: i64,
    pub multiplicity: usize,
    pub holds: bool,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct MappingConeReport {
    pub omega: u32,
    /// The pure powers are minimal generators of `I`.
    pub minimal: bool,
    pub rows: Vec<MappingConeRow>,
    pub holds: bool,
}

/// Checks `0 ≤ t_j ≤ |j|`, with `t_j = |j|` when the pure powers
/// `x_i^{powers[i]}` are minimal generators of `I`.
pub fn mapping_cone_check(ideal: &MonomialIdeal, powers: &[u32], field: FieldSpec) -> Result<MappingConeReport> {
    let n = ideal.n();
    if powers.len() != n {
        return Err(Error::Dimension { expected: n, found: powers.len() });
    }
    let pp = MonomialIdeal::pure_powers(powers);
    if !ideal.contains_ideal(&pp) {
        return Err(Error::Precondition(format!("{ideal} does not contain {pp}")));
    }
    let minimal = pp.gens().iter().all(|g| ideal.gens().contains(g));
    let residual = colon(&pp, ideal)?;
    let bi = betti_diagram(ideal, field)?;
    let bc = betti_diagram(&residual, field)?;
    let omega: u32 = powers.iter().sum();
    let mut rows = Vec::new();
    for j in 0..=omega {
        let beta_1 = bi.get(1, j);
        let beta_n_colon = bc.get(n, omega - j);
        let multiplicity = powers.iter().filter(|&&a| a == j).count();
        if beta_1 == 0 && beta_n_colon == 0 && multiplicity == 0 {
            continue;
        }
        let t = beta_1 as i64 - beta_n_colon as i64;
        let holds = 0 <= t && t <= multiplicity as i64 && (!minimal || t == multiplicity as i64);
        rows.push(MappingConeRow { j, beta_1, beta_n_colon, t, multiplicity, holds });
    }
    let holds = rows.iter().all(|r| r.holds);
    Ok(MappingConeReport { omega, minimal, rows, holds })
}
