//! Exhaustive checks over all monomial ideals with a given Hilbert function
//! that contain prescribed pure powers.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::growth::{lpp_bound_in, lpp_sequence_violation, GkRectangle};
use crate::hilbert::HilbertFunction;
use crate::ideal::{colon, minimalize, MonomialIdeal};
use crate::linalg::FieldSpec;
use crate::monomial::{standard_monomials_of_degree, DegreeList, Monomial};
use crate::resolution::{betti_diagram, BettiDiagram};
use crate::vector::{all_valid_vectors, vector_of_hf, LppVector};

/// Environment variable overriding [`Guard::max_ideals`].
pub const GUARD_ENV: &str = "LPPKIT_GUARD";

/// Limits on enumeration size.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Guard {
    /// Largest accepted `Σ H(i)`, the number of standard monomials.
    pub max_length: u64,
    /// Largest number of ideals produced for one instance.
    pub max_ideals: usize,
}

impl Default for Guard {
    fn default() -> Self {
        Guard { max_length: 64, max_ideals: 1_000_000 }
    }
}

impl Guard {
    /// Default guard, with `max_ideals` taken from `LPPKIT_GUARD` when set.
    pub fn from_env() -> Result<Self> {
        let mut g = Guard::default();
        if let Ok(v) = std::env::var(GUARD_ENV) {
            g.max_ideals = v.trim().parse().map_err(|_| Error::Parse {
                token: v.clone(),
                reason: format!("{GUARD_ENV} must be a nonnegative integer"),
            })?;
        }
        Ok(g)
    }
}

/// Visit every monomial ideal containing `x_i^{a_i}` with Hilbert function `H`.
///
/// Standard monomials are chosen degree by degree; a monomial is eligible
/// only if all its divisors of one lower degree were chosen. Choices within
/// a degree run through index combinations in lexicographic order, so the
/// stream is deterministic. Returns the number of ideals visited.
pub fn for_each_ideal(
    h: &HilbertFunction,
    a: &DegreeList,
    guard: Guard,
    mut visit: impl FnMut(MonomialIdeal),
) -> Result<usize> {
    let n = a.len();
    if h.total() > guard.max_length {
        return Err(Error::GuardExceeded(format!(
            "{} standard monomials exceed the limit {}",
            h.total(),
            guard.max_length
        )));
    }
    let pp = MonomialIdeal::pure_powers(a.as_slice());
    if h.is_zero() {
        visit(MonomialIdeal::unit(n));
        return Ok(1);
    }
    let slices: Vec<Vec<Monomial>> =
        (0..=h.sigma() as u32).map(|d| standard_monomials_of_degree(a.as_slice(), d).collect()).collect();
    let mut state = Search { h, slices: &slices, pp: &pp, guard, count: 0, chosen: Vec::new(), excluded: Vec::new() };
    state.descend(0, &mut visit)?;
    Ok(state.count)
}

struct Search<'a> {
    h: &'a HilbertFunction,
    slices: &'a [Vec<Monomial>],
    pp: &'a MonomialIdeal,
    guard: Guard,
    count: usize,
    chosen: Vec<Vec<Monomial>>,
    excluded: Vec<Monomial>,
}

impl Search<'_> {
    fn descend(&mut self, d: usize, visit: &mut impl FnMut(MonomialIdeal)) -> Result<()> {
        let eligible: Vec<Monomial> = self.slices[d]
            .iter()
            .filter(|m| {
                d == 0
                    || (0..m.n()).all(|i| m.div_var(i).is_none_or(|q| self.chosen[d - 1].binary_search(&q).is_ok()))
            })
            .cloned()
            .collect();
        let want = self.h.at(d) as usize;
        if d == self.h.sigma() {
            let excluded_before = self.excluded.len();
            self.excluded.extend(eligible);
            self.emit(visit)?;
            self.excluded.truncate(excluded_before);
            return Ok(());
        }
        if eligible.len() < want {
            return Ok(());
        }
        let mut idx: Vec<usize> = (0..want).collect();
        loop {
            let mut pick: Vec<Monomial> = idx.iter().map(|&i| eligible[i].clone()).collect();
            pick.sort();
            let excluded_before = self.excluded.len();
            self.excluded.extend(eligible.iter().enumerate().filter(|(i, _)| !idx.contains(i)).map(|(_, m)| m.clone()));
            self.chosen.push(pick);
            self.descend(d + 1, visit)?;
            self.chosen.pop();
            self.excluded.truncate(excluded_before);
            if !next_combination(&mut idx, eligible.len()) {
                return Ok(());
            }
        }
    }

    fn emit(&mut self, visit: &mut impl FnMut(MonomialIdeal)) -> Result<()> {
        self.count += 1;
        if self.count > self.guard.max_ideals {
            return Err(Error::GuardExceeded(format!("more than {} ideals", self.guard.max_ideals)));
        }
        let n = self.pp.n();
        let gens = self.excluded.iter().cloned().chain(self.pp.gens().iter().cloned());
        visit(minimalize(n, gens).expect("arity is consistent"));
        Ok(())
    }
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

pub fn enumerate_ideals(h: &HilbertFunction, a: &DegreeList, guard: Guard) -> Result<Vec<MonomialIdeal>> {
    let mut out = Vec::new();
    for_each_ideal(h, a, guard, |i| out.push(i))?;
    Ok(out)
}

/// The LPP(A) ideal with Hilbert function `H`, or why there is none.
pub fn lpp_ideal(h: &HilbertFunction, a: &DegreeList) -> std::result::Result<MonomialIdeal, String> {
    if let Some(why) = lpp_sequence_violation(h, a) {
        return Err(format!("not an lpp sequence for {a}: {why}"));
    }
    let t = vector_of_hf(h, a).map_err(|e| e.to_string())?;
    let l = t.ideal(a).map_err(|e| e.to_string())?;
    if !l.pure_power_profile().matches(a) {
        return Err(format!("no LPP({a}) ideal attains {h}; the lex-plus-powers ideal {l} has other pure powers"));
    }
    Ok(l)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    NotValid,
    GuardExceeded,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "FAIL",
            Verdict::NotValid => "not-valid",
            Verdict::GuardExceeded => "guard-exceeded",
        })
    }
}

/// Ideals reproducing a failure.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Witness {
    pub ideals: Vec<serde_json::Value>,
    pub human: Vec<String>,
}

impl Witness {
    fn of(ideals: &[MonomialIdeal]) -> Self {
        Witness { ideals: ideals.iter().map(MonomialIdeal::to_json).collect(), human: ideals.iter().map(MonomialIdeal::to_human).collect() }
    }
}

/// Outcome of one check on one instance.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub degrees: Vec<u32>,
    pub hf: Option<String>,
    /// The class of ideals examined.
    pub class: String,
    pub verdict: Verdict,
    pub examined: usize,
    pub detail: String,
    pub witness: Option<Witness>,
    pub notes: Vec<String>,
}

impl CheckReport {
    fn new(check: &str, a: &DegreeList, h: Option<&HilbertFunction>, class: &str) -> Self {
        CheckReport {
            check: check.into(),
            degrees: a.as_slice().to_vec(),
            hf: h.map(ToString::to_string),
            class: class.into(),
            verdict: Verdict::Pass,
            examined: 0,
            detail: String::new(),
            witness: None,
            notes: Vec::new(),
        }
    }

    fn fail(mut self, detail: String, ideals: &[MonomialIdeal]) -> Self {
        self.verdict = Verdict::Fail;
        self.detail = detail;
        self.witness = Some(Witness::of(ideals));
        self
    }

    fn errored(mut self, e: Error) -> Self {
        self.verdict = match e {
            Error::GuardExceeded(_) => Verdict::GuardExceeded,
            _ => Verdict::Fail,
        };
        self.detail = e.to_string();
        self
    }

    pub fn passed(&self) -> bool {
        matches!(self.verdict, Verdict::Pass | Verdict::NotValid)
    }

    pub fn json_line(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }

    pub fn table_header() -> String {
        format!("{:<12} {:<12} {:<28} {:<14} {:>8}  detail", "check", "A", "H", "verdict", "examined")
    }

    pub fn table_row(&self) -> String {
        let a: Vec<String> = self.degrees.iter().map(ToString::to_string).collect();
        format!(
            "{:<12} {:<12} {:<28} {:<14} {:>8}  {}",
            self.check,
            a.join(","),
            self.hf.as_deref().unwrap_or("-"),
            self.verdict.to_string(),
            self.examined,
            self.detail
        )
        .trim_end()
        .to_string()
    }
}

/// 0 if every report passes, 2 on any failure, 3 if a guard was hit.
pub fn exit_code(reports: &[CheckReport]) -> i32 {
    if reports.iter().any(|r| r.verdict == Verdict::Fail) {
        2
    } else if reports.iter().any(|r| r.verdict == Verdict::GuardExceeded) {
        3
    } else {
        0
    }
}

const MONOMIAL_CLASS: &str = "monomial ideals containing the pure powers";

/// Run `check` on every enumerated ideal; the first failure (in stream
/// order) becomes the witness.
fn over_ideals<F>(mut report: CheckReport, h: &HilbertFunction, a: &DegreeList, guard: Guard, check: F) -> CheckReport
where
    F: Fn(&MonomialIdeal) -> Result<Option<(String, Vec<MonomialIdeal>)>> + Sync,
{
    let ideals = match enumerate_ideals(h, a, guard) {
        Ok(v) => v,
        Err(e) => return report.errored(e),
    };
    report.examined = ideals.len();
    let outcome = ideals.par_iter().map(&check).find_first(|r| !matches!(r, Ok(None)));
    match outcome {
        None | Some(Ok(None)) => report,
        Some(Ok(Some((detail, ideals)))) => report.fail(detail, &ideals),
        Some(Err(e)) => report.errored(e),
    }
}

fn soundness(i: &MonomialIdeal, h: &HilbertFunction, a: &DegreeList) -> Result<Option<(String, Vec<MonomialIdeal>)>> {
    if !i.contains_ideal(&MonomialIdeal::pure_powers(a.as_slice())) {
        return Ok(Some(("enumerated ideal misses a pure power".into(), vec![i.clone()])));
    }
    let got = i.hilbert_function()?;
    if &got != h {
        return Ok(Some((format!("enumerated ideal has Hilbert function {got}"), vec![i.clone()])));
    }
    Ok(None)
}

/// `H(d+1) ≤ H(d)^<d>_A` for every enumerated ideal and degree.
pub fn growth_check(h: &HilbertFunction, a: &DegreeList, guard: Guard) -> CheckReport {
    let report = CheckReport::new("growth", a, Some(h), MONOMIAL_CLASS);
    let rect = GkRectangle::new(a);
    over_ideals(report, h, a, guard, |i| {
        if let Some(f) = soundness(i, h, a)? {
            return Ok(Some(f));
        }
        let hi = i.hilbert_function()?;
        for d in 0..hi.sigma() {
            let bound = lpp_bound_in(hi.at(d), d as u32, &rect)?;
            if hi.at(d + 1) > bound {
                return Ok(Some((format!("H({}) = {} exceeds bound {bound}", d + 1, hi.at(d + 1)), vec![i.clone()])));
            }
        }
        Ok(None)
    })
}

fn with_lpp<F>(name: &str, h: &HilbertFunction, a: &DegreeList, field: FieldSpec, guard: Guard, f: F) -> CheckReport
where
    F: Fn(&MonomialIdeal, &BettiDiagram, &MonomialIdeal, &BettiDiagram) -> Option<String> + Sync,
{
    let mut report = CheckReport::new(name, a, Some(h), MONOMIAL_CLASS);
    let l = match lpp_ideal(h, a) {
        Ok(l) => l,
        Err(why) => {
            report.verdict = Verdict::NotValid;
            report.detail = why;
            return report;
        }
    };
    let bl = match betti_diagram(&l, field) {
        Ok(b) => b,
        Err(e) => return report.errored(e),
    };
    report.notes.push(format!("L = {}", l.to_human()));
    report.notes.push(format!("field {field}"));
    over_ideals(report, h, a, guard, |i| {
        if let Some(f) = soundness(i, h, a)? {
            return Ok(Some(f));
        }
        let bi = betti_diagram(i, field)?;
        Ok(f(&l, &bl, i, &bi).map(|why| (why, vec![l.clone(), i.clone()])))
    })
}

/// `β^L_{i,j} ≥ β^I_{i,j}` for the LPP ideal `L` and every enumerated `I`.
pub fn lpp_dominance_check(h: &HilbertFunction, a: &DegreeList, field: FieldSpec, guard: Guard) -> CheckReport {
    with_lpp("lpp", h, a, field, guard, |_, bl, _, bi| {
        bi.entries()
            .find(|&((i, j), v)| bl.get(i, j) < v)
            .map(|((i, j), v)| format!("beta_{i},{j}: L has {}, I has {v}", bl.get(i, j)))
    })
}

/// Socle dominance, its single-degree form at `rho+n-1`, truncation
/// consistency, and first Betti dominance.
pub fn socle_equivalence_check(h: &HilbertFunction, a: &DegreeList, field: FieldSpec, guard: Guard) -> CheckReport {
    let n = a.len();
    let rho = h.regularity().unwrap_or(0) as u32;
    let top = rho + n as u32;
    let mut report = with_lpp("socle-equiv", h, a, field, guard, |_, bl, i, bi| {
        if let Some(((_, j), v)) = bi.entries().find(|&((k, j), v)| k == n && bl.get(n, j) < v) {
            return Some(format!("(a) socle: beta_{n},{j}: L has {}, I has {v}", bl.get(n, j)));
        }
        if bl.get(n, top - 1) < bi.get(n, top - 1) {
            return Some(format!("(b) beta_{n},{} of L is smaller", top - 1));
        }
        if bl.get(n, top) != bi.get(n, top) {
            return Some(format!("(c) beta_{n},{top} differs from L"));
        }
        if rho >= 1 {
            let bt = match betti_diagram(&i.add_maximal_power(rho), field) {
                Ok(b) => b,
                Err(e) => return Some(format!("(c) truncation failed: {e}")),
            };
            if let Some(j) = (0..=top.saturating_sub(2)).find(|&j| bt.get(n, j) != bi.get(n, j)) {
                return Some(format!("(c) truncation by m^{rho} changes beta_{n},{j}"));
            }
        }
        if let Some(((_, j), v)) = bi.entries().find(|&((k, j), v)| k == 1 && bl.get(1, j) < v) {
            return Some(format!("first Betti: beta_1,{j}: L has {}, I has {v}", bl.get(1, j)));
        }
        None
    });
    if rho < 1 && report.verdict == Verdict::Pass {
        report.notes.push("rho < 1: truncation sub-check vacuous".into());
    }
    report
}

/// Ideals whose Betti diagrams differ between characteristic 0 and `p`.
pub fn characteristic_check(h: &HilbertFunction, a: &DegreeList, p: FieldSpec, guard: Guard) -> CheckReport {
    let mut report = CheckReport::new("char", a, Some(h), MONOMIAL_CLASS);
    let ideals = match enumerate_ideals(h, a, guard) {
        Ok(v) => v,
        Err(e) => return report.errored(e),
    };
    report.examined = ideals.len();
    let sensitive: Vec<String> = ideals
        .par_iter()
        .filter_map(|i| {
            let q = betti_diagram(i, FieldSpec::rational()).ok()?;
            let fp = betti_diagram(i, p).ok()?;
            (q != fp).then(|| i.to_human())
        })
        .collect();
    report.detail = format!("{} characteristic-sensitive ideals against {p}", sensitive.len());
    report.notes = sensitive;
    report
}

/// For every valid vector `T` of `A`: `(x^A : W_T) = W_{T*}`, the residual is
/// lex-plus-powers for its own pure powers, and `T** = T`.
pub fn residual_lpp_check(a: &DegreeList) -> CheckReport {
    let mut report = CheckReport::new("residual", a, None, "lex-plus-powers ideals containing the pure powers");
    let pp = MonomialIdeal::complete_intersection(a);
    let vectors = all_valid_vectors(a);
    report.examined = vectors.len();
    let outcome = vectors.par_iter().map(|t| residual_failure(t, a, &pp)).find_first(Option::is_some).flatten();
    if let Some((why, ideals)) = outcome {
        report = report.fail(why, &ideals);
    }
    report
}

fn residual_failure(t: &LppVector, a: &DegreeList, pp: &MonomialIdeal) -> Option<(String, Vec<MonomialIdeal>)> {
    let w = match t.ideal(a) {
        Ok(w) => w,
        Err(e) => return Some((format!("{t}: {e}"), vec![])),
    };
    let fail = |why: String| Some((format!("{t}: {why}"), vec![w.clone()]));
    let dual = match t.dual(a) {
        Ok(d) => d,
        Err(e) => return fail(e.to_string()),
    };
    let wd = match dual.ideal(a) {
        Ok(x) => x,
        Err(e) => return fail(format!("dual {dual} invalid: {e}")),
    };
    let residual = colon(pp, &w).expect("same arity");
    if residual != wd {
        return fail(format!("residual {residual} differs from W of dual {dual}"));
    }
    if !residual.is_unit() {
        let profile = residual.pure_power_profile().finite().unwrap_or_default();
        match DegreeList::new(profile.clone()) {
            Ok(b) if residual.is_lpp(&b) => {}
            _ => return fail(format!("residual {residual} is not lex-plus-powers for {profile:?}")),
        }
    }
    match dual.dual(a) {
        Ok(back) if &back == t => None,
        Ok(back) => fail(format!("double dual is {back}")),
        Err(e) => fail(e.to_string()),
    }
}

/// For each LPP(A) ideal `L` with residual profile `A'`, the residual is a
/// lex segment in every degree `a'_s < a_s`.
pub fn lexseg_lemma_check(a: &DegreeList) -> CheckReport {
    let mut report = CheckReport::new("lexseg", a, None, "LPP(A) ideals");
    let pp = MonomialIdeal::complete_intersection(a);
    let ideals: Vec<MonomialIdeal> = all_valid_vectors(a)
        .into_iter()
        .filter_map(|t| t.ideal(a).ok())
        .filter(|w| w.pure_power_profile().matches(a))
        .collect();
    report.examined = ideals.len();
    let outcome = ideals
        .par_iter()
        .map(|l| {
            let residual = colon(&pp, l).expect("same arity");
            let profile = residual.pure_power_profile().finite().expect("residual of an Artinian ideal");
            profile
                .iter()
                .zip(a.as_slice())
                .filter(|(p, q)| p < q)
                .find(|(p, _)| !residual.is_lex_segment(**p))
                .map(|(p, _)| (format!("residual {residual} is not a lex segment in degree {p}"), vec![l.clone()]))
        })
        .find_first(Option::is_some)
        .flatten();
    if let Some((why, ideals)) = outcome {
        report = report.fail(why, &ideals);
    }
    report
}

/// Hilbert functions of lex-plus-powers ideals containing `x^A`, with
/// `σ ≤ max_sigma`; with `exact`, only those of LPP(A) ideals.
pub fn sweep_sequences(a: &DegreeList, max_sigma: usize, exact: bool) -> Vec<HilbertFunction> {
    let mut out: Vec<HilbertFunction> = all_valid_vectors(a)
        .into_iter()
        .filter(|t| !exact || t.ideal(a).is_ok_and(|w| w.pure_power_profile().matches(a)))
        .filter_map(|t| t.hilbert_function().ok())
        .filter(|h| h.sigma() <= max_sigma)
        .collect();
    out.sort_by(|x, y| x.values().cmp(y.values()));
    out
}
