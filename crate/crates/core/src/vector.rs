//! Recursive vectors encoding lex-plus-powers ideals containing given pure powers.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::growth::{gk_coefficients, lpp_sequence_violation, GkRectangle};
use crate::hilbert::HilbertFunction;
use crate::ideal::{minimalize, MonomialIdeal};
use crate::monomial::{DegreeList, Monomial};

/// `Leaf(d)` in one variable, `Node(T_1, ..., T_u)` in more, or `Empty`
/// (the vector of the unit ideal, dual of the complete intersection).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum LppVector {
    Empty,
    Leaf(u32),
    Node(Vec<LppVector>),
}

/// Length `l`, `sigma`, and `alpha` (`None` meaning infinity).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct VectorStats {
    pub length: u32,
    pub sigma: u32,
    pub alpha: Option<u32>,
    pub is_ci: bool,
}

/// The first failed validity clause.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum VectorViolation {
    Arity { expected: usize },
    LeafZero,
    LeafTooLarge { d: u32, a: u32 },
    EmptyChild,
    EmptyNode,
    TooLong { u: usize, a: u32 },
    ShorterThanLast { u: usize, last: u32 },
    SigmaNotBelowAlpha { index: usize, sigma: u32, alpha: u32 },
    Child { index: usize, inner: Box<VectorViolation> },
}

impl fmt::Display for VectorViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use VectorViolation::*;
        match self {
            Arity { expected } => write!(f, "nesting depth does not match {expected} variables"),
            LeafZero => write!(f, "leaf entries must be positive"),
            LeafTooLarge { d, a } => write!(f, "leaf {d} exceeds a_1 = {a}"),
            EmptyChild => write!(f, "empty vector used as a child"),
            EmptyNode => write!(f, "node without children"),
            TooLong { u, a } => write!(f, "length {u} exceeds a_1 = {a}"),
            ShorterThanLast { u, last } => write!(f, "length {u} exceeds l(T_u) = {last}"),
            SigmaNotBelowAlpha { index, sigma, alpha } => write!(
                f,
                "sigma(T_{index}) = {sigma} is not below alpha(T_{}) = {alpha}",
                index + 1
            ),
            Child { index, inner } => write!(f, "in T_{index}: {inner}"),
        }
    }
}

impl LppVector {
    pub fn is_empty(&self) -> bool {
        matches!(self, LppVector::Empty)
    }

    pub fn children(&self) -> &[LppVector] {
        match self {
            LppVector::Node(c) => c,
            _ => &[],
        }
    }

    fn check_arity(&self, n: usize) -> Result<()> {
        let ok = match self {
            LppVector::Empty => true,
            LppVector::Leaf(_) => n == 1,
            LppVector::Node(ch) => n > 1 && ch.iter().all(|c| c.is_empty() || c.check_arity(n - 1).is_ok()),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidVector(VectorViolation::Arity { expected: n }))
        }
    }

    /// Checks the validity clauses for `A`.
    ///
    /// Arity mismatches and failed clauses are both reported as
    /// [`Error::InvalidVector`]; the payload names the first failed clause.
    pub fn validate(&self, a: &DegreeList) -> Result<()> {
        self.check_arity(a.len())?;
        if self.is_empty() {
            return Ok(());
        }
        violation(self, a).map_or(Ok(()), |v| Err(Error::InvalidVector(v)))
    }

    pub fn is_valid(&self, a: &DegreeList) -> bool {
        self.validate(a).is_ok()
    }

    pub fn stats(&self, a: &DegreeList) -> Result<VectorStats> {
        self.validate(a)?;
        Ok(raw_stats(self, a))
    }

    /// The complete intersection vector of `A`.
    pub fn ci(a: &DegreeList) -> LppVector {
        match a.tail() {
            None => LppVector::Leaf(a.first()),
            Some(a2) => LppVector::Node(vec![LppVector::ci(&a2); a.first() as usize]),
        }
    }

    /// The ideal `W_T`.
    pub fn ideal(&self, a: &DegreeList) -> Result<MonomialIdeal> {
        self.validate(a)?;
        Ok(w_ideal(self, a.len()))
    }

    /// `H_T`, computed from the recursive sum formula.
    pub fn hilbert_function(&self) -> Result<HilbertFunction> {
        HilbertFunction::new(h_values(self))
    }

    /// The dual vector `T*`, whose ideal is the residual of `W_T` in the
    /// complete intersection.
    pub fn dual(&self, a: &DegreeList) -> Result<LppVector> {
        self.validate(a)?;
        Ok(raw_dual(self, a))
    }

    /// `W_{T_i} ⊇ W_{T_{i+1}}` for consecutive children, strictly unless
    /// they coincide, recursively.
    pub fn containment_chain_check(&self, a: &DegreeList) -> bool {
        let (LppVector::Node(ch), Some(a2)) = (self, a.tail()) else {
            return true;
        };
        let n2 = a2.len();
        let ideals: Vec<MonomialIdeal> = ch.iter().map(|c| w_ideal(c, n2)).collect();
        let chain = ideals.windows(2).zip(ch.windows(2)).all(|(w, t)| {
            w[0].contains_ideal(&w[1]) && (t[0] == t[1] || !w[1].contains_ideal(&w[0]))
        });
        chain && ch.iter().all(|c| c.containment_chain_check(&a2))
    }
}

fn violation(t: &LppVector, a: &DegreeList) -> Option<VectorViolation> {
    use VectorViolation::*;
    match t {
        LppVector::Empty => Some(EmptyChild),
        LppVector::Leaf(d) => {
            if *d == 0 {
                Some(LeafZero)
            } else if *d > a.first() {
                Some(LeafTooLarge { d: *d, a: a.first() })
            } else {
                None
            }
        }
        LppVector::Node(ch) => {
            let a2 = a.tail()?;
            let u = ch.len();
            if u == 0 {
                return Some(EmptyNode);
            }
            if u > a.first() as usize {
                return Some(TooLong { u, a: a.first() });
            }
            for (i, c) in ch.iter().enumerate() {
                if let Some(v) = violation(c, &a2) {
                    return Some(Child { index: i + 1, inner: Box::new(v) });
                }
            }
            let stats: Vec<VectorStats> = ch.iter().map(|c| raw_stats(c, &a2)).collect();
            let last = stats[u - 1].length;
            if u > last as usize {
                return Some(ShorterThanLast { u, last });
            }
            for i in 0..u - 1 {
                let sigma = stats[i].sigma;
                if let Some(alpha) = stats[i + 1].alpha {
                    if sigma >= alpha {
                        return Some(SigmaNotBelowAlpha { index: i + 1, sigma, alpha });
                    }
                }
            }
            None
        }
    }
}

fn raw_stats(t: &LppVector, a: &DegreeList) -> VectorStats {
    match t {
        LppVector::Empty => VectorStats { length: 0, sigma: 0, alpha: Some(0), is_ci: false },
        LppVector::Leaf(d) => {
            let is_ci = *d == a.first();
            VectorStats { length: *d, sigma: *d, alpha: (!is_ci).then_some(*d), is_ci }
        }
        LppVector::Node(ch) => {
            let a2 = a.tail().expect("node needs at least two variables");
            let u = ch.len() as u32;
            let last = &ch[ch.len() - 1];
            let last_stats = raw_stats(last, &a2);
            let sigma = if last_stats.is_ci {
                let s = ch.iter().filter(|c| *c == last).count() as u32;
                last_stats.sigma + s - 1
            } else {
                last_stats.sigma
            };
            let alpha = if u < a.first() { Some(u) } else { raw_stats(&ch[0], &a2).alpha.map(|x| u + x - 1) };
            let is_ci = u == a.first() && ch.iter().all(|c| raw_stats(c, &a2).is_ci);
            VectorStats { length: u, sigma, alpha, is_ci }
        }
    }
}

fn w_ideal(t: &LppVector, n: usize) -> MonomialIdeal {
    match t {
        LppVector::Empty => MonomialIdeal::unit(n),
        LppVector::Leaf(d) => MonomialIdeal::pure_powers(&[*d]),
        LppVector::Node(ch) => {
            let u = ch.len() as u32;
            let mut gens = vec![Monomial::var_power(n, 0, u)];
            for (i, c) in ch.iter().enumerate() {
                let e = u - 1 - i as u32;
                gens.extend(w_ideal(c, n - 1).gens().iter().map(|g| g.prepend(e)));
            }
            minimalize(n, gens).expect("arity is consistent")
        }
    }
}

fn h_values(t: &LppVector) -> Vec<u64> {
    match t {
        LppVector::Empty => Vec::new(),
        LppVector::Leaf(d) => vec![1; *d as usize],
        LppVector::Node(ch) => {
            let u = ch.len();
            let parts: Vec<Vec<u64>> = ch.iter().map(h_values).collect();
            let len = parts.iter().enumerate().map(|(j, p)| p.len() + u - 1 - j).max().unwrap_or(0);
            let mut out = vec![0u64; len];
            for (j, p) in parts.iter().enumerate() {
                for (i, v) in p.iter().enumerate() {
                    out[i + u - 1 - j] += v;
                }
            }
            out
        }
    }
}

fn raw_dual(t: &LppVector, a: &DegreeList) -> LppVector {
    match t {
        LppVector::Empty => LppVector::ci(a),
        LppVector::Leaf(d) if *d < a.first() => LppVector::Leaf(a.first() - d),
        LppVector::Leaf(_) => LppVector::Empty,
        LppVector::Node(ch) => {
            let a2 = a.tail().expect("node needs at least two variables");
            let pad = a.first() as usize - ch.len();
            let out: Vec<LppVector> = ch
                .iter()
                .rev()
                .map(|c| raw_dual(c, &a2))
                .chain(std::iter::repeat_n(LppVector::ci(&a2), pad))
                .filter(|c| !c.is_empty())
                .collect();
            if out.is_empty() {
                LppVector::Empty
            } else {
                LppVector::Node(out)
            }
        }
    }
}

/// Least `i` with `S(i)` below the complete intersection; `None` for infinity.
pub fn sequence_alpha(s: &HilbertFunction, a: &DegreeList) -> Option<u32> {
    let rect = GkRectangle::new(a);
    (0..a.ci_sigma()).find(|&i| s.at(i as usize) < rect.ci(i as usize))
}

pub fn sequence_sigma(s: &HilbertFunction) -> u32 {
    s.sigma() as u32
}

/// `S -> (S_1, S_1', h)` with `S(i) = S_1'(i) + S_1(i-1)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Decomposition {
    pub s1: HilbertFunction,
    pub s1_prime: HilbertFunction,
    /// First `i` with `c_i < 0`; `None` if there is none.
    pub cutoff: Option<usize>,
    pub e_row: Vec<u64>,
}

pub fn decompose(s: &HilbertFunction, a: &DegreeList) -> Result<Decomposition> {
    if let Some(why) = lpp_sequence_violation(s, a) {
        return Err(Error::NotLppSequence(why));
    }
    raw_decompose(s, a)
}

fn raw_decompose(s: &HilbertFunction, a: &DegreeList) -> Result<Decomposition> {
    let n = a.len();
    let b1 = s.at(1) as usize;
    if b1 < 2 {
        return Err(Error::Precondition(format!("S(1) = {b1}, decomposition needs S(1) >= 2")));
    }
    let factors: Vec<u32> = a.as_slice()[n + 1 - b1..].iter().rev().map(|x| x - 1).collect();
    let width = factors.iter().sum::<u32>() as usize + 1;
    let e_row = gk_coefficients(&factors, width);
    let e = |i: usize| e_row.get(i).copied().unwrap_or(0);
    let len = s.sigma().max(width) + 1;
    let c: Vec<i64> = (0..len).map(|i| s.at(i + 1) as i64 - e(i + 1) as i64).collect();
    let cutoff = c.iter().position(|&x| x < 0);
    let h = cutoff.unwrap_or(len);
    let s1 = HilbertFunction::new(c[..h].iter().map(|&x| x as u64).collect())?;
    let s1p: Vec<u64> = (0..len.max(s.sigma() + 1)).map(|i| if i <= h { e(i) } else { s.at(i) }).collect();
    let s1_prime = HilbertFunction::new(s1p)?;
    let mut trimmed = e_row;
    if let Some(z) = trimmed.iter().position(|&v| v == 0) {
        trimmed.truncate(z + 1);
    }
    Ok(Decomposition { s1, s1_prime, cutoff, e_row: trimmed })
}

/// The unique vector with `H_T = H`.
pub fn vector_of_hf(h: &HilbertFunction, a: &DegreeList) -> Result<LppVector> {
    if let Some(why) = lpp_sequence_violation(h, a) {
        if !h.is_zero() {
            return Err(Error::NotLppSequence(why));
        }
    }
    build(h, a)
}

fn build(h: &HilbertFunction, a: &DegreeList) -> Result<LppVector> {
    if h.is_zero() {
        return Ok(LppVector::Empty);
    }
    let n = a.len();
    let Some(a2) = a.tail() else {
        let d = h.sigma() as u32;
        if h.values().iter().any(|&v| v != 1) || d > a.first() {
            return Err(Error::NotLppSequence(format!("{h} in one variable with a = {}", a.first())));
        }
        return Ok(LppVector::Leaf(d));
    };
    if (h.at(1) as usize) < n {
        return Ok(LppVector::Node(vec![build(h, &a2)?]));
    }
    let dec = raw_decompose(h, a)?;
    let first = build(&dec.s1, a)?;
    let last = build(&dec.s1_prime, &a2)?;
    let LppVector::Node(mut children) = first else {
        return Err(Error::Inconsistent(format!("decomposition of {h} gave a non-node")));
    };
    children.push(last);
    Ok(LppVector::Node(children))
}

/// Every valid vector for `A` (excluding `Empty`), in a deterministic order.
pub fn all_valid_vectors(a: &DegreeList) -> Vec<LppVector> {
    let Some(a2) = a.tail() else {
        return (1..=a.first()).map(LppVector::Leaf).collect();
    };
    let pool: Vec<(LppVector, VectorStats)> =
        all_valid_vectors(&a2).into_iter().map(|t| (t.clone(), raw_stats(&t, &a2))).collect();
    let max_len = a.first() as usize;
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    fn rec(
        pool: &[(LppVector, VectorStats)],
        max_len: usize,
        stack: &mut Vec<usize>,
        out: &mut Vec<LppVector>,
    ) {
        if let Some(&last) = stack.last() {
            if stack.len() as u32 <= pool[last].1.length {
                out.push(LppVector::Node(stack.iter().map(|&i| pool[i].0.clone()).collect()));
            }
            if stack.len() == max_len {
                return;
            }
        }
        for j in 0..pool.len() {
            if let Some(&last) = stack.last() {
                if pool[j].1.alpha.is_some_and(|alpha| pool[last].1.sigma >= alpha) {
                    continue;
                }
            }
            stack.push(j);
            rec(pool, max_len, stack, out);
            stack.pop();
        }
    }
    rec(&pool, max_len, &mut stack, &mut out);
    out
}

/// Nested brackets; leaves are bare integers, `[]` is `Empty`.
impl fmt::Display for LppVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LppVector::Empty => f.write_str("[]"),
            LppVector::Leaf(d) => write!(f, "{d}"),
            LppVector::Node(ch) => {
                f.write_str("[")?;
                for (i, c) in ch.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str("]")
            }
        }
    }
}

/// Untyped bracket tree; [`LppVector::parse`] gives it an arity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Bracket {
    Int(u32),
    List(Vec<Bracket>),
}

impl FromStr for Bracket {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tokens = tokenize(s)?;
        let mut pos = 0;
        let tree = parse_bracket(&tokens, &mut pos)?;
        if let Some(t) = tokens.get(pos) {
            return Err(parse_err(t, "trailing input"));
        }
        Ok(tree)
    }
}

fn parse_err(token: &str, reason: &str) -> Error {
    Error::Parse { token: token.to_string(), reason: reason.to_string() }
}

fn tokenize(s: &str) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let mut num = String::new();
    for c in s.chars() {
        if c.is_ascii_digit() {
            num.push(c);
            continue;
        }
        if !num.is_empty() {
            out.push(std::mem::take(&mut num));
        }
        match c {
            '[' | ']' | '(' | ')' | ',' => out.push(c.to_string()),
            c if c.is_whitespace() => {}
            other => return Err(parse_err(&other.to_string(), "unexpected character in vector")),
        }
    }
    if !num.is_empty() {
        out.push(num);
    }
    Ok(out)
}

fn parse_bracket(tokens: &[String], pos: &mut usize) -> Result<Bracket> {
    let Some(tok) = tokens.get(*pos) else {
        return Err(parse_err("<end>", "unexpected end of vector"));
    };
    *pos += 1;
    match tok.as_str() {
        "[" | "(" => {
            let close = if tok == "[" { "]" } else { ")" };
            let mut items = Vec::new();
            if tokens.get(*pos).map(String::as_str) == Some(close) {
                *pos += 1;
                return Ok(Bracket::List(items));
            }
            loop {
                items.push(parse_bracket(tokens, pos)?);
                match tokens.get(*pos).map(String::as_str) {
                    Some(",") => *pos += 1,
                    Some(c) if c == close => {
                        *pos += 1;
                        return Ok(Bracket::List(items));
                    }
                    Some(other) => return Err(parse_err(other, "expected `,` or a closing bracket")),
                    None => return Err(parse_err("<end>", "unclosed bracket")),
                }
            }
        }
        t => t.parse::<u32>().map(Bracket::Int).map_err(|_| parse_err(t, "expected an integer or `[`")),
    }
}

impl LppVector {
    /// Parse the bracket format for `n` variables. Integers standing where a
    /// deeper vector is expected are wrapped in single-child nodes.
    pub fn parse(s: &str, n: usize) -> Result<LppVector> {
        let tree: Bracket = s.parse()?;
        match (&tree, n) {
            (Bracket::List(items), _) if items.is_empty() => Ok(LppVector::Empty),
            (Bracket::List(items), 1) if items.len() == 1 => from_bracket(&items[0], 1),
            _ => from_bracket(&tree, n),
        }
    }
}

fn from_bracket(b: &Bracket, n: usize) -> Result<LppVector> {
    match (b, n) {
        (Bracket::Int(d), 1) => Ok(LppVector::Leaf(*d)),
        (Bracket::List(items), 1) if items.len() == 1 => from_bracket(&items[0], 1),
        (Bracket::List(_), 1) => Err(parse_err(&bracket_string(b), "list where a one-variable leaf is expected")),
        (Bracket::Int(_), _) => Ok(LppVector::Node(vec![from_bracket(b, n - 1)?])),
        (Bracket::List(items), _) if items.is_empty() => Err(parse_err("[]", "empty vector inside a vector")),
        (Bracket::List(items), _) => {
            Ok(LppVector::Node(items.iter().map(|i| from_bracket(i, n - 1)).collect::<Result<_>>()?))
        }
    }
}

fn bracket_string(b: &Bracket) -> String {
    match b {
        Bracket::Int(d) => d.to_string(),
        Bracket::List(items) => format!("[{}]", items.iter().map(bracket_string).collect::<Vec<_>>().join(",")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(v: &[u32]) -> DegreeList {
        DegreeList::new(v.to_vec()).unwrap()
    }

    fn v(s: &str, n: usize) -> LppVector {
        LppVector::parse(s, n).unwrap()
    }

    fn hf(s: &str) -> HilbertFunction {
        s.parse().unwrap()
    }

    const RUNNING: &str = "[[1,2],[1,3,4],[2,3,6,6],[5,6,6,6]]";

    #[test]
    fn validity() {
        assert!(v(RUNNING, 3).is_valid(&a(&[4, 4, 6])));
        let five = v("[[1,2],[1,3,4],[2,3,6,6],[5,6,6,6],[6,6,6,6]]", 3);
        for x in DegreeList::all_up_to(3, 8) {
            assert!(!five.is_valid(&x));
        }
        assert!(LppVector::Leaf(4).is_valid(&a(&[4])));
        let err = LppVector::Leaf(5).validate(&a(&[4])).unwrap_err();
        assert_eq!(err, Error::InvalidVector(VectorViolation::LeafTooLarge { d: 5, a: 4 }));
        assert!(matches!(
            v("[1,2]", 2).validate(&a(&[2, 2, 2])),
            Err(Error::InvalidVector(VectorViolation::Arity { .. }))
        ));
    }

    #[test]
    fn running_example_stats() {
        let a2 = a(&[4, 6]);
        assert_eq!(v("[5,6,6,6]", 2).stats(&a2).unwrap().sigma, 8);
        assert_eq!(v("[2,3,6,6]", 2).stats(&a2).unwrap().alpha, Some(5));
        let aa = a(&[2, 3, 4]);
        let ci = LppVector::ci(&aa).stats(&aa).unwrap();
        assert_eq!((ci.sigma, ci.alpha, ci.is_ci), (7, None, true));
    }

    #[test]
    fn ci_vectors() {
        assert_eq!(LppVector::ci(&a(&[3])), LppVector::Leaf(3));
        assert_eq!(LppVector::ci(&a(&[2, 2])), v("[2,2]", 2));
        let aa = a(&[2, 3, 4]);
        assert_eq!(LppVector::ci(&aa).ideal(&aa).unwrap(), MonomialIdeal::pure_powers(&[2, 3, 4]));
    }

    #[test]
    fn ideals_of_vectors() {
        let w = v("[1,3,4,7,7]", 2).ideal(&a(&[5, 7])).unwrap();
        let expected = MonomialIdeal::from_exponents(2, &[&[5, 0], &[4, 1], &[3, 3], &[2, 4], &[0, 7]]).unwrap();
        assert_eq!(w, expected);
        let w = v("[3,5,6,6,6]", 2).ideal(&a(&[5, 6])).unwrap();
        let expected = MonomialIdeal::from_exponents(2, &[&[5, 0], &[4, 3], &[3, 5], &[0, 6]]).unwrap();
        assert_eq!(w, expected);
        assert!(LppVector::Empty.ideal(&a(&[2, 2])).unwrap().is_unit());
    }

    #[test]
    fn hilbert_functions() {
        assert_eq!(v(RUNNING, 3).hilbert_function().unwrap(), hf("1 3 6 10 13 10 5 3 0"));
        assert_eq!(LppVector::Leaf(4).hilbert_function().unwrap(), hf("1 1 1 1 0"));
        assert_eq!(v("[1,3,4]", 2).hilbert_function().unwrap(), hf("1 2 3 2 0"));
    }

    #[test]
    fn running_decomposition() {
        let d = decompose(&hf("1 3 6 10 13 10 5 3 0"), &a(&[4, 4, 6])).unwrap();
        assert_eq!(d.s1, hf("1 3 6 9 6 2 1 0"));
        assert_eq!(d.s1_prime, hf("1 2 3 4 4 4 3 2 0"));
        assert_eq!(d.e_row, vec![1, 2, 3, 4, 4, 4, 3, 2, 1, 0]);
        assert_eq!(d.cutoff, Some(7));
        assert!(decompose(&hf("1 1 0"), &a(&[4, 4, 6])).is_err());
    }

    #[test]
    fn decomposition_of_ci_lowers_alpha() {
        let aa = a(&[2, 2, 2]);
        let s = crate::growth::ci_hilbert_function(&aa);
        let d = decompose(&s, &aa).unwrap();
        assert_eq!(sequence_alpha(&s, &aa), None);
        assert!(sequence_alpha(&d.s1, &aa).is_some());
    }

    #[test]
    fn bijection_examples() {
        let t = vector_of_hf(&hf("1 3 6 10 13 10 5 3 0"), &a(&[4, 4, 6])).unwrap();
        assert_eq!(t.to_string(), RUNNING);
        let t = vector_of_hf(&hf("1 2 3 4 4 4 3 2 0"), &a(&[4, 6])).unwrap();
        assert_eq!(t.to_string(), "[5,6,6,6]");
        let t = vector_of_hf(&hf("1 2 3 2 0"), &a(&[5, 7])).unwrap();
        assert_eq!(t.to_string(), "[1,3,4]");
        let aa = a(&[2, 3, 4]);
        assert_eq!(vector_of_hf(&crate::growth::ci_hilbert_function(&aa), &aa).unwrap(), LppVector::ci(&aa));
        assert!(vector_of_hf(&hf("1 4 0"), &aa).is_err());
    }

    #[test]
    fn sequence_invariants() {
        let aa = a(&[4, 4, 6]);
        let h = hf("1 3 6 10 13 10 5 3 0");
        let ci = MonomialIdeal::pure_powers(&[4, 4, 6]).hilbert_function().unwrap();
        let alpha = (0..).find(|&i| h.at(i) < ci.at(i)).unwrap() as u32;
        assert_eq!(sequence_alpha(&h, &aa), Some(alpha));
        assert_eq!(alpha, 5);
        assert_eq!(sequence_sigma(&h), 8);
        assert_eq!(sequence_alpha(&ci, &aa), None);
        assert_eq!(sequence_sigma(&ci), aa.ci_sigma());
        let d = decompose(&h, &aa).unwrap();
        assert!(sequence_alpha(&d.s1, &aa).unwrap() < alpha);
    }

    #[test]
    fn duals() {
        let a57 = a(&[5, 7]);
        assert_eq!(v("[1,3,4,7,7]", 2).dual(&a57).unwrap().to_string(), "[3,4,6]");
        assert_eq!(LppVector::ci(&a57).dual(&a57).unwrap(), LppVector::Empty);
        assert_eq!(LppVector::Empty.dual(&a57).unwrap(), LppVector::ci(&a57));
        let aa = a(&[2, 3, 4]);
        let pp = MonomialIdeal::complete_intersection(&aa);
        for t in all_valid_vectors(&aa) {
            let d = t.dual(&aa).unwrap();
            let residual = crate::ideal::colon(&pp, &t.ideal(&aa).unwrap()).unwrap();
            assert_eq!(d.ideal(&aa).unwrap(), residual, "{t}");
        }
    }

    #[test]
    fn containment_chains() {
        assert!(v(RUNNING, 3).containment_chain_check(&a(&[4, 4, 6])));
        let aa = a(&[3, 3, 3]);
        assert!(LppVector::ci(&aa).containment_chain_check(&aa));
        for t in all_valid_vectors(&aa) {
            assert!(t.containment_chain_check(&aa), "{t}");
        }
    }

    #[test]
    fn parse_forms() {
        assert_eq!(v("3", 1), LppVector::Leaf(3));
        assert_eq!(v("[3]", 1), LppVector::Leaf(3));
        assert_eq!(v("[]", 3), LppVector::Empty);
        assert_eq!(v("(1,3,4)", 2), v("[1,3,4]", 2));
        assert_eq!(v("[1,2]", 3), LppVector::Node(vec![v("[1]", 2), v("[2]", 2)]));
        let e = LppVector::parse("[1,x]", 2).unwrap_err();
        assert!(e.to_string().contains("`x`"));
        assert!(LppVector::parse("[1,2", 2).is_err());
        assert!(LppVector::parse("[[1],[2]]", 1).is_err());
    }
}
