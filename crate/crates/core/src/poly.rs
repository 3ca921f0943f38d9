//! Sparse multivariate polynomials over Q in the variables x, y, z.
//!
//! Terms are kept in a `BTreeMap` ordered by graded reverse lexicographic
//! order with x < y < z, so iteration in reverse yields the canonical
//! descending term order used everywhere for display and comparison.

use crate::num::{fmt_rat, rat, Interval, Rat, Sign};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Var {
    X,
    Y,
    Z,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::Z => "z",
        }
    }
}

pub const VARS: [Var; 3] = [Var::X, Var::Y, Var::Z];

/// Exponent triple of a monomial x^dx y^dy z^dz.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Hash)]
pub struct Mono {
    pub dx: u32,
    pub dy: u32,
    pub dz: u32,
}

impl Mono {
    pub fn new(dx: u32, dy: u32, dz: u32) -> Mono {
        Mono { dx, dy, dz }
    }

    pub fn total(&self) -> u32 {
        self.dx + self.dy + self.dz
    }

    pub fn get(&self, v: Var) -> u32 {
        match v {
            Var::X => self.dx,
            Var::Y => self.dy,
            Var::Z => self.dz,
        }
    }

    pub fn set(&mut self, v: Var, e: u32) {
        match v {
            Var::X => self.dx = e,
            Var::Y => self.dy = e,
            Var::Z => self.dz = e,
        }
    }

    fn mul(&self, o: &Mono) -> Mono {
        Mono::new(self.dx + o.dx, self.dy + o.dy, self.dz + o.dz)
    }

    fn divides(&self, o: &Mono) -> bool {
        self.dx <= o.dx && self.dy <= o.dy && self.dz <= o.dz
    }

    fn div(&self, o: &Mono) -> Mono {
        Mono::new(self.dx - o.dx, self.dy - o.dy, self.dz - o.dz)
    }
}

impl Ord for Mono {
    // grevlex with x < y < z: higher total degree first; ties broken so that
    // the monomial with the smaller exponent in the last differing variable
    // (scanning z, y, x) is the larger one.
    fn cmp(&self, other: &Self) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then_with(|| other.dz.cmp(&self.dz))
            .then_with(|| other.dy.cmp(&self.dy))
            .then_with(|| other.dx.cmp(&self.dx))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyError {
    ZeroPolynomial,
    ZeroDivisor,
    NotDivisible,
    ShapeError(String),
    Parse(String),
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::ZeroPolynomial => write!(f, "zero polynomial"),
            PolyError::ZeroDivisor => write!(f, "division by the zero polynomial"),
            PolyError::NotDivisible => write!(f, "not exactly divisible"),
            PolyError::ShapeError(s) => write!(f, "matrix shape error: {s}"),
            PolyError::Parse(s) => write!(f, "parse error: {s}"),
        }
    }
}

impl std::error::Error for PolyError {}

/// Sparse polynomial in Q[x, y, z]. No stored coefficient is zero; the zero
/// polynomial has an empty term map.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Mono, Rat>,
}

impl MultiPoly {
    pub fn zero() -> MultiPoly {
        MultiPoly::default()
    }

    pub fn one() -> MultiPoly {
        MultiPoly::constant(rat(1))
    }

    pub fn constant(c: Rat) -> MultiPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::default(), c);
        }
        MultiPoly { terms }
    }

    pub fn var(v: Var) -> MultiPoly {
        let mut m = Mono::default();
        m.set(v, 1);
        MultiPoly::monomial(m, rat(1))
    }

    pub fn monomial(m: Mono, c: Rat) -> MultiPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    pub fn from_terms(ts: impl IntoIterator<Item = (Mono, Rat)>) -> MultiPoly {
        let mut p = MultiPoly::zero();
        for (m, c) in ts {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.contains_key(&Mono::default()))
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_zero() {
            Some(Rat::zero())
        } else if self.is_constant() {
            self.terms.get(&Mono::default()).cloned()
        } else {
            None
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending canonical (grevlex) order.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Mono) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    fn add_term(&mut self, m: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total()).max()
    }

    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|m| m.get(v)).max()
    }

    pub fn depends_on(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.get(v) > 0)
    }

    /// Leading (grevlex-max) term.
    pub fn leading(&self) -> Option<(&Mono, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn add(&self, o: &MultiPoly) -> MultiPoly {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(*m, c.clone());
        }
        r
    }

    pub fn sub(&self, o: &MultiPoly) -> MultiPoly {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(*m, -c);
        }
        r
    }

    pub fn mul(&self, o: &MultiPoly) -> MultiPoly {
        let mut r = MultiPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                r.add_term(m1.mul(m2), c1 * c2);
            }
        }
        r
    }

    pub fn scale(&self, k: &Rat) -> MultiPoly {
        if k.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, c * k)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut r = MultiPoly::one();
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    pub fn eval(&self, x: &Rat, y: &Rat, z: &Rat) -> Rat {
        // Cache powers per variable.
        let pow_table = |v: &Rat, max: u32| -> Vec<Rat> {
            let mut t = Vec::with_capacity(max as usize + 1);
            t.push(Rat::one());
            for i in 1..=max {
                let prev = t[(i - 1) as usize].clone();
                t.push(prev * v);
            }
            t
        };
        let mx = self.degree_in(Var::X).unwrap_or(0);
        let my = self.degree_in(Var::Y).unwrap_or(0);
        let mz = self.degree_in(Var::Z).unwrap_or(0);
        let px = pow_table(x, mx);
        let py = pow_table(y, my);
        let pz = pow_table(z, mz);
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            acc += c * &px[m.dx as usize] * &py[m.dy as usize] * &pz[m.dz as usize];
        }
        acc
    }

    /// Evaluation over boxes, for sign exclusion tests.
    pub fn eval_interval(&self, x: &Interval, y: &Interval, z: &Interval) -> Interval {
        let pow_table = |v: &Interval, max: u32| -> Vec<Interval> {
            let mut t = Vec::with_capacity(max as usize + 1);
            t.push(Interval::point(Rat::one()));
            for i in 1..=max {
                let prev = t[(i - 1) as usize].clone();
                t.push(prev.mul(v));
            }
            t
        };
        let px = pow_table(x, self.degree_in(Var::X).unwrap_or(0));
        let py = pow_table(y, self.degree_in(Var::Y).unwrap_or(0));
        let pz = pow_table(z, self.degree_in(Var::Z).unwrap_or(0));
        let mut acc = Interval::point(Rat::zero());
        for (m, c) in &self.terms {
            let t = px[m.dx as usize]
                .mul(&py[m.dy as usize])
                .mul(&pz[m.dz as usize])
                .scale(c);
            acc = acc.add(&t);
        }
        acc
    }

    pub fn eval_sign(&self, x: &Rat, y: &Rat, z: &Rat) -> Sign {
        Sign::of(&self.eval(x, y, z))
    }

    /// Formal partial derivative.
    pub fn partial(&self, v: Var) -> MultiPoly {
        let mut r = MultiPoly::zero();
        for (m, c) in &self.terms {
            let e = m.get(v);
            if e == 0 {
                continue;
            }
            let mut m2 = *m;
            m2.set(v, e - 1);
            r.add_term(m2, c * rat(e as i64));
        }
        r
    }

    /// Sum of the terms of total degree exactly `d`.
    pub fn homogeneous_component(&self, d: u32) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.total() == d)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Exact division: `Some(h)` with `self = q * h` when `q` divides
    /// exactly.
    pub fn divide_exact(&self, q: &MultiPoly) -> Result<MultiPoly, PolyError> {
        if q.is_zero() {
            return Err(PolyError::ZeroDivisor);
        }
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero();
        let (qm, qc) = {
            let (m, c) = q.leading().unwrap();
            (*m, c.clone())
        };
        while !rem.is_zero() {
            let (rm, rc) = {
                let (m, c) = rem.leading().unwrap();
                (*m, c.clone())
            };
            if !qm.divides(&rm) {
                return Err(PolyError::NotDivisible);
            }
            let m = rm.div(&qm);
            let c = rc / &qc;
            let t = MultiPoly::monomial(m, c);
            rem = rem.sub(&t.mul(q));
            quot = quot.add(&t);
        }
        Ok(quot)
    }

    /// Substitute a polynomial for a variable.
    pub fn substitute(&self, v: Var, by: &MultiPoly) -> MultiPoly {
        let max = self.degree_in(v).unwrap_or(0);
        let mut powers = Vec::with_capacity(max as usize + 1);
        powers.push(MultiPoly::one());
        for i in 1..=max {
            let prev = powers[(i - 1) as usize].clone();
            powers.push(prev.mul(by));
        }
        let mut r = MultiPoly::zero();
        for (m, c) in &self.terms {
            let e = m.get(v);
            let mut m2 = *m;
            m2.set(v, 0);
            let base = MultiPoly::monomial(m2, c.clone());
            r = r.add(&base.mul(&powers[e as usize]));
        }
        r
    }

    /// Coefficients of `self` seen as a univariate polynomial in `v`, index
    /// k holding the coefficient of v^k.
    pub fn coeffs_in(&self, v: Var) -> Vec<MultiPoly> {
        let deg = self.degree_in(v).unwrap_or(0);
        let mut out = vec![MultiPoly::zero(); deg as usize + 1];
        for (m, c) in &self.terms {
            let e = m.get(v);
            let mut m2 = *m;
            m2.set(v, 0);
            out[e as usize].add_term(m2, c.clone());
        }
        out
    }

    pub fn from_coeffs_in(v: Var, coeffs: &[MultiPoly]) -> MultiPoly {
        let mut r = MultiPoly::zero();
        for (k, c) in coeffs.iter().enumerate() {
            for (m, co) in &c.terms {
                let mut m2 = *m;
                m2.set(v, m2.get(v) + k as u32);
                r.add_term(m2, co.clone());
            }
        }
        r
    }

    /// Write `self = content * primitive` where `primitive` has coprime
    /// integer coefficients and a positive leading (grevlex) coefficient.
    /// The zero polynomial yields `(0, 0)`.
    pub fn content_and_primitive(&self) -> (Rat, MultiPoly) {
        if self.is_zero() {
            return (Rat::zero(), MultiPoly::zero());
        }
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            let n = c.numer() * (&den_lcm / c.denom());
            num_gcd = num_gcd.gcd(&n);
        }
        let mut content = Rat::new(num_gcd, den_lcm);
        if Sign::of(self.leading().unwrap().1) == Sign::Neg {
            content = -content;
        }
        let prim = self.scale(&content.clone().recip());
        (content, prim)
    }

    /// Canonical normalization: primitive over Z with positive leading
    /// coefficient (the canonical associate in Q[x,y,z]).
    pub fn normalized(&self) -> MultiPoly {
        self.content_and_primitive().1
    }

    /// Canonical string; see module docs. A non-unit rational content is
    /// preserved as a `(p/q)*(...)` prefix.
    pub fn canonical_string(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let (content, prim) = self.content_and_primitive();
        let body = prim.primitive_string();
        if content.is_one() {
            body
        } else {
            format!("({})*({})", fmt_rat(&content), body)
        }
    }

    /// The canonical string of the primitive part alone (scale dropped).
    pub fn primitive_string(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let prim = self.normalized();
        let mut out = String::new();
        for (i, (m, c)) in prim.terms_desc().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.total() == 0 {
                factors.push(abs.numer().to_string());
            }
            for (v, e) in [(Var::X, m.dx), (Var::Y, m.dy), (Var::Z, m.dz)] {
                if e == 1 {
                    factors.push(v.name().into());
                } else if e > 1 {
                    factors.push(format!("{}^{}", v.name(), e));
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    /// Parse the canonical polynomial syntax (sums of `c*x^a*y^b*z^c` terms,
    /// with an optional `(p/q)*(...)` scale prefix).
    pub fn parse(input: &str) -> Result<MultiPoly, PolyError> {
        parse_poly(input)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_string())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({})", self.canonical_string())
    }
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

struct Parser<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser {
            chars: s.chars().peekable(),
        }
    }

    fn skip_ws(&mut self) {
        while matches!(self.chars.peek(), Some(c) if c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.next()
    }


    fn integer(&mut self) -> Result<BigInt, PolyError> {
        self.skip_ws();
        let mut s = String::new();
        while matches!(self.chars.peek(), Some(c) if c.is_ascii_digit()) {
            s.push(self.chars.next().unwrap());
        }
        s.parse()
            .map_err(|_| PolyError::Parse(format!("expected integer near `{s}`")))
    }

    fn rational(&mut self) -> Result<Rat, PolyError> {
        let n = self.integer()?;
        if self.peek() == Some('/') {
            self.bump();
            let d = self.integer()?;
            if d.is_zero() {
                return Err(PolyError::Parse("zero denominator".into()));
            }
            Ok(Rat::new(n, d))
        } else {
            Ok(Rat::from_integer(n))
        }
    }

    // factor := rational | var [^ exp]
    fn factor(&mut self) -> Result<MultiPoly, PolyError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(MultiPoly::constant(self.rational()?)),
            Some(c @ ('x' | 'y' | 'z')) => {
                self.bump();
                let v = match c {
                    'x' => Var::X,
                    'y' => Var::Y,
                    _ => Var::Z,
                };
                let mut e = 1u32;
                if self.peek() == Some('^') {
                    self.bump();
                    let n = self.integer()?;
                    e = u32::try_from(&n)
                        .map_err(|_| PolyError::Parse("exponent out of range".into()))?;
                }
                let mut m = Mono::default();
                m.set(v, e);
                Ok(MultiPoly::monomial(m, rat(1)))
            }
            got => Err(PolyError::Parse(format!("unexpected token {got:?}"))),
        }
    }

    // term := factor (* factor)*
    fn term(&mut self) -> Result<MultiPoly, PolyError> {
        let mut p = self.factor()?;
        while self.peek() == Some('*') {
            self.bump();
            p = p.mul(&self.factor()?);
        }
        Ok(p)
    }

    // sum := [sign] term ((+|-) term)*
    fn sum(&mut self) -> Result<MultiPoly, PolyError> {
        let mut negate = false;
        while matches!(self.peek(), Some('+') | Some('-')) {
            if self.bump() == Some('-') {
                negate = !negate;
            }
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(op @ ('+' | '-')) => {
                    self.bump();
                    let t = self.term()?;
                    acc = if op == '+' { acc.add(&t) } else { acc.sub(&t) };
                }
                _ => break,
            }
        }
        Ok(acc)
    }
}

fn parse_poly(input: &str) -> Result<MultiPoly, PolyError> {
    let trimmed = input.trim();
    // Optional scale prefix `(p/q)*(...)`.
    if let Some(rest) = trimmed.strip_prefix('(') {
        if let Some((scale_str, body)) = rest.split_once(")*(") {
            let body = body
                .strip_suffix(')')
                .ok_or_else(|| PolyError::Parse("unbalanced scale prefix".into()))?;
            let scale = crate::num::parse_rat(scale_str).map_err(PolyError::Parse)?;
            let p = parse_poly(body)?;
            return Ok(p.scale(&scale));
        }
    }
    let mut parser = Parser::new(trimmed);
    let p = parser.sum()?;
    parser.skip_ws();
    if parser.chars.peek().is_some() {
        return Err(PolyError::Parse(format!(
            "trailing input: `{}`",
            parser.chars.collect::<String>()
        )));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::ratio;

    fn p(s: &str) -> MultiPoly {
        MultiPoly::parse(s).unwrap()
    }

    #[test]
    fn grevlex_order_matches_convention() {
        let q = p("x^2 + x*y + y^2 + z + 1");
        let order: Vec<String> = q
            .terms_desc()
            .map(|(m, _)| format!("{},{},{}", m.dx, m.dy, m.dz))
            .collect();
        assert_eq!(order, ["2,0,0", "1,1,0", "0,2,0", "0,0,1", "0,0,0"]);
    }

    #[test]
    fn additive_inverse_and_difference_of_squares() {
        let x = MultiPoly::var(Var::X);
        assert!(x.add(&x.neg()).is_zero());
        let prod = p("x + y").mul(&p("x - y"));
        assert_eq!(prod, p("x^2 - y^2"));
    }

    #[test]
    fn sphere_resultant_square() {
        // the Example 6.1 resultant is the square of 196x^2 + 196y^2 - 6561
        let f = p("196*x^2 + 196*y^2 - 6561");
        let sq = f.mul(&f);
        assert_eq!(
            sq.canonical_string(),
            "38416*x^4 + 76832*x^2*y^2 + 38416*y^4 - 2571912*x^2 - 2571912*y^2 + 43046721"
        );
    }

    #[test]
    fn eval_pythagorean_point_and_homomorphism() {
        let q = p("x^2 + y^2 - 25");
        assert_eq!(q.eval(&rat(3), &rat(4), &rat(0)), rat(0));
        let f = p("x^2 - y*z + 3");
        let g = p("2*x*y + z - 1");
        let (a, b, c) = (ratio(3, 2), ratio(-1, 3), rat(2));
        assert_eq!(
            f.mul(&g).eval(&a, &b, &c),
            f.eval(&a, &b, &c) * g.eval(&a, &b, &c)
        );
    }

    #[test]
    fn partial_derivatives() {
        assert_eq!(p("x^2*y").partial(Var::X), p("2*x*y"));
        assert_eq!(p("x^2*y").partial(Var::Z), MultiPoly::zero());
    }

    #[test]
    fn homogeneous_components() {
        let q = p("x^2 + x + 1");
        assert_eq!(q.homogeneous_component(1), p("x"));
        assert_eq!(q.homogeneous_component(0), p("1"));
        assert_eq!(q.homogeneous_component(5), MultiPoly::zero());
    }

    #[test]
    fn exact_division() {
        let h = p("x^2 - y^2").divide_exact(&p("x + y")).unwrap();
        assert_eq!(h, p("x - y"));
        assert_eq!(
            p("x^2 + 1").divide_exact(&p("x")),
            Err(PolyError::NotDivisible)
        );
        assert_eq!(
            p("x").divide_exact(&MultiPoly::zero()),
            Err(PolyError::ZeroDivisor)
        );
    }

    #[test]
    fn canonical_string_round_trip() {
        let cases = [
            "196*x^2 + 196*y^2 - 6561",
            "x^4 - 2*x^2*y^2 + y^4 - 7",
            "(3/4)*(2*x - 5)",
            "-x + 1",
            "0",
            "42",
        ];
        for c in cases {
            let q = p(c);
            assert_eq!(MultiPoly::parse(&q.canonical_string()).unwrap(), q, "{c}");
        }
    }

    #[test]
    fn content_extraction() {
        let q = p("4*x^2 - 6*y");
        let (content, prim) = q.content_and_primitive();
        assert_eq!(content, rat(2));
        assert_eq!(prim, p("2*x^2 - 3*y"));
        let q = p("-3*x - 9").scale(&ratio(1, 7));
        let (content, prim) = q.content_and_primitive();
        assert_eq!(content, ratio(-3, 7));
        assert_eq!(prim, p("x + 3"));
    }

    #[test]
    fn substitution() {
        let t = p("z^2 + x");
        let s = t.substitute(Var::Z, &p("x + y"));
        assert_eq!(s, p("x^2 + 2*x*y + y^2 + x"));
    }
}
