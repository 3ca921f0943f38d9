//! Dense univariate polynomials over Q: the substrate for real-root
//! isolation, Sturm counting and algebraic-number arithmetic.

use crate::num::{rat, Interval, Rat, Sign};
use crate::poly::{MultiPoly, Var};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// coeffs[i] is the coefficient of t^i; no trailing zeros; zero poly = [].
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UniPoly {
    pub coeffs: Vec<Rat>,
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "UniPoly{:?}",
            self.coeffs.iter().map(crate::num::fmt_rat).collect::<Vec<_>>()
        )
    }
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> UniPoly {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> UniPoly {
        UniPoly::default()
    }

    pub fn constant(c: Rat) -> UniPoly {
        UniPoly::new(vec![c])
    }

    pub fn from_int_coeffs(cs: &[i64]) -> UniPoly {
        UniPoly::new(cs.iter().map(|&c| rat(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero polynomial yields None.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn lc(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn eval(&self, t: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn eval_interval(&self, iv: &Interval) -> Interval {
        let mut acc = Interval::point(Rat::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(iv).add(&Interval::point(c.clone()));
        }
        acc
    }

    pub fn sign_at(&self, t: &Rat) -> Sign {
        Sign::of(&self.eval(t))
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        )
    }

    pub fn add(&self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut cs = vec![Rat::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            cs[i] += c;
        }
        for (i, c) in o.coeffs.iter().enumerate() {
            cs[i] += c;
        }
        UniPoly::new(cs)
    }

    pub fn sub(&self, o: &UniPoly) -> UniPoly {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut cs = vec![Rat::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                cs[i + j] += a * b;
            }
        }
        UniPoly::new(cs)
    }

    pub fn scale(&self, k: &Rat) -> UniPoly {
        if k.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Euclidean division: (quotient, remainder).
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.degree().unwrap();
        let lc = d.lc().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        loop {
            while rem.last().map(|c| c.is_zero()).unwrap_or(false) {
                rem.pop();
            }
            if rem.len() <= dd {
                break;
            }
            let k = rem.len() - 1 - dd;
            let factor = rem.last().unwrap() / &lc;
            for (i, dc) in d.coeffs.iter().enumerate() {
                let v = dc * &factor;
                rem[k + i] -= v;
            }
            quot[k] = factor;
        }
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    pub fn rem(&self, d: &UniPoly) -> UniPoly {
        self.div_rem(d).1
    }

    /// Pseudo-remainder `lc(d)^(deg self - deg d + 1) * self mod d`, all in
    /// integer arithmetic when the inputs are integer polynomials.
    pub fn pseudo_rem(&self, d: &UniPoly) -> UniPoly {
        let dd = d.degree().expect("nonzero divisor");
        let lc = d.lc().unwrap().clone();
        let full = self.coeffs.len().saturating_sub(dd) as u32;
        let mut applied = 0u32;
        let mut rem = self.coeffs.clone();
        loop {
            while rem.last().map(|c| c.is_zero()).unwrap_or(false) {
                rem.pop();
            }
            if rem.len() <= dd {
                break;
            }
            let k = rem.len() - 1 - dd;
            let lead = rem.last().unwrap().clone();
            for c in rem.iter_mut() {
                *c *= &lc;
            }
            applied += 1;
            for (i, dc) in d.coeffs.iter().enumerate() {
                let v = dc * &lead;
                rem[k + i] -= v;
            }
        }
        let mut r = UniPoly::new(rem);
        while applied < full {
            r = r.scale(&lc);
            applied += 1;
        }
        r
    }

    /// Gcd as a primitive integer polynomial with positive leading
    /// coefficient, via the subresultant pseudo-remainder sequence (plain
    /// rational Euclid explodes on the high-degree eliminants met here).
    /// A modular coprimality certificate screens the common trivial case.
    pub fn gcd(&self, o: &UniPoly) -> UniPoly {
        if self.is_zero() {
            return o.normalized();
        }
        if o.is_zero() {
            return self.normalized();
        }
        let mut f = self.normalized();
        let mut g = o.normalized();
        if f.degree() < g.degree() {
            std::mem::swap(&mut f, &mut g);
        }
        if g.degree() == Some(0) {
            return UniPoly::constant(Rat::one());
        }
        if coprime_mod_prime(&f, &g) {
            return UniPoly::constant(Rat::one());
        }
        let mut lead = BigInt::one();
        let mut h = BigInt::one();
        loop {
            let delta = (f.degree().unwrap() - g.degree().unwrap()) as u32;
            let r = f.pseudo_rem(&g);
            if r.is_zero() {
                break;
            }
            let mut divisor = lead.clone();
            for _ in 0..delta {
                divisor *= &h;
            }
            let r = r.div_exact_int(&divisor);
            f = g;
            g = r;
            if g.degree().unwrap_or(0) == 0 {
                return UniPoly::constant(Rat::one());
            }
            lead = f.lc().unwrap().numer().clone();
            if delta > 0 {
                // h := lead^delta / h^(delta-1)
                let mut num = BigInt::one();
                for _ in 0..delta {
                    num *= &lead;
                }
                for _ in 0..delta.saturating_sub(1) {
                    num /= &h;
                }
                h = num;
            }
        }
        g.normalized()
    }

    /// A single nonzero scalar multiple of `self mod a`, computed entirely
    /// in integer arithmetic via a table of scaled reduced powers (every
    /// power row carries the same lc(a) power, so the sum is one scalar
    /// times the true remainder). Zero tests and root membership against
    /// `a`'s roots are unaffected by the scalar.
    pub fn reduce_scalar_mod(&self, a: &UniPoly) -> UniPoly {
        let d = a.degree().expect("nonzero modulus");
        let n = match self.degree() {
            Some(n) if n >= d => n,
            _ => return self.clone(),
        };
        let a = a.normalized();
        let lc = a.lc().unwrap().clone();
        // T_j = lc^(j-d+1) (x^j mod a), j = d..n
        let mut ts: Vec<UniPoly> = Vec::with_capacity(n - d + 1);
        ts.push(UniPoly::new(a.coeffs[..d].to_vec()).neg());
        for _ in (d + 1)..=n {
            let t = ts.last().unwrap();
            let mut shifted = vec![Rat::zero()];
            shifted.extend(t.coeffs.iter().cloned());
            let u = UniPoly::new(shifted);
            let u_top = if u.coeffs.len() > d {
                u.coeffs[d].clone()
            } else {
                Rat::zero()
            };
            let low = UniPoly::new(u.coeffs[..u.coeffs.len().min(d)].to_vec());
            ts.push(low.scale(&lc).add(&ts[0].scale(&u_top)));
        }
        // uniform scalar lc^(n-d+1)
        let kmax = n - d + 1;
        let mut acc = UniPoly::new(self.coeffs[..d].to_vec());
        let mut full = Rat::one();
        for _ in 0..kmax {
            full *= &lc;
        }
        acc = acc.scale(&full);
        for j in d..=n {
            let c = &self.coeffs[j];
            if c.is_zero() {
                continue;
            }
            // T_j carries lc^(j-d+1); top up to lc^kmax
            let mut s = c.clone();
            for _ in 0..(kmax - (j - d + 1)) {
                s *= &lc;
            }
            acc = acc.add(&ts[j - d].scale(&s));
        }
        acc.primitive_keep_sign()
    }

    /// Exact remainder modulo `a` in rational arithmetic (small degrees).
    pub fn rem_exact(&self, a: &UniPoly) -> UniPoly {
        self.rem(a)
    }

    /// Divide every (integer) coefficient by the integer `d` exactly.
    fn div_exact_int(&self, d: &BigInt) -> UniPoly {
        UniPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| {
                    debug_assert!(c.is_integer());
                    Rat::from_integer(c.numer() / d)
                })
                .collect(),
        }
    }

    pub fn squarefree(&self) -> UniPoly {
        if self.is_zero() || self.degree() == Some(0) {
            return self.clone();
        }
        let p = self.normalized();
        let g = p.gcd(&p.derivative());
        if g.degree() == Some(0) {
            return self.clone();
        }
        // integer pseudo-division quotient is an associate of the exact
        // quotient; primitives keep coefficients small
        p.pseudo_div_quotient(&g).normalized()
    }

    /// Quotient of the pseudo-division lc(d)^k * self = q * d + r; when d
    /// divides self exactly the result is an associate of self / d.
    pub fn pseudo_div_quotient(&self, d: &UniPoly) -> UniPoly {
        let dd = d.degree().expect("nonzero divisor");
        let lc = d.lc().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let qlen = self.coeffs.len().saturating_sub(dd);
        let mut quot = vec![Rat::zero(); qlen];
        let mut steps = 0u32;
        loop {
            while rem.last().map(|c| c.is_zero()).unwrap_or(false) {
                rem.pop();
            }
            if rem.len() <= dd {
                break;
            }
            let k = rem.len() - 1 - dd;
            let lead = rem.last().unwrap().clone();
            for c in rem.iter_mut() {
                *c *= &lc;
            }
            for q in quot.iter_mut() {
                *q *= &lc;
            }
            steps += 1;
            quot[k] += &lead;
            for (i, dc) in d.coeffs.iter().enumerate() {
                let v = dc * &lead;
                rem[k + i] -= v;
            }
        }
        let _ = steps;
        UniPoly::new(quot)
    }

    /// Primitive integer form with positive leading coefficient.
    pub fn normalized(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut p = self.primitive_keep_sign();
        if p.lc().unwrap().is_negative() {
            p = p.neg();
        }
        p
    }

    /// Primitive integer form scaled by a positive rational only (the sign
    /// pattern of the coefficients is preserved).
    pub fn primitive_keep_sign(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let mut num = BigInt::zero();
        for c in &self.coeffs {
            num = num.gcd(&(c.numer() * (&den / c.denom())));
        }
        self.scale(&Rat::new(den, num))
    }

    /// Root bound: all real roots lie in (-B, B). Minimum of the Cauchy
    /// bound and a Fujiwara-style bound (much tighter for polynomials with
    /// a few enormous low-order coefficients, as resultants tend to be).
    pub fn root_bound(&self) -> Rat {
        if self.coeffs.len() <= 1 {
            return rat(1);
        }
        let lc = self.lc().unwrap();
        let n = self.coeffs.len() - 1;
        let mut cauchy = Rat::zero();
        let mut fujiwara = Rat::zero();
        for (idx, c) in self.coeffs[..n].iter().enumerate() {
            let v = (c / lc).abs();
            if v > cauchy {
                cauchy = v.clone();
            }
            let k = (n - idx) as u32;
            // integer upper bound for v^(1/k)
            let ceil_v = v.ceil().numer().clone();
            let root = ceil_v.nth_root(k) + 1;
            let b = Rat::from_integer(root);
            if b > fujiwara {
                fujiwara = b;
            }
        }
        let cauchy = cauchy + rat(1);
        let fujiwara = fujiwara * rat(2);
        if fujiwara < cauchy {
            fujiwara
        } else {
            cauchy
        }
    }

    /// Composition p(a + (b - a) t): maps (0,1) onto (a,b).
    pub fn affine_map_01(&self, a: &Rat, b: &Rat) -> UniPoly {
        let scale = b - a;
        let shifted = self.taylor_shift(a);
        let mut cs = shifted.coeffs;
        let mut pw = Rat::one();
        for c in cs.iter_mut() {
            *c *= &pw;
            pw *= &scale;
        }
        UniPoly::new(cs)
    }

    /// p(t + s): Taylor shift by s.
    pub fn taylor_shift(&self, s: &Rat) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let n = self.coeffs.len();
        // Synthetic Horner: out = (((c_n)(t+s) + c_{n-1})(t+s) + ...)
        let mut out: Vec<Rat> = Vec::with_capacity(n);
        for c in self.coeffs.iter().rev() {
            // out = out * (t + s) + c
            let mut next = vec![Rat::zero(); out.len() + 1];
            for (i, o) in out.iter().enumerate() {
                next[i + 1] += o; // * t
                next[i] += &(o * s); // * s
            }
            next[0] += c;
            if next.len() > n {
                next.truncate(n);
            }
            out = next;
        }
        UniPoly::new(out)
    }

    /// Number of sign variations in the coefficient sequence.
    pub fn sign_variations(&self) -> usize {
        let mut var = 0;
        let mut last: Option<Sign> = None;
        for c in &self.coeffs {
            let s = Sign::of(c);
            if s == Sign::Zero {
                continue;
            }
            if let Some(prev) = last {
                if prev != s {
                    var += 1;
                }
            }
            last = Some(s);
        }
        var
    }

    /// Descartes bound for the number of roots in the open interval (a, b).
    pub fn descartes_bound_on(&self, a: &Rat, b: &Rat) -> usize {
        let q = self.affine_map_01(a, b);
        // variations of (1+t)^n q(1/(1+t)): reverse, then shift by 1
        let rev = UniPoly::new(q.coeffs.iter().rev().cloned().collect());
        rev.taylor_shift(&rat(1)).sign_variations()
    }

    /// Sturm chain (signed remainder sequence). Remainders are computed as
    /// integer pseudo-remainders with a positive multiplier and stripped to
    /// primitive form: positive scaling preserves the sign-variation
    /// counts while keeping coefficients bounded.
    pub fn sturm_chain(&self) -> Vec<UniPoly> {
        let mut chain = vec![
            self.primitive_keep_sign(),
            self.derivative().primitive_keep_sign(),
        ];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            if chain[n - 1].degree() == Some(0) {
                break;
            }
            let f = &chain[n - 2];
            let g = &chain[n - 1];
            // an even power of lc(g) keeps the pseudo-remainder multiplier
            // positive; odd powers get one more factor of lc
            let delta = f.coeffs.len().saturating_sub(g.coeffs.len() - 1) as u32;
            let mut r = f.pseudo_rem(g);
            if delta % 2 == 1 {
                r = r.scale(g.lc().unwrap());
            }
            if r.is_zero() {
                break;
            }
            chain.push(r.neg().primitive_keep_sign());
        }
        chain
    }

    /// Exact number of distinct real roots in (a, b], via Sturm on the
    /// squarefree part.
    pub fn count_roots_sturm(&self, a: &Rat, b: &Rat) -> usize {
        SturmChain::new(&self.squarefree()).count(a, b)
    }

    /// Total number of distinct real roots.
    pub fn count_real_roots(&self) -> usize {
        if self.degree().unwrap_or(0) == 0 {
            return 0;
        }
        let b = self.root_bound();
        self.count_roots_sturm(&-b.clone(), &b)
    }

    /// Rational roots, found by divisor enumeration on the primitive integer
    /// form with a modular pre-filter. Gives up quietly on huge divisor
    /// sets; callers treat undetected rational roots as algebraic, which
    /// stays correct.
    pub fn rational_roots(&self) -> Vec<Rat> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let mut p = self.normalized();
        if p.coeffs[0].is_zero() {
            out.push(Rat::zero());
            while p.coeffs[0].is_zero() {
                p = UniPoly::new(p.coeffs[1..].to_vec());
            }
        }
        if p.degree().unwrap_or(0) == 0 {
            out.sort();
            return out;
        }
        let a0: BigInt = p.coeffs[0].numer().abs();
        let an: BigInt = p.lc().unwrap().numer().abs();
        let d0 = bounded_divisors(&a0);
        let dn = bounded_divisors(&an);
        // cheap filter: evaluate modulo a large prime first
        const P: i64 = 2_147_483_647; // 2^31 - 1
        let pm = BigInt::from(P);
        let coeffs_mod: Vec<i64> = p
            .coeffs
            .iter()
            .map(|c| {
                let m = c.numer() % &pm;
                i64::try_from(&((m + &pm) % &pm)).unwrap()
            })
            .collect();
        let horner_mod = |r: i64| -> i64 {
            let mut acc: i64 = 0;
            for c in coeffs_mod.iter().rev() {
                acc = ((acc as i128 * r as i128 + *c as i128) % P as i128) as i64;
            }
            acc
        };
        for u in &d0 {
            for v in &dn {
                if u.gcd(v) != BigInt::one() {
                    continue;
                }
                for neg in [false, true] {
                    // candidate (±u)/v mod P
                    let um = i64::try_from(&(u % &pm)).unwrap();
                    let vm = i64::try_from(&(v % &pm)).unwrap();
                    if vm == 0 {
                        continue; // v divisible by P: fall through to exact
                    }
                    let vinv = mod_inverse(vm, P);
                    let mut rm = ((um as i128 * vinv as i128) % P as i128) as i64;
                    if neg {
                        rm = (P - rm) % P;
                    }
                    if horner_mod(rm) != 0 {
                        continue;
                    }
                    let cand = Rat::new(
                        if neg { -u.clone() } else { u.clone() },
                        v.clone(),
                    );
                    if p.eval(&cand).is_zero() && !out.contains(&cand) {
                        out.push(cand);
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// Deflate by a known root: self / (t - r).
    pub fn deflate(&self, r: &Rat) -> UniPoly {
        let d = UniPoly::new(vec![-r.clone(), Rat::one()]);
        let (q, rem) = self.div_rem(&d);
        debug_assert!(rem.is_zero(), "deflation root must be exact");
        q
    }

    /// Convert a univariate MultiPoly in `v`; other variables must be absent.
    pub fn from_multi(p: &MultiPoly, v: Var) -> UniPoly {
        for other in crate::poly::VARS {
            if other != v {
                assert!(
                    !p.depends_on(other),
                    "polynomial is not univariate in {}",
                    v.name()
                );
            }
        }
        let cs = p
            .coeffs_in(v)
            .into_iter()
            .map(|c| c.as_constant().expect("constant coefficient"))
            .collect();
        UniPoly::new(cs)
    }

    pub fn to_multi(&self, v: Var) -> MultiPoly {
        let coeffs: Vec<MultiPoly> = self
            .coeffs
            .iter()
            .map(|c| MultiPoly::constant(c.clone()))
            .collect();
        MultiPoly::from_coeffs_in(v, &coeffs)
    }
}

/// Precomputed Sturm chain for repeated interval counts over one
/// squarefree polynomial.
pub struct SturmChain {
    chain: Vec<UniPoly>,
}

impl SturmChain {
    pub fn new(squarefree: &UniPoly) -> SturmChain {
        SturmChain {
            chain: squarefree.sturm_chain(),
        }
    }

    fn variations_at(&self, t: &Rat) -> usize {
        let mut var = 0;
        let mut last: Option<Sign> = None;
        for q in &self.chain {
            let s = q.sign_at(t);
            if s == Sign::Zero {
                continue;
            }
            if let Some(prev) = last {
                if prev != s {
                    var += 1;
                }
            }
            last = Some(s);
        }
        var
    }

    /// Distinct real roots in (a, b]; requires the polynomial nonzero at a.
    pub fn count(&self, a: &Rat, b: &Rat) -> usize {
        self.variations_at(a) - self.variations_at(b)
    }
}

/// One-sided certificate: `true` proves gcd(f, g) is constant over Q.
/// Works modulo the Mersenne prime 2^61 - 1: the gcd degree can only grow
/// under reduction when the prime avoids both leading coefficients, so a
/// constant modular gcd is conclusive. `false` is merely inconclusive.
fn coprime_mod_prime(f: &UniPoly, g: &UniPoly) -> bool {
    const P: u64 = (1 << 61) - 1;
    let pm = BigInt::from(P);
    let reduce = |q: &UniPoly| -> Option<Vec<u64>> {
        let cs: Vec<u64> = q
            .coeffs
            .iter()
            .map(|c| {
                let m = c.numer() % &pm;
                u64::try_from(&((m + &pm) % &pm)).unwrap()
            })
            .collect();
        if *cs.last().unwrap() == 0 {
            None // leading coefficient vanished: inconclusive
        } else {
            Some(cs)
        }
    };
    let (Some(mut a), Some(mut b)) = (reduce(f), reduce(g)) else {
        return false;
    };
    let mulmod = |x: u64, y: u64| -> u64 { ((x as u128 * y as u128) % P as u128) as u64 };
    let powmod = |mut x: u64, mut e: u64| -> u64 {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, x);
            }
            x = mulmod(x, x);
            e >>= 1;
        }
        acc
    };
    // Euclid over GF(P)
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        // r = a mod b
        let lb = *b.last().unwrap();
        let inv = powmod(lb, P - 2);
        let mut r = a;
        while r.len() >= b.len() {
            let la = *r.last().unwrap();
            if la != 0 {
                let factor = mulmod(la, inv);
                let k = r.len() - b.len();
                for (i, bc) in b.iter().enumerate() {
                    let sub = mulmod(factor, *bc);
                    r[k + i] = (r[k + i] + P - sub) % P;
                }
            }
            r.pop();
            while r.last() == Some(&0) {
                r.pop();
            }
        }
        a = b;
        b = r;
        if b.is_empty() {
            // gcd mod P is a; conclusive only when constant
            return a.len() == 1;
        }
        if b.len() == 1 {
            return true;
        }
    }
}

fn mod_inverse(a: i64, p: i64) -> i64 {
    // p prime, a != 0 mod p: extended Euclid
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (p, a.rem_euclid(p));
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    t.rem_euclid(p)
}

/// Divisors of |n|, capped; incompleteness only weakens rational-root
/// detection, never correctness.
fn bounded_divisors(n: &BigInt) -> Vec<BigInt> {
    const TRIAL_LIMIT: u64 = 100_000;
    const MAX_DIVISORS: usize = 512;
    let mut n = n.abs();
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut d = BigInt::from(2u32);
    let limit = BigInt::from(TRIAL_LIMIT);
    while &d * &d <= n && d < limit {
        let mut e = 0;
        while (&n % &d).is_zero() {
            n /= &d;
            e += 1;
        }
        if e > 0 {
            factors.push((d.clone(), e));
        }
        d += 1;
    }
    if n > BigInt::one() {
        factors.push((n.clone(), 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in factors {
        let base = divs.clone();
        let mut pk = BigInt::one();
        for _ in 0..e {
            pk = &pk * &p;
            for b in &base {
                if divs.len() >= MAX_DIVISORS {
                    return divs;
                }
                divs.push(b * &pk);
            }
        }
    }
    divs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::ratio;

    #[test]
    fn eval_and_division() {
        let p = UniPoly::from_int_coeffs(&[-2, 0, 1]); // t^2 - 2
        assert_eq!(p.eval(&rat(2)), rat(2));
        let d = UniPoly::from_int_coeffs(&[1, 1]);
        let (q, r) = p.div_rem(&d);
        assert_eq!(q, UniPoly::from_int_coeffs(&[-1, 1]));
        assert_eq!(r, UniPoly::from_int_coeffs(&[-1]));
    }

    #[test]
    fn taylor_shift_matches_eval() {
        let p = UniPoly::from_int_coeffs(&[3, -1, 0, 2]);
        let s = ratio(5, 3);
        let q = p.taylor_shift(&s);
        for t in [rat(0), rat(1), ratio(-7, 2)] {
            assert_eq!(q.eval(&t), p.eval(&(&t + &s)));
        }
    }

    #[test]
    fn affine_map_matches_eval() {
        let p = UniPoly::from_int_coeffs(&[1, -4, 0, 1]);
        let (a, b) = (ratio(-3, 2), ratio(7, 4));
        let q = p.affine_map_01(&a, &b);
        for t in [rat(0), ratio(1, 3), rat(1)] {
            let mapped = &a + &(&b - &a) * &t;
            assert_eq!(q.eval(&t), p.eval(&mapped));
        }
    }

    #[test]
    fn sturm_counts_roots() {
        let p = UniPoly::from_int_coeffs(&[-2, 0, 1]).mul(&UniPoly::from_int_coeffs(&[-5, 1]));
        assert_eq!(p.count_real_roots(), 3);
        assert_eq!(p.count_roots_sturm(&rat(0), &rat(2)), 1);
        assert_eq!(p.count_roots_sturm(&rat(0), &rat(6)), 2);
        assert_eq!(UniPoly::from_int_coeffs(&[1, 0, 1]).count_real_roots(), 0);
    }

    #[test]
    fn descartes_bound_is_exact_for_separated_roots() {
        let p = UniPoly::from_int_coeffs(&[-2, 0, 1]);
        assert_eq!(p.descartes_bound_on(&rat(1), &rat(2)), 1);
        assert_eq!(p.descartes_bound_on(&rat(2), &rat(3)), 0);
    }

    #[test]
    fn rational_root_detection() {
        let q = UniPoly::from_int_coeffs(&[-26, 5]); // root 26/5
        let r = UniPoly::from_int_coeffs(&[-3, 1]); // root 3
        let prod = q.mul(&r).mul(&UniPoly::from_int_coeffs(&[1, 0, 1]));
        let roots = prod.rational_roots();
        assert_eq!(roots, vec![rat(3), ratio(26, 5)]);
    }

    #[test]
    fn squarefree_strips_multiplicity() {
        let p = UniPoly::from_int_coeffs(&[1, 2, 1]); // (t+1)^2
        assert_eq!(p.squarefree().degree(), Some(1));
    }
}
