//! Certified solving of bivariate polynomial systems and exact sign
//! determination at algebraic points of the plane.
//!
//! A point is a pair of isolated real algebraic coordinates together with
//! the system that defines it. Nonzero signs are decided by interval
//! refinement; exact zeros are certified symbolically, by computing the
//! fiber gcd of the defining polynomials over Q(alpha) with dynamic
//! splitting of the (squarefree, possibly reducible) defining polynomial —
//! interval refinement alone never certifies a zero.

use crate::gcd::gcd_poly;
use crate::matrix::PolyMatrix;
use crate::num::{rat, Rat, Sign};
use crate::poly::{MultiPoly, Var};
use crate::roots1d::{compare_roots, isolate_roots, roots_equal, sign_at_root, IsolatingInterval};
use crate::unipoly::UniPoly;
use std::cmp::Ordering;
use std::fmt;

/// A certified common real zero of a bivariate system.
#[derive(Clone, Debug)]
pub struct AlgebraicPoint2D {
    pub x: IsolatingInterval,
    pub y: IsolatingInterval,
    pub system: (MultiPoly, MultiPoly),
}

impl AlgebraicPoint2D {
    pub fn from_coords(
        x: IsolatingInterval,
        y: IsolatingInterval,
        system: (MultiPoly, MultiPoly),
    ) -> AlgebraicPoint2D {
        AlgebraicPoint2D { x, y, system }
    }

    pub fn from_rational(x: Rat, y: Rat, system: (MultiPoly, MultiPoly)) -> AlgebraicPoint2D {
        let px = UniPoly::new(vec![-x.clone(), Rat::one()]);
        let py = UniPoly::new(vec![-y.clone(), Rat::one()]);
        AlgebraicPoint2D {
            x: IsolatingInterval::exact(px, x),
            y: IsolatingInterval::exact(py, y),
            system,
        }
    }

    pub fn exact_xy(&self) -> Option<(Rat, Rat)> {
        match (&self.x.exact, &self.y.exact) {
            (Some(a), Some(b)) => Some((a.clone(), b.clone())),
            _ => None,
        }
    }

    /// Refine both coordinate boxes below `w` (returns a refined copy).
    pub fn refined_to_width(&self, w: &Rat) -> AlgebraicPoint2D {
        let mut c = self.clone();
        c.x.refine_to_width(w);
        c.y.refine_to_width(w);
        c
    }

    pub fn same_point(&self, o: &AlgebraicPoint2D) -> bool {
        roots_equal(&self.x, &o.x) && roots_equal(&self.y, &o.y)
    }

    pub fn cmp_position(&self, o: &AlgebraicPoint2D) -> Ordering {
        compare_roots(&self.x, &o.x).then_with(|| compare_roots(&self.y, &o.y))
    }
}

impl fmt::Display for AlgebraicPoint2D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.refined_to_width(&crate::num::ratio(1, 1000));
        let fmt_c = |c: &IsolatingInterval| -> String {
            match &c.exact {
                Some(v) => crate::num::fmt_rat(v),
                None => {
                    let mid = c.midpoint();
                    format!("~{:.4}", rat_to_f64(&mid))
                }
            }
        };
        write!(f, "({}, {})", fmt_c(&p.x), fmt_c(&p.y))
    }
}

pub fn rat_to_f64(v: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    v.to_f64().unwrap_or(f64::NAN)
}

use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq)]
pub enum SolveError {
    /// The two curves share a component (the gcd); the caller handles it.
    PositiveDimensional(MultiPoly),
}

impl fmt::Display for SolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveError::PositiveDimensional(g) => {
                write!(f, "system has the shared component {}", g.canonical_string())
            }
        }
    }
}

impl std::error::Error for SolveError {}

/// Resultant of `f` and `g` eliminating `v`, by the Sylvester determinant.
/// Degenerate degrees follow the usual conventions.
pub fn resultant(f: &MultiPoly, g: &MultiPoly, v: Var) -> MultiPoly {
    let m = f.degree_in(v).unwrap_or(0) as usize;
    let n = g.degree_in(v).unwrap_or(0) as usize;
    if m == 0 {
        return f.pow(n as u32);
    }
    if n == 0 {
        return g.pow(m as u32);
    }
    let fc = f.coeffs_in(v); // ascending
    let gc = g.coeffs_in(v);
    let size = m + n;
    let syl = PolyMatrix::from_fn(size, size, |i, j| {
        if i < n {
            // row of f coefficients, descending, shifted right by i
            let k = (m as isize) - (j as isize - i as isize);
            if (0..=m as isize).contains(&k) {
                fc[k as usize].clone()
            } else {
                MultiPoly::zero()
            }
        } else {
            let i2 = i - n;
            let k = (n as isize) - (j as isize - i2 as isize);
            if (0..=n as isize).contains(&k) {
                gc[k as usize].clone()
            } else {
                MultiPoly::zero()
            }
        }
    });
    syl.det().expect("square Sylvester matrix")
}

// ---------------------------------------------------------------------------
// Dynamic evaluation over Q(alpha)
// ---------------------------------------------------------------------------

/// Working model of Q(alpha): alpha is the unique root of the squarefree
/// `a` in (lo, hi). `a` may be reducible; zero tests split it on demand and
/// keep the factor that carries alpha.
///
/// Elements are integer polynomials of degree < deg a. Reduction of higher
/// degrees goes through a precomputed table of scaled powers, so that every
/// reduction of a product applies the *same* integer scalar lc(a)^(d+1) —
/// subtraction of reduced products then cancels exactly, while all
/// arithmetic stays over the integers.
struct Fiber {
    a: UniPoly,
    lo: Rat,
    hi: Rat,
    /// rows[j] = lc(a)^(d+1) * (x^(d+j) mod a) for j = 0..d, as integer
    /// polynomials of degree < d
    rows: Vec<UniPoly>,
    /// lc(a)^(d+1)
    uniform_scale: Rat,
}

impl Fiber {
    fn from_root(r: &IsolatingInterval) -> Fiber {
        debug_assert!(r.exact.is_none());
        let mut f = Fiber {
            a: r.poly.normalized(),
            lo: r.lo.clone(),
            hi: r.hi.clone(),
            rows: Vec::new(),
            uniform_scale: Rat::one(),
        };
        f.rebuild_rows();
        f
    }

    fn rebuild_rows(&mut self) {
        let d = self.a.degree().expect("nonzero modulus");
        let lc = self.a.lc().unwrap().clone();
        // T_j = lc^(j-d+1) * (x^j mod a), starting from
        // T_d = lc * x^d - a = -(low part of a)
        let mut t = UniPoly::new(self.a.coeffs[..d].to_vec()).neg();
        let mut ts: Vec<UniPoly> = vec![t.clone()];
        for _ in 1..=d {
            // T_{j+1} = lc * (x*T_j - u_d x^d) + u_d T_d
            let mut shifted = vec![Rat::zero()];
            shifted.extend(t.coeffs.iter().cloned());
            let u = UniPoly::new(shifted);
            let u_top = if u.coeffs.len() > d {
                u.coeffs[d].clone()
            } else {
                Rat::zero()
            };
            let low = UniPoly::new(u.coeffs[..u.coeffs.len().min(d)].to_vec());
            t = low.scale(&lc).add(&ts[0].scale(&u_top));
            ts.push(t.clone());
        }
        // scale row j (for x^(d+j)) by lc^(d - j) so that every row carries
        // lc^(d+1)
        let mut rows = Vec::with_capacity(d + 1);
        for (j, tj) in ts.iter().enumerate() {
            let mut s = Rat::one();
            for _ in 0..(d - j) {
                s *= &lc;
            }
            rows.push(tj.scale(&s));
        }
        let mut us = Rat::one();
        for _ in 0..=d {
            us *= &lc;
        }
        self.rows = rows;
        self.uniform_scale = us;
    }

    fn as_root(&self) -> IsolatingInterval {
        IsolatingInterval {
            poly: self.a.clone(),
            lo: self.lo.clone(),
            hi: self.hi.clone(),
            exact: None,
        }
    }

    /// Uniform reduction: lc(a)^(d+1) * (q mod a) for deg q <= 2d; all
    /// integer arithmetic, same scalar for every input.
    fn reduce(&self, q: &UniPoly) -> UniPoly {
        let d = self.a.degree().unwrap();
        debug_assert!(q.degree().unwrap_or(0) <= 2 * d, "product too large");
        let low = UniPoly::new(q.coeffs[..q.coeffs.len().min(d)].to_vec());
        let mut acc = low.scale(&self.uniform_scale);
        for (j, c) in q.coeffs.iter().enumerate().skip(d) {
            if c.is_zero() {
                continue;
            }
            acc = acc.add(&self.rows[j - d].scale(c));
        }
        acc
    }

    /// Replace `a` by its factor that still carries alpha.
    fn commit_factor(&mut self, keep: UniPoly) {
        debug_assert!(keep.degree().unwrap_or(0) > 0);
        self.a = keep.normalized();
        self.rebuild_rows();
    }

    /// Exact test: q(alpha) == 0 (deg q < deg a after reduction). May
    /// split `a`.
    fn is_zero(&mut self, q: &UniPoly) -> bool {
        let q = if q.degree().unwrap_or(0) >= self.a.degree().unwrap_or(1) {
            self.reduce(q)
        } else {
            q.clone()
        };
        if q.is_zero() {
            return true;
        }
        let g = q.gcd(&self.a);
        let dg = g.degree().unwrap_or(0);
        if dg == 0 {
            return false;
        }
        if dg == self.a.degree().unwrap() {
            return true;
        }
        // proper split: alpha is a root of exactly one of g, a/g
        let cof = self.a.pseudo_div_quotient(&g).primitive_keep_sign();
        if g.count_roots_sturm(&self.lo, &self.hi) > 0 {
            self.commit_factor(g);
            true
        } else {
            self.commit_factor(cof);
            false
        }
    }

    /// Sign of q(alpha).
    fn sign(&mut self, q: &UniPoly) -> Sign {
        if self.is_zero(q) {
            return Sign::Zero;
        }
        let q = if q.degree().unwrap_or(0) >= self.a.degree().unwrap_or(1) {
            self.reduce(q)
        } else {
            q.clone()
        };
        // positive-content stripping keeps the refinement loop short
        sign_at_root(&q.primitive_keep_sign(), &self.as_root())
    }
}

/// Polynomials in y with coefficients in Q[x]/(a), up to scalars.
type FiberPoly = Vec<UniPoly>;

fn fiber_trim(fiber: &mut Fiber, p: &mut FiberPoly) {
    while let Some(last) = p.last() {
        if fiber.is_zero(last) {
            p.pop();
        } else {
            break;
        }
    }
}

/// Strip the common integer content of all coefficients (across all ring
/// elements) to keep the pseudo-remainder cascade flat.
fn fiber_strip_content(p: &mut FiberPoly) {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::Zero as _;
    let mut g = BigInt::ZERO;
    for c in p.iter() {
        for v in &c.coeffs {
            debug_assert!(v.is_integer());
            g = g.gcd(v.numer());
            if g == BigInt::from(1) {
                return;
            }
        }
    }
    if g.is_zero() || g == BigInt::from(1) {
        return;
    }
    let inv = Rat::new(BigInt::from(1), g);
    for c in p.iter_mut() {
        *c = c.scale(&inv);
    }
}

/// Gcd (up to scalars in Q(alpha)) of `b` (rational coefficients) and `p`
/// in Q(alpha)[y], computed by a pseudo-remainder Euclid so that every
/// coefficient operation stays in integer arithmetic.
fn fiber_gcd(fiber: &mut Fiber, b: &UniPoly, p: &FiberPoly) -> FiberPoly {
    let bi = b.normalized();
    let mut f: FiberPoly = bi
        .coeffs
        .iter()
        .map(|c| UniPoly::constant(c.clone()))
        .collect();
    let mut g: FiberPoly = p.iter().map(|c| fiber.reduce(c)).collect();
    fiber_trim(fiber, &mut f);
    fiber_trim(fiber, &mut g);
    if f.len() < g.len() {
        std::mem::swap(&mut f, &mut g);
    }
    while !g.is_empty() {
        if g.len() == 1 {
            // nonzero constant: coprime
            return vec![UniPoly::constant(Rat::one())];
        }
        let r = fiber_pseudo_rem(fiber, &f, &g);
        f = g;
        g = r;
        fiber_trim(fiber, &mut g);
        fiber_strip_content(&mut g);
    }
    f
}

/// Pseudo-remainder of f by g in Q(alpha)[y]: eliminate the top of f by
/// cross-multiplying with g's leading coefficient (a ring element). The
/// whole vector is content-stripped per round to keep growth flat.
fn fiber_pseudo_rem(fiber: &mut Fiber, f: &FiberPoly, g: &FiberPoly) -> FiberPoly {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    let lc_g = g.last().unwrap().clone();
    loop {
        // trim exact zeros at the top
        while r.len() > dg {
            let top = r.last().unwrap().clone();
            if fiber.is_zero(&top) {
                r.pop();
            } else {
                break;
            }
        }
        if r.len() <= dg {
            break;
        }
        let lead = r.last().unwrap().clone();
        let k = r.len() - 1 - dg;
        for c in r.iter_mut() {
            *c = fiber.reduce(&c.mul(&lc_g));
        }
        for (i, gc) in g.iter().enumerate() {
            let t = fiber.reduce(&lead.mul(gc));
            r[k + i] = r[k + i].sub(&t);
        }
        r.pop();
        fiber_strip_content(&mut r);
    }
    r.iter().map(|c| fiber.reduce(c)).collect()
}

fn eval_fiber_poly(p: &FiberPoly, at: &Rat) -> UniPoly {
    let mut acc = UniPoly::zero();
    for c in p.iter().rev() {
        acc = acc.scale(at).add(c);
    }
    acc
}

/// Debug-only instrumented variant (kept private to the crate's examples).
#[doc(hidden)]
pub fn debug_zero_test(p: &MultiPoly, ax: &IsolatingInterval, ay: &IsolatingInterval) -> bool {
    use std::time::Instant;
    let t0 = Instant::now();
    let mut fiber = Fiber::from_root(ax);
    eprintln!("fiber built: {:?} (d={:?}, lc digits {})", t0.elapsed(), fiber.a.degree(), fiber.a.lc().unwrap().numer().to_string().len());
    let t0 = Instant::now();
    let pc: FiberPoly = p
        .coeffs_in(Var::Y)
        .iter()
        .map(|c| fiber.reduce(&UniPoly::from_multi(c, Var::X)))
        .collect();
    let mut trimmed = pc.clone();
    fiber_trim(&mut fiber, &mut trimmed);
    eprintln!("reduced+trim: {:?}, deg_y {}", t0.elapsed(), trimmed.len());
    if trimmed.is_empty() { return true; }
    if trimmed.len() == 1 { return false; }
    let t0 = Instant::now();
    let g = fiber_gcd(&mut fiber, &ay.poly, &trimmed);
    eprintln!("fiber gcd: {:?}, deg_y {} coeff-digits {}", t0.elapsed(), g.len(),
        g.iter().flat_map(|c| c.coeffs.iter()).map(|v| v.numer().to_string().len()).max().unwrap_or(0));
    if g.len() <= 1 { return false; }
    let t0 = Instant::now();
    let vlo = eval_fiber_poly(&g, &ay.lo);
    let vhi = eval_fiber_poly(&g, &ay.hi);
    let slo = fiber.sign(&vlo);
    eprintln!("sign lo: {:?} -> {:?}", t0.elapsed(), slo);
    let t0 = Instant::now();
    let shi = fiber.sign(&vhi);
    eprintln!("sign hi: {:?} -> {:?}", t0.elapsed(), shi);
    slo != shi
}

/// Exact test p(alpha, beta) == 0 for algebraic alpha (x) and beta (y).
fn is_zero_at_alg2(p: &MultiPoly, ax: &IsolatingInterval, ay: &IsolatingInterval) -> bool {
    debug_assert!(!p.depends_on(Var::Z));
    let mut fiber = Fiber::from_root(ax);
    let pc: FiberPoly = p
        .coeffs_in(Var::Y)
        .iter()
        .map(|c| fiber.reduce(&UniPoly::from_multi(c, Var::X)))
        .collect();
    let mut trimmed = pc.clone();
    fiber_trim(&mut fiber, &mut trimmed);
    if trimmed.is_empty() {
        return true; // p(alpha, y) identically zero
    }
    if trimmed.len() == 1 {
        return false; // nonzero constant in y
    }
    let g = fiber_gcd(&mut fiber, &ay.poly, &trimmed);
    if g.len() <= 1 {
        return false;
    }
    // beta is a root of g iff g changes sign across beta's interval
    // (g divides ay.poly over Q(alpha), whose only root there is beta).
    let vlo = eval_fiber_poly(&g, &ay.lo);
    let vhi = eval_fiber_poly(&g, &ay.hi);
    let slo = fiber.sign(&vlo);
    let shi = fiber.sign(&vhi);
    debug_assert!(slo != Sign::Zero && shi != Sign::Zero);
    slo != shi
}

/// Exact sign of `p` (no z) at a plane algebraic point.
pub fn sign_at(p: &MultiPoly, pt: &AlgebraicPoint2D) -> Sign {
    try_sign_at(p, pt, 100_000).expect("sign refinement budget exhausted")
}

/// Budgeted sign: `None` only when the bisection budget runs out before the
/// enclosure separates from zero.
pub fn try_sign_at(p: &MultiPoly, pt: &AlgebraicPoint2D, budget: usize) -> Option<Sign> {
    debug_assert!(!p.depends_on(Var::Z));
    if p.is_zero() {
        return Some(Sign::Zero);
    }
    match (&pt.x.exact, &pt.y.exact) {
        (Some(a), Some(b)) => Some(Sign::of(&p.eval(a, b, &rat(0)))),
        (Some(a), None) => {
            let uni = p.substitute(Var::X, &MultiPoly::constant(a.clone()));
            if uni.is_zero() {
                return Some(Sign::Zero);
            }
            Some(sign_at_root(&UniPoly::from_multi(&uni, Var::Y), &pt.y))
        }
        (None, Some(b)) => {
            let uni = p.substitute(Var::Y, &MultiPoly::constant(b.clone()));
            if uni.is_zero() {
                return Some(Sign::Zero);
            }
            Some(sign_at_root(&UniPoly::from_multi(&uni, Var::X), &pt.x))
        }
        (None, None) => {
            let mut x = pt.x.clone();
            let mut y = pt.y.clone();
            let quick_rounds = 24.min(budget);
            for _ in 0..quick_rounds {
                let enc = p.eval_interval(
                    &x.interval(),
                    &y.interval(),
                    &crate::num::Interval::point(rat(0)),
                );
                if !enc.contains_zero() {
                    return Some(if enc.lo > rat(0) { Sign::Pos } else { Sign::Neg });
                }
                x.bisect();
                y.bisect();
                if x.is_exact() || y.is_exact() {
                    let refd = AlgebraicPoint2D {
                        x,
                        y,
                        system: pt.system.clone(),
                    };
                    return try_sign_at(p, &refd, budget);
                }
            }
            if is_zero_at_alg2(p, &x, &y) {
                return Some(Sign::Zero);
            }
            let mut spent = quick_rounds;
            loop {
                if spent >= budget {
                    return None;
                }
                let enc = p.eval_interval(
                    &x.interval(),
                    &y.interval(),
                    &crate::num::Interval::point(rat(0)),
                );
                if !enc.contains_zero() {
                    return Some(if enc.lo > rat(0) { Sign::Pos } else { Sign::Neg });
                }
                x.bisect();
                y.bisect();
                spent += 1;
                if x.is_exact() || y.is_exact() {
                    let refd = AlgebraicPoint2D {
                        x,
                        y,
                        system: pt.system.clone(),
                    };
                    return try_sign_at(p, &refd, budget.saturating_sub(spent));
                }
            }
        }
    }
}

/// All common real zeros of a bivariate system with finitely many common
/// zeros, each certified by exact evaluation of both polynomials.
pub fn solve_system2(
    f: &MultiPoly,
    g: &MultiPoly,
) -> Result<Vec<AlgebraicPoint2D>, SolveError> {
    debug_assert!(!f.depends_on(Var::Z) && !g.depends_on(Var::Z));
    if f.is_zero() || g.is_zero() {
        let other = if f.is_zero() { g } else { f };
        if other.is_constant() && !other.is_zero() {
            return Ok(Vec::new());
        }
        return Err(SolveError::PositiveDimensional(other.normalized()));
    }
    let common = gcd_poly(f, g);
    if !common.is_constant() {
        return Err(SolveError::PositiveDimensional(common));
    }
    if f.is_constant() || g.is_constant() {
        return Ok(Vec::new());
    }

    let candidates_for = |elim: Var| -> Vec<IsolatingInterval> {
        let keep = if elim == Var::Y { Var::X } else { Var::Y };
        let res = resultant(f, g, elim);
        if res.is_constant() {
            // no finite candidates along this axis unless a polynomial is
            // independent of `elim`; both cases mean no constraint
            return Vec::new();
        }
        let uni = UniPoly::from_multi(&res, keep);
        isolate_roots(&uni).expect("nonzero resultant")
    };

    // Eliminate each variable; every common zero projects onto roots of the
    // respective resultants.
    let xs = candidates_for(Var::Y);
    let ys = candidates_for(Var::X);
    if xs.is_empty() || ys.is_empty() {
        return Ok(Vec::new());
    }

    let triangular = linear_prs_remainder(f, g, Var::Y);
    let mut out = Vec::new();
    for xr in &xs {
        for yr in &ys {
            let cand = AlgebraicPoint2D {
                x: xr.clone(),
                y: yr.clone(),
                system: (f.clone(), g.clone()),
            };
            let keep = match certify_triangular(&cand, &triangular, &[f, g]) {
                Some(decision) => decision,
                None => sign_at(f, &cand) == Sign::Zero && sign_at(g, &cand) == Sign::Zero,
            };
            if keep {
                let mut p = cand;
                shrink_point(&mut p, &triangular, &[f, g]);
                out.push(p);
            }
        }
    }
    out.sort_by(|a, b| a.cmp_position(b));
    Ok(out)
}

/// All common real zeros of three bivariate polynomials with finitely many
/// common zeros. Candidate coordinates come from the gcd of the pairwise
/// resultants, which collapses the spurious factors each single resultant
/// drags along and keeps the defining polynomials small; certification then
/// checks all three signs exactly.
pub fn solve_system3(
    f: &MultiPoly,
    g: &MultiPoly,
    h: &MultiPoly,
) -> Result<Vec<AlgebraicPoint2D>, SolveError> {
    let polys = [f, g, h];
    if polys.iter().all(|p| p.is_zero()) {
        return Err(SolveError::PositiveDimensional(MultiPoly::zero()));
    }
    let mut acc: [MultiPoly; 2] = [MultiPoly::zero(), MultiPoly::zero()];
    for (idx, elim) in [(0usize, Var::Y), (1usize, Var::X)] {
        for (p, q) in [(polys[0], polys[1]), (polys[0], polys[2]), (polys[1], polys[2])] {
            if p.is_zero() || q.is_zero() {
                continue;
            }
            // the gcd usually collapses after two resultants
            if acc[idx].total_degree().map(|d| d <= 4).unwrap_or(false) {
                break;
            }
            let r = resultant(&p.normalized(), &q.normalized(), elim);
            if !r.is_zero() {
                acc[idx] = gcd_poly(&acc[idx], &r);
            }
        }
    }
    let [rx, ry] = acc;
    if rx.is_zero() || ry.is_zero() {
        let shared = crate::gcd::gcd3(f, g, h);
        return Err(SolveError::PositiveDimensional(shared));
    }
    if rx.is_constant() || ry.is_constant() {
        return Ok(Vec::new());
    }
    let xs = isolate_roots(&UniPoly::from_multi(&rx, Var::X)).expect("nonzero");
    let ys = isolate_roots(&UniPoly::from_multi(&ry, Var::Y)).expect("nonzero");
    let triangular = linear_prs_remainder(f, g, Var::Y);
    let trace_t0 = std::time::Instant::now();
    if std::env::var("TQK_TRACE").is_ok() { eprintln!("[trace] triangular built"); }
    let mut out = Vec::new();
    for (xi, xr) in xs.iter().enumerate() {
        for (yi, yr) in ys.iter().enumerate() {
            if std::env::var("TQK_TRACE").is_ok() { eprintln!("[trace] pair ({xi},{yi}) at {:?}", trace_t0.elapsed()); }
            let cand = AlgebraicPoint2D {
                x: xr.clone(),
                y: yr.clone(),
                system: (f.clone(), g.clone()),
            };
            let keep = match certify_triangular(&cand, &triangular, &[f, g, h]) {
                Some(decision) => decision,
                None => {
                    sign_at(f, &cand) == Sign::Zero
                        && sign_at(g, &cand) == Sign::Zero
                        && sign_at(h, &cand) == Sign::Zero
                }
            };
            if keep {
                let mut p = cand;
                shrink_point(&mut p, &triangular, &[f, g, h]);
                out.push(p);
            }
        }
    }
    out.sort_by(|a, b| a.cmp_position(b));
    Ok(out)
}

/// A degree-1 (in `v`) member c*v + d of the ideal (f, g) from the
/// pseudo-remainder sequence, when the sequence passes through degree 1.
/// At any point where c does not vanish, the only possible common root in
/// v is -d/c.
#[doc(hidden)]
pub fn linear_prs_remainder(
    f: &MultiPoly,
    g: &MultiPoly,
    v: Var,
) -> Option<(MultiPoly, MultiPoly)> {
    let mut a = f.normalized();
    let mut b = g.normalized();
    if a.degree_in(v).unwrap_or(0) < b.degree_in(v).unwrap_or(0) {
        std::mem::swap(&mut a, &mut b);
    }
    if b.degree_in(v).unwrap_or(0) == 0 {
        return None;
    }
    // subresultant PRS bookkeeping keeps the remainders determinant-sized
    let mut lead = MultiPoly::one();
    let mut h = MultiPoly::one();
    loop {
        let db = b.degree_in(v).unwrap_or(0);
        if db == 0 {
            return None;
        }
        if db == 1 {
            let coeffs = b.coeffs_in(v);
            return Some((coeffs[1].clone(), coeffs[0].clone()));
        }
        let delta = a.degree_in(v).unwrap_or(0) - db;
        let r = crate::gcd::pseudo_rem(&a, &b, v);
        if r.is_zero() {
            return None;
        }
        let divisor = lead.mul(&h.pow(delta));
        let r = r
            .divide_exact(&divisor)
            .expect("subresultant division is exact");
        a = b;
        b = r;
        lead = a.coeffs_in(v).pop().expect("nonzero");
        h = if delta == 0 {
            h
        } else {
            lead.pow(delta)
                .divide_exact(&h.pow(delta - 1))
                .expect("subresultant h update is exact")
        };
    }
}

/// Zero test of a univariate polynomial at an isolated root: symbolic,
/// by gcd with the defining polynomial plus a sign change. No refinement
/// is ever needed, in either direction.
fn univ_vanishes_at(q: &UniPoly, root: &IsolatingInterval) -> bool {
    if let Some(v) = &root.exact {
        return q.eval(v).is_zero();
    }
    if q.is_zero() {
        return true;
    }
    let reduced;
    let q = if q.degree().unwrap_or(0) > 2 * root.poly.degree().unwrap_or(1) {
        reduced = q.reduce_scalar_mod(&root.poly);
        &reduced
    } else {
        q
    };
    if q.is_zero() {
        return true;
    }
    let g = q.gcd(&root.poly);
    if g.degree().unwrap_or(0) == 0 {
        return false;
    }
    // g divides the squarefree defining polynomial, whose only root in the
    // interval is ours; a sign change pins it
    g.sign_at(&root.lo) != g.sign_at(&root.hi)
}

/// Triangular certification: `Some(true/false)` when the linear remainder
/// decides membership, `None` when the route does not apply (exact
/// coordinates keep the plain path, which is already cheap).
fn certify_triangular(
    cand: &AlgebraicPoint2D,
    triangular: &Option<(MultiPoly, MultiPoly)>,
    system: &[&MultiPoly],
) -> Option<bool> {
    let (c, d) = triangular.as_ref()?;
    if cand.x.is_exact() || cand.y.is_exact() {
        return None;
    }
    let cu = UniPoly::from_multi(c, Var::X);
    if cu.is_zero() || univ_vanishes_at(&cu, &cand.x) {
        return None; // degenerate fiber: fall back
    }
    // the unique possible y over alpha is -d/c; check it coincides with beta
    if !rational_value_matches_root(&cu, &UniPoly::from_multi(d, Var::X).neg(), &cand.x, &cand.y) {
        return Some(false);
    }
    // then every system polynomial must vanish at (alpha, -d/c); built with
    // arithmetic modulo the defining polynomial so degrees stay small
    let modulus = &cand.x.poly;
    let cm = cu.rem_exact(modulus);
    let dm = UniPoly::from_multi(d, Var::X).rem_exact(modulus);
    for p in system {
        let nu = substitution_numerator_mod(p, &cm, &dm, modulus);
        if !nu.is_zero() && !univ_vanishes_at(&nu, &cand.x) {
            return Some(false);
        }
    }
    Some(true)
}

/// Element of Q(alpha) stored as a primitive integer polynomial with an
/// explicit rational scalar: value = scale * poly(alpha). Keeping the
/// stored polynomials primitive makes all arithmetic integer-sized; the
/// scalars absorb the pseudo-reduction powers and contents exactly.
#[derive(Clone)]
struct Scaled {
    poly: UniPoly,
    scale: Rat,
}

impl Scaled {
    fn from_poly(p: &UniPoly, a: &UniPoly) -> Scaled {
        Scaled::reduce_raw(p.clone(), Rat::one(), a)
    }

    fn one() -> Scaled {
        Scaled {
            poly: UniPoly::constant(Rat::one()),
            scale: Rat::one(),
        }
    }

    fn is_zero(&self) -> bool {
        self.poly.is_zero() || self.scale.is_zero()
    }

    /// value = pre_scale * raw(alpha), reduced and normalized.
    fn reduce_raw(raw: UniPoly, pre_scale: Rat, a: &UniPoly) -> Scaled {
        let d = a.degree().expect("nonzero modulus");
        let (reduced, power) = match raw.degree() {
            Some(n) if n >= d => {
                let k = (n - d + 1) as i64;
                (raw.pseudo_rem(a), k)
            }
            _ => (raw, 0),
        };
        if reduced.is_zero() {
            return Scaled {
                poly: UniPoly::zero(),
                scale: Rat::zero(),
            };
        }
        // value(pseudo_rem) = lc(a)^power * value(raw mod a)
        let lc = a.lc().unwrap().clone();
        let mut lc_pow = Rat::one();
        for _ in 0..power {
            lc_pow *= &lc;
        }
        // strip to primitive; keep the sign in the polynomial
        let prim = reduced.primitive_keep_sign();
        // content = reduced / prim (a positive rational)
        let content = if prim.is_zero() {
            Rat::one()
        } else {
            // leading coefficients give the exact ratio
            reduced.lc().unwrap() / prim.lc().unwrap()
        };
        Scaled {
            poly: prim,
            scale: pre_scale * content / lc_pow,
        }
    }

    fn mul(&self, o: &Scaled, a: &UniPoly) -> Scaled {
        if self.is_zero() || o.is_zero() {
            return Scaled {
                poly: UniPoly::zero(),
                scale: Rat::zero(),
            };
        }
        Scaled::reduce_raw(self.poly.mul(&o.poly), &self.scale * &o.scale, a)
    }

    /// The rational-scaled value as a rational-coefficient polynomial.
    fn realize(&self) -> UniPoly {
        self.poly.scale(&self.scale)
    }
}

/// Numerator of p(x, -d/c) with all x-arithmetic reduced modulo `a`.
fn substitution_numerator_mod(
    p: &MultiPoly,
    c: &UniPoly,
    d: &UniPoly,
    a: &UniPoly,
) -> UniPoly {
    let coeffs = p.coeffs_in(Var::Y);
    let deg = coeffs.len() - 1;
    let neg_d = Scaled::from_poly(&d.neg(), a);
    let cc = Scaled::from_poly(c, a);
    let mut dpow = vec![Scaled::one()];
    let mut cpow = vec![Scaled::one()];
    for k in 1..=deg {
        dpow.push(dpow[k - 1].mul(&neg_d, a));
        cpow.push(cpow[k - 1].mul(&cc, a));
    }
    let mut acc = UniPoly::zero();
    for (k, pk) in coeffs.iter().enumerate() {
        if pk.is_zero() {
            continue;
        }
        let pku = Scaled::from_poly(&UniPoly::from_multi(pk, Var::X), a);
        let t = pku.mul(&dpow[k], a).mul(&cpow[deg - k], a);
        acc = acc.add(&t.realize());
    }
    Scaled::reduce_raw(acc, Rat::one(), a).poly
}

/// Does the value num(alpha)/den(alpha) equal the isolated root beta of
/// `y.poly`? First certify symbolically that the value is a root of the
/// defining polynomial at all, then separate it from the other roots by
/// refining the alpha side against beta's fixed isolating interval.
fn rational_value_matches_root(
    den: &UniPoly,
    num: &UniPoly,
    x: &IsolatingInterval,
    y: &IsolatingInterval,
) -> bool {
    if let Some(b) = &y.exact {
        // beta rational: value equals b iff num - b*den vanishes at alpha
        let shifted = num.sub(&den.scale(b));
        return univ_vanishes_at(&shifted, x);
    }
    // necessary: B(num/den) vanishes at alpha (cleared of denominators),
    // built with x-arithmetic modulo alpha's defining polynomial
    let a = &x.poly;
    let b = &y.poly;
    let m = b.coeffs.len() - 1;
    let num_s = Scaled::from_poly(num, a);
    let den_s = Scaled::from_poly(den, a);
    let mut num_pows = vec![Scaled::one()];
    let mut den_pows = vec![Scaled::one()];
    for k in 1..=m {
        num_pows.push(num_pows[k - 1].mul(&num_s, a));
        den_pows.push(den_pows[k - 1].mul(&den_s, a));
    }
    let mut comp = UniPoly::zero();
    for (k, bk) in b.coeffs.iter().enumerate() {
        if !bk.is_zero() {
            let t = num_pows[k].mul(&den_pows[m - k], a);
            comp = comp.add(&t.realize().scale(bk));
        }
    }
    let comp = Scaled::reduce_raw(comp, Rat::one(), a).poly;
    if !univ_vanishes_at(&comp, x) {
        return false;
    }
    // the value is one of B's roots; it equals beta exactly when it falls
    // inside beta's isolating interval, which refinement of alpha decides
    // (the endpoints are not roots of B)
    let mut xb = x.clone();
    loop {
        if let Some(e) = &xb.exact {
            let v = num.eval(e) / den.eval(e);
            return y.poly.sign_at(&v) == Sign::Zero && y.lo < v && v < y.hi;
        }
        let dv = den.eval_interval(&xb.interval());
        if let Some(inv) = dv.recip() {
            let enc = num.eval_interval(&xb.interval()).mul(&inv);
            if enc.hi < y.lo || enc.lo > y.hi {
                return false;
            }
            if y.lo < enc.lo && enc.hi < y.hi {
                return true;
            }
        }
        xb.bisect();
    }
}

/// After certification, shrink the point's defining polynomials using the
/// univariate polynomials known to vanish at it; downstream sign queries
/// get dramatically cheaper over small number fields.
fn shrink_point(
    pt: &mut AlgebraicPoint2D,
    triangular: &Option<(MultiPoly, MultiPoly)>,
    system: &[&MultiPoly],
) {
    if pt.x.is_exact() && pt.y.is_exact() {
        return;
    }
    let mut x_vanishing: Vec<UniPoly> = Vec::new();
    if let Some((c, d)) = triangular {
        if !pt.x.is_exact() {
            let a = &pt.x.poly;
            let cm = UniPoly::from_multi(c, Var::X).rem_exact(a);
            let dm = UniPoly::from_multi(d, Var::X).rem_exact(a);
            for p in system {
                let n = substitution_numerator_mod(p, &cm, &dm, a);
                if !n.is_zero() {
                    x_vanishing.push(n);
                }
            }
        }
    }
    if !pt.x.is_exact() {
        for v in &x_vanishing {
            shrink_root(&mut pt.x, v);
        }
    }
    // rebuild the y-side over the shrunken x field when the fiber is linear
    if let Some((c, d)) = triangular {
        if !pt.x.is_exact() && !pt.y.is_exact() {
            let a_multi = pt.x.poly.to_multi(Var::X);
            let lin = c
                .mul(&MultiPoly::var(Var::Y))
                .add(d);
            let res = resultant(&a_multi, &lin, Var::X);
            if !res.is_zero() && !res.is_constant() && !res.depends_on(Var::X) {
                if let Ok(sf) = crate::gcd::squarefree_part(&res) {
                    let bu = UniPoly::from_multi(&sf, Var::Y);
                    if swap_defining(&mut pt.y, &bu) {
                        // done: y now lives over the small field as well
                    }
                }
            }
        }
    }
}

/// Replace the defining polynomial of an isolated root by a divisor-like
/// smaller polynomial that provably isolates the same root.
fn shrink_root(root: &mut IsolatingInterval, vanishing: &UniPoly) {
    if vanishing.is_zero() || root.is_exact() {
        return;
    }
    let g = root.poly.gcd(vanishing);
    let dg = g.degree().unwrap_or(0);
    let da = root.poly.degree().unwrap_or(0);
    if dg == 0 || dg >= da {
        return;
    }
    // the root lies in exactly one of g, poly/g
    let keep = if g.count_roots_sturm(&root.lo, &root.hi) > 0 {
        g
    } else {
        root.poly.pseudo_div_quotient(&g).normalized()
    };
    if keep.degree().unwrap_or(0) < da {
        root.poly = keep;
    }
}

/// Install a new defining polynomial when it provably isolates the root.
fn swap_defining(root: &mut IsolatingInterval, candidate: &UniPoly) -> bool {
    if root.is_exact() {
        return false;
    }
    let da = root.poly.degree().unwrap_or(0);
    if candidate.degree().unwrap_or(0) == 0 || candidate.degree().unwrap_or(0) >= da {
        return false;
    }
    // the root must be a root of the candidate: gcd route
    let g = root.poly.gcd(candidate);
    if g.degree().unwrap_or(0) == 0 {
        return false;
    }
    if g.count_roots_sturm(&root.lo, &root.hi) == 0 {
        return false;
    }
    // g vanishes at the root and divides the old defining polynomial, so
    // the old interval isolates within g's roots too; tighten endpoints to
    // regain the sign-change certificate
    let mut lo = root.lo.clone();
    let mut hi = root.hi.clone();
    let old = root.poly.clone();
    loop {
        if g.sign_at(&lo) != Sign::Zero
            && g.sign_at(&hi) != Sign::Zero
            && g.sign_at(&lo) != g.sign_at(&hi)
        {
            break;
        }
        // bisect along the old certificate
        let mid = (&lo + &hi) / crate::num::rat(2);
        match old.sign_at(&mid) {
            Sign::Zero => {
                root.lo = mid.clone();
                root.hi = mid.clone();
                root.exact = Some(mid);
                return true;
            }
            s => {
                if s == old.sign_at(&lo) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
        }
    }
    root.poly = g;
    root.lo = lo;
    root.hi = hi;
    true
}

/// Merge point lists, dropping duplicates (same real point, possibly from
/// different defining systems).
pub fn dedup_points(mut pts: Vec<AlgebraicPoint2D>) -> Vec<AlgebraicPoint2D> {
    pts.sort_by(|a, b| a.cmp_position(b));
    let mut out: Vec<AlgebraicPoint2D> = Vec::new();
    for p in pts {
        if out.last().map(|q| q.same_point(&p)).unwrap_or(false) {
            continue;
        }
        out.push(p);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::ratio;

    fn mp(s: &str) -> MultiPoly {
        MultiPoly::parse(s).unwrap()
    }

    #[test]
    fn resultant_of_circle_and_line() {
        // res_y(x^2+y^2-1, x-y) = 2x^2 - 1 (up to constant)
        let f = mp("x^2 + y^2 - 1");
        let g = mp("x - y");
        let r = resultant(&f, &g, Var::Y).normalized();
        assert_eq!(r, mp("2*x^2 - 1"));
    }

    #[test]
    fn solve_circle_line() {
        let f = mp("x^2 + y^2 - 1");
        let g = mp("x - y");
        let sols = solve_system2(&f, &g).unwrap();
        assert_eq!(sols.len(), 2);
        // (±sqrt2/2, ±sqrt2/2)
        for s in &sols {
            assert_eq!(sign_at(&mp("x - y"), s), Sign::Zero);
            assert_eq!(sign_at(&f, s), Sign::Zero);
        }
        assert_eq!(sols[0].cmp_position(&sols[1]), Ordering::Less);
    }

    #[test]
    fn solve_with_rational_solutions() {
        // {q1 = -x-y+2, q0 = 3x^2+3y^2+4x-20} -> (2,0) and (-2/3, 8/3)
        let f = mp("-x - y + 2");
        let g = mp("3*x^2 + 3*y^2 + 4*x - 20");
        let sols = solve_system2(&f, &g).unwrap();
        assert_eq!(sols.len(), 2);
        let exact: Vec<_> = sols.iter().filter_map(|s| s.exact_xy()).collect();
        assert!(exact.contains(&(rat(2), rat(0))));
        assert!(exact.contains(&(ratio(-2, 3), ratio(8, 3))));
    }

    #[test]
    fn positive_dimensional_detected() {
        let f = mp("x*y");
        let g = mp("y*x^2 + y^2");
        match solve_system2(&f, &g) {
            Err(SolveError::PositiveDimensional(c)) => assert_eq!(c, mp("y")),
            other => panic!("expected positive dimensional, got {other:?}"),
        }
    }

    #[test]
    fn no_common_zeros() {
        let f = mp("x^2 + y^2 + 1");
        let g = mp("x + y");
        assert!(solve_system2(&f, &g).unwrap().is_empty());
    }

    #[test]
    fn sign_at_fully_algebraic_point() {
        // point (sqrt2, sqrt3) as intersection of x^2-2 and y^2-3
        let f = mp("x^2 - 2");
        let g = mp("y^2 - 3");
        let sols = solve_system2(&f, &g).unwrap();
        assert_eq!(sols.len(), 4);
        let pp = sols
            .iter()
            .find(|s| {
                sign_at(&mp("x"), s) == Sign::Pos && sign_at(&mp("y"), s) == Sign::Pos
            })
            .unwrap();
        // x^2*y^2 - 6 vanishes there; x*y is positive; x - y negative
        assert_eq!(sign_at(&mp("x^2*y^2 - 6"), pp), Sign::Zero);
        assert_eq!(sign_at(&mp("x*y"), pp), Sign::Pos);
        assert_eq!(sign_at(&mp("x - y"), pp), Sign::Neg);
        // a polynomial vanishing on x^2-2 only when paired with y:
        // y^2 - 3 + (x^2 - 2) vanishes as well
        assert_eq!(sign_at(&mp("y^2 + x^2 - 5"), pp), Sign::Zero);
        assert_eq!(sign_at(&mp("1 + x^2"), pp), Sign::Pos);
    }

    #[test]
    fn dedup_merges_same_point_from_different_systems() {
        let a = AlgebraicPoint2D::from_rational(rat(2), rat(0), (mp("x - 2"), mp("y")));
        let sols = solve_system2(&mp("-x - y + 2"), &mp("3*x^2 + 3*y^2 + 4*x - 20")).unwrap();
        let mut all = sols;
        all.push(a);
        let deduped = dedup_points(all);
        assert_eq!(deduped.len(), 2);
    }

    #[test]
    fn villarceau_crossing_points_certify() {
        // The two projected Villarceau ellipses for the rational scene:
        // crossings on x + y = 0 with 41x^2 + 96x - 256 = 0.
        let e1 = mp("25*x^2 + 16*y^2 - 96*y - 256");
        let e2 = mp("16*x^2 + 25*y^2 + 96*x - 256");
        let sols = solve_system2(&e1, &e2).unwrap();
        assert_eq!(sols.len(), 2);
        for s in &sols {
            assert_eq!(sign_at(&mp("x + y"), s), Sign::Zero);
            assert_eq!(sign_at(&mp("41*x^2 + 96*x - 256"), s), Sign::Zero);
        }
    }
}
