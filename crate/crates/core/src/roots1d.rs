//! Exact real-root isolation for univariate polynomials, interval
//! refinement, and sign determination at univariate algebraic numbers.
//!
//! Isolation runs Descartes-style bisection on the squarefree part with
//! rational endpoints; Sturm sequences (in `unipoly`) serve as the
//! independent counting oracle in the test suites.

use crate::num::{rat, Interval, Rat, Sign};
use crate::poly::PolyError;
use crate::unipoly::{SturmChain, UniPoly};
use num_traits::Signed;

/// One real root of `poly`: either the exact rational `exact`, or the unique
/// root of `poly` in the open interval (lo, hi), at whose endpoints `poly`
/// has opposite nonzero signs.
#[derive(Clone, Debug)]
pub struct IsolatingInterval {
    pub poly: UniPoly,
    pub lo: Rat,
    pub hi: Rat,
    pub exact: Option<Rat>,
}

impl IsolatingInterval {
    pub fn exact(poly: UniPoly, v: Rat) -> IsolatingInterval {
        IsolatingInterval {
            poly,
            lo: v.clone(),
            hi: v.clone(),
            exact: Some(v),
        }
    }

    pub fn is_exact(&self) -> bool {
        self.exact.is_some()
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rat {
        (&self.lo + &self.hi) / rat(2)
    }

    pub fn interval(&self) -> Interval {
        Interval::new(self.lo.clone(), self.hi.clone())
    }

    /// One bisection step; upgrades to exact when the midpoint is a root.
    pub fn bisect(&mut self) {
        if self.exact.is_some() {
            return;
        }
        let mid = self.midpoint();
        match self.poly.sign_at(&mid) {
            Sign::Zero => {
                self.lo = mid.clone();
                self.hi = mid.clone();
                self.exact = Some(mid);
            }
            s => {
                if s == self.poly.sign_at(&self.lo) {
                    self.lo = mid;
                } else {
                    self.hi = mid;
                }
            }
        }
    }

    /// Refine until the interval width is `<= w`. Exact roots are already
    /// width zero.
    pub fn refine_to_width(&mut self, w: &Rat) {
        while self.exact.is_none() && &self.width() > w {
            self.bisect();
        }
    }

    pub fn refined_to_width(&self, w: &Rat) -> IsolatingInterval {
        let mut c = self.clone();
        c.refine_to_width(w);
        c
    }

    /// Does the (closed) interval contain `v`?
    pub fn contains(&self, v: &Rat) -> bool {
        &self.lo <= v && v <= &self.hi
    }
}

/// Disjoint isolating intervals, one per distinct real root of `p`, sorted
/// ascending.
pub fn isolate_roots(p: &UniPoly) -> Result<Vec<IsolatingInterval>, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let sf = p.squarefree().normalized();
    if sf.degree().unwrap_or(0) == 0 {
        return Ok(Vec::new());
    }

    // Split off detectable rational roots first; they become exact entries
    // and keep the Descartes recursion on a root-free-at-dyadic-points poly.
    let rroots = sf.rational_roots();
    let mut work = sf.clone();
    for r in &rroots {
        work = work.deflate(r);
    }

    let mut out: Vec<IsolatingInterval> = rroots
        .iter()
        .map(|r| IsolatingInterval::exact(sf.clone(), r.clone()))
        .collect();

    if work.degree().unwrap_or(0) > 0 {
        let chain = SturmChain::new(&sf);
        let bound = work.root_bound();
        let mut stack = vec![(-bound.clone(), bound)];
        while let Some((a, b)) = stack.pop() {
            match work.descartes_bound_on(&a, &b) {
                0 => {}
                1 => {
                    // exactly one root in (a, b); tighten endpoints so the
                    // sign change certificate holds for sf as well
                    out.push(certify_interval(&sf, &chain, &work, a, b));
                }
                _ => {
                    let mid = (&a + &b) / rat(2);
                    if work.sign_at(&mid) == Sign::Zero {
                        // rational root missed by the divisor search
                        out.push(IsolatingInterval::exact(sf.clone(), mid.clone()));
                        work = work.deflate(&mid);
                        if work.degree().unwrap_or(0) == 0 {
                            continue;
                        }
                    }
                    stack.push((a, mid.clone()));
                    stack.push((mid, b));
                }
            }
        }
    }

    out.sort_by(|i1, i2| compare_roots(i1, i2));
    Ok(out)
}

/// Build an isolating interval for the single root of `work` in (a, b),
/// nudging endpoints so that the defining polynomial `sf` (which may have
/// extra rational roots elsewhere) changes sign across it.
fn certify_interval(
    sf: &UniPoly,
    chain: &SturmChain,
    work: &UniPoly,
    mut a: Rat,
    mut b: Rat,
) -> IsolatingInterval {
    debug_assert!(work.sign_at(&a) != Sign::Zero && work.sign_at(&b) != Sign::Zero);
    // Bisect until sf has exactly one root in (a,b) (it may currently hold a
    // deflated rational root as well) and nonzero endpoint signs.
    loop {
        let sa = sf.sign_at(&a);
        let sb = sf.sign_at(&b);
        if sa != Sign::Zero && sb != Sign::Zero && chain.count(&a, &b) == 1 {
            break;
        }
        let mid = (&a + &b) / rat(2);
        if work.sign_at(&mid) == Sign::Zero {
            return IsolatingInterval::exact(sf.clone(), mid);
        }
        if work.sign_at(&mid) == work.sign_at(&a) {
            a = mid;
        } else {
            b = mid;
        }
    }
    IsolatingInterval {
        poly: sf.clone(),
        lo: a,
        hi: b,
        exact: None,
    }
}

/// Sign of `q` at the algebraic number described by `root`.
pub fn sign_at_root(q: &UniPoly, root: &IsolatingInterval) -> Sign {
    if let Some(v) = &root.exact {
        return q.sign_at(v);
    }
    if q.is_zero() {
        return Sign::Zero;
    }
    // Exact zero test: q vanishes at the root iff gcd(q, poly) does.
    let g = q.gcd(&root.poly);
    if g.degree().unwrap_or(0) > 0 {
        let glo = g.sign_at(&root.lo);
        let ghi = g.sign_at(&root.hi);
        // Roots of g are roots of poly; endpoints are not roots of poly.
        debug_assert!(glo != Sign::Zero && ghi != Sign::Zero);
        if glo != ghi {
            return Sign::Zero;
        }
    }
    // Nonzero: refine until the interval enclosure decides.
    let mut iv = root.clone();
    loop {
        let enc = q.eval_interval(&iv.interval());
        if let Some(s) = enc.sign() {
            if s != Sign::Zero {
                return s;
            }
        }
        if !enc.contains_zero() {
            return if enc.lo.is_positive() { Sign::Pos } else { Sign::Neg };
        }
        iv.bisect();
        if let Some(v) = &iv.exact {
            return q.sign_at(v);
        }
    }
}

/// Decide whether two roots (each given by a squarefree defining polynomial
/// and isolating data) are the same real number.
pub fn roots_equal(a: &IsolatingInterval, b: &IsolatingInterval) -> bool {
    match (&a.exact, &b.exact) {
        (Some(u), Some(v)) => u == v,
        (Some(u), None) => b.poly.sign_at(u) == Sign::Zero && b.lo < *u && *u < b.hi,
        (None, Some(v)) => a.poly.sign_at(v) == Sign::Zero && a.lo < *v && *v < a.hi,
        (None, None) => {
            let lo = a.lo.clone().max(b.lo.clone());
            let hi = a.hi.clone().min(b.hi.clone());
            if lo >= hi {
                return false;
            }
            let g = a.poly.gcd(&b.poly);
            if g.degree().unwrap_or(0) == 0 {
                return false;
            }
            // The only candidate roots of g in (lo,hi) are the two isolated
            // roots; g has a root there iff they coincide.
            g.count_roots_sturm(&lo, &hi) > 0
        }
    }
}

/// Total order on real algebraic numbers.
pub fn compare_roots(a: &IsolatingInterval, b: &IsolatingInterval) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    if roots_equal(a, b) {
        return Ordering::Equal;
    }
    let mut a = a.clone();
    let mut b = b.clone();
    loop {
        // For distinct roots, non-exact intervals are open, so touching
        // endpoints already separate them.
        if a.hi <= b.lo && !(a.is_exact() && b.is_exact() && a.hi == b.lo) {
            return Ordering::Less;
        }
        if b.hi <= a.lo && !(a.is_exact() && b.is_exact() && b.hi == a.lo) {
            return Ordering::Greater;
        }
        if a.is_exact() && b.is_exact() {
            return a.lo.cmp(&b.lo);
        }
        a.bisect();
        b.bisect();
    }
}
