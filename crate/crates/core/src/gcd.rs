//! Polynomial gcd and squarefree part over Q[x, y, z].
//!
//! The gcd works one main variable at a time: split off the content (a gcd
//! in fewer variables), then run the subresultant pseudo-remainder sequence
//! on the primitive parts. The subresultant PRS divides every remainder by
//! a known exact factor, so no per-step content extraction is needed and
//! coefficient growth stays at determinant size.

use crate::poly::{MultiPoly, PolyError, Var};

/// Pseudo-remainder of `f` by `g` with respect to `v`:
/// exactly `lc(g)^(deg f - deg g + 1) * f  mod  g`.
pub(crate) fn pseudo_rem(f: &MultiPoly, g: &MultiPoly, v: Var) -> MultiPoly {
    let mut fc = f.coeffs_in(v);
    let gc = g.coeffs_in(v);
    let n = gc.len() - 1;
    let lc_g = gc[n].clone();
    debug_assert!(!lc_g.is_zero());
    let full_power = (fc.len() - 1 - n) as u32 + 1;
    let mut applied = 0u32;
    loop {
        while fc.len() > 1 && fc.last().unwrap().is_zero() {
            fc.pop();
        }
        if fc.len() <= n || (fc.len() == 1 && fc[0].is_zero()) {
            break;
        }
        let deg_f = fc.len() - 1;
        if deg_f < n {
            break;
        }
        let lead = fc[deg_f].clone();
        for c in fc.iter_mut() {
            *c = c.mul(&lc_g);
        }
        applied += 1;
        let shift = deg_f - n;
        for (k, gk) in gc.iter().enumerate() {
            let t = lead.mul(gk);
            fc[k + shift] = fc[k + shift].sub(&t);
        }
    }
    let mut r = MultiPoly::from_coeffs_in(v, &fc);
    // top up to the full lc(g)^(delta+1) factor so divisions downstream are
    // exact regardless of accidental degree drops
    while applied < full_power {
        r = r.mul(&lc_g);
        applied += 1;
    }
    r
}

/// Content of `p` with respect to `v`: the gcd of its `v`-coefficients.
fn content_in(p: &MultiPoly, v: Var) -> MultiPoly {
    let mut c = MultiPoly::zero();
    for coeff in p.coeffs_in(v) {
        if coeff.is_zero() {
            continue;
        }
        c = gcd_poly(&c, &coeff);
        if c.is_one() {
            break;
        }
    }
    c
}

/// One-sided coprimality certificate: specialize every variable except `v`
/// at a point where neither leading coefficient vanishes; a constant
/// univariate gcd there proves the primitive parts are coprime. A
/// nontrivial specialized gcd is inconclusive and falls back to the PRS.
fn probe_coprime(f: &MultiPoly, g: &MultiPoly, v: Var) -> bool {
    use crate::num::rat;
    use crate::unipoly::UniPoly;
    let others: Vec<Var> = crate::poly::VARS
        .iter()
        .copied()
        .filter(|&o| o != v && (f.depends_on(o) || g.depends_on(o)))
        .collect();
    if others.is_empty() {
        return false;
    }
    let lcf = f.coeffs_in(v).pop().unwrap();
    let lcg = g.coeffs_in(v).pop().unwrap();
    for trial in 0..6i64 {
        let mut fs = f.clone();
        let mut gs = g.clone();
        let mut lf = lcf.clone();
        let mut lg = lcg.clone();
        for (k, &o) in others.iter().enumerate() {
            let c = MultiPoly::constant(rat(3 + 2 * trial + 5 * k as i64));
            fs = fs.substitute(o, &c);
            gs = gs.substitute(o, &c);
            lf = lf.substitute(o, &c);
            lg = lg.substitute(o, &c);
        }
        if lf.is_zero() || lg.is_zero() {
            continue; // leading degree dropped; try another point
        }
        let fu = UniPoly::from_multi(&fs, v);
        let gu = UniPoly::from_multi(&gs, v);
        return fu.gcd(&gu).degree().unwrap_or(0) == 0;
    }
    false
}

fn highest_var(p: &MultiPoly) -> Option<Var> {
    for v in [Var::Z, Var::Y, Var::X] {
        if p.depends_on(v) {
            return Some(v);
        }
    }
    None
}

/// Gcd in Q[x,y,z], normalized primitive over Z with positive leading
/// coefficient. `gcd(0, q)` is the normalized `q`; `gcd(0, 0) = 0`.
pub fn gcd_poly(p: &MultiPoly, q: &MultiPoly) -> MultiPoly {
    if p.is_zero() {
        return q.normalized();
    }
    if q.is_zero() {
        return p.normalized();
    }
    if p.is_constant() || q.is_constant() {
        return MultiPoly::one();
    }
    let v = match highest_var(p) {
        Some(v) => v,
        None => return MultiPoly::one(),
    };
    if !q.depends_on(v) {
        // v occurs only in p: common divisors live in the content of p
        return gcd_poly(&content_in(p, v), q);
    }
    if !p.depends_on(v) {
        return gcd_poly(p, &content_in(q, v));
    }

    let cp = content_in(p, v);
    let cq = content_in(q, v);
    let mut f = p.divide_exact(&cp).expect("content divides").normalized();
    let mut g = q.divide_exact(&cq).expect("content divides").normalized();
    if f.degree_in(v) < g.degree_in(v) {
        std::mem::swap(&mut f, &mut g);
    }
    if probe_coprime(&f, &g, v) {
        return gcd_poly(&cp, &cq).normalized();
    }
    // subresultant PRS (Brown-Traub): each remainder divides exactly by
    // lead * h^delta from the previous step
    let mut lead = MultiPoly::one();
    let mut h = MultiPoly::one();
    loop {
        let delta = f.degree_in(v).unwrap_or(0) - g.degree_in(v).unwrap_or(0);
        let r = pseudo_rem(&f, &g, v);
        if r.is_zero() {
            break;
        }
        let divisor = lead.mul(&h.pow(delta));
        let r = r.divide_exact(&divisor).expect("subresultant division is exact");
        f = g;
        g = r;
        if g.degree_in(v).unwrap_or(0) == 0 {
            break;
        }
        lead = f.coeffs_in(v).pop().expect("nonzero");
        h = if delta == 0 {
            h
        } else {
            // h := lead^delta / h^(delta-1)
            lead.pow(delta)
                .divide_exact(&h.pow(delta - 1))
                .expect("subresultant h update is exact")
        };
    }
    let gcd_primitive = if g.degree_in(v).unwrap_or(0) == 0 {
        MultiPoly::one()
    } else {
        let cg = content_in(&g, v);
        g.divide_exact(&cg).expect("content divides").normalized()
    };
    gcd_poly(&cp, &cq).mul(&gcd_primitive).normalized()
}

pub fn gcd3(p: &MultiPoly, q: &MultiPoly, r: &MultiPoly) -> MultiPoly {
    gcd_poly(&gcd_poly(p, q), r)
}

/// Product of the distinct irreducible factors of `p`, normalized:
/// `p / gcd(p, p_x, p_y, p_z)`. Nonzero constants yield 1.
pub fn squarefree_part(p: &MultiPoly) -> Result<MultiPoly, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if p.is_constant() {
        return Ok(MultiPoly::one());
    }
    let mut g = p.normalized();
    for v in [Var::X, Var::Y, Var::Z] {
        if p.depends_on(v) {
            g = gcd_poly(&g, &p.partial(v));
            if g.is_one() {
                break;
            }
        }
    }
    Ok(p.divide_exact(&g)
        .expect("gcd divides")
        .normalized())
}

/// True when `p` has no repeated factors.
pub fn is_squarefree(p: &MultiPoly) -> bool {
    match squarefree_part(p) {
        Ok(sf) => sf == p.normalized(),
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MultiPoly {
        MultiPoly::parse(s).unwrap()
    }

    #[test]
    fn gcd_of_equal_inputs_is_normalized_input() {
        let f = p("(-3/7)*(2*x^2 - 4*y)");
        let g = gcd_poly(&f, &f);
        assert_eq!(g, p("x^2 - 2*y"));
    }

    #[test]
    fn gcd_with_constructed_common_factor() {
        let f = p("x + y").pow(2).mul(&p("x - y"));
        let g = p("x + y").mul(&p("y"));
        assert_eq!(gcd_poly(&f, &g), p("x + y"));
    }

    #[test]
    fn gcd_zero_conventions() {
        let f = p("6*x - 9");
        assert_eq!(gcd_poly(&MultiPoly::zero(), &f), p("2*x - 3"));
        assert_eq!(gcd_poly(&f, &MultiPoly::zero()), p("2*x - 3"));
        assert!(gcd_poly(&MultiPoly::zero(), &MultiPoly::zero()).is_zero());
    }

    #[test]
    fn gcd_univariate_against_trivariate() {
        let f = p("x*z + z").mul(&p("x + 1"));
        let g = p("x^2 + 2*x + 1");
        assert_eq!(gcd_poly(&f, &g), p("x^2 + 2*x + 1"));
    }

    #[test]
    fn squarefree_cube() {
        let f = p("x + 1").pow(3);
        assert_eq!(squarefree_part(&f).unwrap(), p("x + 1"));
    }

    #[test]
    fn squarefree_tangent_circles_product() {
        // 16 (x^2+y^2-4)^2 (x^2+y^2-25)^2, from the doubly tangential scene
        let a = p("x^2 + y^2 - 4");
        let b = p("x^2 + y^2 - 25");
        let f = a.pow(2).mul(&b.pow(2)).scale(&crate::num::rat(16));
        assert_eq!(squarefree_part(&f).unwrap(), a.mul(&b).normalized());
    }

    #[test]
    fn squarefree_handles_single_variable_factors() {
        // y^2 * (y^2 + 16x - 64): factor y has zero x-partial contribution
        let f = p("y").pow(4).mul(&p("y^2 + 16*x - 64").pow(2));
        assert_eq!(
            squarefree_part(&f).unwrap(),
            p("y").mul(&p("y^2 + 16*x - 64")).normalized()
        );
    }

    #[test]
    fn squarefree_error_on_zero() {
        assert_eq!(
            squarefree_part(&MultiPoly::zero()),
            Err(PolyError::ZeroPolynomial)
        );
    }
}
