//! Lifting cutcurve points back to the intersection curve, and exact rank
//! and transversality tests at the lifted points.
//!
//! A cutcurve point with q1 != 0 lifts to the single point with
//! z0 = -sres10/sres1; a point with q1 = 0 lifts to the symmetric pair
//! z = ±sqrt(-q0), collapsing to z = 0 when q0 vanishes.

use crate::alg2d::{sign_at, AlgebraicPoint2D};
use crate::cutcurve::CutcurveData;
use crate::num::{exact_sqrt, rat, Interval, Rat, Sign};
use crate::poly::{MultiPoly, Var};
use crate::scene::Scene;
use crate::subres::SubresultantSet;
use num_traits::Zero;
use std::fmt;

/// How the z-coordinate of a lift is represented.
#[derive(Clone, Debug)]
pub enum LiftZ {
    /// Exact rational z.
    Exact(Rat),
    /// z = sign * sqrt(-q0(x0, y0)) with -q0 > 0 at the point.
    SymmetricSqrt { sign: Sign },
    /// z = -sres10(x0,y0) / sres1(x0,y0), with sres1 nonzero at the point.
    RationalFunction,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MultiplicityHint {
    Single,
    SymmetricPair,
    OnPlaneZ0,
}

#[derive(Clone, Debug)]
pub struct Lift {
    pub z: LiftZ,
    pub hint: MultiplicityHint,
    /// Rational enclosure of the z value (point interval when exact).
    pub enclosure: Interval,
}

impl Lift {
    pub fn exact_z(&self) -> Option<Rat> {
        match &self.z {
            LiftZ::Exact(v) => Some(v.clone()),
            _ => None,
        }
    }

    pub fn is_z_zero(&self) -> bool {
        matches!(&self.z, LiftZ::Exact(v) if v.is_zero())
    }
}

impl fmt::Display for Lift {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.z {
            LiftZ::Exact(v) => write!(f, "z = {}", crate::num::fmt_rat(v)),
            LiftZ::SymmetricSqrt { sign } => write!(
                f,
                "z = {}sqrt(-q0) in [{}, {}]",
                if *sign == Sign::Neg { "-" } else { "+" },
                crate::num::fmt_rat(&self.enclosure.lo),
                crate::num::fmt_rat(&self.enclosure.hi)
            ),
            LiftZ::RationalFunction => write!(
                f,
                "z = -sres10/sres1 in [{}, {}]",
                crate::num::fmt_rat(&self.enclosure.lo),
                crate::num::fmt_rat(&self.enclosure.hi)
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum LiftError {
    NotOnCutcurve(String),
    NotOnIntersection(String),
    NotACommonPoint(String),
    SingularOnInput(String),
}

impl fmt::Display for LiftError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LiftError::NotOnCutcurve(s) => write!(f, "point is not on the cutcurve: {s}"),
            LiftError::NotOnIntersection(s) => write!(f, "point is not on both surfaces: {s}"),
            LiftError::NotACommonPoint(s) => write!(f, "not a common point: {s}"),
            LiftError::SingularOnInput(s) => write!(f, "input curve singular at the point: {s}"),
        }
    }
}

impl std::error::Error for LiftError {}

/// Split a trivariate polynomial along z-parity after reducing modulo
/// z^2 + q0: returns (even, odd) with p = even + z * odd at points where
/// z^2 = -q0.
pub fn reduce_mod_symmetric(p: &MultiPoly, q0: &MultiPoly) -> (MultiPoly, MultiPoly) {
    let neg_q0 = q0.neg();
    let coeffs = p.coeffs_in(Var::Z);
    let mut even = MultiPoly::zero();
    let mut odd = MultiPoly::zero();
    for (k, c) in coeffs.iter().enumerate() {
        let pw = neg_q0.pow((k / 2) as u32);
        if k % 2 == 0 {
            even = even.add(&c.mul(&pw));
        } else {
            odd = odd.add(&c.mul(&pw));
        }
    }
    (even, odd)
}

/// Numerator of p(x, y, -sres10/sres1): sum p_k (-sres10)^k sres1^(d-k).
pub fn rational_lift_numerator(p: &MultiPoly, set: &SubresultantSet) -> MultiPoly {
    let coeffs = p.coeffs_in(Var::Z);
    let d = coeffs.len() - 1;
    let neg10 = set.sres10.neg();
    let mut acc = MultiPoly::zero();
    for (k, c) in coeffs.iter().enumerate() {
        let t = c
            .mul(&neg10.pow(k as u32))
            .mul(&set.sres1.pow((d - k) as u32));
        acc = acc.add(&t);
    }
    acc
}

/// Exact zero test of a trivariate polynomial at a lifted point.
pub fn is_zero_at_lift(
    p: &MultiPoly,
    pt: &AlgebraicPoint2D,
    lift: &Lift,
    scene: &Scene,
    set: &SubresultantSet,
) -> bool {
    match &lift.z {
        LiftZ::Exact(v) => {
            let flat = p.substitute(Var::Z, &MultiPoly::constant(v.clone()));
            sign_at(&flat, pt) == Sign::Zero
        }
        LiftZ::RationalFunction => {
            let num = rational_lift_numerator(p, set);
            sign_at(&num, pt) == Sign::Zero
        }
        LiftZ::SymmetricSqrt { sign } => {
            let (even, odd) = reduce_mod_symmetric(p, &scene.derived.q0);
            let se = sign_at(&even, pt);
            let so = sign_at(&odd, pt);
            let sq0 = sign_at(&scene.derived.q0, pt);
            if sq0 == Sign::Zero {
                return se == Sign::Zero;
            }
            match (se, so) {
                (Sign::Zero, Sign::Zero) => true,
                (Sign::Zero, _) | (_, Sign::Zero) => false,
                (e, o) => {
                    // even + sign*sqrt(v)*odd = 0 needs opposing signs and
                    // even^2 = v * odd^2, i.e. even^2 + q0 odd^2 = 0
                    if e != sign.mul(o).neg() {
                        return false;
                    }
                    let combo = even
                        .mul(&even)
                        .add(&scene.derived.q0.mul(&odd).mul(&odd));
                    sign_at(&combo, pt) == Sign::Zero
                }
            }
        }
    }
}

/// Lifts of a certified cutcurve point, per the lifting summary: unique
/// rational-function lift when q1 != 0 there, symmetric pair otherwise.
pub fn lift_point(
    pt: &AlgebraicPoint2D,
    scene: &Scene,
    set: &SubresultantSet,
    data: &CutcurveData,
) -> Result<Vec<Lift>, LiftError> {
    if sign_at(&data.s0, pt) != Sign::Zero {
        return Err(LiftError::NotOnCutcurve(format!("{pt} not on the curve")));
    }
    let st = sign_at(&scene.derived.delta_t, pt);
    let sq = sign_at(&scene.derived.delta_q, pt);
    if st == Sign::Pos || sq == Sign::Neg {
        return Err(LiftError::NotOnCutcurve(format!(
            "{pt} outside the admissible region"
        )));
    }

    let q1_zero_here =
        scene.q1_identically_zero() || sign_at(&scene.derived.q1, pt) == Sign::Zero;

    let lifts = if !q1_zero_here {
        vec![rational_function_lift(pt, set)]
    } else {
        let sq0 = sign_at(&scene.derived.q0, pt);
        match sq0 {
            Sign::Pos => {
                return Err(LiftError::NotOnCutcurve(format!(
                    "q0 > 0 at {pt} with q1 = 0"
                )))
            }
            Sign::Zero => vec![Lift {
                z: LiftZ::Exact(Rat::zero()),
                hint: MultiplicityHint::OnPlaneZ0,
                enclosure: Interval::point(Rat::zero()),
            }],
            Sign::Neg => symmetric_pair_lifts(pt, scene),
        }
    };

    // Certify T = Q = 0 at every lift.
    for l in &lifts {
        if !is_zero_at_lift(&scene.derived.t, pt, l, scene, set)
            || !is_zero_at_lift(&scene.derived.q, pt, l, scene, set)
        {
            return Err(LiftError::NotOnIntersection(format!(
                "lift {l} of {pt} fails T = Q = 0"
            )));
        }
    }
    Ok(lifts)
}

fn rational_function_lift(pt: &AlgebraicPoint2D, set: &SubresultantSet) -> Lift {
    if let Some((x, y)) = pt.exact_xy() {
        let s1 = set.sres1.eval(&x, &y, &rat(0));
        let s10 = set.sres10.eval(&x, &y, &rat(0));
        let z = -s10 / s1;
        let hint = if z.is_zero() {
            MultiplicityHint::OnPlaneZ0
        } else {
            MultiplicityHint::Single
        };
        return Lift {
            enclosure: Interval::point(z.clone()),
            z: LiftZ::Exact(z),
            hint,
        };
    }
    // enclosure: refine until sres1 separates from zero, then divide
    let mut p = pt.clone();
    let zero = Interval::point(rat(0));
    let enclosure = loop {
        let s1 = set
            .sres1
            .eval_interval(&p.x.interval(), &p.y.interval(), &zero);
        if let Some(inv) = s1.recip() {
            let s10 = set
                .sres10
                .eval_interval(&p.x.interval(), &p.y.interval(), &zero);
            break s10.scale(&rat(-1)).mul(&inv);
        }
        p.x.bisect();
        p.y.bisect();
    };
    Lift {
        z: LiftZ::RationalFunction,
        hint: MultiplicityHint::Single,
        enclosure,
    }
}

fn symmetric_pair_lifts(pt: &AlgebraicPoint2D, scene: &Scene) -> Vec<Lift> {
    // exact square root when the point and -q0 are rational
    if let Some((x, y)) = pt.exact_xy() {
        let v = -scene.derived.q0.eval(&x, &y, &rat(0));
        if let Some(w) = exact_sqrt(&v) {
            return vec![
                Lift {
                    z: LiftZ::Exact(w.clone()),
                    hint: MultiplicityHint::SymmetricPair,
                    enclosure: Interval::point(w.clone()),
                },
                Lift {
                    z: LiftZ::Exact(-w.clone()),
                    hint: MultiplicityHint::SymmetricPair,
                    enclosure: Interval::point(-w),
                },
            ];
        }
    }
    let p = pt.refined_to_width(&crate::num::ratio(1, 1 << 20));
    let zero = Interval::point(rat(0));
    let neg_q0 = scene
        .derived
        .q0
        .eval_interval(&p.x.interval(), &p.y.interval(), &zero)
        .scale(&rat(-1));
    let enc = neg_q0.sqrt_enclosure();
    vec![
        Lift {
            z: LiftZ::SymmetricSqrt { sign: Sign::Pos },
            hint: MultiplicityHint::SymmetricPair,
            enclosure: enc.clone(),
        },
        Lift {
            z: LiftZ::SymmetricSqrt { sign: Sign::Neg },
            hint: MultiplicityHint::SymmetricPair,
            enclosure: Interval::new(-enc.hi.clone(), -enc.lo.clone()),
        },
    ]
}

/// The three 2x2 minors of the Jacobian of (T, Q), as polynomials:
/// (d(T,Q)/d(x,z), d(T,Q)/d(y,z), d(T,Q)/d(x,y)).
pub fn jacobian_minors(scene: &Scene) -> [MultiPoly; 3] {
    let d = &scene.derived;
    let tx = d.t.partial(Var::X);
    let ty = d.t.partial(Var::Y);
    let tz = d.t.partial(Var::Z);
    let qx = d.q.partial(Var::X);
    let qy = d.q.partial(Var::Y);
    let qz = d.q.partial(Var::Z);
    [
        tx.mul(&qz).sub(&tz.mul(&qx)),
        ty.mul(&qz).sub(&tz.mul(&qy)),
        tx.mul(&qy).sub(&ty.mul(&qx)),
    ]
}

/// Closed-form minors at z = 0 (used for the lifts in the plane): the
/// (x,z) and (y,z) minors are -4 (R^2 + r^2 - x^2 - y^2) times x q1 and
/// y q1; the (x,y) minor is +4 (R^2 + r^2 - x^2 - y^2) times the reduced
/// tangency factor 2axy - 2bxy - dx^2 + dy^2 + gy - hx. Only zero sets
/// matter to the rank tests.
pub fn jacobian_minors_z0(scene: &Scene) -> [MultiPoly; 3] {
    let n = &scene.norm;
    let x = MultiPoly::var(Var::X);
    let y = MultiPoly::var(Var::Y);
    let rsum = &scene.torus.major * &scene.torus.major + &scene.torus.minor * &scene.torus.minor;
    let ring = MultiPoly::constant(rsum).sub(&x.mul(&x)).sub(&y.mul(&y));
    let factor = ring.scale(&rat(-4));
    let porfin = x
        .mul(&y)
        .scale(&(&n.a * rat(2) - &n.b * rat(2)))
        .add(&x.mul(&x).scale(&-&n.d))
        .add(&y.mul(&y).scale(&n.d))
        .add(&y.scale(&n.g))
        .sub(&x.scale(&n.h));
    [
        factor.mul(&x).mul(&scene.derived.q1),
        factor.mul(&y).mul(&scene.derived.q1),
        factor.neg().mul(&porfin),
    ]
}

/// The tangency factor of the (x,y) minor at z = 0, whose vanishing (for a
/// point with q1 = 0 on both silhouettes) is exactly non-transversality of
/// delta_T and delta_Q there.
pub fn porfin_factor(scene: &Scene) -> MultiPoly {
    let n = &scene.norm;
    let x = MultiPoly::var(Var::X);
    let y = MultiPoly::var(Var::Y);
    x.mul(&y)
        .scale(&(&n.a * rat(2) - &n.b * rat(2)))
        .add(&x.mul(&x).scale(&-&n.d))
        .add(&y.mul(&y).scale(&n.d))
        .add(&y.scale(&n.g))
        .sub(&x.scale(&n.h))
}

/// Exact rank of the 2x3 Jacobian of (T, Q) at a lifted point: 2 when some
/// minor is nonzero, else 1 when some entry is nonzero, else 0.
pub fn jacobian_rank_tq(
    pt: &AlgebraicPoint2D,
    lift: &Lift,
    scene: &Scene,
    set: &SubresultantSet,
) -> u8 {
    let minors: Vec<MultiPoly> = if lift.is_z_zero() {
        jacobian_minors_z0(scene).to_vec()
    } else {
        jacobian_minors(scene).to_vec()
    };
    for m in &minors {
        if !is_zero_at_lift(m, pt, lift, scene, set) {
            return 2;
        }
    }
    let d = &scene.derived;
    for p in [
        d.t.partial(Var::X),
        d.t.partial(Var::Y),
        d.t.partial(Var::Z),
        d.q.partial(Var::X),
        d.q.partial(Var::Y),
        d.q.partial(Var::Z),
    ] {
        if !is_zero_at_lift(&p, pt, lift, scene, set) {
            return 1;
        }
    }
    0
}

/// Do the plane curves f = 0 and g = 0 cross transversally at `pt`?
/// Both must vanish and be regular there; the verdict is the exact sign of
/// the Jacobian determinant.
pub fn transversal_at(
    f: &MultiPoly,
    g: &MultiPoly,
    pt: &AlgebraicPoint2D,
) -> Result<bool, LiftError> {
    if sign_at(f, pt) != Sign::Zero || sign_at(g, pt) != Sign::Zero {
        return Err(LiftError::NotACommonPoint(format!("{pt}")));
    }
    for (name, c) in [("first", f), ("second", g)] {
        let gx = sign_at(&c.partial(Var::X), pt);
        let gy = sign_at(&c.partial(Var::Y), pt);
        if gx == Sign::Zero && gy == Sign::Zero {
            return Err(LiftError::SingularOnInput(format!(
                "{name} curve has vanishing gradient at {pt}"
            )));
        }
    }
    Ok(sign_at(&jacobian_det(f, g), pt) != Sign::Zero)
}

/// Jacobian determinant d(f,g)/d(x,y).
pub fn jacobian_det(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    f.partial(Var::X)
        .mul(&g.partial(Var::Y))
        .sub(&f.partial(Var::Y).mul(&g.partial(Var::X)))
}

/// Non-transversality in the inclusive sense used by the classification:
/// the Jacobian determinant vanishes (covers tangency and singular inputs).
pub fn nontransversal_at(f: &MultiPoly, g: &MultiPoly, pt: &AlgebraicPoint2D) -> bool {
    sign_at(&jacobian_det(f, g), pt) == Sign::Zero
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cutcurve::compute_cutcurve;
    use crate::num::ratio;
    use crate::scene::{build_scene, QuadricSpec, TorusSpec};
    use crate::subres::torus_quadric_subresultants;

    fn mp(s: &str) -> MultiPoly {
        MultiPoly::parse(s).unwrap()
    }

    fn scene(r: Rat, big_r: Rat, c: [Rat; 10]) -> Scene {
        let [a, b, cc, d, e, f, g, h, i, j] = c;
        build_scene(
            TorusSpec { minor: r, major: big_r },
            QuadricSpec { a, b, c: cc, d, e, f, g, h, i, j },
        )
        .unwrap()
    }

    fn z() -> Rat {
        rat(0)
    }

    #[test]
    fn z0_minors_agree_with_generic_substitution() {
        let s = scene(
            rat(1),
            rat(4),
            [rat(1), rat(3), rat(1), rat(2), rat(0), rat(1), rat(-8), rat(1), rat(0), rat(15)],
        );
        let generic = jacobian_minors(&s);
        let closed = jacobian_minors_z0(&s);
        for (gm, cm) in generic.iter().zip(closed.iter()) {
            let at_zero = gm.substitute(Var::Z, &MultiPoly::zero());
            assert_eq!(at_zero, *cm);
        }
    }

    #[test]
    fn sphere_lifts_are_symmetric_pair() {
        // r=2, R=7 sphere: any cutcurve point satisfies z^2 = 495/196;
        // take the rational-x point on the circle 196(x^2+y^2) = 6561.
        let s = scene(
            rat(2),
            rat(7),
            [rat(1), rat(1), rat(1), z(), z(), z(), z(), z(), z(), rat(-36)],
        );
        let set = torus_quadric_subresultants(&s);
        let data = compute_cutcurve(&s);
        // point (81/14, 0) on the circle
        let pt = AlgebraicPoint2D::from_rational(
            ratio(81, 14),
            rat(0),
            (data.s0.clone(), mp("y")),
        );
        let lifts = lift_point(&pt, &s, &set, &data).unwrap();
        assert_eq!(lifts.len(), 2);
        for l in &lifts {
            // z^2 = -q0 = 36 - 6561/196 = 495/196, irrational sqrt
            assert!(l.exact_z().is_none());
            assert_eq!(l.hint, MultiplicityHint::SymmetricPair);
        }
        // both lifts are regular points (rank 2)
        for l in &lifts {
            assert_eq!(jacobian_rank_tq(&pt, l, &s, &set), 2);
        }
    }

    #[test]
    fn exact_symmetric_lift_with_rational_sqrt() {
        // Example scene: r=5, R=10 hyperboloid with (13,0) lifting to ±4
        let s = scene(
            rat(5),
            rat(10),
            [
                rat(-1), rat(2), rat(1), rat(4), rat(1),
                rat(2), rat(28), rat(-60), rat(-13), rat(-211),
            ],
        );
        let set = torus_quadric_subresultants(&s);
        let data = compute_cutcurve(&s);
        let pt = AlgebraicPoint2D::from_rational(rat(13), rat(0), (data.s0.clone(), mp("y")));
        let lifts = lift_point(&pt, &s, &set, &data).unwrap();
        assert_eq!(lifts.len(), 2);
        let zs: Vec<Rat> = lifts.iter().filter_map(|l| l.exact_z()).collect();
        assert!(zs.contains(&rat(4)) && zs.contains(&rat(-4)));
        // (13,0,4) is singular (rank 1), (13,0,-4) regular (rank 2)
        let plus = lifts.iter().find(|l| l.exact_z() == Some(rat(4))).unwrap();
        let minus = lifts.iter().find(|l| l.exact_z() == Some(rat(-4))).unwrap();
        assert_eq!(jacobian_rank_tq(&pt, plus, &s, &set), 1);
        assert_eq!(jacobian_rank_tq(&pt, minus, &s, &set), 2);
    }

    #[test]
    fn tangential_silhouette_point_lift() {
        // Example scene r=1, R=3 with triple point (2,0) lifting to (2,0,0)
        let s = scene(
            rat(1),
            rat(3),
            [rat(3), rat(3), rat(1), z(), rat(-1), rat(-1), rat(4), z(), rat(2), rat(-20)],
        );
        let set = torus_quadric_subresultants(&s);
        let data = compute_cutcurve(&s);
        let pt = AlgebraicPoint2D::from_rational(rat(2), rat(0), (data.s0.clone(), mp("y")));
        let lifts = lift_point(&pt, &s, &set, &data).unwrap();
        assert_eq!(lifts.len(), 1);
        assert!(lifts[0].is_z_zero());
        assert_eq!(lifts[0].hint, MultiplicityHint::OnPlaneZ0);
        // rank 1: the surfaces are tangent at (2,0,0)
        assert_eq!(jacobian_rank_tq(&pt, &lifts[0], &s, &set), 1);
        // delta_T and delta_Q meet non-transversally at (2,0)
        assert!(nontransversal_at(&s.derived.delta_t, &s.derived.delta_q, &pt));
    }

    #[test]
    fn off_curve_point_rejected() {
        let s = scene(
            rat(2),
            rat(7),
            [rat(1), rat(1), rat(1), z(), z(), z(), z(), z(), z(), rat(-36)],
        );
        let set = torus_quadric_subresultants(&s);
        let data = compute_cutcurve(&s);
        let pt = AlgebraicPoint2D::from_rational(rat(0), rat(0), (mp("x"), mp("y")));
        assert!(matches!(
            lift_point(&pt, &s, &set, &data),
            Err(LiftError::NotOnCutcurve(_))
        ));
    }

    #[test]
    fn transversality_of_coordinate_axes() {
        let pt = AlgebraicPoint2D::from_rational(rat(0), rat(0), (mp("x"), mp("y")));
        assert_eq!(transversal_at(&mp("x"), &mp("y"), &pt), Ok(true));
        // tangent curves: parabola and line
        let pt2 = AlgebraicPoint2D::from_rational(rat(0), rat(0), (mp("y - x^2"), mp("y")));
        assert_eq!(transversal_at(&mp("y - x^2"), &mp("y"), &pt2), Ok(false));
        assert!(matches!(
            transversal_at(&mp("x"), &mp("y"), &AlgebraicPoint2D::from_rational(rat(1), rat(1), (mp("x"), mp("y")))),
            Err(LiftError::NotACommonPoint(_))
        ));
        // singular input: node of y^2 - x^2 at origin
        assert!(matches!(
            transversal_at(&mp("y^2 - x^2"), &mp("y"), &pt),
            Err(LiftError::SingularOnInput(_))
        ));
    }
}
