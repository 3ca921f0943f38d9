//! Singularity detection on the cutcurve and the full classification
//! decision tree: given a cutcurve point, decide which of its lifts are
//! singular points of the intersection curve.

use crate::alg2d::{
    dedup_points, sign_at, solve_system2, solve_system3, try_sign_at, AlgebraicPoint2D, SolveError,
};
use crate::cutcurve::CutcurveData;
use crate::gcd::gcd_poly;
use crate::lift::{
    jacobian_rank_tq, lift_point, nontransversal_at, porfin_factor, Lift, LiftError,
};
use crate::num::Sign;
use crate::poly::{MultiPoly, Var};
use crate::scene::Scene;
use crate::subres::SubresultantSet;
use std::fmt;

/// Which branch of the decision diagrams applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaseLabel {
    Q1ZeroOffDeltaT,
    Q1ZeroOnDeltaT,
    Q1NonzeroOffDeltaT,
    Q1NonzeroOnDeltaT,
    Q1VanishesHereDivides,
    Q1VanishesHereNotDividesOffDeltaT,
    Q1VanishesHereNotDividesOnDeltaT,
    ConeVertex,
    IsolatedPoint,
}

impl CaseLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseLabel::Q1ZeroOffDeltaT => "Q1Zero_OffDeltaT",
            CaseLabel::Q1ZeroOnDeltaT => "Q1Zero_OnDeltaT",
            CaseLabel::Q1NonzeroOffDeltaT => "Q1Nonzero_OffDeltaT",
            CaseLabel::Q1NonzeroOnDeltaT => "Q1Nonzero_OnDeltaT",
            CaseLabel::Q1VanishesHereDivides => "Q1VanishesHere_Divides",
            CaseLabel::Q1VanishesHereNotDividesOffDeltaT => "Q1VanishesHere_NotDivides_OffDeltaT",
            CaseLabel::Q1VanishesHereNotDividesOnDeltaT => "Q1VanishesHere_NotDivides_OnDeltaT",
            CaseLabel::ConeVertex => "ConeVertex",
            CaseLabel::IsolatedPoint => "IsolatedPoint",
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Regular,
    Singular,
    Unknown,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Regular => "Regular",
            Verdict::Singular => "Singular",
            Verdict::Unknown => "Unknown",
        }
    }
}

/// Exact evidence recorded alongside each classification.
#[derive(Clone, Debug)]
pub struct Evidence {
    pub q1_sign: Sign,
    pub delta_t_sign: Sign,
    pub delta_q_sign: Sign,
    pub jacobian_ranks: Vec<u8>,
}

#[derive(Clone, Debug)]
pub struct ClassifiedPoint {
    pub location: AlgebraicPoint2D,
    pub case: CaseLabel,
    pub cutcurve_singular: bool,
    pub lifts: Vec<(Lift, Verdict)>,
    pub evidence: Evidence,
}

#[derive(Clone, Debug)]
pub enum ClassifyError {
    Lift(LiftError),
    Solve(SolveError),
}

impl fmt::Display for ClassifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassifyError::Lift(e) => write!(f, "{e}"),
            ClassifyError::Solve(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for ClassifyError {}

impl From<LiftError> for ClassifyError {
    fn from(e: LiftError) -> Self {
        ClassifyError::Lift(e)
    }
}

impl From<SolveError> for ClassifyError {
    fn from(e: SolveError) -> Self {
        ClassifyError::Solve(e)
    }
}

/// All singular points of the cutcurve: real solutions of
/// { S0 = dS0/dx = dS0/dy = 0 } inside the admissible region, united with
/// the cutcurve points on q1 = 0 when the resultant is squarefree.
pub fn singular_points_of_cutcurve(
    data: &CutcurveData,
    scene: &Scene,
) -> Result<Vec<AlgebraicPoint2D>, SolveError> {
    let s0 = &data.s0;
    if s0.is_constant() {
        return Ok(Vec::new());
    }
    let sx = s0.partial(Var::X);
    let sy = s0.partial(Var::Y);
    if sx.is_zero() || sy.is_zero() {
        // s0 depends on one variable only; a squarefree curve of that shape
        // has no singular points
        return Ok(Vec::new());
    }
    let mut pts: Vec<AlgebraicPoint2D> = solve_system3(s0, &sx, &sy)?;

    // Cutcurve points on the line q1 = 0 are singular when the resultant is
    // squarefree (vanishing partials of the resultant).
    if !scene.q1_identically_zero()
        && scene.derived.q1.total_degree().unwrap_or(0) >= 1
        && data.multiple_part.is_one()
    {
        if let Ok(extra) = solve_system2(s0, &scene.derived.q1) {
            pts.extend(extra);
        }
    }

    // region filter
    let pts = pts
        .into_iter()
        .filter(|p| {
            sign_at(&scene.derived.delta_t, p) != Sign::Pos
                && sign_at(&scene.derived.delta_q, p) != Sign::Neg
        })
        .collect();
    Ok(dedup_points(pts))
}

/// Settings threaded through classification.
#[derive(Clone, Copy, Debug)]
pub struct ClassifyOptions {
    /// Bisection budget per sign certification.
    pub budget: usize,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions { budget: 10_000 }
    }
}

/// Nonconstant q1 dividing S0, the hinge of the third decision diagram.
pub fn q1_divides_s0(data: &CutcurveData, scene: &Scene) -> bool {
    let q1 = &scene.derived.q1;
    if q1.total_degree().unwrap_or(0) < 1 {
        return false;
    }
    data.s0.divide_exact(q1).is_ok()
}

/// Classify one certified cutcurve point per the decision diagrams.
pub fn classify_point(
    pt: &AlgebraicPoint2D,
    data: &CutcurveData,
    scene: &Scene,
    set: &SubresultantSet,
    opts: &ClassifyOptions,
) -> Result<ClassifiedPoint, ClassifyError> {
    let d = &scene.derived;
    let lifts = lift_point(pt, scene, set, data)?;

    let q1_sign = if scene.q1_identically_zero() {
        Sign::Zero
    } else {
        sign_at(&d.q1, pt)
    };
    let dt_sign = sign_at(&d.delta_t, pt);
    let dq_sign = sign_at(&d.delta_q, pt);

    // singularity of the plane curve S0 = 0 at pt
    let sx = try_sign_at(&data.s0.partial(Var::X), pt, opts.budget);
    let sy = try_sign_at(&data.s0.partial(Var::Y), pt, opts.budget);
    let (cut_sing, budget_blown) = match (sx, sy) {
        (Some(a), Some(b)) => (a == Sign::Zero && b == Sign::Zero, false),
        _ => (false, true),
    };

    let mut ranks: Vec<u8> = Vec::new();
    let verdicts: Vec<Verdict>;
    let case: CaseLabel;

    // Cone vertex on the torus takes precedence when this is its shadow.
    let vertex_here = scene.vertex_on_torus().and_then(|v| {
        let vp = AlgebraicPoint2D::from_rational(
            v.0.clone(),
            v.1.clone(),
            (data.s0.clone(), MultiPoly::zero()),
        );
        if vp.same_point(pt) {
            Some(v)
        } else {
            None
        }
    });

    if budget_blown {
        case = diagram_case(scene, data, q1_sign, dt_sign);
        verdicts = vec![Verdict::Unknown; lifts.len()];
    } else if let Some(v) = vertex_here {
        case = CaseLabel::ConeVertex;
        // the vertex lift is singular unconditionally; any companion lift
        // cannot also be singular when q1 is not identically zero
        verdicts = lifts
            .iter()
            .map(|l| {
                let matches_vertex = match l.exact_z() {
                    Some(z) => z == v.2,
                    None => l.enclosure.lo <= v.2 && v.2 <= l.enclosure.hi,
                };
                if matches_vertex {
                    Verdict::Singular
                } else if !scene.q1_identically_zero() {
                    Verdict::Regular
                } else {
                    rank_verdict(jacobian_rank_tq(pt, l, scene, set))
                }
            })
            .collect();
        for l in &lifts {
            ranks.push(jacobian_rank_tq(pt, l, scene, set));
        }
    } else if scene.q1_identically_zero() {
        if dt_sign != Sign::Zero {
            // symmetric pair off the torus silhouette: the pair shares the
            // cutcurve verdict
            case = CaseLabel::Q1ZeroOffDeltaT;
            let v = if cut_sing {
                Verdict::Singular
            } else {
                Verdict::Regular
            };
            verdicts = vec![v; lifts.len()];
        } else {
            // single lift in the plane z = 0
            case = CaseLabel::Q1ZeroOnDeltaT;
            let dq_comp = delta_q_component_of(&d.delta_q, &data.s0);
            let nontrans = nontransversal_at(&d.delta_q, &data.s0, pt);
            let singular = nontrans && !dq_comp;
            verdicts = vec![if singular { Verdict::Singular } else { Verdict::Regular }];
        }
    } else if q1_sign != Sign::Zero {
        if dt_sign != Sign::Zero {
            case = CaseLabel::Q1NonzeroOffDeltaT;
            let v = if cut_sing {
                Verdict::Singular
            } else {
                Verdict::Regular
            };
            verdicts = vec![v; lifts.len()];
        } else {
            // both the point and its lift (x0, y0, 0) are regular
            case = CaseLabel::Q1NonzeroOnDeltaT;
            verdicts = vec![Verdict::Regular; lifts.len()];
        }
    } else {
        // q1 not identically zero, q1(pt) = 0
        if q1_divides_s0(data, scene) {
            case = CaseLabel::Q1VanishesHereDivides;
            let q0_sign = sign_at(&d.q0, pt);
            if q0_sign == Sign::Zero {
                verdicts = vec![Verdict::Singular; lifts.len()];
            } else {
                let cofactor = data
                    .s0
                    .divide_exact(&d.q1)
                    .expect("q1 divides S0")
                    .normalized();
                if sign_at(&cofactor, pt) == Sign::Zero {
                    // crossing of the meridian with another branch: exactly
                    // one of the two lifts is singular, identified by rank
                    for l in &lifts {
                        ranks.push(jacobian_rank_tq(pt, l, scene, set));
                    }
                    verdicts = verdicts_from_ranks(&ranks);
                } else {
                    verdicts = vec![Verdict::Regular; lifts.len()];
                }
            }
        } else if dt_sign == Sign::Zero {
            // single lift (x0, y0, 0); singular iff the silhouettes meet
            // non-transversally, decided by the reduced factor
            case = CaseLabel::Q1VanishesHereNotDividesOnDeltaT;
            let tangency = sign_at(&porfin_factor(scene), pt) == Sign::Zero;
            verdicts = vec![if tangency { Verdict::Singular } else { Verdict::Regular }];
        } else {
            case = CaseLabel::Q1VanishesHereNotDividesOffDeltaT;
            if !cut_sing {
                // on a multiple component through the line q1 = 0: smooth
                verdicts = vec![Verdict::Regular; lifts.len()];
            } else {
                // double point with two transversal branches lifts to two
                // regular points; higher multiplicity sends exactly one
                // singular lift, identified by rank
                for l in &lifts {
                    ranks.push(jacobian_rank_tq(pt, l, scene, set));
                }
                let mult2 = second_jet_nonzero(&data.s0, pt);
                if mult2 && ranks.iter().all(|&r| r == 2) {
                    verdicts = vec![Verdict::Regular; lifts.len()];
                } else {
                    verdicts = verdicts_from_ranks(&ranks);
                }
            }
        }
    }

    Ok(ClassifiedPoint {
        location: pt.clone(),
        case,
        cutcurve_singular: cut_sing,
        lifts: lifts.into_iter().zip(verdicts).collect(),
        evidence: Evidence {
            q1_sign,
            delta_t_sign: dt_sign,
            delta_q_sign: dq_sign,
            jacobian_ranks: ranks,
        },
    })
}

fn diagram_case(scene: &Scene, data: &CutcurveData, q1_sign: Sign, dt_sign: Sign) -> CaseLabel {
    if scene.q1_identically_zero() {
        if dt_sign == Sign::Zero {
            CaseLabel::Q1ZeroOnDeltaT
        } else {
            CaseLabel::Q1ZeroOffDeltaT
        }
    } else if q1_sign != Sign::Zero {
        if dt_sign == Sign::Zero {
            CaseLabel::Q1NonzeroOnDeltaT
        } else {
            CaseLabel::Q1NonzeroOffDeltaT
        }
    } else if q1_divides_s0(data, scene) {
        CaseLabel::Q1VanishesHereDivides
    } else if dt_sign == Sign::Zero {
        CaseLabel::Q1VanishesHereNotDividesOnDeltaT
    } else {
        CaseLabel::Q1VanishesHereNotDividesOffDeltaT
    }
}

fn rank_verdict(rank: u8) -> Verdict {
    if rank == 2 {
        Verdict::Regular
    } else {
        Verdict::Singular
    }
}

/// Exactly one lift is singular (rank < 2); when ranks cannot separate the
/// pair the verdicts stay Unknown rather than guessed.
fn verdicts_from_ranks(ranks: &[u8]) -> Vec<Verdict> {
    let low = ranks.iter().filter(|&&r| r < 2).count();
    if low == 1 || ranks.len() == 1 {
        ranks.iter().map(|&r| rank_verdict(r)).collect()
    } else {
        vec![Verdict::Unknown; ranks.len()]
    }
}

/// Is the squarefree part of delta_Q a divisor of S0 (delta_Q a component)?
fn delta_q_component_of(delta_q: &MultiPoly, s0: &MultiPoly) -> bool {
    let sf = match crate::gcd::squarefree_part(delta_q) {
        Ok(p) => p,
        Err(_) => return false,
    };
    if sf.is_constant() {
        return false;
    }
    s0.divide_exact(&sf).is_ok()
}

/// Some second-order partial of S0 does not vanish at pt (double point).
fn second_jet_nonzero(s0: &MultiPoly, pt: &AlgebraicPoint2D) -> bool {
    for (v1, v2) in [(Var::X, Var::X), (Var::X, Var::Y), (Var::Y, Var::Y)] {
        let p2 = s0.partial(v1).partial(v2);
        if sign_at(&p2, pt) != Sign::Zero {
            return true;
        }
    }
    false
}

/// Convenience: does a gcd-nontrivial pair exist among the singular system?
pub fn has_shared_component(f: &MultiPoly, g: &MultiPoly) -> bool {
    !gcd_poly(f, g).is_constant()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cutcurve::compute_cutcurve;
    use crate::num::{rat, ratio, Rat};
    use crate::scene::{build_scene, QuadricSpec, TorusSpec};
    use crate::subres::torus_quadric_subresultants;

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

    fn classify_all(s: &Scene) -> Vec<ClassifiedPoint> {
        let set = torus_quadric_subresultants(s);
        let data = compute_cutcurve(s);
        let pts = singular_points_of_cutcurve(&data, s).unwrap();
        pts.iter()
            .map(|p| classify_point(p, &data, s, &set, &ClassifyOptions::default()).unwrap())
            .collect()
    }

    #[test]
    fn sphere_has_no_singularities() {
        let s = scene(
            rat(2),
            rat(7),
            [rat(1), rat(1), rat(1), z(), z(), z(), z(), z(), z(), rat(-36)],
        );
        let data = compute_cutcurve(&s);
        assert!(singular_points_of_cutcurve(&data, &s).unwrap().is_empty());
    }

    #[test]
    fn tilted_ellipsoid_four_singular_points_all_regular_lifts() {
        // r=3/2, R=3, z^2 - (3/5)xz + (3/4)x^2 + (3/25)y^2 - 3
        let s = scene(
            ratio(3, 2),
            rat(3),
            [
                ratio(3, 4), ratio(3, 25), rat(1), z(), ratio(-3, 5),
                z(), z(), z(), z(), rat(-3),
            ],
        );
        let classified = classify_all(&s);
        assert_eq!(classified.len(), 4);
        for c in &classified {
            // all on the line q1 = 0, i.e. x = 0
            assert_eq!(sign_at(&MultiPoly::var(Var::X), &c.location), Sign::Zero);
            assert!(c.cutcurve_singular);
            assert_eq!(c.case, CaseLabel::Q1VanishesHereNotDividesOffDeltaT);
            assert_eq!(c.lifts.len(), 2);
            for (_, v) in &c.lifts {
                assert_eq!(*v, Verdict::Regular);
            }
        }
    }

    #[test]
    fn generic_ellipsoid_two_singularities_one_lifted_singular() {
        // r=1, R=3 ellipsoid with q1 = (10/21)(x + y) - 5/42
        let s = scene(
            rat(1),
            rat(3),
            [
                ratio(5, 3), ratio(5, 12), rat(1), z(), ratio(10, 21),
                ratio(10, 21), ratio(10, 3), ratio(-5, 12), ratio(-5, 42), ratio(-155, 48),
            ],
        );
        let classified = classify_all(&s);
        assert_eq!(classified.len(), 2);
        let on_line: Vec<_> = classified
            .iter()
            .filter(|c| c.evidence.q1_sign == Sign::Zero)
            .collect();
        let off_line: Vec<_> = classified
            .iter()
            .filter(|c| c.evidence.q1_sign != Sign::Zero)
            .collect();
        assert_eq!(on_line.len(), 1);
        assert_eq!(off_line.len(), 1);
        // the q1 = 0 point lifts to two regular points
        assert_eq!(on_line[0].lifts.len(), 2);
        assert!(on_line[0]
            .lifts
            .iter()
            .all(|(_, v)| *v == Verdict::Regular));
        // the other lifts to a single singular point at z != 0
        assert_eq!(off_line[0].lifts.len(), 1);
        assert_eq!(off_line[0].lifts[0].1, Verdict::Singular);
        assert!(!off_line[0].lifts[0].0.is_z_zero());
        assert_eq!(off_line[0].case, CaseLabel::Q1NonzeroOffDeltaT);
    }

    #[test]
    fn tangent_ellipsoid_triple_point_singular() {
        // r=1, R=3 with singular lift at (2,0,0)
        let s = scene(
            rat(1),
            rat(3),
            [rat(3), rat(3), rat(1), z(), rat(-1), rat(-1), rat(4), z(), rat(2), rat(-20)],
        );
        let classified = classify_all(&s);
        assert_eq!(classified.len(), 2);
        let at_two = classified
            .iter()
            .find(|c| c.location.exact_xy() == Some((rat(2), rat(0))))
            .expect("(2,0) is singular on the cutcurve");
        assert_eq!(at_two.case, CaseLabel::Q1VanishesHereNotDividesOnDeltaT);
        assert_eq!(at_two.lifts.len(), 1);
        assert!(at_two.lifts[0].0.is_z_zero());
        assert_eq!(at_two.lifts[0].1, Verdict::Singular);
        // the other point has two regular lifts
        let other = classified
            .iter()
            .find(|c| c.location.exact_xy() != Some((rat(2), rat(0))))
            .unwrap();
        assert!(other.lifts.iter().all(|(_, v)| *v == Verdict::Regular));
        assert_eq!(other.lifts.len(), 2);
    }

    #[test]
    fn oblique_cone_meridian_crossing() {
        // r=1, R=4 cone: (4,0) lifts to (4,0,1) regular and (4,0,-1) singular
        let s = scene(
            rat(1),
            rat(4),
            [rat(1), z(), rat(1), z(), z(), rat(1), rat(-8), rat(1), z(), rat(15)],
        );
        let set = torus_quadric_subresultants(&s);
        let data = compute_cutcurve(&s);
        assert!(q1_divides_s0(&data, &s));
        let pt = AlgebraicPoint2D::from_rational(rat(4), rat(0), (data.s0.clone(), MultiPoly::zero()));
        let c = classify_point(&pt, &data, &s, &set, &ClassifyOptions::default()).unwrap();
        assert_eq!(c.case, CaseLabel::Q1VanishesHereDivides);
        let mut zs: Vec<(Rat, Verdict)> = c
            .lifts
            .iter()
            .map(|(l, v)| (l.exact_z().unwrap(), *v))
            .collect();
        zs.sort_by(|a, b| a.0.cmp(&b.0));
        assert_eq!(zs[0], (rat(-1), Verdict::Singular));
        assert_eq!(zs[1], (rat(1), Verdict::Regular));
    }

    #[test]
    fn hyperboloid_13_0_split_verdicts() {
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
        let pt = AlgebraicPoint2D::from_rational(rat(13), rat(0), (data.s0.clone(), MultiPoly::zero()));
        let c = classify_point(&pt, &data, &s, &set, &ClassifyOptions::default()).unwrap();
        assert!(c.cutcurve_singular);
        assert_eq!(c.case, CaseLabel::Q1VanishesHereNotDividesOffDeltaT);
        let verdict_of = |z: i64| {
            c.lifts
                .iter()
                .find(|(l, _)| l.exact_z() == Some(rat(z)))
                .map(|(_, v)| *v)
                .unwrap()
        };
        assert_eq!(verdict_of(4), Verdict::Singular);
        assert_eq!(verdict_of(-4), Verdict::Regular);
    }

    #[test]
    fn villarceau_two_singularities_both_singular_lifts() {
        // rational two-Villarceau-circle scene: r=3, R=5, sphere centered
        // (-3, 3, 4) with radius^2 = 50
        let s = scene(
            rat(3),
            rat(5),
            [
                rat(1), rat(1), rat(1), z(), z(),
                z(), rat(6), rat(-6), rat(-8), rat(-16),
            ],
        );
        let classified = classify_all(&s);
        assert_eq!(classified.len(), 2);
        for c in &classified {
            assert!(c.cutcurve_singular);
            assert_eq!(c.case, CaseLabel::Q1NonzeroOffDeltaT);
            assert_eq!(c.lifts.len(), 1);
            assert_eq!(c.lifts[0].1, Verdict::Singular);
            // crossing points lie on x + y = 0 with irrational coordinates
            assert!(c.location.exact_xy().is_none());
            let sum = MultiPoly::var(Var::X).add(&MultiPoly::var(Var::Y));
            assert_eq!(sign_at(&sum, &c.location), Sign::Zero);
        }
    }

    #[test]
    fn cone_vertex_is_singular() {
        let s = scene(
            rat(4),
            rat(6),
            [rat(-1), rat(-1), rat(1), z(), z(), z(), rat(4), z(), z(), rat(-4)],
        );
        let set = torus_quadric_subresultants(&s);
        let data = compute_cutcurve(&s);
        let pt = AlgebraicPoint2D::from_rational(rat(2), rat(0), (data.s0.clone(), MultiPoly::zero()));
        let c = classify_point(&pt, &data, &s, &set, &ClassifyOptions::default()).unwrap();
        assert_eq!(c.case, CaseLabel::ConeVertex);
        assert_eq!(c.lifts.len(), 1);
        assert!(c.lifts[0].0.is_z_zero());
        assert_eq!(c.lifts[0].1, Verdict::Singular);
    }
}
