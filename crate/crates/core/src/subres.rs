//! Subresultants of the torus and quadric polynomials in z.
//!
//! Two routes are kept deliberately: the generic determinant-polynomial
//! route over the Sylvester matrix, and the closed forms
//!   sres1   = q1 (q1^2 + p2 - 2 q0)
//!   sres1,0 = q0 q1^2 + p2 q0 - q0^2 - p0
//!   Sres0   = sres1,0^2 + sres1 q1 (p0 - q0^2)
//! The closed forms are the production path; the matrix route is the
//! cross-validating oracle.

use crate::matrix::PolyMatrix;
use crate::poly::{MultiPoly, PolyError, Var};
use crate::scene::Scene;

/// The resultant and first subresultant data for a scene:
/// Sres1 = sres1 * z + sres10, Sres0 = s0_tilde.
#[derive(Clone, Debug)]
pub struct SubresultantSet {
    pub s0_tilde: MultiPoly,
    pub sres1: MultiPoly,
    pub sres10: MultiPoly,
}

/// i-th subresultant polynomial of A (degree m in z) and B (degree n in z)
/// via the determinant polynomial of the Sylvester submatrix with n-i rows
/// of A coefficients and m-i rows of B coefficients.
pub fn sylvester_sres(a: &MultiPoly, b: &MultiPoly, i: u32) -> Result<MultiPoly, PolyError> {
    let m = a.degree_in(Var::Z).unwrap_or(0) as usize;
    let n = b.degree_in(Var::Z).unwrap_or(0) as usize;
    let i = i as usize;
    if i >= m.min(n) {
        return Err(PolyError::ShapeError(format!(
            "subresultant index {i} out of range for degrees {m}, {n}"
        )));
    }
    let ac = a.coeffs_in(Var::Z);
    let bc = b.coeffs_in(Var::Z);
    if ac[m].is_zero() || bc[n].is_zero() {
        return Err(PolyError::ShapeError(
            "leading z-coefficients must be nonzero".into(),
        ));
    }
    let rows = n + m - 2 * i;
    let cols = n + m - i;
    let mat = PolyMatrix::from_fn(rows, cols, |r, cidx| {
        if r < n - i {
            // row of A coefficients (descending), shifted right by r
            let k = m as isize - (cidx as isize - r as isize);
            if (0..=m as isize).contains(&k) {
                ac[k as usize].clone()
            } else {
                MultiPoly::zero()
            }
        } else {
            let r2 = r - (n - i);
            let k = n as isize - (cidx as isize - r2 as isize);
            if (0..=n as isize).contains(&k) {
                bc[k as usize].clone()
            } else {
                MultiPoly::zero()
            }
        }
    });
    mat.detpol()
}

/// Closed-form subresultant set of (T, Q) for a validated scene.
pub fn torus_quadric_subresultants(scene: &Scene) -> SubresultantSet {
    let d = &scene.derived;
    let q1sq = d.q1.mul(&d.q1);
    let q0sq = d.q0.mul(&d.q0);
    let two_q0 = d.q0.scale(&crate::num::rat(2));
    let sres1 = d.q1.mul(&q1sq.add(&d.p2).sub(&two_q0));
    let sres10 = d
        .q0
        .mul(&q1sq)
        .add(&d.p2.mul(&d.q0))
        .sub(&q0sq)
        .sub(&d.p0);
    let s0_tilde = sres10
        .mul(&sres10)
        .add(&sres1.mul(&d.q1).mul(&d.p0.sub(&q0sq)));
    SubresultantSet {
        s0_tilde,
        sres1,
        sres10,
    }
}

impl SubresultantSet {
    /// Sres1 as a polynomial in z.
    pub fn sres1_poly(&self) -> MultiPoly {
        self.sres1
            .mul(&MultiPoly::var(Var::Z))
            .add(&self.sres10)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{rat, ratio, Rat};
    use num_traits::Zero;
    use crate::scene::{build_scene, QuadricSpec, TorusSpec};

    fn mp(s: &str) -> MultiPoly {
        MultiPoly::parse(s).unwrap()
    }

    fn scene_from(r: Rat, big_r: Rat, coeffs: [Rat; 10]) -> Scene {
        let [a, b, c, d, e, f, g, h, i, j] = coeffs;
        build_scene(
            TorusSpec { minor: r, major: big_r },
            QuadricSpec { a, b, c, d, e, f, g, h, i, j },
        )
        .unwrap()
    }

    fn sphere_scene() -> Scene {
        scene_from(
            rat(2),
            rat(7),
            [
                rat(1), rat(1), rat(1), rat(0), rat(0),
                rat(0), rat(0), rat(0), rat(0), rat(-36),
            ],
        )
    }

    #[test]
    fn resultant_vanishes_for_shared_factor() {
        // A = (z^2 + x) * (z^2 - y), B = z^2 + x: Sres0 must vanish
        let b = mp("z^2 + x");
        let a = b.mul(&mp("z^2 - y"));
        assert!(sylvester_sres(&a, &b, 0).unwrap().is_zero());
    }

    #[test]
    fn closed_forms_match_matrix_route_for_sphere() {
        let s = sphere_scene();
        let set = torus_quadric_subresultants(&s);
        let m0 = sylvester_sres(&s.derived.t, &s.derived.q, 0).unwrap();
        let m1 = sylvester_sres(&s.derived.t, &s.derived.q, 1).unwrap();
        assert_eq!(set.s0_tilde, m0);
        assert_eq!(set.sres1_poly(), m1);
        // q1 == 0 forces sres1 == 0
        assert!(set.sres1.is_zero());
        // and the expected resultant of the sphere example
        let circle = mp("196*x^2 + 196*y^2 - 6561");
        assert_eq!(set.s0_tilde.normalized(), circle.mul(&circle).normalized());
    }

    #[test]
    fn cylinder_scene_sres1_factor() {
        // Example with q1 = 2y: (x-4)^2 + (z+y)^2 - 1
        let s = scene_from(
            rat(1),
            rat(4),
            [
                rat(1), rat(1), rat(1), rat(0), rat(0),
                rat(2), rat(-8), rat(0), rat(0), rat(15),
            ],
        );
        let set = torus_quadric_subresultants(&s);
        // sres1 = q1 (q1^2 + p2 - 2 q0) with q1 = 2y
        assert!(set.sres1.divide_exact(&mp("y")).is_ok());
        let expected = mp("2*y").mul(
            &mp("4*y^2")
                .add(&s.derived.p2)
                .sub(&s.derived.q0.scale(&rat(2))),
        );
        assert_eq!(set.sres1, expected);
    }

    #[test]
    fn closed_forms_match_matrix_on_random_scenes() {
        let mut state = 0x7c3d9f2b5a1ee301u64;
        let mut rnd = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for case in 0..12 {
            let r = ratio((rnd() % 5) as i64 + 1, 2);
            let big_r = &r + ratio((rnd() % 9) as i64 + 1, 1);
            let mut draws: Vec<Rat> = (0..10).map(|_| ratio((rnd() % 21) as i64 - 10, 1)).collect();
            if draws[2].is_zero() {
                draws[2] = rat(1);
            }
            let q = QuadricSpec {
                a: draws[0].clone(), b: draws[1].clone(), c: draws[2].clone(),
                d: draws[3].clone(), e: draws[4].clone(), f: draws[5].clone(),
                g: draws[6].clone(), h: draws[7].clone(), i: draws[8].clone(), j: draws[9].clone(),
            };
            let s = match build_scene(TorusSpec { minor: r, major: big_r }, q) {
                Ok(s) => s,
                Err(_) => continue, // rank-degenerate draw
            };
            let set = torus_quadric_subresultants(&s);
            assert_eq!(
                set.s0_tilde,
                sylvester_sres(&s.derived.t, &s.derived.q, 0).unwrap(),
                "case {case}"
            );
            assert_eq!(
                set.sres1_poly(),
                sylvester_sres(&s.derived.t, &s.derived.q, 1).unwrap(),
                "case {case}"
            );
            // Eq. (4) identity
            let q0sq = s.derived.q0.mul(&s.derived.q0);
            let identity = set
                .s0_tilde
                .sub(&set.sres10.mul(&set.sres10))
                .sub(&set.sres1.mul(&s.derived.q1).mul(&s.derived.p0.sub(&q0sq)));
            assert!(identity.is_zero(), "case {case}");
        }
    }

    #[test]
    fn index_out_of_range() {
        let s = sphere_scene();
        assert!(sylvester_sres(&s.derived.t, &s.derived.q, 2).is_err());
    }

    #[test]
    fn gcd_degree_equivalence_at_points() {
        // deg gcd(T(x0,y0,z), Q(x0,y0,z)) equals the first index i with
        // sres_i(x0,y0) != 0.
        use crate::unipoly::UniPoly;
        let s = scene_from(
            rat(1),
            rat(4),
            [
                rat(1), rat(1), rat(1), rat(0), rat(0),
                rat(2), rat(-8), rat(0), rat(0), rat(15),
            ],
        );
        let set = torus_quadric_subresultants(&s);
        let mut state = 0x2545f4914f6cdd1du64;
        let mut rnd = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            ratio((state % 17) as i64 - 8, ((state >> 32) % 5 + 1) as i64)
        };
        for _ in 0..60 {
            let (x0, y0) = (rnd(), rnd());
            let tz = UniPoly::from_multi(
                &s.derived
                    .t
                    .substitute(Var::X, &MultiPoly::constant(x0.clone()))
                    .substitute(Var::Y, &MultiPoly::constant(y0.clone())),
                Var::Z,
            );
            let qz = UniPoly::from_multi(
                &s.derived
                    .q
                    .substitute(Var::X, &MultiPoly::constant(x0.clone()))
                    .substitute(Var::Y, &MultiPoly::constant(y0.clone())),
                Var::Z,
            );
            let gcd_deg = tz.gcd(&qz).degree().unwrap_or(0);
            let s0v = set.s0_tilde.eval(&x0, &y0, &rat(0));
            let s1v = set.sres1.eval(&x0, &y0, &rat(0));
            let first_nonzero = if !s0v.is_zero() {
                0
            } else if !s1v.is_zero() {
                1
            } else {
                2
            };
            assert_eq!(gcd_deg, first_nonzero, "at ({x0}, {y0})");
        }
    }
}
