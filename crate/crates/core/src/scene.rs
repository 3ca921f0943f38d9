//! Scene validation: a ring torus paired with an irreducible quadric, and
//! every polynomial derived from them.
//!
//! The torus is T = z^4 + p2 z^2 + p0 with
//!   p2 = 2(R^2 - r^2 + x^2 + y^2),
//!   p0 = (R^2 + 2Rr + r^2 - x^2 - y^2)(R^2 - 2Rr + r^2 - x^2 - y^2),
//! and the quadric a x^2 + b y^2 + c z^2 + d xy + e xz + f yz + g x + h y +
//! i z + j is normalized monic in z (divide by c), giving
//! Q = z^2 + q1 z + q0 with q1 = e x + f y + i and q0 the rest.

use crate::num::{parse_rat, rat, Rat, Sign};
use crate::poly::{MultiPoly, Var};
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, Debug, PartialEq)]
pub struct TorusSpec {
    /// minor radius r
    pub minor: Rat,
    /// major radius R
    pub major: Rat,
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuadricSpec {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
    pub d: Rat,
    pub e: Rat,
    pub f: Rat,
    pub g: Rat,
    pub h: Rat,
    pub i: Rat,
    pub j: Rat,
}

impl QuadricSpec {
    pub fn coeffs(&self) -> [(&'static str, &Rat); 10] {
        [
            ("a", &self.a),
            ("b", &self.b),
            ("c", &self.c),
            ("d", &self.d),
            ("e", &self.e),
            ("f", &self.f),
            ("g", &self.g),
            ("h", &self.h),
            ("i", &self.i),
            ("j", &self.j),
        ]
    }

    /// Coefficients divided by c (monic in z).
    pub fn normalized(&self) -> QuadricSpec {
        let c = &self.c;
        QuadricSpec {
            a: &self.a / c,
            b: &self.b / c,
            c: Rat::one(),
            d: &self.d / c,
            e: &self.e / c,
            f: &self.f / c,
            g: &self.g / c,
            h: &self.h / c,
            i: &self.i / c,
            j: &self.j / c,
        }
    }

    /// The quadric as a polynomial.
    pub fn poly(&self) -> MultiPoly {
        let x = MultiPoly::var(Var::X);
        let y = MultiPoly::var(Var::Y);
        let z = MultiPoly::var(Var::Z);
        let c = |v: &Rat| MultiPoly::constant(v.clone());
        x.mul(&x).scale(&self.a)
            .add(&y.mul(&y).scale(&self.b))
            .add(&z.mul(&z).scale(&self.c))
            .add(&x.mul(&y).scale(&self.d))
            .add(&x.mul(&z).scale(&self.e))
            .add(&y.mul(&z).scale(&self.f))
            .add(&x.scale(&self.g))
            .add(&y.scale(&self.h))
            .add(&z.scale(&self.i))
            .add(&c(&self.j))
    }
}

/// All scene polynomials (for the monic-normalized quadric).
#[derive(Clone, Debug)]
pub struct SceneDerived {
    pub t: MultiPoly,
    pub q: MultiPoly,
    pub p2: MultiPoly,
    pub p0: MultiPoly,
    pub q1: MultiPoly,
    pub q0: MultiPoly,
    pub delta_t: MultiPoly,
    pub delta_q: MultiPoly,
}

#[derive(Clone, Debug)]
pub struct Scene {
    pub torus: TorusSpec,
    /// Quadric as given.
    pub quadric: QuadricSpec,
    /// Quadric normalized monic in z.
    pub norm: QuadricSpec,
    pub derived: SceneDerived,
    /// Rank of the 4x4 symmetric matrix of the quadric.
    pub rank: u32,
    /// Vertex when the quadric is a cone with rational vertex.
    pub vertex: Option<(Rat, Rat, Rat)>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum SceneError {
    NotRingTorus(String),
    DegenerateQuadric(String),
    Parse { line: usize, msg: String },
}

impl fmt::Display for SceneError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SceneError::NotRingTorus(m) => write!(f, "not a ring torus: {m}"),
            SceneError::DegenerateQuadric(m) => write!(f, "degenerate quadric: {m}"),
            SceneError::Parse { line, msg } => write!(f, "scene file line {line}: {msg}"),
        }
    }
}

impl std::error::Error for SceneError {}

/// Rank of the 4x4 symmetric coefficient matrix over Q, by fraction-free
/// elimination.
pub fn quadric_rank(q: &QuadricSpec) -> u32 {
    let two = rat(2);
    let h = |v: &Rat| v / &two;
    let mut m: Vec<Vec<Rat>> = vec![
        vec![q.a.clone(), h(&q.d), h(&q.e), h(&q.g)],
        vec![h(&q.d), q.b.clone(), h(&q.f), h(&q.h)],
        vec![h(&q.e), h(&q.f), q.c.clone(), h(&q.i)],
        vec![h(&q.g), h(&q.h), h(&q.i), q.j.clone()],
    ];
    let mut rank = 0_u32;
    let mut row = 0_usize;
    for col in 0..4 {
        let pivot = (row..4).find(|&i| !m[i][col].is_zero());
        let Some(p) = pivot else { continue };
        m.swap(row, p);
        for i in row + 1..4 {
            let factor = &m[i][col] / &m[row][col];
            for c in col..4 {
                let v = &m[row][c] * &factor;
                m[i][c] -= v;
            }
        }
        rank += 1;
        row += 1;
        if row == 4 {
            break;
        }
    }
    rank
}

/// The unique solution of the gradient system of Q when the principal 3x3
/// part is invertible: the vertex of a cone for rank-3 quadrics.
pub fn cone_vertex(q: &QuadricSpec) -> Option<(Rat, Rat, Rat)> {
    let two = rat(2);
    let h = |v: &Rat| v / &two;
    // A v = -b with A the principal part, b = (g/2, h/2, i/2)
    let a = [
        [q.a.clone(), h(&q.d), h(&q.e)],
        [h(&q.d), q.b.clone(), h(&q.f)],
        [h(&q.e), h(&q.f), q.c.clone()],
    ];
    let b = [-h(&q.g), -h(&q.h), -h(&q.i)];
    let det3 = |m: &[[Rat; 3]; 3]| -> Rat {
        &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
            - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
            + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
    };
    let d = det3(&a);
    if d.is_zero() {
        return None;
    }
    // Cramer
    let mut sol = Vec::with_capacity(3);
    for k in 0..3 {
        let mut ak = a.clone();
        for i in 0..3 {
            ak[i][k] = b[i].clone();
        }
        sol.push(det3(&ak) / &d);
    }
    Some((sol[0].clone(), sol[1].clone(), sol[2].clone()))
}

/// Validate the pair and derive every scene polynomial.
pub fn build_scene(t: TorusSpec, q: QuadricSpec) -> Result<Scene, SceneError> {
    if !t.minor.is_positive() {
        return Err(SceneError::NotRingTorus(format!(
            "need 0 < r, got r = {}",
            crate::num::fmt_rat(&t.minor)
        )));
    }
    if t.minor >= t.major {
        return Err(SceneError::NotRingTorus(format!(
            "need r < R, got r = {}, R = {}",
            crate::num::fmt_rat(&t.minor),
            crate::num::fmt_rat(&t.major)
        )));
    }
    if q.c.is_zero() {
        return Err(SceneError::DegenerateQuadric(
            "coefficient c of z^2 is zero".into(),
        ));
    }
    let rank = quadric_rank(&q);
    if rank <= 2 {
        return Err(SceneError::DegenerateQuadric(format!(
            "reducible quadric (matrix rank {rank} <= 2)"
        )));
    }
    let norm = q.normalized();

    let x = MultiPoly::var(Var::X);
    let y = MultiPoly::var(Var::Y);
    let z = MultiPoly::var(Var::Z);
    let u = x.mul(&x).add(&y.mul(&y)); // x^2 + y^2
    let rr = &t.major * &t.major;
    let rr2 = &t.minor * &t.minor;
    let w = &rr - &rr2; // R^2 - r^2
    let p2 = u.add(&MultiPoly::constant(w.clone())).scale(&rat(2));
    let plus = MultiPoly::constant(&rr + rat(2) * &t.major * &t.minor + &rr2).sub(&u);
    let minus = MultiPoly::constant(&rr - rat(2) * &t.major * &t.minor + &rr2).sub(&u);
    let p0 = plus.mul(&minus);
    let t_poly = z
        .pow(4)
        .add(&p2.mul(&z.pow(2)))
        .add(&p0);

    let q1 = x
        .scale(&norm.e)
        .add(&y.scale(&norm.f))
        .add(&MultiPoly::constant(norm.i.clone()));
    let q0 = x
        .mul(&x)
        .scale(&norm.a)
        .add(&y.mul(&y).scale(&norm.b))
        .add(&x.mul(&y).scale(&norm.d))
        .add(&x.scale(&norm.g))
        .add(&y.scale(&norm.h))
        .add(&MultiPoly::constant(norm.j.clone()));
    let q_poly = z.pow(2).add(&q1.mul(&z)).add(&q0);

    let delta_t = p0.clone();
    let delta_q = q1.mul(&q1).sub(&q0.scale(&rat(4)));

    let vertex = if rank == 3 { cone_vertex(&q) } else { None };

    Ok(Scene {
        torus: t,
        quadric: q,
        norm,
        derived: SceneDerived {
            t: t_poly,
            q: q_poly,
            p2,
            p0,
            q1,
            q0,
            delta_t,
            delta_q,
        },
        rank,
        vertex,
    })
}

impl Scene {
    /// Is q1 the zero polynomial (quadric symmetric in z)?
    pub fn q1_identically_zero(&self) -> bool {
        self.derived.q1.is_zero()
    }

    /// Vertex lying on the torus, if any (the singular-cone case).
    pub fn vertex_on_torus(&self) -> Option<(Rat, Rat, Rat)> {
        let v = self.vertex.as_ref()?;
        if self.derived.t.eval(&v.0, &v.1, &v.2).is_zero() {
            Some(v.clone())
        } else {
            None
        }
    }

    /// Membership of a rational point in the admissible region
    /// A = { delta_T <= 0, delta_Q >= 0 }.
    pub fn region_signs(&self, x: &Rat, y: &Rat) -> (Sign, Sign, bool) {
        let st = self.derived.delta_t.eval_sign(x, y, &rat(0));
        let sq = self.derived.delta_q.eval_sign(x, y, &rat(0));
        let inside = st != Sign::Pos && sq != Sign::Neg;
        (st, sq, inside)
    }
}

// ---------------------------------------------------------------------------
// Scene file format
// ---------------------------------------------------------------------------

/// Parse the sectioned key-value scene format:
///
/// ```text
/// [torus]
/// r = 2
/// R = 7
///
/// [quadric]
/// a = 1
/// c = -1/16
/// ...
/// ```
///
/// `r`, `R` and `c` are required; the remaining quadric coefficients
/// default to zero. Unknown keys are errors.
pub fn parse_scene_str(input: &str) -> Result<(TorusSpec, QuadricSpec), SceneError> {
    #[derive(PartialEq)]
    enum Section {
        None,
        Torus,
        Quadric,
    }
    let mut section = Section::None;
    let mut r: Option<Rat> = None;
    let mut big_r: Option<Rat> = None;
    let mut coeffs: [Option<Rat>; 10] = Default::default();
    const NAMES: [&str; 10] = ["a", "b", "c", "d", "e", "f", "g", "h", "i", "j"];

    for (idx, raw) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(name) = line.strip_prefix('[') {
            let name = name.strip_suffix(']').ok_or(SceneError::Parse {
                line: line_no,
                msg: "unterminated section header".into(),
            })?;
            section = match name.trim() {
                "torus" => Section::Torus,
                "quadric" => Section::Quadric,
                other => {
                    return Err(SceneError::Parse {
                        line: line_no,
                        msg: format!("unknown section `{other}`"),
                    })
                }
            };
            continue;
        }
        let (key, value) = line.split_once('=').ok_or(SceneError::Parse {
            line: line_no,
            msg: "expected `key = value`".into(),
        })?;
        let key = key.trim();
        let value = parse_rat(value.trim().trim_matches('"')).map_err(|msg| SceneError::Parse {
            line: line_no,
            msg,
        })?;
        match section {
            Section::Torus => match key {
                "r" => r = Some(value),
                "R" => big_r = Some(value),
                other => {
                    return Err(SceneError::Parse {
                        line: line_no,
                        msg: format!("unknown torus key `{other}`"),
                    })
                }
            },
            Section::Quadric => match NAMES.iter().position(|n| *n == key) {
                Some(k) => coeffs[k] = Some(value),
                None => {
                    return Err(SceneError::Parse {
                        line: line_no,
                        msg: format!("unknown quadric key `{key}`"),
                    })
                }
            },
            Section::None => {
                return Err(SceneError::Parse {
                    line: line_no,
                    msg: "key outside of a [torus]/[quadric] section".into(),
                })
            }
        }
    }

    let r = r.ok_or(SceneError::Parse {
        line: 0,
        msg: "missing key `r`".into(),
    })?;
    let big_r = big_r.ok_or(SceneError::Parse {
        line: 0,
        msg: "missing key `R`".into(),
    })?;
    if coeffs[2].is_none() {
        return Err(SceneError::Parse {
            line: 0,
            msg: "missing key `c`".into(),
        });
    }
    let get = |k: usize| coeffs[k].clone().unwrap_or_else(Rat::zero);
    Ok((
        TorusSpec {
            minor: r,
            major: big_r,
        },
        QuadricSpec {
            a: get(0),
            b: get(1),
            c: get(2),
            d: get(3),
            e: get(4),
            f: get(5),
            g: get(6),
            h: get(7),
            i: get(8),
            j: get(9),
        },
    ))
}

pub fn load_scene(input: &str) -> Result<Scene, SceneError> {
    let (t, q) = parse_scene_str(input)?;
    build_scene(t, q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::ratio;

    fn sphere_scene() -> Scene {
        // r=2, R=7, sphere x^2+y^2+z^2-36
        build_scene(
            TorusSpec {
                minor: rat(2),
                major: rat(7),
            },
            QuadricSpec {
                a: rat(1),
                b: rat(1),
                c: rat(1),
                d: rat(0),
                e: rat(0),
                f: rat(0),
                g: rat(0),
                h: rat(0),
                i: rat(0),
                j: rat(-36),
            },
        )
        .unwrap()
    }

    #[test]
    fn sphere_scene_derivations() {
        let s = sphere_scene();
        assert!(s.q1_identically_zero());
        assert_eq!(s.derived.q0, MultiPoly::parse("x^2 + y^2 - 36").unwrap());
        // T expands to (x^2+y^2+z^2+R^2-r^2)^2 - 4R^2(x^2+y^2)
        let u = MultiPoly::parse("x^2 + y^2 + z^2 + 45").unwrap();
        let expected = u
            .mul(&u)
            .sub(&MultiPoly::parse("196*x^2 + 196*y^2").unwrap());
        assert_eq!(s.derived.t, expected);
        assert_eq!(s.rank, 4);
        assert!(s.vertex.is_none());
    }

    #[test]
    fn degenerate_inputs_rejected() {
        let t = TorusSpec {
            minor: rat(3),
            major: rat(3),
        };
        let q = sphere_scene().quadric;
        assert!(matches!(
            build_scene(t, q.clone()),
            Err(SceneError::NotRingTorus(_))
        ));
        // double plane (x+y)^2 = x^2 + 2xy + y^2: rank 1
        let dp = QuadricSpec {
            a: rat(1),
            b: rat(1),
            c: rat(1),
            d: rat(2),
            e: rat(2),
            f: rat(2),
            g: rat(0),
            h: rat(0),
            i: rat(0),
            j: rat(0),
        };
        // that's (x+y+z)^2: rank 1
        assert_eq!(quadric_rank(&dp), 1);
        assert!(matches!(
            build_scene(
                TorusSpec {
                    minor: rat(1),
                    major: rat(2)
                },
                dp
            ),
            Err(SceneError::DegenerateQuadric(_))
        ));
        // c = 0
        let mut flat = sphere_scene().quadric;
        flat.c = rat(0);
        assert!(matches!(
            build_scene(
                TorusSpec {
                    minor: rat(1),
                    major: rat(2)
                },
                flat
            ),
            Err(SceneError::DegenerateQuadric(_))
        ));
    }

    #[test]
    fn normalization_divides_by_c() {
        // hyperboloid of Example 6.3: x^2/25 + y^2/100 - z^2/16 - 1
        let q = QuadricSpec {
            a: ratio(1, 25),
            b: ratio(1, 100),
            c: ratio(-1, 16),
            d: rat(0),
            e: rat(0),
            f: rat(0),
            g: rat(0),
            h: rat(0),
            i: rat(0),
            j: rat(-1),
        };
        let s = build_scene(
            TorusSpec {
                minor: rat(2),
                major: rat(7),
            },
            q,
        )
        .unwrap();
        assert_eq!(s.norm.a, ratio(-16, 25));
        assert_eq!(s.norm.j, rat(16));
        assert_eq!(
            s.derived.q0,
            MultiPoly::parse("(-4/25)*(4*x^2 + y^2 - 100)").unwrap()
        );
    }

    #[test]
    fn cone_vertices() {
        // Example 6.14 cone z^2 - (x-2)^2 - y^2: vertex (2,0,0)
        let q = QuadricSpec {
            a: rat(-1),
            b: rat(-1),
            c: rat(1),
            d: rat(0),
            e: rat(0),
            f: rat(0),
            g: rat(4),
            h: rat(0),
            i: rat(0),
            j: rat(-4),
        };
        assert_eq!(quadric_rank(&q), 3);
        assert_eq!(cone_vertex(&q), Some((rat(2), rat(0), rat(0))));
        // Example 6.11 cone z^2 + yz + (x-4)^2 - 1 + y: vertex (4, 2, -1)
        let q2 = QuadricSpec {
            a: rat(1),
            b: rat(0),
            c: rat(1),
            d: rat(0),
            e: rat(0),
            f: rat(1),
            g: rat(-8),
            h: rat(1),
            i: rat(0),
            j: rat(15),
        };
        assert_eq!(cone_vertex(&q2), Some((rat(4), rat(2), rat(-1))));
        let s = build_scene(
            TorusSpec {
                minor: rat(4),
                major: rat(6),
            },
            q,
        )
        .unwrap();
        assert_eq!(s.vertex_on_torus(), Some((rat(2), rat(0), rat(0))));
    }

    #[test]
    fn monic_normalization_preserves_zero_sign_up_to_c() {
        let s = {
            let q = QuadricSpec {
                a: ratio(1, 25),
                b: ratio(1, 100),
                c: ratio(-1, 16),
                d: rat(0),
                e: rat(0),
                f: rat(0),
                g: rat(0),
                h: rat(0),
                i: rat(0),
                j: rat(-1),
            };
            build_scene(
                TorusSpec {
                    minor: rat(2),
                    major: rat(7),
                },
                q,
            )
            .unwrap()
        };
        let orig = s.quadric.poly();
        let normed = s.norm.poly();
        let sc = Sign::of(&s.quadric.c);
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut rnd = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            ratio((state % 41) as i64 - 20, 7)
        };
        for _ in 0..100 {
            let (x, y, z) = (rnd(), rnd(), rnd());
            let so = orig.eval_sign(&x, &y, &z);
            let sn = normed.eval_sign(&x, &y, &z);
            assert_eq!(so, sc.mul(sn));
        }
    }

    #[test]
    fn scene_file_round_trip_and_errors() {
        let text = "\n[torus]\nr = 2\nR = 7\n\n[quadric]\na = 1\nb = 1\nc = 1\nj = -36\n";
        let s = load_scene(text).unwrap();
        assert!(s.q1_identically_zero());
        let missing_c = "[torus]\nr = 2\nR = 7\n[quadric]\na = 1\n";
        match load_scene(missing_c) {
            Err(SceneError::Parse { msg, .. }) => assert!(msg.contains("`c`")),
            other => panic!("expected parse error, got {other:?}"),
        }
        let unknown = "[torus]\nr = 2\nR = 7\n[quadric]\nc = 1\nk = 3\n";
        match load_scene(unknown) {
            Err(SceneError::Parse { line, msg }) => {
                assert_eq!(line, 6);
                assert!(msg.contains("`k`"));
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn p2_positive_everywhere() {
        let s = sphere_scene();
        let mut state = 0xdeadbeefu64;
        let mut rnd = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            ratio((state % 2001) as i64 - 1000, 13)
        };
        for _ in 0..200 {
            let (x, y) = (rnd(), rnd());
            assert_eq!(s.derived.p2.eval_sign(&x, &y, &rat(0)), Sign::Pos);
        }
    }
}
