use std::time::Instant;
use tqk_core::classify::*;
use tqk_core::cutcurve::compute_cutcurve;
use tqk_core::num::{rat, ratio};
use tqk_core::scene::{build_scene, QuadricSpec, TorusSpec};
use tqk_core::subres::torus_quadric_subresultants;

fn main() {
    let q = QuadricSpec {
        a: ratio(3, 4), b: ratio(3, 25), c: rat(1), d: rat(0), e: ratio(-3, 5),
        f: rat(0), g: rat(0), h: rat(0), i: rat(0), j: rat(-3),
    };
    let s = build_scene(TorusSpec { minor: ratio(3, 2), major: rat(3) }, q).unwrap();
    let set = torus_quadric_subresultants(&s);
    let data = compute_cutcurve(&s);
    let t0 = Instant::now();
    let pts = singular_points_of_cutcurve(&data, &s).unwrap();
    eprintln!("singular points: {:?} -> {}", t0.elapsed(), pts.len());
    for p in &pts {
        let t0 = Instant::now();
        let c = classify_point(&p, &data, &s, &set, &ClassifyOptions::default()).unwrap();
        eprintln!("classified {} in {:?}: case {:?} lifts {}", p, t0.elapsed(), c.case, c.lifts.len());
    }
}
