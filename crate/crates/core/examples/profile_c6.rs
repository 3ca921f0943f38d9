use std::io::Write;
use std::time::Instant;
use tqk_core::alg2d::*;
use tqk_core::classify::singular_points_of_cutcurve;
use tqk_core::cutcurve::compute_cutcurve;
use tqk_core::num::rat;
use tqk_core::scene::{build_scene, QuadricSpec, TorusSpec};

fn main() {
    let q = QuadricSpec {
        a: rat(3), b: rat(3), c: rat(1), d: rat(0), e: rat(-1),
        f: rat(-1), g: rat(4), h: rat(0), i: rat(2), j: rat(-20),
    };
    let s = build_scene(TorusSpec { minor: rat(1), major: rat(3) }, q).unwrap();
    let data = compute_cutcurve(&s);
    eprintln!("start solve"); std::io::stderr().flush().ok();
    let t0 = Instant::now();
    let pts = singular_points_of_cutcurve(&data, &s).unwrap();
    eprintln!("singular: {:?} -> {}", t0.elapsed(), pts.len());
    for p in &pts {
        eprintln!("  {} x-deg {:?} y-deg {:?}", p, p.x.poly.degree(), p.y.poly.degree());
    }
}
