use std::io::Write;
use std::time::Instant;
use tqk_core::alg2d::*;
use tqk_core::classify::*;
use tqk_core::cutcurve::compute_cutcurve;
use tqk_core::num::{rat, ratio};
use tqk_core::poly::Var;
use tqk_core::scene::{build_scene, QuadricSpec, TorusSpec};

fn main() {
    // the r=1, R=3 tangent ellipsoid scene
    let q = QuadricSpec {
        a: rat(3), b: rat(3), c: rat(1), d: rat(0), e: rat(-1),
        f: rat(-1), g: rat(4), h: rat(0), i: rat(2), j: rat(-20),
    };
    let s = build_scene(TorusSpec { minor: rat(1), major: rat(3) }, q).unwrap();
    let data = compute_cutcurve(&s);
    eprintln!("s0 deg {:?} terms {}", data.s0.total_degree(), data.s0.num_terms());
    std::io::stderr().flush().ok();
    let sx = data.s0.partial(Var::X);
    let sy = data.s0.partial(Var::Y);
    let t0 = Instant::now();
    let r1 = resultant(&data.s0.normalized(), &sx.normalized(), Var::Y);
    eprintln!("res1: {:?} deg {:?}", t0.elapsed(), r1.total_degree());
    std::io::stderr().flush().ok();
    let t0 = Instant::now();
    let r2 = resultant(&data.s0.normalized(), &sy.normalized(), Var::Y);
    eprintln!("res2: {:?} deg {:?}", t0.elapsed(), r2.total_degree());
    std::io::stderr().flush().ok();
    let t0 = Instant::now();
    let g12 = tqk_core::gcd::gcd_poly(&r1, &r2);
    eprintln!("gcd: {:?} -> {}", t0.elapsed(), g12.canonical_string());
    std::io::stderr().flush().ok();
    let t0 = Instant::now();
    let pts = singular_points_of_cutcurve(&data, &s).unwrap();
    eprintln!("singular pts: {:?} -> {}", t0.elapsed(), pts.len());
}
