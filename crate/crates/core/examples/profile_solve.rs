use std::time::Instant;
use tqk_core::alg2d::resultant;
use tqk_core::cutcurve::compute_cutcurve;
use tqk_core::num::{rat, ratio};
use tqk_core::poly::Var;
use tqk_core::scene::{build_scene, QuadricSpec, TorusSpec};
use tqk_core::unipoly::UniPoly;

fn main() {
    let q = QuadricSpec {
        a: ratio(3, 4), b: ratio(3, 25), c: rat(1), d: rat(0), e: ratio(-3, 5),
        f: rat(0), g: rat(0), h: rat(0), i: rat(0), j: rat(-3),
    };
    let s = build_scene(TorusSpec { minor: ratio(3, 2), major: rat(3) }, q).unwrap();
    let data = compute_cutcurve(&s);
    eprintln!("s0: {} terms, deg {}", data.s0.num_terms(), data.s0.total_degree().unwrap());
    let sx = data.s0.partial(Var::X);
    let sy = data.s0.partial(Var::Y);
    let t0 = Instant::now();
    let rx = resultant(&sx, &sy, Var::Y);
    eprintln!("res_y(sx, sy): {:?}, deg {:?}, terms {}", t0.elapsed(), rx.total_degree(), rx.num_terms());
    let t0 = Instant::now();
    let rxu = UniPoly::from_multi(&rx.normalized(), Var::X);
    let roots = tqk_core::roots1d::isolate_roots(&rxu).unwrap();
    eprintln!("isolate x: {:?}, {} roots", t0.elapsed(), roots.len());
    let t0 = Instant::now();
    let ry = resultant(&sx, &sy, Var::X);
    eprintln!("res_x(sx, sy): {:?}", t0.elapsed());
    let ryu = UniPoly::from_multi(&ry.normalized(), Var::Y);
    let t0 = Instant::now();
    let rootsy = tqk_core::roots1d::isolate_roots(&ryu).unwrap();
    eprintln!("isolate y: {:?}, {} roots", t0.elapsed(), rootsy.len());
}
