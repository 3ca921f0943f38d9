use std::io::Write;
use std::time::Instant;
use tqk_core::alg2d::*;
use tqk_core::cutcurve::compute_cutcurve;
use tqk_core::num::{rat, ratio, Sign};
use tqk_core::poly::Var;
use tqk_core::roots1d::isolate_roots;
use tqk_core::scene::{build_scene, QuadricSpec, TorusSpec};
use tqk_core::unipoly::UniPoly;

fn main() {
    let q = QuadricSpec {
        a: ratio(3, 4), b: ratio(3, 25), c: rat(1), d: rat(0), e: ratio(-3, 5),
        f: rat(0), g: rat(0), h: rat(0), i: rat(0), j: rat(-3),
    };
    let s = build_scene(TorusSpec { minor: ratio(3, 2), major: rat(3) }, q).unwrap();
    let data = compute_cutcurve(&s);
    let f = data.s0.partial(Var::X);
    let g = data.s0.partial(Var::Y);
    let rx = resultant(&f, &g, Var::Y).normalized();
    let ry = resultant(&f, &g, Var::X).normalized();
    let xs = isolate_roots(&UniPoly::from_multi(&rx, Var::X)).unwrap();
    let ys = isolate_roots(&UniPoly::from_multi(&ry, Var::Y)).unwrap();
    eprintln!("candidates: {} x {}", xs.len(), ys.len());
    std::io::stderr().flush().ok();
    for (i, xr) in xs.iter().enumerate() {
        for (j, yr) in ys.iter().enumerate() {
            let cand = AlgebraicPoint2D::from_coords(xr.clone(), yr.clone(), (f.clone(), g.clone()));
            let t0 = Instant::now();
            let sf = sign_at(&f, &cand);
            let t1 = t0.elapsed();
            let t0 = Instant::now();
            let sg = if sf == Sign::Zero { sign_at(&g, &cand) } else { Sign::Pos };
            let t2 = t0.elapsed();
            if t1.as_millis() > 200 || t2.as_millis() > 200 || (sf == Sign::Zero && sg == Sign::Zero) {
                eprintln!("pair ({i},{j}): f {t1:?} g {t2:?} -> {sf:?} {sg:?}");
                std::io::stderr().flush().ok();
            }
        }
    }
    eprintln!("done");
}
