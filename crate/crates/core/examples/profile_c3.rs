use std::io::Write;
use std::time::Instant;
use tqk_core::alg2d::*;
use tqk_core::cutcurve::compute_cutcurve;
use tqk_core::gcd::gcd_poly;
use tqk_core::num::{rat, Sign};
use tqk_core::poly::Var;
use tqk_core::roots1d::isolate_roots;
use tqk_core::scene::{build_scene, QuadricSpec, TorusSpec};
use tqk_core::unipoly::UniPoly;

fn main() {
    let q = QuadricSpec {
        a: rat(3), b: rat(3), c: rat(1), d: rat(0), e: rat(-1),
        f: rat(-1), g: rat(4), h: rat(0), i: rat(2), j: rat(-20),
    };
    let s = build_scene(TorusSpec { minor: rat(1), major: rat(3) }, q).unwrap();
    let data = compute_cutcurve(&s);
    let f = data.s0.clone();
    let g = data.s0.partial(Var::X);
    let h = data.s0.partial(Var::Y);
    let mut rx = tqk_core::poly::MultiPoly::zero();
    let mut ry = tqk_core::poly::MultiPoly::zero();
    for (p, q2) in [(&f, &g), (&f, &h), (&g, &h)] {
        let t0 = Instant::now();
        let r = resultant(&p.normalized(), &q2.normalized(), Var::Y);
        rx = gcd_poly(&rx, &r);
        let r = resultant(&p.normalized(), &q2.normalized(), Var::X);
        ry = gcd_poly(&ry, &r);
        eprintln!("pair: {:?}, gcdx deg {:?}, gcdy deg {:?}", t0.elapsed(), rx.total_degree(), ry.total_degree());
        std::io::stderr().flush().ok();
    }
    let t0 = Instant::now();
    let xs = isolate_roots(&UniPoly::from_multi(&rx, Var::X)).unwrap();
    let ys = isolate_roots(&UniPoly::from_multi(&ry, Var::Y)).unwrap();
    eprintln!("isolate: {:?}: {} x {}", t0.elapsed(), xs.len(), ys.len());
    std::io::stderr().flush().ok();
    for (i, xr) in xs.iter().enumerate() {
        for (j, yr) in ys.iter().enumerate() {
            let cand = AlgebraicPoint2D::from_coords(xr.clone(), yr.clone(), (f.clone(), g.clone()));
            let t0 = Instant::now();
            let s1 = sign_at(&f, &cand);
            let s2 = if s1 == Sign::Zero { sign_at(&g, &cand) } else { Sign::Pos };
            let s3 = if s2 == Sign::Zero { sign_at(&h, &cand) } else { Sign::Pos };
            let el = t0.elapsed();
            if true {
                eprintln!("pair ({i},{j}): {el:?} -> {s1:?} {s2:?} {s3:?}");
                std::io::stderr().flush().ok();
            }
        }
    }
    eprintln!("done");
}
