use tqk_core::alg2d::*;
use tqk_core::cutcurve::compute_cutcurve;
use tqk_core::gcd::gcd_poly;
use tqk_core::num::rat;
use tqk_core::poly::Var;
use tqk_core::roots1d::{isolate_roots, sign_at_root};
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
    for (p, q2) in [(&f, &g), (&f, &h), (&g, &h)] {
        rx = gcd_poly(&rx, &resultant(&p.normalized(), &q2.normalized(), Var::Y));
    }
    let xs = isolate_roots(&UniPoly::from_multi(&rx, Var::X)).unwrap();
    for (name, p1, p2) in [("f,g", &f, &g), ("f,h", &f, &h), ("g,h", &g, &h)] {
        match linear_prs_remainder(p1, p2, Var::Y) {
            Some((c, _d)) => {
                let cu = UniPoly::from_multi(&c, Var::X);
                let s0 = sign_at_root(&cu, &xs[0]);
                eprintln!("{name}: c deg {:?}, c(alpha0) = {:?}", c.total_degree(), s0);
            }
            None => eprintln!("{name}: no linear remainder"),
        }
    }
}
