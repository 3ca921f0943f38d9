use std::time::Instant;
use tqk_core::gcd::gcd_poly;
use tqk_core::num::{rat, ratio};
use tqk_core::poly::Var;
use tqk_core::scene::{build_scene, QuadricSpec, TorusSpec};
use tqk_core::subres::torus_quadric_subresultants;

fn main() {
    let q = QuadricSpec {
        a: rat(7), b: rat(-4), c: rat(3), d: rat(5), e: rat(-2),
        f: rat(9), g: rat(-8), h: rat(6), i: rat(4), j: rat(-10),
    };
    let s = build_scene(TorusSpec { minor: ratio(3, 2), major: rat(6) }, q).unwrap();
    let set = torus_quadric_subresultants(&s);
    let p = set.s0_tilde.normalized();
    eprintln!("resultant: {} terms, deg {}", p.num_terms(), p.total_degree().unwrap());
    let px = p.partial(Var::X);
    let py = p.partial(Var::Y);
    let t0 = Instant::now();
    let g1 = gcd_poly(&p, &px);
    eprintln!("gcd(p, px): {:?} -> {} terms", t0.elapsed(), g1.num_terms());
    let t0 = Instant::now();
    let g2 = gcd_poly(&g1, &py);
    eprintln!("gcd(g1, py): {:?} -> {} terms", t0.elapsed(), g2.num_terms());
    let t0 = Instant::now();
    let sf = p.divide_exact(&g2).unwrap();
    eprintln!("division: {:?} -> {} terms", t0.elapsed(), sf.num_terms());
}
