use std::io::Write;
use std::time::Instant;
use tqk_core::gcd::gcd_poly;
use tqk_core::num::{rat, ratio};
use tqk_core::poly::Var;
use tqk_core::scene::{build_scene, QuadricSpec, TorusSpec};
use tqk_core::subres::torus_quadric_subresultants;

fn main() {
    let q = QuadricSpec {
        a: ratio(3, 4), b: ratio(3, 25), c: rat(1), d: rat(0), e: ratio(-3, 5),
        f: rat(0), g: rat(0), h: rat(0), i: rat(0), j: rat(-3),
    };
    let s = build_scene(TorusSpec { minor: ratio(3, 2), major: rat(3) }, q).unwrap();
    let set = torus_quadric_subresultants(&s);
    let p = set.s0_tilde.normalized();
    eprintln!("p: {} terms deg {}", p.num_terms(), p.total_degree().unwrap());
    std::io::stderr().flush().unwrap();
    let px = p.partial(Var::X);
    let t0 = Instant::now();
    let g1 = gcd_poly(&p, &px);
    eprintln!("gcd(p,px): {:?} -> {}", t0.elapsed(), g1.canonical_string());
}
