use std::time::Instant;
use tqk_core::cutcurve::{compute_cutcurve, identity_suite};
use tqk_core::num::{rat, ratio};
use tqk_core::scene::{build_scene, QuadricSpec, TorusSpec};
use tqk_core::subres::{sylvester_sres, torus_quadric_subresultants};
use tqk_core::alg2d::resultant;
use tqk_core::poly::Var;

fn main() {
    let q = QuadricSpec {
        a: rat(7), b: rat(-4), c: rat(3), d: rat(5), e: rat(-2),
        f: rat(9), g: rat(-8), h: rat(6), i: rat(4), j: rat(-10),
    };
    let s = build_scene(TorusSpec { minor: ratio(3, 2), major: rat(6) }, q).unwrap();
    let t0 = Instant::now();
    let set = torus_quadric_subresultants(&s);
    eprintln!("closed forms: {:?}", t0.elapsed());
    let t0 = Instant::now();
    let m0 = sylvester_sres(&s.derived.t, &s.derived.q, 0).unwrap();
    eprintln!("matrix sres0: {:?} ({} terms)", t0.elapsed(), m0.num_terms());
    let t0 = Instant::now();
    let disc = resultant(&s.derived.t, &s.derived.t.partial(Var::Z), Var::Z);
    eprintln!("disc resultant: {:?} ({} terms)", t0.elapsed(), disc.num_terms());
    let t0 = Instant::now();
    let data = compute_cutcurve(&s);
    eprintln!("compute_cutcurve: {:?}", t0.elapsed());
    let t0 = Instant::now();
    let rep = identity_suite(&s, &data);
    eprintln!("identity_suite: {:?} all_pass={}", t0.elapsed(), rep.all_pass());
    let _ = set;
}
