use std::io::Write;
use std::time::Instant;
use tqk_core::alg2d::*;
use tqk_core::cutcurve::compute_cutcurve;
use tqk_core::num::rat;
use tqk_core::poly::Var;
use tqk_core::scene::{build_scene, QuadricSpec, TorusSpec};

fn main() {
    let q = QuadricSpec {
        a: rat(3), b: rat(3), c: rat(1), d: rat(0), e: rat(-1),
        f: rat(-1), g: rat(4), h: rat(0), i: rat(2), j: rat(-20),
    };
    let s = build_scene(TorusSpec { minor: rat(1), major: rat(3) }, q).unwrap();
    let data = compute_cutcurve(&s);
    let f = data.s0.clone();
    let g = data.s0.partial(Var::X);
    eprintln!("starting PRS"); std::io::stderr().flush().ok();
    let t0 = Instant::now();
    let tri = linear_prs_remainder(&f, &g, Var::Y);
    match &tri {
        Some((c, d)) => eprintln!("PRS: {:?}, c terms {} deg {:?}, d terms {} deg {:?}",
            t0.elapsed(), c.num_terms(), c.total_degree(), d.num_terms(), d.total_degree()),
        None => eprintln!("PRS: {:?} -> none", t0.elapsed()),
    }
}
