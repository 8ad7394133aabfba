use leapfrog_core::verify::*;
use std::time::Instant;

fn main() {
    let mut cfg = CheckConfig::default();
    cfg.jobs = 2;
    let t0 = Instant::now();
    let (p303, t32, l31) = trajectory_checks(&cfg);
    println!("[{}s with jobs=2]", t0.elapsed().as_secs_f32());
    for r in [&p303, &t32, &l31] {
        println!("{}", r.summary());
        for (k, v) in &r.values { println!("   {k} = {v}"); }
        for n in r.notes.iter().take(3) { println!("   note: {n}"); }
    }
}
