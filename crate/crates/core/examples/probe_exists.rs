use ddc_core::ddc::Quadruple;
use ddc_core::mpoly::{existence_check, GroebnerControls};
use std::time::Instant;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let u: u64 = args.get(1).map(|s| s.parse().unwrap()).unwrap_or(17);
    let n: u64 = args.get(2).map(|s| s.parse().unwrap()).unwrap_or(34);
    let q = Quadruple::new(3, 2, u, n).unwrap();
    let t0 = Instant::now();
    let mut last = Instant::now();
    let mut progress = move |pairs: u64, size: usize| {
        if last.elapsed().as_secs() >= 5 {
            eprintln!("  pairs={pairs} basis={size} t={:.0?}", t0.elapsed());
            last = Instant::now();
        }
    };
    let mut controls = GroebnerControls {
        progress: Some(&mut progress),
        ..Default::default()
    };
    let out = existence_check(&q, &mut controls);
    match out {
        Ok(o) => println!(
            "({u},{n}): exists={} basis_len={} pairs={} elapsed={:.1?}",
            o.exists,
            o.basis.len(),
            o.pairs_processed,
            t0.elapsed()
        ),
        Err(e) => println!("({u},{n}): ERROR {e} elapsed={:.1?}", t0.elapsed()),
    }
}
