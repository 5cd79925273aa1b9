//! ACM and Ulrich checks on a bundle given on the command line.
//!
//!     cargo run --example acm_check -- 1 4 3,0 0,0,0

use bbw_ulrich::ulrich;
use bbw_ulrich::{cohomology, GrassmannSpace, HomogeneousBundle};

fn weight(s: &str) -> Vec<i64> {
    s.split(',')
        .map(|x| x.trim().parse().expect("integer"))
        .collect()
}

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (k, n, beta, gamma) = match &args[..] {
        [k, n, b, c] => (k.parse().unwrap(), n.parse().unwrap(), weight(b), weight(c)),
        _ => (1, 4, vec![3, 0], vec![0, 0, 0]),
    };
    let g = GrassmannSpace::new(k, n).expect("0 <= k < n");
    let b = HomogeneousBundle::from_entries(g, beta, gamma).expect("non-increasing weights");

    let (init, t0) = ulrich::initialize(&b);
    println!("{g}: β = {}, γ = {}", b.beta(), b.gamma());
    println!("initializing twist {t0}, ACM: {}", ulrich::is_acm(&b));
    for t in 1..=g.dimension() as i64 {
        println!("  E_init(-{t})  {}", cohomology(&init, -t));
    }
    let v = ulrich::is_ulrich(&b);
    println!(
        "Ulrich: {} (two-diagonal criterion: {})",
        v.is_ulrich,
        ulrich::satisfies_two_diagonal_criterion(&b)
    );
}
