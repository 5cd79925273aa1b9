//! Builds the block grid for a factorization pair, reads off the bundle and
//! checks it is Ulrich.
//!
//!     cargo run --example construct -- 5 17 2,3 3,4

use bbw_ulrich::ulrich::{self, FactorizationPair};
use bbw_ulrich::{h0, rank, GrassmannSpace};

fn list(s: &str) -> Vec<usize> {
    s.split(',')
        .map(|x| x.trim().parse().expect("positive integer"))
        .collect()
}

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (k, n, ks, ns) = match &args[..] {
        [k, n, ks, ns] => (k.parse().unwrap(), n.parse().unwrap(), list(ks), list(ns)),
        _ => (5, 17, vec![2, 3], vec![3, 4]),
    };
    let g = GrassmannSpace::new(k, n).expect("0 <= k < n");
    let pair = FactorizationPair::new(g, ks, ns).expect("valid factorization pair");

    let grid = ulrich::build_grid(g, &pair).unwrap();
    println!("{g}, pair {pair}\n\n{grid}");
    let b = ulrich::bundle_from_grid(&grid).unwrap();
    println!("β = {}\nγ = {}", b.beta(), b.gamma());

    let verdict = ulrich::is_ulrich(&b);
    println!(
        "Ulrich: {}, initialized: {}",
        verdict.is_ulrich, verdict.initialized
    );
    println!("rank {}\nh0   {}", rank(&b), h0(&b));
}
