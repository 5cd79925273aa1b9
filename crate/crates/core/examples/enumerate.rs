//! Every initialized invariant Ulrich bundle on a Grassmannian.
//!
//!     cargo run --example enumerate -- 1 21

use bbw_ulrich::ulrich;
use bbw_ulrich::{rank, GrassmannSpace};

fn main() {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|s| s.parse().expect("non-negative integer"))
        .collect();
    let (k, n) = match args[..] {
        [k, n] => (k, n),
        _ => (1, 21),
    };
    let g = GrassmannSpace::new(k, n).expect("0 <= k < n");
    let found = ulrich::enumerate_ulrich_with_pairs(g);
    println!("{} bundles on {g}", found.len());
    for (b, pair) in found {
        println!(
            "{:<16} β = {}  γ = {}  rank {}",
            pair.to_string(),
            b.beta(),
            b.gamma(),
            rank(&b)
        );
    }
}
