//! Degree, dimension and the Ulrich invariants of a Grassmannian.
//!
//!     cargo run --example invariants -- 5 17

use bbw_ulrich::ulrich;
use bbw_ulrich::{degree, GrassmannSpace};

fn main() {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|s| s.parse().expect("non-negative integer"))
        .collect();
    let spaces: Vec<GrassmannSpace> = match args[..] {
        [k, n] => vec![GrassmannSpace::new(k, n).expect("0 <= k < n")],
        _ => [(1, 3), (1, 4), (2, 5), (2, 7), (5, 17)]
            .iter()
            .map(|&(k, n)| GrassmannSpace::new(k, n).unwrap())
            .collect(),
    };
    for g in spaces {
        println!(
            "{g}: dim {}, degree {}, {} Ulrich bundles of slope {}, smallest rank {}",
            g.dimension(),
            degree(g),
            ulrich::count_ulrich(g),
            ulrich::ulrich_slope(g),
            ulrich::min_ulrich_rank(g),
        );
    }
}
