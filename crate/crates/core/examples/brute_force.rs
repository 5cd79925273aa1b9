//! Exhaustive search over initialized candidates, compared with the
//! factorization-pair construction.
//!
//!     cargo run --release --example brute_force -- 2 7

use std::time::Instant;

use bbw_ulrich::ulrich::{self, ClassifyOptions};
use bbw_ulrich::GrassmannSpace;

fn main() {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|s| s.parse().expect("non-negative integer"))
        .collect();
    let spaces: Vec<(usize, usize)> = match args[..] {
        [k, n] => vec![(k, n)],
        _ => vec![(1, 3), (1, 4), (1, 5), (1, 6), (2, 5), (2, 6), (2, 7)],
    };
    for (k, n) in spaces {
        let g = GrassmannSpace::new(k, n).expect("0 <= k < n");
        let start = Instant::now();
        match ulrich::brute_force_classify(g, ClassifyOptions::default()) {
            Ok(found) => {
                let constructed = ulrich::enumerate_ulrich(g);
                println!(
                    "{g}: {} candidates, {} Ulrich, construction gives {}, equal: {} ({:.2?})",
                    ulrich::candidate_count(g),
                    found.len(),
                    constructed.len(),
                    found == constructed,
                    start.elapsed()
                );
            }
            Err(e) => println!("{g}: {e}"),
        }
    }
}
