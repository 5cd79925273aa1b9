//! Twists of a bundle over a range, one row per twist.
//!
//!     cargo run --example cohomology_table -- 2 5 -8 2

use bbw_ulrich::{cohomology_table, CohomologyReport, GrassmannSpace, HomogeneousBundle};

fn main() {
    let args: Vec<i64> = std::env::args()
        .skip(1)
        .map(|s| s.parse().expect("integer argument"))
        .collect();
    let (k, n, from, to) = match args[..] {
        [k, n, from, to] => (k as usize, n as usize, from, to),
        [] => (1, 3, -6, 1),
        _ => panic!("usage: cohomology_table K N FROM TO"),
    };
    let g = GrassmannSpace::new(k, n).expect("0 <= k < n");
    let b = HomogeneousBundle::quotient(g);

    println!("Q on {g}");
    for (t, r) in cohomology_table(&b, from, to).unwrap() {
        match r {
            CohomologyReport::Zero => println!("{t:>4}  -"),
            CohomologyReport::Group {
                degree, dimension, ..
            } => {
                println!("{t:>4}  H^{degree} of dimension {dimension}")
            }
        }
    }
}
