//! Dimensions of Schur modules two ways: the product over pairs and hook-content.
//!
//!     cargo run --example schur_dimensions -- 4,2,1 5

use bbw_ulrich::weights::{hook_content_dim, weyl_dim};
use bbw_ulrich::{GlWeight, Partition};

fn main() {
    let mut args = std::env::args().skip(1);
    let parts: Vec<u64> = args
        .next()
        .unwrap_or_else(|| "4,2,1".into())
        .split(',')
        .map(|s| {
            s.trim()
                .parse()
                .expect("partition entries are non-negative integers")
        })
        .collect();
    let r: usize = args.next().map_or(5, |s| s.parse().expect("rank"));

    let p = Partition::new(parts).expect("a partition");
    let w = p.to_weight(r).expect("partition longer than the rank");
    println!("λ = {:?}, r = {r}", p.parts());
    println!("  product over pairs  {}", weyl_dim(&w, r).unwrap());
    println!("  hook-content        {}", hook_content_dim(&p, r).unwrap());
    println!("  conjugate λ'        {:?}", p.transpose().parts());

    // Shifting by a constant tensors with a power of the determinant.
    let shifted = w.shift(-3);
    println!(
        "  {} has the same dimension: {}",
        shifted,
        weyl_dim(&shifted, r).unwrap()
    );

    let non_partition = GlWeight::new(vec![2, 0, -1, -3]).unwrap();
    println!(
        "  {non_partition} (not a partition): {}",
        weyl_dim(&non_partition, 4).unwrap()
    );
}
