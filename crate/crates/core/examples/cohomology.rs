//! Cohomology of a few homogeneous bundles on Grassmannians.
//!
//!     cargo run --example cohomology

use bbw_ulrich::{cohomology, euler_characteristic, GrassmannSpace, HomogeneousBundle};

fn main() {
    let g = GrassmannSpace::new(1, 3).unwrap();
    let q = HomogeneousBundle::quotient(g);
    let s = HomogeneousBundle::dual_sub(g);
    let o = HomogeneousBundle::structure_sheaf(g);

    println!("on {g} (dimension {}):", g.dimension());
    for (name, b) in [("O", &o), ("Q", &q), ("S∨", &s)] {
        for t in [-5, -4, -1, 0, 2] {
            println!("  {name}({t:>2})  {}", cohomology(b, t));
        }
    }

    // A bundle with cohomology in the middle degree.
    let g = GrassmannSpace::new(2, 5).unwrap();
    let b = HomogeneousBundle::from_entries(g, vec![0, 0, -4], vec![0, 0, 0]).unwrap();
    println!(
        "\non {g}: Σ^{}Q ⊗ Σ^{}S∨ has {}",
        b.beta(),
        b.gamma(),
        cohomology(&b, 0)
    );

    let p1 = GrassmannSpace::new(0, 1).unwrap();
    println!("\nχ(O_P1(t)) for t = -3..=3:");
    for t in -3..=3 {
        println!(
            "  {t:>2}  {}",
            euler_characteristic(&HomogeneousBundle::structure_sheaf(p1), t)
        );
    }
}
