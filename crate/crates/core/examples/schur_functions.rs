//! Schur functions in the power-sum coordinates `t_k = p_k / k`.
//!
//! ```text
//! cargo run --example schur_functions
//! ```

use schurq::partitions::{frobenius_from_partition, partitions_of};
use schurq::symfunc::{complete_h, hook_schur, schur, schur_giambelli};
use schurq::Partition;

fn main() {
    println!("complete homogeneous h_k(t):");
    for k in 0..=4 {
        println!("  h_{k} = {}", complete_h(k, 4));
    }

    println!("\ns_lambda(t) for |lambda| = 4, by Jacobi-Trudi:");
    for lambda in partitions_of(4) {
        println!("  s_({lambda}) = {}", schur(&lambda, 4));
    }

    // Setting every even time to zero gives the restriction that appears on
    // the left of the bilinear expansion.
    let square = Partition::new(vec![3, 3]);
    println!("\ns_(3,3) at odd times only: {}", schur(&square, 6).restrict_to_odd());

    // The same function from Frobenius coordinates, two ways.
    let lambda = Partition::new(vec![4, 2, 1]);
    let fc = frobenius_from_partition(&lambda);
    let jt = schur(&lambda, 7);
    let giambelli = schur_giambelli(&fc, 7);
    println!("\n({lambda}) has Frobenius coordinates ({fc}); Giambelli agrees: {}", jt == giambelli);

    println!("hook (2|1) = {}", hook_schur(2, 1, 4));
}
