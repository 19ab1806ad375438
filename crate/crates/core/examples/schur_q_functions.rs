//! Schur Q-functions as Pfaffians, and the rescaled `Q~(t/2)` used in the
//! bilinear expansion.
//!
//! ```text
//! cargo run --example schur_q_functions
//! ```

use schurq::partitions::{strict_partitions_of, supplement};
use schurq::symfunc::{neutral_q, q_matrix_entry, schur_q, schur_q_half};
use schurq::StrictPartition;

fn main() {
    for k in 0..=5 {
        println!("q_{k} = {}", neutral_q(k, 5));
    }

    println!("\nQ_(3,1) from its 2x2 Pfaffian:");
    println!("  Q_31 entry = {}", q_matrix_entry(3, 1, 4).unwrap());
    let alpha: StrictPartition = "3,1".parse().unwrap();
    println!("  Q_(3,1)    = {}", schur_q(&alpha, 4));

    // Odd length: the partition is supplemented by a zero part first.
    let odd: StrictPartition = "3".parse().unwrap();
    println!("\nsupplement(3) = ({}), Q_(3) = {}", supplement(&odd), schur_q(&odd, 3));

    println!("\nQ~_alpha(t/2) for strict alpha of weight 5:");
    for alpha in strict_partitions_of(5, false) {
        println!("  Q~_({alpha}) = {}", schur_q_half(&alpha, 5));
    }
}
