//! A Schur function at odd times, written as a sum of products of two
//! Schur Q-functions.
//!
//! ```text
//! cargo run --example bilinear_expansion -- 4,2,1
//! ```

use schurq::partitions::frobenius_from_partition;
use schurq::polyring::format_rational;
use schurq::symfunc::schur;
use schurq::{bilinear_expansion, dedupe_symmetric, evaluate_expansion, Partition};

fn main() {
    let lambda: Partition = std::env::args()
        .nth(1)
        .as_deref()
        .unwrap_or("4,2,1")
        .parse()
        .expect("a partition such as 4,2,1");
    let w = lambda.weight();
    let fc = frobenius_from_partition(&lambda);

    let terms = bilinear_expansion(&fc);
    println!("s_({lambda}) with lambda = ({fc}), term count {}", terms.len());
    for t in &terms {
        println!("  {:>6} * Q~({}) * Q~({})", format_rational(&t.coeff), t.q_plus, t.q_minus);
    }

    let short = dedupe_symmetric(&terms).expect("terms pair up under the swap");
    println!("\nafter folding swapped pairs, term count {}", short.len());
    for t in &short {
        println!("  {:>6} * Q~({}) * Q~({})", format_rational(&t.coeff), t.q_plus, t.q_minus);
    }

    let lhs = schur(&lambda, w).restrict_to_odd();
    let rhs = evaluate_expansion(&short, w);
    println!("\nleft  = {lhs}\nright = {rhs}\nequal: {}", lhs == rhs);
}
