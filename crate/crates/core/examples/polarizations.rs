//! Binary markings and the polarizations they produce.
//!
//! ```text
//! cargo run --example polarizations -- 4,3,3
//! ```

use schurq::partitions::frobenius_from_partition;
use schurq::polarization::{binary_marking, render_table, s_and_t, Marking};
use schurq::{enumerate_polarizations, MarkingIndex, Partition};

fn main() {
    let lambda: Partition = std::env::args()
        .nth(1)
        .as_deref()
        .unwrap_or("3,2")
        .parse()
        .expect("a partition such as 4,3,3");
    let fc = frobenius_from_partition(&lambda);
    let (s, t) = s_and_t(&fc);
    println!("lambda = ({lambda}) = ({fc}), S = ({s}), T = ({t})\n");
    print!("{}", render_table(&fc));

    println!("\nreading every marking:");
    let r = fc.rank();
    for j in 0..MarkingIndex::count(r) {
        let idx = MarkingIndex::new(j, r).unwrap();
        match binary_marking(&fc, idx).unwrap() {
            Marking::Vanishing => println!("  {j:>3} {}  vanishes", idx.sign_string()),
            Marking::Nonzero { polarization, sigma, word_sign } => println!(
                "  {j:>3} {}  -> ({} ; {})  sigma {sigma:+} word sign {word_sign:+}",
                idx.sign_string(),
                polarization.mu_plus,
                polarization.mu_minus
            ),
        }
    }

    let pols = enumerate_polarizations(&fc);
    println!("\n{} polarizations; supplemented sides:", pols.len());
    for p in &pols {
        println!("  Q~({}) Q~({})  sgn {:+}  pi {}  hat m- {}", p.hat_mu_plus, p.hat_mu_minus, p.sgn, p.pi, p.hat_m_minus);
    }
}
