//! Checks the bilinear expansion for every partition up to a weight, in
//! parallel.
//!
//! ```text
//! cargo run --release --example verify_sweep -- 12
//! ```

use std::time::Instant;

use schurq::expansion::sweep_with_jobs;

fn main() {
    let max: u32 = std::env::args().nth(1).map_or(10, |s| s.parse().expect("a weight"));
    let start = Instant::now();
    let reports = sweep_with_jobs(max, 0);
    let mut by_weight = vec![(0usize, 0usize); max as usize + 1];
    for r in &reports {
        let slot = &mut by_weight[r.lambda.weight() as usize];
        slot.0 += 1;
        slot.1 += usize::from(r.ok);
        if !r.ok {
            println!("FAILED ({}): residual {}", r.lambda, r.residual);
        }
    }
    for (w, (n, ok)) in by_weight.iter().enumerate().skip(1) {
        println!("weight {w:>2}: {ok}/{n} ok");
    }
    let terms: usize = reports.iter().map(|r| r.term_count).sum();
    println!(
        "{} partitions, {terms} expansion terms, {:.2?}",
        reports.len(),
        start.elapsed()
    );
}
