//! Charged and neutral free fermions acting on Maya diagrams, and Schur
//! functions as vacuum expectation values.
//!
//! ```text
//! cargo run --example fock_space
//! ```

use schurq::fock::{
    apply_current, apply_phi, apply_psi, apply_psi_dag, vev, vev_schur, vev_schur_q, FockVector,
    MayaState,
};
use schurq::partitions::frobenius_from_partition;
use schurq::symfunc::{schur, schur_q_half};
use schurq::{Partition, Sign, StrictPartition};

fn main() {
    let vacuum = FockVector::vacuum();
    println!("psi_2 |0>      = {}", apply_psi(2, &vacuum));
    println!("psi^dag_-1 |0> = {}", apply_psi_dag(-1, &vacuum));
    println!("phi+_0 |0>     = {}", apply_phi(Sign::Plus, 0, &vacuum));

    let state = MayaState { charge: 0, lambda: Partition::new(vec![1]) };
    println!("\nJ_1 {state} = {}", apply_current(1, &FockVector::basis(state.clone())));
    println!("J_2 {state} = {}", apply_current(2, &FockVector::basis(state.clone())));

    for word in ["phi+(-1) phi+(1)", "psi(1,t) psidag(-1,t) | W=3", "phi+(2,t) phi-(1,t) | W=3"] {
        println!("\n<0| {word} |0> = {}", vev(&word.parse().unwrap(), 3).unwrap());
    }

    let lambda = Partition::new(vec![3, 1]);
    let fc = frobenius_from_partition(&lambda);
    let from_fermions = vev_schur(&fc, 4).unwrap();
    println!("\ns_(3,1) from fermions: {from_fermions}");
    println!("matches Jacobi-Trudi: {}", from_fermions == schur(&lambda, 4));

    let alpha: StrictPartition = "3,1".parse().unwrap();
    let q = vev_schur_q(&alpha, Sign::Plus, 4).unwrap();
    println!("Q~_(3,1)(t/2) from neutral fermions: {q}");
    println!("matches the Pfaffian: {}", q == schur_q_half(&alpha, 4));
}
