//! Weighted representatives and the cost of fairness.
//!
//! From every group of ten students, one of whom the nine others respect,
//! a council must include either the respected one (weight 1) or at least
//! three of the respecting ones (weight 1/3 each): a set of students is
//! acceptable when it carries weight at least one against every such star.
//! If some acceptable council of 40 exists, a fair one (invariant under all
//! symmetries of the respect graph) of at most 40 * (1 + 9/3) = 160 exists:
//! the bound constant is M = max Σ F = 4.
//!
//! Run with: cargo run --example student_council

use std::collections::BTreeSet;

use num::BigRational;
use symrep::perm::{OrbitPartition, Permutation};
use symrep::symmetrize::{
    product_oracle, symmetrize_weighted, weight_lift_size, WeightFunction, WeightedFamily,
};

fn third() -> BigRational {
    BigRational::new(1.into(), 3.into())
}

fn main() {
    // Two ten-student stars swapped by a symmetry: centers 0 and 1, leaves
    // 2..11 and 11..20.
    let star_a = WeightFunction::new(
        std::iter::once((0usize, BigRational::from_integer(1.into())))
            .chain((2..11).map(|e| (e, third()))),
    )
    .unwrap();
    let mut image: Vec<usize> = (0..20).collect();
    image.swap(0, 1);
    for e in 2..11 {
        image.swap(e, e + 9);
    }
    let swap = Permutation::new(image).unwrap();
    let star_b = star_a.mapped(|e| swap.apply(e));
    let family = WeightedFamily::new(vec![star_a, star_b]);
    let orbits = OrbitPartition::from_generators(20, std::slice::from_ref(&swap));

    // The two centers form an acceptable council.
    let x: BTreeSet<usize> = [0, 1].into_iter().collect();
    let report = symmetrize_weighted(&family, &x, &orbits).unwrap();
    println!("bound constant M = {}", report.bound.as_ref().unwrap());
    println!("fair council Y = {:?} (the center orbit)", report.y);
    for entry in &report.ledger {
        println!(
            "  orbit {}: size {}, meets X {} time(s), admitted: {}",
            entry.class_id, entry.size, entry.x_hits, entry.admitted
        );
    }

    // The product construction models the weights by an auxiliary set E
    // with |E| * w integral for every weight; here |E| = 3. Running the
    // multiplicity-|E| symmetrization on the lifted instance and projecting
    // back must give the same answer.
    let lift = weight_lift_size(&family).unwrap();
    println!("auxiliary set size |E| = {lift}");
    let lifted = product_oracle(&family, &x, &orbits).unwrap();
    assert_eq!(report, lifted);
    println!("product construction agrees with the direct computation");
}
