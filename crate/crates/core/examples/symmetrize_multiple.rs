//! Making a system of k-multiple representatives fair: the invariant system
//! Y admits every orbit that X meets often enough, and its size is bounded
//! by |X| * max|F| / k.
//!
//! Run with: cargo run --example symmetrize_multiple

use std::collections::BTreeSet;

use symrep::cover::FamilyOfSets;
use symrep::perm::{OrbitPartition, Permutation};
use symrep::{automorphism_group, orbits, symmetrize_multiple, Action, Graph};

fn main() {
    // Two disjoint triangles; the family is the two triangle edge sets and
    // X picks one edge from each. The automorphism group fuses all six
    // edges into one orbit, so fairness costs a factor of three.
    let g = Graph::new(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]).unwrap();
    let group = automorphism_group(&g);
    let edge_orbits = orbits(&group, Action::Edges, &g).unwrap();
    let index = g.edge_index();
    let fam = FamilyOfSets::new(vec![
        [(0, 1), (0, 2), (1, 2)].iter().map(|e| index[e]).collect(),
        [(3, 4), (3, 5), (4, 5)].iter().map(|e| index[e]).collect(),
    ]);
    let x: BTreeSet<usize> = [index[&(0, 1)], index[&(3, 4)]].into_iter().collect();
    let report = symmetrize_multiple(&fam, &x, 1, &edge_orbits).unwrap();
    println!("two disjoint triangles, X = one edge per triangle:");
    println!("  m = max |F| = {}", report.bound.as_ref().unwrap());
    println!("  Y = edge ids {:?} (all six edges)", report.y);
    for entry in &report.ledger {
        println!(
            "  orbit {}: size {}, |orbit ∩ X| = {}, admitted: {}",
            entry.class_id, entry.size, entry.x_hits, entry.admitted
        );
    }
    println!("  k|Y| = {} <= |X ∩ Y| * m = {}", report.y.len(), 2 * 3);
    println!();

    // Double representatives in hundred-element sets: the guarantee is
    // |Y| <= (m/k)|X| = 50|X|, and a full rotation makes it tight.
    let mut rot: Vec<usize> = (1..100).collect();
    rot.push(0);
    let part = OrbitPartition::from_generators(100, &[Permutation::new(rot).unwrap()]);
    let fam = FamilyOfSets::new(vec![(0..100).collect()]);
    let x: BTreeSet<usize> = [0, 1].into_iter().collect();
    let report = symmetrize_multiple(&fam, &x, 2, &part).unwrap();
    println!("one rotation-invariant 100-element set, k = 2, X = {{0, 1}}:");
    println!(
        "  m = {}, bound factor m/k = 50",
        report.bound.as_ref().unwrap()
    );
    println!("  |Y| = {} = 50 * |X| exactly", report.y.len());
}
