//! Enumerating copies of a pattern inside a host, and classifying them
//! against an edge set.
//!
//! Run with: cargo run --example subgraph_copies

use symrep::{copies_hit_by, edge_set, enumerate_copies, Graph};

fn main() {
    let triangle = Graph::cycle(3);
    let k4 = Graph::complete(4);

    let copies = enumerate_copies(&triangle, &k4).unwrap();
    println!("triangles in K4: {}", copies.len());
    for copy in &copies {
        println!("  vertices {:?}, edges {:?}", copy.vertices, copy.edges);
    }

    // Every K4 edge lies in exactly two triangles.
    let x = edge_set(&[(0, 1)]);
    let (hit, missed) = copies_hit_by(&copies, &x);
    println!(
        "edge (0,1) hits {} and misses {} of them",
        hit.len(),
        missed.len()
    );

    // A triangle-free host has no copies at all.
    let c4 = Graph::cycle(4);
    println!(
        "triangles in C4: {}",
        enumerate_copies(&triangle, &c4).unwrap().len()
    );

    // The tailed triangle has four copies in the bowtie: each triangle plus
    // one of the two tail edges available at the shared apex.
    let tailed = Graph::new(4, [(0, 1), (1, 2), (1, 3), (2, 3)]).unwrap();
    let bowtie = Graph::new(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap();
    let copies = enumerate_copies(&tailed, &bowtie).unwrap();
    println!("tailed triangles in the bowtie: {}", copies.len());
    for copy in &copies {
        println!("  edges {:?}", copy.edges);
    }
}
