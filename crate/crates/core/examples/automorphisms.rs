//! Automorphism groups and orbits of small graphs.
//!
//! Run with: cargo run --example automorphisms

use symrep::{automorphism_group, is_vertex_transitive, orbits, Action, Graph};

fn describe(name: &str, g: &Graph) {
    let group = automorphism_group(g);
    let order = group.order().expect("desk-scale groups enumerate");
    let vertex_orbits = orbits(&group, Action::Vertices, g).unwrap();
    let edge_orbits = orbits(&group, Action::Edges, g).unwrap();
    println!("{name}: {g}");
    println!(
        "  automorphism group order {order}, {} generator(s)",
        group.generators().len()
    );
    for p in group.generators() {
        println!("    generator {:?}", p.image());
    }
    println!("  vertex orbits: {:?}", vertex_orbits.classes());
    println!(
        "  edge orbits (edges listed lexicographically): {:?}",
        g.edge_vec()
    );
    println!("                by edge id: {:?}", edge_orbits.classes());
    println!("  vertex-transitive: {}", is_vertex_transitive(g));
    println!();
}

fn main() {
    describe("triangle", &Graph::cycle(3));
    describe("path on 3 vertices", &Graph::path(3));
    describe("K4", &Graph::complete(4));
    describe(
        "tailed triangle",
        &Graph::new(4, [(0, 1), (1, 2), (1, 3), (2, 3)]).unwrap(),
    );
    describe("5-cycle", &Graph::cycle(5));
    describe(
        "two disjoint triangles",
        &Graph::new(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]).unwrap(),
    );
}
