//! Exact edge representativeness: the fewest host edges whose removal
//! destroys every copy of a pattern, plain and over invariant edge sets.
//!
//! Run with: cargo run --example edge_representativeness

use symrep::{edge_representativeness, Graph};

fn report(pattern_name: &str, pattern: &Graph, host_name: &str, host: &Graph) {
    let plain = edge_representativeness(pattern, host, false).unwrap();
    let symmetric = edge_representativeness(pattern, host, true).unwrap();
    println!("{pattern_name} in {host_name}:");
    println!(
        "  plain    = {} (witness edge ids {:?})",
        plain.value, plain.witness
    );
    println!(
        "  symmetric = {} (orbit ids {:?})",
        symmetric.value,
        symmetric.witness_orbits.as_ref().unwrap()
    );
    let m = pattern.edge_count();
    assert!(plain.value <= symmetric.value && symmetric.value <= plain.value * m);
    println!(
        "  sandwich: {} <= {} <= {} * {}",
        plain.value, symmetric.value, plain.value, m
    );
    println!();
}

fn main() {
    let triangle = Graph::cycle(3);
    let k4 = Graph::complete(4);
    // The symmetric value 6 = 2 * |E(triangle)| shows the generic upper
    // bound is tight here: the only invariant edge sets of K4 are nothing
    // and everything.
    report("triangle", &triangle, "K4", &k4);

    report("triangle", &triangle, "K5", &Graph::complete(5));
    report("triangle", &triangle, "C4 (no copies)", &Graph::cycle(4));

    let tailed = Graph::new(4, [(0, 1), (1, 2), (1, 3), (2, 3)]).unwrap();
    let k4_pendant =
        Graph::new(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4)]).unwrap();
    // For tadpole patterns the invariant optimum stays within the stronger
    // factor |E(K)| - 1 of the plain one.
    report("tailed triangle", &tailed, "K4 + pendant", &k4_pendant);
    let plain = edge_representativeness(&tailed, &k4_pendant, false).unwrap();
    let symmetric = edge_representativeness(&tailed, &k4_pendant, true).unwrap();
    println!(
        "tadpole factor check: {} <= ({} - 1) * {}",
        symmetric.value,
        tailed.edge_count(),
        plain.value
    );
}
