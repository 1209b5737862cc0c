//! The canonical minimum vertex cover of a bipartite graph: A-vertices lying
//! in every minimum cover plus B-vertices lying in at least one. It has
//! minimum size and is fixed by every part-preserving automorphism, which is
//! what makes it usable inside invariant constructions.
//!
//! Run with: cargo run --example dm_cover

use symrep::dm::{invariant_min_cover, max_matching, min_cover_membership, BipartiteGraph};

fn describe(name: &str, g: &BipartiteGraph) {
    let tau = max_matching(g).size();
    let (a_flags, b_flags) = min_cover_membership(g);
    let cover = invariant_min_cover(g).unwrap();
    println!(
        "{name}: parts {} + {}, {} edges",
        g.a_size(),
        g.b_size(),
        g.edge_count()
    );
    println!("  maximum matching (= minimum cover size) = {tau}");
    for (i, f) in a_flags.iter().enumerate() {
        println!(
            "  a{i}: in some min cover: {}, in all: {}",
            f.in_some, f.in_all
        );
    }
    for (j, f) in b_flags.iter().enumerate() {
        println!(
            "  b{j}: in some min cover: {}, in all: {}",
            f.in_some, f.in_all
        );
    }
    println!("  canonical cover: A {:?}, B {:?}", cover.a, cover.b);
    println!();
}

fn main() {
    // A single edge has two minimum covers; the canonical one takes the B
    // endpoint (in some cover) and no A vertex (none is in all covers).
    describe("single edge", &BipartiteGraph::new(1, 1, [(0, 0)]).unwrap());

    // A star's center is the unique minimum cover.
    describe(
        "star with center a0",
        &BipartiteGraph::new(1, 3, [(0, 0), (0, 1), (0, 2)]).unwrap(),
    );

    // The 4-cycle has minimum covers {a0,a1} and {b0,b1}; the canonical one
    // is the whole B side, visibly invariant under the rotation that swaps
    // the parts' roles.
    describe(
        "4-cycle",
        &BipartiteGraph::new(2, 2, [(0, 0), (0, 1), (1, 0), (1, 1)]).unwrap(),
    );

    describe(
        "K3,3 minus a perfect matching",
        &BipartiteGraph::new(3, 3, [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)]).unwrap(),
    );
}
