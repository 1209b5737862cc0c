//! Enumeration of all copies of a pattern graph inside a host graph.
//!
//! A copy is a subgraph of the host isomorphic to the pattern, not necessarily
//! induced, recorded as its (vertex set, edge set) image. Distinct embeddings
//! with the same image count as one copy.

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;
use thiserror::Error;

use crate::graph::{edge, EdgeSet, Graph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SubisoError {
    #[error("pattern has no vertices")]
    EmptyPattern,
    #[error("pattern vertex {v} is isolated; copies would not be determined by their edge sets")]
    IsolatedVertex { v: usize },
}

/// One occurrence of a pattern inside a host: the image subgraph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct SubgraphCopy {
    pub vertices: BTreeSet<usize>,
    pub edges: EdgeSet,
}

/// All distinct copies of `pattern` in `host`, in lexicographic order of
/// their sorted edge lists.
///
/// The pattern must have at least one vertex and no isolated vertices.
pub fn enumerate_copies(pattern: &Graph, host: &Graph) -> Result<Vec<SubgraphCopy>, SubisoError> {
    let pn = pattern.vertex_count();
    if pn == 0 {
        return Err(SubisoError::EmptyPattern);
    }
    for v in 0..pn {
        if pattern.degree(v) == 0 {
            return Err(SubisoError::IsolatedVertex { v });
        }
    }

    let order = search_order(pattern);
    let pattern_adj = pattern.adjacency();
    let host_adj = host.adjacency();
    let pattern_deg: Vec<usize> = (0..pn).map(|v| pattern.degree(v)).collect();
    let host_deg: Vec<usize> = (0..host.vertex_count()).map(|v| host.degree(v)).collect();

    // For each search position, the earlier positions holding pattern-neighbors.
    let mut earlier_neighbors: Vec<Vec<usize>> = vec![Vec::new(); pn];
    let mut position_of = vec![usize::MAX; pn];
    for (pos, &v) in order.iter().enumerate() {
        position_of[v] = pos;
        for &u in &pattern_adj[v] {
            if position_of[u] != usize::MAX {
                earlier_neighbors[pos].push(position_of[u]);
            }
        }
    }

    let mut found: BTreeSet<(EdgeSet, BTreeSet<usize>)> = BTreeSet::new();
    let mut image = vec![usize::MAX; pn]; // by search position
    let mut used = vec![false; host.vertex_count()];
    embed(
        pattern,
        host,
        &order,
        &earlier_neighbors,
        &pattern_deg,
        &host_deg,
        &host_adj,
        0,
        &mut image,
        &mut used,
        &mut found,
    );

    Ok(found
        .into_iter()
        .map(|(edges, vertices)| SubgraphCopy { vertices, edges })
        .collect())
}

/// BFS order over the pattern, component by component, so that every
/// non-root position has at least one earlier pattern-neighbor.
fn search_order(pattern: &Graph) -> Vec<usize> {
    let n = pattern.vertex_count();
    let adj = pattern.adjacency();
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &u in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn embed(
    pattern: &Graph,
    host: &Graph,
    order: &[usize],
    earlier_neighbors: &[Vec<usize>],
    pattern_deg: &[usize],
    host_deg: &[usize],
    host_adj: &[Vec<usize>],
    pos: usize,
    image: &mut [usize],
    used: &mut [bool],
    found: &mut BTreeSet<(EdgeSet, BTreeSet<usize>)>,
) {
    if pos == order.len() {
        let mut vertex_to_host = vec![usize::MAX; pattern.vertex_count()];
        for (p, &v) in order.iter().enumerate() {
            vertex_to_host[v] = image[p];
        }
        let edges: EdgeSet = pattern
            .edges()
            .map(|(u, v)| edge(vertex_to_host[u], vertex_to_host[v]))
            .collect();
        let vertices: BTreeSet<usize> = vertex_to_host.into_iter().collect();
        found.insert((edges, vertices));
        return;
    }
    let v = order[pos];
    let candidates: Vec<usize> = if let Some(&anchor) = earlier_neighbors[pos].first() {
        host_adj[image[anchor]].clone()
    } else {
        (0..host.vertex_count()).collect()
    };
    'candidates: for w in candidates {
        if used[w] || host_deg[w] < pattern_deg[v] {
            continue;
        }
        for &p in &earlier_neighbors[pos] {
            if !host.contains_edge(image[p], w) {
                continue 'candidates;
            }
        }
        image[pos] = w;
        used[w] = true;
        embed(
            pattern,
            host,
            order,
            earlier_neighbors,
            pattern_deg,
            host_deg,
            host_adj,
            pos + 1,
            image,
            used,
            found,
        );
        image[pos] = usize::MAX;
        used[w] = false;
    }
}

/// Splits `copies` into those whose edge set meets `x` and those it misses.
pub fn copies_hit_by<'a>(
    copies: &'a [SubgraphCopy],
    x: &EdgeSet,
) -> (Vec<&'a SubgraphCopy>, Vec<&'a SubgraphCopy>) {
    let mut hit = Vec::new();
    let mut missed = Vec::new();
    for copy in copies {
        if copy.edges.iter().any(|e| x.contains(e)) {
            hit.push(copy);
        } else {
            missed.push(copy);
        }
    }
    (hit, missed)
}
