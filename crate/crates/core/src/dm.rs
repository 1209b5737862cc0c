//! Bipartite maximum matching and the canonical automorphism-invariant
//! minimum vertex cover.
//!
//! The canonical cover is the set of A-vertices lying in every minimum cover
//! together with the B-vertices lying in at least one; it has minimum
//! cardinality and is fixed by every part-preserving automorphism. Membership
//! is decided per vertex with one matching computation each.

use std::collections::BTreeSet;

use serde::ser::SerializeStruct;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DmError {
    #[error("line {line}: cannot parse {text:?}")]
    Malformed { line: usize, text: String },
    #[error("missing 'p <a_size> <b_size>' header line")]
    MissingHeader,
    #[error("vertex {v} out of range for part of size {size}")]
    OutOfRange { v: usize, size: usize },
    #[error("duplicate edge {a} {b}")]
    Duplicate { a: usize, b: usize },
    #[error("canonical cover defect: {detail} (theorem guarantees this cannot happen)")]
    CanonicalCoverDefect { detail: String },
}

/// A bipartite graph with parts `A = 0..a_size` and `B = 0..b_size` and edges
/// as (a-index, b-index) pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BipartiteGraph {
    a_size: usize,
    b_size: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl BipartiteGraph {
    pub fn new(
        a_size: usize,
        b_size: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, DmError> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a >= a_size {
                return Err(DmError::OutOfRange { v: a, size: a_size });
            }
            if b >= b_size {
                return Err(DmError::OutOfRange { v: b, size: b_size });
            }
            if !set.insert((a, b)) {
                return Err(DmError::Duplicate { a, b });
            }
        }
        Ok(BipartiteGraph {
            a_size,
            b_size,
            edges: set,
        })
    }

    /// Parses the text format: a header line `p <a_size> <b_size>`, then one
    /// line `a b` per edge. Blank lines are ignored.
    pub fn parse(text: &str) -> Result<Self, DmError> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let malformed = || DmError::Malformed {
                line: line_no,
                text: raw.to_string(),
            };
            if header.is_none() {
                if fields.len() != 3 || fields[0] != "p" {
                    return Err(DmError::MissingHeader);
                }
                let a = fields[1].parse().map_err(|_| malformed())?;
                let b = fields[2].parse().map_err(|_| malformed())?;
                header = Some((a, b));
                continue;
            }
            if fields.len() != 2 {
                return Err(malformed());
            }
            let a = fields[0].parse().map_err(|_| malformed())?;
            let b = fields[1].parse().map_err(|_| malformed())?;
            edges.push((a, b));
        }
        let (a_size, b_size) = header.ok_or(DmError::MissingHeader)?;
        BipartiteGraph::new(a_size, b_size, edges)
    }

    pub fn a_size(&self) -> usize {
        self.a_size
    }

    pub fn b_size(&self) -> usize {
        self.b_size
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a, b))
    }

    pub fn a_degree(&self, a: usize) -> usize {
        self.edges.iter().filter(|&&(x, _)| x == a).count()
    }

    pub fn b_degree(&self, b: usize) -> usize {
        self.edges.iter().filter(|&&(_, y)| y == b).count()
    }

    /// Adjacency lists from A to B, sorted ascending.
    fn a_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.a_size];
        for &(a, b) in &self.edges {
            adj[a].push(b);
        }
        adj
    }

    /// The graph with the given vertices (and their edges) removed; part
    /// sizes are kept so indices stay stable.
    fn without(&self, drop_a: &BTreeSet<usize>, drop_b: &BTreeSet<usize>) -> BipartiteGraph {
        BipartiteGraph {
            a_size: self.a_size,
            b_size: self.b_size,
            edges: self
                .edges
                .iter()
                .filter(|&&(a, b)| !drop_a.contains(&a) && !drop_b.contains(&b))
                .copied()
                .collect(),
        }
    }
}

/// A matching: pairwise vertex-disjoint edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Matching {
    pub pairs: BTreeSet<(usize, usize)>,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.pairs.len()
    }
}

/// A vertex cover split by part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cover {
    pub a: BTreeSet<usize>,
    pub b: BTreeSet<usize>,
}

impl Cover {
    pub fn size(&self) -> usize {
        self.a.len() + self.b.len()
    }

    pub fn covers(&self, g: &BipartiteGraph) -> bool {
        g.edges()
            .all(|(a, b)| self.a.contains(&a) || self.b.contains(&b))
    }
}

impl Serialize for Cover {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Cover", 3)?;
        s.serialize_field("tau", &self.size())?;
        s.serialize_field("a", &self.a)?;
        s.serialize_field("b", &self.b)?;
        s.end()
    }
}

/// Per-vertex minimum-cover membership flags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CoverMembership {
    pub in_some: bool,
    pub in_all: bool,
}

/// Maximum-cardinality matching by Hopcroft-Karp layered augmentation.
/// Deterministic: adjacency is scanned in index order.
pub fn max_matching(g: &BipartiteGraph) -> Matching {
    let adj = g.a_adjacency();
    let mut match_a: Vec<Option<usize>> = vec![None; g.a_size];
    let mut match_b: Vec<Option<usize>> = vec![None; g.b_size];
    loop {
        // BFS layering from free A-vertices.
        let mut layer: Vec<Option<usize>> = vec![None; g.a_size];
        let mut queue: Vec<usize> = Vec::new();
        for a in 0..g.a_size {
            if match_a[a].is_none() {
                layer[a] = Some(0);
                queue.push(a);
            }
        }
        let mut reached_free_b = false;
        let mut qi = 0;
        while qi < queue.len() {
            let a = queue[qi];
            qi += 1;
            for &b in &adj[a] {
                match match_b[b] {
                    None => reached_free_b = true,
                    Some(a2) => {
                        if layer[a2].is_none() {
                            layer[a2] = Some(layer[a].unwrap() + 1);
                            queue.push(a2);
                        }
                    }
                }
            }
        }
        if !reached_free_b {
            break;
        }
        // DFS augmentation along the layering.
        fn augment(
            a: usize,
            adj: &[Vec<usize>],
            layer: &mut [Option<usize>],
            match_a: &mut [Option<usize>],
            match_b: &mut [Option<usize>],
        ) -> bool {
            for &b in &adj[a] {
                let ok = match match_b[b] {
                    None => true,
                    Some(a2) => {
                        layer[a2] == Some(layer[a].unwrap() + 1)
                            && augment(a2, adj, layer, match_a, match_b)
                    }
                };
                if ok {
                    match_a[a] = Some(b);
                    match_b[b] = Some(a);
                    return true;
                }
            }
            layer[a] = None; // dead end for this phase
            false
        }
        let mut augmented = false;
        for a in 0..g.a_size {
            if match_a[a].is_none()
                && layer[a] == Some(0)
                && augment(a, &adj, &mut layer, &mut match_a, &mut match_b)
            {
                augmented = true;
            }
        }
        if !augmented {
            break;
        }
    }
    let pairs: BTreeSet<(usize, usize)> = match_a
        .iter()
        .enumerate()
        .filter_map(|(a, mb)| mb.map(|b| (a, b)))
        .collect();
    Matching { pairs }
}

/// For every vertex, whether it lies in some minimum vertex cover and whether
/// it lies in all of them. Returns `(flags for A, flags for B)`.
///
/// With `tau` the minimum cover size (Koenig: the maximum matching size):
/// a vertex `v` of positive degree is in some minimum cover iff deleting it
/// drops `tau` by one, and in all of them iff every cover avoiding `v` (which
/// must contain all of `N(v)`) is larger than `tau`. Isolated vertices are in
/// no minimum cover.
pub fn min_cover_membership(g: &BipartiteGraph) -> (Vec<CoverMembership>, Vec<CoverMembership>) {
    let tau = max_matching(g).size();
    let side = |is_a: bool, size: usize| -> Vec<CoverMembership> {
        (0..size)
            .map(|v| {
                let (deg, neighbors): (usize, BTreeSet<usize>) = if is_a {
                    let nb: BTreeSet<usize> =
                        g.edges().filter(|&(a, _)| a == v).map(|(_, b)| b).collect();
                    (nb.len(), nb)
                } else {
                    let nb: BTreeSet<usize> =
                        g.edges().filter(|&(_, b)| b == v).map(|(a, _)| a).collect();
                    (nb.len(), nb)
                };
                if deg == 0 {
                    return CoverMembership {
                        in_some: false,
                        in_all: false,
                    };
                }
                let just_v: BTreeSet<usize> = [v].into_iter().collect();
                let minus_v = if is_a {
                    g.without(&just_v, &BTreeSet::new())
                } else {
                    g.without(&BTreeSet::new(), &just_v)
                };
                let in_some = max_matching(&minus_v).size() == tau - 1;
                let minus_v_and_nv = if is_a {
                    g.without(&just_v, &neighbors)
                } else {
                    g.without(&neighbors, &just_v)
                };
                let in_all = deg + max_matching(&minus_v_and_nv).size() > tau;
                CoverMembership { in_some, in_all }
            })
            .collect()
    };
    (side(true, g.a_size), side(false, g.b_size))
}

/// The canonical minimum vertex cover, invariant under all part-preserving
/// automorphisms: A-vertices in all minimum covers plus B-vertices in some.
///
/// The returned cover is asserted to cover every edge and to have size equal
/// to the maximum matching; a failure is reported as a defect.
pub fn invariant_min_cover(g: &BipartiteGraph) -> Result<Cover, DmError> {
    let tau = max_matching(g).size();
    let (a_flags, b_flags) = min_cover_membership(g);
    let cover = Cover {
        a: a_flags
            .iter()
            .enumerate()
            .filter(|(_, f)| f.in_all)
            .map(|(i, _)| i)
            .collect(),
        b: b_flags
            .iter()
            .enumerate()
            .filter(|(_, f)| f.in_some)
            .map(|(i, _)| i)
            .collect(),
    };
    if !cover.covers(g) {
        return Err(DmError::CanonicalCoverDefect {
            detail: format!("candidate {cover:?} is not a cover"),
        });
    }
    if cover.size() != tau {
        return Err(DmError::CanonicalCoverDefect {
            detail: format!(
                "candidate size {} differs from matching size {tau}",
                cover.size()
            ),
        });
    }
    Ok(cover)
}
