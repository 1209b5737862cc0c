//! Permutations, finitely generated permutation groups, orbits, and graph
//! automorphism groups.
//!
//! Groups are always given by generators. Orbits are computed by closure over
//! the generators, so the group is never enumerated unless its order is
//! explicitly requested.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{edge, Edge, EdgeSet, Graph};

/// Cap on closure enumeration in [`PermGroup::order`].
pub const DEFAULT_ORDER_CAP: u64 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("image array of length {len} is not a bijection on 0..{len}")]
    NotABijection { len: usize },
    #[error("permutation degree {got} does not match expected degree {expected}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("group order exceeds the enumeration cap of {cap}")]
    OrderCapExceeded { cap: u64 },
}

/// A bijection on `0..n`, stored in image form: `image[i] = sigma(i)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    image: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = PermError;

    fn try_from(image: Vec<usize>) -> Result<Self, Self::Error> {
        Permutation::new(image)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.image
    }
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self, PermError> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &x in &image {
            if x >= n || seen[x] {
                return Err(PermError::NotABijection { len: n });
            }
            seen[x] = true;
        }
        Ok(Permutation { image })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.image[i]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `(self.compose(other))(x) = self(other(x))`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            image: other.image.iter().map(|&x| self.image[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.image.len()];
        for (i, &x) in self.image.iter().enumerate() {
            image[x] = i;
        }
        Permutation { image }
    }

    /// Induced action on an unordered pair.
    pub fn apply_edge(&self, e: Edge) -> Edge {
        edge(self.image[e.0], self.image[e.1])
    }

    /// Image of a set of points.
    pub fn apply_set(&self, set: &BTreeSet<usize>) -> BTreeSet<usize> {
        set.iter().map(|&x| self.image[x]).collect()
    }

    /// Image of an edge set under the induced edge action.
    pub fn apply_edge_set(&self, set: &EdgeSet) -> EdgeSet {
        set.iter().map(|&e| self.apply_edge(e)).collect()
    }
}

/// A permutation group of fixed degree, given by generators.
///
/// The identity is always a member of the generated group; an empty generator
/// list denotes the trivial group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self, PermError> {
        for g in &generators {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch {
                    expected: degree,
                    got: g.degree(),
                });
            }
        }
        Ok(PermGroup { degree, generators })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Order of the generated group by closure enumeration, with the default
    /// cap of [`DEFAULT_ORDER_CAP`] elements.
    pub fn order(&self) -> Result<u64, PermError> {
        self.order_capped(DEFAULT_ORDER_CAP)
    }

    pub fn order_capped(&self, cap: u64) -> Result<u64, PermError> {
        Ok(self.elements_capped(cap)?.len() as u64)
    }

    /// Every element of the generated group, by breadth-first closure.
    pub fn elements_capped(&self, cap: u64) -> Result<Vec<Permutation>, PermError> {
        let id = Permutation::identity(self.degree);
        let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        let mut out = Vec::new();
        while let Some(p) = queue.pop_front() {
            out.push(p.clone());
            for g in &self.generators {
                let q = g.compose(&p);
                if !seen.contains(&q) {
                    if seen.len() as u64 >= cap {
                        return Err(PermError::OrderCapExceeded { cap });
                    }
                    seen.insert(q.clone());
                    queue.push_back(q);
                }
            }
        }
        Ok(out)
    }
}

/// Which induced action of a graph automorphism group to take orbits under.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Action {
    Vertices,
    Edges,
}

/// A partition of `0..ground_size` into orbit classes.
///
/// Classes are sorted internally and listed in order of their smallest
/// element, so class ids are deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPartition {
    classes: Vec<Vec<usize>>,
    index: BTreeMap<usize, usize>,
}

impl OrbitPartition {
    fn from_classes(mut classes: Vec<Vec<usize>>) -> Self {
        for class in &mut classes {
            class.sort_unstable();
        }
        classes.sort();
        let mut index = BTreeMap::new();
        for (id, class) in classes.iter().enumerate() {
            for &x in class {
                index.insert(x, id);
            }
        }
        OrbitPartition { classes, index }
    }

    /// Orbit closure of the dense ground set `0..ground_size` under an action
    /// given by permutations of that ground set.
    pub fn from_generators(ground_size: usize, generators: &[Permutation]) -> Self {
        let mut class_of = vec![usize::MAX; ground_size];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for start in 0..ground_size {
            if class_of[start] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut class = vec![start];
            class_of[start] = id;
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for g in generators {
                    let y = g.apply(x);
                    if class_of[y] == usize::MAX {
                        class_of[y] = id;
                        class.push(y);
                        queue.push_back(y);
                    }
                }
            }
            classes.push(class);
        }
        OrbitPartition::from_classes(classes)
    }

    /// The partition of `0..ground_size` into singletons (trivial action).
    pub fn singletons(ground_size: usize) -> Self {
        OrbitPartition::from_classes((0..ground_size).map(|x| vec![x]).collect())
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, x: usize) -> Option<usize> {
        self.index.get(&x).copied()
    }

    pub fn ground_set(&self) -> impl Iterator<Item = usize> + '_ {
        self.index.keys().copied()
    }

    /// True iff `set` is a union of whole classes (the working definition of
    /// an invariant set). Points outside the ground set count as singletons.
    pub fn is_union_of_classes(&self, set: &BTreeSet<usize>) -> bool {
        self.classes.iter().all(|class| {
            let hits = class.iter().filter(|x| set.contains(x)).count();
            hits == 0 || hits == class.len()
        })
    }

    /// Extends the partition to cover `universe`, adding a singleton class for
    /// every point not already in the ground set. Class ids are reassigned by
    /// smallest element.
    pub fn extended_to(&self, universe: &BTreeSet<usize>) -> OrbitPartition {
        let mut classes = self.classes.clone();
        for &x in universe {
            if !self.index.contains_key(&x) {
                classes.push(vec![x]);
            }
        }
        OrbitPartition::from_classes(classes)
    }
}

impl Serialize for OrbitPartition {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.classes.serialize(serializer)
    }
}

/// Orbit partition of the vertices or edges of `g` under a group of degree
/// `g.vertex_count()`.
pub fn orbits(group: &PermGroup, action: Action, g: &Graph) -> Result<OrbitPartition, PermError> {
    if group.degree() != g.vertex_count() {
        return Err(PermError::DegreeMismatch {
            expected: g.vertex_count(),
            got: group.degree(),
        });
    }
    match action {
        Action::Vertices => Ok(OrbitPartition::from_generators(
            g.vertex_count(),
            group.generators(),
        )),
        Action::Edges => {
            let edge_gens: Vec<Permutation> = group
                .generators()
                .iter()
                .map(|p| edge_permutation(g, p))
                .collect();
            Ok(OrbitPartition::from_generators(g.edge_count(), &edge_gens))
        }
    }
}

/// The permutation induced by `sigma` on the edge ids of `g` (ranks in the
/// lexicographic edge order). Panics if `sigma` is not an automorphism.
pub fn edge_permutation(g: &Graph, sigma: &Permutation) -> Permutation {
    let index = g.edge_index();
    let image: Vec<usize> = g
        .edge_vec()
        .iter()
        .map(|&e| {
            let f = sigma.apply_edge(e);
            *index
                .get(&f)
                .unwrap_or_else(|| panic!("{sigma:?} maps edge {e:?} outside the graph"))
        })
        .collect();
    Permutation::new(image).expect("automorphism induces a bijection on edges")
}

/// Generators of the full automorphism group of `g`.
///
/// Backtracking over vertex maps with degree pruning: for each base point `i`
/// in turn and each candidate image `j > i`, find (if it exists) the
/// lexicographically smallest automorphism fixing `0..i` pointwise and sending
/// `i` to `j`. The collected coset representatives generate the group, and the
/// generator list is deterministic.
pub fn automorphism_group(g: &Graph) -> PermGroup {
    let n = g.vertex_count();
    let adj = adjacency_matrix(g);
    let deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut generators = Vec::new();
    for base in 0..n {
        for target in base + 1..n {
            if deg[base] != deg[target] {
                continue;
            }
            if let Some(p) = find_automorphism_with_prefix(n, &adj, &deg, base, target) {
                debug_assert!(!p.is_identity());
                generators.push(p);
            }
        }
    }
    // An automorphism must map edges to edges; verify each returned generator.
    for p in &generators {
        for e in g.edges() {
            let f = p.apply_edge(e);
            assert!(
                g.contains_edge(f.0, f.1),
                "generator is not an automorphism"
            );
        }
    }
    PermGroup::new(n, generators).expect("generators have the right degree")
}

fn adjacency_matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut adj = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    adj
}

/// Smallest automorphism with `sigma(v) = v` for `v < base` and
/// `sigma(base) = target`, or `None` if no such automorphism exists.
fn find_automorphism_with_prefix(
    n: usize,
    adj: &[Vec<bool>],
    deg: &[usize],
    base: usize,
    target: usize,
) -> Option<Permutation> {
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    for (v, slot) in image.iter_mut().enumerate().take(base) {
        *slot = v;
        used[v] = true;
    }
    // The forced prefix must itself be consistent.
    for row in adj.iter().take(base) {
        if row[base] != row[target] {
            return None;
        }
    }
    image[base] = target;
    used[target] = true;
    if extend(n, adj, deg, base + 1, &mut image, &mut used) {
        Some(Permutation::new(image).expect("search fills a bijection"))
    } else {
        None
    }
}

fn extend(
    n: usize,
    adj: &[Vec<bool>],
    deg: &[usize],
    v: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    if v == n {
        return true;
    }
    'candidates: for w in 0..n {
        if used[w] || deg[v] != deg[w] {
            continue;
        }
        for u in 0..v {
            if adj[u][v] != adj[image[u]][w] {
                continue 'candidates;
            }
        }
        image[v] = w;
        used[w] = true;
        if extend(n, adj, deg, v + 1, image, used) {
            return true;
        }
        image[v] = usize::MAX;
        used[w] = false;
    }
    false
}

/// True iff the automorphism group has a single vertex orbit. The empty graph
/// is not vertex-transitive.
pub fn is_vertex_transitive(g: &Graph) -> bool {
    if g.vertex_count() == 0 {
        return false;
    }
    let group = automorphism_group(g);
    orbits(&group, Action::Vertices, g)
        .expect("degrees match")
        .class_count()
        == 1
}
