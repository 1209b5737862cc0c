//! Exact minimum hitting sets over families of finite sets, plain and
//! restricted to invariant (orbit-union) selections; computes the edge
//! representativeness of a pattern in a host graph and its symmetric variant.
//!
//! Both solvers run the same branch-and-bound engine: branch on an item of an
//! uncovered set with the fewest remaining candidates, start from a greedy
//! upper bound, and prune with a disjoint-packing lower bound. Witnesses are
//! the lexicographically smallest optima, extracted by fixing items in
//! ascending order against the engine.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::perm::{automorphism_group, orbits, Action, OrbitPartition};
use crate::subiso::{enumerate_copies, SubisoError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoverError {
    #[error("family member {index} is empty: no hitting set exists")]
    EmptyMember { index: usize },
    #[error("element {element} is not covered by any orbit class")]
    UncoveredElement { element: usize },
    #[error(transparent)]
    Pattern(#[from] SubisoError),
}

/// A family of finite sets of element ids (edge ids of a host graph, or
/// abstract ids).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyOfSets {
    sets: Vec<BTreeSet<usize>>,
}

impl FamilyOfSets {
    pub fn new(sets: Vec<BTreeSet<usize>>) -> Self {
        FamilyOfSets { sets }
    }

    pub fn from_slices(sets: &[&[usize]]) -> Self {
        FamilyOfSets {
            sets: sets.iter().map(|s| s.iter().copied().collect()).collect(),
        }
    }

    pub fn sets(&self) -> &[BTreeSet<usize>] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Union of all members.
    pub fn elements(&self) -> BTreeSet<usize> {
        self.sets.iter().flatten().copied().collect()
    }
}

/// Result of a hitting-set computation. `value` is the minimum cardinality of
/// a feasible selection, counted in elements; for the orbit-restricted solver
/// `witness` is the union of the chosen classes and `witness_orbits` lists
/// their class ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HittingResult {
    pub value: usize,
    pub witness: BTreeSet<usize>,
    pub witness_orbits: Option<Vec<usize>>,
}

/// A weighted hitting-set instance over dense item ids.
struct Instance {
    weights: Vec<u64>,
    sets: Vec<Vec<usize>>, // each sorted ascending
}

impl Instance {
    fn set_contains(&self, set: usize, item: usize) -> bool {
        self.sets[set].binary_search(&item).is_ok()
    }

    /// Items of `set` that are `>= floor`, ascending.
    fn allowed<'a>(&'a self, set: usize, floor: usize) -> impl Iterator<Item = usize> + 'a {
        let items = &self.sets[set];
        let start = items.partition_point(|&x| x < floor);
        items[start..].iter().copied()
    }

    /// Greedy upper bound: repeatedly take the item covering the most alive
    /// sets (ties: lighter, then smaller id). `None` if some set has no
    /// allowed item.
    fn greedy_upper(&self, floor: usize) -> Option<u64> {
        let mut alive: Vec<usize> = (0..self.sets.len()).collect();
        let mut total = 0u64;
        while !alive.is_empty() {
            let mut candidates: BTreeSet<usize> = BTreeSet::new();
            for &s in &alive {
                let mut any = false;
                for item in self.allowed(s, floor) {
                    candidates.insert(item);
                    any = true;
                }
                if !any {
                    return None;
                }
            }
            let best = candidates
                .into_iter()
                .map(|c| {
                    let covered = alive.iter().filter(|&&s| self.set_contains(s, c)).count();
                    (c, covered)
                })
                .max_by(|(c1, n1), (c2, n2)| {
                    n1.cmp(n2)
                        .then(self.weights[*c2].cmp(&self.weights[*c1]))
                        .then(c2.cmp(c1))
                })
                .map(|(c, _)| c)
                .expect("alive sets have allowed items");
            total += self.weights[best];
            alive.retain(|&s| !self.set_contains(s, best));
        }
        Some(total)
    }

    /// Exact minimum total weight of a selection of items `>= floor` hitting
    /// every set in `alive`, if one exists with weight `<= budget`.
    fn min_weight(&self, alive: &[usize], floor: usize, budget: u64) -> Option<u64> {
        if alive.is_empty() {
            return Some(0);
        }
        // Disjoint-packing lower bound.
        let mut blocked: BTreeSet<usize> = BTreeSet::new();
        let mut lower = 0u64;
        for &s in alive {
            let mut min_w: Option<u64> = None;
            let mut disjoint = true;
            for item in self.allowed(s, floor) {
                if blocked.contains(&item) {
                    disjoint = false;
                    break;
                }
                min_w = Some(min_w.map_or(self.weights[item], |w: u64| w.min(self.weights[item])));
            }
            match (disjoint, min_w) {
                (true, Some(w)) => {
                    lower += w;
                    blocked.extend(self.allowed(s, floor));
                }
                (true, None) => return None, // a set with no allowed items
                (false, _) => {}
            }
        }
        if lower > budget {
            return None;
        }
        // Branch on the alive set with the fewest allowed items.
        let branch = *alive
            .iter()
            .min_by_key(|&&s| self.allowed(s, floor).count())
            .expect("alive is nonempty");
        let mut best: Option<u64> = None;
        let mut remaining_budget = budget;
        for item in self.allowed(branch, floor) {
            let w = self.weights[item];
            if w > remaining_budget {
                continue;
            }
            let next_alive: Vec<usize> = alive
                .iter()
                .copied()
                .filter(|&s| !self.set_contains(s, item))
                .collect();
            if let Some(sub) = self.min_weight(&next_alive, floor, remaining_budget - w) {
                let total = w + sub;
                if best.is_none_or(|b| total < b) {
                    best = Some(total);
                    if total == 0 {
                        break;
                    }
                    remaining_budget = total - 1;
                }
            }
        }
        best
    }

    /// Exact optimum value over all items.
    fn optimum(&self) -> Option<u64> {
        let upper = self.greedy_upper(0)?;
        let alive: Vec<usize> = (0..self.sets.len()).collect();
        let value = self
            .min_weight(&alive, 0, upper)
            .expect("greedy bound is achievable");
        Some(value)
    }

    /// The lexicographically smallest optimal selection, as an ascending item
    /// list. `value` must be the exact optimum.
    fn lex_min_witness(&self, value: u64) -> Vec<usize> {
        let mut chosen: Vec<usize> = Vec::new();
        let mut spent = 0u64;
        let mut alive: Vec<usize> = (0..self.sets.len()).collect();
        let mut floor = 0usize;
        while !alive.is_empty() {
            let candidates: BTreeSet<usize> =
                alive.iter().flat_map(|&s| self.allowed(s, floor)).collect();
            let mut picked = None;
            for c in candidates {
                let w = self.weights[c];
                if spent + w > value {
                    continue;
                }
                let rest = value - spent - w;
                let next_alive: Vec<usize> = alive
                    .iter()
                    .copied()
                    .filter(|&s| !self.set_contains(s, c))
                    .collect();
                let feasible = if next_alive.is_empty() {
                    rest == 0
                } else {
                    match self.min_weight(&next_alive, c + 1, rest) {
                        Some(sub) => {
                            assert_eq!(sub, rest, "completion cheaper than the optimum");
                            true
                        }
                        None => false,
                    }
                };
                if feasible {
                    picked = Some((c, next_alive));
                    break;
                }
            }
            let (c, next_alive) = picked.expect("an optimal completion always exists");
            spent += self.weights[c];
            floor = c + 1;
            chosen.push(c);
            alive = next_alive;
        }
        assert_eq!(spent, value, "witness weight must equal the optimum");
        chosen
    }
}

/// Exact minimum hitting set of `fam`, with the lexicographically smallest
/// witness (by sorted element sequence) among the optima.
pub fn min_hitting_set(fam: &FamilyOfSets) -> Result<HittingResult, CoverError> {
    for (index, set) in fam.sets().iter().enumerate() {
        if set.is_empty() {
            return Err(CoverError::EmptyMember { index });
        }
    }
    if fam.is_empty() {
        return Ok(HittingResult {
            value: 0,
            witness: BTreeSet::new(),
            witness_orbits: None,
        });
    }
    let elements: Vec<usize> = fam.elements().into_iter().collect();
    let rank = |e: usize| elements.binary_search(&e).expect("element is in the union");
    let instance = Instance {
        weights: vec![1; elements.len()],
        sets: fam
            .sets()
            .iter()
            .map(|s| s.iter().map(|&e| rank(e)).collect())
            .collect(),
    };
    let value = instance.optimum().expect("members are nonempty");
    let witness: BTreeSet<usize> = instance
        .lex_min_witness(value)
        .into_iter()
        .map(|item| elements[item])
        .collect();
    for set in fam.sets() {
        assert!(
            set.iter().any(|e| witness.contains(e)),
            "witness must hit every member"
        );
    }
    Ok(HittingResult {
        value: value as usize,
        witness,
        witness_orbits: None,
    })
}

/// Exact minimum over invariant selections: choose orbit classes whose union
/// hits every member, minimizing the total number of elements chosen. The
/// witness is the union of the chosen classes; `witness_orbits` lists the
/// lexicographically smallest optimal class-id selection.
///
/// Every element appearing in `fam` must belong to some class of `orbits`.
pub fn min_orbit_hitting_set(
    fam: &FamilyOfSets,
    orbits: &OrbitPartition,
) -> Result<HittingResult, CoverError> {
    for (index, set) in fam.sets().iter().enumerate() {
        if set.is_empty() {
            return Err(CoverError::EmptyMember { index });
        }
        for &e in set {
            if orbits.class_of(e).is_none() {
                return Err(CoverError::UncoveredElement { element: e });
            }
        }
    }
    if fam.is_empty() {
        return Ok(HittingResult {
            value: 0,
            witness: BTreeSet::new(),
            witness_orbits: Some(Vec::new()),
        });
    }
    let instance = Instance {
        weights: orbits.classes().iter().map(|c| c.len() as u64).collect(),
        sets: fam
            .sets()
            .iter()
            .map(|s| {
                let ids: BTreeSet<usize> = s
                    .iter()
                    .map(|&e| orbits.class_of(e).expect("coverage checked above"))
                    .collect();
                ids.into_iter().collect()
            })
            .collect(),
    };
    let value = instance.optimum().expect("members are nonempty");
    let chosen = instance.lex_min_witness(value);
    let witness: BTreeSet<usize> = chosen
        .iter()
        .flat_map(|&id| orbits.classes()[id].iter().copied())
        .collect();
    for set in fam.sets() {
        assert!(
            set.iter().any(|e| witness.contains(e)),
            "witness must hit every member"
        );
    }
    Ok(HittingResult {
        value: value as usize,
        witness,
        witness_orbits: Some(chosen),
    })
}

/// Minimum number of host edges meeting every copy of `pattern`, over
/// arbitrary edge sets (`symmetric = false`) or over `Aut(host)`-invariant
/// edge sets (`symmetric = true`). Elements of the result are edge ids of
/// `host` (ranks in lexicographic edge order). Value 0 if there are no copies.
pub fn edge_representativeness(
    pattern: &Graph,
    host: &Graph,
    symmetric: bool,
) -> Result<HittingResult, CoverError> {
    let copies = enumerate_copies(pattern, host)?;
    if copies.is_empty() {
        return Ok(HittingResult {
            value: 0,
            witness: BTreeSet::new(),
            witness_orbits: symmetric.then(Vec::new),
        });
    }
    let index = host.edge_index();
    let fam = FamilyOfSets::new(
        copies
            .iter()
            .map(|c| c.edges.iter().map(|e| index[e]).collect())
            .collect(),
    );
    if symmetric {
        let group = automorphism_group(host);
        let edge_orbits = orbits(&group, Action::Edges, host).expect("degrees match");
        min_orbit_hitting_set(&fam, &edge_orbits)
    } else {
        min_hitting_set(&fam)
    }
}
