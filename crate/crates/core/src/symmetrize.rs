//! Symmetrization of systems of representatives over a finite group action.
//!
//! Given a family of finite sets (or of weight functions) invariant under a
//! group acting on element ids, and a finite set X meeting every member k
//! times (or with total weight at least one), the admitted orbits form an
//! invariant system Y with an exact cardinality bound:
//!
//! - multiple: Y is the union of the orbit classes C with
//!   `|C ∩ X| * m >= |C| * k` where `m = max |F|`; then
//!   `k * |Y| <= |X ∩ Y| * m`.
//! - weighted: Y is the union of the classes C with `|C ∩ X| * M >= |C|`
//!   where `M = max Σ F`; then `|Y| <= |X ∩ Y| * M`.
//!
//! `product_oracle` rederives the weighted case through the multiple case on
//! the lifted action over `U x E`, where `|E|` clears every weight
//! denominator; the lift is handled orbit-wise (lifted orbits are `C x E`),
//! never materialized. All arithmetic is exact.

use std::collections::{BTreeMap, BTreeSet};

use num::{BigInt, BigRational, Integer, One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cover::FamilyOfSets;
use crate::perm::{OrbitPartition, Permutation};
use crate::ratio::{format_ratio, opt_ratio_string, parse_ratio, ratio_string};

/// Largest accepted lift set size in [`product_oracle`].
pub const MAX_LIFT_SIZE: u64 = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SymmetrizeError {
    #[error("weight for element {element} is negative")]
    NegativeWeight { element: usize },
    #[error("duplicate weight entry for element {element}")]
    DuplicateElement { element: usize },
    #[error("multiplicity k must be at least 1")]
    InvalidMultiplicity,
    #[error("X is not a valid input system; violated members (by index): {members:?}")]
    NotASystem { members: Vec<usize> },
    #[error(
        "weight denominators require a lift set of size {lcm}, above the cap of {MAX_LIFT_SIZE}"
    )]
    LiftOverflow { lcm: BigInt },
    #[error("invalid rational: {0}")]
    BadRational(String),
    #[error(
        "defect: the orbit-threshold Y under-represents members {violated:?}; \
         the admission rule guarantees full multiplicity only for plain (k = 1) systems"
    )]
    ConstructionDefect {
        violated: Vec<usize>,
        report: Box<SymmetrizationReport>,
    },
}

/// A sparse nonnegative weight function with finite support. Zero weights are
/// not stored, so equal functions compare equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawWeightFunction", into = "RawWeightFunction")]
pub struct WeightFunction {
    weights: BTreeMap<usize, BigRational>,
}

#[derive(Serialize, Deserialize)]
struct RawWeightEntry {
    element: usize,
    w: String,
}

#[derive(Serialize, Deserialize)]
struct RawWeightFunction {
    weights: Vec<RawWeightEntry>,
}

impl TryFrom<RawWeightFunction> for WeightFunction {
    type Error = SymmetrizeError;

    fn try_from(raw: RawWeightFunction) -> Result<Self, Self::Error> {
        let pairs: Result<Vec<(usize, BigRational)>, SymmetrizeError> = raw
            .weights
            .into_iter()
            .map(|e| {
                parse_ratio(&e.w)
                    .map(|r| (e.element, r))
                    .map_err(SymmetrizeError::BadRational)
            })
            .collect();
        WeightFunction::new(pairs?)
    }
}

impl From<WeightFunction> for RawWeightFunction {
    fn from(f: WeightFunction) -> Self {
        RawWeightFunction {
            weights: f
                .weights
                .iter()
                .map(|(&element, w)| RawWeightEntry {
                    element,
                    w: format_ratio(w),
                })
                .collect(),
        }
    }
}

impl WeightFunction {
    pub fn new(
        pairs: impl IntoIterator<Item = (usize, BigRational)>,
    ) -> Result<Self, SymmetrizeError> {
        let mut weights = BTreeMap::new();
        for (element, w) in pairs {
            if w.is_negative() {
                return Err(SymmetrizeError::NegativeWeight { element });
            }
            if w.is_zero() {
                continue;
            }
            if weights.insert(element, w).is_some() {
                return Err(SymmetrizeError::DuplicateElement { element });
            }
        }
        Ok(WeightFunction { weights })
    }

    pub fn weight(&self, element: usize) -> BigRational {
        self.weights
            .get(&element)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = (usize, &BigRational)> {
        self.weights.iter().map(|(&e, w)| (e, w))
    }

    pub fn support_elements(&self) -> BTreeSet<usize> {
        self.weights.keys().copied().collect()
    }

    /// Total mass `Σ_u F(u)`.
    pub fn total(&self) -> BigRational {
        self.weights.values().sum()
    }

    /// The function with every weight clamped to `min(w, 1)`; clamping
    /// preserves which sets are systems of weighted representatives.
    pub fn clamped_at_one(&self) -> WeightFunction {
        let one = BigRational::one();
        WeightFunction {
            weights: self
                .weights
                .iter()
                .map(|(&e, w)| (e, if *w > one { one.clone() } else { w.clone() }))
                .collect(),
        }
    }

    /// Pushes the support forward along a point map: the result gives `u` the
    /// weight this function gives to the preimage of `u`.
    pub fn mapped(&self, act: impl Fn(usize) -> usize) -> WeightFunction {
        WeightFunction {
            weights: self
                .weights
                .iter()
                .map(|(&e, w)| (act(e), w.clone()))
                .collect(),
        }
    }

    /// Weight X collects from this function: `Σ_{x in X} F(x)`.
    pub fn mass_on(&self, x: &BTreeSet<usize>) -> BigRational {
        self.weights
            .iter()
            .filter(|(e, _)| x.contains(e))
            .map(|(_, w)| w)
            .sum()
    }
}

/// A finite family of weight functions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedFamily {
    functions: Vec<WeightFunction>,
}

impl WeightedFamily {
    pub fn new(functions: Vec<WeightFunction>) -> Self {
        WeightedFamily { functions }
    }

    pub fn functions(&self) -> &[WeightFunction] {
        &self.functions
    }

    pub fn len(&self) -> usize {
        self.functions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.functions.is_empty()
    }

    /// The finite set W of distinct weights appearing in the family.
    pub fn weight_set(&self) -> BTreeSet<BigRational> {
        self.functions
            .iter()
            .flat_map(|f| f.weights.values().cloned())
            .collect()
    }

    /// Union of all supports.
    pub fn elements(&self) -> BTreeSet<usize> {
        self.functions
            .iter()
            .flat_map(|f| f.weights.keys().copied())
            .collect()
    }

    fn clamped(&self) -> WeightedFamily {
        WeightedFamily {
            functions: self.functions.iter().map(|f| f.clamped_at_one()).collect(),
        }
    }
}

/// One row of the admission ledger: an orbit class, its size, how often X
/// meets it, and whether it was admitted into Y.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitLedgerEntry {
    pub class_id: usize,
    pub size: usize,
    pub x_hits: usize,
    pub admitted: bool,
}

/// Output of a symmetrization run: the invariant system Y, the bound constant
/// (`m = max |F|` or `M = max Σ F`; absent for an empty family), and the
/// per-orbit admission ledger.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymmetrizationReport {
    pub y: BTreeSet<usize>,
    #[serde(with = "opt_ratio_string")]
    pub bound: Option<BigRational>,
    pub ledger: Vec<OrbitLedgerEntry>,
}

/// Members of `fam` that X meets fewer than `k` times.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultipleViolation {
    pub member: usize,
    pub hits: usize,
    pub required: usize,
}

/// Members of `fam` on which X collects total weight below one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightedViolation {
    pub member: usize,
    #[serde(with = "ratio_string")]
    pub total: BigRational,
}

/// Checks `|X ∩ F| >= k` for every member; an empty list means X is a valid
/// system of k-multiple representatives.
pub fn check_representatives(
    fam: &FamilyOfSets,
    x: &BTreeSet<usize>,
    k: usize,
) -> Vec<MultipleViolation> {
    fam.sets()
        .iter()
        .enumerate()
        .filter_map(|(member, set)| {
            let hits = set.iter().filter(|e| x.contains(e)).count();
            (hits < k).then_some(MultipleViolation {
                member,
                hits,
                required: k,
            })
        })
        .collect()
}

/// Checks `Σ_{x in X} F(x) >= 1` for every member.
pub fn check_weighted_representatives(
    fam: &WeightedFamily,
    x: &BTreeSet<usize>,
) -> Vec<WeightedViolation> {
    let one = BigRational::one();
    fam.functions()
        .iter()
        .enumerate()
        .filter_map(|(member, f)| {
            let total = f.mass_on(x);
            (total < one).then_some(WeightedViolation { member, total })
        })
        .collect()
}

/// Point action of a permutation extended by fixed points beyond its degree.
fn act(sigma: &Permutation, x: usize) -> usize {
    if x < sigma.degree() {
        sigma.apply(x)
    } else {
        x
    }
}

/// True iff applying each generator to each member yields a member of the
/// family again.
pub fn family_invariant(fam: &FamilyOfSets, generators: &[Permutation]) -> bool {
    let members: BTreeSet<&BTreeSet<usize>> = fam.sets().iter().collect();
    generators.iter().all(|sigma| {
        fam.sets().iter().all(|set| {
            let image: BTreeSet<usize> = set.iter().map(|&e| act(sigma, e)).collect();
            members.contains(&image)
        })
    })
}

/// True iff the family of weight functions is closed under each generator.
pub fn weighted_family_invariant(fam: &WeightedFamily, generators: &[Permutation]) -> bool {
    let members: BTreeSet<&WeightFunction> = fam.functions().iter().collect();
    generators.iter().all(|sigma| {
        fam.functions().iter().all(|f| {
            let image = f.mapped(|e| act(sigma, e));
            members.contains(&image)
        })
    })
}

/// Per-class statistics against X, over the partition extended to `universe`.
fn class_stats(
    orbits: &OrbitPartition,
    universe: &BTreeSet<usize>,
    x: &BTreeSet<usize>,
) -> (OrbitPartition, Vec<(usize, usize)>) {
    let eff = orbits.extended_to(universe);
    let stats = eff
        .classes()
        .iter()
        .map(|class| {
            let hits = class.iter().filter(|e| x.contains(e)).count();
            (class.len(), hits)
        })
        .collect();
    (eff, stats)
}

/// Admission rule of the multiple-representatives construction, shared with
/// the product oracle: class admitted iff `hits * m >= size * k`.
fn admit_multiple(stats: &[(u128, u128)], k: u128, m: u128) -> Vec<bool> {
    stats
        .iter()
        .map(|&(size, hits)| hits * m >= size * k)
        .collect()
}

/// The bound `k * |Y| <= |X ∩ Y| * m`, over the admitted classes.
fn multiple_bound_holds(stats: &[(u128, u128)], admitted: &[bool], k: u128, m: u128) -> bool {
    let y_size: u128 = stats
        .iter()
        .zip(admitted)
        .filter(|(_, &a)| a)
        .map(|(&(size, _), _)| size)
        .sum();
    let x_in_y: u128 = stats
        .iter()
        .zip(admitted)
        .filter(|(_, &a)| a)
        .map(|(&(_, hits), _)| hits)
        .sum();
    k * y_size <= x_in_y * m
}

fn report_from_admissions(
    eff: &OrbitPartition,
    stats: &[(usize, usize)],
    admitted: &[bool],
    bound: Option<BigRational>,
) -> SymmetrizationReport {
    let y: BTreeSet<usize> = eff
        .classes()
        .iter()
        .zip(admitted)
        .filter(|(_, &a)| a)
        .flat_map(|(class, _)| class.iter().copied())
        .collect();
    let ledger = stats
        .iter()
        .zip(admitted)
        .enumerate()
        .map(
            |(class_id, (&(size, x_hits), &admitted))| OrbitLedgerEntry {
                class_id,
                size,
                x_hits,
                admitted,
            },
        )
        .collect();
    SymmetrizationReport { y, bound, ledger }
}

/// Invariant system of k-multiple representatives from X.
///
/// X must itself be a system of k-multiple representatives for `fam`. Points
/// of the universe missing from `orbits` are treated as fixed points. The
/// returned Y is invariant and satisfies `k * |Y| <= |X ∩ Y| * m` with
/// `m = max |F|` (asserted; it holds orbit by orbit).
///
/// Y is checked to be a system of k-multiple representatives before
/// returning. For `k = 1` this always holds. For larger `k` the admission
/// rule can leave a member under-represented when a large orbit meets X only
/// a few times (smallest instance: the family `{{0,1,2}}` with the group
/// swapping 1 and 2, `k = 2`, `X = {0,1}` admits only the orbit `{0}`); such
/// runs return [`SymmetrizeError::ConstructionDefect`] carrying the flagged
/// report instead of a silently short Y.
pub fn symmetrize_multiple(
    fam: &FamilyOfSets,
    x: &BTreeSet<usize>,
    k: usize,
    orbits: &OrbitPartition,
) -> Result<SymmetrizationReport, SymmetrizeError> {
    if k == 0 {
        return Err(SymmetrizeError::InvalidMultiplicity);
    }
    let violations = check_representatives(fam, x, k);
    if !violations.is_empty() {
        return Err(SymmetrizeError::NotASystem {
            members: violations.iter().map(|v| v.member).collect(),
        });
    }
    let mut universe: BTreeSet<usize> = fam.elements();
    universe.extend(x.iter().copied());
    universe.extend(orbits.ground_set());
    let (eff, stats) = class_stats(orbits, &universe, x);
    if fam.is_empty() {
        let admitted = vec![false; stats.len()];
        return Ok(report_from_admissions(&eff, &stats, &admitted, None));
    }
    let m = fam
        .sets()
        .iter()
        .map(BTreeSet::len)
        .max()
        .expect("family is nonempty");
    let wide: Vec<(u128, u128)> = stats.iter().map(|&(s, h)| (s as u128, h as u128)).collect();
    let admitted = admit_multiple(&wide, k as u128, m as u128);
    assert!(
        multiple_bound_holds(&wide, &admitted, k as u128, m as u128),
        "k*|Y| <= |X ∩ Y|*m must hold"
    );
    let report = report_from_admissions(
        &eff,
        &stats,
        &admitted,
        Some(BigRational::from_integer(m.into())),
    );
    let leftover = check_representatives(fam, &report.y, k);
    if !leftover.is_empty() {
        return Err(SymmetrizeError::ConstructionDefect {
            violated: leftover.iter().map(|v| v.member).collect(),
            report: Box::new(report),
        });
    }
    Ok(report)
}

/// Invariant system of weighted representatives from X.
///
/// X must be a system of weighted representatives (`Σ_{x in X} F(x) >= 1` for
/// every F). Weights are clamped to `min(w, 1)` before processing. The
/// returned Y is invariant and satisfies `|Y| <= |X ∩ Y| * M` with
/// `M = max Σ F` over the clamped family (asserted; holds orbit by orbit).
///
/// Y is checked to collect mass at least one on every member before
/// returning; as in [`symmetrize_multiple`], the admission rule cannot always
/// deliver this when a large orbit meets X only a few times, and such runs
/// return [`SymmetrizeError::ConstructionDefect`] with the flagged report.
pub fn symmetrize_weighted(
    fam: &WeightedFamily,
    x: &BTreeSet<usize>,
    orbits: &OrbitPartition,
) -> Result<SymmetrizationReport, SymmetrizeError> {
    let violations = check_weighted_representatives(fam, x);
    if !violations.is_empty() {
        return Err(SymmetrizeError::NotASystem {
            members: violations.iter().map(|v| v.member).collect(),
        });
    }
    let clamped = fam.clamped();
    let mut universe: BTreeSet<usize> = clamped.elements();
    universe.extend(x.iter().copied());
    universe.extend(orbits.ground_set());
    let (eff, stats) = class_stats(orbits, &universe, x);
    if fam.is_empty() {
        let admitted = vec![false; stats.len()];
        return Ok(report_from_admissions(&eff, &stats, &admitted, None));
    }
    let m_bound: BigRational = clamped
        .functions()
        .iter()
        .map(WeightFunction::total)
        .max()
        .expect("family is nonempty");
    let admitted: Vec<bool> = stats
        .iter()
        .map(|&(size, hits)| {
            BigRational::from_integer(hits.into()) * &m_bound
                >= BigRational::from_integer(size.into())
        })
        .collect();
    let report = report_from_admissions(&eff, &stats, &admitted, Some(m_bound.clone()));
    let y_size = BigRational::from_integer(report.y.len().into());
    let x_in_y = BigRational::from_integer(x.intersection(&report.y).count().into());
    assert!(y_size <= x_in_y * &m_bound, "|Y| <= |X ∩ Y|*M must hold");
    let leftover = check_weighted_representatives(fam, &report.y);
    if !leftover.is_empty() {
        return Err(SymmetrizeError::ConstructionDefect {
            violated: leftover.iter().map(|v| v.member).collect(),
            report: Box::new(report),
        });
    }
    Ok(report)
}

/// Size of the auxiliary set E clearing every weight denominator: the lcm of
/// the denominators of the distinct clamped weights. Capped at
/// [`MAX_LIFT_SIZE`].
pub fn weight_lift_size(fam: &WeightedFamily) -> Result<u64, SymmetrizeError> {
    let mut lcm = BigInt::one();
    for w in fam.clamped().weight_set() {
        lcm = lcm.lcm(w.denom());
        if lcm > BigInt::from(MAX_LIFT_SIZE) {
            return Err(SymmetrizeError::LiftOverflow { lcm });
        }
    }
    Ok(u64::try_from(&lcm).expect("lcm fits after the cap check"))
}

/// Weighted symmetrization rederived through the multiple case.
///
/// Lifts the instance to `U x E` with `|E| = ` [`weight_lift_size`], where
/// `X x E` is a system of |E|-multiple representatives for the family of
/// lifted sets containing `F(u) * |E|` points over each `u`. The lifted orbit
/// of `(u, e)` is `(orbit of u) x E`, so the lift is processed orbit-wise:
/// sizes and X-hits scale by `|E|`, and the multiple admission rule runs with
/// `k = |E|` and `m = |E| * max Σ F`. The result projects back to U and must
/// equal [`symmetrize_weighted`] on every instance.
pub fn product_oracle(
    fam: &WeightedFamily,
    x: &BTreeSet<usize>,
    orbits: &OrbitPartition,
) -> Result<SymmetrizationReport, SymmetrizeError> {
    let violations = check_weighted_representatives(fam, x);
    if !violations.is_empty() {
        return Err(SymmetrizeError::NotASystem {
            members: violations.iter().map(|v| v.member).collect(),
        });
    }
    let clamped = fam.clamped();
    let mut universe: BTreeSet<usize> = clamped.elements();
    universe.extend(x.iter().copied());
    universe.extend(orbits.ground_set());
    let (eff, stats) = class_stats(orbits, &universe, x);
    if fam.is_empty() {
        let admitted = vec![false; stats.len()];
        return Ok(report_from_admissions(&eff, &stats, &admitted, None));
    }
    let lift = weight_lift_size(fam)?;
    let lift_big = BigRational::from_integer(lift.into());

    // X x E meets every lifted member |E| times: Σ_{x in X} F(x)*|E| >= |E|,
    // an integer count by the choice of |E|.
    for f in clamped.functions() {
        let lifted_hits = f.mass_on(x) * &lift_big;
        assert!(lifted_hits.is_integer(), "lift must clear denominators");
        assert!(
            lifted_hits >= lift_big,
            "X x E must be an |E|-multiple system for the lifted family"
        );
    }

    let max_total: BigRational = clamped
        .functions()
        .iter()
        .map(WeightFunction::total)
        .max()
        .expect("family is nonempty");
    let lifted_m = &max_total * &lift_big;
    assert!(
        lifted_m.is_integer(),
        "max lifted member size is an integer"
    );
    let lifted_m = u128::try_from(lifted_m.to_integer()).expect("desk-scale bound");

    let lifted_stats: Vec<(u128, u128)> = stats
        .iter()
        .map(|&(size, hits)| (size as u128 * lift as u128, hits as u128 * lift as u128))
        .collect();
    let admitted = admit_multiple(&lifted_stats, lift as u128, lifted_m);
    assert!(
        multiple_bound_holds(&lifted_stats, &admitted, lift as u128, lifted_m),
        "lifted bound |E|*|Y~| <= |X~ ∩ Y~|*m~ must hold"
    );

    // Projection: an admitted lifted class C x E projects to C.
    let report = report_from_admissions(&eff, &stats, &admitted, Some(max_total));
    let leftover = check_weighted_representatives(fam, &report.y);
    if !leftover.is_empty() {
        return Err(SymmetrizeError::ConstructionDefect {
            violated: leftover.iter().map(|v| v.member).collect(),
            report: Box::new(report),
        });
    }
    Ok(report)
}
