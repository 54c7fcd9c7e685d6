//! Equivalence, censuses, oracle verification and embeddability.
//!
//! Two data of the same order are equivalent exactly when
//!
//! 1. their isotropy multisets agree,
//! 2. their `h1` agree, when no isotropy equals `[q]`,
//! 3. their `h2` agree, when the quotient is a Klein bottle and `l > 1`.
//!
//! [`verify_theorem`] checks this against the partition into `H1`–`H4`
//! orbits, computed by brute force.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::datum::{cone_orders, cover_genus, MonodromyDatum, OrientableQuotientDatum};
use crate::invariants::{h1, invariant_tuple, InvariantTuple};
use crate::moves::{orbit, BfsLimits, OrbitError};
use crate::zmod::CyclicValue;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("data have different orders: two_q = {0} vs {1}")]
    OrderMismatch(u32, u32),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error(transparent)]
    Orbit(#[from] OrbitError),
}

/// Decides topological equivalence through the invariant tuple.
pub fn equivalent(a: &MonodromyDatum, b: &MonodromyDatum) -> Result<bool, ClassifyError> {
    if a.two_q() != b.two_q() {
        return Err(ClassifyError::OrderMismatch(a.two_q(), b.two_q()));
    }
    if a.genus() != b.genus() {
        return Ok(false);
    }
    let (ta, tb) = (invariant_tuple(a), invariant_tuple(b));
    if ta.isotropy != tb.isotropy {
        return Ok(false);
    }
    if ta.h1.is_some() && ta.h1 != tb.h1 {
        return Ok(false);
    }
    if ta.h2_applicable && ta.h2 != tb.h2 {
        return Ok(false);
    }
    Ok(true)
}

fn check_shape(two_q: u32, genus: usize) -> Result<(), ClassifyError> {
    if two_q < 4 || !two_q.is_multiple_of(4) {
        return Err(ClassifyError::BadParameters(format!(
            "two_q = {two_q} must be a positive multiple of 4"
        )));
    }
    if genus < 1 {
        return Err(ClassifyError::BadParameters("genus must be ≥ 1".into()));
    }
    Ok(())
}

/// All admissible data with the given order, quotient genus and cone count,
/// in increasing order.
pub fn enumerate_data(two_q: u32, genus: usize, r: usize) -> Vec<MonodromyDatum> {
    let mut out: Vec<_> = cone_multisets(two_q, r)
        .par_iter()
        .flat_map_iter(|x| {
            OddVectors::new(two_q, genus)
                .filter_map(move |d| MonodromyDatum::new(two_q as i64, &d, x).ok())
        })
        .collect();
    out.sort();
    out
}

/// Multisets of size `r` of nonzero even residues, as ascending lists.
fn cone_multisets(two_q: u32, r: usize) -> Vec<Vec<i64>> {
    let evens: Vec<i64> = (2..two_q as i64).step_by(2).collect();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(r);
    fn extend(evens: &[i64], r: usize, start: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for k in start..evens.len() {
            cur.push(evens[k]);
            extend(evens, r, k, cur, out);
            cur.pop();
        }
    }
    extend(&evens, r, 0, &mut current, &mut out);
    out
}

/// Lexicographic odometer over vectors of odd residues.
struct OddVectors {
    two_q: i64,
    next: Option<Vec<i64>>,
}

impl OddVectors {
    fn new(two_q: u32, len: usize) -> Self {
        Self {
            two_q: two_q as i64,
            next: Some(vec![1; len]),
        }
    }
}

impl Iterator for OddVectors {
    type Item = Vec<i64>;

    fn next(&mut self) -> Option<Vec<i64>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        for pos in (0..succ.len()).rev() {
            if succ[pos] + 2 < self.two_q {
                succ[pos] += 2;
                self.next = Some(succ);
                return Some(current);
            }
            succ[pos] = 1;
        }
        Some(current)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusConstraints {
    /// Number of cone points.
    pub r: Option<usize>,
    /// Required multiset of cone orders.
    pub cone_orders: Option<Vec<u32>>,
    /// Upper bound on the genus of the covering surface.
    pub max_cover_genus: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusParams {
    pub two_q: u32,
    pub genus: usize,
    pub constraints: CensusConstraints,
}

impl CensusParams {
    pub fn with_r(two_q: u32, genus: usize, r: usize) -> Self {
        Self {
            two_q,
            genus,
            constraints: CensusConstraints {
                r: Some(r),
                ..Default::default()
            },
        }
    }

    /// Cone counts the census has to visit.
    fn cone_counts(&self) -> Result<Vec<usize>, ClassifyError> {
        let c = &self.constraints;
        let from_orders = c.cone_orders.as_ref().map(Vec::len);
        match (c.r, from_orders) {
            (Some(r), Some(k)) if r != k => Err(ClassifyError::BadParameters(format!(
                "r = {r} disagrees with {k} cone orders"
            ))),
            (Some(r), _) | (None, Some(r)) => Ok(vec![r]),
            (None, None) => {
                let Some(max_genus) = c.max_cover_genus else {
                    return Err(ClassifyError::BadParameters(
                        "one of r, cone orders or max cover genus is required".into(),
                    ));
                };
                // every cone point lowers χ(S) by at least q
                let n = self.two_q as i64;
                let budget = n * (2 - self.genus as i64) - 2 + 2 * max_genus;
                if budget < 0 {
                    return Ok(vec![]);
                }
                Ok((0..=(2 * budget / n) as usize).collect())
            }
        }
    }

    fn admits(&self, datum: &MonodromyDatum) -> bool {
        let c = &self.constraints;
        if let Some(orders) = &c.cone_orders {
            let mut want = orders.clone();
            want.sort_unstable();
            let mut have = cone_orders(datum);
            have.sort_unstable();
            if want != have {
                return false;
            }
        }
        c.max_cover_genus
            .is_none_or(|g| cover_genus(datum).genus_cover <= g)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusClass {
    pub invariants: InvariantTuple,
    pub representative: MonodromyDatum,
    pub vector_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub parameters: CensusParams,
    pub total_vectors: usize,
    pub classes: Vec<CensusClass>,
    pub notes: Vec<String>,
}

fn order_notes(two_q: u32) -> Vec<String> {
    if two_q == 4 {
        vec!["two_q = 4 (q = 2) is outside the q > 2 range of the classification; invariants reported as computed".into()]
    } else {
        vec![]
    }
}

type Buckets = BTreeMap<InvariantTuple, (MonodromyDatum, usize)>;

fn merge_buckets(mut a: Buckets, b: Buckets) -> Buckets {
    for (tuple, (rep, count)) in b {
        a.entry(tuple)
            .and_modify(|(r, c)| {
                if rep < *r {
                    *r = rep.clone();
                }
                *c += count;
            })
            .or_insert((rep, count));
    }
    a
}

/// Enumerates every admissible datum matching `params` and buckets them by
/// invariant tuple. Classes come out sorted by tuple.
///
/// Work is spread over the current rayon pool; the result does not depend
/// on its size.
pub fn census(params: &CensusParams) -> Result<CensusReport, ClassifyError> {
    check_shape(params.two_q, params.genus)?;
    let two_q = params.two_q;
    let mut work = Vec::new();
    for r in params.cone_counts()? {
        work.extend(cone_multisets(two_q, r));
    }
    let buckets = work
        .par_iter()
        .map(|x| {
            let mut local = Buckets::new();
            for d in OddVectors::new(two_q, params.genus) {
                let Ok(datum) = MonodromyDatum::new(two_q as i64, &d, x) else {
                    continue;
                };
                if !params.admits(&datum) {
                    continue;
                }
                let tuple = invariant_tuple(&datum);
                local
                    .entry(tuple)
                    .and_modify(|(rep, count)| {
                        if datum < *rep {
                            *rep = datum.clone();
                        }
                        *count += 1;
                    })
                    .or_insert((datum, 1));
            }
            local
        })
        .reduce(Buckets::new, merge_buckets);

    let classes: Vec<CensusClass> = buckets
        .into_iter()
        .map(|(invariants, (representative, vector_count))| CensusClass {
            invariants,
            representative,
            vector_count,
        })
        .collect();
    Ok(CensusReport {
        parameters: params.clone(),
        total_vectors: classes.iter().map(|c| c.vector_count).sum(),
        classes,
        notes: order_notes(two_q),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyParams {
    pub two_q: u32,
    pub genera: Vec<usize>,
    pub rs: Vec<usize>,
}

impl VerifyParams {
    /// Quotient genera `1..=max_genus` and cone counts `0..=max_r`.
    pub fn up_to(two_q: u32, max_genus: usize, max_r: usize) -> Self {
        Self {
            two_q,
            genera: (1..=max_genus).collect(),
            rs: (0..=max_r).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyClass {
    pub invariants: InvariantTuple,
    pub vector_count: usize,
    pub orbit_count: usize,
}

/// An orbit whose members carry more than one invariant tuple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SoundnessViolation {
    pub orbit_representative: MonodromyDatum,
    pub tuples: Vec<InvariantTuple>,
}

/// An invariant class that splits into several orbits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompletenessViolation {
    pub invariants: InvariantTuple,
    pub orbit_representatives: Vec<MonodromyDatum>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub parameters: VerifyParams,
    pub total_vectors: usize,
    pub total_orbits: usize,
    pub classes: Vec<VerifyClass>,
    pub soundness_violations: Vec<SoundnessViolation>,
    pub completeness_violations: Vec<CompletenessViolation>,
    pub notes: Vec<String>,
}

impl VerifyReport {
    pub fn is_clean(&self) -> bool {
        self.soundness_violations.is_empty() && self.completeness_violations.is_empty()
    }
}

#[derive(Default)]
struct CellResult {
    total_vectors: usize,
    total_orbits: usize,
    classes: Vec<VerifyClass>,
    soundness: Vec<SoundnessViolation>,
    completeness: Vec<CompletenessViolation>,
}

fn verify_cell(
    two_q: u32,
    genus: usize,
    r: usize,
    limits: BfsLimits,
) -> Result<CellResult, ClassifyError> {
    let data = enumerate_data(two_q, genus, r);
    let mut orbit_of: BTreeMap<MonodromyDatum, usize> = BTreeMap::new();
    let mut orbit_reps = Vec::new();
    let mut result = CellResult {
        total_vectors: data.len(),
        ..Default::default()
    };
    // tuple -> (vector count, orbit ids)
    let mut by_tuple: BTreeMap<InvariantTuple, (usize, Vec<usize>)> = BTreeMap::new();

    for datum in &data {
        if orbit_of.contains_key(datum) {
            continue;
        }
        let id = orbit_reps.len();
        let members = orbit(datum, limits)?;
        let mut tuples: Vec<InvariantTuple> = Vec::new();
        for member in members {
            let t = invariant_tuple(&member);
            if !tuples.contains(&t) {
                tuples.push(t.clone());
            }
            let entry = by_tuple.entry(t).or_default();
            entry.0 += 1;
            if !entry.1.contains(&id) {
                entry.1.push(id);
            }
            orbit_of.insert(member, id);
        }
        if tuples.len() > 1 {
            tuples.sort();
            result.soundness.push(SoundnessViolation {
                orbit_representative: datum.clone(),
                tuples,
            });
        }
        orbit_reps.push(datum.clone());
    }
    debug_assert_eq!(orbit_of.len(), data.len());
    result.total_orbits = orbit_reps.len();

    for (invariants, (vector_count, orbits)) in by_tuple {
        if orbits.len() > 1 {
            result.completeness.push(CompletenessViolation {
                invariants: invariants.clone(),
                orbit_representatives: orbits.iter().map(|&k| orbit_reps[k].clone()).collect(),
            });
        }
        result.classes.push(VerifyClass {
            invariants,
            vector_count,
            orbit_count: orbits.len(),
        });
    }
    Ok(result)
}

/// Cross-tabulates the invariant partition against the move-orbit partition
/// of every admissible datum in the parameter range.
pub fn verify_theorem(
    params: &VerifyParams,
    limits: BfsLimits,
) -> Result<VerifyReport, ClassifyError> {
    let mut cells = Vec::new();
    for &g in &params.genera {
        check_shape(params.two_q, g)?;
        for &r in &params.rs {
            cells.push((g, r));
        }
    }
    let results: Vec<CellResult> = cells
        .par_iter()
        .map(|&(g, r)| verify_cell(params.two_q, g, r, limits))
        .collect::<Result<_, _>>()?;

    let mut report = VerifyReport {
        parameters: params.clone(),
        total_vectors: 0,
        total_orbits: 0,
        classes: Vec::new(),
        soundness_violations: Vec::new(),
        completeness_violations: Vec::new(),
        notes: order_notes(params.two_q),
    };
    for cell in results {
        report.total_vectors += cell.total_vectors;
        report.total_orbits += cell.total_orbits;
        report.classes.extend(cell.classes);
        report.soundness_violations.extend(cell.soundness);
        report.completeness_violations.extend(cell.completeness);
    }
    report
        .classes
        .sort_by(|a, b| a.invariants.cmp(&b.invariants));
    Ok(report)
}

/// `f²` acts freely unless some cone point has order `q`, i.e. its
/// stabilizer contains `[2]`.
pub fn f2_fixed_point_free(datum: &MonodromyDatum) -> bool {
    datum.x().iter().all(|v| v.elem_order() != datum.q())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddabilityVerdict {
    pub embeddable: bool,
    /// First satisfied condition (1, 2 or 3).
    pub condition: Option<u8>,
    pub notes: Vec<String>,
}

/// Whether the automorphism is realizable as a symmetry of a surface
/// embedded in Euclidean space.
///
/// Embeddable iff one of:
///
/// 1. `f²` is fixed-point free and `h1 = 0`;
/// 2. `q = 2`, there is at least one cone point, and `g ≥ r`;
/// 3. `q > 2`, `r > 0`, all cone values are `±m` for one generator
///    `[m] ∈ {[2], ..., [q−2]}` of `⟨[2]⟩`, `g ≥ r`, `r + g` is even, and
///    `h1` is `1` when `[rm/2] ∈ {[1], ..., [q−1]}` and `0` when
///    `[rm/2] ∈ {[q+1], ..., [2q−1]}`.
///
/// Condition 3 says nothing when `[rm/2]` is `[0]` or `[q]`; the verdict then
/// treats it as unmet and says so in `notes`.
pub fn embeddable(datum: &MonodromyDatum) -> EmbeddabilityVerdict {
    let q = datum.q();
    let (g, r) = (datum.genus(), datum.r());
    let h1 = h1(datum).ok();
    let mut notes = Vec::new();

    let cond1 = if f2_fixed_point_free(datum) {
        if h1.is_none() {
            notes.push(
                "f² is fixed-point free but an isotropy equals [q]; h1 is undefined so condition 1 is not met"
                    .to_string(),
            );
        }
        h1 == Some(0)
    } else {
        false
    };

    let cond2 = q == 2 && r >= 1 && g >= r;

    let cond3 = q > 2 && r > 0 && {
        let m = datum.x()[0].pm_canonical();
        let single = datum.x().iter().all(|v| v.pm_canonical() == m);
        let generator = (2..=q - 2).contains(&m.value()) && m.elem_order() == q;
        if single && generator && g >= r && (r + g) % 2 == 0 {
            // m is even, so r·m/2 = r·(m/2) exactly
            let half = CyclicValue::from_reduced(m.value() / 2, datum.two_q())
                .scale(r as i64)
                .value();
            if (1..q).contains(&half) {
                h1 == Some(1)
            } else if (q + 1..2 * q).contains(&half) {
                h1 == Some(0)
            } else {
                notes.push(format!(
                    "condition 3 does not specify h1 when [rm/2] = [{half}]; treated as not met"
                ));
                false
            }
        } else {
            false
        }
    };

    let condition = if cond1 {
        Some(1)
    } else if cond2 {
        Some(2)
    } else if cond3 {
        Some(3)
    } else {
        None
    };
    EmbeddabilityVerdict {
        embeddable: condition.is_some(),
        condition,
        notes,
    }
}

/// The unordered pair `{ {T(X_i), T(C_j)}, {−T(X_i), −T(C_j)} }`, stored as
/// `(smaller, larger)` of the two sorted multisets.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct OrientablePair {
    pub first: Vec<u32>,
    pub second: Vec<u32>,
}

pub fn orientable_pair_invariant(od: &OrientableQuotientDatum) -> OrientablePair {
    let values = || od.x().iter().chain(od.c());
    let mut plus: Vec<u32> = values().map(|v| v.value()).collect();
    let mut minus: Vec<u32> = values().map(|v| (-*v).value()).collect();
    plus.sort_unstable();
    minus.sort_unstable();
    if minus < plus {
        std::mem::swap(&mut plus, &mut minus);
    }
    OrientablePair {
        first: plus,
        second: minus,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn datum(two_q: i64, d: &[i64], x: &[i64]) -> MonodromyDatum {
        MonodromyDatum::new(two_q, d, x).unwrap()
    }

    #[test]
    fn equivalent_examples() {
        assert!(equivalent(&datum(8, &[1, 7], &[]), &datum(8, &[7, 1], &[])).unwrap());
        assert!(!equivalent(&datum(8, &[1, 7], &[]), &datum(8, &[3, 5], &[])).unwrap());
        assert!(equivalent(&datum(8, &[1, 1], &[4]), &datum(8, &[3, 3], &[4])).unwrap());
        assert!(!equivalent(&datum(8, &[1, 7], &[]), &datum(8, &[3], &[2])).unwrap());
        assert_eq!(
            equivalent(&datum(8, &[1, 7], &[]), &datum(12, &[1, 5], &[])),
            Err(ClassifyError::OrderMismatch(8, 12))
        );
    }

    #[test]
    fn odd_vectors_are_lexicographic() {
        let all: Vec<_> = OddVectors::new(4, 2).collect();
        assert_eq!(all, vec![vec![1, 1], vec![1, 3], vec![3, 1], vec![3, 3]]);
        assert_eq!(OddVectors::new(8, 3).count(), 64);
    }

    #[test]
    fn cone_multisets_count() {
        // multisets of size 2 from {2, 4, 6}
        assert_eq!(cone_multisets(8, 2).len(), 6);
        assert_eq!(cone_multisets(8, 0), vec![Vec::<i64>::new()]);
    }

    #[test]
    fn census_examples() {
        let rep = census(&CensusParams::with_r(8, 2, 0)).unwrap();
        assert_eq!((rep.total_vectors, rep.classes.len()), (8, 3));
        let mut h2s: Vec<Vec<u32>> = rep
            .classes
            .iter()
            .map(|c| c.invariants.h2.clone().unwrap().values)
            .collect();
        h2s.sort();
        assert_eq!(h2s, vec![vec![1, 3, 5, 7], vec![1, 7], vec![3, 5]]);

        let rep = census(&CensusParams::with_r(8, 1, 1)).unwrap();
        assert_eq!((rep.total_vectors, rep.classes.len()), (4, 2));
        let h1s: Vec<_> = rep.classes.iter().map(|c| c.invariants.h1).collect();
        assert_eq!(h1s, vec![Some(0), Some(1)]);

        let rep = census(&CensusParams::with_r(8, 2, 1)).unwrap();
        assert_eq!((rep.total_vectors, rep.classes.len()), (8, 1));
    }

    #[test]
    fn census_constraints() {
        let by_orders = census(&CensusParams {
            two_q: 8,
            genus: 2,
            constraints: CensusConstraints {
                cone_orders: Some(vec![2]),
                ..Default::default()
            },
        })
        .unwrap();
        assert_eq!(by_orders.total_vectors, 8);

        // cover genus ≤ 1 with g = 2 leaves only the unbranched torus covers
        let by_genus = census(&CensusParams {
            two_q: 8,
            genus: 2,
            constraints: CensusConstraints {
                max_cover_genus: Some(1),
                ..Default::default()
            },
        })
        .unwrap();
        assert_eq!(by_genus.total_vectors, 8);
        assert_eq!(by_genus.classes.len(), 3);

        assert!(census(&CensusParams {
            two_q: 8,
            genus: 2,
            constraints: CensusConstraints::default(),
        })
        .is_err());
        assert!(census(&CensusParams::with_r(6, 1, 0)).is_err());
    }

    #[test]
    fn census_flags_q2() {
        let rep = census(&CensusParams::with_r(4, 1, 1)).unwrap();
        assert_eq!(rep.notes.len(), 1);
        assert!(census(&CensusParams::with_r(8, 1, 1))
            .unwrap()
            .notes
            .is_empty());
    }

    #[test]
    fn verify_small_ranges() {
        let rep = verify_theorem(&VerifyParams::up_to(8, 2, 1), BfsLimits::default()).unwrap();
        assert!(rep.is_clean());
        let rep = verify_theorem(
            &VerifyParams {
                two_q: 8,
                genera: vec![3],
                rs: vec![1],
            },
            BfsLimits::default(),
        )
        .unwrap();
        assert!(rep.soundness_violations.is_empty());
        let rep = verify_theorem(&VerifyParams::up_to(4, 1, 2), BfsLimits::default()).unwrap();
        assert!(rep.soundness_violations.is_empty());
        assert!(!rep.notes.is_empty());
    }

    #[test]
    fn verify_reports_cap() {
        let err = verify_theorem(&VerifyParams::up_to(8, 2, 0), BfsLimits { max_states: 1 });
        assert!(matches!(err, Err(ClassifyError::Orbit(_))));
    }

    #[test]
    fn f2_examples() {
        assert!(f2_fixed_point_free(&datum(8, &[1, 7], &[])));
        assert!(!f2_fixed_point_free(&datum(8, &[3], &[2])));
        assert!(f2_fixed_point_free(&datum(8, &[1, 1], &[4])));
    }

    #[test]
    fn embeddable_examples() {
        let v = embeddable(&datum(8, &[1, 7], &[]));
        assert_eq!((v.embeddable, v.condition), (true, Some(1)));
        let v = embeddable(&datum(8, &[3, 5], &[]));
        assert_eq!((v.embeddable, v.condition), (true, Some(1)));
        let v = embeddable(&datum(8, &[1, 3], &[]));
        assert_eq!((v.embeddable, v.condition), (false, None));
        let v = embeddable(&datum(12, &[3, 7], &[2, 2]));
        assert_eq!((v.embeddable, v.condition), (true, Some(3)));
        let v = embeddable(&datum(12, &[1, 3], &[2, 2]));
        assert_eq!((v.embeddable, v.condition), (false, None));
        let v = embeddable(&datum(4, &[1], &[2]));
        assert_eq!((v.embeddable, v.condition), (true, Some(2)));
    }

    #[test]
    fn embeddable_notes_gaps() {
        // f² free, [q] present: condition 1 blocked
        let v = embeddable(&datum(8, &[1, 1], &[4]));
        assert!(!v.embeddable);
        assert_eq!(v.notes.len(), 1);
        // q = 4, r = g = 4, m = 2: r·m/2 = 4 = q
        let v = embeddable(&datum(8, &[1, 1, 1, 1], &[2, 2, 2, 2]));
        assert!(!v.embeddable);
        assert!(v.notes[0].contains("[4]"));
    }

    #[test]
    fn orientable_pair_examples() {
        let od = OrientableQuotientDatum::new(8, 1, &[2], &[3]).unwrap();
        let p = orientable_pair_invariant(&od);
        assert_eq!((p.first, p.second), (vec![2, 3], vec![5, 6]));
        let od = OrientableQuotientDatum::new(8, 0, &[], &[]).unwrap();
        let p = orientable_pair_invariant(&od);
        assert!(p.first.is_empty() && p.second.is_empty());
        let od = OrientableQuotientDatum::new(8, 0, &[4, 4], &[]).unwrap();
        let p = orientable_pair_invariant(&od);
        assert_eq!((p.first, p.second), (vec![4, 4], vec![4, 4]));
    }
}
