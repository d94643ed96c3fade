//! Exhaustive classification of Fano polygons whose edge cones are all
//! determinant-r R-cones.
//!
//! The vertex cycle of such a polygon is an r-modular sequence with every
//! ε = 1, winding number 1 and every coefficient aᵢ ≥ −1, so Σaᵢ = 12 − 3k
//! and k ≤ 6. The enumerator fixes the seed edge v₁ = (r, −s), v₂ = (0, 1),
//! runs the recurrence vᵢ₊₁ = −vᵢ₋₁ − aᵢ·vᵢ over every admissible
//! coefficient tuple, keeps closed loops whose cones are all R, and
//! deduplicates up to GL₂(Z) by canonical form.
//!
//! On top of the enumerator sit two verification reports: coverage of the
//! nine closed-form model families, and the census of homogeneous-basket
//! polygons compared against the arithmetic existence predicate.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use thiserror::Error;

use crate::cones::{polygon_singularity_content, Cone, ConeClass, CyclicQuotientSingularity};
use crate::lattice::{det2, FanoPolygon, LatticeError, LatticeVector};
use crate::numthy::existence_predicate;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Error)]
pub enum ClassifyError {
    #[error("gcd conditions of family {family} fail at (r, s) = ({r}, {s})")]
    GcdConditionViolated { family: FamilyId, r: i64, s: i64 },
    #[error("family {family} does not give a valid polygon at (r, s) = ({r}, {s}): {source}")]
    NotConvexAtParameters { family: FamilyId, r: i64, s: i64, source: LatticeError },
    #[error("unknown family id")]
    UnknownFamily,
    #[error("basket is not of the uniform form {{k x 1/r(1,1)}}")]
    BasketNotUniformUnit,
    #[error("rule violated: {0}")]
    RuleViolation(&'static str),
}

/// The nine closed-form model families, keyed by vertex count and an index.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum FamilyId {
    K3F1,
    K4F1,
    K4F2,
    K4F3,
    K4F4,
    K5F1,
    K5F2,
    K5F3,
    K6F1,
}

impl FamilyId {
    pub const ALL: [FamilyId; 9] = [
        FamilyId::K3F1,
        FamilyId::K4F1,
        FamilyId::K4F2,
        FamilyId::K4F3,
        FamilyId::K4F4,
        FamilyId::K5F1,
        FamilyId::K5F2,
        FamilyId::K5F3,
        FamilyId::K6F1,
    ];

    pub fn vertex_count(self) -> usize {
        match self {
            FamilyId::K3F1 => 3,
            FamilyId::K4F1 | FamilyId::K4F2 | FamilyId::K4F3 | FamilyId::K4F4 => 4,
            FamilyId::K5F1 | FamilyId::K5F2 | FamilyId::K5F3 => 5,
            FamilyId::K6F1 => 6,
        }
    }

    /// Offsets o such that the family requires gcd(r, s + o) = 1.
    pub fn gcd_offsets(self) -> &'static [i64] {
        match self {
            FamilyId::K3F1 | FamilyId::K4F4 | FamilyId::K5F2 => &[0, -1],
            FamilyId::K4F1 => &[0],
            FamilyId::K4F2 | FamilyId::K4F3 | FamilyId::K5F1 | FamilyId::K5F3 | FamilyId::K6F1 => {
                &[0, 1]
            }
        }
    }

    pub fn conditions_hold(self, r: i64, s: i64) -> bool {
        r >= 2
            && (1..r).contains(&s)
            && self.gcd_offsets().iter().all(|o| r.gcd(&(s + o)) == 1)
    }

    /// Model vertices at (r, s), in anticlockwise order starting from
    /// v₁ = (r, −s), v₂ = (0, 1); the cone over (vᵢ, vᵢ₊₁) is the i-th cone
    /// of the family's tabulated types.
    pub fn template_vertices(self, r: i64, s: i64) -> Vec<LatticeVector> {
        let v = LatticeVector::new;
        match self {
            FamilyId::K3F1 => vec![v(r, -s), v(0, 1), v(-r, s - 1)],
            FamilyId::K4F1 => vec![v(r, -s), v(0, 1), v(-r, s), v(0, -1)],
            FamilyId::K4F2 => vec![v(r, -s), v(0, 1), v(-r, s + 1), v(0, -1)],
            FamilyId::K4F3 => vec![v(r, -s), v(0, 1), v(-r, s), v(r, -s - 1)],
            FamilyId::K4F4 => vec![v(r, -s), v(0, 1), v(-r, s), v(-r, s - 1)],
            FamilyId::K5F1 => vec![v(r, -s), v(0, 1), v(-r, s + 1), v(-r, s), v(0, -1)],
            FamilyId::K5F2 => vec![v(r, -s), v(0, 1), v(-r, s), v(-r, s - 1), v(0, -1)],
            FamilyId::K5F3 => vec![v(r, -s), v(0, 1), v(-r, s + 1), v(-r, s), v(r, -s - 1)],
            FamilyId::K6F1 => {
                vec![v(r, -s), v(0, 1), v(-r, s + 1), v(-r, s), v(0, -1), v(r, -s - 1)]
            }
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            FamilyId::K3F1 => "k3f1",
            FamilyId::K4F1 => "k4f1",
            FamilyId::K4F2 => "k4f2",
            FamilyId::K4F3 => "k4f3",
            FamilyId::K4F4 => "k4f4",
            FamilyId::K5F1 => "k5f1",
            FamilyId::K5F2 => "k5f2",
            FamilyId::K5F3 => "k5f3",
            FamilyId::K6F1 => "k6f1",
        };
        f.write_str(name)
    }
}

impl FromStr for FamilyId {
    type Err = ClassifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FamilyId::ALL
            .into_iter()
            .find(|f| f.to_string() == s.to_lowercase())
            .ok_or(ClassifyError::UnknownFamily)
    }
}

/// Instantiate and validate the model polygon of a family at (r, s).
pub fn family_polygon(family: FamilyId, r: i64, s: i64) -> Result<FanoPolygon, ClassifyError> {
    if !family.conditions_hold(r, s) {
        return Err(ClassifyError::GcdConditionViolated { family, r, s });
    }
    FanoPolygon::new(family.template_vertices(r, s))
        .map_err(|source| ClassifyError::NotConvexAtParameters { family, r, s, source })
}

/// The coefficient search space for vertex count k: all tuples (a₁, …, a_k)
/// with every aᵢ ≥ −1 and Σaᵢ = 12 − 3k. Empty for every k ≥ 7, which is the
/// structural form of the six-vertex bound.
pub fn coefficient_tuples(k: usize) -> Vec<Vec<i64>> {
    let total = 12 - 3 * k as i64;
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fill_tuples(total, k, &mut current, &mut out);
    out
}

fn fill_tuples(remaining: i64, slots: usize, current: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if slots == 0 {
        if remaining == 0 {
            out.push(current.clone());
        }
        return;
    }
    let slots_after = slots as i64 - 1;
    // each remaining slot contributes at least -1
    let hi = remaining + slots_after;
    let mut a = -1;
    while a <= hi {
        current.push(a);
        fill_tuples(remaining - a, slots - 1, current, out);
        current.pop();
        a += 1;
    }
}

/// All Fano polygons, up to unimodular equivalence, whose edge cones are all
/// determinant-r R-cones and which have no removable vertex. Output polygons
/// are rebuilt from their canonical forms and sorted, so the result is
/// deterministic.
pub fn enumerate_det_r_fanos(r: i64) -> Vec<FanoPolygon> {
    debug_assert!(r >= 1);
    let mut seen: BTreeSet<Vec<LatticeVector>> = BTreeSet::new();
    for k in 3..=6usize {
        let tuples = coefficient_tuples(k);
        for s in 1..r {
            if r.gcd(&s) != 1 {
                continue;
            }
            let v1 = LatticeVector::new(r, -s);
            let v2 = LatticeVector::new(0, 1);
            'tuple: for tuple in &tuples {
                let mut vs = Vec::with_capacity(k);
                vs.push(v1);
                vs.push(v2);
                // recurrence v_{i+1} = -v_{i-1} - a_i v_i generates v₃..v_k
                for i in 1..k - 1 {
                    let next = -vs[i - 1] + (-tuple[i]) * vs[i];
                    if !next.is_primitive() {
                        continue 'tuple;
                    }
                    vs.push(next);
                }
                // closure at the seam: the recurrence at i = k and i = 1 must
                // return to v₁ and v₂
                let wrap1 = -vs[k - 2] + (-tuple[k - 1]) * vs[k - 1];
                if wrap1 != v1 {
                    continue;
                }
                let wrap2 = -vs[k - 1] + (-tuple[0]) * v1;
                if wrap2 != v2 {
                    continue;
                }
                if !all_cones_are_det_r_rcones(&vs, r) {
                    continue;
                }
                let polygon = match FanoPolygon::new(vs) {
                    Ok(p) => p,
                    Err(_) => continue,
                };
                seen.insert(polygon.canonical_form());
            }
        }
    }
    seen.into_iter()
        .map(|canonical| FanoPolygon::new(canonical).expect("canonical form is a valid polygon"))
        .collect()
}

fn all_cones_are_det_r_rcones(vs: &[LatticeVector], r: i64) -> bool {
    let k = vs.len();
    (0..k).all(|i| {
        let (u, v) = (vs[i], vs[(i + 1) % k]);
        det2(u, v) == r
            && matches!(
                Cone::new(u, v).expect("nonzero determinant").classify(),
                ConeClass::R { .. }
            )
    })
}

/// One matched polygon of a coverage report.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoverageMatch {
    pub polygon: FanoPolygon,
    pub family: FamilyId,
    pub s: i64,
}

/// Result of matching every enumerated determinant-r polygon against the
/// nine model families.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoverageReport {
    pub r: i64,
    pub matches: Vec<CoverageMatch>,
    /// Enumerated polygons isomorphic to no family model: a counterexample
    /// to the classification if ever nonempty.
    pub orphans: Vec<FanoPolygon>,
}

impl CoverageReport {
    pub fn is_clean(&self) -> bool {
        self.orphans.is_empty()
    }
}

/// Match all enumerated determinant-r polygons to family models. Every model
/// instance over every admissible s is canonicalized once; each enumerated
/// polygon must hit one of them.
pub fn verify_family_coverage(r: i64) -> CoverageReport {
    let mut model_index: BTreeMap<Vec<LatticeVector>, (FamilyId, i64)> = BTreeMap::new();
    for family in FamilyId::ALL {
        for s in 1..r {
            if !family.conditions_hold(r, s) {
                continue;
            }
            if let Ok(p) = family_polygon(family, r, s) {
                model_index.entry(p.canonical_form()).or_insert((family, s));
            }
        }
    }
    let mut matches = Vec::new();
    let mut orphans = Vec::new();
    for polygon in enumerate_det_r_fanos(r) {
        match model_index.get(&polygon.canonical_form()) {
            Some(&(family, s)) => matches.push(CoverageMatch { polygon, family, s }),
            None => orphans.push(polygon),
        }
    }
    CoverageReport { r, matches, orphans }
}

/// A census row: the homogeneous-basket polygons at one (k, r, s) class.
/// The weight s is the canonical representative min(s, s⁻¹ mod r).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CensusEntry {
    pub r: i64,
    pub k: usize,
    pub s: i64,
    pub polygon_count: usize,
    pub canonical_models: Vec<Vec<LatticeVector>>,
    pub basket_homogeneous: bool,
}

/// A disagreement between the enumeration census and the closed-form
/// existence predicate.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CensusMismatch {
    /// The enumeration found polygons but the predicate says none exist.
    EnumeratedOnly { k: usize, r: i64, s: i64, count: usize },
    /// The predicate promises a polygon but the enumeration found none.
    PredictedOnly { k: usize, r: i64, s: i64 },
}

impl fmt::Display for CensusMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CensusMismatch::EnumeratedOnly { k, r, s, count } => write!(
                f,
                "(k={k}, r={r}, s={s}): enumeration found {count} polygon(s), predicate says none"
            ),
            CensusMismatch::PredictedOnly { k, r, s } => write!(
                f,
                "(k={k}, r={r}, s={s}): predicate promises a polygon, enumeration found none"
            ),
        }
    }
}

/// A (k, r, s) class whose polygon count differs from the expected value
/// (1 everywhere, except 2 at (k, r, s) = (4, 5, 2)).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct UniquenessViolation {
    pub k: usize,
    pub r: i64,
    pub s: i64,
    pub count: usize,
    pub expected: usize,
}

/// The homogeneous-basket census over r ∈ [3, r_max] with its comparison
/// against the existence predicate.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CensusReport {
    pub r_max: i64,
    pub rows: Vec<CensusEntry>,
    pub mismatches: Vec<CensusMismatch>,
    pub uniqueness_violations: Vec<UniquenessViolation>,
}

impl CensusReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty() && self.uniqueness_violations.is_empty()
    }
}

/// Census rows for a single r: enumerate all determinant-r all-R-cone
/// polygons, keep those whose basket is homogeneous {k × 1/r(1,s)}, and
/// group them by (k, canonical weight). Deterministic for fixed r, so rows
/// for different r can be computed in parallel and merged by sorting.
pub fn census_rows(r: i64) -> Vec<CensusEntry> {
    let mut groups: BTreeMap<(usize, i64), Vec<Vec<LatticeVector>>> = BTreeMap::new();
    for polygon in enumerate_det_r_fanos(r) {
        let content = polygon_singularity_content(&polygon);
        debug_assert_eq!(content.t_cone_count, 0);
        if let Some(class) = content.homogeneous_class() {
            groups
                .entry((polygon.vertex_count(), class.canonical_weight()))
                .or_default()
                .push(polygon.canonical_form());
        }
    }
    groups
        .into_iter()
        .map(|((k, s), mut models)| {
            models.sort();
            CensusEntry {
                r,
                k,
                s,
                polygon_count: models.len(),
                canonical_models: models,
                basket_homogeneous: true,
            }
        })
        .collect()
}

/// Assemble a census report from per-r rows (sorted here, so any execution
/// order of `census_rows` gives the same report) and compare against the
/// existence predicate over the full range.
pub fn assemble_census_report(mut rows: Vec<CensusEntry>, r_max: i64) -> CensusReport {
    rows.sort_by_key(|e| (e.r, e.k, e.s));
    let enumerated: BTreeMap<(usize, i64, i64), usize> = rows
        .iter()
        .map(|e| ((e.k, e.r, e.s), e.polygon_count))
        .collect();
    let mut predicted: BTreeSet<(usize, i64, i64)> = BTreeSet::new();
    for r in 3..=r_max {
        for k in 3..=6usize {
            for s in 1..r {
                if r.gcd(&s) != 1 {
                    continue;
                }
                if existence_predicate(k, r, s).expect("parameters validated") {
                    let class = CyclicQuotientSingularity::new(r, s)
                        .expect("coprime weight")
                        .canonical_weight();
                    predicted.insert((k, r, class));
                }
            }
        }
    }
    let mut mismatches = Vec::new();
    for (&(k, r, s), &count) in &enumerated {
        if !predicted.contains(&(k, r, s)) {
            mismatches.push(CensusMismatch::EnumeratedOnly { k, r, s, count });
        }
    }
    for &(k, r, s) in &predicted {
        if !enumerated.contains_key(&(k, r, s)) {
            mismatches.push(CensusMismatch::PredictedOnly { k, r, s });
        }
    }
    let uniqueness_violations = enumerated
        .iter()
        .filter_map(|(&(k, r, s), &count)| {
            let expected = if (k, r, s) == (4, 5, 2) { 2 } else { 1 };
            (count != expected).then_some(UniquenessViolation { k, r, s, count, expected })
        })
        .collect();
    CensusReport { r_max, rows, mismatches, uniqueness_violations }
}

/// Census of homogeneous-basket polygons for all r ∈ [3, r_max], compared
/// with the existence predicate. Single-threaded reference route.
pub fn verify_homogeneous_census(r_max: i64) -> CensusReport {
    let rows = (3..=r_max).flat_map(census_rows).collect();
    assemble_census_report(rows, r_max)
}

/// Report of the vertex-count rule for uniform unit-weight baskets.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct K2rReport {
    pub k: usize,
    pub r: i64,
    /// k = 2·r·l
    pub l: i64,
    /// 4·r·l, which the winding bound caps at 12
    pub bound_value: i64,
}

/// For a polygon whose basket is {k × 1/r(1,1)}, check that 2r divides k and
/// that 4·r·(k/2r) ≤ 12. Here k is the basket size. Polygons with an empty
/// or non-uniform basket are rejected before the rule is evaluated.
pub fn check_k2r_rule(polygon: &FanoPolygon) -> Result<K2rReport, ClassifyError> {
    let content = polygon_singularity_content(polygon);
    if content.basket.is_empty() {
        return Err(ClassifyError::BasketNotUniformUnit);
    }
    let r = content.basket[0].order();
    let uniform_unit = content
        .basket
        .iter()
        .all(|b| b.order() == r && b.weight() == 1);
    if !uniform_unit {
        return Err(ClassifyError::BasketNotUniformUnit);
    }
    let k = content.basket.len();
    if k as i64 % (2 * r) != 0 {
        return Err(ClassifyError::RuleViolation("basket size is not a multiple of 2r"));
    }
    let l = k as i64 / (2 * r);
    let bound_value = 4 * r * l;
    if bound_value > 12 {
        return Err(ClassifyError::RuleViolation("4rl exceeds 12"));
    }
    Ok(K2rReport { k, r, l, bound_value })
}
