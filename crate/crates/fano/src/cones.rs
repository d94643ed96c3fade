//! Two-dimensional lattice cones and cyclic quotient singularities.
//!
//! A nondegenerate cone over Z² with primitive ray generators is classified
//! by a pair (r, s): some orientation-preserving change of basis takes its
//! rays to (0,1) and (r,−s) with 0 ≤ s < r and gcd(r, s) = 1. On top of that
//! normal form this module computes lattice length and height, the T/R
//! classification, cone subdivision into primitive T-cones plus a residual
//! R-cone, singularity content of a whole polygon, and ℓ-reflexivity.

use std::fmt;

use num_integer::Integer;
use thiserror::Error;

use crate::classify::FamilyId;
use crate::lattice::{det2, dot, FanoPolygon, LatticeVector, UnimodularMap};
use crate::numthy::mod_inverse;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Error)]
pub enum ConeError {
    #[error("degenerate cone: rays are zero or parallel")]
    DegenerateCone,
    #[error("invalid singularity data 1/{r}(1,{s})")]
    InvalidSingularity { r: i64, s: i64 },
    #[error("gcd conditions of the family are violated at (r, s) = ({r}, {s})")]
    GcdConditionViolated { r: i64, s: i64 },
}

/// The cyclic quotient singularity 1/r(1, s): the germ of C²/μ_r where the
/// group acts with weights (1, s). Stored with 0 ≤ s < r and gcd(r, s) = 1;
/// (1, 0) is the smooth case.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CyclicQuotientSingularity {
    r: i64,
    s: i64,
}

impl CyclicQuotientSingularity {
    pub fn new(r: i64, s: i64) -> Result<Self, ConeError> {
        let valid = r >= 1 && (0..r).contains(&s) && (r == 1 || r.gcd(&s) == 1);
        if !valid {
            return Err(ConeError::InvalidSingularity { r, s });
        }
        Ok(CyclicQuotientSingularity { r, s })
    }

    pub const SMOOTH: CyclicQuotientSingularity = CyclicQuotientSingularity { r: 1, s: 0 };

    pub fn order(&self) -> i64 {
        self.r
    }

    pub fn weight(&self) -> i64 {
        self.s
    }

    /// Germ isomorphism: 1/r(1,s) ≅ 1/r(1,s') iff s' = s or s·s' ≡ 1 (mod r).
    pub fn is_isomorphic_to(&self, other: &CyclicQuotientSingularity) -> bool {
        self.r == other.r
            && (self.s == other.s || (self.s * other.s).rem_euclid(self.r) == 1 % self.r)
    }

    /// Deterministic representative weight of the isomorphism class:
    /// min(s, s⁻¹ mod r).
    pub fn canonical_weight(&self) -> i64 {
        if self.r == 1 {
            return 0;
        }
        let inv = mod_inverse(self.s, self.r).expect("gcd(r, s) = 1");
        self.s.min(inv)
    }
}

impl fmt::Display for CyclicQuotientSingularity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1/{}(1,{})", self.r, self.s)
    }
}

/// Germ isomorphism of cyclic quotient singularities.
pub fn cqs_isomorphic(a: &CyclicQuotientSingularity, b: &CyclicQuotientSingularity) -> bool {
    a.is_isomorphic_to(b)
}

/// A two-dimensional cone spanned by two non-parallel lattice rays.
///
/// Ray generators need not be primitive and may come in either order; the
/// operations reduce to primitive generators and orient anticlockwise first.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Cone {
    ray1: LatticeVector,
    ray2: LatticeVector,
}

/// Lattice length and lattice height of a cone, measured on the segment
/// joining the primitive ray generators. Their product is |det| of the
/// primitive rays.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ConeMetrics {
    pub length: i64,
    pub height: i64,
}

/// T/R classification of a cone, with its subdivision data.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ConeClass {
    /// length = height: one primitive T-cone.
    PrimitiveT,
    /// height | length, length ≠ height: `t_cones` primitive T-cones.
    T { t_cones: i64 },
    /// length < height: rigid residual singularity.
    R { residual: CyclicQuotientSingularity },
    /// length = n·height + r₀ with n ≥ 1, 0 < r₀ < height.
    Composite { t_cones: i64, residual: CyclicQuotientSingularity },
}

/// Singularity content of a single cone: number of primitive T-cones in its
/// subdivision plus the residual R-singularity, if any.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ConeContent {
    pub t_cones: i64,
    pub residual: Option<CyclicQuotientSingularity>,
}

impl Cone {
    /// Build a cone; fails iff the rays are zero or parallel.
    pub fn new(ray1: LatticeVector, ray2: LatticeVector) -> Result<Self, ConeError> {
        if ray1 == LatticeVector::ZERO || ray2 == LatticeVector::ZERO || det2(ray1, ray2) == 0 {
            return Err(ConeError::DegenerateCone);
        }
        Ok(Cone { ray1, ray2 })
    }

    pub fn rays(&self) -> (LatticeVector, LatticeVector) {
        (self.ray1, self.ray2)
    }

    /// Primitive ray generators in anticlockwise order (positive determinant).
    fn oriented_primitive(&self) -> (LatticeVector, LatticeVector) {
        let a = self.ray1.primitive();
        let b = self.ray2.primitive();
        if det2(a, b) > 0 {
            (a, b)
        } else {
            (b, a)
        }
    }

    /// The unique (r, s) with an orientation-preserving unimodular map taking
    /// the primitive rays to (r, −s) and (0, 1).
    pub fn normal_form(&self) -> CyclicQuotientSingularity {
        let (a, b) = self.oriented_primitive();
        let (r, beta) = normal_form_raw(a, b);
        CyclicQuotientSingularity::new(r, (-beta).rem_euclid(r)).expect("primitive image")
    }

    /// Lattice length and height of the cone, via the primitive inner normal
    /// of the spanning segment.
    pub fn metrics(&self) -> ConeMetrics {
        let (a, b) = self.oriented_primitive();
        let d = b - a;
        let length = d.x.gcd(&d.y);
        // primitive inner normal of the segment through a and b
        let normal = LatticeVector::new(-d.y / length, d.x / length);
        let ha = dot(a, normal);
        debug_assert_eq!(ha, dot(b, normal));
        debug_assert!(ha < 0, "normal points towards the origin, pairing is negative");
        ConeMetrics { length, height: ha.abs() }
    }

    pub fn classify(&self) -> ConeClass {
        let ConeMetrics { length, height } = self.metrics();
        if length == height {
            ConeClass::PrimitiveT
        } else if length % height == 0 {
            ConeClass::T { t_cones: length / height }
        } else if length < height {
            ConeClass::R { residual: self.normal_form() }
        } else {
            let content = self.singularity_content();
            ConeClass::Composite {
                t_cones: content.t_cones,
                residual: content.residual.expect("composite cone has a residual"),
            }
        }
    }

    /// Subdivide into ⌊length/height⌋ primitive T-cones plus, when the height
    /// does not divide the length, a residual R-cone of lattice length
    /// `length mod height` taken at the anticlockwise end of the segment.
    pub fn singularity_content(&self) -> ConeContent {
        let (a, b) = self.oriented_primitive();
        let ConeMetrics { length, height } = self.metrics();
        let t_cones = length / height;
        let rem = length % height;
        if rem == 0 {
            return ConeContent { t_cones, residual: None };
        }
        let step = LatticeVector::new((b.x - a.x) / length, (b.y - a.y) / length);
        let split = a + (length - rem) * step;
        let residual = Cone::new(split, b).expect("subcone of a nondegenerate cone");
        ConeContent { t_cones, residual: Some(residual.normal_form()) }
    }

    /// Same subdivision with the residual taken at the clockwise end instead.
    /// The result is always isomorphic to the anticlockwise placement; kept
    /// public so that invariance is testable.
    pub fn singularity_content_clockwise_residual(&self) -> ConeContent {
        let (a, b) = self.oriented_primitive();
        let ConeMetrics { length, height } = self.metrics();
        let t_cones = length / height;
        let rem = length % height;
        if rem == 0 {
            return ConeContent { t_cones, residual: None };
        }
        let step = LatticeVector::new((b.x - a.x) / length, (b.y - a.y) / length);
        let split = a + rem * step;
        let residual = Cone::new(a, split).expect("subcone of a nondegenerate cone");
        ConeContent { t_cones, residual: Some(residual.normal_form()) }
    }
}

/// Map b to (0, 1) by an explicit SL₂(Z) element and return the image of a,
/// which is (det2(a, b), β) for some β.
fn normal_form_raw(a: LatticeVector, b: LatticeVector) -> (i64, i64) {
    let eg = b.x.extended_gcd(&b.y);
    debug_assert_eq!(eg.gcd, 1);
    let h0 = UnimodularMap { a: b.y, b: -b.x, c: eg.x, d: eg.y };
    debug_assert_eq!(h0.det(), 1);
    let img = h0.apply(a);
    debug_assert_eq!(img.x, det2(a, b));
    (img.x, img.y)
}

impl fmt::Display for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cone({}, {})", self.ray1, self.ray2)
    }
}

/// Singularity content of a Fano polygon: total primitive T-cone count over
/// the edge cones plus the cyclically ordered basket of residual
/// R-singularities, in edge order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SingularityContent {
    pub t_cone_count: i64,
    pub basket: Vec<CyclicQuotientSingularity>,
}

impl SingularityContent {
    /// When the basket is nonempty and all entries are pairwise isomorphic,
    /// the class representative of its entries.
    pub fn homogeneous_class(&self) -> Option<CyclicQuotientSingularity> {
        let first = *self.basket.first()?;
        self.basket
            .iter()
            .all(|b| b.is_isomorphic_to(&first))
            .then_some(first)
    }
}

impl fmt::Display for SingularityContent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {{", self.t_cone_count)?;
        // group equal entries for readability, preserving first-seen order
        let mut groups: Vec<(CyclicQuotientSingularity, usize)> = Vec::new();
        for &b in &self.basket {
            match groups.iter_mut().find(|(g, _)| *g == b) {
                Some((_, n)) => *n += 1,
                None => groups.push((b, 1)),
            }
        }
        for (i, (g, n)) in groups.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if *n > 1 {
                write!(f, "{n} x {g}")?;
            } else {
                write!(f, "{g}")?;
            }
        }
        write!(f, "}})")
    }
}

/// Singularity content of a polygon, over its edge cones in anticlockwise
/// order starting from the stored first vertex.
pub fn polygon_singularity_content(polygon: &FanoPolygon) -> SingularityContent {
    let mut t_cone_count = 0;
    let mut basket = Vec::new();
    for (u, v) in polygon.edges() {
        let cone = Cone::new(u, v).expect("polygon edge cones are nondegenerate");
        let content = cone.singularity_content();
        t_cone_count += content.t_cones;
        if let Some(res) = content.residual {
            basket.push(res);
        }
    }
    SingularityContent { t_cone_count, basket }
}

/// The common lattice height of all edges, if there is one.
pub fn l_reflexive_index(polygon: &FanoPolygon) -> Option<i64> {
    let mut heights = polygon.edges().map(|(u, v)| {
        Cone::new(u, v).expect("polygon edge cones are nondegenerate").metrics().height
    });
    let first = heights.next()?;
    heights.all(|h| h == first).then_some(first)
}

/// A tabulated cone type of a family model: either a closed-form singularity
/// or a marker for entries with no closed form.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ConeTypeDescriptor {
    Known(CyclicQuotientSingularity),
    UnknownR,
}

/// The closed-form cone singularity types of a family model at (r, s), in
/// edge order starting from the cone over ((r,−s), (0,1)). Two-argument
/// forms 1/r(a, b) are normalized to 1/r(1, a⁻¹·b mod r).
pub fn family_cone_types(
    family: FamilyId,
    r: i64,
    s: i64,
) -> Result<Vec<ConeTypeDescriptor>, ConeError> {
    if !family.conditions_hold(r, s) {
        return Err(ConeError::GcdConditionViolated { r, s });
    }
    let one = |w: i64| -> Result<ConeTypeDescriptor, ConeError> {
        Ok(ConeTypeDescriptor::Known(CyclicQuotientSingularity::new(
            r,
            w.rem_euclid(r),
        )?))
    };
    let two = |a: i64, b: i64| -> Result<ConeTypeDescriptor, ConeError> {
        let inv = mod_inverse(a, r).ok_or(ConeError::GcdConditionViolated { r, s })?;
        one(inv * b.rem_euclid(r))
    };
    let unknown = ConeTypeDescriptor::UnknownR;
    let floor_rs = |den: i64| r.div_euclid(den);
    let types = match family {
        FamilyId::K3F1 => {
            let f = floor_rs(s);
            vec![one(s)?, one(r + 1 - s)?, two(r - (s - 1) * f, r - s * f)?]
        }
        FamilyId::K4F1 => vec![one(s)?, one(r - s)?, one(s)?, one(r - s)?],
        FamilyId::K4F2 => vec![one(s)?, one(r - 1 - s)?, one(s + 1)?, one(r - s)?],
        FamilyId::K4F3 => {
            let f = floor_rs(s + 1);
            vec![one(s)?, one(r - s)?, two(r - s * f, r - (s + 1) * f)?, unknown]
        }
        FamilyId::K4F4 => {
            let f = floor_rs(s);
            vec![one(s)?, one(r - s)?, unknown, two(r - (s - 1) * f, r - s * f)?]
        }
        FamilyId::K5F1 => vec![one(s)?, one(r - 1 - s)?, unknown, one(s)?, one(r - s)?],
        FamilyId::K5F2 => vec![one(s)?, one(r - s)?, unknown, one(s - 1)?, one(r - s)?],
        FamilyId::K5F3 => {
            let f = floor_rs(s + 1);
            vec![
                one(s)?,
                one(r - 1 - s)?,
                unknown,
                two(r - s * f, r - (s + 1) * f)?,
                unknown,
            ]
        }
        FamilyId::K6F1 => vec![
            one(s)?,
            one(r - 1 - s)?,
            unknown,
            one(s)?,
            one(r - 1 - s)?,
            unknown,
        ],
    };
    Ok(types)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lv(x: i64, y: i64) -> LatticeVector {
        LatticeVector::new(x, y)
    }

    fn cone(a: (i64, i64), b: (i64, i64)) -> Cone {
        Cone::new(lv(a.0, a.1), lv(b.0, b.1)).unwrap()
    }

    fn cqs(r: i64, s: i64) -> CyclicQuotientSingularity {
        CyclicQuotientSingularity::new(r, s).unwrap()
    }

    /// Exhaustive oracle: search unimodular maps with entries in [-10, 10]
    /// and det +1 sending the anticlockwise primitive rays (a, b) to
    /// ((r, -s), (0, 1)).
    fn normal_form_by_search(c: &Cone) -> CyclicQuotientSingularity {
        let (ray1, ray2) = c.rays();
        let a = ray1.primitive();
        let b = ray2.primitive();
        let (a, b) = if det2(a, b) > 0 { (a, b) } else { (b, a) };
        let r = det2(a, b);
        let range = -10i64..=10;
        for ma in range.clone() {
            for mb in range.clone() {
                for mc in range.clone() {
                    for md in range.clone() {
                        if ma * md - mb * mc != 1 {
                            continue;
                        }
                        let m = UnimodularMap { a: ma, b: mb, c: mc, d: md };
                        if m.apply(b) != lv(0, 1) {
                            continue;
                        }
                        let img = m.apply(a);
                        if img.x == r && -img.y >= 0 && -img.y < r {
                            return cqs(r, -img.y);
                        }
                    }
                }
            }
        }
        panic!("no normalizing map found for {c}");
    }

    #[test]
    fn normal_form_examples() {
        assert_eq!(cone((0, 1), (2, -1)).normal_form(), cqs(2, 1));
        assert_eq!(cone((0, 1), (3, -1)).normal_form(), cqs(3, 1));
        // value frozen from the exhaustive small-matrix search
        assert_eq!(cone((1, 1), (-1, 4)).normal_form(), cqs(5, 1));
        assert_eq!(
            normal_form_by_search(&cone((1, 1), (-1, 4))),
            cqs(5, 1)
        );
        // imprimitive rays are reduced first
        assert_eq!(cone((0, 3), (4, -2)).normal_form(), cqs(2, 1));
        // smooth cone
        assert_eq!(cone((1, 0), (0, 1)).normal_form(), CyclicQuotientSingularity::SMOOTH);
    }

    #[test]
    fn normal_form_agrees_with_search_on_small_cones() {
        for ax in -4i64..=4 {
            for ay in -4i64..=4 {
                for bx in -4i64..=4 {
                    for by in -4i64..=4 {
                        let (a, b) = (lv(ax, ay), lv(bx, by));
                        if a == LatticeVector::ZERO || b == LatticeVector::ZERO {
                            continue;
                        }
                        if !a.is_primitive() || !b.is_primitive() || det2(a, b) == 0 {
                            continue;
                        }
                        let c = Cone::new(a, b).unwrap();
                        assert_eq!(c.normal_form(), normal_form_by_search(&c), "{c}");
                    }
                }
            }
        }
    }

    #[test]
    fn degenerate_cones_rejected() {
        assert_eq!(
            Cone::new(lv(0, 0), lv(1, 0)),
            Err(ConeError::DegenerateCone)
        );
        assert_eq!(
            Cone::new(lv(2, 4), lv(-1, -2)),
            Err(ConeError::DegenerateCone)
        );
        assert_eq!(Cone::new(lv(1, 2), lv(2, 4)), Err(ConeError::DegenerateCone));
    }

    #[test]
    fn metrics_examples() {
        assert_eq!(cone((0, 1), (2, -1)).metrics(), ConeMetrics { length: 2, height: 1 });
        assert_eq!(cone((0, 1), (3, -1)).metrics(), ConeMetrics { length: 1, height: 3 });
        assert_eq!(cone((0, 1), (12, -7)).metrics(), ConeMetrics { length: 4, height: 3 });
    }

    #[test]
    fn length_times_height_is_determinant() {
        for ax in -12i64..=12 {
            for ay in -12i64..=12 {
                let a = lv(ax, ay);
                if !a.is_primitive() {
                    continue;
                }
                for bx in -12i64..=12 {
                    for by in -12i64..=12 {
                        let b = lv(bx, by);
                        if !b.is_primitive() || det2(a, b) == 0 {
                            continue;
                        }
                        let m = Cone::new(a, b).unwrap().metrics();
                        assert_eq!(m.length * m.height, det2(a, b).abs());
                    }
                }
            }
        }
    }

    #[test]
    fn classification_examples() {
        assert_eq!(cone((0, 1), (2, -1)).classify(), ConeClass::T { t_cones: 2 });
        assert_eq!(
            cone((0, 1), (3, -1)).classify(),
            ConeClass::R { residual: cqs(3, 1) }
        );
        assert_eq!(
            cone((0, 1), (12, -7)).classify(),
            ConeClass::Composite { t_cones: 1, residual: cqs(3, 1) }
        );
        assert_eq!(cone((1, 0), (0, 1)).classify(), ConeClass::PrimitiveT);
        assert_eq!(cone((0, 1), (4, -1)).classify(), ConeClass::PrimitiveT);
    }

    #[test]
    fn content_examples() {
        assert_eq!(
            cone((0, 1), (5, -2)).singularity_content(),
            ConeContent { t_cones: 0, residual: Some(cqs(5, 2)) }
        );
        assert_eq!(
            cone((0, 1), (2, -1)).singularity_content(),
            ConeContent { t_cones: 2, residual: None }
        );
        assert_eq!(
            cone((0, 1), (12, -7)).singularity_content(),
            ConeContent { t_cones: 1, residual: Some(cqs(3, 1)) }
        );
    }

    #[test]
    fn residual_placement_is_immaterial_up_to_isomorphism() {
        for r in 2..=60i64 {
            for s in 0..r {
                if r > 1 && r.gcd(&s) != 1 {
                    continue;
                }
                let c = cone((0, 1), (r, -s));
                let acw = c.singularity_content();
                let cw = c.singularity_content_clockwise_residual();
                assert_eq!(acw.t_cones, cw.t_cones);
                match (acw.residual, cw.residual) {
                    (None, None) => {}
                    (Some(x), Some(y)) => assert!(x.is_isomorphic_to(&y), "r={r} s={s}"),
                    _ => panic!("placement changed residual existence at r={r} s={s}"),
                }
            }
        }
    }

    #[test]
    fn classification_consistent_with_content() {
        for r in 1..=40i64 {
            for s in 0..r {
                if r > 1 && r.gcd(&s) != 1 {
                    continue;
                }
                if r == 1 && s != 0 {
                    continue;
                }
                let c = cone((0, 1), (r, -s));
                let class = c.classify();
                let content = c.singularity_content();
                let is_r = matches!(class, ConeClass::R { .. });
                assert_eq!(is_r, content.t_cones == 0 && content.residual.is_some());
            }
        }
    }

    #[test]
    fn cqs_isomorphism_examples() {
        assert!(cqs(5, 2).is_isomorphic_to(&cqs(5, 3)));
        assert!(cqs(7, 3).is_isomorphic_to(&cqs(7, 5)));
        assert!(!cqs(5, 2).is_isomorphic_to(&cqs(5, 1)));
        assert!(cqs(1, 0).is_isomorphic_to(&CyclicQuotientSingularity::SMOOTH));
        assert!(!cqs(5, 2).is_isomorphic_to(&cqs(7, 2)));
        assert_eq!(cqs(5, 3).canonical_weight(), 2);
        assert_eq!(cqs(35, 17).canonical_weight(), 17);
    }

    #[test]
    fn normal_form_invariant_under_orientation_preserving_maps() {
        let maps = [
            UnimodularMap::new(1, 0, 1, 1).unwrap(),
            UnimodularMap::new(0, -1, 1, 0).unwrap(),
            UnimodularMap::new(2, 1, 1, 1).unwrap(),
            UnimodularMap::new(-3, -2, 2, 1).unwrap(),
        ];
        let reflections = [
            UnimodularMap::new(0, 1, 1, 0).unwrap(),
            UnimodularMap::new(1, 0, 0, -1).unwrap(),
        ];
        for r in 2..=25i64 {
            for s in 1..r {
                if r.gcd(&s) != 1 {
                    continue;
                }
                let base = cone((r, -s), (0, 1));
                let nf = base.normal_form();
                for m in &maps {
                    let img = Cone::new(m.apply(lv(r, -s)), m.apply(lv(0, 1))).unwrap();
                    assert_eq!(img.normal_form(), nf);
                }
                for m in &reflections {
                    let img = Cone::new(m.apply(lv(r, -s)), m.apply(lv(0, 1))).unwrap();
                    let got = img.normal_form();
                    // a reflection can only swap the weight with its inverse
                    assert!(got.is_isomorphic_to(&nf));
                }
            }
        }
    }

    #[test]
    fn hexagon_singularity_content() {
        let p = FanoPolygon::new(
            [(0, 1), (-3, 2), (-3, 1), (0, -1), (3, -2), (3, -1)]
                .iter()
                .map(|&(x, y)| lv(x, y))
                .collect(),
        )
        .unwrap();
        let sc = polygon_singularity_content(&p);
        assert_eq!(sc.t_cone_count, 0);
        assert_eq!(sc.basket, vec![cqs(3, 1); 6]);
        assert_eq!(l_reflexive_index(&p), Some(3));
        assert_eq!(sc.to_string(), "(0, {6 x 1/3(1,1)})");
    }

    #[test]
    fn smooth_square_content() {
        let p = FanoPolygon::new(vec![lv(0, 1), lv(-1, 0), lv(0, -1), lv(1, 0)]).unwrap();
        let sc = polygon_singularity_content(&p);
        assert_eq!(sc.t_cone_count, 4);
        assert!(sc.basket.is_empty());
        assert_eq!(l_reflexive_index(&p), Some(1));
    }

    #[test]
    fn triangle_content_all_isomorphic() {
        let p = FanoPolygon::new(vec![lv(0, 1), lv(-7, 2), lv(7, -3)]).unwrap();
        let sc = polygon_singularity_content(&p);
        assert_eq!(sc.t_cone_count, 0);
        assert_eq!(sc.basket.len(), 3);
        for b in &sc.basket {
            assert_eq!(b.order(), 7);
            assert!(b.is_isomorphic_to(&cqs(7, 3)));
        }
    }

    #[test]
    fn family_cone_type_tables() {
        use ConeTypeDescriptor::{Known, UnknownR};
        assert_eq!(
            family_cone_types(FamilyId::K3F1, 7, 3).unwrap(),
            vec![Known(cqs(7, 3)), Known(cqs(7, 5)), Known(cqs(7, 5))]
        );
        assert_eq!(
            family_cone_types(FamilyId::K4F1, 5, 2).unwrap(),
            vec![Known(cqs(5, 2)), Known(cqs(5, 3)), Known(cqs(5, 2)), Known(cqs(5, 3))]
        );
        assert_eq!(
            family_cone_types(FamilyId::K6F1, 3, 1).unwrap(),
            vec![
                Known(cqs(3, 1)),
                Known(cqs(3, 1)),
                UnknownR,
                Known(cqs(3, 1)),
                Known(cqs(3, 1)),
                UnknownR
            ]
        );
        assert_eq!(
            family_cone_types(FamilyId::K3F1, 6, 3),
            Err(ConeError::GcdConditionViolated { r: 6, s: 3 })
        );
    }
}
