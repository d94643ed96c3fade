//! Exact integer linear algebra on the lattice Z².
//!
//! Everything here is integer-only: polygon validation, segment lattice
//! lengths, a winding-number oracle based on signed axis crossings, and
//! GL₂(Z) canonical forms for polygon isomorphism testing. No floating
//! point is used anywhere in this crate.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use thiserror::Error;

/// A point of the lattice N = Z².
///
/// Ordering is lexicographic, `x` before `y`; this is the order used to pick
/// deterministic starting vertices and canonical forms.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct LatticeVector {
    pub x: i64,
    pub y: i64,
}

impl LatticeVector {
    pub const ZERO: LatticeVector = LatticeVector { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        LatticeVector { x, y }
    }

    /// True iff the segment from the origin to `self` contains no lattice
    /// point other than its endpoints. The zero vector is not primitive.
    pub fn is_primitive(self) -> bool {
        self != Self::ZERO && self.x.gcd(&self.y) == 1
    }

    /// The primitive vector on the same ray. Must not be called on zero.
    pub fn primitive(self) -> LatticeVector {
        debug_assert!(self != Self::ZERO);
        let g = self.x.gcd(&self.y);
        LatticeVector::new(self.x / g, self.y / g)
    }

    /// Squared Euclidean norm, exact.
    pub fn norm_sq(self) -> i64 {
        self.x * self.x + self.y * self.y
    }
}

impl From<(i64, i64)> for LatticeVector {
    fn from((x, y): (i64, i64)) -> Self {
        LatticeVector::new(x, y)
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Add for LatticeVector {
    type Output = LatticeVector;
    fn add(self, rhs: Self) -> Self {
        LatticeVector::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for LatticeVector {
    type Output = LatticeVector;
    fn sub(self, rhs: Self) -> Self {
        LatticeVector::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Neg for LatticeVector {
    type Output = LatticeVector;
    fn neg(self) -> Self {
        LatticeVector::new(-self.x, -self.y)
    }
}

impl Mul<LatticeVector> for i64 {
    type Output = LatticeVector;
    fn mul(self, rhs: LatticeVector) -> LatticeVector {
        LatticeVector::new(self * rhs.x, self * rhs.y)
    }
}

/// Determinant of the 2×2 matrix with columns `u`, `v`.
pub fn det2(u: LatticeVector, v: LatticeVector) -> i64 {
    u.x * v.y - u.y * v.x
}

/// Standard inner product.
pub fn dot(u: LatticeVector, v: LatticeVector) -> i64 {
    u.x * v.x + u.y * v.y
}

/// True iff `v` is a primitive lattice vector.
pub fn is_primitive(v: LatticeVector) -> bool {
    v.is_primitive()
}

/// Errors from lattice-level validation and geometry.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Error)]
pub enum LatticeError {
    #[error("polygon needs at least 3 vertices, got {found}")]
    TooFewVertices { found: usize },
    #[error("vertex {index} is not primitive")]
    NotPrimitiveVertex { index: usize },
    #[error("vertices are not in strictly convex position")]
    NotConvex,
    #[error("vertices are ordered clockwise; anticlockwise order is required")]
    WrongOrientation,
    #[error("the origin is not strictly interior to the polygon")]
    OriginNotInterior,
    #[error("degenerate segment: endpoints coincide")]
    DegenerateSegment,
    #[error("an edge of the loop passes through the origin")]
    OriginOnBoundary,
    #[error("matrix is not unimodular (|det| must be 1)")]
    NotUnimodular,
}

/// Lattice length of the closed segment from `p` to `q`: the number of
/// lattice points on it, minus one. Equals gcd of the coordinate differences.
pub fn segment_lattice_length(p: LatticeVector, q: LatticeVector) -> Result<i64, LatticeError> {
    if p == q {
        return Err(LatticeError::DegenerateSegment);
    }
    Ok((q.x - p.x).gcd(&(q.y - p.y)))
}

/// Winding number around the origin of the closed polyline
/// v₁ → v₂ → … → v_k → v₁, by exact signed crossings of the positive x-axis.
///
/// The crossing rule is half-open in y (an endpoint with y = 0 belongs to the
/// lower side), so each crossing is counted exactly once. Errors if a vertex
/// is the origin or an edge segment contains the origin.
pub fn geometric_winding(polyline: &[LatticeVector]) -> Result<i64, LatticeError> {
    let k = polyline.len();
    let mut crossings = 0i64;
    for i in 0..k {
        let u = polyline[i];
        let v = polyline[(i + 1) % k];
        if u == LatticeVector::ZERO || v == LatticeVector::ZERO {
            return Err(LatticeError::OriginOnBoundary);
        }
        let d = det2(u, v);
        if d == 0 && dot(u, v) < 0 {
            // u and v are opposite rays, so the segment covers the origin
            return Err(LatticeError::OriginOnBoundary);
        }
        if u.y <= 0 && v.y > 0 {
            if d > 0 {
                crossings += 1;
            }
        } else if u.y > 0 && v.y <= 0 && d < 0 {
            crossings -= 1;
        }
    }
    Ok(crossings)
}

/// An element of GL₂(Z), acting on column vectors: (x, y) ↦ (ax + by, cx + dy).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct UnimodularMap {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl UnimodularMap {
    pub const IDENTITY: UnimodularMap = UnimodularMap { a: 1, b: 0, c: 0, d: 1 };

    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self, LatticeError> {
        let m = UnimodularMap { a, b, c, d };
        if m.det().abs() != 1 {
            return Err(LatticeError::NotUnimodular);
        }
        Ok(m)
    }

    pub fn det(&self) -> i64 {
        self.a * self.d - self.b * self.c
    }

    pub fn apply(&self, v: LatticeVector) -> LatticeVector {
        LatticeVector::new(self.a * v.x + self.b * v.y, self.c * v.x + self.d * v.y)
    }

    /// Matrix product `self * rhs` (apply `rhs` first).
    pub fn compose(&self, rhs: &UnimodularMap) -> UnimodularMap {
        UnimodularMap {
            a: self.a * rhs.a + self.b * rhs.c,
            b: self.a * rhs.b + self.b * rhs.d,
            c: self.c * rhs.a + self.d * rhs.c,
            d: self.c * rhs.b + self.d * rhs.d,
        }
    }

    pub fn inverse(&self) -> UnimodularMap {
        let det = self.det();
        debug_assert!(det.abs() == 1);
        UnimodularMap {
            a: self.d * det,
            b: -self.b * det,
            c: -self.c * det,
            d: self.a * det,
        }
    }
}

/// A Fano polygon: a convex lattice polygon with primitive vertices and the
/// origin strictly in its interior, stored as the anticlockwise vertex cycle
/// rotated so the lexicographically smallest vertex comes first.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FanoPolygon {
    vertices: Vec<LatticeVector>,
}

impl FanoPolygon {
    /// Validate a vertex list as a Fano polygon.
    ///
    /// Requirements, checked in order: at least 3 vertices; every vertex
    /// primitive; strict convexity of the vertex cycle (no repeated vertex,
    /// no three consecutive collinear vertices); anticlockwise orientation
    /// (clockwise input is rejected, not reversed); the origin strictly
    /// interior; and the cycle traverses the origin exactly once.
    pub fn new(mut vertices: Vec<LatticeVector>) -> Result<Self, LatticeError> {
        let k = vertices.len();
        if k < 3 {
            return Err(LatticeError::TooFewVertices { found: k });
        }
        for (index, v) in vertices.iter().enumerate() {
            if !v.is_primitive() {
                return Err(LatticeError::NotPrimitiveVertex { index });
            }
        }
        // Corner turning directions decide convexity and orientation.
        let mut positive = 0usize;
        let mut negative = 0usize;
        for i in 0..k {
            let e1 = vertices[(i + 1) % k] - vertices[i];
            let e2 = vertices[(i + 2) % k] - vertices[(i + 1) % k];
            match det2(e1, e2) {
                0 => return Err(LatticeError::NotConvex),
                d if d > 0 => positive += 1,
                _ => negative += 1,
            }
        }
        if positive == 0 {
            return Err(LatticeError::WrongOrientation);
        }
        if negative > 0 {
            return Err(LatticeError::NotConvex);
        }
        for i in 0..k {
            if det2(vertices[i], vertices[(i + 1) % k]) <= 0 {
                return Err(LatticeError::OriginNotInterior);
            }
        }
        // All origin determinants are positive, so the winding is defined;
        // a value above 1 would mean a star-shaped self-overlapping cycle.
        match geometric_winding(&vertices) {
            Ok(1) => {}
            Ok(_) => return Err(LatticeError::NotConvex),
            Err(_) => return Err(LatticeError::OriginNotInterior),
        }
        let min_idx = vertices
            .iter()
            .enumerate()
            .min_by_key(|(_, v)| **v)
            .map(|(i, _)| i)
            .expect("nonempty");
        vertices.rotate_left(min_idx);
        Ok(FanoPolygon { vertices })
    }

    pub fn vertices(&self) -> &[LatticeVector] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Edge vertex pairs (vᵢ, vᵢ₊₁) in anticlockwise cyclic order.
    pub fn edges(&self) -> impl Iterator<Item = (LatticeVector, LatticeVector)> + '_ {
        let k = self.vertices.len();
        (0..k).map(move |i| (self.vertices[i], self.vertices[(i + 1) % k]))
    }

    /// Image of the polygon under a GL₂(Z) map.
    ///
    /// A determinant −1 map reverses the cyclic orientation, so the image
    /// vertex list is re-reversed before validation to stay anticlockwise.
    pub fn transformed(&self, map: &UnimodularMap) -> FanoPolygon {
        let mut image: Vec<LatticeVector> = self.vertices.iter().map(|&v| map.apply(v)).collect();
        if map.det() < 0 {
            image.reverse();
        }
        FanoPolygon::new(image).expect("unimodular image of a valid polygon is valid")
    }

    /// Deterministic canonical vertex list under the full GL₂(Z) action.
    ///
    /// For every starting edge of both the cycle and its reflected cycle, the
    /// unique orientation-preserving map sending vᵢ₊₁ ↦ (0,1) and
    /// vᵢ ↦ (rᵢ, −sᵢ) with 0 ≤ sᵢ < rᵢ is applied to the rotated cycle; the
    /// lexicographically smallest resulting list is the canonical form. Two
    /// polygons are unimodular-equivalent iff their canonical forms coincide.
    pub fn canonical_form(&self) -> Vec<LatticeVector> {
        let k = self.vertices.len();
        let forward = self.vertices.clone();
        // A determinant −1 representative: swap axes, then reverse the cycle
        // to restore anticlockwise order.
        let mut reflected: Vec<LatticeVector> = self
            .vertices
            .iter()
            .map(|v| LatticeVector::new(v.y, v.x))
            .collect();
        reflected.reverse();
        let mut best: Option<Vec<LatticeVector>> = None;
        for cycle in [&forward, &reflected] {
            for start in 0..k {
                let candidate = normalize_cycle(cycle, start);
                if best.as_ref().is_none_or(|b| candidate < *b) {
                    best = Some(candidate);
                }
            }
        }
        best.expect("k >= 3")
    }

    pub fn is_isomorphic_to(&self, other: &FanoPolygon) -> bool {
        self.vertex_count() == other.vertex_count() && self.canonical_form() == other.canonical_form()
    }
}

impl fmt::Display for FanoPolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// Rotate `cycle` to start at `start` and normalize its first edge to the
/// pair ((r, −s), (0, 1)) by a unique SL₂(Z) map. The Bézout ambiguity in the
/// construction is a shear fixing (0,1), which the final shear step absorbs,
/// so the result is independent of the extended-gcd implementation.
fn normalize_cycle(cycle: &[LatticeVector], start: usize) -> Vec<LatticeVector> {
    let k = cycle.len();
    let a = cycle[start];
    let b = cycle[(start + 1) % k];
    debug_assert!(det2(a, b) > 0);
    let eg = b.x.extended_gcd(&b.y);
    debug_assert_eq!(eg.gcd, 1);
    // h0 · b = (0, 1), det(h0) = +1.
    let h0 = UnimodularMap { a: b.y, b: -b.x, c: eg.x, d: eg.y };
    debug_assert_eq!(h0.det(), 1);
    let first = h0.apply(a);
    let r = first.x;
    debug_assert!(r > 0);
    let s = (-first.y).rem_euclid(r);
    let shear = (-s - first.y) / r;
    let mut out = Vec::with_capacity(k);
    for i in 0..k {
        let w = h0.apply(cycle[(start + i) % k]);
        out.push(LatticeVector::new(w.x, shear * w.x + w.y));
    }
    debug_assert_eq!(out[0], LatticeVector::new(r, -s));
    debug_assert_eq!(out[1], LatticeVector::new(0, 1));
    out
}
