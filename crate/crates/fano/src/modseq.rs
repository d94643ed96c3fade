//! r-modular sequences of lattice vectors.
//!
//! A cyclic list of primitive vectors v₁, …, v_k is r-modular when every
//! consecutive determinant det(vᵢ, vᵢ₊₁) is ±r; equivalently each spanned
//! parallelogram has exactly r − 1 interior lattice points. The signs
//! εᵢ = det(vᵢ, vᵢ₊₁)/r and the integer coefficients aᵢ defined by
//! εᵢ₋₁·vᵢ₋₁ + εᵢ·vᵢ₊₁ + aᵢ·vᵢ = 0 determine the winding number of the
//! loop as (Σaᵢ + 3Σεᵢ)/12, and the boundary sums of the sequence and its
//! rational dual satisfy B(P)/r + r·B(P^∨) = 12·w(P) exactly.
//!
//! Index convention throughout: lists are cyclic and 1-based in the
//! mathematical sense, with v₀ = v_k and v_{k+1} = v₁; storage is 0-based.

use std::fmt;

use num_integer::Integer;
use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::lattice::{det2, geometric_winding, LatticeError, LatticeVector};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Error)]
pub enum SequenceError {
    #[error("sequence needs at least 2 vectors, got {found}")]
    TooShort { found: usize },
    #[error("vector {index} is not primitive")]
    NotPrimitive { index: usize },
    #[error("consecutive determinant at index {index} is zero")]
    ZeroDeterminant { index: usize },
    #[error("|det| at index {index} is {found}, expected uniform value {expected}")]
    NonUniformDeterminant { index: usize, expected: i64, found: i64 },
    #[error("coefficient/sign sums give {total}, not divisible by 12; not a closed loop")]
    NonIntegralWinding { total: i64 },
    #[error("winding number undefined: {0}")]
    WindingUndefined(#[from] LatticeError),
    #[error("no closed r-modular loop found for r={r}, k={k} within {cap} attempts")]
    GenerationExhausted { r: i64, k: usize, cap: usize },
    #[error("invalid parameters: need r >= 1 and k >= 2")]
    InvalidParameters,
}

/// A validated r-modular sequence with its derived signs and coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RModularSequence {
    vectors: Vec<LatticeVector>,
    r: i64,
    eps: Vec<i64>,
    coeffs: Vec<i64>,
}

impl RModularSequence {
    /// Validate a vector list and derive r, the signs ε and coefficients a.
    ///
    /// r is inferred from |det(v₁, v₂)| and must be uniform around the cycle.
    /// The coefficients solve εᵢ₋₁·vᵢ₋₁ + εᵢ·vᵢ₊₁ + aᵢ·vᵢ = 0, which for a
    /// primitive uniform-determinant loop always has a unique integer
    /// solution.
    pub fn new(vectors: Vec<LatticeVector>) -> Result<Self, SequenceError> {
        let k = vectors.len();
        if k < 2 {
            return Err(SequenceError::TooShort { found: k });
        }
        for (index, v) in vectors.iter().enumerate() {
            if !v.is_primitive() {
                return Err(SequenceError::NotPrimitive { index });
            }
        }
        let first = det2(vectors[0], vectors[1]);
        if first == 0 {
            return Err(SequenceError::ZeroDeterminant { index: 0 });
        }
        let r = first.abs();
        let mut eps = Vec::with_capacity(k);
        for index in 0..k {
            let d = det2(vectors[index], vectors[(index + 1) % k]);
            if d == 0 {
                return Err(SequenceError::ZeroDeterminant { index });
            }
            if d.abs() != r {
                return Err(SequenceError::NonUniformDeterminant {
                    index,
                    expected: r,
                    found: d.abs(),
                });
            }
            eps.push(d / r);
        }
        let mut coeffs = Vec::with_capacity(k);
        for i in 0..k {
            let prev = vectors[(i + k - 1) % k];
            let next = vectors[(i + 1) % k];
            let e_prev = eps[(i + k - 1) % k];
            let e_cur = eps[i];
            // a_i * v_i = -(ε_{i-1} v_{i-1} + ε_i v_{i+1})
            let target = -(e_prev * prev + e_cur * next);
            let vi = vectors[i];
            let a = if vi.x != 0 { target.x / vi.x } else { target.y / vi.y };
            assert!(
                a * vi == target,
                "integer coefficient must exist for a primitive uniform-determinant loop"
            );
            coeffs.push(a);
        }
        #[cfg(debug_assertions)]
        for i in 0..k {
            let (u, v) = (vectors[i], vectors[(i + 1) % k]);
            let small = |w: LatticeVector| w.x.abs() <= 25 && w.y.abs() <= 25;
            if r <= 1000 && small(u) && small(v) {
                debug_assert_eq!(parallelogram_interior_points(u, v), r - 1);
            }
        }
        Ok(RModularSequence { vectors, r, eps, coeffs })
    }

    pub fn vectors(&self) -> &[LatticeVector] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    /// Signs εᵢ = det(vᵢ, vᵢ₊₁)/r, each ±1.
    pub fn eps(&self) -> &[i64] {
        &self.eps
    }

    /// Coefficients aᵢ of the three-term recurrence.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Winding number by the closed formula (Σaᵢ + 3Σεᵢ)/12. Errors when the
    /// sum is not divisible by 12, which cannot happen for a closed loop.
    pub fn formula_winding(&self) -> Result<i64, SequenceError> {
        let total: i64 =
            self.coeffs.iter().sum::<i64>() + 3 * self.eps.iter().sum::<i64>();
        if total % 12 != 0 {
            return Err(SequenceError::NonIntegralWinding { total });
        }
        Ok(total / 12)
    }

    /// Winding number of the vector loop by exact axis crossings; the
    /// independent route against which the formula is checked.
    pub fn geometric_winding(&self) -> Result<i64, SequenceError> {
        Ok(geometric_winding(&self.vectors)?)
    }

    /// B(P) = Σ det(vᵢ, vᵢ₊₁) = r·Σεᵢ.
    pub fn boundary_sum(&self) -> i64 {
        let k = self.vectors.len();
        (0..k).map(|i| det2(self.vectors[i], self.vectors[(i + 1) % k])).sum()
    }

    /// The dual sequence wᵢ = (vᵢ − vᵢ₋₁)/det(vᵢ₋₁, vᵢ), in exact rationals.
    pub fn dual(&self) -> DualSequence {
        let k = self.vectors.len();
        let vectors = (0..k)
            .map(|i| {
                let prev = self.vectors[(i + k - 1) % k];
                let cur = self.vectors[i];
                let den = det2(prev, cur);
                RationalVector {
                    x: Rational64::new((cur - prev).x, den),
                    y: Rational64::new((cur - prev).y, den),
                }
            })
            .collect();
        DualSequence { vectors }
    }

    /// (1/r)·B(P) + r·B(P^∨) − 12·w(P), in exact rationals. Zero for every
    /// r-modular sequence; the winding is taken from the geometric route.
    pub fn twelve_point_residual(&self) -> Result<Rational64, SequenceError> {
        let w = self.geometric_winding()?;
        let r = Rational64::from_integer(self.r);
        let b = Rational64::from_integer(self.boundary_sum());
        let b_dual = self.dual().boundary_sum();
        Ok(b / r + r * b_dual - Rational64::from_integer(12 * w))
    }
}

impl fmt::Display for RModularSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-modular[", self.r)?;
        for (i, v) in self.vectors.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// An exact rational point of the plane.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RationalVector {
    pub x: Rational64,
    pub y: Rational64,
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Determinant of two rational points.
pub fn det2_rational(u: &RationalVector, v: &RationalVector) -> Rational64 {
    u.x * v.y - u.y * v.x
}

/// The dual of an r-modular sequence; its points are rational, generally not
/// lattice points.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DualSequence {
    vectors: Vec<RationalVector>,
}

impl DualSequence {
    pub fn vectors(&self) -> &[RationalVector] {
        &self.vectors
    }

    /// B(P^∨) = Σ det(wᵢ, wᵢ₊₁), exact.
    pub fn boundary_sum(&self) -> Rational64 {
        let k = self.vectors.len();
        (0..k)
            .map(|i| det2_rational(&self.vectors[i], &self.vectors[(i + 1) % k]))
            .sum()
    }
}

/// Brute-force count of lattice points strictly inside the parallelogram
/// conv{0, u, v, u + v}. For an r-modular pair this is r − 1; kept public as
/// the independent oracle for that fact.
pub fn parallelogram_interior_points(u: LatticeVector, v: LatticeVector) -> i64 {
    let d = det2(u, v);
    assert!(d != 0, "parallelogram must be nondegenerate");
    let corners = [LatticeVector::ZERO, u, v, u + v];
    let x0 = corners.iter().map(|c| c.x).min().unwrap();
    let x1 = corners.iter().map(|c| c.x).max().unwrap();
    let y0 = corners.iter().map(|c| c.y).min().unwrap();
    let y1 = corners.iter().map(|c| c.y).max().unwrap();
    let sign = d.signum();
    let mut count = 0;
    for x in x0..=x1 {
        for y in y0..=y1 {
            let p = LatticeVector::new(x, y);
            // p = α·u + β·v with α = det(p, v)/d, β = det(u, p)/d
            let alpha = det2(p, v) * sign;
            let beta = det2(u, p) * sign;
            if alpha > 0 && alpha < d.abs() && beta > 0 && beta < d.abs() {
                count += 1;
            }
        }
    }
    count
}

const GENERATION_RETRY_CAP: usize = 10_000;

/// Deterministic pseudo-random r-modular sequence of length k.
///
/// Starts from (r, −s), (0, ±1) for a random coprime s, runs k − 2 free
/// steps of the recurrence v_{i+1} = −εᵢ₋₁εᵢ·vᵢ₋₁ − εᵢaᵢ·vᵢ with random
/// signs and small random coefficients, and keeps the loop when it closes
/// with |det(v_k, v₁)| = r and all vectors primitive. Retries are capped, so
/// a cell where closure is rare reports `GenerationExhausted` instead of
/// spinning forever. The same (r, k, seed) always yields the same sequence.
pub fn random_sequence(r: i64, k: usize, seed: u64) -> Result<RModularSequence, SequenceError> {
    if r < 1 || k < 2 {
        return Err(SequenceError::InvalidParameters);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let coprime: Vec<i64> = if r == 1 {
        vec![0]
    } else {
        (1..r).filter(|s| r.gcd(s) == 1).collect()
    };
    // coefficient draws biased towards small values to keep loops closeable
    const A_CHOICES: [i64; 8] = [-2, -1, -1, 0, 0, 1, 1, 2];
    let sign = |rng: &mut ChaCha8Rng| if rng.random::<bool>() { 1i64 } else { -1 };
    'attempt: for _ in 0..GENERATION_RETRY_CAP {
        let s = coprime[rng.random_range(0..coprime.len())];
        let e1 = sign(&mut rng);
        let mut vectors = vec![LatticeVector::new(r, -s), LatticeVector::new(0, e1)];
        let mut eps = vec![e1];
        for i in 1..k - 1 {
            let e = sign(&mut rng);
            let a = A_CHOICES[rng.random_range(0..A_CHOICES.len())];
            let prev2 = vectors[i - 1];
            let prev = vectors[i];
            let next = (-eps[i - 1] * e) * prev2 + (-e * a) * prev;
            if !next.is_primitive() {
                continue 'attempt;
            }
            vectors.push(next);
            eps.push(e);
        }
        if det2(vectors[k - 1], vectors[0]).abs() != r {
            continue;
        }
        if let Ok(seq) = RModularSequence::new(vectors) {
            return Ok(seq);
        }
    }
    Err(SequenceError::GenerationExhausted { r, k, cap: GENERATION_RETRY_CAP })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lv(x: i64, y: i64) -> LatticeVector {
        LatticeVector::new(x, y)
    }

    fn seq(vs: &[(i64, i64)]) -> RModularSequence {
        RModularSequence::new(vs.iter().map(|&(x, y)| lv(x, y)).collect()).unwrap()
    }

    const UNIT_TRIANGLE: [(i64, i64); 3] = [(1, 0), (0, 1), (-1, -1)];
    const TWO_LOOP: [(i64, i64); 2] = [(1, 0), (0, 1)];
    const HEXAGON: [(i64, i64); 6] = [(3, -1), (0, 1), (-3, 2), (-3, 1), (0, -1), (3, -2)];

    #[test]
    fn build_examples() {
        let t = seq(&UNIT_TRIANGLE);
        assert_eq!(t.r(), 1);
        assert_eq!(t.eps(), &[1, 1, 1]);
        assert_eq!(t.coeffs(), &[1, 1, 1]);

        let two = seq(&TWO_LOOP);
        assert_eq!(two.r(), 1);
        assert_eq!(two.eps(), &[1, -1]);
        assert_eq!(two.coeffs(), &[0, 0]);

        let hexagon = seq(&HEXAGON);
        assert_eq!(hexagon.r(), 3);
        assert_eq!(hexagon.eps(), &[1; 6]);
        assert_eq!(hexagon.coeffs(), &[-1; 6]);
    }

    #[test]
    fn build_errors() {
        assert_eq!(
            RModularSequence::new(vec![lv(1, 0)]),
            Err(SequenceError::TooShort { found: 1 })
        );
        assert_eq!(
            RModularSequence::new(vec![lv(2, 0), lv(0, 1)]),
            Err(SequenceError::NotPrimitive { index: 0 })
        );
        assert_eq!(
            RModularSequence::new(vec![lv(1, 0), lv(-1, 0)]),
            Err(SequenceError::ZeroDeterminant { index: 0 })
        );
        assert_eq!(
            RModularSequence::new(vec![lv(1, 0), lv(0, 1), lv(-2, -1)]),
            Err(SequenceError::NonUniformDeterminant { index: 1, expected: 1, found: 2 })
        );
    }

    #[test]
    fn winding_examples() {
        assert_eq!(seq(&UNIT_TRIANGLE).formula_winding().unwrap(), 1);
        assert_eq!(seq(&TWO_LOOP).formula_winding().unwrap(), 0);
        assert_eq!(seq(&HEXAGON).formula_winding().unwrap(), 1);
        assert_eq!(seq(&UNIT_TRIANGLE).geometric_winding().unwrap(), 1);
        assert_eq!(seq(&TWO_LOOP).geometric_winding().unwrap(), 0);
        assert_eq!(seq(&HEXAGON).geometric_winding().unwrap(), 1);
    }

    #[test]
    fn dual_examples() {
        let rat = Rational64::new;
        let t = seq(&UNIT_TRIANGLE).dual();
        assert_eq!(t.vectors()[0], RationalVector { x: rat(2, 1), y: rat(1, 1) });

        let h = seq(&HEXAGON).dual();
        assert_eq!(h.vectors()[1], RationalVector { x: rat(-1, 1), y: rat(2, 3) });

        let two = seq(&TWO_LOOP).dual();
        assert_eq!(two.vectors()[0], RationalVector { x: rat(-1, 1), y: rat(1, 1) });
    }

    #[test]
    fn boundary_sums() {
        assert_eq!(seq(&HEXAGON).boundary_sum(), 18);
        assert_eq!(seq(&UNIT_TRIANGLE).boundary_sum(), 3);
        assert_eq!(seq(&TWO_LOOP).boundary_sum(), 0);

        assert_eq!(seq(&HEXAGON).dual().boundary_sum(), Rational64::from_integer(2));
        assert_eq!(seq(&UNIT_TRIANGLE).dual().boundary_sum(), Rational64::from_integer(9));
        assert_eq!(seq(&TWO_LOOP).dual().boundary_sum(), Rational64::from_integer(0));
    }

    #[test]
    fn twelve_point_examples() {
        let zero = Rational64::from_integer(0);
        assert_eq!(seq(&HEXAGON).twelve_point_residual().unwrap(), zero);
        assert_eq!(seq(&UNIT_TRIANGLE).twelve_point_residual().unwrap(), zero);
        assert_eq!(seq(&TWO_LOOP).twelve_point_residual().unwrap(), zero);
    }

    #[test]
    fn parallelogram_counts_match_pick() {
        assert_eq!(parallelogram_interior_points(lv(1, 0), lv(0, 1)), 0);
        assert_eq!(parallelogram_interior_points(lv(3, -1), lv(0, 1)), 2);
        assert_eq!(parallelogram_interior_points(lv(12, -7), lv(0, 1)), 11);
        assert_eq!(parallelogram_interior_points(lv(0, 1), lv(12, -7)), 11);
        for s in [(5, -2), (7, 3), (-9, 4)] {
            let u = lv(s.0, s.1);
            for v in [lv(0, 1), lv(1, 2), lv(-3, 1)] {
                if det2(u, v) != 0 {
                    assert_eq!(parallelogram_interior_points(u, v), det2(u, v).abs() - 1);
                }
            }
        }
    }

    #[test]
    fn generator_round_trips() {
        let a = random_sequence(1, 3, 7).unwrap();
        assert_eq!(a.r(), 1);
        assert_eq!(a.len(), 3);

        let b = random_sequence(3, 6, 1).unwrap();
        assert_eq!(b.r(), 3);
        let rebuilt = RModularSequence::new(b.vectors().to_vec()).unwrap();
        assert_eq!(rebuilt, b);

        let c = random_sequence(5, 4, 2).unwrap();
        assert_eq!(c.formula_winding().unwrap(), c.geometric_winding().unwrap());
    }

    #[test]
    fn generator_is_deterministic() {
        for (r, k, seed) in [(1, 3, 0), (4, 6, 9), (7, 8, 123), (12, 6, 42)] {
            let a = random_sequence(r, k, seed).unwrap();
            let b = random_sequence(r, k, seed).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn even_r_forces_even_length() {
        // For even r all vectors of a loop share one nonzero class mod 2, so
        // every a_i is even and Σa + 3Σε = 12w forces Σε (hence k) even.
        // Odd-k cells are therefore empty and the generator must say so.
        for (r, k) in [(2, 3), (4, 5), (6, 7), (10, 9)] {
            assert_eq!(
                random_sequence(r, k, 1),
                Err(SequenceError::GenerationExhausted { r, k, cap: 10_000 })
            );
        }
        for seed in 0..10u64 {
            for (r, k) in [(2i64, 4usize), (4, 6), (12, 8)] {
                let s = random_sequence(r, k, seed).unwrap();
                assert!(s.coeffs().iter().all(|a| a % 2 == 0), "{s}");
            }
        }
    }

    #[test]
    fn generator_rejects_bad_parameters() {
        assert_eq!(random_sequence(0, 3, 1), Err(SequenceError::InvalidParameters));
        assert_eq!(random_sequence(2, 1, 1), Err(SequenceError::InvalidParameters));
    }

    #[test]
    fn dual_determinant_identity() {
        // det(w_i, w_{i+1}) = (a_i + ε_i + ε_{i-1}) / r for every i
        for seed in 0..40u64 {
            let r = 1 + (seed as i64 % 9);
            let k = 2 + (seed as usize % 7);
            let Ok(s) = random_sequence(r, k, seed) else { continue };
            let w = s.dual();
            let k = s.len();
            for i in 0..k {
                let lhs = det2_rational(&w.vectors()[i], &w.vectors()[(i + 1) % k]);
                let a = s.coeffs()[i];
                let e = s.eps()[i];
                let e_prev = s.eps()[(i + k - 1) % k];
                assert_eq!(lhs, Rational64::new(a + e + e_prev, s.r()));
            }
        }
    }

    #[test]
    fn max_norm_coefficient_is_small() {
        for seed in 0..60u64 {
            let r = 1 + (seed as i64 % 12);
            let k = 2 + (seed as usize % 9);
            let Ok(s) = random_sequence(r, k, seed) else { continue };
            let j = (0..s.len())
                .max_by_key(|&i| (s.vectors()[i].norm_sq(), -(i as i64)))
                .unwrap();
            assert!(
                [-1, 0, 1].contains(&s.coeffs()[j]),
                "a_j = {} at max-norm index of {s}",
                s.coeffs()[j]
            );
        }
    }
}
