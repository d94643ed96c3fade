//! Elementary number theory: trial-division factorization, Legendre symbols,
//! quadratic congruences, and the existence predicate for homogeneous-basket
//! polygons.
//!
//! The congruence solver ships two routes: an exhaustive scan (the default
//! and the reference oracle) and a CRT/Hensel fast path that must agree with
//! the scan. Primality is established by trial division only; inputs are
//! capped at 2³² so that this stays exact and fast.

use num_integer::Integer;
use thiserror::Error;

/// Hard input cap for factorization-based routines.
pub const FACTOR_INPUT_CAP: u64 = 1 << 32;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Error)]
pub enum NumTheoryError {
    #[error("input {0} is out of range (must be in 1..2^32)")]
    InputTooLarge(u64),
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("invalid parameters: {0}")]
    InvalidParameters(&'static str),
}

/// Prime factorization as (prime, exponent) pairs sorted by prime.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Factorization {
    pairs: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.pairs
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.pairs.iter().map(|&(p, _)| p)
    }

    pub fn value(&self) -> u64 {
        self.pairs.iter().map(|&(p, e)| p.pow(e)).product()
    }
}

/// Factorize by trial division. Accepts 1 ≤ n < 2³².
pub fn factorize(n: u64) -> Result<Factorization, NumTheoryError> {
    if n == 0 || n >= FACTOR_INPUT_CAP {
        return Err(NumTheoryError::InputTooLarge(n));
    }
    let mut pairs = Vec::new();
    let mut m = n;
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut e = 0u32;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            pairs.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        pairs.push((m, 1));
    }
    Ok(Factorization { pairs })
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n).map(|f| f.pairs.len() == 1 && f.pairs[0].1 == 1).unwrap_or(false)
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `m`, when gcd(a, m) = 1.
pub fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    debug_assert!(m >= 1);
    let a = a.rem_euclid(m);
    if m == 1 {
        return Some(0);
    }
    let eg = a.extended_gcd(&m);
    if eg.gcd != 1 {
        return None;
    }
    Some(eg.x.rem_euclid(m))
}

/// Legendre symbol (a/p) for an odd prime p, via Euler's criterion.
pub fn legendre(a: i64, p: u64) -> Result<i64, NumTheoryError> {
    if p < 3 || p.is_multiple_of(2) || !is_prime(p) {
        return Err(NumTheoryError::NotOddPrime(p));
    }
    let a = a.rem_euclid(p as i64) as u64;
    let e = pow_mod(a, (p - 1) / 2, p);
    Ok(if e == 0 {
        0
    } else if e == 1 {
        1
    } else {
        debug_assert_eq!(e, p - 1);
        -1
    })
}

/// All s in [0, r) with s² + b·s + c ≡ 0 (mod r), by exhaustive scan.
///
/// This is the reference oracle; see [`solve_quadratic_congruence_crt`] for
/// the Hensel/CRT route that must agree with it.
pub fn solve_quadratic_congruence(b: i64, c: i64, r: u64) -> Vec<u64> {
    debug_assert!(r >= 1);
    let m = r as i128;
    (0..r)
        .filter(|&s| {
            let s = s as i128;
            (s * s + b as i128 * s + c as i128).rem_euclid(m) == 0
        })
        .collect()
}

/// Tonelli–Shanks square root of `a` modulo an odd prime `p`.
/// Returns a root x with x² ≡ a, or None when a is a non-residue.
fn sqrt_mod_prime(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    if pow_mod(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    if p % 4 == 3 {
        return Some(pow_mod(a, (p + 1) / 4, p));
    }
    // write p - 1 = q * 2^s with q odd
    let mut q = p - 1;
    let mut s = 0u32;
    while q.is_multiple_of(2) {
        q /= 2;
        s += 1;
    }
    // any quadratic non-residue serves as the correction generator
    let mut z = 2u64;
    while pow_mod(z, (p - 1) / 2, p) != p - 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0u32;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul_mod(t2, t2, p);
            i += 1;
        }
        let b = pow_mod(c, 1u64 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    Some(r)
}

fn poly_val_mod(b: i64, c: i64, s: u64, m: u64) -> u64 {
    let s = s as i128;
    (s * s + b as i128 * s + c as i128).rem_euclid(m as i128) as u64
}

/// Roots of s² + b·s + c modulo a prime power p^e, by root-finding mod p and
/// Hensel lifting (including the singular case f'(s) ≡ 0 mod p).
fn roots_mod_prime_power(b: i64, c: i64, p: u64, e: u32) -> Vec<u64> {
    // roots mod p
    let mut roots: Vec<u64> = if p == 2 {
        (0..2).filter(|&s| poly_val_mod(b, c, s, 2) == 0).collect()
    } else {
        let disc = (b as i128 * b as i128 - 4 * c as i128).rem_euclid(p as i128) as u64;
        let inv2 = mod_inverse(2, p as i64).expect("p odd") as u64;
        match sqrt_mod_prime(disc, p) {
            None => Vec::new(),
            Some(x) => {
                let nb = (-b).rem_euclid(p as i64) as u64;
                let mut v = vec![mul_mod((nb + x) % p, inv2, p)];
                let r2 = mul_mod((nb + p - x) % p, inv2, p);
                if !v.contains(&r2) {
                    v.push(r2);
                }
                v
            }
        }
    };
    let mut modulus = p;
    for _ in 1..e {
        let next = modulus * p;
        let mut lifted = Vec::new();
        for &t in &roots {
            let fp = (2 * t as i128 + b as i128).rem_euclid(p as i128) as u64;
            if fp != 0 {
                // regular root: unique Newton lift
                let inv = mod_inverse(fp as i64, next as i64).expect("unit mod p^e") as u64;
                let f = poly_val_mod(b, c, t, next);
                let t2 = (t as i128 - (mul_mod(f, inv, next)) as i128).rem_euclid(next as i128) as u64;
                lifted.push(t2);
            } else if poly_val_mod(b, c, t, next) == 0 {
                // singular root: every preimage class lifts
                for m in 0..p {
                    lifted.push(t + m * modulus);
                }
            }
        }
        lifted.sort_unstable();
        lifted.dedup();
        roots = lifted;
        modulus = next;
    }
    roots.sort_unstable();
    roots
}

/// Fast-path congruence solver: prime-power Hensel lifting combined by CRT.
/// Must return exactly what [`solve_quadratic_congruence`] returns.
pub fn solve_quadratic_congruence_crt(b: i64, c: i64, r: u64) -> Result<Vec<u64>, NumTheoryError> {
    if r == 0 || r >= FACTOR_INPUT_CAP {
        return Err(NumTheoryError::InputTooLarge(r));
    }
    if r == 1 {
        return Ok(vec![0]);
    }
    let mut solutions: Vec<u64> = vec![0];
    let mut modulus: u64 = 1;
    for &(p, e) in factorize(r)?.pairs() {
        let pe = p.pow(e);
        let local = roots_mod_prime_power(b, c, p, e);
        if local.is_empty() {
            return Ok(Vec::new());
        }
        let mut merged = Vec::with_capacity(solutions.len() * local.len());
        // CRT: x ≡ a (mod modulus), x ≡ t (mod pe)
        let minv = mod_inverse(modulus as i64, pe as i64).expect("coprime moduli") as u128;
        for &a in &solutions {
            for &t in &local {
                let diff = (t as i128 - a as i128).rem_euclid(pe as i128) as u128;
                let k = (diff * minv) % pe as u128;
                merged.push(a + (k as u64) * modulus);
            }
        }
        solutions = merged;
        modulus *= pe;
    }
    solutions.sort_unstable();
    Ok(solutions)
}

/// True iff every prime divisor of `r` is ≡ `target` (mod `m`).
/// Vacuously true for r = 1.
pub fn all_primes_congruent(r: u64, m: u64, target: u64) -> Result<bool, NumTheoryError> {
    debug_assert!(m >= 1);
    let f = factorize(r)?;
    let ok = f.primes().all(|p| p % m == target % m);
    Ok(ok)
}

/// The branch of the existence condition satisfied by (k, r, s).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ExistenceBranch {
    /// k = 3, every p | r ≡ 1 (mod 6), s² − s + 1 ≡ 0 (mod r)
    K3Congruence,
    /// k = 4, every p | r ≡ 1 (mod 4), s² + 1 ≡ 0 (mod r)
    K4Congruence,
    /// k = 6, (r, s) = (3, 1)
    K6Exceptional,
    /// k = 6, every p | r ≡ 1 (mod 6), s² + s + 1 ≡ 0 (mod r)
    K6Congruence,
}

impl ExistenceBranch {
    pub fn describe(&self, r: i64) -> String {
        match self {
            ExistenceBranch::K3Congruence => {
                format!("k=3, s^2-s+1 \u{2261} 0 (mod {r}), all p | {r} \u{2261} 1 (mod 6)")
            }
            ExistenceBranch::K4Congruence => {
                format!("k=4, s^2+1 \u{2261} 0 (mod {r}), all p | {r} \u{2261} 1 (mod 4)")
            }
            ExistenceBranch::K6Exceptional => "k=6, r=3, s=1".to_string(),
            ExistenceBranch::K6Congruence => {
                format!("k=6, s^2+s+1 \u{2261} 0 (mod {r}), all p | {r} \u{2261} 1 (mod 6)")
            }
        }
    }
}

fn congruence_holds(s: i64, b: i64, c: i64, r: i64) -> bool {
    let (s, b, c, r) = (s as i128, b as i128, c as i128, r as i128);
    (s * s + b * s + c).rem_euclid(r) == 0
}

/// First satisfied branch of the existence condition for a Fano polygon with
/// singularity content (0, {k × 1/r(1,s)}), or None. The branches are a
/// union, not mutually exclusive.
///
/// Requires k ≥ 3, r ≥ 3, 1 ≤ s < r and gcd(r, s) = 1.
pub fn existence_branch(
    k: usize,
    r: i64,
    s: i64,
) -> Result<Option<ExistenceBranch>, NumTheoryError> {
    if k < 3 || r < 3 || s < 1 || s >= r || r.gcd(&s) != 1 {
        return Err(NumTheoryError::InvalidParameters(
            "need k >= 3, r >= 3, 1 <= s < r, gcd(r, s) = 1",
        ));
    }
    let ru = r as u64;
    let branch = match k {
        3 => (all_primes_congruent(ru, 6, 1)? && congruence_holds(s, -1, 1, r))
            .then_some(ExistenceBranch::K3Congruence),
        4 => (all_primes_congruent(ru, 4, 1)? && congruence_holds(s, 0, 1, r))
            .then_some(ExistenceBranch::K4Congruence),
        6 => {
            if (r, s) == (3, 1) {
                Some(ExistenceBranch::K6Exceptional)
            } else {
                (all_primes_congruent(ru, 6, 1)? && congruence_holds(s, 1, 1, r))
                    .then_some(ExistenceBranch::K6Congruence)
            }
        }
        _ => None,
    };
    Ok(branch)
}

/// Whether a Fano polygon with singularity content (0, {k × 1/r(1,s)}) exists
/// according to the closed-form arithmetic conditions; false for every k
/// outside {3, 4, 6} (in particular k = 5).
pub fn existence_predicate(k: usize, r: i64, s: i64) -> Result<bool, NumTheoryError> {
    Ok(existence_branch(k, r, s)?.is_some())
}
