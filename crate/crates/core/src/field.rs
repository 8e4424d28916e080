//! Arithmetic in GF(p) and GF(p²) for primes p > 3.
//!
//! Elements are stored as a single canonical index `a0 + a1·p` where
//! `a0 + a1·t` is the polynomial representative modulo `t² − c`.  The
//! context precomputes addition and multiplication tables once, so the
//! hot loops in the verification engine are plain table lookups.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

/// Largest field size for which tables are built.
pub const MAX_FIELD_SIZE: u32 = 1024;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("characteristic {0} is not supported (need a prime p > 3)")]
    CharacteristicTooSmall(u32),
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("extension degree {0} is not supported (need 1 or 2)")]
    UnsupportedDegree(u32),
    #[error("field of size {0} exceeds the supported maximum {MAX_FIELD_SIZE}")]
    TooLarge(u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("no primitive cube root of unity in GF({0})")]
    NotPresent(u32),
    #[error("malformed field spec `{0}` (expected `p` or `p^2`)")]
    BadSpec(String),
}

/// An element of GF(q), meaningful only together with its [`FieldContext`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(u16);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);

    /// Canonical index in `0..q`.
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Debug)]
struct Tables {
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
}

/// GF(p) or GF(p²) with its canonical representation.
#[derive(Clone)]
pub struct FieldContext {
    p: u32,
    k: u32,
    q: u32,
    /// `c` in the modulus `t² − c`, present iff `k = 2`.
    nonresidue: Option<u32>,
    tables: Arc<Tables>,
}

impl PartialEq for FieldContext {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.nonresidue == other.nonresidue
    }
}

impl Eq for FieldContext {}

impl fmt::Debug for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.spec())
    }
}

impl fmt::Display for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q)
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Build GF(p^k).  For `k = 2` the modulus is `t² − c` with `c` the
/// smallest quadratic non-residue mod p (scanning c = 2, 3, ...).
pub fn make_field(p: u32, k: u32) -> Result<FieldContext, FieldError> {
    if p <= 3 {
        return Err(FieldError::CharacteristicTooSmall(p));
    }
    if !is_prime(p) {
        return Err(FieldError::NotPrime(p));
    }
    if k != 1 && k != 2 {
        return Err(FieldError::UnsupportedDegree(k));
    }
    let q = p.checked_pow(k).filter(|&q| q <= MAX_FIELD_SIZE);
    let q = q.ok_or(FieldError::TooLarge(p.saturating_pow(k)))?;
    let nonresidue = if k == 2 {
        let squares: Vec<bool> = {
            let mut s = vec![false; p as usize];
            for x in 0..p {
                s[(x * x % p) as usize] = true;
            }
            s
        };
        Some((2..p).find(|&c| !squares[c as usize]).expect("p > 2 has a non-residue"))
    } else {
        None
    };
    Ok(FieldContext::build(p, k, q, nonresidue))
}

impl FieldContext {
    fn build(p: u32, k: u32, q: u32, nonresidue: Option<u32>) -> FieldContext {
        let split = |x: u32| (x % p, x / p);
        let join = |a0: u32, a1: u32| a0 + a1 * p;
        let c = nonresidue.unwrap_or(0);
        let n = q as usize;
        let mut add = vec![0u16; n * n];
        let mut mul = vec![0u16; n * n];
        for a in 0..q {
            let (a0, a1) = split(a);
            for b in 0..q {
                let (b0, b1) = split(b);
                add[(a * q + b) as usize] = join((a0 + b0) % p, (a1 + b1) % p) as u16;
                // (a0 + a1 t)(b0 + b1 t) = a0 b0 + c a1 b1 + (a0 b1 + a1 b0) t
                let r0 = (a0 * b0 + c * (a1 * b1 % p)) % p;
                let r1 = (a0 * b1 + a1 * b0) % p;
                mul[(a * q + b) as usize] = join(r0, r1) as u16;
            }
        }
        let mut neg = vec![0u16; n];
        let mut inv = vec![0u16; n];
        for a in 0..q {
            let (a0, a1) = split(a);
            neg[a as usize] = join((p - a0) % p, (p - a1) % p) as u16;
            if a != 0 {
                inv[a as usize] = (1..q)
                    .find(|&b| mul[(a * q + b) as usize] == 1)
                    .expect("nonzero elements of a field are invertible")
                    as u16;
            }
        }
        FieldContext {
            p,
            k,
            q,
            nonresidue,
            tables: Arc::new(Tables { add, mul, neg, inv }),
        }
    }

    /// Parse `"p"` or `"p^2"`.
    pub fn from_spec(spec: &str) -> Result<FieldContext, FieldError> {
        let bad = || FieldError::BadSpec(spec.to_string());
        let spec_t = spec.trim();
        let (p, k) = match spec_t.split_once('^') {
            Some((p, k)) => (p.trim(), k.trim()),
            None => (spec_t, "1"),
        };
        let p: u32 = p.parse().map_err(|_| bad())?;
        let k: u32 = k.parse().map_err(|_| bad())?;
        make_field(p, k)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Coefficients of the modulus `t² − c` as `[-c, 0, 1]` reduced mod p.
    pub fn modulus_poly(&self) -> Option<[u32; 3]> {
        self.nonresidue.map(|c| [(self.p - c) % self.p, 0, 1])
    }

    /// The spec string this field was built from, e.g. `"5"` or `"5^2"`.
    pub fn spec(&self) -> String {
        if self.k == 1 {
            self.p.to_string()
        } else {
            format!("{}^{}", self.p, self.k)
        }
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    /// Image of an integer under `Z → GF(p) ⊂ GF(q)`.
    pub fn from_i64(&self, n: i64) -> FieldElement {
        FieldElement(n.rem_euclid(self.p as i64) as u16)
    }

    /// Element with the given coefficients in the basis `{1, t}`.
    pub fn from_coeffs(&self, coeffs: &[i64]) -> FieldElement {
        let p = self.p as i64;
        let a0 = coeffs.first().copied().unwrap_or(0).rem_euclid(p);
        let a1 = if self.k == 2 {
            coeffs.get(1).copied().unwrap_or(0).rem_euclid(p)
        } else {
            0
        };
        FieldElement((a0 + a1 * p) as u16)
    }

    pub fn coeffs(&self, a: FieldElement) -> Vec<u32> {
        let a = a.0 as u32;
        if self.k == 1 {
            vec![a]
        } else {
            vec![a % self.p, a / self.p]
        }
    }

    /// The element with canonical index `i` (panics if `i ≥ q`).
    pub fn element(&self, i: usize) -> FieldElement {
        assert!(i < self.q as usize, "index {i} outside GF({})", self.q);
        FieldElement(i as u16)
    }

    /// All elements in ascending canonical order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q as u16).map(FieldElement)
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.tables.add[a.0 as usize * self.q as usize + b.0 as usize])
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.tables.mul[a.0 as usize * self.q as usize + b.0 as usize])
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.tables.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    /// `acc + a·b`
    #[inline]
    pub fn mul_add(&self, acc: FieldElement, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(acc, self.mul(a, b))
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        if a.is_zero() {
            Err(FieldError::DivisionByZero)
        } else {
            Ok(FieldElement(self.tables.inv[a.0 as usize]))
        }
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn arith(
        &self,
        a: FieldElement,
        b: FieldElement,
        op: ArithOp,
    ) -> Result<FieldElement, FieldError> {
        match op {
            ArithOp::Add => Ok(self.add(a, b)),
            ArithOp::Sub => Ok(self.sub(a, b)),
            ArithOp::Mul => Ok(self.mul(a, b)),
            ArithOp::Div => self.div(a, b),
        }
    }

    /// `a^e` by square-and-multiply, with `0^0 = 1`.
    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// First `ω ≠ 1` with `ω³ = 1` in canonical order.
    pub fn primitive_cube_root(&self) -> Result<FieldElement, FieldError> {
        self.elements()
            .skip(2)
            .find(|&w| self.pow(w, 3) == self.one())
            .ok_or(FieldError::NotPresent(self.q))
    }

    pub fn has_cube_root(&self) -> bool {
        (self.q - 1) % 3 == 0
    }

    /// Human-readable form: `3`, `t`, `2+4t`.
    pub fn format(&self, a: FieldElement) -> String {
        let c = self.coeffs(a);
        if self.k == 1 || c[1] == 0 {
            return c[0].to_string();
        }
        let t = if c[1] == 1 {
            "t".to_string()
        } else {
            format!("{}t", c[1])
        };
        if c[0] == 0 {
            t
        } else {
            format!("{}+{}", c[0], t)
        }
    }

    /// Signed integer representative in `(-p/2, p/2]` for prime-field elements.
    pub fn signed(&self, a: FieldElement) -> Option<i64> {
        let c = self.coeffs(a);
        if self.k == 2 && c[1] != 0 {
            return None;
        }
        let v = c[0] as i64;
        let p = self.p as i64;
        Some(if v > p / 2 { v - p } else { v })
    }
}

impl FromStr for FieldContext {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FieldContext::from_spec(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructs_small_fields() {
        let f5 = make_field(5, 1).unwrap();
        assert_eq!(f5.q(), 5);
        assert_eq!(make_field(7, 1).unwrap().q(), 7);
        let f25 = make_field(5, 2).unwrap();
        assert_eq!(f25.q(), 25);
        // squares mod 5 are {0, 1, 4}, so 2 is the first non-residue
        assert_eq!(f25.modulus_poly(), Some([3, 0, 1]));
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(make_field(3, 1), Err(FieldError::CharacteristicTooSmall(3)));
        assert_eq!(make_field(2, 1), Err(FieldError::CharacteristicTooSmall(2)));
        assert_eq!(make_field(9, 1), Err(FieldError::NotPrime(9)));
        assert_eq!(make_field(5, 3), Err(FieldError::UnsupportedDegree(3)));
        assert!(FieldContext::from_spec("5^").is_err());
        assert!(FieldContext::from_spec("x").is_err());
        assert_eq!(FieldContext::from_spec("7^2").unwrap().q(), 49);
    }

    #[test]
    fn arithmetic_examples() {
        let f7 = make_field(7, 1).unwrap();
        assert_eq!(f7.mul(f7.from_i64(3), f7.from_i64(5)), f7.one());
        assert_eq!(f7.pow(f7.from_i64(2), 3), f7.one());
        let f5 = make_field(5, 1).unwrap();
        assert_eq!(f5.add(f5.from_i64(2), f5.from_i64(3)), f5.zero());
        assert_eq!(f5.pow(f5.from_i64(-2), 5), f5.from_i64(3));
        assert_eq!(f5.div(f5.one(), f5.zero()), Err(FieldError::DivisionByZero));
        let f25 = make_field(5, 2).unwrap();
        let t = f25.from_coeffs(&[0, 1]);
        assert_eq!(f25.mul(t, t), f25.from_i64(2));
        assert_eq!(f25.pow(t, 25), t);
        assert_eq!(f25.format(f25.from_coeffs(&[2, 4])), "2+4t");
    }

    #[test]
    fn zero_to_the_zero_is_one() {
        let f5 = make_field(5, 1).unwrap();
        assert_eq!(f5.pow(f5.zero(), 0), f5.one());
        assert_eq!(f5.pow(f5.zero(), 3), f5.zero());
    }

    #[test]
    fn frobenius_and_inverses_exhaustive() {
        for (p, k) in [(5, 1), (7, 1), (5, 2), (11, 1)] {
            let f = make_field(p, k).unwrap();
            for a in f.elements() {
                assert_eq!(f.pow(a, f.q() as u64), a, "{a:?} in {f:?}");
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
                }
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive_gf5() {
        let f = make_field(5, 1).unwrap();
        for a in f.elements() {
            for b in f.elements() {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in f.elements() {
                    assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn cube_roots() {
        // brute force over GF(7)*: 2^3 = 8 = 1
        let f7 = make_field(7, 1).unwrap();
        assert_eq!(f7.primitive_cube_root().unwrap(), f7.from_i64(2));
        let f5 = make_field(5, 1).unwrap();
        assert_eq!(f5.primitive_cube_root(), Err(FieldError::NotPresent(5)));
        let f25 = make_field(5, 2).unwrap();
        let w = f25.primitive_cube_root().unwrap();
        assert_ne!(w, f25.one());
        assert_eq!(f25.pow(w, 3), f25.one());
        for (p, k) in [(5, 1), (7, 1), (11, 1), (13, 1), (5, 2), (7, 2), (11, 2)] {
            let f = make_field(p, k).unwrap();
            assert_eq!(f.primitive_cube_root().is_ok(), f.q() % 3 == 1, "{f:?}");
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn gf25_ring_laws(a in 0usize..25, b in 0usize..25, c in 0usize..25) {
                let f = make_field(5, 2).unwrap();
                let (a, b, c) = (f.element(a), f.element(b), f.element(c));
                prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                prop_assert_eq!(f.sub(f.add(a, b), b), a);
                if !b.is_zero() {
                    prop_assert_eq!(f.mul(f.div(a, b).unwrap(), b), a);
                }
            }
        }
    }
}
