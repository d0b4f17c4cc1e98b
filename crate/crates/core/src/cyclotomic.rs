//! Exact arithmetic in `ℤ[ω_L]`, `ω_L = e^{2πi/L}`.
//!
//! Values are stored as their remainder modulo the `L`-th cyclotomic
//! polynomial `Φ_L`, so two values of the same order are equal iff their
//! coefficient vectors are. Values of different orders are lifted to the lcm
//! of the orders before any binary operation.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

type Poly = Arc<Vec<i64>>;

fn cache() -> &'static RwLock<HashMap<u32, Poly>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Poly>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Coefficients of `Φ_L`, constant term first.
pub fn cyclotomic_polynomial(order: u32) -> Poly {
    assert!(order > 0, "cyclotomic order must be positive");
    if let Some(p) = cache().read().unwrap().get(&order) {
        return p.clone();
    }
    // x^L - 1 divided by Φ_d for every proper divisor d.
    let mut poly = vec![0i64; order as usize + 1];
    poly[0] = -1;
    poly[order as usize] = 1;
    for d in (1..order).filter(|d| order.is_multiple_of(*d)) {
        poly = divide_monic(&poly, &cyclotomic_polynomial(d));
    }
    let poly = Arc::new(poly);
    cache()
        .write()
        .unwrap()
        .entry(order)
        .or_insert(poly)
        .clone()
}

/// Exact quotient of `num` by the monic `den`.
fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let m = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - m];
    for i in (m..num.len()).rev() {
        let c = rem[i];
        if c != 0 {
            quot[i - m] = c;
            for (j, &d) in den.iter().enumerate() {
                rem[i - m + j] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0), "division is not exact");
    quot
}

fn euler_phi(order: u32) -> usize {
    cyclotomic_polynomial(order).len() - 1
}

/// An element of `ℤ[ω_L]` in canonical form.
#[derive(Debug, Clone)]
pub struct CyclotomicInt {
    order: u32,
    coeffs: Vec<BigInt>,
}

impl CyclotomicInt {
    /// Reduces an arbitrary coefficient vector (in powers of `ω_L`).
    pub fn from_coeffs(order: u32, coeffs: Vec<BigInt>) -> Self {
        let phi = cyclotomic_polynomial(order);
        let degree = phi.len() - 1;
        let mut c = coeffs;
        // ω^L = 1 first, then the remainder mod Φ_L.
        let l = order as usize;
        if c.len() > l {
            let tail = c.split_off(l);
            for (i, v) in tail.into_iter().enumerate() {
                c[i % l] += v;
            }
        }
        for i in (degree..c.len()).rev() {
            if c[i].is_zero() {
                continue;
            }
            let lead = std::mem::take(&mut c[i]);
            for (j, &p) in phi[..degree].iter().enumerate() {
                if p != 0 {
                    c[i - degree + j] -= &lead * p;
                }
            }
        }
        c.resize(degree, BigInt::zero());
        CyclotomicInt { order, coeffs: c }
    }

    pub fn from_integer(order: u32, value: impl Into<BigInt>) -> Self {
        Self::from_coeffs(order, vec![value.into()])
    }

    pub fn zero(order: u32) -> Self {
        Self::from_coeffs(order, Vec::new())
    }

    pub fn one(order: u32) -> Self {
        Self::from_integer(order, 1)
    }

    /// `ω_L^e`, with `e` taken mod `L`.
    pub fn root(order: u32, exponent: i64) -> Self {
        let e = exponent.rem_euclid(order as i64) as usize;
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = BigInt::one();
        Self::from_coeffs(order, coeffs)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Canonical coefficients; always `φ(L)` of them.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Rewrites the value in terms of `ω_M`, `L | M`.
    pub fn lift(&self, order: u32) -> CyclotomicInt {
        assert!(
            order.is_multiple_of(self.order),
            "cannot lift order {} to {order}",
            self.order
        );
        if order == self.order {
            return self.clone();
        }
        let step = (order / self.order) as usize;
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len().max(1) - 1) * step + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            coeffs[j * step] = c.clone();
        }
        Self::from_coeffs(order, coeffs)
    }

    fn aligned(a: &Self, b: &Self) -> (CyclotomicInt, CyclotomicInt) {
        let order = a.order.lcm(&b.order);
        (a.lift(order), b.lift(order))
    }

    /// Complex conjugate: `ω^j ↦ ω^{L−j}`.
    pub fn conj(&self) -> CyclotomicInt {
        let l = self.order as usize;
        let mut coeffs = vec![BigInt::zero(); l];
        for (j, c) in self.coeffs.iter().enumerate() {
            coeffs[(l - j) % l] += c;
        }
        Self::from_coeffs(self.order, coeffs)
    }

    /// The rational integer this value equals, if it is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.coeffs.iter().skip(1).all(Zero::is_zero) {
            Some(self.coeffs.first().cloned().unwrap_or_default())
        } else {
            None
        }
    }

    pub fn pow(&self, mut exp: u32) -> CyclotomicInt {
        let mut base = self.clone();
        let mut acc = CyclotomicInt::one(self.order);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }
}

impl PartialEq for CyclotomicInt {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = Self::aligned(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CyclotomicInt {}

impl Add for &CyclotomicInt {
    type Output = CyclotomicInt;

    fn add(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        if self.order != rhs.order {
            let (a, b) = CyclotomicInt::aligned(self, rhs);
            return &a + &b;
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(x, y)| x + y)
            .collect();
        CyclotomicInt {
            order: self.order,
            coeffs,
        }
    }
}

impl Neg for &CyclotomicInt {
    type Output = CyclotomicInt;

    fn neg(self) -> CyclotomicInt {
        CyclotomicInt {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &CyclotomicInt {
    type Output = CyclotomicInt;

    fn sub(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        self + &(-rhs)
    }
}

impl Mul for &CyclotomicInt {
    type Output = CyclotomicInt;

    fn mul(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        if self.order != rhs.order {
            let (a, b) = CyclotomicInt::aligned(self, rhs);
            return &a * &b;
        }
        let n = self.coeffs.len();
        let mut prod = vec![BigInt::zero(); (2 * n).saturating_sub(1)];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                prod[i + j] += a * b;
            }
        }
        CyclotomicInt::from_coeffs(self.order, prod)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for CyclotomicInt {
            type Output = CyclotomicInt;
            fn $method(self, rhs: CyclotomicInt) -> CyclotomicInt {
                (&self).$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for CyclotomicInt {
    type Output = CyclotomicInt;

    fn neg(self) -> CyclotomicInt {
        -&self
    }
}

impl fmt::Display for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = self.as_integer() {
            return write!(f, "{n}");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            if j == 0 || !magnitude.is_one() {
                write!(f, "{magnitude}")?;
            }
            match j {
                0 => {}
                1 => f.write_str("w")?,
                _ => write!(f, "w^{j}")?,
            }
        }
        write!(f, " (order {})", self.order)
    }
}

impl Serialize for CyclotomicInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// `φ(L)`, the number of canonical coefficients for order `L`.
pub fn degree(order: u32) -> usize {
    euler_phi(order)
}
