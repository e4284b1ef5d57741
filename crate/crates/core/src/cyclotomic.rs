//! Exact arithmetic in cyclotomic fields Q(ζ_r).
//!
//! An element is stored in the power basis of Q[x]/(Φ_r(x)) with
//! arbitrary-precision rational coefficients. Operands of different orders
//! are lifted to the lcm of their orders before combining.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

fn phi_cache() -> &'static RwLock<HashMap<usize, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Coefficients of the cyclotomic polynomial Φ_r, lowest degree first.
///
/// Computed by exact division of x^r − 1 by Φ_d for every proper divisor d
/// of r, and memoized.
pub fn cyclotomic_polynomial(r: usize) -> Arc<Vec<i64>> {
    assert!(r >= 1, "cyclotomic polynomial of order 0");
    if let Some(p) = phi_cache().read().unwrap().get(&r) {
        return p.clone();
    }
    let mut num = vec![0i64; r + 1];
    num[0] = -1;
    num[r] = 1;
    for d in (1..r).filter(|d| r.is_multiple_of(*d)) {
        let den = cyclotomic_polynomial(d);
        num = exact_div(&num, &den);
    }
    let p = Arc::new(num);
    phi_cache().write().unwrap().entry(r).or_insert(p).clone()
}

/// Quotient of `num` by the monic polynomial `den`; the division must be exact.
fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quo = vec![0i64; num.len() - dn];
    for k in (0..quo.len()).rev() {
        let c = rem[k + dn];
        quo[k] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[k + j] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quo
}

/// Euler's totient, the degree of Φ_r.
pub fn euler_phi(r: usize) -> usize {
    cyclotomic_polynomial(r).len() - 1
}

/// An exact element of Q(ζ_r).
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    order: usize,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    /// The zero element of Q(ζ_order).
    pub fn zero(order: usize) -> Self {
        Cyclotomic { order, coeffs: vec![BigRational::zero(); euler_phi(order)] }
    }

    /// The rational number `q`, viewed in Q(ζ_1) = Q.
    pub fn from_rational(q: BigRational) -> Self {
        Cyclotomic { order: 1, coeffs: vec![q] }
    }

    /// The integer `k`, viewed in Q.
    pub fn from_integer(k: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(k)))
    }

    /// Builds Σ_k c_k x^k (any length) reduced modulo Φ_order.
    pub fn from_power_coeffs(order: usize, poly: Vec<BigRational>) -> Self {
        Cyclotomic { order, coeffs: reduce(order, poly) }
    }

    /// Builds Σ_k counts\[k\]·ζ_order^k from integer multiplicities of roots of unity.
    pub fn from_root_counts(order: usize, counts: &[i64]) -> Self {
        let mut poly = vec![BigRational::zero(); order.max(1)];
        for (k, &c) in counts.iter().enumerate() {
            if c != 0 {
                poly[k % order] += BigRational::from_integer(BigInt::from(c));
            }
        }
        Self::from_power_coeffs(order, poly)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Power-basis coefficients, of length φ(order).
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The rational value when every non-constant coefficient vanishes.
    pub fn is_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// The integer value when the element is a rational integer.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_rational().filter(|q| q.is_integer()).map(|q| q.to_integer())
    }

    /// Image under the embedding Q(ζ_r) → Q(ζ_R), ζ_r ↦ ζ_R^{R/r}.
    pub fn lift(&self, order: usize) -> Self {
        assert!(order.is_multiple_of(self.order), "cannot lift order {} to {}", self.order, order);
        if order == self.order {
            return self.clone();
        }
        let step = order / self.order;
        let mut poly = vec![BigRational::zero(); order];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                poly[(k * step) % order] += c;
            }
        }
        Self::from_power_coeffs(order, poly)
    }

    /// Complex conjugation, the automorphism ζ ↦ ζ^{-1}.
    pub fn conjugate(&self) -> Self {
        let r = self.order;
        let mut poly = vec![BigRational::zero(); r];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                poly[(r - k % r) % r] += c;
            }
        }
        Self::from_power_coeffs(r, poly)
    }

    /// Multiplication by a rational scalar.
    pub fn scale(&self, q: &BigRational) -> Self {
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    /// Floating-point value, for display only.
    pub fn to_complex(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.coeffs.iter().enumerate() {
            let v = c.to_f64().unwrap_or(f64::NAN);
            let t = 2.0 * std::f64::consts::PI * k as f64 / self.order as f64;
            re += v * t.cos();
            im += v * t.sin();
        }
        (re, im)
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        let l = self.order.lcm(&other.order);
        (self.lift(l), other.lift(l))
    }
}

/// ζ_r^k reduced modulo Φ_r.
pub fn root_of_unity(r: usize, k: i64) -> Cyclotomic {
    assert!(r >= 1, "root of unity of order 0");
    let e = k.rem_euclid(r as i64) as usize;
    let mut poly = vec![BigRational::zero(); r];
    poly[e] = BigRational::one();
    Cyclotomic::from_power_coeffs(r, poly)
}

fn reduce(order: usize, mut poly: Vec<BigRational>) -> Vec<BigRational> {
    let phi = cyclotomic_polynomial(order);
    let d = phi.len() - 1;
    if poly.len() < d {
        poly.resize(d, BigRational::zero());
    }
    for k in (d..poly.len()).rev() {
        let c = std::mem::take(&mut poly[k]);
        if c.is_zero() {
            continue;
        }
        for (j, &pj) in phi[..d].iter().enumerate() {
            if pj != 0 {
                poly[k - d + j] -= &c * BigRational::from_integer(BigInt::from(pj));
            }
        }
    }
    poly.truncate(d);
    poly
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b) = self.common(rhs);
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        Cyclotomic { order: a.order, coeffs }
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b) = self.common(rhs);
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect();
        Cyclotomic { order: a.order, coeffs }
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b) = self.common(rhs);
        let mut poly = vec![BigRational::zero(); a.coeffs.len() + b.coeffs.len()];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    poly[i + j] += x * y;
                }
            }
        }
        Cyclotomic::from_power_coeffs(a.order, poly)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &Cyclotomic) -> Cyclotomic {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(1), |acc, x| acc + x)
    }
}

impl fmt::Display for Cyclotomic {
    /// Monomial form such as `1/2 - ζ8^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let mono = match k {
                0 => String::new(),
                1 => format!("ζ{}", self.order),
                _ => format!("ζ{}^{}", self.order, k),
            };
            if mono.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{a}*{mono}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct Repr {
    order: usize,
    coeffs: Vec<String>,
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs = self.coeffs.iter().map(|c| format!("{}/{}", c.numer(), c.denom())).collect();
        Repr { order: self.order, coeffs }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = Repr::deserialize(d)?;
        if repr.order == 0 {
            return Err(D::Error::custom("order must be positive"));
        }
        let mut poly = Vec::with_capacity(repr.coeffs.len());
        for s in &repr.coeffs {
            let q: BigRational = s.parse().map_err(|_| D::Error::custom(format!("bad rational {s}")))?;
            poly.push(q);
        }
        if poly.len() != euler_phi(repr.order) {
            return Err(D::Error::custom("coefficient count must equal φ(order)"));
        }
        Ok(Cyclotomic::from_power_coeffs(repr.order, poly))
    }
}
