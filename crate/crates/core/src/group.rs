//! Parameters of the projective reflection groups G(r,p,q,n) and element enumeration.

use std::fmt;

use itertools::Itertools;
use num_integer::Integer;

use crate::colored_perm::{ColoredPermutation, ProjectiveElement};
use crate::error::{Error, Result};

/// Default bound on r^n·n! for exhaustive enumerations.
pub const DEFAULT_MAX_ORDER: u128 = 1_000_000;

/// The group G(r,p,q,n) = G(r,p,n)/C_q.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupParams {
    pub r: usize,
    pub p: usize,
    pub q: usize,
    pub n: usize,
}

impl GroupParams {
    /// Validates p | r, q | r and pq | rn.
    pub fn new(r: usize, p: usize, q: usize, n: usize) -> Result<Self> {
        if r == 0 || p == 0 || q == 0 {
            return Err(Error::Domain("r, p and q must be positive".into()));
        }
        if !r.is_multiple_of(p) || !r.is_multiple_of(q) {
            return Err(Error::Domain(format!("p = {p} and q = {q} must divide r = {r}")));
        }
        if !(r * n).is_multiple_of(p * q) {
            return Err(Error::Domain(format!("pq = {} must divide rn = {}", p * q, r * n)));
        }
        Ok(GroupParams { r, p, q, n })
    }

    /// G(r,p,n) with trivial quotient.
    pub fn subgroup(r: usize, p: usize, n: usize) -> Result<Self> {
        Self::new(r, p, 1, n)
    }

    /// The dual group G(r,q,p,n), whose absolute involutions index the model.
    pub fn dual(&self) -> Self {
        GroupParams { r: self.r, p: self.q, q: self.p, n: self.n }
    }

    /// True when GCD(p,n) ∈ {1,2}, the range in which the model exists.
    pub fn is_involutory(&self) -> bool {
        matches!(self.p.gcd(&self.n), 1 | 2)
    }

    /// GCD(p,n) == 2, the case with split classes and split representations.
    pub fn has_splitting(&self) -> bool {
        self.p.gcd(&self.n) == 2
    }

    /// r^n·n!, the order of G(r,n).
    pub fn wreath_order(&self) -> u128 {
        wreath_order(self.r, self.n)
    }

    /// |G(r,p,n)| = r^n·n!/p.
    pub fn subgroup_order(&self) -> u128 {
        self.wreath_order() / self.p as u128
    }

    /// |G(r,p,q,n)| = r^n·n!/(pq).
    pub fn order(&self) -> u128 {
        self.subgroup_order() / self.q as u128
    }

    pub fn require_involutory(&self) -> Result<()> {
        if self.is_involutory() {
            Ok(())
        } else {
            Err(Error::Unsupported(format!("GCD(p,n) = {} is not 1 or 2", self.p.gcd(&self.n))))
        }
    }

    /// Fails when r^n·n! exceeds `max`.
    pub fn guard(&self, max: u128) -> Result<()> {
        if self.wreath_order() > max {
            Err(Error::Resource(format!(
                "G({},{}) has order {} > {}",
                self.r,
                self.n,
                self.wreath_order(),
                max
            )))
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for GroupParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({},{},{},{})", self.r, self.p, self.q, self.n)
    }
}

/// r^n·n!, saturating at u128::MAX.
pub fn wreath_order(r: usize, n: usize) -> u128 {
    let mut acc: u128 = 1;
    for k in 1..=n {
        acc = acc.saturating_mul(r as u128).saturating_mul(k as u128);
    }
    acc
}

/// All permutations of 0..n (0-based images) in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    (0..n).permutations(n).collect()
}

/// All color vectors in Z_r^n, lexicographic.
pub fn colorings(r: usize, n: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = (r as u128).pow(n as u32);
    (0..total).map(move |mut idx| {
        let mut z = vec![0; n];
        for slot in z.iter_mut().rev() {
            *slot = (idx % r as u128) as usize;
            idx /= r as u128;
        }
        z
    })
}

/// Every element of G(r,p,n), permutation-major order.
pub fn subgroup_elements(r: usize, p: usize, n: usize, max: u128) -> Result<Vec<ColoredPermutation>> {
    GroupParams::new(r, p, 1, n)?.guard(max)?;
    let mut out = Vec::new();
    for perm in permutations(n) {
        for z in colorings(r, n) {
            if z.iter().sum::<usize>() % p == 0 {
                out.push(ColoredPermutation::from_parts(r, perm.clone(), z)?);
            }
        }
    }
    Ok(out)
}

/// One canonical lift of every element of G(r,p,q,n).
pub fn projective_elements(params: GroupParams, max: u128) -> Result<Vec<ProjectiveElement>> {
    let mut out = Vec::new();
    for g in subgroup_elements(params.r, params.p, params.n, max)? {
        let x = ProjectiveElement::new(g.clone(), params.q)?;
        if *x.rep() == g {
            out.push(x);
        }
    }
    Ok(out)
}
