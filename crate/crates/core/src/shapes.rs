//! Partitions, multipartitions Fer(r,n), their Γ_p-orbits and standard multitableaux.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest n for which standard multitableaux are listed explicitly.
pub const MAX_TABLEAU_SIZE: usize = 12;

/// An integer partition, parts weakly decreasing and positive.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// |λ|.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// ℓ(λ), the number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The conjugate partition (column lengths).
    pub fn conjugate(&self) -> Self {
        let cols = self.0.first().copied().unwrap_or(0);
        Partition((0..cols).map(|c| self.0.iter().filter(|&&p| p > c).count()).collect())
    }

    /// Number of columns of odd length.
    pub fn odd_columns(&self) -> usize {
        self.conjugate().0.iter().filter(|&&c| c % 2 == 1).count()
    }

    /// Multiplicity of the part `j`.
    pub fn multiplicity(&self, j: usize) -> usize {
        self.0.iter().filter(|&&p| p == j).count()
    }

    /// Number of standard Young tableaux, by the hook length formula.
    pub fn count_standard(&self) -> u128 {
        let n = self.size();
        let conj = self.conjugate();
        let mut hooks: u128 = 1;
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                hooks *= (row - j + conj.0[j] - i - 1) as u128;
            }
        }
        factorial(n) / hooks
    }

    /// All partitions of n, largest first part first.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fill_partitions(n, n, &mut cur, &mut out);
        out
    }

    /// Every part multiplied by k.
    pub fn scaled(&self, k: usize) -> Self {
        Partition(self.0.iter().map(|&p| p * k).collect())
    }

    /// Parses `(2,1)`; `()` is the empty partition.
    pub fn parse(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("partition must be parenthesized: {s}")))?;
        let mut parts = Vec::new();
        for item in body.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            parts.push(item.parse().map_err(|_| Error::Parse(format!("bad part {item:?}")))?);
        }
        let p = Partition::new(parts.clone());
        if p.0 != parts {
            return Err(Error::Parse(format!("parts must be positive and weakly decreasing: {s}")));
        }
        Ok(p)
    }
}

fn fill_partitions(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for k in (1..=max.min(n)).rev() {
        cur.push(k);
        fill_partitions(n - k, k, cur, out);
        cur.pop();
    }
}

pub(crate) fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// An r-tuple of partitions (λ^{(0)},…,λ^{(r−1)}).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multipartition(Vec<Partition>);

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Self {
        assert!(!components.is_empty(), "a multipartition has at least one component");
        Multipartition(components)
    }

    /// Builds from raw part lists, one per component.
    pub fn from_parts(components: &[&[usize]]) -> Self {
        Self::new(components.iter().map(|c| Partition::new(c.to_vec())).collect())
    }

    /// ((n),∅,…,∅).
    pub fn trivial(r: usize, n: usize) -> Self {
        let mut c = vec![Partition::empty(); r];
        c[0] = Partition::new(vec![n]);
        Self::new(c)
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    pub fn r(&self) -> usize {
        self.0.len()
    }

    /// Total number of boxes.
    pub fn size(&self) -> usize {
        self.0.iter().map(Partition::size).sum()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.0.iter().map(Partition::size).collect()
    }

    /// z(λ) = Σ i·|λ^{(i)}|, not reduced.
    pub fn color(&self) -> usize {
        self.0.iter().enumerate().map(|(i, p)| i * p.size()).sum()
    }

    /// Total number of parts ℓ(λ).
    pub fn length(&self) -> usize {
        self.0.iter().map(Partition::len).sum()
    }

    /// (λ^{(r−s)},…,λ^{(r−1)},λ^{(0)},…): component i moves to i+s.
    pub fn shift(&self, s: usize) -> Self {
        let r = self.r();
        Multipartition((0..r).map(|i| self.0[(i + r - s % r) % r].clone()).collect())
    }

    /// Concatenation (μ,μ) of two copies.
    pub fn doubled(&self) -> Self {
        let mut c = self.0.clone();
        c.extend(self.0.iter().cloned());
        Multipartition(c)
    }

    /// The number of standard multitableaux of this shape.
    pub fn count_standard(&self) -> u128 {
        let mut total = factorial(self.size());
        for p in &self.0 {
            total /= factorial(p.size());
        }
        total * self.0.iter().map(Partition::count_standard).product::<u128>()
    }

    /// Parses `((2,1),(1,1,1))`; `()` marks an empty component.
    pub fn parse(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("multipartition must be parenthesized: {s}")))?;
        let mut comps = Vec::new();
        let mut depth = 0;
        let mut start = 0;
        for (i, ch) in body.char_indices() {
            match ch {
                '(' => {
                    if depth == 0 {
                        start = i;
                    }
                    depth += 1;
                }
                ')' => {
                    depth -= 1;
                    if depth == 0 {
                        comps.push(Partition::parse(&body[start..=i])?);
                    }
                }
                ',' | ' ' => {}
                _ if depth > 0 => {}
                _ => return Err(Error::Parse(format!("unexpected {ch:?} in {s}"))),
            }
        }
        if comps.is_empty() || depth != 0 {
            return Err(Error::Parse(format!("malformed multipartition {s}")));
        }
        Ok(Multipartition(comps))
    }
}

impl Ord for Multipartition {
    /// Component sizes first, then parts.
    fn cmp(&self, other: &Self) -> Ordering {
        self.sizes().cmp(&other.sizes()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Multipartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Multipartition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// All multipartitions of n with r components and z(λ) ≡ 0 mod q, sorted.
pub fn enumerate_shapes(r: usize, n: usize, q: usize) -> Vec<Multipartition> {
    assert!(r >= 1 && q >= 1 && r.is_multiple_of(q), "q must divide r");
    let tables: Vec<Vec<Partition>> = (0..=n).map(Partition::all).collect();
    let mut out = Vec::new();
    for sizes in compositions(n, r) {
        let color: usize = sizes.iter().enumerate().map(|(i, s)| i * s).sum();
        if !color.is_multiple_of(q) {
            continue;
        }
        let mut acc: Vec<Vec<Partition>> = vec![Vec::new()];
        for &s in &sizes {
            acc = acc
                .into_iter()
                .flat_map(|pre| {
                    tables[s].iter().map(move |p| {
                        let mut v = pre.clone();
                        v.push(p.clone());
                        v
                    })
                })
                .collect();
        }
        out.extend(acc.into_iter().map(Multipartition));
    }
    out.sort();
    out
}

/// Weak compositions of n into k parts, lexicographic.
pub fn compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=n {
        for mut rest in compositions(n - first, k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// The Γ_p-orbit [λ] of a multipartition under shifts by r/p.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShapeOrbit {
    members: Vec<Multipartition>,
    p: usize,
}

impl ShapeOrbit {
    /// Orbit of λ under the cyclic group of order p acting by index shift r/p.
    pub fn of(lambda: &Multipartition, p: usize) -> Self {
        let r = lambda.r();
        assert!(p >= 1 && r.is_multiple_of(p), "p must divide r");
        let step = r / p;
        let mut members: Vec<Multipartition> = (0..p).map(|k| lambda.shift(k * step)).collect();
        members.sort();
        members.dedup();
        ShapeOrbit { members, p }
    }

    /// Distinct members, least first.
    pub fn members(&self) -> &[Multipartition] {
        &self.members
    }

    /// The lexicographically least member.
    pub fn canonical(&self) -> &Multipartition {
        &self.members[0]
    }

    pub fn p(&self) -> usize {
        self.p
    }

    /// m_p(λ), the order of the stabilizer.
    pub fn stabilizer_order(&self) -> usize {
        self.p / self.members.len()
    }

    /// |St_{[λ]}|, the number of shift classes of standard fillings of members;
    /// equal to count_standard(λ)/m_p(λ).
    pub fn count_standard(&self) -> u128 {
        self.canonical().count_standard() / self.stabilizer_order() as u128
    }

    pub fn contains(&self, lambda: &Multipartition) -> bool {
        self.members.contains(lambda)
    }
}

impl fmt::Display for ShapeOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.canonical())
    }
}

impl Serialize for ShapeOrbit {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Orbit of λ under Γ_p; see [`ShapeOrbit::of`].
pub fn orbit_of(lambda: &Multipartition, p: usize) -> ShapeOrbit {
    ShapeOrbit::of(lambda, p)
}

/// The distinct Γ_p-orbits among `shapes`, sorted by canonical member.
pub fn orbits(shapes: &[Multipartition], p: usize) -> Vec<ShapeOrbit> {
    let mut out: Vec<ShapeOrbit> = shapes.iter().map(|l| ShapeOrbit::of(l, p)).collect();
    out.sort_by(|a, b| a.canonical().cmp(b.canonical()));
    out.dedup();
    out
}

/// A filling of a multipartition by 1..n, with rows and columns increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct StandardMultitableau(Vec<Vec<Vec<usize>>>);

impl StandardMultitableau {
    /// Wraps rows per component; validates standardness.
    pub fn new(components: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        let t = StandardMultitableau(components);
        if !t.is_standard() {
            return Err(Error::Domain("filling is not a standard multitableau".into()));
        }
        Ok(t)
    }

    pub(crate) fn from_rows_unchecked(components: Vec<Vec<Vec<usize>>>) -> Self {
        StandardMultitableau(components)
    }

    /// Rows of every component.
    pub fn components(&self) -> &[Vec<Vec<usize>>] {
        &self.0
    }

    pub fn shape(&self) -> Multipartition {
        Multipartition(self.0.iter().map(|rows| Partition(rows.iter().map(Vec::len).collect())).collect())
    }

    /// Component i moves to i+s.
    pub fn shift(&self, s: usize) -> Self {
        let r = self.0.len();
        StandardMultitableau((0..r).map(|i| self.0[(i + r - s % r) % r].clone()).collect())
    }

    fn is_standard(&self) -> bool {
        let n: usize = self.0.iter().flatten().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for rows in &self.0 {
            for (i, row) in rows.iter().enumerate() {
                if row.is_empty() || (i > 0 && row.len() > rows[i - 1].len()) {
                    return false;
                }
                for (j, &x) in row.iter().enumerate() {
                    if x == 0 || x > n || seen[x] {
                        return false;
                    }
                    seen[x] = true;
                    if j > 0 && row[j - 1] >= x {
                        return false;
                    }
                    if i > 0 && rows[i - 1][j] >= x {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// All standard multitableaux of shape λ (n ≤ [`MAX_TABLEAU_SIZE`]).
pub fn enumerate_standard(lambda: &Multipartition) -> Result<Vec<StandardMultitableau>> {
    let n = lambda.size();
    if n > MAX_TABLEAU_SIZE {
        return Err(Error::Resource(format!("{n} boxes exceed the tableau guard {MAX_TABLEAU_SIZE}")));
    }
    let mut grid: Vec<Vec<Vec<usize>>> =
        lambda.0.iter().map(|p| p.0.iter().map(|&len| vec![0; len]).collect()).collect();
    let mut shape: Vec<Vec<usize>> = lambda.0.iter().map(|p| p.0.clone()).collect();
    let mut out = Vec::new();
    place_largest(n, &mut shape, &mut grid, &mut out);
    out.sort();
    Ok(out)
}

fn place_largest(k: usize, shape: &mut [Vec<usize>], grid: &mut [Vec<Vec<usize>>], out: &mut Vec<StandardMultitableau>) {
    if k == 0 {
        out.push(StandardMultitableau(grid.to_vec()));
        return;
    }
    for c in 0..shape.len() {
        for row in 0..shape[c].len() {
            let len = shape[c][row];
            let corner = len > 0 && shape[c].get(row + 1).is_none_or(|&below| below < len);
            if !corner {
                continue;
            }
            grid[c][row][len - 1] = k;
            shape[c][row] -= 1;
            place_largest(k - 1, shape, grid, out);
            shape[c][row] += 1;
        }
    }
}
