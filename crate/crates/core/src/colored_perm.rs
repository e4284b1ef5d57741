//! Colored permutations: elements of G(r,n), G(r,p,n) and the quotients G(r,p,q,n).
//!
//! An element g = [σ_1^{z_1},…,σ_n^{z_n}] is stored with 0-based images and
//! colors in Z_r. It acts on [n]×Z_r by j^c ↦ σ_j^{z_j+c}, and products
//! compose as maps: (gh)(j) = g(h(j)). The matching monomial matrix has the
//! entry ζ_r^{z_j} in row σ_j, column j, so products of elements are products
//! of matrices. Transposition does not change any of the symmetry predicates.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// An element of G(r,n) in window notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredPermutation {
    r: usize,
    perm: Vec<usize>,
    colors: Vec<usize>,
}

/// One cycle (a_1^{z_{a_1}},…,a_k^{z_{a_k}}) of a colored permutation, 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    pub entries: Vec<(usize, usize)>,
}

/// Result of comparing a monomial matrix with its transpose.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SymmetryKind {
    Symmetric,
    Antisymmetric,
    Neither,
}

impl Cycle {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// z(c), the sum of the colors, reduced mod r.
    pub fn color(&self, r: usize) -> usize {
        self.entries.iter().map(|&(_, z)| z).sum::<usize>() % r
    }

    /// Supp(c), 1-based.
    pub fn support(&self) -> Vec<usize> {
        self.entries.iter().map(|&(a, _)| a).collect()
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, (a, z)) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}^{z}")?;
        }
        write!(f, ")")
    }
}

impl ColoredPermutation {
    /// Builds from 0-based images and colors, validating bijectivity and reducing colors.
    pub fn from_parts(r: usize, perm: Vec<usize>, colors: Vec<usize>) -> Result<Self> {
        if r == 0 {
            return Err(Error::Domain("r must be positive".into()));
        }
        let n = perm.len();
        if colors.len() != n {
            return Err(Error::Dimension(format!("{} images but {} colors", n, colors.len())));
        }
        let mut seen = vec![false; n];
        for &s in &perm {
            if s >= n || seen[s] {
                return Err(Error::Domain(format!("window {:?} is not a permutation", perm)));
            }
            seen[s] = true;
        }
        let colors = colors.into_iter().map(|z| z % r).collect();
        Ok(ColoredPermutation { r, perm, colors })
    }

    /// Builds from the 1-based window [(σ_1,z_1),…].
    pub fn from_window(r: usize, window: &[(usize, usize)]) -> Result<Self> {
        let mut perm = Vec::with_capacity(window.len());
        for &(s, _) in window {
            if s == 0 {
                return Err(Error::Domain("window entries are 1-based".into()));
            }
            perm.push(s - 1);
        }
        Self::from_parts(r, perm, window.iter().map(|&(_, z)| z).collect())
    }

    pub fn identity(r: usize, n: usize) -> Self {
        ColoredPermutation { r, perm: (0..n).collect(), colors: vec![0; n] }
    }

    /// The scalar matrix ζ_r^c·Id.
    pub fn scalar(r: usize, n: usize, c: usize) -> Self {
        ColoredPermutation { r, perm: (0..n).collect(), colors: vec![c % r; n] }
    }

    /// A plain permutation (all colors 0) from 0-based images.
    pub fn plain(r: usize, perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        Self::from_parts(r, perm, vec![0; n])
    }

    /// Builds the element whose cycles are listed; unlisted points are fixed with color 0.
    pub fn from_cycles(r: usize, n: usize, cycles: &[Cycle]) -> Result<Self> {
        let mut perm: Vec<usize> = (0..n).collect();
        let mut colors = vec![0; n];
        let mut seen = vec![false; n];
        for c in cycles {
            let k = c.entries.len();
            for (idx, &(a, z)) in c.entries.iter().enumerate() {
                if a == 0 || a > n || seen[a - 1] {
                    return Err(Error::Domain(format!("invalid cycle {c}")));
                }
                seen[a - 1] = true;
                perm[a - 1] = c.entries[(idx + 1) % k].0 - 1;
                colors[a - 1] = z;
            }
        }
        Self::from_parts(r, perm, colors)
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    /// 0-based images σ_j − 1.
    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// Colors z_j, indexed 0-based.
    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// The 1-based window [(σ_1,z_1),…].
    pub fn window(&self) -> Vec<(usize, usize)> {
        self.perm.iter().zip(&self.colors).map(|(&s, &z)| (s + 1, z)).collect()
    }

    /// z(g) = Σ z_j mod r.
    pub fn total_color(&self) -> usize {
        self.colors.iter().sum::<usize>() % self.r
    }

    /// |g|, the underlying plain permutation.
    pub fn abs(&self) -> Self {
        ColoredPermutation { r: self.r, perm: self.perm.clone(), colors: vec![0; self.n()] }
    }

    /// ḡ, obtained by negating every color.
    pub fn conj(&self) -> Self {
        let r = self.r;
        let colors = self.colors.iter().map(|&z| (r - z) % r).collect();
        ColoredPermutation { r, perm: self.perm.clone(), colors }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.r != other.r || self.n() != other.n() {
            return Err(Error::Dimension(format!(
                "G({},{}) vs G({},{})",
                self.r,
                self.n(),
                other.r,
                other.n()
            )));
        }
        Ok(())
    }

    /// The product g·h.
    pub fn multiply(&self, h: &Self) -> Result<Self> {
        self.check_compatible(h)?;
        Ok(self.mul_unchecked(h))
    }

    pub(crate) fn mul_unchecked(&self, h: &Self) -> Self {
        let r = self.r;
        let perm = h.perm.iter().map(|&j| self.perm[j]).collect();
        let colors = h.perm.iter().zip(&h.colors).map(|(&j, &z)| (z + self.colors[j]) % r).collect();
        ColoredPermutation { r, perm, colors }
    }

    pub fn inverse(&self) -> Self {
        let n = self.n();
        let r = self.r;
        let mut perm = vec![0; n];
        let mut colors = vec![0; n];
        for (j, (&s, &z)) in self.perm.iter().zip(&self.colors).enumerate() {
            perm[s] = j;
            colors[s] = (r - z) % r;
        }
        ColoredPermutation { r, perm, colors }
    }

    /// Multiplication by the scalar ζ_r^c·Id.
    pub fn shift_colors(&self, c: usize) -> Self {
        let r = self.r;
        let colors = self.colors.iter().map(|&z| (z + c) % r).collect();
        ColoredPermutation { r, perm: self.perm.clone(), colors }
    }

    /// Returns c when g = ζ_r^c·Id.
    pub fn scalar_value(&self) -> Option<usize> {
        let c = *self.colors.first().unwrap_or(&0);
        let ok = self.perm.iter().enumerate().all(|(j, &s)| s == j) && self.colors.iter().all(|&z| z == c);
        ok.then_some(c)
    }

    pub fn is_identity(&self) -> bool {
        self.scalar_value() == Some(0)
    }

    /// Cycles, each starting at its minimum, sorted by minimum.
    pub fn cycles(&self) -> Vec<Cycle> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut entries = Vec::new();
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                entries.push((j + 1, self.colors[j]));
                j = self.perm[j];
            }
            out.push(Cycle { entries });
        }
        out
    }

    /// Monomial matrix as exponents: entry (row, col) is Some(z) for ζ_r^z.
    pub fn monomial_matrix(&self) -> Vec<Vec<Option<usize>>> {
        let n = self.n();
        let mut m = vec![vec![None; n]; n];
        for (j, (&s, &z)) in self.perm.iter().zip(&self.colors).enumerate() {
            m[s][j] = Some(z);
        }
        m
    }

    /// g·ḡ = 1.
    pub fn is_absolute_involution(&self) -> bool {
        self.mul_unchecked(&self.conj()).is_identity()
    }

    /// Compares the monomial matrix with its transpose.
    pub fn symmetry_kind(&self) -> SymmetryKind {
        let involutive = self.perm.iter().enumerate().all(|(j, &s)| self.perm[s] == j);
        if !involutive {
            return SymmetryKind::Neither;
        }
        let pairs = || self.perm.iter().enumerate().map(|(j, &s)| (self.colors[j], self.colors[s], j == s));
        if pairs().all(|(a, b, _)| a == b) {
            return SymmetryKind::Symmetric;
        }
        if self.r.is_multiple_of(2) {
            let h = self.r / 2;
            if pairs().all(|(a, b, fixed)| !fixed && b == (a + h) % self.r) {
                return SymmetryKind::Antisymmetric;
            }
        }
        SymmetryKind::Neither
    }

    /// True when every cycle has even length and even color.
    pub fn has_even_cycles(&self) -> bool {
        self.r.is_multiple_of(2) && self.cycles().iter().all(|c| c.len() % 2 == 0 && c.color(self.r) % 2 == 0)
    }

    /// sign(g) ∈ Z_2: per cycle (i_1,…,i_{2d}), the sum z_{i_1}+z_{i_3}+⋯.
    pub fn signature(&self) -> Result<u8> {
        if !self.has_even_cycles() {
            return Err(Error::Domain("signature needs r even and all cycles of even length and color".into()));
        }
        let s: usize = self
            .cycles()
            .iter()
            .flat_map(|c| c.entries.iter().step_by(2).map(|&(_, z)| z))
            .sum();
        Ok((s % 2) as u8)
    }

    /// Parses `[3^0,4^1,6^1,2^0,5^2,1^2]`; every exponent must be explicit.
    pub fn parse_window(r: usize, s: &str) -> Result<Self> {
        let body = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("window must be bracketed: {s}")))?;
        let mut window = Vec::new();
        if !body.trim().is_empty() {
            for item in body.split(',') {
                let (a, z) = item
                    .trim()
                    .split_once('^')
                    .ok_or_else(|| Error::Parse(format!("missing exponent in {item:?}")))?;
                window.push((parse_num(a)?, parse_num(z)?));
            }
        }
        if let Some(&(_, z)) = window.iter().find(|&&(_, z)| z >= r) {
            return Err(Error::Parse(format!("color {z} out of range for r = {r}")));
        }
        Self::from_window(r, &window).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Parses cycle notation such as `(1^0,3^1,6^2)(2^1,4)`; a missing exponent means 0.
    pub fn parse_cycles(r: usize, n: usize, s: &str) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let inner = rest.strip_prefix('(').ok_or_else(|| Error::Parse(format!("expected '(' in {s}")))?;
            let end = inner.find(')').ok_or_else(|| Error::Parse(format!("unclosed cycle in {s}")))?;
            let mut entries = Vec::new();
            for item in inner[..end].split(',') {
                let (a, z) = match item.trim().split_once('^') {
                    Some((a, z)) => (parse_num(a)?, parse_num(z)?),
                    None => (parse_num(item)?, 0),
                };
                entries.push((a, z % r));
            }
            cycles.push(Cycle { entries });
            rest = inner[end + 1..].trim_start();
        }
        Self::from_cycles(r, n, &cycles).map_err(|e| Error::Parse(e.to_string()))
    }

    /// The cycle notation, e.g. `(1^0,3^1,6^2)(2^1,4^0)(5^2)`.
    pub fn cycle_string(&self) -> String {
        self.cycles().iter().map(|c| c.to_string()).collect()
    }
}

fn parse_num(s: &str) -> Result<usize> {
    s.trim().parse().map_err(|_| Error::Parse(format!("not a number: {s:?}")))
}

impl fmt::Display for ColoredPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, (s, z)) in self.window().into_iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}^{z}")?;
        }
        write!(f, "]")
    }
}

/// σvσ⁻¹ for a plain permutation σ.
pub fn absolute_conjugate(sigma: &ColoredPermutation, v: &ColoredPermutation) -> Result<ColoredPermutation> {
    sigma.check_compatible(v)?;
    if sigma.colors.iter().any(|&z| z != 0) {
        return Err(Error::Domain("absolute conjugation needs a plain permutation".into()));
    }
    Ok(plain_conjugate(&sigma.perm, v))
}

/// σvσ⁻¹ where σ is given by its 0-based images.
pub(crate) fn plain_conjugate(sigma: &[usize], v: &ColoredPermutation) -> ColoredPermutation {
    let n = sigma.len();
    let mut perm = vec![0; n];
    let mut colors = vec![0; n];
    for j in 0..n {
        perm[sigma[j]] = sigma[v.perm[j]];
        colors[sigma[j]] = v.colors[j];
    }
    ColoredPermutation { r: v.r, perm, colors }
}

/// An element of G(r,p,q,n): a lift in G(r,p,n) modulo the scalars C_q.
///
/// The stored lift is the member of its scalar orbit with the
/// lexicographically least color word, so derived equality is orbit equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectiveElement {
    rep: ColoredPermutation,
    q: usize,
}

impl ProjectiveElement {
    pub fn new(g: ColoredPermutation, q: usize) -> Result<Self> {
        if q == 0 || !g.r.is_multiple_of(q) {
            return Err(Error::Domain(format!("q = {q} must divide r = {}", g.r)));
        }
        let step = g.r / q;
        let rep = (0..q).map(|k| g.shift_colors(k * step)).min().expect("q > 0");
        Ok(ProjectiveElement { rep, q })
    }

    /// The canonical lift.
    pub fn rep(&self) -> &ColoredPermutation {
        &self.rep
    }

    /// Order of the scalar group C_q.
    pub fn q(&self) -> usize {
        self.q
    }

    /// All q lifts, canonical first.
    pub fn lifts(&self) -> Vec<ColoredPermutation> {
        let step = self.rep.r / self.q;
        (0..self.q).map(|k| self.rep.shift_colors(k * step)).collect()
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.q != other.q {
            return Err(Error::Dimension(format!("C_{} vs C_{}", self.q, other.q)));
        }
        Self::new(self.rep.multiply(&other.rep)?, self.q)
    }

    /// v·v̄ lies in C_q.
    pub fn is_absolute_involution(&self) -> bool {
        let step = self.rep.r / self.q;
        match self.rep.mul_unchecked(&self.rep.conj()).scalar_value() {
            Some(c) => c % step == 0,
            None => false,
        }
    }

    pub fn symmetry_kind(&self) -> SymmetryKind {
        self.rep.symmetry_kind()
    }
}

impl fmt::Display for ProjectiveElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.rep.fmt(f)
    }
}

/// GCD helper used across modules.
pub(crate) fn gcd(a: usize, b: usize) -> usize {
    a.gcd(&b)
}
