//! Conjugacy classes of G(r,p,n), normal elements, and the S_n-conjugacy
//! classes of absolute involutions of the dual group with their type labels.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use crate::colored_perm::{gcd, ColoredPermutation, ProjectiveElement, SymmetryKind};
use crate::error::{Error, Result};
use crate::group::{permutations, wreath_order, GroupParams};
use crate::shapes::{enumerate_shapes, Multipartition, Partition, ShapeOrbit};

/// A conjugacy class of G(r,p,n): the cycle-type multipartition α and, for
/// split classes, the signature ε of its members.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConjClassLabel {
    pub alpha: Multipartition,
    pub split: Option<u8>,
}

impl ConjClassLabel {
    /// The G(r,n) class containing this one.
    pub fn parent(&self) -> ConjClassLabel {
        ConjClassLabel { alpha: self.alpha.clone(), split: None }
    }
}

impl fmt::Display for ConjClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.alpha)?;
        if let Some(e) = self.split {
            write!(f, "[{e}]")?;
        }
        Ok(())
    }
}

impl Serialize for ConjClassLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// α of the form (2β^{(0)},∅,2β^{(2)},∅,…): even parts in even components only.
pub fn is_split_form(alpha: &Multipartition) -> bool {
    alpha.r().is_multiple_of(2)
        && alpha.components().iter().enumerate().all(|(i, p)| {
            if i % 2 == 1 {
                p.is_empty()
            } else {
                p.parts().iter().all(|&x| x % 2 == 0)
            }
        })
}

/// Cycle-type multipartition of g: α^{(i)} lists the lengths of the cycles of color i.
pub fn cycle_type(g: &ColoredPermutation) -> Multipartition {
    let r = g.r();
    let mut comps = vec![Vec::new(); r];
    for c in g.cycles() {
        comps[c.color(r)].push(c.len());
    }
    Multipartition::new(comps.into_iter().map(Partition::new).collect())
}

/// The G(r,p,n)-class of g.
pub fn class_of(g: &ColoredPermutation, p: usize) -> Result<ConjClassLabel> {
    if p == 0 || !g.r().is_multiple_of(p) {
        return Err(Error::Domain(format!("p = {p} must divide r = {}", g.r())));
    }
    if !g.total_color().is_multiple_of(p) {
        return Err(Error::Domain(format!("{g} has color {} not divisible by {p}", g.total_color())));
    }
    let split = if gcd(p, g.n()) == 2 && g.has_even_cycles() { Some(g.signature()?) } else { None };
    Ok(ConjClassLabel { alpha: cycle_type(g), split })
}

/// |cl| in G(r,p,n): r^n·n! over the wreath centralizer order, halved for split classes.
pub fn class_size(label: &ConjClassLabel) -> u128 {
    let alpha = &label.alpha;
    let r = alpha.r() as u128;
    let mut centralizer: u128 = 1;
    for comp in alpha.components() {
        let mut parts = comp.parts().to_vec();
        parts.dedup();
        for j in parts {
            let m = comp.multiplicity(j) as u32;
            centralizer *= crate::shapes::factorial(m as usize) * (j as u128 * r).pow(m);
        }
    }
    let size = wreath_order(alpha.r(), alpha.size()) / centralizer;
    if label.split.is_some() {
        size / 2
    } else {
        size
    }
}

/// The normal representative: consecutive increasing supports, cycles ordered
/// by color and then by the order of parts, the color of a cycle carried by its
/// largest element. For ε = 1 the last cycle, of color 2j, instead puts 2j−1 on n
/// and 1 on n−1.
pub fn normal_element(label: &ConjClassLabel) -> ColoredPermutation {
    let r = label.alpha.r();
    let n = label.alpha.size();
    let mut perm = vec![0; n];
    let mut colors = vec![0; n];
    let mut next = 0;
    let mut last_color = 0;
    for (i, comp) in label.alpha.components().iter().enumerate() {
        for &len in comp.parts() {
            for k in 0..len {
                perm[next + k] = if k + 1 == len { next } else { next + k + 1 };
            }
            colors[next + len - 1] = i;
            next += len;
            last_color = i;
        }
    }
    if label.split == Some(1) && n >= 2 {
        colors[n - 1] = (last_color + r - 1) % r;
        colors[n - 2] = 1 % r;
    }
    ColoredPermutation::from_parts(r, perm, colors).expect("valid normal element")
}

/// The conjugacy classes of G(r,p,n) with sizes and normal elements.
#[derive(Clone, Debug)]
pub struct ClassSet {
    r: usize,
    p: usize,
    n: usize,
    labels: Vec<ConjClassLabel>,
    sizes: Vec<u128>,
    normals: Vec<ColoredPermutation>,
    index: HashMap<ConjClassLabel, usize>,
}

impl ClassSet {
    /// Enumerates the classes of G(r,p,n); split classes appear as ε = 0 then ε = 1.
    pub fn new(r: usize, p: usize, n: usize) -> Result<Self> {
        let params = GroupParams::new(r, p, 1, n)?;
        params.require_involutory()?;
        let splitting = params.has_splitting();
        let mut labels = Vec::new();
        for alpha in enumerate_shapes(r, n, 1) {
            let color: usize = alpha.components().iter().enumerate().map(|(i, c)| i * c.len()).sum();
            if !color.is_multiple_of(p) {
                continue;
            }
            if splitting && is_split_form(&alpha) {
                labels.push(ConjClassLabel { alpha: alpha.clone(), split: Some(0) });
                labels.push(ConjClassLabel { alpha, split: Some(1) });
            } else {
                labels.push(ConjClassLabel { alpha, split: None });
            }
        }
        let sizes = labels.iter().map(class_size).collect();
        let normals = labels.iter().map(normal_element).collect();
        let index = labels.iter().cloned().enumerate().map(|(k, l)| (l, k)).collect();
        Ok(ClassSet { r, p, n, labels, sizes, normals, index })
    }

    pub fn params(&self) -> GroupParams {
        GroupParams { r: self.r, p: self.p, q: 1, n: self.n }
    }

    pub fn labels(&self) -> &[ConjClassLabel] {
        &self.labels
    }

    pub fn sizes(&self) -> &[u128] {
        &self.sizes
    }

    pub fn normal_elements(&self) -> &[ColoredPermutation] {
        &self.normals
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn index_of(&self, label: &ConjClassLabel) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Index of the class containing g.
    pub fn locate(&self, g: &ColoredPermutation) -> Result<usize> {
        let label = class_of(g, self.p)?;
        self.index_of(&label).ok_or_else(|| Error::Inconsistency(format!("no class {label}")))
    }

    /// |G(r,p,n)|.
    pub fn group_order(&self) -> u128 {
        wreath_order(self.r, self.n) / self.p as u128
    }

    /// Number of conjugacy classes of G(r,p,q,n): orbits of the classes of
    /// G(r,p,n) under multiplication by the scalars of C_q.
    pub fn quotient_class_count(&self, q: usize) -> Result<usize> {
        GroupParams::new(self.r, self.p, q, self.n)?;
        let step = self.r / q;
        let mut seen = vec![false; self.len()];
        let mut count = 0;
        for k in 0..self.len() {
            if seen[k] {
                continue;
            }
            count += 1;
            let mut g = self.normals[k].clone();
            for _ in 0..q {
                seen[self.locate(&g)?] = true;
                g = g.shift_colors(step);
            }
        }
        Ok(count)
    }
}

/// S_n-conjugacy class type of an absolute involution of the dual group,
/// stored as the lexicographically least shift.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InvolutionClassType {
    /// f_i fixed points and q_i two-cycles of color i.
    Symmetric { f: Vec<usize>, q: Vec<usize> },
    /// t_i two-cycles whose colors are ≡ i mod r/2.
    Antisymmetric { t: Vec<usize> },
}

fn least_rotation(vectors: &[&[usize]], step: usize, modulus: usize) -> Vec<Vec<usize>> {
    (0..modulus.max(1))
        .map(|k| {
            let s = (k * step) % modulus;
            vectors.iter().map(|v| (0..modulus).map(|i| v[(i + modulus - s) % modulus]).collect()).collect()
        })
        .min()
        .expect("nonempty")
}

impl InvolutionClassType {
    /// Canonical symmetric type; the orbit is taken under shifts by `step` = r/p.
    pub fn symmetric(f: Vec<usize>, q: Vec<usize>, step: usize) -> Self {
        assert_eq!(f.len(), q.len());
        let mut v = least_rotation(&[&f, &q], step, f.len()).into_iter();
        InvolutionClassType::Symmetric { f: v.next().unwrap(), q: v.next().unwrap() }
    }

    /// Canonical antisymmetric type over Z_{r/2}; shifts by `step` reduced mod r/2.
    pub fn antisymmetric(t: Vec<usize>, step: usize) -> Self {
        let m = t.len();
        let mut v = least_rotation(&[&t], step % m.max(1), m).into_iter();
        InvolutionClassType::Antisymmetric { t: v.next().unwrap() }
    }

    /// ι(c): 0 for symmetric classes, 1 for antisymmetric ones.
    pub fn iota(&self) -> usize {
        match self {
            InvolutionClassType::Symmetric { .. } => 0,
            InvolutionClassType::Antisymmetric { .. } => 1,
        }
    }

    /// Parses `sym[f..;q..]` or `asym[t..]` for the dual of `params`.
    pub fn parse(s: &str, params: GroupParams) -> Result<Self> {
        let s = s.trim();
        let nums = |body: &str| -> Result<Vec<usize>> {
            body.split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad count {t:?}"))))
                .collect()
        };
        let step = params.r / params.p;
        let r = params.r;
        if let Some(body) = s.strip_prefix("sym[").and_then(|t| t.strip_suffix(']')) {
            let (f, q) = body.split_once(';').ok_or_else(|| Error::Parse("sym type needs ';'".into()))?;
            let (f, q) = (nums(f)?, nums(q)?);
            if f.len() != r || q.len() != r {
                return Err(Error::Parse(format!("sym type needs {r} entries per vector")));
            }
            if f.iter().sum::<usize>() + 2 * q.iter().sum::<usize>() != params.n {
                return Err(Error::Parse(format!("type does not have n = {} points", params.n)));
            }
            Ok(Self::symmetric(f, q, step))
        } else if let Some(body) = s.strip_prefix("asym[").and_then(|t| t.strip_suffix(']')) {
            let t = nums(body)?;
            if !r.is_multiple_of(2) || t.len() != r / 2 {
                return Err(Error::Parse(format!("asym type needs r/2 entries with r even (r = {r})")));
            }
            if 2 * t.iter().sum::<usize>() != params.n {
                return Err(Error::Parse(format!("type does not have n = {} points", params.n)));
            }
            Ok(Self::antisymmetric(t, step))
        } else {
            Err(Error::Parse(format!("unknown involution type {s:?}")))
        }
    }
}

impl fmt::Display for InvolutionClassType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        match self {
            InvolutionClassType::Symmetric { f: fv, q } => write!(f, "sym[{};{}]", join(fv), join(q)),
            InvolutionClassType::Antisymmetric { t } => write!(f, "asym[{}]", join(t)),
        }
    }
}

impl Serialize for InvolutionClassType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// The type of an absolute involution; its scalar group C_k gives the shift step r/k.
pub fn involution_type(v: &ProjectiveElement) -> Result<InvolutionClassType> {
    let g = v.rep();
    let r = g.r();
    let step = r / v.q();
    match g.symmetry_kind() {
        SymmetryKind::Symmetric => {
            let mut f = vec![0; r];
            let mut q = vec![0; r];
            for (j, (&s, &z)) in g.perm().iter().zip(g.colors()).enumerate() {
                if s == j {
                    f[z] += 1;
                } else if j < s {
                    q[z] += 1;
                }
            }
            Ok(InvolutionClassType::symmetric(f, q, step))
        }
        SymmetryKind::Antisymmetric if v.is_absolute_involution() => {
            let h = r / 2;
            let mut t = vec![0; h];
            for (j, (&s, &z)) in g.perm().iter().zip(g.colors()).enumerate() {
                if j < s {
                    t[z % h] += 1;
                }
            }
            Ok(InvolutionClassType::antisymmetric(t, step))
        }
        _ => Err(Error::Domain(format!("{v} is not a symmetric or antisymmetric absolute involution"))),
    }
}

/// Sh(c): the irreducible indices predicted for the block of type c in the model of `params`.
pub fn predicted_shapes(c: &InvolutionClassType, params: GroupParams) -> Result<Vec<ShapeOrbit>> {
    params.require_involutory()?;
    let per_component: Vec<Vec<Partition>> = match c {
        InvolutionClassType::Symmetric { f, q } => f
            .iter()
            .zip(q)
            .map(|(&fi, &qi)| Partition::all(fi + 2 * qi).into_iter().filter(|p| p.odd_columns() == fi).collect())
            .collect(),
        InvolutionClassType::Antisymmetric { t } => t.iter().map(|&ti| Partition::all(ti)).collect(),
    };
    let mut shapes: Vec<Vec<Partition>> = vec![Vec::new()];
    for options in &per_component {
        shapes = shapes
            .into_iter()
            .flat_map(|pre| {
                options.iter().map(move |p| {
                    let mut v = pre.clone();
                    v.push(p.clone());
                    v
                })
            })
            .collect();
    }
    let mut out: BTreeSet<(Multipartition, ShapeOrbit)> = BTreeSet::new();
    for comps in shapes {
        let mut lambda = Multipartition::new(comps);
        if c.iota() == 1 {
            lambda = lambda.doubled();
        }
        let orbit = ShapeOrbit::of(&lambda, params.p);
        out.insert((orbit.canonical().clone(), orbit));
    }
    Ok(out.into_iter().map(|(_, o)| o).collect())
}

/// All absolute involutions of the dual group G(r,q,p,n), as elements modulo C_p, sorted.
pub fn dual_involutions(params: GroupParams, max: u128) -> Result<Vec<ProjectiveElement>> {
    params.guard(max)?;
    let GroupParams { r, p, q, n } = params;
    let mut out = BTreeSet::new();
    let antisym = r % 2 == 0 && p % 2 == 0;
    for perm in permutations(n).into_iter().filter(|s| s.iter().enumerate().all(|(j, &x)| s[x] == j)) {
        let leaders: Vec<usize> = (0..n).filter(|&j| j <= perm[j]).collect();
        let fixed_free = leaders.iter().all(|&j| perm[j] != j);
        let mut push = |colors: Vec<usize>| -> Result<()> {
            if colors.iter().sum::<usize>() % q == 0 {
                let v = ColoredPermutation::from_parts(r, perm.clone(), colors)?;
                out.insert(ProjectiveElement::new(v, p)?);
            }
            Ok(())
        };
        for choice in crate::group::colorings(r, leaders.len()) {
            let mut colors = vec![0; n];
            for (&j, &z) in leaders.iter().zip(&choice) {
                colors[j] = z;
                colors[perm[j]] = z;
            }
            push(colors)?;
            if antisym && fixed_free {
                let mut colors = vec![0; n];
                for (&j, &z) in leaders.iter().zip(&choice) {
                    colors[j] = z;
                    colors[perm[j]] = (z + r / 2) % r;
                }
                push(colors)?;
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// The absolute involutions of the dual group grouped by type, types sorted.
pub fn enumerate_involution_classes(
    params: GroupParams,
    max: u128,
) -> Result<Vec<(InvolutionClassType, Vec<ProjectiveElement>)>> {
    let mut map: BTreeMap<InvolutionClassType, Vec<ProjectiveElement>> = BTreeMap::new();
    for v in dual_involutions(params, max)? {
        map.entry(involution_type(&v)?).or_default().push(v);
    }
    Ok(map.into_iter().collect())
}
