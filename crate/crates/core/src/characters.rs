//! Irreducible characters of S_m, G(r,n) and G(r,p,q,n).
//!
//! Symmetric-group values come from the Murnaghan–Nakayama rule. A character
//! of G(r,n) is induced from the Young subgroup G(r,ν): at g it sums, over the
//! ways of distributing the cycles of g among the components, the product of
//! ζ_r^{i·z(g_i)}·χ_{λ^{(i)}}(|g_i|). Split characters of G(r,p,n) are
//! χ^{0,1} = (Res χ_{(μ,μ)} ± Δ¹_μ)/2 with Δ¹ given in closed form.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::classes::{ClassSet, ConjClassLabel};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::GroupParams;
use crate::shapes::{enumerate_shapes, orbits, Multipartition, Partition, ShapeOrbit};

type MnKey = (Vec<usize>, Vec<usize>);

fn mn_cache() -> &'static RwLock<HashMap<MnKey, i64>> {
    static CACHE: OnceLock<RwLock<HashMap<MnKey, i64>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// χ_λ(α) for the symmetric group S_m.
pub fn sym_character(lambda: &Partition, alpha: &Partition) -> Result<i64> {
    if lambda.size() != alpha.size() {
        return Err(Error::Domain(format!("|{lambda}| != |{alpha}|")));
    }
    Ok(mn(lambda.parts(), alpha.parts()))
}

fn mn(lambda: &[usize], alpha: &[usize]) -> i64 {
    let Some((&k, rest)) = alpha.split_first() else {
        return i64::from(lambda.is_empty());
    };
    let key = (lambda.to_vec(), alpha.to_vec());
    if let Some(&v) = mn_cache().read().unwrap().get(&key) {
        return v;
    }
    let len = lambda.len();
    let beta: Vec<usize> = lambda.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > b - k && x < b).count();
        let mut nb = beta.clone();
        nb[idx] = b - k;
        nb.sort_unstable_by(|x, y| y.cmp(x));
        let smaller: Vec<usize> =
            nb.iter().enumerate().map(|(i, &x)| x - (len - 1 - i)).filter(|&p| p > 0).collect();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn(&smaller, rest);
    }
    mn_cache().write().unwrap().insert(key, total);
    total
}

/// Cycles of a class of G(r,n) as (length, color) pairs.
fn cycles_of(alpha: &Multipartition) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, comp) in alpha.components().iter().enumerate() {
        out.extend(comp.parts().iter().map(|&len| (len, i)));
    }
    out
}

/// χ_λ on the G(r,n)-class α, as integer multiplicities of ζ_r^0,…,ζ_r^{r−1}.
pub fn wreath_character_counts(lambda: &Multipartition, alpha: &Multipartition) -> Result<Vec<i64>> {
    let r = lambda.r();
    if alpha.r() != r || alpha.size() != lambda.size() {
        return Err(Error::Dimension(format!("shape {lambda} vs class {alpha}")));
    }
    let cycles = cycles_of(alpha);
    let mut counts = vec![0i64; r];
    let mut remaining = lambda.sizes();
    let mut assigned: Vec<Vec<usize>> = vec![Vec::new(); r];
    distribute(lambda, &cycles, 0, 0, &mut remaining, &mut assigned, &mut counts);
    Ok(counts)
}

fn distribute(
    lambda: &Multipartition,
    cycles: &[(usize, usize)],
    k: usize,
    exp: usize,
    remaining: &mut [usize],
    assigned: &mut [Vec<usize>],
    counts: &mut [i64],
) {
    let r = remaining.len();
    if k == cycles.len() {
        let mut value = 1i64;
        for (comp, lens) in lambda.components().iter().zip(assigned.iter()) {
            let mut lens = lens.clone();
            lens.sort_unstable_by(|a, b| b.cmp(a));
            value *= mn(comp.parts(), &lens);
            if value == 0 {
                return;
            }
        }
        counts[exp % r] += value;
        return;
    }
    let (len, color) = cycles[k];
    for c in 0..r {
        if remaining[c] < len {
            continue;
        }
        remaining[c] -= len;
        assigned[c].push(len);
        distribute(lambda, cycles, k + 1, exp + c * color, remaining, assigned, counts);
        assigned[c].pop();
        remaining[c] += len;
    }
}

/// χ_λ(α) for G(r,n), exact.
pub fn wreath_character(lambda: &Multipartition, alpha: &Multipartition) -> Result<Cyclotomic> {
    Ok(Cyclotomic::from_root_counts(lambda.r(), &wreath_character_counts(lambda, alpha)?))
}

/// Δ¹_μ on a class of G(r,p,n), for μ ∈ Fer(r/2, n/2): zero on unsplit classes and
/// (−1)^ε·2^{ℓ(α)}·χ_μ(α^{(0)},α^{(2)},…,α^{(r−2)}) on cl^ε_{2α}.
pub fn delta1(mu: &Multipartition, label: &ConjClassLabel) -> Result<Cyclotomic> {
    let r = label.alpha.r();
    if r != 2 * mu.r() || label.alpha.size() != 2 * mu.size() {
        return Err(Error::Dimension(format!("Δ¹ of {mu} on class {label}")));
    }
    let Some(eps) = label.split else {
        return Ok(Cyclotomic::zero(mu.r()));
    };
    let halves: Vec<Partition> = label
        .alpha
        .components()
        .iter()
        .step_by(2)
        .map(|c| Partition::new(c.parts().iter().map(|&x| x / 2).collect()))
        .collect();
    let beta = Multipartition::new(halves);
    let scale = (1i64 << beta.length()) * if eps == 0 { 1 } else { -1 };
    let counts: Vec<i64> = wreath_character_counts(mu, &beta)?.into_iter().map(|c| c * scale).collect();
    Ok(Cyclotomic::from_root_counts(mu.r(), &counts))
}

/// An exact function on the conjugacy classes of G(r,p,n).
#[derive(Clone, Debug)]
pub struct ClassFunction {
    classes: Arc<ClassSet>,
    values: Vec<Cyclotomic>,
}

impl ClassFunction {
    pub fn new(classes: Arc<ClassSet>, values: Vec<Cyclotomic>) -> Result<Self> {
        if values.len() != classes.len() {
            return Err(Error::Dimension(format!("{} values for {} classes", values.len(), classes.len())));
        }
        Ok(ClassFunction { classes, values })
    }

    pub fn classes(&self) -> &Arc<ClassSet> {
        &self.classes
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value(&self, label: &ConjClassLabel) -> Option<&Cyclotomic> {
        self.classes.index_of(label).map(|k| &self.values[k])
    }

    /// Value at the identity.
    pub fn degree(&self) -> Cyclotomic {
        let n = self.classes.params().n;
        let r = self.classes.params().r;
        let mut comps = vec![Partition::empty(); r];
        comps[0] = Partition::new(vec![1; n]);
        let id = ConjClassLabel { alpha: Multipartition::new(comps), split: None };
        self.value(&id).cloned().expect("identity class")
    }

    fn check_domain(&self, other: &Self) -> Result<()> {
        if self.classes.params() != other.classes.params() {
            return Err(Error::Domain(format!(
                "class functions on {} and {}",
                self.classes.params(),
                other.classes.params()
            )));
        }
        Ok(())
    }

    /// (1/|G|)·Σ |cl|·f(cl)·conj(g(cl)).
    pub fn inner_product(&self, other: &Self) -> Result<Cyclotomic> {
        self.check_domain(other)?;
        let mut acc = Cyclotomic::zero(1);
        for ((a, b), &size) in self.values.iter().zip(&other.values).zip(self.classes.sizes()) {
            let term = a * &b.conjugate();
            acc = acc + term.scale(&BigRational::from_integer(BigInt::from(size)));
        }
        let order = BigRational::from_integer(BigInt::from(self.classes.group_order()));
        Ok(acc.scale(&order.recip()))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_domain(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect();
        Ok(ClassFunction { classes: self.classes.clone(), values })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_domain(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect();
        Ok(ClassFunction { classes: self.classes.clone(), values })
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        ClassFunction { classes: self.classes.clone(), values: self.values.iter().map(|v| v.scale(q)).collect() }
    }
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        self.classes.params() == other.classes.params() && self.values == other.values
    }
}

/// ρ^j_{[λ]}: a shape orbit in Fer(r,q,p,n) and an index j < m_p(λ).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrreducibleLabel {
    pub orbit: ShapeOrbit,
    pub j: usize,
}

impl IrreducibleLabel {
    pub fn is_split(&self) -> bool {
        self.orbit.stabilizer_order() > 1
    }

    /// dim ρ^j_{[λ]} = |St_{[λ]}|.
    pub fn degree(&self) -> u128 {
        self.orbit.count_standard()
    }
}

impl fmt::Display for IrreducibleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_split() {
            write!(f, "{}^{}", self.orbit, self.j)
        } else {
            write!(f, "{}", self.orbit)
        }
    }
}

impl Serialize for IrreducibleLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// The irreducible characters of G(r,p,q,n), as class functions on G(r,p,n).
#[derive(Clone, Debug)]
pub struct CharacterTable {
    params: GroupParams,
    classes: Arc<ClassSet>,
    rows: Vec<(IrreducibleLabel, ClassFunction)>,
}

impl CharacterTable {
    pub fn params(&self) -> GroupParams {
        self.params
    }

    pub fn classes(&self) -> &Arc<ClassSet> {
        &self.classes
    }

    pub fn rows(&self) -> &[(IrreducibleLabel, ClassFunction)] {
        &self.rows
    }

    pub fn row(&self, label: &IrreducibleLabel) -> Option<&ClassFunction> {
        self.rows.iter().find(|(l, _)| l == label).map(|(_, f)| f)
    }

    pub fn labels(&self) -> Vec<IrreducibleLabel> {
        self.rows.iter().map(|(l, _)| l.clone()).collect()
    }
}

/// Builds the table of G(r,p,q,n): one row per ρ^j_{[λ]} with [λ] ∈ Fer(r,q,p,n).
pub fn character_table(params: GroupParams) -> Result<CharacterTable> {
    params.require_involutory()?;
    let GroupParams { r, p, q, n } = params;
    let classes = Arc::new(ClassSet::new(r, p, n)?);
    let shape_orbits = orbits(&enumerate_shapes(r, n, q), p);
    let blocks: Vec<Vec<(IrreducibleLabel, ClassFunction)>> = shape_orbits
        .into_par_iter()
        .map(|orbit| irreducible_rows(&classes, orbit))
        .collect::<Result<_>>()?;
    let rows = blocks.into_iter().flatten().collect();
    Ok(CharacterTable { params, classes, rows })
}

fn irreducible_rows(classes: &Arc<ClassSet>, orbit: ShapeOrbit) -> Result<Vec<(IrreducibleLabel, ClassFunction)>> {
    let lambda = orbit.canonical().clone();
    let mut parent: HashMap<Multipartition, Cyclotomic> = HashMap::new();
    let mut restricted = Vec::with_capacity(classes.len());
    for label in classes.labels() {
        if !parent.contains_key(&label.alpha) {
            parent.insert(label.alpha.clone(), wreath_character(&lambda, &label.alpha)?);
        }
        restricted.push(parent[&label.alpha].clone());
    }
    match orbit.stabilizer_order() {
        1 => Ok(vec![(IrreducibleLabel { orbit, j: 0 }, ClassFunction::new(classes.clone(), restricted)?)]),
        2 => {
            let half = lambda.r() / 2;
            let mu = Multipartition::new(lambda.components()[..half].to_vec());
            let delta: Vec<Cyclotomic> =
                classes.labels().iter().map(|l| delta1(&mu, l)).collect::<Result<_>>()?;
            let one_half = BigRational::new(1.into(), 2.into());
            let chi0 = restricted.iter().zip(&delta).map(|(a, d)| (a + d).scale(&one_half)).collect();
            let chi1 = restricted.iter().zip(&delta).map(|(a, d)| (a - d).scale(&one_half)).collect();
            Ok(vec![
                (IrreducibleLabel { orbit: orbit.clone(), j: 0 }, ClassFunction::new(classes.clone(), chi0)?),
                (IrreducibleLabel { orbit, j: 1 }, ClassFunction::new(classes.clone(), chi1)?),
            ])
        }
        m => Err(Error::Unsupported(format!("stabilizer of order {m} for {lambda}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn trivial_and_sign() {
        for m in 1..=6 {
            for alpha in Partition::all(m) {
                assert_eq!(sym_character(&part(&[m]), &alpha).unwrap(), 1);
                let sign = if (m - alpha.len()) % 2 == 0 { 1 } else { -1 };
                assert_eq!(sym_character(&Partition::new(vec![1; m]), &alpha).unwrap(), sign);
            }
        }
        assert!(sym_character(&part(&[2]), &part(&[1])).is_err());
    }

    #[test]
    fn s4_row_values() {
        // χ_{(2,2)} on classes (1^4), (2,1,1), (2,2), (3,1), (4)
        let row: Vec<i64> = [&[1, 1, 1, 1][..], &[2, 1, 1], &[2, 2], &[3, 1], &[4]]
            .iter()
            .map(|a| sym_character(&part(&[2, 2]), &part(a)).unwrap())
            .collect();
        assert_eq!(row, vec![2, 0, 2, -1, 0]);
    }

    #[test]
    fn degree_is_tableau_count() {
        for lambda in enumerate_shapes(3, 3, 1) {
            let id = Multipartition::new(vec![Partition::new(vec![1, 1, 1]), Partition::empty(), Partition::empty()]);
            let v = wreath_character(&lambda, &id).unwrap();
            assert_eq!(v, Cyclotomic::from_integer(lambda.count_standard() as i64));
        }
    }

    #[test]
    fn gamma_character() {
        let lambda = Multipartition::parse("((),(3),())").unwrap();
        for alpha in enumerate_shapes(3, 3, 1) {
            let z: usize = alpha.components().iter().enumerate().map(|(i, c)| i * c.len()).sum();
            assert_eq!(wreath_character(&lambda, &alpha).unwrap(), crate::cyclotomic::root_of_unity(3, z as i64));
        }
    }

    #[test]
    fn small_tables_are_orthonormal() {
        for (r, p, q, n) in [(2, 1, 1, 3), (3, 1, 1, 2), (1, 1, 1, 4), (2, 2, 1, 4), (3, 3, 1, 2), (2, 1, 2, 4)] {
            let params = GroupParams::new(r, p, q, n).unwrap();
            let t = character_table(params).unwrap();
            assert_eq!(t.rows().len(), t.classes().quotient_class_count(q).unwrap(), "{params}");
            for (i, (_, a)) in t.rows().iter().enumerate() {
                for (j, (_, b)) in t.rows().iter().enumerate() {
                    let expected = Cyclotomic::from_integer(i64::from(i == j));
                    assert_eq!(a.inner_product(b).unwrap(), expected, "{params} rows {i},{j}");
                }
            }
        }
    }

    #[test]
    fn delta_vanishes_off_split_classes() {
        let cs = ClassSet::new(2, 2, 4).unwrap();
        let mu = Multipartition::parse("((2))").unwrap();
        for l in cs.labels() {
            let d = delta1(&mu, l).unwrap();
            assert_eq!(d.is_zero(), l.split.is_none(), "{l}");
        }
    }
}
