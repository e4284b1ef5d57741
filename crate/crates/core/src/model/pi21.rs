//! Partitions of the cycles of g into singletons and equal-length pairs, and
//! the antisymmetric elements commuting or anticommuting with |g|.

use std::collections::BTreeMap;

use num_rational::BigRational;

use crate::colored_perm::{plain_conjugate, ColoredPermutation, Cycle};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::model::pairing;

/// A part of π ∈ Π^{2,1}(g), by indices into `g.cycles()`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pi21Part {
    Single(usize),
    Pair(usize, usize),
}

impl Pi21Part {
    pub fn cycle_indices(&self) -> Vec<usize> {
        match *self {
            Pi21Part::Single(i) => vec![i],
            Pi21Part::Pair(i, j) => vec![i, j],
        }
    }
}

/// An element of Π^{2,1}(g); parts sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pi21Partition {
    parts: Vec<Pi21Part>,
}

impl Pi21Partition {
    pub fn new(mut parts: Vec<Pi21Part>) -> Self {
        parts.sort();
        Pi21Partition { parts }
    }

    pub fn parts(&self) -> &[Pi21Part] {
        &self.parts
    }

    /// ℓ(π), the number of parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    /// pair_j(π): pairs of cycles of length j.
    pub fn pairs_of_length(&self, cycles: &[Cycle], j: usize) -> usize {
        self.parts.iter().filter(|s| matches!(s, Pi21Part::Pair(a, _) if cycles[*a].len() == j)).count()
    }

    /// z(s) mod r for every part, in part order.
    pub fn part_colors(&self, cycles: &[Cycle], r: usize) -> Vec<usize> {
        self.parts.iter().map(|s| s.cycle_indices().iter().map(|&i| cycles[i].color(r)).sum::<usize>() % r).collect()
    }
}

/// Π^{2,1}(g).
pub fn pi21_partitions(g: &ColoredPermutation) -> Vec<Pi21Partition> {
    fn go(cycles: &[Cycle], used: &mut Vec<bool>, parts: &mut Vec<Pi21Part>, out: &mut Vec<Pi21Partition>) {
        let Some(i) = used.iter().position(|&u| !u) else {
            out.push(Pi21Partition::new(parts.clone()));
            return;
        };
        used[i] = true;
        parts.push(Pi21Part::Single(i));
        go(cycles, used, parts, out);
        parts.pop();
        for j in i + 1..cycles.len() {
            if !used[j] && cycles[j].len() == cycles[i].len() {
                used[j] = true;
                parts.push(Pi21Part::Pair(i, j));
                go(cycles, used, parts, out);
                parts.pop();
                used[j] = false;
            }
        }
        used[i] = false;
    }
    let cycles = g.cycles();
    let mut out = Vec::new();
    go(&cycles, &mut vec![false; cycles.len()], &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// π(w): how |w| permutes the cycle supports of g.
pub fn pi_of(w: &ColoredPermutation, g: &ColoredPermutation) -> Result<Pi21Partition> {
    let cycles = g.cycles();
    let mut owner = vec![0; g.n()];
    for (k, c) in cycles.iter().enumerate() {
        for a in c.support() {
            owner[a - 1] = k;
        }
    }
    let mut parts = Vec::new();
    for (k, c) in cycles.iter().enumerate() {
        let images: Vec<usize> = c.support().iter().map(|&a| owner[w.perm()[a - 1]]).collect();
        let target = images[0];
        if images.iter().any(|&t| t != target) || cycles[target].len() != c.len() {
            return Err(Error::Domain(format!("|{w}| does not permute the cycles of {g}")));
        }
        if target == k {
            parts.push(Pi21Part::Single(k));
        } else if k < target {
            parts.push(Pi21Part::Pair(k, target));
        }
    }
    Ok(Pi21Partition::new(parts))
}

/// All antisymmetric elements of G(r,n): fixed-point-free |w| with colors z and z + r/2 on each 2-cycle.
pub fn antisymmetric_elements(r: usize, n: usize, max: u128) -> Result<Vec<ColoredPermutation>> {
    if !r.is_multiple_of(2) || !n.is_multiple_of(2) {
        return Ok(Vec::new());
    }
    let matchings: u128 = (1..n as u128).step_by(2).product();
    let count = matchings.saturating_mul((r as u128).saturating_pow(n as u32 / 2));
    if count > max {
        return Err(Error::Resource(format!("{count} antisymmetric elements exceed the limit {max}")));
    }
    fn matchings_of(free: &mut Vec<usize>, acc: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if free.is_empty() {
            out.push(acc.clone());
            return;
        }
        let a = free.remove(0);
        for k in 0..free.len() {
            let b = free.remove(k);
            acc.push((a, b));
            matchings_of(free, acc, out);
            acc.pop();
            free.insert(k, b);
        }
        free.insert(0, a);
    }
    let mut all = Vec::new();
    matchings_of(&mut (0..n).collect(), &mut Vec::new(), &mut all);
    let mut out = Vec::with_capacity(count as usize);
    for m in &all {
        let mut perm = vec![0; n];
        for &(a, b) in m {
            perm[a] = b;
            perm[b] = a;
        }
        for choice in crate::group::colorings(r, m.len()) {
            let mut colors = vec![0; n];
            for (&(a, b), &z) in m.iter().zip(&choice) {
                colors[a] = z;
                colors[b] = (z + r / 2) % r;
            }
            out.push(ColoredPermutation::from_parts(r, perm.clone(), colors)?);
        }
    }
    Ok(out)
}

/// A^ε(g) = {w antisymmetric : |g|w|g|⁻¹ = (−1)^ε w}, split as ⋃_π A^ε_π.
pub fn a_sets(g: &ColoredPermutation, eps: u8, max: u128) -> Result<BTreeMap<Pi21Partition, Vec<ColoredPermutation>>> {
    let r = g.r();
    if !r.is_multiple_of(2) {
        return Err(Error::Domain("A^ε(g) needs r even".into()));
    }
    let shift = if eps % 2 == 1 { r / 2 } else { 0 };
    let mut out: BTreeMap<Pi21Partition, Vec<ColoredPermutation>> = BTreeMap::new();
    for w in antisymmetric_elements(r, g.n(), max)? {
        if plain_conjugate(g.perm(), &w) == w.shift_colors(shift) {
            out.entry(pi_of(&w, g)?).or_default().push(w);
        }
    }
    Ok(out)
}

/// Σ_{w∈A¹_π} ζ_r^{⟨g,w⟩} for every π with A¹_π nonempty.
pub fn a1_sums(g: &ColoredPermutation, max: u128) -> Result<BTreeMap<Pi21Partition, (usize, Cyclotomic)>> {
    let r = g.r();
    Ok(a_sets(g, 1, max)?
        .into_iter()
        .map(|(pi, ws)| {
            let mut counts = vec![0i64; r];
            for w in &ws {
                counts[pairing(g, w)] += 1;
            }
            (pi, (ws.len(), Cyclotomic::from_root_counts(r, &counts)))
        })
        .collect())
}

/// (1/p′) Σ_π Σ_{w∈A¹_π} ζ_r^{⟨g,w⟩} for g ∈ G(r,p,n) with p even.
pub fn halfway_sum(g: &ColoredPermutation, p: usize, max: u128) -> Result<Cyclotomic> {
    if !p.is_multiple_of(2) {
        return Err(Error::Domain("needs p even".into()));
    }
    let total: Cyclotomic = a1_sums(g, max)?.into_values().map(|(_, s)| s).sum();
    Ok(total.scale(&BigRational::new(1.into(), ((p / 2) as i64).into())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_two_cycles() {
        let g = ColoredPermutation::parse_cycles(2, 4, "(1,2)(3,4)").unwrap();
        assert_eq!(pi21_partitions(&g).len(), 2);
    }

    #[test]
    fn three_equal_cycles() {
        let g = ColoredPermutation::parse_cycles(2, 6, "(1,2)(3,4)(5,6)").unwrap();
        assert_eq!(pi21_partitions(&g).len(), 4);
    }

    #[test]
    fn antisymmetric_count() {
        assert_eq!(antisymmetric_elements(4, 4, 1 << 20).unwrap().len(), 3 * 16);
        assert!(antisymmetric_elements(3, 4, 1 << 20).unwrap().is_empty());
    }
}
