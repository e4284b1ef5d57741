//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use gelfand::classes::cycle_type;
use gelfand::group::subgroup_elements;
use gelfand::model::pi21::antisymmetric_elements;
use gelfand::shapes::{Multipartition, Partition};
use gelfand::{ColoredPermutation, Cyclotomic, ProjectiveElement};

pub const MAX: u128 = 1_000_000;

/// Number of ways to distribute the cycle lengths into rows of the given sizes.
/// This is the permutation character of S_n on tabloids of that composition.
pub fn tabloid_count(rows: &[usize], cycles: &[usize]) -> i64 {
    fn go(rows: &mut [usize], cycles: &[usize]) -> i64 {
        let Some((&c, rest)) = cycles.split_first() else {
            return rows.iter().all(|&x| x == 0) as i64;
        };
        let mut total = 0;
        for i in 0..rows.len() {
            if rows[i] >= c {
                rows[i] -= c;
                total += go(rows, rest);
                rows[i] += c;
            }
        }
        total
    }
    go(&mut rows.to_vec(), cycles)
}

fn permutations_with_sign(k: usize) -> Vec<(Vec<usize>, i64)> {
    gelfand::group::permutations(k)
        .into_iter()
        .map(|w| {
            let inv = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).filter(|&(i, j)| w[i] > w[j]).count();
            let sign = if inv % 2 == 0 { 1 } else { -1 };
            (w, sign)
        })
        .collect()
}

/// χ^λ(α) through the Jacobi–Trudi determinant in the complete symmetric functions,
/// each h_μ evaluated as a tabloid count.
pub fn sym_character_oracle(lambda: &Partition, alpha: &Partition) -> i64 {
    let parts = lambda.parts();
    let k = parts.len();
    let mut total = 0;
    for (w, sign) in permutations_with_sign(k) {
        let mut comp = Vec::with_capacity(k);
        let mut ok = true;
        for i in 0..k {
            let v = parts[i] as i64 - i as i64 + w[i] as i64;
            if v < 0 {
                ok = false;
                break;
            }
            comp.push(v as usize);
        }
        if ok {
            total += sign * tabloid_count(&comp, alpha.parts());
        }
    }
    total
}

/// χ_λ(g) for G(r,n), induced from G(r,ν) with the factor ζ_r^{i·z} on block i.
pub fn wreath_character_oracle(lambda: &Multipartition, g: &ColoredPermutation) -> Cyclotomic {
    let r = g.r();
    let n = g.n();
    let sizes = lambda.sizes();
    let mut block = vec![0; n];
    let mut start = 0;
    for (i, &s) in sizes.iter().enumerate() {
        for b in block.iter_mut().skip(start).take(s) {
            *b = i;
        }
        start += s;
    }
    let mut counts = vec![0i64; r];
    let elements = subgroup_elements(r, 1, n, MAX).unwrap();
    for x in &elements {
        let h = x.multiply(g).unwrap().multiply(&x.inverse()).unwrap();
        if (0..n).any(|j| block[h.perm()[j]] != block[j]) {
            continue;
        }
        let mut value = 1i64;
        let mut exponent = 0;
        for (i, comp) in lambda.components().iter().enumerate() {
            let mut lengths = Vec::new();
            let mut color = 0;
            for c in h.cycles() {
                if block[c.entries[0].0 - 1] == i {
                    lengths.push(c.len());
                    color += c.color(r);
                }
            }
            value *= sym_character_oracle(comp, &Partition::new(lengths));
            exponent += i * color;
        }
        counts[exponent % r] += value;
    }
    let order: i64 = sizes.iter().map(|&s| (r as i64).pow(s as u32) * (1..=s as i64).product::<i64>()).product();
    let total = Cyclotomic::from_root_counts(r, &counts);
    total.scale(&num_rational::BigRational::new(1.into(), order.into()))
}

/// Generators of G(r,p,n): adjacent transpositions, diag(ζ,ζ⁻¹,1,…) and diag(ζ^p,1,…).
pub fn generators(r: usize, p: usize, n: usize) -> Vec<ColoredPermutation> {
    let mut gens = Vec::new();
    for i in 0..n.saturating_sub(1) {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(i, i + 1);
        gens.push(ColoredPermutation::plain(r, perm).unwrap());
    }
    if n >= 2 {
        let mut z = vec![0; n];
        z[0] = 1 % r;
        z[1] = (r - 1) % r;
        gens.push(ColoredPermutation::from_parts(r, (0..n).collect(), z).unwrap());
    }
    if n >= 1 {
        let mut z = vec![0; n];
        z[0] = p % r;
        gens.push(ColoredPermutation::from_parts(r, (0..n).collect(), z).unwrap());
    }
    gens
}

/// Conjugacy classes of G(r,p,n) by closing orbits under conjugation by generators.
pub fn conjugacy_orbits(r: usize, p: usize, n: usize) -> Vec<Vec<ColoredPermutation>> {
    let elements = subgroup_elements(r, p, n, MAX).unwrap();
    let gens = generators(r, p, n);
    let inverses: Vec<ColoredPermutation> = gens.iter().map(|s| s.inverse()).collect();
    let mut seen: HashMap<ColoredPermutation, usize> = HashMap::new();
    let mut orbits = Vec::new();
    for g in &elements {
        if seen.contains_key(g) {
            continue;
        }
        let id = orbits.len();
        let mut orbit = vec![g.clone()];
        seen.insert(g.clone(), id);
        let mut k = 0;
        while k < orbit.len() {
            let x = orbit[k].clone();
            for (s, t) in gens.iter().zip(&inverses) {
                let y = s.multiply(&x).unwrap().multiply(t).unwrap();
                if !seen.contains_key(&y) {
                    seen.insert(y.clone(), id);
                    orbit.push(y);
                }
            }
            k += 1;
        }
        orbits.push(orbit);
    }
    orbits
}

/// Number of antisymmetric elements of G(r,p,q,n), counted as cosets of C_q.
pub fn antisymmetric_count(r: usize, p: usize, q: usize, n: usize) -> usize {
    antisymmetric_elements(r, n, MAX)
        .unwrap()
        .into_iter()
        .filter(|w| w.total_color() % p == 0)
        .map(|w| ProjectiveElement::new(w, q).unwrap())
        .collect::<BTreeSet<_>>()
        .len()
}

/// Involutions of S_n as 0-based images.
pub fn involutions_of(n: usize) -> Vec<Vec<usize>> {
    gelfand::group::permutations(n).into_iter().filter(|s| (0..n).all(|j| s[s[j]] == j)).collect()
}

/// The cycle type of g, as used to index wreath classes.
pub fn alpha(g: &ColoredPermutation) -> Multipartition {
    cycle_type(g)
}
