//! Acceptance suite: one PASS/FAIL line per criterion; exits nonzero if any fails.

mod common;

use std::collections::{BTreeMap, BTreeSet, HashMap};

use common::*;
use gelfand::characters::{character_table, delta1, sym_character, wreath_character, IrreducibleLabel};
use gelfand::classes::{
    class_of, involution_type, is_split_form, predicted_shapes, ClassSet, InvolutionClassType,
};
use gelfand::group::{projective_elements, subgroup_elements, wreath_order, GroupParams};
use gelfand::model::pi21::{a1_sums, a_sets, halfway_sum};
use gelfand::model::{
    decompose, gelfand_check, model_character, untwisted_antisymmetric_character, verify_block,
    verify_class_decomposition, ModelBasis, Scope,
};
use gelfand::rs::{projective_rs, rs, rs_inverse};
use gelfand::shapes::{enumerate_shapes, Multipartition, Partition, ShapeOrbit};
use gelfand::{ColoredPermutation, Cyclotomic, ProjectiveElement};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn params(r: usize, p: usize, q: usize, n: usize) -> GroupParams {
    GroupParams::new(r, p, q, n).unwrap()
}

fn e<E: std::fmt::Display>(x: E) -> String {
    x.to_string()
}

fn label_set(list: Vec<(IrreducibleLabel, u64)>) -> Result<BTreeSet<String>, String> {
    check(list.iter().all(|(_, k)| *k == 1), || "multiplicity above one".into())?;
    Ok(list.into_iter().map(|(l, _)| l.to_string()).collect())
}

fn gelfand_property() -> Outcome {
    let groups = [params(1, 1, 1, 4), params(3, 1, 1, 3), params(2, 1, 2, 4), params(2, 2, 1, 4), params(2, 2, 1, 6), params(4, 2, 1, 2)];
    let mut irreducibles = 0;
    for g in groups {
        let report = gelfand_check(g, MAX).map_err(e)?;
        let bad: Vec<String> = report
            .rows
            .iter()
            .filter(|m| m.multiplicity != Cyclotomic::from_integer(1))
            .map(|m| format!("{} has multiplicity {}", m.label, m.multiplicity))
            .collect();
        check(bad.is_empty(), || format!("{g}: {}", bad.join("; ")))?;
        irreducibles += report.rows.len();
    }
    Ok(format!("6 groups, {irreducibles} irreducibles, all multiplicity 1"))
}

fn worked_example_b6() -> Outcome {
    let g = params(2, 2, 1, 6);
    let basis = ModelBasis::new(g, MAX).map_err(e)?;
    let v = ColoredPermutation::parse_window(2, "[6^1,4^0,3^0,2^0,5^1,1^1]").map_err(e)?;
    let k = basis.index_of(&v).ok_or("v is not a basis involution")?;
    let t = basis.class_type(k).clone();
    let size = basis.blocks().iter().find(|(b, _)| *b == t).map(|(_, ix)| ix.len()).unwrap_or(0);
    check(size == 90, || format!("class of v has {size} elements"))?;
    let report = verify_block(&basis, &character_table(g).map_err(e)?, &t).map_err(e)?;
    let got: BTreeSet<String> = report.computed.iter().map(|l| l.to_string()).collect();
    let expected: BTreeSet<String> =
        ["[((1,1,1),(2,1))]", "[((2,1),(2,1))]^0", "[((1,1,1),(1,1,1))]^0"].map(String::from).into();
    check(got == expected && report.computed.len() == 3, || format!("M(c) = {got:?}"))?;
    Ok(format!("|c| = 90, M(c) = {}", report.computed.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" + ")))
}

fn worked_example_g6614() -> Outcome {
    let v = ColoredPermutation::parse_window(
        6,
        "[1^0,3^1,2^1,4^1,5^1,7^2,6^2,8^3,10^4,9^4,11^4,12^4,14^5,13^5]",
    )
    .map_err(e)?;
    let t = involution_type(&ProjectiveElement::new(v.clone(), 6).map_err(e)?).map_err(e)?;
    let (f, q) = (vec![1, 2, 0, 1, 2, 0], vec![0, 1, 1, 0, 1, 1]);
    let rotate = |x: &Vec<usize>, k: usize| (0..6).map(|i| x[(i + 6 - k) % 6]).collect::<Vec<_>>();
    let rotations: Vec<InvolutionClassType> =
        (0..6).map(|k| InvolutionClassType::Symmetric { f: rotate(&f, k), q: rotate(&q, k) }).collect();
    check(rotations.contains(&t), || format!("type {t}"))?;
    for k in 1..6 {
        let shifted = involution_type(&ProjectiveElement::new(v.shift_colors(k), 6).map_err(e)?).map_err(e)?;
        check(shifted == t, || format!("type of ζ^{k}v is {shifted}"))?;
    }
    let shapes = predicted_shapes(&t, params(6, 6, 1, 14)).map_err(e)?;
    let stats = |l: &Multipartition| -> Vec<(usize, usize)> {
        l.components().iter().map(|c| (c.size(), c.odd_columns())).collect()
    };
    let wanted = vec![(1, 1), (4, 2), (2, 0), (1, 1), (4, 2), (2, 0)];
    for o in &shapes {
        check(o.members().iter().any(|m| stats(m) == wanted), || format!("orbit {o} has the wrong statistics"))?;
    }
    let p = |s: &[usize]| Partition::new(s.to_vec());
    let build = |a: &[usize], b: &[usize]| {
        ShapeOrbit::of(&Multipartition::new(vec![p(&[1]), p(a), p(&[1, 1]), p(&[1]), p(b), p(&[1, 1])]), 6)
    };
    let expected: BTreeSet<ShapeOrbit> =
        [build(&[3, 1], &[3, 1]), build(&[2, 1, 1], &[2, 1, 1]), build(&[3, 1], &[2, 1, 1])].into();
    let got: BTreeSet<ShapeOrbit> = shapes.iter().cloned().collect();
    check(shapes.len() == 3 && got == expected, || format!("Sh(c) = {got:?}"))?;
    Ok(format!("type {t}, 3 orbits"))
}

fn full_verification() -> Outcome {
    let groups = [params(2, 1, 1, 4), params(2, 2, 1, 4), params(3, 1, 1, 3), params(2, 2, 1, 6), params(4, 2, 1, 2), params(3, 3, 1, 2)];
    let mut blocks = 0;
    for g in groups {
        let report = verify_class_decomposition(g, None, MAX).map_err(e)?;
        let bad: Vec<String> = report
            .classes
            .iter()
            .filter(|c| !c.pass)
            .map(|c| format!("{}: predicted {:?}, computed {:?}", c.class_type, c.predicted, c.computed))
            .collect();
        check(bad.is_empty(), || format!("{g}: {}", bad.join("; ")))?;
        blocks += report.classes.len();
    }
    Ok(format!("{blocks} blocks over 6 groups match Sh(c)"))
}

fn antisymmetric_submodule() -> Outcome {
    for g in [params(2, 2, 1, 4), params(2, 2, 1, 6)] {
        let basis = ModelBasis::new(g, MAX).map_err(e)?;
        let table = character_table(g).map_err(e)?;
        let m = g.n / 2;
        let expected1: BTreeSet<String> = Partition::all(m)
            .into_iter()
            .map(|mu| {
                let orbit = ShapeOrbit::of(&Multipartition::new(vec![mu.clone(), mu]), 2);
                IrreducibleLabel { orbit, j: 1 }.to_string()
            })
            .collect();
        let m1 = label_set(decompose(&model_character(&basis, &Scope::Antisymmetric).map_err(e)?, &table).map_err(e)?)?;
        check(m1 == expected1, || format!("{g}: M¹ = {m1:?}"))?;
        let expected0: BTreeSet<String> =
            table.labels().into_iter().filter(|l| l.j == 0).map(|l| l.to_string()).collect();
        let m0 = label_set(decompose(&model_character(&basis, &Scope::Symmetric).map_err(e)?, &table).map_err(e)?)?;
        check(m0 == expected0, || format!("{g}: M⁰ = {m0:?}"))?;
    }
    Ok("M¹ = ⊕ρ¹_[μ,μ] and M⁰ = ⊕ρ⁰ on D4 and D6".into())
}

fn character_table_integrity() -> Outcome {
    let groups = [params(2, 2, 1, 4), params(2, 2, 1, 6), params(4, 2, 1, 2)];
    for g in groups {
        let table = character_table(g).map_err(e)?;
        let classes = table.classes();
        let count = classes.quotient_class_count(g.q).map_err(e)?;
        check(table.rows().len() == count, || format!("{g}: {} rows, {count} classes", table.rows().len()))?;
        for (i, (li, ri)) in table.rows().iter().enumerate() {
            for (j, (lj, rj)) in table.rows().iter().enumerate() {
                let ip = ri.inner_product(rj).map_err(e)?;
                let want = Cyclotomic::from_integer((i == j) as i64);
                check(ip == want, || format!("{g}: ⟨{li},{lj}⟩ = {ip}"))?;
            }
        }
        let squares: u128 = table.labels().iter().map(|l| l.degree().pow(2)).sum();
        let order = wreath_order(g.r, g.n) / g.p as u128;
        check(squares == order, || format!("{g}: Σ deg² = {squares}, expected {order}"))?;
        let identity = classes.locate(&ColoredPermutation::identity(g.r, g.n)).map_err(e)?;
        let mut split: BTreeMap<ShapeOrbit, Vec<&gelfand::characters::ClassFunction>> = BTreeMap::new();
        for (l, row) in table.rows() {
            let deg = row.values()[identity].clone();
            check(deg == Cyclotomic::from_integer(l.degree() as i64), || format!("{g}: {l}(1) = {deg}"))?;
            if l.is_split() {
                let lambda = l.orbit.canonical();
                check(2 * l.degree() == lambda.count_standard(), || format!("{g}: degree of {l}"))?;
                split.entry(l.orbit.clone()).or_default().push(row);
            }
        }
        for (orbit, rows) in split {
            let lambda = orbit.canonical();
            let mu = Multipartition::new(lambda.components()[..g.r / 2].to_vec());
            let diff = rows[0].sub(rows[1]).map_err(e)?;
            for (label, value) in classes.labels().iter().zip(diff.values()) {
                let d = delta1(&mu, label).map_err(e)?;
                check(*value == d, || format!("{g}: Δ¹_{orbit} at {label}"))?;
                if label.split.is_none() {
                    check(value.is_zero(), || format!("{g}: Δ¹_{orbit} nonzero at unsplit {label}"))?;
                }
            }
        }
    }
    Ok("square, orthonormal, Σ deg² = |G|, split degrees and Δ¹ on D4, D6, G(4,2,2)".into())
}

fn d_type_split_characters() -> Outcome {
    let g = params(2, 2, 1, 4);
    let table = character_table(g).map_err(e)?;
    let classes = table.classes();
    let mut checked = 0;
    for mu in Partition::all(2) {
        let mumu = Multipartition::new(vec![mu.clone(), mu.clone()]);
        let orbit = ShapeOrbit::of(&mumu, 2);
        for eps in 0..2usize {
            let row = table.row(&IrreducibleLabel { orbit: orbit.clone(), j: eps }).ok_or("missing split row")?;
            for (label, value) in classes.labels().iter().zip(row.values()) {
                let parent = wreath_character(&mumu, &label.alpha).map_err(e)?;
                let half = parent.scale(&num_rational::BigRational::new(1.into(), 2.into()));
                let expected = match label.split {
                    Some(eta) => {
                        let alpha = Partition::new(label.alpha.components()[0].parts().iter().map(|x| x / 2).collect());
                        let sign = if (eps + eta as usize).is_multiple_of(2) { 1 } else { -1 };
                        let term = sign * (1i64 << (alpha.len() - 1)) * sym_character(&mu, &alpha).map_err(e)?;
                        &half + &Cyclotomic::from_integer(term)
                    }
                    None => half,
                };
                check(*value == expected, || format!("χ^{eps}_[{mu},{mu}] at {label}: {value} vs {expected}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} values of χ^ε_[μ,μ] on D4 match"))
}

fn antisymmetric_machinery() -> Outcome {
    let (r, p, n) = (2, 2, 4);
    let basis = ModelBasis::new(params(r, p, 1, n), MAX).map_err(e)?;
    let diff = untwisted_antisymmetric_character(&basis)
        .map_err(e)?
        .sub(&model_character(&basis, &Scope::Antisymmetric).map_err(e)?)
        .map_err(e)?;
    let classes = ClassSet::new(r, p, n).map_err(e)?;
    for (g, value) in classes.normal_elements().iter().zip(diff.values()) {
        let rhs = halfway_sum(g, p, MAX).map_err(e)?;
        check(*value == rhs, || format!("halfway at {g}: {value} vs {rhs}"))?;
    }

    let g = ColoredPermutation::parse_cycles(4, 4, "(1,2)(3,4)").map_err(e)?;
    let sets = a_sets(&g, 1, MAX).map_err(e)?;
    let pair = sets
        .iter()
        .find(|(pi, _)| pi.parts() == [gelfand::model::pi21::Pi21Part::Pair(0, 1)])
        .map(|(_, ws)| ws.iter().cloned().collect::<BTreeSet<_>>())
        .unwrap_or_default();
    let mut table1 = BTreeSet::new();
    for k in 0..4 {
        let (a, b) = ((k + 2) % 4, k);
        for s in [format!("(1^{a},3^{b})(2^{b},4^{a})"), format!("(1^{a},4^{b})(2^{b},3^{a})")] {
            table1.insert(ColoredPermutation::parse_cycles(4, 4, &s).map_err(e)?);
        }
    }
    check(pair == table1 && pair.len() == 8, || format!("A¹_s has {} elements", pair.len()))?;

    let mut lemmas = 0;
    for p in [1, 2] {
        for g in ClassSet::new(4, p, 4).map_err(e)?.normal_elements() {
            let cycles = g.cycles();
            let sums = a1_sums(g, MAX).map_err(e)?;
            if cycles.iter().any(|c| c.len() % 2 == 1) {
                check(sums.is_empty(), || format!("Fpi0 at {g}"))?;
            } else if cycles.iter().any(|c| c.color(4) % 2 == 1) {
                check(sums.values().all(|(_, s)| s.is_zero()), || format!("cyc1 at {g}"))?;
            } else {
                let sign = g.signature().map_err(e)?;
                for (pi, (size, sum)) in &sums {
                    let zero = pi.part_colors(&cycles, 4).iter().all(|&z| z == 0);
                    let magnitude = *size as i64;
                    let expected = match (zero, sign) {
                        (false, _) => Cyclotomic::zero(4),
                        (true, 0) => Cyclotomic::from_integer(magnitude),
                        (true, _) => Cyclotomic::from_integer(-magnitude),
                    };
                    check(*sum == expected, || format!("caso at {g}, {pi:?}: {sum}"))?;
                }
            }
            lemmas += 1;
        }
    }
    Ok(format!("halfway on {} classes of D4, Table 1 (8 elements), lemmas on {lemmas} normal elements", classes.len()))
}

fn mass_identities() -> Outcome {
    for (r, n) in [(2, 3), (2, 4), (3, 3)] {
        let total: u128 = enumerate_shapes(r, n, 1).iter().map(|l| l.count_standard().pow(2)).sum();
        check(total == wreath_order(r, n), || format!("Σ|St|² = {total} for ({r},{n})"))?;
    }
    for g in subgroup_elements(2, 1, 3, MAX).map_err(e)? {
        let (p, q) = rs(&g);
        check(rs_inverse(&p, &q).map_err(e)? == g, || format!("round trip of {g}"))?;
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..500 {
        let mut perm: Vec<usize> = (0..5).collect();
        perm.shuffle(&mut rng);
        let colors: Vec<usize> = (0..5).map(|_| rng.gen_range(0..4)).collect();
        let g = ColoredPermutation::from_parts(4, perm, colors).map_err(e)?;
        let (p, q) = rs(&g);
        check(rs_inverse(&p, &q).map_err(e)? == g, || format!("round trip of {g}"))?;
    }
    let mut fibers: HashMap<_, usize> = HashMap::new();
    for g in projective_elements(params(2, 1, 2, 4), MAX).map_err(e)? {
        *fibers.entry(projective_rs(&g)).or_default() += 1;
    }
    for (pair, size) in &fibers {
        let m = ShapeOrbit::of(&pair.p.shape(), 2).stabilizer_order();
        check(*size == m, || format!("fiber of size {size}, m_q = {m}"))?;
    }
    Ok(format!("mass identities, 48 + 500 round trips, {} projective fibers", fibers.len()))
}

fn split_classes() -> Outcome {
    let mut summary = Vec::new();
    for (r, p, n) in [(2, 2, 4), (4, 2, 4)] {
        let orbits = conjugacy_orbits(r, p, n);
        let mut by_type: BTreeMap<Multipartition, Vec<&Vec<ColoredPermutation>>> = BTreeMap::new();
        for o in &orbits {
            by_type.entry(alpha(&o[0])).or_default().push(o);
        }
        let classes = ClassSet::new(r, p, n).map_err(e)?;
        let mut splits = 0;
        for (a, os) in &by_type {
            let want = if is_split_form(a) { 2 } else { 1 };
            check(os.len() == want, || format!("G({r},{p},{n}): {a} has {} orbits", os.len()))?;
            if want == 2 {
                splits += 1;
                check(os[0].len() == os[1].len(), || format!("halves of {a} differ in size"))?;
                let signs: Vec<BTreeSet<u8>> =
                    os.iter().map(|o| o.iter().map(|g| g.signature().unwrap()).collect()).collect();
                check(signs[0].len() == 1 && signs[1].len() == 1 && signs[0] != signs[1], || {
                    format!("signature does not separate the halves of {a}")
                })?;
            }
        }
        for (label, g) in classes.labels().iter().zip(classes.normal_elements()) {
            let orbit = orbits.iter().find(|o| o.contains(g)).ok_or("normal element outside the group")?;
            let labels: BTreeSet<_> = orbit.iter().map(|x| class_of(x, p).unwrap()).collect();
            check(labels.len() == 1 && labels.contains(label), || format!("normal element of {label}"))?;
        }
        summary.push(format!("G({r},{p},{n}): {} classes, {splits} split", orbits.len()));
    }
    Ok(summary.join("; "))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("Gelfand property", gelfand_property),
        ("worked example in B6/±I", worked_example_b6),
        ("worked example in G(6,6,14)*", worked_example_g6614),
        ("class-by-class decomposition", full_verification),
        ("antisymmetric submodule", antisymmetric_submodule),
        ("character-table integrity", character_table_integrity),
        ("D-type split characters", d_type_split_characters),
        ("antisymmetric sums and lemmas", antisymmetric_machinery),
        ("combinatorial mass identities", mass_identities),
        ("split-class structure", split_classes),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = std::time::Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
