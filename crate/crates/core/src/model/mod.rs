//! The involution model of G(r,p,q,n) and its decomposition.
//!
//! The model has a basis C_v indexed by the absolute involutions v of the dual
//! group G(r,q,p,n). An element g acts by
//! ϱ(g)C_v = ζ_r^{⟨g,v⟩}(−1)^{inv_v(g)} C_{|g|v|g|⁻¹} for symmetric v and by
//! ϱ(g)C_v = ζ_r^{⟨g,v⟩+a(g,v)} C_{|g|v|g|⁻¹} for antisymmetric v.
//! Scalars are kept as exponents of ζ_{2r} until a trace is taken.

pub mod pi21;

use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::characters::{character_table, CharacterTable, ClassFunction, IrreducibleLabel};
use crate::classes::{dual_involutions, involution_type, predicted_shapes, ClassSet, InvolutionClassType};
use crate::colored_perm::{plain_conjugate, ColoredPermutation, ProjectiveElement, SymmetryKind};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::GroupParams;

/// ⟨g,v⟩ = Σ_i z_i(g)·z_i(v) mod r, computed on the given lifts.
pub fn pairing(g: &ColoredPermutation, v: &ColoredPermutation) -> usize {
    let r = g.r();
    g.colors().iter().zip(v.colors()).map(|(&a, &b)| a * b).sum::<usize>() % r
}

/// inv_v(g) = |Inv(|g|) ∩ Pair(|v|)|.
pub fn inv_statistic(g: &ColoredPermutation, v: &ColoredPermutation) -> usize {
    let s = g.perm();
    v.perm()
        .iter()
        .enumerate()
        .filter(|&(i, &j)| i < j && s[i] > s[j])
        .count()
}

/// a(g,v) = z_1(v) − z_{|g|⁻¹(1)}(v) mod r.
pub fn a_statistic(g: &ColoredPermutation, v: &ColoredPermutation) -> usize {
    let r = v.r();
    let pre = g.perm().iter().position(|&x| x == 0).expect("n >= 1");
    (v.colors()[0] + r - v.colors()[pre]) % r
}

/// Which scalar the antisymmetric basis vectors receive.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Twist {
    /// ζ_r^{⟨g,v⟩+a(g,v)}, the model action.
    Model,
    /// ζ_r^{⟨g,v⟩} alone.
    Untwisted,
}

/// Exponent of ζ_{2r} scaling C_{|g|v|g|⁻¹} in ϱ(g)C_v.
fn phase(g: &ColoredPermutation, v: &ColoredPermutation, kind: SymmetryKind, twist: Twist) -> usize {
    let r = g.r();
    let base = 2 * pairing(g, v);
    let extra = match (kind, twist) {
        (SymmetryKind::Antisymmetric, Twist::Model) => 2 * a_statistic(g, v),
        (SymmetryKind::Antisymmetric, Twist::Untwisted) => 0,
        _ => r * (inv_statistic(g, v) % 2),
    };
    (base + extra) % (2 * r)
}

/// The basis of the model: absolute involutions of the dual group, grouped by type.
#[derive(Clone, Debug)]
pub struct ModelBasis {
    params: GroupParams,
    elements: Vec<ProjectiveElement>,
    kinds: Vec<SymmetryKind>,
    types: Vec<InvolutionClassType>,
    blocks: Vec<(InvolutionClassType, Vec<usize>)>,
    index: HashMap<ColoredPermutation, usize>,
}

impl ModelBasis {
    /// Enumerates the basis for G(r,p,q,n); `max` bounds r^n·n!.
    pub fn new(params: GroupParams, max: u128) -> Result<Self> {
        params.require_involutory()?;
        if params.n == 0 {
            return Err(Error::Domain("the model needs n >= 1".into()));
        }
        let elements = dual_involutions(params, max)?;
        let kinds: Vec<SymmetryKind> = elements.iter().map(|v| v.symmetry_kind()).collect();
        let types: Vec<InvolutionClassType> = elements.iter().map(involution_type).collect::<Result<_>>()?;
        let mut grouped: std::collections::BTreeMap<InvolutionClassType, Vec<usize>> = Default::default();
        for (k, t) in types.iter().enumerate() {
            grouped.entry(t.clone()).or_default().push(k);
        }
        let index = elements.iter().enumerate().map(|(k, v)| (v.rep().clone(), k)).collect();
        Ok(ModelBasis { params, elements, kinds, types, blocks: grouped.into_iter().collect(), index })
    }

    pub fn params(&self) -> GroupParams {
        self.params
    }

    pub fn elements(&self) -> &[ProjectiveElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn kind(&self, k: usize) -> SymmetryKind {
        self.kinds[k]
    }

    pub fn class_type(&self, k: usize) -> &InvolutionClassType {
        &self.types[k]
    }

    /// Blocks M(c), sorted by type.
    pub fn blocks(&self) -> &[(InvolutionClassType, Vec<usize>)] {
        &self.blocks
    }

    /// Index of the basis vector of an involution (any lift).
    pub fn index_of(&self, v: &ColoredPermutation) -> Option<usize> {
        let p = ProjectiveElement::new(v.clone(), self.params.p).ok()?;
        self.index.get(p.rep()).copied()
    }

    fn scope_indices(&self, scope: &Scope) -> Result<Vec<usize>> {
        let all = 0..self.len();
        Ok(match scope {
            Scope::All => all.collect(),
            Scope::Symmetric => all.filter(|&k| self.kinds[k] == SymmetryKind::Symmetric).collect(),
            Scope::Antisymmetric => all.filter(|&k| self.kinds[k] == SymmetryKind::Antisymmetric).collect(),
            Scope::Class(t) => self
                .blocks
                .iter()
                .find(|(b, _)| b == t)
                .map(|(_, ix)| ix.clone())
                .ok_or_else(|| Error::Domain(format!("no involutions of type {t}")))?,
        })
    }

    fn check_element(&self, g: &ColoredPermutation) -> Result<()> {
        if g.r() != self.params.r || g.n() != self.params.n {
            return Err(Error::Dimension(format!("{g} is not in {}", self.params)));
        }
        if !g.total_color().is_multiple_of(self.params.p) {
            return Err(Error::Domain(format!("{g} is not in G({},{},{})", self.params.r, self.params.p, self.params.n)));
        }
        Ok(())
    }
}

/// Which part of the model a character is taken on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scope {
    All,
    /// M⁰, spanned by the symmetric involutions.
    Symmetric,
    /// M¹, spanned by the antisymmetric involutions.
    Antisymmetric,
    /// M(c) for one S_n-conjugacy class type.
    Class(InvolutionClassType),
}

/// ϱ(g) as a monomial matrix: basis index k goes to `targets[k]` with scalar ζ_{2r}^{phases[k]}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelAction {
    root_order: usize,
    targets: Vec<usize>,
    phases: Vec<usize>,
}

impl ModelAction {
    pub fn targets(&self) -> &[usize] {
        &self.targets
    }

    /// Exponents of ζ_{2r}.
    pub fn phases(&self) -> &[usize] {
        &self.phases
    }

    /// Scalar attached to basis index k.
    pub fn scalar(&self, k: usize) -> Cyclotomic {
        crate::cyclotomic::root_of_unity(self.root_order, self.phases[k] as i64)
    }

    /// The action ϱ(g)ϱ(h) given self = ϱ(g) and `inner` = ϱ(h).
    pub fn compose(&self, inner: &ModelAction) -> ModelAction {
        let m = self.root_order;
        let targets = inner.targets.iter().map(|&t| self.targets[t]).collect();
        let phases = inner.targets.iter().zip(&inner.phases).map(|(&t, &ph)| (ph + self.phases[t]) % m).collect();
        ModelAction { root_order: m, targets, phases }
    }

    pub fn is_identity(&self) -> bool {
        self.targets.iter().enumerate().all(|(k, &t)| k == t) && self.phases.iter().all(|&p| p == 0)
    }
}

/// ϱ(g) for a lift g ∈ G(r,p,n) of an element of G(r,p,q,n).
pub fn model_action(g: &ColoredPermutation, basis: &ModelBasis) -> Result<ModelAction> {
    action_with(g, basis, Twist::Model)
}

/// The action with the chosen scalar on antisymmetric vectors.
pub fn action_with(g: &ColoredPermutation, basis: &ModelBasis, twist: Twist) -> Result<ModelAction> {
    basis.check_element(g)?;
    let mut targets = Vec::with_capacity(basis.len());
    let mut phases = Vec::with_capacity(basis.len());
    for (k, v) in basis.elements.iter().enumerate() {
        let w = plain_conjugate(g.perm(), v.rep());
        let t = basis.index_of(&w).ok_or_else(|| Error::Inconsistency(format!("{w} is not a basis involution")))?;
        targets.push(t);
        phases.push(phase(g, v.rep(), basis.kinds[k], twist));
    }
    Ok(ModelAction { root_order: 2 * basis.params.r, targets, phases })
}

/// Trace of ϱ(h) on the given basis indices, as multiplicities of powers of ζ_{2r}.
fn trace_counts(h: &ColoredPermutation, basis: &ModelBasis, indices: &[usize], twist: Twist) -> Vec<i64> {
    let r = basis.params.r;
    let p = basis.params.p;
    let mut counts = vec![0i64; 2 * r];
    for &k in indices {
        let v = basis.elements[k].rep();
        let w = plain_conjugate(h.perm(), v);
        let fixed = ProjectiveElement::new(w, p).map(|x| x.rep() == v).unwrap_or(false);
        if fixed {
            counts[phase(h, v, basis.kinds[k], twist)] += 1;
        }
    }
    counts
}

fn character_on(basis: &ModelBasis, indices: &[usize], twist: Twist) -> Result<ClassFunction> {
    let GroupParams { r, p, n, .. } = basis.params;
    let classes = Arc::new(ClassSet::new(r, p, n)?);
    let values = classes
        .normal_elements()
        .par_iter()
        .map(|h| Cyclotomic::from_root_counts(2 * r, &trace_counts(h, basis, indices, twist)))
        .collect();
    ClassFunction::new(classes, values)
}

/// Character of the model restricted to `scope`, on the classes of G(r,p,n).
pub fn model_character(basis: &ModelBasis, scope: &Scope) -> Result<ClassFunction> {
    character_on(basis, &basis.scope_indices(scope)?, Twist::Model)
}

/// Character of M¹ when antisymmetric vectors receive only ζ_r^{⟨g,v⟩}.
pub fn untwisted_antisymmetric_character(basis: &ModelBasis) -> Result<ClassFunction> {
    character_on(basis, &basis.scope_indices(&Scope::Antisymmetric)?, Twist::Untwisted)
}

/// Multiplicities ⟨f,χ⟩ over the rows of `table`, nonzero ones only.
///
/// Fails unless every multiplicity is a nonnegative integer and Σ m_χ·χ = f.
pub fn decompose(f: &ClassFunction, table: &CharacterTable) -> Result<Vec<(IrreducibleLabel, u64)>> {
    let mut out = Vec::new();
    let mut rebuilt: Vec<Cyclotomic> = vec![Cyclotomic::zero(1); f.values().len()];
    for (label, chi) in table.rows() {
        let m = f.inner_product(chi)?;
        let k = m
            .to_integer()
            .and_then(|k| u64::try_from(k).ok())
            .ok_or_else(|| Error::Inconsistency(format!("multiplicity of {label} is {m}")))?;
        if k > 0 {
            let scale = Cyclotomic::from_integer(k as i64);
            for (acc, v) in rebuilt.iter_mut().zip(chi.values()) {
                *acc = &*acc + &(&scale * v);
            }
            out.push((label.clone(), k));
        }
    }
    if rebuilt.as_slice() != f.values() {
        return Err(Error::Inconsistency("class function is not a combination of irreducible characters".into()));
    }
    Ok(out)
}

/// Outcome of comparing one block M(c) with its predicted decomposition.
#[derive(Clone, Debug, Serialize)]
pub struct ClassReport {
    pub class_type: InvolutionClassType,
    pub class_size: usize,
    pub predicted: Vec<IrreducibleLabel>,
    pub computed: Vec<IrreducibleLabel>,
    pub pass: bool,
}

/// Per-block verification of the decomposition M(c) ≅ ⊕_{[λ]∈Sh(c)} ρ^{ι(c)}_{[λ]}.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub group: String,
    pub dimension: usize,
    pub classes: Vec<ClassReport>,
    pub pass: bool,
}

fn expand(decomposition: Vec<(IrreducibleLabel, u64)>) -> Vec<IrreducibleLabel> {
    let mut out: Vec<IrreducibleLabel> =
        decomposition.into_iter().flat_map(|(l, k)| std::iter::repeat_n(l, k as usize)).collect();
    out.sort();
    out
}

/// Checks one block against its predicted labels.
pub fn verify_block(basis: &ModelBasis, table: &CharacterTable, class_type: &InvolutionClassType) -> Result<ClassReport> {
    let indices = basis.scope_indices(&Scope::Class(class_type.clone()))?;
    let chi = character_on(basis, &indices, Twist::Model)?;
    let computed = expand(decompose(&chi, table)?);
    let iota = class_type.iota();
    let mut predicted: Vec<IrreducibleLabel> = predicted_shapes(class_type, basis.params)?
        .into_iter()
        .map(|orbit| IrreducibleLabel { j: if orbit.stabilizer_order() > 1 { iota } else { 0 }, orbit })
        .collect();
    predicted.sort();
    let pass = predicted == computed;
    Ok(ClassReport { class_type: class_type.clone(), class_size: indices.len(), predicted, computed, pass })
}

/// Verifies every block of the model of `params` (or only `only`, when given).
pub fn verify_class_decomposition(
    params: GroupParams,
    only: Option<&InvolutionClassType>,
    max: u128,
) -> Result<VerificationReport> {
    let basis = ModelBasis::new(params, max)?;
    let table = character_table(params)?;
    let types: Vec<&InvolutionClassType> = match only {
        Some(t) => vec![t],
        None => basis.blocks().iter().map(|(t, _)| t).collect(),
    };
    let classes: Vec<ClassReport> =
        types.par_iter().map(|t| verify_block(&basis, &table, t)).collect::<Result<_>>()?;
    let pass = classes.iter().all(|c| c.pass);
    Ok(VerificationReport { schema: 1, group: params.to_string(), dimension: basis.len(), classes, pass })
}

/// ⟨χ_M, χ⟩ for one irreducible character.
#[derive(Clone, Debug, Serialize)]
pub struct Multiplicity {
    pub label: IrreducibleLabel,
    pub degree: u128,
    pub multiplicity: Cyclotomic,
}

/// Multiplicity of every irreducible in the whole model.
#[derive(Clone, Debug, Serialize)]
pub struct GelfandReport {
    pub schema: u32,
    pub group: String,
    pub dimension: usize,
    pub rows: Vec<Multiplicity>,
    pub pass: bool,
}

/// Computes ⟨χ_M, χ⟩ for every irreducible χ of G(r,p,q,n).
pub fn gelfand_check(params: GroupParams, max: u128) -> Result<GelfandReport> {
    let basis = ModelBasis::new(params, max)?;
    let table = character_table(params)?;
    let chi = model_character(&basis, &Scope::All)?;
    let rows: Vec<Multiplicity> = table
        .rows()
        .par_iter()
        .map(|(label, row)| {
            Ok(Multiplicity { label: label.clone(), degree: label.degree(), multiplicity: chi.inner_product(row)? })
        })
        .collect::<Result<_>>()?;
    let one = Cyclotomic::from_integer(1);
    let pass = rows.iter().all(|m| m.multiplicity == one);
    Ok(GelfandReport { schema: 1, group: params.to_string(), dimension: basis.len(), rows, pass })
}
