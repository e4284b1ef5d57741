//! The colored Robinson–Schensted correspondence and its projective version.
//!
//! For each color i the positions j with z_j = i are read in increasing order;
//! σ_j is row-inserted into P^{(i)} and j is recorded in Q^{(i)}.

use serde::Serialize;

use crate::colored_perm::{ColoredPermutation, ProjectiveElement};
use crate::error::{Error, Result};
use crate::shapes::{ShapeOrbit, StandardMultitableau};

/// Row-inserts x, returning the (row, column) of the new box.
fn insert(rows: &mut Vec<Vec<usize>>, mut x: usize) -> (usize, usize) {
    for (i, row) in rows.iter_mut().enumerate() {
        match row.iter().position(|&y| y > x) {
            Some(k) => x = std::mem::replace(&mut row[k], x),
            None => {
                row.push(x);
                return (i, row.len() - 1);
            }
        }
    }
    rows.push(vec![x]);
    (rows.len() - 1, 0)
}

/// Removes the corner at the end of `row` and reverse-bumps to the top row.
fn uninsert(rows: &mut Vec<Vec<usize>>, row: usize) -> usize {
    let mut x = rows[row].pop().expect("corner box");
    if rows[row].is_empty() {
        rows.pop();
    }
    for i in (0..row).rev() {
        let k = rows[i].iter().rposition(|&y| y < x).expect("bumped entry");
        x = std::mem::replace(&mut rows[i][k], x);
    }
    x
}

/// The pair (P, Q) of standard multitableaux of equal shape.
pub fn rs(g: &ColoredPermutation) -> (StandardMultitableau, StandardMultitableau) {
    let r = g.r();
    let mut p = vec![Vec::new(); r];
    let mut q = vec![Vec::new(); r];
    for (j, (&s, &z)) in g.perm().iter().zip(g.colors()).enumerate() {
        let (row, col) = insert(&mut p[z], s + 1);
        let rows: &mut Vec<Vec<usize>> = &mut q[z];
        if row == rows.len() {
            rows.push(Vec::new());
        }
        debug_assert_eq!(rows[row].len(), col);
        rows[row].push(j + 1);
    }
    (StandardMultitableau::from_rows_unchecked(p), StandardMultitableau::from_rows_unchecked(q))
}

/// Inverse of [`rs`].
pub fn rs_inverse(p: &StandardMultitableau, q: &StandardMultitableau) -> Result<ColoredPermutation> {
    if p.shape() != q.shape() {
        return Err(Error::Domain(format!("shapes {} and {} differ", p.shape(), q.shape())));
    }
    let r = p.components().len();
    let n = p.shape().size();
    let mut perm = vec![usize::MAX; n];
    let mut colors = vec![0; n];
    for (i, (pc, qc)) in p.components().iter().zip(q.components()).enumerate() {
        let mut prow = pc.clone();
        let mut qrow = qc.clone();
        while !qrow.is_empty() {
            let (row, _) = qrow
                .iter()
                .enumerate()
                .map(|(k, row)| (k, *row.last().expect("nonempty row")))
                .max_by_key(|&(_, v)| v)
                .expect("nonempty tableau");
            let j = qrow[row].pop().expect("corner");
            if qrow[row].is_empty() {
                qrow.pop();
            }
            let s = uninsert(&mut prow, row);
            perm[j - 1] = s - 1;
            colors[j - 1] = i;
        }
    }
    ColoredPermutation::from_parts(r, perm, colors)
}

/// Image of a projective element: both tableaux up to the shift by r/q.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ProjectiveTableauPair {
    pub p: StandardMultitableau,
    pub q: StandardMultitableau,
}

fn canonical_shift(t: &StandardMultitableau, step: usize, count: usize) -> StandardMultitableau {
    (0..count).map(|k| t.shift(k * step)).min().expect("count > 0")
}

/// The projective RS map on G(r,p,q,n); each tableau is reduced to the least
/// member of its Γ_q-orbit independently.
pub fn projective_rs(g: &ProjectiveElement) -> ProjectiveTableauPair {
    let (p, q) = rs(g.rep());
    let step = g.rep().r() / g.q();
    ProjectiveTableauPair { p: canonical_shift(&p, step, g.q()), q: canonical_shift(&q, step, g.q()) }
}

/// Sh(v): the Γ-orbit of the RS shape of an absolute involution of the dual group,
/// where the orbit is taken under the scalar group of `v`.
pub fn shape_of(v: &ProjectiveElement) -> Result<ShapeOrbit> {
    if !v.is_absolute_involution() {
        return Err(Error::Domain(format!("{v} is not an absolute involution")));
    }
    Ok(ShapeOrbit::of(&rs(v.rep()).0.shape(), v.q()))
}
