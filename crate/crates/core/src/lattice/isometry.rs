//! Isometry testing for positive definite lattices of rank at most 3.
//!
//! A change of basis `T` with `Tᵀ·G1·T = G2` is a choice of vectors
//! `x₁, …, x_r` of `L1` with `xᵢ·xⱼ = G2ᵢⱼ`. Candidates for `xⱼ` are the
//! vectors of norm `G2ⱼⱼ`; equal determinants force `det T = ±1`.

use super::enumerate::vectors_of_norm;
use super::gram::GramLattice;
use crate::error::{Error, Result};
use crate::matrix::{Int, IntMatrix};

const MAX_RANK: usize = 3;

/// A unimodular `T` with `Tᵀ·G1·T = G2`, or `None`.
pub fn isometry_exists(g1: &GramLattice, g2: &GramLattice) -> Result<Option<IntMatrix>> {
    marked_isometry(g1, g2, 0)
}

/// Like [`isometry_exists`] but additionally requires `T eᵢ = eᵢ` for the
/// first `fixed` basis vectors.
pub fn marked_isometry(g1: &GramLattice, g2: &GramLattice, fixed: usize) -> Result<Option<IntMatrix>> {
    for g in [g1, g2] {
        if g.rank() > MAX_RANK {
            return Err(Error::OutOfRange(format!(
                "isometry test for rank {} > {MAX_RANK}",
                g.rank()
            )));
        }
        if !g.is_positive_definite() {
            return Err(Error::OutOfRange(
                "isometry test needs positive definite lattices".into(),
            ));
        }
    }
    let r = g1.rank();
    if r != g2.rank() || g1.det() != g2.det() || fixed > r {
        return Ok(None);
    }
    let (a, b) = (g1.gram(), g2.gram());
    for i in 0..fixed {
        for j in 0..fixed {
            if a[(i, j)] != b[(i, j)] {
                return Ok(None);
            }
        }
    }
    // The search enumerates vectors of L1 with the norms on G2's diagonal;
    // search the other direction when that diagonal is smaller.
    let trace = |g: &IntMatrix| (0..r).map(|i| g[(i, i)].clone()).sum::<Int>();
    if trace(a) < trace(b) {
        return Ok(search(b, a, fixed).map(|t| {
            let inv = t
                .to_rational()
                .inverse()
                .and_then(|m| m.to_integer())
                .expect("unimodular");
            assert_eq!(
                &inv.transpose().mul(a).mul(&inv),
                b,
                "isometry witness failed re-verification"
            );
            inv
        }));
    }
    Ok(search(a, b, fixed))
}

fn search(a: &IntMatrix, b: &IntMatrix, fixed: usize) -> Option<IntMatrix> {
    let r = a.rows();
    let mut candidates = Vec::with_capacity(r);
    for j in 0..r {
        if j < fixed {
            let mut e = vec![Int::from(0); r];
            e[j] = Int::from(1);
            candidates.push(vec![e]);
        } else {
            candidates.push(vectors_of_norm(a, &b[(j, j)]).expect("checked positive definite"));
        }
    }
    let mut chosen: Vec<Vec<Int>> = Vec::with_capacity(r);
    if !extend(a, b, &candidates, &mut chosen) {
        return None;
    }
    let t = IntMatrix::from_cols(&chosen).expect("r columns of length r");
    assert_eq!(
        &t.transpose().mul(a).mul(&t),
        b,
        "isometry witness failed re-verification"
    );
    Some(t)
}

fn extend(a: &IntMatrix, b: &IntMatrix, candidates: &[Vec<Vec<Int>>], chosen: &mut Vec<Vec<Int>>) -> bool {
    let j = chosen.len();
    if j == candidates.len() {
        return true;
    }
    for x in &candidates[j] {
        if chosen.iter().enumerate().all(|(i, y)| a.bilinear(y, x) == b[(i, j)]) {
            chosen.push(x.clone());
            if extend(a, b, candidates, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}
