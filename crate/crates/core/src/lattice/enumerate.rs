//! Fincke–Pohst style enumeration of lattice vectors of bounded norm.
//!
//! The quadratic form is written as `Σ qᵢ (xᵢ + Σ_{j>i} μᵢⱼ xⱼ)²` with exact
//! rational `qᵢ`, `μᵢⱼ`; each coordinate is then confined to an interval
//! around its running center, from the last coordinate to the first.

use num_traits::{Signed, Zero};

use super::gram::GramLattice;
use crate::error::{Error, Result};
use crate::matrix::{rat_from_int, Int, IntMatrix, Rat};

struct Decomposition {
    q: Vec<Rat>,
    mu: Vec<Vec<Rat>>,
}

fn decompose(gram: &IntMatrix) -> Result<Decomposition> {
    let n = gram.rows();
    let mut a = gram.to_rational();
    let mut q = Vec::with_capacity(n);
    let mut mu = vec![vec![Rat::zero(); n]; n];
    for i in 0..n {
        let d = a[(i, i)].clone();
        if !d.is_positive() {
            return Err(Error::NotPositiveDefinite);
        }
        for j in i + 1..n {
            mu[i][j] = &a[(i, j)] / &d;
        }
        for k in i + 1..n {
            for l in k..n {
                let v = &mu[i][k] * &a[(i, l)];
                a[(k, l)] -= v;
                if l != k {
                    let w = a[(k, l)].clone();
                    a[(l, k)] = w;
                }
            }
        }
        q.push(d);
    }
    Ok(Decomposition { q, mu })
}

/// All nonzero `x` with `xᵀ·gram·x ≤ bound`, both signs, sorted
/// lexicographically.
pub fn vectors_up_to(gram: &IntMatrix, bound: &Int) -> Result<Vec<Vec<Int>>> {
    if !gram.is_square() || !gram.is_symmetric() {
        return Err(Error::Dimension("enumeration needs a symmetric square matrix".into()));
    }
    let dec = decompose(gram)?;
    let n = gram.rows();
    let mut out = Vec::new();
    if bound.is_negative() || n == 0 {
        return Ok(out);
    }
    let mut x = vec![Int::zero(); n];
    descend(&dec, n - 1, rat_from_int(bound), &mut x, &mut out);
    out.sort();
    Ok(out)
}

fn descend(dec: &Decomposition, i: usize, budget: Rat, x: &mut Vec<Int>, out: &mut Vec<Vec<Int>>) {
    let mut center = Rat::zero();
    for (mu, xj) in dec.mu[i][i + 1..].iter().zip(&x[i + 1..]) {
        center -= mu * rat_from_int(xj);
    }
    let t = &budget / &dec.q[i];
    let r = t.floor().to_integer().sqrt();
    let lo = center.floor().to_integer() - &r - 1;
    let hi = center.ceil().to_integer() + &r + 1;
    let mut xi = lo;
    while xi <= hi {
        let diff = rat_from_int(&xi) - &center;
        let used = &dec.q[i] * &diff * &diff;
        if used <= budget {
            x[i] = xi.clone();
            if i == 0 {
                if x.iter().any(|v| !v.is_zero()) {
                    out.push(x.clone());
                }
            } else {
                descend(dec, i - 1, &budget - &used, x, out);
            }
        }
        xi += 1;
    }
    x[i] = Int::zero();
}

/// All `x` with `xᵀ·gram·x = n`, sorted lexicographically.
pub fn vectors_of_norm(gram: &IntMatrix, n: &Int) -> Result<Vec<Vec<Int>>> {
    let all = vectors_up_to(gram, n)?;
    Ok(all.into_iter().filter(|x| &gram.bilinear(x, x) == n).collect())
}

/// `x` or `-x`, whichever has its first nonzero coordinate positive.
pub fn sign_normalized(x: &[Int]) -> Vec<Int> {
    match x.iter().find(|v| !v.is_zero()) {
        Some(v) if v.is_negative() => x.iter().map(|v| -v).collect(),
        _ => x.to_vec(),
    }
}

/// Whether some nonzero vector has norm exactly `n`. The witness is the
/// lexicographically least one among those with a positive leading
/// coordinate.
pub fn has_vector_of_norm(lattice: &GramLattice, n: &Int) -> Result<Option<Vec<Int>>> {
    find_vector_of_norm(lattice.gram(), n)
}

pub fn find_vector_of_norm(gram: &IntMatrix, n: &Int) -> Result<Option<Vec<Int>>> {
    let found = vectors_of_norm(gram, n)?;
    Ok(found.iter().map(|x| sign_normalized(x)).min())
}

/// Number of vectors (counting `x` and `-x` separately) of norm exactly `n`.
pub fn count_vectors_of_norm(gram: &IntMatrix, n: &Int) -> Result<usize> {
    Ok(vectors_of_norm(gram, n)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::int;

    fn brute(gram: &IntMatrix, n: i64, radius: i64) -> usize {
        let k = gram.rows();
        let mut count = 0;
        let mut x = vec![-radius; k];
        loop {
            let v: Vec<Int> = x.iter().map(|&c| int(c)).collect();
            if gram.bilinear(&v, &v) == int(n) && x.iter().any(|&c| c != 0) {
                count += 1;
            }
            let mut i = 0;
            loop {
                if i == k {
                    return count;
                }
                x[i] += 1;
                if x[i] <= radius {
                    break;
                }
                x[i] = -radius;
                i += 1;
            }
        }
    }

    #[test]
    fn rejects_indefinite() {
        let u = IntMatrix::from_arrays(&[[0, 1], [1, 0]]);
        assert_eq!(vectors_up_to(&u, &int(4)).unwrap_err(), Error::NotPositiveDefinite);
        assert_eq!(
            Error::NotPositiveDefinite.to_string(),
            "enumeration requires positive definite"
        );
    }

    #[test]
    fn a2_has_six_roots() {
        let a2 = GramLattice::from_arrays(&[[2, -1], [-1, 2]]).unwrap();
        assert_eq!(count_vectors_of_norm(a2.gram(), &int(2)).unwrap(), 6);
        let w = has_vector_of_norm(&a2, &int(2)).unwrap().unwrap();
        assert_eq!(w, vec![int(0), int(1)]);
    }

    #[test]
    fn m0_has_no_norm_two() {
        let m0 = GramLattice::from_arrays(&[[3, 1, 1], [1, 7, 0], [1, 0, 9]]).unwrap();
        assert_eq!(has_vector_of_norm(&m0, &int(2)).unwrap(), None);
        let w = has_vector_of_norm(&m0, &int(3)).unwrap().unwrap();
        assert_eq!(w, vec![int(1), int(0), int(0)]);
    }

    #[test]
    fn matches_box_search_on_skewed_forms() {
        for rows in [
            [[5, 4, 1], [4, 5, 2], [1, 2, 7]],
            [[3, 1, 1], [1, 7, -16], [1, -16, 49]],
            [[2, 1, 0], [1, 2, 1], [0, 1, 2]],
        ] {
            let g = IntMatrix::from_arrays(&rows);
            for n in 1..=12 {
                assert_eq!(
                    count_vectors_of_norm(&g, &int(n)).unwrap(),
                    brute(&g, n, 12),
                    "{g} n={n}"
                );
            }
        }
    }
}
