//! Seeded randomized agreement checks between the exact routines and
//! simple oracles. Used by `verify`; the proptest suites cover the same
//! ground with shrinking.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::lattice::{discriminant_group, dual_basis, smith_normal_form, BinaryForm, GramLattice};
use crate::matrix::{int, Int, IntMatrix, Rat, RatMatrix};

pub const SEED: u64 = 20;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PropertyTally {
    pub cases: usize,
    pub failures: Vec<String>,
}

impl PropertyTally {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failures.len() < 10 {
            self.failures.push(what());
        }
    }
}

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    let data = (0..rows)
        .map(|_| (0..cols).map(|_| int(rng.gen_range(-bound..=bound))).collect())
        .collect();
    IntMatrix::from_rows(data).expect("rectangular")
}

fn random_symmetric(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> IntMatrix {
    let mut m = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = int(rng.gen_range(-bound..=bound));
            m[(i, j)] = v.clone();
            m[(j, i)] = v;
        }
    }
    m
}

/// `u·m·v = d`, `u` and `v` unimodular, `d` diagonal with `d₁ | d₂ | …`.
pub fn smith_is_valid(m: &IntMatrix) -> bool {
    let s = smith_normal_form(m);
    let unimodular = |x: &IntMatrix| x.det().abs().is_one();
    if s.u.mul(m).mul(&s.v) != s.d || !unimodular(&s.u) || !unimodular(&s.v) {
        return false;
    }
    for i in 0..s.d.rows() {
        for j in 0..s.d.cols() {
            if i != j && !s.d[(i, j)].is_zero() {
                return false;
            }
        }
    }
    let diag: Vec<Int> = (0..s.d.rows().min(s.d.cols())).map(|i| s.d[(i, i)].clone()).collect();
    diag.iter().all(|v| !v.is_negative())
        && diag.windows(2).all(|w| {
            if w[0].is_zero() {
                w[1].is_zero()
            } else {
                w[1].is_multiple_of(&w[0])
            }
        })
}

/// Orders multiply to `|det|`, each generator lies in `L*`, and has exactly
/// the stated order modulo `L`; the dual basis inverts the Gram matrix.
pub fn disc_group_is_valid(lattice: &GramLattice) -> bool {
    let g = discriminant_group(lattice);
    if g.order() != lattice.det().abs() {
        return false;
    }
    let gram = lattice.gram().to_rational();
    let integral = |v: &[Rat]| v.iter().all(Rat::is_integer);
    for (x, d) in g.generators.iter().zip(&g.invariant_factors) {
        if !integral(&gram.mul_vec(x)) {
            return false;
        }
        let times = |k: &Int| x.iter().map(|c| c * Rat::from_integer(k.clone())).collect::<Vec<_>>();
        if !integral(&times(d)) {
            return false;
        }
        if prime_factors(d).iter().any(|p| integral(&times(&(d / p)))) {
            return false;
        }
    }
    let dual = dual_basis(lattice);
    gram.mul(&dual.transpose()) == RatMatrix::identity(lattice.rank())
}

fn prime_factors(n: &Int) -> Vec<Int> {
    let mut out = Vec::new();
    let mut rest = n.abs();
    let mut p = Int::from(2);
    while &p * &p <= rest {
        if rest.is_multiple_of(&p) {
            while rest.is_multiple_of(&p) {
                rest /= &p;
            }
            out.push(p.clone());
        }
        p += 1;
    }
    if rest > Int::one() {
        out.push(rest);
    }
    out
}

/// SNF on `count` random matrices of shape up to 4×4, and the discriminant
/// group and dual basis of the nondegenerate symmetric ones.
pub fn lattice_suite(count: usize, bound: i64) -> PropertyTally {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut tally = PropertyTally::default();
    for _ in 0..count {
        let (r, c) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let m = random_matrix(&mut rng, r, c, bound);
        tally.record(smith_is_valid(&m), || format!("smith {m}"));
        let n = rng.gen_range(1..=4);
        let s = random_symmetric(&mut rng, n, bound);
        if let Ok(l) = GramLattice::new(s.clone()) {
            tally.record(disc_group_is_valid(&l), || format!("disc {s}"));
        }
    }
    tally
}

/// All `(x, y) ≠ 0` in the box `|x|, |y| ≤ radius` with `f(x, y) = n`.
pub fn brute_representations(f: (i64, i64, i64), n: i64, radius: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for x in -radius..=radius {
        for y in -radius..=radius {
            if (x, y) != (0, 0) && f.0 * x * x + f.1 * x * y + f.2 * y * y == n {
                out.push((x, y));
            }
        }
    }
    out.sort_unstable();
    out
}

/// The representation solver against a box search on `count` random
/// positive definite forms. The box is wide enough to contain every solution:
/// `|y| ≤ √(4an/Δ)` and `|x| ≤ √(4cn/Δ)` with `Δ ≥ 3`.
pub fn representation_suite(count: usize) -> PropertyTally {
    const COEFF: i64 = 25;
    const MAX_N: i64 = 60;
    let radius = ((4 * COEFF * MAX_N) as f64 / 3.0).sqrt().ceil() as i64;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    let mut tally = PropertyTally::default();
    while tally.cases < count {
        let (a, b, c) = (
            rng.gen_range(1..=COEFF),
            rng.gen_range(-COEFF..=COEFF),
            rng.gen_range(1..=COEFF),
        );
        if b * b >= 4 * a * c {
            continue;
        }
        let form = BinaryForm::new(a, b, c);
        let mut ok = true;
        for n in 1..=MAX_N {
            let mut fast: Vec<(i64, i64)> = form
                .representations(&int(n))
                .expect("positive definite")
                .iter()
                .map(|(x, y)| (crate::matrix::small(x), crate::matrix::small(y)))
                .collect();
            fast.sort_unstable();
            ok &= fast == brute_representations((a, b, c), n, radius);
        }
        tally.record(ok, || format!("form {form}"));
    }
    tally
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        assert!(lattice_suite(50, 50).passed());
        assert!(representation_suite(5).passed());
    }

    #[test]
    fn factors() {
        assert_eq!(prime_factors(&int(360)), vec![int(2), int(3), int(5)]);
        assert_eq!(prime_factors(&int(-97)), vec![int(97)]);
        assert!(prime_factors(&int(1)).is_empty());
    }

    #[test]
    fn brute_finds_both_signs() {
        assert_eq!(
            brute_representations((1, 0, 1), 1, 3),
            vec![(-1, 0), (0, -1), (0, 1), (1, 0)]
        );
    }
}
