use std::collections::BTreeMap;

use vcubic::fm::{fm_count, fm_partner_count, glue_sizes, m_of, s_lattice, valid_counting_discs};
use vcubic::Error;

/// `m` straight from `d = 2ᵃ p₁^{e₁} ⋯ p_k^{e_k}`.
fn m_oracle(d: i64) -> u64 {
    let a = d.trailing_zeros();
    let odd_primes = (3..=d).filter(|&p| d % p == 0 && (2..p).all(|q| p % q != 0)).count() as u32;
    match (a, odd_primes) {
        (_, 0) => 1,
        (1, k) => 1 << (k - 1),
        (_, k) => 1 << k,
    }
}

/// `B_c` by a direct double loop.
fn glue_oracle(d: i64) -> BTreeMap<i64, usize> {
    let gcd = |mut a: i64, mut b: i64| {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    };
    let mut out = BTreeMap::new();
    if d % 6 == 2 {
        for c in 0..2 * d {
            let n = (1..d)
                .filter(|&b| gcd(b, d) == 1 && (3 * b * b * c - 1).rem_euclid(2 * d) == 0)
                .count();
            if n > 0 {
                out.insert(c, n);
            }
        }
    } else {
        let q = d / 3;
        for c in 0..2 * q {
            let n = (1..q)
                .filter(|&b| gcd(b, q) == 1 && (b * b - c).rem_euclid(2 * q) == 0)
                .count();
            if n > 0 {
                out.insert(c, n);
            }
        }
    }
    out
}

#[test]
fn closed_form_examples() {
    assert_eq!(m_of(20).unwrap(), 2);
    assert_eq!(m_of(14).unwrap(), 1);
    assert_eq!(m_of(42).unwrap(), 2);
    for (d, n) in [(20, 2), (14, 1), (26, 1), (38, 1), (62, 1), (42, 1)] {
        assert_eq!(fm_partner_count(d).unwrap(), n, "d = {d}");
    }
    for bad in [7, 18, 36, 4, 9] {
        assert!(
            matches!(m_of(bad), Err(Error::OutsideCountingHypothesis(_))),
            "d = {bad}"
        );
    }
}

#[test]
fn m_agrees_with_factorization_oracle() {
    for d in valid_counting_discs(200) {
        assert_eq!(m_of(d).unwrap(), m_oracle(d), "d = {d}");
    }
}

#[test]
fn glue_sets_against_oracle() {
    for d in [14, 20, 26, 42, 48, 62, 78] {
        assert_eq!(glue_sizes(d).unwrap(), glue_oracle(d), "d = {d}");
    }
    assert!(glue_sizes(20).unwrap().values().all(|&n| n == 4));
    assert!(glue_sizes(14).unwrap().values().all(|&n| n == 2));
    assert!(glue_sizes(42).unwrap().values().all(|&n| n == 2));
}

#[test]
fn uniform_glue_up_to_200() {
    for d in valid_counting_discs(200) {
        let r = fm_count(d).unwrap();
        let per_class = if d % 6 == 2 { 2 * r.m } else { r.m } as usize;
        assert_eq!(r.uniform_glue_size, Some(per_class), "d = {d}");
        assert!(r.consistent(), "d = {d}");
    }
}

#[test]
fn ell_squared() {
    assert_eq!(s_lattice(20).unwrap().ell_sq, -60);
    assert_eq!(s_lattice(12).unwrap().ell_sq, -4);
    assert_eq!(s_lattice(14).unwrap().ell_sq, -42);
}
