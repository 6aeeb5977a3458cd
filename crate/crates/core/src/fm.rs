//! Fourier–Mukai partner counts for very general cubics of discriminant `d`
//! with `9 ∤ d`, together with the glue-group enumeration that underlies
//! them.

use std::collections::BTreeMap;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ResidueCase {
    #[serde(rename = "2 mod 6")]
    TwoMod6,
    #[serde(rename = "0 mod 6")]
    ZeroMod6,
}

fn residue_case(d: i64) -> Result<ResidueCase> {
    if d < 8 || d % 2 != 0 || d % 9 == 0 {
        return Err(Error::OutsideCountingHypothesis(d));
    }
    match d % 6 {
        2 => Ok(ResidueCase::TwoMod6),
        0 => Ok(ResidueCase::ZeroMod6),
        _ => Err(Error::OutsideCountingHypothesis(d)),
    }
}

/// `d = 2^a · ∏ pᵢ^{eᵢ}`: returns `a` and the number of distinct odd primes.
fn shape(mut d: i64) -> (u32, u32) {
    let a = d.trailing_zeros();
    d >>= a;
    let mut k = 0;
    let mut p = 3;
    while p * p <= d {
        if d % p == 0 {
            k += 1;
            while d % p == 0 {
                d /= p;
            }
        }
        p += 2;
    }
    if d > 1 {
        k += 1;
    }
    (a, k)
}

pub fn m_of(d: i64) -> Result<u64> {
    residue_case(d)?;
    let (a, k) = shape(d);
    Ok(match (a, k) {
        (_, 0) => 1,
        (1, k) => 1 << (k - 1),
        (_, k) => 1 << k,
    })
}

pub fn fm_partner_count(d: i64) -> Result<u64> {
    let m = m_of(d)?;
    Ok(match residue_case(d)? {
        ResidueCase::TwoMod6 => m,
        ResidueCase::ZeroMod6 => m / 2,
    })
}

/// `|B_c|` for every residue `c` with `B_c` nonempty, where
/// `B_c = {b ∈ (Z/d)* : 3b²c ≡ 1 mod 2d}` if `d ≡ 2 (mod 6)` and
/// `B_c = {b ∈ (Z/(d/3))* : b² ≡ c mod 2d/3}` if `d ≡ 0 (mod 6)`.
pub fn glue_sizes(d: i64) -> Result<BTreeMap<i64, usize>> {
    let case = residue_case(d)?;
    let (units_mod, modulus) = match case {
        ResidueCase::TwoMod6 => (d, 2 * d),
        ResidueCase::ZeroMod6 => (d / 3, 2 * d / 3),
    };
    let units: Vec<i64> = (1..units_mod).filter(|b| b.gcd(&units_mod) == 1).collect();
    let mut sizes = BTreeMap::new();
    for c in 0..modulus {
        let n = units
            .iter()
            .filter(|&&b| match case {
                ResidueCase::TwoMod6 => (3 * b * b % modulus * c) % modulus == 1,
                ResidueCase::ZeroMod6 => (b * b) % modulus == c,
            })
            .count();
        if n > 0 {
            sizes.insert(c, n);
        }
    }
    if sizes.is_empty() {
        return Err(Error::InvalidDiscriminant(format!("no glue for d = {d}")));
    }
    Ok(sizes)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SLatticeSpec {
    pub d: i64,
    pub ell_sq: i64,
}

/// The rank-one lattice `S = ⟨ℓ⟩`.
pub fn s_lattice(d: i64) -> Result<SLatticeSpec> {
    if d < 8 || d % 2 != 0 {
        return Err(Error::InvalidDiscriminant(d.to_string()));
    }
    let ell_sq = match d % 6 {
        2 => -3 * d,
        0 => -d / 3,
        _ => return Err(Error::InvalidDiscriminant(d.to_string())),
    };
    Ok(SLatticeSpec { d, ell_sq })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FMCountReport {
    pub d: i64,
    pub m: u64,
    pub partner_count: u64,
    pub residue_case: ResidueCase,
    pub ell_sq: i64,
    pub glue_sizes: BTreeMap<i64, usize>,
    /// Common size of the nonempty `B_c`, when they agree.
    pub uniform_glue_size: Option<usize>,
    /// `|M_{S,T}| / 2` as read off from the glue sets.
    pub glue_partner_count: Option<usize>,
}

impl FMCountReport {
    pub fn consistent(&self) -> bool {
        self.glue_partner_count == Some(self.partner_count as usize)
    }
}

pub fn fm_count(d: i64) -> Result<FMCountReport> {
    let m = m_of(d)?;
    let glue = glue_sizes(d)?;
    let mut sizes = glue.values().copied();
    let first = sizes.next();
    let uniform = first.filter(|&s| sizes.all(|t| t == s));
    Ok(FMCountReport {
        d,
        m,
        partner_count: fm_partner_count(d)?,
        residue_case: residue_case(d)?,
        ell_sq: s_lattice(d)?.ell_sq,
        glue_sizes: glue,
        uniform_glue_size: uniform,
        glue_partner_count: uniform.map(|s| s / 2),
    })
}

/// Every `d ≤ max` satisfying the counting hypothesis.
pub fn valid_counting_discs(max: i64) -> impl Iterator<Item = i64> {
    (8..=max).filter(|&d| residue_case(d).is_ok())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form() {
        assert_eq!(m_of(20).unwrap(), 2);
        assert_eq!(m_of(14).unwrap(), 1);
        assert_eq!(m_of(42).unwrap(), 2);
        assert_eq!(m_of(8).unwrap(), 1);
        assert_eq!(fm_partner_count(20).unwrap(), 2);
        assert_eq!(fm_partner_count(26).unwrap(), 1);
        assert_eq!(fm_partner_count(42).unwrap(), 1);
    }

    #[test]
    fn hypothesis_enforced() {
        for d in [7, 9, 18, 36, 10, 4] {
            assert_eq!(m_of(d), Err(Error::OutsideCountingHypothesis(d)), "{d}");
        }
    }

    #[test]
    fn glue_examples() {
        assert!(glue_sizes(20).unwrap().values().all(|&s| s == 4));
        assert!(glue_sizes(14).unwrap().values().all(|&s| s == 2));
        let g42 = glue_sizes(42).unwrap();
        assert_eq!(g42.keys().copied().collect::<Vec<_>>(), vec![1, 9, 25]);
        assert!(g42.values().all(|&s| s == 2));
    }

    #[test]
    fn s_lattice_norms() {
        assert_eq!(s_lattice(20).unwrap().ell_sq, -60);
        assert_eq!(s_lattice(12).unwrap().ell_sq, -4);
        assert_eq!(s_lattice(14).unwrap().ell_sq, -42);
    }
}
