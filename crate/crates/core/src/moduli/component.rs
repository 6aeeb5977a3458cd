use num_integer::Roots;
use serde::Serialize;

use super::discs::{disc_nonempty, tau_bound};
use crate::error::{Error, Result};
use crate::lattice::ambient::layout::{E1, E2, F1, F2, ONES, RANK};
use crate::lattice::{find_vector_of_norm, i21_2, is_positive_definite, AmbientVectors};
use crate::matrix::{int, IntMatrix};

/// Residues of the two discriminants mod 6.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ComponentCase {
    #[serde(rename = "2&2")]
    TwoTwo,
    #[serde(rename = "2&0")]
    TwoZero,
    #[serde(rename = "0&0")]
    ZeroZero,
}

/// One of the lattices `M_τ ⊆ I₂₁,₂` spanned by `α₁ = h²`, `α₂`, `α₃` with
/// `⟨α₁, α₂⟩` of discriminant `d1` and `⟨α₁, α₃⟩` of discriminant `d2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentSpec {
    pub d1: i64,
    pub d2: i64,
    pub tau: i64,
    pub case: ComponentCase,
    pub gram: IntMatrix,
    pub ambient: AmbientVectors,
    pub disc: i64,
    pub closed_form_disc: i64,
    pub positive_definite: bool,
    pub norm2_witness: Option<Vec<i64>>,
    pub saturated: bool,
    pub k_d1_saturated: bool,
    pub k_d2_saturated: bool,
}

impl ComponentSpec {
    pub fn norm2_free(&self) -> bool {
        self.positive_definite && self.norm2_witness.is_none()
    }

    pub fn all_saturated(&self) -> bool {
        self.saturated && self.k_d1_saturated && self.k_d2_saturated
    }
}

fn residue(d: i64) -> Result<i64> {
    match d.rem_euclid(6) {
        r @ (0 | 2) if d >= 2 => Ok(r),
        _ => Err(Error::InvalidDiscriminant(format!("{d} is not ≡ 0, 2 (mod 6)"))),
    }
}

/// The order in which the template is built: mixed cases put the
/// `2 (mod 6)` discriminant first.
pub fn normalize(d1: i64, d2: i64) -> Result<(i64, i64, ComponentCase)> {
    Ok(match (residue(d1)?, residue(d2)?) {
        (2, 2) => (d1, d2, ComponentCase::TwoTwo),
        (2, 0) => (d1, d2, ComponentCase::TwoZero),
        (0, 2) => (d2, d1, ComponentCase::TwoZero),
        _ => (d1, d2, ComponentCase::ZeroZero),
    })
}

/// `(d1·d2 − (1 − 3τ)²)/3` or `d1·d2/3 − 3τ²`.
pub fn closed_form_disc(case: ComponentCase, d1: i64, d2: i64, tau: i64) -> i64 {
    match case {
        ComponentCase::TwoTwo => (d1 * d2 - (1 - 3 * tau).pow(2)) / 3,
        _ => d1 * d2 / 3 - 3 * tau * tau,
    }
}

fn ambient_vectors(case: ComponentCase, n1: i64, n2: i64, tau: i64) -> IntMatrix {
    let mut rows = vec![vec![0i64; RANK]; 3];
    for k in 0..3 {
        rows[0][ONES + k] = 1;
    }
    rows[1][E1] = 1;
    rows[1][F1] = n1;
    rows[1][F2] = tau;
    rows[2][E2] = 1;
    rows[2][F2] = n2;
    if case != ComponentCase::ZeroZero {
        rows[1][ONES + 1] = 1;
    }
    if case == ComponentCase::TwoTwo {
        rows[2][ONES + 2] = 1;
    }
    IntMatrix::from_i64_rows(&rows).expect("rectangular")
}

/// Builds `M_τ` without range restrictions and records its properties.
/// Mixed-residue pairs are reordered so that `d1 ≡ 2 (mod 6)`.
pub fn component_template(d1: i64, d2: i64, tau: i64) -> Result<ComponentSpec> {
    let (d1, d2, case) = normalize(d1, d2)?;
    if case != ComponentCase::TwoTwo && tau < 0 {
        return Err(Error::OutOfRange(format!("tau = {tau} < 0 for mixed or 0&0 residues")));
    }
    let (n1, n2) = (d1 / 6, d2 / 6);
    let ambient = AmbientVectors::new(i21_2(), ambient_vectors(case, n1, n2, tau))?;
    let gram = ambient.induced_gram();
    let disc: i64 = gram
        .det()
        .try_into()
        .map_err(|_| Error::OutOfRange("determinant".into()))?;
    let positive_definite = is_positive_definite(&gram);
    let norm2_witness = if positive_definite {
        find_vector_of_norm(&gram, &int(2))?.map(|v| v.iter().map(crate::matrix::small).collect())
    } else {
        None
    };
    Ok(ComponentSpec {
        d1,
        d2,
        tau,
        case,
        closed_form_disc: closed_form_disc(case, d1, d2, tau),
        disc,
        positive_definite,
        norm2_witness,
        saturated: ambient.is_saturated()?,
        k_d1_saturated: ambient.select(&[0, 1]).is_saturated()?,
        k_d2_saturated: ambient.select(&[0, 2]).is_saturated()?,
        gram,
        ambient,
    })
}

/// The `τ` values covered by the existence statement: `|τ| ≤ N` when both
/// discriminants are `2 (mod 6)`, `0 ≤ τ ≤ N` otherwise.
pub fn tau_range(d1: i64, d2: i64) -> Result<std::ops::RangeInclusive<i64>> {
    let (_, _, case) = normalize(d1, d2)?;
    let n = tau_bound(d1, d2)?;
    Ok(if case == ComponentCase::TwoTwo { -n..=n } else { 0..=n })
}

/// `M_τ` for `τ` in the guaranteed range; fails when it contains a vector of
/// norm 2, which would make the component empty.
pub fn component_gram(d1: i64, d2: i64, tau: i64) -> Result<ComponentSpec> {
    if !disc_nonempty(d1) || !disc_nonempty(d2) {
        return Err(Error::InvalidDiscriminant(format!("({d1}, {d2})")));
    }
    let range = tau_range(d1, d2)?;
    if !range.contains(&tau) {
        return Err(Error::OutOfRange(format!(
            "tau = {tau} outside {}..={}",
            range.start(),
            range.end()
        )));
    }
    let spec = component_template(d1, d2, tau)?;
    if !spec.positive_definite {
        return Err(Error::NotPositiveDefinite);
    }
    if let Some(w) = &spec.norm2_witness {
        return Err(Error::Norm2Vector(w.clone()));
    }
    Ok(spec)
}

/// Candidate `τ` for a rank-3 lattice of determinant `det` to match the
/// template of `(d1, d2)`.
pub fn tau_candidates(d1: i64, d2: i64, det: i64) -> Result<Vec<i64>> {
    let (d1, d2, case) = normalize(d1, d2)?;
    let mut out = Vec::new();
    match case {
        ComponentCase::TwoTwo => {
            let sq = d1 * d2 - 3 * det;
            if sq < 0 {
                return Ok(out);
            }
            let s = sq.sqrt();
            if s * s != sq {
                return Ok(out);
            }
            // 1 − 3τ = ±s
            for t in [1 - s, 1 + s] {
                if t % 3 == 0 && !out.contains(&(t / 3)) {
                    out.push(t / 3);
                }
            }
        }
        _ => {
            let rest = d1 * d2 / 3 - det;
            if rest < 0 || rest % 3 != 0 {
                return Ok(out);
            }
            let s = (rest / 3).sqrt();
            if s * s == rest / 3 {
                out.push(s);
            }
        }
    }
    out.sort();
    Ok(out)
}
