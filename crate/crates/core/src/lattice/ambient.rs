use num_traits::One;
use serde::Serialize;

use super::gram::GramLattice;
use super::snf::smith_normal_form;
use crate::error::{Error, Result};
use crate::matrix::{Int, IntMatrix};

/// Gram matrix of `E₈` (positive definite, Bourbaki labelling, 0-based).
pub const E8: [[i64; 8]; 8] = [
    [2, 0, -1, 0, 0, 0, 0, 0],
    [0, 2, 0, -1, 0, 0, 0, 0],
    [-1, 0, 2, -1, 0, 0, 0, 0],
    [0, -1, -1, 2, -1, 0, 0, 0],
    [0, 0, 0, -1, 2, -1, 0, 0],
    [0, 0, 0, 0, -1, 2, -1, 0],
    [0, 0, 0, 0, 0, -1, 2, -1],
    [0, 0, 0, 0, 0, 0, -1, 2],
];

/// Coordinate layout of `I₂₁,₂ = E₈ ⊕ E₈ ⊕ U ⊕ U ⊕ ⟨1⟩³`.
pub mod layout {
    pub const RANK: usize = 23;
    pub const E1: usize = 16;
    pub const F1: usize = 17;
    pub const E2: usize = 18;
    pub const F2: usize = 19;
    /// First of the three `⟨1⟩` summands.
    pub const ONES: usize = 20;
}

/// The middle cohomology lattice of a cubic fourfold, signature (21, 2).
pub fn i21_2() -> GramLattice {
    use layout::*;
    let mut g = IntMatrix::zeros(RANK, RANK);
    for block in [0, 8] {
        for i in 0..8 {
            for j in 0..8 {
                g[(block + i, block + j)] = Int::from(E8[i][j]);
            }
        }
    }
    for (e, f) in [(E1, F1), (E2, F2)] {
        g[(e, f)] = Int::one();
        g[(f, e)] = Int::one();
    }
    for k in 0..3 {
        g[(ONES + k, ONES + k)] = Int::one();
    }
    GramLattice::new(g).expect("I_{21,2} is unimodular")
}

/// Explicit vectors inside a fixed ambient lattice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AmbientVectors {
    #[serde(skip)]
    ambient: GramLattice,
    vectors: IntMatrix,
}

impl AmbientVectors {
    /// `vectors` holds one coordinate row per generator.
    pub fn new(ambient: GramLattice, vectors: IntMatrix) -> Result<Self> {
        if vectors.cols() != ambient.rank() {
            return Err(Error::Dimension(format!(
                "vectors have {} coordinates, ambient rank is {}",
                vectors.cols(),
                ambient.rank()
            )));
        }
        Ok(AmbientVectors { ambient, vectors })
    }

    pub fn ambient(&self) -> &GramLattice {
        &self.ambient
    }

    pub fn vectors(&self) -> &IntMatrix {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.rows()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.rows() == 0
    }

    pub fn induced_gram(&self) -> IntMatrix {
        self.ambient.restrict(&self.vectors)
    }

    /// Sub-family spanned by the given rows.
    pub fn select(&self, rows: &[usize]) -> AmbientVectors {
        let picked = rows.iter().map(|&i| self.vectors.row(i)).collect();
        AmbientVectors {
            ambient: self.ambient.clone(),
            vectors: IntMatrix::from_rows(picked).expect("rows of equal length"),
        }
    }

    pub fn is_saturated(&self) -> Result<bool> {
        is_saturated_rows(&self.vectors)
    }
}

/// Whether the span of the rows is a primitive sublattice of `Zⁿ`: every
/// invariant factor of the coordinate matrix is 1.
pub fn is_saturated_rows(rows: &IntMatrix) -> Result<bool> {
    let factors = smith_normal_form(rows).invariant_factors();
    if factors.len() < rows.rows() {
        return Err(Error::DependentVectors);
    }
    Ok(factors.iter().all(One::is_one))
}
