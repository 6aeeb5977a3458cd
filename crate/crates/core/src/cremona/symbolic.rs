//! The Cremona map along the Veronese surface as polynomials: the quadrics
//! through `V` are the cofactors of a symmetric 3×3 matrix of linear forms.

use serde::Serialize;

use super::poly::{SparsePoly, NVARS};
use crate::error::{Error, Result};

pub type PolyMatrix = [[SparsePoly; 3]; 3];

/// Matrix positions of `Q₀, …, Q₅`.
pub const POSITIONS: [(usize, usize); NVARS] = [(0, 0), (0, 1), (1, 1), (1, 2), (2, 2), (0, 2)];

/// `(X₀ X₁ X₅; X₁ X₂ X₃; X₅ X₃ X₄)`, whose 2×2 minors cut out `V`.
pub fn standard_matrix() -> PolyMatrix {
    from_coordinates(&std::array::from_fn(SparsePoly::var))
}

/// Places six entries into a symmetric matrix following [`POSITIONS`].
pub fn from_coordinates(q: &[SparsePoly; NVARS]) -> PolyMatrix {
    let mut m: PolyMatrix = Default::default();
    for (k, &(i, j)) in POSITIONS.iter().enumerate() {
        m[i][j] = q[k].clone();
        m[j][i] = q[k].clone();
    }
    m
}

fn minor(m: &PolyMatrix, r: usize, c: usize) -> SparsePoly {
    let rows: Vec<usize> = (0..3).filter(|&i| i != r).collect();
    let cols: Vec<usize> = (0..3).filter(|&j| j != c).collect();
    let a = &m[rows[0]][cols[0]] * &m[rows[1]][cols[1]];
    let b = &m[rows[0]][cols[1]] * &m[rows[1]][cols[0]];
    &a - &b
}

/// `det(m) · m⁻¹`.
pub fn adjugate(m: &PolyMatrix) -> PolyMatrix {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let c = minor(m, j, i);
            if (i + j) % 2 == 0 {
                c
            } else {
                -&c
            }
        })
    })
}

pub fn determinant(m: &PolyMatrix) -> SparsePoly {
    (0..3).fold(SparsePoly::zero(), |acc, j| {
        let term = &m[0][j] * &minor(m, 0, j);
        if j % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        }
    })
}

/// The six distinct entries of the adjugate of a symmetric matrix of linear
/// forms, in the order of [`POSITIONS`].
pub fn cofactor_quadrics(m: &PolyMatrix) -> Result<[SparsePoly; NVARS]> {
    for (i, j) in (0..3).flat_map(|i| (0..3).map(move |j| (i, j))) {
        if m[i][j] != m[j][i] {
            return Err(Error::Dimension(format!(
                "cofactor matrix must be symmetric; entries ({},{}) and ({},{}) differ",
                i + 1,
                j + 1,
                j + 1,
                i + 1
            )));
        }
        if !m[i][j].is_homogeneous_of(1) {
            return Err(Error::Dimension(format!(
                "entry ({},{}) is not a linear form",
                i + 1,
                j + 1
            )));
        }
    }
    let adj = adjugate(m);
    Ok(POSITIONS.map(|(i, j)| adj[i][j].clone()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvolutionReport {
    pub quadrics: Vec<String>,
    pub determinant: String,
    /// `R₀, …, R₅` obtained by substituting the quadrics into themselves.
    pub quartics: Vec<String>,
    pub quartics_homogeneous: bool,
    /// `Rₖ / det(M)` for every `k`, which should reproduce `Xₖ`.
    pub quotients: Vec<String>,
    pub holds: bool,
}

/// Verifies `adj(adj(M)) = det(M)·M` for the standard matrix in two ways:
/// as the adjugate of the matrix of quadrics, and by substituting the
/// quadrics into the quadric map.
pub fn involution_check() -> Result<InvolutionReport> {
    let m = standard_matrix();
    let q = cofactor_quadrics(&m)?;
    let det = determinant(&m);

    let by_substitution: [SparsePoly; NVARS] = std::array::from_fn(|k| q[k].substitute(&q));
    let n = from_coordinates(&q);
    let adj_n = adjugate(&n);
    for (k, &(i, j)) in POSITIONS.iter().enumerate() {
        if adj_n[i][j] != by_substitution[k] {
            return Err(Error::InvolutionMismatch(format!(
                "R{k}: adjugate and substitution disagree"
            )));
        }
        let expected = &det * &m[i][j];
        if by_substitution[k] != expected {
            return Err(Error::InvolutionMismatch(format!("R{k} != det(M)*X{k}")));
        }
    }
    let quotients: Vec<SparsePoly> = by_substitution
        .iter()
        .map(|r| r.div_exact(&det).unwrap_or_default())
        .collect();
    for (k, quot) in quotients.iter().enumerate() {
        if *quot != SparsePoly::var(k) {
            return Err(Error::InvolutionMismatch(format!("R{k}/det(M) = {quot}")));
        }
    }
    let homogeneous = by_substitution.iter().all(|r| r.is_homogeneous_of(4));
    if !homogeneous {
        return Err(Error::InvolutionMismatch(
            "quartics are not homogeneous of degree 4".into(),
        ));
    }
    // det(adj M) = det(M)² is the expected scaling of the determinant
    if determinant(&n) != det.pow(2) {
        return Err(Error::InvolutionMismatch("det(N) != det(M)^2".into()));
    }
    Ok(InvolutionReport {
        quadrics: q.iter().map(ToString::to_string).collect(),
        determinant: det.to_string(),
        quartics: by_substitution.iter().map(ToString::to_string).collect(),
        quartics_homogeneous: homogeneous,
        quotients: quotients.iter().map(ToString::to_string).collect(),
        holds: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_quadrics() {
        let q = cofactor_quadrics(&standard_matrix()).unwrap();
        let shown: Vec<String> = q.iter().map(ToString::to_string).collect();
        assert_eq!(
            shown,
            [
                "X2*X4 - X3^2",
                "-X1*X4 + X3*X5",
                "X0*X4 - X5^2",
                "-X0*X3 + X1*X5",
                "X0*X2 - X1^2",
                "X1*X3 - X2*X5"
            ]
        );
    }

    #[test]
    fn diagonal_matrix() {
        let mut m: PolyMatrix = Default::default();
        for (i, v) in [0, 2, 4].into_iter().enumerate() {
            m[i][i] = SparsePoly::var(v);
        }
        let q = cofactor_quadrics(&m).unwrap();
        assert_eq!(q[0].to_string(), "X2*X4");
        assert_eq!(q[2].to_string(), "X0*X4");
        assert_eq!(q[4].to_string(), "X0*X2");
        assert!(q[1].is_zero() && q[3].is_zero() && q[5].is_zero());
    }

    #[test]
    fn asymmetric_rejected() {
        let mut m = standard_matrix();
        m[0][1] = SparsePoly::var(3);
        assert!(cofactor_quadrics(&m).is_err());
    }

    #[test]
    fn involution() {
        let r = involution_check().unwrap();
        assert!(r.holds);
        assert_eq!(r.quotients, ["X0", "X1", "X2", "X3", "X4", "X5"]);
    }
}
