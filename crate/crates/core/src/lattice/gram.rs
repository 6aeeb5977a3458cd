use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{Int, IntMatrix, Rat, RatMatrix};

/// A nondegenerate integral lattice given by its Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GramLattice {
    gram: IntMatrix,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl GramLattice {
    /// Rejects non-square, asymmetric and degenerate matrices.
    pub fn new(gram: IntMatrix) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::NotSquare {
                rows: gram.rows(),
                cols: gram.cols(),
            });
        }
        if gram.rows() == 0 {
            return Err(Error::Degenerate);
        }
        if let Some((i, j)) = gram.first_asymmetry() {
            return Err(Error::Asymmetric(i + 1, j + 1));
        }
        if gram.det().is_zero() {
            return Err(Error::Degenerate);
        }
        Ok(GramLattice { gram, labels: None })
    }

    pub fn from_arrays<const N: usize>(rows: &[[i64; N]]) -> Result<Self> {
        Self::new(IntMatrix::from_arrays(rows))
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.rank() {
            return Err(Error::Dimension(format!(
                "{} labels for a rank {} lattice",
                labels.len(),
                self.rank()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn det(&self) -> Int {
        self.gram.det()
    }

    pub fn inner(&self, x: &[Int], y: &[Int]) -> Int {
        self.gram.bilinear(x, y)
    }

    pub fn norm(&self, x: &[Int]) -> Int {
        self.gram.bilinear(x, x)
    }

    pub fn is_even(&self) -> bool {
        (0..self.rank()).all(|i| (&self.gram[(i, i)] % 2u32).is_zero())
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().abs() == Int::from(1)
    }

    /// Sylvester's criterion on leading principal minors.
    pub fn is_positive_definite(&self) -> bool {
        is_positive_definite(&self.gram)
    }

    /// `(positive, negative)` index of inertia.
    pub fn signature(&self) -> (usize, usize) {
        signature(&self.gram)
    }

    /// Gram matrix of the basis given by the rows of `basis`.
    pub fn restrict(&self, basis: &IntMatrix) -> IntMatrix {
        basis.mul(&self.gram).mul(&basis.transpose())
    }
}

pub fn is_positive_definite(gram: &IntMatrix) -> bool {
    gram.is_square() && (1..=gram.rows()).all(|k| gram.leading_block(k).det().is_positive())
}

/// Inertia of a nondegenerate symmetric matrix by congruence
/// diagonalization over the rationals.
pub fn signature(gram: &IntMatrix) -> (usize, usize) {
    let n = gram.rows();
    let mut a: RatMatrix = gram.to_rational();
    let (mut pos, mut neg) = (0, 0);
    let mut active: Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        let pivot = active.iter().copied().find(|&i| !a[(i, i)].is_zero());
        let p = match pivot {
            Some(p) => p,
            None => {
                // all remaining diagonal entries vanish; e_i += e_j makes one nonzero
                let found = active.iter().copied().find_map(|i| {
                    active
                        .iter()
                        .copied()
                        .find(|&j| j != i && !a[(i, j)].is_zero())
                        .map(|j| (i, j))
                });
                let Some((i, j)) = found else {
                    break;
                };
                for k in 0..n {
                    let v = a[(j, k)].clone();
                    a[(i, k)] += v;
                }
                for k in 0..n {
                    let v = a[(k, j)].clone();
                    a[(k, i)] += v;
                }
                i
            }
        };
        let d = a[(p, p)].clone();
        if d.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        active.retain(|&i| i != p);
        for &i in &active {
            let f: Rat = &a[(i, p)] / &d;
            if f.is_zero() {
                continue;
            }
            for k in 0..n {
                let v = &f * &a[(p, k)];
                a[(i, k)] -= v;
            }
            for k in 0..n {
                let v = &f * &a[(k, p)];
                a[(k, i)] -= v;
            }
        }
    }
    (pos, neg)
}

/// Parses an integer matrix written either as JSON (`[[3,1],[1,7]]`) or as a
/// literal with `;` between rows and `,` between entries (`3,4;4,12`).
pub fn parse_matrix(text: &str) -> Result<IntMatrix> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::Parse("empty matrix".into()));
    }
    let rows: Vec<Vec<Int>> = if text.starts_with('[') {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
        let outer = value
            .as_array()
            .ok_or_else(|| Error::Parse("expected an array of arrays".into()))?;
        outer
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let row = row
                    .as_array()
                    .ok_or_else(|| Error::Parse(format!("row {} is not an array", i + 1)))?;
                row.iter()
                    .enumerate()
                    .map(|(j, v)| json_entry(v).ok_or_else(|| bad_entry(i, j, &v.to_string())))
                    .collect()
            })
            .collect::<Result<_>>()?
    } else {
        text.split(';')
            .enumerate()
            .map(|(i, row)| {
                row.split(',')
                    .enumerate()
                    .map(|(j, v)| Int::from_str(v.trim()).map_err(|_| bad_entry(i, j, v.trim())))
                    .collect()
            })
            .collect::<Result<_>>()?
    };
    IntMatrix::from_rows(rows)
}

fn json_entry(v: &serde_json::Value) -> Option<Int> {
    if let Some(i) = v.as_i64() {
        return Some(Int::from(i));
    }
    if let Some(u) = v.as_u64() {
        return Some(Int::from(u));
    }
    v.as_str().and_then(|s| Int::from_str(s).ok())
}

fn bad_entry(i: usize, j: usize, raw: &str) -> Error {
    Error::Parse(format!("non-integer entry at ({},{}): '{}'", i + 1, j + 1, raw))
}

/// Parses and validates a Gram matrix: symmetric and nondegenerate.
pub fn parse_gram(text: &str) -> Result<GramLattice> {
    GramLattice::new(parse_matrix(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_both_syntaxes() {
        let kv = parse_gram("3,4;4,12").unwrap();
        assert_eq!(kv.gram(), &IntMatrix::from_arrays(&[[3, 4], [4, 12]]));
        let l = parse_gram("[[3,1],[1,7]]").unwrap();
        assert_eq!(l.rank(), 2);
        assert_eq!(l.det(), Int::from(20));
        let spaced = parse_gram(" 3, 1 ; 1, 7 ").unwrap();
        assert_eq!(spaced, l);
    }

    #[test]
    fn asymmetric_input_names_the_entry() {
        let err = parse_gram("3,4;5,12").unwrap_err();
        assert_eq!(err.to_string(), "asymmetric at (1,2)/(2,1)");
    }

    #[test]
    fn non_integer_entries_are_rejected() {
        let err = parse_gram("3,4.5;4,12").unwrap_err();
        assert!(err.to_string().contains("(1,2)"), "{err}");
        let err = parse_gram("[[3,1],[1,\"x\"]]").unwrap_err();
        assert!(err.to_string().contains("(2,2)"), "{err}");
        assert!(parse_gram("[[3,1],[1,7.5]]").is_err());
    }

    #[test]
    fn degenerate_rejected_at_construction() {
        let err = GramLattice::from_arrays(&[[1, 2], [2, 4]]).unwrap_err();
        assert_eq!(err, Error::Degenerate);
        assert_eq!(err.to_string(), "degenerate lattice");
    }

    #[test]
    fn even_flag_and_signature() {
        let a2 = GramLattice::from_arrays(&[[2, -1], [-1, 2]]).unwrap();
        assert!(a2.is_even());
        assert!(a2.is_positive_definite());
        assert_eq!(a2.signature(), (2, 0));
        let u = GramLattice::from_arrays(&[[0, 1], [1, 0]]).unwrap();
        assert!(u.is_even());
        assert!(!u.is_positive_definite());
        assert_eq!(u.signature(), (1, 1));
        let kv = GramLattice::from_arrays(&[[3, 4], [4, 12]]).unwrap();
        assert!(!kv.is_even());
    }
}
