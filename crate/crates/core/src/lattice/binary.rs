use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{serde_int, Int};

/// `f(x, y) = a·x² + b·xy + c·y²`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BinaryForm {
    #[serde(with = "serde_int")]
    pub a: Int,
    #[serde(with = "serde_int")]
    pub b: Int,
    #[serde(with = "serde_int")]
    pub c: Int,
}

impl BinaryForm {
    pub fn new(a: impl Into<Int>, b: impl Into<Int>, c: impl Into<Int>) -> Self {
        BinaryForm {
            a: a.into(),
            b: b.into(),
            c: c.into(),
        }
    }

    pub fn eval(&self, x: &Int, y: &Int) -> Int {
        &self.a * x * x + &self.b * x * y + &self.c * y * y
    }

    /// `b² − 4ac`.
    pub fn discriminant(&self) -> Int {
        &self.b * &self.b - Int::from(4) * &self.a * &self.c
    }

    pub fn is_positive_definite(&self) -> bool {
        self.a.is_positive() && self.discriminant().is_negative()
    }

    fn require_definite(&self) -> Result<()> {
        if self.is_positive_definite() {
            Ok(())
        } else {
            Err(Error::NotPositiveDefinite)
        }
    }

    /// Every `(x, y) ≠ (0, 0)` with `f(x, y) = n`, ordered by `y` in
    /// `0, 1, −1, 2, −2, …` and then by `|x|` with positive `x` first.
    ///
    /// From `4a·f = (2ax + by)² + (4ac − b²)y²`, `|y|` is at most
    /// `√(4an / (4ac − b²))`, and for fixed `y` the value of `x` is a root of
    /// a quadratic with discriminant `4an − (4ac − b²)y²`.
    pub fn representations(&self, n: &Int) -> Result<Vec<(Int, Int)>> {
        self.require_definite()?;
        let mut out = Vec::new();
        if !n.is_positive() {
            return Ok(out);
        }
        let delta = -self.discriminant();
        let four_an = Int::from(4) * &self.a * n;
        let y_max = (&four_an / &delta).sqrt();
        let two_a = Int::from(2) * &self.a;
        let mut k = Int::zero();
        while k <= y_max {
            let ys = if k.is_zero() {
                vec![k.clone()]
            } else {
                vec![k.clone(), -&k]
            };
            for y in ys {
                let rad = &four_an - &delta * &y * &y;
                if rad.is_negative() {
                    continue;
                }
                let s = rad.sqrt();
                if &s * &s != rad {
                    continue;
                }
                let by = &self.b * &y;
                let mut xs: Vec<Int> = Vec::new();
                for num in [-&by + &s, -&by - &s] {
                    if num.is_multiple_of(&two_a) {
                        let x = num / &two_a;
                        if !xs.contains(&x) {
                            xs.push(x);
                        }
                    }
                }
                xs.sort_by_key(|p| (p.abs(), p.is_negative()));
                for x in xs {
                    if !(x.is_zero() && y.is_zero()) {
                        out.push((x, y.clone()));
                    }
                }
            }
            k += 1;
        }
        Ok(out)
    }

    /// First representation of `n` in the order of [`Self::representations`].
    pub fn represents(&self, n: &Int) -> Result<Option<(Int, Int)>> {
        Ok(self.representations(n)?.into_iter().next())
    }

    /// First representation with `gcd(x, y) = 1`.
    pub fn represents_primitively(&self, n: &Int) -> Result<Option<(Int, Int)>> {
        Ok(self
            .representations(n)?
            .into_iter()
            .find(|(x, y)| x.gcd(y) == Int::from(1)))
    }

    /// Smallest modulus `q ≤ max_modulus` such that `f(x, y) ≢ n (mod q)` for
    /// all `x, y`, if any. A hit proves `n` is not represented.
    pub fn local_obstruction(&self, n: &Int, max_modulus: u32) -> Option<u32> {
        (2..=max_modulus).find(|&q| {
            let qi = Int::from(q);
            let target = n.mod_floor(&qi);
            !(0..q).any(|x| (0..q).any(|y| self.eval(&Int::from(x), &Int::from(y)).mod_floor(&qi) == target))
        })
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::int;

    fn pair(x: i64, y: i64) -> (Int, Int) {
        (int(x), int(y))
    }

    #[test]
    fn the_146_form() {
        let f = BinaryForm::new(20, -98, 146);
        assert_eq!(f.represents(&int(2)).unwrap(), None);
        assert_eq!(f.represents(&int(20)).unwrap(), Some(pair(1, 0)));
        assert_eq!(f.represents(&int(146)).unwrap(), Some(pair(0, 1)));
    }

    #[test]
    fn indefinite_is_an_error() {
        let f = BinaryForm::new(1, 0, -2);
        assert_eq!(f.represents(&int(1)), Err(Error::NotPositiveDefinite));
    }

    #[test]
    fn primitive_vs_imprimitive() {
        let f = BinaryForm::new(1, 0, 1);
        assert_eq!(f.represents(&int(4)).unwrap(), Some(pair(2, 0)));
        assert_eq!(f.represents_primitively(&int(4)).unwrap(), None);
        assert_eq!(f.representations(&int(5)).unwrap().len(), 8);
    }

    #[test]
    fn obstruction_mod_small() {
        // x² + y² never ≡ 3 (mod 4)
        let f = BinaryForm::new(1, 0, 1);
        assert_eq!(f.local_obstruction(&int(3), 10), Some(4));
        assert_eq!(f.local_obstruction(&int(5), 10), None);
    }
}
