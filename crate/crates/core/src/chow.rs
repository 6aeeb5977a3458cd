//! Intersection numbers on the blowups `Γ = Bl_V P⁵` and `Y = Bl_V X` of
//! projective space and of a cubic fourfold along a Veronese surface `V`.
//!
//! Classes are coordinate vectors over fixed bases; all products go through
//! the monomial tables.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::GramLattice;
use crate::matrix::{rat, rat_from_int, serde_rat, Int, IntMatrix, Rat, RatMatrix};

/// `c₀·1_V + c₁·ℓ + c₂·pt` in the Chow ring of `V ≅ P²`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceClass {
    #[serde(with = "serde_rat::vec")]
    pub coeffs: [Rat; 3],
}

impl SurfaceClass {
    pub fn new(c0: Rat, c1: Rat, c2: Rat) -> Self {
        SurfaceClass { coeffs: [c0, c1, c2] }
    }

    pub fn from_ints(c0: i64, c1: i64, c2: i64) -> Self {
        Self::new(rat(c0, 1), rat(c1, 1), rat(c2, 1))
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0, 0)
    }

    /// The class of a line.
    pub fn line() -> Self {
        Self::from_ints(0, 1, 0)
    }

    /// Degree of the zero-cycle part; `∫ ℓ·ℓ = 1`.
    pub fn integrate(&self) -> Rat {
        self.coeffs[2].clone()
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Inverse as a truncated power series; requires an invertible `1_V` part.
    pub fn inverse(&self) -> Option<Self> {
        let [a0, a1, a2] = &self.coeffs;
        if a0.is_zero() {
            return None;
        }
        let b0 = a0.recip();
        let b1 = -(a1 * &b0 * &b0);
        let b2 = (a1 * a1 - a0 * a2) * &b0 * &b0 * &b0;
        Some(Self::new(b0, b1, b2))
    }
}

impl Mul for &SurfaceClass {
    type Output = SurfaceClass;
    fn mul(self, o: &SurfaceClass) -> SurfaceClass {
        let [a0, a1, a2] = &self.coeffs;
        let [b0, b1, b2] = &o.coeffs;
        SurfaceClass::new(a0 * b0, a0 * b1 + a1 * b0, a0 * b2 + a1 * b1 + a2 * b0)
    }
}

impl Add for &SurfaceClass {
    type Output = SurfaceClass;
    fn add(self, o: &SurfaceClass) -> SurfaceClass {
        let [a0, a1, a2] = &self.coeffs;
        let [b0, b1, b2] = &o.coeffs;
        SurfaceClass::new(a0 + b0, a1 + b1, a2 + b2)
    }
}

/// `c(V) = 1 + 3ℓ + 3`.
pub fn chern_class_veronese() -> SurfaceClass {
    SurfaceClass::from_ints(1, 3, 3)
}

/// `i*c(P⁵) = (1 + 2ℓ)⁶`.
pub fn restricted_chern_p5() -> SurfaceClass {
    SurfaceClass::from_ints(1, 2, 0).pow(6)
}

/// `s(V, P⁵) = c(V) · i*c(P⁵)⁻¹`.
pub fn segre_class_veronese() -> SurfaceClass {
    let inv = restricted_chern_p5().inverse().expect("leading coefficient is 1");
    &chern_class_veronese() * &inv
}

/// A homogeneous polynomial of degree `n` in two variables `x, y`, stored as
/// the coefficients of `x^{n−i} yⁱ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Binomial(pub Vec<Rat>);

impl Binomial {
    pub fn linear(x: Rat, y: Rat) -> Self {
        Binomial(vec![x, y])
    }

    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Binomial(vec![Rat::one()]), |acc, _| &acc * self)
    }
}

impl Mul for &Binomial {
    type Output = Binomial;
    fn mul(self, o: &Binomial) -> Binomial {
        let mut out = vec![Rat::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Binomial(out)
    }
}

/// Top intersection numbers `xᵃ yᵇ` with `a + b = dimension`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChowTable {
    pub dimension: u32,
    pub generators: [String; 2],
    #[serde(serialize_with = "ser_values")]
    pub values: BTreeMap<(u32, u32), Rat>,
}

fn ser_values<S: serde::Serializer>(v: &BTreeMap<(u32, u32), Rat>, s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    #[derive(Serialize)]
    struct Entry<'a> {
        exponents: (u32, u32),
        #[serde(with = "serde_rat")]
        value: &'a Rat,
    }
    let mut seq = s.serialize_seq(Some(v.len()))?;
    // highest power of the first generator first
    for ((a, b), value) in v.iter().rev() {
        seq.serialize_element(&Entry {
            exponents: (*a, *b),
            value,
        })?;
    }
    seq.end()
}

impl ChowTable {
    fn from_fn(dimension: u32, generators: [String; 2], f: impl Fn(u32) -> Rat) -> Self {
        let values = (0..=dimension).map(|b| ((dimension - b, b), f(b))).collect();
        ChowTable {
            dimension,
            generators,
            values,
        }
    }

    pub fn get(&self, a: u32, b: u32) -> Rat {
        self.values.get(&(a, b)).cloned().unwrap_or_else(Rat::zero)
    }

    /// Values ordered `x^n, x^{n−1}y, …, y^n`.
    pub fn as_vec(&self) -> Vec<Rat> {
        (0..=self.dimension).map(|b| self.get(self.dimension - b, b)).collect()
    }

    /// Degree of a top-degree polynomial class.
    pub fn integrate(&self, p: &Binomial) -> Result<Rat> {
        if p.degree() != self.dimension as usize {
            return Err(Error::Dimension(format!(
                "degree {} class on a {}-dimensional variety",
                p.degree(),
                self.dimension
            )));
        }
        let n = self.dimension;
        Ok(p.0
            .iter()
            .enumerate()
            .map(|(i, c)| c * self.get(n - i as u32, i as u32))
            .sum())
    }

    /// The table of `x' = ax + by`, `y' = cx + dy`.
    pub fn substitute(&self, x: &Binomial, y: &Binomial, names: [&str; 2]) -> ChowTable {
        let n = self.dimension;
        Self::from_fn(n, names.map(String::from), |b| {
            let p = &x.pow(n - b) * &y.pow(b);
            self.integrate(&p).expect("degrees match")
        })
    }

    /// Intersection numbers on a hypersurface of class `a·x + b·y`.
    pub fn cap(&self, divisor: &Binomial) -> ChowTable {
        let n = self.dimension - 1;
        let names = self.generators.clone().map(|g| g.to_lowercase());
        Self::from_fn(n, names, |b| {
            let mono = Binomial((0..=n).map(|i| if i == b { Rat::one() } else { Rat::zero() }).collect());
            self.integrate(&(&mono * divisor)).expect("degrees match")
        })
    }
}

/// `H^{5−k}E^k = (−1)^{k−1} ∫_V (2ℓ)^{5−k} · s(V, P⁵)` for `k ≥ 1`, on
/// the blowup of `P⁵` along `V`.
pub fn exceptional_number(k: u32) -> Rat {
    let s = segre_class_veronese();
    let h = SurfaceClass::from_ints(0, 2, 0);
    let sign = if k % 2 == 1 { Rat::one() } else { -Rat::one() };
    sign * (&h.pow(5 - k) * &s).integrate()
}

pub fn gamma_table() -> ChowTable {
    ChowTable::from_fn(5, ["H".into(), "E".into()], |k| {
        if k == 0 {
            Rat::one()
        } else {
            exceptional_number(k)
        }
    })
}

/// The class of the proper transform `Y = 3H − E` of the cubic.
pub fn cubic_class() -> Binomial {
    Binomial::linear(rat(3, 1), rat(-1, 1))
}

pub fn y_table() -> ChowTable {
    gamma_table().cap(&cubic_class())
}

fn h() -> Binomial {
    Binomial::linear(Rat::one(), Rat::zero())
}

fn e() -> Binomial {
    Binomial::linear(Rat::zero(), Rat::one())
}

/// `h' = 2h − e`.
pub fn h_prime() -> Binomial {
    Binomial::linear(rat(2, 1), rat(-1, 1))
}

/// `e' = 3h − 2e`.
pub fn e_prime() -> Binomial {
    Binomial::linear(rat(3, 1), rat(-2, 1))
}

/// A codimension-2 class on `Y` with coordinates over `{h², he, e²}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Codim2Class(#[serde(with = "serde_rat::vec")] pub [Rat; 3]);

impl Codim2Class {
    pub fn new(a: Rat, b: Rat, c: Rat) -> Self {
        Codim2Class([a, b, c])
    }

    pub fn h2() -> Self {
        Self::from_binomial(&h().pow(2))
    }

    pub fn e2() -> Self {
        Self::from_binomial(&e().pow(2))
    }

    pub fn from_binomial(p: &Binomial) -> Self {
        assert_eq!(p.degree(), 2);
        Codim2Class([p.0[0].clone(), p.0[1].clone(), p.0[2].clone()])
    }

    fn as_binomial(&self) -> Binomial {
        Binomial(self.0.to_vec())
    }

    pub fn scale(&self, k: &Rat) -> Self {
        Codim2Class(self.0.clone().map(|c| c * k))
    }

    pub fn pair(&self, other: &Codim2Class, table: &ChowTable) -> Rat {
        table
            .integrate(&(&self.as_binomial() * &other.as_binomial()))
            .expect("Y is a fourfold")
    }
}

impl Add for &Codim2Class {
    type Output = Codim2Class;
    fn add(self, o: &Codim2Class) -> Codim2Class {
        Codim2Class(std::array::from_fn(|i| &self.0[i] + &o.0[i]))
    }
}

impl Sub for &Codim2Class {
    type Output = Codim2Class;
    fn sub(self, o: &Codim2Class) -> Codim2Class {
        Codim2Class(std::array::from_fn(|i| &self.0[i] - &o.0[i]))
    }
}

impl Neg for &Codim2Class {
    type Output = Codim2Class;
    fn neg(self) -> Codim2Class {
        Codim2Class(self.0.clone().map(|c| -c))
    }
}

/// `ℓ = ½he` and `v = 3ℓ − e²`, built from an arbitrary pair `(h, e)` of
/// divisor classes written in terms of the original `(h, e)`.
fn frame_from(h: &Binomial, e: &Binomial) -> [Codim2Class; 3] {
    let h2 = Codim2Class::from_binomial(&h.pow(2));
    let e2 = Codim2Class::from_binomial(&e.pow(2));
    let line = Codim2Class::from_binomial(&(h * e)).scale(&rat(1, 2));
    let v = &line.scale(&rat(3, 1)) - &e2;
    [h2, v, line]
}

/// `(ℓ, v)` over `{h², he, e²}`.
pub fn veronese_frame_classes() -> (Codim2Class, Codim2Class) {
    let [_, v, line] = frame_from(&h(), &e());
    (line, v)
}

/// `(h², v, ℓ)` and `(h'², v', ℓ')` over `{h², he, e²}`.
pub fn frames() -> ([Codim2Class; 3], [Codim2Class; 3]) {
    (frame_from(&h(), &e()), frame_from(&h_prime(), &e_prime()))
}

/// Pairing matrix of a family of classes on `Y`, asserted integral.
pub fn pairing_matrix(classes: &[Codim2Class]) -> IntMatrix {
    let y = y_table();
    let rows = classes
        .iter()
        .map(|a| {
            classes
                .iter()
                .map(|b| {
                    let p = a.pair(b, &y);
                    assert!(p.is_integer(), "non-integral pairing {p}");
                    p.to_integer()
                })
                .collect()
        })
        .collect();
    IntMatrix::from_rows(rows).expect("square")
}

/// Coordinates of `x` in the basis `basis` (all over `{h², he, e²}`).
fn coordinates(x: &Codim2Class, basis: &[Codim2Class; 3]) -> Vec<Rat> {
    let cols = RatMatrix::from_rows((0..3).map(|i| basis.iter().map(|b| b.0[i].clone()).collect()).collect());
    cols.inverse().expect("basis is independent").mul_vec(&x.0)
}

/// Matrix whose columns are `h'², v', ℓ'` in the basis `(h², v, ℓ)`.
pub fn primed_transformation() -> IntMatrix {
    let (frame, primed) = frames();
    let cols: Vec<Vec<Int>> = primed
        .iter()
        .map(|c| {
            coordinates(c, &frame)
                .into_iter()
                .map(|r| {
                    assert!(r.is_integer());
                    r.to_integer()
                })
                .collect()
        })
        .collect();
    IntMatrix::from_cols(&cols).expect("3 columns")
}

/// Outcome of comparing the generators `(e²)*` and `(e'²)*` of the two
/// discriminant groups.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiscAction {
    pub multiplier: u32,
    pub modulus: u32,
    /// `(e²)*` over `{h², e², ℓ}`.
    #[serde(with = "serde_rat::vec")]
    pub dual_e2: Vec<Rat>,
    /// `e²` over `{h'², e'², ℓ'}`.
    #[serde(with = "serde_rat::vec")]
    pub e2_in_primed: Vec<Rat>,
    /// `(e²)*` over `{h'², e'², ℓ'}`.
    #[serde(with = "serde_rat::vec")]
    pub dual_e2_in_primed: Vec<Rat>,
    /// `k·(e'²)* − (e²)*` over `{h'², e'², ℓ'}`, integral.
    #[serde(with = "serde_rat::vec")]
    pub certificate: Vec<Rat>,
}

/// The residue `k` with `k·(e'²)* ≡ (e²)*` modulo the lattice
/// `⟨h'², e'², ℓ'⟩ = ⟨h², e², ℓ⟩`.
pub fn disc_action_multiplier() -> Result<DiscAction> {
    let (frame, primed) = frames();
    let e2 = Codim2Class::e2();
    let e2p = Codim2Class::from_binomial(&e_prime().pow(2));
    let basis = [frame[0].clone(), e2.clone(), frame[2].clone()];
    let basis_p = [primed[0].clone(), e2p, primed[2].clone()];

    let gram = GramLattice::new(pairing_matrix(&basis))?;
    let gram_p = pairing_matrix(&basis_p);
    if gram.gram() != &gram_p {
        return Err(Error::DiscActionInconsistent);
    }
    let n = gram.det();
    let modulus: u32 = (if n < Int::zero() { -n } else { n })
        .try_into()
        .map_err(|_| Error::DiscActionInconsistent)?;
    let dual = crate::lattice::dual_basis(&gram);
    let dual_e2 = dual.row(1);

    // columns: h², e², ℓ written in the primed basis
    let change = RatMatrix::from_rows(
        (0..3)
            .map(|i| basis.iter().map(|b| coordinates(b, &basis_p)[i].clone()).collect())
            .collect(),
    );
    let e2_in_primed = change.mul_vec(&[Rat::zero(), Rat::one(), Rat::zero()]);
    let dual_e2_in_primed = change.mul_vec(&dual_e2);

    for k in 1..modulus {
        let kr = rat_from_int(&Int::from(k));
        let cert: Vec<Rat> = dual_e2
            .iter()
            .zip(&dual_e2_in_primed)
            .map(|(p, q)| &kr * p - q)
            .collect();
        if cert.iter().all(Rat::is_integer) {
            return Ok(DiscAction {
                multiplier: k,
                modulus,
                dual_e2,
                e2_in_primed,
                dual_e2_in_primed,
                certificate: cert,
            });
        }
    }
    Err(Error::DiscActionInconsistent)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[Rat]) -> Vec<i64> {
        v.iter().map(|r| r.to_integer().try_into().unwrap()).collect()
    }

    #[test]
    fn segre_class() {
        assert_eq!(restricted_chern_p5(), SurfaceClass::from_ints(1, 12, 60));
        assert_eq!(
            restricted_chern_p5().inverse().unwrap(),
            SurfaceClass::from_ints(1, -12, 84)
        );
        assert_eq!(segre_class_veronese(), SurfaceClass::from_ints(1, -9, 51));
    }

    #[test]
    fn tables() {
        assert_eq!(ints(&gamma_table().as_vec()), vec![1, 0, 0, 4, 18, 51]);
        assert_eq!(ints(&y_table().as_vec()), vec![3, 0, -4, -6, 3]);
    }

    #[test]
    fn frame_pairings() {
        let (f, p) = frames();
        let expected = IntMatrix::from_arrays(&[[3, 4, 0], [4, 12, 0], [0, 0, -1]]);
        assert_eq!(pairing_matrix(&f), expected);
        assert_eq!(pairing_matrix(&p), expected);
    }

    #[test]
    fn transformation_is_involutive() {
        let m = primed_transformation();
        assert_eq!(m, IntMatrix::from_arrays(&[[4, 0, 3], [-1, 1, -1], [-5, 0, -4]]));
        assert_eq!(m.mul(&m), IntMatrix::identity(3));
    }

    #[test]
    fn times_nine() {
        let a = disc_action_multiplier().unwrap();
        assert_eq!((a.multiplier, a.modulus), (9, 20));
        assert_eq!(ints(&a.e2_in_primed), vec![9, 4, -24]);
        assert_eq!(ints(&a.certificate), vec![1, 1, -2]);
        assert_eq!(a.dual_e2_in_primed, vec![rat(16, 20), rat(7, 20), rat(-41, 20)]);
    }
}
