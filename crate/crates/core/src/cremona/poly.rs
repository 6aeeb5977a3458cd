use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::matrix::Rat;

pub const NVARS: usize = 6;

pub type Exponent = [u8; NVARS];

/// A polynomial in `X₀, …, X₅` with rational coefficients. Zero coefficients
/// are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparsePoly {
    terms: BTreeMap<Exponent, Rat>,
}

fn total(e: &Exponent) -> u32 {
    e.iter().map(|&k| k as u32).sum()
}

impl SparsePoly {
    pub fn zero() -> Self {
        SparsePoly::default()
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial([0; NVARS], c)
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0; NVARS];
        e[i] = 1;
        Self::monomial(e, Rat::one())
    }

    pub fn monomial(e: Exponent, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        SparsePoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rat)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common degree of all terms; `None` for zero or mixed degrees.
    pub fn degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(total);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.is_zero() || self.degree() == Some(d)
    }

    fn add_term(&mut self, e: Exponent, c: Rat) {
        let slot = self.terms.entry(e).or_insert_with(Rat::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn scale(&self, k: &Rat) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        SparsePoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::constant(Rat::one()), |acc, _| &acc * self)
    }

    /// `self(p₀, …, p₅)`.
    pub fn substitute(&self, p: &[SparsePoly; NVARS]) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut term = Self::constant(c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    term = &term * &p[i].pow(k as u32);
                }
            }
            out = &out + &term;
        }
        out
    }

    /// Exact quotient by `d`, if `d` divides `self`. Only handles divisors
    /// with a single leading term cancellation chain (plain long division in
    /// lexicographic order).
    pub fn div_exact(&self, d: &SparsePoly) -> Option<SparsePoly> {
        let (lead_e, lead_c) = d.terms.iter().next_back()?;
        let mut rem = self.clone();
        let mut q = Self::zero();
        while let Some((e, c)) = rem.terms.iter().next_back().map(|(e, c)| (*e, c.clone())) {
            let mut qe = [0u8; NVARS];
            for i in 0..NVARS {
                qe[i] = e[i].checked_sub(lead_e[i])?;
            }
            let t = Self::monomial(qe, c / lead_c);
            rem = &rem - &(&t * d);
            q = &q + &t;
        }
        Some(q)
    }
}

impl Add for &SparsePoly {
    type Output = SparsePoly;
    fn add(self, o: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        SparsePoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;
    fn sub(self, o: &SparsePoly) -> SparsePoly {
        self + &(-o)
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;
    fn mul(self, o: &SparsePoly) -> SparsePoly {
        let mut out = SparsePoly::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                let mut e = [0u8; NVARS];
                for i in 0..NVARS {
                    e[i] = a[i] + b[i];
                }
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for SparsePoly {
    /// Terms in decreasing lexicographic order, e.g. `X2*X4 - X3^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { format!("X{i}") } else { format!("X{i}^{k}") })
                .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write!(f, "{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::rat;

    fn x(i: usize) -> SparsePoly {
        SparsePoly::var(i)
    }

    #[test]
    fn arithmetic_and_display() {
        let q0 = &(&x(2) * &x(4)) - &x(3).pow(2);
        assert_eq!(q0.to_string(), "X2*X4 - X3^2");
        assert_eq!(q0.degree(), Some(2));
        assert!((&q0 - &q0).is_zero());
        let mixed = &x(0) + &SparsePoly::constant(rat(1, 1));
        assert_eq!(mixed.degree(), None);
        assert_eq!(SparsePoly::var(1).scale(&rat(-3, 2)).to_string(), "-3/2*X1");
    }

    #[test]
    fn substitution_and_division() {
        let p = &x(0) * &x(1);
        let mut s: [SparsePoly; NVARS] = std::array::from_fn(x);
        s[0] = &x(2) + &x(3);
        let q = p.substitute(&s);
        assert_eq!(q, &(&x(2) * &x(1)) + &(&x(3) * &x(1)));
        assert_eq!(q.div_exact(&x(1)), Some(&x(2) + &x(3)));
        assert_eq!(x(2).div_exact(&x(1)), None);
    }
}
