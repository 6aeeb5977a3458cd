use num_traits::One;
use serde::Serialize;

use super::gram::GramLattice;
use super::snf::smith_normal_form;
use crate::matrix::{serde_int, serde_rat, Int, Rat, RatMatrix};

/// The finite group `L*/L`.
///
/// Generators are rows of rational coordinates with respect to the basis of
/// `L`; the `i`-th generator has order `invariant_factors[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiscGroup {
    #[serde(with = "serde_int::vec")]
    pub invariant_factors: Vec<Int>,
    #[serde(serialize_with = "ser_generators")]
    pub generators: Vec<Vec<Rat>>,
}

fn ser_generators<S: serde::Serializer>(g: &[Vec<Rat>], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    struct Row<'a>(&'a [Rat]);
    impl Serialize for Row<'_> {
        fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            serde_rat::vec::serialize(self.0, s)
        }
    }
    let mut seq = s.serialize_seq(Some(g.len()))?;
    for row in g {
        seq.serialize_element(&Row(row))?;
    }
    seq.end()
}

impl DiscGroup {
    pub fn order(&self) -> Int {
        self.invariant_factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    pub fn is_cyclic(&self) -> bool {
        self.invariant_factors.len() <= 1
    }
}

/// Invariant factors of `coker(gram)` with the trivial ones dropped, and a
/// generator for each cyclic summand.
pub fn discriminant_group(lattice: &GramLattice) -> DiscGroup {
    // u·G·v = D  ⇒  G⁻¹·Zⁿ = v·D⁻¹·Zⁿ, so column i of v divided by dᵢ generates.
    let s = smith_normal_form(lattice.gram());
    let n = lattice.rank();
    let mut invariant_factors = Vec::new();
    let mut generators = Vec::new();
    for i in 0..n {
        let d = s.d[(i, i)].clone();
        if d.is_one() {
            continue;
        }
        let col: Vec<Rat> = (0..n).map(|k| Rat::new(s.v[(k, i)].clone(), d.clone())).collect();
        invariant_factors.push(d);
        generators.push(col);
    }
    DiscGroup {
        invariant_factors,
        generators,
    }
}

/// Rows are the coordinates of the dual basis vectors in the original basis,
/// so that `gram · dualᵀ = 1`.
pub fn dual_basis(lattice: &GramLattice) -> RatMatrix {
    lattice
        .gram()
        .to_rational()
        .inverse()
        .expect("GramLattice is nondegenerate by construction")
}
