use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::component::{component_template, tau_candidates, ComponentSpec};
use crate::cremona::MarkedGram;
use crate::error::{Error, Result};
use crate::lattice::{is_positive_definite, marked_isometry, vectors_of_norm, vectors_up_to, BinaryForm, GramLattice};
use crate::matrix::{int, serde_int, Int, IntMatrix};

fn require_h2_first(g: &IntMatrix) -> Result<()> {
    if g.rows() != 3 || g.cols() != 3 || !g.is_symmetric() {
        return Err(Error::Dimension("expected a symmetric 3x3 Gram matrix".into()));
    }
    if g[(0, 0)] != int(3) {
        return Err(Error::Dimension(format!(
            "first basis vector has norm {}, expected h² = 3",
            g[(0, 0)]
        )));
    }
    Ok(())
}

/// A basis `(h², v, s)` of a rank-3 lattice with `h²` its first basis
/// vector, and the Gram matrix in that basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VeroneseFrame {
    pub marked: MarkedGram,
    /// Rows are `h²`, `v`, `s` in the input coordinates.
    pub basis: IntMatrix,
}

/// Finds `v` with `v² = 12`, `h²·v = 4` and `⟨h², v⟩` saturated (the
/// lexicographically least such vector), completes it to a basis, and picks
/// the third vector of least norm with ties broken by `(|A|, |B|, −A, −B)`.
pub fn veronese_frame_with_basis(g: &IntMatrix) -> Result<VeroneseFrame> {
    require_h2_first(g)?;
    if !is_positive_definite(g) {
        return Err(Error::NotPositiveDefinite);
    }
    let h2 = vec![Int::one(), Int::zero(), Int::zero()];
    let v = vectors_of_norm(g, &int(12))?
        .into_iter()
        .find(|x| g.bilinear(&h2, x) == int(4) && x[1].gcd(&x[2]).is_one())
        .ok_or(Error::NoVeroneseFrame)?;

    // (0, p, q) with v₁q − v₂p = 1 completes (h², v) to a basis
    let eg = v[1].extended_gcd(&v[2]);
    let (p, q) = if eg.gcd.is_one() { (-eg.y, eg.x) } else { (eg.y, -eg.x) };
    let s0 = vec![Int::zero(), p, q];
    let basis0 = IntMatrix::from_rows(vec![h2.clone(), v.clone(), s0.clone()])?;
    debug_assert!(basis0.det().abs().is_one());
    let g0 = basis0.mul(g).mul(&basis0.transpose());

    // shortest vector in the cosets ±s₀ + Zh² + Zv; rounding the projection
    // of s₀ to ⟨h², v⟩ (Gram (3 4; 4 12), det 20) gives a small search bound
    let (a0, b0) = (&g0[(0, 2)], &g0[(1, 2)]);
    let round20 = |num: Int| -> Int { (num * int(2) + int(20)).div_floor(&int(40)) };
    let shifted = [
        -round20(int(12) * a0 - int(4) * b0),
        -round20(int(3) * b0 - int(4) * a0),
        Int::one(),
    ];
    let c0 = g0.bilinear(&shifted, &shifted);
    let key = |x: &[Int]| {
        let a = g0.bilinear(&[Int::one(), Int::zero(), Int::zero()], x);
        let b = g0.bilinear(&[Int::zero(), Int::one(), Int::zero()], x);
        (g0.bilinear(x, x), a.abs(), b.abs(), -a, -b)
    };
    let best = vectors_up_to(&g0, &c0)?
        .into_iter()
        .filter(|x| x[2].abs().is_one())
        .min_by(|x, y| key(x).cmp(&key(y)))
        .expect("s₀ itself qualifies");
    let s = basis0.transpose().mul_vec(&best);
    let basis = IntMatrix::from_rows(vec![h2, v, s])?;
    let marked = MarkedGram::new(basis.mul(g).mul(&basis.transpose()))?;
    Ok(VeroneseFrame { marked, basis })
}

pub fn veronese_frame(g: &GramLattice) -> Result<MarkedGram> {
    Ok(veronese_frame_with_basis(g.gram())?.marked)
}

/// `(b, c) ↦ 3·q(b, c) − p(b, c)²` where `q` is the form on the last two
/// basis vectors and `p` the pairing with `h²`: the discriminant of the
/// labelling `⟨h², b·e₂ + c·e₃⟩`.
pub fn labelling_form(g: &IntMatrix) -> Result<BinaryForm> {
    require_h2_first(g)?;
    let (p1, p2) = (&g[(0, 1)], &g[(0, 2)]);
    let three = int(3);
    Ok(BinaryForm {
        a: &three * &g[(1, 1)] - p1 * p1,
        b: int(2) * (&three * &g[(1, 2)] - p1 * p2),
        c: &three * &g[(2, 2)] - p2 * p2,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RepresentedDisc {
    pub d: i64,
    #[serde(with = "serde_pair")]
    pub witness: (Int, Int),
    /// A witness with `gcd(b, c) = 1`, i.e. a saturated labelling.
    #[serde(with = "serde_opt_pair")]
    pub saturated_witness: Option<(Int, Int)>,
}

impl RepresentedDisc {
    pub fn is_member(&self) -> bool {
        self.saturated_witness.is_some()
    }
}

pub(crate) mod serde_pair {
    use super::*;
    pub fn serialize<S: serde::Serializer>(p: &(Int, Int), s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct P<'a>(
            #[serde(with = "serde_int")] &'a Int,
            #[serde(with = "serde_int")] &'a Int,
        );
        P(&p.0, &p.1).serialize(s)
    }
}

pub(crate) mod serde_opt_pair {
    use super::*;
    pub fn serialize<S: serde::Serializer>(p: &Option<(Int, Int)>, s: S) -> std::result::Result<S::Ok, S::Error> {
        match p {
            Some(p) => super::serde_pair::serialize(p, s),
            None => s.serialize_none(),
        }
    }
}

/// Every `d ≤ d_max` represented by the labelling form, with witnesses.
pub fn represented_discs(form: &BinaryForm, d_max: i64) -> Result<Vec<RepresentedDisc>> {
    let mut out = Vec::new();
    for d in 1..=d_max {
        let reps = form.representations(&int(d))?;
        if let Some(w) = reps.first() {
            let saturated_witness = reps.iter().find(|(b, c)| b.gcd(c).is_one()).cloned();
            out.push(RepresentedDisc {
                d,
                witness: w.clone(),
                saturated_witness,
            });
        }
    }
    Ok(out)
}

/// `g` matched with a component template `M_τ` for `(d1, d2)` by an
/// isometry fixing `h²`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Identification {
    pub d1: i64,
    pub d2: i64,
    pub tau: i64,
    pub template: IntMatrix,
    pub norm2_free: bool,
}

/// Finds `τ` with `M_τ(d1, d2) ≅ g` preserving `h²`.
pub fn match_template(g: &IntMatrix, d1: i64, d2: i64) -> Result<Option<Identification>> {
    require_h2_first(g)?;
    let lattice = GramLattice::new(g.clone())?;
    let det: i64 = lattice
        .det()
        .try_into()
        .map_err(|_| Error::OutOfRange("determinant".into()))?;
    for tau in tau_candidates(d1, d2, det)? {
        let spec: ComponentSpec = component_template(d1, d2, tau)?;
        if !spec.positive_definite {
            continue;
        }
        let template = GramLattice::new(spec.gram.clone())?;
        if marked_isometry(&template, &lattice, 1)?.is_some() {
            return Ok(Some(Identification {
                d1: spec.d1,
                d2: spec.d2,
                tau,
                template: spec.gram.clone(),
                norm2_free: spec.norm2_free(),
            }));
        }
    }
    Ok(None)
}

/// All templates `M_τ(d1, d')` matching `g`, for `d' ≤ d_max` carried by a
/// saturated labelling of `g` and `d' ≢ 1 (mod 2)`, `d' ≠ d1`.
pub fn identify_components(g: &IntMatrix, d1: i64, d_max: i64) -> Result<Vec<Identification>> {
    let form = labelling_form(g)?;
    let mut out = Vec::new();
    for rep in represented_discs(&form, d_max)? {
        let d = rep.d;
        if d == d1 || !rep.is_member() || !matches!(d.rem_euclid(6), 0 | 2) {
            continue;
        }
        if let Some(id) = match_template(g, d1, d)? {
            out.push(id);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frame_of(rows: [[i64; 3]; 3]) -> IntMatrix {
        veronese_frame(&GramLattice::from_arrays(&rows).unwrap())
            .unwrap()
            .gram()
            .clone()
    }

    #[test]
    fn reference_frames() {
        assert_eq!(
            frame_of([[3, 1, 1], [1, 7, 0], [1, 0, 9]]),
            IntMatrix::from_arrays(&[[3, 4, 1], [4, 12, 1], [1, 1, 9]])
        );
        assert_eq!(
            frame_of([[3, 1, 1], [1, 7, -2], [1, -2, 13]]),
            IntMatrix::from_arrays(&[[3, 4, 1], [4, 12, -1], [1, -1, 13]])
        );
        assert_eq!(
            frame_of([[3, 1, 0], [1, 7, 1], [0, 1, 14]]),
            IntMatrix::from_arrays(&[[3, 4, 0], [4, 12, 1], [0, 1, 14]])
        );
    }

    #[test]
    fn no_frame() {
        let g = GramLattice::from_arrays(&[[3, 0, 0], [0, 5, 0], [0, 0, 7]]).unwrap();
        assert_eq!(veronese_frame(&g), Err(Error::NoVeroneseFrame));
    }

    #[test]
    fn labelling_forms() {
        let f = labelling_form(&IntMatrix::from_arrays(&[[3, 1, 1], [1, 7, -16], [1, -16, 49]])).unwrap();
        assert_eq!(f, BinaryForm::new(20, -98, 146));
        let f = labelling_form(&IntMatrix::from_arrays(&[[3, 4, 3], [4, 12, 1], [3, 1, 13]])).unwrap();
        assert_eq!(f, BinaryForm::new(20, -18, 30));
    }

    #[test]
    fn identify_the_146_image() {
        let img = IntMatrix::from_arrays(&[[3, 4, 3], [4, 12, 1], [3, 1, 13]]);
        let id = match_template(&img, 20, 146).unwrap().unwrap();
        assert_eq!(id.tau, -16);
        assert_eq!(
            id.template,
            IntMatrix::from_arrays(&[[3, 1, 1], [1, 7, -16], [1, -16, 49]])
        );
    }
}
