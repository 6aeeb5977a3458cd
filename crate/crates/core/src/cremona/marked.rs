use num_traits::Zero;
use serde::Serialize;

use crate::chow::primed_transformation;
use crate::error::{Error, Result};
use crate::lattice::{isometry_exists, marked_isometry, parse_matrix, GramLattice};
use crate::matrix::{int, Int, IntMatrix};

/// Gram matrix of `A(X)` on a basis `(h², v, s)` starting with the
/// Veronese frame `(3 4; 4 12)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MarkedGram {
    gram: IntMatrix,
    labels: [String; 3],
}

pub const SOURCE_LABELS: [&str; 3] = ["h2", "v", "s"];
pub const IMAGE_LABELS: [&str; 3] = ["h2'", "v'", "s'"];

impl MarkedGram {
    pub fn new(gram: IntMatrix) -> Result<Self> {
        Self::with_labels(gram, SOURCE_LABELS)
    }

    pub fn with_labels(gram: IntMatrix, labels: [&str; 3]) -> Result<Self> {
        if gram.rows() != 3 || gram.cols() != 3 {
            return Err(Error::Dimension(format!(
                "marked Gram must be 3x3, got {}x{}",
                gram.rows(),
                gram.cols()
            )));
        }
        if let Some((i, j)) = gram.first_asymmetry() {
            return Err(Error::Asymmetric(i + 1, j + 1));
        }
        if gram.leading_block(2) != IntMatrix::from_arrays(&[[3, 4], [4, 12]]) {
            return Err(Error::NotVeroneseFrame);
        }
        Ok(MarkedGram {
            gram,
            labels: labels.map(String::from),
        })
    }

    /// The marked Gram with `h²·s = A`, `v·s = B`, `s² = C`.
    pub fn from_abc(a: impl Into<Int>, b: impl Into<Int>, c: impl Into<Int>) -> Self {
        let (a, b, c) = (a.into(), b.into(), c.into());
        let gram = IntMatrix::from_rows(vec![
            vec![int(3), int(4), a.clone()],
            vec![int(4), int(12), b.clone()],
            vec![a, b, c],
        ])
        .expect("3x3");
        MarkedGram {
            gram,
            labels: SOURCE_LABELS.map(String::from),
        }
    }

    /// Accepts a bare matrix (literal or JSON) or the object form
    /// `{"gram": [[..]], "labels": [..]}`.
    pub fn parse(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed.starts_with('{') {
            let value: serde_json::Value =
                serde_json::from_str(trimmed).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
            let gram = value
                .get("gram")
                .ok_or_else(|| Error::Parse("missing \"gram\"".into()))?;
            let m = Self::new(parse_matrix(&gram.to_string())?)?;
            return Ok(m);
        }
        Self::new(parse_matrix(trimmed)?)
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn labels(&self) -> &[String; 3] {
        &self.labels
    }

    pub fn a(&self) -> &Int {
        &self.gram[(0, 2)]
    }

    pub fn b(&self) -> &Int {
        &self.gram[(1, 2)]
    }

    pub fn c(&self) -> &Int {
        &self.gram[(2, 2)]
    }

    pub fn abc(&self) -> (Int, Int, Int) {
        (self.a().clone(), self.b().clone(), self.c().clone())
    }

    pub fn det(&self) -> Int {
        self.gram.det()
    }

    pub fn lattice(&self) -> Result<GramLattice> {
        GramLattice::new(self.gram.clone())
    }
}

/// `(A, B, C) ↦ (4A − B, B, C + (3A − B)²)`.
pub fn cremona_gram_image(g: &MarkedGram) -> MarkedGram {
    let (a, b, c) = g.abc();
    let t = int(3) * &a - &b;
    let image = MarkedGram::from_abc(int(4) * &a - &b, b, c + &t * &t);
    MarkedGram {
        labels: IMAGE_LABELS.map(String::from),
        ..image
    }
}

/// The same image computed on the blowup: inside `A(X) ⊕ ⟨ℓ⟩` with
/// `ℓ² = −1`, take `h'², v', ℓ'` from the basis-change matrix and
/// `s' = s + (s·ℓ')ℓ'` orthogonal to `ℓ'`.
pub fn cremona_image_via_blowup(g: &MarkedGram) -> MarkedGram {
    let mut g4 = IntMatrix::zeros(4, 4);
    for i in 0..3 {
        for j in 0..3 {
            g4[(i, j)] = g.gram[(i, j)].clone();
        }
    }
    g4[(3, 3)] = int(-1);
    let m = primed_transformation();
    // (h², v, ℓ) coordinates sit at positions 0, 1, 3 of (h², v, s, ℓ)
    let lift = |col: usize| -> Vec<Int> {
        let c = m.col(col);
        vec![c[0].clone(), c[1].clone(), Int::zero(), c[2].clone()]
    };
    let (h2p, vp, lp) = (lift(0), lift(1), lift(2));
    let s = vec![int(0), int(0), int(1), int(0)];
    let k = g4.bilinear(&s, &lp);
    let sp: Vec<Int> = s.iter().zip(&lp).map(|(x, y)| x + &k * y).collect();
    debug_assert!(g4.bilinear(&sp, &lp).is_zero());
    let basis = IntMatrix::from_rows(vec![h2p, vp, sp]).expect("3x4");
    let gram = basis.mul(&g4).mul(&basis.transpose());
    MarkedGram::with_labels(gram, IMAGE_LABELS).expect("primed frame is a Veronese frame")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvolutionCheck {
    pub source: MarkedGram,
    pub image: MarkedGram,
    pub double_image: MarkedGram,
    pub det_preserved: bool,
    pub isometric: bool,
    /// An isometry fixing `h²` exists.
    pub h2_preserving: bool,
    pub witness: Option<IntMatrix>,
}

impl InvolutionCheck {
    pub fn holds(&self) -> bool {
        self.det_preserved && self.isometric && self.h2_preserving
    }
}

/// Applies the image rule twice and tests the result against the source.
/// The second application lands in a different marking, so equality is
/// tested up to isometry.
pub fn gram_image_involutive(g: &MarkedGram) -> Result<InvolutionCheck> {
    let image = cremona_gram_image(g);
    let double = cremona_gram_image(&image);
    let src = g.lattice()?;
    let dbl = double.lattice()?;
    let witness = isometry_exists(&src, &dbl)?;
    let h2_preserving = marked_isometry(&src, &dbl, 1)?.is_some();
    Ok(InvolutionCheck {
        det_preserved: g.det() == image.det() && image.det() == double.det(),
        isometric: witness.is_some(),
        h2_preserving,
        witness,
        source: g.clone(),
        image,
        double_image: double,
    })
}
