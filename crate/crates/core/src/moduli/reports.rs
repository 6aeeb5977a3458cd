//! End-to-end runs of the component pipeline: build `M_τ`, pass to the
//! Veronese frame, apply the Cremona image law, and read off which
//! discriminants the image carries.

use serde::Serialize;

use super::component::{component_template, tau_range, ComponentSpec};
use super::discs::admissible;
use super::discs::tau_bound;
use super::frame::{
    identify_components, labelling_form, match_template, represented_discs, veronese_frame_with_basis, Identification,
    RepresentedDisc,
};
use crate::cremona::{cremona_gram_image, MarkedGram};
use crate::error::{Error, Result};
use crate::lattice::{isometry_exists, marked_isometry, BinaryForm, GramLattice};
use crate::matrix::{int, IntMatrix};

/// Discriminants of divisors known to contain rational cubics, plus the
/// singular ones.
pub const EXCLUDED: [i64; 8] = [2, 6, 8, 14, 18, 26, 38, 42];

/// Default upper end of the search for a bigger admissible discriminant.
pub const DEFAULT_MAX_SEARCH: i64 = 500;

/// Upper end used when listing the discriminants carried by an image.
pub const LISTING_MAX: i64 = 200;

fn clause(clause: &str, detail: impl Into<String>) -> Error {
    Error::Clause {
        clause: clause.into(),
        detail: detail.into(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExclusionCheck {
    pub d: i64,
    pub represented: bool,
    /// A modulus `q` with `f ≢ d (mod q)` everywhere, when one exists.
    pub obstruction_modulus: Option<u32>,
}

fn exclusions(form: &BinaryForm) -> Result<Vec<ExclusionCheck>> {
    EXCLUDED
        .iter()
        .map(|&d| {
            Ok(ExclusionCheck {
                d,
                represented: form.represents(&int(d))?.is_some(),
                obstruction_modulus: form.local_obstruction(&int(d), 64),
            })
        })
        .collect()
}

/// The pipeline up to the image, shared by all reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ImageData {
    pub source: ComponentSpec,
    pub marked_source: MarkedGram,
    pub frame_basis: IntMatrix,
    pub image: MarkedGram,
    pub image_disc: i64,
    pub image_form: BinaryForm,
}

pub fn image_of(d1: i64, d2: i64, tau: i64) -> Result<ImageData> {
    let source = component_template(d1, d2, tau)?;
    let frame = veronese_frame_with_basis(&source.gram)?;
    let image = cremona_gram_image(&frame.marked);
    let image_disc = image
        .det()
        .try_into()
        .map_err(|_| Error::OutOfRange("determinant".into()))?;
    let image_form = labelling_form(image.gram())?;
    Ok(ImageData {
        marked_source: frame.marked,
        frame_basis: frame.basis,
        image,
        image_disc,
        image_form,
        source,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalityReport {
    #[serde(flatten)]
    pub data: ImageData,
    pub target_disc: i64,
    /// The image written as a template `M_τ(20, target)`.
    pub image_template: Option<Identification>,
    pub template_form: Option<BinaryForm>,
    pub target_witness: Option<RepresentedDisc>,
    pub represented: Vec<RepresentedDisc>,
    pub exclusions: Vec<ExclusionCheck>,
    pub excluded_list_clear: bool,
}

impl RationalityReport {
    pub fn check(&self) -> Result<()> {
        let src = &self.data.source;
        if src.disc != self.data.image_disc || src.disc != src.closed_form_disc {
            return Err(clause(
                "determinant",
                format!("source {} vs image {}", src.disc, self.data.image_disc),
            ));
        }
        if !src.norm2_free() || !src.all_saturated() {
            return Err(clause("source component", "norm-2 vector or unsaturated"));
        }
        if !self.target_witness.as_ref().is_some_and(RepresentedDisc::is_member) {
            return Err(clause(
                "image divisor",
                format!("{} not carried by a saturated labelling", self.target_disc),
            ));
        }
        if self.image_template.is_none() {
            return Err(clause(
                "image component",
                format!("no M_tau(20, {}) template matches", self.target_disc),
            ));
        }
        if !self.excluded_list_clear {
            let hit: Vec<i64> = self.exclusions.iter().filter(|e| e.represented).map(|e| e.d).collect();
            return Err(clause("cannot be in the list", format!("represented: {hit:?}")));
        }
        Ok(())
    }
}

pub fn rationality_report(d: i64, tau: i64, target: i64) -> Result<RationalityReport> {
    let data = image_of(20, d, tau)?;
    let image_template = match_template(data.image.gram(), 20, target)?;
    let template_form = image_template
        .as_ref()
        .map(|t| labelling_form(&t.template))
        .transpose()?;
    let represented = represented_discs(&data.image_form, LISTING_MAX.max(target))?;
    let target_witness = represented.iter().find(|r| r.d == target).cloned();
    let exclusions = exclusions(&data.image_form)?;
    let excluded_list_clear = exclusions.iter().all(|e| !e.represented);
    Ok(RationalityReport {
        data,
        target_disc: target,
        image_template,
        template_form,
        target_witness,
        represented,
        exclusions,
        excluded_list_clear,
    })
}

/// `(d, τ, d')`: the components of `C₂₀ ∩ C_d` sent into `C_{d'}`.
pub const NEW_RATIONALS: [(i64, i64, i64); 3] = [(26, 0, 146), (38, -2, 62), (42, 1, 182)];

pub fn reproduce_new_rationals() -> Result<Vec<RationalityReport>> {
    NEW_RATIONALS
        .iter()
        .map(|&(d, tau, target)| {
            let r = rationality_report(d, tau, target)?;
            r.check()?;
            Ok(r)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum WitnessSearch {
    WitnessFound { d_prime: i64, witness: RepresentedDisc },
    InconclusiveBelowBound { bound: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BiggerDiscReport {
    pub d: i64,
    #[serde(flatten)]
    pub data: ImageData,
    pub expected_form: BinaryForm,
    /// Every `d' ≤ d` represented by the image form.
    pub small_represented: Vec<RepresentedDisc>,
    /// All of them are multiples of 20.
    pub only_multiples_of_20: bool,
    /// Clause (1): no admissible `d' ≤ d` is represented.
    pub clause1: bool,
    /// Clause (2): smallest admissible `d' > d` with a saturated labelling.
    pub clause2: WitnessSearch,
}

pub fn bigger_disc_report(d: i64, max_search: i64) -> Result<BiggerDiscReport> {
    if d < 14 || !admissible(d) {
        return Err(Error::InvalidDiscriminant(format!(
            "{d} is not an admissible discriminant ≥ 14"
        )));
    }
    let n = d / 6;
    let (tau, expected_form) = if d % 6 == 2 {
        (0, BinaryForm::new(20, -18, 6 * n + 6))
    } else {
        (1, BinaryForm::new(20, 14, 6 * n + 2))
    };
    let data = image_of(20, d, tau)?;
    if data.image_form != expected_form {
        return Err(clause(
            "image labelling form",
            format!("{} != {}", data.image_form, expected_form),
        ));
    }
    let small_represented = represented_discs(&data.image_form, d)?;
    let only_multiples_of_20 = small_represented.iter().all(|r| r.d % 20 == 0);
    let clause1 = small_represented.iter().all(|r| !admissible(r.d));
    let mut clause2 = WitnessSearch::InconclusiveBelowBound { bound: max_search };
    for dp in d + 1..=max_search {
        if !admissible(dp) {
            continue;
        }
        let reps = represented_discs_single(&data.image_form, dp)?;
        if let Some(w) = reps.filter(RepresentedDisc::is_member) {
            clause2 = WitnessSearch::WitnessFound {
                d_prime: dp,
                witness: w,
            };
            break;
        }
    }
    Ok(BiggerDiscReport {
        d,
        data,
        expected_form,
        small_represented,
        only_multiples_of_20,
        clause1,
        clause2,
    })
}

fn represented_discs_single(form: &BinaryForm, d: i64) -> Result<Option<RepresentedDisc>> {
    use num_integer::Integer;
    use num_traits::One;
    let reps = form.representations(&int(d))?;
    Ok(reps.first().map(|w| RepresentedDisc {
        d,
        witness: w.clone(),
        saturated_witness: reps.iter().find(|(b, c)| b.gcd(c).is_one()).cloned(),
    }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurveyRow {
    pub tau: i64,
    /// `(3 1 1; 1 7 τ; 1 τ 5)`.
    pub gram: IntMatrix,
    /// The general `M_τ(20, 14)` construction gives the same matrix, so its
    /// embedding in `I₂₁,₂` certifies saturation.
    pub template_agrees: bool,
    pub det: i64,
    pub closed_form_det: i64,
    pub norm2_free: bool,
    pub saturated: bool,
    /// `|τ| ≤ N`, the range covered by the general existence statement.
    pub guaranteed: bool,
    /// A saturated labelling of discriminant 8 exists.
    pub in_c8: bool,
    /// The image statement depends on a general member containing a
    /// Veronese surface, which is only known off `C₈`.
    pub conditional: bool,
    pub image: MarkedGram,
    pub image_form: BinaryForm,
    /// Discriminants from `{2, 6, 14, 18, 26, 38, 42, 62}` carried by
    /// saturated labellings of the image.
    pub image_in: Vec<i64>,
    pub image_components: Vec<Identification>,
    /// The image has a labelling of discriminant 2 or 6.
    pub singular_image: bool,
}

const SURVEY_MARKERS: [i64; 8] = [2, 6, 14, 18, 26, 38, 42, 62];

/// The nine components `|τ| ≤ 4` of `C₂₀ ∩ C₁₄`.
pub fn c20_c14_survey() -> Result<Vec<SurveyRow>> {
    let n = tau_bound(20, 14)?;
    (-4..=4)
        .map(|tau| {
            let gram = IntMatrix::from_arrays(&[[3, 1, 1], [1, 7, tau], [1, tau, 5]]);
            let data = image_of(20, 14, tau)?;
            let src = &data.source;
            let src_form = labelling_form(&gram)?;
            let gram_check = gram.clone();
            let in_c8 = represented_discs_single(&src_form, 8)?.is_some_and(|r| r.is_member());
            let mut image_in = Vec::new();
            for d in SURVEY_MARKERS {
                if represented_discs_single(&data.image_form, d)?.is_some_and(|r| r.is_member()) {
                    image_in.push(d);
                }
            }
            let image_components = identify_components(data.image.gram(), 20, 70)?;
            Ok(SurveyRow {
                tau,
                template_agrees: src.gram == gram,
                det: gram
                    .det()
                    .try_into()
                    .map_err(|_| Error::OutOfRange("determinant".into()))?,
                gram,
                closed_form_det: src.closed_form_disc,
                norm2_free: src.norm2_free(),
                saturated: src.all_saturated() && src.gram == gram_check,
                guaranteed: tau.abs() <= n,
                in_c8,
                conditional: tau.abs() == 4,
                singular_image: image_in.iter().any(|&d| d == 2 || d == 6),
                image_in,
                image_components,
                image: data.image,
                image_form: data.image_form,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvarianceRow {
    pub d: i64,
    pub tau: i64,
    /// The image is isometric to the source by an isometry fixing `h²`.
    pub invariant: bool,
    pub image_components: Vec<Identification>,
}

/// Runs every guaranteed component of `C₂₀ ∩ C_d` through the image law.
pub fn invariance_sweep(ds: &[i64], d_max: i64) -> Result<Vec<InvarianceRow>> {
    let mut rows = Vec::new();
    for &d in ds {
        for tau in tau_range(20, d)? {
            let data = image_of(20, d, tau)?;
            let src = GramLattice::new(data.source.gram.clone())?;
            let img = data.image.lattice()?;
            let invariant = marked_isometry(&src, &img, 1)?.is_some();
            let image_components = if invariant {
                Vec::new()
            } else {
                identify_components(data.image.gram(), 20, d_max)?
            };
            rows.push(InvarianceRow {
                d,
                tau,
                invariant,
                image_components,
            });
        }
    }
    Ok(rows)
}

/// Whether the rank-3 lattices are isometric at all (ignoring `h²`).
pub fn abstractly_isometric(a: &IntMatrix, b: &IntMatrix) -> Result<bool> {
    Ok(isometry_exists(&GramLattice::new(a.clone())?, &GramLattice::new(b.clone())?)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn new_rationals_pass() {
        let reports = reproduce_new_rationals().unwrap();
        let taus: Vec<i64> = reports.iter().map(|r| r.image_template.as_ref().unwrap().tau).collect();
        assert_eq!(taus, vec![-16, 8, 18]);
        assert_eq!(
            reports[0].data.image.gram(),
            &IntMatrix::from_arrays(&[[3, 4, 3], [4, 12, 1], [3, 1, 13]])
        );
        assert_eq!(reports[0].template_form, Some(BinaryForm::new(20, -98, 146)));
    }

    #[test]
    fn survey_images() {
        let rows = c20_c14_survey().unwrap();
        assert_eq!(rows.len(), 9);
        assert!(rows.iter().all(|r| r.template_agrees && r.norm2_free && r.saturated));
        let at = |t: i64| rows.iter().find(|r| r.tau == t).unwrap();
        assert_eq!(at(0).image_in, vec![18, 62]);
        assert!(at(-4).singular_image && at(-4).in_c8);
        assert!(at(4).image_components.iter().any(|c| (c.d2, c.tau) == (26, -6)));
        // (20, 22, 14) has minimum 12 off the axis and 20 on it
        assert!(!at(4).in_c8);
        let hits = rows
            .iter()
            .filter(|r| ![0, 4, -4].contains(&r.tau))
            .filter(|r| r.image_in.iter().any(|d| [14, 26, 38, 42].contains(d)))
            .count();
        assert_eq!(hits, 6);
    }

    #[test]
    fn bigger_disc_14_and_26() {
        for d in [14, 26] {
            let r = bigger_disc_report(d, DEFAULT_MAX_SEARCH).unwrap();
            assert!(r.clause1 && r.only_multiples_of_20);
            assert!(
                matches!(r.clause2, WitnessSearch::WitnessFound { .. }),
                "{d}: {:?}",
                r.clause2
            );
        }
        assert!(bigger_disc_report(20, 500).is_err());
    }
}
