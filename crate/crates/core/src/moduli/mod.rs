//! Components of `C_{d₁} ∩ C_{d₂}` in the moduli of cubic fourfolds, their
//! Veronese frames, and the discriminants carried by their Cremona images.

pub mod component;
pub mod discs;
pub mod frame;
pub mod reports;

pub use component::{component_gram, component_template, tau_range, ComponentCase, ComponentSpec};
pub use discs::{admissible, disc_nonempty, tau_bound};
pub use frame::{
    identify_components, labelling_form, match_template, represented_discs, veronese_frame, veronese_frame_with_basis,
    Identification, RepresentedDisc, VeroneseFrame,
};
pub use reports::{
    bigger_disc_report, c20_c14_survey, image_of, invariance_sweep, reproduce_new_rationals, BiggerDiscReport,
    RationalityReport, SurveyRow, WitnessSearch,
};
