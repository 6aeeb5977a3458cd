//! Integral lattices given by Gram matrices.

pub mod ambient;
pub mod binary;
pub mod disc;
pub mod enumerate;
pub mod gram;
pub mod isometry;
pub mod snf;

pub use ambient::{i21_2, is_saturated_rows, AmbientVectors, E8};
pub use binary::BinaryForm;
pub use disc::{discriminant_group, dual_basis, DiscGroup};
pub use enumerate::{find_vector_of_norm, has_vector_of_norm, vectors_of_norm, vectors_up_to};
pub use gram::{is_positive_definite, parse_gram, parse_matrix, GramLattice};
pub use isometry::{isometry_exists, marked_isometry};
pub use snf::{smith_normal_form, Smith};
