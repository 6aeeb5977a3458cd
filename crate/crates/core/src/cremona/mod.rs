//! The Cremona involution along a Veronese surface, symbolically and on
//! algebraic lattices.

pub mod marked;
pub mod poly;
pub mod symbolic;

pub use marked::{cremona_gram_image, cremona_image_via_blowup, gram_image_involutive, InvolutionCheck, MarkedGram};
pub use poly::SparsePoly;
pub use symbolic::{cofactor_quadrics, involution_check, standard_matrix, InvolutionReport};
