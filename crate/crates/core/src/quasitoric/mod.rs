//! Omnioriented quasitoric manifolds as combinatorial data, their integral
//! cohomology in the face-ring presentation, and the characteristic numbers
//! indexed by compositions.

mod charnum;
mod data;
mod face_ring;
mod lattice;
mod presets;

pub use charnum::{char_function, char_function_with, char_number, char_number_with, CharFunction};
pub use data::{f_h_vector, product, Issue, Quasitoric, QuasitoricData, ValidationReport, MAX_VERTICES};
pub use face_ring::{admissible_monomials, graded_piece, top_eval, GradedPiece, Monomial, TopClass};
pub use lattice::{kernel_lattice, KernelLattice};
pub use presets::{preset_cpn, preset_hirzebruch};
