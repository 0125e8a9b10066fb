//! Angular-momentum algebra for the rank-2 (quadrupole) transition.

mod halfint;
mod tensor;
mod transition;
mod wigner;

pub use halfint::HalfInt;
pub use tensor::{quad_tensor_matrix, QuadTensorMatrix};
pub use transition::{reduced_element_f, reduced_element_j, selection_rules, TransitionSpec};
pub use wigner::{wigner_3j, wigner_6j};
