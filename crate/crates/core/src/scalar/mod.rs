//! Exact scalars: `Q`, `H_Q`, centralizers, and linear solving.

mod centralizer;
pub mod linalg;
mod quat;
pub mod rat;

pub use centralizer::{centralizer_of_set, CentralizerDesc};
pub use linalg::{find_conjugator, left_linear_solve_over, right_linear_solve_over};
pub use quat::{commutator, Quat};
pub use rat::Rat;
