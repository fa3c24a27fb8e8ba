//! Exact integer linear algebra over arbitrary-precision integers.

pub mod abelian;
pub mod diophantine;
pub mod maschke;
pub mod matrix;
pub mod normal_form;

pub use abelian::{solve_abelian, AbelianEquation, AbelianSystem, AbelianTerm};
pub use diophantine::{
    avoid_affine_subsets, lattice_intersect, solve_diophantine, AffineLattice, CongruenceBox,
    ExcludedSet,
};
pub use maschke::{maschke_complement, Complement, ZGModuleAction};
pub use matrix::{int_vec, IntMatrix};
pub use normal_form::{hnf, is_hermite, snf};
