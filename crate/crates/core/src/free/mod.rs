//! Free groups of finite rank.

pub mod quotient;
pub mod solver;
pub mod stallings;
pub mod word;

pub use quotient::{finite_quotient_hom, FiniteQuotientHom};
pub use solver::{solve_free_bounded, FreeBox, FreeOutcome, FreeSystem, FreeToken};
pub use stallings::is_automorphism;
pub use word::{abelianize, free_mul, words_up_to, FreeWord};
