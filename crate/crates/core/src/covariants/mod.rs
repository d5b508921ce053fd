//! Covariants and contravariants of ternary cubics, Hesse and dual pencils.

pub mod forms;
pub mod invariants;

pub use forms::{caylean, hessian};
pub use invariants::{invariants, j_exact, CubicInvariants};
pub mod pencil;

pub use pencil::{dual_pencil, Pencil, PencilParameter};
pub mod singular;

pub use singular::{is_singular, singular_members, SingularMembers, SingularityReport, Witness};
pub mod equivalence;
pub mod jinv;

pub use equivalence::linear_equivalence;
pub use jinv::{j_numeric, j_solve_on_pencil, JValue};
