//! Flex schemes, the Hesse configuration and the dual flex scheme.

pub mod hesse;
pub mod scheme;

pub use hesse::{dual_scheme, hesse_labeling, HesseLabeling, HESSE_LINES};
pub use scheme::{fermat_flexes, flex_points, rational_flexes, FlexScheme};
