//! Exact and numeric arithmetic shared by every other module.

pub mod bilinear;
pub mod binary;
pub mod cubic;
pub mod field;
pub mod form;
pub mod mat;
pub mod numeric;
pub mod poly;
pub mod rational;
pub mod reconstruct;
pub mod resultant;
pub mod roots;

pub use bilinear::BilinearForm;
pub use cubic::TernaryCubic;
pub use field::Field;
pub use form::Form;
pub use mat::Mat3;
pub use poly::UniPoly;
