//! Plane cubics, their covariants and flex configurations, and the
//! construction of genus-2 curves on products of elliptic curves that make
//! order-3 elements of Sha visible.

#![allow(clippy::needless_range_loop)]

pub mod arith;
pub mod covariants;
pub mod data;
pub mod ellcurve;
pub mod error;
pub mod flex;
pub mod genus2;
pub mod theta;

pub use error::{Error, ErrorClass, Result};
