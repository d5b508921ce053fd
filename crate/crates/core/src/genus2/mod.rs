//! The genus-2 curve on a product of two elliptic curves.
//!
//! `E1` is a Weierstrass cubic `F(x,y,z)`, `E2` a member `G(u,v,w)` of the
//! dual pencil (or a Weierstrass cubic linearly equivalent to one). The
//! curve `D: F = G = xu + yv + zw = 0` is pushed through `[3] x [3]` and
//! the image is cut out by a bilinear form, found by interpolation.

mod interp;
mod pipeline;
mod sample;
mod surface;

pub use interp::{interpolate_c, verify_c, CResult, InvolutionReport, VerifyReport};
pub use pipeline::{pipeline, run_on_surface, Bundle, Convention, Options};
pub use sample::{push, push_3x3, sample_d, DSample, ImagePair};
pub use surface::{build_surface, Factor2, SurfacePair};
