//! Elliptic curves: Weierstrass models, group laws, Nagell reduction,
//! point counts and rational point search on plane cubics.

pub mod count;
pub mod law;
pub mod nagell;
pub mod search;
pub mod weierstrass;

pub use count::{count_points_mod_p, non_isogeny_certificate, NonIsogeny};
pub use law::{PointedLaw, WeierstrassLaw};
pub use nagell::{flex_reduction, nagell, CubicMap, NagellReduction, PointedCubic};
pub use search::point_search;
pub use weierstrass::{isomorphic_over_q, IsoTransform, WeierstrassModel};
