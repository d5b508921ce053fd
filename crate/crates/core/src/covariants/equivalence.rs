//! Linear equivalence of plane cubics through their flex configurations.

use rug::{Integer, Rational};

use crate::arith::numeric::projective_distance;
use crate::arith::reconstruct::rational_reconstruct_complex;
use crate::arith::{numeric, Mat3, TernaryCubic};
use crate::error::Result;
use crate::flex::flex_points;
use crate::flex::hesse::{coords_label, hesse_labeling, label_coords};
use crate::theta::ProjTransform;

/// The 432 affine maps of the plane over `F_3`, as label permutations
/// (`perm[label - 1]` is the image label).
pub fn affine_label_maps() -> Vec<[usize; 9]> {
    let mut out = Vec::with_capacity(432);
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                for d in 0..3 {
                    if (a * d + 2 * b * c) % 3 == 0 {
                        continue;
                    }
                    for t0 in 0..3 {
                        for t1 in 0..3 {
                            out.push(std::array::from_fn(|i| {
                                let (r, s) = label_coords(i + 1);
                                coords_label(a * r + b * s + t0, c * r + d * s + t1)
                            }));
                        }
                    }
                }
            }
        }
    }
    out
}

/// An exact `M` with `G2∘M` proportional to `G1`, or `None`.
///
/// Such an `M` carries the flexes of `G1` onto those of `G2` and respects
/// the line structure, so it is among the transforms determined by a label
/// correspondence in `AGL(2,3)`; each candidate is built from the four
/// labels `1, 2, 4, 5`, checked on all nine points, reconstructed and
/// verified exactly.
pub fn linear_equivalence(
    g1: &TernaryCubic<Rational>,
    g2: &TernaryCubic<Rational>,
    prec: u32,
) -> Result<Option<Mat3<Rational>>> {
    let phi1 = flex_points(g1, prec)?;
    let phi2 = flex_points(g2, prec)?;
    let p1 = hesse_labeling(&phi1)?.labeled_points(&phi1);
    let p2 = hesse_labeling(&phi2)?.labeled_points(&phi2);
    let tol = numeric::threshold(prec);
    let bound = Integer::from(1) << (prec / 4 - 2);
    let base = [0usize, 1, 3, 4];
    for perm in affine_label_maps() {
        let src = base.map(|i| p1[i].clone());
        let dst = base.map(|i| p2[perm[i] - 1].clone());
        let Ok(t) = ProjTransform::from_points(&src, &dst) else {
            continue;
        };
        if !(0..9).all(|i| projective_distance(&t.apply(&p1[i]), &p2[perm[i] - 1]) < tol) {
            continue;
        }
        let mut rows = [
            [Rational::new(), Rational::new(), Rational::new()],
            [Rational::new(), Rational::new(), Rational::new()],
            [Rational::new(), Rational::new(), Rational::new()],
        ];
        let mut ok = true;
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                match rational_reconstruct_complex(&t.lift.m[i][j], &bound) {
                    Ok(r) => *e = r,
                    Err(_) => ok = false,
                }
            }
        }
        if !ok {
            continue;
        }
        let m = Mat3::from_rows(rows);
        if m.det().cmp0().is_eq() {
            continue;
        }
        if g2.act(&m).proportional_to(g1).is_some() {
            return Ok(Some(m));
        }
    }
    Ok(None)
}
