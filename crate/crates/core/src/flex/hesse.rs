//! Labeling of the Hesse configuration and the combinatorial dual scheme.
//!
//! Labels `1..=9` are identified with the affine plane over `F_3` through
//! `label = 3 r + c + 1`; three points are collinear exactly when their
//! coordinates sum to zero.

use rug::{Complex, Float};

use super::scheme::FlexScheme;
use crate::arith::numeric::{self, cross, dot, norm, normalize_projective};
use crate::arith::{Form, TernaryCubic};
use crate::error::{Error, Result};

/// The twelve lines of the configuration by label, in four triangles
/// (parallel classes) of three lines each.
pub const HESSE_LINES: [[usize; 3]; 12] = [
    [1, 2, 3],
    [4, 5, 6],
    [7, 8, 9],
    [1, 4, 7],
    [2, 5, 8],
    [3, 6, 9],
    [1, 5, 9],
    [2, 6, 7],
    [3, 4, 8],
    [1, 6, 8],
    [2, 4, 9],
    [3, 5, 7],
];

/// `order[label - 1]` is the index of the point carrying that label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HesseLabeling {
    pub order: [usize; 9],
}

impl HesseLabeling {
    pub fn identity() -> Self {
        HesseLabeling {
            order: std::array::from_fn(|i| i),
        }
    }

    pub fn lines(&self) -> &'static [[usize; 3]; 12] {
        &HESSE_LINES
    }

    /// Point indices of each labelled line.
    pub fn index_lines(&self) -> Vec<[usize; 3]> {
        HESSE_LINES
            .iter()
            .map(|l| l.map(|lab| self.order[lab - 1]))
            .collect()
    }

    /// Points of `phi` listed by label.
    pub fn labeled_points(&self, phi: &FlexScheme) -> Vec<[Complex; 3]> {
        self.order.iter().map(|&i| phi.points[i].clone()).collect()
    }
}

/// Affine coordinates of a label.
pub fn label_coords(label: usize) -> (usize, usize) {
    ((label - 1) / 3, (label - 1) % 3)
}

pub fn coords_label(r: usize, c: usize) -> usize {
    3 * (r % 3) + (c % 3) + 1
}

/// `|det(a,b,c)| / (|a| |b| |c|)`.
fn collinearity(a: &[Complex; 3], b: &[Complex; 3], c: &[Complex; 3]) -> Float {
    let d = dot(&cross(a, b), c);
    numeric::modulus(&d) / (norm(a) * norm(b) * norm(c))
}

/// All collinear triples of point indices.
pub fn collinear_triples(phi: &FlexScheme) -> Vec<[usize; 3]> {
    let tol = numeric::threshold(phi.precision);
    let n = phi.points.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if collinearity(&phi.points[i], &phi.points[j], &phi.points[k]) < tol {
                    out.push([i, j, k]);
                }
            }
        }
    }
    out
}

/// Labels the nine points so that the collinear triples are exactly
/// [`HESSE_LINES`].
pub fn hesse_labeling(phi: &FlexScheme) -> Result<HesseLabeling> {
    let triples = collinear_triples(phi);
    if triples.len() != 12 {
        return Err(Error::BadConfiguration(format!(
            "{} collinear triples instead of 12",
            triples.len()
        )));
    }
    let mut third = [[usize::MAX; 9]; 9];
    for t in &triples {
        for (a, b, c) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
            let (p, q, r) = (t[a], t[b], t[c]);
            if third[p][q] != usize::MAX {
                return Err(Error::BadConfiguration("pair on two lines".into()));
            }
            third[p][q] = r;
            third[q][p] = r;
        }
    }
    for p in 0..9 {
        for q in 0..9 {
            if p != q && third[p][q] == usize::MAX {
                return Err(Error::BadConfiguration("pair on no line".into()));
            }
        }
    }
    let mut coord: [Option<(usize, usize)>; 9] = [None; 9];
    coord[0] = Some((0, 0));
    coord[1] = Some((0, 1));
    coord[third[0][1]] = Some((0, 2));
    let c = (0..9).find(|&i| coord[i].is_none()).expect("nine points");
    coord[c] = Some((1, 0));
    loop {
        let mut changed = false;
        for p in 0..9 {
            for q in 0..9 {
                if p == q {
                    continue;
                }
                let (Some(a), Some(b)) = (coord[p], coord[q]) else {
                    continue;
                };
                let r = third[p][q];
                let v = ((6 - a.0 - b.0) % 3, (6 - a.1 - b.1) % 3);
                match coord[r] {
                    None => {
                        coord[r] = Some(v);
                        changed = true;
                    }
                    Some(w) if w != v => {
                        return Err(Error::BadConfiguration("not an affine plane".into()))
                    }
                    _ => {}
                }
            }
        }
        if !changed {
            break;
        }
    }
    let mut order = [usize::MAX; 9];
    for (i, c) in coord.iter().enumerate() {
        let (r, cc) = c.ok_or_else(|| Error::BadConfiguration("unlabelled point".into()))?;
        let lab = coords_label(r, cc);
        if order[lab - 1] != usize::MAX {
            return Err(Error::BadConfiguration("label used twice".into()));
        }
        order[lab - 1] = i;
    }
    let labeling = HesseLabeling { order };
    // the labelled lines must be exactly the collinear triples
    let mut want: Vec<[usize; 3]> = labeling
        .index_lines()
        .into_iter()
        .map(|mut l| {
            l.sort();
            l
        })
        .collect();
    want.sort();
    let mut have = triples;
    have.sort();
    if want != have {
        return Err(Error::BadConfiguration("labelled lines disagree".into()));
    }
    Ok(labeling)
}

/// Line through the two best separated of `pts`, checked against all of them.
fn fit_line(pts: &[[Complex; 3]], prec: u32) -> Result<[Complex; 3]> {
    let mut best: Option<([Complex; 3], Float)> = None;
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            let l = cross(&pts[i], &pts[j]);
            let n = norm(&l) / (norm(&pts[i]) * norm(&pts[j]));
            if best.as_ref().is_none_or(|(_, bn)| n > *bn) {
                best = Some((l, n));
            }
        }
    }
    let (l, _) = best.ok_or_else(|| Error::BadConfiguration("need two points".into()))?;
    let l = normalize_projective(&l);
    let tol = numeric::threshold(prec);
    for p in pts {
        let r = numeric::modulus(&dot(&l, p)) / (norm(&l) * norm(p));
        if r >= tol {
            return Err(Error::BadConfiguration(format!(
                "point off the fitted line (residual {:e})",
                r.to_f64()
            )));
        }
    }
    Ok(l)
}

/// The twelve lines as dual vectors, in [`HESSE_LINES`] order.
pub fn line_vectors(phi: &FlexScheme, lab: &HesseLabeling) -> Result<Vec<[Complex; 3]>> {
    let pts = lab.labeled_points(phi);
    HESSE_LINES
        .iter()
        .map(|l| {
            fit_line(
                &[
                    pts[l[0] - 1].clone(),
                    pts[l[1] - 1].clone(),
                    pts[l[2] - 1].clone(),
                ],
                phi.precision,
            )
        })
        .collect()
}

/// The dual flex scheme by the twelve-line construction.
///
/// Within each triangle, the two lines other than `l_{ijk}` meet in a point
/// `L_{ijk}`; the four points `L` whose label contains `i` lie on a line
/// `p_i`. The result lists `p_1, ..., p_9` in label order, as points of the
/// dual plane.
pub fn dual_scheme(phi: &FlexScheme) -> Result<FlexScheme> {
    let lab = hesse_labeling(phi)?;
    let lines = line_vectors(phi, &lab)?;
    let mut l_points: Vec<[Complex; 3]> = Vec::with_capacity(12);
    for (k, _) in HESSE_LINES.iter().enumerate() {
        let tri = k / 3;
        let others: Vec<usize> = (3 * tri..3 * tri + 3).filter(|&m| m != k).collect();
        l_points.push(normalize_projective(&cross(
            &lines[others[0]],
            &lines[others[1]],
        )));
    }
    let mut duals = Vec::with_capacity(9);
    for i in 1..=9 {
        let through: Vec<[Complex; 3]> = HESSE_LINES
            .iter()
            .enumerate()
            .filter(|(_, l)| l.contains(&i))
            .map(|(k, _)| l_points[k].clone())
            .collect();
        debug_assert_eq!(through.len(), 4);
        duals.push(fit_line(&through, phi.precision)?);
    }
    FlexScheme::new(duals, phi.precision)
}

/// The four triangles as products of their three line forms.
pub fn triangle_cubics(
    phi: &FlexScheme,
    lab: &HesseLabeling,
) -> Result<Vec<TernaryCubic<Complex>>> {
    let lines = line_vectors(phi, lab)?;
    let like = Complex::new(phi.precision);
    (0..4)
        .map(|t| {
            let f = (0..3).fold(
                Form::monomial(Complex::with_val(phi.precision, 1), [0, 0, 0]),
                |acc, k| acc.mul(&Form::linear(&lines[3 * t + k])),
            );
            TernaryCubic::from_form(&f, &like)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Mat3;
    use crate::flex::scheme::{fermat_flexes, flex_points};

    #[test]
    fn fermat_labeling_matches_table() {
        let phi = fermat_flexes(256);
        let lab = hesse_labeling(&phi).unwrap();
        let pts = lab.labeled_points(&phi);
        for l in HESSE_LINES {
            let c = collinearity(&pts[l[0] - 1], &pts[l[1] - 1], &pts[l[2] - 1]);
            assert!(c < numeric::threshold(256));
        }
        // every point on exactly four lines
        for i in 1..=9 {
            assert_eq!(HESSE_LINES.iter().filter(|l| l.contains(&i)).count(), 4);
        }
    }

    #[test]
    fn labeling_survives_linear_change() {
        let prec = 256;
        let phi = flex_points(
            &TernaryCubic::from_ints([1, 5, 5, 2, 1, 1, 1, -5, 2, 6]),
            prec,
        )
        .unwrap();
        let m = Mat3::from_ints([[2, 1, 0], [1, -1, 3], [0, 4, 1]]).to_complex(prec);
        let lab = hesse_labeling(&phi).unwrap();
        assert_eq!(hesse_labeling(&phi.transform(&m)).unwrap(), lab);
    }

    #[test]
    fn fermat_scheme_is_self_dual() {
        let phi = fermat_flexes(256);
        assert!(dual_scheme(&phi).unwrap().same_points(&phi));
    }

    #[test]
    fn dual_is_contravariant() {
        let prec = 384;
        let phi = fermat_flexes(prec);
        let mq = Mat3::from_ints([[1, 2, 0], [0, 1, -1], [3, 0, 1]]);
        let m = mq.to_complex(prec);
        let mit = mq.inverse_transpose().unwrap().to_complex(prec);
        let lhs = dual_scheme(&phi.transform(&m)).unwrap();
        let rhs = dual_scheme(&phi).unwrap().transform(&mit);
        assert!(lhs.same_points(&rhs));
    }
}
