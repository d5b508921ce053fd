//! The stabilizer of a flex scheme, its commutator pairing, and the
//! inverse-transpose anti-isometry between a scheme and its dual.

use rug::Complex;

use crate::arith::numeric::{self, normalize_projective, projective_distance};
use crate::arith::{Field, Mat3};
use crate::error::{Error, Result};
use crate::flex::hesse::{coords_label, hesse_labeling, label_coords, HesseLabeling};
use crate::flex::{dual_scheme, FlexScheme};

/// A projective transformation, stored as a lift scaled so that its
/// largest-modulus entry is 1.
#[derive(Clone, Debug)]
pub struct ProjTransform {
    pub lift: Mat3<Complex>,
}

impl ProjTransform {
    pub fn new(m: Mat3<Complex>) -> Self {
        ProjTransform {
            lift: m.normalized(),
        }
    }

    pub fn identity(prec: u32) -> Self {
        Self::new(Mat3::identity(&Complex::with_val(prec, 1)))
    }

    /// The transform sending `src[i]` to `dst[i]` for four points in
    /// general position.
    pub fn from_points(src: &[[Complex; 3]; 4], dst: &[[Complex; 3]; 4]) -> Result<Self> {
        let frame = |p: &[[Complex; 3]; 4]| -> Result<Mat3<Complex>> {
            let base = Mat3::from_cols([p[0].clone(), p[1].clone(), p[2].clone()]);
            let inv = base
                .inverse()
                .ok_or_else(|| Error::BadConfiguration("three of four points collinear".into()))?;
            let lam = inv.apply(&p[3]);
            if lam.iter().any(|l| l.is_negligible()) {
                return Err(Error::BadConfiguration(
                    "four points not in general position".into(),
                ));
            }
            Ok(base.mul(&Mat3::diag(lam)))
        };
        let a = frame(src)?;
        let b = frame(dst)?;
        let ainv = a
            .inverse()
            .ok_or_else(|| Error::BadConfiguration("degenerate frame".into()))?;
        Ok(Self::new(b.mul(&ainv)))
    }

    pub fn apply(&self, p: &[Complex; 3]) -> [Complex; 3] {
        normalize_projective(&self.lift.apply(p))
    }

    pub fn compose(&self, other: &Self) -> Self {
        Self::new(self.lift.mul(&other.lift))
    }

    pub fn inverse(&self) -> Self {
        Self::new(
            self.lift
                .inverse()
                .expect("projective transforms are invertible"),
        )
    }

    /// `M^{-T}`.
    pub fn inverse_transpose(&self) -> Self {
        Self::new(
            self.lift
                .inverse_transpose()
                .expect("projective transforms are invertible"),
        )
    }

    pub fn same_as(&self, other: &Self) -> bool {
        self.lift.projectively_equal(&other.lift)
    }

    /// Conjugate `M g M^{-1}`.
    pub fn conjugate(&self, m: &Mat3<Complex>) -> Self {
        let minv = m.inverse().expect("invertible conjugator");
        Self::new(m.mul(&self.lift).mul(&minv))
    }
}

/// The nine transformations preserving a flex scheme.
///
/// Element `3 r + c` is the translation by `(r, c)` of the labelling's
/// affine plane; element 0 is the identity.
#[derive(Clone, Debug)]
pub struct ThetaStabilizer {
    pub elements: Vec<ProjTransform>,
    pub cayley_table: [[usize; 9]; 9],
    /// `pairing[i][j] = k` means the commutator scalar is `exp(2 pi i k / 3)`.
    pub pairing: [[u8; 9]; 9],
    pub labeling: HesseLabeling,
}

fn translate(label: usize, v: (usize, usize)) -> usize {
    let (r, c) = label_coords(label);
    coords_label(r + v.0, c + v.1)
}

/// Builds `Θ(Φ)` modulo scalars from the labelling.
pub fn stabilizer(phi: &FlexScheme) -> Result<ThetaStabilizer> {
    let labeling = hesse_labeling(phi)?;
    stabilizer_with(phi, labeling)
}

pub fn stabilizer_with(phi: &FlexScheme, labeling: HesseLabeling) -> Result<ThetaStabilizer> {
    let pts = labeling.labeled_points(phi);
    let tol = numeric::threshold(phi.precision);
    let base = [1usize, 2, 4, 5];
    let mut elements = Vec::with_capacity(9);
    for idx in 0..9 {
        let v = (idx / 3, idx % 3);
        let src: [[Complex; 3]; 4] = base.map(|l| pts[l - 1].clone());
        let dst: [[Complex; 3]; 4] = base.map(|l| pts[translate(l, v) - 1].clone());
        let g = ProjTransform::from_points(&src, &dst)?;
        for lab in 1..=9 {
            let img = g.apply(&pts[lab - 1]);
            if projective_distance(&img, &pts[translate(lab, v) - 1]) >= tol {
                return Err(Error::BadConfiguration(format!(
                    "translation {v:?} does not permute the flexes"
                )));
            }
        }
        elements.push(g);
    }
    let mut cayley_table = [[0usize; 9]; 9];
    for i in 0..9 {
        for j in 0..9 {
            let prod = elements[i].compose(&elements[j]);
            cayley_table[i][j] = elements
                .iter()
                .position(|e| e.same_as(&prod))
                .ok_or_else(|| Error::BadConfiguration("stabilizer not closed".into()))?;
        }
    }
    let mut s = ThetaStabilizer {
        elements,
        cayley_table,
        pairing: [[0; 9]; 9],
        labeling,
    };
    s.pairing = weil_pairing_table(&s)?;
    Ok(s)
}

/// Exponent `k` of the cube root of unity nearest to `z`, with a margin check.
pub fn nearest_cube_root(z: &Complex) -> Result<u8> {
    let prec = z.prec().0;
    let mut best = (0u8, f64::INFINITY);
    for k in 0..3 {
        let d = numeric::modulus_f64(&(z.clone() - numeric::cube_root_of_unity(prec, k)));
        if d < best.1 {
            best = (k as u8, d);
        }
    }
    if best.1 > 1e-6 {
        return Err(Error::NonScalarCommutator(best.1));
    }
    Ok(best.0)
}

/// Commutator scalars `g h g^{-1} h^{-1}` for all pairs of elements.
pub fn weil_pairing_table(s: &ThetaStabilizer) -> Result<[[u8; 9]; 9]> {
    let mut t = [[0u8; 9]; 9];
    for i in 0..9 {
        for j in 0..9 {
            let (g, h) = (&s.elements[i].lift, &s.elements[j].lift);
            let c = g
                .mul(h)
                .mul(&g.inverse().expect("invertible"))
                .mul(&h.inverse().expect("invertible"));
            let scalar = c
                .scalar_value()
                .ok_or_else(|| Error::NonScalarCommutator(c.scalar_deviation()))?;
            t[i][j] = nearest_cube_root(&scalar)?;
        }
    }
    Ok(t)
}

impl ThetaStabilizer {
    pub fn is_abelian(&self) -> bool {
        (0..9).all(|i| (0..9).all(|j| self.cayley_table[i][j] == self.cayley_table[j][i]))
    }

    /// Every non-identity element has order 3.
    pub fn has_exponent_three(&self) -> bool {
        (1..9).all(|i| {
            let sq = self.cayley_table[i][i];
            sq != 0 && self.cayley_table[sq][i] == 0
        })
    }

    pub fn pairing_alternating(&self) -> bool {
        (0..9).all(|i| self.pairing[i][i] == 0)
            && (0..9).all(|i| {
                (0..9).all(|j| (self.pairing[i][j] + self.pairing[j][i]).is_multiple_of(3))
            })
    }

    pub fn pairing_nondegenerate(&self) -> bool {
        (1..9).all(|i| (0..9).any(|j| self.pairing[i][j] != 0))
    }

    /// Each non-identity element moves every flex.
    pub fn acts_freely(&self, phi: &FlexScheme) -> bool {
        let tol = numeric::threshold(phi.precision);
        self.elements.iter().skip(1).all(|g| {
            phi.points
                .iter()
                .all(|p| projective_distance(&g.apply(p), p) >= tol)
        })
    }

    /// Index of the element equal to `g`, if any.
    pub fn index_of(&self, g: &ProjTransform) -> Option<usize> {
        self.elements.iter().position(|e| e.same_as(g))
    }
}

#[derive(Clone, Debug)]
pub struct AntiIsometryReport {
    /// `lambda[i]` is the index in `Θ(Φ*)` of `g_i^{-T}`.
    pub lambda: [usize; 9],
    pub onto: bool,
    pub pairing_inverted: bool,
    pub stabilizer: ThetaStabilizer,
    pub dual_stabilizer: ThetaStabilizer,
}

impl AntiIsometryReport {
    pub fn passed(&self) -> bool {
        self.onto && self.pairing_inverted
    }
}

/// Checks that `g -> g^{-T}` maps `Θ(Φ)` onto `Θ(Φ*)` and inverts the pairing.
pub fn anti_isometry_check(phi: &FlexScheme) -> Result<AntiIsometryReport> {
    let dual = dual_scheme(phi)?;
    let s1 = stabilizer(phi)?;
    let s2 = stabilizer(&dual)?;
    let mut lambda = [usize::MAX; 9];
    for (i, g) in s1.elements.iter().enumerate() {
        if let Some(k) = s2.index_of(&g.inverse_transpose()) {
            lambda[i] = k;
        }
    }
    let mut seen = [false; 9];
    for &k in &lambda {
        if k < 9 {
            seen[k] = true;
        }
    }
    let onto = seen.iter().all(|&b| b);
    let pairing_inverted = onto
        && (0..9).all(|i| {
            (0..9).all(|j| (s2.pairing[lambda[i]][lambda[j]] + s1.pairing[i][j]) % 3 == 0)
        });
    Ok(AntiIsometryReport {
        lambda,
        onto,
        pairing_inverted,
        stabilizer: s1,
        dual_stabilizer: s2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::TernaryCubic;
    use crate::flex::{fermat_flexes, flex_points};

    fn fermat_generators(prec: u32) -> (ProjTransform, ProjTransform) {
        let w = numeric::cube_root_of_unity(prec, 1);
        let w2 = numeric::cube_root_of_unity(prec, 2);
        let one = Complex::with_val(prec, 1);
        let zero = Complex::new(prec);
        let g = Mat3::diag([one.clone(), w, w2]);
        // (x:y:z) -> (y:z:x)
        let h = Mat3::from_rows([
            [zero.clone(), one.clone(), zero.clone()],
            [zero.clone(), zero.clone(), one.clone()],
            [one, zero.clone(), zero],
        ]);
        (ProjTransform::new(g), ProjTransform::new(h))
    }

    #[test]
    fn fermat_stabilizer_contains_generators() {
        let prec = 256;
        let phi = fermat_flexes(prec);
        let s = stabilizer(&phi).unwrap();
        assert_eq!(s.elements.len(), 9);
        assert!(s.is_abelian() && s.has_exponent_three());
        let (g, h) = fermat_generators(prec);
        let gi = s.index_of(&g).unwrap();
        let hi = s.index_of(&h).unwrap();
        // the group they generate is all nine elements
        let mut reached = std::collections::BTreeSet::new();
        for a in 0..3 {
            for b in 0..3 {
                let mut k = 0;
                for _ in 0..a {
                    k = s.cayley_table[k][gi];
                }
                for _ in 0..b {
                    k = s.cayley_table[k][hi];
                }
                reached.insert(k);
            }
        }
        assert_eq!(reached.len(), 9);
        assert_ne!(s.pairing[gi][hi], 0);
    }

    #[test]
    fn generator_commutator_is_primitive_root() {
        let (g, h) = fermat_generators(256);
        let c = g
            .lift
            .mul(&h.lift)
            .mul(&g.lift.inverse().unwrap())
            .mul(&h.lift.inverse().unwrap());
        let k = nearest_cube_root(&c.scalar_value().unwrap()).unwrap();
        assert_ne!(k, 0);
    }

    #[test]
    fn fermat_theta_is_self_dual() {
        let prec = 256;
        let s = stabilizer(&fermat_flexes(prec)).unwrap();
        for e in &s.elements {
            assert!(s.index_of(&e.inverse_transpose()).is_some());
        }
        let r = anti_isometry_check(&fermat_flexes(prec)).unwrap();
        assert!(r.passed());
    }

    #[test]
    fn pairing_properties_and_conjugation() {
        let prec = 384;
        let phi = flex_points(
            &TernaryCubic::from_ints([2, 0, 1, -3, 1, 0, 1, 4, 0, -1]),
            prec,
        )
        .unwrap();
        let s = stabilizer(&phi).unwrap();
        assert!(s.pairing_alternating() && s.pairing_nondegenerate());
        assert!(s.acts_freely(&phi));
        let m = Mat3::from_ints([[1, 0, 2], [1, 1, 0], [0, 3, 1]]).to_complex(prec);
        let moved = stabilizer(&phi.transform(&m)).unwrap();
        for e in &s.elements {
            assert!(moved.index_of(&e.conjugate(&m)).is_some());
        }
        assert!(anti_isometry_check(&phi).unwrap().passed());
    }
}
