//! The Hessian and the Caylean of a ternary cubic.

use crate::arith::form::{det3, Form};
use crate::arith::{Field, TernaryCubic};
use crate::error::{Error, Result};

/// `H(F) = -1/2 det(d^2 F / dx_i dx_j)`, of weight 2.
pub fn hessian<T: Field>(f: &TernaryCubic<T>) -> TernaryCubic<T> {
    let like = &f.coeffs[0];
    let g = f.to_form();
    let first: [Form<T>; 3] = std::array::from_fn(|i| g.partial(i));
    let second: [[Form<T>; 3]; 3] =
        std::array::from_fn(|i| std::array::from_fn(|j| first[i].partial(j)));
    let half = like.one_like() / &like.int_like(-2);
    let h = det3(&second).scale(&half);
    TernaryCubic::from_form(&h, like).expect("hessian of a cubic is a cubic")
}

/// The Caylean `P(F)`: minus the determinant of the first partials at
/// `(0,z,-y), (-z,0,x), (y,-x,0)`, divided by `xyz`. Weight 4, contravariant.
pub fn caylean<T: Field>(f: &TernaryCubic<T>) -> Result<TernaryCubic<T>> {
    let like = &f.coeffs[0];
    let one = like.one_like();
    let g = f.to_form();
    let x = Form::var(&one, 0);
    let y = Form::var(&one, 1);
    let z = Form::var(&one, 2);
    let neg = |p: &Form<T>| p.scale(&like.int_like(-1));
    let points: [[Form<T>; 3]; 3] = [
        [Form::zero(), z.clone(), neg(&y)],
        [neg(&z), Form::zero(), x.clone()],
        [y, neg(&x), Form::zero()],
    ];
    let partials: [Form<T>; 3] = std::array::from_fn(|i| g.partial(i));
    let rows: [[Form<T>; 3]; 3] =
        std::array::from_fn(|r| std::array::from_fn(|c| partials[c].compose(&points[r], &one)));
    let d = det3(&rows);
    let q = d
        .div_xyz()
        .ok_or_else(|| Error::Internal("Caylean determinant not divisible by xyz".into()))?;
    TernaryCubic::from_form(&q.scale(&like.int_like(-1)), like)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::cubic::named::{fermat, xyz};
    use crate::arith::rational::q;

    #[test]
    fn fermat_covariants() {
        assert_eq!(hessian(&fermat()), xyz().scale(&q(-108)));
        assert_eq!(caylean(&fermat()).unwrap(), xyz().scale(&q(-54)));
    }

    #[test]
    fn hessian_of_triangle_and_zero() {
        assert_eq!(hessian(&xyz()), xyz().scale(&q(-1)));
        let z = TernaryCubic::zero(&q(0));
        assert_eq!(hessian(&z), z);
        assert_eq!(caylean(&z).unwrap(), z);
    }
}
