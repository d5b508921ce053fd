//! Worked-example inputs: the curves 681b1, 681c1 and 2006e1, plane cubic
//! models of order-3 Sha elements on 681b1 and 2006e1, and the known
//! contravariants and genus-2 form used as golden values.

use rug::Rational;

use crate::arith::rational::q;
use crate::arith::{BilinearForm, TernaryCubic};

pub use crate::ellcurve::weierstrass::named::{e2006e1, e681b1, e681c1};

/// `y^2 z + xyz - (x^3 + x^2 z - 1154 xz^2 - 15345 z^3)`.
pub fn f681() -> TernaryCubic<Rational> {
    e681b1().cubic()
}

/// The covering cubic for 681b1.
pub fn c1_681() -> TernaryCubic<Rational> {
    TernaryCubic::from_ints([1, 5, 5, 2, 1, 1, 1, -5, 2, 6])
}

pub fn p0_681() -> TernaryCubic<Rational> {
    TernaryCubic::from_ints([-478, 2525, 916, -1127, 29, -160, 753, -1228, 260, 301])
}

pub fn q0_681() -> TernaryCubic<Rational> {
    TernaryCubic::from_ints([
        -122314, 618551, 191092, -271157, -7825, -28120, 184011, -264916, 55892, 73663,
    ])
}

pub fn p_681() -> TernaryCubic<Rational> {
    TernaryCubic::from_ints([-2308, 3462, -5, -275056, 5, 6, 136951, 13853, -3, 0])
}

pub fn q_681() -> TernaryCubic<Rational> {
    TernaryCubic::from_ints([
        -725020, 1087530, 27721, -65861608, -27721, -30, 32749549, 3217559, 15, 24,
    ])
}

/// `55033 P - 235 Q`, a model of 681c1 in the dual pencil of `F`.
pub fn e2_member_681() -> TernaryCubic<Rational> {
    TernaryCubic::combine(&q(55033), &p_681(), &q(-235), &q_681())
}

/// `55033 P0 - 235 Q0`, the same member in the pencil of the covering cubic.
pub fn c2_681() -> TernaryCubic<Rational> {
    TernaryCubic::combine(&q(55033), &p0_681(), &q(-235), &q0_681())
}

/// `4xu - 155zu + xv + 2yv - 40xw + yw + 1314zw`.
pub fn c_form_681() -> BilinearForm {
    BilinearForm::from_ints([[4, 1, -40], [0, 2, 1], [-155, 0, 1314]])
}

pub fn f2006() -> TernaryCubic<Rational> {
    e2006e1().cubic()
}

/// The covering cubic for 2006e1.
pub fn c1_2006() -> TernaryCubic<Rational> {
    TernaryCubic::from_ints([20, 44, 21, -77, 71, 44, 31, 3, 150, 1])
}
