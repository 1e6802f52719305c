use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2m::{FieldElement, FieldSpec};

/// `S(a,b,c) = sum over x of (-1)^tr(a x^5 + b x^3 + c x)`.
pub fn exp_sum(a: FieldElement, b: FieldElement, c: FieldElement, field: &FieldSpec) -> i64 {
    field
        .elements()
        .map(|x| {
            let x3 = field.pow(x, 3);
            let x5 = field.mul(x3, field.square(x));
            let arg = field.add(field.add(field.mul(a, x5), field.mul(b, x3)), field.mul(c, x));
            1 - 2 * field.trace(arg) as i64
        })
        .sum()
}

/// Weight `2^(2s-1) - S/2` of the cyclic codeword with exponential sum `S`.
pub fn weight_from_sum(sum: i64, s: u32) -> Result<i64> {
    if sum % 2 != 0 {
        return Err(Error::OddSum(sum));
    }
    Ok((1i64 << (2 * s - 1)) - sum / 2)
}

/// Rank data of the quadratic form `x -> tr(a x^5 + b x^3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct QuadFormProfile {
    #[serde(skip)]
    pub a: FieldElement,
    #[serde(skip)]
    pub b: FieldElement,
    pub rank: u32,
    pub kernel_size: u32,
}

/// Rank of `tr(a x^5 + b x^3)` from the size of the zero set of the
/// linearized polynomial `a^4 x^16 + b^4 x^8 + b^2 x^2 + a x`, found by
/// exhaustive search over the field.
pub fn quadform_rank(a: FieldElement, b: FieldElement, field: &FieldSpec) -> Result<QuadFormProfile> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::ZeroForm);
    }
    let a4 = field.pow(a, 4);
    let b4 = field.pow(b, 4);
    let b2 = field.square(b);
    let kernel_size = field
        .elements()
        .filter(|&x| {
            let x2 = field.square(x);
            let x8 = field.pow(x2, 4);
            let x16 = field.square(x8);
            let v = field.add(
                field.add(field.mul(a4, x16), field.mul(b4, x8)),
                field.add(field.mul(b2, x2), field.mul(a, x)),
            );
            v.is_zero()
        })
        .count() as u32;
    assert!(kernel_size.is_power_of_two(), "kernel of a linearized polynomial is a subspace");
    let rank = field.m() - kernel_size.trailing_zeros();
    Ok(QuadFormProfile {
        a,
        b,
        rank,
        kernel_size,
    })
}
