//! Design parameters from the counting identity and from the closed-form
//! λ lists of the two families.

use num_bigint::BigUint;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::spectrum::{c2_params, frac, int, kasami_r, kasami_u, p2};

/// `λ = b·C(k,t) / C(v,t)`, required to be an integer.
pub fn lambda_from_identity(b: &BigUint, k: u32, v: u32, t: u32) -> Result<BigUint> {
    if t > k || k > v || b.is_zero() {
        return Err(Error::InvalidParameters(format!(
            "need t <= k <= v and b >= 1, got t={t} k={k} v={v} b={b}"
        )));
    }
    let num = b * binomial(BigUint::from(k), BigUint::from(t));
    let den = binomial(BigUint::from(v), BigUint::from(t));
    if !(&num % &den).is_zero() {
        return Err(Error::NonIntegerLambda(format!(
            "{b}*C({k},{t})/C({v},{t}) = {num}/{den}"
        )));
    }
    Ok(num / den)
}

fn to_lambda(value: BigRational, label: &str) -> Result<BigUint> {
    if !value.is_integer() || value.is_negative() {
        return Err(Error::NonIntegerLambda(format!("row {label}: {value}")));
    }
    Ok(value.to_integer().to_biguint().expect("non-negative"))
}

fn weight_key(w: &BigRational) -> Option<u64> {
    if w.is_integer() {
        u64::try_from(w.to_integer()).ok()
    } else {
        None
    }
}

fn pick(rows: Vec<(&str, BigRational, BigRational)>, i: u64, what: &str) -> Result<BigUint> {
    for (label, w, lambda) in rows {
        if weight_key(&w) == Some(i) {
            return to_lambda(lambda, label);
        }
    }
    Err(Error::InapplicableParameters(format!("weight {i} is not listed for {what}")))
}

/// λ of the 2-design held by weight `i` of the extended `C_1` code.
///
/// The centre-weight bullet is evaluated as `A_i (2^(2s-1)-1) / (2(2^(2s)-1))`;
/// as printed, without the factor 2, it is twice the counted value.
pub fn theorem_lambda_c1(s: u32, i: u64) -> Result<BigUint> {
    if !(3..=15).contains(&s) {
        return Err(Error::InapplicableParameters(format!(
            "c1 design list needs 3 <= s <= 15, got s={s}"
        )));
    }
    let s = s as i64;
    let h = p2(2 * s - 1);
    let one = int(1);
    let full = p2(2 * s) - &one;
    let a = frac(2, 15) * p2(s - 1) * (int(3) * p2(4 * s) + int(5) * p2(2 * s) - int(8));
    let b = frac(7, 3) * p2(3 * s - 4);
    let c = frac(1, 15) * p2(s - 3) * (p2(4 * s - 2) - int(5) * p2(2 * s - 2) + int(1));
    let centre = (int(29) * p2(6 * s - 5) - int(33) * p2(4 * s - 5) + int(17) * p2(2 * s - 3) - int(2))
        * (&h - &one)
        / (int(2) * &full);
    let rows = vec![
        ("2^(2s-1)", h.clone(), centre),
        (
            "2^(2s-1)-2^(s-1)",
            &h - p2(s - 1),
            &a * (&h - p2(s - 1) - &one) / (p2(s) + &one),
        ),
        (
            "2^(2s-1)+2^(s-1)",
            &h + p2(s - 1),
            &a * (&h + p2(s - 1) - &one) / (p2(s) - &one),
        ),
        (
            "2^(2s-1)-2^s",
            &h - p2(s),
            &b * (&h - p2(s) - &one) * (p2(s - 1) - &one),
        ),
        (
            "2^(2s-1)+2^s",
            &h + p2(s),
            &b * (&h + p2(s) - &one) * (p2(s - 1) + &one),
        ),
        (
            "2^(2s-1)-2^(s+1)",
            &h - p2(s + 1),
            &c * (&h - p2(s + 1) - &one) * (p2(s - 2) - &one) / &full,
        ),
        (
            "2^(2s-1)+2^(s+1)",
            &h + p2(s + 1),
            &c * (&h + p2(s + 1) - &one) * (p2(s - 2) + &one) / &full,
        ),
    ];
    pick(rows, i, &format!("c1 s={s}"))
}

/// λ of the 2-design held by weight `i` of the extended `C_2` code,
/// dispatching on whether `d' = d` or `d' = 2d`.
pub fn theorem_lambda_c2(s: u32, l: u32, i: u64) -> Result<BigUint> {
    let (s, d, same) = c2_params(s, l)?;
    let h = p2(2 * s - 1);
    let one = int(1);
    let den2d = p2(2 * d) - &one;
    let mut rows = Vec::new();
    if same {
        let q = p2(2 * (s + d)) - p2(2 * s + d) - p2(2 * s) + p2(s + 2 * d) - p2(s + d) + p2(2 * d);
        rows.push((
            "2^(2s-1)-2^(s-1)",
            &h - p2(s - 1),
            p2(s - 1) * (p2(s) - &one) * (&h - p2(s - 1) - &one) * &q / (&den2d * (p2(s) + &one)),
        ));
        rows.push((
            "2^(2s-1)+2^(s-1)",
            &h + p2(s - 1),
            p2(s - 1) * (&h + p2(s - 1) - &one) * &q / &den2d,
        ));
        rows.push((
            "2^(2s-1)-2^(s+d-1)",
            &h - p2(s + d - 1),
            p2(s - d - 1) * (p2(s - d) - &one) * (p2(s + d) - &one) * (&h - p2(s + d - 1) - &one) / &den2d,
        ));
        rows.push((
            "2^(2s-1)+2^(s+d-1)",
            &h + p2(s + d - 1),
            p2(s - d - 1) * (p2(s - d) + &one) * (p2(s + d) - &one) * (&h + p2(s + d - 1) - &one) / &den2d,
        ));
        rows.push((
            "2^(2s-1)",
            h.clone(),
            (&h - &one) * (p2(3 * s - d) - p2(2 * s - 2 * d) + &one),
        ));
    } else {
        let r = kasami_r(s, d);
        let u = kasami_u(s, d);
        let pd1 = p2(d) + &one;
        for sign in [-1i64, 1] {
            let sg = int(sign);
            let w = &h + &sg * p2(s - 1);
            let lam = p2(3 * d) * &r * (&w - &one) * &w / (&den2d * &pd1 * (p2(s) + &one));
            rows.push((if sign < 0 { "2^(2s-1)-2^(s-1)" } else { "2^(2s-1)+2^(s-1)" }, w, lam));
            let w = &h + &sg * p2(s + d - 1);
            let lam = &u * &w * (&w - &one) / (p2(d) * &pd1 * &pd1);
            rows.push((if sign < 0 { "2^(2s-1)-2^(s+d-1)" } else { "2^(2s-1)+2^(s+d-1)" }, w, lam));
            let w = &h + &sg * p2(s + 2 * d - 1);
            let lam = (p2(s - d) - &one) * &w * (&w - &one) / (p2(4 * d) * &pd1 * &den2d);
            rows.push((if sign < 0 { "2^(2s-1)-2^(s+2d-1)" } else { "2^(2s-1)+2^(s+2d-1)" }, w, lam));
        }
        let inner = p2(3 * s - d) - p2(3 * s - 2 * d) + p2(3 * s - 3 * d) - p2(3 * s - 4 * d) + p2(3 * s - 5 * d)
            + p2(2 * s - d)
            - p2(2 * s - 2 * d + 1)
            + p2(2 * s - 3 * d)
            - p2(2 * s - 4 * d)
            + &one;
        rows.push(("2^(2s-1)", h.clone(), int(2) * (&h - &one) * inner / p2(d)));
    }
    pick(rows, i, &format!("c2 s={s} l={l}"))
}
