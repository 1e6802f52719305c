//! Closed-form weight distributions, evaluated row by row in exact
//! rationals. A row that does not come out integral is reported as
//! `NonIntegerCount` naming the row.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::spectrum::WeightDistribution;

/// `2^e` for any integer `e`.
pub(crate) fn p2(e: i64) -> BigRational {
    let one = BigInt::one();
    if e >= 0 {
        BigRational::from_integer(one << e as usize)
    } else {
        BigRational::new(one.clone(), one << (-e) as usize)
    }
}

pub(crate) fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

pub(crate) fn frac(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Converts an exact rational to a non-negative integer, or names `row`.
pub(crate) fn to_count(value: &BigRational, row: &str) -> Result<BigUint> {
    if !value.is_integer() || value.is_negative() {
        return Err(Error::NonIntegerCount {
            row: row.to_string(),
            value: value.to_string(),
        });
    }
    Ok(value.to_integer().to_biguint().expect("non-negative"))
}

struct Table {
    length: u32,
    dimension: u32,
    rows: Vec<(String, BigRational, BigRational)>,
}

impl Table {
    fn new(length: u32, dimension: u32) -> Self {
        Self {
            length,
            dimension,
            rows: Vec::new(),
        }
    }

    fn row(&mut self, label: &str, weight: BigRational, count: BigRational) {
        self.rows.push((label.to_string(), weight, count));
    }

    /// Adds the `-` and `+` rows around the centre weight `half`.
    fn pair(&mut self, offset_label: &str, half: &BigRational, offset: BigRational, minus: BigRational, plus: BigRational) {
        self.row(&format!("2^(2s-1)-{offset_label}"), half - &offset, minus);
        self.row(&format!("2^(2s-1)+{offset_label}"), half + offset, plus);
    }

    fn finish(self) -> Result<WeightDistribution> {
        let mut entries: BTreeMap<u32, BigUint> = BTreeMap::new();
        for (label, weight, count) in &self.rows {
            let c = to_count(count, label)?;
            if !weight.is_integer() || weight.is_negative() {
                return Err(Error::InapplicableParameters(format!(
                    "row {label} has weight {weight}"
                )));
            }
            let w: u32 = weight
                .to_integer()
                .try_into()
                .map_err(|_| Error::InapplicableParameters(format!("row {label} weight overflow")))?;
            *entries.entry(w).or_default() += c;
        }
        Ok(WeightDistribution::new(self.length, self.dimension, entries))
    }
}

fn check_s(s: u32, min: u32) -> Result<i64> {
    if s < min || s > 15 {
        return Err(Error::InapplicableParameters(format!(
            "closed form needs {min} <= s <= 15, got s={s}"
        )));
    }
    Ok(s as i64)
}

/// Extended `C1` family, valid for `s >= 3`. Length `2^(2s)`, dimension `6s + 1`.
pub fn closed_form_c1(s: u32) -> Result<WeightDistribution> {
    let s = check_s(s, 3)?;
    let half = p2(2 * s - 1);
    let mut t = Table::new(1 << (2 * s), (6 * s + 1) as u32);
    t.row("0", int(0), int(1));
    t.row(
        "2^(2s-1)",
        half.clone(),
        int(29) * p2(6 * s - 5) - int(33) * p2(4 * s - 5) + int(17) * p2(2 * s - 3) - int(2),
    );
    let a = frac(2, 15) * p2(2 * s) * (int(3) * p2(4 * s) + int(5) * p2(2 * s) - int(8));
    t.pair("2^(s-1)", &half, p2(s - 1), a.clone(), a);
    let b = frac(7, 3) * p2(4 * s - 4) * (p2(2 * s) - int(1));
    t.pair("2^s", &half, p2(s), b.clone(), b);
    let c = frac(1, 15) * p2(2 * s - 4) * (p2(4 * s - 2) - int(5) * p2(2 * s - 2) + int(1));
    t.pair("2^(s+1)", &half, p2(s + 1), c.clone(), c);
    t.row("2^(2s)", p2(2 * s), int(1));
    t.finish()
}

/// Cyclic `C_1` of length `2^(2s) - 1` and dimension `6s`, valid for `s >= 3`.
///
/// These per-weight counts split each extended row into its `h = 0` and
/// `h = 1` halves.
pub fn closed_form_c1_cyclic(s: u32) -> Result<WeightDistribution> {
    let s = check_s(s, 3)?;
    let half = p2(2 * s - 1);
    let mut t = Table::new((1 << (2 * s)) - 1, (6 * s) as u32);
    t.row("0", int(0), int(1));
    t.row(
        "2^(2s-1)",
        half.clone(),
        int(29) * p2(6 * s - 6) - int(33) * p2(4 * s - 6) + int(17) * p2(2 * s - 4) - int(1),
    );
    let fifteenth = frac(1, 15);
    t.pair(
        "2^(s-1)",
        &half,
        p2(s - 1),
        &fifteenth
            * (int(3) * p2(6 * s) + int(3) * p2(5 * s) + int(5) * p2(4 * s) + int(5) * p2(3 * s)
                - p2(2 * s + 3)
                - p2(s + 3)),
        &fifteenth
            * (int(3) * p2(6 * s) - int(3) * p2(5 * s) + int(5) * p2(4 * s) - int(5) * p2(3 * s)
                - p2(2 * s + 3)
                + p2(s + 3)),
    );
    let sev = frac(7, 3) * p2(3 * s - 4);
    t.pair(
        "2^s",
        &half,
        p2(s),
        &sev * (p2(3 * s - 1) + p2(2 * s) - p2(s - 1) - int(1)),
        &sev * (p2(3 * s - 1) - p2(2 * s) - p2(s - 1) + int(1)),
    );
    let lo = &fifteenth * p2(s - 3);
    t.pair(
        "2^(s+1)",
        &half,
        p2(s + 1),
        &lo * (p2(5 * s - 4) + p2(4 * s - 2) - int(5) * p2(3 * s - 4) - int(5) * p2(2 * s - 2)
            + p2(s - 2)
            + int(1)),
        &lo * (p2(5 * s - 4) - p2(4 * s - 2) - int(5) * p2(3 * s - 4) + int(5) * p2(2 * s - 2)
            + p2(s - 2)
            - int(1)),
    );
    t.finish()
}

/// Validated `(s, l, d, d')` for the `C2` closed forms.
pub(crate) fn c2_params(s: u32, l: u32) -> Result<(i64, i64, bool)> {
    let m = 2 * s;
    if !(2..=15).contains(&s) || l == 0 || l >= m || l == s {
        return Err(Error::InapplicableParameters(format!(
            "invalid c2 parameters s={s}, l={l}"
        )));
    }
    let d = s.gcd(&l);
    let dp = (s + l).gcd(&(2 * l));
    if dp != d && dp != 2 * d {
        return Err(Error::InapplicableParameters(format!(
            "d'={dp} is neither d={d} nor 2d"
        )));
    }
    Ok((s as i64, d as i64, dp == d))
}

/// Extended `C2` family: length `2^(2s)`, dimension `5s + 1`.
pub fn closed_form_c2_extended(s: u32, l: u32) -> Result<WeightDistribution> {
    let (s, d, same) = c2_params(s, l)?;
    let half = p2(2 * s - 1);
    let mut t = Table::new(1 << (2 * s), (5 * s + 1) as u32);
    t.row("0", int(0), int(1));
    if same {
        let q = kasami_q(s, d);
        let a = p2(2 * s) * (p2(s) - int(1)) * q / (p2(2 * d) - int(1));
        t.pair("2^(s-1)", &half, p2(s - 1), a.clone(), a);
        let b = p2(2 * (s - d)) * (p2(s + d) - int(1)) * (p2(2 * s) - int(1)) / (p2(2 * d) - int(1));
        t.pair("2^(s+d-1)", &half, p2(s + d - 1), b.clone(), b);
        t.row(
            "2^(2s-1)",
            half.clone(),
            int(2) * (p2(3 * s - d) - p2(2 * (s - d)) + int(1)) * (p2(2 * s) - int(1)),
        );
    } else {
        let r = kasami_r(s, d);
        let a = p2(2 * s + 3 * d) * (p2(s) - int(1)) * r / ((p2(2 * d) - int(1)) * (p2(d) + int(1)));
        t.pair("2^(s-1)", &half, p2(s - 1), a.clone(), a);
        let sq = (p2(d) + int(1)) * (p2(d) + int(1));
        let b = p2(2 * s - d) * (p2(2 * s) - int(1)) * kasami_u(s, d) / sq;
        t.pair("2^(s+d-1)", &half, p2(s + d - 1), b.clone(), b);
        t.row(
            "2^(2s-1)",
            half.clone(),
            int(2) * (p2(2 * s) - int(1)) * kasami_w(s, d),
        );
        let c = p2(2 * s - 4 * d) * (p2(s - d) - int(1)) * (p2(2 * s) - int(1))
            / ((p2(d) + int(1)) * (p2(2 * d) - int(1)));
        t.pair("2^(s+2d-1)", &half, p2(s + 2 * d - 1), c.clone(), c);
    }
    t.row("2^(2s)", p2(2 * s), int(1));
    t.finish()
}

/// Cyclic `C_2`: length `2^(2s) - 1`, dimension `5s`.
pub fn closed_form_c2_cyclic(s: u32, l: u32) -> Result<WeightDistribution> {
    let (s, d, same) = c2_params(s, l)?;
    let half = p2(2 * s - 1);
    let mut t = Table::new((1 << (2 * s)) - 1, (5 * s) as u32);
    t.row("0", int(0), int(1));
    if same {
        let q = kasami_q(s, d);
        let den = p2(2 * d) - int(1);
        t.pair(
            "2^(s-1)",
            &half,
            p2(s - 1),
            p2(s - 1) * (p2(2 * s) - int(1)) * &q / &den,
            p2(s - 1) * (p2(s) - int(1)) * (p2(s) - int(1)) * &q / &den,
        );
        let base = p2(s - d - 1) * (p2(s + d) - int(1)) * (p2(2 * s) - int(1)) / &den;
        t.pair(
            "2^(s+d-1)",
            &half,
            p2(s + d - 1),
            &base * (p2(s - d) + int(1)),
            &base * (p2(s - d) - int(1)),
        );
        t.row(
            "2^(2s-1)",
            half.clone(),
            (p2(3 * s - d) - p2(2 * (s - d)) + int(1)) * (p2(2 * s) - int(1)),
        );
    } else {
        let r = kasami_r(s, d);
        let den = (p2(2 * d) - int(1)) * (p2(d) + int(1));
        // The `+` row carries 2^(s+3d-1); it is what makes this table sum
        // to 2^(5s), extend to the extended table, and match enumeration.
        t.pair(
            "2^(s-1)",
            &half,
            p2(s - 1),
            p2(s + 3 * d - 1) * (p2(2 * s) - int(1)) * &r / &den,
            p2(s + 3 * d - 1) * (p2(s) - int(1)) * (p2(s) - int(1)) * &r / &den,
        );
        let sq = (p2(d) + int(1)) * (p2(d) + int(1));
        let base = p2(s - 1) * (p2(2 * s) - int(1)) * kasami_u(s, d) / sq;
        t.pair(
            "2^(s+d-1)",
            &half,
            p2(s + d - 1),
            &base * (p2(s - d) + int(1)),
            &base * (p2(s - d) - int(1)),
        );
        t.row("2^(2s-1)", half.clone(), (p2(2 * s) - int(1)) * kasami_w(s, d));
        let base = p2(s - 2 * d - 1) * (p2(s - d) - int(1)) * (p2(2 * s) - int(1))
            / ((p2(d) + int(1)) * (p2(2 * d) - int(1)));
        t.pair(
            "2^(s+2d-1)",
            &half,
            p2(s + 2 * d - 1),
            &base * (p2(s - 2 * d) + int(1)),
            &base * (p2(s - 2 * d) - int(1)),
        );
    }
    t.finish()
}

/// `2^(2(s+d)) - 2^(2s+d) - 2^(2s) + 2^(s+2d) - 2^(s+d) + 2^(2d)`.
pub(crate) fn kasami_q(s: i64, d: i64) -> BigRational {
    p2(2 * (s + d)) - p2(2 * s + d) - p2(2 * s) + p2(s + 2 * d) - p2(s + d) + p2(2 * d)
}

/// `2^(2s) - 2^(2(s-d)) - 2^(2s-3d) + 2^s - 2^(s-d) + 1`.
pub(crate) fn kasami_r(s: i64, d: i64) -> BigRational {
    p2(2 * s) - p2(2 * (s - d)) - p2(2 * s - 3 * d) + p2(s) - p2(s - d) + int(1)
}

/// `2^s + 2^(s-d) + 2^(s-2d) + 1`.
pub(crate) fn kasami_u(s: i64, d: i64) -> BigRational {
    p2(s) + p2(s - d) + p2(s - 2 * d) + int(1)
}

/// The ten-term factor of the centre-weight count when `d' = 2d`.
pub(crate) fn kasami_w(s: i64, d: i64) -> BigRational {
    p2(3 * s - d) - p2(3 * s - 2 * d) + p2(3 * s - 3 * d) - p2(3 * s - 4 * d) + p2(3 * s - 5 * d)
        + p2(2 * s - d)
        - p2(2 * s - 2 * d + 1)
        + p2(2 * s - 3 * d)
        - p2(2 * s - 4 * d)
        + int(1)
}
