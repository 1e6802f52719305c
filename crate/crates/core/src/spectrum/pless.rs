//! The first seven binary power-moment identities, valid when the dual code
//! has no nonzero words of weight at most 6.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::spectrum::closed::p2;
use crate::spectrum::WeightDistribution;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlessIdentity {
    /// Moment order `r` in `sum i^r A_i`.
    pub order: u32,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlessReport {
    pub holds: bool,
    /// Order of the first identity that fails.
    pub first_failure: Option<u32>,
    pub identities: Vec<PlessIdentity>,
}

/// `sum i^r A_i` for `r = 0..=6` against the closed right-hand sides in `n`
/// and `k`.
pub fn pless_verify(dist: &WeightDistribution, n: u64, k: u32) -> PlessReport {
    let n = BigInt::from(n);
    let poly = |coeffs: &[i64]| -> BigInt {
        // coeffs from the highest power of n down to n^1
        let deg = coeffs.len();
        coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| BigInt::from(c) * num_traits::pow(n.clone(), deg - i))
            .sum()
    };
    let rhs_polys: [BigInt; 7] = [
        BigInt::from(1),
        poly(&[1]),
        poly(&[1, 1]),
        poly(&[1, 3, 0]),
        poly(&[1, 6, 3, -2]),
        poly(&[1, 10, 15, -10, 0]),
        poly(&[1, 15, 45, -15, -30, 16]),
    ];

    let mut identities = Vec::with_capacity(7);
    let mut first_failure = None;
    for (r, rp) in rhs_polys.into_iter().enumerate() {
        let lhs: BigInt = dist
            .entries()
            .iter()
            .map(|(&w, c)| num_traits::pow(BigInt::from(w), r) * BigInt::from(c.clone()))
            .sum();
        let rhs = p2(k as i64 - r as i64) * BigRational::from_integer(rp);
        let holds = BigRational::from_integer(lhs.clone()) == rhs;
        if !holds && first_failure.is_none() {
            first_failure = Some(r as u32);
        }
        identities.push(PlessIdentity {
            order: r as u32,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            holds,
        });
    }
    PlessReport {
        holds: first_failure.is_none(),
        first_failure,
        identities,
    }
}
