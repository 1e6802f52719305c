//! Weight distributions: exact enumeration, closed-form tables, exponential
//! sums, quadratic-form ranks and power-moment checks.

mod closed;
mod expsum;
mod pless;

pub(crate) use closed::{c2_params, frac, int, kasami_r, kasami_u, p2};
pub use closed::{closed_form_c1, closed_form_c1_cyclic, closed_form_c2_cyclic, closed_form_c2_extended};
pub use expsum::{exp_sum, quadform_rank, weight_from_sum, QuadFormProfile};
pub use pless::{pless_verify, PlessIdentity, PlessReport};

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::codebuild::{generator_basis, par_fold, CodeSpec, LinearCode, Workers};
use crate::error::{Error, Result};
use crate::gf2m::FieldSpec;

/// Largest code dimension [`weight_distribution`] will enumerate.
pub const MAX_ENUMERATION_DIM: usize = 26;

/// Exact weight distribution `w -> A_w` (zero counts omitted).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDistribution {
    length: u32,
    dimension: u32,
    entries: BTreeMap<u32, BigUint>,
}

impl WeightDistribution {
    pub fn new(length: u32, dimension: u32, entries: BTreeMap<u32, BigUint>) -> Self {
        let entries = entries.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Self {
            length,
            dimension,
            entries,
        }
    }

    /// From a dense histogram indexed by weight.
    pub fn from_histogram(length: u32, dimension: u32, hist: &[u64]) -> Self {
        let entries = hist
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(w, &c)| (w as u32, BigUint::from(c)))
            .collect();
        Self {
            length,
            dimension,
            entries,
        }
    }

    /// From `(weight, count)` pairs.
    pub fn from_pairs(length: u32, dimension: u32, pairs: &[(u32, u64)]) -> Self {
        let mut entries = BTreeMap::new();
        for &(w, c) in pairs {
            *entries.entry(w).or_insert_with(BigUint::zero) += c;
        }
        Self::new(length, dimension, entries)
    }

    pub fn length(&self) -> u32 {
        self.length
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn entries(&self) -> &BTreeMap<u32, BigUint> {
        &self.entries
    }

    pub fn count(&self, w: u32) -> BigUint {
        self.entries.get(&w).cloned().unwrap_or_default()
    }

    /// Nonzero weights other than 0.
    pub fn nonzero_weights(&self) -> impl Iterator<Item = u32> + '_ {
        self.entries.keys().copied().filter(|&w| w != 0)
    }

    pub fn total(&self) -> BigUint {
        self.entries.values().sum()
    }

    /// Sum is `2^dimension`, `A_0 = 1`, and weights fit the length.
    pub fn is_consistent(&self) -> bool {
        self.total() == BigUint::one() << self.dimension
            && self.count(0) == BigUint::one()
            && self.entries.keys().all(|&w| w <= self.length)
    }

    /// `A_w = A_(length - w)` for every `w`.
    pub fn is_palindromic(&self) -> bool {
        self.entries
            .iter()
            .all(|(&w, c)| w <= self.length && self.count(self.length - w) == *c)
    }

    pub fn min_nonzero_weight(&self) -> Option<u32> {
        self.nonzero_weights().next()
    }

    /// Weights where `self` and `other` disagree, with both counts.
    pub fn diff(&self, other: &Self) -> Vec<(u32, BigUint, BigUint)> {
        let mut ws: Vec<u32> = self.entries.keys().chain(other.entries.keys()).copied().collect();
        ws.sort_unstable();
        ws.dedup();
        ws.into_iter()
            .filter_map(|w| {
                let (a, b) = (self.count(w), other.count(w));
                (a != b).then_some((w, a, b))
            })
            .collect()
    }
}

impl Serialize for WeightDistribution {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            w: u32,
            count: String,
        }
        let weights: Vec<Entry> = self
            .entries
            .iter()
            .map(|(&w, c)| Entry {
                w,
                count: c.to_string(),
            })
            .collect();
        let mut st = serializer.serialize_struct("WeightDistribution", 3)?;
        st.serialize_field("dimension", &self.dimension)?;
        st.serialize_field("length", &self.length)?;
        st.serialize_field("weights", &weights)?;
        st.end()
    }
}

/// Weight distribution of any linear code by full enumeration.
pub fn code_weight_distribution(code: &LinearCode, workers: Workers) -> Result<WeightDistribution> {
    if code.dimension() > MAX_ENUMERATION_DIM {
        return Err(Error::TooLarge(format!(
            "dimension {} exceeds enumeration limit {MAX_ENUMERATION_DIM}",
            code.dimension()
        )));
    }
    let len = code.length();
    let hist = par_fold(
        code,
        workers,
        || vec![0u64; len + 1],
        |h, w| h[w.weight() as usize] += 1,
        |mut a, b| {
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
            a
        },
    );
    Ok(WeightDistribution::from_histogram(
        len as u32,
        code.dimension() as u32,
        &hist,
    ))
}

/// Weight distribution of the family code described by `spec`.
pub fn weight_distribution(spec: &CodeSpec, field: &FieldSpec, workers: Workers) -> Result<WeightDistribution> {
    let code = generator_basis(spec, field)?;
    code_weight_distribution(&code, workers)
}

/// Distribution of the length-`n+1` code spanned by the zero-extended
/// words of a length-`n` code and the all-one word: each weight `w`
/// contributes to both `w` and `n + 1 - w`.
pub fn extend_distribution(dist: &WeightDistribution) -> Result<WeightDistribution> {
    let n = dist.length();
    if dist.count(0) != BigUint::one() {
        return Err(Error::InvalidParameters(
            "distribution must have exactly one zero word".into(),
        ));
    }
    let mut out: BTreeMap<u32, BigUint> = BTreeMap::new();
    for (&w, c) in dist.entries() {
        if w > n {
            return Err(Error::WeightCollision { weight: w });
        }
        *out.entry(w).or_default() += c;
        *out.entry(n + 1 - w).or_default() += c;
    }
    Ok(WeightDistribution::new(n + 1, dist.dimension() + 1, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codebuild::{cyclic_c1_basis, cyclic_c2_basis};

    fn f(m: u32) -> FieldSpec {
        FieldSpec::new(m, None).unwrap()
    }

    fn w(pairs: &[(u32, u64)], len: u32, dim: u32) -> WeightDistribution {
        WeightDistribution::from_pairs(len, dim, pairs)
    }

    #[test]
    fn enumerated_s3() {
        let d = weight_distribution(&CodeSpec::c1(3).unwrap(), &f(6), Workers::new(2)).unwrap();
        let expected = w(
            &[
                (0, 1),
                (16, 252),
                (24, 37632),
                (28, 107520),
                (32, 233478),
                (36, 107520),
                (40, 37632),
                (48, 252),
                (64, 1),
            ],
            64,
            19,
        );
        assert_eq!(d, expected);
        assert!(d.is_consistent());
        assert!(d.is_palindromic());
    }

    #[test]
    fn enumerated_c2() {
        let f6 = f(6);
        let d = weight_distribution(&CodeSpec::c2(3, 2).unwrap(), &f6, Workers::new(2)).unwrap();
        assert_eq!(
            d,
            w(
                &[(0, 1), (24, 5040), (28, 12544), (32, 30366), (36, 12544), (40, 5040), (64, 1)],
                64,
                16
            )
        );
        let d = weight_distribution(&CodeSpec::c2(3, 1).unwrap(), &f6, Workers::new(2)).unwrap();
        assert_eq!(
            d,
            w(
                &[
                    (0, 1),
                    (16, 84),
                    (24, 3360),
                    (28, 17920),
                    (32, 22806),
                    (36, 17920),
                    (40, 3360),
                    (48, 84),
                    (64, 1)
                ],
                64,
                16
            )
        );
    }

    #[test]
    fn extend_small_cases() {
        let zero = w(&[(0, 1)], 63, 0);
        assert_eq!(extend_distribution(&zero).unwrap(), w(&[(0, 1), (64, 1)], 64, 1));
        let bad = w(&[(0, 1), (70, 3)], 63, 2);
        assert_eq!(
            extend_distribution(&bad),
            Err(Error::WeightCollision { weight: 70 })
        );
        assert!(extend_distribution(&w(&[(4, 1)], 7, 0)).is_err());
    }

    #[test]
    fn cyclic_then_extend_matches_extended() {
        let f6 = f(6);
        let cyc = code_weight_distribution(&cyclic_c1_basis(&f6).unwrap(), Workers::new(2)).unwrap();
        assert_eq!(cyc.min_nonzero_weight(), Some(16));
        let ext = weight_distribution(&CodeSpec::c1(3).unwrap(), &f6, Workers::new(2)).unwrap();
        assert_eq!(extend_distribution(&cyc).unwrap(), ext);

        let spec = CodeSpec::c2(3, 1).unwrap();
        let cyc = code_weight_distribution(&cyclic_c2_basis(&spec, &f6).unwrap(), Workers::new(2)).unwrap();
        let ext = weight_distribution(&spec, &f6, Workers::new(2)).unwrap();
        assert_eq!(extend_distribution(&cyc).unwrap(), ext);
    }

    #[test]
    fn json_schema() {
        let d = w(&[(0, 1), (4, 140)], 16, 3);
        let v = serde_json::to_value(&d).unwrap();
        assert_eq!(v["length"], 16);
        assert_eq!(v["dimension"], 3);
        assert_eq!(v["weights"][1]["w"], 4);
        assert_eq!(v["weights"][1]["count"], "140");
    }

    #[test]
    fn too_large() {
        let gens = (0..27).map(|i| crate::codebuild::Codeword::from_support(64, &[i]));
        let code = LinearCode::from_generators(64, gens).unwrap();
        assert!(matches!(
            code_weight_distribution(&code, Workers::new(1)),
            Err(Error::TooLarge(_))
        ));
    }
}
