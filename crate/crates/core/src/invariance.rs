//! Affine invariance of the extended codes, decided two ways: by downward
//! closure of the defining set under the 2-adic digit order, and by
//! applying every map `x -> ax + b` to a basis of the code.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::codebuild::{generator_basis, CodeSpec, LinearCode};
use crate::error::{Error, Result};
use crate::gf2m::{FieldElement, FieldSpec};
use crate::polyops::defining_set_of_family;

/// Largest `m` for which [`affine_orbit_check`] runs.
pub const MAX_ORBIT_M: u32 = 6;

/// `r` precedes `e` digit-wise in base 2.
pub fn preceq(r: u64, e: u64) -> bool {
    r & e == r
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureResult {
    pub closed: bool,
    /// `(e, r)` with `e` in the set, `r` below `e`, `r` missing.
    pub witness: Option<(u64, u64)>,
}

/// Whether `set` is closed downward under [`preceq`].
///
/// It suffices to clear one bit at a time: every `r` below `e` is reached
/// by a chain of single-bit removals. Members are scanned ascending and
/// bits from the top, so the reported witness is the first such failure.
pub fn closure_check(set: &BTreeSet<u64>, m: u32) -> ClosureResult {
    for &e in set {
        debug_assert!(e < 1 << m);
        for bit in (0..m).rev() {
            if e >> bit & 1 == 1 {
                let r = e & !(1 << bit);
                if !set.contains(&r) {
                    return ClosureResult {
                        closed: false,
                        witness: Some((e, r)),
                    };
                }
            }
        }
    }
    ClosureResult {
        closed: true,
        witness: None,
    }
}

/// An affine permutation `x -> ax + b` of F_q.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AffineMap {
    pub a: FieldElement,
    pub b: FieldElement,
}

impl AffineMap {
    pub fn new(a: FieldElement, b: FieldElement) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::InvalidParameters("affine map needs a != 0".into()));
        }
        Ok(Self { a, b })
    }

    pub fn apply(&self, x: FieldElement, field: &FieldSpec) -> FieldElement {
        field.add(field.mul(self.a, x), self.b)
    }

    /// `self` after `other`: `x -> self(other(x))`.
    pub fn compose(&self, other: &AffineMap, field: &FieldSpec) -> AffineMap {
        AffineMap {
            a: field.mul(self.a, other.a),
            b: field.add(field.mul(self.a, other.b), self.b),
        }
    }

    /// Coordinate table `perm[i] = index_of(sigma(element_by_index(i)))`.
    pub fn coordinate_permutation(&self, field: &FieldSpec) -> Vec<u32> {
        field
            .elements()
            .map(|x| field.index_of(self.apply(x, field)))
            .collect()
    }
}

/// Every affine map of F_q, `a` outer, `b` inner, both in coordinate order.
pub fn affine_group(field: &FieldSpec) -> Vec<AffineMap> {
    let mut maps = Vec::with_capacity((field.q() * field.n()) as usize);
    for a in field.elements().skip(1) {
        for b in field.elements() {
            maps.push(AffineMap { a, b });
        }
    }
    maps
}

/// Whether every affine map sends every basis row back into the code.
/// Coordinate permutations are linear, so checking the basis covers the span.
pub fn basis_is_affine_invariant(code: &LinearCode, field: &FieldSpec) -> Result<bool> {
    if code.length() != field.q() as usize {
        return Err(Error::LengthMismatch {
            expected: field.q() as usize,
            got: code.length(),
        });
    }
    let maps = affine_group(field);
    maps.par_iter().try_fold(
        || true,
        |ok, map| -> Result<bool> {
            if !ok {
                return Ok(false);
            }
            let perm = map.coordinate_permutation(field);
            for row in code.rows() {
                if !code.contains(&row.permuted(&perm))? {
                    return Ok(false);
                }
            }
            Ok(true)
        },
    )
    .try_reduce(|| true, |a, b| Ok(a && b))
}

/// Brute-force affine invariance of the family code, for `m <= 6`.
pub fn affine_orbit_check(spec: &CodeSpec, field: &FieldSpec) -> Result<bool> {
    if spec.m() > MAX_ORBIT_M {
        return Err(Error::TooLarge(format!(
            "affine orbit check limited to m <= {MAX_ORBIT_M}, got m={}",
            spec.m()
        )));
    }
    let code = generator_basis(spec, field)?;
    basis_is_affine_invariant(&code, field)
}

/// Invariance summary for one family code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvarianceReport {
    pub closure: bool,
    pub witness: Option<(u64, u64)>,
    /// Whether the brute-force orbit check ran.
    pub orbit_checked: bool,
    /// Its outcome, when it ran.
    pub orbit: Option<bool>,
    /// The enumerated code is the dual of an affine-invariant code, hence
    /// itself affine-invariant.
    pub dual_invariant: bool,
}

/// Flag that the enumerated code inherits invariance through duality;
/// true exactly when the defining set is closed.
pub fn dual_invariance_note(spec: &CodeSpec) -> bool {
    closure_check(&defining_set_of_family(spec), spec.m()).closed
}

/// Closure check always; orbit check when `m` allows it.
pub fn invariance_report(spec: &CodeSpec, field: &FieldSpec) -> Result<InvarianceReport> {
    let closure = closure_check(&defining_set_of_family(spec), spec.m());
    let orbit = if spec.m() <= MAX_ORBIT_M {
        Some(affine_orbit_check(spec, field)?)
    } else {
        None
    };
    Ok(InvarianceReport {
        closure: closure.closed,
        witness: closure.witness,
        orbit_checked: orbit.is_some(),
        orbit,
        dual_invariant: closure.closed,
    })
}
