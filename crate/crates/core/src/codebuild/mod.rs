//! The two extended code families and their length-`n` cyclic relatives,
//! built as explicit bit vectors over a fixed coordinate order.
//!
//! * `C1`: `(tr(a x^5 + b x^3 + c x) + h)` over all `x` in F_q.
//! * `C2`: `(tr_1^s(a x^(2^s+1)) + tr(b x^(2^l+1) + c x) + h)` with `a` in F_{2^s}.

mod codeword;
mod enumerate;
mod linear;

pub use codeword::Codeword;
pub use enumerate::{enumerate_code, enumerate_partition, par_fold, partition_count, Workers};
pub use linear::{membership_test, LinearCode};

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2m::{FieldElement, FieldSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    C1,
    C2,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Family::C1 => "c1",
            Family::C2 => "c2",
        })
    }
}

/// Validated family parameters. For `C2`, `l` is stored in canonical form
/// `min(l, m - l)`, since `l` and `m - l` give the same code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CodeSpec {
    family: Family,
    s: u32,
    l: u32,
}

impl CodeSpec {
    pub fn c1(s: u32) -> Result<Self> {
        Self::new(Family::C1, s, None)
    }

    pub fn c2(s: u32, l: u32) -> Result<Self> {
        Self::new(Family::C2, s, Some(l))
    }

    pub fn new(family: Family, s: u32, l: Option<u32>) -> Result<Self> {
        if !(2..=8).contains(&s) {
            return Err(Error::InvalidParameters(format!(
                "s={s} outside [2, 8] (m = 2s must be in [4, 16])"
            )));
        }
        let m = 2 * s;
        let l = match (family, l) {
            (Family::C1, None) => 0,
            (Family::C1, Some(_)) => {
                return Err(Error::InvalidParameters("family c1 takes no l".into()))
            }
            (Family::C2, None) => {
                return Err(Error::InvalidParameters("family c2 requires l".into()))
            }
            (Family::C2, Some(l)) => {
                if l == 0 || l >= m || l == s {
                    return Err(Error::InvalidParameters(format!(
                        "l={l} must satisfy 1 <= l <= {} and l != s={s}",
                        m - 1
                    )));
                }
                l.min(m - l)
            }
        };
        let spec = Self { family, s, l };
        if family == Family::C2 {
            let (d, dp) = (spec.d(), spec.dprime());
            if dp != d && dp != 2 * d {
                return Err(Error::InvalidParameters(format!(
                    "d'={dp} is neither d={d} nor 2d"
                )));
            }
        }
        Ok(spec)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    /// Canonical `l` (0 for `C1`).
    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn m(&self) -> u32 {
        2 * self.s
    }

    /// `gcd(s, l)`.
    pub fn d(&self) -> u32 {
        self.s.gcd(&self.l)
    }

    /// `gcd(s + l, 2l)`.
    pub fn dprime(&self) -> u32 {
        (self.s + self.l).gcd(&(2 * self.l))
    }

    pub fn length(&self) -> usize {
        1 << self.m()
    }

    pub fn n(&self) -> u32 {
        (1 << self.m()) - 1
    }

    /// Checks that `field` has the right size for this spec.
    pub fn check_field(&self, field: &FieldSpec) -> Result<()> {
        if field.m() != self.m() {
            return Err(Error::InvalidParameters(format!(
                "field has m={}, code needs m={}",
                field.m(),
                self.m()
            )));
        }
        Ok(())
    }
}

/// Coefficients `(a, b, c, h)` of one codeword.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CoefficientTuple {
    pub a: FieldElement,
    pub b: FieldElement,
    pub c: FieldElement,
    pub h: bool,
}

impl CoefficientTuple {
    pub fn new(a: FieldElement, b: FieldElement, c: FieldElement, h: bool) -> Self {
        Self { a, b, c, h }
    }
}

/// Codeword of the `C1` family at coefficients `t`.
pub fn build_codeword_c1(t: &CoefficientTuple, field: &FieldSpec) -> Codeword {
    let mut w = Codeword::zeros(field.q() as usize);
    for (i, x) in field.elements().enumerate() {
        let x3 = field.pow(x, 3);
        let x5 = field.mul(x3, field.square(x));
        let arg = field.add(
            field.add(field.mul(t.a, x5), field.mul(t.b, x3)),
            field.mul(t.c, x),
        );
        w.set(i, (field.trace(arg) == 1) ^ t.h);
    }
    w
}

/// Codeword of the `C2` family with parameter `l` at coefficients `t`.
pub fn build_codeword_c2(t: &CoefficientTuple, l: u32, field: &FieldSpec) -> Result<Codeword> {
    if !field.is_subfield_element(t.a) {
        return Err(Error::CoefficientNotInSubfield);
    }
    let norm_exp = (1u64 << field.s()) + 1;
    let kasami_exp = (1u64 << l) + 1;
    let mut w = Codeword::zeros(field.q() as usize);
    for (i, x) in field.elements().enumerate() {
        let sub = field.subfield_trace(field.mul(t.a, field.pow(x, norm_exp)))?;
        let arg = field.add(field.mul(t.b, field.pow(x, kasami_exp)), field.mul(t.c, x));
        w.set(i, ((sub ^ field.trace(arg)) == 1) ^ t.h);
    }
    Ok(w)
}

/// Codeword of the cyclic code `C_1` (parity-check `M_1 M_3 M_5`):
/// coordinate `i` is `tr(a alpha^(5i) + b alpha^(3i) + c alpha^i)`.
pub fn build_cyclic_codeword_c1(
    a: FieldElement,
    b: FieldElement,
    c: FieldElement,
    field: &FieldSpec,
) -> Codeword {
    let n = field.n() as usize;
    let mut w = Codeword::zeros(n);
    for i in 0..n as u64 {
        let arg = field.add(
            field.add(
                field.mul(a, field.alpha_pow(5 * i)),
                field.mul(b, field.alpha_pow(3 * i)),
            ),
            field.mul(c, field.alpha_pow(i)),
        );
        w.set(i as usize, field.trace(arg) == 1);
    }
    w
}

/// Codeword of the cyclic code `C_2` (parity-check
/// `M_1 M_(2^l+1) M_(2^s+1)`), the length-`n` puncturing of the `C2` family.
pub fn build_cyclic_codeword_c2(
    a: FieldElement,
    b: FieldElement,
    c: FieldElement,
    l: u32,
    field: &FieldSpec,
) -> Result<Codeword> {
    let t = CoefficientTuple::new(a, b, c, false);
    let full = build_codeword_c2(&t, l, field)?;
    // drop coordinate 0 (x = 0); the rest are alpha^0, alpha^1, ...
    let n = field.n() as usize;
    let mut w = Codeword::zeros(n);
    for i in 0..n {
        w.set(i, full.get(i + 1));
    }
    Ok(w)
}

fn polynomial_basis(field: &FieldSpec) -> Vec<FieldElement> {
    (0..field.m()).map(|i| FieldElement(1 << i)).collect()
}

/// Row-reduced basis of the extended family code.
///
/// Spans the images of the coefficient basis vectors plus the all-one word;
/// the dimension is whatever the rank turns out to be.
pub fn generator_basis(spec: &CodeSpec, field: &FieldSpec) -> Result<LinearCode> {
    spec.check_field(field)?;
    let len = spec.length();
    let zero = FieldElement::ZERO;
    let mut gens = vec![Codeword::ones(len)];
    let build = |t: CoefficientTuple| -> Result<Codeword> {
        match spec.family() {
            Family::C1 => Ok(build_codeword_c1(&t, field)),
            Family::C2 => build_codeword_c2(&t, spec.l(), field),
        }
    };
    let a_basis = match spec.family() {
        Family::C1 => polynomial_basis(field),
        Family::C2 => field.subfield_basis(),
    };
    for a in a_basis {
        gens.push(build(CoefficientTuple::new(a, zero, zero, false))?);
    }
    for e in polynomial_basis(field) {
        gens.push(build(CoefficientTuple::new(zero, e, zero, false))?);
        gens.push(build(CoefficientTuple::new(zero, zero, e, false))?);
    }
    LinearCode::from_generators(len, gens)
}

/// Basis of the cyclic code `C_1` of length `n`.
pub fn cyclic_c1_basis(field: &FieldSpec) -> Result<LinearCode> {
    let zero = FieldElement::ZERO;
    let mut gens = Vec::new();
    for e in polynomial_basis(field) {
        gens.push(build_cyclic_codeword_c1(e, zero, zero, field));
        gens.push(build_cyclic_codeword_c1(zero, e, zero, field));
        gens.push(build_cyclic_codeword_c1(zero, zero, e, field));
    }
    LinearCode::from_generators(field.n() as usize, gens)
}

/// Basis of the cyclic code `C_2` of length `n`.
pub fn cyclic_c2_basis(spec: &CodeSpec, field: &FieldSpec) -> Result<LinearCode> {
    spec.check_field(field)?;
    if spec.family() != Family::C2 {
        return Err(Error::InvalidParameters("expected a c2 spec".into()));
    }
    let zero = FieldElement::ZERO;
    let mut gens = Vec::new();
    for a in field.subfield_basis() {
        gens.push(build_cyclic_codeword_c2(a, zero, zero, spec.l(), field)?);
    }
    for e in polynomial_basis(field) {
        gens.push(build_cyclic_codeword_c2(zero, e, zero, spec.l(), field)?);
        gens.push(build_cyclic_codeword_c2(zero, zero, e, spec.l(), field)?);
    }
    LinearCode::from_generators(field.n() as usize, gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(m: u32) -> FieldSpec {
        FieldSpec::new(m, None).unwrap()
    }

    #[test]
    fn spec_validation() {
        assert!(CodeSpec::c1(1).is_err());
        assert!(CodeSpec::c1(9).is_err());
        assert!(CodeSpec::c2(3, 3).is_err());
        assert!(CodeSpec::c2(3, 0).is_err());
        assert!(CodeSpec::c2(3, 6).is_err());
        assert!(CodeSpec::new(Family::C2, 3, None).is_err());
        assert!(CodeSpec::new(Family::C1, 3, Some(1)).is_err());
        let c = CodeSpec::c2(3, 5).unwrap();
        assert_eq!(c.l(), 1);
        assert_eq!((c.d(), c.dprime()), (1, 2));
        let c = CodeSpec::c2(3, 2).unwrap();
        assert_eq!((c.d(), c.dprime()), (1, 1));
        assert_eq!(CodeSpec::c2(4, 6).unwrap().l(), 2);
    }

    #[test]
    fn trivial_codewords() {
        let f = field(6);
        let z = FieldElement::ZERO;
        let zero = build_codeword_c1(&CoefficientTuple::default(), &f);
        assert!(zero.is_zero());
        let ones = build_codeword_c1(&CoefficientTuple::new(z, z, z, true), &f);
        assert_eq!(ones.weight(), 64);
        let lin = build_codeword_c1(&CoefficientTuple::new(z, z, f.alpha_pow(9), false), &f);
        assert_eq!(lin.weight(), 32);

        assert!(build_codeword_c2(&CoefficientTuple::default(), 1, &f).unwrap().is_zero());
        assert_eq!(
            build_codeword_c2(&CoefficientTuple::new(z, z, z, true), 1, &f)
                .unwrap()
                .weight(),
            64
        );
        assert_eq!(
            build_codeword_c2(&CoefficientTuple::new(f.alpha_pow(1), z, z, false), 1, &f),
            Err(Error::CoefficientNotInSubfield)
        );

        assert_eq!(build_cyclic_codeword_c1(z, z, z, &f).weight(), 0);
        assert_eq!(build_cyclic_codeword_c1(z, z, FieldElement::ONE, &f).weight(), 32);
    }

    #[test]
    fn dimensions_by_rank() {
        let f4 = field(4);
        let f6 = field(6);
        assert_eq!(generator_basis(&CodeSpec::c1(3).unwrap(), &f6).unwrap().dimension(), 19);
        assert_eq!(generator_basis(&CodeSpec::c2(2, 1).unwrap(), &f4).unwrap().dimension(), 11);
        // m = 4: C_5 has size 2, so not 3m + 1
        assert_eq!(generator_basis(&CodeSpec::c1(2).unwrap(), &f4).unwrap().dimension(), 11);
        assert_eq!(generator_basis(&CodeSpec::c2(3, 2).unwrap(), &f6).unwrap().dimension(), 16);
        assert_eq!(generator_basis(&CodeSpec::c2(3, 1).unwrap(), &f6).unwrap().dimension(), 16);
        assert_eq!(cyclic_c1_basis(&f6).unwrap().dimension(), 18);
        assert_eq!(cyclic_c1_basis(&f4).unwrap().dimension(), 10);
        assert_eq!(
            cyclic_c2_basis(&CodeSpec::c2(3, 1).unwrap(), &f6).unwrap().dimension(),
            15
        );
        assert!(generator_basis(&CodeSpec::c1(3).unwrap(), &f4).is_err());
    }

    #[test]
    fn m4_families_coincide() {
        let f4 = field(4);
        let c1 = generator_basis(&CodeSpec::c1(2).unwrap(), &f4).unwrap();
        let c2 = generator_basis(&CodeSpec::c2(2, 1).unwrap(), &f4).unwrap();
        for row in c2.rows() {
            assert!(c1.contains(row).unwrap());
        }
        assert_eq!(c1.dimension(), c2.dimension());
    }

    #[test]
    fn membership() {
        let f6 = field(6);
        let code = generator_basis(&CodeSpec::c1(3).unwrap(), &f6).unwrap();
        assert!(membership_test(&Codeword::zeros(64), &code).unwrap());
        assert!(membership_test(&Codeword::ones(64), &code).unwrap());
        let c2 = generator_basis(&CodeSpec::c2(3, 2).unwrap(), &f6).unwrap();
        assert!(membership_test(&Codeword::ones(64), &c2).unwrap());
        // a minimum-weight word with one bit flipped leaves the code
        let mut w16 = None;
        enumerate_code(&code, |w| {
            if w16.is_none() && w.weight() == 16 {
                w16 = Some(w.clone());
            }
        });
        let mut w = w16.expect("weight-16 word exists");
        assert!(membership_test(&w, &code).unwrap());
        w.flip(5);
        assert!(!membership_test(&w, &code).unwrap());
        assert!(membership_test(&Codeword::zeros(63), &code).is_err());
    }

    #[test]
    fn every_tuple_lands_in_span() {
        // m = 4, C1: all 2^13 tuples map into an 11-dimensional space
        let f4 = field(4);
        let code = generator_basis(&CodeSpec::c1(2).unwrap(), &f4).unwrap();
        let mut seen = std::collections::HashSet::new();
        for a in f4.elements() {
            for b in f4.elements() {
                for c in f4.elements() {
                    for h in [false, true] {
                        let w = build_codeword_c1(&CoefficientTuple::new(a, b, c, h), &f4);
                        assert!(code.contains(&w).unwrap());
                        seen.insert(w);
                    }
                }
            }
        }
        assert_eq!(seen.len(), 1 << 11);
    }
}
