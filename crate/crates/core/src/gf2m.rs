//! Arithmetic in GF(2^m) for even `m`, with traces to F_2 and to the
//! index-2 subfield F_{2^s}.
//!
//! Elements are bit vectors over the polynomial basis `{1, alpha, ...,
//! alpha^(m-1)}`. Multiplication goes through log/antilog tables of size
//! `q`, which is cheap for `m <= 16`.

use crate::error::{Error, Result};
use crate::polyops::BinaryPolynomial;

/// An element of GF(2^m) in polynomial-basis representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(pub u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Default primitive polynomial for each supported `m`, LSB = constant term.
pub fn default_primitive_poly(m: u32) -> Option<u64> {
    match m {
        4 => Some(0x13),      // x^4 + x + 1
        6 => Some(0x43),      // x^6 + x + 1
        8 => Some(0x11d),     // x^8 + x^4 + x^3 + x^2 + 1
        10 => Some(0x409),    // x^10 + x^3 + 1
        12 => Some(0x1053),   // x^12 + x^6 + x^4 + x + 1
        14 => Some(0x4443),   // x^14 + x^10 + x^6 + x + 1
        16 => Some(0x1100b),  // x^16 + x^12 + x^3 + x + 1
        _ => None,
    }
}

/// GF(2^m) with a fixed primitive element `alpha`.
///
/// Immutable after construction.
#[derive(Debug, Clone)]
pub struct FieldSpec {
    m: u32,
    poly: BinaryPolynomial,
    poly_bits: u32,
    /// `exp[i] = alpha^i` for `0 <= i < 2n`, doubled to skip a reduction.
    exp: Vec<u32>,
    /// `log[x]` for nonzero `x`; `log[0]` is unused.
    log: Vec<u32>,
    /// Bit `i` is `tr(alpha^i)`, so `tr(x) = parity(x & mask)`.
    trace_mask: u32,
}

/// Builds the field for `m`, using the built-in polynomial when none is given.
pub fn make_field(m: u32, primitive_poly: Option<BinaryPolynomial>) -> Result<FieldSpec> {
    FieldSpec::new(m, primitive_poly)
}

impl FieldSpec {
    pub fn new(m: u32, primitive_poly: Option<BinaryPolynomial>) -> Result<Self> {
        if !(4..=16).contains(&m) || !m.is_multiple_of(2) {
            return Err(Error::UnsupportedM(m));
        }
        let poly = match primitive_poly {
            Some(p) => p,
            None => BinaryPolynomial::from_u64(
                default_primitive_poly(m).ok_or(Error::UnsupportedM(m))?,
            ),
        };
        let reject = |reason: String| Error::NonPrimitivePolynomial {
            poly: poly.to_hex(),
            m,
            reason,
        };
        if poly.degree() != Some(m as usize) {
            return Err(reject(format!("degree is {:?}", poly.degree())));
        }
        let poly_bits = poly.low_bits() as u32;
        let q = 1u32 << m;
        let n = q - 1;

        // Walk the powers of x modulo the polynomial. A root of a reducible
        // polynomial can never reach order n, so order == n certifies both
        // irreducibility and primitivity.
        let mut exp = Vec::with_capacity(2 * n as usize);
        let mut log = vec![0u32; q as usize];
        let mut cur = 1u32;
        for i in 0..n {
            if i > 0 && cur == 1 {
                return Err(reject(format!("root has order {i}")));
            }
            if cur == 0 {
                return Err(reject("x is not a unit modulo the polynomial".into()));
            }
            exp.push(cur);
            log[cur as usize] = i;
            cur <<= 1;
            if cur & q != 0 {
                cur ^= poly_bits;
            }
        }
        if cur != 1 {
            return Err(reject("x^n != 1".into()));
        }
        exp.extend_from_within(..);

        let mut field = Self {
            m,
            poly,
            poly_bits,
            exp,
            log,
            trace_mask: 0,
        };
        let mut mask = 0u32;
        for i in 0..m {
            let t = field.frobenius_sum(field.alpha_pow(i as u64), m);
            debug_assert!(t.0 <= 1);
            mask |= t.0 << i;
        }
        field.trace_mask = mask;
        Ok(field)
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn s(&self) -> u32 {
        self.m / 2
    }

    pub fn q(&self) -> u32 {
        1 << self.m
    }

    pub fn n(&self) -> u32 {
        self.q() - 1
    }

    pub fn primitive_poly(&self) -> &BinaryPolynomial {
        &self.poly
    }

    pub fn poly_bits(&self) -> u32 {
        self.poly_bits
    }

    #[inline]
    pub fn add(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        FieldElement(x.0 ^ y.0)
    }

    #[inline]
    pub fn mul(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        if x.0 == 0 || y.0 == 0 {
            return FieldElement::ZERO;
        }
        FieldElement(self.exp[(self.log[x.0 as usize] + self.log[y.0 as usize]) as usize])
    }

    pub fn square(&self, x: FieldElement) -> FieldElement {
        self.mul(x, x)
    }

    pub fn pow(&self, x: FieldElement, e: u64) -> FieldElement {
        if e == 0 {
            return FieldElement::ONE;
        }
        if x.0 == 0 {
            return FieldElement::ZERO;
        }
        let n = self.n() as u64;
        let l = self.log[x.0 as usize] as u64;
        FieldElement(self.exp[((l * (e % n)) % n) as usize])
    }

    pub fn inverse(&self, x: FieldElement) -> Option<FieldElement> {
        if x.0 == 0 {
            return None;
        }
        let l = self.log[x.0 as usize];
        Some(FieldElement(self.exp[((self.n() - l) % self.n()) as usize]))
    }

    /// `alpha^i`, exponent taken mod `n`.
    pub fn alpha_pow(&self, i: u64) -> FieldElement {
        FieldElement(self.exp[(i % self.n() as u64) as usize])
    }

    /// Discrete log base `alpha`; `None` for zero.
    pub fn log(&self, x: FieldElement) -> Option<u32> {
        (x.0 != 0).then(|| self.log[x.0 as usize])
    }

    /// `x + x^2 + ... + x^(2^(k-1))`.
    fn frobenius_sum(&self, x: FieldElement, k: u32) -> FieldElement {
        let mut acc = FieldElement::ZERO;
        let mut cur = x;
        for _ in 0..k {
            acc = self.add(acc, cur);
            cur = self.square(cur);
        }
        acc
    }

    /// Absolute trace `tr_1^m(x)` as a bit.
    #[inline]
    pub fn trace(&self, x: FieldElement) -> u32 {
        (x.0 & self.trace_mask).count_ones() & 1
    }

    /// Whether `x^(2^s) = x`, i.e. `x` lies in F_{2^s}.
    pub fn is_subfield_element(&self, x: FieldElement) -> bool {
        self.pow(x, 1u64 << self.s()) == x
    }

    /// `tr_1^s(x)` for `x` in F_{2^s}.
    pub fn subfield_trace(&self, x: FieldElement) -> Result<u32> {
        if !self.is_subfield_element(x) {
            return Err(Error::NotInSubfield);
        }
        let t = self.frobenius_sum(x, self.s());
        debug_assert!(t.0 <= 1);
        Ok(t.0)
    }

    /// Coordinate order: index 0 is zero, index `i >= 1` is `alpha^(i-1)`.
    pub fn element_by_index(&self, i: u32) -> Result<FieldElement> {
        match i {
            0 => Ok(FieldElement::ZERO),
            i if i <= self.n() => Ok(FieldElement(self.exp[(i - 1) as usize])),
            _ => Err(Error::IndexOutOfRange {
                index: i as u64,
                max: self.n() as u64,
            }),
        }
    }

    /// Inverse of [`element_by_index`](Self::element_by_index).
    pub fn index_of(&self, x: FieldElement) -> u32 {
        if x.0 == 0 {
            0
        } else {
            self.log[x.0 as usize] + 1
        }
    }

    /// All `q` elements in coordinate order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        std::iter::once(FieldElement::ZERO).chain(self.exp[..self.n() as usize].iter().map(|&e| FieldElement(e)))
    }

    /// An F_2-basis of the subfield F_{2^s}.
    pub fn subfield_basis(&self) -> Vec<FieldElement> {
        let step = (1u64 << self.s()) + 1;
        let mut basis: Vec<FieldElement> = Vec::new();
        // echelon rows keyed by leading bit
        let mut reduced: Vec<u32> = Vec::new();
        for k in 0..(1u64 << self.s()) - 1 {
            let y = self.alpha_pow(k * step);
            let mut r = y.0;
            for &row in &reduced {
                let top = 31 - row.leading_zeros();
                if r >> top & 1 == 1 {
                    r ^= row;
                }
            }
            if r != 0 {
                reduced.push(r);
                reduced.sort_unstable_by(|a, b| b.cmp(a));
                basis.push(y);
                if basis.len() == self.s() as usize {
                    break;
                }
            }
        }
        basis
    }

    /// Evaluates a binary polynomial at a field element.
    pub fn eval_poly(&self, p: &BinaryPolynomial, x: FieldElement) -> FieldElement {
        p.exponents()
            .into_iter()
            .fold(FieldElement::ZERO, |acc, e| self.add(acc, self.pow(x, e as u64)))
    }
}
