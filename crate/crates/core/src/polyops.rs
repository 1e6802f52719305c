//! Polynomials over F_2, 2-cyclotomic cosets, minimal polynomials and
//! narrow-sense primitive BCH generator polynomials.

use std::collections::BTreeSet;
use std::fmt;

use crate::codebuild::{CodeSpec, Family};
use crate::error::{Error, Result};
use crate::gf2m::{FieldElement, FieldSpec};

/// A polynomial over F_2, bit `i` holding the coefficient of `x^i`.
///
/// The word vector never carries trailing zero words, so equality is
/// structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BinaryPolynomial {
    words: Vec<u64>,
}

impl BinaryPolynomial {
    pub fn zero() -> Self {
        Self { words: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_u64(1)
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut p = Self::zero();
        p.set_coeff(k, true);
        p
    }

    pub fn from_u64(bits: u64) -> Self {
        let mut p = Self { words: vec![bits] };
        p.normalize();
        p
    }

    /// Builds a polynomial from the exponents of its nonzero terms.
    pub fn from_exponents(exps: &[usize]) -> Self {
        let mut p = Self::zero();
        for &e in exps {
            p.set_coeff(e, !p.coeff(e));
        }
        p
    }

    /// Parses a hex bit-string such as `0x11d` (LSB = constant term).
    pub fn from_hex(s: &str) -> Option<Self> {
        let digits = s
            .trim()
            .trim_start_matches("0x")
            .trim_start_matches("0X");
        if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_hexdigit()) {
            return None;
        }
        let mut p = Self::zero();
        for (i, c) in digits.chars().rev().enumerate() {
            let nib = c.to_digit(16)? as u64;
            for b in 0..4 {
                if nib >> b & 1 == 1 {
                    p.set_coeff(4 * i + b, true);
                }
            }
        }
        Some(p)
    }

    fn normalize(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let top = *self.words.last()?;
        Some(64 * (self.words.len() - 1) + 63 - top.leading_zeros() as usize)
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words.get(i / 64).is_some_and(|w| w >> (i % 64) & 1 == 1)
    }

    pub fn set_coeff(&mut self, i: usize, value: bool) {
        let w = i / 64;
        if value {
            if self.words.len() <= w {
                self.words.resize(w + 1, 0);
            }
            self.words[w] |= 1 << (i % 64);
        } else if w < self.words.len() {
            self.words[w] &= !(1 << (i % 64));
            self.normalize();
        }
    }

    /// Exponents of the nonzero terms, ascending.
    pub fn exponents(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (wi, &w) in self.words.iter().enumerate() {
            let mut bits = w;
            while bits != 0 {
                out.push(64 * wi + bits.trailing_zeros() as usize);
                bits &= bits - 1;
            }
        }
        out
    }

    /// The low 64 coefficients as an integer.
    pub fn low_bits(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = long.words.clone();
        for (w, s) in words.iter_mut().zip(&short.words) {
            *w ^= s;
        }
        let mut p = Self { words };
        p.normalize();
        p
    }

    fn shl(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let (ws, bs) = (k / 64, k % 64);
        let mut words = vec![0u64; self.words.len() + ws + 1];
        for (i, &w) in self.words.iter().enumerate() {
            words[i + ws] ^= w << bs;
            if bs != 0 {
                words[i + ws + 1] ^= w >> (64 - bs);
            }
        }
        let mut p = Self { words };
        p.normalize();
        p
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut acc = Self::zero();
        for e in other.exponents() {
            acc = acc.add(&self.shl(e));
        }
        acc
    }

    /// Quotient and remainder of polynomial division.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::ZeroPolynomial)?;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            quot.set_coeff(rd - dd, true);
            rem = rem.add(&divisor.shl(rd - dd));
        }
        Ok((quot, rem))
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("b is nonzero");
            a = b;
            b = r;
        }
        a
    }

    pub fn divides(&self, other: &Self) -> bool {
        !self.is_zero() && other.div_rem(self).map(|(_, r)| r.is_zero()).unwrap_or(false)
    }

    /// `x^n - 1`.
    pub fn x_n_minus_one(n: usize) -> Self {
        Self::from_exponents(&[0, n])
    }

    /// Hex bit-string, e.g. `0x13` for `x^4 + x + 1`.
    pub fn to_hex(&self) -> String {
        if self.is_zero() {
            return "0x0".to_string();
        }
        let mut s = String::from("0x");
        let mut started = false;
        for w in self.words.iter().rev() {
            if started {
                s.push_str(&format!("{w:016x}"));
            } else {
                s.push_str(&format!("{w:x}"));
                started = true;
            }
        }
        s
    }

    /// Monomial list such as `x^4 + x + 1`, highest degree first.
    pub fn to_terms(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.exponents()
            .iter()
            .rev()
            .map(|&e| match e {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{e}"),
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Debug for BinaryPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryPolynomial({})", self.to_terms())
    }
}

impl fmt::Display for BinaryPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_terms())
    }
}

/// A doubling orbit modulo `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicCoset {
    /// Smallest member.
    pub representative: u64,
    /// Members in doubling order starting from the queried value.
    pub members: Vec<u64>,
}

impl CyclotomicCoset {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, e: u64) -> bool {
        self.members.contains(&e)
    }
}

/// The 2-cyclotomic coset of `j` modulo `n`.
pub fn cyclotomic_coset(j: u64, n: u64) -> Result<CyclotomicCoset> {
    if n == 0 || j >= n {
        return Err(Error::IndexOutOfRange {
            index: j,
            max: n.saturating_sub(1),
        });
    }
    let mut members = vec![j];
    let mut cur = (j * 2) % n;
    while cur != j {
        members.push(cur);
        cur = (cur * 2) % n;
    }
    let representative = *members.iter().min().expect("nonempty");
    Ok(CyclotomicCoset {
        representative,
        members,
    })
}

/// Representatives of all 2-cyclotomic cosets modulo `n`, ascending.
pub fn coset_representatives(n: u64) -> Vec<u64> {
    let mut seen = vec![false; n as usize];
    let mut reps = Vec::new();
    for j in 0..n {
        if seen[j as usize] {
            continue;
        }
        reps.push(j);
        let mut cur = j;
        loop {
            seen[cur as usize] = true;
            cur = (cur * 2) % n;
            if cur == j {
                break;
            }
        }
    }
    reps
}

/// Minimal polynomial of `alpha^i` over F_2.
///
/// The product over the coset is expanded with GF(2^m) coefficients and
/// every coefficient is asserted to land in F_2.
pub fn minimal_polynomial(i: u64, field: &FieldSpec) -> Result<BinaryPolynomial> {
    let coset = cyclotomic_coset(i, field.n() as u64)?;
    // coefficients low to high, starting from the constant 1
    let mut coeffs = vec![FieldElement::ONE];
    for &j in &coset.members {
        let root = field.alpha_pow(j);
        let mut next = vec![FieldElement::ZERO; coeffs.len() + 1];
        for (k, &c) in coeffs.iter().enumerate() {
            next[k + 1] = field.add(next[k + 1], c);
            next[k] = field.add(next[k], field.mul(c, root));
        }
        coeffs = next;
    }
    let mut p = BinaryPolynomial::zero();
    for (k, c) in coeffs.iter().enumerate() {
        assert!(
            *c == FieldElement::ZERO || *c == FieldElement::ONE,
            "minimal polynomial coefficient outside F_2; field arithmetic is broken"
        );
        if *c == FieldElement::ONE {
            p.set_coeff(k, true);
        }
    }
    Ok(p)
}

/// Least common multiple of nonzero polynomials.
pub fn poly_lcm(ps: &[BinaryPolynomial]) -> Result<BinaryPolynomial> {
    let (first, rest) = ps.split_first().ok_or(Error::EmptyInput)?;
    if ps.iter().any(BinaryPolynomial::is_zero) {
        return Err(Error::ZeroPolynomial);
    }
    let mut acc = first.clone();
    for p in rest {
        let g = acc.gcd(p);
        let (q, _) = p.div_rem(&g)?;
        acc = acc.mul(&q);
    }
    Ok(acc)
}

/// Generator polynomial of the narrow-sense primitive BCH code with
/// designed distance `delta`: `lcm(M_1, ..., M_{delta-1})`.
pub fn bch_generator(delta: u32, field: &FieldSpec) -> Result<BinaryPolynomial> {
    let n = field.n();
    if delta < 2 || delta > n {
        return Err(Error::InvalidDelta { delta, n });
    }
    let mut reps = BTreeSet::new();
    for i in 1..delta as u64 {
        reps.insert(cyclotomic_coset(i % n as u64, n as u64)?.representative);
    }
    let polys = reps
        .into_iter()
        .map(|r| minimal_polynomial(r, field))
        .collect::<Result<Vec<_>>>()?;
    poly_lcm(&polys)
}

/// Defining set of the extended dual code whose dual is the code family
/// given by `spec`: the cosets of the three nonzero exponents plus `{0}`.
pub fn defining_set_of_family(spec: &CodeSpec) -> BTreeSet<u64> {
    let n = spec.n() as u64;
    let reps: [u64; 3] = match spec.family() {
        Family::C1 => [1, 3, 5],
        Family::C2 => [1, (1 << spec.l()) + 1, (1 << spec.s()) + 1],
    };
    let mut set = BTreeSet::from([0u64]);
    for r in reps {
        let coset = cyclotomic_coset(r % n, n).expect("r reduced mod n");
        set.extend(coset.members);
    }
    set
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(m: u32) -> FieldSpec {
        FieldSpec::new(m, None).unwrap()
    }

    #[test]
    fn hex_round_trip() {
        let p = BinaryPolynomial::from_hex("0x11d").unwrap();
        assert_eq!(p.exponents(), vec![0, 2, 3, 4, 8]);
        assert_eq!(p.to_hex(), "0x11d");
        assert_eq!(p.to_terms(), "x^8 + x^4 + x^3 + x^2 + 1");
        let big = BinaryPolynomial::monomial(70).add(&BinaryPolynomial::one());
        assert_eq!(BinaryPolynomial::from_hex(&big.to_hex()).unwrap(), big);
        assert!(BinaryPolynomial::from_hex("0xzz").is_none());
    }

    #[test]
    fn division_and_gcd() {
        // (x+1)(x^2+x+1) = x^3+1
        let a = BinaryPolynomial::from_exponents(&[0, 1]);
        let b = BinaryPolynomial::from_exponents(&[0, 1, 2]);
        let prod = a.mul(&b);
        assert_eq!(prod, BinaryPolynomial::from_exponents(&[0, 3]));
        let (q, r) = prod.div_rem(&b).unwrap();
        assert_eq!(q, a);
        assert!(r.is_zero());
        assert_eq!(prod.gcd(&a), a);
        assert_eq!(a.div_rem(&BinaryPolynomial::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn cosets() {
        assert_eq!(cyclotomic_coset(0, 15).unwrap().members, vec![0]);
        assert_eq!(cyclotomic_coset(5, 15).unwrap().members, vec![5, 10]);
        assert_eq!(
            cyclotomic_coset(1, 63).unwrap().members,
            vec![1, 2, 4, 8, 16, 32]
        );
        let c = cyclotomic_coset(12, 15).unwrap();
        assert_eq!(c.representative, 3);
        assert!(matches!(
            cyclotomic_coset(15, 15),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn coset_sizes_divide_m() {
        for m in [4u32, 6, 8, 10] {
            let n = (1u64 << m) - 1;
            for r in coset_representatives(n) {
                let len = cyclotomic_coset(r, n).unwrap().len() as u32;
                assert_eq!(m % len, 0, "m={m} rep={r}");
            }
        }
    }

    #[test]
    fn minimal_polynomials_m4() {
        let f = field(4);
        assert_eq!(
            minimal_polynomial(0, &f).unwrap(),
            BinaryPolynomial::from_exponents(&[0, 1])
        );
        assert_eq!(
            minimal_polynomial(5, &f).unwrap(),
            BinaryPolynomial::from_exponents(&[0, 1, 2])
        );
        assert_eq!(
            minimal_polynomial(3, &f).unwrap(),
            BinaryPolynomial::from_exponents(&[0, 1, 2, 3, 4])
        );
        assert_eq!(minimal_polynomial(1, &f).unwrap(), *f.primitive_poly());
    }

    #[test]
    fn minimal_polynomials_partition_x_n_minus_one() {
        for m in [4u32, 6, 8] {
            let f = field(m);
            let n = f.n() as u64;
            let xn1 = BinaryPolynomial::x_n_minus_one(n as usize);
            let reps = coset_representatives(n);
            let polys: Vec<_> = reps
                .iter()
                .map(|&r| minimal_polynomial(r, &f).unwrap())
                .collect();
            let total: usize = polys.iter().map(|p| p.degree().unwrap()).sum();
            assert_eq!(total as u64, n);
            let mut prod = BinaryPolynomial::one();
            for (i, p) in polys.iter().enumerate() {
                assert!(p.divides(&xn1));
                for q in &polys[i + 1..] {
                    assert_eq!(p.gcd(q), BinaryPolynomial::one());
                }
                prod = prod.mul(p);
            }
            assert_eq!(prod, xn1);
        }
    }

    #[test]
    fn lcm_cases() {
        let f = field(4);
        let m1 = minimal_polynomial(1, &f).unwrap();
        assert_eq!(poly_lcm(&[m1.clone(), m1.clone()]).unwrap(), m1);
        let x = BinaryPolynomial::monomial(1);
        let xp1 = BinaryPolynomial::from_exponents(&[0, 1]);
        assert_eq!(
            poly_lcm(&[xp1, x]).unwrap(),
            BinaryPolynomial::from_exponents(&[1, 2])
        );
        let m3 = minimal_polynomial(3, &f).unwrap();
        let m5 = minimal_polynomial(5, &f).unwrap();
        let l = poly_lcm(&[m1.clone(), m3.clone(), m5.clone()]).unwrap();
        assert_eq!(l.degree(), Some(10));
        assert_eq!(l, m1.mul(&m3).mul(&m5));
        assert_eq!(poly_lcm(&[]), Err(Error::EmptyInput));
        assert_eq!(
            poly_lcm(&[m1, BinaryPolynomial::zero()]),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn bch_generators() {
        let f4 = field(4);
        assert_eq!(
            bch_generator(2, &f4).unwrap(),
            minimal_polynomial(1, &f4).unwrap()
        );
        let g = bch_generator(7, &f4).unwrap();
        assert_eq!(g.degree(), Some(10));
        assert!(g.divides(&BinaryPolynomial::x_n_minus_one(15)));
        // alpha^1..alpha^6 are roots
        for i in 1..7 {
            let r = f4.alpha_pow(i);
            assert_eq!(f4.eval_poly(&g, r), FieldElement::ZERO, "alpha^{i}");
        }
        assert_eq!(bch_generator(7, &field(6)).unwrap().degree(), Some(18));
        assert!(matches!(
            bch_generator(1, &f4),
            Err(Error::InvalidDelta { .. })
        ));
        assert!(matches!(
            bch_generator(16, &f4),
            Err(Error::InvalidDelta { .. })
        ));
    }

    #[test]
    fn defining_sets() {
        let c1 = CodeSpec::c1(2).unwrap();
        let t = defining_set_of_family(&c1);
        assert_eq!(
            t,
            BTreeSet::from([0, 1, 2, 4, 8, 3, 6, 12, 9, 5, 10])
        );
        assert_eq!(defining_set_of_family(&CodeSpec::c1(3).unwrap()).len(), 19);
        let c2 = CodeSpec::c2(2, 1).unwrap();
        assert_eq!(defining_set_of_family(&c2), t);
    }
}
