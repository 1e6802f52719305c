use std::fmt;

use crate::error::{Error, Result};

/// A packed binary vector. Coordinate `i` corresponds to
/// `FieldSpec::element_by_index(i)` for extended codes and to `alpha^i`
/// for the length-`n` cyclic relatives.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Codeword {
    len: usize,
    words: Vec<u64>,
}

impl Codeword {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut w = Self {
            len,
            words: vec![u64::MAX; len.div_ceil(64)],
        };
        w.clear_tail();
        w
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut w = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                w.set(i, true);
            }
        }
        w
    }

    /// Word with the listed coordinates set.
    pub fn from_support(len: usize, support: &[u32]) -> Self {
        let mut w = Self::zeros(len);
        for &i in support {
            w.set(i as usize, true);
        }
        w
    }

    fn clear_tail(&mut self) {
        let r = self.len % 64;
        if r != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << r) - 1;
            }
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        if value {
            self.words[i / 64] |= 1 << (i % 64);
        } else {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }

    /// Hamming weight.
    #[inline]
    pub fn weight(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn xor_assign(&mut self, other: &Codeword) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn checked_xor_assign(&mut self, other: &Codeword) -> Result<()> {
        if self.len != other.len {
            return Err(Error::LengthMismatch {
                expected: self.len,
                got: other.len,
            });
        }
        self.xor_assign(other);
        Ok(())
    }

    pub fn complement(&self) -> Self {
        let mut w = Self {
            len: self.len,
            words: self.words.iter().map(|w| !w).collect(),
        };
        w.clear_tail();
        w
    }

    /// Index of the lowest set coordinate.
    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| 64 * i + w.trailing_zeros() as usize)
    }

    /// Support written into `out` (cleared first), ascending.
    #[inline]
    pub fn support_into(&self, out: &mut Vec<u32>) {
        out.clear();
        for (wi, &w) in self.words.iter().enumerate() {
            let mut bits = w;
            while bits != 0 {
                out.push((64 * wi) as u32 + bits.trailing_zeros());
                bits &= bits - 1;
            }
        }
    }

    /// Coordinates holding a one, ascending.
    pub fn support(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.weight() as usize);
        self.support_into(&mut out);
        out
    }

    /// Word `w'` with `w'[i] = self[perm[i]]`.
    pub fn permuted(&self, perm: &[u32]) -> Self {
        let mut out = Self::zeros(self.len);
        for (i, &src) in perm.iter().enumerate() {
            if self.get(src as usize) {
                out.set(i, true);
            }
        }
        out
    }
}

impl fmt::Debug for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bits: String = (0..self.len).map(|i| if self.get(i) { '1' } else { '0' }).collect();
        write!(f, "Codeword({bits})")
    }
}
