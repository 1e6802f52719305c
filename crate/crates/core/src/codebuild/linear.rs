use crate::codebuild::Codeword;
use crate::error::{Error, Result};

/// A binary linear code held as a reduced row-echelon basis.
#[derive(Debug, Clone)]
pub struct LinearCode {
    length: usize,
    rows: Vec<Codeword>,
    pivots: Vec<usize>,
}

impl LinearCode {
    /// The zero code of the given length.
    pub fn empty(length: usize) -> Self {
        Self {
            length,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// Row-reduces a spanning set. Dependent generators are dropped.
    pub fn from_generators<I>(length: usize, generators: I) -> Result<Self>
    where
        I: IntoIterator<Item = Codeword>,
    {
        let mut code = Self::empty(length);
        for g in generators {
            code.insert(g)?;
        }
        code.sort_rows();
        Ok(code)
    }

    /// Adds `w` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, w: Codeword) -> Result<bool> {
        let r = self.reduce(w)?;
        let Some(p) = r.first_one() else {
            return Ok(false);
        };
        for row in &mut self.rows {
            if row.get(p) {
                row.xor_assign(&r);
            }
        }
        self.rows.push(r);
        self.pivots.push(p);
        Ok(true)
    }

    fn sort_rows(&mut self) {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.pivots[i]);
        self.rows = order.iter().map(|&i| self.rows[i].clone()).collect();
        self.pivots = order.iter().map(|&i| self.pivots[i]).collect();
    }

    /// `w` minus its projection onto the span (zero iff `w` is a codeword).
    pub fn reduce(&self, mut w: Codeword) -> Result<Codeword> {
        if w.len() != self.length {
            return Err(Error::LengthMismatch {
                expected: self.length,
                got: w.len(),
            });
        }
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if w.get(p) {
                w.xor_assign(row);
            }
        }
        Ok(w)
    }

    pub fn contains(&self, w: &Codeword) -> Result<bool> {
        Ok(self.reduce(w.clone())?.is_zero())
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    /// Basis rows, sorted by pivot column.
    pub fn rows(&self) -> &[Codeword] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
}

/// Whether `w` lies in the span of `basis`.
pub fn membership_test(w: &Codeword, basis: &LinearCode) -> Result<bool> {
    basis.contains(w)
}
