//! Support designs of the weight classes: block extraction, brute-force
//! t-subset incidence counting, and cross-checks against the λ lists.

mod lambda;

pub use lambda::{lambda_from_identity, theorem_lambda_c1, theorem_lambda_c2};

use std::io::Write;

use num_bigint::BigUint;
use num_integer::binomial;
use serde::Serialize;

use crate::codebuild::{enumerate_code, generator_basis, par_fold, CodeSpec, Family, LinearCode, Workers};
use crate::error::{Error, Result};
use crate::gf2m::FieldSpec;
use crate::spectrum::code_weight_distribution;

/// Weight classes whose incidence counting would exceed this many
/// increments (`A_i · C(i,t)`) are skipped unless asked for explicitly.
pub const INCREMENT_BUDGET: u64 = 1_000_000_000;

/// Outcome of a successful t-design verification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DesignReport {
    pub t: u32,
    pub v: u32,
    pub k: u32,
    pub b: u64,
    pub lambda: u64,
    pub verified: bool,
    pub trivial: bool,
}

fn choose(n: u64, k: u64) -> u64 {
    if k > n {
        0
    } else {
        binomial(n, k)
    }
}

/// Counts, for every t-subset of `0..v`, how many added blocks contain it.
/// Subsets are ranked in colex order into a flat array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceCounter {
    v: u32,
    t: u32,
    k: Option<u32>,
    blocks: u64,
    counts: Vec<u64>,
}

impl IncidenceCounter {
    pub fn new(v: u32, t: u32) -> Result<Self> {
        if !(2..=3).contains(&t) || v > 256 || v < t {
            return Err(Error::InvalidParameters(format!(
                "incidence counting needs t in {{2,3}} and t <= v <= 256, got t={t} v={v}"
            )));
        }
        Ok(Self {
            v,
            t,
            k: None,
            blocks: 0,
            counts: vec![0; choose(v as u64, t as u64) as usize],
        })
    }

    pub fn blocks(&self) -> u64 {
        self.blocks
    }

    /// Adds one block, given as strictly increasing point indices.
    pub fn add_block(&mut self, block: &[u32]) -> Result<()> {
        let k = block.len() as u32;
        match self.k {
            None => self.k = Some(k),
            Some(k0) if k0 != k => {
                return Err(Error::InvalidParameters(format!(
                    "block sizes differ: {k0} and {k}"
                )))
            }
            _ => {}
        }
        if let Some(&last) = block.last() {
            if last >= self.v {
                return Err(Error::IndexOutOfRange {
                    index: last as u64,
                    max: self.v as u64 - 1,
                });
            }
        }
        debug_assert!(block.windows(2).all(|w| w[0] < w[1]));
        self.blocks += 1;
        let c = &mut self.counts;
        match self.t {
            2 => {
                for (j, &p1) in block.iter().enumerate() {
                    let base = (p1 as usize * (p1 as usize).saturating_sub(1)) / 2;
                    for &p0 in &block[..j] {
                        c[base + p0 as usize] += 1;
                    }
                }
            }
            _ => {
                for (j2, &p2) in block.iter().enumerate() {
                    let p2 = p2 as usize;
                    let base2 = if p2 >= 3 { p2 * (p2 - 1) * (p2 - 2) / 6 } else { 0 };
                    for (j1, &p1) in block[..j2].iter().enumerate() {
                        let p1 = p1 as usize;
                        let base1 = base2 + p1 * p1.saturating_sub(1) / 2;
                        for &p0 in &block[..j1] {
                            c[base1 + p0 as usize] += 1;
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Elementwise sum with a counter over the same points and `t`.
    pub fn merge(&mut self, other: &IncidenceCounter) {
        assert_eq!((self.v, self.t), (other.v, other.t));
        if self.k.is_none() {
            self.k = other.k;
        }
        if other.k.is_some() {
            assert_eq!(self.k, other.k, "merging counters of different block sizes");
        }
        self.blocks += other.blocks;
        self.counts.iter_mut().zip(&other.counts).for_each(|(a, b)| *a += b);
    }

    fn unrank(&self, mut r: u64) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.t as usize);
        for size in (1..=self.t as u64).rev() {
            let mut p = size - 1;
            while choose(p + 1, size) <= r {
                p += 1;
            }
            r -= choose(p, size);
            out.push(p as u32);
        }
        out.reverse();
        out
    }

    /// Checks that every t-subset has the same count.
    pub fn finish(&self) -> Result<DesignReport> {
        let Some(k) = self.k else {
            return Err(Error::EmptyInput);
        };
        let (t, v) = (self.t, self.v);
        if k <= t || k == v {
            return Err(Error::TrivialDesign { t, k, v });
        }
        let total: u64 = self.counts.iter().sum();
        assert_eq!(
            total,
            self.blocks * choose(k as u64, t as u64),
            "t-subset incidences must add up to b*C(k,t)"
        );
        let lambda = self.counts[0];
        if let Some(pos) = self.counts.iter().position(|&c| c != lambda) {
            return Err(Error::NotConstant {
                t,
                first: self.unrank(0),
                first_count: lambda,
                second: self.unrank(pos as u64),
                second_count: self.counts[pos],
            });
        }
        debug_assert_eq!(total, lambda * choose(v as u64, t as u64));
        Ok(DesignReport {
            t,
            v,
            k,
            b: self.blocks,
            lambda,
            verified: true,
            trivial: false,
        })
    }
}

/// Verifies that `blocks` form a t-(v,k,λ) design by counting every
/// t-subset.
pub fn verify_t_design<I, B>(blocks: I, v: u32, t: u32) -> Result<DesignReport>
where
    I: IntoIterator<Item = B>,
    B: AsRef<[u32]>,
{
    let mut counter = IncidenceCounter::new(v, t)?;
    for b in blocks {
        counter.add_block(b.as_ref())?;
    }
    counter.finish()
}

/// Streams the support of every codeword of weight `i`, in enumeration
/// order. Returns the number of blocks.
pub fn for_each_block<F>(code: &LinearCode, i: u32, mut visit: F) -> u64
where
    F: FnMut(&[u32]),
{
    let mut buf = Vec::with_capacity(i as usize);
    let mut count = 0;
    enumerate_code(code, |w| {
        if w.weight() == i {
            w.support_into(&mut buf);
            visit(&buf);
            count += 1;
        }
    });
    count
}

/// Supports of all weight-`i` codewords of the family code.
pub fn blocks_of_weight(spec: &CodeSpec, field: &FieldSpec, i: u32) -> Result<Vec<Vec<u32>>> {
    let code = generator_basis(spec, field)?;
    let mut blocks = Vec::new();
    for_each_block(&code, i, |b| blocks.push(b.to_vec()));
    if blocks.is_empty() {
        return Err(Error::EmptyWeightClass(i));
    }
    debug_assert!({
        let mut sorted = blocks.clone();
        sorted.sort_unstable();
        sorted.dedup();
        sorted.len() == blocks.len()
    });
    Ok(blocks)
}

/// One block per line, points separated by spaces.
pub fn write_blocks_csv<W: Write>(out: &mut W, blocks: &[Vec<u32>]) -> std::io::Result<()> {
    for b in blocks {
        let line: Vec<String> = b.iter().map(|p| p.to_string()).collect();
        writeln!(out, "{}", line.join(" "))?;
    }
    Ok(())
}

/// One weight class in a [`full_design_report`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DesignRow {
    pub t: u32,
    pub v: u32,
    pub k: u32,
    pub b: BigUint,
    /// Constant t-subset count, when verified.
    pub lambda: Option<u64>,
    pub verified: bool,
    /// Counting was not attempted because of [`INCREMENT_BUDGET`].
    pub skipped: bool,
    pub theorem_lambda: Option<BigUint>,
    /// `Some` whenever the theorem has a value or failed integrality.
    pub matches: Option<bool>,
    pub note: Option<String>,
}

impl Serialize for DesignRow {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("DesignRow", 10)?;
        st.serialize_field("b", &self.b.to_string())?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("lambda", &self.lambda.map(|l| l.to_string()))?;
        st.serialize_field("match", &self.matches)?;
        st.serialize_field("note", &self.note)?;
        st.serialize_field("skipped", &self.skipped)?;
        st.serialize_field("t", &self.t)?;
        st.serialize_field("theorem_lambda", &self.theorem_lambda.as_ref().map(|l| l.to_string()))?;
        st.serialize_field("v", &self.v)?;
        st.serialize_field("verified", &self.verified)?;
        st.end()
    }
}

impl DesignRow {
    /// Verified, and not contradicted by a theorem value.
    pub fn ok(&self) -> bool {
        self.verified && self.matches != Some(false)
    }
}

fn theorem_lambda(spec: &CodeSpec, t: u32, i: u32) -> Option<Result<BigUint>> {
    if t != 2 {
        return None;
    }
    let r = match spec.family() {
        Family::C1 => theorem_lambda_c1(spec.s(), i as u64),
        Family::C2 => theorem_lambda_c2(spec.s(), spec.l(), i as u64),
    };
    match r {
        Err(Error::InapplicableParameters(_)) => None,
        other => Some(other),
    }
}

/// Verifies the t-design property of every nontrivial weight class of the
/// family code and cross-checks λ against the theorem lists.
///
/// Classes with `A_i · C(i,t)` above [`INCREMENT_BUDGET`] are reported as
/// skipped unless `exhaustive` is set.
pub fn full_design_report(
    spec: &CodeSpec,
    field: &FieldSpec,
    t: u32,
    workers: Workers,
    exhaustive: bool,
) -> Result<Vec<DesignRow>> {
    spec.check_field(field)?;
    let code = generator_basis(spec, field)?;
    let v = spec.length() as u32;
    IncidenceCounter::new(v, t)?;
    let dist = code_weight_distribution(&code, workers)?;

    let classes: Vec<(u32, u64)> = dist
        .nonzero_weights()
        .filter(|&w| w != v && w > t)
        .map(|w| {
            let a: u64 = dist.count(w).try_into().expect("count fits u64");
            (w, a)
        })
        .collect();
    let selected: Vec<u32> = classes
        .iter()
        .filter(|&&(w, a)| exhaustive || a.saturating_mul(choose(w as u64, t as u64)) <= INCREMENT_BUDGET)
        .map(|&(w, _)| w)
        .collect();

    let mut slot = vec![usize::MAX; v as usize + 1];
    for (j, &w) in selected.iter().enumerate() {
        slot[w as usize] = j;
    }
    let empty = IncidenceCounter::new(v, t)?;
    let (counters, _) = par_fold(
        &code,
        workers,
        || (vec![empty.clone(); selected.len()], Vec::<u32>::new()),
        |(counters, buf), w| {
            let j = slot[w.weight() as usize];
            if j != usize::MAX {
                w.support_into(buf);
                counters[j].add_block(buf).expect("supports are valid blocks");
            }
        },
        |(mut a, buf), (b, _)| {
            a.iter_mut().zip(&b).for_each(|(x, y)| x.merge(y));
            (a, buf)
        },
    );

    let mut rows = Vec::with_capacity(classes.len());
    for (w, a) in classes {
        let theorem = theorem_lambda(spec, t, w);
        let applies = theorem.is_some();
        let (theorem_lambda, theorem_note) = match theorem {
            None => (None, None),
            Some(Ok(l)) => (Some(l), None),
            Some(Err(e)) => (None, Some(format!("theorem value unusable: {e}"))),
        };
        let mut row = DesignRow {
            t,
            v,
            k: w,
            b: BigUint::from(a),
            lambda: None,
            verified: false,
            skipped: false,
            theorem_lambda,
            matches: None,
            note: theorem_note,
        };
        match slot[w as usize] {
            usize::MAX => {
                row.skipped = true;
                row.note = Some(format!(
                    "skipped: {a} blocks x C({w},{t}) increments exceed budget; use exhaustive mode"
                ));
            }
            j => match counters[j].finish() {
                Ok(rep) => {
                    assert_eq!(rep.b, a);
                    let identity = lambda_from_identity(&BigUint::from(a), w, v, t)?;
                    assert_eq!(identity, BigUint::from(rep.lambda));
                    row.lambda = Some(rep.lambda);
                    row.verified = true;
                }
                Err(e @ Error::NotConstant { .. }) => {
                    row.note = Some(e.to_string());
                }
                Err(e) => return Err(e),
            },
        }
        if let Some(th) = &row.theorem_lambda {
            if row.verified {
                row.matches = Some(row.lambda.map(BigUint::from).as_ref() == Some(th));
            } else if !row.skipped {
                row.matches = Some(false);
            }
        } else if applies {
            row.matches = Some(false);
        }
        rows.push(row);
    }
    Ok(rows)
}
