//! Streaming enumeration of all `2^k` codewords of a [`LinearCode`].
//!
//! The coefficient space is split on its high bits into a fixed number of
//! disjoint partitions; the partition count depends only on the code, never
//! on the number of workers. Inside a partition, words are produced in
//! Gray-code order so each step costs one row XOR.

use rayon::prelude::*;

use crate::codebuild::{Codeword, LinearCode};

/// Upper bound on the number of partitions, as a power of two.
const MAX_PARTITION_BITS: usize = 8;

/// Number of worker threads for parallel enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Workers(usize);

impl Workers {
    pub fn new(n: usize) -> Self {
        Self(n.max(1))
    }

    /// One worker per available core.
    pub fn available() -> Self {
        Self::new(std::thread::available_parallelism().map_or(1, |n| n.get()))
    }

    pub fn get(&self) -> usize {
        self.0
    }
}

impl Default for Workers {
    fn default() -> Self {
        Self::available()
    }
}

fn partition_bits(code: &LinearCode) -> usize {
    code.dimension().min(MAX_PARTITION_BITS)
}

/// How many disjoint partitions [`enumerate_partition`] accepts for `code`.
pub fn partition_count(code: &LinearCode) -> usize {
    1 << partition_bits(code)
}

/// Visits every codeword of partition `part` exactly once.
///
/// Partition `p` holds the words whose coefficients on the top
/// `log2(partition_count)` basis rows spell out `p`.
pub fn enumerate_partition<F>(code: &LinearCode, part: usize, mut visit: F)
where
    F: FnMut(&Codeword),
{
    let rows = code.rows();
    let k = rows.len();
    let pbits = partition_bits(code);
    assert!(part < 1 << pbits, "partition {part} out of range");
    let low = k - pbits;

    let mut cur = Codeword::zeros(code.length());
    for (j, row) in rows[low..].iter().enumerate() {
        if part >> j & 1 == 1 {
            cur.xor_assign(row);
        }
    }
    visit(&cur);
    for i in 1u64..(1u64 << low) {
        cur.xor_assign(&rows[i.trailing_zeros() as usize]);
        visit(&cur);
    }
}

/// Visits every codeword exactly once, partitions in ascending order.
pub fn enumerate_code<F>(code: &LinearCode, mut visit: F)
where
    F: FnMut(&Codeword),
{
    for p in 0..partition_count(code) {
        enumerate_partition(code, p, &mut visit);
    }
}

/// Folds every codeword into accumulators on `workers` threads and merges
/// them.
///
/// `merge` must be associative and commutative (exact counters added
/// elementwise, say); the result then does not depend on `workers`.
pub fn par_fold<A, I, F, M>(code: &LinearCode, workers: Workers, init: I, fold: F, merge: M) -> A
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(&mut A, &Codeword) + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    let parts = partition_count(code);
    let run = || -> A {
        (0..parts)
            .into_par_iter()
            .fold(&init, |mut acc, p| {
                enumerate_partition(code, p, |w| fold(&mut acc, w));
                acc
            })
            .reduce(&init, &merge)
    };
    match rayon::ThreadPoolBuilder::new()
        .num_threads(workers.get())
        .build()
    {
        Ok(pool) => pool.install(run),
        Err(_) => run(),
    }
}
