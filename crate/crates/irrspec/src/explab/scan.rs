//! Sharded scan driver.
//!
//! Exhaustive scans split the index space into contiguous ranges; sampled
//! scans draw points from a fixed number of logical shards whose generators
//! derive from the seed and the shard index. Shards merge by addition, so the
//! result is a function of (config, seed) only, no matter how many workers
//! execute them.

use std::collections::BTreeMap;

use super::{ExpError, Mode};
use crate::ffpoly::Rng;

/// Logical shard count for sampled scans; fixed so worker count cannot
/// influence which points are drawn.
const SAMPLE_SHARDS: u64 = 64;

/// Additive per-shard totals.
#[derive(Debug, Clone, Default)]
pub(crate) struct Tally {
    pub scanned: u64,
    pub accepted: u64,
    pub hits: u64,
    pub rejected: u64,
    pub shapes: BTreeMap<Vec<usize>, u64>,
}

impl Tally {
    pub fn absorb(&mut self, other: Tally) {
        self.scanned += other.scanned;
        self.accepted += other.accepted;
        self.hits += other.hits;
        self.rejected += other.rejected;
        for (shape, count) in other.shapes {
            *self.shapes.entry(shape).or_insert(0) += count;
        }
    }

    pub fn record_shape(&mut self, degrees: &[usize]) {
        *self.shapes.entry(degrees.to_vec()).or_insert(0) += 1;
    }
}

/// Visit points of `0..space` per the mode and merge the per-shard tallies.
/// The closure must be a pure function of the point index.
pub(crate) fn scan<F>(
    mode: Mode,
    space: u64,
    seed: u64,
    workers: usize,
    bound: u64,
    visit: F,
) -> Result<Tally, ExpError>
where
    F: Fn(u64, &mut Tally) + Sync,
{
    let workers = workers.max(1);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| ExpError::Config(format!("worker pool: {e}")))?;

    let shards: Vec<(u64, u64, Option<Rng>)> = match mode {
        Mode::Exhaustive => {
            if space > bound {
                return Err(ExpError::ScanSpaceTooLarge {
                    space: space as u128,
                    bound,
                });
            }
            let w = workers as u64;
            let per = space / w;
            let extra = space % w;
            let mut ranges = Vec::new();
            let mut start = 0u64;
            for i in 0..w {
                let len = per + u64::from(i < extra);
                ranges.push((start, len, None));
                start += len;
            }
            ranges
        }
        Mode::Sample(count) => {
            let shards = SAMPLE_SHARDS.min(count.max(1));
            let per = count / shards;
            let extra = count % shards;
            (0..shards)
                .map(|i| {
                    let len = per + u64::from(i < extra);
                    (0, len, Some(Rng::for_shard(seed, i)))
                })
                .collect()
        }
    };

    let parts: Vec<Tally> = pool.install(|| {
        use rayon::prelude::*;
        shards
            .into_par_iter()
            .map(|(start, len, rng)| {
                let mut tally = Tally::default();
                match rng {
                    None => {
                        for i in start..start + len {
                            visit(i, &mut tally);
                        }
                    }
                    Some(mut rng) => {
                        for _ in 0..len {
                            let i = if space > 0 { rng.below(space) } else { 0 };
                            visit(i, &mut tally);
                        }
                    }
                }
                tally
            })
            .collect()
    });

    let mut total = Tally::default();
    for part in parts {
        total.absorb(part);
    }
    Ok(total)
}
