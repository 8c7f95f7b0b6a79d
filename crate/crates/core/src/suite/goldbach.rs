//! Goldbach partitions into two distinct primes.

use crate::error::{Error, Result};
use crate::primes::sieve;

/// Largest even target the pair search accepts.
pub const SIEVE_BOUND: u64 = 10_000_000;

/// All pairs (p, q) with p < q, both prime, p + q = m. The target must be
/// even and at least 6; p = q partitions (e.g. 3 + 3 = 6) are excluded by
/// the strict ordering.
pub fn goldbach_pairs(m: u64) -> Result<Vec<(u64, u64)>> {
    if m % 2 != 0 || m < 6 {
        return Err(Error::BadGoldbachTarget(m));
    }
    if m > SIEVE_BOUND {
        return Err(Error::SieveBoundExceeded { target: m, bound: SIEVE_BOUND });
    }
    let is_p = sieve(m as usize);
    let mut out = Vec::new();
    for p in 2..m.div_ceil(2) {
        let q = m - p;
        if p < q && is_p[p as usize] && is_p[q as usize] {
            out.push((p, q));
        }
    }
    Ok(out)
}
