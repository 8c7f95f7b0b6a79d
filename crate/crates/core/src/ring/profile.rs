//! Structural facts about a finite commutative ring.

use serde::{Deserialize, Serialize};

use crate::ring::Ring;

/// Computed invariants of a ring. In a finite commutative ring every
/// element is a unit or a zero-divisor, so |Z(R)*| = order - units - 1;
/// the maximal ideals correspond one-to-one with the local factors of the
/// normalized form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingProfile {
    pub order: u64,
    pub characteristic: u64,
    pub is_local: bool,
    pub is_field: bool,
    pub is_reduced: bool,
    pub is_boolean: bool,
    pub maximal_ideal_count: usize,
    pub num_zero_divisors_star: usize,
    pub local_factor_count: usize,
}

pub(crate) fn compute(ring: &Ring) -> RingProfile {
    let norm = ring.normalization();
    let local_factor_count = norm.local_factor_count();
    RingProfile {
        order: ring.order() as u64,
        characteristic: characteristic(ring),
        is_local: local_factor_count == 1,
        is_field: ring.zero_divisors_star().is_empty(),
        is_reduced: is_reduced(ring),
        is_boolean: is_boolean(ring),
        maximal_ideal_count: local_factor_count,
        num_zero_divisors_star: ring.zero_divisors_star().len(),
        local_factor_count,
    }
}

/// Additive order of 1.
fn characteristic(ring: &Ring) -> u64 {
    let one = ring.one().clone();
    let mut acc = one.clone();
    let mut k = 1u64;
    while !crate::ring::arith::is_zero(&acc) {
        acc = ring.add(&acc, &one);
        k += 1;
    }
    k
}

/// No nonzero nilpotents. Only zero-divisors can be nilpotent, and the
/// power sequence of each either hits zero or enters a cycle.
fn is_reduced(ring: &Ring) -> bool {
    for &i in ring.zero_divisors_star() {
        let x = ring.element(i);
        let mut seen = vec![false; ring.order()];
        let mut acc = x.clone();
        loop {
            if crate::ring::arith::is_zero(&acc) {
                return false;
            }
            let idx = ring.index_of(&acc);
            if seen[idx] {
                break;
            }
            seen[idx] = true;
            acc = ring.mul(&acc, x);
        }
    }
    true
}

/// x * x = x for every element.
fn is_boolean(ring: &Ring) -> bool {
    ring.elements().iter().all(|x| &ring.mul(x, x) == x)
}
