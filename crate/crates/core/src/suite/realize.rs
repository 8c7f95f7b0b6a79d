//! Realizability of the complete graph K_n as the extended graph of some
//! Z_k, split by parity of n.
//!
//! Even n: realizable iff n+1 is a prime power (take k = p^(alpha+1)) or
//! n+2 splits into two distinct primes p + q (take k = pq). Odd n:
//! realizable iff n+1 is a power of 2 (k = 2^(alpha+1)) or n itself is
//! prime (k = 2n).

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{build_graph, GraphKind};
use crate::metrics::is_complete;
use crate::primes::{is_prime, prime_power};
use crate::ring::{Ring, RingSpec};
use crate::suite::goldbach::{goldbach_pairs, SIEVE_BOUND};

/// Certificates with k beyond this bound are not reported.
pub const REALIZE_BOUND: u64 = SIEVE_BOUND;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum CertReason {
    /// n+1 = p^alpha, so Z_{p^(alpha+1)} works.
    PrimePower { p: u64, alpha: u32 },
    /// n+2 = p+q with distinct primes, so Z_{pq} works.
    TwoPrimes { p: u64, q: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub k: u64,
    pub reason: CertReason,
    /// True when k fit under the order cap and Z_k was constructed and
    /// checked: |Z(Z_k)*| = n and the extended graph complete.
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizationResult {
    pub n: u64,
    pub realizable: bool,
    pub certificates: Vec<Certificate>,
    pub search_bound_used: u64,
}

/// Applies the parity-split characterization and constructively verifies
/// every certificate that fits under `order_cap`.
pub fn kn_realizable(n: u64, order_cap: u64) -> RealizationResult {
    assert!(n >= 1, "K_n needs n >= 1");
    assert!(n + 2 <= SIEVE_BOUND, "n beyond the sieve bound");
    let mut realizable = false;
    let mut certificates = Vec::new();

    let mut push = |k: u64, reason: CertReason| {
        if k <= REALIZE_BOUND {
            certificates.push(Certificate { k, reason, verified: false });
        }
    };

    if n % 2 == 0 {
        if let Some((p, alpha)) = prime_power(n + 1) {
            realizable = true;
            if let Some(k) = checked_pow(p, alpha + 1) {
                push(k, CertReason::PrimePower { p, alpha });
            }
        }
        if n + 2 >= 6 {
            let pairs = goldbach_pairs(n + 2).expect("n+2 is even and within bounds");
            for (p, q) in pairs {
                realizable = true;
                push(p * q, CertReason::TwoPrimes { p, q });
            }
        }
    } else {
        if let Some((2, alpha)) = prime_power(n + 1) {
            realizable = true;
            if let Some(k) = checked_pow(2, alpha + 1) {
                push(k, CertReason::PrimePower { p: 2, alpha });
            }
        }
        if is_prime(n) {
            realizable = true;
            push(2 * n, CertReason::TwoPrimes { p: 2, q: n });
        }
    }

    for cert in &mut certificates {
        if cert.k <= order_cap {
            cert.verified = verify_certificate(cert.k, n, order_cap);
        }
    }

    RealizationResult { n, realizable, certificates, search_bound_used: REALIZE_BOUND }
}

fn checked_pow(p: u64, e: u32) -> Option<u64> {
    let v = (p as u128).checked_pow(e)?;
    u64::try_from(v).ok().filter(|&k| k <= REALIZE_BOUND)
}

fn verify_certificate(k: u64, n: u64, order_cap: u64) -> bool {
    let spec = RingSpec::zn(k).expect("certificate k >= 4");
    let ring = match Ring::with_cap(spec, order_cap) {
        Ok(r) => r,
        Err(_) => return false,
    };
    if ring.zero_divisors_star().len() as u64 != n {
        return false;
    }
    is_complete(&build_graph(&ring, GraphKind::Tilde))
}

/// Independent oracle: every composite k <= k_max whose Z_k has exactly n
/// nonzero zero-divisors and a complete extended graph, found by direct
/// construction. The zero-divisor count prefilter is a gcd scan.
pub fn kn_brute_scan(n: u64, k_max: u64, order_cap: u64) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for k in 4..=k_max {
        if is_prime(k) {
            continue;
        }
        let star = (1..k).filter(|&x| gcd(x, k) > 1).count() as u64;
        if star != n {
            continue;
        }
        let ring = Ring::with_cap(RingSpec::zn(k)?, order_cap)?;
        if is_complete(&build_graph(&ring, GraphKind::Tilde)) {
            out.push(k);
        }
    }
    Ok(out)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
