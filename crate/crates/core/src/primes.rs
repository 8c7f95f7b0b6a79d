//! Primality, integer factorization, and the Eratosthenes sieve.
//!
//! Everything here is trial-division based; the largest inputs are the
//! Goldbach sieve bound (10^7) and ring orders, so nothing fancier is
//! warranted.

/// Trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization as (prime, exponent) pairs with primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n >= 1, "factorize needs n >= 1");
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut k = 0u32;
            while n % d == 0 {
                n /= d;
                k += 1;
            }
            out.push((d, k));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Returns (p, k) if n = p^k for a prime p and k >= 1.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    let f = factorize(n);
    match f.as_slice() {
        [(p, k)] => Some((*p, *k)),
        _ => None,
    }
}

/// n = p*q with p < q both prime.
pub fn two_distinct_primes(n: u64) -> Option<(u64, u64)> {
    let f = factorize(n);
    match f.as_slice() {
        [(p, 1), (q, 1)] => Some((*p, *q)),
        _ => None,
    }
}

/// Sieve of Eratosthenes: sieve(limit)[i] is true iff i is prime, for i <= limit.
pub fn sieve(limit: usize) -> Vec<bool> {
    let mut is_p = vec![true; limit + 1];
    is_p[0] = false;
    if limit >= 1 {
        is_p[1] = false;
    }
    let mut d = 2usize;
    while d * d <= limit {
        if is_p[d] {
            let mut m = d * d;
            while m <= limit {
                is_p[m] = false;
                m += d;
            }
        }
        d += 1;
    }
    is_p
}

/// Euler's totient via factorization.
pub fn euler_phi(n: u64) -> u64 {
    let mut phi = n;
    for (p, _) in factorize(n) {
        phi = phi / p * (p - 1);
    }
    phi
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_small() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
    }

    #[test]
    fn factorize_examples() {
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(12), vec![(2, 2), (3, 1)]);
        assert_eq!(factorize(390), vec![(2, 1), (3, 1), (5, 1), (13, 1)]);
        assert_eq!(factorize(169), vec![(13, 2)]);
    }

    #[test]
    fn prime_power_examples() {
        assert_eq!(prime_power(49), Some((7, 2)));
        assert_eq!(prime_power(16), Some((2, 4)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn sieve_matches_trial_division() {
        let s = sieve(1000);
        for n in 0..=1000u64 {
            assert_eq!(s[n as usize], is_prime(n), "disagree at {n}");
        }
    }

    #[test]
    fn phi_matches_coprime_count() {
        for n in 1..200u64 {
            let direct = (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64;
            assert_eq!(euler_phi(n), direct, "phi({n})");
        }
    }

    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
}
