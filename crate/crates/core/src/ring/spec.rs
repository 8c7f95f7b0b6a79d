//! Abstract syntax for finite commutative rings.

use crate::error::{Error, Result};
use crate::primes::{is_prime, prime_power};
use crate::ring::poly::{least_irreducible, Poly, POLY_DEGREE_CAP};

/// Default cap on ring order; overridable at every construction boundary.
pub const DEFAULT_ORDER_CAP: u64 = 4096;

/// A finite commutative ring: Z_n, a quotient Z_p[x]/(f) with f monic of
/// degree >= 1, or a flattened product of at least two such factors.
///
/// Construct through [`RingSpec::zn`], [`RingSpec::quotient_poly`],
/// [`RingSpec::gf`], and [`RingSpec::product`]; those enforce the
/// invariants (modulus >= 2, prime base, monic modulus, no nested
/// products).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingSpec {
    Zn(u64),
    QuotientPoly { prime: u64, modulus: Poly },
    Product(Vec<RingSpec>),
}

impl RingSpec {
    pub fn zn(n: u64) -> Result<RingSpec> {
        if n < 2 {
            return Err(Error::ModulusTooSmall(n));
        }
        Ok(RingSpec::Zn(n))
    }

    /// Z_p[x]/(f) with f given by little-endian coefficients. Coefficients
    /// are reduced mod p first; the reduced polynomial must be monic of
    /// degree in 1..=POLY_DEGREE_CAP.
    pub fn quotient_poly(prime: u64, coeffs: &[u64]) -> Result<RingSpec> {
        if !is_prime(prime) {
            return Err(Error::NotPrime(prime));
        }
        let modulus = Poly::new(coeffs, prime);
        match modulus.degree() {
            Some(d) if d >= 1 && modulus.is_monic() => {
                if d > POLY_DEGREE_CAP {
                    return Err(Error::DegreeCapExceeded { degree: d, cap: POLY_DEGREE_CAP });
                }
            }
            _ => return Err(Error::NonMonicModulus),
        }
        Ok(RingSpec::QuotientPoly { prime, modulus })
    }

    /// The field with q = p^k elements, as Z_p[x]/(f) for the
    /// lexicographically least monic irreducible f of degree k.
    pub fn gf(q: u64) -> Result<RingSpec> {
        let (p, k) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        if k as usize > POLY_DEGREE_CAP {
            return Err(Error::DegreeCapExceeded { degree: k as usize, cap: POLY_DEGREE_CAP });
        }
        let modulus = least_irreducible(p, k as usize);
        Ok(RingSpec::QuotientPoly { prime: p, modulus })
    }

    /// Product of factors, flattening any nested products. A single factor
    /// is returned as itself rather than wrapped.
    pub fn product(factors: Vec<RingSpec>) -> Result<RingSpec> {
        let mut flat = Vec::new();
        for f in factors {
            match f {
                RingSpec::Product(inner) => flat.extend(inner),
                other => flat.push(other),
            }
        }
        match flat.len() {
            0 => Err(Error::EmptyProduct),
            1 => Ok(flat.pop().unwrap()),
            _ => Ok(RingSpec::Product(flat)),
        }
    }

    /// Number of elements. Saturating, so oversized nestings still compare
    /// correctly against any u64 cap.
    pub fn order(&self) -> u128 {
        match self {
            RingSpec::Zn(n) => *n as u128,
            RingSpec::QuotientPoly { prime, modulus } => {
                (*prime as u128).saturating_pow(modulus.degree().unwrap() as u32)
            }
            RingSpec::Product(fs) => fs
                .iter()
                .fold(1u128, |acc, f| acc.saturating_mul(f.order())),
        }
    }

    pub fn check_cap(&self, cap: u64) -> Result<()> {
        let order = self.order();
        if order > cap as u128 {
            return Err(Error::OrderCapExceeded { order, cap });
        }
        Ok(())
    }

    pub fn factors(&self) -> std::slice::Iter<'_, RingSpec> {
        match self {
            RingSpec::Product(fs) => fs.iter(),
            _ => std::slice::from_ref(self).iter(),
        }
    }

    /// Canonical grammar text; parses back to an equal spec.
    pub fn to_text(&self) -> String {
        match self {
            RingSpec::Zn(n) => format!("Z{n}"),
            RingSpec::QuotientPoly { prime, modulus } => format!("Z{prime}[x]/({modulus})"),
            RingSpec::Product(fs) => fs
                .iter()
                .map(RingSpec::to_text)
                .collect::<Vec<_>>()
                .join(" x "),
        }
    }

    /// Text with whitespace removed, used for catalog entry names.
    pub fn compact_text(&self) -> String {
        self.to_text().replace(' ', "")
    }
}

impl std::fmt::Display for RingSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zn_validation() {
        assert!(RingSpec::zn(2).is_ok());
        assert!(matches!(RingSpec::zn(1), Err(Error::ModulusTooSmall(1))));
        assert!(matches!(RingSpec::zn(0), Err(Error::ModulusTooSmall(0))));
    }

    #[test]
    fn quotient_validation() {
        assert!(RingSpec::quotient_poly(2, &[0, 0, 1]).is_ok());
        assert!(matches!(RingSpec::quotient_poly(4, &[0, 0, 1]), Err(Error::NotPrime(4))));
        // 2x^2 reduces to 0 over Z_2: not a monic modulus.
        assert!(matches!(RingSpec::quotient_poly(2, &[0, 0, 2]), Err(Error::NonMonicModulus)));
        // Constant modulus rejected.
        assert!(matches!(RingSpec::quotient_poly(2, &[1]), Err(Error::NonMonicModulus)));
    }

    #[test]
    fn gf_expansion() {
        // The unique monic irreducible quadratic over Z_2 (checked by
        // exhausting roots in poly::tests).
        let gf4 = RingSpec::gf(4).unwrap();
        assert_eq!(gf4, RingSpec::quotient_poly(2, &[1, 1, 1]).unwrap());
        assert_eq!(gf4.order(), 4);
        assert!(matches!(RingSpec::gf(6), Err(Error::NotPrimePower(6))));
        assert_eq!(RingSpec::gf(8).unwrap().order(), 8);
    }

    #[test]
    fn product_flattens() {
        let a = RingSpec::zn(2).unwrap();
        let b = RingSpec::zn(4).unwrap();
        let inner = RingSpec::product(vec![a.clone(), b.clone()]).unwrap();
        let nested = RingSpec::product(vec![inner, RingSpec::zn(3).unwrap()]).unwrap();
        match &nested {
            RingSpec::Product(fs) => assert_eq!(fs.len(), 3),
            _ => panic!("expected product"),
        }
        // Single factor unwraps.
        assert_eq!(RingSpec::product(vec![a.clone()]).unwrap(), a);
        assert!(matches!(RingSpec::product(vec![]), Err(Error::EmptyProduct)));
    }

    #[test]
    fn orders() {
        assert_eq!(RingSpec::zn(6).unwrap().order(), 6);
        assert_eq!(RingSpec::quotient_poly(2, &[0, 0, 1]).unwrap().order(), 4);
        let prod = RingSpec::product(vec![RingSpec::zn(2).unwrap(), RingSpec::zn(4).unwrap()]).unwrap();
        assert_eq!(prod.order(), 8);
        assert!(prod.check_cap(8).is_ok());
        assert!(matches!(prod.check_cap(7), Err(Error::OrderCapExceeded { order: 8, cap: 7 })));
    }

    #[test]
    fn text_forms() {
        assert_eq!(RingSpec::zn(6).unwrap().to_text(), "Z6");
        assert_eq!(RingSpec::quotient_poly(2, &[0, 0, 1]).unwrap().to_text(), "Z2[x]/(x^2)");
        let prod = RingSpec::product(vec![
            RingSpec::zn(4).unwrap(),
            RingSpec::gf(4).unwrap(),
        ])
        .unwrap();
        assert_eq!(prod.to_text(), "Z4 x Z2[x]/(x^2+x+1)");
        assert_eq!(prod.compact_text(), "Z4xZ2[x]/(x^2+x+1)");
    }
}
