//! Decomposition of a finite ring into a product of local rings, with the
//! element-wise CRT bijection.
//!
//! Z_n splits over the prime factorization of n; Z_p[x]/(f) splits over
//! the irreducible factorization of f. A quotient factor whose modulus is
//! linear collapses to Z_p (remainder = evaluation), which is why
//! Z_2[x]/(x^2+x) normalizes to Z2 x Z2 rather than a pair of trivial
//! quotients.

use crate::primes::factorize;
use crate::ring::element::RingElement;
use crate::ring::poly::{factor, Poly};
use crate::ring::spec::RingSpec;

/// How one top-level factor of the original spec maps onto local factors.
#[derive(Debug, Clone)]
enum FactorSplit {
    /// Residue maps to its remainder mod each coprime prime power.
    Zn(Vec<u64>),
    /// Coefficient vector maps to its remainder by each coprime
    /// prime-power-of-an-irreducible modulus.
    Poly { prime: u64, moduli: Vec<Poly> },
}

/// Result of normalizing a ring spec: the product-of-local-rings form and
/// the transport map realizing the isomorphism.
#[derive(Debug, Clone)]
pub struct Normalization {
    original: RingSpec,
    normalized: RingSpec,
    parts: Vec<FactorSplit>,
}

pub fn normalize(spec: &RingSpec) -> Normalization {
    let mut parts = Vec::new();
    let mut locals = Vec::new();
    for f in spec.factors() {
        match f {
            RingSpec::Zn(n) => {
                let moduli: Vec<u64> = factorize(*n).iter().map(|(p, k)| p.pow(*k)).collect();
                for &m in &moduli {
                    locals.push(RingSpec::Zn(m));
                }
                parts.push(FactorSplit::Zn(moduli));
            }
            RingSpec::QuotientPoly { prime, modulus } => {
                let factors = factor(modulus, *prime)
                    .expect("modulus degree is within cap by construction");
                let moduli: Vec<Poly> =
                    factors.iter().map(|(q, m)| q.pow(*m, *prime)).collect();
                for m in &moduli {
                    locals.push(local_poly_spec(*prime, m));
                }
                parts.push(FactorSplit::Poly { prime: *prime, moduli });
            }
            RingSpec::Product(_) => unreachable!("products are flattened at construction"),
        }
    }
    let normalized = RingSpec::product(locals).expect("at least one local factor");
    Normalization { original: spec.clone(), normalized, parts }
}

/// Z_p[x]/(m) as a spec, collapsing a linear modulus to Z_p.
fn local_poly_spec(prime: u64, modulus: &Poly) -> RingSpec {
    if modulus.degree() == Some(1) {
        RingSpec::Zn(prime)
    } else {
        RingSpec::QuotientPoly { prime, modulus: modulus.clone() }
    }
}

impl Normalization {
    pub fn original(&self) -> &RingSpec {
        &self.original
    }

    pub fn normalized(&self) -> &RingSpec {
        &self.normalized
    }

    pub fn local_factor_count(&self) -> usize {
        self.normalized.factors().count()
    }

    pub fn is_local(&self) -> bool {
        self.local_factor_count() == 1
    }

    /// Carries an element of the original ring to the normalized ring.
    /// The map is a ring isomorphism; the oracle tests check this
    /// exhaustively on small rings.
    pub fn transport(&self, x: &RingElement) -> RingElement {
        let mut out = Vec::new();
        let payloads: Vec<&RingElement> = match (&self.original, x) {
            (RingSpec::Product(_), RingElement::Tuple(parts)) => parts.iter().collect(),
            (RingSpec::Product(_), _) => panic!("element shape does not match ring spec"),
            _ => vec![x],
        };
        for (split, payload) in self.parts.iter().zip(payloads) {
            match (split, payload) {
                (FactorSplit::Zn(moduli), RingElement::Residue(r)) => {
                    for &m in moduli {
                        out.push(RingElement::Residue(r % m));
                    }
                }
                (FactorSplit::Poly { prime, moduli }, RingElement::PolyCoeffs(cs)) => {
                    let g = Poly::new(cs, *prime);
                    for m in moduli {
                        let rem = g.rem(m, *prime);
                        let deg = m.degree().unwrap();
                        if deg == 1 {
                            out.push(RingElement::Residue(rem.coeff(0)));
                        } else {
                            let mut coeffs = vec![0u64; deg];
                            for (i, c) in coeffs.iter_mut().enumerate() {
                                *c = rem.coeff(i);
                            }
                            out.push(RingElement::PolyCoeffs(coeffs));
                        }
                    }
                }
                _ => panic!("element shape does not match ring spec"),
            }
        }
        if out.len() == 1 {
            out.pop().unwrap()
        } else {
            RingElement::Tuple(out)
        }
    }
}
