//! Ring arithmetic on canonical elements.
//!
//! All operations are total on canonical elements of the given spec and
//! return canonical results: residues reduced mod n, polynomial products
//! reduced by the quotient modulus, products componentwise.

use crate::ring::element::RingElement;
use crate::ring::poly::Poly;
use crate::ring::spec::RingSpec;

pub fn zero(spec: &RingSpec) -> RingElement {
    match spec {
        RingSpec::Zn(_) => RingElement::Residue(0),
        RingSpec::QuotientPoly { modulus, .. } => {
            RingElement::PolyCoeffs(vec![0; modulus.degree().unwrap()])
        }
        RingSpec::Product(fs) => RingElement::Tuple(fs.iter().map(zero).collect()),
    }
}

pub fn one(spec: &RingSpec) -> RingElement {
    match spec {
        RingSpec::Zn(_) => RingElement::Residue(1),
        RingSpec::QuotientPoly { modulus, .. } => {
            let mut coeffs = vec![0; modulus.degree().unwrap()];
            coeffs[0] = 1;
            RingElement::PolyCoeffs(coeffs)
        }
        RingSpec::Product(fs) => RingElement::Tuple(fs.iter().map(one).collect()),
    }
}

pub fn is_zero(elem: &RingElement) -> bool {
    match elem {
        RingElement::Residue(r) => *r == 0,
        RingElement::PolyCoeffs(cs) => cs.iter().all(|&c| c == 0),
        RingElement::Tuple(parts) => parts.iter().all(is_zero),
    }
}

pub fn add(spec: &RingSpec, x: &RingElement, y: &RingElement) -> RingElement {
    match (spec, x, y) {
        (RingSpec::Zn(n), RingElement::Residue(a), RingElement::Residue(b)) => {
            RingElement::Residue((a + b) % n)
        }
        (RingSpec::QuotientPoly { prime, .. }, RingElement::PolyCoeffs(a), RingElement::PolyCoeffs(b)) => {
            let coeffs: Vec<u64> = a.iter().zip(b.iter()).map(|(&u, &v)| (u + v) % prime).collect();
            RingElement::PolyCoeffs(coeffs)
        }
        (RingSpec::Product(fs), RingElement::Tuple(a), RingElement::Tuple(b)) => {
            let parts: Vec<RingElement> = fs
                .iter()
                .zip(a.iter().zip(b.iter()))
                .map(|(f, (u, v))| add(f, u, v))
                .collect();
            RingElement::Tuple(parts)
        }
        _ => panic!("element shape does not match ring spec"),
    }
}

pub fn neg(spec: &RingSpec, x: &RingElement) -> RingElement {
    match (spec, x) {
        (RingSpec::Zn(n), RingElement::Residue(a)) => RingElement::Residue((n - a) % n),
        (RingSpec::QuotientPoly { prime, .. }, RingElement::PolyCoeffs(a)) => {
            RingElement::PolyCoeffs(a.iter().map(|&u| (prime - u) % prime).collect())
        }
        (RingSpec::Product(fs), RingElement::Tuple(a)) => {
            RingElement::Tuple(fs.iter().zip(a.iter()).map(|(f, u)| neg(f, u)).collect())
        }
        _ => panic!("element shape does not match ring spec"),
    }
}

pub fn mul(spec: &RingSpec, x: &RingElement, y: &RingElement) -> RingElement {
    match (spec, x, y) {
        (RingSpec::Zn(n), RingElement::Residue(a), RingElement::Residue(b)) => {
            RingElement::Residue(a * b % n)
        }
        (RingSpec::QuotientPoly { prime, modulus }, RingElement::PolyCoeffs(a), RingElement::PolyCoeffs(b)) => {
            let deg = modulus.degree().unwrap();
            let product = Poly::new(a, *prime).mul(&Poly::new(b, *prime), *prime);
            let reduced = product.rem(modulus, *prime);
            let mut coeffs = vec![0u64; deg];
            for (i, c) in coeffs.iter_mut().enumerate() {
                *c = reduced.coeff(i);
            }
            RingElement::PolyCoeffs(coeffs)
        }
        (RingSpec::Product(fs), RingElement::Tuple(a), RingElement::Tuple(b)) => {
            let parts: Vec<RingElement> = fs
                .iter()
                .zip(a.iter().zip(b.iter()))
                .map(|(f, (u, v))| mul(f, u, v))
                .collect();
            RingElement::Tuple(parts)
        }
        _ => panic!("element shape does not match ring spec"),
    }
}
