//! Canonical ring elements, their enumeration order, and display labels.

use crate::ring::spec::RingSpec;

/// An element of a ring, shaped like its spec: a residue for Z_n, a
/// coefficient vector of length deg(f) for Z_p[x]/(f), a tuple for a
/// product. Payloads are always reduced, so structural equality is ring
/// equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingElement {
    Residue(u64),
    PolyCoeffs(Vec<u64>),
    Tuple(Vec<RingElement>),
}

/// Element at a given enumeration index. The order is: residues ascending
/// for Z_n; base-p counting with the constant coefficient as the fastest
/// digit for quotients (0, 1, x, x+1, ... over Z_2); an odometer with the
/// last factor fastest for products, so (0,0) comes first and tuples sort
/// by leftmost component.
pub fn element_at(spec: &RingSpec, index: u64) -> RingElement {
    match spec {
        RingSpec::Zn(n) => {
            debug_assert!(index < *n);
            RingElement::Residue(index)
        }
        RingSpec::QuotientPoly { prime, modulus } => {
            let deg = modulus.degree().unwrap();
            let mut coeffs = vec![0u64; deg];
            let mut rest = index;
            for c in coeffs.iter_mut() {
                *c = rest % prime;
                rest /= prime;
            }
            debug_assert_eq!(rest, 0);
            RingElement::PolyCoeffs(coeffs)
        }
        RingSpec::Product(fs) => {
            let mut parts = vec![RingElement::Residue(0); fs.len()];
            let mut rest = index;
            for (slot, f) in parts.iter_mut().zip(fs.iter()).rev() {
                let m = f.order() as u64;
                *slot = element_at(f, rest % m);
                rest /= m;
            }
            debug_assert_eq!(rest, 0);
            RingElement::Tuple(parts)
        }
    }
}

/// Inverse of [`element_at`]; total on canonical elements of the spec.
pub fn index_of(spec: &RingSpec, elem: &RingElement) -> u64 {
    match (spec, elem) {
        (RingSpec::Zn(_), RingElement::Residue(r)) => *r,
        (RingSpec::QuotientPoly { prime, .. }, RingElement::PolyCoeffs(cs)) => {
            let mut idx = 0u64;
            for &c in cs.iter().rev() {
                idx = idx * prime + c;
            }
            idx
        }
        (RingSpec::Product(fs), RingElement::Tuple(parts)) => {
            let mut idx = 0u64;
            for (f, part) in fs.iter().zip(parts.iter()) {
                idx = idx * f.order() as u64 + index_of(f, part);
            }
            idx
        }
        _ => panic!("element shape does not match ring spec"),
    }
}

/// All elements in enumeration order; index 0 is the zero element.
pub fn elements(spec: &RingSpec) -> Vec<RingElement> {
    let order = spec.order() as u64;
    (0..order).map(|i| element_at(spec, i)).collect()
}

/// Display label in the notation of the source ring: "3" in Z_n, "x+1" in
/// a quotient, "(1,2)" in a product.
pub fn label(spec: &RingSpec, elem: &RingElement) -> String {
    match (spec, elem) {
        (RingSpec::Zn(_), RingElement::Residue(r)) => r.to_string(),
        (RingSpec::QuotientPoly { prime, .. }, RingElement::PolyCoeffs(cs)) => {
            crate::ring::poly::Poly::new(cs, *prime).to_string()
        }
        (RingSpec::Product(fs), RingElement::Tuple(parts)) => {
            let inner: Vec<String> = fs
                .iter()
                .zip(parts.iter())
                .map(|(f, p)| label(f, p))
                .collect();
            format!("({})", inner.join(","))
        }
        _ => panic!("element shape does not match ring spec"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::spec::RingSpec;

    #[test]
    fn zn_enumeration() {
        let spec = RingSpec::zn(6).unwrap();
        let labels: Vec<String> = elements(&spec).iter().map(|e| label(&spec, e)).collect();
        assert_eq!(labels, ["0", "1", "2", "3", "4", "5"]);
    }

    #[test]
    fn quotient_enumeration() {
        let spec = RingSpec::quotient_poly(2, &[0, 0, 1]).unwrap();
        let labels: Vec<String> = elements(&spec).iter().map(|e| label(&spec, e)).collect();
        assert_eq!(labels, ["0", "1", "x", "x+1"]);
    }

    #[test]
    fn product_enumeration() {
        let spec = RingSpec::product(vec![RingSpec::zn(2).unwrap(), RingSpec::zn(4).unwrap()]).unwrap();
        let els = elements(&spec);
        assert_eq!(els.len(), 8);
        assert_eq!(label(&spec, &els[0]), "(0,0)");
        assert_eq!(label(&spec, &els[1]), "(0,1)");
        assert_eq!(label(&spec, &els[4]), "(1,0)");
    }

    #[test]
    fn index_roundtrip() {
        let specs = [
            RingSpec::zn(12).unwrap(),
            RingSpec::quotient_poly(3, &[1, 0, 1]).unwrap(),
            RingSpec::product(vec![
                RingSpec::zn(2).unwrap(),
                RingSpec::quotient_poly(2, &[0, 0, 1]).unwrap(),
                RingSpec::zn(3).unwrap(),
            ])
            .unwrap(),
        ];
        for spec in &specs {
            for (i, e) in elements(spec).iter().enumerate() {
                assert_eq!(index_of(spec, e), i as u64, "spec {spec}");
                assert_eq!(&element_at(spec, i as u64), e);
            }
        }
    }
}
