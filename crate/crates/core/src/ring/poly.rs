//! Dense univariate polynomials over Z_p, p prime.
//!
//! Coefficients are stored little-endian (index = power) and kept reduced
//! mod p with no trailing zeros, so the zero polynomial has an empty
//! coefficient vector. The moduli we care about have degree <= 8, so all
//! algorithms are straight schoolbook plus exhaustive trial division.

use crate::error::{Error, Result};

/// Degree cap for quotient moduli; keeps brute-force factorization cheap.
pub const POLY_DEGREE_CAP: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    coeffs: Vec<u64>,
}

impl Poly {
    /// Builds a polynomial from little-endian coefficients, reducing mod p
    /// and trimming trailing zeros.
    pub fn new(coeffs: &[u64], p: u64) -> Poly {
        let mut c: Vec<u64> = coeffs.iter().map(|&a| a % p).collect();
        while c.last() == Some(&0) {
            c.pop();
        }
        Poly { coeffs: c }
    }

    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(a: u64, p: u64) -> Poly {
        Poly::new(&[a], p)
    }

    pub fn x() -> Poly {
        Poly { coeffs: vec![0, 1] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn coeff(&self, power: usize) -> u64 {
        self.coeffs.get(power).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn add(&self, other: &Poly, p: u64) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c: Vec<u64> = (0..n).map(|i| (self.coeff(i) + other.coeff(i)) % p).collect();
        Poly::new(&c, p)
    }

    pub fn sub(&self, other: &Poly, p: u64) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c: Vec<u64> = (0..n)
            .map(|i| (self.coeff(i) + p - other.coeff(i)) % p)
            .collect();
        Poly::new(&c, p)
    }

    pub fn mul(&self, other: &Poly, p: u64) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                c[i + j] = (c[i + j] + a * b) % p;
            }
        }
        Poly::new(&c, p)
    }

    /// Division with remainder by a monic divisor.
    pub fn divrem(&self, divisor: &Poly, p: u64) -> (Poly, Poly) {
        assert!(divisor.is_monic(), "divrem needs a monic divisor");
        let d = divisor.degree().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![0u64; rem.len().saturating_sub(d)];
        while rem.len() > d {
            let lead = *rem.last().unwrap();
            let shift = rem.len() - 1 - d;
            if lead != 0 {
                quo[shift] = lead;
                for (i, &b) in divisor.coeffs.iter().enumerate() {
                    let idx = shift + i;
                    rem[idx] = (rem[idx] + p - lead * b % p) % p;
                }
            }
            rem.pop();
        }
        (Poly::new(&quo, p), Poly::new(&rem, p))
    }

    pub fn rem(&self, divisor: &Poly, p: u64) -> Poly {
        self.divrem(divisor, p).1
    }

    pub fn divides(&self, other: &Poly, p: u64) -> bool {
        other.rem(self, p).is_zero()
    }

    pub fn pow(&self, mut e: u32, p: u64) -> Poly {
        let mut acc = Poly::constant(1, p);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, p);
            }
            base = base.mul(&base, p);
            e >>= 1;
        }
        acc
    }

    pub fn eval(&self, x: u64, p: u64) -> u64 {
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = (acc * x + c) % p;
        }
        acc
    }
}

impl std::fmt::Display for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for power in (0..self.coeffs.len()).rev() {
            let c = self.coeffs[power];
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match power {
                0 => write!(f, "{c}")?,
                1 => {
                    if c != 1 {
                        write!(f, "{c}")?;
                    }
                    write!(f, "x")?;
                }
                _ => {
                    if c != 1 {
                        write!(f, "{c}")?;
                    }
                    write!(f, "x^{power}")?;
                }
            }
        }
        Ok(())
    }
}

/// Monic polynomials of the given degree, in lexicographic order on the
/// coefficient tuple read from the constant term up.
pub fn monic_polys(p: u64, degree: usize) -> impl Iterator<Item = Poly> {
    let count = (p as u128).pow(degree as u32);
    (0..count).map(move |idx| {
        let mut coeffs = vec![0u64; degree + 1];
        coeffs[degree] = 1;
        let mut rest = idx;
        for power in (0..degree).rev() {
            coeffs[power] = (rest % p as u128) as u64;
            rest /= p as u128;
        }
        Poly { coeffs }
    })
}

/// Irreducibility by trial division against every monic polynomial of
/// degree at most deg(f)/2.
pub fn is_irreducible(f: &Poly, p: u64) -> bool {
    let deg = match f.degree() {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    if deg == 1 {
        return true;
    }
    for d in 1..=deg / 2 {
        for g in monic_polys(p, d) {
            if g.divides(f, p) {
                return false;
            }
        }
    }
    true
}

/// The lexicographically least monic irreducible polynomial of the given
/// degree (constant term most significant in the comparison).
pub fn least_irreducible(p: u64, degree: usize) -> Poly {
    monic_polys(p, degree)
        .find(|f| is_irreducible(f, p))
        .expect("an irreducible polynomial of every degree exists over Z_p")
}

/// Full factorization of a monic polynomial into monic irreducibles with
/// multiplicities. Factors come out sorted by (degree, coefficient tuple)
/// because each step peels off the least divisor.
pub fn factor(f: &Poly, p: u64) -> Result<Vec<(Poly, u32)>> {
    let deg = f.degree().filter(|_| f.is_monic()).ok_or(Error::NonMonicModulus)?;
    if deg > POLY_DEGREE_CAP {
        return Err(Error::DegreeCapExceeded { degree: deg, cap: POLY_DEGREE_CAP });
    }
    let mut factors: Vec<(Poly, u32)> = Vec::new();
    let mut rest = f.clone();
    'outer: while rest.degree() != Some(0) {
        let rdeg = rest.degree().unwrap();
        for d in 1..=rdeg {
            for g in monic_polys(p, d) {
                if d == rdeg && g != rest {
                    // The only possible divisor of full degree is rest itself.
                    continue;
                }
                if g.divides(&rest, p) && is_irreducible(&g, p) {
                    rest = rest.divrem(&g, p).0;
                    match factors.last_mut() {
                        Some((h, m)) if *h == g => *m += 1,
                        _ => factors.push((g, 1)),
                    }
                    continue 'outer;
                }
            }
        }
        unreachable!("a nonconstant polynomial always has an irreducible divisor");
    }
    Ok(factors)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_forms() {
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(Poly::new(&[1, 1, 1], 2).to_string(), "x^2+x+1");
        assert_eq!(Poly::new(&[0, 0, 1], 2).to_string(), "x^2");
        assert_eq!(Poly::new(&[1, 2], 3).to_string(), "2x+1");
        assert_eq!(Poly::new(&[4], 5).to_string(), "4");
    }

    #[test]
    fn divrem_reconstructs() {
        let p = 3;
        let f = Poly::new(&[2, 0, 1, 1], p);
        let g = Poly::new(&[1, 1], p);
        let (q, r) = f.divrem(&g, p);
        assert_eq!(q.mul(&g, p).add(&r, p), f);
        assert!(r.degree() < g.degree());
    }

    #[test]
    fn factor_x2_plus_x_over_z2() {
        // Oracle: multiply the expected factors back together.
        let p = 2;
        let f = Poly::new(&[0, 1, 1], p);
        let got = factor(&f, p).unwrap();
        assert_eq!(got, vec![(Poly::new(&[0, 1], p), 1), (Poly::new(&[1, 1], p), 1)]);
        let product = got
            .iter()
            .fold(Poly::constant(1, p), |acc, (g, m)| acc.mul(&g.pow(*m, p), p));
        assert_eq!(product, f);
    }

    #[test]
    fn factor_irreducible_quadratic() {
        // x^2+x+1 has no roots in Z_2, so it is irreducible.
        let p = 2;
        let f = Poly::new(&[1, 1, 1], p);
        assert_eq!(f.eval(0, p), 1);
        assert_eq!(f.eval(1, p), 1);
        assert_eq!(factor(&f, p).unwrap(), vec![(f, 1)]);
    }

    #[test]
    fn factor_x_squared() {
        let p = 2;
        let f = Poly::new(&[0, 0, 1], p);
        assert_eq!(factor(&f, p).unwrap(), vec![(Poly::new(&[0, 1], p), 2)]);
    }

    #[test]
    fn least_irreducible_quadratic_over_z2() {
        // Exhausting roots shows x^2+x+1 is the unique monic irreducible
        // quadratic over Z_2.
        let irreducible: Vec<Poly> = monic_polys(2, 2).filter(|f| is_irreducible(f, 2)).collect();
        assert_eq!(irreducible, vec![Poly::new(&[1, 1, 1], 2)]);
        assert_eq!(least_irreducible(2, 2), Poly::new(&[1, 1, 1], 2));
    }

    #[test]
    fn irreducibility_matches_root_test_for_cubics() {
        // For degree <= 3, irreducible iff no roots.
        for p in [2u64, 3, 5] {
            for f in monic_polys(p, 3) {
                let has_root = (0..p).any(|x| f.eval(x, p) == 0);
                assert_eq!(is_irreducible(&f, p), !has_root, "p={p} f={f}");
            }
        }
    }

    #[test]
    fn factor_product_roundtrip() {
        // Factor everything of degree <= 4 over Z_2 and multiply back.
        let p = 2;
        for d in 1..=4 {
            for f in monic_polys(p, d) {
                let fs = factor(&f, p).unwrap();
                let product = fs
                    .iter()
                    .fold(Poly::constant(1, p), |acc, (g, m)| acc.mul(&g.pow(*m, p), p));
                assert_eq!(product, f, "f={f}");
                for (g, _) in &fs {
                    assert!(is_irreducible(g, p), "factor {g} of {f}");
                }
            }
        }
    }

    #[test]
    fn degree_cap_enforced() {
        let f = Poly::new(&[1, 0, 0, 0, 0, 0, 0, 0, 0, 1], 2);
        assert!(matches!(factor(&f, 2), Err(Error::DegreeCapExceeded { .. })));
    }
}
