//! Finite commutative rings: specs, elements, arithmetic, zero-divisors,
//! CRT normalization, and structural profiles.

pub mod arith;
pub mod element;
pub mod normalize;
pub mod parse;
pub mod poly;
pub mod profile;
pub mod spec;

use std::sync::OnceLock;

use crate::error::Result;

pub use element::RingElement;
pub use normalize::{normalize, Normalization};
pub use parse::{parse_ring_spec, parse_ring_spec_with_cap};
pub use profile::RingProfile;
pub use spec::{RingSpec, DEFAULT_ORDER_CAP};

/// A ring spec evaluated into a working ring: every element enumerated,
/// the full zero-divisor set memoized. Construction does all the mutation;
/// afterwards the ring is read-only and safe to share across threads.
#[derive(Debug)]
pub struct Ring {
    spec: RingSpec,
    order: usize,
    elements: Vec<RingElement>,
    zero_divisor: Vec<bool>,
    zero_divisors_star: Vec<usize>,
    normalization: OnceLock<Normalization>,
}

impl Ring {
    pub fn new(spec: RingSpec) -> Result<Ring> {
        Ring::with_cap(spec, DEFAULT_ORDER_CAP)
    }

    pub fn with_cap(spec: RingSpec, cap: u64) -> Result<Ring> {
        spec.check_cap(cap)?;
        let order = spec.order() as usize;
        let elements = element::elements(&spec);
        let zero_divisor = scan_zero_divisors(&spec, &elements);
        let zero_divisors_star = zero_divisor
            .iter()
            .enumerate()
            .skip(1)
            .filter_map(|(i, &zd)| zd.then_some(i))
            .collect();
        Ok(Ring {
            spec,
            order,
            elements,
            zero_divisor,
            zero_divisors_star,
            normalization: OnceLock::new(),
        })
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn elements(&self) -> &[RingElement] {
        &self.elements
    }

    pub fn element(&self, index: usize) -> &RingElement {
        &self.elements[index]
    }

    pub fn zero(&self) -> &RingElement {
        &self.elements[0]
    }

    pub fn one(&self) -> &RingElement {
        &self.elements[element::index_of(&self.spec, &arith::one(&self.spec)) as usize]
    }

    pub fn index_of(&self, x: &RingElement) -> usize {
        element::index_of(&self.spec, x) as usize
    }

    pub fn label(&self, x: &RingElement) -> String {
        element::label(&self.spec, x)
    }

    pub fn add(&self, x: &RingElement, y: &RingElement) -> RingElement {
        arith::add(&self.spec, x, y)
    }

    pub fn neg(&self, x: &RingElement) -> RingElement {
        arith::neg(&self.spec, x)
    }

    pub fn mul(&self, x: &RingElement, y: &RingElement) -> RingElement {
        arith::mul(&self.spec, x, y)
    }

    /// Membership in Z(R); zero is a zero-divisor (0 * 1 = 0 with 1 != 0).
    pub fn is_zero_divisor(&self, x: &RingElement) -> bool {
        self.zero_divisor[self.index_of(x)]
    }

    pub fn is_zero_divisor_index(&self, index: usize) -> bool {
        self.zero_divisor[index]
    }

    /// In a finite commutative ring every element is a unit or a
    /// zero-divisor, never both.
    pub fn is_unit(&self, x: &RingElement) -> bool {
        !self.is_zero_divisor(x)
    }

    /// Indices of the nonzero zero-divisors, in enumeration order. These
    /// are the vertices of all three graphs.
    pub fn zero_divisors_star(&self) -> &[usize] {
        &self.zero_divisors_star
    }

    pub fn zero_divisor_star_elements(&self) -> Vec<&RingElement> {
        self.zero_divisors_star.iter().map(|&i| &self.elements[i]).collect()
    }

    pub fn is_field(&self) -> bool {
        self.zero_divisors_star.is_empty()
    }

    pub fn normalization(&self) -> &Normalization {
        self.normalization.get_or_init(|| normalize::normalize(&self.spec))
    }

    pub fn profile(&self) -> RingProfile {
        profile::compute(self)
    }
}

/// Pairwise scan for the zero-divisor set. A product x*y = 0 with x, y
/// nonzero marks both elements at once.
fn scan_zero_divisors(spec: &RingSpec, elements: &[RingElement]) -> Vec<bool> {
    let n = elements.len();
    let mut zd = vec![false; n];
    zd[0] = true;
    for i in 1..n {
        if zd[i] {
            continue;
        }
        for j in 1..n {
            if arith::is_zero(&arith::mul(spec, &elements[i], &elements[j])) {
                zd[i] = true;
                zd[j] = true;
                break;
            }
        }
    }
    zd
}
