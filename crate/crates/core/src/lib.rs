//! Finite commutative ring engine and zero-divisor graph laboratory.
//!
//! Builds three graphs on the nonzero zero-divisors Z(R)* of a finite
//! commutative ring R:
//!
//! * gamma: x adjacent y iff xy = 0 (the zero-divisor graph),
//! * zstar: x adjacent y iff x + y in Z(R) (total-graph restriction),
//! * tilde: the union of the two (the extended zero-divisor graph),
//!
//! computes their invariants, and machine-verifies a family of structural
//! theorems about the extended graph over configurable ring catalogs.

#![forbid(unsafe_code)]

pub mod catalog;
pub mod error;
pub mod graph;
pub mod metrics;
pub mod primes;
pub mod ring;
pub mod suite;

pub use catalog::{builtin_catalog, generate_zn_range, load_catalog, Catalog, CatalogEntry, CatalogSource};
pub use error::{Error, Result};
pub use graph::{build_all, build_graph, export_dot, graphs_isomorphic, Graph, GraphKind, GraphTriple, ZeroDivisorGraph};
pub use metrics::{analyze, AnalysisReport, Length};
pub use ring::{parse_ring_spec, parse_ring_spec_with_cap, Ring, RingElement, RingProfile, RingSpec, DEFAULT_ORDER_CAP};
pub use suite::{
    examine_ring, goldbach_pairs, kn_brute_scan, kn_realizable, predict_complete, run_catalog,
    verify_ring, RealizationResult, RingReport, RunOptions, SuiteReport, TheoremVerdict,
};
