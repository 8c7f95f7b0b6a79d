//! Instance-wise verification of the structural theorems over catalogs of
//! rings.
//!
//! Each ring gets one verdict per theorem id. A verdict is `applicable`
//! when the theorem's hypotheses hold for that ring; `holds` is only
//! meaningful then. A counterexample anywhere would surface as a failing
//! verdict in the suite report, not a crash.

pub mod goldbach;
pub mod realize;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::catalog::Catalog;
use crate::graph::{build_all, GraphTriple};
use crate::metrics::{
    analyze, every_vertex_in_triangle, is_complete, is_hypotriangulated, square_property,
    universal_vertices, AnalysisReport, Length,
};
use crate::primes::{prime_power, two_distinct_primes};
use crate::ring::{arith, Ring, RingProfile, RingSpec, DEFAULT_ORDER_CAP};

pub use goldbach::{goldbach_pairs, SIEVE_BOUND};
pub use realize::{kn_brute_scan, kn_realizable, CertReason, Certificate, RealizationResult};

/// The theorem ids, in report order.
pub const THEOREM_IDS: [&str; 14] = [
    "thm-diameter",
    "thm-girth",
    "thm-complete-char",
    "thm-gamma-eq-tilde",
    "thm-zstar-eq-tilde",
    "thm-universal-vertex",
    "thm-triangle",
    "thm-square",
    "thm-hypotriangulated",
    "cor-reduced-two-maximal",
    "cor-zn-complete",
    "cor-gamma-eq-tilde-local",
    "cor-zn-gamma-eq-tilde",
    "cor-zn-zstar-eq-tilde",
];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheoremVerdict {
    pub theorem_id: String,
    pub applicable: bool,
    pub holds: bool,
    pub witness_or_counterexample: serde_json::Value,
}

impl TheoremVerdict {
    fn skipped(id: &str, why: &str) -> TheoremVerdict {
        TheoremVerdict {
            theorem_id: id.to_string(),
            applicable: false,
            holds: true,
            witness_or_counterexample: json!({ "skipped": why }),
        }
    }

    fn checked(id: &str, holds: bool, detail: serde_json::Value) -> TheoremVerdict {
        TheoremVerdict { theorem_id: id.to_string(), applicable: true, holds, witness_or_counterexample: detail }
    }

    pub fn failed(&self) -> bool {
        self.applicable && !self.holds
    }
}

/// Completeness of the extended graph, predicted from ring structure
/// alone: local, or a product of exactly two fields (= reduced with two
/// local factors), or boolean.
pub fn predict_complete(profile: &RingProfile) -> bool {
    profile.is_local
        || (profile.is_reduced && profile.local_factor_count == 2)
        || profile.is_boolean
}

/// One verdict per theorem id for a single ring. Fields get every verdict
/// marked not applicable (the graphs are empty).
pub fn verify_ring(ring: &Ring) -> Vec<TheoremVerdict> {
    examine_ring("", ring).verdicts
}

/// Full per-ring record: profile, per-kind analyses, verdicts, notes.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RingReport {
    pub name: String,
    pub spec_text: String,
    pub profile: RingProfile,
    pub gamma: AnalysisReport,
    pub zstar: AnalysisReport,
    pub tilde: AnalysisReport,
    pub verdicts: Vec<TheoremVerdict>,
    pub notes: Vec<String>,
}

pub fn examine_ring(name: &str, ring: &Ring) -> RingReport {
    let profile = ring.profile();
    let graphs = build_all(ring);
    let gamma_report = analyze(&graphs.gamma);
    let zstar_report = analyze(&graphs.zstar);
    let tilde_report = analyze(&graphs.tilde);

    let verdicts = if profile.is_field {
        THEOREM_IDS
            .iter()
            .map(|id| TheoremVerdict::skipped(id, "R is a field: Z(R)* is empty"))
            .collect()
    } else {
        judge(ring, &profile, &graphs, &tilde_report)
    };

    let mut notes = Vec::new();
    if tilde_report.is_complete && !profile.is_field && !gamma_report.is_complete && !zstar_report.is_complete
    {
        notes.push(
            "extended graph complete while neither spanning subgraph is".to_string(),
        );
    }

    RingReport {
        name: if name.is_empty() { ring.spec().compact_text() } else { name.to_string() },
        spec_text: ring.spec().to_text(),
        profile,
        gamma: gamma_report,
        zstar: zstar_report,
        tilde: tilde_report,
        verdicts,
        notes,
    }
}

fn judge(
    ring: &Ring,
    profile: &RingProfile,
    graphs: &GraphTriple,
    tilde_report: &AnalysisReport,
) -> Vec<TheoremVerdict> {
    let vstar = tilde_report.vertex_count;
    let tilde_complete = tilde_report.is_complete;
    let gamma_eq_tilde = graphs.gamma.adjacency().same_edges(graphs.tilde.adjacency());
    let zstar_eq_tilde = graphs.zstar.adjacency().same_edges(graphs.tilde.adjacency());
    let gamma_complete = is_complete(&graphs.gamma);
    let zn_composite = match ring.spec() {
        RingSpec::Zn(n) => Some(*n).filter(|&n| !crate::primes::is_prime(n)),
        _ => None,
    };

    let mut out = Vec::new();

    // Connectivity and diameter at most 2.
    out.push(TheoremVerdict::checked(
        "thm-diameter",
        tilde_report.is_connected && tilde_report.diameter <= Length::Finite(2),
        json!({ "connected": tilde_report.is_connected, "diameter": tilde_report.diameter }),
    ));

    // Girth exactly 3 once there are at least 3 vertices.
    out.push(if vstar >= 3 {
        TheoremVerdict::checked(
            "thm-girth",
            tilde_report.girth == Length::Finite(3),
            json!({ "girth": tilde_report.girth, "vertices": vstar }),
        )
    } else {
        TheoremVerdict::skipped("thm-girth", "fewer than 3 vertices")
    });

    // Completeness characterization.
    let predicted = predict_complete(profile);
    out.push(TheoremVerdict::checked(
        "thm-complete-char",
        tilde_complete == predicted,
        json!({
            "is_complete": tilde_complete,
            "predicted": predicted,
            "is_local": profile.is_local,
            "is_reduced": profile.is_reduced,
            "is_boolean": profile.is_boolean,
            "local_factor_count": profile.local_factor_count,
        }),
    ));

    // Gamma equals tilde iff gamma is complete.
    out.push(TheoremVerdict::checked(
        "thm-gamma-eq-tilde",
        gamma_eq_tilde == gamma_complete,
        json!({ "edges_equal": gamma_eq_tilde, "gamma_complete": gamma_complete }),
    ));

    // ZStar equals tilde iff R is local iff Z(R) is an ideal.
    let ideal = zero_divisors_form_ideal(ring);
    out.push(TheoremVerdict::checked(
        "thm-zstar-eq-tilde",
        zstar_eq_tilde == profile.is_local && profile.is_local == ideal,
        json!({ "edges_equal": zstar_eq_tilde, "is_local": profile.is_local, "zd_is_ideal": ideal }),
    ));

    // A vertex adjacent to every other vertex exists.
    let universal = universal_vertices(&graphs.tilde);
    out.push(TheoremVerdict::checked(
        "thm-universal-vertex",
        !universal.is_empty(),
        json!({
            "universal": universal.iter().map(|&v| graphs.tilde.label(v)).collect::<Vec<_>>()
        }),
    ));

    // Every vertex on a triangle.
    out.push(if vstar >= 3 {
        let cover = every_vertex_in_triangle(&graphs.tilde);
        let missing: Vec<&str> = cover
            .witnesses
            .iter()
            .enumerate()
            .filter(|(_, w)| w.is_none())
            .map(|(v, _)| graphs.tilde.label(v))
            .collect();
        TheoremVerdict::checked(
            "thm-triangle",
            cover.holds,
            json!({ "vertices_missing_triangle": missing }),
        )
    } else {
        TheoremVerdict::skipped("thm-triangle", "fewer than 3 vertices")
    });

    // Every non-adjacent pair spans a square.
    let square = square_property(&graphs.tilde);
    out.push(TheoremVerdict::checked(
        "thm-square",
        square.holds,
        json!({
            "squares_found": square.witnesses.len(),
            "violation": square.violation.map(|(x, y)| [graphs.tilde.label(x), graphs.tilde.label(y)]),
        }),
    ));

    // Hypotriangulation.
    let hypo = is_hypotriangulated(&graphs.tilde);
    out.push(TheoremVerdict::checked(
        "thm-hypotriangulated",
        hypo.holds,
        json!({
            "violation": hypo
                .violation
                .map(|[x, z, y]| [graphs.tilde.label(x), graphs.tilde.label(z), graphs.tilde.label(y)]),
        }),
    ));

    // Reduced, non-field, non-boolean: complete iff exactly two maximal ideals.
    out.push(if profile.is_reduced && !profile.is_boolean {
        TheoremVerdict::checked(
            "cor-reduced-two-maximal",
            tilde_complete == (profile.maximal_ideal_count == 2),
            json!({ "is_complete": tilde_complete, "maximal_ideal_count": profile.maximal_ideal_count }),
        )
    } else {
        TheoremVerdict::skipped("cor-reduced-two-maximal", "hypotheses need a reduced non-boolean ring")
    });

    // Z_n: complete iff n is a prime power or a product of two distinct primes.
    out.push(match zn_composite {
        Some(n) => {
            let shape = prime_power(n).is_some() || two_distinct_primes(n).is_some();
            TheoremVerdict::checked(
                "cor-zn-complete",
                tilde_complete == shape,
                json!({ "n": n, "is_complete": tilde_complete, "prime_power_or_two_primes": shape }),
            )
        }
        None => TheoremVerdict::skipped("cor-zn-complete", "ring is not a composite Z_n"),
    });

    // When gamma equals tilde: Z_2 x Z_2, or local with square-zero maximal
    // ideal, characteristic p or p^2, and p^m - 1 vertices.
    out.push(if gamma_eq_tilde {
        let z2z2 = profile.local_factor_count == 2 && profile.order == 4;
        let local_branch = profile.is_local
            && max_ideal_squares_to_zero(ring)
            && char_shape(profile.characteristic, vstar);
        TheoremVerdict::checked(
            "cor-gamma-eq-tilde-local",
            z2z2 || local_branch,
            json!({
                "is_z2xz2": z2z2,
                "is_local": profile.is_local,
                "characteristic": profile.characteristic,
                "vertices": vstar,
            }),
        )
    } else {
        TheoremVerdict::skipped("cor-gamma-eq-tilde-local", "gamma and tilde edge sets differ")
    });

    // Z_n: gamma equals tilde iff n = p^2.
    out.push(match zn_composite {
        Some(n) => {
            let is_p_squared = matches!(prime_power(n), Some((_, 2)));
            TheoremVerdict::checked(
                "cor-zn-gamma-eq-tilde",
                gamma_eq_tilde == is_p_squared,
                json!({ "n": n, "edges_equal": gamma_eq_tilde, "is_prime_squared": is_p_squared }),
            )
        }
        None => TheoremVerdict::skipped("cor-zn-gamma-eq-tilde", "ring is not a composite Z_n"),
    });

    // Z_n: zstar equals tilde iff n is a prime power.
    out.push(match zn_composite {
        Some(n) => {
            let is_pp = prime_power(n).is_some();
            TheoremVerdict::checked(
                "cor-zn-zstar-eq-tilde",
                zstar_eq_tilde == is_pp,
                json!({ "n": n, "edges_equal": zstar_eq_tilde, "is_prime_power": is_pp }),
            )
        }
        None => TheoremVerdict::skipped("cor-zn-zstar-eq-tilde", "ring is not a composite Z_n"),
    });

    out
}

/// Z(R) closed under addition and under multiplication by every ring
/// element (the ideal test; 0 is in Z(R) by convention).
fn zero_divisors_form_ideal(ring: &Ring) -> bool {
    let zd: Vec<usize> = (0..ring.order()).filter(|&i| ring.is_zero_divisor_index(i)).collect();
    for &a in &zd {
        let x = ring.element(a);
        for &b in &zd {
            let sum = ring.add(x, ring.element(b));
            if !ring.is_zero_divisor_index(ring.index_of(&sum)) {
                return false;
            }
        }
        for r in ring.elements() {
            let prod = ring.mul(x, r);
            if !ring.is_zero_divisor_index(ring.index_of(&prod)) {
                return false;
            }
        }
    }
    true
}

/// For a finite local ring the maximal ideal is Z(R); its square is zero
/// iff every pairwise product of zero-divisors vanishes.
fn max_ideal_squares_to_zero(ring: &Ring) -> bool {
    let zd: Vec<usize> = (0..ring.order()).filter(|&i| ring.is_zero_divisor_index(i)).collect();
    for &a in &zd {
        for &b in &zd {
            if !arith::is_zero(&ring.mul(ring.element(a), ring.element(b))) {
                return false;
            }
        }
    }
    true
}

/// char(R) is p or p^2 and the vertex count is p^m - 1 for that prime.
fn char_shape(characteristic: u64, vstar: usize) -> bool {
    let Some((p, k)) = prime_power(characteristic) else {
        return false;
    };
    if k > 2 {
        return false;
    }
    let mut target = vstar as u64 + 1;
    if target < p {
        return false;
    }
    while target % p == 0 {
        target /= p;
    }
    target == 1
}

/// Per-catalog sweep results.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuiteReport {
    pub rings: Vec<RingReport>,
    pub aggregate: Aggregate,
    pub failures: Vec<Failure>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Aggregate {
    pub ring_count: usize,
    pub verdicts_total: usize,
    pub verdicts_applicable: usize,
    pub verdicts_held: usize,
    pub failure_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub ring: String,
    pub theorem_id: Option<String>,
    pub message: String,
}

#[derive(Debug, Clone)]
pub struct RunOptions {
    pub order_cap: u64,
}

impl Default for RunOptions {
    fn default() -> RunOptions {
        RunOptions { order_cap: DEFAULT_ORDER_CAP }
    }
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Verifies every catalog entry, in catalog order. Per-ring errors
/// (e.g. an entry over the cap) land in the failures list without
/// aborting the sweep.
pub fn run_catalog(catalog: &Catalog, options: &RunOptions) -> SuiteReport {
    let mut rings = Vec::new();
    let mut failures = Vec::new();
    let mut aggregate = Aggregate::default();

    for entry in &catalog.entries {
        aggregate.ring_count += 1;
        let ring = match Ring::with_cap(entry.spec.clone(), options.order_cap) {
            Ok(r) => r,
            Err(e) => {
                failures.push(Failure {
                    ring: entry.name.clone(),
                    theorem_id: None,
                    message: e.to_string(),
                });
                continue;
            }
        };
        let report = examine_ring(&entry.name, &ring);
        for v in &report.verdicts {
            aggregate.verdicts_total += 1;
            if v.applicable {
                aggregate.verdicts_applicable += 1;
                if v.holds {
                    aggregate.verdicts_held += 1;
                } else {
                    failures.push(Failure {
                        ring: entry.name.clone(),
                        theorem_id: Some(v.theorem_id.clone()),
                        message: v.witness_or_counterexample.to_string(),
                    });
                }
            }
        }
        rings.push(report);
    }

    aggregate.failure_count = failures.len();
    SuiteReport { rings, aggregate, failures }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin_catalog;
    use crate::ring::parse_ring_spec;

    fn ring(text: &str) -> Ring {
        Ring::new(parse_ring_spec(text).unwrap()).unwrap()
    }

    fn verdict<'a>(vs: &'a [TheoremVerdict], id: &str) -> &'a TheoremVerdict {
        vs.iter().find(|v| v.theorem_id == id).unwrap()
    }

    #[test]
    fn predict_complete_examples() {
        let p = |text: &str| ring(text).profile();
        assert!(predict_complete(&p("Z8"))); // local
        assert!(predict_complete(&p("Z10"))); // Z2 x Z5, two fields
        assert!(predict_complete(&p("Z2 x Z2 x Z2"))); // boolean
        assert!(!predict_complete(&p("Z2 x Z4")));
    }

    #[test]
    fn z9_gamma_equals_tilde() {
        let vs = verify_ring(&ring("Z9"));
        let v = verdict(&vs, "cor-gamma-eq-tilde-local");
        assert!(v.applicable && v.holds);
        let v = verdict(&vs, "cor-zn-gamma-eq-tilde");
        assert!(v.applicable && v.holds);
    }

    #[test]
    fn z12_zstar_differs_from_tilde() {
        let r = ring("Z12");
        let graphs = build_all(&r);
        assert!(!graphs.zstar.adjacency().same_edges(graphs.tilde.adjacency()));
        let vs = verify_ring(&r);
        let v = verdict(&vs, "thm-zstar-eq-tilde");
        assert!(v.applicable && v.holds); // not equal, and not local: biconditional holds
        assert_eq!(v.witness_or_counterexample["edges_equal"], false);
        let v = verdict(&vs, "cor-zn-zstar-eq-tilde");
        assert!(v.applicable && v.holds);
    }

    #[test]
    fn z2_x_z4_all_applicable_hold() {
        let vs = verify_ring(&ring("Z2 x Z4"));
        assert!(vs.iter().all(|v| !v.failed()), "{vs:#?}");
        let v = verdict(&vs, "thm-complete-char");
        assert_eq!(v.witness_or_counterexample["is_complete"], false);
        assert_eq!(v.witness_or_counterexample["predicted"], false);
    }

    #[test]
    fn z6_remark_instance_noted() {
        let r = ring("Z6");
        let report = examine_ring("Z6", &r);
        assert!(report.tilde.is_complete);
        assert!(!report.gamma.is_complete);
        assert!(!report.zstar.is_complete);
        assert_eq!(report.notes.len(), 1);
    }

    #[test]
    fn fields_are_skipped() {
        let vs = verify_ring(&ring("Z5"));
        assert_eq!(vs.len(), THEOREM_IDS.len());
        assert!(vs.iter().all(|v| !v.applicable));
        assert!(vs.iter().all(|v| !v.failed()));
    }

    #[test]
    fn builtin_catalog_sweep_is_clean() {
        let report = run_catalog(&builtin_catalog(), &RunOptions::default());
        assert!(report.all_passed(), "failures: {:#?}", report.failures);
        assert_eq!(report.aggregate.ring_count, 18);
        assert_eq!(report.aggregate.failure_count, 0);
    }

    #[test]
    fn empty_catalog_is_success() {
        let catalog = Catalog { entries: vec![], source: crate::catalog::CatalogSource::Builtin };
        let report = run_catalog(&catalog, &RunOptions::default());
        assert!(report.all_passed());
        assert_eq!(report.aggregate.ring_count, 0);
    }

    #[test]
    fn over_cap_entry_becomes_failure() {
        let catalog = Catalog {
            entries: vec![crate::catalog::CatalogEntry {
                name: "Z30".into(),
                spec: parse_ring_spec("Z30").unwrap(),
            }],
            source: crate::catalog::CatalogSource::Builtin,
        };
        let report = run_catalog(&catalog, &RunOptions { order_cap: 16 });
        assert!(!report.all_passed());
        assert_eq!(report.failures.len(), 1);
        assert!(report.failures[0].theorem_id.is_none());
    }
}
