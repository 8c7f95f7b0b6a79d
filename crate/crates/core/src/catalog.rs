//! Ring catalogs: the built-in collection, file loading, and Z_n ranges.

use std::path::Path;

use crate::error::{Error, Result};
use crate::primes::is_prime;
use crate::ring::{parse_ring_spec_with_cap, RingSpec, DEFAULT_ORDER_CAP};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub spec: RingSpec,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogSource {
    Builtin,
    File(String),
    ZnRange { lo: u64, hi: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
    pub source: CatalogSource,
}

impl Catalog {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Line-oriented text form; reloading it yields identical entries in
    /// identical order.
    pub fn to_file_string(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            out.push_str(&format!("{} = {}\n", e.name, e.spec.to_text()));
        }
        out
    }
}

/// The baseline collection of rings: the four orders-of-interest Z_n
/// families, the small non-complete product examples, and Z_390 for the
/// chordality counterexample.
pub fn builtin_catalog() -> Catalog {
    let texts = [
        "Z4",
        "Z6",
        "Z8",
        "Z9",
        "Z10",
        "Z12",
        "Z16",
        "Z22",
        "Z169",
        "Z390",
        "Z2 x Z4",
        "Z2 x Z2[x]/(x^2)",
        "Z3 x Z2[x]/(x^2)",
        "Z4 x GF(4)",
        "Z2[x]/(x^2) x GF(4)",
        "Z2 x Z2 x Z3",
        "Z2 x Z2",
        "Z2 x Z2 x Z2",
    ];
    let entries = texts
        .iter()
        .map(|t| CatalogEntry {
            name: t.replace(' ', ""),
            spec: parse_ring_spec_with_cap(t, DEFAULT_ORDER_CAP).expect("builtin specs are valid"),
        })
        .collect();
    Catalog { entries, source: CatalogSource::Builtin }
}

/// Parses catalog text: one spec per line, optional "name = " prefix,
/// '#' starts a comment, blank lines are skipped.
pub fn parse_catalog_text(text: &str, cap: u64, source: CatalogSource) -> Result<Catalog> {
    let mut entries: Vec<CatalogEntry> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (name, spec_text) = match line.split_once('=') {
            Some((n, s)) => (n.trim().to_string(), s.trim()),
            None => (String::new(), line),
        };
        let spec = parse_ring_spec_with_cap(spec_text, cap)
            .map_err(|e| Error::CatalogLine { line: line_no, msg: e.to_string() })?;
        let name = if name.is_empty() { spec.compact_text() } else { name };
        if entries.iter().any(|e| e.name == name) {
            return Err(Error::DuplicateName(name));
        }
        entries.push(CatalogEntry { name, spec });
    }
    Ok(Catalog { entries, source })
}

pub fn load_catalog(path: &Path, cap: u64) -> Result<Catalog> {
    let text = std::fs::read_to_string(path)?;
    parse_catalog_text(&text, cap, CatalogSource::File(path.display().to_string()))
}

/// Z_n for every composite n in [lo, hi]. Primes give fields with empty
/// graphs and are skipped.
pub fn generate_zn_range(lo: u64, hi: u64, cap: u64) -> Result<Catalog> {
    if lo < 2 || lo > hi {
        return Err(Error::BadRange { lo, hi });
    }
    if hi > cap {
        return Err(Error::OrderCapExceeded { order: hi as u128, cap });
    }
    let entries = (lo..=hi)
        .filter(|&n| !is_prime(n))
        .map(|n| CatalogEntry { name: format!("Z{n}"), spec: RingSpec::Zn(n) })
        .collect();
    Ok(Catalog { entries, source: CatalogSource::ZnRange { lo, hi } })
}
