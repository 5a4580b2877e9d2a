//! JSON and text report rendering for derived codes and classical codes.
//!
//! Reports are deterministic: fixed field order, sorted collections, no
//! timestamps. The top-level schema tag is versioned.

use aqec_core::bounds::{self, BoundReport, BoundStatus};
use aqec_core::cyclic::CyclicCode;
use aqec_core::linear::{LinearCode, MinWeight, WeightReport};
use aqec_core::quantum::{AqecParams, SubsystemDistance, SubsystemParams};
use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "derived-code/1";

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ProvenanceReport {
    pub c1: String,
    pub c2: String,
    pub rule: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct BoundsReport {
    pub singleton: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subsystem_singleton: Option<String>,
    pub hamming: String,
    pub mds: bool,
    pub slack: i64,
}

impl BoundsReport {
    fn from_core(b: &BoundReport) -> Self {
        BoundsReport {
            singleton: b.singleton.to_string(),
            subsystem_singleton: match b.subsystem_singleton {
                BoundStatus::NotApplicable => None,
                s => Some(s.to_string()),
            },
            hamming: b.hamming.to_string(),
            mds: b.mds,
            slack: b.slack,
        }
    }
}

/// The derived-code report: one quantum or subsystem parameter record with
/// provenance, certification status, and bound checks.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct DerivedCodeReport {
    pub schema: String,
    pub construction: String,
    pub n: u64,
    pub k: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u64>,
    pub q: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d_x: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d_z: Option<u64>,
    pub certified: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pure_x: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pure_z: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pure: Option<bool>,
    pub parameters: String,
    pub provenance: ProvenanceReport,
    pub bounds: BoundsReport,
    pub warnings: Vec<String>,
}

impl DerivedCodeReport {
    pub fn from_aqec(p: &AqecParams) -> Self {
        let b = bounds::report_for_aqec(p);
        DerivedCodeReport {
            schema: SCHEMA.to_string(),
            construction: p.provenance.rule.clone(),
            n: p.n,
            k: p.k,
            r: None,
            q: p.q,
            d: None,
            d_x: Some(p.d_x.value()),
            d_z: Some(p.d_z.value()),
            certified: p.certified().to_string(),
            pure_x: p.pure_x,
            pure_z: p.pure_z,
            pure: None,
            parameters: p.describe(),
            provenance: ProvenanceReport {
                c1: p.provenance.c1.clone(),
                c2: p.provenance.c2.clone(),
                rule: p.provenance.rule.clone(),
            },
            bounds: BoundsReport::from_core(&b),
            warnings: p.warnings.clone(),
        }
    }

    pub fn from_subsystem(p: &SubsystemParams) -> Self {
        let b = bounds::report_for_subsystem(p);
        let (d, d_x, d_z) = match p.distance {
            SubsystemDistance::Symmetric(d) => (Some(d.value()), None, None),
            SubsystemDistance::Asymmetric { d_z, d_x } => {
                (None, Some(d_x.value()), Some(d_z.value()))
            }
        };
        DerivedCodeReport {
            schema: SCHEMA.to_string(),
            construction: p.provenance.rule.clone(),
            n: p.n,
            k: p.k,
            r: Some(p.r),
            q: p.q,
            d,
            d_x,
            d_z,
            certified: p.certified().to_string(),
            pure_x: None,
            pure_z: None,
            pure: p.pure,
            parameters: p.describe(),
            provenance: ProvenanceReport {
                c1: p.provenance.c1.clone(),
                c2: p.provenance.c2.clone(),
                rule: p.provenance.rule.clone(),
            },
            bounds: BoundsReport::from_core(&b),
            warnings: p.warnings.clone(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("construction: {}\n", self.construction));
        out.push_str(&format!("parameters:   {}\n", self.parameters));
        out.push_str(&format!("certified:    {}\n", self.certified));
        let mut purity = Vec::new();
        if let Some(p) = self.pure_x {
            purity.push(format!("pure_x={p}"));
        }
        if let Some(p) = self.pure_z {
            purity.push(format!("pure_z={p}"));
        }
        if let Some(p) = self.pure {
            purity.push(format!("pure={p}"));
        }
        if !purity.is_empty() {
            out.push_str(&format!("purity:       {}\n", purity.join(" ")));
        }
        out.push_str(&format!(
            "bounds:       singleton={} hamming={} mds={} slack={}\n",
            self.bounds.singleton, self.bounds.hamming, self.bounds.mds, self.bounds.slack
        ));
        if let Some(ss) = &self.bounds.subsystem_singleton {
            out.push_str(&format!("              subsystem_singleton={ss}\n"));
        }
        out.push_str(&format!("from:         C1 = {}\n", self.provenance.c1));
        out.push_str(&format!("              C2 = {}\n", self.provenance.c2));
        for w in &self.warnings {
            out.push_str(&format!("warning:      {w}\n"));
        }
        out
    }
}

/// Classical cyclic code serialization: generator coefficients little-endian,
/// defining set as coset representatives.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ClassicalCodeReport {
    pub n: u64,
    pub q: u64,
    pub k: u64,
    pub gen_poly: Vec<u64>,
    pub defining_set: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub designed_distance: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_weight: Option<u64>,
}

impl ClassicalCodeReport {
    pub fn from_cyclic(c: &CyclicCode, min_weight: Option<u64>) -> Self {
        ClassicalCodeReport {
            n: c.n(),
            q: c.q(),
            k: c.k(),
            gen_poly: c.gen_poly().codes().iter().map(|&x| x as u64).collect(),
            defining_set: c.defining_set().representatives(),
            designed_distance: c.designed_distance(),
            min_weight,
        }
    }
}

/// Weight report serialization with the witness as a symbol vector and null
/// for the Infinity sentinel.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct WeightReportJson {
    pub min_weight: Option<u64>,
    pub witness: Option<Vec<u32>>,
    pub enumerated: u64,
    pub method: String,
}

impl WeightReportJson {
    pub fn from_core(w: &WeightReport) -> Self {
        WeightReportJson {
            min_weight: match w.min_weight {
                MinWeight::Finite(v) => Some(v),
                MinWeight::Infinite => None,
            },
            witness: w.witness.clone(),
            enumerated: w.enumerated,
            method: match w.method {
                aqec_core::linear::EnumMethod::Exhaustive => "exhaustive".to_string(),
                aqec_core::linear::EnumMethod::Sphere => "sphere".to_string(),
            },
        }
    }
}

/// Renders little-endian polynomial coefficients as "x^4 + x + 1".
pub fn poly_text(codes: &[u64]) -> String {
    if codes.iter().all(|&c| c == 0) {
        return "0".to_string();
    }
    let mut terms = Vec::new();
    for (i, &c) in codes.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        terms.push(match (i, c) {
            (0, _) => format!("{c}"),
            (1, 1) => "x".to_string(),
            (1, _) => format!("{c}x"),
            (_, 1) => format!("x^{i}"),
            (_, _) => format!("{c}x^{i}"),
        });
    }
    terms.join(" + ")
}

/// Generator matrix printed as rows of symbols, space-separated.
pub fn matrix_rows(c: &LinearCode) -> Vec<String> {
    (0..c.k())
        .map(|r| {
            c.generator()
                .row(r)
                .iter()
                .map(|s| s.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect()
}

/// Machine-readable error object for invalid job specs.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ErrorReport {
    pub schema: String,
    pub error: String,
    pub exit_code: i32,
}

impl ErrorReport {
    pub fn new(error: String, exit_code: i32) -> Self {
        ErrorReport {
            schema: SCHEMA.to_string(),
            error,
            exit_code,
        }
    }
}
