//! Regeneration of the published parameter tables and the worked example,
//! with every row tagged MATCH, MISMATCH, UNRESOLVED (known inconsistency in
//! the source table), or LOWER-BOUND-ONLY (distances beyond the enumeration
//! cap, parameters verified).

use std::fmt;
use std::sync::Arc;

use aqec_core::cyclic::{bch_code, CyclicCode};
use aqec_core::gf::{field_of_order, FiniteField};
use aqec_core::linear::LinearError;
use aqec_core::quantum::{
    asymmetric_subsystem, css_aqec_bounded, euclidean_subsystem_cyclic, Distance,
};
use serde::{Deserialize, Serialize};

use crate::claim::bch_delta_for_dimension;
use crate::report::{
    matrix_rows, poly_text, ClassicalCodeReport, DerivedCodeReport, WeightReportJson, SCHEMA,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RowTag {
    #[serde(rename = "MATCH")]
    Match,
    #[serde(rename = "MISMATCH")]
    Mismatch,
    #[serde(rename = "UNRESOLVED")]
    Unresolved,
    #[serde(rename = "LOWER-BOUND-ONLY")]
    LowerBoundOnly,
}

impl fmt::Display for RowTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RowTag::Match => write!(f, "MATCH"),
            RowTag::Mismatch => write!(f, "MISMATCH"),
            RowTag::Unresolved => write!(f, "UNRESOLVED"),
            RowTag::LowerBoundOnly => write!(f, "LOWER-BOUND-ONLY"),
        }
    }
}

/// How a stated parent code is realized.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ParentKind {
    /// Narrow-sense BCH with the given designed distance.
    Bch(u64),
    /// Euclidean dual of the narrow-sense BCH with the given designed distance.
    DualBch(u64),
    /// No narrow-sense BCH code has the stated dimension.
    Missing,
}

#[derive(Debug, Clone, Copy)]
struct Parent {
    n: u64,
    k: u64,
    d: u64,
    kind: ParentKind,
}

impl Parent {
    const fn bch(n: u64, k: u64, d: u64, delta: u64) -> Self {
        Parent {
            n,
            k,
            d,
            kind: ParentKind::Bch(delta),
        }
    }

    const fn dual_bch(n: u64, k: u64, d: u64, delta: u64) -> Self {
        Parent {
            n,
            k,
            d,
            kind: ParentKind::DualBch(delta),
        }
    }

    const fn missing(n: u64, k: u64, d: u64) -> Self {
        Parent {
            n,
            k,
            d,
            kind: ParentKind::Missing,
        }
    }

    fn stated(&self, q: u64) -> String {
        format!("[{},{},{}]_{}", self.n, self.k, self.d, q)
    }
}

struct Table1Row {
    q: u64,
    c1: Parent,
    c2: Parent,
    /// Claimed (n, k, d_z, d_x).
    claim: (u64, u64, u64, u64),
    /// Known inconsistency in the source table: an honest mismatch is
    /// expected and reported as UNRESOLVED rather than MISMATCH.
    known_inconsistent: bool,
}

fn table1_rows() -> Vec<Table1Row> {
    vec![
        Table1Row {
            q: 2,
            c1: Parent::bch(15, 11, 3, 3),
            c2: Parent::bch(15, 7, 5, 5),
            claim: (15, 3, 5, 3),
            known_inconsistent: false,
        },
        Table1Row {
            q: 2,
            c1: Parent::dual_bch(15, 8, 4, 5),
            c2: Parent::bch(15, 7, 5, 5),
            claim: (15, 0, 5, 4),
            known_inconsistent: false,
        },
        Table1Row {
            q: 2,
            c1: Parent::bch(31, 21, 5, 5),
            c2: Parent::bch(31, 16, 7, 7),
            claim: (31, 6, 7, 5),
            known_inconsistent: false,
        },
        Table1Row {
            q: 2,
            c1: Parent::bch(31, 26, 3, 3),
            c2: Parent::bch(31, 16, 7, 7),
            claim: (31, 11, 7, 3),
            known_inconsistent: false,
        },
        Table1Row {
            q: 2,
            c1: Parent::bch(31, 26, 3, 3),
            c2: Parent::bch(31, 16, 7, 7),
            claim: (31, 10, 8, 3),
            known_inconsistent: true,
        },
        Table1Row {
            q: 2,
            c1: Parent::bch(31, 26, 3, 3),
            c2: Parent::bch(31, 11, 11, 8),
            claim: (31, 6, 11, 3),
            known_inconsistent: false,
        },
        Table1Row {
            q: 2,
            c1: Parent::bch(31, 26, 3, 3),
            c2: Parent::bch(31, 6, 15, 12),
            claim: (31, 1, 15, 3),
            known_inconsistent: false,
        },
        Table1Row {
            q: 2,
            c1: Parent::bch(127, 113, 5, 5),
            c2: Parent::bch(127, 78, 15, 15),
            claim: (127, 64, 15, 5),
            known_inconsistent: false,
        },
        Table1Row {
            q: 2,
            c1: Parent::bch(127, 106, 7, 7),
            c2: Parent::missing(127, 77, 27),
            claim: (127, 56, 25, 7),
            known_inconsistent: true,
        },
    ]
}

struct Table2Row {
    q: u64,
    parent: Parent,
    /// The table's designed-distance column: the delta of the parent BCH code.
    delta: u64,
    /// Claimed (n, k, r, d).
    claim: (u64, u64, u64, u64),
}

fn table2_rows() -> Vec<Table2Row> {
    let row = |q, pn, pk, pd, delta, claim| Table2Row {
        q,
        parent: Parent::bch(pn, pk, pd, delta),
        delta,
        claim,
    };
    vec![
        row(2, 15, 7, 5, 4, (15, 4, 3, 3)),
        row(2, 15, 5, 7, 6, (15, 6, 1, 3)),
        row(2, 31, 11, 11, 8, (31, 10, 1, 5)),
        row(2, 31, 6, 15, 12, (31, 20, 1, 3)),
        row(2, 63, 39, 9, 8, (63, 6, 21, 7)),
        row(2, 63, 36, 11, 10, (63, 6, 15, 7)),
        row(2, 63, 30, 13, 12, (63, 6, 3, 7)),
        row(2, 63, 24, 15, 14, (63, 18, 3, 7)),
        row(2, 63, 18, 21, 16, (63, 30, 3, 5)),
        row(2, 63, 16, 23, 22, (63, 32, 1, 5)),
        row(2, 63, 10, 27, 24, (63, 44, 1, 3)),
        row(2, 63, 7, 31, 28, (63, 50, 1, 3)),
        row(4, 15, 9, 5, 4, (15, 2, 5, 3)),
        row(4, 15, 8, 6, 6, (15, 2, 3, 3)),
        row(4, 15, 6, 7, 7, (15, 4, 1, 3)),
        row(4, 15, 4, 10, 8, (15, 8, 1, 3)),
        row(4, 31, 11, 11, 8, (31, 10, 1, 5)),
        row(4, 31, 6, 15, 12, (31, 20, 1, 3)),
        row(4, 63, 30, 15, 15, (63, 12, 9, 7)),
        row(4, 63, 27, 21, 16, (63, 18, 9, 7)),
        row(4, 63, 26, 22, 22, (63, 18, 7, 7)),
    ]
}

/// One reproduced table row.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RowReport {
    pub index: usize,
    pub claimed: String,
    pub computed: Option<String>,
    pub tag: RowTag,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub record: Option<DerivedCodeReport>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableReport {
    pub schema: String,
    pub target: String,
    pub rows: Vec<RowReport>,
}

impl TableReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{}\n", self.target));
        for row in &self.rows {
            out.push_str(&format!(
                "{:>2}  {:<18} {:<22} {}\n",
                row.index,
                row.claimed,
                row.computed.as_deref().unwrap_or("-"),
                row.tag
            ));
            for note in &row.notes {
                out.push_str(&format!("      note: {note}\n"));
            }
        }
        out
    }

    pub fn any_mismatch(&self) -> bool {
        self.rows.iter().any(|r| r.tag == RowTag::Mismatch)
    }
}

/// A resolved parent together with certification notes.
struct CheckedParent {
    code: CyclicCode,
    notes: Vec<String>,
}

fn check_parent(
    field: &Arc<FiniteField>,
    p: &Parent,
    q: u64,
    cap: u64,
) -> Result<CheckedParent, String> {
    let code = match p.kind {
        ParentKind::Bch(delta) => bch_code(field, p.n, delta).map_err(|e| e.to_string())?,
        ParentKind::DualBch(delta) => bch_code(field, p.n, delta)
            .and_then(|c| c.dual())
            .map_err(|e| e.to_string())?,
        ParentKind::Missing => {
            let nearest = bch_delta_for_dimension(p.n, q, p.k);
            return Err(match nearest {
                Some(delta) => format!(
                    "stated parent {} resolves to designed distance {delta}, inconsistent",
                    p.stated(q)
                ),
                None => format!(
                    "no narrow-sense BCH code of length {} over GF({q}) has dimension {}",
                    p.n, p.k
                ),
            });
        }
    };
    if (code.n(), code.k()) != (p.n, p.k) {
        return Err(format!(
            "stated parent {} but construction gives [{},{}]_{q}",
            p.stated(q),
            code.n(),
            code.k()
        ));
    }
    let mut notes = Vec::new();
    match code.linear().min_weight(cap) {
        Ok(rep) => {
            let d = rep.min_weight.finite().expect("nonzero code");
            if d != p.d {
                return Err(format!(
                    "stated parent {} but enumerated distance is {d}",
                    p.stated(q)
                ));
            }
        }
        Err(LinearError::TooLargeToEnumerate { .. }) => {
            let floor = code.distance_floor();
            if floor > p.d {
                return Err(format!(
                    "stated parent {} but the designed-distance bound is already {floor}",
                    p.stated(q)
                ));
            }
            notes.push(format!(
                "parent {} distance beyond the cap: certified >= {floor} only",
                p.stated(q)
            ));
        }
        Err(e) => return Err(e.to_string()),
    }
    Ok(CheckedParent { code, notes })
}

pub fn reproduce_table1(cap: u64) -> TableReport {
    let mut rows = Vec::new();
    for (index, row) in table1_rows().into_iter().enumerate() {
        let claimed = format!(
            "[[{},{},{}/{}]]_{}",
            row.claim.0, row.claim.1, row.claim.2, row.claim.3, row.q
        );
        let fallback_tag = if row.known_inconsistent {
            RowTag::Unresolved
        } else {
            RowTag::Mismatch
        };
        let mut notes = Vec::new();
        let outcome: Result<(Option<String>, RowTag, Option<DerivedCodeReport>), String> = (|| {
            let field = field_of_order(row.q).map_err(|e| e.to_string())?;
            let p1 = check_parent(&field, &row.c1, row.q, cap)?;
            let p2 = check_parent(&field, &row.c2, row.q, cap)?;
            notes.extend(p1.notes.iter().cloned());
            notes.extend(p2.notes.iter().cloned());
            let rec = css_aqec_bounded(
                p1.code.linear(),
                p2.code.linear(),
                p1.code.distance_floor(),
                p2.code.distance_floor(),
                cap,
            )
            .map_err(|e| e.to_string())?;
            let computed = rec.describe();
            let report = DerivedCodeReport::from_aqec(&rec);
            let (cn, ck, cdz, cdx) = row.claim;
            if (rec.n, rec.k) != (cn, ck) {
                notes.push(format!(
                    "computed k = {} from k1 + k2 - n = {} + {} - {}",
                    rec.k,
                    p1.code.k(),
                    p2.code.k(),
                    rec.n
                ));
                return Ok((Some(computed), fallback_tag, Some(report)));
            }
            match (rec.d_z, rec.d_x) {
                (Distance::Exact(dz), Distance::Exact(dx)) => {
                    if (dz, dx) == (cdz, cdx) {
                        Ok((Some(computed), RowTag::Match, Some(report)))
                    } else {
                        notes.push(format!(
                            "enumerated distances {dz}/{dx} differ from claimed {cdz}/{cdx}"
                        ));
                        Ok((Some(computed), fallback_tag, Some(report)))
                    }
                }
                (dz, dx) => {
                    if dz.value() <= cdz && dx.value() <= cdx {
                        notes.push(format!(
                            "distances beyond the cap: certified >={}/>={} only",
                            dz.value(),
                            dx.value()
                        ));
                        Ok((Some(computed), RowTag::LowerBoundOnly, Some(report)))
                    } else {
                        notes.push(format!(
                            "certified lower bounds {}/{} exceed claimed {cdz}/{cdx}",
                            dz.value(),
                            dx.value()
                        ));
                        Ok((Some(computed), fallback_tag, Some(report)))
                    }
                }
            }
        })(
        );
        let report_row = match outcome {
            Ok((computed, tag, record)) => RowReport {
                index: index + 1,
                claimed,
                computed,
                tag,
                notes,
                record,
            },
            Err(witness) => {
                notes.push(witness);
                RowReport {
                    index: index + 1,
                    claimed,
                    computed: None,
                    tag: fallback_tag,
                    notes,
                    record: None,
                }
            }
        };
        rows.push(report_row);
    }
    TableReport {
        schema: SCHEMA.to_string(),
        target: "table1".to_string(),
        rows,
    }
}

pub fn reproduce_table2(cap: u64) -> TableReport {
    let mut rows = Vec::new();
    for (index, row) in table2_rows().into_iter().enumerate() {
        let claimed = format!(
            "[[{},{},{},{}]]_{}",
            row.claim.0, row.claim.1, row.claim.2, row.claim.3, row.q
        );
        let mut notes = Vec::new();
        notes.push(format!(
            "parent {} at designed distance {}",
            row.parent.stated(row.q),
            row.delta
        ));
        let outcome: Result<(Option<String>, RowTag, Option<DerivedCodeReport>), String> = (|| {
            let field = field_of_order(row.q).map_err(|e| e.to_string())?;
            let parent = check_parent(&field, &row.parent, row.q, cap)?;
            notes.extend(parent.notes.iter().cloned());
            let (primary, _) =
                euclidean_subsystem_cyclic(&parent.code, cap).map_err(|e| e.to_string())?;
            let computed = primary.describe();
            let report = DerivedCodeReport::from_subsystem(&primary);
            let (cn, ck, cr, cd) = row.claim;
            if (primary.n, primary.k, primary.r) != (cn, ck, cr) {
                notes.push(format!(
                    "computed (n,k,r) = ({},{},{})",
                    primary.n, primary.k, primary.r
                ));
                return Ok((Some(computed), RowTag::Mismatch, Some(report)));
            }
            match primary.distance.d_x() {
                Distance::Exact(d) => {
                    if d == cd {
                        Ok((Some(computed), RowTag::Match, Some(report)))
                    } else {
                        notes.push(format!("enumerated distance {d} differs from claimed {cd}"));
                        Ok((Some(computed), RowTag::Mismatch, Some(report)))
                    }
                }
                Distance::AtLeast(fl) => {
                    if fl <= cd {
                        notes.push(format!("distance beyond the cap: certified >={fl} only"));
                        Ok((Some(computed), RowTag::LowerBoundOnly, Some(report)))
                    } else {
                        notes.push(format!("certified lower bound {fl} exceeds claimed {cd}"));
                        Ok((Some(computed), RowTag::Mismatch, Some(report)))
                    }
                }
            }
        })(
        );
        let report_row = match outcome {
            Ok((computed, tag, record)) => RowReport {
                index: index + 1,
                claimed,
                computed,
                tag,
                notes,
                record,
            },
            Err(witness) => {
                notes.push(witness);
                RowReport {
                    index: index + 1,
                    claimed,
                    computed: None,
                    tag: RowTag::Mismatch,
                    notes,
                    record: None,
                }
            }
        };
        rows.push(report_row);
    }
    TableReport {
        schema: SCHEMA.to_string(),
        target: "table2".to_string(),
        rows,
    }
}

/// The worked example: both BCH codes, their duals with canonical generator
/// matrices, the nesting checks, the two relative weights, and the derived
/// AQEC, SSC, and ASSC records.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExampleReport {
    pub schema: String,
    pub target: String,
    pub c1: ClassicalCodeReport,
    pub c1_matrix: Vec<String>,
    pub c1_dual: ClassicalCodeReport,
    pub c1_dual_matrix: Vec<String>,
    pub c2: ClassicalCodeReport,
    pub c2_matrix: Vec<String>,
    pub c2_dual: ClassicalCodeReport,
    pub c2_dual_matrix: Vec<String>,
    pub c2_dual_in_c1: bool,
    pub c1_dual_in_c2: bool,
    pub d_x: u64,
    pub d_z: u64,
    /// Full weight reports for the two relative weights, witnesses included.
    pub d_x_report: WeightReportJson,
    pub d_z_report: WeightReportJson,
    pub aqec: DerivedCodeReport,
    pub ssc: DerivedCodeReport,
    pub assc: DerivedCodeReport,
}

impl ExampleReport {
    pub fn to_text(&self) -> String {
        let block = |title: &str, c: &ClassicalCodeReport, m: &[String]| {
            let mut s = format!(
                "{title}: [{},{},{}]_{}, g(x) = {}\n",
                c.n,
                c.k,
                c.min_weight.map_or("?".to_string(), |d| d.to_string()),
                c.q,
                poly_text(&c.gen_poly)
            );
            for row in m {
                s.push_str(&format!("  {row}\n"));
            }
            s
        };
        let mut out = String::new();
        out.push_str(&block("C1", &self.c1, &self.c1_matrix));
        out.push_str(&block("C1 dual", &self.c1_dual, &self.c1_dual_matrix));
        out.push_str(&block("C2", &self.c2, &self.c2_matrix));
        out.push_str(&block("C2 dual", &self.c2_dual, &self.c2_dual_matrix));
        out.push_str(&format!(
            "nesting: dual(C2) in C1: {}; dual(C1) in C2: {}\n",
            self.c2_dual_in_c1, self.c1_dual_in_c2
        ));
        out.push_str(&format!("d_x = {}, d_z = {}\n", self.d_x, self.d_z));
        out.push_str(&format!("AQEC: {}\n", self.aqec.parameters));
        out.push_str(&format!("SSC:  {}\n", self.ssc.parameters));
        out.push_str(&format!("ASSC: {}\n", self.assc.parameters));
        out
    }
}

pub fn reproduce_example(cap: u64) -> Result<ExampleReport, String> {
    let field = field_of_order(2).map_err(|e| e.to_string())?;
    let c1 = bch_code(&field, 15, 3).map_err(|e| e.to_string())?;
    let c2 = bch_code(&field, 15, 5).map_err(|e| e.to_string())?;
    let c1d = c1.dual().map_err(|e| e.to_string())?;
    let c2d = c2.dual().map_err(|e| e.to_string())?;

    let wt = |c: &CyclicCode| -> Result<u64, String> {
        Ok(c.linear()
            .min_weight(cap)
            .map_err(|e| e.to_string())?
            .min_weight
            .finite()
            .expect("nonzero code"))
    };
    let report = |c: &CyclicCode, d: u64| ClassicalCodeReport::from_cyclic(c, Some(d));

    let (w1, w2, w1d, w2d) = (wt(&c1)?, wt(&c2)?, wt(&c1d)?, wt(&c2d)?);
    let c2_dual_in_c1 = c1
        .linear()
        .contains(c2d.linear())
        .map_err(|e| e.to_string())?;
    let c1_dual_in_c2 = c2
        .linear()
        .contains(c1d.linear())
        .map_err(|e| e.to_string())?;

    let rel_x = c1
        .linear()
        .relative_min_weight(c2d.linear(), cap)
        .map_err(|e| e.to_string())?;
    let rel_z = c2
        .linear()
        .relative_min_weight(c1d.linear(), cap)
        .map_err(|e| e.to_string())?;
    let d_x = rel_x
        .min_weight
        .finite()
        .expect("C1 strictly contains dual(C2)");
    let d_z = rel_z
        .min_weight
        .finite()
        .expect("C2 strictly contains dual(C1)");

    let aqec = css_aqec_bounded(c1.linear(), c2.linear(), 3, 5, cap).map_err(|e| e.to_string())?;
    let (ssc, _) = euclidean_subsystem_cyclic(&c2, cap).map_err(|e| e.to_string())?;
    let (assc, _) =
        asymmetric_subsystem(c2.linear(), c1.linear(), cap).map_err(|e| e.to_string())?;

    Ok(ExampleReport {
        schema: SCHEMA.to_string(),
        target: "example".to_string(),
        c1: report(&c1, w1),
        c1_matrix: matrix_rows(c1.linear()),
        c1_dual: report(&c1d, w1d),
        c1_dual_matrix: matrix_rows(c1d.linear()),
        c2: report(&c2, w2),
        c2_matrix: matrix_rows(c2.linear()),
        c2_dual: report(&c2d, w2d),
        c2_dual_matrix: matrix_rows(c2d.linear()),
        c2_dual_in_c1,
        c1_dual_in_c2,
        d_x,
        d_z,
        d_x_report: WeightReportJson::from_core(&rel_x),
        d_z_report: WeightReportJson::from_core(&rel_z),
        aqec: DerivedCodeReport::from_aqec(&aqec),
        ssc: DerivedCodeReport::from_subsystem(&ssc),
        assc: DerivedCodeReport::from_subsystem(&assc),
    })
}

/// One eligible-coset sweep used by the ssc-cyclic construction surface:
/// the cosets inside T(C2) \ T(C2-dual) available as gauge sets.
pub fn eligible_gauge_cosets(c2: &CyclicCode) -> Result<Vec<u64>, String> {
    let t2 = c2.defining_set();
    let dual = t2.dual();
    let window = t2.minus(&dual).map_err(|e| e.to_string())?;
    Ok(window.representatives())
}
