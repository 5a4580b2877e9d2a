//! Command dispatch: construct, verify, sweep, reproduce.
//!
//! Exit-code contract: 0 success, 1 verification mismatch, 2 invalid input or
//! precondition failure, 3 enumeration-cap exhaustion. Output is
//! deterministic; there is no randomness or timestamping anywhere.

use clap::{Parser, Subcommand, ValueEnum};

use aqec_core::cyclic::{bch_code, DefiningSet};
use aqec_core::gf::field_of_order;
use aqec_core::linear::{LinearError, DEFAULT_ENUMERATION_CAP};
use aqec_core::quantum::{
    aqec_bch_family, aqec_rs, asymmetric_subsystem, css_qec, cyclic_subsystem_from_t,
    euclidean_subsystem_cyclic, subsystem_bch_designed, subsystem_bch_hermitian_params, AqecParams,
    Distance, QuantumError, SubsystemParams, CAP_WARNING,
};
use serde::Serialize;

use crate::claim::{parse_claim, parse_parent, Claim, ClaimDistance, ParseError};
use crate::report::{DerivedCodeReport, ErrorReport, SCHEMA};
use crate::reproduce::{reproduce_example, reproduce_table1, reproduce_table2};

#[derive(Parser, Debug)]
#[command(
    name = "aqec",
    version,
    about = "Construct, verify, and reproduce asymmetric quantum and subsystem codes \
             derived from classical BCH, RS, and cyclic codes"
)]
pub struct Cli {
    /// Maximum candidates examined per weight enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_ENUMERATION_CAP)]
    pub cap: u64,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run a named construction and print its derived-code report.
    Construct {
        #[command(subcommand)]
        construction: Construction,
    },
    /// Rebuild a construction from parent codes and compare every claimed
    /// parameter; mismatches are listed with witnesses.
    Verify {
        #[arg(help = "Parameter claim, e.g. \"[[15,3,5/3]]_2\" or \"[[15,4,3,3]]_2\"")]
        claim: String,
        #[arg(long, help = "First parent: bch(n,q,delta), dual-bch(n,q,delta), rs(q,d), [n,k]_q")]
        c1: Option<String>,
        /// Second parent.
        #[arg(long)]
        c2: Option<String>,
        /// Single parent for Euclidean subsystem claims.
        #[arg(long)]
        parent: Option<String>,
    },
    /// Sweep a construction family over all valid parameters.
    Sweep {
        #[command(subcommand)]
        family: SweepFamily,
    },
    /// Regenerate a published table or the worked example, row by row.
    Reproduce {
        #[arg(value_enum)]
        target: ReproduceTarget,
    },
}

#[derive(Subcommand, Debug)]
pub enum Construction {
    /// AQEC from two nested narrow-sense BCH codes of designed distances d1 < d2.
    AqecBch {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        d1: u64,
        #[arg(long)]
        d2: u64,
    },
    /// Asymmetric MDS AQEC from two Reed-Solomon codes, d1 < d2 < n - d1.
    AqecRs {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        d1: u64,
        #[arg(long)]
        d2: u64,
    },
    /// Symmetric QEC from two nested BCH codes.
    QecBch {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        d1: u64,
        #[arg(long)]
        d2: u64,
    },
    /// Euclidean subsystem code from one BCH parent code.
    SscEuclid {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        delta: u64,
    },
    /// Asymmetric subsystem code from BCH parents; d1 names the code whose
    /// self-intersection is matched against the dual of the d2 code.
    Assc {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        d1: u64,
        #[arg(long)]
        d2: u64,
    },
    /// Subsystem BCH parameters from the designed-distance formula.
    SscBch {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        delta: u64,
        #[arg(long)]
        r: u64,
    },
    /// Hermitian-construction subsystem BCH parameters (formula level only).
    SscHermitian {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        delta: u64,
        #[arg(long)]
        r: u64,
    },
    /// Cyclic subsystem code with C2 the dual of bch(n,q,delta) and the
    /// gauge set given by coset representatives.
    SscCyclic {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        delta: u64,
        /// Coset representatives of the gauge set T, comma-separated.
        #[arg(long, value_delimiter = ',', default_value = "")]
        gauge: Vec<u64>,
    },
}

#[derive(Subcommand, Debug)]
pub enum SweepFamily {
    /// All nested BCH pairs with distinct coset unions for one length.
    AqecBch {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        q: u64,
    },
    /// All valid Reed-Solomon (d1, d2) pairs for one field.
    AqecRs {
        #[arg(long)]
        q: u64,
    },
    /// Euclidean subsystem codes over all parent designed distances.
    SscEuclid {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        q: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReproduceTarget {
    Table1,
    Table2,
    Example,
}

/// Result of one command: the streams to emit and the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CmdResult {
    pub stdout: String,
    pub stderr: String,
    pub exit: i32,
}

impl CmdResult {
    fn ok(stdout: String) -> Self {
        CmdResult {
            stdout,
            stderr: String::new(),
            exit: 0,
        }
    }

    fn with_exit(stdout: String, exit: i32) -> Self {
        CmdResult {
            stdout,
            stderr: String::new(),
            exit,
        }
    }

    fn fail(format: Format, message: String, exit: i32) -> Self {
        let stderr = match format {
            Format::Json => {
                let rep = ErrorReport::new(message, exit);
                format!(
                    "{}\n",
                    serde_json::to_string_pretty(&rep).expect("serializable")
                )
            }
            Format::Text => format!("error: {message}\n"),
        };
        CmdResult {
            stdout: String::new(),
            stderr,
            exit,
        }
    }
}

fn quantum_exit_code(e: &QuantumError) -> i32 {
    match e {
        QuantumError::Linear(LinearError::TooLargeToEnumerate { .. }) => 3,
        _ => 2,
    }
}

fn render_json<T: Serialize>(value: &T) -> String {
    format!(
        "{}\n",
        serde_json::to_string_pretty(value).expect("serializable")
    )
}

fn emit_report(report: DerivedCodeReport, format: Format) -> CmdResult {
    let exit = if report.warnings.iter().any(|w| w.contains(CAP_WARNING)) {
        3
    } else {
        0
    };
    let stdout = match format {
        Format::Json => render_json(&report),
        Format::Text => report.to_text(),
    };
    CmdResult::with_exit(stdout, exit)
}

enum Derived {
    Aqec(AqecParams),
    Subsystem(SubsystemParams),
}

impl Derived {
    fn report(&self) -> DerivedCodeReport {
        match self {
            Derived::Aqec(p) => DerivedCodeReport::from_aqec(p),
            Derived::Subsystem(p) => DerivedCodeReport::from_subsystem(p),
        }
    }
}

fn run_construction(c: &Construction, cap: u64) -> Result<Derived, (String, i32)> {
    let err2 = |e: String| (e, 2);
    match *c {
        Construction::AqecBch { n, q, d1, d2 } => {
            let f = field_of_order(q).map_err(|e| err2(e.to_string()))?;
            aqec_bch_family(&f, n, d1, d2, cap)
                .map(Derived::Aqec)
                .map_err(|e| (e.to_string(), quantum_exit_code(&e)))
        }
        Construction::AqecRs { q, d1, d2 } => {
            let f = field_of_order(q).map_err(|e| err2(e.to_string()))?;
            aqec_rs(&f, d1, d2, cap)
                .map(Derived::Aqec)
                .map_err(|e| (e.to_string(), quantum_exit_code(&e)))
        }
        Construction::QecBch { n, q, d1, d2 } => {
            let f = field_of_order(q).map_err(|e| err2(e.to_string()))?;
            let c1 = bch_code(&f, n, d1).map_err(|e| err2(e.to_string()))?;
            let c2 = bch_code(&f, n, d2).map_err(|e| err2(e.to_string()))?;
            css_qec(c1.linear(), c2.linear(), cap)
                .map(Derived::Subsystem)
                .map_err(|e| (e.to_string(), quantum_exit_code(&e)))
        }
        Construction::SscEuclid { n, q, delta } => {
            let f = field_of_order(q).map_err(|e| err2(e.to_string()))?;
            let parent = bch_code(&f, n, delta).map_err(|e| err2(e.to_string()))?;
            euclidean_subsystem_cyclic(&parent, cap)
                .map(|(primary, _)| Derived::Subsystem(primary))
                .map_err(|e| (e.to_string(), quantum_exit_code(&e)))
        }
        Construction::Assc { n, q, d1, d2 } => {
            let f = field_of_order(q).map_err(|e| err2(e.to_string()))?;
            let c1 = bch_code(&f, n, d1).map_err(|e| err2(e.to_string()))?;
            let c2 = bch_code(&f, n, d2).map_err(|e| err2(e.to_string()))?;
            asymmetric_subsystem(c1.linear(), c2.linear(), cap)
                .map(|(primary, _)| Derived::Subsystem(primary))
                .map_err(|e| (e.to_string(), quantum_exit_code(&e)))
        }
        Construction::SscBch { n, q, delta, r } => subsystem_bch_designed(n, q, delta, r)
            .map(Derived::Subsystem)
            .map_err(|e| (e.to_string(), quantum_exit_code(&e))),
        Construction::SscHermitian { n, q, delta, r } => {
            subsystem_bch_hermitian_params(n, q, delta, r)
                .map(Derived::Subsystem)
                .map_err(|e| (e.to_string(), quantum_exit_code(&e)))
        }
        Construction::SscCyclic {
            n,
            q,
            delta,
            ref gauge,
        } => {
            let f = field_of_order(q).map_err(|e| err2(e.to_string()))?;
            let c2 = bch_code(&f, n, delta)
                .and_then(|c| c.dual())
                .map_err(|e| err2(e.to_string()))?;
            let t = if gauge.is_empty() {
                DefiningSet::empty(n, q).map_err(|e| err2(e.to_string()))?
            } else {
                DefiningSet::closure(n, q, gauge.iter().copied())
                    .map_err(|e| err2(e.to_string()))?
            };
            cyclic_subsystem_from_t(&c2, &t, cap).map(Derived::Subsystem).map_err(|e| {
                let mut msg = e.to_string();
                if let QuantumError::TNotInWindow { .. } = e {
                    if let Ok(reps) = crate::reproduce::eligible_gauge_cosets(&c2) {
                        msg.push_str(&format!("; eligible coset representatives: {reps:?}"));
                    }
                }
                (msg, quantum_exit_code(&e))
            })
        }
    }
}

#[derive(Debug, Clone, Serialize)]
struct VerifyReport {
    schema: String,
    claim: String,
    computed: Option<String>,
    result: String,
    mismatches: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    record: Option<DerivedCodeReport>,
}

impl VerifyReport {
    fn to_text(&self) -> String {
        let mut out = format!(
            "claim:    {}\ncomputed: {}\nresult:   {}\n",
            self.claim,
            self.computed.as_deref().unwrap_or("-"),
            self.result
        );
        for m in &self.mismatches {
            out.push_str(&format!("mismatch: {m}\n"));
        }
        out
    }
}

fn check_num(mismatches: &mut Vec<String>, name: &str, claimed: u64, got: u64) {
    if claimed != got {
        mismatches.push(format!("{name}: claimed {claimed}, computed {got}"));
    }
}

fn check_dist(
    mismatches: &mut Vec<String>,
    uncertified: &mut bool,
    name: &str,
    claimed: u64,
    got: Distance,
) {
    match got {
        Distance::Exact(v) => {
            if v != claimed {
                mismatches.push(format!("{name}: claimed {claimed}, enumerated {v}"));
            }
        }
        Distance::AtLeast(v) => {
            *uncertified = true;
            if v > claimed {
                mismatches.push(format!("{name}: claimed {claimed}, but certified >= {v}"));
            }
        }
    }
}

fn verify_against(claim: &Claim, derived: &Derived) -> (Vec<String>, bool) {
    let mut ms = Vec::new();
    let mut uncertified = false;
    match derived {
        Derived::Aqec(p) => {
            check_num(&mut ms, "n", claim.n, p.n);
            check_num(&mut ms, "k", claim.k, p.k);
            check_num(&mut ms, "q", claim.q, p.q);
            if let Some(r) = claim.r {
                check_num(&mut ms, "r", r, 0);
            }
            match claim.distance {
                ClaimDistance::Single(d) => check_dist(&mut ms, &mut uncertified, "d", d, p.d_x),
                ClaimDistance::Ratio { d_z, d_x } => {
                    check_dist(&mut ms, &mut uncertified, "d_z", d_z, p.d_z);
                    check_dist(&mut ms, &mut uncertified, "d_x", d_x, p.d_x);
                }
            }
        }
        Derived::Subsystem(p) => {
            check_num(&mut ms, "n", claim.n, p.n);
            check_num(&mut ms, "k", claim.k, p.k);
            check_num(&mut ms, "q", claim.q, p.q);
            check_num(&mut ms, "r", claim.r.unwrap_or(0), p.r);
            match (claim.distance, p.distance) {
                (ClaimDistance::Single(d), dist) => {
                    check_dist(&mut ms, &mut uncertified, "d", d, dist.d_x())
                }
                (ClaimDistance::Ratio { d_z, d_x }, dist) => {
                    check_dist(&mut ms, &mut uncertified, "d_z", d_z, dist.d_z());
                    check_dist(&mut ms, &mut uncertified, "d_x", d_x, dist.d_x());
                }
            }
        }
    }
    (ms, uncertified)
}

fn run_verify(
    claim_str: &str,
    c1: Option<&str>,
    c2: Option<&str>,
    parent: Option<&str>,
    cap: u64,
    format: Format,
) -> CmdResult {
    let claim = match parse_claim(claim_str) {
        Ok(c) => c,
        Err(ParseError(msg)) => return CmdResult::fail(format, msg, 2),
    };
    let build = || -> Result<Derived, (String, i32)> {
        let resolve = |s: &str| -> Result<_, (String, i32)> {
            let spec = parse_parent(s).map_err(|e| (e.to_string(), 2))?;
            let field = spec.field().map_err(|e| (e, 2))?;
            let code = spec.resolve(&field).map_err(|e| (e, 2))?;
            Ok(code)
        };
        match (c1, c2, parent) {
            (Some(a), Some(b), None) => {
                let ca = resolve(a)?;
                let cb = resolve(b)?;
                if claim.r.is_some() {
                    // Asymmetric subsystem claim; the self-intersecting code
                    // may be either parent.
                    match asymmetric_subsystem(ca.linear(), cb.linear(), cap) {
                        Ok((primary, _)) => Ok(Derived::Subsystem(primary)),
                        Err(QuantumError::IntersectionMismatch) => {
                            asymmetric_subsystem(cb.linear(), ca.linear(), cap)
                                .map(|(primary, _)| Derived::Subsystem(primary))
                                .map_err(|e| (e.to_string(), quantum_exit_code(&e)))
                        }
                        Err(e) => Err((e.to_string(), quantum_exit_code(&e))),
                    }
                } else {
                    match claim.distance {
                        ClaimDistance::Single(_) => css_qec(ca.linear(), cb.linear(), cap)
                            .map(Derived::Subsystem)
                            .map_err(|e| (e.to_string(), quantum_exit_code(&e))),
                        ClaimDistance::Ratio { .. } => aqec_core::quantum::css_aqec_bounded(
                            ca.linear(),
                            cb.linear(),
                            ca.distance_floor(),
                            cb.distance_floor(),
                            cap,
                        )
                        .map(Derived::Aqec)
                        .map_err(|e| (e.to_string(), quantum_exit_code(&e))),
                    }
                }
            }
            (None, None, Some(p)) => {
                let c = resolve(p)?;
                euclidean_subsystem_cyclic(&c, cap)
                    .map(|(primary, _)| Derived::Subsystem(primary))
                    .map_err(|e| (e.to_string(), quantum_exit_code(&e)))
            }
            _ => Err((
                String::from("verify needs either --c1 and --c2, or --parent"),
                2,
            )),
        }
    };
    match build() {
        Ok(derived) => {
            let (mismatches, uncertified) = verify_against(&claim, &derived);
            let computed = match &derived {
                Derived::Aqec(p) => p.describe(),
                Derived::Subsystem(p) => p.describe(),
            };
            let (result, exit) = if !mismatches.is_empty() {
                ("fail", 1)
            } else if uncertified {
                ("uncertified", 3)
            } else {
                ("pass", 0)
            };
            let rep = VerifyReport {
                schema: SCHEMA.to_string(),
                claim: claim.to_string(),
                computed: Some(computed),
                result: result.to_string(),
                mismatches,
                record: Some(derived.report()),
            };
            let stdout = match format {
                Format::Json => render_json(&rep),
                Format::Text => rep.to_text(),
            };
            CmdResult::with_exit(stdout, exit)
        }
        Err((msg, code)) => {
            // Construction failures with resolvable parents are verification
            // fails (the claim cannot be realized as stated), not bad input.
            if code == 2 && (c1.is_some() || parent.is_some()) {
                let rep = VerifyReport {
                    schema: SCHEMA.to_string(),
                    claim: claim.to_string(),
                    computed: None,
                    result: "fail".to_string(),
                    mismatches: vec![msg],
                    record: None,
                };
                let stdout = match format {
                    Format::Json => render_json(&rep),
                    Format::Text => rep.to_text(),
                };
                CmdResult::with_exit(stdout, 1)
            } else {
                CmdResult::fail(format, msg, code)
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
struct SweepReport {
    schema: String,
    target: String,
    rows: Vec<DerivedCodeReport>,
}

/// Designed distances at which the coset union actually grows; sweeping
/// others would repeat the same codes.
fn canonical_deltas(n: u64, q: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut prev_len = 0usize;
    for delta in 2..=n {
        let Ok(t) = DefiningSet::closure(n, q, 1..delta) else {
            return out;
        };
        if t.len() > prev_len {
            out.push(delta);
            prev_len = t.len();
        }
        if t.len() as u64 >= n {
            break;
        }
    }
    out
}

fn run_sweep(family: &SweepFamily, cap: u64) -> Result<SweepReport, (String, i32)> {
    let mut rows = Vec::new();
    let target;
    match *family {
        SweepFamily::AqecBch { n, q } => {
            target = format!("sweep aqec-bch n={n} q={q}");
            let f = field_of_order(q).map_err(|e| (e.to_string(), 2))?;
            let deltas = canonical_deltas(n, q);
            for (i, &d1) in deltas.iter().enumerate() {
                for &d2 in &deltas[i + 1..] {
                    match aqec_bch_family(&f, n, d1, d2, cap) {
                        Ok(rec) => {
                            if rec.k > 0 {
                                rows.push(DerivedCodeReport::from_aqec(&rec));
                            }
                        }
                        Err(QuantumError::NotNested { .. })
                        | Err(QuantumError::NonpositiveK { .. })
                        | Err(QuantumError::CosetCollision { .. }) => continue,
                        Err(e) => return Err((e.to_string(), quantum_exit_code(&e))),
                    }
                }
            }
        }
        SweepFamily::AqecRs { q } => {
            target = format!("sweep aqec-rs q={q}");
            let f = field_of_order(q).map_err(|e| (e.to_string(), 2))?;
            let n = q - 1;
            for d1 in 2..n {
                for d2 in d1 + 1..n.saturating_sub(d1) {
                    match aqec_rs(&f, d1, d2, cap) {
                        Ok(rec) => rows.push(DerivedCodeReport::from_aqec(&rec)),
                        Err(QuantumError::RangeViolation(_)) => continue,
                        Err(e) => return Err((e.to_string(), quantum_exit_code(&e))),
                    }
                }
            }
        }
        SweepFamily::SscEuclid { n, q } => {
            target = format!("sweep ssc-euclid n={n} q={q}");
            let f = field_of_order(q).map_err(|e| (e.to_string(), 2))?;
            for delta in canonical_deltas(n, q) {
                let parent = bch_code(&f, n, delta).map_err(|e| (e.to_string(), 2))?;
                match euclidean_subsystem_cyclic(&parent, cap) {
                    Ok((primary, _)) => rows.push(DerivedCodeReport::from_subsystem(&primary)),
                    Err(QuantumError::DimensionViolation { .. }) => continue,
                    Err(e) => return Err((e.to_string(), quantum_exit_code(&e))),
                }
            }
        }
    }
    Ok(SweepReport {
        schema: SCHEMA.to_string(),
        target,
        rows,
    })
}

/// Executes a parsed command line and returns the streams and exit code.
pub fn run(cli: Cli) -> CmdResult {
    let format = cli.format;
    let cap = cli.cap;
    match cli.command {
        Command::Construct { construction } => match run_construction(&construction, cap) {
            Ok(derived) => emit_report(derived.report(), format),
            Err((msg, code)) => CmdResult::fail(format, msg, code),
        },
        Command::Verify {
            claim,
            c1,
            c2,
            parent,
        } => run_verify(
            &claim,
            c1.as_deref(),
            c2.as_deref(),
            parent.as_deref(),
            cap,
            format,
        ),
        Command::Sweep { family } => match run_sweep(&family, cap) {
            Ok(report) => {
                let exit = if report
                    .rows
                    .iter()
                    .any(|r| r.warnings.iter().any(|w| w.contains(CAP_WARNING)))
                {
                    3
                } else {
                    0
                };
                let stdout = match format {
                    Format::Json => render_json(&report),
                    Format::Text => {
                        let mut out = format!("{}\n", report.target);
                        for row in &report.rows {
                            out.push_str(&format!(
                                "{:<20} certified={} singleton={} mds={}\n",
                                row.parameters, row.certified, row.bounds.singleton, row.bounds.mds
                            ));
                        }
                        out
                    }
                };
                CmdResult::with_exit(stdout, exit)
            }
            Err((msg, code)) => CmdResult::fail(format, msg, code),
        },
        Command::Reproduce { target } => match target {
            ReproduceTarget::Table1 | ReproduceTarget::Table2 => {
                let report = if target == ReproduceTarget::Table1 {
                    reproduce_table1(cap)
                } else {
                    reproduce_table2(cap)
                };
                let exit = if report.any_mismatch() { 1 } else { 0 };
                let stdout = match format {
                    Format::Json => render_json(&report),
                    Format::Text => report.to_text(),
                };
                CmdResult::with_exit(stdout, exit)
            }
            ReproduceTarget::Example => match reproduce_example(cap) {
                Ok(report) => {
                    let stdout = match format {
                        Format::Json => render_json(&report),
                        Format::Text => report.to_text(),
                    };
                    CmdResult::ok(stdout)
                }
                Err(msg) => CmdResult::fail(format, msg, 2),
            },
        },
    }
}
