//! Derivation of asymmetric quantum (AQEC), symmetric quantum (QEC),
//! subsystem (SSC), and asymmetric subsystem (ASSC) code parameters from
//! nested classical codes, with certified distances wherever enumeration is
//! feasible and explicit lower bounds everywhere else.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::cyclic::{
    bch_code, coset_degree_term, cyclic_from_defining_set, delta_max, delta_max_star, rs_code,
    CyclicCode, CyclicError, DefiningSet,
};
use crate::gf::{ord_n_q, FiniteField, GfError};
use crate::linear::{LinearCode, LinearError, MinWeight};

use num_bigint::BigUint;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuantumError {
    NotNested {
        inclusion: &'static str,
        witness: Vec<u32>,
    },
    NonpositiveK {
        k1: u64,
        k2: u64,
        n: u64,
    },
    DimensionViolation {
        k_prime: u64,
        k_double_prime: u64,
        n: u64,
    },
    IntersectionMismatch,
    KTooSmall,
    NotPure,
    CosetCollision {
        delta1: u64,
        delta2: u64,
    },
    RangeViolation(String),
    NotSelfOrthogonal,
    TNotInWindow {
        element: u64,
    },
    Linear(LinearError),
    Cyclic(CyclicError),
    Gf(GfError),
}

impl fmt::Display for QuantumError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuantumError::NotNested { inclusion, witness } => {
                write!(f, "nesting {inclusion} fails; witness row {witness:?}")
            }
            QuantumError::NonpositiveK { k1, k2, n } => {
                write!(
                    f,
                    "k1 + k2 - n = {} is not positive enough",
                    *k1 as i128 + *k2 as i128 - *n as i128
                )
            }
            QuantumError::DimensionViolation {
                k_prime,
                k_double_prime,
                n,
            } => {
                write!(
                    f,
                    "k' + k'' = {} must stay below n = {n}",
                    k_prime + k_double_prime
                )
            }
            QuantumError::IntersectionMismatch => {
                write!(f, "C1 and C1-dual do not intersect in the required code")
            }
            QuantumError::KTooSmall => write!(f, "trading requires k > 1"),
            QuantumError::NotPure => write!(f, "gauge merging requires a certified pure code"),
            QuantumError::CosetCollision { delta1, delta2 } => {
                write!(
                    f,
                    "designed distances {delta1} and {delta2} give the same coset union"
                )
            }
            QuantumError::RangeViolation(msg) => write!(f, "{msg}"),
            QuantumError::NotSelfOrthogonal => write!(f, "code is not self-orthogonal"),
            QuantumError::TNotInWindow { element } => {
                write!(f, "gauge set element {element} outside T(C2) \\ T(C2-dual)")
            }
            QuantumError::Linear(e) => write!(f, "{e}"),
            QuantumError::Cyclic(e) => write!(f, "{e}"),
            QuantumError::Gf(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for QuantumError {}

impl From<LinearError> for QuantumError {
    fn from(e: LinearError) -> Self {
        QuantumError::Linear(e)
    }
}
impl From<CyclicError> for QuantumError {
    fn from(e: CyclicError) -> Self {
        QuantumError::Cyclic(e)
    }
}
impl From<GfError> for QuantumError {
    fn from(e: GfError) -> Self {
        QuantumError::Gf(e)
    }
}

/// A distance value with its certification status. Reports never print an
/// exact distance that was not enumerated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Distance {
    Exact(u64),
    AtLeast(u64),
}

impl Distance {
    pub fn value(&self) -> u64 {
        match self {
            Distance::Exact(v) | Distance::AtLeast(v) => *v,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Distance::Exact(_))
    }

    /// Minimum of two distances with sound certification: an exact value
    /// below the other side's floor stays exact.
    pub fn min_of(a: Distance, b: Distance) -> Distance {
        match (a, b) {
            (Distance::Exact(x), Distance::Exact(y)) => Distance::Exact(x.min(y)),
            (Distance::Exact(x), Distance::AtLeast(y))
            | (Distance::AtLeast(y), Distance::Exact(x)) => {
                if y >= x {
                    Distance::Exact(x)
                } else {
                    Distance::AtLeast(y)
                }
            }
            (Distance::AtLeast(x), Distance::AtLeast(y)) => Distance::AtLeast(x.min(y)),
        }
    }

    /// Maximum of two distances; a bound on either side keeps it a bound.
    pub fn max_of(a: Distance, b: Distance) -> Distance {
        match (a, b) {
            (Distance::Exact(x), Distance::Exact(y)) => Distance::Exact(x.max(y)),
            (Distance::Exact(x), Distance::AtLeast(y))
            | (Distance::AtLeast(y), Distance::Exact(x)) => Distance::AtLeast(x.max(y)),
            (Distance::AtLeast(x), Distance::AtLeast(y)) => Distance::AtLeast(x.max(y)),
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Exact(v) => write!(f, "{v}"),
            Distance::AtLeast(v) => write!(f, ">={v}"),
        }
    }
}

/// Whole-record certification status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certified {
    Exact,
    LowerBound,
}

impl fmt::Display for Certified {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certified::Exact => write!(f, "exact"),
            Certified::LowerBound => write!(f, "lower-bound"),
        }
    }
}

/// Which classical codes and which construction rule produced a record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub c1: String,
    pub c2: String,
    pub rule: String,
}

/// Asymmetric quantum code parameters [[n, k, d_z/d_x]]_q with d_z >= d_x.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AqecParams {
    pub n: u64,
    pub k: u64,
    pub q: u64,
    pub d_z: Distance,
    pub d_x: Distance,
    pub pure_x: Option<bool>,
    pub pure_z: Option<bool>,
    pub provenance: Provenance,
    pub warnings: Vec<String>,
}

impl AqecParams {
    pub fn certified(&self) -> Certified {
        if self.d_x.is_exact() && self.d_z.is_exact() {
            Certified::Exact
        } else {
            Certified::LowerBound
        }
    }

    pub fn describe(&self) -> String {
        format!(
            "[[{},{},{}/{}]]_{}",
            self.n, self.k, self.d_z, self.d_x, self.q
        )
    }

    /// Every [[n,k,d_z/d_x]]_q is an [[n,k,0,d_z/d_x]]_q subsystem code.
    pub fn to_subsystem(&self) -> SubsystemParams {
        SubsystemParams {
            n: self.n,
            k: self.k,
            r: 0,
            q: self.q,
            distance: SubsystemDistance::Asymmetric {
                d_z: self.d_z,
                d_x: self.d_x,
            },
            pure: match (self.pure_x, self.pure_z) {
                (Some(a), Some(b)) => Some(a && b),
                _ => None,
            },
            provenance: self.provenance.clone(),
            warnings: self.warnings.clone(),
        }
    }
}

/// Subsystem distance: a single d for symmetric codes, d_z/d_x for ASSC.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubsystemDistance {
    Symmetric(Distance),
    Asymmetric { d_z: Distance, d_x: Distance },
}

impl SubsystemDistance {
    pub fn d_x(&self) -> Distance {
        match self {
            SubsystemDistance::Symmetric(d) => *d,
            SubsystemDistance::Asymmetric { d_x, .. } => *d_x,
        }
    }

    pub fn d_z(&self) -> Distance {
        match self {
            SubsystemDistance::Symmetric(d) => *d,
            SubsystemDistance::Asymmetric { d_z, .. } => *d_z,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.d_x().is_exact() && self.d_z().is_exact()
    }
}

/// Subsystem code parameters [[n, k, r, d]]_q or [[n, k, r, d_z/d_x]]_q:
/// q^k-dimensional info subsystem, q^r-dimensional gauge subsystem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsystemParams {
    pub n: u64,
    pub k: u64,
    pub r: u64,
    pub q: u64,
    pub distance: SubsystemDistance,
    pub pure: Option<bool>,
    pub provenance: Provenance,
    pub warnings: Vec<String>,
}

impl SubsystemParams {
    pub fn certified(&self) -> Certified {
        if self.distance.is_exact() {
            Certified::Exact
        } else {
            Certified::LowerBound
        }
    }

    pub fn describe(&self) -> String {
        let dist = match self.distance {
            SubsystemDistance::Symmetric(d) => format!("{d}"),
            SubsystemDistance::Asymmetric { d_z, d_x } => format!("{d_z}/{d_x}"),
        };
        if self.r == 0 {
            format!("[[{},{},{}]]_{}", self.n, self.k, dist, self.q)
        } else {
            format!("[[{},{},{},{}]]_{}", self.n, self.k, self.r, dist, self.q)
        }
    }
}

/// Outcome of one weight computation with fallback bookkeeping.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Weight {
    Exact(u64),
    Floor(u64),
    Infinite,
}

impl Weight {
    fn to_distance(self) -> Distance {
        match self {
            Weight::Exact(w) => Distance::Exact(w),
            Weight::Floor(w) => Distance::AtLeast(w.max(1)),
            Weight::Infinite => unreachable!("infinite weight has no distance"),
        }
    }
}

/// Marker prefix used in record warnings when a distance fell back to its
/// designed lower bound because enumeration exceeded the cap.
pub const CAP_WARNING: &str = "enumeration cap exceeded";

fn weight_or_floor(
    report: Result<crate::linear::WeightReport, LinearError>,
    floor: u64,
    label: &str,
    warnings: &mut Vec<String>,
) -> Result<Weight, QuantumError> {
    match report {
        Ok(rep) => Ok(match rep.min_weight {
            MinWeight::Finite(w) => Weight::Exact(w),
            MinWeight::Infinite => Weight::Infinite,
        }),
        Err(LinearError::TooLargeToEnumerate { .. }) => {
            warnings.push(format!(
                "{CAP_WARNING} for {label}; reporting the lower bound {}",
                floor.max(1)
            ));
            Ok(Weight::Floor(floor))
        }
        Err(e) => Err(e.into()),
    }
}

fn purity(abs: Weight, rel: Weight) -> Option<bool> {
    match (abs, rel) {
        (Weight::Exact(a), Weight::Exact(r)) => Some(a == r),
        _ => None,
    }
}

/// CSS construction of an asymmetric quantum code from a nested pair:
/// requires dual(C2) within C1 (equivalently dual(C1) within C2) and yields
/// [[n, k1 + k2 - n, d_z/d_x]]_q with d_x, d_z the two relative weights
/// wt(C1 \ C2-dual), wt(C2 \ C1-dual) in sorted order.
pub fn css_aqec(c1: &LinearCode, c2: &LinearCode, cap: u64) -> Result<AqecParams, QuantumError> {
    css_aqec_bounded(c1, c2, 1, 1, cap)
}

/// As [`css_aqec`], with caller-supplied distance floors (designed distances
/// or BCH bounds) used when enumeration exceeds the cap.
pub fn css_aqec_bounded(
    c1: &LinearCode,
    c2: &LinearCode,
    floor1: u64,
    floor2: u64,
    cap: u64,
) -> Result<AqecParams, QuantumError> {
    let n = c1.n() as u64;
    let d2perp = c2.dual();
    let d1perp = c1.dual();
    if !c1.contains(&d2perp)? {
        let witness = c1.missing_row(&d2perp).unwrap_or_default();
        return Err(QuantumError::NotNested {
            inclusion: "dual(C2) in C1",
            witness,
        });
    }
    if !c2.contains(&d1perp)? {
        let witness = c2.missing_row(&d1perp).unwrap_or_default();
        return Err(QuantumError::NotNested {
            inclusion: "dual(C1) in C2",
            witness,
        });
    }
    let (k1, k2) = (c1.k() as u64, c2.k() as u64);
    if k1 + k2 < n {
        return Err(QuantumError::NonpositiveK { k1, k2, n });
    }
    let k = k1 + k2 - n;
    let mut warnings = Vec::new();

    let (side1, side2, p1, p2);
    if k == 0 {
        // C1 = dual(C2): both relative differences are empty. The record
        // carries the classical minimum weights, flagged zero-dimensional.
        warnings.push(String::from(
            "zero-dimensional code: distances are the classical minimum weights",
        ));
        side1 = weight_or_floor(c1.min_weight(cap), floor1, "wt(C1)", &mut warnings)?;
        side2 = weight_or_floor(c2.min_weight(cap), floor2, "wt(C2)", &mut warnings)?;
        p1 = None;
        p2 = None;
    } else {
        let rel1 = weight_or_floor(
            c1.relative_min_weight(&d2perp, cap),
            floor1,
            "wt(C1 \\ dual(C2))",
            &mut warnings,
        )?;
        let rel2 = weight_or_floor(
            c2.relative_min_weight(&d1perp, cap),
            floor2,
            "wt(C2 \\ dual(C1))",
            &mut warnings,
        )?;
        debug_assert!(
            !matches!(rel1, Weight::Infinite) && !matches!(rel2, Weight::Infinite),
            "k > 0 rules out empty differences"
        );
        let abs1 = weight_or_floor(c1.min_weight(cap), 1, "wt(C1)", &mut warnings)?;
        let abs2 = weight_or_floor(c2.min_weight(cap), 1, "wt(C2)", &mut warnings)?;
        side1 = rel1;
        side2 = rel2;
        p1 = Some(purity(abs1, rel1));
        p2 = Some(purity(abs2, rel2));
    }

    let w1 = side1.to_distance();
    let w2 = side2.to_distance();
    let d_x = Distance::min_of(w1, w2);
    let d_z = Distance::max_of(w1, w2);
    // Orient so the x side is the one achieving the smaller value; this
    // normalizes css_aqec(C1, C2) and css_aqec(C2, C1) to the same record.
    let c1_is_x = w1.value() <= w2.value();
    let (x_desc, z_desc, pure_x, pure_z) = if c1_is_x {
        (c1.describe(), c2.describe(), p1.flatten(), p2.flatten())
    } else {
        (c2.describe(), c1.describe(), p2.flatten(), p1.flatten())
    };

    Ok(AqecParams {
        n,
        k,
        q: c1.q(),
        d_z,
        d_x,
        pure_x,
        pure_z,
        provenance: Provenance {
            c1: x_desc,
            c2: z_desc,
            rule: String::from("css_aqec"),
        },
        warnings,
    })
}

/// CSS symmetric quantum code [[n, k1 + k2 - n, d_x]]_q from the same nested
/// pair; the single distance is the smaller relative weight.
pub fn css_qec(
    c1: &LinearCode,
    c2: &LinearCode,
    cap: u64,
) -> Result<SubsystemParams, QuantumError> {
    let aqec = css_aqec(c1, c2, cap)?;
    let pure = match (aqec.pure_x, aqec.pure_z) {
        (Some(a), Some(b)) => Some(a && b),
        _ => None,
    };
    Ok(SubsystemParams {
        n: aqec.n,
        k: aqec.k,
        r: 0,
        q: aqec.q,
        distance: SubsystemDistance::Symmetric(aqec.d_x),
        pure,
        provenance: Provenance {
            rule: String::from("css_qec"),
            ..aqec.provenance
        },
        warnings: aqec.warnings,
    })
}

fn euclidean_subsystem_inner(
    c1: &LinearCode,
    floor: u64,
    cap: u64,
) -> Result<(SubsystemParams, SubsystemParams), QuantumError> {
    let n = c1.n() as u64;
    let c1perp = c1.dual();
    let c2 = c1.intersection(&c1perp)?;
    let k_prime = c1.k() as u64;
    let k_dprime = c2.k() as u64;
    if k_prime + k_dprime >= n {
        return Err(QuantumError::DimensionViolation {
            k_prime,
            k_double_prime: k_dprime,
            n,
        });
    }
    let c2perp = c2.dual();
    let mut warnings = Vec::new();
    let rel = weight_or_floor(
        c2perp.relative_min_weight(c1, cap),
        floor,
        "wt(dual(C2) \\ C1)",
        &mut warnings,
    )?;
    let abs = weight_or_floor(c2perp.min_weight(cap), 1, "wt(dual(C2))", &mut warnings)?;
    let d = rel.to_distance();
    let pure = purity(abs, rel);
    let provenance = Provenance {
        c1: c1.describe(),
        c2: c2.describe(),
        rule: String::from("euclidean_ssc"),
    };
    let k = n - (k_prime + k_dprime);
    let r = k_prime - k_dprime;
    let primary = SubsystemParams {
        n,
        k,
        r,
        q: c1.q(),
        distance: SubsystemDistance::Symmetric(d),
        pure,
        provenance: provenance.clone(),
        warnings: warnings.clone(),
    };
    let swapped = SubsystemParams {
        k: r,
        r: k,
        ..primary.clone()
    };
    Ok((primary, swapped))
}

/// Euclidean subsystem construction: from C1 with C2 = C1 intersect
/// C1-dual of dimensions k', k'', yields the subsystem code pair
/// [[n, n-(k'+k''), k'-k'', d]] and [[n, k'-k'', n-(k'+k''), d]] with
/// d = wt(dual(C2) \ C1).
pub fn euclidean_subsystem(
    c1: &LinearCode,
    cap: u64,
) -> Result<(SubsystemParams, SubsystemParams), QuantumError> {
    euclidean_subsystem_inner(c1, 1, cap)
}

/// As [`euclidean_subsystem`] for a cyclic parent, using its defining-set
/// structure for the distance floor when enumeration is capped.
pub fn euclidean_subsystem_cyclic(
    c1: &CyclicCode,
    cap: u64,
) -> Result<(SubsystemParams, SubsystemParams), QuantumError> {
    // dual(C2) for C2 = C1 n C1-dual is cyclic with defining set
    // T(C1) n T(C1-dual) complement arithmetic; its BCH bound floors d.
    let t1 = c1.defining_set();
    let t2 = t1.union(&t1.dual())?;
    let floor = t2.dual().bch_bound();
    let (mut primary, mut swapped) = euclidean_subsystem_inner(c1.linear(), floor, cap)?;
    let desc = c1.describe();
    primary.provenance.c1 = desc.clone();
    swapped.provenance.c1 = desc;
    Ok((primary, swapped))
}

/// Asymmetric subsystem construction: requires dual(C2) = C1 intersect
/// C1-dual inside C2 and yields the pair [[n, k2-k1, k1+k2-n, d_z/d_x]] and
/// [[n, k1+k2-n, k2-k1, d_z/d_x]]. Info and gauge dimensions are read off
/// the explicit code dimensions.
pub fn asymmetric_subsystem(
    c1: &LinearCode,
    c2: &LinearCode,
    cap: u64,
) -> Result<(SubsystemParams, SubsystemParams), QuantumError> {
    let n = c1.n() as u64;
    let c1perp = c1.dual();
    let c2perp = c2.dual();
    let inter = c1.intersection(&c1perp)?;
    if inter != c2perp {
        return Err(QuantumError::IntersectionMismatch);
    }
    if !c2.contains(&c2perp)? {
        let witness = c2.missing_row(&c2perp).unwrap_or_default();
        return Err(QuantumError::NotNested {
            inclusion: "dual(C2) in C2",
            witness,
        });
    }
    let (k1, k2) = (c1.k() as u64, c2.k() as u64);
    if k2 <= k1 {
        return Err(QuantumError::NonpositiveK { k1, k2, n });
    }
    let k = k2 - k1;
    let r = k1 + k2 - n;

    let mut warnings = Vec::new();
    let rel1 = weight_or_floor(
        c1.relative_min_weight(&c2perp, cap),
        1,
        "wt(C1 \\ dual(C2))",
        &mut warnings,
    )?;
    let rel2 = weight_or_floor(
        c2.relative_min_weight(&c1perp, cap),
        1,
        "wt(C2 \\ dual(C1))",
        &mut warnings,
    )?;
    let abs1 = weight_or_floor(c1.min_weight(cap), 1, "wt(C1)", &mut warnings)?;
    let abs2 = weight_or_floor(c2.min_weight(cap), 1, "wt(C2)", &mut warnings)?;
    let w1 = rel1.to_distance();
    let w2 = rel2.to_distance();
    let d_x = Distance::min_of(w1, w2);
    let d_z = Distance::max_of(w1, w2);
    let pure = match (purity(abs1, rel1), purity(abs2, rel2)) {
        (Some(a), Some(b)) => Some(a && b),
        _ => None,
    };
    let provenance = Provenance {
        c1: c1.describe(),
        c2: c2.describe(),
        rule: String::from("asymmetric_ssc"),
    };
    let primary = SubsystemParams {
        n,
        k,
        r,
        q: c1.q(),
        distance: SubsystemDistance::Asymmetric { d_z, d_x },
        pure,
        provenance: provenance.clone(),
        warnings: warnings.clone(),
    };
    let swapped = SubsystemParams {
        k: r,
        r: k,
        ..primary.clone()
    };
    Ok((primary, swapped))
}

/// Direction of a dimension trade between the info and gauge subsystems.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TradeDirection {
    /// `[[n,k,r,d]]` -> `[[n,k-1,r+1,>=d]]` for k > 1.
    InfoToGauge,
    /// Pure `[[n,k,r,d]]` -> pure `[[n,k+r,0,d]]` stabilizer code.
    MergeToStabilizer,
}

/// Trades info and gauge dimensions. The split direction downgrades the
/// distance to a lower bound; the merge direction requires a certified pure
/// input and yields a stabilizer code.
pub fn trade_dimension(
    p: &SubsystemParams,
    direction: TradeDirection,
) -> Result<SubsystemParams, QuantumError> {
    match direction {
        TradeDirection::InfoToGauge => {
            if p.k <= 1 {
                return Err(QuantumError::KTooSmall);
            }
            let downgrade = |d: Distance| Distance::AtLeast(d.value());
            let distance = match p.distance {
                SubsystemDistance::Symmetric(d) => SubsystemDistance::Symmetric(downgrade(d)),
                SubsystemDistance::Asymmetric { d_z, d_x } => SubsystemDistance::Asymmetric {
                    d_z: downgrade(d_z),
                    d_x: downgrade(d_x),
                },
            };
            Ok(SubsystemParams {
                k: p.k - 1,
                r: p.r + 1,
                distance,
                provenance: Provenance {
                    rule: String::from("trade_dimension"),
                    ..p.provenance.clone()
                },
                ..p.clone()
            })
        }
        TradeDirection::MergeToStabilizer => {
            if p.pure != Some(true) {
                return Err(QuantumError::NotPure);
            }
            Ok(SubsystemParams {
                k: p.k + p.r,
                r: 0,
                distance: SubsystemDistance::Symmetric(p.distance.d_x()),
                pure: Some(true),
                provenance: Provenance {
                    rule: String::from("trade_dimension"),
                    ..p.provenance.clone()
                },
                ..p.clone()
            })
        }
    }
}

/// AQEC from two nested narrow-sense BCH codes of designed distances
/// delta1 < delta2: [[n, k1 + k2 - n, >= delta2/delta1]]_q, with distances
/// certified by enumeration when feasible. The closed-form dimension is
/// cross-checked whenever its designed-distance range holds.
pub fn aqec_bch_family(
    field: &Arc<FiniteField>,
    n: u64,
    delta1: u64,
    delta2: u64,
    cap: u64,
) -> Result<AqecParams, QuantumError> {
    let q = field.order();
    if delta1 >= delta2 {
        return Err(QuantumError::RangeViolation(format!(
            "needs 2 <= delta1 < delta2, got {delta1} and {delta2}"
        )));
    }
    let t1 = DefiningSet::closure(n, q, 1..delta1)?;
    let t2 = DefiningSet::closure(n, q, 1..delta2)?;
    if t1 == t2 {
        return Err(QuantumError::CosetCollision { delta1, delta2 });
    }
    let c1 = bch_code(field, n, delta1)?;
    let c2 = bch_code(field, n, delta2)?;
    let mut rec = css_aqec_bounded(
        c1.linear(),
        c2.linear(),
        c1.distance_floor(),
        c2.distance_floor(),
        cap,
    )?;

    let m = ord_n_q(n, q)?;
    let in_range = BigUint::from(n) > BigUint::from(q).pow(m / 2)
        && delta2 <= delta_max(n, q, m)
        && delta1 >= 2;
    if in_range {
        let formula = n
            - u64::from(m) * coset_degree_term(delta1, q)
            - u64::from(m) * coset_degree_term(delta2, q);
        debug_assert_eq!(rec.k, formula, "closed-form dimension must match");
    } else {
        rec.warnings.push(String::from(
            "designed distances outside the closed-form dimension range; true dimensions used",
        ));
    }
    rec.provenance = Provenance {
        c1: format!("{} bch delta={delta1}", c1.linear().describe()),
        c2: format!("{} bch delta={delta2}", c2.linear().describe()),
        rule: String::from("aqec_bch"),
    };
    Ok(rec)
}

/// AQEC from two Reed-Solomon codes with d1 < d2 < n - d1, n = q - 1:
/// [[n, n - d1 - d2 + 2, d2/d1]]_q, asymmetric MDS. The dimension follows
/// k1 + k2 - n = n - d1 - d2 + 2.
pub fn aqec_rs(
    field: &Arc<FiniteField>,
    d1: u64,
    d2: u64,
    cap: u64,
) -> Result<AqecParams, QuantumError> {
    let n = field.order() - 1;
    if !(2 <= d1 && d1 < d2 && d2 < n - d1) {
        return Err(QuantumError::RangeViolation(format!(
            "needs 2 <= d1 < d2 < n - d1 = {}, got d1={d1}, d2={d2}",
            n.saturating_sub(d1)
        )));
    }
    let c1 = rs_code(field, d1)?;
    let c2 = rs_code(field, d2)?;
    let mut rec = css_aqec_bounded(c1.linear(), c2.linear(), d1, d2, cap)?;
    debug_assert_eq!(rec.k, n - d1 - d2 + 2);
    rec.provenance = Provenance {
        c1: format!("{} rs d={d1}", c1.linear().describe()),
        c2: format!("{} rs d={d2}", c2.linear().describe()),
        rule: String::from("aqec_rs[k=n-d1-d2+2]"),
    };
    Ok(rec)
}

/// Subsystem BCH code parameters from the designed-distance formula:
/// [[n, n - 2m ceil((delta-1)(1-1/q)) - r, r, >= delta]]_q, valid for
/// 2 <= delta <= delta*_max (the Euclidean dual-containing range) and
/// 0 <= r < n - 2m ceil((delta-1)(1-1/q)).
pub fn subsystem_bch_designed(
    n: u64,
    q: u64,
    delta: u64,
    r: u64,
) -> Result<SubsystemParams, QuantumError> {
    let m = ord_n_q(n, q)?;
    let star = delta_max_star(n, q, m);
    if delta < 2 || !star.at_least(delta) {
        return Err(QuantumError::RangeViolation(format!(
            "designed distance {delta} outside the dual-containing range 2..={star}"
        )));
    }
    let stab_k = n as i128 - 2 * m as i128 * coset_degree_term(delta, q) as i128;
    if stab_k <= 0 || r as i128 >= stab_k {
        return Err(QuantumError::RangeViolation(format!(
            "gauge dimension {r} outside 0..{stab_k}"
        )));
    }
    Ok(SubsystemParams {
        n,
        k: stab_k as u64 - r,
        r,
        q,
        distance: SubsystemDistance::Symmetric(Distance::AtLeast(delta)),
        pure: None,
        provenance: Provenance {
            c1: format!("bch(n={n}, q={q}, delta={delta})"),
            c2: String::from("-"),
            rule: String::from("subsystem_bch_designed"),
        },
        warnings: Vec::new(),
    })
}

/// Hermitian-construction subsystem BCH parameters (formula level only):
/// [[n, n - 2m ceil((delta-1)(1-1/q^2)) - r, r, >= delta]]_q with
/// m = ord_n(q^2) and 2 <= delta <= floor(n (q^m - 1) / (q^{2m} - 1)).
pub fn subsystem_bch_hermitian_params(
    n: u64,
    q: u64,
    delta: u64,
    r: u64,
) -> Result<SubsystemParams, QuantumError> {
    let q2 = q * q;
    let m = ord_n_q(n, q2)?;
    let num = BigUint::from(n) * (BigUint::from(q).pow(m) - BigUint::from(1u32));
    let den = BigUint::from(q).pow(2 * m) - BigUint::from(1u32);
    let dmax = u64::try_from(num / den).unwrap_or(u64::MAX);
    if delta < 2 || delta > dmax {
        return Err(QuantumError::RangeViolation(format!(
            "designed distance {delta} outside 2..={dmax}"
        )));
    }
    let stab_k = n as i128 - 2 * m as i128 * coset_degree_term(delta, q2) as i128;
    if stab_k <= 0 || r as i128 >= stab_k {
        return Err(QuantumError::RangeViolation(format!(
            "gauge dimension {r} outside 0..{stab_k}"
        )));
    }
    Ok(SubsystemParams {
        n,
        k: stab_k as u64 - r,
        r,
        q,
        distance: SubsystemDistance::Symmetric(Distance::AtLeast(delta)),
        pure: None,
        provenance: Provenance {
            c1: format!("bch(n={n}, q={q}^2, delta={delta})"),
            c2: String::from("-"),
            rule: String::from("subsystem_bch_hermitian"),
        },
        warnings: Vec::new(),
    })
}

/// Cyclic subsystem construction from a self-orthogonal cyclic code C2 and
/// a coset-closed gauge set T within T(C2) \ T(C2-dual): builds C1 with
/// defining set T(C2) \ (T u T^{-1}), verifies C1 intersect C1-dual = C2,
/// and returns [[n, n - 2k - r, r, d]]_q with d = wt(dual(C2) \ C1).
pub fn cyclic_subsystem_from_t(
    c2: &CyclicCode,
    t: &DefiningSet,
    cap: u64,
) -> Result<SubsystemParams, QuantumError> {
    let n = c2.n();
    let k2 = c2.k();
    let c2perp = c2.dual()?;
    if !c2perp.linear().contains(c2.linear())? {
        return Err(QuantumError::NotSelfOrthogonal);
    }
    let window = c2.defining_set().minus(c2perp.defining_set())?;
    if let Some(outside) = t.iter().find(|&x| !window.contains(x)) {
        return Err(QuantumError::TNotInWindow { element: outside });
    }
    let tt = t.union(&t.negate())?;
    let r = tt.len() as u64;
    if n < 2 * k2 || r >= n - 2 * k2 {
        return Err(QuantumError::RangeViolation(format!(
            "gauge size |T u T^-1| = {r} outside 0..{}",
            n as i128 - 2 * k2 as i128
        )));
    }
    let t_c1 = c2.defining_set().minus(&tt)?;
    let c1 = cyclic_from_defining_set(c2.field(), &t_c1)?;
    debug_assert_eq!(c1.k(), k2 + r, "dim C1 = k + r per the construction");

    // The structural heart: C1 intersect C1-dual must equal C2.
    let inter = c1.linear().intersection(&c1.linear().dual())?;
    if inter != *c2.linear() {
        return Err(QuantumError::IntersectionMismatch);
    }

    let mut warnings = Vec::new();
    let floor = c2perp.distance_floor();
    let rel = weight_or_floor(
        c2perp.linear().relative_min_weight(c1.linear(), cap),
        floor,
        "wt(dual(C2) \\ C1)",
        &mut warnings,
    )?;
    let abs = weight_or_floor(
        c2perp.linear().min_weight(cap),
        1,
        "wt(dual(C2))",
        &mut warnings,
    )?;
    Ok(SubsystemParams {
        n,
        k: n - 2 * k2 - r,
        r,
        q: c2.q(),
        distance: SubsystemDistance::Symmetric(rel.to_distance()),
        pure: purity(abs, rel),
        provenance: Provenance {
            c1: c1.describe(),
            c2: c2.describe(),
            rule: String::from("cyclic_subsystem"),
        },
        warnings,
    })
}
