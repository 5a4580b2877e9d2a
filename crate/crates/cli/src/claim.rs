//! Parsing of parameter claims like `[[15,3,5/3]]_2` or `[[15,4,3,3]]_2`
//! and of parent-code specifications like `bch(15,2,3)` or `[31,26]_2`.

use std::fmt;
use std::sync::Arc;

use aqec_core::cyclic::{bch_code, rs_code, CyclicCode};
use aqec_core::gf::{field_of_order, FiniteField};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError(pub String);

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error: {}", self.0)
    }
}

impl std::error::Error for ParseError {}

/// Distance part of a claim: a single d, or d_z/d_x.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClaimDistance {
    Single(u64),
    Ratio { d_z: u64, d_x: u64 },
}

/// A claimed parameter tuple `[[n,k,d]]_q`, `[[n,k,dz/dx]]_q`,
/// `[[n,k,r,d]]_q`, or `[[n,k,r,dz/dx]]_q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Claim {
    pub n: u64,
    pub k: u64,
    pub r: Option<u64>,
    pub distance: ClaimDistance,
    pub q: u64,
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dist = match self.distance {
            ClaimDistance::Single(d) => d.to_string(),
            ClaimDistance::Ratio { d_z, d_x } => format!("{d_z}/{d_x}"),
        };
        match self.r {
            Some(r) => write!(f, "[[{},{},{},{}]]_{}", self.n, self.k, r, dist, self.q),
            None => write!(f, "[[{},{},{}]]_{}", self.n, self.k, dist, self.q),
        }
    }
}

pub fn parse_claim(s: &str) -> Result<Claim, ParseError> {
    let s = s.trim();
    let rest = s
        .strip_prefix("[[")
        .ok_or_else(|| ParseError(format!("claim must start with [[: {s}")))?;
    let (body, q_part) = rest
        .split_once("]]")
        .ok_or_else(|| ParseError(format!("claim must contain ]]: {s}")))?;
    let q_str = q_part
        .trim()
        .strip_prefix('_')
        .ok_or_else(|| ParseError(format!("claim must end with _q: {s}")))?;
    let q: u64 = q_str
        .trim()
        .parse()
        .map_err(|_| ParseError(format!("bad field size: {q_str}")))?;

    let parts: Vec<&str> = body.split(',').map(str::trim).collect();
    let parse_num = |t: &str| -> Result<u64, ParseError> {
        t.parse()
            .map_err(|_| ParseError(format!("bad number: {t}")))
    };
    let parse_dist = |t: &str| -> Result<ClaimDistance, ParseError> {
        match t.split_once('/') {
            Some((z, x)) => Ok(ClaimDistance::Ratio {
                d_z: parse_num(z.trim())?,
                d_x: parse_num(x.trim())?,
            }),
            None => Ok(ClaimDistance::Single(parse_num(t)?)),
        }
    };
    match parts.as_slice() {
        [n, k, d] => Ok(Claim {
            n: parse_num(n)?,
            k: parse_num(k)?,
            r: None,
            distance: parse_dist(d)?,
            q,
        }),
        [n, k, r, d] => Ok(Claim {
            n: parse_num(n)?,
            k: parse_num(k)?,
            r: Some(parse_num(r)?),
            distance: parse_dist(d)?,
            q,
        }),
        _ => Err(ParseError(format!(
            "claim needs 3 or 4 comma-separated fields: {s}"
        ))),
    }
}

/// How a parent classical code is specified on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParentSpec {
    /// bch(n,q,delta): narrow-sense BCH code.
    Bch { n: u64, q: u64, delta: u64 },
    /// dual-bch(n,q,delta): the Euclidean dual of a narrow-sense BCH code.
    DualBch { n: u64, q: u64, delta: u64 },
    /// rs(q,d): Reed-Solomon code of length q-1.
    Rs { q: u64, d: u64 },
    /// `[n,k]_q` or `[n,k,d]_q`: resolved to the narrow-sense BCH code of
    /// the smallest designed distance with that dimension.
    Params {
        n: u64,
        k: u64,
        d: Option<u64>,
        q: u64,
    },
}

pub fn parse_parent(s: &str) -> Result<ParentSpec, ParseError> {
    let s = s.trim();
    let args_of = |body: &str| -> Result<Vec<u64>, ParseError> {
        body.trim_end_matches(')')
            .split(',')
            .map(|t| {
                t.trim()
                    .parse()
                    .map_err(|_| ParseError(format!("bad number in: {s}")))
            })
            .collect()
    };
    if let Some(body) = s.strip_prefix("bch(") {
        let a = args_of(body)?;
        if a.len() != 3 {
            return Err(ParseError(format!("bch needs (n,q,delta): {s}")));
        }
        return Ok(ParentSpec::Bch {
            n: a[0],
            q: a[1],
            delta: a[2],
        });
    }
    if let Some(body) = s.strip_prefix("dual-bch(") {
        let a = args_of(body)?;
        if a.len() != 3 {
            return Err(ParseError(format!("dual-bch needs (n,q,delta): {s}")));
        }
        return Ok(ParentSpec::DualBch {
            n: a[0],
            q: a[1],
            delta: a[2],
        });
    }
    if let Some(body) = s.strip_prefix("rs(") {
        let a = args_of(body)?;
        if a.len() != 2 {
            return Err(ParseError(format!("rs needs (q,d): {s}")));
        }
        return Ok(ParentSpec::Rs { q: a[0], d: a[1] });
    }
    if let Some(rest) = s.strip_prefix('[') {
        let (body, q_part) = rest
            .split_once(']')
            .ok_or_else(|| ParseError(format!("missing ] in parent spec: {s}")))?;
        let q_str = q_part
            .trim()
            .strip_prefix('_')
            .ok_or_else(|| ParseError(format!("parent spec must end with _q: {s}")))?;
        let q: u64 = q_str
            .trim()
            .parse()
            .map_err(|_| ParseError(format!("bad field size: {q_str}")))?;
        let a = args_of(body)?;
        match a.as_slice() {
            [n, k] => {
                return Ok(ParentSpec::Params {
                    n: *n,
                    k: *k,
                    d: None,
                    q,
                })
            }
            [n, k, d] => {
                return Ok(ParentSpec::Params {
                    n: *n,
                    k: *k,
                    d: Some(*d),
                    q,
                })
            }
            _ => {
                return Err(ParseError(format!(
                    "parent spec needs [n,k]_q or [n,k,d]_q: {s}"
                )))
            }
        }
    }
    Err(ParseError(format!("unrecognized parent spec: {s}")))
}

/// Smallest designed distance whose narrow-sense BCH code has dimension k,
/// found by sweeping coset-union sizes; None when no such code exists.
pub fn bch_delta_for_dimension(n: u64, q: u64, k: u64) -> Option<u64> {
    use aqec_core::cyclic::DefiningSet;
    for delta in 2..=n {
        let t = DefiningSet::closure(n, q, 1..delta).ok()?;
        let dim = n - t.len() as u64;
        if dim == k {
            return Some(delta);
        }
        if dim < k {
            return None;
        }
    }
    None
}

impl ParentSpec {
    pub fn q(&self) -> u64 {
        match self {
            ParentSpec::Bch { q, .. }
            | ParentSpec::DualBch { q, .. }
            | ParentSpec::Rs { q, .. }
            | ParentSpec::Params { q, .. } => *q,
        }
    }

    /// Builds the classical code this spec denotes.
    pub fn resolve(&self, field: &Arc<FiniteField>) -> Result<CyclicCode, String> {
        match *self {
            ParentSpec::Bch { n, delta, .. } => {
                bch_code(field, n, delta).map_err(|e| e.to_string())
            }
            ParentSpec::DualBch { n, delta, .. } => bch_code(field, n, delta)
                .and_then(|c| c.dual())
                .map_err(|e| e.to_string()),
            ParentSpec::Rs { d, .. } => rs_code(field, d).map_err(|e| e.to_string()),
            ParentSpec::Params { n, k, q, .. } => {
                let delta = bch_delta_for_dimension(n, q, k).ok_or(format!(
                    "no narrow-sense BCH code of length {n} over GF({q}) has dimension {k}"
                ))?;
                bch_code(field, n, delta).map_err(|e| e.to_string())
            }
        }
    }

    pub fn field(&self) -> Result<Arc<FiniteField>, String> {
        field_of_order(self.q()).map_err(|e| e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_aqec_claims() {
        let c = parse_claim("[[15,3,5/3]]_2").unwrap();
        assert_eq!(
            c,
            Claim {
                n: 15,
                k: 3,
                r: None,
                distance: ClaimDistance::Ratio { d_z: 5, d_x: 3 },
                q: 2
            }
        );
        assert_eq!(c.to_string(), "[[15,3,5/3]]_2");
        let c = parse_claim("[[15,4,3,3]]_2").unwrap();
        assert_eq!(c.r, Some(3));
        assert_eq!(c.distance, ClaimDistance::Single(3));
        let c = parse_claim(" [[6, 3, 3/2]]_7 ").unwrap();
        assert_eq!(c.q, 7);
    }

    #[test]
    fn rejects_malformed_claims() {
        assert!(parse_claim("[15,3,5/3]_2").is_err());
        assert!(parse_claim("[[15,3]]_2").is_err());
        assert!(parse_claim("[[15,3,5/3]]").is_err());
        assert!(parse_claim("[[a,b,c]]_2").is_err());
    }

    #[test]
    fn parses_parent_specs() {
        assert_eq!(
            parse_parent("bch(15,2,3)").unwrap(),
            ParentSpec::Bch {
                n: 15,
                q: 2,
                delta: 3
            }
        );
        assert_eq!(
            parse_parent("[31,26]_2").unwrap(),
            ParentSpec::Params {
                n: 31,
                k: 26,
                d: None,
                q: 2
            }
        );
        assert_eq!(
            parse_parent("rs(7,3)").unwrap(),
            ParentSpec::Rs { q: 7, d: 3 }
        );
        assert_eq!(
            parse_parent("dual-bch(15,2,5)").unwrap(),
            ParentSpec::DualBch {
                n: 15,
                q: 2,
                delta: 5
            }
        );
        assert!(parse_parent("noise").is_err());
    }

    #[test]
    fn delta_search_by_dimension() {
        // Smallest delta realizing each dimension; consecutive roots that
        // fall into an existing coset leave the code unchanged, so these sit
        // below the advertised designed distances.
        assert_eq!(bch_delta_for_dimension(31, 2, 26), Some(2));
        assert_eq!(bch_delta_for_dimension(31, 2, 21), Some(4));
        assert_eq!(bch_delta_for_dimension(31, 2, 16), Some(6));
        assert_eq!(bch_delta_for_dimension(31, 2, 11), Some(8));
        assert_eq!(bch_delta_for_dimension(127, 2, 77), None);
        assert_eq!(bch_delta_for_dimension(15, 2, 7), Some(4));
    }
}
