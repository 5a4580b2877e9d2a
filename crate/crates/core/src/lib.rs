//! Construction and certification of asymmetric quantum and subsystem codes
//! from classical BCH, Reed-Solomon, and general cyclic codes over finite
//! fields.
//!
//! The crate is organized bottom-up:
//!
//! - [`gf`]: exact arithmetic in GF(p^s) and extension fields GF(q^m);
//! - [`poly`]: dense univariate polynomials, minimal polynomials;
//! - [`cyclic`]: cyclotomic cosets, defining sets, BCH/RS/cyclic codes;
//! - [`linear`]: generic `[n,k]_q` codes, duals, nesting, and the exhaustive
//!   weight enumeration that certifies every distance claim;
//! - [`quantum`]: CSS-style derivations of AQEC, QEC, SSC, and ASSC
//!   parameter records from nested classical codes;
//! - [`bounds`]: asymmetric Singleton and Hamming bound checks and MDS
//!   detection.
//!
//! Everything is exact integer arithmetic; no floating point appears in any
//! construction or certification path. The crate is `no_std` (with `alloc`).
//!
//! ```
//! use aqec_core::cyclic::bch_code;
//! use aqec_core::gf::field_of_order;
//! use aqec_core::quantum::css_aqec;
//! use aqec_core::DEFAULT_ENUMERATION_CAP;
//!
//! let field = field_of_order(2).unwrap();
//! let c1 = bch_code(&field, 15, 3).unwrap(); // [15,11,3]
//! let c2 = bch_code(&field, 15, 5).unwrap(); // [15,7,5]
//! let rec = css_aqec(c1.linear(), c2.linear(), DEFAULT_ENUMERATION_CAP).unwrap();
//! assert_eq!(rec.describe(), "[[15,3,5/3]]_2");
//! assert_eq!(rec.pure_x, Some(true));
//! ```

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bounds;
pub mod cyclic;
pub mod gf;
pub mod linear;
pub mod poly;
pub mod quantum;

pub use bounds::{BoundReport, BoundStatus};
pub use cyclic::{CyclicCode, DefiningSet, Rational};
pub use gf::{ExtensionField, FieldElement, FiniteField, GfError};
pub use linear::{
    EnumMethod, LinearCode, Matrix, MinWeight, WeightReport, DEFAULT_ENUMERATION_CAP,
};
pub use poly::Poly;
pub use quantum::{AqecParams, Certified, Distance, SubsystemDistance, SubsystemParams};
