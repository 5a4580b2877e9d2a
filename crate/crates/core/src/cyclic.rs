//! Cyclotomic coset algebra and construction of narrow-sense BCH, RS, and
//! arbitrary cyclic codes over GF(q), including dual defining sets and the
//! closed-form dimension and designed-distance-range formulas.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

use crate::gf::{gcd, ord_n_q, ExtensionField, FiniteField, GfError};
use crate::linear::{LinearCode, LinearError, Matrix};
use crate::poly::{from_roots, Poly, PolyError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CyclicError {
    NotCoprime {
        n: u64,
        q: u64,
    },
    DeltaOutOfRange {
        delta: u64,
        n: u64,
    },
    NotCosetClosed {
        element: u64,
        image: u64,
    },
    SetMismatch {
        left: (u64, u64),
        right: (u64, u64),
    },
    /// The closed-form preconditions do not hold; the code itself can
    /// still be built with `bch_code` and its true parameters read off.
    PreconditionViolated(String),
    Gf(GfError),
    Poly(PolyError),
    Linear(LinearError),
}

impl fmt::Display for CyclicError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CyclicError::NotCoprime { n, q } => write!(f, "gcd({n}, {q}) != 1"),
            CyclicError::DeltaOutOfRange { delta, n } => {
                write!(f, "designed distance {delta} outside 2..={n}")
            }
            CyclicError::NotCosetClosed { element, image } => {
                write!(f, "set contains {element} but not its coset image {image}")
            }
            CyclicError::SetMismatch { left, right } => {
                write!(
                    f,
                    "defining sets over (n,q)={left:?} and {right:?} are incompatible"
                )
            }
            CyclicError::PreconditionViolated(msg) => write!(f, "{msg}"),
            CyclicError::Gf(e) => write!(f, "{e}"),
            CyclicError::Poly(e) => write!(f, "{e}"),
            CyclicError::Linear(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for CyclicError {}

impl From<GfError> for CyclicError {
    fn from(e: GfError) -> Self {
        CyclicError::Gf(e)
    }
}
impl From<PolyError> for CyclicError {
    fn from(e: PolyError) -> Self {
        CyclicError::Poly(e)
    }
}
impl From<LinearError> for CyclicError {
    fn from(e: LinearError) -> Self {
        CyclicError::Linear(e)
    }
}

/// The cyclotomic coset S_x = { x q^i mod n : i >= 0 }.
pub fn cyclotomic_coset(x: u64, n: u64, q: u64) -> Result<BTreeSet<u64>, CyclicError> {
    if gcd(n, q) != 1 {
        return Err(CyclicError::NotCoprime { n, q });
    }
    let mut out = BTreeSet::new();
    let mut cur = x % n;
    while out.insert(cur) {
        cur = cur * (q % n) % n;
    }
    Ok(out)
}

/// A union of cyclotomic cosets mod n: the combinatorial identity of a
/// cyclic code. Element order is deterministic (sorted).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefiningSet {
    n: u64,
    q: u64,
    elements: BTreeSet<u64>,
}

impl DefiningSet {
    pub fn empty(n: u64, q: u64) -> Result<Self, CyclicError> {
        if gcd(n, q) != 1 {
            return Err(CyclicError::NotCoprime { n, q });
        }
        Ok(DefiningSet {
            n,
            q,
            elements: BTreeSet::new(),
        })
    }

    /// Builds from the given elements, requiring closure under
    /// multiplication by q mod n.
    pub fn from_elements(
        n: u64,
        q: u64,
        elements: impl IntoIterator<Item = u64>,
    ) -> Result<Self, CyclicError> {
        if gcd(n, q) != 1 {
            return Err(CyclicError::NotCoprime { n, q });
        }
        let elements: BTreeSet<u64> = elements.into_iter().map(|x| x % n).collect();
        for &x in &elements {
            let image = x * (q % n) % n;
            if !elements.contains(&image) {
                return Err(CyclicError::NotCosetClosed { element: x, image });
            }
        }
        Ok(DefiningSet { n, q, elements })
    }

    /// Union of the full cosets of the given seed elements.
    pub fn closure(
        n: u64,
        q: u64,
        seeds: impl IntoIterator<Item = u64>,
    ) -> Result<Self, CyclicError> {
        let mut elements = BTreeSet::new();
        for x in seeds {
            elements.extend(cyclotomic_coset(x, n, q)?);
        }
        Ok(DefiningSet { n, q, elements })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: u64) -> bool {
        self.elements.contains(&(x % self.n))
    }

    pub fn elements(&self) -> &BTreeSet<u64> {
        &self.elements
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.elements.iter().copied()
    }

    /// Minimum element of each coset, sorted.
    pub fn representatives(&self) -> Vec<u64> {
        let mut reps = Vec::new();
        let mut seen = BTreeSet::new();
        for &x in &self.elements {
            if seen.contains(&x) {
                continue;
            }
            let coset = cyclotomic_coset(x, self.n, self.q).expect("coprime by construction");
            seen.extend(coset.iter().copied());
            reps.push(*coset.first().expect("cosets are nonempty"));
        }
        reps
    }

    fn check_same(&self, other: &DefiningSet) -> Result<(), CyclicError> {
        if self.n != other.n || self.q != other.q {
            return Err(CyclicError::SetMismatch {
                left: (self.n, self.q),
                right: (other.n, other.q),
            });
        }
        Ok(())
    }

    pub fn union(&self, other: &DefiningSet) -> Result<DefiningSet, CyclicError> {
        self.check_same(other)?;
        let elements = self.elements.union(&other.elements).copied().collect();
        Ok(DefiningSet {
            n: self.n,
            q: self.q,
            elements,
        })
    }

    pub fn minus(&self, other: &DefiningSet) -> Result<DefiningSet, CyclicError> {
        self.check_same(other)?;
        let elements = self.elements.difference(&other.elements).copied().collect();
        Ok(DefiningSet {
            n: self.n,
            q: self.q,
            elements,
        })
    }

    pub fn is_subset(&self, other: &DefiningSet) -> Result<bool, CyclicError> {
        self.check_same(other)?;
        Ok(self.elements.is_subset(&other.elements))
    }

    /// T^{-1} = { -t mod n : t in T }.
    pub fn negate(&self) -> DefiningSet {
        let elements = self
            .elements
            .iter()
            .map(|&t| (self.n - t) % self.n)
            .collect();
        DefiningSet {
            n: self.n,
            q: self.q,
            elements,
        }
    }

    /// Z_n \ T.
    pub fn complement(&self) -> DefiningSet {
        let elements = (0..self.n).filter(|x| !self.elements.contains(x)).collect();
        DefiningSet {
            n: self.n,
            q: self.q,
            elements,
        }
    }

    /// Defining set of the Euclidean dual code: Z_n \ (-T mod n).
    pub fn dual(&self) -> DefiningSet {
        self.negate().complement()
    }

    /// BCH bound from the defining set: one more than the longest cyclic run
    /// of consecutive elements.
    pub fn bch_bound(&self) -> u64 {
        let n = self.n;
        if self.elements.len() as u64 == n {
            return n + 1;
        }
        let mut best = 0u64;
        let mut x = 0u64;
        // Walk from just past a gap so wrap-around runs are counted once.
        while self.elements.contains(&x) {
            x += 1;
        }
        let start = x;
        let mut run = 0u64;
        loop {
            x = (x + 1) % n;
            if self.elements.contains(&x) {
                run += 1;
                best = best.max(run);
            } else {
                run = 0;
            }
            if x == start {
                break;
            }
        }
        best + 1
    }
}

/// An exact nonnegative rational with a floor accessor; used for the
/// dual-containing designed-distance ceiling, which the formulas state as a
/// fraction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rational {
    num: BigUint,
    den: BigUint,
}

impl Rational {
    pub fn new(num: BigUint, den: BigUint) -> Self {
        assert!(den != BigUint::ZERO);
        let g = gcd_big(&num, &den);
        Rational {
            num: &num / &g,
            den: &den / &g,
        }
    }

    pub fn numerator(&self) -> &BigUint {
        &self.num
    }

    pub fn denominator(&self) -> &BigUint {
        &self.den
    }

    pub fn floor(&self) -> BigUint {
        &self.num / &self.den
    }

    pub fn floor_u64(&self) -> u64 {
        u64::try_from(self.floor()).unwrap_or(u64::MAX)
    }

    /// self >= x for an integer x.
    pub fn at_least(&self, x: u64) -> bool {
        self.num >= &self.den * BigUint::from(x)
    }

    pub fn is_integer(&self) -> bool {
        self.den == BigUint::from(1u32)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

fn gcd_big(a: &BigUint, b: &BigUint) -> BigUint {
    let mut a = a.clone();
    let mut b = b.clone();
    while b != BigUint::ZERO {
        let t = &a % &b;
        a = b;
        b = t;
    }
    a
}

fn big_pow(q: u64, e: u32) -> BigUint {
    BigUint::from(q).pow(e)
}

/// delta_max = min( floor(n q^ceil(m/2) / (q^m - 1)), n ): the designed
/// distance ceiling of the exact dimension formula.
pub fn delta_max(n: u64, q: u64, m: u32) -> u64 {
    let num = BigUint::from(n) * big_pow(q, m.div_ceil(2));
    let den = big_pow(q, m) - BigUint::from(1u32);
    let ratio = u64::try_from(num / den).unwrap_or(u64::MAX);
    ratio.min(n)
}

/// delta*_max = n (q^ceil(m/2) - 1 - (q-2)[m odd]) / (q^m - 1): the exact
/// rational ceiling for Euclidean dual-containing BCH codes.
pub fn delta_max_star(n: u64, q: u64, m: u32) -> Rational {
    let iverson = if m % 2 == 1 { q - 2 } else { 0 };
    let num = BigUint::from(n)
        * (big_pow(q, m.div_ceil(2)) - BigUint::from(1u32) - BigUint::from(iverson));
    let den = big_pow(q, m) - BigUint::from(1u32);
    Rational::new(num, den)
}

/// ceil((delta-1)(1-1/q)) in exact integers: (delta-1) - floor((delta-1)/q).
pub fn coset_degree_term(delta: u64, q: u64) -> u64 {
    (delta - 1) - (delta - 1) / q
}

/// Closed-form dimension k = n - m ceil((delta-1)(1-1/q)) of narrow-sense
/// BCH codes, valid for q^floor(m/2) < n <= q^m - 1 and 2 <= delta <=
/// delta_max. Outside that range the code can still be built via [`bch_code`]
/// and its true dimension read off.
pub fn bch_dimension_formula(n: u64, q: u64, delta: u64) -> Result<u64, CyclicError> {
    let m = ord_n_q(n, q)?;
    let lower = BigUint::from(q).pow(m / 2);
    if BigUint::from(n) <= lower {
        return Err(CyclicError::PreconditionViolated(format!(
            "length {n} not above q^floor(m/2) = {lower}"
        )));
    }
    let dmax = delta_max(n, q, m);
    if delta < 2 || delta > dmax {
        return Err(CyclicError::PreconditionViolated(format!(
            "designed distance {delta} outside 2..={dmax}"
        )));
    }
    Ok(n - m as u64 * coset_degree_term(delta, q))
}

/// A cyclic code: a linear code together with its generator polynomial and
/// defining set. The generator divides x^n - 1 and dim = n - deg(g).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicCode {
    linear: LinearCode,
    gen_poly: Poly,
    defining_set: DefiningSet,
    designed_distance: Option<u64>,
}

impl CyclicCode {
    pub fn n(&self) -> u64 {
        self.defining_set.n
    }

    pub fn k(&self) -> u64 {
        self.linear.k() as u64
    }

    pub fn q(&self) -> u64 {
        self.linear.q()
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        self.linear.field()
    }

    pub fn linear(&self) -> &LinearCode {
        &self.linear
    }

    pub fn into_linear(self) -> LinearCode {
        self.linear
    }

    pub fn gen_poly(&self) -> &Poly {
        &self.gen_poly
    }

    pub fn defining_set(&self) -> &DefiningSet {
        &self.defining_set
    }

    pub fn designed_distance(&self) -> Option<u64> {
        self.designed_distance
    }

    /// Lower bound on the true distance: the designed distance or the BCH
    /// bound of the defining set, whichever is larger.
    pub fn distance_floor(&self) -> u64 {
        self.designed_distance
            .unwrap_or(1)
            .max(self.defining_set.bch_bound())
    }

    /// The Euclidean dual, rebuilt from the dual defining set.
    pub fn dual(&self) -> Result<CyclicCode, CyclicError> {
        cyclic_from_defining_set(self.linear.field(), &self.defining_set.dual())
    }

    pub fn describe(&self) -> String {
        match self.designed_distance {
            Some(d) => format!(
                "[{},{}]_{} cyclic (designed {})",
                self.n(),
                self.k(),
                self.q(),
                d
            ),
            None => format!("[{},{}]_{} cyclic", self.n(), self.k(), self.q()),
        }
    }
}

/// The cyclic code over GF(q) whose zeros are exactly { beta^j : j in T },
/// beta a fixed primitive n-th root of unity in GF(q^m).
pub fn cyclic_from_defining_set(
    field: &Arc<FiniteField>,
    t: &DefiningSet,
) -> Result<CyclicCode, CyclicError> {
    build_cyclic(field, t.clone(), None)
}

fn build_cyclic(
    field: &Arc<FiniteField>,
    t: DefiningSet,
    designed_distance: Option<u64>,
) -> Result<CyclicCode, CyclicError> {
    let n = t.n;
    let q = field.order();
    if q != t.q {
        return Err(CyclicError::SetMismatch {
            left: (t.n, t.q),
            right: (n, q),
        });
    }
    let m = ord_n_q(n, q)?;
    let ext = ExtensionField::new(field, m)?;
    let beta = ext.nth_root_of_unity(n)?;
    let roots: Vec<_> = t
        .iter()
        .map(|j| ext.field().pow(beta, j))
        .collect::<Result<_, _>>()?;
    let g_ext = from_roots(ext.field(), &roots)?;
    // Coefficients are fixed by the q-power Frobenius because T is
    // coset-closed, hence lie in the embedded base field.
    let mut codes = Vec::with_capacity(g_ext.codes().len());
    for i in 0..g_ext.codes().len() {
        match ext.retract(g_ext.coefficient(i))? {
            Some(b) => codes.push(b.code() as u64),
            None => return Err(CyclicError::Poly(PolyError::CoefficientNotInBaseField)),
        }
    }
    let gen_poly = Poly::from_codes(field, &codes)?;
    let deg = gen_poly
        .degree()
        .expect("generator of a cyclic code is nonzero");
    debug_assert_eq!(deg, t.len());

    let k = n as usize - deg;
    let linear = if k == 0 {
        LinearCode::zero_code(field, n as usize)
    } else {
        let mut gen = Matrix::zeros(field, k, n as usize);
        for i in 0..k {
            for (j, &c) in gen_poly.codes().iter().enumerate() {
                gen.set(i, i + j, c);
            }
        }
        LinearCode::from_generator(gen)
    };
    debug_assert_eq!(linear.k(), k);
    Ok(CyclicCode {
        linear,
        gen_poly,
        defining_set: t,
        designed_distance,
    })
}

/// Narrow-sense BCH code of designed distance delta: defining set
/// S_1 u ... u S_{delta-1}, generator with roots beta, beta^2, ...,
/// beta^{delta-1}.
pub fn bch_code(field: &Arc<FiniteField>, n: u64, delta: u64) -> Result<CyclicCode, CyclicError> {
    bch_code_with_base(field, n, delta, 1)
}

/// General-b BCH constructor; the public surface is narrow-sense (b = 1).
pub(crate) fn bch_code_with_base(
    field: &Arc<FiniteField>,
    n: u64,
    delta: u64,
    b: u64,
) -> Result<CyclicCode, CyclicError> {
    let q = field.order();
    if gcd(n, q) != 1 {
        return Err(CyclicError::NotCoprime { n, q });
    }
    if delta < 2 || delta > n {
        return Err(CyclicError::DeltaOutOfRange { delta, n });
    }
    let t = DefiningSet::closure(n, q, (b..b + delta - 1).map(|x| x % n))?;
    build_cyclic(field, t, Some(delta))
}

/// Reed-Solomon code of length n = q - 1 and designed distance delta:
/// the [n, n - delta + 1, delta]_q MDS cyclic code.
pub fn rs_code(field: &Arc<FiniteField>, delta: u64) -> Result<CyclicCode, CyclicError> {
    let n = field.order() - 1;
    if delta < 2 || delta > n {
        return Err(CyclicError::DeltaOutOfRange { delta, n });
    }
    bch_code(field, n, delta)
}
