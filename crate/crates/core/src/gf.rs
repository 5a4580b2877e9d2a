//! Exact arithmetic in prime and prime-power finite fields GF(q), q = p^s,
//! including the extension fields GF(q^m) needed to locate BCH roots.
//!
//! Elements are stored as integer codes `sum c_i * p^i` over the polynomial
//! basis of the modulus. Multiplication goes through exp/log tables built at
//! field construction, addition is digit-wise mod p (XOR when p = 2), so all
//! operations after construction are table lookups and integer arithmetic.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Default ceiling on the field order p^s. Enumeration-heavy callers keep
/// fields small; anything larger is almost certainly a mistake.
pub const DEFAULT_FIELD_SIZE_CAP: u64 = 1 << 20;

/// Errors from field construction and element arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GfError {
    NotPrime { p: u64 },
    FieldTooLarge { q: u64, cap: u64 },
    InvalidExtensionDegree,
    DivisionByZero,
    ZeroElement,
    FieldMismatch { expected: u64, found: u64 },
    InvalidElementCode { code: u64, q: u64 },
    NotCoprime { n: u64, q: u64 },
}

impl fmt::Display for GfError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GfError::NotPrime { p } => write!(f, "{p} is not prime"),
            GfError::FieldTooLarge { q, cap } => {
                write!(f, "field order {q} exceeds the configured cap {cap}")
            }
            GfError::InvalidExtensionDegree => write!(f, "extension degree must be at least 1"),
            GfError::DivisionByZero => write!(f, "division by zero"),
            GfError::ZeroElement => write!(f, "the zero element has no multiplicative order"),
            GfError::FieldMismatch { expected, found } => {
                write!(f, "element of GF({found}) used with GF({expected})")
            }
            GfError::InvalidElementCode { code, q } => {
                write!(f, "element code {code} out of range for GF({q})")
            }
            GfError::NotCoprime { n, q } => write!(f, "gcd({n}, {q}) != 1"),
        }
    }
}

impl core::error::Error for GfError {}

/// An element of a finite field, tagged with the order of its owner field.
///
/// Arithmetic goes through the owning [`FiniteField`]; mixing elements of
/// fields with different orders is rejected. Fields are constructed
/// deterministically, so equal order means the same field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement {
    field_q: u32,
    code: u32,
}

impl FieldElement {
    /// Integer code of the element: `sum c_i * p^i` over the polynomial basis.
    pub fn code(&self) -> u32 {
        self.code
    }

    /// Order of the owning field.
    pub fn field_order(&self) -> u64 {
        self.field_q as u64
    }

    pub fn is_zero(&self) -> bool {
        self.code == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code)
    }
}

/// GF(p^s) with a fixed modulus polynomial and primitive element.
///
/// Construction is deterministic: the modulus is the lexicographically
/// smallest irreducible monic polynomial of degree s over GF(p) (coefficient
/// vectors compared as base-p integers) and the primitive element is the
/// smallest element code of multiplicative order q - 1. Two fields of the
/// same order are therefore identical and interchangeable.
pub struct FiniteField {
    p: u64,
    s: u32,
    q: u64,
    /// Monic modulus over GF(p), little-endian, length s + 1.
    modulus: Vec<u64>,
    primitive: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteField(GF({}^{}) = GF({}))", self.p, self.s, self.q)
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q
    }
}
impl Eq for FiniteField {}

impl FiniteField {
    /// Build GF(p^s) under the default size cap.
    pub fn new(p: u64, s: u32) -> Result<Arc<Self>, GfError> {
        Self::with_cap(p, s, DEFAULT_FIELD_SIZE_CAP)
    }

    /// Build GF(p^s) with an explicit size cap.
    pub fn with_cap(p: u64, s: u32, cap: u64) -> Result<Arc<Self>, GfError> {
        if s == 0 {
            return Err(GfError::InvalidExtensionDegree);
        }
        if !is_prime(p) {
            return Err(GfError::NotPrime { p });
        }
        let mut q: u64 = 1;
        for _ in 0..s {
            q = q
                .checked_mul(p)
                .ok_or(GfError::FieldTooLarge { q: u64::MAX, cap })?;
            if q > cap || q > u32::MAX as u64 {
                return Err(GfError::FieldTooLarge { q, cap });
            }
        }

        let modulus = if s == 1 {
            // Inert for prime fields; x + 1 by convention.
            vec![1, 1]
        } else {
            smallest_irreducible(p, s)
        };

        let mut field = FiniteField {
            p,
            s,
            q,
            modulus,
            primitive: 0,
            exp: Vec::new(),
            log: Vec::new(),
        };
        field.primitive = field.find_primitive();
        field.build_tables();
        Ok(Arc::new(field))
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.s
    }

    /// Field order q = p^s.
    pub fn order(&self) -> u64 {
        self.q
    }

    /// Modulus coefficients over GF(p), little-endian, monic.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            field_q: self.q as u32,
            code: 0,
        }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement {
            field_q: self.q as u32,
            code: 1,
        }
    }

    /// The deterministically chosen generator of the multiplicative group.
    pub fn primitive_element(&self) -> FieldElement {
        FieldElement {
            field_q: self.q as u32,
            code: self.primitive,
        }
    }

    /// Element with the given integer code, `code < q`.
    pub fn element(&self, code: u64) -> Result<FieldElement, GfError> {
        if code >= self.q {
            return Err(GfError::InvalidElementCode { code, q: self.q });
        }
        Ok(FieldElement {
            field_q: self.q as u32,
            code: code as u32,
        })
    }

    /// All field elements in code order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        let q = self.q as u32;
        (0..q).map(move |code| FieldElement { field_q: q, code })
    }

    fn check(&self, a: FieldElement) -> Result<u32, GfError> {
        if a.field_q as u64 != self.q {
            return Err(GfError::FieldMismatch {
                expected: self.q,
                found: a.field_q as u64,
            });
        }
        Ok(a.code)
    }

    fn wrap(&self, code: u32) -> FieldElement {
        FieldElement {
            field_q: self.q as u32,
            code,
        }
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, GfError> {
        Ok(self.wrap(self.add_raw(self.check(a)?, self.check(b)?)))
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, GfError> {
        Ok(self.wrap(self.sub_raw(self.check(a)?, self.check(b)?)))
    }

    pub fn neg(&self, a: FieldElement) -> Result<FieldElement, GfError> {
        Ok(self.wrap(self.neg_raw(self.check(a)?)))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, GfError> {
        Ok(self.wrap(self.mul_raw(self.check(a)?, self.check(b)?)))
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, GfError> {
        let code = self.check(a)?;
        if code == 0 {
            return Err(GfError::DivisionByZero);
        }
        Ok(self.wrap(self.inv_raw(code)))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, GfError> {
        let inv_b = self.inv(b)?;
        self.mul(a, inv_b)
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> Result<FieldElement, GfError> {
        Ok(self.wrap(self.pow_raw(self.check(a)?, e)))
    }

    /// Smallest t >= 1 with a^t = 1; divides q - 1.
    pub fn element_order(&self, a: FieldElement) -> Result<u64, GfError> {
        let code = self.check(a)?;
        if code == 0 {
            return Err(GfError::ZeroElement);
        }
        Ok(self.order_raw(code))
    }

    // Raw code-level arithmetic. Callers guarantee codes are in range; these
    // are the kernels behind the checked API and the enumeration loops.

    pub(crate) fn add_raw(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        if self.s == 1 {
            return ((a as u64 + b as u64) % self.p) as u32;
        }
        let p = self.p;
        let (mut a, mut b) = (a as u64, b as u64);
        let mut out = 0u64;
        let mut shift = 1u64;
        while a != 0 || b != 0 {
            out += ((a % p + b % p) % p) * shift;
            a /= p;
            b /= p;
            shift *= p;
        }
        out as u32
    }

    pub(crate) fn neg_raw(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        if self.s == 1 {
            return if a == 0 {
                0
            } else {
                (self.p - a as u64) as u32
            };
        }
        let p = self.p;
        let mut a = a as u64;
        let mut out = 0u64;
        let mut shift = 1u64;
        while a != 0 {
            let d = a % p;
            if d != 0 {
                out += (p - d) * shift;
            }
            a /= p;
            shift *= p;
        }
        out as u32
    }

    pub(crate) fn sub_raw(&self, a: u32, b: u32) -> u32 {
        self.add_raw(a, self.neg_raw(b))
    }

    pub(crate) fn mul_raw(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let g = self.q - 1;
        let idx = (self.log[a as usize] as u64 + self.log[b as usize] as u64) % g;
        self.exp[idx as usize]
    }

    pub(crate) fn inv_raw(&self, a: u32) -> u32 {
        debug_assert!(a != 0);
        let g = self.q - 1;
        let idx = (g - self.log[a as usize] as u64) % g;
        self.exp[idx as usize]
    }

    pub(crate) fn pow_raw(&self, a: u32, e: u64) -> u32 {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let g = self.q - 1;
        let idx = (self.log[a as usize] as u64 * (e % g)) % g;
        self.exp[idx as usize]
    }

    pub(crate) fn order_raw(&self, a: u32) -> u64 {
        let mut t = self.q - 1;
        for (r, _) in factorize(self.q - 1) {
            while t.is_multiple_of(r) && self.pow_raw(a, t / r) == 1 {
                t /= r;
            }
        }
        t
    }

    pub(crate) fn exp_raw(&self, i: u64) -> u32 {
        self.exp[(i % (self.q - 1)) as usize]
    }

    // Table-free multiplication used during construction only.
    fn mul_notable(&self, a: u32, b: u32) -> u32 {
        let av = decompose(a as u64, self.p, self.s);
        let bv = decompose(b as u64, self.p, self.s);
        let prod = poly_mul_mod_p(&av, &bv, self.p);
        let rem = poly_rem_mod_p(&prod, &self.modulus, self.p);
        compose(&rem, self.p) as u32
    }

    fn pow_notable(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_notable(acc, base);
            }
            base = self.mul_notable(base, base);
            e >>= 1;
        }
        acc
    }

    fn find_primitive(&self) -> u32 {
        let g = self.q - 1;
        if g == 1 {
            return 1;
        }
        let factors = factorize(g);
        'cand: for cand in 2..self.q {
            for (r, _) in &factors {
                if self.pow_notable(cand as u32, g / r) == 1 {
                    continue 'cand;
                }
            }
            return cand as u32;
        }
        unreachable!("every finite field has a primitive element")
    }

    fn build_tables(&mut self) {
        let g = (self.q - 1) as usize;
        let mut exp = vec![0u32; g];
        let mut log = vec![0u32; self.q as usize];
        let mut cur = 1u32;
        for (i, slot) in exp.iter_mut().enumerate() {
            *slot = cur;
            log[cur as usize] = i as u32;
            cur = self.mul_notable(cur, self.primitive);
        }
        debug_assert_eq!(cur, 1, "primitive element order mismatch");
        self.exp = exp;
        self.log = log;
    }
}

/// Builds GF(q) from the field order, factoring q = p^s. Errors with
/// NotPrime when q is not a prime power.
pub fn field_of_order(q: u64) -> Result<Arc<FiniteField>, GfError> {
    if q < 2 {
        return Err(GfError::NotPrime { p: q });
    }
    let p = (2..=q)
        .find(|d| q.is_multiple_of(*d))
        .expect("q >= 2 has a least factor");
    let mut s = 0u32;
    let mut rest = q;
    while rest.is_multiple_of(p) {
        rest /= p;
        s += 1;
    }
    if rest != 1 {
        return Err(GfError::NotPrime { p: q });
    }
    FiniteField::new(p, s)
}

/// Multiplicative order of q modulo n: the smallest m >= 1 with
/// q^m = 1 (mod n). Requires gcd(n, q) = 1.
pub fn ord_n_q(n: u64, q: u64) -> Result<u32, GfError> {
    if n == 1 {
        return Ok(1);
    }
    if gcd(n, q) != 1 {
        return Err(GfError::NotCoprime { n, q });
    }
    let mut cur = q % n;
    let mut m = 1u32;
    while cur != 1 {
        cur = cur * (q % n) % n;
        m += 1;
    }
    Ok(m)
}

pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// GF(q^m) together with the embedding of the base field GF(q).
///
/// The extension is realized as GF(p^{s*m}); the base field embeds by sending
/// its generator to a root of the base modulus inside the extension. Both
/// directions are table lookups.
pub struct ExtensionField {
    base: Arc<FiniteField>,
    ext: Arc<FiniteField>,
    m: u32,
    embed_table: Vec<u32>,
    retract_table: Vec<u32>,
}

const NOT_IN_SUBFIELD: u32 = u32::MAX;

impl ExtensionField {
    pub fn new(base: &Arc<FiniteField>, m: u32) -> Result<Self, GfError> {
        Self::with_cap(base, m, DEFAULT_FIELD_SIZE_CAP)
    }

    pub fn with_cap(base: &Arc<FiniteField>, m: u32, cap: u64) -> Result<Self, GfError> {
        if m == 0 {
            return Err(GfError::InvalidExtensionDegree);
        }
        if m == 1 {
            let q = base.order() as usize;
            return Ok(ExtensionField {
                base: base.clone(),
                ext: base.clone(),
                m,
                embed_table: (0..q as u32).collect(),
                retract_table: (0..q as u32).collect(),
            });
        }
        let ext = FiniteField::with_cap(base.characteristic(), base.degree() * m, cap)?;
        let q = base.order();
        let qm = ext.order();

        // Root of the base modulus inside the unique subfield of order q.
        let step = (qm - 1) / (q - 1);
        let root = (0..(q - 1))
            .map(|j| ext.exp_raw(j * step))
            .find(|&cand| {
                let mut acc = 0u32;
                // Horner over the base modulus; its coefficients are
                // prime-field constants with the same codes in both fields.
                for &c in base.modulus().iter().rev() {
                    acc = ext.add_raw(ext.mul_raw(acc, cand), c as u32);
                }
                acc == 0
            })
            .expect("base modulus splits in the extension");

        let p = base.characteristic();
        let s = base.degree();
        let mut embed_table = vec![0u32; q as usize];
        for (be, slot) in embed_table.iter_mut().enumerate() {
            let digits = decompose(be as u64, p, s);
            let mut acc = 0u32;
            for &d in digits.iter().rev() {
                acc = ext.add_raw(ext.mul_raw(acc, root), d as u32);
            }
            *slot = acc;
        }
        let mut retract_table = vec![NOT_IN_SUBFIELD; qm as usize];
        for (be, &xe) in embed_table.iter().enumerate() {
            debug_assert_eq!(retract_table[xe as usize], NOT_IN_SUBFIELD);
            retract_table[xe as usize] = be as u32;
        }

        Ok(ExtensionField {
            base: base.clone(),
            ext,
            m,
            embed_table,
            retract_table,
        })
    }

    pub fn base(&self) -> &Arc<FiniteField> {
        &self.base
    }

    /// The extension field GF(q^m) itself.
    pub fn field(&self) -> &Arc<FiniteField> {
        &self.ext
    }

    pub fn extension_degree(&self) -> u32 {
        self.m
    }

    pub fn embed(&self, a: FieldElement) -> Result<FieldElement, GfError> {
        if a.field_order() != self.base.order() {
            return Err(GfError::FieldMismatch {
                expected: self.base.order(),
                found: a.field_order(),
            });
        }
        Ok(self.ext.wrap(self.embed_table[a.code() as usize]))
    }

    /// Maps back into the base field; `None` when the element lies outside
    /// the embedded copy of GF(q).
    pub fn retract(&self, a: FieldElement) -> Result<Option<FieldElement>, GfError> {
        if a.field_order() != self.ext.order() {
            return Err(GfError::FieldMismatch {
                expected: self.ext.order(),
                found: a.field_order(),
            });
        }
        let be = self.retract_table[a.code() as usize];
        if be == NOT_IN_SUBFIELD {
            Ok(None)
        } else {
            Ok(Some(self.base.wrap(be)))
        }
    }

    /// A primitive n-th root of unity in GF(q^m); requires n | q^m - 1.
    pub fn nth_root_of_unity(&self, n: u64) -> Result<FieldElement, GfError> {
        let g = self.ext.order() - 1;
        if n == 0 || !g.is_multiple_of(n) {
            return Err(GfError::NotCoprime {
                n,
                q: self.base.order(),
            });
        }
        Ok(self.ext.wrap(self.ext.exp_raw(g / n)))
    }
}

impl fmt::Debug for ExtensionField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ExtensionField(GF({})^{} = GF({}))",
            self.base.order(),
            self.m,
            self.ext.order()
        )
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn decompose(mut code: u64, p: u64, s: u32) -> Vec<u64> {
    let mut out = vec![0u64; s as usize];
    for slot in out.iter_mut() {
        *slot = code % p;
        code /= p;
    }
    out
}

fn compose(coeffs: &[u64], p: u64) -> u64 {
    let mut out = 0u64;
    for &c in coeffs.iter().rev() {
        out = out * p + c;
    }
    out
}

fn poly_deg(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

fn poly_mul_mod_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + ai * bj) % p;
        }
    }
    out
}

fn poly_rem_mod_p(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let md = poly_deg(m).expect("modulus is nonzero");
    debug_assert_eq!(m[md], 1, "modulus is monic");
    let mut r: Vec<u64> = a.to_vec();
    while let Some(rd) = poly_deg(&r) {
        if rd < md {
            break;
        }
        let lead = r[rd];
        let shift = rd - md;
        for i in 0..=md {
            let sub = lead * m[i] % p;
            r[shift + i] = (r[shift + i] + p - sub) % p;
        }
    }
    r.truncate(md);
    r.resize(md, 0);
    r
}

/// Lexicographically smallest irreducible monic polynomial of degree s over
/// GF(p), low coefficients encoded as a base-p integer.
fn smallest_irreducible(p: u64, s: u32) -> Vec<u64> {
    let count = p.pow(s);
    'cand: for low in 0..count {
        let mut f = decompose(low, p, s);
        f.push(1);
        if f[0] == 0 {
            // Divisible by x.
            continue;
        }
        // Trial division by every monic polynomial of degree 1..=s/2.
        for d in 1..=s / 2 {
            for dl in 0..p.pow(d) {
                let mut g = decompose(dl, p, d);
                g.push(1);
                let r = poly_rem_mod_p(&f, &g, p);
                if poly_deg(&r).is_none() {
                    continue 'cand;
                }
            }
        }
        return f;
    }
    unreachable!("irreducible polynomials of every degree exist over GF(p)")
}
