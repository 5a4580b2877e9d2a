//! Dense univariate polynomial arithmetic over a finite field: the carrier
//! for generator polynomials, minimal polynomials, and the factorization of
//! x^n - 1 through cyclotomic cosets.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::gf::{ExtensionField, FieldElement, FiniteField, GfError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    FieldMismatch {
        expected: u64,
        found: u64,
    },
    DivisionByZero,
    /// Signals an internal inconsistency; must never fire on valid input.
    CoefficientNotInBaseField,
    Gf(GfError),
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::FieldMismatch { expected, found } => {
                write!(f, "polynomial over GF({found}) used with GF({expected})")
            }
            PolyError::DivisionByZero => write!(f, "polynomial division by zero"),
            PolyError::CoefficientNotInBaseField => {
                write!(f, "coefficient does not lie in the base field")
            }
            PolyError::Gf(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for PolyError {}

impl From<GfError> for PolyError {
    fn from(e: GfError) -> Self {
        PolyError::Gf(e)
    }
}

/// Dense polynomial; `coeffs[i]` is the coefficient of x^i as a raw element
/// code, trailing zeros stripped. The zero polynomial has no coefficients and
/// a `None` degree, so no -1 sentinel ever leaks into formulas.
#[derive(Clone)]
pub struct Poly {
    field: Arc<FiniteField>,
    coeffs: Vec<u32>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.field.order() == other.field.order() && self.coeffs == other.coeffs
    }
}
impl Eq for Poly {}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self} over GF({}))", self.field.order())
    }
}

impl Poly {
    pub fn zero(field: &Arc<FiniteField>) -> Self {
        Poly {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &Arc<FiniteField>) -> Self {
        Poly {
            field: field.clone(),
            coeffs: vec![1],
        }
    }

    pub fn x(field: &Arc<FiniteField>) -> Self {
        Poly {
            field: field.clone(),
            coeffs: vec![0, 1],
        }
    }

    /// Builds from little-endian element codes, stripping trailing zeros.
    pub fn from_codes(field: &Arc<FiniteField>, codes: &[u64]) -> Result<Self, PolyError> {
        let mut coeffs = Vec::with_capacity(codes.len());
        for &c in codes {
            coeffs.push(field.element(c)?.code());
        }
        let mut p = Poly {
            field: field.clone(),
            coeffs,
        };
        p.normalize();
        Ok(p)
    }

    pub fn from_elements(
        field: &Arc<FiniteField>,
        elements: &[FieldElement],
    ) -> Result<Self, PolyError> {
        let mut coeffs = Vec::with_capacity(elements.len());
        for &e in elements {
            if e.field_order() != field.order() {
                return Err(PolyError::FieldMismatch {
                    expected: field.order(),
                    found: e.field_order(),
                });
            }
            coeffs.push(e.code());
        }
        let mut p = Poly {
            field: field.clone(),
            coeffs,
        };
        p.normalize();
        Ok(p)
    }

    /// x^n - 1 over the given field.
    pub fn x_pow_n_minus_one(field: &Arc<FiniteField>, n: u64) -> Self {
        let mut coeffs = vec![0u32; n as usize + 1];
        coeffs[0] = field.neg_raw(1);
        coeffs[n as usize] = 1;
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coefficient(&self, i: usize) -> FieldElement {
        match self.coeffs.get(i) {
            Some(&c) => self.field.element(c as u64).unwrap(),
            None => self.field.zero(),
        }
    }

    /// Little-endian coefficient codes.
    pub fn codes(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn leading_coefficient(&self) -> Option<FieldElement> {
        self.coeffs
            .last()
            .map(|&c| self.field.element(c as u64).unwrap())
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    fn check_same_field(&self, other: &Poly) -> Result<(), PolyError> {
        if self.field.order() != other.field.order() {
            return Err(PolyError::FieldMismatch {
                expected: self.field.order(),
                found: other.field.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.check_same_field(other)?;
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![0u32; n];
        for (i, slot) in coeffs.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            *slot = f.add_raw(a, b);
        }
        let mut p = Poly {
            field: f.clone(),
            coeffs,
        };
        p.normalize();
        Ok(p)
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.check_same_field(other)?;
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![0u32; n];
        for (i, slot) in coeffs.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            *slot = f.sub_raw(a, b);
        }
        let mut p = Poly {
            field: f.clone(),
            coeffs,
        };
        p.normalize();
        Ok(p)
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.check_same_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.field));
        }
        let f = &self.field;
        let mut coeffs = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                coeffs[i + j] = f.add_raw(coeffs[i + j], f.mul_raw(a, b));
            }
        }
        let mut p = Poly {
            field: f.clone(),
            coeffs,
        };
        p.normalize();
        Ok(p)
    }

    pub fn scale(&self, c: FieldElement) -> Result<Poly, PolyError> {
        if c.field_order() != self.field.order() {
            return Err(PolyError::FieldMismatch {
                expected: self.field.order(),
                found: c.field_order(),
            });
        }
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .map(|&a| f.mul_raw(a, c.code()))
            .collect();
        let mut p = Poly {
            field: f.clone(),
            coeffs,
        };
        p.normalize();
        Ok(p)
    }

    /// Quotient and remainder: self = q * other + r with deg r < deg other.
    pub fn divrem(&self, other: &Poly) -> Result<(Poly, Poly), PolyError> {
        self.check_same_field(other)?;
        let d = other.degree().ok_or(PolyError::DivisionByZero)?;
        let f = &self.field;
        let mut rem = self.coeffs.clone();
        if rem.len() < d + 1 {
            return Ok((Poly::zero(f), self.clone()));
        }
        let lead_inv = f.inv_raw(other.coeffs[d]);
        let mut quot = vec![0u32; rem.len() - d];
        for top in (d..rem.len()).rev() {
            let c = rem[top];
            if c == 0 {
                continue;
            }
            let factor = f.mul_raw(c, lead_inv);
            quot[top - d] = factor;
            for (i, &oc) in other.coeffs.iter().enumerate() {
                if oc != 0 {
                    let idx = top - d + i;
                    rem[idx] = f.sub_raw(rem[idx], f.mul_raw(factor, oc));
                }
            }
            debug_assert_eq!(rem[top], 0);
        }
        let mut q = Poly {
            field: f.clone(),
            coeffs: quot,
        };
        q.normalize();
        let mut r = Poly {
            field: f.clone(),
            coeffs: rem,
        };
        r.normalize();
        Ok((q, r))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.check_same_field(other)?;
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Scaled so the leading coefficient is 1 (zero stays zero).
    pub fn monic(&self) -> Poly {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(lead) => {
                let inv = self.field.inv(lead).unwrap();
                self.scale(inv).unwrap()
            }
        }
    }

    pub fn eval(&self, x: FieldElement) -> Result<FieldElement, PolyError> {
        if x.field_order() != self.field.order() {
            return Err(PolyError::FieldMismatch {
                expected: self.field.order(),
                found: x.field_order(),
            });
        }
        let f = &self.field;
        let mut acc = 0u32;
        for &c in self.coeffs.iter().rev() {
            acc = f.add_raw(f.mul_raw(acc, x.code()), c);
        }
        Ok(f.element(acc as u64).unwrap())
    }

    /// Divides exactly, i.e. the remainder of other / self is zero.
    pub fn divides(&self, other: &Poly) -> Result<bool, PolyError> {
        let (_, r) = other.divrem(self)?;
        Ok(r.is_zero())
    }
}

/// Monic polynomial with exactly the given multiset of roots.
pub fn from_roots(field: &Arc<FiniteField>, roots: &[FieldElement]) -> Result<Poly, PolyError> {
    let mut acc = Poly::one(field);
    for &r in roots {
        if r.field_order() != field.order() {
            return Err(PolyError::FieldMismatch {
                expected: field.order(),
                found: r.field_order(),
            });
        }
        // acc *= (x - r)
        let linear = Poly::from_codes(field, &[field.neg_raw(r.code()) as u64, 1])?;
        acc = acc.mul(&linear)?;
    }
    Ok(acc)
}

/// Minimal polynomial over the base field GF(q) of an element of GF(q^m):
/// the product of (x - c) over the Frobenius conjugates c = a^{q^i}. The
/// result has coefficients in GF(q) and degree equal to the size of the
/// cyclotomic coset of the exponent.
pub fn minimal_polynomial(ext: &ExtensionField, a: FieldElement) -> Result<Poly, PolyError> {
    let ef = ext.field();
    if a.field_order() != ef.order() {
        return Err(PolyError::FieldMismatch {
            expected: ef.order(),
            found: a.field_order(),
        });
    }
    let q = ext.base().order();
    let mut conjugates = vec![a];
    let mut cur = ef.pow(a, q)?;
    while cur != a {
        conjugates.push(cur);
        cur = ef.pow(cur, q)?;
    }
    let over_ext = from_roots(ef, &conjugates)?;
    // Coefficients are Frobenius-fixed, hence in the embedded base field.
    let mut base_codes = Vec::with_capacity(over_ext.codes().len());
    for i in 0..over_ext.codes().len() {
        let c = over_ext.coefficient(i);
        match ext.retract(c)? {
            Some(b) => base_codes.push(b.code() as u64),
            None => return Err(PolyError::CoefficientNotInBaseField),
        }
    }
    Poly::from_codes(ext.base(), &base_codes)
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "{c}x")?,
                (_, 1) => write!(f, "x^{i}")?,
                (_, _) => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FiniteField;

    fn gf2() -> Arc<FiniteField> {
        FiniteField::new(2, 1).unwrap()
    }

    #[test]
    fn char2_square() {
        let f = gf2();
        let xp1 = Poly::from_codes(&f, &[1, 1]).unwrap();
        let sq = xp1.mul(&xp1).unwrap();
        assert_eq!(sq, Poly::from_codes(&f, &[1, 0, 1]).unwrap());
        assert_eq!(format!("{sq}"), "x^2 + 1");
    }

    #[test]
    fn long_division_oracle() {
        // divrem(x^4 + x + 1, x^2 + x + 1) worked out by hand.
        let f = gf2();
        let a = Poly::from_codes(&f, &[1, 1, 0, 0, 1]).unwrap();
        let b = Poly::from_codes(&f, &[1, 1, 1]).unwrap();
        let (q, r) = a.divrem(&b).unwrap();
        assert_eq!(q, Poly::from_codes(&f, &[0, 1, 1]).unwrap()); // x^2 + x
        assert_eq!(r, Poly::one(&f));
        assert_eq!(q.mul(&b).unwrap().add(&r).unwrap(), a);
    }

    #[test]
    fn annihilator() {
        let f = gf2();
        let a = Poly::from_codes(&f, &[1, 0, 1, 1]).unwrap();
        let z = Poly::zero(&f);
        assert_eq!(a.mul(&z).unwrap(), z);
        assert_eq!(z.degree(), None);
        assert!(matches!(a.divrem(&z), Err(PolyError::DivisionByZero)));
    }

    #[test]
    fn from_roots_cases() {
        let f = gf2();
        let ext = ExtensionField::new(&f, 4).unwrap();
        let ef = ext.field();
        assert_eq!(from_roots(ef, &[]).unwrap(), Poly::one(ef));

        let alpha = ef.primitive_element();
        let single = from_roots(ef, &[alpha]).unwrap();
        assert_eq!(single.degree(), Some(1));
        assert!(single.eval(alpha).unwrap().is_zero());

        let roots: Vec<_> = (1..=4u64).map(|i| ef.pow(alpha, i).unwrap()).collect();
        let g = from_roots(ef, &roots).unwrap();
        assert!(g.is_monic());
        for r in roots {
            assert!(g.eval(r).unwrap().is_zero());
        }
        assert!(!g.eval(ef.pow(alpha, 5).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn from_roots_multiset_union() {
        let f = FiniteField::new(5, 1).unwrap();
        let s: Vec<_> = [1u64, 2].iter().map(|&c| f.element(c).unwrap()).collect();
        let t: Vec<_> = [2u64, 4].iter().map(|&c| f.element(c).unwrap()).collect();
        let both: Vec<_> = s.iter().chain(t.iter()).copied().collect();
        let lhs = from_roots(&f, &s)
            .unwrap()
            .mul(&from_roots(&f, &t).unwrap())
            .unwrap();
        assert_eq!(lhs, from_roots(&f, &both).unwrap());
    }

    #[test]
    fn minimal_polynomial_degrees_match_coset_sizes() {
        // Over GF(16)/GF(2) with a primitive alpha of order 15:
        // deg minpoly(alpha) = |S_1| = 4, deg minpoly(alpha^5) = |S_5| = 2.
        let f = gf2();
        let ext = ExtensionField::new(&f, 4).unwrap();
        let ef = ext.field();
        let alpha = ef.primitive_element();
        let m1 = minimal_polynomial(&ext, alpha).unwrap();
        assert_eq!(m1.degree(), Some(4));
        assert_eq!(m1.field().order(), 2);
        let m5 = minimal_polynomial(&ext, ef.pow(alpha, 5).unwrap()).unwrap();
        assert_eq!(m5.degree(), Some(2));
        // Invariant under the choice of coset representative.
        let m10 = minimal_polynomial(&ext, ef.pow(alpha, 10).unwrap()).unwrap();
        assert_eq!(m5, m10);
    }

    #[test]
    fn minimal_polynomial_of_one() {
        let f = gf2();
        let ext = ExtensionField::new(&f, 4).unwrap();
        let m = minimal_polynomial(&ext, ext.field().one()).unwrap();
        // x - 1 (= x + 1 over GF(2))
        assert_eq!(m, Poly::from_codes(&f, &[1, 1]).unwrap());
    }

    #[test]
    fn gcd_cases() {
        let f = gf2();
        let z = Poly::zero(&f);
        let a = Poly::from_codes(&f, &[1, 1]).unwrap();
        assert_eq!(a.gcd(&z).unwrap(), a);
        // x^2 + 1 = (x+1)^2 over GF(2)
        let sq = Poly::from_codes(&f, &[1, 0, 1]).unwrap();
        assert_eq!(sq.gcd(&a).unwrap(), a);
    }

    #[test]
    fn gcd_divides_both_and_is_monic() {
        let f = FiniteField::new(7, 1).unwrap();
        let c = Poly::from_codes(&f, &[3, 1]).unwrap();
        let a = c.mul(&Poly::from_codes(&f, &[2, 5, 4]).unwrap()).unwrap();
        let b = c.mul(&Poly::from_codes(&f, &[6, 1]).unwrap()).unwrap();
        let g = a.gcd(&b).unwrap();
        assert!(g.is_monic());
        assert!(g.divides(&a).unwrap());
        assert!(g.divides(&b).unwrap());
        assert!(c.monic().divides(&g).unwrap());
    }

    #[test]
    fn eval_horner() {
        let f = FiniteField::new(7, 1).unwrap();
        // 3x^2 + 2x + 1 at x = 4: 3*16 + 8 + 1 = 57 = 1 mod 7
        let p = Poly::from_codes(&f, &[1, 2, 3]).unwrap();
        assert_eq!(p.eval(f.element(4).unwrap()).unwrap().code(), 1);
    }
}
