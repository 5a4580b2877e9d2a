//! Generic `[n,k]_q` linear codes: canonical generator matrices, duals, nesting
//! and intersection tests, and the exhaustive weight computations (minimum
//! weight and relative minimum weight wt(C \ D)) certifying every quantum
//! parameter claim.

mod enumerate;

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::gf::{FiniteField, GfError};

/// Default enumeration cap: message-space sweeps and sphere searches give up
/// beyond this many candidates and callers fall back to designed-distance
/// lower bounds.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1 << 22;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinearError {
    FieldMismatch { expected: u64, found: u64 },
    LengthMismatch { left: usize, right: usize },
    RowWidthMismatch { expected: usize, found: usize },
    TooLargeToEnumerate { cap: u64, required: u64 },
    Gf(GfError),
}

impl fmt::Display for LinearError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinearError::FieldMismatch { expected, found } => {
                write!(f, "code over GF({found}) used with GF({expected})")
            }
            LinearError::LengthMismatch { left, right } => {
                write!(f, "code lengths differ: {left} vs {right}")
            }
            LinearError::RowWidthMismatch { expected, found } => {
                write!(f, "row width {found} does not match {expected}")
            }
            LinearError::TooLargeToEnumerate { cap, required } => {
                write!(f, "enumeration needs {required} candidates, cap is {cap}")
            }
            LinearError::Gf(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for LinearError {}

impl From<GfError> for LinearError {
    fn from(e: GfError) -> Self {
        LinearError::Gf(e)
    }
}

/// Row-major matrix over a finite field, entries stored as element codes.
#[derive(Clone)]
pub struct Matrix {
    field: Arc<FiniteField>,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.field.order() == other.field.order()
            && self.rows == other.rows
            && self.cols == other.cols
            && self.data == other.data
    }
}
impl Eq for Matrix {}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "Matrix {}x{} over GF({}):",
            self.rows,
            self.cols,
            self.field.order()
        )?;
        for r in 0..self.rows {
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: &Arc<FiniteField>, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: &Arc<FiniteField>, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(field: &Arc<FiniteField>, rows: &[Vec<u32>]) -> Result<Self, LinearError> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(LinearError::RowWidthMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            for &c in row {
                if c as u64 >= field.order() {
                    return Err(GfError::InvalidElementCode {
                        code: c as u64,
                        q: field.order(),
                    }
                    .into());
                }
                data.push(c);
            }
        }
        Ok(Matrix {
            field: field.clone(),
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduces to the unique reduced row-echelon form; returns the rank.
    pub fn rref_in_place(&mut self) -> usize {
        let f = self.field.clone();
        let mut pivot = 0usize;
        for col in 0..self.cols {
            if pivot == self.rows {
                break;
            }
            let Some(r) = (pivot..self.rows).find(|&r| self.get(r, col) != 0) else {
                continue;
            };
            self.swap_rows(pivot, r);
            let lead_inv = f.inv_raw(self.get(pivot, col));
            if lead_inv != 1 {
                for c in col..self.cols {
                    let v = self.get(pivot, c);
                    self.set(pivot, c, f.mul_raw(v, lead_inv));
                }
            }
            for rr in 0..self.rows {
                if rr == pivot {
                    continue;
                }
                let factor = self.get(rr, col);
                if factor == 0 {
                    continue;
                }
                for c in col..self.cols {
                    let sub = f.mul_raw(factor, self.get(pivot, c));
                    let v = self.get(rr, c);
                    self.set(rr, c, f.sub_raw(v, sub));
                }
            }
            pivot += 1;
        }
        pivot
    }

    /// Canonical RREF copy together with the rank.
    pub fn rref(&self) -> (Matrix, usize) {
        let mut m = self.clone();
        let rank = m.rref_in_place();
        (m, rank)
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place()
    }

    pub fn vstack(&self, other: &Matrix) -> Result<Matrix, LinearError> {
        if self.field.order() != other.field.order() {
            return Err(LinearError::FieldMismatch {
                expected: self.field.order(),
                found: other.field.order(),
            });
        }
        if self.cols != other.cols {
            return Err(LinearError::LengthMismatch {
                left: self.cols,
                right: other.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            if r + 1 < self.rows {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// Minimum weight, with an explicit sentinel for the empty search space
/// (the zero code, or wt(C \ D) with C contained in D).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinWeight {
    Finite(u64),
    Infinite,
}

impl MinWeight {
    pub fn finite(&self) -> Option<u64> {
        match self {
            MinWeight::Finite(w) => Some(*w),
            MinWeight::Infinite => None,
        }
    }
}

impl fmt::Display for MinWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinWeight::Finite(w) => write!(f, "{w}"),
            MinWeight::Infinite => write!(f, "infinity"),
        }
    }
}

/// How a weight was certified: a full message-space sweep, or an exhaustive
/// search of Hamming spheres of increasing radius (used when the message
/// space exceeds the cap but the distance is small).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumMethod {
    Exhaustive,
    Sphere,
}

/// Certified weight computation result. The witness attains the minimum,
/// lies in C (and outside D for relative reports), and ties are broken toward
/// the lexicographically smallest codeword so reports are deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightReport {
    pub min_weight: MinWeight,
    pub witness: Option<Vec<u32>>,
    pub enumerated: u64,
    pub method: EnumMethod,
}

impl WeightReport {
    fn infinite() -> Self {
        WeightReport {
            min_weight: MinWeight::Infinite,
            witness: None,
            enumerated: 0,
            method: EnumMethod::Exhaustive,
        }
    }
}

/// An `[n,k]_q` linear code held as its reduced row-echelon generator matrix.
/// RREF is unique, so code equality is matrix equality.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearCode {
    field: Arc<FiniteField>,
    n: usize,
    k: usize,
    gen: Matrix,
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearCode({})", self.describe())
    }
}

impl LinearCode {
    /// Canonicalizes an arbitrary generator matrix: RREF, zero rows dropped.
    pub fn from_generator(gen: Matrix) -> Self {
        let cols = gen.cols;
        let field = gen.field.clone();
        let (reduced, rank) = gen.rref();
        let mut data = reduced.data;
        data.truncate(rank * cols);
        LinearCode {
            field,
            n: cols,
            k: rank,
            gen: Matrix {
                field: reduced.field,
                rows: rank,
                cols,
                data,
            },
        }
    }

    pub fn zero_code(field: &Arc<FiniteField>, n: usize) -> Self {
        LinearCode {
            field: field.clone(),
            n,
            k: 0,
            gen: Matrix::zeros(field, 0, n),
        }
    }

    pub fn full_space(field: &Arc<FiniteField>, n: usize) -> Self {
        LinearCode {
            field: field.clone(),
            n,
            k: n,
            gen: Matrix::identity(field, n),
        }
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn q(&self) -> u64 {
        self.field.order()
    }

    /// Canonical k x n generator matrix (RREF, full rank).
    pub fn generator(&self) -> &Matrix {
        &self.gen
    }

    pub fn describe(&self) -> String {
        format!("[{},{}]_{}", self.n, self.k, self.q())
    }

    fn pivot_cols(&self) -> Vec<usize> {
        (0..self.k)
            .map(|r| {
                self.gen
                    .row(r)
                    .iter()
                    .position(|&c| c != 0)
                    .expect("full-rank RREF row")
            })
            .collect()
    }

    /// The Euclidean dual, dimension n - k.
    pub fn dual(&self) -> LinearCode {
        let f = &self.field;
        let pivots = self.pivot_cols();
        let mut is_pivot = vec![false; self.n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut m = Matrix::zeros(f, self.n - self.k, self.n);
        for (row, j) in (0..self.n).filter(|&j| !is_pivot[j]).enumerate() {
            m.set(row, j, 1);
            for (i, &p) in pivots.iter().enumerate() {
                m.set(row, p, f.neg_raw(self.gen.get(i, j)));
            }
        }
        Self::from_generator(m)
    }

    fn check_compatible(&self, other: &LinearCode) -> Result<(), LinearError> {
        if self.field.order() != other.field.order() {
            return Err(LinearError::FieldMismatch {
                expected: self.field.order(),
                found: other.field.order(),
            });
        }
        if self.n != other.n {
            return Err(LinearError::LengthMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// True iff other is a subcode of self (rank test on stacked rows).
    pub fn contains(&self, other: &LinearCode) -> Result<bool, LinearError> {
        self.check_compatible(other)?;
        if other.k == 0 {
            return Ok(true);
        }
        if other.k > self.k {
            return Ok(false);
        }
        Ok(self.gen.vstack(&other.gen)?.rank() == self.k)
    }

    /// Membership of a single word, by reduction against the RREF generator.
    pub fn contains_word(&self, word: &[u32]) -> bool {
        if word.len() != self.n {
            return false;
        }
        let f = &self.field;
        let mut w = word.to_vec();
        for (i, &p) in self.pivot_cols().iter().enumerate() {
            let c = w[p];
            if c != 0 {
                for (wj, &gj) in w.iter_mut().zip(self.gen.row(i)) {
                    *wj = f.sub_raw(*wj, f.mul_raw(c, gj));
                }
            }
        }
        w.iter().all(|&c| c == 0)
    }

    /// A generator row of `other` outside self, if any; the NotNested witness.
    pub fn missing_row(&self, other: &LinearCode) -> Option<Vec<u32>> {
        (0..other.k)
            .map(|r| other.gen.row(r))
            .find(|row| !self.contains_word(row))
            .map(<[u32]>::to_vec)
    }

    /// C and D intersect as (C-perp + D-perp)-perp.
    pub fn intersection(&self, other: &LinearCode) -> Result<LinearCode, LinearError> {
        self.check_compatible(other)?;
        let stacked = self.dual().gen.vstack(&other.dual().gen)?;
        Ok(Self::from_generator(stacked).dual())
    }

    /// Codeword for a message vector of length k.
    pub fn encode(&self, message: &[u32]) -> Vec<u32> {
        assert_eq!(message.len(), self.k);
        let f = &self.field;
        let mut cw = vec![0u32; self.n];
        for (i, &m) in message.iter().enumerate() {
            if m == 0 {
                continue;
            }
            for (c, &g) in cw.iter_mut().zip(self.gen.row(i)) {
                *c = f.add_raw(*c, f.mul_raw(m, g));
            }
        }
        cw
    }

    /// Exhaustive minimum Hamming weight over all nonzero codewords.
    ///
    /// Sweeps the message space when q^k fits under the cap, otherwise
    /// searches Hamming spheres of growing radius (cheap exactly when the
    /// message space is too big, since the check matrix is then small). The
    /// cap bounds the number of candidates examined either way.
    pub fn min_weight(&self, cap: u64) -> Result<WeightReport, LinearError> {
        if self.k == 0 {
            return Ok(WeightReport::infinite());
        }
        if message_count(self.q(), self.k) <= cap as u128 {
            enumerate::message_space(self, None)
        } else {
            enumerate::sphere(self, None, cap)
        }
    }

    /// Minimum weight over codewords of self not lying in `other`; the
    /// quantity defining d_x and d_z. Returns the Infinity sentinel when
    /// self is contained in `other`.
    pub fn relative_min_weight(
        &self,
        other: &LinearCode,
        cap: u64,
    ) -> Result<WeightReport, LinearError> {
        self.check_compatible(other)?;
        if self.k == 0 || other.contains(self)? {
            return Ok(WeightReport::infinite());
        }
        if message_count(self.q(), self.k) <= cap as u128 {
            enumerate::message_space(self, Some(other))
        } else {
            enumerate::sphere(self, Some(other), cap)
        }
    }
}

/// Number of nonzero messages q^k - 1 (saturating).
fn message_count(q: u64, k: usize) -> u128 {
    let mut out: u128 = 1;
    for _ in 0..k {
        out = out.saturating_mul(q as u128);
    }
    out - 1
}

pub(crate) fn saturating_message_count_u64(q: u64, k: usize) -> u64 {
    u64::try_from(message_count(q, k)).unwrap_or(u64::MAX)
}

/// Independent reference enumerator: plain linear combination per message
/// index, checked element arithmetic, membership by generator reduction.
/// Deliberately shares nothing with the production kernels; used to
/// cross-check them.
pub fn min_weight_reference(code: &LinearCode, exclude: Option<&LinearCode>) -> WeightReport {
    let q = code.q();
    let k = code.k();
    if k == 0 {
        return WeightReport::infinite();
    }
    let total = message_count(q, k) as u64;
    let mut best: Option<(u64, Vec<u32>)> = None;
    let mut message = vec![0u32; k];
    for idx in 1..=total {
        let mut v = idx;
        for slot in message.iter_mut() {
            *slot = (v % q) as u32;
            v /= q;
        }
        let cw = code.encode(&message);
        let wt = cw.iter().filter(|&&c| c != 0).count() as u64;
        let better = match &best {
            None => true,
            Some((bw, bcw)) => wt < *bw || (wt == *bw && cw < *bcw),
        };
        if better {
            if let Some(d) = exclude {
                if d.contains_word(&cw) {
                    continue;
                }
            }
            best = Some((wt, cw));
        }
    }
    match best {
        None => WeightReport {
            enumerated: total,
            ..WeightReport::infinite()
        },
        Some((wt, cw)) => WeightReport {
            min_weight: MinWeight::Finite(wt),
            witness: Some(cw),
            enumerated: total,
            method: EnumMethod::Exhaustive,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FiniteField;

    fn gf(q: u64) -> Arc<FiniteField> {
        match q {
            2 => FiniteField::new(2, 1).unwrap(),
            3 => FiniteField::new(3, 1).unwrap(),
            4 => FiniteField::new(2, 2).unwrap(),
            5 => FiniteField::new(5, 1).unwrap(),
            7 => FiniteField::new(7, 1).unwrap(),
            _ => unreachable!(),
        }
    }

    #[test]
    fn rref_identity_and_zero() {
        let f = gf(2);
        let id = Matrix::identity(&f, 4);
        let (r, rank) = id.rref();
        assert_eq!(r, id);
        assert_eq!(rank, 4);
        let z = Matrix::zeros(&f, 3, 5);
        let (r, rank) = z.rref();
        assert_eq!(r, z);
        assert_eq!(rank, 0);
    }

    #[test]
    fn rref_is_canonical() {
        let f = gf(5);
        let a = Matrix::from_rows(&f, &[vec![2, 1, 0], vec![4, 2, 1]]).unwrap();
        let b = Matrix::from_rows(&f, &[vec![4, 2, 1], vec![2, 1, 0]]).unwrap();
        assert_eq!(a.rref().0, b.rref().0);
        // rref is idempotent
        let (r1, _) = a.rref();
        let (r2, _) = r1.rref();
        assert_eq!(r1, r2);
    }

    #[test]
    fn dual_dimensions_and_involution() {
        let f = gf(2);
        let rows = vec![vec![1, 0, 1, 1, 0], vec![0, 1, 1, 0, 1]];
        let c = LinearCode::from_generator(Matrix::from_rows(&f, &rows).unwrap());
        let d = c.dual();
        assert_eq!(d.k(), 3);
        assert_eq!(d.dual(), c);
        // Every pair of rows is orthogonal.
        for i in 0..c.k() {
            for j in 0..d.k() {
                let dot = c
                    .generator()
                    .row(i)
                    .iter()
                    .zip(d.generator().row(j))
                    .fold(0u32, |acc, (&a, &b)| f.add_raw(acc, f.mul_raw(a, b)));
                assert_eq!(dot, 0);
            }
        }
    }

    #[test]
    fn dual_of_extremes() {
        let f = gf(3);
        let full = LinearCode::full_space(&f, 4);
        let zero = LinearCode::zero_code(&f, 4);
        assert_eq!(full.dual(), zero);
        assert_eq!(zero.dual(), full);
    }

    #[test]
    fn contains_and_intersection_basics() {
        let f = gf(2);
        let c = LinearCode::from_generator(
            Matrix::from_rows(&f, &[vec![1, 0, 0, 1], vec![0, 1, 1, 0]]).unwrap(),
        );
        assert!(c.contains(&c).unwrap());
        let sub = LinearCode::from_generator(Matrix::from_rows(&f, &[vec![1, 1, 1, 1]]).unwrap());
        assert!(c.contains(&sub).unwrap());
        assert!(!sub.contains(&c).unwrap());
        assert_eq!(c.intersection(&c).unwrap(), c);
        let full = LinearCode::full_space(&f, 4);
        assert_eq!(c.intersection(&full).unwrap(), c);
    }

    #[test]
    fn intersection_dimension_bounds() {
        let f = gf(2);
        let a = LinearCode::from_generator(
            Matrix::from_rows(&f, &[vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 1, 0]]).unwrap(),
        );
        let b = LinearCode::from_generator(
            Matrix::from_rows(&f, &[vec![0, 1, 0, 0], vec![0, 0, 0, 1]]).unwrap(),
        );
        let i = a.intersection(&b).unwrap();
        let lower = (a.k() + b.k()).saturating_sub(a.n());
        assert!(i.k() >= lower);
        assert!(i.k() <= a.k().min(b.k()));
    }

    #[test]
    fn min_weight_zero_code_is_infinite() {
        let f = gf(2);
        let z = LinearCode::zero_code(&f, 6);
        let r = z.min_weight(DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(r.min_weight, MinWeight::Infinite);
        assert_eq!(r.witness, None);
    }

    #[test]
    fn relative_weight_of_self_is_infinite() {
        let f = gf(2);
        let c = LinearCode::from_generator(
            Matrix::from_rows(&f, &[vec![1, 1, 0], vec![0, 1, 1]]).unwrap(),
        );
        let r = c.relative_min_weight(&c, DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(r.min_weight, MinWeight::Infinite);
    }

    #[test]
    fn repetition_code_weights() {
        for q in [2u64, 3, 4, 5] {
            let f = gf(q);
            let n = 5;
            let c = LinearCode::from_generator(Matrix::from_rows(&f, &[vec![1; n]]).unwrap());
            let r = c.min_weight(DEFAULT_ENUMERATION_CAP).unwrap();
            assert_eq!(r.min_weight, MinWeight::Finite(n as u64));
            assert_eq!(r.enumerated, q - 1);
            // Lex-smallest witness is the all-ones word.
            assert_eq!(r.witness.unwrap(), vec![1; n]);
        }
    }

    #[test]
    fn kernels_agree_with_reference() {
        // Hamming [7,4,3] over GF(2).
        let f = gf(2);
        let rows = vec![
            vec![1, 0, 0, 0, 1, 1, 0],
            vec![0, 1, 0, 0, 1, 0, 1],
            vec![0, 0, 1, 0, 0, 1, 1],
            vec![0, 0, 0, 1, 1, 1, 1],
        ];
        let c = LinearCode::from_generator(Matrix::from_rows(&f, &rows).unwrap());
        let fast = c.min_weight(DEFAULT_ENUMERATION_CAP).unwrap();
        let slow = min_weight_reference(&c, None);
        assert_eq!(fast.min_weight, MinWeight::Finite(3));
        assert_eq!(fast.min_weight, slow.min_weight);
        assert_eq!(fast.witness, slow.witness);
        assert_eq!(fast.enumerated, slow.enumerated);

        let sub = LinearCode::from_generator(Matrix::from_rows(&f, &[rows[0].clone()]).unwrap());
        let fast = c
            .relative_min_weight(&sub, DEFAULT_ENUMERATION_CAP)
            .unwrap();
        let slow = min_weight_reference(&c, Some(&sub));
        assert_eq!(fast.min_weight, slow.min_weight);
        assert_eq!(fast.witness, slow.witness);
    }

    #[test]
    fn gf4_kernel_agrees_with_reference() {
        let f = gf(4);
        let rows = vec![
            vec![1, 0, 0, 1, 2, 3],
            vec![0, 1, 0, 3, 1, 2],
            vec![0, 0, 1, 2, 3, 1],
        ];
        let c = LinearCode::from_generator(Matrix::from_rows(&f, &rows).unwrap());
        let fast = c.min_weight(DEFAULT_ENUMERATION_CAP).unwrap();
        let slow = min_weight_reference(&c, None);
        assert_eq!(fast.min_weight, slow.min_weight);
        assert_eq!(fast.witness, slow.witness);

        let sub = LinearCode::from_generator(Matrix::from_rows(&f, &[rows[2].clone()]).unwrap());
        let fast = c
            .relative_min_weight(&sub, DEFAULT_ENUMERATION_CAP)
            .unwrap();
        let slow = min_weight_reference(&c, Some(&sub));
        assert_eq!(fast.min_weight, slow.min_weight);
        assert_eq!(fast.witness, slow.witness);
    }

    #[test]
    fn generic_kernel_agrees_with_reference() {
        for q in [3u64, 5, 7] {
            let f = gf(q);
            let rows = vec![vec![1, 0, 2, 1, 1], vec![0, 1, 1, 2, 1]];
            let c = LinearCode::from_generator(Matrix::from_rows(&f, &rows).unwrap());
            let fast = c.min_weight(DEFAULT_ENUMERATION_CAP).unwrap();
            let slow = min_weight_reference(&c, None);
            assert_eq!(fast.min_weight, slow.min_weight);
            assert_eq!(fast.witness, slow.witness);
        }
    }

    #[test]
    fn sphere_matches_message_space() {
        let f = gf(2);
        let rows = vec![
            vec![1, 0, 0, 0, 1, 1, 0],
            vec![0, 1, 0, 0, 1, 0, 1],
            vec![0, 0, 1, 0, 0, 1, 1],
            vec![0, 0, 0, 1, 1, 1, 1],
        ];
        let c = LinearCode::from_generator(Matrix::from_rows(&f, &rows).unwrap());
        let full = c.min_weight(DEFAULT_ENUMERATION_CAP).unwrap();
        let sphere = enumerate_sphere_for_tests(&c, None);
        assert_eq!(sphere.method, EnumMethod::Sphere);
        assert_eq!(sphere.min_weight, full.min_weight);
        let sub = LinearCode::from_generator(Matrix::from_rows(&f, &[rows[0].clone()]).unwrap());
        let full = c
            .relative_min_weight(&sub, DEFAULT_ENUMERATION_CAP)
            .unwrap();
        let sphere = enumerate_sphere_for_tests(&c, Some(&sub));
        assert_eq!(sphere.min_weight, full.min_weight);
    }

    fn enumerate_sphere_for_tests(c: &LinearCode, exclude: Option<&LinearCode>) -> WeightReport {
        super::enumerate::sphere(c, exclude, DEFAULT_ENUMERATION_CAP).unwrap()
    }

    #[test]
    fn sphere_on_high_rate_code() {
        // Single-parity-check code [26,25,2]: the message space exceeds the
        // default cap, so min_weight takes the sphere route automatically.
        let f = gf(2);
        let n = 26;
        let rows: Vec<Vec<u32>> = (0..n - 1)
            .map(|i| {
                let mut r = vec![0u32; n];
                r[i] = 1;
                r[n - 1] = 1;
                r
            })
            .collect();
        let c = LinearCode::from_generator(Matrix::from_rows(&f, &rows).unwrap());
        assert_eq!(c.k(), 25);
        let rep = c.min_weight(DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(rep.method, EnumMethod::Sphere);
        assert_eq!(rep.min_weight, MinWeight::Finite(2));
        // Lex-smallest weight-2 witness puts its support last.
        let mut expected = vec![0u32; n];
        expected[n - 2] = 1;
        expected[n - 1] = 1;
        assert_eq!(rep.witness.unwrap(), expected);
    }

    #[test]
    fn sphere_budget_exhaustion() {
        let f = gf(2);
        let c = LinearCode::from_generator(
            Matrix::from_rows(
                &f,
                &(0..10u32)
                    .map(|i| {
                        let mut r = vec![0u32; 30];
                        r[i as usize] = 1;
                        r[29 - i as usize] = 1;
                        r
                    })
                    .collect::<Vec<_>>(),
            )
            .unwrap(),
        );
        let err = c.min_weight(3).unwrap_err();
        assert!(matches!(
            err,
            LinearError::TooLargeToEnumerate { cap: 3, .. }
        ));
    }

    #[test]
    fn min_weight_lower_bounds_relative() {
        let f = gf(2);
        let rows = vec![vec![1, 1, 1, 1, 0, 0], vec![0, 0, 1, 1, 1, 1]];
        let c = LinearCode::from_generator(Matrix::from_rows(&f, &rows).unwrap());
        let d = LinearCode::from_generator(Matrix::from_rows(&f, &[rows[0].clone()]).unwrap());
        let abs = c.min_weight(DEFAULT_ENUMERATION_CAP).unwrap();
        let rel = c.relative_min_weight(&d, DEFAULT_ENUMERATION_CAP).unwrap();
        assert!(abs.min_weight.finite().unwrap() <= rel.min_weight.finite().unwrap());
    }

    #[test]
    fn singleton_bound_on_brute_forced_codes() {
        for q in [2u64, 3, 4] {
            let f = gf(q);
            let rows = vec![vec![1, 0, 1, 1, 0, 1], vec![0, 1, 0, 1, 1, 1]];
            let c = LinearCode::from_generator(Matrix::from_rows(&f, &rows).unwrap());
            let d = c
                .min_weight(DEFAULT_ENUMERATION_CAP)
                .unwrap()
                .min_weight
                .finite()
                .unwrap();
            assert!(d as usize <= c.n() - c.k() + 1);
        }
    }
}
