//! Compact multivariate-polynomial representation of hierarchical
//! quasi-cyclic matrices.
//!
//! A K-level matrix is a J x L grid of K-variate polynomials with 0/1
//! coefficients. A term with exponents (s_1, ..., s_K) stands for the
//! Kronecker product I_(t_K,s_K) (x) ... (x) I_(t_1,s_1), where I_(t,s) is
//! the t x t identity cyclically shifted s positions to the left, i.e.
//! I_(t,s)[i][j] = 1 iff j = i - s (mod t). Levels are indexed 0..K-1 here
//! and printed as x0, x1, ...; level 0 is the innermost Kronecker factor
//! (the fastest-varying index).

use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};
use core::fmt;

use crate::bits::BinaryMatrix;
use crate::codes::{CodeError, EvalCode};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HqcError {
    Code(CodeError),
    /// Lifting degrees must all be >= 1 (and there must be at least one level).
    BadLifts,
    ExponentOutOfRange { level: usize, exponent: u32, lift: u32 },
    TermArityMismatch { expected: usize, got: usize },
    /// The block at (row, col) is not a permutation matrix.
    BlockNotPermutation { row: usize, col: usize },
    /// The block at (row, col) is a permutation but not a Kronecker product
    /// of shifted identities.
    NotKroneckerForm { row: usize, col: usize },
    /// Extraction needs the code to contain all constant vectors.
    FieldPartitionRequired,
    DimensionMismatch { rows: usize, cols: usize, expected_rows: usize, expected_cols: usize },
    BlockSizeMismatch { expected: usize, got: usize },
    /// Block size must divide both matrix dimensions.
    IndivisibleBlockSize { t: usize, rows: usize, cols: usize },
}

impl fmt::Display for HqcError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HqcError::Code(e) => write!(f, "{e}"),
            HqcError::BadLifts => write!(f, "lifting degrees must be positive"),
            HqcError::ExponentOutOfRange { level, exponent, lift } => {
                write!(f, "exponent {exponent} on level {level} exceeds lift {lift} - 1")
            }
            HqcError::TermArityMismatch { expected, got } => {
                write!(f, "term has {got} exponents, expected {expected}")
            }
            HqcError::BlockNotPermutation { row, col } => {
                write!(f, "block ({row}, {col}) is not a permutation matrix")
            }
            HqcError::NotKroneckerForm { row, col } => {
                write!(f, "block ({row}, {col}) is not a Kronecker product of shifted identities")
            }
            HqcError::FieldPartitionRequired => {
                write!(f, "code lacks the field partition property")
            }
            HqcError::DimensionMismatch { rows, cols, expected_rows, expected_cols } => {
                write!(f, "matrix is {rows}x{cols}, expected {expected_rows}x{expected_cols}")
            }
            HqcError::BlockSizeMismatch { expected, got } => {
                write!(f, "block is {got}x{got}, expected {expected}x{expected}")
            }
            HqcError::IndivisibleBlockSize { t, rows, cols } => {
                write!(f, "block size {t} does not divide {rows}x{cols}")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for HqcError {}

impl From<CodeError> for HqcError {
    fn from(e: CodeError) -> Self {
        HqcError::Code(e)
    }
}

/// A polynomial with 0/1 coefficients; each term is one exponent tuple.
/// Adding a term twice cancels it (coefficients are mod 2).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: Vec<Vec<u32>>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    /// The constant 1 (all exponents zero).
    pub fn one(levels: usize) -> Self {
        Polynomial { terms: vec![vec![0; levels]] }
    }

    pub fn monomial(exponents: Vec<u32>) -> Self {
        Polynomial { terms: vec![exponents] }
    }

    pub fn from_terms(mut terms: Vec<Vec<u32>>) -> Self {
        terms.sort();
        // mod-2 coefficients: equal pairs cancel
        let mut out: Vec<Vec<u32>> = Vec::new();
        for t in terms {
            if out.last() == Some(&t) {
                out.pop();
            } else {
                out.push(t);
            }
        }
        Polynomial { terms: out }
    }

    pub fn add_term(&mut self, exponents: Vec<u32>) {
        match self.terms.binary_search(&exponents) {
            Ok(i) => {
                self.terms.remove(i);
            }
            Err(i) => self.terms.insert(i, exponents),
        }
    }

    pub fn terms(&self) -> &[Vec<u32>] {
        &self.terms
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Renders like "x1^3x0^2", "1" for the empty product, "0" for the zero
    /// polynomial; terms joined with '+', factors from the highest level down.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return String::from("0");
        }
        let mut parts = Vec::with_capacity(self.terms.len());
        for term in &self.terms {
            let mut s = String::new();
            for lv in (0..term.len()).rev() {
                match term[lv] {
                    0 => {}
                    1 => s += &format!("x{lv}"),
                    e => s += &format!("x{lv}^{e}"),
                }
            }
            if s.is_empty() {
                s.push('1');
            }
            parts.push(s);
        }
        parts.join("+")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// J x L grid of polynomials with per-level lifting degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HqcPolyMatrix {
    lifts: Vec<u32>,
    block_rows: usize,
    block_cols: usize,
    entries: Vec<Polynomial>,
}

impl HqcPolyMatrix {
    pub fn zero(lifts: Vec<u32>, block_rows: usize, block_cols: usize) -> Result<Self, HqcError> {
        if lifts.is_empty() || lifts.iter().any(|&t| t == 0) {
            return Err(HqcError::BadLifts);
        }
        Ok(HqcPolyMatrix {
            lifts,
            block_rows,
            block_cols,
            entries: vec![Polynomial::zero(); block_rows * block_cols],
        })
    }

    pub fn from_entries(
        lifts: Vec<u32>,
        block_rows: usize,
        block_cols: usize,
        entries: Vec<Polynomial>,
    ) -> Result<Self, HqcError> {
        assert_eq!(entries.len(), block_rows * block_cols, "entry count");
        let mut m = Self::zero(lifts, block_rows, block_cols)?;
        for (i, p) in entries.into_iter().enumerate() {
            m.check_poly(&p)?;
            m.entries[i] = p;
        }
        Ok(m)
    }

    fn check_poly(&self, p: &Polynomial) -> Result<(), HqcError> {
        for term in p.terms() {
            if term.len() != self.lifts.len() {
                return Err(HqcError::TermArityMismatch {
                    expected: self.lifts.len(),
                    got: term.len(),
                });
            }
            for (lv, (&e, &t)) in term.iter().zip(&self.lifts).enumerate() {
                if e >= t {
                    return Err(HqcError::ExponentOutOfRange { level: lv, exponent: e, lift: t });
                }
            }
        }
        Ok(())
    }

    pub fn levels(&self) -> usize {
        self.lifts.len()
    }

    pub fn lifts(&self) -> &[u32] {
        &self.lifts
    }

    pub fn block_rows(&self) -> usize {
        self.block_rows
    }

    pub fn block_cols(&self) -> usize {
        self.block_cols
    }

    pub fn get(&self, j: usize, l: usize) -> &Polynomial {
        &self.entries[j * self.block_cols + l]
    }

    pub fn set(&mut self, j: usize, l: usize, p: Polynomial) -> Result<(), HqcError> {
        self.check_poly(&p)?;
        self.entries[j * self.block_cols + l] = p;
        Ok(())
    }

    /// Product of the lifting degrees: the expansion block size.
    pub fn lift_product(&self) -> usize {
        self.lifts.iter().map(|&t| t as usize).product()
    }

    /// Dimensions of the expanded binary matrix.
    pub fn expansion_size(&self) -> (usize, usize) {
        let t = self.lift_product();
        (self.block_rows * t, self.block_cols * t)
    }
}

/// Expands each polynomial entry into its sum of Kronecker products of
/// shifted identities (coefficients mod 2).
pub fn expand_poly_matrix(hp: &HqcPolyMatrix) -> BinaryMatrix {
    let t_total = hp.lift_product();
    let levels = hp.levels();
    // stride of level i = product of lower lifts
    let mut strides = vec![1usize; levels];
    for i in 1..levels {
        strides[i] = strides[i - 1] * hp.lifts()[i - 1] as usize;
    }
    let (rows, cols) = hp.expansion_size();
    let mut out = BinaryMatrix::zeros(rows, cols);
    for j in 0..hp.block_rows() {
        for l in 0..hp.block_cols() {
            for term in hp.get(j, l).terms() {
                for row in 0..t_total {
                    let mut col = 0usize;
                    for (i, &s) in term.iter().enumerate() {
                        let t = hp.lifts()[i] as usize;
                        let ri = row / strides[i] % t;
                        let ci = (ri + t - s as usize) % t;
                        col += ci * strides[i];
                    }
                    out.flip(j * t_total + row, l * t_total + col);
                }
            }
        }
    }
    out
}

/// Recovers the shift exponents (a_0, ..., a_(r-1)) of a p^r x p^r block
/// equal to I_(p,a_(r-1)) (x) ... (x) I_(p,a_0), verifying by full
/// reconstruction.
pub fn factor_block(block: &BinaryMatrix, p: usize, r: usize) -> Result<Vec<u32>, HqcError> {
    factor_block_at(block, 0, 0, p, r, block.rows(), block.cols())
}

fn factor_block_at(
    m: &BinaryMatrix,
    r0: usize,
    c0: usize,
    p: usize,
    r: usize,
    rows: usize,
    cols: usize,
) -> Result<Vec<u32>, HqcError> {
    let size = p.pow(r as u32);
    if rows != size || cols != size {
        return Err(HqcError::BlockSizeMismatch { expected: size, got: rows.max(cols) });
    }
    // permutation check + locate the 1 of column 0
    let mut row_of_col0 = None;
    let mut row_seen = vec![false; size];
    let mut col_seen = vec![false; size];
    for i in 0..size {
        let mut ones_in_row = 0;
        for j in 0..size {
            if m.get(r0 + i, c0 + j) {
                ones_in_row += 1;
                if col_seen[j] {
                    return Err(HqcError::BlockNotPermutation { row: r0 / size, col: c0 / size });
                }
                col_seen[j] = true;
                if j == 0 {
                    row_of_col0 = Some(i);
                }
            }
        }
        if ones_in_row != 1 {
            return Err(HqcError::BlockNotPermutation { row: r0 / size, col: c0 / size });
        }
        row_seen[i] = true;
    }
    debug_assert!(row_seen.iter().all(|&b| b));
    // Column 0 has all per-level column indices 0, so its row's base-p digits
    // are exactly the shifts.
    let mut digits = Vec::with_capacity(r);
    let mut v = row_of_col0.expect("permutation has a 1 in column 0");
    for _ in 0..r {
        digits.push((v % p) as u32);
        v /= p;
    }
    // verify by reconstruction
    let mut strides = vec![1usize; r];
    for i in 1..r {
        strides[i] = strides[i - 1] * p;
    }
    for row in 0..size {
        let mut col = 0usize;
        for (i, &s) in digits.iter().enumerate() {
            let ri = row / strides[i] % p;
            col += (ri + p - s as usize) % p * strides[i];
        }
        for j in 0..size {
            if m.get(r0 + row, c0 + j) != (j == col) {
                return Err(HqcError::NotKroneckerForm { row: r0 / size, col: c0 / size });
            }
        }
    }
    Ok(digits)
}

/// Extracts the level-r monomial representation of a matrix built by the
/// unit-vector expansion of a field-partition code over GF(p^r): J = n block
/// rows (one per position), L = q^(k-1) block columns (one per constant-shift
/// class), every entry a single monomial read off its q x q permutation
/// block.
pub fn extract_poly_matrix(h: &BinaryMatrix, code: &EvalCode) -> Result<HqcPolyMatrix, HqcError> {
    let field = code.field();
    let (p, r, q) = (field.p(), field.r(), field.q());
    if !code.has_field_partition_property() {
        return Err(HqcError::FieldPartitionRequired);
    }
    let n = code.n();
    let expected_rows = n * q;
    let cols = h.cols();
    if h.rows() != expected_rows || cols % q != 0 {
        return Err(HqcError::DimensionMismatch {
            rows: h.rows(),
            cols,
            expected_rows,
            expected_cols: cols.next_multiple_of(q),
        });
    }
    let l_blocks = cols / q;
    // level sizes J_i = n p^(r-i), L_i = p^(rk-i) must match the matrix
    let mut pw = 1usize;
    for _ in 0..r {
        pw *= p;
        debug_assert_eq!(expected_rows % pw, 0);
        if cols % pw != 0 {
            return Err(HqcError::DimensionMismatch {
                rows: h.rows(),
                cols,
                expected_rows,
                expected_cols: l_blocks * q,
            });
        }
    }

    let mut out = HqcPolyMatrix::zero(vec![p as u32; r], n, l_blocks)?;
    for j in 0..n {
        for l in 0..l_blocks {
            let digits = factor_block_at(h, j * q, l * q, p, r, q, q)?;
            out.set(j, l, Polynomial::monomial(digits))?;
        }
    }
    Ok(out)
}

/// Per-entry term counts of a polynomial matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightMatrix {
    rows: usize,
    cols: usize,
    counts: Vec<u32>,
}

impl WeightMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn get(&self, j: usize, l: usize) -> u32 {
        self.counts[j * self.cols + l]
    }
    /// The largest entry: the code is quasi-cyclic of this type.
    pub fn type_t(&self) -> u32 {
        self.counts.iter().copied().max().unwrap_or(0)
    }
    pub fn row_entries(&self, j: usize) -> &[u32] {
        &self.counts[j * self.cols..(j + 1) * self.cols]
    }
}

pub fn weight_matrix(hp: &HqcPolyMatrix) -> WeightMatrix {
    WeightMatrix {
        rows: hp.block_rows(),
        cols: hp.block_cols(),
        counts: (0..hp.block_rows())
            .flat_map(|j| (0..hp.block_cols()).map(move |l| hp.get(j, l).term_count() as u32))
            .collect(),
    }
}

/// True iff every t x t block of the matrix is circulant (each row the
/// previous one shifted right by one position).
pub fn is_block_circulant(h: &BinaryMatrix, t: usize) -> Result<bool, HqcError> {
    if t == 0 || h.rows() % t != 0 || h.cols() % t != 0 {
        return Err(HqcError::IndivisibleBlockSize { t, rows: h.rows(), cols: h.cols() });
    }
    for br in 0..h.rows() / t {
        for bc in 0..h.cols() / t {
            for i in 1..t {
                for j in 0..t {
                    if h.get(br * t + i, bc * t + j) != h.get(br * t, bc * t + (j + t - i) % t) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::build_hc;
    use crate::gf::FieldSpec;

    fn gf(q: u32) -> FieldSpec {
        FieldSpec::from_order(q).unwrap()
    }

    #[test]
    fn polynomial_rendering() {
        assert_eq!(Polynomial::zero().render(), "0");
        assert_eq!(Polynomial::one(2).render(), "1");
        assert_eq!(Polynomial::monomial(vec![2, 1]).render(), "x1x0^2");
        let p = Polynomial::from_terms(vec![vec![0], vec![2]]);
        assert_eq!(p.render(), "1+x0^2");
    }

    #[test]
    fn mod2_coefficients_cancel() {
        let p = Polynomial::from_terms(vec![vec![1, 0], vec![1, 0]]);
        assert!(p.is_zero());
        let mut p = Polynomial::monomial(vec![1]);
        p.add_term(vec![1]);
        assert!(p.is_zero());
    }

    #[test]
    fn shifted_identity_convention() {
        // x0^s expands to the t x t identity shifted s columns to the left
        let hp = HqcPolyMatrix::from_entries(vec![4], 1, 1, vec![Polynomial::monomial(vec![1])]).unwrap();
        let m = expand_poly_matrix(&hp);
        // row 0 has its 1 at column t - s = 3
        assert_eq!(m.row(0).support(), vec![3]);
        assert_eq!(m.row(1).support(), vec![0]);
    }

    #[test]
    fn one_expands_to_identity() {
        let hp = HqcPolyMatrix::from_entries(vec![3, 4], 1, 1, vec![Polynomial::one(2)]).unwrap();
        assert_eq!(expand_poly_matrix(&hp), BinaryMatrix::identity(12));
    }

    #[test]
    fn exponent_bounds_enforced() {
        let r = HqcPolyMatrix::from_entries(vec![3], 1, 1, vec![Polynomial::monomial(vec![3])]);
        assert!(matches!(r, Err(HqcError::ExponentOutOfRange { .. })));
        let r = HqcPolyMatrix::from_entries(vec![3], 1, 1, vec![Polynomial::monomial(vec![0, 0])]);
        assert!(matches!(r, Err(HqcError::TermArityMismatch { .. })));
    }

    #[test]
    fn factor_single_level() {
        for p in [2usize, 3, 5] {
            for a in 0..p as u32 {
                let hp = HqcPolyMatrix::from_entries(
                    vec![p as u32],
                    1,
                    1,
                    vec![Polynomial::monomial(vec![a])],
                )
                .unwrap();
                let m = expand_poly_matrix(&hp);
                assert_eq!(factor_block(&m, p, 1).unwrap(), vec![a]);
            }
        }
    }

    #[test]
    fn factor_rejects_non_kronecker_permutation() {
        // swap rows 0 and 1 of I_4: a permutation, but not of shift form
        let mut m = BinaryMatrix::identity(4);
        m.set(0, 0, false);
        m.set(0, 1, true);
        m.set(1, 1, false);
        m.set(1, 0, true);
        assert!(matches!(
            factor_block(&m, 2, 2),
            Err(HqcError::NotKroneckerForm { .. })
        ));
        let z = BinaryMatrix::zeros(4, 4);
        assert!(matches!(
            factor_block(&z, 2, 2),
            Err(HqcError::BlockNotPermutation { .. })
        ));
    }

    #[test]
    fn factor_round_trip_exhaustive_small() {
        // all exponent tuples for p^r in {4, 8, 9, 25, 27}
        for (p, r) in [(2usize, 2u32), (2, 3), (3, 2), (5, 2), (3, 3)] {
            let total = p.pow(r) as u32;
            for idx in 0..total {
                let mut digits = Vec::new();
                let mut v = idx as usize;
                for _ in 0..r {
                    digits.push((v % p) as u32);
                    v /= p;
                }
                let hp = HqcPolyMatrix::from_entries(
                    vec![p as u32; r as usize],
                    1,
                    1,
                    vec![Polynomial::monomial(digits.clone())],
                )
                .unwrap();
                let m = expand_poly_matrix(&hp);
                assert_eq!(factor_block(&m, p, r as usize).unwrap(), digits);
            }
        }
    }

    #[test]
    fn extract_example_code() {
        let code = EvalCode::reed_solomon_lex(gf(4), 3, 2).unwrap();
        let h = build_hc(&code).unwrap();
        let hp = extract_poly_matrix(&h, &code).unwrap();
        assert_eq!((hp.block_rows(), hp.block_cols()), (3, 4));
        assert_eq!(hp.lifts(), &[2, 2]);
        // evaluation point 0 row is all ones
        for l in 0..4 {
            assert_eq!(hp.get(0, l), &Polynomial::one(2));
        }
        assert_eq!(expand_poly_matrix(&hp), h);
    }

    #[test]
    fn extract_requires_fpp() {
        let f = gf(3);
        let gen = crate::codes::QaryMatrix::from_rows(3, vec![vec![f.zero(), f.one()]]).unwrap();
        let code = EvalCode::generic(f, gen).unwrap();
        let h = build_hc(&code).unwrap();
        assert!(matches!(
            extract_poly_matrix(&h, &code),
            Err(HqcError::FieldPartitionRequired)
        ));
    }

    #[test]
    fn weight_matrix_counts() {
        let hp = HqcPolyMatrix::from_entries(
            vec![4],
            2,
            3,
            vec![
                Polynomial::from_terms(vec![vec![0], vec![2]]),
                Polynomial::monomial(vec![1]),
                Polynomial::zero(),
                Polynomial::one(1),
                Polynomial::monomial(vec![3]),
                Polynomial::monomial(vec![2]),
            ],
        )
        .unwrap();
        let w = weight_matrix(&hp);
        assert_eq!(w.row_entries(0), &[2, 1, 0]);
        assert_eq!(w.row_entries(1), &[1, 1, 1]);
        assert_eq!(w.type_t(), 2);
    }

    #[test]
    fn block_circulant_checks() {
        let code = EvalCode::reed_solomon_lex(gf(4), 3, 2).unwrap();
        let h = build_hc(&code).unwrap();
        assert!(is_block_circulant(&h, 2).unwrap());
        assert!(!is_block_circulant(&h, 4).unwrap());
        assert!(matches!(
            is_block_circulant(&h, 5),
            Err(HqcError::IndivisibleBlockSize { .. })
        ));
    }
}
