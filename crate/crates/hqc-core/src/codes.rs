//! q-ary evaluation codes with a total codeword ordering.
//!
//! Codewords are indexed by their message vector read as a base-q integer
//! with the first message symbol (equivalently, the constant coefficient of
//! the code polynomial) varying fastest. For polynomial codes this is the
//! p-ary lexicographic ordering of the defining polynomials, so codeword 0 is
//! the zero word and consecutive blocks of q codewords are the constant
//! shifts of a common representative whenever the code contains the all-ones
//! word.

use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};
use core::fmt;

use crate::gf::{FieldElement, FieldSpec, GfError};

/// Default cap on the number of codewords materialized by enumeration.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CodeError {
    Field(GfError),
    DuplicatePoints,
    /// k must satisfy 1 <= k <= n.
    BadDimension { n: usize, k: usize },
    /// Total degree bound out of [0, m(q-1)].
    RhoOutOfRange { rho: usize, max: usize },
    NoVariables,
    EmptyCode,
    RankDeficient,
    /// q^k exceeds the enumeration budget.
    BudgetExceeded { codewords: u64, budget: u64 },
    RowLengthMismatch,
}

impl fmt::Display for CodeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeError::Field(e) => write!(f, "field error: {e}"),
            CodeError::DuplicatePoints => write!(f, "evaluation points must be distinct"),
            CodeError::BadDimension { n, k } => write!(f, "dimension k={k} invalid for length n={n}"),
            CodeError::RhoOutOfRange { rho, max } => write!(f, "degree bound {rho} out of range 0..={max}"),
            CodeError::NoVariables => write!(f, "Reed-Muller codes need at least one variable"),
            CodeError::EmptyCode => write!(f, "generator matrix has no rows"),
            CodeError::RankDeficient => write!(f, "generator matrix is not full row rank"),
            CodeError::BudgetExceeded { codewords, budget } => {
                write!(f, "enumeration of {codewords} codewords exceeds budget {budget}")
            }
            CodeError::RowLengthMismatch => write!(f, "matrix rows have inconsistent lengths"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for CodeError {}

impl From<GfError> for CodeError {
    fn from(e: GfError) -> Self {
        CodeError::Field(e)
    }
}

/// A dense matrix over GF(q), row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QaryMatrix {
    q: usize,
    rows: usize,
    cols: usize,
    entries: Vec<FieldElement>,
}

impl QaryMatrix {
    pub fn zeros(q: usize, rows: usize, cols: usize) -> Self {
        QaryMatrix {
            q,
            rows,
            cols,
            entries: vec![FieldElement::default(); rows * cols],
        }
    }

    pub fn from_rows(q: usize, rows: Vec<Vec<FieldElement>>) -> Result<Self, CodeError> {
        if rows.is_empty() {
            return Err(CodeError::EmptyCode);
        }
        let cols = rows[0].len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(CodeError::RowLengthMismatch);
        }
        Ok(QaryMatrix {
            q,
            rows: rows.len(),
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn q(&self) -> usize {
        self.q
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<FieldElement> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    /// Row rank over the given field.
    pub fn rank(&self, field: &FieldSpec) -> usize {
        let mut m = self.clone();
        m.rref_in_place(field).len()
    }

    fn rref_in_place(&mut self, field: &FieldSpec) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(piv) = (rank..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            for c in 0..self.cols {
                self.entries.swap(piv * self.cols + c, rank * self.cols + c);
            }
            let inv = field.inv(self.get(rank, col)).expect("pivot is nonzero");
            for c in 0..self.cols {
                self.set(rank, c, field.mul(self.get(rank, c), inv));
            }
            for r in 0..self.rows {
                let f = self.get(r, col);
                if r != rank && !f.is_zero() {
                    for c in 0..self.cols {
                        let v = field.sub(self.get(r, c), field.mul(f, self.get(rank, c)));
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        pivots
    }

    /// Whether `v` lies in the row space.
    pub fn row_space_contains(&self, field: &FieldSpec, v: &[FieldElement]) -> bool {
        assert_eq!(v.len(), self.cols);
        let mut m = self.clone();
        let pivots = m.rref_in_place(field);
        let mut v = v.to_vec();
        for (row, &p) in pivots.iter().enumerate() {
            let f = v[p];
            if !f.is_zero() {
                for c in 0..self.cols {
                    v[c] = field.sub(v[c], field.mul(f, m.get(row, c)));
                }
            }
        }
        v.iter().all(|e| e.is_zero())
    }
}

/// How the code is presented.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CodeKind {
    ReedSolomon { points: Vec<FieldElement> },
    ReedMuller { m: usize, rho: usize },
    Generic,
}

/// A linear [n, k] code over GF(q) with an explicit generator matrix and a
/// total codeword ordering by message index.
#[derive(Debug, Clone)]
pub struct EvalCode {
    field: FieldSpec,
    kind: CodeKind,
    generator: QaryMatrix,
}

impl EvalCode {
    /// Reed-Solomon code: evaluations of polynomials of degree < k at the
    /// given distinct points. Generator row j is the evaluation of x^j, so
    /// message digit j is the coefficient of x^j.
    pub fn reed_solomon(
        field: FieldSpec,
        points: Vec<FieldElement>,
        k: usize,
    ) -> Result<Self, CodeError> {
        let n = points.len();
        if k < 1 || k > n {
            return Err(CodeError::BadDimension { n, k });
        }
        let mut seen = vec![false; field.q()];
        for pt in &points {
            if seen[pt.index()] {
                return Err(CodeError::DuplicatePoints);
            }
            seen[pt.index()] = true;
        }
        let mut gen = QaryMatrix::zeros(field.q(), k, n);
        for (i, &pt) in points.iter().enumerate() {
            let mut pw = field.one();
            for j in 0..k {
                gen.set(j, i, pw);
                pw = field.mul(pw, pt);
            }
        }
        Ok(EvalCode {
            field,
            kind: CodeKind::ReedSolomon { points },
            generator: gen,
        })
    }

    /// Reed-Solomon code on the first n points in lexicographic order.
    pub fn reed_solomon_lex(field: FieldSpec, n: usize, k: usize) -> Result<Self, CodeError> {
        if n > field.q() {
            return Err(CodeError::BadDimension { n, k });
        }
        let points: Vec<FieldElement> = (0..n).map(|i| field.element(i).unwrap()).collect();
        Self::reed_solomon(field, points, k)
    }

    /// Reed-Muller code: evaluations over all of GF(q)^m of the m-variate
    /// polynomials with total degree <= rho and individual degrees <= q-1.
    ///
    /// Evaluation point t has coordinates X_i = element((t / q^(i-1)) mod q),
    /// the last coordinate varying slowest. Basis monomials are ordered by
    /// total degree, ties broken on exponent tuples with X_1 most
    /// significant; message digit j is the coefficient of basis monomial j.
    pub fn reed_muller(field: FieldSpec, m: usize, rho: usize) -> Result<Self, CodeError> {
        if m < 1 {
            return Err(CodeError::NoVariables);
        }
        let q = field.q();
        let max = m * (q - 1);
        if rho > max {
            return Err(CodeError::RhoOutOfRange { rho, max });
        }
        let mut n: u64 = 1;
        for _ in 0..m {
            n = n.checked_mul(q as u64).filter(|&v| v <= 1 << 24).ok_or(
                CodeError::BudgetExceeded {
                    codewords: u64::MAX,
                    budget: 1 << 24,
                },
            )?;
        }
        let n = n as usize;

        let mut monomials: Vec<Vec<usize>> = Vec::new();
        let mut exps = vec![0usize; m];
        'enumerate: loop {
            if exps.iter().sum::<usize>() <= rho {
                monomials.push(exps.clone());
            }
            // odometer over exponent tuples, bounded by q-1 per variable
            let mut pos = 0;
            loop {
                if pos == m {
                    break 'enumerate;
                }
                if exps[pos] < q - 1 {
                    exps[pos] += 1;
                    for e in exps[..pos].iter_mut() {
                        *e = 0;
                    }
                    break;
                }
                pos += 1;
            }
        }
        monomials.sort_by(|a, b| {
            let (da, db) = (a.iter().sum::<usize>(), b.iter().sum::<usize>());
            da.cmp(&db).then_with(|| a.cmp(b))
        });

        let mut gen = QaryMatrix::zeros(q, monomials.len(), n);
        for t in 0..n {
            let mut coords = Vec::with_capacity(m);
            let mut tt = t;
            for _ in 0..m {
                coords.push(field.element(tt % q).unwrap());
                tt /= q;
            }
            for (j, mono) in monomials.iter().enumerate() {
                let mut v = field.one();
                for (x, &e) in coords.iter().zip(mono) {
                    v = field.mul(v, field.pow(*x, e as i64).unwrap());
                }
                gen.set(j, t, v);
            }
        }
        Ok(EvalCode {
            field,
            kind: CodeKind::ReedMuller { m, rho },
            generator: gen,
        })
    }

    /// Code presented by an arbitrary full-row-rank generator matrix.
    pub fn generic(field: FieldSpec, generator: QaryMatrix) -> Result<Self, CodeError> {
        if generator.rows() == 0 {
            return Err(CodeError::EmptyCode);
        }
        if generator.rank(&field) != generator.rows() {
            return Err(CodeError::RankDeficient);
        }
        Ok(EvalCode {
            field,
            kind: CodeKind::Generic,
            generator,
        })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }
    pub fn kind(&self) -> &CodeKind {
        &self.kind
    }
    pub fn n(&self) -> usize {
        self.generator.cols()
    }
    pub fn k(&self) -> usize {
        self.generator.rows()
    }
    pub fn q(&self) -> usize {
        self.field.q()
    }

    pub fn generator_matrix(&self) -> &QaryMatrix {
        &self.generator
    }

    /// q^k, or None when it overflows u64.
    pub fn num_codewords(&self) -> Option<u64> {
        let mut v: u64 = 1;
        for _ in 0..self.k() {
            v = v.checked_mul(self.q() as u64)?;
        }
        Some(v)
    }

    /// The designed minimum distance, known without search: n-k+1 for
    /// Reed-Solomon codes (MDS).
    pub fn designed_distance(&self) -> Option<usize> {
        match self.kind {
            CodeKind::ReedSolomon { .. } => Some(self.n() - self.k() + 1),
            _ => None,
        }
    }

    fn message_digits(&self, index: u64) -> Vec<FieldElement> {
        let q = self.q() as u64;
        let mut digits = Vec::with_capacity(self.k());
        let mut i = index;
        for _ in 0..self.k() {
            digits.push(self.field.element((i % q) as usize).unwrap());
            i /= q;
        }
        digits
    }

    /// The codeword with the given message index.
    pub fn codeword(&self, index: u64) -> Vec<FieldElement> {
        let digits = self.message_digits(index);
        let mut out = vec![self.field.zero(); self.n()];
        for (j, &c) in digits.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, &g) in out.iter_mut().zip(self.generator.row(j)) {
                *o = self.field.add(*o, self.field.mul(c, g));
            }
        }
        out
    }

    /// Walks all q^k codewords in message order, passing each to `f` with
    /// its index. The message digit odometer updates the running codeword by
    /// the scaled generator row of each digit that changes.
    fn for_each_codeword(
        &self,
        budget: u64,
        mut f: impl FnMut(usize, &[FieldElement]),
    ) -> Result<(), CodeError> {
        let total = self.num_codewords().ok_or(CodeError::BudgetExceeded {
            codewords: u64::MAX,
            budget,
        })?;
        if total > budget {
            return Err(CodeError::BudgetExceeded {
                codewords: total,
                budget,
            });
        }
        let q = self.q();
        let mut cw = vec![self.field.zero(); self.n()];
        let mut digits = vec![0usize; self.k()];
        for idx in 0..total as usize {
            f(idx, &cw);
            if idx + 1 == total as usize {
                break;
            }
            let mut j = 0;
            loop {
                let old = digits[j];
                let new = if old + 1 == q { 0 } else { old + 1 };
                digits[j] = new;
                let delta = self.field.sub(
                    self.field.element(new).unwrap(),
                    self.field.element(old).unwrap(),
                );
                for (o, &g) in cw.iter_mut().zip(self.generator.row(j)) {
                    *o = self.field.add(*o, self.field.mul(delta, g));
                }
                if new != 0 {
                    break;
                }
                j += 1;
            }
        }
        Ok(())
    }

    /// All q^k codewords as the columns of an n x q^k matrix, ordered by
    /// message index. Column 0 is the zero word.
    pub fn enumerate_codewords(&self, budget: u64) -> Result<QaryMatrix, CodeError> {
        let total = self.num_codewords().filter(|&t| t <= budget).ok_or(
            CodeError::BudgetExceeded {
                codewords: self.num_codewords().unwrap_or(u64::MAX),
                budget,
            },
        )?;
        let n = self.n();
        let mut out = QaryMatrix::zeros(self.q(), n, total as usize);
        self.for_each_codeword(budget, |idx, cw| {
            for (j, &e) in cw.iter().enumerate() {
                out.set(j, idx, e);
            }
        })?;
        Ok(out)
    }

    /// Closure of the codeword set under addition of constant vectors.
    /// For a linear code this is membership of the all-ones word.
    pub fn has_field_partition_property(&self) -> bool {
        let ones = vec![self.field.one(); self.n()];
        self.generator.row_space_contains(&self.field, &ones)
    }

    fn scan_weights(&self, budget: u64) -> Result<Vec<u64>, CodeError> {
        let mut counts = vec![0u64; self.n() + 1];
        self.for_each_codeword(budget, |_, cw| {
            counts[cw.iter().filter(|e| !e.is_zero()).count()] += 1;
        })?;
        Ok(counts)
    }

    /// Exact minimum Hamming weight over the nonzero codewords.
    pub fn min_distance_qary(&self, budget: u64) -> Result<usize, CodeError> {
        let counts = self.scan_weights(budget)?;
        counts
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, &c)| c > 0)
            .map(|(w, _)| w)
            .ok_or(CodeError::EmptyCode)
    }

    /// coefficient[w] = number of codewords of weight w.
    pub fn qary_weight_enumerator(&self, budget: u64) -> Result<Vec<u64>, CodeError> {
        self.scan_weights(budget)
    }

    /// Short human-readable parameter string like "[3,2]_4".
    pub fn param_string(&self) -> String {
        format!("[{},{}]_{}", self.n(), self.k(), self.q())
    }
}
