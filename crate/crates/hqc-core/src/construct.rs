//! Binary parity-check matrices from q-ary codes.
//!
//! The main operation replaces every symbol of the n x q^k codeword array by
//! the length-q unit column indicating its value, giving an nq x q^k binary
//! matrix whose nullspace is the constructed code. Also here: the disjunct
//! value machinery and the (q-1)-fold matrix dispersion construction for
//! dimension-2 MDS codes.

use alloc::vec::Vec;
use alloc::vec;
use core::fmt;

use crate::bits::{BinaryMatrix, BitVec};
use crate::codes::{CodeError, CodeKind, EvalCode, QaryMatrix, DEFAULT_ENUMERATION_BUDGET};
use crate::gf::FieldElement;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstructError {
    Code(CodeError),
    /// The disjunct value formula needs d < n.
    DisjunctUndefined { n: usize, d: usize },
    RequiresDimensionTwo { k: usize },
    RequiresReedSolomon,
    /// Matrix dispersion is defined here for n <= q evaluation points.
    TooManyPoints { n: usize, q: usize },
}

impl fmt::Display for ConstructError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructError::Code(e) => write!(f, "{e}"),
            ConstructError::DisjunctUndefined { n, d } => {
                write!(f, "disjunct value undefined for d={d} >= n={n}")
            }
            ConstructError::RequiresDimensionTwo { k } => {
                write!(f, "matrix dispersion needs a dimension-2 code, got k={k}")
            }
            ConstructError::RequiresReedSolomon => {
                write!(f, "matrix dispersion is implemented for Reed-Solomon inputs")
            }
            ConstructError::TooManyPoints { n, q } => {
                write!(f, "matrix dispersion supports n <= q, got n={n}, q={q}")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ConstructError {}

impl From<CodeError> for ConstructError {
    fn from(e: CodeError) -> Self {
        ConstructError::Code(e)
    }
}

/// Replaces each symbol of `m` (lexicographic index i) with the length-q unit
/// column having its 1 in block position i. Every column of the result has
/// weight equal to the number of rows of `m`, and within each q-row block the
/// column sums are exactly 1.
pub fn expand_ks(m: &QaryMatrix) -> BinaryMatrix {
    let q = m.q();
    let mut out = BinaryMatrix::zeros(m.rows() * q, m.cols());
    for j in 0..m.rows() {
        for col in 0..m.cols() {
            out.set(j * q + m.get(j, col).index(), col, true);
        }
    }
    out
}

/// The binary parity-check matrix of a code: enumerate the codewords in
/// message order and expand symbols to unit columns.
pub fn build_hc(code: &EvalCode) -> Result<BinaryMatrix, CodeError> {
    build_hc_with_budget(code, DEFAULT_ENUMERATION_BUDGET)
}

pub fn build_hc_with_budget(code: &EvalCode, budget: u64) -> Result<BinaryMatrix, CodeError> {
    Ok(expand_ks(&code.enumerate_codewords(budget)?))
}

/// floor((n-1)/(n-d)) for an [n, k, d] starting code.
pub fn disjunct_value(n: usize, d: usize) -> Result<u64, ConstructError> {
    if d >= n {
        return Err(ConstructError::DisjunctUndefined { n, d });
    }
    Ok(((n - 1) / (n - d)) as u64)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisjunctViolation {
    pub designated: usize,
    pub others: Vec<usize>,
}

/// Result of exhaustive disjunctness verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisjunctReport {
    /// The value that was to be confirmed.
    pub claimed: u64,
    /// Largest D' <= claimed for which every selection was checked and passed.
    pub verified_to: u64,
    pub budget_exhausted: bool,
    pub violation: Option<DisjunctViolation>,
}

impl DisjunctReport {
    pub fn verified(&self) -> bool {
        self.verified_to == self.claimed && !self.budget_exhausted
    }
}

/// Checks D-disjunctness levels 1..=claimed exhaustively: for every selection
/// of D+1 columns and every designated column among them, some row must have
/// a 1 in the designated column and 0 in the other D. `budget` caps the total
/// number of column selections examined.
pub fn verify_disjunct(m: &BinaryMatrix, claimed: u64, budget: u64) -> DisjunctReport {
    let cols: Vec<BitVec> = m.columns();
    let mut examined: u64 = 0;
    for level in 1..=claimed {
        let size = level as usize + 1;
        if size > cols.len() {
            // no selections of this size exist
            continue;
        }
        let mut comb: Vec<usize> = (0..size).collect();
        loop {
            examined += 1;
            if examined > budget {
                return DisjunctReport {
                    claimed,
                    verified_to: level - 1,
                    budget_exhausted: true,
                    violation: None,
                };
            }
            if let Some(designated) = selection_violation(&cols, &comb) {
                let others = comb.iter().copied().filter(|&i| i != designated).collect();
                return DisjunctReport {
                    claimed,
                    verified_to: level - 1,
                    budget_exhausted: false,
                    violation: Some(DisjunctViolation { designated, others }),
                };
            }
            if !next_combination(&mut comb, cols.len()) {
                break;
            }
        }
    }
    DisjunctReport {
        claimed,
        verified_to: claimed,
        budget_exhausted: false,
        violation: None,
    }
}

/// Returns a designated column of the selection that is covered by the union
/// of the others, if any.
fn selection_violation(cols: &[BitVec], comb: &[usize]) -> Option<usize> {
    let size = comb.len();
    let rows = cols[comb[0]].len();
    // prefix[i] = OR of cols[comb[..i]], suffix[i] = OR of cols[comb[i..]]
    let mut prefix = vec![BitVec::zeros(rows); size + 1];
    for i in 0..size {
        let mut v = prefix[i].clone();
        or_assign(&mut v, &cols[comb[i]]);
        prefix[i + 1] = v;
    }
    let mut suffix = vec![BitVec::zeros(rows); size + 1];
    for i in (0..size).rev() {
        let mut v = suffix[i + 1].clone();
        or_assign(&mut v, &cols[comb[i]]);
        suffix[i] = v;
    }
    for (i, &designated) in comb.iter().enumerate() {
        let mut union = prefix[i].clone();
        or_assign(&mut union, &suffix[i + 1]);
        if !escapes(&cols[designated], &union) {
            return Some(designated);
        }
    }
    None
}

fn or_assign(a: &mut BitVec, b: &BitVec) {
    for i in b.support() {
        a.set(i, true);
    }
}

/// True when `col` has a 1 in some row where `union` is 0.
fn escapes(col: &BitVec, union: &BitVec) -> bool {
    col.support().iter().any(|&i| !union.get(i))
}

fn next_combination(comb: &mut [usize], n: usize) -> bool {
    let k = comb.len();
    for i in (0..k).rev() {
        if comb[i] < n - (k - i) {
            comb[i] += 1;
            for j in i + 1..k {
                comb[j] = comb[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Output of the (q-1)-fold matrix dispersion construction.
#[derive(Debug, Clone)]
pub struct MatrixDispersion {
    /// The n(q-1) x (q^2-1) parity-check matrix (transpose of the dispersed
    /// representative array).
    pub h_ii: BinaryMatrix,
    /// The (q+1) x n array of class representatives' symbols.
    pub w_mds: QaryMatrix,
    /// Message indices of the representative codewords, in class order.
    pub class_representatives: Vec<u64>,
}

/// Builds the dispersion parity-check matrix for an [n, 2, n-1] Reed-Solomon
/// code with n <= q.
///
/// The q^2 - 1 nonzero codewords split into q + 1 classes of size q - 1, each
/// closed under nonzero scalar multiplication. Classes 0..n-1 hold the
/// weight-(n-1) words vanishing at position i, represented by x - b_i (b_i
/// the i-th evaluation point); the remaining root classes follow in power
/// order, and the constants class comes last. Each representative symbol a^e
/// is replaced by the (q-1) x (q-1) circulant with first row u_e (positions
/// 0..q-2), the zero symbol by the zero block; the transpose of the dispersed
/// array is returned.
pub fn construction2_build(code: &EvalCode) -> Result<MatrixDispersion, ConstructError> {
    let CodeKind::ReedSolomon { points } = code.kind() else {
        return Err(ConstructError::RequiresReedSolomon);
    };
    if code.k() != 2 {
        return Err(ConstructError::RequiresDimensionTwo { k: code.k() });
    }
    let field = code.field();
    let (n, q) = (code.n(), code.q());
    if n > q {
        return Err(ConstructError::TooManyPoints { n, q });
    }

    // representative polynomials: x - b_i for eval points, x - g for the
    // remaining roots in power order, then the constant 1
    let mut roots: Vec<FieldElement> = points.clone();
    let in_points = |e: FieldElement| points.iter().any(|&p| p == e);
    for e in field.power_ordering() {
        if !in_points(e) {
            roots.push(e);
        }
    }
    debug_assert_eq!(roots.len(), q);

    let mut w_rows: Vec<Vec<FieldElement>> = Vec::with_capacity(q + 1);
    let mut reps: Vec<u64> = Vec::with_capacity(q + 1);
    for &root in &roots {
        w_rows.push(points.iter().map(|&b| field.sub(b, root)).collect());
        // polynomial x - root has constant coefficient -root
        reps.push(field.neg(root).index() as u64 + (q as u64));
    }
    w_rows.push(vec![field.one(); n]);
    reps.push(1);
    let w_mds = QaryMatrix::from_rows(q, w_rows)?;

    let qm1 = q - 1;
    let mut dispersed = BinaryMatrix::zeros((q + 1) * qm1, n * qm1);
    for i in 0..=q {
        for j in 0..n {
            let Some(e) = field.log(w_mds.get(i, j)) else {
                continue; // zero symbol -> zero block
            };
            for s in 0..qm1 {
                dispersed.set(i * qm1 + s, j * qm1 + (e + s) % qm1, true);
            }
        }
    }

    Ok(MatrixDispersion {
        h_ii: dispersed.transpose(),
        w_mds,
        class_representatives: reps,
    })
}
