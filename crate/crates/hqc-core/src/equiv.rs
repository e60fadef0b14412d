//! Monomial and permutation transforms of q-ary codes and their effect on
//! the binary expansion matrices.

use alloc::vec::Vec;
use alloc::vec;
use core::fmt;

use crate::analysis::{code_params, CodeParams, DistanceBudget, weight_enumerator_gf2};
use crate::bits::BinaryMatrix;
use crate::codes::{CodeError, EvalCode, QaryMatrix};
use crate::construct::{build_hc, construction2_build, ConstructError, MatrixDispersion};
use crate::gf::FieldElement;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EquivError {
    Code(CodeError),
    Construct(ConstructError),
    LengthMismatch { expected: usize, got: usize },
    NotAPermutation,
    ZeroDiagonal,
    /// The two codes must share n, k, and q.
    ParameterMismatch,
}

impl fmt::Display for EquivError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EquivError::Code(e) => write!(f, "{e}"),
            EquivError::Construct(e) => write!(f, "{e}"),
            EquivError::LengthMismatch { expected, got } => {
                write!(f, "transform length {got} does not match code length {expected}")
            }
            EquivError::NotAPermutation => write!(f, "permutation images are not a bijection"),
            EquivError::ZeroDiagonal => write!(f, "diagonal entries must be nonzero"),
            EquivError::ParameterMismatch => write!(f, "codes have different [n, k]_q parameters"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for EquivError {}

impl From<CodeError> for EquivError {
    fn from(e: CodeError) -> Self {
        EquivError::Code(e)
    }
}

impl From<ConstructError> for EquivError {
    fn from(e: ConstructError) -> Self {
        EquivError::Construct(e)
    }
}

/// A monomial transform: coordinate i is scaled by diag[i] and moved to
/// position perm[i].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialTransform {
    diag: Vec<FieldElement>,
    perm: Vec<usize>,
}

impl MonomialTransform {
    pub fn new(diag: Vec<FieldElement>, perm: Vec<usize>) -> Result<Self, EquivError> {
        if diag.len() != perm.len() {
            return Err(EquivError::LengthMismatch { expected: diag.len(), got: perm.len() });
        }
        if diag.iter().any(|d| d.is_zero()) {
            return Err(EquivError::ZeroDiagonal);
        }
        let n = perm.len();
        let mut seen = vec![false; n];
        for &image in &perm {
            if image >= n || seen[image] {
                return Err(EquivError::NotAPermutation);
            }
            seen[image] = true;
        }
        Ok(MonomialTransform { diag, perm })
    }

    pub fn identity(one: FieldElement, n: usize) -> Self {
        MonomialTransform {
            diag: vec![one; n],
            perm: (0..n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn diag(&self) -> &[FieldElement] {
        &self.diag
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn is_pure_permutation(&self) -> bool {
        self.diag.iter().all(|d| d.index() == 1)
    }

    pub fn apply_to_word(
        &self,
        field: &crate::gf::FieldSpec,
        word: &[FieldElement],
    ) -> Vec<FieldElement> {
        debug_assert_eq!(word.len(), self.n());
        let mut out = vec![field.zero(); word.len()];
        for (i, &w) in word.iter().enumerate() {
            out[self.perm[i]] = field.mul(self.diag[i], w);
        }
        out
    }
}

/// The code generated by G D P: same [n, k, d]_q parameters, presented as a
/// generic generator-matrix code in the same message ordering.
pub fn apply_monomial(code: &EvalCode, t: &MonomialTransform) -> Result<EvalCode, EquivError> {
    if t.n() != code.n() {
        return Err(EquivError::LengthMismatch { expected: code.n(), got: t.n() });
    }
    let field = code.field();
    let g = code.generator_matrix();
    let rows: Vec<Vec<FieldElement>> = (0..g.rows())
        .map(|r| t.apply_to_word(field, g.row(r)))
        .collect();
    let gen = QaryMatrix::from_rows(code.q(), rows)?;
    Ok(EvalCode::generic(field.clone(), gen)?)
}

/// Comparison of the binary codes built from two q-ary codes of common
/// [n, k]_q.
#[derive(Debug, Clone)]
pub struct EquivalenceReport {
    pub params1: CodeParams,
    pub params2: CodeParams,
    /// Equal [n, k, d] (distances compared when certified on both sides).
    pub same_parameters: bool,
    /// Identical nullspaces (equal canonical row spaces of the expansions).
    pub same_code: bool,
    pub weight_enumerators: Option<(Vec<u64>, Vec<u64>)>,
    pub same_weight_enumerator: Option<bool>,
}

/// Expands both codes and compares the resulting binary codes: parameters,
/// nullspace identity, and (dimension permitting) full weight enumerators.
pub fn binary_params_under_equivalence(
    c1: &EvalCode,
    c2: &EvalCode,
    budget: &DistanceBudget,
    weight_enum_budget: u64,
) -> Result<EquivalenceReport, EquivError> {
    if c1.n() != c2.n() || c1.k() != c2.k() || c1.q() != c2.q() {
        return Err(EquivError::ParameterMismatch);
    }
    let h1 = build_hc(c1)?;
    let h2 = build_hc(c2)?;
    let params1 = code_params(&h1, budget);
    let params2 = code_params(&h2, budget);
    let same_parameters = params1.n == params2.n
        && params1.k == params2.k
        && match (params1.distance.exact(), params2.distance.exact()) {
            (Some(a), Some(b)) => a == b,
            _ => params1.distance == params2.distance,
        };
    let same_code = h1.row_space_canon() == h2.row_space_canon();
    let w1 = weight_enumerator_gf2(&h1.nullspace_basis(), h1.cols(), weight_enum_budget);
    let w2 = weight_enumerator_gf2(&h2.nullspace_basis(), h2.cols(), weight_enum_budget);
    let (weight_enumerators, same_weight_enumerator) = match (w1, w2) {
        (Some(a), Some(b)) => {
            let eq = a == b;
            (Some((a, b)), Some(eq))
        }
        _ => (None, None),
    };
    Ok(EquivalenceReport {
        params1,
        params2,
        same_parameters,
        same_code,
        weight_enumerators,
        same_weight_enumerator,
    })
}

/// True when `h2` equals `h1` with its q-row blocks permuted by `perm`
/// (block perm[i] of `h2` equals block i of `h1`).
pub fn blocks_match_under_permutation(
    h1: &BinaryMatrix,
    h2: &BinaryMatrix,
    perm: &[usize],
    q: usize,
) -> bool {
    if h1.rows() != h2.rows() || h1.cols() != h2.cols() || h1.rows() != perm.len() * q {
        return false;
    }
    for (i, &image) in perm.iter().enumerate() {
        for s in 0..q {
            for c in 0..h1.cols() {
                if h1.get(i * q + s, c) != h2.get(image * q + s, c) {
                    return false;
                }
            }
        }
    }
    true
}

/// Outcome of rebuilding a dispersion matrix into expansion form.
#[derive(Debug, Clone)]
pub struct CorrespondenceReport {
    pub dispersion: MatrixDispersion,
    /// The dispersion matrix after the column-vector substitutions and the
    /// added zero-polynomial column: an nq x q^2 matrix.
    pub transformed: BinaryMatrix,
    pub hc_params: CodeParams,
    pub transformed_params: CodeParams,
    pub params_equal: bool,
}

/// Builds the dispersion parity-check matrix of a dimension-2 Reed-Solomon
/// code, rewrites each (q-1)-row block by the substitutions
/// zero-column -> e_1 and e_i -> e_(i+1), appends the column of the zero
/// codeword, and checks that the resulting code has the same parameters as
/// the unit-vector expansion of the same code.
pub fn correspondence_hii_to_hc(
    code: &EvalCode,
    budget: &DistanceBudget,
) -> Result<CorrespondenceReport, EquivError> {
    let dispersion = construction2_build(code)?;
    let h_ii = &dispersion.h_ii;
    let (n, q) = (code.n(), code.q());
    let qm1 = q - 1;
    debug_assert_eq!(h_ii.rows(), n * qm1);
    debug_assert_eq!(h_ii.cols(), q * q - 1);

    let mut transformed = BinaryMatrix::zeros(n * q, q * q);
    for col in 0..h_ii.cols() {
        for j in 0..n {
            // the (q-1)-subcolumn of block j holds at most one 1
            let hit = (0..qm1).find(|&t| h_ii.get(j * qm1 + t, col));
            match hit {
                None => transformed.set(j * q, col, true),
                Some(t) => transformed.set(j * q + t + 1, col, true),
            }
        }
    }
    // zero-polynomial column: e_1 in every block
    for j in 0..n {
        transformed.set(j * q, q * q - 1, true);
    }

    let hc = build_hc(code)?;
    let hc_params = code_params(&hc, budget);
    let transformed_params = code_params(&transformed, budget);
    let params_equal = hc_params.n == transformed_params.n
        && hc_params.k == transformed_params.k
        && hc_params.distance.exact() == transformed_params.distance.exact();
    Ok(CorrespondenceReport {
        dispersion,
        transformed,
        hc_params,
        transformed_params,
        params_equal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldSpec;

    fn gf(q: u32) -> FieldSpec {
        FieldSpec::from_order(q).unwrap()
    }

    fn rs(q: u32, n: usize, k: usize) -> EvalCode {
        EvalCode::reed_solomon_lex(gf(q), n, k).unwrap()
    }

    #[test]
    fn transform_validation() {
        let f = gf(4);
        let one = f.one();
        assert!(MonomialTransform::new(vec![one; 3], vec![0, 1, 2]).is_ok());
        assert!(matches!(
            MonomialTransform::new(vec![one; 3], vec![0, 1, 1]),
            Err(EquivError::NotAPermutation)
        ));
        assert!(matches!(
            MonomialTransform::new(vec![f.zero(), one, one], vec![0, 1, 2]),
            Err(EquivError::ZeroDiagonal)
        ));
    }

    #[test]
    fn identity_transform_keeps_codewords() {
        let code = rs(4, 3, 2);
        let t = MonomialTransform::identity(code.field().one(), 3);
        let c2 = apply_monomial(&code, &t).unwrap();
        for i in 0..16 {
            assert_eq!(code.codeword(i), c2.codeword(i));
        }
    }

    #[test]
    fn scaling_preserves_qary_weights() {
        let code = rs(4, 3, 2);
        let f = code.field().clone();
        let diag = vec![f.element(1).unwrap(), f.element(2).unwrap(), f.element(3).unwrap()];
        let t = MonomialTransform::new(diag, vec![0, 1, 2]).unwrap();
        let c2 = apply_monomial(&code, &t).unwrap();
        assert_eq!(
            code.qary_weight_enumerator(1 << 20).unwrap(),
            c2.qary_weight_enumerator(1 << 20).unwrap()
        );
    }

    #[test]
    fn monomial_equivalence_preserves_binary_params() {
        let code = rs(4, 3, 2);
        let f = code.field().clone();
        let diag = vec![f.element(2).unwrap(), f.element(3).unwrap(), f.element(1).unwrap()];
        let t = MonomialTransform::new(diag, vec![2, 0, 1]).unwrap();
        let c2 = apply_monomial(&code, &t).unwrap();
        let report =
            binary_params_under_equivalence(&code, &c2, &DistanceBudget::default(), 1 << 20)
                .unwrap();
        assert!(report.same_parameters);
        assert_eq!(report.same_weight_enumerator, Some(true));
    }

    #[test]
    fn pure_permutation_gives_identical_code_and_permuted_blocks() {
        let code = rs(4, 3, 2);
        let f = code.field().clone();
        let perm = vec![1usize, 2, 0];
        let t = MonomialTransform::new(vec![f.one(); 3], perm.clone()).unwrap();
        assert!(t.is_pure_permutation());
        let c2 = apply_monomial(&code, &t).unwrap();
        let report =
            binary_params_under_equivalence(&code, &c2, &DistanceBudget::default(), 1 << 20)
                .unwrap();
        assert!(report.same_code, "permutation equivalence gives the same binary code");
        let h1 = build_hc(&code).unwrap();
        let h2 = build_hc(&c2).unwrap();
        assert!(blocks_match_under_permutation(&h1, &h2, &perm, 4));
    }

    #[test]
    fn parameter_mismatch_rejected() {
        let a = rs(4, 3, 2);
        let b = rs(4, 4, 2);
        assert!(matches!(
            binary_params_under_equivalence(&a, &b, &DistanceBudget::default(), 1 << 20),
            Err(EquivError::ParameterMismatch)
        ));
    }

    #[test]
    fn correspondence_small() {
        let code = rs(4, 3, 2);
        let report = correspondence_hii_to_hc(&code, &DistanceBudget::default()).unwrap();
        assert_eq!(report.transformed.rows(), 12);
        assert_eq!(report.transformed.cols(), 16);
        assert!(report.params_equal);
        assert_eq!(report.hc_params.param_string(), "[16,8,4]");
    }
}
