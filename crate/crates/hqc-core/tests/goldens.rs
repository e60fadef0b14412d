//! Frozen expected outputs for the construction and extraction pipeline.
//!
//! The polynomial-matrix expectations are cross-checked two ways: once
//! against the frozen strings below, and once against an independent oracle
//! that computes each monomial's exponents directly from field arithmetic
//! (the base-p digits of the evaluated class representative), bypassing the
//! bit-matrix extraction path entirely.

use hqc_core::analysis::{code_params, girth, DistanceBudget, Girth};
use hqc_core::bits::BinaryMatrix;
use hqc_core::codes::EvalCode;
use hqc_core::construct::{build_hc, expand_ks};
use hqc_core::gf::FieldSpec;
use hqc_core::hqc::{
    expand_poly_matrix, extract_poly_matrix, factor_block, weight_matrix, HqcPolyMatrix,
    Polynomial,
};

fn gf(q: u32) -> FieldSpec {
    FieldSpec::from_order(q).unwrap()
}

/// Oracle: the monomial of the block at (point j, class l) has exponents
/// equal to the base-p digits of lexindex(rep_l(point_j)), where rep_l is
/// the l-th zero-constant-term polynomial. For dimension-2 codes rep_l is
/// element(l) * x.
fn oracle_monomial_rs2(field: &FieldSpec, point: usize, class: usize) -> String {
    let beta = field.element(point).unwrap();
    let c1 = field.element(class).unwrap();
    let value = field.mul(c1, beta);
    let mut digits = Vec::new();
    let mut v = value.index();
    for _ in 0..field.r() {
        digits.push((v % field.p()) as u32);
        v /= field.p();
    }
    Polynomial::monomial(digits).render()
}

const HC_3_2_4: [&str; 12] = [
    "1000100010001000",
    "0100010001000100",
    "0010001000100010",
    "0001000100010001",
    "1000010000100001",
    "0100100000010010",
    "0010000110000100",
    "0001001001001000",
    "1000001000010100",
    "0100000100101000",
    "0010100001000001",
    "0001010010000010",
];

#[test]
fn expansion_of_3_2_4_is_bit_exact() {
    let code = EvalCode::reed_solomon_lex(gf(4), 3, 2).unwrap();
    let h = build_hc(&code).unwrap();
    assert_eq!(h, BinaryMatrix::from_rows(&HC_3_2_4));
}

#[test]
fn expansion_equals_explicit_symbol_substitution() {
    // independent route: expand the enumerated q-ary array symbol by symbol
    let code = EvalCode::reed_solomon_lex(gf(4), 3, 2).unwrap();
    let m = code.enumerate_codewords(1 << 20).unwrap();
    let mut h = BinaryMatrix::zeros(12, 16);
    for col in 0..16 {
        for j in 0..3 {
            h.set(4 * j + m.get(j, col).index(), col, true);
        }
    }
    assert_eq!(h, expand_ks(&m));
    assert_eq!(h, BinaryMatrix::from_rows(&HC_3_2_4));
}

#[test]
fn params_of_3_2_4() {
    let h = BinaryMatrix::from_rows(&HC_3_2_4);
    let p = code_params(&h, &DistanceBudget::default());
    assert_eq!(p.param_string(), "[16,8,4]");
    assert_eq!(girth(&h), Girth::Finite(6));
}

const QC_SINGLE_LEVEL_8X12: [&str; 8] = [
    "101000010000",
    "010110000000",
    "101001000000",
    "010100100000",
    "100001000010",
    "010000100001",
    "001000011000",
    "000110000100",
];

#[test]
fn single_level_expansion_8x12() {
    // [[1 + x0^2, x0, 0], [1, x0^3, x0^2]] with lift 4
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
    assert_eq!(expand_poly_matrix(&hp), BinaryMatrix::from_rows(&QC_SINGLE_LEVEL_8X12));
    let w = weight_matrix(&hp);
    assert_eq!(w.row_entries(0), &[2, 1, 0]);
    assert_eq!(w.row_entries(1), &[1, 1, 1]);
    assert_eq!(w.type_t(), 2);
}

const TWO_LEVEL_12X24: [&str; 12] = [
    "000100000000000000000010",
    "000010000000000000000001",
    "000001000000000000000100",
    "000000100000010000000000",
    "000000010000001000000000",
    "000000001000100000000000",
    "000000000100000010000000",
    "000000000010000001000000",
    "000000000001000100000000",
    "100000000000000000010000",
    "010000000000000000001000",
    "001000000000000000100000",
];

#[test]
fn two_level_expansion_12x24() {
    // [x1^3, x1 x0^2] with lifts (3, 4)
    let hp = HqcPolyMatrix::from_entries(
        vec![3, 4],
        1,
        2,
        vec![Polynomial::monomial(vec![0, 3]), Polynomial::monomial(vec![2, 1])],
    )
    .unwrap();
    assert_eq!(expand_poly_matrix(&hp), BinaryMatrix::from_rows(&TWO_LEVEL_12X24));
}

#[test]
fn polynomial_matrix_of_3_2_4() {
    let code = EvalCode::reed_solomon_lex(gf(4), 3, 2).unwrap();
    let h = build_hc(&code).unwrap();
    let hp = extract_poly_matrix(&h, &code).unwrap();
    assert_eq!((hp.block_rows(), hp.block_cols()), (3, 4));
    assert_eq!(hp.lifts(), &[2, 2]);
    let expected = [
        ["1", "1", "1", "1"],
        ["1", "x0", "x1", "x1x0"],
        ["1", "x1", "x1x0", "x0"],
    ];
    for j in 0..3 {
        for l in 0..4 {
            assert_eq!(hp.get(j, l).render(), expected[j][l], "entry ({j},{l})");
            assert_eq!(oracle_monomial_rs2(code.field(), j, l), expected[j][l]);
        }
    }
    assert_eq!(expand_poly_matrix(&hp), h);
}

/// The 9 x 25 polynomial matrix of the [9,2]_25 code on evaluation points
/// 0..4, a, 2a, 3a, 4a.
const POLY_9X25: [&str; 9] = [
    "1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1",
    "1,x0,x0^2,x0^3,x0^4,x1,x1x0,x1x0^2,x1x0^3,x1x0^4,x1^2,x1^2x0,x1^2x0^2,x1^2x0^3,x1^2x0^4,x1^3,x1^3x0,x1^3x0^2,x1^3x0^3,x1^3x0^4,x1^4,x1^4x0,x1^4x0^2,x1^4x0^3,x1^4x0^4",
    "1,x0^2,x0^4,x0,x0^3,x1^2,x1^2x0^2,x1^2x0^4,x1^2x0,x1^2x0^3,x1^4,x1^4x0^2,x1^4x0^4,x1^4x0,x1^4x0^3,x1,x1x0^2,x1x0^4,x1x0,x1x0^3,x1^3,x1^3x0^2,x1^3x0^4,x1^3x0,x1^3x0^3",
    "1,x0^3,x0,x0^4,x0^2,x1^3,x1^3x0^3,x1^3x0,x1^3x0^4,x1^3x0^2,x1,x1x0^3,x1x0,x1x0^4,x1x0^2,x1^4,x1^4x0^3,x1^4x0,x1^4x0^4,x1^4x0^2,x1^2,x1^2x0^3,x1^2x0,x1^2x0^4,x1^2x0^2",
    "1,x0^4,x0^3,x0^2,x0,x1^4,x1^4x0^4,x1^4x0^3,x1^4x0^2,x1^4x0,x1^3,x1^3x0^4,x1^3x0^3,x1^3x0^2,x1^3x0,x1^2,x1^2x0^4,x1^2x0^3,x1^2x0^2,x1^2x0,x1,x1x0^4,x1x0^3,x1x0^2,x1x0",
    "1,x1,x1^2,x1^3,x1^4,x1x0^3,x1^2x0^3,x1^3x0^3,x1^4x0^3,x0^3,x1^2x0,x1^3x0,x1^4x0,x0,x1x0,x1^3x0^4,x1^4x0^4,x0^4,x1x0^4,x1^2x0^4,x1^4x0^2,x0^2,x1x0^2,x1^2x0^2,x1^3x0^2",
    "1,x1^2,x1^4,x1,x1^3,x1^2x0,x1^4x0,x1x0,x1^3x0,x0,x1^4x0^2,x1x0^2,x1^3x0^2,x0^2,x1^2x0^2,x1x0^3,x1^3x0^3,x0^3,x1^2x0^3,x1^4x0^3,x1^3x0^4,x0^4,x1^2x0^4,x1^4x0^4,x1x0^4",
    "1,x1^3,x1,x1^4,x1^2,x1^3x0^4,x1x0^4,x1^4x0^4,x1^2x0^4,x0^4,x1x0^3,x1^4x0^3,x1^2x0^3,x0^3,x1^3x0^3,x1^4x0^2,x1^2x0^2,x0^2,x1^3x0^2,x1x0^2,x1^2x0,x0,x1^3x0,x1x0,x1^4x0",
    "1,x1^4,x1^3,x1^2,x1,x1^4x0^2,x1^3x0^2,x1^2x0^2,x1x0^2,x0^2,x1^3x0^4,x1^2x0^4,x1x0^4,x0^4,x1^4x0^4,x1^2x0,x1x0,x0,x1^4x0,x1^3x0,x1x0^3,x0^3,x1^4x0^3,x1^3x0^3,x1^2x0^3",
];

#[test]
fn polynomial_matrix_of_9_2_25() {
    let f = gf(25);
    let point_indices = [0usize, 1, 2, 3, 4, 5, 10, 15, 20];
    let points: Vec<_> = point_indices.iter().map(|&i| f.element(i).unwrap()).collect();
    let code = EvalCode::reed_solomon(f, points, 2).unwrap();
    let h = build_hc(&code).unwrap();
    assert_eq!((h.rows(), h.cols()), (225, 625));
    let hp = extract_poly_matrix(&h, &code).unwrap();
    assert_eq!((hp.block_rows(), hp.block_cols()), (9, 25));
    for (j, row) in POLY_9X25.iter().enumerate() {
        let expected: Vec<&str> = row.split(',').collect();
        for l in 0..25 {
            assert_eq!(hp.get(j, l).render(), expected[l], "entry ({j},{l})");
            assert_eq!(
                oracle_monomial_rs2(code.field(), point_indices[j], l),
                expected[l],
                "oracle ({j},{l})"
            );
        }
    }
    assert_eq!(expand_poly_matrix(&hp), h);
}

#[test]
fn polynomial_matrix_of_25_2_25_first_rows() {
    // all 25 evaluation points in lexicographic order
    let code = EvalCode::reed_solomon_lex(gf(25), 25, 2).unwrap();
    let h = build_hc(&code).unwrap();
    assert_eq!((h.rows(), h.cols()), (625, 625));
    let hp = extract_poly_matrix(&h, &code).unwrap();
    assert_eq!((hp.block_rows(), hp.block_cols()), (25, 25));
    // row of evaluation point 0: all entries the identity monomial
    for l in 0..25 {
        assert_eq!(hp.get(0, l).render(), "1");
    }
    // row of evaluation point 1: entry l reads off element l itself
    let row1: Vec<&str> = POLY_9X25[1].split(',').collect();
    for l in 0..25 {
        assert_eq!(hp.get(1, l).render(), row1[l]);
    }
    // remainder by round-trip
    assert_eq!(expand_poly_matrix(&hp), h);
}

#[test]
fn factor_block_gf25_and_gf27_values() {
    // GF(25): the block of value 2a+4 (index 14) factors as (4, 2),
    // the monomial x1^2 x0^4
    let f25 = gf(25);
    let code = EvalCode::reed_solomon_lex(f25.clone(), 25, 2).unwrap();
    let h = build_hc(&code).unwrap();
    // class of (3a+4)x is l = 19; evaluation point a is j = 5;
    // (3a+4)*a = 2a+4
    let beta = f25.element(5).unwrap();
    let c1 = f25.element(19).unwrap();
    assert_eq!(f25.mul(c1, beta).index(), 14);
    let block = h.submatrix(5 * 25, 19 * 25, 25, 25);
    assert_eq!(factor_block(&block, 5, 2).unwrap(), vec![4, 2]);
    assert_eq!(Polynomial::monomial(vec![4, 2]).render(), "x1^2x0^4");

    // GF(27): the block of value a^2+2 (index 11) factors as (2, 0, 1),
    // the monomial x2 x0^2
    let f27 = gf(27);
    let code27 = EvalCode::reed_solomon_lex(f27.clone(), 27, 2).unwrap();
    let h27 = build_hc(&code27).unwrap();
    // the polynomial a*x (class 3) evaluated at a^2+a+2 (point index 14)
    let beta = f27.element(14).unwrap();
    let c1 = f27.element(3).unwrap();
    assert_eq!(f27.mul(c1, beta).index(), 11);
    let block = h27.submatrix(14 * 27, 3 * 27, 27, 27);
    assert_eq!(factor_block(&block, 3, 3).unwrap(), vec![2, 0, 1]);
    assert_eq!(Polynomial::monomial(vec![2, 0, 1]).render(), "x2x0^2");
}

#[test]
fn rm_4_2_2_expansion_shape_and_round_trip() {
    let code = EvalCode::reed_muller(gf(4), 2, 2).unwrap();
    let h = build_hc(&code).unwrap();
    assert_eq!((h.rows(), h.cols()), (64, 4096));
    let hp = extract_poly_matrix(&h, &code).unwrap();
    assert_eq!((hp.block_rows(), hp.block_cols()), (16, 1024));
    assert_eq!(expand_poly_matrix(&hp), h);
    let w = weight_matrix(&hp);
    assert_eq!(w.type_t(), 1);
}
