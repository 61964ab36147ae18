use std::collections::BTreeMap;

use gadic::dataset::{
    emit_bfile, emit_lambda_table, emit_length_histogram, emit_length_vs_g, format_bfile,
    length_vs_g_csv, parse_bfile, TableFormat, TableSpec,
};
use num_bigint::BigInt;
use proptest::prelude::*;

const TABLE_TEXT: &str = include_str!("data/lambda_table.txt");
const TABLE_CSV: &str = include_str!("data/lambda_table.csv");
const FIG2: &str = include_str!("data/fig2_20233509.csv");

#[test]
fn lambda_table_text_is_golden() {
    assert_eq!(
        emit_lambda_table(&TableSpec::default()).unwrap(),
        TABLE_TEXT
    );
}

#[test]
fn lambda_table_csv_is_golden() {
    let spec = TableSpec {
        format: TableFormat::Csv,
        ..TableSpec::default()
    };
    assert_eq!(emit_lambda_table(&spec).unwrap(), TABLE_CSV);
}

#[test]
fn lambda_table_json_matches_csv() {
    let spec = TableSpec {
        format: TableFormat::Json,
        ..TableSpec::default()
    };
    let doc: serde_json::Value = serde_json::from_str(&emit_lambda_table(&spec).unwrap()).unwrap();
    let rows: Vec<Vec<String>> = TABLE_CSV
        .lines()
        .skip(1)
        .map(|l| l.split(',').skip(1).map(str::to_string).collect())
        .collect();
    let values = doc["values"].as_array().unwrap();
    assert_eq!(values.len(), 20);
    for (row, expected) in values.iter().zip(&rows) {
        let got: Vec<String> = row
            .as_array()
            .unwrap()
            .iter()
            .map(|v| v.to_string())
            .collect();
        assert_eq!(&got, expected);
    }
}

#[test]
fn figure_two_regression() {
    let n = BigInt::from(20_233_509);
    let rows = emit_length_vs_g(&n, 2, 100).unwrap();
    assert_eq!(rows.len(), 99);
    assert_eq!(length_vs_g_csv(&rows), FIG2);
}

#[test]
fn large_bases_give_identity() {
    for n in [1u64, 2, 7, 50, 333] {
        let b = BigInt::from(n);
        let lo = (2 * n + 1) as u32;
        for (_, len) in emit_length_vs_g(&b, lo, lo + 40).unwrap() {
            assert_eq!(len, n);
        }
    }
}

#[test]
fn figure_three_is_consistent() {
    let h = emit_length_histogram(19, 10_000).unwrap();
    assert_eq!(h.points.len(), 10_000);
    let mut first: BTreeMap<u64, u64> = BTreeMap::new();
    for &(n, len) in &h.points {
        first.entry(len).or_insert(n);
    }
    let overlay: BTreeMap<u64, u64> = h
        .overlay
        .iter()
        .map(|(k, v)| (*k, v.try_into().unwrap()))
        .collect();
    assert_eq!(first, overlay);
    assert_eq!(overlay[&10], 10);
    assert_eq!(overlay[&20], 542);
}

#[test]
fn bfile_terms() {
    let two: Vec<String> = emit_bfile(2, 5)
        .unwrap()
        .iter()
        .map(|r| r.value.to_string())
        .collect();
    assert_eq!(two, ["1", "3", "11", "43", "171"]);
    let three: Vec<String> = emit_bfile(3, 5)
        .unwrap()
        .iter()
        .map(|r| r.value.to_string())
        .collect();
    assert_eq!(three, ["1", "2", "5", "14", "41"]);
}

proptest! {
    #[test]
    fn bfile_round_trip(g in 2u32..40, count in 1u64..60) {
        let records = emit_bfile(g, count).unwrap();
        let text = format_bfile(&records);
        prop_assert_eq!(parse_bfile(&text).unwrap(), records);
    }
}
