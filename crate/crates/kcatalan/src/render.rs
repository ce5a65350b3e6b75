//! Machine-readable output: JSON values with numbers as exact decimal
//! strings, and the OEIS b-file line format.

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::counting::Triangle;
use crate::oracle::{BruteReport, CrossCheck};
use crate::periodicity::{PeriodReport, PeriodicForm};
use crate::transfer::TransferMatrix;

pub fn decimal_strings(values: &[BigInt]) -> Value {
    Value::Array(values.iter().map(|v| Value::String(v.to_string())).collect())
}

/// States as integer tuples, entries as decimal strings.
pub fn matrix_to_json(matrix: &TransferMatrix) -> Value {
    let states: Vec<Value> = matrix
        .states()
        .iter()
        .map(|s| Value::Array(s.iter().map(|&c| json!(c)).collect()))
        .collect();
    let rows: Vec<Value> = matrix.entries().iter().map(|r| decimal_strings(r)).collect();
    json!({ "states": states, "matrix": rows })
}

pub fn triangle_to_json(triangle: &Triangle) -> Value {
    let rows: Vec<Value> = triangle.rows.iter().map(|r| decimal_strings(r)).collect();
    json!({
        "kind": triangle.kind.name(),
        "k": triangle.k,
        "values": rows,
    })
}

/// All five report fields, plus the hypothesis and cap when the report
/// came out of a reduction.
pub fn period_report_to_json(report: &PeriodReport, form: Option<&PeriodicForm>) -> Value {
    let mut map = Map::new();
    map.insert("modulus".into(), json!(report.modulus));
    map.insert("vector_preperiod".into(), json!(report.vector_preperiod));
    map.insert("vector_period".into(), json!(report.vector_period));
    map.insert("scalar_preperiod".into(), json!(report.scalar_preperiod));
    map.insert("scalar_period".into(), json!(report.scalar_period));
    map.insert("confirmed".into(), json!(report.confirmed));
    if let Some(form) = form {
        map.insert("hypothesis".into(), json!(form.hypothesis.name()));
        map.insert("cap".into(), json!(form.cap));
    }
    Value::Object(map)
}

pub fn brute_report_to_json(report: &BruteReport) -> Value {
    let by_height: Map<String, Value> = report
        .by_max_height
        .iter()
        .map(|(h, c)| (h.to_string(), json!(c)))
        .collect();
    let by_peaks: Map<String, Value> = report
        .by_peaks
        .iter()
        .map(|(p, c)| (p.to_string(), json!(c)))
        .collect();
    json!({
        "total": report.total,
        "weighted_total": report.weighted_total.to_string(),
        "by_max_height": by_height,
        "by_peaks": by_peaks,
    })
}

pub fn cross_check_to_json(check: &CrossCheck) -> Value {
    let mismatches: Vec<Value> = check
        .mismatches
        .iter()
        .map(|m| {
            json!({
                "quantity": m.quantity,
                "enumerated": m.enumerated,
                "computed": m.computed,
            })
        })
        .collect();
    json!({
        "k": check.k,
        "n": check.n,
        "total": check.total,
        "pass": check.passed(),
        "mismatches": mismatches,
    })
}

/// `n a(n)` per line for n starting at 1, newline-terminated, no header.
/// `seq[0]` is taken to be the n = 0 term and skipped.
pub fn bfile_lines(seq: &[BigInt]) -> String {
    let mut out = String::new();
    for (n, v) in seq.iter().enumerate().skip(1) {
        out.push_str(&format!("{n} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bfile_format_is_exact() {
        let seq: Vec<BigInt> =
            [1, 1, 2, 5, 14, 42].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(bfile_lines(&seq), "1 1\n2 2\n3 5\n4 14\n5 42\n");
        assert_eq!(bfile_lines(&[BigInt::from(1)]), "");
    }

    #[test]
    fn matrix_json_uses_decimal_strings() {
        let m = crate::transfer::build_transfer_matrix(
            3,
            4,
            &crate::weights::WeightVector::ones(),
            None,
        )
        .unwrap();
        let v = matrix_to_json(&m);
        assert_eq!(v["states"][1], json!([2, 1, 0]));
        assert_eq!(v["matrix"][0], json!(["1", "2", "0"]));
    }
}
