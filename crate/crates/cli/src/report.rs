//! CSV and JSON renderings of an evaluation report.
//!
//! Both formats share one fixed column set so reports can be diffed across
//! runs; the audit slack columns are appended only when auditing was
//! requested, and JSON additionally carries the merge trace on demand.
//! Ratios are decimal strings with six fractional digits computed by exact
//! integer arithmetic (round-half-even), so identical inputs render
//! identically on every platform.

use std::cmp::Ordering;

use scsrc_core::analysis::SLACK_COLUMN_NAMES;
use scsrc_core::{EvalRow, EvaluationReport};
use serde_json::{json, Map, Value};

/// The fixed report columns, in order.
pub const COLUMNS: [&str; 20] = [
    "instance_id",
    "m_raw",
    "m_preprocessed",
    "norm_S",
    "opt",
    "len_mgreedy",
    "len_greedy",
    "len_tgreedy",
    "ratio_mgreedy",
    "ratio_greedy",
    "ratio_tgreedy",
    "comp_mgreedy",
    "comp_greedy",
    "comp_tgreedy",
    "cover_weight",
    "norm_T",
    "norm_A",
    "ov_A",
    "seed",
    "wall_ms_total",
];

/// `numerator / denominator` with six fractional digits, rounded
/// half-to-even, in exact integer arithmetic.
pub fn ratio6(numerator: u64, denominator: u64) -> String {
    assert!(denominator > 0, "ratio denominator must be positive");
    let scaled = numerator as u128 * 1_000_000;
    let d = denominator as u128;
    let mut q = scaled / d;
    let r = scaled % d;
    match (2 * r).cmp(&d) {
        Ordering::Greater => q += 1,
        Ordering::Equal if q % 2 == 1 => q += 1,
        _ => {}
    }
    format!("{}.{:06}", q / 1_000_000, q % 1_000_000)
}

/// Length ratio `len / opt` for one algorithm, if both are available.
fn length_ratio(len: Option<usize>, opt: Option<usize>) -> Option<String> {
    match (len, opt) {
        (Some(l), Some(o)) if o > 0 => Some(ratio6(l as u64, o as u64)),
        _ => None,
    }
}

/// Compression ratio `(norm_S − len) / (norm_S − opt)`, undefined when the
/// optimum equals plain concatenation.
fn compression_ratio(len: Option<usize>, opt: Option<usize>, norm_s: usize) -> Option<String> {
    match (len, opt) {
        (Some(l), Some(o)) if o < norm_s => Some(ratio6((norm_s - l) as u64, (norm_s - o) as u64)),
        _ => None,
    }
}

/// The six derived ratio cells of a row, in column order.
fn ratio_cells(row: &EvalRow) -> [Option<String>; 6] {
    [
        length_ratio(row.len_mgreedy, row.opt),
        length_ratio(row.len_greedy, row.opt),
        length_ratio(row.len_tgreedy, row.opt),
        compression_ratio(row.len_mgreedy, row.opt, row.norm_s),
        compression_ratio(row.len_greedy, row.opt, row.norm_s),
        compression_ratio(row.len_tgreedy, row.opt, row.norm_s),
    ]
}

fn wall_ms(row: &EvalRow, with_timings: bool) -> u64 {
    if with_timings {
        row.wall_ms_total
    } else {
        0
    }
}

fn cell<T: ToString>(value: Option<T>) -> String {
    value.map(|v| v.to_string()).unwrap_or_default()
}

/// Renders the report as CSV: a header line plus one line per row, empty
/// cells for unavailable values.
pub fn csv_report(report: &EvaluationReport, with_audit: bool, with_timings: bool) -> String {
    let mut out = String::new();
    out.push_str(&COLUMNS.join(","));
    if with_audit {
        for name in SLACK_COLUMN_NAMES {
            out.push(',');
            out.push_str(name);
        }
    }
    out.push('\n');

    for row in &report.rows {
        let ratios = ratio_cells(row);
        let fields = [
            row.instance_id.clone(),
            row.m_raw.to_string(),
            row.m_preprocessed.to_string(),
            row.norm_s.to_string(),
            cell(row.opt),
            cell(row.len_mgreedy),
            cell(row.len_greedy),
            cell(row.len_tgreedy),
            ratios[0].clone().unwrap_or_default(),
            ratios[1].clone().unwrap_or_default(),
            ratios[2].clone().unwrap_or_default(),
            ratios[3].clone().unwrap_or_default(),
            ratios[4].clone().unwrap_or_default(),
            ratios[5].clone().unwrap_or_default(),
            cell(row.cover_weight),
            cell(row.norm_t),
            cell(row.norm_a),
            cell(row.ov_a),
            cell(row.seed),
            wall_ms(row, with_timings).to_string(),
        ];
        out.push_str(&fields.join(","));
        if with_audit {
            match &row.audit {
                Some(audit) => {
                    for (_, value) in audit.slack_fields() {
                        out.push(',');
                        out.push_str(&value.to_string());
                    }
                }
                None => out.push_str(&",".repeat(SLACK_COLUMN_NAMES.len())),
            }
        }
        out.push('\n');
    }
    out
}

fn opt_json<T: Into<Value>>(value: Option<T>) -> Value {
    value.map(Into::into).unwrap_or(Value::Null)
}

/// Renders the report as JSON mirroring the CSV fields, plus the merge trace
/// per row when requested.
pub fn json_report(
    report: &EvaluationReport,
    with_audit: bool,
    with_trace: bool,
    with_timings: bool,
) -> String {
    let rows: Vec<Value> = report
        .rows
        .iter()
        .map(|row| {
            let ratios = ratio_cells(row);
            let mut m = Map::new();
            m.insert("instance_id".into(), json!(row.instance_id));
            m.insert("m_raw".into(), json!(row.m_raw));
            m.insert("m_preprocessed".into(), json!(row.m_preprocessed));
            m.insert("norm_S".into(), json!(row.norm_s));
            m.insert("opt".into(), opt_json(row.opt));
            m.insert("len_mgreedy".into(), opt_json(row.len_mgreedy));
            m.insert("len_greedy".into(), opt_json(row.len_greedy));
            m.insert("len_tgreedy".into(), opt_json(row.len_tgreedy));
            m.insert("ratio_mgreedy".into(), opt_json(ratios[0].clone()));
            m.insert("ratio_greedy".into(), opt_json(ratios[1].clone()));
            m.insert("ratio_tgreedy".into(), opt_json(ratios[2].clone()));
            m.insert("comp_mgreedy".into(), opt_json(ratios[3].clone()));
            m.insert("comp_greedy".into(), opt_json(ratios[4].clone()));
            m.insert("comp_tgreedy".into(), opt_json(ratios[5].clone()));
            m.insert("cover_weight".into(), opt_json(row.cover_weight));
            m.insert("norm_T".into(), opt_json(row.norm_t));
            m.insert("norm_A".into(), opt_json(row.norm_a));
            m.insert("ov_A".into(), opt_json(row.ov_a));
            m.insert("seed".into(), opt_json(row.seed));
            m.insert("wall_ms_total".into(), json!(wall_ms(row, with_timings)));
            if with_audit {
                match &row.audit {
                    Some(audit) => {
                        for (name, value) in audit.slack_fields() {
                            m.insert(name.into(), json!(value));
                        }
                    }
                    None => {
                        for name in SLACK_COLUMN_NAMES {
                            m.insert(name.into(), Value::Null);
                        }
                    }
                }
            }
            if with_trace {
                let trace = row
                    .trace
                    .as_ref()
                    .map(|t| serde_json::to_value(t).expect("trace serializes"))
                    .unwrap_or(Value::Null);
                m.insert("trace".into(), trace);
            }
            Value::Object(m)
        })
        .collect();

    let doc = json!({
        "prng": report.prng,
        "rows": rows,
        "warnings": report.warnings,
    });
    let mut text = serde_json::to_string_pretty(&doc).expect("report serializes");
    text.push('\n');
    text
}
