//! Machine-readable reports with byte-deterministic serialization.
//!
//! Numbers are rendered with 17 significant digits so JSON and CSV
//! round-trip losslessly at double precision; field order is fixed, so
//! identical configurations produce identical bytes.

use lab_core::verify::Assertion;

use crate::config::LabConfig;

/// One cell of a report row.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Number(f64),
    Int(i64),
    Text(String),
    Bool(bool),
}

/// A command's structured output: a config echo, tabular rows, and the
/// asserted inequalities with both sides recorded.
#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    pub config: LabConfig,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
    pub assertions: Vec<Assertion>,
}

/// 17 significant digits: one before the point, sixteen after.
fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn escape_json(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out
}

impl Value {
    fn to_json(&self) -> String {
        match self {
            Value::Number(x) => fmt_f64(*x),
            Value::Int(i) => i.to_string(),
            Value::Text(s) => format!("\"{}\"", escape_json(s)),
            Value::Bool(b) => b.to_string(),
        }
    }

    fn to_csv(&self) -> String {
        match self {
            Value::Number(x) => fmt_f64(*x),
            Value::Int(i) => i.to_string(),
            Value::Text(s) => {
                if s.contains(',') || s.contains('"') || s.contains('\n') {
                    format!("\"{}\"", s.replace('"', "\"\""))
                } else {
                    s.clone()
                }
            }
            Value::Bool(b) => b.to_string(),
        }
    }
}

impl Report {
    pub fn new(command: impl Into<String>, config: &LabConfig, columns: &[&str]) -> Self {
        Self {
            command: command.into(),
            config: config.clone(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
            assertions: Vec::new(),
        }
    }

    pub fn push_row(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn all_pass(&self) -> bool {
        self.assertions.iter().all(|a| a.pass)
    }

    /// 0 when every assertion passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_pass() {
            0
        } else {
            1
        }
    }

    fn config_json(&self) -> String {
        let c = &self.config;
        format!(
            "{{\"dimension\":{},\"truncation\":{},\"working_radius\":{},\"circle_grid\":{},\"sphere_grid\":{},\"tol_boundary\":{},\"tol_quadrature\":{},\"cluster_epsilon\":{},\"seed\":{}}}",
            c.dimension,
            c.truncation,
            fmt_f64(c.working_radius),
            c.circle_grid,
            c.sphere_grid,
            fmt_f64(c.tol_boundary),
            fmt_f64(c.tol_quadrature),
            fmt_f64(c.cluster_epsilon),
            c.seed,
        )
    }

    /// One JSON object with keys command, config, rows, assertions.
    pub fn to_json(&self) -> String {
        let mut out = String::new();
        out.push_str("{\"command\":\"");
        out.push_str(&escape_json(&self.command));
        out.push_str("\",\"config\":");
        out.push_str(&self.config_json());
        out.push_str(",\"columns\":[");
        for (i, col) in self.columns.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push('"');
            out.push_str(&escape_json(col));
            out.push('"');
        }
        out.push_str("],\"rows\":[");
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push('{');
            for (j, (col, v)) in self.columns.iter().zip(row).enumerate() {
                if j > 0 {
                    out.push(',');
                }
                out.push('"');
                out.push_str(&escape_json(col));
                out.push_str("\":");
                out.push_str(&v.to_json());
            }
            out.push('}');
        }
        out.push_str("],\"assertions\":[");
        for (i, a) in self.assertions.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&format!(
                "{{\"label\":\"{}\",\"lhs\":{},\"relation\":\"{}\",\"rhs\":{},\"pass\":{}}}",
                escape_json(&a.label),
                fmt_f64(a.lhs),
                a.relation.symbol(),
                fmt_f64(a.rhs),
                a.pass
            ));
        }
        out.push_str("]}");
        out.push('\n');
        out
    }

    /// Header row then data rows.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|v| v.to_csv()).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
        }
    }
}

/// Output encoding of a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[cfg(test)]
mod tests {
    use super::*;
    use lab_core::verify::Assertion;

    fn sample_report() -> Report {
        let cfg = LabConfig::default();
        let mut r = Report::new("product", &cfg, &["k", "observed_error", "rate_bound"]);
        r.push_row(vec![
            Value::Int(2),
            Value::Number(0.2667081273),
            Value::Number(2.87),
        ]);
        r.assertions
            .push(Assertion::le("row bound", 0.2667081273, 2.87));
        r
    }

    #[test]
    fn empty_rows_still_serialize() {
        let cfg = LabConfig::default();
        let r = Report::new("orbit", &cfg, &["j", "distance"]);
        let json = r.to_json();
        assert!(json.contains("\"rows\":[]"));
        let csv = r.to_csv();
        assert_eq!(csv, "j,distance\n");
    }

    #[test]
    fn serialization_is_deterministic() {
        let a = sample_report().to_json();
        let b = sample_report().to_json();
        assert_eq!(a, b);
        assert_eq!(sample_report().to_csv(), sample_report().to_csv());
    }

    #[test]
    fn csv_has_fixed_header() {
        let csv = sample_report().to_csv();
        assert!(csv.starts_with("k,observed_error,rate_bound\n"));
    }

    #[test]
    fn numbers_carry_seventeen_significant_digits() {
        let s = fmt_f64(std::f64::consts::PI);
        assert_eq!(s, "3.1415926535897931e0");
        let parsed: f64 = s.parse().unwrap();
        assert_eq!(parsed, std::f64::consts::PI);
    }

    #[test]
    fn exit_codes_follow_assertions() {
        let mut r = sample_report();
        assert_eq!(r.exit_code(), 0);
        r.assertions.push(Assertion::le("failing", 2.0, 1.0));
        assert_eq!(r.exit_code(), 1);
    }
}
