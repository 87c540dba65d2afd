use std::fmt::Write as _;

use serde::Serialize;

use crate::args::Which;
use crate::envelope::{GroebnerResult, NilpotencyRow, ResultEnvelope, TableRow, VerifyEntry};
use crate::CliError;

pub fn json<T: Serialize>(env: &ResultEnvelope<T>) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(env).map_err(|e| CliError::Compute(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

/// `1234567` as `1,234,567`.
pub fn thousands(digits: &str) -> String {
    let (sign, body) = match digits.strip_prefix('-') {
        Some(rest) => ("-", rest),
        None => ("", digits),
    };
    let mut out = String::with_capacity(body.len() + body.len() / 3);
    for (i, c) in body.chars().enumerate() {
        if i > 0 && (body.len() - i) % 3 == 0 {
            out.push(',');
        }
        out.push(c);
    }
    format!("{sign}{out}")
}

fn csv_finish(w: csv::Writer<Vec<u8>>) -> Result<String, CliError> {
    let bytes = w
        .into_inner()
        .map_err(|e| CliError::Compute(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Compute(e.to_string()))
}

fn csv_err(e: csv::Error) -> CliError {
    CliError::Compute(e.to_string())
}

pub fn nilpotency_text(env: &ResultEnvelope<NilpotencyRow>) -> String {
    let mut s = String::from("genus  degree  expected  dim R/J_g\n");
    for r in &env.results {
        let mark = if r.matches { "" } else { "  MISMATCH" };
        let _ = writeln!(
            s,
            "{:>5}  {:>6}  {:>8}  {:>9}{mark}",
            r.genus, r.degree, r.expected, r.quotient_dim
        );
    }
    s
}

pub fn nilpotency_csv(env: &ResultEnvelope<NilpotencyRow>) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in &env.results {
        w.serialize(r).map_err(csv_err)?;
    }
    csv_finish(w)
}

/// Genera as columns, the two table rows and the total as rows.
pub fn table_text(env: &ResultEnvelope<TableRow>) -> String {
    let which = env
        .results
        .first()
        .map(|r| r.which)
        .unwrap_or(Which::Framed);
    let labels = match which {
        Which::Framed => ["b_{0+ε} = b_{1+ε}", "b_{2+ε} = b_{3+ε}", "Total rank"],
        Which::Critical => ["n_{0+ε} = n_{1+ε}", "n_{2+ε} = n_{3+ε}", "Total rank"],
    };
    let cells: Vec<[String; 3]> = env
        .results
        .iter()
        .map(|r| {
            [
                thousands(&r.rows[0].0.to_string()),
                thousands(&r.rows[1].0.to_string()),
                thousands(&r.total.0.to_string()),
            ]
        })
        .collect();
    let label_w = labels.iter().map(|l| l.chars().count()).max().unwrap_or(0);
    let widths: Vec<usize> = env
        .results
        .iter()
        .zip(&cells)
        .map(|(r, c)| {
            let head = format!("g = {}", r.genus).len();
            c.iter().map(String::len).max().unwrap_or(0).max(head)
        })
        .collect();

    let title = match which {
        Which::Framed => "framed instanton homology, mod 4 betti numbers",
        Which::Critical => "critical set, mod 4 betti numbers",
    };
    let mut s = format!("{title}\n");
    let pad = |s: &mut String, text: &str, w: usize| {
        let n = text.chars().count();
        s.push_str(text);
        s.extend(std::iter::repeat_n(' ', w.saturating_sub(n)));
    };
    pad(&mut s, "", label_w);
    for (r, w) in env.results.iter().zip(&widths) {
        let _ = write!(s, " | {:>w$}", format!("g = {}", r.genus));
    }
    s.push('\n');
    s.push_str(&"-".repeat(label_w));
    for w in &widths {
        s.push_str("-+-");
        s.push_str(&"-".repeat(*w));
    }
    s.push('\n');
    for (i, label) in labels.iter().enumerate() {
        pad(&mut s, label, label_w);
        for (c, w) in cells.iter().zip(&widths) {
            let _ = write!(s, " | {:>w$}", c[i]);
        }
        s.push('\n');
    }
    s
}

#[derive(Serialize)]
struct TableCsvRow<'a> {
    which: Which,
    genus: u32,
    epsilon: usize,
    grading: usize,
    table_row: usize,
    value: &'a str,
    plus: Option<String>,
    minus: Option<String>,
}

pub fn table_csv(env: &ResultEnvelope<TableRow>) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in &env.results {
        for grading in 0..4 {
            let value = r.absolute.0[grading].to_string();
            w.serialize(TableCsvRow {
                which: r.which,
                genus: r.genus,
                epsilon: r.epsilon,
                grading,
                table_row: ((grading + 4 - r.epsilon) % 4) / 2,
                value: &value,
                plus: r.plus.as_ref().map(|c| c.0[grading].to_string()),
                minus: r.minus.as_ref().map(|c| c.0[grading].to_string()),
            })
            .map_err(csv_err)?;
        }
    }
    csv_finish(w)
}

pub fn groebner_text(env: &ResultEnvelope<GroebnerResult>) -> String {
    let mut s = String::new();
    for r in &env.results {
        let _ = writeln!(
            s,
            "{} at genus {} in {}, {}",
            r.family, r.genus, r.ring, r.order
        );
        let _ = writeln!(s, "reduced basis ({} elements):", r.basis.len());
        for b in &r.basis {
            let _ = writeln!(s, "  {b}");
        }
        let _ = writeln!(s, "initial ideal: <{}>", r.initial_ideal.join(", "));
        let _ = writeln!(s, "dimension of quotient: {}", r.degree);
        let _ = writeln!(s, "graded dimensions: {}", r.poincare);
        let _ = writeln!(s, "standard monomials: {}", r.standard_monomials.join(" "));
    }
    s
}

#[derive(Serialize)]
struct GroebnerCsvRow<'a> {
    family: String,
    genus: u32,
    kind: &'static str,
    index: usize,
    value: &'a str,
}

/// One row per basis element, initial generator and standard monomial.
pub fn groebner_csv(env: &ResultEnvelope<GroebnerResult>) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in &env.results {
        let groups: [(&'static str, &Vec<String>); 3] = [
            ("basis", &r.basis),
            ("initial", &r.initial_ideal),
            ("standard", &r.standard_monomials),
        ];
        for (kind, items) in groups {
            for (index, value) in items.iter().enumerate() {
                w.serialize(GroebnerCsvRow {
                    family: r.family.to_string(),
                    genus: r.genus,
                    kind,
                    index,
                    value,
                })
                .map_err(csv_err)?;
            }
        }
    }
    csv_finish(w)
}

pub fn verify_text(env: &ResultEnvelope<VerifyEntry>) -> String {
    let mut s = String::new();
    for e in &env.results {
        for c in &e.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(s, "{tag}  g={:<2} {:<32} {}", c.genus, c.name, c.detail);
        }
    }
    let _ = writeln!(
        s,
        "{} passed, {} failed",
        env.summary.passed, env.summary.failed
    );
    s
}

#[derive(Serialize)]
struct VerifyCsvRow<'a> {
    genus: u32,
    name: &'a str,
    passed: bool,
    detail: &'a str,
}

pub fn verify_csv(env: &ResultEnvelope<VerifyEntry>) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for e in &env.results {
        for c in &e.checks {
            w.serialize(VerifyCsvRow {
                genus: c.genus,
                name: &c.name,
                passed: c.passed,
                detail: &c.detail,
            })
            .map_err(csv_err)?;
        }
    }
    csv_finish(w)
}

#[cfg(test)]
mod tests {
    use super::thousands;

    #[test]
    fn separators() {
        assert_eq!(thousands("0"), "0");
        assert_eq!(thousands("999"), "999");
        assert_eq!(thousands("1000"), "1,000");
        assert_eq!(thousands("123456789"), "123,456,789");
        assert_eq!(thousands("-4096"), "-4,096");
    }
}
