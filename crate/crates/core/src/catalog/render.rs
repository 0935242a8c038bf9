use std::fmt::Write as _;

use super::{BValue, CatalogRow, MhkStatus, Range};
use crate::error::{Error, Result};

pub const CSV_HEADER: [&str; 15] = [
    "d",
    "h",
    "A",
    "m",
    "htilde",
    "dtilde",
    "gtilde",
    "B",
    "B_is_upper",
    "nu_tilde",
    "mu_tilde_lo",
    "mu_tilde_hi",
    "mu_lo",
    "mu_hi",
    "footnotes",
];

fn opt(v: Option<i64>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

/// One record per listed curve; a row without curves gets one record with
/// empty curve columns.
pub fn render_csv(rows: &[CatalogRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Data(format!("csv: {e}"));
    w.write_record(CSV_HEADER).map_err(io)?;
    for row in rows {
        let head = [
            row.d.to_string(),
            row.h.to_string(),
            row.a.to_string(),
            row.m.to_string(),
        ];
        let tail = [opt(row.mu.lo), opt(row.mu.hi), row.footnotes.join(",")];
        let mut records: Vec<Vec<String>> = row
            .curves
            .iter()
            .map(|c| {
                vec![
                    c.h.to_string(),
                    c.degree.to_string(),
                    c.genus.to_string(),
                    c.b.value().to_string(),
                    c.b.is_upper().to_string(),
                    opt(c.nu_tilde),
                    opt(c.mu_tilde.lo),
                    opt(c.mu_tilde.hi),
                ]
            })
            .collect();
        if records.is_empty() {
            records.push(vec![String::new(); 8]);
        }
        for mid in records {
            let record = head.iter().chain(&mid).chain(&tail);
            w.write_record(record).map_err(io)?;
        }
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::Data(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn render_json(rows: &[CatalogRow]) -> Result<String> {
    let mut s = serde_json::to_string_pretty(rows).map_err(|e| Error::Data(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn range_cell(r: Range) -> String {
    match (r.lo, r.hi) {
        (Some(l), Some(h)) if l == h => l.to_string(),
        (Some(l), Some(h)) => format!("{l} ≤ μ ≤ {h}"),
        (Some(l), None) => format!("≥ {l}"),
        (None, Some(h)) => format!("≤ {h}"),
        (None, None) => "?".into(),
    }
}

fn mu_tilde_cell(r: Range) -> String {
    match (r.lo, r.hi) {
        (Some(l), Some(h)) if l == h => l.to_string(),
        (Some(l), Some(h)) => format!("{l}..{h}"),
        (Some(l), None) => format!("≥ {l}"),
        (None, Some(h)) => format!("≤ {h}"),
        (None, None) => "?".into(),
    }
}

fn footnote_text(letter: &str) -> &'static str {
    match letter {
        "a" => "μ = μ̃ because A = B or μ̃ = ⌊A/3⌋",
        "b" => "the upper bound on μ is h(s) + C(s+2, 3)",
        "c" => "δ = 0 by the genus certificate",
        "d" => "the general AG scheme is mH - K on the curve, and μ̃ = ν̃ because dim |mH - K| ≥ ν̃",
        "e" => "complete intersection case",
        "f" => "the general member is not mH - K on any integral ACM curve",
        _ => "",
    }
}

/// Table layout with one line per curve and footnote letters on the μ
/// column.
pub fn render_markdown(rows: &[CatalogRow]) -> String {
    let mut out = String::new();
    out.push_str("| d | h | A | m | h̃ | (d̃,g̃) | B | | ν̃ | μ̃ | μ |\n");
    out.push_str("|---|---|---|---|---|---|---|---|---|---|---|\n");
    let mut used: Vec<&str> = Vec::new();
    for row in rows {
        let mut mu = range_cell(row.mu);
        if !row.footnotes.is_empty() {
            write!(mu, " ^{}", row.footnotes.join(",")).unwrap();
        }
        for f in &row.footnotes {
            if !used.contains(&f.as_str()) {
                used.push(f);
            }
        }
        let head = format!("| {} | {{{}}} | {} | {} ", row.d, row.h, row.a, row.m);
        let blank = "|  |  |  |  ";
        if row.curves.is_empty() {
            writeln!(out, "{head}|  |  |  |  |  |  | {mu} |").unwrap();
        }
        for (i, c) in row.curves.iter().enumerate() {
            let b = match c.b {
                BValue::Exact(v) => v.to_string(),
                BValue::AtMost(v) => format!("≤ {v}"),
            };
            let status = match c.status {
                MhkStatus::Yes => "✓",
                MhkStatus::No => "no",
                MhkStatus::Unknown => "?",
            };
            let nu = c
                .nu_tilde
                .map(|v| v.to_string())
                .unwrap_or_else(|| "?".into());
            writeln!(
                out,
                "{}| {{{}}} | ({},{}) | {} | {} | {} | {} | {} |",
                if i == 0 { head.as_str() } else { blank },
                c.h,
                c.degree,
                c.genus,
                b,
                status,
                nu,
                mu_tilde_cell(c.mu_tilde),
                if i == 0 { mu.as_str() } else { "" },
            )
            .unwrap();
        }
    }
    used.sort_unstable();
    if !used.is_empty() {
        out.push('\n');
        for f in used {
            writeln!(out, "- {f}: {}", footnote_text(f)).unwrap();
        }
    }
    out
}
