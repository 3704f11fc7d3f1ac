//! Text and CSV rendering.

use std::fmt::Write;

use crate::betti::{BettiTable, ClassificationReport};
use crate::theorems::{ExpectedTable, VerificationReport};

/// Macaulay-style table: column `i`, row `r = s - i`, zeros shown as `.`.
pub fn betti_text(table: &BettiTable) -> String {
    let rows = table.macaulay_rows();
    let totals = table.totals();
    let cols = table.nonzero_totals().len().max(1);
    let width = totals.iter().map(|v| v.to_string().len()).max().unwrap_or(1).max(cols.to_string().len());
    let mut out = String::new();
    let _ = writeln!(out, "{} over {}", table.config(), table.field());
    let _ = write!(out, "{:>7}", "");
    for i in 0..cols {
        let _ = write!(out, " {i:>width$}");
    }
    out.push('\n');
    let _ = write!(out, "{:>7}", "total:");
    for t in &totals[..cols] {
        let _ = write!(out, " {t:>width$}");
    }
    out.push('\n');
    for (r, row) in rows.iter().enumerate() {
        let _ = write!(out, "{:>7}", format!("{r}:"));
        for v in &row[..cols] {
            let cell = if *v == 0 { ".".to_string() } else { v.to_string() };
            let _ = write!(out, " {cell:>width$}");
        }
        out.push('\n');
    }
    let cert = match table.certification() {
        Ok(()) => "certified".to_string(),
        Err(e) => format!("NOT certified: {e}"),
    };
    let _ = writeln!(out, "scanned i <= {}, s <= {} ({cert})", table.i_max(), table.s_max());
    out
}

/// Known, zero and nonzero claims next to the computed values.
pub fn annotations_text(table: &BettiTable, expected: &ExpectedTable) -> String {
    let mut out = String::new();
    for (&(i, s), e) in &expected.known {
        let actual = table.entry(i, s);
        let mark = if actual == e.value { "ok" } else { "MISMATCH" };
        let _ = writeln!(out, "  beta({i},{s}) = {actual:<6} [{}: {}] {mark}", e.claim, e.value);
    }
    for d in &expected.defects {
        let (i, s) = d.cell;
        let _ = writeln!(
            out,
            "  beta({i},{s}) = {:<6} [{}: formula gives {}] MISMATCH",
            table.entry(i, s),
            d.claim,
            d.value
        );
    }
    for (&(i, s), claim) in &expected.nonzero {
        let actual = table.entry(i, s);
        let mark = if actual != 0 { "ok" } else { "MISMATCH" };
        let _ = writeln!(out, "  beta({i},{s}) = {actual:<6} [{claim}: nonzero] {mark}");
    }
    for &(i, s) in expected.unknown.iter().filter(|c| !expected.nonzero.contains_key(c)) {
        let _ = writeln!(out, "  beta({i},{s}) = {:<6} [unpredicted]", table.entry(i, s));
    }
    out
}

pub fn betti_csv(table: &BettiTable) -> String {
    let mut out = String::from("i,s,row,value\n");
    for (&(i, s), v) in table.entries() {
        let row = s as i64 - i as i64;
        let _ = writeln!(out, "{i},{s},{row},{v}");
    }
    out
}

pub fn classification_text(r: &ClassificationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "pdim: {}", r.pdim);
    let _ = writeln!(out, "depth: {}", r.depth);
    let _ = writeln!(out, "krull dimension: {}", r.krull_dim);
    let _ = writeln!(out, "Cohen-Macaulay: {}", r.is_cm);
    let _ = writeln!(out, "Gorenstein: {}", r.is_gorenstein);
    let _ = writeln!(out, "linearity index: {}", r.linearity_index);
    match r.first_nonlinear {
        Some((i, s)) => {
            let _ = writeln!(out, "first nonlinear entry: beta({i},{s})");
        }
        None => {
            let _ = writeln!(out, "first nonlinear entry: none");
        }
    }
    let _ = writeln!(out, "observed regularity: {}", r.observed_regularity);
    out
}

pub fn verification_text(report: &VerificationReport, verbose: bool) -> String {
    let mut out = String::new();
    let failed = report.checks.iter().filter(|c| !c.passed).count();
    let status = if report.all_pass { "PASS" } else { "FAIL" };
    let _ = writeln!(
        out,
        "{status} {} over {}: {} checks, {failed} failed",
        report.config,
        report.field,
        report.checks.len()
    );
    for c in &report.checks {
        if verbose || !c.passed {
            let mark = if c.passed { "pass" } else { "FAIL" };
            let _ = writeln!(out, "  {mark} {}: {} (expected {}, got {})", c.claim, c.statement, c.expected, c.actual);
        }
    }
    if verbose {
        for u in &report.unknown {
            let _ = writeln!(out, "  info unpredicted beta({},{}) = {}", u.i, u.s, u.value);
        }
        if let Some(w) = &report.witness {
            let _ = writeln!(out, "  info witness h = {} gives beta({}) = {}", w.h, w.i, w.dim);
        }
    }
    out
}

pub fn verification_csv(reports: &[VerificationReport]) -> String {
    let mut out = String::from("config,field,claim,passed,expected,actual\n");
    for r in reports {
        for c in &r.checks {
            let _ = writeln!(
                out,
                "\"{}\",{},{},{},\"{}\",\"{}\"",
                r.config,
                r.field,
                c.claim,
                c.passed,
                c.expected.replace('"', "'"),
                c.actual.replace('"', "'")
            );
        }
    }
    out
}
