//! Text rendering. Index sets are printed one-based.

use serde_json::{json, Value};

use nearmds::codes::{ClauseReport, CodeReport, MatrixVerdict, Verdict};
use nearmds::construct::{ConditionReport, Direction, SumMode, Target};
use nearmds::recursive::{Eligibility, ThetaConstruction};
use nearmds::{FieldMatrix, Notation};

/// What a command prints, in both forms. `failure` carries a nonzero exit
/// code for commands that still produce a full report.
#[derive(Default)]
pub struct Out {
    pub text: String,
    pub json: Value,
    pub failure: Option<(u8, String)>,
}

impl Out {
    pub fn line(&mut self, s: String) {
        self.text.push_str(&s);
        self.text.push('\n');
    }
}

/// `{1,3,4}` from zero-based indices.
pub fn set(idx: &[usize]) -> String {
    let parts: Vec<String> = idx.iter().map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

/// Values as they are, e.g. exponents.
pub fn list<T: ToString>(xs: &[T]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

pub fn matrix_text(m: &FieldMatrix, notation: Notation) -> String {
    let f = m.field();
    let cells: Vec<Vec<String>> =
        m.to_rows().iter().map(|r| r.iter().map(|&e| f.format(e, notation)).collect()).collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    let mut out = String::new();
    for row in cells {
        let padded: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        out.push_str("  ");
        out.push_str(padded.join(" ").trim_end());
        out.push('\n');
    }
    out
}

pub fn verdict(v: Verdict) -> &'static str {
    match v {
        Verdict::Mds => "MDS",
        Verdict::Nmds => "NMDS",
        Verdict::AmdsOnly => "AMDS_only",
        Verdict::Other => "OTHER",
    }
}

pub fn matrix_verdict(v: MatrixVerdict) -> &'static str {
    match v {
        MatrixVerdict::Mds => "MDS",
        MatrixVerdict::Nmds => "NMDS",
        MatrixVerdict::Neither => "neither",
    }
}

pub fn eligibility(e: Eligibility) -> &'static str {
    match e {
        Eligibility::MdsEligible => "MDS-eligible",
        Eligibility::NmdsEligible => "NMDS-eligible",
        Eligibility::Ineligible => "ineligible",
    }
}

pub fn target(t: Target) -> &'static str {
    match t {
        Target::Mds => "MDS",
        Target::Nmds => "NMDS",
    }
}

pub fn direction(d: Direction) -> &'static str {
    match d {
        Direction::Forward => "V1^-1 V2",
        Direction::Backward => "V2^-1 V1",
    }
}

pub fn code_text(r: &CodeReport) -> String {
    let mut out = format!("[{}, {}] code: d1 = {}", r.n, r.k, r.d1);
    if let Some(d2) = r.d2 {
        out.push_str(&format!(", d2 = {d2}"));
    }
    out.push_str(&format!(", verdict {}\n", verdict(r.verdict)));
    if let Some(p) = &r.dr_profile {
        out.push_str(&format!("d_r profile: {}\n", list(p)));
    }
    for w in &r.witnesses {
        out.push_str(&format!("witness {}: columns {}\n", w.clause, set(&w.columns)));
    }
    out
}

pub fn clauses_text(c: &ClauseReport) -> String {
    let mut out = String::new();
    match &c.clause_i_violation {
        Some(cols) => out.push_str(&format!("clause (i) fails: columns {} are dependent\n", set(cols))),
        None => out.push_str("clause (i) holds\n"),
    }
    match &c.clause_ii_witness {
        Some(cols) => out.push_str(&format!("clause (ii) holds: columns {} are dependent\n", set(cols))),
        None => out.push_str("clause (ii) fails: every n columns are independent\n"),
    }
    match &c.clause_iii_violation {
        Some(cols) => out.push_str(&format!("clause (iii) fails: columns {} are rank deficient\n", set(cols))),
        None => out.push_str("clause (iii) holds\n"),
    }
    out
}

fn mode(m: SumMode) -> &'static str {
    match m {
        SumMode::Sum => "sum",
        SumMode::InvSum => "inverse sum",
        SumMode::ProductForm => "product form",
    }
}

pub fn condition_text(c: &ConditionReport) -> String {
    let mut out = format!("subset scan ({}): {} subsets, {} zero\n", mode(c.mode), c.subsets, c.zero);
    if let Some(z) = &c.first_zero {
        out.push_str(&format!("first zero subset: pool positions {}\n", set(z)));
    }
    out
}

pub fn theta_json(c: &ThetaConstruction, notation: Notation) -> Value {
    json!({
        "m": c.m,
        "poly": c.poly.format(notation),
        "eligibility": c.eligibility,
        "zero_exponents": c.zero_exponents,
        "verified": c.verified,
    })
}
