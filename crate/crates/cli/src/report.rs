use std::io::{self, Write};

use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// One checked case. `lhs`/`rhs` hold canonical polynomial text; checks
/// that have no two sides carry a `detail` line instead.
#[derive(Debug, Clone, Serialize)]
pub struct Case {
    pub id: String,
    pub n: usize,
    pub j: Option<usize>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Case {
    pub fn sides(id: impl Into<String>, n: usize, j: Option<usize>, pass: bool, lhs: String, rhs: String) -> Self {
        Case { id: id.into(), n, j, pass, lhs: Some(lhs), rhs: Some(rhs), detail: None }
    }

    pub fn detail(id: impl Into<String>, n: usize, j: Option<usize>, pass: bool, detail: String) -> Self {
        Case { id: id.into(), n, j, pass, lhs: None, rhs: None, detail: Some(detail) }
    }
}

/// Tabular payload for commands that produce data rather than checks.
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub params: Map<String, Value>,
    pub cases: Vec<Case>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub data: Option<Value>,
    pub all_pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u128>,
    #[serde(skip)]
    pub table: Option<Table>,
    #[serde(skip)]
    pub text: Option<String>,
    #[serde(skip)]
    pub csv: Option<String>,
}

impl Report {
    pub fn new(command: &str, params: Map<String, Value>) -> Self {
        Report {
            command: command.to_string(),
            params,
            cases: Vec::new(),
            data: None,
            all_pass: true,
            wall_time_ms: None,
            table: None,
            text: None,
            csv: None,
        }
    }

    pub fn push(&mut self, case: Case) {
        self.all_pass &= case.pass;
        self.cases.push(case);
    }

    pub fn render(&self, format: Format) -> io::Result<String> {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self)?;
                s.push('\n');
                Ok(s)
            }
            Format::Csv => match &self.csv {
                Some(raw) => Ok(raw.clone()),
                None => self.render_csv(),
            },
            Format::Text => Ok(self.render_text()),
        }
    }

    fn render_csv(&self) -> io::Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        if let Some(table) = &self.table {
            w.write_record(&table.header)?;
            for row in &table.rows {
                w.write_record(row)?;
            }
        } else {
            w.write_record(["id", "n", "j", "pass", "lhs", "rhs", "detail"])?;
            for c in &self.cases {
                w.write_record([
                    c.id.clone(),
                    c.n.to_string(),
                    c.j.map(|j| j.to_string()).unwrap_or_default(),
                    c.pass.to_string(),
                    c.lhs.clone().unwrap_or_default(),
                    c.rhs.clone().unwrap_or_default(),
                    c.detail.clone().unwrap_or_default(),
                ])?;
            }
        }
        let bytes = w.into_inner().map_err(|e| io::Error::other(e.to_string()))?;
        String::from_utf8(bytes).map_err(io::Error::other)
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        if let Some(text) = &self.text {
            out.push_str(text);
        } else if let Some(table) = &self.table {
            out.push_str(&table.header.join("\t"));
            out.push('\n');
            for row in &table.rows {
                out.push_str(&row.join("\t"));
                out.push('\n');
            }
        }
        for c in &self.cases {
            let tag = if c.pass { "PASS" } else { "FAIL" };
            let j = c.j.map(|j| format!(" j={j}")).unwrap_or_default();
            out.push_str(&format!("{tag} {} n={}{j}", c.id, c.n));
            if let Some(d) = &c.detail {
                out.push_str(&format!(": {d}"));
            }
            out.push('\n');
            match (&c.lhs, &c.rhs) {
                (Some(l), Some(r)) if c.pass && l == r => out.push_str(&format!("  = {l}\n")),
                (Some(l), Some(r)) => out.push_str(&format!("  lhs = {l}\n  rhs = {r}\n")),
                _ => {}
            }
        }
        if !self.cases.is_empty() {
            let passed = self.cases.iter().filter(|c| c.pass).count();
            out.push_str(&format!("{passed}/{} cases passed\n", self.cases.len()));
        }
        if let Some(ms) = self.wall_time_ms {
            out.push_str(&format!("wall time: {ms} ms\n"));
        }
        out
    }

    pub fn emit(&self, format: Format) -> io::Result<()> {
        let s = self.render(format)?;
        let mut out = io::stdout().lock();
        out.write_all(s.as_bytes())?;
        out.flush()
    }
}
