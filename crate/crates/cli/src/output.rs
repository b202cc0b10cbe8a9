//! Table / JSON / CSV rendering.

use serde_json::Value;

use crate::Format;

/// One command's output in all three shapes.
pub struct Doc {
    comments: Vec<String>,
    header: Vec<String>,
    rows: Vec<Vec<String>>,
    /// CSV defaults to the table columns unless these are set.
    pub csv_header: Vec<String>,
    pub csv_rows: Vec<Vec<String>>,
    pub json: Value,
}

impl Doc {
    pub fn new(header: &[&str]) -> Doc {
        Doc {
            comments: Vec::new(),
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
            csv_header: Vec::new(),
            csv_rows: Vec::new(),
            json: Value::Null,
        }
    }

    pub fn comment(&mut self, line: &str) {
        self.comments.push(line.to_string());
    }

    pub fn row(&mut self, cells: Vec<String>) {
        self.rows.push(cells);
    }
}

pub fn render(doc: &Doc, format: Format) -> String {
    match format {
        Format::Table => table(doc),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&doc.json).expect("serializable");
            s.push('\n');
            s
        }
        Format::Csv => csv(doc),
    }
}

fn table(doc: &Doc) -> String {
    let mut out = String::new();
    for c in &doc.comments {
        out.push_str("# ");
        out.push_str(c);
        out.push('\n');
    }
    let mut widths: Vec<usize> = doc.header.iter().map(|h| h.chars().count()).collect();
    for r in &doc.rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: &[String]| {
        let mut s = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect::<Vec<_>>()
            .join("  ");
        s.truncate(s.trim_end().len());
        s.push('\n');
        s
    };
    out.push_str(&line(&doc.header));
    for r in &doc.rows {
        out.push_str(&line(r));
    }
    out
}

fn csv(doc: &Doc) -> String {
    let (header, rows) = if doc.csv_header.is_empty() {
        (&doc.header, &doc.rows)
    } else {
        (&doc.csv_header, &doc.csv_rows)
    };
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}
