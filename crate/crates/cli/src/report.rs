use std::io::Write;

use clap::ValueEnum;
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// What a command produced: a table for text/csv, a JSON body, and the
/// exit status (0 ok or pass, 1 rejection or failure).
pub struct Report {
    pub command: &'static str,
    pub data: Value,
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    /// replaces the table in text mode
    pub text: Option<String>,
    pub status: i32,
}

impl Report {
    pub fn new(command: &'static str, data: Value) -> Self {
        Report {
            command,
            data,
            headers: Vec::new(),
            rows: Vec::new(),
            text: None,
            status: 0,
        }
    }

    pub fn table(mut self, headers: Vec<&'static str>, rows: Vec<Vec<String>>) -> Self {
        self.headers = headers;
        self.rows = rows;
        self
    }

    pub fn text(mut self, t: String) -> Self {
        self.text = Some(t);
        self
    }

    pub fn fail_if(mut self, cond: bool) -> Self {
        if cond {
            self.status = 1;
        }
        self
    }

    pub fn render(&self, fmt: Format) -> String {
        match fmt {
            Format::Json => {
                let mut m = Map::new();
                m.insert("schema".into(), json!(1));
                m.insert("command".into(), json!(self.command));
                match &self.data {
                    Value::Object(o) => m.extend(o.clone()),
                    other => {
                        m.insert("result".into(), other.clone());
                    }
                }
                let mut s = serde_json::to_string_pretty(&Value::Object(m)).expect("json values serialize");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.headers).expect("in-memory write");
                for r in &self.rows {
                    w.write_record(r).expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf8 fields")
            }
            Format::Text => match &self.text {
                Some(t) => format!("{t}\n"),
                None => aligned(&self.headers, &self.rows),
            },
        }
    }

    pub fn emit(&self, fmt: Format) -> i32 {
        let out = std::io::stdout();
        let mut lock = out.lock();
        // a closed pipe is not worth a panic
        let _ = lock.write_all(self.render(fmt).as_bytes());
        self.status
    }
}

fn aligned(headers: &[&str], rows: &[Vec<String>]) -> String {
    let cols = headers.len();
    let mut width: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (i, c) in r.iter().enumerate().take(cols) {
            width[i] = width[i].max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (i, c) in cells.iter().enumerate() {
            if i + 1 == cells.len() {
                s.push_str(c);
            } else {
                s.push_str(c);
                s.push_str(&" ".repeat(width[i] - c.chars().count() + 2));
            }
        }
        s.trim_end().to_string() + "\n"
    };
    let mut out = line(headers.to_vec());
    for r in rows {
        out += &line(r.iter().map(String::as_str).collect());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats() {
        let r = Report::new("t", json!({"n": 2})).table(vec!["n", "value"], vec![vec!["1".into(), "2".into()], vec!["10".into(), "3".into()]]);
        assert_eq!(r.render(Format::Text), "n   value\n1   2\n10  3\n");
        assert_eq!(r.render(Format::Csv), "n,value\n1,2\n10,3\n");
        let j: Value = serde_json::from_str(&r.render(Format::Json)).unwrap();
        assert_eq!(j["schema"], 1);
        assert_eq!(j["command"], "t");
        assert_eq!(j["n"], 2);
    }
}
