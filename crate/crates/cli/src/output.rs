use std::io::{self, Write};

use clap::ValueEnum;
use serde::Serialize;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

/// One emitted value. `value` is the lossless `p/q` or `a+b*sqrt2` form.
#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    pub value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
}

pub fn write_records(out: impl Write, records: &[Record], format: Format) -> io::Result<()> {
    match format {
        Format::Json => write_json(out, records),
        Format::Csv => write_csv(out, records),
    }
}

fn write_json(mut out: impl Write, records: &[Record]) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut out, records)?;
    writeln!(out)
}

fn write_csv(out: impl Write, records: &[Record]) -> io::Result<()> {
    let with_k = records.iter().any(|r| r.k.is_some());
    let with_method = records.iter().any(|r| r.method.is_some());
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["n"];
    if with_k {
        header.push("k");
    }
    header.push("value");
    if with_method {
        header.push("method");
    }
    w.write_record(&header)?;
    for r in records {
        let mut row = vec![r.n.to_string()];
        if let Some(k) = r.k {
            row.push(k.to_string());
        }
        row.push(r.value.clone());
        if let Some(m) = &r.method {
            row.push(m.clone());
        }
        w.write_record(&row)?;
    }
    w.flush()
}
