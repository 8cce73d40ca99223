//! Serialized rows for `value` and `table`.

use std::io::{Read, Write};

use anyhow::{Context, Result};
use num_bigint::BigInt;
use sdpdeg_core::degree::DegreeResult;
use serde::{Deserialize, Serialize};

pub const CSV_HEADER: [&str; 7] = ["m", "n", "r", "k", "l", "delta", "method"];

/// One computed δ. `delta` stays a decimal string so consumers never see it
/// squeezed through a machine integer.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub m: u32,
    pub n: u32,
    pub r: u32,
    #[serde(rename = "k")]
    pub k_script: u32,
    #[serde(rename = "l")]
    pub l_script: u32,
    pub delta: String,
    pub method: String,
    #[serde(default)]
    pub elapsed_ms: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cross_checked: Option<String>,
}

impl OutputRecord {
    pub fn delta_value(&self) -> Result<BigInt> {
        self.delta.parse().with_context(|| format!("delta {:?} is not an integer", self.delta))
    }

    /// The columns shared by CSV and JSON, for round-trip comparisons.
    pub fn csv_fields(&self) -> [String; 7] {
        [
            self.m.to_string(),
            self.n.to_string(),
            self.r.to_string(),
            self.k_script.to_string(),
            self.l_script.to_string(),
            self.delta.clone(),
            self.method.clone(),
        ]
    }
}

impl From<&DegreeResult> for OutputRecord {
    fn from(res: &DegreeResult) -> Self {
        let t = res.triple;
        Self {
            m: t.m(),
            n: t.n(),
            r: t.r(),
            k_script: t.k_script(),
            l_script: t.l_script(),
            delta: res.delta.to_string(),
            method: res.method.as_str().to_owned(),
            elapsed_ms: res.elapsed.as_secs_f64() * 1e3,
            cross_checked: res.cross_checked.map(|m| m.as_str().to_owned()),
        }
    }
}

pub fn write_csv<W: Write>(out: W, records: &[OutputRecord]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for rec in records {
        w.write_record(rec.csv_fields())?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv<R: Read>(input: R) -> Result<Vec<OutputRecord>> {
    let mut rd = csv::Reader::from_reader(input);
    let header: Vec<String> = rd.headers()?.iter().map(str::to_owned).collect();
    anyhow::ensure!(header == CSV_HEADER, "unexpected CSV header {header:?}");
    rd.deserialize().map(|row| row.context("malformed CSV row")).collect()
}

pub fn write_json<W: Write>(mut out: W, records: &[OutputRecord]) -> Result<()> {
    serde_json::to_writer_pretty(&mut out, records)?;
    writeln!(out)?;
    Ok(())
}

pub fn read_json<R: Read>(input: R) -> Result<Vec<OutputRecord>> {
    Ok(serde_json::from_reader(input)?)
}
