//! Command output: one JSON document or one CSV table per command.

use std::io::Write;

use serde::Serialize;
use serde_json::Value;

use salem_core::{ratio_to_f64, Enclosure, Rational};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// The result of a command in both output shapes.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub json: Value,
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Report {
    pub fn new(json: impl Serialize, headers: Vec<&'static str>, rows: Vec<Vec<String>>) -> Self {
        Report {
            json: serde_json::to_value(json).expect("report types serialize"),
            headers,
            rows,
        }
    }

    pub fn write(&self, format: Format, out: impl Write) -> Result<(), CliError> {
        match format {
            Format::Json => {
                let mut out = out;
                serde_json::to_writer_pretty(&mut out, &self.json)?;
                writeln!(out)?;
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.headers)?;
                for row in &self.rows {
                    w.write_record(row)?;
                }
                w.flush()?;
            }
        }
        Ok(())
    }
}

/// `num/den`, with an explicit denominator even for integers.
pub fn exact(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExactValue {
    pub exact: String,
    pub float: f64,
}

impl From<&Rational> for ExactValue {
    fn from(x: &Rational) -> Self {
        ExactValue {
            exact: exact(x),
            float: ratio_to_f64(x),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Interval {
    pub lo: ExactValue,
    pub hi: ExactValue,
    pub width: f64,
}

impl From<&Enclosure> for Interval {
    fn from(e: &Enclosure) -> Self {
        Interval {
            lo: e.lo().into(),
            hi: e.hi().into(),
            width: ratio_to_f64(&e.width()),
        }
    }
}
