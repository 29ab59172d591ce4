//! Output records and their serialization. All numeric fields are exact
//! decimal strings (the values overflow 64-bit integers), so JSONL and CSV
//! round-trip losslessly and files diff cleanly.

use anyhow::{Context, Result};
use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};

use hall_core::oracle;
use hall_core::GoodTriplet;

/// One result row: the triplet, its approximation, the Hall ratio, and
/// which engine produced it ("sieve" or "oracle").
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub x: String,
    pub y: String,
    pub k: String,
    pub p: String,
    pub q: String,
    pub r: String,
    pub source: String,
}

impl Record {
    pub fn from_triplet(t: &GoodTriplet, source: &str) -> Record {
        Record {
            x: t.x.to_string(),
            y: t.y.to_string(),
            k: t.k.to_string(),
            p: t.p.to_string(),
            q: t.q.to_string(),
            r: oracle::hall_ratio(&t.x, &t.k).expect("good triplet has k != 0"),
            source: source.to_string(),
        }
    }

    pub fn to_triplet(&self) -> Result<GoodTriplet> {
        let parse_u = |s: &str, field: &str| -> Result<BigUint> {
            s.parse()
                .with_context(|| format!("record field {field} is not a natural: {s:?}"))
        };
        Ok(GoodTriplet {
            x: parse_u(&self.x, "x")?,
            y: parse_u(&self.y, "y")?,
            k: self
                .k
                .parse::<BigInt>()
                .with_context(|| format!("record field k is not an integer: {:?}", self.k))?,
            p: parse_u(&self.p, "p")?,
            q: parse_u(&self.q, "q")?,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Jsonl,
    Csv,
    Table,
}

pub const CSV_HEADER: &str = "x,y,k,p,q,r,source";

/// Render records in the chosen format. Output is byte-deterministic for
/// a given record list.
pub fn render(records: &[Record], format: Format) -> String {
    match format {
        Format::Jsonl => {
            let mut out = String::new();
            for r in records {
                out.push_str(&serde_json::to_string(r).expect("record serializes"));
                out.push('\n');
            }
            out
        }
        Format::Csv => {
            let mut out = String::from(CSV_HEADER);
            out.push('\n');
            for r in records {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    r.x, r.y, r.k, r.p, r.q, r.r, r.source
                ));
            }
            out
        }
        Format::Table => {
            let header = ["x", "y", "k", "p", "q", "r", "source"];
            let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
            for r in records {
                let cells = [&r.x, &r.y, &r.k, &r.p, &r.q, &r.r, &r.source];
                for (w, c) in widths.iter_mut().zip(cells) {
                    *w = (*w).max(c.len());
                }
            }
            let mut out = String::new();
            let push_row = |cells: [&str; 7], out: &mut String| {
                let row: Vec<String> = cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:>w$}"))
                    .collect();
                out.push_str(row.join("  ").trim_end());
                out.push('\n');
            };
            push_row(header, &mut out);
            for r in records {
                push_row([&r.x, &r.y, &r.k, &r.p, &r.q, &r.r, &r.source], &mut out);
            }
            out
        }
    }
}
