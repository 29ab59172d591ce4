//! Crash-safe resume log for long searches.
//!
//! Line-oriented and append-only:
//!
//! ```text
//! run <q_lo> <q_hi> <q_max>
//! found <record json>
//! done <q>
//! ```
//!
//! `found` lines for a q are written before its `done` marker, so a `done`
//! line proves the q's results are all present. A torn final line (crash
//! mid-write) is ignored on replay; its q simply reruns, and the global
//! dedup makes the rerun harmless.

use std::collections::BTreeSet;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use anyhow::{bail, Context, Result};

use crate::record::Record;
use hall_core::sieve::QSearch;

/// Run parameters a checkpoint is bound to; resuming under different
/// parameters would change the candidate bounds and corrupt the result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunParams {
    pub q_lo: u64,
    pub q_hi: u64,
    pub q_max: u64,
}

#[derive(Debug, Default)]
pub struct ResumeState {
    pub done: BTreeSet<u64>,
    pub found: Vec<Record>,
}

#[derive(Debug)]
pub struct Checkpoint {
    file: File,
}

impl Checkpoint {
    /// Open (or create) the log at `path` for the given parameters and
    /// replay whatever completed work it already holds.
    pub fn load_or_create(path: &Path, params: RunParams) -> Result<(Checkpoint, ResumeState)> {
        let mut state = ResumeState::default();
        if path.exists() {
            let reader = BufReader::new(
                File::open(path).with_context(|| format!("open checkpoint {}", path.display()))?,
            );
            let lines: Vec<String> = reader.lines().collect::<std::io::Result<_>>()?;
            if lines.is_empty() {
                bail!("checkpoint {} is empty (no run header)", path.display());
            }
            let header = parse_header(&lines[0])
                .with_context(|| format!("checkpoint {} has a bad header", path.display()))?;
            if header != params {
                bail!(
                    "checkpoint {} belongs to run (q_lo={}, q_hi={}, q_max={}), not (q_lo={}, q_hi={}, q_max={})",
                    path.display(),
                    header.q_lo, header.q_hi, header.q_max,
                    params.q_lo, params.q_hi, params.q_max,
                );
            }
            let last = lines.len() - 1;
            for (i, line) in lines.iter().enumerate().skip(1) {
                match parse_line(line) {
                    Ok(Line::Done(q)) => {
                        state.done.insert(q);
                    }
                    Ok(Line::Found(rec)) => state.found.push(rec),
                    Err(err) if i == last => {
                        // torn write from an interrupted run; the q reruns
                        eprintln!(
                            "checkpoint: ignoring torn final line ({err}); its q will rerun"
                        );
                    }
                    Err(err) => {
                        bail!("checkpoint {} line {}: {err}", path.display(), i + 1);
                    }
                }
            }
            let file = OpenOptions::new().append(true).open(path)?;
            Ok((Checkpoint { file }, state))
        } else {
            let mut file = OpenOptions::new()
                .create_new(true)
                .append(true)
                .open(path)
                .with_context(|| format!("create checkpoint {}", path.display()))?;
            writeln!(file, "run {} {} {}", params.q_lo, params.q_hi, params.q_max)?;
            file.flush()?;
            Ok((Checkpoint { file }, state))
        }
    }

    /// Append one completed q unit: its found records, then the done marker.
    pub fn record_q(&mut self, result: &QSearch) -> Result<()> {
        for t in &result.triplets {
            let rec = Record::from_triplet(t, "sieve");
            writeln!(self.file, "found {}", serde_json::to_string(&rec)?)?;
        }
        writeln!(self.file, "done {}", result.q)?;
        self.file.flush()?;
        Ok(())
    }
}

enum Line {
    Done(u64),
    Found(Record),
}

fn parse_header(line: &str) -> Result<RunParams> {
    let rest = line
        .strip_prefix("run ")
        .with_context(|| format!("expected `run ...`, got {line:?}"))?;
    let parts: Vec<&str> = rest.split_whitespace().collect();
    if parts.len() != 3 {
        bail!("expected `run <q_lo> <q_hi> <q_max>`, got {line:?}");
    }
    Ok(RunParams {
        q_lo: parts[0].parse()?,
        q_hi: parts[1].parse()?,
        q_max: parts[2].parse()?,
    })
}

fn parse_line(line: &str) -> Result<Line> {
    if let Some(q) = line.strip_prefix("done ") {
        return Ok(Line::Done(q.trim().parse().context("bad done line")?));
    }
    if let Some(json) = line.strip_prefix("found ") {
        return Ok(Line::Found(
            serde_json::from_str(json).context("bad found line")?,
        ));
    }
    bail!("unrecognized checkpoint line {line:?}");
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn creates_replays_and_rejects_mismatch() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cp.log");
        let params = RunParams { q_lo: 2, q_hi: 4, q_max: 4 };

        let (mut cp, state) = Checkpoint::load_or_create(&path, params).unwrap();
        assert!(state.done.is_empty());
        let result = hall_core::sieve::search_q(3, 4);
        cp.record_q(&result).unwrap();
        drop(cp);

        let (_, state) = Checkpoint::load_or_create(&path, params).unwrap();
        assert_eq!(state.done.iter().copied().collect::<Vec<_>>(), vec![3]);
        assert_eq!(state.found.len(), result.triplets.len());

        let other = RunParams { q_lo: 2, q_hi: 4, q_max: 5 };
        let err = Checkpoint::load_or_create(&path, other).unwrap_err();
        assert!(err.to_string().contains("belongs to run"));
    }

    #[test]
    fn torn_final_line_is_ignored() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cp.log");
        std::fs::write(&path, "run 2 4 4\ndone 2\nfound {\"x\":\"123").unwrap();
        let params = RunParams { q_lo: 2, q_hi: 4, q_max: 4 };
        let (_, state) = Checkpoint::load_or_create(&path, params).unwrap();
        assert_eq!(state.done.iter().copied().collect::<Vec<_>>(), vec![2]);
        assert!(state.found.is_empty());
    }

    #[test]
    fn corrupt_middle_line_is_an_error() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cp.log");
        std::fs::write(&path, "run 2 4 4\ngarbage\ndone 2\n").unwrap();
        let params = RunParams { q_lo: 2, q_hi: 4, q_max: 4 };
        assert!(Checkpoint::load_or_create(&path, params).is_err());
    }
}
