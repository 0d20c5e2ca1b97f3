//! Append-only checkpoint journal for resumable searches.
//!
//! One record per completed range of underlying-graph bitmasks:
//!
//! ```text
//! range_start range_end best_value witness_sg6 spec_checksum
//! ```
//!
//! `best_value`/`witness_sg6` are `-inf`/`-` when the range produced no
//! candidate. Each record carries the checksum of the originating search
//! spec, and resumption rejects a journal written under a different spec.
//! `# stats <start> <end> <graphs> <classes>` comment lines carry the range's
//! enumeration counters so resumed certificates keep exact statistics.

use crate::error::{Error, Result};
use crate::sgraph::{decode_sg6, SignedGraph};
use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

#[derive(Debug, Clone)]
pub(crate) struct JournalRecord {
    pub start: u64,
    pub end: u64,
    pub best: Option<(f64, SignedGraph)>,
    pub graphs: u64,
    pub classes: u64,
}

pub(crate) struct Journal {
    file: File,
    checksum: u64,
}

impl Journal {
    pub fn open(path: &Path, checksum: u64) -> Result<(Journal, Vec<JournalRecord>)> {
        let mut records: Vec<JournalRecord> = Vec::new();
        let mut stats: HashMap<(u64, u64), (u64, u64)> = HashMap::new();
        // A crash can tear the final line; a malformed record is tolerated
        // only in last position (the range is simply redone), anywhere else
        // it is corruption.
        let mut torn: Option<String> = None;
        if path.exists() {
            let reader = BufReader::new(File::open(path)?);
            for (lineno, line) in reader.lines().enumerate() {
                let line = line?;
                let line = line.trim();
                if line.is_empty() {
                    continue;
                }
                if let Some(prior) = torn.take() {
                    return Err(Error::domain(format!("corrupt checkpoint journal: {prior}")));
                }
                if let Some(rest) = line.strip_prefix("# stats ") {
                    let f: Vec<&str> = rest.split_whitespace().collect();
                    if f.len() == 4 {
                        if let (Ok(s), Ok(e), Ok(g), Ok(c)) =
                            (f[0].parse(), f[1].parse(), f[2].parse(), f[3].parse())
                        {
                            stats.insert((s, e), (g, c));
                        }
                    }
                    continue;
                }
                if line.starts_with('#') {
                    continue;
                }
                match Self::parse_record(line, checksum) {
                    Ok(Some(rec)) => records.push(rec),
                    Ok(None) => {
                        return Err(Error::domain(
                            "checkpoint journal was written by a different search spec",
                        ));
                    }
                    Err(e) => torn = Some(format!("line {}: {e}", lineno + 1)),
                }
            }
        }
        for rec in &mut records {
            if let Some(&(g, c)) = stats.get(&(rec.start, rec.end)) {
                rec.graphs = g;
                rec.classes = c;
            }
        }
        let file = OpenOptions::new().create(true).append(true).open(path)?;
        Ok((Journal { file, checksum }, records))
    }

    /// Parses one record line. `Ok(None)` means a well-formed record whose
    /// checksum belongs to a different spec.
    fn parse_record(line: &str, checksum: u64) -> Result<Option<JournalRecord>> {
        let f: Vec<&str> = line.split_whitespace().collect();
        if f.len() != 5 {
            return Err(Error::domain(format!("expected 5 fields, got {}", f.len())));
        }
        let rec_sum = u64::from_str_radix(f[4], 16)
            .map_err(|_| Error::domain("bad checksum field"))?;
        let start: u64 = f[0].parse().map_err(|_| Error::domain("bad range start"))?;
        let end: u64 = f[1].parse().map_err(|_| Error::domain("bad range end"))?;
        let best = if f[2] == "-inf" || f[3] == "-" {
            None
        } else {
            let value: f64 = f[2].parse().map_err(|_| Error::domain("bad value field"))?;
            Some((value, decode_sg6(f[3])?))
        };
        if rec_sum != checksum {
            return Ok(None);
        }
        Ok(Some(JournalRecord { start, end, best, graphs: 0, classes: 0 }))
    }

    pub fn append(&mut self, rec: &JournalRecord, witness_line: Option<&str>) -> Result<()> {
        let (value, witness) = match (&rec.best, witness_line) {
            (Some((v, _)), Some(w)) => (format!("{v}"), w.to_string()),
            _ => ("-inf".to_string(), "-".to_string()),
        };
        // Stats first: a record torn off by a crash leaves only a harmless
        // orphaned comment, while a surviving record always has its counters.
        writeln!(self.file, "# stats {} {} {} {}", rec.start, rec.end, rec.graphs, rec.classes)?;
        writeln!(
            self.file,
            "{} {} {} {} {:016x}",
            rec.start, rec.end, value, witness, self.checksum
        )?;
        self.file.flush()?;
        Ok(())
    }
}

/// FNV-1a over the canonical spec string.
pub(crate) fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut hash = 0xcbf29ce484222325u64;
    for &b in bytes {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x100000001b3);
    }
    hash
}
