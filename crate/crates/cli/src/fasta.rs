//! Minimal FASTA reading and writing.
//!
//! The parser accepts multi-line sequences, LF and CRLF line endings, blank
//! lines, and `;` comment lines. Sequence characters are lowercased, so
//! upper-case input is accepted; alphabet validation happens later when the
//! sequence is interpreted as DNA. Records with empty sequences are rejected
//! by [`parse`] (read sets need nonempty reads) and tolerated by
//! [`parse_single`] (a superstring may legitimately be empty).

/// One FASTA record: the full text after `>` and the concatenated,
/// lowercased sequence lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FastaRecord {
    pub header: String,
    pub sequence: String,
}

fn parse_records(text: &str) -> Result<Vec<FastaRecord>, String> {
    let mut records: Vec<FastaRecord> = Vec::new();
    for raw in text.lines() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with(';') {
            continue;
        }
        if let Some(header) = line.strip_prefix('>') {
            records.push(FastaRecord {
                header: header.trim().to_string(),
                sequence: String::new(),
            });
        } else {
            match records.last_mut() {
                Some(record) => record.sequence.push_str(&line.to_lowercase()),
                None => return Err("sequence data before the first '>' header".to_string()),
            }
        }
    }
    Ok(records)
}

/// Parses a read-set FASTA: every record must have a nonempty sequence.
pub fn parse(text: &str) -> Result<Vec<FastaRecord>, String> {
    let records = parse_records(text)?;
    for record in &records {
        if record.sequence.is_empty() {
            return Err(format!("record '{}' has an empty sequence", record.header));
        }
    }
    Ok(records)
}

/// Parses a FASTA file expected to hold one superstring. An empty file (or
/// one with only comments/blank lines) stands for the empty superstring, and
/// a single record may have an empty sequence; more than one record is an
/// error.
pub fn parse_single(text: &str) -> Result<String, String> {
    let mut records = parse_records(text)?;
    match records.len() {
        0 => Ok(String::new()),
        1 => Ok(records.swap_remove(0).sequence),
        n => Err(format!("expected a single FASTA record, found {n}")),
    }
}

/// Renders records with one sequence line each (the parser reads them back
/// unchanged).
pub fn render(records: &[FastaRecord]) -> String {
    let mut out = String::new();
    for record in records {
        out.push('>');
        out.push_str(&record.header);
        out.push('\n');
        out.push_str(&record.sequence);
        out.push('\n');
    }
    out
}
