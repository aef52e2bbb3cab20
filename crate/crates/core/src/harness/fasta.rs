use std::path::Path;

use crate::alignment::{Nucleotide, Sequence};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FastaRecord {
    pub name: String,
    pub seq: Sequence,
}

pub fn parse_fasta(path: &Path) -> Result<Vec<FastaRecord>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_fasta_str(&text, &path.display().to_string())
}

/// Parses FASTA text. Sequence lines may wrap; bases are case-insensitive and
/// normalized to uppercase.
pub fn parse_fasta_str(text: &str, source: &str) -> Result<Vec<FastaRecord>> {
    let parse_err = |reason: String| Error::Parse { path: source.to_string(), reason };
    let mut records = Vec::new();
    let mut current: Option<(String, usize, Vec<Nucleotide>)> = None;

    let mut finish = |rec: Option<(String, usize, Vec<Nucleotide>)>| -> Result<()> {
        if let Some((name, line, bases)) = rec {
            if bases.is_empty() {
                return Err(parse_err(format!("record `{name}` (line {line}) has no sequence")));
            }
            records.push(FastaRecord { name, seq: Sequence::from_bases(bases)? });
        }
        Ok(())
    };

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(header) = line.strip_prefix('>') {
            finish(current.take())?;
            let name = header.split_whitespace().next().unwrap_or("").to_string();
            current = Some((name, line_no, Vec::new()));
            continue;
        }
        let Some((_, _, bases)) = current.as_mut() else {
            return Err(Error::Parse {
                path: source.to_string(),
                reason: format!("line {line_no}: sequence data before the first '>' header"),
            });
        };
        for (col, c) in line.chars().enumerate() {
            let base = Nucleotide::from_symbol(c.to_ascii_uppercase()).ok_or_else(|| Error::InvalidSymbol {
                symbol: c,
                location: format!("{source} line {line_no}, column {}", col + 1),
            })?;
            bases.push(base);
        }
    }
    finish(current)?;
    if records.is_empty() {
        return Err(Error::Parse { path: source.to_string(), reason: "no FASTA records".into() });
    }
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Result<Vec<FastaRecord>> {
        parse_fasta_str(s, "test.fa")
    }

    #[test]
    fn minimal_record() {
        let r = parse(">r1\nACGT\n").unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].name, "r1");
        assert_eq!(r[0].seq.to_string(), "ACGT");
    }

    #[test]
    fn lowercase_normalized() {
        let r = parse(">r1\nacgt\n>r2\nTT\n").unwrap();
        assert_eq!(r.iter().map(|x| x.seq.to_string()).collect::<Vec<_>>(), ["ACGT", "TT"]);
    }

    #[test]
    fn wrapped_sequence_lines_join() {
        let r = parse(">r1 some description\nAC\nGT\n\n>r2\nA\n").unwrap();
        assert_eq!(r[0].seq.to_string(), "ACGT");
        assert_eq!(r[0].name, "r1");
    }

    #[test]
    fn illegal_symbol_names_line() {
        match parse(">r1\nACGN\n") {
            Err(Error::InvalidSymbol { symbol, location }) => {
                assert_eq!(symbol, 'N');
                assert!(location.contains("line 2"), "{location}");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(parse(""), Err(Error::Parse { .. })));
        assert!(matches!(parse("ACGT\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse(">r1\n>r2\nAC\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse(">r1\nAC\n>r2\n"), Err(Error::Parse { .. })));
    }
}
