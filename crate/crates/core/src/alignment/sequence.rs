use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Nucleotide {
    A,
    C,
    G,
    T,
}

impl Nucleotide {
    pub const ALL: [Nucleotide; 4] = [Nucleotide::A, Nucleotide::C, Nucleotide::G, Nucleotide::T];

    /// Parses one uppercase base symbol.
    pub fn from_symbol(symbol: char) -> Option<Self> {
        match symbol {
            'A' => Some(Nucleotide::A),
            'C' => Some(Nucleotide::C),
            'G' => Some(Nucleotide::G),
            'T' => Some(Nucleotide::T),
            _ => None,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Nucleotide::A => 'A',
            Nucleotide::C => 'C',
            Nucleotide::G => 'G',
            Nucleotide::T => 'T',
        }
    }
}

impl fmt::Display for Nucleotide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Non-empty nucleotide string over `{A, C, G, T}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Sequence {
    bases: Vec<Nucleotide>,
}

impl Sequence {
    pub fn from_bases(bases: Vec<Nucleotide>) -> Result<Self> {
        if bases.is_empty() {
            return Err(Error::invalid("sequence must contain at least one base"));
        }
        Ok(Sequence { bases })
    }

    pub fn bases(&self) -> &[Nucleotide] {
        &self.bases
    }

    pub fn len(&self) -> usize {
        self.bases.len()
    }

    /// Always false; kept for API symmetry with slices.
    pub fn is_empty(&self) -> bool {
        self.bases.is_empty()
    }

    /// The first `len` bases.
    pub fn prefix(&self, len: usize) -> Result<Sequence> {
        if len == 0 || len > self.len() {
            return Err(Error::invalid(format!(
                "prefix length {len} outside 1..={}",
                self.len()
            )));
        }
        Ok(Sequence { bases: self.bases[..len].to_vec() })
    }
}

impl FromStr for Sequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bases = s
            .chars()
            .enumerate()
            .map(|(pos, c)| {
                Nucleotide::from_symbol(c).ok_or_else(|| Error::InvalidSymbol {
                    symbol: c,
                    location: format!("position {}", pos + 1),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Sequence::from_bases(bases)
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.bases.iter().try_for_each(|b| write!(f, "{b}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_valid_bases() {
        let s: Sequence = "GATTACA".parse().unwrap();
        assert_eq!(s.len(), 7);
        assert_eq!(s.to_string(), "GATTACA");
    }

    #[test]
    fn rejects_other_symbols() {
        for bad in ["ACGN", "acgt", "AC-T", "U"] {
            assert!(matches!(bad.parse::<Sequence>(), Err(Error::InvalidSymbol { .. })), "{bad}");
        }
        match "ACGN".parse::<Sequence>() {
            Err(Error::InvalidSymbol { symbol, location }) => {
                assert_eq!(symbol, 'N');
                assert_eq!(location, "position 4");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rejects_empty() {
        assert!(matches!("".parse::<Sequence>(), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn prefix_bounds() {
        let s: Sequence = "ACGT".parse().unwrap();
        assert_eq!(s.prefix(2).unwrap().to_string(), "AC");
        assert!(s.prefix(0).is_err());
        assert!(s.prefix(5).is_err());
    }
}
