use crate::alignment::{Nucleotide, ScoringScheme};
use crate::{Error, Result, Score};

/// Two-bit base code fed to the comparator: `A=00, C=01, G=10, T=11`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NucleotideCode(u8);

impl NucleotideCode {
    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn decode(self) -> Nucleotide {
        Nucleotide::ALL[self.0 as usize]
    }
}

impl From<Nucleotide> for NucleotideCode {
    fn from(base: Nucleotide) -> Self {
        NucleotideCode(match base {
            Nucleotide::A => 0b00,
            Nucleotide::C => 0b01,
            Nucleotide::G => 0b10,
            Nucleotide::T => 0b11,
        })
    }
}

pub fn encode_nucleotide(symbol: char) -> Result<NucleotideCode> {
    Nucleotide::from_symbol(symbol).map(NucleotideCode::from).ok_or_else(|| Error::InvalidSymbol {
        symbol,
        location: "comparator input".into(),
    })
}

/// Comparator/selector unit.
///
/// Two XNORs compare the bit pairs and a NAND reduces them; a NAND output of
/// 0 means the bases are equal and the multiplexer selects the match delay.
pub fn compare_select(read: NucleotideCode, reference: NucleotideCode, scheme: &ScoringScheme) -> u32 {
    let xnor = |a: u8, b: u8| !(a ^ b) & 1;
    let hi = xnor(read.0 >> 1, reference.0 >> 1);
    let lo = xnor(read.0 & 1, reference.0 & 1);
    let nand = !(hi & lo) & 1;
    if nand == 0 {
        scheme.t_match
    } else {
        scheme.t_mismatch
    }
}

/// Series delay: the edge leaves `penalty` units after it enters.
pub fn delay_element(in_arrival: Score, penalty: u32) -> Score {
    in_arrival + Score::from(penalty)
}

/// First-arrival OR gate.
pub fn or_merge(arrivals: &[Score]) -> Result<Score> {
    arrivals
        .iter()
        .copied()
        .min()
        .ok_or_else(|| Error::invalid("OR gate needs at least one input"))
}

/// Delays programmed into one basic cell for a given base pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CellConfig {
    pub d_diag: u32,
    pub d_vert: u32,
    pub d_horiz: u32,
}

impl CellConfig {
    pub fn program(read: NucleotideCode, reference: NucleotideCode, scheme: &ScoringScheme) -> Self {
        CellConfig {
            d_diag: compare_select(read, reference, scheme),
            d_vert: scheme.t_gap,
            d_horiz: scheme.t_gap,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn encoding_table() {
        assert_eq!(encode_nucleotide('A').unwrap().bits(), 0b00);
        assert_eq!(encode_nucleotide('C').unwrap().bits(), 0b01);
        assert_eq!(encode_nucleotide('G').unwrap().bits(), 0b10);
        assert_eq!(encode_nucleotide('T').unwrap().bits(), 0b11);
        for base in Nucleotide::ALL {
            assert_eq!(NucleotideCode::from(base).decode(), base);
        }
        assert!(encode_nucleotide('N').is_err());
    }

    #[test]
    fn comparator_selects_match_only_on_equal_codes() {
        let s = ScoringScheme::default();
        let a = encode_nucleotide('A').unwrap();
        let c = encode_nucleotide('C').unwrap();
        assert_eq!(compare_select(a, a, &s), 0);
        assert_eq!(compare_select(a, c, &s), 2);
        for x in Nucleotide::ALL {
            for y in Nucleotide::ALL {
                let want = if x == y { s.t_match } else { s.t_mismatch };
                assert_eq!(compare_select(x.into(), y.into(), &s), want, "{x} {y}");
            }
        }
    }

    #[test]
    fn comparator_gate_path_for_g() {
        let g = encode_nucleotide('G').unwrap().bits();
        let xnor = |a: u8, b: u8| !(a ^ b) & 1;
        assert_eq!((xnor(g >> 1, g >> 1), xnor(g & 1, g & 1)), (1, 1));
        let s = ScoringScheme::new(3, 7, 1);
        assert_eq!(compare_select(NucleotideCode(g), NucleotideCode(g), &s), 3);
    }

    #[test]
    fn delay_is_series_addition() {
        assert_eq!(delay_element(5, 2), 7);
        assert_eq!(delay_element(0, 0), 0);
        let w0 = 4;
        let chained = (0..6).fold(w0, |t, _| delay_element(t, 1));
        assert_eq!(chained, w0 + 6);
    }

    #[test]
    fn or_is_minimum() {
        assert_eq!(or_merge(&[3, 7, 5]).unwrap(), 3);
        assert_eq!(or_merge(&[4]).unwrap(), 4);
        assert!(matches!(or_merge(&[]), Err(Error::InvalidArgument(_))));
        let xs = [9, 2, 6];
        let nested = or_merge(&[or_merge(&xs).unwrap(), 1]).unwrap();
        assert_eq!(nested, or_merge(&[9, 2, 6, 1]).unwrap());
    }
}
