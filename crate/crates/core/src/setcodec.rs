//! Bijection between non-empty finite sets of naturals and the naturals,
//! routed through the plane: the cardinality picks the column, the
//! combinatorial index picks the row, and the Cantor pairing flattens.

use std::str::FromStr;

use crate::cantor::{pair, unpair, Cell};
use crate::combinadics::{sigma_decode, sigma_encode, FinSet};
use crate::nat::{nat, Natural};
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CodecMode {
    /// Column `|s| - 1`, row `sigma(s)` over `N` itself. A true bijection.
    #[default]
    Canonical,
    /// Elements shifted into `N+` first, then column `|s|`, row `sigma(s+)`.
    /// Reproduces the hand-worked example with code 334964.
    Appendix,
}

impl FromStr for CodecMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "canonical" => Ok(CodecMode::Canonical),
            "appendix" => Ok(CodecMode::Appendix),
            other => Err(Error::Parse(format!("unknown codec mode {other:?}"))),
        }
    }
}

/// The plane cell a set is placed at.
pub fn set_cell<N: Natural>(s: &FinSet<N>, mode: CodecMode) -> Result<Cell<N>, Error> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    let k: N = nat(s.len() as u64);
    Ok(match mode {
        CodecMode::Canonical => Cell::new(k - N::one(), sigma_encode(s)?),
        CodecMode::Appendix => Cell::new(k, sigma_encode(&s.shift_up())?),
    })
}

pub fn set_encode<N: Natural>(s: &FinSet<N>, mode: CodecMode) -> Result<N, Error> {
    Ok(pair(&set_cell(s, mode)?))
}

pub fn set_decode<N: Natural>(n: &N, mode: CodecMode) -> Result<FinSet<N>, Error> {
    let cell = unpair(n);
    match mode {
        CodecMode::Canonical => {
            let k = column_cardinality(&cell.x)? + 1;
            sigma_decode(k, &cell.y)
        }
        CodecMode::Appendix => {
            if cell.x.is_zero() {
                return Err(Error::NotInImage(n.to_string()));
            }
            let k = column_cardinality(&cell.x)?;
            sigma_decode(k, &cell.y)?
                .shift_down()
                .ok_or_else(|| Error::NotInImage(n.to_string()))
        }
    }
}

fn column_cardinality<N: Natural>(x: &N) -> Result<usize, Error> {
    x.to_usize()
        .filter(|k| *k < usize::MAX)
        .ok_or_else(|| Error::Parse(format!("column {x} is too large to be a cardinality")))
}

/// Lazily decodes canonical indices `0, 1, ..., limit - 1` in order.
#[derive(Debug, Clone)]
pub struct SetStream<N> {
    next: N,
    limit: N,
}

impl<N: Natural> Iterator for SetStream<N> {
    type Item = FinSet<N>;

    fn next(&mut self) -> Option<FinSet<N>> {
        if self.next >= self.limit {
            return None;
        }
        let s = set_decode(&self.next, CodecMode::Canonical).expect("canonical decode is total");
        self.next = self.next.clone() + N::one();
        Some(s)
    }
}

pub fn enumerate_sets<N: Natural>(limit: N) -> SetStream<N> {
    SetStream {
        next: N::zero(),
        limit,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use CodecMode::*;

    fn set(v: &[u64]) -> FinSet<u64> {
        FinSet::from_u64s(v).unwrap()
    }

    #[test]
    fn appendix_example_both_ways() {
        let s = set(&[0, 3, 5, 7, 9, 10]);
        assert_eq!(set_cell(&s, Appendix).unwrap(), Cell::new(6, 811));
        assert_eq!(set_encode(&s, Appendix).unwrap(), 334964);
        assert_eq!(set_decode(&334964u64, Appendix).unwrap(), s);
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(set_encode(&set(&[0]), Canonical).unwrap(), 0);
        assert_eq!(set_encode(&set(&[0, 1, 2]), Canonical).unwrap(), 3);
        assert_eq!(set_decode(&0u64, Canonical).unwrap(), set(&[0]));
        assert_eq!(set_decode(&3u64, Canonical).unwrap(), set(&[0, 1, 2]));
    }

    #[test]
    fn empty_set_rejected() {
        assert_eq!(
            set_encode(&FinSet::<u64>::empty(), Canonical),
            Err(Error::EmptySet)
        );
        assert_eq!(
            set_encode(&FinSet::<u64>::empty(), Appendix),
            Err(Error::EmptySet)
        );
    }

    #[test]
    fn appendix_column_zero_not_in_image() {
        // column 0 in appendix mode would be the empty set
        assert!(matches!(
            set_decode(&pair(&Cell::new(0u64, 5)), Appendix),
            Err(Error::NotInImage(_))
        ));
        assert!(matches!(
            set_decode(&0u64, Appendix),
            Err(Error::NotInImage(_))
        ));
        // row 0 of column 2 decodes to {0,1}, which has no preimage in N+
        assert!(matches!(
            set_decode(&pair(&Cell::new(2u64, 0)), Appendix),
            Err(Error::NotInImage(_))
        ));
    }

    #[test]
    fn stream_prefixes() {
        assert_eq!(enumerate_sets(0u64).count(), 0);
        assert_eq!(enumerate_sets(1u64).collect::<Vec<_>>(), vec![set(&[0])]);
        assert_eq!(
            enumerate_sets(4u64).collect::<Vec<_>>(),
            // code 1 is cell (1, 0), code 2 is cell (0, 1)
            vec![set(&[0]), set(&[0, 1]), set(&[1]), set(&[0, 1, 2])]
        );
    }

    #[test]
    fn initial_segments_sit_on_row_zero() {
        for k in 0..=8u64 {
            let s = FinSet::<u64>::initial_segment(k + 1);
            assert_eq!(set_encode(&s, Canonical).unwrap(), pair(&Cell::new(k, 0)));
        }
    }

    #[test]
    fn mode_parsing() {
        assert_eq!("appendix".parse::<CodecMode>().unwrap(), Appendix);
        assert!("other".parse::<CodecMode>().is_err());
    }
}
