use std::fmt;
use std::str::FromStr;

use super::moves::{Face, Move, Twist};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid move token at offset {offset}: {found:?}")]
pub struct ParseError {
    /// Character offset of the first offending character.
    pub offset: usize,
    pub found: String,
}

/// An ordered list of face turns written in Singmaster notation.
///
/// The canonical text form separates moves with single spaces (`R' B2 U`);
/// the parser also accepts unspaced strings such as `R'B2UB2U'R`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MoveSequence(pub Vec<Move>);

impl MoveSequence {
    pub fn new() -> Self {
        MoveSequence(Vec::new())
    }

    pub fn from_moves(moves: impl IntoIterator<Item = Move>) -> Self {
        MoveSequence(moves.into_iter().collect())
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let chars: Vec<char> = text.chars().collect();
        let mut moves = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            let face = Face::from_letter(c).ok_or_else(|| ParseError {
                offset: i,
                found: token_at(&chars, i),
            })?;
            i += 1;
            let twist = match chars.get(i) {
                Some('\'') => {
                    i += 1;
                    Twist::Ccw90
                }
                Some('2') => {
                    i += 1;
                    Twist::Half
                }
                _ => Twist::Cw90,
            };
            moves.push(Move::new(face, twist));
        }
        Ok(MoveSequence(moves))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn moves(&self) -> &[Move] {
        &self.0
    }

    /// Reverse the sequence and invert every move.
    pub fn inverse(&self) -> MoveSequence {
        MoveSequence(self.0.iter().rev().map(|m| m.inverse()).collect())
    }

    pub fn concat(&self, other: &MoveSequence) -> MoveSequence {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        MoveSequence(v)
    }
}

fn token_at(chars: &[char], start: usize) -> String {
    chars[start..]
        .iter()
        .take_while(|c| !c.is_whitespace())
        .take(3)
        .collect()
}

impl fmt::Display for MoveSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl FromStr for MoveSequence {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        MoveSequence::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn pons_asinorum_has_six_moves() {
        let q = MoveSequence::parse("R2L2U2D2F2B2").unwrap();
        assert_eq!(q.len(), 6);
        assert_eq!(q.to_string(), "R2 L2 U2 D2 F2 B2");
    }

    #[test]
    fn prime_is_counterclockwise() {
        let q = MoveSequence::parse("R'").unwrap();
        assert_eq!(q.0, vec![Move::new(Face::R, Twist::Ccw90)]);
    }

    #[test]
    fn invalid_face_reports_offset() {
        let err = MoveSequence::parse("X2").unwrap_err();
        assert_eq!(err.offset, 0);
        let err = MoveSequence::parse("R U x").unwrap_err();
        assert_eq!(err.offset, 4);
        assert!(MoveSequence::parse("R 2").is_err());
        assert!(MoveSequence::parse("'").is_err());
    }

    #[test]
    fn inverse_reverses_and_inverts() {
        let q = MoveSequence::parse("R U2").unwrap();
        assert_eq!(q.inverse().to_string(), "U2 R'");
        assert_eq!(MoveSequence::new().inverse(), MoveSequence::new());
    }

    #[test]
    fn whitespace_tolerant() {
        let a = MoveSequence::parse("  R'\tB2 U\n").unwrap();
        let b = MoveSequence::parse("R'B2U").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "R' B2 U");
    }

    proptest! {
        #[test]
        fn format_parse_roundtrip(idx in proptest::collection::vec(0usize..18, 0..40)) {
            let q = MoveSequence::from_moves(idx.into_iter().map(Move::from_index));
            prop_assert_eq!(MoveSequence::parse(&q.to_string()).unwrap(), q.clone());
            let unspaced: String = q.to_string().split_whitespace().collect();
            prop_assert_eq!(MoveSequence::parse(&unspaced).unwrap(), q);
        }
    }
}
