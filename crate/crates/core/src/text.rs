//! Text format for multivectors.
//!
//! A multivector prints as a sum of `coefficient*tokens` terms in ascending
//! blade order, where the tokens are `g0..g3` (particle space 1) and
//! `h0..h3` (particle space 2) joined by `^` in ascending index order. The
//! scalar term is a bare number and the zero multivector prints as `0`:
//!
//! ```text
//! 0.5 - 0.5*g1^g2^h1^h2
//! ```
//!
//! Printing uses the shortest decimal representation that parses back to
//! the same bits, so print -> parse round-trips exactly.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::blade::Blade;
use crate::multivector::Multivector;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("empty multivector expression")]
    Empty,
    #[error("invalid coefficient `{0}`")]
    InvalidNumber(String),
    #[error("invalid generator token `{0}`")]
    InvalidToken(String),
    #[error("generators of `{0}` are not in strictly ascending order")]
    NonAscending(String),
    #[error("dangling `{0}` at end of expression")]
    TrailingSeparator(String),
}

fn token_bit(token: &str) -> Result<u8, ParseError> {
    let bytes = token.as_bytes();
    if bytes.len() != 2 {
        return Err(ParseError::InvalidToken(token.to_string()));
    }
    let index = (bytes[1] as char)
        .to_digit(10)
        .filter(|d| *d < 4)
        .ok_or_else(|| ParseError::InvalidToken(token.to_string()))?;
    match bytes[0] {
        b'g' => Ok(index as u8),
        b'h' => Ok(index as u8 + 4),
        _ => Err(ParseError::InvalidToken(token.to_string())),
    }
}

fn write_blade(f: &mut fmt::Formatter<'_>, blade: Blade) -> fmt::Result {
    let mut first = true;
    for i in 0..8u8 {
        if blade.0 & (1 << i) != 0 {
            if !first {
                write!(f, "^")?;
            }
            first = false;
            if i < 4 {
                write!(f, "g{i}")?;
            } else {
                write!(f, "h{}", i - 4)?;
            }
        }
    }
    Ok(())
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (blade, coeff) in self.terms() {
            if first {
                if coeff < 0.0 {
                    write!(f, "-")?;
                }
            } else if coeff < 0.0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", coeff.abs())?;
            if blade != Blade::SCALAR {
                write!(f, "*")?;
                write_blade(f, blade)?;
            }
        }
        Ok(())
    }
}

fn parse_term(term: &str, negate: bool) -> Result<(Blade, f64), ParseError> {
    let (coeff_text, blade_text) = match term.split_once('*') {
        Some((c, b)) => (Some(c), Some(b)),
        None if term.starts_with('g') || term.starts_with('h') => (None, Some(term)),
        None => (Some(term), None),
    };
    let mut coeff = match coeff_text {
        Some(c) => f64::from_str(c).map_err(|_| ParseError::InvalidNumber(c.to_string()))?,
        None => 1.0,
    };
    if negate {
        coeff = -coeff;
    }
    let blade = match blade_text {
        None => Blade::SCALAR,
        Some(text) => {
            let mut mask = 0u8;
            let mut last: i16 = -1;
            for token in text.split('^') {
                let bit = token_bit(token)?;
                if i16::from(bit) <= last {
                    return Err(ParseError::NonAscending(text.to_string()));
                }
                last = i16::from(bit);
                mask |= 1 << bit;
            }
            Blade(mask)
        }
    };
    Ok((blade, coeff))
}

impl FromStr for Multivector {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut pieces = s.split_whitespace().peekable();
        if pieces.peek().is_none() {
            return Err(ParseError::Empty);
        }
        let mut out = Multivector::zero();
        let mut negate = false;
        let mut expect_term = true;
        for piece in pieces {
            if expect_term {
                // A leading sign may be glued to the first term.
                let (term, extra_neg) = match piece.strip_prefix('-') {
                    Some(rest) if !negate => (rest, true),
                    _ => (piece, false),
                };
                let (blade, coeff) = parse_term(term, negate ^ extra_neg)?;
                out = &out + &Multivector::term(blade, coeff);
                expect_term = false;
            } else {
                negate = match piece {
                    "+" => false,
                    "-" => true,
                    other => return Err(ParseError::InvalidToken(other.to_string())),
                };
                expect_term = true;
            }
        }
        if expect_term {
            return Err(ParseError::TrailingSeparator(
                if negate { "-" } else { "+" }.to_string(),
            ));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blade::Blade;

    #[test]
    fn print_examples() {
        let m = &Multivector::scalar(0.5) + &Multivector::term(Blade(0b0110_0110), -0.5);
        assert_eq!(m.to_string(), "0.5 - 0.5*g1^g2^h1^h2");
        assert_eq!(Multivector::zero().to_string(), "0");
        assert_eq!(Multivector::term(Blade(0b1), -3.0).to_string(), "-3*g0");
    }

    #[test]
    fn parse_round_trip() {
        for text in [
            "0.5 - 0.5*g1^g2^h1^h2",
            "-3*g0",
            "0",
            "1*g0^g1^g2^g3 + 2.25*h0",
        ] {
            let m: Multivector = text.parse().unwrap();
            let printed = m.to_string();
            let back: Multivector = printed.parse().unwrap();
            assert_eq!(m, back, "{text}");
        }
    }

    #[test]
    fn parse_accepts_bare_blades() {
        let m: Multivector = "g0^h3".parse().unwrap();
        assert_eq!(m, Multivector::term(Blade(0b1000_0001), 1.0));
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(matches!("".parse::<Multivector>(), Err(ParseError::Empty)));
        assert!(matches!(
            "1*q7".parse::<Multivector>(),
            Err(ParseError::InvalidToken(_))
        ));
        assert!(matches!(
            "1*g1^g0".parse::<Multivector>(),
            Err(ParseError::NonAscending(_))
        ));
        assert!(matches!(
            "1*g1^g1".parse::<Multivector>(),
            Err(ParseError::NonAscending(_))
        ));
        assert!(matches!(
            "1 +".parse::<Multivector>(),
            Err(ParseError::TrailingSeparator(_))
        ));
        assert!(matches!(
            "1 & 2".parse::<Multivector>(),
            Err(ParseError::InvalidToken(_))
        ));
    }

    #[test]
    fn negative_exponent_coefficients_survive() {
        let m = Multivector::term(Blade(0b10), 1.25e-13);
        let back: Multivector = m.to_string().parse().unwrap();
        assert_eq!(m, back);
    }
}
