//! Text form of K-elements: a signed sum of terms `p/q`, `p/q*i`,
//! `p/q*sqrt(n)` and `p/q*i*sqrt(n)` with n in {1,2,3,5,6,10,15,30}.
//! The rational may be parenthesized; a unit coefficient may be omitted,
//! as in `sqrt(6)` or `-i*sqrt(2)`.

use super::{AlgebraicNumber, Rat, RealAlgebraic, DISPLAY_ORDER, RADICANDS};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("unexpected character {0:?} at byte {1}")]
    Unexpected(char, usize),
    #[error("invalid radicand {0}; expected one of 1,2,3,5,6,10,15,30")]
    BadRadicand(u64),
    #[error("malformed term near byte {0}")]
    BadTerm(usize),
    #[error("empty input")]
    Empty,
    #[error("value has a nonzero imaginary part")]
    NotReal,
}

fn write_term(
    f: &mut fmt::Formatter<'_>,
    first: &mut bool,
    coeff: &Rat,
    imaginary: bool,
    radicand: u32,
) -> fmt::Result {
    if coeff.is_zero() {
        return Ok(());
    }
    let neg = coeff.is_negative();
    if *first {
        if neg {
            write!(f, "-")?;
        }
        *first = false;
    } else if neg {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    let a = coeff.abs();
    let mut parts: Vec<String> = Vec::new();
    let unit = a.is_one() && (imaginary || radicand != 1);
    if !unit {
        if a.is_integer() {
            parts.push(a.numer().to_string());
        } else {
            parts.push(format!("{}/{}", a.numer(), a.denom()));
        }
    }
    if imaginary {
        parts.push("i".to_string());
    }
    if radicand != 1 {
        parts.push(format!("sqrt({radicand})"));
    }
    write!(f, "{}", parts.join("*"))
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for &idx in DISPLAY_ORDER.iter() {
            write_term(f, &mut first, self.re.coeff(idx), false, RADICANDS[idx])?;
        }
        for &idx in DISPLAY_ORDER.iter() {
            write_term(f, &mut first, self.im.coeff(idx), true, RADICANDS[idx])?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Display for RealAlgebraic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        AlgebraicNumber::from_real(self.clone()).fmt(f)
    }
}

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(s: &'a str) -> Self {
        Scanner {
            bytes: s.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(ParseError::Unexpected(
                self.peek().map(|b| b as char).unwrap_or('\0'),
                self.pos,
            ))
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(ParseError::BadTerm(start));
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        Ok(BigInt::from_str(s).unwrap())
    }

    fn rational(&mut self) -> Result<Rat, ParseError> {
        let parenthesized = self.eat(b'(');
        let neg = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let num = self.integer()?;
        let den = if self.eat(b'/') {
            self.integer()?
        } else {
            BigInt::one()
        };
        if parenthesized {
            self.expect(b')')?;
        }
        let q = Rat::new(num, den);
        Ok(if neg { -q } else { q })
    }

    /// One term after its sign: rational and/or `i` and/or `sqrt(n)`.
    fn term(&mut self) -> Result<(Rat, bool, usize), ParseError> {
        let mut coeff: Option<Rat> = None;
        let mut imaginary = false;
        let mut idx: Option<usize> = None;
        let start = self.pos;
        loop {
            match self.peek() {
                Some(b'i') if !imaginary && {
                    // avoid eating the start of an identifier other than bare i
                    let next = self.bytes.get(self.pos + 1).copied();
                    !matches!(next, Some(c) if c.is_ascii_alphanumeric())
                } =>
                {
                    self.pos += 1;
                    imaginary = true;
                }
                Some(b's') => {
                    let rest = &self.bytes[self.pos..];
                    if rest.starts_with(b"sqrt") {
                        self.pos += 4;
                        self.expect(b'(')?;
                        let n = self.integer()?;
                        self.expect(b')')?;
                        let n: u64 = n.try_into().map_err(|_| ParseError::BadTerm(self.pos))?;
                        let i = RADICANDS
                            .iter()
                            .position(|&r| r as u64 == n)
                            .ok_or(ParseError::BadRadicand(n))?;
                        if idx.is_some() {
                            return Err(ParseError::BadTerm(self.pos));
                        }
                        idx = Some(i);
                    } else {
                        return Err(ParseError::Unexpected('s', self.pos));
                    }
                }
                Some(c) if c.is_ascii_digit() || c == b'(' => {
                    if coeff.is_some() {
                        return Err(ParseError::BadTerm(self.pos));
                    }
                    coeff = Some(self.rational()?);
                }
                _ => break,
            }
            if !self.eat(b'*') {
                break;
            }
        }
        if coeff.is_none() && !imaginary && idx.is_none() {
            return Err(ParseError::BadTerm(start));
        }
        Ok((coeff.unwrap_or_else(Rat::one), imaginary, idx.unwrap_or(0)))
    }
}

impl FromStr for AlgebraicNumber {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut sc = Scanner::new(s);
        if sc.peek().is_none() {
            return Err(ParseError::Empty);
        }
        let mut value = AlgebraicNumber::zero();
        let mut first = true;
        loop {
            let neg = if sc.eat(b'-') {
                true
            } else if sc.eat(b'+') {
                false
            } else if first {
                false
            } else {
                break;
            };
            first = false;
            let (mut coeff, imaginary, idx) = sc.term()?;
            if neg {
                coeff = -coeff;
            }
            let part = RealAlgebraic::sqrt_scaled(RADICANDS[idx], coeff);
            if imaginary {
                value.im = &value.im + &part;
            } else {
                value.re = &value.re + &part;
            }
            if sc.peek().is_none() {
                return Ok(value);
            }
        }
        Err(ParseError::Unexpected(
            sc.peek().map(|b| b as char).unwrap_or('\0'),
            sc.pos,
        ))
    }
}

impl FromStr for RealAlgebraic {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let z: AlgebraicNumber = s.parse()?;
        if !z.im.is_zero() {
            return Err(ParseError::NotReal);
        }
        Ok(z.re)
    }
}

#[cfg(test)]
mod tests {
    use super::super::{rat, AlgebraicNumber, RealAlgebraic};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn display_matches_grammar() {
        let z = AlgebraicNumber::new(
            RealAlgebraic::from_rat(rat(5, 2)),
            RealAlgebraic::sqrt_scaled(3, rat(-1, 2)),
        );
        assert_eq!(z.to_string(), "5/2 - 1/2*i*sqrt(3)");
        assert_eq!(AlgebraicNumber::zero().to_string(), "0");
        assert_eq!(AlgebraicNumber::i().to_string(), "i");
        let w = RealAlgebraic::sqrt_scaled(6, rat(-3, 4));
        assert_eq!(w.to_string(), "-3/4*sqrt(6)");
    }

    #[test]
    fn parse_examples() {
        let z: AlgebraicNumber = "5/2 - 1/2*i*sqrt(3)".parse().unwrap();
        assert_eq!(
            z,
            AlgebraicNumber::new(
                RealAlgebraic::from_rat(rat(5, 2)),
                RealAlgebraic::sqrt_scaled(3, rat(-1, 2)),
            )
        );
        let w: AlgebraicNumber = "(-3/2)*sqrt(6) + i".parse().unwrap();
        assert_eq!(
            w,
            AlgebraicNumber::new(
                RealAlgebraic::sqrt_scaled(6, rat(-3, 2)),
                RealAlgebraic::one()
            )
        );
        assert!("sqrt(7)".parse::<AlgebraicNumber>().is_err());
        assert!("".parse::<AlgebraicNumber>().is_err());
        assert!("1 + sqrt(2)".parse::<RealAlgebraic>().is_ok());
        assert!("i*sqrt(2)".parse::<RealAlgebraic>().is_err());
    }

    #[test]
    fn roundtrip_random() {
        let mut rng = StdRng::seed_from_u64(0x1234);
        for _ in 0..500 {
            let mut z = AlgebraicNumber::zero();
            for _ in 0..rng.gen_range(0..5usize) {
                let idx = rng.gen_range(0..8usize);
                let num = rng.gen_range(-20i64..=20);
                let den = rng.gen_range(1i64..=12);
                let part = RealAlgebraic::sqrt_scaled(super::super::RADICANDS[idx], rat(num, den));
                if rng.gen_bool(0.5) {
                    z.re = &z.re + &part;
                } else {
                    z.im = &z.im + &part;
                }
            }
            let back: AlgebraicNumber = z.to_string().parse().unwrap();
            assert_eq!(z, back, "roundtrip failed for {z}");
        }
    }
}
