//! Module specifications such as `Z2^3 + Z9`.
//!
//! ```text
//! spec := term ("+" term)*
//! term := "Z" INT ("^" INT)?
//! ```
//! Whitespace is ignored. Moduli must be at least 2 and exponents at least 1.

use modrep_core::ZModule;
use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at position {position}")]
pub struct ParseError {
    /// Byte offset into the source text.
    pub position: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleSpec {
    pub source: String,
    /// Cyclic factors as written, exponents expanded.
    pub factors: Vec<BigInt>,
}

impl ModuleSpec {
    pub fn module(&self) -> ZModule {
        ZModule::new(&self.factors).expect("factors checked while parsing")
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            position: self.pos,
            message: message.into(),
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(d) if d == c => {
                self.pos += 1;
                Ok(())
            }
            Some(d) => Err(self.error(format!("expected `{c}`, found `{d}`"))),
            None => Err(self.error(format!("expected `{c}`, found end of input"))),
        }
    }

    fn int(&mut self) -> Result<(BigInt, usize), ParseError> {
        self.skip_ws();
        let start = self.pos;
        let digits = self.src[start..]
            .bytes()
            .take_while(u8::is_ascii_digit)
            .count();
        if digits == 0 {
            return Err(self.error("expected an integer"));
        }
        self.pos += digits;
        let n = self.src[start..self.pos].parse().expect("ascii digits");
        Ok((n, start))
    }

    fn term(&mut self, out: &mut Vec<BigInt>) -> Result<(), ParseError> {
        self.expect('Z')?;
        let (modulus, at) = self.int()?;
        if modulus < BigInt::from(2) {
            return Err(ParseError {
                position: at,
                message: format!("modulus {modulus} is less than 2"),
            });
        }
        let mut count = 1usize;
        if self.peek() == Some('^') {
            self.pos += 1;
            let (e, at) = self.int()?;
            count = match usize::try_from(e) {
                Ok(c) if (1..=64).contains(&c) => c,
                _ => {
                    return Err(ParseError {
                        position: at,
                        message: "exponent must be between 1 and 64".into(),
                    })
                }
            };
        }
        out.extend(std::iter::repeat_n(modulus, count));
        Ok(())
    }
}

pub fn parse_spec(text: &str) -> Result<ModuleSpec, ParseError> {
    let mut p = Parser { src: text, pos: 0 };
    let mut factors = Vec::new();
    p.term(&mut factors)?;
    while let Some(c) = p.peek() {
        if c != '+' {
            return Err(p.error(format!("expected `+`, found `{c}`")));
        }
        p.pos += 1;
        p.term(&mut factors)?;
    }
    Ok(ModuleSpec {
        source: text.to_string(),
        factors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(s: &str) -> Vec<i64> {
        parse_spec(s)
            .unwrap()
            .module()
            .invariant_factors()
            .iter()
            .map(|d| i64::try_from(d).unwrap())
            .collect()
    }

    #[test]
    fn grammar() {
        assert_eq!(chain("Z18"), vec![18]);
        assert_eq!(chain("Z2^2"), vec![2, 2]);
        assert_eq!(chain("Z2 + Z9"), vec![18]);
        assert_eq!(chain(" Z2 ^3+Z9 "), vec![2, 2, 18]);
        assert_eq!(parse_spec("Z2^3 + Z9").unwrap().factors.len(), 4);
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_spec("Z2 + Z1").unwrap_err();
        assert_eq!(e.position, 6);
        assert_eq!(parse_spec("Z2 Z3").unwrap_err().position, 3);
        assert_eq!(parse_spec("Z").unwrap_err().position, 1);
        assert_eq!(parse_spec("").unwrap_err().position, 0);
        assert_eq!(parse_spec("Z2^0").unwrap_err().position, 3);
        assert_eq!(parse_spec("Z2 +").unwrap_err().position, 4);
    }
}
