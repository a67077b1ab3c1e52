//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr    := term (('+'|'-') term)*
//! term    := factor ('*' factor)*
//! factor  := atom ('^' int)?
//! atom    := rational | var | '(' expr ')' | '-' atom
//! var     := ('x'|'y') posint
//! rational := int ('/' posint)?
//! ```
//!
//! Multiplication is always explicit. Unary minus belongs to the atom, so
//! `-x1^2` is `(-x1)^2`.

use supersym::poly::Var;
use supersym::{LaurentPoly, Mode, Scalar, Signature};
use thiserror::Error;

/// Exponents beyond this are rejected rather than expanded.
const MAX_EXPONENT: i64 = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable {name:?} at position {pos}")]
    UnknownVariable { pos: usize, name: String },
    #[error("negative exponent at position {pos} is not allowed in polynomial mode")]
    NegativeExponent { pos: usize },
    #[error("cannot raise a non-monomial to a negative power at position {pos}")]
    NotInvertible { pos: usize },
    #[error("exponent {exp} at position {pos} is too large")]
    ExponentTooLarge { pos: usize, exp: i64 },
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    sig: Signature,
    mode: Mode,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn syntax<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    /// A run of ASCII digits, without skipping whitespace inside it.
    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).expect("ascii"))
    }

    fn constant(&self, c: Scalar) -> LaurentPoly {
        LaurentPoly::constant(self.sig, self.mode, c)
    }

    fn expr(&mut self) -> Result<LaurentPoly, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<LaurentPoly, ParseError> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<LaurentPoly, ParseError> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        self.skip_ws();
        let pos = self.pos;
        let neg = self.eat(b'-');
        self.skip_ws();
        let Some(d) = self.digits() else {
            return self.syntax("expected an integer exponent");
        };
        let mag: i64 = d.parse().unwrap_or(i64::MAX);
        if mag > MAX_EXPONENT {
            return Err(ParseError::ExponentTooLarge { pos, exp: mag });
        }
        let exp = if neg { -mag } else { mag };
        if exp < 0 {
            let constant = base.is_zero() || base.as_monomial().is_some_and(|(m, _)| m.is_one());
            if self.mode == Mode::Polynomial && !constant {
                return Err(ParseError::NegativeExponent { pos });
            }
        }
        base.pow_i(exp).ok_or(ParseError::NotInvertible { pos })
    }

    fn atom(&mut self) -> Result<LaurentPoly, ParseError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-&self.atom()?)
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return self.syntax("expected ')'");
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => self.rational(),
            Some(c) if c.is_ascii_alphabetic() => self.variable(),
            Some(c) => self.syntax(format!("unexpected character {:?}", c as char)),
            None => self.syntax("unexpected end of input"),
        }
    }

    fn rational(&mut self) -> Result<LaurentPoly, ParseError> {
        let num = self.digits().expect("caller saw a digit");
        let mut text = num.to_string();
        // `1 / 2` is not a rational literal; the slash must follow directly.
        if self.src.get(self.pos) == Some(&b'/') {
            self.pos += 1;
            let Some(den) = self.digits() else {
                return self.syntax("expected a positive denominator");
            };
            text.push('/');
            text.push_str(den);
        }
        match text.parse::<Scalar>() {
            Ok(c) => Ok(self.constant(c)),
            Err(_) => self.syntax("denominator must be positive"),
        }
    }

    fn variable(&mut self) -> Result<LaurentPoly, ParseError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        let unknown = || ParseError::UnknownVariable {
            pos: start,
            name: name.to_string(),
        };
        let (block, idx) = name.split_at(1);
        if idx.is_empty() || idx.starts_with('0') || !idx.bytes().all(|b| b.is_ascii_digit()) {
            return Err(unknown());
        }
        let idx: usize = idx.parse().map_err(|_| unknown())?;
        let var = match block {
            "x" => Var::X(idx),
            "y" => Var::Y(idx),
            _ => return Err(unknown()),
        };
        LaurentPoly::var(self.sig, self.mode, var).map_err(|_| unknown())
    }
}

/// Parses an expression in the ring given by `sig` and `mode`.
pub fn parse_poly(text: &str, sig: Signature, mode: Mode) -> Result<LaurentPoly, ParseError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        sig,
        mode,
    };
    let f = p.expr()?;
    if p.peek().is_some() {
        return p.syntax("unexpected trailing input");
    }
    Ok(f)
}
