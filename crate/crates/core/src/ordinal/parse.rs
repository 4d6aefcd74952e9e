//! Recursive-descent parser for ordinal expressions.
//!
//! ```text
//! expr   := term ('+' term)*
//! term   := factor ('*' nat)?
//! factor := 'w' ('^' atom)? | nat
//! atom   := nat | 'w' | '(' expr ')'
//! ```
//!
//! Whitespace is insignificant. Input need not be in normal form; the value
//! is evaluated with ordinal arithmetic, so `w + 1 + w` parses to `w*2`.

use super::{Ordinal, OrdinalError};

pub fn parse(input: &str) -> Result<Ordinal, OrdinalError> {
    let mut p = Parser {
        src: input.as_bytes(),
        pos: 0,
    };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(value)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
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

    fn error(&self, message: &str) -> OrdinalError {
        OrdinalError::Syntax {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn expr(&mut self) -> Result<Ordinal, OrdinalError> {
        let mut acc = self.term()?;
        while self.eat(b'+') {
            let rhs = self.term()?;
            acc = acc.try_add(&rhs)?;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Ordinal, OrdinalError> {
        let base = self.factor()?;
        if self.eat(b'*') {
            let n = self.nat()?;
            return base.try_mul(&Ordinal::from(n));
        }
        Ok(base)
    }

    fn factor(&mut self) -> Result<Ordinal, OrdinalError> {
        match self.peek() {
            Some(b'w') => {
                self.pos += 1;
                if self.eat(b'^') {
                    Ok(Ordinal::omega_pow(self.atom()?))
                } else {
                    Ok(Ordinal::omega())
                }
            }
            Some(c) if c.is_ascii_digit() => Ok(Ordinal::from(self.nat()?)),
            Some(_) => Err(self.error("expected 'w' or a natural number")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn atom(&mut self) -> Result<Ordinal, OrdinalError> {
        match self.peek() {
            Some(b'w') => {
                self.pos += 1;
                Ok(Ordinal::omega())
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => Ok(Ordinal::from(self.nat()?)),
            Some(_) => Err(self.error("expected exponent")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn nat(&mut self) -> Result<u64, OrdinalError> {
        self.skip_ws();
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(d) = self.src.get(self.pos).filter(|c| c.is_ascii_digit()) {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(u64::from(d - b'0')))
                .ok_or(OrdinalError::Overflow)?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a natural number"));
        }
        Ok(value)
    }
}
