//! Small cursor shared by the text grammars (trees, words, permutations,
//! diagram literals and expressions). Positions are byte offsets into the
//! original input.

use crate::error::{Result, WztError};

#[derive(Debug, Clone)]
pub(crate) struct Cursor<'a> {
    src: &'a str,
    pos: usize,
    base: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Cursor {
            src,
            pos: 0,
            base: 0,
        }
    }

    /// Cursor over a slice of a larger input; reported positions are offset by `base`.
    pub(crate) fn with_base(src: &'a str, base: usize) -> Self {
        Cursor { src, pos: 0, base }
    }

    pub(crate) fn pos(&self) -> usize {
        self.base + self.pos
    }

    pub(crate) fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    /// Moves past `n` bytes of the remaining input.
    pub(crate) fn advance(&mut self, n: usize) {
        self.pos += n;
    }

    pub(crate) fn skip_ws(&mut self) {
        while let Some(c) = self.rest().chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    pub(crate) fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    pub(crate) fn bump(&mut self) -> Option<char> {
        self.skip_ws();
        let c = self.rest().chars().next()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    pub(crate) fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    pub(crate) fn eat_str(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    pub(crate) fn expect_end(&mut self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }

    /// Unsigned decimal integer (no sign).
    pub(crate) fn unsigned(&mut self) -> Result<usize> {
        self.skip_ws();
        let digits: usize = self
            .rest()
            .bytes()
            .take_while(|b| b.is_ascii_digit())
            .count();
        if digits == 0 {
            return Err(self.error("expected a number"));
        }
        let text = &self.rest()[..digits];
        let value = text
            .parse()
            .map_err(|_| self.error("number out of range"))?;
        self.pos += digits;
        Ok(value)
    }

    /// Signed decimal integer, optional leading `-` or `+`.
    pub(crate) fn signed(&mut self) -> Result<i64> {
        self.skip_ws();
        let negative = if self.rest().starts_with('-') {
            self.pos += 1;
            true
        } else {
            if self.rest().starts_with('+') {
                self.pos += 1;
            }
            false
        };
        let start = self.pos();
        let magnitude = self.unsigned()?;
        let magnitude =
            i64::try_from(magnitude).map_err(|_| WztError::parse(start, "number out of range"))?;
        Ok(if negative { -magnitude } else { magnitude })
    }

    pub(crate) fn error(&self, msg: impl Into<String>) -> WztError {
        WztError::parse(self.pos(), msg)
    }
}

/// Parses `name<digits>:` headers such as `b3:` or `f2:` and returns the number.
pub(crate) fn header(cur: &mut Cursor<'_>, prefix: &str) -> Result<usize> {
    if !cur.eat_str(prefix) {
        return Err(cur.error(format!("expected `{prefix}<n>:` header")));
    }
    let n = cur.unsigned()?;
    cur.expect(':')?;
    Ok(n)
}

/// Parses a whitespace-separated word such as `s1 s2^-1 s1^3` over letter
/// `letter`. Exponents expand into repeated letters; returns signed indices.
pub(crate) fn signed_letters(
    cur: &mut Cursor<'_>,
    letter: char,
) -> Result<Vec<(usize, usize, i64)>> {
    let mut out = Vec::new();
    while cur.peek() == Some(letter) {
        let at = cur.pos();
        cur.bump();
        let index = cur.unsigned()?;
        let exp = if cur.eat('^') { cur.signed()? } else { 1 };
        out.push((at, index, exp));
    }
    Ok(out)
}
