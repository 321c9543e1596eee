//! Text forms of monomials, polynomials and group words, with bit-exact
//! round-trips between parsing and printing.
//!
//! Grammar (whitespace insignificant between tokens):
//!
//! ```text
//! poly    := '-'? term (('+' | '-') term)*
//! term    := coeff ('*' mono)? | mono
//! mono    := factor ('*' factor)*
//! factor  := 'x' INT ('^' INT)?
//! coeff   := INT ('/' INT)?
//! ```
//!
//! Polynomials print with terms in graded-lex order, interior signs carried
//! by the `+`/`-` separators and coefficient magnitudes in canonical form,
//! e.g. `1 - x3 - x0^2 + x0*x1`. The zero polynomial prints as `0`, the
//! identity monomial as `1`.
//!
//! Group words use the same factor syntax extended by inverse letters —
//! capital `X<i>` or `x<i>^-<n>` — and by parenthesized inverses `(word)^-<n>`,
//! so printed group elements `p * (q)^-1` parse back verbatim:
//!
//! ```text
//! word    := wfactor ('*' wfactor)*
//! wfactor := 'x' INT ('^' '-'? INT)? | 'X' INT ('^' INT)?
//!          | '(' word ')' '^' '-'? INT
//! ```

use crate::error::{Error, Result};
use crate::field::{FieldElem, FieldTag};
use crate::group::{GroupElement, GroupWord, Letter};
use crate::monoid::Monomial;
use crate::ring::Polynomial;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use std::fmt;

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut run: Option<(u32, usize)> = None;
        let mut flush = |f: &mut fmt::Formatter<'_>, run: Option<(u32, usize)>| -> fmt::Result {
            if let Some((i, k)) = run {
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                if k == 1 {
                    write!(f, "x{i}")?;
                } else {
                    write!(f, "x{i}^{k}")?;
                }
            }
            Ok(())
        };
        for &i in self.indices() {
            match run {
                Some((j, k)) if j == i => run = Some((j, k + 1)),
                other => {
                    flush(f, other)?;
                    run = Some((i, 1));
                }
            }
        }
        flush(f, run)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (pos, (m, c)) in self.terms().enumerate() {
            if pos == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            if m.is_identity() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.p().is_identity(), self.q().is_identity()) {
            (true, true) => write!(f, "1"),
            (false, true) => write!(f, "{}", self.p()),
            (true, false) => write!(f, "({})^-1", self.q()),
            (false, false) => write!(f, "{} * ({})^-1", self.p(), self.q()),
        }
    }
}

/// Prints a word with inverse letters in the capital form, e.g. `x0*X1*x2`.
/// The empty word prints as `1`.
pub fn format_word(word: &[Letter]) -> String {
    if word.is_empty() {
        return "1".into();
    }
    word.iter()
        .map(|l| {
            if l.inverse {
                format!("X{}", l.index)
            } else {
                format!("x{}", l.index)
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self
            .src
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    /// Next byte after whitespace, without consuming it.
    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn eat(&mut self, expected: u8) -> bool {
        if self.peek() == Some(expected) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, expected: u8) -> Result<()> {
        if self.eat(expected) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", expected as char)))
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    /// An unsigned decimal integer as digits (arbitrary length).
    fn digits(&mut self) -> Result<&'a [u8]> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a number"));
        }
        Ok(&self.src[start..self.pos])
    }

    fn uint<T: std::str::FromStr>(&mut self, what: &str) -> Result<T> {
        let pos = self.pos;
        let digits = self.digits()?;
        std::str::from_utf8(digits)
            .expect("digits are ascii")
            .parse()
            .map_err(|_| Error::Syntax {
                position: pos,
                message: format!("{what} out of range"),
            })
    }

    fn bigint(&mut self) -> Result<BigInt> {
        let digits = self.digits()?;
        Ok(BigInt::parse_bytes(digits, 10).expect("digits parse"))
    }

    /// `coeff := INT ('/' INT)?` with an already-consumed sign.
    fn coeff(&mut self, negative: bool, field: FieldTag) -> Result<FieldElem> {
        let pos = self.pos;
        let mut num = self.bigint()?;
        if negative {
            num = -num;
        }
        let den = if self.eat(b'/') {
            let den = self.bigint()?;
            if den.is_zero() {
                return Err(Error::Syntax {
                    position: pos,
                    message: "zero denominator".into(),
                });
            }
            den
        } else {
            BigInt::one()
        };
        FieldElem::from_rational(field, &BigRational::new(num, den)).map_err(|e| Error::Syntax {
            position: pos,
            message: e.to_string(),
        })
    }

    /// `factor := 'x' INT ('^' INT)?`, lowercase only; returns (index, power).
    fn factor(&mut self) -> Result<(u32, usize)> {
        self.expect(b'x')?;
        let index: u32 = self.uint("generator index")?;
        let power = if self.eat(b'^') {
            self.uint::<usize>("exponent")?
        } else {
            1
        };
        Ok((index, power))
    }

    /// `mono := factor ('*' factor)*`, stopping before a '*' that does not
    /// introduce another factor.
    fn mono(&mut self) -> Result<Monomial> {
        let mut word = Vec::new();
        loop {
            let (index, power) = self.factor()?;
            word.extend(std::iter::repeat(index).take(power));
            let before = self.pos;
            if self.eat(b'*') {
                if self.peek() == Some(b'x') {
                    continue;
                }
                self.pos = before;
            }
            break;
        }
        Ok(Monomial::normalize(&word))
    }
}

/// Parses the monomial grammar; `1` is the identity. Arbitrary words are
/// normalized, so `parse_monomial("x3*x1") == parse_monomial("x1*x4")`.
pub fn parse_monomial(text: &str) -> Result<Monomial> {
    let mut c = Cursor::new(text);
    let m = if c.peek() == Some(b'1') {
        c.bump();
        Monomial::identity()
    } else {
        c.mono()?
    };
    if !c.at_end() {
        return Err(c.error("trailing input after monomial"));
    }
    Ok(m)
}

/// Parses the polynomial grammar over the given coefficient field.
pub fn parse_poly(text: &str, field: FieldTag) -> Result<Polynomial> {
    let mut c = Cursor::new(text);
    let mut terms: Vec<(Monomial, FieldElem)> = Vec::new();
    let mut negative = c.eat(b'-');
    loop {
        let (m, a) = parse_term(&mut c, negative, field)?;
        terms.push((m, a));
        match c.peek() {
            Some(b'+') => {
                c.bump();
                negative = false;
            }
            Some(b'-') => {
                c.bump();
                negative = true;
            }
            None => break,
            Some(other) => {
                return Err(c.error(format!(
                    "expected '+', '-' or end of input, found '{}'",
                    other as char
                )))
            }
        }
    }
    let mut p = Polynomial::zero(field);
    for (m, a) in terms {
        p += &Polynomial::from_terms(field, [(m, a)])?;
    }
    Ok(p)
}

/// `term := coeff ('*' mono)? | mono` with the sign already consumed.
fn parse_term(c: &mut Cursor<'_>, negative: bool, field: FieldTag) -> Result<(Monomial, FieldElem)> {
    match c.peek() {
        Some(b) if b.is_ascii_digit() => {
            let a = c.coeff(negative, field)?;
            if c.eat(b'*') {
                let m = c.mono()?;
                Ok((m, a))
            } else {
                Ok((Monomial::identity(), a))
            }
        }
        Some(b'x') => {
            let m = c.mono()?;
            let one = FieldElem::one(field);
            Ok((m, if negative { -&one } else { one }))
        }
        Some(other) => Err(c.error(format!(
            "expected a coefficient or 'x', found '{}'",
            other as char
        ))),
        None => Err(c.error("expected a term")),
    }
}

/// Parses the group-word grammar (`x<i>`, `X<i>`, `x<i>^-<n>`, `(word)^-<n>`)
/// into the letter sequence, without reducing it. `1` is the empty word.
pub fn parse_word(text: &str) -> Result<GroupWord> {
    let mut c = Cursor::new(text);
    let word = parse_word_inner(&mut c, true)?;
    if !c.at_end() {
        return Err(c.error("trailing input after word"));
    }
    Ok(word)
}

fn parse_word_inner(c: &mut Cursor<'_>, top: bool) -> Result<GroupWord> {
    let mut out: GroupWord = Vec::new();
    if top && c.peek() == Some(b'1') {
        let before = c.pos;
        c.bump();
        if c.at_end() {
            return Ok(out);
        }
        c.pos = before;
    }
    loop {
        match c.peek() {
            Some(b'x') | Some(b'X') => {
                let upper = c.bump() == Some(b'X');
                let index: u32 = c.uint("generator index")?;
                let (inverse, power) = if c.eat(b'^') {
                    let neg = c.eat(b'-');
                    let n: usize = c.uint("exponent")?;
                    (upper != neg, n)
                } else {
                    (upper, 1)
                };
                let letter = Letter { index, inverse };
                out.extend(std::iter::repeat(letter).take(power));
            }
            Some(b'(') => {
                c.bump();
                let inner = parse_word_inner(c, false)?;
                c.expect(b')')?;
                c.expect(b'^')?;
                let neg = c.eat(b'-');
                let n: usize = c.uint("exponent")?;
                for _ in 0..n {
                    if neg {
                        out.extend(inner.iter().rev().map(|l| l.opposite()));
                    } else {
                        out.extend(inner.iter().copied());
                    }
                }
            }
            Some(other) => {
                return Err(c.error(format!(
                    "expected a letter or '(', found '{}'",
                    other as char
                )))
            }
            None => return Err(c.error("expected a letter")),
        }
        let before = c.pos;
        if c.eat(b'*') {
            if matches!(c.peek(), Some(b'x') | Some(b'X') | Some(b'(')) {
                continue;
            }
            c.pos = before;
        }
        break;
    }
    Ok(out)
}

/// Parses a word and reduces it to the canonical fraction, so the printed
/// form `p * (q)^-1` round-trips.
pub fn parse_group_element(text: &str) -> Result<GroupElement> {
    Ok(crate::group::reduce_word(&parse_word(text)?))
}

/// Parses `INT ('/' INT)?` with optional leading '-' into an exact rational.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let mut c = Cursor::new(text);
    let negative = c.eat(b'-');
    let elem = c.coeff(negative, FieldTag::Rational)?;
    if !c.at_end() {
        return Err(c.error("trailing input after number"));
    }
    match elem {
        FieldElem::Rational(r) => Ok(r),
        FieldElem::Prime { .. } => unreachable!("rational tag requested"),
    }
}
