//! Text input for rings, orders, polynomials, and ideals.
//!
//! The grammars are deliberately small:
//!
//! * rings: `"x,y,z"` (comma-separated names) or `"n=6"` (auto-named
//!   `x1..x6`);
//! * orders: `"lex"`, `"rlex"`, or `"weight:10,5,3;tie=lex"`;
//! * polynomials: sums of terms like `x^2*y + 3/2*x*y^2 - z^3`, with `^`
//!   for exponents, `*` between variables (optional right after a numeric
//!   coefficient), rational coefficients written `p/q`, and both ASCII `-`
//!   and the typographic minus sign accepted;
//! * ideals and monomial lists: comma-separated entries of the above.
//!
//! All parse errors carry the byte offset of the offending character in the
//! original input, including entries after a comma.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::monomial::{Monomial, MAX_TOTAL_DEGREE};
use crate::order::OrderSpec;
use crate::poly::{Polynomial, Rational};
use crate::ring::Ring;

/// Parses a ring description: either comma-separated variable names
/// (`"x,y,z"`) or a count (`"n=4"`, naming the variables `x1..x4`).
pub fn parse_ring(text: &str) -> Result<Ring> {
    let trimmed = text.trim();
    if let Some(rest) = trimmed.strip_prefix("n=") {
        let n: usize = rest.trim().parse().map_err(|_| {
            Error::InvalidRing(format!("invalid variable count '{}'", rest.trim()))
        })?;
        return Ring::with_numbered_vars(n);
    }
    let names: Vec<String> = trimmed.split(',').map(|s| s.trim().to_string()).collect();
    Ring::new(names)
}

/// Parses an order description for a ring with `nvars` variables:
/// `"lex"`, `"rlex"`, or `"weight:w1,...,wn;tie=lex|rlex"`.
pub fn parse_order(text: &str, nvars: usize) -> Result<OrderSpec> {
    let trimmed = text.trim();
    match trimmed {
        "lex" => return Ok(OrderSpec::Lex),
        "rlex" => return Ok(OrderSpec::RevLex),
        _ => {}
    }
    let Some(body) = trimmed.strip_prefix("weight:") else {
        return Err(Error::InvalidOrder(format!(
            "unknown order '{trimmed}' (expected lex, rlex, or weight:w1,...,wn;tie=lex|rlex)"
        )));
    };
    let Some((weight_part, tie_part)) = body.split_once(';') else {
        return Err(Error::InvalidOrder(
            "weight order needs an explicit tiebreak, e.g. weight:3,2,1;tie=rlex".to_string(),
        ));
    };
    let mut weights = Vec::new();
    for piece in weight_part.split(',') {
        let w: u64 = piece.trim().parse().map_err(|_| {
            Error::InvalidOrder(format!("invalid weight '{}'", piece.trim()))
        })?;
        weights.push(w);
    }
    if weights.len() != nvars {
        return Err(Error::InvalidOrder(format!(
            "expected {nvars} weights, got {}",
            weights.len()
        )));
    }
    let tie = match tie_part.trim().strip_prefix("tie=").map(str::trim) {
        Some("lex") => OrderSpec::Lex,
        Some("rlex") => OrderSpec::RevLex,
        Some(other) => {
            return Err(Error::InvalidOrder(format!(
                "invalid tiebreak '{other}' (expected lex or rlex)"
            )))
        }
        None => {
            return Err(Error::InvalidOrder(format!(
                "expected tie=lex or tie=rlex after ';', got '{}'",
                tie_part.trim()
            )))
        }
    };
    OrderSpec::weight(weights, tie)
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Integer(BigInt),
    Name(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

fn describe(token: &Token) -> String {
    match token {
        Token::Integer(n) => format!("number '{n}'"),
        Token::Name(s) => format!("identifier '{s}'"),
        Token::Plus => "'+'".to_string(),
        Token::Minus => "'-'".to_string(),
        Token::Star => "'*'".to_string(),
        Token::Caret => "'^'".to_string(),
        Token::Slash => "'/'".to_string(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '+' => {
                out.push((pos, Token::Plus));
                chars.next();
            }
            '-' | '\u{2212}' => {
                out.push((pos, Token::Minus));
                chars.next();
            }
            '*' => {
                out.push((pos, Token::Star));
                chars.next();
            }
            '^' => {
                out.push((pos, Token::Caret));
                chars.next();
            }
            '/' => {
                out.push((pos, Token::Slash));
                chars.next();
            }
            c if c.is_ascii_digit() => {
                let mut digits = String::new();
                while let Some(&(_, d)) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                let value: BigInt = digits.parse().expect("digit run parses as an integer");
                out.push((pos, Token::Integer(value)));
            }
            c if c == '_' || c.is_ascii_alphabetic() => {
                let mut name = String::new();
                while let Some(&(_, d)) = chars.peek() {
                    if d == '_' || d.is_ascii_alphanumeric() {
                        name.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push((pos, Token::Name(name)));
            }
            other => {
                return Err(Error::Parse {
                    position: pos,
                    message: format!("unexpected character '{other}'"),
                })
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Ring,
    tokens: Vec<(usize, Token)>,
    index: usize,
    /// Byte length of the input, used as the position of end-of-input errors.
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&(usize, Token)> {
        self.tokens.get(self.index)
    }

    fn bump(&mut self) -> Option<(usize, Token)> {
        let tok = self.tokens.get(self.index).cloned();
        if tok.is_some() {
            self.index += 1;
        }
        tok
    }

    fn error_here(&self, expected: &str) -> Error {
        match self.peek() {
            Some((pos, tok)) => Error::Parse {
                position: *pos,
                message: format!("expected {expected}, found {}", describe(&tok)),
            },
            None => Error::Parse {
                position: self.end,
                message: format!("expected {expected}, found end of input"),
            },
        }
    }

    fn expect_integer(&mut self, expected: &str) -> Result<(usize, BigInt)> {
        match self.peek() {
            Some((_, Token::Integer(_))) => {
                let (pos, tok) = self.bump().expect("peeked token exists");
                let Token::Integer(value) = tok else { unreachable!() };
                Ok((pos, value))
            }
            _ => Err(self.error_here(expected)),
        }
    }

    fn polynomial(&mut self) -> Result<Polynomial> {
        if self.tokens.is_empty() {
            return Err(Error::Parse {
                position: 0,
                message: "expected a polynomial, found nothing".to_string(),
            });
        }
        let mut parts: Vec<(Rational, Monomial)> = Vec::new();
        let mut negative = match self.peek() {
            Some((_, Token::Minus)) => {
                self.bump();
                true
            }
            Some((_, Token::Plus)) => {
                self.bump();
                false
            }
            _ => false,
        };
        loop {
            let (coeff, monomial) = self.term()?;
            let signed = if negative { -coeff } else { coeff };
            parts.push((signed, monomial));
            match self.bump() {
                None => break,
                Some((_, Token::Plus)) => negative = false,
                Some((_, Token::Minus)) => negative = true,
                Some((pos, tok)) => {
                    return Err(Error::Parse {
                        position: pos,
                        message: format!("expected '+' or '-', found {}", describe(&tok)),
                    })
                }
            }
        }
        Ok(Polynomial::from_terms(self.ring.nvars(), parts))
    }

    fn term(&mut self) -> Result<(Rational, Monomial)> {
        let mut exps = vec![0u32; self.ring.nvars()];
        let mut total: u64 = 0;

        let coeff = if matches!(self.peek(), Some((_, Token::Integer(_)))) {
            let (_, numerator) = self.expect_integer("a coefficient")?;
            let denominator = if matches!(self.peek(), Some((_, Token::Slash))) {
                self.bump();
                let (pos, d) = self.expect_integer("a denominator after '/'")?;
                if d.is_zero() {
                    return Err(Error::Parse {
                        position: pos,
                        message: "zero denominator".to_string(),
                    });
                }
                d
            } else {
                BigInt::one()
            };
            Some(Rational::new(numerator, denominator))
        } else {
            None
        };

        let mut any_factor = false;
        loop {
            match self.peek() {
                Some((_, Token::Star)) => {
                    self.bump();
                    self.factor(&mut exps, &mut total)?;
                    any_factor = true;
                }
                // Juxtaposition like "3x" is allowed only directly after the
                // coefficient; between variables '*' is mandatory.
                Some((_, Token::Name(_))) if !any_factor => {
                    self.factor(&mut exps, &mut total)?;
                    any_factor = true;
                }
                _ => break,
            }
        }
        if coeff.is_none() && !any_factor {
            return Err(self.error_here("a coefficient or variable"));
        }
        Ok((
            coeff.unwrap_or_else(Rational::one),
            Monomial::new(exps),
        ))
    }

    fn factor(&mut self, exps: &mut [u32], total: &mut u64) -> Result<()> {
        match self.bump() {
            Some((pos, Token::Name(name))) => {
                let Some(var) = self.ring.var_index(&name) else {
                    return Err(Error::UnknownVariable { position: pos, name });
                };
                let exp: u32 = if matches!(self.peek(), Some((_, Token::Caret))) {
                    self.bump();
                    let (epos, raw) = self.expect_integer("an exponent after '^'")?;
                    raw.to_u32().ok_or(Error::Parse {
                        position: epos,
                        message: "exponent too large".to_string(),
                    })?
                } else {
                    1
                };
                *total += u64::from(exp);
                if *total > u64::from(MAX_TOTAL_DEGREE) {
                    return Err(Error::Parse {
                        position: pos,
                        message: format!(
                            "total degree exceeds the supported bound {MAX_TOTAL_DEGREE}"
                        ),
                    });
                }
                exps[var] += exp;
                Ok(())
            }
            Some((pos, tok)) => Err(Error::Parse {
                position: pos,
                message: format!("expected a variable, found {}", describe(&tok)),
            }),
            None => Err(Error::Parse {
                position: self.end,
                message: "expected a variable, found end of input".to_string(),
            }),
        }
    }
}

/// Parses one polynomial over `ring`.  Terms are combined and canonically
/// sorted, so the result is independent of how the input was spelled.
pub fn parse_polynomial(text: &str, ring: &Ring) -> Result<Polynomial> {
    let tokens = tokenize(text)?;
    let mut parser = Parser { ring, tokens, index: 0, end: text.len() };
    parser.polynomial()
}

/// Parses one monomial over `ring`: a single term with coefficient one,
/// such as `"x^2*y"`.  The constant monomial `"1"` is accepted.
pub fn parse_monomial(text: &str, ring: &Ring) -> Result<Monomial> {
    let poly = parse_polynomial(text, ring)?;
    let terms = poly.terms();
    if terms.len() == 1 && terms[0].coeff.is_one() {
        return Ok(terms[0].monomial.clone());
    }
    Err(Error::Parse {
        position: 0,
        message: format!("expected a monomial (a single term with coefficient 1): '{text}'"),
    })
}

/// Splits `text` at every comma, remembering each piece's byte offset so
/// errors can be reported against the original input.
fn split_with_offsets(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, c) in text.char_indices() {
        if c == ',' {
            out.push((start, &text[start..i]));
            start = i + 1;
        }
    }
    out.push((start, &text[start..]));
    out
}

fn shift_position(error: Error, offset: usize) -> Error {
    match error {
        Error::Parse { position, message } => Error::Parse {
            position: position + offset,
            message,
        },
        Error::UnknownVariable { position, name } => Error::UnknownVariable {
            position: position + offset,
            name,
        },
        other => other,
    }
}

/// Parses a comma-separated list of polynomials as the generators of an
/// ideal.  Every generator must be homogeneous and nonzero of degree at
/// least one; error positions refer to the full input string.
pub fn parse_ideal(text: &str, ring: &Ring) -> Result<Ideal> {
    if text.trim().is_empty() {
        return Err(Error::InvalidIdeal(
            "an ideal needs at least one generator".to_string(),
        ));
    }
    let mut generators = Vec::new();
    for (offset, chunk) in split_with_offsets(text) {
        if chunk.trim().is_empty() {
            return Err(Error::InvalidIdeal(format!(
                "empty generator at position {offset}"
            )));
        }
        let poly = parse_polynomial(chunk, ring).map_err(|e| shift_position(e, offset))?;
        generators.push(poly);
    }
    Ideal::new(ring.clone(), generators)
}

/// Parses a comma-separated list of monomials, e.g. for the generators of a
/// monomial ideal.  Constants are rejected: a monomial ideal generated by 1
/// is the unit ideal, which the diagnostics here do not handle.
pub fn parse_monomials(text: &str, ring: &Ring) -> Result<Vec<Monomial>> {
    if text.trim().is_empty() {
        return Err(Error::InvalidIdeal(
            "a monomial ideal needs at least one generator".to_string(),
        ));
    }
    let mut out = Vec::new();
    for (offset, chunk) in split_with_offsets(text) {
        if chunk.trim().is_empty() {
            return Err(Error::InvalidIdeal(format!(
                "empty generator at position {offset}"
            )));
        }
        let monomial = parse_monomial(chunk, ring).map_err(|e| shift_position(e, offset))?;
        if monomial.degree() == 0 {
            return Err(Error::InvalidIdeal(format!(
                "generator '{}' is a constant",
                chunk.trim()
            )));
        }
        out.push(monomial);
    }
    Ok(out)
}
