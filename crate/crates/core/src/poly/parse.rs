//! Expression grammar for polynomials:
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary ('*' unary)*
//! unary := '-' unary | power
//! power := atom ('^' integer)?
//! atom  := integer ('/' integer)? | 'x(' i ',' j ')' | 'Z(' j ')' | 't(' k ')' | '(' expr ')'
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{Monomial, Polynomial, Variable};
use crate::error::{Error, Result};

/// Recursive-descent parser over one line of input.
pub struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    accept: &'a dyn Fn(Variable) -> bool,
}

impl<'a> Parser<'a> {
    /// `accept` decides which variables are legal; others are reported at
    /// their position.
    pub fn new(input: &str, line: usize, accept: &'a dyn Fn(Variable) -> bool) -> Self {
        Parser {
            chars: input.chars().collect(),
            pos: 0,
            line,
            accept,
        }
    }

    fn error(&self, at: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            column: at + 1,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        match self.peek() {
            Some(d) if d == c => {
                self.pos += 1;
                Ok(())
            }
            Some(d) => Err(self.error(self.pos, format!("expected '{c}', found '{d}'"))),
            None => Err(self.error(self.pos, format!("expected '{c}', found end of input"))),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error(start, "expected an integer"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("digits"))
    }

    fn small(&mut self) -> Result<u16> {
        let start = self.pos;
        let v = self.integer()?;
        u16::try_from(v).map_err(|_| self.error(start, "index out of range"))
    }

    /// Parses a complete expression; trailing input is an error.
    pub fn parse(mut self) -> Result<Polynomial> {
        let p = self.expr()?;
        if let Some(c) = self.peek() {
            return Err(self.error(self.pos, format!("unexpected '{c}'")));
        }
        Ok(p)
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                Some('-') => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            acc = acc * self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial> {
        if self.peek() == Some('-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let start = self.pos;
            let e = self.integer()?;
            let e = u32::try_from(e).map_err(|_| self.error(start, "exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let start = {
            self.skip_ws();
            self.pos
        };
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let p = self.expr()?;
                self.expect(')')?;
                Ok(p)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                if self.peek() == Some('/') {
                    self.pos += 1;
                    let at = self.pos;
                    let den = self.integer()?;
                    if den.is_zero() {
                        return Err(self.error(at, "division by zero"));
                    }
                    return Ok(Polynomial::constant(BigRational::new(num, den)));
                }
                Ok(Polynomial::constant(BigRational::from_integer(num)))
            }
            Some(c @ ('x' | 'Z' | 't')) => {
                self.pos += 1;
                self.expect('(')?;
                let v = match c {
                    'x' => {
                        let i = self.small()?;
                        self.expect(',')?;
                        let j = self.small()?;
                        Variable::x(i, j)
                    }
                    'Z' => Variable::Z(self.small()?),
                    _ => Variable::Aux(self.small()?),
                };
                self.expect(')')?;
                if !(self.accept)(v) {
                    return Err(self.error(start, format!("unknown variable {v}")));
                }
                Ok(Polynomial::var(v))
            }
            Some(c) => Err(self.error(start, format!("unexpected '{c}'"))),
            None => Err(self.error(start, "unexpected end of input")),
        }
    }
}

/// Parses a polynomial, accepting every variable.
pub fn parse_polynomial(s: &str) -> Result<Polynomial> {
    Parser::new(s, 1, &|_| true).parse()
}

/// Parses a bracketed list of monomials such as `[x(1,1)*x(2,2), x(1,2)^2]`.
pub fn parse_monomial_list(s: &str) -> Result<Vec<Monomial>> {
    let t = s.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| Error::Parse {
            line: 1,
            column: 1,
            message: "expected a bracketed list".into(),
        })?;
    let offset = s.find('[').unwrap_or(0) + 1;
    let mut out = Vec::new();
    // split on top-level commas only
    let mut depth = 0i32;
    let mut start = 0usize;
    let chars: Vec<char> = inner.chars().collect();
    let mut pieces = Vec::new();
    for (k, &c) in chars.iter().enumerate() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                pieces.push((start, chars[start..k].iter().collect::<String>()));
                start = k + 1;
            }
            _ => {}
        }
    }
    pieces.push((start, chars[start..].iter().collect::<String>()));
    for (at, piece) in pieces {
        let col = offset + at;
        if piece.trim().is_empty() {
            if out.is_empty() && inner.trim().is_empty() {
                break;
            }
            return Err(Error::Parse {
                line: 1,
                column: col + 1,
                message: "empty list entry".into(),
            });
        }
        let p = parse_polynomial(&piece).map_err(|e| shift(e, col))?;
        let mut terms = p.terms();
        match (terms.next(), terms.next()) {
            (Some((m, c)), None) if c == &BigRational::from_integer(1.into()) => out.push(m.clone()),
            _ => {
                return Err(Error::Parse {
                    line: 1,
                    column: col + 1,
                    message: format!("'{}' is not a monomial", piece.trim()),
                })
            }
        }
    }
    Ok(out)
}

fn shift(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { line, column, message } => Error::Parse {
            line,
            column: column + by,
            message,
        },
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;
    use proptest::prelude::*;

    #[test]
    fn parses_grammar() {
        let p = parse_polynomial("x(1,1)*x(2,2) - x(1,2)*x(2,1)").unwrap();
        assert_eq!(p.num_terms(), 2);
        let q = parse_polynomial("(Z(1) + Z(2))^2 - 2*Z(1)*Z(2)").unwrap();
        assert_eq!(q, parse_polynomial("Z(1)^2 + Z(2)^2").unwrap());
        assert_eq!(parse_polynomial("3/6").unwrap(), Polynomial::constant(BigRational::new(1.into(), 2.into())));
        assert_eq!(parse_polynomial("-(-2)").unwrap(), Polynomial::constant(rat(2)));
    }

    #[test]
    fn reports_positions() {
        let err = parse_polynomial("x(1,1) + y(2)").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 1,
                column: 10,
                message: "unexpected 'y'".into()
            }
        );
        let accept = |v: Variable| matches!(v, Variable::X { row: 1..=2, .. });
        let err = Parser::new("x(1,1)*x(3,1)", 4, &accept).parse().unwrap_err();
        assert!(matches!(err, Error::Parse { line: 4, column: 8, .. }), "{err:?}");
        assert!(parse_polynomial("1/0").is_err());
        assert!(parse_polynomial("x(1,1) x(1,2)").is_err());
    }

    #[test]
    fn monomial_lists() {
        let ms = parse_monomial_list("[x(1,1)*x(1,2), x(2,1)^2]").unwrap();
        assert_eq!(ms.len(), 2);
        assert_eq!(ms[1].total_degree(), 2);
        assert!(parse_monomial_list("[]").unwrap().is_empty());
        assert!(parse_monomial_list("[x(1,1)+x(1,2)]").is_err());
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec((0u16..3, 1u16..3, 0u32..3, -5i64..6, 1i64..4), 0..5).prop_map(|ts| {
            Polynomial::from_terms(ts.into_iter().map(|(i, j, e, n, d)| {
                (
                    Monomial::from_pairs([(Variable::x(i, j), e), (Variable::Z(j), 1)]),
                    BigRational::new(n.into(), d.into()),
                )
            }))
        })
    }

    proptest! {
        #[test]
        fn display_round_trips(p in arb_poly()) {
            prop_assert_eq!(parse_polynomial(&p.to_string()).unwrap(), p);
        }
    }
}
