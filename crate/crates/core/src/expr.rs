//! A small expression language for writing series, e.g. `1/(1+x)`,
//! `(1-x)^2`, `x/(1-x)`, `-3/4*x^2 + 0.5`.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! sum     := product (('+' | '-') product)*
//! product := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := atom ('^' integer)?
//! atom    := number | 'x' | '(' sum ')'
//! number  := digits ('.' digits)?
//! ```
//!
//! So `-x^2` is `-(x^2)`, and `1/2*x` is `(1/2)*x`. Exponents are
//! nonnegative integer literals; a chained power `x^2^3` is rejected.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::fps::{Coefficient, Series};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Literal(Coefficient),
    X,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Group(Box<Expr>),
}

impl Expr {
    /// Evaluates to a series with `precision` coefficients.
    pub fn eval(&self, precision: usize) -> Result<Series> {
        if precision == 0 {
            return Err(Error::EmptySeries);
        }
        Ok(match self {
            Expr::Literal(c) => Series::constant(c.clone(), precision),
            Expr::X => Series::x(precision),
            Expr::Neg(e) => -e.eval(precision)?,
            Expr::Add(a, b) => a.eval(precision)? + b.eval(precision)?,
            Expr::Sub(a, b) => a.eval(precision)? - b.eval(precision)?,
            Expr::Mul(a, b) => a.eval(precision)? * b.eval(precision)?,
            Expr::Div(a, b) => a.eval(precision)?.divide(&b.eval(precision)?)?,
            Expr::Pow(e, n) => e.eval(precision)?.pow(*n),
            Expr::Group(e) => e.eval(precision)?,
        })
    }
}

/// Prints with enough parentheses that the output parses back to an equal
/// tree, up to `Group` nodes and non-integral literals (which come back as
/// divisions).
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Literal(c) => {
                if c.is_integer() && !c.is_negative() {
                    write!(f, "{c}")
                } else {
                    write!(f, "({c})")
                }
            }
            Expr::X => write!(f, "x"),
            Expr::Neg(e) => write!(f, "-{e}"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "({a} * {b})"),
            Expr::Div(a, b) => write!(f, "({a} / {b})"),
            Expr::Pow(e, n) if matches!(**e, Expr::Neg(_) | Expr::Pow(..)) => {
                write!(f, "({e})^{n}")
            }
            Expr::Pow(e, n) => write!(f, "{e}^{n}"),
            Expr::Group(e) => write!(f, "({e})"),
        }
    }
}

pub fn parse(text: &str) -> Result<Expr> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let e = p.sum()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error(format!("unexpected `{}`", p.src[p.pos] as char)));
    }
    Ok(e)
}

/// Parses and evaluates in one step.
pub fn eval_str(text: &str, precision: usize) -> Result<Series> {
    parse(text)?.eval(precision)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

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

    fn sum(&mut self) -> Result<Expr> {
        let mut lhs = self.product()?;
        loop {
            if self.eat(b'+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.product()?));
            } else if self.eat(b'-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.product()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn product(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat(b'*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat(b'/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat(b'-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        self.skip_ws();
        let start = self.pos;
        let digits = self.digits();
        if digits.is_empty() {
            return Err(self.error("expected a nonnegative integer exponent"));
        }
        let exp: u32 = digits.parse().map_err(|_| Error::Syntax {
            position: start,
            message: "exponent too large".into(),
        })?;
        if self.peek() == Some(b'^') {
            return Err(self.error("chained exponent; use parentheses"));
        }
        Ok(Expr::Pow(Box::new(base), exp))
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.sum()?;
                if !self.eat(b')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(Expr::Group(Box::new(inner)))
            }
            Some(c) if c.is_ascii_digit() || c == b'.' => self.number(),
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = String::from_utf8_lossy(&self.src[start..self.pos]).into_owned();
                if name == "x" {
                    Ok(Expr::X)
                } else {
                    Err(Error::UnknownIdentifier {
                        position: start,
                        name,
                    })
                }
            }
            Some(c) => Err(self.error(format!("unexpected `{}`", c as char))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn number(&mut self) -> Result<Expr> {
        let start = self.pos;
        let whole = self.digits();
        let mut value =
            Coefficient::from_integer(whole.parse::<BigInt>().unwrap_or_else(|_| BigInt::zero()));
        if self.pos < self.src.len() && self.src[self.pos] == b'.' {
            self.pos += 1;
            let frac = self.digits();
            if frac.is_empty() && whole.is_empty() {
                return Err(Error::Syntax {
                    position: start,
                    message: "malformed number".into(),
                });
            }
            if !frac.is_empty() {
                let den = BigInt::from(10u32).pow(frac.len() as u32);
                let num: BigInt = frac.parse().expect("ascii digits");
                value += Coefficient::new(num, den);
            }
        } else if whole.is_empty() {
            return Err(Error::Syntax {
                position: start,
                message: "malformed number".into(),
            });
        }
        Ok(Expr::Literal(value))
    }
}

/// Strips `Group` nodes, for comparing trees modulo parenthesization.
pub fn strip_groups(e: &Expr) -> Expr {
    let b = |e: &Expr| Box::new(strip_groups(e));
    match e {
        Expr::Literal(c) => Expr::Literal(c.clone()),
        Expr::X => Expr::X,
        Expr::Neg(a) => Expr::Neg(b(a)),
        Expr::Add(l, r) => Expr::Add(b(l), b(r)),
        Expr::Sub(l, r) => Expr::Sub(b(l), b(r)),
        Expr::Mul(l, r) => Expr::Mul(b(l), b(r)),
        Expr::Div(l, r) => Expr::Div(b(l), b(r)),
        Expr::Pow(a, n) => Expr::Pow(b(a), *n),
        Expr::Group(a) => strip_groups(a),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fps::{int, ratio};

    fn lit(n: i64) -> Box<Expr> {
        Box::new(Expr::Literal(int(n)))
    }

    #[test]
    fn structure() {
        let e = parse("1/(1+x)").unwrap();
        assert_eq!(
            e,
            Expr::Div(
                lit(1),
                Box::new(Expr::Group(Box::new(Expr::Add(lit(1), Box::new(Expr::X)))))
            )
        );
        assert!(matches!(parse("(1-x)^2").unwrap(), Expr::Pow(_, 2)));
        assert_eq!(
            parse("-x^2").unwrap(),
            Expr::Neg(Box::new(Expr::Pow(Box::new(Expr::X), 2)))
        );
        assert_eq!(
            strip_groups(&parse("1 - x - x").unwrap()),
            Expr::Sub(
                Box::new(Expr::Sub(lit(1), Box::new(Expr::X))),
                Box::new(Expr::X)
            )
        );
    }

    #[test]
    fn evaluation() {
        assert_eq!(
            eval_str("(1-x)^2", 3).unwrap(),
            Series::from_ints(&[1, -2, 1]).unwrap()
        );
        assert_eq!(
            eval_str("x/(1-x)", 5).unwrap(),
            Series::from_ints(&[0, 1, 1, 1, 1]).unwrap()
        );
        assert_eq!(
            eval_str("1/(1+x)", 4).unwrap(),
            Series::from_ints(&[1, -1, 1, -1]).unwrap()
        );
        assert!(eval_str("0", 3).unwrap().is_zero());
        assert_eq!(eval_str("1/x", 4), Err(Error::NotInvertible));
        assert_eq!(
            eval_str("0.25 + 1/2*x", 2).unwrap().coeffs(),
            &[ratio(1, 4), ratio(1, 2)]
        );
        assert_eq!(eval_str("2^0", 1).unwrap().coeffs(), &[int(1)]);
    }

    #[test]
    fn errors() {
        assert_eq!(
            parse("1 + y"),
            Err(Error::UnknownIdentifier {
                position: 4,
                name: "y".into()
            })
        );
        assert!(matches!(
            parse("(1+x"),
            Err(Error::Syntax { position: 4, .. })
        ));
        assert!(matches!(
            parse("1 +"),
            Err(Error::Syntax { position: 3, .. })
        ));
        assert!(matches!(parse("x^-1"), Err(Error::Syntax { .. })));
        assert!(matches!(parse("x^2^3"), Err(Error::Syntax { .. })));
        assert!(matches!(
            parse("1 2"),
            Err(Error::Syntax { position: 2, .. })
        ));
        assert!(matches!(parse("."), Err(Error::Syntax { position: 0, .. })));
        assert!(matches!(parse(""), Err(Error::Syntax { .. })));
    }

    #[test]
    fn printed_tree_reparses() {
        for text in ["1/(1+x)", "-x^2 - 3/4*x", "(1-x)^3 * (2 + x)", "-(-1)"] {
            let e = parse(text).unwrap();
            assert_eq!(
                strip_groups(&parse(&e.to_string()).unwrap()),
                strip_groups(&e),
                "{text}"
            );
        }
        let neg_base = Expr::Pow(Box::new(Expr::Neg(Box::new(Expr::X))), 2);
        let tower = Expr::Pow(Box::new(Expr::Pow(Box::new(Expr::X), 2)), 3);
        for e in [neg_base, tower] {
            assert_eq!(strip_groups(&parse(&e.to_string()).unwrap()), e);
        }
    }
}
