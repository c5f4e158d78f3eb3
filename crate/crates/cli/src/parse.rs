//! Operator expression parser.
//!
//! Grammar:
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' uint)?
//! atom   := 'D' | 'x' | rational | '(' expr ')'
//! ```
//! Rationals are `p/q` or plain integers (the `/` binds inside the literal;
//! there is no division operator). Multiplication is noncommutative and
//! associates left-to-right; products normalize through `D x = x D + 1` when
//! the tree is lowered to an operator.

use std::fmt;

use dopfactor_core::arith::{BigRational, Polynomial, QuadExt};
use dopfactor_core::weyl::DiffOp;

pub type RatPoly = Polynomial<BigRational>;
pub type RatOp = DiffOp<RatPoly>;

#[derive(Debug, Clone, PartialEq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Abstract syntax of an operator expression.
#[derive(Debug, Clone, PartialEq)]
pub enum OperatorExpr {
    D,
    X,
    Lit(BigRational),
    Neg(Box<OperatorExpr>),
    Add(Box<OperatorExpr>, Box<OperatorExpr>),
    Sub(Box<OperatorExpr>, Box<OperatorExpr>),
    Mul(Box<OperatorExpr>, Box<OperatorExpr>),
    Pow(Box<OperatorExpr>, u32),
}

impl OperatorExpr {
    /// Lowers the tree to a standard-form operator over `Q`.
    pub fn to_diffop(&self) -> RatOp {
        match self {
            OperatorExpr::D => DiffOp::d(),
            OperatorExpr::X => DiffOp::from_coeff(Polynomial::identity()),
            OperatorExpr::Lit(r) => DiffOp::from_coeff(Polynomial::constant(r.clone())),
            OperatorExpr::Neg(e) => e.to_diffop().neg(),
            OperatorExpr::Add(l, r) => l.to_diffop().add(&r.to_diffop()),
            OperatorExpr::Sub(l, r) => l.to_diffop().sub(&r.to_diffop()),
            OperatorExpr::Mul(l, r) => l.to_diffop().mul(&r.to_diffop()),
            OperatorExpr::Pow(e, n) => e.to_diffop().pow(*n),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    D,
    X,
    Rational(BigRational),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn tokenize(src: &'a str) -> Result<Vec<(Token, usize)>, ParseError> {
        let mut lx = Lexer {
            src: src.as_bytes(),
            pos: 0,
        };
        let mut out = Vec::new();
        while lx.pos < lx.src.len() {
            let start = lx.pos;
            let c = lx.src[lx.pos];
            match c {
                b' ' | b'\t' => {
                    lx.pos += 1;
                }
                b'D' => {
                    lx.pos += 1;
                    out.push((Token::D, start));
                }
                b'x' => {
                    lx.pos += 1;
                    out.push((Token::X, start));
                }
                b'+' => {
                    lx.pos += 1;
                    out.push((Token::Plus, start));
                }
                b'-' => {
                    lx.pos += 1;
                    out.push((Token::Minus, start));
                }
                b'*' => {
                    lx.pos += 1;
                    out.push((Token::Star, start));
                }
                b'^' => {
                    lx.pos += 1;
                    out.push((Token::Caret, start));
                }
                b'(' => {
                    lx.pos += 1;
                    out.push((Token::LParen, start));
                }
                b')' => {
                    lx.pos += 1;
                    out.push((Token::RParen, start));
                }
                b'0'..=b'9' => {
                    let numer = lx.read_digits();
                    let value = if lx.peek() == Some(b'/') {
                        lx.pos += 1;
                        if !lx.peek().is_some_and(|c| c.is_ascii_digit()) {
                            return Err(ParseError {
                                position: lx.pos,
                                message: "expected digits after '/'".into(),
                            });
                        }
                        let denom = lx.read_digits();
                        if denom == "0" {
                            return Err(ParseError {
                                position: start,
                                message: "zero denominator".into(),
                            });
                        }
                        format!("{}/{}", numer, denom)
                    } else {
                        numer
                    };
                    let rational: BigRational = value.parse().map_err(|_| ParseError {
                        position: start,
                        message: format!("invalid rational literal '{}'", value),
                    })?;
                    out.push((Token::Rational(rational), start));
                }
                other => {
                    return Err(ParseError {
                        position: start,
                        message: format!("unexpected character '{}'", other as char),
                    });
                }
            }
        }
        Ok(out)
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn read_digits(&mut self) -> String {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    index: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.index).map(|(t, _)| t)
    }

    fn position(&self) -> usize {
        self.tokens
            .get(self.index)
            .map(|&(_, p)| p)
            .unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.index).map(|(t, _)| t.clone());
        if t.is_some() {
            self.index += 1;
        }
        t
    }

    fn expect(&mut self, want: Token, what: &str) -> Result<(), ParseError> {
        if self.peek() == Some(&want) {
            self.index += 1;
            Ok(())
        } else {
            Err(ParseError {
                position: self.position(),
                message: format!("expected {}", what),
            })
        }
    }

    fn expr(&mut self) -> Result<OperatorExpr, ParseError> {
        let mut acc = if self.peek() == Some(&Token::Minus) {
            self.index += 1;
            OperatorExpr::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.index += 1;
                    acc = OperatorExpr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Some(Token::Minus) => {
                    self.index += 1;
                    acc = OperatorExpr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<OperatorExpr, ParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Token::Star) {
            self.index += 1;
            acc = OperatorExpr::Mul(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<OperatorExpr, ParseError> {
        let atom = self.atom()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(atom);
        }
        self.index += 1;
        let pos = self.position();
        match self.bump() {
            Some(Token::Rational(r)) => {
                if !r.is_integer() {
                    return Err(ParseError {
                        position: pos,
                        message: "exponent must be a nonnegative integer".into(),
                    });
                }
                let n = u32::try_from(r.to_integer()).map_err(|_| ParseError {
                    position: pos,
                    message: "exponent out of range".into(),
                })?;
                Ok(OperatorExpr::Pow(Box::new(atom), n))
            }
            Some(Token::Minus) => Err(ParseError {
                position: pos,
                message: "negative exponent".into(),
            }),
            _ => Err(ParseError {
                position: pos,
                message: "expected exponent".into(),
            }),
        }
    }

    fn atom(&mut self) -> Result<OperatorExpr, ParseError> {
        let pos = self.position();
        match self.bump() {
            Some(Token::D) => Ok(OperatorExpr::D),
            Some(Token::X) => Ok(OperatorExpr::X),
            Some(Token::Rational(r)) => Ok(OperatorExpr::Lit(r)),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                self.expect(Token::RParen, "closing ')'")?;
                Ok(inner)
            }
            Some(tok) => Err(ParseError {
                position: pos,
                message: format!("unexpected token {:?}", tok),
            }),
            None => Err(ParseError {
                position: pos,
                message: "unexpected end of input".into(),
            }),
        }
    }
}

/// Parses an operator expression into its syntax tree.
pub fn parse_expr(src: &str) -> Result<OperatorExpr, ParseError> {
    let tokens = Lexer::tokenize(src)?;
    let mut parser = Parser {
        tokens,
        index: 0,
        end: src.len(),
    };
    let e = parser.expr()?;
    if parser.index != parser.tokens.len() {
        return Err(ParseError {
            position: parser.position(),
            message: "trailing input".into(),
        });
    }
    Ok(e)
}

/// Parses an operator expression and lowers it to a standard-form operator.
pub fn parse_operator(src: &str) -> Result<RatOp, ParseError> {
    Ok(parse_expr(src)?.to_diffop())
}

/// Parses a polynomial in `x` (an operator expression of order 0).
pub fn parse_polynomial(src: &str) -> Result<RatPoly, ParseError> {
    let op = parse_operator(src)?;
    match op.order() {
        None => Ok(Polynomial::zero()),
        Some(0) => Ok(op.coeff(0)),
        Some(_) => Err(ParseError {
            position: 0,
            message: "expected a polynomial in x, found D".into(),
        }),
    }
}

/// Lifts an operator over `Q` into `Q(sqrt(base))`.
pub fn promote_operator(
    op: &RatOp,
    base: &BigRational,
) -> DiffOp<Polynomial<QuadExt>> {
    op.map_coeffs(|c| promote_polynomial(c, base))
}

/// Lifts a polynomial over `Q` into `Q(sqrt(base))`.
pub fn promote_polynomial(p: &RatPoly, base: &BigRational) -> Polynomial<QuadExt> {
    p.map(|c| QuadExt::from_rational_with_base(base.clone(), c.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use dopfactor_core::BigInt;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn poly(cs: &[i64]) -> RatPoly {
        Polynomial::new(cs.iter().map(|&c| rat(c)).collect())
    }

    fn op(coeffs: &[&[i64]]) -> RatOp {
        DiffOp::new(coeffs.iter().map(|cs| poly(cs)).collect())
    }

    #[test]
    fn direct_parse() {
        let got = parse_operator("D^2 - (x^4*4 + 3*x^3)").unwrap();
        assert_eq!(got, op(&[&[0, 0, 0, -3, -4], &[], &[1]]));
    }

    #[test]
    fn noncommutative_normalization() {
        // D*x = xD + 1
        assert_eq!(parse_operator("D*x").unwrap(), op(&[&[1], &[0, 1]]));
        // x*D stays xD
        assert_eq!(parse_operator("x*D").unwrap(), op(&[&[], &[0, 1]]));
    }

    #[test]
    fn classical_airy() {
        assert_eq!(parse_operator("D^2 - x").unwrap(), op(&[&[0, -1], &[], &[1]]));
    }

    #[test]
    fn rationals_and_unary_minus() {
        assert_eq!(
            parse_operator("-1/2 + x").unwrap(),
            DiffOp::from_coeff(Polynomial::new(vec![
                BigRational::new(BigInt::from(-1), BigInt::from(2)),
                rat(1)
            ]))
        );
        assert_eq!(parse_operator("-D").unwrap(), op(&[&[], &[-1]]));
    }

    #[test]
    fn error_positions() {
        let e = parse_operator("D^2 - ?").unwrap_err();
        assert_eq!(e.position, 6);
        let e = parse_operator("D^-2").unwrap_err();
        assert_eq!(e.message, "negative exponent");
        let e = parse_operator("(x + 1").unwrap_err();
        assert!(e.message.contains("closing"));
        let e = parse_operator("x^1/2").unwrap_err();
        assert!(e.message.contains("integer"));
        let e = parse_operator("3/0").unwrap_err();
        assert!(e.message.contains("zero denominator"));
        let e = parse_operator("x x").unwrap_err();
        assert!(e.message.contains("trailing"));
    }

    #[test]
    fn polynomial_parsing() {
        assert_eq!(parse_polynomial("x^2 - 3").unwrap(), poly(&[-3, 0, 1]));
        assert!(parse_polynomial("D + x").is_err());
        assert_eq!(parse_polynomial("0").unwrap(), Polynomial::zero());
    }
}
