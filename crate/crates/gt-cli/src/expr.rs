//! Element expressions in the generators of a context.
//!
//! ```text
//! element := ['+' | '-'] term (('+' | '-') term)*
//! term    := factor (('*' | '.') factor)*
//! factor  := rational | generator | '(' element ')'
//!          | 'exp(' element ')' | 'br(' element ',' element ')'
//! ```
//!
//! A leading rational coefficient `3/2*x1` is the first factor of its term.
//! `.` multiplies like `*`; it is the letter separator of the printed form,
//! so anything [`print_element`] writes parses back to the same element.
//! Parsing is syntactic first and resolves generator names afterwards, so a
//! malformed input is reported as a syntax error even when it also names an
//! unknown generator.

use gt_algebra::{parse_rational, Context, Rational, TensorElement};
use num_traits::Zero;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown generator `{name}` at offset {offset}")]
    UnknownGenerator { name: String, offset: usize },
    #[error("exp at offset {offset} needs an argument with zero constant term, got {constant}")]
    NotAugmented { offset: usize, constant: String },
}

impl ExprError {
    pub fn offset(&self) -> usize {
        match self {
            ExprError::Syntax { offset, .. } | ExprError::UnknownGenerator { offset, .. } | ExprError::NotAugmented { offset, .. } => {
                *offset
            }
        }
    }
}

type Result<T> = std::result::Result<T, ExprError>;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Number(Rational),
    Plus,
    Minus,
    Star,
    Dot,
    Open,
    Close,
    Comma,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Number(n) => format!("`{n}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Dot => "`.`".into(),
            Tok::Open => "`(`".into(),
            Tok::Close => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn syntax(offset: usize, message: impl Into<String>) -> ExprError {
    ExprError::Syntax { offset, message: message.into() }
}

fn tokenize(src: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let simple = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Some(Tok::Plus),
            b'-' => Some(Tok::Minus),
            b'*' => Some(Tok::Star),
            b'.' => Some(Tok::Dot),
            b'(' => Some(Tok::Open),
            b')' => Some(Tok::Close),
            b',' => Some(Tok::Comma),
            _ => None,
        };
        if let Some(t) = simple {
            out.push((t, start));
            i += 1;
        } else if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if i < bytes.len() && bytes[i] == b'/' {
                i += 1;
                if i >= bytes.len() || !bytes[i].is_ascii_digit() {
                    return Err(syntax(i, "expected a denominator after `/`"));
                }
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
            }
            let n = parse_rational(&src[start..i]).ok_or_else(|| syntax(start, "zero denominator"))?;
            out.push((Tok::Number(n), start));
        } else if c.is_ascii_alphabetic() || c == b'_' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Ident(src[start..i].to_string()), start));
        } else {
            let ch = src[start..].chars().next().unwrap_or('?');
            return Err(syntax(start, format!("unexpected character `{ch}`")));
        }
    }
    out.push((Tok::End, src.len()));
    Ok(out)
}

/// Parsed, not yet evaluated.
#[derive(Clone, Debug)]
enum Node {
    Number(Rational),
    Generator { name: String, offset: usize },
    Sum(Vec<(bool, Node)>),
    Product(Vec<Node>),
    Exp { arg: Box<Node>, offset: usize },
    Bracket(Box<Node>, Box<Node>),
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<()> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(syntax(self.offset(), format!("expected {}, found {}", want.describe(), self.peek().describe())))
        }
    }

    fn element(&mut self) -> Result<Node> {
        let mut terms = Vec::new();
        let mut negative = match self.peek() {
            Tok::Minus => {
                self.bump();
                true
            }
            Tok::Plus => {
                self.bump();
                false
            }
            _ => false,
        };
        loop {
            terms.push((negative, self.term()?));
            negative = match self.peek() {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => break,
            };
            self.bump();
        }
        Ok(Node::Sum(terms))
    }

    fn term(&mut self) -> Result<Node> {
        let mut factors = vec![self.factor()?];
        while matches!(self.peek(), Tok::Star | Tok::Dot) {
            self.bump();
            factors.push(self.factor()?);
        }
        Ok(Node::Product(factors))
    }

    fn factor(&mut self) -> Result<Node> {
        let (tok, offset) = self.bump();
        match tok {
            Tok::Number(n) => Ok(Node::Number(n)),
            Tok::Open => {
                let e = self.element()?;
                self.expect(Tok::Close)?;
                Ok(e)
            }
            Tok::Ident(name) if *self.peek() == Tok::Open && (name == "exp" || name == "br") => {
                self.bump();
                let first = self.element()?;
                let node = if name == "exp" {
                    Node::Exp { arg: Box::new(first), offset }
                } else {
                    self.expect(Tok::Comma)?;
                    let second = self.element()?;
                    Node::Bracket(Box::new(first), Box::new(second))
                };
                self.expect(Tok::Close)?;
                Ok(node)
            }
            Tok::Ident(name) => Ok(Node::Generator { name, offset }),
            other => Err(syntax(offset, format!("expected a factor, found {}", other.describe()))),
        }
    }
}

fn parse_tree(src: &str) -> Result<Node> {
    let mut p = Parser { toks: tokenize(src)?, pos: 0 };
    let e = p.element()?;
    if *p.peek() != Tok::End {
        return Err(syntax(p.offset(), format!("unexpected {}", p.peek().describe())));
    }
    Ok(e)
}

fn evaluate(node: &Node, ctx: &Context) -> Result<TensorElement> {
    Ok(match node {
        Node::Number(n) => TensorElement::scalar(ctx, n.clone()),
        Node::Generator { name, offset } => match ctx.alphabet().letter(name) {
            Some(l) => TensorElement::generator(ctx, l),
            None => return Err(ExprError::UnknownGenerator { name: name.clone(), offset: *offset }),
        },
        Node::Sum(terms) => {
            let mut out = TensorElement::zero(ctx);
            for (negative, t) in terms {
                let v = evaluate(t, ctx)?;
                out = if *negative { &out - &v } else { &out + &v };
            }
            out
        }
        Node::Product(factors) => {
            let mut out = TensorElement::one(ctx);
            for f in factors {
                out = &out * &evaluate(f, ctx)?;
            }
            out
        }
        Node::Exp { arg, offset } => {
            let a = evaluate(arg, ctx)?;
            let constant = a.counit();
            if !constant.is_zero() {
                return Err(ExprError::NotAugmented { offset: *offset, constant: constant.to_string() });
            }
            a.exp_truncated().expect("zero counit checked")
        }
        Node::Bracket(a, b) => {
            let (a, b) = (evaluate(a, ctx)?, evaluate(b, ctx)?);
            &(&a * &b) - &(&b * &a)
        }
    })
}

/// Parses `src` into an element of the truncated tensor algebra of `ctx`.
pub fn parse_element(src: &str, ctx: &Context) -> Result<TensorElement> {
    evaluate(&parse_tree(src)?, ctx)
}

/// The canonical text form, terms ordered by (degree, word).
pub fn print_element(e: &TensorElement) -> String {
    e.display().to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use gt_algebra::{frac, lie_bracket, Alphabet, LieElement};

    fn ctx() -> Context {
        Context::new(Alphabet::new([("x1", 1), ("y1", 1), ("z1", 2)]).unwrap(), 4)
    }

    fn g(c: &Context, s: &str) -> TensorElement {
        TensorElement::named(c, s).unwrap()
    }

    #[test]
    fn commutator_of_generators() {
        let c = ctx();
        let lie = lie_bracket(&LieElement::generator(&c, 0), &LieElement::generator(&c, 1)).unwrap();
        assert_eq!(parse_element("x1*y1 - y1*x1", &c).unwrap(), *lie.tensor());
        assert_eq!(parse_element("br(x1, y1)", &c).unwrap(), *lie.tensor());
    }

    #[test]
    fn coefficients_and_precedence() {
        let c = ctx();
        let (x, y, z) = (g(&c, "x1"), g(&c, "y1"), g(&c, "z1"));
        let expected = &z.scale(&frac(3, 2)) + &(&(&x * &y) - &(&y * &x));
        assert_eq!(parse_element("3/2*z1 + br(x1,y1)", &c).unwrap(), expected);
        assert_eq!(parse_element("2*x1 + y1*x1", &c).unwrap(), &x.scale(&frac(2, 1)) + &(&y * &x));
        assert_eq!(parse_element("-(x1 + y1)*x1", &c).unwrap(), -&(&(&x + &y) * &x));
        assert_eq!(parse_element("x1.y1", &c).unwrap(), &x * &y);
        assert_eq!(parse_element("1", &c).unwrap(), TensorElement::one(&c));
    }

    #[test]
    fn exponential() {
        let c = ctx();
        let x = g(&c, "x1");
        assert_eq!(parse_element("exp(x1)", &c).unwrap(), x.exp_truncated().unwrap());
        let err = parse_element("exp(1 + x1)", &c).unwrap_err();
        assert!(matches!(err, ExprError::NotAugmented { offset: 0, .. }));
    }

    #[test]
    fn error_offsets() {
        let c = ctx();
        assert_eq!(parse_element("q1*", &c).unwrap_err().offset(), 3);
        assert!(matches!(parse_element("q1*", &c), Err(ExprError::Syntax { .. })));
        assert_eq!(parse_element("x1 + q1", &c).unwrap_err(), ExprError::UnknownGenerator { name: "q1".into(), offset: 5 });
        assert_eq!(parse_element("(x1", &c).unwrap_err().offset(), 3);
        assert_eq!(parse_element("x1 y1", &c).unwrap_err().offset(), 3);
        assert_eq!(parse_element("x1 # y1", &c).unwrap_err().offset(), 3);
        assert_eq!(parse_element("3/ x1", &c).unwrap_err().offset(), 2);
        assert_eq!(parse_element("br(x1)", &c).unwrap_err().offset(), 5);
        assert_eq!(parse_element("", &c).unwrap_err().offset(), 0);
    }
}
