//! Expression language for generalized numbers and quaternions.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := ('-' | '+') unary | primary
//! primary := INT | '(' expr ')'
//!          | 'eps' ('^' '(' rat ')')? | 'O' '(' 'eps' ('^' '(' rat ')')? ')'
//!          | 'alpha' '(' rat ')' | chi | 'i' | 'j' | 'k' | 'I'
//!          | 'quat' '(' expr ';' expr ';' expr ';' expr ')'
//!          | 'piece' '[' chi ':' expr (';' chi ':' expr)* ']'
//!          | ('abs' | 'sqrt' | 'conj' | 'normsq') '(' expr ')'
//! chi     := 'chi' '{' key '=' value (';' key '=' value)* '}'
//! rat     := '-'? INT ('/' INT)?
//! ```
//!
//! `i j k` are the quaternion units and `I` the complex imaginary unit.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::epsset::IndexSet;
use crate::error::{Error, Result};
use crate::gennum::{check_partition, GenNumber};
use crate::quat::{GenQuaternion, QuatClassification};
use crate::scalar::Coeff;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    Abs,
    Sqrt,
    Conj,
    NormSq,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    /// `eps^(q)`
    Eps(BigRational),
    /// `O(eps^(q))`
    BigO(BigRational),
    Alpha(BigRational),
    Chi(IndexSet),
    QuatUnit(char),
    ImaginaryUnit,
    Quat(Box<[Expr; 4]>),
    Piece(Vec<(IndexSet, Expr)>),
    Call(Func, Box<Expr>),
    Neg(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Num(GenNumber),
    Quat(GenQuaternion),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Num(x) => write!(f, "{x}"),
            Value::Quat(q) => write!(f, "{q}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    offset: usize,
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push(Token { tok: Tok::Int(text[start..i].parse().expect("digits")), offset: start });
        } else if c.is_ascii_alphabetic() || c == b'_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push(Token { tok: Tok::Ident(text[start..i].to_string()), offset: start });
        } else if b"+-*/^()[]{};:,=".contains(&c) {
            out.push(Token { tok: Tok::Sym(c as char), offset: i });
            i += 1;
        } else {
            return Err(Error::Syntax { offset: i, expected: vec!["expression character".into()] });
        }
    }
    out.push(Token { tok: Tok::End, offset: text.len() });
    Ok(out)
}

const PRIMARY_START: &[&str] = &["number", "eps", "O", "alpha", "chi", "i", "j", "k", "I", "quat", "piece", "abs", "sqrt", "conj", "normsq", "'('", "'-'"];

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].tok
    }

    fn offset(&self) -> usize {
        self.tokens[self.pos].offset
    }

    fn fail<T>(&self, expected: &[&str]) -> Result<T> {
        Err(Error::Syntax { offset: self.offset(), expected: expected.iter().map(|s| s.to_string()).collect() })
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.fail(&[&format!("'{c}'")])
        }
    }

    fn expect_ident(&mut self, name: &str) -> Result<()> {
        if *self.peek() == Tok::Ident(name.into()) {
            self.pos += 1;
            Ok(())
        } else {
            self.fail(&[name])
        }
    }

    fn int(&mut self) -> Result<BigInt> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.pos += 1;
                Ok(n)
            }
            _ => self.fail(&["number"]),
        }
    }

    fn small_int(&mut self) -> Result<u64> {
        let offset = self.offset();
        let n = self.int()?;
        u64::try_from(n).map_err(|_| Error::Syntax { offset, expected: vec!["number below 2^64".into()] })
    }

    fn signed_rational(&mut self) -> Result<BigRational> {
        let negative = self.eat('-');
        let n = self.int()?;
        let d = if self.eat('/') {
            let offset = self.offset();
            let d = self.int()?;
            if d == BigInt::from(0) {
                return Err(Error::Syntax { offset, expected: vec!["nonzero denominator".into()] });
            }
            d
        } else {
            BigInt::from(1)
        };
        let r = BigRational::new(n, d);
        Ok(if negative { -r } else { r })
    }

    fn eps_exponent(&mut self) -> Result<BigRational> {
        if self.eat('^') {
            self.expect('(')?;
            let q = self.signed_rational()?;
            self.expect(')')?;
            Ok(q)
        } else {
            Ok(BigRational::from_integer(1.into()))
        }
    }

    fn list(&mut self) -> Result<Vec<u64>> {
        self.expect('[')?;
        let mut items = Vec::new();
        if self.eat(']') {
            return Ok(items);
        }
        loop {
            items.push(self.small_int()?);
            if self.eat(']') {
                return Ok(items);
            }
            if !self.eat(',') {
                return self.fail(&["','", "']'"]);
            }
        }
    }

    fn chi_body(&mut self) -> Result<IndexSet> {
        let start = self.offset();
        self.expect('{')?;
        let (mut m, mut t, mut n, mut ins, mut outs) = (None, None, 0, Vec::new(), Vec::new());
        loop {
            let key = match self.peek().clone() {
                Tok::Ident(k) if ["m", "T", "N", "in", "out"].contains(&k.as_str()) => k,
                _ => return self.fail(&["m", "T", "N", "in", "out"]),
            };
            self.pos += 1;
            self.expect('=')?;
            match key.as_str() {
                "m" => m = Some(self.small_int()?),
                "N" => n = self.small_int()?,
                "T" => t = Some(self.list()?),
                "in" => ins = self.list()?,
                _ => outs = self.list()?,
            }
            if self.eat('}') {
                break;
            }
            if !self.eat(';') {
                return self.fail(&["';'", "'}'"]);
            }
        }
        let (Some(m), Some(t)) = (m, t) else {
            return Err(Error::Syntax { offset: start, expected: vec!["m and T fields".into()] });
        };
        IndexSet::make_periodic(m, t, n, ins, outs)
    }

    fn chi(&mut self) -> Result<IndexSet> {
        self.expect_ident("chi")?;
        self.chi_body()
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            let op = if self.eat('+') {
                BinOp::Add
            } else if self.eat('-') {
                BinOp::Sub
            } else {
                return Ok(lhs);
            };
            let rhs = self.term()?;
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            let op = if self.eat('*') {
                BinOp::Mul
            } else if self.eat('/') {
                BinOp::Div
            } else {
                return Ok(lhs);
            };
            let rhs = self.unary()?;
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.eat('+') {
            return self.unary();
        }
        self.primary()
    }

    fn call_arg(&mut self) -> Result<Expr> {
        self.expect('(')?;
        let e = self.expr()?;
        self.expect(')')?;
        Ok(e)
    }

    fn primary(&mut self) -> Result<Expr> {
        let ident = match self.peek().clone() {
            Tok::Int(n) => {
                self.pos += 1;
                return Ok(Expr::Int(n));
            }
            Tok::Sym('(') => return self.call_arg(),
            Tok::Ident(name) => name,
            _ => return self.fail(PRIMARY_START),
        };
        match ident.as_str() {
            "chi" => return Ok(Expr::Chi(self.chi()?)),
            "piece" => return self.piece(),
            _ => {}
        }
        self.pos += 1;
        Ok(match ident.as_str() {
            "eps" => Expr::Eps(self.eps_exponent()?),
            "O" => {
                self.expect('(')?;
                self.expect_ident("eps")?;
                let q = self.eps_exponent()?;
                self.expect(')')?;
                Expr::BigO(q)
            }
            "alpha" => {
                self.expect('(')?;
                let r = self.signed_rational()?;
                self.expect(')')?;
                Expr::Alpha(r)
            }
            "i" | "j" | "k" => Expr::QuatUnit(ident.chars().next().unwrap()),
            "I" => Expr::ImaginaryUnit,
            "quat" => {
                self.expect('(')?;
                let a = self.expr()?;
                self.expect(';')?;
                let b = self.expr()?;
                self.expect(';')?;
                let c = self.expr()?;
                self.expect(';')?;
                let d = self.expr()?;
                self.expect(')')?;
                Expr::Quat(Box::new([a, b, c, d]))
            }
            "abs" => Expr::Call(Func::Abs, Box::new(self.call_arg()?)),
            "sqrt" => Expr::Call(Func::Sqrt, Box::new(self.call_arg()?)),
            "conj" => Expr::Call(Func::Conj, Box::new(self.call_arg()?)),
            "normsq" => Expr::Call(Func::NormSq, Box::new(self.call_arg()?)),
            _ => {
                self.pos -= 1;
                return self.fail(PRIMARY_START);
            }
        })
    }

    fn piece(&mut self) -> Result<Expr> {
        self.expect_ident("piece")?;
        self.expect('[')?;
        let mut pieces = Vec::new();
        loop {
            let region = self.chi()?;
            self.expect(':')?;
            pieces.push((region, self.expr()?));
            if self.eat(']') {
                return Ok(Expr::Piece(pieces));
            }
            if !self.eat(';') {
                return self.fail(&["';'", "']'"]);
            }
        }
    }

    fn finish(&self) -> Result<()> {
        match self.peek() {
            Tok::End => Ok(()),
            _ => self.fail(&["'+'", "'-'", "'*'", "'/'", "end of input"]),
        }
    }
}

pub fn parse(text: &str) -> Result<Expr> {
    let mut p = Parser { tokens: lex(text)?, pos: 0 };
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

/// Parses a standalone `chi{...}` literal.
pub fn parse_index_set(text: &str) -> Result<IndexSet> {
    let mut p = Parser { tokens: lex(text)?, pos: 0 };
    let s = p.chi()?;
    p.finish()?;
    Ok(s)
}

fn to_quat(v: Value) -> Result<GenQuaternion> {
    match v {
        Value::Num(x) => GenQuaternion::from_real(x),
        Value::Quat(q) => Ok(q),
    }
}

fn to_num(v: Value, what: &str) -> Result<GenNumber> {
    match v {
        Value::Num(x) => Ok(x),
        Value::Quat(_) => Err(Error::Evaluation(format!("{what} needs a scalar operand"))),
    }
}

fn binary(op: BinOp, a: Value, b: Value, window: &BigRational) -> Result<Value> {
    if let (Value::Num(x), Value::Num(y)) = (&a, &b) {
        return Ok(Value::Num(match op {
            BinOp::Add => x + y,
            BinOp::Sub => x - y,
            BinOp::Mul => x * y,
            BinOp::Div => x * &y.invert(window)?,
        }));
    }
    if op == BinOp::Div {
        if let Value::Num(y) = &b {
            return Ok(Value::Quat(to_quat(a)?.scale(&y.invert(window)?)));
        }
    }
    let (x, y) = (to_quat(a)?, to_quat(b)?);
    Ok(Value::Quat(match op {
        BinOp::Add => &x + &y,
        BinOp::Sub => &x - &y,
        BinOp::Mul => &x * &y,
        BinOp::Div => match y.qclassify(window) {
            QuatClassification::Unit { inverse } => &x * &inverse,
            _ => return Err(Error::NotAUnit),
        },
    }))
}

pub fn evaluate(e: &Expr, window: &BigRational) -> Result<Value> {
    Ok(match e {
        Expr::Int(n) => Value::Num(GenNumber::from_rational(BigRational::from_integer(n.clone()))),
        Expr::Eps(q) | Expr::Alpha(q) => Value::Num(GenNumber::alpha(q.clone())),
        Expr::BigO(q) => Value::Num(GenNumber::big_o(q.clone())),
        Expr::Chi(s) => Value::Num(GenNumber::chi(s)),
        Expr::ImaginaryUnit => Value::Num(GenNumber::from_coeff(Coeff::imaginary_unit())),
        Expr::QuatUnit(c) => Value::Quat(match c {
            'i' => GenQuaternion::i(),
            'j' => GenQuaternion::j(),
            _ => GenQuaternion::k(),
        }),
        Expr::Quat(parts) => {
            let [a, b, c, d] = parts.as_ref();
            let comp = |x: &Expr| -> Result<GenNumber> { to_num(evaluate(x, window)?, "quat component") };
            Value::Quat(GenQuaternion::new(comp(a)?, comp(b)?, comp(c)?, comp(d)?)?)
        }
        Expr::Piece(pieces) => {
            let regions: Vec<&IndexSet> = pieces.iter().map(|(r, _)| r).collect();
            check_partition(&regions)?;
            let mut acc = GenNumber::zero();
            for (region, body) in pieces {
                acc = acc + GenNumber::chi(region) * to_num(evaluate(body, window)?, "piece body")?;
            }
            Value::Num(acc)
        }
        Expr::Neg(x) => match evaluate(x, window)? {
            Value::Num(x) => Value::Num(-x),
            Value::Quat(q) => Value::Quat(-&q),
        },
        Expr::Binary(op, a, b) => binary(*op, evaluate(a, window)?, evaluate(b, window)?, window)?,
        Expr::Call(func, arg) => {
            let v = evaluate(arg, window)?;
            match (func, v) {
                (Func::Abs, v) => Value::Num(to_num(v, "abs")?.abs()?),
                (Func::Sqrt, v) => Value::Num(to_num(v, "sqrt")?.sqrt(window)?),
                (Func::Conj, Value::Num(x)) => Value::Num(x.conj()),
                (Func::Conj, Value::Quat(q)) => Value::Quat(q.conj()),
                (Func::NormSq, Value::Num(x)) => Value::Num(x.abs_sq()),
                (Func::NormSq, Value::Quat(q)) => Value::Num(q.norm_sq()),
            }
        }
    })
}

/// Parses and evaluates in one step.
pub fn eval_str(text: &str, window: &BigRational) -> Result<Value> {
    evaluate(&parse(text)?, window)
}

pub fn parse_gennum(text: &str, window: &BigRational) -> Result<GenNumber> {
    to_num(eval_str(text, window)?, "this context")
}

pub fn parse_quaternion(text: &str, window: &BigRational) -> Result<GenQuaternion> {
    to_quat(eval_str(text, window)?)
}

/// Splits at top-level occurrences of `sep`, ignoring separators nested in
/// brackets, braces or parentheses.
pub fn split_top_level(text: &str, sep: char) -> Vec<&str> {
    let mut depth = 0i32;
    let mut parts = Vec::new();
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => depth -= 1,
            c if c == sep && depth == 0 => {
                parts.push(text[start..i].trim());
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    parts.push(text[start..].trim());
    parts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gennum::default_window;
    use crate::scalar::{int, rat};

    fn ev(s: &str) -> Value {
        eval_str(s, &default_window()).unwrap()
    }

    #[test]
    fn product_node() {
        let e = parse("alpha(3/2)*chi{m=2;T=[0];N=0}").unwrap();
        assert!(matches!(e, Expr::Binary(BinOp::Mul, _, _)));
    }

    #[test]
    fn quaternion_literal() {
        assert!(matches!(parse("quat(1;1;0;0)").unwrap(), Expr::Quat(_)));
        assert_eq!(ev("quat(1;1;0;0)"), ev("1 + i"));
    }

    #[test]
    fn syntax_error_offset() {
        match parse("1 + * 2") {
            Err(Error::Syntax { offset, expected }) => {
                assert_eq!(offset, 4);
                assert!(expected.contains(&"number".to_string()));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse("alpha(1"), Err(Error::Syntax { offset: 7, .. })));
        assert!(matches!(parse("1 2"), Err(Error::Syntax { offset: 2, .. })));
        assert!(matches!(parse("foo(1)"), Err(Error::Syntax { offset: 0, .. })));
    }

    #[test]
    fn arithmetic() {
        assert_eq!(ev("alpha(1)+alpha(1)").to_string(), "2*eps^(1)");
        assert_eq!(ev("1/2"), Value::Num(GenNumber::from_rational(rat(1, 2))));
        assert_eq!(ev("eps^(-1/2)*eps^(1/2)"), Value::Num(GenNumber::one()));
        assert_eq!(ev("i*j"), ev("k"));
        assert_eq!(ev("normsq(quat(3;4;0;0))"), Value::Num(GenNumber::from_int(25)));
        assert_eq!(ev("conj(1+2*I)").to_string(), "(1-2*I)");
        assert_eq!(ev("abs(-alpha(1))"), ev("eps"));
        assert_eq!(ev("sqrt(alpha(2))"), ev("alpha(1)"));
        assert_eq!(ev("(1+i)/2"), ev("quat(1/2;1/2;0;0)"));
    }

    #[test]
    fn chi_and_pieces() {
        let v = ev("piece[chi{m=2;T=[0];N=0}: eps; chi{m=2; T=[1]; N=0; in=[]; out=[]}: eps^(2)]");
        let expected = GenNumber::chi(&IndexSet::evens()) * GenNumber::alpha(int(1))
            + GenNumber::chi(&IndexSet::odds()) * GenNumber::alpha(int(2));
        assert_eq!(v, Value::Num(expected));
        assert!(matches!(eval_str("piece[chi{m=2;T=[0]}: 1]", &default_window()), Err(Error::RegionsNotPartition(_))));
        assert_eq!(parse_index_set("chi{m=4;T=[0,2];N=0}").unwrap(), IndexSet::evens());
    }

    #[test]
    fn evaluation_errors() {
        let w = default_window();
        assert_eq!(eval_str("1/chi{m=2;T=[0]}", &w), Err(Error::NotAUnit));
        assert_eq!(eval_str("quat(I;0;0;0)", &w), Err(Error::NonRealComponent));
        assert!(matches!(eval_str("sqrt(i)", &w), Err(Error::Evaluation(_))));
    }

    #[test]
    fn top_level_split() {
        assert_eq!(split_top_level("chi{m=2;T=[0]}; quat(1;0;0;0);2", ';'), vec!["chi{m=2;T=[0]}", "quat(1;0;0;0)", "2"]);
        assert_eq!(split_top_level("(chi{m=1;T=[];N=6;in=[1,5]})*x1, (1)", ','), vec!["(chi{m=1;T=[];N=6;in=[1,5]})*x1", "(1)"]);
    }
}
