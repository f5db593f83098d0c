//! Tokenizer and recursive-descent parser for the expression language.
//!
//! ```text
//! stmt    := 'let' IDENT '=' expr | expr
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := primary ('^' unary)?
//! primary := INT | IDENT | IDENT '(' args ')' | '(' expr ')'
//!          | '[' args ']' | STRING
//! args    := (expr (',' expr)*)?
//! ```
//!
//! `^` binds tighter than unary minus, so `-w^2` is `-(w^2)`, and it is
//! right associative. Columns in errors are 1-based.

use num_bigint::BigInt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Expr {
    Int(BigInt),
    Var(String),
    Str(String),
    Neg(Box<Expr>),
    Bin(BinOp, Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
    Call { name: String, args: Vec<Expr> },
    List(Vec<Expr>),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Stmt {
    Let(String, Expr),
    Expr(Expr),
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Str(String),
    Sym(char),
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    col: usize,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(n) => format!("number {n}"),
        Tok::Ident(s) => format!("identifier {s}"),
        Tok::Str(s) => format!("string {s:?}"),
        Tok::Sym(c) => format!("'{c}'"),
        Tok::End => "end of input".into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            let n = digits.parse().expect("ascii digits form an integer");
            out.push(Token { tok: Tok::Int(n), col });
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            out.push(Token { tok: Tok::Ident(word), col });
        } else if c == '"' {
            let start = i + 1;
            i += 1;
            while i < chars.len() && chars[i] != '"' {
                i += 1;
            }
            if i == chars.len() {
                return Err(Error::Syntax {
                    position: col,
                    expected: "closing '\"'".into(),
                });
            }
            let s: String = chars[start..i].iter().collect();
            i += 1;
            out.push(Token { tok: Tok::Str(s), col });
        } else if "+-*/^(),[]=".contains(c) {
            out.push(Token { tok: Tok::Sym(c), col });
            i += 1;
        } else {
            return Err(Error::Syntax {
                position: col,
                expected: format!("an expression, found {c:?}"),
            });
        }
    }
    out.push(Token {
        tok: Tok::End,
        col: chars.len() + 1,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn at(&self, c: char) -> bool {
        self.peek().tok == Tok::Sym(c)
    }

    fn fail<T>(&self, expected: &str) -> Result<T> {
        let t = self.peek();
        Err(Error::Syntax {
            position: t.col,
            expected: format!("{expected}, found {}", describe(&t.tok)),
        })
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.at(c) {
            self.bump();
            Ok(())
        } else {
            self.fail(&format!("'{c}'"))
        }
    }

    fn stmt(&mut self) -> Result<Stmt> {
        if self.peek().tok == Tok::Ident("let".into()) {
            self.bump();
            let name = match self.bump().tok {
                Tok::Ident(n) => n,
                _ => {
                    self.pos -= 1;
                    return self.fail("a name after 'let'");
                }
            };
            self.expect('=')?;
            return Ok(Stmt::Let(name, self.expr()?));
        }
        Ok(Stmt::Expr(self.expr()?))
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            let op = if self.at('+') {
                BinOp::Add
            } else if self.at('-') {
                BinOp::Sub
            } else {
                return Ok(lhs);
            };
            self.bump();
            let rhs = self.term()?;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            let op = if self.at('*') {
                BinOp::Mul
            } else if self.at('/') {
                BinOp::Div
            } else {
                return Ok(lhs);
            };
            self.bump();
            let rhs = self.unary()?;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.at('-') {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.primary()?;
        if self.at('^') {
            self.bump();
            let exp = self.unary()?;
            return Ok(Expr::Pow(Box::new(base), Box::new(exp)));
        }
        Ok(base)
    }

    fn args(&mut self, close: char) -> Result<Vec<Expr>> {
        let mut args = Vec::new();
        if self.at(close) {
            self.bump();
            return Ok(args);
        }
        loop {
            args.push(self.expr()?);
            if self.at(',') {
                self.bump();
                continue;
            }
            self.expect(close)?;
            return Ok(args);
        }
    }

    fn primary(&mut self) -> Result<Expr> {
        match self.peek().tok.clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Expr::Int(n))
            }
            Tok::Str(s) => {
                self.bump();
                Ok(Expr::Str(s))
            }
            Tok::Ident(name) => {
                self.bump();
                if self.at('(') {
                    self.bump();
                    let args = self.args(')')?;
                    return Ok(Expr::Call { name, args });
                }
                Ok(Expr::Var(name))
            }
            Tok::Sym('(') => {
                self.bump();
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Sym('[') => {
                self.bump();
                Ok(Expr::List(self.args(']')?))
            }
            _ => self.fail("an expression"),
        }
    }

    fn finish(&self) -> Result<()> {
        if self.peek().tok == Tok::End {
            Ok(())
        } else {
            self.fail("an operator or end of input")
        }
    }
}

/// Parses one expression.
pub fn parse(text: &str) -> Result<Expr> {
    let mut p = Parser {
        toks: tokenize(text)?,
        pos: 0,
    };
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

/// Parses a REPL line: an expression or a `let` binding.
pub fn parse_stmt(text: &str) -> Result<Stmt> {
    let mut p = Parser {
        toks: tokenize(text)?,
        pos: 0,
    };
    let s = p.stmt()?;
    p.finish()?;
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> Box<Expr> {
        Box::new(Expr::Int(n.into()))
    }
    fn var(s: &str) -> Box<Expr> {
        Box::new(Expr::Var(s.into()))
    }

    #[test]
    fn precedence() {
        let e = parse("w^w + 3*w - 1/2").unwrap();
        let expect = Expr::Bin(
            BinOp::Sub,
            Box::new(Expr::Bin(
                BinOp::Add,
                Box::new(Expr::Pow(var("w"), var("w"))),
                Box::new(Expr::Bin(BinOp::Mul, int(3), var("w"))),
            )),
            Box::new(Expr::Bin(BinOp::Div, int(1), int(2))),
        );
        assert_eq!(e, expect);
        assert_eq!(
            parse("-w^2").unwrap(),
            Expr::Neg(Box::new(Expr::Pow(var("w"), int(2))))
        );
        assert_eq!(
            parse("w^-1").unwrap(),
            Expr::Pow(var("w"), Box::new(Expr::Neg(int(1))))
        );
        assert_eq!(
            parse("w^w^w").unwrap(),
            Expr::Pow(var("w"), Box::new(Expr::Pow(var("w"), var("w"))))
        );
    }

    #[test]
    fn calls_and_lists() {
        let e = parse("ln(exp(w))").unwrap();
        assert_eq!(
            e,
            Expr::Call {
                name: "ln".into(),
                args: vec![Expr::Call {
                    name: "exp".into(),
                    args: vec![Expr::Var("w".into())]
                }]
            }
        );
        assert_eq!(
            parse("simplest([0, 1], [])").unwrap(),
            Expr::Call {
                name: "simplest".into(),
                args: vec![Expr::List(vec![*int(0), *int(1)]), Expr::List(vec![])]
            }
        );
        assert_eq!(parse("nf(\"+ - +\")").unwrap(), Expr::Call {
            name: "nf".into(),
            args: vec![Expr::Str("+ - +".into())]
        });
    }

    #[test]
    fn errors_carry_columns() {
        match parse("w^^2") {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 3),
            other => panic!("{other:?}"),
        }
        match parse("(w + 1") {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 7),
            other => panic!("{other:?}"),
        }
        match parse("w $ 2") {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 3),
            other => panic!("{other:?}"),
        }
        assert!(parse("1 2").is_err());
    }

    #[test]
    fn let_bindings() {
        assert_eq!(
            parse_stmt("let x = w + 1").unwrap(),
            Stmt::Let("x".into(), Expr::Bin(BinOp::Add, var("w"), int(1)))
        );
        assert!(matches!(parse_stmt("let = 2"), Err(Error::Syntax { .. })));
    }
}
