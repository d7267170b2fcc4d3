//! Relational expression language.
//!
//! ```text
//! stmt  := expr ( "<=" expr | "==" expr )?
//! expr  := atom ( binop atom )*
//! atom  := NAME | "(" expr ")" | atom "'"
//! binop := "o" | "<|" | "|>" | "[]" | "m<|" | "m|>" | "m[]"
//! ```
//!
//! Only `o` may be chained without parentheses (it associates to the left);
//! a chain that mixes operators or repeats any other operator is rejected,
//! because the BK-products are not associative among themselves.

use std::fmt;

use thiserror::Error;

/// Binary relational products.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinOp {
    Circle,
    Sub,
    Sup,
    Square,
    MeanSub,
    MeanSup,
    MeanSquare,
}

impl BinOp {
    pub const ALL: [BinOp; 7] = [
        BinOp::Circle,
        BinOp::Sub,
        BinOp::Sup,
        BinOp::Square,
        BinOp::MeanSub,
        BinOp::MeanSup,
        BinOp::MeanSquare,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            BinOp::Circle => "o",
            BinOp::Sub => "<|",
            BinOp::Sup => "|>",
            BinOp::Square => "[]",
            BinOp::MeanSub => "m<|",
            BinOp::MeanSup => "m|>",
            BinOp::MeanSquare => "m[]",
        }
    }
}

/// Root-level comparisons; they turn a relation-valued expression into a boolean.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CmpOp {
    Included,
    Equal,
}

impl CmpOp {
    pub fn symbol(self) -> &'static str {
        match self {
            CmpOp::Included => "<=",
            CmpOp::Equal => "==",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    Rel(String),
    Converse(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    /// Only produced at the root by [`parse`].
    Compare(CmpOp, Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn rel(name: impl Into<String>) -> Self {
        Expr::Rel(name.into())
    }

    pub fn converse(self) -> Self {
        Expr::Converse(Box::new(self))
    }

    pub fn binary(op: BinOp, lhs: Expr, rhs: Expr) -> Self {
        Expr::Binary(op, Box::new(lhs), Box::new(rhs))
    }

    pub fn compare(op: CmpOp, lhs: Expr, rhs: Expr) -> Self {
        Expr::Compare(op, Box::new(lhs), Box::new(rhs))
    }

    /// Relation names in order of first occurrence.
    pub fn names(&self) -> Vec<&str> {
        fn walk<'a>(e: &'a Expr, out: &mut Vec<&'a str>) {
            match e {
                Expr::Rel(n) => {
                    if !out.contains(&n.as_str()) {
                        out.push(n);
                    }
                }
                Expr::Converse(x) => walk(x, out),
                Expr::Binary(_, l, r) | Expr::Compare(_, l, r) => {
                    walk(l, out);
                    walk(r, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }
}

/// Pretty-printing with the fewest parentheses that reparse to the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Rel(name) => f.write_str(name),
            Expr::Converse(inner) => match **inner {
                Expr::Rel(_) | Expr::Converse(_) => write!(f, "{inner}'"),
                _ => write!(f, "({inner})'"),
            },
            Expr::Binary(op, lhs, rhs) => {
                // The left operand of `o` may itself be an unparenthesized `o` chain.
                let bare_left =
                    matches!(**lhs, Expr::Binary(BinOp::Circle, ..)) && *op == BinOp::Circle;
                write_operand(f, lhs, bare_left)?;
                write!(f, " {} ", op.symbol())?;
                write_operand(f, rhs, false)
            }
            Expr::Compare(op, lhs, rhs) => write!(f, "{lhs} {} {rhs}", op.symbol()),
        }
    }
}

fn write_operand(f: &mut fmt::Formatter<'_>, e: &Expr, bare: bool) -> fmt::Result {
    match e {
        Expr::Binary(..) | Expr::Compare(..) if !bare => write!(f, "({e})"),
        _ => write!(f, "{e}"),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },
    #[error(
        "operator `{second}` at column {column} follows `{first}` without parentheses; \
         these products are not associative, write `(a {first} b) {second} c` or `a {first} (b {second} c)`"
    )]
    NonAssociative {
        column: usize,
        first: &'static str,
        second: &'static str,
    },
}

impl ParseError {
    /// One-based column of the offending token.
    pub fn column(&self) -> usize {
        match self {
            ParseError::Syntax { column, .. } | ParseError::NonAssociative { column, .. } => {
                *column
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Name(String),
    Op(BinOp),
    Cmp(CmpOp),
    Prime,
    Open,
    Close,
    End,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Name(n) => write!(f, "name `{n}`"),
            Token::Op(op) => write!(f, "`{}`", op.symbol()),
            Token::Cmp(op) => write!(f, "`{}`", op.symbol()),
            Token::Prime => f.write_str("`'`"),
            Token::Open => f.write_str("`(`"),
            Token::Close => f.write_str("`)`"),
            Token::End => f.write_str("end of input"),
        }
    }
}

fn is_name_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

fn is_name_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '.'
}

/// Splits the input into tokens paired with their one-based columns.
fn lex(text: &str) -> Result<Vec<(Token, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let symbol_at = |i: usize, s: &str| {
        s.chars()
            .enumerate()
            .all(|(k, c)| chars.get(i + k) == Some(&c))
    };
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let two = [
            ("<|", BinOp::Sub),
            ("|>", BinOp::Sup),
            ("[]", BinOp::Square),
        ];
        if let Some((s, op)) = two.iter().find(|(s, _)| symbol_at(i, s)) {
            out.push((Token::Op(*op), column));
            i += s.len();
            continue;
        }
        if c == 'm' {
            let mean = [
                ("m<|", BinOp::MeanSub),
                ("m|>", BinOp::MeanSup),
                ("m[]", BinOp::MeanSquare),
            ];
            if let Some((s, op)) = mean.iter().find(|(s, _)| symbol_at(i, s)) {
                out.push((Token::Op(*op), column));
                i += s.len();
                continue;
            }
        }
        if symbol_at(i, "<=") {
            out.push((Token::Cmp(CmpOp::Included), column));
            i += 2;
            continue;
        }
        if symbol_at(i, "==") {
            out.push((Token::Cmp(CmpOp::Equal), column));
            i += 2;
            continue;
        }
        match c {
            '\'' => out.push((Token::Prime, column)),
            '(' => out.push((Token::Open, column)),
            ')' => out.push((Token::Close, column)),
            c if is_name_start(c) => {
                let start = i;
                while i < chars.len() && is_name_char(chars[i]) {
                    i += 1;
                }
                let word: String = chars[start..i].iter().collect();
                let token = if word == "o" {
                    Token::Op(BinOp::Circle)
                } else {
                    Token::Name(word)
                };
                out.push((token, column));
                continue;
            }
            other => {
                return Err(ParseError::Syntax {
                    column,
                    message: format!("unexpected character `{other}`"),
                })
            }
        }
        i += 1;
    }
    out.push((Token::End, chars.len() + 1));
    Ok(out)
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos].0
    }

    fn column(&self) -> usize {
        self.tokens[self.pos].1
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].0.clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, wanted: &str) -> ParseError {
        ParseError::Syntax {
            column: self.column(),
            message: format!("expected {wanted}, found {}", self.peek()),
        }
    }

    fn stmt(&mut self) -> Result<Expr, ParseError> {
        let lhs = self.expr()?;
        let expr = match self.peek().clone() {
            Token::Cmp(op) => {
                self.bump();
                let rhs = self.expr()?;
                Expr::compare(op, lhs, rhs)
            }
            _ => lhs,
        };
        match self.peek() {
            Token::End => Ok(expr),
            Token::Cmp(_) => Err(ParseError::Syntax {
                column: self.column(),
                message: "comparisons cannot be chained or nested".into(),
            }),
            _ => Err(self.unexpected("an operator or end of input")),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.atom()?;
        let mut first: Option<BinOp> = None;
        while let Token::Op(op) = *self.peek() {
            if let Some(prev) = first {
                if prev != BinOp::Circle || op != BinOp::Circle {
                    return Err(ParseError::NonAssociative {
                        column: self.column(),
                        first: prev.symbol(),
                        second: op.symbol(),
                    });
                }
            }
            first = Some(op);
            self.bump();
            let rhs = self.atom()?;
            lhs = Expr::binary(op, lhs, rhs);
        }
        Ok(lhs)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let mut e = match self.peek().clone() {
            Token::Name(n) => {
                self.bump();
                Expr::Rel(n)
            }
            Token::Open => {
                self.bump();
                let inner = self.expr()?;
                if let Token::Cmp(_) = self.peek() {
                    return Err(ParseError::Syntax {
                        column: self.column(),
                        message: "comparisons are only allowed at the top level".into(),
                    });
                }
                if *self.peek() != Token::Close {
                    return Err(self.unexpected("`)`"));
                }
                self.bump();
                inner
            }
            _ => return Err(self.unexpected("a relation name or `(`")),
        };
        while *self.peek() == Token::Prime {
            self.bump();
            e = e.converse();
        }
        Ok(e)
    }
}

/// Parses a statement: an expression, optionally compared with `<=` or `==`.
pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let mut parser = Parser {
        tokens: lex(text)?,
        pos: 0,
    };
    parser.stmt()
}
