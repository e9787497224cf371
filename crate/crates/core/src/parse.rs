//! Lexer and recursive-descent parser for the expression language.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := INT ('/' INT)?
//!         | NAME '_' INT
//!         | '[' slot (',' slot)* ']'
//!         | slot ('(x)' slot)+
//!         | '(' expr ')'
//!         | '-' factor
//! slot   := '1' | NAME ('^' INT)? (NAME ('^' INT)?)*
//! ```
//!
//! `⊗` is accepted wherever `(x)` is; `(` opens a parenthesized expression
//! only when not immediately followed by `x)`. Generator names inside a slot
//! may run together (`ab` for a times b); they are split against the declared
//! names, longest match first, and an exponent binds to the last name of its
//! token. Parsing also validates that names are declared, that positional
//! subscripts lie in `1..=n`, and that tensor words have exactly `n` slots.

use std::fmt;

use crate::context::{Context, ContextSpec};
use crate::expr::{Expr, SlotExpr};

/// A syntax or validation error with its 1-based source position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum TokenKind {
    Int(String),
    Name(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Underscore,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Tensor,
}

impl TokenKind {
    fn describe(&self) -> String {
        match self {
            TokenKind::Int(d) => format!("`{d}`"),
            TokenKind::Name(n) => format!("`{n}`"),
            TokenKind::Plus => "`+`".into(),
            TokenKind::Minus => "`-`".into(),
            TokenKind::Star => "`*`".into(),
            TokenKind::Slash => "`/`".into(),
            TokenKind::Caret => "`^`".into(),
            TokenKind::Underscore => "`_`".into(),
            TokenKind::LParen => "`(`".into(),
            TokenKind::RParen => "`)`".into(),
            TokenKind::LBracket => "`[`".into(),
            TokenKind::RBracket => "`]`".into(),
            TokenKind::Comma => "`,`".into(),
            TokenKind::Tensor => "`(x)`".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    kind: TokenKind,
    line: usize,
    column: usize,
}

fn lex(input: &str) -> Result<(Vec<Token>, (usize, usize)), ParseError> {
    let chars: Vec<char> = input.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    let mut line = 1;
    let mut column = 1;
    while i < chars.len() {
        let c = chars[i];
        let at = (line, column);
        let mut push = |kind: TokenKind, len: usize| {
            tokens.push(Token {
                kind,
                line: at.0,
                column: at.1,
            });
            len
        };
        let consumed = match c {
            '\n' => {
                i += 1;
                line += 1;
                column = 1;
                continue;
            }
            c if c.is_whitespace() => 0,
            '+' => push(TokenKind::Plus, 1),
            '-' => push(TokenKind::Minus, 1),
            '*' => push(TokenKind::Star, 1),
            '/' => push(TokenKind::Slash, 1),
            '^' => push(TokenKind::Caret, 1),
            '_' => push(TokenKind::Underscore, 1),
            ')' => push(TokenKind::RParen, 1),
            '[' => push(TokenKind::LBracket, 1),
            ']' => push(TokenKind::RBracket, 1),
            ',' => push(TokenKind::Comma, 1),
            '⊗' => push(TokenKind::Tensor, 1),
            '(' => {
                if chars.get(i + 1) == Some(&'x') && chars.get(i + 2) == Some(&')') {
                    push(TokenKind::Tensor, 3)
                } else {
                    push(TokenKind::LParen, 1)
                }
            }
            c if c.is_ascii_digit() => {
                let digits: String = chars[i..]
                    .iter()
                    .take_while(|c| c.is_ascii_digit())
                    .collect();
                let len = digits.len();
                push(TokenKind::Int(digits), len)
            }
            c if c.is_ascii_alphabetic() => {
                let name: String = chars[i..]
                    .iter()
                    .take_while(|c| c.is_ascii_alphanumeric())
                    .collect();
                let len = name.len();
                push(TokenKind::Name(name), len)
            }
            other => {
                return Err(ParseError {
                    line,
                    column,
                    message: format!("unexpected character `{other}`"),
                })
            }
        };
        let step = consumed.max(1);
        i += step;
        column += step;
    }
    Ok((tokens, (line, column)))
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    spec: &'a ContextSpec,
    end: (usize, usize),
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn peek_kind(&self) -> Option<&TokenKind> {
        self.peek().map(|t| &t.kind)
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        self.pos += 1;
        t
    }

    fn error_here(&self, message: String) -> ParseError {
        match self.peek() {
            Some(t) => ParseError {
                line: t.line,
                column: t.column,
                message,
            },
            None => ParseError {
                line: self.end.0,
                column: self.end.1,
                message,
            },
        }
    }

    fn error_at(&self, line: usize, column: usize, message: String) -> ParseError {
        ParseError {
            line,
            column,
            message,
        }
    }

    fn describe_here(&self) -> String {
        match self.peek() {
            Some(t) => t.kind.describe(),
            None => "end of input".into(),
        }
    }

    fn expect_int(&mut self, what: &str) -> Result<(String, usize, usize), ParseError> {
        match self.peek_kind() {
            Some(TokenKind::Int(_)) => {
                let t = self.bump();
                if let TokenKind::Int(digits) = t.kind {
                    Ok((digits, t.line, t.column))
                } else {
                    unreachable!()
                }
            }
            _ => Err(self.error_here(format!("expected {what}, found {}", self.describe_here()))),
        }
    }

    fn parse_expr(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.parse_term()?;
        loop {
            match self.peek_kind() {
                Some(TokenKind::Plus) => {
                    self.bump();
                    acc = Expr::Sum(Box::new(acc), Box::new(self.parse_term()?));
                }
                Some(TokenKind::Minus) => {
                    self.bump();
                    acc = Expr::Difference(Box::new(acc), Box::new(self.parse_term()?));
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn parse_term(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.parse_factor()?;
        while self.peek_kind() == Some(&TokenKind::Star) {
            self.bump();
            acc = Expr::Product(Box::new(acc), Box::new(self.parse_factor()?));
        }
        Ok(acc)
    }

    fn parse_factor(&mut self) -> Result<Expr, ParseError> {
        match self.peek_kind().cloned() {
            Some(TokenKind::Minus) => {
                self.bump();
                Ok(Expr::Negation(Box::new(self.parse_factor()?)))
            }
            Some(TokenKind::LParen) => {
                self.bump();
                let inner = self.parse_expr()?;
                if self.peek_kind() != Some(&TokenKind::RParen) {
                    return Err(
                        self.error_here(format!("expected `)`, found {}", self.describe_here()))
                    );
                }
                self.bump();
                Ok(Expr::Parenthesized(Box::new(inner)))
            }
            Some(TokenKind::LBracket) => {
                let open = self.bump();
                let mut slots = vec![self.parse_slot()?];
                while self.peek_kind() == Some(&TokenKind::Comma) {
                    self.bump();
                    slots.push(self.parse_slot()?);
                }
                if self.peek_kind() != Some(&TokenKind::RBracket) {
                    return Err(
                        self.error_here(format!("expected `]`, found {}", self.describe_here()))
                    );
                }
                self.bump();
                self.finish_word(slots, open.line, open.column)
            }
            Some(TokenKind::Int(digits)) => {
                let t = self.bump();
                match self.peek_kind() {
                    Some(TokenKind::Slash) => {
                        self.bump();
                        let (denom, _, _) = self.expect_int("a denominator")?;
                        Ok(Expr::ScalarLit {
                            numer: digits,
                            denom: Some(denom),
                        })
                    }
                    Some(TokenKind::Tensor) => {
                        if digits != "1" {
                            return Err(self.error_at(
                                t.line,
                                t.column,
                                format!("only `1` may fill a tensor slot, found `{digits}`"),
                            ));
                        }
                        self.parse_chain(
                            SlotExpr {
                                factors: Vec::new(),
                            },
                            t.line,
                            t.column,
                        )
                    }
                    _ => Ok(Expr::ScalarLit {
                        numer: digits,
                        denom: None,
                    }),
                }
            }
            Some(TokenKind::Name(text)) => {
                let t = self.bump();
                if self.peek_kind() == Some(&TokenKind::Underscore) {
                    self.bump();
                    let (digits, dline, dcolumn) = self.expect_int("a position after `_`")?;
                    if self.spec.context().lookup(&text).is_none() {
                        return Err(self.error_at(
                            t.line,
                            t.column,
                            format!("unknown generator `{text}`"),
                        ));
                    }
                    let position: usize = digits.parse().map_err(|_| {
                        self.error_at(dline, dcolumn, format!("position `{digits}` is too large"))
                    })?;
                    let n = self.spec.arity();
                    if position == 0 || position > n {
                        return Err(self.error_at(
                            dline,
                            dcolumn,
                            format!("position {position} is out of range 1..={n}"),
                        ));
                    }
                    Ok(Expr::Positional {
                        name: text,
                        position,
                    })
                } else {
                    let first = self.slot_from_name(text, t.line, t.column)?;
                    if self.peek_kind() == Some(&TokenKind::Tensor) {
                        self.parse_chain(first, t.line, t.column)
                    } else {
                        Err(self.error_here(format!(
                            "expected `_`, `^`, or `(x)` after a monomial, found {}",
                            self.describe_here()
                        )))
                    }
                }
            }
            _ => Err(self.error_here(format!(
                "expected an expression, found {}",
                self.describe_here()
            ))),
        }
    }

    fn parse_chain(
        &mut self,
        first: SlotExpr,
        line: usize,
        column: usize,
    ) -> Result<Expr, ParseError> {
        let mut slots = vec![first];
        while self.peek_kind() == Some(&TokenKind::Tensor) {
            self.bump();
            slots.push(self.parse_slot()?);
        }
        self.finish_word(slots, line, column)
    }

    fn finish_word(
        &self,
        slots: Vec<SlotExpr>,
        line: usize,
        column: usize,
    ) -> Result<Expr, ParseError> {
        let n = self.spec.arity();
        if slots.len() != n {
            return Err(self.error_at(
                line,
                column,
                format!(
                    "tensor word has {} slots, context arity is {n}",
                    slots.len()
                ),
            ));
        }
        Ok(Expr::Word(slots))
    }

    fn parse_slot(&mut self) -> Result<SlotExpr, ParseError> {
        match self.peek_kind().cloned() {
            Some(TokenKind::Int(digits)) => {
                let t = self.bump();
                if digits == "1" {
                    Ok(SlotExpr {
                        factors: Vec::new(),
                    })
                } else {
                    Err(self.error_at(
                        t.line,
                        t.column,
                        format!("only `1` may fill a tensor slot, found `{digits}`"),
                    ))
                }
            }
            Some(TokenKind::Name(text)) => {
                let t = self.bump();
                self.slot_from_name(text, t.line, t.column)
            }
            _ => Err(self.error_here(format!(
                "expected a slot monomial, found {}",
                self.describe_here()
            ))),
        }
    }

    /// Continues a slot whose first name token was already consumed.
    fn slot_from_name(
        &mut self,
        text: String,
        line: usize,
        column: usize,
    ) -> Result<SlotExpr, ParseError> {
        let mut factors = Vec::new();
        self.append_names(&mut factors, &text, line, column)?;
        loop {
            match self.peek_kind().cloned() {
                Some(TokenKind::Caret) => {
                    self.bump();
                    let (digits, dline, dcolumn) = self.expect_int("an exponent after `^`")?;
                    let exp: u32 = digits.parse().map_err(|_| {
                        self.error_at(dline, dcolumn, format!("exponent `{digits}` is too large"))
                    })?;
                    let last = factors.last_mut().expect("a name precedes every exponent");
                    last.1 = exp;
                    // A second caret may not follow the same name.
                    if self.peek_kind() == Some(&TokenKind::Caret) {
                        return Err(
                            self.error_here("an exponent may not follow an exponent".into())
                        );
                    }
                }
                Some(TokenKind::Name(next)) => {
                    let t = self.bump();
                    self.append_names(&mut factors, &next, t.line, t.column)?;
                }
                _ => break,
            }
        }
        Ok(SlotExpr { factors })
    }

    fn append_names(
        &self,
        factors: &mut Vec<(String, u32)>,
        text: &str,
        line: usize,
        column: usize,
    ) -> Result<(), ParseError> {
        match split_names(self.spec.context(), text) {
            Some(names) => {
                factors.extend(names.into_iter().map(|n| (n, 1)));
                Ok(())
            }
            None => Err(self.error_at(line, column, format!("unknown generator name in `{text}`"))),
        }
    }
}

/// Splits a run of letters and digits into declared generator names, trying
/// longer prefixes first.
fn split_names(ctx: &Context, text: &str) -> Option<Vec<String>> {
    if text.is_empty() {
        return Some(Vec::new());
    }
    for len in (1..=text.len()).rev() {
        let (head, rest) = text.split_at(len);
        if ctx.lookup(head).is_some() {
            if let Some(mut tail) = split_names(ctx, rest) {
                tail.insert(0, head.to_owned());
                return Some(tail);
            }
        }
    }
    None
}

/// Parses an expression against the context, validating names, positional
/// subscripts, and tensor word arity.
pub fn parse(input: &str, spec: &ContextSpec) -> Result<Expr, ParseError> {
    let (tokens, end) = lex(input)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        spec,
        end,
    };
    let expr = parser.parse_expr()?;
    if parser.peek().is_some() {
        return Err(parser.error_here(format!(
            "unexpected trailing input starting at {}",
            parser.describe_here()
        )));
    }
    Ok(expr)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(n: usize) -> ContextSpec {
        ContextSpec::parse_spec(&format!("n={n};field=q;gens=a:1,b:2")).unwrap()
    }

    fn pos(name: &str, position: usize) -> Expr {
        Expr::Positional {
            name: name.into(),
            position,
        }
    }

    #[test]
    fn difference_products_parse() {
        let e = parse("(a_1 - a_2)*(a_1 - a_3)", &spec(3)).unwrap();
        let diff12 = Expr::Parenthesized(Box::new(Expr::Difference(
            Box::new(pos("a", 1)),
            Box::new(pos("a", 2)),
        )));
        let diff13 = Expr::Parenthesized(Box::new(Expr::Difference(
            Box::new(pos("a", 1)),
            Box::new(pos("a", 3)),
        )));
        assert_eq!(e, Expr::Product(Box::new(diff12), Box::new(diff13)));
    }

    #[test]
    fn bracket_words_parse() {
        let e = parse("[a,a,1,a]", &spec(4)).unwrap();
        let a = |_: usize| SlotExpr {
            factors: vec![("a".into(), 1)],
        };
        let unit = SlotExpr { factors: vec![] };
        assert_eq!(e, Expr::Word(vec![a(0), a(1), unit, a(3)]));
    }

    #[test]
    fn tensor_chains_parse_in_both_styles() {
        let ascii = parse("a(x)1(x)b^2", &spec(3)).unwrap();
        let utf8 = parse("a⊗1⊗b^2", &spec(3)).unwrap();
        assert_eq!(ascii, utf8);
        let expected = Expr::Word(vec![
            SlotExpr {
                factors: vec![("a".into(), 1)],
            },
            SlotExpr { factors: vec![] },
            SlotExpr {
                factors: vec![("b".into(), 2)],
            },
        ]);
        assert_eq!(ascii, expected);
    }

    #[test]
    fn run_together_names_split_longest_first() {
        let e = parse("ab(x)1", &spec(2)).unwrap();
        assert_eq!(
            e,
            Expr::Word(vec![
                SlotExpr {
                    factors: vec![("a".into(), 1), ("b".into(), 1)]
                },
                SlotExpr { factors: vec![] },
            ])
        );
        // The exponent binds to the last name of the run.
        let e = parse("ab^3(x)1", &spec(2)).unwrap();
        assert_eq!(
            e,
            Expr::Word(vec![
                SlotExpr {
                    factors: vec![("a".into(), 1), ("b".into(), 3)]
                },
                SlotExpr { factors: vec![] },
            ])
        );
    }

    #[test]
    fn longest_declared_prefix_wins() {
        let mut spec = ContextSpec::parse_spec("n=2;field=q;gens=a:1,ab:2,b:1").unwrap();
        let e = parse("ab(x)1", &spec).unwrap();
        assert_eq!(
            e,
            Expr::Word(vec![
                SlotExpr {
                    factors: vec![("ab".into(), 1)]
                },
                SlotExpr { factors: vec![] },
            ])
        );
        // Backtracking still finds a split when the long name dead-ends.
        spec = ContextSpec::parse_spec("n=2;field=q;gens=a:1,ab:2,c:1").unwrap();
        let e = parse("abc error", &spec);
        assert!(e.is_err());
        let e = parse("abc(x)1", &spec).unwrap();
        assert_eq!(
            e,
            Expr::Word(vec![
                SlotExpr {
                    factors: vec![("ab".into(), 1), ("c".into(), 1)]
                },
                SlotExpr { factors: vec![] },
            ])
        );
    }

    #[test]
    fn scalar_literals_parse() {
        assert_eq!(
            parse("42", &spec(2)).unwrap(),
            Expr::ScalarLit {
                numer: "42".into(),
                denom: None
            }
        );
        assert_eq!(
            parse("3/2", &spec(2)).unwrap(),
            Expr::ScalarLit {
                numer: "3".into(),
                denom: Some("2".into())
            }
        );
    }

    #[test]
    fn negation_nests() {
        let e = parse("--2", &spec(2)).unwrap();
        assert_eq!(
            e,
            Expr::Negation(Box::new(Expr::Negation(Box::new(Expr::ScalarLit {
                numer: "2".into(),
                denom: None
            }))))
        );
    }

    #[test]
    fn wrong_slot_count_reports_the_word_start() {
        let err = parse("[a,1]", &spec(3)).unwrap_err();
        assert_eq!((err.line, err.column), (1, 1));
        assert!(err.message.contains("2 slots"), "{}", err.message);
        let err = parse("a(x)1(x)a(x)1", &spec(3)).unwrap_err();
        assert!(err.message.contains("4 slots"), "{}", err.message);
    }

    #[test]
    fn positional_subscripts_are_validated() {
        let err = parse("a_5", &spec(3)).unwrap_err();
        assert_eq!((err.line, err.column), (1, 3));
        assert!(err.message.contains("out of range"));
        let err = parse("a_0", &spec(3)).unwrap_err();
        assert!(err.message.contains("out of range"));
        let err = parse("c_1", &spec(3)).unwrap_err();
        assert!(err.message.contains("unknown generator"));
    }

    #[test]
    fn undeclared_slot_names_are_rejected() {
        let err = parse("[q,1]", &spec(2)).unwrap_err();
        assert!(err.message.contains("unknown generator name"));
    }

    #[test]
    fn non_unit_integers_cannot_fill_slots() {
        let err = parse("2(x)a", &spec(2)).unwrap_err();
        assert!(err.message.contains("only `1`"));
        let err = parse("[a,2]", &spec(2)).unwrap_err();
        assert!(err.message.contains("only `1`"));
    }

    #[test]
    fn bare_monomials_are_not_factors() {
        let err = parse("a", &spec(2)).unwrap_err();
        assert!(
            err.message.contains("expected `_`, `^`, or `(x)`"),
            "{}",
            err.message
        );
    }

    #[test]
    fn eof_errors_point_past_the_input() {
        let err = parse("a_1 +", &spec(2)).unwrap_err();
        assert_eq!((err.line, err.column), (1, 6));
        let err = parse("", &spec(2)).unwrap_err();
        assert!(err.message.contains("expected an expression"));
    }

    #[test]
    fn trailing_input_is_an_error() {
        let err = parse("a_1 a_2", &spec(2)).unwrap_err();
        assert!(err.message.contains("trailing"));
    }

    #[test]
    fn stray_characters_are_lex_errors() {
        let err = parse("a_1 ! a_2", &spec(2)).unwrap_err();
        assert_eq!((err.line, err.column), (1, 5));
        assert!(err.message.contains("unexpected character"));
    }

    #[test]
    fn paren_is_not_tensor_when_content_follows() {
        // (x_1) must read as a parenthesized positional when x is declared.
        let spec = ContextSpec::parse_spec("n=2;field=q;gens=x:1").unwrap();
        let e = parse("(x_1)*(x_1)", &spec).unwrap();
        assert!(matches!(e, Expr::Product(_, _)));
    }
}
