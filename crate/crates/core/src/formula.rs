//! The intuitionistic propositional formula language: AST, parser, and
//! pretty printer.
//!
//! Concrete syntax: identifiers are atoms, `0`/`false` is ⊥, `1`/`true` is ⊤,
//! `~` is negation, `&` conjunction, `|` disjunction, `->` implication.
//! Precedence is `~` > `&` > `|` > `->`, with `->` (and `&`, `|`)
//! right-associative. Negation and ⊤ are sugar: `~p` parses to `p -> 0` and
//! `1` to `0 -> 0`.

use std::fmt;

use thiserror::Error;

use crate::lattice::{HeytingAlgebra, LatticeError};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Atom(String),
    Bot,
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn atom(name: &str) -> Formula {
        Formula::Atom(name.to_string())
    }

    pub fn top() -> Formula {
        Formula::imp(Formula::Bot, Formula::Bot)
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn imp(a: Formula, b: Formula) -> Formula {
        Formula::Imp(Box::new(a), Box::new(b))
    }

    #[allow(clippy::should_implement_trait)] // constructor, not arithmetic
    pub fn neg(a: Formula) -> Formula {
        Formula::imp(a, Formula::Bot)
    }

    /// Atom names occurring in the formula, sorted and deduplicated.
    pub fn atoms(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out.sort();
        out.dedup();
        out
    }

    fn collect_atoms(&self, out: &mut Vec<String>) {
        match self {
            Formula::Atom(name) => out.push(name.clone()),
            Formula::Bot => {}
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }

    /// Interprets the formula inside a Heyting algebra, reading each atom as
    /// the element of the same name.
    pub fn eval_in(&self, algebra: &HeytingAlgebra) -> Result<usize, LatticeError> {
        Ok(match self {
            Formula::Atom(name) => algebra.element_index(name)?,
            Formula::Bot => algebra.bottom(),
            Formula::And(a, b) => algebra.meet(a.eval_in(algebra)?, b.eval_in(algebra)?),
            Formula::Or(a, b) => algebra.join(a.eval_in(algebra)?, b.eval_in(algebra)?),
            Formula::Imp(a, b) => algebra.imp(a.eval_in(algebra)?, b.eval_in(algebra)?),
        })
    }

    pub fn parse(text: &str) -> Result<Formula, ParseError> {
        Parser::new(text).parse()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("syntax error at position {position}: expected {expected}")]
pub struct ParseError {
    pub position: usize,
    pub expected: String,
}

// Precedence levels used by both the parser and the printer.
const PREC_IMP: u8 = 1;
const PREC_OR: u8 = 2;
const PREC_AND: u8 = 3;
const PREC_UNARY: u8 = 4;

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_prec(self, PREC_IMP, f)
    }
}

fn write_prec(formula: &Formula, min_prec: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let prec = print_prec(formula);
    if prec < min_prec {
        write!(f, "(")?;
        write_prec(formula, PREC_IMP, f)?;
        return write!(f, ")");
    }
    match formula {
        Formula::Atom(name) => write!(f, "{name}"),
        Formula::Bot => write!(f, "0"),
        Formula::And(a, b) => {
            write_prec(a, PREC_AND + 1, f)?;
            write!(f, " & ")?;
            write_prec(b, PREC_AND, f)
        }
        Formula::Or(a, b) => {
            write_prec(a, PREC_OR + 1, f)?;
            write!(f, " | ")?;
            write_prec(b, PREC_OR, f)
        }
        Formula::Imp(a, b) => match (&**a, &**b) {
            (Formula::Bot, Formula::Bot) => write!(f, "1"),
            (_, Formula::Bot) => {
                write!(f, "~")?;
                write_prec(a, PREC_UNARY, f)
            }
            _ => {
                write_prec(a, PREC_IMP + 1, f)?;
                write!(f, " -> ")?;
                write_prec(b, PREC_IMP, f)
            }
        },
    }
}

/// The precedence at which a formula prints, taking the sugared forms into
/// account: `~φ` and `1` print as unary-level tokens.
fn print_prec(formula: &Formula) -> u8 {
    match formula {
        Formula::Atom(_) | Formula::Bot => PREC_UNARY,
        Formula::And(..) => PREC_AND,
        Formula::Or(..) => PREC_OR,
        Formula::Imp(_, b) if matches!(**b, Formula::Bot) => PREC_UNARY,
        Formula::Imp(..) => PREC_IMP,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Ident(String),
    Zero,
    One,
    Tilde,
    Amp,
    Pipe,
    Arrow,
    LParen,
    RParen,
    End,
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn new(text: &str) -> Parser {
        let mut tokens = Vec::new();
        let bytes = text.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i] as char;
            match c {
                ' ' | '\t' | '\n' | '\r' => i += 1,
                '(' => {
                    tokens.push((Token::LParen, i));
                    i += 1;
                }
                ')' => {
                    tokens.push((Token::RParen, i));
                    i += 1;
                }
                '~' => {
                    tokens.push((Token::Tilde, i));
                    i += 1;
                }
                '&' => {
                    tokens.push((Token::Amp, i));
                    i += 1;
                }
                '|' => {
                    tokens.push((Token::Pipe, i));
                    i += 1;
                }
                '-' => {
                    if bytes.get(i + 1) == Some(&b'>') {
                        tokens.push((Token::Arrow, i));
                        i += 2;
                    } else {
                        tokens.push((Token::End, i)); // force an error at i
                        break;
                    }
                }
                _ if c.is_ascii_digit() => {
                    let start = i;
                    while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                        i += 1;
                    }
                    match &text[start..i] {
                        "0" => tokens.push((Token::Zero, start)),
                        "1" => tokens.push((Token::One, start)),
                        _ => {
                            tokens.push((Token::End, start));
                            break;
                        }
                    }
                }
                _ if c.is_ascii_alphabetic() || c == '_' => {
                    let start = i;
                    while i < bytes.len()
                        && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                    {
                        i += 1;
                    }
                    match &text[start..i] {
                        "false" => tokens.push((Token::Zero, start)),
                        "true" => tokens.push((Token::One, start)),
                        ident => tokens.push((Token::Ident(ident.to_string()), start)),
                    }
                }
                _ => {
                    tokens.push((Token::End, i));
                    break;
                }
            }
        }
        let end = text.len();
        Parser {
            tokens,
            pos: 0,
            end,
        }
    }

    fn peek(&self) -> (&Token, usize) {
        self.tokens
            .get(self.pos)
            .map(|(t, p)| (t, *p))
            .unwrap_or((&Token::End, self.end))
    }

    fn bump(&mut self) -> (Token, usize) {
        let out = self
            .tokens
            .get(self.pos)
            .cloned()
            .unwrap_or((Token::End, self.end));
        self.pos += 1;
        out
    }

    fn parse(mut self) -> Result<Formula, ParseError> {
        let formula = self.parse_imp()?;
        match self.peek() {
            (Token::End, position) if self.pos >= self.tokens.len() => {
                let _ = position;
                Ok(formula)
            }
            (_, position) => Err(ParseError {
                position,
                expected: "end of input".into(),
            }),
        }
    }

    fn parse_imp(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.parse_or()?;
        if matches!(self.peek().0, Token::Arrow) {
            self.bump();
            let rhs = self.parse_imp()?;
            return Ok(Formula::imp(lhs, rhs));
        }
        Ok(lhs)
    }

    fn parse_or(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.parse_and()?;
        if matches!(self.peek().0, Token::Pipe) {
            self.bump();
            let rhs = self.parse_or()?;
            return Ok(Formula::or(lhs, rhs));
        }
        Ok(lhs)
    }

    fn parse_and(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.parse_unary()?;
        if matches!(self.peek().0, Token::Amp) {
            self.bump();
            let rhs = self.parse_and()?;
            return Ok(Formula::and(lhs, rhs));
        }
        Ok(lhs)
    }

    fn parse_unary(&mut self) -> Result<Formula, ParseError> {
        match self.bump() {
            (Token::Tilde, _) => Ok(Formula::neg(self.parse_unary()?)),
            (Token::Zero, _) => Ok(Formula::Bot),
            (Token::One, _) => Ok(Formula::top()),
            (Token::Ident(name), _) => Ok(Formula::Atom(name)),
            (Token::LParen, _) => {
                let inner = self.parse_imp()?;
                match self.bump() {
                    (Token::RParen, _) => Ok(inner),
                    (_, position) => Err(ParseError {
                        position,
                        expected: "`)`".into(),
                    }),
                }
            }
            (_, position) => Err(ParseError {
                position,
                expected: "an atom, `0`, `1`, `~`, or `(`".into(),
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{build_lattice, residuate, LatticeSpec};

    fn parse(text: &str) -> Formula {
        Formula::parse(text).unwrap()
    }

    #[test]
    fn implication_is_right_associative() {
        assert_eq!(
            parse("a -> b -> a"),
            Formula::imp(
                Formula::atom("a"),
                Formula::imp(Formula::atom("b"), Formula::atom("a"))
            )
        );
    }

    #[test]
    fn negation_desugars_to_implication() {
        assert_eq!(
            parse("a | ~a"),
            Formula::or(
                Formula::atom("a"),
                Formula::imp(Formula::atom("a"), Formula::Bot)
            )
        );
    }

    #[test]
    fn precedence_table() {
        assert_eq!(
            parse("~a & b | c"),
            Formula::or(
                Formula::and(Formula::neg(Formula::atom("a")), Formula::atom("b")),
                Formula::atom("c")
            )
        );
        assert_eq!(
            parse("a & b -> c"),
            Formula::imp(
                Formula::and(Formula::atom("a"), Formula::atom("b")),
                Formula::atom("c")
            )
        );
    }

    #[test]
    fn constants_and_keywords() {
        assert_eq!(parse("0"), Formula::Bot);
        assert_eq!(parse("false"), Formula::Bot);
        assert_eq!(parse("1"), Formula::top());
        assert_eq!(parse("true"), Formula::top());
        assert_eq!(parse("~0"), Formula::top());
    }

    #[test]
    fn parentheses_override_precedence() {
        assert_eq!(
            parse("a & (b | c)"),
            Formula::and(
                Formula::atom("a"),
                Formula::or(Formula::atom("b"), Formula::atom("c"))
            )
        );
        assert_eq!(parse("((a))"), Formula::atom("a"));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = Formula::parse("a &").unwrap_err();
        assert_eq!(err.position, 3);
        let err = Formula::parse("(a | b").unwrap_err();
        assert_eq!(err.position, 6);
        assert_eq!(err.expected, "`)`");
        let err = Formula::parse("a @ b").unwrap_err();
        assert_eq!(err.position, 2);
        let err = Formula::parse("a b").unwrap_err();
        assert_eq!(err.position, 2);
        assert_eq!(err.expected, "end of input");
        let err = Formula::parse("23").unwrap_err();
        assert_eq!(err.position, 0);
    }

    #[test]
    fn printing_uses_minimal_parentheses() {
        assert_eq!(parse("a -> b -> a").to_string(), "a -> b -> a");
        assert_eq!(parse("(a -> b) -> a").to_string(), "(a -> b) -> a");
        assert_eq!(parse("~(a & b)").to_string(), "~(a & b)");
        assert_eq!(parse("a | ~a").to_string(), "a | ~a");
        assert_eq!(parse("(a | b) & c").to_string(), "(a | b) & c");
        assert_eq!(parse("1").to_string(), "1");
        assert_eq!(parse("~~p").to_string(), "~~p");
    }

    #[test]
    fn parse_print_round_trip_on_frozen_cases() {
        for text in [
            "a",
            "0",
            "1",
            "~a",
            "~~p -> p",
            "((a -> b) -> a) -> a",
            "a & b & c",
            "a | b | c",
            "(a -> (b -> c)) -> ((a -> b) -> (a -> c))",
            "~(a | b) -> ~a & ~b",
        ] {
            let ast = parse(text);
            assert_eq!(parse(&ast.to_string()), ast, "round trip through `{text}`");
        }
    }

    #[test]
    fn atoms_are_sorted_and_deduplicated() {
        assert_eq!(parse("b & a | b -> c").atoms(), vec!["a", "b", "c"]);
        assert_eq!(parse("0 -> 1").atoms(), Vec::<String>::new());
    }

    #[test]
    fn evaluation_in_the_three_chain() {
        let spec = LatticeSpec::new(
            vec!["0".into(), "a".into(), "1".into()],
            vec![("0".into(), "a".into()), ("a".into(), "1".into())],
            true,
        )
        .unwrap();
        let alg = residuate(&build_lattice(&spec).unwrap()).unwrap();
        // a ∨ ¬a = a in the three-chain.
        assert_eq!(parse("a | ~a").eval_in(&alg).unwrap(), 1);
        assert_eq!(parse("~~a").eval_in(&alg).unwrap(), 2);
        assert_eq!(parse("1").eval_in(&alg).unwrap(), 2);
        assert!(matches!(
            parse("q").eval_in(&alg),
            Err(LatticeError::UnknownElement(_))
        ));
    }
}
