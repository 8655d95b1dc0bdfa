//! Recursive-descent parser for the ASCII formula grammar.
//!
//! ```text
//! formula := chain
//! chain   := disj ( OP disj )*        OP one of -> <-> <| ; right-assoc, no mixing
//! disj    := conj ( '|' conj )*       left-assoc
//! conj    := unary ( '&' unary )*     left-assoc
//! unary   := '~' unary | atom
//! atom    := X<digits> | 0 | bot | 1 | top | '(' formula ')'
//! ```

use crate::error::{Error, Result};
use crate::formula::Formula;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Tok {
    Var(usize),
    Bot,
    Top,
    Not,
    And,
    Or,
    Implies,
    Iff,
    Lhd,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(self) -> &'static str {
        match self {
            Tok::Var(_) => "variable",
            Tok::Bot | Tok::Top => "constant",
            Tok::Not => "`~`",
            Tok::And => "`&`",
            Tok::Or => "`|`",
            Tok::Implies => "`->`",
            Tok::Iff => "`<->`",
            Tok::Lhd => "`<|`",
            Tok::LParen => "`(`",
            Tok::RParen => "`)`",
            Tok::End => "end of input",
        }
    }
}

fn syntax(pos: usize, msg: impl Into<String>) -> Error {
    Error::Syntax { pos, msg: msg.into() }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'~' => Tok::Not,
            b'&' => Tok::And,
            b'|' => Tok::Or,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0' => Tok::Bot,
            b'1' => Tok::Top,
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                i += 1;
                Tok::Implies
            }
            b'<' if text[i..].starts_with("<->") => {
                i += 2;
                Tok::Iff
            }
            b'<' if bytes.get(i + 1) == Some(&b'|') => {
                i += 1;
                Tok::Lhd
            }
            b'X' => {
                let digits_end = text[i + 1..]
                    .find(|ch: char| !ch.is_ascii_digit())
                    .map_or(bytes.len(), |k| i + 1 + k);
                let digits = &text[i + 1..digits_end];
                if digits.is_empty() {
                    return Err(syntax(start, "expected digits after `X`"));
                }
                let index: usize = digits
                    .parse()
                    .map_err(|_| syntax(start, "variable index too large"))?;
                if index == 0 {
                    return Err(Error::ZeroVariable { pos: start });
                }
                i = digits_end - 1;
                Tok::Var(index)
            }
            b'b' if text[i..].starts_with("bot") => {
                i += 2;
                Tok::Bot
            }
            b't' if text[i..].starts_with("top") => {
                i += 2;
                Tok::Top
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(syntax(start, format!("unexpected character {ch:?}")));
            }
        };
        i += 1;
        if matches!(tok, Tok::Bot | Tok::Top | Tok::Var(_))
            && bytes.get(i).is_some_and(|b| b.is_ascii_alphanumeric())
        {
            return Err(syntax(i, "unexpected character after atom"));
        }
        out.push((tok, start));
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> (Tok, usize) {
        self.toks[self.at]
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.at];
        if t.0 != Tok::End {
            self.at += 1;
        }
        t
    }

    fn chain(&mut self) -> Result<Formula> {
        let first = self.disj()?;
        let (op, _) = self.peek();
        if !matches!(op, Tok::Implies | Tok::Iff | Tok::Lhd) {
            return Ok(first);
        }
        let mut operands = vec![first];
        loop {
            let (tok, pos) = self.peek();
            match tok {
                Tok::Implies | Tok::Iff | Tok::Lhd if tok == op => {
                    self.bump();
                    operands.push(self.disj()?);
                }
                Tok::Implies | Tok::Iff | Tok::Lhd => {
                    return Err(syntax(
                        pos,
                        format!(
                            "{} cannot follow {} without parentheses",
                            tok.describe(),
                            op.describe()
                        ),
                    ));
                }
                _ => break,
            }
        }
        let combine = |a: Formula, b: Formula| match op {
            Tok::Implies => a.implies(b),
            Tok::Iff => a.iff(b),
            _ => a.lhd(b),
        };
        let mut acc = operands.pop().expect("at least two operands");
        while let Some(left) = operands.pop() {
            acc = combine(left, acc);
        }
        Ok(acc)
    }

    fn disj(&mut self) -> Result<Formula> {
        let mut acc = self.conj()?;
        while self.peek().0 == Tok::Or {
            self.bump();
            acc = acc.or(self.conj()?);
        }
        Ok(acc)
    }

    fn conj(&mut self) -> Result<Formula> {
        let mut acc = self.unary()?;
        while self.peek().0 == Tok::And {
            self.bump();
            acc = acc.and(self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Formula> {
        if self.peek().0 == Tok::Not {
            self.bump();
            return Ok(self.unary()?.not());
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Formula> {
        match self.bump() {
            (Tok::Var(i), _) => Ok(Formula::Var(i)),
            (Tok::Bot, _) => Ok(Formula::Bot),
            (Tok::Top, _) => Ok(Formula::Top),
            (Tok::LParen, _) => {
                let inner = self.chain()?;
                match self.bump() {
                    (Tok::RParen, _) => Ok(inner),
                    (t, pos) => Err(syntax(pos, format!("expected `)`, found {}", t.describe()))),
                }
            }
            (t, pos) => Err(syntax(pos, format!("expected a formula, found {}", t.describe()))),
        }
    }
}

/// Parses a formula such as `~(X1 & X3) -> X2 <| 1`.
pub fn parse_formula(text: &str) -> Result<Formula> {
    let mut p = Parser { toks: lex(text)?, at: 0 };
    let f = p.chain()?;
    match p.peek() {
        (Tok::End, _) => Ok(f),
        (t, pos) => Err(syntax(pos, format!("unexpected {}", t.describe()))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x(i: usize) -> Formula {
        Formula::var(i)
    }

    #[test]
    fn parses_negated_conjunction() {
        assert_eq!(parse_formula("~(X1 & X3)").unwrap(), x(1).and(x(3)).not());
    }

    #[test]
    fn parses_lhd_token() {
        assert_eq!(parse_formula("X1 <| X2").unwrap(), x(1).lhd(x(2)));
    }

    #[test]
    fn implication_is_right_associative() {
        assert_eq!(
            parse_formula("X1 -> X2 -> X3").unwrap(),
            x(1).implies(x(2).implies(x(3)))
        );
    }

    #[test]
    fn precedence_and_constants() {
        assert_eq!(
            parse_formula("~X1 & X2 | bot -> top").unwrap(),
            x(1).not().and(x(2)).or(Formula::Bot).implies(Formula::Top)
        );
        assert_eq!(parse_formula("0 | 1").unwrap(), Formula::Bot.or(Formula::Top));
        assert_eq!(parse_formula("X12").unwrap(), x(12));
    }

    #[test]
    fn mixing_chain_operators_needs_parentheses() {
        let err = parse_formula("X1 -> X2 <-> X3").unwrap_err();
        assert!(matches!(err, Error::Syntax { pos: 9, .. }), "{err}");
        assert!(parse_formula("(X1 -> X2) <-> X3").is_ok());
    }

    #[test]
    fn rejects_bad_input_with_positions() {
        assert!(matches!(parse_formula("X0 & X1"), Err(Error::ZeroVariable { pos: 0 })));
        assert!(matches!(parse_formula("X1 & "), Err(Error::Syntax { pos: 5, .. })));
        assert!(matches!(parse_formula("(X1"), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!(parse_formula("X1 X2"), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!(parse_formula("X1 $ X2"), Err(Error::Syntax { pos: 3, .. })));
        assert!(parse_formula("X").is_err());
        assert!(parse_formula("botX1").is_err());
        assert!(parse_formula("").is_err());
    }

    pub(crate) fn arb_formula(vars: usize) -> impl Strategy<Value = Formula> {
        let leaf = prop_oneof![
            (1..=vars).prop_map(Formula::Var),
            Just(Formula::Bot),
            Just(Formula::Top),
        ];
        leaf.prop_recursive(5, 48, 2, |inner| {
            prop_oneof![
                inner.clone().prop_map(Formula::not),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| a.and(b)),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| a.or(b)),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| a.implies(b)),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| a.iff(b)),
                (inner.clone(), inner).prop_map(|(a, b)| a.lhd(b)),
            ]
        })
    }

    proptest! {
        #[test]
        fn format_then_parse_is_identity(f in arb_formula(4)) {
            let text = f.to_string();
            prop_assert_eq!(parse_formula(&text).unwrap(), f);
        }

        #[test]
        fn expansion_is_idempotent(f in arb_formula(3)) {
            let e = f.expand();
            prop_assert_eq!(e.expand(), e.clone());
            prop_assert_eq!(parse_formula(&e.to_string()).unwrap(), e);
        }
    }
}
