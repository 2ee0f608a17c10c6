//! Input documents: expression text or a JSON object, and printers for both.
//!
//! Text input is a sum of terms such as `x0^2*u1*u2 + x1^2*u1^2`. Each term
//! holds exactly one `x` variable raised to the common power `d1`; the `x`
//! indices must be `0..=n` in some order, and `m` is the largest `u` index.

use std::collections::BTreeMap;

use nagata_core::{InputError, Monomial, NagataInput, PairingAction};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const SCHEMA: &str = "nagata-cw/1";

/// Upper limit on variable indices, for both input forms.
pub const MAX_VARIABLES: usize = 64;

/// Upper limit on exponents, including `d1`.
pub const MAX_EXPONENT: u32 = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("column {column}: expected {}, found {found}", expected.join(" or "))]
    Syntax {
        column: usize,
        expected: Vec<&'static str>,
        found: String,
    },
    #[error("column {column}: {message}")]
    Term { column: usize, message: String },
    #[error("invalid JSON input: {0}")]
    Json(String),
    #[error("unsupported schema_version {0:?}, expected \"{SCHEMA}\"")]
    Schema(String),
    #[error("{0} exceeds the limit of {MAX_VARIABLES} variables")]
    TooManyVariables(String),
    #[error(transparent)]
    Input(#[from] InputError),
}

impl ParseError {
    pub fn column(&self) -> Option<usize> {
        match self {
            ParseError::Syntax { column, .. } | ParseError::Term { column, .. } => Some(*column),
            _ => None,
        }
    }
}

/// The JSON input object. Output documents echo the input in this shape.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema_version: Option<String>,
    pub d1: u32,
    pub m: usize,
    pub g: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<PairingAction>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expression: Option<String>,
}

impl InputJson {
    pub fn of(input: &NagataInput) -> Self {
        Self {
            schema_version: None,
            d1: input.d1(),
            m: input.m(),
            g: input.facets().iter().map(|g| g.exps().to_vec()).collect(),
            action: Some(input.action()),
            expression: Some(to_expression(input)),
        }
    }
}

/// Parse either form. A document whose first non-blank character is `{` is
/// read as JSON. `action` overrides the document; the default is contraction.
pub fn parse(text: &str, action: Option<PairingAction>) -> Result<NagataInput, ParseError> {
    if text.trim_start().starts_with('{') {
        parse_json(text, action)
    } else {
        parse_expression(text, action.unwrap_or_default())
    }
}

pub fn parse_json(text: &str, action: Option<PairingAction>) -> Result<NagataInput, ParseError> {
    let doc: InputJson = serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
    if let Some(v) = &doc.schema_version {
        if v != SCHEMA {
            return Err(ParseError::Schema(v.clone()));
        }
    }
    if doc.m > MAX_VARIABLES {
        return Err(ParseError::TooManyVariables(format!("m = {}", doc.m)));
    }
    if doc.g.len() > MAX_VARIABLES {
        return Err(ParseError::TooManyVariables(format!(
            "{} terms",
            doc.g.len()
        )));
    }
    if doc.d1 > MAX_EXPONENT || doc.g.iter().flatten().any(|&e| e > MAX_EXPONENT) {
        return Err(ParseError::Json(format!(
            "exponents must not exceed {MAX_EXPONENT}"
        )));
    }
    let facets = doc.g.into_iter().map(Monomial::new).collect();
    let action = action.or(doc.action).unwrap_or_default();
    Ok(NagataInput::new(doc.d1, doc.m, facets, action)?)
}

pub fn to_json(input: &NagataInput) -> String {
    let doc = InputJson {
        schema_version: Some(SCHEMA.to_string()),
        ..InputJson::of(input)
    };
    serde_json::to_string(&doc).expect("plain data")
}

/// `x0^d1*u.. + x1^d1*u.. + ...`, exponent 1 omitted.
pub fn to_expression(input: &NagataInput) -> String {
    let x = |r: usize| match input.d1() {
        1 => format!("x{r}"),
        d => format!("x{r}^{d}"),
    };
    input
        .facets()
        .iter()
        .enumerate()
        .map(|(r, g)| format!("{}*{}", x(r), g.render("u", 1)))
        .collect::<Vec<_>>()
        .join(" + ")
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Var { x: bool, index: usize },
    Int(u32),
    Caret,
    Star,
    Plus,
    End,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Var { x: true, index } => format!("x{index}"),
            Token::Var { x: false, index } => format!("u{index}"),
            Token::Int(v) => v.to_string(),
            Token::Caret => "'^'".into(),
            Token::Star => "'*'".into(),
            Token::Plus => "'+'".into(),
            Token::End => "end of input".into(),
        }
    }
}

/// Tokens with 1-based columns.
fn lex(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let column = k + 1;
        if c.is_whitespace() {
            k += 1;
            continue;
        }
        let single = match c {
            '^' => Some(Token::Caret),
            '*' => Some(Token::Star),
            '+' => Some(Token::Plus),
            _ => None,
        };
        if let Some(t) = single {
            out.push((column, t));
            k += 1;
            continue;
        }
        let start = k;
        let is_var = c == 'x' || c == 'u';
        if is_var {
            k += 1;
        }
        let digits_from = k;
        while k < chars.len() && chars[k].is_ascii_digit() {
            k += 1;
        }
        let digits: String = chars[digits_from..k].iter().collect();
        if digits.is_empty() {
            let found = if is_var {
                chars
                    .get(k)
                    .map_or("end of input".to_string(), |c| format!("'{c}'"))
            } else {
                format!("'{c}'")
            };
            let column = if is_var { k + 1 } else { column };
            let expected = if is_var {
                vec!["a variable index"]
            } else {
                vec!["x<i>", "u<j>", "'^'", "'*'", "'+'"]
            };
            return Err(ParseError::Syntax {
                column,
                expected,
                found,
            });
        }
        let token = if is_var {
            let index: usize = digits.parse().unwrap_or(usize::MAX);
            if index > MAX_VARIABLES {
                let name: String = chars[start..k].iter().collect();
                return Err(ParseError::TooManyVariables(name));
            }
            Token::Var { x: c == 'x', index }
        } else {
            match digits.parse::<u32>() {
                Ok(v) if v <= MAX_EXPONENT => Token::Int(v),
                _ => {
                    return Err(ParseError::Term {
                        column,
                        message: format!("exponent {digits} exceeds {MAX_EXPONENT}"),
                    })
                }
            }
        };
        out.push((start + 1, token));
    }
    out.push((chars.len() + 1, Token::End));
    Ok(out)
}

#[derive(Debug, Default)]
struct Term {
    column: usize,
    x: BTreeMap<usize, u32>,
    u: BTreeMap<usize, u32>,
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &(usize, Token) {
        &self.tokens[self.pos]
    }

    fn bump(&mut self) -> (usize, Token) {
        let t = self.tokens[self.pos].clone();
        if t.1 != Token::End {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: Vec<&'static str>) -> ParseError {
        let (column, token) = self.peek();
        ParseError::Syntax {
            column: *column,
            expected,
            found: token.describe(),
        }
    }

    fn terms(&mut self) -> Result<Vec<Term>, ParseError> {
        let mut out = vec![self.term()?];
        loop {
            match self.peek().1 {
                Token::Plus => {
                    self.bump();
                    out.push(self.term()?);
                }
                Token::End => return Ok(out),
                _ => return Err(self.error(vec!["'*'", "'+'", "end of input"])),
            }
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let mut term = Term {
            column: self.peek().0,
            ..Term::default()
        };
        self.factor(&mut term)?;
        while self.peek().1 == Token::Star {
            self.bump();
            self.factor(&mut term)?;
        }
        Ok(term)
    }

    fn factor(&mut self, term: &mut Term) -> Result<(), ParseError> {
        let (column, token) = self.peek().clone();
        let Token::Var { x, index } = token else {
            return Err(self.error(vec!["x<i>", "u<j>"]));
        };
        self.bump();
        let mut exp = 1;
        if self.peek().1 == Token::Caret {
            self.bump();
            let (c, t) = self.peek().clone();
            let Token::Int(v) = t else {
                return Err(self.error(vec!["an exponent"]));
            };
            if v == 0 {
                return Err(ParseError::Term {
                    column: c,
                    message: "exponents must be positive".into(),
                });
            }
            self.bump();
            exp = v;
        }
        if !x && index == 0 {
            return Err(ParseError::Term {
                column,
                message: "u-variables are numbered from u1".into(),
            });
        }
        let slot = if x { &mut term.x } else { &mut term.u };
        *slot.entry(index).or_insert(0) += exp;
        Ok(())
    }
}

pub fn parse_expression(text: &str, action: PairingAction) -> Result<NagataInput, ParseError> {
    let mut parser = Parser {
        tokens: lex(text)?,
        pos: 0,
    };
    let terms = parser.terms()?;

    let mut d1 = None;
    let mut by_index: BTreeMap<usize, &Term> = BTreeMap::new();
    for term in &terms {
        let (&index, &power) = match term.x.len() {
            1 => term.x.iter().next().unwrap(),
            0 => {
                return Err(ParseError::Term {
                    column: term.column,
                    message: "term has no x-variable".into(),
                })
            }
            _ => {
                return Err(ParseError::Term {
                    column: term.column,
                    message: "term has more than one x-variable".into(),
                })
            }
        };
        match d1 {
            None => d1 = Some((power, index)),
            Some((d, first)) if d != power => {
                return Err(ParseError::Term {
                    column: term.column,
                    message: format!(
                        "mixed d1: x{index} has power {power} but x{first} has power {d}"
                    ),
                })
            }
            _ => {}
        }
        if by_index.insert(index, term).is_some() {
            return Err(ParseError::Term {
                column: term.column,
                message: format!("x{index} appears in more than one term"),
            });
        }
    }
    if let Some(missing) = (0..by_index.len()).find(|k| !by_index.contains_key(k)) {
        return Err(ParseError::Term {
            column: terms.last().map_or(1, |t| t.column),
            message: format!(
                "x-indices must be 0..={}; x{missing} is missing",
                by_index.len() - 1
            ),
        });
    }
    let m = terms
        .iter()
        .flat_map(|t| t.u.keys().copied())
        .max()
        .unwrap_or(0);
    let facets = by_index
        .values()
        .map(|t| {
            let mut e = vec![0; m];
            for (&j, &v) in &t.u {
                e[j - 1] = v;
            }
            Monomial::new(e)
        })
        .collect();
    let (d1, _) = d1.expect("at least one term");
    Ok(NagataInput::new(d1, m, facets, action)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use nagata_core::fixtures;

    #[test]
    fn edges_and_loop_text() {
        let input = parse("x0^2*u1*u2 + x1^2*u1^2 + x2^2*u2*u3", None).unwrap();
        assert_eq!(input, fixtures::edges_and_loop(2));
        assert_eq!(to_expression(&input), "x0^2*u1*u2 + x1^2*u1^2 + x2^2*u2*u3");
    }

    #[test]
    fn order_of_terms_and_factors_is_free() {
        let a = parse("u2^1*x1 *u1 + x0*u1^2", None).unwrap();
        let b = parse("x0*u1^2 + x1*u1*u2", None).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn mixed_d1() {
        let err = parse("x0^2*u1*u2 + x1^3*u1^2", None).unwrap_err();
        assert_eq!(err.column(), Some(14));
        assert!(err.to_string().contains("mixed d1"), "{err}");
    }

    #[test]
    fn syntax_positions() {
        let err = parse("x0^2*u1 u2", None).unwrap_err();
        assert_eq!(
            err,
            ParseError::Syntax {
                column: 9,
                expected: vec!["'*'", "'+'", "end of input"],
                found: "u2".into()
            }
        );
        let err = parse("x0^*u1", None).unwrap_err();
        assert_eq!(err.column(), Some(4));
        assert!(err.to_string().contains("expected an exponent"));
        assert_eq!(parse("x0^2*u1*u2 + ", None).unwrap_err().column(), Some(14));
        assert_eq!(parse("x0*y1", None).unwrap_err().column(), Some(4));
        assert_eq!(parse("x0*u", None).unwrap_err().column(), Some(5));
    }

    #[test]
    fn term_errors() {
        for (text, needle) in [
            ("u1*u2 + x0*u1^2", "no x-variable"),
            ("x0*x1*u1*u2", "more than one"),
            ("x0*u1*u2 + x0*u2^2", "more than one term"),
            ("x0*u1*u2 + x2*u2^2", "x1 is missing"),
            ("x0*u0*u2", "numbered from u1"),
            ("x0*u1^0*u2", "positive"),
        ] {
            let err = parse(text, None).unwrap_err();
            assert!(err.to_string().contains(needle), "{text}: {err}");
        }
        assert!(matches!(
            parse("x0*u70^2", None),
            Err(ParseError::TooManyVariables(_))
        ));
        assert!(parse("x0*u1^99999999999", None)
            .unwrap_err()
            .to_string()
            .contains("exceeds"));
        assert!(matches!(
            parse(r#"{"d1":5000,"m":2,"g":[[1,1]]}"#, None),
            Err(ParseError::Json(_))
        ));
    }

    #[test]
    fn semantic_errors_come_from_validation() {
        assert!(matches!(
            parse("x0*u1*u2 + x1*u1*u2", None),
            Err(ParseError::Input(InputError::DuplicateFacet { .. }))
        ));
        assert!(matches!(
            parse("x0*u1 + x1*u2", None),
            Err(ParseError::Input(InputError::UDegreeTooSmall { .. }))
        ));
        assert!(matches!(
            parse("x0*u1*u2 + x1*u1^3", None),
            Err(ParseError::Input(InputError::MixedUDegree { .. }))
        ));
    }

    #[test]
    fn json_documents() {
        let text = r#"{"schema_version":"nagata-cw/1","d1":1,"m":6,
            "g":[[1,1,1,0,0,0],[1,1,0,1,0,0],[1,0,0,1,1,0],[1,0,1,0,1,0],
                 [0,1,1,0,0,1],[0,1,0,1,0,1],[0,0,0,1,1,1],[0,0,1,0,1,1]]}"#;
        assert_eq!(parse(text, None).unwrap(), fixtures::octahedron(1));
        let diff = parse(
            r#"{"d1":2,"m":2,"g":[[2,0],[1,1]],"action":"differentiation"}"#,
            None,
        )
        .unwrap();
        assert_eq!(diff.action(), PairingAction::Differentiation);
        let forced = parse(
            r#"{"d1":2,"m":2,"g":[[2,0],[1,1]],"action":"differentiation"}"#,
            Some(PairingAction::Contraction),
        )
        .unwrap();
        assert_eq!(forced.action(), PairingAction::Contraction);
        assert!(matches!(
            parse(
                r#"{"schema_version":"other","d1":1,"m":2,"g":[[1,1]]}"#,
                None
            ),
            Err(ParseError::Schema(_))
        ));
        assert!(matches!(
            parse(r#"{"d1":1,"m":2}"#, None),
            Err(ParseError::Json(_))
        ));
        assert!(matches!(
            parse(r#"{"d1":1,"m":2,"g":[[1,1]],"extra":0}"#, None),
            Err(ParseError::Json(_))
        ));
    }

    #[test]
    fn printers_round_trip() {
        for input in [
            fixtures::octahedron(3),
            fixtures::edges_and_loop(1),
            fixtures::binary_cubics(),
        ] {
            assert_eq!(parse(&to_json(&input), None).unwrap(), input);
            assert_eq!(parse(&to_expression(&input), None).unwrap(), input);
        }
    }
}
