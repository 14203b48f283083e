//! Loading extra models from a plain-text registry.
//!
//! One record per model. A record starts with `model <key>` and runs until
//! the next `model` line or the end of the file. Blank lines and text after
//! `#` are ignored. Inside a record:
//!
//! ```text
//! model rr
//! topic principal
//! summary Rogers-Ramanujan
//! var x even 2
//! rel x^2
//! extra x(-2) * x(-1)        # optional extra generators, in mode notation
//! character sl2p:1           # optional formula key, see formulas::FORMULA_KEYS
//! expect iso                 # iso | mismatch | hs_only | unstated
//! maxdeg2 20
//! ```
//!
//! Variables must come before the relations that use them. Polynomials use
//! the grammar of [`parse_polynomial`]: terms like `3/2 * x1(-1)^2 * g1(-3/2)`.

use super::{Expectation, Model, ModelError};
use crate::superring::{parse_polynomial, Parity, RingSpec, VariableSpec};

struct Draft {
    key: String,
    line: usize,
    topic: String,
    summary: String,
    vars: Vec<VariableSpec>,
    rels: Vec<(usize, String)>,
    extras: Vec<(usize, String)>,
    character: Option<String>,
    expected: Option<Expectation>,
    maxdeg2: Option<u32>,
}

impl Draft {
    fn new(key: &str, line: usize) -> Self {
        Draft {
            key: key.to_string(),
            line,
            topic: "custom".into(),
            summary: String::new(),
            vars: Vec::new(),
            rels: Vec::new(),
            extras: Vec::new(),
            character: None,
            expected: None,
            maxdeg2: None,
        }
    }

    fn finish(self) -> Result<Model, ModelError> {
        let parse = |(line, src): &(usize, String)| {
            parse_polynomial(&self.vars, src).map_err(|e| ModelError::Registry { line: *line, message: e.to_string() })
        };
        let relations = self.rels.iter().map(parse).collect::<Result<Vec<_>, _>>()?;
        let extras = self.extras.iter().map(parse).collect::<Result<Vec<_>, _>>()?;
        let spec = RingSpec::new(self.vars, relations).with_extras(extras);
        spec.validate().map_err(|e| ModelError::Registry { line: self.line, message: e.to_string() })?;
        let expected = self.expected.unwrap_or(if self.character.is_some() {
            Expectation::Unstated
        } else {
            Expectation::HsOnly
        });
        Ok(Model {
            key: self.key,
            topic: self.topic,
            summary: self.summary,
            spec,
            character: self.character,
            expected,
            default_maxdeg2: self.maxdeg2.unwrap_or(20),
            spanning: None,
        })
    }
}

/// Parses a registry file's contents.
pub fn parse_registry(src: &str) -> Result<Vec<Model>, ModelError> {
    let mut models = Vec::new();
    let mut cur: Option<Draft> = None;
    for (idx, raw) in src.lines().enumerate() {
        let line = idx + 1;
        let text = raw.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            continue;
        }
        let err = |message: &str| ModelError::Registry { line, message: message.to_string() };
        let (word, rest) = text.split_once(char::is_whitespace).unwrap_or((text, ""));
        let rest = rest.trim();
        if word == "model" {
            if rest.is_empty() || rest.contains(char::is_whitespace) {
                return Err(err("model needs a single key"));
            }
            if let Some(d) = cur.take() {
                models.push(d.finish()?);
            }
            cur = Some(Draft::new(rest, line));
            continue;
        }
        let d = cur.as_mut().ok_or_else(|| err("directive before the first `model` line"))?;
        match word {
            "topic" => d.topic = rest.to_string(),
            "summary" => d.summary = rest.to_string(),
            "var" => {
                let f: Vec<&str> = rest.split_whitespace().collect();
                let [name, parity, w] = f[..] else { return Err(err("expected `var <name> <even|odd> <weight2>`")) };
                let parity = match parity {
                    "even" => Parity::Even,
                    "odd" => Parity::Odd,
                    _ => return Err(err("parity must be `even` or `odd`")),
                };
                let weight2 = w.parse().map_err(|_| err("weight2 must be a positive integer"))?;
                d.vars.push(VariableSpec { name: name.to_string(), parity, weight2 });
            }
            "rel" => d.rels.push((line, rest.to_string())),
            "extra" => d.extras.push((line, rest.to_string())),
            "character" => d.character = Some(rest.to_string()),
            "expect" => {
                d.expected = Some(match rest {
                    "iso" => Expectation::IsoConsistent,
                    "mismatch" => Expectation::Mismatch,
                    "hs_only" => Expectation::HsOnly,
                    "unstated" => Expectation::Unstated,
                    _ => return Err(err("expect must be iso, mismatch, hs_only or unstated")),
                })
            }
            "maxdeg2" => d.maxdeg2 = Some(rest.parse().map_err(|_| err("maxdeg2 must be a nonnegative integer"))?),
            _ => return Err(err(&format!("unknown directive `{word}`"))),
        }
    }
    if let Some(d) = cur {
        models.push(d.finish()?);
    }
    Ok(models)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_record() {
        let src = "# demo\nmodel rr\ntopic principal\nvar x even 2\nrel x^2\ncharacter sl2p:1\nexpect iso\nmaxdeg2 12\n";
        let m = parse_registry(src).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].key, "rr");
        assert_eq!(m[0].spec.relations.len(), 1);
        assert_eq!(m[0].expected, Expectation::IsoConsistent);
        assert_eq!(m[0].default_maxdeg2, 12);
    }

    #[test]
    fn reports_line_numbers() {
        let src = "model a\nvar x even 2\nrel y^2\n";
        match parse_registry(src) {
            Err(ModelError::Registry { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_registry("var x even 2").is_err());
        assert!(parse_registry("model a\nvar x sideways 2").is_err());
    }
}
