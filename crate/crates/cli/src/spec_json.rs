//! JSON schemas for occurrence specs and epsilon automata.

use std::collections::BTreeSet;
use std::path::Path;

use serde::Deserialize;
use strproc::counting::{CountedPattern, DfaEdge, EpsilonDfa, OccurrenceSpec};
use strproc::{Symbol, Text};

use crate::input::read_file;
use crate::CliError;

/// A pattern written as letters (`"ab"`, with `a` = 1) or as symbol ids.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum PatternJson {
    Letters(String),
    Ids(Vec<Symbol>),
}

impl PatternJson {
    fn to_text(&self, alphabet: u32) -> Result<Text, CliError> {
        let ids: Vec<Symbol> = match self {
            PatternJson::Letters(s) => s
                .chars()
                .map(|c| match c {
                    'a'..='z' => Ok(c as Symbol - 'a' as Symbol + 1),
                    _ => Err(CliError::new(format!(
                        "pattern character {c:?} is not a lowercase letter"
                    ))),
                })
                .collect::<Result<_, _>>()?,
            PatternJson::Ids(v) => v.clone(),
        };
        let t = Text::new(ids)?;
        t.check_alphabet(alphabet)?;
        Ok(t)
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CountedJson {
    pattern: PatternJson,
    #[serde(default)]
    occ: Vec<u32>,
    #[serde(default)]
    weight: f64,
    #[serde(default)]
    dont_care: bool,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecJson {
    alphabet: u32,
    #[serde(default)]
    forbidden: Vec<PatternJson>,
    #[serde(default)]
    counted: Vec<CountedJson>,
    #[serde(default)]
    k: u32,
    slen: Vec<usize>,
}

pub fn parse_spec(content: &str) -> Result<OccurrenceSpec, CliError> {
    let raw: SpecJson =
        serde_json::from_str(content).map_err(|e| CliError::new(format!("malformed spec: {e}")))?;
    let mut spec = OccurrenceSpec::new(raw.alphabet, raw.slen).with_cap(raw.k);
    for p in &raw.forbidden {
        spec = spec.forbid(p.to_text(raw.alphabet)?);
    }
    for c in raw.counted {
        let mut p = CountedPattern::new(c.pattern.to_text(raw.alphabet)?, c.occ).weighted(c.weight);
        if c.dont_care {
            p = p.ignoring_count();
        }
        spec = spec.count(p);
    }
    Ok(spec)
}

pub fn load_spec(path: &Path) -> Result<OccurrenceSpec, CliError> {
    parse_spec(&read_file(path)?)
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum SymbolJson {
    Id(Symbol),
    Letter(char),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeJson {
    from: usize,
    to: usize,
    symbol: SymbolJson,
    #[serde(default = "yes")]
    absorbing: bool,
}

fn yes() -> bool {
    true
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct DfaJson {
    states: usize,
    initial: usize,
    finals: Vec<usize>,
    #[serde(default)]
    alphabet: Option<u32>,
    edges: Vec<EdgeJson>,
}

pub fn parse_dfa(content: &str) -> Result<EpsilonDfa, CliError> {
    let raw: DfaJson = serde_json::from_str(content)
        .map_err(|e| CliError::new(format!("malformed automaton: {e}")))?;
    let edges: Vec<DfaEdge> = raw
        .edges
        .iter()
        .map(|e| {
            let symbol = match e.symbol {
                SymbolJson::Id(s) => s,
                SymbolJson::Letter(c @ 'a'..='z') => c as Symbol - 'a' as Symbol + 1,
                SymbolJson::Letter(c) => {
                    return Err(CliError::new(format!(
                        "edge symbol {c:?} is not a lowercase letter"
                    )))
                }
            };
            Ok(DfaEdge {
                from: e.from,
                to: e.to,
                symbol,
                absorbing: e.absorbing,
            })
        })
        .collect::<Result<_, CliError>>()?;
    let alphabet = raw
        .alphabet
        .unwrap_or_else(|| edges.iter().map(|e| e.symbol).max().unwrap_or(1));
    Ok(EpsilonDfa::new(
        raw.states,
        raw.initial,
        &raw.finals,
        alphabet,
        edges,
    )?)
}

pub fn load_dfa(path: &Path) -> Result<EpsilonDfa, CliError> {
    parse_dfa(&read_file(path)?)
}

pub fn lengths(list: &[usize]) -> BTreeSet<usize> {
    list.iter().copied().collect()
}
