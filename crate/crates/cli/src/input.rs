//! Reading texts from files and mapping characters to symbol ids.

use std::collections::BTreeSet;
use std::path::Path;

use serde_json::Value;
use strproc::{Symbol, Text};

use crate::CliError;

/// Texts as read from a file, before symbol mapping.
#[derive(Debug, Clone)]
pub enum Raw {
    Strings(Vec<String>),
    Symbols(Vec<Vec<Symbol>>),
}

pub fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::new(format!("cannot read {}: {e}", path.display())))
}

/// A JSON array of integer arrays, or one text per non-empty line.
pub fn parse_texts(content: &str) -> Result<Raw, CliError> {
    let trimmed = content.trim_start();
    if trimmed.starts_with('[') {
        let v: Vec<Vec<Symbol>> = serde_json::from_str(trimmed)
            .map_err(|e| CliError::new(format!("malformed JSON texts: {e}")))?;
        return Ok(Raw::Symbols(v));
    }
    Ok(Raw::Strings(
        content
            .lines()
            .map(|l| l.trim_end_matches('\r'))
            .filter(|l| !l.is_empty())
            .map(String::from)
            .collect(),
    ))
}

pub fn load_texts(path: &Path) -> Result<Raw, CliError> {
    parse_texts(&read_file(path)?)
}

/// Bijection between characters and symbol ids `1..=M`, or plain ids when
/// inputs are integer sequences.
#[derive(Debug, Clone)]
pub enum Codec {
    Table(Vec<char>),
    Ids,
}

impl Codec {
    /// The first `m` lowercase letters, or plain ids beyond 26.
    pub fn letters(m: u32) -> Codec {
        if m <= 26 {
            Codec::Table(('a'..='z').take(m as usize).collect())
        } else {
            Codec::Ids
        }
    }

    /// Table for `inputs`: from `alphabet_file` if given, else the first
    /// `size` letters if given, else the distinct characters present in
    /// sorted order.
    pub fn for_inputs(
        inputs: &[&Raw],
        alphabet_file: Option<&Path>,
        size: Option<u32>,
    ) -> Result<Codec, CliError> {
        if let Some(path) = alphabet_file {
            let chars: Vec<char> = read_file(path)?
                .chars()
                .filter(|c| !c.is_whitespace())
                .collect();
            let distinct: BTreeSet<char> = chars.iter().copied().collect();
            if distinct.len() != chars.len() || chars.is_empty() {
                return Err(CliError::new(
                    "alphabet file must list distinct, non-whitespace characters".into(),
                ));
            }
            return Ok(Codec::Table(chars));
        }
        if !inputs.iter().any(|r| matches!(r, Raw::Strings(_))) {
            return Ok(Codec::Ids);
        }
        if let Some(m) = size {
            if m > 26 {
                return Err(CliError::new(
                    "character input supports at most 26 letters without an alphabet file".into(),
                ));
            }
            return Ok(Codec::letters(m));
        }
        let present: BTreeSet<char> = inputs
            .iter()
            .filter_map(|r| match r {
                Raw::Strings(v) => Some(v.iter().flat_map(|s| s.chars())),
                Raw::Symbols(_) => None,
            })
            .flatten()
            .collect();
        Ok(Codec::Table(present.into_iter().collect()))
    }

    pub fn size(&self, texts: &[Text]) -> u32 {
        match self {
            Codec::Table(t) => t.len() as u32,
            Codec::Ids => texts.iter().map(|t| t.max_symbol()).max().unwrap_or(0),
        }
    }

    pub fn encode_str(&self, s: &str) -> Result<Text, CliError> {
        match self {
            Codec::Table(table) => {
                let ids = s
                    .chars()
                    .map(|c| {
                        table
                            .iter()
                            .position(|&t| t == c)
                            .map(|i| i as Symbol + 1)
                            .ok_or_else(|| {
                                CliError::new(format!("character {c:?} is not in the alphabet"))
                            })
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Text::new(ids)?)
            }
            Codec::Ids => Err(CliError::new("character input needs an alphabet".into())),
        }
    }

    pub fn encode(&self, raw: &Raw) -> Result<Vec<Text>, CliError> {
        match raw {
            Raw::Strings(v) => v.iter().map(|s| self.encode_str(s)).collect(),
            Raw::Symbols(v) => v
                .iter()
                .map(|s| Text::new(s.clone()).map_err(CliError::from))
                .collect(),
        }
    }

    pub fn decode(&self, s: &[Symbol]) -> Value {
        if let Codec::Table(table) = self {
            if s.iter().all(|&c| c >= 1 && (c as usize) <= table.len()) {
                return Value::String(s.iter().map(|&c| table[c as usize - 1]).collect());
            }
        }
        Value::from(s.to_vec())
    }
}

pub fn parse_list<T: std::str::FromStr>(s: &str) -> Result<Vec<T>, CliError> {
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            p.parse()
                .map_err(|_| CliError::new(format!("cannot parse list item {p:?}")))
        })
        .collect()
}

/// Position weights: a JSON array of number arrays, or one line of
/// comma- or space-separated numbers per text.
pub fn load_weights(path: &Path) -> Result<Vec<Vec<f64>>, CliError> {
    let content = read_file(path)?;
    if content.trim_start().starts_with('[') {
        return serde_json::from_str(&content)
            .map_err(|e| CliError::new(format!("malformed JSON weights: {e}")));
    }
    content
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            l.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|p| !p.is_empty())
                .map(|p| {
                    p.parse()
                        .map_err(|_| CliError::new(format!("cannot parse weight {p:?}")))
                })
                .collect()
        })
        .collect()
}
