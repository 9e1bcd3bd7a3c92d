//! The universal input type: a sequence of positive symbol ids.

use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

/// A symbol id. Real symbols are `1..=M`; `0` is reserved as a sentinel
/// that sorts below every symbol.
pub type Symbol = u32;

/// A string over the alphabet `{1, ..., M}`.
///
/// Positions reported by the library are 1-indexed; the underlying slice
/// (reachable through `Deref`) is the usual 0-indexed Rust slice.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Text(Vec<Symbol>);

impl Text {
    /// Wraps `symbols`, rejecting the reserved id `0`.
    pub fn new(symbols: Vec<Symbol>) -> Result<Self> {
        if symbols.contains(&0) {
            return Err(Error::SymbolOutOfRange {
                symbol: 0,
                alphabet: Symbol::MAX,
            });
        }
        Ok(Text(symbols))
    }

    /// Maps `'a'` to 1, `'b'` to 2 and so on. Panics on anything other than
    /// lowercase ASCII letters; meant for literals in tests and examples.
    pub fn letters(s: &str) -> Self {
        Text(
            s.bytes()
                .map(|b| {
                    assert!(b.is_ascii_lowercase(), "Text::letters accepts a-z only");
                    Symbol::from(b - b'a' + 1)
                })
                .collect(),
        )
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.0
    }

    /// Largest symbol id present, or 0 for the empty text.
    pub fn max_symbol(&self) -> Symbol {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Checks every symbol lies in `1..=alphabet`.
    pub fn check_alphabet(&self, alphabet: u32) -> Result<()> {
        match self.0.iter().find(|&&s| s == 0 || s > alphabet) {
            Some(&symbol) => Err(Error::SymbolOutOfRange { symbol, alphabet }),
            None => Ok(()),
        }
    }

    /// Renders symbols 1..=26 as `a..z`; larger ids are shown as `<id>`.
    pub fn to_letters(&self) -> String {
        let mut out = String::with_capacity(self.0.len());
        for &s in &self.0 {
            if (1..=26).contains(&s) {
                out.push(char::from(b'a' + (s - 1) as u8));
            } else {
                out.push_str(&format!("<{s}>"));
            }
        }
        out
    }
}

impl Deref for Text {
    type Target = [Symbol];

    fn deref(&self) -> &[Symbol] {
        &self.0
    }
}

impl From<Text> for Vec<Symbol> {
    fn from(t: Text) -> Self {
        t.0
    }
}

impl fmt::Debug for Text {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Text({:?})", self.to_letters())
    }
}

impl fmt::Display for Text {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_letters())
    }
}
