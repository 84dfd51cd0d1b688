use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// An ordered list of distinct names (states or letters) with reverse lookup.
///
/// Automata refer to states and letters by their position in the declared
/// order; names only matter at the boundaries.
#[derive(Clone, PartialEq, Eq)]
pub struct Symbols {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl Symbols {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || name.chars().any(char::is_whitespace) {
                return Err(Error::InvalidName(name.clone()));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateName(name.clone()));
            }
        }
        Ok(Symbols { names, index })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn get(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.names.iter().map(String::as_str)
    }

    /// True when every name is a single character, so words can be written
    /// without separators.
    pub fn is_compact(&self) -> bool {
        self.names.iter().all(|n| n.chars().count() == 1)
    }

    /// Parses a word. Compact alphabets accept `xxy`; otherwise letters are
    /// separated by whitespace or commas. `ε` and the empty string denote the
    /// empty word.
    pub fn parse_word(&self, text: &str) -> Result<Vec<usize>> {
        let text = text.trim();
        if text.is_empty() || text == "ε" {
            return Ok(Vec::new());
        }
        let tokens: Vec<String> = if text.contains(|c: char| c.is_whitespace() || c == ',') {
            text.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(str::to_string)
                .collect()
        } else if self.is_compact() {
            text.chars().map(String::from).collect()
        } else {
            vec![text.to_string()]
        };
        tokens
            .iter()
            .map(|t| self.get(t).ok_or_else(|| Error::UnknownLetter(t.clone())))
            .collect()
    }

    /// Inverse of [`Symbols::parse_word`]; the empty word renders as `ε`.
    pub fn render_word(&self, word: &[usize]) -> String {
        if word.is_empty() {
            return "ε".to_string();
        }
        let sep = if self.is_compact() { "" } else { " " };
        word.iter().map(|&x| self.name(x)).collect::<Vec<_>>().join(sep)
    }
}

impl fmt::Debug for Symbols {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.names).finish()
    }
}
