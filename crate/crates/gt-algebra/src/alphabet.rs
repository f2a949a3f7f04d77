//! Weighted generator alphabets, words, and the (alphabet, truncation) context
//! shared by every element.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{AlgebraError, Result};

/// Index of a generator inside its alphabet.
pub type Letter = u16;

/// An ordered list of named generators with positive integer weights.
///
/// The order of the symbols is the order used by every canonical form
/// (word comparison, cyclic rotation, Lyndon words).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    degrees: Vec<u32>,
    index: HashMap<String, Letter>,
}

impl Alphabet {
    pub fn new<S: Into<String>>(symbols: impl IntoIterator<Item = (S, u32)>) -> Result<Arc<Self>> {
        let mut names = Vec::new();
        let mut degrees = Vec::new();
        let mut index = HashMap::new();
        for (name, deg) in symbols {
            let name = name.into();
            if deg == 0 {
                return Err(AlgebraError::InvalidAlphabet(format!(
                    "generator `{name}` has weight 0"
                )));
            }
            if !is_identifier(&name) {
                return Err(AlgebraError::InvalidAlphabet(format!(
                    "generator name `{name}` is not an identifier"
                )));
            }
            if index.contains_key(&name) {
                return Err(AlgebraError::InvalidAlphabet(format!("duplicate generator `{name}`")));
            }
            if names.len() >= Letter::MAX as usize {
                return Err(AlgebraError::InvalidAlphabet("too many generators".into()));
            }
            index.insert(name.clone(), names.len() as Letter);
            names.push(name);
            degrees.push(deg);
        }
        Ok(Arc::new(Alphabet { names, degrees, index }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, l: Letter) -> &str {
        &self.names[l as usize]
    }

    pub fn degree(&self, l: Letter) -> u32 {
        self.degrees[l as usize]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn letter(&self, name: &str) -> Option<Letter> {
        self.index.get(name).copied()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.names.len()).map(|i| i as Letter)
    }

    pub fn word_degree(&self, letters: &[Letter]) -> u32 {
        letters.iter().map(|&l| self.degree(l)).sum()
    }

    /// All words of weighted degree exactly `d`, in increasing word order.
    pub fn words_of_degree(&self, d: u32) -> Vec<Word> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        self.extend_words(d, &mut cur, &mut out);
        out.sort();
        out
    }

    /// All words of weighted degree at most `d`, including the empty word.
    pub fn words_up_to(&self, d: u32) -> Vec<Word> {
        (0..=d).flat_map(|k| self.words_of_degree(k)).collect()
    }

    fn extend_words(&self, remaining: u32, cur: &mut Vec<Letter>, out: &mut Vec<Word>) {
        if remaining == 0 {
            out.push(Word { letters: cur.clone(), degree: self.word_degree(cur) });
            return;
        }
        for l in self.letters() {
            let dl = self.degree(l);
            if dl <= remaining {
                cur.push(l);
                self.extend_words(remaining - dl, cur, out);
                cur.pop();
            }
        }
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A word in the generators with its cached weighted degree.
///
/// Words compare first by degree, then lexicographically by letter index,
/// which is the output order used throughout.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<Letter>,
    degree: u32,
}

impl Word {
    pub fn empty() -> Self {
        Word { letters: Vec::new(), degree: 0 }
    }

    pub fn new(letters: Vec<Letter>, alphabet: &Alphabet) -> Self {
        let degree = alphabet.word_degree(&letters);
        Word { letters, degree }
    }

    pub(crate) fn from_parts(letters: Vec<Letter>, degree: u32) -> Self {
        Word { letters, degree }
    }

    pub fn letter(l: Letter, alphabet: &Alphabet) -> Self {
        Word { letters: vec![l], degree: alphabet.degree(l) }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.letters.len() + other.letters.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { letters, degree: self.degree + other.degree }
    }

    /// The subword `letters[range]`.
    pub fn slice(&self, range: std::ops::Range<usize>, alphabet: &Alphabet) -> Word {
        Word::new(self.letters[range].to_vec(), alphabet)
    }

    pub fn reversed(&self) -> Word {
        let mut letters = self.letters.clone();
        letters.reverse();
        Word { letters, degree: self.degree }
    }

    /// The lexicographically least rotation (all rotations share degree).
    pub fn min_rotation(&self) -> Word {
        let n = self.letters.len();
        if n <= 1 {
            return self.clone();
        }
        let mut best = 0usize;
        for start in 1..n {
            let better = (0..n)
                .map(|k| self.letters[(start + k) % n].cmp(&self.letters[(best + k) % n]))
                .find(|o| *o != Ordering::Equal)
                == Some(Ordering::Less);
            if better {
                best = start;
            }
        }
        let letters = (0..n).map(|k| self.letters[(best + k) % n]).collect();
        Word { letters, degree: self.degree }
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> WordDisplay<'a> {
        WordDisplay { word: self, alphabet }
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Dot-separated rendering of a word; the empty word renders as `1`.
pub struct WordDisplay<'a> {
    word: &'a Word,
    alphabet: &'a Alphabet,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("1");
        }
        for (i, &l) in self.word.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            f.write_str(self.alphabet.name(l))?;
        }
        Ok(())
    }
}

/// The ambient data every element carries: its alphabet and truncation bound.
#[derive(Debug, Clone)]
pub struct Context {
    alphabet: Arc<Alphabet>,
    max_degree: u32,
}

impl Context {
    pub fn new(alphabet: Arc<Alphabet>, max_degree: u32) -> Self {
        Context { alphabet, max_degree }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    /// Same alphabet, different truncation.
    pub fn with_max_degree(&self, max_degree: u32) -> Self {
        Context { alphabet: self.alphabet.clone(), max_degree }
    }

    pub fn same_alphabet(&self, other: &Context) -> bool {
        Arc::ptr_eq(&self.alphabet, &other.alphabet) || *self.alphabet == *other.alphabet
    }

    pub fn check_same(&self, other: &Context) -> Result<()> {
        if !self.same_alphabet(other) {
            return Err(AlgebraError::ContextMismatch(format!(
                "alphabets differ: [{}] vs [{}]",
                self.alphabet.names().join(","),
                other.alphabet.names().join(",")
            )));
        }
        if self.max_degree != other.max_degree {
            return Err(AlgebraError::ContextMismatch(format!(
                "truncation degrees differ: {} vs {}",
                self.max_degree, other.max_degree
            )));
        }
        Ok(())
    }

    pub fn letter(&self, name: &str) -> Result<Letter> {
        self.alphabet.letter(name).ok_or_else(|| AlgebraError::UnknownGenerator(name.to_string()))
    }

    pub fn word(&self, letters: Vec<Letter>) -> Word {
        Word::new(letters, &self.alphabet)
    }

    /// Parses a dot-separated word such as `x1.y1`; `1` is the empty word.
    pub fn word_from_names(&self, names: &[&str]) -> Result<Word> {
        let letters = names.iter().map(|n| self.letter(n)).collect::<Result<Vec<_>>>()?;
        Ok(self.word(letters))
    }
}

impl PartialEq for Context {
    fn eq(&self, other: &Self) -> bool {
        self.max_degree == other.max_degree && self.same_alphabet(other)
    }
}

impl Eq for Context {}
