//! JSON encodings of elements.
//!
//! A tensor element is `{"max_degree": N, "terms": [{"word": ["x1","y1"],
//! "coeff": "3/2"}]}` with terms in output order; the empty word is `[]`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::alphabet::{Alphabet, Context, Word};
use crate::cyclic::CyclicElement;
use crate::error::{AlgebraError, Result};
use crate::rational::parse_rational;
use crate::square::TensorSquareElement;
use crate::tensor::TensorElement;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub word: Vec<String>,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub max_degree: u32,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareTermJson {
    pub left: Vec<String>,
    pub right: Vec<String>,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareJson {
    pub max_degree: u32,
    pub terms: Vec<SquareTermJson>,
}

pub fn word_names(w: &Word, alphabet: &Alphabet) -> Vec<String> {
    w.letters().iter().map(|&l| alphabet.name(l).to_string()).collect()
}

fn word_from_names(names: &[String], ctx: &Context) -> Result<Word> {
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    ctx.word_from_names(&refs)
}

impl TensorElement {
    pub fn to_json(&self) -> ElementJson {
        let alphabet = self.ctx().alphabet();
        ElementJson {
            max_degree: self.max_degree(),
            terms: self
                .iter()
                .map(|(w, c)| TermJson { word: word_names(w, alphabet), coeff: c.to_string() })
                .collect(),
        }
    }

    pub fn from_json(alphabet: &Arc<Alphabet>, json: &ElementJson) -> Result<Self> {
        let ctx = Context::new(alphabet.clone(), json.max_degree);
        let mut out = TensorElement::zero(&ctx);
        for t in &json.terms {
            let w = word_from_names(&t.word, &ctx)?;
            if w.degree() > json.max_degree {
                return Err(AlgebraError::Decode(format!("word {:?} exceeds max_degree", t.word)));
            }
            let c = parse_rational(&t.coeff).ok_or_else(|| AlgebraError::Decode(format!("bad coefficient `{}`", t.coeff)))?;
            out.add_term(w, c);
        }
        Ok(out)
    }
}

impl CyclicElement {
    /// Same layout as a tensor element, with canonical cyclic words.
    pub fn to_json(&self) -> ElementJson {
        let alphabet = self.ctx().alphabet();
        ElementJson {
            max_degree: self.ctx().max_degree(),
            terms: self
                .iter()
                .map(|(w, c)| TermJson { word: word_names(w, alphabet), coeff: c.to_string() })
                .collect(),
        }
    }
}

impl TensorSquareElement {
    pub fn to_json(&self) -> SquareJson {
        let alphabet = self.ctx().alphabet();
        SquareJson {
            max_degree: self.ctx().max_degree(),
            terms: self
                .iter()
                .map(|((u, v), c)| SquareTermJson {
                    left: word_names(u, alphabet),
                    right: word_names(v, alphabet),
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }
}
