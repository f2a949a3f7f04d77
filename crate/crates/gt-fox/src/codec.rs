//! JSON encodings of pairing and quasi-derivation tables.

use std::collections::BTreeMap;
use std::sync::Arc;

use gt_algebra::codec::ElementJson;
use gt_algebra::{AlgebraError, Alphabet, Context, TensorElement};
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::pairing::FoxPairing;
use crate::qder::QuasiDerivation;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairingEntryJson {
    pub a: String,
    pub b: String,
    pub value: ElementJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairingJson {
    pub pairing: Vec<PairingEntryJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QderEntryJson {
    pub a: String,
    pub value: ElementJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QderJson {
    pub qder: Vec<QderEntryJson>,
    pub pairing: Vec<PairingEntryJson>,
}

impl FoxPairing {
    /// Nonzero entries only.
    pub fn to_json(&self) -> PairingJson {
        let alphabet = self.ctx().alphabet();
        PairingJson {
            pairing: self
                .entries()
                .map(|(a, b, v)| PairingEntryJson {
                    a: alphabet.name(a).to_string(),
                    b: alphabet.name(b).to_string(),
                    value: v.to_json(),
                })
                .collect(),
        }
    }

    pub fn from_json(ctx: &Context, json: &PairingJson) -> Result<Self> {
        let mut table = BTreeMap::new();
        for e in &json.pairing {
            let v = decode_value(ctx, &e.value)?;
            table.insert((ctx.letter(&e.a)?, ctx.letter(&e.b)?), v);
        }
        FoxPairing::from_table(ctx, table)
    }
}

fn decode_value(ctx: &Context, json: &ElementJson) -> Result<TensorElement> {
    let alphabet: &Arc<Alphabet> = ctx.alphabet();
    let v = TensorElement::from_json(alphabet, json)?;
    if v.max_degree() != ctx.max_degree() {
        return Err(AlgebraError::ContextMismatch(format!(
            "table value truncated at {} inside a context truncated at {}",
            v.max_degree(),
            ctx.max_degree()
        ))
        .into());
    }
    Ok(v)
}

impl QuasiDerivation {
    pub fn to_json(&self) -> QderJson {
        let alphabet = self.ctx().alphabet();
        QderJson {
            qder: alphabet
                .letters()
                .filter(|&l| !self.value(l).is_zero())
                .map(|l| QderEntryJson { a: alphabet.name(l).to_string(), value: self.value(l).to_json() })
                .collect(),
            pairing: self.sigma().to_json().pairing,
        }
    }

    pub fn from_json(ctx: &Context, json: &QderJson) -> Result<Self> {
        let sigma = FoxPairing::from_json(ctx, &crate::codec::PairingJson { pairing: json.pairing.clone() })?;
        let mut table: BTreeMap<_, _> = ctx.alphabet().letters().map(|l| (l, TensorElement::zero(ctx))).collect();
        for e in &json.qder {
            table.insert(ctx.letter(&e.a)?, decode_value(ctx, &e.value)?);
        }
        QuasiDerivation::new(ctx, table, sigma)
    }
}
