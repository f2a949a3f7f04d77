//! Degree-preserving maps between presented Lie algebras, given on
//! generators.

use gt_algebra::{Letter, LieExpr};
use serde::Serialize;

use crate::error::{BraidError, Result};
use crate::presentation::{substitute, GradedPresentation};
use crate::quotient::{LieQuotient, QuotientElement};

#[derive(Clone, Debug)]
pub struct LieHomomorphism {
    source: GradedPresentation,
    target: GradedPresentation,
    /// Image of each source generator; `None` is zero.
    images: Vec<Option<LieExpr>>,
}

impl LieHomomorphism {
    /// Checks that every image is zero or homogeneous of its generator's
    /// degree.
    pub fn new(source: GradedPresentation, target: GradedPresentation, images: Vec<Option<LieExpr>>) -> Result<Self> {
        let (sa, ta) = (source.alphabet(), target.alphabet());
        if images.len() != sa.len() {
            return Err(BraidError::InvalidPresentation(format!("{} images for {} generators", images.len(), sa.len())));
        }
        let images: Vec<Option<LieExpr>> =
            images.into_iter().map(|e| e.and_then(|e| substitute(&e, &mut |l| Some(LieExpr::Gen(l))))).collect();
        for (l, img) in sa.letters().zip(&images) {
            let Some(img) = img else { continue };
            let found = img.degree(ta).ok_or_else(|| BraidError::InhomogeneousInput(img.display(ta).to_string()))?;
            if found != sa.degree(l) {
                return Err(BraidError::DegreeMismatch { generator: sa.name(l).to_string(), expected: sa.degree(l), found });
            }
        }
        Ok(LieHomomorphism { source, target, images })
    }

    pub fn source(&self) -> &GradedPresentation {
        &self.source
    }

    pub fn target(&self) -> &GradedPresentation {
        &self.target
    }

    pub fn image(&self, l: Letter) -> Option<&LieExpr> {
        self.images[l as usize].as_ref()
    }

    pub fn images(&self) -> &[Option<LieExpr>] {
        &self.images
    }

    /// The image of a source expression, `None` when it is syntactically
    /// zero.
    pub fn apply(&self, e: &LieExpr) -> Option<LieExpr> {
        substitute(e, &mut |l| self.images[l as usize].clone())
    }

    /// `then ∘ self`.
    pub fn then(&self, then: &LieHomomorphism) -> Result<LieHomomorphism> {
        let images = self.images.iter().map(|img| img.as_ref().and_then(|e| then.apply(e))).collect();
        LieHomomorphism::new(self.source.clone(), then.target.clone(), images)
    }

    /// Images of the generators as elements of the target quotient.
    pub fn image_classes(&self, target: &LieQuotient) -> Result<Vec<QuotientElement>> {
        self.images
            .iter()
            .map(|img| match img {
                None => Ok(QuotientElement::Zero),
                Some(e) => target.normal_form(e),
            })
            .collect()
    }

    /// Lines `name ↦ image`.
    pub fn table(&self) -> Vec<(String, String)> {
        let (sa, ta) = (self.source.alphabet(), self.target.alphabet());
        sa.letters()
            .map(|l| {
                let img = self.images[l as usize].as_ref().map(|e| e.display(ta).to_string()).unwrap_or_else(|| "0".into());
                (sa.name(l).to_string(), img)
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomCheck {
    pub holds: bool,
    pub degree: u32,
    /// The first relation whose image is not zero, with that image.
    pub witness: Option<String>,
}

/// Every source relation of degree at most `d_max` maps to zero in the
/// target.
pub fn check_homomorphism(h: &LieHomomorphism, d_max: u32) -> Result<HomCheck> {
    let target = LieQuotient::new(h.target.clone());
    check_homomorphism_in(h, &target, d_max)
}

/// As [`check_homomorphism`], reusing a quotient of the target.
pub fn check_homomorphism_in(h: &LieHomomorphism, target: &LieQuotient, d_max: u32) -> Result<HomCheck> {
    let sa = h.source.alphabet();
    let images = h.image_classes(target)?;
    for r in h.source.expanded_relations() {
        if r.degree(sa).is_some_and(|d| d > d_max) {
            continue;
        }
        let v = target.evaluate_with(&r, &images)?;
        if !v.is_zero() {
            let witness = format!("{} ↦ {}", r.display(sa), target.display(&v));
            return Ok(HomCheck { holds: false, degree: d_max, witness: Some(witness) });
        }
    }
    Ok(HomCheck { holds: true, degree: d_max, witness: None })
}
