//! The graded loop algebra of `Σ_{g,n+1}` and boundary framings.
//!
//! Generators come in the fixed order `x_1..x_g, y_1..y_g, z_1..z_n`, with
//! the handle letters in degree 1 and the boundary letters in degree 2.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use gt_algebra::{Alphabet, Context, Letter, TensorElement};

use crate::error::{Result, SurfaceError};

/// The alphabet for genus `g` with `n` boundary letters. `n = 0` is allowed
/// here for callers that want the closed-surface letters alone.
pub fn surface_alphabet(g: usize, n: usize) -> Arc<Alphabet> {
    let mut gens: Vec<(String, u32)> = Vec::with_capacity(2 * g + n);
    gens.extend((1..=g).map(|i| (format!("x{i}"), 1)));
    gens.extend((1..=g).map(|i| (format!("y{i}"), 1)));
    gens.extend((1..=n).map(|j| (format!("z{j}"), 2)));
    Alphabet::new(gens).expect("surface generator names are distinct")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceContext {
    genus: usize,
    boundaries: usize,
    ctx: Context,
}

impl SurfaceContext {
    pub fn new(genus: usize, boundaries: usize, max_degree: u32) -> Result<Self> {
        if boundaries == 0 {
            return Err(SurfaceError::InvalidSurface("at least one boundary letter is needed".into()));
        }
        let ctx = Context::new(surface_alphabet(genus, boundaries), max_degree);
        Ok(SurfaceContext { genus, boundaries, ctx })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn boundaries(&self) -> usize {
        self.boundaries
    }

    pub fn ctx(&self) -> &Context {
        &self.ctx
    }

    pub fn max_degree(&self) -> u32 {
        self.ctx.max_degree()
    }

    /// The same surface at another truncation.
    pub fn with_max_degree(&self, max_degree: u32) -> Self {
        SurfaceContext { ctx: self.ctx.with_max_degree(max_degree), ..self.clone() }
    }

    /// `x_i`, 1-based.
    pub fn x(&self, i: usize) -> Letter {
        assert!((1..=self.genus).contains(&i));
        (i - 1) as Letter
    }

    pub fn y(&self, i: usize) -> Letter {
        assert!((1..=self.genus).contains(&i));
        (self.genus + i - 1) as Letter
    }

    pub fn z(&self, j: usize) -> Letter {
        assert!((1..=self.boundaries).contains(&j));
        (2 * self.genus + j - 1) as Letter
    }

    /// Index of a boundary letter, 1-based, or `None` for handle letters.
    pub fn boundary_index(&self, l: Letter) -> Option<usize> {
        let l = l as usize;
        (l >= 2 * self.genus).then(|| l - 2 * self.genus + 1)
    }

    /// `ω = Σ [x_i, y_i] + Σ z_j`.
    pub fn omega(&self) -> TensorElement {
        let ctx = &self.ctx;
        let mut out = TensorElement::zero(ctx);
        for i in 1..=self.genus {
            let x = TensorElement::generator(ctx, self.x(i));
            let y = TensorElement::generator(ctx, self.y(i));
            out = &out + &(&(&x * &y) - &(&y * &x));
        }
        for j in 1..=self.boundaries {
            out = &out + &TensorElement::generator(ctx, self.z(j));
        }
        out
    }
}

/// Rotation numbers of the boundary curves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Framing {
    /// Every boundary curve has rotation number `-1`.
    Adapted,
    Rotations(Vec<i64>),
}

impl Framing {
    /// Rotation numbers for `n` boundary curves.
    pub fn rotations(&self, n: usize) -> Result<Vec<i64>> {
        match self {
            Framing::Adapted => Ok(vec![-1; n]),
            Framing::Rotations(r) if r.len() == n => Ok(r.clone()),
            Framing::Rotations(r) => Err(SurfaceError::InvalidFraming(format!(
                "{} rotation numbers given for {n} boundary curves",
                r.len()
            ))),
        }
    }

    /// `r(z_j) = rot(γ_j) + 1`.
    pub fn r_values(&self, n: usize) -> Result<Vec<i64>> {
        Ok(self.rotations(n)?.into_iter().map(|r| r + 1).collect())
    }
}

impl FromStr for Framing {
    type Err = SurfaceError;

    /// `adapted` or `rot:r1,r2,...`, optionally with the list in parentheses.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "adapted" {
            return Ok(Framing::Adapted);
        }
        let body = s.strip_prefix("rot:").ok_or_else(|| SurfaceError::InvalidFraming(format!("`{s}`")))?;
        let body = body.trim().trim_start_matches('(').trim_end_matches(')');
        let rot = body
            .split(',')
            .map(|p| p.trim().parse::<i64>().map_err(|_| SurfaceError::InvalidFraming(format!("bad rotation number `{p}`"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Framing::Rotations(rot))
    }
}

impl fmt::Display for Framing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Framing::Adapted => write!(f, "adapted"),
            Framing::Rotations(r) => {
                let parts: Vec<String> = r.iter().map(i64::to_string).collect();
                write!(f, "rot:{}", parts.join(","))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alphabet_layout() {
        let sc = SurfaceContext::new(2, 1, 4).unwrap();
        let names: Vec<&str> = sc.ctx().alphabet().names().iter().map(String::as_str).collect();
        assert_eq!(names, ["x1", "x2", "y1", "y2", "z1"]);
        assert_eq!(sc.ctx().alphabet().degree(sc.z(1)), 2);
        assert_eq!(sc.boundary_index(sc.z(1)), Some(1));
        assert_eq!(sc.boundary_index(sc.y(2)), None);
        assert!(SurfaceContext::new(1, 0, 4).is_err());
        assert_eq!(surface_alphabet(1, 0).len(), 2);
    }

    #[test]
    fn framing_parse() {
        assert_eq!("adapted".parse::<Framing>().unwrap(), Framing::Adapted);
        assert_eq!("rot:(1,-2)".parse::<Framing>().unwrap(), Framing::Rotations(vec![1, -2]));
        assert_eq!("rot:2".parse::<Framing>().unwrap().to_string(), "rot:2");
        assert!("rot:a".parse::<Framing>().is_err());
        assert!(Framing::Rotations(vec![1]).rotations(2).is_err());
        assert_eq!(Framing::Adapted.r_values(2).unwrap(), vec![0, 0]);
    }
}
