//! `φ(ω) = 1/(e^ω - 1) - 1/ω` and its inner Fox pairing.

use gt_algebra::{rat, Rational, TensorElement};
use gt_fox::{make_inner_pairing, FoxPairing};
use num_traits::{One, Zero};

use crate::surface::SurfaceContext;

/// `B_0, ..., B_k` with `B_1 = -1/2`, from
/// `Σ_{j=0}^{m} C(m+1, j) B_j = 0` for `m ≥ 1`.
pub fn bernoulli_numbers(k: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = vec![Rational::one()];
    for m in 1..=k {
        let mut binom = Rational::one();
        let mut sum = Rational::zero();
        for (j, bj) in b.iter().enumerate() {
            sum += &binom * bj;
            // C(m+1, j+1) from C(m+1, j)
            binom = binom * rat((m + 1 - j) as i64) / rat((j + 1) as i64);
        }
        b.push(-sum / rat(m as i64 + 1));
    }
    b
}

/// Coefficients of `ω^0, ..., ω^k` in `φ`: the coefficient of `ω^j` is
/// `B_{j+1} / (j+1)!`.
pub fn phi_coefficients(k: usize) -> Vec<Rational> {
    let b = bernoulli_numbers(k + 1);
    let mut factorial = Rational::one();
    let mut out = Vec::with_capacity(k + 1);
    for j in 0..=k {
        factorial *= rat(j as i64 + 1);
        out.push(&b[j + 1] / &factorial);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BernoulliPhi {
    /// Coefficients of `ω^0, ω^1, ...` that contribute below the bound.
    pub coefficients: Vec<Rational>,
    pub phi: TensorElement,
    /// `ρ_φ(a, b) = D(a) φ D(b)`.
    pub pairing: FoxPairing,
}

/// `φ` with every power of `ω` of degree at most `min(d_max, N)`.
pub fn bernoulli_phi(sc: &SurfaceContext, d_max: u32) -> BernoulliPhi {
    let ctx = sc.ctx();
    let bound = d_max.min(sc.max_degree());
    let top = (bound / 2) as usize;
    let coefficients = phi_coefficients(top);
    let omega = sc.omega();
    let mut phi = TensorElement::zero(ctx);
    let mut power = TensorElement::one(ctx);
    for c in &coefficients {
        phi = &phi + &power.scale(c);
        power = &power * &omega;
    }
    let pairing = make_inner_pairing(&phi);
    BernoulliPhi { coefficients, phi, pairing }
}

#[cfg(test)]
mod tests {
    use super::*;
    use gt_algebra::frac;

    #[test]
    fn first_values() {
        let b = bernoulli_numbers(4);
        assert_eq!(b, vec![rat(1), frac(-1, 2), frac(1, 6), rat(0), frac(-1, 30)]);
        assert_eq!(phi_coefficients(1), vec![frac(-1, 2), frac(1, 12)]);
    }
}
