use super::Polynomial;
use crate::error::{Error, Result};

/// Parameters of the horn sweep: path length `k`, bristle count `s`,
/// scattering budget `q`, and the polynomials `ψ` and `σ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepParameters {
    pub k: usize,
    pub s: usize,
    pub q: u64,
    pub psi: Polynomial,
    pub sigma: Polynomial,
}

impl SweepParameters {
    pub fn new(k: usize, s: usize, q: u64, psi: Polynomial, sigma: Polynomial) -> Result<Self> {
        let p = SweepParameters { k, s, q, psi, sigma };
        p.validate()?;
        Ok(p)
    }

    /// The instance used for 2P4-free graphs: `k = q = 4`, `s = 1`, `ψ = σ = x`.
    pub fn two_p4() -> Self {
        SweepParameters { k: 4, s: 1, q: 4, psi: Polynomial::x(), sigma: Polynomial::x() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.k == 0 {
            return Err(Error::input("k must be at least 1"));
        }
        if self.s == 0 {
            return Err(Error::input("s must be at least 1"));
        }
        Ok(())
    }
}

/// `ζ_i` and `δ_i` for `i = 1..=k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepTable {
    zeta: Vec<Polynomial>,
    delta: Vec<Polynomial>,
}

impl SweepTable {
    pub fn k(&self) -> usize {
        self.zeta.len()
    }

    /// `ζ_i`, with `i` counted from 1.
    pub fn zeta(&self, i: usize) -> &Polynomial {
        &self.zeta[i - 1]
    }

    pub fn delta(&self, i: usize) -> &Polynomial {
        &self.delta[i - 1]
    }
}

/// Runs the downward recurrences from `ζ_k = σ + x^s`, `δ_k = 0`:
///
/// ```text
/// ζ_i = 2xψ + (1+q)x ζ_{i+1} + q x² δ_{i+1}
/// δ_i = x ζ_{i+1} + x² δ_{i+1}
/// ```
pub fn sweep_polys(params: &SweepParameters) -> Result<SweepTable> {
    params.validate()?;
    let k = params.k;
    let x = Polynomial::x();
    let x2 = Polynomial::monomial(1, 2);
    let two_x_psi = (&x * &params.psi).scale_u64(2);
    let mut zeta = vec![Polynomial::zero(); k];
    let mut delta = vec![Polynomial::zero(); k];
    zeta[k - 1] = &params.sigma + &Polynomial::monomial(1, params.s);
    for i in (0..k - 1).rev() {
        let z = &zeta[i + 1];
        let d = &delta[i + 1];
        let next_zeta = &(&two_x_psi + &(&x * z).scale_u64(1 + params.q)) + &(&x2 * d).scale_u64(params.q);
        let next_delta = &(&x * z) + &(&x2 * d);
        zeta[i] = next_zeta;
        delta[i] = next_delta;
    }
    Ok(SweepTable { zeta, delta })
}
