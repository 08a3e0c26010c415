use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};

use super::{Polynomial, SweepParameters, SweepTable};
use crate::error::{Error, Result};

/// Largest exponent `choose_c` will try before giving up.
const MAX_EXPONENT: u32 = 4096;
/// Longest finite scan a single certificate may require.
const SCAN_LIMIT: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundKind {
    /// `x^c ≥ (x−1)^c + r(x)`.
    Difference,
    /// `x^c ≥ r(x)`.
    Power,
}

/// One inequality that `c` must satisfy for every integer `x ≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bound {
    pub kind: BoundKind,
    pub rhs: Polynomial,
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            BoundKind::Difference => write!(f, "x^c >= (x-1)^c + {}", self.rhs),
            BoundKind::Power => write!(f, "x^c >= {}", self.rhs),
        }
    }
}

/// How a bound is known to hold beyond the finitely scanned range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TailArgument {
    /// `r(x) ≤ S·x^deg ≤ x0^gap·x^deg ≤ x^(deg+gap)` for `x ≥ x0`, where
    /// `deg + gap` is `c` (or `c − 1` for a difference bound, using
    /// `x^c − (x−1)^c ≥ x^(c−1)`).
    Dominance { coefficient_sum: BigUint, gap: usize },
    /// The signed difference `D(x)` of the two sides has nonnegative
    /// coefficients after substituting `x ↦ x + x0`, so `D ≥ 0` on `[x0, ∞)`.
    TaylorShift,
}

/// Exact check of `2 ≤ x ≤ x0` plus a tail argument for `x ≥ x0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub x0: u64,
    pub tail: TailArgument,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentChoice {
    pub c: u32,
    pub bounds: Vec<Bound>,
    /// One certificate per bound, in the same order.
    pub certificates: Vec<Certificate>,
}

impl ExponentChoice {
    /// First `(bound index, x)` in `2..=upto` where the chosen `c` fails.
    pub fn first_violation(&self, upto: u64) -> Option<(usize, u64)> {
        for x in 2..=upto {
            for (i, b) in self.bounds.iter().enumerate() {
                if !b.holds_at(self.c, x) {
                    return Some((i, x));
                }
            }
        }
        None
    }
}

impl Bound {
    /// The three right-hand sides, in the order
    /// `ζ₁ + xδ₁ + 2`, `(2s+1)(ζ₁+1) + (k−2)ζ₁`, `kζ₁ + σ`.
    ///
    /// The second is stored as `(2s+k−1)ζ₁ + (2s+1)`, which stays
    /// coefficientwise nonnegative when `k = 1`.
    pub fn for_sweep(params: &SweepParameters, table: &SweepTable) -> Vec<Bound> {
        let z1 = table.zeta(1);
        let d1 = table.delta(1);
        let s = params.s as u64;
        let k = params.k as u64;
        let first = &(z1 + &(&Polynomial::x() * d1)) + &Polynomial::constant(2);
        let second = &z1.scale_u64(2 * s + k - 1) + &Polynomial::constant(2 * s + 1);
        let third = &z1.scale_u64(k) + &params.sigma;
        vec![
            Bound { kind: BoundKind::Difference, rhs: first },
            Bound { kind: BoundKind::Power, rhs: second },
            Bound { kind: BoundKind::Power, rhs: third },
        ]
    }

    pub fn holds_at(&self, c: u32, x: u64) -> bool {
        let xb = BigUint::from(x);
        let lhs = xb.pow(c);
        let mut rhs = self.rhs.eval(&xb);
        if self.kind == BoundKind::Difference {
            rhs += (xb - 1u32).pow(c);
        }
        lhs >= rhs
    }

    /// Decides whether the bound holds for every integer `x ≥ 2`.
    ///
    /// `Ok(None)` means it fails somewhere; the scan may stop early in that
    /// case. A scan longer than the internal limit is a resource error.
    pub fn certify(&self, c: u32) -> Result<Option<Certificate>> {
        if !self.holds_at(c, 2) {
            return Ok(None);
        }
        let Some((x0, tail)) = self.tail(c) else {
            return Ok(None);
        };
        if x0 > SCAN_LIMIT {
            return Err(Error::resource(format!("certifying {self} at c={c} needs a scan to x={x0}")));
        }
        if (3..=x0).all(|x| self.holds_at(c, x)) {
            Ok(Some(Certificate { x0: x0.max(2), tail }))
        } else {
            Ok(None)
        }
    }

    /// A threshold beyond which the bound is proved, or `None` when it fails
    /// for all large `x`.
    fn tail(&self, c: u32) -> Option<(u64, TailArgument)> {
        let effective = match self.kind {
            BoundKind::Difference => c as usize - 1,
            BoundKind::Power => c as usize,
        };
        let deg = self.rhs.degree().unwrap_or(0);
        if effective > deg {
            let sum = self.rhs.coefficient_sum();
            let gap = effective - deg;
            let x0 = least_root_bound(&sum, gap);
            if x0 <= SCAN_LIMIT {
                return Some((x0, TailArgument::Dominance { coefficient_sum: sum, gap }));
            }
        }
        let d = self.signed_difference(c);
        match d.last() {
            None => return Some((2, TailArgument::TaylorShift)),
            Some(lead) if lead.is_negative() => return None,
            Some(_) => {}
        }
        Some((taylor_threshold(&d), TailArgument::TaylorShift))
    }

    /// Coefficients of `x^c − [(x−1)^c] − r(x)`, trimmed.
    fn signed_difference(&self, c: u32) -> Vec<BigInt> {
        let c = c as usize;
        let len = (c + 1).max(self.rhs.coeffs().len());
        let mut d = vec![BigInt::zero(); len];
        d[c] += 1;
        if self.kind == BoundKind::Difference {
            // (x−1)^c = Σ C(c,i) x^i (−1)^(c−i)
            let mut binom = BigInt::one();
            for (i, di) in d.iter_mut().enumerate().take(c + 1) {
                if (c - i).is_multiple_of(2) {
                    *di -= &binom;
                } else {
                    *di += &binom;
                }
                binom = binom * (c - i) / (i + 1);
            }
        }
        for (i, r) in self.rhs.coeffs().iter().enumerate() {
            d[i] -= BigInt::from_biguint(Sign::Plus, r.clone());
        }
        while d.last().is_some_and(|v| v.is_zero()) {
            d.pop();
        }
        d
    }
}

/// Least integer `x0 ≥ 2` with `x0^gap ≥ sum`.
fn least_root_bound(sum: &BigUint, gap: usize) -> u64 {
    let gap = gap as u32;
    let mut x0 = sum.nth_root(gap).iter_u64_digits().next().unwrap_or(0).max(2);
    while BigUint::from(x0).pow(gap) < *sum {
        x0 += 1;
    }
    x0
}

/// Coefficients of `p(x + a)`.
fn taylor_shift(p: &[BigInt], a: u64) -> Vec<BigInt> {
    let a = BigInt::from(a);
    let mut out = p.to_vec();
    let n = out.len();
    for i in 0..n {
        for j in (i..n - 1).rev() {
            let t = &out[j + 1] * &a;
            out[j] += t;
        }
    }
    out
}

fn nonnegative_after_shift(p: &[BigInt], a: u64) -> bool {
    taylor_shift(p, a).iter().all(|c| !c.is_negative())
}

/// Least `a ≥ 2` such that `p(x + a)` has nonnegative coefficients; `p` must
/// have positive leading coefficient. Shifting a nonnegative polynomial by a
/// positive amount keeps it nonnegative, so the predicate is monotone in `a`.
fn taylor_threshold(p: &[BigInt]) -> u64 {
    if p.is_empty() || nonnegative_after_shift(p, 2) {
        return 2;
    }
    let mut hi = 4u64;
    while !nonnegative_after_shift(p, hi) {
        hi = hi.saturating_mul(2);
    }
    let mut lo = hi / 2;
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if nonnegative_after_shift(p, mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

/// Least `c ≥ 2s` satisfying all three sweep inequalities for every `x ≥ 2`,
/// with a certificate for each.
pub fn choose_c(params: &SweepParameters, table: &SweepTable) -> Result<ExponentChoice> {
    params.validate()?;
    if table.k() != params.k {
        return Err(Error::input("sweep table does not match the parameters"));
    }
    let bounds = Bound::for_sweep(params, table);
    let start = (2 * params.s).max(1) as u32;
    'c: for c in start..=MAX_EXPONENT {
        let mut certificates = Vec::with_capacity(bounds.len());
        for b in &bounds {
            match b.certify(c)? {
                Some(cert) => certificates.push(cert),
                None => continue 'c,
            }
        }
        return Ok(ExponentChoice { c, bounds, certificates });
    }
    Err(Error::resource(format!("no exponent up to {MAX_EXPONENT} satisfies the bounds")))
}

#[cfg(test)]
mod tests {
    use super::super::sweep_polys;
    use super::*;

    fn choose(params: &SweepParameters) -> ExponentChoice {
        choose_c(params, &sweep_polys(params).unwrap()).unwrap()
    }

    #[test]
    fn two_p4_exponent() {
        let params = SweepParameters::two_p4();
        let ch = choose(&params);
        assert_eq!(ch.c, 16);
        let rhs: Vec<String> = ch.bounds.iter().map(|b| b.rhs.to_string()).collect();
        assert_eq!(rhs[0], "2+2x^2+10x^3+302x^4+148x^5+28x^6+2x^7");
        assert_eq!(rhs[1], "3+10x^2+50x^3+1500x^4+440x^5+40x^6");
        assert_eq!(rhs[2], "x+8x^2+40x^3+1200x^4+352x^5+32x^6");
        assert_eq!(ch.first_violation(2_000), None);
        // c = 15 fails the second bound at x = 2.
        assert!(!ch.bounds[1].holds_at(15, 2));
    }

    #[test]
    fn smallest_instance() {
        let params = SweepParameters::new(1, 1, 0, Polynomial::zero(), Polynomial::zero()).unwrap();
        let ch = choose(&params);
        assert_eq!(ch.c, 3);
        assert!(!ch.bounds[0].holds_at(2, 2));
    }

    #[test]
    fn taylor_tail_without_degree_gap() {
        // x^3 ≥ x^3 + 0 holds with equality; x^3 ≥ 2x^3 fails.
        let eq = Bound { kind: BoundKind::Power, rhs: Polynomial::monomial(1, 3) };
        assert!(eq.certify(3).unwrap().is_some());
        let big = Bound { kind: BoundKind::Power, rhs: Polynomial::monomial(2, 3) };
        assert!(big.certify(3).unwrap().is_none());
        // x^2 − (x−1)^2 = 2x − 1 ≥ x + 2 fails at x = 2 only.
        let diff = Bound { kind: BoundKind::Difference, rhs: "x+2".parse().unwrap() };
        assert!(diff.certify(2).unwrap().is_none());
        assert!(diff.holds_at(2, 3));
        let cert = diff.certify(3).unwrap().unwrap();
        assert!(cert.x0 >= 2);
    }

    #[test]
    fn shift_threshold() {
        // (x − 5)(x − 6) = x² − 11x + 30 is nonnegative beyond 6.
        let p: Vec<BigInt> = [30, -11, 1].iter().map(|&v| BigInt::from(v)).collect();
        let a = taylor_threshold(&p);
        assert!(nonnegative_after_shift(&p, a));
        assert!(a >= 6);
    }
}
