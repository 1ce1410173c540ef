//! Gotzmann classification: brute-force oracles, the maxgen-equality
//! criterion, and the closed-form thresholds for up to four variables.
//!
//! A set is Gotzmann when its shade is as small as the shade of its
//! lexification; a monomial is Gotzmann when its Borel closure is a
//! Gotzmann set, equivalently when `maxgen(gaps(u)) = maxgen(cogaps(u))`.
//! In up to four variables an exact integer threshold on the last exponent
//! decides the question outright.

use alloc::vec::Vec;

use crate::arith::{self, binomial};
use crate::borel::{self, MaxgenMonomial};
use crate::error::{Error, Result};
use crate::gaps;
use crate::lex::MonomialSet;
use crate::monomial::Monomial;

/// How a verdict was reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Enumeration-backed maxgen comparison.
    Oracle,
    /// Exact integer threshold formula (nvars <= 4).
    ClosedForm,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::ClosedForm => "closed_form",
        }
    }
}

/// Classification verdict with its maxgen witnesses where available.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub monomial: Monomial,
    pub is_gotzmann: bool,
    pub method: Method,
    /// `maxgen(gaps(u))`; present unless it was too expensive to compute.
    pub witness_gaps: Option<MaxgenMonomial>,
    /// `maxgen(cogaps(u))`; absent for closed-form rejections, where only
    /// the gaps side has a cheap formula.
    pub witness_cogaps: Option<MaxgenMonomial>,
}

/// The exact Gotzmann threshold in four variables for `x2^b*x3^c*x4^t`,
/// together with the audit quantities `f(0)` and the constant `f(t)-h(t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ThresholdReport {
    pub b: u64,
    pub c: u64,
    /// Minimal `t` making the monomial Gotzmann.
    pub threshold: u64,
    /// `f(0)`, the `x4`-exponent of `maxgen(gaps(x2^b*x3^c))`.
    pub f0: u64,
    /// `f(t) - h(t)`, independent of `t`.
    pub constant_gap: u64,
}

/// `(b+1)*C(b,2)` is divisible by 3 because `(b-1)b(b+1)` is divisible
/// by 6; the remainder assertion is a tripwire for implementation bugs,
/// never a mathematical possibility.
fn third(value: u64) -> Result<u64> {
    if !value.is_multiple_of(3) {
        return Err(Error::InternalInconsistency(
            "expected divisibility by 3 failed",
        ));
    }
    Ok(value / 3)
}

/// Shade-cardinality test: `|shad(B)| = |shad(B^lex)|`.
///
/// For Borel-stable input the m-vector criterion
/// `maxgen(B) = maxgen(B^lex)` is evaluated as well and any disagreement is
/// an [`Error::InternalInconsistency`].
pub fn is_gotzmann_set_oracle(set: &MonomialSet, cap: usize) -> Result<bool> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    let (blex, _w) = borel::lexify(set)?;
    let shade_b = borel::shade(set, cap)?;
    let shade_lex = borel::shade(&blex, cap)?;
    let by_shades = shade_b.len() == shade_lex.len();
    if set.degree() >= 1 && borel::is_borel_stable(set) {
        let by_maxgen = borel::maxgen(set)? == borel::maxgen(&blex)?;
        if by_shades != by_maxgen {
            return Err(Error::InternalInconsistency(
                "shade-cardinality and m-vector criteria disagree",
            ));
        }
    }
    Ok(by_shades)
}

/// Maxgen-equality oracle: `u` is Gotzmann iff
/// `maxgen(gaps(u)) = maxgen(cogaps(u))`. The unit monomial is Gotzmann by
/// convention.
pub fn is_gotzmann_monomial_oracle(u: &Monomial, cap: usize) -> Result<Verdict> {
    let report = gaps::gap_report(u, cap)?;
    Ok(Verdict {
        monomial: u.clone(),
        is_gotzmann: report.maxgen_gaps == report.maxgen_cogaps,
        method: Method::Oracle,
        witness_gaps: Some(report.maxgen_gaps),
        witness_cogaps: Some(report.maxgen_cogaps),
    })
}

/// Minimal `t` such that `x1^a*x2^b*x3^t` is Gotzmann in three variables:
/// `C(b, 2)`.
pub fn threshold_n3(b: u64) -> Result<u64> {
    binomial(b, 2)
}

/// Minimal `t` such that `x1^a*x2^b*x3^c*x4^t` is Gotzmann in four
/// variables:
/// `C(C(b,2),2) + (b+4)/3*C(b,2) + (b+1)*C(c+1,2) + C(c+1,3) - c`.
pub fn threshold_n4(b: u64, c: u64) -> Result<ThresholdReport> {
    let q = binomial(b, 2)?;
    let nested = binomial(q, 2)?;
    let drift = third(arith::mul(arith::add(b, 4)?, q)?)?;
    let c_square = arith::mul(arith::add(b, 1)?, binomial(arith::add(c, 1)?, 2)?)?;
    let c_cube = binomial(arith::add(c, 1)?, 3)?;
    let gross = arith::add(arith::add(nested, drift)?, arith::add(c_square, c_cube)?)?;
    let threshold = gross
        .checked_sub(c)
        .ok_or(Error::InternalInconsistency("threshold went negative"))?;

    let third_term = third(arith::mul(arith::add(b, 1)?, q)?)?;
    let f0 = arith::add(
        arith::add(third_term, arith::mul(c, q)?)?,
        arith::add(c_square, c_cube)?,
    )?
    .checked_sub(c)
    .ok_or(Error::InternalInconsistency("f(0) went negative"))?;
    let constant_gap = arith::add(
        arith::add(third_term, c_square)?,
        arith::add(c_cube, nested)?,
    )?;

    Ok(ThresholdReport {
        b,
        c,
        threshold,
        f0,
        constant_gap,
    })
}

/// `f(t) = f(0) + t*C(b,2)`, the `x4`-exponent of
/// `maxgen(gaps(x2^b*x3^c*x4^t))`.
pub fn f_of_t(b: u64, c: u64, t: u64) -> Result<u64> {
    let report = threshold_n4(b, c)?;
    arith::add(report.f0, arith::mul(t, binomial(b, 2)?)?)
}

/// `h(t) = (c+t)*C(b,2) - C(C(b,2),2) - c`. May be negative, hence signed.
pub fn h_of_t(b: u64, c: u64, t: u64) -> Result<i64> {
    let q = i128::from(binomial(b, 2)?);
    let value = i128::from(arith::add(c, t)?) * q
        - i128::from(binomial(binomial(b, 2)?, 2)?)
        - i128::from(c);
    i64::try_from(value).map_err(|_| Error::Overflow)
}

/// Threshold-based verdict for up to four variables. The `x1` exponent is
/// irrelevant. Five or more variables have no known closed form.
pub fn is_gotzmann_closed_form(u: &Monomial) -> Result<Verdict> {
    let n = u.nvars();
    if n >= 5 {
        return Err(Error::UnsupportedDimension { nvars: n });
    }
    let exps = u.exponents();
    let is_gotzmann = match n {
        1 | 2 => true,
        3 => exps[2] >= threshold_n3(exps[1])?,
        _ => exps[3] >= threshold_n4(exps[1], exps[2])?.threshold,
    };
    let witness_gaps = gaps::maxgen_gaps_formula(u)?;
    let witness_cogaps = is_gotzmann.then(|| witness_gaps.clone());
    Ok(Verdict {
        monomial: u.clone(),
        is_gotzmann,
        method: Method::ClosedForm,
        witness_gaps: Some(witness_gaps),
        witness_cogaps,
    })
}

/// Least `k <= cap` such that `u*xn^k` is Gotzmann: direct threshold
/// arithmetic for `nvars <= 4`, a monotone search over the oracle
/// otherwise. Gotzmann-ness is upward closed in `k`, and the search
/// asserts that closure on every probe it makes.
///
/// The oracle route gallops upward (doubling `k`) before bisecting, so
/// probes stay near the answer; gap sets grow with `k` and probing the
/// far end of the budget first would be the expensive way around.
pub fn minimal_padding(u: &Monomial, cap: u64, enum_cap: usize) -> Result<u64> {
    let n = u.nvars();
    let exps = u.exponents();
    if n <= 4 {
        let needed = match n {
            1 | 2 => 0,
            3 => threshold_n3(exps[1])?,
            _ => threshold_n4(exps[1], exps[2])?.threshold,
        };
        let k = needed.saturating_sub(exps[n - 1]);
        if k > cap {
            return Err(Error::NotFoundWithinCap { cap });
        }
        return Ok(k);
    }

    let probe = |k: u64| -> Result<bool> {
        let padded = u.mul(&Monomial::power(n, n, k)?)?;
        Ok(is_gotzmann_monomial_oracle(&padded, enum_cap)?.is_gotzmann)
    };
    let mut probes: Vec<(u64, bool)> = Vec::new();

    let at_zero = probe(0)?;
    probes.push((0, at_zero));
    if at_zero {
        return Ok(0);
    }
    // Gallop to the first true probe.
    let (mut lo, mut hi) = (0u64, 1u64.min(cap));
    loop {
        if hi == 0 {
            // cap = 0 and probe(0) was false.
            return Err(Error::NotFoundWithinCap { cap });
        }
        let v = probe(hi)?;
        probes.push((hi, v));
        if v {
            break;
        }
        if hi == cap {
            return Err(Error::NotFoundWithinCap { cap });
        }
        lo = hi;
        hi = hi.saturating_mul(2).min(cap);
    }
    // Invariant: probe(lo) = false, probe(hi) = true.
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        let v = probe(mid)?;
        probes.push((mid, v));
        if v {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    probes.sort_unstable();
    if probes.windows(2).any(|w| w[0].1 && !w[1].1) {
        return Err(Error::InternalInconsistency(
            "Gotzmann region is not upward closed in the padding exponent",
        ));
    }
    Ok(hi)
}
