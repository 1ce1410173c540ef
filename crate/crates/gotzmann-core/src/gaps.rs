//! Gaps and cogaps of a monomial, the mu function on lexintervals, and the
//! closed-form maxgen formulas.
//!
//! For `u` of degree `d`, `gaps(u) = L(u) \ B(u)` and `cogaps(u)` is the
//! lexinterval of the same cardinality `g` ending at `u`; the monomial
//! `u~ = pred^g(u)` marks where the cogaps start. Everything here comes in
//! two routes, an enumeration and a closed form, so each can audit the
//! other.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::arith::{self, binomial};
use crate::borel::{self, borel_size_memo, MaxgenMonomial};
use crate::error::{Error, Result};
use crate::lex::{self, MonomialSet};
use crate::monomial::{Monomial, VarIndex};

/// Gaps, cogaps, and their maxgen witnesses for one monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapReport {
    pub gaps: MonomialSet,
    pub cogaps: MonomialSet,
    pub u_tilde: Monomial,
    pub gap_count: u64,
    pub maxgen_gaps: MaxgenMonomial,
    pub maxgen_cogaps: MaxgenMonomial,
}

impl fmt::Display for GapReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "g={}, u~={}, gaps={:?}, cogaps={:?}, maxgen(gaps)={}, maxgen(cogaps)={}",
            self.gap_count,
            self.u_tilde,
            self.gaps,
            self.cogaps,
            self.maxgen_gaps,
            self.maxgen_cogaps
        )
    }
}

/// Walks the factors of a monomial written `x_{i_1}...x_{i_d}` with
/// `i_1 <= ... <= i_d`, one position at a time.
struct FactorCursor<'a> {
    exps: &'a [u64],
    var: usize, // 0-based index of the current variable
    used: u64,  // factors of that variable already consumed
}

impl<'a> FactorCursor<'a> {
    fn new(exps: &'a [u64]) -> Self {
        FactorCursor {
            exps,
            var: 0,
            used: 0,
        }
    }

    /// Consumes the next factor and returns its 1-based variable index.
    fn next_factor(&mut self) -> usize {
        while self.used == self.exps[self.var] {
            self.var += 1;
            self.used = 0;
        }
        self.used += 1;
        self.var + 1
    }

    /// The variable index of the factor after the current position.
    /// Must only be called when that factor exists.
    fn peek_factor(&self) -> usize {
        let (mut v, mut u) = (self.var, self.used);
        loop {
            if u < self.exps[v] {
                return v + 1;
            }
            v += 1;
            u = 0;
        }
    }
}

/// All monomials of degree `degree` in the variables `x_lo..x_nvars`,
/// inside the ambient `nvars`-variable ring.
fn enumerate_window(nvars: usize, lo: usize, degree: u64, cap: usize) -> Result<Vec<Monomial>> {
    let total = lex::count(nvars - lo + 1, degree)?;
    if total > cap as u64 {
        return Err(Error::EnumerationCapExceeded {
            needed: Some(total),
            cap: cap as u64,
        });
    }
    let mut out = Vec::with_capacity(total as usize);
    let mut exps = vec![0u64; nvars];
    fill_window(&mut out, &mut exps, lo - 1, degree, nvars);
    Ok(out)
}

fn fill_window(
    out: &mut Vec<Monomial>,
    exps: &mut Vec<u64>,
    idx: usize,
    remaining: u64,
    nvars: usize,
) {
    if idx == nvars - 1 {
        exps[idx] = remaining;
        let degree: u64 = exps.iter().sum();
        out.push(Monomial::from_parts(exps.clone(), degree));
        exps[idx] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        exps[idx] = e;
        fill_window(out, exps, idx + 1, remaining - e, nvars);
    }
    exps[idx] = 0;
}

/// `gaps(u) = L(u) \ B(u)` by materializing both sides.
pub fn gaps_enumerated(u: &Monomial, cap: usize) -> Result<MonomialSet> {
    let segment = lex::lexsegment(u, cap)?;
    let closure = borel::borel_closure(u, cap)?;
    segment.difference(&closure)
}

/// `gaps(u)` through the structural decomposition: the disjoint union over
/// prefixes `u_k` of the products `A1(u_k) * A2(u/u_k)`, where
/// `A1(v) = B(v) \ {v}` and `A2(v)` collects the monomials of the same
/// degree supported strictly above `min(v)`.
///
/// Never materializes `L(u)`, so it stays cheap whenever the gap set itself
/// is small.
pub fn gaps_structural(u: &Monomial, cap: usize) -> Result<MonomialSet> {
    let n = u.nvars();
    let d = u.degree();
    let mut out: BTreeSet<Vec<u64>> = BTreeSet::new();
    if d >= 2 {
        let mut memo = BTreeMap::new();
        let mut pre = vec![0u64; n];
        let mut cursor = FactorCursor::new(u.exponents());
        let mut pure_x1 = true;
        for k in 1..d {
            let var_k = cursor.next_factor();
            pre[var_k - 1] += 1;
            if var_k > 1 {
                pure_x1 = false;
            }
            let next_var = cursor.peek_factor();
            if next_var == n {
                // Every later position is also x_n, so A2 stays empty.
                break;
            }
            if pure_x1 {
                continue; // A1(x1^k) is empty
            }
            let closure_size = borel_size_memo(&pre, &mut memo)?;
            if closure_size - 1 > cap as u64 {
                return Err(Error::EnumerationCapExceeded {
                    needed: Some(closure_size - 1),
                    cap: cap as u64,
                });
            }
            let prefix = Monomial::from_parts(pre.clone(), k);
            let a1 = borel::borel_closure(&prefix, closure_size as usize)?;
            let a2 = enumerate_window(n, next_var + 1, d - k, cap)?;
            for w1 in &a1 {
                if w1 == &prefix {
                    continue;
                }
                for w2 in &a2 {
                    out.insert(w1.mul(w2)?.exponents().to_vec());
                    if out.len() > cap {
                        return Err(Error::EnumerationCapExceeded {
                            needed: None,
                            cap: cap as u64,
                        });
                    }
                }
            }
        }
    }
    Ok(MonomialSet::from_exps_set(n, d, out))
}

/// `|gaps(u)|` without materializing anything:
/// `sum_k (|B(pre_k(u))| - 1) * |S_{n - i_{k+1}, d-k}|`.
///
/// The walk visits every factor position once, so the cost grows with the
/// degree up to the pure-`x_n` tail.
// TODO: collapse runs of equal factors into closed-form partial sums so
// monomials with huge interior exponents stay O(n^2) instead of O(d^2).
pub fn gap_count(u: &Monomial) -> Result<u64> {
    let n = u.nvars();
    let d = u.degree();
    if d < 2 {
        return Ok(0);
    }
    let mut memo = BTreeMap::new();
    let mut pre = vec![0u64; n];
    let mut cursor = FactorCursor::new(u.exponents());
    let mut pure_x1 = true;
    let mut total: u64 = 0;
    for k in 1..d {
        let var_k = cursor.next_factor();
        pre[var_k - 1] += 1;
        if var_k > 1 {
            pure_x1 = false;
        }
        let next_var = cursor.peek_factor();
        if next_var == n {
            break;
        }
        if pure_x1 {
            continue;
        }
        let a1 = borel_size_memo(&pre, &mut memo)? - 1;
        let a2 = lex::count(n - next_var, d - k)?;
        total = arith::add(total, arith::mul(a1, a2)?)?;
    }
    Ok(total)
}

/// Assembles gaps, cogaps, `u~`, and both maxgen witnesses.
///
/// The gap count drives the predecessor walk, and the gap set comes from
/// the structural decomposition, so the report stays computable when
/// `L(u)` is far too large to hold but `g` is small.
pub fn gap_report(u: &Monomial, cap: usize) -> Result<GapReport> {
    let g = gap_count(u)?;
    let gaps = gaps_structural(u, cap)?;
    debug_assert_eq!(g, gaps.len() as u64);
    let (cogaps, u_tilde) = lex::pred_iter(u, g, cap)?;
    let maxgen_gaps = borel::maxgen(&gaps)?;
    let maxgen_cogaps = borel::maxgen(&cogaps)?;
    Ok(GapReport {
        gaps,
        cogaps,
        u_tilde,
        gap_count: g,
        maxgen_gaps,
        maxgen_cogaps,
    })
}

/// `mu(u2, u1) = maxgen(L*(u1, u2))`, the product of `lambda(v)` over
/// `u1 > v >= u2`. Requires `u1 >= u2`; `mu(u, u) = 1` by the empty-product
/// convention.
pub fn mu_enumerated(u2: &Monomial, u1: &Monomial, cap: usize) -> Result<MaxgenMonomial> {
    if u1.lex_cmp(u2)? == Ordering::Less {
        return Err(Error::OrderViolation);
    }
    let steps = lex::rank(u2)? - lex::rank(u1)?;
    if steps > cap as u64 {
        return Err(Error::EnumerationCapExceeded {
            needed: Some(steps),
            cap: cap as u64,
        });
    }
    let mut counts = vec![0u64; u1.nvars()];
    let mut v = u2.clone();
    for _ in 0..steps {
        counts[v.max_index()?.get() - 1] += 1;
        v = lex::predecessor(&v)?;
    }
    debug_assert_eq!(&v, u1);
    MaxgenMonomial::from_m_vector(counts)
}

/// Closed form for `mu(v*x_m^k, v*x_{m-1}^k)` with `max(v) <= m-1`:
/// `x_m^k * prod_{i=1}^{n-m} x_{m+i}^{C(k-1+i, i+1)}`, independent of `v`.
pub fn mu_power_drop(v: &Monomial, m: VarIndex, k: u64, nvars: usize) -> Result<MaxgenMonomial> {
    if v.nvars() != nvars {
        return Err(Error::DimensionMismatch {
            left: v.nvars(),
            right: nvars,
        });
    }
    let m = m.get();
    if m < 2 || m > nvars {
        return Err(Error::PreconditionViolation(
            "mu_power_drop needs 2 <= m <= nvars",
        ));
    }
    if k == 0 {
        return Err(Error::PreconditionViolation("mu_power_drop needs k >= 1"));
    }
    if !v.is_unit() && v.max_index()?.get() >= m {
        return Err(Error::PreconditionViolation(
            "mu_power_drop needs max(v) <= m - 1",
        ));
    }
    let mut exps = vec![0u64; nvars];
    exps[m - 1] = k;
    for i in 1..=(nvars - m) as u64 {
        exps[m - 1 + i as usize] = binomial(k - 1 + i, i + 1)?;
    }
    MaxgenMonomial::from_m_vector(exps)
}

/// Closed form in four variables for
/// `mu(x2^r*x4^s, x2^{r+i}*x4^{s-i}) = x3^i * x4^{C(i+1,2) + i(s-i)}`.
/// The result does not depend on `r`.
pub fn mu_two_var(r: u64, s: u64, i: u64) -> Result<MaxgenMonomial> {
    let _ = r;
    if i == 0 || i > s {
        return Err(Error::PreconditionViolation("mu_two_var needs 1 <= i <= s"));
    }
    let last = arith::add(binomial(i + 1, 2)?, arith::mul(i, s - i)?)?;
    MaxgenMonomial::from_m_vector(vec![0, 0, i, last])
}

/// Closed form for `maxgen(gaps(u))`: over each prefix position `k`, the
/// window maxgen above `i_{k+1}` raised to the power `|B(pre_k(u))| - 1`.
pub fn maxgen_gaps_formula(u: &Monomial) -> Result<MaxgenMonomial> {
    let n = u.nvars();
    let d = u.degree();
    let mut out = vec![0u64; n];
    if d >= 2 {
        let mut memo = BTreeMap::new();
        let mut pre = vec![0u64; n];
        let mut cursor = FactorCursor::new(u.exponents());
        let mut pure_x1 = true;
        for k in 1..d {
            let var_k = cursor.next_factor();
            pre[var_k - 1] += 1;
            if var_k > 1 {
                pure_x1 = false;
            }
            let next_var = cursor.peek_factor();
            if next_var == n {
                break;
            }
            if pure_x1 {
                continue;
            }
            let mult = borel_size_memo(&pre, &mut memo)? - 1;
            for j in next_var + 1..=n {
                let top = (d - k - 1) + (j - next_var - 1) as u64;
                let bin = binomial(top, d - k - 1)?;
                out[j - 1] = arith::add(out[j - 1], arith::mul(mult, bin)?)?;
            }
        }
    }
    MaxgenMonomial::from_m_vector(out)
}

/// The last-variable shift: if `w = maxgen(gaps(u)) = prod x_i^{k_i}`, then
/// `maxgen(gaps(u*xn)) = prod x_j^{k_1 + ... + k_j}`, a pure cumulative-sum
/// transform of the exponents.
pub fn maxgen_gaps_xn_shift(w: &MaxgenMonomial) -> Result<MaxgenMonomial> {
    let mut acc = 0u64;
    let mut out = Vec::with_capacity(w.monomial().nvars());
    for &k in w.monomial().exponents() {
        acc = arith::add(acc, k)?;
        out.push(acc);
    }
    MaxgenMonomial::from_m_vector(out)
}
