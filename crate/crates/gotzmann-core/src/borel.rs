//! Borel closures `B(u)`, stability checks, shades, lexification, and
//! maxgen monomials.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::arith::{self, binomial};
use crate::error::{Error, Result};
use crate::lex::{self, MonomialSet};
use crate::monomial::Monomial;

/// A monomial read as a census: the exponent of `x_i` is `m_i(B)`, the
/// number of members of some set `B` whose max index is `i`. Its degree is
/// `|B|`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MaxgenMonomial(Monomial);

impl MaxgenMonomial {
    /// Wraps an m-vector `(m_1, ..., m_n)`.
    pub fn from_m_vector(counts: Vec<u64>) -> Result<Self> {
        Ok(MaxgenMonomial(Monomial::new(counts)?))
    }

    /// The underlying monomial.
    pub fn monomial(&self) -> &Monomial {
        &self.0
    }

    pub fn into_monomial(self) -> Monomial {
        self.0
    }

    /// Degree of the maxgen monomial, i.e. the cardinality of the set it
    /// describes.
    pub fn degree(&self) -> u64 {
        self.0.degree()
    }
}

impl fmt::Display for MaxgenMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for MaxgenMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// The smallest Borel-stable set containing `u`: the closure of `{u}` under
/// the exchange moves `v -> x_i*v/x_j` for `i <= j`, `x_j | v`.
///
/// Worklist fixed point; adjacent moves `j -> j-1` generate all the others.
/// `borel_closure(1) = {1}` by convention.
pub fn borel_closure(u: &Monomial, cap: usize) -> Result<MonomialSet> {
    let nvars = u.nvars();
    let mut seen: BTreeSet<Vec<u64>> = BTreeSet::new();
    let mut work: Vec<Vec<u64>> = Vec::new();
    seen.insert(u.exponents().to_vec());
    work.push(u.exponents().to_vec());
    while let Some(exps) = work.pop() {
        for j in 1..nvars {
            if exps[j] == 0 {
                continue;
            }
            let mut next = exps.clone();
            next[j] -= 1;
            next[j - 1] += 1;
            if seen.insert(next.clone()) {
                if seen.len() > cap {
                    return Err(Error::EnumerationCapExceeded {
                        needed: None,
                        cap: cap as u64,
                    });
                }
                work.push(next);
            }
        }
    }
    Ok(MonomialSet::from_exps_set(nvars, u.degree(), seen))
}

/// `|B(u)|` by the recursion on the last variable,
/// `|B(v*x_m^r)| = sum_i |B(v*x_{m-1}^{r-i})|`, never materializing the set.
pub fn borel_size(u: &Monomial) -> Result<u64> {
    let mut memo = BTreeMap::new();
    borel_size_memo(u.exponents(), &mut memo)
}

pub(crate) fn borel_size_memo(exps: &[u64], memo: &mut BTreeMap<Vec<u64>, u64>) -> Result<u64> {
    let m = match exps.iter().rposition(|&e| e > 0) {
        Some(p) if p > 0 => p,
        // x1^k and the unit monomial are their own closures.
        _ => return Ok(1),
    };
    // The x1 exponent never matters: B(x1*u) = x1*B(u). For supports
    // inside {x1, x2, x3} that leaves the two closed forms
    // |B(x2^r)| = r+1 and |B(x2^r*x3^s)| = C(s+1,2) + (r+1)(s+1), which
    // also bottom out the recursion below at m = 3.
    if m == 1 {
        return arith::add(exps[1], 1);
    }
    if m == 2 {
        let (r, s) = (exps[1], exps[2]);
        return arith::add(
            binomial(arith::add(s, 1)?, 2)?,
            arith::mul(arith::add(r, 1)?, arith::add(s, 1)?)?,
        );
    }
    if let Some(&v) = memo.get(exps) {
        return Ok(v);
    }
    let r = exps[m];
    let mut sub = exps.to_vec();
    sub[m] = 0;
    let base = sub[m - 1];
    let mut total: u64 = 0;
    for i in 0..=r {
        sub[m - 1] = arith::add(base, r - i)?;
        total = arith::add(total, borel_size_memo(&sub, memo)?)?;
    }
    memo.insert(exps.to_vec(), total);
    Ok(total)
}

/// Whether the set is closed under all exchange moves `v -> x_i*v/x_j`,
/// `i <= j`. Checking the adjacent moves suffices.
pub fn is_borel_stable(set: &MonomialSet) -> bool {
    for m in set {
        let exps = m.exponents();
        for j in 1..set.nvars() {
            if exps[j] == 0 {
                continue;
            }
            let mut next = exps.to_vec();
            next[j] -= 1;
            next[j - 1] += 1;
            if !set.contains(&Monomial::from_parts(next, m.degree())) {
                return false;
            }
        }
    }
    true
}

/// The shade `shad(B) = {x_i*u : u in B, 1 <= i <= n}`, one degree up.
pub fn shade(set: &MonomialSet, cap: usize) -> Result<MonomialSet> {
    let nvars = set.nvars();
    let degree = arith::add(set.degree(), 1)?;
    let mut out: BTreeSet<Vec<u64>> = BTreeSet::new();
    for m in set {
        for i in 0..nvars {
            let mut exps = m.exponents().to_vec();
            exps[i] = exps[i].checked_add(1).ok_or(Error::Overflow)?;
            out.insert(exps);
            if out.len() > cap {
                return Err(Error::EnumerationCapExceeded {
                    needed: None,
                    cap: cap as u64,
                });
            }
        }
    }
    Ok(MonomialSet::from_exps_set(nvars, degree, out))
}

/// The iterated shade `shad^i(B)`; `i = 0` returns the set unchanged.
pub fn shade_iter(set: &MonomialSet, i: u32, cap: usize) -> Result<MonomialSet> {
    let mut out = set.clone();
    for _ in 0..i {
        out = shade(&out, cap)?;
    }
    Ok(out)
}

/// The lexification of `B`: the unique lexsegment `B^lex = L(w_B)` in the
/// same `S_{n,d}` with `|B^lex| = |B|`. Returns `(B^lex, w_B)`.
pub fn lexify(set: &MonomialSet) -> Result<(MonomialSet, Monomial)> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    let w = lex::unrank(set.nvars(), set.degree(), set.len() as u64 - 1)?;
    let seg = lex::lexsegment(&w, set.len())?;
    Ok((seg, w))
}

/// The m-vector `(m_1, ..., m_n)` of the set: `m_i` counts members whose
/// max index is `i`. Zeros are kept over the full index range.
pub fn m_vector(set: &MonomialSet) -> Result<Vec<u64>> {
    let mut counts = alloc::vec![0u64; set.nvars()];
    for m in set {
        let i = m.max_index().map_err(|_| Error::UnitMonomial)?;
        counts[i.get() - 1] = arith::add(counts[i.get() - 1], 1)?;
    }
    Ok(counts)
}

/// `maxgen(B) = prod_{w in B} lambda(w)`, the product of last variables.
/// The empty set yields the unit monomial.
pub fn maxgen(set: &MonomialSet) -> Result<MaxgenMonomial> {
    MaxgenMonomial::from_m_vector(m_vector(set)?)
}

/// Closed form for `maxgen(S_{n,d})`: exponent of `x_i` is
/// `C(d-2+i, d-1)`.
pub fn maxgen_snd(nvars: usize, degree: u64) -> Result<MaxgenMonomial> {
    if nvars == 0 || degree == 0 {
        return Err(Error::PreconditionViolation(
            "maxgen_snd needs nvars >= 1 and degree >= 1",
        ));
    }
    let mut exps = Vec::with_capacity(nvars);
    for i in 1..=nvars as u64 {
        // d - 2 + i computed as (d - 1) + (i - 1) to stay in u64.
        exps.push(binomial(degree - 1 + (i - 1), degree - 1)?);
    }
    MaxgenMonomial::from_m_vector(exps)
}

/// Closed form for `maxgen(S_{l,n,d})`, the monomials of degree `d` in the
/// variables `x_l..x_n`: exponent of `x_j` is `C(d-1+j-l, d-1)` for
/// `j >= l`, zero below.
pub fn maxgen_slnd(l: usize, nvars: usize, degree: u64) -> Result<MaxgenMonomial> {
    if l == 0 || l > nvars || degree == 0 {
        return Err(Error::PreconditionViolation(
            "maxgen_slnd needs 1 <= l <= nvars and degree >= 1",
        ));
    }
    let mut exps = alloc::vec![0u64; nvars];
    for j in l..=nvars {
        exps[j - 1] = binomial(degree - 1 + (j - l) as u64, degree - 1)?;
    }
    MaxgenMonomial::from_m_vector(exps)
}
