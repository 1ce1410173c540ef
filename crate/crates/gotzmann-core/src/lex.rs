//! Successor/predecessor arithmetic, lexsegments and lexintervals, ranking,
//! and enumeration of `S_{n,d}`.
//!
//! Ranks run over descending lex order: `rank(x1^d) = 0`. Conversions use
//! the combinatorial number system over nondecreasing factor lists, with
//! runs of equal factors summed in closed form, so `rank` is O(n) binomials
//! and `unrank` is O(n*d).

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::arith::{self, binomial};
use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// A finite set of monomials of a single degree in `nvars` variables.
///
/// Canonical form: members sorted lex-descending, duplicate-free. The sort
/// keeps diffs, golden files, and merges deterministic.
#[derive(Clone, PartialEq, Eq)]
pub struct MonomialSet {
    nvars: usize,
    degree: u64,
    members: Vec<Monomial>,
}

impl MonomialSet {
    /// The empty set of degree-`degree` monomials in `nvars` variables.
    pub fn empty(nvars: usize, degree: u64) -> Result<Self> {
        if nvars == 0 {
            return Err(Error::PreconditionViolation(
                "a monomial set needs at least one variable",
            ));
        }
        Ok(MonomialSet {
            nvars,
            degree,
            members: Vec::new(),
        })
    }

    /// Builds a set from arbitrary members: validates that all share
    /// `nvars` and `degree`, then sorts descending and deduplicates.
    pub fn from_monomials(nvars: usize, degree: u64, members: Vec<Monomial>) -> Result<Self> {
        let mut set = Self::empty(nvars, degree)?;
        for m in &members {
            if m.nvars() != nvars {
                return Err(Error::DimensionMismatch {
                    left: nvars,
                    right: m.nvars(),
                });
            }
            if m.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: m.degree(),
                });
            }
        }
        set.members = members;
        set.members
            .sort_unstable_by(|a, b| b.exponents().cmp(a.exponents()));
        set.members.dedup();
        Ok(set)
    }

    /// The singleton `{m}`.
    pub fn singleton(m: Monomial) -> Self {
        MonomialSet {
            nvars: m.nvars(),
            degree: m.degree(),
            members: alloc::vec![m],
        }
    }

    /// Internal fast path: a `BTreeSet` of exponent vectors is already
    /// sorted ascending and deduplicated, so reversing gives canonical form.
    pub(crate) fn from_exps_set(nvars: usize, degree: u64, exps: BTreeSet<Vec<u64>>) -> Self {
        let members = exps
            .into_iter()
            .rev()
            .map(|e| Monomial::from_parts(e, degree))
            .collect();
        MonomialSet {
            nvars,
            degree,
            members,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    /// Members in descending lex order.
    pub fn members(&self) -> &[Monomial] {
        &self.members
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Monomial> {
        self.members.iter()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Membership test by binary search on the descending order.
    pub fn contains(&self, m: &Monomial) -> bool {
        if m.nvars() != self.nvars || m.degree() != self.degree {
            return false;
        }
        self.members
            .binary_search_by(|probe| m.exponents().cmp(probe.exponents()))
            .is_ok()
    }

    /// Set difference `self \ other`; both sides must live in the same
    /// `S_{n,d}`.
    pub fn difference(&self, other: &MonomialSet) -> Result<MonomialSet> {
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        // Merge walk over two descending lists.
        let mut out = Vec::new();
        let mut rhs = other.members.iter().peekable();
        for m in &self.members {
            loop {
                match rhs.peek() {
                    Some(r) if r.exponents() > m.exponents() => {
                        rhs.next();
                    }
                    Some(r) if r.exponents() == m.exponents() => break,
                    _ => {
                        out.push(m.clone());
                        break;
                    }
                }
            }
        }
        Ok(MonomialSet {
            nvars: self.nvars,
            degree: self.degree,
            members: out,
        })
    }
}

impl fmt::Debug for MonomialSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str("}")
    }
}

impl<'a> IntoIterator for &'a MonomialSet {
    type Item = &'a Monomial;
    type IntoIter = core::slice::Iter<'a, Monomial>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

/// The half-open lexinterval `L*(upper, lower) = {v : upper > v >= lower}`,
/// represented by its endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LexInterval {
    upper: Monomial,
    lower: Monomial,
}

impl LexInterval {
    /// Requires `upper >= lower` in the same `S_{n,d}`.
    pub fn new(upper: Monomial, lower: Monomial) -> Result<Self> {
        if upper.lex_cmp(&lower)? == Ordering::Less {
            return Err(Error::OrderViolation);
        }
        Ok(LexInterval { upper, lower })
    }

    /// Exclusive upper endpoint.
    pub fn upper(&self) -> &Monomial {
        &self.upper
    }

    /// Inclusive lower endpoint.
    pub fn lower(&self) -> &Monomial {
        &self.lower
    }

    /// Number of elements, `rank(lower) - rank(upper)`, without
    /// materializing anything.
    pub fn count(&self) -> Result<u64> {
        Ok(rank(&self.lower)? - rank(&self.upper)?)
    }

    /// Materializes the interval, newest-first (descending lex).
    pub fn materialize(&self, cap: usize) -> Result<MonomialSet> {
        let size = self.count()?;
        if size > cap as u64 {
            return Err(Error::EnumerationCapExceeded {
                needed: Some(size),
                cap: cap as u64,
            });
        }
        let mut members = Vec::with_capacity(size as usize);
        if size > 0 {
            let mut v = successor(&self.upper)?;
            loop {
                members.push(v.clone());
                if v == self.lower {
                    break;
                }
                v = successor(&v)?;
            }
        }
        Ok(MonomialSet {
            nvars: self.upper.nvars(),
            degree: self.upper.degree(),
            members,
        })
    }
}

/// `|S_{n,d}| = C(n+d-1, d)`, exactly.
pub fn count(nvars: usize, degree: u64) -> Result<u64> {
    if nvars == 0 {
        return Err(Error::PreconditionViolation("count needs nvars >= 1"));
    }
    binomial(arith::add(nvars as u64 - 1, degree)?, degree)
}

/// The next smaller monomial in lex order within `S_{n,d}`.
///
/// Writing `u = v*xn^a` with `m = max(v)`, the successor is
/// `(v/x_m)*x_{m+1}^{a+1}`.
pub fn successor(u: &Monomial) -> Result<Monomial> {
    let n = u.nvars();
    let exps = u.exponents();
    let a = exps[n - 1];
    // m = max(u / xn^a); when there is none, u = xn^d (or the unit).
    let m = match exps[..n - 1].iter().rposition(|&e| e > 0) {
        Some(p) => p, // 0-based
        None => return Err(Error::NoSuccessor),
    };
    let mut out = exps.to_vec();
    out[n - 1] = 0;
    out[m] -= 1;
    out[m + 1] += a + 1;
    Ok(Monomial::from_parts(out, u.degree()))
}

/// The next larger monomial in lex order within `S_{n,d}`; inverse of
/// [`successor`].
///
/// Writing `u = v*x_m^a` with `m = max(u)` and `max(v) < m`, the
/// predecessor is `v*x_{m-1}*xn^{a-1}`.
pub fn predecessor(u: &Monomial) -> Result<Monomial> {
    let n = u.nvars();
    let exps = u.exponents();
    let m = match exps.iter().rposition(|&e| e > 0) {
        Some(p) => p,                             // 0-based
        None => return Err(Error::NoPredecessor), // the unit monomial
    };
    if m == 0 {
        return Err(Error::NoPredecessor); // u = x1^d
    }
    let a = exps[m];
    let mut out = exps.to_vec();
    out[m] = 0;
    out[m - 1] += 1;
    out[n - 1] += a - 1;
    Ok(Monomial::from_parts(out, u.degree()))
}

/// The set `pred_r(u) = {pred^i(u) : 0 <= i < r}` (so `u` itself is
/// included) together with `pred^r(u)`. Satisfies
/// `pred_r(u) = L*(pred^r(u), u)`.
///
/// `r` must not exceed `rank(u)`, otherwise `pred^r(u)` does not exist.
pub fn pred_iter(u: &Monomial, r: u64, cap: usize) -> Result<(MonomialSet, Monomial)> {
    let rk = rank(u)?;
    if r > rk {
        return Err(Error::RangeError {
            value: r,
            limit: rk,
        });
    }
    if r > cap as u64 {
        return Err(Error::EnumerationCapExceeded {
            needed: Some(r),
            cap: cap as u64,
        });
    }
    let mut members = Vec::with_capacity(r as usize);
    let mut v = u.clone();
    for _ in 0..r {
        let p = predecessor(&v)?;
        members.push(core::mem::replace(&mut v, p));
    }
    members.reverse(); // collected smallest-first; canonical order is descending
    Ok((
        MonomialSet {
            nvars: u.nvars(),
            degree: u.degree(),
            members,
        },
        v,
    ))
}

/// The lexsegment `L(u) = {v in S_{n,d} : v >= u}`, materialized.
pub fn lexsegment(u: &Monomial, cap: usize) -> Result<MonomialSet> {
    let size = arith::add(rank(u)?, 1)?;
    if size > cap as u64 {
        return Err(Error::EnumerationCapExceeded {
            needed: Some(size),
            cap: cap as u64,
        });
    }
    let mut members = Vec::with_capacity(size as usize);
    let mut v = Monomial::power(u.nvars(), 1, u.degree())?;
    loop {
        members.push(v.clone());
        if v == *u {
            break;
        }
        v = successor(&v)?;
    }
    Ok(MonomialSet {
        nvars: u.nvars(),
        degree: u.degree(),
        members,
    })
}

/// The lexinterval `L*(u1, u2) = {v : u1 > v >= u2}`, materialized.
pub fn lexinterval_exclusive(u1: &Monomial, u2: &Monomial, cap: usize) -> Result<MonomialSet> {
    LexInterval::new(u1.clone(), u2.clone())?.materialize(cap)
}

/// Position of `u` in descending lex order on its `S_{n,d}`;
/// `rank(x1^d) = 0`.
pub fn rank(u: &Monomial) -> Result<u64> {
    let n = u.nvars();
    let exps = u.exponents();
    let mut remaining = u.degree();
    let mut total: u64 = 0;
    for (j, &e) in exps[..n - 1].iter().enumerate() {
        // Monomials that agree on exponents before x_{j+1} and carry a
        // larger exponent there: summed by the hockey-stick identity.
        if remaining > e {
            let extra = remaining - e - 1;
            let vars_after = (n - 1 - j) as u64;
            total = arith::add(total, binomial(arith::add(vars_after, extra)?, extra)?)?;
        }
        remaining -= e;
    }
    Ok(total)
}

/// Inverse of [`rank`]: the monomial of `S_{nvars,degree}` at position `r`.
pub fn unrank(nvars: usize, degree: u64, r: u64) -> Result<Monomial> {
    let total = count(nvars, degree)?;
    if r >= total {
        return Err(Error::RangeError {
            value: r,
            limit: total,
        });
    }
    let mut exps = alloc::vec![0u64; nvars];
    let mut remaining = degree;
    let mut r = r;
    for (i, slot) in exps.iter_mut().enumerate().take(nvars - 1) {
        let vars_after = nvars - 1 - i;
        // Largest exponent first: blocks of completions in the remaining
        // variables, scanned until r falls inside one.
        let mut a = remaining;
        loop {
            let block = count(vars_after, remaining - a)?;
            if r < block {
                break;
            }
            r -= block;
            debug_assert!(a > 0, "unrank exhausted exponent range");
            a -= 1;
        }
        *slot = a;
        remaining -= a;
        if remaining == 0 {
            break;
        }
    }
    exps[nvars - 1] += remaining;
    Monomial::new(exps)
}
