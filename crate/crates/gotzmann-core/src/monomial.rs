//! Exponent-vector monomials: degree, lex comparison, structural accessors,
//! and the canonical text format.
//!
//! A monomial `x_1^{a_1} ... x_n^{a_n}` is stored as its exponent vector.
//! Exponents are `u64` and every arithmetic step is overflow-checked; a sum
//! or product that leaves the 64-bit range raises [`Error::Overflow`]
//! instead of wrapping.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};

/// A 1-based variable index: `x_i` with `1 <= i <= nvars`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarIndex(usize);

impl VarIndex {
    /// Validates `1 <= index <= nvars`.
    pub fn new(index: usize, nvars: usize) -> Result<Self> {
        if index == 0 || index > nvars {
            return Err(Error::IndexOutOfRange { index, nvars });
        }
        Ok(VarIndex(index))
    }

    /// The 1-based index value.
    pub fn get(self) -> usize {
        self.0
    }
}

impl fmt::Display for VarIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.0)
    }
}

/// A monomial in `nvars` variables, the universal currency of this crate.
///
/// The unit monomial (all exponents zero) is a valid value; it denotes `1`.
/// Values are immutable after construction and all operations are pure.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u64>,
    degree: u64,
}

impl Monomial {
    /// Builds a monomial from its exponent vector. Needs at least one
    /// variable, and the total degree must fit in a `u64`.
    pub fn new(exps: Vec<u64>) -> Result<Self> {
        if exps.is_empty() {
            return Err(Error::PreconditionViolation(
                "a monomial needs at least one variable",
            ));
        }
        let mut degree: u64 = 0;
        for &e in &exps {
            degree = degree.checked_add(e).ok_or(Error::Overflow)?;
        }
        Ok(Monomial { exps, degree })
    }

    /// The unit monomial `1` in `nvars` variables.
    pub fn unit(nvars: usize) -> Result<Self> {
        Self::new(vec![0; nvars])
    }

    /// The single variable `x_index` in `nvars` variables.
    pub fn variable(nvars: usize, index: usize) -> Result<Self> {
        Self::power(nvars, index, 1)
    }

    /// The pure power `x_index^exp` in `nvars` variables.
    pub fn power(nvars: usize, index: usize, exp: u64) -> Result<Self> {
        VarIndex::new(index, nvars)?;
        let mut exps = vec![0; nvars];
        exps[index - 1] = exp;
        Self::new(exps)
    }

    /// Builds a monomial from a list of 1-based factor indices, e.g.
    /// `[2, 3, 3]` for `x2*x3^2`. Order does not matter.
    pub fn from_factors(nvars: usize, factors: &[usize]) -> Result<Self> {
        let mut exps = vec![0u64; nvars];
        for &i in factors {
            VarIndex::new(i, nvars)?;
            exps[i - 1] = exps[i - 1].checked_add(1).ok_or(Error::Overflow)?;
        }
        Self::new(exps)
    }

    pub(crate) fn from_parts(exps: Vec<u64>, degree: u64) -> Self {
        debug_assert_eq!(exps.iter().sum::<u64>(), degree);
        Monomial { exps, degree }
    }

    /// Number of variables of the ambient ring.
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    /// Total degree, the sum of all exponents.
    pub fn degree(&self) -> u64 {
        self.degree
    }

    /// The exponent vector.
    pub fn exponents(&self) -> &[u64] {
        &self.exps
    }

    /// The exponent of `x_index`.
    pub fn exponent(&self, index: VarIndex) -> u64 {
        self.exps[index.get() - 1]
    }

    /// Whether this is the unit monomial `1`.
    pub fn is_unit(&self) -> bool {
        self.degree == 0
    }

    /// Lexicographic comparison within one `S_{n,d}`: greater iff the
    /// leftmost nonzero coordinate of the exponent difference is positive.
    ///
    /// Comparing across dimensions or degrees is an error, not an extension
    /// of the order.
    pub fn lex_cmp(&self, other: &Monomial) -> Result<Ordering> {
        self.check_same_ring(other)?;
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        Ok(self.exps.cmp(&other.exps))
    }

    /// Smallest index `i` with `x_i` dividing the monomial.
    pub fn min_index(&self) -> Result<VarIndex> {
        match self.exps.iter().position(|&e| e > 0) {
            Some(p) => Ok(VarIndex(p + 1)),
            None => Err(Error::UnitMonomial),
        }
    }

    /// Largest index `i` with `x_i` dividing the monomial.
    pub fn max_index(&self) -> Result<VarIndex> {
        match self.exps.iter().rposition(|&e| e > 0) {
            Some(p) => Ok(VarIndex(p + 1)),
            None => Err(Error::UnitMonomial),
        }
    }

    /// The last variable dividing the monomial, i.e. the one at `max_index`.
    pub fn lambda_var(&self) -> Result<VarIndex> {
        self.max_index()
    }

    /// The prefix of degree `k`: the first `k` factors when the monomial is
    /// written `x_{i_1}...x_{i_d}` with `i_1 <= ... <= i_d`. Equivalently,
    /// the unique degree-`k` divisor `v` with `max(v) <= min(self/v)`.
    pub fn prefix(&self, k: u64) -> Result<Monomial> {
        if k > self.degree {
            return Err(Error::RangeError {
                value: k,
                limit: self.degree,
            });
        }
        let mut out = vec![0u64; self.nvars()];
        let mut remaining = k;
        for (i, &e) in self.exps.iter().enumerate() {
            if remaining == 0 {
                break;
            }
            let take = e.min(remaining);
            out[i] = take;
            remaining -= take;
        }
        Ok(Monomial::from_parts(out, k))
    }

    /// Componentwise sum of exponent vectors.
    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_same_ring(other)?;
        let mut exps = Vec::with_capacity(self.nvars());
        for (&a, &b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_add(b).ok_or(Error::Overflow)?);
        }
        let degree = self
            .degree
            .checked_add(other.degree)
            .ok_or(Error::Overflow)?;
        Ok(Monomial::from_parts(exps, degree))
    }

    /// Multiplication by a single variable `x_index`.
    pub fn mul_var(&self, index: VarIndex) -> Result<Monomial> {
        VarIndex::new(index.get(), self.nvars())?;
        let mut exps = self.exps.clone();
        exps[index.get() - 1] = exps[index.get() - 1]
            .checked_add(1)
            .ok_or(Error::Overflow)?;
        let degree = self.degree.checked_add(1).ok_or(Error::Overflow)?;
        Ok(Monomial::from_parts(exps, degree))
    }

    /// Componentwise difference; `other` must divide `self`.
    pub fn div(&self, other: &Monomial) -> Result<Monomial> {
        self.check_same_ring(other)?;
        let mut exps = Vec::with_capacity(self.nvars());
        for (&a, &b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_sub(b).ok_or(Error::NotDivisible)?);
        }
        Ok(Monomial::from_parts(exps, self.degree - other.degree))
    }

    /// Whether `self` divides `other` componentwise.
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.check_same_ring(other)?;
        Ok(self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b))
    }

    fn check_same_ring(&self, other: &Monomial) -> Result<()> {
        if self.nvars() != other.nvars() {
            return Err(Error::DimensionMismatch {
                left: self.nvars(),
                right: other.nvars(),
            });
        }
        Ok(())
    }

    /// Parses the canonical text grammar
    /// `mono := "1" | factor ("*" factor)*`, `factor := "x" INT ("^" INT)?`,
    /// or the alternative comma-separated exponent list, e.g. `0,2,1,0`.
    ///
    /// Factor input is liberal: indices may repeat or appear out of order,
    /// and exponents accumulate. Output via [`fmt::Display`] is canonical.
    pub fn parse(text: &str, nvars: usize) -> Result<Self> {
        if nvars == 0 {
            return Err(Error::PreconditionViolation(
                "a monomial needs at least one variable",
            ));
        }
        if text.contains(',') {
            return Self::parse_exponent_list(text, nvars);
        }
        let bytes = text.as_bytes();
        let mut pos = 0usize;
        skip_ws(bytes, &mut pos);
        if pos == bytes.len() {
            return Err(Error::ParseError {
                position: pos,
                message: String::from("empty input"),
            });
        }
        if bytes[pos] == b'1' {
            let after = pos + 1;
            let mut end = after;
            skip_ws(bytes, &mut end);
            if end == bytes.len() {
                return Self::unit(nvars);
            }
            return Err(Error::ParseError {
                position: after,
                message: String::from("unexpected input after \"1\""),
            });
        }
        let mut exps = vec![0u64; nvars];
        loop {
            if pos == bytes.len() || bytes[pos] != b'x' {
                return Err(Error::ParseError {
                    position: pos,
                    message: String::from("expected a factor \"x<index>\""),
                });
            }
            pos += 1;
            let index = parse_uint(bytes, &mut pos)? as usize;
            if index == 0 || index > nvars {
                return Err(Error::IndexOutOfRange { index, nvars });
            }
            let mut exp = 1u64;
            if pos < bytes.len() && bytes[pos] == b'^' {
                pos += 1;
                exp = parse_uint(bytes, &mut pos)?;
            }
            exps[index - 1] = exps[index - 1].checked_add(exp).ok_or(Error::Overflow)?;
            skip_ws(bytes, &mut pos);
            if pos == bytes.len() {
                break;
            }
            if bytes[pos] != b'*' {
                return Err(Error::ParseError {
                    position: pos,
                    message: String::from("expected '*' between factors"),
                });
            }
            pos += 1;
            skip_ws(bytes, &mut pos);
        }
        Self::new(exps)
    }

    fn parse_exponent_list(text: &str, nvars: usize) -> Result<Self> {
        let mut exps = Vec::with_capacity(nvars);
        let mut offset = 0usize;
        for piece in text.split(',') {
            let trimmed = piece.trim();
            let here = offset + (piece.len() - piece.trim_start().len());
            if trimmed.is_empty() || !trimmed.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::ParseError {
                    position: here,
                    message: String::from("expected a non-negative integer exponent"),
                });
            }
            let value: u64 = trimmed.parse().map_err(|_| Error::ParseError {
                position: here,
                message: String::from("exponent does not fit in 64 bits"),
            })?;
            exps.push(value);
            offset += piece.len() + 1;
        }
        if exps.len() != nvars {
            return Err(Error::ParseError {
                position: text.len(),
                message: format!("expected {nvars} exponents, got {}", exps.len()),
            });
        }
        Self::new(exps)
    }
}

fn skip_ws(bytes: &[u8], pos: &mut usize) {
    while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
        *pos += 1;
    }
}

fn parse_uint(bytes: &[u8], pos: &mut usize) -> Result<u64> {
    let start = *pos;
    let mut value: u64 = 0;
    while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
        value = value
            .checked_mul(10)
            .and_then(|v| v.checked_add(u64::from(bytes[*pos] - b'0')))
            .ok_or(Error::ParseError {
                position: start,
                message: String::from("integer does not fit in 64 bits"),
            })?;
        *pos += 1;
    }
    if *pos == start {
        return Err(Error::ParseError {
            position: start,
            message: String::from("expected digits"),
        });
    }
    Ok(value)
}

impl fmt::Display for Monomial {
    /// Canonical form: ascending variable indices, `^` omitted for
    /// exponent 1, `1` for the unit monomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
