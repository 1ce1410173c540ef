//! Independent oracles for the integration suites.
//!
//! Everything here recomputes results from definitions, on purpose by
//! different routes than the library: enumeration by recursive composition
//! of exponent vectors instead of successor walks, closures under the full
//! move set instead of adjacent moves, and the raw two-index gap criterion
//! on factor lists.

#![allow(dead_code)]

use std::collections::BTreeSet;

use gotzmann_core::{lex, Monomial, MonomialSet};
use rand::Rng;

/// All of `S_{nvars,degree}` sorted lex-descending, generated by recursive
/// composition of the exponent vector.
pub fn enumerate_snd(nvars: usize, degree: u64) -> Vec<Monomial> {
    fn fill(out: &mut Vec<Monomial>, exps: &mut Vec<u64>, idx: usize, remaining: u64) {
        if idx + 1 == exps.len() {
            exps[idx] = remaining;
            out.push(Monomial::new(exps.clone()).unwrap());
            exps[idx] = 0;
            return;
        }
        for e in 0..=remaining {
            exps[idx] = e;
            fill(out, exps, idx + 1, remaining - e);
        }
        exps[idx] = 0;
    }
    let mut out = Vec::new();
    let mut exps = vec![0u64; nvars];
    fill(&mut out, &mut exps, 0, degree);
    out.sort_by(|a, b| b.exponents().cmp(a.exponents()));
    out
}

/// `S_{nvars,degree}` as a canonical set.
pub fn snd_set(nvars: usize, degree: u64) -> MonomialSet {
    MonomialSet::from_monomials(nvars, degree, enumerate_snd(nvars, degree)).unwrap()
}

/// All monomials of `S_{l..nvars, degree}` supported on `x_l..x_nvars`.
pub fn window_set(l: usize, nvars: usize, degree: u64) -> MonomialSet {
    let members = enumerate_snd(nvars, degree)
        .into_iter()
        .filter(|m| m.exponents()[..l - 1].iter().all(|&e| e == 0))
        .collect();
    MonomialSet::from_monomials(nvars, degree, members).unwrap()
}

/// Borel closure by fixed point over the full move set `v -> x_i*v/x_j`
/// for all `i <= j` with `x_j | v`.
pub fn closure_all_moves(u: &Monomial) -> MonomialSet {
    let n = u.nvars();
    let mut seen: BTreeSet<Vec<u64>> = BTreeSet::new();
    seen.insert(u.exponents().to_vec());
    loop {
        let mut added: Vec<Vec<u64>> = Vec::new();
        for exps in &seen {
            for j in 0..n {
                if exps[j] == 0 {
                    continue;
                }
                for i in 0..j {
                    let mut next = exps.clone();
                    next[j] -= 1;
                    next[i] += 1;
                    if !seen.contains(&next) {
                        added.push(next);
                    }
                }
            }
        }
        if added.is_empty() {
            break;
        }
        seen.extend(added);
    }
    let members = seen
        .into_iter()
        .map(|e| Monomial::new(e).unwrap())
        .collect();
    MonomialSet::from_monomials(n, u.degree(), members).unwrap()
}

/// The shade by unfolding its definition.
pub fn shade_by_definition(set: &MonomialSet) -> MonomialSet {
    let mut members = Vec::new();
    for m in set.members() {
        for i in 0..set.nvars() {
            let mut exps = m.exponents().to_vec();
            exps[i] += 1;
            members.push(Monomial::new(exps).unwrap());
        }
    }
    MonomialSet::from_monomials(set.nvars(), set.degree() + 1, members).unwrap()
}

/// The nondecreasing factor list of `u`, e.g. `x2*x3^2 -> [2, 3, 3]`.
pub fn sorted_factors(u: &Monomial) -> Vec<usize> {
    let mut out = Vec::new();
    for (i, &e) in u.exponents().iter().enumerate() {
        for _ in 0..e {
            out.push(i + 1);
        }
    }
    out
}

/// Whether `v` is a gap of `u` by the two-index criterion: writing both as
/// sorted factor lists, the first differing position `s` has `j_s < i_s`
/// and some later position `t` has `j_t > i_t`.
pub fn is_gap_by_two_index(u: &Monomial, v: &Monomial) -> bool {
    let iu = sorted_factors(u);
    let jv = sorted_factors(v);
    assert_eq!(iu.len(), jv.len());
    let s = match iu.iter().zip(&jv).position(|(a, b)| a != b) {
        Some(s) => s,
        None => return false,
    };
    if jv[s] >= iu[s] {
        return false;
    }
    iu.iter().zip(&jv).skip(s + 1).any(|(a, b)| b > a)
}

/// A random monomial of degree at most `max_deg`, built by sprinkling
/// factors uniformly over the variables.
pub fn random_monomial(rng: &mut impl Rng, nvars: usize, max_deg: u64) -> Monomial {
    let degree = rng.random_range(0..=max_deg);
    let mut exps = vec![0u64; nvars];
    for _ in 0..degree {
        exps[rng.random_range(0..nvars)] += 1;
    }
    Monomial::new(exps).unwrap()
}

/// A random nonempty subset of `S_{nvars,degree}`.
pub fn random_subset(rng: &mut impl Rng, nvars: usize, degree: u64) -> MonomialSet {
    let all = enumerate_snd(nvars, degree);
    let members: Vec<Monomial> = all
        .iter()
        .filter(|_| rng.random_bool(0.5))
        .cloned()
        .collect();
    let members = if members.is_empty() {
        vec![all[rng.random_range(0..all.len())].clone()]
    } else {
        members
    };
    MonomialSet::from_monomials(nvars, degree, members).unwrap()
}

/// First mismatch between the library's descending enumeration and the
/// oracle listing, if any.
pub fn check_order_against_oracle(nvars: usize, degree: u64) {
    let oracle = enumerate_snd(nvars, degree);
    assert_eq!(oracle.len() as u64, lex::count(nvars, degree).unwrap());
    for (r, expected) in oracle.iter().enumerate() {
        let got = lex::unrank(nvars, degree, r as u64).unwrap();
        assert_eq!(&got, expected, "rank {r} in S_{{{nvars},{degree}}}");
    }
}
