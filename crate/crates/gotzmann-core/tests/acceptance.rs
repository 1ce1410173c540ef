//! Acceptance suite: one test per release criterion, each printing a
//! PASS line with its elapsed time (visible with `--nocapture`) and
//! enforcing the stated time budget.

mod common;

use std::time::{Duration, Instant};

use gotzmann_core::{
    borel, classify, gaps, lex, Monomial, MonomialSet, VarIndex, DEFAULT_ENUM_CAP,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CAP: usize = DEFAULT_ENUM_CAP;

fn finish(name: &str, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    println!("criterion {name}: PASS ({elapsed:?})");
    assert!(
        elapsed <= budget,
        "criterion {name} exceeded its {budget:?} budget: {elapsed:?}"
    );
}

#[test]
fn criterion_1_worked_example_fidelity() {
    let started = Instant::now();

    let b = MonomialSet::from_monomials(
        4,
        2,
        vec![
            Monomial::from_factors(4, &[1, 1]).unwrap(),
            Monomial::from_factors(4, &[1, 2]).unwrap(),
            Monomial::from_factors(4, &[1, 3]).unwrap(),
            Monomial::from_factors(4, &[2, 2]).unwrap(),
        ],
    )
    .unwrap();
    let (blex, w) = borel::lexify(&b).unwrap();
    assert_eq!(w, Monomial::from_factors(4, &[1, 4]).unwrap());
    assert_eq!(blex, lex::lexsegment(&w, CAP).unwrap());

    let u = Monomial::from_factors(4, &[2, 3]).unwrap();
    let report = gaps::gap_report(&u, CAP).unwrap();
    assert_eq!(
        report.gaps.members(),
        &[Monomial::from_factors(4, &[1, 4]).unwrap()]
    );
    assert_eq!(report.u_tilde, Monomial::from_factors(4, &[2, 2]).unwrap());
    assert_eq!(report.cogaps.members(), &[u]);

    finish(
        "1 (worked-example fidelity)",
        started,
        Duration::from_millis(1),
    );
}

#[test]
fn criterion_2_n3_threshold_theorem() {
    let started = Instant::now();
    let mut cells = 0u64;
    for a in 0..=1u64 {
        for b in 0..=8u64 {
            let threshold = classify::threshold_n3(b).unwrap();
            for t in 0..=threshold + 3 {
                let u = Monomial::new(vec![a, b, t]).unwrap();
                let verdict = classify::is_gotzmann_monomial_oracle(&u, CAP).unwrap();
                assert_eq!(
                    verdict.is_gotzmann,
                    t >= threshold,
                    "a={a} b={b} t={t} threshold={threshold}"
                );
                cells += 1;
            }
        }
    }
    assert!(cells > 0);
    finish("2 (n=3 theorem)", started, Duration::from_secs(10));
}

#[test]
fn criterion_3_n4_main_theorem() {
    let started = Instant::now();

    // Grid cells plus the boundary spot checks, in lex order on (b, c, t).
    let mut cells: Vec<(u64, u64, u64)> = Vec::new();
    for b in 0..=3u64 {
        for c in 0..=3u64 {
            let threshold = classify::threshold_n4(b, c).unwrap().threshold;
            for t in 0..=threshold + 2 {
                cells.push((b, c, t));
            }
        }
    }
    for (b, c) in [(4u64, 0u64), (0, 4), (4, 2)] {
        let threshold = classify::threshold_n4(b, c).unwrap().threshold;
        cells.push((b, c, threshold - 1));
        cells.push((b, c, threshold));
    }

    let workers = 4;
    let chunk = cells.len().div_ceil(workers);
    let mismatches: Vec<String> = std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for piece in cells.chunks(chunk) {
            handles.push(scope.spawn(move || {
                let mut bad = Vec::new();
                for &(b, c, t) in piece {
                    let u = Monomial::new(vec![0, b, c, t]).unwrap();
                    let expected = t >= classify::threshold_n4(b, c).unwrap().threshold;
                    let got = classify::is_gotzmann_monomial_oracle(&u, CAP)
                        .unwrap()
                        .is_gotzmann;
                    if got != expected {
                        bad.push(format!("b={b} c={c} t={t}: oracle={got} closed={expected}"));
                    }
                }
                bad
            }));
        }
        handles
            .into_iter()
            .flat_map(|h| h.join().unwrap())
            .collect()
    });
    assert!(mismatches.is_empty(), "mismatches: {mismatches:?}");
    finish("3 (n=4 main theorem)", started, Duration::from_secs(300));
}

#[test]
fn criterion_4_formula_vs_oracle_equivalences() {
    let started = Instant::now();
    for n in 1..=5usize {
        for d in 0..=7u64 {
            for u in common::enumerate_snd(n, d) {
                let enumerated = gaps::gaps_enumerated(&u, CAP).unwrap();
                assert_eq!(gaps::gaps_structural(&u, CAP).unwrap(), enumerated, "u={u}");
                assert_eq!(
                    gaps::gap_count(&u).unwrap(),
                    enumerated.len() as u64,
                    "u={u}"
                );
                assert_eq!(
                    gaps::maxgen_gaps_formula(&u).unwrap(),
                    borel::maxgen(&enumerated).unwrap(),
                    "u={u}"
                );
                assert_eq!(
                    borel::borel_size(&u).unwrap(),
                    borel::borel_closure(&u, CAP).unwrap().len() as u64,
                    "u={u}"
                );
            }
            if d >= 1 {
                assert_eq!(
                    borel::maxgen_snd(n, d).unwrap(),
                    borel::maxgen(&common::snd_set(n, d)).unwrap(),
                    "S_{{{n},{d}}}"
                );
                for l in 1..=n {
                    assert_eq!(
                        borel::maxgen_slnd(l, n, d).unwrap(),
                        borel::maxgen(&common::window_set(l, n, d)).unwrap(),
                        "S_{{{l},{n},{d}}}"
                    );
                }
            }
        }
    }
    finish(
        "4 (formula-vs-oracle equivalences)",
        started,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_5_mu_closed_forms() {
    let started = Instant::now();
    for n in 2..=5usize {
        for m in 2..=n {
            for k in 1..=6u64 {
                let prefixes = [
                    Monomial::unit(n).unwrap(),
                    Monomial::variable(n, 1).unwrap(),
                    Monomial::power(n, m - 1, 2).unwrap(),
                ];
                for v in prefixes {
                    let upper = v.mul(&Monomial::power(n, m - 1, k).unwrap()).unwrap();
                    let lower = v.mul(&Monomial::power(n, m, k).unwrap()).unwrap();
                    assert_eq!(
                        gaps::mu_power_drop(&v, VarIndex::new(m, n).unwrap(), k, n).unwrap(),
                        gaps::mu_enumerated(&lower, &upper, CAP).unwrap(),
                        "n={n} m={m} k={k} v={v}"
                    );
                }
            }
        }
    }
    for r in 0..=3u64 {
        for s in 1..=6u64 {
            for i in 1..=s {
                let upper = Monomial::new(vec![0, r + i, 0, s - i]).unwrap();
                let lower = Monomial::new(vec![0, r, 0, s]).unwrap();
                assert_eq!(
                    gaps::mu_two_var(r, s, i).unwrap(),
                    gaps::mu_enumerated(&lower, &upper, CAP).unwrap(),
                    "r={r} s={s} i={i}"
                );
            }
        }
    }
    finish("5 (mu closed forms)", started, Duration::from_secs(30));
}

#[test]
fn criterion_6_f_h_audit() {
    let started = Instant::now();
    for b in 0..=4u64 {
        let q = classify::threshold_n3(b).unwrap(); // C(b, 2)
        for c in 0..=4u64 {
            let report = classify::threshold_n4(b, c).unwrap();
            for t in 0..=4u64 {
                let u = Monomial::new(vec![0, b, c, t]).unwrap();
                let f = classify::f_of_t(b, c, t).unwrap();

                // maxgen(gaps(x2^b x3^c x4^t)) = x3^C(b,2) * x4^f(t).
                let expected = borel::MaxgenMonomial::from_m_vector(vec![0, 0, q, f]).unwrap();
                assert_eq!(
                    borel::maxgen(&gaps::gaps_enumerated(&u, CAP).unwrap()).unwrap(),
                    expected,
                    "b={b} c={c} t={t}"
                );

                // The mu identity needs the target to be a valid, larger
                // monomial: c + t >= C(b,2), and for q = 0 the endpoints
                // coincide only when c = 0.
                let h = classify::h_of_t(b, c, t).unwrap();
                if c + t >= q && (q >= 1 || c == 0) {
                    let target = Monomial::new(vec![0, b + q, 0, c + t - q]).unwrap();
                    let mu = gaps::mu_enumerated(&u, &target, CAP).unwrap();
                    let h = u64::try_from(h).expect("h >= 0 in ordered range");
                    let expected = borel::MaxgenMonomial::from_m_vector(vec![0, 0, q, h]).unwrap();
                    assert_eq!(mu, expected, "b={b} c={c} t={t}");
                }

                // f(t) - h(t) is the constant gap, independent of t.
                let difference = i128::from(f) - i128::from(h);
                assert_eq!(
                    difference,
                    i128::from(report.constant_gap),
                    "b={b} c={c} t={t}"
                );
            }
        }
    }
    finish("6 (f/h audit)", started, Duration::from_secs(30));
}

#[test]
fn criterion_7_structural_theorems_randomized() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x607a);
    const ROUNDS: usize = 500;

    // x1-neutrality of the oracle verdict.
    for _ in 0..ROUNDS {
        let n = rng.random_range(2..=4usize);
        let u = common::random_monomial(&mut rng, n, 8);
        let x1 = VarIndex::new(1, n).unwrap();
        assert_eq!(
            classify::is_gotzmann_monomial_oracle(&u, CAP)
                .unwrap()
                .is_gotzmann,
            classify::is_gotzmann_monomial_oracle(&u.mul_var(x1).unwrap(), CAP)
                .unwrap()
                .is_gotzmann,
            "u={u}"
        );
    }

    // gaps(x1*u) = x1*gaps(u).
    for _ in 0..ROUNDS {
        let n = rng.random_range(2..=4usize);
        let u = common::random_monomial(&mut rng, n, 8);
        let x1 = VarIndex::new(1, n).unwrap();
        let lifted = gaps::gaps_enumerated(&u.mul_var(x1).unwrap(), CAP).unwrap();
        let shifted: Vec<Monomial> = gaps::gaps_enumerated(&u, CAP)
            .unwrap()
            .members()
            .iter()
            .map(|v| v.mul_var(x1).unwrap())
            .collect();
        assert_eq!(
            lifted,
            MonomialSet::from_monomials(n, u.degree() + 1, shifted).unwrap(),
            "u={u}"
        );
    }

    // gaps(u*xn, j) is the union of gaps(u, i)*x_j over i <= j, and the
    // cumulative-sum corollary for the maxgen.
    for _ in 0..ROUNDS {
        let n = rng.random_range(2..=4usize);
        let u = common::random_monomial(&mut rng, n, 8);
        let xn = VarIndex::new(n, n).unwrap();
        let base = gaps::gaps_enumerated(&u, CAP).unwrap();
        let lifted = gaps::gaps_enumerated(&u.mul_var(xn).unwrap(), CAP).unwrap();
        for j in 1..=n {
            let left: Vec<&Monomial> = lifted
                .members()
                .iter()
                .filter(|w| w.max_index().unwrap().get() == j)
                .collect();
            let right: Vec<Monomial> = base
                .members()
                .iter()
                .filter(|v| v.max_index().unwrap().get() <= j)
                .map(|v| v.mul_var(VarIndex::new(j, n).unwrap()).unwrap())
                .collect();
            let dedup_len = right.len();
            let rebuilt = MonomialSet::from_monomials(n, u.degree() + 1, right).unwrap();
            assert_eq!(rebuilt.len(), dedup_len, "overlap at j={j}, u={u}");
            assert_eq!(
                rebuilt.members().iter().collect::<Vec<_>>(),
                left,
                "j={j} u={u}"
            );
        }
        assert_eq!(
            gaps::maxgen_gaps_xn_shift(&borel::maxgen(&base).unwrap()).unwrap(),
            borel::maxgen(&lifted).unwrap(),
            "u={u}"
        );
    }

    // Persistence: Gotzmann stays Gotzmann under multiplication by xn.
    let mut seen_gotzmann = 0u32;
    for _ in 0..ROUNDS {
        let n = rng.random_range(2..=4usize);
        let u = common::random_monomial(&mut rng, n, 8);
        let xn = VarIndex::new(n, n).unwrap();
        let verdict = classify::is_gotzmann_monomial_oracle(&u, CAP).unwrap();
        if verdict.is_gotzmann {
            seen_gotzmann += 1;
            assert!(
                classify::is_gotzmann_monomial_oracle(&u.mul_var(xn).unwrap(), CAP)
                    .unwrap()
                    .is_gotzmann,
                "u={u}"
            );
        }
    }
    assert!(
        seen_gotzmann > 0,
        "persistence never saw a Gotzmann instance"
    );

    // |shad(B)| >= |shad(B^lex)| on random subsets.
    for _ in 0..ROUNDS {
        let n = rng.random_range(2..=4usize);
        let d = rng.random_range(1..=8u64);
        let set = common::random_subset(&mut rng, n, d);
        let (blex, _) = borel::lexify(&set).unwrap();
        assert!(
            borel::shade(&set, CAP).unwrap().len() >= borel::shade(&blex, CAP).unwrap().len(),
            "set={set:?}"
        );
    }

    // Shade-cardinality and m-vector criteria agree on Borel-stable sets
    // (the set oracle raises InternalInconsistency if they ever differ).
    for _ in 0..ROUNDS {
        let n = rng.random_range(2..=4usize);
        let d = rng.random_range(1..=6u64);
        let mut members: Vec<Monomial> = Vec::new();
        for _ in 0..rng.random_range(1..=3usize) {
            let mut exps = vec![0u64; n];
            for _ in 0..d {
                exps[rng.random_range(0..n)] += 1;
            }
            members.extend_from_slice(
                borel::borel_closure(&Monomial::new(exps).unwrap(), CAP)
                    .unwrap()
                    .members(),
            );
        }
        let union = MonomialSet::from_monomials(n, d, members).unwrap();
        assert!(borel::is_borel_stable(&union));
        classify::is_gotzmann_set_oracle(&union, CAP).unwrap();
    }

    finish(
        "7 (structural theorems, randomized)",
        started,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_8_lex_engine_integrity() {
    let started = Instant::now();
    for n in 1..=4usize {
        for d in 0..=8u64 {
            let oracle = common::enumerate_snd(n, d);
            assert_eq!(oracle.len() as u64, lex::count(n, d).unwrap());
            for (r, expected) in oracle.iter().enumerate() {
                // rank/unrank bijectivity against the oracle listing.
                let u = lex::unrank(n, d, r as u64).unwrap();
                assert_eq!(&u, expected);
                assert_eq!(lex::rank(&u).unwrap(), r as u64);
            }
            // Covering and inversion: successor steps exactly one oracle
            // position, and predecessor undoes it.
            for pair in oracle.windows(2) {
                assert_eq!(lex::successor(&pair[0]).unwrap(), pair[1]);
                assert_eq!(lex::predecessor(&pair[1]).unwrap(), pair[0]);
            }
            if d >= 1 {
                assert!(lex::predecessor(&oracle[0]).is_err());
                assert!(lex::successor(oracle.last().unwrap()).is_err());
            }
        }
    }
    finish("8 (lex engine integrity)", started, Duration::from_secs(10));
}
