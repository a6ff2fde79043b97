//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits nonzero if any criterion fails.
//!
//! Run with `cargo test -p rankembed --test acceptance` (add `--release` for speed).

use std::ops::ControlFlow;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rankembed::embedding::{
    alpha_rank, dual_pair, embed_code, low_weight_structure_check, orthogonality_product,
};
use rankembed::enumerate::{for_each_vector, DEFAULT_BUDGET};
use rankembed::hamming::{
    griesmer_holds, hamming_weight, min_hamming_distance, min_weight_coset, random_code,
};
use rankembed::rank::{
    min_hamming_distance_ext, min_rank_distance, rank_weight, rank_weight_poly, ExactRankSolver,
    ExpansionBasis, SearchMethod,
};
use rankembed::reduction::{
    lin_dep_probability, lin_dep_probability_exact, mc_decoding_experiment, mc_distance_experiment,
    witness_search_mdp, witness_search_sdp, ExactOracle, ExperimentOptions,
};
use rankembed::{Alpha, Elem, FieldCtx, HammingSdpInstance, LinearCode, Matrix};

/// Failure counts of criterion 5 for m = 4, 8, 17 (seed 1, 200 trials each).
const GOLDEN_FAILURES_C5: [usize; 3] = [17, 0, 0];

type Triple = (usize, usize, usize);

struct Outcome {
    detail: String,
    triples: Vec<Triple>,
}

fn f2() -> FieldCtx {
    FieldCtx::prime(2).unwrap()
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1() -> Result<Outcome, String> {
    let f8 = FieldCtx::new(2, 3).unwrap();
    check(f8.modulus() == 11, || {
        format!("modulus {} is not x^3+x+1", f8.modulus())
    })?;
    let code =
        LinearCode::from_generator(Matrix::from_u64_rows(f2(), &[&[1, 0, 1], &[0, 1, 1]]).unwrap())
            .unwrap();
    let alpha = Alpha::new(f8, vec![Elem(2), Elem(4), Elem(5)]).unwrap();
    let e = embed_code(&code, &alpha).unwrap();
    let word = e.result.encode(&[Elem(4), Elem(2)]).unwrap();
    check(e.result.contains(&word).unwrap(), || {
        "witness is not a codeword".into()
    })?;
    let rw = rank_weight_poly(&f8, &word);
    check(rw == 1, || {
        format!("codeword {word:?} has rank weight {rw}")
    })?;
    let dr = min_rank_distance(&e.result, DEFAULT_BUDGET).unwrap().weight;
    let dh = min_hamming_distance(&code).unwrap().weight;
    let ar = alpha_rank(&alpha);
    check(dr == 1 && dh == 2 && ar == 3, || {
        format!("d_R={dr} d_H={dh} alpha_rank={ar}")
    })?;
    Ok(Outcome {
        detail: format!("d_R={dr}, d_H={dh}, alpha_rank={ar}"),
        triples: vec![(3, 2, dh)],
    })
}

fn criterion_2() -> Result<Outcome, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut triples = Vec::new();
    let pairs = 240;
    for i in 0..pairs {
        let n = rng.gen_range(2..=6);
        let k = rng.gen_range(1..=n.min(3));
        let m = rng.gen_range(1..=13);
        let ext = FieldCtx::new(2, m).unwrap();
        let code = random_code(n, k, f2(), &mut rng).unwrap();
        let alpha = Alpha::sample(n, ext, &mut rng);
        let dh = min_hamming_distance(&code).unwrap().weight;
        let e = embed_code(&code, &alpha).unwrap();
        let de = min_hamming_distance_ext(&e.result).unwrap().weight;
        check(de == dh, || {
            format!("pair {i}: [{n},{k}] m={m}, embedded Hamming distance {de} != {dh}")
        })?;
        triples.push((n, k, dh));
    }
    Ok(Outcome {
        detail: format!("{pairs}/{pairs} pairs preserve Hamming distance"),
        triples,
    })
}

fn criterion_3() -> Result<Outcome, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut triples = Vec::new();
    for i in 0..100 {
        let n = rng.gen_range(2..=7);
        let k = rng.gen_range(1..n);
        let m = rng.gen_range(1..=10);
        let ext = FieldCtx::new(2, m).unwrap();
        let code = random_code(n, k, f2(), &mut rng).unwrap();
        let alpha = Alpha::sample(n, ext, &mut rng);
        let pair = dual_pair(&code, &alpha).unwrap();
        let product = orthogonality_product(&pair).unwrap();
        check(product.is_zero(), || format!("pair {i}: G G'^T is nonzero"))?;
        let (k1, k2) = (pair.0.result.k(), pair.1.result.k());
        check(k1 == k && k2 == n - k, || {
            format!("pair {i}: dimensions {k1}, {k2} for [{n},{k}]")
        })?;
        triples.push((n, k, min_hamming_distance(&code).unwrap().weight));
    }
    Ok(Outcome {
        detail: "100/100 dual pairs orthogonal with dimensions k, n-k".into(),
        triples,
    })
}

fn criterion_4() -> Result<Outcome, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let ext = FieldCtx::new(2, 13).unwrap();
    let mut triples = Vec::new();
    let mut checks = 0;
    let mut words = 0;
    for i in 0..50 {
        let code = random_code(6, 3, f2(), &mut rng).unwrap();
        let d = min_hamming_distance(&code).unwrap().weight;
        let alpha = Alpha::sample(6, ext, &mut rng);
        for w in (0..).take_while(|w| 2 * w < 3 * d) {
            let r = low_weight_structure_check(&code, &alpha, w, DEFAULT_BUDGET)
                .map_err(|e| e.to_string())?;
            check(r.holds, || {
                format!("code {i}, w={w}: counterexample {:?}", r.counterexample)
            })?;
            checks += 1;
            words += r.codewords_checked;
        }
        triples.push((6, 3, d));
    }
    Ok(Outcome {
        detail: format!("{checks} (code, w) checks hold, {words} codeword classes examined"),
        triples,
    })
}

fn criterion_5() -> Result<Outcome, String> {
    let code = LinearCode::from_generator(
        Matrix::from_u64_rows(f2(), &[&[1, 0, 1, 1], &[0, 1, 0, 1]]).unwrap(),
    )
    .unwrap();
    let mut failures = Vec::new();
    let mut triples = Vec::new();
    for m in [4, 8, 17] {
        let e = mc_distance_experiment(&code, m, 200, 1, &ExperimentOptions::default())
            .map_err(|e| e.to_string())?;
        check(e.errors == 0, || {
            format!("m={m}: {} trials exceeded the budget", e.errors)
        })?;
        for r in &e.records {
            let dr = r.d_r.unwrap();
            check(dr <= r.d_h, || {
                format!("m={m}, trial {}: d_R={dr} > d_H={}", r.trial_index, r.d_h)
            })?;
        }
        if m <= 8 {
            // the support search and plain codeword enumeration must agree trial by trial
            let opts = ExperimentOptions {
                solver: ExactRankSolver::new(DEFAULT_BUDGET, SearchMethod::Enumerate),
                ..Default::default()
            };
            let brute =
                mc_distance_experiment(&code, m, 200, 1, &opts).map_err(|e| e.to_string())?;
            check(brute.records == e.records, || {
                format!("m={m}: solvers disagree")
            })?;
        }
        triples.push((code.n(), code.k(), e.records[0].d_h));
        failures.push(e.failures);
    }
    check(failures.windows(2).all(|w| w[0] >= w[1]), || {
        format!("failures {failures:?} increase with m")
    })?;
    check(failures[2] == 0, || {
        format!("{} failures at m=17", failures[2])
    })?;
    check(failures == GOLDEN_FAILURES_C5, || {
        format!("failures {failures:?} differ from golden {GOLDEN_FAILURES_C5:?}")
    })?;
    Ok(Outcome {
        detail: format!("failures at m=4,8,17: {failures:?}"),
        triples,
    })
}

fn criterion_6() -> Result<Outcome, String> {
    let h = Matrix::from_u64_rows(f2(), &[&[1, 1, 1]]).unwrap();
    let inst = HammingSdpInstance::new(h, vec![Elem(1)], 1).unwrap();
    let e = mc_decoding_experiment(&inst, 10, 100, 1, &ExperimentOptions::default())
        .map_err(|e| e.to_string())?;
    let good = e
        .records
        .iter()
        .filter(|r| r.w_h == 1 && r.w_r == Some(1))
        .count();
    check(good == 100, || {
        format!("{good}/100 trials with w_R = w_H = 1")
    })?;
    Ok(Outcome {
        detail: "100/100 trials with w_R = w_H = 1".into(),
        triples: vec![],
    })
}

fn criterion_7() -> Result<Outcome, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let oracle = ExactOracle::default();
    let mut mdp_cases = 0;
    let mut max_queries_ratio = 0f64;
    for i in 0..50 {
        let n = rng.gen_range(2..=8);
        let k = rng.gen_range(1..=n.min(4));
        let code = random_code(n, k, f2(), &mut rng).unwrap();
        let d = min_hamming_distance(&code).unwrap().weight;
        let m = (2 * 2 * n + 1) as u32;
        for w in 1..=n {
            let out =
                witness_search_mdp(&code, w, m, &oracle, &mut rng).map_err(|e| e.to_string())?;
            check(out.accepted == (d <= w), || {
                format!(
                    "mdp code {i} [{n},{k},{d}], w={w}: answered {}",
                    out.accepted
                )
            })?;
            check(out.queries <= n + 1, || {
                format!("mdp code {i}, w={w}: {} queries", out.queries)
            })?;
            max_queries_ratio = max_queries_ratio.max(out.queries as f64 / (n + 1) as f64);
            mdp_cases += 1;
        }
    }
    let mut sdp_cases = 0;
    for i in 0..50 {
        let n = rng.gen_range(2..=6);
        let r = rng.gen_range(1..=n.min(3));
        let h = Matrix::from_fn(f2(), r, n, |_, _| f2().sample_uniform(&mut rng));
        let x: Vec<Elem> = (0..n).map(|_| f2().sample_uniform(&mut rng)).collect();
        let s = h.mul_vec(&x).unwrap();
        let inst = HammingSdpInstance::new(h, s, 0).unwrap();
        let wh = min_weight_coset(&inst).unwrap().weight;
        let m = (n * n + 1) as u32;
        for w in 0..=n {
            let out =
                witness_search_sdp(&inst, w, m, &oracle, &mut rng).map_err(|e| e.to_string())?;
            check(out.accepted == (wh <= w), || {
                format!(
                    "sdp instance {i} (n={n}, w_H={wh}), w={w}: answered {}",
                    out.accepted
                )
            })?;
            check(out.queries <= n + 1, || {
                format!("sdp instance {i}, w={w}: {} queries", out.queries)
            })?;
            sdp_cases += 1;
        }
    }
    Ok(Outcome {
        detail: format!(
            "{mdp_cases} distance and {sdp_cases} decoding cases agree; max queries/(n+1) = {max_queries_ratio:.2}"
        ),
        triples: vec![],
    })
}

fn criterion_8() -> Result<Outcome, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let ctx = FieldCtx::new(2, 6).unwrap();
    let m = ctx.m() as usize;
    for i in 0..1000 {
        let n = rng.gen_range(1..=10);
        let x: Vec<Elem> = (0..n).map(|_| ctx.sample_uniform(&mut rng)).collect();
        let y: Vec<Elem> = (0..n).map(|_| ctx.sample_uniform(&mut rng)).collect();
        let lambda = ctx.sample_nonzero(&mut rng);
        let wx = rank_weight_poly(&ctx, &x);
        let scaled: Vec<Elem> = x.iter().map(|&a| ctx.mul(lambda, a)).collect();
        check(rank_weight_poly(&ctx, &scaled) == wx, || {
            format!("vector {i}: scaling changed rank")
        })?;
        let b1 = ExpansionBasis::random(ctx, &mut rng);
        let b2 = ExpansionBasis::random(ctx, &mut rng);
        let (r1, r2) = (rank_weight(&x, &b1).unwrap(), rank_weight(&x, &b2).unwrap());
        check(r1 == wx && r2 == wx, || {
            format!("vector {i}: bases give {r1}, {r2}, polynomial {wx}")
        })?;
        check(wx <= m.min(hamming_weight(&x)), || {
            format!("vector {i}: rank {wx} above min(m, w_H)")
        })?;
        let sum: Vec<Elem> = x.iter().zip(&y).map(|(&a, &b)| ctx.add(a, b)).collect();
        let (ws, wy) = (rank_weight_poly(&ctx, &sum), rank_weight_poly(&ctx, &y));
        check(ws <= wx + wy, || {
            format!("vector {i}: triangle inequality {ws} > {wx} + {wy}")
        })?;
    }
    Ok(Outcome {
        detail: "1000/1000 vectors satisfy all four properties".into(),
        triples: vec![],
    })
}

fn criterion_9() -> Result<Outcome, String> {
    let p = lin_dep_probability(3, 2, 4);
    check(p == 0.384765625, || {
        format!("lin_dep_probability(3,2,4) = {p}")
    })?;
    let ctx = FieldCtx::new(2, 4).unwrap();
    let mut dependent = 0u64;
    let mut total = 0u64;
    for_each_vector::<()>(&ctx, 3, |xs| {
        total += 1;
        if rank_weight_poly(&ctx, xs) < 3 {
            dependent += 1;
        }
        ControlFlow::Continue(())
    });
    check(total == 4096, || format!("enumerated {total} triples"))?;
    let enumerated = dependent as f64 / total as f64;
    check(enumerated == p, || {
        format!("enumeration gives {dependent}/{total}")
    })?;
    check(
        lin_dep_probability_exact(3, 2, 4) == Some((dependent as u128, 4096)),
        || "exact fraction differs".into(),
    )?;
    Ok(Outcome {
        detail: format!("{p} = {dependent}/{total} by enumeration"),
        triples: vec![],
    })
}

struct Criterion {
    id: usize,
    name: &'static str,
    limit: Duration,
    run: fn() -> Result<Outcome, String>,
}

fn main() -> ExitCode {
    let criteria = [
        Criterion {
            id: 1,
            name: "even-weight counterexample",
            limit: Duration::from_secs(1),
            run: criterion_1,
        },
        Criterion {
            id: 2,
            name: "embedded Hamming distance",
            limit: Duration::from_secs(60),
            run: criterion_2,
        },
        Criterion {
            id: 3,
            name: "dual of embedding",
            limit: Duration::from_secs(30),
            run: criterion_3,
        },
        Criterion {
            id: 4,
            name: "low-weight structure",
            limit: Duration::from_secs(120),
            run: criterion_4,
        },
        Criterion {
            id: 5,
            name: "distance preservation trend",
            limit: Duration::from_secs(120),
            run: criterion_5,
        },
        Criterion {
            id: 6,
            name: "decoding preservation",
            limit: Duration::from_secs(30),
            run: criterion_6,
        },
        Criterion {
            id: 7,
            name: "witness search",
            limit: Duration::from_secs(300),
            run: criterion_7,
        },
        Criterion {
            id: 8,
            name: "rank-weight invariants",
            limit: Duration::from_secs(30),
            run: criterion_8,
        },
        Criterion {
            id: 9,
            name: "linear dependence probability",
            limit: Duration::from_secs(10),
            run: criterion_9,
        },
    ];

    let suite_start = Instant::now();
    let mut triples: Vec<Triple> = Vec::new();
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let verdict = match result {
            Ok(o) if elapsed <= c.limit => {
                if (2..=5).contains(&c.id) {
                    triples.extend(o.triples);
                }
                Ok(o.detail)
            }
            Ok(o) => Err(format!("{} but took longer than the limit", o.detail)),
            Err(e) => Err(e),
        };
        report(c.id, c.name, &verdict, elapsed, c.limit);
        failed += verdict.is_err() as usize;
    }

    let start = Instant::now();
    let bad: Vec<&Triple> = triples
        .iter()
        .filter(|&&(n, k, d)| !griesmer_holds(n, k, d, 2))
        .collect();
    let verdict = if triples.is_empty() {
        Err("no triples collected".to_string())
    } else if bad.is_empty() {
        Ok(format!(
            "{} triples from criteria 2-5 satisfy the bound",
            triples.len()
        ))
    } else {
        Err(format!("violations: {bad:?}"))
    };
    report(
        10,
        "Griesmer conformance",
        &verdict,
        start.elapsed(),
        Duration::from_secs(1),
    );
    failed += verdict.is_err() as usize;

    println!(
        "acceptance: {}/10 criteria passed in {:.1?}",
        10 - failed,
        suite_start.elapsed()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn report(
    id: usize,
    name: &str,
    verdict: &Result<String, String>,
    elapsed: Duration,
    limit: Duration,
) {
    let (tag, detail) = match verdict {
        Ok(d) => ("PASS", d),
        Err(d) => ("FAIL", d),
    };
    println!("criterion {id:>2} {tag} [{name}] {detail} ({elapsed:.2?}, limit {limit:?})");
}
