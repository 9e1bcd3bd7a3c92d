//! Acceptance battery: one line per criterion, nonzero exit on any failure.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use strproc::concatenation::{min_lex_concat, shortest_common_concat, shortest_palindrome_concat};
use strproc::counting::{
    count_constrained, count_epsilon_dfa, max_weight_string, CountedPattern, DfaEdge, EpsilonDfa,
    OccurrenceSpec,
};
use strproc::oracles::*;
use strproc::prefix_queries::build_failure_tree;
use strproc::primitives::{build_suffix_index, failure_function};
use strproc::subsequences::{
    de_bruijn_superstring, lccs_constrained, max_weight_common_subsequence,
    shortest_non_substring_lexicographic, shortest_non_substring_trie, Agg, AggPair, LccsBranch,
    DEFAULT_TUPLE_CAP,
};
use strproc::{Symbol, Text};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn(&mut ChaCha8Rng) -> Outcome);

fn rand_text(rng: &mut ChaCha8Rng, m: u32, len: usize) -> Text {
    Text::new((0..len).map(|_| rng.gen_range(1..=m)).collect()).unwrap()
}

fn rand_set(rng: &mut ChaCha8Rng, m: u32, max_n: usize, max_len: usize) -> Vec<Text> {
    let n = rng.gen_range(1..=max_n);
    (0..n)
        .map(|_| {
            let l = rng.gen_range(1..=max_len);
            rand_text(rng, m, l)
        })
        .collect()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn prefix_queries(rng: &mut ChaCha8Rng) -> Outcome {
    let start = Instant::now();
    let mut checks = 0u64;
    for _ in 0..1000 {
        let m = rng.gen_range(1..=3);
        let n = rng.gen_range(1..=300);
        let s = rand_text(rng, m, n);
        let plain = build_failure_tree(&s, None).map_err(|e| e.to_string())?;
        for j in 0..=n {
            for i in 0..=j {
                let (got, want) = (plain.pq(i, j).unwrap(), oracle_pq(&s, i, j).unwrap());
                ensure(got == want, || {
                    format!("pq({i},{j}) on {s}: {got} vs {want}")
                })?;
                let (got, want) = (plain.lpq(j, i).unwrap(), oracle_lpq(&s, j, i).unwrap());
                ensure(got == want, || {
                    format!("lpq({j},{i}) on {s}: {got} vs {want}")
                })?;
                checks += 2;
            }
        }
        for c in [1, 2, 3, 8] {
            let tree = build_failure_tree(&s, Some(c)).map_err(|e| e.to_string())?;
            for j in 0..=n {
                for k in 0..=j {
                    let (got, want) = (tree.lpq_strided(j, k).unwrap(), plain.lpq(j, k).unwrap());
                    ensure(got == want, || {
                        format!("lpq_strided c={c} ({j},{k}) on {s}: {got} vs {want}")
                    })?;
                    checks += 1;
                }
            }
        }
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(30), || format!("took {took:?}"))?;
    Ok(format!("{checks} queries in {took:.2?}"))
}

fn common_concat(rng: &mut ChaCha8Rng) -> Outcome {
    let mut found = 0;
    for _ in 0..300 {
        let a = rand_set(rng, 2, 3, 3);
        let b = rand_set(rng, 2, 3, 3);
        let got = shortest_common_concat(&a, &b).map_err(|e| e.to_string())?;
        let want = oracle_shortest_common_concat(&a, &b, 12).map_err(|e| e.to_string())?;
        let ctx = || format!("A={a:?} B={b:?}: solver {got:?}, oracle {want:?}");
        match (&got, &want) {
            (Some((l, w)), Some((lo, _))) => {
                ensure(l == lo && w.len() == *l, ctx)?;
                ensure(parses_as(w, &a) && parses_as(w, &b), ctx)?;
                found += 1;
            }
            (Some((l, w)), None) => {
                ensure(*l > 12 && parses_as(w, &a) && parses_as(w, &b), ctx)?;
                found += 1;
            }
            (None, Some(_)) => return Err(ctx()),
            (None, None) => {}
        }
    }
    Ok(format!(
        "300 instances, {found} with a common concatenation"
    ))
}

fn palindrome_concat(rng: &mut ChaCha8Rng) -> Outcome {
    let mut found = 0;
    for _ in 0..300 {
        let a = rand_set(rng, 2, 3, 3);
        let got = shortest_palindrome_concat(&a).map_err(|e| e.to_string())?;
        let want = oracle_palindrome_concat(&a, 12).map_err(|e| e.to_string())?;
        let ctx = || format!("A={a:?}: solver {got:?}, oracle {want:?}");
        if let Some((l, w)) = &got {
            ensure(
                w.len() == *l && w.iter().eq(w.iter().rev()) && parses_as(w, &a),
                ctx,
            )?;
            found += 1;
        }
        match (&got, &want) {
            (Some((l, _)), Some((lo, _))) => ensure(l == lo, ctx)?,
            (Some((l, _)), None) => ensure(*l > 12, ctx)?,
            (None, Some(_)) => return Err(ctx()),
            (None, None) => {}
        }
    }
    Ok(format!("300 instances, {found} palindromic"))
}

fn min_lex(rng: &mut ChaCha8Rng) -> Outcome {
    for _ in 0..500 {
        let m = rng.gen_range(1..=2);
        let s = rand_set(rng, m, 7, 4);
        let got = min_lex_concat(&s).map_err(|e| e.to_string())?;
        let want = oracle_min_lex(&s).map_err(|e| e.to_string())?;
        ensure(got == want, || format!("{s:?}: {got} vs {want}"))?;
    }
    Ok("500 instances".into())
}

fn lccs(rng: &mut ChaCha8Rng) -> Outcome {
    let (mut zeros, mut short) = (0, 0);
    let mut runs = 0;
    for _ in 0..500 {
        let m = rng.gen_range(1..=3);
        let n = rng.gen_range(1..=4);
        let budget = rng.gen_range(n..=60);
        let mut lens = vec![1; n];
        for _ in n..budget {
            let i = rng.gen_range(0..n);
            lens[i] += 1;
        }
        let texts: Vec<Text> = lens.iter().map(|&l| rand_text(rng, m, l)).collect();
        let a: Vec<usize> = (0..n).map(|_| rng.gen_range(0..=3)).collect();
        for f in 1..=n {
            let got = lccs_constrained(&texts, &a, f).map_err(|e| e.to_string())?;
            let (want, _) = oracle_lccs(&texts, &a, f).map_err(|e| e.to_string())?;
            let ctx = || format!("texts={texts:?} a={a:?} f={f}: {got:?} vs {want}");
            ensure(got.length == want && got.witness.len() == got.length, ctx)?;
            ensure(
                got.length == 0 || lccs_witness_valid(&texts, &a, f, &got.witness),
                ctx,
            )?;
            match got.branch {
                LccsBranch::ZeroThresholdsSuffice => zeros += 1,
                LccsBranch::OneThresholdShort => short += 1,
                LccsBranch::Sweep => {}
            }
            runs += 1;
        }
    }
    ensure(zeros >= 20 && short >= 20, || {
        format!("branch coverage too low: {zeros} / {short}")
    })?;
    Ok(format!(
        "{runs} runs; zero-threshold branch {zeros}, one-short branch {short}"
    ))
}

fn unit(texts: &[Text]) -> Vec<Vec<f64>> {
    texts.iter().map(|t| vec![1.0; t.len()]).collect()
}

fn mwcs(rng: &mut ChaCha8Rng) -> Outcome {
    let pairs = [
        AggPair {
            agg1: Agg::Sum,
            agg2: Agg::Min,
        },
        AggPair {
            agg1: Agg::Max,
            agg2: Agg::Sum,
        },
    ];
    let mut runs = 0;
    for k in [2, 3] {
        for _ in 0..300 {
            let m = rng.gen_range(1..=3);
            let texts: Vec<Text> = (0..k)
                .map(|_| {
                    let l = rng.gen_range(1..=8);
                    rand_text(rng, m, l)
                })
                .collect();
            let got = max_weight_common_subsequence(
                &texts,
                &unit(&texts),
                AggPair::default(),
                DEFAULT_TUPLE_CAP,
            )
            .map_err(|e| e.to_string())?;
            let want = oracle_lcs_length(&texts).map_err(|e| e.to_string())?;
            ensure(got.weight == want as f64, || {
                format!("{texts:?}: {} vs lcs {want}", got.weight)
            })?;
            ensure(got.subsequence.len() == want, || {
                format!("{texts:?}: subsequence {}", got.subsequence)
            })?;

            let weights: Vec<Vec<f64>> = texts
                .iter()
                .map(|t| (0..t.len()).map(|_| rng.gen_range(0..=9) as f64).collect())
                .collect();
            for aggs in pairs {
                let got = max_weight_common_subsequence(&texts, &weights, aggs, DEFAULT_TUPLE_CAP)
                    .map_err(|e| e.to_string())?;
                let want = oracle_mwcs(&texts, &weights, aggs).map_err(|e| e.to_string())?;
                ensure(got.weight == want, || {
                    format!("{texts:?} {weights:?} {aggs:?}: {} vs {want}", got.weight)
                })?;
            }
            runs += 3;
        }
    }
    Ok(format!("{runs} comparisons"))
}

fn absent(rng: &mut ChaCha8Rng) -> Outcome {
    for _ in 0..500 {
        let m = rng.gen_range(1..=3);
        let n = rng.gen_range(1..=4);
        let total = rng.gen_range(n..=200 - (n - 1));
        let mut lens = vec![1; n];
        for _ in n..total {
            let i = rng.gen_range(0..n);
            lens[i] += 1;
        }
        let texts: Vec<Text> = lens.iter().map(|&l| rand_text(rng, m, l)).collect();
        let want = oracle_absent(&texts, m, 201).map_err(|e| e.to_string())?;
        let trie = shortest_non_substring_trie(&texts, m).map_err(|e| e.to_string())?;
        let lex = shortest_non_substring_lexicographic(&texts, m).map_err(|e| e.to_string())?;
        let ctx = || format!("texts={texts:?} m={m}: oracle {want}, trie {trie}, lex {lex}");
        ensure(trie == want, ctx)?;
        ensure(lex.len() == want.len(), ctx)?;
        ensure(
            texts
                .iter()
                .all(|t| t.len() < lex.len() || !t.windows(lex.len()).any(|w| w == &lex[..])),
            ctx,
        )?;
    }
    for q in 1..=3usize {
        let s = de_bruijn_superstring(2, q).map_err(|e| e.to_string())?;
        ensure(s.len() == (1 << q) + q - 1, || {
            format!("q={q}: length {}", s.len())
        })?;
        let grams: BTreeSet<&[Symbol]> = s.windows(q).collect();
        ensure(grams.len() == 1 << q, || {
            format!("q={q}: {} distinct grams", grams.len())
        })?;
        let back =
            shortest_non_substring_trie(std::slice::from_ref(&s), 2).map_err(|e| e.to_string())?;
        ensure(back.len() == q + 1, || {
            format!("q={q}: absent length {}", back.len())
        })?;
    }
    Ok("500 corpora; de Bruijn q = 1..3".into())
}

fn rand_spec(rng: &mut ChaCha8Rng, weighted: bool) -> OccurrenceSpec {
    let m = rng.gen_range(1..=3);
    let k = rng.gen_range(0..=3);
    let mut lengths: Vec<usize> = (0..=10).collect();
    lengths.shuffle(rng);
    let take = rng.gen_range(1..=3);
    let mut spec = OccurrenceSpec::new(m, lengths[..take].iter().copied()).with_cap(k);
    for _ in 0..rng.gen_range(0..=3) {
        let l = rng.gen_range(1..=3);
        let p = rand_text(rng, m, l);
        if !weighted && rng.gen_bool(0.3) {
            spec = spec.forbid(p);
        } else {
            let occ: Vec<u32> = (0..=k).filter(|_| rng.gen_bool(0.6)).collect();
            let mut cp = CountedPattern::new(p, occ);
            if weighted {
                cp = cp.weighted(rng.gen_range(0..=9) as f64);
            }
            if rng.gen_bool(0.15) {
                cp = cp.ignoring_count();
            }
            spec = spec.count(cp);
        }
    }
    if weighted && rng.gen_bool(0.3) {
        let l = rng.gen_range(1..=3);
        spec = spec.forbid(rand_text(rng, m, l));
    }
    spec
}

fn counting(rng: &mut ChaCha8Rng) -> Outcome {
    let mut nonzero = 0;
    for _ in 0..500 {
        let spec = rand_spec(rng, false);
        let got = count_constrained(&spec).map_err(|e| e.to_string())?;
        let want = oracle_count(&spec).map_err(|e| e.to_string())?;
        ensure(got == want, || format!("{spec:?}: {got} vs {want}"))?;
        nonzero += (got != BigUint::from(0u32)) as usize;
    }
    for _ in 0..100 {
        let m = rng.gen_range(1..=3u32);
        let len = rng.gen_range(0..=8usize);
        let k = rng.gen_range(0..=3);
        let mut spec = OccurrenceSpec::new(m, [len]).with_cap(k);
        for _ in 0..rng.gen_range(0..=3) {
            let l = rng.gen_range(1..=3);
            spec = spec.count(CountedPattern::new(rand_text(rng, m, l), 0..=k));
        }
        let got = count_constrained(&spec).map_err(|e| e.to_string())?;
        let total = BigUint::from(m).pow(len as u32);
        // a pattern may occur more than k times, so only bound from above
        ensure(got <= total, || format!("{spec:?}: {got} exceeds {total}"))?;
        if spec.counted.is_empty() || k as usize >= len {
            ensure(got == total, || format!("{spec:?}: {got} vs {total}"))?;
        }
    }
    Ok(format!(
        "500 specs ({nonzero} nonzero); unconstrained identity on 100 more"
    ))
}

fn rand_dfa(rng: &mut ChaCha8Rng) -> EpsilonDfa {
    let n = rng.gen_range(1..=5);
    let m = rng.gen_range(1..=2);
    let mut edges = Vec::new();
    for from in 0..n {
        for symbol in 1..=m {
            for _ in 0..rng.gen_range(0..=2) {
                edges.push(DfaEdge {
                    from,
                    to: rng.gen_range(0..n),
                    symbol,
                    absorbing: true,
                });
            }
            if rng.gen_bool(0.5) {
                edges.push(DfaEdge {
                    from,
                    to: rng.gen_range(0..n),
                    symbol,
                    absorbing: false,
                });
            }
        }
    }
    let finals: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
    EpsilonDfa::new(n, rng.gen_range(0..n), &finals, m, edges).unwrap()
}

fn epsilon_dfa(rng: &mut ChaCha8Rng) -> Outcome {
    let mut cut = 0;
    for _ in 0..300 {
        let dfa = rand_dfa(rng);
        let lengths: BTreeSet<usize> = (0..=8).filter(|_| rng.gen_bool(0.3)).collect();
        let got = count_epsilon_dfa(&dfa, &lengths).map_err(|e| e.to_string())?;
        let want = oracle_edfa_count(&dfa, &lengths).map_err(|e| e.to_string())?;
        let removed: BTreeSet<usize> = dfa.cycle_edges().into_iter().collect();
        ensure(removed == oracle_cycle_edges(&dfa), || {
            format!("{dfa:?}: cycle edges differ")
        })?;
        ensure(got == want, || {
            format!("{dfa:?} {lengths:?}: {got} vs {want}")
        })?;
        cut += !removed.is_empty() as usize;
    }
    Ok(format!("300 automata, {cut} with cycle edges removed"))
}

fn max_weight(rng: &mut ChaCha8Rng) -> Outcome {
    let aggs = [Agg::Sum, Agg::Max, Agg::Product];
    let mut found = 0;
    for _ in 0..300 {
        let spec = rand_spec(rng, true);
        let agg = *aggs.choose(rng).unwrap();
        let got = max_weight_string(&spec, agg).map_err(|e| e.to_string())?;
        let want = oracle_max_weight_string(&spec, agg).map_err(|e| e.to_string())?;
        let ctx = || format!("{spec:?} {agg:?}: {got:?} vs {want:?}");
        match (&got, &want) {
            (Some(r), Some((w, _))) => {
                ensure(r.weight == *w, ctx)?;
                ensure(
                    oracle_string_weight(&spec, agg, &r.witness) == Some(r.weight),
                    ctx,
                )?;
                found += 1;
            }
            (None, None) => {}
            _ => return Err(ctx()),
        }
    }
    Ok(format!("300 specs, {found} feasible"))
}

fn peak_rss_kb() -> Option<u64> {
    let status = std::fs::read_to_string("/proc/self/status").ok()?;
    let line = status.lines().find(|l| l.starts_with("VmHWM:"))?;
    line.split_whitespace().nth(1)?.parse().ok()
}

fn performance(rng: &mut ChaCha8Rng) -> Outcome {
    let text = rand_text(rng, 4, 1_000_000);
    let start = Instant::now();
    let index = build_suffix_index(&[text]).map_err(|e| e.to_string())?;
    let sa_time = start.elapsed();
    ensure(index.len() >= 1_000_000, || "suffix index too short".into())?;
    drop(index);

    let long: Vec<Symbol> = (0..10_000_000).map(|_| rng.gen_range(1..=2)).collect();
    let start = Instant::now();
    let fail = failure_function(&long).map_err(|e| e.to_string())?;
    let kmp_time = start.elapsed();
    ensure(fail.len() == long.len(), || "failure array length".into())?;

    let peak = peak_rss_kb();
    ensure(sa_time < Duration::from_secs(10), || {
        format!("suffix index took {sa_time:?}")
    })?;
    ensure(kmp_time < Duration::from_secs(2), || {
        format!("failure function took {kmp_time:?}")
    })?;
    if let Some(kb) = peak {
        ensure(kb < 1 << 20, || format!("peak memory {} MiB", kb / 1024))?;
    }
    Ok(format!(
        "suffix index {sa_time:.2?}, failure function {kmp_time:.2?}, peak {}",
        peak.map_or("unknown".to_string(), |kb| format!("{} MiB", kb / 1024))
    ))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("prefix queries", prefix_queries),
        ("shortest common concatenation", common_concat),
        ("palindrome concatenation", palindrome_concat),
        ("minimum lexicographic concatenation", min_lex),
        ("constrained common substring", lccs),
        ("max-weight common subsequence", mwcs),
        ("shortest absent substring", absent),
        ("constrained counting", counting),
        ("epsilon-dfa counting", epsilon_dfa),
        ("max-weight string", max_weight),
        ("performance", performance),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed + i as u64);
        match run(&mut rng) {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
