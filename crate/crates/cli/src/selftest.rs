//! Fixed, seed-deterministic oracle-equivalence battery.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use strproc::concatenation::{min_lex_concat, shortest_common_concat, shortest_palindrome_concat};
use strproc::counting::{
    count_constrained, count_epsilon_dfa, max_weight_string, CountedPattern, DfaEdge, EpsilonDfa,
    OccurrenceSpec,
};
use strproc::oracles::*;
use strproc::prefix_queries::build_failure_tree;
use strproc::primitives::{build_suffix_index, failure_function};
use strproc::subsequences::{
    lccs_constrained, max_weight_common_subsequence, shortest_non_substring_lexicographic,
    shortest_non_substring_trie, Agg, AggPair, DEFAULT_TUPLE_CAP,
};
use strproc::{Symbol, Text};

use crate::CliError;

pub const DEFAULT_SEED: u64 = 20_240_917;
const ROUNDS: usize = 40;

struct Battery {
    rng: ChaCha8Rng,
    seed: u64,
    checks: Vec<(&'static str, usize)>,
}

impl Battery {
    fn text(&mut self, m: u32, min: usize, max: usize) -> Text {
        let n = self.rng.gen_range(min..=max);
        Text::new((0..n).map(|_| self.rng.gen_range(1..=m)).collect())
            .expect("symbols are positive")
    }

    fn set(&mut self, m: u32, max_n: usize, max_len: usize) -> Vec<Text> {
        let n = self.rng.gen_range(1..=max_n);
        (0..n).map(|_| self.text(m, 1, max_len)).collect()
    }

    fn check(
        &mut self,
        name: &'static str,
        ok: bool,
        instance: impl FnOnce() -> String,
    ) -> Result<(), CliError> {
        if !ok {
            return Err(CliError::with_detail(json!({
                "error": "mismatch",
                "check": name,
                "seed": self.seed,
                "instance": instance(),
            })));
        }
        match self.checks.iter_mut().find(|(n, _)| *n == name) {
            Some((_, c)) => *c += 1,
            None => self.checks.push((name, 1)),
        }
        Ok(())
    }
}

fn naive_lcp(z: &[Symbol], a: usize, b: usize) -> usize {
    z[a - 1..]
        .iter()
        .zip(&z[b - 1..])
        .take_while(|(x, y)| x == y)
        .count()
}

pub fn run(seed: u64, inject_lcp_fault: bool) -> Result<Value, CliError> {
    let mut b = Battery {
        rng: ChaCha8Rng::seed_from_u64(seed),
        seed,
        checks: Vec::new(),
    };
    let err = |e: strproc::Error| CliError::from(e);

    for round in 0..ROUNDS {
        // suffix index against direct suffix comparison
        let texts = b.set(3, 3, 12);
        let mut idx = build_suffix_index(&texts).map_err(err)?;
        if inject_lcp_fault && round == 0 {
            let r = idx.len() / 2;
            let v = idx.lcp(r);
            idx.corrupt_lcp(r, v + 1);
        }
        let z = idx.joined().to_vec();
        for r in 1..idx.len() {
            let (p, q) = (idx.suffix_at(r), idx.suffix_at(r + 1));
            let ok = z[p - 1..] < z[q - 1..] && idx.lcp(r) == naive_lcp(&z, p, q);
            b.check("suffix_index", ok, || format!("texts={texts:?} rank={r}"))?;
        }

        let s = b.text(3, 1, 40);
        let fail = failure_function(&s).map_err(err)?;
        let tree = build_failure_tree(&s, Some(3)).map_err(err)?;
        for j in 1..=s.len() {
            let ok = fail.get(j) == oracle_lpq(&s, j, j - 1).map_err(err)?;
            b.check("failure_function", ok, || format!("s={s:?} j={j}"))?;
            for k in 0..=j {
                let want = oracle_lpq(&s, j, k).map_err(err)?;
                let ok = tree.lpq(j, k).map_err(err)? == want
                    && tree.lpq_strided(j, k).map_err(err)? == want;
                b.check("prefix_queries", ok, || format!("s={s:?} j={j} k={k}"))?;
            }
        }

        let (sa, sb) = (b.set(2, 3, 3), b.set(2, 3, 3));
        let got = shortest_common_concat(&sa, &sb).map_err(err)?;
        let want = oracle_shortest_common_concat(&sa, &sb, 10).map_err(err)?;
        let ok = match (&got, &want) {
            (Some((l, w)), Some((lo, _))) => l == lo && parses_as(w, &sa) && parses_as(w, &sb),
            (Some((l, _)), None) => *l > 10,
            (None, w) => w.is_none(),
        };
        b.check("shortest_common_concat", ok, || {
            format!("a={sa:?} b={sb:?}")
        })?;

        let got = shortest_palindrome_concat(&sa).map_err(err)?;
        let want = oracle_palindrome_concat(&sa, 10).map_err(err)?;
        let ok = match (&got, &want) {
            (Some((l, _)), Some((lo, _))) => l == lo,
            (Some((l, _)), None) => *l > 10,
            (None, w) => w.is_none(),
        };
        b.check("palindrome_concat", ok, || format!("a={sa:?}"))?;

        let strings = b.set(2, 6, 4);
        let ok = min_lex_concat(&strings).map_err(err)? == oracle_min_lex(&strings).map_err(err)?;
        b.check("min_lex_concat", ok, || format!("strings={strings:?}"))?;

        let texts = b.set(3, 3, 12);
        let a: Vec<usize> = texts.iter().map(|_| b.rng.gen_range(0..=3)).collect();
        let f = b.rng.gen_range(1..=texts.len());
        let ok = lccs_constrained(&texts, &a, f).map_err(err)?.length
            == oracle_lccs(&texts, &a, f).map_err(err)?.0;
        b.check("lccs", ok, || format!("texts={texts:?} a={a:?} f={f}"))?;

        let texts = b.set(3, 3, 6);
        let texts = if texts.len() < 2 {
            vec![texts[0].clone(), texts[0].clone()]
        } else {
            texts
        };
        let w: Vec<Vec<f64>> = texts
            .iter()
            .map(|t| {
                (0..t.len())
                    .map(|_| b.rng.gen_range(0..=9) as f64)
                    .collect()
            })
            .collect();
        let aggs = AggPair::default();
        let ok = max_weight_common_subsequence(&texts, &w, aggs, DEFAULT_TUPLE_CAP)
            .map_err(err)?
            .weight
            == oracle_mwcs(&texts, &w, aggs).map_err(err)?;
        b.check("mwcs", ok, || format!("texts={texts:?} weights={w:?}"))?;

        let m = b.rng.gen_range(1..=3);
        let texts = b.set(m, 3, 30);
        let want = oracle_absent(&texts, m, 31).map_err(err)?;
        let ok = shortest_non_substring_trie(&texts, m).map_err(err)? == want
            && shortest_non_substring_lexicographic(&texts, m)
                .map_err(err)?
                .len()
                == want.len();
        b.check("absent", ok, || format!("texts={texts:?} m={m}"))?;

        let m = b.rng.gen_range(1..=2);
        let k = b.rng.gen_range(0..=2);
        let len = b.rng.gen_range(0..=7);
        let mut spec = OccurrenceSpec::new(m, [len]).with_cap(k);
        if b.rng.gen_bool(0.5) {
            let p = b.text(m, 1, 2);
            spec = spec.forbid(p);
        }
        for _ in 0..b.rng.gen_range(0..=2) {
            let p = b.text(m, 1, 3);
            let occ: Vec<u32> = (0..=k).filter(|_| b.rng.gen_bool(0.6)).collect();
            let wt = b.rng.gen_range(0..=5) as f64;
            spec = spec.count(CountedPattern::new(p, occ).weighted(wt));
        }
        let ok = count_constrained(&spec).map_err(err)? == oracle_count(&spec).map_err(err)?;
        b.check("count_constrained", ok, || format!("{spec:?}"))?;
        let got = max_weight_string(&spec, Agg::Sum)
            .map_err(err)?
            .map(|r| r.weight);
        let want = oracle_max_weight_string(&spec, Agg::Sum)
            .map_err(err)?
            .map(|r| r.0);
        b.check("max_weight_string", got == want, || format!("{spec:?}"))?;

        let n = b.rng.gen_range(1..=4);
        let mut edges = Vec::new();
        for from in 0..n {
            for symbol in 1..=m {
                if b.rng.gen_bool(0.7) {
                    edges.push(DfaEdge {
                        from,
                        to: b.rng.gen_range(0..n),
                        symbol,
                        absorbing: true,
                    });
                }
                if b.rng.gen_bool(0.4) {
                    edges.push(DfaEdge {
                        from,
                        to: b.rng.gen_range(0..n),
                        symbol,
                        absorbing: false,
                    });
                }
            }
        }
        let finals: Vec<usize> = (0..n).filter(|_| b.rng.gen_bool(0.5)).collect();
        let dfa = EpsilonDfa::new(n, 0, &finals, m, edges).map_err(err)?;
        let lengths: BTreeSet<usize> = [b.rng.gen_range(0..=6)].into();
        let ok = count_epsilon_dfa(&dfa, &lengths).map_err(err)?
            == oracle_edfa_count(&dfa, &lengths).map_err(err)?;
        b.check("count_epsilon_dfa", ok, || {
            format!("{dfa:?} lengths={lengths:?}")
        })?;
    }

    let checks: serde_json::Map<String, Value> = b
        .checks
        .iter()
        .map(|(n, c)| (n.to_string(), json!(c)))
        .collect();
    Ok(json!({ "status": "ok", "seed": seed, "checks": checks }))
}
