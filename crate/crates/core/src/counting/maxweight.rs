use super::spec::{Layout, OccurrenceSpec, DEFAULT_TABLE_CAP};
use crate::error::{Error, Result};
use crate::subsequences::mwcs::Agg;
use crate::text::{Symbol, Text};

#[derive(Debug, Clone, PartialEq)]
pub struct MaxWeightResult {
    pub weight: f64,
    pub witness: Text,
    /// Automaton states visited, starting with the initial state.
    pub states: Vec<usize>,
}

/// Weight of a string with no pattern occurrences. Zero for sum and max,
/// one for product. `Min` has no usable value here and is rejected.
pub fn empty_weight(agg: Agg) -> Result<f64> {
    match agg {
        Agg::Sum | Agg::Max => Ok(0.0),
        Agg::Product => Ok(1.0),
        Agg::Min => Err(Error::InvalidArgument(
            "min is not supported for string weights".into(),
        )),
    }
}

/// Heaviest string satisfying `spec`, where a string's weight aggregates,
/// position by position, the weights of all patterns ending there.
/// Patterns marked `dont_care` still contribute weight.
pub fn max_weight_string(spec: &OccurrenceSpec, agg: Agg) -> Result<Option<MaxWeightResult>> {
    max_weight_string_capped(spec, agg, DEFAULT_TABLE_CAP)
}

pub fn max_weight_string_capped(
    spec: &OccurrenceSpec,
    agg: Agg,
    cap: usize,
) -> Result<Option<MaxWeightResult>> {
    let empty = empty_weight(agg)?;
    let max_len = spec.max_length();
    let layout = Layout::new(spec, cap / (max_len + 1))?;
    let a = &layout.automaton;
    let nv = layout.vectors;
    let cells = a.state_count() * nv;

    let ws: Vec<f64> = (0..a.state_count())
        .map(|q| {
            let end = a.ending(q);
            if end.is_empty() {
                empty
            } else {
                agg.fold(end.iter().map(|&i| spec.counted[i].weight))
            }
        })
        .collect();

    let mut wmax = vec![vec![f64::NEG_INFINITY; cells]];
    wmax[0][a.initial() * nv] = empty;
    // prev[l][cell] = (cell at l - 1, symbol read)
    let mut prev: Vec<Vec<(u32, Symbol)>> = vec![Vec::new()];
    for _ in 1..=max_len {
        let cur = wmax.last().expect("layer");
        let mut next = vec![f64::NEG_INFINITY; cells];
        let mut back = vec![(u32::MAX, 0); cells];
        for (i, &w) in cur.iter().enumerate() {
            if w == f64::NEG_INFINITY {
                continue;
            }
            let (q, v) = (i / nv, i % nv);
            for c in 1..=a.alphabet() {
                let to = a.next(q, c);
                if a.is_forbidden(to) {
                    continue;
                }
                let j = to * nv + layout.step(to, v);
                let cand = agg.combine(w, ws[to]);
                if cand > next[j] {
                    next[j] = cand;
                    back[j] = (i as u32, c);
                }
            }
        }
        wmax.push(next);
        prev.push(back);
    }

    let mut best: Option<(f64, usize, usize)> = None;
    for &len in &spec.lengths {
        for (i, &w) in wmax[len].iter().enumerate() {
            if w > f64::NEG_INFINITY
                && layout.accept[i % nv]
                && best.is_none_or(|(bw, _, _)| w > bw)
            {
                best = Some((w, len, i));
            }
        }
    }
    let Some((weight, len, mut cell)) = best else {
        return Ok(None);
    };
    let mut symbols = Vec::with_capacity(len);
    let mut states = vec![cell / nv];
    for l in (1..=len).rev() {
        let (p, c) = prev[l][cell];
        symbols.push(c);
        cell = p as usize;
        states.push(cell / nv);
    }
    symbols.reverse();
    states.reverse();
    Ok(Some(MaxWeightResult {
        weight,
        witness: Text::new(symbols)?,
        states,
    }))
}
