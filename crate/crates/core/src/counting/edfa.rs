use std::collections::{BTreeSet, VecDeque};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::text::Symbol;
use crate::BigCount;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DfaEdge {
    pub from: usize,
    pub to: usize,
    pub symbol: Symbol,
    /// Absorbing edges consume `symbol`; non-absorbing ones only require it
    /// to be the next input symbol.
    pub absorbing: bool,
}

/// Automaton whose edges may decline to consume their symbol. Reading one
/// symbol `c` follows zero or more non-absorbing `c`-edges and then exactly
/// one absorbing `c`-edge.
#[derive(Debug, Clone, PartialEq)]
pub struct EpsilonDfa {
    states: usize,
    initial: usize,
    finals: Vec<bool>,
    alphabet: u32,
    edges: Vec<DfaEdge>,
}

impl EpsilonDfa {
    pub fn new(
        states: usize,
        initial: usize,
        finals: &[usize],
        alphabet: u32,
        edges: Vec<DfaEdge>,
    ) -> Result<Self> {
        if states == 0 || initial >= states {
            return Err(Error::MalformedAutomaton(
                "initial state out of range".into(),
            ));
        }
        let mut final_flags = vec![false; states];
        for &f in finals {
            *final_flags.get_mut(f).ok_or_else(|| {
                Error::MalformedAutomaton(format!("final state {f} out of range"))
            })? = true;
        }
        let mut seen = BTreeSet::new();
        for e in &edges {
            if e.from >= states || e.to >= states {
                return Err(Error::MalformedAutomaton(format!(
                    "edge {} -> {} out of range",
                    e.from, e.to
                )));
            }
            if e.symbol == 0 || e.symbol > alphabet {
                return Err(Error::SymbolOutOfRange {
                    symbol: e.symbol,
                    alphabet,
                });
            }
            if !e.absorbing && !seen.insert((e.from, e.symbol)) {
                return Err(Error::MalformedAutomaton(format!(
                    "state {} has two non-absorbing edges on symbol {}",
                    e.from, e.symbol
                )));
            }
        }
        Ok(EpsilonDfa {
            states,
            initial,
            finals: final_flags,
            alphabet,
            edges,
        })
    }

    pub fn states(&self) -> usize {
        self.states
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn is_final(&self, q: usize) -> bool {
        self.finals[q]
    }

    pub fn alphabet(&self) -> u32 {
        self.alphabet
    }

    pub fn edges(&self) -> &[DfaEdge] {
        &self.edges
    }

    /// Indices of non-absorbing edges lying on a cycle of their symbol's
    /// non-absorbing subgraph.
    pub fn cycle_edges(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for c in 1..=self.alphabet {
            let mut next = vec![None; self.states];
            for (i, e) in self.edges.iter().enumerate() {
                if !e.absorbing && e.symbol == c {
                    next[e.from] = Some(i);
                }
            }
            // 0 = unvisited, 1 = on the current walk, 2 = finished
            let mut mark = vec![0u8; self.states];
            for start in 0..self.states {
                let mut walk = Vec::new();
                let mut v = start;
                let cycle_at = loop {
                    match mark[v] {
                        1 => break Some(v),
                        2 => break None,
                        _ => {}
                    }
                    mark[v] = 1;
                    walk.push(v);
                    match next[v] {
                        Some(i) => v = self.edges[i].to,
                        None => break None,
                    }
                };
                if let Some(v) = cycle_at {
                    let mut u = v;
                    loop {
                        let i = next[u].expect("cycle edge");
                        out.push(i);
                        u = self.edges[i].to;
                        if u == v {
                            break;
                        }
                    }
                }
                for w in walk {
                    mark[w] = 2;
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Copy with every non-absorbing cycle edge removed.
    pub fn without_cycles(&self) -> EpsilonDfa {
        let cut: BTreeSet<usize> = self.cycle_edges().into_iter().collect();
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| !cut.contains(i))
            .map(|(_, e)| *e)
            .collect();
        EpsilonDfa {
            edges,
            ..self.clone()
        }
    }
}

/// Number of accepting runs over strings whose length lies in `lengths`,
/// after non-absorbing cycles are cut. When every string has at most one
/// run this is the number of accepted strings.
pub fn count_epsilon_dfa(dfa: &EpsilonDfa, lengths: &BTreeSet<usize>) -> Result<BigCount> {
    let dfa = dfa.without_cycles();
    let n = dfa.states;
    let m = dfa.alphabet as usize;
    let Some(&max_len) = lengths.iter().next_back() else {
        return Ok(BigCount::zero());
    };

    // per symbol: non-absorbing predecessors in topological order, and
    // absorbing edges grouped by target
    let mut order = vec![Vec::new(); m + 1];
    let mut eps_in = vec![vec![Vec::new(); n]; m + 1];
    let mut abs_in = vec![vec![Vec::new(); n]; m + 1];
    for e in &dfa.edges {
        let c = e.symbol as usize;
        if e.absorbing {
            abs_in[c][e.to].push(e.from);
        } else {
            eps_in[c][e.to].push(e.from);
        }
    }
    for c in 1..=m {
        let mut indeg = vec![0usize; n];
        let mut succ = vec![None; n];
        for (to, preds) in eps_in[c].iter().enumerate() {
            indeg[to] = preds.len();
            for &p in preds {
                succ[p] = Some(to);
            }
        }
        let mut queue: VecDeque<usize> = (0..n).filter(|&q| indeg[q] == 0).collect();
        while let Some(q) = queue.pop_front() {
            order[c].push(q);
            if let Some(t) = succ[q] {
                indeg[t] -= 1;
                if indeg[t] == 0 {
                    queue.push_back(t);
                }
            }
        }
        debug_assert_eq!(order[c].len(), n);
    }

    let accepted =
        |cnt: &[BigCount]| -> BigCount { (0..n).filter(|&q| dfa.finals[q]).map(|q| &cnt[q]).sum() };
    let mut cnt = vec![BigCount::zero(); n];
    cnt[dfa.initial] = BigCount::from(1u32);
    let mut total = BigCount::zero();
    if lengths.contains(&0) {
        total += accepted(&cnt);
    }
    for len in 1..=max_len {
        let mut next = vec![BigCount::zero(); n];
        for c in 1..=m {
            let mut reach = cnt.clone();
            for &q in &order[c] {
                let extra: BigCount = eps_in[c][q].iter().map(|&p| &reach[p]).sum();
                reach[q] += extra;
            }
            for q in 0..n {
                for &p in &abs_in[c][q] {
                    next[q] += &reach[p];
                }
            }
        }
        cnt = next;
        if lengths.contains(&len) {
            total += accepted(&cnt);
        }
    }
    Ok(total)
}
