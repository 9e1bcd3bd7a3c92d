use num_traits::Zero;

use super::spec::{Layout, OccurrenceSpec, DEFAULT_TABLE_CAP};
use crate::error::Result;
use crate::BigCount;

/// One length layer of the counting table: entry `(q, v)` is the number of
/// distinct strings of that length driving the automaton to state `q` with
/// occurrence vector `v`. Forbidden states stay zero.
#[derive(Debug, Clone, PartialEq)]
pub struct CountTable {
    pub length: usize,
    pub states: usize,
    pub vectors: usize,
    radix: usize,
    cells: Vec<BigCount>,
}

impl CountTable {
    pub fn get(&self, q: usize, v: usize) -> &BigCount {
        &self.cells[q * self.vectors + v]
    }

    /// Entry for the vector with component values `digits` (overflow is `k + 1`).
    pub fn get_digits(&self, q: usize, digits: &[u32]) -> &BigCount {
        let v = digits
            .iter()
            .rev()
            .fold(0, |acc, &d| acc * self.radix + d as usize);
        self.get(q, v)
    }

    pub fn total(&self) -> BigCount {
        self.cells.iter().sum()
    }
}

/// Number of strings satisfying `spec`.
pub fn count_constrained(spec: &OccurrenceSpec) -> Result<BigCount> {
    count_constrained_capped(spec, DEFAULT_TABLE_CAP)
}

pub fn count_constrained_capped(spec: &OccurrenceSpec, cap: usize) -> Result<BigCount> {
    let layout = Layout::new(spec, cap)?;
    let mut total = BigCount::zero();
    run(&layout, spec.max_length(), |len, cells| {
        if spec.lengths.contains(&len) {
            for (i, c) in cells.iter().enumerate() {
                if !c.is_zero() && layout.accept[i % layout.vectors] {
                    total += c;
                }
            }
        }
    });
    Ok(total)
}

/// The full table at one length, for inspection.
pub fn count_table(spec: &OccurrenceSpec, length: usize) -> Result<CountTable> {
    let layout = Layout::new(spec, DEFAULT_TABLE_CAP)?;
    let mut out = None;
    run(&layout, length, |len, cells| {
        if len == length {
            out = Some(cells.to_vec());
        }
    });
    Ok(CountTable {
        length,
        states: layout.automaton.state_count(),
        vectors: layout.vectors,
        radix: layout.radix,
        cells: out.expect("final layer visited"),
    })
}

fn run(layout: &Layout, max_len: usize, mut visit: impl FnMut(usize, &[BigCount])) {
    let a = &layout.automaton;
    let nv = layout.vectors;
    let mut cur = vec![BigCount::zero(); a.state_count() * nv];
    cur[a.initial() * nv] = BigCount::from(1u32);
    visit(0, &cur);
    for len in 1..=max_len {
        let mut next = vec![BigCount::zero(); cur.len()];
        for (i, c) in cur.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (q, v) = (i / nv, i % nv);
            for sym in 1..=a.alphabet() {
                let to = a.next(q, sym);
                if a.is_forbidden(to) {
                    continue;
                }
                next[to * nv + layout.step(to, v)] += c;
            }
        }
        cur = next;
        visit(len, &cur);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::CountedPattern;
    use crate::Text;

    fn t(s: &str) -> Text {
        Text::letters(s)
    }

    #[test]
    fn forbidding_aa_gives_fibonacci() {
        let spec = OccurrenceSpec::new(2, [5]).forbid(t("aa"));
        assert_eq!(count_constrained(&spec).unwrap(), BigCount::from(13u32));
    }

    #[test]
    fn forbidding_aa_length_three() {
        let spec = OccurrenceSpec::new(2, [3]).forbid(t("aa"));
        assert_eq!(count_constrained(&spec).unwrap(), BigCount::from(5u32));
    }

    #[test]
    fn ab_once_in_length_two() {
        let spec = OccurrenceSpec::new(2, [2])
            .count(CountedPattern::new(t("ab"), [1]))
            .with_cap(1);
        assert_eq!(count_constrained(&spec).unwrap(), BigCount::from(1u32));
    }

    #[test]
    fn aa_twice_in_length_three() {
        let spec = OccurrenceSpec::new(2, [3])
            .count(CountedPattern::new(t("aa"), [2]))
            .with_cap(2);
        assert_eq!(count_constrained(&spec).unwrap(), BigCount::from(1u32));
    }

    #[test]
    fn exactly_one_ab() {
        let spec = OccurrenceSpec::new(2, [3])
            .count(CountedPattern::new(t("ab"), [1]))
            .with_cap(1);
        // aab, abb, bab, aba
        assert_eq!(count_constrained(&spec).unwrap(), BigCount::from(4u32));
    }

    #[test]
    fn overlapping_occurrences_count() {
        let spec = OccurrenceSpec::new(1, [4])
            .count(CountedPattern::new(t("aa"), [3]))
            .with_cap(3);
        assert_eq!(count_constrained(&spec).unwrap(), BigCount::from(1u32));
    }

    #[test]
    fn length_zero_is_the_empty_string() {
        let spec = OccurrenceSpec::new(3, [0]);
        assert_eq!(count_constrained(&spec).unwrap(), BigCount::from(1u32));
    }

    #[test]
    fn unconstrained_layer_sums_to_power() {
        let spec = OccurrenceSpec::new(3, [6])
            .count(CountedPattern::new(t("ab"), [0, 1]))
            .with_cap(1);
        let table = count_table(&spec, 6).unwrap();
        assert_eq!(table.total(), BigCount::from(729u32));
    }

    #[test]
    fn occurrence_above_k_is_rejected() {
        let spec = OccurrenceSpec::new(2, [3])
            .count(CountedPattern::new(t("a"), [2]))
            .with_cap(1);
        assert!(count_constrained(&spec).is_err());
    }

    #[test]
    fn large_count_is_exact() {
        let spec = OccurrenceSpec::new(2, [200]);
        assert_eq!(
            count_constrained(&spec).unwrap(),
            BigCount::from(1u32) << 200usize
        );
    }
}
