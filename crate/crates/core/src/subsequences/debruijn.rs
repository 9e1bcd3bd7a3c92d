use crate::error::{Error, Result};
use crate::text::{Symbol, Text};

/// Default bound on the output length.
pub const DEFAULT_LENGTH_CAP: usize = 1 << 24;

/// Shortest string containing every length-`q` string over `1..=m`,
/// of length `m^q + q - 1`.
pub fn de_bruijn_superstring(m: u32, q: usize) -> Result<Text> {
    de_bruijn_superstring_capped(m, q, DEFAULT_LENGTH_CAP)
}

/// Builds the graph on `(q-1)`-grams where the edge labelled `c` out of
/// gram `g` enters the last `q - 1` symbols of `g + c`, walks an Euler
/// cycle with Hierholzer's algorithm, cuts the cycle at the edge entering
/// the start vertex and writes that vertex's gram followed by every edge
/// label of the cycle.
pub fn de_bruijn_superstring_capped(m: u32, q: usize, cap: usize) -> Result<Text> {
    if m == 0 || q == 0 {
        return Err(Error::InvalidArgument(
            "alphabet and order must be at least 1".into(),
        ));
    }
    let too_big = Error::CapExceeded {
        what: "de Bruijn length",
        limit: cap as u64,
    };
    let edges = (m as usize).checked_pow(q as u32).ok_or(too_big.clone())?;
    if edges.checked_add(q - 1).is_none_or(|len| len > cap) {
        return Err(too_big);
    }
    let m = m as usize;
    let vertices = edges / m;

    // Hierholzer: next_label[v] is the next unused outgoing edge of v
    let mut next_label = vec![0usize; vertices];
    let mut stack: Vec<(usize, Option<usize>)> = vec![(0, None)];
    let mut circuit: Vec<usize> = Vec::with_capacity(edges);
    while let Some(&(v, _)) = stack.last() {
        if next_label[v] < m {
            let c = next_label[v];
            next_label[v] += 1;
            stack.push(((v * m + c) % vertices, Some(c)));
        } else {
            let (_, label) = stack.pop().unwrap();
            if let Some(c) = label {
                circuit.push(c);
            }
        }
    }
    circuit.reverse();
    debug_assert_eq!(circuit.len(), edges);

    // the cycle starts and ends at vertex 0, whose gram is (q-1) ones
    let mut out: Vec<Symbol> = vec![1; q - 1];
    out.extend(circuit.iter().map(|&c| c as Symbol + 1));
    Text::new(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn check(m: u32, q: usize) {
        let s = de_bruijn_superstring(m, q).unwrap();
        let expected = (m as usize).pow(q as u32);
        assert_eq!(s.len(), expected + q - 1);
        let grams: HashSet<&[Symbol]> = s.windows(q).collect();
        assert_eq!(grams.len(), expected);
        assert!(s.iter().all(|&c| (1..=m).contains(&c)));
    }

    #[test]
    fn small_orders() {
        for (m, q) in [
            (2, 2),
            (2, 1),
            (3, 2),
            (1, 1),
            (1, 4),
            (2, 5),
            (4, 3),
            (3, 4),
        ] {
            check(m, q);
        }
        assert_eq!(de_bruijn_superstring(2, 2).unwrap().len(), 5);
    }

    #[test]
    fn caps_and_errors() {
        assert!(de_bruijn_superstring(0, 2).is_err());
        assert!(de_bruijn_superstring(2, 0).is_err());
        assert!(de_bruijn_superstring_capped(2, 4, 18).is_err());
        assert!(de_bruijn_superstring_capped(2, 4, 19).is_ok());
        assert!(de_bruijn_superstring(10, 40).is_err());
    }
}
