/// Sparse table answering range-minimum queries in O(1) after
/// O(n log n) preprocessing.
#[derive(Debug, Clone)]
pub struct SparseTable {
    // levels[k][i] = min(values[i .. i + 2^k])
    levels: Vec<Vec<u32>>,
}

impl SparseTable {
    pub fn new(values: &[u32]) -> Self {
        let n = values.len();
        let mut levels = vec![values.to_vec()];
        let mut width = 1;
        while 2 * width <= n {
            let prev = levels.last().unwrap();
            let next: Vec<u32> = (0..=n - 2 * width)
                .map(|i| prev[i].min(prev[i + width]))
                .collect();
            levels.push(next);
            width *= 2;
        }
        SparseTable { levels }
    }

    pub fn len(&self) -> usize {
        self.levels[0].len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Minimum over the half-open range `lo..hi` (0-indexed, `lo < hi`).
    pub fn min(&self, lo: usize, hi: usize) -> u32 {
        debug_assert!(lo < hi && hi <= self.len());
        let k = (usize::BITS - 1 - (hi - lo).leading_zeros()) as usize;
        let row = &self.levels[k];
        row[lo].min(row[hi - (1 << k)])
    }

    #[doc(hidden)]
    pub fn set(&mut self, i: usize, value: u32) {
        // Rebuilds only the affected cells; used by fault-injection hooks.
        self.levels[0][i] = value;
        let mut width = 1;
        for k in 1..self.levels.len() {
            let start = i.saturating_sub(2 * width - 1);
            let end = i.min(self.levels[k].len() - 1);
            for j in start..=end {
                self.levels[k][j] = self.levels[k - 1][j].min(self.levels[k - 1][j + width]);
            }
            width *= 2;
        }
    }
}
