//! Prefix queries on the KMP failure tree.
//!
//! `pq(i, j)` asks whether the prefix of length `i` equals the length-`i`
//! substring ending at `j`; `lpq(j, k)` asks for the largest such `i <= k`.
//! Both reduce to ancestor questions in the tree whose vertices are the
//! prefix lengths `0..=n` and whose parent function is the border array.

use crate::error::{Error, Result};
use crate::primitives::failure::failure_function;
use crate::text::Symbol;

const ROOT: usize = 0;

#[derive(Debug, Clone)]
pub struct FailureTree {
    parent: Vec<usize>,
    dfs_num: Vec<u32>,
    dfs_max: Vec<u32>,
    // anc[j][v] = ancestor 2^j levels above v (root is its own parent)
    anc: Vec<Vec<u32>>,
    strided: Option<Strided>,
}

#[derive(Debug, Clone)]
struct Strided {
    stride: usize,
    anc: Vec<u32>,
}

/// Builds the failure tree of `s`; `stride` additionally enables
/// [`FailureTree::lpq_strided`].
pub fn build_failure_tree(s: &[Symbol], stride: Option<usize>) -> Result<FailureTree> {
    FailureTree::new(s, stride)
}

impl FailureTree {
    pub fn new(s: &[Symbol], stride: Option<usize>) -> Result<Self> {
        if stride == Some(0) {
            return Err(Error::InvalidArgument("stride must be at least 1".into()));
        }
        let parent = failure_function(s)?.with_root().to_vec();
        let n = s.len();

        // children in increasing order; p(i) < i so a counting pass suffices
        let mut first_child = vec![0u32; n + 2];
        for &p in &parent[1..] {
            first_child[p + 1] += 1;
        }
        for v in 0..=n {
            first_child[v + 1] += first_child[v];
        }
        let mut fill = first_child.clone();
        let mut children = vec![0u32; n];
        for v in 1..=n {
            let p = parent[v];
            children[fill[p] as usize] = v as u32;
            fill[p] += 1;
        }

        let mut dfs_num = vec![0u32; n + 1];
        let mut dfs_max = vec![0u32; n + 1];
        let mut strided_anc = stride.map(|_| vec![0u32; n + 1]);
        // stack of (vertex, next child cursor); its height is the level
        let mut stack: Vec<(usize, u32)> = vec![(ROOT, first_child[ROOT])];
        let mut counter = 1u32;
        dfs_num[ROOT] = 1;
        while let Some(&mut (v, ref mut cursor)) = stack.last_mut() {
            if *cursor < first_child[v + 1] {
                let child = children[*cursor as usize] as usize;
                *cursor += 1;
                counter += 1;
                dfs_num[child] = counter;
                stack.push((child, first_child[child]));
                if let (Some(c), Some(table)) = (stride, strided_anc.as_mut()) {
                    // 1-indexed stack level of `child`
                    let ltop = stack.len();
                    table[child] = if ltop <= c {
                        ROOT as u32
                    } else {
                        let level = ltop - 1 - ((ltop - 1) % c);
                        stack[level - 1].0 as u32
                    };
                }
            } else {
                dfs_max[v] = counter;
                stack.pop();
            }
        }

        let levels = ceil_log2(n) + 1;
        let mut anc: Vec<Vec<u32>> = Vec::with_capacity(levels);
        anc.push(parent.iter().map(|&p| p as u32).collect());
        for j in 1..levels {
            let prev = &anc[j - 1];
            let next = prev.iter().map(|&a| prev[a as usize]).collect();
            anc.push(next);
        }

        Ok(FailureTree {
            parent,
            dfs_num,
            dfs_max,
            anc,
            strided: stride
                .zip(strided_anc)
                .map(|(stride, anc)| Strided { stride, anc }),
        })
    }

    /// Length of the underlying string.
    pub fn len(&self) -> usize {
        self.parent.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Parent of vertex `v`; the root is its own parent.
    pub fn parent(&self, v: usize) -> usize {
        self.parent[v]
    }

    pub fn stride(&self) -> Option<usize> {
        self.strided.as_ref().map(|s| s.stride)
    }

    /// `(DFSnum, DFSmax)` of `v`.
    pub fn dfs_interval(&self, v: usize) -> (u32, u32) {
        (self.dfs_num[v], self.dfs_max[v])
    }

    /// Ancestor `2^j` levels above `v`.
    pub fn ancestor(&self, v: usize, j: usize) -> usize {
        self.anc[j.min(self.anc.len() - 1)][v] as usize
    }

    /// The strided jump target of `v`, when built with a stride.
    pub fn strided_ancestor(&self, v: usize) -> Option<usize> {
        self.strided.as_ref().map(|s| s.anc[v] as usize)
    }

    /// Whether `a` is an ancestor of `b` (or equal to it).
    pub fn is_ancestor(&self, a: usize, b: usize) -> bool {
        self.dfs_num[a] <= self.dfs_num[b] && self.dfs_max[a] >= self.dfs_max[b]
    }

    pub fn pq(&self, i: usize, j: usize) -> Result<bool> {
        if i > j || j > self.len() {
            return Err(Error::Bounds(format!(
                "pq needs 0 <= i <= j <= {}, got i={i}, j={j}",
                self.len()
            )));
        }
        Ok(self.is_ancestor(i, j))
    }

    pub fn lpq(&self, j: usize, k: usize) -> Result<usize> {
        self.check_lpq(j, k)?;
        // w(v) = v, so weights are the vertex ids themselves
        let mut v = j;
        for level in (0..self.anc.len()).rev() {
            let a = self.anc[level][v] as usize;
            if a > k {
                v = a;
            }
        }
        if v > k && v != ROOT {
            v = self.parent[v];
        }
        Ok(v)
    }

    pub fn lpq_strided(&self, j: usize, k: usize) -> Result<usize> {
        let strided = self.strided.as_ref().ok_or(Error::StrideMissing)?;
        self.check_lpq(j, k)?;
        let mut v = j;
        while v != ROOT && strided.anc[v] as usize > k {
            v = strided.anc[v] as usize;
        }
        while v != ROOT && self.parent[v] > k {
            v = self.parent[v];
        }
        if v > k && v != ROOT {
            v = self.parent[v];
        }
        Ok(v)
    }

    fn check_lpq(&self, j: usize, k: usize) -> Result<()> {
        if k > j || j > self.len() {
            return Err(Error::Bounds(format!(
                "lpq needs 0 <= k <= j <= {}, got j={j}, k={k}",
                self.len()
            )));
        }
        Ok(())
    }
}

fn ceil_log2(n: usize) -> usize {
    if n <= 1 {
        0
    } else {
        (usize::BITS - (n - 1).leading_zeros()) as usize
    }
}
