//! Static-point dominance max queries in up to three dimensions.

/// Weight paired with the id of the point that holds it; `id = None` marks
/// the neutral weight every point starts with.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Best {
    pub weight: f64,
    pub id: Option<usize>,
}

impl Best {
    fn max(self, other: Best) -> Best {
        if other.weight > self.weight || (other.weight == self.weight && self.id.is_none()) {
            other
        } else {
            self
        }
    }
}

#[derive(Debug, Clone)]
enum Layer {
    Leaf { keys: Vec<u32>, tree: Vec<Best> },
    Inner { keys: Vec<u32>, nodes: Vec<Layer> },
}

fn lowbit(t: usize) -> usize {
    t & t.wrapping_neg()
}

impl Layer {
    fn build(points: &[Vec<u32>], ids: &[usize], dim: usize, neutral: f64) -> Layer {
        let mut keys: Vec<u32> = ids.iter().map(|&i| points[i][dim]).collect();
        keys.sort_unstable();
        keys.dedup();
        let m = keys.len();
        if dim + 1 == points.first().map_or(1, |p| p.len()) {
            return Layer::Leaf {
                keys,
                tree: vec![
                    Best {
                        weight: neutral,
                        id: None
                    };
                    m
                ],
            };
        }
        // Fenwick node t (1-based) covers key indices (t - lowbit(t), t]
        let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); m];
        for &i in ids {
            let mut t = keys.binary_search(&points[i][dim]).unwrap() + 1;
            while t <= m {
                buckets[t - 1].push(i);
                t += lowbit(t);
            }
        }
        let nodes = buckets
            .iter()
            .map(|b| Layer::build(points, b, dim + 1, neutral))
            .collect();
        Layer::Inner { keys, nodes }
    }

    fn raise(&mut self, coords: &[u32], value: Best) {
        match self {
            Layer::Leaf { keys, tree } => {
                let m = keys.len();
                let mut t = keys
                    .binary_search(&coords[0])
                    .expect("point was registered")
                    + 1;
                while t <= m {
                    tree[t - 1] = tree[t - 1].max(value);
                    t += lowbit(t);
                }
            }
            Layer::Inner { keys, nodes } => {
                let m = keys.len();
                let mut t = keys
                    .binary_search(&coords[0])
                    .expect("point was registered")
                    + 1;
                while t <= m {
                    nodes[t - 1].raise(&coords[1..], value);
                    t += lowbit(t);
                }
            }
        }
    }

    fn query(&self, bounds: &[u32], acc: Best) -> Best {
        let mut acc = acc;
        match self {
            Layer::Leaf { keys, tree } => {
                let mut t = keys.partition_point(|&k| k < bounds[0]);
                while t > 0 {
                    acc = acc.max(tree[t - 1]);
                    t -= lowbit(t);
                }
            }
            Layer::Inner { keys, nodes } => {
                let mut t = keys.partition_point(|&k| k < bounds[0]);
                while t > 0 {
                    acc = nodes[t - 1].query(&bounds[1..], acc);
                    t -= lowbit(t);
                }
            }
        }
        acc
    }
}

/// Max-weight query over points strictly dominated by a bound, for a
/// point set fixed at construction. Every point starts at the neutral
/// weight; [`RangeMaxIndex::raise`] only ever increases weights.
///
/// Nested Fenwick layers give `O(log^d P)` updates and queries.
#[derive(Debug, Clone)]
pub struct RangeMaxIndex {
    points: Vec<Vec<u32>>,
    root: Option<Layer>,
    neutral: f64,
}

pub const MAX_DIMENSIONS: usize = 3;

impl RangeMaxIndex {
    /// `points` must all have the same dimension, between 1 and 3.
    pub fn new(points: Vec<Vec<u32>>, neutral: f64) -> Self {
        let dims = points.first().map_or(1, |p| p.len());
        assert!(
            (1..=MAX_DIMENSIONS).contains(&dims),
            "unsupported dimension {dims}"
        );
        assert!(
            points.iter().all(|p| p.len() == dims),
            "mixed point dimensions"
        );
        let ids: Vec<usize> = (0..points.len()).collect();
        let root = (!points.is_empty()).then(|| Layer::build(&points, &ids, 0, neutral));
        RangeMaxIndex {
            points,
            root,
            neutral,
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn raise(&mut self, id: usize, weight: f64) {
        let value = Best {
            weight,
            id: Some(id),
        };
        if let Some(root) = self.root.as_mut() {
            root.raise(&self.points[id], value);
        }
    }

    /// Best point with every coordinate strictly below `bounds`, or the
    /// neutral weight with no id.
    pub fn query(&self, bounds: &[u32]) -> Best {
        let start = Best {
            weight: self.neutral,
            id: None,
        };
        match &self.root {
            Some(root) => root.query(bounds, start),
            None => start,
        }
    }
}
