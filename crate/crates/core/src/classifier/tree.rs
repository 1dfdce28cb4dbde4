use serde::{Deserialize, Serialize};

use super::{ClassifierError, FeatureVector, LabeledExample, TreeParams};

/// Shannon entropy (bits) of a class histogram.
pub fn entropy(counts: &[u64; 6]) -> f64 {
    let total: u64 = counts.iter().sum();
    if total == 0 {
        return 0.0;
    }
    let total = total as f64;
    counts
        .iter()
        .filter(|&&n| n > 0)
        .map(|&n| {
            let p = n as f64 / total;
            -p * p.log2()
        })
        .sum()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SplitScore {
    pub gain: f64,
    pub split_info: f64,
    pub gain_ratio: f64,
}

/// Information gain, split information and gain ratio of a binary split of
/// `parent` into the `present` subset and its complement.
pub fn split_gain_ratio(parent: &[u64; 6], present: &[u64; 6]) -> SplitScore {
    let absent: [u64; 6] = std::array::from_fn(|c| parent[c] - present[c]);
    let n = parent.iter().sum::<u64>() as f64;
    let np = present.iter().sum::<u64>() as f64;
    let na = n - np;
    let gain = entropy(parent) - (np / n) * entropy(present) - (na / n) * entropy(&absent);
    let split_info = [np, na]
        .iter()
        .filter(|&&k| k > 0.0)
        .map(|&k| -(k / n) * (k / n).log2())
        .sum::<f64>();
    let gain_ratio = if split_info > 0.0 { gain / split_info } else { 0.0 };
    SplitScore {
        gain,
        split_info,
        gain_ratio,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "node", rename_all = "snake_case")]
pub enum TreeNode {
    Leaf {
        counts: [u64; 6],
    },
    Split {
        feature: u32,
        absent: usize,
        present: usize,
    },
}

/// Top-down decision tree over binary word-presence features, choosing splits
/// by gain ratio among candidates whose gain is at least the average gain
/// (the usual C4.5 guard against tiny, low-information splits). Leaves
/// answer with add-one smoothed class frequencies over the classes seen in
/// training. No pruning.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecisionTree {
    class_docs: [u64; 6],
    max_depth: usize,
    min_leaf: usize,
    nodes: Vec<TreeNode>,
}

const GAIN_EPS: f64 = 1e-12;

impl DecisionTree {
    pub fn fit(
        examples: &[LabeledExample],
        vocabulary_size: usize,
        params: TreeParams,
    ) -> Result<Self, ClassifierError> {
        if params.min_leaf == 0 {
            return Err(ClassifierError::InvalidParams("min_leaf must be at least 1".into()));
        }
        let mut class_docs = [0u64; 6];
        for ex in examples {
            class_docs[ex.label.index()] += 1;
        }
        let mut builder = Builder {
            examples,
            params,
            nodes: Vec::new(),
            scratch: vec![[0; 6]; vocabulary_size],
        };
        let all: Vec<usize> = (0..examples.len()).collect();
        builder.grow(&all, 0);
        Ok(Self {
            class_docs,
            max_depth: params.max_depth,
            min_leaf: params.min_leaf,
            nodes: builder.nodes,
        })
    }

    pub fn priors(&self) -> [f64; 6] {
        let total: u64 = self.class_docs.iter().sum();
        self.class_docs.map(|n| n as f64 / total as f64)
    }

    pub fn nodes(&self) -> &[TreeNode] {
        &self.nodes
    }

    pub fn depth(&self) -> usize {
        fn walk(nodes: &[TreeNode], i: usize) -> usize {
            match nodes[i] {
                TreeNode::Leaf { .. } => 0,
                TreeNode::Split { absent, present, .. } => {
                    1 + walk(nodes, absent).max(walk(nodes, present))
                }
            }
        }
        walk(&self.nodes, 0)
    }

    pub fn leaf_counts(&self, features: &FeatureVector) -> [u64; 6] {
        let mut i = 0;
        loop {
            match self.nodes[i] {
                TreeNode::Leaf { counts } => return counts,
                TreeNode::Split {
                    feature,
                    absent,
                    present,
                } => {
                    i = if features.contains(feature) {
                        present
                    } else {
                        absent
                    }
                }
            }
        }
    }

    pub fn distribution(&self, features: &FeatureVector) -> [f64; 6] {
        if features.is_empty() {
            return self.priors();
        }
        let counts = self.leaf_counts(features);
        let weights: [f64; 6] = std::array::from_fn(|c| {
            if self.class_docs[c] == 0 {
                0.0
            } else {
                counts[c] as f64 + 1.0
            }
        });
        super::normalize(weights)
    }
}

struct Builder<'a> {
    examples: &'a [LabeledExample],
    params: TreeParams,
    nodes: Vec<TreeNode>,
    scratch: Vec<[u64; 6]>,
}

impl Builder<'_> {
    fn grow(&mut self, subset: &[usize], depth: usize) -> usize {
        let mut counts = [0u64; 6];
        for &i in subset {
            counts[self.examples[i].label.index()] += 1;
        }
        let id = self.nodes.len();
        self.nodes.push(TreeNode::Leaf { counts });

        let pure = counts.iter().filter(|&&n| n > 0).count() <= 1;
        if pure || depth >= self.params.max_depth || subset.len() < 2 * self.params.min_leaf {
            return id;
        }
        let Some(feature) = self.best_split(subset, &counts) else {
            return id;
        };
        let (present, absent): (Vec<usize>, Vec<usize>) = subset
            .iter()
            .partition(|&&i| self.examples[i].features.contains(feature));
        let absent_id = self.grow(&absent, depth + 1);
        let present_id = self.grow(&present, depth + 1);
        self.nodes[id] = TreeNode::Split {
            feature,
            absent: absent_id,
            present: present_id,
        };
        id
    }

    fn best_split(&mut self, subset: &[usize], parent: &[u64; 6]) -> Option<u32> {
        let mut touched: Vec<u32> = Vec::new();
        for &i in subset {
            let ex = &self.examples[i];
            for (w, _) in ex.features.iter() {
                let slot = &mut self.scratch[w as usize];
                if slot.iter().all(|&n| n == 0) {
                    touched.push(w);
                }
                slot[ex.label.index()] += 1;
            }
        }
        touched.sort_unstable();

        let n = subset.len() as u64;
        let min_leaf = self.params.min_leaf as u64;
        let mut candidates: Vec<(u32, SplitScore)> = Vec::new();
        for &w in &touched {
            let present = self.scratch[w as usize];
            let np: u64 = present.iter().sum();
            if np < min_leaf || n - np < min_leaf {
                continue;
            }
            candidates.push((w, split_gain_ratio(parent, &present)));
        }
        for &w in &touched {
            self.scratch[w as usize] = [0; 6];
        }
        if candidates.is_empty() {
            return None;
        }

        let avg_gain = candidates.iter().map(|c| c.1.gain).sum::<f64>() / candidates.len() as f64;
        let mut best: Option<(u32, f64)> = None;
        for (w, s) in candidates {
            if s.gain <= GAIN_EPS || s.gain + GAIN_EPS < avg_gain {
                continue;
            }
            if best.is_none_or(|(_, r)| s.gain_ratio > r) {
                best = Some((w, s.gain_ratio));
            }
        }
        best.map(|(w, _)| w)
    }
}
