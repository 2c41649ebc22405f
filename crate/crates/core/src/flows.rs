//! Flows on ordered forests and their bijection with interval-posets.
//!
//! A flow puts an integer input `>= -1` on every node of a planar forest.
//! The outgoing rate of a node is its input plus the rates of its children
//! and must be nonnegative. Nodes are labelled in preorder, as in
//! [`PlanarForest`].

use thiserror::Error;

use crate::catalan::{tree_from_dec_forest, BinaryTree, PlanarForest};
use crate::interval::{IntervalPoset, PosetError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FlowError {
    #[error("forest has {expected} node(s) but {got} input(s) were given")]
    InputCountMismatch { expected: usize, got: usize },
    #[error("node {node} has input {input}, below -1")]
    InputBelowMinusOne { node: usize, input: i64 },
    #[error("node {node} has negative outgoing rate {rate}")]
    NegativeRate { node: usize, rate: i64 },
    #[error("flow has exit rate {0}, expected a closed flow")]
    NotClosed(i64),
    #[error("leak at node {0} has no positive descendant to draw from")]
    NoSource(usize),
    #[error("flow produced an invalid interval-poset: {0}")]
    Poset(#[from] PosetError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flow {
    forest: PlanarForest,
    inputs: Vec<i64>,
    rates: Vec<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FlowStats {
    pub exit_rate: i64,
    /// Number of `-1` inputs.
    pub leaks: usize,
    /// Sum of the outgoing rates of non-root nodes.
    pub rate_sum: i64,
}

fn compute_rates(forest: &PlanarForest, inputs: &[i64]) -> Vec<i64> {
    let mut rates = inputs.to_vec();
    for v in (1..=forest.size()).rev() {
        if let Some(p) = forest.parent(v) {
            rates[p - 1] += rates[v - 1];
        }
    }
    rates
}

/// Builds a flow from preorder inputs, checking every constraint.
pub fn validate_flow(forest: PlanarForest, inputs: Vec<i64>) -> Result<Flow, FlowError> {
    if inputs.len() != forest.size() {
        return Err(FlowError::InputCountMismatch {
            expected: forest.size(),
            got: inputs.len(),
        });
    }
    if let Some((i, &input)) = inputs.iter().enumerate().find(|(_, &x)| x < -1) {
        return Err(FlowError::InputBelowMinusOne { node: i + 1, input });
    }
    let rates = compute_rates(&forest, &inputs);
    if let Some((i, &rate)) = rates.iter().enumerate().find(|(_, &r)| r < 0) {
        return Err(FlowError::NegativeRate { node: i + 1, rate });
    }
    Ok(Flow {
        forest,
        inputs,
        rates,
    })
}

impl Flow {
    pub fn forest(&self) -> &PlanarForest {
        &self.forest
    }

    pub fn size(&self) -> usize {
        self.inputs.len()
    }

    /// Inputs in preorder.
    pub fn inputs(&self) -> &[i64] {
        &self.inputs
    }

    pub fn input(&self, v: usize) -> i64 {
        self.inputs[v - 1]
    }

    /// Outgoing rates in preorder.
    pub fn rates(&self) -> &[i64] {
        &self.rates
    }

    pub fn rate(&self, v: usize) -> i64 {
        self.rates[v - 1]
    }

    pub fn is_closed(&self) -> bool {
        exit_rate(self) == 0
    }
}

/// Total rate leaving the roots, which is also the sum of all inputs.
pub fn exit_rate(f: &Flow) -> i64 {
    f.forest.roots().iter().map(|&r| f.rate(r)).sum()
}

pub fn flow_stats(f: &Flow) -> FlowStats {
    let rate_sum = (1..=f.size())
        .filter(|&v| f.forest.parent(v).is_some())
        .map(|v| f.rate(v))
        .sum();
    FlowStats {
        exit_rate: exit_rate(f),
        leaks: f.inputs.iter().filter(|&&x| x == -1).count(),
        rate_sum,
    }
}

/// All flows on `forest` with exit rate `k`, in lexicographic order of their
/// input vectors.
///
/// Inputs sum to `k` and each is at least `-1`, so a single input never
/// exceeds `k + n - 1`; the search uses `k + n` as its upper bound.
pub fn enumerate_flows_with_exit(forest: &PlanarForest, k: u64) -> Vec<Flow> {
    let bound = k as i64 + forest.size() as i64;
    enumerate_flows_bounded(forest, k, bound)
}

pub fn enumerate_closed_flows(forest: &PlanarForest) -> Vec<Flow> {
    enumerate_flows_with_exit(forest, 0)
}

/// Like [`enumerate_flows_with_exit`] with every input restricted to
/// `-1..=max_input`.
pub fn enumerate_flows_bounded(forest: &PlanarForest, k: u64, max_input: i64) -> Vec<Flow> {
    let n = forest.size();
    let sizes = forest.subtree_sizes();
    // Nodes whose subtree ends at position v, deepest first.
    let mut closing: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for v in (1..=n).rev() {
        closing[v + sizes[v - 1] - 1].push(v);
    }
    let mut search = Search {
        forest,
        sizes: &sizes,
        closing: &closing,
        target: k as i64,
        max_input,
        inputs: Vec::with_capacity(n),
        prefix: vec![0],
        out: Vec::new(),
    };
    search.run();
    search.out
}

struct Search<'a> {
    forest: &'a PlanarForest,
    sizes: &'a [usize],
    closing: &'a [Vec<usize>],
    target: i64,
    max_input: i64,
    inputs: Vec<i64>,
    // prefix[v] = sum of the first v inputs
    prefix: Vec<i64>,
    out: Vec<Flow>,
}

impl Search<'_> {
    fn run(&mut self) {
        let n = self.forest.size();
        let v = self.inputs.len() + 1;
        let sum = *self.prefix.last().expect("prefix starts at 0");
        if v > n {
            if sum == self.target {
                let inputs = self.inputs.clone();
                let rates = compute_rates(self.forest, &inputs);
                self.out.push(Flow {
                    forest: self.forest.clone(),
                    inputs,
                    rates,
                });
            }
            return;
        }
        let rest = (n - v) as i64;
        let lo = if self.sizes[v - 1] == 1 { 0 } else { -1 };
        // The remaining inputs contribute between -rest and rest * max_input.
        let lo = lo.max(self.target - sum - rest * self.max_input);
        let hi = self.max_input.min(self.target - sum + rest);
        for x in lo..=hi {
            self.inputs.push(x);
            self.prefix.push(sum + x);
            let ok = self.closing[v]
                .iter()
                .all(|&u| self.prefix[v] - self.prefix[u - 1] >= 0);
            if ok {
                self.run();
            }
            self.prefix.pop();
            self.inputs.pop();
        }
    }
}

/// The binary tree whose final forest is `forest`; its Tamari ideal is
/// equinumerous with the closed flows of `forest`.
pub fn forest_to_upper_tree(forest: &PlanarForest) -> BinaryTree {
    tree_from_dec_forest(forest)
}

/// Sends a closed flow to an interval-poset whose upper tree is
/// [`forest_to_upper_tree`] of the flow's forest.
///
/// Each node precedes the first later node outside its subtree. Leaks are
/// then handled from the largest label down: a leak at `i` draws from its
/// first descendant `j` with positive (remaining) input, adds `j' -> i` for
/// `i < j' <= j`, and consumes one unit of `j`.
pub fn flow_to_interval_poset(f: &Flow) -> Result<IntervalPoset, FlowError> {
    let e = exit_rate(f);
    if e != 0 {
        return Err(FlowError::NotClosed(e));
    }
    let n = f.size();
    let sizes = f.forest.subtree_sizes();
    let mut relations = Vec::new();
    for i in 1..=n {
        let j = i + sizes[i - 1];
        if j <= n {
            relations.push((i, j));
        }
    }
    let mut input = f.inputs.clone();
    for i in (1..=n).rev() {
        if input[i - 1] != -1 {
            continue;
        }
        let j = (i + 1..i + sizes[i - 1])
            .find(|&d| input[d - 1] > 0)
            .ok_or(FlowError::NoSource(i))?;
        relations.extend((i + 1..=j).map(|d| (d, i)));
        input[i - 1] = 0;
        input[j - 1] -= 1;
    }
    Ok(IntervalPoset::validate(n, &relations)?)
}

/// Inverse of [`flow_to_interval_poset`].
///
/// The forest parent of `j` is the largest `i < j` not preceding `j`. Each
/// vertex with a final-forest child carries a leak whose source is its last
/// final-forest descendant.
pub fn interval_poset_to_flow(i: &IntervalPoset) -> Flow {
    let n = i.size();
    let parent = (1..=n)
        .map(|j| {
            let below = i.inc_descendant_count(j);
            (below + 1 < j).then(|| j - below - 1)
        })
        .collect();
    let forest = PlanarForest::from_parents(parent)
        .expect("initial forests of interval-posets give preorder labellings");
    let mut inputs = vec![0i64; n];
    for a in 1..=n {
        let d = i.dec_descendant_count(a);
        if d > 0 {
            inputs[a - 1] -= 1;
            inputs[a + d - 1] += 1;
        }
    }
    validate_flow(forest, inputs).expect("poset-derived inputs form a closed flow")
}

/// Leak and rate-sum counts read directly on the poset: leaks are the `a`
/// with `a + 1 -> a`; the rate sum adds, over every `a`, the number of
/// final-forest descendants of `a` that precede no other such descendant.
pub fn poset_flow_stats(i: &IntervalPoset) -> FlowStats {
    let n = i.size();
    let leaks = (1..n).filter(|&a| i.dec_parent(a + 1) == Some(a)).count();
    let mut rate_sum = 0i64;
    for a in 1..=n {
        let below: Vec<usize> = (a + 1..=a + i.dec_descendant_count(a)).collect();
        rate_sum += below
            .iter()
            .filter(|&&b| !below.iter().any(|&c| c > b && i.precedes(b, c)))
            .count() as i64;
    }
    FlowStats {
        exit_rate: 0,
        leaks,
        rate_sum,
    }
}
