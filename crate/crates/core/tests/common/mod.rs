//! Brute-force oracles over expanded graphs, kept independent of the
//! condensed machinery they check.
#![allow(dead_code)]

use std::collections::BTreeMap;

use actiongraphs::{BigRational, BigUint, ExpandedGraph, Label, VertexId};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `paths[(from, to, len)]`: directed downward paths, found by walking
/// every vertex's descendants.
pub fn path_counts(g: &ExpandedGraph) -> BTreeMap<(Label, Label, u32), u64> {
    let mut out = BTreeMap::new();
    for start in 0..g.len() {
        let mut frontier = vec![start];
        let mut len = 0u32;
        while !frontier.is_empty() {
            for &v in &frontier {
                *out.entry((g.label(start), g.label(v), len)).or_insert(0) += 1;
            }
            frontier = frontier
                .iter()
                .flat_map(|&v| g.children(v).iter().copied())
                .collect();
            len += 1;
        }
    }
    out
}

/// Paths from `v` of each length ending at a vertex labeled `target`.
fn paths_from(g: &ExpandedGraph, v: VertexId, target: Label) -> Vec<u64> {
    let mut counts = Vec::new();
    let mut frontier = vec![v];
    while !frontier.is_empty() {
        counts.push(frontier.iter().filter(|&&u| g.label(u) == target).count() as u64);
        frontier = frontier
            .iter()
            .flat_map(|&u| g.children(u).iter().copied())
            .collect();
    }
    counts
}

/// One growth step done vertex by vertex on the expanded tree.
pub fn grow_naive(
    g: &ExpandedGraph,
    step: Label,
    rule: impl Fn(usize) -> BigRational,
) -> ExpandedGraph {
    let mut next = g.clone();
    for v in 0..g.len() {
        let total: BigRational = paths_from(g, v, step - 1)
            .iter()
            .enumerate()
            .map(|(len, &p)| rule(len) * BigRational::from_integer(BigInt::from(p)))
            .sum();
        assert!(total.is_integer(), "vertex {v} would get {total} children");
        let mut q = total.to_integer();
        while !q.is_zero() {
            next.add_child(v, step).unwrap();
            q -= BigInt::one();
        }
    }
    next
}

/// `G_0..=G_n_max` built by [`grow_naive`].
pub fn family_naive(n_max: Label, rule: impl Fn(usize) -> BigRational) -> Vec<ExpandedGraph> {
    let mut graphs = vec![ExpandedGraph::single(0)];
    for step in 1..=n_max {
        let next = grow_naive(graphs.last().unwrap(), step, &rule);
        graphs.push(next);
    }
    graphs
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

pub fn choose(n: u64, k: u64) -> BigUint {
    factorial(n) / (factorial(k) * factorial(n - k))
}

pub fn classic_rule(_: usize) -> BigRational {
    BigRational::one()
}

pub fn fuss_rule(k: u64) -> impl Fn(usize) -> BigRational {
    move |l| BigRational::from_integer(BigInt::from(choose(l as u64 + k - 1, l as u64)))
}

pub fn super_rule(l: usize) -> BigRational {
    BigRational::new(BigInt::from(2u32), BigInt::from(2u32).pow(l as u32))
}

/// Is there a bijection matching edges with `label(a) = label(b) + shift`?
/// Tries every permutation; only for tiny trees.
pub fn iso_brute(a: &ExpandedGraph, b: &ExpandedGraph, shift: i64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let n = a.len();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn extend(
        i: usize,
        a: &ExpandedGraph,
        b: &ExpandedGraph,
        shift: i64,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if i == a.len() {
            return (0..a.len()).all(|v| match a.parent(v) {
                None => b.parent(image[v]).is_none(),
                Some(p) => b.parent(image[v]) == Some(image[p]),
            });
        }
        for j in 0..b.len() {
            if used[j] || i64::from(a.label(i)) != i64::from(b.label(j)) + shift {
                continue;
            }
            used[j] = true;
            image[i] = j;
            if extend(i + 1, a, b, shift, image, used) {
                return true;
            }
            used[j] = false;
        }
        false
    }
    extend(0, a, b, shift, &mut image, &mut used)
}
