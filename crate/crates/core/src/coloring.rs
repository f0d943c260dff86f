//! Greedy and exact vertex coloring.

use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::CommutationGraph;
use crate::{Error, Result};

/// Default vertex cap for [`exact_chromatic`].
pub const EXACT_VERTEX_CAP: usize = 20;

/// A vertex coloring with colors `0..num_colors`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<usize>,
    num_colors: usize,
}

impl Coloring {
    /// Relabels colors in order of first appearance so that exactly
    /// `0..num_colors` are used.
    pub fn from_colors(colors: Vec<usize>) -> Self {
        let mut relabel: Vec<Option<usize>> = vec![None; colors.iter().max().map_or(0, |m| m + 1)];
        let mut next = 0;
        let colors = colors
            .into_iter()
            .map(|c| {
                *relabel[c].get_or_insert_with(|| {
                    next += 1;
                    next - 1
                })
            })
            .collect();
        Coloring { colors, num_colors: next }
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    /// No edge joins two vertices of the same color.
    pub fn is_proper(&self, g: &CommutationGraph) -> bool {
        self.colors.len() == g.vertex_count() && g.edges().all(|(u, v)| self.colors[u] != self.colors[v])
    }

    /// Vertices grouped by color, each class in increasing vertex order.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.num_colors];
        for (v, &c) in self.colors.iter().enumerate() {
            classes[c].push(v);
        }
        classes
    }
}

/// Vertex order for first-fit coloring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderingStrategy {
    Natural,
    /// Highest degree first; ties broken by lower index.
    DegreeDescending,
    /// A uniformly random permutation drawn from `seed`.
    RandomSeeded(u64),
}

impl OrderingStrategy {
    pub fn order(self, g: &CommutationGraph) -> Vec<usize> {
        let mut order: Vec<usize> = (0..g.vertex_count()).collect();
        match self {
            OrderingStrategy::Natural => {}
            OrderingStrategy::DegreeDescending => {
                let degrees: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
                order.sort_by(|&a, &b| degrees[b].cmp(&degrees[a]).then(a.cmp(&b)));
            }
            OrderingStrategy::RandomSeeded(seed) => {
                order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
            }
        }
        order
    }
}

/// First-fit: each vertex, in the strategy's order, takes the smallest color
/// not used by an already colored neighbor.
pub fn greedy_color(g: &CommutationGraph, order: OrderingStrategy) -> Coloring {
    greedy_with_order(g, &order.order(g))
}

fn greedy_with_order(g: &CommutationGraph, order: &[usize]) -> Coloring {
    const UNCOLORED: usize = usize::MAX;
    let n = g.vertex_count();
    let mut colors = vec![UNCOLORED; n];
    // used[c] == stamp marks color c as taken for the current vertex.
    let mut used = vec![usize::MAX; n + 1];
    let mut num_colors = 0;
    for (stamp, &v) in order.iter().enumerate() {
        for w in g.neighbors(v) {
            let c = colors[w];
            if c != UNCOLORED {
                used[c] = stamp;
            }
        }
        let c = (0..).find(|&c| used[c] != stamp).expect("a free color exists");
        colors[v] = c;
        num_colors = num_colors.max(c + 1);
    }
    Coloring { colors, num_colors }
}

/// Runs first-fit under natural, degree-descending and every seeded random
/// order and keeps the first coloring with the fewest colors.
pub fn best_of_orderings(g: &CommutationGraph, seeds: &[u64]) -> Coloring {
    let strategies = [OrderingStrategy::Natural, OrderingStrategy::DegreeDescending]
        .into_iter()
        .chain(seeds.iter().map(|&s| OrderingStrategy::RandomSeeded(s)));
    let mut best: Option<Coloring> = None;
    for strategy in strategies {
        let c = greedy_color(g, strategy);
        if best.as_ref().is_none_or(|b| c.num_colors < b.num_colors) {
            best = Some(c);
        }
    }
    best.expect("at least two strategies run")
}

/// Exact chromatic number by branch and bound; refuses graphs with more than
/// `max_vertices` vertices.
pub fn exact_chromatic(g: &CommutationGraph, max_vertices: usize) -> Result<usize> {
    Ok(exact_coloring(g, max_vertices)?.num_colors)
}

/// An optimal coloring, by DSATUR-ordered backtracking seeded with a maximum
/// clique (lower bound) and the best greedy coloring (upper bound).
pub fn exact_coloring(g: &CommutationGraph, max_vertices: usize) -> Result<Coloring> {
    // Backtracking tracks neighbor colors in a u64 mask.
    let cap = max_vertices.min(64);
    let n = g.vertex_count();
    if n > cap {
        return Err(Error::GraphTooLarge { vertices: n, cap });
    }
    let mut best = best_of_orderings(g, &[]);
    if n == 0 {
        return Ok(best);
    }
    let clique = maximum_clique(g);
    let mut k = best.num_colors;
    while k > clique.len() {
        match color_with(g, k - 1, &clique) {
            Some(colors) => {
                best = Coloring::from_colors(colors);
                k = best.num_colors;
            }
            None => break,
        }
    }
    Ok(best)
}

/// Tries to color `g` with at most `k` colors, with `clique[i]` fixed to color
/// `i`.
fn color_with(g: &CommutationGraph, k: usize, clique: &[usize]) -> Option<Vec<usize>> {
    const UNCOLORED: usize = usize::MAX;
    let n = g.vertex_count();
    let mut colors = vec![UNCOLORED; n];
    for (c, &v) in clique.iter().enumerate() {
        colors[v] = c;
    }
    let mut search = Backtrack { g, k, colors };
    search.run(clique.len()).then_some(search.colors)
}

struct Backtrack<'a> {
    g: &'a CommutationGraph,
    k: usize,
    colors: Vec<usize>,
}

impl Backtrack<'_> {
    const UNCOLORED: usize = usize::MAX;

    /// Colors are symmetric beyond `used`, so only `0..=used` is tried for a
    /// fresh color.
    fn run(&mut self, used: usize) -> bool {
        let Some(v) = self.pick() else {
            return true;
        };
        let forbidden = self.neighbor_colors(v);
        for c in 0..self.k.min(used + 1) {
            if forbidden & (1 << c) == 0 {
                self.colors[v] = c;
                if self.run(used.max(c + 1)) {
                    return true;
                }
            }
        }
        self.colors[v] = Self::UNCOLORED;
        false
    }

    fn neighbor_colors(&self, v: usize) -> u64 {
        self.g
            .neighbors(v)
            .filter(|&w| self.colors[w] != Self::UNCOLORED)
            .map(|w| 1u64 << self.colors[w])
            .fold(0, |a, b| a | b)
    }

    /// Uncolored vertex of maximum saturation, ties by degree then index.
    fn pick(&self) -> Option<usize> {
        (0..self.g.vertex_count()).filter(|&v| self.colors[v] == Self::UNCOLORED).max_by_key(|&v| {
            let sat = self.neighbor_colors(v).count_ones();
            (sat, self.g.degree(v), core::cmp::Reverse(v))
        })
    }
}

/// Maximum clique by simple branch and bound (small graphs only).
pub fn maximum_clique(g: &CommutationGraph) -> Vec<usize> {
    fn extend(g: &CommutationGraph, current: &mut Vec<usize>, candidates: Vec<usize>, best: &mut Vec<usize>) {
        if current.len() > best.len() {
            *best = current.clone();
        }
        if current.len() + candidates.len() <= best.len() {
            return;
        }
        for (i, &v) in candidates.iter().enumerate() {
            if current.len() + candidates.len() - i <= best.len() {
                return;
            }
            let next: Vec<usize> = candidates[i + 1..].iter().copied().filter(|&w| g.has_edge(v, w)).collect();
            current.push(v);
            extend(g, current, next, best);
            current.pop();
        }
    }
    let mut best = Vec::new();
    extend(g, &mut Vec::new(), (0..g.vertex_count()).collect(), &mut best);
    best
}
