//! Brute-force perfect-code search, independent of all the structure theory.
//!
//! A perfect code is an exact cover of the vertex set by closed
//! neighborhoods, so the search is plain exact-cover backtracking: pick the
//! uncovered vertex with the fewest remaining candidates, try each candidate
//! in ascending order. Everything here is deterministic, so repeated runs
//! enumerate codes in the same order.

use crate::graph::{is_perfect_code, Graph, VertexSet};
use itertools::Itertools;

#[derive(Clone)]
struct Bits {
    words: Vec<u64>,
}

impl Bits {
    fn new(n: usize) -> Self {
        Bits {
            words: vec![0; n.div_ceil(64)],
        }
    }

    fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn clear(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    fn intersects(&self, other: &Bits) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }
}

struct Search {
    n: usize,
    ball_list: Vec<Vec<usize>>,
    ball_mask: Vec<Bits>,
    covered: Bits,
    covered_count: usize,
    chosen: Vec<usize>,
    found: Vec<VertexSet>,
    limit: usize,
}

impl Search {
    fn new(g: &Graph, limit: usize) -> Self {
        let n = g.vertex_count();
        let mut ball_list = Vec::with_capacity(n);
        let mut ball_mask = Vec::with_capacity(n);
        for v in 0..n {
            let mut ball = g.neighbors(v).to_vec();
            ball.push(v);
            ball.sort_unstable();
            let mut mask = Bits::new(n);
            for &u in &ball {
                mask.set(u);
            }
            ball_list.push(ball);
            ball_mask.push(mask);
        }
        Search {
            n,
            ball_list,
            ball_mask,
            covered: Bits::new(n),
            covered_count: 0,
            chosen: Vec::new(),
            found: Vec::new(),
            limit,
        }
    }

    fn open(&self, u: usize) -> bool {
        !self.ball_mask[u].intersects(&self.covered)
    }

    fn choose(&mut self, u: usize) {
        debug_assert!(self.open(u));
        for i in 0..self.ball_list[u].len() {
            self.covered.set(self.ball_list[u][i]);
        }
        self.covered_count += self.ball_list[u].len();
        self.chosen.push(u);
    }

    fn unchoose(&mut self, u: usize) {
        self.chosen.pop();
        self.covered_count -= self.ball_list[u].len();
        for i in 0..self.ball_list[u].len() {
            self.covered.clear(self.ball_list[u][i]);
        }
    }

    fn recurse(&mut self) {
        if self.covered_count == self.n {
            self.found.push(VertexSet::new(self.chosen.clone()));
            return;
        }
        let mut pivot = None;
        for w in (0..self.n).filter(|&w| !self.covered.get(w)) {
            let count = self.ball_list[w]
                .iter()
                .filter(|&&u| self.open(u))
                .count();
            if pivot.map_or(true, |(best, _)| count < best) {
                pivot = Some((count, w));
                if count == 0 {
                    break;
                }
            }
        }
        let (count, w) = pivot.expect("some vertex is uncovered");
        if count == 0 {
            return;
        }
        for i in 0..self.ball_list[w].len() {
            if self.found.len() >= self.limit {
                return;
            }
            let u = self.ball_list[w][i];
            if self.open(u) {
                self.choose(u);
                self.recurse();
                self.unchoose(u);
            }
        }
    }
}

fn search(g: &Graph, containing: Option<usize>, limit: usize) -> Vec<VertexSet> {
    let n = g.vertex_count();
    if n == 0 {
        return vec![VertexSet::new(Vec::new())];
    }
    if let Some(k) = g.regular_degree() {
        if n % (k + 1) != 0 {
            return Vec::new();
        }
    }
    let mut s = Search::new(g, limit);
    if let Some(c) = containing {
        assert!(c < n, "containing vertex out of range");
        s.choose(c);
        s.recurse();
    } else {
        s.recurse();
    }
    for code in &s.found {
        assert!(is_perfect_code(g, code), "search produced a non-code");
    }
    s.found.sort();
    s.found
}

/// First perfect code in search order, if any exists.
pub fn find_perfect_code(g: &Graph) -> Option<VertexSet> {
    search(g, None, 1).into_iter().next()
}

/// All perfect codes, sorted; with `containing = Some(v)` only those through
/// vertex `v`.
pub fn enumerate_perfect_codes(g: &Graph, containing: Option<usize>) -> Vec<VertexSet> {
    search(g, containing, usize::MAX)
}

/// Subset-enumeration cross-check for small graphs (exponential; intended
/// for up to about 18 vertices). On a k-regular graph only subsets of size
/// n/(k+1) can be perfect codes, so only those are tested.
pub fn enumerate_perfect_codes_naive(g: &Graph) -> Vec<VertexSet> {
    let n = g.vertex_count();
    if n == 0 {
        return vec![VertexSet::new(Vec::new())];
    }
    let mut found = Vec::new();
    if let Some(k) = g.regular_degree() {
        if n % (k + 1) != 0 {
            return Vec::new();
        }
        for subset in (0..n).combinations(n / (k + 1)) {
            let candidate = VertexSet::new(subset);
            if is_perfect_code(g, &candidate) {
                found.push(candidate);
            }
        }
    } else {
        for bits in 0u64..(1 << n) {
            let candidate = VertexSet::new((0..n).filter(|&v| bits >> v & 1 == 1).collect());
            if is_perfect_code(g, &candidate) {
                found.push(candidate);
            }
        }
    }
    found.sort();
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::GroupSpec;
    use crate::graph::{cartesian_k2, cayley};

    fn cayley_graph(factors: &[u64], raw: &[&[i64]]) -> Graph {
        let g = GroupSpec::new(factors.to_vec()).unwrap();
        let set: Vec<_> = raw.iter().map(|r| g.element(r).unwrap()).collect();
        cayley(&g, &set).unwrap()
    }

    #[test]
    fn complete_graph_has_singleton_codes() {
        let k6 = cayley_graph(&[6], &[&[1], &[5], &[2], &[4], &[3]]);
        let codes = enumerate_perfect_codes(&k6, None);
        assert_eq!(codes.len(), 6);
        assert_eq!(codes[0], VertexSet::new(vec![0]));
        assert_eq!(
            enumerate_perfect_codes(&k6, Some(2)),
            vec![VertexSet::new(vec![2])]
        );
        assert_eq!(find_perfect_code(&k6), Some(VertexSet::new(vec![0])));
    }

    #[test]
    fn six_cycle_has_two_codes() {
        let c6 = cayley_graph(&[6], &[&[1], &[5]]);
        let codes = enumerate_perfect_codes(&c6, None);
        assert_eq!(
            codes,
            vec![
                VertexSet::new(vec![0, 3]),
                VertexSet::new(vec![1, 4]),
                VertexSet::new(vec![2, 5])
            ]
        );
    }

    #[test]
    fn five_cycle_has_no_code() {
        let c5 = cayley_graph(&[5], &[&[1], &[4]]);
        assert_eq!(find_perfect_code(&c5), None);
        assert!(enumerate_perfect_codes(&c5, None).is_empty());
    }

    #[test]
    fn cube_codes_are_antipodal_pairs() {
        let c4 = cayley_graph(&[4], &[&[1], &[3]]);
        let cube = cartesian_k2(&c4);
        let codes = enumerate_perfect_codes(&cube, None);
        assert_eq!(
            codes,
            vec![
                VertexSet::new(vec![0, 5]),
                VertexSet::new(vec![1, 4]),
                VertexSet::new(vec![2, 7]),
                VertexSet::new(vec![3, 6])
            ]
        );
    }

    #[test]
    fn containing_filter_commutes_with_enumeration() {
        let g = cayley_graph(&[12], &[&[1], &[11], &[5], &[7], &[6]]);
        let all = enumerate_perfect_codes(&g, None);
        for v in 0..12 {
            let through: Vec<_> = all.iter().filter(|c| c.contains(v)).cloned().collect();
            assert_eq!(enumerate_perfect_codes(&g, Some(v)), through);
        }
    }

    #[test]
    fn naive_enumeration_agrees() {
        for graph in [
            cayley_graph(&[6], &[&[1], &[5], &[2], &[4], &[3]]),
            cayley_graph(&[6], &[&[1], &[5]]),
            cayley_graph(&[5], &[&[1], &[4]]),
            cayley_graph(&[12], &[&[1], &[11], &[5], &[7], &[6]]),
            cayley_graph(&[2, 2, 3], &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[0, 0, 2]]),
        ] {
            assert_eq!(
                enumerate_perfect_codes(&graph, None),
                enumerate_perfect_codes_naive(&graph)
            );
        }
    }
}
