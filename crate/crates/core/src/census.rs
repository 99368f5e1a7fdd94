//! Backtracking enumeration of cubic graphs, one representative per
//! characteristic polynomial.
//!
//! Vertices are completed in increasing label order; each vertex picks its
//! missing neighbours among higher-labelled vertices with spare degree.
//! Vertices that have no edge yet are interchangeable, so a vertex only ever
//! draws the lowest-labelled untouched vertices. Every isomorphism class is
//! still reached and the labeled search space shrinks by orders of magnitude.

use std::collections::HashSet;

use crate::charpoly::charpoly_adjacency;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::IntPolynomial;

const DEGREE: usize = 3;

/// A census representative together with its exact characteristic polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct Representative {
    pub graph: Graph,
    pub charpoly: IntPolynomial,
}

/// Cubic graphs on `n` vertices (`n` even, `4 <= n <= 10`), deduplicated by
/// characteristic polynomial, in discovery order.
pub fn enumerate_cubic(n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_cubic_with_charpolys(n)?
        .into_iter()
        .map(|r| r.graph)
        .collect())
}

pub fn enumerate_cubic_with_charpolys(n: usize) -> Result<Vec<Representative>> {
    if !n.is_multiple_of(2) || !(4..=10).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "cubic census needs an even order between 4 and 10, got {n}"
        )));
    }
    let mut seen = HashSet::new();
    let mut reps = Vec::new();
    let mut failure = None;
    for_each_cubic(n, true, &mut |g| {
        if failure.is_some() {
            return;
        }
        match charpoly_adjacency(&g) {
            Ok(p) => {
                if seen.insert(p.clone()) {
                    reps.push(Representative { graph: g, charpoly: p });
                }
            }
            Err(e) => failure = Some(e),
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(reps),
    }
}

/// Calls `visit` on every labeled cubic graph produced by the search. With
/// `reduce_symmetry` off, every labeled cubic graph on `n` vertices is
/// produced exactly once.
pub fn for_each_cubic(n: usize, reduce_symmetry: bool, visit: &mut dyn FnMut(Graph)) {
    let mut state = Search {
        n,
        reduce_symmetry,
        adj: vec![0u64; n],
        deg: vec![0; n],
        edges: Vec::with_capacity(n * DEGREE / 2),
    };
    state.complete_vertex(0, visit);
}

struct Search {
    n: usize,
    reduce_symmetry: bool,
    adj: Vec<u64>,
    deg: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

impl Search {
    fn complete_vertex(&mut self, v: usize, visit: &mut dyn FnMut(Graph)) {
        if v == self.n {
            visit(Graph::new(self.n, self.edges.iter().copied()).expect("search emits simple graphs"));
            return;
        }
        let need = DEGREE - self.deg[v];
        if need == 0 {
            self.complete_vertex(v + 1, visit);
            return;
        }
        let (touched, untouched): (Vec<usize>, Vec<usize>) = (v + 1..self.n)
            .filter(|&w| self.deg[w] < DEGREE && self.adj[v] & (1 << w) == 0)
            .partition(|&w| self.deg[w] > 0 || !self.reduce_symmetry);
        if touched.len() + untouched.len() < need {
            return;
        }
        // t neighbours from `touched`, the rest as the lowest untouched
        for t in (0..=need.min(touched.len())).rev() {
            let fresh = need - t;
            if fresh > untouched.len() {
                continue;
            }
            let mut chosen = Vec::with_capacity(need);
            self.choose(v, &touched, 0, t, &untouched[..fresh], &mut chosen, visit);
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn choose(
        &mut self,
        v: usize,
        pool: &[usize],
        start: usize,
        remaining: usize,
        fresh: &[usize],
        chosen: &mut Vec<usize>,
        visit: &mut dyn FnMut(Graph),
    ) {
        if remaining == 0 {
            let picked: Vec<usize> = chosen.iter().chain(fresh).copied().collect();
            for &w in &picked {
                self.link(v, w);
            }
            if self.feasible(v) {
                self.complete_vertex(v + 1, visit);
            }
            for &w in picked.iter().rev() {
                self.unlink(v, w);
            }
            return;
        }
        for i in start..=pool.len() - remaining {
            chosen.push(pool[i]);
            self.choose(v, pool, i + 1, remaining - 1, fresh, chosen, visit);
            chosen.pop();
        }
    }

    /// After `v` is complete, each later vertex must still find enough
    /// partners among the vertices after `v`.
    fn feasible(&self, v: usize) -> bool {
        let open: Vec<usize> = (v + 1..self.n).filter(|&w| self.deg[w] < DEGREE).collect();
        let deficit: usize = open.iter().map(|&w| DEGREE - self.deg[w]).sum();
        if !deficit.is_multiple_of(2) {
            return false;
        }
        open.iter().all(|&w| {
            let partners = open
                .iter()
                .filter(|&&x| x != w && self.adj[w] & (1 << x) == 0)
                .count();
            partners >= DEGREE - self.deg[w]
        })
    }

    fn link(&mut self, a: usize, b: usize) {
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
        self.deg[a] += 1;
        self.deg[b] += 1;
        self.edges.push((a, b));
    }

    fn unlink(&mut self, a: usize, b: usize) {
        self.adj[a] &= !(1 << b);
        self.adj[b] &= !(1 << a);
        self.deg[a] -= 1;
        self.deg[b] -= 1;
        self.edges.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{disjoint_union, make_complete_bipartite, make_prism, Graph};
    use std::collections::BTreeSet;

    /// Labeled cubic graphs without any pruning or symmetry reduction: every
    /// 3-subset of the edge set is tried vertex by vertex, and the result
    /// filtered by the degree condition at the end.
    fn brute_force_charpolys(n: usize) -> (usize, BTreeSet<Vec<String>>) {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let target = n * 3 / 2;
        let mut count = 0;
        let mut polys = BTreeSet::new();
        let mut stack: Vec<usize> = Vec::new();
        #[allow(clippy::too_many_arguments)]
        fn rec(
            pairs: &[(usize, usize)],
            start: usize,
            target: usize,
            n: usize,
            stack: &mut Vec<usize>,
            deg: &mut Vec<usize>,
            count: &mut usize,
            polys: &mut BTreeSet<Vec<String>>,
        ) {
            if stack.len() == target {
                if deg.iter().all(|&d| d == 3) {
                    *count += 1;
                    let g = Graph::new(n, stack.iter().map(|&k| pairs[k])).unwrap();
                    polys.insert(charpoly_adjacency(&g).unwrap().to_strings());
                }
                return;
            }
            for k in start..pairs.len() {
                let (a, b) = pairs[k];
                if deg[a] == 3 || deg[b] == 3 {
                    continue;
                }
                deg[a] += 1;
                deg[b] += 1;
                stack.push(k);
                rec(pairs, k + 1, target, n, stack, deg, count, polys);
                stack.pop();
                deg[a] -= 1;
                deg[b] -= 1;
            }
        }
        let mut deg = vec![0; n];
        rec(&pairs, 0, target, n, &mut stack, &mut deg, &mut count, &mut polys);
        (count, polys)
    }

    fn census_polys(n: usize) -> BTreeSet<Vec<String>> {
        enumerate_cubic_with_charpolys(n)
            .unwrap()
            .into_iter()
            .map(|r| r.charpoly.to_strings())
            .collect()
    }

    #[test]
    fn labeled_counts_without_reduction() {
        // the unreduced search must match the brute-force labeled count
        for n in [4, 6, 8] {
            let mut count = 0;
            for_each_cubic(n, false, &mut |_| count += 1);
            let (oracle, _) = brute_force_charpolys(n);
            assert_eq!(count, oracle, "n={n}");
        }
    }

    #[test]
    fn small_orders_match_oracle() {
        let (count4, polys4) = brute_force_charpolys(4);
        assert_eq!(count4, 1);
        assert_eq!(census_polys(4), polys4);
        let (count6, polys6) = brute_force_charpolys(6);
        assert_eq!(count6, 70);
        assert_eq!(census_polys(6), polys6);
        assert_eq!(polys6.len(), 2);
        let (_, polys8) = brute_force_charpolys(8);
        assert_eq!(census_polys(8), polys8);
    }

    #[test]
    fn order_four_and_six() {
        let four = enumerate_cubic(4).unwrap();
        assert_eq!(four.len(), 1);
        assert_eq!(four[0], Graph::complete(4));
        let six: BTreeSet<_> = census_polys(6);
        let expected: BTreeSet<_> = [make_complete_bipartite(3, 3), make_prism()]
            .iter()
            .map(|g| charpoly_adjacency(g).unwrap().to_strings())
            .collect();
        assert_eq!(six, expected);
    }

    #[test]
    fn order_ten() {
        let reps = enumerate_cubic_with_charpolys(10).unwrap();
        assert_eq!(reps.len(), 21);
        let disconnected: BTreeSet<_> = reps
            .iter()
            .filter(|r| !r.graph.is_connected())
            .map(|r| r.charpoly.clone())
            .collect();
        let k4 = Graph::complete(4);
        let expected: BTreeSet<_> = [make_prism(), make_complete_bipartite(3, 3)]
            .into_iter()
            .map(|h| charpoly_adjacency(&disjoint_union(&[k4.clone(), h]).unwrap()).unwrap())
            .collect();
        assert_eq!(disconnected, expected);
        assert!(reps.iter().all(|r| r.graph.regularity() == Some(3)));
        assert_eq!(enumerate_cubic(10).unwrap(), reps.into_iter().map(|r| r.graph).collect::<Vec<_>>());
    }

    #[test]
    fn invalid_orders() {
        for n in [0, 2, 5, 12] {
            assert!(matches!(enumerate_cubic(n), Err(Error::InvalidParameter(_))));
        }
    }
}
