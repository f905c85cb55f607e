use std::fmt::Write;

use rand::Rng;

use crate::error::{HeapError, Result};

pub const MAX_WEIGHT: u32 = 10_000;

/// Simple undirected graph with positive integer weights, stored as
/// symmetric adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedGraph {
    pub n: usize,
    pub adj: Vec<Vec<(u32, u32)>>,
}

impl WeightedGraph {
    pub fn new(n: usize) -> Self {
        Self { n, adj: vec![Vec::new(); n] }
    }

    pub fn add_edge(&mut self, u: usize, v: usize, w: u32) {
        debug_assert_ne!(u, v);
        self.adj[u].push((v as u32, w));
        self.adj[v].push((u as u32, w));
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].iter().any(|&(x, _)| x as usize == v)
    }

    /// Edges `(u, v, w)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter().filter(move |&&(v, _)| u < v as usize).map(move |&(v, w)| (u, v as usize, w))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// `n m` header, then one `u v w` line per edge (0-based vertices).
    pub fn dump(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.edge_count());
        for (u, v, w) in self.edges() {
            writeln!(s, "{u} {v} {w}").unwrap();
        }
        s
    }
}

fn weight(rng: &mut impl Rng) -> u32 {
    rng.random_range(1..=MAX_WEIGHT)
}

/// Each of the `n(n-1)/2` pairs is an edge independently with probability `p`.
pub fn gen_erdos_renyi(n: usize, p: f64, rng: &mut impl Rng) -> WeightedGraph {
    assert!((0.0..=1.0).contains(&p), "edge probability out of range");
    let mut g = WeightedGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                let w = weight(rng);
                g.add_edge(u, v, w);
            }
        }
    }
    g
}

/// Random simple `d`-regular graph by the pairing model: points are matched
/// one random pair at a time, rejecting only the pair that would create a
/// loop or a parallel edge; if no valid pair remains the whole matching is
/// restarted.
pub fn gen_regular(n: usize, d: usize, rng: &mut impl Rng) -> Result<WeightedGraph> {
    if (n * d) % 2 == 1 {
        return Err(HeapError::Infeasible(format!("n*d = {} is odd", n * d)));
    }
    if d > 0 && d >= n {
        return Err(HeapError::Infeasible(format!("degree {d} needs more than {n} vertices")));
    }
    'restart: loop {
        let mut g = WeightedGraph::new(n);
        let mut points: Vec<u32> = (0..n as u32).flat_map(|v| std::iter::repeat_n(v, d)).collect();
        while !points.is_empty() {
            let m = points.len();
            let mut found = None;
            for _ in 0..64 {
                let i = rng.random_range(0..m);
                let j = rng.random_range(0..m);
                let (u, v) = (points[i] as usize, points[j] as usize);
                if u != v && !g.has_edge(u, v) {
                    found = Some((i, j));
                    break;
                }
            }
            if found.is_none() {
                // random probing failed; see whether any valid pair is left
                let pairs: Vec<(usize, usize)> = (0..m)
                    .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
                    .filter(|&(i, j)| {
                        let (u, v) = (points[i] as usize, points[j] as usize);
                        u != v && !g.has_edge(u, v)
                    })
                    .collect();
                if pairs.is_empty() {
                    continue 'restart;
                }
                found = Some(pairs[rng.random_range(0..pairs.len())]);
            }
            let (i, j) = found.unwrap();
            let (u, v) = (points[i] as usize, points[j] as usize);
            let w = weight(rng);
            g.add_edge(u, v, w);
            let (hi, lo) = if i > j { (i, j) } else { (j, i) };
            points.swap_remove(hi);
            points.swap_remove(lo);
        }
        return Ok(g);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::workloads::trial_rng;

    #[test]
    fn er_extremes() {
        let mut rng = trial_rng(3, 0);
        assert_eq!(gen_erdos_renyi(20, 0.0, &mut rng).edge_count(), 0);
        let g = gen_erdos_renyi(20, 1.0, &mut rng);
        assert_eq!(g.edge_count(), 190);
        assert!(g.edges().all(|(_, _, w)| (1..=MAX_WEIGHT).contains(&w)));
    }

    #[test]
    fn regular_degrees_and_simplicity() {
        let g = gen_regular(200, 10, &mut trial_rng(4, 0)).unwrap();
        for u in 0..g.n {
            assert_eq!(g.adj[u].len(), 10);
            let mut nb: Vec<u32> = g.adj[u].iter().map(|&(v, _)| v).collect();
            nb.sort_unstable();
            nb.dedup();
            assert_eq!(nb.len(), 10);
            assert!(!nb.contains(&(u as u32)));
        }
    }

    #[test]
    fn k4_is_the_only_cubic_graph_on_four_vertices() {
        let g = gen_regular(4, 3, &mut trial_rng(1, 0)).unwrap();
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn infeasible_regular() {
        assert!(matches!(gen_regular(5, 3, &mut trial_rng(1, 0)), Err(HeapError::Infeasible(_))));
        assert!(matches!(gen_regular(4, 4, &mut trial_rng(1, 0)), Err(HeapError::Infeasible(_))));
    }

    #[test]
    fn dump_header() {
        let mut g = WeightedGraph::new(3);
        g.add_edge(0, 2, 7);
        assert_eq!(g.dump(), "3 1\n0 2 7\n");
    }
}
