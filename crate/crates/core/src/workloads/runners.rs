use crate::analysis::Counters;
use crate::error::Result;
use crate::heap::{HeapConfig, HeapKind, HeapSet, InsertPosition};
use crate::store::NodeHandle;

use super::WeightedGraph;

/// Cost of one consolidation: the roots it combined and what it charged.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StepCost {
    pub roots: usize,
    pub comparisons: u64,
    pub links: u64,
}

/// Sorting mode: the keys form the initial root list in order (no links),
/// then `n` delete-mins follow. Returns the total counters.
pub fn run_sorting<K: Ord + Clone>(kind: HeapKind, keys: &[K]) -> Result<Counters> {
    sort_inner(kind, keys, false).map(|(c, _)| c)
}

/// As [`run_sorting`], also reporting the consolidation done by each
/// delete-min.
pub fn run_sorting_traced<K: Ord + Clone>(kind: HeapKind, keys: &[K]) -> Result<(Counters, Vec<StepCost>)> {
    sort_inner(kind, keys, true)
}

fn sort_inner<K: Ord + Clone>(kind: HeapKind, keys: &[K], traced: bool) -> Result<(Counters, Vec<StepCost>)> {
    let mut set = HeapSet::new();
    let h = set.make_heap(HeapConfig::new(kind))?;
    let mut steps = Vec::new();
    set.load_unsorted(h, keys.iter().cloned())?;
    let mut out = Vec::with_capacity(keys.len());
    while !set.is_empty(h)? {
        let before = set.counters();
        let roots = if traced {
            let roots = set.roots(h)?;
            roots.len() - 1 + set.store().children(roots[0]).len()
        } else {
            0
        };
        out.push(set.delete_min(h)?.1);
        if traced {
            let d = set.counters() - before;
            steps.push(StepCost { roots, comparisons: d.comparisons, links: d.links });
        }
    }
    let mut expect = keys.to_vec();
    expect.sort();
    assert!(out == expect, "{kind} produced unsorted output");
    Ok((set.counters(), steps))
}

#[derive(Clone, Debug)]
pub struct DijkstraRun {
    pub dist: Vec<Option<u64>>,
    /// Counters summed over delete-mins only.
    pub counters: Counters,
    /// Counters of each delete-min.
    pub per_delete_min: Vec<Counters>,
}

/// Dijkstra from `source`. Inserts and decrease-keys append to the end of
/// the root list; only delete-min work is counted.
pub fn run_dijkstra(kind: HeapKind, g: &WeightedGraph, source: usize) -> Result<DijkstraRun> {
    let mut set: HeapSet<u64> = HeapSet::new();
    let h = set.make_heap(HeapConfig::new(kind).with_insert_position(InsertPosition::Last))?;
    let mut dist: Vec<Option<u64>> = vec![None; g.n];
    let mut node: Vec<Option<NodeHandle>> = vec![None; g.n];
    let mut vertex_of: Vec<u32> = Vec::new();
    let mut done = vec![false; g.n];
    let mut counters = Counters::default();
    let mut per_delete_min = Vec::new();

    let track = |vertex_of: &mut Vec<u32>, x: NodeHandle, v: usize| {
        if vertex_of.len() <= x.index() {
            vertex_of.resize(x.index() + 1, 0);
        }
        vertex_of[x.index()] = v as u32;
    };

    dist[source] = Some(0);
    let x = set.insert(h, 0)?;
    track(&mut vertex_of, x, source);
    node[source] = Some(x);
    while !set.is_empty(h)? {
        let before = set.counters();
        let (x, d) = set.delete_min(h)?;
        let step = set.counters() - before;
        counters += step;
        per_delete_min.push(step);
        let u = vertex_of[x.index()] as usize;
        done[u] = true;
        node[u] = None;
        for &(v, w) in &g.adj[u] {
            let v = v as usize;
            if done[v] {
                continue;
            }
            let nd = d + u64::from(w);
            match (dist[v], node[v]) {
                (Some(old), Some(y)) if nd < old => {
                    dist[v] = Some(nd);
                    set.decrease_key(h, y, nd)?;
                }
                (None, _) => {
                    dist[v] = Some(nd);
                    let y = set.insert(h, nd)?;
                    track(&mut vertex_of, y, v);
                    node[v] = Some(y);
                }
                _ => {}
            }
        }
    }
    Ok(DijkstraRun { dist, counters, per_delete_min })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorting_trivial() {
        for kind in HeapKind::ALL {
            assert_eq!(run_sorting(kind, &[1u32]).unwrap().links, 0);
            let c = run_sorting(kind, &[3u32, 1, 2]).unwrap();
            assert_eq!((c.links, c.comparisons), (1, 1));
            run_sorting(kind, &[3u32, 3, 1, 2, 2]).unwrap();
        }
    }

    #[test]
    fn dijkstra_small() {
        let g = WeightedGraph::new(1);
        let r = run_dijkstra(HeapKind::Smooth, &g, 0).unwrap();
        assert_eq!(r.dist, vec![Some(0)]);
        assert_eq!(r.counters, Counters::default());

        let mut g = WeightedGraph::new(4);
        g.add_edge(0, 1, 4);
        g.add_edge(1, 2, 5);
        for kind in HeapKind::ALL {
            let r = run_dijkstra(kind, &g, 0).unwrap();
            assert_eq!(r.dist, vec![Some(0), Some(4), Some(9), None]);
        }
    }
}
