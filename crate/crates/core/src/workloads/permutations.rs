use std::fmt::Write;
use std::ops::Range;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

/// A permutation of `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation(pub Vec<u32>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self((1..=n as u32).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_valid(&self) -> bool {
        let mut seen = vec![false; self.0.len() + 1];
        self.0.iter().all(|&v| {
            let v = v as usize;
            (1..seen.len()).contains(&v) && !std::mem::replace(&mut seen[v], true)
        })
    }

    /// One integer per line.
    pub fn dump(&self) -> String {
        self.0.iter().fold(String::new(), |mut s, v| {
            writeln!(s, "{v}").unwrap();
            s
        })
    }
}

pub fn gen_uniform(n: usize, rng: &mut impl Rng) -> Permutation {
    let mut p = Permutation::identity(n);
    p.0.shuffle(rng);
    p
}

/// Reverse with probability 1/2, then recurse on the halves
/// (`floor(n/2)` and `ceil(n/2)`).
pub fn gen_separable(n: usize, rng: &mut impl Rng) -> Permutation {
    fn go(xs: &mut [u32], rng: &mut impl Rng) {
        if xs.len() < 2 {
            return;
        }
        if rng.random_bool(0.5) {
            xs.reverse();
        }
        let (a, b) = xs.split_at_mut(xs.len() / 2);
        go(a, rng);
        go(b, rng);
    }
    let mut p = Permutation::identity(n);
    go(&mut p.0, rng);
    p
}

/// Element `i` gets value `i + eps * n * Z` with `Z` standard normal; the
/// output holds each element's rank (ties broken by index).
pub fn gen_localized(n: usize, eps: f64, rng: &mut impl Rng) -> Permutation {
    let sigma = eps * n as f64;
    let vals: Vec<f64> = (0..n)
        .map(|i| {
            let z: f64 = StandardNormal.sample(rng);
            i as f64 + sigma * z
        })
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| vals[a].total_cmp(&vals[b]).then(a.cmp(&b)));
    let mut ranks = vec![0u32; n];
    for (r, &i) in order.iter().enumerate() {
        ranks[i] = r as u32 + 1;
    }
    Permutation(ranks)
}

#[derive(Clone, Debug)]
pub struct SortedBlocks {
    pub perm: Permutation,
    pub blocks: Vec<Range<usize>>,
}

/// A uniform permutation cut into consecutive blocks of length uniform in
/// `1..=b` (the last one truncated), each sorted ascending.
pub fn gen_sorted_blocks(n: usize, b: usize, rng: &mut impl Rng) -> SortedBlocks {
    assert!(b >= 1, "block bound must be positive");
    let mut perm = gen_uniform(n, rng);
    let mut blocks = Vec::new();
    let mut at = 0;
    while at < n {
        let len = rng.random_range(1..=b);
        let end = (at + len).min(n);
        perm.0[at..end].sort_unstable();
        blocks.push(at..end);
        at = end;
    }
    SortedBlocks { perm, blocks }
}
