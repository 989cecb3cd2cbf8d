//! Small source inputs for exhaustive checks.

use super::graph::WeightedGraph;
use crate::geom::rat;
use crate::Rational;

/// `n ≥ 2` labels spread evenly over `[0, 1/10]`, both ends included.
pub fn spread_labels(n: usize) -> Vec<Rational> {
    assert!(n >= 2, "need two labels for both ends");
    (0..n).map(|i| rat(i as i64, 10 * (n as i64 - 1))).collect()
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            v.push((i, j));
        }
    }
    v
}

fn graph_of(n: usize, mask: u32, ps: &[(usize, usize)]) -> WeightedGraph {
    let edges = ps.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &(u, v))| (u, v, None)).collect();
    WeightedGraph { labels: spread_labels(n), edges }
}

/// Every unweighted graph on `n` labeled vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = WeightedGraph> {
    let ps = pairs(n);
    (0u32..1 << ps.len()).map(move |m| graph_of(n, m, &ps))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn go(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            go(k + 1, p, out);
            p.swap(k, i);
        }
    }
    go(0, &mut p, &mut out);
    out
}

/// One graph per isomorphism class on `n` vertices, as the smallest edge mask in its class.
pub fn graph_classes(n: usize) -> Vec<WeightedGraph> {
    let ps = pairs(n);
    let mut index = vec![vec![0usize; n]; n];
    for (b, &(u, v)) in ps.iter().enumerate() {
        index[u][v] = b;
        index[v][u] = b;
    }
    // Bit maps of each permutation on the edge slots.
    let maps: Vec<Vec<usize>> =
        permutations(n).iter().map(|p| ps.iter().map(|&(u, v)| index[p[u]][p[v]]).collect()).collect();
    let mut out = Vec::new();
    for m in 0u32..1 << ps.len() {
        let minimal = maps.iter().all(|map| {
            let mut img = 0u32;
            for (b, &t) in map.iter().enumerate() {
                img |= (m >> b & 1) << t;
            }
            img >= m
        });
        if minimal {
            out.push(graph_of(n, m, &ps));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (2..=5).map(|n| graph_classes(n).len()).collect();
        assert_eq!(counts, vec![2, 4, 11, 34]);
        assert_eq!(all_graphs(4).count(), 64);
    }

    #[test]
    fn labels_span_interval() {
        let l = spread_labels(6);
        assert_eq!(l[0], rat(0, 1));
        assert_eq!(l[5], rat(1, 10));
    }
}
