use crate::error::{Error, Result};
use crate::Rational;

/// Graph with rational vertex labels and optional edge weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedGraph {
    pub labels: Vec<Rational>,
    pub edges: Vec<(usize, usize, Option<Rational>)>,
}

impl WeightedGraph {
    pub fn new(labels: Vec<Rational>, edges: Vec<(usize, usize, Option<Rational>)>) -> Result<Self> {
        let g = WeightedGraph { labels, edges };
        g.validate()?;
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn is_weighted(&self) -> bool {
        self.edges.iter().any(|e| e.2.is_some())
    }

    pub fn validate(&self) -> Result<()> {
        let mut l = self.labels.clone();
        l.sort();
        if l.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Invalid("vertex labels must be distinct".into()));
        }
        for &(u, v, _) in &self.edges {
            if u >= self.n() || v >= self.n() || u == v {
                return Err(Error::Invalid(format!("bad edge ({u}, {v})")));
            }
        }
        Ok(())
    }

    /// Dense adjacency with the edge weight (or zero) in each present slot.
    pub fn adjacency(&self) -> Vec<Vec<Option<Rational>>> {
        let n = self.n();
        let mut a = vec![vec![None; n]; n];
        for (u, v, w) in &self.edges {
            let w = w.clone().unwrap_or_default();
            a[*u][*v] = Some(w.clone());
            a[*v][*u] = Some(w);
        }
        a
    }
}

/// A vertex of a partite hypergraph: (part, index within the part).
pub type HVertex = (usize, usize);

/// Hypergraph whose vertices are split into parts; every edge meets three distinct parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartiteHypergraph3 {
    pub parts: Vec<Vec<Rational>>,
    pub edges: Vec<[HVertex; 3]>,
}

impl PartiteHypergraph3 {
    pub fn new(parts: Vec<Vec<Rational>>, edges: Vec<[HVertex; 3]>) -> Result<Self> {
        let h = PartiteHypergraph3 { parts, edges: edges.into_iter().map(normalize).collect() };
        h.validate()?;
        Ok(h)
    }

    pub fn validate(&self) -> Result<()> {
        for e in &self.edges {
            if e[0].0 == e[1].0 || e[1].0 == e[2].0 || e[0].0 == e[2].0 {
                return Err(Error::Invalid("hyperedge must span three distinct parts".into()));
            }
            for &(p, i) in e {
                if p >= self.parts.len() || i >= self.parts[p].len() {
                    return Err(Error::Invalid(format!("hyperedge vertex ({p}, {i}) out of range")));
                }
            }
        }
        Ok(())
    }

    pub fn has_edge(&self, e: [HVertex; 3]) -> bool {
        let e = normalize(e);
        self.edges.contains(&e)
    }

    pub fn edge_set(&self) -> std::collections::HashSet<[HVertex; 3]> {
        self.edges.iter().copied().collect()
    }
}

/// Sorts the vertices of a hyperedge by part.
pub fn normalize(mut e: [HVertex; 3]) -> [HVertex; 3] {
    e.sort();
    e
}
