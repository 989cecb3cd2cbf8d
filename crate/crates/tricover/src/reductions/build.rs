//! Point and range generators for the eight constructions.

use num_traits::{One, Zero};

use super::graph::{HVertex, PartiteHypergraph3, WeightedGraph};
use super::ring::Q39;
use crate::error::{Error, Result};
use crate::geom::{int, point_in_rect, rat, ExtRect, ExtScalar, Interval, PointD};
use crate::Rational;

/// Which construction produced an instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReductionKind {
    /// Weighted size-3 cover by orthants in the plane; min weight 3n + w.
    WeightedTriangleR2,
    /// Size-3 cover by boxes in R³ exists iff a triangle exists.
    TriangleBoxesR3,
    /// Size-3 cover by orthants in R⁴ exists iff a triangle exists.
    TriangleOrthantsR4,
    /// Rectilinear discrete 3-center in R⁴ with radius at most 5 iff a triangle exists.
    D3cR4,
    /// Weighted size-6 cover by rectangles; min weight 8n + w over 4-cliques.
    FourCliqueCover6R2,
    /// Euclidean discrete 2-center in R¹³ with squared radius below 41/4 iff a 6-hyperclique exists.
    HypercliqueD2cR13,
    /// Euclidean discrete κ-center in R^{7κ} with squared radius below 16 iff a 3κ-hyperclique exists.
    HypercliqueDkc { kappa: usize },
    /// Two orthants in R¹² covering at least 18(n²+n) points iff a 6-hyperclique exists.
    MaxCov2R12,
}

impl ReductionKind {
    pub fn dim(&self) -> usize {
        match self {
            ReductionKind::WeightedTriangleR2 | ReductionKind::FourCliqueCover6R2 => 2,
            ReductionKind::TriangleBoxesR3 => 3,
            ReductionKind::TriangleOrthantsR4 | ReductionKind::D3cR4 => 4,
            ReductionKind::HypercliqueD2cR13 => 13,
            ReductionKind::HypercliqueDkc { kappa } => 7 * kappa,
            ReductionKind::MaxCov2R12 => 12,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            ReductionKind::WeightedTriangleR2 => "weighted_triangle_r2",
            ReductionKind::TriangleBoxesR3 => "triangle_boxes_r3",
            ReductionKind::TriangleOrthantsR4 => "triangle_orthants_r4",
            ReductionKind::D3cR4 => "d3c_r4",
            ReductionKind::FourCliqueCover6R2 => "4clique_cover6_r2",
            ReductionKind::HypercliqueD2cR13 => "d2c_r13",
            ReductionKind::HypercliqueDkc { .. } => "dkc",
            ReductionKind::MaxCov2R12 => "maxcov2_r12",
        }
    }

    /// Parses a name; `dkc` takes `kappa` from the argument.
    pub fn parse(name: &str, kappa: usize) -> Result<Self> {
        Ok(match name {
            "weighted_triangle_r2" => ReductionKind::WeightedTriangleR2,
            "triangle_boxes_r3" => ReductionKind::TriangleBoxesR3,
            "triangle_orthants_r4" => ReductionKind::TriangleOrthantsR4,
            "d3c_r4" => ReductionKind::D3cR4,
            "4clique_cover6_r2" => ReductionKind::FourCliqueCover6R2,
            "d2c_r13" => ReductionKind::HypercliqueD2cR13,
            "dkc" => ReductionKind::HypercliqueDkc { kappa },
            "maxcov2_r12" => ReductionKind::MaxCov2R12,
            _ => return Err(Error::Invalid(format!("unknown reduction kind '{name}'"))),
        })
    }

    pub fn takes_hypergraph(&self) -> bool {
        matches!(
            self,
            ReductionKind::HypercliqueD2cR13 | ReductionKind::HypercliqueDkc { .. } | ReductionKind::MaxCov2R12
        )
    }
}

/// What a generated point stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PointRole {
    /// Point of type `ty` (1-based) created for vertex `vertex`.
    Vertex { ty: u8, vertex: usize },
    /// Center of the hypercube grown from range `range`.
    Center { range: usize },
    /// One of the fixed extra points, numbered from 0.
    Aux(u8),
    /// Point for a hyperedge inside group `group` (0-based).
    Edge { group: usize },
    /// Point for a non-edge on the three listed parts.
    NonEdge { parts: [usize; 3] },
    /// Fixed point attached to a group (`group` 0 is the positive one for two groups).
    Anchor { group: usize },
    /// Point of the 12-dimensional multiset: triple index and which family.
    Triple { triple: usize, family: TripleFamily },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TripleFamily {
    NonEdge,
    PairCopy,
    SingleCopy,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionInstance {
    pub kind: ReductionKind,
    /// Rational points; empty for `HypercliqueDkc`, which uses `ring_points`.
    pub points: Vec<PointD>,
    pub ring_points: Vec<Vec<Q39>>,
    pub roles: Vec<PointRole>,
    pub ranges: Vec<ExtRect>,
    /// Weight offset (3n or 8n), radius, squared radius or count, by kind.
    pub threshold: Rational,
}

impl ReductionInstance {
    pub fn num_points(&self) -> usize {
        self.points.len().max(self.ring_points.len())
    }
}

/// Stand-in for an infinite coordinate in the 12-dimensional multiset.
pub const SENTINEL: i64 = 100;

/// Rational point on the unit circle; injective on `[0, 1]`.
pub fn embed_unit_circle(x: &Rational) -> (Rational, Rational) {
    let d = x * x + Rational::one();
    (int(2) * x / &d, (x * x - Rational::one()) / d)
}

fn lt(b: Rational) -> Interval {
    Interval::new(ExtScalar::NegInf, false, b.into(), false)
}
fn le(b: Rational) -> Interval {
    Interval::new(ExtScalar::NegInf, false, b.into(), true)
}
fn gt(a: Rational) -> Interval {
    Interval::new(a.into(), false, ExtScalar::PosInf, false)
}
fn ge(a: Rational) -> Interval {
    Interval::new(a.into(), true, ExtScalar::PosInf, false)
}
fn iv(lo: Rational, lo_closed: bool, hi: Rational, hi_closed: bool) -> Interval {
    Interval::new(lo.into(), lo_closed, hi.into(), hi_closed)
}

fn in_unit_tenth(v: &Rational) -> bool {
    *v >= Rational::zero() && *v <= rat(1, 10)
}

/// Labels in `[0, 0.1]` including both ends; weights present (or absent) in `[0, 0.1]`.
fn check_graph(g: &WeightedGraph, weighted: bool) -> Result<()> {
    g.validate()?;
    if let Some(l) = g.labels.iter().find(|l| !in_unit_tenth(l)) {
        return Err(Error::Invalid(format!("vertex label {l} outside [0, 1/10]")));
    }
    if !g.labels.contains(&Rational::zero()) || !g.labels.contains(&rat(1, 10)) {
        return Err(Error::Invalid("vertex labels must include 0 and 1/10".into()));
    }
    for (u, v, w) in &g.edges {
        match (w, weighted) {
            (Some(w), true) if in_unit_tenth(w) => {}
            (Some(w), true) => return Err(Error::Invalid(format!("edge ({u}, {v}) weight {w} outside [0, 1/10]"))),
            (None, true) => return Err(Error::Invalid(format!("edge ({u}, {v}) has no weight"))),
            (Some(_), false) => return Err(Error::WeightedInput),
            (None, false) => {}
        }
    }
    Ok(())
}

/// Each edge in both orientations: (first label, second label, weight).
fn oriented(g: &WeightedGraph) -> Vec<(Rational, Rational, Rational)> {
    let mut out = Vec::with_capacity(2 * g.edges.len());
    for (u, v, w) in &g.edges {
        let w = w.clone().unwrap_or_default();
        out.push((g.labels[*u].clone(), g.labels[*v].clone(), w.clone()));
        out.push((g.labels[*v].clone(), g.labels[*u].clone(), w));
    }
    out
}

fn vertex_points(g: &WeightedGraph, make: impl Fn(&Rational) -> Vec<Vec<Rational>>) -> (Vec<PointD>, Vec<PointRole>) {
    let mut pts = Vec::new();
    let mut roles = Vec::new();
    for (i, t) in g.labels.iter().enumerate() {
        for (k, c) in make(t).into_iter().enumerate() {
            pts.push(PointD::new(c));
            roles.push(PointRole::Vertex { ty: k as u8 + 1, vertex: i });
        }
    }
    (pts, roles)
}

/// Assigns ids and, when `weighted`, sets weight = covered points + edge weight.
fn finish_ranges(pts: &[PointD], raw: Vec<(Vec<Interval>, Rational)>, weighted: bool) -> Result<Vec<ExtRect>> {
    let mut out = Vec::with_capacity(raw.len());
    for (id, (sides, w)) in raw.into_iter().enumerate() {
        let mut r = ExtRect::new(sides, None, id);
        if weighted {
            let mut c = 0i64;
            for p in pts {
                c += point_in_rect(p, &r)? as i64;
            }
            r.weight = Some(int(c) + w);
        }
        out.push(r);
    }
    Ok(out)
}

pub fn gen_weighted_triangle_r2(g: &WeightedGraph) -> Result<ReductionInstance> {
    check_graph(g, true)?;
    let one = Rational::one;
    let (points, roles) = vertex_points(g, |t| vec![vec![t.clone(), one() + t], vec![int(2), t.clone()], vec![one() + t, -one()]]);
    let mut raw = Vec::new();
    for (a, b, w) in oriented(g) {
        raw.push((vec![lt(one() + &b), le(one() + &a)], w.clone()));
        raw.push((vec![ge(one() + &a), lt(b.clone())], w.clone()));
        raw.push((vec![gt(b.clone()), ge(a.clone())], w));
    }
    let ranges = finish_ranges(&points, raw, true)?;
    Ok(ReductionInstance {
        kind: ReductionKind::WeightedTriangleR2,
        threshold: int(3 * g.n() as i64),
        points,
        ring_points: Vec::new(),
        roles,
        ranges,
    })
}

pub fn gen_triangle_boxes_r3(g: &WeightedGraph) -> Result<ReductionInstance> {
    check_graph(g, false)?;
    let i = |v: i64| int(v);
    let (points, roles) = vertex_points(g, |t| {
        vec![
            vec![i(-1) + t, i(0), i(2) + t],
            vec![i(1) + t, i(0), i(-2) + t],
            vec![i(2) + t, i(-1) + t, i(0)],
            vec![i(-2) + t, i(1) + t, i(0)],
            vec![i(0), i(2) + t, i(-1) + t],
            vec![i(0), i(-2) + t, i(1) + t],
        ]
    });
    let mut raw = Vec::new();
    for (a, b, _) in oriented(g) {
        let open = |x: &Rational| iv(i(-1) + x, false, i(1) + x, false);
        let closed = |x: &Rational| iv(i(-2) + x, true, i(2) + x, true);
        raw.push((vec![open(&a), closed(&b), Interval::all()], Rational::zero()));
        raw.push((vec![closed(&b), Interval::all(), open(&a)], Rational::zero()));
        raw.push((vec![Interval::all(), open(&a), closed(&b)], Rational::zero()));
    }
    let ranges = finish_ranges(&points, raw, false)?;
    Ok(ReductionInstance {
        kind: ReductionKind::TriangleBoxesR3,
        threshold: int(3),
        points,
        ring_points: Vec::new(),
        roles,
        ranges,
    })
}

fn orthant_r4_parts(g: &WeightedGraph) -> (Vec<PointD>, Vec<PointRole>, Vec<(Vec<Interval>, Rational)>) {
    let i = |v: i64| int(v);
    let h = rat(1, 2);
    let (points, roles) = vertex_points(g, |t| {
        vec![
            vec![t.clone(), i(2) + t, -h.clone(), -h.clone()],
            vec![i(2) - t, -t.clone(), -h.clone(), -h.clone()],
            vec![i(1) - t, h.clone(), i(1) + t, rat(3, 2)],
            vec![h.clone(), i(1) + t, h.clone(), i(2) - t],
            vec![-h.clone(), -h.clone(), i(2) - t, -t.clone()],
            vec![-h.clone(), -h.clone(), t.clone(), i(1) + t],
        ]
    });
    let mut raw = Vec::new();
    for (a, b, _) in oriented(g) {
        raw.push((vec![ge(a.clone()), ge(-a.clone()), lt(i(1) + &b), lt(i(2) - &b)], Rational::zero()));
        raw.push((vec![le(i(1) - &a), le(i(1) + &a), gt(b.clone()), gt(-b.clone())], Rational::zero()));
        raw.push((vec![lt(i(2) - &b), lt(i(2) + &b), le(i(2) - &a), le(i(1) + &a)], Rational::zero()));
    }
    (points, roles, raw)
}

pub fn gen_triangle_orthants_r4(g: &WeightedGraph) -> Result<ReductionInstance> {
    check_graph(g, false)?;
    let (points, roles, raw) = orthant_r4_parts(g);
    let ranges = finish_ranges(&points, raw, false)?;
    Ok(ReductionInstance {
        kind: ReductionKind::TriangleOrthantsR4,
        threshold: int(3),
        points,
        ring_points: Vec::new(),
        roles,
        ranges,
    })
}

/// Points only: the orthant points, the center of a side-10 cube kept at
/// each orthant's corner, and three fixed points. Closed cubes turn the open
/// orthant sides closed.
pub fn gen_d3c_r4(g: &WeightedGraph) -> Result<ReductionInstance> {
    d3c_r4(g, false)
}

/// As `gen_d3c_r4`, but the cube for an open side is moved inward by half
/// the smallest gap between distinct coordinates on that axis, so it holds
/// exactly the points the open side held.
pub fn gen_d3c_r4_open_shift(g: &WeightedGraph) -> Result<ReductionInstance> {
    d3c_r4(g, true)
}

fn d3c_r4(g: &WeightedGraph, shift_open: bool) -> Result<ReductionInstance> {
    check_graph(g, false)?;
    let (mut points, mut roles, raw) = orthant_r4_parts(g);
    let five = int(5);
    let mut eps = vec![Rational::zero(); 4];
    if shift_open {
        for (d, e) in eps.iter_mut().enumerate() {
            let mut vals: Vec<Rational> = points.iter().map(|p| p.coords[d].clone()).collect();
            for (sides, _) in &raw {
                vals.extend(sides[d].lo.finite().cloned());
                vals.extend(sides[d].hi.finite().cloned());
            }
            vals.sort();
            vals.dedup();
            *e = vals.windows(2).map(|w| &w[1] - &w[0]).min().unwrap_or_else(Rational::one) / int(2);
        }
    }
    for (k, (sides, _)) in raw.iter().enumerate() {
        let c = sides
            .iter()
            .zip(&eps)
            .map(|(s, e)| match (&s.lo, &s.hi) {
                (ExtScalar::Finite(a), _) if s.lo_closed => a + &five,
                (ExtScalar::Finite(a), _) => a + e + &five,
                (_, ExtScalar::Finite(b)) if s.hi_closed => b - &five,
                (_, ExtScalar::Finite(b)) => b - e - &five,
                _ => unreachable!("orthant side with no finite end"),
            })
            .collect();
        points.push(PointD::new(c));
        roles.push(PointRole::Center { range: k });
    }
    let aux = [
        [rat(19, 2), rat(19, 2), rat(-17, 2), rat(-15, 2)],
        [rat(-17, 2), rat(-17, 2), rat(19, 2), rat(19, 2)],
        [rat(-15, 2), rat(-15, 2), rat(-15, 2), rat(-17, 2)],
    ];
    for (k, a) in aux.into_iter().enumerate() {
        points.push(PointD::new(a.to_vec()));
        roles.push(PointRole::Aux(k as u8));
    }
    Ok(ReductionInstance {
        kind: ReductionKind::D3cR4,
        threshold: five,
        points,
        ring_points: Vec::new(),
        roles,
        ranges: Vec::new(),
    })
}

/// Rectangles whose interval is empty cover nothing and are left out. Every
/// vertex label enters some half-open interval, so a clique through the
/// vertex labelled 0 has no exact cover; that vertex must be isolated.
pub fn gen_4clique_cover6_r2(g: &WeightedGraph) -> Result<ReductionInstance> {
    check_graph(g, true)?;
    if g.edges.iter().any(|e| g.labels[e.0].is_zero() || g.labels[e.1].is_zero()) {
        return Err(Error::Invalid("the vertex labelled 0 must be isolated".into()));
    }
    let i = |v: i64| int(v);
    let (points, roles) = vertex_points(g, |t| {
        vec![
            vec![i(0), i(2) - t],
            vec![t.clone(), i(0)],
            vec![i(2), t.clone()],
            vec![i(2) - t, i(2)],
            vec![i(1), t.clone()],
            vec![i(1), i(2) - t],
            vec![t.clone(), i(1)],
            vec![i(2) - t, i(1)],
        ]
    });
    let slab = || iv(i(1), true, rat(11, 10), true);
    let mut raw = Vec::new();
    for (a, b, w) in oriented(g) {
        let fams = [
            vec![iv(i(0), true, b.clone(), false), iv(i(0), true, i(2) - &a, true)],
            vec![iv(a.clone(), true, i(2), true), iv(i(0), true, b.clone(), false)],
            vec![iv(i(2) - &b, false, i(2), true), iv(a.clone(), true, i(2), true)],
            vec![iv(i(0), true, i(2) - &a, true), iv(i(2) - &b, false, i(2), true)],
            vec![slab(), iv(b.clone(), true, i(2) - &a, true)],
            vec![iv(a.clone(), true, i(2) - &b, true), slab()],
        ];
        for sides in fams {
            if sides.iter().all(Interval::is_valid) {
                raw.push((sides, w.clone()));
            }
        }
    }
    let ranges = finish_ranges(&points, raw, true)?;
    Ok(ReductionInstance {
        kind: ReductionKind::FourCliqueCover6R2,
        threshold: int(8 * g.n() as i64),
        points,
        ring_points: Vec::new(),
        roles,
        ranges,
    })
}

fn check_hypergraph(h: &PartiteHypergraph3, parts: usize) -> Result<()> {
    h.validate()?;
    if h.parts.len() != parts {
        return Err(Error::Invalid(format!("expected {parts} parts, found {}", h.parts.len())));
    }
    for (p, labels) in h.parts.iter().enumerate() {
        let mut l = labels.clone();
        l.sort();
        if l.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Invalid(format!("part {p} repeats a label")));
        }
        if let Some(x) = l.iter().find(|x| **x < Rational::zero() || **x > Rational::one()) {
            return Err(Error::Invalid(format!("label {x} in part {p} outside [0, 1]")));
        }
    }
    Ok(())
}

/// All vertex triples on parts `ps`, in lexicographic order.
fn triples(h: &PartiteHypergraph3, ps: [usize; 3]) -> Vec<[HVertex; 3]> {
    let mut out = Vec::new();
    for a in 0..h.parts[ps[0]].len() {
        for b in 0..h.parts[ps[1]].len() {
            for c in 0..h.parts[ps[2]].len() {
                out.push([(ps[0], a), (ps[1], b), (ps[2], c)]);
            }
        }
    }
    out
}

fn part_triples(m: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            for k in j + 1..m {
                out.push([i, j, k]);
            }
        }
    }
    out
}

fn label(h: &PartiteHypergraph3, v: HVertex) -> &Rational {
    &h.parts[v.0][v.1]
}

/// Each block of three consecutive parts needs an edge inside it, otherwise
/// that block has no center candidates and the radius bound no longer tracks
/// hypercliques. Such inputs have no hyperclique anyway.
fn check_group_edges(h: &PartiteHypergraph3, groups: usize) -> Result<()> {
    for t in 0..groups {
        let inside = h.edges.iter().any(|e| e.iter().all(|v| v.0 / 3 == t));
        if !inside {
            return Err(Error::Invalid(format!("no edge inside parts {}..{}", 3 * t, 3 * t + 2)));
        }
    }
    Ok(())
}

pub fn gen_hyperclique_d2c_r13(h: &PartiteHypergraph3) -> Result<ReductionInstance> {
    check_hypergraph(h, 6)?;
    check_group_edges(h, 2)?;
    let edges = h.edge_set();
    let mut points = Vec::new();
    let mut roles = Vec::new();
    for (group, ps) in [[0, 1, 2], [3, 4, 5]].into_iter().enumerate() {
        for e in triples(h, ps) {
            if !edges.contains(&e) {
                continue;
            }
            let mut c = vec![Rational::zero(); 13];
            for (slot, &v) in e.iter().enumerate() {
                let (f, g) = embed_unit_circle(label(h, v));
                c[6 * group + 2 * slot] = f;
                c[6 * group + 2 * slot + 1] = g;
            }
            c[12] = if group == 0 { Rational::one() } else { -Rational::one() };
            points.push(PointD::new(c));
            roles.push(PointRole::Edge { group });
        }
    }
    for ps in part_triples(6) {
        if ps == [0, 1, 2] || ps == [3, 4, 5] {
            continue;
        }
        let phi = int(ps.iter().filter(|&&p| p < 3).count() as i64) - rat(3, 2);
        for e in triples(h, ps) {
            if edges.contains(&e) {
                continue;
            }
            let mut c = vec![Rational::zero(); 13];
            for &v in &e {
                let (f, g) = embed_unit_circle(label(h, v));
                c[2 * v.0] = -f;
                c[2 * v.0 + 1] = -g;
            }
            c[12] = phi.clone();
            points.push(PointD::new(c));
            roles.push(PointRole::NonEdge { parts: ps });
        }
    }
    for (group, s) in [rat(7, 2), rat(-7, 2)].into_iter().enumerate() {
        let mut c = vec![Rational::zero(); 13];
        c[12] = s;
        points.push(PointD::new(c));
        roles.push(PointRole::Anchor { group });
    }
    Ok(ReductionInstance {
        kind: ReductionKind::HypercliqueD2cR13,
        threshold: rat(41, 4),
        points,
        ring_points: Vec::new(),
        roles,
        ranges: Vec::new(),
    })
}

/// The two irrational constants of the κ-center construction, `(5+√39)/4` and `(3+√39)/4`.
pub fn dkc_constants() -> (Q39, Q39) {
    (Q39::new(rat(5, 4), rat(1, 4)), Q39::new(rat(3, 4), rat(1, 4)))
}

pub fn gen_hyperclique_dkc(h: &PartiteHypergraph3, kappa: usize) -> Result<ReductionInstance> {
    if kappa < 2 {
        return Err(Error::Invalid(format!("κ = {kappa} must be at least 2")));
    }
    check_hypergraph(h, 3 * kappa)?;
    check_group_edges(h, kappa)?;
    let d = 7 * kappa;
    let base = 6 * kappa;
    let edges = h.edge_set();
    let (mu, nu) = dkc_constants();
    let q = |r: Rational| Q39::rational(r);
    let zero = || vec![q(Rational::zero()); d];
    let mut pts = Vec::new();
    let mut roles = Vec::new();
    for t in 0..kappa {
        for e in triples(h, [3 * t, 3 * t + 1, 3 * t + 2]) {
            if !edges.contains(&e) {
                continue;
            }
            let mut c = zero();
            for (slot, &v) in e.iter().enumerate() {
                let (f, g) = embed_unit_circle(label(h, v));
                c[6 * t + 2 * slot] = q(f);
                c[6 * t + 2 * slot + 1] = q(g);
            }
            c[base + t] = q(int(2));
            pts.push(c);
            roles.push(PointRole::Edge { group: t });
        }
    }
    for ps in part_triples(3 * kappa) {
        let grp = ps.map(|p| p / 3);
        if grp[0] == grp[1] && grp[1] == grp[2] {
            continue;
        }
        for e in triples(h, ps) {
            if edges.contains(&e) {
                continue;
            }
            let mut c = zero();
            for &v in &e {
                let (f, g) = embed_unit_circle(label(h, v));
                c[2 * v.0] = q(-f);
                c[2 * v.0 + 1] = q(-g);
            }
            if grp[0] != grp[1] && grp[1] != grp[2] && grp[0] != grp[2] {
                for a in grp {
                    c[base + a] = q(int(2));
                }
            } else {
                let (pair, single) = if grp[0] == grp[1] {
                    (grp[0], grp[2])
                } else if grp[1] == grp[2] {
                    (grp[1], grp[0])
                } else {
                    (grp[0], grp[1])
                };
                c[base + pair] = mu.clone();
                c[base + single] = nu.clone();
            }
            pts.push(c);
            roles.push(PointRole::NonEdge { parts: ps });
        }
    }
    for t in 0..kappa {
        let mut c = zero();
        c[base + t] = q(rat(28, 5));
        pts.push(c);
        roles.push(PointRole::Anchor { group: t });
    }
    Ok(ReductionInstance {
        kind: ReductionKind::HypercliqueDkc { kappa },
        threshold: int(16),
        points: Vec::new(),
        ring_points: pts,
        roles,
        ranges: Vec::new(),
    })
}

/// The 18 part triples (two parts from one group, one from the other), as
/// `(i, j, k)` with `i < j` in the same group.
pub fn maxcov_triples() -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for (a, b) in [([0, 1, 2], [3, 4, 5]), ([3, 4, 5], [0, 1, 2])] {
        for x in 0..3 {
            for y in x + 1..3 {
                for &k in &b {
                    out.push([a[x], a[y], k]);
                }
            }
        }
    }
    out
}

/// Pads every part with fresh isolated labels up to the largest part size.
pub fn pad_parts(h: &PartiteHypergraph3) -> Result<PartiteHypergraph3> {
    let n = h.parts.iter().map(Vec::len).max().unwrap_or(0);
    let mut parts = h.parts.clone();
    for p in parts.iter_mut() {
        let mut next = Rational::zero();
        while p.len() < n {
            // Halving from 1 keeps fresh labels inside [0, 1].
            next = if next.is_zero() { Rational::one() } else { next / int(2) };
            if !p.contains(&next) {
                p.push(next.clone());
            }
        }
    }
    PartiteHypergraph3::new(parts, h.edges.clone())
}

/// Two orthants from the same group whose edges differ in every part also
/// cover exactly 18(n²+n) points, so for `n ≥ 2` the count can reach the
/// threshold without a hyperclique. See `gen_maxcov2_r12_balanced`.
pub fn gen_maxcov2_r12(h: &PartiteHypergraph3) -> Result<ReductionInstance> {
    check_hypergraph(h, 6)?;
    let n = h.parts[0].len();
    if h.parts.iter().any(|p| p.len() != n) {
        return Err(Error::Invalid("parts must have equal sizes; pad with isolated labels".into()));
    }
    let edges = h.edge_set();
    let big = int(SENTINEL);
    let mut ranges = Vec::new();
    for group in 0..2 {
        for e in triples(h, [3 * group, 3 * group + 1, 3 * group + 2]) {
            if !edges.contains(&e) {
                continue;
            }
            let mut sides = vec![Interval::all(); 12];
            for &v in &e {
                let x = label(h, v);
                sides[2 * v.0] = le(x.clone());
                sides[2 * v.0 + 1] = le(-x.clone());
            }
            let id = ranges.len();
            ranges.push(ExtRect::new(sides, None, id));
        }
    }
    let mut points = Vec::new();
    let mut roles = Vec::new();
    let put = |c: &mut Vec<Rational>, p: usize, x: &Rational| {
        c[2 * p] = x.clone();
        c[2 * p + 1] = -x.clone();
    };
    let fill = |c: &mut Vec<Rational>, p: usize, v: &Rational| {
        c[2 * p] = v.clone();
        c[2 * p + 1] = v.clone();
    };
    for (ti, [i, j, k]) in maxcov_triples().into_iter().enumerate() {
        let ga = i / 3;
        let third = (3 * ga..3 * ga + 3).find(|&p| p != i && p != j).unwrap();
        let others: Vec<usize> = (3 * (k / 3)..3 * (k / 3) + 3).filter(|&p| p != k).collect();
        let has = |vi: usize, vj: usize, vk: usize| edges.contains(&super::graph::normalize([(i, vi), (j, vj), (k, vk)]));
        for vi in 0..n {
            for vj in 0..n {
                for vk in 0..n {
                    if has(vi, vj, vk) {
                        continue;
                    }
                    let mut c = vec![Rational::zero(); 12];
                    put(&mut c, i, &h.parts[i][vi]);
                    put(&mut c, j, &h.parts[j][vj]);
                    put(&mut c, k, &h.parts[k][vk]);
                    fill(&mut c, third, &-big.clone());
                    for &o in &others {
                        fill(&mut c, o, &-big.clone());
                    }
                    points.push(PointD::new(c));
                    roles.push(PointRole::Triple { triple: ti, family: TripleFamily::NonEdge });
                }
            }
        }
        for vi in 0..n {
            for vj in 0..n {
                let deg = (0..n).filter(|&vk| has(vi, vj, vk)).count();
                for _ in 0..deg {
                    let mut c = vec![big.clone(); 12];
                    put(&mut c, i, &h.parts[i][vi]);
                    put(&mut c, j, &h.parts[j][vj]);
                    fill(&mut c, third, &-big.clone());
                    points.push(PointD::new(c));
                    roles.push(PointRole::Triple { triple: ti, family: TripleFamily::PairCopy });
                }
            }
        }
        for vk in 0..n {
            let deg = (0..n).flat_map(|vi| (0..n).map(move |vj| (vi, vj))).filter(|&(vi, vj)| has(vi, vj, vk)).count();
            for _ in 0..deg {
                let mut c = vec![big.clone(); 12];
                put(&mut c, k, &h.parts[k][vk]);
                for &o in &others {
                    fill(&mut c, o, &-big.clone());
                }
                points.push(PointD::new(c));
                roles.push(PointRole::Triple { triple: ti, family: TripleFamily::SingleCopy });
            }
        }
    }
    let nn = n as i64;
    Ok(ReductionInstance {
        kind: ReductionKind::MaxCov2R12,
        threshold: int(18 * (nn * nn + nn)),
        points,
        ring_points: Vec::new(),
        roles,
        ranges,
    })
}

/// `gen_maxcov2_r12` plus one point inside every orthant of the first group
/// and no orthant of the second, and one the other way round. A pair from
/// both groups gains 2, a pair from one group gains 1, and the threshold
/// rises by 2.
pub fn gen_maxcov2_r12_balanced(h: &PartiteHypergraph3) -> Result<ReductionInstance> {
    let mut inst = gen_maxcov2_r12(h)?;
    let big = int(SENTINEL);
    for g in 0..2 {
        let c = (0..12).map(|d| if d / 6 == g { -big.clone() } else { big.clone() }).collect();
        inst.points.push(PointD::new(c));
        inst.roles.push(PointRole::Aux(g as u8));
    }
    inst.threshold += int(2);
    Ok(inst)
}
