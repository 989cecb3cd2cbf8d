//! Text formats for points, ranges, graphs and hypergraphs.
//!
//! A file is a sequence of sections. Each starts with a header
//! `DIM d KIND k [WEIGHTED]` where `k` is one of `points`, `ranges`,
//! `graph`, `hypergraph`, `ringpoints` or `meta`. Blank lines and text after
//! `#` are ignored.
//!
//! * `points`: one point per line, `d` rationals.
//! * `ranges`: one range per line, `d` tokens `lo:hi`; a leading `(` or a
//!   trailing `)` marks an open side, `-inf` / `inf` mark unbounded sides.
//!   With `WEIGHTED` a rational weight follows. Ids are line numbers from 0.
//! * `graph`: `n m`, a line of `n` vertex labels, then `m` lines `u v [w]`.
//! * `hypergraph`: `parts k`, `k` lines of part labels, then edge lines
//!   `a:i b:j c:k` naming (part, index) pairs.
//! * `ringpoints`: points whose coordinates may be `a+b*sqrt39`.
//! * `meta`: `key value` lines.
//!
//! Printing is canonical: parse → print → parse is the identity, and printing
//! a parsed canonical file reproduces it byte for byte.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::geom::{fmt_rational, parse_rational, ExtRect, ExtScalar, Interval, PointD};
use crate::reductions::{PartiteHypergraph3, WeightedGraph, Q39};
use crate::Rational;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Document {
    pub points: Option<(usize, Vec<PointD>)>,
    pub ranges: Option<(usize, bool, Vec<ExtRect>)>,
    pub graph: Option<WeightedGraph>,
    pub hypergraph: Option<PartiteHypergraph3>,
    pub ring_points: Option<(usize, Vec<Vec<Q39>>)>,
    pub meta: Vec<(String, String)>,
}

impl Document {
    pub fn meta(&self, key: &str) -> Option<&str> {
        self.meta.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }
}

fn perr(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, col, msg: msg.into() }
}

/// Non-comment tokens of a line with their 1-based columns.
fn tokens(text: &str) -> Vec<(usize, &str)> {
    let body = text.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in body.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &body[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &body[s..]));
    }
    out
}

fn rational(line: usize, col: usize, s: &str) -> Result<Rational> {
    parse_rational(s).ok_or_else(|| perr(line, col, format!("'{s}' is not a rational")))
}

fn usize_tok(line: usize, col: usize, s: &str) -> Result<usize> {
    s.parse().map_err(|_| perr(line, col, format!("'{s}' is not a non-negative integer")))
}

fn ext(line: usize, col: usize, s: &str) -> Result<ExtScalar> {
    match s {
        "inf" | "+inf" => Ok(ExtScalar::PosInf),
        "-inf" => Ok(ExtScalar::NegInf),
        _ => Ok(ExtScalar::Finite(rational(line, col, s)?)),
    }
}

fn interval(line: usize, col: usize, s: &str) -> Result<Interval> {
    let (lo_open, s) = match s.strip_prefix('(') {
        Some(r) => (true, r),
        None => (false, s.strip_prefix('[').unwrap_or(s)),
    };
    let (hi_open, s) = match s.strip_suffix(')') {
        Some(r) => (true, r),
        None => (false, s.strip_suffix(']').unwrap_or(s)),
    };
    let (a, b) = s.split_once(':').ok_or_else(|| perr(line, col, format!("interval '{s}' lacks ':'")))?;
    let iv = Interval::new(ext(line, col, a)?, !lo_open, ext(line, col, b)?, !hi_open);
    if !iv.is_valid() {
        return Err(perr(line, col, format!("interval '{s}' is empty")));
    }
    Ok(iv)
}

fn ring(line: usize, col: usize, s: &str) -> Result<Q39> {
    if let Some(body) = s.strip_suffix("*sqrt39") {
        // Split at the last sign that is not leading.
        let cut = body.char_indices().skip(1).filter(|(_, c)| *c == '+' || *c == '-').map(|(i, _)| i).last();
        let Some(cut) = cut else {
            return Ok(Q39::new(Rational::default(), rational(line, col, body)?));
        };
        let a = rational(line, col, &body[..cut])?;
        let b = rational(line, col, body[cut..].trim_start_matches('+'))?;
        return Ok(Q39::new(a, b));
    }
    Ok(Q39::rational(rational(line, col, s)?))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Points,
    Ranges,
    Graph,
    Hypergraph,
    RingPoints,
    Meta,
}

struct Header {
    dim: usize,
    kind: Kind,
    weighted: bool,
}

fn header(line: usize, toks: &[(usize, &str)]) -> Result<Header> {
    if toks.len() < 4 || toks[0].1 != "DIM" || toks[2].1 != "KIND" {
        return Err(perr(line, toks.first().map_or(1, |t| t.0), "expected 'DIM d KIND k [WEIGHTED]'"));
    }
    let dim = usize_tok(line, toks[1].0, toks[1].1)?;
    let kind = match toks[3].1 {
        "points" => Kind::Points,
        "ranges" => Kind::Ranges,
        "graph" => Kind::Graph,
        "hypergraph" => Kind::Hypergraph,
        "ringpoints" => Kind::RingPoints,
        "meta" => Kind::Meta,
        k => return Err(perr(line, toks[3].0, format!("unknown kind '{k}'"))),
    };
    let weighted = match toks.get(4) {
        None => false,
        Some((_, "WEIGHTED")) => true,
        Some((c, t)) => return Err(perr(line, *c, format!("unexpected '{t}'"))),
    };
    if toks.len() > 5 {
        return Err(perr(line, toks[5].0, "trailing tokens after header"));
    }
    Ok(Header { dim, kind, weighted })
}

fn parse_hvertex(line: usize, col: usize, s: &str) -> Result<(usize, usize)> {
    let (a, b) = s.split_once(':').ok_or_else(|| perr(line, col, format!("'{s}' is not part:index")))?;
    Ok((usize_tok(line, col, a)?, usize_tok(line, col, b)?))
}

pub fn parse_document(text: &str) -> Result<Document> {
    let lines: Vec<(usize, Vec<(usize, &str)>)> =
        text.lines().enumerate().map(|(i, l)| (i + 1, tokens(l))).filter(|(_, t)| !t.is_empty()).collect();
    let mut doc = Document::default();
    let mut i = 0;
    while i < lines.len() {
        let (hl, ht) = &lines[i];
        let h = header(*hl, ht)?;
        i += 1;
        let start = i;
        while i < lines.len() && lines[i].1[0].1 != "DIM" {
            i += 1;
        }
        let body = &lines[start..i];
        let dup = |present: bool| if present { Err(perr(*hl, 1, "section appears twice")) } else { Ok(()) };
        match h.kind {
            Kind::Points => {
                dup(doc.points.is_some())?;
                let mut pts = Vec::with_capacity(body.len());
                for (ln, t) in body {
                    if t.len() != h.dim {
                        return Err(perr(*ln, 1, format!("expected {} coordinates, found {}", h.dim, t.len())));
                    }
                    pts.push(PointD::new(t.iter().map(|(c, s)| rational(*ln, *c, s)).collect::<Result<_>>()?));
                }
                doc.points = Some((h.dim, pts));
            }
            Kind::RingPoints => {
                dup(doc.ring_points.is_some())?;
                let mut pts = Vec::with_capacity(body.len());
                for (ln, t) in body {
                    if t.len() != h.dim {
                        return Err(perr(*ln, 1, format!("expected {} coordinates, found {}", h.dim, t.len())));
                    }
                    pts.push(t.iter().map(|(c, s)| ring(*ln, *c, s)).collect::<Result<_>>()?);
                }
                doc.ring_points = Some((h.dim, pts));
            }
            Kind::Ranges => {
                dup(doc.ranges.is_some())?;
                let want = h.dim + h.weighted as usize;
                let mut rs = Vec::with_capacity(body.len());
                for (id, (ln, t)) in body.iter().enumerate() {
                    if t.len() != want {
                        return Err(perr(*ln, 1, format!("expected {want} tokens, found {}", t.len())));
                    }
                    let sides = t[..h.dim].iter().map(|(c, s)| interval(*ln, *c, s)).collect::<Result<_>>()?;
                    let w = if h.weighted { Some(rational(*ln, t[h.dim].0, t[h.dim].1)?) } else { None };
                    rs.push(ExtRect::new(sides, w, id));
                }
                doc.ranges = Some((h.dim, h.weighted, rs));
            }
            Kind::Graph => {
                dup(doc.graph.is_some())?;
                doc.graph = Some(parse_graph(*hl, body, h.weighted)?);
            }
            Kind::Hypergraph => {
                dup(doc.hypergraph.is_some())?;
                doc.hypergraph = Some(parse_hypergraph(*hl, body)?);
            }
            Kind::Meta => {
                for (ln, t) in body {
                    if t.len() != 2 {
                        return Err(perr(*ln, 1, "expected 'key value'"));
                    }
                    doc.meta.push((t[0].1.to_string(), t[1].1.to_string()));
                }
            }
        }
    }
    Ok(doc)
}

type Body<'a> = [(usize, Vec<(usize, &'a str)>)];

fn parse_graph(hl: usize, body: &Body, weighted: bool) -> Result<WeightedGraph> {
    let Some((ln, t)) = body.first() else { return Err(perr(hl, 1, "graph section is empty")) };
    if t.len() != 2 {
        return Err(perr(*ln, 1, "expected 'n m'"));
    }
    let n = usize_tok(*ln, t[0].0, t[0].1)?;
    let m = usize_tok(*ln, t[1].0, t[1].1)?;
    let (labels, rest): (Vec<Rational>, &Body) = if n == 0 {
        (Vec::new(), &body[1..])
    } else {
        match body.get(1) {
            Some((ln, t)) if t.len() == n => (t.iter().map(|(c, s)| rational(*ln, *c, s)).collect::<Result<_>>()?, &body[2..]),
            Some((ln, t)) => return Err(perr(*ln, 1, format!("expected {n} labels, found {}", t.len()))),
            None => return Err(perr(*ln, 1, "missing label line")),
        }
    };
    if rest.len() != m {
        return Err(perr(hl, 1, format!("expected {m} edge lines, found {}", rest.len())));
    }
    let mut edges = Vec::with_capacity(m);
    for (ln, t) in rest {
        let want = 2 + weighted as usize;
        if t.len() != want {
            return Err(perr(*ln, 1, format!("expected {want} tokens, found {}", t.len())));
        }
        let u = usize_tok(*ln, t[0].0, t[0].1)?;
        let v = usize_tok(*ln, t[1].0, t[1].1)?;
        let w = if weighted { Some(rational(*ln, t[2].0, t[2].1)?) } else { None };
        edges.push((u, v, w));
    }
    WeightedGraph::new(labels, edges).map_err(|e| perr(hl, 1, e.to_string()))
}

fn parse_hypergraph(hl: usize, body: &Body) -> Result<PartiteHypergraph3> {
    let Some((ln, t)) = body.first() else { return Err(perr(hl, 1, "hypergraph section is empty")) };
    if t.len() != 2 || t[0].1 != "parts" {
        return Err(perr(*ln, 1, "expected 'parts k'"));
    }
    let k = usize_tok(*ln, t[1].0, t[1].1)?;
    if body.len() < 1 + k {
        return Err(perr(*ln, 1, format!("expected {k} part lines")));
    }
    let mut parts = Vec::with_capacity(k);
    for (ln, t) in &body[1..1 + k] {
        // A part with no vertices is written as a single '-'.
        if t.len() == 1 && t[0].1 == "-" {
            parts.push(Vec::new());
            continue;
        }
        parts.push(t.iter().map(|(c, s)| rational(*ln, *c, s)).collect::<Result<Vec<_>>>()?);
    }
    let mut edges = Vec::new();
    for (ln, t) in &body[1 + k..] {
        if t.len() != 3 {
            return Err(perr(*ln, 1, "expected three part:index tokens"));
        }
        edges.push([
            parse_hvertex(*ln, t[0].0, t[0].1)?,
            parse_hvertex(*ln, t[1].0, t[1].1)?,
            parse_hvertex(*ln, t[2].0, t[2].1)?,
        ]);
    }
    PartiteHypergraph3::new(parts, edges).map_err(|e| perr(hl, 1, e.to_string()))
}

fn fmt_ext(v: &ExtScalar) -> String {
    match v {
        ExtScalar::NegInf => "-inf".into(),
        ExtScalar::PosInf => "inf".into(),
        ExtScalar::Finite(r) => fmt_rational(r),
    }
}

pub fn fmt_interval(iv: &Interval) -> String {
    let lo_open = iv.lo.is_finite() && !iv.lo_closed;
    let hi_open = iv.hi.is_finite() && !iv.hi_closed;
    format!("{}{}:{}{}", if lo_open { "(" } else { "" }, fmt_ext(&iv.lo), fmt_ext(&iv.hi), if hi_open { ")" } else { "" })
}

fn fmt_q39(q: &Q39) -> String {
    if q.is_rational() {
        fmt_rational(&q.a)
    } else if q.b >= Rational::default() {
        format!("{}+{}*sqrt39", fmt_rational(&q.a), fmt_rational(&q.b))
    } else {
        format!("{}{}*sqrt39", fmt_rational(&q.a), fmt_rational(&q.b))
    }
}

pub fn print_points(out: &mut String, dim: usize, pts: &[PointD]) {
    let _ = writeln!(out, "DIM {dim} KIND points");
    for p in pts {
        out.push_str(&p.coords.iter().map(fmt_rational).collect::<Vec<_>>().join(" "));
        out.push('\n');
    }
}

pub fn print_ranges(out: &mut String, dim: usize, weighted: bool, rs: &[ExtRect]) {
    let _ = writeln!(out, "DIM {dim} KIND ranges{}", if weighted { " WEIGHTED" } else { "" });
    let mut sorted: Vec<&ExtRect> = rs.iter().collect();
    sorted.sort_by_key(|r| r.id);
    for r in sorted {
        let mut parts: Vec<String> = r.sides.iter().map(fmt_interval).collect();
        if weighted {
            parts.push(fmt_rational(&r.weight_or_one()));
        }
        out.push_str(&parts.join(" "));
        out.push('\n');
    }
}

pub fn print_graph(out: &mut String, g: &WeightedGraph) {
    let weighted = g.is_weighted();
    let _ = writeln!(out, "DIM 0 KIND graph{}", if weighted { " WEIGHTED" } else { "" });
    let _ = writeln!(out, "{} {}", g.n(), g.edges.len());
    if g.n() > 0 {
        let _ = writeln!(out, "{}", g.labels.iter().map(fmt_rational).collect::<Vec<_>>().join(" "));
    }
    for (u, v, w) in &g.edges {
        match (weighted, w) {
            (true, w) => {
                let _ = writeln!(out, "{u} {v} {}", fmt_rational(&w.clone().unwrap_or_default()));
            }
            (false, _) => {
                let _ = writeln!(out, "{u} {v}");
            }
        }
    }
}

pub fn print_hypergraph(out: &mut String, h: &PartiteHypergraph3) {
    let _ = writeln!(out, "DIM 0 KIND hypergraph");
    let _ = writeln!(out, "parts {}", h.parts.len());
    for p in &h.parts {
        if p.is_empty() {
            out.push_str("-\n");
        } else {
            let _ = writeln!(out, "{}", p.iter().map(fmt_rational).collect::<Vec<_>>().join(" "));
        }
    }
    for e in &h.edges {
        let _ = writeln!(out, "{}:{} {}:{} {}:{}", e[0].0, e[0].1, e[1].0, e[1].1, e[2].0, e[2].1);
    }
}

pub fn print_ring_points(out: &mut String, dim: usize, pts: &[Vec<Q39>]) {
    let _ = writeln!(out, "DIM {dim} KIND ringpoints");
    for p in pts {
        out.push_str(&p.iter().map(fmt_q39).collect::<Vec<_>>().join(" "));
        out.push('\n');
    }
}

pub fn print_document(doc: &Document) -> String {
    let mut out = String::new();
    if !doc.meta.is_empty() {
        out.push_str("DIM 0 KIND meta\n");
        for (k, v) in &doc.meta {
            let _ = writeln!(out, "{k} {v}");
        }
    }
    if let Some((d, p)) = &doc.points {
        print_points(&mut out, *d, p);
    }
    if let Some((d, w, r)) = &doc.ranges {
        print_ranges(&mut out, *d, *w, r);
    }
    if let Some(g) = &doc.graph {
        print_graph(&mut out, g);
    }
    if let Some(h) = &doc.hypergraph {
        print_hypergraph(&mut out, h);
    }
    if let Some((d, p)) = &doc.ring_points {
        print_ring_points(&mut out, *d, p);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::rat;

    #[test]
    fn empty_points_file() {
        let d = parse_document("DIM 2 KIND points\n").unwrap();
        assert_eq!(d.points, Some((2, vec![])));
    }

    #[test]
    fn infinite_and_fraction_tokens() {
        let text = "DIM 2 KIND ranges WEIGHTED\n(-inf:1/3 [0:inf) 7/2\n";
        let d = parse_document(text).unwrap();
        let r = &d.ranges.as_ref().unwrap().2[0];
        assert_eq!(r.sides[0].hi, ExtScalar::Finite(rat(1, 3)));
        assert!(r.sides[0].hi_closed);
        assert_eq!(r.sides[1].hi, ExtScalar::PosInf);
        let canon = print_document(&d);
        assert_eq!(canon, "DIM 2 KIND ranges WEIGHTED\n-inf:1/3 0:inf 7/2\n");
        assert_eq!(print_document(&parse_document(&canon).unwrap()), canon);
    }

    #[test]
    fn open_sides_round_trip() {
        let text = "DIM 1 KIND ranges\n(0:1)\n0:1)\n(0:1\n";
        let d = parse_document(text).unwrap();
        assert_eq!(print_document(&d), text);
    }

    #[test]
    fn errors_carry_position() {
        match parse_document("DIM 2 KIND points\n1 x\n") {
            Err(Error::Parse { line, col, .. }) => assert_eq!((line, col), (2, 3)),
            e => panic!("{e:?}"),
        }
        assert!(matches!(parse_document("DIM 1 KIND ranges\n2:1\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn graph_and_hypergraph_round_trip() {
        let text = "DIM 0 KIND graph WEIGHTED\n3 2\n0 1/20 1/10\n0 1 1/100\n1 2 0\n\
                    DIM 0 KIND hypergraph\nparts 3\n0 1\n1/2\n-\n";
        let d = parse_document(text).unwrap();
        assert_eq!(print_document(&d), text);
    }

    #[test]
    fn ring_tokens() {
        let text = "DIM 3 KIND ringpoints\n5/4+1/4*sqrt39 3/4-1/4*sqrt39 2\n";
        let d = parse_document(text).unwrap();
        let p = &d.ring_points.as_ref().unwrap().1[0];
        assert_eq!(p[0], Q39::new(rat(5, 4), rat(1, 4)));
        assert_eq!(p[1], Q39::new(rat(3, 4), rat(-1, 4)));
        assert_eq!(print_document(&d), text);
    }
}
