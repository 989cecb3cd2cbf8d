//! Guess spaces for weighted rectangles: a separated pair, arrangements with
//! an unguessed side, and arrangements anchored at a known rectangle.

use std::collections::HashSet;

use rayon::prelude::*;

use super::ctx::{merge, Cand, Ctx, Stats};
use super::engine::{Desc, GuessConfig};
use super::step3::{all_configs, desc_of, Evaluator};
use super::Provenance;
use crate::pair_oracle::ANY;
use crate::planar::KRect;

/// Bounding box of the points in `half` outside `a`.
pub(crate) fn outside_in(ctx: &Ctx, half: &KRect, a: &KRect) -> Option<KRect> {
    let parts = [
        KRect { xh: half.xh.min(a.xl.saturating_sub(1)), ..*half },
        KRect { xl: half.xl.max(a.xh.saturating_add(1)), ..*half },
        KRect { yh: half.yh.min(a.yl.saturating_sub(1)), ..*half },
        KRect { yl: half.yl.max(a.yh.saturating_add(1)), ..*half },
    ];
    let mut hull: Option<KRect> = None;
    for q in parts.iter().filter(|q| !q.is_empty()) {
        if let Some(e) = ctx.po.pidx.extremes(q) {
            hull = Some(hull.map_or(e, |h| h.hull(&e)));
        }
    }
    hull
}

/// Two of the three are disjoint and split by a grid line: guess the third
/// and the line, cover what lies beyond the line with one rectangle.
pub(crate) fn case1(ctx: &Ctx) -> Option<Cand> {
    let g = &ctx.grid;
    let mut halves = Vec::new();
    for &b in &g.cols[1..] {
        halves.push(KRect { xh: b - 1, ..KRect::ALL });
        halves.push(KRect { xl: b, ..KRect::ALL });
    }
    for &b in &g.rows[1..] {
        halves.push(KRect { yh: b - 1, ..KRect::ALL });
        halves.push(KRect { yl: b, ..KRect::ALL });
    }
    (0..ctx.n() as u32)
        .into_par_iter()
        .map(|a| {
            let ra = ctx.rects[a as usize];
            let mut best = None;
            let mut last: Option<u32> = None;
            for h in &halves {
                let q = outside_in(ctx, h, &ra).unwrap_or(ANY);
                let Some((_, b)) = ctx.po.eidx.best(&q, &[a]) else { continue };
                if last == Some(b) {
                    continue;
                }
                last = Some(b);
                best = merge(best, ctx.pair(a, b, Provenance::CaseI));
            }
            best
        })
        .reduce(|| None, merge)
}

/// Arrangements with at most seven guessed sides; the rectangle playing the
/// third role has its remaining side pushed to infinity and is recovered by
/// the pair query.
pub(crate) fn case2(ctx: &Ctx) -> Option<Cand> {
    let (xt, yt) = all_configs(ctx.grid.ncols(), ctx.grid.nrows());
    xt.par_iter()
        .map_init(
            || Evaluator::new(ctx),
            |ev, x| {
                let mut best = None;
                let xs = x.iter().map(|p| p.0.is_some() as usize + p.1.is_some() as usize).sum::<usize>();
                for y in &yt {
                    let ys = y.iter().map(|p| p.0.is_some() as usize + p.1.is_some() as usize).sum::<usize>();
                    if xs + ys > 7 {
                        continue;
                    }
                    let d = [
                        Desc { xl: x[0].0, xh: x[0].1, yl: y[0].0, yh: y[0].1 },
                        Desc { xl: x[1].0, xh: x[1].1, yl: y[1].0, yh: y[1].1 },
                        Desc { xl: x[2].0, xh: x[2].1, yl: y[2].0, yh: y[2].1 },
                    ];
                    if d[0] > d[1] || d[1] > d[2] {
                        continue;
                    }
                    best = merge(best, eval_pairs(ev, &GuessConfig::new(d)));
                }
                best
            },
        )
        .reduce(|| None, merge)
}

fn eval_pairs(ev: &mut Evaluator, cfg: &GuessConfig) -> Option<Cand> {
    Stats::add(&ev.ctx.stats.guesses, 1);
    let boxes = ev.regions(cfg, true)?;
    let lists = [ev.top3(boxes[0]), ev.top3(boxes[1]), ev.top3(boxes[2])];
    let mut done: Vec<(u32, u32)> = Vec::with_capacity(12);
    let mut best = None;
    for (i, k) in [(0, 1), (0, 2), (1, 2)] {
        for a in lists[i].iter().take(2) {
            for b in lists[k].iter().take(2) {
                let key = (a.1.min(b.1), a.1.max(b.1));
                if a.1 == b.1 || done.contains(&key) {
                    continue;
                }
                done.push(key);
                best = merge(best, ev.ctx.pair(a.1, b.1, Provenance::CaseII));
            }
        }
    }
    best
}

/// Placements with at most two bounded sides on an `nc × nr` grid.
fn small_descs(nc: usize, nr: usize) -> Vec<Desc> {
    let (nc, nr) = (nc as u16, nr as u16);
    let mut v = vec![Desc::FREE];
    for c in 0..nc {
        v.push(Desc { xl: Some(c), ..Desc::FREE });
        v.push(Desc { xh: Some(c), ..Desc::FREE });
        for d in c..nc {
            v.push(Desc { xl: Some(c), xh: Some(d), ..Desc::FREE });
        }
        for r in 0..nr {
            v.push(Desc { xl: Some(c), yl: Some(r), ..Desc::FREE });
            v.push(Desc { xl: Some(c), yh: Some(r), ..Desc::FREE });
            v.push(Desc { xh: Some(c), yl: Some(r), ..Desc::FREE });
            v.push(Desc { xh: Some(c), yh: Some(r), ..Desc::FREE });
        }
    }
    for r in 0..nr {
        v.push(Desc { yl: Some(r), ..Desc::FREE });
        v.push(Desc { yh: Some(r), ..Desc::FREE });
        for s in r..nr {
            v.push(Desc { yl: Some(r), yh: Some(s), ..Desc::FREE });
        }
    }
    v
}

/// Half-planes bounded by one grid line, each given as a one-sided placement.
fn half_planes(nc: usize, nr: usize) -> Vec<Desc> {
    let mut v = Vec::new();
    for c in 0..nc as u16 {
        v.push(Desc { xl: Some(c), ..Desc::FREE });
        v.push(Desc { xh: Some(c), ..Desc::FREE });
    }
    for r in 0..nr as u16 {
        v.push(Desc { yl: Some(r), ..Desc::FREE });
        v.push(Desc { yh: Some(r), ..Desc::FREE });
    }
    v
}

/// The three share a point and show all eight sides. Guess one rectangle
/// exactly, the sides of a rectangle with at most two sides, and the one side
/// of the last rectangle that can touch the second's exposed boundary.
pub(crate) fn case3(ctx: &Ctx) -> Option<Cand> {
    let (nc, nr) = (ctx.grid.ncols(), ctx.grid.nrows());
    let firsts = small_descs(nc, nr);
    let mut thirds: Vec<Option<Desc>> = vec![None];
    thirds.extend(half_planes(nc, nr).into_iter().map(Some));
    (0..ctx.n() as u32)
        .into_par_iter()
        .map_init(
            || Evaluator::new(ctx),
            |ev, b| {
                let d2 = desc_of(ctx, &ctx.rects[b as usize]);
                let mut best = None;
                let mut tried: HashSet<u32> = HashSet::new();
                for d1 in &firsts {
                    if !GuessConfig::new([*d1, d2, Desc::FREE]).separated() {
                        continue;
                    }
                    for h in &thirds {
                        let mut cfg = GuessConfig::new([*d1, d2, h.unwrap_or(Desc::FREE)]);
                        if h.is_none() {
                            cfg.absent = 1 << 2;
                        } else if !cfg.separated() {
                            continue;
                        }
                        Stats::add(&ctx.stats.guesses, 1);
                        let Some(boxes) = ev.regions(&cfg, h.is_some()) else { continue };
                        let q = boxes[0].unwrap_or(ANY);
                        let Some((_, a)) = ctx.po.eidx.best(&q, &[b]) else { continue };
                        if tried.insert(a) {
                            best = merge(best, ctx.pair(a, b, Provenance::CaseIII));
                        }
                    }
                }
                best
            },
        )
        .reduce(|| None, merge)
}
