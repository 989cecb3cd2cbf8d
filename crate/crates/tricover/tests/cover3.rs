use proptest::prelude::*;
use tricover::cover3::*;
use tricover::gen::{random_rects, random_unit_squares, rng, Instance};
use tricover::geom::{covers_all, int, ExtRect, PointD};
use tricover::oracles::{brute_cover_k, OracleBudget};
use tricover::Error;

fn oracle(inst: &Instance, weighted: bool) -> Option<tricover::Rational> {
    brute_cover_k(&inst.points, &inst.rects, 3, weighted, &OracleBudget::default()).unwrap().map(|x| x.1)
}

fn check_sound(inst: &Instance, s: &Cover3Solution) {
    let chosen: Vec<ExtRect> = s.ids.iter().map(|&i| inst.rects.iter().find(|r| r.id == i).unwrap().clone()).collect();
    assert!(covers_all(&chosen, &inst.points).unwrap());
    let sum: tricover::Rational = chosen.iter().map(|r| r.weight_or_one()).sum();
    assert_eq!(sum, s.weight);
    assert!(s.ids[0] < s.ids[1] && s.ids[1] < s.ids[2]);
}

#[test]
fn weighted_rect_variants_match_oracle() {
    for seed in 0..60 {
        let inst = random_rects(&mut rng(seed), 5 + seed as usize % 30, true, 300);
        let want = oracle(&inst, true);
        for v in [Variant::Basic, Variant::WeightedRect, Variant::Oracle, Variant::Auto] {
            let got = solve(&inst.points, &inst.rects, v, None).unwrap();
            assert_eq!(got.as_ref().map(|s| s.weight.clone()), want, "seed {seed} {v}");
            if let Some(s) = &got {
                check_sound(&inst, s);
            }
        }
    }
}

#[test]
fn unweighted_feasibility_matches_oracle() {
    for seed in 0..60 {
        let inst = random_rects(&mut rng(1000 + seed), 5 + seed as usize % 30, false, 300);
        let want = oracle(&inst, false).is_some();
        for v in [Variant::Basic, Variant::Unweighted] {
            let got = solve(&inst.points, &inst.rects, v, None).unwrap();
            assert_eq!(got.is_some(), want, "seed {seed} {v}");
            if let Some(s) = &got {
                check_sound(&inst, s);
                assert_eq!(s.weight, int(3));
            }
        }
    }
}

#[test]
fn unit_square_variants_match_oracle() {
    for seed in 0..60 {
        let n = 5 + seed as usize % 30;
        let w = random_unit_squares(&mut rng(2000 + seed), n, true, 6);
        let want = oracle(&w, true);
        for v in [Variant::UnitW, Variant::Basic] {
            let got = solve(&w.points, &w.rects, v, None).unwrap();
            assert_eq!(got.map(|s| s.weight), want, "seed {seed} {v}");
        }
        let u = random_unit_squares(&mut rng(3000 + seed), n, false, 6);
        let want = oracle(&u, false).is_some();
        let got = solve(&u.points, &u.rects, Variant::UnitUnw, None).unwrap();
        assert_eq!(got.is_some(), want, "seed {seed} unit-unw");
    }
}

#[test]
fn grid_override_keeps_answers() {
    for seed in 0..20 {
        let inst = random_rects(&mut rng(4000 + seed), 25, true, 200);
        let want = oracle(&inst, true);
        for g in [1, 2, 3, 5] {
            let got = solve(&inst.points, &inst.rects, Variant::WeightedRect, Some(g)).unwrap();
            assert_eq!(got.map(|s| s.weight), want, "seed {seed} g {g}");
        }
    }
}

#[test]
fn deterministic_ties() {
    // Four identical unit-weight squares over one point: ids 0, 1, 2 win.
    let p = vec![PointD::from_ints(&[0, 0])];
    let r: Vec<ExtRect> = (0..4).rev().map(|i| ExtRect::closed2(int(0), int(1), int(0), int(1), Some(int(1)), i)).collect();
    for v in [Variant::Basic, Variant::WeightedRect, Variant::UnitW, Variant::Oracle] {
        let s = solve(&p, &r, v, None).unwrap().unwrap();
        assert_eq!(s.ids, [0, 1, 2], "{v}");
    }
    let inst = random_rects(&mut rng(77), 30, true, 100);
    let a = solve(&inst.points, &inst.rects, Variant::Basic, None).unwrap();
    let b = solve(&inst.points, &inst.rects, Variant::Basic, None).unwrap();
    assert_eq!(a, b);
}

#[test]
fn small_and_degenerate_inputs() {
    let p = vec![PointD::from_ints(&[0, 0])];
    let one = vec![ExtRect::closed2(int(0), int(1), int(0), int(1), Some(int(1)), 0)];
    assert_eq!(solve(&p, &one, Variant::Basic, None).unwrap(), None);
    let three: Vec<ExtRect> = (0..3).map(|i| ExtRect::closed2(int(5), int(6), int(5), int(6), Some(int(1)), i)).collect();
    assert_eq!(solve(&p, &three, Variant::WeightedRect, None).unwrap(), None);
    // No points: the three cheapest rectangles.
    let s = solve(&[], &three, Variant::Basic, None).unwrap().unwrap();
    assert_eq!(s.weight, int(3));
}

#[test]
fn input_errors() {
    let p = vec![PointD::from_ints(&[0, 0])];
    let big: Vec<ExtRect> = (0..3).map(|i| ExtRect::closed2(int(0), int(2), int(0), int(1), None, i)).collect();
    assert!(matches!(solve(&p, &big, Variant::UnitUnw, None), Err(Error::NotUnitSquare(_))));
    let weighted: Vec<ExtRect> = (0..3).map(|i| ExtRect::closed2(int(0), int(1), int(0), int(1), Some(int(2)), i)).collect();
    assert!(matches!(solve(&p, &weighted, Variant::Unweighted, None), Err(Error::WeightedInput)));
    let p3 = vec![PointD::from_ints(&[0, 0, 0])];
    assert!(matches!(solve(&p3, &weighted, Variant::Basic, None), Err(Error::DimensionMismatch { .. })));
    assert!("nope".parse::<Variant>().is_err());
    assert_eq!("unit_unweighted".parse::<Variant>().unwrap(), Variant::UnitUnw);
    assert_eq!("weighted_rectangles".parse::<Variant>().unwrap(), Variant::WeightedRect);
}

#[test]
fn default_grid_exponents() {
    assert_eq!(default_g(Variant::UnitUnw, 10000), 100);
    assert_eq!(default_g(Variant::Unweighted, 1000), 10);
    assert!(default_g(Variant::Basic, 1) >= 1);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn weighted_matches_oracle_prop(seed in any::<u64>(), n in 3usize..25, side in 4i64..60) {
        let inst = random_rects(&mut rng(seed), n, true, side);
        let want = oracle(&inst, true);
        let got = solve(&inst.points, &inst.rects, Variant::WeightedRect, None).unwrap();
        prop_assert_eq!(got.map(|s| s.weight), want);
    }

    #[test]
    fn unit_unweighted_matches_oracle_prop(seed in any::<u64>(), n in 3usize..25, side in 2i64..8) {
        let inst = random_unit_squares(&mut rng(seed), n, false, side);
        let want = oracle(&inst, false).is_some();
        let got = solve(&inst.points, &inst.rects, Variant::UnitUnw, None).unwrap();
        prop_assert_eq!(got.is_some(), want);
    }
}
