use num_traits::Signed;
use proptest::prelude::*;
use rand::Rng;
use tricover::gen::rng;
use tricover::geom::{dist_linf, int, rat, PointD};
use tricover::kcenter::*;
use tricover::oracles::{brute_discrete_kcenter, OracleBudget};
use tricover::Rational;

fn random_points(seed: u64, n: usize, side: i64) -> Vec<PointD> {
    let mut r = rng(seed);
    (0..n).map(|_| PointD::from_ints(&[r.gen_range(0..=side), r.gen_range(0..=side)])).collect()
}

fn brute(p: &[PointD]) -> Rational {
    brute_discrete_kcenter(p, 3.min(p.len()), Metric::Linf, &OracleBudget::default()).unwrap().value
}

#[test]
fn optimizer_matches_brute_force() {
    for seed in 0..80 {
        let p = random_points(seed, 3 + seed as usize % 23, 10 + seed as i64 * 3);
        let want = brute(&p);
        for s in [RadiusSearch::SortedMatrix, RadiusSearch::SortAll] {
            let got = rect_d3c_optimize(&p, None, s).unwrap();
            assert_eq!(got.value, want, "seed {seed} {s:?}");
            assert!(got.centers.len() <= 3);
            assert!(p.iter().all(|q| got.centers.iter().any(|&c| dist_linf(q, &p[c]) <= got.value)));
        }
    }
}

#[test]
fn optimum_is_a_coordinate_difference() {
    for seed in 0..30 {
        let p = random_points(500 + seed, 12, 40);
        let r = rect_d3c_optimize(&p, None, RadiusSearch::SortedMatrix).unwrap().value;
        let diffs = p.iter().flat_map(|a| p.iter().flat_map(move |b| (0..2).map(move |k| (&a.coords[k] - &b.coords[k]).abs())));
        assert!(diffs.into_iter().any(|d| d == r), "seed {seed}");
    }
}

#[test]
fn decider_monotone_on_ladders() {
    for seed in 0..30 {
        let p = random_points(900 + seed, 15, 50);
        let opt = brute(&p);
        let mut prev = false;
        for step in 0..10 {
            let r = &opt * rat(step, 5);
            let yes = rect_d3c_decide(&p, None, &r).unwrap().is_some();
            assert!(!prev || yes, "seed {seed} step {step}");
            assert_eq!(yes, r >= opt, "seed {seed} step {step}");
            prev = yes;
        }
    }
}

#[test]
fn separate_supply() {
    let demand = vec![PointD::from_ints(&[0, 0]), PointD::from_ints(&[10, 0]), PointD::from_ints(&[20, 0])];
    let supply = vec![PointD::from_ints(&[1, 1]), PointD::from_ints(&[11, 0]), PointD::from_ints(&[18, 0]), PointD::from_ints(&[100, 0])];
    let s = rect_d3c_optimize(&demand, Some(&supply), RadiusSearch::SortedMatrix).unwrap();
    assert_eq!(s.value, int(2));
    assert_eq!(s.centers, vec![0, 1, 2]);
    assert!(rect_d3c_decide(&demand, Some(&supply), &int(1)).unwrap().is_none());
}

#[test]
fn rejects_wrong_dimension() {
    let p = vec![PointD::from_ints(&[0, 0, 0])];
    assert!(rect_d3c_optimize(&p, None, RadiusSearch::SortedMatrix).is_err());
}

#[test]
fn matrix_decider_matches_brute_force() {
    for seed in 0..40 {
        let p = random_points(1300 + seed, 8, 20);
        for metric in [Metric::Linf, Metric::L2] {
            let opt = brute_discrete_kcenter(&p, 2, metric, &OracleBudget::default()).unwrap().value;
            assert!(d2c_matrix_decide(&p, &opt, metric));
            if opt > int(0) {
                assert!(!d2c_matrix_decide(&p, &(&opt - rat(1, 2)), metric));
            }
        }
    }
}

#[test]
fn euclid_brute_matches_oracle() {
    let p = random_points(7, 9, 30);
    assert_eq!(euclid_dkc_brute(&p, 2).unwrap().value, brute_discrete_kcenter(&p, 2, Metric::L2, &OracleBudget::default()).unwrap().value);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn optimizer_prop(seed in any::<u64>(), n in 1usize..20, side in 0i64..30) {
        let p = random_points(seed, n, side);
        let got = rect_d3c_optimize(&p, None, RadiusSearch::SortedMatrix).unwrap();
        prop_assert_eq!(got.value, brute(&p));
    }
}
