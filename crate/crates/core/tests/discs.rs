use crcheck::discs::{
    containment_check, disc_verdict, extract_points, fixed_loci, parametric_loci, sample_tuples, ContainmentStatus,
    DiscSearch, DiscVerdict,
};
use crcheck::fixtures;
use crcheck::manifold::{from_strings, Point, RealAlgebraicSubmanifold};
use crcheck::order::BaseOrder;
use crcheck::parse::parse_scalar;

fn pt(v: &[&str]) -> Point {
    v.iter().map(|s| parse_scalar(s).unwrap()).collect()
}

fn search(tuples: Vec<Vec<Point>>, generic: bool) -> DiscSearch {
    DiscSearch { tuples, generic, sample_budget: 4 }
}

/// Points of `C_a` must lie on `M`.
fn assert_points_on(m: &RealAlgebraicSubmanifold, points: &[Point]) {
    for p in points {
        assert!(m.contains(p).unwrap(), "{}: {p:?}", m.name());
    }
}

#[test]
fn cylinder_contains_vertical_discs() {
    // |z2| = 1: every z1-line is a disc
    let m = from_strings("cylinder", 2, &["z2*zb2 - 1"]).unwrap();
    let tuples = vec![vec![pt(&["0", "1"])], vec![pt(&["2+I", "3/5+4/5*I"])]];
    let r = disc_verdict(&m, &search(tuples, true)).unwrap();
    assert_eq!(r.verdict, DiscVerdict::DiscsFound);
    for t in &r.tuples {
        assert_eq!(t.dimension, 1);
        let c = t.containment.as_ref().unwrap();
        assert_eq!(c.status, ContainmentStatus::Passed);
        assert!(!c.points.is_empty());
        assert_points_on(&m, &c.points);
    }
    assert_eq!(r.generic.unwrap().dimension, 1);
}

#[test]
fn extracted_points_solve_the_ideal() {
    let m = fixtures::levi_flat();
    let loci = fixed_loci(&m, &[pt(&["1", "3*I"])]).unwrap();
    let points = extract_points(&loci.c, 5).unwrap();
    assert_eq!(points.len(), 5);
    for p in &points {
        for g in loci.c.generators() {
            assert!(g.evaluate(p).unwrap() == 0.into());
        }
    }
    assert_points_on(&m, &points);
    let report = containment_check(&m, &loci.c, 5).unwrap();
    assert_eq!(report.status, ContainmentStatus::Passed);
}

#[test]
fn fixed_tuples_must_lie_on_m() {
    assert!(fixed_loci(&fixtures::sphere(), &[pt(&["1", "1"])]).is_err());
}

#[test]
fn parametric_specializations_agree_with_fixed_tuples() {
    for (m, pts) in [
        (fixtures::sphere(), fixtures::sphere_points(12)),
        (fixtures::heisenberg(), fixtures::heisenberg_points(12)),
        (fixtures::levi_flat(), fixtures::levi_flat_points(12)),
    ] {
        let loci = parametric_loci(&m).unwrap();
        let mut checked = 0;
        for p in pts {
            let tuple = vec![p];
            if loci.excluded(&tuple).unwrap() {
                continue;
            }
            let fixed = fixed_loci(&m, &tuple).unwrap();
            assert!(loci.specialize_b(&tuple).unwrap().same_ideal(&fixed.b).unwrap(), "{}", m.name());
            assert!(loci.specialize_c(&tuple).unwrap().same_ideal(&fixed.c).unwrap(), "{}", m.name());
            checked += 1;
        }
        assert!(checked >= 6, "{}: {checked}", m.name());
    }
}

#[test]
fn three_dimensional_examples() {
    let s5 = from_strings("S5", 3, &["z1*zb1 + z2*zb2 + z3*zb3 - 1"]).unwrap();
    let pts = vec![pt(&["1", "0", "0"]), pt(&["0", "1", "0"]), pt(&["0", "0", "I"]), pt(&["3/5", "0", "4/5"])];
    let tuples = sample_tuples(&pts, 2, 4, 7);
    let r = disc_verdict(&s5, &search(tuples, false)).unwrap();
    assert_eq!(r.k, 2);
    assert_eq!(r.verdict, DiscVerdict::DiscFreeSampled);

    let flat = from_strings("flat3", 3, &["z3 + zb3"]).unwrap();
    let pts = vec![pt(&["0", "0", "0"]), pt(&["1", "I", "0"]), pt(&["2", "0", "I"])];
    let tuples = sample_tuples(&pts, 2, 3, 7);
    let r = disc_verdict(&flat, &search(tuples, false)).unwrap();
    assert_eq!(r.verdict, DiscVerdict::DiscsFound);
    for t in &r.tuples {
        if let Some(c) = &t.containment {
            assert_points_on(&flat, &c.points);
        }
    }
}

#[test]
fn totally_real_plane_has_no_discs() {
    let m = fixtures::real_plane();
    let tuples = fixtures::real_plane_points(5).into_iter().map(|p| vec![p]).collect();
    let r = disc_verdict(&m, &search(tuples, true)).unwrap();
    assert_eq!(r.verdict, DiscVerdict::DiscFreeGeneric);
}

#[test]
fn generic_mode_on_the_heisenberg_group() {
    let g = parametric_loci(&fixtures::heisenberg())
        .unwrap()
        .generic_dimension(BaseOrder::GrevLex)
        .unwrap();
    assert_eq!(g.dimension, 0);
    assert!(g.denominators.iter().all(|d| d.contains("a1")));
}

#[test]
fn tuple_sampling_is_seeded() {
    let pts = fixtures::sphere_points(6);
    assert_eq!(sample_tuples(&pts, 2, 5, 3), sample_tuples(&pts, 2, 5, 3));
    assert_eq!(sample_tuples(&pts, 1, 100, 3).len(), 6);
}
