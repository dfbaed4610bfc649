//! One line per acceptance criterion; exits nonzero if any fails.

use std::time::{Duration, Instant};

use crcheck::discs::{
    disc_verdict, fixed_loci, parametric_loci, sample_tuples, ContainmentStatus, DiscReport, DiscSearch, DiscVerdict,
};
use crcheck::fixtures;
use crcheck::groebner::{groebner_basis, s_polynomial, Budget};
use crcheck::ideal::Ideal;
use crcheck::manifold::{from_strings, Point, RealAlgebraicSubmanifold};
use crcheck::minimality::{default_cap, minimality, Minimality};
use crcheck::monomial::Monomial;
use crcheck::order::MonomialOrder;
use crcheck::parse::parse_polynomial;
use crcheck::poly::{Coeff, Polynomial};
use crcheck::ring::{Ring, RingContext};
use crcheck::theorem::{theorem, TheoremVerdict};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small_rational(r: &mut ChaCha8Rng) -> Coeff {
    Coeff::ratio(r.gen_range(-9..=9), r.gen_range(1..=5))
}

fn small_coeff(r: &mut ChaCha8Rng) -> Coeff {
    let re = small_rational(r);
    if r.gen_bool(0.5) {
        &re + &(&small_rational(r) * &Coeff::i())
    } else {
        re
    }
}

fn random_poly(r: &mut ChaCha8Rng, ring: &Ring, max_deg: u32, max_terms: usize) -> Polynomial {
    let nv = ring.nvars();
    let terms = (0..r.gen_range(1..=max_terms))
        .map(|_| {
            let mut e = vec![0u32; nv];
            let deg = r.gen_range(0..=max_deg);
            for _ in 0..deg {
                e[r.gen_range(0..nv)] += 1;
            }
            let mut c = small_coeff(r);
            if c.is_zero() {
                c = Coeff::from(1);
            }
            (Monomial::from_exponents(e), c)
        })
        .collect::<Vec<_>>();
    Polynomial::from_terms(ring, terms)
}

fn polys(ring: &Ring, src: &[&str]) -> Vec<Polynomial> {
    src.iter().map(|s| parse_polynomial(ring, s).unwrap()).collect()
}

fn groebner_soundness() -> Outcome {
    let start = Instant::now();
    let mut r = rng(1);
    let names = ["x", "y", "z"];
    let mut ideals = 0;
    let mut pairs = 0;
    let mut proper = 0;
    while ideals < 200 {
        let nv = r.gen_range(1..=3);
        let ring = RingContext::plain(&names[..nv]).unwrap();
        let gens: Vec<Polynomial> = (0..r.gen_range(1..=3)).map(|_| random_poly(&mut r, &ring, 3, 4)).collect();
        let order = if ideals % 2 == 0 { MonomialOrder::GrevLex } else { MonomialOrder::Lex };
        let gb = match groebner_basis(&ring, &gens, &order, &Budget::default()) {
            Ok(gb) => gb,
            Err(e) => return Err(format!("ideal {ideals}: {e}")),
        };
        for g in &gens {
            if !gb.normal_form(g).unwrap().is_zero() {
                return Err(format!("ideal {ideals}: generator {g} does not reduce to 0"));
            }
        }
        proper += !gb.is_unit() as usize;
        let b = gb.polynomials();
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                let s = s_polynomial(&b[i], &b[j], &order).unwrap();
                if !gb.normal_form(&s).unwrap().is_zero() {
                    return Err(format!("ideal {ideals}: S({}, {}) does not reduce to 0", b[i], b[j]));
                }
                pairs += 1;
            }
        }
        ideals += 1;
    }
    let t = start.elapsed();
    if t > Duration::from_secs(60) {
        return Err(format!("took {t:?}"));
    }
    Ok(format!("{ideals} ideals ({proper} proper), {pairs} S-pairs, {t:.2?}"))
}

fn elimination_oracle() -> Outcome {
    let start = Instant::now();
    let ring = RingContext::plain(&["x", "y", "z"]).unwrap();
    let i = Ideal::new(&ring, polys(&ring, &["y - x^2", "z - x^3"]), MonomialOrder::GrevLex).unwrap();
    let e = i.eliminate(&[ring.require("x").unwrap()]).unwrap();
    let expect = parse_polynomial(e.ring(), "y^3 - z^2").unwrap();
    let gens = e.generators();
    if gens.len() != 1 {
        return Err(format!("expected one generator, got {:?}", e.generator_strings()));
    }
    let ratio = gens[0].terms().next().map(|(m, c)| (m.clone(), c.clone())).unwrap();
    let scale = &expect.coefficient(&ratio.0) / &ratio.1;
    if gens[0].scale(&scale) != expect {
        return Err(format!("got {}", gens[0]));
    }
    let mut r = rng(2);
    for _ in 0..100 {
        let t = small_coeff(&mut r);
        let v = gens[0].evaluate(&[t.pow(2), t.pow(3)]).unwrap();
        if !v.is_zero() {
            return Err(format!("point at t = {t} gives {v}"));
        }
    }
    let t = start.elapsed();
    if t > Duration::from_secs(1) {
        return Err(format!("took {t:?}"));
    }
    Ok(format!("<{}>, 100 points, {t:.2?}", gens[0]))
}

fn dimension_oracle() -> Outcome {
    let mut checked = Vec::new();
    let mut check = |label: String, ring: &Ring, gens: &[&str], expect: i64| -> Result<(), String> {
        let i = if gens.is_empty() {
            Ideal::zero(ring, MonomialOrder::GrevLex)
        } else {
            Ideal::new(ring, polys(ring, gens), MonomialOrder::GrevLex).unwrap()
        };
        let d = i.dimension().map_err(|e| e.to_string())?;
        if d != expect {
            return Err(format!("{label}: dimension {d}, expected {expect}"));
        }
        checked.push(format!("{label}={d}"));
        Ok(())
    };
    let names = ["x", "y", "z", "w"];
    for n in 1..=4 {
        check(format!("<0> in {n}"), &RingContext::plain(&names[..n]).unwrap(), &[], n as i64)?;
    }
    let xy = RingContext::plain(&["x", "y"]).unwrap();
    let xyz = RingContext::plain(&["x", "y", "z"]).unwrap();
    check("<x>".into(), &xy, &["x"], 1)?;
    check("<1>".into(), &xy, &["1"], -1)?;
    check("cubic".into(), &xyz, &["y - x^2", "z - x^3"], 1)?;
    check("<x^2-1,y>".into(), &xy, &["x^2 - 1", "y"], 0)?;
    Ok(checked.join(" "))
}

fn singles(points: Vec<Point>) -> Vec<Vec<Point>> {
    points.into_iter().map(|p| vec![p]).collect()
}

/// Points extracted from positive-dimensional `C_a`, with their manifold.
struct Extracted {
    points: Vec<(String, Point, bool)>,
    unchecked: usize,
}

impl Extracted {
    fn record(&mut self, m: &RealAlgebraicSubmanifold, report: &DiscReport) {
        for t in &report.tuples {
            if t.dimension < 1 {
                continue;
            }
            match &t.containment {
                Some(c) if c.status != ContainmentStatus::Unchecked => {
                    for p in &c.points {
                        self.points.push((m.name().to_string(), p.clone(), m.contains(p).unwrap()));
                    }
                }
                _ => self.unchecked += 1,
            }
        }
    }
}

fn disc_fixtures(extracted: &mut Extracted) -> Outcome {
    let mut lines = Vec::new();
    let cases = [
        (fixtures::levi_flat(), fixtures::levi_flat_points(20), 1),
        (fixtures::sphere(), fixtures::sphere_points(20), 0),
        (fixtures::heisenberg(), fixtures::heisenberg_points(20), 0),
    ];
    for (m, points, expect) in cases {
        let start = Instant::now();
        let search = DiscSearch { tuples: singles(points), generic: true, sample_budget: 3 };
        let r = disc_verdict(&m, &search).map_err(|e| format!("{}: {e}", m.name()))?;
        extracted.record(&m, &r);
        let t = start.elapsed();
        let bad: Vec<usize> = (0..r.tuples.len()).filter(|&i| r.tuples[i].dimension != expect).collect();
        if r.tuples.len() < 20 || !bad.is_empty() {
            return Err(format!("{}: tuples {bad:?} have dim C_a != {expect}", m.name()));
        }
        let generic = r.generic.as_ref().map(|g| g.dimension);
        let want = if expect == 1 { DiscVerdict::DiscsFound } else { DiscVerdict::DiscFreeGeneric };
        if r.verdict != want || (expect == 0 && generic != Some(0)) {
            return Err(format!("{}: verdict {:?}, generic dim {generic:?}", m.name(), r.verdict));
        }
        if t > Duration::from_secs(30) {
            return Err(format!("{}: took {t:?}", m.name()));
        }
        lines.push(format!("{} {:?} ({} tuples, {t:.2?})", m.name(), r.verdict, r.tuples.len()));
    }
    Ok(lines.join("; "))
}

fn minimality_fixtures() -> Outcome {
    let z = |a: i64, b: i64| vec![Coeff::from(a), Coeff::from(b)];
    let cases = [
        (fixtures::sphere(), z(1, 0), vec![1, 2], Minimality::Minimal),
        (fixtures::real_plane(), z(0, 0), vec![0, 0], Minimality::NotMinimal),
        (fixtures::levi_flat(), z(0, 0), vec![1, 1], Minimality::NotMinimal),
        (fixtures::heisenberg(), z(0, 0), vec![1, 2], Minimality::Minimal),
    ];
    let mut lines = Vec::new();
    for (m, p, dims, verdict) in cases {
        let r = minimality(&m, &p, default_cap(m.n())).map_err(|e| e.to_string())?;
        if r.dimensions != dims || r.verdict != verdict {
            return Err(format!("{}: {:?} {:?}", m.name(), r.dimensions, r.verdict));
        }
        lines.push(format!("{} {:?}", m.name(), r.dimensions));
    }
    Ok(lines.join(", "))
}

fn theorem_matrix() -> Outcome {
    let cases = [
        (fixtures::heisenberg(), fixtures::heisenberg_points(4), fixtures::sphere(), fixtures::sphere_points(20), TheoremVerdict::Applies, None),
        (fixtures::sphere(), fixtures::sphere_points(4), fixtures::levi_flat(), fixtures::levi_flat_points(20), TheoremVerdict::DoesNotApply, Some("condition 2")),
        (fixtures::real_plane(), fixtures::real_plane_points(4), fixtures::sphere(), fixtures::sphere_points(20), TheoremVerdict::DoesNotApply, Some("condition 1")),
    ];
    let mut lines = Vec::new();
    for (m, pts, target, tpts, verdict, reason) in cases {
        let search = DiscSearch { tuples: singles(tpts), generic: true, sample_budget: 2 };
        let r = theorem(&m, &pts, &target, &search, default_cap(m.n())).map_err(|e| e.to_string())?;
        let reason_ok = match reason {
            None => r.reasons.is_empty(),
            Some(tag) => r.reasons.len() == 1 && r.reasons[0].starts_with(tag),
        };
        if r.verdict != verdict || !reason_ok {
            return Err(format!("({}, {}): {:?} {:?}", m.name(), target.name(), r.verdict, r.reasons));
        }
        lines.push(format!("({}, {}) {:?}", m.name(), target.name(), r.verdict));
    }
    Ok(lines.join(", "))
}

fn more_disc_sources(extracted: &mut Extracted) -> Result<(), String> {
    let pt = |v: &[&str]| -> Point { v.iter().map(|s| crcheck::parse::parse_scalar(s).unwrap()).collect() };
    let cylinder = from_strings("cylinder", 2, &["z2*zb2 - 1"]).unwrap();
    let tuples = singles(vec![pt(&["0", "1"]), pt(&["2+I", "3/5+4/5*I"]), pt(&["-1/2", "-I"])]);
    let r = disc_verdict(&cylinder, &DiscSearch { tuples, generic: false, sample_budget: 5 }).map_err(|e| e.to_string())?;
    extracted.record(&cylinder, &r);

    let flat3 = from_strings("flat3", 3, &["z3 + zb3"]).unwrap();
    let pts = vec![pt(&["0", "0", "0"]), pt(&["1", "I", "0"]), pt(&["2", "0", "I"]), pt(&["1/2", "-1", "-2*I"])];
    let tuples = sample_tuples(&pts, 2, 4, 11);
    let r = disc_verdict(&flat3, &DiscSearch { tuples, generic: false, sample_budget: 5 }).map_err(|e| e.to_string())?;
    extracted.record(&flat3, &r);
    Ok(())
}

fn extracted_points(extracted: &mut Extracted) -> Outcome {
    more_disc_sources(extracted)?;
    let failures: Vec<String> = extracted
        .points
        .iter()
        .filter(|(_, _, ok)| !ok)
        .map(|(m, p, _)| format!("{m}: {p:?}"))
        .collect();
    if !failures.is_empty() {
        return Err(format!("{} points off M': {}", failures.len(), failures.join("; ")));
    }
    if extracted.points.is_empty() {
        return Err("no points extracted".into());
    }
    Ok(format!(
        "{} points on M', {} positive-dimensional C_a left unchecked",
        extracted.points.len(),
        extracted.unchecked
    ))
}

fn random_point(r: &mut ChaCha8Rng, which: usize) -> Point {
    match which {
        // sphere: a rotated rational point of the unit circle
        0 => {
            let t = small_rational(r);
            let den = &Coeff::from(1) + &t.pow(2);
            let x = &(&Coeff::from(2) * &t) / &den;
            let y = &(&Coeff::from(1) - &t.pow(2)) / &den;
            let units = [Coeff::from(1), Coeff::i(), Coeff::new(Coeff::ratio(3, 5).re().clone(), Coeff::ratio(4, 5).re().clone())];
            let u = &units[r.gen_range(0..3)];
            let v = &units[r.gen_range(0..3)];
            vec![&x * u, &y * v]
        }
        // Heisenberg: (z1, |z1|² + i s)
        1 => {
            let z1 = small_coeff(r);
            let s = small_rational(r);
            let z2 = &Coeff::real(z1.norm_sqr()) + &(&s * &Coeff::i());
            vec![z1, z2]
        }
        // Levi-flat: (z1, i s)
        _ => vec![small_coeff(r), &small_rational(r) * &Coeff::i()],
    }
}

fn coherence() -> Outcome {
    let ms = [fixtures::sphere(), fixtures::heisenberg(), fixtures::levi_flat()];
    let loci: Vec<_> = ms.iter().map(|m| parametric_loci(m).unwrap()).collect();
    let mut r = rng(8);
    let (mut checked, mut skipped) = (0, 0);
    while checked < 50 {
        let which = checked % 3;
        let tuple = vec![random_point(&mut r, which)];
        let m = &ms[which];
        if !m.contains(&tuple[0]).unwrap() {
            return Err(format!("generator produced a point off {}", m.name()));
        }
        if loci[which].excluded(&tuple).unwrap() {
            skipped += 1;
            continue;
        }
        let fixed = fixed_loci(m, &tuple).map_err(|e| e.to_string())?;
        let b = loci[which].specialize_b(&tuple).unwrap();
        let c = loci[which].specialize_c(&tuple).unwrap();
        let same = |x: &Ideal, y: &Ideal| x.contains_ideal(y).unwrap() && y.contains_ideal(x).unwrap();
        if !same(&b, &fixed.b) || !same(&c, &fixed.c) {
            return Err(format!("{} at {:?}: B or C disagrees", m.name(), tuple[0]));
        }
        checked += 1;
    }
    Ok(format!("{checked} specializations, {skipped} on denominator loci skipped"))
}

fn conjugation_algebra() -> Outcome {
    let start = Instant::now();
    let ring = RingContext::manifold(2);
    let mut r = rng(9);
    for k in 0..500 {
        let p = random_poly(&mut r, &ring, 3, 5);
        let q = random_poly(&mut r, &ring, 3, 5);
        let bp = p.bar().unwrap();
        let bq = q.bar().unwrap();
        if bp.bar().unwrap() != p
            || (&p + &q).bar().unwrap() != &bp + &bq
            || (&p * &q).bar().unwrap() != &bp * &bq
            || Polynomial::one(&ring).bar().unwrap() != Polynomial::one(&ring)
        {
            return Err(format!("sample {k}: p = {p}, q = {q}"));
        }
    }
    let ms = [
        fixtures::sphere(),
        fixtures::heisenberg(),
        fixtures::levi_flat(),
        fixtures::real_plane(),
        fixtures::complex_line(),
    ];
    let mut fixed = 0;
    for m in &ms {
        for p in m.defining() {
            if p.bar().unwrap() != *p {
                return Err(format!("{}: {p} is not fixed", m.name()));
            }
            fixed += 1;
        }
    }
    let t = start.elapsed();
    if t > Duration::from_secs(5) {
        return Err(format!("took {t:?}"));
    }
    Ok(format!("500 pairs, {fixed} real fixtures fixed, {t:.2?}"))
}

fn main() {
    let mut extracted = Extracted { points: Vec::new(), unchecked: 0 };
    let results: Vec<(&str, Outcome)> = vec![
        ("groebner kernel soundness", groebner_soundness()),
        ("elimination oracle", elimination_oracle()),
        ("dimension oracle", dimension_oracle()),
        ("disc algorithm on fixtures", disc_fixtures(&mut extracted)),
        ("minimality fixtures", minimality_fixtures()),
        ("theorem verdict matrix", theorem_matrix()),
        ("extracted disc points lie on M'", extracted_points(&mut extracted)),
        ("parametric/fixed coherence", coherence()),
        ("conjugation algebra", conjugation_algebra()),
    ];
    let mut failed = 0;
    for (i, (name, outcome)) in results.iter().enumerate() {
        match outcome {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
