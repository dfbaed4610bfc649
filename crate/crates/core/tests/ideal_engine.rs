use crcheck::discs::parametric_loci;
use crcheck::fixtures;
use crcheck::groebner::{groebner_basis, s_polynomial, Budget};
use crcheck::ideal::{ideal, Ideal};
use crcheck::order::{BaseOrder, MonomialOrder};
use crcheck::parametric::family_intersection_locus;
use crcheck::parse::parse_polynomial;
use crcheck::poly::Polynomial;
use crcheck::ring::{Ring, RingContext};

fn polys(ring: &Ring, src: &[&str]) -> Vec<Polynomial> {
    src.iter().map(|s| parse_polynomial(ring, s).unwrap()).collect()
}

#[test]
fn lex_and_grevlex_describe_the_same_ideal() {
    let r = RingContext::plain(&["x", "y", "z"]).unwrap();
    let g = polys(&r, &["x*y - z^2", "y^2 - x*z", "x^2*y - 1"]);
    let lex = Ideal::new(&r, g.clone(), MonomialOrder::Lex).unwrap();
    let grl = Ideal::new(&r, g, MonomialOrder::GrevLex).unwrap();
    assert!(lex.same_ideal(&grl).unwrap());
    assert_eq!(lex.dimension().unwrap(), grl.dimension().unwrap());
}

#[test]
fn basis_is_closed_under_s_pairs() {
    let r = RingContext::plain(&["x", "y"]).unwrap();
    let g = polys(&r, &["x^3 - 2*x*y", "x^2*y - 2*y^2 + x"]);
    let order = MonomialOrder::GrevLex;
    let gb = groebner_basis(&r, &g, &order, &Budget::default()).unwrap();
    // the classic example: basis {x^2, x*y, y^2 - x/2}
    let expect = ideal(&r, polys(&r, &["x^2", "x*y", "y^2 - 1/2*x"])).unwrap();
    let got = ideal(&r, gb.polynomials().to_vec()).unwrap();
    assert!(got.same_ideal(&expect).unwrap());
    for f in gb.polynomials() {
        for h in gb.polynomials() {
            let s = s_polynomial(f, h, &order).unwrap();
            assert!(gb.normal_form(&s).unwrap().is_zero());
        }
    }
}

#[test]
fn elimination_projects_the_circle() {
    let r = RingContext::plain(&["t", "x", "y"]).unwrap();
    // x = (1 - t^2)/(1 + t^2), y = 2t/(1 + t^2)
    let i = ideal(&r, polys(&r, &["x*(1 + t^2) - 1 + t^2", "y*(1 + t^2) - 2*t"])).unwrap();
    let e = i.eliminate(&[r.require("t").unwrap()]).unwrap();
    let circle = parse_polynomial(e.ring(), "x^2 + y^2 - 1").unwrap();
    assert!(e.contains(&circle).unwrap());
    assert_eq!(e.dimension().unwrap(), 1);
}

#[test]
fn budget_is_enforced() {
    let r = RingContext::plain(&["x", "y", "z"]).unwrap();
    let g = polys(&r, &["x^3 - y*z^2 + 1", "y^3 - x*z + 2", "z^3 - x^2*y - 3"]);
    let tight = Budget { max_pairs: 2, max_degree: 64 };
    assert!(groebner_basis(&r, &g, &MonomialOrder::GrevLex, &tight).is_err());
}

#[test]
fn family_locus_matches_the_disc_b_ideal() {
    for m in [fixtures::levi_flat(), fixtures::sphere(), fixtures::heisenberg()] {
        let loci = parametric_loci(&m).unwrap();
        let dr = &loci.ring;
        let members: Vec<Polynomial> = m
            .defining()
            .iter()
            .map(|p| {
                let zs: Vec<String> = (1..=m.n()).map(|j| format!("z{j}")).collect();
                let bindings: Vec<_> = (0..m.n())
                    .map(|j| (crcheck::ring::Var(j), Polynomial::named(&dr.ring, &zs[j])))
                    .chain((0..m.n()).map(|j| {
                        (crcheck::ring::Var(m.n() + j), Polynomial::named(&dr.ring, &format!("wb{}", j + 1)))
                    }))
                    .collect();
                p.substitute_into(&dr.ring, &bindings).unwrap()
            })
            .collect();
        let fibre: Vec<_> = dr.wb.iter().rev().copied().collect();
        let locus = family_intersection_locus(
            &dr.ring,
            loci.a.generators(),
            &fibre,
            &members,
            BaseOrder::GrevLex,
            &Budget::default(),
        )
        .unwrap();
        let b = loci.b.map_into(locus.ideal.ring(), MonomialOrder::GrevLex).unwrap();
        assert!(b.same_ideal(&locus.ideal).unwrap(), "{}", m.name());
    }
}
