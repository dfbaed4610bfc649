//! Genericity and minimality of the standard examples.

use crcheck::fixtures;
use crcheck::minimality::{condition1, default_cap, genericity, minimality};

fn main() -> crcheck::error::Result<()> {
    let cases = [
        (fixtures::sphere(), fixtures::sphere_points(3)),
        (fixtures::heisenberg(), fixtures::heisenberg_points(3)),
        (fixtures::levi_flat(), fixtures::levi_flat_points(3)),
        (fixtures::real_plane(), fixtures::real_plane_points(3)),
        (fixtures::complex_line(), vec![vec![1.into(), 0.into()]]),
    ];
    for (m, points) in cases {
        let g = genericity(&m)?;
        println!("{}: generic = {}", m.name(), g.generic);
        let r = minimality(&m, &points[0], default_cap(m.n()))?;
        println!("  Segre dimensions {:?} -> {:?}", r.dimensions, r.verdict);
        let c1 = condition1(&m, &points, default_cap(m.n()))?;
        println!("  condition 1: {:?}", c1.status);
    }
    Ok(())
}
