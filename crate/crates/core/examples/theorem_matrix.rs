//! Whether algebraicity of holomorphic maps `M → M′` follows, for every
//! pair of standard examples.

use crcheck::discs::DiscSearch;
use crcheck::fixtures;
use crcheck::manifold::{Point, RealAlgebraicSubmanifold};
use crcheck::minimality::default_cap;
use crcheck::theorem::theorem;

fn main() -> crcheck::error::Result<()> {
    let all: Vec<(RealAlgebraicSubmanifold, Vec<Point>)> = vec![
        (fixtures::sphere(), fixtures::sphere_points(4)),
        (fixtures::heisenberg(), fixtures::heisenberg_points(4)),
        (fixtures::levi_flat(), fixtures::levi_flat_points(4)),
        (fixtures::real_plane(), fixtures::real_plane_points(4)),
    ];
    print!("{:>12}", "M \\ M'");
    for (t, _) in &all {
        print!("{:>16}", t.name());
    }
    println!();
    for (m, pts) in &all {
        print!("{:>12}", m.name());
        for (t, tpts) in &all {
            let search = DiscSearch {
                tuples: tpts.iter().map(|p| vec![p.clone()]).collect(),
                generic: true,
                sample_budget: 2,
            };
            let r = theorem(m, pts, t, &search, default_cap(m.n()))?;
            print!("{:>16}", format!("{:?}", r.verdict));
        }
        println!();
    }
    Ok(())
}
