//! Searching for analytic discs at fixed tuples and at a generic tuple.

use crcheck::discs::{disc_verdict, fixed_loci, parametric_loci, DiscSearch};
use crcheck::fixtures;
use crcheck::order::BaseOrder;

fn main() -> crcheck::error::Result<()> {
    let levi = fixtures::levi_flat();
    let a = fixtures::levi_flat_points(2);
    let loci = fixed_loci(&levi, &a[1..2])?;
    println!("Levi-flat at a = {:?}", a[1]);
    println!("  A_a = <{}>", loci.a.generator_strings().join(", "));
    println!("  B_a = <{}>", loci.b.generator_strings().join(", "));
    println!("  C_a = <{}>, dim {}", loci.c.generator_strings().join(", "), loci.c.dimension()?);

    let sphere = fixtures::sphere();
    let p = parametric_loci(&sphere)?;
    let g = p.generic_dimension(BaseOrder::GrevLex)?;
    println!("sphere, generic a: B = <{}>", g.b_ideal.join(", "));
    println!("  dim C = {} off {:?}", g.dimension, g.denominators);

    for (m, points) in [
        (fixtures::sphere(), fixtures::sphere_points(6)),
        (fixtures::heisenberg(), fixtures::heisenberg_points(6)),
        (fixtures::levi_flat(), fixtures::levi_flat_points(6)),
    ] {
        let search = DiscSearch {
            tuples: points.into_iter().map(|p| vec![p]).collect(),
            generic: true,
            sample_budget: 3,
        };
        let r = disc_verdict(&m, &search)?;
        println!("{}: {:?}", m.name(), r.verdict);
    }
    Ok(())
}
