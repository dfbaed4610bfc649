//! Segre varieties `Q_w` and iterated Segre set dimensions.

use crcheck::fixtures;
use crcheck::manifold::format_point;
use crcheck::parse::parse_scalar;
use crcheck::segre::{segre_set_dimension, IteratedComplexification};

fn main() -> crcheck::error::Result<()> {
    let pts = |v: &[&str]| v.iter().map(|s| parse_scalar(s)).collect::<Result<Vec<_>, _>>();
    for (m, w) in [
        (fixtures::sphere(), pts(&["3/5", "4/5*I"])?),
        (fixtures::heisenberg(), pts(&["1", "1+I"])?),
        (fixtures::levi_flat(), pts(&["2", "I"])?),
        (fixtures::real_plane(), pts(&["1", "-2"])?),
    ] {
        let q = m.segre_variety(&w)?;
        println!("{} at {}:", m.name(), format_point(&w));
        println!("  Q_w = <{}>, contains w: {}", q.ideal.generator_strings().join(", "), q.contains(&w)?);
        let dims = (1..=2)
            .map(|s| segre_set_dimension(&m, &w, s))
            .collect::<Result<Vec<_>, _>>()?;
        println!("  dim N_1, dim N_2 = {dims:?}");
    }

    let it = IteratedComplexification::new(&fixtures::sphere(), 3)?;
    println!("third iterated complexification of the sphere:");
    for g in it.ideal().generators() {
        println!("  {g}");
    }
    Ok(())
}
