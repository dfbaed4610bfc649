//! Implicitizing the twisted cubic t ↦ (t, t², t³) by elimination.

use crcheck::ideal::Ideal;
use crcheck::order::MonomialOrder;
use crcheck::parse::parse_polynomial;
use crcheck::poly::Coeff;
use crcheck::ring::RingContext;

fn main() -> crcheck::error::Result<()> {
    let ring = RingContext::plain(&["t", "x", "y", "z"])?;
    let gens = ["x - t", "y - t^2", "z - t^3"]
        .iter()
        .map(|s| parse_polynomial(&ring, s))
        .collect::<Result<Vec<_>, _>>()?;
    let i = Ideal::new(&ring, gens, MonomialOrder::GrevLex)?;
    let t = ring.require("t")?;
    let cubic = i.eliminate(&[t])?;
    println!("implicit equations:");
    for g in cubic.generators() {
        println!("  {g}");
    }
    println!("dimension {}", cubic.dimension()?);

    for k in -3..=3 {
        let c = Coeff::from(k);
        let pt = [c.clone(), c.pow(2), c.pow(3)];
        let ok = cubic
            .generators()
            .iter()
            .all(|g| g.evaluate(&pt).map(|v| v == Coeff::from(0)).unwrap_or(false));
        println!("({}, {}, {}) on the cubic: {ok}", pt[0], pt[1], pt[2]);
    }
    Ok(())
}
