//! Reduced Gröbner bases, ideal membership and dimension.

use crcheck::ideal::Ideal;
use crcheck::order::MonomialOrder;
use crcheck::parse::parse_polynomial;
use crcheck::ring::RingContext;

fn main() -> crcheck::error::Result<()> {
    let ring = RingContext::plain(&["x", "y", "z"])?;
    let gens = ["x^2 + y^2 + z^2 - 1", "x - y", "z^2 - x"]
        .iter()
        .map(|s| parse_polynomial(&ring, s))
        .collect::<Result<Vec<_>, _>>()?;

    for order in [MonomialOrder::Lex, MonomialOrder::GrevLex] {
        let i = Ideal::new(&ring, gens.clone(), order.clone())?;
        let gb = i.groebner_basis()?;
        println!("{order:?} basis:");
        for g in gb.polynomials() {
            println!("  {g}");
        }
        println!("  dimension {}", gb.dimension());
    }

    let i = Ideal::new(&ring, gens, MonomialOrder::GrevLex)?;
    let f = parse_polynomial(&ring, "2*y^2 + y - 1")?;
    println!("{f} in I: {}", i.contains(&f)?);
    println!("normal form of x*y: {}", i.normal_form(&parse_polynomial(&ring, "x*y")?)?);

    let line = Ideal::new(&ring, vec![parse_polynomial(&ring, "x - y")?], MonomialOrder::GrevLex)?;
    println!("<x - y> has dimension {}", line.dimension()?);
    Ok(())
}
