//! Normal forms over the field of rational functions in parameters.

use crcheck::groebner::Budget;
use crcheck::order::BaseOrder;
use crcheck::parametric::parametric_normal_form;
use crcheck::parse::parse_polynomial;
use crcheck::ring::RingContext;

fn main() -> crcheck::error::Result<()> {
    let ring = RingContext::plain(&["w", "a", "b"])?;
    let v = |s: &str| ring.require(s);
    let gens = vec![parse_polynomial(&ring, "a*w - b")?];
    let p = parse_polynomial(&ring, "w^2 + w + 1")?;
    let r = parametric_normal_form(&p, &gens, &[v("w")?], &[v("a")?, v("b")?], BaseOrder::GrevLex, &Budget::default())?;
    println!("w^2 + w + 1 mod <a*w - b> = ({}) / ({})", r.numerator(), r.denominator());
    for d in r.denominators() {
        println!("  valid off {d} = 0");
    }

    println!("specialized at a = 2, b = 1: {:?}", r
        .specialize(&[(v("a")?, 2.into()), (v("b")?, 1.into())])?
        .map(|p| p.to_string()));
    Ok(())
}
