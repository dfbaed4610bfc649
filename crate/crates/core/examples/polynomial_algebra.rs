//! Polynomials over ℚ(i) in z and z̄: arithmetic, conjugation, derivatives.

use crcheck::parse::{parse_polynomial, parse_scalar};
use crcheck::ring::RingContext;

fn main() -> crcheck::error::Result<()> {
    let ring = RingContext::manifold(2);
    let p = parse_polynomial(&ring, "(1+2*I)*z1^2*zb2 - 3/4*z2 + I")?;
    let q = parse_polynomial(&ring, "z1 - zb1")?;

    println!("p        = {p}");
    println!("bar(p)   = {}", p.bar()?);
    println!("p * q    = {}", &p * &q);
    println!("q^3      = {}", q.pow(3));
    println!("dp/dz1   = {}", p.diff(ring.require("z1")?)?);

    // bar is an involution and a ring homomorphism
    assert_eq!(p.bar()?.bar()?, p);
    assert_eq!((&p * &q).bar()?, &p.bar()? * &q.bar()?);

    // a real-valued polynomial equals its conjugate
    let r = parse_polynomial(&ring, "z1*zb1 + I*z2 - I*zb2")?;
    println!("{r} is real-valued: {}", r.is_real_symmetric());

    // evaluation at (z1, z2) with zb = conj(z)
    let z = [parse_scalar("1+I")?, parse_scalar("1/2")?];
    let point: Vec<_> = z.iter().cloned().chain(z.iter().map(|c| c.conj())).collect();
    println!("r(1+I, 1/2) = {}", r.evaluate(&point)?);
    Ok(())
}
