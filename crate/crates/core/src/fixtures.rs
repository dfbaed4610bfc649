//! Standard manifolds and exact points on them.

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use crate::manifold::{from_strings, Point, RealAlgebraicSubmanifold};
use crate::poly::Coeff;

/// `S³ = {|z1|² + |z2|² = 1} ⊂ ℂ²`.
pub fn sphere() -> RealAlgebraicSubmanifold {
    from_strings("sphere", 2, &["z1*zb1 + z2*zb2 - 1"]).expect("valid fixture")
}

/// `Re z2 = |z1|²`.
pub fn heisenberg() -> RealAlgebraicSubmanifold {
    from_strings("heisenberg", 2, &["2*z1*zb1 - z2 - zb2"]).expect("valid fixture")
}

/// `Re z2 = 0`, foliated by the complex lines `z2 = const`.
pub fn levi_flat() -> RealAlgebraicSubmanifold {
    from_strings("levi-flat", 2, &["z2 + zb2"]).expect("valid fixture")
}

/// `ℝ² ⊂ ℂ²`.
pub fn real_plane() -> RealAlgebraicSubmanifold {
    from_strings("real-plane", 2, &["I*z1 - I*zb1", "I*z2 - I*zb2"]).expect("valid fixture")
}

/// The complex line `z2 = 0` as a real codimension-2 set; not generic.
pub fn complex_line() -> RealAlgebraicSubmanifold {
    from_strings("complex-line", 2, &["z2 + zb2", "I*z2 - I*zb2"]).expect("valid fixture")
}

fn q(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// Distinct small rationals: 0, 1, -1, 1/2, -1/2, 2, -2, 1/3, ...
pub fn rationals() -> impl Iterator<Item = BigRational> {
    std::iter::once(q(0, 1)).chain((1i64..).flat_map(|s| {
        (1..=s).flat_map(move |den| {
            let num = s - den + 1;
            if num.gcd(&den) != 1 {
                Vec::new()
            } else {
                vec![q(num, den), q(-num, den)]
            }
        })
    }))
}

/// Distinct small Gaussian rationals.
pub fn gaussians() -> impl Iterator<Item = Coeff> {
    let reals: Vec<BigRational> = rationals().take(7).collect();
    let mut out = Vec::new();
    for s in 0..reals.len() {
        for i in 0..=s {
            out.push(Coeff::new(reals[s - i].clone(), reals[i].clone()));
        }
    }
    out.into_iter()
}

/// Unit Gaussian rationals `1, I, -1, -I, (3+4i)/5, (5+12i)/13, …`.
fn units() -> Vec<Coeff> {
    let mut out: Vec<Coeff> = ["1", "I", "-1", "-I"]
        .iter()
        .map(|s| crate::parse::parse_scalar(s).expect("literal"))
        .collect();
    out.push(Coeff::new(q(3, 5), q(4, 5)));
    out.push(Coeff::new(q(5, 13), q(12, 13)));
    out.push(Coeff::new(q(8, 17), q(-15, 17)));
    out
}

/// Points `(u·2t/(1+t²), v·(1-t²)/(1+t²))` on the sphere.
pub fn sphere_points(count: usize) -> Vec<Point> {
    let us = units();
    let mut out: Vec<Point> = Vec::new();
    for t in rationals() {
        let den = BigRational::one() + &t * &t;
        let x = Coeff::real(q(2, 1) * &t / &den);
        let y = Coeff::real((BigRational::one() - &t * &t) / &den);
        for u in &us {
            for v in &us {
                let p = vec![&x * u, &y * v];
                if !out.contains(&p) {
                    out.push(p);
                }
                if out.len() == count {
                    return out;
                }
            }
        }
    }
    unreachable!("infinitely many parameters")
}

/// Points `(z1, |z1|² + i·t)` on the Heisenberg hypersurface.
pub fn heisenberg_points(count: usize) -> Vec<Point> {
    let ts: Vec<BigRational> = rationals().take(3).collect();
    gaussians()
        .flat_map(|z1| {
            ts.iter()
                .map(|t| {
                    let z2 = Coeff::new(z1.norm_sqr(), t.clone());
                    vec![z1.clone(), z2]
                })
                .collect::<Vec<_>>()
        })
        .take(count)
        .collect()
}

/// Points `(z1, i·t)` on `Re z2 = 0`.
pub fn levi_flat_points(count: usize) -> Vec<Point> {
    let ts: Vec<BigRational> = rationals().take(3).collect();
    gaussians()
        .flat_map(|z1| {
            ts.iter()
                .map(|t| vec![z1.clone(), Coeff::new(q(0, 1), t.clone())])
                .collect::<Vec<_>>()
        })
        .take(count)
        .collect()
}

/// Real points of `ℝ²`.
pub fn real_plane_points(count: usize) -> Vec<Point> {
    let xs: Vec<BigRational> = rationals().take(count.max(1)).collect();
    let mut out = Vec::new();
    for s in 0..xs.len() {
        for i in 0..=s {
            out.push(vec![Coeff::real(xs[s - i].clone()), Coeff::real(xs[i].clone())]);
            if out.len() == count {
                return out;
            }
        }
    }
    out
}
