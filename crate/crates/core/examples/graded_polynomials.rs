//! Graded-commutative arithmetic: even generators commute, odd ones
//! anticommute and square to zero.
use std::sync::Arc;

use wolfform::algebra::{Generator, GradedPolynomial};

fn main() -> wolfform::Result<()> {
    let gens: Arc<[Generator]> = vec![
        Generator::new("l", 2),
        Generator::new("x", 4),
        Generator::new("u", 3),
        Generator::new("v", 5),
    ]
    .into();
    let p = GradedPolynomial::parse(&gens, "l^2 - 1/4*x")?;
    let u = GradedPolynomial::parse(&gens, "u")?;
    let v = GradedPolynomial::parse(&gens, "v")?;

    println!("p = {p}, degree {:?}", p.degree());
    println!("p^3 = {}", p.pow(3));
    println!("u*v = {}, v*u = {}", u.mul(&v)?, v.mul(&u)?);
    println!("u*u = {}", u.mul(&u)?);
    println!("(p + u)^2 = {}", p.add(&u)?.pow(2));

    let printed = p.mul(&u)?.to_string();
    assert_eq!(GradedPolynomial::parse(&gens, &printed)?, p.mul(&u)?);
    println!("round trip of `{printed}` ok");
    Ok(())
}
