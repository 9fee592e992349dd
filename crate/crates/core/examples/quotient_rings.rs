//! Quotient rings by homogeneous ideals, one degree at a time.
use std::sync::Arc;

use wolfform::algebra::{Generator, GradedPolynomial, RingPresentation};
use wolfform::rings::{presentation, SpaceId};

fn main() -> wolfform::Result<()> {
    // Q[a, b] / (a^2 - b, b^2) with |a| = 2, |b| = 4: a truncated ring of
    // formal dimension 6.
    let gens: Arc<[Generator]> = vec![Generator::new("a", 2), Generator::new("b", 4)].into();
    let rels = vec![
        GradedPolynomial::parse(&gens, "a^2 - b")?,
        GradedPolynomial::parse(&gens, "b^2")?,
    ];
    let ring = RingPresentation::new("example", gens, rels, 6)?;
    for k in 0..=8 {
        let basis = ring.degree_basis(k).basis_polynomials(ring.generators());
        let names: Vec<String> = basis.iter().map(ToString::to_string).collect();
        println!("degree {k}: {names:?}");
    }
    let a3 = ring.parse("a^3")?;
    let coords: Vec<String> = ring.normal_form(&a3)?.iter().map(ToString::to_string).collect();
    println!("a^3 has coordinates [{}] in the basis of degree 6", coords.join(", "));

    for space in ["gr-c:n=3", "gr-r:n=4", "eii"] {
        let space: SpaceId = space.parse()?;
        let base = presentation(space)?;
        println!("{space}: Betti {:?}, total {}", base.betti(), base.total_dimension());
    }
    Ok(())
}
