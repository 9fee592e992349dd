//! Cohomology of the sphere-bundle model A(x)Lambda(u), du = e.
use wolfform::algebra::rational::int;
use wolfform::model::BundleModel;
use wolfform::rings::{homogeneous_euler, EulerClassSpec, SpaceId};

fn main() -> wolfform::Result<()> {
    let space = SpaceId::ComplexGrassmannian(3);
    for spec in [
        homogeneous_euler(space)?,
        EulerClassSpec::ab(int(1), int(0)),
        EulerClassSpec::ab(int(0), int(0)),
    ] {
        let model = BundleModel::build(space, &spec)?;
        println!("{space}, du = {}", model.euler());
        println!("  Betti {:?}", model.betti());
        for k in 0..=model.formal_dimension() {
            let basis = model.cohomology_basis(k);
            if !basis.is_empty() {
                let reps: Vec<String> = basis.iter().map(|c| model.class_to_polynomial(c).to_string()).collect();
                println!("  H^{k}: {}", reps.join(", "));
            }
        }
    }
    Ok(())
}
