//! Nonzero cohomology of the bundles over the exceptional Wolf spaces.
use wolfform::algebra::rational::int;
use wolfform::model::BundleModel;
use wolfform::rings::{EulerClassSpec, SpaceId};

fn main() -> wolfform::Result<()> {
    for space in [SpaceId::GI, SpaceId::FI, SpaceId::EII, SpaceId::EVI, SpaceId::EIX] {
        let model = BundleModel::build(space, &EulerClassSpec::scalar(int(1)))?;
        let listing: Vec<String> = (0..=model.formal_dimension())
            .filter_map(|k| {
                let basis = model.cohomology_basis(k);
                let first = basis.first()?;
                Some(format!("H^{k}=<{}>", model.class_to_polynomial(first)))
            })
            .collect();
        println!("{space} (du = {}): {}", model.euler(), listing.join(" "));
    }
    Ok(())
}
