//! Square classes over the Grassmannian of 4-planes in R^8.
use wolfform::algebra::rational::int;
use wolfform::classifier::{alpha_coefficients, xi_classes};
use wolfform::rings::EulerClassSpec;

fn main() -> wolfform::Result<()> {
    for (a, b, c) in [(1, 1, 0), (2, 0, 2), (1, -1, 0), (2, 1, 0)] {
        let (alpha1, alpha2) = alpha_coefficients(&int(a), &int(b), &int(c))?;
        let [xi1, xi2] = xi_classes(&EulerClassSpec::abc(int(a), int(b), int(c)));
        println!("a={a} b={b} c={c}: alpha = ({alpha1}, {alpha2}), xi1 = {xi1}, xi2 = {xi2}");
    }
    Ok(())
}
