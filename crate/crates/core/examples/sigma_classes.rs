//! The sigma classes by recursion and in closed form.
use wolfform::rings::{sigma, sigma_closed, sigma_series_check, SigmaVariant};

fn main() -> wolfform::Result<()> {
    for variant in [SigmaVariant::Complex, SigmaVariant::Real] {
        println!("{variant:?}");
        for r in 0..=6 {
            let rec = sigma(r, variant)?;
            assert_eq!(rec, sigma_closed(r, variant)?);
            println!("  sigma_{r} = {rec}");
        }
    }
    println!(
        "generating function to order 12: {}",
        sigma_series_check(12, SigmaVariant::Real)?
    );
    Ok(())
}
