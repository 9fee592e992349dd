//! A triple Massey product, its defining primitives and indeterminacy.
use wolfform::algebra::rational::int;
use wolfform::massey::{solve_primitive, triple_massey, MasseyOutcome};
use wolfform::model::BundleModel;
use wolfform::rings::{EulerClassSpec, SpaceId};

fn main() -> wolfform::Result<()> {
    let model = BundleModel::build(SpaceId::ComplexGrassmannian(2), &EulerClassSpec::ab(int(1), int(0)))?;
    let [l, x] = ["l", "x"].map(|s| model.parse_class(s).expect("class"));

    let ll = model.cochain_product(&l, &l)?;
    let p = solve_primitive(&model, &ll)?.expect("l^2 is exact");
    println!("d({}) = l^2", model.class_to_polynomial(&p));

    match triple_massey(&model, &l, &l, &x)? {
        MasseyOutcome::Defined(r) => {
            println!("<l,l,x> lives in degree {}", r.degree());
            println!("representative {}", model.class_to_polynomial(r.representative()));
            println!("indeterminacy dimension {}", r.indeterminacy_dim());
            println!("trivial: {}", r.trivial());
        }
        MasseyOutcome::Undefined {
            left_exact,
            right_exact,
        } => {
            println!("undefined: l*l exact {left_exact}, l*x exact {right_exact}")
        }
    }
    Ok(())
}
