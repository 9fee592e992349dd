//! Formality verdicts with their justification and witness.
use wolfform::algebra::rational::int;
use wolfform::classifier::classify;
use wolfform::rings::{homogeneous_euler, EulerClassSpec, SpaceId};

fn main() -> wolfform::Result<()> {
    let cases = [
        ("gr-c:n=4", Some(EulerClassSpec::ab(int(1), int(0)))),
        ("gr-c:n=5", Some(EulerClassSpec::ab(int(1), int(0)))),
        ("gr-r:n=10", Some(EulerClassSpec::ab(int(1), int(-1)))),
        ("gr-r:n=4", Some(EulerClassSpec::abc(int(1), int(1), int(0)))),
        ("gr-r:n=7", Some(EulerClassSpec::ab(int(3), int(2)))),
        ("eix", None),
        ("sphere:k=7", Some(EulerClassSpec::scalar(int(1)))),
    ];
    for (name, spec) in cases {
        let space: SpaceId = name.parse()?;
        let spec = match spec {
            Some(s) => s,
            None => homogeneous_euler(space)?,
        };
        let v = classify(space, &spec)?;
        let verdict = if v.formal { "formal" } else { "non-formal" };
        print!("{space} [{spec}]: {verdict} ({})", v.justification);
        if let Some(w) = &v.witness {
            print!(", witness <{}> in degree {}", w.classes.join(", "), w.result.degree());
        }
        println!();
    }
    Ok(())
}
