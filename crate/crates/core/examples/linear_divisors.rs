//! Which real sigma classes have a given linear form a*l + b*x as a factor.
use wolfform::algebra::rational::int;
use wolfform::rings::{divides_linear_bruteforce, divides_linear_criterion};

fn main() -> wolfform::Result<()> {
    println!("a  b   r = 0..12 (# divides)");
    for (a, b) in [(1, 0), (0, 1), (1, 1), (1, -1), (2, 1)] {
        let row: String = (0..=12)
            .map(|r| {
                let hit = divides_linear_criterion(&int(a), &int(b), r)?;
                assert_eq!(hit, divides_linear_bruteforce(&int(a), &int(b), r)?);
                Ok(if hit { '#' } else { '.' })
            })
            .collect::<wolfform::Result<_>>()?;
        println!("{a:>2} {b:>2}  {row}");
    }
    Ok(())
}
