//! Sweeps a grid of Euler classes and checks every verdict against the
//! Massey products it predicts.
use wolfform::classifier::{cross_check, euler_grid, WitnessStatus};
use wolfform::rings::SpaceId;

fn main() -> wolfform::Result<()> {
    for space in [SpaceId::RealGrassmannianEven(5), SpaceId::RealGrassmannianR8] {
        let grid = euler_grid(space, -1, 2)?;
        let report = cross_check(space, &grid)?;
        let nonformal = report.points.iter().filter(|p| !p.formal).count();
        let probed = report
            .points
            .iter()
            .filter(|p| p.witness != WitnessStatus::NotApplicable)
            .count();
        println!(
            "{space}: {} points, {nonformal} non-formal, {probed} Massey products computed",
            report.points.len()
        );
        for p in report.points.iter().filter(|p| !p.formal).take(4) {
            println!("  {} -> {} {:?}", p.euler, p.justification, p.witness);
        }
        assert!(report.passed());
    }
    Ok(())
}
