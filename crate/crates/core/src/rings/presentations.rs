//! Built-in presentations of the Wolf-space cohomology rings.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::algebra::poly::Generators;
use crate::algebra::{Generator, GradedPolynomial, RingPresentation};
use crate::error::{Error, Result};

use super::sigma::{sigma_sequence, SigmaVariant};
use super::space::SpaceId;

/// The cohomology ring of a Wolf space. Presentations are built once and
/// shared, so per-degree bases are reused across every model over the same
/// base.
pub fn presentation(space: SpaceId) -> Result<Arc<RingPresentation>> {
    static CACHE: OnceLock<Mutex<HashMap<SpaceId, Arc<RingPresentation>>>> = OnceLock::new();
    let space = space.validated()?;
    space.require_wolf()?;
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().expect("presentation cache").get(&space) {
        return Ok(p.clone());
    }
    let built = Arc::new(build(space)?);
    let mut guard = cache.lock().expect("presentation cache");
    Ok(guard.entry(space).or_insert(built).clone())
}

fn gens(list: &[(&str, u32)]) -> Generators {
    list.iter()
        .map(|&(n, d)| Generator::new(n, d))
        .collect::<Vec<_>>()
        .into()
}

fn parse_all(gens: &Generators, texts: &[&str]) -> Result<Vec<GradedPolynomial>> {
    texts.iter().map(|t| GradedPolynomial::parse(gens, t)).collect()
}

fn build(space: SpaceId) -> Result<RingPresentation> {
    let name = space.to_string();
    let dim = space.formal_dimension().expect("Wolf space");
    match space {
        SpaceId::ComplexGrassmannian(n) => {
            let g = gens(&[("l", 2), ("x", 4)]);
            let l = GradedPolynomial::var(&g, 0);
            let x = GradedPolynomial::var(&g, 1);
            let s = sigma_sequence(&l, &x, n as usize + 2, SigmaVariant::Complex);
            RingPresentation::new(name, g, vec![s[n as usize + 1].clone(), s[n as usize + 2].clone()], dim)
        }
        SpaceId::RealGrassmannianEven(m) => {
            // z is the product of m degree-2 roots, so |z| = 2m
            let g = gens(&[("l", 4), ("x", 4), ("z", 2 * m)]);
            let l = GradedPolynomial::var(&g, 0);
            let x = GradedPolynomial::var(&g, 1);
            let z = GradedPolynomial::var(&g, 2);
            let s = sigma_sequence(&l, &x, m as usize + 1, SigmaVariant::Real);
            let rels = vec![x.mul(&z)?, z.pow(2).sub(&s[m as usize])?, s[m as usize + 1].clone()];
            RingPresentation::new(name, g, rels, dim)
        }
        SpaceId::RealGrassmannianR8 => {
            let g = gens(&[("l", 4), ("x", 4), ("z", 4)]);
            let rels = parse_all(&g, &["x*z", "z^2 - l^2 + x^2", "l^3 - 2*l*x^2"])?;
            RingPresentation::new(name, g, rels, dim)
        }
        SpaceId::RealGrassmannianOdd(m) => {
            let g = gens(&[("l", 4), ("x", 4)]);
            let l = GradedPolynomial::var(&g, 0);
            let x = GradedPolynomial::var(&g, 1);
            let s = sigma_sequence(&l, &x, m as usize + 2, SigmaVariant::Real);
            RingPresentation::new(name, g, vec![s[m as usize + 1].clone(), s[m as usize + 2].clone()], dim)
        }
        SpaceId::GI => {
            let g = gens(&[("x", 4)]);
            RingPresentation::new(name, g.clone(), parse_all(&g, &["x^3"])?, dim)
        }
        SpaceId::FI => {
            let g = gens(&[("x", 4), ("y", 8), ("z", 12)]);
            let rels = parse_all(&g, &["x^3 - 12*x*y + 8*z", "x*z - 3*y^2", "y^3 - z^2"])?;
            RingPresentation::new(name, g, rels, dim)
        }
        SpaceId::EII => {
            let g = gens(&[("x", 4), ("y", 6), ("z", 8), ("t", 12)]);
            let rels = parse_all(
                &g,
                &[
                    "y^2 - 8*t - 6*z*x + x^3",
                    "x^4 + 12*x*t - 6*x^2*z - 3*z^2",
                    "y*t",
                    "t^2 + z^3 - 3/2*x*z*t",
                ],
            )?;
            RingPresentation::new(name, g, rels, dim)
        }
        SpaceId::EVI => {
            let g = gens(&[("x", 4), ("y", 8), ("z", 12)]);
            let rels = parse_all(
                &g,
                &[
                    "-2*x^4*y + 2*x^3*z - 3*x*y*z + 1/8*y^3 + 3*z^2",
                    "x^7 - x^5*y + 4*x^4*z - 3/2*x^3*y^2 - 3/8*x*y^3 + 3*x*z^2 - 3/4*y^2*z",
                    "4*x^7*y + 3*x^5*y^2 + 8*x^4*y*z + x^3*y^3 + 4*x^3*z^2 + 6*x^2*y^2*z \
                     + 3/16*x*y^4 + 3/8*y^3*z + 8*z^3",
                ],
            )?;
            RingPresentation::new(name, g, rels, dim)
        }
        SpaceId::EIX => {
            // x12^4 and x20^2 alone leave x4 free; the degree-60 relation
            // x4^15 completes them to a ring with top degree 112 and the
            // Poincaré series (1-t^40)(1-t^48)(1-t^60)/((1-t^4)(1-t^12)(1-t^20)).
            let g = gens(&[("x4", 4), ("x12", 12), ("x20", 20)]);
            let rels = parse_all(&g, &["x12^4", "x20^2", "x4^15"])?;
            RingPresentation::new(name, g, rels, dim)
        }
        SpaceId::Sphere(_) | SpaceId::RealProjective(_) => {
            Err(Error::UnsupportedSpace(format!("{space} carries no ring presentation")))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn relations(space: SpaceId) -> Vec<String> {
        presentation(space)
            .unwrap()
            .relations()
            .iter()
            .map(|r| r.to_string())
            .collect()
    }

    #[test]
    fn complex_grassmannian_relations() {
        assert_eq!(
            relations(SpaceId::ComplexGrassmannian(2)),
            vec!["-l^3 + 2*l*x", "l^4 - 3*l^2*x + x^2"]
        );
    }

    #[test]
    fn r8_relations() {
        let ring = presentation(SpaceId::RealGrassmannianR8).unwrap();
        let expected = parse_all(ring.generators(), &["x*z", "z^2 - l^2 + x^2", "l^3 - 2*l*x^2"]).unwrap();
        assert_eq!(ring.relations(), expected.as_slice());
    }

    #[test]
    fn eix_keeps_printed_relations() {
        let rels = relations(SpaceId::EIX);
        assert!(rels.contains(&"x12^4".to_string()));
        assert!(rels.contains(&"x20^2".to_string()));
    }

    #[test]
    fn generator_degrees() {
        let degs = |s: SpaceId| -> Vec<u32> {
            presentation(s)
                .unwrap()
                .generators()
                .iter()
                .map(|g| g.degree())
                .collect()
        };
        assert_eq!(degs(SpaceId::ComplexGrassmannian(3)), vec![2, 4]);
        assert_eq!(degs(SpaceId::RealGrassmannianEven(3)), vec![4, 4, 6]);
        assert_eq!(degs(SpaceId::RealGrassmannianOdd(2)), vec![4, 4]);
        assert_eq!(degs(SpaceId::EII), vec![4, 6, 8, 12]);
        assert_eq!(degs(SpaceId::EIX), vec![4, 12, 20]);
    }

    #[test]
    fn spheres_have_no_presentation() {
        assert!(matches!(
            presentation(SpaceId::Sphere(7)),
            Err(Error::UnsupportedSpace(_))
        ));
    }

    #[test]
    fn eix_degree_twelve() {
        let p = presentation(SpaceId::EIX).unwrap();
        let names: Vec<String> = p
            .degree_basis(12)
            .basis_polynomials(p.generators())
            .iter()
            .map(|q| q.to_string())
            .collect();
        assert_eq!(names, vec!["x4^3", "x12"]);
    }

    #[test]
    fn r8_xz_vanishes() {
        let p = presentation(SpaceId::RealGrassmannianR8).unwrap();
        let nf = p.normal_form(&p.parse("x*z").unwrap()).unwrap();
        assert!(nf.iter().all(num_traits::Zero::is_zero));
    }
}
