use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The spaces the toolkit knows about. Grassmannian parameters follow the
/// Wolf-space conventions: `ComplexGrassmannian(n)` is the Grassmannian of
/// 2-planes in C^(n+2); the oriented real Grassmannian of 4-planes in
/// R^(n+4) splits by the parity of `n` into `RealGrassmannianEven(m)` with
/// n = 2m ≥ 6, `RealGrassmannianR8` with n = 4, and `RealGrassmannianOdd(m)`
/// with n = 2m + 1 ≥ 3.
#[allow(clippy::upper_case_acronyms)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpaceId {
    ComplexGrassmannian(u32),
    RealGrassmannianEven(u32),
    RealGrassmannianR8,
    RealGrassmannianOdd(u32),
    GI,
    FI,
    EII,
    EVI,
    EIX,
    Sphere(u32),
    RealProjective(u32),
}

impl SpaceId {
    pub fn complex_grassmannian(n: u32) -> Result<Self> {
        SpaceId::ComplexGrassmannian(n).validated()
    }

    /// Oriented Grassmannian of 4-planes in R^(n+4), dispatched on `n`.
    pub fn real_grassmannian(n: u32) -> Result<Self> {
        match n {
            4 => Ok(SpaceId::RealGrassmannianR8),
            n if n % 2 == 0 => SpaceId::RealGrassmannianEven(n / 2).validated(),
            n => SpaceId::RealGrassmannianOdd((n - 1) / 2).validated(),
        }
    }

    pub fn validated(self) -> Result<Self> {
        let bad = |what: &str| Err(Error::Domain(format!("{what} (got {self:?})")));
        match self {
            SpaceId::ComplexGrassmannian(0) => bad("complex Grassmannian needs n >= 1"),
            SpaceId::RealGrassmannianEven(m) if m < 3 => bad("even real Grassmannian needs n = 2m >= 6"),
            SpaceId::RealGrassmannianOdd(0) => bad("odd real Grassmannian needs n = 2m + 1 >= 3"),
            other => Ok(other),
        }
    }

    pub fn is_wolf(&self) -> bool {
        !matches!(self, SpaceId::Sphere(_) | SpaceId::RealProjective(_))
    }

    pub fn is_exceptional(&self) -> bool {
        matches!(
            self,
            SpaceId::GI | SpaceId::FI | SpaceId::EII | SpaceId::EVI | SpaceId::EIX
        )
    }

    /// The `n` of the real Grassmannian family, if this is one.
    pub fn real_family_n(&self) -> Option<u32> {
        match *self {
            SpaceId::RealGrassmannianEven(m) => Some(2 * m),
            SpaceId::RealGrassmannianR8 => Some(4),
            SpaceId::RealGrassmannianOdd(m) => Some(2 * m + 1),
            _ => None,
        }
    }

    /// Real dimension of a Wolf space; `None` for spheres and projective
    /// spaces, which carry no ring arithmetic here.
    pub fn formal_dimension(&self) -> Option<u32> {
        match *self {
            SpaceId::ComplexGrassmannian(n) => Some(4 * n),
            SpaceId::RealGrassmannianEven(_) | SpaceId::RealGrassmannianR8 | SpaceId::RealGrassmannianOdd(_) => {
                self.real_family_n().map(|n| 4 * n)
            }
            SpaceId::GI => Some(8),
            SpaceId::FI => Some(28),
            SpaceId::EII => Some(40),
            SpaceId::EVI => Some(64),
            SpaceId::EIX => Some(112),
            SpaceId::Sphere(_) | SpaceId::RealProjective(_) => None,
        }
    }

    pub(crate) fn require_wolf(&self) -> Result<()> {
        if self.is_wolf() {
            Ok(())
        } else {
            Err(Error::UnsupportedSpace(format!("{self} is not a Wolf space")))
        }
    }
}

impl fmt::Display for SpaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SpaceId::ComplexGrassmannian(n) => write!(f, "gr-c:n={n}"),
            SpaceId::RealGrassmannianEven(_) | SpaceId::RealGrassmannianR8 | SpaceId::RealGrassmannianOdd(_) => {
                write!(f, "gr-r:n={}", self.real_family_n().expect("real family"))
            }
            SpaceId::GI => write!(f, "gi"),
            SpaceId::FI => write!(f, "fi"),
            SpaceId::EII => write!(f, "eii"),
            SpaceId::EVI => write!(f, "evi"),
            SpaceId::EIX => write!(f, "eix"),
            SpaceId::Sphere(k) => write!(f, "sphere:k={k}"),
            SpaceId::RealProjective(k) => write!(f, "rp:k={k}"),
        }
    }
}

impl FromStr for SpaceId {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let param = |rest: &str, key: &str| -> Result<u32> {
            let value = rest
                .strip_prefix(key)
                .and_then(|r| r.strip_prefix('='))
                .ok_or_else(|| Error::Parse(format!("expected `{key}=<int>` in `{text}`")))?;
            value
                .parse()
                .map_err(|_| Error::Parse(format!("invalid integer `{value}` in `{text}`")))
        };
        match text.split_once(':') {
            Some(("gr-c", rest)) => SpaceId::complex_grassmannian(param(rest, "n")?),
            Some(("gr-r", rest)) => SpaceId::real_grassmannian(param(rest, "n")?),
            Some(("sphere", rest)) => Ok(SpaceId::Sphere(param(rest, "k")?)),
            Some(("rp", rest)) => Ok(SpaceId::RealProjective(param(rest, "k")?)),
            None => match text {
                "gi" => Ok(SpaceId::GI),
                "fi" => Ok(SpaceId::FI),
                "eii" => Ok(SpaceId::EII),
                "evi" => Ok(SpaceId::EVI),
                "eix" => Ok(SpaceId::EIX),
                _ => Err(Error::Parse(format!("unknown space `{text}`"))),
            },
            _ => Err(Error::Parse(format!("unknown space `{text}`"))),
        }
    }
}
