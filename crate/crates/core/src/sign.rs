//! Sign homomorphisms `W -> {+1, -1}` and the generator subsets they
//! single out.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootdata::RootSystemData;

/// The four sign homomorphisms of a Weyl group.
///
/// `Short` and `Long` only exist for root systems with two root lengths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SignHom {
    #[serde(rename = "id")]
    Identity,
    #[serde(rename = "e")]
    Determinant,
    #[serde(rename = "s")]
    Short,
    #[serde(rename = "l")]
    Long,
}

impl SignHom {
    pub const ALL: [SignHom; 4] = [
        SignHom::Identity,
        SignHom::Determinant,
        SignHom::Short,
        SignHom::Long,
    ];

    /// Homomorphisms defined for the given root system, in canonical order.
    pub fn admissible(rs: &RootSystemData) -> Vec<SignHom> {
        if rs.is_simply_laced() {
            vec![SignHom::Identity, SignHom::Determinant]
        } else {
            Self::ALL.to_vec()
        }
    }

    pub fn check_admissible(self, rs: &RootSystemData) -> Result<()> {
        if rs.is_simply_laced() && matches!(self, SignHom::Short | SignHom::Long) {
            return Err(Error::UnsupportedHomomorphism {
                sigma: self,
                algebra: rs.lie_type.to_string(),
            });
        }
        Ok(())
    }

    /// Value on the reflection in a root of the given length class.
    pub fn on_reflection(self, short: bool) -> i8 {
        match self {
            SignHom::Identity => 1,
            SignHom::Determinant => -1,
            SignHom::Short => {
                if short {
                    -1
                } else {
                    1
                }
            }
            SignHom::Long => {
                if short {
                    1
                } else {
                    -1
                }
            }
        }
    }

    /// Value of `sigma o psi` on the affine generator `r_i`, `i = 0..=n`.
    ///
    /// `psi(r_0)` is the reflection in the highest root, which is long.
    pub fn on_affine_generator(self, rs: &RootSystemData, i: usize) -> i8 {
        if i == 0 {
            self.on_reflection(false)
        } else {
            self.on_reflection(rs.is_short(i - 1))
        }
    }

    /// Indices `i` in `0..=n` with `sigma(psi(r_i)) = -1`.
    pub fn negative_generators(self, rs: &RootSystemData) -> Result<Vec<usize>> {
        self.check_admissible(rs)?;
        Ok((0..=rs.rank())
            .filter(|&i| self.on_affine_generator(rs, i) == -1)
            .collect())
    }

    pub fn as_str(self) -> &'static str {
        match self {
            SignHom::Identity => "id",
            SignHom::Determinant => "e",
            SignHom::Short => "s",
            SignHom::Long => "l",
        }
    }

    pub(crate) fn slot(self) -> usize {
        match self {
            SignHom::Identity => 0,
            SignHom::Determinant => 1,
            SignHom::Short => 2,
            SignHom::Long => 3,
        }
    }
}

impl fmt::Display for SignHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SignHom {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "id" | "1" => Ok(SignHom::Identity),
            "e" => Ok(SignHom::Determinant),
            "s" => Ok(SignHom::Short),
            "l" => Ok(SignHom::Long),
            other => Err(Error::Input(format!(
                "unknown sign homomorphism {other:?} (expected id, e, s or l)"
            ))),
        }
    }
}

/// Sum of comarks over the generators on which `sigma o psi` is `-1`.
pub fn q_sigma(rs: &RootSystemData, sigma: SignHom) -> Result<u64> {
    let neg = sigma.negative_generators(rs)?;
    Ok(neg.iter().map(|&i| rs.extended_comark(i)).sum())
}
