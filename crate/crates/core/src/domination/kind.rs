use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which domination parameter is meant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DominationKind {
    /// `γ`: every vertex outside the set has a neighbour in it.
    Domination,
    /// `γt`: every vertex has a neighbour in the set.
    Total,
    /// `γt2`: dominating, and every member has another member within distance two.
    Semitotal,
}

impl DominationKind {
    pub const ALL: [DominationKind; 3] = [Self::Domination, Self::Total, Self::Semitotal];

    /// Smallest value the parameter can take on a graph where it is defined
    /// (one vertex for `γ`, two for the others).
    pub fn floor(self) -> usize {
        match self {
            Self::Domination => 1,
            Self::Total | Self::Semitotal => 2,
        }
    }

    pub fn short_name(self) -> &'static str {
        match self {
            Self::Domination => "dom",
            Self::Total => "total",
            Self::Semitotal => "semitotal",
        }
    }
}

impl fmt::Display for DominationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for DominationKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dom" | "domination" | "gamma" => Ok(Self::Domination),
            "total" | "gamma_t" => Ok(Self::Total),
            "semitotal" | "gamma_t2" => Ok(Self::Semitotal),
            other => Err(Error::parse(0, format!("unknown domination kind `{other}`"))),
        }
    }
}
