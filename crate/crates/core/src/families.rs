//! Named degree-sequence families.
//!
//! Low degrees come first and hubs last, so in a star the centre is the
//! highest label.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::degseq::{DegreeSequence, SequenceError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{family} is not graphical: {source}")]
    NotGraphical {
        family: String,
        source: SequenceError,
    },
    #[error("infeasible family {family}: {reason}")]
    InfeasibleFamily { family: String, reason: String },
    #[error("cannot parse family `{0}`")]
    Parse(String),
}

/// A degree sequence given by name and parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `n` vertices of degree `d`.
    Regular { d: u32, n: u32 },
    /// `n1` leaves, the other `n - n1` vertices of degree `d`.
    WithLeaves { n1: u32, d: u32, n: u32 },
    /// `n2` vertices of degree 2, the other `n - n2` of degree `d`.
    WithTwos { n2: u32, d: u32, n: u32 },
    /// Two adjacent hubs of degree `n - 1`, everything else degree 2.
    TwoStars { n: u32 },
    /// One hub of degree `n - 1` and `n - 1` leaves.
    Star { n: u32 },
}

impl Family {
    fn infeasible(&self, reason: impl Into<String>) -> FamilyError {
        FamilyError::InfeasibleFamily {
            family: self.to_string(),
            reason: reason.into(),
        }
    }

    /// The degree list, validated for shape but not for graphicality.
    pub fn degrees(&self) -> Result<Vec<u32>, FamilyError> {
        let list = match *self {
            Family::Regular { d, n } => {
                if d == 0 || n == 0 {
                    return Err(self.infeasible("d and n must be positive"));
                }
                vec![d; n as usize]
            }
            Family::WithLeaves { n1: low, d, n } | Family::WithTwos { n2: low, d, n } => {
                let low_degree = if matches!(self, Family::WithLeaves { .. }) {
                    1
                } else {
                    2
                };
                if d == 0 || n == 0 {
                    return Err(self.infeasible("d and n must be positive"));
                }
                if low > n {
                    return Err(
                        self.infeasible(format!("{low} low-degree vertices exceed n = {n}"))
                    );
                }
                let mut v = vec![low_degree; low as usize];
                v.extend(std::iter::repeat_n(d, (n - low) as usize));
                v
            }
            Family::TwoStars { n } => {
                if n < 3 {
                    return Err(self.infeasible("two-stars needs n >= 3"));
                }
                let mut v = vec![2; n as usize - 2];
                v.extend([n - 1, n - 1]);
                v
            }
            Family::Star { n } => {
                if n < 2 {
                    return Err(self.infeasible("star needs n >= 2"));
                }
                let mut v = vec![1; n as usize - 1];
                v.push(n - 1);
                v
            }
        };
        Ok(list)
    }

    pub fn sequence(&self) -> Result<DegreeSequence, FamilyError> {
        let degrees = self.degrees()?;
        DegreeSequence::from_degrees(&degrees).map_err(|source| match source {
            SequenceError::OddSum { sum } => self.infeasible(format!("degree sum {sum} is odd")),
            source => FamilyError::NotGraphical {
                family: self.to_string(),
                source,
            },
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Regular { d, n } => write!(f, "regular({d},{n})"),
            Family::WithLeaves { n1, d, n } => write!(f, "with-leaves({n1},{d},{n})"),
            Family::WithTwos { n2, d, n } => write!(f, "with-twos({n2},{d},{n})"),
            Family::TwoStars { n } => write!(f, "two-stars({n})"),
            Family::Star { n } => write!(f, "star({n})"),
        }
    }
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl FromStr for Family {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FamilyError::Parse(s.to_string());
        let (name, args) = split_call(s).ok_or_else(bad)?;
        match (name.as_str(), args.as_slice()) {
            ("regular", &[d, n]) => Ok(Family::Regular { d, n }),
            ("with-leaves", &[n1, d, n]) => Ok(Family::WithLeaves { n1, d, n }),
            ("with-twos", &[n2, d, n]) => Ok(Family::WithTwos { n2, d, n }),
            ("two-stars", &[n]) => Ok(Family::TwoStars { n }),
            ("star", &[n]) => Ok(Family::Star { n }),
            _ => Err(bad()),
        }
    }
}

/// A family indexed by edge count `m`, for experiments across sizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScaledFamily {
    /// `2m / d` vertices of degree `d`; `d` must divide `2m`.
    Regular { d: u32 },
    /// `floor(sqrt(m))` leaves; the rest degree `d`.
    LeavesSqrt { d: u32 },
    /// `floor(m / divisor)` vertices of degree 2; the rest degree `d`.
    TwosFraction { divisor: u32, d: u32 },
}

impl ScaledFamily {
    /// Degrees with exactly `m` edges.
    ///
    /// When the half-edges left after the low-degree vertices are not a
    /// multiple of `d`, the remainder `r` is absorbed by raising `r` of the
    /// degree-`d` vertices to `d + 1`.
    pub fn degrees_for_edges(&self, m: u64) -> Result<DegreeSequence, FamilyError> {
        let infeasible = |reason: String| FamilyError::InfeasibleFamily {
            family: format!("{self} at m = {m}"),
            reason,
        };
        let (low_degree, low_count, d) = match *self {
            ScaledFamily::Regular { d } => (1, 0, d),
            ScaledFamily::LeavesSqrt { d } => (1, m.isqrt(), d),
            ScaledFamily::TwosFraction { divisor, d } => {
                if divisor == 0 {
                    return Err(infeasible("divisor must be positive".into()));
                }
                (2, m / u64::from(divisor), d)
            }
        };
        if d == 0 || m == 0 {
            return Err(infeasible("d and m must be positive".into()));
        }
        let rest = (2 * m)
            .checked_sub(low_degree * low_count)
            .ok_or_else(|| infeasible("low-degree vertices use more than 2m half-edges".into()))?;
        let (q, r) = (rest / u64::from(d), rest % u64::from(d));
        if matches!(self, ScaledFamily::Regular { .. }) && r != 0 {
            return Err(infeasible(format!("{d} does not divide 2m")));
        }
        if r > q {
            return Err(infeasible(format!(
                "remainder {r} exceeds the {q} vertices of degree {d}"
            )));
        }
        let mut degrees = vec![low_degree as u32; low_count as usize];
        degrees.extend(std::iter::repeat_n(d, (q - r) as usize));
        degrees.extend(std::iter::repeat_n(d + 1, r as usize));
        DegreeSequence::from_degrees(&degrees).map_err(|source| FamilyError::NotGraphical {
            family: format!("{self} at m = {m}"),
            source,
        })
    }
}

impl fmt::Display for ScaledFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ScaledFamily::Regular { d } => write!(f, "regular({d})"),
            ScaledFamily::LeavesSqrt { d } => write!(f, "leaves-sqrt({d})"),
            ScaledFamily::TwosFraction { divisor, d } => write!(f, "twos-fraction({divisor},{d})"),
        }
    }
}

impl FromStr for ScaledFamily {
    type Err = FamilyError;

    /// `regular(d)`, `leaves-sqrt(d)` or `twos-fraction(divisor,d)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FamilyError::Parse(s.to_string());
        let (name, args) = split_call(s).ok_or_else(bad)?;
        match (name.as_str(), args.as_slice()) {
            ("regular", &[d]) => Ok(ScaledFamily::Regular { d }),
            ("leaves-sqrt", &[d]) => Ok(ScaledFamily::LeavesSqrt { d }),
            ("twos-fraction", &[divisor, d]) => Ok(ScaledFamily::TwosFraction { divisor, d }),
            _ => Err(bad()),
        }
    }
}

/// `name(a,b,..)` with whitespace ignored.
fn split_call(s: &str) -> Option<(String, Vec<u32>)> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let (name, rest) = compact.split_once('(')?;
    let args = rest.strip_suffix(')')?;
    let args = args
        .split(',')
        .map(|a| a.parse().ok())
        .collect::<Option<Vec<u32>>>()?;
    Some((name.to_string(), args))
}

impl Serialize for ScaledFamily {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
