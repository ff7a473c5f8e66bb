//! Torus fixed-point data of curves carrying an equivariant bundle.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::LocalizationError;
use crate::algebra::scalar::{int, is_integer, ratio};
use crate::algebra::Scalar;

/// One isolated fixed point: the weight `c` of the cotangent line
/// (`u = q^c`) and the weights of the bundle fiber, one per summand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedPointChart {
    pub cotangent_weight: i64,
    pub bundle_weights: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveFixture {
    pub name: String,
    pub compact: bool,
    pub points: Vec<FixedPointChart>,
}

impl CurveFixture {
    pub fn new(name: &str, compact: bool, points: Vec<FixedPointChart>) -> Result<Self, LocalizationError> {
        let fixture = CurveFixture {
            name: name.to_string(),
            compact,
            points,
        };
        fixture.validate()?;
        Ok(fixture)
    }

    /// Checks the structural invariants: at least one point, nonzero cotangent
    /// weights, a common rank of at least one.
    pub fn validate(&self) -> Result<(), LocalizationError> {
        let invalid = |msg: String| Err(LocalizationError::InvalidFixture(msg));
        if self.points.is_empty() {
            return invalid("points: at least one fixed point is required".into());
        }
        let rank = self.points[0].bundle_weights.len();
        if rank == 0 {
            return invalid("points[0].bundle_weights: rank must be at least 1".into());
        }
        for (i, p) in self.points.iter().enumerate() {
            if p.cotangent_weight == 0 {
                return invalid(format!("points[{i}].cotangent_weight: must be nonzero"));
            }
            if p.bundle_weights.len() != rank {
                return invalid(format!(
                    "points[{i}].bundle_weights: expected {rank} weights, found {}",
                    p.bundle_weights.len()
                ));
            }
        }
        Ok(())
    }

    pub fn from_json(text: &str) -> Result<Self, LocalizationError> {
        let fixture: CurveFixture =
            serde_json::from_str(text).map_err(|e| LocalizationError::InvalidFixture(e.to_string()))?;
        fixture.validate()?;
        Ok(fixture)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("fixture serializes")
    }

    pub fn num_points(&self) -> usize {
        self.points.len()
    }

    pub fn rank(&self) -> usize {
        self.points.first().map_or(0, |p| p.bundle_weights.len())
    }

    /// The projective line with `E = O(d_1) + ... + O(d_r)`, each summand
    /// lifted with weights `(0, -d_j)` and cotangent weights `(-1, 1)`.
    pub fn p1_degrees(degrees: &[i64]) -> Self {
        let name = format!(
            "P1[{}]",
            degrees.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
        );
        CurveFixture {
            name,
            compact: true,
            points: vec![
                FixedPointChart {
                    cotangent_weight: -1,
                    bundle_weights: vec![0; degrees.len()],
                },
                FixedPointChart {
                    cotangent_weight: 1,
                    bundle_weights: degrees.iter().map(|d| -d).collect(),
                },
            ],
        }
    }

    pub fn p1_line(d: i64) -> Self {
        Self::p1_degrees(&[d])
    }

    /// `r O`: first basis fixture, `(d, e) = (0, 2)`.
    pub fn p1_r_trivial(r: usize) -> Self {
        Self::p1_degrees(&vec![0; r])
    }

    /// `(r-1) O + O(-1)`: second basis fixture, `(d, e) = (-1, 2)`.
    pub fn p1_mixed(r: usize) -> Self {
        let mut degrees = vec![0; r.saturating_sub(1)];
        degrees.push(-1);
        Self::p1_degrees(&degrees)
    }

    /// The affine line with a single fixed point and bundle weight `a`.
    pub fn affine_line(a: i64) -> Self {
        Self::affine_line_weights(&[a])
    }

    pub fn affine_line_weights(weights: &[i64]) -> Self {
        CurveFixture {
            name: format!("A1{weights:?}"),
            compact: false,
            points: vec![FixedPointChart {
                cotangent_weight: 1,
                bundle_weights: weights.to_vec(),
            }],
        }
    }

    pub fn standard(kind: &FixtureKind) -> Self {
        match kind {
            FixtureKind::P1Line(d) => Self::p1_line(*d),
            FixtureKind::P1RTrivial(r) => Self::p1_r_trivial(*r),
            FixtureKind::P1Mixed(r) => Self::p1_mixed(*r),
            FixtureKind::AffineLine(a) => Self::affine_line(*a),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FixtureKind {
    P1Line(i64),
    P1RTrivial(usize),
    P1Mixed(usize),
    AffineLine(i64),
}

/// Localization values of `∫ c_1(T_C)` and `∫ c_1(E_j)` on a compact fixture.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureInvariants {
    pub euler: i64,
    pub degrees: Vec<Scalar>,
    /// Set when some degree is not an integer: the fixture is formal only.
    pub formal: bool,
}

impl FixtureInvariants {
    pub fn total_degree(&self) -> Scalar {
        self.degrees.iter().sum()
    }
}

pub fn fixture_invariants(fixture: &CurveFixture) -> Result<FixtureInvariants, LocalizationError> {
    if !fixture.compact {
        return Err(LocalizationError::NotCompact(fixture.name.clone()));
    }
    // c_1(T) restricts to -c_i t at P_i, divided by the tangent Euler class -c_i t.
    let euler = fixture.points.len() as i64;
    let degrees: Vec<Scalar> = (0..fixture.rank())
        .map(|j| {
            fixture
                .points
                .iter()
                .map(|p| ratio(p.bundle_weights[j], -p.cotangent_weight))
                .sum()
        })
        .collect();
    let formal = !degrees.iter().all(is_integer);
    Ok(FixtureInvariants { euler, degrees, formal })
}

/// Bundle (+1) or its virtual negative (-1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn as_scalar(self) -> Scalar {
        int(self.value())
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "plus",
            Sign::Minus => "minus",
        })
    }
}

impl FromStr for Sign {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "plus" | "+1" | "+" | "1" => Ok(Sign::Plus),
            "minus" | "-1" | "-" => Ok(Sign::Minus),
            _ => Err(format!("expected plus or minus, got {s:?}")),
        }
    }
}

/// A K-theory class `sign * E` on a fixture of rank `rank`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KClassSpec {
    pub sign: Sign,
    pub rank: usize,
}

impl KClassSpec {
    pub fn of(fixture: &CurveFixture, sign: Sign) -> Self {
        KClassSpec {
            sign,
            rank: fixture.rank(),
        }
    }
}
