//! Mixing-matrix analysis: transition-probability tables for three-state
//! mixing, either exact (moduli squared as rationals) or measured
//! (magnitudes quoted as floats with a source note).

use serde::{Deserialize, Serialize};

use crate::cyclo::Rational;
use crate::rep::{fixtures, CycMatrix};
use crate::{Error, Result};

/// A 3x3 table of transition probabilities |U_ij|^2.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum MixTable {
    /// Probabilities known in closed form.
    Exact { moduli_squared: [[Rational; 3]; 3] },
    /// Probabilities squared from quoted magnitudes.
    Measured {
        source: String,
        magnitudes: [[f64; 3]; 3],
    },
}

/// Magnitude data as found in fixture files: a source note plus the 3x3
/// array of |U_ij| values.
#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct MagnitudeTable {
    pub source: String,
    pub entries: [[f64; 3]; 3],
}

impl From<MagnitudeTable> for MixTable {
    fn from(t: MagnitudeTable) -> Self {
        MixTable::Measured {
            source: t.source,
            magnitudes: t.entries,
        }
    }
}

/// The signed tribimaximal mixing matrix: the orthogonal symmetry-adapted
/// basis of the three-point permutation action with its first two columns
/// swapped, so the uniform direction sits in the middle column.
pub fn tribimaximal_matrix() -> CycMatrix {
    let (t, _) = fixtures::s3_orthogonal_transform();
    let cols = t.columns();
    CycMatrix::from_columns(vec![cols[1].clone(), cols[0].clone(), cols[2].clone()])
        .expect("fixture columns are well formed")
}

/// Structural features of a mixing table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PatternFlags {
    /// Second and third rows carry identical probabilities.
    pub bimaximal: bool,
    /// The middle column is uniform.
    pub trimaximal: bool,
    /// The upper-right entry vanishes.
    pub upper_right_zero: bool,
}

/// Largest entrywise distance between two tables.
#[derive(Clone, Debug, PartialEq)]
pub enum Deviation {
    Exact(Rational),
    Approximate(f64),
}

impl Deviation {
    pub fn to_f64(&self) -> f64 {
        match self {
            Deviation::Exact(r) => r.to_f64(),
            Deviation::Approximate(x) => *x,
        }
    }
}

impl std::fmt::Display for Deviation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Deviation::Exact(r) => write!(f, "{r}"),
            Deviation::Approximate(x) => write!(f, "{x}"),
        }
    }
}

impl MixTable {
    /// Exact table from closed-form probabilities.
    pub fn exact(moduli_squared: [[Rational; 3]; 3]) -> Self {
        MixTable::Exact { moduli_squared }
    }

    /// Measured table from quoted magnitudes.
    pub fn measured(source: impl Into<String>, magnitudes: [[f64; 3]; 3]) -> Self {
        MixTable::Measured {
            source: source.into(),
            magnitudes,
        }
    }

    /// No mixing at all: the identity table.
    pub fn identity() -> Self {
        let z = Rational::zero;
        let o = Rational::one;
        MixTable::Exact {
            moduli_squared: [
                [o(), z(), z()],
                [z(), o(), z()],
                [z(), z(), o()],
            ],
        }
    }

    /// Probability table of the tribimaximal matrix.
    pub fn tribimaximal() -> Self {
        let m = tribimaximal_matrix();
        let mut rows: Vec<[Rational; 3]> = Vec::new();
        for i in 0..3 {
            let mut row = [Rational::zero(), Rational::zero(), Rational::zero()];
            for (j, slot) in row.iter_mut().enumerate() {
                *slot = m
                    .entry(i, j)
                    .abs_squared()
                    .rational_part()
                    .expect("orthogonal entries have rational squares");
            }
            rows.push(row);
        }
        MixTable::Exact {
            moduli_squared: [rows[0].clone(), rows[1].clone(), rows[2].clone()],
        }
    }

    /// The probabilities as floats, squaring magnitudes when measured.
    pub fn moduli_squared_f64(&self) -> [[f64; 3]; 3] {
        let mut out = [[0.0; 3]; 3];
        match self {
            MixTable::Exact { moduli_squared } => {
                for i in 0..3 {
                    for j in 0..3 {
                        out[i][j] = moduli_squared[i][j].to_f64();
                    }
                }
            }
            MixTable::Measured { magnitudes, .. } => {
                for i in 0..3 {
                    for j in 0..3 {
                        out[i][j] = magnitudes[i][j] * magnitudes[i][j];
                    }
                }
            }
        }
        out
    }

    /// Exact probabilities, present only for exact tables.
    pub fn moduli_squared_exact(&self) -> Option<&[[Rational; 3]; 3]> {
        match self {
            MixTable::Exact { moduli_squared } => Some(moduli_squared),
            MixTable::Measured { .. } => None,
        }
    }

    /// Check the table against the classic patterns. Exact tables compare
    /// entries exactly and insist on zero tolerance; measured tables accept
    /// differences up to the tolerance.
    pub fn pattern_check(&self, tolerance: f64) -> Result<PatternFlags> {
        if tolerance < 0.0 {
            return Err(Error::InvalidInput("negative tolerance".into()));
        }
        match self {
            MixTable::Exact { moduli_squared } => {
                if tolerance != 0.0 {
                    return Err(Error::InvalidInput(
                        "exact tables take zero tolerance".into(),
                    ));
                }
                let m = moduli_squared;
                Ok(PatternFlags {
                    bimaximal: (0..3).all(|j| m[1][j] == m[2][j]),
                    trimaximal: m[0][1] == m[1][1] && m[1][1] == m[2][1],
                    upper_right_zero: m[0][2].is_zero(),
                })
            }
            MixTable::Measured { .. } => {
                let m = self.moduli_squared_f64();
                let close = |a: f64, b: f64| (a - b).abs() <= tolerance;
                Ok(PatternFlags {
                    bimaximal: (0..3).all(|j| close(m[1][j], m[2][j])),
                    trimaximal: close(m[0][1], m[1][1]) && close(m[1][1], m[2][1]),
                    upper_right_zero: close(m[0][2], 0.0),
                })
            }
        }
    }

    /// Largest entrywise distance between two probability tables; exact
    /// when both sides are exact.
    pub fn deviation(&self, other: &MixTable) -> Deviation {
        if let (Some(a), Some(b)) = (self.moduli_squared_exact(), other.moduli_squared_exact()) {
            let mut best = Rational::zero();
            for i in 0..3 {
                for j in 0..3 {
                    let d = (&a[i][j] - &b[i][j]).abs();
                    if (&best - &d).is_negative() {
                        best = d;
                    }
                }
            }
            return Deviation::Exact(best);
        }
        let a = self.moduli_squared_f64();
        let b = other.moduli_squared_f64();
        let mut best = 0.0f64;
        for i in 0..3 {
            for j in 0..3 {
                best = best.max((a[i][j] - b[i][j]).abs());
            }
        }
        Deviation::Approximate(best)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> Rational {
        Rational::new(p, q)
    }

    fn ckm() -> MixTable {
        let raw = include_str!("../fixtures/ckm_magnitudes.json");
        let table: MagnitudeTable = serde_json::from_str(raw).unwrap();
        MixTable::from(table)
    }

    #[test]
    fn tribimaximal_probabilities_frozen() {
        let t = MixTable::tribimaximal();
        let expect = [
            [rat(2, 3), rat(1, 3), rat(0, 1)],
            [rat(1, 6), rat(1, 3), rat(1, 2)],
            [rat(1, 6), rat(1, 3), rat(1, 2)],
        ];
        assert_eq!(t.moduli_squared_exact().unwrap(), &expect);
        // rows and columns are probability distributions
        for i in 0..3 {
            let row: Rational = (0..3).map(|j| expect[i][j].clone()).sum();
            let col: Rational = (0..3).map(|j| expect[j][i].clone()).sum();
            assert!(row.is_one());
            assert!(col.is_one());
        }
    }

    #[test]
    fn tribimaximal_matrix_is_orthogonal() {
        let m = tribimaximal_matrix();
        let product = m.transpose().mul(&m).unwrap();
        assert!(product.is_identity());
    }

    #[test]
    fn tribimaximal_matches_every_pattern() {
        let flags = MixTable::tribimaximal().pattern_check(0.0).unwrap();
        assert_eq!(
            flags,
            PatternFlags {
                bimaximal: true,
                trimaximal: true,
                upper_right_zero: true,
            }
        );
        assert!(MixTable::tribimaximal().pattern_check(0.01).is_err());
    }

    #[test]
    fn measured_table_squares_magnitudes() {
        let t = ckm();
        let sq = t.moduli_squared_f64();
        // squares carry ordinary f64 rounding in the last place
        let expect = [
            [0.948676, 0.050625, 1.6e-05],
            [0.050625, 0.948676, 0.0016810000000000002],
            [8.099999999999999e-05, 0.0016, 0.998001],
        ];
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(sq[i][j], expect[i][j], "entry ({i},{j})");
            }
        }
    }

    #[test]
    fn measured_pattern_flags_frozen() {
        let flags = ckm().pattern_check(0.05).unwrap();
        assert_eq!(
            flags,
            PatternFlags {
                bimaximal: false,
                trimaximal: false,
                upper_right_zero: true,
            }
        );
        assert!(ckm().pattern_check(-0.5).is_err());
    }

    #[test]
    fn deviations_frozen() {
        let id = MixTable::identity();
        assert_eq!(
            ckm().deviation(&id),
            Deviation::Approximate(0.051324000000000036)
        );
        assert_eq!(
            MixTable::tribimaximal().deviation(&id),
            Deviation::Exact(rat(2, 3))
        );
        assert_eq!(
            MixTable::tribimaximal().deviation(&MixTable::tribimaximal()),
            Deviation::Exact(Rational::zero())
        );
        // distance is symmetric either way the exactness falls
        let d1 = ckm().deviation(&MixTable::tribimaximal()).to_f64();
        let d2 = MixTable::tribimaximal().deviation(&ckm()).to_f64();
        assert_eq!(d1, d2);
    }

    #[test]
    fn serialization_shapes() {
        let json = serde_json::to_string(&MixTable::tribimaximal()).unwrap();
        assert!(json.starts_with("{\"kind\":\"exact\""));
        assert!(json.contains("\"2/3\""));
        let json = serde_json::to_string(&ckm()).unwrap();
        assert!(json.starts_with("{\"kind\":\"measured\""));
        assert!(json.contains("\"source\""));
    }
}
