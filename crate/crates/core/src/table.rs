//! The observed data: outcome probabilities `p(a|j,r)` for `m` measurements
//! and `l` preparations over a shared outcome alphabet, plus the strings
//! used to address preparations in the encoding picture.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tol::VALIDATION_TOL;

/// A string of `m` outcome values, stored as indices into the alphabet.
///
/// Ordering is lexicographic on the entries, matching the enumeration order
/// of [`ProbabilityTable::strings`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DitString(pub Vec<usize>);

impl DitString {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entry(&self, j: usize) -> usize {
        self.0[j]
    }

    /// Renders the string using the given alphabet labels. Single-character
    /// labels are concatenated ("00", "11"); longer labels are joined with
    /// commas so the rendering stays unambiguous.
    pub fn label(&self, alphabet: &[String]) -> String {
        let compact = alphabet.iter().all(|l| l.chars().count() == 1);
        let parts: Vec<&str> = self.0.iter().map(|&a| alphabet[a].as_str()).collect();
        if compact {
            parts.concat()
        } else {
            parts.join(",")
        }
    }

    /// Parses a rendered label back into entries, inverting [`Self::label`].
    pub fn parse(label: &str, length: usize, alphabet: &[String]) -> Result<Self> {
        let compact = alphabet.iter().all(|l| l.chars().count() == 1);
        let parts: Vec<String> = if compact {
            label.chars().map(|c| c.to_string()).collect()
        } else {
            label.split(',').map(|s| s.to_string()).collect()
        };
        if parts.len() != length {
            return Err(Error::LabelShape(format!(
                "string '{label}' has {} entries, expected {length}",
                parts.len()
            )));
        }
        let entries = parts
            .iter()
            .map(|p| {
                alphabet.iter().position(|l| l == p).ok_or_else(|| {
                    Error::LabelShape(format!("entry '{p}' of '{label}' is not in the alphabet"))
                })
            })
            .collect::<Result<Vec<usize>>>()?;
        Ok(DitString(entries))
    }
}

/// Unvalidated table data as it appears on the wire.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RawTable {
    pub alphabet: Vec<String>,
    pub measurements: usize,
    pub preparations: usize,
    /// Indexed measurement-major: `probs[j][r][a]`.
    pub probs: Vec<Vec<Vec<f64>>>,
}

/// A note emitted by validation when an in-tolerance deviation was repaired.
#[derive(Debug, Clone, Serialize)]
pub struct Adjustment {
    pub measurement: usize,
    pub preparation: usize,
    pub deviation: f64,
}

/// Validated outcome statistics `p(a|j,r)`.
///
/// Invariants: every entry lies in `[0,1]` and every `(j,r)` row sums to 1
/// exactly (validation renormalizes deviations below [`VALIDATION_TOL`]).
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityTable {
    alphabet: Vec<String>,
    probs: Vec<Vec<Vec<f64>>>,
}

impl ProbabilityTable {
    /// Validates raw data, repairing sub-tolerance deviations and reporting
    /// them. Rows shorter than the alphabet are padded with zero-probability
    /// outcomes.
    pub fn validate(raw: RawTable) -> Result<(Self, Vec<Adjustment>)> {
        let RawTable {
            alphabet,
            measurements,
            preparations,
            mut probs,
        } = raw;
        if alphabet.is_empty() {
            return Err(Error::ShapeMismatch("alphabet is empty".into()));
        }
        let mut sorted = alphabet.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != alphabet.len() {
            return Err(Error::ShapeMismatch("alphabet labels are not distinct".into()));
        }
        if measurements == 0 || preparations == 0 {
            return Err(Error::ShapeMismatch(
                "need at least one measurement and one preparation".into(),
            ));
        }
        if probs.len() != measurements {
            return Err(Error::ShapeMismatch(format!(
                "probs has {} measurement blocks, header says {measurements}",
                probs.len()
            )));
        }
        let mut adjustments = Vec::new();
        for (j, block) in probs.iter_mut().enumerate() {
            if block.len() != preparations {
                return Err(Error::ShapeMismatch(format!(
                    "measurement {j} has {} preparation rows, header says {preparations}",
                    block.len()
                )));
            }
            for (r, row) in block.iter_mut().enumerate() {
                if row.len() > alphabet.len() {
                    return Err(Error::ShapeMismatch(format!(
                        "row ({j},{r}) has {} outcomes, alphabet has {}",
                        row.len(),
                        alphabet.len()
                    )));
                }
                row.resize(alphabet.len(), 0.0);
                for (a, p) in row.iter_mut().enumerate() {
                    if *p < -VALIDATION_TOL {
                        return Err(Error::NegativeEntry {
                            location: format!("(measurement {j}, preparation {r}, outcome {a})"),
                            value: *p,
                        });
                    }
                    if *p < 0.0 {
                        *p = 0.0;
                    }
                    if *p > 1.0 + VALIDATION_TOL {
                        return Err(Error::OutOfRange {
                            what: "table entry",
                            value: *p,
                        });
                    }
                }
                let sum: f64 = row.iter().sum();
                if (sum - 1.0).abs() > VALIDATION_TOL {
                    return Err(Error::RowSumViolation {
                        measurement: j,
                        preparation: r,
                        sum,
                    });
                }
                if sum != 1.0 {
                    adjustments.push(Adjustment {
                        measurement: j,
                        preparation: r,
                        deviation: sum - 1.0,
                    });
                    for p in row.iter_mut() {
                        *p /= sum;
                    }
                }
            }
        }
        Ok((Self { alphabet, probs }, adjustments))
    }

    /// Validates raw data, discarding the adjustment notes.
    pub fn new(raw: RawTable) -> Result<Self> {
        Ok(Self::validate(raw)?.0)
    }

    /// Builds a table directly from `probs[j][r][a]` with digit labels
    /// `"0".."k-1"` for the alphabet.
    pub fn from_probs(probs: Vec<Vec<Vec<f64>>>) -> Result<Self> {
        let measurements = probs.len();
        let preparations = probs.first().map(|b| b.len()).unwrap_or(0);
        let outcomes = probs
            .first()
            .and_then(|b| b.first())
            .map(|r| r.len())
            .unwrap_or(0);
        Self::new(RawTable {
            alphabet: (0..outcomes).map(|a| a.to_string()).collect(),
            measurements,
            preparations,
            probs,
        })
    }

    pub fn num_measurements(&self) -> usize {
        self.probs.len()
    }

    pub fn num_preparations(&self) -> usize {
        self.probs[0].len()
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet.len()
    }

    /// `p(a|j,r)` by index.
    pub fn prob(&self, measurement: usize, preparation: usize, outcome: usize) -> f64 {
        self.probs[measurement][preparation][outcome]
    }

    /// Number of strings `|A|^m`, or `None` on overflow.
    pub fn num_strings(&self) -> Option<u64> {
        let k = self.alphabet_size() as u64;
        let mut n: u64 = 1;
        for _ in 0..self.num_measurements() {
            n = n.checked_mul(k)?;
        }
        Some(n)
    }

    /// The string with the given lexicographic rank.
    pub fn string_at(&self, rank: u64) -> DitString {
        let m = self.num_measurements();
        let k = self.alphabet_size() as u64;
        let mut entries = vec![0usize; m];
        let mut rest = rank;
        for j in (0..m).rev() {
            entries[j] = (rest % k) as usize;
            rest /= k;
        }
        DitString(entries)
    }

    /// All strings of length `m` in lexicographic order. Only callable at
    /// desk scale; use [`Self::string_at`] for streaming access.
    pub fn strings(&self) -> Vec<DitString> {
        let n = self
            .num_strings()
            .expect("string space too large to materialize");
        (0..n).map(|r| self.string_at(r)).collect()
    }

    pub fn raw(&self) -> RawTable {
        RawTable {
            alphabet: self.alphabet.clone(),
            measurements: self.num_measurements(),
            preparations: self.num_preparations(),
            probs: self.probs.clone(),
        }
    }
}

impl Serialize for ProbabilityTable {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.raw().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ProbabilityTable {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = RawTable::deserialize(deserializer)?;
        Self::new(raw).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn two_state_table_is_valid() {
        let table = fixtures::two_state_table();
        assert_eq!(table.num_measurements(), 2);
        assert_eq!(table.num_preparations(), 2);
        assert_eq!(table.prob(0, 0, 0), 1.0);
        assert_eq!(table.prob(1, 1, 0), 0.5);
    }

    #[test]
    fn row_sum_violation_is_rejected() {
        let raw = RawTable {
            alphabet: vec!["0".into(), "1".into()],
            measurements: 1,
            preparations: 1,
            probs: vec![vec![vec![0.5, 0.4]]],
        };
        match ProbabilityTable::new(raw) {
            Err(Error::RowSumViolation { sum, .. }) => assert!((sum - 0.9).abs() < 1e-12),
            other => panic!("expected RowSumViolation, got {other:?}"),
        }
    }

    #[test]
    fn negative_entry_is_rejected() {
        let raw = RawTable {
            alphabet: vec!["0".into(), "1".into()],
            measurements: 1,
            preparations: 1,
            probs: vec![vec![vec![1.1, -0.1]]],
        };
        match ProbabilityTable::new(raw) {
            Err(Error::NegativeEntry { value, .. }) => assert!((value + 0.1).abs() < 1e-12),
            other => panic!("expected NegativeEntry, got {other:?}"),
        }
    }

    #[test]
    fn sub_tolerance_deviation_is_renormalized_and_reported() {
        let raw = RawTable {
            alphabet: vec!["0".into(), "1".into()],
            measurements: 1,
            preparations: 1,
            probs: vec![vec![vec![0.5, 0.5 + 4e-10]]],
        };
        let (table, notes) = ProbabilityTable::validate(raw).unwrap();
        assert_eq!(notes.len(), 1);
        let sum: f64 = (0..2).map(|a| table.prob(0, 0, a)).sum();
        assert_eq!(sum, 1.0);
    }

    #[test]
    fn ragged_rows_are_padded() {
        let raw = RawTable {
            alphabet: vec!["0".into(), "1".into(), "2".into()],
            measurements: 1,
            preparations: 2,
            probs: vec![vec![vec![1.0], vec![0.25, 0.25, 0.5]]],
        };
        let table = ProbabilityTable::new(raw).unwrap();
        assert_eq!(table.prob(0, 0, 2), 0.0);
    }

    #[test]
    fn strings_enumerate_lexicographically() {
        let table = fixtures::two_state_table();
        let strings = table.strings();
        assert_eq!(strings.len(), 4);
        assert_eq!(strings[0], DitString(vec![0, 0]));
        assert_eq!(strings[3], DitString(vec![1, 1]));
        assert!(strings.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn dit_string_label_round_trip() {
        let alphabet = vec!["0".to_string(), "1".to_string()];
        let s = DitString(vec![1, 0]);
        let label = s.label(&alphabet);
        assert_eq!(label, "10");
        assert_eq!(DitString::parse(&label, 2, &alphabet).unwrap(), s);
    }
}
