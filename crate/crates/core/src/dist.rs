//! Classical probability objects: distributions, joints and channels.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tol::VALIDATION_TOL;

/// A probability distribution over an ordered list of labels.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Distribution {
    labels: Vec<String>,
    mass: Vec<f64>,
}

impl Distribution {
    pub fn new(labels: Vec<String>, mass: Vec<f64>) -> Result<Self> {
        if labels.len() != mass.len() {
            return Err(Error::InvalidDistribution(format!(
                "{} labels but {} mass entries",
                labels.len(),
                mass.len()
            )));
        }
        if labels.is_empty() {
            return Err(Error::InvalidDistribution("empty support".into()));
        }
        for (l, &p) in labels.iter().zip(&mass) {
            if p < -VALIDATION_TOL || !p.is_finite() {
                return Err(Error::InvalidDistribution(format!(
                    "mass of '{l}' is {p}"
                )));
            }
        }
        let total: f64 = mass.iter().sum();
        if (total - 1.0).abs() > VALIDATION_TOL {
            return Err(Error::InvalidDistribution(format!(
                "total mass {total}, expected 1"
            )));
        }
        let mass = mass.into_iter().map(|p| p.max(0.0)).collect();
        Ok(Self { labels, mass })
    }

    pub fn uniform(labels: Vec<String>) -> Result<Self> {
        let n = labels.len();
        Self::new(labels, vec![1.0 / n as f64; n])
    }

    pub fn point_mass(labels: Vec<String>, index: usize) -> Result<Self> {
        let mut mass = vec![0.0; labels.len()];
        mass[index] = 1.0;
        Self::new(labels, mass)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn mass(&self) -> &[f64] {
        &self.mass
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn prob_of(&self, label: &str) -> f64 {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|i| self.mass[i])
            .unwrap_or(0.0)
    }
}

impl<'de> Deserialize<'de> for Distribution {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wire {
            labels: Vec<String>,
            mass: Vec<f64>,
        }
        let w = Wire::deserialize(deserializer)?;
        Distribution::new(w.labels, w.mass).map_err(serde::de::Error::custom)
    }
}

/// A joint distribution of a pair `(X, Z)` as a nonnegative matrix with
/// total mass 1; rows are values of `X`, columns values of `Z`.
#[derive(Debug, Clone, PartialEq)]
pub struct JointDistribution {
    row_labels: Vec<String>,
    col_labels: Vec<String>,
    probs: Vec<Vec<f64>>,
}

impl JointDistribution {
    pub fn new(row_labels: Vec<String>, col_labels: Vec<String>, probs: Vec<Vec<f64>>) -> Result<Self> {
        if probs.len() != row_labels.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} rows but {} row labels",
                probs.len(),
                row_labels.len()
            )));
        }
        let mut total = 0.0;
        for row in &probs {
            if row.len() != col_labels.len() {
                return Err(Error::ShapeMismatch(format!(
                    "row of width {} but {} column labels",
                    row.len(),
                    col_labels.len()
                )));
            }
            for &p in row {
                if p < -VALIDATION_TOL || !p.is_finite() {
                    return Err(Error::InvalidDistribution(format!("joint cell {p}")));
                }
                total += p.max(0.0);
            }
        }
        if (total - 1.0).abs() > VALIDATION_TOL {
            return Err(Error::InvalidDistribution(format!(
                "joint total mass {total}, expected 1"
            )));
        }
        let probs = probs
            .into_iter()
            .map(|row| row.into_iter().map(|p| p.max(0.0)).collect())
            .collect();
        Ok(Self {
            row_labels,
            col_labels,
            probs,
        })
    }

    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[String] {
        &self.col_labels
    }

    pub fn prob(&self, row: usize, col: usize) -> f64 {
        self.probs[row][col]
    }

    /// Marginal of `X` (rows).
    pub fn row_marginal(&self) -> Vec<f64> {
        self.probs.iter().map(|row| row.iter().sum()).collect()
    }

    /// Marginal of `Z` (columns).
    pub fn col_marginal(&self) -> Vec<f64> {
        let mut out = vec![0.0; self.col_labels.len()];
        for row in &self.probs {
            for (z, &p) in row.iter().enumerate() {
                out[z] += p;
            }
        }
        out
    }

    pub fn cells(&self) -> impl Iterator<Item = f64> + '_ {
        self.probs.iter().flat_map(|row| row.iter().copied())
    }
}

/// A discrete memoryless channel `W(z|x)` as a row-stochastic matrix.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Channel {
    inputs: Vec<String>,
    outputs: Vec<String>,
    matrix: Vec<Vec<f64>>,
}

impl Channel {
    pub fn new(inputs: Vec<String>, outputs: Vec<String>, matrix: Vec<Vec<f64>>) -> Result<Self> {
        if matrix.len() != inputs.len() || inputs.is_empty() {
            return Err(Error::ShapeMismatch(format!(
                "channel with {} rows for {} inputs",
                matrix.len(),
                inputs.len()
            )));
        }
        for (x, row) in matrix.iter().enumerate() {
            if row.len() != outputs.len() {
                return Err(Error::ShapeMismatch(format!(
                    "channel row {x} has width {}, expected {}",
                    row.len(),
                    outputs.len()
                )));
            }
            for &p in row {
                if p < -VALIDATION_TOL || !p.is_finite() {
                    return Err(Error::InvalidDistribution(format!(
                        "channel entry {p} in row {x}"
                    )));
                }
            }
            let sum: f64 = row.iter().sum();
            if (sum - 1.0).abs() > VALIDATION_TOL {
                return Err(Error::InvalidDistribution(format!(
                    "channel row {x} sums to {sum}"
                )));
            }
        }
        let matrix = matrix
            .into_iter()
            .map(|row| {
                let sum: f64 = row.iter().map(|p| p.max(0.0)).sum();
                row.into_iter().map(|p| p.max(0.0) / sum).collect()
            })
            .collect();
        Ok(Self {
            inputs,
            outputs,
            matrix,
        })
    }

    /// A binary symmetric channel with the given crossover probability.
    pub fn binary_symmetric(crossover: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&crossover) {
            return Err(Error::OutOfRange {
                what: "crossover probability",
                value: crossover,
            });
        }
        Self::new(
            vec!["0".into(), "1".into()],
            vec!["0".into(), "1".into()],
            vec![
                vec![1.0 - crossover, crossover],
                vec![crossover, 1.0 - crossover],
            ],
        )
    }

    pub fn num_inputs(&self) -> usize {
        self.inputs.len()
    }

    pub fn num_outputs(&self) -> usize {
        self.outputs.len()
    }

    pub fn inputs(&self) -> &[String] {
        &self.inputs
    }

    pub fn outputs(&self) -> &[String] {
        &self.outputs
    }

    pub fn prob(&self, input: usize, output: usize) -> f64 {
        self.matrix[input][output]
    }

    pub fn row(&self, input: usize) -> &[f64] {
        &self.matrix[input]
    }

    /// The joint distribution induced by an input prior.
    pub fn joint_with(&self, prior: &[f64]) -> Result<JointDistribution> {
        if prior.len() != self.inputs.len() {
            return Err(Error::ShapeMismatch(format!(
                "prior of length {} for {} inputs",
                prior.len(),
                self.inputs.len()
            )));
        }
        let probs = self
            .matrix
            .iter()
            .zip(prior)
            .map(|(row, &p)| row.iter().map(|&w| p * w).collect())
            .collect();
        JointDistribution::new(self.inputs.clone(), self.outputs.clone(), probs)
    }
}

impl<'de> Deserialize<'de> for Channel {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wire {
            inputs: Vec<String>,
            outputs: Vec<String>,
            matrix: Vec<Vec<f64>>,
        }
        let w = Wire::deserialize(deserializer)?;
        Channel::new(w.inputs, w.outputs, w.matrix).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distribution_rejects_bad_mass() {
        assert!(Distribution::new(vec!["a".into()], vec![0.9]).is_err());
        assert!(Distribution::new(vec!["a".into(), "b".into()], vec![1.2, -0.2]).is_err());
        assert!(Distribution::new(vec!["a".into(), "b".into()], vec![0.5, 0.5]).is_ok());
    }

    #[test]
    fn joint_marginals() {
        let j = JointDistribution::new(
            vec!["0".into(), "1".into()],
            vec!["0".into(), "1".into()],
            vec![vec![0.4, 0.1], vec![0.2, 0.3]],
        )
        .unwrap();
        assert_eq!(j.row_marginal(), vec![0.5, 0.5]);
        let col = j.col_marginal();
        assert!((col[0] - 0.6).abs() < 1e-15);
    }

    #[test]
    fn channel_joint() {
        let ch = Channel::binary_symmetric(0.1).unwrap();
        let j = ch.joint_with(&[0.5, 0.5]).unwrap();
        assert!((j.prob(0, 1) - 0.05).abs() < 1e-15);
    }
}
