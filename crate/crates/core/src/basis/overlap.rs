use crate::permsym::Permutation;

use super::BasisError;

/// Truncated overlap model: `(Φ_m^(p)|Φ_n^(p')) = δ_mn S_n^(p^-1 p')`, with
/// one overlap per state and relative permutation.
#[derive(Debug, Clone, PartialEq)]
pub struct OverlapModel {
    group: Vec<Permutation>,
    parities: Vec<i32>,
    values: Vec<Vec<f64>>,
}

impl OverlapModel {
    pub fn new(
        group: Vec<Permutation>,
        parities: Vec<i32>,
        values: Vec<Vec<f64>>,
    ) -> Result<Self, BasisError> {
        if parities.len() != group.len() {
            return Err(BasisError::DimensionMismatch {
                expected: group.len(),
                got: parities.len(),
            });
        }
        for row in &values {
            if row.len() != group.len() {
                return Err(BasisError::DimensionMismatch {
                    expected: group.len(),
                    got: row.len(),
                });
            }
        }
        Ok(Self {
            group,
            parities,
            values,
        })
    }

    /// Overlaps of orbital products: state `n` occupies slot `j` with
    /// `orbitals[n][j]`, a permutation moves coordinates between slots, and
    /// `S^(p) = Π_j s(o_j, o_{p(j)})` for a one-electron overlap `s`.
    pub fn from_orbital_products<L, F>(
        group: Vec<Permutation>,
        orbitals: &[Vec<L>],
        one_electron: F,
    ) -> Result<Self, BasisError>
    where
        L: Clone,
        F: Fn(&L, &L) -> f64,
    {
        let parities = group.iter().map(|g| g.sign()).collect();
        let values = orbitals
            .iter()
            .map(|occ| {
                group
                    .iter()
                    .map(|g| {
                        let moved = g.apply_to_labels(occ);
                        occ.iter()
                            .zip(&moved)
                            .map(|(a, b)| one_electron(a, b))
                            .product()
                    })
                    .collect()
            })
            .collect();
        Self::new(group, parities, values)
    }

    pub fn group(&self) -> &[Permutation] {
        &self.group
    }

    pub fn parity(&self, p: usize) -> i32 {
        self.parities[p]
    }

    pub fn state_count(&self) -> usize {
        self.values.len()
    }

    /// `S_n^(p)` for group element index `p`.
    pub fn value(&self, n: usize, p: usize) -> f64 {
        self.values[n][p]
    }

    /// `f_n = Σ_p (-1)^{g_p} S_n^(p)`.
    pub fn normalization(&self, n: usize) -> Result<f64, BasisError> {
        let row = self.values.get(n).ok_or(BasisError::StateOutOfRange {
            index: n,
            count: self.values.len(),
        })?;
        let f: f64 = row
            .iter()
            .zip(&self.parities)
            .map(|(s, &g)| g as f64 * s)
            .sum();
        let scale: f64 = row.iter().map(|s| s.abs()).sum::<f64>().max(1.0);
        if f.abs() <= 1e-12 * scale {
            return Err(BasisError::ZeroNormalization { state: n });
        }
        Ok(f)
    }
}
