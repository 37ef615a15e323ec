//! Young's orthogonal representation and the Young operators built from it.

use num_rational::Ratio;

use super::{
    standard_tableaux, Combination, Partition, PermsymError, Permutation, Surd, YoungTableau,
};

/// Square matrix with exact entries.
pub type SurdMatrix = Vec<Vec<Surd>>;

fn mat_mul(a: &SurdMatrix, b: &SurdMatrix) -> SurdMatrix {
    let n = a.len();
    let mut out = vec![vec![Surd::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += a[i][k] * b[k][j];
                }
            }
        }
    }
    out
}

fn mat_identity(n: usize) -> SurdMatrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Surd::one() } else { Surd::zero() })
                .collect()
        })
        .collect()
}

/// Young's orthogonal (Yamanouchi) form of the irreducible representation
/// labelled by a partition.
#[derive(Debug, Clone)]
pub struct OrthogonalRep {
    shape: Partition,
    tableaux: Vec<YoungTableau>,
    /// Matrices of the adjacent transpositions `(k, k+1)`, `k = 1..N-1`.
    generators: Vec<SurdMatrix>,
}

impl OrthogonalRep {
    pub fn new(shape: &Partition) -> Result<Self, PermsymError> {
        let n = shape.size();
        let tableaux = standard_tableaux(shape);
        let f = tableaux.len();
        let mut generators = Vec::with_capacity(n.saturating_sub(1));
        for k in 1..n {
            let mut m = vec![vec![Surd::zero(); f]; f];
            for (i, t) in tableaux.iter().enumerate() {
                let (rk, ck) = t.position(k);
                let (rk1, ck1) = t.position(k + 1);
                if rk == rk1 {
                    m[i][i] = Surd::one();
                } else if ck == ck1 {
                    m[i][i] = -Surd::one();
                } else {
                    let d = t.content(k + 1) - t.content(k);
                    m[i][i] = Surd::rational(Ratio::new(1, d));
                    let off = Surd::sqrt_rational(Ratio::new(d * d - 1, d * d))
                        .ok_or_else(|| PermsymError::UnsupportedShape(shape.clone()))?;
                    let partner = t.swapped(k);
                    let j = tableaux
                        .iter()
                        .position(|u| *u == partner)
                        .expect("swapping non-adjacent cells keeps the tableau standard");
                    m[i][j] = off;
                }
            }
            generators.push(m);
        }
        Ok(Self {
            shape: shape.clone(),
            tableaux,
            generators,
        })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn tableaux(&self) -> &[YoungTableau] {
        &self.tableaux
    }

    pub fn dimension(&self) -> usize {
        self.tableaux.len()
    }

    /// Representation matrix `Γ(p)`; a homomorphism for `Permutation::compose`.
    pub fn matrix(&self, p: &Permutation) -> SurdMatrix {
        let mut acc = mat_identity(self.dimension());
        for &k in &p.adjacent_word() {
            acc = mat_mul(&acc, &self.generators[k]);
        }
        acc
    }
}

/// Sign convention for the Young operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum YoungConvention {
    /// `ω_rs = sqrt(f/N!) Σ_g Γ_sr(g) g` for every shape.
    Standard,
    /// Shape `[2,1]` only. Matches the operators of the three-electron
    /// lithium treatment: `ω12` without normalization (twice the standard
    /// one) and `ω21` with the opposite overall sign. Spatial factors are
    /// acted on with [`YoungOperator::apply`] and spin kets with
    /// [`YoungOperator::apply_to_particles`].
    Printed,
}

/// A Young operator as an exact signed sum of permutations.
#[derive(Debug, Clone, PartialEq)]
pub struct YoungOperator {
    pub shape: Partition,
    pub r: usize,
    pub s: usize,
    pub convention: YoungConvention,
    terms: Vec<(Permutation, Surd)>,
}

impl YoungOperator {
    /// Build `ω_rs` (1-based `r`, `s`) for `shape`.
    pub fn new(
        shape: &Partition,
        r: usize,
        s: usize,
        convention: YoungConvention,
    ) -> Result<Self, PermsymError> {
        let rep = OrthogonalRep::new(shape)?;
        Self::from_rep(&rep, r, s, convention)
    }

    pub fn from_rep(
        rep: &OrthogonalRep,
        r: usize,
        s: usize,
        convention: YoungConvention,
    ) -> Result<Self, PermsymError> {
        let shape = rep.shape().clone();
        let f = rep.dimension();
        if r == 0 || s == 0 || r > f || s > f {
            return Err(PermsymError::IndexOutOfRange { r, s, dimension: f });
        }
        let n = shape.size();
        let n_fact: i64 = (1..=n as i64).product();
        let norm = Surd::sqrt_rational(Ratio::new(f as i64, n_fact))
            .ok_or_else(|| PermsymError::UnsupportedShape(shape.clone()))?;
        let factor = match convention {
            YoungConvention::Standard => Surd::one(),
            YoungConvention::Printed => {
                if shape.rows() != [2, 1] {
                    return Err(PermsymError::UnsupportedShape(shape.clone()));
                }
                match (r, s) {
                    (1, 2) => Surd::int(2),
                    (2, 1) => Surd::int(-1),
                    _ => Surd::one(),
                }
            }
        };
        let mut terms = Vec::new();
        for g in Permutation::all(n) {
            let c = rep.matrix(&g)[s - 1][r - 1] * norm * factor;
            if !c.is_zero() {
                terms.push((g, c));
            }
        }
        Ok(Self {
            shape,
            r,
            s,
            convention,
            terms,
        })
    }

    pub fn terms(&self) -> &[(Permutation, Surd)] {
        &self.terms
    }

    /// Coefficient of a permutation in the operator.
    pub fn coefficient(&self, p: &Permutation) -> Surd {
        self.terms
            .iter()
            .find(|(g, _)| g == p)
            .map(|(_, c)| *c)
            .unwrap_or_else(Surd::zero)
    }

    /// Apply the operator to a product of functions of coordinates: each
    /// permutation moves coordinates between argument slots.
    pub fn apply<T: Ord + Clone>(
        &self,
        x: &Combination<T>,
    ) -> Result<Combination<T>, PermsymError> {
        let n = self.shape.size();
        if let Some((labels, _)) = x.terms().next() {
            if labels.len() != n {
                return Err(PermsymError::DegreeMismatch {
                    operator: n,
                    state: labels.len(),
                });
            }
        }
        let mut out = Combination::zero();
        for (g, c) in &self.terms {
            for (labels, v) in x.terms() {
                out.add_term(g.apply_to_labels(labels), *c * *v);
            }
        }
        Ok(out)
    }

    /// Apply the operator to kets labelled by particle index, such as spin
    /// products `|α1 β2 α3⟩`. A permutation relabels particles here, which on
    /// the label list is the inverse of the coordinate action of [`apply`].
    ///
    /// [`apply`]: YoungOperator::apply
    pub fn apply_to_particles<T: Ord + Clone>(
        &self,
        x: &Combination<T>,
    ) -> Result<Combination<T>, PermsymError> {
        let n = self.shape.size();
        if let Some((labels, _)) = x.terms().next() {
            if labels.len() != n {
                return Err(PermsymError::DegreeMismatch {
                    operator: n,
                    state: labels.len(),
                });
            }
        }
        let mut out = Combination::zero();
        for (g, c) in &self.terms {
            let inv = g.inverse();
            for (labels, v) in x.terms() {
                out.add_term(inv.apply_to_labels(labels), *c * *v);
            }
        }
        Ok(out)
    }

    /// `sqrt(N!/f)`: the factor by which `ω_rr ω_rr` exceeds `ω_rr`.
    pub fn idempotency_factor(&self) -> Surd {
        let n = self.shape.size();
        let f = self.shape.dimension() as i64;
        let n_fact: i64 = (1..=n as i64).product();
        Surd::sqrt_rational(Ratio::new(n_fact, f)).expect("shape supported at construction")
    }
}
