use std::collections::BTreeMap;
use std::fmt;

use super::{Permutation, Surd};

/// Exact linear combination of product states, each product given by the
/// label (orbital, spin, ...) occupying every particle slot.
#[derive(Clone, PartialEq, Eq)]
pub struct Combination<T: Ord> {
    terms: BTreeMap<Vec<T>, Surd>,
}

impl<T: Ord + Clone> Default for Combination<T> {
    fn default() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
}

impl<T: Ord + Clone> Combination<T> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn product(labels: Vec<T>) -> Self {
        let mut c = Self::zero();
        c.add_term(labels, Surd::one());
        c
    }

    pub fn add_term(&mut self, labels: Vec<T>, coeff: Surd) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&labels) {
            Some(v) => {
                *v += coeff;
                if v.is_zero() {
                    self.terms.remove(&labels);
                }
            }
            None => {
                self.terms.insert(labels, coeff);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<T>, &Surd)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, labels: &[T]) -> Surd {
        self.terms.get(labels).copied().unwrap_or_else(Surd::zero)
    }

    pub fn scale(&self, s: Surd) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.add_term(k.clone(), *v * s);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), *v);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-Surd::one()))
    }

    /// Act with a single permutation.
    pub fn permute(&self, p: &Permutation) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.add_term(p.apply_to_labels(k), *v);
        }
        out
    }

    /// Inner product when distinct labels are orthonormal.
    pub fn inner_orthonormal(&self, other: &Self) -> Surd {
        let mut s = Surd::zero();
        for (k, v) in &self.terms {
            if let Some(w) = other.terms.get(k) {
                s += *v * *w;
            }
        }
        s
    }

    /// Inner product from a one-particle overlap `S(a, b)` between labels.
    pub fn inner_with<F: Fn(&T, &T) -> f64>(&self, other: &Self, overlap: F) -> f64 {
        let mut s = 0.0;
        for (ka, va) in &self.terms {
            for (kb, vb) in &other.terms {
                let prod: f64 = ka.iter().zip(kb).map(|(a, b)| overlap(a, b)).product();
                s += va.to_f64() * vb.to_f64() * prod;
            }
        }
        s
    }
}

impl<T: Ord + Clone + fmt::Display> fmt::Display for Combination<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, v)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let labels: String = k.iter().map(|l| l.to_string()).collect();
            write!(f, "({v})|{labels}⟩")?;
        }
        Ok(())
    }
}

impl<T: Ord + Clone + fmt::Display> fmt::Debug for Combination<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// One-electron spin state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Spin {
    Alpha,
    Beta,
}

impl fmt::Display for Spin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            match self {
                Spin::Alpha => "α",
                Spin::Beta => "β",
            }
        )
    }
}

/// Exact linear combination of spin products such as `|αβα⟩`.
pub type SpinFunction = Combination<Spin>;

impl SpinFunction {
    /// Parse `"aba"` or `"αβα"` into a single spin product.
    pub fn parse(s: &str) -> Option<Self> {
        let labels: Option<Vec<Spin>> = s
            .chars()
            .map(|c| match c {
                'a' | 'α' => Some(Spin::Alpha),
                'b' | 'β' => Some(Spin::Beta),
                _ => None,
            })
            .collect();
        labels.filter(|l| !l.is_empty()).map(Self::product)
    }
}
