use std::fmt;

use super::PermsymError;

/// A permutation of `{1..N}`, stored 0-based as the list of images.
///
/// Acting on a product function, `P` moves the coordinate in argument slot
/// `a` to slot `P(a)`: the cycle `P123` sends the coordinate of electron 1 to
/// slot 2, of electron 2 to slot 3 and of electron 3 to slot 1. On a list of
/// per-slot labels this reads `L'[m] = L[P(m)]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, PermsymError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(PermsymError::NotAPermutation(images.clone()));
            }
            seen[i] = true;
        }
        Ok(Self { images })
    }

    /// Cycle given with 1-based labels, e.g. `cycle(3, &[1, 2, 3])` is `P123`.
    pub fn cycle(n: usize, labels: &[usize]) -> Result<Self, PermsymError> {
        let mut images: Vec<usize> = (0..n).collect();
        for (k, &l) in labels.iter().enumerate() {
            let next = labels[(k + 1) % labels.len()];
            if l == 0 || l > n || next == 0 || next > n {
                return Err(PermsymError::NotAPermutation(labels.to_vec()));
            }
            images[l - 1] = next - 1;
        }
        Self::from_images(images)
    }

    /// Parse `e`, `P12`, `P123`, ... (1-based single-digit cycle labels).
    pub fn parse(n: usize, s: &str) -> Result<Self, PermsymError> {
        let s = s.trim();
        if s == "e" || s == "1" {
            return Ok(Self::identity(n));
        }
        let digits = s
            .strip_prefix('P')
            .ok_or_else(|| PermsymError::Parse(s.to_string()))?;
        let labels: Option<Vec<usize>> = digits
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as usize))
            .collect();
        let labels = labels.ok_or_else(|| PermsymError::Parse(s.to_string()))?;
        Self::cycle(n, &labels)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &p) in self.images.iter().enumerate() {
            inv[p] = i;
        }
        Self { images: inv }
    }

    /// `+1` for even, `-1` for odd permutations.
    pub fn sign(&self) -> i32 {
        let mut visited = vec![false; self.images.len()];
        let mut transpositions = 0;
        for start in 0..self.images.len() {
            let mut len = 0;
            let mut i = start;
            while !visited[i] {
                visited[i] = true;
                i = self.images[i];
                len += 1;
            }
            if len > 0 {
                transpositions += len - 1;
            }
        }
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// All permutations of `n` objects in lexicographic order of images.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            out.push(Self {
                images: cur.clone(),
            });
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1))
                .rev()
                .find(|&i| cur[i] < cur[i + 1])
            else {
                break;
            };
            let j = (i + 1..n)
                .rev()
                .find(|&j| cur[j] > cur[i])
                .expect("successor exists");
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }

    /// Word in adjacent transpositions `s_k = (k, k+1)` (0-based `k`) with
    /// `self = s_{w[0]} ∘ s_{w[1]} ∘ ...`.
    pub fn adjacent_word(&self) -> Vec<usize> {
        let mut cur = self.images.clone();
        let mut rev_word = Vec::new();
        while let Some(i) = (0..cur.len().saturating_sub(1)).find(|&i| cur[i] > cur[i + 1]) {
            // cur = cur' ∘ s_i with cur' = cur ∘ s_i having one inversion fewer
            cur.swap(i, i + 1);
            rev_word.push(i);
        }
        rev_word.reverse();
        rev_word
    }

    /// Relabel slots: `L'[m] = L[P(m)]`.
    pub fn apply_to_labels<T: Clone>(&self, labels: &[T]) -> Vec<T> {
        self.images.iter().map(|&p| labels[p].clone()).collect()
    }

    /// Disjoint-cycle form with 1-based labels, fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut visited = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if visited[start] || self.images[start] == start {
                visited[start] = true;
                continue;
            }
            let mut cyc = Vec::new();
            let mut i = start;
            while !visited[i] {
                visited[i] = true;
                cyc.push(i + 1);
                i = self.images[i];
            }
            out.push(cyc);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "e");
        }
        for (k, c) in cycles.iter().enumerate() {
            if k > 0 {
                write!(f, "·")?;
            }
            write!(f, "P")?;
            for l in c {
                write!(f, "{l}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
