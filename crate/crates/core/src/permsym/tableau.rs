use std::fmt;

use super::PermsymError;

/// A partition of `N` given by non-increasing positive row lengths.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(rows: Vec<usize>) -> Result<Self, PermsymError> {
        if rows.is_empty() || rows.contains(&0) || rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(PermsymError::InvalidPartition(rows));
        }
        Ok(Self(rows))
    }

    pub fn rows(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// All partitions of `n` in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<Self> {
        fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            for k in (1..=n.min(max)).rev() {
                prefix.push(k);
                rec(n - k, k, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Number of standard tableaux, by the hook length formula.
    pub fn dimension(&self) -> usize {
        let n = self.size();
        let mut num: u128 = (1..=n as u128).product();
        let mut hooks: u128 = 1;
        for (i, &len) in self.0.iter().enumerate() {
            for j in 0..len {
                let arm = len - j - 1;
                let leg = self.0.iter().skip(i + 1).filter(|&&l| l > j).count();
                hooks *= (arm + leg + 1) as u128;
            }
        }
        num /= hooks;
        num as usize
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|r| r.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// A standard Young tableau; entries are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct YoungTableau {
    rows: Vec<Vec<usize>>,
}

impl YoungTableau {
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// `(row, column)` of entry `k` (1-based entry, 0-based position).
    pub fn position(&self, k: usize) -> (usize, usize) {
        for (r, row) in self.rows.iter().enumerate() {
            if let Some(c) = row.iter().position(|&e| e == k) {
                return (r, c);
            }
        }
        panic!("entry {k} not in tableau");
    }

    /// Content `column - row` of entry `k`.
    pub fn content(&self, k: usize) -> i64 {
        let (r, c) = self.position(k);
        c as i64 - r as i64
    }

    /// Tableau with entries `k` and `k+1` exchanged (may be non-standard).
    pub fn swapped(&self, k: usize) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&e| {
                        if e == k {
                            k + 1
                        } else if e == k + 1 {
                            k
                        } else {
                            e
                        }
                    })
                    .collect()
            })
            .collect();
        Self { rows }
    }
}

impl fmt::Display for YoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}

/// Standard tableaux of `shape` in Yamanouchi order: the tableau with the
/// largest entry in the lowest row comes first, recursively. The first
/// tableau is therefore filled row by row.
pub fn standard_tableaux(shape: &Partition) -> Vec<YoungTableau> {
    fn rec(rows: &[usize], n: usize) -> Vec<Vec<Vec<usize>>> {
        if n == 0 {
            return vec![rows.iter().map(|_| Vec::new()).collect()];
        }
        let mut out = Vec::new();
        // Removable corners, bottom row first.
        for r in (0..rows.len()).rev() {
            let removable = rows[r] > 0 && (r + 1 == rows.len() || rows[r + 1] < rows[r]);
            if !removable {
                continue;
            }
            let mut smaller = rows.to_vec();
            smaller[r] -= 1;
            for mut t in rec(&smaller, n - 1) {
                t[r].push(n);
                out.push(t);
            }
        }
        out
    }
    rec(shape.rows(), shape.size())
        .into_iter()
        .map(|rows| YoungTableau {
            rows: rows.into_iter().filter(|r| !r.is_empty()).collect(),
        })
        .collect()
}
