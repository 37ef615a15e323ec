/// Wynn epsilon algorithm for accelerating a sequence of partial sums.
///
/// Push partial sums one at a time and read [`WynnEpsilon::estimate`], which
/// returns the latest even-column entry of the epsilon table.
#[derive(Debug, Clone, Default)]
pub struct WynnEpsilon {
    // Last row of the epsilon table, indexed by column.
    row: Vec<f64>,
    estimates: Vec<f64>,
}

impl WynnEpsilon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, partial_sum: f64) -> f64 {
        let mut new_row = Vec::with_capacity(self.row.len() + 1);
        new_row.push(partial_sum);
        for k in 0..self.row.len() {
            let prev_lower = if k == 0 { 0.0 } else { self.row[k - 1] };
            let diff = new_row[k] - self.row[k];
            let next = if diff == 0.0 || !diff.is_finite() {
                // Converged column: propagate the value instead of dividing by zero.
                f64::INFINITY
            } else {
                prev_lower + 1.0 / diff
            };
            new_row.push(next);
        }
        self.row = new_row;
        let est = self.best_even();
        self.estimates.push(est);
        est
    }

    fn best_even(&self) -> f64 {
        let last_even = if self.row.len() % 2 == 1 {
            self.row.len() - 1
        } else {
            self.row.len() - 2
        };
        let mut k = last_even;
        loop {
            let v = self.row[k];
            if v.is_finite() {
                return v;
            }
            if k < 2 {
                return self.row[0];
            }
            k -= 2;
        }
    }

    /// Most recent accelerated estimate.
    pub fn estimate(&self) -> Option<f64> {
        self.estimates.last().copied()
    }

    /// Absolute change between the last two estimates.
    pub fn last_change(&self) -> Option<f64> {
        let n = self.estimates.len();
        (n >= 2).then(|| (self.estimates[n - 1] - self.estimates[n - 2]).abs())
    }

    pub fn len(&self) -> usize {
        self.estimates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.estimates.is_empty()
    }
}
