use super::GraphError;

/// Traffic demand between ordered vertex pairs. Diagonal entries are ignored.
#[derive(Debug, Clone, PartialEq)]
pub enum Demand {
    /// One unit of demand for every ordered pair `s != t`.
    Uniform,
    /// Dense row-major matrix of demands; entry `(s, t)` is at `s * n + t`.
    Matrix { n: usize, entries: Vec<f64> },
}

impl Demand {
    pub fn matrix(n: usize, entries: Vec<f64>) -> Result<Self, GraphError> {
        if entries.len() != n * n {
            return Err(GraphError::DemandShapeMismatch { demand: (entries.len() as f64).sqrt() as usize, graph: n });
        }
        for (i, &value) in entries.iter().enumerate() {
            if !(value.is_finite() && value >= 0.0) {
                return Err(GraphError::InvalidDemand { s: i / n, t: i % n, value });
            }
        }
        Ok(Demand::Matrix { n, entries })
    }

    /// Demand concentrated on the row of a single source.
    pub fn single_source(n: usize, s: usize) -> Self {
        let mut entries = vec![0.0; n * n];
        for t in 0..n {
            if t != s {
                entries[s * n + t] = 1.0;
            }
        }
        Demand::Matrix { n, entries }
    }

    pub fn is_uniform(&self) -> bool {
        matches!(self, Demand::Uniform)
    }

    pub(crate) fn check(&self, n: usize) -> Result<(), GraphError> {
        match self {
            Demand::Uniform => Ok(()),
            Demand::Matrix { n: m, .. } if *m == n => Ok(()),
            Demand::Matrix { n: m, .. } => Err(GraphError::DemandShapeMismatch { demand: *m, graph: n }),
        }
    }

    #[inline]
    pub fn get(&self, s: usize, t: usize) -> f64 {
        if s == t {
            return 0.0;
        }
        match self {
            Demand::Uniform => 1.0,
            Demand::Matrix { n, entries } => entries[s * n + t],
        }
    }

    /// Total demand leaving `s`.
    pub fn row_sum(&self, s: usize, n: usize) -> f64 {
        match self {
            Demand::Uniform => n.saturating_sub(1) as f64,
            Demand::Matrix { .. } => (0..n).map(|t| self.get(s, t)).sum(),
        }
    }

    /// Total demand arriving at `t`.
    pub fn column_sum(&self, t: usize, n: usize) -> f64 {
        match self {
            Demand::Uniform => n.saturating_sub(1) as f64,
            Demand::Matrix { .. } => (0..n).map(|s| self.get(s, t)).sum(),
        }
    }
}
