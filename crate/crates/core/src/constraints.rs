//! Systems of difference constraints `x_j - x_i <= w` over the integers,
//! solved by Bellman-Ford relaxation from a virtual source.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Constraint {
    from: usize,
    to: usize,
    weight: i64,
}

#[derive(Debug, Clone, Default)]
pub struct DifferenceSystem {
    variables: usize,
    constraints: Vec<Constraint>,
}

impl DifferenceSystem {
    pub fn new(variables: usize) -> Self {
        DifferenceSystem {
            variables,
            constraints: Vec::new(),
        }
    }

    pub fn variable_count(&self) -> usize {
        self.variables
    }

    pub fn constraint_count(&self) -> usize {
        self.constraints.len()
    }

    /// `x[to] - x[from] <= weight`
    pub fn at_most(&mut self, to: usize, from: usize, weight: i64) {
        assert!(to < self.variables && from < self.variables);
        self.constraints.push(Constraint { from, to, weight });
    }

    /// `x[to] - x[from] >= weight`
    pub fn at_least(&mut self, to: usize, from: usize, weight: i64) {
        self.at_most(from, to, -weight);
    }

    /// `x[a] == x[b]`
    pub fn equal(&mut self, a: usize, b: usize) {
        self.at_most(a, b, 0);
        self.at_most(b, a, 0);
    }

    /// Shortest-path distances from a virtual source joined to every variable
    /// by a 0-weight edge. Every component of the result is `<= 0`, and the
    /// result is the componentwise largest such solution.
    pub fn solve(&self) -> Result<Vec<i64>> {
        let mut dist = vec![0i64; self.variables];
        // The virtual source adds one vertex, so `variables + 1` rounds
        // suffice; one more round detects a negative cycle.
        for _ in 0..=self.variables {
            let mut changed = false;
            for c in &self.constraints {
                let candidate = dist[c.from]
                    .checked_add(c.weight)
                    .ok_or(Error::CoordinateOverflow)?;
                if candidate < dist[c.to] {
                    dist[c.to] = candidate;
                    changed = true;
                }
            }
            if !changed {
                return Ok(dist);
            }
        }
        Err(Error::InfeasibleConstraints)
    }

    pub fn is_satisfied_by(&self, x: &[i64]) -> bool {
        x.len() == self.variables
            && self
                .constraints
                .iter()
                .all(|c| x[c.to] - x[c.from] <= c.weight)
    }
}
