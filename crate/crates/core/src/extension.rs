//! Extending an interval representation of `G^(k-1)` to one of `G^k` with
//! the same left and right endpoint orders.
//!
//! Every interval keeps its left endpoint. A vertex `x` that has vertices at
//! distance exactly `k` starting to its right is stretched until it just
//! passes the left endpoint of the rightmost of them (the witness `u(x)`).
//! Coordinates are first normalized (no right endpoint on a left endpoint)
//! and then scaled by `s = n + 1`, so the gap after each scaled endpoint has
//! room for `n` distinct new right endpoints. Vertices stretched into the same
//! gap are placed by the dense rank of their old right endpoints, which keeps
//! `<=_R` intact including ties.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{all_distances, graph_power, Graph};
use crate::interval::{intersection_graph, normalize, Interval, IntervalRepresentation};

/// Per-vertex record of the construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TraceEntry {
    /// Vertex at distance exactly `k` with the largest left endpoint to the
    /// right of this vertex's left endpoint.
    pub witness: Option<usize>,
    pub new_right: i64,
}

/// Certificate of one extension step.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtensionTrace {
    pub k: usize,
    /// Multiplier applied to the normalized input.
    pub scale: i64,
    pub entries: Vec<TraceEntry>,
}

/// Result of one extension step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extension {
    pub representation: IntervalRepresentation,
    pub trace: ExtensionTrace,
}

/// One member of an [`iterate_powers`] chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerStep {
    pub k: usize,
    pub representation: IntervalRepresentation,
    pub trace: ExtensionTrace,
}

/// Checks that `r` realizes `expected`, reporting one offending pair.
pub fn check_realizes(r: &IntervalRepresentation, expected: &Graph) -> Result<()> {
    if r.len() != expected.vertex_count() {
        return Err(Error::VertexSetMismatch {
            left: r.len(),
            right: expected.vertex_count(),
        });
    }
    match intersection_graph(r).first_difference(expected) {
        Some((u, v, in_representation)) => Err(Error::RepresentationMismatch {
            u: u + 1,
            v: v + 1,
            in_representation,
        }),
        None => Ok(()),
    }
}

/// Extends `r`, a representation of `G^(k-1)`, to a representation of `G^k`.
pub fn extend_representation(g: &Graph, k: usize, r: &IntervalRepresentation) -> Result<Extension> {
    if k < 2 {
        return Err(Error::InvalidK { k, min: 2 });
    }
    check_realizes(r, &graph_power(g, k - 1)?)?;

    let n = g.vertex_count();
    let base = normalize(r)?;
    let scale = i64::try_from(n + 1).map_err(|_| Error::CoordinateOverflow)?;
    let scaled = base.scaled(scale)?;
    let dist = all_distances(g);

    let witness: Vec<Option<usize>> = (0..n)
        .map(|x| {
            (0..n)
                .filter(|&y| dist[x][y].is_exactly(k) && base.left(y) > base.left(x))
                // Largest left endpoint, smallest id among ties.
                .max_by_key(|&y| (base.left(y), std::cmp::Reverse(y)))
        })
        .collect();

    // Vertices whose witnesses share a left endpoint land in the same gap.
    let mut gaps: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
    for (x, w) in witness.iter().enumerate() {
        if let Some(u) = *w {
            gaps.entry(base.left(u)).or_default().push(base.right(x));
        }
    }
    for rights in gaps.values_mut() {
        rights.sort_unstable();
        rights.dedup();
    }

    let mut entries = Vec::with_capacity(n);
    let mut intervals = Vec::with_capacity(n);
    for (x, w) in witness.iter().enumerate() {
        let new_right = match *w {
            Some(u) => {
                let gap = &gaps[&base.left(u)];
                let rank = gap.binary_search(&base.right(x)).expect("right recorded") + 1;
                scaled.left(u) + rank as i64
            }
            None => scaled.right(x),
        };
        entries.push(TraceEntry {
            witness: witness[x],
            new_right,
        });
        intervals.push(Interval::new(scaled.left(x), new_right));
    }

    Ok(Extension {
        representation: IntervalRepresentation::new(intervals)?,
        trace: ExtensionTrace { k, scale, entries },
    })
}

/// Applies [`extend_representation`] for `k = 2..=k_max`, starting from a
/// representation of `g` itself.
pub fn iterate_powers(
    g: &Graph,
    r1: &IntervalRepresentation,
    k_max: usize,
) -> Result<Vec<PowerStep>> {
    if k_max < 2 {
        return Err(Error::InvalidK { k: k_max, min: 2 });
    }
    let mut chain = Vec::with_capacity(k_max - 1);
    let mut current = r1.clone();
    for k in 2..=k_max {
        let Extension {
            representation,
            trace,
        } = extend_representation(g, k, &current)?;
        current = representation.clone();
        chain.push(PowerStep {
            k,
            representation,
            trace,
        });
    }
    Ok(chain)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::endpoint_orders;

    fn rep(pairs: &[(i64, i64)]) -> IntervalRepresentation {
        IntervalRepresentation::from_pairs(pairs).unwrap()
    }

    fn pairs(r: &IntervalRepresentation) -> Vec<(i64, i64)> {
        r.intervals().iter().map(|iv| (iv.left, iv.right)).collect()
    }

    #[test]
    fn p4_square() {
        let r = rep(&[(0, 2), (1, 4), (3, 6), (5, 7)]);
        let ext = extend_representation(&Graph::path(4), 2, &r).unwrap();
        assert_eq!(
            pairs(&ext.representation),
            vec![(0, 16), (5, 26), (15, 30), (25, 35)]
        );
        let witnesses: Vec<_> = ext.trace.entries.iter().map(|e| e.witness).collect();
        assert_eq!(witnesses, vec![Some(2), Some(3), None, None]);
        assert_eq!(ext.trace.scale, 5);
        assert_eq!(
            intersection_graph(&ext.representation),
            graph_power(&Graph::path(4), 2).unwrap()
        );
        assert_eq!(endpoint_orders(&ext.representation), endpoint_orders(&r));
    }

    #[test]
    fn complete_graph_is_scaled() {
        let r = rep(&[(0, 1), (0, 1)]);
        let ext = extend_representation(&Graph::complete(2), 2, &r).unwrap();
        assert_eq!(pairs(&ext.representation), vec![(0, 3), (0, 3)]);
        assert!(ext.trace.entries.iter().all(|e| e.witness.is_none()));
    }

    #[test]
    fn p5_chain_reaches_complete() {
        let g = Graph::path(5);
        let r = rep(&[(0, 2), (1, 4), (3, 6), (5, 8), (7, 9)]);
        let chain = iterate_powers(&g, &r, 4).unwrap();
        assert_eq!(chain.len(), 3);
        for step in &chain {
            assert_eq!(
                intersection_graph(&step.representation),
                graph_power(&g, step.k).unwrap()
            );
            assert_eq!(endpoint_orders(&step.representation), endpoint_orders(&r));
        }
        assert_eq!(
            intersection_graph(&chain[2].representation),
            Graph::complete(5)
        );
    }

    #[test]
    fn point_interval_witness_keeps_right_order() {
        // x=[0,2], z=[1,4], u=[3,3]; the point interval must be stretched
        // by normalization or u would fall behind x in <=_R.
        let g = Graph::path(3);
        let r = rep(&[(0, 2), (1, 4), (3, 3)]);
        let ext = extend_representation(&g, 2, &r).unwrap();
        assert_eq!(intersection_graph(&ext.representation), Graph::complete(3));
        assert_eq!(endpoint_orders(&ext.representation), endpoint_orders(&r));
    }

    #[test]
    fn mismatch_is_reported() {
        // P4 with edge 3-4 missing.
        let r = rep(&[(0, 2), (1, 4), (3, 4), (5, 7)]);
        let err = extend_representation(&Graph::path(4), 2, &r).unwrap_err();
        assert_eq!(
            err,
            Error::RepresentationMismatch {
                u: 3,
                v: 4,
                in_representation: false
            }
        );
    }

    #[test]
    fn k_below_two() {
        let r = rep(&[(0, 1)]);
        assert_eq!(
            extend_representation(&Graph::empty(1), 1, &r),
            Err(Error::InvalidK { k: 1, min: 2 })
        );
        assert_eq!(
            iterate_powers(&Graph::empty(1), &r, 1),
            Err(Error::InvalidK { k: 1, min: 2 })
        );
    }

    #[test]
    fn vertex_count_mismatch() {
        let r = rep(&[(0, 1)]);
        assert!(matches!(
            extend_representation(&Graph::path(2), 2, &r),
            Err(Error::VertexSetMismatch { .. })
        ));
    }

    #[test]
    fn overflow_is_reported() {
        let r = rep(&[(0, i64::MAX / 2), (1, i64::MAX / 2)]);
        assert_eq!(
            extend_representation(&Graph::complete(2), 2, &r),
            Err(Error::CoordinateOverflow)
        );
    }
}
