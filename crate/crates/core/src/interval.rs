//! Interval representations and their endpoint orders.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::constraints::DifferenceSystem;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Closed integer interval `[left, right]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Interval {
    pub left: i64,
    pub right: i64,
}

impl Interval {
    pub fn new(left: i64, right: i64) -> Self {
        Interval { left, right }
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        self.left.max(other.left) <= self.right.min(other.right)
    }

    pub fn contains(&self, other: &Interval) -> bool {
        self.left <= other.left && other.right <= self.right
    }

    pub fn length(&self) -> i64 {
        self.right - self.left
    }
}

/// One closed interval per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntervalRepresentation {
    intervals: Vec<Interval>,
}

impl IntervalRepresentation {
    pub fn new(intervals: Vec<Interval>) -> Result<Self> {
        for (v, iv) in intervals.iter().enumerate() {
            if iv.left > iv.right {
                return Err(Error::InvalidInterval {
                    vertex: v + 1,
                    left: iv.left,
                    right: iv.right,
                });
            }
        }
        Ok(IntervalRepresentation { intervals })
    }

    /// Convenience constructor from `(left, right)` pairs.
    pub fn from_pairs(pairs: &[(i64, i64)]) -> Result<Self> {
        Self::new(pairs.iter().map(|&(l, r)| Interval::new(l, r)).collect())
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn interval(&self, v: usize) -> Interval {
        self.intervals[v]
    }

    pub fn left(&self, v: usize) -> i64 {
        self.intervals[v].left
    }

    pub fn right(&self, v: usize) -> i64 {
        self.intervals[v].right
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn restrict(&self, vertices: &[usize]) -> Self {
        IntervalRepresentation {
            intervals: vertices.iter().map(|&v| self.intervals[v]).collect(),
        }
    }

    /// Multiplies every coordinate by `factor`.
    pub fn scaled(&self, factor: i64) -> Result<Self> {
        let intervals = self
            .intervals
            .iter()
            .map(|iv| {
                Some(Interval::new(
                    iv.left.checked_mul(factor)?,
                    iv.right.checked_mul(factor)?,
                ))
            })
            .collect::<Option<Vec<_>>>()
            .ok_or(Error::CoordinateOverflow)?;
        Ok(IntervalRepresentation { intervals })
    }

    /// Whether some coordinate is both a right endpoint and a left endpoint.
    pub fn has_right_left_coincidence(&self) -> bool {
        let lefts: BTreeSet<i64> = self.intervals.iter().map(|iv| iv.left).collect();
        self.intervals.iter().any(|iv| lefts.contains(&iv.right))
    }
}

/// A total preorder on vertices stored as dense ranks `0..=max`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeakOrder {
    rank: Vec<usize>,
}

impl WeakOrder {
    /// Ranks vertices by `keys`; equal keys share a rank.
    pub fn from_keys<K: Ord>(keys: &[K]) -> Self {
        let mut distinct: Vec<&K> = keys.iter().collect();
        distinct.sort();
        distinct.dedup();
        let rank = keys
            .iter()
            .map(|k| distinct.binary_search(&k).expect("key present"))
            .collect();
        WeakOrder { rank }
    }

    /// Strict order listing vertices from smallest to largest.
    pub fn from_sequence(sequence: &[usize]) -> Result<Self> {
        let n = sequence.len();
        let mut rank = vec![usize::MAX; n];
        for (pos, &v) in sequence.iter().enumerate() {
            if v >= n {
                return Err(Error::InvalidVertex { vertex: v + 1, n });
            }
            if rank[v] != usize::MAX {
                return Err(Error::NonStrictOrder(v + 1, v + 1));
            }
            rank[v] = pos;
        }
        Ok(WeakOrder { rank })
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    pub fn rank(&self, v: usize) -> usize {
        self.rank[v]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.rank
    }

    pub fn compare(&self, u: usize, v: usize) -> Ordering {
        self.rank[u].cmp(&self.rank[v])
    }

    /// Vertices sorted by rank, ties broken by id.
    pub fn sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = (0..self.rank.len()).collect();
        seq.sort_by_key(|&v| (self.rank[v], v));
        seq
    }

    /// Vertex classes from lowest rank to highest.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let levels = self.rank.iter().max().map_or(0, |m| m + 1);
        let mut classes = vec![Vec::new(); levels];
        for (v, &r) in self.rank.iter().enumerate() {
            classes[r].push(v);
        }
        classes
    }

    /// Some pair of tied vertices, if any.
    pub fn tied_pair(&self) -> Option<(usize, usize)> {
        self.classes()
            .into_iter()
            .find(|c| c.len() > 1)
            .map(|c| (c[0], c[1]))
    }

    pub fn is_strict(&self) -> bool {
        self.tied_pair().is_none()
    }

    /// Fails with [`Error::NonStrictOrder`] when two vertices tie.
    pub fn require_strict(&self) -> Result<()> {
        match self.tied_pair() {
            Some((u, v)) => Err(Error::NonStrictOrder(u + 1, v + 1)),
            None => Ok(()),
        }
    }

    /// First pair `(u, v)` whose comparison differs between the two orders.
    pub fn first_disagreement(&self, other: &WeakOrder) -> Option<(usize, usize)> {
        let n = self.len().min(other.len());
        (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .find(|&(u, v)| self.compare(u, v) != other.compare(u, v))
    }
}

/// Whether the two orders compare every pair identically.
pub fn same_orders(a: &WeakOrder, b: &WeakOrder) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::VertexSetMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    // Dense ranks are canonical, so pairwise agreement is rank equality.
    Ok(a.rank == b.rank)
}

/// The left-endpoint and right-endpoint orders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndpointOrders {
    pub left: WeakOrder,
    pub right: WeakOrder,
}

pub fn endpoint_orders(r: &IntervalRepresentation) -> EndpointOrders {
    let lefts: Vec<i64> = r.intervals.iter().map(|iv| iv.left).collect();
    let rights: Vec<i64> = r.intervals.iter().map(|iv| iv.right).collect();
    EndpointOrders {
        left: WeakOrder::from_keys(&lefts),
        right: WeakOrder::from_keys(&rights),
    }
}

/// Closed intervals; touching endpoints intersect.
pub fn intersection_graph(r: &IntervalRepresentation) -> Graph {
    let n = r.len();
    // Sweep in left order; every interval starting before `u` ends is a
    // neighbour of `u`.
    let mut by_left: Vec<usize> = (0..n).collect();
    by_left.sort_by_key(|&v| (r.left(v), v));
    let mut edges = Vec::new();
    for (i, &u) in by_left.iter().enumerate() {
        let end = r.right(u);
        for &v in &by_left[i + 1..] {
            if r.left(v) > end {
                break;
            }
            edges.push((u.min(v), u.max(v)));
        }
    }
    Graph::from_edges(n, edges).expect("sweep emits each pair once")
}

/// Removes every coordinate that is both a right and a left endpoint,
/// keeping the intersection graph and both endpoint orders.
///
/// Coordinates are doubled, then each right endpoint sitting on a left
/// endpoint moves one step right. A point interval `[v, v]` counts as such a
/// coincidence on its own. Inputs without coincidences come back unchanged.
pub fn normalize(r: &IntervalRepresentation) -> Result<IntervalRepresentation> {
    if !r.has_right_left_coincidence() {
        return Ok(r.clone());
    }
    let doubled = r.scaled(2)?;
    let lefts: BTreeSet<i64> = doubled.intervals.iter().map(|iv| iv.left).collect();
    let intervals = doubled
        .intervals
        .iter()
        .map(|iv| {
            if lefts.contains(&iv.right) {
                // Doubled values are even, so right + 1 is never occupied.
                Interval::new(iv.left, iv.right + 1)
            } else {
                *iv
            }
        })
        .collect();
    Ok(IntervalRepresentation { intervals })
}

/// Proper means `<=_L` and `<=_R` coincide.
pub fn is_proper(r: &IntervalRepresentation) -> bool {
    let orders = endpoint_orders(r);
    orders.left == orders.right
}

/// A pair `(outer, inner)` where `outer` properly contains `inner`.
pub fn containment_witness(r: &IntervalRepresentation) -> Option<(usize, usize)> {
    let orders = endpoint_orders(r);
    let (u, v) = orders.left.first_disagreement(&orders.right)?;
    // Any disagreement between the two orders is a proper containment.
    if r.interval(u).contains(&r.interval(v)) {
        Some((u, v))
    } else {
        Some((v, u))
    }
}

/// Converts a proper representation into one where every interval has
/// length `n^2`, with the same graph and endpoint orders.
///
/// Left endpoints solve a difference system over the common order:
/// adjacent pairs lie within `U` of each other, non-adjacent pairs at least
/// `U + 1` apart, strictly ordered pairs at least 1 apart, tied pairs equal.
/// The system is posed on negated positions so the shortest-path solution is
/// the leftmost packing; it is shifted so the smallest left endpoint is 0.
pub fn proper_to_unit(r: &IntervalRepresentation) -> Result<IntervalRepresentation> {
    if let Some((outer, inner)) = containment_witness(r) {
        return Err(Error::NotProper {
            outer: outer + 1,
            inner: inner + 1,
        });
    }
    let n = r.len();
    let unit = i64::try_from(n)
        .ok()
        .and_then(|n| n.checked_mul(n))
        .ok_or(Error::CoordinateOverflow)?;
    let g = intersection_graph(r);
    let order = endpoint_orders(r).left;
    let seq = order.sequence();

    // Variable v holds -f(v); f(b) - f(a) <= w becomes x[a] - x[b] <= w.
    let mut system = DifferenceSystem::new(n);
    for (i, &a) in seq.iter().enumerate() {
        for &b in &seq[i + 1..] {
            match order.compare(a, b) {
                Ordering::Equal => system.equal(a, b),
                _ => {
                    system.at_least(a, b, 1);
                    if g.has_edge(a, b) {
                        system.at_most(a, b, unit);
                    } else {
                        system.at_least(a, b, unit + 1);
                    }
                }
            }
        }
    }
    let negated = system.solve()?;
    let min = negated.iter().map(|&x| -x).min().unwrap_or(0);
    let intervals = negated
        .iter()
        .map(|&x| {
            let left = (-x).checked_sub(min)?;
            Some(Interval::new(left, left.checked_add(unit)?))
        })
        .collect::<Option<Vec<_>>>()
        .ok_or(Error::CoordinateOverflow)?;
    Ok(IntervalRepresentation { intervals })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rep(pairs: &[(i64, i64)]) -> IntervalRepresentation {
        IntervalRepresentation::from_pairs(pairs).unwrap()
    }

    fn pairs(r: &IntervalRepresentation) -> Vec<(i64, i64)> {
        r.intervals().iter().map(|iv| (iv.left, iv.right)).collect()
    }

    #[test]
    fn rejects_reversed_interval() {
        assert_eq!(
            IntervalRepresentation::from_pairs(&[(0, 1), (3, 2)]),
            Err(Error::InvalidInterval {
                vertex: 2,
                left: 3,
                right: 2
            })
        );
    }

    #[test]
    fn intersection_graph_examples() {
        let g = intersection_graph(&rep(&[(0, 2), (1, 4), (3, 6), (5, 7)]));
        assert_eq!(g, Graph::path(4));
        assert_eq!(intersection_graph(&rep(&[(0, 1), (1, 2)])), Graph::path(2));
        assert_eq!(intersection_graph(&rep(&[(0, 1)])), Graph::empty(1));
    }

    #[test]
    fn endpoint_order_examples() {
        let o = endpoint_orders(&rep(&[(0, 2), (1, 4), (3, 6)]));
        assert_eq!(o.left.ranks(), &[0, 1, 2]);
        assert_eq!(o.right.ranks(), &[0, 1, 2]);

        let o = endpoint_orders(&rep(&[(0, 2), (0, 3)]));
        assert_eq!(o.left.compare(0, 1), Ordering::Equal);
        assert_eq!(o.right.compare(0, 1), Ordering::Less);

        let o = endpoint_orders(&rep(&[(0, 5), (1, 2)]));
        assert_eq!(o.left.compare(0, 1), Ordering::Less);
        assert_eq!(o.right.compare(0, 1), Ordering::Greater);
    }

    #[test]
    fn same_orders_examples() {
        let strict = WeakOrder::from_keys(&[0, 1]);
        let tied = WeakOrder::from_keys(&[0, 0]);
        assert!(same_orders(&strict, &WeakOrder::from_keys(&[5, 9])).unwrap());
        assert!(!same_orders(&tied, &strict).unwrap());
        assert_eq!(
            same_orders(&strict, &WeakOrder::from_keys(&[0, 1, 2])),
            Err(Error::VertexSetMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn weak_order_ranks_are_dense() {
        let o = WeakOrder::from_keys(&[40, -3, 40, 7]);
        assert_eq!(o.ranks(), &[2, 0, 2, 1]);
        assert_eq!(o.sequence(), vec![1, 3, 0, 2]);
        assert_eq!(o.tied_pair(), Some((0, 2)));
        assert_eq!(o.require_strict(), Err(Error::NonStrictOrder(1, 3)));
    }

    #[test]
    fn normalize_examples() {
        let r = rep(&[(0, 1), (3, 4)]);
        assert_eq!(normalize(&r).unwrap(), r);
        assert_eq!(
            pairs(&normalize(&rep(&[(0, 2), (2, 4)])).unwrap()),
            vec![(0, 5), (4, 8)]
        );
        assert_eq!(
            pairs(&normalize(&rep(&[(0, 2), (2, 3), (2, 5)])).unwrap()),
            vec![(0, 5), (4, 6), (4, 10)]
        );
    }

    #[test]
    fn normalize_point_intervals() {
        let r = rep(&[(0, 2), (1, 4), (3, 3)]);
        let out = normalize(&r).unwrap();
        assert_eq!(pairs(&out), vec![(0, 4), (2, 8), (6, 7)]);
        assert!(!out.has_right_left_coincidence());
        assert_eq!(intersection_graph(&out), intersection_graph(&r));
        assert_eq!(endpoint_orders(&out), endpoint_orders(&r));
    }

    #[test]
    fn normalize_overflow() {
        let r = rep(&[(0, i64::MAX / 2 + 1), (i64::MAX / 2 + 1, i64::MAX / 2 + 1)]);
        assert_eq!(normalize(&r), Err(Error::CoordinateOverflow));
    }

    #[test]
    fn proper_examples() {
        assert!(is_proper(&rep(&[(0, 2), (1, 3)])));
        assert!(!is_proper(&rep(&[(0, 5), (1, 2)])));
        assert!(is_proper(&rep(&[(0, 2), (0, 2)])));
        assert_eq!(containment_witness(&rep(&[(0, 5), (1, 2)])), Some((0, 1)));
        assert_eq!(containment_witness(&rep(&[(1, 2), (0, 2)])), Some((1, 0)));
    }

    #[test]
    fn unit_two_vertices() {
        let out = proper_to_unit(&rep(&[(0, 2), (1, 3)])).unwrap();
        assert_eq!(pairs(&out), vec![(0, 4), (1, 5)]);
    }

    #[test]
    fn unit_three_vertices() {
        let input = rep(&[(0, 2), (1, 3), (3, 5)]);
        let out = proper_to_unit(&input).unwrap();
        assert_eq!(pairs(&out), vec![(0, 9), (1, 10), (10, 19)]);
        assert_eq!(intersection_graph(&out), intersection_graph(&input));
        assert_eq!(endpoint_orders(&out), endpoint_orders(&input));
    }

    #[test]
    fn unit_twins_stay_equal() {
        let out = proper_to_unit(&rep(&[(0, 2), (0, 2)])).unwrap();
        assert_eq!(pairs(&out), vec![(0, 4), (0, 4)]);
    }

    #[test]
    fn unit_rejects_improper() {
        assert_eq!(
            proper_to_unit(&rep(&[(0, 5), (1, 2)])),
            Err(Error::NotProper { outer: 1, inner: 2 })
        );
    }

    #[test]
    fn unit_empty() {
        assert!(proper_to_unit(&rep(&[])).unwrap().is_empty());
    }
}
