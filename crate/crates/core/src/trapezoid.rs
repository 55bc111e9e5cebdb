//! Trapezoids spanned between two parallel lines `L0` and `L1`, their four
//! endpoint orders, and an exhaustive search over endpoint interleavings.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::interval::WeakOrder;

/// Quadrilateral with interval `[l0, r0]` on `L0` and `[l1, r1]` on `L1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Trapezoid {
    pub l0: i64,
    pub r0: i64,
    pub l1: i64,
    pub r1: i64,
}

impl Trapezoid {
    pub fn new(l0: i64, r0: i64, l1: i64, r1: i64) -> Self {
        Trapezoid { l0, r0, l1, r1 }
    }

    /// Strictly left of `other` on both lines.
    pub fn strictly_left_of(&self, other: &Trapezoid) -> bool {
        self.r0 < other.l0 && self.r1 < other.l1
    }

    /// If one trapezoid is left of the other on one line but not on the
    /// other, their legs cross; so they are disjoint exactly when one is
    /// strictly left of the other on both lines.
    pub fn intersects(&self, other: &Trapezoid) -> bool {
        !self.strictly_left_of(other) && !other.strictly_left_of(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TrapezoidRepresentation {
    trapezoids: Vec<Trapezoid>,
}

impl TrapezoidRepresentation {
    pub fn new(trapezoids: Vec<Trapezoid>) -> Result<Self> {
        for (v, t) in trapezoids.iter().enumerate() {
            for (left, right) in [(t.l0, t.r0), (t.l1, t.r1)] {
                if left > right {
                    return Err(Error::InvalidInterval {
                        vertex: v + 1,
                        left,
                        right,
                    });
                }
            }
        }
        Ok(TrapezoidRepresentation { trapezoids })
    }

    pub fn len(&self) -> usize {
        self.trapezoids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trapezoids.is_empty()
    }

    pub fn trapezoid(&self, v: usize) -> Trapezoid {
        self.trapezoids[v]
    }

    pub fn trapezoids(&self) -> &[Trapezoid] {
        &self.trapezoids
    }

    pub fn orders(&self) -> TrapezoidOrders {
        let key = |f: fn(&Trapezoid) -> i64| {
            WeakOrder::from_keys(&self.trapezoids.iter().map(f).collect::<Vec<_>>())
        };
        TrapezoidOrders {
            left0: key(|t| t.l0),
            right0: key(|t| t.r0),
            left1: key(|t| t.l1),
            right1: key(|t| t.r1),
        }
    }
}

/// The orders `<=_L^0`, `<=_R^0`, `<=_L^1`, `<=_R^1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TrapezoidOrders {
    pub left0: WeakOrder,
    pub right0: WeakOrder,
    pub left1: WeakOrder,
    pub right1: WeakOrder,
}

impl TrapezoidOrders {
    /// The same pair of interval orders on both lines.
    pub fn duplicated(left: WeakOrder, right: WeakOrder) -> Self {
        TrapezoidOrders {
            left0: left.clone(),
            right0: right.clone(),
            left1: left,
            right1: right,
        }
    }

    pub fn all(&self) -> [&WeakOrder; 4] {
        [&self.left0, &self.right0, &self.left1, &self.right1]
    }

    pub fn vertex_count(&self) -> usize {
        self.left0.len()
    }

    fn validate(&self) -> Result<()> {
        let n = self.vertex_count();
        for o in self.all() {
            if o.len() != n {
                return Err(Error::VertexSetMismatch {
                    left: n,
                    right: o.len(),
                });
            }
            o.require_strict()?;
        }
        Ok(())
    }
}

pub fn trapezoid_intersection_graph(t: &TrapezoidRepresentation) -> Graph {
    let n = t.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if t.trapezoids[u].intersects(&t.trapezoids[v]) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("pairs are distinct")
}

/// The trapezoid representation of `P5` (vertices 1..5 as 0..4) whose
/// squared graph has no representation with the same four orders.
pub fn p5_representation() -> TrapezoidRepresentation {
    TrapezoidRepresentation::new(vec![
        Trapezoid::new(0, 1, 4, 5),
        Trapezoid::new(6, 7, 3, 4),
        Trapezoid::new(4, 5, 8, 9),
        Trapezoid::new(10, 11, 6, 7),
        Trapezoid::new(8, 9, 12, 13),
    ])
    .expect("valid coordinates")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Event {
    Left(usize),
    Right(usize),
}

/// A strict sequence of `2n` endpoint events on one line.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interleaving {
    events: Vec<Event>,
}

impl Interleaving {
    pub fn events(&self) -> &[Event] {
        &self.events
    }

    /// `(left, right)` per vertex with coordinates `0..2n` by position.
    pub fn coordinates(&self) -> Vec<(i64, i64)> {
        let n = self.events.len() / 2;
        let mut coords = vec![(0, 0); n];
        for (pos, e) in self.events.iter().enumerate() {
            match *e {
                Event::Left(v) => coords[v].0 = pos as i64,
                Event::Right(v) => coords[v].1 = pos as i64,
            }
        }
        coords
    }
}

impl std::fmt::Display for Interleaving {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, e) in self.events.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            match e {
                Event::Left(v) => write!(f, "L{}", v + 1)?,
                Event::Right(v) => write!(f, "R{}", v + 1)?,
            }
        }
        Ok(())
    }
}

/// Lazily yields every merge of a left sequence and a right sequence in
/// which each vertex's left event precedes its right event. The order is
/// lexicographic with `Left` choices before `Right` choices.
#[derive(Debug, Clone)]
pub struct Interleavings {
    lefts: Vec<usize>,
    rights: Vec<usize>,
    left_pos: Vec<usize>,
    // true = a right event was taken at that step.
    choices: Vec<bool>,
    started: bool,
    done: bool,
}

impl Interleavings {
    fn counts(&self) -> (usize, usize) {
        let rights = self.choices.iter().filter(|&&r| r).count();
        (self.choices.len() - rights, rights)
    }

    fn can_take_right(&self, lefts_used: usize, rights_used: usize) -> bool {
        rights_used < self.rights.len() && self.left_pos[self.rights[rights_used]] < lefts_used
    }

    fn descend(&mut self) {
        let (mut i, mut j) = self.counts();
        let n = self.lefts.len();
        while i + j < 2 * n {
            if i < n {
                self.choices.push(false);
                i += 1;
            } else {
                debug_assert!(self.can_take_right(i, j));
                self.choices.push(true);
                j += 1;
            }
        }
    }

    fn current(&self) -> Interleaving {
        let (mut i, mut j) = (0, 0);
        let events = self
            .choices
            .iter()
            .map(|&right| {
                if right {
                    j += 1;
                    Event::Right(self.rights[j - 1])
                } else {
                    i += 1;
                    Event::Left(self.lefts[i - 1])
                }
            })
            .collect();
        Interleaving { events }
    }
}

impl Iterator for Interleavings {
    type Item = Interleaving;

    fn next(&mut self) -> Option<Interleaving> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.descend();
            return Some(self.current());
        }
        // Backtrack to the deepest left choice that could have been a right.
        while let Some(right) = self.choices.pop() {
            if !right {
                let (i, j) = self.counts();
                if self.can_take_right(i, j) {
                    self.choices.push(true);
                    self.descend();
                    return Some(self.current());
                }
            }
        }
        self.done = true;
        None
    }
}

/// All valid interleavings of two strict orders on the same vertices.
pub fn enumerate_interleavings(left: &WeakOrder, right: &WeakOrder) -> Result<Interleavings> {
    left.require_strict()?;
    right.require_strict()?;
    if left.len() != right.len() {
        return Err(Error::VertexSetMismatch {
            left: left.len(),
            right: right.len(),
        });
    }
    let lefts = left.sequence();
    let rights = right.sequence();
    let mut left_pos = vec![0; lefts.len()];
    for (pos, &v) in lefts.iter().enumerate() {
        left_pos[v] = pos;
    }
    Ok(Interleavings {
        lefts,
        rights,
        left_pos,
        choices: Vec::new(),
        started: false,
        done: false,
    })
}

/// Counts valid interleavings by testing every placement of the `n` left
/// events among `2n` positions. Independent of [`enumerate_interleavings`].
pub fn count_interleavings_brute_force(left: &WeakOrder, right: &WeakOrder) -> Result<u64> {
    left.require_strict()?;
    right.require_strict()?;
    let n = left.len();
    if right.len() != n {
        return Err(Error::VertexSetMismatch {
            left: n,
            right: right.len(),
        });
    }
    assert!(n <= 15, "brute force is limited to 15 vertices");
    let lefts = left.sequence();
    let rights = right.sequence();
    let mut count = 0;
    for mask in 0u32..(1 << (2 * n)) {
        if mask.count_ones() as usize != n {
            continue;
        }
        let mut left_at = vec![0; n];
        let mut right_at = vec![0; n];
        let (mut i, mut j) = (0, 0);
        for pos in 0..2 * n {
            if mask & (1 << pos) != 0 {
                left_at[lefts[i]] = pos;
                i += 1;
            } else {
                right_at[rights[j]] = pos;
                j += 1;
            }
        }
        if (0..n).all(|v| left_at[v] < right_at[v]) {
            count += 1;
        }
    }
    Ok(count)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    /// First realization in lexicographic (line 0, line 1) order.
    pub first_match: Option<TrapezoidRepresentation>,
    pub matches: u64,
    pub candidates: u64,
}

/// Builds the candidate whose line-0 and line-1 coordinates come from the
/// given interleavings.
pub fn representation_from_interleavings(
    line0: &Interleaving,
    line1: &Interleaving,
) -> TrapezoidRepresentation {
    let trapezoids = line0
        .coordinates()
        .into_iter()
        .zip(line1.coordinates())
        .map(|((l0, r0), (l1, r1))| Trapezoid::new(l0, r0, l1, r1))
        .collect();
    TrapezoidRepresentation { trapezoids }
}

/// Tries every pair of interleavings consistent with the four orders and
/// counts those whose trapezoid graph equals `target`.
///
/// Adjacency depends only on the relative order of endpoints, and a
/// representation with coincident endpoints can be perturbed into a strict
/// one with the same orders and intersections, so this is exhaustive.
pub fn search_representation(orders: &TrapezoidOrders, target: &Graph) -> Result<SearchOutcome> {
    orders.validate()?;
    if target.vertex_count() != orders.vertex_count() {
        return Err(Error::VertexSetMismatch {
            left: orders.vertex_count(),
            right: target.vertex_count(),
        });
    }
    let line1: Vec<Interleaving> =
        enumerate_interleavings(&orders.left1, &orders.right1)?.collect();
    let mut outcome = SearchOutcome {
        first_match: None,
        matches: 0,
        candidates: 0,
    };
    for line0 in enumerate_interleavings(&orders.left0, &orders.right0)? {
        for l1 in &line1 {
            outcome.candidates += 1;
            let candidate = representation_from_interleavings(&line0, l1);
            if trapezoid_intersection_graph(&candidate) == *target {
                outcome.matches += 1;
                if outcome.first_match.is_none() {
                    outcome.first_match = Some(candidate);
                }
            }
        }
    }
    Ok(outcome)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::graph_power;

    fn seq(s: &[usize]) -> WeakOrder {
        WeakOrder::from_sequence(s).unwrap()
    }

    #[test]
    fn p5_builtin_is_a_path() {
        assert_eq!(
            trapezoid_intersection_graph(&p5_representation()),
            Graph::path(5)
        );
    }

    #[test]
    fn p5_builtin_orders() {
        let o = p5_representation().orders();
        assert_eq!(o.left0.sequence(), vec![0, 2, 1, 4, 3]);
        assert_eq!(o.left1.sequence(), vec![1, 0, 3, 2, 4]);
        assert_eq!(o.left0, o.right0);
        assert_eq!(o.left1, o.right1);
        assert!(o.all().iter().all(|o| o.is_strict()));
    }

    #[test]
    fn disjoint_and_crossing() {
        let a = Trapezoid::new(0, 1, 0, 1);
        let b = Trapezoid::new(2, 3, 2, 3);
        assert!(!a.intersects(&b));
        let c = Trapezoid::new(0, 1, 4, 5);
        let d = Trapezoid::new(2, 3, 0, 1);
        assert!(c.intersects(&d));
    }

    #[test]
    fn degenerate_point_trapezoids() {
        let a = Trapezoid::new(1, 1, 1, 1);
        let b = Trapezoid::new(1, 1, 2, 2);
        let c = Trapezoid::new(2, 2, 2, 2);
        assert!(a.intersects(&b));
        assert!(!a.intersects(&c));
        assert!(b.intersects(&c));
    }

    #[test]
    fn single_vertex_interleaving() {
        let all: Vec<_> = enumerate_interleavings(&seq(&[0]), &seq(&[0]))
            .unwrap()
            .collect();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].events(), &[Event::Left(0), Event::Right(0)]);
    }

    #[test]
    fn two_vertex_interleavings() {
        let all: Vec<String> = enumerate_interleavings(&seq(&[0, 1]), &seq(&[0, 1]))
            .unwrap()
            .map(|i| i.to_string())
            .collect();
        assert_eq!(all, vec!["L1 L2 R1 R2", "L1 R1 L2 R2"]);
    }

    #[test]
    fn empty_interleaving() {
        let all: Vec<_> = enumerate_interleavings(&seq(&[]), &seq(&[]))
            .unwrap()
            .collect();
        assert_eq!(all.len(), 1);
        assert!(all[0].events().is_empty());
    }

    #[test]
    fn rejects_ties() {
        let tied = WeakOrder::from_keys(&[0, 0]);
        assert_eq!(
            enumerate_interleavings(&tied, &seq(&[0, 1])).err(),
            Some(Error::NonStrictOrder(1, 2))
        );
        let orders = TrapezoidOrders::duplicated(tied, seq(&[0, 1]));
        assert!(matches!(
            search_representation(&orders, &Graph::path(2)),
            Err(Error::NonStrictOrder(..))
        ));
    }

    #[test]
    fn p5_counts_match_brute_force() {
        let o = p5_representation().orders();
        for (l, r) in [(&o.left0, &o.right0), (&o.left1, &o.right1)] {
            let streamed = enumerate_interleavings(l, r).unwrap().count() as u64;
            assert_eq!(streamed, count_interleavings_brute_force(l, r).unwrap());
            // Equal left and right orders give Catalan(5) merges.
            assert_eq!(streamed, 42);
        }
    }

    #[test]
    fn p5_square_has_no_realization() {
        let orders = p5_representation().orders();
        let sq = graph_power(&Graph::path(5), 2).unwrap();
        let outcome = search_representation(&orders, &sq).unwrap();
        assert_eq!(outcome.matches, 0);
        assert_eq!(outcome.candidates, 42 * 42);
        assert!(outcome.first_match.is_none());
    }

    #[test]
    fn p5_itself_is_found() {
        let orders = p5_representation().orders();
        let outcome = search_representation(&orders, &Graph::path(5)).unwrap();
        assert!(outcome.matches >= 1);
        let found = outcome.first_match.unwrap();
        assert_eq!(trapezoid_intersection_graph(&found), Graph::path(5));
        assert_eq!(found.orders(), orders);
    }
}
