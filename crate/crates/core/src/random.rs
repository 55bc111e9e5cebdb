//! Seedable generators for test instances.

use rand::Rng;

use crate::graph::{connected_components, Graph};
use crate::interval::{intersection_graph, Interval, IntervalRepresentation};
use crate::trapezoid::{Trapezoid, TrapezoidRepresentation};

/// `n` intervals with endpoints in `0..=max_coord`.
pub fn interval_representation<R: Rng>(
    rng: &mut R,
    n: usize,
    max_coord: i64,
) -> IntervalRepresentation {
    let intervals = (0..n)
        .map(|_| {
            let a = rng.gen_range(0..=max_coord);
            let b = rng.gen_range(0..=max_coord);
            Interval::new(a.min(b), a.max(b))
        })
        .collect();
    IntervalRepresentation::new(intervals).expect("ordered endpoints")
}

/// Like [`interval_representation`] but with a connected intersection graph.
/// Intervals are drawn one at a time, each starting inside the span covered
/// so far.
pub fn connected_interval_representation<R: Rng>(
    rng: &mut R,
    n: usize,
    max_coord: i64,
) -> IntervalRepresentation {
    let mut intervals: Vec<Interval> = Vec::with_capacity(n);
    let mut span: Option<(i64, i64)> = None;
    for _ in 0..n {
        let iv = match span {
            None => {
                let a = rng.gen_range(0..=max_coord);
                let b = rng.gen_range(0..=max_coord);
                Interval::new(a.min(b), a.max(b))
            }
            Some((lo, hi)) => {
                let anchor = rng.gen_range(lo..=hi);
                let other = rng.gen_range(0..=max_coord);
                Interval::new(anchor.min(other), anchor.max(other))
            }
        };
        span = Some(match span {
            None => (iv.left, iv.right),
            Some((lo, hi)) => (lo.min(iv.left), hi.max(iv.right)),
        });
        intervals.push(iv);
    }
    // Shuffle so vertex ids do not follow insertion order.
    for i in (1..n).rev() {
        intervals.swap(i, rng.gen_range(0..=i));
    }
    let r = IntervalRepresentation::new(intervals).expect("ordered endpoints");
    debug_assert!(connected_components(&intersection_graph(&r)).len() <= 1);
    r
}

/// Proper representation: lefts and rights are both nondecreasing along a
/// random vertex order, so neither order can disagree with the other.
pub fn proper_representation<R: Rng>(
    rng: &mut R,
    n: usize,
    max_step: i64,
) -> IntervalRepresentation {
    let mut pairs = Vec::with_capacity(n);
    let (mut left, mut right) = (0i64, 0i64);
    for i in 0..n {
        if i > 0 && rng.gen_bool(0.15) {
            // Exact twin of the previous interval.
            pairs.push((left, right));
            continue;
        }
        let new_left = left + rng.gen_range(if i == 0 { 0 } else { 1 }..=max_step);
        let new_right = (new_left.max(right + 1)) + rng.gen_range(0..=max_step);
        left = new_left;
        right = new_right;
        pairs.push((left, right));
    }
    let mut ids: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        ids.swap(i, rng.gen_range(0..=i));
    }
    let mut intervals = vec![Interval::new(0, 0); n];
    for (slot, &(l, r)) in ids.iter().zip(&pairs) {
        intervals[*slot] = Interval::new(l, r);
    }
    IntervalRepresentation::new(intervals).expect("ordered endpoints")
}

/// Erdős–Rényi graph `G(n, p)`.
pub fn graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, edges).expect("distinct pairs")
}

/// Random permutation of `0..n`.
pub fn permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    perm
}

/// Trapezoids with pairwise distinct endpoints on each line, so all four
/// orders are strict.
pub fn strict_trapezoid_representation<R: Rng>(rng: &mut R, n: usize) -> TrapezoidRepresentation {
    let mut line = || {
        let coords = permutation(rng, 2 * n);
        (0..n)
            .map(|v| {
                let (a, b) = (coords[2 * v] as i64, coords[2 * v + 1] as i64);
                (a.min(b), a.max(b))
            })
            .collect::<Vec<_>>()
    };
    let line0 = line();
    let line1 = line();
    let trapezoids = line0
        .into_iter()
        .zip(line1)
        .map(|((l0, r0), (l1, r1))| Trapezoid::new(l0, r0, l1, r1))
        .collect();
    TrapezoidRepresentation::new(trapezoids).expect("ordered endpoints")
}

/// Trapezoids with arbitrary (possibly tied, possibly degenerate) endpoints.
pub fn trapezoid_representation<R: Rng>(
    rng: &mut R,
    n: usize,
    max_coord: i64,
) -> TrapezoidRepresentation {
    let trapezoids = (0..n)
        .map(|_| {
            let mut iv = || {
                let a = rng.gen_range(0..=max_coord);
                let b = rng.gen_range(0..=max_coord);
                (a.min(b), a.max(b))
            };
            let (l0, r0) = iv();
            let (l1, r1) = iv();
            Trapezoid::new(l0, r0, l1, r1)
        })
        .collect();
    TrapezoidRepresentation::new(trapezoids).expect("ordered endpoints")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::is_proper;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generators_meet_their_contracts() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 0..20 {
            let r = connected_interval_representation(&mut rng, n, 100);
            assert!(connected_components(&intersection_graph(&r)).len() <= 1);
            assert!(is_proper(&proper_representation(&mut rng, n, 6)));
            let t = strict_trapezoid_representation(&mut rng, n);
            assert!(t.orders().all().iter().all(|o| o.is_strict()));
        }
    }
}
