//! Line-oriented text formats. All vertex ids are 1-indexed on disk.
//!
//! * graph: `n m`, then `m` lines `u v` with `1 <= u < v <= n`
//! * interval representation: `n`, then `n` lines `v l r`
//! * extension trace: `k s`, then `n` lines `x u r`, `u = -` when absent
//! * trapezoid representation: `n`, then `n` lines `v l0 r0 l1 r1`
//! * orders: four lines `L0: ...`, `R0: ...`, `L1: ...`, `R1: ...`
//!
//! Blank lines are ignored by the readers. Writers end every line with `\n`.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::extension::{ExtensionTrace, TraceEntry};
use crate::graph::Graph;
use crate::interval::{Interval, IntervalRepresentation, WeakOrder};
use crate::trapezoid::{Trapezoid, TrapezoidOrders, TrapezoidRepresentation};

struct Lines<'a> {
    inner: std::vec::IntoIter<(usize, &'a str)>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let lines: Vec<_> = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .collect();
        Lines {
            inner: lines.into_iter(),
        }
    }

    /// Next non-blank line as (1-based line number, fields).
    fn next_fields(&mut self, what: &str) -> Result<(usize, Vec<&'a str>)> {
        match self.inner.next() {
            Some((i, line)) => Ok((i + 1, line.split_whitespace().collect())),
            None => Err(Error::parse(
                0,
                format!("unexpected end of input, expected {what}"),
            )),
        }
    }

    fn expect_end(&mut self) -> Result<()> {
        match self.inner.next() {
            Some((i, _)) => Err(Error::parse(i + 1, "unexpected trailing line")),
            None => Ok(()),
        }
    }
}

fn field<T: FromStr>(line: usize, fields: &[&str], idx: usize, what: &str) -> Result<T> {
    let raw = fields
        .get(idx)
        .ok_or_else(|| Error::parse(line, format!("missing {what}")))?;
    raw.parse()
        .map_err(|_| Error::parse(line, format!("invalid {what} `{raw}`")))
}

fn arity(line: usize, fields: &[&str], expected: usize) -> Result<()> {
    if fields.len() != expected {
        return Err(Error::parse(
            line,
            format!("expected {expected} fields, found {}", fields.len()),
        ));
    }
    Ok(())
}

/// 1-indexed id to internal index.
fn vertex_id(line: usize, raw: usize, n: usize) -> Result<usize> {
    if raw == 0 || raw > n {
        return Err(Error::parse(
            line,
            format!("vertex {raw} out of range 1..={n}"),
        ));
    }
    Ok(raw - 1)
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = Lines::new(text);
    let (ln, header) = lines.next_fields("header `n m`")?;
    arity(ln, &header, 2)?;
    let n: usize = field(ln, &header, 0, "vertex count")?;
    let m: usize = field(ln, &header, 1, "edge count")?;
    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::new();
    for _ in 0..m {
        let (ln, f) = lines.next_fields("edge line")?;
        arity(ln, &f, 2)?;
        let u: usize = field(ln, &f, 0, "vertex")?;
        let v: usize = field(ln, &f, 1, "vertex")?;
        if u == v {
            return Err(Error::parse(ln, format!("self-loop at vertex {u}")));
        }
        let (a, b) = (vertex_id(ln, u, n)?, vertex_id(ln, v, n)?);
        if u > v {
            return Err(Error::parse(
                ln,
                format!("edge `{u} {v}` must list the smaller id first"),
            ));
        }
        if !seen.insert((a, b)) {
            return Err(Error::parse(ln, format!("duplicate edge {u}-{v}")));
        }
        edges.push((a, b));
    }
    lines.expect_end()?;
    Graph::from_edges(n, edges)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", u + 1, v + 1);
    }
    out
}

/// Reads `n` vertex records, each appearing exactly once.
fn parse_vertex_records<'a, T>(
    lines: &mut Lines<'a>,
    n: usize,
    width: usize,
    mut parse: impl FnMut(usize, &[&'a str]) -> Result<T>,
) -> Result<Vec<T>> {
    let mut slots: Vec<Option<T>> = (0..n).map(|_| None).collect();
    for _ in 0..n {
        let (ln, f) = lines.next_fields("vertex line")?;
        arity(ln, &f, width)?;
        let raw: usize = field(ln, &f, 0, "vertex")?;
        let v = vertex_id(ln, raw, n)?;
        if slots[v].is_some() {
            return Err(Error::parse(ln, format!("vertex {raw} listed twice")));
        }
        slots[v] = Some(parse(ln, &f)?);
    }
    lines.expect_end()?;
    Ok(slots
        .into_iter()
        .map(|s| s.expect("all n vertices seen"))
        .collect())
}

pub fn parse_representation(text: &str) -> Result<IntervalRepresentation> {
    let mut lines = Lines::new(text);
    let (ln, header) = lines.next_fields("header `n`")?;
    arity(ln, &header, 1)?;
    let n: usize = field(ln, &header, 0, "vertex count")?;
    let intervals = parse_vertex_records(&mut lines, n, 3, |ln, f| {
        let left: i64 = field(ln, f, 1, "left endpoint")?;
        let right: i64 = field(ln, f, 2, "right endpoint")?;
        if left > right {
            return Err(Error::parse(
                ln,
                format!("left endpoint {left} exceeds right endpoint {right}"),
            ));
        }
        Ok(Interval::new(left, right))
    })?;
    IntervalRepresentation::new(intervals)
}

pub fn write_representation(r: &IntervalRepresentation) -> String {
    let mut out = format!("{}\n", r.len());
    for (v, iv) in r.intervals().iter().enumerate() {
        let _ = writeln!(out, "{} {} {}", v + 1, iv.left, iv.right);
    }
    out
}

pub fn parse_trace(text: &str) -> Result<ExtensionTrace> {
    let mut lines = Lines::new(text);
    let (ln, header) = lines.next_fields("header `k s`")?;
    arity(ln, &header, 2)?;
    let k: usize = field(ln, &header, 0, "power")?;
    let scale: i64 = field(ln, &header, 1, "scale")?;
    // The vertex count is implied by the number of remaining lines.
    let rest: Vec<(usize, Vec<&str>)> = std::iter::from_fn(|| lines.next_fields("").ok()).collect();
    let n = rest.len();
    let mut entries: Vec<Option<TraceEntry>> = vec![None; n];
    for (ln, f) in rest {
        arity(ln, &f, 3)?;
        let raw: usize = field(ln, &f, 0, "vertex")?;
        let x = vertex_id(ln, raw, n)?;
        let witness = match f[1] {
            "-" => None,
            _ => Some(vertex_id(ln, field(ln, &f, 1, "witness")?, n)?),
        };
        let new_right: i64 = field(ln, &f, 2, "new right endpoint")?;
        if entries[x]
            .replace(TraceEntry { witness, new_right })
            .is_some()
        {
            return Err(Error::parse(ln, format!("vertex {raw} listed twice")));
        }
    }
    Ok(ExtensionTrace {
        k,
        scale,
        entries: entries
            .into_iter()
            .map(|e| e.expect("n distinct ids"))
            .collect(),
    })
}

pub fn write_trace(t: &ExtensionTrace) -> String {
    let mut out = format!("{} {}\n", t.k, t.scale);
    for (x, e) in t.entries.iter().enumerate() {
        match e.witness {
            Some(u) => {
                let _ = writeln!(out, "{} {} {}", x + 1, u + 1, e.new_right);
            }
            None => {
                let _ = writeln!(out, "{} - {}", x + 1, e.new_right);
            }
        }
    }
    out
}

pub fn parse_trapezoids(text: &str) -> Result<TrapezoidRepresentation> {
    let mut lines = Lines::new(text);
    let (ln, header) = lines.next_fields("header `n`")?;
    arity(ln, &header, 1)?;
    let n: usize = field(ln, &header, 0, "vertex count")?;
    let trapezoids = parse_vertex_records(&mut lines, n, 5, |ln, f| {
        let c: [i64; 4] = [
            field(ln, f, 1, "l0")?,
            field(ln, f, 2, "r0")?,
            field(ln, f, 3, "l1")?,
            field(ln, f, 4, "r1")?,
        ];
        if c[0] > c[1] || c[2] > c[3] {
            return Err(Error::parse(ln, "left endpoint exceeds right endpoint"));
        }
        Ok(Trapezoid::new(c[0], c[1], c[2], c[3]))
    })?;
    TrapezoidRepresentation::new(trapezoids)
}

pub fn write_trapezoids(t: &TrapezoidRepresentation) -> String {
    let mut out = format!("{}\n", t.len());
    for (v, z) in t.trapezoids().iter().enumerate() {
        let _ = writeln!(out, "{} {} {} {} {}", v + 1, z.l0, z.r0, z.l1, z.r1);
    }
    out
}

const ORDER_LABELS: [&str; 4] = ["L0:", "R0:", "L1:", "R1:"];

pub fn parse_orders(text: &str) -> Result<TrapezoidOrders> {
    let mut lines = Lines::new(text);
    let mut orders = Vec::with_capacity(4);
    let mut n = None;
    for label in ORDER_LABELS {
        let (ln, f) = lines.next_fields(label)?;
        if f.first() != Some(&label) {
            return Err(Error::parse(
                ln,
                format!("expected line starting with `{label}`"),
            ));
        }
        let ids = &f[1..];
        let count = *n.get_or_insert(ids.len());
        if ids.len() != count {
            return Err(Error::parse(
                ln,
                format!("order lists {} vertices, expected {count}", ids.len()),
            ));
        }
        let mut sequence = Vec::with_capacity(count);
        for i in 0..ids.len() {
            sequence.push(vertex_id(ln, field(ln, ids, i, "vertex")?, count)?);
        }
        let order = WeakOrder::from_sequence(&sequence)
            .map_err(|_| Error::parse(ln, "order must list every vertex exactly once"))?;
        orders.push(order);
    }
    lines.expect_end()?;
    let mut it = orders.into_iter();
    let mut next = || it.next().expect("four orders");
    Ok(TrapezoidOrders {
        left0: next(),
        right0: next(),
        left1: next(),
        right1: next(),
    })
}

fn order_line(out: &mut String, label: &str, order: &WeakOrder) {
    out.push_str(label);
    for v in order.sequence() {
        let _ = write!(out, " {}", v + 1);
    }
    out.push('\n');
}

/// Writes strict orders; tied vertices are listed by id.
pub fn write_orders(o: &TrapezoidOrders) -> String {
    let mut out = String::new();
    for (label, order) in ORDER_LABELS.iter().zip(o.all()) {
        order_line(&mut out, label, order);
    }
    out
}

/// `a < b = c < d` rendering of a weak order, 1-indexed.
pub fn display_weak_order(order: &WeakOrder) -> String {
    order
        .classes()
        .iter()
        .map(|class| {
            class
                .iter()
                .map(|v| (v + 1).to_string())
                .collect::<Vec<_>>()
                .join(" = ")
        })
        .collect::<Vec<_>>()
        .join(" < ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trapezoid::p5_representation;

    #[test]
    fn graph_round_trip() {
        let text = "5 4\n1 2\n2 3\n3 4\n4 5\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g, Graph::path(5));
        assert_eq!(write_graph(&g), text);
    }

    #[test]
    fn graph_errors_carry_line_numbers() {
        let cases = [
            ("3 1\n1 1\n", 2, "self-loop"),
            ("3 2\n1 2\n1 2\n", 3, "duplicate"),
            ("3 1\n1 4\n", 2, "out of range"),
            ("3 1\n2 1\n", 2, "smaller id first"),
            ("3 2\n1 2\n", 0, "end of input"),
            ("3 1\n1 2\n2 3\n", 3, "trailing"),
            ("x 1\n", 1, "invalid vertex count"),
        ];
        for (text, line, needle) in cases {
            match parse_graph(text) {
                Err(Error::Parse { line: l, message }) => {
                    assert_eq!(l, line, "{text:?}");
                    assert!(message.contains(needle), "{message}");
                }
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn representation_round_trip_and_order() {
        let text = "3\n2 1 4\n1 0 2\n3 3 6\n";
        let r = parse_representation(text).unwrap();
        assert_eq!(r.interval(0), Interval::new(0, 2));
        assert_eq!(write_representation(&r), "3\n1 0 2\n2 1 4\n3 3 6\n");
    }

    #[test]
    fn representation_errors() {
        assert!(matches!(
            parse_representation("2\n1 0 1\n1 2 3\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_representation("1\n1 5 2\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_representation("2\n1 0 1\n"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn trace_round_trip() {
        let t = ExtensionTrace {
            k: 2,
            scale: 5,
            entries: vec![
                TraceEntry {
                    witness: Some(2),
                    new_right: 16,
                },
                TraceEntry {
                    witness: None,
                    new_right: 30,
                },
            ],
        };
        let text = write_trace(&t);
        assert_eq!(text, "2 5\n1 3 16\n2 - 30\n");
        // Witness 3 is out of range for a two-vertex trace.
        assert!(parse_trace(&text).is_err());
        let t = ExtensionTrace {
            k: 2,
            scale: 3,
            entries: vec![
                TraceEntry {
                    witness: Some(1),
                    new_right: 4,
                },
                TraceEntry {
                    witness: None,
                    new_right: 3,
                },
            ],
        };
        assert_eq!(parse_trace(&write_trace(&t)).unwrap(), t);
    }

    #[test]
    fn trapezoid_round_trip() {
        let t = p5_representation();
        let text = write_trapezoids(&t);
        assert!(text.starts_with("5\n1 0 1 4 5\n"));
        assert_eq!(parse_trapezoids(&text).unwrap(), t);
    }

    #[test]
    fn orders_round_trip() {
        let o = p5_representation().orders();
        let text = write_orders(&o);
        assert_eq!(
            text,
            "L0: 1 3 2 5 4\nR0: 1 3 2 5 4\nL1: 2 1 4 3 5\nR1: 2 1 4 3 5\n"
        );
        assert_eq!(parse_orders(&text).unwrap(), o);
    }

    #[test]
    fn orders_errors() {
        assert!(matches!(
            parse_orders("L0: 1 2\nR0: 1 2\nL1: 1 1\nR1: 1 2\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_orders("L0: 1 2\nX0: 1 2\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_orders("L0: 1 2\nR0: 1 2 3\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn weak_order_display() {
        let o = WeakOrder::from_keys(&[3, 1, 3, 0]);
        assert_eq!(display_weak_order(&o), "4 < 2 < 1 = 3");
    }
}
