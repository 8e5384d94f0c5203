//! Scanning graph collections for induced-saturated graphs.

use std::fmt::{self, Write as _};
use std::io::BufRead;
use std::time::{Duration, Instant};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::graph::Graph;
use crate::iso::is_isomorphic;
use crate::saturation::Pattern;

/// Largest order accepted by [`exhaust_labeled`]; order 7 already means
/// 2^21 labelled graphs.
pub const MAX_EXHAUST_ORDER: usize = 7;

const CHUNK: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Hit {
    /// Record index in the input stream, or the edge bit mask for labelled enumeration.
    pub index: u64,
    pub graph6: String,
    pub order: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecordError {
    pub index: usize,
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanSummary {
    pub filter: String,
    pub graphs_examined: u64,
    /// Graphs that passed before isomorphism dedup. Equal to `hits.len()` for stream scans.
    pub labeled_hits: u64,
    pub hits: Vec<Hit>,
    /// Malformed records skipped in non-strict mode.
    pub skipped: Vec<RecordError>,
    #[serde(rename = "elapsed_seconds", serialize_with = "seconds")]
    pub elapsed: Duration,
}

fn seconds<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl ScanSummary {
    /// Text summary without the timing line, so output is reproducible.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "filter {}", self.filter);
        let _ = writeln!(out, "examined {}", self.graphs_examined);
        let _ = writeln!(out, "labeled_hits {}", self.labeled_hits);
        let _ = writeln!(out, "hits {}", self.hits.len());
        for h in &self.hits {
            let _ = writeln!(out, "hit {} {} order {}", h.index, h.graph6, h.order);
        }
        for e in &self.skipped {
            let _ = writeln!(
                out,
                "skipped record {} line {}: {}",
                e.index, e.line, e.message
            );
        }
        out
    }
}

impl fmt::Display for ScanSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_text())?;
        writeln!(f, "elapsed {:.3}s", self.elapsed.as_secs_f64())
    }
}

fn describe(pattern: &Pattern) -> String {
    let h = pattern.graph();
    if pattern.is_path() {
        format!("P_{}-induced-saturated", h.order())
    } else {
        format!("H-induced-saturated, H = {}", h.to_graph6())
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ScanOptions {
    /// Abort on the first malformed record instead of skipping it.
    pub strict: bool,
    pub exec: Execution,
}

/// Checks every graph6 record of `input` (one per line, blank lines ignored)
/// against `h`. Hits keep input order.
pub fn scan_stream<R: BufRead>(input: R, h: &Graph, opts: ScanOptions) -> Result<ScanSummary> {
    let started = Instant::now();
    let pattern = Pattern::new(h)?;
    let mut summary = ScanSummary {
        filter: describe(&pattern),
        graphs_examined: 0,
        labeled_hits: 0,
        hits: Vec::new(),
        skipped: Vec::new(),
        elapsed: Duration::ZERO,
    };

    let mut lines = input.lines().enumerate();
    let mut index = 0usize;
    loop {
        let mut chunk: Vec<(usize, Graph)> = Vec::with_capacity(CHUNK);
        let mut exhausted = true;
        for (line_no, line) in lines.by_ref() {
            let line = line?;
            let record = line.trim();
            if record.is_empty() {
                continue;
            }
            let this = index;
            index += 1;
            match Graph::from_graph6(record) {
                Ok(g) => chunk.push((this, g)),
                Err(e) if opts.strict => {
                    return Err(Error::Record {
                        index: this,
                        line: line_no + 1,
                        source: Box::new(e),
                    })
                }
                Err(e) => summary.skipped.push(RecordError {
                    index: this,
                    line: line_no + 1,
                    message: e.to_string(),
                }),
            }
            if chunk.len() == CHUNK {
                exhausted = false;
                break;
            }
        }
        let passed = opts
            .exec
            .map(&chunk, |(_, g)| pattern.saturates(g, Execution::Sequential));
        summary.graphs_examined += chunk.len() as u64;
        for ((i, g), ok) in chunk.iter().zip(passed) {
            if ok {
                summary.hits.push(Hit {
                    index: *i as u64,
                    graph6: g.to_graph6(),
                    order: g.order(),
                });
            }
        }
        if exhausted {
            break;
        }
    }
    summary.labeled_hits = summary.hits.len() as u64;
    summary.elapsed = started.elapsed();
    Ok(summary)
}

/// Graph whose edges are the set bits of `mask` over `pairs`.
fn graph_from_mask(order: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let edges = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &p)| p);
    Graph::from_edges(order, edges).expect("pairs are within order")
}

/// Pairs `(u, v)`, `u < v`, in graph6 bit order. Bit `i` of a labelled-graph
/// mask corresponds to `pairs[i]`.
pub fn labeled_pairs(order: usize) -> Vec<(usize, usize)> {
    (1..order)
        .flat_map(|v| (0..v).map(move |u| (u, v)))
        .collect()
}

/// Checks all `2^(order choose 2)` labelled graphs on `order` vertices.
/// Hits are reduced to one representative per isomorphism class, the one
/// with the smallest mask.
pub fn exhaust_labeled(order: usize, h: &Graph, exec: Execution) -> Result<ScanSummary> {
    if order > MAX_EXHAUST_ORDER {
        return Err(Error::Capacity {
            what: "exhaustive enumeration order (use a scan over an external corpus instead)",
            got: order,
            max: MAX_EXHAUST_ORDER,
        });
    }
    let started = Instant::now();
    let pattern = Pattern::new(h)?;
    let pairs = labeled_pairs(order);
    let total = 1u64 << pairs.len();
    let masks = exec.filter_range(0..total, |mask| {
        pattern.saturates(&graph_from_mask(order, &pairs, mask), Execution::Sequential)
    });

    let mut reps: Vec<(u64, Graph)> = Vec::new();
    for &mask in &masks {
        let g = graph_from_mask(order, &pairs, mask);
        let mut seen = false;
        for (_, r) in &reps {
            if is_isomorphic(r, &g)? {
                seen = true;
                break;
            }
        }
        if !seen {
            reps.push((mask, g));
        }
    }

    Ok(ScanSummary {
        filter: format!(
            "{} over all labelled graphs of order {order}",
            describe(&pattern)
        ),
        graphs_examined: total,
        labeled_hits: masks.len() as u64,
        hits: reps
            .into_iter()
            .map(|(mask, g)| Hit {
                index: mask,
                graph6: g.to_graph6(),
                order,
            })
            .collect(),
        skipped: Vec::new(),
        elapsed: started.elapsed(),
    })
}
