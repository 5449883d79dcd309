//! Graph streams: every labeled graph of a given order, or the lines of a
//! graph6 file, optionally filtered.

use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::PathBuf;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::graph6::Graph6Error;
use crate::graph::{bit, Bits, Graph};

/// Highest order the labeled enumeration accepts (`2^28` graphs).
pub const BUILTIN_MAX_ORDER: usize = 8;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}:{line}: {source}")]
    Parse {
        path: String,
        line: usize,
        #[source]
        source: Graph6Error,
    },
    #[error("labeled enumeration is limited to {BUILTIN_MAX_ORDER} vertices, got {order}")]
    OrderCeiling { order: usize },
    #[error("unknown corpus filter {0:?}")]
    UnknownFilter(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Filter {
    Connected,
    EvenOrder,
    OddOrder,
    NonBipartite,
    MinDegree(usize),
}

impl Filter {
    pub fn accepts(self, g: &Graph) -> bool {
        match self {
            Filter::Connected => g.is_connected().unwrap_or(false),
            Filter::EvenOrder => g.order() % 2 == 0,
            Filter::OddOrder => g.order() % 2 == 1,
            Filter::NonBipartite => g.is_bipartite().is_none(),
            Filter::MinDegree(d) => g.min_degree().is_ok_and(|m| m >= d),
        }
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Filter::Connected => f.write_str("connected"),
            Filter::EvenOrder => f.write_str("even-order"),
            Filter::OddOrder => f.write_str("odd-order"),
            Filter::NonBipartite => f.write_str("non-bipartite"),
            Filter::MinDegree(d) => write!(f, "min-degree>={d}"),
        }
    }
}

impl FromStr for Filter {
    type Err = CorpusError;

    fn from_str(s: &str) -> Result<Filter, CorpusError> {
        let s = s.trim();
        match s {
            "connected" => return Ok(Filter::Connected),
            "even-order" | "even" => return Ok(Filter::EvenOrder),
            "odd-order" | "odd" => return Ok(Filter::OddOrder),
            "non-bipartite" => return Ok(Filter::NonBipartite),
            _ => {}
        }
        s.strip_prefix("min-degree>=")
            .or_else(|| s.strip_prefix("min-degree="))
            .and_then(|d| d.parse().ok())
            .map(Filter::MinDegree)
            .ok_or_else(|| CorpusError::UnknownFilter(s.to_string()))
    }
}

/// Parses a comma-separated filter list such as `connected,non-bipartite`.
pub fn parse_filters(list: &str) -> Result<Vec<Filter>, CorpusError> {
    list.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(str::parse)
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CorpusSource {
    /// Every labeled graph on `order` vertices. Isomorphic copies repeat.
    Builtin { order: usize },
    Graph6File(PathBuf),
    /// In-memory graphs, e.g. family members.
    Graphs { label: String, graphs: Vec<Graph> },
}

impl fmt::Display for CorpusSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CorpusSource::Builtin { order } => write!(f, "builtin-labeled({order})"),
            CorpusSource::Graph6File(path) => write!(f, "graph6-file({})", path.display()),
            CorpusSource::Graphs { label, .. } => write!(f, "graphs({label})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CorpusSpec {
    pub sources: Vec<CorpusSource>,
    pub filters: Vec<Filter>,
}

impl CorpusSpec {
    pub fn builtin(order: usize) -> Self {
        CorpusSpec {
            sources: vec![CorpusSource::Builtin { order }],
            filters: Vec::new(),
        }
    }

    pub fn builtin_range(orders: std::ops::RangeInclusive<usize>) -> Self {
        CorpusSpec {
            sources: orders.map(|order| CorpusSource::Builtin { order }).collect(),
            filters: Vec::new(),
        }
    }

    pub fn graph6_file(path: impl Into<PathBuf>) -> Self {
        CorpusSpec {
            sources: vec![CorpusSource::Graph6File(path.into())],
            filters: Vec::new(),
        }
    }

    pub fn graph6_files<P: Into<PathBuf>>(paths: impl IntoIterator<Item = P>) -> Self {
        CorpusSpec {
            sources: paths
                .into_iter()
                .map(|p| CorpusSource::Graph6File(p.into()))
                .collect(),
            filters: Vec::new(),
        }
    }

    pub fn graphs(label: impl Into<String>, graphs: Vec<Graph>) -> Self {
        CorpusSpec {
            sources: vec![CorpusSource::Graphs {
                label: label.into(),
                graphs,
            }],
            filters: Vec::new(),
        }
    }

    #[must_use]
    pub fn with_filters(mut self, filters: impl IntoIterator<Item = Filter>) -> Self {
        self.filters.extend(filters);
        self
    }

    pub fn validate(&self) -> Result<(), CorpusError> {
        for source in &self.sources {
            if let CorpusSource::Builtin { order } = source {
                if *order > BUILTIN_MAX_ORDER {
                    return Err(CorpusError::OrderCeiling { order: *order });
                }
            }
        }
        Ok(())
    }

    /// Runs of builtin orders collapse to `builtin-labeled(1..=7)` and runs
    /// of files to `graph6-file(a, b)`.
    pub fn describe(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.sources.len() {
            let mut j = i + 1;
            match &self.sources[i] {
                CorpusSource::Builtin { order: first } => {
                    let mut last = *first;
                    while let Some(CorpusSource::Builtin { order }) = self.sources.get(j) {
                        if *order != last + 1 {
                            break;
                        }
                        last = *order;
                        j += 1;
                    }
                    parts.push(if last == *first {
                        format!("builtin-labeled({first})")
                    } else {
                        format!("builtin-labeled({first}..={last})")
                    });
                }
                CorpusSource::Graph6File(path) => {
                    let mut files = vec![path.display().to_string()];
                    while let Some(CorpusSource::Graph6File(p)) = self.sources.get(j) {
                        files.push(p.display().to_string());
                        j += 1;
                    }
                    parts.push(format!("graph6-file({})", files.join(", ")));
                }
                other => parts.push(other.to_string()),
            }
            i = j;
        }
        let mut out = parts.join("+");
        if !self.filters.is_empty() {
            let filters: Vec<String> = self.filters.iter().map(ToString::to_string).collect();
            out.push_str(&format!(" [{}]", filters.join(",")));
        }
        out
    }
}

impl fmt::Display for CorpusSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

/// Every labeled graph on `order` vertices; edge bit `i` of the counter
/// follows the graph6 column order `(0,1), (0,2), (1,2), (0,3), ...`.
struct Labeled {
    order: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl Labeled {
    fn new(order: usize) -> Self {
        let pairs: Vec<(usize, usize)> = (1..order)
            .flat_map(|j| (0..j).map(move |i| (i, j)))
            .collect();
        let end = 1u64 << pairs.len();
        Labeled {
            order,
            pairs,
            next: 0,
            end,
        }
    }
}

impl Iterator for Labeled {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.end {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        let mut rows = vec![0u64; self.order];
        for i in Bits(mask) {
            let (a, b) = self.pairs[i];
            rows[a] |= bit(b);
            rows[b] |= bit(a);
        }
        Some(Graph::from_rows(rows).expect("labeled enumeration builds simple graphs"))
    }
}

fn graph6_lines(path: PathBuf) -> Box<dyn Iterator<Item = Result<Graph, CorpusError>>> {
    let shown = path.display().to_string();
    let file = match File::open(&path) {
        Ok(f) => f,
        Err(source) => {
            return Box::new(std::iter::once(Err(CorpusError::Io {
                path: shown,
                source,
            })))
        }
    };
    let lines = BufReader::new(file).split(b'\n').enumerate();
    Box::new(lines.filter_map(move |(i, line)| match line {
        Err(source) => Some(Err(CorpusError::Io {
            path: shown.clone(),
            source,
        })),
        Ok(bytes) => {
            let bytes = bytes.strip_suffix(b"\r").unwrap_or(&bytes);
            if bytes.iter().all(u8::is_ascii_whitespace) {
                return None;
            }
            Some(Graph::from_graph6(bytes).map_err(|source| CorpusError::Parse {
                path: shown.clone(),
                line: i + 1,
                source,
            }))
        }
    }))
}

/// The graphs a corpus describes, in source order, with filters applied.
pub fn enumerate_corpus(
    spec: &CorpusSpec,
) -> Result<impl Iterator<Item = Result<Graph, CorpusError>>, CorpusError> {
    spec.validate()?;
    let filters = spec.filters.clone();
    let streams = spec.sources.clone().into_iter().map(
        |source| -> Box<dyn Iterator<Item = Result<Graph, CorpusError>>> {
            match source {
                CorpusSource::Builtin { order } => Box::new(Labeled::new(order).map(Ok)),
                CorpusSource::Graph6File(path) => graph6_lines(path),
                CorpusSource::Graphs { graphs, .. } => Box::new(graphs.into_iter().map(Ok)),
            }
        },
    );
    Ok(streams.flatten().filter(move |item| match item {
        Ok(g) => filters.iter().all(|f| f.accepts(g)),
        Err(_) => true,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(spec: &CorpusSpec) -> usize {
        enumerate_corpus(spec).unwrap().collect::<Result<Vec<_>, _>>().unwrap().len()
    }

    #[test]
    fn labeled_counts() {
        assert_eq!(count(&CorpusSpec::builtin(3)), 8);
        assert_eq!(count(&CorpusSpec::builtin(3).with_filters([Filter::Connected])), 4);
        assert_eq!(
            count(&CorpusSpec::builtin(4).with_filters([Filter::Connected, Filter::EvenOrder])),
            38
        );
        assert_eq!(count(&CorpusSpec::builtin(0)), 1);
        assert_eq!(count(&CorpusSpec::builtin(1)), 1);
        assert_eq!(
            count(&CorpusSpec::builtin(5).with_filters([Filter::Connected])),
            728
        );
    }

    #[test]
    fn builtin_ceiling() {
        assert!(matches!(
            enumerate_corpus(&CorpusSpec::builtin(9)),
            Err(CorpusError::OrderCeiling { order: 9 })
        ));
    }

    #[test]
    fn filter_parsing() {
        assert_eq!(
            parse_filters("connected,non-bipartite,min-degree>=3").unwrap(),
            vec![Filter::Connected, Filter::NonBipartite, Filter::MinDegree(3)]
        );
        assert!(parse_filters("bogus").is_err());
        assert_eq!(parse_filters("").unwrap(), vec![]);
    }

    #[test]
    fn describe() {
        let spec = CorpusSpec::builtin_range(6..=8).with_filters([Filter::Connected]);
        assert_eq!(spec.describe(), "builtin-labeled(6..=8) [connected]");
        assert_eq!(CorpusSpec::builtin(4).describe(), "builtin-labeled(4)");
        let files = CorpusSpec::graph6_files(["a.g6", "b.g6"]);
        assert_eq!(files.describe(), "graph6-file(a.g6, b.g6)");
        let mut mixed = CorpusSpec::builtin_range(2..=3);
        mixed.sources.push(CorpusSource::Builtin { order: 5 });
        mixed.sources.extend(files.sources);
        assert_eq!(
            mixed.describe(),
            "builtin-labeled(2..=3)+builtin-labeled(5)+graph6-file(a.g6, b.g6)"
        );
    }
}
