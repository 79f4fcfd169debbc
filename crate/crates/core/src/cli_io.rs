//! File formats, reports and the command implementations behind the binary.
//!
//! Every `cmd_*` function is pure with respect to the filesystem: it takes
//! document text and returns an [`Outcome`] holding the report, the exit
//! status and any document the command produced.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::value::RawValue;
use thiserror::Error;

use crate::catalog::{self, colour_orbit_sizes, edge_orbit_report, CatalogEntry, CatalogError};
use crate::colored_graph::{ColouredGraph, Partition, DEFAULT_SEARCH_BOUND};
use crate::construct::{realize_partition, ConstructError, Realizability};
use crate::geometry::{self, EdgeLengths, EmbeddedSimplex, GeometryError, LengthAssignment};
use crate::permgroup::{Fingerprint, PermGroup};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_UNKNOWN: i32 = 3;

/// Failures that map to exit status 2.
#[derive(Debug, Error)]
pub enum InputError {
    #[error("{source_name}:{line}:{column}: {message}")]
    Syntax {
        source_name: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{source_name}: field `{field}`: {message}")]
    Field {
        source_name: String,
        field: String,
        message: String,
    },
    #[error("{0}")]
    Argument(String),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}

impl InputError {
    fn field(source_name: &str, field: impl Into<String>, message: impl Into<String>) -> Self {
        InputError::Field {
            source_name: source_name.to_string(),
            field: field.into(),
            message: message.into(),
        }
    }

    fn syntax(source_name: &str, err: &serde_json::Error) -> Self {
        InputError::Syntax {
            source_name: source_name.to_string(),
            line: err.line(),
            column: err.column(),
            message: err.to_string(),
        }
    }
}

/// `{"n": 5, "colors": [[[0,1],[2,3],[4,5]], ...]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColouringDocument {
    pub n: usize,
    pub colors: Vec<Vec<[usize; 2]>>,
}

impl ColouringDocument {
    /// Edges written `i < j` in lexicographic order, colours ordered by their first edge.
    pub fn from_graph(g: &ColouredGraph) -> Self {
        let mut colors: Vec<Vec<[usize; 2]>> = g
            .classes()
            .into_iter()
            .filter(|c| !c.is_empty())
            .map(|class| {
                let mut edges: Vec<[usize; 2]> = class.into_iter().map(|(i, j)| [i.min(j), i.max(j)]).collect();
                edges.sort_unstable();
                edges
            })
            .collect();
        colors.sort();
        ColouringDocument { n: g.dimension(), colors }
    }

    pub fn parse(text: &str, source_name: &str) -> Result<Self, InputError> {
        serde_json::from_str(text).map_err(|e| InputError::syntax(source_name, &e))
    }

    /// Colour `k` of the graph is the `k`-th colour of the document.
    pub fn to_graph(&self, source_name: &str) -> Result<ColouredGraph, InputError> {
        let size = self.n + 1;
        if self.n == 0 {
            return Err(InputError::field(source_name, "n", "dimension must be at least 1"));
        }
        let mut seen: BTreeMap<(usize, usize), String> = BTreeMap::new();
        for (c, class) in self.colors.iter().enumerate() {
            if class.is_empty() {
                return Err(InputError::field(source_name, format!("colors[{c}]"), "colour has no edges"));
            }
            for (k, &[a, b]) in class.iter().enumerate() {
                let path = format!("colors[{c}][{k}]");
                if a >= size || b >= size {
                    return Err(InputError::field(
                        source_name,
                        path,
                        format!("vertex out of range 0..{size} in [{a}, {b}]"),
                    ));
                }
                if a == b {
                    return Err(InputError::field(source_name, path, format!("loop [{a}, {b}]")));
                }
                let key = (a.min(b), a.max(b));
                if let Some(prev) = seen.insert(key, path.clone()) {
                    return Err(InputError::field(
                        source_name,
                        path,
                        format!("edge [{}, {}] already listed at {prev}", key.0, key.1),
                    ));
                }
            }
        }
        let total = size * self.n / 2;
        if seen.len() != total {
            let missing = (0..size)
                .flat_map(|i| (i + 1..size).map(move |j| (i, j)))
                .find(|e| !seen.contains_key(e))
                .expect("fewer edges than pairs");
            return Err(InputError::field(
                source_name,
                "colors",
                format!(
                    "{} of {total} edges coloured; [{}, {}] is missing",
                    seen.len(),
                    missing.0,
                    missing.1
                ),
            ));
        }
        let classes: Vec<Vec<(usize, usize)>> = self
            .colors
            .iter()
            .map(|class| class.iter().map(|&[a, b]| (a, b)).collect())
            .collect();
        ColouredGraph::from_classes(self.n, &classes).map_err(|e| InputError::field(source_name, "colors", e.to_string()))
    }

    pub fn to_json(&self) -> String {
        let mut out = format!("{{\n  \"n\": {},\n  \"colors\": [\n", self.n);
        for (c, class) in self.colors.iter().enumerate() {
            let edges: Vec<String> = class.iter().map(|[a, b]| format!("[{a},{b}]")).collect();
            let sep = if c + 1 == self.colors.len() { "" } else { "," };
            let _ = writeln!(out, "    [{}]{sep}", edges.join(","));
        }
        out.push_str("  ]\n}\n");
        out
    }
}

/// `{"n": 4, "points": [[x...], ...], "tolerance": 1e-9}`
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoordinatesDocument {
    pub n: usize,
    pub points: Vec<Vec<f64>>,
    #[serde(default = "default_tolerance")]
    pub tolerance: f64,
}

fn default_tolerance() -> f64 {
    geometry::DEFAULT_TOLERANCE
}

/// Decimal with 17 significant digits, enough to round-trip any `f64`.
pub fn format_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn raw(x: f64) -> Box<RawValue> {
    RawValue::from_string(format_f64(x)).expect("formatted float is valid JSON")
}

fn raw_points(points: &[Vec<f64>]) -> Vec<Vec<Box<RawValue>>> {
    points.iter().map(|p| p.iter().map(|&x| raw(x)).collect()).collect()
}

fn raw_vec(v: &[f64]) -> Vec<Box<RawValue>> {
    v.iter().map(|&x| raw(x)).collect()
}

#[derive(Serialize)]
struct CoordinatesOut {
    n: usize,
    points: Vec<Vec<Box<RawValue>>>,
    tolerance: Box<RawValue>,
}

impl CoordinatesDocument {
    pub fn from_simplex(s: &EmbeddedSimplex) -> Self {
        CoordinatesDocument {
            n: s.dimension(),
            points: s.points().to_vec(),
            tolerance: s.tolerance(),
        }
    }

    pub fn parse(text: &str, source_name: &str) -> Result<Self, InputError> {
        serde_json::from_str(text).map_err(|e| InputError::syntax(source_name, &e))
    }

    pub fn to_simplex(&self, source_name: &str) -> Result<EmbeddedSimplex, InputError> {
        if self.points.len() != self.n + 1 {
            return Err(InputError::field(
                source_name,
                "points",
                format!("{} points given for n = {}", self.points.len(), self.n),
            ));
        }
        if !(self.tolerance.is_finite() && self.tolerance > 0.0) {
            return Err(InputError::field(source_name, "tolerance", "must be positive"));
        }
        EmbeddedSimplex::new(self.points.clone(), self.tolerance)
            .map_err(|e| InputError::field(source_name, "points", e.to_string()))
    }

    pub fn to_json(&self) -> String {
        let out = CoordinatesOut {
            n: self.n,
            points: raw_points(&self.points),
            tolerance: raw(self.tolerance),
        };
        let mut s = serde_json::to_string_pretty(&out).expect("serializable");
        s.push('\n');
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColourOrbitsReport {
    pub colour: usize,
    pub degree: usize,
    pub orbit_sizes: Vec<usize>,
    pub single_orbit: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Centres {
    pub centroid: Vec<f64>,
    pub circumcentre: Vec<f64>,
    pub incentre: Vec<f64>,
    pub spread: f64,
}

/// Structured result of a command. Absent fields were not computed.
#[derive(Debug, Clone, PartialEq, Serialize, Default)]
pub struct ReportDocument {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub verdicts: BTreeMap<String, bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub status: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weak_type: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group_order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group_fingerprint: Option<Fingerprint>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group_generators: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge_orbits: Option<Vec<ColourOrbitsReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lengths: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coordinates: Option<Vec<Vec<f64>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub centres: Option<Centres>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strong_type: Option<ColouringDocument>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub catalogue: Option<Vec<CatalogRow>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CatalogRow {
    pub weak_type: String,
    pub group_order: usize,
    pub group_fingerprint: Fingerprint,
    pub edge_orbits: Vec<ColourOrbitsReport>,
    pub colouring: ColouringDocument,
}

#[derive(Serialize)]
struct CentresOut {
    centroid: Vec<Box<RawValue>>,
    circumcentre: Vec<Box<RawValue>>,
    incentre: Vec<Box<RawValue>>,
    spread: Box<RawValue>,
}

/// Same shape as [`ReportDocument`], with floats written at full precision.
#[derive(Serialize)]
struct ReportOut<'a> {
    command: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    verdicts: &'a BTreeMap<String, bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    status: &'a Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    weak_type: &'a Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    group_order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    group_fingerprint: &'a Option<Fingerprint>,
    #[serde(skip_serializing_if = "Option::is_none")]
    group_generators: &'a Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    edge_orbits: &'a Option<Vec<ColourOrbitsReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lengths: Option<Vec<Box<RawValue>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    coordinates: Option<Vec<Vec<Box<RawValue>>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    centres: Option<CentresOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    strong_type: &'a Option<ColouringDocument>,
    #[serde(skip_serializing_if = "Option::is_none")]
    catalogue: &'a Option<Vec<CatalogRow>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    warnings: &'a Vec<String>,
}

impl ReportDocument {
    fn new(command: &str) -> Self {
        ReportDocument {
            command: command.to_string(),
            ..Default::default()
        }
    }

    fn verdict(&mut self, name: &str, value: bool) {
        self.verdicts.insert(name.to_string(), value);
    }

    fn group(&mut self, group: &PermGroup) {
        self.group_order = Some(group.order());
        self.group_fingerprint = group.fingerprint().ok();
        self.group_generators = Some(group.generators().iter().map(ToString::to_string).collect());
    }

    pub fn to_json(&self) -> String {
        let out = ReportOut {
            command: &self.command,
            n: self.n,
            verdicts: &self.verdicts,
            status: &self.status,
            weak_type: &self.weak_type,
            group_order: self.group_order,
            group_fingerprint: &self.group_fingerprint,
            group_generators: &self.group_generators,
            edge_orbits: &self.edge_orbits,
            lengths: self.lengths.as_deref().map(raw_vec),
            coordinates: self.coordinates.as_deref().map(raw_points),
            centres: self.centres.as_ref().map(|c| CentresOut {
                centroid: raw_vec(&c.centroid),
                circumcentre: raw_vec(&c.circumcentre),
                incentre: raw_vec(&c.incentre),
                spread: raw(c.spread),
            }),
            strong_type: &self.strong_type,
            catalogue: &self.catalogue,
            warnings: &self.warnings,
        };
        let mut s = serde_json::to_string_pretty(&out).expect("serializable");
        s.push('\n');
        s
    }

    /// Plain-text rendering for terminals.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for w in &self.warnings {
            let _ = writeln!(out, "warning: {w}");
        }
        if let Some(n) = self.n {
            let _ = writeln!(out, "dimension: {n}");
        }
        if let Some(s) = &self.status {
            let _ = writeln!(out, "status: {s}");
        }
        for (name, value) in &self.verdicts {
            let _ = writeln!(out, "{name}: {value}");
        }
        if let Some(w) = &self.weak_type {
            let _ = writeln!(out, "weak type: {w}");
        }
        if let Some(f) = &self.group_fingerprint {
            let _ = writeln!(out, "group: {f}");
        } else if let Some(o) = self.group_order {
            let _ = writeln!(out, "group order: {o}");
        }
        if let Some(gens) = &self.group_generators {
            let _ = writeln!(out, "generators: {}", gens.join(" "));
        }
        if let Some(orbits) = &self.edge_orbits {
            for o in orbits {
                let _ = writeln!(
                    out,
                    "colour {} (degree {}): edge orbits {:?}{}",
                    o.colour,
                    o.degree,
                    o.orbit_sizes,
                    if o.single_orbit { "" } else { " (not a single orbit)" }
                );
            }
        }
        if let Some(l) = &self.lengths {
            let l: Vec<String> = l.iter().map(|x| format!("{x}")).collect();
            let _ = writeln!(out, "lengths: {}", l.join(", "));
        }
        if let Some(c) = &self.centres {
            let _ = writeln!(out, "centroid: {:?}", c.centroid);
            let _ = writeln!(out, "circumcentre: {:?}", c.circumcentre);
            let _ = writeln!(out, "incentre: {:?}", c.incentre);
            let _ = writeln!(out, "centre spread: {:e}", c.spread);
        }
        if let Some(t) = &self.strong_type {
            let classes: Vec<String> = t
                .colors
                .iter()
                .map(|c| c.iter().map(|[a, b]| format!("{a}{b}")).collect::<Vec<_>>().join(" "))
                .collect();
            let _ = writeln!(out, "strong type: {}", classes.join(" | "));
        }
        if let Some(rows) = &self.catalogue {
            let _ = writeln!(out, "{:<4} {:<12} {:>6}  edge orbits", "#", "weak type", "group");
            for (k, r) in rows.iter().enumerate() {
                let orbits: Vec<String> = r.edge_orbits.iter().map(|o| format!("{:?}", o.orbit_sizes)).collect();
                let _ = writeln!(out, "{:<4} {:<12} {:>6}  {}", k + 1, r.weak_type, r.group_order, orbits.join(" "));
            }
        }
        out
    }
}

/// What a command produced.
#[derive(Debug)]
pub struct Outcome {
    pub report: ReportDocument,
    pub exit_code: i32,
    /// A colouring or coordinates document, when the command makes one.
    pub document: Option<String>,
}

/// Options shared by all commands.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Settings {
    pub tolerance: f64,
    pub seed: Option<u64>,
    pub max_dimension: usize,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            tolerance: geometry::DEFAULT_TOLERANCE,
            seed: None,
            max_dimension: catalog::DEFAULT_MAX_DIMENSION,
        }
    }
}

fn orbit_rows(entry: &CatalogEntry) -> Vec<ColourOrbitsReport> {
    edge_orbit_report(entry)
        .into_iter()
        .map(|o| ColourOrbitsReport {
            single_orbit: o.is_single_orbit(),
            colour: o.colour,
            degree: o.degree,
            orbit_sizes: o.orbit_sizes,
        })
        .collect()
}

fn check_search_bound(n: usize) -> Result<(), InputError> {
    if n > DEFAULT_SEARCH_BOUND {
        return Err(InputError::Argument(format!(
            "dimension {n} exceeds the exhaustive search bound {DEFAULT_SEARCH_BOUND}"
        )));
    }
    Ok(())
}

/// Combinatorial analysis of a colouring; status 0 iff complementarity holds.
pub fn cmd_check(text: &str, source_name: &str) -> Result<Outcome, InputError> {
    let doc = ColouringDocument::parse(text, source_name)?;
    let g = doc.to_graph(source_name)?;
    check_search_bound(g.dimension())?;
    let mut report = ReportDocument::new("check");
    report.n = Some(g.dimension());
    let uniform = g.is_vertex_uniform();
    let complementary = g.satisfies_complementarity();
    report.verdict("vertex_uniform", uniform);
    report.verdict("complementarity", complementary);
    report.verdict("components_congruent", g.components_congruent());
    let group = g.colour_automorphisms().map_err(|e| InputError::Argument(e.to_string()))?;
    report.verdict("vertex_transitive", group.is_transitive());
    report.weak_type = g.weak_type().ok().map(|p| p.to_string());
    report.group(&group);
    if uniform {
        let entry = CatalogEntry {
            dimension: g.dimension(),
            canonical: g.clone(),
            weak: g.weak_type().expect("uniform"),
            group_order: group.order(),
            group_fingerprint: group.fingerprint().map_err(|e| InputError::Argument(e.to_string()))?,
            edge_orbit_sizes: colour_orbit_sizes(&g, &group),
        };
        report.edge_orbits = Some(orbit_rows(&entry));
    }
    Ok(Outcome {
        report,
        exit_code: if complementary { EXIT_OK } else { EXIT_NEGATIVE },
        document: None,
    })
}

/// Decides a partition; statuses 0 realizable, 1 obstructed, 3 unknown.
pub fn cmd_construct(partition: &str, n: usize) -> Result<Outcome, InputError> {
    let p: Partition = partition
        .parse()
        .map_err(|e| InputError::Argument(format!("partition `{partition}`: {e}")))?;
    let result = realize_partition(&p, n).map_err(|e| match e {
        ConstructError::MalformedPartition { .. } => {
            InputError::Argument(format!("partition {p} does not sum to n = {n}"))
        }
        other => InputError::Argument(other.to_string()),
    })?;
    let mut report = ReportDocument::new("construct");
    report.n = Some(n);
    report.weak_type = Some(p.to_string());
    Ok(match result {
        Realizability::Realizable(g) => {
            report.status = Some("realizable".into());
            report.verdict("realizable", true);
            report.verdict("complementarity", g.satisfies_complementarity());
            let doc = ColouringDocument::from_graph(&g);
            let text = doc.to_json();
            report.strong_type = Some(doc);
            Outcome {
                report,
                exit_code: EXIT_OK,
                document: Some(text),
            }
        }
        Realizability::NotRealizable(ob) => {
            report.status = Some(format!("not realizable ({})", ob.tag()));
            report.verdict("realizable", false);
            Outcome {
                report,
                exit_code: EXIT_NEGATIVE,
                document: None,
            }
        }
        Realizability::Unknown => {
            report.status = Some("unknown (open problem)".into());
            Outcome {
                report,
                exit_code: EXIT_UNKNOWN,
                document: None,
            }
        }
    })
}

fn centres(s: &EmbeddedSimplex) -> Result<Centres, GeometryError> {
    Ok(Centres {
        centroid: s.centroid(),
        circumcentre: s.circumcentre()?,
        incentre: s.incentre()?,
        spread: s.centre_spread()?,
    })
}

/// Embeds a colouring with given or automatic lengths; status 1 if not realizable.
pub fn cmd_embed(
    text: &str,
    source_name: &str,
    lengths: Option<&[f64]>,
    base: f64,
    settings: &Settings,
) -> Result<Outcome, InputError> {
    let doc = ColouringDocument::parse(text, source_name)?;
    let g = doc.to_graph(source_name)?;
    let mut report = ReportDocument::new("embed");
    report.n = Some(g.dimension());
    let tol = settings.tolerance;
    let embedded = match lengths {
        Some(l) => {
            if l.len() != g.num_colours() {
                return Err(InputError::Argument(format!(
                    "{} lengths given for {} colours",
                    l.len(),
                    g.num_colours()
                )));
            }
            let assignment = LengthAssignment::new(l.to_vec()).map_err(|e| InputError::Argument(e.to_string()))?;
            report.lengths = Some(l.to_vec());
            let table = EdgeLengths::from_colouring(&g, &assignment).map_err(|e| InputError::Argument(e.to_string()))?;
            table.embed(tol)
        }
        None => geometry::realize_colouring(&g, base, settings.seed, tol).map(|(l, s)| {
            report.lengths = Some(l.lengths().to_vec());
            s
        }),
    };
    let s = match embedded {
        Ok(s) => s,
        Err(GeometryError::NotRealizable) => {
            report.status = Some("not realizable".into());
            report.verdict("realizable", false);
            return Ok(Outcome {
                report,
                exit_code: EXIT_NEGATIVE,
                document: None,
            });
        }
        Err(e) => return Err(InputError::Argument(e.to_string())),
    };
    report.status = Some("realizable".into());
    report.verdict("realizable", true);
    report.verdict("equifacetal", s.is_equifacetal());
    let c = centres(&s).map_err(|e| InputError::Argument(e.to_string()))?;
    report.verdict("centres_coincide", c.spread <= 10.0 * tol * s.diameter());
    report.centres = Some(c);
    report.coordinates = Some(s.points().to_vec());
    Ok(Outcome {
        report,
        exit_code: EXIT_OK,
        document: Some(CoordinatesDocument::from_simplex(&s).to_json()),
    })
}

/// Geometric analysis of coordinates; status 0 iff the simplex is equifacetal.
pub fn cmd_verify(text: &str, source_name: &str, tolerance: Option<f64>) -> Result<Outcome, InputError> {
    let doc = CoordinatesDocument::parse(text, source_name)?;
    let mut s = doc.to_simplex(source_name)?;
    if let Some(t) = tolerance {
        s = s.with_tolerance(t);
    }
    check_search_bound(s.dimension())?;
    let mut report = ReportDocument::new("verify");
    report.n = Some(s.dimension());
    let equifacetal = s.is_equifacetal();
    report.verdict("equifacetal", equifacetal);
    let group = s.isometry_group().map_err(|e| InputError::Argument(e.to_string()))?;
    report.verdict("vertex_transitive", group.is_transitive());
    report.group(&group);
    match s.edge_length_partition() {
        Ok(g) => {
            report.weak_type = g.weak_type().ok().map(|p| p.to_string());
            report.verdict("complementarity", g.satisfies_complementarity());
            report.strong_type = Some(ColouringDocument::from_graph(&g));
        }
        Err(e) => report.warnings.push(e.to_string()),
    }
    let c = centres(&s).map_err(|e| InputError::Argument(e.to_string()))?;
    report.verdict("centres_coincide", c.spread <= 10.0 * s.tolerance() * s.diameter());
    report.centres = Some(c);
    Ok(Outcome {
        report,
        exit_code: if equifacetal { EXIT_OK } else { EXIT_NEGATIVE },
        document: None,
    })
}

/// Lists all strong types in dimension `n`.
pub fn cmd_catalog(n: usize, settings: &Settings) -> Result<Outcome, InputError> {
    let mut report = ReportDocument::new("catalog");
    if settings.max_dimension > catalog::DEFAULT_MAX_DIMENSION && n > catalog::DEFAULT_MAX_DIMENSION {
        report.warnings.push(format!(
            "enumerating beyond dimension {} may take a long time",
            catalog::DEFAULT_MAX_DIMENSION
        ));
    }
    let entries = catalog::enumerate_strong_types_within(n, settings.max_dimension)?;
    report.n = Some(n);
    report.catalogue = Some(
        entries
            .iter()
            .map(|e| CatalogRow {
                weak_type: e.weak.to_string(),
                group_order: e.group_order,
                group_fingerprint: e.group_fingerprint.clone(),
                edge_orbits: orbit_rows(e),
                colouring: ColouringDocument::from_graph(&e.canonical),
            })
            .collect(),
    );
    Ok(Outcome {
        report,
        exit_code: EXIT_OK,
        document: None,
    })
}
