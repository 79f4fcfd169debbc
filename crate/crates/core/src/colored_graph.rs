//! Edge-coloured complete graphs, the strong combinatorial type of a simplex.
//!
//! Vertices are `0..=n`. Edge colours are stored in colex order
//! `(0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...`, so the colours on the first
//! `k` vertices always form a prefix of the colour vector. Canonical forms rely
//! on that layout.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::permgroup::{PermGroup, Permutation};

/// Largest dimension accepted by the exhaustive permutation searches.
pub const DEFAULT_SEARCH_BOUND: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for dimension {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("colouring is not vertex-uniform")]
    NotVertexUniform,
    #[error("graphs have different numbers of vertices ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("graphs have different colour alphabets ({0} vs {1} colours)")]
    ColourMismatch(usize, usize),
    #[error("dimension {n} exceeds the search bound {bound}")]
    AboveSearchBound { n: usize, bound: usize },
    #[error("cannot delete a vertex of a {0}-simplex")]
    TooSmall(usize),
    #[error("invalid colouring: {0}")]
    Invalid(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
}

#[inline]
pub(crate) fn edge_index(i: usize, j: usize) -> usize {
    let (a, b) = if i < j { (i, j) } else { (j, i) };
    debug_assert!(a != b);
    b * (b - 1) / 2 + a
}

/// Number of edges of `K_{n+1}`.
#[inline]
pub fn edge_count(n: usize) -> usize {
    (n + 1) * n / 2
}

/// Edge-coloured `K_{n+1}`.
///
/// Graphs built through the public constructors use every colour in
/// `0..num_colours`. [`ColouredGraph::delete_vertex`] keeps the parent's
/// alphabet, so its output may carry empty colour classes.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColouredGraph {
    n: usize,
    num_colours: usize,
    colours: Vec<usize>,
}

impl fmt::Debug for ColouredGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ColouredGraph(n={}, classes=", self.n)?;
        f.debug_list().entries(self.classes()).finish()?;
        write!(f, ")")
    }
}

impl ColouredGraph {
    /// Colours every edge `{i, j}` (`i < j`) with `colour(i, j)`.
    pub fn from_fn(n: usize, mut colour: impl FnMut(usize, usize) -> usize) -> Result<Self, GraphError> {
        let mut colours = vec![0; edge_count(n)];
        for j in 0..=n {
            for i in 0..j {
                colours[edge_index(i, j)] = colour(i, j);
            }
        }
        Self::from_colour_vector(n, colours)
    }

    /// Builds a graph from per-colour edge lists. The lists must partition
    /// all pairs and each list must be non-empty.
    pub fn from_classes(n: usize, classes: &[Vec<(usize, usize)>]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Invalid("dimension must be at least 1".into()));
        }
        let mut colours = vec![usize::MAX; edge_count(n)];
        for (c, class) in classes.iter().enumerate() {
            if class.is_empty() {
                return Err(GraphError::Invalid(format!("colour {c} has no edges")));
            }
            for &(i, j) in class {
                if i > n || j > n {
                    return Err(GraphError::Invalid(format!(
                        "edge ({i}, {j}) has a vertex outside 0..={n}"
                    )));
                }
                if i == j {
                    return Err(GraphError::Invalid(format!("loop at vertex {i}")));
                }
                let e = edge_index(i, j);
                if colours[e] != usize::MAX {
                    return Err(GraphError::Invalid(format!(
                        "edge ({i}, {j}) listed more than once"
                    )));
                }
                colours[e] = c;
            }
        }
        if let Some(e) = colours.iter().position(|&c| c == usize::MAX) {
            let (i, j) = edge_from_index(e);
            return Err(GraphError::Invalid(format!("edge ({i}, {j}) has no colour")));
        }
        Self::from_colour_vector(n, colours)
    }

    /// Takes the colex-ordered colour vector directly.
    pub fn from_colour_vector(n: usize, colours: Vec<usize>) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Invalid("dimension must be at least 1".into()));
        }
        if colours.len() != edge_count(n) {
            return Err(GraphError::Invalid(format!(
                "expected {} edge colours, found {}",
                edge_count(n),
                colours.len()
            )));
        }
        let num_colours = colours.iter().max().map_or(0, |&m| m + 1);
        let mut used = vec![false; num_colours];
        for &c in &colours {
            used[c] = true;
        }
        if let Some(c) = used.iter().position(|&u| !u) {
            return Err(GraphError::Invalid(format!("colour {c} has no edges")));
        }
        Ok(ColouredGraph {
            n,
            num_colours,
            colours,
        })
    }

    /// Single-colour `K_{n+1}`.
    pub fn equilateral(n: usize) -> Result<Self, GraphError> {
        Self::from_fn(n, |_, _| 0)
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.n + 1
    }

    pub fn num_colours(&self) -> usize {
        self.num_colours
    }

    /// Colours in colex edge order.
    pub fn colour_vector(&self) -> &[usize] {
        &self.colours
    }

    #[inline]
    pub fn colour(&self, i: usize, j: usize) -> usize {
        self.colours[edge_index(i, j)]
    }

    /// All edges `(i, j, colour)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        (0..=self.n).flat_map(move |i| (i + 1..=self.n).map(move |j| (i, j, self.colour(i, j))))
    }

    /// Edge lists of every colour, edges `(i, j)` with `i < j` in lexicographic order.
    pub fn classes(&self) -> Vec<Vec<(usize, usize)>> {
        let mut classes = vec![Vec::new(); self.num_colours];
        for (i, j, c) in self.edges() {
            classes[c].push((i, j));
        }
        classes
    }

    pub fn colour_class(&self, c: usize) -> Vec<(usize, usize)> {
        self.edges()
            .filter(|&(_, _, k)| k == c)
            .map(|(i, j, _)| (i, j))
            .collect()
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v > self.n {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Per-colour degree vector of `v`, zeros included.
    pub fn degree_vector(&self, v: usize) -> Vec<usize> {
        let mut deg = vec![0; self.num_colours];
        for u in 0..=self.n {
            if u != v {
                deg[self.colour(u, v)] += 1;
            }
        }
        deg
    }

    /// Number of edges of each colour incident at `v` (colours with zero
    /// degree are omitted).
    pub fn vertex_colour_degrees(&self, v: usize) -> Result<BTreeMap<usize, usize>, GraphError> {
        self.check_vertex(v)?;
        Ok(self
            .degree_vector(v)
            .into_iter()
            .enumerate()
            .filter(|&(_, d)| d > 0)
            .collect())
    }

    pub fn is_vertex_uniform(&self) -> bool {
        let first = self.degree_vector(0);
        (1..=self.n).all(|v| self.degree_vector(v) == first)
    }

    /// The bookkeeping partition of a vertex-uniform colouring.
    pub fn weak_type(&self) -> Result<Partition, GraphError> {
        if !self.is_vertex_uniform() {
            return Err(GraphError::NotVertexUniform);
        }
        let entries: Vec<usize> = self.degree_vector(0).into_iter().filter(|&d| d > 0).collect();
        Partition::new(entries)
    }

    /// Removes `v` and its edges; the remaining vertices are renumbered in
    /// order and the colour alphabet is kept intact (possibly with empty
    /// classes).
    pub fn delete_vertex(&self, v: usize) -> Result<ColouredGraph, GraphError> {
        self.check_vertex(v)?;
        if self.n < 2 {
            return Err(GraphError::TooSmall(self.n));
        }
        let keep: Vec<usize> = (0..=self.n).filter(|&u| u != v).collect();
        let m = self.n - 1;
        let mut colours = vec![0; edge_count(m)];
        for b in 0..=m {
            for a in 0..b {
                colours[edge_index(a, b)] = self.colour(keep[a], keep[b]);
            }
        }
        Ok(ColouredGraph {
            n: m,
            num_colours: self.num_colours,
            colours,
        })
    }

    /// The image of `self` under the vertex map `p`: edge `{p(i), p(j)}` of the
    /// result has the colour of `{i, j}`.
    pub fn relabel_vertices(&self, p: &Permutation) -> ColouredGraph {
        assert_eq!(p.degree(), self.vertex_count());
        let mut colours = vec![0; self.colours.len()];
        for (i, j, c) in self.edges() {
            colours[edge_index(p.apply(i), p.apply(j))] = c;
        }
        ColouredGraph {
            n: self.n,
            num_colours: self.num_colours,
            colours,
        }
    }

    /// Renames colour `c` to `map[c]`; `map` must be a bijection.
    pub fn relabel_colours(&self, map: &[usize]) -> Result<ColouredGraph, GraphError> {
        Permutation::new(map.to_vec())
            .map_err(|_| GraphError::Invalid(format!("colour map {map:?} is not a bijection")))?;
        if map.len() != self.num_colours {
            return Err(GraphError::ColourMismatch(map.len(), self.num_colours));
        }
        Ok(ColouredGraph {
            n: self.n,
            num_colours: self.num_colours,
            colours: self.colours.iter().map(|&c| map[c]).collect(),
        })
    }

    /// True when `p` maps every colour class onto itself.
    pub fn is_preserved_by(&self, p: &Permutation) -> bool {
        p.degree() == self.vertex_count()
            && self
                .edges()
                .all(|(i, j, c)| self.colour(p.apply(i), p.apply(j)) == c)
    }

    /// Search for a colour-respecting vertex bijection onto `other`.
    ///
    /// With fixed colours, colour `c` must go to colour `c`. Otherwise a colour
    /// bijection is found alongside the vertex map. The lexicographically
    /// least vertex mapping is returned.
    pub fn coloured_isomorphic(
        &self,
        other: &ColouredGraph,
        allow_colour_permutation: bool,
    ) -> Result<Option<IsoWitness>, GraphError> {
        if self.n != other.n {
            return Err(GraphError::SizeMismatch(self.vertex_count(), other.vertex_count()));
        }
        if self.num_colours != other.num_colours {
            if allow_colour_permutation {
                return Ok(None);
            }
            return Err(GraphError::ColourMismatch(self.num_colours, other.num_colours));
        }
        let size = self.vertex_count();
        let a = Matrix::from_graph(self);
        let b = Matrix::from_graph(other);
        Ok(find_isomorphism(
            size,
            self.num_colours,
            &a,
            &b,
            allow_colour_permutation,
        )
        .map(|(mapping, colour_map)| IsoWitness {
            mapping: Permutation::new(mapping).expect("search yields a bijection"),
            colour_relabel: colour_map,
        }))
    }

    /// Every pair of vertex-deleted subgraphs is isomorphic with colours held
    /// fixed.
    pub fn satisfies_complementarity(&self) -> bool {
        if self.n < 2 {
            return true;
        }
        let first = self.delete_vertex(0).expect("vertex 0 exists");
        (1..=self.n).all(|v| {
            let other = self.delete_vertex(v).expect("vertex in range");
            matches!(first.coloured_isomorphic(&other, false), Ok(Some(_)))
        })
    }

    /// Within each colour class, all connected components (isolated vertices
    /// included) are pairwise isomorphic as plain graphs.
    pub fn components_congruent(&self) -> bool {
        (0..self.num_colours).all(|c| {
            let comps = self.class_components(c);
            let first = &comps[0];
            comps[1..].iter().all(|comp| {
                comp.len() == first.len() && self.induced_isomorphic(c, first, comp)
            })
        })
    }

    /// Vertex sets of the connected components of colour class `c`.
    pub fn class_components(&self, c: usize) -> Vec<Vec<usize>> {
        let mut comp_of = vec![usize::MAX; self.vertex_count()];
        let mut comps = Vec::new();
        for start in 0..=self.n {
            if comp_of[start] != usize::MAX {
                continue;
            }
            let id = comps.len();
            let mut stack = vec![start];
            let mut members = Vec::new();
            comp_of[start] = id;
            while let Some(v) = stack.pop() {
                members.push(v);
                for u in 0..=self.n {
                    if u != v && comp_of[u] == usize::MAX && self.colour(u, v) == c {
                        comp_of[u] = id;
                        stack.push(u);
                    }
                }
            }
            members.sort_unstable();
            comps.push(members);
        }
        comps
    }

    fn induced_isomorphic(&self, c: usize, left: &[usize], right: &[usize]) -> bool {
        let adj = |vs: &[usize]| {
            let k = vs.len();
            let mut m = Matrix::new(k);
            for a in 0..k {
                for b in 0..k {
                    if a != b {
                        m.set(a, b, usize::from(self.colour(vs[a], vs[b]) == c));
                    }
                }
            }
            m
        };
        find_isomorphism(left.len(), 2, &adj(left), &adj(right), false).is_some()
    }

    /// Group of all vertex permutations fixing every colour class, using the
    /// default search bound.
    pub fn colour_automorphisms(&self) -> Result<PermGroup, GraphError> {
        self.colour_automorphisms_within(DEFAULT_SEARCH_BOUND)
    }

    pub fn colour_automorphisms_within(&self, bound: usize) -> Result<PermGroup, GraphError> {
        if self.n > bound {
            return Err(GraphError::AboveSearchBound { n: self.n, bound });
        }
        let m = Matrix::from_graph(self);
        let elements = all_automorphisms(self.vertex_count(), &m)
            .into_iter()
            .map(|imgs| Permutation::new(imgs).expect("search yields a bijection"))
            .collect();
        Ok(PermGroup::from_elements(self.vertex_count(), elements))
    }

    pub fn is_vertex_transitive(&self) -> Result<bool, GraphError> {
        Ok(self.colour_automorphisms()?.is_transitive())
    }

    pub fn is_vertex_transitive_within(&self, bound: usize) -> Result<bool, GraphError> {
        Ok(self.colour_automorphisms_within(bound)?.is_transitive())
    }

    /// Canonical representative under vertex permutation and colour renaming,
    /// using the default search bound.
    pub fn canonical_form(&self) -> Result<ColouredGraph, GraphError> {
        self.canonical_form_within(DEFAULT_SEARCH_BOUND)
    }

    /// The lexicographically least colex colour vector over all vertex
    /// orders, colours renamed by first appearance.
    pub fn canonical_form_within(&self, bound: usize) -> Result<ColouredGraph, GraphError> {
        if self.n > bound {
            return Err(GraphError::AboveSearchBound { n: self.n, bound });
        }
        let mut search = CanonSearch {
            g: self,
            order: Vec::with_capacity(self.vertex_count()),
            used: vec![false; self.vertex_count()],
            relabel: vec![usize::MAX; self.num_colours],
            next_label: 0,
            current: Vec::with_capacity(self.colours.len()),
            best: None,
        };
        search.run();
        let colours = search.best.expect("at least one vertex order exists");
        // Empty classes (only possible after deletion) get the trailing labels.
        let used = colours.iter().max().map_or(0, |&m| m + 1);
        Ok(ColouredGraph {
            n: self.n,
            num_colours: self.num_colours.max(used),
            colours,
        })
    }
}

pub(crate) fn edge_from_index(e: usize) -> (usize, usize) {
    let mut b = 1;
    while b * (b + 1) / 2 <= e {
        b += 1;
    }
    (e - b * (b - 1) / 2, b)
}

/// Vertex bijection plus, when colour renaming is allowed, the colour map
/// (`colour_relabel[c]` is the colour in the target of source colour `c`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoWitness {
    pub mapping: Permutation,
    pub colour_relabel: Option<Vec<usize>>,
}

/// Dense symmetric colour matrix; the diagonal is unused.
#[derive(Clone)]
struct Matrix {
    size: usize,
    data: Vec<usize>,
}

impl Matrix {
    fn new(size: usize) -> Self {
        Matrix {
            size,
            data: vec![usize::MAX; size * size],
        }
    }

    fn from_graph(g: &ColouredGraph) -> Self {
        let mut m = Matrix::new(g.vertex_count());
        for (i, j, c) in g.edges() {
            m.set(i, j, c);
            m.set(j, i, c);
        }
        m
    }

    #[inline]
    fn get(&self, i: usize, j: usize) -> usize {
        self.data[i * self.size + j]
    }

    #[inline]
    fn set(&mut self, i: usize, j: usize, c: usize) {
        self.data[i * self.size + j] = c;
    }

    fn degree_vector(&self, v: usize, num_colours: usize) -> Vec<usize> {
        let mut deg = vec![0; num_colours];
        for u in 0..self.size {
            if u != v {
                deg[self.get(u, v)] += 1;
            }
        }
        deg
    }
}

struct IsoSearch<'a> {
    size: usize,
    num_colours: usize,
    a: &'a Matrix,
    b: &'a Matrix,
    permute_colours: bool,
    inv_a: Vec<Vec<usize>>,
    inv_b: Vec<Vec<usize>>,
    mapping: Vec<usize>,
    used: Vec<bool>,
    colour_fwd: Vec<usize>,
    colour_bwd: Vec<usize>,
}

impl IsoSearch<'_> {
    fn extend(&mut self, v: usize) -> bool {
        if v == self.size {
            return true;
        }
        for w in 0..self.size {
            if self.used[w] || self.inv_a[v] != self.inv_b[w] {
                continue;
            }
            let mut fresh = Vec::new();
            let mut ok = true;
            for u in 0..v {
                let ca = self.a.get(u, v);
                let cb = self.b.get(self.mapping[u], w);
                if !self.permute_colours {
                    if ca != cb {
                        ok = false;
                        break;
                    }
                    continue;
                }
                match (self.colour_fwd[ca], self.colour_bwd[cb]) {
                    (f, _) if f == cb => {}
                    (usize::MAX, usize::MAX) => {
                        self.colour_fwd[ca] = cb;
                        self.colour_bwd[cb] = ca;
                        fresh.push(ca);
                    }
                    _ => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                self.mapping[v] = w;
                self.used[w] = true;
                if self.extend(v + 1) {
                    return true;
                }
                self.used[w] = false;
            }
            for ca in fresh {
                let cb = self.colour_fwd[ca];
                self.colour_fwd[ca] = usize::MAX;
                self.colour_bwd[cb] = usize::MAX;
            }
        }
        false
    }
}

fn find_isomorphism(
    size: usize,
    num_colours: usize,
    a: &Matrix,
    b: &Matrix,
    permute_colours: bool,
) -> Option<(Vec<usize>, Option<Vec<usize>>)> {
    let invariant = |m: &Matrix, v: usize| {
        let mut d = m.degree_vector(v, num_colours);
        if permute_colours {
            d.sort_unstable();
        }
        d
    };
    let inv_a: Vec<Vec<usize>> = (0..size).map(|v| invariant(a, v)).collect();
    let inv_b: Vec<Vec<usize>> = (0..size).map(|v| invariant(b, v)).collect();
    {
        let mut sa = inv_a.clone();
        let mut sb = inv_b.clone();
        sa.sort();
        sb.sort();
        if sa != sb {
            return None;
        }
    }
    let mut search = IsoSearch {
        size,
        num_colours,
        a,
        b,
        permute_colours,
        inv_a,
        inv_b,
        mapping: vec![usize::MAX; size],
        used: vec![false; size],
        colour_fwd: vec![usize::MAX; num_colours],
        colour_bwd: vec![usize::MAX; num_colours],
    };
    if !search.extend(0) {
        return None;
    }
    let colour_map = permute_colours.then(|| {
        // Colours absent from both graphs are paired in increasing order.
        let mut free_targets = (0..search.num_colours).filter(|&c| search.colour_bwd[c] == usize::MAX);
        search
            .colour_fwd
            .iter()
            .map(|&t| {
                if t == usize::MAX {
                    free_targets.next().expect("alphabets have equal size")
                } else {
                    t
                }
            })
            .collect()
    });
    Some((search.mapping, colour_map))
}

fn all_automorphisms(size: usize, m: &Matrix) -> Vec<Vec<usize>> {
    let num_colours = m.data.iter().filter(|&&c| c != usize::MAX).max().map_or(0, |&c| c + 1);
    let inv: Vec<Vec<usize>> = (0..size).map(|v| m.degree_vector(v, num_colours)).collect();
    let mut out = Vec::new();
    let mut mapping = vec![usize::MAX; size];
    let mut used = vec![false; size];

    fn rec(
        v: usize,
        size: usize,
        m: &Matrix,
        inv: &[Vec<usize>],
        mapping: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if v == size {
            out.push(mapping.clone());
            return;
        }
        for w in 0..size {
            if used[w] || inv[v] != inv[w] {
                continue;
            }
            if (0..v).all(|u| m.get(u, v) == m.get(mapping[u], w)) {
                mapping[v] = w;
                used[w] = true;
                rec(v + 1, size, m, inv, mapping, used, out);
                used[w] = false;
            }
        }
    }
    rec(0, size, m, &inv, &mut mapping, &mut used, &mut out);
    out
}

struct CanonSearch<'a> {
    g: &'a ColouredGraph,
    order: Vec<usize>,
    used: Vec<bool>,
    relabel: Vec<usize>,
    next_label: usize,
    current: Vec<usize>,
    best: Option<Vec<usize>>,
}

impl CanonSearch<'_> {
    fn run(&mut self) {
        let k = self.order.len();
        if k == self.g.vertex_count() {
            self.best = Some(self.current.clone());
            return;
        }
        for u in 0..self.g.vertex_count() {
            if self.used[u] {
                continue;
            }
            let start = self.current.len();
            let saved_next = self.next_label;
            let mut fresh = Vec::new();
            for i in 0..k {
                let c = self.g.colour(self.order[i], u);
                if self.relabel[c] == usize::MAX {
                    self.relabel[c] = self.next_label;
                    self.next_label += 1;
                    fresh.push(c);
                }
                self.current.push(self.relabel[c]);
            }
            let worse = self
                .best
                .as_ref()
                .is_some_and(|best| self.current[..] > best[..self.current.len()]);
            if !worse {
                self.order.push(u);
                self.used[u] = true;
                self.run();
                self.used[u] = false;
                self.order.pop();
            }
            self.current.truncate(start);
            for c in fresh {
                self.relabel[c] = usize::MAX;
            }
            self.next_label = saved_next;
        }
    }
}

/// A partition of a positive integer, entries sorted non-increasing.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut entries: Vec<usize>) -> Result<Self, GraphError> {
        if entries.is_empty() {
            return Err(GraphError::InvalidPartition("no entries".into()));
        }
        if entries.contains(&0) {
            return Err(GraphError::InvalidPartition("entries must be positive".into()));
        }
        entries.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(entries))
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn odd_count(&self) -> usize {
        self.0.iter().filter(|&&e| e % 2 == 1).count()
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for e in (1..=max.min(rest)).rev() {
                cur.push(e);
                rec(rest - e, e, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, n, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, e) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}

impl std::str::FromStr for Partition {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']');
        let entries = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| GraphError::InvalidPartition(format!("bad entry {t:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(entries)
    }
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use proptest::prelude::*;

    fn degrees(pairs: &[(usize, usize)]) -> BTreeMap<usize, usize> {
        pairs.iter().copied().collect()
    }

    #[test]
    fn edge_index_round_trip() {
        for e in 0..edge_count(8) {
            let (i, j) = edge_from_index(e);
            assert!(i < j);
            assert_eq!(edge_index(i, j), e);
        }
        assert_eq!(edge_index(0, 1), 0);
        assert_eq!(edge_index(1, 2), 2);
        assert_eq!(edge_index(3, 0), 3);
    }

    #[test]
    fn constructor_validation() {
        assert!(ColouredGraph::from_classes(2, &[vec![(0, 1), (1, 2)]]).is_err());
        assert!(ColouredGraph::from_classes(2, &[vec![(0, 1), (1, 2), (0, 2), (2, 0)]]).is_err());
        assert!(ColouredGraph::from_classes(2, &[vec![(0, 1), (1, 2), (0, 3)]]).is_err());
        assert!(ColouredGraph::from_classes(2, &[vec![(0, 1), (1, 2), (0, 2)], vec![]]).is_err());
        assert!(ColouredGraph::from_colour_vector(2, vec![0, 2, 0]).is_err());
        assert!(ColouredGraph::equilateral(0).is_err());
    }

    #[test]
    fn colour_degrees() {
        let k4 = ColouredGraph::equilateral(3).unwrap();
        assert_eq!(k4.vertex_colour_degrees(0).unwrap(), degrees(&[(0, 3)]));

        let ex1 = complementary_2111();
        assert_eq!(
            ex1.vertex_colour_degrees(0).unwrap(),
            degrees(&[(0, 1), (1, 1), (2, 1), (3, 2)])
        );

        let tri = classes(2, &[&[(0, 1)], &[(0, 2), (1, 2)]]);
        assert_eq!(tri.vertex_colour_degrees(2).unwrap(), degrees(&[(1, 2)]));
        assert_eq!(
            tri.vertex_colour_degrees(3),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 2 })
        );
    }

    #[test]
    fn uniformity() {
        assert!(ColouredGraph::equilateral(3).unwrap().is_vertex_uniform());
        assert!(uniform_not_complementary().is_vertex_uniform());
        let tri = classes(2, &[&[(0, 1)], &[(0, 2), (1, 2)]]);
        assert!(!tri.is_vertex_uniform());
        assert_eq!(tri.weak_type(), Err(GraphError::NotVertexUniform));
    }

    #[test]
    fn weak_types() {
        assert_eq!(
            ColouredGraph::equilateral(3).unwrap().weak_type().unwrap().entries(),
            &[3]
        );
        // 7-cycle in one colour, everything else in another.
        let g = ColouredGraph::from_fn(6, |i, j| {
            let d = (j - i) % 7;
            usize::from(d != 1 && d != 6)
        })
        .unwrap();
        assert_eq!(g.weak_type().unwrap().entries(), &[4, 2]);
        assert_eq!(complementary_2111().weak_type().unwrap().entries(), &[2, 1, 1, 1]);
    }

    #[test]
    fn delete_vertex_cases() {
        let k4 = ColouredGraph::equilateral(3).unwrap();
        assert_eq!(k4.delete_vertex(3).unwrap(), ColouredGraph::equilateral(2).unwrap());

        let d = pentagon().delete_vertex(4).unwrap();
        assert_eq!(d.colour_class(0), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(d.colour_class(1), vec![(0, 2), (0, 3), (1, 3)]);

        let d = complementary_2111().delete_vertex(0).unwrap();
        assert_eq!(d.num_colours(), 4);
        assert!(!d.is_vertex_uniform());

        assert_eq!(
            ColouredGraph::equilateral(1).unwrap().delete_vertex(0),
            Err(GraphError::TooSmall(1))
        );
        assert!(k4.delete_vertex(4).is_err());
    }

    #[test]
    fn deletion_keeps_empty_colours() {
        // Colour 1 is only the edge (0, 3).
        let g = classes(3, &[&[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)], &[(0, 3)]]);
        let d = g.delete_vertex(3).unwrap();
        assert_eq!(d.num_colours(), 2);
        assert!(d.colour_class(1).is_empty());
    }

    #[test]
    fn isomorphism_basics() {
        let g = complementary_2111();
        let w = g.coloured_isomorphic(&g, false).unwrap().unwrap();
        assert!(w.mapping.is_identity());
        assert_eq!(w.colour_relabel, None);

        let three = ColouredGraph::equilateral(3).unwrap();
        assert_eq!(
            g.coloured_isomorphic(&three, false),
            Err(GraphError::SizeMismatch(6, 4))
        );
    }

    #[test]
    fn the_two_32_types_are_not_isomorphic() {
        let hexagon = ColouredGraph::from_fn(5, |i, j| usize::from(!matches!(j - i, 1 | 5))).unwrap();
        let triangles =
            ColouredGraph::from_fn(5, |i, j| usize::from((j - i) % 2 != 0)).unwrap();
        assert_eq!(hexagon.weak_type().unwrap().entries(), &[3, 2]);
        assert_eq!(triangles.weak_type().unwrap().entries(), &[3, 2]);
        assert_eq!(hexagon.coloured_isomorphic(&triangles, true).unwrap(), None);
    }

    #[test]
    fn pentagon_vs_pentagram_relabelling() {
        let g = pentagon();
        // Pentagram in colour 0.
        let h = g.relabel_colours(&[1, 0]).unwrap();
        let doubling = Permutation::new((0..5).map(|i| (2 * i) % 5).collect()).unwrap();
        assert_eq!(g.relabel_vertices(&doubling), h);

        let w = g.coloured_isomorphic(&h, true).unwrap().unwrap();
        let relabel = w.colour_relabel.clone().unwrap();
        assert_eq!(
            g.relabel_vertices(&w.mapping).relabel_colours(&relabel).unwrap(),
            h
        );
        // Lexicographically least witness: identity on vertices, colours swapped.
        assert!(w.mapping.is_identity());
        assert_eq!(relabel, vec![1, 0]);

        let fixed = g.coloured_isomorphic(&h, false).unwrap().unwrap();
        assert_eq!(g.relabel_vertices(&fixed.mapping), h);
    }

    #[test]
    fn complementarity_examples() {
        assert!(ColouredGraph::equilateral(5).unwrap().satisfies_complementarity());
        assert!(!uniform_not_complementary().satisfies_complementarity());
        assert!(complementary_2111().satisfies_complementarity());
    }

    #[test]
    fn component_congruence() {
        // Two disjoint triangles in colour 0 on K_6.
        let g = ColouredGraph::from_fn(5, |i, j| usize::from((j - i) % 2 != 0)).unwrap();
        assert!(g.components_congruent());
        // Triangle plus 4-cycle in colour 0 on K_7.
        let tri_four = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (5, 6), (3, 6)];
        let g = ColouredGraph::from_fn(6, |i, j| usize::from(!tri_four.contains(&(i, j)))).unwrap();
        assert!(!g.components_congruent());
        assert!(hexagon_221().components_congruent());
    }

    #[test]
    fn automorphism_orders() {
        assert_eq!(
            ColouredGraph::equilateral(3).unwrap().colour_automorphisms().unwrap().order(),
            24
        );
        assert_eq!(pentagon().colour_automorphisms().unwrap().order(), 10);
        // Three disjoint edges in colour 0.
        let g = ColouredGraph::from_fn(5, |i, j| usize::from(!(j - i == 1 && i % 2 == 0))).unwrap();
        assert_eq!(g.weak_type().unwrap().entries(), &[4, 1]);
        assert_eq!(g.colour_automorphisms().unwrap().order(), 48);
        assert_eq!(
            ColouredGraph::equilateral(9).unwrap().colour_automorphisms(),
            Err(GraphError::AboveSearchBound { n: 9, bound: 8 })
        );
    }

    #[test]
    fn automorphisms_match_brute_force() {
        for g in [complementary_2111(), uniform_not_complementary(), hexagon_221(), pentagon()] {
            let group = g.colour_automorphisms().unwrap();
            let brute: Vec<Permutation> = itertools::Itertools::permutations(0..g.vertex_count(), g.vertex_count())
                .map(|p| Permutation::new(p).unwrap())
                .filter(|p| g.is_preserved_by(p))
                .collect();
            assert_eq!(group.elements(), brute.as_slice());
        }
    }

    #[test]
    fn transitivity_examples() {
        assert!(ColouredGraph::equilateral(4).unwrap().is_vertex_transitive().unwrap());
        assert!(!uniform_not_complementary().is_vertex_transitive().unwrap());
        let cyclic = ColouredGraph::from_fn(6, |i, j| {
            let d = j - i;
            d.min(7 - d) - 1
        })
        .unwrap();
        assert_eq!(cyclic.weak_type().unwrap().entries(), &[2, 2, 2]);
        assert!(cyclic.is_vertex_transitive().unwrap());
    }

    #[test]
    fn complementary_2111_has_no_automorphism_fixing_0_sending_2_to_4() {
        let group = complementary_2111().colour_automorphisms().unwrap();
        assert!(group.is_transitive());
        assert!(!group.elements().iter().any(|g| g.apply(0) == 0 && g.apply(2) == 4));
    }

    #[test]
    fn canonical_form_examples() {
        let g = uniform_not_complementary();
        let p = Permutation::new(vec![3, 5, 0, 1, 4, 2]).unwrap();
        assert_eq!(
            g.canonical_form().unwrap(),
            g.relabel_vertices(&p).canonical_form().unwrap()
        );
        let swapped = g.relabel_colours(&[1, 0, 2]).unwrap();
        assert_eq!(g.canonical_form().unwrap(), swapped.canonical_form().unwrap());

        let hexagon = ColouredGraph::from_fn(5, |i, j| usize::from(!matches!(j - i, 1 | 5))).unwrap();
        let triangles =
            ColouredGraph::from_fn(5, |i, j| usize::from((j - i) % 2 != 0)).unwrap();
        assert_ne!(
            hexagon.canonical_form().unwrap(),
            triangles.canonical_form().unwrap()
        );
    }

    #[test]
    fn canonical_form_is_brute_force_minimum() {
        let g = uniform_not_complementary();
        let mut best: Option<Vec<usize>> = None;
        for p in itertools::Itertools::permutations(0..6, 6) {
            let h = g.relabel_vertices(&Permutation::new(p).unwrap());
            let mut relabel = vec![usize::MAX; h.num_colours()];
            let mut next = 0;
            let v: Vec<usize> = h
                .colour_vector()
                .iter()
                .map(|&c| {
                    if relabel[c] == usize::MAX {
                        relabel[c] = next;
                        next += 1;
                    }
                    relabel[c]
                })
                .collect();
            if best.as_ref().is_none_or(|b| v < *b) {
                best = Some(v);
            }
        }
        assert_eq!(g.canonical_form().unwrap().colour_vector(), best.unwrap().as_slice());
    }

    #[test]
    fn partitions() {
        assert_eq!(Partition::all(4).len(), 5);
        assert_eq!(Partition::all(6).len(), 11);
        assert!(Partition::all(5).iter().all(|p| p.sum() == 5));
        assert_eq!(Partition::new(vec![1, 3, 2]).unwrap().entries(), &[3, 2, 1]);
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!("2,2,1".parse::<Partition>().unwrap().to_string(), "[2,2,1]");
        assert!("2,x".parse::<Partition>().is_err());
    }

    fn arb_graph() -> impl Strategy<Value = ColouredGraph> {
        (2usize..=5, 1usize..=4).prop_flat_map(|(n, r)| {
            proptest::collection::vec(0..r, edge_count(n)).prop_filter_map(
                "colours must all be used",
                move |v| ColouredGraph::from_colour_vector(n, v).ok(),
            )
        })
    }

    fn arb_graph_and_perm() -> impl Strategy<Value = (ColouredGraph, Permutation)> {
        arb_graph().prop_flat_map(|g| {
            let m = g.vertex_count();
            (
                Just(g),
                Just((0..m).collect::<Vec<_>>())
                    .prop_shuffle()
                    .prop_map(|v| Permutation::new(v).unwrap()),
            )
        })
    }

    proptest! {
        #[test]
        fn degrees_sum_to_dimension(g in arb_graph()) {
            for v in 0..g.vertex_count() {
                prop_assert_eq!(g.degree_vector(v).iter().sum::<usize>(), g.dimension());
            }
        }

        #[test]
        fn canonical_form_invariant((g, p) in arb_graph_and_perm()) {
            let c = g.canonical_form().unwrap();
            prop_assert_eq!(&c, &g.relabel_vertices(&p).canonical_form().unwrap());
            prop_assert_eq!(&c, &c.canonical_form().unwrap());
            let mut rev: Vec<usize> = (0..g.num_colours()).collect();
            rev.reverse();
            prop_assert_eq!(&c, &g.relabel_colours(&rev).unwrap().canonical_form().unwrap());
        }

        #[test]
        fn isomorphism_symmetric_and_relabel_invariant((g, p) in arb_graph_and_perm()) {
            let h = g.relabel_vertices(&p);
            let w = g.coloured_isomorphic(&h, false).unwrap().unwrap();
            prop_assert_eq!(g.relabel_vertices(&w.mapping), h.clone());
            let back = h.coloured_isomorphic(&g, false).unwrap().unwrap();
            prop_assert_eq!(h.relabel_vertices(&back.mapping), g.clone());
            prop_assert_eq!(
                g.relabel_vertices(&p).coloured_isomorphic(&h.relabel_vertices(&p), false).unwrap().is_some(),
                true
            );
        }

        #[test]
        fn structural_implications(g in arb_graph()) {
            let transitive = g.is_vertex_transitive().unwrap();
            let comp = g.satisfies_complementarity();
            if transitive {
                prop_assert!(comp);
            }
            if comp {
                prop_assert!(g.is_vertex_uniform());
                prop_assert!(g.components_congruent());
                if g.dimension() % 2 == 0 {
                    prop_assert!(g.weak_type().unwrap().entries().iter().all(|e| e % 2 == 0));
                }
            }
        }
    }
}
