//! Metric side: edge lengths, the realizability matrix, embeddings and
//! simplex centres.
//!
//! For a length table `l_ij` on vertices `0..=n` the realizability matrix is
//! the `n x n` matrix `m_ij = l_i0^2 + l_j0^2 - l_ij^2` (indices `1..=n`). It
//! equals twice the Gram matrix of `A_i - A_0`, so the table is realized by a
//! non-degenerate simplex exactly when that matrix is positive definite, and
//! a Cholesky factor of `M / 2` gives coordinates directly.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::colored_graph::{ColouredGraph, GraphError, DEFAULT_SEARCH_BOUND};
use crate::permgroup::{PermGroup, Permutation};

/// Relative tolerance used for every metric comparison unless overridden.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("invalid edge lengths: {0}")]
    InvalidLengths(String),
    #[error("edge lengths are not realizable by a non-degenerate simplex")]
    NotRealizable,
    #[error("points do not span a simplex: {0}")]
    Degenerate(String),
    #[error("length clustering is unreliable: gap {gap:e} is within (tol, 10 tol) of tol = {tol:e}")]
    AmbiguousClustering { gap: f64, tol: f64 },
    #[error("dimension {n} exceeds the search bound {bound}")]
    AboveSearchBound { n: usize, bound: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Positive length per colour index.
#[derive(Debug, Clone, PartialEq)]
pub struct LengthAssignment {
    lengths: Vec<f64>,
}

impl LengthAssignment {
    pub fn new(lengths: Vec<f64>) -> Result<Self, GeometryError> {
        if lengths.is_empty() {
            return Err(GeometryError::InvalidLengths("no lengths given".into()));
        }
        if let Some(l) = lengths.iter().find(|l| !(l.is_finite() && **l > 0.0)) {
            return Err(GeometryError::InvalidLengths(format!("length {l} is not positive")));
        }
        Ok(LengthAssignment { lengths })
    }

    pub fn lengths(&self) -> &[f64] {
        &self.lengths
    }

    pub fn len(&self) -> usize {
        self.lengths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lengths.is_empty()
    }

    pub fn is_injective(&self) -> bool {
        let mut sorted = self.lengths.clone();
        sorted.sort_by(f64::total_cmp);
        sorted.windows(2).all(|w| w[0] != w[1])
    }
}

/// Full symmetric table of the `(n+1) n / 2` edge lengths of an `n`-simplex.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeLengths {
    n: usize,
    table: Vec<f64>,
}

impl EdgeLengths {
    /// Validates a square table: zero diagonal, symmetric, positive off the diagonal.
    pub fn from_table(rows: &[Vec<f64>]) -> Result<Self, GeometryError> {
        let size = rows.len();
        if size < 2 {
            return Err(GeometryError::InvalidLengths("need at least two vertices".into()));
        }
        let mut table = Vec::with_capacity(size * size);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != size {
                return Err(GeometryError::InvalidLengths(format!("row {i} has length {}", row.len())));
            }
            table.extend_from_slice(row);
        }
        for i in 0..size {
            if table[i * size + i] != 0.0 {
                return Err(GeometryError::InvalidLengths(format!("l[{i}][{i}] is not zero")));
            }
            for j in i + 1..size {
                let a = table[i * size + j];
                if a != table[j * size + i] {
                    return Err(GeometryError::InvalidLengths(format!("l[{i}][{j}] != l[{j}][{i}]")));
                }
                if !(a.is_finite() && a > 0.0) {
                    return Err(GeometryError::InvalidLengths(format!("l[{i}][{j}] = {a} is not positive")));
                }
            }
        }
        Ok(EdgeLengths { n: size - 1, table })
    }

    /// Lengths obtained by giving each colour class of `g` its assigned length.
    pub fn from_colouring(g: &ColouredGraph, lengths: &LengthAssignment) -> Result<Self, GeometryError> {
        if lengths.len() != g.num_colours() {
            return Err(GeometryError::InvalidLengths(format!(
                "{} lengths for {} colours",
                lengths.len(),
                g.num_colours()
            )));
        }
        Ok(Self::from_fn(g.dimension(), |i, j| lengths.lengths[g.colour(i, j)]))
    }

    pub(crate) fn from_fn(n: usize, mut length: impl FnMut(usize, usize) -> f64) -> Self {
        let size = n + 1;
        let mut table = vec![0.0; size * size];
        for i in 0..size {
            for j in i + 1..size {
                let l = length(i, j);
                table[i * size + j] = l;
                table[j * size + i] = l;
            }
        }
        EdgeLengths { n, table }
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.table[i * (self.n + 1) + j]
    }

    pub fn max_length(&self) -> f64 {
        self.table.iter().copied().fold(0.0, f64::max)
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.table.chunks(self.n + 1).map(<[f64]>::to_vec).collect()
    }

    pub fn gram_matrix(&self) -> GramMatrix {
        let n = self.n;
        let mut m = vec![0.0; n * n];
        for i in 1..=n {
            for j in 1..=n {
                let lij = if i == j { 0.0 } else { self.get(i, j) };
                m[(i - 1) * n + (j - 1)] = self.get(i, 0).powi(2) + self.get(j, 0).powi(2) - lij * lij;
            }
        }
        GramMatrix { n, m }
    }

    /// Positive definiteness of the realizability matrix, decided by its
    /// Cholesky pivots against `tol * max |m_ij|`.
    pub fn is_realizable(&self, tol: f64) -> bool {
        self.gram_matrix().is_positive_definite(tol)
    }

    /// Coordinates with `A_0` at the origin.
    pub fn embed(&self, tol: f64) -> Result<EmbeddedSimplex, GeometryError> {
        let gram = self.gram_matrix();
        if !gram.is_positive_definite(tol) {
            return Err(GeometryError::NotRealizable);
        }
        let n = self.n;
        let half: Vec<f64> = gram.m.iter().map(|x| x / 2.0).collect();
        let lower = cholesky(n, &half).ok_or(GeometryError::NotRealizable)?;
        let mut points = vec![vec![0.0; n]];
        for i in 0..n {
            points.push(lower[i * n..(i + 1) * n].to_vec());
        }
        Ok(EmbeddedSimplex {
            points,
            tolerance: tol,
        })
    }
}

/// The symmetric realizability matrix `m_ij = l_i0^2 + l_j0^2 - l_ij^2`.
#[derive(Debug, Clone, PartialEq)]
pub struct GramMatrix {
    n: usize,
    m: Vec<f64>,
}

impl GramMatrix {
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.m[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.m.chunks(self.n).map(<[f64]>::to_vec).collect()
    }

    pub fn is_positive_definite(&self, tol: f64) -> bool {
        let scale = self.m.iter().fold(0.0f64, |a, x| a.max(x.abs()));
        if scale == 0.0 {
            return false;
        }
        ldl_pivots(self.n, &self.m).iter().all(|&p| p > tol * scale)
    }
}

/// Diagonal of `D` in `A = L D L^T` (no row exchanges). Stops early at a
/// non-positive pivot, which is then the last entry.
fn ldl_pivots(n: usize, a: &[f64]) -> Vec<f64> {
    let mut work = a.to_vec();
    let mut pivots = Vec::with_capacity(n);
    for k in 0..n {
        let p = work[k * n + k];
        pivots.push(p);
        if p <= 0.0 {
            break;
        }
        for i in k + 1..n {
            let f = work[i * n + k] / p;
            for j in k + 1..n {
                work[i * n + j] -= f * work[k * n + j];
            }
        }
    }
    pivots
}

/// Lower Cholesky factor of a symmetric positive definite row-major matrix.
fn cholesky(n: usize, a: &[f64]) -> Option<Vec<f64>> {
    let mut l = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..=i {
            let mut s = a[i * n + j];
            for k in 0..j {
                s -= l[i * n + k] * l[j * n + k];
            }
            if i == j {
                if s <= 0.0 {
                    return None;
                }
                l[i * n + i] = s.sqrt();
            } else {
                l[i * n + j] = s / l[j * n + j];
            }
        }
    }
    Some(l)
}

/// Solves `A x = b` for symmetric positive definite `A`.
fn spd_solve(n: usize, a: &[f64], b: &[f64]) -> Option<Vec<f64>> {
    let l = cholesky(n, a)?;
    let mut y = vec![0.0; n];
    for i in 0..n {
        let s: f64 = (0..i).map(|k| l[i * n + k] * y[k]).sum();
        y[i] = (b[i] - s) / l[i * n + i];
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let s: f64 = (i + 1..n).map(|k| l[k * n + i] * x[k]).sum();
        x[i] = (y[i] - s) / l[i * n + i];
    }
    Some(x)
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).powi(2)).sum::<f64>().sqrt()
}

/// `n + 1` affinely independent points in `R^d`, `d >= n`.
#[derive(Debug, Clone, PartialEq)]
pub struct EmbeddedSimplex {
    points: Vec<Vec<f64>>,
    tolerance: f64,
}

impl EmbeddedSimplex {
    pub fn new(points: Vec<Vec<f64>>, tolerance: f64) -> Result<Self, GeometryError> {
        if points.len() < 2 {
            return Err(GeometryError::Degenerate("need at least two points".into()));
        }
        let d = points[0].len();
        let n = points.len() - 1;
        if points.iter().any(|p| p.len() != d) {
            return Err(GeometryError::Degenerate("points have different dimensions".into()));
        }
        if points.iter().flatten().any(|x| !x.is_finite()) {
            return Err(GeometryError::Degenerate("non-finite coordinate".into()));
        }
        if d < n {
            return Err(GeometryError::Degenerate(format!(
                "{} points cannot be affinely independent in R^{d}",
                n + 1
            )));
        }
        if !(tolerance.is_finite() && tolerance >= 0.0) {
            return Err(GeometryError::Degenerate(format!("bad tolerance {tolerance}")));
        }
        let s = EmbeddedSimplex { points, tolerance };
        let gram = s.difference_gram(&(0..=n).collect::<Vec<_>>());
        let scale = gram.iter().fold(0.0f64, |a, x| a.max(x.abs()));
        if scale == 0.0 || ldl_pivots(n, &gram).iter().any(|&p| p <= tolerance * scale) {
            return Err(GeometryError::Degenerate("points are affinely dependent".into()));
        }
        Ok(s)
    }

    pub fn dimension(&self) -> usize {
        self.points.len() - 1
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        self.tolerance = tolerance;
        self
    }

    pub fn distance(&self, i: usize, j: usize) -> f64 {
        dist(&self.points[i], &self.points[j])
    }

    pub fn edge_lengths(&self) -> EdgeLengths {
        EdgeLengths::from_fn(self.dimension(), |i, j| self.distance(i, j))
    }

    /// Longest edge.
    pub fn diameter(&self) -> f64 {
        self.edge_lengths().max_length()
    }

    /// Absolute tolerance for length comparisons.
    fn length_tol(&self) -> f64 {
        self.tolerance * self.diameter()
    }

    pub fn scaled(&self, factor: f64) -> EmbeddedSimplex {
        EmbeddedSimplex {
            points: self
                .points
                .iter()
                .map(|p| p.iter().map(|x| x * factor).collect())
                .collect(),
            tolerance: self.tolerance,
        }
    }

    /// Gram matrix of `A_v - A_{vertices[0]}` for the remaining `vertices`.
    fn difference_gram(&self, vertices: &[usize]) -> Vec<f64> {
        let base = &self.points[vertices[0]];
        let diffs: Vec<Vec<f64>> = vertices[1..]
            .iter()
            .map(|&v| self.points[v].iter().zip(base).map(|(a, b)| a - b).collect())
            .collect();
        let k = diffs.len();
        let mut g = vec![0.0; k * k];
        for i in 0..k {
            for j in 0..k {
                g[i * k + j] = dot(&diffs[i], &diffs[j]);
            }
        }
        g
    }

    /// A distance-preserving bijection from facet `i` (all vertices but `i`)
    /// onto facet `j`, returned as a permutation of all vertices that also
    /// sends `i` to `j`. The lexicographically least such map is returned.
    pub fn facet_congruent(&self, i: usize, j: usize) -> Option<Permutation> {
        let size = self.points.len();
        if i >= size || j >= size {
            return None;
        }
        let tol = self.length_tol();
        let source: Vec<usize> = (0..size).filter(|&v| v != i).collect();
        let target: Vec<usize> = (0..size).filter(|&v| v != j).collect();
        let profile = |facet: &[usize], v: usize| {
            let mut d: Vec<f64> = facet.iter().filter(|&&u| u != v).map(|&u| self.distance(u, v)).collect();
            d.sort_by(f64::total_cmp);
            d
        };
        let src_prof: Vec<Vec<f64>> = source.iter().map(|&v| profile(&source, v)).collect();
        let tgt_prof: Vec<Vec<f64>> = target.iter().map(|&v| profile(&target, v)).collect();
        let close = |a: &[f64], b: &[f64]| a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol);

        let k = source.len();
        let mut image = vec![usize::MAX; k];
        let mut used = vec![false; k];

        #[allow(clippy::too_many_arguments)]
        fn rec(
            s: &EmbeddedSimplex,
            pos: usize,
            source: &[usize],
            target: &[usize],
            ok: &dyn Fn(usize, usize) -> bool,
            tol: f64,
            image: &mut Vec<usize>,
            used: &mut Vec<bool>,
        ) -> bool {
            if pos == source.len() {
                return true;
            }
            for t in 0..target.len() {
                if used[t] || !ok(pos, t) {
                    continue;
                }
                let fits = (0..pos).all(|p| {
                    (s.distance(source[p], source[pos]) - s.distance(target[image[p]], target[t])).abs() <= tol
                });
                if fits {
                    image[pos] = t;
                    used[t] = true;
                    if rec(s, pos + 1, source, target, ok, tol, image, used) {
                        return true;
                    }
                    used[t] = false;
                }
            }
            false
        }

        let ok = |p: usize, t: usize| close(&src_prof[p], &tgt_prof[t]);
        if !rec(self, 0, &source, &target, &ok, tol, &mut image, &mut used) {
            return None;
        }
        let mut images = vec![0; size];
        images[i] = j;
        for (p, &v) in source.iter().enumerate() {
            images[v] = target[image[p]];
        }
        Some(Permutation::new(images).expect("facet map extends to a bijection"))
    }

    /// All facets congruent to facet 0.
    pub fn is_equifacetal(&self) -> bool {
        (1..self.points.len()).all(|j| self.facet_congruent(0, j).is_some())
    }

    pub fn isometry_group(&self) -> Result<PermGroup, GeometryError> {
        self.isometry_group_within(DEFAULT_SEARCH_BOUND)
    }

    /// Vertex permutations preserving every pairwise distance.
    pub fn isometry_group_within(&self, bound: usize) -> Result<PermGroup, GeometryError> {
        let n = self.dimension();
        if n > bound {
            return Err(GeometryError::AboveSearchBound { n, bound });
        }
        let size = n + 1;
        let tol = self.length_tol();
        let mut out = Vec::new();
        let mut image = vec![usize::MAX; size];
        let mut used = vec![false; size];

        fn rec(
            s: &EmbeddedSimplex,
            v: usize,
            tol: f64,
            image: &mut Vec<usize>,
            used: &mut Vec<bool>,
            out: &mut Vec<Permutation>,
        ) {
            let size = image.len();
            if v == size {
                out.push(Permutation::new(image.clone()).expect("bijection"));
                return;
            }
            for w in 0..size {
                if used[w] {
                    continue;
                }
                if (0..v).all(|u| (s.distance(u, v) - s.distance(image[u], w)).abs() <= tol) {
                    image[v] = w;
                    used[w] = true;
                    rec(s, v + 1, tol, image, used, out);
                    used[w] = false;
                }
            }
        }
        rec(self, 0, tol, &mut image, &mut used, &mut out);
        Ok(PermGroup::from_elements(size, out))
    }

    /// Colours edges by length: single-linkage clusters of the sorted lengths
    /// at gap `tol * diameter`, colours numbered by increasing length.
    pub fn edge_length_partition(&self) -> Result<ColouredGraph, GeometryError> {
        let n = self.dimension();
        let tol = self.length_tol();
        let mut edges: Vec<(f64, usize, usize)> = (0..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .map(|(i, j)| (self.distance(i, j), i, j))
            .collect();
        edges.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut colour = 0;
        let mut assignment = Vec::with_capacity(edges.len());
        for (k, &(len, i, j)) in edges.iter().enumerate() {
            if k > 0 {
                let gap = len - edges[k - 1].0;
                if gap > tol {
                    if gap < 10.0 * tol {
                        return Err(GeometryError::AmbiguousClustering { gap, tol });
                    }
                    colour += 1;
                }
            }
            assignment.push((i, j, colour));
        }
        let mut colours = vec![0; crate::colored_graph::edge_count(n)];
        for (i, j, c) in assignment {
            colours[crate::colored_graph::edge_index(i, j)] = c;
        }
        Ok(ColouredGraph::from_colour_vector(n, colours)?)
    }

    pub fn centroid(&self) -> Vec<f64> {
        let d = self.points[0].len();
        let k = self.points.len() as f64;
        (0..d)
            .map(|c| self.points.iter().map(|p| p[c]).sum::<f64>() / k)
            .collect()
    }

    /// The point of the affine span equidistant from all vertices.
    pub fn circumcentre(&self) -> Result<Vec<f64>, GeometryError> {
        let n = self.dimension();
        let all: Vec<usize> = (0..=n).collect();
        let gram = self.difference_gram(&all);
        // y = sum lambda_i u_i with 2 <y, u_i> = |u_i|^2, i.e. G lambda = diag(G) / 2.
        let rhs: Vec<f64> = (0..n).map(|i| gram[i * n + i] / 2.0).collect();
        let lambda = spd_solve(n, &gram, &rhs)
            .ok_or_else(|| GeometryError::Degenerate("singular circumcentre system".into()))?;
        let base = &self.points[0];
        let mut x = base.clone();
        for (i, l) in lambda.iter().enumerate() {
            for (c, xc) in x.iter_mut().enumerate() {
                *xc += l * (self.points[i + 1][c] - base[c]);
            }
        }
        Ok(x)
    }

    /// Vertices weighted by the `(n-1)`-volume of the opposite facet.
    pub fn incentre(&self) -> Result<Vec<f64>, GeometryError> {
        let n = self.dimension();
        let weights: Vec<f64> = (0..=n)
            .map(|j| {
                let facet: Vec<usize> = (0..=n).filter(|&v| v != j).collect();
                if facet.len() == 1 {
                    return 1.0;
                }
                let k = facet.len() - 1;
                let gram = self.difference_gram(&facet);
                let det: f64 = ldl_pivots(k, &gram).iter().product();
                det.max(0.0).sqrt()
            })
            .collect();
        let total: f64 = weights.iter().sum();
        if total <= 0.0 {
            return Err(GeometryError::Degenerate("all facets have zero volume".into()));
        }
        let d = self.points[0].len();
        Ok((0..d)
            .map(|c| {
                self.points
                    .iter()
                    .zip(&weights)
                    .map(|(p, w)| p[c] * w)
                    .sum::<f64>()
                    / total
            })
            .collect())
    }

    /// Centroid, circumcentre and incentre pairwise within
    /// `10 * tolerance * diameter`.
    pub fn centres_coincide(&self) -> Result<bool, GeometryError> {
        Ok(self.centre_spread()? <= 10.0 * self.tolerance * self.diameter())
    }

    /// Largest pairwise distance between centroid, circumcentre and incentre.
    pub fn centre_spread(&self) -> Result<f64, GeometryError> {
        let c = self.centroid();
        let o = self.circumcentre()?;
        let i = self.incentre()?;
        Ok(dist(&c, &o).max(dist(&c, &i)).max(dist(&o, &i)))
    }
}

/// Assigns the colours of `g` distinct lengths near `base` and embeds.
///
/// Colour `c` gets `base * (1 + eps * (c + 1) / r)` with `eps` starting at
/// 1/4 and halved until the lengths are realizable. With a seed, the colours
/// are matched to the offsets `(k + 1) / r` through a seeded shuffle instead
/// of in index order.
pub fn realize_colouring(
    g: &ColouredGraph,
    base: f64,
    seed: Option<u64>,
    tol: f64,
) -> Result<(LengthAssignment, EmbeddedSimplex), GeometryError> {
    if !(base.is_finite() && base > 0.0) {
        return Err(GeometryError::InvalidLengths(format!("base length {base} is not positive")));
    }
    let r = g.num_colours();
    let mut slots: Vec<usize> = (0..r).collect();
    if let Some(seed) = seed {
        slots.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }
    let mut eps = 0.25;
    for _ in 0..64 {
        let lengths = LengthAssignment::new(
            slots
                .iter()
                .map(|&k| base * (1.0 + eps * (k + 1) as f64 / r as f64))
                .collect(),
        )?;
        let table = EdgeLengths::from_colouring(g, &lengths)?;
        if table.is_realizable(tol) {
            let simplex = table.embed(tol)?;
            return Ok((lengths, simplex));
        }
        eps /= 2.0;
    }
    Err(GeometryError::NotRealizable)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colored_graph::fixtures;
    use proptest::prelude::*;

    const TOL: f64 = DEFAULT_TOLERANCE;

    fn equilateral_lengths(n: usize) -> EdgeLengths {
        EdgeLengths::from_fn(n, |_, _| 1.0)
    }

    /// Tetrahedron with opposite edges equal: l01 = l23 = a, l02 = l13 = b, l03 = l12 = c.
    fn opposite_equal(a: f64, b: f64, c: f64) -> EdgeLengths {
        EdgeLengths::from_table(&[
            vec![0.0, a, b, c],
            vec![a, 0.0, c, b],
            vec![b, c, 0.0, a],
            vec![c, b, a, 0.0],
        ])
        .unwrap()
    }

    fn triangle(a: f64, b: f64, c: f64) -> EdgeLengths {
        // l01 = a, l02 = b, l12 = c
        EdgeLengths::from_table(&[vec![0.0, a, b], vec![a, 0.0, c], vec![b, c, 0.0]]).unwrap()
    }

    fn assert_close(a: &[f64], b: &[f64], eps: f64) {
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(b) {
            assert!((x - y).abs() <= eps, "{a:?} vs {b:?}");
        }
    }

    #[test]
    fn table_validation() {
        assert!(EdgeLengths::from_table(&[vec![0.0, 1.0], vec![2.0, 0.0]]).is_err());
        assert!(EdgeLengths::from_table(&[vec![0.0, -1.0], vec![-1.0, 0.0]]).is_err());
        assert!(EdgeLengths::from_table(&[vec![1.0, 1.0], vec![1.0, 0.0]]).is_err());
        assert!(EdgeLengths::from_table(&[vec![0.0]]).is_err());
        assert!(LengthAssignment::new(vec![1.0, 0.0]).is_err());
    }

    #[test]
    fn gram_matrix_examples() {
        assert_eq!(equilateral_lengths(2).gram_matrix().rows(), vec![vec![2.0, 1.0], vec![1.0, 2.0]]);
        assert_eq!(triangle(1.0, 1.0, 2.0).gram_matrix().rows(), vec![vec![2.0, -2.0], vec![-2.0, 2.0]]);

        // Hand substitution: m11 = 2, m22 = 2, m33 = 2 * 1.69,
        // m12 = 1 + 1 - 1.69, m13 = 1 + 1.69 - 1, m23 = 1 + 1.69 - 1.
        let m = opposite_equal(1.0, 1.0, 1.3).gram_matrix();
        let expected = [
            [2.0, 0.31, 1.69],
            [0.31, 2.0, 1.69],
            [1.69, 1.69, 3.38],
        ];
        for i in 0..3 {
            for j in 0..3 {
                assert!((m.get(i, j) - expected[i][j]).abs() < 1e-12);
                assert_eq!(m.get(i, j), m.get(j, i));
            }
        }
    }

    #[test]
    fn realizability_examples() {
        for n in 1..=8 {
            assert!(equilateral_lengths(n).is_realizable(TOL));
        }
        assert!(!triangle(1.0, 1.0, 2.0).is_realizable(TOL));
        assert!(opposite_equal(1.0, 1.0, 1.3).is_realizable(TOL));
        assert!(!opposite_equal(1.0, 1.0, 1.5).is_realizable(TOL));
    }

    #[test]
    fn embed_examples() {
        let s = EdgeLengths::from_table(&[vec![0.0, 5.0], vec![5.0, 0.0]]).unwrap().embed(TOL).unwrap();
        assert_eq!(s.points(), &[vec![0.0], vec![5.0]]);

        let s = equilateral_lengths(2).embed(TOL).unwrap();
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            assert!((s.distance(i, j) - 1.0).abs() < 1e-12);
        }

        let g = fixtures::pentagon();
        let lengths = LengthAssignment::new(vec![1.0, 1.1]).unwrap();
        let table = EdgeLengths::from_colouring(&g, &lengths).unwrap();
        let s = table.embed(TOL).unwrap();
        for (i, j, c) in g.edges() {
            assert!((s.distance(i, j) - lengths.lengths()[c]).abs() < 1e-12);
        }
        assert_eq!(triangle(1.0, 1.0, 2.0).embed(TOL), Err(GeometryError::NotRealizable));
    }

    #[test]
    fn realize_colouring_examples() {
        let (lengths, s) = realize_colouring(&ColouredGraph::equilateral(3).unwrap(), 1.0, None, TOL).unwrap();
        assert_eq!(lengths.len(), 1);
        assert!(s.is_equifacetal());
        assert_eq!(s.isometry_group().unwrap().order(), 24);

        let (lengths, s) = realize_colouring(&fixtures::complementary_2111(), 1.0, None, TOL).unwrap();
        assert!(lengths.is_injective());
        assert!(s.is_equifacetal());

        let g = fixtures::uniform_not_complementary();
        let (_, s) = realize_colouring(&g, 1.0, None, TOL).unwrap();
        assert!(!s.is_equifacetal());
        let recovered = s.edge_length_partition().unwrap();
        assert!(recovered.coloured_isomorphic(&g, true).unwrap().is_some());
    }

    #[test]
    fn seeded_realization_is_deterministic() {
        let g = fixtures::hexagon_221();
        let a = realize_colouring(&g, 2.0, Some(7), TOL).unwrap();
        let b = realize_colouring(&g, 2.0, Some(7), TOL).unwrap();
        assert_eq!(a, b);
        assert!(a.0.is_injective());
        assert!(a.1.is_equifacetal());
    }

    #[test]
    fn facet_congruence() {
        let s = opposite_equal(1.0, 1.0, 1.3).embed(TOL).unwrap();
        assert!(s.facet_congruent(2, 2).unwrap().is_identity());
        for i in 0..4 {
            for j in 0..4 {
                let p = s.facet_congruent(i, j).unwrap();
                assert_eq!(p.apply(i), j);
            }
        }
        // 3-4-5 triangle: facet 2 is the edge 01 (length 3), facet 1 the edge 02 (length 4).
        let t = triangle(3.0, 4.0, 5.0).embed(TOL).unwrap();
        assert!(t.facet_congruent(2, 1).is_none());
        assert!(!t.is_equifacetal());
    }

    #[test]
    fn equifacetal_checks() {
        assert!(equilateral_lengths(4).embed(TOL).unwrap().is_equifacetal());
        let (_, s) = realize_colouring(&fixtures::pentagon(), 1.0, None, TOL).unwrap();
        assert!(s.is_equifacetal());
        assert_eq!(s.isometry_group().unwrap().order(), 10);
    }

    #[test]
    fn perturbed_simplex_is_not_equifacetal() {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let table = EdgeLengths::from_fn(4, |_, _| 1.0 + rng.gen_range(-0.05..0.05));
        let s = table.embed(TOL).unwrap();
        assert!(!s.is_equifacetal());
        assert!(s.isometry_group().unwrap().order() == 1);
    }

    #[test]
    fn two_triangles_type_group() {
        let g = ColouredGraph::from_fn(5, |i, j| usize::from((j - i) % 2 != 0)).unwrap();
        let (_, s) = realize_colouring(&g, 1.0, None, TOL).unwrap();
        assert_eq!(s.isometry_group().unwrap().order(), 72);
    }

    #[test]
    fn length_partitions() {
        let s = equilateral_lengths(3).embed(TOL).unwrap();
        assert_eq!(s.edge_length_partition().unwrap(), ColouredGraph::equilateral(3).unwrap());
        let t = triangle(3.0, 4.0, 5.0).embed(TOL).unwrap();
        let g = t.edge_length_partition().unwrap();
        assert_eq!(g.num_colours(), 3);
        assert_eq!(g.colour(0, 1), 0);
        assert_eq!(g.colour(1, 2), 2);
    }

    #[test]
    fn ambiguous_clustering() {
        let s = triangle(1.0, 1.0 + 5e-9, 1.2).embed(TOL).unwrap();
        assert!(matches!(
            s.edge_length_partition(),
            Err(GeometryError::AmbiguousClustering { .. })
        ));
    }

    #[test]
    fn equilateral_triangle_centres() {
        let h = 3f64.sqrt() / 2.0;
        let s = EmbeddedSimplex::new(vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![0.5, h]], TOL).unwrap();
        let expected = [0.5, 3f64.sqrt() / 6.0];
        assert_close(&s.centroid(), &expected, 1e-12);
        assert_close(&s.circumcentre().unwrap(), &expected, 1e-12);
        assert_close(&s.incentre().unwrap(), &expected, 1e-12);
        assert!(s.centres_coincide().unwrap());
    }

    #[test]
    fn right_triangle_centres() {
        let s = EmbeddedSimplex::new(vec![vec![0.0, 0.0], vec![3.0, 0.0], vec![0.0, 4.0]], TOL).unwrap();
        assert_close(&s.circumcentre().unwrap(), &[1.5, 2.0], 1e-12);
        assert_close(&s.centroid(), &[1.0, 4.0 / 3.0], 1e-12);
        // Classical incentre: inradius 1, touching both legs.
        assert_close(&s.incentre().unwrap(), &[1.0, 1.0], 1e-12);
        assert!(!s.centres_coincide().unwrap());
    }

    #[test]
    fn tetrahedron_and_regular_centres() {
        let s = opposite_equal(1.0, 1.0, 1.3).embed(TOL).unwrap();
        assert!(s.centres_coincide().unwrap());
        let s = equilateral_lengths(5).embed(TOL).unwrap();
        assert!(s.centres_coincide().unwrap());
    }

    #[test]
    fn degenerate_points_rejected() {
        let err = EmbeddedSimplex::new(vec![vec![0.0, 0.0], vec![1.0, 1.0], vec![2.0, 2.0]], TOL);
        assert!(matches!(err, Err(GeometryError::Degenerate(_))));
        let err = EmbeddedSimplex::new(vec![vec![0.0], vec![1.0], vec![2.0]], TOL);
        assert!(matches!(err, Err(GeometryError::Degenerate(_))));
    }

    #[test]
    fn higher_ambient_dimension_accepted() {
        let s = EmbeddedSimplex::new(vec![vec![0.0, 0.0, 0.0], vec![1.0, 0.0, 0.0], vec![0.0, 1.0, 0.0]], TOL).unwrap();
        assert_eq!(s.dimension(), 2);
        assert!(!s.is_equifacetal());
        assert_eq!(s.circumcentre().unwrap().len(), 3);
    }

    proptest! {
        #[test]
        fn triangle_inequality_agreement(a in 0.1f64..10.0, b in 0.1f64..10.0, c in 0.1f64..10.0) {
            let lengths = [a, b, c];
            let max = lengths.iter().copied().fold(0.0, f64::max);
            let slack = a + b + c - 2.0 * max;
            prop_assume!(slack.abs() > 1e-7 * max);
            prop_assert_eq!(triangle(a, b, c).is_realizable(TOL), slack > 0.0);
        }

        #[test]
        fn scaling_invariance(lambda in 0.1f64..10.0) {
            let g = fixtures::hexagon_221();
            let (_, s) = realize_colouring(&g, 1.0, None, TOL).unwrap();
            let t = s.scaled(lambda);
            prop_assert_eq!(t.is_equifacetal(), s.is_equifacetal());
            prop_assert_eq!(t.edge_length_partition().unwrap(), s.edge_length_partition().unwrap());
            prop_assert_eq!(t.isometry_group().unwrap(), s.isometry_group().unwrap());
            prop_assert!(t.edge_lengths().is_realizable(TOL));
            let c = s.circumcentre().unwrap();
            let ct = t.circumcentre().unwrap();
            for (x, y) in c.iter().zip(&ct) {
                prop_assert!((x * lambda - y).abs() < 1e-9 * lambda);
            }
        }
    }
}
