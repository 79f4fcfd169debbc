//! Explicit colourings of `K_{n+1}` and the partition realizability classifier.

use std::fmt;

use thiserror::Error;

use crate::colored_graph::{ColouredGraph, GraphError, Partition};
use crate::permgroup::{OrbitDomain, Orbit, PermError, PermGroup, Permutation, DEFAULT_ELEMENT_BOUND};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("dimension {0} is not valid here")]
    BadDimension(usize),
    #[error("invalid colour grouping: {0}")]
    InvalidGrouping(String),
    #[error("colour {0} is not a union of even cycles alternating vertex parity")]
    NotSplittable(usize),
    #[error("generated group is not transitive on the vertices")]
    NotTransitive,
    #[error("exponent {0} outside the supported range 1..=4")]
    ExponentOutOfRange(u32),
    #[error("partition {partition} does not sum to {n}")]
    MalformedPartition { partition: Partition, n: usize },
    #[error("facet extension is ambiguous: {0} consistent degree vectors")]
    AmbiguousExtension(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// Colouring of `K_{n+1}` by cyclic difference: edge `{i, j}` gets colour
/// `k - 1` where `k = min(|i-j|, n+1-|i-j|)`.
pub fn cyclic_colouring(n: usize) -> Result<ColouredGraph, ConstructError> {
    if n == 0 {
        return Err(ConstructError::BadDimension(n));
    }
    let m = n + 1;
    Ok(ColouredGraph::from_fn(n, |i, j| {
        let d = j - i;
        d.min(m - d) - 1
    })?)
}

/// Coarsens a colouring: every colour in `grouping[k]` becomes colour `k`.
pub fn merge_colours(g: &ColouredGraph, grouping: &[Vec<usize>]) -> Result<ColouredGraph, ConstructError> {
    let mut target = vec![usize::MAX; g.num_colours()];
    for (k, group) in grouping.iter().enumerate() {
        if group.is_empty() {
            return Err(ConstructError::InvalidGrouping(format!("group {k} is empty")));
        }
        for &c in group {
            if c >= g.num_colours() {
                return Err(ConstructError::InvalidGrouping(format!("no colour {c}")));
            }
            if target[c] != usize::MAX {
                return Err(ConstructError::InvalidGrouping(format!(
                    "colour {c} appears in more than one group"
                )));
            }
            target[c] = k;
        }
    }
    if let Some(c) = target.iter().position(|&t| t == usize::MAX) {
        return Err(ConstructError::InvalidGrouping(format!("colour {c} is not covered")));
    }
    Ok(ColouredGraph::from_colour_vector(
        g.dimension(),
        g.colour_vector().iter().map(|&c| target[c]).collect(),
    )?)
}

/// Splits colour `c` into two perfect matchings.
///
/// The class must be 2-regular with every edge joining an even and an odd
/// vertex. Each cycle is walked from its least vertex towards that vertex's
/// smaller neighbour; edges leaving even vertices keep colour `c`, edges
/// leaving odd vertices receive the new colour `num_colours()`.
pub fn split_colour(g: &ColouredGraph, c: usize) -> Result<ColouredGraph, ConstructError> {
    if c >= g.num_colours() {
        return Err(ConstructError::InvalidGrouping(format!("no colour {c}")));
    }
    let size = g.vertex_count();
    let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); size];
    for (i, j) in g.colour_class(c) {
        if i % 2 == j % 2 {
            return Err(ConstructError::NotSplittable(c));
        }
        nbrs[i].push(j);
        nbrs[j].push(i);
    }
    if nbrs.iter().any(|v| v.len() != 2) {
        return Err(ConstructError::NotSplittable(c));
    }

    let fresh = g.num_colours();
    let mut colours = g.colour_vector().to_vec();
    let mut visited = vec![false; size];
    for start in 0..size {
        if visited[start] {
            continue;
        }
        let mut prev = start;
        let mut cur = nbrs[start][0].min(nbrs[start][1]);
        visited[start] = true;
        if start % 2 == 1 {
            colours[crate::colored_graph::edge_index(start, cur)] = fresh;
        }
        while cur != start {
            visited[cur] = true;
            let next = if nbrs[cur][0] == prev { nbrs[cur][1] } else { nbrs[cur][0] };
            if cur % 2 == 1 {
                colours[crate::colored_graph::edge_index(cur, next)] = fresh;
            }
            prev = cur;
            cur = next;
        }
    }
    Ok(ColouredGraph::from_colour_vector(g.dimension(), colours)?)
}

/// Colours each edge orbit of the group generated by `generators` with its
/// own colour, orbits numbered by their least edge.
pub fn orbit_colouring(generators: &[Permutation]) -> Result<ColouredGraph, ConstructError> {
    let degree = generators.first().map(Permutation::degree).unwrap_or(0);
    if degree < 2 {
        return Err(ConstructError::BadDimension(degree.saturating_sub(1)));
    }
    let group = PermGroup::generate(degree, generators.to_vec(), DEFAULT_ELEMENT_BOUND)?;
    if !group.is_transitive() {
        return Err(ConstructError::NotTransitive);
    }
    let mut classes = Vec::new();
    for orbit in group.orbits(&OrbitDomain::Pairs) {
        if let Orbit::Pairs(pairs) = orbit {
            classes.push(pairs);
        }
    }
    Ok(ColouredGraph::from_classes(degree - 1, &classes)?)
}

/// Orbit colouring of the regular action of `(Z/2)^r` on `r`-bit strings:
/// colour `mask - 1` is the matching `i <-> i xor mask`.
pub fn elementary_abelian_colouring(r: u32) -> Result<ColouredGraph, ConstructError> {
    if !(1..=4).contains(&r) {
        return Err(ConstructError::ExponentOutOfRange(r));
    }
    let m = 1usize << r;
    let generators: Vec<Permutation> = (0..r)
        .map(|b| Permutation::new((0..m).map(|i| i ^ (1 << b)).collect()).expect("xor is a bijection"))
        .collect();
    orbit_colouring(&generators)
}

/// Circle-method 1-factorization of `K_{n+1}` for odd `n`: vertex `n` is the
/// hub, and round `k` pairs `k` with the hub and `k+i` with `k-i` (mod `n`).
pub fn round_robin_one_factorization(n: usize) -> Result<ColouredGraph, ConstructError> {
    if n.is_multiple_of(2) {
        return Err(ConstructError::BadDimension(n));
    }
    let mut classes = Vec::with_capacity(n);
    for k in 0..n {
        let mut round = vec![(k, n)];
        for i in 1..=(n - 1) / 2 {
            round.push(((k + i) % n, (k + n - i) % n));
        }
        classes.push(round);
    }
    Ok(ColouredGraph::from_classes(n, &classes)?)
}

/// Why a partition cannot be realized by a complementarity-satisfying colouring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Obstruction {
    /// Odd entry in even dimension.
    Parity,
    /// Even number of odd entries in odd dimension.
    SumParity,
    /// All ones with `n+1` not a power of two.
    PowerOfTwo,
    /// More entries than the dimension.
    TooManyColours,
}

impl Obstruction {
    pub fn tag(self) -> &'static str {
        match self {
            Obstruction::Parity => "parity",
            Obstruction::SumParity => "sum-parity",
            Obstruction::PowerOfTwo => "power-of-two",
            Obstruction::TooManyColours => "too-many-colours",
        }
    }
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Realizability {
    Realizable(ColouredGraph),
    NotRealizable(Obstruction),
    /// None of the known criteria decides the partition.
    Unknown,
}

/// Largest number of odd entries reachable by splitting cyclic classes in
/// odd dimension `n`.
pub fn odd_entry_bound(n: usize) -> usize {
    let half = n.div_ceil(2);
    if half % 2 == 1 {
        half
    } else {
        (n + 3) / 2
    }
}

/// Decides whether `p` is the weak type of some complementarity-satisfying
/// colouring of `K_{n+1}`, returning a witness when one is constructed.
pub fn realize_partition(p: &Partition, n: usize) -> Result<Realizability, ConstructError> {
    if n == 0 || p.sum() != n {
        return Err(ConstructError::MalformedPartition { partition: p.clone(), n });
    }
    if p.len() > n {
        return Ok(Realizability::NotRealizable(Obstruction::TooManyColours));
    }
    let odd = p.odd_count();
    if n.is_multiple_of(2) {
        if odd > 0 {
            return Ok(Realizability::NotRealizable(Obstruction::Parity));
        }
        return Ok(Realizability::Realizable(dihedral_witness(p, n)?));
    }

    if odd.is_multiple_of(2) {
        return Ok(Realizability::NotRealizable(Obstruction::SumParity));
    }
    let all_ones = p.entries().iter().all(|&e| e == 1);
    if all_ones && !(n + 1).is_power_of_two() {
        return Ok(Realizability::NotRealizable(Obstruction::PowerOfTwo));
    }
    if odd <= odd_entry_bound(n) {
        return Ok(Realizability::Realizable(dihedral_witness(p, n)?));
    }
    if all_ones {
        let r = (n + 1).trailing_zeros();
        if r <= 4 {
            return Ok(Realizability::Realizable(elementary_abelian_colouring(r)?));
        }
        let m = n + 1;
        let generators: Vec<Permutation> = (0..r)
            .map(|b| Permutation::new((0..m).map(|i| i ^ (1 << b)).collect()).expect("xor is a bijection"))
            .collect();
        return Ok(Realizability::Realizable(orbit_colouring(&generators)?));
    }
    Ok(Realizability::Unknown)
}

/// Cyclic colouring, split on the first few odd differences, then merged to
/// the entries of `p`. The result is invariant under rotation by two and the
/// reflection `i -> 1 - i`.
fn dihedral_witness(p: &Partition, n: usize) -> Result<ColouredGraph, ConstructError> {
    let mut g = cyclic_colouring(n)?;
    // Degree-1 and degree-2 building blocks, as colour indices of `g`.
    let mut ones: Vec<usize> = Vec::new();
    let mut twos: Vec<usize> = Vec::new();
    if n.is_multiple_of(2) {
        twos.extend(0..n / 2);
    } else {
        let half = n.div_ceil(2);
        ones.push(half - 1);
        let splits = (p.odd_count() - 1) / 2;
        let mut done = 0;
        for k in 1..half {
            if k % 2 == 1 && done < splits {
                let fresh = g.num_colours();
                g = split_colour(&g, k - 1)?;
                ones.push(k - 1);
                ones.push(fresh);
                done += 1;
            } else {
                twos.push(k - 1);
            }
        }
        debug_assert_eq!(done, splits, "odd entry count above the splitting bound");
    }

    let mut grouping: Vec<Vec<usize>> = vec![Vec::new(); p.len()];
    let mut ones = ones.into_iter();
    let mut twos = twos.into_iter();
    for (k, &e) in p.entries().iter().enumerate() {
        if e % 2 == 1 {
            grouping[k].push(ones.next().expect("one degree-1 block per odd entry"));
        }
        for _ in 0..e / 2 {
            grouping[k].push(twos.next().expect("enough degree-2 blocks"));
        }
    }
    debug_assert!(ones.next().is_none() && twos.next().is_none());
    merge_colours(&g, &grouping)
}

/// A vertex-uniform colouring of `K_{N+1}` restricting to a given `K_N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetExtension {
    /// The new apex is the last vertex.
    pub graph: ColouredGraph,
    pub satisfies_complementarity: bool,
}

/// Adds an apex to `facet` so the result is vertex-uniform, if possible.
///
/// Target degrees `d_c` range over `[max_v deg_c(v), min_v deg_c(v) + 1]` and
/// must sum to the new dimension; every facet vertex then misses exactly one
/// colour, which becomes the colour of its apex edge, and the apex degrees
/// must reproduce `d_c`. More than one consistent vector is an error.
pub fn extend_facet(facet: &ColouredGraph) -> Result<Option<FacetExtension>, ConstructError> {
    let big_n = facet.vertex_count();
    let r = facet.num_colours();
    let degrees: Vec<Vec<usize>> = (0..big_n).map(|v| facet.degree_vector(v)).collect();
    let lo: Vec<usize> = (0..r).map(|c| degrees.iter().map(|d| d[c]).max().unwrap_or(0)).collect();
    let hi: Vec<usize> = (0..r).map(|c| degrees.iter().map(|d| d[c]).min().unwrap_or(0) + 1).collect();
    if lo.iter().zip(&hi).any(|(l, h)| l > h) {
        return Ok(None);
    }
    let base: usize = lo.iter().sum();
    if base > big_n {
        return Ok(None);
    }
    let flexible: Vec<usize> = (0..r).filter(|&c| hi[c] > lo[c]).collect();
    let bumps = big_n - base;
    if bumps > flexible.len() {
        return Ok(None);
    }

    let mut found: Vec<Vec<usize>> = Vec::new();
    for chosen in itertools::Itertools::combinations(flexible.iter().copied(), bumps) {
        let mut target = lo.clone();
        for c in chosen {
            target[c] += 1;
        }
        if let Some(apex) = apex_colours(&degrees, &target) {
            let mut apex_degree = vec![0; r];
            for &c in &apex {
                apex_degree[c] += 1;
            }
            if apex_degree == target {
                found.push(apex);
            }
        }
    }
    match found.len() {
        0 => Ok(None),
        1 => {
            let apex = found.pop().expect("one candidate");
            let n = big_n;
            let mut colours = vec![0; crate::colored_graph::edge_count(n)];
            for (i, j, c) in facet.edges() {
                colours[crate::colored_graph::edge_index(i, j)] = c;
            }
            for (v, &c) in apex.iter().enumerate() {
                colours[crate::colored_graph::edge_index(v, n)] = c;
            }
            let graph = ColouredGraph::from_colour_vector(n, colours)?;
            debug_assert!(graph.is_vertex_uniform());
            let satisfies_complementarity = graph.satisfies_complementarity();
            Ok(Some(FacetExtension {
                graph,
                satisfies_complementarity,
            }))
        }
        k => Err(ConstructError::AmbiguousExtension(k)),
    }
}

/// The single deficient colour at each vertex, or `None` if some vertex
/// misses zero or several.
fn apex_colours(degrees: &[Vec<usize>], target: &[usize]) -> Option<Vec<usize>> {
    degrees
        .iter()
        .map(|d| {
            let mut missing = d.iter().zip(target).enumerate().filter(|(_, (a, t))| a != t);
            match (missing.next(), missing.next()) {
                (Some((c, (a, t))), None) if *t == a + 1 => Some(c),
                _ => None,
            }
        })
        .collect()
}
