//! Exhaustive low-dimensional enumeration of strong combinatorial types.
//!
//! For each partition of `n` the search assigns colours edge by edge under
//! per-vertex degree budgets, so every leaf is a vertex-uniform colouring of
//! `K_{n+1}`. Leaves are reduced to canonical form (which already absorbs
//! colour relabelling), deduplicated, and then filtered by complementarity.

use std::collections::BTreeSet;

use rayon::prelude::*;
use thiserror::Error;

use crate::colored_graph::{edge_count, edge_index, ColouredGraph, GraphError, Partition};
use crate::permgroup::{Fingerprint, OrbitDomain, PermError, PermGroup};

/// Largest dimension enumerated without an explicit override.
pub const DEFAULT_MAX_DIMENSION: usize = 6;

/// Hard ceiling: automorphism and canonical-form searches are exhaustive.
pub const HARD_MAX_DIMENSION: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("dimension {n} is outside the supported range 2..={bound}")]
    DimensionOutOfRange { n: usize, bound: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Perm(#[from] PermError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub dimension: usize,
    pub canonical: ColouredGraph,
    pub weak: Partition,
    pub group_order: usize,
    pub group_fingerprint: Fingerprint,
    /// Orbit sizes of the automorphism group on each colour class, largest first.
    pub edge_orbit_sizes: Vec<Vec<usize>>,
}

impl CatalogEntry {
    pub fn from_graph(g: &ColouredGraph) -> Result<Self, CatalogError> {
        let canonical = g.canonical_form_within(HARD_MAX_DIMENSION)?;
        let group = canonical.colour_automorphisms_within(HARD_MAX_DIMENSION)?;
        let edge_orbit_sizes = colour_orbit_sizes(&canonical, &group);
        Ok(CatalogEntry {
            dimension: canonical.dimension(),
            weak: canonical.weak_type()?,
            group_order: group.order(),
            group_fingerprint: group.fingerprint()?,
            edge_orbit_sizes,
            canonical,
        })
    }
}

/// Orbit sizes of `group` on each colour class of `g`, largest first.
pub fn colour_orbit_sizes(g: &ColouredGraph, group: &PermGroup) -> Vec<Vec<usize>> {
    g.classes()
        .into_iter()
        .map(|class| {
            let mut sizes: Vec<usize> = group.orbits(&OrbitDomain::Edges(class)).iter().map(|o| o.len()).collect();
            sizes.sort_unstable_by(|a, b| b.cmp(a));
            sizes
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColourOrbits {
    pub colour: usize,
    /// Edges of this colour at each vertex.
    pub degree: usize,
    pub orbit_sizes: Vec<usize>,
}

impl ColourOrbits {
    pub fn is_single_orbit(&self) -> bool {
        self.orbit_sizes.len() == 1
    }
}

pub fn edge_orbit_report(entry: &CatalogEntry) -> Vec<ColourOrbits> {
    entry
        .edge_orbit_sizes
        .iter()
        .enumerate()
        .map(|(c, sizes)| ColourOrbits {
            colour: c,
            degree: entry.canonical.degree_vector(0)[c],
            orbit_sizes: sizes.clone(),
        })
        .collect()
}

fn check_range(n: usize, bound: usize) -> Result<(), CatalogError> {
    let bound = bound.min(HARD_MAX_DIMENSION);
    if !(2..=bound).contains(&n) {
        return Err(CatalogError::DimensionOutOfRange { n, bound });
    }
    Ok(())
}

/// All vertex-uniform colourings of `K_{n+1}` up to vertex and colour
/// relabelling, as canonical forms sorted by (weak type, canonical form).
pub fn vertex_uniform_types(n: usize) -> Result<Vec<ColouredGraph>, CatalogError> {
    vertex_uniform_types_within(n, DEFAULT_MAX_DIMENSION)
}

pub fn vertex_uniform_types_within(n: usize, bound: usize) -> Result<Vec<ColouredGraph>, CatalogError> {
    check_range(n, bound)?;
    let per_partition: Vec<Vec<ColouredGraph>> = Partition::all(n)
        .par_iter()
        .map(|p| uniform_for_partition(n, p))
        .collect::<Result<_, _>>()?;
    let mut types: Vec<(Partition, ColouredGraph)> = per_partition
        .into_iter()
        .flatten()
        .map(|g| Ok((g.weak_type()?, g)))
        .collect::<Result<_, CatalogError>>()?;
    types.sort();
    Ok(types.into_iter().map(|(_, g)| g).collect())
}

/// All complementarity-satisfying colourings of `K_{n+1}` up to vertex and
/// colour relabelling, sorted by (weak type, canonical form).
pub fn enumerate_strong_types(n: usize) -> Result<Vec<CatalogEntry>, CatalogError> {
    enumerate_strong_types_within(n, DEFAULT_MAX_DIMENSION)
}

pub fn enumerate_strong_types_within(n: usize, bound: usize) -> Result<Vec<CatalogEntry>, CatalogError> {
    let types = vertex_uniform_types_within(n, bound)?;
    types
        .par_iter()
        .filter(|g| g.satisfies_complementarity())
        .map(CatalogEntry::from_graph)
        .collect()
}

/// Canonical vertex-uniform colourings whose colour `c` has degree `p[c]`.
fn uniform_for_partition(n: usize, p: &Partition) -> Result<Vec<ColouredGraph>, CatalogError> {
    let size = n + 1;
    // A colour class that is regular of degree d on n+1 vertices needs d(n+1) even.
    if p.entries().iter().any(|d| d * size % 2 == 1) {
        return Ok(Vec::new());
    }
    let mut leaves = Vec::new();
    let mut colours = vec![usize::MAX; edge_count(n)];
    let mut budget: Vec<Vec<usize>> = vec![p.entries().to_vec(); size];

    // Vertex 0 sees colour 0 on its first p[0] edges, then colour 1, and so on.
    let mut v = 1;
    for (c, &d) in p.entries().iter().enumerate() {
        for _ in 0..d {
            colours[edge_index(0, v)] = c;
            budget[0][c] -= 1;
            budget[v][c] -= 1;
            v += 1;
        }
    }
    let edges: Vec<(usize, usize)> = (1..size).flat_map(|i| (i + 1..size).map(move |j| (i, j))).collect();
    fill(&edges, 0, &mut colours, &mut budget, &mut leaves);

    let canon: BTreeSet<ColouredGraph> = leaves
        .into_par_iter()
        .map(|cv| ColouredGraph::from_colour_vector(n, cv)?.canonical_form_within(HARD_MAX_DIMENSION))
        .collect::<Result<_, _>>()?;
    Ok(canon.into_iter().collect())
}

fn fill(
    edges: &[(usize, usize)],
    k: usize,
    colours: &mut Vec<usize>,
    budget: &mut Vec<Vec<usize>>,
    leaves: &mut Vec<Vec<usize>>,
) {
    if k == edges.len() {
        leaves.push(colours.clone());
        return;
    }
    let (i, j) = edges[k];
    for c in 0..budget[i].len() {
        if budget[i][c] == 0 || budget[j][c] == 0 {
            continue;
        }
        budget[i][c] -= 1;
        budget[j][c] -= 1;
        colours[edge_index(i, j)] = c;
        fill(edges, k + 1, colours, budget, leaves);
        budget[i][c] += 1;
        budget[j][c] += 1;
    }
}

/// Expected (weak type, automorphism group order) rows, one per strong type,
/// in catalogue order.
pub fn known_table(n: usize) -> Result<Vec<(Partition, usize)>, CatalogError> {
    let rows: &[(&[usize], usize)] = match n {
        2 => &[(&[2], 6)],
        3 => &[(&[1, 1, 1], 4), (&[2, 1], 8), (&[3], 24)],
        4 => &[(&[2, 2], 10), (&[4], 120)],
        5 => &[
            (&[2, 1, 1, 1], 6),
            (&[2, 2, 1], 12),
            (&[3, 1, 1], 6),
            (&[3, 2], 72),
            // Hexagon in one colour, all other edges in the second: dihedral of order 12.
            (&[3, 2], 12),
            (&[4, 1], 48),
            (&[5], 720),
        ],
        6 => &[(&[2, 2, 2], 14), (&[4, 2], 14), (&[6], 5040)],
        _ => {
            return Err(CatalogError::DimensionOutOfRange {
                n,
                bound: DEFAULT_MAX_DIMENSION,
            })
        }
    };
    rows.iter()
        .map(|(p, order)| Ok((Partition::new(p.to_vec())?, *order)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colored_graph::fixtures;
    use crate::permgroup::Permutation;

    fn weak_orders(entries: &[CatalogEntry]) -> Vec<(Partition, usize)> {
        let mut rows: Vec<_> = entries.iter().map(|e| (e.weak.clone(), e.group_order)).collect();
        rows.sort();
        rows
    }

    fn sorted(mut rows: Vec<(Partition, usize)>) -> Vec<(Partition, usize)> {
        rows.sort();
        rows
    }

    /// Counts automorphisms by trying all (n+1)! vertex permutations.
    fn brute_force_order(g: &ColouredGraph) -> usize {
        let k = g.vertex_count();
        itertools::Itertools::permutations(0..k, k)
            .filter(|p| g.is_preserved_by(&Permutation::new(p.clone()).unwrap()))
            .count()
    }

    #[test]
    fn range_checks() {
        assert!(enumerate_strong_types(1).is_err());
        assert!(enumerate_strong_types(7).is_err());
        assert!(enumerate_strong_types_within(9, 9).is_err());
        assert!(known_table(7).is_err());
    }

    #[test]
    fn small_catalogues() {
        for n in 2..=4 {
            let entries = enumerate_strong_types(n).unwrap();
            assert_eq!(weak_orders(&entries), sorted(known_table(n).unwrap()), "n = {n}");
        }
    }

    #[test]
    fn dimension_five_catalogue() {
        let entries = enumerate_strong_types(5).unwrap();
        assert_eq!(entries.len(), 7);
        assert_eq!(weak_orders(&entries), sorted(known_table(5).unwrap()));
        for e in &entries {
            assert_eq!(brute_force_order(&e.canonical), e.group_order);
        }
        // Colour classes of 9 edges cannot be single orbits of the order 6 and
        // order 12 groups; every other class at this dimension is one orbit.
        let expected: Vec<(Vec<usize>, usize, Vec<Vec<usize>>)> = vec![
            (vec![2, 1, 1, 1], 6, vec![vec![6], vec![3], vec![3], vec![3]]),
            (vec![2, 2, 1], 12, vec![vec![6], vec![6], vec![3]]),
            (vec![3, 1, 1], 6, vec![vec![6, 3], vec![3], vec![3]]),
            (vec![3, 2], 12, vec![vec![6, 3], vec![6]]),
            (vec![3, 2], 72, vec![vec![6], vec![9]]),
            (vec![4, 1], 48, vec![vec![12], vec![3]]),
            (vec![5], 720, vec![vec![15]]),
        ];
        let got: Vec<_> = entries
            .iter()
            .map(|e| (e.weak.entries().to_vec(), e.group_order, e.edge_orbit_sizes.clone()))
            .collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn entries_are_canonical_and_sorted() {
        let entries = enumerate_strong_types(5).unwrap();
        for e in &entries {
            assert_eq!(e.canonical.canonical_form().unwrap(), e.canonical);
            assert!(e.canonical.satisfies_complementarity());
            assert!(e.canonical.is_vertex_transitive().unwrap());
            assert!(e.canonical.components_congruent());
            assert_eq!(e.group_fingerprint.order, e.group_order);
        }
        let keys: Vec<_> = entries.iter().map(|e| (e.weak.clone(), e.canonical.clone())).collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(enumerate_strong_types(5).unwrap(), entries);
    }

    #[test]
    fn non_complementary_type_in_uniform_stream() {
        let stream = vertex_uniform_types(5).unwrap();
        let four = fixtures::uniform_not_complementary().canonical_form().unwrap();
        assert!(stream.contains(&four));
        assert!(!four.satisfies_complementarity());
        let one = fixtures::complementary_2111().canonical_form().unwrap();
        assert!(stream.contains(&one));
        assert!(stream.iter().all(ColouredGraph::is_vertex_uniform));
    }

    #[test]
    fn dimension_six_orbits() {
        let entries = enumerate_strong_types(6).unwrap();
        assert_eq!(weak_orders(&entries), sorted(known_table(6).unwrap()));
        let got: Vec<_> = entries.iter().map(|e| (e.weak.entries().to_vec(), e.edge_orbit_sizes.clone())).collect();
        assert_eq!(
            got,
            vec![
                (vec![2, 2, 2], vec![vec![7], vec![7], vec![7]]),
                (vec![4, 2], vec![vec![7, 7], vec![7]]),
                (vec![6], vec![vec![21]]),
            ]
        );
    }

    #[test]
    fn equilateral_orbits() {
        for n in 2..=5 {
            let e = CatalogEntry::from_graph(&ColouredGraph::equilateral(n).unwrap()).unwrap();
            let report = edge_orbit_report(&e);
            assert_eq!(report.len(), 1);
            assert_eq!(report[0].orbit_sizes, vec![(n + 1) * n / 2]);
            assert_eq!(report[0].degree, n);
        }
    }
}
