//! Small permutation groups with fully materialized element sets.
//!
//! Degrees handled here never exceed nine points, so groups are stored as
//! explicit sorted element lists obtained by breadth-first closure.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default cap on the number of elements `generate` will materialize.
pub const DEFAULT_ELEMENT_BOUND: usize = 1_000_000;

/// Largest group `fingerprint` accepts: the full symmetric group on 9 points.
pub const FINGERPRINT_BOUND: usize = 362_880;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("images {0:?} do not form a bijection")]
    NotBijection(Vec<usize>),
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("group closure exceeds the bound of {0} elements")]
    BoundExceeded(usize),
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
}

/// A bijection of `0..m`, stored as its image list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, PermError> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return Err(PermError::NotBijection(images));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from disjoint cycles; points not mentioned are fixed.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..degree).collect();
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p >= degree {
                    return Err(PermError::PointOutOfRange { point: p, degree });
                }
                images[p] = cycle[(k + 1) % cycle.len()];
            }
        }
        Permutation::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Multiplicative order (lcm of cycle lengths).
    pub fn order(&self) -> usize {
        let mut seen = vec![false; self.degree()];
        let mut order = 1usize;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p];
                len += 1;
            }
            order = lcm(order, len);
        }
        order
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.degree()];
        let mut wrote = false;
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            write!(f, "(")?;
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
                first = false;
                p = self.images[p];
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// A finite permutation group together with its sorted element list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

/// Domain for orbit computations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrbitDomain {
    Vertices,
    /// All unordered pairs `{i, j}` with `i < j`.
    Pairs,
    /// The given unordered pairs; the set must be closed under the group.
    Edges(Vec<(usize, usize)>),
}

/// An orbit, either of points or of unordered pairs (each stored `i < j`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Orbit {
    Points(Vec<usize>),
    Pairs(Vec<(usize, usize)>),
}

impl Orbit {
    pub fn len(&self) -> usize {
        match self {
            Orbit::Points(p) => p.len(),
            Orbit::Pairs(p) => p.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Coarse structural description: enough to tell apart the small groups that
/// occur as symmetry groups of low-dimensional equifacetal simplices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fingerprint {
    pub order: usize,
    /// element order → number of elements with that order
    pub element_orders: BTreeMap<usize, usize>,
    pub abelian: bool,
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let hist: Vec<String> = self
            .element_orders
            .iter()
            .map(|(o, c)| format!("{o}:{c}"))
            .collect();
        write!(
            f,
            "order {} {{{}}} {}",
            self.order,
            hist.join(", "),
            if self.abelian { "abelian" } else { "non-abelian" }
        )
    }
}

fn sorted_pair(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

impl PermGroup {
    /// Closes the generators under composition, failing once more than
    /// `element_bound` elements have been produced.
    pub fn generate(
        degree: usize,
        generators: Vec<Permutation>,
        element_bound: usize,
    ) -> Result<Self, PermError> {
        for g in &generators {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let identity = Permutation::identity(degree);
        let mut seen: HashSet<Permutation> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(identity.clone());
        queue.push_back(identity);
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = g.compose(&x);
                if seen.insert(y.clone()) {
                    if seen.len() > element_bound {
                        return Err(PermError::BoundExceeded(element_bound));
                    }
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Permutation> = seen.into_iter().collect();
        elements.sort();
        Ok(PermGroup {
            degree,
            generators,
            elements,
        })
    }

    /// Wraps a set already known to be a group (e.g. an automorphism search
    /// result). A small generating set is extracted greedily.
    pub fn from_elements(degree: usize, elements: Vec<Permutation>) -> Self {
        let mut elements: Vec<Permutation> = elements
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        if elements.is_empty() {
            elements.push(Permutation::identity(degree));
        }
        debug_assert!(elements.iter().all(|e| e.degree() == degree));

        let mut generators = Vec::new();
        let mut closure: HashSet<Permutation> = HashSet::new();
        closure.insert(Permutation::identity(degree));
        for e in &elements {
            if closure.contains(e) {
                continue;
            }
            generators.push(e.clone());
            // Extend the closure with the new generator.
            let mut queue: VecDeque<Permutation> = closure.iter().cloned().collect();
            while let Some(x) = queue.pop_front() {
                for g in &generators {
                    let y = g.compose(&x);
                    if closure.insert(y.clone()) {
                        queue.push_back(y);
                    }
                }
            }
        }
        debug_assert_eq!(closure.len(), elements.len(), "element set is not a group");
        PermGroup {
            degree,
            generators,
            elements,
        }
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::from_elements(degree, vec![Permutation::identity(degree)])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Sorted element list.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// Subgroup test by element inclusion.
    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|e| other.contains(e))
    }

    /// Orbits on the selected domain, each sorted, listed by least element.
    pub fn orbits(&self, domain: &OrbitDomain) -> Vec<Orbit> {
        match domain {
            OrbitDomain::Vertices => {
                let mut assigned = vec![false; self.degree];
                let mut out = Vec::new();
                for start in 0..self.degree {
                    if assigned[start] {
                        continue;
                    }
                    let orbit: BTreeSet<usize> =
                        self.elements.iter().map(|g| g.apply(start)).collect();
                    for &p in &orbit {
                        assigned[p] = true;
                    }
                    out.push(Orbit::Points(orbit.into_iter().collect()));
                }
                out
            }
            OrbitDomain::Pairs => {
                let pairs: Vec<(usize, usize)> = (0..self.degree)
                    .flat_map(|i| (i + 1..self.degree).map(move |j| (i, j)))
                    .collect();
                self.pair_orbits(&pairs)
            }
            OrbitDomain::Edges(edges) => {
                let edges: Vec<(usize, usize)> =
                    edges.iter().map(|&(a, b)| sorted_pair(a, b)).collect();
                self.pair_orbits(&edges)
            }
        }
    }

    fn pair_orbits(&self, pairs: &[(usize, usize)]) -> Vec<Orbit> {
        let mut sorted: Vec<(usize, usize)> = pairs.to_vec();
        sorted.sort();
        sorted.dedup();
        let mut assigned: HashSet<(usize, usize)> = HashSet::new();
        let mut out = Vec::new();
        for &(a, b) in &sorted {
            if assigned.contains(&(a, b)) {
                continue;
            }
            let orbit: BTreeSet<(usize, usize)> = self
                .elements
                .iter()
                .map(|g| sorted_pair(g.apply(a), g.apply(b)))
                .collect();
            assigned.extend(orbit.iter().copied());
            out.push(Orbit::Pairs(orbit.into_iter().collect()));
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbits(&OrbitDomain::Vertices).len() == 1
    }

    pub fn fingerprint(&self) -> Result<Fingerprint, PermError> {
        self.fingerprint_within(FINGERPRINT_BOUND)
    }

    pub fn fingerprint_within(&self, bound: usize) -> Result<Fingerprint, PermError> {
        if self.order() > bound {
            return Err(PermError::BoundExceeded(bound));
        }
        let mut element_orders = BTreeMap::new();
        for e in &self.elements {
            *element_orders.entry(e.order()).or_insert(0) += 1;
        }
        let gens = if self.generators.is_empty() {
            &self.elements
        } else {
            &self.generators
        };
        let abelian = gens
            .iter()
            .enumerate()
            .all(|(i, a)| gens[i + 1..].iter().all(|b| a.compose(b) == b.compose(a)));
        Ok(Fingerprint {
            order: self.order(),
            element_orders,
            abelian,
        })
    }
}
