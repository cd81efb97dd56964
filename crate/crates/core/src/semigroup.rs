//! Generator sets, Apéry tables and the invariants derived from them.
//!
//! The Apéry set of `S = <d_1, ..., d_k>` with respect to `m = d_1` holds the
//! least element of `S` in each residue class mod `m`. It is computed as a
//! single-source shortest-path problem on the residue graph: nodes `0..m`,
//! an edge `r -> (r + d_i) mod m` of weight `d_i` for every generator. Every
//! other quantity here (Frobenius number, genus, membership, symmetry) is read
//! off that table.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;

use crate::error::{Error, Result};

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A validated, strictly increasing set of semigroup generators with `gcd = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorSet {
    elements: Vec<u64>,
    sigma: u64,
    pi: u128,
}

impl GeneratorSet {
    /// Validates `raw` and sorts it.
    ///
    /// Duplicates are rejected rather than silently dropped.
    pub fn new(raw: &[u64]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut elements = raw.to_vec();
        elements.sort_unstable();
        if let Some(&small) = elements.iter().find(|&&d| d < 2) {
            return Err(Error::GeneratorBelowTwo(small));
        }
        if let Some(w) = elements.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateGenerator(w[0]));
        }
        let g = elements.iter().fold(0, |acc, &d| gcd(acc, d));
        if g != 1 {
            return Err(Error::GcdNotOne(g));
        }
        let sigma = elements
            .iter()
            .try_fold(0u64, |acc, &d| acc.checked_add(d))
            .ok_or(Error::ArithmeticOverflow("sum of generators"))?;
        let pi = elements
            .iter()
            .try_fold(1u128, |acc, &d| acc.checked_mul(d as u128))
            .ok_or(Error::ArithmeticOverflow("product of generators"))?;
        Ok(Self {
            elements,
            sigma,
            pi,
        })
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    /// Number of generators.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Smallest generator (the multiplicity when the set is minimal).
    pub fn min(&self) -> u64 {
        self.elements[0]
    }

    pub fn max(&self) -> u64 {
        self.elements[self.elements.len() - 1]
    }

    /// Sum of the generators.
    pub fn sigma(&self) -> u64 {
        self.sigma
    }

    /// Product of the generators.
    pub fn pi(&self) -> u128 {
        self.pi
    }
}

impl fmt::Display for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, d) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ">")
    }
}

/// Least semigroup element in every residue class modulo the smallest generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AperyTable {
    modulus: u64,
    entries: Vec<u64>,
}

impl AperyTable {
    /// Dijkstra over the residue graph mod `d_1`.
    pub fn compute(g: &GeneratorSet) -> Result<Self> {
        let m = g.min();
        let size = usize::try_from(m).map_err(|_| Error::ArithmeticOverflow("residue count"))?;
        let mut dist = vec![u64::MAX; size];
        let mut done = vec![false; size];
        let mut heap = BinaryHeap::new();
        dist[0] = 0;
        heap.push(Reverse((0u64, 0usize)));
        while let Some(Reverse((w, r))) = heap.pop() {
            if done[r] {
                continue;
            }
            done[r] = true;
            for &d in &g.elements()[1..] {
                let next = ((r as u64 + d) % m) as usize;
                if done[next] {
                    continue;
                }
                let cand = w
                    .checked_add(d)
                    .ok_or(Error::ArithmeticOverflow("Apéry set entry"))?;
                if cand < dist[next] {
                    dist[next] = cand;
                    heap.push(Reverse((cand, next)));
                }
            }
        }
        // gcd = 1 makes the residue graph strongly connected.
        debug_assert!(dist.iter().all(|&w| w != u64::MAX));
        Ok(Self {
            modulus: m,
            entries: dist,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// `entries()[r]` is the least element of the semigroup congruent to `r`.
    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    /// Largest integer outside the semigroup: `max w_r - m`.
    pub fn frobenius(&self) -> i64 {
        let top = self.entries.iter().copied().max().unwrap_or(0);
        top as i64 - self.modulus as i64
    }

    /// Number of gaps, `sum_r (w_r - r) / m`.
    pub fn genus(&self) -> u64 {
        self.entries
            .iter()
            .enumerate()
            .map(|(r, &w)| (w - r as u64) / self.modulus)
            .sum()
    }

    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        let n = n as u64;
        n >= self.entries[(n % self.modulus) as usize]
    }
}

pub fn apery_set(g: &GeneratorSet) -> Result<AperyTable> {
    AperyTable::compute(g)
}

/// Frobenius number of `<g>`.
pub fn frobenius(g: &GeneratorSet) -> Result<u64> {
    // All generators are >= 2, so 1 is always a gap and F >= 1.
    Ok(apery_set(g)?.frobenius() as u64)
}

pub fn genus(g: &GeneratorSet) -> Result<u64> {
    Ok(apery_set(g)?.genus())
}

pub fn is_member(g: &GeneratorSet, n: i64) -> Result<bool> {
    Ok(apery_set(g)?.contains(n))
}

/// Symmetry via the genus count, cross-checked against the pairing
/// `x in S <=> F - x not in S` on `0..=F`. A disagreement is reported as a defect.
pub fn is_symmetric(g: &GeneratorSet) -> Result<bool> {
    is_symmetric_with(g, &apery_set(g)?)
}

pub(crate) fn is_symmetric_with(g: &GeneratorSet, table: &AperyTable) -> Result<bool> {
    let f = table.frobenius();
    let by_genus = f % 2 == 1 && 2 * table.genus() as i64 == f + 1;
    let by_pairing = (0..=f).all(|x| table.contains(x) != table.contains(f - x));
    if by_genus != by_pairing {
        return Err(Error::Defect {
            generators: g.elements().to_vec(),
            detail: format!("genus symmetry test says {by_genus}, pairing test says {by_pairing}"),
        });
    }
    Ok(by_genus)
}

/// First generator that is a nonnegative combination of the others, if any.
pub fn redundant_generator(g: &GeneratorSet) -> Option<u64> {
    let els = g.elements();
    for (i, &target) in els.iter().enumerate().skip(1) {
        // Only smaller generators can contribute to a representation of `target`.
        let smaller = &els[..i];
        let n = target as usize;
        let mut reach = vec![false; n + 1];
        reach[0] = true;
        for v in 1..=n {
            reach[v] = smaller
                .iter()
                .any(|&d| v >= d as usize && reach[v - d as usize]);
        }
        if reach[n] {
            return Some(target);
        }
    }
    None
}

/// True iff no generator is representable by the others.
pub fn is_minimal_generating_set(g: &GeneratorSet) -> bool {
    redundant_generator(g).is_none()
}
