//! Hilbert-series numerators and the symmetric / complete-intersection split.
//!
//! For `S = <d_1, ..., d_k>` the Hilbert series `H(S; z) = sum_{s in S} z^s`
//! times `prod (1 - z^{d_i})` is a polynomial of degree `F + sigma`. A
//! symmetric 4-generated semigroup has one of two numerator shapes:
//!
//! * complete intersection: `(1 - z^{e_1})(1 - z^{e_2})(1 - z^{e_3})`;
//! * otherwise the twelve-term form
//!   `1 - sum_j z^{a_j} + sum_j z^{c - a_j} - z^c` with five exponents `a_j`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::semigroup::{
    apery_set, is_symmetric_with, redundant_generator, AperyTable, GeneratorSet,
};

/// Sparse integer polynomial, exponent to nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NumeratorPoly {
    coeffs: BTreeMap<u64, i64>,
}

impl NumeratorPoly {
    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing repeats
    /// and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (u64, i64)>>(terms: I) -> Self {
        let mut coeffs = BTreeMap::new();
        for (e, c) in terms {
            *coeffs.entry(e).or_insert(0) += c;
        }
        coeffs.retain(|_, c| *c != 0);
        Self { coeffs }
    }

    fn from_dense(dense: &[i64]) -> Self {
        Self::from_terms(dense.iter().enumerate().map(|(e, &c)| (e as u64, c)))
    }

    fn to_dense(&self) -> Vec<i64> {
        let mut dense = vec![0; self.degree() as usize + 1];
        for (&e, &c) in &self.coeffs {
            dense[e as usize] = c;
        }
        dense
    }

    /// Largest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn degree(&self) -> u64 {
        self.coeffs.keys().next_back().copied().unwrap_or(0)
    }

    pub fn coeff(&self, e: u64) -> i64 {
        self.coeffs.get(&e).copied().unwrap_or(0)
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// Value at `z = 1`.
    pub fn coefficient_sum(&self) -> i64 {
        self.coeffs.values().sum()
    }

    /// `coeff(e) == -coeff(c - e)` for every `e`, with `c` the degree. For an
    /// even number of generators this holds iff the semigroup is symmetric.
    pub fn is_antipalindromic(&self) -> bool {
        let c = self.degree();
        self.coeffs.iter().all(|(&e, &k)| self.coeff(c - e) == -k)
    }

    /// Multiplies by `1 - z^e`.
    pub fn mul_binomial(&self, e: u64) -> Self {
        Self::from_terms(self.terms().chain(self.terms().map(|(x, c)| (x + e, -c))))
    }
}

impl fmt::Display for NumeratorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let sign = if c < 0 {
                "-"
            } else if i > 0 {
                "+"
            } else {
                ""
            };
            let mag = c.unsigned_abs();
            let sep = if i > 0 { " " } else { "" };
            match (e, mag) {
                (0, _) => write!(f, "{sep}{sign}{mag}")?,
                (_, 1) => write!(f, "{sep}{sign}z^{e}")?,
                _ => write!(f, "{sep}{sign}{mag}z^{e}")?,
            }
        }
        Ok(())
    }
}

/// Payload of the twelve-term numerator: exponents `a_1 <= ... <= a_5` and degree `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BresinskyForm {
    pub a_list: [u64; 5],
    pub c: u64,
}

impl BresinskyForm {
    /// Re-expands `1 - sum z^{a_j} + sum z^{c - a_j} - z^c`.
    pub fn expand(&self) -> NumeratorPoly {
        let c = self.c;
        NumeratorPoly::from_terms(
            [(0, 1), (c, -1)]
                .into_iter()
                .chain(self.a_list.iter().map(|&a| (a, -1)))
                .chain(self.a_list.iter().map(|&a| (c - a, 1))),
        )
    }
}

/// Product of `(1 - z^e)` over `degrees`.
pub fn expand_binomials(degrees: &[u64]) -> NumeratorPoly {
    degrees
        .iter()
        .fold(NumeratorPoly::from_terms([(0, 1)]), |p, &e| {
            p.mul_binomial(e)
        })
}

/// Classification of a minimal 4-generated numerical semigroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SemigroupClass {
    NonSymmetric,
    /// Complete intersection with sorted relation degrees.
    SymmetricCi {
        degrees: [u64; 3],
    },
    SymmetricNotCi {
        a_list: [u64; 5],
        c: u64,
    },
}

impl SemigroupClass {
    /// Stable machine-readable tag.
    pub fn tag(&self) -> &'static str {
        match self {
            SemigroupClass::NonSymmetric => "non_symmetric",
            SemigroupClass::SymmetricCi { .. } => "symmetric_ci",
            SemigroupClass::SymmetricNotCi { .. } => "symmetric_not_ci",
        }
    }

    pub fn is_symmetric(&self) -> bool {
        !matches!(self, SemigroupClass::NonSymmetric)
    }
}

impl fmt::Display for SemigroupClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SemigroupClass::NonSymmetric => write!(f, "NonSymmetric"),
            SemigroupClass::SymmetricCi { .. } => write!(f, "SymmetricCI"),
            SemigroupClass::SymmetricNotCi { .. } => write!(f, "SymmetricNotCI"),
        }
    }
}

fn dense_numerator(g: &GeneratorSet, table: &AperyTable, len: usize) -> Vec<i64> {
    let mut coeffs: Vec<i64> = (0..len as i64)
        .map(|n| i64::from(table.contains(n)))
        .collect();
    for &d in g.elements() {
        let d = d as usize;
        for e in (d..len).rev() {
            coeffs[e] -= coeffs[e - d];
        }
    }
    coeffs
}

/// Hilbert numerator `H(S; z) * prod (1 - z^{d_i})`.
pub fn numerator(g: &GeneratorSet) -> Result<NumeratorPoly> {
    numerator_with(g, &apery_set(g)?)
}

pub(crate) fn numerator_with(g: &GeneratorSet, table: &AperyTable) -> Result<NumeratorPoly> {
    let f = table.frobenius() as u64;
    let degree = f + g.sigma();
    let len =
        usize::try_from(degree + 1).map_err(|_| Error::ArithmeticOverflow("numerator length"))?;
    let coeffs = dense_numerator(g, table, len);
    // Recheck on a longer window: nothing may survive above F + sigma.
    let longer = dense_numerator(g, table, len + g.max() as usize);
    let defect = |detail: String| Error::TruncationInconsistency {
        generators: g.elements().to_vec(),
        detail,
    };
    if longer[..len] != coeffs[..] {
        return Err(defect("prefix changed under a longer window".into()));
    }
    if let Some(e) = (len..longer.len()).find(|&e| longer[e] != 0) {
        return Err(defect(format!(
            "nonzero coefficient at {e} above degree {degree}"
        )));
    }
    if coeffs[len - 1] == 0 {
        return Err(defect(format!("coefficient at degree {degree} vanished")));
    }
    Ok(NumeratorPoly::from_dense(&coeffs))
}

/// Reads the twelve-term symmetric-not-CI shape, treating coefficients as
/// multiplicities. Returns `None` when the polynomial does not have that shape.
pub fn parse_bresinsky(n: &NumeratorPoly) -> Option<BresinskyForm> {
    let c = n.degree();
    if c == 0 || n.coeff(0) != 1 || n.coeff(c) != -1 {
        return None;
    }
    let mut negative = Vec::new();
    let mut positive = Vec::new();
    for (e, k) in n.terms().filter(|&(e, _)| e != 0 && e != c) {
        let bucket = if k < 0 { &mut negative } else { &mut positive };
        bucket.extend(std::iter::repeat_n(e, k.unsigned_abs() as usize));
        if negative.len() > 5 || positive.len() > 5 {
            return None;
        }
    }
    let a_list: [u64; 5] = negative.try_into().ok()?;
    let mut mirrored: Vec<u64> = a_list.iter().map(|&a| c - a).collect();
    mirrored.sort_unstable();
    (mirrored == positive).then_some(BresinskyForm { a_list, c })
}

/// Exact division by `1 - z^e`; `None` if the remainder is nonzero.
fn divide_binomial(n: &[i64], e: usize) -> Option<Vec<i64>> {
    if n.len() <= e {
        return None;
    }
    let qlen = n.len() - e;
    let mut q = vec![0i64; qlen];
    for i in 0..qlen {
        q[i] = n[i] + if i >= e { q[i - e] } else { 0 };
    }
    for i in qlen..n.len() {
        let carried = if i >= e { q[i - e] } else { 0 };
        if n[i] != -carried {
            return None;
        }
    }
    while q.len() > 1 && q[q.len() - 1] == 0 {
        q.pop();
    }
    Some(q)
}

/// Peels three binomial factors `(1 - z^e)` off the numerator, lowest exponent
/// first. Returns the sorted degrees when the numerator is exactly such a product.
pub fn peel_ci_product(n: &NumeratorPoly) -> Option<[u64; 3]> {
    if n.coeff(0) != 1 {
        return None;
    }
    let mut rest = n.to_dense();
    let mut degrees = Vec::with_capacity(3);
    while let Some(e) = (1..rest.len()).find(|&e| rest[e] != 0) {
        let lead = rest[e];
        if lead >= 0 || degrees.len() + lead.unsigned_abs() as usize > 3 {
            return None;
        }
        for _ in 0..lead.unsigned_abs() {
            rest = divide_binomial(&rest, e)?;
            degrees.push(e as u64);
        }
    }
    if rest != [1] {
        return None;
    }
    degrees.try_into().ok()
}

/// Classifies a minimal 4-generated semigroup.
///
/// A symmetric input must match exactly one of the two numerator shapes;
/// anything else is a [`Error::ClassificationContradiction`].
pub fn classify(g: &GeneratorSet) -> Result<SemigroupClass> {
    let table = apery_set(g)?;
    classify_with(g, &table, &numerator_with(g, &table)?)
}

pub(crate) fn classify_with(
    g: &GeneratorSet,
    table: &AperyTable,
    num: &NumeratorPoly,
) -> Result<SemigroupClass> {
    if g.len() != 4 {
        return Err(Error::NotFourGenerators(g.len()));
    }
    if let Some(redundant) = redundant_generator(g) {
        return Err(Error::NotMinimal { redundant });
    }
    if !is_symmetric_with(g, table)? {
        return Ok(SemigroupClass::NonSymmetric);
    }
    let contradiction = |detail: String| Error::ClassificationContradiction {
        generators: g.elements().to_vec(),
        detail,
    };
    let f = table.frobenius() as u64;
    match (parse_bresinsky(num), peel_ci_product(num)) {
        (Some(form), None) => {
            let sum: u64 = form.a_list.iter().sum();
            if sum != 2 * form.c || form.c != f + g.sigma() {
                return Err(contradiction(format!(
                    "a-list {:?} with c = {} violates sum(a) = 2c = 2(F + sigma)",
                    form.a_list, form.c
                )));
            }
            Ok(SemigroupClass::SymmetricNotCi {
                a_list: form.a_list,
                c: form.c,
            })
        }
        (None, Some(degrees)) => {
            let sum: u64 = degrees.iter().sum();
            if sum != f + g.sigma() || degrees.iter().any(|&e| e < 2) {
                return Err(contradiction(format!(
                    "relation degrees {degrees:?} do not sum to F + sigma = {}",
                    f + g.sigma()
                )));
            }
            Ok(SemigroupClass::SymmetricCi { degrees })
        }
        (Some(_), Some(_)) => Err(contradiction("numerator matches both shapes".into())),
        (None, None) => Err(contradiction(format!(
            "numerator {num} matches neither shape"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gs(v: &[u64]) -> GeneratorSet {
        GeneratorSet::new(v).unwrap()
    }

    fn example_151() -> NumeratorPoly {
        NumeratorPoly::from_terms([
            (0, 1),
            (308, -1),
            (625, -1),
            (628, -1),
            (779, 1),
            (782, 1),
            (3473, -1),
            (3476, -1),
            (3627, 1),
            (3630, 1),
            (3947, 1),
            (4255, -1),
        ])
    }

    #[test]
    fn numerator_151() {
        assert_eq!(
            numerator(&gs(&[151, 154, 157, 158])).unwrap(),
            example_151()
        );
    }

    #[test]
    fn numerator_small() {
        assert_eq!(
            numerator(&gs(&[2, 3])).unwrap(),
            NumeratorPoly::from_terms([(0, 1), (6, -1)])
        );
        let n = numerator(&gs(&[5, 6, 7, 8])).unwrap();
        assert_eq!(n.num_terms(), 12);
        assert_eq!(n.degree(), 35);
        assert_eq!(n.coefficient_sum(), 0);
        let expected = NumeratorPoly::from_terms(
            [(0, 1), (35, -1)]
                .into_iter()
                .chain((12..=16).map(|e| (e, -1)))
                .chain((19..=23).map(|e| (e, 1))),
        );
        assert_eq!(n, expected);
    }

    #[test]
    fn bresinsky_parse() {
        let form = parse_bresinsky(&example_151()).unwrap();
        assert_eq!(form.a_list, [308, 625, 628, 3473, 3476]);
        assert_eq!(form.c, 4255);
        assert_eq!(form.expand(), example_151());
        assert_eq!(
            parse_bresinsky(&NumeratorPoly::from_terms([(0, 1), (6, -1)])),
            None
        );
        assert_eq!(
            parse_bresinsky(&numerator(&gs(&[8, 10, 12, 15])).unwrap()),
            None
        );
    }

    #[test]
    fn bresinsky_parse_with_multiplicity() {
        let form = BresinskyForm {
            a_list: [10, 10, 12, 13, 14],
            c: 30,
        };
        let p = form.expand();
        assert_eq!(p.coeff(10), -2);
        assert_eq!(p.coeff(20), 2);
        assert_eq!(parse_bresinsky(&p), Some(form));
    }

    #[test]
    fn ci_peel() {
        let n = numerator(&gs(&[8, 10, 12, 15])).unwrap();
        assert_eq!(peel_ci_product(&n), Some([20, 24, 30]));
        assert_eq!(expand_binomials(&[20, 24, 30]), n);
        assert_eq!(
            peel_ci_product(&NumeratorPoly::from_terms([(0, 1), (6, -1)])),
            None
        );
        assert_eq!(
            peel_ci_product(&numerator(&gs(&[5, 6, 7, 8])).unwrap()),
            None
        );
        // repeated factor
        assert_eq!(
            peel_ci_product(&expand_binomials(&[6, 6, 9])),
            Some([6, 6, 9])
        );
        assert_eq!(peel_ci_product(&expand_binomials(&[6, 6, 9, 10])), None);
    }

    #[test]
    fn classification() {
        assert!(matches!(
            classify(&gs(&[5, 6, 7, 8])).unwrap(),
            SemigroupClass::SymmetricNotCi { c: 35, .. }
        ));
        assert_eq!(
            classify(&gs(&[151, 154, 157, 158])).unwrap(),
            SemigroupClass::SymmetricNotCi {
                a_list: [308, 625, 628, 3473, 3476],
                c: 4255
            }
        );
        assert_eq!(
            classify(&gs(&[8, 10, 12, 15])).unwrap(),
            SemigroupClass::SymmetricCi {
                degrees: [20, 24, 30]
            }
        );
        assert_eq!(classify(&gs(&[5, 6, 7])), Err(Error::NotFourGenerators(3)));
        assert_eq!(
            classify(&gs(&[5, 6, 7, 11])),
            Err(Error::NotMinimal { redundant: 11 })
        );
        assert_eq!(
            classify(&gs(&[5, 6, 7, 9])).unwrap(),
            SemigroupClass::NonSymmetric
        );
    }

    #[test]
    fn antipalindromy() {
        assert!(example_151().is_antipalindromic());
        assert!(!numerator(&gs(&[5, 6, 7])).unwrap().is_antipalindromic());
    }

    #[test]
    fn display() {
        let p = NumeratorPoly::from_terms([(0, 1), (3, -2), (6, 1)]);
        assert_eq!(p.to_string(), "1 -2z^3 +z^6");
    }
}
