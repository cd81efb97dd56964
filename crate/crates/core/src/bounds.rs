//! Symmetric functions of the five numerator exponents, the exact identities
//! and inequalities they satisfy, and closed-form lower bounds on `F`.
//!
//! Identity and inequality checks never touch floating point: every radical
//! comparison is cross-multiplied into an integer comparison. `i128` covers
//! the identity checks for `c` well past `10^6`; the Maclaurin chain raises
//! `J_4` to the fifth power and runs on big integers.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::hilbert::SemigroupClass;
use crate::semigroup::{apery_set, GeneratorSet};

fn overflow(what: &'static str) -> Error {
    Error::ArithmeticOverflow(what)
}

fn mul(a: i128, b: i128, what: &'static str) -> Result<i128> {
    a.checked_mul(b).ok_or_else(|| overflow(what))
}

fn add(a: i128, b: i128, what: &'static str) -> Result<i128> {
    a.checked_add(b).ok_or_else(|| overflow(what))
}

fn sub(a: i128, b: i128, what: &'static str) -> Result<i128> {
    a.checked_sub(b).ok_or_else(|| overflow(what))
}

fn pow(a: i128, k: u32, what: &'static str) -> Result<i128> {
    a.checked_pow(k).ok_or_else(|| overflow(what))
}

/// Power sums `I_1, I_2, I_3` of the five exponents.
pub fn power_sums(a_list: &[u64; 5]) -> Result<[i128; 3]> {
    let mut sums = [0i128; 3];
    for &a in a_list {
        let a = a as i128;
        for (k, s) in sums.iter_mut().enumerate() {
            *s = add(*s, pow(a, k as u32 + 1, "power sum")?, "power sum")?;
        }
    }
    Ok(sums)
}

/// Elementary symmetric values `J_1..J_5`, the coefficients of `prod (x + a_j)`.
pub fn elementary_symmetric(a_list: &[u64; 5]) -> Result<[i128; 5]> {
    let mut e = [1i128, 0, 0, 0, 0, 0];
    for &a in a_list {
        for r in (1..=5).rev() {
            e[r] = add(
                e[r],
                mul(e[r - 1], a as i128, "elementary symmetric")?,
                "elementary symmetric",
            )?;
        }
    }
    Ok([e[1], e[2], e[3], e[4], e[5]])
}

/// Power sums and elementary symmetric values of one exponent list.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymmetricFunctionData {
    pub a_list: [u64; 5],
    /// `I_1, I_2, I_3`
    pub power: [i128; 3],
    /// `J_1, ..., J_5`
    pub elementary: [i128; 5],
}

impl SymmetricFunctionData {
    pub fn new(a_list: [u64; 5]) -> Result<Self> {
        Ok(Self {
            a_list,
            power: power_sums(&a_list)?,
            elementary: elementary_symmetric(&a_list)?,
        })
    }

    /// `J_r` for `r` in `0..=5`.
    pub fn j(&self, r: usize) -> i128 {
        if r == 0 {
            1
        } else {
            self.elementary[r - 1]
        }
    }
}

/// Checks the first three Newton identities linking `I_k` and `J_k`.
pub fn newton_consistency(d: &SymmetricFunctionData) -> bool {
    let i = d.power.map(BigInt::from);
    let j = d.elementary.map(BigInt::from);
    let first = i[0] == j[0];
    let second = i[1] == &j[0] * &j[0] - 2 * &j[1];
    let third = i[2] == &j[0] * &j[0] * &j[0] - 3 * &j[1] * &j[0] + 3 * &j[2];
    first && second && third
}

const BINOM5: [u32; 6] = [1, 5, 10, 10, 5, 1];

/// Maclaurin's chain `(J_r / C(5,r))^{1/r} >= (J_{r+1} / C(5,r+1))^{1/(r+1)}`
/// for `r = 1..4`, compared as
/// `J_r^{r+1} C(5,r+1)^r >= J_{r+1}^r C(5,r)^{r+1}`.
pub fn maclaurin_chain(d: &SymmetricFunctionData) -> bool {
    if d.elementary.iter().any(|&j| j <= 0) {
        return false;
    }
    (1..5).all(|r| {
        let jr = BigInt::from(d.j(r));
        let jn = BigInt::from(d.j(r + 1));
        let lhs = jr.pow(r as u32 + 1) * BigInt::from(BINOM5[r + 1]).pow(r as u32);
        let rhs = jn.pow(r as u32) * BigInt::from(BINOM5[r]).pow(r as u32 + 1);
        lhs >= rhs
    })
}

/// Checks `8 I_3 - 6 I_2 I_1 + I_1^3 = 24 pi_4` and `I_1 = 2c`.
///
/// The same identity rewritten through Newton's identities,
/// `J_1^3 - 4 J_2 J_1 + 8 J_3 = 8 pi_4`, is evaluated alongside; if the two
/// forms disagree the result is a [`Error::Defect`].
pub fn verify_key_identity(a_list: &[u64; 5], c: u64, pi4: u128) -> Result<bool> {
    let d = SymmetricFunctionData::new(*a_list)?;
    let [i1, i2, i3] = d.power;
    let c = c as i128;
    let pi4 = i128::try_from(pi4).map_err(|_| overflow("pi_4"))?;
    let what = "key identity";

    let power_form = add(
        sub(mul(8, i3, what)?, mul(6, mul(i2, i1, what)?, what)?, what)?,
        pow(i1, 3, what)?,
        what,
    )?;
    let power_ok = power_form == mul(24, pi4, what)?;

    let [j1, j2, j3, _, _] = d.elementary;
    let elementary_form = add(
        sub(pow(j1, 3, what)?, mul(4, mul(j2, j1, what)?, what)?, what)?,
        mul(8, j3, what)?,
        what,
    )?;
    let elementary_ok = elementary_form == mul(8, pi4, what)?;
    if power_ok != elementary_ok {
        return Err(Error::Defect {
            generators: Vec::new(),
            detail: format!(
                "power-sum and elementary forms of the key identity disagree for {a_list:?}"
            ),
        });
    }
    Ok(power_ok && i1 == mul(2, c, what)?)
}

/// The consequences of the key identity that lead to the threshold on `c`:
///
/// * `c J_2 + pi_4 = c^3 + J_3`
/// * `25 J_3 <= 16 c^3`
/// * `5 J_2 <= 8 c^2`
/// * `25 c J_2 <= 41 c^3 - 25 pi_4`
///
/// The last one is not universal; it is evaluated, not assumed.
pub fn verify_intermediate_inequalities(a_list: &[u64; 5], c: u64, pi4: u128) -> Result<bool> {
    let d = SymmetricFunctionData::new(*a_list)?;
    let [_, j2, j3, _, _] = d.elementary;
    let c = c as i128;
    let pi4 = i128::try_from(pi4).map_err(|_| overflow("pi_4"))?;
    let what = "intermediate inequalities";
    let c2 = pow(c, 2, what)?;
    let c3 = pow(c, 3, what)?;

    let equality = add(mul(c, j2, what)?, pi4, what)? == add(c3, j3, what)?;
    let j3_bound = mul(25, j3, what)? <= mul(16, c3, what)?;
    let j2_bound = mul(5, j2, what)? <= mul(8, c2, what)?;
    let j2_pi_bound =
        mul(25, mul(c, j2, what)?, what)? <= sub(mul(41, c3, what)?, mul(25, pi4, what)?, what)?;
    Ok(equality && j3_bound && j2_bound && j2_pi_bound)
}

/// `c^3 >= 25 pi_4`, i.e. `c >= cbrt(25 pi_4)` without radicals.
pub fn exact_threshold_check(c: u64, pi4: u128) -> Result<bool> {
    let c3 = (c as u128)
        .checked_pow(3)
        .ok_or_else(|| overflow("threshold c^3"))?;
    let rhs = pi4
        .checked_mul(25)
        .ok_or_else(|| overflow("threshold 25 pi_4"))?;
    Ok(c3 >= rhs)
}

/// Cube root with one Newton step on top of the library routine.
pub fn cbrt_refined(x: f64) -> f64 {
    let y = x.cbrt();
    if y == 0.0 || !y.is_finite() {
        return y;
    }
    y - (y * y * y - x) / (3.0 * y * y)
}

fn require_four(g: &GeneratorSet) -> Result<()> {
    if g.len() == 4 {
        Ok(())
    } else {
        Err(Error::NotFourGenerators(g.len()))
    }
}

/// `cbrt(25 pi_4) - sigma_4`, the lower bound for symmetric not-CI semigroups.
pub fn bound_symmetric_not_ci(g: &GeneratorSet) -> Result<f64> {
    require_four(g)?;
    Ok(cbrt_refined(25.0 * g.pi() as f64) - g.sigma() as f64)
}

/// `3 cbrt(pi_4) - sigma_4`, the bound for symmetric complete intersections.
pub fn bound_ci(g: &GeneratorSet) -> Result<f64> {
    require_four(g)?;
    Ok(3.0 * cbrt_refined(g.pi() as f64) - g.sigma() as f64)
}

/// `cbrt(6 pi_4) - sigma_4`, the bound for nonsymmetric 4-generated semigroups.
pub fn bound_ns4(g: &GeneratorSet) -> Result<f64> {
    require_four(g)?;
    Ok(cbrt_refined(6.0 * g.pi() as f64) - g.sigma() as f64)
}

/// `sqrt(3) sqrt(d_1 d_2 d_3 + 1) - sigma_3`, intended for nonsymmetric
/// 3-generated semigroups. Computed for any three generators.
pub fn bound_ns3(g: &GeneratorSet) -> Result<f64> {
    if g.len() != 3 {
        return Err(Error::NotThreeGenerators(g.len()));
    }
    Ok(3f64.sqrt() * (g.pi() as f64 + 1.0).sqrt() - g.sigma() as f64)
}

/// Exact Frobenius number next to the three closed-form 4-generator bounds.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub generators: Vec<u64>,
    pub exact_f: Option<u64>,
    pub class: Option<SemigroupClass>,
    pub bound_not_ci: f64,
    pub bound_ci: f64,
    pub bound_ns: f64,
    pub sigma: u64,
    pub pi: u128,
    /// `exact_f / bound_not_ci`, absent without `exact_f` or when the bound is not positive.
    pub tightness: Option<f64>,
}

pub fn bound_report(raw: &[u64], compute_exact: bool) -> Result<BoundReport> {
    let g = GeneratorSet::new(raw)?;
    require_four(&g)?;
    let bound_not_ci = bound_symmetric_not_ci(&g)?;
    let (exact_f, class) = if compute_exact {
        let f = apery_set(&g)?.frobenius() as u64;
        (Some(f), Some(crate::hilbert::classify(&g)?))
    } else {
        (None, None)
    };
    Ok(BoundReport {
        generators: g.elements().to_vec(),
        exact_f,
        class,
        bound_not_ci,
        bound_ci: bound_ci(&g)?,
        bound_ns: bound_ns4(&g)?,
        sigma: g.sigma(),
        pi: g.pi(),
        tightness: exact_f.and_then(|f| ratio(f, bound_not_ci)),
    })
}

/// `f / bound` when the bound is positive.
pub fn ratio(f: u64, bound: f64) -> Option<f64> {
    (bound > 0.0).then(|| f as f64 / bound)
}
