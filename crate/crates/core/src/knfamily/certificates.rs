//! Signature certificates on the sequence `ω_l`: the jump dichotomy, the
//! truncated homomorphism `σ̄`, and linear-independence witnesses.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use num_traits::{Signed, Zero};
use rayon::prelude::*;

use super::{f_value, seifert_k0_form, seifert_kn, KnError, KnotCombo, OmegaSequence};
use crate::seifert::{hermitian_form, mirror, signature_exact, SeifertError, SeifertMatrix};
use crate::CirclePoint;

/// Exact integer signature of a nonsingular form.
fn nonsingular_sigma(s: &SeifertMatrix, omega: &CirclePoint) -> Option<i64> {
    let v = signature_exact(&hermitian_form(s, omega));
    if v.singular {
        None
    } else {
        v.as_integer()
    }
}

/// `σ_ω` of a combination, summed over its terms. A combination is realized
/// as a block sum, so this equals the signature of its full Seifert matrix.
fn combo_sigma(combo: &KnotCombo, omega: &CirclePoint) -> Option<i64> {
    combo.terms().try_fold(0i64, |acc, (n, c)| {
        let s = seifert_kn(n);
        let piece = if c < 0 { mirror(&s) } else { s };
        Some(acc + c.abs() * nonsingular_sigma(&piece, omega)?)
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridCell {
    pub l: u64,
    pub m: u64,
    /// Sign of `F(ω_l, m)`.
    pub f_sign: i32,
    /// `σ_{ω_l}(K_m) − σ_{ω_l}(K_0)`.
    pub sigma_diff: i64,
    pub sigma_k0: i64,
}

#[derive(Clone, Debug)]
pub struct GridReport {
    pub l0: u64,
    /// Row-major in `l`, then `m`.
    pub cells: Vec<GridCell>,
    /// For each `m` that jumps somewhere, the common sign of the ±2.
    pub jump_signs: BTreeMap<u64, i32>,
}

fn check_cell(seq: &OmegaSequence, l: u64, m: u64, k0: i64) -> Result<GridCell, KnError> {
    let omega = seq.omega(l)?;
    let f = f_value(omega, m)?;
    if f.is_zero() {
        return Err(KnError::FVanishes { l, m });
    }
    let f_sign = if f.is_positive() { 1 } else { -1 };
    let km = nonsingular_sigma(&seifert_kn(m), omega)
        .ok_or_else(|| SeifertError::Inconsistent(format!("S_{m} singular at omega_{l} although F != 0")))?;
    let sigma_diff = km - k0;
    let consistent = match f_sign {
        -1 => sigma_diff == 0,
        _ => sigma_diff.abs() == 2,
    };
    let predicted = m <= seq.l0 || (f_sign > 0) == (m >= l);
    if !consistent || !predicted {
        return Err(KnError::DichotomyViolated { l, m, f_sign, sigma_diff });
    }
    Ok(GridCell { l, m, f_sign, sigma_diff, sigma_k0: k0 })
}

/// Checks every `(l, m)` cell: `F < 0` gives no jump, `F > 0` a jump of ±2,
/// `F > 0` exactly when `m ≥ l` (for `m > l0`), and the jump sign depends
/// only on `m`. The first violation is returned as an error.
pub fn lemma_dichotomy_grid(
    seq: &OmegaSequence,
    l_range: RangeInclusive<u64>,
    m_range: RangeInclusive<u64>,
) -> Result<GridReport, KnError> {
    let m_form = seifert_k0_form();
    let ls: Vec<u64> = l_range.collect();
    let ms: Vec<u64> = m_range.collect();
    let baselines: Vec<i64> = ls
        .par_iter()
        .map(|&l| {
            let omega = seq.omega(l)?;
            nonsingular_sigma(&m_form, omega).ok_or_else(|| KnError::AlexanderVanishes(omega.clone()))
        })
        .collect::<Result<_, _>>()?;
    let pairs: Vec<(usize, u64)> = (0..ls.len()).flat_map(|i| ms.iter().map(move |&m| (i, m))).collect();
    let cells: Vec<GridCell> = pairs
        .par_iter()
        .map(|&(i, m)| check_cell(seq, ls[i], m, baselines[i]))
        .collect::<Result<_, _>>()?;
    let mut jump_signs = BTreeMap::new();
    for c in cells.iter().filter(|c| c.sigma_diff != 0) {
        let s = c.sigma_diff.signum() as i32;
        if *jump_signs.entry(c.m).or_insert(s) != s {
            return Err(KnError::JumpSignNotConstant(c.m));
        }
    }
    Ok(GridReport { l0: seq.l0, cells, jump_signs })
}

/// `σ̄(combo) = (½σ_{ω_{l0+1}}, …, ½σ_{ω_{l0+k}})`.
pub fn sigma_bar(combo: &KnotCombo, seq: &OmegaSequence, k: usize) -> Result<Vec<i64>, KnError> {
    (1..=k)
        .into_par_iter()
        .map(|j| {
            let l = seq.l0 + j as u64;
            let omega = seq.omega(l)?;
            let s = combo_sigma(combo, omega).ok_or(KnError::SingularOmega { index: j, l })?;
            if s % 2 != 0 {
                return Err(SeifertError::Inconsistent(format!("odd signature {s} at omega_{l}")).into());
            }
            Ok(s / 2)
        })
        .collect()
}

/// A point `ω_l` at which a combination has nonzero signature, so the
/// combination is not slice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependenceWitness {
    pub l: u64,
    pub omega: CirclePoint,
    pub sigma: i64,
}

/// Finds a witness that `Σ αᵢ K_{lᵢ}` (all `lᵢ > l0`) is not slice.
///
/// First tries some `ω_h`, `h` above every index, where `σ_{ω_h}(K_0) ≠ 0`;
/// there the signature is `σ_{ω_h}(K_0)·Σαᵢ`. If the coefficients sum to
/// zero, `ω_k` for the largest index `k` isolates that term's jump.
pub fn independence_certificate(combo: &KnotCombo, seq: &OmegaSequence) -> Result<IndependenceWitness, KnError> {
    if combo.is_zero() {
        return Err(KnError::ZeroCombination);
    }
    if let Some((index, _)) = combo.terms().find(|&(n, _)| n <= seq.l0) {
        return Err(KnError::IndexNotAboveL0 { index, l0: seq.l0 });
    }
    let top = combo.terms().map(|(n, _)| n).max().expect("nonzero combination");
    let m_form = seifert_k0_form();
    let h = (top + 1..=seq.l_max)
        .find(|&h| {
            seq.omega(h)
                .ok()
                .and_then(|w| nonsingular_sigma(&m_form, w))
                .is_some_and(|s| s != 0)
        })
        .ok_or(KnError::NoNonvanishingBaseline(top))?;
    for l in [h, top] {
        let omega = seq.omega(l)?;
        let sigma = combo_sigma(combo, omega).ok_or(KnError::AlexanderVanishes(omega.clone()))?;
        if sigma != 0 {
            return Ok(IndependenceWitness { l, omega: omega.clone(), sigma });
        }
    }
    Err(KnError::AllVanish)
}
