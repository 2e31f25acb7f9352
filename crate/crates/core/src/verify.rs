//! Per-dissection and exhaustive checks relating a `Λ_p` frieze to the
//! Conway–Coxeter frieze of its associated triangulation (p = 4, 6):
//!
//! * incidence: `t_α = q_α` at even vertices and `(p/2)·q_α` at odd ones;
//! * odd rows: both friezes agree entrywise on every odd row;
//! * even rows: each `Λ_p` entry is `λ_p·a` for a positive integer `a`, and
//!   the Conway–Coxeter entry is `a` or `(p/2)·a` in a pattern that
//!   alternates along the row, with a per-row offset `ε`.

use std::time::Duration;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::bijection::{associated_triangulation, same_color_completion, BijectionError, Triangulation};
use crate::frieze::{cc_frieze, lambda_frieze, Frieze, FriezeError};
use crate::polygon::{enumerate_p_angulations, fuss_catalan, Dissection, DissectionError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("verification is defined for p = 4 and p = 6, got {0}")]
    UnsupportedP(usize),
    #[error(transparent)]
    Dissection(#[from] DissectionError),
    #[error(transparent)]
    Bijection(#[from] BijectionError),
    #[error(transparent)]
    Frieze(#[from] FriezeError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim {
    Lemma,
    OddRows,
    EvenScaling,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FirstViolation {
    pub claim: Claim,
    /// Frieze row; absent for the incidence lemma.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub row: Option<usize>,
    /// Vertex for the lemma, column otherwise.
    pub index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaCheck {
    pub ok: bool,
    pub witness: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddRowCheck {
    pub ok: bool,
    pub witness: Option<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenScalingCheck {
    pub ok: bool,
    /// One offset per even row `2, 4, …` that passed, in grid columns:
    /// the factor `p/2` sits on columns `k` with `k + ε` odd.
    pub epsilons: Vec<u8>,
    /// The same offsets in the column numbering of the usual printed
    /// layout, where each row is listed from its leftmost entry; row `r`
    /// column `j` there is grid column `j − (r − 2)/2`.
    pub figure_epsilons: Vec<u8>,
    pub figure_epsilons_alternate: bool,
    pub witness: Option<(usize, usize)>,
}

fn check_p(p: usize) -> Result<(), VerifyError> {
    if p == 4 || p == 6 {
        Ok(())
    } else {
        Err(VerifyError::UnsupportedP(p))
    }
}

/// `t_α` against `q_α` (even α) and `(p/2)·q_α` (odd α).
pub fn check_lemma(d: &Dissection, p: usize) -> Result<LemmaCheck, VerifyError> {
    check_p(p)?;
    let t = associated_triangulation(d, p)?.triangle_counts();
    let q = d.quiddity_counts();
    let witness = (0..d.n()).find(|&alpha| {
        let expected = if alpha % 2 == 0 { q[alpha] } else { p / 2 * q[alpha] };
        t[alpha] != expected
    });
    Ok(LemmaCheck {
        ok: witness.is_none(),
        witness,
    })
}

/// First `(r, k)` on an odd row where the two friezes differ.
pub fn odd_row_mismatch(lambda: &Frieze, cc: &Frieze) -> Option<(usize, usize)> {
    if lambda.height() != cc.height() {
        return Some((0, 0));
    }
    for r in (1..lambda.height() - 1).step_by(2) {
        let (a, b) = (lambda.row(r).unwrap(), cc.row(r).unwrap());
        for k in 0..a.len() {
            let same = a[k].radical_part().is_zero()
                && b[k].radical_part().is_zero()
                && a[k].rational_part() == b[k].rational_part();
            if !same {
                return Some((r, k));
            }
        }
    }
    None
}

pub fn check_odd_rows(d: &Dissection, p: usize) -> Result<OddRowCheck, VerifyError> {
    let (lambda, cc) = build_pair(d, p)?;
    Ok(odd_rows(&lambda, &cc))
}

fn odd_rows(lambda: &Frieze, cc: &Frieze) -> OddRowCheck {
    let witness = odd_row_mismatch(lambda, cc);
    OddRowCheck {
        ok: witness.is_none(),
        witness,
    }
}

pub fn check_even_scaling(d: &Dissection, p: usize) -> Result<EvenScalingCheck, VerifyError> {
    let (lambda, cc) = build_pair(d, p)?;
    Ok(even_scaling(&lambda, &cc, p))
}

fn even_scaling(lambda: &Frieze, cc: &Frieze, p: usize) -> EvenScalingCheck {
    let factor = BigInt::from(p / 2);
    let mut epsilons = Vec::new();
    let mut witness = None;
    'rows: for r in (2..=lambda.width() + 1).step_by(2) {
        let (lam_row, cc_row) = (lambda.row(r).unwrap(), cc.row(r).unwrap());
        let mut pairs = Vec::with_capacity(lam_row.len());
        for (k, (x, y)) in lam_row.iter().zip(cc_row).enumerate() {
            match (x.as_radical_multiple(), y.as_integer()) {
                (Some(a), Some(c)) if a.is_positive() => pairs.push((a, c)),
                _ => {
                    witness = Some((r, k));
                    break 'rows;
                }
            }
        }
        // index of the first failing column for each offset
        let first_failure = |eps: usize| {
            pairs.iter().enumerate().position(|(k, (a, c))| {
                let scaled = if (k + eps) % 2 == 1 { a * &factor } else { a.clone() };
                &scaled != c
            })
        };
        match (first_failure(0), first_failure(1)) {
            (None, _) => epsilons.push(0),
            (_, None) => epsilons.push(1),
            (Some(k0), Some(k1)) => {
                witness = Some((r, k0.max(k1)));
                break;
            }
        }
    }
    let figure_epsilons: Vec<u8> = epsilons
        .iter()
        .enumerate()
        .map(|(j, &e)| (e + (j % 2) as u8) % 2)
        .collect();
    let figure_epsilons_alternate = figure_epsilons.windows(2).all(|w| w[0] != w[1]);
    EvenScalingCheck {
        ok: witness.is_none(),
        epsilons,
        figure_epsilons,
        figure_epsilons_alternate,
        witness,
    }
}

fn build_pair(d: &Dissection, p: usize) -> Result<(Frieze, Frieze), VerifyError> {
    check_p(p)?;
    let lambda = lambda_frieze(d, p)?;
    let cc = cc_frieze(&associated_triangulation(d, p)?)?;
    Ok((lambda, cc))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub p: usize,
    pub s: usize,
    pub dissection: Dissection,
    pub lemma_ok: bool,
    pub odd_rows_ok: bool,
    pub even_scaling_ok: bool,
    pub epsilons: Vec<u8>,
    pub figure_epsilons: Vec<u8>,
    pub figure_epsilons_alternate: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_violation: Option<FirstViolation>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn all_ok(&self) -> bool {
        self.lemma_ok && self.odd_rows_ok && self.even_scaling_ok
    }
}

/// All three checks, building each frieze once.
pub fn verify_dissection(d: &Dissection, p: usize) -> Result<VerificationReport, VerifyError> {
    let start = Stopwatch::start();
    let lemma = check_lemma(d, p)?;
    let (lambda, cc) = build_pair(d, p)?;
    let odd = odd_rows(&lambda, &cc);
    let even = even_scaling(&lambda, &cc, p);

    let first_violation = if let Some(alpha) = lemma.witness {
        Some(FirstViolation {
            claim: Claim::Lemma,
            row: None,
            index: alpha,
        })
    } else if let Some((r, k)) = odd.witness {
        Some(FirstViolation {
            claim: Claim::OddRows,
            row: Some(r),
            index: k,
        })
    } else {
        even.witness.map(|(r, k)| FirstViolation {
            claim: Claim::EvenScaling,
            row: Some(r),
            index: k,
        })
    };

    Ok(VerificationReport {
        p,
        s: d.faces().len(),
        dissection: d.clone(),
        lemma_ok: lemma.ok,
        odd_rows_ok: odd.ok,
        even_scaling_ok: even.ok,
        epsilons: even.epsilons,
        figure_epsilons: even.figure_epsilons,
        figure_epsilons_alternate: even.figure_epsilons_alternate,
        first_violation,
        elapsed: start.elapsed(),
    })
}

/// Compares `F_D` against the Conway–Coxeter frieze of every triangulation
/// of the polygon.
///
/// Odd rows alone do not single out `T_D`: the construction with the
/// colors swapped (even vertices black) yields a second triangulation with
/// the same odd rows. `unique_up_to_coloring` records that these two are
/// the only matches; `strictly_unique` that `T_D` is the only one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UniquenessReport {
    pub triangulations: usize,
    /// Triangulations whose frieze agrees with `F_D` on all odd rows.
    pub matches: Vec<Dissection>,
    pub strictly_unique: bool,
    pub unique_up_to_coloring: bool,
}

pub fn uniqueness_check(d: &Dissection, p: usize) -> Result<UniquenessReport, VerifyError> {
    check_p(p)?;
    let lambda = lambda_frieze(d, p)?;
    let associated = associated_triangulation(d, p)?.into_dissection();
    let twin = same_color_completion(d, p, 0)?.into_dissection();
    let all = enumerate_p_angulations(d.n() - 2, 3)?;
    let mut matches = Vec::new();
    for t in &all {
        let cc = cc_frieze(&Triangulation::new(t.clone())?)?;
        if odd_row_mismatch(&lambda, &cc).is_none() {
            matches.push(t.clone());
        }
    }
    let strictly_unique = matches == [associated.clone()];
    let unique_up_to_coloring = matches.contains(&associated) && matches.iter().all(|m| *m == associated || *m == twin);
    Ok(UniquenessReport {
        triangulations: all.len(),
        matches,
        strictly_unique,
        unique_up_to_coloring,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepLevel {
    pub s: usize,
    pub n: usize,
    pub count: usize,
    pub expected: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UniquenessSummary {
    /// Largest polygon size the deep check was run on.
    pub max_n: usize,
    pub dissections: usize,
    pub triangulations_compared: usize,
    pub strictly_unique: usize,
    /// Dissections where odd rows match something other than `T_D` and
    /// its color-swapped twin.
    pub failures: Vec<Dissection>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub p: usize,
    pub s_max: usize,
    pub levels: Vec<SweepLevel>,
    pub checked: usize,
    pub all_ok: bool,
    pub figure_epsilons_always_alternate: bool,
    pub counterexamples: Vec<VerificationReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub uniqueness: Option<UniquenessSummary>,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SweepOptions {
    /// Also run [`uniqueness_check`] on polygons with at most this many
    /// vertices.
    pub deep_uniqueness_max_n: Option<usize>,
}

pub fn sweep(p: usize, s_max: usize) -> Result<SweepSummary, VerifyError> {
    sweep_with(p, s_max, SweepOptions::default())
}

pub fn sweep_with(p: usize, s_max: usize, options: SweepOptions) -> Result<SweepSummary, VerifyError> {
    check_p(p)?;
    if s_max == 0 {
        return Err(DissectionError::EmptyFaceCount.into());
    }
    let start = Stopwatch::start();
    let mut levels = Vec::with_capacity(s_max);
    let mut checked = 0;
    let mut counterexamples = Vec::new();
    let mut figure_epsilons_always_alternate = true;
    let mut uniqueness = options.deep_uniqueness_max_n.map(|max_n| UniquenessSummary {
        max_n,
        dissections: 0,
        triangulations_compared: 0,
        strictly_unique: 0,
        failures: Vec::new(),
    });

    for s in 1..=s_max {
        let all = enumerate_p_angulations(s, p)?;
        let reports = map_all(&all, |d| verify_dissection(d, p))?;
        levels.push(SweepLevel {
            s,
            n: crate::polygon::polygon_size(s, p),
            count: all.len(),
            expected: fuss_catalan(s, p),
        });
        checked += reports.len();
        for report in reports {
            figure_epsilons_always_alternate &= report.figure_epsilons_alternate;
            if !report.all_ok() {
                counterexamples.push(report);
            }
        }
        if let Some(summary) = uniqueness.as_mut() {
            if crate::polygon::polygon_size(s, p) <= summary.max_n {
                let results = map_all(&all, |d| uniqueness_check(d, p))?;
                for (d, result) in all.iter().zip(results) {
                    summary.dissections += 1;
                    summary.triangulations_compared += result.triangulations;
                    summary.strictly_unique += usize::from(result.strictly_unique);
                    if !result.unique_up_to_coloring {
                        summary.failures.push(d.clone());
                    }
                }
            }
        }
    }

    let counts_ok = levels.iter().all(|l| l.count as u128 == l.expected);
    let unique_ok = uniqueness.as_ref().is_none_or(|u| u.failures.is_empty());
    Ok(SweepSummary {
        p,
        s_max,
        levels,
        checked,
        all_ok: counterexamples.is_empty() && counts_ok && unique_ok,
        figure_epsilons_always_alternate,
        counterexamples,
        uniqueness,
        elapsed: start.elapsed(),
    })
}

#[cfg(feature = "parallel")]
fn map_all<T, F>(items: &[Dissection], f: F) -> Result<Vec<T>, VerifyError>
where
    T: Send,
    F: Fn(&Dissection) -> Result<T, VerifyError> + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn map_all<T, F>(items: &[Dissection], f: F) -> Result<Vec<T>, VerifyError>
where
    F: Fn(&Dissection) -> Result<T, VerifyError>,
{
    items.iter().map(f).collect()
}

/// Wall-clock timer; reads zero on wasm, where `Instant` is unavailable.
struct Stopwatch(#[cfg(not(target_family = "wasm"))] std::time::Instant);

impl Stopwatch {
    fn start() -> Self {
        Stopwatch(
            #[cfg(not(target_family = "wasm"))]
            std::time::Instant::now(),
        )
    }

    fn elapsed(&self) -> Duration {
        #[cfg(not(target_family = "wasm"))]
        return self.0.elapsed();
        #[cfg(target_family = "wasm")]
        Duration::ZERO
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bijection::associated_triangulation_p4;

    fn d0() -> Dissection {
        Dissection::new(10, [(1, 4), (4, 9), (5, 8)]).unwrap()
    }

    fn d1() -> Dissection {
        Dissection::new(18, [(1, 6), (6, 15), (8, 13)]).unwrap()
    }

    #[test]
    fn lemma_examples() {
        assert_eq!(
            check_lemma(&d0(), 4).unwrap(),
            LemmaCheck {
                ok: true,
                witness: None
            }
        );
        assert!(check_lemma(&Dissection::empty(4).unwrap(), 4).unwrap().ok);
        assert!(check_lemma(&d1(), 6).unwrap().ok);
        assert_eq!(check_lemma(&d0(), 5), Err(VerifyError::UnsupportedP(5)));
    }

    #[test]
    fn odd_rows_examples() {
        assert!(check_odd_rows(&d0(), 4).unwrap().ok);
        assert!(check_odd_rows(&Dissection::empty(4).unwrap(), 4).unwrap().ok);
        assert!(check_odd_rows(&d1(), 6).unwrap().ok);
    }

    #[test]
    fn even_scaling_examples() {
        let check = check_even_scaling(&d0(), 4).unwrap();
        assert!(check.ok);
        // the factor sits on the odd (black) grid columns in every even row;
        // in printed-table columns it moves by one every two rows
        assert_eq!(check.epsilons, vec![0, 0, 0, 0]);
        assert_eq!(check.figure_epsilons, vec![0, 1, 0, 1]);
        assert!(check.figure_epsilons_alternate);

        let single = check_even_scaling(&Dissection::empty(4).unwrap(), 4).unwrap();
        assert_eq!(single.epsilons, vec![0]);
    }

    #[test]
    fn row_four_ratios_of_d0() {
        let (lambda, cc) = build_pair(&d0(), 4).unwrap();
        let ratios: Vec<BigInt> = lambda
            .row(4)
            .unwrap()
            .iter()
            .zip(cc.row(4).unwrap())
            .map(|(x, y)| y.as_integer().unwrap() / x.as_radical_multiple().unwrap())
            .collect();
        let grid: Vec<BigInt> = [1, 2, 1, 2, 1, 2, 1, 2, 1, 2].map(BigInt::from).to_vec();
        assert_eq!(ratios, grid);
        // printed row 4 starts at grid column 9
        let mut printed = ratios.clone();
        printed.rotate_right(1);
        let figure: Vec<BigInt> = [2, 1, 2, 1, 2, 1, 2, 1, 2, 1].map(BigInt::from).to_vec();
        assert_eq!(printed, figure);
    }

    #[test]
    fn report_bundles_checks() {
        for (d, p) in [(d0(), 4), (d1(), 6)] {
            let report = verify_dissection(&d, p).unwrap();
            assert!(report.all_ok());
            assert_eq!(report.first_violation, None);
        }
        let json = serde_json::to_value(verify_dissection(&d0(), 4).unwrap()).unwrap();
        assert_eq!(json["p"], 4);
        assert_eq!(json["s"], 4);
        assert_eq!(json["dissection"]["n"], 10);
        assert_eq!(json["epsilons"], serde_json::json!([0, 0, 0, 0]));
        assert_eq!(json["figure_epsilons"], serde_json::json!([0, 1, 0, 1]));
    }

    #[test]
    fn small_sweeps() {
        let summary = sweep(4, 2).unwrap();
        assert_eq!(summary.checked, 4);
        assert!(summary.all_ok);
        let one = sweep(4, 1).unwrap();
        assert_eq!(one.checked, 1);
        assert!(one.counterexamples.is_empty());
        assert_eq!(sweep(5, 2).unwrap_err(), VerifyError::UnsupportedP(5));
    }

    #[test]
    fn corrupted_triangulation_breaks_odd_rows() {
        // replace the tree edge {1,3} of T_{D_0} by the flipped chord {2,4}
        let t = associated_triangulation_p4(&d0()).unwrap();
        let diagonals = t
            .dissection()
            .diagonals()
            .iter()
            .copied()
            .filter(|&d| d != (1, 3))
            .chain([(2, 4)]);
        let corrupted = Triangulation::new(Dissection::new(10, diagonals).unwrap()).unwrap();
        let lambda = lambda_frieze(&d0(), 4).unwrap();
        let cc = cc_frieze(&corrupted).unwrap();
        assert!(odd_row_mismatch(&lambda, &cc).is_some());
    }

    #[test]
    fn uniqueness_on_hexagon() {
        for d in enumerate_p_angulations(2, 4).unwrap() {
            let report = uniqueness_check(&d, 4).unwrap();
            assert_eq!(report.triangulations, 14);
            assert!(report.unique_up_to_coloring, "{d:?}: {:?}", report.matches);
            assert!(!report.strictly_unique);
            assert_eq!(report.matches.len(), 2);
        }
    }
}
