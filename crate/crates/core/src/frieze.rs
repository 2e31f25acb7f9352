//! Frieze patterns over `Q(√m)`.
//!
//! Entry `e(r, k)` sits in row `r` at horizontal position `k + r/2`, with
//! `k` taken modulo the period `N = n + 3`. The diamond at `(r, k)` has
//! west `e(r, k)`, east `e(r, k+1)`, south `e(r−1, k+1)` and north
//! `e(r+1, k)`; the unimodular rule reads `west·east − south·north = 1`.
//! Row 2 is the quiddity row and `e(2, k)` belongs to polygon vertex `k`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bijection::{associated_triangulation, BijectionError, Triangulation};
use crate::exact::{QuadNum, Radicand};
use crate::polygon::{Dissection, DissectionError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FriezeError {
    #[error("a quiddity row needs at least 3 entries, got {0}")]
    QuiddityTooShort(usize),
    #[error("quiddity entries must share one radicand")]
    MixedRadicands,
    #[error("not a frieze quiddity: entry ({row}, {col}) = {value} is not positive")]
    NotPositive { row: usize, col: usize, value: String },
    #[error("closure failure: row {row} entry {col} is {value}, expected 1")]
    ClosureFailure { row: usize, col: usize, value: String },
    #[error("Conway-Coxeter entry ({row}, {col}) = {value} is not an integer")]
    NonIntegral { row: usize, col: usize, value: String },
    #[error("Lambda_p friezes are built for p = 4 or p = 6, got {0}")]
    UnsupportedP(usize),
    #[error("grid shape: {0}")]
    Shape(String),
    #[error(transparent)]
    Dissection(#[from] DissectionError),
    #[error(transparent)]
    Bijection(#[from] BijectionError),
}

/// A periodic frieze of width `n`: rows `0..=n+3`, each of length `n + 3`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawFrieze")]
pub struct Frieze {
    width: usize,
    m: Radicand,
    rows: Vec<Vec<QuadNum>>,
}

#[derive(Deserialize)]
struct RawFrieze {
    width: usize,
    m: i64,
    rows: Vec<Vec<QuadNum>>,
}

impl TryFrom<RawFrieze> for Frieze {
    type Error = FriezeError;

    fn try_from(raw: RawFrieze) -> Result<Self, Self::Error> {
        let m = Radicand::try_from(raw.m).map_err(|e| FriezeError::Shape(e.to_string()))?;
        let f = Frieze::from_rows(m, raw.rows)?;
        if f.width != raw.width {
            return Err(FriezeError::Shape(format!(
                "declared width {} but rows imply {}",
                raw.width, f.width
            )));
        }
        Ok(f)
    }
}

impl Frieze {
    /// Generates the frieze of a quiddity row with the diamond rule
    /// `e(r+1, k) = (e(r, k)·e(r, k+1) − 1) / e(r−1, k+1)`.
    ///
    /// Every generated entry must be positive and row `n + 2` must close up
    /// as all ones.
    pub fn from_quiddity(quiddity: &[QuadNum]) -> Result<Self, FriezeError> {
        let period = quiddity.len();
        if period < 3 {
            return Err(FriezeError::QuiddityTooShort(period));
        }
        let m = quiddity[0].radicand();
        if quiddity.iter().any(|x| x.radicand() != m) {
            return Err(FriezeError::MixedRadicands);
        }
        let width = period - 3;
        let one = QuadNum::one(m);
        let zero = QuadNum::zero(m);

        let mut rows = Vec::with_capacity(width + 4);
        rows.push(vec![zero.clone(); period]);
        rows.push(vec![one.clone(); period]);
        rows.push(quiddity.to_vec());
        check_positive(&rows[2], 2)?;

        for r in 2..width + 2 {
            let next: Vec<QuadNum> = (0..period)
                .map(|k| {
                    let k1 = (k + 1) % period;
                    let numerator = &(&rows[r][k] * &rows[r][k1]) - &one;
                    // divisors are previously checked positive entries
                    &numerator / &rows[r - 1][k1]
                })
                .collect();
            check_positive(&next, r + 1)?;
            rows.push(next);
        }

        let closing = width + 2;
        if let Some((col, value)) = rows[closing].iter().enumerate().find(|(_, x)| !x.is_one()) {
            return Err(FriezeError::ClosureFailure {
                row: closing,
                col,
                value: value.to_string(),
            });
        }
        rows.push(vec![zero; period]);
        Ok(Frieze { width, m, rows })
    }

    /// Wraps an arbitrary grid without checking the frieze rules; use
    /// [`Frieze::validate`] to inspect it.
    pub fn from_rows(m: Radicand, rows: Vec<Vec<QuadNum>>) -> Result<Self, FriezeError> {
        if rows.len() < 4 {
            return Err(FriezeError::Shape(format!("need at least 4 rows, got {}", rows.len())));
        }
        let width = rows.len() - 4;
        let period = width + 3;
        for (r, row) in rows.iter().enumerate() {
            if row.len() != period {
                return Err(FriezeError::Shape(format!(
                    "row {r} has {} entries, expected {period}",
                    row.len()
                )));
            }
            if row.iter().any(|x| x.radicand() != m) {
                return Err(FriezeError::MixedRadicands);
            }
        }
        Ok(Frieze { width, m, rows })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn period(&self) -> usize {
        self.width + 3
    }

    pub fn radicand(&self) -> Radicand {
        self.m
    }

    /// Number of rows, `n + 4`.
    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<QuadNum>] {
        &self.rows
    }

    pub fn row(&self, r: usize) -> Option<&[QuadNum]> {
        self.rows.get(r).map(Vec::as_slice)
    }

    pub fn quiddity(&self) -> &[QuadNum] {
        &self.rows[2]
    }

    /// `e(r, k)` with `k` reduced modulo the period.
    pub fn entry(&self, r: usize, k: isize) -> &QuadNum {
        let period = self.period() as isize;
        &self.rows[r][k.rem_euclid(period) as usize]
    }

    /// Checks boundary rows, positivity, the diamond rule and the diagonal
    /// recurrence `e(r+1, k) = e(2, k+r−1)·e(r, k) − e(r−1, k)`.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let top = self.width + 3;
        let period = self.period() as isize;
        let one = QuadNum::one(self.m);

        for (r, expect_one) in [(0, false), (1, true), (top - 1, true), (top, false)] {
            for (k, x) in self.rows[r].iter().enumerate() {
                let ok = if expect_one { x.is_one() } else { x.is_zero() };
                if !ok {
                    violations.push(Violation::new(ViolationKind::Boundary, r, k));
                }
            }
        }
        for r in 2..=self.width + 1 {
            for (k, x) in self.rows[r].iter().enumerate() {
                if !x.is_positive() {
                    violations.push(Violation::new(ViolationKind::Positivity, r, k));
                }
            }
        }
        for r in 1..=self.width + 2 {
            for k in 0..period {
                let west = self.entry(r, k);
                let east = self.entry(r, k + 1);
                let south = self.entry(r - 1, k + 1);
                let north = self.entry(r + 1, k);
                if &(west * east) - &(south * north) != one {
                    violations.push(Violation::new(ViolationKind::Diamond, r, k as usize));
                }
            }
        }
        for r in 2..=self.width + 2 {
            for k in 0..period {
                let expected = &(self.entry(2, k + r as isize - 1) * self.entry(r, k)) - self.entry(r - 1, k);
                if self.entry(r + 1, k) != &expected {
                    violations.push(Violation::new(ViolationKind::Recurrence, r, k as usize));
                }
            }
        }
        ValidationReport { violations }
    }

    /// Staggered layout: row `n + 3` on top, entry `e(r, k)` in cell column
    /// `(2k + r) mod 2N`, so every diamond is drawn in place.
    pub fn to_ascii(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|row| row.iter().map(ToString::to_string).collect())
            .collect();
        let cell_width = cells
            .iter()
            .flatten()
            .map(|s| s.chars().count())
            .max()
            .unwrap_or(1)
            .max(1);
        let period = self.period();
        let mut out = String::new();
        for r in (0..self.rows.len()).rev() {
            let mut line = vec![String::new(); 2 * period];
            for (k, text) in cells[r].iter().enumerate() {
                line[(2 * k + r) % (2 * period)] = text.clone();
            }
            let rendered: Vec<String> = line.iter().map(|s| format!("{s:>cell_width$}")).collect();
            let _ = writeln!(out, "{}", rendered.join(" ").trim_end());
        }
        out
    }

    /// One line per row, row 0 first, entries in rendering form.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "{}", line.join(","));
        }
        out
    }
}

fn check_positive(row: &[QuadNum], r: usize) -> Result<(), FriezeError> {
    match row.iter().enumerate().find(|(_, x)| !x.is_positive()) {
        Some((col, value)) => Err(FriezeError::NotPositive {
            row: r,
            col,
            value: value.to_string(),
        }),
        None => Ok(()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    Boundary,
    Positivity,
    Diamond,
    Recurrence,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub row: usize,
    pub col: usize,
}

impl Violation {
    fn new(kind: ViolationKind, row: usize, col: usize) -> Self {
        Violation { kind, row, col }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn of_kind(&self, kind: ViolationKind) -> impl Iterator<Item = &Violation> {
        self.violations.iter().filter(move |v| v.kind == kind)
    }
}

/// The frieze of type `Λ_p` of a p-angulation: quiddity `λ_p·q_α`.
pub fn lambda_frieze(d: &Dissection, p: usize) -> Result<Frieze, FriezeError> {
    if p != 4 && p != 6 {
        return Err(FriezeError::UnsupportedP(p));
    }
    if !d.is_p_angulation(p) {
        return Err(DissectionError::NotPAngulation(p).into());
    }
    let m = Radicand::for_polygon(p).expect("p is 4 or 6");
    let quiddity: Vec<QuadNum> = d
        .quiddity_counts()
        .into_iter()
        .map(|q| QuadNum::radical_multiple(m, q))
        .collect();
    Frieze::from_quiddity(&quiddity)
}

/// The Conway–Coxeter frieze of a triangulation; every interior entry is
/// checked to be a positive integer.
pub fn cc_frieze(t: &Triangulation) -> Result<Frieze, FriezeError> {
    let quiddity: Vec<QuadNum> = t
        .triangle_counts()
        .into_iter()
        .map(|c| QuadNum::from_int(Radicand::One, c))
        .collect();
    let f = Frieze::from_quiddity(&quiddity)?;
    for (r, row) in f.rows.iter().enumerate() {
        if let Some((col, value)) = row.iter().enumerate().find(|(_, x)| x.as_integer().is_none()) {
            return Err(FriezeError::NonIntegral {
                row: r,
                col,
                value: value.to_string(),
            });
        }
    }
    Ok(f)
}

/// The Conway–Coxeter frieze of the triangulation associated to a
/// p-angulation.
pub fn associated_cc_frieze(d: &Dissection, p: usize) -> Result<Frieze, FriezeError> {
    cc_frieze(&associated_triangulation(d, p)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bijection::associated_triangulation_p4;

    fn ints(values: &[i64]) -> Vec<QuadNum> {
        values.iter().map(|&v| QuadNum::from_int(Radicand::One, v)).collect()
    }

    fn d0() -> Dissection {
        Dissection::new(10, [(1, 4), (4, 9), (5, 8)]).unwrap()
    }

    #[test]
    fn width_one_frieze() {
        let f = Frieze::from_quiddity(&ints(&[1, 2, 1, 2])).unwrap();
        assert_eq!(f.width(), 1);
        assert_eq!(
            f.rows(),
            &[
                ints(&[0; 4]),
                ints(&[1; 4]),
                ints(&[1, 2, 1, 2]),
                ints(&[1; 4]),
                ints(&[0; 4])
            ]
        );
        assert!(f.validate().is_valid());
    }

    #[test]
    fn all_ones_quiddity_fails_positivity() {
        let err = Frieze::from_quiddity(&ints(&[1, 1, 1, 1])).unwrap_err();
        assert!(matches!(err, FriezeError::NotPositive { row: 3, .. }), "{err:?}");
    }

    #[test]
    fn closure_failure() {
        // positive throughout, but row n+2 = row 3 is (3,3,3,3)
        let err = Frieze::from_quiddity(&ints(&[2, 2, 2, 2])).unwrap_err();
        assert!(matches!(err, FriezeError::ClosureFailure { row: 3, .. }), "{err:?}");
    }

    #[test]
    fn triangle_is_width_zero() {
        let f = Frieze::from_quiddity(&ints(&[1, 1, 1])).unwrap();
        assert_eq!(f.width(), 0);
        assert_eq!(f.height(), 4);
        assert!(f.validate().is_valid());
        assert!(Frieze::from_quiddity(&ints(&[1, 1])).is_err());
    }

    #[test]
    fn lambda_frieze_of_d0() {
        let f = lambda_frieze(&d0(), 4).unwrap();
        assert_eq!(f.width(), 7);
        assert_eq!(
            f.row(3).unwrap(),
            ints_in(Radicand::Two, &[3, 3, 1, 5, 11, 3, 1, 3, 7, 3])
        );
        // e(4, 9) = 4√2 fixes the grid convention
        assert_eq!(f.entry(4, 9), &QuadNum::radical_multiple(Radicand::Two, 4));
        for (k, x) in f.quiddity().iter().enumerate() {
            assert_eq!(x.as_radical_multiple().unwrap(), d0().quiddity_counts()[k].into());
        }
        assert!(f.validate().is_valid());
    }

    fn ints_in(m: Radicand, values: &[i64]) -> Vec<QuadNum> {
        values.iter().map(|&v| QuadNum::from_int(m, v)).collect()
    }

    #[test]
    fn single_quadrilateral() {
        let f = lambda_frieze(&Dissection::empty(4).unwrap(), 4).unwrap();
        assert_eq!(f.width(), 1);
        assert!(f
            .quiddity()
            .iter()
            .all(|x| x == &QuadNum::radical_multiple(Radicand::Two, 1)));
    }

    #[test]
    fn lambda_frieze_rejects_bad_input() {
        assert_eq!(lambda_frieze(&d0(), 5), Err(FriezeError::UnsupportedP(5)));
        assert_eq!(
            lambda_frieze(&d0(), 6),
            Err(FriezeError::Dissection(DissectionError::NotPAngulation(6)))
        );
    }

    #[test]
    fn cc_frieze_of_t_d0() {
        let t = associated_triangulation_p4(&d0()).unwrap();
        let f = cc_frieze(&t).unwrap();
        assert_eq!(f.row(2).unwrap(), ints(&[1, 4, 1, 2, 3, 4, 1, 2, 2, 4]));
        assert_eq!(f.row(1).unwrap(), ints(&[1; 10]));
        assert!(f.validate().is_valid());
    }

    #[test]
    fn perturbation_is_local() {
        let f = lambda_frieze(&d0(), 4).unwrap();
        let mut rows = f.rows().to_vec();
        let (r0, k0) = (4usize, 6usize);
        rows[r0][k0] = &rows[r0][k0] + &QuadNum::one(Radicand::Two);
        let broken = Frieze::from_rows(Radicand::Two, rows).unwrap();
        let report = broken.validate();
        let incident = [(r0, k0), (r0, k0 - 1), (r0 + 1, k0 - 1), (r0 - 1, k0)];
        let diamonds: Vec<_> = report.of_kind(ViolationKind::Diamond).collect();
        assert!(!diamonds.is_empty() && diamonds.len() <= 4);
        for v in diamonds {
            assert!(incident.contains(&(v.row, v.col)), "{v:?}");
        }
        assert_eq!(report.of_kind(ViolationKind::Boundary).count(), 0);
    }

    #[test]
    fn boundary_violation() {
        let f = Frieze::from_quiddity(&ints(&[1, 2, 1, 2])).unwrap();
        let mut rows = f.rows().to_vec();
        rows[3][2] = QuadNum::from_int(Radicand::One, 2);
        let report = Frieze::from_rows(Radicand::One, rows).unwrap().validate();
        assert!(report
            .of_kind(ViolationKind::Boundary)
            .any(|v| v.row == 3 && v.col == 2));
    }

    #[test]
    fn shape_checks() {
        assert!(Frieze::from_rows(Radicand::One, vec![ints(&[0, 0, 0]); 3]).is_err());
        let mut rows = vec![ints(&[0, 0, 0, 0]); 5];
        rows[2].pop();
        assert!(Frieze::from_rows(Radicand::One, rows).is_err());
    }

    #[test]
    fn json_round_trip() {
        let f = lambda_frieze(&d0(), 4).unwrap();
        let text = serde_json::to_string(&f).unwrap();
        assert!(text.starts_with(r#"{"width":7,"m":2,"rows":[[{"m":2,"rat":"0","rad":"0"}"#));
        let back: Frieze = serde_json::from_str(&text).unwrap();
        assert_eq!(back, f);
        let wrong_width = text.replacen(r#""width":7"#, r#""width":6"#, 1);
        assert!(serde_json::from_str::<Frieze>(&wrong_width).is_err());
    }

    #[test]
    fn ascii_layout() {
        let f = Frieze::from_quiddity(&ints(&[1, 2, 1, 2])).unwrap();
        let text = f.to_ascii();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 5);
        // row 4 on top (zeros at even columns), row 3 ones at odd columns
        assert_eq!(lines[0], "0   0   0   0");
        assert_eq!(lines[1], "  1   1   1   1");
        assert_eq!(lines[2], "2   1   2   1");
        assert_eq!(lines[4], "0   0   0   0");
        assert_eq!(f.to_csv().lines().nth(2), Some("1,2,1,2"));
    }
}
