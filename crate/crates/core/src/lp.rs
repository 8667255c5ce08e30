//! Dense tableau simplex for `maximize c·x subject to Ax <= b` with free `x`.
//!
//! The tableau is stored in dictionary form: every basic variable is written
//! as `x_B = rhs - Σ t·x_N`. Free variables are pivoted into the basis first
//! (Gaussian elimination with partial pivoting) and never leave it again, so
//! the public contract can present `x` as unrestricted without doubling the
//! column count. Feasibility is established by a phase-1 auxiliary problem
//! with a single artificial variable; pricing is largest-coefficient until
//! the first degenerate pivot and smallest-index (Bland) afterwards.

use crate::error::{Error, Result};

/// Numerical tolerances of the simplex engine.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LpTolerances {
    /// Absolute tolerance for feasibility and reduced-cost optimality tests.
    pub feas_tol: f64,
    /// Minimum magnitude of an admissible pivot element.
    pub pivot_tol: f64,
    /// Pivot budget per phase; exceeding it is reported as a breakdown.
    pub max_pivots: usize,
}

impl Default for LpTolerances {
    fn default() -> Self {
        Self { feas_tol: 1e-9, pivot_tol: 1e-10, max_pivots: 50_000 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Unbounded,
    Infeasible,
}

/// Outcome of one linear program.
#[derive(Debug, Clone, PartialEq)]
pub enum LpResult {
    Optimal { value: f64, point: Vec<f64> },
    Unbounded,
    Infeasible,
}

impl LpResult {
    pub fn status(&self) -> LpStatus {
        match self {
            LpResult::Optimal { .. } => LpStatus::Optimal,
            LpResult::Unbounded => LpStatus::Unbounded,
            LpResult::Infeasible => LpStatus::Infeasible,
        }
    }

    pub fn value(&self) -> Option<f64> {
        match self {
            LpResult::Optimal { value, .. } => Some(*value),
            _ => None,
        }
    }

    pub fn point(&self) -> Option<&[f64]> {
        match self {
            LpResult::Optimal { point, .. } => Some(point),
            _ => None,
        }
    }
}

/// Maximizes `c·x` over `{x : Ax <= b}` with default tolerances.
pub fn lp_solve(a: &[Vec<f64>], b: &[f64], c: &[f64]) -> Result<LpResult> {
    lp_solve_with(a, b, c, &LpTolerances::default())
}

pub fn lp_solve_with(a: &[Vec<f64>], b: &[f64], c: &[f64], tol: &LpTolerances) -> Result<LpResult> {
    validate(a, b, &[c])?;
    let mut tab = Tableau::new(a, b, &[c]);
    match tab.optimize(0, tol)? {
        Phase::Done => finish(&tab, a, b, c, tol),
        Phase::Unbounded => Ok(LpResult::Unbounded),
        Phase::Infeasible => Ok(LpResult::Infeasible),
    }
}

/// Maximizes `c_secondary·x` over the optimal face of `c_primary·x`.
///
/// After the primary optimum is reached, every nonbasic column with a
/// nonzero primary reduced cost is frozen at zero, which restricts the
/// secondary pivots to the optimal face exactly. The reported `value` is the
/// primary optimum.
pub fn lexicographic_solve(
    a: &[Vec<f64>],
    b: &[f64],
    c_primary: &[f64],
    c_secondary: &[f64],
) -> Result<LpResult> {
    lexicographic_solve_with(a, b, c_primary, c_secondary, &LpTolerances::default())
}

pub fn lexicographic_solve_with(
    a: &[Vec<f64>],
    b: &[f64],
    c_primary: &[f64],
    c_secondary: &[f64],
    tol: &LpTolerances,
) -> Result<LpResult> {
    validate(a, b, &[c_primary, c_secondary])?;
    let mut tab = Tableau::new(a, b, &[c_primary, c_secondary]);
    match tab.optimize(0, tol)? {
        Phase::Done => {}
        Phase::Unbounded => return Ok(LpResult::Unbounded),
        Phase::Infeasible => return Ok(LpResult::Infeasible),
    }
    let primary = tab.obj_row(0);
    let face: Vec<bool> = (0..tab.cols)
        .map(|k| tab.allowed[tab.nonbasic[k]] && tab.at(primary, k).abs() <= tol.feas_tol)
        .collect();
    let secondary = tab.obj_row(1);
    if tab.lineality_cost(secondary, tol.feas_tol) {
        return Ok(LpResult::Unbounded);
    }
    match tab.simplex(secondary, &face, tol)? {
        Phase::Done => finish(&tab, a, b, c_primary, tol),
        Phase::Unbounded => Ok(LpResult::Unbounded),
        Phase::Infeasible => {
            Err(Error::NumericalBreakdown("optimal face became empty in the secondary phase".into()))
        }
    }
}

fn validate(a: &[Vec<f64>], b: &[f64], objectives: &[&[f64]]) -> Result<()> {
    let m = a.len();
    if m == 0 {
        return Err(Error::InvalidInput("constraint matrix has no rows".into()));
    }
    let n = a[0].len();
    if n == 0 {
        return Err(Error::InvalidInput("constraint matrix has no columns".into()));
    }
    if b.len() != m {
        return Err(Error::InvalidInput(format!(
            "right-hand side has length {} but matrix has {m} rows",
            b.len()
        )));
    }
    for (i, row) in a.iter().enumerate() {
        if row.len() != n {
            return Err(Error::InvalidInput(format!("row {i} has length {} but expected {n}", row.len())));
        }
        if row.iter().any(|v| !v.is_finite()) || !b[i].is_finite() {
            return Err(Error::InvalidInput(format!("row {i} has a non-finite entry")));
        }
    }
    for c in objectives {
        if c.len() != n {
            return Err(Error::InvalidInput(format!("objective has length {} but expected {n}", c.len())));
        }
        if c.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidInput("objective has a non-finite entry".into()));
        }
    }
    Ok(())
}

fn finish(tab: &Tableau, a: &[Vec<f64>], b: &[f64], c: &[f64], tol: &LpTolerances) -> Result<LpResult> {
    let point = tab.primal_point();
    for (i, (row, &bi)) in a.iter().zip(b).enumerate() {
        let lhs: f64 = row.iter().zip(&point).map(|(x, y)| x * y).sum();
        if lhs - bi > 100.0 * tol.feas_tol * (1.0 + bi.abs()) {
            return Err(Error::NumericalBreakdown(format!(
                "optimal point violates row {i} by {:e}",
                lhs - bi
            )));
        }
    }
    let value = c.iter().zip(&point).map(|(x, y)| x * y).sum();
    Ok(LpResult::Optimal { value, point })
}

enum Phase {
    Done,
    Unbounded,
    Infeasible,
}

/// Dictionary-form simplex tableau.
///
/// Variable ids: `0..n` are the structural (free) variables, `n..n+m` the
/// slacks, `n+m` the phase-1 artificial. Rows `0..m` are constraints; the
/// remaining rows are objectives, the last one being the phase-1 objective.
struct Tableau {
    n: usize,
    m: usize,
    cols: usize,
    objectives: usize,
    t: Vec<f64>,
    rhs: Vec<f64>,
    basic: Vec<usize>,
    nonbasic: Vec<usize>,
    /// Whether a variable may enter the basis.
    allowed: Vec<bool>,
}

impl Tableau {
    fn new(a: &[Vec<f64>], b: &[f64], objectives: &[&[f64]]) -> Self {
        let m = a.len();
        let n = a[0].len();
        let cols = n + 1;
        let total_rows = m + objectives.len() + 1;
        let mut t = vec![0.0; total_rows * cols];
        let mut rhs = vec![0.0; total_rows];
        for (i, row) in a.iter().enumerate() {
            t[i * cols..i * cols + n].copy_from_slice(row);
            rhs[i] = b[i];
        }
        for (k, c) in objectives.iter().enumerate() {
            let r = m + k;
            for (j, cj) in c.iter().enumerate() {
                t[r * cols + j] = -cj;
            }
        }
        let mut nonbasic: Vec<usize> = (0..n).collect();
        nonbasic.push(n + m);
        Self {
            n,
            m,
            cols,
            objectives: objectives.len(),
            t,
            rhs,
            basic: (n..n + m).collect(),
            nonbasic,
            allowed: vec![true; n + m + 1],
        }
    }

    #[inline]
    fn at(&self, row: usize, col: usize) -> f64 {
        self.t[row * self.cols + col]
    }

    fn obj_row(&self, k: usize) -> usize {
        self.m + k
    }

    fn phase1_row(&self) -> usize {
        self.m + self.objectives
    }

    fn is_free_row(&self, row: usize) -> bool {
        self.basic[row] < self.n
    }

    fn pivot(&mut self, r: usize, k: usize) {
        let cols = self.cols;
        let p = self.t[r * cols + k];
        let (before, rest) = self.t.split_at_mut(r * cols);
        let (prow, after) = rest.split_at_mut(cols);
        for (j, v) in prow.iter_mut().enumerate() {
            if j != k {
                *v /= p;
            }
        }
        prow[k] = 1.0 / p;
        self.rhs[r] /= p;
        let rhs_r = self.rhs[r];
        let rows_before = before.chunks_exact_mut(cols).enumerate();
        let rows_after = after.chunks_exact_mut(cols).enumerate().map(|(i, row)| (i + r + 1, row));
        for (i, row) in rows_before.chain(rows_after) {
            let f = row[k];
            if f == 0.0 {
                continue;
            }
            for (j, (v, pv)) in row.iter_mut().zip(prow.iter()).enumerate() {
                if j != k {
                    *v -= f * pv;
                }
            }
            row[k] = -f / p;
            self.rhs[i] -= f * rhs_r;
        }
        std::mem::swap(&mut self.basic[r], &mut self.nonbasic[k]);
    }

    /// Runs elimination, phase 1 and the phase-2 optimization of objective `k`.
    fn optimize(&mut self, k: usize, tol: &LpTolerances) -> Result<Phase> {
        self.eliminate_free(tol);
        if !self.phase1(tol)? {
            return Ok(Phase::Infeasible);
        }
        let obj = self.obj_row(k);
        if self.lineality_cost(obj, tol.feas_tol) {
            return Ok(Phase::Unbounded);
        }
        let all = vec![true; self.cols];
        self.simplex(obj, &all, tol)
    }

    fn eliminate_free(&mut self, tol: &LpTolerances) {
        for j in 0..self.n {
            debug_assert_eq!(self.nonbasic[j], j);
            let mut best: Option<(usize, f64)> = None;
            for r in 0..self.m {
                if self.is_free_row(r) {
                    continue;
                }
                let v = self.at(r, j).abs();
                if v > tol.pivot_tol && best.is_none_or(|(_, bv)| v > bv) {
                    best = Some((r, v));
                }
            }
            match best {
                Some((r, _)) => self.pivot(r, j),
                // Column is a lineality direction of the feasible set.
                None => self.allowed[j] = false,
            }
        }
    }

    /// True when a frozen free column carries a nonzero cost in `obj`, i.e.
    /// the objective is unbounded along a lineality direction.
    fn lineality_cost(&self, obj: usize, feas_tol: f64) -> bool {
        (0..self.cols).any(|k| {
            let var = self.nonbasic[k];
            var < self.n && !self.allowed[var] && self.at(obj, k).abs() > feas_tol
        })
    }

    /// Returns `false` when the constraints are infeasible.
    fn phase1(&mut self, tol: &LpTolerances) -> Result<bool> {
        let art = self.n + self.m;
        let art_col = self.n;
        debug_assert_eq!(self.nonbasic[art_col], art);
        let mut worst: Option<(usize, f64)> = None;
        for r in 0..self.m {
            if self.is_free_row(r) {
                continue;
            }
            if self.rhs[r] < -tol.feas_tol && worst.is_none_or(|(_, w)| self.rhs[r] < w) {
                worst = Some((r, self.rhs[r]));
            }
        }
        let Some((r, _)) = worst else {
            self.allowed[art] = false;
            return Ok(true);
        };
        for row in 0..self.m {
            if !self.is_free_row(row) {
                self.t[row * self.cols + art_col] = -1.0;
            }
        }
        let p1 = self.phase1_row();
        self.t[p1 * self.cols + art_col] = 1.0;
        self.pivot(r, art_col);

        let all = vec![true; self.cols];
        match self.simplex(p1, &all, tol)? {
            Phase::Done => {}
            // max -x0 is bounded above by zero
            _ => return Err(Error::NumericalBreakdown("phase-1 objective unbounded".into())),
        }
        if -self.rhs[p1] > tol.feas_tol {
            return Ok(false);
        }
        if let Some(r) = self.basic.iter().position(|&v| v == art) {
            let mut best: Option<(usize, f64)> = None;
            for k in 0..self.cols {
                if !self.allowed[self.nonbasic[k]] {
                    continue;
                }
                let v = self.at(r, k).abs();
                if v > tol.pivot_tol && best.is_none_or(|(_, bv)| v > bv) {
                    best = Some((k, v));
                }
            }
            if let Some((k, _)) = best {
                self.pivot(r, k);
            }
        }
        self.allowed[art] = false;
        Ok(true)
    }

    /// Primal simplex on objective row `obj`; `eligible[k]` gates column `k`.
    #[allow(clippy::needless_range_loop)]
    fn simplex(&mut self, obj: usize, eligible: &[bool], tol: &LpTolerances) -> Result<Phase> {
        let mut bland = false;
        for _ in 0..tol.max_pivots {
            let mut enter: Option<usize> = None;
            for k in 0..self.cols {
                let var = self.nonbasic[k];
                if !eligible[k] || !self.allowed[var] {
                    continue;
                }
                let d = self.at(obj, k);
                if d >= -tol.feas_tol {
                    continue;
                }
                enter = match enter {
                    None => Some(k),
                    Some(e) if bland => (var < self.nonbasic[e]).then_some(k).or(Some(e)),
                    Some(e) => {
                        let de = self.at(obj, e);
                        if d < de || (d == de && var < self.nonbasic[e]) {
                            Some(k)
                        } else {
                            Some(e)
                        }
                    }
                };
            }
            let Some(k) = enter else {
                return Ok(Phase::Done);
            };

            let mut min_ratio = f64::INFINITY;
            for r in 0..self.m {
                let a = self.at(r, k);
                if self.is_free_row(r) || a <= tol.pivot_tol {
                    continue;
                }
                min_ratio = min_ratio.min(self.rhs[r].max(0.0) / a);
            }
            if !min_ratio.is_finite() {
                return Ok(Phase::Unbounded);
            }
            let cutoff = min_ratio + 1e-12 * (1.0 + min_ratio);
            let mut leave: Option<usize> = None;
            for r in 0..self.m {
                let a = self.at(r, k);
                if self.is_free_row(r) || a <= tol.pivot_tol {
                    continue;
                }
                if self.rhs[r].max(0.0) / a > cutoff {
                    continue;
                }
                leave = match leave {
                    None => Some(r),
                    Some(l) if bland => (self.basic[r] < self.basic[l]).then_some(r).or(Some(l)),
                    Some(l) => (a > self.at(l, k)).then_some(r).or(Some(l)),
                };
            }
            let r = leave.expect("a row attains the minimum ratio");
            if min_ratio <= tol.feas_tol {
                bland = true;
            }
            self.pivot(r, k);
        }
        Err(Error::NumericalBreakdown(format!("pivot budget of {} exhausted", tol.max_pivots)))
    }

    fn primal_point(&self) -> Vec<f64> {
        let mut x = vec![0.0; self.n];
        for (r, &var) in self.basic.iter().enumerate() {
            if var < self.n {
                x[var] = self.rhs[r];
            }
        }
        x
    }
}
