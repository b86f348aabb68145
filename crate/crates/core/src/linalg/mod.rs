//! Dense Hermitian numerics: inertia via unitary tridiagonalization and
//! Sturm-sequence bisection counts (no eigenvectors), and the
//! single-unknown-entry completion primitive.

mod single_unknown;

pub use single_unknown::{
    Objective, SingleUnknownProblem, SingleUnknownSolution, SolutionMethod,
};

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

/// Zero-eigenvalue threshold: effective threshold is
/// `abs + rel * gershgorin_bound(matrix)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { abs: 1e-10, rel: 1e-12 }
    }
}

impl Tolerance {
    pub fn with_abs(abs: f64) -> Self {
        Tolerance { abs, ..Default::default() }
    }

    pub fn effective(&self, m: &HermitianMatrix) -> f64 {
        self.abs + self.rel * m.gershgorin_bound()
    }
}

/// Eigenvalue sign counts of a Hermitian matrix under an explicit
/// threshold: `plus` counts eigenvalues > tau, `minus` counts < -tau,
/// `zero` the rest.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Inertia {
    pub plus: usize,
    pub minus: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn n(&self) -> usize {
        self.plus + self.minus + self.zero
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PositivityMode {
    Definite,
    Semidefinite,
}

/// Dense Hermitian matrix. Construction symmetrizes, so
/// `entry(j, i) == conj(entry(i, j))` holds exactly and the diagonal is real.
#[derive(Clone, PartialEq, Debug)]
pub struct HermitianMatrix {
    n: usize,
    data: Vec<Complex64>, // row-major, kept exactly Hermitian
}

impl HermitianMatrix {
    pub fn zeros(n: usize) -> Self {
        HermitianMatrix { n, data: vec![Complex64::new(0.0, 0.0); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// Builds from full rows; rejects matrices that are non-Hermitian
    /// beyond round-off, then symmetrizes exactly.
    #[allow(clippy::needless_range_loop)] // triangular (i, j > i) access
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let n = rows.len();
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(Error::InvalidMatrix(format!(
                    "row {} has {} entries, expected {}",
                    i + 1,
                    r.len(),
                    n
                )));
            }
        }
        let scale = rows
            .iter()
            .flatten()
            .map(|z| z.norm())
            .fold(0.0f64, f64::max)
            .max(1.0);
        let sym_tol = 1e-8 * scale;
        for i in 0..n {
            if rows[i][i].im.abs() > sym_tol {
                return Err(Error::NotHermitian { i: i + 1, j: i + 1 });
            }
            for j in i + 1..n {
                if (rows[i][j] - rows[j][i].conj()).norm() > sym_tol {
                    return Err(Error::NotHermitian { i: i + 1, j: j + 1 });
                }
            }
        }
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = Complex64::new(rows[i][i].re, 0.0);
            for j in i + 1..n {
                let v = (rows[i][j] + rows[j][i].conj()) * 0.5;
                m.data[i * n + j] = v;
                m.data[j * n + i] = v.conj();
            }
        }
        Ok(m)
    }

    /// Real symmetric convenience constructor.
    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let complex: Vec<Vec<Complex64>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Complex64::new(x, 0.0)).collect())
            .collect();
        Self::from_rows(&complex)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.n + j]
    }

    /// Sets entry (i, j) and its conjugate mirror. For i == j the value
    /// must be real.
    pub fn set_sym(&mut self, i: usize, j: usize, v: Complex64) {
        if i == j {
            self.data[i * self.n + i] = Complex64::new(v.re, 0.0);
        } else {
            self.data[i * self.n + j] = v;
            self.data[j * self.n + i] = v.conj();
        }
    }

    pub fn principal_submatrix(&self, idx: &[usize]) -> HermitianMatrix {
        let k = idx.len();
        let mut m = Self::zeros(k);
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                m.data[a * k + b] = self.get(i, j);
            }
        }
        m
    }

    pub fn max_abs_entry(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest absolute Gershgorin disc bound: max_i |a_ii| + sum_{j != i} |a_ij|.
    pub fn gershgorin_bound(&self) -> f64 {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    /// Householder reduction to a real symmetric tridiagonal matrix with
    /// the same spectrum; returns (diagonal, |subdiagonal|). Off-diagonal
    /// magnitudes suffice: a unitary diagonal scaling makes them real.
    pub fn tridiagonalize(&self) -> (Vec<f64>, Vec<f64>) {
        let n = self.n;
        let mut a = self.data.clone();
        let mut d = vec![0.0f64; n];
        let mut e = vec![0.0f64; n.saturating_sub(1)];
        let idx = |i: usize, j: usize| i * n + j;
        for k in 0..n.saturating_sub(2) {
            let m = n - k - 1; // trailing block size
            let x: Vec<Complex64> = (0..m).map(|r| a[idx(k + 1 + r, k)]).collect();
            let norm = x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            if norm == 0.0 {
                e[k] = 0.0;
                continue;
            }
            let alpha = x[0];
            let phase = if alpha.norm() > 0.0 {
                alpha / alpha.norm()
            } else {
                Complex64::new(1.0, 0.0)
            };
            let mut v = x;
            v[0] += phase * norm;
            let vnorm2: f64 = v.iter().map(|z| z.norm_sqr()).sum();
            let beta = 2.0 / vnorm2;
            // p = beta * B v over the trailing block
            let mut p = vec![Complex64::new(0.0, 0.0); m];
            for r in 0..m {
                let mut s = Complex64::new(0.0, 0.0);
                for c in 0..m {
                    s += a[idx(k + 1 + r, k + 1 + c)] * v[c];
                }
                p[r] = s * beta;
            }
            let vhp: Complex64 = v.iter().zip(&p).map(|(vi, pi)| vi.conj() * pi).sum();
            let kappa = vhp * (beta / 2.0);
            let w: Vec<Complex64> = p.iter().zip(&v).map(|(pi, vi)| pi - kappa * vi).collect();
            for r in 0..m {
                for c in 0..m {
                    let delta = v[r] * w[c].conj() + w[r] * v[c].conj();
                    a[idx(k + 1 + r, k + 1 + c)] -= delta;
                }
            }
            // column k collapses to a single subdiagonal entry of magnitude `norm`
            a[idx(k + 1, k)] = -phase * norm;
            a[idx(k, k + 1)] = (-phase * norm).conj();
            for r in 1..m {
                a[idx(k + 1 + r, k)] = Complex64::new(0.0, 0.0);
                a[idx(k, k + 1 + r)] = Complex64::new(0.0, 0.0);
            }
            e[k] = norm;
        }
        if n >= 2 {
            e[n - 2] = a[idx(n - 1, n - 2)].norm();
        }
        for i in 0..n {
            d[i] = a[idx(i, i)].re;
        }
        (d, e)
    }

    /// Number of eigenvalues strictly below `t` (Sturm sequence count on
    /// the tridiagonal form).
    pub fn eigenvalue_count_below(&self, t: f64) -> usize {
        let (d, e) = self.tridiagonalize();
        sturm_count_below(&d, &e, t)
    }

    /// Eigenvalue sign counts with effective threshold
    /// `tol.abs + tol.rel * gershgorin_bound()`.
    pub fn inertia(&self, tol: &Tolerance) -> Inertia {
        let tau = tol.effective(self);
        let (d, e) = self.tridiagonalize();
        let minus = sturm_count_below(&d, &e, -tau);
        let below_tau = sturm_count_below(&d, &e, tau);
        Inertia {
            plus: self.n - below_tau,
            minus,
            zero: below_tau - minus,
        }
    }

    pub fn is_positive(&self, mode: PositivityMode, tol: &Tolerance) -> bool {
        let inertia = self.inertia(tol);
        match mode {
            PositivityMode::Definite => inertia.minus == 0 && inertia.zero == 0,
            PositivityMode::Semidefinite => inertia.minus == 0,
        }
    }
}

/// Number of eigenvalues of the symmetric tridiagonal matrix (d, e)
/// strictly below `t`, counted as negative pivots of the LDL^T sequence.
pub fn sturm_count_below(d: &[f64], e: &[f64], t: f64) -> usize {
    let n = d.len();
    if n == 0 {
        return 0;
    }
    const PIVOT_GUARD: f64 = 1e-290;
    let mut count = 0usize;
    let mut q = d[0] - t;
    if q < 0.0 {
        count += 1;
    }
    for i in 1..n {
        let q_safe = if q.abs() < PIVOT_GUARD {
            if q >= 0.0 {
                PIVOT_GUARD
            } else {
                -PIVOT_GUARD
            }
        } else {
            q
        };
        q = (d[i] - t) - e[i - 1] * e[i - 1] / q_safe;
        if q < 0.0 {
            count += 1;
        }
    }
    count
}
