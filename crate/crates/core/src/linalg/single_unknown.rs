//! Single-unknown-entry Hermitian completion.
//!
//! All entries of a Hermitian matrix are fixed except one symmetric
//! off-diagonal pair (p, q). After reordering so the unknown sits in a
//! corner, the matrix reads `[[a, b*, x~], [b, C, c], [x, c*, d]]` and the
//! Schur-coupling-annihilating value `x = c* C^+ b` achieves
//! `minus(M(x)) = max(minus(M1), minus(M2))` whenever the ranges line up,
//! where M1 and M2 are the two maximal fully specified principal
//! submatrices. The value is always verified against that target; on
//! failure a documented grid scan picks the best value found.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{HermitianMatrix, Inertia, Tolerance};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Objective {
    PositiveDefinite,
    PositiveSemidefinite,
    MinimizeNegatives,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolutionMethod {
    ClosedForm,
    GridScan,
}

/// A Hermitian matrix with one designated off-diagonal pair (p, q)
/// treated as free; the stored value at that pair is ignored.
#[derive(Clone, Debug)]
pub struct SingleUnknownProblem {
    pub base: HermitianMatrix,
    pub p: usize,
    pub q: usize,
    pub objective: Objective,
}

#[derive(Clone, Debug)]
pub struct SingleUnknownSolution {
    pub value: Complex64,
    pub inertia: Inertia,
    /// max(minus(M1), minus(M2)), the achievability target.
    pub target_minus: usize,
    /// Whether the returned value meets the objective (for
    /// MinimizeNegatives: achieved minus equals the target).
    pub certified: bool,
    pub method: SolutionMethod,
}

impl SingleUnknownProblem {
    pub fn new(base: HermitianMatrix, p: usize, q: usize, objective: Objective) -> Result<Self> {
        let n = base.n();
        if p >= n || q >= n || p == q {
            return Err(Error::InvalidMatrix(format!(
                "unknown pair ({p},{q}) invalid for dimension {n}"
            )));
        }
        Ok(SingleUnknownProblem { base, p, q, objective })
    }

    fn meets_objective(&self, inertia: &Inertia, target: usize) -> bool {
        match self.objective {
            Objective::PositiveDefinite => inertia.minus == 0 && inertia.zero == 0,
            Objective::PositiveSemidefinite => inertia.minus == 0,
            Objective::MinimizeNegatives => inertia.minus == target,
        }
    }

    pub fn solve(&self, tol: &Tolerance) -> SingleUnknownSolution {
        let n = self.base.n();
        let (p, q) = (self.p, self.q);
        let others: Vec<usize> = (0..n).filter(|&r| r != p && r != q).collect();

        let m1_idx: Vec<usize> = (0..n).filter(|&r| r != q).collect();
        let m2_idx: Vec<usize> = (0..n).filter(|&r| r != p).collect();
        let minus1 = self.base.principal_submatrix(&m1_idx).inertia(tol).minus;
        let minus2 = self.base.principal_submatrix(&m2_idx).inertia(tol).minus;
        let target = minus1.max(minus2);

        // closed form x = c* C^+ b
        let x0 = if others.is_empty() {
            Complex64::new(0.0, 0.0)
        } else {
            let c_block = self.base.principal_submatrix(&others);
            let b: Vec<Complex64> = others.iter().map(|&r| self.base.get(r, p)).collect();
            let c_vec: Vec<Complex64> = others.iter().map(|&r| self.base.get(r, q)).collect();
            let cutoff = tol.effective(&c_block);
            let pinv_b = pseudo_inverse_apply(&c_block, &b, cutoff);
            c_vec
                .iter()
                .zip(&pinv_b)
                .map(|(ci, yi)| ci.conj() * yi)
                .sum()
        };

        let evaluate = |x: Complex64| -> Inertia {
            let mut m = self.base.clone();
            m.set_sym(q, p, x);
            m.inertia(tol)
        };

        let inertia0 = evaluate(x0);
        if self.meets_objective(&inertia0, target) {
            return SingleUnknownSolution {
                value: x0,
                inertia: inertia0,
                target_minus: target,
                certified: true,
                method: SolutionMethod::ClosedForm,
            };
        }

        // Fallback scan: 0, the closed-form value, and 64 phases x 64
        // magnitudes log-spaced in [1e-3 s, 1e3 s], s the largest fixed entry.
        let mut fixed = self.base.clone();
        fixed.set_sym(q, p, Complex64::new(0.0, 0.0));
        let s = fixed.max_abs_entry().max(f64::MIN_POSITIVE);
        let mut best = (x0, inertia0);
        let consider = |x: Complex64, best: &mut (Complex64, Inertia)| {
            let inertia = evaluate(x);
            if (inertia.minus, inertia.zero) < (best.1.minus, best.1.zero) {
                *best = (x, inertia);
            }
        };
        consider(Complex64::new(0.0, 0.0), &mut best);
        const PHASES: usize = 64;
        const MAGS: usize = 64;
        for mi in 0..MAGS {
            let exp = -3.0 + 6.0 * (mi as f64) / ((MAGS - 1) as f64);
            let mag = s * 10f64.powf(exp);
            for pi in 0..PHASES {
                let theta = 2.0 * std::f64::consts::PI * (pi as f64) / (PHASES as f64);
                consider(Complex64::from_polar(mag, theta), &mut best);
            }
        }
        let certified = self.meets_objective(&best.1, target);
        SingleUnknownSolution {
            value: best.0,
            inertia: best.1,
            target_minus: target,
            certified,
            method: SolutionMethod::GridScan,
        }
    }
}

/// Applies the Moore–Penrose pseudo-inverse of a Hermitian matrix to a
/// vector, dropping eigenvalues of magnitude <= cutoff.
fn pseudo_inverse_apply(c: &HermitianMatrix, b: &[Complex64], cutoff: f64) -> Vec<Complex64> {
    let k = c.n();
    let m = DMatrix::from_fn(k, k, |i, j| c.get(i, j));
    let eig = m.symmetric_eigen();
    let bv = DVector::from_column_slice(b);
    let mut out = DVector::from_element(k, Complex64::new(0.0, 0.0));
    for idx in 0..k {
        let lambda = eig.eigenvalues[idx];
        if lambda.abs() <= cutoff {
            continue;
        }
        let u = eig.eigenvectors.column(idx);
        let coeff: Complex64 = u.iter().zip(bv.iter()).map(|(ui, bi)| ui.conj() * bi).sum();
        let scaled = coeff / lambda;
        for r in 0..k {
            out[r] += u[r] * scaled;
        }
    }
    out.iter().copied().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coupled_corner_definite() {
        // [[1, 0.5, x], [0.5, 1, 0.5], [x, 0.5, 1]] -> x = 0.25, positive definite
        let base = HermitianMatrix::from_real_rows(&[
            vec![1.0, 0.5, 0.0],
            vec![0.5, 1.0, 0.5],
            vec![0.0, 0.5, 1.0],
        ])
        .unwrap();
        let prob =
            SingleUnknownProblem::new(base, 0, 2, Objective::MinimizeNegatives).unwrap();
        let sol = prob.solve(&Tolerance::default());
        assert!((sol.value - Complex64::new(0.25, 0.0)).norm() < 1e-12);
        assert!(sol.certified);
        assert_eq!(sol.method, SolutionMethod::ClosedForm);
        assert_eq!(sol.inertia.minus, 0);
        assert_eq!(sol.inertia.zero, 0);
    }

    #[test]
    fn singular_block_forces_one() {
        // [[1, 1, x], [1, 1, 1], [x~, 1, 1]]: the singular block [[1,1],[1,1]]
        // forces x = 1 for semidefiniteness.
        let base = HermitianMatrix::from_real_rows(&[
            vec![1.0, 1.0, 0.0],
            vec![1.0, 1.0, 1.0],
            vec![0.0, 1.0, 1.0],
        ])
        .unwrap();
        let prob =
            SingleUnknownProblem::new(base, 0, 2, Objective::PositiveSemidefinite).unwrap();
        let sol = prob.solve(&Tolerance::default());
        assert!((sol.value - Complex64::new(1.0, 0.0)).norm() < 1e-10);
        assert!(sol.certified);
        assert_eq!(sol.inertia.minus, 0);
    }

    #[test]
    fn diagonal_fixed_part_gives_zero() {
        let base = HermitianMatrix::from_real_rows(&[
            vec![2.0, 0.0, 0.0],
            vec![0.0, 3.0, 0.0],
            vec![0.0, 0.0, 4.0],
        ])
        .unwrap();
        let prob =
            SingleUnknownProblem::new(base, 0, 2, Objective::MinimizeNegatives).unwrap();
        let sol = prob.solve(&Tolerance::default());
        assert_eq!(sol.value, Complex64::new(0.0, 0.0));
        assert!(sol.certified);
        assert_eq!(sol.inertia.minus, 0);
        assert_eq!(sol.inertia.zero, 0);
    }

    #[test]
    fn two_by_two_unknown() {
        let base =
            HermitianMatrix::from_real_rows(&[vec![1.0, 0.0], vec![0.0, -2.0]]).unwrap();
        let prob =
            SingleUnknownProblem::new(base, 0, 1, Objective::MinimizeNegatives).unwrap();
        let sol = prob.solve(&Tolerance::default());
        assert_eq!(sol.target_minus, 1);
        assert_eq!(sol.inertia.minus, 1);
        assert!(sol.certified);
    }
}
