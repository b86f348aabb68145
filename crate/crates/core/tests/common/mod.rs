//! Shared test utilities: an independent eigenvalue oracle (real Jacobi
//! sweeps on the 2n x 2n symmetric embedding of a complex Hermitian
//! matrix) and seeded random generators. Nothing here reuses the library's
//! tridiagonalization or Sturm counting, so oracle comparisons are
//! meaningful.

#![allow(dead_code)]
#![allow(clippy::needless_range_loop)] // symmetric/triangular index access

use std::collections::BTreeMap;

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cnum::graph::Graph;
use cnum::linalg::{HermitianMatrix, Inertia};
use cnum::partial::PartialHermitianMatrix;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Eigenvalues of a complex Hermitian matrix, ascending, via cyclic Jacobi
/// rotations on the real symmetric embedding [[X, -Y], [Y, X]] of
/// A = X + iY; each eigenvalue of A appears twice in the embedding.
pub fn eigenvalues_oracle(m: &HermitianMatrix) -> Vec<f64> {
    let n = m.n();
    if n == 0 {
        return Vec::new();
    }
    let d = 2 * n;
    let mut a = vec![vec![0.0f64; d]; d];
    for i in 0..n {
        for j in 0..n {
            let v = m.get(i, j);
            a[i][j] = v.re;
            a[i + n][j + n] = v.re;
            a[i][j + n] = -v.im;
            a[i + n][j] = v.im;
        }
    }
    let scale: f64 = a
        .iter()
        .flat_map(|row| row.iter())
        .fold(0.0f64, |acc, &x| acc.max(x.abs()))
        .max(1.0);
    for _sweep in 0..200 {
        let mut off = 0.0f64;
        for p in 0..d {
            for q in p + 1..d {
                off = off.max(a[p][q].abs());
            }
        }
        if off <= 1e-15 * scale {
            break;
        }
        for p in 0..d {
            for q in p + 1..d {
                let apq = a[p][q];
                if apq.abs() <= 1e-18 * scale {
                    continue;
                }
                let tau = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..d {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..d {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut eigs: Vec<f64> = (0..d).map(|i| a[i][i]).collect();
    eigs.sort_by(|x, y| x.partial_cmp(y).unwrap());
    // collapse the doubled spectrum by averaging adjacent pairs
    (0..n).map(|i| 0.5 * (eigs[2 * i] + eigs[2 * i + 1])).collect()
}

/// Inertia from the oracle eigenvalues under an explicit threshold.
pub fn inertia_oracle(m: &HermitianMatrix, threshold: f64) -> Inertia {
    let eigs = eigenvalues_oracle(m);
    let minus = eigs.iter().filter(|&&x| x < -threshold).count();
    let plus = eigs.iter().filter(|&&x| x > threshold).count();
    Inertia { plus, minus, zero: eigs.len() - plus - minus }
}

/// Smallest distance from any oracle eigenvalue to zero.
pub fn min_abs_eigenvalue(m: &HermitianMatrix) -> f64 {
    eigenvalues_oracle(m).iter().fold(f64::INFINITY, |acc, &x| acc.min(x.abs()))
}

pub fn random_complex(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

pub fn random_hermitian(rng: &mut ChaCha8Rng, n: usize) -> HermitianMatrix {
    let mut m = HermitianMatrix::zeros(n);
    for i in 0..n {
        m.set_sym(i, i, Complex64::new(rng.gen_range(-1.0..1.0), 0.0));
        for j in i + 1..n {
            m.set_sym(i, j, random_complex(rng));
        }
    }
    m
}

/// Random positive definite matrix B*B + eps*I.
pub fn random_positive_definite(rng: &mut ChaCha8Rng, n: usize, eps: f64) -> HermitianMatrix {
    let b: Vec<Vec<Complex64>> =
        (0..n).map(|_| (0..n).map(|_| random_complex(rng)).collect()).collect();
    let mut m = HermitianMatrix::zeros(n);
    for i in 0..n {
        for j in i..n {
            let mut v = Complex64::new(0.0, 0.0);
            for k in 0..n {
                v += b[k][i].conj() * b[k][j];
            }
            if i == j {
                v += Complex64::new(eps, 0.0);
            }
            m.set_sym(i, j, v);
        }
    }
    m
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Random chordal graph: random base graph triangulated along a random
/// elimination order (each vertex's not-yet-eliminated neighbors become a
/// clique), which always yields a perfect elimination ordering.
pub fn random_chordal_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut adj = vec![vec![false; n + 1]; n + 1];
    for i in 1..=n {
        for j in i + 1..=n {
            if rng.gen_bool(p) {
                adj[i][j] = true;
                adj[j][i] = true;
            }
        }
    }
    let mut order: Vec<usize> = (1..=n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        order.swap(i, j);
    }
    let mut eliminated = vec![false; n + 1];
    for &v in &order {
        let nbrs: Vec<usize> =
            (1..=n).filter(|&u| !eliminated[u] && u != v && adj[v][u]).collect();
        for (a, &x) in nbrs.iter().enumerate() {
            for &y in &nbrs[a + 1..] {
                adj[x][y] = true;
                adj[y][x] = true;
            }
        }
        eliminated[v] = true;
    }
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if adj[i][j] {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Masks a fully specified Hermitian matrix to a pattern.
pub fn mask(m: &HermitianMatrix, pattern: &Graph) -> PartialHermitianMatrix {
    PartialHermitianMatrix::mask(m, pattern).unwrap()
}

/// Random partial positive semidefinite matrix on a pattern: mask of a
/// random positive definite matrix (every principal submatrix inherits
/// definiteness).
pub fn random_partial_positive(
    rng: &mut ChaCha8Rng,
    pattern: &Graph,
    eps: f64,
) -> PartialHermitianMatrix {
    mask(&random_positive_definite(rng, pattern.n(), eps), pattern)
}

/// Brute-force chordality: no induced subgraph on >= 4 vertices is a
/// chordless cycle. Only sensible for small n.
pub fn chordal_brute_force(g: &Graph) -> bool {
    let n = g.n();
    for bits in 0u32..(1 << n) {
        let subset: Vec<usize> = (1..=n).filter(|&v| bits & (1 << (v - 1)) != 0).collect();
        if subset.len() < 4 {
            continue;
        }
        if induces_cycle(g, &subset) {
            return false;
        }
    }
    true
}

/// Whether the induced subgraph on `subset` is a single chordless cycle:
/// connected with every vertex of induced degree exactly 2.
pub fn induces_cycle(g: &Graph, subset: &[usize]) -> bool {
    let k = subset.len();
    if k < 3 {
        return false;
    }
    let mut degree = BTreeMap::new();
    let mut edge_count = 0;
    for (a, &u) in subset.iter().enumerate() {
        for &v in &subset[a + 1..] {
            if g.has_edge(u, v) {
                edge_count += 1;
                *degree.entry(u).or_insert(0usize) += 1;
                *degree.entry(v).or_insert(0usize) += 1;
            }
        }
    }
    if edge_count != k || subset.iter().any(|v| degree.get(v) != Some(&2)) {
        return false;
    }
    // degrees all 2 and |E| = |V|: connected iff a single cycle
    let mut seen = vec![subset[0]];
    let mut frontier = vec![subset[0]];
    while let Some(u) = frontier.pop() {
        for &v in subset {
            if v != u && g.has_edge(u, v) && !seen.contains(&v) {
                seen.push(v);
                frontier.push(v);
            }
        }
    }
    seen.len() == k
}
