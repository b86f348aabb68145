//! Lower-bound witnesses: the 4x4 gadget on a chordless 4-cycle whose
//! completions all have a negative eigenvalue, the block family built
//! from it, and scan-based verification of the forcing argument.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::graph::Graph;
pub use crate::graph::family_gn_graph;
use crate::linalg::{PositivityMode, Tolerance};
use crate::partial::PartialHermitianMatrix;

/// Verification evidence for one placed gadget.
#[derive(Clone, Debug)]
pub struct GadgetEvidence {
    pub placement: Vec<usize>,
    /// Semidefiniteness on {1,2,3} and on {1,3,4} force the shared unknown
    /// to two different values.
    pub forcing_ok: bool,
    /// Number of grid completions of the two unknowns examined.
    pub grid_points: usize,
    /// Minimum negative-eigenvalue count observed over the grid.
    pub min_minus_over_grid: usize,
}

#[derive(Clone, Debug)]
pub struct WitnessEvidence {
    pub gadgets: Vec<GadgetEvidence>,
    /// All specified entries between two different placements are zero,
    /// so minus counts add across blocks.
    pub cross_zeros_ok: bool,
    pub verified: bool,
}

/// A placement of 4-cycle gadgets plus the evidence that every completion
/// of the witness matrix has at least `claimed_lower_bound` negative
/// eigenvalues.
#[derive(Clone, Debug)]
pub struct WitnessCertificate {
    pub graph: Graph,
    pub matrix: PartialHermitianMatrix,
    pub placements: Vec<Vec<usize>>,
    pub claimed_lower_bound: usize,
    pub evidence: Option<WitnessEvidence>,
}

/// The 4x4 partial matrix [[1,1,?,-1],[1,1,1,?],[?,1,1,1],[-1,?,1,1]]
/// on the chordless 4-cycle (non-edges {1,3} and {2,4}).
pub fn gadget_partial_matrix() -> PartialHermitianMatrix {
    let graph = Graph::from_edges(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]).expect("valid 4-cycle");
    let one = Complex64::new(1.0, 0.0);
    let mut offdiag = BTreeMap::new();
    offdiag.insert((1, 2), one);
    offdiag.insert((2, 3), one);
    offdiag.insert((3, 4), one);
    offdiag.insert((1, 4), -one);
    PartialHermitianMatrix::new(graph, vec![1.0; 4], offdiag).expect("valid gadget")
}

/// The witness pair for the block family: the graph on 4n vertices with
/// non-edges {(4k+1,4k+3),(4k+2,4k+4)} and the partial matrix carrying a
/// gadget on each block with zero cross-block entries.
pub fn family_gn(n: usize) -> Result<(Graph, PartialHermitianMatrix)> {
    let graph = family_gn_graph(n)?;
    let blocks: Vec<Vec<usize>> = (0..n)
        .map(|k| (4 * k + 1..=4 * k + 4).collect())
        .collect();
    let matrix = witness_matrix_for_placements(&graph, &blocks)?;
    Ok((graph, matrix))
}

/// Builds the witness partial matrix for a family of gadget placements:
/// unit diagonal, the gadget values on each placed 4-cycle, zero on every
/// other edge of the graph.
pub fn witness_matrix_for_placements(
    g: &Graph,
    placements: &[Vec<usize>],
) -> Result<PartialHermitianMatrix> {
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let mut offdiag: BTreeMap<(usize, usize), Complex64> =
        g.edges().into_iter().map(|e| (e, zero)).collect();
    for block in placements {
        let [a, b, c, d] = canonical_cycle_order(g, block)?;
        let mut set = |i: usize, j: usize, v: Complex64| {
            let key = (i.min(j), i.max(j));
            let stored = if i < j { v } else { v.conj() };
            offdiag.insert(key, stored);
        };
        set(a, b, one);
        set(b, c, one);
        set(c, d, one);
        set(a, d, -one);
    }
    PartialHermitianMatrix::new(g.clone(), vec![1.0; g.n()], offdiag)
}

/// Orders a 4-subset that induces a chordless 4-cycle as (a, b, c, d) with
/// a the smallest vertex, b its smaller neighbor, d its larger neighbor,
/// and c opposite a.
fn canonical_cycle_order(g: &Graph, block: &[usize]) -> Result<[usize; 4]> {
    if !g.is_induced_c4(block) {
        return Err(Error::InvalidPlacement(format!(
            "{block:?} does not induce a chordless 4-cycle"
        )));
    }
    let mut vs = block.to_vec();
    vs.sort();
    let a = vs[0];
    let mut nbrs: Vec<usize> = vs[1..].iter().copied().filter(|&v| g.has_edge(a, v)).collect();
    nbrs.sort();
    let (b, d) = (nbrs[0], nbrs[1]);
    let c = vs[1..]
        .iter()
        .copied()
        .find(|&v| v != b && v != d)
        .expect("fourth vertex");
    Ok([a, b, c, d])
}

/// Outcome of the forcing scan on one placed gadget.
struct ForcingScan {
    ok: bool,
}

/// Scans the shared unknown of a placed gadget block. The block, in cycle
/// order (a, b, c, d), has unknowns at (a, c) and (b, d); semidefiniteness
/// of the principal submatrix on {a, b, c} pins (a, c) to one value while
/// {a, c, d} pins it to a different one, so no completion is semidefinite.
fn forcing_scan(
    mat: &PartialHermitianMatrix,
    order: [usize; 4],
    tol: &Tolerance,
) -> Result<ForcingScan> {
    let [a, b, c, d] = order;
    let need = |i: usize, j: usize| -> Result<Complex64> {
        mat.get(i, j).ok_or_else(|| {
            Error::InvalidPlacement(format!("entry ({i},{j}) of a gadget block is unspecified"))
        })
    };
    let (da, db, dc, dd) = (mat.diag(a), mat.diag(b), mat.diag(c), mat.diag(d));
    let vab = need(a, b)?;
    let vbc = need(b, c)?;
    let vcd = need(c, d)?;
    let vad = need(a, d)?;

    let scale = [da.abs(), db.abs(), dc.abs(), dd.abs()]
        .into_iter()
        .chain([vab.norm(), vbc.norm(), vcd.norm(), vad.norm()])
        .fold(0.0f64, f64::max)
        .max(f64::MIN_POSITIVE);

    let psd_abc = |x: Complex64| -> bool {
        let m = crate::linalg::HermitianMatrix::from_rows(&[
            vec![Complex64::new(da, 0.0), vab, x],
            vec![vab.conj(), Complex64::new(db, 0.0), vbc],
            vec![x.conj(), vbc.conj(), Complex64::new(dc, 0.0)],
        ])
        .expect("hermitian by construction");
        m.is_positive(PositivityMode::Semidefinite, tol)
    };
    let psd_acd = |x: Complex64| -> bool {
        let m = crate::linalg::HermitianMatrix::from_rows(&[
            vec![Complex64::new(da, 0.0), x, vad],
            vec![x.conj(), Complex64::new(dc, 0.0), vcd],
            vec![vad.conj(), vcd.conj(), Complex64::new(dd, 0.0)],
        ])
        .expect("hermitian by construction");
        m.is_positive(PositivityMode::Semidefinite, tol)
    };

    let grid = forcing_grid(scale);
    let p1: Vec<Complex64> = grid.iter().copied().filter(|&x| psd_abc(x)).collect();
    let p2: Vec<Complex64> = grid.iter().copied().filter(|&x| psd_acd(x)).collect();

    let cluster_tol = 1e-6 * scale;
    let diam = |pts: &[Complex64]| -> f64 {
        let mut d = 0.0f64;
        for (i, &u) in pts.iter().enumerate() {
            for &v in &pts[i + 1..] {
                d = d.max((u - v).norm());
            }
        }
        d
    };
    let dist = p1
        .iter()
        .flat_map(|&u| p2.iter().map(move |&v| (u - v).norm()))
        .fold(f64::INFINITY, f64::min);
    let ok = !p1.is_empty()
        && !p2.is_empty()
        && diam(&p1) <= cluster_tol
        && diam(&p2) <= cluster_tol
        && dist > 10.0 * cluster_tol;
    Ok(ForcingScan { ok })
}

/// Candidate values for a forcing scan: zero, the axis points at the block
/// scale (the construction forces values of that magnitude), and a coarse
/// log-polar grid.
fn forcing_grid(scale: f64) -> Vec<Complex64> {
    let mut grid = vec![
        Complex64::new(0.0, 0.0),
        Complex64::new(scale, 0.0),
        Complex64::new(-scale, 0.0),
        Complex64::new(0.0, scale),
        Complex64::new(0.0, -scale),
    ];
    for mi in 0..16 {
        let mag = scale * 10f64.powf(-2.0 + 4.0 * (mi as f64) / 15.0);
        for pi in 0..8 {
            let theta = 2.0 * std::f64::consts::PI * (pi as f64) / 8.0;
            grid.push(Complex64::from_polar(mag, theta));
        }
    }
    grid
}

/// Exact-style certificate for the canonical gadget: the two overlapping
/// 3x3 principal submatrices force incompatible values on the shared
/// unknown, so every completion has a negative eigenvalue.
pub fn verify_gadget_forcing(tol: &Tolerance) -> bool {
    let gadget = gadget_partial_matrix();
    verify_block_forcing(&gadget, &[1, 2, 3, 4], tol).map(|s| s.ok).unwrap_or(false)
}

fn verify_block_forcing(
    mat: &PartialHermitianMatrix,
    block: &[usize],
    tol: &Tolerance,
) -> Result<ForcingScan> {
    let order = canonical_cycle_order(mat.graph_of(), block)?;
    forcing_scan(mat, order, tol)
}

/// Minimum minus count over a grid of completions of the block's two
/// unknowns; returns (grid point count, minimum observed minus).
fn grid_min_minus(
    mat: &PartialHermitianMatrix,
    order: [usize; 4],
    grid_resolution: usize,
    tol: &Tolerance,
) -> (usize, usize) {
    let [a, b, c, d] = order;
    let base = mat
        .submatrix_with_unknowns(&[a, b, c, d])
        .expect("block vertices in range");
    let scale = base.max_abs_entry().max(f64::MIN_POSITIVE);
    let values = unknown_grid(scale, grid_resolution);
    let mut min_minus = usize::MAX;
    let mut count = 0usize;
    for &x_ac in &values {
        for &x_bd in &values {
            let mut m = base.clone();
            m.set_sym(2, 0, x_ac); // (c, a) position in the (a,b,c,d) ordering
            m.set_sym(3, 1, x_bd); // (d, b)
            let minus = m.inertia(tol).minus;
            min_minus = min_minus.min(minus);
            count += 1;
        }
    }
    (count, if min_minus == usize::MAX { 0 } else { min_minus })
}

/// `resolution` grid values for one unknown: log-spaced magnitudes crossed
/// with four phases, zero included.
fn unknown_grid(scale: f64, resolution: usize) -> Vec<Complex64> {
    let resolution = resolution.max(2);
    let phases = 4usize.min(resolution);
    let mags = resolution / phases;
    let mut values = Vec::with_capacity(resolution);
    values.push(Complex64::new(0.0, 0.0));
    'outer: for mi in 0..mags {
        let mag = scale * 10f64.powf(-2.0 + 4.0 * (mi as f64) / ((mags.max(2) - 1) as f64));
        for pi in 0..phases {
            if values.len() >= resolution {
                break 'outer;
            }
            let theta = std::f64::consts::FRAC_PI_2 * pi as f64;
            values.push(Complex64::from_polar(mag, theta));
        }
    }
    values
}

/// Fills verification evidence for a witness certificate: per-gadget
/// forcing, zero cross-block entries (so minus counts add), and a grid
/// corroboration that every examined completion of each gadget has at
/// least one negative eigenvalue.
pub fn verify_witness_lower_bound(
    mut cert: WitnessCertificate,
    grid_resolution: usize,
    tol: &Tolerance,
) -> Result<WitnessCertificate> {
    // placements must be disjoint induced 4-cycles with all cross pairs specified
    for (i, p) in cert.placements.iter().enumerate() {
        if !cert.graph.is_induced_c4(p) {
            return Err(Error::InvalidPlacement(format!(
                "{p:?} does not induce a chordless 4-cycle"
            )));
        }
        for q in &cert.placements[i + 1..] {
            for &u in p {
                for &v in q {
                    if u == v {
                        return Err(Error::InvalidPlacement(format!(
                            "placements {p:?} and {q:?} share vertex {u}"
                        )));
                    }
                    if cert.matrix.get(u, v).is_none() {
                        return Err(Error::InvalidPlacement(format!(
                            "cross pair ({u},{v}) between placements is unspecified"
                        )));
                    }
                }
            }
        }
    }

    let mut cross_zeros_ok = true;
    for (i, p) in cert.placements.iter().enumerate() {
        for q in &cert.placements[i + 1..] {
            for &u in p {
                for &v in q {
                    if cert.matrix.get(u, v).map(|z| z.norm()) != Some(0.0) {
                        cross_zeros_ok = false;
                    }
                }
            }
        }
    }

    let mut gadgets = Vec::new();
    let mut all_ok = true;
    for p in &cert.placements {
        let order = canonical_cycle_order(&cert.graph, p)?;
        let forcing = forcing_scan(&cert.matrix, order, tol)?;
        let (grid_points, min_minus) = grid_min_minus(&cert.matrix, order, grid_resolution, tol);
        all_ok &= forcing.ok && min_minus >= 1;
        gadgets.push(GadgetEvidence {
            placement: p.clone(),
            forcing_ok: forcing.ok,
            grid_points,
            min_minus_over_grid: min_minus,
        });
    }

    let verified =
        all_ok && cross_zeros_ok && cert.claimed_lower_bound == cert.placements.len();
    cert.evidence = Some(WitnessEvidence { gadgets, cross_zeros_ok, verified });
    Ok(cert)
}

/// Packs disjoint gadget sites, places the gadget on each, verifies, and
/// returns the certified lower bound on the completion number.
pub fn completion_number_lower_bound(
    g: &Graph,
    tol: &Tolerance,
) -> Result<(usize, WitnessCertificate)> {
    let packing = g.disjoint_gadget_packing();
    let matrix = witness_matrix_for_placements(g, &packing.blocks)?;
    let cert = WitnessCertificate {
        graph: g.clone(),
        matrix,
        claimed_lower_bound: packing.blocks.len(),
        placements: packing.blocks,
        evidence: None,
    };
    let cert = verify_witness_lower_bound(cert, 64, tol)?;
    let verified = cert.evidence.as_ref().map(|e| e.verified).unwrap_or(false);
    let k = if verified { cert.claimed_lower_bound } else { 0 };
    Ok((k, cert))
}
