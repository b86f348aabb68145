//! Partial Hermitian matrices: specified real diagonal, complex
//! off-diagonal values on the edges of a pattern graph, unspecified
//! elsewhere.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{HermitianMatrix, Inertia, PositivityMode, Tolerance};

#[derive(Clone, PartialEq, Debug)]
pub struct PartialHermitianMatrix {
    n: usize,
    pattern: Graph,
    diag: Vec<f64>,                             // diag[v-1] for vertex v
    offdiag: BTreeMap<(usize, usize), Complex64>, // key (i, j) with i < j, 1-based
}

/// Per-maximal-clique inertias plus the two aggregates i(A,-) and i(A;0,-).
#[derive(Clone, Debug)]
pub struct CliqueInertiaProfile {
    pub per_clique: Vec<(Vec<usize>, Inertia)>,
    /// max over maximal cliques of the negative count
    pub i_minus: usize,
    /// max over maximal cliques of negative + zero counts
    pub i_zero_minus: usize,
}

/// Result of a partial-positivity check.
#[derive(Clone, Debug)]
pub struct PositivityReport {
    pub ok: bool,
    pub failing_clique: Option<Vec<usize>>,
}

impl PartialHermitianMatrix {
    /// `diag[v-1]` is the diagonal value at vertex `v`; `offdiag` maps each
    /// pattern edge `(i, j)` with `i < j` to the (i, j) entry.
    pub fn new(
        pattern: Graph,
        diag: Vec<f64>,
        offdiag: BTreeMap<(usize, usize), Complex64>,
    ) -> Result<Self> {
        let n = pattern.n();
        if diag.len() != n {
            return Err(Error::InvalidMatrix(format!(
                "diagonal has {} entries, expected {n}",
                diag.len()
            )));
        }
        for &(i, j) in offdiag.keys() {
            if i >= j || !pattern.has_edge(i, j) {
                return Err(Error::InvalidMatrix(format!(
                    "off-diagonal key ({i},{j}) is not a pattern edge i < j"
                )));
            }
        }
        for (i, j) in pattern.edges() {
            if !offdiag.contains_key(&(i, j)) {
                return Err(Error::InvalidMatrix(format!(
                    "pattern edge ({i},{j}) has no specified value"
                )));
            }
        }
        Ok(PartialHermitianMatrix { n, pattern, diag, offdiag })
    }

    /// Masks a fully specified Hermitian matrix to a pattern.
    pub fn mask(m: &HermitianMatrix, pattern: &Graph) -> Result<Self> {
        if m.n() != pattern.n() {
            return Err(Error::InvalidMatrix(format!(
                "matrix dimension {} does not match pattern on {} vertices",
                m.n(),
                pattern.n()
            )));
        }
        let diag = (0..m.n()).map(|i| m.get(i, i).re).collect();
        let offdiag = pattern
            .edges()
            .into_iter()
            .map(|(i, j)| ((i, j), m.get(i - 1, j - 1)))
            .collect();
        PartialHermitianMatrix::new(pattern.clone(), diag, offdiag)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The graph of the partial matrix: edge {i,j} iff entry (i,j) specified.
    pub fn graph_of(&self) -> &Graph {
        &self.pattern
    }

    pub fn diag(&self, v: usize) -> f64 {
        self.diag[v - 1]
    }

    /// Specified value at 1-based (i, j), in either order; `None` when the
    /// entry is unspecified.
    pub fn get(&self, i: usize, j: usize) -> Option<Complex64> {
        if i == j {
            return Some(Complex64::new(self.diag[i - 1], 0.0));
        }
        let key = (i.min(j), i.max(j));
        self.offdiag.get(&key).map(|&v| if i < j { v } else { v.conj() })
    }

    /// Fully specified principal submatrix on a clique of the pattern.
    pub fn submatrix(&self, clique: &[usize]) -> Result<HermitianMatrix> {
        let k = clique.len();
        let mut m = HermitianMatrix::zeros(k);
        for (a, &i) in clique.iter().enumerate() {
            m.set_sym(a, a, Complex64::new(self.diag[i - 1], 0.0));
            for (b, &j) in clique.iter().enumerate().skip(a + 1) {
                let v = self.get(i, j).ok_or_else(|| {
                    Error::InvalidMatrix(format!("({i},{j}) is unspecified; not a clique"))
                })?;
                m.set_sym(a, b, v);
            }
        }
        Ok(m)
    }

    /// Principal submatrix on an arbitrary vertex set, with unspecified
    /// entries filled with zero for the caller to overwrite.
    pub fn submatrix_with_unknowns(&self, vs: &[usize]) -> Result<HermitianMatrix> {
        let k = vs.len();
        let mut m = HermitianMatrix::zeros(k);
        for (a, &i) in vs.iter().enumerate() {
            if i == 0 || i > self.n {
                return Err(Error::InvalidMatrix(format!("vertex {i} out of range")));
            }
            m.set_sym(a, a, Complex64::new(self.diag[i - 1], 0.0));
            for (b, &j) in vs.iter().enumerate().skip(a + 1) {
                if let Some(v) = self.get(i, j) {
                    m.set_sym(a, b, v);
                }
            }
        }
        Ok(m)
    }

    /// Dense matrix whose unspecified entries are filled with `fill`.
    pub fn to_dense_with(&self, fill: Complex64) -> HermitianMatrix {
        let mut m = HermitianMatrix::zeros(self.n);
        for i in 1..=self.n {
            m.set_sym(i - 1, i - 1, Complex64::new(self.diag[i - 1], 0.0));
            for j in i + 1..=self.n {
                m.set_sym(i - 1, j - 1, self.get(i, j).unwrap_or(fill));
            }
        }
        m
    }

    /// True iff A(K) is positive for every maximal clique K; reports the
    /// first failing clique (lexicographic order) otherwise.
    pub fn check_partial_positive(
        &self,
        mode: PositivityMode,
        tol: &Tolerance,
    ) -> Result<PositivityReport> {
        self.check_partial_positive_capped(mode, tol, crate::graph::DEFAULT_CLIQUE_CAP)
    }

    pub fn check_partial_positive_capped(
        &self,
        mode: PositivityMode,
        tol: &Tolerance,
        cap: usize,
    ) -> Result<PositivityReport> {
        for clique in self.pattern.maximal_cliques_capped(cap)? {
            if !self.submatrix(&clique)?.is_positive(mode, tol) {
                return Ok(PositivityReport { ok: false, failing_clique: Some(clique) });
            }
        }
        Ok(PositivityReport { ok: true, failing_clique: None })
    }

    /// Per-clique inertias and the aggregates i(A,-) and i(A;0,-).
    pub fn clique_inertia_profile(&self, tol: &Tolerance) -> Result<CliqueInertiaProfile> {
        self.clique_inertia_profile_capped(tol, crate::graph::DEFAULT_CLIQUE_CAP)
    }

    pub fn clique_inertia_profile_capped(
        &self,
        tol: &Tolerance,
        cap: usize,
    ) -> Result<CliqueInertiaProfile> {
        let mut per_clique = Vec::new();
        let mut i_minus = 0usize;
        let mut i_zero_minus = 0usize;
        for clique in self.pattern.maximal_cliques_capped(cap)? {
            let inertia = self.submatrix(&clique)?.inertia(tol);
            i_minus = i_minus.max(inertia.minus);
            i_zero_minus = i_zero_minus.max(inertia.minus + inertia.zero);
            per_clique.push((clique, inertia));
        }
        Ok(CliqueInertiaProfile { per_clique, i_minus, i_zero_minus })
    }

    // ---------------------------------------------------------------
    // Text format
    // ---------------------------------------------------------------

    /// Parses the text format: line 1 is `n`, then n rows of n tokens.
    /// Tokens are `?` (unspecified) or complex literals `a`, `a+bi`, `a-bi`.
    /// The two triangles must agree conjugate-symmetrically, bit for bit.
    #[allow(clippy::needless_range_loop)] // triangular (i, j > i) access
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines
            .next()
            .ok_or(Error::Parse { line: 1, msg: "empty matrix file".into() })?;
        let n: usize = header
            .parse()
            .map_err(|_| Error::Parse { line: hline, msg: "invalid dimension".into() })?;
        if n == 0 {
            return Err(Error::Parse { line: hline, msg: "dimension must be positive".into() });
        }
        let mut cells: Vec<Vec<Option<Complex64>>> = Vec::with_capacity(n);
        for row in 0..n {
            let (line_no, line) = lines.next().ok_or(Error::Parse {
                line: hline,
                msg: format!("expected {n} rows, found {row}"),
            })?;
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.len() != n {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("row {} has {} tokens, expected {n}", row + 1, tokens.len()),
                });
            }
            let mut parsed = Vec::with_capacity(n);
            for (col, tok) in tokens.iter().enumerate() {
                if *tok == "?" {
                    parsed.push(None);
                } else {
                    let v = parse_complex(tok).ok_or_else(|| Error::Parse {
                        line: line_no,
                        msg: format!("invalid entry '{}' at row {} col {}", tok, row + 1, col + 1),
                    })?;
                    parsed.push(Some(v));
                }
            }
            cells.push(parsed);
        }
        if let Some((line_no, _)) = lines.next() {
            return Err(Error::Parse { line: line_no, msg: "trailing content after matrix".into() });
        }

        let mut diag = Vec::with_capacity(n);
        for (i, row) in cells.iter().enumerate() {
            match row[i] {
                Some(v) if v.im == 0.0 => diag.push(v.re),
                Some(_) => {
                    return Err(Error::Parse {
                        line: hline + 1 + i,
                        msg: format!("diagonal entry ({},{}) must be real", i + 1, i + 1),
                    })
                }
                None => {
                    return Err(Error::Parse {
                        line: hline + 1 + i,
                        msg: format!("diagonal entry ({},{}) must be specified", i + 1, i + 1),
                    })
                }
            }
        }
        let mut pattern = Graph::new(n).map_err(|e| Error::Parse { line: hline, msg: e.to_string() })?;
        let mut offdiag = BTreeMap::new();
        for i in 0..n {
            for j in i + 1..n {
                match (cells[i][j], cells[j][i]) {
                    (Some(u), Some(l)) => {
                        if u != l.conj() {
                            return Err(Error::Parse {
                                line: hline + 1 + j,
                                msg: format!(
                                    "Hermitian mismatch between ({},{}) and ({},{})",
                                    i + 1,
                                    j + 1,
                                    j + 1,
                                    i + 1
                                ),
                            });
                        }
                        pattern.add_edge(i + 1, j + 1).expect("fresh edge");
                        offdiag.insert((i + 1, j + 1), u);
                    }
                    (None, None) => {}
                    _ => {
                        return Err(Error::Parse {
                            line: hline + 1 + j,
                            msg: format!(
                                "entries ({},{}) and ({},{}) must both be specified or both '?'",
                                i + 1,
                                j + 1,
                                j + 1,
                                i + 1
                            ),
                        })
                    }
                }
            }
        }
        PartialHermitianMatrix::new(pattern, diag, offdiag)
            .map_err(|e| Error::Parse { line: hline, msg: e.to_string() })
    }

    pub fn format(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{}", self.n);
        for i in 1..=self.n {
            let row: Vec<String> = (1..=self.n)
                .map(|j| match self.get(i, j) {
                    Some(v) => format_complex(v),
                    None => "?".to_string(),
                })
                .collect();
            let _ = writeln!(s, "{}", row.join(" "));
        }
        s
    }
}

/// Formats a complex value as `a`, `a+bi`, or `a-bi` with round-trippable
/// decimal reals.
pub fn format_complex(v: Complex64) -> String {
    if v.im == 0.0 {
        format!("{}", v.re)
    } else if v.im < 0.0 {
        format!("{}-{}i", v.re, -v.im)
    } else {
        format!("{}+{}i", v.re, v.im)
    }
}

/// Parses `a`, `a+bi`, `a-bi` (also bare `bi` forms); exponents in the real
/// parts are tolerated.
pub fn parse_complex(tok: &str) -> Option<Complex64> {
    if let Some(rest) = tok.strip_suffix('i') {
        // split at the last +/- that is not a leading sign or exponent sign
        let bytes = rest.as_bytes();
        let mut split = None;
        for idx in (1..bytes.len()).rev() {
            let c = bytes[idx] as char;
            if (c == '+' || c == '-')
                && !matches!(bytes[idx - 1] as char, 'e' | 'E')
            {
                split = Some(idx);
                break;
            }
        }
        let (re_str, im_str) = match split {
            Some(idx) => (&rest[..idx], &rest[idx..]),
            None => ("0", rest),
        };
        let re: f64 = re_str.parse().ok()?;
        let im: f64 = match im_str {
            "+" => 1.0,
            "-" => -1.0,
            s => s.parse().ok()?,
        };
        Some(Complex64::new(re, im))
    } else {
        tok.parse::<f64>().ok().map(|re| Complex64::new(re, 0.0))
    }
}
