//! Undirected graphs on vertices `1..=n`: chordality recognition with
//! checkable witnesses, maximal clique enumeration, the clique bookkeeping
//! for edge insertion, and packing of disjoint induced 4-cycles.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// Default cap on the number of maximal cliques enumerated before giving up.
pub const DEFAULT_CLIQUE_CAP: usize = 1_000_000;

/// Simple undirected graph on vertices `1..=n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>, // index 0 unused
}

/// Outcome of chordality recognition: either a perfect elimination
/// ordering or an induced chordless cycle of length >= 4.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ChordalityResult {
    Peo(Vec<usize>),
    Hole(Vec<usize>),
}

impl ChordalityResult {
    pub fn is_chordal(&self) -> bool {
        matches!(self, ChordalityResult::Peo(_))
    }
}

/// Family of pairwise vertex-disjoint induced chordless 4-cycles whose
/// cross pairs are all edges, with an exact/heuristic flag.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GadgetPacking {
    pub blocks: Vec<Vec<usize>>,
    pub exact: bool,
}

impl Graph {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("vertex count must be positive".into()));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::with_capacity(n); n + 1],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for &(i, j) in edges {
            g.add_edge(i, j)?;
        }
        Ok(g)
    }

    /// Builds the graph whose edge set is the complement of `non_edges`.
    pub fn complement_of(n: usize, non_edges: &[(usize, usize)]) -> Result<Self> {
        let forbidden = Graph::from_edges(n, non_edges)?;
        let mut g = Graph::new(n)?;
        for i in 1..=n {
            for j in i + 1..=n {
                if !forbidden.has_edge(i, j) {
                    g.add_edge(i, j)?;
                }
            }
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        Graph::complement_of(n, &[])
    }

    pub fn cycle(n: usize) -> Result<Self> {
        let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
        if n >= 3 {
            edges.push((1, n));
        }
        Graph::from_edges(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            return Err(Error::InvalidGraph(format!(
                "vertex {} out of range 1..={}",
                v, self.n
            )));
        }
        Ok(())
    }

    pub fn add_edge(&mut self, i: usize, j: usize) -> Result<()> {
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        if i == j {
            return Err(Error::InvalidGraph(format!("self-loop at vertex {i}")));
        }
        if self.has_edge(i, j) {
            return Err(Error::EdgeExists(i.min(j), i.max(j)));
        }
        self.adj[i].insert(j);
        self.adj[j].insert(i);
        Ok(())
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i != j && i >= 1 && i <= self.n && self.adj[i].contains(j)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// All edges as sorted pairs `(i, j)` with `i < j`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in self.adj[i].iter() {
                if j > i {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// All non-edges as sorted pairs, lexicographic.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                if !self.has_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        (1..=self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    pub fn is_clique(&self, vs: &[usize]) -> bool {
        for (a, &i) in vs.iter().enumerate() {
            for &j in &vs[a + 1..] {
                if !self.has_edge(i, j) {
                    return false;
                }
            }
        }
        true
    }

    /// Adds the edge and returns the new graph, leaving `self` untouched.
    pub fn with_edge(&self, i: usize, j: usize) -> Result<Graph> {
        let mut g = self.clone();
        g.add_edge(i, j)?;
        Ok(g)
    }

    // ---------------------------------------------------------------
    // Chordality
    // ---------------------------------------------------------------

    /// Maximum cardinality search followed by PEO verification. On a
    /// violation the graph is nonchordal (MCS yields a PEO iff chordal)
    /// and a hole is extracted by shortest-path search.
    pub fn is_chordal(&self) -> ChordalityResult {
        let order = self.mcs_order();
        // PEO candidate: reverse of the MCS visit order.
        let peo: Vec<usize> = order.into_iter().rev().collect();
        let mut pos = vec![0usize; self.n + 1];
        for (idx, &v) in peo.iter().enumerate() {
            pos[v] = idx;
        }
        for &v in &peo {
            let later: Vec<usize> = self.adj[v].iter().filter(|&u| pos[u] > pos[v]).collect();
            for (a, &u) in later.iter().enumerate() {
                for &w in &later[a + 1..] {
                    if !self.has_edge(u, w) {
                        let hole = self
                            .find_hole()
                            .expect("PEO violation implies the graph has a hole");
                        return ChordalityResult::Hole(hole);
                    }
                }
            }
        }
        ChordalityResult::Peo(peo)
    }

    /// MCS visit order; ties broken toward the largest index so the
    /// reversed order (the PEO candidate) is lexicographically small.
    fn mcs_order(&self) -> Vec<usize> {
        let mut weight = vec![0usize; self.n + 1];
        let mut numbered = vec![false; self.n + 1];
        let mut order = Vec::with_capacity(self.n);
        for _ in 0..self.n {
            let mut best = 0usize;
            for v in 1..=self.n {
                if !numbered[v] && (best == 0 || weight[v] >= weight[best]) {
                    best = v;
                }
            }
            numbered[best] = true;
            order.push(best);
            for u in self.adj[best].iter() {
                if !numbered[u] {
                    weight[u] += 1;
                }
            }
        }
        order
    }

    /// Finds an induced chordless cycle of length >= 4, if one exists.
    ///
    /// Scans triples (v; u, w) with u, w nonadjacent neighbors of v and
    /// searches a shortest u-w path avoiding N[v] \ {u, w}; shortest-path
    /// minimality makes the resulting cycle induced.
    pub fn find_hole(&self) -> Option<Vec<usize>> {
        for v in 1..=self.n {
            let nbrs = self.adj[v].to_vec();
            for (a, &u) in nbrs.iter().enumerate() {
                for &w in &nbrs[a + 1..] {
                    if self.has_edge(u, w) {
                        continue;
                    }
                    let mut allowed = VertexSet::with_capacity(self.n);
                    for x in 1..=self.n {
                        if x != v && !self.adj[v].contains(x) {
                            allowed.insert(x);
                        }
                    }
                    allowed.insert(u);
                    allowed.insert(w);
                    if let Some(path) = self.bfs_path(u, w, &allowed) {
                        let mut cycle = vec![v];
                        cycle.extend(path);
                        return Some(normalize_cycle(&cycle));
                    }
                }
            }
        }
        None
    }

    /// Shortest path from `s` to `t` inside `allowed`; deterministic BFS.
    fn bfs_path(&self, s: usize, t: usize, allowed: &VertexSet) -> Option<Vec<usize>> {
        let mut parent = vec![usize::MAX; self.n + 1];
        let mut seen = vec![false; self.n + 1];
        let mut queue = VecDeque::new();
        seen[s] = true;
        queue.push_back(s);
        while let Some(x) = queue.pop_front() {
            if x == t {
                let mut path = vec![t];
                let mut cur = t;
                while parent[cur] != usize::MAX {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for y in self.adj[x].iter() {
                if allowed.contains(y) && !seen[y] {
                    seen[y] = true;
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        None
    }

    // ---------------------------------------------------------------
    // Maximal cliques
    // ---------------------------------------------------------------

    pub fn maximal_cliques(&self) -> Result<Vec<Vec<usize>>> {
        self.maximal_cliques_capped(DEFAULT_CLIQUE_CAP)
    }

    /// Bron–Kerbosch with pivoting; refuses to enumerate more than `cap`
    /// maximal cliques. Output is sorted lexicographically.
    pub fn maximal_cliques_capped(&self, cap: usize) -> Result<Vec<Vec<usize>>> {
        let mut p = VertexSet::with_capacity(self.n);
        for v in 1..=self.n {
            p.insert(v);
        }
        let mut out = Vec::new();
        self.bron_kerbosch(VertexSet::new(), p, VertexSet::new(), cap, &mut out)?;
        let mut cliques: Vec<Vec<usize>> = out.into_iter().map(|s| s.to_vec()).collect();
        cliques.sort();
        Ok(cliques)
    }

    fn bron_kerbosch(
        &self,
        r: VertexSet,
        mut p: VertexSet,
        mut x: VertexSet,
        cap: usize,
        out: &mut Vec<VertexSet>,
    ) -> Result<()> {
        if p.is_empty() && x.is_empty() {
            if out.len() >= cap {
                return Err(Error::CliqueCapExceeded { cap });
            }
            out.push(r);
            return Ok(());
        }
        // pivot: vertex of P ∪ X maximizing |P ∩ N(u)|, smallest index on ties
        let mut pivot = 0usize;
        let mut pivot_score = usize::MAX;
        for u in p.iter().chain(x.iter()) {
            let score = p.intersection_len(&self.adj[u]);
            if pivot == 0 || score > pivot_score || (score == pivot_score && u < pivot) {
                pivot = u;
                pivot_score = score;
            }
        }
        let candidates = p.difference(&self.adj[pivot]).to_vec();
        for v in candidates {
            let mut r2 = r.clone();
            r2.insert(v);
            let p2 = p.intersection(&self.adj[v]);
            let x2 = x.intersection(&self.adj[v]);
            self.bron_kerbosch(r2, p2, x2, cap, out)?;
            p.remove(v);
            x.insert(v);
        }
        Ok(())
    }

    /// Maximal cliques of `self + e` that are not cliques of `self`.
    ///
    /// These are exactly the sets `{i, j} ∪ K` for `K` a maximal clique of
    /// the subgraph induced on the common neighborhood of the endpoints.
    pub fn new_maximal_cliques_after_edge(&self, e: (usize, usize)) -> Result<Vec<Vec<usize>>> {
        let (i, j) = e;
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        if i == j {
            return Err(Error::InvalidGraph(format!("self-loop at vertex {i}")));
        }
        if self.has_edge(i, j) {
            return Err(Error::EdgeExists(i.min(j), i.max(j)));
        }
        let common = self.adj[i].intersection(&self.adj[j]);
        let mut out = Vec::new();
        self.bron_kerbosch_within(VertexSet::new(), common, VertexSet::new(), &mut out);
        let mut cliques: Vec<Vec<usize>> = out
            .into_iter()
            .map(|s| {
                let mut c = s.to_vec();
                c.push(i);
                c.push(j);
                c.sort();
                c
            })
            .collect();
        cliques.sort();
        Ok(cliques)
    }

    /// Bron–Kerbosch restricted to an induced subgraph, no cap (the caller
    /// guards overall clique growth).
    fn bron_kerbosch_within(
        &self,
        r: VertexSet,
        mut p: VertexSet,
        mut x: VertexSet,
        out: &mut Vec<VertexSet>,
    ) {
        if p.is_empty() && x.is_empty() {
            out.push(r);
            return;
        }
        let universe: Vec<usize> = p.iter().chain(x.iter()).collect();
        let mut pivot = 0usize;
        let mut pivot_score = usize::MAX;
        for &u in &universe {
            let score = p.intersection_len(&self.adj[u]);
            if pivot == 0 || score > pivot_score || (score == pivot_score && u < pivot) {
                pivot = u;
                pivot_score = score;
            }
        }
        let candidates = p.difference(&self.adj[pivot]).to_vec();
        for v in candidates {
            let mut r2 = r.clone();
            r2.insert(v);
            let p2 = p.intersection(&self.adj[v]);
            let x2 = x.intersection(&self.adj[v]);
            self.bron_kerbosch_within(r2, p2, x2, out);
            p.remove(v);
            x.insert(v);
        }
    }

    // ---------------------------------------------------------------
    // Gadget packing
    // ---------------------------------------------------------------

    /// All induced chordless 4-cycles, as sorted 4-subsets, lexicographic.
    pub fn induced_four_cycles(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let n = self.n;
        for a in 1..=n {
            for b in a + 1..=n {
                for c in b + 1..=n {
                    for d in c + 1..=n {
                        if self.is_induced_c4(&[a, b, c, d]) {
                            out.push(vec![a, b, c, d]);
                        }
                    }
                }
            }
        }
        out
    }

    /// A 4-subset induces a chordless 4-cycle iff it spans exactly four
    /// edges and the two missing pairs are vertex-disjoint.
    pub fn is_induced_c4(&self, vs: &[usize]) -> bool {
        if vs.len() != 4 {
            return false;
        }
        let mut missing = Vec::new();
        for (a, &i) in vs.iter().enumerate() {
            for &j in &vs[a + 1..] {
                if !self.has_edge(i, j) {
                    missing.push((i, j));
                }
            }
        }
        missing.len() == 2
            && missing[0].0 != missing[1].0
            && missing[0].0 != missing[1].1
            && missing[0].1 != missing[1].0
            && missing[0].1 != missing[1].1
    }

    /// Maximum family of vertex-disjoint induced 4-cycles such that every
    /// pair of vertices in two different cycles is an edge. Exact
    /// (backtracking) for n <= 16, greedy largest-first above.
    pub fn disjoint_gadget_packing(&self) -> GadgetPacking {
        let candidates = self.induced_four_cycles();
        let sets: Vec<VertexSet> = candidates
            .iter()
            .map(|c| VertexSet::from_slice(c))
            .collect();
        let compatible = |a: usize, b: usize| -> bool {
            if !sets[a].is_disjoint_from(&sets[b]) {
                return false;
            }
            for &i in &candidates[a] {
                for &j in &candidates[b] {
                    if !self.has_edge(i, j) {
                        return false;
                    }
                }
            }
            true
        };
        if self.n <= 16 {
            let mut best: Vec<usize> = Vec::new();
            let mut chosen: Vec<usize> = Vec::new();
            fn dfs(
                start: usize,
                candidates_len: usize,
                compatible: &dyn Fn(usize, usize) -> bool,
                chosen: &mut Vec<usize>,
                best: &mut Vec<usize>,
            ) {
                if chosen.len() > best.len() {
                    *best = chosen.clone();
                }
                if chosen.len() + (candidates_len - start) <= best.len() {
                    return;
                }
                for idx in start..candidates_len {
                    if chosen.iter().all(|&c| compatible(c, idx)) {
                        chosen.push(idx);
                        dfs(idx + 1, candidates_len, compatible, chosen, best);
                        chosen.pop();
                    }
                }
            }
            dfs(0, candidates.len(), &compatible, &mut chosen, &mut best);
            GadgetPacking {
                blocks: best.into_iter().map(|i| candidates[i].clone()).collect(),
                exact: true,
            }
        } else {
            let mut chosen: Vec<usize> = Vec::new();
            for idx in 0..candidates.len() {
                if chosen.iter().all(|&c| compatible(c, idx)) {
                    chosen.push(idx);
                }
            }
            GadgetPacking {
                blocks: chosen.into_iter().map(|i| candidates[i].clone()).collect(),
                exact: false,
            }
        }
    }

    // ---------------------------------------------------------------
    // Text format
    // ---------------------------------------------------------------

    /// Parses the text format: first line `n m`, then `m` lines `i j`.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (line_no, header) = lines
            .next()
            .ok_or(Error::Parse { line: 1, msg: "empty graph file".into() })?;
        let mut it = header.split_whitespace();
        let parse_usize = |tok: Option<&str>, line: usize, what: &str| -> Result<usize> {
            tok.ok_or_else(|| Error::Parse { line, msg: format!("missing {what}") })?
                .parse::<usize>()
                .map_err(|_| Error::Parse { line, msg: format!("invalid {what}") })
        };
        let n = parse_usize(it.next(), line_no, "vertex count")?;
        let m = parse_usize(it.next(), line_no, "edge count")?;
        if it.next().is_some() {
            return Err(Error::Parse { line: line_no, msg: "trailing tokens in header".into() });
        }
        let mut g = Graph::new(n).map_err(|e| Error::Parse { line: line_no, msg: e.to_string() })?;
        let mut count = 0;
        for (line_no, line) in lines {
            let mut it = line.split_whitespace();
            let i = parse_usize(it.next(), line_no, "edge endpoint")?;
            let j = parse_usize(it.next(), line_no, "edge endpoint")?;
            if it.next().is_some() {
                return Err(Error::Parse { line: line_no, msg: "trailing tokens in edge line".into() });
            }
            g.add_edge(i, j)
                .map_err(|e| Error::Parse { line: line_no, msg: e.to_string() })?;
            count += 1;
        }
        if count != m {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("header declares {m} edges but {count} were given"),
            });
        }
        Ok(g)
    }

    pub fn format(&self) -> String {
        let edges = self.edges();
        let mut s = String::new();
        let _ = writeln!(s, "{} {}", self.n, edges.len());
        for (i, j) in edges {
            let _ = writeln!(s, "{i} {j}");
        }
        s
    }
}

/// Canonical form of a cycle: rotated so the smallest vertex leads, oriented
/// so the second entry is the smaller of the two neighbors.
fn normalize_cycle(cycle: &[usize]) -> Vec<usize> {
    let k = cycle.len();
    let (min_idx, _) = cycle
        .iter()
        .enumerate()
        .min_by_key(|(_, &v)| v)
        .expect("nonempty cycle");
    let fwd: Vec<usize> = (0..k).map(|i| cycle[(min_idx + i) % k]).collect();
    let bwd: Vec<usize> = (0..k).map(|i| cycle[(min_idx + k - i) % k]).collect();
    if fwd[1] <= bwd[1] {
        fwd
    } else {
        bwd
    }
}

/// The graph G_n from the block witness family: 4n vertices, all pairs
/// adjacent except the two diagonals inside each consecutive 4-block
/// (so each block induces a chordless 4-cycle joined to all others).
pub fn family_gn_graph(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidGraph("family index must be positive".into()));
    }
    let mut non_edges = Vec::new();
    for k in 0..n {
        non_edges.push((4 * k + 1, 4 * k + 3));
        non_edges.push((4 * k + 2, 4 * k + 4));
    }
    Graph::complement_of(4 * n, &non_edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g2() -> Graph {
        family_gn_graph(2).unwrap()
    }

    #[test]
    fn k4_is_chordal_with_identity_peo() {
        let g = Graph::complete(4).unwrap();
        match g.is_chordal() {
            ChordalityResult::Peo(p) => assert_eq!(p, vec![1, 2, 3, 4]),
            _ => panic!("K4 must be chordal"),
        }
    }

    #[test]
    fn four_cycle_hole() {
        let g = Graph::cycle(4).unwrap();
        assert_eq!(g.is_chordal(), ChordalityResult::Hole(vec![1, 2, 3, 4]));
    }

    #[test]
    fn g2_hole_on_first_block() {
        match g2().is_chordal() {
            ChordalityResult::Hole(h) => {
                let mut s = h.clone();
                s.sort();
                assert_eq!(s, vec![1, 2, 3, 4]);
            }
            _ => panic!("G2 is not chordal"),
        }
    }

    #[test]
    fn triangle_and_path_cliques() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(k3.maximal_cliques().unwrap(), vec![vec![1, 2, 3]]);
        let p3 = Graph::from_edges(3, &[(1, 2), (2, 3)]).unwrap();
        assert_eq!(p3.maximal_cliques().unwrap(), vec![vec![1, 2], vec![2, 3]]);
    }

    #[test]
    fn g2_plus_13_new_cliques() {
        // The eight maximal cliques through the inserted edge {1,3}.
        let new = g2().new_maximal_cliques_after_edge((1, 3)).unwrap();
        let expected: Vec<Vec<usize>> = vec![
            vec![1, 2, 3, 5, 6],
            vec![1, 2, 3, 5, 8],
            vec![1, 2, 3, 6, 7],
            vec![1, 2, 3, 7, 8],
            vec![1, 3, 4, 5, 6],
            vec![1, 3, 4, 5, 8],
            vec![1, 3, 4, 6, 7],
            vec![1, 3, 4, 7, 8],
        ];
        assert_eq!(new, expected);
        // and they all appear among the maximal cliques of G2 + 13
        let g2p = g2().with_edge(1, 3).unwrap();
        let all = g2p.maximal_cliques().unwrap();
        for c in &expected {
            assert!(all.contains(c));
        }
    }

    #[test]
    fn four_cycle_plus_13_new_cliques() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(
            c4.new_maximal_cliques_after_edge((1, 3)).unwrap(),
            vec![vec![1, 2, 3], vec![1, 3, 4]]
        );
    }

    #[test]
    fn k4_minus_edge_restored() {
        let g = Graph::from_edges(4, &[(1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(
            g.new_maximal_cliques_after_edge((1, 2)).unwrap(),
            vec![vec![1, 2, 3, 4]]
        );
    }

    #[test]
    fn inserting_existing_edge_is_an_error() {
        let g = Graph::cycle(4).unwrap();
        assert!(matches!(
            g.new_maximal_cliques_after_edge((1, 2)),
            Err(Error::EdgeExists(1, 2))
        ));
    }

    #[test]
    fn packing_g2_and_gn() {
        let p = g2().disjoint_gadget_packing();
        assert!(p.exact);
        assert_eq!(p.blocks, vec![vec![1, 2, 3, 4], vec![5, 6, 7, 8]]);
        let g3 = family_gn_graph(3).unwrap();
        let p3 = g3.disjoint_gadget_packing();
        assert_eq!(
            p3.blocks,
            vec![vec![1, 2, 3, 4], vec![5, 6, 7, 8], vec![9, 10, 11, 12]]
        );
    }

    #[test]
    fn packing_chordal_is_empty() {
        // chordal graphs have no induced chordless 4-cycle
        let g = Graph::from_edges(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 3), (2, 4)]).unwrap();
        assert!(g.disjoint_gadget_packing().blocks.is_empty());
        let k4 = Graph::complete(4).unwrap();
        assert!(k4.disjoint_gadget_packing().blocks.is_empty());
    }

    #[test]
    fn format_round_trip() {
        let g = g2();
        let parsed = Graph::parse(&g.format()).unwrap();
        assert_eq!(g, parsed);
    }

    #[test]
    fn parse_rejects_bad_lines() {
        assert!(matches!(Graph::parse("3 1\n1 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(
            Graph::parse("3 2\n1 2\n1 2\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(Graph::parse("3 2\n1 2\n").is_err());
    }

    #[test]
    fn clique_cap_enforced() {
        // Complement of perfect matching on 12 vertices has 2^6 = 64 maximal cliques.
        let non: Vec<(usize, usize)> = (0..6).map(|k| (2 * k + 1, 2 * k + 2)).collect();
        let g = Graph::complement_of(12, &non).unwrap();
        assert_eq!(g.maximal_cliques().unwrap().len(), 64);
        assert!(matches!(
            g.maximal_cliques_capped(10),
            Err(Error::CliqueCapExceeded { cap: 10 })
        ));
    }
}
