//! Simple undirected graphs on `[n]` and their classical connectivity numbers.
//!
//! Two independent solvers are provided for `κ` and `λ`: exhaustive subset
//! removal (authoritative for `n <= 6`) and unit-capacity max-flow via
//! Menger's theorem. Vertices are 0-indexed internally and 1-indexed in text.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// A simple graph `G = ([n], E)` with at least one edge.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<bool>>,
}

impl Graph {
    /// Edges are 0-indexed pairs; order and orientation do not matter.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n < 2 {
            return Err(Error::InvalidArgument("a graph needs at least 2 vertices".into()));
        }
        if edges.is_empty() {
            return Err(Error::InvalidArgument("edge set is empty".into()));
        }
        let mut adj = vec![vec![false; n]; n];
        let mut set = BTreeSet::new();
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidArgument(format!(
                    "vertex out of range in edge ({}, {})",
                    a + 1,
                    b + 1
                )));
            }
            if a == b {
                return Err(Error::InvalidArgument(format!("self-loop at vertex {}", a + 1)));
            }
            let e = (a.min(b), a.max(b));
            if !set.insert(e) {
                return Err(Error::InvalidArgument(format!(
                    "duplicate edge {} {}",
                    e.0 + 1,
                    e.1 + 1
                )));
            }
            adj[a][b] = true;
            adj[b][a] = true;
        }
        Ok(Graph {
            n,
            edges: set.into_iter().collect(),
            adj,
        })
    }

    /// The graph on `n` vertices whose edge set is the bitmask `mask` over
    /// pairs `(i, j)`, `i < j`, in lexicographic order.
    pub fn from_mask(n: usize, mask: u64) -> Result<Graph> {
        let pairs = all_pairs(n);
        if pairs.len() < 64 && mask >> pairs.len() != 0 {
            return Err(Error::InvalidArgument(
                "edge mask has bits beyond the pair count".into(),
            ));
        }
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::new(n, &edges)
    }

    pub fn complete(n: usize) -> Graph {
        Graph::new(n, &all_pairs(n)).expect("n >= 2")
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::new(n, &edges).expect("n >= 2")
    }

    pub fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((0, n - 1));
        Graph::new(n, &edges).expect("n >= 3")
    }

    /// `K_{1,leaves}` with the center at vertex 0.
    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::new(leaves + 1, &edges).expect("leaves >= 1")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Sorted 0-indexed edges `(i, j)` with `i < j`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a][b]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].iter().filter(|&&x| x).count()
    }

    pub fn is_complete(&self) -> bool {
        self.m() == self.n * (self.n - 1) / 2
    }

    /// Bitmask of this graph's edge set in the order used by [`Graph::from_mask`].
    pub fn mask(&self) -> u64 {
        let pairs = all_pairs(self.n);
        pairs
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| self.adj[a][b])
            .fold(0u64, |acc, (i, _)| acc | 1 << i)
    }

    /// Connectivity of the subgraph induced on `alive`, ignoring the edges in
    /// `removed` (indices into [`Graph::edges`]).
    fn connected_on(&self, alive: &[bool], removed: &[bool]) -> bool {
        let Some(start) = (0..self.n).find(|&v| alive[v]) else {
            return true;
        };
        let mut seen = vec![false; self.n];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for (idx, &(a, b)) in self.edges.iter().enumerate() {
                if removed.get(idx).copied().unwrap_or(false) {
                    continue;
                }
                let w = if a == v {
                    b
                } else if b == v {
                    a
                } else {
                    continue;
                };
                if alive[w] && !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        (0..self.n).all(|v| !alive[v] || seen[v])
    }

    pub fn is_connected(&self) -> bool {
        self.connected_on(&vec![true; self.n], &[])
    }

    /// Whether deleting `vertices` leaves a disconnected graph on at least two vertices.
    pub fn separates(&self, vertices: &[usize]) -> bool {
        let mut alive = vec![true; self.n];
        for &v in vertices {
            alive[v] = false;
        }
        alive.iter().filter(|&&a| a).count() >= 2 && !self.connected_on(&alive, &[])
    }

    /// Whether deleting the given edges (as vertex pairs) disconnects the graph.
    pub fn edge_cut_disconnects(&self, cut: &[(usize, usize)]) -> bool {
        let removed: Vec<bool> = self
            .edges
            .iter()
            .map(|e| cut.iter().any(|&(a, b)| (a.min(b), a.max(b)) == *e))
            .collect();
        !self.connected_on(&vec![true; self.n], &removed)
    }

    /// Text edge-list form, 1-indexed.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.m());
        for &(a, b) in &self.edges {
            s.push_str(&format!("{} {}\n", a + 1, b + 1));
        }
        s
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e: Vec<String> = self.edges.iter().map(|(a, b)| format!("{}-{}", a + 1, b + 1)).collect();
        write!(f, "Graph(n={}, [{}])", self.n, e.join(" "))
    }
}

/// All pairs `(i, j)`, `i < j < n`, lexicographically.
pub fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

/// Parse the edge-list format: a header `n m`, then `m` lines `i j` with
/// `1 <= i < j <= n`. Lines starting with `#` and blank lines are skipped.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let parse_pair = |lineno: usize, line: &str| -> Result<(usize, usize)> {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("expected two integers, got {:?}", line),
            });
        }
        let a = toks[0].parse::<usize>().map_err(|e| Error::Parse {
            line: lineno,
            msg: format!("{:?}: {e}", toks[0]),
        })?;
        let b = toks[1].parse::<usize>().map_err(|e| Error::Parse {
            line: lineno,
            msg: format!("{:?}: {e}", toks[1]),
        })?;
        Ok((a, b))
    };

    let (hl, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing header line `n m`".into(),
    })?;
    let (n, m) = parse_pair(hl, header)?;
    if n < 2 {
        return Err(Error::Parse {
            line: hl,
            msg: "need at least 2 vertices".into(),
        });
    }
    if m == 0 {
        return Err(Error::Parse {
            line: hl,
            msg: "edge set is empty".into(),
        });
    }
    let mut edges = Vec::with_capacity(m);
    let mut seen = BTreeSet::new();
    for (lineno, line) in lines {
        let (a, b) = parse_pair(lineno, line)?;
        if a < 1 || b < 1 || a > n || b > n {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("vertex out of range 1..={n}"),
            });
        }
        if a >= b {
            return Err(Error::Parse {
                line: lineno,
                msg: "expected i < j".into(),
            });
        }
        if !seen.insert((a, b)) {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("duplicate edge {a} {b}"),
            });
        }
        edges.push((a - 1, b - 1));
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: hl,
            msg: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    Graph::new(n, &edges)
}

/// Vertex connectivity with a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexConnectivity {
    pub kappa: usize,
    /// A minimum separator (0-indexed), or `None` for complete graphs where
    /// the value `n - 1` is a convention and no separator exists.
    pub separator: Option<Vec<usize>>,
}

impl VertexConnectivity {
    pub fn is_complete_marker(&self) -> bool {
        self.separator.is_none()
    }
}

/// Edge connectivity with a minimum cut (0-indexed vertex pairs).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeConnectivity {
    pub lambda: usize,
    pub cut: Vec<(usize, usize)>,
}

pub fn min_degree(g: &Graph) -> usize {
    (0..g.n).map(|v| g.degree(v)).min().unwrap_or(0)
}

fn subsets_of_size(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            if rec(i + 1, n, k, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    rec(0, n, k, &mut Vec::new(), &mut f)
}

/// `κ(G)` by trying every vertex subset in size order.
pub fn vertex_connectivity_brute(g: &Graph) -> VertexConnectivity {
    for k in 0..g.n.saturating_sub(1) {
        let mut found = None;
        subsets_of_size(g.n, k, |s| {
            if g.separates(s) {
                found = Some(s.to_vec());
                true
            } else {
                false
            }
        });
        if let Some(sep) = found {
            return VertexConnectivity {
                kappa: k,
                separator: Some(sep),
            };
        }
    }
    VertexConnectivity {
        kappa: g.n - 1,
        separator: None,
    }
}

/// `λ(G)` by trying every edge subset in size order.
pub fn edge_connectivity_brute(g: &Graph) -> EdgeConnectivity {
    for k in 0..=g.m() {
        let mut found = None;
        subsets_of_size(g.m(), k, |s| {
            let cut: Vec<_> = s.iter().map(|&i| g.edges[i]).collect();
            if g.edge_cut_disconnects(&cut) {
                found = Some(cut);
                true
            } else {
                false
            }
        });
        if let Some(cut) = found {
            return EdgeConnectivity { lambda: k, cut };
        }
    }
    unreachable!("removing every edge disconnects a graph on >= 2 vertices")
}

/// Unit-capacity residual network with BFS augmenting paths.
struct FlowNet {
    cap: Vec<Vec<i32>>,
}

impl FlowNet {
    fn new(size: usize) -> Self {
        FlowNet {
            cap: vec![vec![0; size]; size],
        }
    }

    fn add(&mut self, a: usize, b: usize, c: i32) {
        self.cap[a][b] += c;
    }

    fn bfs(&self, s: usize) -> Vec<Option<usize>> {
        let size = self.cap.len();
        let mut prev = vec![None; size];
        prev[s] = Some(s);
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for w in 0..size {
                if self.cap[v][w] > 0 && prev[w].is_none() {
                    prev[w] = Some(v);
                    queue.push_back(w);
                }
            }
        }
        prev
    }

    /// Max flow, stopping early once it reaches `limit`.
    fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let mut flow = 0;
        while flow < limit {
            let prev = self.bfs(s);
            if prev[t].is_none() {
                break;
            }
            let mut v = t;
            while v != s {
                let u = prev[v].unwrap();
                self.cap[u][v] -= 1;
                self.cap[v][u] += 1;
                v = u;
            }
            flow += 1;
        }
        flow
    }

    /// Vertices reachable from `s` in the residual network.
    fn reachable(&self, s: usize) -> Vec<bool> {
        self.bfs(s).iter().map(|p| p.is_some()).collect()
    }
}

/// `κ(G)` via Menger: minimum over non-adjacent pairs of internally
/// vertex-disjoint path counts, computed as max flow on the split graph.
pub fn vertex_connectivity_flow(g: &Graph) -> VertexConnectivity {
    let n = g.n;
    if !g.is_connected() {
        return VertexConnectivity {
            kappa: 0,
            separator: Some(Vec::new()),
        };
    }
    let mut best: Option<(usize, Vec<usize>)> = None;
    // Vertex v becomes v_in = 2v, v_out = 2v + 1.
    for s in 0..n {
        for t in s + 1..n {
            if g.has_edge(s, t) {
                continue;
            }
            let limit = best.as_ref().map_or(n, |b| b.0);
            let mut net = FlowNet::new(2 * n);
            for v in 0..n {
                let c = if v == s || v == t { n as i32 } else { 1 };
                net.add(2 * v, 2 * v + 1, c);
            }
            for &(a, b) in &g.edges {
                net.add(2 * a + 1, 2 * b, n as i32);
                net.add(2 * b + 1, 2 * a, n as i32);
            }
            let flow = net.max_flow(2 * s + 1, 2 * t, limit);
            if flow < limit {
                let reach = net.reachable(2 * s + 1);
                let sep: Vec<usize> = (0..n).filter(|&v| reach[2 * v] && !reach[2 * v + 1]).collect();
                debug_assert_eq!(sep.len(), flow);
                best = Some((flow, sep));
            }
        }
    }
    match best {
        Some((kappa, sep)) => VertexConnectivity {
            kappa,
            separator: Some(sep),
        },
        None => VertexConnectivity {
            kappa: n - 1,
            separator: None,
        },
    }
}

/// `λ(G)` as the minimum over `t` of the max flow from vertex 0 to `t`.
pub fn edge_connectivity_flow(g: &Graph) -> EdgeConnectivity {
    let n = g.n;
    let mut best: Option<EdgeConnectivity> = None;
    for t in 1..n {
        let limit = best.as_ref().map_or(g.m() + 1, |b| b.lambda);
        let mut net = FlowNet::new(n);
        for &(a, b) in &g.edges {
            net.add(a, b, 1);
            net.add(b, a, 1);
        }
        let flow = net.max_flow(0, t, limit);
        if flow < limit {
            let reach = net.reachable(0);
            let cut: Vec<_> = g.edges.iter().copied().filter(|&(a, b)| reach[a] != reach[b]).collect();
            debug_assert_eq!(cut.len(), flow);
            best = Some(EdgeConnectivity { lambda: flow, cut });
        }
    }
    best.expect("n >= 2 gives at least one sink")
}

/// `κ(G)`, with `κ(K_n) = n - 1`. Uses the flow solver.
pub fn vertex_connectivity(g: &Graph) -> VertexConnectivity {
    vertex_connectivity_flow(g)
}

/// `λ(G)`. Uses the flow solver.
pub fn edge_connectivity(g: &Graph) -> EdgeConnectivity {
    edge_connectivity_flow(g)
}

/// Every labeled graph on `n` vertices with at least one edge, by edge mask.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = n * (n - 1) / 2;
    assert!(pairs < 64, "too many vertex pairs for a u64 mask");
    (1u64..(1u64 << pairs)).map(move |mask| Graph::from_mask(n, mask).expect("nonempty mask"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_k2() -> Graph {
        Graph::new(4, &[(0, 1), (2, 3)]).unwrap()
    }

    #[test]
    fn parse_k2_and_p4() {
        let k2 = parse_graph("2 1\n1 2").unwrap();
        assert_eq!(k2, Graph::complete(2));
        let p4 = parse_graph("# path\n4 3\n1 2\n2 3\n\n3 4\n").unwrap();
        assert_eq!(p4, Graph::path(4));
    }

    #[test]
    fn parse_errors() {
        let e = parse_graph("3 1\n1 4").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }), "{e}");
        assert!(parse_graph("3 2\n1 2\n1 2").is_err());
        assert!(parse_graph("3 0").is_err());
        assert!(parse_graph("3 1\n1 x").is_err());
        assert!(parse_graph("3 2\n1 2").is_err());
        assert!(parse_graph("").is_err());
        assert!(parse_graph("3 1\n2 1").is_err());
    }

    #[test]
    fn vertex_connectivity_examples() {
        assert_eq!(vertex_connectivity(&Graph::path(4)).kappa, 1);
        assert_eq!(vertex_connectivity(&Graph::cycle(4)).kappa, 2);
        let k4 = vertex_connectivity(&Graph::complete(4));
        assert_eq!(k4.kappa, 3);
        assert!(k4.is_complete_marker());
        assert_eq!(vertex_connectivity(&two_k2()).kappa, 0);
    }

    #[test]
    fn edge_connectivity_examples() {
        assert_eq!(edge_connectivity(&Graph::complete(2)).lambda, 1);
        assert_eq!(edge_connectivity(&Graph::cycle(4)).lambda, 2);
        assert_eq!(edge_connectivity(&two_k2()).lambda, 0);
    }

    #[test]
    fn brute_force_c4() {
        assert_eq!(vertex_connectivity_brute(&Graph::cycle(4)).kappa, 2);
        assert_eq!(edge_connectivity_brute(&Graph::cycle(4)).lambda, 2);
    }

    #[test]
    fn min_degree_examples() {
        assert_eq!(min_degree(&Graph::complete(4)), 3);
        assert_eq!(min_degree(&Graph::star(3)), 1);
        assert_eq!(min_degree(&Graph::new(3, &[(0, 1)]).unwrap()), 0);
    }

    #[test]
    fn mask_round_trip() {
        for g in all_labeled_graphs(4) {
            assert_eq!(Graph::from_mask(4, g.mask()).unwrap(), g);
        }
        assert_eq!(all_labeled_graphs(4).count(), 63);
    }

    #[test]
    fn flow_matches_brute_force_up_to_six_vertices() {
        // n = 6 has 32767 graphs; sample every 7th mask there.
        for n in 2..=6usize {
            let step = if n == 6 { 7 } else { 1 };
            for g in all_labeled_graphs(n).step_by(step) {
                let vb = vertex_connectivity_brute(&g);
                let vf = vertex_connectivity_flow(&g);
                assert_eq!(vb.kappa, vf.kappa, "{g:?}");
                let eb = edge_connectivity_brute(&g);
                let ef = edge_connectivity_flow(&g);
                assert_eq!(eb.lambda, ef.lambda, "{g:?}");

                if let Some(sep) = &vf.separator {
                    assert!(g.separates(sep) || (vf.kappa == 0 && !g.is_connected()), "{g:?}");
                }
                assert!(g.edge_cut_disconnects(&ef.cut), "{g:?}");
                assert!(vf.kappa <= ef.lambda && ef.lambda <= min_degree(&g), "{g:?}");
            }
        }
    }
}
