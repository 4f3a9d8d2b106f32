//! Undirected graphs with indexed edges (multigraphs allowed): girth,
//! deterministic BFS trees, distances with an edge removed, and cycle-space
//! bases. Edges are the qubits of the graph-based code constructions, so
//! edge ids are stable and explicit.

use crate::bits::{BitMatrix, BitVec};
use crate::error::{Error, Result};
use std::collections::VecDeque;

#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>, // (neighbor, edge id)
}

#[derive(Debug, Clone)]
pub struct BfsTree {
    pub root: usize,
    /// Vertex sets per distance from the root, each sorted ascending.
    pub levels: Vec<Vec<usize>>,
    pub depth: usize,
    /// Max level size.
    pub width: usize,
    pub tree_edges: Vec<usize>,
    /// Non-tree edges with both endpoints reached.
    pub chord_edges: Vec<usize>,
    pub unreached: Vec<usize>,
    pub level_of: Vec<Option<usize>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph { n, edges: Vec::new(), adj: vec![Vec::new(); n] }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> usize {
        assert!(u < self.n && v < self.n, "vertex out of range");
        assert_ne!(u, v, "self-loops are not supported");
        let id = self.edges.len();
        self.edges.push((u.min(v), u.max(v)));
        self.adj[u].push((v, id));
        self.adj[v].push((u, id));
        id
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Cycle C_n; n = 2 yields the two-vertex multigraph with parallel edges.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 2);
        let mut g = Graph::new(n);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for i in 0..n.saturating_sub(1) {
            g.add_edge(i, i + 1);
        }
        g
    }

    /// Two hub vertices joined by three internally disjoint paths with
    /// `a`, `b`, `c` edges each (a path of 1 edge is a direct hub-hub edge).
    pub fn theta(a: usize, b: usize, c: usize) -> Self {
        assert!(a >= 1 && b >= 1 && c >= 1);
        let internal = (a - 1) + (b - 1) + (c - 1);
        let mut g = Graph::new(2 + internal);
        let mut next = 2;
        for len in [a, b, c] {
            let mut prev = 0;
            for _ in 0..len - 1 {
                g.add_edge(prev, next);
                prev = next;
                next += 1;
            }
            g.add_edge(prev, 1);
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn star(leaves: usize) -> Self {
        let mut g = Graph::new(leaves + 1);
        for i in 1..=leaves {
            g.add_edge(0, i);
        }
        g
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// First edge id between u and v (lowest id among parallels).
    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.adj[u]
            .iter()
            .filter(|&&(w, _)| w == v)
            .map(|&(_, id)| id)
            .min()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let tree = self.bfs_tree_skipping(0, None);
        tree.unreached.is_empty()
    }

    /// Deterministic BFS from `root`, optionally ignoring one edge id.
    /// Neighbors are expanded in ascending vertex order; level sets sorted.
    pub fn bfs_tree_skipping(&self, root: usize, skip_edge: Option<usize>) -> BfsTree {
        assert!(root < self.n);
        let mut level_of: Vec<Option<usize>> = vec![None; self.n];
        let mut parent_edge: Vec<Option<usize>> = vec![None; self.n];
        level_of[root] = Some(0);
        let mut levels = vec![vec![root]];
        let mut tree_edges = Vec::new();
        let mut queued = vec![false; self.n];
        queued[root] = true;
        loop {
            let current = levels.last().unwrap().clone();
            let depth = levels.len();
            let mut next: Vec<(usize, usize)> = Vec::new(); // (vertex, via edge)
            for &u in &current {
                // ascending (neighbor, edge id) scan keeps the tree canonical
                let mut nbrs: Vec<(usize, usize)> = self.adj[u].clone();
                nbrs.sort_unstable();
                for (v, id) in nbrs {
                    if Some(id) == skip_edge || queued[v] {
                        continue;
                    }
                    queued[v] = true;
                    next.push((v, id));
                }
            }
            if next.is_empty() {
                break;
            }
            next.sort_unstable();
            let mut level = Vec::with_capacity(next.len());
            for (v, id) in next {
                level_of[v] = Some(depth);
                parent_edge[v] = Some(id);
                tree_edges.push(id);
                level.push(v);
            }
            levels.push(level);
        }
        let chord_edges: Vec<usize> = (0..self.edges.len())
            .filter(|&id| {
                if Some(id) == skip_edge || tree_edges.contains(&id) {
                    return false;
                }
                let (u, v) = self.edges[id];
                level_of[u].is_some() && level_of[v].is_some()
            })
            .collect();
        let unreached: Vec<usize> = (0..self.n).filter(|&v| level_of[v].is_none()).collect();
        let width = levels.iter().map(|l| l.len()).max().unwrap_or(0);
        BfsTree {
            root,
            depth: levels.len() - 1,
            width,
            levels,
            tree_edges,
            chord_edges,
            unreached,
            level_of,
        }
    }

    pub fn bfs_tree(&self, root: usize) -> BfsTree {
        self.bfs_tree_skipping(root, None)
    }

    /// Shortest-path distance between v_s and v_t after removing one copy of
    /// the edge (v_s, v_t); None when that disconnects them.
    pub fn distance_after_removal(&self, v_s: usize, v_t: usize) -> Result<Option<usize>> {
        let edge = self.edge_between(v_s, v_t).ok_or(Error::EdgeMissing(v_s, v_t))?;
        let tree = self.bfs_tree_skipping(v_s, Some(edge));
        Ok(tree.level_of[v_t])
    }

    /// Length of the shortest cycle; None for forests. Parallel edges form
    /// 2-cycles.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for root in 0..self.n {
            let mut dist: Vec<Option<usize>> = vec![None; self.n];
            let mut parent_edge: Vec<Option<usize>> = vec![None; self.n];
            dist[root] = Some(0);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let du = dist[u].unwrap();
                if let Some(b) = best {
                    // Cycles through root found from here on are no shorter.
                    if 2 * du >= b {
                        break;
                    }
                }
                for &(v, id) in &self.adj[u] {
                    if Some(id) == parent_edge[u] {
                        continue;
                    }
                    match dist[v] {
                        None => {
                            dist[v] = Some(du + 1);
                            parent_edge[v] = Some(id);
                            queue.push_back(v);
                        }
                        Some(dv) => {
                            let cycle = du + dv + 1;
                            if best.is_none_or(|b| cycle < b) {
                                best = Some(cycle);
                            }
                        }
                    }
                }
            }
        }
        best
    }

    /// |V| x |E| incidence matrix over GF(2).
    pub fn incidence_matrix(&self) -> BitMatrix {
        let mut rows = vec![BitVec::zeros(self.edges.len()); self.n];
        for (id, &(u, v)) in self.edges.iter().enumerate() {
            rows[u].flip(id);
            rows[v].flip(id);
        }
        BitMatrix::from_rows(self.edges.len(), rows)
    }

    /// Fundamental cycles of a BFS spanning forest, as edge-space vectors.
    pub fn cycle_space_basis(&self) -> Vec<BitVec> {
        let mut visited = vec![false; self.n];
        let mut basis = Vec::new();
        for root in 0..self.n {
            if visited[root] {
                continue;
            }
            let tree = self.bfs_tree(root);
            let mut parent: Vec<Option<(usize, usize)>> = vec![None; self.n]; // (parent vertex, edge)
            for &id in &tree.tree_edges {
                let (u, v) = self.edges[id];
                // deeper endpoint is the child
                let (lu, lv) = (tree.level_of[u].unwrap(), tree.level_of[v].unwrap());
                if lu < lv {
                    parent[v] = Some((u, id));
                } else {
                    parent[u] = Some((v, id));
                }
            }
            for (v, level) in tree.level_of.iter().enumerate() {
                if level.is_some() {
                    visited[v] = true;
                }
            }
            for &id in &tree.chord_edges {
                let (mut a, mut b) = self.edges[id];
                let mut cycle = BitVec::zeros(self.edges.len());
                cycle.flip(id);
                // walk both endpoints up to their lowest common ancestor
                while a != b {
                    let (la, lb) = (tree.level_of[a].unwrap(), tree.level_of[b].unwrap());
                    if la >= lb {
                        let (pa, pe) = parent[a].expect("non-root has a parent");
                        cycle.flip(pe);
                        a = pa;
                    } else {
                        let (pb, pe) = parent[b].expect("non-root has a parent");
                        cycle.flip(pe);
                        b = pb;
                    }
                }
                basis.push(cycle);
            }
        }
        basis
    }
}
