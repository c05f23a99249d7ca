//! Small undirected simple graphs: base graphs and the reconstruction shapes.

use std::collections::VecDeque;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(vertices: usize) -> Self {
        Graph { adj: vec![Vec::new(); vertices] }
    }

    pub fn from_edges(vertices: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(vertices);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Adds `{u, v}`; duplicates and loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u == v || self.has_edge(u, v) {
            return;
        }
        let pos = self.adj[u].binary_search(&v).unwrap_err();
        self.adj[u].insert(pos, v);
        let pos = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(pos, u);
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, nbrs) in self.adj.iter().enumerate() {
            out.extend(nbrs.iter().filter(|&&v| u < v).map(|&v| (u, v)));
        }
        out
    }

    pub fn degree_multiset(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable();
        d
    }

    /// BFS distances from `src`; `usize::MAX` marks unreachable vertices.
    pub fn distances(&self, src: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.adj.len()];
        let mut queue = VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.adj.is_empty() || self.distances(0).iter().all(|&d| d != usize::MAX)
    }

    /// Diameter of a connected graph, `None` otherwise.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for v in 0..self.adj.len() {
            let d = self.distances(v);
            if d.contains(&usize::MAX) {
                return None;
            }
            best = best.max(d.into_iter().max().unwrap_or(0));
        }
        Some(best)
    }

    /// The graph induced on `keep`, with vertices renumbered in the order given.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.adj.len()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::new(keep.len());
        for (i, &v) in keep.iter().enumerate() {
            for &w in &self.adj[v] {
                if index[w] != usize::MAX && i < index[w] {
                    g.add_edge(i, index[w]);
                }
            }
        }
        g
    }

    /// Removes vertex `v`; vertices above it shift down by one.
    pub fn without_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.adj.len()).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// Finds an isomorphism `self -> other` as a vertex map, honouring the
    /// required assignments in `fixed`.
    pub fn isomorphism_to(&self, other: &Graph, fixed: &[(usize, usize)]) -> Option<Vec<usize>> {
        let n = self.adj.len();
        if n != other.adj.len()
            || self.edge_count() != other.edge_count()
            || self.degree_multiset() != other.degree_multiset()
        {
            return None;
        }
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        for &(a, b) in fixed {
            if self.degree(a) != other.degree(b) || used[b] || map[a] != usize::MAX {
                return None;
            }
            map[a] = b;
            used[b] = true;
        }
        for &(a, _) in fixed {
            for &(c, _) in fixed {
                if a < c && self.has_edge(a, c) != other.has_edge(map[a], map[c]) {
                    return None;
                }
            }
        }
        // Visit vertices in BFS order from the fixed ones so adjacency prunes early.
        let mut order: Vec<usize> = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        let mut queue: VecDeque<usize> = fixed.iter().map(|&(a, _)| a).collect();
        for &(a, _) in fixed {
            seen[a] = true;
        }
        loop {
            while let Some(u) = queue.pop_front() {
                if map[u] == usize::MAX {
                    order.push(u);
                }
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            match (0..n).filter(|&v| !seen[v]).max_by_key(|&v| self.degree(v)) {
                Some(v) => {
                    seen[v] = true;
                    queue.push_back(v);
                }
                None => break,
            }
        }
        if self.extend_iso(other, &order, 0, &mut map, &mut used) {
            Some(map)
        } else {
            None
        }
    }

    fn extend_iso(&self, other: &Graph, order: &[usize], depth: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        let Some(&v) = order.get(depth) else {
            return true;
        };
        for cand in 0..other.adj.len() {
            if used[cand] || other.degree(cand) != self.degree(v) {
                continue;
            }
            let consistent = (0..self.adj.len())
                .all(|u| map[u] == usize::MAX || self.has_edge(u, v) == other.has_edge(map[u], cand));
            if !consistent {
                continue;
            }
            map[v] = cand;
            used[cand] = true;
            if self.extend_iso(other, order, depth + 1, map, used) {
                return true;
            }
            map[v] = usize::MAX;
            used[cand] = false;
        }
        false
    }

    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        self.isomorphism_to(other, &[]).is_some()
    }
}
