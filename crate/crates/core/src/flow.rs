//! Dinic's blocking-flow max-flow on integer capacities.

use std::collections::VecDeque;

#[derive(Debug, Clone)]
struct Edge {
    to: usize,
    cap: u32,
    rev: usize,
}

#[derive(Debug, Clone)]
pub struct Dinic {
    graph: Vec<Vec<Edge>>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

/// Handle to an edge added with [`Dinic::add_edge`].
#[derive(Debug, Clone, Copy)]
pub struct EdgeId {
    from: usize,
    idx: usize,
}

impl Dinic {
    pub fn new(nodes: usize) -> Self {
        Dinic {
            graph: vec![Vec::new(); nodes],
            level: vec![-1; nodes],
            iter: vec![0; nodes],
        }
    }

    pub fn add_edge(&mut self, from: usize, to: usize, cap: u32) -> EdgeId {
        let fwd = self.graph[from].len();
        let back = self.graph[to].len() + usize::from(from == to);
        self.graph[from].push(Edge { to, cap, rev: back });
        self.graph[to].push(Edge { to: from, cap: 0, rev: fwd });
        EdgeId { from, idx: fwd }
    }

    /// Flow currently routed through `edge`.
    pub fn flow(&self, edge: EdgeId) -> u32 {
        let e = &self.graph[edge.from][edge.idx];
        self.graph[e.to][e.rev].cap
    }

    fn bfs(&mut self, s: usize) {
        self.level.fill(-1);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for e in &self.graph[v] {
                if e.cap > 0 && self.level[e.to] < 0 {
                    self.level[e.to] = self.level[v] + 1;
                    queue.push_back(e.to);
                }
            }
        }
    }

    fn dfs(&mut self, v: usize, t: usize, limit: u32) -> u32 {
        if v == t {
            return limit;
        }
        while self.iter[v] < self.graph[v].len() {
            let i = self.iter[v];
            let Edge { to, cap, rev } = self.graph[v][i];
            if cap > 0 && self.level[v] < self.level[to] {
                let pushed = self.dfs(to, t, limit.min(cap));
                if pushed > 0 {
                    self.graph[v][i].cap -= pushed;
                    self.graph[to][rev].cap += pushed;
                    return pushed;
                }
            }
            self.iter[v] += 1;
        }
        0
    }

    pub fn max_flow(&mut self, s: usize, t: usize) -> u64 {
        let mut total = 0u64;
        loop {
            self.bfs(s);
            if self.level[t] < 0 {
                return total;
            }
            self.iter.fill(0);
            loop {
                let f = self.dfs(s, t, u32::MAX);
                if f == 0 {
                    break;
                }
                total += u64::from(f);
            }
        }
    }

    /// Nodes reachable from `s` in the residual graph. After [`max_flow`]
    /// this is the source side of a minimum cut.
    ///
    /// [`max_flow`]: Dinic::max_flow
    pub fn residual_reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.graph.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for e in &self.graph[v] {
                if e.cap > 0 && !seen[e.to] {
                    seen[e.to] = true;
                    queue.push_back(e.to);
                }
            }
        }
        seen
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn textbook_network() {
        let mut g = Dinic::new(6);
        g.add_edge(0, 1, 10);
        g.add_edge(0, 2, 10);
        g.add_edge(1, 3, 4);
        g.add_edge(1, 4, 8);
        g.add_edge(2, 4, 9);
        g.add_edge(3, 5, 10);
        g.add_edge(4, 3, 6);
        g.add_edge(4, 5, 10);
        assert_eq!(g.max_flow(0, 5), 19);
    }

    #[test]
    fn disconnected_sink() {
        let mut g = Dinic::new(4);
        g.add_edge(0, 1, 10);
        g.add_edge(2, 3, 5);
        assert_eq!(g.max_flow(0, 3), 0);
        let reach = g.residual_reachable(0);
        assert_eq!(reach, vec![true, true, false, false]);
    }

    #[test]
    fn edge_flows_are_reported() {
        let mut g = Dinic::new(3);
        let a = g.add_edge(0, 1, 3);
        let b = g.add_edge(1, 2, 2);
        assert_eq!(g.max_flow(0, 2), 2);
        assert_eq!(g.flow(a), 2);
        assert_eq!(g.flow(b), 2);
    }
}
