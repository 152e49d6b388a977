//! Integer max-flow (Dinic) used for minimum edge cuts and capacitated cover
//! feasibility. Arcs are explored in insertion order, so results are
//! deterministic.

use std::collections::VecDeque;

#[derive(Debug, Clone)]
pub(crate) struct FlowNetwork {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u64>,
    orig: Vec<u64>,
}

pub(crate) const INF: u64 = u64::MAX / 4;

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        FlowNetwork {
            head: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
            orig: Vec::new(),
        }
    }

    fn push_arc(&mut self, u: usize, v: usize, c: u64) -> usize {
        let id = self.to.len();
        self.head[u].push(id);
        self.to.push(v);
        self.cap.push(c);
        self.orig.push(c);
        id
    }

    /// Directed arc `u -> v`; returns its id (the reverse arc is `id ^ 1`).
    pub fn add_arc(&mut self, u: usize, v: usize, c: u64) -> usize {
        let id = self.push_arc(u, v, c);
        self.push_arc(v, u, 0);
        id
    }

    /// Undirected edge of capacity `c` in both directions.
    pub fn add_undirected(&mut self, u: usize, v: usize, c: u64) -> usize {
        let id = self.push_arc(u, v, c);
        self.push_arc(v, u, c);
        id
    }

    /// Net flow currently pushed along arc `id`.
    pub fn flow(&self, id: usize) -> i64 {
        self.orig[id] as i64 - self.cap[id] as i64
    }

    fn levels(&self, s: usize, t: usize) -> Option<Vec<usize>> {
        let mut level = vec![usize::MAX; self.head.len()];
        level[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for &a in &self.head[u] {
                let v = self.to[a];
                if self.cap[a] > 0 && level[v] == usize::MAX {
                    level[v] = level[u] + 1;
                    q.push_back(v);
                }
            }
        }
        (level[t] != usize::MAX).then_some(level)
    }

    fn augment(
        &mut self,
        u: usize,
        t: usize,
        pushed: u64,
        level: &[usize],
        it: &mut [usize],
    ) -> u64 {
        if u == t {
            return pushed;
        }
        while it[u] < self.head[u].len() {
            let a = self.head[u][it[u]];
            let v = self.to[a];
            if self.cap[a] > 0 && level[v] == level[u] + 1 {
                let got = self.augment(v, t, pushed.min(self.cap[a]), level, it);
                if got > 0 {
                    self.cap[a] -= got;
                    self.cap[a ^ 1] += got;
                    return got;
                }
            }
            it[u] += 1;
        }
        0
    }

    /// Pushes flow from `s` to `t` until it is maximum or reaches `limit`.
    pub fn max_flow(&mut self, s: usize, t: usize, limit: u64) -> u64 {
        let mut total = 0;
        while total < limit {
            let Some(level) = self.levels(s, t) else {
                break;
            };
            let mut it = vec![0; self.head.len()];
            loop {
                let got = self.augment(s, t, limit - total, &level, &mut it);
                if got == 0 {
                    break;
                }
                total += got;
                if total >= limit {
                    break;
                }
            }
        }
        total
    }

    /// Nodes reachable from `s` in the residual network.
    pub fn residual_reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.head.len()];
        seen[s] = true;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for &a in &self.head[u] {
                let v = self.to[a];
                if self.cap[a] > 0 && !seen[v] {
                    seen[v] = true;
                    q.push_back(v);
                }
            }
        }
        seen
    }
}
