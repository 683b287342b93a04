//! Individualization–refinement search.
//!
//! One traversal yields both a canonical labeling (the leaf with the least
//! relabeled adjacency) and a generating set for the automorphism group.
//! Subtrees are skipped only when a discovered automorphism maps them onto
//! a subtree already explored.

use std::collections::VecDeque;

use super::perm::Permutation;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Ordered partition of the vertex set; cells are contiguous runs of `lab`.
#[derive(Clone)]
struct Partition {
    lab: Vec<usize>,
    /// vertex -> start position of its cell
    cell_of: Vec<usize>,
    /// start position -> end position (exclusive)
    end: Vec<usize>,
    cells: usize,
}

impl Partition {
    fn unit(n: usize) -> Self {
        let mut end = vec![0; n];
        end[0] = n;
        Partition { lab: (0..n).collect(), cell_of: vec![0; n], end, cells: 1 }
    }

    fn len(&self) -> usize {
        self.lab.len()
    }

    fn is_discrete(&self) -> bool {
        self.cells == self.len()
    }

    /// First smallest non-singleton cell, as `(start, end)`.
    fn target_cell(&self) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        let mut s = 0;
        while s < self.len() {
            let e = self.end[s];
            if e - s > 1 && best.is_none_or(|(bs, be)| e - s < be - bs) {
                best = Some((s, e));
            }
            s = e;
        }
        best
    }

    /// Splits `v` off the front of its cell; returns the start of `{v}`.
    fn individualize(&mut self, v: usize) -> usize {
        let s = self.cell_of[v];
        let e = self.end[s];
        let pos = s + self.lab[s..e].iter().position(|&w| w == v).unwrap();
        self.lab.swap(s, pos);
        self.end[s] = s + 1;
        self.end[s + 1] = e;
        for &w in &self.lab[s + 1..e] {
            self.cell_of[w] = s + 1;
        }
        self.cells += 1;
        s
    }

    /// Refines to the coarsest equitable partition finer than `self`,
    /// starting from the given splitter cells.
    fn refine(&mut self, g: &Graph, splitters: &[usize], scratch: &mut Vec<(usize, usize)>) {
        let n = self.len();
        let mut queue: VecDeque<usize> = splitters.iter().copied().collect();
        let mut queued = vec![false; n];
        for &s in splitters {
            queued[s] = true;
        }
        while let Some(w) = queue.pop_front() {
            queued[w] = false;
            if self.is_discrete() {
                break;
            }
            let mask: VertexSet = self.lab[w..self.end[w]].iter().copied().collect();
            let mut s = 0;
            while s < n {
                let e = self.end[s];
                if e - s > 1 {
                    scratch.clear();
                    scratch.extend(self.lab[s..e].iter().map(|&v| (g.neighbors(v).intersection(mask).len(), v)));
                    let c0 = scratch[0].0;
                    if scratch.iter().any(|&(c, _)| c != c0) {
                        scratch.sort_by_key(|&(c, _)| c);
                        self.split_cell(s, e, scratch, &mut queue, &mut queued);
                    }
                }
                s = e;
            }
        }
    }

    fn split_cell(
        &mut self,
        s: usize,
        e: usize,
        sorted: &[(usize, usize)],
        queue: &mut VecDeque<usize>,
        queued: &mut [bool],
    ) {
        let mut runs = Vec::new();
        let mut start = s;
        for i in s..e {
            let (c, v) = sorted[i - s];
            self.lab[i] = v;
            if i > s && c != sorted[i - s - 1].0 {
                runs.push((start, i));
                start = i;
            }
        }
        runs.push((start, e));
        for &(rs, re) in &runs {
            self.end[rs] = re;
            for &v in &self.lab[rs..re] {
                self.cell_of[v] = rs;
            }
        }
        self.cells += runs.len() - 1;

        let skip = if queued[s] {
            None
        } else {
            // a cell already used as splitter only needs all but its largest piece
            let mut largest = 0;
            for (k, &(rs, re)) in runs.iter().enumerate() {
                if re - rs > runs[largest].1 - runs[largest].0 {
                    largest = k;
                }
            }
            Some(largest)
        };
        for (k, &(rs, _)) in runs.iter().enumerate() {
            if Some(k) != skip && !queued[rs] {
                queued[rs] = true;
                queue.push_back(rs);
            }
        }
    }
}

/// Relabeled adjacency rows of a discrete partition: row `i` describes the
/// vertex at position `i`.
fn certificate(g: &Graph, lab: &[usize]) -> Vec<u128> {
    let mut pos = [0usize; 128];
    for (i, &v) in lab.iter().enumerate() {
        pos[v] = i;
    }
    lab.iter().map(|&v| g.neighbors(v).iter().fold(0u128, |acc, w| acc | (1u128 << pos[w]))).collect()
}

struct Leaf {
    lab: Vec<usize>,
    path: Vec<usize>,
    cert: Vec<u128>,
}

pub(crate) struct SearchOutcome {
    /// `labeling[v]` is the canonical label of `v`.
    pub labeling: Vec<usize>,
    pub generators: Vec<Permutation>,
}

struct Search<'a> {
    g: &'a Graph,
    budget: u64,
    nodes: u64,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Permutation>,
    scratch: Vec<(usize, usize)>,
}

enum Flow {
    Continue,
    /// Unwind to the node at this depth.
    JumpTo(usize),
}

pub(crate) fn run(g: &Graph, budget: u64) -> Result<SearchOutcome> {
    let mut search = Search {
        g,
        budget,
        nodes: 0,
        first: None,
        best: None,
        generators: Vec::new(),
        scratch: Vec::with_capacity(g.order()),
    };
    let mut root = Partition::unit(g.order());
    let mut scratch = std::mem::take(&mut search.scratch);
    root.refine(g, &[0], &mut scratch);
    search.scratch = scratch;
    let mut path = Vec::new();
    search.visit(root, &mut path)?;

    let best = search.best.expect("search visits at least one leaf");
    let mut labeling = vec![0; g.order()];
    for (i, &v) in best.lab.iter().enumerate() {
        labeling[v] = i;
    }
    Ok(SearchOutcome { labeling, generators: search.generators })
}

impl Search<'_> {
    fn visit(&mut self, part: Partition, path: &mut Vec<usize>) -> Result<Flow> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::SearchBudgetExceeded(self.budget));
        }
        if part.is_discrete() {
            return Ok(self.leaf(part.lab, path));
        }
        let depth = path.len();
        let (s, e) = part.target_cell().expect("non-discrete partition has a target cell");
        let mut children: Vec<usize> = part.lab[s..e].to_vec();
        children.sort_unstable();

        let mut explored: Vec<usize> = Vec::new();
        let mut orbits: Option<(usize, Vec<usize>)> = None;
        for w in children {
            if !explored.is_empty() {
                let stale = orbits.as_ref().is_none_or(|(k, _)| *k != self.generators.len());
                if stale {
                    orbits = Some((self.generators.len(), self.stabilizer_orbits(path)));
                }
                let (_, rep) = orbits.as_ref().unwrap();
                if explored.iter().any(|&u| rep[u] == rep[w]) {
                    continue;
                }
            }
            explored.push(w);

            let mut child = part.clone();
            let cell = child.individualize(w);
            let mut scratch = std::mem::take(&mut self.scratch);
            child.refine(self.g, &[cell], &mut scratch);
            self.scratch = scratch;

            path.push(w);
            let flow = self.visit(child, path)?;
            path.pop();
            if let Flow::JumpTo(level) = flow {
                if level < depth {
                    return Ok(flow);
                }
            }
        }
        Ok(Flow::Continue)
    }

    fn leaf(&mut self, lab: Vec<usize>, path: &[usize]) -> Flow {
        let cert = certificate(self.g, &lab);
        let leaf = Leaf { lab, path: path.to_vec(), cert };
        let Some(first) = &self.first else {
            self.best = Some(Leaf { lab: leaf.lab.clone(), path: leaf.path.clone(), cert: leaf.cert.clone() });
            self.first = Some(leaf);
            return Flow::Continue;
        };
        if leaf.cert == first.cert {
            let level = common_prefix(&leaf.path, &first.path);
            let gamma = automorphism_between(&first.lab, &leaf.lab);
            self.record(gamma);
            return Flow::JumpTo(level);
        }
        let best = self.best.as_ref().unwrap();
        match leaf.cert.cmp(&best.cert) {
            std::cmp::Ordering::Equal => {
                let level = common_prefix(&leaf.path, &best.path);
                let gamma = automorphism_between(&best.lab, &leaf.lab);
                self.record(gamma);
                Flow::JumpTo(level)
            }
            std::cmp::Ordering::Less => {
                self.best = Some(leaf);
                Flow::Continue
            }
            std::cmp::Ordering::Greater => Flow::Continue,
        }
    }

    fn record(&mut self, gamma: Permutation) {
        if !gamma.is_identity() && !self.generators.contains(&gamma) {
            self.generators.push(gamma);
        }
    }

    /// Orbit representatives under the discovered generators that fix every
    /// vertex on `path`.
    fn stabilizer_orbits(&self, path: &[usize]) -> Vec<usize> {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for gen in self.generators.iter().filter(|g| path.iter().all(|&v| g.fixes(v))) {
            for v in 0..n {
                let (a, b) = (find(&mut parent, v), find(&mut parent, gen.image(v)));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        (0..n).map(|v| find(&mut parent, v)).collect()
    }
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// The automorphism sending `from[i]` to `to[i]` for every position `i`.
fn automorphism_between(from: &[usize], to: &[usize]) -> Permutation {
    let mut images = vec![0; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        images[a] = b;
    }
    Permutation::from_images(&images).expect("leaf labelings are bijections")
}
