//! Seeded random graphs for the property suites.

use cisgraph::Graph;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::context::Context;
use crate::error::Result;

/// Largest order whose CIS classes seed the biased sampler.
const POOL_ORDER: usize = 6;

pub struct Sampler {
    pub rng: ChaCha8Rng,
    /// CIS classes by order, `pool[n]` for `n <= POOL_ORDER`.
    pool: Vec<Vec<Graph>>,
}

impl Sampler {
    pub fn new(ctx: &Context, rng: ChaCha8Rng) -> Result<Sampler> {
        let mut pool = vec![Vec::new()];
        for n in 1..=POOL_ORDER {
            pool.push(ctx.classes(n)?.iter().filter(|c| c.is_cis()).map(|c| c.graph.clone()).collect());
        }
        Ok(Sampler { rng, pool })
    }

    /// Uniform labeled graph on `n` vertices.
    pub fn uniform(&mut self, n: usize) -> Graph {
        let rng = &mut self.rng;
        Graph::from_fn(n, |_, _| rng.gen_bool(0.5)).expect("order in range")
    }

    pub fn relabel(&mut self, g: &Graph) -> Graph {
        let mut perm: Vec<usize> = (0..g.order()).collect();
        perm.shuffle(&mut self.rng);
        g.relabel(&perm)
    }

    /// Half the time a uniform graph, otherwise a relabeled CIS graph, so
    /// both sides of an equivalence get exercised.
    pub fn mixed(&mut self, min: usize, max: usize) -> Graph {
        let n = self.rng.gen_range(min..=max);
        if n <= POOL_ORDER && self.rng.gen_bool(0.5) {
            let g = self.pool[n].choose(&mut self.rng).expect("every order has a CIS graph").clone();
            self.relabel(&g)
        } else {
            self.uniform(n)
        }
    }

    /// A random graph on at most `max` vertices with twin classes: each
    /// vertex of a random base graph becomes a stable set of size 1 to 3.
    pub fn blown_up(&mut self, max: usize) -> Graph {
        let k = self.rng.gen_range(1..=max.min(5));
        let base = self.mixed(k, k);
        let mut class = Vec::new();
        for v in 0..k {
            let room = max - class.len() - (k - v - 1);
            for _ in 0..self.rng.gen_range(1..=room.min(3)) {
                class.push(v);
            }
        }
        let g = Graph::from_fn(class.len(), |u, v| base.is_adjacent(class[u], class[v])).expect("order in range");
        self.relabel(&g)
    }

    /// Circulant on `Z_n` with a random symmetric connection set.
    pub fn circulant(&mut self, n: usize) -> Graph {
        let conn: Vec<usize> = (1..=n / 2).filter(|_| self.rng.gen_bool(0.5)).collect();
        Graph::from_fn(n, |u, v| {
            let d = v - u;
            conn.contains(&d) || conn.contains(&(n - d))
        })
        .expect("order in range")
    }
}
