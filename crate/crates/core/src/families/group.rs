//! Finite groups as Cayley-graph carriers. Elements are identified with
//! their rank `0..order`, which is also the vertex index in the resulting
//! Cayley graph.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

pub trait FiniteGroup {
    fn order(&self) -> usize;
    fn identity(&self) -> usize;
    fn mul(&self, a: usize, b: usize) -> usize;
    fn inv(&self, a: usize) -> usize;
}

/// `Z_{m_1} × ... × Z_{m_k}`; rank is mixed-radix with the first
/// coordinate most significant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    moduli: Vec<usize>,
    order: usize,
}

impl AbelianGroup {
    pub fn new(moduli: &[usize]) -> Result<Self> {
        if moduli.is_empty() {
            return Err(Error::BadParameter("abelian group needs at least one factor".into()));
        }
        if let Some(&m) = moduli.iter().find(|&&m| m < 2) {
            return Err(Error::BadParameter(format!("cyclic factor Z_{m} must have m >= 2")));
        }
        let order = moduli.iter().try_fold(1usize, |acc, &m| acc.checked_mul(m));
        match order {
            Some(order) if order <= MAX_ORDER => Ok(AbelianGroup { moduli: moduli.to_vec(), order }),
            _ => Err(Error::OrderTooLarge(order.unwrap_or(usize::MAX))),
        }
    }

    pub fn moduli(&self) -> &[usize] {
        &self.moduli
    }

    pub fn rank(&self, element: &[usize]) -> Result<usize> {
        if element.len() != self.moduli.len() {
            return Err(Error::BadParameter(format!(
                "element has {} coordinates, group has {}",
                element.len(),
                self.moduli.len()
            )));
        }
        Ok(element.iter().zip(&self.moduli).fold(0, |acc, (&x, &m)| acc * m + x.rem_euclid(m)))
    }

    pub fn element(&self, mut rank: usize) -> Vec<usize> {
        let mut out = vec![0; self.moduli.len()];
        for (slot, &m) in out.iter_mut().zip(&self.moduli).rev() {
            *slot = rank % m;
            rank /= m;
        }
        out
    }
}

impl FiniteGroup for AbelianGroup {
    fn order(&self) -> usize {
        self.order
    }

    fn identity(&self) -> usize {
        0
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        let (x, y) = (self.element(a), self.element(b));
        let sum: Vec<usize> = x.iter().zip(&y).zip(&self.moduli).map(|((p, q), m)| (p + q) % m).collect();
        self.rank(&sum).unwrap()
    }

    fn inv(&self, a: usize) -> usize {
        let x = self.element(a);
        let neg: Vec<usize> = x.iter().zip(&self.moduli).map(|(p, m)| (m - p) % m).collect();
        self.rank(&neg).unwrap()
    }
}

/// An arbitrary finite group given by its multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl GroupTable {
    /// Validates closure, the Latin-square property, associativity, an
    /// identity and inverses.
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 || n > MAX_ORDER {
            return Err(Error::OrderTooLarge(n));
        }
        let bad = |msg: &str| Error::InvalidGroupTable(msg.to_string());
        if table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return Err(bad("table is not n x n over 0..n"));
        }
        for i in 0..n {
            let mut row_seen = vec![false; n];
            let mut col_seen = vec![false; n];
            for j in 0..n {
                if std::mem::replace(&mut row_seen[table[i][j]], true)
                    || std::mem::replace(&mut col_seen[table[j][i]], true)
                {
                    return Err(bad("table is not a Latin square"));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(bad("multiplication is not associative"));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| bad("no identity element"))?;
        let inverse = (0..n).map(|a| (0..n).find(|&b| table[a][b] == identity).unwrap()).collect();
        Ok(GroupTable { table, identity, inverse })
    }
}

impl FiniteGroup for GroupTable {
    fn order(&self) -> usize {
        self.table.len()
    }

    fn identity(&self) -> usize {
        self.identity
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }
}

/// An inverse-closed, identity-free subset of a group, as sorted ranks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectionSet {
    elements: Vec<usize>,
}

impl ConnectionSet {
    /// Repeated elements collapse silently.
    pub fn new<G: FiniteGroup>(group: &G, elements: &[usize]) -> Result<Self> {
        let mut elements = elements.to_vec();
        elements.sort_unstable();
        elements.dedup();
        if let Some(&x) = elements.iter().find(|&&x| x >= group.order()) {
            return Err(Error::BadParameter(format!("element {x} is not in a group of order {}", group.order())));
        }
        if elements.contains(&group.identity()) {
            return Err(Error::IdentityInConnectionSet);
        }
        if elements.iter().any(|&x| elements.binary_search(&group.inv(x)).is_err()) {
            return Err(Error::NotInverseClosed);
        }
        Ok(ConnectionSet { elements })
    }

    pub fn from_tuples(group: &AbelianGroup, tuples: &[Vec<usize>]) -> Result<Self> {
        let ranks: Result<Vec<usize>> = tuples.iter().map(|t| group.rank(t)).collect();
        ConnectionSet::new(group, &ranks?)
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Vertices are group elements; `g ~ h` iff `g⁻¹h ∈ S`.
pub fn cayley_graph<G: FiniteGroup>(group: &G, connection: &ConnectionSet) -> Result<Graph> {
    Graph::from_fn(group.order(), |g, h| connection.elements.binary_search(&group.mul(group.inv(g), h)).is_ok())
}
