use std::fmt;

/// A permutation of `{0, .., n-1}` with `n <= 128`; `image(v)` is where `v`
/// goes.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).map(|v| v as u8).collect())
    }

    /// Returns `None` unless `images` is a bijection on `0..images.len()`.
    pub fn from_images(images: &[usize]) -> Option<Self> {
        let n = images.len();
        if n > 256 {
            return None;
        }
        let mut seen = vec![false; n];
        for &i in images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return None;
            }
        }
        Some(Permutation(images.iter().map(|&i| i as u8).collect()))
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn image(&self, v: usize) -> usize {
        self.0[v] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.0.iter().map(|&i| i as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    /// Apply `self`, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&v| other.0[v as usize]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize] = i as u8;
        }
        Permutation(inv)
    }

    pub fn fixes(&self, v: usize) -> bool {
        self.image(v) == v
    }

    pub fn has_fixed_point(&self) -> bool {
        self.0.iter().enumerate().any(|(i, &v)| i == v as usize)
    }

    /// Smallest point moved, if any.
    pub fn first_moved(&self) -> Option<usize> {
        self.0.iter().enumerate().position(|(i, &v)| i != v as usize)
    }

    /// One-line form: `p(0) p(1) ... p(n-1)`.
    pub fn to_line(&self) -> String {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        parts.join(" ")
    }

    pub fn parse_line(line: &str) -> Option<Permutation> {
        let images: Option<Vec<usize>> = line.split_whitespace().map(|t| t.parse().ok()).collect();
        Permutation::from_images(&images?)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.to_line())
    }
}
