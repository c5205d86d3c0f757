//! Dense symmetric 0/1 matrices stored as bit rows.

use std::fmt::Write as _;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("nonzero diagonal at {0}")]
    Loop(usize),
}

impl std::fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BitMatrix(n={}, edges={})", self.n, self.edge_count())
    }
}

impl BitMatrix {
    pub fn empty(n: usize) -> BitMatrix {
        let words = n.div_ceil(64).max(1);
        BitMatrix {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    /// Builds the graph with `i ~ j` iff `adj(i, j)`, querying only `i < j`.
    pub fn from_fn(n: usize, mut adj: impl FnMut(usize, usize) -> bool) -> BitMatrix {
        let mut m = BitMatrix::empty(n);
        for i in 0..n {
            for j in i + 1..n {
                if adj(i, j) {
                    m.set_edge(i, j);
                }
            }
        }
        m
    }

    /// Validating constructor from 0/1 rows.
    pub fn from_rows(rows: &[Vec<u8>]) -> Result<BitMatrix, GraphError> {
        let n = rows.len();
        let mut m = BitMatrix::empty(n);
        for i in 0..n {
            if rows[i][i] != 0 {
                return Err(GraphError::Loop(i));
            }
            for j in 0..n {
                if (rows[i][j] != 0) != (rows[j][i] != 0) {
                    return Err(GraphError::NotSymmetric(i, j));
                }
                if rows[i][j] != 0 {
                    m.set(i, j);
                }
            }
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn set(&mut self, i: usize, j: usize) {
        self.bits[i * self.words + j / 64] |= 1u64 << (j % 64);
    }

    pub fn set_edge(&mut self, i: usize, j: usize) {
        assert!(i != j, "loops are not allowed");
        self.set(i, j);
        self.set(j, i);
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn common_neighbours(&self, i: usize, j: usize) -> usize {
        self.row(i)
            .iter()
            .zip(self.row(j))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn neighbours(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(i).iter().enumerate().flat_map(|(w, &word)| {
            let mut x = word;
            std::iter::from_fn(move || {
                if x == 0 {
                    None
                } else {
                    let b = x.trailing_zeros() as usize;
                    x &= x - 1;
                    Some(w * 64 + b)
                }
            })
        })
    }

    /// Adjacency lists, in increasing order.
    pub fn adjacency_lists(&self) -> Vec<Vec<u32>> {
        (0..self.n)
            .map(|i| self.neighbours(i).map(|j| j as u32).collect())
            .collect()
    }

    pub fn regular_degree(&self) -> Option<usize> {
        let k = if self.n == 0 { 0 } else { self.degree(0) };
        (0..self.n).all(|i| self.degree(i) == k).then_some(k)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|i| self.degree(i)).sum::<usize>() / 2
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for u in self.neighbours(v) {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == self.n
    }

    pub fn complement(&self) -> BitMatrix {
        BitMatrix::from_fn(self.n, |i, j| !self.get(i, j))
    }

    /// Matrix with `blocks x blocks` blocks of size `n`; entry `(i, j)` of block `(a, b)` is `block(a, b, i, j)`.
    pub(crate) fn from_blocks(
        n: usize,
        blocks: usize,
        block: impl Fn(usize, usize, usize, usize) -> bool,
    ) -> BitMatrix {
        BitMatrix::from_fn(n * blocks, |x, y| block(x / n, y / n, x % n, y % n))
    }

    /// Edge list with a `p edge n m` header and 1-based `e i j` lines.
    pub fn to_dimacs(&self) -> String {
        let mut s = String::new();
        writeln!(s, "p edge {} {}", self.n, self.edge_count()).unwrap();
        for i in 0..self.n {
            for j in self.neighbours(i).filter(|&j| j > i) {
                writeln!(s, "e {} {}", i + 1, j + 1).unwrap();
            }
        }
        s
    }

    /// Plain 0-based edge list, one `i j` pair per line.
    pub fn to_edge_list(&self) -> String {
        let mut s = String::new();
        for i in 0..self.n {
            for j in self.neighbours(i).filter(|&j| j > i) {
                writeln!(s, "{i} {j}").unwrap();
            }
        }
        s
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) as u8).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_queries() {
        let c5 = BitMatrix::from_fn(5, |i, j| (j - i) % 5 == 1 || (j - i) % 5 == 4);
        assert_eq!(c5.regular_degree(), Some(2));
        assert_eq!(c5.edge_count(), 5);
        assert!(c5.is_connected());
        assert_eq!(c5.neighbours(0).collect::<Vec<_>>(), vec![1, 4]);
        assert_eq!(c5.common_neighbours(0, 2), 1);
        assert_eq!(c5.complement().regular_degree(), Some(2));
        assert!(c5.to_dimacs().starts_with("p edge 5 5\ne 1 2\n"));
    }

    #[test]
    fn wide_rows() {
        let n = 130;
        let m = BitMatrix::from_fn(n, |i, j| i + 1 == j);
        assert_eq!(m.degree(64), 2);
        assert!(m.get(128, 129) && m.get(129, 128));
        assert!(m.is_connected());
        assert_eq!(BitMatrix::from_rows(&m.to_rows()).unwrap(), m);
    }

    #[test]
    fn from_rows_rejects_bad_input() {
        assert_eq!(
            BitMatrix::from_rows(&[vec![1, 0], vec![0, 0]]),
            Err(GraphError::Loop(0))
        );
        assert_eq!(
            BitMatrix::from_rows(&[vec![0, 1], vec![0, 0]]),
            Err(GraphError::NotSymmetric(0, 1))
        );
    }
}
