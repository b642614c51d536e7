//! Partitions, Young diagram cells and the `j`/`m` sequence encoding.
//!
//! Cells are 0-based `(x, y)`: `x` is the row, `y` the column.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("not a partition: {0}")]
    NotPartition(String),
    #[error("cell ({0}, {1}) is not removable")]
    NotRemovable(usize, usize),
    #[error("cell ({0}, {1}) is not addable")]
    NotAddable(usize, usize),
    #[error("N must be positive")]
    ZeroColors,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub x: usize,
    pub y: usize,
}

impl Cell {
    pub fn new(x: usize, y: usize) -> Self {
        Cell { x, y }
    }

    /// `(y - x) mod n`.
    pub fn residue(&self, n: usize) -> usize {
        (self.y as i64 - self.x as i64).rem_euclid(n as i64) as usize
    }

    /// Content `y - x`.
    pub fn content(&self) -> i64 {
        self.y as i64 - self.x as i64
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Partition with parts in non-increasing order and no zero parts.
///
/// The `Ord` instance sorts by size, then lexicographically descending, which
/// is the canonical output order of vectors indexed by partitions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn new(mut parts: Vec<usize>) -> Result<Self, PartitionError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(PartitionError::NotPartition(format!("{parts:?}")));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Row length `lambda_a` for 1-based `a`, zero past the last row.
    pub fn part(&self, a: usize) -> usize {
        if a == 0 {
            panic!("rows are 1-based");
        }
        self.0.get(a - 1).copied().unwrap_or(0)
    }

    /// Length of 0-based row `x`.
    pub fn row(&self, x: usize) -> usize {
        self.0.get(x).copied().unwrap_or(0)
    }

    /// Length of 0-based column `y`.
    pub fn col(&self, y: usize) -> usize {
        self.0.iter().take_while(|&&p| p > y).count()
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.y < self.row(c.x)
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.row(0);
        Partition((0..w).map(|y| self.col(y)).collect())
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0.iter().enumerate().flat_map(|(x, &p)| (0..p).map(move |y| Cell::new(x, y)))
    }

    /// Arm length of a cell of the diagram.
    pub fn arm(&self, c: Cell) -> usize {
        self.row(c.x) - c.y - 1
    }

    /// Leg length of a cell of the diagram.
    pub fn leg(&self, c: Cell) -> usize {
        self.col(c.y) - c.x - 1
    }

    pub fn hook(&self, c: Cell) -> usize {
        self.arm(c) + self.leg(c) + 1
    }

    pub fn removable_cells(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for (x, &p) in self.0.iter().enumerate() {
            if self.row(x + 1) < p {
                out.push(Cell::new(x, p - 1));
            }
        }
        out
    }

    pub fn addable_cells(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for x in 0..=self.len() {
            let p = self.row(x);
            if x == 0 || self.row(x - 1) > p {
                out.push(Cell::new(x, p));
            }
        }
        out
    }

    pub fn removable_of_residue(&self, i: usize, n: usize) -> Vec<Cell> {
        self.removable_cells().into_iter().filter(|c| c.residue(n) == i).collect()
    }

    pub fn addable_of_residue(&self, i: usize, n: usize) -> Vec<Cell> {
        self.addable_cells().into_iter().filter(|c| c.residue(n) == i).collect()
    }

    pub fn remove_cell(&self, c: Cell) -> Result<Partition, PartitionError> {
        if !self.removable_cells().contains(&c) {
            return Err(PartitionError::NotRemovable(c.x, c.y));
        }
        let mut p = self.0.clone();
        p[c.x] -= 1;
        if p[c.x] == 0 {
            p.pop();
        }
        Ok(Partition(p))
    }

    pub fn add_cell(&self, c: Cell) -> Result<Partition, PartitionError> {
        if !self.addable_cells().contains(&c) {
            return Err(PartitionError::NotAddable(c.x, c.y));
        }
        let mut p = self.0.clone();
        if c.x == p.len() {
            p.push(1);
        } else {
            p[c.x] += 1;
        }
        Ok(Partition(p))
    }

    /// Number of cells of each residue class mod `n`.
    pub fn residue_counts(&self, n: usize) -> Vec<usize> {
        let mut v = vec![0; n];
        for c in self.cells() {
            v[c.residue(n)] += 1;
        }
        v
    }

    /// Parts divisible by `n`.
    pub fn parts_divisible_by(&self, n: usize) -> usize {
        self.0.iter().filter(|&&p| p % n == 0).count()
    }

    /// `z_lambda = prod_i i^{m_i} m_i!`.
    pub fn z_factor(&self) -> num_bigint::BigInt {
        use num_bigint::BigInt;
        let mut z = BigInt::from(1);
        let mut k = 0;
        while k < self.0.len() {
            let p = self.0[k];
            let mut m = 0;
            while k < self.0.len() && self.0[k] == p {
                m += 1;
                k += 1;
                z *= BigInt::from(p) * BigInt::from(m);
            }
        }
        z
    }

    /// `j` and `m` sequences of length `len`, with
    /// `lambda_a - a + 1 = j_a - n m_a` and `1 <= j_a <= n`.
    pub fn jm_decomposition(&self, n: usize, len: usize) -> (Vec<usize>, Vec<i64>) {
        let n_i = n as i64;
        let mut js = Vec::with_capacity(len);
        let mut ms = Vec::with_capacity(len);
        for a in 1..=len {
            let v = self.part(a) as i64 - a as i64 + 1;
            let j = (v - 1).rem_euclid(n_i) + 1;
            js.push(j as usize);
            ms.push((j - v) / n_i);
        }
        (js, ms)
    }

    /// Inversion count `#{a < b <= n d : j_a >= j_b}` with `d` the least odd
    /// integer such that `len < n d`.
    pub fn epsilon_count(&self, n: usize) -> usize {
        self.epsilon_count_with(n, self.min_odd_d(n))
    }

    /// Inversion count for an explicit odd `d`.
    pub fn epsilon_count_with(&self, n: usize, d: usize) -> usize {
        let (j, _) = self.jm_decomposition(n, n * d);
        let mut count = 0;
        for a in 0..j.len() {
            for b in a + 1..j.len() {
                if j[a] >= j[b] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn min_odd_d(&self, n: usize) -> usize {
        let mut d = 1;
        while self.len() >= n * d {
            d += 2;
        }
        d
    }

    /// Parity of the inversion count, as `0` or `1`.
    pub fn epsilon_sign(&self, n: usize) -> usize {
        self.epsilon_count(n) % 2
    }

    /// Sign statistic that satisfies the removal parity rule for every
    /// residue: the inversion count with the `d`-dependence removed
    /// (each step `d -> d + 2` adds `N(N+1)/2`), plus the number of 0-cells
    /// when `N` is even.
    pub fn corrected_sign(&self, n: usize) -> usize {
        let d = self.min_odd_d(n);
        let drift = (d - 1) / 2 * (n * (n + 1) / 2);
        let zero_cells = if n % 2 == 0 { self.residue_counts(n)[0] } else { 0 };
        (self.epsilon_count_with(n, d) + drift + zero_cells) % 2
    }

    /// Dominance order `self <= other` (same size assumed).
    pub fn dominance_le(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let mut sa = 0;
        let mut sb = 0;
        let k = self.len().max(other.len());
        for x in 0..k {
            sa += self.row(x);
            sb += other.row(x);
            if sa > sb {
                return false;
            }
        }
        true
    }

    /// Plain lexicographic comparison of part sequences.
    pub fn lex_cmp(&self, other: &Partition) -> Ordering {
        self.0.cmp(&other.0)
    }

    /// All partitions of `n` in lexicographically descending order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        gen_parts(n, n, &mut cur, &mut out);
        out
    }

    /// All partitions of size at most `d`, in the canonical `Ord` order.
    pub fn all_up_to(d: usize) -> Vec<Partition> {
        (0..=d).flat_map(Partition::all_of_size).collect()
    }

    /// Removable and addable `i`-cells computed from the `j`/`m` sequences.
    ///
    /// The removal condition is `(j_a - 1) - j_{a+1} > n (m_a - m_{a+1})`,
    /// unfolded into the cases on `m_{a+1} - m_a`.
    pub fn cells_via_jm(&self, i: usize, n: usize) -> (Vec<Cell>, Vec<Cell>) {
        let len = n * (self.len() / n + 2);
        let (j, m) = self.jm_decomposition(n, len);
        let ji = |a: usize| j[a - 1];
        let mi = |a: usize| m[a - 1];
        let target_a = if i == 0 { n } else { i };
        let mut rem = Vec::new();
        for a in 1..=self.len() {
            if ji(a) != i + 1 {
                continue;
            }
            let gap = mi(a + 1) - mi(a);
            let ok = match gap {
                g if g >= 2 => true,
                1 => ji(a + 1) < i + n,
                0 => ji(a + 1) < i,
                _ => false,
            };
            if ok {
                rem.push(Cell::new(a - 1, self.part(a) - 1));
            }
        }
        let mut add = Vec::new();
        for a in 1..=self.len() + 1 {
            if ji(a) != target_a {
                continue;
            }
            let ok = if a == 1 {
                true
            } else {
                let gap = mi(a) - mi(a - 1);
                match gap {
                    g if g >= 2 => true,
                    1 => ji(a - 1) + n > ji(a) + 1,
                    0 => ji(a - 1) > ji(a) + 1,
                    _ => false,
                }
            };
            if ok {
                add.push(Cell::new(a - 1, self.part(a)));
            }
        }
        (rem, add)
    }
}

fn gen_parts(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rem == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for p in (1..=rem.min(max)).rev() {
        cur.push(p);
        gen_parts(rem - p, p, cur, out);
        cur.pop();
    }
}

/// Splits cells into those strictly above and strictly below row `x`.
pub fn split_left_right(cells: &[Cell], x: usize) -> (Vec<Cell>, Vec<Cell>) {
    let left = cells.iter().copied().filter(|c| c.x < x).collect();
    let right = cells.iter().copied().filter(|c| c.x > x).collect();
    (left, right)
}

/// Right-hand side of the sign identity for removing the `i`-cell `c` from
/// `lambda`, reduced mod 2.
pub fn sign_rhs_parity(lambda: &Partition, c: Cell, n: usize) -> Result<usize, PartitionError> {
    let i = c.residue(n);
    let mu = lambda.remove_cell(c)?;
    let v = lambda.residue_counts(n);
    let (al, _) = split_left_right(&lambda.addable_of_residue(i, n), c.x);
    let (rl, _) = split_left_right(&mu.removable_of_residue(i, n), c.x);
    let s = v[i] as i64 - v[(i + 1) % n] as i64 + al.len() as i64 - rl.len() as i64;
    Ok(s.rem_euclid(2) as usize)
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| other.0.cmp(&self.0))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let parts: Result<Vec<usize>, _> = s.split(',').map(|t| t.trim().parse::<usize>()).collect();
        let parts = parts.map_err(|_| PartitionError::NotPartition(s.to_string()))?;
        if parts.contains(&0) {
            return Err(PartitionError::NotPartition(s.to_string()));
        }
        Partition::new(parts).map_err(|_| PartitionError::NotPartition(s.to_string()))
    }
}
