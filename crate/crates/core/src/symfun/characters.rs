use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::partitions::Partition;

/// Irreducible characters of the symmetric group on `degree` letters.
#[derive(Debug)]
pub struct CharTable {
    pub degree: usize,
    /// Partitions of `degree`, lexicographically descending.
    pub shapes: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// `values[lambda][rho]`.
    values: Vec<Vec<i64>>,
}

impl CharTable {
    fn build(degree: usize) -> Self {
        let shapes = Partition::all_of_size(degree);
        let index: HashMap<Partition, usize> = shapes.iter().cloned().enumerate().map(|(k, p)| (p, k)).collect();
        let mut memo = HashMap::new();
        let values = shapes
            .iter()
            .map(|lam| shapes.iter().map(|rho| mn_char(lam.parts(), rho.parts(), &mut memo)).collect())
            .collect();
        CharTable { degree, shapes, index, values }
    }

    pub fn index_of(&self, p: &Partition) -> usize {
        self.index[p]
    }

    /// `chi^lambda(rho)`.
    pub fn chi(&self, lambda: &Partition, rho: &Partition) -> i64 {
        self.values[self.index_of(lambda)][self.index_of(rho)]
    }
}

/// Murnaghan-Nakayama recursion on beta-sets; removes the parts of `rho` from the end.
fn mn_char(lambda: &[usize], rho: &[usize], memo: &mut HashMap<(Vec<usize>, Vec<usize>), i64>) -> i64 {
    if rho.is_empty() {
        return if lambda.is_empty() { 1 } else { 0 };
    }
    let key = (lambda.to_vec(), rho.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let k = *rho.last().unwrap();
    let rest = &rho[..rho.len() - 1];
    let l = lambda.len();
    let beta: Vec<usize> = lambda.iter().enumerate().map(|(a, &p)| p + l - 1 - a).collect();
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < k {
            continue;
        }
        let nb = b - k;
        if beta.contains(&nb) {
            continue;
        }
        let between = beta.iter().filter(|&&c| c > nb && c < b).count();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        let mut nbeta = beta.clone();
        nbeta[idx] = nb;
        nbeta.sort_unstable_by(|x, y| y.cmp(x));
        let ln = nbeta.len();
        let mut parts: Vec<usize> = nbeta.iter().enumerate().map(|(a, &c)| c + a + 1 - ln).collect();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        total += sign * mn_char(&parts, rest, memo);
    }
    memo.insert(key, total);
    total
}

static TABLES: OnceLock<RwLock<HashMap<usize, Arc<CharTable>>>> = OnceLock::new();

/// Character table of `S_degree`, memoized.
pub fn char_table(degree: usize) -> Arc<CharTable> {
    let lock = TABLES.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(t) = lock.read().unwrap().get(&degree) {
        return t.clone();
    }
    let t = Arc::new(CharTable::build(degree));
    lock.write().unwrap().entry(degree).or_insert(t).clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_table() {
        let t = char_table(3);
        let p = |s: &str| s.parse::<Partition>().unwrap();
        assert_eq!(t.chi(&p("2,1"), &p("1,1,1")), 2);
        assert_eq!(t.chi(&p("2,1"), &p("2,1")), 0);
        assert_eq!(t.chi(&p("2,1"), &p("3")), -1);
        assert_eq!(t.chi(&p("1,1,1"), &p("2,1")), -1);
    }

    #[test]
    fn column_orthogonality() {
        for n in 1..=7 {
            let t = char_table(n);
            for rho in &t.shapes {
                let s: i64 = t.shapes.iter().map(|l| t.chi(l, rho).pow(2)).sum();
                assert_eq!(num_bigint::BigInt::from(s), rho.z_factor());
            }
        }
    }
}
