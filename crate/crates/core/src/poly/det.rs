use std::collections::HashMap;

use super::Polynomial;
use crate::error::{Error, Result};

/// Determinant of a square matrix of polynomials by cofactor expansion along
/// rows, memoized on the set of remaining columns.
pub fn det(matrix: &[Vec<Polynomial>]) -> Result<Polynomial> {
    let n = matrix.len();
    if n == 0 {
        return Err(Error::invalid("determinant of a 0x0 matrix"));
    }
    if n > 63 || matrix.iter().any(|row| row.len() != n) {
        return Err(Error::invalid("determinant needs a square matrix of size at most 63"));
    }
    let mut memo = HashMap::new();
    Ok(expand(matrix, 0, (1u64 << n) - 1, &mut memo))
}

fn expand(m: &[Vec<Polynomial>], row: usize, cols: u64, memo: &mut HashMap<u64, Polynomial>) -> Polynomial {
    if cols == 0 {
        return Polynomial::one();
    }
    if let Some(p) = memo.get(&cols) {
        return p.clone();
    }
    let mut acc = Polynomial::zero();
    let mut sign_neg = false;
    for c in 0..m.len() {
        if cols & (1 << c) == 0 {
            continue;
        }
        let entry = &m[row][c];
        if !entry.is_zero() {
            let minor = expand(m, row + 1, cols & !(1 << c), memo);
            let t = entry * &minor;
            acc = if sign_neg { acc - t } else { acc + t };
        }
        sign_neg = !sign_neg;
    }
    memo.insert(cols, acc.clone());
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, Monomial, Variable};
    use proptest::prelude::*;

    fn z(j: u16) -> Polynomial {
        Polynomial::var(Variable::z(j))
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    fn sign(p: &[usize]) -> bool {
        let mut inv = 0;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    inv += 1;
                }
            }
        }
        inv % 2 == 1
    }

    fn leibniz(m: &[Vec<Polynomial>]) -> Polynomial {
        let n = m.len();
        let mut acc = Polynomial::zero();
        for p in permutations(n) {
            let t: Polynomial = (0..n).map(|i| m[i][p[i]].clone()).product();
            acc = if sign(&p) { acc - t } else { acc + t };
        }
        acc
    }

    #[test]
    fn small_cases() {
        assert!(det(&[]).is_err());
        let p = z(1) + z(2) * z(3);
        assert_eq!(det(&[vec![p.clone()]]).unwrap(), p);
        let m = vec![vec![z(1), z(2)], vec![z(2), z(1)]];
        assert_eq!(det(&m).unwrap(), z(1) * z(1) - z(2) * z(2));
    }

    #[test]
    fn three_by_three_matches_leibniz() {
        let m: Vec<Vec<Polynomial>> = (0..3)
            .map(|i| (0..3).map(|j| z(i + 1) * Polynomial::from_int(j as i64 + 1) + z(j + 1)).collect())
            .collect();
        assert_eq!(det(&m).unwrap(), leibniz(&m));
    }

    fn arb_entry() -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec((1u16..4, 0u32..3, -3i64..4), 0..3).prop_map(|ts| {
            Polynomial::from_terms(ts.into_iter().map(|(j, e, c)| (Monomial::from_pairs([(Variable::z(j), e)]), rat(c))))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn agrees_with_leibniz(n in 1usize..=4, entries in proptest::collection::vec(arb_entry(), 16)) {
            let m: Vec<Vec<Polynomial>> = (0..n).map(|i| (0..n).map(|j| entries[i * 4 + j].clone()).collect()).collect();
            prop_assert_eq!(det(&m).unwrap(), leibniz(&m));
        }
    }
}
