use std::collections::BTreeMap;

use super::{Monomial, Polynomial, Variable};
use crate::error::{Error, Result};

/// Assignment of a degree vector in `Z^n` to each variable of a ring. The
/// graded variables are exactly the variables of the ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Grading {
    n: usize,
    degrees: BTreeMap<Variable, Vec<i64>>,
}

impl Grading {
    pub fn new(n: usize) -> Self {
        Grading {
            n,
            degrees: BTreeMap::new(),
        }
    }

    /// Standard grading on the grid `x(i,j)`, `rows` in every column `1..=n`,
    /// with `deg x(i,j) = e_j`.
    pub fn grid(rows: std::ops::RangeInclusive<u16>, n: u16) -> Self {
        let heights: Vec<_> = (0..n).map(|_| rows.clone()).collect();
        Grading::columns(&heights)
    }

    /// Standard grading with a separate row range per column.
    pub fn columns(rows: &[std::ops::RangeInclusive<u16>]) -> Self {
        let n = rows.len();
        let mut g = Grading::new(n);
        for (j, range) in rows.iter().enumerate() {
            for i in range.clone() {
                g.degrees.insert(Variable::x(i, j as u16 + 1), unit(n, j));
            }
        }
        g
    }

    pub fn with_variable(mut self, v: Variable, degree: Vec<i64>) -> Self {
        assert_eq!(degree.len(), self.n, "degree vector length");
        self.degrees.insert(v, degree);
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_variables(&self) -> usize {
        self.degrees.len()
    }

    pub fn variables(&self) -> impl Iterator<Item = Variable> + '_ {
        self.degrees.keys().copied()
    }

    pub fn contains(&self, v: Variable) -> bool {
        self.degrees.contains_key(&v)
    }

    pub fn degree_of(&self, v: Variable) -> Result<&[i64]> {
        self.degrees
            .get(&v)
            .map(Vec::as_slice)
            .ok_or(Error::UnknownVariable(v))
    }

    pub fn degree_of_monomial(&self, m: &Monomial) -> Result<Vec<i64>> {
        let mut d = vec![0i64; self.n];
        for &(v, e) in m.factors() {
            for (acc, x) in d.iter_mut().zip(self.degree_of(v)?) {
                *acc += x * e as i64;
            }
        }
        Ok(d)
    }

    /// The common degree of all monomials, or `NotHomogeneous`. The zero
    /// polynomial has no degree.
    pub fn multidegree(&self, p: &Polynomial) -> Result<Option<Vec<i64>>> {
        let mut deg = None;
        for m in p.monomials() {
            let d = self.degree_of_monomial(m)?;
            match &deg {
                None => deg = Some(d),
                Some(e) if *e == d => {}
                Some(_) => return Err(Error::NotHomogeneous),
            }
        }
        Ok(deg)
    }

    pub fn is_homogeneous(&self, p: &Polynomial) -> bool {
        self.multidegree(p).is_ok()
    }

    /// Variables of degree `e_j` (0-based `j`), in row order.
    pub fn column_variables(&self, j: usize) -> Vec<Variable> {
        let e = unit(self.n, j);
        self.degrees
            .iter()
            .filter(|(_, d)| **d == e)
            .map(|(v, _)| *v)
            .collect()
    }

    /// Whether every variable has a unit-vector degree.
    pub fn is_standard(&self) -> bool {
        self.degrees
            .values()
            .all(|d| d.iter().filter(|&&x| x == 1).count() == 1 && d.iter().all(|&x| x == 0 || x == 1))
    }

    /// `m_j + 1`: number of variables in column `j` (0-based).
    pub fn column_size(&self, j: usize) -> usize {
        self.column_variables(j).len()
    }
}

pub(crate) fn unit(n: usize, j: usize) -> Vec<i64> {
    let mut e = vec![0; n];
    e[j] = 1;
    e
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_degrees() {
        let g = Grading::grid(0..=2, 3);
        let m = Monomial::from_pairs([(Variable::x(1, 1), 1), (Variable::x(1, 2), 1)]);
        assert_eq!(g.degree_of_monomial(&m).unwrap(), vec![1, 1, 0]);
        assert_eq!(g.degree_of_monomial(&Monomial::one()).unwrap(), vec![0, 0, 0]);
        let m = Monomial::from_pairs([(Variable::x(1, 1), 2), (Variable::x(0, 3), 1)]);
        assert_eq!(g.degree_of_monomial(&m).unwrap(), vec![2, 0, 1]);
    }

    #[test]
    fn unknown_variable_is_rejected() {
        let g = Grading::grid(1..=2, 2);
        let m = Monomial::var(Variable::x(3, 1));
        assert_eq!(g.degree_of_monomial(&m), Err(Error::UnknownVariable(Variable::x(3, 1))));
    }

    #[test]
    fn homogeneity() {
        let g = Grading::grid(1..=2, 2);
        let minor = Polynomial::var(Variable::x(1, 1)) * Polynomial::var(Variable::x(2, 2))
            - Polynomial::var(Variable::x(1, 2)) * Polynomial::var(Variable::x(2, 1));
        assert_eq!(g.multidegree(&minor).unwrap(), Some(vec![1, 1]));
        let bad = Polynomial::var(Variable::x(1, 1)) + Polynomial::var(Variable::x(1, 2));
        assert!(!g.is_homogeneous(&bad));
        assert_eq!(g.column_variables(1), vec![Variable::x(1, 2), Variable::x(2, 2)]);
    }
}
