//! Symmetric polynomials in `Z(1..=n)`: complete homogeneous and monomial
//! symmetric polynomials, Schur polynomials via Jacobi–Trudi, and Kostka
//! numbers via semistandard tableaux.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::{det, Monomial, Polynomial, Variable};

/// A weakly decreasing sequence of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Validates weak decrease; trailing zeros are dropped.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid(format!("{parts:?} is not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// Sorts an arbitrary composition into a partition.
    pub fn from_composition(parts: &[u32]) -> Self {
        let mut p = parts.to_vec();
        p.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(p).expect("sorted")
    }

    /// `k` repeated `times` times.
    pub fn rectangle(k: u32, times: usize) -> Self {
        Partition::new(vec![k; times]).expect("constant")
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Parts padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Vec<u32> {
        (0..n.max(self.len())).map(|i| self.part(i)).collect()
    }

    /// Dominance order: every prefix sum of `self` is at least that of `other`.
    pub fn dominates(&self, other: &Partition) -> bool {
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0u32, 0u32);
        for i in 0..len {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|p| p.trim())
            .filter(|p| !p.is_empty())
            .map(|p| p.parse::<u32>().map_err(|_| Error::invalid(format!("bad part '{p}'"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `k`, in decreasing lexicographic order.
pub fn partitions(k: u32) -> Vec<Partition> {
    fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, k, &mut Vec::new(), &mut out);
    out
}

fn z(j: u16) -> Variable {
    Variable::Z(j)
}

/// `h_v(Z_first, …, Z_last)`: the sum of all degree-`v` monomials in the window.
///
/// `h_0 = 1` and `h_v = 0` for `v < 0`, also for an empty window.
pub fn complete_homogeneous(v: i64, window: std::ops::RangeInclusive<u16>) -> Polynomial {
    if v < 0 {
        return Polynomial::zero();
    }
    let vars: Vec<u16> = window.collect();
    let mut out = Polynomial::zero();
    fn rec(vars: &[u16], rem: u32, cur: &mut Vec<(Variable, u32)>, out: &mut Polynomial) {
        if vars.len() == 1 {
            cur.push((z(vars[0]), rem));
            out.add_term(Monomial::from_pairs(cur.iter().copied()), BigRational::one());
            cur.pop();
            return;
        }
        for e in 0..=rem {
            cur.push((z(vars[0]), e));
            rec(&vars[1..], rem - e, cur, out);
            cur.pop();
        }
    }
    if vars.is_empty() {
        return if v == 0 { Polynomial::one() } else { Polynomial::zero() };
    }
    rec(&vars, v as u32, &mut Vec::new(), &mut out);
    out
}

/// `m_μ(Z_1, …, Z_n)`: each distinct rearrangement of `μ` once.
pub fn monomial_symmetric(mu: &Partition, n: usize) -> Result<Polynomial> {
    if mu.len() > n {
        return Err(Error::invalid(format!("partition {mu} has more than {n} parts")));
    }
    let mut exps = mu.padded(n);
    exps.sort_unstable();
    let mut out = Polynomial::zero();
    loop {
        out.add_term(Monomial::z_power(&exps), BigRational::one());
        if !next_permutation(&mut exps) {
            break;
        }
    }
    Ok(out)
}

/// Advances to the next lexicographic permutation; false at the last one.
pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Schur polynomial `s_λ(Z_1..Z_n) = det(h_{λ_i - i + j})` (Jacobi–Trudi).
pub fn schur(lambda: &Partition, n: usize) -> Polynomial {
    let r = lambda.len();
    if r == 0 {
        return Polynomial::one();
    }
    let window = 1..=n as u16;
    let mut cache: BTreeMap<i64, Polynomial> = BTreeMap::new();
    let matrix: Vec<Vec<Polynomial>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    let v = lambda.part(i) as i64 - i as i64 + j as i64;
                    cache
                        .entry(v)
                        .or_insert_with(|| complete_homogeneous(v, window.clone()))
                        .clone()
                })
                .collect()
        })
        .collect();
    det(&matrix).expect("square, nonempty")
}

/// A filling of a Young diagram, one row per entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    pub shape: Partition,
    pub rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self.rows.windows(2).all(|pair| {
            pair[1]
                .iter()
                .enumerate()
                .all(|(c, &below)| pair[0].get(c).is_some_and(|&above| above < below))
        });
        rows_ok && cols_ok
    }

    /// Occurrences of `1..=n`.
    pub fn content(&self, n: usize) -> Vec<u32> {
        let mut c = vec![0; n];
        for &e in self.rows.iter().flatten() {
            c[e as usize - 1] += 1;
        }
        c
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.rows.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(u32::to_string).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Depth-first filling in row-major order with column-strictness pruning.
fn fill_ssyt(lambda: &Partition, content: &[u32], max_entry: u32, visit: &mut dyn FnMut(&[Vec<u32>])) {
    let mut remaining: Vec<u32> = (1..=max_entry).map(|v| content.get(v as usize - 1).copied().unwrap_or(0)).collect();
    if content.iter().skip(max_entry as usize).any(|&c| c > 0) {
        return;
    }
    let mut rows: Vec<Vec<u32>> = lambda.parts().iter().map(|&l| Vec::with_capacity(l as usize)).collect();
    fn rec(
        lambda: &Partition,
        row: usize,
        rows: &mut Vec<Vec<u32>>,
        remaining: &mut [u32],
        visit: &mut dyn FnMut(&[Vec<u32>]),
    ) {
        if row == lambda.len() {
            visit(rows);
            return;
        }
        let col = rows[row].len();
        if col == lambda.part(row) as usize {
            rec(lambda, row + 1, rows, remaining, visit);
            return;
        }
        let left = if col > 0 { rows[row][col - 1] } else { 1 };
        let above = if row > 0 { rows[row - 1][col] + 1 } else { 1 };
        for v in left.max(above)..=remaining.len() as u32 {
            if remaining[v as usize - 1] == 0 {
                continue;
            }
            remaining[v as usize - 1] -= 1;
            rows[row].push(v);
            rec(lambda, row, rows, remaining, visit);
            rows[row].pop();
            remaining[v as usize - 1] += 1;
        }
    }
    rec(lambda, 0, &mut rows, &mut remaining, visit);
}

/// All semistandard tableaux of shape `λ` with the given content and entries
/// in `1..=max_entry`, in lexicographic order of their row-major reading.
pub fn enumerate_ssyt(lambda: &Partition, content: &[u32], max_entry: u32) -> Result<Vec<Tableau>> {
    if content.iter().sum::<u32>() != lambda.size() {
        return Err(Error::invalid(format!("content {content:?} does not have size |{lambda}|")));
    }
    let mut out = Vec::new();
    fill_ssyt(lambda, content, max_entry, &mut |rows| {
        out.push(Tableau {
            shape: lambda.clone(),
            rows: rows.to_vec(),
        })
    });
    Ok(out)
}

/// Kostka number `K_{λ,μ}` for a composition `μ`.
pub fn kostka(lambda: &Partition, mu: &[u32]) -> Result<u64> {
    if mu.iter().sum::<u32>() != lambda.size() {
        return Err(Error::invalid(format!("|{lambda}| != |{mu:?}|")));
    }
    let mut count = 0u64;
    fill_ssyt(lambda, mu, mu.len() as u32, &mut |_| count += 1);
    Ok(count)
}

/// Whether `p` is invariant under every transposition `Z_i ↔ Z_{i+1}`, `i < n`,
/// and only involves `Z_1..Z_n`.
pub fn is_symmetric(p: &Polynomial, n: usize) -> bool {
    let in_range = p.variables().iter().all(|v| matches!(v, Variable::Z(j) if (1..=n as u16).contains(j)));
    in_range && (1..n as u16).all(|i| p.swap_variables(z(i), z(i + 1)) == *p)
}

/// Coefficients of a symmetric polynomial in the monomial symmetric basis.
pub fn expand_in_monomial_basis(p: &Polynomial, n: usize) -> Result<BTreeMap<Partition, BigRational>> {
    if !is_symmetric(p, n) {
        return Err(Error::NonSymmetric(n));
    }
    let mut out = BTreeMap::new();
    for (m, c) in p.terms() {
        let e = m.z_exponents(n);
        if e.windows(2).all(|w| w[0] >= w[1]) {
            out.insert(Partition::new(e).expect("decreasing"), c.clone());
        }
    }
    Ok(out)
}

/// `Σ c_μ m_μ(Z_1..Z_n)`.
pub fn from_monomial_basis(coeffs: &BTreeMap<Partition, BigRational>, n: usize) -> Result<Polynomial> {
    let mut out = Polynomial::zero();
    for (mu, c) in coeffs {
        out = out + monomial_symmetric(mu, n)?.scale(c);
    }
    Ok(out)
}

/// Renders a monomial-basis expansion as `m_{3311} + 2*m_{2222}`, largest
/// partition first.
pub fn format_monomial_basis(coeffs: &BTreeMap<Partition, BigRational>) -> String {
    if coeffs.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (mu, c)) in coeffs.iter().rev().enumerate() {
        let name = format!("m_({mu})");
        let neg = c < &BigRational::from_integer(0.into());
        let a = if neg { -c.clone() } else { c.clone() };
        if k > 0 {
            out.push_str(if neg { " - " } else { " + " });
        } else if neg {
            out.push('-');
        }
        if a.is_one() {
            out.push_str(&name);
        } else {
            out.push_str(&format!("{a}*{name}"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{binomial, parse_polynomial, rat};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn complete_homogeneous_small() {
        assert_eq!(complete_homogeneous(0, 3..=5), Polynomial::one());
        assert_eq!(complete_homogeneous(-1, 1..=2), Polynomial::zero());
        assert_eq!(
            complete_homogeneous(2, 1..=2),
            parse_polynomial("Z(1)^2 + Z(1)*Z(2) + Z(2)^2").unwrap()
        );
    }

    /// Counts vectors in N^k summing to v by brute force over a box.
    fn stars_and_bars_oracle(v: u32, k: usize) -> usize {
        let mut count = 0;
        let mut e = vec![0u32; k];
        loop {
            if e.iter().sum::<u32>() == v {
                count += 1;
            }
            let mut i = 0;
            while i < k {
                e[i] += 1;
                if e[i] <= v {
                    break;
                }
                e[i] = 0;
                i += 1;
            }
            if i == k {
                return count;
            }
        }
    }

    #[test]
    fn complete_homogeneous_term_count() {
        for k in 1..=4u16 {
            for v in 0..=5u32 {
                let h = complete_homogeneous(v as i64, 1..=k);
                assert_eq!(h.num_terms(), stars_and_bars_oracle(v, k as usize));
                assert_eq!(binomial(v as i64 + k as i64 - 1, v as i64), (h.num_terms() as i64).into());
            }
        }
    }

    #[test]
    fn monomial_symmetric_small() {
        assert_eq!(monomial_symmetric(&p("1,1"), 2).unwrap(), parse_polynomial("Z(1)*Z(2)").unwrap());
        assert_eq!(
            monomial_symmetric(&p("2"), 3).unwrap(),
            parse_polynomial("Z(1)^2+Z(2)^2+Z(3)^2").unwrap()
        );
        assert_eq!(monomial_symmetric(&p("2,1"), 3).unwrap().num_terms(), 6);
        assert!(monomial_symmetric(&p("1,1,1"), 2).is_err());
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur(&p("1"), 4), parse_polynomial("Z(1)+Z(2)+Z(3)+Z(4)").unwrap());
        let s22 = schur(&p("2,2"), 4);
        let expected = monomial_symmetric(&p("2,2"), 4).unwrap()
            + monomial_symmetric(&p("2,1,1"), 4).unwrap()
            + monomial_symmetric(&p("1,1,1,1"), 4).unwrap().scale(&rat(2));
        assert_eq!(s22, expected);
        let exp = expand_in_monomial_basis(&s22, 4).unwrap();
        assert_eq!(exp.len(), 3);
        assert_eq!(exp[&p("2,2")], rat(1));
        assert_eq!(exp[&p("2,1,1")], rat(1));
        assert_eq!(exp[&p("1,1,1,1")], rat(2));
        assert_eq!(format_monomial_basis(&exp), "m_(2,2) + m_(2,1,1) + 2*m_(1,1,1,1)");
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka(&p("2,2"), &[1, 1, 1, 1]).unwrap(), 2);
        assert_eq!(kostka(&p("2,2"), &[3, 1]).unwrap(), 0);
        assert!(kostka(&p("2,2"), &[3]).is_err());
        for lam in partitions(5) {
            assert_eq!(kostka(&lam, lam.parts()).unwrap(), 1);
        }
        let ts = enumerate_ssyt(&p("2,2"), &[1, 1, 1, 1], 4).unwrap();
        let rows: Vec<_> = ts.iter().map(|t| t.rows.clone()).collect();
        assert_eq!(rows, vec![vec![vec![1, 2], vec![3, 4]], vec![vec![1, 3], vec![2, 4]]]);
        let single = enumerate_ssyt(&p("4"), &[4], 1).unwrap();
        assert_eq!(single.len(), 1);
        assert_eq!(single[0].rows, vec![vec![1, 1, 1, 1]]);
        assert_eq!(ts[0].to_string(), "1 2\n3 4");
    }

    #[test]
    fn expansion_examples() {
        let m = monomial_symmetric(&p("3,1"), 3).unwrap();
        let e = expand_in_monomial_basis(&m, 3).unwrap();
        assert_eq!(e.into_iter().collect::<Vec<_>>(), vec![(p("3,1"), rat(1))]);
        let h2 = complete_homogeneous(2, 1..=2);
        let e = expand_in_monomial_basis(&h2, 2).unwrap();
        assert_eq!(e.into_iter().collect::<Vec<_>>(), vec![(p("1,1"), rat(1)), (p("2"), rat(1))]);
        assert_eq!(
            expand_in_monomial_basis(&parse_polynomial("Z(1)^2").unwrap(), 2),
            Err(Error::NonSymmetric(2))
        );
    }

    /// All fillings with entries 1..=n, filtered to semistandard ones.
    fn brute_force_ssyt_sum(lambda: &Partition, n: u32) -> Polynomial {
        let cells = lambda.size() as usize;
        let mut digits = vec![1u32; cells];
        let mut out = Polynomial::zero();
        loop {
            let mut rows = Vec::new();
            let mut k = 0;
            for &l in lambda.parts() {
                rows.push(digits[k..k + l as usize].to_vec());
                k += l as usize;
            }
            let t = Tableau {
                shape: lambda.clone(),
                rows,
            };
            if t.is_semistandard() {
                out.add_term(Monomial::z_power(&t.content(n as usize)), rat(1));
            }
            let mut i = 0;
            while i < cells {
                digits[i] += 1;
                if digits[i] <= n {
                    break;
                }
                digits[i] = 1;
                i += 1;
            }
            if i == cells {
                return out;
            }
        }
    }

    #[test]
    fn schur_equals_tableau_sum() {
        for size in 1..=6 {
            for lam in partitions(size) {
                for n in 1..=4usize {
                    if lam.len() > n && size > 4 {
                        continue;
                    }
                    assert_eq!(schur(&lam, n), brute_force_ssyt_sum(&lam, n as u32), "λ={lam} n={n}");
                }
            }
        }
    }

    #[test]
    fn schur_is_symmetric_and_kostka_expands_it() {
        for size in 1..=6 {
            for lam in partitions(size) {
                for n in 1..=4usize {
                    let s = schur(&lam, n);
                    assert!(is_symmetric(&s, n));
                    let mut sum = Polynomial::zero();
                    for mu in partitions(size).into_iter().filter(|mu| mu.len() <= n) {
                        let k = kostka(&lam, mu.parts()).unwrap();
                        sum = sum + monomial_symmetric(&mu, n).unwrap().scale(&rat(k as i64));
                    }
                    assert_eq!(s, sum, "λ={lam} n={n}");
                }
            }
        }
    }

    #[test]
    fn kostka_positivity_is_dominance() {
        for size in 1..=6 {
            for lam in partitions(size) {
                for mu in partitions(size) {
                    let k = kostka(&lam, mu.parts()).unwrap();
                    assert_eq!(k > 0, lam.dominates(&mu), "λ={lam} μ={mu}");
                }
            }
        }
    }

    #[test]
    fn kostka_is_invariant_under_content_permutation() {
        let lam = p("3,2,1");
        let mut content = vec![1, 1, 2, 2];
        let base = enumerate_ssyt(&lam, &content, 4).unwrap().len();
        assert_eq!(base as u64, kostka(&lam, &[2, 2, 1, 1]).unwrap());
        while next_permutation(&mut content) {
            assert_eq!(enumerate_ssyt(&lam, &content, 4).unwrap().len(), base);
        }
    }

    #[test]
    fn partition_parsing_and_dominance() {
        assert_eq!(p("2,2,0").parts(), &[2, 2]);
        assert!("1,2".parse::<Partition>().is_err());
        assert!(p("3,1").dominates(&p("2,2")));
        assert!(!p("2,2").dominates(&p("3,1")));
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(p("2,1,1").to_string(), "2,1,1");
    }
}
