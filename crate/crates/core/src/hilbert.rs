//! Multigraded Hilbert functions, K-polynomials and (dual) multidegrees of
//! monomial ideals and their simplicial complexes.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::{binomial, rat, Grading, Monomial, Polynomial, Variable};

/// A finitely generated monomial ideal, kept minimally generated and sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct MonomialIdeal {
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(gens: impl IntoIterator<Item = Monomial>) -> Self {
        let mut gens: Vec<Monomial> = gens.into_iter().collect();
        gens.sort_by_key(|m| m.total_degree());
        gens.dedup();
        let mut min: Vec<Monomial> = Vec::new();
        for g in gens {
            if !min.iter().any(|h| h.divides(&g)) {
                min.push(g);
            }
        }
        min.sort();
        MonomialIdeal { generators: min }
    }

    pub fn zero() -> Self {
        MonomialIdeal::default()
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(Monomial::is_squarefree)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    pub fn add(&self, m: &Monomial) -> MonomialIdeal {
        MonomialIdeal::new(self.generators.iter().cloned().chain([m.clone()]))
    }

    /// `J : m`.
    pub fn colon(&self, m: &Monomial) -> MonomialIdeal {
        MonomialIdeal::new(self.generators.iter().map(|g| g.colon(m)))
    }

    pub fn variables(&self) -> Vec<Variable> {
        let mut v: Vec<Variable> = self.generators.iter().flat_map(|g| g.variables()).collect();
        v.sort();
        v.dedup();
        v
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "[{}]", gens.join(", "))
    }
}

/// A simplicial complex on a vertex set of at most 64 variables; faces are
/// bitmasks over `vertices`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<Variable>,
    facets: Vec<u64>,
}

fn is_subset(a: u64, b: u64) -> bool {
    a & !b == 0
}

impl SimplicialComplex {
    /// Keeps only the inclusion-maximal facets.
    pub fn from_facets(vertices: Vec<Variable>, facets: &[Vec<Variable>]) -> Result<Self> {
        if vertices.len() > 64 {
            return Err(Error::invalid("at most 64 vertices are supported"));
        }
        let index: HashMap<Variable, usize> = vertices.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let mut masks = Vec::new();
        for f in facets {
            let mut mask = 0u64;
            for v in f {
                let k = index.get(v).ok_or(Error::UnknownVariable(*v))?;
                mask |= 1 << k;
            }
            masks.push(mask);
        }
        Ok(SimplicialComplex {
            vertices,
            facets: maximal(masks),
        })
    }

    /// Stanley–Reisner complex of a squarefree monomial ideal on `vertices`.
    pub fn from_ideal(ideal: &MonomialIdeal, vertices: Vec<Variable>) -> Result<Self> {
        if !ideal.is_squarefree() {
            return Err(Error::invalid("Stanley–Reisner complexes need a squarefree ideal"));
        }
        if vertices.len() > 64 {
            return Err(Error::invalid("at most 64 vertices are supported"));
        }
        let index: HashMap<Variable, usize> = vertices.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let mut nonfaces = Vec::new();
        for g in ideal.generators() {
            let mut mask = 0u64;
            for v in g.variables() {
                mask |= 1 << index.get(&v).ok_or(Error::UnknownVariable(v))?;
            }
            nonfaces.push(mask);
        }
        // include/exclude search; a leaf is a facet when no excluded vertex fits
        let n = vertices.len();
        let mut facets = Vec::new();
        fn rec(k: usize, n: usize, cur: u64, nonfaces: &[u64], out: &mut Vec<u64>) {
            if k == n {
                let addable = (0..n).any(|v| cur & (1 << v) == 0 && nonfaces.iter().all(|&g| !is_subset(g, cur | 1 << v)));
                if !addable {
                    out.push(cur);
                }
                return;
            }
            let with = cur | 1 << k;
            if nonfaces.iter().all(|&g| !is_subset(g, with)) {
                rec(k + 1, n, with, nonfaces, out);
            }
            rec(k + 1, n, cur, nonfaces, out);
        }
        if nonfaces.contains(&0) {
            // the unit ideal: the void complex
            return Ok(SimplicialComplex { vertices, facets: Vec::new() });
        }
        rec(0, n, 0, &nonfaces, &mut facets);
        Ok(SimplicialComplex {
            vertices,
            facets: maximal(facets),
        })
    }

    pub fn vertices(&self) -> &[Variable] {
        &self.vertices
    }

    fn to_face(&self, mask: u64) -> Vec<Variable> {
        (0..self.vertices.len()).filter(|k| mask & (1 << k) != 0).map(|k| self.vertices[k]).collect()
    }

    pub fn facets(&self) -> Vec<Vec<Variable>> {
        self.facets.iter().map(|&f| self.to_face(f)).collect()
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].count_ones() == w[1].count_ones())
    }

    /// Every face, each once. Exponential in the facet size.
    pub fn faces(&self) -> Vec<Vec<Variable>> {
        let mut seen = HashSet::new();
        for &f in &self.facets {
            let mut sub = f;
            loop {
                seen.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f;
            }
        }
        let mut masks: Vec<u64> = seen.into_iter().collect();
        masks.sort_unstable();
        masks.into_iter().map(|m| self.to_face(m)).collect()
    }

    /// Faces meeting every column.
    pub fn relevant_faces(&self, grading: &Grading) -> Result<Vec<Vec<Variable>>> {
        let mut out = Vec::new();
        for f in self.faces() {
            if column_counts(&f, grading)?.iter().all(|&c| c > 0) {
                out.push(f);
            }
        }
        Ok(out)
    }

    /// The squarefree monomial ideal whose complex this is.
    pub fn stanley_reisner_ideal(&self) -> MonomialIdeal {
        let n = self.vertices.len();
        let is_face = |m: u64| self.facets.iter().any(|&f| is_subset(m, f));
        // minimal nonfaces have every proper subset a face; search by size
        let mut gens = Vec::new();
        for v in 0..n {
            if !is_face(1 << v) {
                gens.push(1u64 << v);
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                let m = 1 << a | 1 << b;
                if !is_face(m) && is_face(1 << a) && is_face(1 << b) {
                    gens.push(m);
                }
            }
        }
        // larger minimal nonfaces: extend faces by one vertex
        let mut frontier: Vec<u64> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| 1u64 << a | 1 << b))
            .filter(|&m| is_face(m))
            .collect();
        while !frontier.is_empty() {
            let mut next = HashSet::new();
            for &f in &frontier {
                let top = 63 - f.leading_zeros() as usize;
                for v in top + 1..n {
                    let m = f | 1 << v;
                    if is_face(m) {
                        next.insert(m);
                    } else if (0..n).filter(|&u| m & (1 << u) != 0).all(|u| is_face(m & !(1 << u))) {
                        gens.push(m);
                    }
                }
            }
            frontier = next.into_iter().collect();
        }
        MonomialIdeal::new(gens.into_iter().map(|m| {
            Monomial::from_pairs(self.to_face(m).into_iter().map(|v| (v, 1)))
        }))
    }
}

fn maximal(mut masks: Vec<u64>) -> Vec<u64> {
    masks.sort_unstable_by_key(|m| std::cmp::Reverse(m.count_ones()));
    masks.dedup();
    let mut out: Vec<u64> = Vec::new();
    for m in masks {
        if !out.iter().any(|&f| is_subset(m, f)) {
            out.push(m);
        }
    }
    out.sort_unstable();
    out
}

/// `c_j(F)`: the number of vertices of `F` in column `j`, for a standard grading.
pub fn column_counts(face: &[Variable], grading: &Grading) -> Result<Vec<u32>> {
    let mut c = vec![0u32; grading.n()];
    for &v in face {
        for (cj, &d) in c.iter_mut().zip(grading.degree_of(v)?) {
            *cj += d as u32;
        }
    }
    Ok(c)
}

/// `HF(S/J, a) = Σ_{F relevant} ∏_j C(a_j − 1, c_j(F) − 1)` for `a ∈ N_+^n`.
pub fn hf_complex(complex: &SimplicialComplex, grading: &Grading, a: &[i64]) -> Result<BigUint> {
    if a.len() != grading.n() || a.iter().any(|&x| x <= 0) {
        return Err(Error::invalid(format!("degree {a:?} must be strictly positive of length {}", grading.n())));
    }
    let mut total = BigUint::zero();
    for f in complex.relevant_faces(grading)? {
        let c = column_counts(&f, grading)?;
        let mut prod = BigUint::one();
        for (&aj, &cj) in a.iter().zip(&c) {
            // C(x, −1) = 0 by convention
            let b = binomial(aj - 1, cj as i64 - 1);
            prod *= b.to_biguint().expect("nonnegative");
        }
        total += prod;
    }
    Ok(total)
}

/// Multidegree data `Deg = Σ_b e_b Z^b`, homogeneous of total degree `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultidegreeData {
    pub degree_poly: Polynomial,
    pub e: BTreeMap<Vec<u32>, u64>,
    pub d: u32,
}

impl MultidegreeData {
    /// Validates homogeneity and nonnegative integral coefficients.
    pub fn from_polynomial(p: Polynomial, n: usize) -> Result<Self> {
        let mut e = BTreeMap::new();
        let mut d = None;
        for (m, c) in p.terms() {
            if m.variables().any(|v| !matches!(v, Variable::Z(j) if (1..=n as u16).contains(&j))) {
                return Err(Error::invalid(format!("{m} is not a monomial in Z(1..{n})")));
            }
            let coeff = (c.is_integer() && c.numer() > &0.into())
                .then(|| c.numer().to_u64())
                .flatten()
                .ok_or_else(|| Error::invalid(format!("coefficient {c} is not a positive integer")))?;
            if *d.get_or_insert(m.total_degree()) != m.total_degree() {
                return Err(Error::NotHomogeneous);
            }
            e.insert(m.z_exponents(n), coeff);
        }
        Ok(MultidegreeData {
            degree_poly: p,
            e,
            d: d.unwrap_or(0),
        })
    }

    pub fn coefficient(&self, b: &[u32]) -> u64 {
        self.e.get(b).copied().unwrap_or(0)
    }
}

/// `Σ_{F facet, relevant} Z^{c(F) − (1,…,1)}` for a pure complex.
pub fn multidegree_complex(complex: &SimplicialComplex, grading: &Grading) -> Result<MultidegreeData> {
    if !complex.is_pure() {
        return Err(Error::invalid("the complex is not pure"));
    }
    let mut p = Polynomial::zero();
    let mut relevant = 0;
    for f in complex.facets() {
        let c = column_counts(&f, grading)?;
        if c.iter().all(|&x| x > 0) {
            relevant += 1;
            let b: Vec<u32> = c.iter().map(|&x| x - 1).collect();
            p.add_term(Monomial::z_power(&b), rat(1));
        }
    }
    if relevant == 0 {
        return Err(Error::invalid("no facet is relevant"));
    }
    MultidegreeData::from_polynomial(p, grading.n())
}

fn z_degree(grading: &Grading, m: &Monomial) -> Result<Monomial> {
    let d = grading.degree_of_monomial(m)?;
    if d.iter().any(|&x| x < 0) {
        return Err(Error::invalid("K-polynomials need nonnegative degrees"));
    }
    Ok(Monomial::z_power(&d.iter().map(|&x| x as u32).collect::<Vec<_>>()))
}

/// The K-polynomial `K_{S/J} = HS(S/J) · ∏_j (1 − Z_j)^{m_j+1}`.
///
/// Pivots on the variable occurring in the most generators:
/// `K(J) = K(J + (x)) + Z^{deg x} · K(J : x)`. Base case: pairwise coprime
/// generators, `K = ∏ (1 − Z^{deg g})`.
pub fn hs_numerator(ideal: &MonomialIdeal, grading: &Grading) -> Result<Polynomial> {
    for v in ideal.variables() {
        grading.degree_of(v)?;
    }
    let mut memo = HashMap::new();
    k_rec(ideal, grading, &mut memo)
}

fn k_rec(ideal: &MonomialIdeal, grading: &Grading, memo: &mut HashMap<MonomialIdeal, Polynomial>) -> Result<Polynomial> {
    if let Some(k) = memo.get(ideal) {
        return Ok(k.clone());
    }
    let gens = ideal.generators();
    let mut counts: BTreeMap<Variable, usize> = BTreeMap::new();
    for g in gens {
        for v in g.variables() {
            *counts.entry(v).or_default() += 1;
        }
    }
    let pivot = counts.iter().filter(|(_, &c)| c > 1).max_by_key(|(_, &c)| c).map(|(&v, _)| v);
    let k = match pivot {
        None => {
            let mut k = Polynomial::one();
            for g in gens {
                k = k * (Polynomial::one() - Polynomial::from_monomial(z_degree(grading, g)?));
            }
            k
        }
        Some(x) => {
            let xm = Monomial::var(x);
            let plus = k_rec(&ideal.add(&xm), grading, memo)?;
            let colon = k_rec(&ideal.colon(&xm), grading, memo)?;
            plus + colon.mul_monomial(&z_degree(grading, &xm)?)
        }
    };
    memo.insert(ideal.clone(), k.clone());
    Ok(k)
}

/// Lowest-degree component of `K(1 − Z_1, …, 1 − Z_n)`; its coefficients must
/// be nonnegative.
pub fn dual_multidegree(k: &Polynomial) -> Result<Polynomial> {
    if k.is_zero() {
        return Err(Error::invalid("the K-polynomial is zero"));
    }
    let shifted = k.substitute(|v| match v {
        Variable::Z(_) => Some(Polynomial::one() - Polynomial::var(v)),
        _ => None,
    });
    let low = shifted.lowest_component();
    if !low.has_nonnegative_coefficients() {
        return Err(Error::invalid(format!("dual multidegree {low} has a negative coefficient")));
    }
    Ok(low)
}

/// Number of monomials of multidegree `a` outside `J`, by enumeration in a
/// standard grading.
pub fn hf_by_counting(ideal: &MonomialIdeal, grading: &Grading, a: &[i64]) -> Result<BigUint> {
    if !grading.is_standard() {
        return Err(Error::invalid("monomial counting needs a standard grading"));
    }
    if a.len() != grading.n() {
        return Err(Error::invalid("degree has the wrong length"));
    }
    if a.iter().any(|&x| x < 0) {
        return Ok(BigUint::zero());
    }
    let per_column: Vec<Vec<Monomial>> = (0..grading.n())
        .map(|j| monomials_of_degree(&grading.column_variables(j), a[j] as u32))
        .collect();
    let mut count = BigUint::zero();
    let mut idx = vec![0usize; per_column.len()];
    if per_column.iter().any(Vec::is_empty) {
        return Ok(count);
    }
    loop {
        let m = idx
            .iter()
            .enumerate()
            .fold(Monomial::one(), |acc, (j, &k)| acc.mul(&per_column[j][k]));
        if !ideal.contains(&m) {
            count += 1u32;
        }
        let mut j = 0;
        while j < idx.len() {
            idx[j] += 1;
            if idx[j] < per_column[j].len() {
                break;
            }
            idx[j] = 0;
            j += 1;
        }
        if j == idx.len() {
            return Ok(count);
        }
    }
}

/// All `a ∈ N^n` with `|a| ≤ total`, in lexicographic order.
pub fn degree_vectors(n: usize, total: u32) -> Vec<Vec<i64>> {
    fn rec(n: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..=left {
            cur.push(v);
            rec(n, left - v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, total as i64, &mut Vec::new(), &mut out);
    out
}

/// All monomials of total degree `d` in `vars`.
pub fn monomials_of_degree(vars: &[Variable], d: u32) -> Vec<Monomial> {
    fn rec(vars: &[Variable], rem: u32, cur: &mut Vec<(Variable, u32)>, out: &mut Vec<Monomial>) {
        match vars {
            [] => {
                if rem == 0 {
                    out.push(Monomial::from_pairs(cur.iter().copied()));
                }
            }
            [v, rest @ ..] => {
                for e in (0..=rem).rev() {
                    cur.push((*v, e));
                    rec(rest, rem - e, cur, out);
                    cur.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    rec(vars, d, &mut Vec::new(), &mut out);
    out
}

/// `e(M) = Σ_b e_b`.
pub fn ordinary_multiplicity(data: &MultidegreeData) -> u64 {
    data.e.values().sum()
}

pub fn is_multiplicity_free(data: &MultidegreeData) -> bool {
    data.e.values().all(|&c| c <= 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;
    use proptest::prelude::*;

    fn x(i: u16, j: u16) -> Variable {
        Variable::x(i, j)
    }

    fn sq(vs: &[Variable]) -> Monomial {
        Monomial::from_pairs(vs.iter().map(|&v| (v, 1)))
    }

    #[test]
    fn column_count_examples() {
        let g = Grading::grid(1..=2, 2);
        assert_eq!(column_counts(&[], &g).unwrap(), vec![0, 0]);
        assert_eq!(column_counts(&[x(1, 1), x(2, 1), x(1, 2)], &g).unwrap(), vec![2, 1]);
    }

    #[test]
    fn relevant_face_examples() {
        let g = Grading::grid(0..=1, 1);
        let full = SimplicialComplex::from_facets(vec![x(0, 1), x(1, 1)], &[vec![x(0, 1), x(1, 1)]]).unwrap();
        assert_eq!(full.relevant_faces(&g).unwrap().len(), 3);
        for k in 1..6 {
            assert_eq!(hf_complex(&full, &g, &[k]).unwrap(), BigUint::from(k as u64 + 1));
        }
        let g2 = Grading::grid(1..=2, 2);
        let c = SimplicialComplex::from_facets(
            vec![x(1, 1), x(2, 1), x(1, 2), x(2, 2)],
            &[vec![x(1, 1), x(2, 1)], vec![x(2, 1), x(2, 2)]],
        )
        .unwrap();
        assert_eq!(c.relevant_faces(&g2).unwrap(), vec![vec![x(2, 1), x(2, 2)]]);
    }

    #[test]
    fn irrelevant_complex_has_zero_hf() {
        let g = Grading::grid(1..=2, 2);
        let verts: Vec<Variable> = g.variables().collect();
        let unit = MonomialIdeal::new(verts.iter().map(|&v| Monomial::var(v)));
        let void = SimplicialComplex::from_ideal(&unit, verts).unwrap();
        assert_eq!(void.faces(), vec![Vec::<Variable>::new()]);
        assert_eq!(hf_complex(&void, &g, &[2, 3]).unwrap(), BigUint::zero());
    }

    #[test]
    fn multidegree_examples() {
        let g = Grading::grid(1..=2, 2);
        let c = SimplicialComplex::from_facets(g.variables().collect(), &[vec![x(1, 1), x(2, 1), x(1, 2)]]).unwrap();
        let d = multidegree_complex(&c, &g).unwrap();
        assert_eq!(d.degree_poly, parse_polynomial("Z(1)").unwrap());
        assert_eq!(ordinary_multiplicity(&d), 1);
        let bad = SimplicialComplex::from_facets(g.variables().collect(), &[vec![x(1, 1), x(2, 1)]]).unwrap();
        assert!(multidegree_complex(&bad, &g).is_err());
        let impure = SimplicialComplex::from_facets(
            g.variables().collect(),
            &[vec![x(1, 1), x(2, 1), x(1, 2)], vec![x(2, 2), x(2, 1)]],
        )
        .unwrap();
        assert!(multidegree_complex(&impure, &g).is_err());
    }

    #[test]
    fn k_polynomial_examples() {
        let g = Grading::grid(0..=0, 1);
        assert_eq!(hs_numerator(&MonomialIdeal::zero(), &g).unwrap(), Polynomial::one());
        let j = MonomialIdeal::new([Monomial::var(x(0, 1))]);
        let k = hs_numerator(&j, &g).unwrap();
        assert_eq!(k, parse_polynomial("1 - Z(1)").unwrap());
        assert_eq!(dual_multidegree(&k).unwrap(), parse_polynomial("Z(1)").unwrap());

        let g2 = Grading::grid(0..=0, 2);
        let j = MonomialIdeal::new([sq(&[x(0, 1), x(0, 2)])]);
        let k = hs_numerator(&j, &g2).unwrap();
        assert_eq!(k, parse_polynomial("1 - Z(1)*Z(2)").unwrap());
        assert_eq!(dual_multidegree(&k).unwrap(), parse_polynomial("Z(1) + Z(2)").unwrap());
        assert!(dual_multidegree(&Polynomial::zero()).is_err());
    }

    #[test]
    fn multiplicity_free_conventions() {
        let zero = MultidegreeData::from_polynomial(Polynomial::zero(), 2).unwrap();
        assert!(is_multiplicity_free(&zero));
        let two = MultidegreeData::from_polynomial(parse_polynomial("2*Z(1)*Z(2) + Z(1)^2").unwrap(), 2).unwrap();
        assert!(!is_multiplicity_free(&two));
        assert_eq!(ordinary_multiplicity(&two), 3);
        assert!(MultidegreeData::from_polynomial(parse_polynomial("Z(1) + Z(2)^2").unwrap(), 2).is_err());
        assert!(MultidegreeData::from_polynomial(parse_polynomial("-Z(1)").unwrap(), 2).is_err());
    }

    #[test]
    fn stanley_reisner_round_trip() {
        let g = Grading::grid(1..=2, 3);
        let verts: Vec<Variable> = g.variables().collect();
        let j = MonomialIdeal::new([sq(&[x(1, 1), x(2, 2)]), sq(&[x(1, 2), x(2, 3), x(1, 3)]), sq(&[x(2, 1)])]);
        let c = SimplicialComplex::from_ideal(&j, verts).unwrap();
        assert_eq!(c.stanley_reisner_ideal(), j);
    }

    /// Expands `K / ∏(1−Z_j)^{m_j+1}` at degree `a`.
    fn series_coefficient(k: &Polynomial, grading: &Grading, a: &[i64]) -> BigUint {
        let mut total = num_bigint::BigInt::zero();
        for (m, c) in k.terms() {
            let b = m.z_exponents(grading.n());
            let mut prod = num_bigint::BigInt::one();
            for j in 0..grading.n() {
                let s = grading.column_size(j) as i64;
                let r = a[j] - b[j] as i64;
                prod *= binomial(r + s - 1, s - 1);
            }
            assert!(c.is_integer());
            total += prod * c.numer();
        }
        total.to_biguint().expect("nonnegative")
    }

    fn arb_ideal(rows: u16, cols: u16, max_exp: u32) -> impl Strategy<Value = MonomialIdeal> {
        let nv = (rows * cols) as usize;
        proptest::collection::vec(proptest::collection::vec(0..=max_exp, nv), 0..5).prop_map(move |gens| {
            MonomialIdeal::new(gens.into_iter().filter(|e| e.iter().any(|&x| x > 0)).map(|e| {
                Monomial::from_pairs(e.into_iter().enumerate().map(|(k, x)| {
                    (Variable::x(k as u16 / cols + 1, k as u16 % cols + 1), x)
                }))
            }))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn hf_complex_matches_counting(j in arb_ideal(2, 3, 1)) {
            let g = Grading::grid(1..=2, 3);
            let c = SimplicialComplex::from_ideal(&j, g.variables().collect()).unwrap();
            for a1 in 1..=4 {
                for a2 in 1..=4 {
                    for a3 in 1..=4 {
                        let a = [a1, a2, a3];
                        prop_assert_eq!(hf_complex(&c, &g, &a).unwrap(), hf_by_counting(&j, &g, &a).unwrap());
                    }
                }
            }
        }

        #[test]
        fn k_polynomial_matches_counting(j in arb_ideal(2, 2, 2)) {
            let g = Grading::grid(1..=2, 2);
            let k = hs_numerator(&j, &g).unwrap();
            for a1 in 0..=4 {
                for a2 in 0..=4 {
                    let a = [a1, a2];
                    prop_assert_eq!(series_coefficient(&k, &g, &a), hf_by_counting(&j, &g, &a).unwrap());
                }
            }
        }

        #[test]
        fn dual_multidegree_is_nonnegative(j in arb_ideal(2, 2, 2)) {
            prop_assume!(!j.is_zero());
            let g = Grading::grid(1..=2, 2);
            let k = hs_numerator(&j, &g).unwrap();
            prop_assert!(dual_multidegree(&k).is_ok());
        }
    }
}
