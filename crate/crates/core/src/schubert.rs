//! Schubert determinantal combinatorics in the transposed convention: the
//! permutation matrix has its ones at `(ω_ℓ, ℓ)`, so `r_ω(i,j)` counts the
//! `ℓ ≤ j` with `ω_ℓ ≤ i`, and `I_ω` is generated by the
//! `(r_ω(i,j)+1)`-minors of the northwest `i × j` submatrix of `X = (x(i,j))`.
//!
//! With this convention and the column grading `deg x(i,j) = e_j`, the dual
//! multidegree of `S/I_ω` is the divided-difference Schubert polynomial
//! `𝔖_ω(Z_1, …, Z_n)` of `ω` itself, obtained from
//! `𝔖_{w_0} = Z_1^{n−1} Z_2^{n−2} ⋯ Z_{n−1}` by `𝔖_{w s_i} = ∂_i 𝔖_w`
//! whenever `w_i > w_{i+1}`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::groebner::{buchberger, GroebnerBasis, IdealPresentation};
use crate::hilbert::{dual_multidegree, hs_numerator, MonomialIdeal};
use crate::poly::{minors, Grading, Monomial, Polynomial, TermOrder, Variable};
use crate::symfunc::next_permutation;

/// Patterns whose avoidance characterises Cartwright–Sturmfels Schubert ideals.
pub const CS_PATTERNS: [&str; 12] = [
    "12543", "13254", "13524", "13542", "21543", "125364", "125634", "215364", "215634", "315264", "315624", "315642",
];

/// Patterns whose avoidance characterises when the CDG generators are a
/// diagonal Gröbner basis.
pub const CDG_PATTERNS: [&str; 8] = ["13254", "21543", "214635", "215364", "215634", "241635", "315264", "4261735"];

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u16>);

impl Permutation {
    pub fn new(word: Vec<u16>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &w in &word {
            if w == 0 || w as usize > n || seen[w as usize] {
                return Err(Error::invalid(format!("{word:?} is not a permutation of 1..={n}")));
            }
            seen[w as usize] = true;
        }
        Ok(Permutation(word))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u16).collect())
    }

    /// `n, n−1, …, 1`.
    pub fn longest(n: usize) -> Self {
        Permutation((1..=n as u16).rev().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn word(&self) -> &[u16] {
        &self.0
    }

    /// `ω_i`, 1-based.
    pub fn at(&self, i: usize) -> u16 {
        self.0[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (k, &w) in self.0.iter().enumerate() {
            inv[w as usize - 1] = k as u16 + 1;
        }
        Permutation(inv)
    }

    pub fn inversions(&self) -> usize {
        let w = &self.0;
        (0..w.len()).map(|a| (a + 1..w.len()).filter(|&b| w[a] > w[b]).count()).sum()
    }

    /// Swaps positions `i` and `i + 1` (1-based).
    pub fn swap_adjacent(&self, i: usize) -> Permutation {
        let mut w = self.0.clone();
        w.swap(i - 1, i);
        Permutation(w)
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut w: Vec<u16> = (1..=n as u16).collect();
        let mut out = vec![Permutation(w.clone())];
        while next_permutation(&mut w) {
            out.push(Permutation(w.clone()));
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u16::to_string).collect();
        if self.len() <= 9 {
            write!(f, "{}", parts.concat())
        } else {
            write!(f, "{}", parts.join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Digit strings (`n ≤ 9`) or comma-separated words.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let word: Vec<u16> = if s.contains(',') {
            s.split(',')
                .map(|p| p.trim().parse::<u16>().map_err(|_| Error::invalid(format!("bad entry '{p}'"))))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as u16).ok_or_else(|| Error::invalid(format!("bad digit '{c}'"))))
                .collect::<Result<_>>()?
        };
        if word.is_empty() {
            return Err(Error::invalid("empty permutation"));
        }
        Permutation::new(word)
    }
}

/// A cell `(row, column)`, 1-based.
pub type Cell = (u16, u16);

/// `r_ω(i,j) = #{ℓ ≤ j : ω_ℓ ≤ i}`.
pub fn rank_function(w: &Permutation, i: usize, j: usize) -> Result<u32> {
    let n = w.len();
    if i == 0 || j == 0 || i > n || j > n {
        return Err(Error::invalid(format!("({i},{j}) is outside 1..={n}")));
    }
    Ok(w.0[..j].iter().filter(|&&v| v as usize <= i).count() as u32)
}

/// Rank function, diagram and essential set together.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankData {
    /// `r[i-1][j-1] = r_ω(i,j)`.
    pub r: Vec<Vec<u32>>,
    pub diagram: BTreeSet<Cell>,
    pub essential: BTreeSet<Cell>,
}

pub fn rank_data(w: &Permutation) -> RankData {
    let n = w.len();
    let r = (1..=n)
        .map(|i| (1..=n).map(|j| rank_function(w, i, j).expect("in range")).collect())
        .collect();
    RankData {
        r,
        diagram: rothe_diagram(w),
        essential: essential_set(w),
    }
}

/// `D_ω = {(i,j) : ω_j > i, ω^{-1}_i > j}`.
pub fn rothe_diagram(w: &Permutation) -> BTreeSet<Cell> {
    let n = w.len();
    let inv = w.inverse();
    let mut d = BTreeSet::new();
    for i in 1..=n {
        for j in 1..=n {
            if w.at(j) as usize > i && inv.at(i) as usize > j {
                d.insert((i as u16, j as u16));
            }
        }
    }
    d
}

/// Diagram cells with no diagram cell directly below or directly right.
pub fn essential_set(w: &Permutation) -> BTreeSet<Cell> {
    let d = rothe_diagram(w);
    d.iter()
        .copied()
        .filter(|&(i, j)| !d.contains(&(i + 1, j)) && !d.contains(&(i, j + 1)))
        .collect()
}

/// Whether some subsequence of `w` is order-isomorphic to `pattern`.
pub fn contains_pattern(w: &Permutation, pattern: &Permutation) -> Result<bool> {
    if pattern.len() > w.len() {
        return Err(Error::invalid(format!("pattern {pattern} is longer than {w}")));
    }
    fn rec(w: &[u16], p: &[u16], start: usize, chosen: &mut Vec<u16>) -> bool {
        let k = chosen.len();
        if k == p.len() {
            return true;
        }
        // leave room for the remaining pattern entries
        for idx in start..=w.len() - (p.len() - k) {
            let v = w[idx];
            let consistent = chosen.iter().zip(p).all(|(&c, &q)| (c < v) == (q < p[k]));
            if consistent {
                chosen.push(v);
                if rec(w, p, idx + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    Ok(rec(&w.0, &pattern.0, 0, &mut Vec::new()))
}

fn avoids_all(w: &Permutation, patterns: &[&str]) -> bool {
    patterns.iter().all(|p| {
        let p: Permutation = p.parse().expect("pattern table");
        p.len() > w.len() || !contains_pattern(w, &p).expect("length checked")
    })
}

/// Avoids 2143.
pub fn is_vexillary(w: &Permutation) -> bool {
    avoids_all(w, &["2143"])
}

/// Avoids all of [`CS_PATTERNS`].
pub fn is_cs_schubert(w: &Permutation) -> bool {
    avoids_all(w, &CS_PATTERNS)
}

/// Avoids all of [`CDG_PATTERNS`].
pub fn cdg_diagonal_gb_predicted(w: &Permutation) -> bool {
    avoids_all(w, &CDG_PATTERNS)
}

fn x(i: u16, j: u16) -> Polynomial {
    Polynomial::var(Variable::x(i, j))
}

fn push_unique(out: &mut Vec<Polynomial>, p: Polynomial) {
    if !out.contains(&p) {
        out.push(p);
    }
}

/// The `(r_ω(i,j)+1)`-minors of `X_{i×j}` over the essential set.
pub fn schubert_ideal_generators(w: &Permutation) -> Vec<Polynomial> {
    let mut out = Vec::new();
    for (i, j) in essential_set(w) {
        let r = rank_function(w, i as usize, j as usize).expect("cell in range") as usize;
        let sub: Vec<Vec<Polynomial>> = (1..=i).map(|a| (1..=j).map(|b| x(a, b)).collect()).collect();
        for m in minors(&sub, r + 1) {
            push_unique(&mut out, m);
        }
    }
    out
}

/// `Y_ω`: the variables of the union of the essential submatrices, sorted.
pub fn ladder_variables(w: &Permutation) -> Vec<Variable> {
    let mut vars = BTreeSet::new();
    for (i, j) in essential_set(w) {
        for a in 1..=i {
            for b in 1..=j {
                vars.insert(Variable::x(a, b));
            }
        }
    }
    vars.into_iter().collect()
}

/// The zero-region variables `x(i,j)` with `r_ω(i,j) = 0`, followed by the
/// essential minors of `X′` (the matrix with those variables set to zero).
pub fn cdg_generators(w: &Permutation) -> Vec<Polynomial> {
    let data = rank_data(w);
    let n = w.len() as u16;
    let zero = |i: u16, j: u16| data.r[i as usize - 1][j as usize - 1] == 0;
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if zero(i, j) {
                out.push(x(i, j));
            }
        }
    }
    for &(i, j) in &data.essential {
        let r = data.r[i as usize - 1][j as usize - 1] as usize;
        let sub: Vec<Vec<Polynomial>> = (1..=i)
            .map(|a| (1..=j).map(|b| if zero(a, b) { Polynomial::zero() } else { x(a, b) }).collect())
            .collect();
        for m in minors(&sub, r + 1) {
            push_unique(&mut out, m);
        }
    }
    out
}

/// `∂_i f = (f − s_i f) / (Z_i − Z_{i+1})`, termwise.
pub fn divided_difference(f: &Polynomial, i: u16) -> Polynomial {
    let (zi, zj) = (Variable::Z(i), Variable::Z(i + 1));
    let mut out = Polynomial::zero();
    for (m, c) in f.terms() {
        let (a, b) = (m.exponent(zi), m.exponent(zj));
        if a == b {
            continue;
        }
        let rest = Monomial::from_pairs(m.factors().iter().copied().filter(|&(v, _)| v != zi && v != zj));
        // (Z_i^a Z_j^b − Z_i^b Z_j^a)/(Z_i − Z_j) = Σ_{k<a−b} Z_i^{a−1−k} Z_j^{b+k} for a > b
        if a > b {
            for k in 0..a - b {
                out.add_term(rest.mul(&Monomial::from_pairs([(zi, a - 1 - k), (zj, b + k)])), c.clone());
            }
        } else {
            for k in 0..b - a {
                out.add_term(rest.mul(&Monomial::from_pairs([(zi, a + k), (zj, b - 1 - k)])), -c.clone());
            }
        }
    }
    out
}

/// `𝔖_ω(Z_1, …, Z_n)` by divided differences from the longest element.
pub fn schubert_polynomial(w: &Permutation) -> Polynomial {
    let n = w.len();
    // climb from ω to w_0 through ascents, then descend with ∂
    let mut steps = Vec::new();
    let mut cur = w.clone();
    while let Some(i) = (1..n).find(|&i| cur.at(i) < cur.at(i + 1)) {
        steps.push(i as u16);
        cur = cur.swap_adjacent(i);
    }
    let top: Vec<u32> = (0..n).map(|k| (n - 1 - k) as u32).collect();
    let mut p = Polynomial::from_monomial(Monomial::z_power(&top));
    for &i in steps.iter().rev() {
        p = divided_difference(&p, i);
    }
    p
}

/// Coefficient of `Z^b` in `𝔖_ω`, as a rational.
pub fn schubert_coefficient(w: &Permutation, b: &[u32]) -> BigRational {
    schubert_polynomial(w).coeff(&Monomial::z_power(b))
}

/// The lex order with `x(i,j) > x(k,l)` iff `i < k`, or `i = k` and `j < l`.
/// Leading terms of minors are their main diagonals.
pub fn diagonal_order() -> TermOrder {
    TermOrder::lex()
}

/// Lex with rows descending and columns ascending inside a row, so leading
/// terms of minors are their antidiagonals.
pub fn antidiagonal_order(rows: u16, cols: u16) -> TermOrder {
    let priority = (1..=rows)
        .flat_map(|i| (1..=cols).rev().map(move |j| Variable::x(i, j)))
        .collect();
    TermOrder::lex().with_priority(priority)
}

/// `I_ω` in the smallest grid holding its generators and the CDG zero
/// region, with the column grading.
pub fn schubert_ideal(w: &Permutation) -> Result<IdealPresentation> {
    let gens = schubert_ideal_generators(w);
    let (rows, cols) = gens
        .iter()
        .chain(cdg_generators(w).iter())
        .flat_map(|g| g.variables())
        .fold((1, 1), |(r, c), v| match v {
            Variable::X { row, col } => (r.max(row), c.max(col)),
            _ => (r, c),
        });
    IdealPresentation::new(gens, Grading::grid(1..=rows, cols))
}

/// The dual multidegree of `S/I_ω` from the K-polynomial of an initial ideal.
pub fn dual_multidegree_via_groebner(w: &Permutation, order: &TermOrder) -> Result<Polynomial> {
    let ideal = schubert_ideal(w)?;
    if ideal.generators.is_empty() {
        return Ok(Polynomial::one());
    }
    let gb = buchberger(&ideal, order)?;
    dual_multidegree(&hs_numerator(gb.initial_ideal(), &ideal.grading)?)
}

/// Outcome of testing whether the CDG generators form a Gröbner basis of
/// `I_ω` under the diagonal lex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CdgVerdict {
    /// The CDG generators lie in `I_ω` and generate it.
    pub generate: bool,
    /// Their leading terms generate `in(I_ω)`.
    pub leading_terms_match: bool,
    /// `in(I_ω)` is squarefree.
    pub initial_squarefree: bool,
}

impl CdgVerdict {
    pub fn is_groebner_basis(&self) -> bool {
        self.generate && self.leading_terms_match
    }
}

pub fn cdg_groebner_check(w: &Permutation) -> Result<CdgVerdict> {
    let ideal = schubert_ideal(w)?;
    let order = diagonal_order();
    let cdg = cdg_generators(w);
    let gb = buchberger(&ideal, &order)?;
    let cdg_ideal = IdealPresentation::new(cdg.clone(), ideal.grading.clone())?;
    let cdg_gb: GroebnerBasis = buchberger(&cdg_ideal, &order)?;
    let generate = gb.contains_all(&cdg)? && cdg_gb.contains_all(&ideal.generators)?;
    let lead = MonomialIdeal::new(cdg.iter().filter_map(|f| f.leading_monomial(&order).cloned()));
    Ok(CdgVerdict {
        generate,
        leading_terms_match: &lead == gb.initial_ideal(),
        initial_squarefree: gb.initial_ideal().is_squarefree(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, rat};
    use crate::symfunc::is_symmetric;
    use crate::TermOrder;

    use crate::verify::DUAL_214635;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn parsing() {
        assert_eq!(perm("1432").word(), &[1, 4, 3, 2]);
        assert_eq!(perm("2,1,3").word(), &[2, 1, 3]);
        assert!("1224".parse::<Permutation>().is_err());
        assert!("".parse::<Permutation>().is_err());
        assert_eq!(perm("4261735").to_string(), "4261735");
        let long = Permutation::identity(10);
        assert_eq!(long.to_string().parse::<Permutation>().unwrap(), long);
    }

    #[test]
    fn rank_examples() {
        let id = Permutation::identity(4);
        for i in 1..=4 {
            for j in 1..=4 {
                assert_eq!(rank_function(&id, i, j).unwrap(), i.min(j) as u32);
            }
        }
        let w = perm("1432");
        assert_eq!(rank_function(&w, 4, 4).unwrap(), 4);
        assert!(rank_function(&w, 5, 1).is_err());
        // ones of the permutation matrix sit at (ω_ℓ, ℓ)
        for i in 1..=4usize {
            for j in 1..=4usize {
                let brute = (1..=j).filter(|&l| (1..=i).contains(&(w.at(l) as usize))).count();
                assert_eq!(rank_function(&w, i, j).unwrap() as usize, brute);
            }
        }
    }

    #[test]
    fn diagram_1432() {
        let w = perm("1432");
        assert_eq!(rothe_diagram(&w), BTreeSet::from([(2, 2), (2, 3), (3, 2)]));
        assert_eq!(essential_set(&w), BTreeSet::from([(2, 3), (3, 2)]));
        assert!(rothe_diagram(&Permutation::identity(5)).is_empty());
        assert!(essential_set(&Permutation::identity(5)).is_empty());
        assert!(is_vexillary(&w));
        assert!(is_cs_schubert(&w));
    }

    #[test]
    fn diagrams_over_s5() {
        for w in Permutation::all(5) {
            let d = rothe_diagram(&w);
            assert_eq!(d.len(), w.inversions(), "{w}");
            let e = essential_set(&w);
            assert!(e.is_subset(&d));
            let transpose = |s: BTreeSet<Cell>| s.into_iter().map(|(i, j)| (j, i)).collect::<BTreeSet<_>>();
            assert_eq!(transpose(rothe_diagram(&w.inverse())), d);
            assert_eq!(transpose(essential_set(&w.inverse())), e);
        }
    }

    #[test]
    fn patterns() {
        let w = perm("214635");
        assert!(contains_pattern(&w, &perm("1")).unwrap());
        assert!(contains_pattern(&w, &perm("13524")).unwrap());
        assert!(contains_pattern(&perm("241635"), &perm("13524")).unwrap());
        assert!(contains_pattern(&perm("4261735"), &perm("315624")).unwrap());
        assert!(contains_pattern(&perm("12"), &perm("123")).is_err());
        assert!(!contains_pattern(&perm("12345"), &perm("21")).unwrap());
        for w in Permutation::all(3) {
            assert!(is_vexillary(&w));
        }
        assert!(!is_vexillary(&perm("2143")));
        assert!(!is_cs_schubert(&w));
        assert!(cdg_diagonal_gb_predicted(&Permutation::identity(6)));
        assert!(!cdg_diagonal_gb_predicted(&perm("13254")));
    }

    /// Brute force over all index subsets.
    fn contains_oracle(w: &Permutation, p: &Permutation) -> bool {
        let (n, k) = (w.len(), p.len());
        crate::poly::combinations(n, k).iter().any(|idx| {
            (0..k).all(|a| (0..k).all(|b| (w.word()[idx[a]] < w.word()[idx[b]]) == (p.word()[a] < p.word()[b])))
        })
    }

    #[test]
    fn pattern_matching_matches_oracle() {
        let pats: Vec<Permutation> = CS_PATTERNS.iter().chain(&CDG_PATTERNS).map(|s| perm(s)).collect();
        for w in Permutation::all(6) {
            for p in pats.iter().filter(|p| p.len() <= 6) {
                assert_eq!(contains_pattern(&w, p).unwrap(), contains_oracle(&w, p), "{w} {p}");
            }
        }
    }

    #[test]
    fn cs_implies_cdg_on_s7() {
        for w in Permutation::all(7) {
            if is_cs_schubert(&w) {
                assert!(cdg_diagonal_gb_predicted(&w), "{w}");
            }
        }
    }

    #[test]
    fn generators_examples() {
        assert!(schubert_ideal_generators(&Permutation::identity(4)).is_empty());
        assert!(cdg_generators(&Permutation::identity(4)).is_empty());
        let g = schubert_ideal_generators(&perm("1432"));
        let v = |m: u16, n: u16| crate::poly::variable_matrix(m, n);
        let mut expected = minors(&v(2, 3), 2);
        for p in minors(&v(3, 2), 2) {
            if !expected.contains(&p) {
                expected.push(p);
            }
        }
        assert_eq!(g.len(), expected.len());
        assert!(expected.iter().all(|p| g.contains(p)));

        let w = perm("214635");
        let g = schubert_ideal_generators(&w);
        assert!(g.contains(&x(1, 1)));
        assert_eq!(essential_set(&w), BTreeSet::from([(1, 1), (3, 4), (5, 4)]));
        assert_eq!(g.len(), 1 + 4 + 5);
        assert_eq!(ladder_variables(&w).len(), 20);
    }

    #[test]
    fn cdg_generators_214635() {
        let w = perm("214635");
        let data = rank_data(&w);
        let zeros: Vec<Cell> = (1..=6u16)
            .flat_map(|i| (1..=6u16).map(move |j| (i, j)))
            .filter(|&(i, j)| data.r[i as usize - 1][j as usize - 1] == 0)
            .collect();
        assert_eq!(zeros, vec![(1, 1)]);
        let g = cdg_generators(&w);
        assert_eq!(g[0], x(1, 1));
        let no_x11 = |p: &Polynomial| p.variables().iter().all(|&v| v != Variable::x(1, 1));
        assert!(g[1..].iter().all(no_x11));
        assert_eq!(g.len(), 1 + 4 + 5);
        // no zero region: CDG and essential minors coincide
        let w = perm("1432");
        assert_eq!(cdg_generators(&w), schubert_ideal_generators(&w));
    }

    #[test]
    fn schubert_214635_matches_published_value() {
        let s = schubert_polynomial(&perm("214635"));
        assert_eq!(s, parse_polynomial(DUAL_214635).unwrap());
        assert_eq!(s.num_terms(), 16);
        assert_eq!(schubert_coefficient(&perm("214635"), &[2, 1, 1]), rat(2));
    }

    #[test]
    fn divided_difference_matches_division() {
        let f = parse_polynomial("Z(1)^3*Z(2) - 2*Z(2)^2*Z(3) + Z(1)*Z(3)^4 + 5").unwrap();
        for i in 1..=2u16 {
            let sf = f.swap_variables(Variable::Z(i), Variable::Z(i + 1));
            let d = Polynomial::var(Variable::Z(i)) - Polynomial::var(Variable::Z(i + 1));
            let expected = (&f - &sf).div_exact(&d, &TermOrder::lex()).unwrap();
            assert_eq!(divided_difference(&f, i), expected);
        }
    }

    #[test]
    fn schubert_basics() {
        assert_eq!(schubert_polynomial(&Permutation::identity(5)), Polynomial::one());
        assert_eq!(schubert_polynomial(&perm("2134")), parse_polynomial("Z(1)").unwrap());
        assert_eq!(schubert_polynomial(&perm("1324")), parse_polynomial("Z(1)+Z(2)").unwrap());
        // a single descent at position k gives a Schur polynomial in Z_1..Z_k
        assert_eq!(schubert_polynomial(&perm("1423")), crate::symfunc::complete_homogeneous(2, 1..=2));
        assert!(is_symmetric(&schubert_polynomial(&perm("2413")), 2));
        for w in Permutation::all(5) {
            let s = schubert_polynomial(&w);
            assert!(s.has_nonnegative_coefficients() && s.is_integral(), "{w}");
            assert_eq!(s.total_degree().unwrap_or(0) as usize, w.inversions());
        }
    }

    #[test]
    fn cs_patterns_match_multiplicity_freeness() {
        let free = |w: &Permutation| schubert_polynomial(w).terms().all(|(_, c)| *c == rat(1));
        for w in Permutation::all(5) {
            assert_eq!(is_cs_schubert(&w), free(&w), "{w}");
        }
        for w in Permutation::all(6).into_iter().step_by(7) {
            assert_eq!(is_cs_schubert(&w), free(&w), "{w}");
        }
    }

    #[test]
    fn schubert_polynomials_match_groebner_dual_multidegrees_in_s4() {
        for w in Permutation::all(4) {
            let ideal = schubert_ideal(&w).unwrap();
            let (rows, cols) = (ideal.grading.column_size(0) as u16, ideal.grading.n() as u16);
            for order in [diagonal_order(), antidiagonal_order(rows, cols)] {
                assert_eq!(
                    dual_multidegree_via_groebner(&w, &order).unwrap(),
                    schubert_polynomial(&w),
                    "{w} under {order}"
                );
            }
        }
    }

    #[test]
    fn example_214635_through_groebner() {
        let w = perm("214635");
        let ideal = schubert_ideal(&w).unwrap();
        assert_eq!(ideal.variables().len(), 20);
        let dual = dual_multidegree_via_groebner(&w, &diagonal_order()).unwrap();
        assert_eq!(dual, parse_polynomial(DUAL_214635).unwrap());
        let z = Monomial::z_power(&[2, 1, 1]);
        assert_eq!(dual.coeff(&z), rat(2));
    }

    #[test]
    fn cdg_generators_of_vexillary_permutations_are_diagonal_bases() {
        for w in Permutation::all(4).into_iter().filter(cdg_diagonal_gb_predicted) {
            let v = cdg_groebner_check(&w).unwrap();
            assert!(v.is_groebner_basis(), "{w}: {v:?}");
        }
    }

    #[test]
    fn cdg_theorem_holds_across_s5() {
        for w in Permutation::all(5) {
            let v = cdg_groebner_check(&w).unwrap();
            assert!(v.generate, "{w}");
            assert_eq!(v.is_groebner_basis(), cdg_diagonal_gb_predicted(&w), "{w}: {v:?}");
        }
    }

    #[test]
    fn cdg_verdict_for_214635_is_computed() {
        let v = cdg_groebner_check(&perm("214635")).unwrap();
        assert!(v.generate);
        assert!(v.initial_squarefree);
        eprintln!("214635: CDG generators form a diagonal Gröbner basis: {}", v.is_groebner_basis());
    }
}
