//! Binomial edge ideals.
//!
//! The `2 × n` matrix has `x_i = x(1,i)` in its first row and `y_i = x(2,i)`
//! in its second, with `deg x_i = deg y_i = e_i`. The default lex order has
//! `x_1 > … > x_n > y_1 > … > y_n`. The coordinate change `φ` fixes `x_i` and
//! sends `y_i ↦ α_i x_i + y_i`, so that
//! `φ(Δ_ij) = (α_j − α_i)·F_ij` with `F_ij = x_i x_j − λ_ij Δ_ij` and
//! `λ_ij = (α_i − α_j)^{-1}`. This sign makes every `F_ij` monic and
//! symmetric in `i, j`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::groebner::{buchberger, is_groebner_basis, IdealPresentation};
use crate::hilbert::MonomialIdeal;
use crate::poly::{Grading, Monomial, Polynomial, TermOrder, Variable};

/// A simple graph on the vertices `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::invalid(format!("loop at vertex {a}")));
            }
            if a == 0 || b == 0 || a > n || b > n {
                return Err(Error::invalid(format!("edge {a} {b} leaves the vertex set 1..{n}")));
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(Graph { n, edges: set })
    }

    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|i| (i, i + 1))).expect("valid path")
    }

    pub fn cycle(n: usize) -> Self {
        Graph::new(n, (1..=n).map(|i| (i, i % n + 1))).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Self {
        Graph::new(n, (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j)))).expect("valid complete graph")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    fn neighbours(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n + 1];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let adj = self.neighbours();
        let mut seen = vec![false; self.n + 1];
        let mut stack = vec![1];
        seen[1] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen[1..].iter().all(|&s| s)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.n)?;
        for (a, b) in &self.edges {
            write!(f, "\n{a} {b}")?;
        }
        Ok(())
    }
}

/// Graph files: the vertex count on the first line, then one edge `i j` per
/// line. Blank lines and `#` comments are ignored.
impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |line: usize, column: usize, message: String| Error::Parse { line, column, message };
        let mut n = None;
        let mut edges = Vec::new();
        for (idx, raw) in s.lines().enumerate() {
            let line = idx + 1;
            let text = raw.split('#').next().unwrap_or("");
            if text.trim().is_empty() {
                continue;
            }
            let mut fields = Vec::new();
            let mut start = None;
            for (k, c) in text.char_indices().chain(std::iter::once((text.len(), ' '))) {
                match (c.is_whitespace(), start) {
                    (false, None) => start = Some(k),
                    (true, Some(s0)) => {
                        fields.push((s0 + 1, &text[s0..k]));
                        start = None;
                    }
                    _ => {}
                }
            }
            let num = |(col, w): (usize, &str)| {
                w.parse::<usize>()
                    .map_err(|_| err(line, col, format!("expected a vertex number, found '{w}'")))
            };
            match n {
                None => {
                    if fields.len() != 1 {
                        return Err(err(line, 1, "the first line must hold the vertex count".into()));
                    }
                    n = Some(num(fields[0])?);
                }
                Some(nv) => {
                    if fields.len() != 2 {
                        return Err(err(line, 1, "an edge line needs exactly two vertices".into()));
                    }
                    let (a, b) = (num(fields[0])?, num(fields[1])?);
                    for (v, f) in [(a, fields[0]), (b, fields[1])] {
                        if v == 0 || v > nv {
                            return Err(err(line, f.0, format!("vertex {v} is outside 1..{nv}")));
                        }
                    }
                    if a == b {
                        return Err(err(line, fields[1].0, format!("loop at vertex {a}")));
                    }
                    edges.push((a, b));
                }
            }
        }
        let n = n.ok_or_else(|| err(1, 1, "empty graph file".into()))?;
        Graph::new(n, edges)
    }
}

/// Every connected labelled graph on `1..=n`.
pub fn all_connected_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
    assert!(pairs.len() < 32, "too many vertices to enumerate");
    (0u32..1 << pairs.len())
        .map(|mask| {
            Graph::new(n, pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e))
                .expect("valid")
        })
        .filter(Graph::is_connected)
        .collect()
}

/// A simple path `i, a_1, …, a_v, j`, remembered by its endpoints and the
/// set of interior vertices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgePath {
    pub endpoints: (usize, usize),
    pub interior: Vec<usize>,
}

impl EdgePath {
    /// `y_{a_1} ⋯ y_{a_v} x_i x_j`.
    pub fn monomial(&self) -> Monomial {
        let (i, j) = self.endpoints;
        Monomial::from_pairs(
            self.interior
                .iter()
                .map(|&a| (y(a), 1))
                .chain([(x(i), 1), (x(j), 1)]),
        )
    }

    /// `y_a`.
    pub fn y_monomial(&self) -> Monomial {
        Monomial::from_pairs(self.interior.iter().map(|&a| (y(a), 1)))
    }
}

pub fn x(i: usize) -> Variable {
    Variable::x(1, i as u16)
}

pub fn y(i: usize) -> Variable {
    Variable::x(2, i as u16)
}

/// `deg x_i = deg y_i = e_i`.
pub fn grading(n: usize) -> Grading {
    Grading::grid(1..=2, n as u16)
}

/// Simple paths from `i` to `j`, one per interior set, sorted.
pub fn enumerate_paths_graph(g: &Graph, i: usize, j: usize) -> Result<Vec<EdgePath>> {
    if i == j {
        return Err(Error::invalid("a path needs two distinct endpoints"));
    }
    if i == 0 || j == 0 || i > g.n || j > g.n {
        return Err(Error::invalid(format!("endpoints must lie in 1..{}", g.n)));
    }
    let adj = g.neighbours();
    let mut found = BTreeSet::new();
    let mut on_path = vec![false; g.n + 1];
    on_path[i] = true;
    let mut interior = Vec::new();
    dfs(&adj, i, j, &mut on_path, &mut interior, &mut found);
    let endpoints = (i.min(j), i.max(j));
    Ok(found
        .into_iter()
        .map(|interior| EdgePath { endpoints, interior })
        .collect())
}

fn dfs(
    adj: &[Vec<usize>],
    v: usize,
    target: usize,
    on_path: &mut [bool],
    interior: &mut Vec<usize>,
    found: &mut BTreeSet<Vec<usize>>,
) {
    for &w in &adj[v] {
        if w == target {
            let mut set = interior.clone();
            set.sort_unstable();
            found.insert(set);
        } else if !on_path[w] {
            on_path[w] = true;
            interior.push(w);
            dfs(adj, w, target, on_path, interior, found);
            interior.pop();
            on_path[w] = false;
        }
    }
}

/// All deduplicated paths between every pair of vertices.
pub fn all_paths(g: &Graph) -> Vec<EdgePath> {
    let mut out = Vec::new();
    for i in 1..=g.n {
        for j in i + 1..=g.n {
            out.extend(enumerate_paths_graph(g, i, j).expect("distinct endpoints"));
        }
    }
    out
}

/// The monomial ideal generated by all path monomials.
pub fn predicted_gin(g: &Graph) -> MonomialIdeal {
    MonomialIdeal::new(all_paths(g).iter().map(EdgePath::monomial))
}

/// `Δ_ij = x_i y_j − x_j y_i`.
pub fn delta(i: usize, j: usize) -> Polynomial {
    let m = |a: Variable, b: Variable| Polynomial::from_monomial(Monomial::from_pairs([(a, 1), (b, 1)]));
    m(x(i), y(j)) - m(x(j), y(i))
}

/// `J_G`, generated by `Δ_ij` over the edges.
pub fn binomial_edge_ideal(g: &Graph) -> IdealPresentation {
    IdealPresentation::new(g.edges().map(|(i, j)| delta(i, j)).collect(), grading(g.n)).expect("Δ_ij is multigraded")
}

fn check_alpha(alpha: &[BigRational], indices: &[usize]) -> Result<()> {
    for &i in indices {
        if i == 0 || i > alpha.len() {
            return Err(Error::invalid(format!("no α value for vertex {i}")));
        }
    }
    for (k, &i) in indices.iter().enumerate() {
        for &j in &indices[k + 1..] {
            if i != j && alpha[i - 1] == alpha[j - 1] {
                return Err(Error::invalid(format!("α_{i} = α_{j}; the values must be distinct")));
            }
        }
    }
    Ok(())
}

fn all_distinct(alpha: &[BigRational]) -> Result<()> {
    let idx: Vec<usize> = (1..=alpha.len()).collect();
    check_alpha(alpha, &idx)
}

/// `λ_ij = (α_i − α_j)^{-1}`.
pub fn lambda(alpha: &[BigRational], i: usize, j: usize) -> Result<BigRational> {
    check_alpha(alpha, &[i, j])?;
    if i == j {
        return Err(Error::invalid("λ_ii is undefined"));
    }
    Ok((&alpha[i - 1] - &alpha[j - 1]).recip())
}

/// `F_ij = x_i x_j − λ_ij Δ_ij`.
pub fn f_ij(alpha: &[BigRational], i: usize, j: usize) -> Result<Polynomial> {
    let l = lambda(alpha, i, j)?;
    let xx = Polynomial::from_monomial(Monomial::from_pairs([(x(i), 1), (x(j), 1)]));
    Ok(xx - delta(i, j).scale(&l))
}

/// `φ`: `x_i ↦ x_i`, `y_i ↦ α_i x_i + y_i`.
pub fn phi(alpha: &[BigRational], f: &Polynomial) -> Polynomial {
    let images: BTreeMap<Variable, Polynomial> = alpha
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let i = k + 1;
            (y(i), Polynomial::var(x(i)).scale(a) + Polynomial::var(y(i)))
        })
        .collect();
    f.substitute(|v| images.get(&v).cloned())
}

/// One `F_ij` per edge.
pub fn f_generators(g: &Graph, alpha: &[BigRational]) -> Result<Vec<Polynomial>> {
    all_distinct(alpha)?;
    g.edges().map(|(i, j)| f_ij(alpha, i, j)).collect()
}

/// `{y_a F_ij}` over every deduplicated path `i, a, j`.
pub fn f_set(g: &Graph, alpha: &[BigRational]) -> Result<Vec<Polynomial>> {
    all_distinct(alpha)?;
    all_paths(g)
        .iter()
        .map(|p| Ok(f_ij(alpha, p.endpoints.0, p.endpoints.1)?.mul_monomial(&p.y_monomial())))
        .collect()
}

/// Distinct integers in `[0, 10^6]`.
pub fn random_alpha(n: usize, seed: u64) -> Vec<BigRational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = BTreeSet::new();
    while seen.len() < n {
        seen.insert(rng.gen_range(0i64..=1_000_000));
    }
    let mut vals: Vec<i64> = seen.into_iter().collect();
    // keep the draw order independent of the sort in the set
    for k in (1..vals.len()).rev() {
        vals.swap(k, rng.gen_range(0..=k));
    }
    vals.into_iter().map(|v| BigRational::from_integer(v.into())).collect()
}

/// Checks that `order` ranks `x_i` above `y_i` for every vertex.
fn check_order(order: &TermOrder, n: usize) -> Result<()> {
    for i in 1..=n {
        let xm = Monomial::var(x(i));
        let ym = Monomial::var(y(i));
        if order.compare(&xm, &ym) != std::cmp::Ordering::Greater {
            return Err(Error::invalid(format!("the order must satisfy x_{i} > y_{i}")));
        }
    }
    Ok(())
}

/// Per-part outcome of [`verify_gb`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GbReport {
    /// Every S-pair of the F-set reduces to zero modulo the F-set.
    pub s_pairs_reduce: bool,
    /// `in(φ(J_G))` equals the predicted gin.
    pub initial_matches: bool,
    /// Every element of the F-set lies in `φ(J_G)`.
    pub contained: bool,
}

impl GbReport {
    pub fn passed(&self) -> bool {
        self.s_pairs_reduce && self.initial_matches && self.contained
    }
}

/// Verifies a candidate F-set for `φ(J_G)`.
pub fn verify_candidate(g: &Graph, alpha: &[BigRational], order: &TermOrder, candidate: &[Polynomial]) -> Result<GbReport> {
    check_order(order, g.n)?;
    all_distinct(alpha)?;
    let gens: Vec<Polynomial> = g.edges().map(|(i, j)| phi(alpha, &delta(i, j))).collect();
    let ideal = IdealPresentation::ungraded(gens, grading(g.n))?;
    let gb = buchberger(&ideal, order)?;
    let lead = MonomialIdeal::new(candidate.iter().filter_map(|f| f.leading_monomial(order).cloned()));
    Ok(GbReport {
        s_pairs_reduce: is_groebner_basis(candidate, order)?,
        initial_matches: gb.initial_ideal() == &predicted_gin(g) && lead == predicted_gin(g),
        contained: gb.contains_all(candidate)?,
    })
}

/// Whether the F-set is a Gröbner basis of `φ(J_G)` with initial ideal the
/// predicted gin.
pub fn verify_gb(g: &Graph, alpha: &[BigRational], order: &TermOrder) -> Result<GbReport> {
    verify_candidate(g, alpha, order, &f_set(g, alpha)?)
}

/// `−λ_jk λ_ik + λ_jk λ_ij − λ_ik λ_ij = 0`.
pub fn lambda_identity_check(alpha: &[BigRational], i: usize, j: usize, k: usize) -> Result<bool> {
    check_alpha(alpha, &[i, j, k])?;
    let (lij, lik, ljk) = (lambda(alpha, i, j)?, lambda(alpha, i, k)?, lambda(alpha, j, k)?);
    Ok((-(&ljk * &lik) + &ljk * &lij - &lik * &lij).is_zero())
}

/// The λ identity over `Q(a_i, a_j, a_k)` with denominators cleared by
/// `(a_i − a_j)(a_i − a_k)(a_j − a_k)`; the auxiliary variables `t(1..3)`
/// stand for the `a`s. The result is the zero polynomial.
pub fn lambda_identity_symbolic() -> Polynomial {
    let a = |k: u16| Polynomial::var(Variable::Aux(k));
    let (dij, dik, djk) = (a(1) - a(2), a(1) - a(3), a(2) - a(3));
    // λ_jk λ_ik · D = d_ij, λ_jk λ_ij · D = d_ik, λ_ik λ_ij · D = d_jk
    let d = &dij * &dik * &djk;
    let cleared = |num: &Polynomial, den: &Polynomial| d.div_exact(den, &TermOrder::lex()).expect("exact") * num.clone();
    let one = Polynomial::one();
    let t1 = cleared(&one, &(&djk * &dik));
    let t2 = cleared(&one, &(&djk * &dij));
    let t3 = cleared(&one, &(&dik * &dij));
    -t1 + t2 - t3
}

/// `y_i Δ_jk − y_j Δ_ik + y_k Δ_ij`, identically zero.
pub fn minor_syzygy(i: usize, j: usize, k: usize) -> Polynomial {
    let yv = |a: usize| Polynomial::var(y(a));
    yv(i) * delta(j, k) - yv(j) * delta(i, k) + yv(k) * delta(i, j)
}

/// `S(F_ik, F_jk) = −λ_jk y_j F_ik + λ_ik y_i F_jk + (λ_jk − λ_ik) y_k F_ij`,
/// together with the minor syzygy.
pub fn spoly_reduction_check(alpha: &[BigRational], i: usize, j: usize, k: usize) -> Result<bool> {
    if !(i < j && j < k) {
        return Err(Error::invalid("indices must satisfy i < j < k"));
    }
    check_alpha(alpha, &[i, j, k])?;
    let (fik, fjk, fij) = (f_ij(alpha, i, k)?, f_ij(alpha, j, k)?, f_ij(alpha, i, j)?);
    let (lik, ljk) = (lambda(alpha, i, k)?, lambda(alpha, j, k)?);
    let xv = |a: usize| Polynomial::var(x(a));
    let yv = |a: usize| Polynomial::var(y(a));
    let s = xv(j) * &fik - xv(i) * &fjk;
    let rhs = (yv(j) * &fik).scale(&-ljk.clone()) + (yv(i) * &fjk).scale(&lik) + (yv(k) * &fij).scale(&(&ljk - &lik));
    Ok(minor_syzygy(i, j, k).is_zero() && s == rhs)
}

/// For every two F-elements with disjoint endpoint pairs, the two alone form
/// a Gröbner basis.
pub fn disjoint_pairs_check(g: &Graph, alpha: &[BigRational], order: &TermOrder) -> Result<bool> {
    let paths = all_paths(g);
    let elems = f_set(g, alpha)?;
    for (a, (p, f)) in paths.iter().zip(&elems).enumerate() {
        for (q, h) in paths.iter().zip(&elems).skip(a + 1) {
            let (i, j) = p.endpoints;
            let (u, v) = q.endpoints;
            if i != u && i != v && j != u && j != v && !is_groebner_basis(&[f.clone(), h.clone()], order)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Integer `α` values as rationals.
pub fn alpha_from_ints(vals: &[i64]) -> Vec<BigRational> {
    vals.iter().map(|&v| BigRational::from_integer(v.into())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{gin, initial_ideal, is_squarefree, multigraded_hf};
    use crate::hilbert::degree_vectors;
    use crate::poly::parse_polynomial;

    fn mono(s: &str) -> Monomial {
        parse_polynomial(s).unwrap().monomials().next().unwrap().clone()
    }

    #[test]
    fn graphs_parse_and_print() {
        let g: Graph = "3\n1 2\n2 3\n".parse().unwrap();
        assert_eq!(g, Graph::path(3));
        assert_eq!(g.to_string().parse::<Graph>().unwrap(), g);
        match "3\n1 2\n2 5\n".parse::<Graph>() {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (3, 3)),
            other => panic!("{other:?}"),
        }
        assert!("3\n1 1\n".parse::<Graph>().is_err());
        assert!("".parse::<Graph>().is_err());
        assert!(Graph::cycle(4).is_connected());
        assert!(!Graph::new(3, [(1, 2)]).unwrap().is_connected());
    }

    #[test]
    fn connected_graph_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| all_connected_graphs(n).len()).collect();
        assert_eq!(counts, [1, 1, 4, 38, 728]);
    }

    #[test]
    fn path_enumeration() {
        let one = enumerate_paths_graph(&Graph::path(2), 1, 2).unwrap();
        assert_eq!(one, [EdgePath { endpoints: (1, 2), interior: vec![] }]);
        let p3 = enumerate_paths_graph(&Graph::path(3), 1, 3).unwrap();
        assert_eq!(p3, [EdgePath { endpoints: (1, 3), interior: vec![2] }]);
        let k4: Vec<Vec<usize>> = enumerate_paths_graph(&Graph::complete(4), 1, 2)
            .unwrap()
            .into_iter()
            .map(|p| p.interior)
            .collect();
        assert_eq!(k4, [vec![], vec![3], vec![3, 4], vec![4]]);
        assert!(enumerate_paths_graph(&Graph::path(3), 2, 2).is_err());
    }

    #[test]
    fn predicted_gins() {
        assert_eq!(predicted_gin(&Graph::path(2)), MonomialIdeal::new([mono("x(1,1)*x(1,2)")]));
        let p3 = MonomialIdeal::new(["x(1,1)*x(1,2)", "x(1,2)*x(1,3)", "x(2,2)*x(1,1)*x(1,3)"].map(mono));
        assert_eq!(predicted_gin(&Graph::path(3)), p3);
        let k3 = MonomialIdeal::new(["x(1,1)*x(1,2)", "x(1,1)*x(1,3)", "x(1,2)*x(1,3)"].map(mono));
        assert_eq!(predicted_gin(&Graph::complete(3)), k3);
    }

    #[test]
    fn f_elements() {
        let alpha = alpha_from_ints(&[0, 1]);
        let f = f_ij(&alpha, 1, 2).unwrap();
        assert_eq!(f, parse_polynomial("x(1,1)*x(1,2) + x(1,1)*x(2,2) - x(1,2)*x(2,1)").unwrap());
        assert_eq!(f, f_ij(&alpha, 2, 1).unwrap());
        let order = TermOrder::lex();
        assert_eq!(f.leading_monomial(&order), Some(&mono("x(1,1)*x(1,2)")));
        // φ(Δ_ij) = (α_j − α_i) F_ij
        let alpha = alpha_from_ints(&[5, -3, 11]);
        for (i, j) in [(1, 2), (1, 3), (2, 3)] {
            let scale = &alpha[j - 1] - &alpha[i - 1];
            assert_eq!(phi(&alpha, &delta(i, j)), f_ij(&alpha, i, j).unwrap().scale(&scale));
        }
        assert!(f_generators(&Graph::path(2), &alpha_from_ints(&[3, 3])).is_err());
        let set = f_set(&Graph::path(3), &alpha).unwrap();
        assert_eq!(set.len(), 3);
        let leads = MonomialIdeal::new(set.iter().map(|f| f.leading_monomial(&order).unwrap().clone()));
        assert_eq!(leads, predicted_gin(&Graph::path(3)));
    }

    #[test]
    fn lambda_identities() {
        let alpha = alpha_from_ints(&[0, 1, 2]);
        assert_eq!(lambda(&alpha, 1, 2).unwrap(), BigRational::from_integer((-1).into()));
        assert_eq!(lambda(&alpha, 1, 3).unwrap(), BigRational::new((-1).into(), 2.into()));
        assert!(lambda_identity_check(&alpha, 1, 2, 3).unwrap());
        assert!(lambda_identity_symbolic().is_zero());
        assert!(minor_syzygy(1, 2, 3).is_zero());
        assert!(spoly_reduction_check(&alpha, 1, 2, 3).unwrap());
        assert!(lambda_identity_check(&alpha_from_ints(&[1, 1, 2]), 1, 2, 3).is_err());
        for seed in 0..50 {
            let alpha = random_alpha(5, seed);
            assert!(lambda_identity_check(&alpha, 2, 4, 5).unwrap());
            assert!(spoly_reduction_check(&alpha, 1, 3, 5).unwrap());
        }
    }

    #[test]
    fn random_alphas_are_distinct_and_reproducible() {
        let a = random_alpha(6, 9);
        assert_eq!(a, random_alpha(6, 9));
        assert!(all_distinct(&a).is_ok());
    }

    #[test]
    fn f_set_is_a_groebner_basis_on_small_graphs() {
        let order = TermOrder::lex();
        for g in (2..=4).flat_map(all_connected_graphs) {
            let report = verify_gb(&g, &random_alpha(g.n(), 1), &order).unwrap();
            assert!(report.passed(), "{g}: {report:?}");
        }
        let k4 = Graph::complete(4);
        assert!(disjoint_pairs_check(&k4, &random_alpha(4, 2), &order).unwrap());
    }

    #[test]
    fn dropping_a_path_element_is_detected() {
        let g = Graph::cycle(4);
        let alpha = random_alpha(4, 3);
        let mut set = f_set(&g, &alpha).unwrap();
        let k = set.iter().position(|f| f.total_degree() == Some(3)).unwrap();
        set.remove(k);
        assert!(!verify_candidate(&g, &alpha, &TermOrder::lex(), &set).unwrap().passed());
    }

    #[test]
    fn order_must_rank_x_above_y() {
        let bad = TermOrder::lex().with_priority(vec![y(1), x(1), y(2), x(2)]);
        assert!(verify_gb(&Graph::path(2), &random_alpha(2, 0), &bad).is_err());
    }

    #[test]
    fn randomized_gin_agrees_with_prediction() {
        let order = TermOrder::lex();
        for g in [Graph::path(3), Graph::cycle(4), Graph::complete(4), Graph::path(4)] {
            let ideal = binomial_edge_ideal(&g);
            let got = gin(&ideal, &order, 2, 17).unwrap();
            assert_eq!(got, predicted_gin(&g), "{g}");
            assert!(is_squarefree(&got));
            let init = initial_ideal(&buchberger(&ideal, &order).unwrap());
            for a in degree_vectors(g.n(), 4) {
                assert_eq!(
                    multigraded_hf(&got, &ideal.grading, &a).unwrap(),
                    multigraded_hf(&init, &ideal.grading, &a).unwrap()
                );
            }
        }
    }
}
