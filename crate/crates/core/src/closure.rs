//! Multigraded homogenization and the largest multigraded subideal `J*` of
//! an ideal generated by linear forms.
//!
//! `T` is the ring of `x(i,j)` with `i ≥ 1`; `S = T[x(0,1), …, x(0,n)]` adds
//! one homogenizing variable of degree `e_j` per column.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::groebner::{buchberger, saturation, IdealPresentation};
use crate::hilbert::{degree_vectors, hf_by_counting, MonomialIdeal};
use crate::poly::{Grading, Monomial, Polynomial, TermOrder, Variable};

/// Default `|a|` bound for Hilbert-function comparisons.
pub const DEFAULT_DEGREE_CAP: u32 = 6;

/// The base grading of `T` together with the homogenizing variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogenizationContext {
    base: Grading,
    extended: Grading,
}

impl HomogenizationContext {
    /// `base` must be a standard grading on variables `x(i,j)` with `i ≥ 1`.
    pub fn new(base: Grading) -> Result<Self> {
        if !base.is_standard() {
            return Err(Error::invalid("homogenization needs a standard grading"));
        }
        let mut extended = base.clone();
        for v in base.variables() {
            match v {
                Variable::X { row: 0, .. } => {
                    return Err(Error::invalid(format!("{v} is reserved for homogenization")));
                }
                Variable::X { .. } => {}
                _ => return Err(Error::invalid(format!("{v} is not a grid variable"))),
            }
        }
        for j in 0..base.n() {
            let mut e = vec![0; base.n()];
            e[j] = 1;
            extended = extended.with_variable(Variable::x(0, j as u16 + 1), e);
        }
        Ok(HomogenizationContext { base, extended })
    }

    /// Rows `1..=rows` in columns `1..=cols`.
    pub fn grid(rows: u16, cols: u16) -> Self {
        HomogenizationContext::new(Grading::grid(1..=rows, cols)).expect("grid grading")
    }

    pub fn base(&self) -> &Grading {
        &self.base
    }

    /// The grading of `S`.
    pub fn extended(&self) -> &Grading {
        &self.extended
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    pub fn homogenizing_variables(&self) -> Vec<Variable> {
        (1..=self.n() as u16).map(|j| Variable::x(0, j)).collect()
    }

    /// `x(0,1) ⋯ x(0,n)`.
    pub fn product(&self) -> Polynomial {
        Polynomial::from_monomial(Monomial::from_pairs(self.homogenizing_variables().into_iter().map(|v| (v, 1))))
    }
}

/// `f^hom`: every term padded by `∏_j x(0,j)^{d_j − b_j}` with `d` the
/// componentwise maximum of the term degrees.
pub fn homogenize_poly(f: &Polynomial, ctx: &HomogenizationContext) -> Result<Polynomial> {
    if f.is_zero() {
        return Err(Error::invalid("cannot homogenize the zero polynomial"));
    }
    let mut degrees = Vec::with_capacity(f.num_terms());
    for m in f.monomials() {
        degrees.push(ctx.base.degree_of_monomial(m)?);
    }
    let d: Vec<i64> = (0..ctx.n())
        .map(|j| degrees.iter().map(|b| b[j]).max().expect("nonzero f"))
        .collect();
    Ok(Polynomial::from_terms(f.terms().zip(&degrees).map(|((m, c), b)| {
        let pad = Monomial::from_pairs((0..ctx.n()).map(|j| (Variable::x(0, j as u16 + 1), (d[j] - b[j]) as u32)));
        (m.mul(&pad), c.clone())
    })))
}

/// Sets every `x(0,j)` to 1.
pub fn dehomogenize(f: &Polynomial) -> Polynomial {
    f.substitute(|v| matches!(v, Variable::X { row: 0, .. }).then(Polynomial::one))
}

/// `I^hom = (f^hom : f ∈ I)`, computed as the homogenized generators
/// saturated by `x(0,1) ⋯ x(0,n)`.
pub fn homogenize_ideal(ideal: &IdealPresentation, ctx: &HomogenizationContext) -> Result<IdealPresentation> {
    let gens = ideal
        .generators
        .iter()
        .map(|f| homogenize_poly(f, ctx))
        .collect::<Result<Vec<_>>>()?;
    let hom = IdealPresentation::new(gens, ctx.extended.clone())?;
    let sat = saturation(&hom, &ctx.product())?;
    IdealPresentation::new(sat.generators, ctx.extended.clone())
}

/// Monomials of multidegree `d ∈ {0,1}^n`: one variable from each column in
/// the support of `d`.
fn squarefree_column_monomials(grading: &Grading, d: &[bool]) -> Vec<Monomial> {
    let mut out = vec![Monomial::one()];
    for (j, &on) in d.iter().enumerate() {
        if !on {
            continue;
        }
        let col = grading.column_variables(j);
        out = out
            .iter()
            .flat_map(|m| col.iter().map(move |&v| m.mul(&Monomial::var(v))))
            .collect();
    }
    out
}

/// A basis of the right kernel of `rows` (each a vector of length `cols`).
fn kernel(mut rows: Vec<Vec<BigRational>>, cols: usize) -> Vec<Vec<BigRational>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&k| !rows[k][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        for k in 0..rows.len() {
            if k != r && !rows[k][c].is_zero() {
                let factor = rows[k][c].clone();
                let pivot_row = rows[r].clone();
                for (a, b) in rows[k].iter_mut().zip(&pivot_row) {
                    *a -= &factor * b;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); cols];
            v[f] = BigRational::one();
            for (k, &p) in pivots.iter().enumerate() {
                v[p] = -rows[k][f].clone();
            }
            v
        })
        .collect()
}

fn is_linear(f: &Polynomial) -> bool {
    f.monomials().all(|m| m.total_degree() == 1)
}

/// `J*` for `J` generated by linear forms: for every `d ∈ {0,1}^n` the
/// multigraded elements of `J` of degree `d` form the kernel of the normal
/// form map on the span of the degree-`d` monomials. `J*` is generated in
/// these degrees because it is Cartwright–Sturmfels.
pub fn zstar_linear(ideal: &IdealPresentation, ctx: &HomogenizationContext) -> Result<IdealPresentation> {
    if let Some(f) = ideal.generators.iter().find(|f| !is_linear(f)) {
        return Err(Error::invalid(format!("{f} is not a linear form")));
    }
    let gb = buchberger(ideal, &TermOrder::degrevlex())?;
    let n = ctx.n();
    let shapes: Vec<Vec<bool>> = (1u32..1 << n).map(|mask| (0..n).map(|j| mask >> j & 1 == 1).collect()).collect();
    let pieces = shapes
        .par_iter()
        .map(|d| {
            let monos = squarefree_column_monomials(&ctx.base, d);
            let mut coords: BTreeMap<Monomial, usize> = BTreeMap::new();
            let mut columns = Vec::with_capacity(monos.len());
            for m in &monos {
                let nf = gb.normal_form(&Polynomial::from_monomial(m.clone()))?;
                let col: Vec<(usize, BigRational)> = nf
                    .terms()
                    .map(|(t, c)| {
                        let next = coords.len();
                        (*coords.entry(t.clone()).or_insert(next), c.clone())
                    })
                    .collect();
                columns.push(col);
            }
            let mut rows = vec![vec![BigRational::zero(); monos.len()]; coords.len()];
            for (c, col) in columns.iter().enumerate() {
                for (r, v) in col {
                    rows[*r][c] = v.clone();
                }
            }
            Ok(kernel(rows, monos.len())
                .into_iter()
                .map(|v| Polynomial::from_terms(monos.iter().cloned().zip(v).filter(|(_, c)| !c.is_zero())))
                .collect::<Vec<_>>())
        })
        .collect::<Result<Vec<_>>>()?;
    IdealPresentation::new(pieces.into_iter().flatten().collect(), ctx.base.clone())
}

/// `J = (Σ_j x(i,j) : i ∈ rows)` on a grid with `cols` columns.
pub fn row_sum_ideal(rows: &[u16], ctx: &HomogenizationContext) -> Result<IdealPresentation> {
    let gens = rows
        .iter()
        .map(|&i| (1..=ctx.n() as u16).map(|j| Polynomial::var(Variable::x(i, j))).sum())
        .collect();
    IdealPresentation::ungraded(gens, ctx.base.clone())
}

/// Whether `A` and `B` have the same multigraded Hilbert function for all
/// `a ≥ 0` with `|a| ≤ cap`.
pub fn verify_equality_hf(a: &IdealPresentation, b: &IdealPresentation, cap: u32) -> Result<bool> {
    if a.grading != b.grading {
        return Err(Error::invalid("the ideals live in differently graded rings"));
    }
    let order = TermOrder::degrevlex();
    let ia = buchberger(a, &order)?.initial_ideal().clone();
    let ib = buchberger(b, &order)?.initial_ideal().clone();
    hf_agree(&ia, &ib, &a.grading, cap)
}

/// Whether two monomial ideals have the same multigraded Hilbert function for
/// all `a ≥ 0` with `|a| ≤ cap`.
pub fn hf_agree(a: &MonomialIdeal, b: &MonomialIdeal, grading: &Grading, cap: u32) -> Result<bool> {
    let shell = degree_vectors(grading.n(), cap);
    let verdicts: Vec<bool> = shell
        .par_iter()
        .map(|d| -> Result<bool> {
            let x: BigUint = hf_by_counting(a, grading, d)?;
            Ok(x == hf_by_counting(b, grading, d)?)
        })
        .collect::<Result<_>>()?;
    Ok(verdicts.into_iter().all(|v| v))
}

/// A random polynomial in `T` with up to `terms` terms of total degree at
/// most `max_degree` and small integer coefficients.
pub fn random_polynomial(ctx: &HomogenizationContext, terms: usize, max_degree: u32, seed: u64) -> Polynomial {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vars: Vec<Variable> = ctx.base.variables().collect();
    loop {
        let p = Polynomial::from_terms((0..terms).map(|_| {
            let deg = rng.gen_range(0..=max_degree);
            let m = Monomial::from_pairs((0..deg).map(|_| (vars[rng.gen_range(0..vars.len())], 1)));
            let mut c = rng.gen_range(-9i64..=9);
            if c == 0 {
                c = 1;
            }
            (m, BigRational::from_integer(c.into()))
        }));
        if !p.is_zero() {
            return p;
        }
    }
}
