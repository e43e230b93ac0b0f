//! Exact Gröbner bases over the rationals, initial ideals, multigraded
//! generic initial ideals and the Cartwright–Sturmfels test battery.

mod engine;
mod gin;
mod ideal_file;

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_rational::BigRational;

pub use engine::Budget;
pub use gin::{
    cs_witness, gb_degree_bound_check, gin, gin_with_budget, is_borel_fixed, random_coordinate_change, sample_orders,
    universal_gb_sample_check, CoordinateChange,
};
pub use ideal_file::{parse_ideal_file, IdealFile};

use crate::error::{Error, Result};
use crate::hilbert::{hf_by_counting, MonomialIdeal};
use crate::poly::{Grading, Monomial, Polynomial, TermOrder, Variable};
use engine::{IPoly, Ring};

/// Variables allowed in a user-facing computation.
pub const MAX_VARIABLES: usize = 24;
/// Largest generator degree accepted by [`buchberger`].
pub const MAX_GENERATOR_DEGREE: u32 = 4;

/// Generators together with the grading of their ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealPresentation {
    pub generators: Vec<Polynomial>,
    pub grading: Grading,
    pub multigraded: bool,
}

impl IdealPresentation {
    /// A multigraded ideal; every generator must be homogeneous.
    pub fn new(generators: Vec<Polynomial>, grading: Grading) -> Result<Self> {
        let p = IdealPresentation::ungraded(generators, grading)?;
        for g in &p.generators {
            if !p.grading.is_homogeneous(g) {
                return Err(Error::NotHomogeneous);
            }
        }
        Ok(IdealPresentation { multigraded: true, ..p })
    }

    /// An ideal whose generators only need to live in the graded ring.
    pub fn ungraded(generators: Vec<Polynomial>, grading: Grading) -> Result<Self> {
        for g in &generators {
            for v in g.variables() {
                grading.degree_of(v)?;
            }
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(IdealPresentation {
            generators,
            grading,
            multigraded: false,
        })
    }

    pub fn variables(&self) -> Vec<Variable> {
        let mut vars: BTreeSet<Variable> = self.grading.variables().collect();
        for g in &self.generators {
            vars.extend(g.variables());
        }
        vars.into_iter().collect()
    }

    fn check_desk_scale(&self) -> Result<()> {
        let nv = self.variables().len();
        if nv > MAX_VARIABLES {
            return Err(Error::DeskScaleExceeded(format!("{nv} variables exceed the limit of {MAX_VARIABLES}")));
        }
        if let Some(d) = self.generators.iter().filter_map(Polynomial::total_degree).max() {
            if d > MAX_GENERATOR_DEGREE {
                return Err(Error::DeskScaleExceeded(format!(
                    "generator degree {d} exceeds the limit of {MAX_GENERATOR_DEGREE}"
                )));
            }
        }
        Ok(())
    }
}

/// A reduced Gröbner basis with monic elements, sorted by increasing leading
/// monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    basis: Vec<Polynomial>,
    order: TermOrder,
    initial: MonomialIdeal,
    ring: Ring,
    internal: Vec<IPoly>,
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.basis == other.basis && self.order == other.order
    }
}

impl GroebnerBasis {
    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn initial_ideal(&self) -> &MonomialIdeal {
        &self.initial
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.internal.iter().map(|p| self.ring.monomial(&p[0].0)).collect()
    }

    /// The unique remainder of `f` modulo the basis.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.is_zero() {
            return Ok(Polynomial::zero());
        }
        let (p, scale) = self.ring.to_internal(f)?;
        let refs: Vec<&IPoly> = self.internal.iter().collect();
        let (r, mu) = self.ring.reduce(p, &refs, true, &Budget::from_env())?;
        let factor = BigRational::from_integer(1.into()) / (mu * scale);
        Ok(self.ring.to_poly(&r).scale(&factor))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Whether every generator of `other` lies in this ideal.
    pub fn contains_all(&self, gens: &[Polynomial]) -> Result<bool> {
        for g in gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Reduced Gröbner basis under the default budget.
pub fn buchberger(ideal: &IdealPresentation, order: &TermOrder) -> Result<GroebnerBasis> {
    buchberger_with_budget(ideal, order, &Budget::from_env())
}

pub fn buchberger_with_budget(ideal: &IdealPresentation, order: &TermOrder, budget: &Budget) -> Result<GroebnerBasis> {
    ideal.check_desk_scale()?;
    groebner_basis(&ideal.generators, ideal.variables(), order, budget)
}

/// Gröbner basis without the desk-scale caps, used for elimination.
pub(crate) fn groebner_basis(
    gens: &[Polynomial],
    vars: Vec<Variable>,
    order: &TermOrder,
    budget: &Budget,
) -> Result<GroebnerBasis> {
    let mut vars = vars;
    for g in gens {
        vars.extend(g.variables());
    }
    let ring = Ring::new(order, vars)?;
    let mut input = Vec::with_capacity(gens.len());
    for g in gens {
        let (p, _) = ring.to_internal(g)?;
        if !p.is_empty() {
            input.push(p);
        }
    }
    let internal = ring.groebner(input.clone(), budget)?;
    let refs: Vec<&IPoly> = internal.iter().collect();
    for p in input {
        let (r, _) = ring.reduce(p, &refs, false, budget)?;
        if !r.is_empty() {
            return Err(Error::invalid("internal error: an input generator does not reduce to zero"));
        }
    }
    let basis: Vec<Polynomial> = internal.iter().map(|p| ring.to_monic(p)).collect();
    let initial = MonomialIdeal::new(internal.iter().map(|p| ring.monomial(&p[0].0)));
    Ok(GroebnerBasis {
        basis,
        order: order.clone(),
        initial,
        ring,
        internal,
    })
}

/// Whether `polys` is itself a Gröbner basis of the ideal it generates.
pub fn is_groebner_basis(polys: &[Polynomial], order: &TermOrder) -> Result<bool> {
    let mut vars = Vec::new();
    for f in polys {
        vars.extend(f.variables());
    }
    let ring = Ring::new(order, vars)?;
    let internal = polys.iter().map(|f| ring.to_internal(f).map(|(p, _)| p)).collect::<Result<Vec<_>>>()?;
    ring.satisfies_buchberger_criterion(&internal, &Budget::from_env())
}

/// The initial ideal of a reduced basis: its leading monomials.
pub fn initial_ideal(gb: &GroebnerBasis) -> MonomialIdeal {
    gb.initial.clone()
}

/// All minimal generators squarefree.
pub fn is_squarefree(j: &MonomialIdeal) -> bool {
    j.is_squarefree()
}

/// Standard monomials of degree `a`.
pub fn multigraded_hf(j: &MonomialIdeal, grading: &Grading, a: &[i64]) -> Result<BigUint> {
    hf_by_counting(j, grading, a)
}

/// `I : f = (I ∩ (f)) / f`, with `I ∩ (f)` eliminated from `t·I + (1 − t)·f`.
pub fn ideal_quotient(ideal: &IdealPresentation, f: &Polynomial) -> Result<IdealPresentation> {
    if f.is_zero() {
        return Err(Error::invalid("quotient by the zero polynomial"));
    }
    for v in f.variables() {
        ideal.grading.degree_of(v)?;
    }
    let budget = Budget::from_env();
    let t = Polynomial::var(Variable::Aux(0));
    let mut gens: Vec<Polynomial> = ideal.generators.iter().map(|g| &t * g).collect();
    gens.push((Polynomial::one() - &t) * f);
    let order = TermOrder::elimination(&[Variable::Aux(0)]);
    let gb = groebner_basis(&gens, ideal.variables(), &order, &budget)?;
    let mut quotient = Vec::new();
    for g in gb.basis() {
        if g.variables().contains(&Variable::Aux(0)) {
            continue;
        }
        let q = g
            .div_exact(f, &TermOrder::lex())
            .ok_or_else(|| Error::invalid("internal error: intersection element not divisible"))?;
        quotient.push(q);
    }
    finish_presentation(ideal, quotient, f)
}

fn finish_presentation(ideal: &IdealPresentation, gens: Vec<Polynomial>, f: &Polynomial) -> Result<IdealPresentation> {
    if ideal.multigraded && ideal.grading.is_homogeneous(f) {
        IdealPresentation::new(gens, ideal.grading.clone())
    } else {
        IdealPresentation::ungraded(gens, ideal.grading.clone())
    }
}

fn is_standard_homogeneous(ideal: &IdealPresentation) -> bool {
    ideal.generators.iter().all(|g| {
        let d = g.total_degree();
        g.monomials().all(|m| Some(m.total_degree()) == d)
    })
}

/// `I : x^∞` for a variable `x` of a homogeneous ideal: divide the reduced
/// degrevlex basis with `x` smallest by the largest power of `x`.
fn saturate_variable(ideal: &IdealPresentation, x: Variable, budget: &Budget) -> Result<Vec<Polynomial>> {
    let mut vars = ideal.variables();
    vars.retain(|&v| v != x);
    let probe = TermOrder::degrevlex();
    probe.sort_variables(&mut vars);
    vars.push(x);
    let order = TermOrder::degrevlex().with_priority(vars.clone());
    let gb = groebner_basis(&ideal.generators, vars, &order, budget)?;
    Ok(gb
        .basis()
        .iter()
        .map(|g| {
            let k = g.monomials().map(|m| m.exponent(x)).min().unwrap_or(0);
            g.div_exact(&Polynomial::var(x).pow(k), &TermOrder::lex()).expect("x^k divides every term")
        })
        .collect())
}

/// `I : f^∞`. Monomial `f` over a homogeneous ideal saturates one variable at
/// a time; otherwise quotients are iterated until they stabilise.
pub fn saturation(ideal: &IdealPresentation, f: &Polynomial) -> Result<IdealPresentation> {
    if f.is_zero() {
        return Err(Error::invalid("saturation by the zero polynomial"));
    }
    let budget = Budget::from_env();
    let monomial = (f.num_terms() == 1).then(|| f.monomials().next().cloned()).flatten();
    if let (Some(m), true) = (&monomial, is_standard_homogeneous(ideal)) {
        let mut cur = ideal.clone();
        for x in m.variables() {
            let gens = saturate_variable(&cur, x, &budget)?;
            cur = IdealPresentation {
                generators: gens,
                ..cur
            };
        }
        return finish_presentation(ideal, cur.generators, f);
    }
    let mut cur = ideal.clone();
    loop {
        let next = ideal_quotient(&cur, f)?;
        let gb = groebner_basis(&cur.generators, cur.variables(), &TermOrder::degrevlex(), &budget)?;
        if gb.contains_all(&next.generators)? {
            return finish_presentation(ideal, cur.generators, f);
        }
        cur = next;
    }
}

/// `I : f^∞` by the generic quotient iteration.
pub fn ideal_quotient_saturation(ideal: &IdealPresentation, f: &Polynomial) -> Result<IdealPresentation> {
    saturation(ideal, f)
}

/// Whether two presentations generate the same ideal.
pub fn same_ideal(a: &IdealPresentation, b: &IdealPresentation) -> Result<bool> {
    let budget = Budget::from_env();
    let mut vars = a.variables();
    vars.extend(b.variables());
    let ga = groebner_basis(&a.generators, vars.clone(), &TermOrder::degrevlex(), &budget)?;
    let gb = groebner_basis(&b.generators, vars, &TermOrder::degrevlex(), &budget)?;
    Ok(ga.basis() == gb.basis())
}
