//! Multigraded generic initial ideals and the Cartwright–Sturmfels battery.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{groebner_basis, Budget, GroebnerBasis, IdealPresentation};
use crate::error::{Error, Result};
use crate::hilbert::MonomialIdeal;
use crate::poly::{Grading, Monomial, Polynomial, TermOrder, Tiebreak, Variable};

/// Entries of random coordinate changes lie in `[-ENTRY_RANGE, ENTRY_RANGE]`.
pub const ENTRY_RANGE: i64 = 1_000_000;
/// Fresh seeds tried by [`gin`] before giving up with `NonGeneric`.
const RETRIES: u64 = 3;

/// An element of `GL(m_1+1) × … × GL(m_n+1)`: one invertible integer block
/// per column, acting on that column's variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinateChange {
    /// `(variables, matrix)` per column; `x_k ↦ Σ_l matrix[k][l]·x_l`.
    pub blocks: Vec<(Vec<Variable>, Vec<Vec<BigInt>>)>,
}

impl CoordinateChange {
    pub fn identity(grading: &Grading) -> Self {
        let blocks = (0..grading.n())
            .map(|j| {
                let vars = grading.column_variables(j);
                let k = vars.len();
                let m = (0..k)
                    .map(|r| (0..k).map(|c| BigInt::from((r == c) as i64)).collect())
                    .collect();
                (vars, m)
            })
            .collect();
        CoordinateChange { blocks }
    }

    fn images(&self) -> BTreeMap<Variable, Polynomial> {
        let mut out = BTreeMap::new();
        for (vars, m) in &self.blocks {
            for (k, &v) in vars.iter().enumerate() {
                let image = vars
                    .iter()
                    .zip(&m[k])
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(&w, c)| (Monomial::var(w), BigRational::from_integer(c.clone())))
                    .collect::<Vec<_>>();
                out.insert(v, Polynomial::from_terms(image));
            }
        }
        out
    }

    /// `g·f`, substituting every graded variable by its image.
    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        let images = self.images();
        f.substitute(|v| images.get(&v).cloned())
    }

    pub fn apply_all(&self, gens: &[Polynomial]) -> Vec<Polynomial> {
        let images = self.images();
        gens.iter().map(|f| f.substitute(|v| images.get(&v).cloned())).collect()
    }
}

/// Fraction-free Gaussian elimination.
pub(crate) fn bareiss_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut prev = BigInt::one();
    let mut sign = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v.div_floor(&prev);
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Random blocks with entries uniform in `[-10^6, 10^6]`, resampled until
/// invertible. Seed 0 is the identity.
pub fn random_coordinate_change(grading: &Grading, seed: u64) -> CoordinateChange {
    let mut g = CoordinateChange::identity(grading);
    if seed == 0 {
        return g;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (vars, m) in g.blocks.iter_mut() {
        let k = vars.len();
        loop {
            *m = (0..k)
                .map(|_| (0..k).map(|_| BigInt::from(rng.gen_range(-ENTRY_RANGE..=ENTRY_RANGE))).collect())
                .collect();
            if !bareiss_det(m).is_zero() {
                break;
            }
        }
    }
    g
}

/// Borel-fixedness by exchange: for every generator divisible by a variable
/// `x`, replacing `x` with the next larger variable of its column stays in
/// the ideal. Checking generators and adjacent exchanges suffices.
pub fn is_borel_fixed(j: &MonomialIdeal, grading: &Grading, order: &TermOrder) -> bool {
    let mut up = BTreeMap::new();
    for c in 0..grading.n() {
        let mut vars = grading.column_variables(c);
        order.sort_variables(&mut vars);
        for w in vars.windows(2) {
            up.insert(w[1], w[0]);
        }
    }
    j.generators().iter().all(|m| {
        m.variables().all(|x| match up.get(&x) {
            None => true,
            Some(&y) => {
                let moved = Monomial::var(x).quotient_of(m).expect("x divides m").mul(&Monomial::var(y));
                j.contains(&moved)
            }
        })
    })
}

fn trial_seeds(seed: u64, round: u64, trials: usize) -> Vec<u64> {
    if seed == 0 {
        return vec![0; trials];
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(round);
    (0..trials).map(|_| rng.gen_range(1..=u64::MAX)).collect()
}

/// `in(g·I)` for one coordinate change.
fn initial_after(ideal: &IdealPresentation, order: &TermOrder, g: &CoordinateChange, budget: &Budget) -> Result<GroebnerBasis> {
    let gens = g.apply_all(&ideal.generators);
    groebner_basis(&gens, ideal.variables(), order, budget)
}

/// The multigraded generic initial ideal, from `trials` independent random
/// coordinate changes that must agree. A disagreement triggers a fresh round;
/// after three rounds the error is `NonGeneric`. The result is checked to be
/// Borel-fixed.
pub fn gin(ideal: &IdealPresentation, order: &TermOrder, trials: usize, seed: u64) -> Result<MonomialIdeal> {
    gin_with_budget(ideal, order, trials, seed, &Budget::from_env())
}

pub fn gin_with_budget(
    ideal: &IdealPresentation,
    order: &TermOrder,
    trials: usize,
    seed: u64,
    budget: &Budget,
) -> Result<MonomialIdeal> {
    if !ideal.multigraded {
        return Err(Error::invalid("gin needs a multigraded ideal"));
    }
    ideal.check_desk_scale()?;
    let trials = trials.max(1);
    for round in 0..RETRIES {
        let seeds = trial_seeds(seed, round, trials);
        let results: Vec<MonomialIdeal> = seeds
            .par_iter()
            .map(|&s| {
                let g = random_coordinate_change(&ideal.grading, s);
                initial_after(ideal, order, &g, budget).map(|gb| gb.initial_ideal().clone())
            })
            .collect::<Result<_>>()?;
        if results.windows(2).all(|w| w[0] == w[1]) {
            let j = results.into_iter().next().expect("at least one trial");
            if seed != 0 && !is_borel_fixed(&j, &ideal.grading, order) {
                return Err(Error::NonGeneric);
            }
            return Ok(j);
        }
        if seed == 0 {
            break;
        }
    }
    Err(Error::NonGeneric)
}

/// Whether the gin is squarefree, i.e. whether `I` passes the
/// Cartwright–Sturmfels test for this coordinate change.
pub fn cs_witness(ideal: &IdealPresentation, order: &TermOrder, seed: u64) -> Result<bool> {
    Ok(gin(ideal, order, 2, seed)?.is_squarefree())
}

/// Every basis element has multidegree at most `(1,…,1)`.
pub fn gb_degree_bound_check(gb: &GroebnerBasis, grading: &Grading) -> bool {
    gb.basis().iter().all(|g| {
        g.monomials().all(|m| match grading.degree_of_monomial(m) {
            Ok(d) => d.iter().all(|&x| x <= 1),
            Err(_) => false,
        })
    })
}

/// Per-order verdicts: whether the leading terms of `claimed` generate the
/// initial ideal of `I`.
pub fn universal_gb_verdicts(
    ideal: &IdealPresentation,
    claimed: &[Polynomial],
    orders: &[TermOrder],
) -> Result<Vec<bool>> {
    let budget = Budget::from_env();
    orders
        .par_iter()
        .map(|order| {
            let gb = groebner_basis(&ideal.generators, ideal.variables(), order, &budget)?;
            let lead = MonomialIdeal::new(claimed.iter().filter_map(|f| f.leading_monomial(order).cloned()));
            Ok(&lead == gb.initial_ideal())
        })
        .collect()
}

pub fn universal_gb_sample_check(ideal: &IdealPresentation, claimed: &[Polynomial], orders: &[TermOrder]) -> Result<bool> {
    Ok(universal_gb_verdicts(ideal, claimed, orders)?.into_iter().all(|v| v))
}

/// `count` term orders on `vars`: lex, degrevlex, then weight orders with
/// positive random weights over random variable priorities.
pub fn sample_orders(vars: &[Variable], count: usize, seed: u64) -> Vec<TermOrder> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = vec![TermOrder::lex(), TermOrder::degrevlex()];
    while out.len() < count {
        let mut priority = vars.to_vec();
        priority.shuffle(&mut rng);
        let weights = vars.iter().map(|&v| (v, rng.gen_range(1..=9))).collect();
        let tiebreak = if rng.gen_bool(0.5) { Tiebreak::Lex } else { Tiebreak::DegRevLex };
        out.push(TermOrder::weighted(weights, tiebreak).with_priority(priority));
    }
    out.truncate(count);
    out
}
