//! Fraction-free Buchberger over a dense exponent representation.
//!
//! Variables are indexed by decreasing priority, so lex is plain array
//! comparison. Polynomials are primitive integer polynomials with terms sorted
//! decreasingly; every reduction result is content-stripped.

use std::cmp::Ordering;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{Monomial, OrderKind, Polynomial, TermOrder, Tiebreak, Variable};

pub(crate) const MAX_VARS: usize = 32;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub(crate) struct Mono {
    e: [u8; MAX_VARS],
    mask: u32,
    deg: u32,
    w: i64,
}

impl Mono {
    fn divides(&self, other: &Mono) -> bool {
        self.mask & !other.mask == 0 && self.e.iter().zip(&other.e).all(|(a, b)| a <= b)
    }

    fn mul(&self, other: &Mono) -> Mono {
        let mut e = [0u8; MAX_VARS];
        for ((x, a), b) in e.iter_mut().zip(&self.e).zip(&other.e) {
            *x = a.checked_add(*b).expect("exponent overflow");
        }
        Mono {
            e,
            mask: self.mask | other.mask,
            deg: self.deg + other.deg,
            w: self.w + other.w,
        }
    }

    /// `other / self`; requires divisibility.
    fn quotient_of(&self, other: &Mono, weights: &[i64]) -> Mono {
        let mut e = [0u8; MAX_VARS];
        for ((x, a), b) in e.iter_mut().zip(&other.e).zip(&self.e) {
            *x = a - b;
        }
        Mono::from_exps(e, weights)
    }

    fn lcm(&self, other: &Mono, weights: &[i64]) -> Mono {
        let mut e = [0u8; MAX_VARS];
        for ((x, a), b) in e.iter_mut().zip(&self.e).zip(&other.e) {
            *x = *a.max(b);
        }
        Mono::from_exps(e, weights)
    }

    fn coprime(&self, other: &Mono) -> bool {
        self.mask & other.mask == 0
    }

    fn from_exps(e: [u8; MAX_VARS], weights: &[i64]) -> Mono {
        let mut mask = 0u32;
        let mut deg = 0u32;
        let mut w = 0i64;
        for (k, &x) in e.iter().enumerate() {
            if x > 0 {
                mask |= 1 << k;
                deg += x as u32;
                w += weights.get(k).copied().unwrap_or(0) * x as i64;
            }
        }
        Mono { e, mask, deg, w }
    }
}

pub(crate) type Term = (Mono, BigInt);
pub(crate) type IPoly = Vec<Term>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Lex,
    DegRevLex,
    WeightedLex,
    WeightedDrl,
}

/// Wall-clock budget for one computation.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    start: Instant,
    limit: Duration,
}

impl Budget {
    pub fn new(limit: Duration) -> Self {
        Budget {
            start: Instant::now(),
            limit,
        }
    }

    /// `MDLAB_BUDGET_SECS` or 300 seconds.
    pub fn from_env() -> Self {
        let secs = std::env::var("MDLAB_BUDGET_SECS")
            .ok()
            .and_then(|s| s.parse::<f64>().ok())
            .filter(|s| *s > 0.0)
            .unwrap_or(300.0);
        Budget::new(Duration::from_secs_f64(secs))
    }

    pub fn check(&self) -> Result<()> {
        if self.start.elapsed() > self.limit {
            return Err(Error::DeskScaleExceeded(format!(
                "Gröbner computation exceeded its budget of {:.0} s",
                self.limit.as_secs_f64()
            )));
        }
        Ok(())
    }
}

/// A polynomial ring with a compiled monomial order.
#[derive(Clone, Debug)]
pub(crate) struct Ring {
    pub vars: Vec<Variable>,
    kind: Kind,
    weights: Vec<i64>,
}

impl Ring {
    pub fn new(order: &TermOrder, mut vars: Vec<Variable>) -> Result<Self> {
        vars.sort();
        vars.dedup();
        if vars.len() > MAX_VARS {
            return Err(Error::DeskScaleExceeded(format!(
                "{} variables exceed the engine limit of {MAX_VARS}",
                vars.len()
            )));
        }
        order.sort_variables(&mut vars);
        let (kind, weights) = match &order.kind {
            OrderKind::Lex => (Kind::Lex, Vec::new()),
            OrderKind::DegRevLex => (Kind::DegRevLex, Vec::new()),
            OrderKind::Weighted { weights, tiebreak } => {
                let w = vars.iter().map(|v| weights.get(v).copied().unwrap_or(0)).collect();
                let k = match tiebreak {
                    Tiebreak::Lex => Kind::WeightedLex,
                    Tiebreak::DegRevLex => Kind::WeightedDrl,
                };
                (k, w)
            }
        };
        Ok(Ring { vars, kind, weights })
    }

    pub fn cmp(&self, a: &Mono, b: &Mono) -> Ordering {
        let drl = |a: &Mono, b: &Mono| {
            a.deg.cmp(&b.deg).then_with(|| {
                for k in (0..self.vars.len()).rev() {
                    if a.e[k] != b.e[k] {
                        return b.e[k].cmp(&a.e[k]);
                    }
                }
                Ordering::Equal
            })
        };
        match self.kind {
            Kind::Lex => a.e.cmp(&b.e),
            Kind::DegRevLex => drl(a, b),
            Kind::WeightedLex => a.w.cmp(&b.w).then_with(|| a.e.cmp(&b.e)),
            Kind::WeightedDrl => a.w.cmp(&b.w).then_with(|| drl(a, b)),
        }
    }

    pub fn mono(&self, m: &Monomial) -> Result<Mono> {
        let mut e = [0u8; MAX_VARS];
        for &(v, x) in m.factors() {
            let k = self
                .vars
                .iter()
                .position(|&w| w == v)
                .ok_or(Error::UnknownVariable(v))?;
            e[k] = u8::try_from(x).map_err(|_| Error::invalid("exponent above 255"))?;
        }
        Ok(Mono::from_exps(e, &self.weights))
    }

    pub fn monomial(&self, m: &Mono) -> Monomial {
        Monomial::from_pairs((0..self.vars.len()).map(|k| (self.vars[k], m.e[k] as u32)))
    }

    /// Returns `(scale·f, scale)` with `scale·f` primitive and integral.
    pub fn to_internal(&self, f: &Polynomial) -> Result<(IPoly, BigRational)> {
        let den = f.terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let mut out: IPoly = Vec::with_capacity(f.num_terms());
        for (m, c) in f.terms() {
            out.push((self.mono(m)?, (c * BigRational::from_integer(den.clone())).to_integer()));
        }
        out.sort_by(|a, b| self.cmp(&b.0, &a.0));
        let content = content(&out);
        let mut scale = BigRational::from_integer(den);
        if !content.is_zero() && !content.is_one() {
            for t in out.iter_mut() {
                t.1 /= &content;
            }
            scale /= BigRational::from_integer(content);
        }
        Ok((out, scale))
    }

    pub fn to_poly(&self, f: &[Term]) -> Polynomial {
        Polynomial::from_terms(f.iter().map(|(m, c)| (self.monomial(m), BigRational::from_integer(c.clone()))))
    }

    /// The same polynomial scaled to leading coefficient 1.
    pub fn to_monic(&self, f: &[Term]) -> Polynomial {
        match f.first() {
            None => Polynomial::zero(),
            Some((_, lc)) => {
                let lc = BigRational::from_integer(lc.clone());
                Polynomial::from_terms(
                    f.iter()
                        .map(|(m, c)| (self.monomial(m), BigRational::from_integer(c.clone()) / &lc)),
                )
            }
        }
    }

    /// `a·f − b·q·g`, both sorted decreasingly.
    fn combine(&self, a: &BigInt, f: &[Term], b: &BigInt, q: &Mono, g: &[Term]) -> IPoly {
        let mut out = Vec::with_capacity(f.len() + g.len());
        let (mut i, mut j) = (0, 0);
        let shifted = |j: usize| q.mul(&g[j].0);
        let mut gm = if g.is_empty() { None } else { Some(shifted(0)) };
        while i < f.len() || gm.is_some() {
            let ord = match (&f.get(i), &gm) {
                (Some(ft), Some(gmj)) => self.cmp(&ft.0, gmj),
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (None, None) => unreachable!(),
            };
            match ord {
                Ordering::Greater => {
                    out.push((f[i].0, a * &f[i].1));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((gm.expect("present"), -(b * &g[j].1)));
                    j += 1;
                    gm = (j < g.len()).then(|| shifted(j));
                }
                Ordering::Equal => {
                    let c = a * &f[i].1 - b * &g[j].1;
                    if !c.is_zero() {
                        out.push((f[i].0, c));
                    }
                    i += 1;
                    j += 1;
                    gm = (j < g.len()).then(|| shifted(j));
                }
            }
        }
        out
    }

    /// Fraction-free reduction of `f` by `basis`. Returns the remainder `r`
    /// and `μ` with `r ≡ μ·f` modulo the ideal. With `full` unset only the
    /// head is reduced.
    pub fn reduce(&self, mut f: IPoly, basis: &[&IPoly], full: bool, budget: &Budget) -> Result<(IPoly, BigRational)> {
        let mut mu = BigRational::one();
        let mut i = 0;
        let mut steps = 0u64;
        while i < f.len() {
            let m = f[i].0;
            let reducer = basis
                .iter()
                .filter(|g| g[0].0.divides(&m))
                .min_by_key(|g| g.len());
            let Some(g) = reducer else {
                if !full {
                    break;
                }
                i += 1;
                continue;
            };
            let q = g[0].0.quotient_of(&m, &self.weights);
            let gcd = f[i].1.gcd(&g[0].1);
            let mut a = &g[0].1 / &gcd;
            let mut b = &f[i].1 / &gcd;
            if a.is_negative() {
                a = -a;
                b = -b;
            }
            let tail = self.combine(&a, &f[i + 1..], &b, &q, &g[1..]);
            if !a.is_one() {
                for t in f[..i].iter_mut() {
                    t.1 *= &a;
                }
                mu *= BigRational::from_integer(a);
            }
            f.truncate(i);
            f.extend(tail);
            steps += 1;
            if steps.is_multiple_of(16) {
                mu /= BigRational::from_integer(make_primitive(&mut f));
                budget.check()?;
            }
        }
        let c = make_primitive(&mut f);
        mu /= BigRational::from_integer(c);
        Ok((f, mu))
    }

    /// Buchberger's criterion on `polys` as given: every S-pair whose leading
    /// monomials are not coprime top-reduces to zero modulo `polys`.
    pub fn satisfies_buchberger_criterion(&self, polys: &[IPoly], budget: &Budget) -> Result<bool> {
        let refs: Vec<&IPoly> = polys.iter().filter(|p| !p.is_empty()).collect();
        for (k, f) in refs.iter().enumerate() {
            for g in &refs[k + 1..] {
                if f[0].0.coprime(&g[0].0) {
                    continue;
                }
                let (r, _) = self.reduce(self.spoly(f, g), &refs, false, budget)?;
                if !r.is_empty() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    fn spoly(&self, f: &IPoly, g: &IPoly) -> IPoly {
        let l = f[0].0.lcm(&g[0].0, &self.weights);
        let qf = f[0].0.quotient_of(&l, &self.weights);
        let qg = g[0].0.quotient_of(&l, &self.weights);
        let gcd = f[0].1.gcd(&g[0].1);
        let a = &g[0].1 / &gcd;
        let b = &f[0].1 / &gcd;
        let fq: IPoly = f[1..].iter().map(|(m, c)| (qf.mul(m), c.clone())).collect();
        let mut s = self.combine(&a, &fq, &b, &qg, &g[1..]);
        make_primitive(&mut s);
        s
    }

    /// The reduced Gröbner basis of the given primitive polynomials, sorted
    /// by increasing leading monomial, each with positive leading coefficient.
    pub fn groebner(&self, input: Vec<IPoly>, budget: &Budget) -> Result<Vec<IPoly>> {
        let mut polys: Vec<IPoly> = Vec::new();
        let mut sugar: Vec<u32> = Vec::new();
        let mut active: Vec<bool> = Vec::new();
        let mut pairs: Vec<Pair> = Vec::new();

        let mut input: Vec<IPoly> = input.into_iter().filter(|p| !p.is_empty()).collect();
        input.sort_by(|a, b| self.cmp(&a[0].0, &b[0].0));
        for p in input {
            let s = p.iter().map(|t| t.0.deg).max().unwrap_or(0);
            let (r, _) = {
                let basis: Vec<&IPoly> = active_refs(&polys, &active);
                self.reduce(p, &basis, false, budget)?
            };
            if r.is_empty() {
                continue;
            }
            self.insert(normalize_sign(r), s, &mut polys, &mut sugar, &mut active, &mut pairs);
        }

        while !pairs.is_empty() {
            budget.check()?;
            let k = (0..pairs.len())
                .min_by(|&x, &y| {
                    pairs[x]
                        .sugar
                        .cmp(&pairs[y].sugar)
                        .then_with(|| self.cmp(&pairs[x].lcm, &pairs[y].lcm))
                })
                .expect("nonempty");
            let pair = pairs.swap_remove(k);
            let s = self.spoly(&polys[pair.i], &polys[pair.j]);
            let basis = active_refs(&polys, &active);
            let (r, _) = self.reduce(s, &basis, false, budget)?;
            if r.is_empty() {
                continue;
            }
            self.insert(normalize_sign(r), pair.sugar, &mut polys, &mut sugar, &mut active, &mut pairs);
        }

        // minimal basis, then tail reduction
        let mut minimal: Vec<IPoly> = Vec::new();
        let mut candidates: Vec<&IPoly> = polys.iter().zip(&active).filter(|(_, &a)| a).map(|(p, _)| p).collect();
        candidates.sort_by(|a, b| self.cmp(&a[0].0, &b[0].0));
        for p in candidates {
            if !minimal.iter().any(|g| g[0].0.divides(&p[0].0)) {
                minimal.push(p.clone());
            }
        }
        let mut reduced = Vec::with_capacity(minimal.len());
        for k in 0..minimal.len() {
            let others: Vec<&IPoly> = minimal.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, g)| g).collect();
            let (whole, _) = self.reduce_tail(&minimal[k], &others, budget)?;
            reduced.push(whole);
        }
        reduced.sort_by(|a, b| self.cmp(&a[0].0, &b[0].0));
        Ok(reduced)
    }

    /// Reduces every non-leading term of `f`, keeping the head.
    fn reduce_tail(&self, f: &IPoly, basis: &[&IPoly], budget: &Budget) -> Result<(IPoly, BigRational)> {
        let mut out = f.clone();
        let mut mu = BigRational::one();
        let mut i = 1;
        let mut steps = 0u64;
        while i < out.len() {
            let m = out[i].0;
            let Some(g) = basis.iter().filter(|g| g[0].0.divides(&m)).min_by_key(|g| g.len()) else {
                i += 1;
                continue;
            };
            let q = g[0].0.quotient_of(&m, &self.weights);
            let gcd = out[i].1.gcd(&g[0].1);
            let mut a = &g[0].1 / &gcd;
            let mut b = &out[i].1 / &gcd;
            if a.is_negative() {
                a = -a;
                b = -b;
            }
            let tail = self.combine(&a, &out[i + 1..], &b, &q, &g[1..]);
            if !a.is_one() {
                for t in out[..i].iter_mut() {
                    t.1 *= &a;
                }
                mu *= BigRational::from_integer(a);
            }
            out.truncate(i);
            out.extend(tail);
            steps += 1;
            if steps.is_multiple_of(16) {
                mu /= BigRational::from_integer(make_primitive(&mut out));
                budget.check()?;
            }
        }
        mu /= BigRational::from_integer(make_primitive(&mut out));
        Ok((out, mu))
    }

    /// Gebauer–Möller update for a new basis element.
    fn insert(
        &self,
        h: IPoly,
        h_sugar: u32,
        polys: &mut Vec<IPoly>,
        sugar: &mut Vec<u32>,
        active: &mut Vec<bool>,
        pairs: &mut Vec<Pair>,
    ) {
        let hk = polys.len();
        let lh = h[0].0;
        let w = &self.weights;
        let pair_sugar = |j: usize, l: &Mono, polys: &Vec<IPoly>, sugar: &Vec<u32>| {
            let lj = polys[j][0].0;
            let a = sugar[j] + l.deg - lj.deg;
            let b = h_sugar + l.deg - lh.deg;
            a.max(b)
        };
        // candidate pairs (j, h) with their lcms
        let cands: Vec<(usize, Mono)> = (0..polys.len())
            .filter(|&j| active[j])
            .map(|j| (j, polys[j][0].0.lcm(&lh, w)))
            .collect();
        // criterion M: drop (j,h) if some other lcm properly divides it;
        // criterion F: keep one pair per equal lcm, preferring a coprime one
        let mut kept: Vec<(usize, Mono)> = Vec::new();
        for (idx, &(j, l)) in cands.iter().enumerate() {
            let dominated = cands
                .iter()
                .any(|&(_, l2)| l2 != l && l2.divides(&l));
            if dominated {
                continue;
            }
            let equal: Vec<usize> = cands
                .iter()
                .enumerate()
                .filter(|&(_, &(_, l2))| l2 == l)
                .map(|(k, _)| k)
                .collect();
            let coprime_exists = equal.iter().any(|&k| polys[cands[k].0][0].0.coprime(&lh));
            if coprime_exists {
                // the whole class is redundant
                continue;
            }
            if equal[0] == idx {
                kept.push((j, l));
            }
        }
        // criterion B on the old pairs
        pairs.retain(|p| {
            !(lh.divides(&p.lcm)
                && polys[p.i][0].0.lcm(&lh, w) != p.lcm
                && polys[p.j][0].0.lcm(&lh, w) != p.lcm)
        });
        for (j, l) in kept {
            let s = pair_sugar(j, &l, polys, sugar);
            pairs.push(Pair { i: j, j: hk, lcm: l, sugar: s });
        }
        for j in 0..polys.len() {
            if active[j] && lh.divides(&polys[j][0].0) {
                active[j] = false;
            }
        }
        polys.push(h);
        sugar.push(h_sugar);
        active.push(true);
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Mono,
    sugar: u32,
}

fn active_refs<'a>(polys: &'a [IPoly], active: &[bool]) -> Vec<&'a IPoly> {
    polys.iter().zip(active).filter(|(_, &a)| a).map(|(p, _)| p).collect()
}

fn normalize_sign(mut f: IPoly) -> IPoly {
    if f.first().is_some_and(|t| t.1.is_negative()) {
        for t in f.iter_mut() {
            t.1 = -std::mem::take(&mut t.1);
        }
    }
    f
}

fn content(f: &[Term]) -> BigInt {
    let mut g = BigInt::zero();
    for (_, c) in f {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Divides out the content; returns it (1 for the zero polynomial).
fn make_primitive(f: &mut IPoly) -> BigInt {
    let c = content(f);
    if c.is_zero() || c.is_one() {
        return BigInt::one();
    }
    for t in f.iter_mut() {
        t.1 /= &c;
    }
    c
}
