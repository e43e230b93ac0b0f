use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use super::{Monomial, Variable};

/// Tiebreak used after comparing weights.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tiebreak {
    Lex,
    DegRevLex,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    DegRevLex,
    /// Compare the weight `Σ w(v)·e_v` first, then fall back to `tiebreak`.
    Weighted {
        weights: BTreeMap<Variable, i64>,
        tiebreak: Tiebreak,
    },
}

/// A monomial order: a kind plus a total order on the variables.
///
/// `priority` lists variables from largest to smallest. Variables not listed
/// rank below all listed ones, in the default convention: auxiliary
/// variables first, then `x(i,j)` row-major (`x(i,j) > x(k,l)` iff `i < k`, or
/// `i = k` and `j < l`), then `Z(1) > Z(2) > …`. Row-major priority puts
/// `x(0,j) > x(1,j) > … ` in every column and makes lex a diagonal order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TermOrder {
    pub kind: OrderKind,
    pub priority: Vec<Variable>,
}

impl Default for TermOrder {
    fn default() -> Self {
        TermOrder::lex()
    }
}

type RankKey = (u8, u32, u32);

fn default_rank(v: Variable) -> RankKey {
    match v {
        Variable::Aux(k) => (1, k as u32, 0),
        Variable::X { row, col } => (2, row as u32, col as u32),
        Variable::Z(j) => (3, j as u32, 0),
    }
}

impl TermOrder {
    pub fn lex() -> Self {
        TermOrder {
            kind: OrderKind::Lex,
            priority: Vec::new(),
        }
    }

    pub fn degrevlex() -> Self {
        TermOrder {
            kind: OrderKind::DegRevLex,
            priority: Vec::new(),
        }
    }

    pub fn weighted(weights: BTreeMap<Variable, i64>, tiebreak: Tiebreak) -> Self {
        TermOrder {
            kind: OrderKind::Weighted { weights, tiebreak },
            priority: Vec::new(),
        }
    }

    /// Elimination order for the variables in `eliminate`: they get weight 1,
    /// everything else weight 0, ties broken by degrevlex.
    pub fn elimination(eliminate: &[Variable]) -> Self {
        TermOrder::weighted(eliminate.iter().map(|&v| (v, 1)).collect(), Tiebreak::DegRevLex)
    }

    pub fn with_priority(mut self, priority: Vec<Variable>) -> Self {
        self.priority = priority;
        self
    }

    pub fn name(&self) -> &'static str {
        match self.kind {
            OrderKind::Lex => "lex",
            OrderKind::DegRevLex => "degrevlex",
            OrderKind::Weighted { .. } => "weighted",
        }
    }

    fn rank(&self, v: Variable) -> RankKey {
        match self.priority.iter().position(|&w| w == v) {
            Some(p) => (0, p as u32, 0),
            None => default_rank(v),
        }
    }

    /// `Greater` when `a` is the larger variable.
    pub fn compare_variables(&self, a: Variable, b: Variable) -> Ordering {
        self.rank(b).cmp(&self.rank(a))
    }

    /// The given variables sorted from largest to smallest.
    pub fn sort_variables(&self, vars: &mut [Variable]) {
        vars.sort_by_key(|&v| self.rank(v));
    }

    fn ranked(&self, m: &Monomial) -> Vec<(RankKey, u32)> {
        let mut r: Vec<_> = m.factors().iter().map(|&(v, e)| (self.rank(v), e)).collect();
        r.sort_unstable();
        r
    }

    fn weight(weights: &BTreeMap<Variable, i64>, m: &Monomial) -> i64 {
        m.factors()
            .iter()
            .map(|&(v, e)| weights.get(&v).copied().unwrap_or(0) * e as i64)
            .sum()
    }

    /// Compares two monomials; `Greater` means `a > b`.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match &self.kind {
            OrderKind::Lex => self.lex_cmp(a, b),
            OrderKind::DegRevLex => self.degrevlex_cmp(a, b),
            OrderKind::Weighted { weights, tiebreak } => Self::weight(weights, a)
                .cmp(&Self::weight(weights, b))
                .then_with(|| match tiebreak {
                    Tiebreak::Lex => self.lex_cmp(a, b),
                    Tiebreak::DegRevLex => self.degrevlex_cmp(a, b),
                }),
        }
    }

    fn lex_cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ra, rb) = (self.ranked(a), self.ranked(b));
        let (mut i, mut j) = (0, 0);
        while i < ra.len() && j < rb.len() {
            let (ka, ea) = ra[i];
            let (kb, eb) = rb[j];
            match ka.cmp(&kb) {
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => {
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        (ra.len() - i).cmp(&(rb.len() - j))
    }

    fn degrevlex_cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let deg = a.total_degree().cmp(&b.total_degree());
        if deg != Ordering::Equal {
            return deg;
        }
        let (ra, rb) = (self.ranked(a), self.ranked(b));
        let (mut i, mut j) = (ra.len(), rb.len());
        while i > 0 && j > 0 {
            let (ka, ea) = ra[i - 1];
            let (kb, eb) = rb[j - 1];
            match ka.cmp(&kb) {
                // a carries the smallest differing variable
                Ordering::Greater => return Ordering::Less,
                Ordering::Less => return Ordering::Greater,
                Ordering::Equal => {
                    if ea != eb {
                        return eb.cmp(&ea);
                    }
                    i -= 1;
                    j -= 1;
                }
            }
        }
        j.cmp(&i)
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())?;
        if !self.priority.is_empty() {
            let vs: Vec<String> = self.priority.iter().map(|v| v.to_string()).collect();
            write!(f, " [{}]", vs.join(" > "))?;
        }
        Ok(())
    }
}
