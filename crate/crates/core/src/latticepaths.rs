//! Monotone lattice paths in the `[m]×[n]` grid and non-intersecting path
//! families. A step either increases the row or decreases the column; the
//! weight of a path is `Z^{c(P)}` where `c_j(P)` counts its points in column `j`.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::poly::{det, Monomial, Polynomial, Variable};
use crate::symfunc::complete_homogeneous;

/// A grid point `(row, column)`.
pub type Point = (u16, u16);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePath {
    pub points: Vec<Point>,
}

impl LatticePath {
    /// Points per column `1..=n`.
    pub fn column_counts(&self, n: usize) -> Vec<u32> {
        let mut c = vec![0; n];
        for &(_, col) in &self.points {
            c[col as usize - 1] += 1;
        }
        c
    }

    pub fn weight(&self, n: usize) -> Monomial {
        Monomial::z_power(&self.column_counts(n))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PathFamily {
    pub paths: Vec<LatticePath>,
}

impl PathFamily {
    pub fn column_counts(&self, n: usize) -> Vec<u32> {
        let mut c = vec![0; n];
        for p in &self.paths {
            for (a, b) in c.iter_mut().zip(p.column_counts(n)) {
                *a += b;
            }
        }
        c
    }

    pub fn weight(&self, n: usize) -> Monomial {
        Monomial::z_power(&self.column_counts(n))
    }

    /// The union of the paths as grid variables `x(row, col)`, sorted.
    pub fn vertices(&self) -> Vec<Variable> {
        let mut v: Vec<Variable> = self
            .paths
            .iter()
            .flat_map(|p| p.points.iter().map(|&(r, c)| Variable::x(r, c)))
            .collect();
        v.sort();
        v
    }
}

fn check_reachable(p: Point, q: Point) -> Result<()> {
    if p.0 > q.0 || p.1 < q.1 || p.0 == 0 || q.1 == 0 {
        return Err(Error::invalid(format!("{q:?} is not reachable from {p:?}")));
    }
    Ok(())
}

fn paths_avoiding(p: Point, q: Point, occupied: &HashSet<Point>, visit: &mut dyn FnMut(&[Point])) {
    fn rec(cur: &mut Vec<Point>, q: Point, occupied: &HashSet<Point>, visit: &mut dyn FnMut(&[Point])) {
        let (r, c) = *cur.last().expect("nonempty");
        if (r, c) == q {
            visit(cur);
            return;
        }
        for next in [(r + 1, c), (r, c.wrapping_sub(1))] {
            if next.0 <= q.0 && next.1 >= q.1 && next.1 != u16::MAX && !occupied.contains(&next) {
                cur.push(next);
                rec(cur, q, occupied, visit);
                cur.pop();
            }
        }
    }
    if occupied.contains(&p) {
        return;
    }
    rec(&mut vec![p], q, occupied, visit);
}

/// All paths from `p` to `q`, ordered by their column-count vectors.
pub fn enumerate_paths(p: Point, q: Point) -> Result<Vec<LatticePath>> {
    check_reachable(p, q)?;
    let n = p.1 as usize;
    let mut out = Vec::new();
    paths_avoiding(p, q, &HashSet::new(), &mut |pts| {
        out.push(LatticePath { points: pts.to_vec() })
    });
    out.sort_by_cached_key(|path| path.column_counts(n));
    Ok(out)
}

/// `(∏_{i=d}^{b} Z_i) · h_{c−a}(Z_d..Z_b)` for `p = (a,b)`, `q = (c,d)`.
pub fn path_genfun(p: Point, q: Point, n: usize) -> Result<Polynomial> {
    check_reachable(p, q)?;
    if p.1 as usize > n {
        return Err(Error::invalid(format!("column {} exceeds n = {n}", p.1)));
    }
    let (a, b) = p;
    let (c, d) = q;
    Ok(Polynomial::z_product(d..=b) * complete_homogeneous((c - a) as i64, d..=b))
}

/// Starting and ending points `p_k = (k, n)`, `q_k = (m, k)`, `k = 1..t−1`.
pub fn pipe_endpoints(m: u16, n: u16, t: u16) -> (Vec<Point>, Vec<Point>) {
    let starts = (1..t).map(|k| (k, n)).collect();
    let ends = (1..t).map(|k| (m, k)).collect();
    (starts, ends)
}

/// All vertex-disjoint families joining `starts[i]` to `ends[i]`, ordered by
/// column-count vector and then by the individual paths' vectors.
pub fn enumerate_nonintersecting(starts: &[Point], ends: &[Point]) -> Vec<PathFamily> {
    if starts.len() != ends.len() || starts.iter().zip(ends).any(|(&p, &q)| check_reachable(p, q).is_err()) {
        return Vec::new();
    }
    if starts.is_empty() {
        return vec![PathFamily { paths: Vec::new() }];
    }
    let n = starts.iter().chain(ends).map(|p| p.1).max().unwrap_or(0) as usize;

    fn rec(
        k: usize,
        starts: &[Point],
        ends: &[Point],
        occupied: &mut HashSet<Point>,
        chosen: &mut Vec<LatticePath>,
        out: &mut Vec<PathFamily>,
    ) {
        if k == starts.len() {
            out.push(PathFamily { paths: chosen.clone() });
            return;
        }
        let mut options = Vec::new();
        paths_avoiding(starts[k], ends[k], occupied, &mut |pts| options.push(pts.to_vec()));
        for pts in options {
            occupied.extend(pts.iter().copied());
            chosen.push(LatticePath { points: pts });
            rec(k + 1, starts, ends, occupied, chosen, out);
            let path = chosen.pop().expect("pushed");
            for pt in &path.points {
                occupied.remove(pt);
            }
        }
    }

    let mut first = Vec::new();
    paths_avoiding(starts[0], ends[0], &HashSet::new(), &mut |pts| first.push(pts.to_vec()));
    let mut out: Vec<PathFamily> = first
        .into_par_iter()
        .flat_map_iter(|pts| {
            let mut occupied: HashSet<Point> = pts.iter().copied().collect();
            let mut chosen = vec![LatticePath { points: pts }];
            let mut local = Vec::new();
            rec(1, starts, ends, &mut occupied, &mut chosen, &mut local);
            local
        })
        .collect();
    out.sort_by_cached_key(|f| {
        (
            f.column_counts(n),
            f.paths.iter().map(|p| p.column_counts(n)).collect::<Vec<_>>(),
        )
    });
    out
}

/// `Σ_F Z^{c(F)}` over all non-intersecting families.
pub fn family_genfun(starts: &[Point], ends: &[Point], n: usize) -> Polynomial {
    let mut out = Polynomial::zero();
    for f in enumerate_nonintersecting(starts, ends) {
        out.add_term(f.weight(n), crate::poly::rat(1));
    }
    out
}

/// `det(path_genfun(p_i, q_j))`; unreachable pairs contribute 0.
pub fn gv_genfun(starts: &[Point], ends: &[Point], n: usize) -> Polynomial {
    if starts.is_empty() {
        return Polynomial::one();
    }
    let matrix: Vec<Vec<Polynomial>> = starts
        .iter()
        .map(|&p| {
            ends.iter()
                .map(|&q| path_genfun(p, q, n).unwrap_or_else(|_| Polynomial::zero()))
                .collect()
        })
        .collect();
    det(&matrix).unwrap_or_else(|_| Polynomial::zero())
}
