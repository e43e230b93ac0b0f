//! Multidegrees of generic determinantal rings `S/I_t(X)` under the column
//! grading `deg x(i,j) = e_j`, by three independent routes, and the
//! Cartwright–Sturmfels classification.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::hilbert::{MultidegreeData, SimplicialComplex};
use crate::latticepaths::{enumerate_nonintersecting, pipe_endpoints};
use crate::poly::{det, minors, rat, variable_matrix, Grading, Monomial, Polynomial, Variable};
use crate::symfunc::{complete_homogeneous, kostka, schur, Partition};

/// Largest grid the paths route enumerates by default.
pub const PATHS_CAP: (u16, u16, u16) = (5, 5, 4);

/// `t`-minors of a generic `m × n` matrix; `1 ≤ t ≤ min(m, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DetSpec {
    pub m: u16,
    pub n: u16,
    pub t: u16,
}

impl DetSpec {
    pub fn new(m: u16, n: u16, t: u16) -> Result<Self> {
        if t < 1 || t > m.min(n) {
            return Err(Error::invalid(format!("need 1 <= t <= min(m, n), got m={m} n={n} t={t}")));
        }
        Ok(DetSpec { m, n, t })
    }

    /// `ℓ = m + 1 − t`.
    pub fn ell(&self) -> u16 {
        self.m + 1 - self.t
    }

    /// `λ = ℓ^(t−1)`.
    pub fn lambda(&self) -> Partition {
        Partition::rectangle(self.ell() as u32, self.t as usize - 1)
    }

    /// Total degree of the multidegree: `(t−1)ℓ + n(t−2)`.
    pub fn degree(&self) -> u32 {
        (self.t as u32 - 1) * self.ell() as u32 + self.n as u32 * (self.t as u32 - 2)
    }

    pub fn grading(&self) -> Grading {
        Grading::grid(1..=self.m, self.n)
    }

    /// The generators of `I_t(X)`.
    pub fn generators(&self) -> Vec<Polynomial> {
        minors(&variable_matrix(self.m, self.n), self.t as usize)
    }

    fn require_multidegree_range(&self) -> Result<()> {
        if self.t < 2 {
            return Err(Error::invalid("multidegree routes need t >= 2"));
        }
        Ok(())
    }

    /// `(Z_1⋯Z_n)^{t−2}`; the empty product when `t = 2`.
    fn prefactor(&self) -> Polynomial {
        Polynomial::z_product(1..=self.n).pow(self.t as u32 - 2)
    }
}

impl fmt::Display for DetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "I_{}({}x{})", self.t, self.m, self.n)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    Closed,
    Schur,
    Paths,
}

impl Route {
    pub const ALL: [Route; 3] = [Route::Closed, Route::Schur, Route::Paths];

    pub fn name(&self) -> &'static str {
        match self {
            Route::Closed => "closed",
            Route::Schur => "schur",
            Route::Paths => "paths",
        }
    }
}

impl FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "closed" => Ok(Route::Closed),
            "schur" => Ok(Route::Schur),
            "paths" => Ok(Route::Paths),
            _ => Err(Error::invalid(format!("unknown route '{s}' (closed, schur, paths)"))),
        }
    }
}

/// The complex `Π_t`: facets are the vertex sets of non-intersecting families
/// from `p_k = (k, n)` to `q_k = (m, k)`.
pub fn pipe_complex(spec: &DetSpec) -> Result<SimplicialComplex> {
    spec.require_multidegree_range()?;
    let (starts, ends) = pipe_endpoints(spec.m, spec.n, spec.t);
    let facets: Vec<Vec<Variable>> = enumerate_nonintersecting(&starts, &ends)
        .iter()
        .map(|f| f.vertices())
        .collect();
    SimplicialComplex::from_facets(spec.grading().variables().collect(), &facets)
}

/// `Deg(S/I_t(X))` by the requested route, with the paths route capped at
/// [`PATHS_CAP`].
pub fn det_multidegree(spec: &DetSpec, route: Route) -> Result<MultidegreeData> {
    det_multidegree_capped(spec, route, Some(PATHS_CAP))
}

/// As [`det_multidegree`] with an explicit cap `(m, n, t)` on the paths route;
/// `None` lifts it.
pub fn det_multidegree_capped(spec: &DetSpec, route: Route, cap: Option<(u16, u16, u16)>) -> Result<MultidegreeData> {
    spec.require_multidegree_range()?;
    let n = spec.n as usize;
    let poly = match route {
        Route::Closed => {
            let r = spec.t as usize - 1;
            let ell = spec.ell() as i64;
            let matrix: Vec<Vec<Polynomial>> = (1..=r as i64)
                .map(|i| {
                    (1..=r as i64)
                        .map(|j| complete_homogeneous(ell - i + j, 1..=spec.n))
                        .collect()
                })
                .collect();
            spec.prefactor() * det(&matrix)?
        }
        Route::Schur => spec.prefactor() * schur(&spec.lambda(), n),
        Route::Paths => {
            if let Some((cm, cn, ct)) = cap {
                if spec.m > cm || spec.n > cn || spec.t > ct {
                    return Err(Error::DeskScaleExceeded(format!(
                        "paths route is capped at m,n <= {cm}, t <= {ct}; use closed or schur for {spec}"
                    )));
                }
            }
            let (starts, ends) = pipe_endpoints(spec.m, spec.n, spec.t);
            let mut p = Polynomial::zero();
            for f in enumerate_nonintersecting(&starts, &ends) {
                // every column carries at least t−1 >= 1 points
                let b: Vec<u32> = f.column_counts(n).iter().map(|&c| c - 1).collect();
                p.add_term(Monomial::z_power(&b), rat(1));
            }
            p
        }
    };
    MultidegreeData::from_polynomial(poly, n)
}

/// `e_b = K_{λ,μ}` with `μ_i = b_i − (t−2)`.
pub fn det_e_b(spec: &DetSpec, b: &[u32]) -> Result<u64> {
    spec.require_multidegree_range()?;
    if b.len() != spec.n as usize {
        return Err(Error::invalid(format!("b must have {} entries", spec.n)));
    }
    if b.iter().sum::<u32>() != spec.degree() {
        return Err(Error::invalid(format!("|b| must equal {}", spec.degree())));
    }
    let shift = spec.t as u32 - 2;
    if b.iter().any(|&x| x < shift) {
        return Ok(0);
    }
    let mu: Vec<u32> = b.iter().map(|&x| x - shift).collect();
    kostka(&spec.lambda(), &mu)
}

/// Whether `I_t(X)` is Cartwright–Sturmfels: `t ∈ {1, 2, min(m, n)}`.
pub fn classify_cs(spec: &DetSpec) -> bool {
    spec.t <= 2 || spec.t == spec.m.min(spec.n)
}
