//! Phase-valued group cochains, coboundary maps, cocycle verification
//! and the constructive pseudo-trivialization.
//!
//! An `n`-cochain assigns a unit-modulus value to a base point `q`
//! (the function argument of the coefficient module `C(X;𝕋)`) and `n`
//! group elements. The coboundary of an `n`-cochain is
//!
//! ```text
//! [δⁿρ](q; x₁,…,x_{n+1}) = ρ(q+x₁; x₂,…,x_{n+1})
//!     · ∏_{j=1}^{n} ρ(q; x₁,…,x_j+x_{j+1},…,x_{n+1})^{(-1)^j}
//!     · ρ(q; x₁,…,x_n)^{(-1)^{n+1}}
//! ```
//!
//! so `δ⁰` measures the translation defect of a phase function and
//! `ker δ²` is exactly the set of 2-cocycles that twist the crossed
//! products in [`crate::crossed`]. Every cocycle over the module
//! `C(X;𝕋)` is a coboundary; [`pseudo_trivialize`] computes the
//! witness `ρ^{n-1}(q; z₁,…) = ρⁿ(0; q, z₁,…)` explicitly.
//!
//! Cochains are lazy function objects, not grid tensors: a dense
//! degree-2 table on a 32² grid would already hold ~10⁹ entries, while
//! every identity test only needs sampled evaluations.

use std::sync::Arc;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::grid::BoxGrid;
use crate::{c64, C64, Error, Result};

type CochainFn = dyn Fn(&[f64], &[Vec<f64>]) -> C64 + Send + Sync;

/// Unit-modulus `n`-cochain as a lazy evaluation map.
#[derive(Clone)]
pub struct PhaseCochain {
    degree: usize,
    eval: Arc<CochainFn>,
}

impl std::fmt::Debug for PhaseCochain {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PhaseCochain").field("degree", &self.degree).finish()
    }
}

/// Renormalize a product of phases back to unit modulus; long products
/// otherwise drift past 1e-12.
#[inline]
pub fn unit(z: C64) -> C64 {
    let n = z.norm();
    if n == 0.0 {
        c64(1.0, 0.0)
    } else {
        z / n
    }
}

impl PhaseCochain {
    /// Wrap an evaluation map. The map must already produce unit-modulus
    /// values; [`PhaseCochain::eval`] renormalizes defensively.
    pub fn from_fn(
        degree: usize,
        eval: impl Fn(&[f64], &[Vec<f64>]) -> C64 + Send + Sync + 'static,
    ) -> Self {
        PhaseCochain { degree, eval: Arc::new(eval) }
    }

    /// The constant cochain `1` of any degree.
    pub fn one(degree: usize) -> Self {
        PhaseCochain::from_fn(degree, |_, _| c64(1.0, 0.0))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn eval(&self, q: &[f64], args: &[Vec<f64>]) -> C64 {
        debug_assert_eq!(args.len(), self.degree, "cochain degree mismatch");
        unit((self.eval)(q, args))
    }

    /// Pointwise product (degrees must match).
    pub fn product(&self, other: &PhaseCochain) -> PhaseCochain {
        assert_eq!(self.degree, other.degree);
        let a = self.clone();
        let b = other.clone();
        PhaseCochain::from_fn(self.degree, move |q, args| a.eval(q, args) * b.eval(q, args))
    }

    /// Pointwise inverse, i.e. complex conjugate on the unit circle.
    pub fn inverse(&self) -> PhaseCochain {
        let a = self.clone();
        PhaseCochain::from_fn(self.degree, move |q, args| a.eval(q, args).conj())
    }

    /// Random table-backed cochain on an exact-group grid. Degree-1
    /// tables are normalized so that `λ(q; 0) = 1`.
    pub fn random_table(grid: &BoxGrid, degree: usize, seed: u64) -> Self {
        assert!(degree <= 2, "random tables are kept small");
        let n = grid.len();
        let entries = n.pow(degree as u32 + 1);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut table = Vec::with_capacity(entries);
        for _ in 0..entries {
            table.push(C64::cis(rng.gen_range(0.0..std::f64::consts::TAU)));
        }
        if degree >= 1 {
            // entries whose *last* group argument is 0 are pinned to 1,
            // so derived 2-coboundaries come out normalized
            let zero = vec![0i64; grid.dimension()];
            let zero_lin = grid.linear_index(&zero);
            let block = n.pow(degree as u32 - 1);
            for rest in 0..n * block {
                let q = rest / block;
                let mid = rest % block;
                table[(q * block + mid) * n + zero_lin] = c64(1.0, 0.0);
            }
            if degree == 2 {
                // also pin ω(q; 0, y) = 1
                for q in 0..n {
                    for y in 0..n {
                        table[(q * n + zero_lin) * n + y] = c64(1.0, 0.0);
                    }
                }
            }
        }
        let grid = grid.clone();
        PhaseCochain::from_fn(degree, move |q, args| {
            let mut lin = lookup_index(&grid, q);
            for arg in args {
                lin = lin * grid.len() + lookup_index(&grid, arg);
            }
            table[lin]
        })
    }

    /// Random smooth cochain built from a trigonometric phase, usable
    /// on any backend (no table, no reduction). Degree ≥ 1 cochains
    /// evaluate to 1 when the last group argument vanishes.
    pub fn random_smooth(dimension: usize, degree: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let terms: Vec<(f64, Vec<f64>, Vec<Vec<f64>>, f64)> = (0..3)
            .map(|_| {
                let amp = rng.gen_range(0.2..1.0);
                let bq: Vec<f64> = (0..dimension).map(|_| rng.gen_range(-1.0..1.0)).collect();
                let bx: Vec<Vec<f64>> = (0..degree)
                    .map(|_| (0..dimension).map(|_| rng.gen_range(-1.0..1.0)).collect())
                    .collect();
                let off = rng.gen_range(0.0..std::f64::consts::TAU);
                (amp, bq, bx, off)
            })
            .collect();
        let phase = move |q: &[f64], args: &[Vec<f64>]| -> f64 {
            terms
                .iter()
                .map(|(amp, bq, bx, off)| {
                    let mut arg = *off;
                    arg += bq.iter().zip(q).map(|(b, v)| b * v).sum::<f64>();
                    for (bi, xi) in bx.iter().zip(args) {
                        arg += bi.iter().zip(xi).map(|(b, v)| b * v).sum::<f64>();
                    }
                    amp * arg.sin()
                })
                .sum()
        };
        PhaseCochain::from_fn(degree, move |q, args| {
            let mut phi = phase(q, args);
            if degree >= 1 {
                let mut zeroed = args.to_vec();
                zeroed[degree - 1] = vec![0.0; zeroed[degree - 1].len()];
                phi -= phase(q, &zeroed);
            }
            C64::cis(phi)
        })
    }
}

fn lookup_index(grid: &BoxGrid, point: &[f64]) -> usize {
    let idx: Vec<i64> = point.iter().map(|&v| v.round() as i64).collect();
    grid.linear_index(&grid.reduced(&idx))
}

fn vec_add(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(&x, &y)| x + y).collect()
}

/// Coboundary map `δⁿ`, raising the degree by one.
pub fn coboundary(rho: &PhaseCochain) -> PhaseCochain {
    let n = rho.degree();
    let rho = rho.clone();
    PhaseCochain::from_fn(n + 1, move |q, args| {
        debug_assert_eq!(args.len(), n + 1);
        // θ_{x₁}[ρ(x₂,…,x_{n+1})]
        let shifted_q = vec_add(q, &args[0]);
        let mut value = rho.eval(&shifted_q, &args[1..]);
        // ∏_j ρ(…, x_j + x_{j+1}, …)^{(-1)^j}
        for j in 1..=n {
            let mut merged: Vec<Vec<f64>> = Vec::with_capacity(n);
            merged.extend_from_slice(&args[..j - 1]);
            merged.push(vec_add(&args[j - 1], &args[j]));
            merged.extend_from_slice(&args[j + 1..]);
            let factor = rho.eval(q, &merged);
            value = unit(if j % 2 == 1 { value * factor.conj() } else { value * factor });
        }
        // ρ(x₁,…,x_n)^{(-1)^{n+1}}
        let last = rho.eval(q, &args[..n]);
        unit(if (n + 1) % 2 == 1 { value * last.conj() } else { value * last })
    })
}

/// Where identity checks draw their sample points from.
#[derive(Debug, Clone)]
pub enum SampleDomain {
    /// Uniform indices of an exact-group grid.
    Exact(BoxGrid),
    /// Uniform real coordinates in `[-radius, radius]^d`.
    Real { dimension: usize, radius: f64 },
    /// Uniform integer coordinates in `{-radius, …, radius}^d`.
    Lattice { dimension: usize, radius: i64 },
}

impl SampleDomain {
    pub fn sample(&self, rng: &mut impl Rng) -> Vec<f64> {
        match self {
            SampleDomain::Exact(grid) => grid
                .points_per_axis()
                .iter()
                .map(|&m| rng.gen_range(0..m as i64) as f64)
                .collect(),
            SampleDomain::Real { dimension, radius } => {
                (0..*dimension).map(|_| rng.gen_range(-radius..*radius)).collect()
            }
            SampleDomain::Lattice { dimension, radius } => {
                (0..*dimension).map(|_| rng.gen_range(-radius..=*radius) as f64).collect()
            }
        }
    }
}

/// Outcome of a sampled cocycle check.
#[derive(Debug, Clone)]
pub struct CocycleReport {
    pub max_identity_deviation: f64,
    pub max_normalization_deviation: f64,
    pub samples: usize,
    pub tolerance: f64,
    pub passed: bool,
}

/// Sample the 2-cocycle identity
/// `ω(q; x+y, z) ω(q; x, y) = ω(q+x; y, z) ω(q; x, y+z)`
/// and the normalization `ω(q; x, 0) = ω(q; 0, x) = 1`.
pub fn is_cocycle(
    omega: &PhaseCochain,
    domain: &SampleDomain,
    samples: usize,
    tolerance: f64,
    seed: u64,
) -> CocycleReport {
    assert_eq!(omega.degree(), 2, "cocycle check needs a 2-cochain");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut max_id: f64 = 0.0;
    let mut max_norm: f64 = 0.0;
    for _ in 0..samples {
        let q = domain.sample(&mut rng);
        let x = domain.sample(&mut rng);
        let y = domain.sample(&mut rng);
        let z = domain.sample(&mut rng);
        let lhs = unit(
            omega.eval(&q, &[vec_add(&x, &y), z.clone()]) * omega.eval(&q, &[x.clone(), y.clone()]),
        );
        let rhs = unit(
            omega.eval(&vec_add(&q, &x), &[y.clone(), z.clone()])
                * omega.eval(&q, &[x.clone(), vec_add(&y, &z)]),
        );
        max_id = max_id.max((lhs - rhs).norm());

        let zero = vec![0.0; q.len()];
        let n1 = (omega.eval(&q, &[x.clone(), zero.clone()]) - c64(1.0, 0.0)).norm();
        let n2 = (omega.eval(&q, &[zero, x]) - c64(1.0, 0.0)).norm();
        max_norm = max_norm.max(n1).max(n2);
    }
    CocycleReport {
        max_identity_deviation: max_id,
        max_normalization_deviation: max_norm,
        samples,
        tolerance,
        passed: max_id <= tolerance && max_norm <= tolerance,
    }
}

/// Optional sampled precondition for [`pseudo_trivialize`].
#[derive(Debug, Clone)]
pub struct CocyclePrecheck {
    pub domain: SampleDomain,
    pub samples: usize,
    pub tolerance: f64,
    pub seed: u64,
}

/// Constructive trivialization: for a cocycle `ρⁿ` returns the
/// `(n-1)`-cochain `ρ^{n-1}(q; z₁,…,z_{n-1}) = ρⁿ(0; q, z₁,…,z_{n-1})`
/// with `δ^{n-1}(ρ^{n-1}) = ρⁿ` wherever the cocycle identity holds.
pub fn pseudo_trivialize(
    rho: &PhaseCochain,
    precheck: Option<&CocyclePrecheck>,
) -> Result<PhaseCochain> {
    let n = rho.degree();
    if n == 0 {
        return Err(Error::InvalidParameter(
            "pseudo_trivialize needs degree >= 1".into(),
        ));
    }
    if let Some(cfg) = precheck {
        if n == 2 {
            let report = is_cocycle(rho, &cfg.domain, cfg.samples, cfg.tolerance, cfg.seed);
            if !report.passed {
                return Err(Error::NotACocycle {
                    deviation: report
                        .max_identity_deviation
                        .max(report.max_normalization_deviation),
                    tolerance: cfg.tolerance,
                });
            }
        }
    }
    let rho = rho.clone();
    Ok(PhaseCochain::from_fn(n - 1, move |q, args| {
        let zero = vec![0.0; q.len()];
        let mut lifted: Vec<Vec<f64>> = Vec::with_capacity(args.len() + 1);
        lifted.push(q.to_vec());
        lifted.extend_from_slice(args);
        rho.eval(&zero, &lifted)
    }))
}

/// Gauge change of a 1-cochain: `μ = δ⁰(c) · λ`, which leaves `δ¹`
/// untouched.
pub fn gauge_transform(lambda: &PhaseCochain, c: &PhaseCochain) -> PhaseCochain {
    assert_eq!(lambda.degree(), 1);
    assert_eq!(c.degree(), 0);
    coboundary(c).product(lambda)
}
