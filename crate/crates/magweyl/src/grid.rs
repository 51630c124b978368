//! Finite computational model of the group `X`, its dual, Haar weights
//! and Fourier transforms.
//!
//! A [`BoxGrid`] is a uniform product grid in one of two modes:
//!
//! * [`GridMode::ExactGroup`] — the grid *is* the finite abelian group
//!   `Z_{M_1} × … × Z_{M_d}` with counting measure; index arithmetic is
//!   modular and every group identity is exact.
//! * [`GridMode::TruncatedBox`] — a sampled box `[-L, L)^d ⊂ ℝ^d` with
//!   step `h = 2L/M`; sums over the grid are Riemann sums with weight
//!   `∏ h_j` and there is no wraparound in position space.
//!
//! The lattice constructor [`BoxGrid::lattice`] is a truncated box with
//! unit step and integer coordinates `{-R, …, R}^d`, used by the `Z²`
//! rotation-algebra example.
//!
//! Dual indices are kept centered, `k ∈ [-M/2, M/2)`, so that smooth
//! symbols sample their numerically relevant momentum support. The
//! Fourier normalization puts weight `∏ h_j` on the forward transform
//! and `∏ 1/(M_j h_j)` on the inverse, which makes the pair exactly
//! unitary on the grid.

use std::sync::Arc;

use crate::{c64, C64, Error, Result};

/// Backend selector for [`BoxGrid`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridMode {
    /// Finite abelian group, modular index arithmetic, unit weights.
    ExactGroup,
    /// Sampled real box, no wraparound, Riemann-sum weights.
    TruncatedBox,
}

/// Transform direction for [`BoxGrid::fourier`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FourierDirection {
    /// Position to dual, kernel `e^{+i p·x}`, weight `∏ h_j`.
    Forward,
    /// Dual to position, kernel `e^{-i p·x}`, weight `∏ 1/(M_j h_j)`.
    Inverse,
}

/// Uniform product grid over `Z_{M_1}×…×Z_{M_d}` or a real box.
#[derive(Debug, Clone)]
pub struct BoxGrid {
    mode: GridMode,
    m: Vec<usize>,
    step: Vec<f64>,
    origin: Vec<f64>,
    half_width: Vec<f64>,
    lattice: bool,
}

impl BoxGrid {
    /// Exact finite abelian group `Z_{M_1}×…×Z_{M_d}`.
    pub fn exact_group(m: &[usize]) -> Result<Self> {
        Self::validate_counts(m)?;
        Ok(BoxGrid {
            mode: GridMode::ExactGroup,
            m: m.to_vec(),
            step: vec![1.0; m.len()],
            origin: vec![0.0; m.len()],
            half_width: m.iter().map(|&mj| mj as f64 / 2.0).collect(),
            lattice: false,
        })
    }

    /// Sampled box `[-L_j, L_j)` with `M_j` points per axis.
    pub fn truncated_box(m: &[usize], half_width: &[f64]) -> Result<Self> {
        Self::validate_counts(m)?;
        if half_width.len() != m.len() {
            return Err(Error::DimensionMismatch {
                context: "truncated_box half widths",
                expected: m.len(),
                got: half_width.len(),
            });
        }
        if half_width.iter().any(|&l| l <= 0.0) {
            return Err(Error::InvalidParameter("half-width must be positive".into()));
        }
        let step: Vec<f64> = m
            .iter()
            .zip(half_width)
            .map(|(&mj, &lj)| 2.0 * lj / mj as f64)
            .collect();
        let origin: Vec<f64> = half_width.iter().map(|&l| -l).collect();
        Ok(BoxGrid {
            mode: GridMode::TruncatedBox,
            m: m.to_vec(),
            step,
            origin,
            half_width: half_width.to_vec(),
            lattice: false,
        })
    }

    /// Integer lattice `{-R, …, R}^d` with unit step (truncated-box
    /// semantics, `L` read as the truncation radius).
    pub fn lattice(dimension: usize, radius: i64) -> Result<Self> {
        if radius < 1 {
            return Err(Error::InvalidParameter("lattice radius must be >= 1".into()));
        }
        let m = vec![2 * radius as usize + 1; dimension];
        Self::validate_counts(&m)?;
        Ok(BoxGrid {
            mode: GridMode::TruncatedBox,
            m,
            step: vec![1.0; dimension],
            origin: vec![-(radius as f64); dimension],
            half_width: vec![radius as f64; dimension],
            lattice: true,
        })
    }

    fn validate_counts(m: &[usize]) -> Result<()> {
        if m.is_empty() {
            return Err(Error::InvalidParameter("grid needs at least one axis".into()));
        }
        if m.iter().any(|&mj| mj < 2) {
            return Err(Error::InvalidParameter("each axis needs M >= 2".into()));
        }
        Ok(())
    }

    pub fn mode(&self) -> GridMode {
        self.mode
    }

    pub fn is_lattice(&self) -> bool {
        self.lattice
    }

    pub fn dimension(&self) -> usize {
        self.m.len()
    }

    pub fn points_per_axis(&self) -> &[usize] {
        &self.m
    }

    pub fn step(&self) -> &[f64] {
        &self.step
    }

    pub fn half_width(&self) -> &[f64] {
        &self.half_width
    }

    /// Total number of grid points `∏ M_j`.
    pub fn len(&self) -> usize {
        self.m.iter().product()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Position measure weight `∏ h_j` carried by grid sums.
    pub fn pos_weight(&self) -> f64 {
        self.step.iter().product()
    }

    /// Dual measure weight `∏ 1/(M_j h_j)` carried by dual sums.
    pub fn dual_weight(&self) -> f64 {
        self.m
            .iter()
            .zip(&self.step)
            .map(|(&mj, &hj)| 1.0 / (mj as f64 * hj))
            .product()
    }

    /// Physical coordinate of an index vector, computed from integers
    /// each time (no accumulation drift).
    pub fn coord(&self, idx: &[i64]) -> Vec<f64> {
        idx.iter()
            .zip(&self.origin)
            .zip(&self.step)
            .map(|((&j, &o), &h)| o + j as f64 * h)
            .collect()
    }

    /// Physical momentum of a centered dual index, `p_j = 2π k_j/(M_j h_j)`.
    pub fn momentum(&self, k: &[i64]) -> Vec<f64> {
        k.iter()
            .zip(&self.m)
            .zip(&self.step)
            .map(|((&kj, &mj), &hj)| 2.0 * std::f64::consts::PI * kj as f64 / (mj as f64 * hj))
            .collect()
    }

    /// Canonical representative `0 <= j < M` (exact-group mode only;
    /// box indices are left untouched).
    pub fn reduce(&self, idx: &mut [i64]) {
        if self.mode == GridMode::ExactGroup {
            for (j, &mj) in idx.iter_mut().zip(&self.m) {
                *j = j.rem_euclid(mj as i64);
            }
        }
    }

    pub fn reduced(&self, idx: &[i64]) -> Vec<i64> {
        let mut out = idx.to_vec();
        self.reduce(&mut out);
        out
    }

    /// Pointwise sum with backend-appropriate reduction.
    pub fn add(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out: Vec<i64> = a.iter().zip(b).map(|(&x, &y)| x + y).collect();
        self.reduce(&mut out);
        out
    }

    pub fn sub(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out: Vec<i64> = a.iter().zip(b).map(|(&x, &y)| x - y).collect();
        self.reduce(&mut out);
        out
    }

    pub fn neg(&self, a: &[i64]) -> Vec<i64> {
        let mut out: Vec<i64> = a.iter().map(|&x| -x).collect();
        self.reduce(&mut out);
        out
    }

    /// Row-major linear index of a canonical index vector.
    pub fn linear_index(&self, idx: &[i64]) -> usize {
        debug_assert_eq!(idx.len(), self.m.len());
        let mut lin = 0usize;
        for (j, &mj) in idx.iter().zip(&self.m) {
            debug_assert!(*j >= 0 && (*j as usize) < mj, "index out of range");
            lin = lin * mj + *j as usize;
        }
        lin
    }

    /// Linear index of an arbitrary index vector after reduction;
    /// `None` when it falls outside a box grid.
    pub fn linear_index_checked(&self, idx: &[i64]) -> Option<usize> {
        let red = self.reduced(idx);
        for (j, &mj) in red.iter().zip(&self.m) {
            if *j < 0 || *j as usize >= mj {
                return None;
            }
        }
        Some(self.linear_index(&red))
    }

    /// Index vector of a row-major linear index.
    pub fn index_of(&self, mut lin: usize) -> Vec<i64> {
        let mut idx = vec![0i64; self.m.len()];
        for a in (0..self.m.len()).rev() {
            idx[a] = (lin % self.m[a]) as i64;
            lin /= self.m[a];
        }
        idx
    }

    /// All index vectors in row-major order.
    pub fn points(&self) -> impl Iterator<Item = Vec<i64>> + '_ {
        (0..self.len()).map(|lin| self.index_of(lin))
    }

    /// Centered dual index of the storage slot `a` on one axis.
    fn centered(&self, axis: usize, a: usize) -> i64 {
        let m = self.m[axis] as i64;
        let a = a as i64;
        if a <= (m - 1) / 2 {
            a
        } else {
            a - m
        }
    }

    /// Centered dual index vector of a dual storage slot.
    pub fn dual_index_of(&self, lin: usize) -> Vec<i64> {
        let idx = self.index_of(lin);
        idx.iter()
            .enumerate()
            .map(|(axis, &a)| self.centered(axis, a as usize))
            .collect()
    }

    /// Storage slot of a centered (or any congruent) dual index vector.
    pub fn dual_linear_index(&self, k: &[i64]) -> usize {
        let mut lin = 0usize;
        for (axis, &kj) in k.iter().enumerate() {
            let mj = self.m[axis] as i64;
            lin = lin * self.m[axis] + kj.rem_euclid(mj) as usize;
        }
        lin
    }

    /// All centered dual index vectors, in storage order.
    pub fn dual_points(&self) -> impl Iterator<Item = Vec<i64>> + '_ {
        (0..self.len()).map(|lin| self.dual_index_of(lin))
    }

    /// Character `χ_k(x) = e^{i p_k · x}` of a dual index at a physical
    /// coordinate. Unit modulus holds exactly by construction.
    pub fn character(&self, k: &[i64], x: &[f64]) -> C64 {
        let p = self.momentum(k);
        let phase: f64 = p.iter().zip(x).map(|(&pj, &xj)| pj * xj).sum();
        C64::cis(phase)
    }

    /// Centered position offsets `{-⌊M/2⌋, …, ⌈M/2⌉-1}` per axis, the
    /// canonical window for second-argument transforms on box grids.
    pub fn offsets(&self) -> Vec<Vec<i64>> {
        let mut out = Vec::with_capacity(self.len());
        for lin in 0..self.len() {
            let idx = self.index_of(lin);
            out.push(
                idx.iter()
                    .enumerate()
                    .map(|(axis, &a)| self.centered(axis, a as usize))
                    .collect(),
            );
        }
        out
    }

    /// Physical coordinate of an offset index (no origin shift).
    pub fn offset_coord(&self, o: &[i64]) -> Vec<f64> {
        o.iter().zip(&self.step).map(|(&j, &h)| j as f64 * h).collect()
    }

    /// Unitary discrete Fourier transform with measure weights.
    ///
    /// `Forward` maps a position-indexed vector to a dual-indexed one
    /// with kernel `e^{+i p·x}`; `Inverse` undoes it exactly. The
    /// weighted `ℓ²` norms are preserved.
    pub fn fourier(&self, u: &[C64], direction: FourierDirection) -> Result<Vec<C64>> {
        if u.len() != self.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                got: u.len(),
            });
        }
        let d = self.dimension();
        let mut data = u.to_vec();
        for axis in 0..d {
            data = self.fourier_axis(&data, axis, direction);
        }
        Ok(data)
    }

    /// One-axis pass of the weighted DFT; O(M²) per line, which is
    /// plenty at the grid sizes the dense calculus supports.
    fn fourier_axis(&self, u: &[C64], axis: usize, direction: FourierDirection) -> Vec<C64> {
        let m = self.m[axis];
        let h = self.step[axis];
        let origin = self.origin[axis];
        let len = self.len();
        let inner: usize = self.m[axis + 1..].iter().product();
        let outer = len / (m * inner);

        // kernel[k][j]: forward e^{+i p_k x_j} h, inverse e^{-i p_k x_j}/(M h)
        let mut kernel = vec![c64(0.0, 0.0); m * m];
        for a in 0..m {
            let k = self.centered(axis, a) as f64;
            let p = 2.0 * std::f64::consts::PI * k / (m as f64 * h);
            for j in 0..m {
                let x = origin + j as f64 * h;
                kernel[a * m + j] = match direction {
                    FourierDirection::Forward => C64::cis(p * x) * h,
                    FourierDirection::Inverse => C64::cis(-p * x) / (m as f64 * h),
                };
            }
        }

        let mut out = vec![c64(0.0, 0.0); len];
        for o in 0..outer {
            for i in 0..inner {
                let base = o * m * inner + i;
                for a in 0..m {
                    let mut acc = c64(0.0, 0.0);
                    for j in 0..m {
                        acc += kernel[a * m + j] * u[base + j * inner];
                    }
                    out[base + a * inner] = acc;
                }
            }
        }
        out
    }

    /// Weighted `ℓ²` norm matching the transform normalization.
    pub fn norm_pos(&self, u: &[C64]) -> f64 {
        (self.pos_weight() * u.iter().map(|z| z.norm_sqr()).sum::<f64>()).sqrt()
    }

    pub fn norm_dual(&self, u: &[C64]) -> f64 {
        (self.dual_weight() * u.iter().map(|z| z.norm_sqr()).sum::<f64>()).sqrt()
    }
}

/// Point of the grid, stored as an index vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridPoint {
    pub idx: Vec<i64>,
}

impl GridPoint {
    pub fn new(idx: Vec<i64>) -> Self {
        GridPoint { idx }
    }

    pub fn zero(dimension: usize) -> Self {
        GridPoint { idx: vec![0; dimension] }
    }

    pub fn coord(&self, grid: &BoxGrid) -> Vec<f64> {
        grid.coord(&self.idx)
    }
}

/// Point of the dual grid, stored as a centered index vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualPoint {
    pub k: Vec<i64>,
}

impl DualPoint {
    pub fn new(k: Vec<i64>) -> Self {
        DualPoint { k }
    }

    pub fn momentum(&self, grid: &BoxGrid) -> Vec<f64> {
        grid.momentum(&self.k)
    }

    /// Character evaluation at a grid point.
    pub fn character(&self, grid: &BoxGrid, x: &GridPoint) -> C64 {
        grid.character(&self.k, &x.coord(grid))
    }
}

type FieldFn = dyn Fn(&[f64]) -> C64 + Send + Sync;

/// Complex function on `ℝ^d` with a declared decay radius beyond which
/// its values are negligible at working tolerance.
#[derive(Clone)]
pub struct ScalarField {
    f: Arc<FieldFn>,
    radius: f64,
}

impl std::fmt::Debug for ScalarField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ScalarField").field("radius", &self.radius).finish()
    }
}

impl ScalarField {
    pub fn new(radius: f64, f: impl Fn(&[f64]) -> C64 + Send + Sync + 'static) -> Self {
        ScalarField { f: Arc::new(f), radius }
    }

    pub fn constant(value: C64) -> Self {
        ScalarField::new(f64::INFINITY, move |_| value)
    }

    /// Centered Gaussian `exp(-|x-c|²/(2 width²))`.
    pub fn gaussian(center: Vec<f64>, width: f64) -> Self {
        ScalarField::new(center.iter().map(|c| c.abs()).fold(0.0, f64::max) + 8.0 * width, move |x| {
            let r2: f64 = x
                .iter()
                .zip(&center)
                .map(|(&xj, &cj)| (xj - cj) * (xj - cj))
                .sum();
            c64((-r2 / (2.0 * width * width)).exp(), 0.0)
        })
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn eval(&self, x: &[f64]) -> C64 {
        (self.f)(x)
    }

    /// Samples on every grid point, row-major.
    pub fn sample_on(&self, grid: &BoxGrid) -> Vec<C64> {
        (0..grid.len())
            .map(|lin| self.eval(&grid.coord(&grid.index_of(lin))))
            .collect()
    }
}

/// Translation action `[θ_x(a)](y) = a(y + x)` on scalar fields.
pub fn translate(a: &ScalarField, grid: &BoxGrid, x: &GridPoint) -> ScalarField {
    translate_by(a, &x.coord(grid))
}

/// Translation by a raw coordinate vector.
pub fn translate_by(a: &ScalarField, shift: &[f64]) -> ScalarField {
    let shift = shift.to_vec();
    let inner = a.clone();
    let extra = shift.iter().map(|s| s.abs()).fold(0.0, f64::max);
    ScalarField::new(a.radius() + extra, move |y| {
        let moved: Vec<f64> = y.iter().zip(&shift).map(|(&yj, &sj)| yj + sj).collect();
        inner.eval(&moved)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn rand_c64(rng: &mut impl Rng) -> C64 {
        c64(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    }

    #[test]
    fn exact_group_laws_exhaustive() {
        // associativity, inversion and idempotent reduction for M <= 8
        for m in 2..=8usize {
            let g = BoxGrid::exact_group(&[m]).unwrap();
            for x in 0..m as i64 {
                for y in 0..m as i64 {
                    for z in 0..m as i64 {
                        let lhs = g.add(&g.add(&[x], &[y]), &[z]);
                        let rhs = g.add(&[x], &g.add(&[y], &[z]));
                        assert_eq!(lhs, rhs);
                    }
                    let double_neg = g.neg(&g.neg(&[x]));
                    assert_eq!(double_neg, g.reduced(&[x]));
                }
            }
        }
        let g = BoxGrid::exact_group(&[5, 3]).unwrap();
        let raw = [12i64, -7];
        let once = g.reduced(&raw);
        let twice = g.reduced(&once);
        assert_eq!(once, twice);
        assert_eq!(once, vec![2, 2]);
    }

    #[test]
    fn duality_pairing_exhaustive_small() {
        for m in 2..=6usize {
            let g = BoxGrid::exact_group(&[m]).unwrap();
            for lin in 0..m {
                let k = g.dual_index_of(lin);
                for j in 0..m as i64 {
                    let chi = g.character(&k, &g.coord(&[j]));
                    let expected =
                        C64::cis(2.0 * std::f64::consts::PI * k[0] as f64 * j as f64 / m as f64);
                    assert!((chi - expected).norm() < 1e-12);
                    assert_abs_diff_eq!(chi.norm(), 1.0, epsilon = 1e-15);
                }
                // χ(0) = 1
                assert!((g.character(&k, &[0.0]) - c64(1.0, 0.0)).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn box_coordinates_from_integers() {
        let g = BoxGrid::truncated_box(&[64], &[8.0]).unwrap();
        assert_abs_diff_eq!(g.step()[0], 0.25, epsilon = 0.0);
        assert_abs_diff_eq!(g.coord(&[0])[0], -8.0, epsilon = 0.0);
        assert_abs_diff_eq!(g.coord(&[32])[0], 0.0, epsilon = 0.0);
        // exactly −L + j·h, recomputed from integers
        for j in 0..64i64 {
            assert_abs_diff_eq!(g.coord(&[j])[0], -8.0 + j as f64 * 0.25, epsilon = 0.0);
        }
    }

    #[test]
    fn lattice_coordinates_are_integers() {
        let g = BoxGrid::lattice(2, 3).unwrap();
        assert_eq!(g.points_per_axis(), &[7, 7]);
        assert_eq!(g.coord(&[0, 6]), vec![-3.0, 3.0]);
        assert!(g.is_lattice());
    }

    #[test]
    fn fourier_rejects_length_mismatch() {
        let g = BoxGrid::exact_group(&[4]).unwrap();
        let u = vec![c64(1.0, 0.0); 3];
        assert!(matches!(
            g.fourier(&u, FourierDirection::Forward),
            Err(Error::LengthMismatch { expected: 4, got: 3 })
        ));
    }

    #[test]
    fn fourier_of_delta_is_constant() {
        let g = BoxGrid::exact_group(&[6]).unwrap();
        let mut u = vec![c64(0.0, 0.0); 6];
        u[0] = c64(1.0, 0.0);
        let hat = g.fourier(&u, FourierDirection::Forward).unwrap();
        for z in &hat {
            assert!((z - c64(1.0, 0.0)).norm() < 1e-14); // ∏h = 1 here
        }

        let gb = BoxGrid::truncated_box(&[8], &[2.0]).unwrap();
        let mut u = vec![c64(0.0, 0.0); 8];
        u[4] = c64(1.0, 0.0); // x = 0 sits at index M/2
        let hat = gb.fourier(&u, FourierDirection::Forward).unwrap();
        for z in &hat {
            assert!((z - c64(gb.pos_weight(), 0.0)).norm() < 1e-14);
        }
    }

    #[test]
    fn fourier_roundtrip_and_unitarity() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for grid in [
            BoxGrid::exact_group(&[9]).unwrap(),
            BoxGrid::exact_group(&[4, 6]).unwrap(),
            BoxGrid::truncated_box(&[16, 8], &[3.0, 2.5]).unwrap(),
        ] {
            let u: Vec<C64> = (0..grid.len()).map(|_| rand_c64(&mut rng)).collect();
            let hat = grid.fourier(&u, FourierDirection::Forward).unwrap();
            let back = grid.fourier(&hat, FourierDirection::Inverse).unwrap();
            let err = u
                .iter()
                .zip(&back)
                .map(|(a, b)| (a - b).norm())
                .fold(0.0, f64::max);
            assert!(err < 1e-12, "roundtrip error {err:e}");
            assert_abs_diff_eq!(grid.norm_pos(&u), grid.norm_dual(&hat), epsilon = 1e-12);
        }
    }

    #[test]
    fn fourier_gaussian_matches_analytic() {
        // e^{-x²/2} → √(2π) e^{-p²/2} with the e^{+ipx} kernel
        let g = BoxGrid::truncated_box(&[64], &[8.0]).unwrap();
        let field = ScalarField::gaussian(vec![0.0], 1.0);
        let u = field.sample_on(&g);
        let hat = g.fourier(&u, FourierDirection::Forward).unwrap();
        let norm = (2.0 * std::f64::consts::PI).sqrt();
        for lin in 0..g.len() {
            let p = g.momentum(&g.dual_index_of(lin))[0];
            let expected = norm * (-p * p / 2.0).exp();
            assert!(
                (hat[lin] - c64(expected, 0.0)).norm() < 1e-8,
                "p={p}: got {}, want {}",
                hat[lin],
                expected
            );
        }
    }

    #[test]
    fn translate_identity_and_group_action() {
        let g = BoxGrid::truncated_box(&[16], &[4.0]).unwrap();
        let a = ScalarField::new(4.0, |x| c64((x[0] * 1.3).sin(), (0.7 * x[0]).cos()));

        let same = translate(&a, &g, &GridPoint::zero(1));
        for j in 0..16i64 {
            let x = g.coord(&[j]);
            assert!((same.eval(&x) - a.eval(&x)).norm() < 1e-15);
        }

        // composition of translations
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let s1 = rng.gen_range(-2.0..2.0);
            let s2 = rng.gen_range(-2.0..2.0);
            let t12 = translate_by(&translate_by(&a, &[s1]), &[s2]);
            let t_sum = translate_by(&a, &[s1 + s2]);
            let y = rng.gen_range(-3.0..3.0);
            assert!((t12.eval(&[y]) - t_sum.eval(&[y])).norm() < 1e-13);
        }
    }

    #[test]
    fn translate_plane_wave_by_pi_flips_sign() {
        let a = ScalarField::new(f64::INFINITY, |x| C64::cis(x[0]));
        let shifted = translate_by(&a, &[std::f64::consts::PI]);
        for y in [-2.0, -0.3, 0.0, 1.1, 2.9] {
            assert!((shifted.eval(&[y]) + a.eval(&[y])).norm() < 1e-14);
        }
    }

    #[test]
    fn cached_samples_match_fresh_evaluations() {
        let g = BoxGrid::truncated_box(&[12, 10], &[2.0, 3.0]).unwrap();
        let a = ScalarField::new(5.0, |x| c64((x[0] + 2.0 * x[1]).cos(), x[0] * 0.1));
        let cached = a.sample_on(&g);
        for lin in (0..g.len()).step_by(7) {
            let fresh = a.eval(&g.coord(&g.index_of(lin)));
            let denom = fresh.norm().max(1e-300);
            assert!((cached[lin] - fresh).norm() / denom < 1e-14);
        }
    }
}
