//! Independent verification engine: finite-difference Hamiltonian, symmetric
//! tridiagonal eigensolver (Sturm bisection + inverse iteration), Richardson
//! extrapolation with automatic domain growth, Schrödinger residuals, and
//! Simpson quadrature.
//!
//! The main solver discretizes with the 3-point second difference and
//! extrapolates eigenvalues from the h and h/2 grids; the residual checker
//! uses a 4th-order 5-point stencil, so solver and checker disagree in
//! truncation structure and cross-validate each other.

use crate::domain::{GridSpec, SampledFunction};
use crate::error::{Error, Result};
use crate::par;

/// Potentials are clamped to this magnitude when sampled for the solver; any
/// value this large acts as a hard wall for the bound states in scope.
const V_CLAMP: f64 = 1e12;

/// Hard cap on interior matrix size during domain doubling.
const MAX_INTERIOR: usize = 4_000_000;

const MAX_DOUBLINGS: usize = 6;

/// Simpson approximation of ∫ values dx; an even sample count falls back to
/// the trapezoid rule on the last panel.
pub fn quadrature(psi: &SampledFunction) -> f64 {
    let h = psi.grid.spacing();
    let v = &psi.values;
    let n = v.len();
    let simpson_end = if n % 2 == 1 { n } else { n - 1 };
    let mut total = 0.0;
    if simpson_end >= 3 {
        let mut odd = 0.0;
        let mut even = 0.0;
        for (i, &vi) in v.iter().enumerate().take(simpson_end - 1).skip(1) {
            if i % 2 == 1 {
                odd += vi;
            } else {
                even += vi;
            }
        }
        total = h / 3.0 * (v[0] + v[simpson_end - 1] + 4.0 * odd + 2.0 * even);
    }
    if simpson_end < n {
        total += 0.5 * h * (v[n - 2] + v[n - 1]);
    }
    total
}

/// L²-normalized magnitude of the overlap between two samples on one grid.
pub fn overlap(a: &SampledFunction, b: &SampledFunction) -> Result<f64> {
    if a.grid != b.grid {
        return Err(Error::domain("grid", "overlap requires a shared grid".to_string()));
    }
    let prod = |x: &[f64], y: &[f64]| {
        let vals: Vec<f64> = x.iter().zip(y).map(|(p, q)| p * q).collect();
        quadrature(&SampledFunction { grid: a.grid, values: vals })
    };
    let na = prod(&a.values, &a.values);
    let nb = prod(&b.values, &b.values);
    if na <= 0.0 || nb <= 0.0 {
        return Err(Error::Degenerate("overlap of a zero function".to_string()));
    }
    Ok(prod(&a.values, &b.values).abs() / (na * nb).sqrt())
}

/// Rescale to unit L² norm (Simpson), first sample above the 1e−9·max noise
/// floor made positive.
pub(crate) fn normalize_samples(psi: &SampledFunction) -> Result<SampledFunction> {
    let sq: Vec<f64> = psi.values.iter().map(|v| v * v).collect();
    let norm2 = quadrature(&SampledFunction { grid: psi.grid, values: sq });
    if !norm2.is_finite() || norm2 <= 1e-300 {
        return Err(Error::Degenerate(format!("norm² = {norm2} underflows")));
    }
    let scale = 1.0 / norm2.sqrt();
    let floor = 1e-9 * psi.max_abs();
    let sign = psi
        .values
        .iter()
        .find(|v| v.abs() > floor)
        .map_or(1.0, |v| v.signum());
    SampledFunction::new(
        psi.grid,
        psi.values.iter().map(|v| v * scale * sign).collect(),
    )
}

/// Dirichlet finite-difference Hamiltonian −d²/dx² + V on the interior nodes:
/// diag_i = 2/h² + V_{i+1}, offdiag_i = −1/h².
pub fn build_hamiltonian(v: &SampledFunction) -> (Vec<f64>, Vec<f64>) {
    let h = v.grid.spacing();
    let inv_h2 = 1.0 / (h * h);
    let interior = v.grid.count - 2;
    let diag: Vec<f64> = (0..interior).map(|i| 2.0 * inv_h2 + v.values[i + 1]).collect();
    let offdiag = vec![-inv_h2; interior.saturating_sub(1)];
    (diag, offdiag)
}

/// Number of eigenvalues of the symmetric tridiagonal matrix strictly below
/// λ, by counting negative pivots of the LDLᵀ (Sturm) sequence.
pub fn sturm_count(diag: &[f64], offdiag: &[f64], lambda: f64) -> usize {
    let pivot_guard = f64::MIN_POSITIVE / f64::EPSILON;
    let mut count = 0;
    let mut q = 1.0_f64;
    for (i, &d) in diag.iter().enumerate() {
        let e2 = if i > 0 { offdiag[i - 1] * offdiag[i - 1] } else { 0.0 };
        let q_safe = if q.abs() < pivot_guard {
            if q >= 0.0 { pivot_guard } else { -pivot_guard }
        } else {
            q
        };
        q = (d - lambda) - e2 / q_safe;
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

fn gershgorin_bounds(diag: &[f64], offdiag: &[f64]) -> (f64, f64) {
    let n = diag.len();
    let mut lo = f64::MAX;
    let mut hi = f64::MIN;
    for i in 0..n {
        let left = if i > 0 { offdiag[i - 1].abs() } else { 0.0 };
        let right = if i < n - 1 { offdiag[i].abs() } else { 0.0 };
        lo = lo.min(diag[i] - left - right);
        hi = hi.max(diag[i] + left + right);
    }
    (lo - 1.0, hi + 1.0)
}

fn bisect_eigenvalue(diag: &[f64], offdiag: &[f64], index: usize, lo: f64, hi: f64) -> f64 {
    let mut a = lo;
    let mut b = hi;
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        if (b - a) <= 2.0 * f64::EPSILON * mid.abs().max(1.0) {
            break;
        }
        if sturm_count(diag, offdiag, mid) <= index {
            a = mid;
        } else {
            b = mid;
        }
    }
    0.5 * (a + b)
}

/// The k smallest eigenvalues, ascending, by bisection on the Sturm sequence.
pub fn eigen_lowest(diag: &[f64], offdiag: &[f64], k: usize) -> Result<Vec<f64>> {
    let n = diag.len();
    if k == 0 || k > n {
        return Err(Error::domain("k", format!("k = {k} must be in 1..={n}")));
    }
    let (lo, hi) = gershgorin_bounds(diag, offdiag);
    Ok(par::map_collect(k, |j| bisect_eigenvalue(diag, offdiag, j, lo, hi)))
}

/// Always-sequential twin of [`eigen_lowest`], used by the benches.
pub fn eigen_lowest_seq(diag: &[f64], offdiag: &[f64], k: usize) -> Result<Vec<f64>> {
    let n = diag.len();
    if k == 0 || k > n {
        return Err(Error::domain("k", format!("k = {k} must be in 1..={n}")));
    }
    let (lo, hi) = gershgorin_bounds(diag, offdiag);
    Ok(par::map_collect_seq(k, |j| bisect_eigenvalue(diag, offdiag, j, lo, hi)))
}

#[derive(Debug)]
struct ShiftedLu {
    lower: Vec<f64>,  // multipliers
    upper0: Vec<f64>, // diagonal of U
    upper1: Vec<f64>, // first superdiagonal of U
    upper2: Vec<f64>, // second superdiagonal of U (fill-in from pivoting)
    swapped: Vec<bool>,
}

/// LU factorization with partial pivoting of T − σI (T symmetric tridiagonal).
fn factor_shifted(diag: &[f64], offdiag: &[f64], sigma: f64) -> ShiftedLu {
    let n = diag.len();
    let mut a = vec![0.0; n]; // subdiagonal of the working matrix
    let d: Vec<f64> = diag.iter().map(|x| x - sigma).collect();
    let mut c = vec![0.0; n]; // superdiagonal
    for i in 0..n - 1 {
        a[i + 1] = offdiag[i];
        c[i] = offdiag[i];
    }
    let mut lower = vec![0.0; n];
    let mut upper0 = vec![0.0; n];
    let mut upper1 = vec![0.0; n];
    let mut upper2 = vec![0.0; n];
    let mut swapped = vec![false; n];
    let tiny = f64::MIN_POSITIVE / f64::EPSILON;

    // rows carry (diag, super, super2) as elimination proceeds
    let mut row_d = d[0];
    let mut row_c = if n > 1 { c[0] } else { 0.0 };
    let mut row_e = 0.0;
    for i in 0..n {
        if i == n - 1 {
            upper0[i] = if row_d.abs() < tiny { tiny.copysign(row_d) } else { row_d };
            break;
        }
        let below = a[i + 1];
        if below.abs() > row_d.abs() {
            // pivot: swap the current row with row i+1
            swapped[i] = true;
            let next_d = d[i + 1];
            let next_c = if i + 1 < n - 1 { c[i + 1] } else { 0.0 };
            upper0[i] = below;
            upper1[i] = next_d;
            upper2[i] = next_c;
            let m = row_d / below;
            lower[i] = m;
            row_d = row_c - m * next_d;
            row_c = row_e - m * next_c;
            row_e = 0.0;
        } else {
            let pivot = if row_d.abs() < tiny { tiny.copysign(row_d) } else { row_d };
            upper0[i] = pivot;
            upper1[i] = row_c;
            upper2[i] = row_e;
            let m = below / pivot;
            lower[i] = m;
            row_d = d[i + 1] - m * row_c;
            row_c = (if i + 1 < n - 1 { c[i + 1] } else { 0.0 }) - m * row_e;
            row_e = 0.0;
        }
    }
    ShiftedLu { lower, upper0, upper1, upper2, swapped }
}

fn lu_solve(lu: &ShiftedLu, b: &mut [f64]) {
    let n = b.len();
    // forward pass with the recorded row exchanges
    for i in 0..n - 1 {
        if lu.swapped[i] {
            b.swap(i, i + 1);
        }
        b[i + 1] -= lu.lower[i] * b[i];
    }
    // back substitution on the banded U
    for i in (0..n).rev() {
        let mut x = b[i];
        if i + 1 < n {
            x -= lu.upper1[i] * b[i + 1];
        }
        if i + 2 < n {
            x -= lu.upper2[i] * b[i + 2];
        }
        b[i] = x / lu.upper0[i];
    }
}

fn euclid_norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// Eigenvector by inverse iteration at the (already converged) eigenvalue,
/// with Gram-Schmidt against earlier vectors of nearby eigenvalues.
fn inverse_iteration(
    diag: &[f64],
    offdiag: &[f64],
    lambda: f64,
    neighbors: &[(f64, Vec<f64>)],
    scale: f64,
) -> Result<Vec<f64>> {
    let n = diag.len();
    for attempt in 0..4 {
        let sigma = lambda + scale * 1e-14 * (attempt as f64 + 1.0);
        let lu = factor_shifted(diag, offdiag, sigma);
        // deterministic quasi-random start
        let mut v: Vec<f64> = (0..n)
            .map(|i| {
                let t = ((i + 1) as f64 * 12.9898 + (attempt + 1) as f64 * 78.233).sin() * 43758.5453;
                t - t.floor() - 0.5
            })
            .collect();
        let nv = euclid_norm(&v);
        v.iter_mut().for_each(|x| *x /= nv);

        for _ in 0..8 {
            lu_solve(&lu, &mut v);
            // project out neighbors in a near-degenerate cluster
            for (mu, w) in neighbors {
                if (mu - lambda).abs() <= 1e-6 * scale {
                    let dot: f64 = v.iter().zip(w).map(|(x, y)| x * y).sum();
                    v.iter_mut().zip(w).for_each(|(x, y)| *x -= dot * y);
                }
            }
            let growth = euclid_norm(&v);
            if !growth.is_finite() {
                break;
            }
            v.iter_mut().for_each(|x| *x /= growth);
            // converged once the solve amplifies into the null direction
            if growth >= 1.0 / (1e3 * f64::EPSILON * scale.max(1.0)) || growth >= 1e12 {
                break;
            }
        }
        // accept if the residual is at roundoff scale
        let mut res = 0.0_f64;
        for i in 0..n {
            let mut t = (diag[i] - lambda) * v[i];
            if i > 0 {
                t += offdiag[i - 1] * v[i - 1];
            }
            if i + 1 < n {
                t += offdiag[i] * v[i + 1];
            }
            res = res.max(t.abs());
        }
        if res <= 1e-8 * scale {
            // sign convention: first entry above the noise floor positive
            let floor = 1e-9 * v.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
            if let Some(first) = v.iter().find(|x| x.abs() > floor) {
                if *first < 0.0 {
                    v.iter_mut().for_each(|x| *x = -*x);
                }
            }
            return Ok(v);
        }
    }
    Err(Error::Convergence(format!(
        "inverse iteration failed at eigenvalue {lambda}"
    )))
}

/// The k smallest eigenpairs; vectors have unit Euclidean norm.
pub fn eigen_lowest_with_vectors(
    diag: &[f64],
    offdiag: &[f64],
    k: usize,
) -> Result<(Vec<f64>, Vec<Vec<f64>>)> {
    let values = eigen_lowest(diag, offdiag, k)?;
    let scale = diag.iter().fold(0.0_f64, |m, d| m.max(d.abs()))
        + 2.0 * offdiag.iter().fold(0.0_f64, |m, e| m.max(e.abs()));
    let mut vectors: Vec<(f64, Vec<f64>)> = Vec::with_capacity(k);
    for &lambda in &values {
        let v = inverse_iteration(diag, offdiag, lambda, &vectors, scale)?;
        vectors.push((lambda, v));
    }
    Ok((values, vectors.into_iter().map(|(_, v)| v).collect()))
}

/// Relative Schrödinger residual ‖(−D₂ + V − E)ψ‖/‖ψ‖ over the interior
/// nodes, with D₂ the 4th-order 5-point second difference; the two nodes at
/// each boundary are excluded.
pub fn schrodinger_residual(psi: &SampledFunction, v: &SampledFunction, e: f64) -> Result<f64> {
    if psi.grid != v.grid {
        return Err(Error::domain("grid", "psi and V must share a grid".to_string()));
    }
    let n = psi.values.len();
    if n < 7 {
        return Err(Error::domain("grid", "need at least 7 nodes".to_string()));
    }
    let h = psi.grid.spacing();
    let inv = 1.0 / (12.0 * h * h);
    let p = &psi.values;
    let mut res2 = 0.0;
    let mut norm2 = 0.0;
    for i in 2..n - 2 {
        let d2 = (-p[i + 2] + 16.0 * p[i + 1] - 30.0 * p[i] + 16.0 * p[i - 1] - p[i - 2]) * inv;
        let r = -d2 + (v.values[i] - e) * p[i];
        res2 += r * r;
        norm2 += p[i] * p[i];
    }
    if norm2 <= 0.0 {
        return Err(Error::Degenerate("zero wavefunction".to_string()));
    }
    Ok((res2 / norm2).sqrt())
}

/// How the solve domain grows when eigenvalues have not settled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Geometry {
    /// Double the box width about its center (whole-line problems).
    FullLine,
    /// Keep the inner end fixed and grow outward (radial problems; the first
    /// interior node stays at r = h).
    Radial,
}

/// Ordered bound-state energies with discretization metadata.
#[derive(Debug, Clone)]
pub struct SpectralResult {
    /// Richardson-extrapolated eigenvalues, ascending.
    pub energies: Vec<f64>,
    /// Unit-normalized eigenvectors on the final (h/2) grid, if requested.
    pub eigenvectors: Option<Vec<SampledFunction>>,
    /// Base grid spacing of the final solve (the paired solve used h/2).
    pub h: f64,
    pub extrapolated: bool,
    /// Relative 4th-order Schrödinger residuals of the eigenvectors (empty
    /// when vectors were not requested).
    pub residuals: Vec<f64>,
}

fn double_domain(grid: GridSpec, geometry: Geometry) -> Result<GridSpec> {
    let (min, max, count) = (grid.x_min, grid.x_max, grid.count);
    let new_count = 2 * count - 1; // preserves h
    match geometry {
        Geometry::FullLine => {
            let c = 0.5 * (min + max);
            let w = max - min;
            GridSpec::new(c - w, c + w, new_count)
        }
        Geometry::Radial => GridSpec::new(min, max + (max - min), new_count),
    }
}

fn solve_on_grid(
    v: &(impl Fn(f64) -> f64 + Sync),
    grid: GridSpec,
    k: usize,
) -> Result<(Vec<f64>, SampledFunction)> {
    let clamped: Vec<f64> = par::map_collect(grid.count, |i| {
        v(grid.node(i)).min(V_CLAMP).max(-V_CLAMP)
    });
    let samples = SampledFunction::new(grid, clamped)?;
    let (diag, off) = build_hamiltonian(&samples);
    if diag.len() < k {
        return Err(Error::domain(
            "k",
            format!("k = {k} exceeds interior size {}", diag.len()),
        ));
    }
    Ok((eigen_lowest(&diag, &off, k)?, samples))
}

/// Bound-state solve with Richardson extrapolation and automatic domain
/// growth.
///
/// Each pass solves at h and h/2 concurrently and extrapolates
/// E ← (4E_{h/2} − E_h)/3. The domain doubles (per `geometry`) until, between
/// consecutive passes, every extrapolated eigenvalue moves by less than `tol`
/// and the extrapolation correction |E_{h/2} − E_h|/3 is below `tol`; more
/// than six doublings is a convergence failure.
pub fn solve_bound_states(
    v: impl Fn(f64) -> f64 + Sync,
    domain: GridSpec,
    k: usize,
    tol: f64,
    geometry: Geometry,
    compute_vectors: bool,
) -> Result<SpectralResult> {
    if k == 0 {
        return Err(Error::domain("k", "k must be >= 1".to_string()));
    }
    if !(tol > 0.0) {
        return Err(Error::domain("tol", format!("tol = {tol} must be > 0")));
    }

    let mut grid = domain;
    let mut prev: Option<Vec<f64>> = None;
    for _pass in 0..=MAX_DOUBLINGS {
        if grid.count - 2 > MAX_INTERIOR {
            return Err(Error::Convergence(format!(
                "domain growth exceeded the {MAX_INTERIOR}-node budget"
            )));
        }
        let fine = GridSpec::new(grid.x_min, grid.x_max, 2 * grid.count - 1)?;
        let (coarse_res, fine_res) =
            par::join(|| solve_on_grid(&v, grid, k), || solve_on_grid(&v, fine, k));
        let (e_coarse, _) = coarse_res?;
        let (e_fine, fine_samples) = fine_res?;

        let mut energies: Vec<f64> = e_coarse
            .iter()
            .zip(&e_fine)
            .map(|(c, f)| (4.0 * f - c) / 3.0)
            .collect();
        energies.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let correction = e_coarse
            .iter()
            .zip(&e_fine)
            .map(|(c, f)| (f - c).abs() / 3.0)
            .fold(0.0_f64, f64::max);

        let moved = prev.as_ref().map(|p| {
            p.iter()
                .zip(&energies)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0_f64, f64::max)
        });

        if let Some(m) = moved {
            if m < tol && correction < tol {
                let (eigenvectors, residuals) = if compute_vectors {
                    let (diag, off) = build_hamiltonian(&fine_samples);
                    let (_, vecs) = eigen_lowest_with_vectors(&diag, &off, k)?;
                    let mut sampled = Vec::with_capacity(k);
                    let mut residuals = Vec::with_capacity(k);
                    for (j, vec) in vecs.into_iter().enumerate() {
                        let mut full = vec![0.0; fine.count];
                        full[1..fine.count - 1].copy_from_slice(&vec);
                        let sf = normalize_samples(&SampledFunction::new(fine, full)?)?;
                        residuals.push(schrodinger_residual(&sf, &fine_samples, energies[j])?);
                        sampled.push(sf);
                    }
                    (Some(sampled), residuals)
                } else {
                    (None, Vec::new())
                };
                return Ok(SpectralResult {
                    energies,
                    eigenvectors,
                    h: grid.spacing(),
                    extrapolated: true,
                    residuals,
                });
            }
        }
        prev = Some(energies);
        grid = double_domain(grid, geometry)?;
    }
    Err(Error::Convergence(format!(
        "eigenvalues did not settle within {tol} after {MAX_DOUBLINGS} domain doublings"
    )))
}

/// Heuristic x-domain for Morse-type solves: [q − 8, q + 8/(A − ⌈A⌉ + 1)];
/// the doubling loop makes the precise choice noncritical.
pub fn morse_domain_heuristic(a: f64, q: f64, target_h: f64) -> Result<GridSpec> {
    let kappa = a - a.ceil() + 1.0;
    let right = 8.0 / kappa.max(0.05);
    let width = 8.0 + right;
    let count = (width / target_h).ceil() as usize + 1;
    GridSpec::new(q - 8.0, q + right, count.max(3))
}

/// Heuristic r-domain for radial solves: [0, 8·max(1, scale)] with the first
/// interior node at r = h.
pub fn radial_domain_heuristic(scale: f64, target_h: f64) -> Result<GridSpec> {
    let r_max = 8.0 * scale.max(1.0);
    let count = (r_max / target_h).ceil() as usize + 1;
    GridSpec::new(0.0, r_max, count.max(3))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn quadrature_examples() {
        let g = GridSpec::new(0.0, 2.0, 21).unwrap();
        let one = g.sample(|_| 1.0).unwrap();
        assert_eq!(quadrature(&one), 2.0);

        for count in [3usize, 11, 101] {
            let g = GridSpec::new(0.0, 1.0, count).unwrap();
            let sq = g.sample(|x| x * x).unwrap();
            assert_relative_eq!(quadrature(&sq), 1.0 / 3.0, max_relative = 1e-14);
        }

        // composite Simpson error for sin on [0, π] at 100 panels is
        // (π/180)·h⁴ ≈ 1.74e−8
        let g = GridSpec::new(0.0, std::f64::consts::PI, 101).unwrap();
        let s = g.sample(f64::sin).unwrap();
        assert!((quadrature(&s) - 2.0).abs() <= 2e-8);
        let g = GridSpec::new(0.0, std::f64::consts::PI, 201).unwrap();
        let s = g.sample(f64::sin).unwrap();
        assert!((quadrature(&s) - 2.0).abs() <= 1.2e-9);

        // even count: trapezoid fallback on the last panel stays consistent
        let g = GridSpec::new(0.0, 1.0, 100).unwrap();
        let lin = g.sample(|x| x).unwrap();
        assert_relative_eq!(quadrature(&lin), 0.5, max_relative = 1e-13);
    }

    #[test]
    fn hamiltonian_example() {
        let g = GridSpec::new(0.0, 1.0, 5).unwrap();
        let v = g.sample(|_| 0.0).unwrap();
        let (d, e) = build_hamiltonian(&v);
        assert_eq!(d, vec![32.0, 32.0, 32.0]);
        assert_eq!(e, vec![-16.0, -16.0]);
    }

    #[test]
    fn sturm_count_2x2() {
        // [[1, -1], [-1, 3]] → eigenvalues 2 ∓ √2
        let d = [1.0, 3.0];
        let e = [-1.0];
        assert_eq!(sturm_count(&d, &e, 0.0), 0);
        assert_eq!(sturm_count(&d, &e, 1.0), 1);
        assert_eq!(sturm_count(&d, &e, 4.0), 2);
        let evals = eigen_lowest(&d, &e, 2).unwrap();
        assert_relative_eq!(evals[0], 2.0 - 2.0_f64.sqrt(), max_relative = 1e-14);
        assert_relative_eq!(evals[1], 2.0 + 2.0_f64.sqrt(), max_relative = 1e-14);
    }

    #[test]
    fn particle_in_a_box() {
        let g = GridSpec::new(0.0, 1.0, 2001).unwrap();
        let v = g.sample(|_| 0.0).unwrap();
        let (d, e) = build_hamiltonian(&v);
        let evals = eigen_lowest(&d, &e, 1).unwrap();
        let pi2 = std::f64::consts::PI * std::f64::consts::PI;
        assert!((evals[0] - pi2).abs() / pi2 <= 1e-4);
    }

    #[test]
    fn harmonic_oscillator_ground_state() {
        let g = GridSpec::new(-8.0, 8.0, 2001).unwrap();
        let v = g.sample(|x| x * x).unwrap();
        let (d, e) = build_hamiltonian(&v);
        let evals = eigen_lowest(&d, &e, 3).unwrap();
        assert!((evals[0] - 1.0).abs() <= 1e-5);
        assert!((evals[1] - 3.0).abs() <= 1e-4);
        assert!((evals[2] - 5.0).abs() <= 3e-4);
    }

    #[test]
    fn eigenvalue_count_matches_sturm() {
        let g = GridSpec::new(-8.0, 8.0, 501).unwrap();
        let v = g.sample(|x| x * x).unwrap();
        let (d, e) = build_hamiltonian(&v);
        let evals = eigen_lowest(&d, &e, 5).unwrap();
        for (j, &ev) in evals.iter().enumerate() {
            assert!(sturm_count(&d, &e, ev + 1e-7) > j);
            assert!(sturm_count(&d, &e, ev - 1e-7) <= j);
        }
        // ascending
        for w in evals.windows(2) {
            assert!(w[0] < w[1]);
        }
    }

    #[test]
    fn constant_shift_moves_eigenvalues_exactly() {
        let g = GridSpec::new(-6.0, 6.0, 801).unwrap();
        let v0 = g.sample(|x| x * x).unwrap();
        let v1 = g.sample(|x| x * x + 2.5).unwrap();
        let (d0, e0) = build_hamiltonian(&v0);
        let (d1, e1) = build_hamiltonian(&v1);
        let a = eigen_lowest(&d0, &e0, 4).unwrap();
        let b = eigen_lowest(&d1, &e1, 4).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert!((y - x - 2.5).abs() <= 1e-10 * (1.0 + x.abs()));
        }
    }

    #[test]
    fn inverse_iteration_recovers_gaussian() {
        let g = GridSpec::new(-8.0, 8.0, 1201).unwrap();
        let v = g.sample(|x| x * x).unwrap();
        let (d, e) = build_hamiltonian(&v);
        let (evals, vecs) = eigen_lowest_with_vectors(&d, &e, 2).unwrap();
        assert!((evals[0] - 1.0).abs() <= 1e-4);
        // compare against exp(−x²/2) on the interior
        let interior: Vec<f64> = g.nodes().skip(1).take(g.count - 2).collect();
        let exact: Vec<f64> = interior.iter().map(|&x| (-0.5 * x * x).exp()).collect();
        let ne = euclid_norm(&exact);
        let dot: f64 = vecs[0].iter().zip(&exact).map(|(a, b)| a * b).sum();
        assert!(dot.abs() / ne >= 1.0 - 1e-6, "overlap {}", dot.abs() / ne);
        // unit norm and deterministic sign
        assert_relative_eq!(euclid_norm(&vecs[0]), 1.0, max_relative = 1e-12);
        assert!(vecs[0][600] > 0.0);
    }

    #[test]
    fn second_order_convergence_on_ho() {
        let solve = |count: usize| {
            let g = GridSpec::new(-8.0, 8.0, count).unwrap();
            let v = g.sample(|x| x * x).unwrap();
            let (d, e) = build_hamiltonian(&v);
            eigen_lowest(&d, &e, 1).unwrap()[0]
        };
        let e_h = solve(1001);
        let e_h2 = solve(2001);
        let ratio = (e_h - 1.0).abs() / (e_h2 - 1.0).abs();
        assert!(ratio >= 3.8, "convergence ratio {ratio}");
    }

    #[test]
    fn solve_bound_states_ho() {
        // tol bounds the doubling movement and the extrapolation correction
        // (the latter is h-limited, ~1.6e−4 at h = 0.02); the extrapolated
        // energies themselves land within 1e−6 of 2n+1
        let g = GridSpec::new(-6.0, 6.0, 601).unwrap();
        let res = solve_bound_states(|x| x * x, g, 3, 5e-4, Geometry::FullLine, true).unwrap();
        assert!(res.extrapolated);
        for (j, exact) in [1.0, 3.0, 5.0].iter().enumerate() {
            assert!(
                (res.energies[j] - exact).abs() <= 1e-6,
                "E_{j} = {} vs {exact}",
                res.energies[j]
            );
        }
        let vecs = res.eigenvectors.as_ref().unwrap();
        assert_eq!(vecs.len(), 3);
        assert_eq!(res.residuals.len(), 3);
        // FD eigenvectors satisfy the 4th-order checker only to O(h²)
        for r in &res.residuals {
            assert!(*r < 1e-2);
        }
    }

    #[test]
    fn solve_bound_states_radial_plain() {
        // ω = 2, l = 1: exact levels 5, 9, 13
        let g = radial_domain_heuristic((13.0_f64).sqrt() / 2.0, 0.004).unwrap();
        let res = solve_bound_states(
            |r| r * r + 2.0 / (r * r),
            g,
            3,
            5e-4,
            Geometry::Radial,
            false,
        )
        .unwrap();
        for (j, exact) in [5.0, 9.0, 13.0].iter().enumerate() {
            assert!(
                (res.energies[j] - exact).abs() <= 1e-6,
                "E_{j} = {} vs {exact}",
                res.energies[j]
            );
        }
    }

    #[test]
    fn solve_reports_nonconvergence() {
        // linear potential keeps sliding as the box grows on the left
        let g = GridSpec::new(-4.0, 4.0, 201).unwrap();
        let err = solve_bound_states(|x| x, g, 1, 1e-12, Geometry::FullLine, false).unwrap_err();
        assert!(matches!(err, Error::Convergence(_)));
    }

    #[test]
    fn residual_grid_mismatch_and_degenerate() {
        let g = GridSpec::new(0.0, 1.0, 11).unwrap();
        let g2 = GridSpec::new(0.0, 2.0, 11).unwrap();
        let a = g.sample(|x| x).unwrap();
        let b = g2.sample(|x| x).unwrap();
        assert!(schrodinger_residual(&a, &b, 0.0).is_err());
        let z = g.sample(|_| 0.0).unwrap();
        let v = g.sample(|_| 0.0).unwrap();
        assert!(matches!(
            schrodinger_residual(&z, &v, 0.0),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn morse_domain_heuristic_matches_expectations() {
        let g = morse_domain_heuristic(3.5, 0.0, 0.01).unwrap();
        assert_relative_eq!(g.x_min, -8.0);
        assert_relative_eq!(g.x_max, 16.0);
        let g = morse_domain_heuristic(3.0, 0.0, 0.01).unwrap();
        assert_relative_eq!(g.x_max, 8.0);
    }
}
