//! Named verification checks over every closed-form identity, spectrum, QES
//! level, and coordinate-map claim, with machine-readable pass/fail rows.
//!
//! Checks are independent and may run concurrently; rows are ordered by name
//! and every randomized check derives its generator from the caller's seed,
//! so identical invocations produce identical reports.

use crate::domain::{CoulombExtParams, ExtensionParams, GridSpec, MorseParams, RadialExtParams};
use crate::error::Result;
use crate::numerics::{
    self, build_hamiltonian, eigen_lowest, morse_domain_heuristic, overlap,
    radial_domain_heuristic, schrodinger_residual, solve_bound_states, Geometry,
};
use crate::par;
use crate::pct::{self, PctTarget};
use crate::poly::{polyval, romanovski_coefficients};
use crate::potentials;
use crate::states::{self, variants};
use crate::susy::{self, Branch, SuperpotentialSpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// One verification row.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub max_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub params: String,
}

impl CheckResult {
    fn from_residual(name: &'static str, residual: f64, tol: f64, params: String) -> Self {
        Self {
            name,
            max_residual: residual,
            tolerance: tol,
            pass: residual.is_finite() && residual <= tol,
            params,
        }
    }
}

/// Collected rows; `pass` holds exactly when every row passes.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub seed: u64,
    pub pass: bool,
    pub checks: Vec<CheckResult>,
}

impl std::fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "{:<34} {:>13} {:>10} {:>6}  parameters",
            "check", "max residual", "tolerance", "pass"
        )?;
        for c in &self.checks {
            writeln!(
                f,
                "{:<34} {:>13.3e} {:>10.1e} {:>6}  {}",
                c.name,
                c.max_residual,
                c.tolerance,
                if c.pass { "ok" } else { "FAIL" },
                c.params
            )?;
        }
        writeln!(
            f,
            "overall: {} ({} checks, seed {})",
            if self.pass { "PASS" } else { "FAIL" },
            self.checks.len(),
            self.seed
        )
    }
}

/// Check groups selectable from the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Identities,
    Spectra,
    Qes,
    Pct,
    All,
}

impl Suite {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "identities" => Some(Suite::Identities),
            "spectra" => Some(Suite::Spectra),
            "qes" => Some(Suite::Qes),
            "pct" => Some(Suite::Pct),
            "all" => Some(Suite::All),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Spectra => "spectra",
            Suite::Qes => "qes",
            Suite::Pct => "pct",
            Suite::All => "all",
        }
    }
}

const IDENTITY_SAMPLES: usize = 10_000;

fn rng_for(seed: u64, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn default_morse_ext() -> SuperpotentialSpec {
    SuperpotentialSpec::new(
        MorseParams::new(3.5, 1.0).unwrap(),
        ExtensionParams::new(0.4, 2.0).unwrap(),
    )
}

fn default_radial() -> RadialExtParams {
    RadialExtParams::new(2.0, 1.0, 2, 0.3, 1.5).unwrap()
}

fn default_coulomb() -> CoulombExtParams {
    CoulombExtParams::new(4.0, 2.0, 1, 0.3, 1.5).unwrap()
}

fn random_spec(rng: &mut ChaCha8Rng, q_min: f64) -> (SuperpotentialSpec, f64) {
    let a = rng.gen_range(0.5..6.0);
    let b = rng.gen_range(0.1..5.0);
    let p = rng.gen_range(-3.0..3.0);
    let q_big = rng.gen_range(q_min..10.0);
    let q = if q_big > 0.0 { 0.5 * q_big.ln() } else { 0.0 };
    (
        SuperpotentialSpec::new(
            MorseParams::new(a, b).unwrap(),
            ExtensionParams::new(p, q_big).unwrap(),
        ),
        q,
    )
}

// ---------------------------------------------------------------------------
// identities
// ---------------------------------------------------------------------------

fn check_riccati(seed: u64) -> Result<CheckResult> {
    let mut rng = rng_for(seed, 1);
    let samples: Vec<(f64, f64)> = (0..IDENTITY_SAMPLES)
        .map(|_| {
            let q_big: f64 = rng.gen_range(0.0..10.0);
            let q = if q_big > 0.0 { 0.5 * q_big.ln() } else { 0.0 };
            (q + rng.gen_range(-20.0..20.0), q_big)
        })
        .collect();
    let max = par::max_of(samples.len(), |i| {
        let (x, q_big) = samples[i];
        susy::riccati_residual(x, q_big).unwrap().abs()
    });
    Ok(CheckResult::from_residual(
        "identity-riccati",
        max,
        1e-9,
        format!("{IDENTITY_SAMPLES} samples, Q in [0,10], |x-q| <= 20"),
    ))
}

fn check_linear(seed: u64) -> Result<CheckResult> {
    let mut rng = rng_for(seed, 2);
    let samples: Vec<(f64, f64, f64, f64)> = (0..IDENTITY_SAMPLES)
        .map(|_| {
            let q_big: f64 = rng.gen_range(0.0..10.0);
            let q = if q_big > 0.0 { 0.5 * q_big.ln() } else { 0.0 };
            (
                q + rng.gen_range(-20.0..20.0),
                rng.gen_range(0.1..5.0),
                rng.gen_range(-3.0..3.0),
                q_big,
            )
        })
        .collect();
    let max = par::max_of(samples.len(), |i| {
        let (x, b, p, q_big) = samples[i];
        susy::linear_residual(x, b, p, q_big).unwrap().abs()
    });
    Ok(CheckResult::from_residual(
        "identity-linear",
        max,
        1e-9,
        format!("{IDENTITY_SAMPLES} samples, B in [0.1,5], P in [-3,3]"),
    ))
}

fn check_shape_invariance(seed: u64) -> Result<CheckResult> {
    let mut rng = rng_for(seed, 3);
    let samples: Vec<(SuperpotentialSpec, f64)> = (0..IDENTITY_SAMPLES)
        .map(|_| {
            let (spec, q) = random_spec(&mut rng, 0.0);
            (spec, q + rng.gen_range(-15.0..15.0))
        })
        .collect();
    let max = par::max_of(samples.len(), |i| {
        let (spec, x) = &samples[i];
        susy::shape_invariance_residual(*x, spec).abs()
    });
    Ok(CheckResult::from_residual(
        "identity-shape-invariance",
        max,
        1e-9,
        format!("{IDENTITY_SAMPLES} samples, A in [0.5,6], |x-q| <= 15"),
    ))
}

fn check_scarf_equivalence(seed: u64) -> Result<CheckResult> {
    let mut rng = rng_for(seed, 4);
    let samples: Vec<(SuperpotentialSpec, f64)> = (0..IDENTITY_SAMPLES)
        .map(|_| {
            let (spec, q) = random_spec(&mut rng, 0.01);
            (spec, q + rng.gen_range(-15.0..15.0))
        })
        .collect();
    let max = par::max_of(samples.len(), |i| {
        let (spec, x) = &samples[i];
        let res = potentials::scarf_equivalence_residual(*x, spec).unwrap().abs();
        res / potentials::scarf_equivalence_scale(*x, spec).unwrap()
    });
    Ok(CheckResult::from_residual(
        "identity-scarf-equivalence",
        max,
        1e-9,
        format!("{IDENTITY_SAMPLES} samples, residual scaled by canceling magnitudes"),
    ))
}

fn check_superpotential_decomposition(seed: u64) -> Result<CheckResult> {
    let mut rng = rng_for(seed, 5);
    let samples: Vec<(SuperpotentialSpec, f64)> = (0..IDENTITY_SAMPLES)
        .map(|_| {
            let (spec, q) = random_spec(&mut rng, 0.0);
            (spec, q + rng.gen_range(-15.0..15.0))
        })
        .collect();
    let max = par::max_of(samples.len(), |i| {
        let (spec, x) = &samples[i];
        let lhs = susy::superpotential(*x, spec);
        let w0 = susy::w0(*x, &spec.morse);
        let ph = susy::phi(*x, spec);
        let scale = 1.0 + w0.abs() + ph.abs() + lhs.abs();
        (lhs - (w0 + ph)).abs() / scale
    });
    // 4 ulp relative to each route's intermediates
    Ok(CheckResult::from_residual(
        "identity-superpotential-split",
        max,
        4.0 * f64::EPSILON,
        format!("{IDENTITY_SAMPLES} samples, A*X1+X2 vs W0+phi"),
    ))
}

fn check_partner_plus(seed: u64) -> Result<CheckResult> {
    let mut rng = rng_for(seed, 6);
    let samples: Vec<(SuperpotentialSpec, f64)> = (0..IDENTITY_SAMPLES)
        .map(|_| {
            let (spec, q) = random_spec(&mut rng, 0.0);
            (spec, q + rng.gen_range(-15.0..15.0))
        })
        .collect();
    let max = par::max_of(samples.len(), |i| {
        let (spec, x) = &samples[i];
        let lhs = potentials::v_morse_ext(*x, spec);
        let rhs = susy::partner_potential(*x, spec, Branch::Plus);
        let scale = 1.0 + potentials::v_morse(*x, &spec.morse).abs() + rhs.abs();
        (lhs - rhs).abs() / scale
    });
    Ok(CheckResult::from_residual(
        "identity-partner-plus",
        max,
        1e-10,
        format!("{IDENTITY_SAMPLES} samples, rational form vs W^2 - W' - A^2"),
    ))
}

fn check_extension_limit(_seed: u64) -> Result<CheckResult> {
    let morse = MorseParams::new(3.5, 1.0)?;
    let diff = |eps: f64| {
        let spec = SuperpotentialSpec::new(morse, ExtensionParams::new(eps, eps).unwrap());
        let mut max = 0.0_f64;
        let mut x = -5.0;
        while x <= 10.0 {
            max = max.max(
                (susy::partner_potential(x, &spec, Branch::Plus)
                    - potentials::v_morse(x, &morse))
                .abs(),
            );
            x += 0.01;
        }
        max
    };
    let d3 = diff(1e-3);
    let d6 = diff(1e-6);
    let pass = d6 < d3;
    Ok(CheckResult {
        name: "identity-extension-limit",
        max_residual: d6,
        tolerance: d3,
        pass,
        params: format!("max|V_ext - V_morse| on [-5,10]: {d3:.3e} (eps=1e-3) -> {d6:.3e} (eps=1e-6)"),
    })
}

fn check_pct_potential_identity(seed: u64) -> Result<CheckResult> {
    let mut rng = rng_for(seed, 7);
    let mut max = 0.0_f64;
    for _ in 0..200 {
        let a = rng.gen_range(1.6..6.0);
        let b = rng.gen_range(0.1..5.0);
        let p = rng.gen_range(-3.0..3.0);
        let q_big = rng.gen_range(0.0..10.0);
        let spec = SuperpotentialSpec::new(
            MorseParams::new(a, b)?,
            ExtensionParams::new(p, q_big)?,
        );
        // A > 1.6 keeps n = 1 valid for both maps (A − n > 1/2)
        let n = rng.gen_range(0..2usize);
        for target in [PctTarget::RadialOscillator, PctTarget::Coulomb] {
            for &r in &[0.5, 1.0, 2.0] {
                let res = pct::pct_potential_residual(&spec, n, target, r)?.abs();
                let x = target.x_of_r(r);
                let scale = 1.0
                    + potentials::v_morse_ext(x, &spec).abs() * target.equation_multiplier()
                        / (r * r);
                max = max.max(res / scale);
            }
        }
    }
    Ok(CheckResult::from_residual(
        "identity-pct-potential",
        max,
        1e-10,
        "200 random specs, both targets, r in {0.5,1,2}".to_string(),
    ))
}

fn check_printed_potentials(seed: u64) -> Result<CheckResult> {
    let mut rng = rng_for(seed, 8);
    let mut max = 0.0_f64;
    for _ in 0..400 {
        let r = rng.gen_range(0.1..10.0);
        let omega = rng.gen_range(0.5..4.0);
        let l = rng.gen_range(0.0..3.0);
        let n = rng.gen_range(0..3usize);
        let p = rng.gen_range(-2.0..2.0);
        let q_big = rng.gen_range(0.0..6.0);
        let rp = RadialExtParams::new(omega, l, n, p, q_big)?;
        let v1 = potentials::v_radial_ext(r, &rp)?;
        let v2 = potentials::v_radial_ext_printed(r, &rp)?;
        max = max.max((v1 - v2).abs() / (1.0 + v1.abs()));
        let cp = CoulombExtParams::new(1.0 + omega, l, n, p, q_big)?;
        let v1 = potentials::v_coulomb_ext(r, &cp)?;
        let v2 = potentials::v_coulomb_ext_printed(r, &cp)?;
        max = max.max((v1 - v2).abs() / (1.0 + v1.abs()));
    }
    Ok(CheckResult::from_residual(
        "identity-printed-potentials",
        max,
        1e-9,
        "400 random (r, params): bracketed forms vs coordinate-map forms".to_string(),
    ))
}

// ---------------------------------------------------------------------------
// spectra
// ---------------------------------------------------------------------------

/// Stable sampler of the extended Morse potential for the eigensolver (the
/// rational form cancels catastrophically far left of the well).
fn morse_ext_sampler(spec: SuperpotentialSpec) -> impl Fn(f64) -> f64 + Sync {
    move |x| susy::partner_potential(x, &spec, Branch::Plus)
}

fn morse_ext_spectrum(spec: &SuperpotentialSpec, levels: usize, h: f64, tol: f64) -> Result<Vec<f64>> {
    let q = spec.ext.shift().unwrap_or(0.0);
    let domain = morse_domain_heuristic(spec.morse.a, q, h)?;
    let res = solve_bound_states(
        morse_ext_sampler(*spec),
        domain,
        levels,
        tol,
        Geometry::FullLine,
        false,
    )?;
    Ok(res.energies)
}

fn check_morse_ext_spectrum(_seed: u64) -> Result<CheckResult> {
    let spec = default_morse_ext();
    let energies = morse_ext_spectrum(&spec, 4, 0.02, 5e-4)?;
    let max = energies
        .iter()
        .zip([-12.25, -6.25, -2.25, -0.25])
        .map(|(e, exact)| (e - exact).abs())
        .fold(0.0_f64, f64::max);
    Ok(CheckResult::from_residual(
        "spectrum-morse-ext",
        max,
        1e-6,
        "A=3.5 B=1 P=0.4 Q=2, 4 levels vs -(A-n)^2".to_string(),
    ))
}

fn check_isospectrality(_seed: u64) -> Result<CheckResult> {
    let morse = MorseParams::new(3.5, 1.0)?;
    let spec_a = SuperpotentialSpec::new(morse, ExtensionParams::new(0.4, 2.0)?);
    let spec_b = SuperpotentialSpec::new(morse, ExtensionParams::new(-1.0, 5.0)?);
    let (ea, eb) = par::join(
        || morse_ext_spectrum(&spec_a, 4, 0.02, 5e-4),
        || morse_ext_spectrum(&spec_b, 4, 0.02, 5e-4),
    );
    let (ea, eb) = (ea?, eb?);
    let max = ea
        .iter()
        .zip(&eb)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0_f64, f64::max);
    Ok(CheckResult::from_residual(
        "spectrum-isospectrality",
        max,
        2e-6,
        "(P,Q)=(0.4,2) vs (-1,5) at A=3.5 B=1, pairwise".to_string(),
    ))
}

fn check_ext_eigenfunctions(_seed: u64) -> Result<CheckResult> {
    let spec = default_morse_ext();
    let q = spec.ext.shift()?;
    let grid = GridSpec::new(q - 14.0, q + 22.0, 7201)?;
    let v = grid.sample(|x| potentials::v_morse_ext(x, &spec))?;
    let mut worst = 0.0_f64;
    for n in 0..4 {
        let psi = grid.sample(|x| states::morse_ext_wavefunction(n, x, &spec).unwrap())?;
        let res = schrodinger_residual(&psi, &v, states::morse_energy(n, &spec.morse)?)?;
        worst = worst.max(res);
        if states::count_nodes(&psi) != n {
            return Ok(CheckResult {
                name: "spectrum-ext-eigenfunctions",
                max_residual: f64::INFINITY,
                tolerance: 1e-6,
                pass: false,
                params: format!("node count mismatch at n={n}"),
            });
        }
    }
    Ok(CheckResult::from_residual(
        "spectrum-ext-eigenfunctions",
        worst,
        1e-6,
        "n=0..3 residuals and node counts, h=0.005".to_string(),
    ))
}

fn check_reference_box(_seed: u64) -> Result<CheckResult> {
    let grid = GridSpec::new(0.0, 1.0, 2001)?;
    let v = grid.sample(|_| 0.0)?;
    let (d, e) = build_hamiltonian(&v);
    let e0 = eigen_lowest(&d, &e, 1)?[0];
    let pi2 = std::f64::consts::PI.powi(2);
    Ok(CheckResult::from_residual(
        "reference-box",
        (e0 - pi2).abs() / pi2,
        1e-4,
        "infinite well on [0,1], 2001 nodes, relative error vs pi^2".to_string(),
    ))
}

fn check_reference_harmonic(_seed: u64) -> Result<CheckResult> {
    let grid = GridSpec::new(-8.0, 8.0, 2001)?;
    let v = grid.sample(|x| x * x)?;
    let (d, e) = build_hamiltonian(&v);
    let e0 = eigen_lowest(&d, &e, 1)?[0];
    Ok(CheckResult::from_residual(
        "reference-harmonic",
        (e0 - 1.0).abs(),
        1e-5,
        "V = x^2 on [-8,8], 2001 nodes".to_string(),
    ))
}

fn check_reference_radial(_seed: u64) -> Result<CheckResult> {
    let domain = radial_domain_heuristic((13.0_f64).sqrt() / 2.0, 0.004)?;
    let res = solve_bound_states(
        |r| r * r + 2.0 / (r * r),
        domain,
        3,
        1e-6,
        Geometry::Radial,
        false,
    )?;
    let max = res
        .energies
        .iter()
        .zip([5.0, 9.0, 13.0])
        .map(|(e, exact)| (e - exact).abs())
        .fold(0.0_f64, f64::max);
    Ok(CheckResult::from_residual(
        "reference-radial-oscillator",
        max,
        1e-6,
        "omega=2 l=1 plain levels {5,9,13}".to_string(),
    ))
}

// ---------------------------------------------------------------------------
// qes
// ---------------------------------------------------------------------------

fn qes_radial_solve(compute_vectors: bool) -> Result<(numerics::SpectralResult, RadialExtParams)> {
    let p = default_radial();
    let domain = radial_domain_heuristic(
        (states::radial_osc_energy(p.n, p.omega, p.l)).sqrt() / p.omega,
        0.002,
    )?;
    let res = solve_bound_states(
        move |r| potentials::v_radial_ext(r, &p).unwrap_or(f64::MAX),
        domain,
        3,
        1e-5,
        Geometry::Radial,
        compute_vectors,
    )?;
    Ok((res, p))
}

fn check_qes_radial_energy(_seed: u64) -> Result<CheckResult> {
    let (res, p) = qes_radial_solve(false)?;
    let target = states::radial_osc_energy(p.n, p.omega, p.l);
    let de = res
        .energies
        .iter()
        .map(|e| (e - target).abs())
        .fold(f64::MAX, f64::min);
    // analytic eigenfunction residual on its own grid
    let grid = GridSpec::new(0.0, 40.0, 20_001)?;
    let psi = grid.sample(|r| {
        if r <= 0.0 {
            0.0
        } else {
            states::radial_ext_wavefunction(r, &p).unwrap()
        }
    })?;
    let v = grid.sample(|r| {
        if r <= 0.0 {
            0.0
        } else {
            potentials::v_radial_ext(r, &p).unwrap()
        }
    })?;
    let res_psi = schrodinger_residual(&psi, &v, target)?;
    let worst = (de / 1e-5).max(res_psi / 1e-6);
    Ok(CheckResult {
        name: "qes-radial-energy",
        max_residual: de.max(res_psi),
        tolerance: 1e-5,
        pass: de <= 1e-5 && res_psi <= 1e-6 && worst.is_finite(),
        params: format!(
            "omega=2 l=1 n=2 P=0.3 Q=1.5: |E-13|={de:.2e}, analytic residual={res_psi:.2e}"
        ),
    })
}

fn check_qes_radial_overlap(_seed: u64) -> Result<CheckResult> {
    let (res, p) = qes_radial_solve(true)?;
    let target = states::radial_osc_energy(p.n, p.omega, p.l);
    let idx = res
        .energies
        .iter()
        .enumerate()
        .min_by(|a, b| {
            (a.1 - target)
                .abs()
                .partial_cmp(&(b.1 - target).abs())
                .unwrap()
        })
        .map(|(i, _)| i)
        .unwrap();
    let vec = &res.eigenvectors.as_ref().unwrap()[idx];
    let psi = vec.grid.sample(|r| {
        if r <= 0.0 {
            0.0
        } else {
            states::radial_ext_wavefunction(r, &p).unwrap()
        }
    })?;
    let ov = overlap(vec, &states::normalize(&psi)?)?;
    // The carried-over level sits exactly at the continuum threshold of the
    // deformed potential and decays like 1/r; a Dirichlet box needs a radius
    // of order 1e5 (and matching eigenvalue accuracy) before 1 − overlap
    // reaches 1e−5, far beyond the solver's node budget. The stated tolerance
    // is asserted anyway; see README and the qes-coulomb row for the l = 2
    // image, where the r^{−2} tail makes the same check pass.
    Ok(CheckResult::from_residual(
        "qes-radial-overlap",
        1.0 - ov,
        1e-5,
        format!("1-overlap of analytic state vs eigenvector at E={:.8}", res.energies[idx]),
    ))
}

fn check_qes_coulomb(_seed: u64) -> Result<CheckResult> {
    let p = default_coulomb();
    let nu = p.n as f64 + p.l + 1.0;
    let domain = radial_domain_heuristic(nu * nu / p.z, 0.00125)?;
    let res = solve_bound_states(
        move |r| potentials::v_coulomb_ext(r, &p).unwrap_or(f64::MAX),
        domain,
        2,
        1e-5,
        Geometry::Radial,
        true,
    )?;
    let target = states::coulomb_energy(p.n, p.z, p.l);
    let (idx, de) = res
        .energies
        .iter()
        .enumerate()
        .map(|(i, e)| (i, (e - target).abs()))
        .min_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
        .unwrap();
    let vec = &res.eigenvectors.as_ref().unwrap()[idx];
    let psi = vec.grid.sample(|r| {
        if r <= 0.0 {
            0.0
        } else {
            states::coulomb_ext_wavefunction(r, &p).unwrap()
        }
    })?;
    let normalized = states::normalize(&psi)?;
    let ov = overlap(vec, &normalized)?;
    let v = vec.grid.sample(|r| {
        if r <= 0.0 {
            0.0
        } else {
            potentials::v_coulomb_ext(r, &p).unwrap()
        }
    })?;
    let res_psi = schrodinger_residual(&normalized, &v, target)?;
    let pass = de <= 1e-5 && res_psi <= 1e-6 && (1.0 - ov) <= 1e-5;
    Ok(CheckResult {
        name: "qes-coulomb",
        max_residual: de.max(1.0 - ov),
        tolerance: 1e-5,
        pass,
        params: format!(
            "Z=4 l=2 n=1 P=0.3 Q=1.5: |E+1|={de:.2e}, residual={res_psi:.2e}, 1-overlap={:.2e}",
            1.0 - ov
        ),
    })
}

fn check_erratum_prefactor(_seed: u64) -> Result<CheckResult> {
    let spec = default_morse_ext();
    let q = spec.ext.shift()?;
    let grid = GridSpec::new(q + 0.05, q + 3.0, 2951)?;
    let v = grid.sample(|x| potentials::v_morse_ext(x, &spec))?;
    let e0 = states::morse_energy(0, &spec.morse)?;
    let bad = grid.sample(|x| variants::morse_ext_sinh_prefactor(0, x, &spec).unwrap())?;
    let good = grid.sample(|x| states::morse_ext_wavefunction(0, x, &spec).unwrap())?;
    let res_bad = schrodinger_residual(&bad, &v, e0)?;
    let res_good = schrodinger_residual(&good, &v, e0)?;
    Ok(CheckResult {
        name: "erratum-sinh-prefactor",
        max_residual: res_bad,
        tolerance: 1e-2,
        pass: res_bad > 1e-2 && res_good <= 1e-6,
        params: format!(
            "sinh-power prefactor residual {res_bad:.2e} (must exceed 1e-2); cosh form {res_good:.2e}"
        ),
    })
}

fn check_erratum_pullback(_seed: u64) -> Result<CheckResult> {
    let p = default_coulomb();
    let grid = GridSpec::new(0.2, 6.0, 11_601)?;
    let v = grid.sample(|r| potentials::v_coulomb_ext(r, &p).unwrap())?;
    let target = states::coulomb_energy(p.n, p.z, p.l);
    let bad = grid.sample(|r| variants::coulomb_ext_inverse_sqrt_pullback(r, &p).unwrap())?;
    let good = grid.sample(|r| states::coulomb_ext_wavefunction(r, &p).unwrap())?;
    let res_bad = schrodinger_residual(&bad, &v, target)?;
    let res_good = schrodinger_residual(&good, &v, target)?;
    Ok(CheckResult {
        name: "erratum-pullback-factor",
        max_residual: res_bad,
        tolerance: 1e-2,
        pass: res_bad > 1e-2 && res_good <= 1e-6,
        params: format!(
            "r^(-1/2) pullback residual {res_bad:.2e} (must exceed 1e-2); r^(+1/2) form {res_good:.2e}"
        ),
    })
}

/// Largest relative deviation from proportionality between two sample sets.
fn proportionality_dev(f: &[f64], g: &[f64]) -> f64 {
    let num: f64 = f.iter().zip(g).map(|(a, b)| a * b).sum();
    let den: f64 = g.iter().map(|b| b * b).sum();
    let c = num / den;
    let scale = f.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    f.iter()
        .zip(g)
        .map(|(a, b)| (a - c * b).abs())
        .fold(0.0_f64, f64::max)
        / scale
}

fn check_erratum_radial_b(_seed: u64) -> Result<CheckResult> {
    let p = default_radial();
    let rs: Vec<f64> = (0..=200).map(|i| 0.3 + 2.7 * i as f64 / 200.0).collect();
    let pull: Vec<f64> = rs
        .iter()
        .map(|&r| states::radial_ext_wavefunction(r, &p).unwrap())
        .collect();
    let closed: Vec<f64> = rs
        .iter()
        .map(|&r| states::radial_ext_wavefunction_closed_form(r, &p).unwrap())
        .collect();
    let literal: Vec<f64> = rs
        .iter()
        .map(|&r| variants::radial_ext_literal_b(r, &p).unwrap())
        .collect();
    let dev_good = proportionality_dev(&pull, &closed);
    let dev_bad = proportionality_dev(&pull, &literal);
    Ok(CheckResult {
        name: "erratum-radial-romanovski-b",
        max_residual: dev_good,
        tolerance: 1e-8,
        pass: dev_good <= 1e-8 && dev_bad > 1e-2,
        params: format!(
            "consistent b: dev {dev_good:.2e}; literal 1/4-n-l parameter: dev {dev_bad:.2e}"
        ),
    })
}

fn check_smallr_exponent(_seed: u64) -> Result<CheckResult> {
    let rp = default_radial();
    let cp = default_coulomb();
    let mut worst = 0.0_f64;
    let mut r = 1e-3;
    while r < 8e-3 {
        let f1 = states::radial_ext_wavefunction(r, &rp)?.abs();
        let f2 = states::radial_ext_wavefunction(2.0 * r, &rp)?.abs();
        worst = worst.max(((f2 / f1).ln() / 2.0_f64.ln() - (rp.l + 1.0)).abs());
        let f1 = states::coulomb_ext_wavefunction(r, &cp)?.abs();
        let f2 = states::coulomb_ext_wavefunction(2.0 * r, &cp)?.abs();
        worst = worst.max(((f2 / f1).ln() / 2.0_f64.ln() - (cp.l + 1.0)).abs());
        r *= 2.0;
    }
    Ok(CheckResult::from_residual(
        "qes-small-r-exponent",
        worst,
        1e-3,
        "log-log slope of both QES states near r=0 equals l+1".to_string(),
    ))
}

// ---------------------------------------------------------------------------
// pct
// ---------------------------------------------------------------------------

fn check_pct_round_trips(seed: u64) -> Result<CheckResult> {
    let mut rng = rng_for(seed, 9);
    let mut max = 0.0_f64;
    for _ in 0..100 {
        let omega = rng.gen_range(0.1..8.0);
        let l = rng.gen_range(0.0..6.0);
        let n = rng.gen_range(0..4usize);
        let m = pct::radial_to_morse(omega, l, n);
        let (om2, l2, _) = pct::morse_to_radial(&m, n)?;
        max = max.max((om2 - omega).abs() / (f64::EPSILON * omega));
        max = max.max((l2 - l).abs() / (f64::EPSILON * (1.0 + l)));

        let z = rng.gen_range(0.1..8.0);
        let m = pct::coulomb_to_morse(z, l, n);
        let (z2, l2, _) = pct::morse_to_coulomb(&m, n)?;
        max = max.max((z2 - z).abs() / (f64::EPSILON * z));
        max = max.max((l2 - l).abs() / (f64::EPSILON * (1.0 + l)));
    }
    Ok(CheckResult::from_residual(
        "pct-round-trips",
        max,
        4.0,
        "100 random tuples, error in ulps of the parameter".to_string(),
    ))
}

fn check_pct_fixed_energy(seed: u64) -> Result<CheckResult> {
    let mut rng = rng_for(seed, 10);
    let mut max = 0.0_f64;
    for _ in 0..100 {
        let omega = rng.gen_range(0.1..8.0);
        let l = rng.gen_range(0.0..6.0);
        let n = rng.gen_range(0..4usize);
        let m = pct::radial_to_morse(omega, l, n);
        let (_, _, e_fixed) = pct::morse_to_radial(&m, n)?;
        let direct = omega * (2.0 * n as f64 + l + 1.5);
        max = max.max((direct - e_fixed).abs() / (f64::EPSILON * direct.abs()));

        let z = rng.gen_range(0.1..8.0);
        let m = pct::coulomb_to_morse(z, l, n);
        let (_, _, e_fixed) = pct::morse_to_coulomb(&m, n)?;
        let nu = n as f64 + l + 1.0;
        let direct = -z * z / (nu * nu);
        max = max.max((direct - e_fixed).abs() / (f64::EPSILON * direct.abs()));
    }
    Ok(CheckResult::from_residual(
        "pct-fixed-energy",
        max,
        4.0,
        "100 random tuples, identity error in ulps".to_string(),
    ))
}

fn check_pullback_constancy(_seed: u64) -> Result<CheckResult> {
    let morse = MorseParams::new(3.5, 1.0)?;
    let n = 1usize;
    let rs: Vec<f64> = (0..=200).map(|i| 0.3 + 2.7 * i as f64 / 200.0).collect();

    let (omega, l_rad, _) = pct::morse_to_radial(&morse, n)?;
    let pulled: Vec<f64> = rs
        .iter()
        .map(|&r| {
            pct::pullback_value(
                PctTarget::RadialOscillator,
                |x| states::morse_wavefunction(n, x, &morse).unwrap(),
                r,
            )
            .unwrap()
        })
        .collect();
    let closed: Vec<f64> = rs
        .iter()
        .map(|&r| states::radial_osc_wavefunction(n, r, omega, l_rad).unwrap())
        .collect();
    let dev_rad = proportionality_dev(&pulled, &closed);

    let (z, l_c, _) = pct::morse_to_coulomb(&morse, n)?;
    let pulled: Vec<f64> = rs
        .iter()
        .map(|&r| {
            pct::pullback_value(
                PctTarget::Coulomb,
                |x| states::morse_wavefunction(n, x, &morse).unwrap(),
                r,
            )
            .unwrap()
        })
        .collect();
    let closed: Vec<f64> = rs
        .iter()
        .map(|&r| states::coulomb_wavefunction(n, r, z, l_c).unwrap())
        .collect();
    let dev_c = proportionality_dev(&pulled, &closed);

    Ok(CheckResult::from_residual(
        "pct-pullback-constancy",
        dev_rad.max(dev_c),
        1e-10,
        format!("plain n=1 states on r in [0.3,3]: radial dev {dev_rad:.2e}, coulomb dev {dev_c:.2e}"),
    ))
}

fn check_ladder_romanovski(_seed: u64) -> Result<CheckResult> {
    let morse = MorseParams::new(5.5, 1.0)?;
    let ext = ExtensionParams::new(0.4, 2.0)?;
    let spec = SuperpotentialSpec::new(morse, ext);
    let q = ext.shift()?;
    let bp = spec.scarf_strength()?;
    let grid = GridSpec::new(q - 16.0, q + 16.0, 16_001)?;

    let mut worst_overlap_gap = 0.0_f64;
    let mut worst_ratio = 0.0_f64;
    for n in 0..=4usize {
        // grid ladder from the ground state of the n-shifted depth
        let start_spec = SuperpotentialSpec::new(MorseParams::new(morse.a - n as f64, morse.b)?, ext);
        let mut psi = grid.sample(|x| states::morse_ext_wavefunction(0, x, &start_spec).unwrap())?;
        for j in 0..n {
            let a_step = morse.a - n as f64 + 1.0 + j as f64;
            psi = susy::ladder_raise(&psi, a_step, &spec)?;
        }
        let analytic = grid.sample(|x| states::morse_ext_wavefunction(n, x, &spec).unwrap())?;
        let ov = overlap(&psi, &analytic)?;
        worst_overlap_gap = worst_overlap_gap.max(1.0 - ov);

        // exact coefficient-space ladder vs Rodrigues polynomial
        let lad = susy::ladder_polynomial_coefficients(n, morse.a, bp);
        let rom = romanovski_coefficients(n, -2.0 * bp, 0.5 - morse.a);
        let samples: Vec<f64> = (0..50).map(|i| -3.0 + 6.0 * i as f64 / 49.0).collect();
        let f: Vec<f64> = samples.iter().map(|&s| polyval(&lad, s)).collect();
        let g: Vec<f64> = samples.iter().map(|&s| polyval(&rom, s)).collect();
        worst_ratio = worst_ratio.max(proportionality_dev(&f, &g));
    }
    Ok(CheckResult {
        name: "pct-ladder-romanovski",
        max_residual: worst_overlap_gap.max(worst_ratio),
        tolerance: 1e-6,
        pass: worst_overlap_gap <= 1e-6 && worst_ratio <= 1e-8,
        params: format!(
            "n<=4 at A=5.5: 1-overlap {worst_overlap_gap:.2e} (tol 1e-6), polynomial ratio dev {worst_ratio:.2e} (tol 1e-8)"
        ),
    })
}

// ---------------------------------------------------------------------------

type CheckFn = fn(u64) -> Result<CheckResult>;

const IDENTITY_CHECKS: &[CheckFn] = &[
    check_riccati,
    check_linear,
    check_shape_invariance,
    check_scarf_equivalence,
    check_superpotential_decomposition,
    check_partner_plus,
    check_extension_limit,
    check_pct_potential_identity,
    check_printed_potentials,
];

const SPECTRA_CHECKS: &[CheckFn] = &[
    check_morse_ext_spectrum,
    check_isospectrality,
    check_ext_eigenfunctions,
    check_reference_box,
    check_reference_harmonic,
    check_reference_radial,
];

const QES_CHECKS: &[CheckFn] = &[
    check_qes_radial_energy,
    check_qes_radial_overlap,
    check_qes_coulomb,
    check_erratum_prefactor,
    check_erratum_pullback,
    check_erratum_radial_b,
    check_smallr_exponent,
];

const PCT_CHECKS: &[CheckFn] = &[
    check_pct_round_trips,
    check_pct_fixed_energy,
    check_pullback_constancy,
    check_ladder_romanovski,
];

/// Run one suite (or all of them) with the given seed.
pub fn run_suite(suite: Suite, seed: u64) -> Result<VerificationReport> {
    let mut fns: Vec<CheckFn> = Vec::new();
    if matches!(suite, Suite::Identities | Suite::All) {
        fns.extend_from_slice(IDENTITY_CHECKS);
    }
    if matches!(suite, Suite::Spectra | Suite::All) {
        fns.extend_from_slice(SPECTRA_CHECKS);
    }
    if matches!(suite, Suite::Qes | Suite::All) {
        fns.extend_from_slice(QES_CHECKS);
    }
    if matches!(suite, Suite::Pct | Suite::All) {
        fns.extend_from_slice(PCT_CHECKS);
    }
    let results: Vec<Result<CheckResult>> = par::map_collect(fns.len(), |i| fns[i](seed));
    let mut checks = results.into_iter().collect::<Result<Vec<_>>>()?;
    checks.sort_by(|a, b| a.name.cmp(b.name));
    let pass = checks.iter().all(|c| c.pass);
    Ok(VerificationReport {
        suite: suite.name().to_string(),
        seed,
        pass,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::time::Instant;

    #[test]
    fn identities_pass_and_are_fast() {
        let t0 = Instant::now();
        let report = run_suite(Suite::Identities, 42).unwrap();
        let elapsed = t0.elapsed();
        assert!(report.pass, "failing rows: {report}");
        assert_eq!(report.checks.len(), 9);
        assert!(
            elapsed.as_secs_f64() < 1.0,
            "identities took {elapsed:?}, budget 1 s"
        );
    }

    #[test]
    fn reports_are_deterministic() {
        let a = run_suite(Suite::Identities, 7).unwrap();
        let b = run_suite(Suite::Identities, 7).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }

    #[test]
    fn pct_suite_passes() {
        let report = run_suite(Suite::Pct, 42).unwrap();
        assert!(report.pass, "failing rows: {report}");
        assert_eq!(report.checks.len(), 4);
    }

    #[test]
    fn a_corrupted_tolerance_fails_the_report() {
        let mut report = run_suite(Suite::Identities, 42).unwrap();
        report.checks[0].tolerance = 1e-30;
        report.checks[0].pass = report.checks[0].max_residual <= 1e-30;
        let pass = report.checks.iter().all(|c| c.pass);
        assert!(!pass);
    }
}
