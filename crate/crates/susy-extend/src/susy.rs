//! Superpotential algebra: the Riccati/linear system behind the extended
//! superpotential W = A·X1 + X2, partner potentials, shape-invariance
//! residuals, and SUSY ladder operators.
//!
//! For Q > 0 the pair (X1, X2) is evaluated through tanh/sech forms centred at
//! the shift q = ln(Q)/2, which stays finite where the raw rational forms in
//! e^{2x} overflow. All derivatives here are analytic, so identity residuals
//! isolate floating-point error; numerical differentiation appears only in the
//! grid ladder operators.

use crate::domain::{ExtensionParams, MorseParams, SampledFunction};
use crate::error::{Error, Result};
use crate::poly::polyval;

/// Parameters of the extended superpotential W(x, A) = A·X1(x) + X2(x).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuperpotentialSpec {
    pub morse: MorseParams,
    pub ext: ExtensionParams,
}

impl SuperpotentialSpec {
    pub fn new(morse: MorseParams, ext: ExtensionParams) -> Self {
        Self { morse, ext }
    }

    /// Scarf II strength B′ = (2P − B) e^{−q} / 2; errors when Q = 0.
    pub fn scarf_strength(&self) -> Result<f64> {
        let q = self.ext.shift()?;
        Ok(0.5 * (2.0 * self.ext.p - self.morse.b) * (-q).exp())
    }
}

fn check_q(q_big: f64) -> Result<()> {
    if q_big < 0.0 {
        return Err(Error::domain("Q", format!("Q = {q_big} must be >= 0")));
    }
    Ok(())
}

/// General Riccati solution X1 = 1 − 2Q/(e^{2x} + Q); equals tanh(x − q) for
/// Q > 0 and the particular solution 1 for Q = 0.
pub fn x1(x: f64, q_big: f64) -> Result<f64> {
    check_q(q_big)?;
    if q_big == 0.0 {
        return Ok(1.0);
    }
    Ok((x - 0.5 * q_big.ln()).tanh())
}

/// dX1/dx: sech²(x − q) for Q > 0, zero for Q = 0.
pub fn x1_prime(x: f64, q_big: f64) -> Result<f64> {
    check_q(q_big)?;
    if q_big == 0.0 {
        return Ok(0.0);
    }
    let sech = 1.0 / (x - 0.5 * q_big.ln()).cosh();
    Ok(sech * sech)
}

/// Linear-equation solution X2 = (2P − B) e^{x}/(e^{2x} + Q), evaluated as
/// (2P − B) e^{−q} sech(x − q) / 2 for Q > 0.
pub fn x2(x: f64, b: f64, p: f64, q_big: f64) -> Result<f64> {
    check_q(q_big)?;
    let c = 2.0 * p - b;
    if q_big == 0.0 {
        return Ok(c * (-x).exp());
    }
    let q = 0.5 * q_big.ln();
    Ok(0.5 * c * (-q).exp() / (x - q).cosh())
}

/// dX2/dx.
pub fn x2_prime(x: f64, b: f64, p: f64, q_big: f64) -> Result<f64> {
    check_q(q_big)?;
    let c = 2.0 * p - b;
    if q_big == 0.0 {
        return Ok(-c * (-x).exp());
    }
    let q = 0.5 * q_big.ln();
    let z = x - q;
    Ok(-0.5 * c * (-q).exp() * z.tanh() / z.cosh())
}

/// Plain Morse superpotential W0 = A − B e^{−x}.
pub fn w0(x: f64, morse: &MorseParams) -> f64 {
    morse.a - morse.b * (-x).exp()
}

/// Extension φ = (2P e^{x} − 2AQ + BQ e^{−x})/(e^{2x} + Q), evaluated in
/// u = e^{−x} as (2Pu − 2AQu² + BQu³)/(1 + Qu²); vanishes for P = Q = 0 and
/// reduces to 2P e^{−x} for Q = 0.
pub fn phi(x: f64, spec: &SuperpotentialSpec) -> f64 {
    let (a, b) = (spec.morse.a, spec.morse.b);
    let (p, q_big) = (spec.ext.p, spec.ext.q_big);
    let u = (-x).exp();
    (2.0 * p * u - 2.0 * a * q_big * u * u + b * q_big * u * u * u) / (1.0 + q_big * u * u)
}

/// Extended superpotential W(x, A) = A·X1(x) + X2(x) = W0(x) + φ(x).
pub fn superpotential(x: f64, spec: &SuperpotentialSpec) -> f64 {
    superpotential_at(x, spec.morse.a, spec)
}

/// dW/dx from the analytic X1′, X2′.
pub fn superpotential_prime(x: f64, spec: &SuperpotentialSpec) -> f64 {
    superpotential_prime_at(x, spec.morse.a, spec)
}

/// W(x, a) with the depth parameter replaced (same B, P, Q).
pub fn superpotential_at(x: f64, a: f64, spec: &SuperpotentialSpec) -> f64 {
    let q_big = spec.ext.q_big;
    a * x1(x, q_big).expect("Q >= 0 by construction")
        + x2(x, spec.morse.b, spec.ext.p, q_big).expect("Q >= 0 by construction")
}

/// dW/dx at depth parameter a.
pub fn superpotential_prime_at(x: f64, a: f64, spec: &SuperpotentialSpec) -> f64 {
    let q_big = spec.ext.q_big;
    a * x1_prime(x, q_big).expect("Q >= 0 by construction")
        + x2_prime(x, spec.morse.b, spec.ext.p, q_big).expect("Q >= 0 by construction")
}

/// Riccati residual X1′ + X1² − 1 (identically zero; roundoff only).
pub fn riccati_residual(x: f64, q_big: f64) -> Result<f64> {
    let v = x1(x, q_big)?;
    Ok(x1_prime(x, q_big)? + v * v - 1.0)
}

/// Linear-equation residual X2′ + X1·X2 (identically zero; roundoff only).
pub fn linear_residual(x: f64, b: f64, p: f64, q_big: f64) -> Result<f64> {
    Ok(x2_prime(x, b, p, q_big)? + x1(x, q_big)? * x2(x, b, p, q_big)?)
}

/// Shape-invariance residual
/// [W²(x,A) + W′(x,A) − A²] − [W²(x,A−1) − W′(x,A−1) − (A−1)²],
/// with the A−1 superpotential sharing B, P, Q.
pub fn shape_invariance_residual(x: f64, spec: &SuperpotentialSpec) -> f64 {
    let a = spec.morse.a;
    let w_a = superpotential_at(x, a, spec);
    let wp_a = superpotential_prime_at(x, a, spec);
    let w_b = superpotential_at(x, a - 1.0, spec);
    let wp_b = superpotential_prime_at(x, a - 1.0, spec);
    (w_a * w_a + wp_a - a * a) - (w_b * w_b - wp_b - (a - 1.0) * (a - 1.0))
}

/// Which SUSY partner V^{(±)} = W² ∓ W′ + ε to evaluate (ε = −A²).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Plus,
    Minus,
}

/// Partner potential V^{(±)}(x) = W² ∓ W′ − A².
///
/// The plus branch reproduces the extended Morse potential; the minus branch
/// at parameter A equals the plus branch at A−1 (shape invariance).
pub fn partner_potential(x: f64, spec: &SuperpotentialSpec, branch: Branch) -> f64 {
    let a = spec.morse.a;
    let w = superpotential(x, spec);
    let wp = superpotential_prime(x, spec);
    match branch {
        Branch::Plus => w * w - wp - a * a,
        Branch::Minus => w * w + wp - a * a,
    }
}

/// 4th-order first derivative on a uniform grid, one-sided at the boundary.
pub(crate) fn derivative_4th(values: &[f64], h: f64) -> Vec<f64> {
    let n = values.len();
    assert!(n >= 5, "need at least 5 samples for the 4th-order stencil");
    let f = values;
    let mut d = vec![0.0; n];
    d[0] = (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]) / (12.0 * h);
    d[1] = (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]) / (12.0 * h);
    for i in 2..n - 2 {
        d[i] = (-f[i + 2] + 8.0 * f[i + 1] - 8.0 * f[i - 1] + f[i - 2]) / (12.0 * h);
    }
    d[n - 2] =
        (3.0 * f[n - 1] + 10.0 * f[n - 2] - 18.0 * f[n - 3] + 6.0 * f[n - 4] - f[n - 5]) / (12.0 * h);
    d[n - 1] =
        (25.0 * f[n - 1] - 48.0 * f[n - 2] + 36.0 * f[n - 3] - 16.0 * f[n - 4] + 3.0 * f[n - 5])
            / (12.0 * h);
    d
}

fn check_decayed(psi: &SampledFunction) -> Result<()> {
    let max = psi.max_abs();
    let lo = psi.values[0].abs();
    let hi = psi.values[psi.values.len() - 1].abs();
    if lo > 1e-8 * max || hi > 1e-8 * max {
        return Err(Error::Boundary(format!(
            "samples do not decay at the grid ends: |psi| = {lo:.3e}, {hi:.3e} vs max {max:.3e}"
        )));
    }
    Ok(())
}

/// Raising operator A†(a) = −d/dx + W(x, a) applied on the grid.
///
/// Output is unnormalized. The input must have decayed tails
/// (|boundary| < 1e−8·max|psi|), otherwise the one-sided closure contaminates
/// the result.
pub fn ladder_raise(psi: &SampledFunction, a: f64, spec: &SuperpotentialSpec) -> Result<SampledFunction> {
    check_decayed(psi)?;
    let h = psi.grid.spacing();
    let d = derivative_4th(&psi.values, h);
    let values = psi
        .grid
        .nodes()
        .zip(psi.values.iter().zip(d.iter()))
        .map(|(x, (&v, &dv))| -dv + superpotential_at(x, a, spec) * v)
        .collect();
    SampledFunction::new(psi.grid, values)
}

/// Lowering operator A(a) = +d/dx + W(x, a) applied on the grid.
///
/// Annihilates the ground state when a = A.
pub fn ladder_lower(psi: &SampledFunction, a: f64, spec: &SuperpotentialSpec) -> Result<SampledFunction> {
    check_decayed(psi)?;
    let h = psi.grid.spacing();
    let d = derivative_4th(&psi.values, h);
    let values = psi
        .grid
        .nodes()
        .zip(psi.values.iter().zip(d.iter()))
        .map(|(x, (&v, &dv))| dv + superpotential_at(x, a, spec) * v)
        .collect();
    SampledFunction::new(psi.grid, values)
}

/// Polynomial part of the n-fold ladder state, in exact coefficient space.
///
/// Writing states as (cosh z)^{−a} e^{−B′·arctan(sinh z)} p(sinh z), each
/// application of A†(α) maps the polynomial p at depth a to
/// ((a + α)s + 2B′)p − (1 + s²)p′ at depth a + 1. Starting from the ground
/// state of the n-shifted partner (p = 1, depth A − n) this yields, after n
/// raises, the polynomial multiplying the level-n wavefunction of depth A.
pub fn ladder_polynomial_coefficients(n: usize, a: f64, scarf_bp: f64) -> Vec<f64> {
    let mut p = vec![1.0];
    for j in 0..n {
        let depth = a - n as f64 + j as f64; // current depth; raise uses α = depth + 1
        let lin = 2.0 * depth + 1.0; // (depth + α) = 2·depth + 1
        let mut next = vec![0.0; p.len() + 1];
        for (i, &pi) in p.iter().enumerate() {
            next[i + 1] += lin * pi;
            next[i] += 2.0 * scarf_bp * pi;
            if i >= 1 {
                next[i - 1] -= i as f64 * pi;
                next[i + 1] -= i as f64 * pi;
            }
        }
        p = next;
    }
    p
}

/// Evaluate the exact ladder polynomial at s = sinh(x − q).
pub fn ladder_polynomial(n: usize, a: f64, scarf_bp: f64, s: f64) -> f64 {
    polyval(&ladder_polynomial_coefficients(n, a, scarf_bp), s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::{ExtensionParams, MorseParams};
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn spec(a: f64, b: f64, p: f64, q_big: f64) -> SuperpotentialSpec {
        SuperpotentialSpec::new(
            MorseParams::new(a, b).unwrap(),
            ExtensionParams::new(p, q_big).unwrap(),
        )
    }

    #[test]
    fn x1_examples() {
        assert_eq!(x1(3.7, 0.0).unwrap(), 1.0);
        assert_eq!(x1(-120.0, 0.0).unwrap(), 1.0);
        assert_relative_eq!(x1(0.0, 1.0).unwrap(), 0.0, epsilon = 1e-16);
        assert_relative_eq!(x1(0.0, 3.0).unwrap(), -0.5, max_relative = 1e-15);
        assert!(matches!(x1(0.0, -1.0), Err(Error::Domain { field: "Q", .. })));
    }

    #[test]
    fn x1_matches_rational_form() {
        for &q_big in &[0.2f64, 1.0, 5.0] {
            for &x in &[-3.0f64, -0.5, 0.0, 1.0, 4.0] {
                let rational = 1.0 - 2.0 * q_big / ((2.0 * x).exp() + q_big);
                assert_relative_eq!(x1(x, q_big).unwrap(), rational, epsilon = 1e-14);
            }
        }
        // overflow-safe far beyond e^{2x} range
        assert_eq!(x1(400.0, 2.0).unwrap(), 1.0);
        assert_eq!(x1(-400.0, 2.0).unwrap(), -1.0);
    }

    #[test]
    fn x2_examples() {
        assert_eq!(x2(1.3, 1.0, 0.5, 4.0).unwrap(), 0.0);
        assert_relative_eq!(x2(0.0, 1.0, 1.0, 1.0).unwrap(), 0.5, max_relative = 1e-15);
        assert_relative_eq!(x2(0.0, 1.0, 1.0, 0.0).unwrap(), 1.0, max_relative = 1e-15);
        // sech form against the rational form
        for &q_big in &[0.2f64, 1.0, 5.0] {
            for &x in &[-3.0f64, 0.0, 2.5] {
                let rational = -0.6 * x.exp() / ((2.0 * x).exp() + q_big);
                assert_relative_eq!(x2(x, 1.0, 0.2, q_big).unwrap(), rational, epsilon = 1e-14);
            }
        }
    }

    #[test]
    fn superpotential_examples() {
        let s = spec(2.0, 1.0, 0.0, 0.0);
        assert_relative_eq!(superpotential(0.0, &s), 1.0, max_relative = 1e-15);
        let s = spec(1.0, 1.0, 1.0, 1.0);
        assert_relative_eq!(superpotential(0.0, &s), 0.5, max_relative = 1e-15);
        // both corrections vanish as x → +∞
        let s = spec(2.5, 1.3, -0.7, 4.0);
        assert_relative_eq!(superpotential(45.0, &s), 2.5, max_relative = 1e-14);
    }

    #[test]
    fn phi_examples() {
        let s = spec(2.0, 1.0, 0.0, 0.0);
        assert_eq!(phi(0.3, &s), 0.0);
        let s = spec(2.0, 1.0, 0.3, 0.0);
        assert_relative_eq!(phi(0.0, &s), 0.6, max_relative = 1e-15);
        let s = spec(1.0, 1.0, 1.0, 1.0);
        assert_relative_eq!(phi(0.0, &s), 0.5, max_relative = 1e-15);
    }

    #[test]
    fn residual_examples() {
        assert_eq!(riccati_residual(0.0, 0.0).unwrap(), 0.0);
        assert!(riccati_residual(1.0, 2.0).unwrap().abs() <= 1e-12);
        assert!(riccati_residual(-5.0, 0.1).unwrap().abs() <= 1e-12);
        assert_eq!(linear_residual(0.7, 1.0, 0.5, 3.0).unwrap(), 0.0);
        assert!(linear_residual(0.0, 1.0, 1.0, 1.0).unwrap().abs() <= 1e-12);
        assert!(linear_residual(3.0, 2.0, -1.0, 5.0).unwrap().abs() <= 1e-12);
    }

    #[test]
    fn shape_invariance_examples() {
        assert!(shape_invariance_residual(0.4, &spec(2.2, 1.7, 0.0, 0.0)).abs() <= 1e-12);
        assert!(shape_invariance_residual(0.0, &spec(3.5, 1.0, 0.4, 2.0)).abs() <= 1e-10);
        assert!(shape_invariance_residual(5.0, &spec(1.2, 0.7, -0.3, 0.5)).abs() <= 1e-10);
    }

    #[test]
    fn partner_plus_plain_limit() {
        let s = spec(3.5, 1.0, 0.0, 0.0);
        for &x in &[-2.0f64, 0.0, 1.5, 6.0] {
            let u = (-x).exp();
            let morse = u * u - 8.0 * u;
            assert_relative_eq!(
                partner_potential(x, &s, Branch::Plus),
                morse,
                max_relative = 1e-13,
                epsilon = 1e-13
            );
        }
    }

    #[test]
    fn partner_at_scarf_center() {
        // B′ = 0 here, so V⁺(q) = −A(A+1)·sech²(0) = −6
        let s = spec(2.0, 1.0, 0.5, 1.0);
        assert_relative_eq!(partner_potential(0.0, &s, Branch::Plus), -6.0, max_relative = 1e-14);
    }

    #[test]
    fn partner_branch_offset_is_level_spacing() {
        // With the factorization energies added back, the branch difference is
        // the shape-invariance constant g(A−1) − g(A) = 2A − 1.
        let a = 3.1;
        let s_a = spec(a, 1.4, -0.6, 2.3);
        let s_b = spec(a - 1.0, 1.4, -0.6, 2.3);
        for i in 0..10 {
            let x = -4.0 + i as f64;
            let minus = partner_potential(x, &s_a, Branch::Minus) + a * a;
            let plus = partner_potential(x, &s_b, Branch::Plus) + (a - 1.0) * (a - 1.0);
            assert_relative_eq!(minus - plus, 2.0 * a - 1.0, max_relative = 1e-11, epsilon = 1e-11);
            // and the ε-included branches agree exactly
            assert_relative_eq!(
                partner_potential(x, &s_a, Branch::Minus),
                partner_potential(x, &s_b, Branch::Plus),
                max_relative = 1e-11,
                epsilon = 1e-11
            );
        }
    }

    #[test]
    fn ladder_polynomial_matches_first_orders() {
        // one raise: ((2(A−1)+1)s + 2B′)·1 = (2A−1)s + 2B′
        let c = ladder_polynomial_coefficients(1, 3.5, 0.25);
        assert_eq!(c.len(), 2);
        assert_relative_eq!(c[0], 0.5, max_relative = 1e-15);
        assert_relative_eq!(c[1], 6.0, max_relative = 1e-15);
    }

    #[test]
    fn ladder_requires_decayed_tails() {
        let grid = crate::domain::GridSpec::new(-1.0, 1.0, 64).unwrap();
        let psi = grid.sample(|_| 1.0).unwrap();
        let s = spec(2.0, 1.0, 0.0, 0.0);
        assert!(matches!(ladder_raise(&psi, 2.0, &s), Err(Error::Boundary(_))));
    }

    #[test]
    fn derivative_stencil_is_4th_order() {
        let grid = crate::domain::GridSpec::new(-1.0, 1.0, 201).unwrap();
        let h = grid.spacing();
        let f: Vec<f64> = grid.nodes().map(|x: f64| (2.0 * x).sin()).collect();
        let d = derivative_4th(&f, h);
        let err: f64 = grid
            .nodes()
            .zip(d.iter())
            .map(|(x, &dv)| (dv - 2.0 * (2.0 * x).cos()).abs())
            .fold(0.0, f64::max);
        assert!(err < 5e-7, "stencil error {err}");
    }

    proptest! {
        #[test]
        fn riccati_and_linear_vanish(
            x_rel in -20.0..20.0f64,
            b in 0.1..5.0f64,
            p in -3.0..3.0f64,
            q_big in 0.0..10.0f64,
        ) {
            let q = if q_big > 0.0 { 0.5 * q_big.ln() } else { 0.0 };
            let x = q + x_rel;
            prop_assert!(riccati_residual(x, q_big).unwrap().abs() <= 1e-12);
            prop_assert!(linear_residual(x, b, p, q_big).unwrap().abs() <= 1e-12);
        }

        #[test]
        fn shape_invariance_holds(
            x_rel in -15.0..15.0f64,
            a in 0.5..6.0f64,
            b in 0.1..5.0f64,
            p in -3.0..3.0f64,
            q_big in 0.0..10.0f64,
        ) {
            let s = spec(a, b, p, q_big);
            let q = if q_big > 0.0 { 0.5 * q_big.ln() } else { 0.0 };
            prop_assert!(shape_invariance_residual(q + x_rel, &s).abs() <= 1e-10);
        }

        #[test]
        fn superpotential_decompositions_agree(
            x_rel in -15.0..15.0f64,
            a in 0.5..6.0f64,
            b in 0.1..5.0f64,
            p in -3.0..3.0f64,
            q_big in 0.0..10.0f64,
        ) {
            let s = spec(a, b, p, q_big);
            let q = if q_big > 0.0 { 0.5 * q_big.ln() } else { 0.0 };
            let x = q + x_rel;
            let lhs = superpotential(x, &s);
            let w0v = w0(x, &s.morse);
            let phv = phi(x, &s);
            // 4-ulp agreement relative to the magnitudes entering each route
            let scale = 1.0 + w0v.abs() + phv.abs() + lhs.abs();
            prop_assert!(
                (lhs - (w0v + phv)).abs() <= 4.0 * f64::EPSILON * scale,
                "x={x} lhs={lhs} w0+phi={}", w0v + phv
            );
        }
    }
}
