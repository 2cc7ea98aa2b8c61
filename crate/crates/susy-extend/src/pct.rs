//! Point canonical transformations between the Morse line and the two radial
//! half-lines, plus the Scarf II shift.
//!
//! Both coordinate maps (r = e^{−x/2} and r = e^{−x}) are strictly monotone,
//! taking x ∈ (−∞, ∞) onto r ∈ (0, ∞) bijectively. Exactly one level is
//! carried over per (n, parameter) choice: the map fixes the image energy, so
//! the transformed systems are quasi-exactly solvable.

use crate::domain::{MorseParams, ScarfParams};
use crate::error::{Error, Result};
use crate::potentials;
use crate::susy::SuperpotentialSpec;

/// Image of the level-n Morse problem under r = e^{−x/2}:
/// returns (ω, l, Ẽ) with ω = 4B, l + 1/2 = 2(A − n), Ẽ = 4B(2A + 1).
pub fn morse_to_radial(p: &MorseParams, n: usize) -> Result<(f64, f64, f64)> {
    if n as f64 >= p.a {
        return Err(Error::Level { n, a: p.a });
    }
    let omega = 4.0 * p.b;
    let l = 2.0 * (p.a - n as f64) - 0.5;
    let e_fixed = 4.0 * p.b * (2.0 * p.a + 1.0);
    Ok((omega, l, e_fixed))
}

/// Inverse radial map: B = ω/4, A = n + l/2 + 1/4.
///
/// Callers guarantee ω > 0, l ≥ 0.
pub fn radial_to_morse(omega: f64, l: f64, n: usize) -> MorseParams {
    MorseParams {
        a: n as f64 + 0.5 * l + 0.25,
        b: 0.25 * omega,
    }
}

/// Image of the level-n Morse problem under r = e^{−x}:
/// returns (Z, l, Ẽ) with 2Z = B(2A + 1), l + 1/2 = A − n, Ẽ = −B².
pub fn morse_to_coulomb(p: &MorseParams, n: usize) -> Result<(f64, f64, f64)> {
    if n as f64 >= p.a {
        return Err(Error::Level { n, a: p.a });
    }
    if p.a - n as f64 <= 0.5 {
        return Err(Error::domain(
            "l",
            format!("A − n = {} must exceed 1/2 for l >= 0", p.a - n as f64),
        ));
    }
    let z = 0.5 * p.b * (2.0 * p.a + 1.0);
    let l = p.a - n as f64 - 0.5;
    Ok((z, l, -p.b * p.b))
}

/// Inverse Coulomb map: A = n + l + 1/2, B = Z/(n + l + 1).
///
/// Callers guarantee Z > 0, l ≥ 0.
pub fn coulomb_to_morse(z: f64, l: f64, n: usize) -> MorseParams {
    MorseParams {
        a: n as f64 + l + 0.5,
        b: z / (n as f64 + l + 1.0),
    }
}

/// Scarf II image of the extended superpotential: ({A, B′}, q) with
/// B′ = (2P − B) e^{−q}/2 and q = ln(Q)/2. Errors when Q = 0.
pub fn morse_to_scarf(spec: &SuperpotentialSpec) -> Result<(ScarfParams, f64)> {
    let q = spec.ext.shift()?;
    let bp = 0.5 * (2.0 * spec.ext.p - spec.morse.b) * (-q).exp();
    Ok((ScarfParams { a: spec.morse.a, bp }, q))
}

/// Which half-line image a pullback targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PctTarget {
    RadialOscillator,
    Coulomb,
}

impl PctTarget {
    /// x(r) for this map.
    pub fn x_of_r(&self, r: f64) -> f64 {
        match self {
            PctTarget::RadialOscillator => -2.0 * r.ln(),
            PctTarget::Coulomb => -r.ln(),
        }
    }

    /// The multiplier c in Ṽ = c·(V − E)/r² − 1/(4r²) + Ẽ.
    pub fn equation_multiplier(&self) -> f64 {
        match self {
            PctTarget::RadialOscillator => 4.0,
            PctTarget::Coulomb => 1.0,
        }
    }
}

/// Pull an x-space wavefunction back to the half-line:
/// ψ̃(r) = r^{1/2} ψ(x(r)).
pub fn pullback_value(target: PctTarget, psi: impl Fn(f64) -> f64, r: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::domain("r", format!("r = {r} must be > 0")));
    }
    Ok(r.sqrt() * psi(target.x_of_r(r)))
}

/// Closure form of [`pullback_value`] for sampling loops over r > 0.
pub fn pullback_fn(
    target: PctTarget,
    psi: impl Fn(f64) -> f64,
) -> impl Fn(f64) -> Result<f64> {
    move |r| pullback_value(target, &psi, r)
}

/// Consistency residual of the potential images: Ṽ(r) minus the transformed
/// right-hand side c·(V_ext(x(r)) − E_n)/r² − 1/(4r²) + Ẽ_n. Zero up to
/// roundoff by construction; guards the wiring between the modules.
pub fn pct_potential_residual(
    spec: &SuperpotentialSpec,
    n: usize,
    target: PctTarget,
    r: f64,
) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::domain("r", format!("r = {r} must be > 0")));
    }
    let a = spec.morse.a;
    let e_n = -(a - n as f64) * (a - n as f64);
    let c = target.equation_multiplier();
    let x = target.x_of_r(r);
    let rhs = c * (potentials::v_morse_ext(x, spec) - e_n) / (r * r) - 1.0 / (4.0 * r * r);
    let lhs = match target {
        PctTarget::RadialOscillator => {
            let (omega, l, e_fixed) = morse_to_radial(&spec.morse, n)?;
            let p = crate::domain::RadialExtParams::new(omega, l, n, spec.ext.p, spec.ext.q_big)?;
            potentials::v_radial_ext(r, &p)? - e_fixed
        }
        PctTarget::Coulomb => {
            let (z, l, e_fixed) = morse_to_coulomb(&spec.morse, n)?;
            let p = crate::domain::CoulombExtParams::new(z, l, n, spec.ext.p, spec.ext.q_big)?;
            potentials::v_coulomb_ext(r, &p)? - e_fixed
        }
    };
    Ok(lhs - rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::ExtensionParams;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn morse_to_radial_example() {
        let p = MorseParams::new(3.5, 0.5).unwrap();
        let (omega, l, e) = morse_to_radial(&p, 1).unwrap();
        assert_eq!((omega, l, e), (2.0, 4.5, 16.0));
        // fixed-energy consistency ω(2n + l + 3/2) = Ẽ
        assert_eq!(omega * (2.0 + l + 1.5), e);
        // boundary: n = 1 is not below A = 1
        let p = MorseParams::new(1.0, 1.0).unwrap();
        assert!(matches!(morse_to_radial(&p, 1), Err(Error::Level { .. })));
    }

    #[test]
    fn radial_to_morse_examples() {
        let m = radial_to_morse(2.0, 4.5, 1);
        assert_eq!((m.a, m.b), (3.5, 0.5));
        let m = radial_to_morse(2.0, 1.0, 2);
        assert_eq!((m.a, m.b), (2.75, 0.5));
    }

    #[test]
    fn morse_to_coulomb_examples() {
        let p = MorseParams::new(3.5, 1.0).unwrap();
        let (z, l, e) = morse_to_coulomb(&p, 1).unwrap();
        assert_eq!((z, l, e), (4.0, 2.0, -1.0));
        // consistency −Z²/(n+l+1)² = −B²
        assert_relative_eq!(-z * z / ((1.0 + l + 1.0) * (1.0 + l + 1.0)), e, max_relative = 1e-15);
        // A − n ≤ 1/2 leaves no room for l ≥ 0
        let p = MorseParams::new(0.4, 1.0).unwrap();
        assert!(matches!(
            morse_to_coulomb(&p, 0),
            Err(Error::Domain { field: "l", .. })
        ));
    }

    #[test]
    fn coulomb_to_morse_examples() {
        let m = coulomb_to_morse(4.0, 2.0, 1);
        assert_eq!((m.a, m.b), (3.5, 1.0));
        let m = coulomb_to_morse(1.0, 0.0, 0);
        assert_eq!((m.a, m.b), (0.5, 1.0));
    }

    #[test]
    fn morse_to_scarf_examples() {
        let spec = SuperpotentialSpec::new(
            MorseParams::new(2.0, 1.0).unwrap(),
            ExtensionParams::new(1.0, 1.0).unwrap(),
        );
        let (sp, q) = morse_to_scarf(&spec).unwrap();
        assert_eq!((sp.a, sp.bp, q), (2.0, 0.5, 0.0));

        let spec = SuperpotentialSpec::new(
            MorseParams::new(2.0, 1.0).unwrap(),
            ExtensionParams::new(0.5, 3.7).unwrap(),
        );
        let (sp, _) = morse_to_scarf(&spec).unwrap();
        assert_eq!(sp.bp, 0.0);

        let spec = SuperpotentialSpec::new(
            MorseParams::new(2.0, 1.0).unwrap(),
            ExtensionParams::new(0.5, 0.0).unwrap(),
        );
        assert!(matches!(morse_to_scarf(&spec), Err(Error::Domain { field: "Q", .. })));
    }

    #[test]
    fn pullback_domain_error() {
        let psi = |_x: f64| 1.0;
        assert!(pullback_value(PctTarget::RadialOscillator, psi, 0.0).is_err());
        assert!(pullback_value(PctTarget::Coulomb, psi, -2.0).is_err());
    }

    #[test]
    fn coordinate_maps_are_monotone() {
        for target in [PctTarget::RadialOscillator, PctTarget::Coulomb] {
            let mut prev = target.x_of_r(1e-6);
            let mut r = 2e-6;
            while r < 1e3 {
                let x = target.x_of_r(r);
                assert!(x < prev, "x(r) must decrease in r");
                prev = x;
                r *= 3.0;
            }
        }
    }

    #[test]
    fn pct_potential_residual_examples() {
        let spec = SuperpotentialSpec::new(
            MorseParams::new(3.2, 1.1).unwrap(),
            ExtensionParams::new(-0.7, 2.4).unwrap(),
        );
        for target in [PctTarget::RadialOscillator, PctTarget::Coulomb] {
            for &r in &[0.5, 1.0, 2.0] {
                let res = pct_potential_residual(&spec, 1, target, r).unwrap();
                let scale = 1.0 + potentials::v_morse_ext(target.x_of_r(r), &spec).abs() / (r * r);
                assert!(res.abs() <= 1e-10 * scale, "residual {res} at r={r}");
            }
        }
        // plain limit, exact identity
        let plain = SuperpotentialSpec::new(
            MorseParams::new(3.2, 1.1).unwrap(),
            ExtensionParams::new(0.0, 0.0).unwrap(),
        );
        for &r in &[0.5, 1.0, 2.0] {
            let res = pct_potential_residual(&plain, 1, PctTarget::RadialOscillator, r).unwrap();
            assert!(res.abs() <= 1e-12 * (1.0 + 1.0 / (r * r)));
        }
    }

    proptest! {
        #[test]
        fn radial_round_trip_is_exact(
            omega in 0.1..8.0f64,
            l in 0.0..6.0f64,
            n in 0usize..4,
        ) {
            let m = radial_to_morse(omega, l, n);
            let (om2, l2, e) = morse_to_radial(&m, n).unwrap();
            // 4-ulp agreement
            prop_assert!((om2 - omega).abs() <= 4.0 * f64::EPSILON * omega.abs());
            prop_assert!((l2 - l).abs() <= 4.0 * f64::EPSILON * (1.0 + l.abs()));
            // fixed-energy identity ω(2n + l + 3/2) = Ẽ
            let lhs = omega * (2.0 * n as f64 + l + 1.5);
            prop_assert!((lhs - e).abs() <= 4.0 * f64::EPSILON * e.abs());
        }

        #[test]
        fn coulomb_round_trip_is_exact(
            z in 0.1..8.0f64,
            l in 0.0..6.0f64,
            n in 0usize..4,
        ) {
            let m = coulomb_to_morse(z, l, n);
            let (z2, l2, e) = morse_to_coulomb(&m, n).unwrap();
            prop_assert!((z2 - z).abs() <= 4.0 * f64::EPSILON * z.abs());
            prop_assert!((l2 - l).abs() <= 4.0 * f64::EPSILON * (1.0 + l.abs()));
            let nu = n as f64 + l + 1.0;
            prop_assert!((-z * z / (nu * nu) - e).abs() <= 4.0 * f64::EPSILON * e.abs());
        }
    }
}
