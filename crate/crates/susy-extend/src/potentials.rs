//! Pointwise evaluation of the five potential families and the Scarf II
//! equivalence map.
//!
//! `v_morse_ext` follows the six-term rational form in u = e^{−x}. That form
//! cancels against the plain Morse term once u² dwarfs the O(1) result, so its
//! useful range is roughly |x − q| ≲ 18; eigensolvers sample the identical
//! potential through `susy::partner_potential(Plus)`, which stays absolutely
//! accurate on the whole line. The extended radial/Coulomb potentials are
//! defined by the coordinate-map identity (the authoritative route); the
//! bracketed closed forms are kept alongside as independent cross-checks.

use crate::domain::{CoulombExtParams, MorseParams, RadialExtParams, ScarfParams};
use crate::error::{Error, Result};
use crate::pct;
use crate::susy::SuperpotentialSpec;

/// Morse potential V_{A,B}(x) = B²e^{−2x} − B(2A+1)e^{−x}.
pub fn v_morse(x: f64, p: &MorseParams) -> f64 {
    let u = (-x).exp();
    p.b * p.b * u * u - p.b * (2.0 * p.a + 1.0) * u
}

/// Extended Morse potential V_{A,B,ext}(x): the plain Morse term plus the
/// six-term rational correction over (1 + Q e^{−2x})².
pub fn v_morse_ext(x: f64, spec: &SuperpotentialSpec) -> f64 {
    let (a, b) = (spec.morse.a, spec.morse.b);
    let (p, q) = (spec.ext.p, spec.ext.q_big);
    let u = (-x).exp();
    let u2 = u * u;
    let braces = 2.0 * p * (2.0 * a + 1.0) * u
        + 4.0 * (p * (p - b) - a * (a + 1.0) * q) * u2
        - (2.0 * a + 1.0) * (2.0 * p - 3.0 * b) * q * u2 * u
        - 2.0 * q * b * b * u2 * u2
        + (2.0 * a + 1.0) * b * q * q * u2 * u2 * u
        - b * b * q * q * u2 * u2 * u2;
    let denom = 1.0 + q * u2;
    v_morse(x, &spec.morse) + braces / (denom * denom)
}

/// Scarf II potential [B′² − A(A+1)] sech²z + B′(2A+1) sech z tanh z.
pub fn v_scarf2(z: f64, p: &ScarfParams) -> f64 {
    let sech = 1.0 / z.cosh();
    (p.bp * p.bp - p.a * (p.a + 1.0)) * sech * sech
        + p.bp * (2.0 * p.a + 1.0) * sech * z.tanh()
}

/// Raw difference v_morse_ext(x) − v_scarf2(x − q) under the parameter map
/// z = x − q, B′ = (2P − B)e^{−q}/2. Zero in exact arithmetic; in floats it is
/// bounded by roundoff relative to the magnitudes that cancel (see
/// [`scarf_equivalence_scale`]).
pub fn scarf_equivalence_residual(x: f64, spec: &SuperpotentialSpec) -> Result<f64> {
    let (scarf, q) = pct::morse_to_scarf(spec)?;
    Ok(v_morse_ext(x, spec) - v_scarf2(x - q, &scarf))
}

/// Magnitude scale for judging [`scarf_equivalence_residual`]: the plain Morse
/// term dominates the intermediates entering the cancellation.
pub fn scarf_equivalence_scale(x: f64, spec: &SuperpotentialSpec) -> Result<f64> {
    let (scarf, q) = pct::morse_to_scarf(spec)?;
    Ok(1.0 + v_morse(x, &spec.morse).abs() + v_scarf2(x - q, &scarf).abs())
}

/// Fixed level data shared by the two radial images.
fn radial_level(p: &RadialExtParams) -> (MorseParams, f64, f64) {
    let morse = pct::radial_to_morse(p.omega, p.l, p.n);
    let e_n = -(morse.a - p.n as f64) * (morse.a - p.n as f64);
    let e_fixed = p.omega * (2.0 * p.n as f64 + p.l + 1.5);
    (morse, e_n, e_fixed)
}

fn coulomb_level(p: &CoulombExtParams) -> (MorseParams, f64, f64) {
    let morse = pct::coulomb_to_morse(p.z, p.l, p.n);
    let e_n = -(morse.a - p.n as f64) * (morse.a - p.n as f64);
    let nu = p.n as f64 + p.l + 1.0;
    let e_fixed = -p.z * p.z / (nu * nu);
    (morse, e_n, e_fixed)
}

/// Extended radial-oscillator potential, defined through the coordinate map:
/// Ṽ(r) = 4·(V_{A,B,ext}(x(r)) − E_n)/r² − 1/(4r²) + Ẽ_n with x(r) = −2 ln r.
pub fn v_radial_ext(r: f64, p: &RadialExtParams) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::domain("r", format!("r = {r} must be > 0")));
    }
    let (morse, e_n, e_fixed) = radial_level(p);
    let spec = SuperpotentialSpec::new(morse, p.ext());
    let x = -2.0 * r.ln();
    Ok(4.0 * (v_morse_ext(x, &spec) - e_n) / (r * r) - 1.0 / (4.0 * r * r) + e_fixed)
}

/// The bracketed closed form of the extended radial-oscillator potential,
/// kept as an independent cross-check of [`v_radial_ext`].
pub fn v_radial_ext_printed(r: f64, p: &RadialExtParams) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::domain("r", format!("r = {r} must be > 0")));
    }
    let (om, l, q) = (p.omega, p.l, p.q_big);
    let pp = p.p;
    let m = 2.0 * p.n as f64 + l + 1.5;
    let r2 = r * r;
    let r4 = r2 * r2;
    let braces = (pp * (4.0 * pp - om) + q) * r2
        - 0.125 * q * om * om * r4 * r2
        - 0.0625 * q * q * om * om * r4 * r4 * r2
        + m * (2.0 * pp - (2.0 * pp - 0.75 * om) * q * r4 + 0.25 * q * q * om * r4 * r4)
        - m * m * q * r2;
    let denom = 1.0 + q * r4;
    Ok(0.25 * om * om * r2 + l * (l + 1.0) / r2 + 4.0 * braces / (denom * denom))
}

/// Extended Coulomb potential, defined through the coordinate map:
/// Ṽ(r) = (V_{A,B,ext}(x(r)) − E_n)/r² − 1/(4r²) + Ẽ_n with x(r) = −ln r.
pub fn v_coulomb_ext(r: f64, p: &CoulombExtParams) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::domain("r", format!("r = {r} must be > 0")));
    }
    let (morse, e_n, e_fixed) = coulomb_level(p);
    let spec = SuperpotentialSpec::new(morse, p.ext());
    let x = -r.ln();
    Ok((v_morse_ext(x, &spec) - e_n) / (r * r) - 1.0 / (4.0 * r * r) + e_fixed)
}

/// The bracketed closed form of the extended Coulomb potential (centrifugal
/// term read as l(l+1)/r²), kept as an independent cross-check of
/// [`v_coulomb_ext`].
pub fn v_coulomb_ext_printed(r: f64, p: &CoulombExtParams) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::domain("r", format!("r = {r} must be > 0")));
    }
    let (z, l, q, pp) = (p.z, p.l, p.q_big, p.p);
    let nu = p.n as f64 + l + 1.0;
    let r2 = r * r;
    let braces = 4.0 * pp * pp + q + 6.0 * z * q * r + 2.0 * z * q * q * r2 * r
        + 4.0 * pp * nu * (1.0 / r - q * r)
        - 4.0 * q * nu * nu
        - 4.0 * pp * z / nu
        - q * z * z / (nu * nu) * r2 * (2.0 + q * r2);
    let denom = 1.0 + q * r2;
    Ok(-2.0 * z / r + l * (l + 1.0) / r2 + braces / (denom * denom))
}
