//! Parameter records and grid/sample types shared by every other module.
//!
//! All types are immutable values (2m = ħ = 1 units throughout). Constructors
//! validate their invariants and report the offending field in the error.

use crate::error::{Error, Result};
use serde::Serialize;

/// Half-log of the extension parameter `Q`: q = ln(Q)/2, so Q = e^{2q}.
pub fn q_of(q_big: f64) -> Result<f64> {
    if !(q_big > 0.0) {
        return Err(Error::domain("Q", format!("Q = {q_big} must be > 0")));
    }
    Ok(0.5 * q_big.ln())
}

/// Morse potential parameters of V_{A,B}(x) = B²e^{-2x} − B(2A+1)e^{-x}.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MorseParams {
    pub a: f64,
    pub b: f64,
}

impl MorseParams {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a > 0.0) {
            return Err(Error::domain("A", format!("A = {a} must be > 0")));
        }
        if !(b > 0.0) {
            return Err(Error::domain("B", format!("B = {b} must be > 0")));
        }
        Ok(Self { a, b })
    }
}

/// Deformation parameters (P, Q) of the isospectral extension.
///
/// Q = 0 selects the plain-Morse limit; closed-form wavefunctions need Q > 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExtensionParams {
    pub p: f64,
    pub q_big: f64,
}

impl ExtensionParams {
    pub fn new(p: f64, q_big: f64) -> Result<Self> {
        if !(q_big >= 0.0) {
            // Q < 0 puts a pole of X1 on the real line.
            return Err(Error::domain("Q", format!("Q = {q_big} must be >= 0")));
        }
        Ok(Self { p, q_big })
    }

    /// The shift q = ln(Q)/2; errors when Q = 0.
    pub fn shift(&self) -> Result<f64> {
        q_of(self.q_big)
    }
}

/// Scarf II parameters of [B′² − A(A+1)]sech²z + B′(2A+1)sech z tanh z.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScarfParams {
    pub a: f64,
    pub bp: f64,
}

impl ScarfParams {
    pub fn new(a: f64, bp: f64) -> Result<Self> {
        if !(a > 0.0) {
            return Err(Error::domain("A", format!("A = {a} must be > 0")));
        }
        Ok(Self { a, bp })
    }
}

/// Extended radial-oscillator parameters (ω, l, level index n, and P, Q).
///
/// `l` is an effective real parameter; the coordinate maps produce
/// half-odd-integer and generic real values.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadialExtParams {
    pub omega: f64,
    pub l: f64,
    pub n: usize,
    pub p: f64,
    pub q_big: f64,
}

impl RadialExtParams {
    pub fn new(omega: f64, l: f64, n: usize, p: f64, q_big: f64) -> Result<Self> {
        if !(omega > 0.0) {
            return Err(Error::domain("omega", format!("omega = {omega} must be > 0")));
        }
        if !(l >= 0.0) {
            return Err(Error::domain("l", format!("l = {l} must be >= 0")));
        }
        if !(q_big >= 0.0) {
            return Err(Error::domain("Q", format!("Q = {q_big} must be >= 0")));
        }
        Ok(Self { omega, l, n, p, q_big })
    }

    pub fn ext(&self) -> ExtensionParams {
        ExtensionParams { p: self.p, q_big: self.q_big }
    }
}

/// Extended Coulomb parameters (Z, l, level index n, and P, Q).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CoulombExtParams {
    pub z: f64,
    pub l: f64,
    pub n: usize,
    pub p: f64,
    pub q_big: f64,
}

impl CoulombExtParams {
    pub fn new(z: f64, l: f64, n: usize, p: f64, q_big: f64) -> Result<Self> {
        if !(z > 0.0) {
            return Err(Error::domain("Z", format!("Z = {z} must be > 0")));
        }
        if !(l >= 0.0) {
            return Err(Error::domain("l", format!("l = {l} must be >= 0")));
        }
        if !(q_big >= 0.0) {
            return Err(Error::domain("Q", format!("Q = {q_big} must be >= 0")));
        }
        Ok(Self { z, l, n, p, q_big })
    }

    pub fn ext(&self) -> ExtensionParams {
        ExtensionParams { p: self.p, q_big: self.q_big }
    }
}

/// Uniform 1-D grid with `count` nodes including both endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridSpec {
    pub x_min: f64,
    pub x_max: f64,
    pub count: usize,
}

impl GridSpec {
    pub fn new(x_min: f64, x_max: f64, count: usize) -> Result<Self> {
        if !(x_min < x_max) {
            return Err(Error::domain(
                "x_min",
                format!("x_min = {x_min} must be < x_max = {x_max}"),
            ));
        }
        if count < 3 {
            return Err(Error::domain("count", format!("count = {count} must be >= 3")));
        }
        if !x_min.is_finite() || !x_max.is_finite() {
            return Err(Error::domain("x_min", "grid endpoints must be finite".to_string()));
        }
        Ok(Self { x_min, x_max, count })
    }

    /// Grid spacing h = (x_max − x_min)/(count − 1).
    pub fn spacing(&self) -> f64 {
        (self.x_max - self.x_min) / (self.count - 1) as f64
    }

    pub fn node(&self, i: usize) -> f64 {
        debug_assert!(i < self.count);
        if i == self.count - 1 {
            self.x_max
        } else {
            self.x_min + i as f64 * self.spacing()
        }
    }

    pub fn nodes(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.count).map(move |i| self.node(i))
    }

    /// Sample a scalar function on every node.
    pub fn sample(&self, f: impl Fn(f64) -> f64) -> Result<SampledFunction> {
        SampledFunction::new(*self, self.nodes().map(f).collect())
    }
}

/// Real-valued samples on a uniform grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledFunction {
    pub grid: GridSpec,
    pub values: Vec<f64>,
}

impl SampledFunction {
    pub fn new(grid: GridSpec, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.count {
            return Err(Error::domain(
                "values",
                format!("values.len() = {} != grid.count = {}", values.len(), grid.count),
            ));
        }
        if let Some(v) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::domain("values", format!("non-finite sample {v}")));
        }
        Ok(Self { grid, values })
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }
}
