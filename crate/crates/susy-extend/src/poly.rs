//! Polynomial special functions: generalized Laguerre and Romanovski
//! (pseudo-Jacobi) polynomials.

/// Generalized Laguerre polynomial L_n^{(α)}(y) by the three-term recurrence
/// (k+1) L_{k+1} = (2k+1+α−y) L_k − (k+α) L_{k−1}.
pub fn laguerre(n: usize, alpha: f64, y: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 1.0 + alpha - y;
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + alpha - y) * cur - (kf + alpha) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Coefficients (ascending powers of s) of the Romanovski polynomial
/// R_n^{(a,b)}(s) generated from the Rodrigues formula
///
///   R_n = (1+s²)^{1−b} e^{−a·arctan s} (d/ds)^n [ (1+s²)^{b−1+n} e^{a·arctan s} ].
///
/// Differentiating once maps (1+s²)^c e^{a·arctan s} p(s) to
/// (1+s²)^{c−1} e^{a·arctan s} [(2cs + a)p + (1+s²)p′], so the polynomial part
/// obeys p ← (2cs + a)p + (1+s²)p′ with c stepping b−1+n down to b.
pub fn romanovski_coefficients(n: usize, a: f64, b: f64) -> Vec<f64> {
    let mut p = vec![0.0; n + 1];
    p[0] = 1.0;
    let mut deg = 0usize;
    for k in 0..n {
        let c = b - 1.0 + (n - k) as f64;
        let mut next = vec![0.0; n + 1];
        for (i, &pi) in p.iter().enumerate().take(deg + 1) {
            next[i + 1] += 2.0 * c * pi;
            next[i] += a * pi;
            if i >= 1 {
                // derivative term i·p_i s^{i-1} times (1+s²)
                next[i - 1] += i as f64 * pi;
                next[i + 1] += i as f64 * pi;
            }
        }
        p = next;
        deg += 1;
    }
    p.truncate(deg + 1);
    p
}

/// Romanovski polynomial value R_n^{(a,b)}(s).
pub fn romanovski(n: usize, a: f64, b: f64, s: f64) -> f64 {
    polyval(&romanovski_coefficients(n, a, b), s)
}

/// Horner evaluation of a polynomial given ascending coefficients.
pub fn polyval(coeffs: &[f64], s: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * s + c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn laguerre_low_orders() {
        // L_0 = 1
        assert_eq!(laguerre(0, 1.3, 0.7), 1.0);
        // L_1^{(α)}(y) = α + 1 − y
        assert_eq!(laguerre(1, 2.0, 1.0), 2.0);
        // L_2^{(0)}(1) = (y² − 4y + 2)/2 at y = 1
        assert_relative_eq!(laguerre(2, 0.0, 1.0), -0.5, max_relative = 1e-15);
    }

    #[test]
    fn laguerre_against_series() {
        // brute-force series oracle: L_n^{(α)}(y) = Σ_k (-1)^k C(n+α, n-k) y^k / k!
        fn oracle(n: usize, alpha: f64, y: f64) -> f64 {
            let mut total = 0.0;
            for k in 0..=n {
                // C(n+α, n−k) = Π_{j=1}^{n-k} (α+k+j)/j
                let mut binom = 1.0;
                for j in 1..=(n - k) {
                    binom *= (alpha + k as f64 + j as f64) / j as f64;
                }
                let mut fact = 1.0;
                for j in 1..=k {
                    fact *= j as f64;
                }
                let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                total += sign * binom * y.powi(k as i32) / fact;
            }
            total
        }
        for n in 0..7 {
            for &alpha in &[0.0, 0.5, 2.0, 4.5] {
                for &y in &[0.1, 1.0, 3.7, 9.0] {
                    assert_relative_eq!(
                        laguerre(n, alpha, y),
                        oracle(n, alpha, y),
                        max_relative = 1e-12,
                        epsilon = 1e-12
                    );
                }
            }
        }
    }

    #[test]
    fn romanovski_degree_zero_and_one() {
        assert_eq!(romanovski(0, 3.0, -1.5, 0.9), 1.0);
        // R_1^{(a,b)}(s) = a + 2bs; at a = 1, b = −2, s = 3 → −11
        assert_eq!(romanovski(1, 1.0, -2.0, 3.0), -11.0);
        assert_eq!(romanovski_coefficients(1, 1.0, -2.0), vec![1.0, -4.0]);
    }

    #[test]
    fn romanovski_degree_and_leading_coefficient() {
        // degree(R_n) = n with nonzero leading coefficient for generic (a, b);
        // analytic leading coefficient: Π_{k=0}^{n-1} (2b + 2n − k − 2)
        // generic parameters: 2b + 2n − 2 − k must avoid 0 for k < n, which
        // rules out half-integer lattice values of b
        for n in 0..=6usize {
            for &(a, b) in &[(0.7, -3.21), (-1.1, -0.43), (2.0, -5.077)] {
                let c = romanovski_coefficients(n, a, b);
                assert_eq!(c.len(), n + 1, "degree mismatch for n={n}");
                let mut lead = 1.0;
                for k in 0..n {
                    lead *= 2.0 * b + 2.0 * n as f64 - k as f64 - 2.0;
                }
                assert_relative_eq!(c[n], lead, max_relative = 1e-12, epsilon = 1e-12);
                assert!(c[n].abs() > 0.0);
            }
        }
    }

    #[test]
    fn romanovski_satisfies_its_ode() {
        // (1+s²) R″ + (2bs + a) R′ − n(2b + n − 1) R = 0, checked with the
        // differentiated coefficient arrays (exact in coefficient space).
        for n in 1..=6usize {
            let (a, b) = (0.8, -2.3);
            let c = romanovski_coefficients(n, a, b);
            let d1: Vec<f64> = (1..c.len()).map(|i| i as f64 * c[i]).collect();
            let d2: Vec<f64> = (1..d1.len()).map(|i| i as f64 * d1[i]).collect();
            let lambda = -(n as f64) * (2.0 * b + n as f64 - 1.0);
            for &s in &[-2.5, -0.3, 0.0, 0.7, 4.0] {
                let r = (1.0 + s * s) * polyval(&d2, s)
                    + (2.0 * b * s + a) * polyval(&d1, s)
                    + lambda * polyval(&c, s);
                let scale = 1.0 + polyval(&c, s).abs() * (1.0 + s * s);
                assert!(r.abs() <= 1e-11 * scale, "ODE residual {r} at n={n}, s={s}");
            }
        }
    }
}
