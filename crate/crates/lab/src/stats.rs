/// Wilson score interval for `successes` out of `n` at `z` standard deviations.
pub fn wilson_interval(successes: u64, n: u64, z: f64) -> (f64, f64) {
    if n == 0 {
        return (0.0, 1.0);
    }
    let n = n as f64;
    let phat = successes as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = (phat + z2 / (2.0 * n)) / denom;
    let half = z / denom * (phat * (1.0 - phat) / n + z2 / (4.0 * n * n)).sqrt();
    ((center - half).max(0.0), (center + half).min(1.0))
}

/// Binomial standard deviation of a sample proportion.
pub fn proportion_sigma(rate: f64, n: u64) -> f64 {
    if n == 0 {
        return 0.0;
    }
    (rate * (1.0 - rate) / n as f64).sqrt()
}

/// Least-squares `c` in `y ≈ c·x`.
pub fn fit_through_origin(points: &[(f64, f64)]) -> f64 {
    let sxy: f64 = points.iter().map(|(x, y)| x * y).sum();
    let sxx: f64 = points.iter().map(|(x, _)| x * x).sum();
    sxy / sxx
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wilson_reference_values() {
        // 0 of 10 at z = 1.96: upper edge z²/(n+z²)
        let (lo, hi) = wilson_interval(0, 10, 1.96);
        assert_eq!(lo, 0.0);
        assert!((hi - 0.2775).abs() < 1e-4);
        let (lo, hi) = wilson_interval(50, 100, 3.0);
        assert!((0.5 - lo - (hi - 0.5)).abs() < 1e-12);
    }

    #[test]
    fn fit() {
        assert!((fit_through_origin(&[(1.0, 2.0), (2.0, 4.0)]) - 2.0).abs() < 1e-12);
    }
}
