//! Truncated power-series arithmetic used to extract Taylor coefficients of
//! the closed-form area and volume.
//!
//! A [`SeriesPoly`] holds coefficients `c_0 .. c_N` of a series truncated at
//! order `N`; all operations are exact to the truncation order (up to
//! floating-point rounding of the coefficients themselves).

#[derive(Debug, Clone, PartialEq)]
pub struct SeriesPoly {
    /// Coefficients, index = power; length is truncation order + 1.
    pub coeffs: Vec<f64>,
}

impl SeriesPoly {
    pub fn new(coeffs: Vec<f64>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least the constant term");
        SeriesPoly { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        SeriesPoly {
            coeffs: vec![0.0; order + 1],
        }
    }

    pub fn constant(c: f64, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> f64 {
        self.coeffs.get(k).copied().unwrap_or(0.0)
    }

    pub fn add(&self, other: &SeriesPoly) -> SeriesPoly {
        let order = self.order().min(other.order());
        SeriesPoly::new((0..=order).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn scale(&self, s: f64) -> SeriesPoly {
        SeriesPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, other: &SeriesPoly) -> SeriesPoly {
        let order = self.order().min(other.order());
        let mut out = vec![0.0; order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if *a == 0.0 {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] += a * b;
            }
        }
        SeriesPoly::new(out)
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn recip(&self) -> SeriesPoly {
        let c0 = self.coeffs[0];
        assert!(c0 != 0.0, "reciprocal needs a nonzero constant term");
        let order = self.order();
        let mut out = vec![0.0; order + 1];
        out[0] = 1.0 / c0;
        for k in 1..=order {
            let mut s = 0.0;
            for j in 1..=k {
                s += self.coeff(j) * out[k - j];
            }
            out[k] = -s / c0;
        }
        SeriesPoly::new(out)
    }

    /// Composition `self(inner)`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &SeriesPoly) -> SeriesPoly {
        assert!(
            inner.coeffs[0] == 0.0,
            "composition needs an inner series with zero constant term"
        );
        let order = self.order().min(inner.order());
        // Horner over the outer coefficients.
        let mut out = SeriesPoly::constant(self.coeff(order), order);
        for k in (0..order).rev() {
            out = out.mul(inner);
            out.coeffs[0] += self.coeff(k);
        }
        out
    }
}
