use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::numerics::poly;
use crate::numerics::scalar::Scalar;

/// A real function of one variable. The closed forms let sine coefficients
/// be computed without quadrature.
#[derive(Clone)]
pub enum FunctionHandle {
    Constant(Scalar),
    /// Coefficients lowest degree first.
    Polynomial(Vec<Scalar>),
    /// `amplitude · sin(k x)`.
    Sine { k: usize, amplitude: Scalar },
    /// Piecewise-linear interpolation of increasing abscissae; constant
    /// beyond the ends.
    Samples { xs: Vec<f64>, ys: Vec<f64> },
    Closure(Arc<dyn Fn(f64) -> f64 + Send + Sync>),
}

impl fmt::Debug for FunctionHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FunctionHandle::Constant(c) => write!(f, "Constant({c})"),
            FunctionHandle::Polynomial(p) => write!(f, "Polynomial({p:?})"),
            FunctionHandle::Sine { k, amplitude } => write!(f, "Sine({amplitude}·sin({k}x))"),
            FunctionHandle::Samples { xs, .. } => write!(f, "Samples({} points)", xs.len()),
            FunctionHandle::Closure(_) => f.write_str("Closure"),
        }
    }
}

impl FunctionHandle {
    pub fn zero() -> Self {
        FunctionHandle::Constant(Scalar::zero())
    }

    pub fn closure<F: Fn(f64) -> f64 + Send + Sync + 'static>(f: F) -> Self {
        FunctionHandle::Closure(Arc::new(f))
    }

    pub fn samples(xs: Vec<f64>, ys: Vec<f64>) -> Result<Self> {
        if xs.len() != ys.len() || xs.len() < 2 {
            return Err(Error::InvalidInput("samples need at least two (x, y) pairs".into()));
        }
        if xs.windows(2).any(|w| w[1].is_nan() || w[0].is_nan() || w[1] <= w[0]) {
            return Err(Error::InvalidInput("sample abscissae must be strictly increasing".into()));
        }
        if xs.iter().chain(&ys).any(|v| !v.is_finite()) {
            return Err(Error::InvalidInput("samples must be finite".into()));
        }
        Ok(FunctionHandle::Samples { xs, ys })
    }

    /// Two-column CSV `x,y`; a non-numeric first line is taken as a header.
    pub fn from_csv(text: &str) -> Result<Self> {
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut cols = line.split(',').map(str::trim);
            let (x, y) = (cols.next().unwrap_or(""), cols.next().unwrap_or(""));
            match (x.parse::<f64>(), y.parse::<f64>()) {
                (Ok(x), Ok(y)) if cols.next().is_none() => {
                    xs.push(x);
                    ys.push(y);
                }
                _ if i == 0 => continue,
                _ => return Err(Error::InvalidInput(format!("bad sample line {}: '{line}'", i + 1))),
            }
        }
        Self::samples(xs, ys)
    }

    /// Built-in functions by name: a number, `x`, `pi-x`, `x(pi-x)`, `sin`,
    /// `sin<k>` (for `sin(kx)`), `exp-decay` (`e^{-x}`) or `ramp` (`min(x, 1)`).
    pub fn named(name: &str) -> Result<Self> {
        let pi = || Scalar::pi(crate::numerics::scalar::DEFAULT_DIGITS);
        let handle = match name {
            "x" => FunctionHandle::Polynomial(vec![Scalar::zero(), Scalar::one()]),
            "pi-x" => FunctionHandle::Polynomial(vec![pi(), Scalar::from_int(-1)]),
            "x(pi-x)" => FunctionHandle::Polynomial(vec![Scalar::zero(), pi(), Scalar::from_int(-1)]),
            "sin" => FunctionHandle::Sine {
                k: 1,
                amplitude: Scalar::one(),
            },
            "exp-decay" => FunctionHandle::closure(|x| (-x).exp()),
            "ramp" => FunctionHandle::closure(|x| x.min(1.0)),
            _ => {
                if let Some(k) = name.strip_prefix("sin").and_then(|k| k.parse::<usize>().ok()) {
                    if k == 0 {
                        return Err(Error::InvalidInput("sin0 is identically zero; use 0".into()));
                    }
                    FunctionHandle::Sine {
                        k,
                        amplitude: Scalar::one(),
                    }
                } else {
                    FunctionHandle::Constant(
                        Scalar::parse(name).map_err(|_| Error::InvalidInput(format!("unknown function '{name}'")))?,
                    )
                }
            }
        };
        Ok(handle)
    }

    pub fn eval(&self, x: f64) -> f64 {
        match self {
            FunctionHandle::Constant(c) => c.to_f64(),
            FunctionHandle::Polynomial(p) => poly::eval_f64(&poly::to_f64(p), x),
            FunctionHandle::Sine { k, amplitude } => amplitude.to_f64() * (*k as f64 * x).sin(),
            FunctionHandle::Samples { xs, ys } => {
                let last = xs.len() - 1;
                if x <= xs[0] {
                    return ys[0];
                }
                if x >= xs[last] {
                    return ys[last];
                }
                let i = xs.partition_point(|&v| v <= x) - 1;
                let w = (x - xs[i]) / (xs[i + 1] - xs[i]);
                ys[i] + w * (ys[i + 1] - ys[i])
            }
            FunctionHandle::Closure(f) => f(x),
        }
    }

    pub fn is_constant(&self) -> Option<f64> {
        match self {
            FunctionHandle::Constant(c) => Some(c.to_f64()),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_interpolate() {
        let h = FunctionHandle::from_csv("x,y\n0,0\n1,2\n3,2\n").unwrap();
        assert_eq!(h.eval(0.5), 1.0);
        assert_eq!(h.eval(2.0), 2.0);
        assert_eq!(h.eval(10.0), 2.0);
        assert!(FunctionHandle::from_csv("0,0\n0,1\n").is_err());
    }

    #[test]
    fn named_functions() {
        assert_eq!(FunctionHandle::named("1/2").unwrap().eval(3.0), 0.5);
        assert!((FunctionHandle::named("sin3").unwrap().eval(0.5) - 1.5f64.sin()).abs() < 1e-15);
        assert!(FunctionHandle::named("cosh").is_err());
    }
}
