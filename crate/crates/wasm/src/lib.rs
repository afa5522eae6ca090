//! Browser bindings: Padé staircase of a catalog series, heat-equation
//! profiles, and Gibbs partial sums with and without the boundary term.
//! Every export returns a JSON string.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use resum::catalog;
use resum::fourier::{gibbs_accelerate, heat_solve, sine_coefficients, FunctionHandle, HeatProblem};
use resum::pade::staircase_evaluate;
use resum::{Error, Scalar};

const DIGITS: u32 = 30;
const MAX_DEPTH: usize = 30;
const MAX_MODES: usize = 2000;
const MAX_POINTS: usize = 2000;

#[derive(Debug, Serialize)]
pub struct StaircaseRow {
    pub label: String,
    pub n: usize,
    pub m: usize,
    pub exact: Option<String>,
    pub value: f64,
}

#[derive(Debug, Serialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

#[derive(Debug, Serialize)]
pub struct GibbsCurves {
    pub plain: Vec<Point>,
    pub accelerated: Vec<Point>,
    pub boundary: String,
}

fn limit(value: usize, max: usize, what: &str) -> Result<usize, Error> {
    if value == 0 || value > max {
        return Err(Error::InvalidInput(format!("{what} must lie in 1..={max}")));
    }
    Ok(value)
}

pub fn staircase_rows(series: &str, z: &str, depth: usize) -> Result<Vec<StaircaseRow>, Error> {
    let seq = catalog::lookup(series)?;
    let z = Scalar::parse(z)?;
    let entries = staircase_evaluate(&seq, &z, limit(depth, MAX_DEPTH, "depth")?)?;
    Ok(entries
        .into_iter()
        .map(|e| StaircaseRow {
            exact: e.value.is_exact().then(|| e.value.render(DIGITS)),
            value: e.value.to_f64(),
            label: e.label,
            n: e.orders.0,
            m: e.orders.1,
        })
        .collect())
}

pub fn heat_points(f: &str, g: &str, h: &str, modes: usize, t: f64, accelerate: bool, points: usize) -> Result<Vec<Point>, Error> {
    let problem = HeatProblem::new(
        FunctionHandle::named(f)?,
        FunctionHandle::named(g)?,
        FunctionHandle::named(h)?,
        limit(modes, MAX_MODES, "modes")?,
        vec![t],
    )?;
    let solution = heat_solve(&problem, accelerate)?;
    Ok(solution
        .profile(0, limit(points, MAX_POINTS, "points")?)
        .into_iter()
        .map(|(x, y)| Point { x, y })
        .collect())
}

pub fn gibbs_curves(f: &str, terms: usize, points: usize) -> Result<GibbsCurves, Error> {
    let series = sine_coefficients(&FunctionHandle::named(f)?, limit(terms, MAX_MODES, "terms")?, DIGITS)?;
    let (boundary, residual) = gibbs_accelerate(&series)?;
    let points = limit(points, MAX_POINTS, "points")?;
    let grid = (0..=points).map(|j| std::f64::consts::PI * j as f64 / points as f64);
    let plain = grid.clone().map(|x| Point { x, y: series.eval(x) }).collect();
    let accelerated = grid.map(|x| Point { x, y: boundary.eval(x) + residual.eval(x) }).collect();
    Ok(GibbsCurves {
        plain,
        accelerated,
        boundary: boundary.to_string(),
    })
}

fn to_json<T: Serialize>(r: Result<T, Error>) -> Result<String, JsError> {
    let value = r.map_err(|e| JsError::new(&e.to_string()))?;
    serde_json::to_string(&value).map_err(|e| JsError::new(&e.to_string()))
}

/// Staircase `[0/0], [0/1], [1/1], ...` of a catalog series at `z`.
#[wasm_bindgen]
pub fn staircase(series: &str, z: &str, depth: usize) -> Result<String, JsError> {
    to_json(staircase_rows(series, z, depth))
}

/// `u(x, t)` for `u_t = u_xx` on `[0, π]`; `f`, `g`, `h` are built-in
/// function names.
#[wasm_bindgen]
pub fn heat_profile(f: &str, g: &str, h: &str, modes: usize, t: f64, accelerate: bool, points: usize) -> Result<String, JsError> {
    to_json(heat_points(f, g, h, modes, t, accelerate, points))
}

/// Sine partial sums of `f` with `terms` modes, raw and with the endpoint
/// jump moved into the closed-form boundary term.
#[wasm_bindgen]
pub fn gibbs_partial_sum(f: &str, terms: usize, points: usize) -> Result<String, JsError> {
    to_json(gibbs_curves(f, terms, points))
}

/// Names accepted by the `series` argument of [`staircase`].
#[wasm_bindgen]
pub fn catalog_names() -> String {
    let names: Vec<&str> = catalog::entries().iter().map(|e| e.name).collect();
    serde_json::to_string(&names).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn staircase_of_factorial_series() {
        let rows = staircase_rows("euler-factorial", "1", 2).unwrap();
        let exact: Vec<_> = rows.iter().map(|r| r.exact.as_deref().unwrap()).collect();
        assert_eq!(exact, ["1", "1/2", "2/3", "4/7", "8/13"]);
        assert!(staircase_rows("euler-factorial", "1", 0).is_err());
    }

    #[test]
    fn heat_steady_state() {
        let p = heat_points("0", "1", "0", 100, 20.0, true, 9).unwrap();
        for pt in p {
            assert!((pt.y - (1.0 - pt.x / std::f64::consts::PI)).abs() < 1e-6);
        }
    }

    #[test]
    fn gibbs_boundary_term_removes_overshoot() {
        let c = gibbs_curves("1", 40, 400).unwrap();
        let overshoot = c.plain.iter().map(|p| p.y).fold(f64::MIN, f64::max);
        let smooth = c.accelerated.iter().map(|p| p.y).fold(f64::MIN, f64::max);
        assert!(overshoot > 1.15);
        assert!((smooth - 1.0).abs() < 1e-6);
        let json = serde_json::to_string(&c).unwrap();
        assert!(json.contains("\"boundary\""));
    }
}
