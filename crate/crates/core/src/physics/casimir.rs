use crate::error::{Error, Result};
use crate::numerics::scalar::Scalar;
use crate::summation::zeta_negative;

/// Energy and force per unit area between plates at distance `l`:
/// `E/A = -π² / (720 L³)` and `F/A = -π² / (240 L⁴)`. The `1/720` is
/// `ζ(-3) / 6`.
pub fn casimir_force(l: &Scalar, digits: u32) -> Result<(Scalar, Scalar)> {
    if !l.is_positive() {
        return Err(Error::DomainError("plate separation must be positive".into()));
    }
    let pi2 = Scalar::pi(digits).powi(2);
    let energy = -(&(&pi2 * &zeta_negative(3)) / &(&Scalar::from_int(6) * &l.powi(3)));
    // F = -dE/dL = 3 E / L
    let force = &(&Scalar::from_int(3) * &energy) / l;
    Ok((energy, force))
}
