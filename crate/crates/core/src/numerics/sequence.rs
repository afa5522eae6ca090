use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::scalar::Scalar;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SignConvention {
    /// Terms are used exactly as stored.
    #[serde(rename = "as-is")]
    AsIs,
    /// Stored terms are magnitudes; term `n` enters with sign `(-1)^n`.
    #[serde(rename = "alternating-implied")]
    AlternatingImplied,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Origin {
    Explicit,
    Generator(String),
    Catalog(String),
}

/// Produces the first `count` stored terms of a sequence.
pub type Generator = Arc<dyn Fn(usize) -> Result<Vec<Scalar>> + Send + Sync>;

/// Series coefficients, either a finite list or a rule that extends on demand.
#[derive(Clone)]
pub struct CoefficientSequence {
    name: String,
    terms: Vec<Scalar>,
    sign: SignConvention,
    origin: Origin,
    generator: Option<Generator>,
    limit: Option<usize>,
}

impl fmt::Debug for CoefficientSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CoefficientSequence")
            .field("name", &self.name)
            .field("terms", &self.terms)
            .field("sign", &self.sign)
            .field("origin", &self.origin)
            .field("extendable", &self.generator.is_some())
            .field("limit", &self.limit)
            .finish()
    }
}

impl CoefficientSequence {
    pub fn explicit(name: impl Into<String>, terms: Vec<Scalar>, sign: SignConvention) -> Self {
        Self {
            name: name.into(),
            terms,
            sign,
            origin: Origin::Explicit,
            generator: None,
            limit: None,
        }
    }

    /// A sequence produced by `rule`, which returns the first `count` stored
    /// terms. `limit` caps how many terms may be requested.
    pub fn generated<F>(name: impl Into<String>, sign: SignConvention, limit: Option<usize>, rule: F) -> Self
    where
        F: Fn(usize) -> Result<Vec<Scalar>> + Send + Sync + 'static,
    {
        let name = name.into();
        Self {
            origin: Origin::Generator(name.clone()),
            name,
            terms: Vec::new(),
            sign,
            generator: Some(Arc::new(rule)),
            limit,
        }
    }

    /// Convenience for rules defined term by term.
    pub fn from_fn<F>(name: impl Into<String>, sign: SignConvention, term: F) -> Self
    where
        F: Fn(usize) -> Scalar + Send + Sync + 'static,
    {
        Self::generated(name, sign, None, move |count| Ok((0..count).map(&term).collect()))
    }

    pub fn with_origin(mut self, origin: Origin) -> Self {
        self.origin = origin;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn sign_convention(&self) -> SignConvention {
        self.sign
    }

    pub fn origin(&self) -> &Origin {
        &self.origin
    }

    pub fn is_extendable(&self) -> bool {
        self.generator.is_some()
    }

    /// Number of terms available without calling the generator.
    pub fn stored_len(&self) -> usize {
        self.terms.len()
    }

    /// Largest number of terms this sequence can supply, if bounded.
    pub fn capacity(&self) -> Option<usize> {
        match &self.generator {
            None => Some(self.terms.len()),
            Some(_) => self.limit,
        }
    }

    /// The first `count` stored (unsigned) terms.
    pub fn stored_prefix(&self, count: usize) -> Result<Vec<Scalar>> {
        if count <= self.terms.len() {
            return Ok(self.terms[..count].to_vec());
        }
        let exhausted = || Error::GeneratorExhausted {
            name: self.name.clone(),
            requested: count,
            available: self.capacity().unwrap_or(self.terms.len()),
        };
        let generator = self.generator.as_ref().ok_or_else(exhausted)?;
        if self.limit.is_some_and(|limit| count > limit) {
            return Err(exhausted());
        }
        let terms = generator(count)?;
        if terms.len() < count {
            return Err(exhausted());
        }
        Ok(terms.into_iter().take(count).collect())
    }

    /// The first `count` terms with the sign convention applied, so that the
    /// series is `Σ c_n x^n`.
    pub fn signed_prefix(&self, count: usize) -> Result<Vec<Scalar>> {
        let mut terms = self.stored_prefix(count)?;
        if self.sign == SignConvention::AlternatingImplied {
            for t in terms.iter_mut().skip(1).step_by(2) {
                *t = -t.clone();
            }
        }
        Ok(terms)
    }

    /// A finite copy holding the first `count` terms.
    pub fn materialize(&self, count: usize) -> Result<Self> {
        Ok(Self {
            name: self.name.clone(),
            terms: self.stored_prefix(count)?,
            sign: self.sign,
            origin: self.origin.clone(),
            generator: self.generator.clone(),
            limit: self.limit,
        })
    }

    /// The same series with the sign convention folded into the terms.
    pub fn to_as_is(&self, count: usize) -> Result<Self> {
        Ok(Self::explicit(self.name.clone(), self.signed_prefix(count)?, SignConvention::AsIs))
    }

    pub fn terms(&self) -> &[Scalar] {
        &self.terms
    }
}

/// Partial sums `A_0..A_N`.
#[derive(Clone, Debug, PartialEq)]
pub struct PartialSums {
    pub values: Vec<Scalar>,
}

impl PartialSums {
    pub fn new(values: Vec<Scalar>) -> Self {
        Self { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn last(&self) -> Option<&Scalar> {
        self.values.last()
    }
}

/// `A_0..A_N` of `Σ c_n point^n`, respecting the sign convention.
pub fn partial_sums(seq: &CoefficientSequence, point: &Scalar, n: usize) -> Result<PartialSums> {
    let terms = seq.signed_prefix(n + 1)?;
    let mut values = Vec::with_capacity(n + 1);
    let mut power = Scalar::one();
    let mut acc = Scalar::zero();
    for (k, c) in terms.iter().enumerate() {
        if k > 0 {
            power = &power * point;
        }
        acc = &acc + &(c * &power);
        values.push(acc.clone());
    }
    Ok(PartialSums { values })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn log2_series() -> CoefficientSequence {
        CoefficientSequence::from_fn("log2", SignConvention::AlternatingImplied, |n| {
            Scalar::ratio(1, n as i64 + 1)
        })
    }

    #[test]
    fn log2_partial_sums() {
        let sums = partial_sums(&log2_series(), &Scalar::one(), 2).unwrap();
        assert_eq!(sums.values, vec![Scalar::one(), Scalar::ratio(1, 2), Scalar::ratio(5, 6)]);
    }

    #[test]
    fn zero_and_geometric() {
        let zeros = CoefficientSequence::explicit("z", vec![Scalar::zero(); 4], SignConvention::AsIs);
        let sums = partial_sums(&zeros, &Scalar::one(), 3).unwrap();
        assert!(sums.values.iter().all(Scalar::is_zero));
        assert_eq!(sums.len(), 4);

        let ones = CoefficientSequence::from_fn("ones", SignConvention::AsIs, |_| Scalar::one());
        let sums = partial_sums(&ones, &Scalar::ratio(1, 2), 2).unwrap();
        assert_eq!(sums.values, vec![Scalar::one(), Scalar::ratio(3, 2), Scalar::ratio(7, 4)]);
    }

    #[test]
    fn exhausted_explicit_sequence() {
        let short = CoefficientSequence::explicit("short", vec![Scalar::one(); 2], SignConvention::AsIs);
        let err = partial_sums(&short, &Scalar::one(), 5).unwrap_err();
        assert_eq!(
            err,
            Error::GeneratorExhausted {
                name: "short".into(),
                requested: 6,
                available: 2
            }
        );
    }

    #[test]
    fn generator_limit_is_enforced() {
        let seq = CoefficientSequence::generated("capped", SignConvention::AsIs, Some(3), |count| {
            Ok(vec![Scalar::one(); count])
        });
        assert!(seq.stored_prefix(3).is_ok());
        assert!(matches!(seq.stored_prefix(4), Err(Error::GeneratorExhausted { .. })));
    }

    #[test]
    fn signed_prefix_alternates() {
        let s = log2_series().signed_prefix(4).unwrap();
        assert_eq!(s[1], Scalar::ratio(-1, 2));
        assert_eq!(s[2], Scalar::ratio(1, 3));
        assert_eq!(s[3], Scalar::ratio(-1, 4));
    }
}
