//! Deterministic seeded sampling.
//!
//! Every sampled case is drawn from its own ChaCha stream, selected by the
//! sample index. Partitioning the index range across threads therefore
//! cannot change what any sample contains, and reports stay identical
//! under any parallelism degree.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::Result;
use crate::error::CoreError;
use crate::vector::Vector;

/// A sampling box, sample count, seed, and scalar range for lambda draws.
#[derive(Clone, Debug, PartialEq)]
pub struct SampleSpec {
    box_low: Vector,
    box_high: Vector,
    pub count: usize,
    pub seed: u64,
    pub scalar_range: f64,
}

impl SampleSpec {
    pub fn new(
        box_low: Vector,
        box_high: Vector,
        count: usize,
        seed: u64,
        scalar_range: f64,
    ) -> Result<Self> {
        if box_low.dim() != box_high.dim() {
            return Err(CoreError::DimensionMismatch {
                expected: box_low.dim(),
                found: box_high.dim(),
            });
        }
        if box_low
            .iter()
            .zip(box_high.iter())
            .any(|(lo, hi)| lo > hi)
        {
            return Err(CoreError::BadSampleSpec {
                reason: "box_low must be componentwise <= box_high",
            });
        }
        if count == 0 {
            return Err(CoreError::BadSampleSpec {
                reason: "count must be at least 1",
            });
        }
        if scalar_range <= 0.0 || !scalar_range.is_finite() {
            return Err(CoreError::BadSampleSpec {
                reason: "scalar_range must be positive and finite",
            });
        }
        Ok(SampleSpec {
            box_low,
            box_high,
            count,
            seed,
            scalar_range,
        })
    }

    /// The box [-half_width, half_width]^dim with a scalar range of 10.
    pub fn centered(dim: usize, half_width: f64, count: usize, seed: u64) -> Result<Self> {
        let high = Vector::zeros(dim)?.add(&Vector::new(alloc::vec![half_width; dim])?);
        SampleSpec::new(high.neg(), high, count, seed, 10.0)
    }

    pub fn dim(&self) -> usize {
        self.box_low.dim()
    }

    pub fn box_low(&self) -> &Vector {
        &self.box_low
    }

    pub fn box_high(&self) -> &Vector {
        &self.box_high
    }

    /// The generator for sample `index`; stream selection keys the index.
    pub fn rng_at(&self, index: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index);
        rng
    }

    /// One point, uniform over the box.
    pub fn vector(&self, rng: &mut ChaCha8Rng) -> Vector {
        let coords = self
            .box_low
            .iter()
            .zip(self.box_high.iter())
            .map(|(lo, hi)| {
                if lo == hi {
                    *lo
                } else {
                    rng.random_range(*lo..=*hi)
                }
            })
            .collect();
        Vector::new(coords).expect("box bounds are finite")
    }

    /// One scalar, uniform over [-scalar_range, scalar_range].
    pub fn scalar(&self, rng: &mut ChaCha8Rng) -> f64 {
        rng.random_range(-self.scalar_range..=self.scalar_range)
    }

    /// One scalar with |lambda| not in {0, 1}, for homogeneity falsifiers.
    pub fn scalar_excluding_unit(&self, rng: &mut ChaCha8Rng) -> f64 {
        loop {
            let lambda = self.scalar(rng);
            if lambda != 0.0 && lambda.abs() != 1.0 {
                return lambda;
            }
        }
    }
}
