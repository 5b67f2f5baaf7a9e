use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};

/// `len` equally spaced points `start + i·step`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UniformGrid {
    pub start: f64,
    pub step: f64,
    pub len: usize,
}

impl UniformGrid {
    pub fn new(start: f64, step: f64, len: usize) -> Result<Self> {
        if !(step > 0.0) || !step.is_finite() || !start.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "grid needs finite start and positive step, got start={start} step={step}"
            )));
        }
        if len == 0 {
            return Err(Error::InvalidParameter("grid must be nonempty".into()));
        }
        Ok(UniformGrid { start, step, len })
    }

    /// `points` samples covering `[start, end]` inclusive.
    pub fn spanning(start: f64, end: f64, points: usize) -> Result<Self> {
        if points < 2 || !(end > start) {
            return Err(Error::InvalidParameter(format!(
                "cannot span [{start}, {end}] with {points} points"
            )));
        }
        Self::new(start, (end - start) / (points - 1) as f64, points)
    }

    pub fn point(&self, i: usize) -> f64 {
        self.start + self.step * i as f64
    }

    pub fn end(&self) -> f64 {
        self.point(self.len - 1)
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.len).map(|i| self.point(i))
    }
}

/// Samples of a function on a uniform grid.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction<T> {
    pub x0: f64,
    pub h: f64,
    pub values: Vec<T>,
}

/// Smallest grid that supports the five-point stencils.
pub const MIN_GRID_LEN: usize = 5;

impl<T> GridFunction<T>
where
    T: Copy + Add<Output = T> + Sub<Output = T> + Mul<f64, Output = T>,
{
    pub fn new(x0: f64, h: f64, values: Vec<T>) -> Result<Self> {
        if !(h > 0.0) {
            return Err(Error::InvalidParameter(format!("grid step must be positive, got {h}")));
        }
        if values.len() < MIN_GRID_LEN {
            return Err(Error::InvalidParameter(format!(
                "grid function needs at least {MIN_GRID_LEN} samples, got {}",
                values.len()
            )));
        }
        Ok(GridFunction { x0, h, values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn x(&self, i: usize) -> f64 {
        self.x0 + self.h * i as f64
    }

    /// Fourth-order central second derivative at interior index `i` (`2 ≤ i ≤ len − 3`).
    pub fn second_derivative(&self, i: usize) -> T {
        let v = &self.values;
        let s = (v[i - 1] + v[i + 1]) * 16.0 - (v[i - 2] + v[i + 2]) - v[i] * 30.0;
        s * (1.0 / (12.0 * self.h * self.h))
    }
}
