//! Numeric scalars and weight vectors.
//!
//! Every index is computed generically over a [`Scalar`]. Integer inputs use
//! `i128` accumulators so results are exact; fractional inputs fall back to
//! `f64`. Sums are always folded in ascending index order.

use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::ops::{Add, Mul, Sub};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub trait Scalar:
    Copy
    + Debug
    + Display
    + PartialEq
    + PartialOrd
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Sum
    + Send
    + Sync
    + Serialize
    + 'static
{
    const ZERO: Self;
    const ONE: Self;
    /// Whether values of this type are exact (integer mode).
    const EXACT: bool;

    fn from_count(n: u64) -> Self;

    /// Non-negative and finite.
    fn is_valid_weight(self) -> bool;

    fn to_f64(self) -> f64;
}

impl Scalar for i128 {
    const ZERO: Self = 0;
    const ONE: Self = 1;
    const EXACT: bool = true;

    fn from_count(n: u64) -> Self {
        n as i128
    }

    fn is_valid_weight(self) -> bool {
        self >= 0
    }

    fn to_f64(self) -> f64 {
        self as f64
    }
}

impl Scalar for f64 {
    const ZERO: Self = 0.0;
    const ONE: Self = 1.0;
    const EXACT: bool = false;

    fn from_count(n: u64) -> Self {
        n as f64
    }

    fn is_valid_weight(self) -> bool {
        self.is_finite() && self >= 0.0
    }

    fn to_f64(self) -> f64 {
        self
    }
}

/// Ordered sum, so float results do not depend on how the work was split.
pub(crate) fn ordered_sum<T: Scalar>(parts: impl IntoIterator<Item = T>) -> T {
    parts.into_iter().fold(T::ZERO, |acc, x| acc + x)
}

fn check_weights<T: Scalar>(kind: &'static str, values: &[T], expected: usize) -> Result<()> {
    if values.len() != expected {
        return Err(Error::WeightLength {
            kind,
            expected,
            found: values.len(),
        });
    }
    if let Some(index) = values.iter().position(|w| !w.is_valid_weight()) {
        return Err(Error::InvalidWeight { kind, index });
    }
    Ok(())
}

/// One non-negative weight per vertex.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct VertexWeights<T>(Vec<T>);

impl<T: Scalar> VertexWeights<T> {
    pub fn new(graph: &Graph, values: Vec<T>) -> Result<Self> {
        Self::with_len(graph.vertex_count(), values)
    }

    pub fn with_len(len: usize, values: Vec<T>) -> Result<Self> {
        check_weights("vertex", &values, len)?;
        Ok(Self(values))
    }

    pub fn uniform(len: usize, value: T) -> Self {
        assert!(value.is_valid_weight(), "weights must be non-negative");
        Self(vec![value; len])
    }

    pub fn unit(len: usize) -> Self {
        Self::uniform(len, T::ONE)
    }

    pub fn as_slice(&self) -> &[T] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> T {
        ordered_sum(self.0.iter().copied())
    }
}

impl<T> std::ops::Index<usize> for VertexWeights<T> {
    type Output = T;

    fn index(&self, i: usize) -> &T {
        &self.0[i]
    }
}

/// One non-negative weight per edge, aligned with edge indices.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct EdgeWeights<T>(Vec<T>);

impl<T: Scalar> EdgeWeights<T> {
    pub fn new(graph: &Graph, values: Vec<T>) -> Result<Self> {
        Self::with_len(graph.edge_count(), values)
    }

    pub fn with_len(len: usize, values: Vec<T>) -> Result<Self> {
        check_weights("edge", &values, len)?;
        Ok(Self(values))
    }

    pub fn uniform(len: usize, value: T) -> Self {
        assert!(value.is_valid_weight(), "weights must be non-negative");
        Self(vec![value; len])
    }

    pub fn unit(len: usize) -> Self {
        Self::uniform(len, T::ONE)
    }

    pub fn as_slice(&self) -> &[T] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> T {
        ordered_sum(self.0.iter().copied())
    }
}

impl<T> std::ops::Index<usize> for EdgeWeights<T> {
    type Output = T;

    fn index(&self, i: usize) -> &T {
        &self.0[i]
    }
}
