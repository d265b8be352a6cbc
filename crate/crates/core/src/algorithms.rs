//! Algorithms written as specialisations of the interval and vector-interval
//! templates: interval sums, average, dot product, sorted merge and in-place
//! insertion sort.
//!
//! Each algorithm has an `*_observed` form taking an [`Observer`]; the plain
//! form passes `()`. The recursive templates are unrolled into loops so deep
//! inputs never grow the call stack, but the order of effects is the order
//! of the recursive definitions.

use std::cmp::Ordering;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::interval::{Direction, Interval};
use crate::observe::{Mutation, Observer};
use crate::vector::{full_interval, vfold_observed, VectorData, VectorInterval};

/// Sum of the integers in `[low..high]`, peeling `high` first.
pub fn sum_interval_rl(low: i64, high: i64) -> i64 {
    Interval::new(low, high).fold_rl(0, |i, acc| i + acc)
}

/// Sum of the integers in `[low..high]`, peeling `low` first.
pub fn sum_interval_lr(low: i64, high: i64) -> i64 {
    Interval::new(low, high).fold_lr(0, |i, acc| i + acc)
}

pub fn sum_interval_observed<O: Observer + ?Sized>(iv: Interval, direction: Direction, obs: &mut O) -> i64 {
    let mut peels = iv.peels(direction);
    for (before, i, _) in peels.by_ref() {
        obs.visit(direction, before, i);
    }
    obs.stop(Some(direction), peels.remaining(), "empty");
    iv.fold(direction, 0, |i, acc| i + acc)
}

/// Average of a non-empty vector.
pub fn avg_vector(vec: &VectorData) -> Result<f64> {
    avg_vector_observed(vec, &mut ())
}

pub fn avg_vector_observed<O: Observer + ?Sized>(vec: &VectorData, obs: &mut O) -> Result<f64> {
    if vec.is_empty() {
        return Err(Error::EmptyVector { operation: "avg" });
    }
    let sum = vfold_observed(
        vec,
        full_interval(vec),
        Direction::RightToLeft,
        0.0,
        |x, _, acc| x + acc,
        obs,
        "V",
    )?;
    Ok(sum / vec.len() as f64)
}

/// Dot product of two equal-length vectors, processed in step over the
/// single interval `[0..N-1]`, left to right.
pub fn dot_product(v1: &VectorData, v2: &VectorData) -> Result<f64> {
    dot_product_observed(v1, v2, &mut ())
}

pub fn dot_product_observed<O: Observer + ?Sized>(
    v1: &VectorData,
    v2: &VectorData,
    obs: &mut O,
) -> Result<f64> {
    if v1.len() != v2.len() {
        return Err(Error::LengthMismatch {
            operation: "dot",
            left: v1.len(),
            right: v2.len(),
        });
    }
    let iv = full_interval(v1);

    let mut cursor = iv;
    while let Some((i, rest)) = cursor.split_low() {
        let before = cursor.interval();
        obs.visit(Direction::LeftToRight, before, i as i64);
        obs.access("V1", before, i as i64);
        obs.access("V2", before, i as i64);
        cursor = rest;
    }
    obs.stop(Some(Direction::LeftToRight), cursor.interval(), "empty");

    let other = v2.as_slice();
    vfold_observed(
        v1,
        iv,
        Direction::LeftToRight,
        0.0,
        |x, i, acc| x * other[i] + acc,
        &mut (),
        "V1",
    )
}

/// Merges two vectors sorted in non-decreasing order.
///
/// Three left-to-right intervals (one per input, one for the result) are
/// consumed out of step. On equal heads the element of `v2` goes first.
/// Unsorted inputs still terminate after `|v1| + |v2|` steps.
pub fn merge_sorted(v1: &VectorData, v2: &VectorData) -> VectorData {
    merge_sorted_observed(v1, v2, &mut ()).expect("merge intervals only hold valid indices")
}

pub fn merge_sorted_observed<O: Observer + ?Sized>(
    v1: &VectorData,
    v2: &VectorData,
    obs: &mut O,
) -> Result<VectorData> {
    const LR: Direction = Direction::LeftToRight;

    // `None` marks a slot not yet written.
    let mut res: VectorData<Option<f64>> = VectorData::filled(v1.len() + v2.len(), None);
    let mut iv1 = full_interval(v1);
    let mut iv2 = full_interval(v2);
    let mut ivres = full_interval(&res);

    loop {
        let from_second = match (iv1.is_empty(), iv2.is_empty()) {
            (true, true) => {
                obs.stop(Some(LR), ivres.interval(), "both input intervals empty");
                break;
            }
            (true, false) => true,
            (false, true) => false,
            (false, false) => {
                let a = read_low(obs, "V1", v1, iv1)?;
                let b = read_low(obs, "V2", v2, iv2)?;
                // only a strictly smaller head comes from V1
                a.partial_cmp(&b) != Some(Ordering::Less)
            }
        };
        let (name, vec, iv) = if from_second {
            ("V2", v2, &mut iv2)
        } else {
            ("V1", v1, &mut iv1)
        };
        let x = read_low(obs, name, vec, *iv)?;
        place(obs, &mut res, &mut ivres, x)?;
        *iv = rest_low(*iv);
    }

    let merged = res
        .into_vec()
        .into_iter()
        .collect::<Option<Vec<f64>>>()
        .expect("every result slot is written exactly once");
    Ok(VectorData::new(merged))
}

fn read_low<O: Observer + ?Sized>(
    obs: &mut O,
    name: &'static str,
    vec: &VectorData,
    iv: VectorInterval,
) -> Result<f64> {
    obs.access(name, iv.interval(), iv.low());
    Ok(vec.get(iv.low())?)
}

fn rest_low(iv: VectorInterval) -> VectorInterval {
    iv.split_low().map_or(iv, |(_, rest)| rest)
}

fn place<O: Observer + ?Sized>(
    obs: &mut O,
    res: &mut VectorData<Option<f64>>,
    ivres: &mut VectorInterval,
    x: f64,
) -> Result<()> {
    let before = ivres.interval();
    obs.visit(Direction::LeftToRight, before, ivres.low());
    obs.mutate("res", before, ivres.low(), Mutation::Set { value: x });
    res.set(ivres.low(), Some(x))?;
    *ivres = rest_low(*ivres);
    Ok(())
}

/// Moves `vec[low]` right by adjacent swaps until it is not greater than its
/// right neighbour or `[low..high]` is exhausted.
///
/// `[low..high]` must be a valid vector interval and `high + 1` a valid
/// index. If the second condition is broken the read of `vec[low + 1]`
/// reports an [`crate::OobDiagnostic`].
pub fn insert_step(vec: &mut VectorData, low: i64, high: i64) -> Result<()> {
    let iv = VectorInterval::new(vec.len(), low, high)?;
    insert_observed(vec, iv, &mut ())
}

pub fn insert_observed<O: Observer + ?Sized>(
    vec: &mut VectorData,
    iv: VectorInterval,
    obs: &mut O,
) -> Result<()> {
    const LR: Direction = Direction::LeftToRight;
    if iv.vec_len() != vec.len() {
        return Err(Error::IntervalVectorMismatch {
            interval_len: iv.vec_len(),
            vector_len: vec.len(),
        });
    }
    let mut cursor = iv;
    while let Some((i, rest)) = cursor.split_low() {
        let before = cursor.interval();
        let (i, next) = (i as i64, i as i64 + 1);
        obs.visit(LR, before, i);
        obs.access("V", before, i);
        let a = vec.get(i)?;
        obs.access("V", before, next);
        let b = vec.get(next)?;
        if a <= b {
            obs.stop(Some(LR), before, "in order");
            return Ok(());
        }
        obs.mutate("V", before, i, Mutation::Swap { with: next });
        vec.swap(i, next)?;
        cursor = rest;
    }
    obs.stop(Some(LR), cursor.interval(), "empty");
    Ok(())
}

/// Sorts `vec` in non-decreasing order by insertion.
///
/// The full interval is consumed left to right: the rest `[low+1..high]` is
/// sorted first, then `vec[low]` is inserted using `[low..high-1]`, which
/// keeps every `vec[low + 1]` read in bounds.
pub fn insertion_sort_in_place(vec: &mut VectorData) {
    sort_observed(vec, InsertBound::Shrunk, &mut ()).expect("insertion sort only reads valid indices")
}

pub fn insertion_sort_observed<O: Observer + ?Sized>(vec: &mut VectorData, obs: &mut O) -> Result<()> {
    sort_observed(vec, InsertBound::Shrunk, obs)
}

#[derive(Clone, Copy)]
enum InsertBound {
    /// `insert(low, high - 1)`
    Shrunk,
    /// `insert(low, high)`; reads one past the end
    Unshrunk,
}

fn sort_observed<O: Observer + ?Sized>(vec: &mut VectorData, bound: InsertBound, obs: &mut O) -> Result<()> {
    const LR: Direction = Direction::LeftToRight;
    let iv = full_interval(vec);

    // Descend: sort(low, high) first recurses on sort(low + 1, high).
    let mut cursor = iv;
    while let Some((i, rest)) = cursor.split_low() {
        obs.visit(LR, cursor.interval(), i as i64);
        cursor = rest;
    }
    obs.stop(Some(LR), cursor.interval(), "empty");

    // Unwind: each level then inserts its low element. `high` is the same
    // at every level.
    let high = iv.high();
    let insert_high = match bound {
        InsertBound::Shrunk => high - 1,
        InsertBound::Unshrunk => high,
    };
    for low in (iv.low()..=high).rev() {
        let seg = VectorInterval::new(vec.len(), low, insert_high)?;
        insert_observed(vec, seg, obs)?;
    }
    Ok(())
}

/// Deliberately broken code kept so the out-of-bounds diagnostics have a
/// permanent regression case. Not part of the safe surface.
pub mod exhibit {
    use super::*;

    /// Insertion sort that hands `[low..high]` instead of `[low..high-1]`
    /// to the insertion step. On any non-empty vector the innermost
    /// insertion reads `vec[N]` and fails with an [`crate::OobDiagnostic`];
    /// the vector is left as-is at that point.
    pub fn insertion_sort_buggy(vec: &mut VectorData) -> Result<()> {
        sort_observed(vec, InsertBound::Unshrunk, &mut ())
    }

    pub fn insertion_sort_buggy_observed<O: Observer + ?Sized>(
        vec: &mut VectorData,
        obs: &mut O,
    ) -> Result<()> {
        sort_observed(vec, InsertBound::Unshrunk, obs)
    }
}

/// Algorithms addressable by name, for the tracer and the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Sum,
    Avg,
    Dot,
    Merge,
    Insort,
    InsortBuggy,
}

impl Algorithm {
    pub const ALL: [Algorithm; 6] = [
        Algorithm::Sum,
        Algorithm::Avg,
        Algorithm::Dot,
        Algorithm::Merge,
        Algorithm::Insort,
        Algorithm::InsortBuggy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Sum => "sum",
            Algorithm::Avg => "avg",
            Algorithm::Dot => "dot",
            Algorithm::Merge => "merge",
            Algorithm::Insort => "insort",
            Algorithm::InsortBuggy => "insort_buggy",
        }
    }

    /// Runs the algorithm, reporting to `obs`.
    pub fn run_observed<O: Observer + ?Sized>(self, inputs: &RunInputs, obs: &mut O) -> Result<Outcome> {
        let need = |expected| Error::MissingInput {
            algorithm: self.name(),
            expected,
        };
        let nth = |k: usize| inputs.vectors.get(k);
        match self {
            Algorithm::Sum => {
                let (low, high) = inputs.bounds.ok_or_else(|| need("interval bounds"))?;
                let total = sum_interval_observed(Interval::new(low, high), inputs.direction, obs);
                Ok(Outcome::Integer(total))
            }
            Algorithm::Avg => {
                let v = nth(0).ok_or_else(|| need("one vector"))?;
                avg_vector_observed(v, obs).map(Outcome::Number)
            }
            Algorithm::Dot => {
                let (a, b) = nth(0).zip(nth(1)).ok_or_else(|| need("two vectors"))?;
                dot_product_observed(a, b, obs).map(Outcome::Number)
            }
            Algorithm::Merge => {
                let (a, b) = nth(0).zip(nth(1)).ok_or_else(|| need("two vectors"))?;
                merge_sorted_observed(a, b, obs).map(Outcome::Vector)
            }
            Algorithm::Insort | Algorithm::InsortBuggy => {
                let mut v = nth(0).ok_or_else(|| need("one vector"))?.clone();
                let bound = if self == Algorithm::Insort {
                    InsertBound::Shrunk
                } else {
                    InsertBound::Unshrunk
                };
                sort_observed(&mut v, bound, obs)?;
                Ok(Outcome::Vector(v))
            }
        }
    }

    pub fn run(self, inputs: &RunInputs) -> Result<Outcome> {
        self.run_observed(inputs, &mut ())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownAlgorithm(pub String);

impl std::fmt::Display for UnknownAlgorithm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "unknown algorithm `{}` (expected one of sum, avg, dot, merge, insort, insort_buggy)",
            self.0
        )
    }
}

impl std::error::Error for UnknownAlgorithm {}

impl FromStr for Algorithm {
    type Err = UnknownAlgorithm;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let norm = s.replace('-', "_");
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == norm || (norm == "sum_interval" && *a == Algorithm::Sum))
            .ok_or_else(|| UnknownAlgorithm(s.to_string()))
    }
}

/// Inputs for a named run. Algorithms ignore what they do not use.
#[derive(Debug, Clone, PartialEq)]
pub struct RunInputs {
    pub vectors: Vec<VectorData>,
    pub bounds: Option<(i64, i64)>,
    pub direction: Direction,
}

impl RunInputs {
    pub fn vectors(vectors: Vec<VectorData>) -> Self {
        RunInputs {
            vectors,
            bounds: None,
            direction: Direction::RightToLeft,
        }
    }

    pub fn interval(low: i64, high: i64, direction: Direction) -> Self {
        RunInputs {
            vectors: Vec::new(),
            bounds: Some((low, high)),
            direction,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    Integer(i64),
    Number(f64),
    Vector(VectorData),
}
