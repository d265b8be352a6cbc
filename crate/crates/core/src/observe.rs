//! Hooks through which folds and algorithms report what they do.
//!
//! Every method has an empty default and `()` implements the trait, so the
//! untraced code paths compile down to nothing. [`crate::trace::Recorder`]
//! turns the callbacks into [`crate::trace::TraceEvent`]s.

use crate::interval::{Direction, Interval};

/// A change made to a vector element.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Mutation {
    Set { value: f64 },
    Swap { with: i64 },
}

pub trait Observer {
    /// One peel of an interval during a plain decomposition.
    fn decompose(&mut self, _direction: Direction, _before: Interval, _index: i64) {}

    /// One index handed to a fold or recursive step.
    fn visit(&mut self, _direction: Direction, _before: Interval, _index: i64) {}

    /// A recursion reached its end. `reason` is short human text.
    fn stop(&mut self, _direction: Option<Direction>, _at: Interval, _reason: &str) {}

    /// An element read, reported before the (checked) read is attempted.
    fn access(&mut self, _vector: &'static str, _within: Interval, _index: i64) {}

    /// An element write, reported before it is attempted.
    fn mutate(&mut self, _vector: &'static str, _within: Interval, _index: i64, _change: Mutation) {}
}

impl Observer for () {}

impl<O: Observer + ?Sized> Observer for &mut O {
    fn decompose(&mut self, direction: Direction, before: Interval, index: i64) {
        (**self).decompose(direction, before, index)
    }

    fn visit(&mut self, direction: Direction, before: Interval, index: i64) {
        (**self).visit(direction, before, index)
    }

    fn stop(&mut self, direction: Option<Direction>, at: Interval, reason: &str) {
        (**self).stop(direction, at, reason)
    }

    fn access(&mut self, vector: &'static str, within: Interval, index: i64) {
        (**self).access(vector, within, index)
    }

    fn mutate(&mut self, vector: &'static str, within: Interval, index: i64, change: Mutation) {
        (**self).mutate(vector, within, index, change)
    }
}
