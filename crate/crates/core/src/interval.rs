//! Plain integer intervals and their two structural decompositions.
//!
//! An interval `[low..high]` is either empty (`low > high`) or is built from
//! a smaller interval plus one index. Which index gets peeled off decides the
//! processing direction: peeling `high` walks right to left, peeling `low`
//! walks left to right. Both directions share the same carrier type.

use std::fmt;

/// Direction in which an interval is consumed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// Peel `high` first: `[low..high] = [[low..high-1]..high]`.
    RightToLeft,
    /// Peel `low` first: `[low..high] = [low..[low+1..high]]`.
    LeftToRight,
}

impl Direction {
    pub fn as_str(self) -> &'static str {
        match self {
            Direction::RightToLeft => "right_to_left",
            Direction::LeftToRight => "left_to_right",
        }
    }

    pub fn short(self) -> &'static str {
        match self {
            Direction::RightToLeft => "rl",
            Direction::LeftToRight => "lr",
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Two inclusive integer bounds. `low > high` encodes the empty interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Interval {
    pub low: i64,
    pub high: i64,
}

/// Result of peeling one index off an interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Decomposition {
    Empty,
    Step { index: i64, rest: Interval },
}

// Rest of a singleton sitting on the edge of the i64 range, where `high - 1`
// or `low + 1` is not representable.
const EDGE_EMPTY: Interval = Interval {
    low: i64::MAX,
    high: i64::MIN,
};

impl Interval {
    pub const fn new(low: i64, high: i64) -> Self {
        Interval { low, high }
    }

    pub const fn is_empty(&self) -> bool {
        self.low > self.high
    }

    /// Number of indices in the interval, `max(0, high - low + 1)`.
    ///
    /// Saturates at `u64::MAX` for the (otherwise unrepresentable) full i64 range.
    pub fn len(&self) -> u64 {
        if self.is_empty() {
            return 0;
        }
        let n = self.high as i128 - self.low as i128 + 1;
        u64::try_from(n).unwrap_or(u64::MAX)
    }

    pub const fn contains(&self, i: i64) -> bool {
        self.low <= i && i <= self.high
    }

    /// `[low..high] = [[low..high-1]..high]`
    pub fn split_high(&self) -> Decomposition {
        if self.is_empty() {
            return Decomposition::Empty;
        }
        let rest = match self.high.checked_sub(1) {
            Some(h) => Interval::new(self.low, h),
            None => EDGE_EMPTY,
        };
        Decomposition::Step {
            index: self.high,
            rest,
        }
    }

    /// `[low..high] = [low..[low+1..high]]`
    pub fn split_low(&self) -> Decomposition {
        if self.is_empty() {
            return Decomposition::Empty;
        }
        let rest = match self.low.checked_add(1) {
            Some(l) => Interval::new(l, self.high),
            None => EDGE_EMPTY,
        };
        Decomposition::Step {
            index: self.low,
            rest,
        }
    }

    pub fn split(&self, direction: Direction) -> Decomposition {
        match direction {
            Direction::RightToLeft => self.split_high(),
            Direction::LeftToRight => self.split_low(),
        }
    }

    /// Right-to-left template: `base` when empty, otherwise
    /// `combine(high, fold_rl([low..high-1]))`.
    ///
    /// Indices are peeled `high, high-1, ..., low`. Because each `combine`
    /// receives the already-folded rest, the calls themselves run innermost
    /// first, i.e. with ascending indices. Runs in constant stack space.
    pub fn fold_rl<A, F>(&self, base: A, mut combine: F) -> A
    where
        F: FnMut(i64, A) -> A,
    {
        if self.is_empty() {
            return base;
        }
        (self.low..=self.high).fold(base, |acc, i| combine(i, acc))
    }

    /// Left-to-right template: `base` when empty, otherwise
    /// `combine(low, fold_lr([low+1..high]))`.
    ///
    /// Peels `low, low+1, ..., high`; `combine` calls run with descending indices.
    pub fn fold_lr<A, F>(&self, base: A, mut combine: F) -> A
    where
        F: FnMut(i64, A) -> A,
    {
        if self.is_empty() {
            return base;
        }
        (self.low..=self.high).rev().fold(base, |acc, i| combine(i, acc))
    }

    pub fn fold<A, F>(&self, direction: Direction, base: A, combine: F) -> A
    where
        F: FnMut(i64, A) -> A,
    {
        match direction {
            Direction::RightToLeft => self.fold_rl(base, combine),
            Direction::LeftToRight => self.fold_lr(base, combine),
        }
    }

    /// The decomposition chain in peel order: one `(index, rest)` per step,
    /// ending when the rest is empty.
    pub fn peels(&self, direction: Direction) -> Peels {
        Peels {
            current: *self,
            direction,
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}..{}]", self.low, self.high)
    }
}

impl From<(i64, i64)> for Interval {
    fn from((low, high): (i64, i64)) -> Self {
        Interval::new(low, high)
    }
}

/// Iterator over successive decompositions of an interval.
#[derive(Debug, Clone)]
pub struct Peels {
    current: Interval,
    direction: Direction,
}

impl Peels {
    /// The interval still left to decompose.
    pub fn remaining(&self) -> Interval {
        self.current
    }
}

impl Iterator for Peels {
    /// `(interval before the peel, peeled index, rest)`
    type Item = (Interval, i64, Interval);

    fn next(&mut self) -> Option<Self::Item> {
        match self.current.split(self.direction) {
            Decomposition::Empty => None,
            Decomposition::Step { index, rest } => {
                let before = self.current;
                self.current = rest;
                Some((before, index, rest))
            }
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = usize::try_from(self.current.len()).unwrap_or(usize::MAX);
        (n, Some(n))
    }
}
