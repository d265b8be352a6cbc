//! Structured traces of decompositions and algorithm runs.
//!
//! A [`Recorder`] is an [`Observer`] that numbers every callback it receives.
//! Decompose events render in bracket notation, so the chain for `[-1..1]`
//! peeled right to left reads
//!
//! ```text
//! [-1..1] = [[-1..0]..1]
//! [-1..0] = [[-1..-1]..0]
//! [-1..-1] = [[-1..-2]..-1]
//! [-1..-2] is empty
//! ```

use std::fmt;

use serde_json::{json, Value};

use crate::algorithms::{Algorithm, Outcome, RunInputs, UnknownAlgorithm};
use crate::error::Error;
use crate::interval::{Decomposition, Direction, Interval};
use crate::observe::{Mutation, Observer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EventKind {
    Decompose,
    Visit,
    Access,
    Mutate,
    Stop,
}

impl EventKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EventKind::Decompose => "decompose",
            EventKind::Visit => "visit",
            EventKind::Access => "access",
            EventKind::Mutate => "mutate",
            EventKind::Stop => "stop",
        }
    }
}

impl fmt::Display for EventKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TraceEvent {
    /// 0-based, consecutive within one trace.
    pub step: usize,
    pub kind: EventKind,
    /// `None` for element accesses and mutations.
    pub direction: Option<Direction>,
    pub interval_before: Interval,
    pub index: Option<i64>,
    pub detail: String,
}

impl TraceEvent {
    pub fn direction_str(&self) -> &'static str {
        self.direction.map_or("none", Direction::as_str)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "record": "event",
            "step": self.step,
            "kind": self.kind.as_str(),
            "direction": self.direction_str(),
            "low": self.interval_before.low,
            "high": self.interval_before.high,
            "index": self.index,
            "detail": self.detail,
        })
    }
}

impl fmt::Display for TraceEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:>4} {:<9} {}", self.step, self.kind, self.detail)
    }
}

/// Collects observer callbacks into numbered [`TraceEvent`]s.
#[derive(Debug, Default)]
pub struct Recorder {
    events: Vec<TraceEvent>,
}

impl Recorder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn events(&self) -> &[TraceEvent] {
        &self.events
    }

    pub fn into_events(self) -> Vec<TraceEvent> {
        self.events
    }

    fn push(
        &mut self,
        kind: EventKind,
        direction: Option<Direction>,
        interval_before: Interval,
        index: Option<i64>,
        detail: String,
    ) {
        let step = self.events.len();
        self.events.push(TraceEvent {
            step,
            kind,
            direction,
            interval_before,
            index,
            detail,
        });
    }
}

/// Bracket form of one peel, e.g. `[-1..1] = [[-1..0]..1]`.
pub fn render_peel(direction: Direction, before: Interval) -> String {
    match before.split(direction) {
        Decomposition::Empty => format!("{before} is empty"),
        Decomposition::Step { index, rest } => match direction {
            Direction::RightToLeft => format!("{before} = [{rest}..{index}]"),
            Direction::LeftToRight => format!("{before} = [{index}..{rest}]"),
        },
    }
}

impl Observer for Recorder {
    fn decompose(&mut self, direction: Direction, before: Interval, index: i64) {
        let detail = render_peel(direction, before);
        self.push(EventKind::Decompose, Some(direction), before, Some(index), detail);
    }

    fn visit(&mut self, direction: Direction, before: Interval, index: i64) {
        let detail = format!("{index} of {before} ({})", direction.short());
        self.push(EventKind::Visit, Some(direction), before, Some(index), detail);
    }

    fn stop(&mut self, direction: Option<Direction>, at: Interval, reason: &str) {
        let detail = if reason == "empty" {
            format!("{at} is empty")
        } else {
            format!("{at}: {reason}")
        };
        self.push(EventKind::Stop, direction, at, None, detail);
    }

    fn access(&mut self, vector: &'static str, within: Interval, index: i64) {
        self.push(
            EventKind::Access,
            None,
            within,
            Some(index),
            format!("{vector}[{index}]"),
        );
    }

    fn mutate(&mut self, vector: &'static str, within: Interval, index: i64, change: Mutation) {
        let detail = match change {
            Mutation::Set { value } => format!("{vector}[{index}] := {value}"),
            Mutation::Swap { with } => format!("swap {vector}[{index}] {vector}[{with}]"),
        };
        self.push(EventKind::Mutate, None, within, Some(index), detail);
    }
}

/// The full decomposition chain of `[low..high]`: one decompose event per
/// peel, then a stop on the empty rest.
pub fn trace_interval(low: i64, high: i64, direction: Direction) -> Vec<TraceEvent> {
    let mut rec = Recorder::new();
    let mut peels = Interval::new(low, high).peels(direction);
    for (before, index, _) in peels.by_ref() {
        rec.decompose(direction, before, index);
    }
    rec.stop(Some(direction), peels.remaining(), "empty");
    rec.into_events()
}

#[derive(Debug, Clone, PartialEq)]
pub struct TracedRun {
    pub outcome: Result<Outcome, Error>,
    /// On error, the events up to and including the failing access.
    pub events: Vec<TraceEvent>,
}

pub fn traced_run(algorithm: &str, inputs: &RunInputs) -> Result<TracedRun, UnknownAlgorithm> {
    let algorithm: Algorithm = algorithm.parse()?;
    Ok(trace_algorithm(algorithm, inputs))
}

pub fn trace_algorithm(algorithm: Algorithm, inputs: &RunInputs) -> TracedRun {
    let mut rec = Recorder::new();
    let outcome = algorithm.run_observed(inputs, &mut rec);
    TracedRun {
        outcome,
        events: rec.into_events(),
    }
}
