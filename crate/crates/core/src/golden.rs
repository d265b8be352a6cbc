//! The reference examples every build must reproduce, runnable from the CLI
//! `selftest` subcommand.

use crate::algorithms::{
    avg_vector, dot_product, insertion_sort_in_place, merge_sorted, sum_interval_lr, sum_interval_rl,
};
use crate::interval::Interval;
use crate::vector::VectorData;

#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub label: String,
    pub passed: bool,
    /// What was actually produced.
    pub got: String,
}

fn show(v: &VectorData) -> String {
    crate::cli::format_vector(v)
}

fn exact<T: PartialEq + std::fmt::Debug>(label: String, got: T, want: T) -> CheckResult {
    CheckResult {
        label,
        passed: got == want,
        got: format!("{got:?}"),
    }
}

fn within(label: String, got: crate::Result<f64>, want: f64, tol: f64) -> CheckResult {
    CheckResult {
        label,
        passed: matches!(got, Ok(x) if (x - want).abs() <= tol),
        got: format!("{got:?}"),
    }
}

fn vector_check(label: String, got: VectorData, want: &[f64]) -> CheckResult {
    CheckResult {
        passed: got.as_slice() == want,
        got: show(&got),
        label,
    }
}

pub fn run_reference_checks() -> Vec<CheckResult> {
    let mut out = Vec::new();

    for (low, high, want) in [(3, 4, false), (30, 30, false), (5, 4, true)] {
        out.push(exact(
            format!("empty? {low} {high} = {want}"),
            Interval::new(low, high).is_empty(),
            want,
        ));
    }
    for (low, high, want) in [(10, 1, 0), (10, 10, 10), (-1, 1, 0)] {
        out.push(exact(
            format!("sum rl {low} {high} = {want}"),
            sum_interval_rl(low, high),
            want,
        ));
    }
    for (low, high, want) in [(10, 1, 0), (10, 10, 10), (-1, 1, 0)] {
        out.push(exact(
            format!("sum lr {low} {high} = {want}"),
            sum_interval_lr(low, high),
            want,
        ));
    }

    for (input, want) in [(vec![6., 7., 8., 9.], 7.5), (vec![1., 2., 3.], 2.0)] {
        let v = VectorData::new(input);
        out.push(within(
            format!("avg {} ~ {want}", show(&v)),
            avg_vector(&v),
            want,
            0.01,
        ));
    }

    for (input, want) in [(vec![], 0.0), (vec![1., 2., 3.], 14.0)] {
        let v = VectorData::new(input);
        out.push(within(
            format!("dot {0}.{0} ~ {want}", show(&v)),
            dot_product(&v, &v),
            want,
            0.01,
        ));
    }

    let merges: [(&[f64], &[f64], &[f64]); 3] = [
        (&[], &[], &[]),
        (&[10.], &[2.], &[2., 10.]),
        (
            &[1., 4., 6.],
            &[2., 4., 5., 8., 9.],
            &[1., 2., 4., 4., 5., 6., 8., 9.],
        ),
    ];
    for (a, b, want) in merges {
        let (a, b) = (VectorData::new(a.to_vec()), VectorData::new(b.to_vec()));
        let label = format!("merge {} {}", show(&a), show(&b));
        out.push(vector_check(label, merge_sorted(&a, &b), want));
    }

    let sorts: [(&[f64], &[f64]); 2] = [
        (&[10.], &[10.]),
        (&[10., 3., 7., 17., 11.], &[3., 7., 10., 11., 17.]),
    ];
    for (input, want) in sorts {
        let mut v = VectorData::new(input.to_vec());
        let label = format!("insort {}", show(&v));
        insertion_sort_in_place(&mut v);
        out.push(vector_check(label, v, want));
    }

    out
}
