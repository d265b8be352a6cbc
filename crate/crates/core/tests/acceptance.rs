//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails or exceeds its time budget.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use vintv::algorithms::exhibit::insertion_sort_buggy;
use vintv::algorithms::{
    avg_vector, dot_product, insertion_sort_in_place, merge_sorted, sum_interval_lr, sum_interval_rl,
    Algorithm, Outcome, RunInputs,
};
use vintv::golden::run_reference_checks;
use vintv::observe::Observer;
use vintv::oracles::{merge_oracle, naive_dot, sort_oracle};
use vintv::trace::{trace_algorithm, trace_interval, traced_run, EventKind};
use vintv::vector::vfold_observed;
use vintv::{make_vinterval, vfold_lr, vfold_rl, Direction, Interval, VectorData, VectorInterval};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check, Duration);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn v(xs: &[f64]) -> VectorData {
    VectorData::new(xs.to_vec())
}

fn close(got: vintv::Result<f64>, want: f64, tol: f64) -> bool {
    matches!(got, Ok(x) if (x - want).abs() <= tol)
}

fn reference_examples() -> Check {
    let mut n = 0;
    for (lo, hi, want) in [(3, 4, false), (30, 30, false), (5, 4, true)] {
        ensure!(Interval::new(lo, hi).is_empty() == want, "empty? {lo} {hi}");
        n += 1;
    }
    for (lo, hi, want) in [(10, 1, 0), (10, 10, 10), (-1, 1, 0)] {
        ensure!(sum_interval_rl(lo, hi) == want, "sum rl {lo} {hi}");
        ensure!(sum_interval_lr(lo, hi) == want, "sum lr {lo} {hi}");
        n += 2;
    }
    ensure!(close(avg_vector(&v(&[6., 7., 8., 9.])), 7.5, 0.01), "avg 6 7 8 9");
    ensure!(close(avg_vector(&v(&[1., 2., 3.])), 2.0, 0.01), "avg 1 2 3");
    ensure!(close(dot_product(&v(&[]), &v(&[])), 0.0, 0.01), "dot empty");
    ensure!(
        close(dot_product(&v(&[1., 2., 3.]), &v(&[1., 2., 3.])), 14.0, 0.01),
        "dot 1 2 3"
    );
    n += 4;
    ensure!(merge_sorted(&v(&[]), &v(&[])) == v(&[]), "merge empty");
    ensure!(
        merge_sorted(&v(&[10.]), &v(&[2.])) == v(&[2., 10.]),
        "merge 10 / 2"
    );
    ensure!(
        merge_sorted(&v(&[1., 4., 6.]), &v(&[2., 4., 5., 8., 9.])) == v(&[1., 2., 4., 4., 5., 6., 8., 9.]),
        "merge 1 4 6 / 2 4 5 8 9"
    );
    n += 3;
    let mut one = v(&[10.]);
    insertion_sort_in_place(&mut one);
    ensure!(one == v(&[10.]), "insort 10");
    let mut five = v(&[10., 3., 7., 17., 11.]);
    insertion_sort_in_place(&mut five);
    ensure!(five == v(&[3., 7., 10., 11., 17.]), "insort 10 3 7 17 11");
    n += 2;
    ensure!(n == 18, "ran {n} cases");

    let selftest = run_reference_checks();
    ensure!(
        selftest.len() == 18 && selftest.iter().all(|r| r.passed),
        "selftest suite disagrees"
    );
    Ok(())
}

fn bug_exhibit() -> Check {
    let mut buggy = v(&[10., 3., 7., 17., 11.]);
    let err = match insertion_sort_buggy(&mut buggy) {
        Ok(()) => return Err("buggy sort did not fail".into()),
        Err(e) => e,
    };
    let d = err
        .oob()
        .ok_or_else(|| format!("expected an out-of-bounds diagnostic, got {err}"))?;
    ensure!(d.attempted_index >= 5, "attempted index {}", d.attempted_index);
    ensure!(d.vector_length == 5, "vector length {}", d.vector_length);

    let mut fixed = v(&[10., 3., 7., 17., 11.]);
    let outcome = std::panic::catch_unwind(move || {
        insertion_sort_in_place(&mut fixed);
        fixed
    });
    ensure!(
        matches!(&outcome, Ok(s) if *s == v(&[3., 7., 10., 11., 17.])),
        "corrected sort failed"
    );
    Ok(())
}

/// Counts accesses outside the interval or the vector.
struct Bounds {
    n: usize,
    iv: Interval,
    violations: usize,
}

impl Observer for Bounds {
    fn access(&mut self, _vector: &'static str, _within: Interval, index: i64) {
        if !(0 <= index && (index as usize) < self.n && self.iv.contains(index)) {
            self.violations += 1;
        }
    }
}

fn index_safety() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5afe);
    let mut violations = 0usize;
    let mut visits = 0usize;
    let trials = 10_000;
    for t in 0..trials {
        let n = rng.random_range(0..=64usize);
        let vec: VectorData = (0..n).map(|_| rng.random_range(-1e3..1e3)).collect();
        let low = rng.random_range(0..=n as i64);
        let high = rng.random_range(-1..n as i64);
        let iv = make_vinterval(n, low, high).map_err(|e| e.to_string())?;
        let mut check = |_: f64, i: usize, seen: usize| {
            let i = i as i64;
            if !(0 <= i && i < n as i64 && low <= i && i <= high) {
                violations += 1;
            }
            seen + 1
        };
        let seen = if t % 2 == 0 {
            vfold_rl(&vec, iv, 0, &mut check)
        } else {
            vfold_lr(&vec, iv, 0, &mut check)
        }
        .map_err(|e| e.to_string())?;
        ensure!(seen == iv.len(), "visited {seen} of {} indices", iv.len());
        visits += seen;

        let mut obs = Bounds {
            n,
            iv: iv.interval(),
            violations: 0,
        };
        let dir = if t % 2 == 0 {
            Direction::RightToLeft
        } else {
            Direction::LeftToRight
        };
        vfold_observed(&vec, iv, dir, (), |_, _, ()| (), &mut obs, "V").map_err(|e| e.to_string())?;
        violations += obs.violations;
    }
    ensure!(
        violations == 0,
        "{violations} out-of-range indices in {visits} visits"
    );
    Ok(())
}

fn constructor_soundness() -> Check {
    for n in 0usize..=4 {
        let ni = n as i64;
        for low in -3..=ni + 3 {
            for high in -3..=ni + 3 {
                let valid = low >= 0 && high >= -1 && high < ni && low <= ni;
                let got = VectorInterval::new(n, low, high);
                ensure!(
                    got.is_ok() == valid,
                    "n={n} low={low} high={high}: accepted={}",
                    got.is_ok()
                );
            }
        }
    }
    Ok(())
}

fn oracle_equivalence() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0acc);
    // random length in 0..=max_len, integer entries in [-r, r]
    let ints = |rng: &mut ChaCha8Rng, max_len: usize, r: i32| -> VectorData {
        let len = rng.random_range(0..=max_len);
        (0..len).map(|_| rng.random_range(-r..=r) as f64).collect()
    };
    for t in 0..1000 {
        let a = sort_oracle(&ints(&mut rng, 50, 8));
        let b = sort_oracle(&ints(&mut rng, 50, 8));
        ensure!(merge_sorted(&a, &b) == merge_oracle(&a, &b), "merge trial {t}");

        let input = ints(&mut rng, 100, 30);
        let mut sorted = input.clone();
        insertion_sort_in_place(&mut sorted);
        ensure!(sorted == sort_oracle(&input), "insort trial {t}");

        let low = rng.random_range(-1000..=1000i64);
        let high = rng.random_range(-1000..=1000i64);
        let closed = if low <= high {
            (high + low) * (high - low + 1) / 2
        } else {
            0
        };
        ensure!(sum_interval_rl(low, high) == closed, "sum rl {low}..{high}");
        ensure!(sum_interval_lr(low, high) == closed, "sum lr {low}..{high}");

        let x = ints(&mut rng, 50, 100);
        let y: VectorData = x.iter().map(|_| rng.random_range(-100..=100) as f64).collect();
        ensure!(dot_product(&x, &y).ok() == naive_dot(&x, &y), "dot trial {t}");
    }
    Ok(())
}

fn trace_fidelity() -> Check {
    let chain = trace_interval(-1, 1, Direction::RightToLeft);
    let decomposed: Vec<i64> = chain
        .iter()
        .filter(|e| e.kind == EventKind::Decompose)
        .filter_map(|e| e.index)
        .collect();
    ensure!(decomposed == [1, 0, -1], "decompose indices {decomposed:?}");
    ensure!(
        chain.len() == 4 && chain[3].kind == EventKind::Stop,
        "chain must end in one stop"
    );
    ensure!(
        chain[0].detail == "[-1..1] = [[-1..0]..1]",
        "rendered {}",
        chain[0].detail
    );

    let mut runs: Vec<(Algorithm, RunInputs)> = Vec::new();
    for (lo, hi) in [(10, 1), (10, 10), (-1, 1)] {
        for d in [Direction::RightToLeft, Direction::LeftToRight] {
            runs.push((Algorithm::Sum, RunInputs::interval(lo, hi, d)));
        }
    }
    for xs in [&[6., 7., 8., 9.][..], &[1., 2., 3.]] {
        runs.push((Algorithm::Avg, RunInputs::vectors(vec![v(xs)])));
    }
    for xs in [&[][..], &[1., 2., 3.]] {
        runs.push((Algorithm::Dot, RunInputs::vectors(vec![v(xs), v(xs)])));
    }
    for (a, b) in [
        (&[][..], &[][..]),
        (&[10.], &[2.]),
        (&[1., 4., 6.], &[2., 4., 5., 8., 9.]),
    ] {
        runs.push((Algorithm::Merge, RunInputs::vectors(vec![v(a), v(b)])));
    }
    for xs in [&[10.][..], &[10., 3., 7., 17., 11.]] {
        runs.push((Algorithm::Insort, RunInputs::vectors(vec![v(xs)])));
        runs.push((Algorithm::InsortBuggy, RunInputs::vectors(vec![v(xs)])));
    }
    for (alg, inputs) in runs {
        let plain = alg.run(&inputs);
        let traced = traced_run(alg.name(), &inputs).map_err(|e| e.to_string())?;
        let same = match (&plain, &traced.outcome) {
            (Ok(a), Ok(b)) => a == b,
            (Err(a), Err(b)) => a.kind() == b.kind(),
            _ => false,
        };
        ensure!(same, "{alg:?}: traced {:?} vs plain {plain:?}", traced.outcome);
    }

    let buggy = trace_algorithm(
        Algorithm::InsortBuggy,
        &RunInputs::vectors(vec![v(&[10., 3., 7., 17., 11.])]),
    );
    let last = buggy.events.last().ok_or("no events")?;
    ensure!(
        last.kind == EventKind::Access && last.index.is_some_and(|i| i >= 5),
        "last buggy event {last:?}"
    );
    let sum =
        traced_run("sum", &RunInputs::interval(10, 10, Direction::RightToLeft)).map_err(|e| e.to_string())?;
    ensure!(sum.outcome == Ok(Outcome::Integer(10)), "sum 10..10");
    Ok(())
}

fn depth_robustness() -> Check {
    let input: VectorData = (0..10_000).rev().map(f64::from).collect();
    let want = sort_oracle(&input);
    // run on a small stack so recursion proportional to N would overflow
    let got = std::thread::Builder::new()
        .stack_size(256 * 1024)
        .spawn(move || {
            let mut v = input;
            insertion_sort_in_place(&mut v);
            v
        })
        .map_err(|e| e.to_string())?
        .join()
        .map_err(|_| "sort thread panicked".to_string())?;
    ensure!(got == want, "reverse-sorted input not sorted");
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        (
            "1 reference examples (18 cases)",
            reference_examples,
            Duration::from_secs(1),
        ),
        ("2 bug exhibit regression", bug_exhibit, Duration::from_secs(1)),
        (
            "3 index safety, 10^4 random pairs",
            index_safety,
            Duration::from_secs(10),
        ),
        (
            "4 constructor soundness, exhaustive",
            constructor_soundness,
            Duration::from_secs(1),
        ),
        (
            "5 oracle equivalence, 10^3 trials each",
            oracle_equivalence,
            Duration::from_secs(30),
        ),
        ("6 trace fidelity", trace_fidelity, Duration::from_secs(1)),
        (
            "7 depth robustness, reverse-sorted 10^4",
            depth_robustness,
            Duration::from_secs(60),
        ),
    ];

    let mut failed = 0;
    for (name, check, budget) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let verdict = match result {
            Ok(()) if elapsed <= budget => "PASS".to_string(),
            Ok(()) => format!("FAIL (took {elapsed:.2?}, budget {budget:?})"),
            Err(why) => format!("FAIL ({why})"),
        };
        if !verdict.starts_with("PASS") {
            failed += 1;
        }
        println!("[{verdict}] criterion {name} ({elapsed:.2?})");
    }
    println!("acceptance: {} passed, {failed} failed", 7 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
