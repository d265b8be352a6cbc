//! Vectors, intervals validated against a vector length, and vector folds.
//!
//! A [`VectorInterval`] for a vector of length `N` satisfies `0 <= low <= N`
//! and `-1 <= high <= N - 1`. Whenever it is non-empty every index in it is a
//! valid index, so folds driven by one never touch memory outside the vector.
//! Raw element access ([`VectorData::get`], [`VectorData::set`],
//! [`VectorData::swap`]) is checked at call time and reports an
//! [`OobDiagnostic`] instead.

use crate::error::{Bound, Error, IntervalError, OobDiagnostic};
use crate::interval::{Direction, Interval};
use crate::observe::Observer;

/// A fixed-length mutable sequence. The shipped element type is `f64`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct VectorData<T = f64> {
    elements: Vec<T>,
}

impl<T> VectorData<T> {
    pub fn new(elements: Vec<T>) -> Self {
        VectorData { elements }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn as_slice(&self) -> &[T] {
        &self.elements
    }

    pub fn into_vec(self) -> Vec<T> {
        self.elements
    }

    pub fn iter(&self) -> std::slice::Iter<'_, T> {
        self.elements.iter()
    }

    fn check(&self, i: i64, operation: &'static str) -> Result<usize, OobDiagnostic> {
        match usize::try_from(i) {
            Ok(u) if u < self.elements.len() => Ok(u),
            _ => Err(OobDiagnostic {
                attempted_index: i,
                vector_length: self.elements.len(),
                operation,
            }),
        }
    }

    pub fn set(&mut self, i: i64, x: T) -> Result<(), OobDiagnostic> {
        let u = self.check(i, "set")?;
        self.elements[u] = x;
        Ok(())
    }

    /// Exchanges elements `i` and `j`. Both indices are checked before
    /// anything moves, so a failed swap leaves the vector untouched.
    pub fn swap(&mut self, i: i64, j: i64) -> Result<(), OobDiagnostic> {
        let a = self.check(i, "swap")?;
        let b = self.check(j, "swap")?;
        self.elements.swap(a, b);
        Ok(())
    }
}

impl<T: Copy> VectorData<T> {
    pub fn get(&self, i: i64) -> Result<T, OobDiagnostic> {
        let u = self.check(i, "get")?;
        Ok(self.elements[u])
    }

    /// A vector of `len` copies of `fill`.
    pub fn filled(len: usize, fill: T) -> Self {
        VectorData {
            elements: vec![fill; len],
        }
    }
}

impl<T> From<Vec<T>> for VectorData<T> {
    fn from(elements: Vec<T>) -> Self {
        VectorData { elements }
    }
}

impl<T, const N: usize> From<[T; N]> for VectorData<T> {
    fn from(elements: [T; N]) -> Self {
        VectorData {
            elements: elements.into(),
        }
    }
}

impl<T> FromIterator<T> for VectorData<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        VectorData {
            elements: iter.into_iter().collect(),
        }
    }
}

impl<'a, T> IntoIterator for &'a VectorData<T> {
    type Item = &'a T;
    type IntoIter = std::slice::Iter<'a, T>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

/// An interval whose non-empty form only contains valid indices into a
/// vector of length `vec_len`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VectorInterval {
    low: i64,
    high: i64,
    vec_len: usize,
}

impl VectorInterval {
    pub fn new(vec_len: usize, low: i64, high: i64) -> Result<Self, IntervalError> {
        let err = |bound, constraint| IntervalError {
            low,
            high,
            vec_len,
            bound,
            constraint,
        };
        let n = i64::try_from(vec_len).map_err(|_| err(Bound::High, "vector length fits in i64"))?;
        if low < 0 {
            return Err(err(Bound::Low, "low >= 0"));
        }
        if low > n {
            return Err(err(Bound::Low, "low <= N"));
        }
        if high < -1 {
            return Err(err(Bound::High, "high >= -1"));
        }
        if high > n - 1 {
            return Err(err(Bound::High, "high <= N - 1"));
        }
        Ok(VectorInterval { low, high, vec_len })
    }

    /// `[0..N-1]` for a vector of length `N`; `[0..-1]` when `N = 0`.
    pub fn full(vec_len: usize) -> Self {
        VectorInterval {
            low: 0,
            high: vec_len as i64 - 1,
            vec_len,
        }
    }

    pub fn low(&self) -> i64 {
        self.low
    }

    pub fn high(&self) -> i64 {
        self.high
    }

    pub fn vec_len(&self) -> usize {
        self.vec_len
    }

    pub fn interval(&self) -> Interval {
        Interval::new(self.low, self.high)
    }

    pub fn is_empty(&self) -> bool {
        self.low > self.high
    }

    pub fn len(&self) -> usize {
        if self.is_empty() {
            0
        } else {
            (self.high - self.low + 1) as usize
        }
    }

    /// Peels `high`. The rest is again a valid vector interval.
    pub fn split_high(&self) -> Option<(usize, VectorInterval)> {
        if self.is_empty() {
            return None;
        }
        let rest = VectorInterval {
            high: self.high - 1,
            ..*self
        };
        Some((self.high as usize, rest))
    }

    /// Peels `low`. The rest is again a valid vector interval.
    pub fn split_low(&self) -> Option<(usize, VectorInterval)> {
        if self.is_empty() {
            return None;
        }
        let rest = VectorInterval {
            low: self.low + 1,
            ..*self
        };
        Some((self.low as usize, rest))
    }

    pub fn split(&self, direction: Direction) -> Option<(usize, VectorInterval)> {
        match direction {
            Direction::RightToLeft => self.split_high(),
            Direction::LeftToRight => self.split_low(),
        }
    }

    fn ensure_fits<T>(&self, vec: &VectorData<T>) -> Result<(), Error> {
        if self.vec_len != vec.len() {
            return Err(Error::IntervalVectorMismatch {
                interval_len: self.vec_len,
                vector_len: vec.len(),
            });
        }
        Ok(())
    }
}

/// Shorthand for [`VectorInterval::new`].
pub fn make_vinterval(vec_len: usize, low: i64, high: i64) -> Result<VectorInterval, IntervalError> {
    VectorInterval::new(vec_len, low, high)
}

pub fn full_interval<T>(vec: &VectorData<T>) -> VectorInterval {
    VectorInterval::full(vec.len())
}

/// Right-to-left vector template: `base` when empty, otherwise
/// `combine(vec[high], high, vfold_rl(vec, [low..high-1]))`.
pub fn vfold_rl<T, A, F>(vec: &VectorData<T>, iv: VectorInterval, base: A, combine: F) -> Result<A, Error>
where
    T: Copy,
    F: FnMut(T, usize, A) -> A,
{
    vfold_observed(vec, iv, Direction::RightToLeft, base, combine, &mut (), "V")
}

/// Left-to-right vector template: `base` when empty, otherwise
/// `combine(vec[low], low, vfold_lr(vec, [low+1..high]))`.
pub fn vfold_lr<T, A, F>(vec: &VectorData<T>, iv: VectorInterval, base: A, combine: F) -> Result<A, Error>
where
    T: Copy,
    F: FnMut(T, usize, A) -> A,
{
    vfold_observed(vec, iv, Direction::LeftToRight, base, combine, &mut (), "V")
}

/// Vector fold in either direction, reporting each peel to `obs`.
///
/// Events are emitted in peel order (a visit and an element access per
/// index, then a stop on the empty rest). `combine` is then applied innermost
/// first, as the recursive template would.
pub fn vfold_observed<T, A, F, O>(
    vec: &VectorData<T>,
    iv: VectorInterval,
    direction: Direction,
    base: A,
    mut combine: F,
    obs: &mut O,
    name: &'static str,
) -> Result<A, Error>
where
    T: Copy,
    F: FnMut(T, usize, A) -> A,
    O: Observer + ?Sized,
{
    iv.ensure_fits(vec)?;
    let mut cursor = iv;
    while let Some((i, rest)) = cursor.split(direction) {
        obs.visit(direction, cursor.interval(), i as i64);
        obs.access(name, cursor.interval(), i as i64);
        cursor = rest;
    }
    obs.stop(Some(direction), cursor.interval(), "empty");

    if iv.is_empty() {
        return Ok(base);
    }
    let (lo, hi) = (iv.low as usize, iv.high as usize);
    let elems = vec.as_slice();
    let acc = match direction {
        Direction::RightToLeft => (lo..=hi).fold(base, |acc, i| combine(elems[i], i, acc)),
        Direction::LeftToRight => (lo..=hi).rev().fold(base, |acc, i| combine(elems[i], i, acc)),
    };
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[f64]) -> VectorData {
        VectorData::new(xs.to_vec())
    }

    #[test]
    fn constructor_examples() {
        let iv = make_vinterval(4, 0, 3).unwrap();
        assert_eq!((iv.low(), iv.high(), iv.vec_len()), (0, 3, 4));
        let empty = make_vinterval(4, 0, -1).unwrap();
        assert!(empty.is_empty());
        let err = make_vinterval(3, 0, 3).unwrap_err();
        assert_eq!(err.bound, Bound::High);
        assert_eq!(make_vinterval(3, -1, 1).unwrap_err().bound, Bound::Low);
        assert_eq!(make_vinterval(3, 4, 2).unwrap_err().bound, Bound::Low);
        assert_eq!(make_vinterval(3, 0, -2).unwrap_err().bound, Bound::High);
    }

    #[test]
    fn full_intervals() {
        assert_eq!(
            full_interval(&v(&[1., 2., 3., 4.])),
            make_vinterval(4, 0, 3).unwrap()
        );
        assert_eq!(full_interval(&v(&[])), make_vinterval(0, 0, -1).unwrap());
        assert_eq!(full_interval(&v(&[1.])), make_vinterval(1, 0, 0).unwrap());
    }

    #[test]
    fn get_examples() {
        let vec = v(&[6., 7., 8., 9.]);
        assert_eq!(vec.get(3), Ok(9.));
        assert_eq!(
            vec.get(4),
            Err(OobDiagnostic {
                attempted_index: 4,
                vector_length: 4,
                operation: "get"
            })
        );
        assert_eq!(
            v(&[10.]).get(-1),
            Err(OobDiagnostic {
                attempted_index: -1,
                vector_length: 1,
                operation: "get"
            })
        );
    }

    #[test]
    fn set_examples() {
        let mut vec = v(&[0., 0.]);
        vec.set(1, 5.).unwrap();
        assert_eq!(vec, v(&[0., 5.]));
        let err = vec.set(2, 5.).unwrap_err();
        assert_eq!(
            (err.attempted_index, err.vector_length, err.operation),
            (2, 2, "set")
        );
        let mut empty = v(&[]);
        let err = empty.set(0, 1.).unwrap_err();
        assert_eq!(
            (err.attempted_index, err.vector_length, err.operation),
            (0, 0, "set")
        );
    }

    #[test]
    fn swap_examples() {
        let mut vec = v(&[10., 3.]);
        vec.swap(0, 1).unwrap();
        assert_eq!(vec, v(&[3., 10.]));

        let mut one = v(&[10.]);
        one.swap(0, 0).unwrap();
        assert_eq!(one, v(&[10.]));

        let err = one.swap(0, 1).unwrap_err();
        assert_eq!(
            (err.attempted_index, err.vector_length, err.operation),
            (1, 1, "swap")
        );
        assert_eq!(one, v(&[10.]));
        // first index bad, second good: still untouched
        assert!(one.swap(1, 0).is_err());
        assert_eq!(one, v(&[10.]));
    }

    #[test]
    fn fold_examples() {
        let sum = |x: f64, _i: usize, acc: f64| acc + x;
        let data = v(&[6., 7., 8., 9.]);
        assert_eq!(vfold_rl(&data, full_interval(&data), 0.0, sum), Ok(30.0));
        let data = v(&[1., 2., 3.]);
        assert_eq!(
            vfold_rl(&data, make_vinterval(3, 0, -1).unwrap(), 0.0, sum),
            Ok(0.0)
        );
        assert_eq!(vfold_lr(&data, full_interval(&data), 0.0, sum), Ok(6.0));
        let data = v(&[10.]);
        assert_eq!(vfold_rl(&data, full_interval(&data), 0.0, sum), Ok(10.0));
        let data = v(&[]);
        assert_eq!(vfold_lr(&data, full_interval(&data), 0.0, sum), Ok(0.0));
        let data = v(&[2.]);
        assert_eq!(vfold_lr(&data, full_interval(&data), 0.0, sum), Ok(2.0));
    }

    #[test]
    fn fold_rejects_interval_from_other_vector() {
        let a = v(&[1., 2., 3.]);
        let b = v(&[1., 2.]);
        let err = vfold_rl(&b, full_interval(&a), 0.0, |x, _, acc| acc + x).unwrap_err();
        assert_eq!(
            err,
            Error::IntervalVectorMismatch {
                interval_len: 3,
                vector_len: 2
            }
        );
    }

    #[test]
    fn fold_matches_recursion_equation() {
        // combine order is observable with a non-commutative accumulator
        let data = v(&[1., 2., 3.]);
        let iv = full_interval(&data);
        let rl = vfold_rl(&data, iv, Vec::new(), |_, i, mut acc: Vec<usize>| {
            acc.push(i);
            acc
        })
        .unwrap();
        assert_eq!(rl, vec![0, 1, 2]);
        let lr = vfold_lr(&data, iv, Vec::new(), |_, i, mut acc: Vec<usize>| {
            acc.push(i);
            acc
        })
        .unwrap();
        assert_eq!(lr, vec![2, 1, 0]);
    }

    #[test]
    fn splits_stay_valid() {
        let iv = make_vinterval(3, 0, 2).unwrap();
        let (i, rest) = iv.split_low().unwrap();
        assert_eq!(i, 0);
        assert_eq!(rest, make_vinterval(3, 1, 2).unwrap());
        let (i, rest) = iv.split_high().unwrap();
        assert_eq!(i, 2);
        assert_eq!(rest, make_vinterval(3, 0, 1).unwrap());
        let last = make_vinterval(3, 2, 2).unwrap();
        assert_eq!(last.split_low().unwrap().1, make_vinterval(3, 3, 2).unwrap());
        assert!(make_vinterval(3, 3, 2).unwrap().split_low().is_none());
    }
}
