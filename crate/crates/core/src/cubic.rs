//! Three-dimensional (cubic) matrices and their slicing structure.
//!
//! A cubic matrix is an array `A = (A_{ijk})` with `1 <= i <= m`,
//! `1 <= j <= n`, `1 <= k <= p`. All public indexing is 1-based, matching
//! the usual subscript notation; storage is dense and
//! lexicographic in `(i, j, k)`.
//!
//! The slicing vocabulary:
//!
//! * a **section** is the 2-D slice perpendicular to one axis: orientation
//!   `(i)` with label `f` is the n x p matrix `(A_{fjk})`, orientation `(j)`
//!   with label `r` is the m x p matrix `(A_{irk})`, orientation `(k)` with
//!   label `g` is the m x n matrix `(A_{ijg})`;
//! * a **row** is the 1-D fiber along one axis with the other two indices
//!   fixed — an m x n x p matrix has `n*p` rows of direction `(i)`, `m*p`
//!   of direction `(j)`, `m*n` of direction `(k)`;
//! * a **transversal** of a cubic matrix of order n is a set of n cells no
//!   two of which share a section, i.e. all three coordinate projections
//!   are injective (hence permutations of `1..=n`);
//! * the **main diagonal** is `{(t,t,t)}`; reversing a single index gives
//!   the three **secondary diagonals**, e.g. `{(t,t,n+1-t)}`. All four are
//!   transversals.
//!
//! Each direction also has a **main diagonal section**, the n x n matrix
//! collecting the diagonal rows of that direction: for `(j)` its `(t, l)`
//! entry is `A_{tlt}`, for `(i)` it is `A_{tll}`, for `(k)` it is `A_{llt}`.
//! The direction-relative trace is the sum of that matrix's entries:
//!
//! ```text
//! Tr^(j) A = sum_{i,l} A_{ili}     Tr^(i) A = sum_{k,l} A_{lkk}
//! Tr^(k) A = sum_{j,l} A_{jjl}
//! ```
//!
//! The Hermitian adjoint relative to a direction conjugates entries and
//! swaps the two indices the direction does not own: relative to `(j)`,
//! `B_{ijk} = conj(A_{kji})`; relative to `(i)`, `B_{ijk} = conj(A_{ikj})`;
//! relative to `(k)`, `B_{ijk} = conj(A_{jik})`. Equivalently, every
//! section of the chosen orientation is replaced by its ordinary Hermitian
//! adjoint.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// One of the three axes of a cubic matrix, named by the index it owns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    I,
    J,
    K,
}

impl Direction {
    pub const ALL: [Direction; 3] = [Direction::I, Direction::J, Direction::K];

    pub fn name(self) -> &'static str {
        match self {
            Direction::I => "i",
            Direction::J => "j",
            Direction::K => "k",
        }
    }
}

impl std::fmt::Display for Direction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({})", self.name())
    }
}

/// Dense m x n x p array over a scalar ring, 1-based public indexing.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix3<S> {
    m: usize,
    n: usize,
    p: usize,
    data: Vec<S>,
}

/// Dense 2-D matrix, used for sections and diagonal sections.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix2<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix2<S> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<S>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Shape(format!(
                "matrix extents must be positive, got {rows} x {cols}"
            )));
        }
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "expected {} entries for a {rows} x {cols} matrix, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(Matrix2 { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Result<Self> {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 1..=rows {
            for c in 1..=cols {
                data.push(f(r, c));
            }
        }
        Matrix2::from_vec(rows, cols, data)
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    /// 1-based access; panics on out-of-range indices like slice indexing.
    pub fn get(&self, r: usize, c: usize) -> &S {
        assert!(
            (1..=self.rows).contains(&r) && (1..=self.cols).contains(&c),
            "matrix index ({r}, {c}) out of range for {} x {}",
            self.rows,
            self.cols
        );
        &self.data[(r - 1) * self.cols + (c - 1)]
    }

    pub fn mul(&self, other: &Matrix2<S>) -> Result<Matrix2<S>> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {} x {} by {} x {}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Matrix2::from_fn(self.rows, other.cols, |r, c| {
            let mut acc = S::zero();
            for t in 1..=self.cols {
                acc = acc + self.get(r, t).clone() * other.get(t, c).clone();
            }
            acc
        })
    }

    pub fn trace(&self) -> Result<S> {
        if self.rows != self.cols {
            return Err(Error::Domain(format!(
                "trace requires a square matrix, got {} x {}",
                self.rows, self.cols
            )));
        }
        let mut acc = S::zero();
        for t in 1..=self.rows {
            acc = acc + self.get(t, t).clone();
        }
        Ok(acc)
    }

    /// Ordinary Hermitian adjoint: conjugate transpose.
    pub fn adjoint(&self) -> Matrix2<S> {
        Matrix2::from_fn(self.cols, self.rows, |r, c| self.get(c, r).conj())
            .expect("transposed shape is valid")
    }

    pub fn sub(&self, other: &Matrix2<S>) -> Result<Matrix2<S>> {
        if self.shape() != other.shape() {
            return Err(Error::Shape(format!(
                "shape mismatch: {:?} vs {:?}",
                self.shape(),
                other.shape()
            )));
        }
        Matrix2::from_fn(self.rows, self.cols, |r, c| {
            self.get(r, c).clone() - other.get(r, c).clone()
        })
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(S::abs_max).fold(0.0, f64::max)
    }

    pub fn entries(&self) -> &[S] {
        &self.data
    }
}

/// A validated list of cells (index triples) inside a given m x n x p range:
/// all triples in range, no duplicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellSet {
    cells: Vec<(usize, usize, usize)>,
}

impl CellSet {
    pub fn new(cells: Vec<(usize, usize, usize)>, shape: (usize, usize, usize)) -> Result<Self> {
        let (m, n, p) = shape;
        for &(i, j, k) in &cells {
            if !(1..=m).contains(&i) || !(1..=n).contains(&j) || !(1..=p).contains(&k) {
                return Err(Error::Index(format!(
                    "cell ({i}, {j}, {k}) out of range for shape {m} x {n} x {p}"
                )));
            }
        }
        let mut seen = cells.clone();
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Index("cell set contains a duplicate triple".into()));
        }
        Ok(CellSet { cells })
    }

    pub fn cells(&self) -> &[(usize, usize, usize)] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }
}

/// The main diagonal `{(t,t,t)}` followed by the three secondary diagonals,
/// obtained by reversing the first, second, and third index respectively.
pub fn diagonal_cells(n: usize) -> Result<[CellSet; 4]> {
    if n == 0 {
        return Err(Error::Shape("diagonals need order >= 1".into()));
    }
    let shape = (n, n, n);
    let build = |f: fn(usize, usize) -> (usize, usize, usize)| -> Result<CellSet> {
        CellSet::new((1..=n).map(|t| f(t, n)).collect(), shape)
    };
    Ok([
        build(|t, _| (t, t, t))?,
        build(|t, n| (n + 1 - t, t, t))?,
        build(|t, n| (t, n + 1 - t, t))?,
        build(|t, n| (t, t, n + 1 - t))?,
    ])
}

impl<S: Scalar> Matrix3<S> {
    pub fn from_vec(m: usize, n: usize, p: usize, data: Vec<S>) -> Result<Self> {
        if m == 0 || n == 0 || p == 0 {
            return Err(Error::Shape(format!(
                "matrix extents must be positive, got {m} x {n} x {p}"
            )));
        }
        if data.len() != m * n * p {
            return Err(Error::Shape(format!(
                "expected {} entries for a {m} x {n} x {p} matrix, got {}",
                m * n * p,
                data.len()
            )));
        }
        Ok(Matrix3 { m, n, p, data })
    }

    /// Build from a 1-based index formula, entries in lexicographic order.
    pub fn from_fn(m: usize, n: usize, p: usize, mut f: impl FnMut(usize, usize, usize) -> S) -> Result<Self> {
        let mut data = Vec::with_capacity(m * n * p);
        for i in 1..=m {
            for j in 1..=n {
                for k in 1..=p {
                    data.push(f(i, j, k));
                }
            }
        }
        Matrix3::from_vec(m, n, p, data)
    }

    pub fn zero(m: usize, n: usize, p: usize) -> Result<Self> {
        Matrix3::from_fn(m, n, p, |_, _, _| S::zero())
    }

    /// The cubic matrix with `I_{iji} = 1` and every other entry 0: each of
    /// its sections of orientation `(j)` is the n x n unit matrix.
    pub fn identity_cubic(n: usize) -> Result<Self> {
        Matrix3::from_fn(n, n, n, |i, _, k| if i == k { S::one() } else { S::zero() })
    }

    pub fn shape(&self) -> (usize, usize, usize) {
        (self.m, self.n, self.p)
    }

    pub fn is_cubic(&self) -> bool {
        self.m == self.n && self.n == self.p
    }

    /// The common extent of a cubic matrix.
    pub fn order(&self) -> Result<usize> {
        if self.is_cubic() {
            Ok(self.n)
        } else {
            Err(Error::Domain(format!(
                "operation requires a cubic matrix, got shape {} x {} x {}",
                self.m, self.n, self.p
            )))
        }
    }

    #[inline]
    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        ((i - 1) * self.n + (j - 1)) * self.p + (k - 1)
    }

    /// 1-based access; panics on out-of-range indices like slice indexing.
    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> &S {
        assert!(
            (1..=self.m).contains(&i) && (1..=self.n).contains(&j) && (1..=self.p).contains(&k),
            "index ({i}, {j}, {k}) out of range for {} x {} x {}",
            self.m,
            self.n,
            self.p
        );
        &self.data[self.idx(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: S) {
        assert!(
            (1..=self.m).contains(&i) && (1..=self.n).contains(&j) && (1..=self.p).contains(&k),
            "index ({i}, {j}, {k}) out of range for {} x {} x {}",
            self.m,
            self.n,
            self.p
        );
        let at = self.idx(i, j, k);
        self.data[at] = v;
    }

    pub fn entries(&self) -> &[S] {
        &self.data
    }

    /// Number of section labels available for the given orientation.
    pub fn section_count(&self, o: Direction) -> usize {
        match o {
            Direction::I => self.m,
            Direction::J => self.n,
            Direction::K => self.p,
        }
    }

    /// Number of rows (1-D fibers) of the given direction.
    pub fn row_count(&self, d: Direction) -> usize {
        match d {
            Direction::I => self.n * self.p,
            Direction::J => self.m * self.p,
            Direction::K => self.m * self.n,
        }
    }

    /// The 2-D section of the given orientation and 1-based label.
    pub fn section(&self, o: Direction, label: usize) -> Result<Matrix2<S>> {
        let count = self.section_count(o);
        if !(1..=count).contains(&label) {
            return Err(Error::Index(format!(
                "section label {label} out of range 1..={count} for orientation {o}"
            )));
        }
        match o {
            Direction::I => Matrix2::from_fn(self.n, self.p, |j, k| self.get(label, j, k).clone()),
            Direction::J => Matrix2::from_fn(self.m, self.p, |i, k| self.get(i, label, k).clone()),
            Direction::K => Matrix2::from_fn(self.m, self.n, |i, j| self.get(i, j, label).clone()),
        }
    }

    /// The 1-D fiber along `d`, the remaining two indices fixed and given
    /// in `(i, j, k)` order.
    pub fn row(&self, d: Direction, fix1: usize, fix2: usize) -> Result<Vec<S>> {
        let check = |v: usize, hi: usize, what: &str| -> Result<()> {
            if (1..=hi).contains(&v) {
                Ok(())
            } else {
                Err(Error::Index(format!(
                    "fixed index {what} = {v} out of range 1..={hi}"
                )))
            }
        };
        match d {
            Direction::I => {
                check(fix1, self.n, "j")?;
                check(fix2, self.p, "k")?;
                Ok((1..=self.m).map(|i| self.get(i, fix1, fix2).clone()).collect())
            }
            Direction::J => {
                check(fix1, self.m, "i")?;
                check(fix2, self.p, "k")?;
                Ok((1..=self.n).map(|j| self.get(fix1, j, fix2).clone()).collect())
            }
            Direction::K => {
                check(fix1, self.m, "i")?;
                check(fix2, self.n, "j")?;
                Ok((1..=self.p).map(|k| self.get(fix1, fix2, k).clone()).collect())
            }
        }
    }

    /// Whether `cells` is a transversal: exactly `order` cells, pairwise
    /// sharing no section, i.e. all three coordinates pairwise distinct.
    pub fn is_transversal(&self, cells: &CellSet) -> Result<bool> {
        let n = self.order()?;
        if cells.len() != n {
            return Err(Error::Arity(format!(
                "a transversal of an order-{n} matrix has {n} cells, got {}",
                cells.len()
            )));
        }
        for &(i, j, k) in cells.cells() {
            if i > self.m || j > self.n || k > self.p {
                return Err(Error::Index(format!(
                    "cell ({i}, {j}, {k}) out of range for order {n}"
                )));
            }
        }
        let cs = cells.cells();
        for a in 0..cs.len() {
            for b in (a + 1)..cs.len() {
                if cs[a].0 == cs[b].0 || cs[a].1 == cs[b].1 || cs[a].2 == cs[b].2 {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Section-level transversal test: `pairs[t]` gives the two free
    /// coordinates (in `(i, j, k)` order) of the cell picked from the
    /// section of orientation `d` with label `t+1`. True when the picked
    /// cells form a transversal, i.e. both free coordinates are injective.
    pub fn is_transversal_section(&self, d: Direction, pairs: &[(usize, usize)]) -> Result<bool> {
        let n = self.order()?;
        if pairs.len() != n {
            return Err(Error::Arity(format!(
                "need one cell per section: {n} pairs, got {}",
                pairs.len()
            )));
        }
        for &(a, b) in pairs {
            if !(1..=n).contains(&a) || !(1..=n).contains(&b) {
                return Err(Error::Index(format!(
                    "free coordinates ({a}, {b}) out of range 1..={n}"
                )));
            }
        }
        let _ = d; // every orientation imposes the same injectivity condition
        for x in 0..pairs.len() {
            for y in (x + 1)..pairs.len() {
                if pairs[x].0 == pairs[y].0 || pairs[x].1 == pairs[y].1 {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The n x n matrix of diagonal rows of the given direction; see the
    /// module docs for the `(t, l)` entry of each orientation.
    pub fn main_diagonal_section(&self, d: Direction) -> Result<Matrix2<S>> {
        let n = self.order()?;
        match d {
            Direction::J => Matrix2::from_fn(n, n, |t, l| self.get(t, l, t).clone()),
            Direction::I => Matrix2::from_fn(n, n, |t, l| self.get(t, l, l).clone()),
            Direction::K => Matrix2::from_fn(n, n, |t, l| self.get(l, l, t).clone()),
        }
    }

    /// Trace relative to a direction: the sum of the entries of that
    /// direction's main diagonal section.
    pub fn trace_dir(&self, d: Direction) -> Result<S> {
        let n = self.order()?;
        let mut acc = S::zero();
        match d {
            Direction::J => {
                for i in 1..=n {
                    for l in 1..=n {
                        acc = acc + self.get(i, l, i).clone();
                    }
                }
            }
            Direction::I => {
                for l in 1..=n {
                    for k in 1..=n {
                        acc = acc + self.get(l, k, k).clone();
                    }
                }
            }
            Direction::K => {
                for j in 1..=n {
                    for l in 1..=n {
                        acc = acc + self.get(j, j, l).clone();
                    }
                }
            }
        }
        Ok(acc)
    }

    /// Hermitian adjoint relative to a direction: conjugate entries, swap
    /// the two indices the direction does not own.
    pub fn hermitian_adjoint(&self, d: Direction) -> Matrix3<S> {
        match d {
            Direction::J => Matrix3::from_fn(self.p, self.n, self.m, |i, j, k| self.get(k, j, i).conj()),
            Direction::I => Matrix3::from_fn(self.m, self.p, self.n, |i, j, k| self.get(i, k, j).conj()),
            Direction::K => Matrix3::from_fn(self.n, self.m, self.p, |i, j, k| self.get(j, i, k).conj()),
        }
        .expect("adjoint shape is valid")
    }

    pub fn map(&self, f: impl Fn(&S) -> S) -> Matrix3<S> {
        Matrix3 {
            m: self.m,
            n: self.n,
            p: self.p,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn zip_with(&self, other: &Matrix3<S>, f: impl Fn(&S, &S) -> S) -> Result<Matrix3<S>> {
        if self.shape() != other.shape() {
            return Err(Error::Shape(format!(
                "shape mismatch: {:?} vs {:?}",
                self.shape(),
                other.shape()
            )));
        }
        Ok(Matrix3 {
            m: self.m,
            n: self.n,
            p: self.p,
            data: self
                .data
                .iter()
                .zip(other.data.iter())
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn add(&self, other: &Matrix3<S>) -> Result<Matrix3<S>> {
        self.zip_with(other, |a, b| a.clone() + b.clone())
    }

    pub fn sub(&self, other: &Matrix3<S>) -> Result<Matrix3<S>> {
        self.zip_with(other, |a, b| a.clone() - b.clone())
    }

    pub fn neg(&self) -> Matrix3<S> {
        self.map(|a| -a.clone())
    }

    pub fn scale(&self, c: &S) -> Matrix3<S> {
        self.map(|a| c.clone() * a.clone())
    }

    pub fn conj(&self) -> Matrix3<S> {
        self.map(|a| a.conj())
    }

    /// Max norm over all entries.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(S::abs_max).fold(0.0, f64::max)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ExactScalar;

    fn c(re: i64) -> ExactScalar {
        ExactScalar::new(re, 0)
    }

    /// A_{ijk} = 10i + j + k, order 2 — the worked example used throughout.
    fn tens() -> Matrix3<ExactScalar> {
        Matrix3::from_fn(2, 2, 2, |i, j, k| c((10 * i + j + k) as i64)).unwrap()
    }

    #[test]
    fn section_j_label_one() {
        let a = tens();
        let s = a.section(Direction::J, 1).unwrap();
        assert_eq!(s.shape(), (2, 2));
        assert_eq!(s.entries(), &[c(12), c(13), c(22), c(23)]);
    }

    #[test]
    fn section_counts_per_orientation() {
        let a = Matrix3::<ExactScalar>::zero(2, 3, 4).unwrap();
        assert_eq!(a.section_count(Direction::I), 2);
        assert_eq!(a.section_count(Direction::J), 3);
        assert_eq!(a.section_count(Direction::K), 4);
        assert_eq!(a.section(Direction::I, 1).unwrap().shape(), (3, 4));
        assert_eq!(a.section(Direction::J, 3).unwrap().shape(), (2, 4));
        assert_eq!(a.section(Direction::K, 4).unwrap().shape(), (2, 3));
    }

    #[test]
    fn section_label_out_of_range_is_an_index_error() {
        let a = tens();
        assert!(matches!(a.section(Direction::J, 0), Err(Error::Index(_))));
        assert!(matches!(a.section(Direction::J, 3), Err(Error::Index(_))));
    }

    #[test]
    fn row_of_direction_i() {
        let a = Matrix3::from_fn(2, 2, 2, |i, _, _| c(i as i64)).unwrap();
        assert_eq!(a.row(Direction::I, 2, 2).unwrap(), vec![c(1), c(2)]);
    }

    #[test]
    fn row_counts() {
        let a = Matrix3::<ExactScalar>::zero(2, 3, 4).unwrap();
        assert_eq!(a.row_count(Direction::I), 12);
        assert_eq!(a.row_count(Direction::J), 8);
        assert_eq!(a.row_count(Direction::K), 6);
        // a cubic matrix has n^2 rows of each direction
        let b = Matrix3::<ExactScalar>::zero(3, 3, 3).unwrap();
        for d in Direction::ALL {
            assert_eq!(b.row_count(d), 9);
        }
    }

    #[test]
    fn row_bad_fixed_index_is_an_index_error() {
        let a = tens();
        assert!(matches!(a.row(Direction::I, 3, 1), Err(Error::Index(_))));
        assert!(matches!(a.row(Direction::K, 1, 0), Err(Error::Index(_))));
    }

    #[test]
    fn main_diagonal_sections_of_the_worked_example() {
        let a = tens();
        let j = a.main_diagonal_section(Direction::J).unwrap();
        assert_eq!(j.entries(), &[c(12), c(13), c(23), c(24)]);
        let i = a.main_diagonal_section(Direction::I).unwrap();
        assert_eq!(i.entries(), &[c(12), c(14), c(22), c(24)]);
        let k = a.main_diagonal_section(Direction::K).unwrap();
        assert_eq!(k.entries(), &[c(12), c(23), c(13), c(24)]);
    }

    #[test]
    fn trace_is_the_sum_of_the_diagonal_section() {
        let a = Matrix3::from_fn(2, 2, 2, |i, j, k| c((i + j + k) as i64)).unwrap();
        assert_eq!(a.trace_dir(Direction::J).unwrap(), c(18));
        // ... and in every direction the trace equals the entry sum of the
        // main diagonal section.
        let b = Matrix3::from_fn(3, 3, 3, |i, j, k| c((7 * i + 3 * j - 2 * k) as i64 % 5)).unwrap();
        for d in Direction::ALL {
            let mds = b.main_diagonal_section(d).unwrap();
            let sum = mds
                .entries()
                .iter()
                .fold(ExactScalar::new(0, 0), |acc, v| acc + *v);
            assert_eq!(b.trace_dir(d).unwrap(), sum);
        }
    }

    #[test]
    fn trace_of_non_cubic_is_a_domain_error() {
        let a = Matrix3::<ExactScalar>::zero(2, 3, 2).unwrap();
        assert!(matches!(a.trace_dir(Direction::J), Err(Error::Domain(_))));
        assert!(matches!(a.main_diagonal_section(Direction::I), Err(Error::Domain(_))));
    }

    #[test]
    fn transversal_spot_checks() {
        let a = Matrix3::<ExactScalar>::zero(3, 3, 3).unwrap();
        let yes = CellSet::new(vec![(1, 1, 3), (2, 3, 2), (3, 2, 1)], (3, 3, 3)).unwrap();
        assert!(a.is_transversal(&yes).unwrap());
        // two cells in the same section of orientation (i)
        let no = CellSet::new(vec![(1, 1, 3), (1, 3, 2), (3, 2, 1)], (3, 3, 3)).unwrap();
        assert!(!a.is_transversal(&no).unwrap());
    }

    #[test]
    fn transversal_arity_and_range_errors() {
        let a = Matrix3::<ExactScalar>::zero(3, 3, 3).unwrap();
        let two = CellSet::new(vec![(1, 1, 1), (2, 2, 2)], (3, 3, 3)).unwrap();
        assert!(matches!(a.is_transversal(&two), Err(Error::Arity(_))));
        let big = CellSet::new(vec![(1, 1, 4), (2, 3, 2), (3, 2, 1)], (3, 3, 4)).unwrap();
        assert!(matches!(a.is_transversal(&big), Err(Error::Index(_))));
        let rect = Matrix3::<ExactScalar>::zero(2, 3, 3).unwrap();
        let any = CellSet::new(vec![(1, 1, 1), (2, 2, 2)], (2, 3, 3)).unwrap();
        assert!(matches!(rect.is_transversal(&any), Err(Error::Domain(_))));
    }

    #[test]
    fn cell_set_rejects_duplicates_and_out_of_range() {
        assert!(matches!(
            CellSet::new(vec![(1, 1, 1), (1, 1, 1)], (2, 2, 2)),
            Err(Error::Index(_))
        ));
        assert!(matches!(
            CellSet::new(vec![(0, 1, 1)], (2, 2, 2)),
            Err(Error::Index(_))
        ));
    }

    #[test]
    fn section_level_transversal_example() {
        let a = Matrix3::<ExactScalar>::zero(3, 3, 3).unwrap();
        // cells A_{113}, A_{232}, A_{321}: one per section of orientation (i)
        assert!(a
            .is_transversal_section(Direction::I, &[(1, 3), (3, 2), (2, 1)])
            .unwrap());
        assert!(!a
            .is_transversal_section(Direction::I, &[(1, 3), (1, 2), (2, 1)])
            .unwrap());
        assert!(matches!(
            a.is_transversal_section(Direction::I, &[(1, 1), (2, 2)]),
            Err(Error::Arity(_))
        ));
    }

    #[test]
    fn all_four_diagonals_are_transversals() {
        for n in 1..=5 {
            let a = Matrix3::<ExactScalar>::zero(n, n, n).unwrap();
            for d in diagonal_cells(n).unwrap() {
                assert!(a.is_transversal(&d).unwrap(), "order {n}");
            }
        }
    }

    #[test]
    fn identity_sections_are_unit_matrices() {
        let id = Matrix3::<ExactScalar>::identity_cubic(3).unwrap();
        for r in 1..=3 {
            let s = id.section(Direction::J, r).unwrap();
            for i in 1..=3 {
                for k in 1..=3 {
                    assert_eq!(*s.get(i, k), if i == k { c(1) } else { c(0) });
                }
            }
        }
        assert_eq!(id.trace_dir(Direction::J).unwrap(), c(9));
    }

    #[test]
    fn zero_extent_is_a_shape_error() {
        assert!(matches!(
            Matrix3::<ExactScalar>::zero(0, 2, 2),
            Err(Error::Shape(_))
        ));
        assert!(matches!(
            Matrix3::<ExactScalar>::identity_cubic(0),
            Err(Error::Shape(_))
        ));
        assert!(matches!(
            Matrix3::<ExactScalar>::from_vec(2, 2, 2, vec![c(1); 7]),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn adjoint_entry_rule_and_shapes() {
        let a = Matrix3::from_fn(2, 3, 4, |i, j, k| ExactScalar::new((i + 10 * j) as i64, k as i64)).unwrap();
        let bj = a.hermitian_adjoint(Direction::J);
        assert_eq!(bj.shape(), (4, 3, 2));
        assert_eq!(*bj.get(3, 2, 1), Scalar::conj(a.get(1, 2, 3)));
        let bi = a.hermitian_adjoint(Direction::I);
        assert_eq!(bi.shape(), (2, 4, 3));
        assert_eq!(*bi.get(1, 4, 2), Scalar::conj(a.get(1, 2, 4)));
        let bk = a.hermitian_adjoint(Direction::K);
        assert_eq!(bk.shape(), (3, 2, 4));
        assert_eq!(*bk.get(3, 1, 2), Scalar::conj(a.get(1, 3, 2)));
    }

    #[test]
    fn adjoint_is_an_involution_in_every_direction() {
        let a = Matrix3::from_fn(3, 3, 3, |i, j, k| {
            ExactScalar::new((2 * i + 3 * j) as i64, (5 * k + i) as i64)
        })
        .unwrap();
        for d in Direction::ALL {
            assert_eq!(a.hermitian_adjoint(d).hermitian_adjoint(d), a);
        }
    }

    #[test]
    fn adjoint_sections_are_adjoint_matrices() {
        let a = Matrix3::from_fn(2, 3, 4, |i, j, k| ExactScalar::new(i as i64, (j * k) as i64)).unwrap();
        let b = a.hermitian_adjoint(Direction::J);
        for r in 1..=3 {
            assert_eq!(
                b.section(Direction::J, r).unwrap(),
                a.section(Direction::J, r).unwrap().adjoint()
            );
        }
    }

    #[test]
    fn trace_of_adjoint_is_conjugate_trace() {
        let a = Matrix3::from_fn(3, 3, 3, |i, j, k| {
            ExactScalar::new((i * j) as i64 - 2, (k as i64) - 2)
        })
        .unwrap();
        for d in Direction::ALL {
            let lhs = a.hermitian_adjoint(d).trace_dir(d).unwrap();
            let rhs = Scalar::conj(&a.trace_dir(d).unwrap());
            assert_eq!(lhs, rhs, "direction {d}");
        }
    }
}
