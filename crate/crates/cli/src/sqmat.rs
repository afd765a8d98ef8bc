//! A deliberately independent dense square-matrix evaluator.
//!
//! The gl-crosscheck suite compares the structure-constant machinery of the
//! library against direct matrix arithmetic. To keep the two sides honest
//! this module reimplements multiplication, (super)traces, and graded
//! commutators from scratch on row-major dense matrices; the only shared
//! conventions are the scalar ring and the basis labeling of matrix units.

use nambu3_core::{gl_basis_index, Element, Scalar};

/// Dense n-by-n matrix, row-major, 0-based internally, 1-based accessors.
#[derive(Debug, Clone, PartialEq)]
pub struct SqMat<S> {
    n: usize,
    e: Vec<S>,
}

impl<S: Scalar> SqMat<S> {
    pub fn zero(n: usize) -> Self {
        SqMat {
            n,
            e: vec![S::zero(); n * n],
        }
    }

    pub fn get(&self, r: usize, c: usize) -> &S {
        &self.e[(r - 1) * self.n + (c - 1)]
    }

    pub fn set(&mut self, r: usize, c: usize, v: S) {
        self.e[(r - 1) * self.n + (c - 1)] = v;
    }

    pub fn mul(&self, other: &SqMat<S>) -> SqMat<S> {
        assert_eq!(self.n, other.n, "oracle matrices share one order");
        let n = self.n;
        let mut out = SqMat::zero(n);
        for r in 1..=n {
            for c in 1..=n {
                let mut acc = S::zero();
                for t in 1..=n {
                    acc = acc + self.get(r, t).clone() * other.get(t, c).clone();
                }
                out.set(r, c, acc);
            }
        }
        out
    }

    pub fn add(&self, other: &SqMat<S>) -> SqMat<S> {
        assert_eq!(self.n, other.n, "oracle matrices share one order");
        let mut out = self.clone();
        for (a, b) in out.e.iter_mut().zip(other.e.iter()) {
            *a = a.clone() + b.clone();
        }
        out
    }

    pub fn sub(&self, other: &SqMat<S>) -> SqMat<S> {
        assert_eq!(self.n, other.n, "oracle matrices share one order");
        let mut out = self.clone();
        for (a, b) in out.e.iter_mut().zip(other.e.iter()) {
            *a = a.clone() - b.clone();
        }
        out
    }

    pub fn scale(&self, c: &S) -> SqMat<S> {
        let mut out = self.clone();
        for a in out.e.iter_mut() {
            *a = a.clone() * c.clone();
        }
        out
    }

    pub fn neg(&self) -> SqMat<S> {
        let mut out = self.clone();
        for a in out.e.iter_mut() {
            *a = -a.clone();
        }
        out
    }

    pub fn trace(&self) -> S {
        let mut acc = S::zero();
        for t in 1..=self.n {
            acc = acc + self.get(t, t).clone();
        }
        acc
    }

    /// Supertrace with the given label parities: even diagonal entries
    /// count positively, odd ones negatively.
    pub fn supertrace(&self, parity: &[u8]) -> S {
        assert_eq!(parity.len(), self.n, "one parity per label");
        let mut acc = S::zero();
        for t in 1..=self.n {
            let d = self.get(t, t).clone();
            acc = acc + if parity[t - 1] == 1 { -d } else { d };
        }
        acc
    }

    pub fn max_abs(&self) -> f64 {
        self.e.iter().map(|v| v.abs_max()).fold(0.0, f64::max)
    }
}

/// `[a, b] = ab - ba`.
pub fn mat_commutator<S: Scalar>(a: &SqMat<S>, b: &SqMat<S>) -> SqMat<S> {
    a.mul(b).sub(&b.mul(a))
}

/// `[a, b] = ab - (-1)^{pa pb} ba` for homogeneous matrices of the given
/// parities.
pub fn mat_graded_commutator<S: Scalar>(a: &SqMat<S>, b: &SqMat<S>, pa: u8, pb: u8) -> SqMat<S> {
    let ba = b.mul(a);
    if pa * pb % 2 == 1 {
        a.mul(b).add(&ba)
    } else {
        a.mul(b).sub(&ba)
    }
}

/// Realize an abstract element of the matrix-unit algebra on n-by-n
/// matrices: coefficient `a` on basis label `gl_basis_index(n, r, c)`
/// lands on entry `(r, c)`.
pub fn element_to_matrix<S: Scalar>(n: usize, x: &Element<S>) -> SqMat<S> {
    assert_eq!(x.dim(), n * n, "element lives on the matrix-unit basis");
    let mut out = SqMat::zero(n);
    for r in 1..=n {
        for c in 1..=n {
            out.set(r, c, x.coeff(gl_basis_index(n, r, c)).clone());
        }
    }
    out
}
