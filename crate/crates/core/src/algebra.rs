//! The direction-relative product of cubic matrices and the ternary
//! bracket it induces.
//!
//! Fixing a direction turns compatible 3-D matrices into a family of 2-D
//! matrices (the sections of that orientation) multiplied label by label:
//!
//! ```text
//! (A *_j B)^(j)_r = A^(j)_r . B^(j)_r        entrywise  C_ijk = sum_t A_ijt B_tjk
//! ```
//!
//! Shape rules (the shared extent is the chosen direction's):
//!
//! * `(j)`: m x n x p  times  p x n x q  ->  m x n x q
//! * `(i)`: m x n x p  times  m x p x q  ->  m x n x q
//! * `(k)`: m x n x p  times  n x q x p  ->  m x q x p
//!
//! The product is associative, and `identity_cubic` is its unit for cubic
//! matrices under the `(j)` product. Everything bracket-shaped below is
//! defined relative to `(j)`:
//!
//! * the commutator `[A, B] = A *_j B - B *_j A` (trace-free);
//! * the triple product `(ABC) = Tr^(j)(B) (A *_j C)`, which is
//!   lr-associative — `((ABC)DF) = (AB(CDF))` — but neither first-kind
//!   (`(A(BCD)F)`) nor second-kind (`(A(DCB)F)`) associative in general;
//! * the ternary commutator, the alternating sum of the triple product
//!   over the cyclic group and its reflections, which collapses to the
//!   quantum Nambu bracket
//!
//! ```text
//! [A, B, C] = Tr^(j)(B)[A, C] + Tr^(j)(A)[C, B] + Tr^(j)(C)[B, A]
//! ```
//!
//! and satisfies the ternary Filippov-Jacobi identity.

use crate::cubic::{Direction, Matrix3};
use crate::error::{Error, Result};
use crate::report::ResidualReport;
use crate::scalar::Scalar;

/// Direction-relative product; see the module docs for the shape rules.
pub fn mul_dir<S: Scalar>(a: &Matrix3<S>, b: &Matrix3<S>, d: Direction) -> Result<Matrix3<S>> {
    let (m, n, p) = a.shape();
    let (bm, bn, bp) = b.shape();
    match d {
        Direction::J => {
            if bm != p || bn != n {
                return Err(Error::Shape(format!(
                    "(j)-product needs {m} x {n} x {p} times {p} x {n} x q, got {bm} x {bn} x {bp}"
                )));
            }
            Matrix3::from_fn(m, n, bp, |i, j, k| {
                let mut acc = S::zero();
                for t in 1..=p {
                    acc = acc + a.get(i, j, t).clone() * b.get(t, j, k).clone();
                }
                acc
            })
        }
        Direction::I => {
            if bm != m || bn != p {
                return Err(Error::Shape(format!(
                    "(i)-product needs {m} x {n} x {p} times {m} x {p} x q, got {bm} x {bn} x {bp}"
                )));
            }
            Matrix3::from_fn(m, n, bp, |i, j, k| {
                let mut acc = S::zero();
                for t in 1..=p {
                    acc = acc + a.get(i, j, t).clone() * b.get(i, t, k).clone();
                }
                acc
            })
        }
        Direction::K => {
            if bm != n || bp != p {
                return Err(Error::Shape(format!(
                    "(k)-product needs {m} x {n} x {p} times {n} x q x {p}, got {bm} x {bn} x {bp}"
                )));
            }
            Matrix3::from_fn(m, bn, p, |i, j, k| {
                let mut acc = S::zero();
                for t in 1..=n {
                    acc = acc + a.get(i, t, k).clone() * b.get(t, j, k).clone();
                }
                acc
            })
        }
    }
}

fn common_order<S: Scalar>(ms: &[&Matrix3<S>]) -> Result<usize> {
    let n = ms[0].order()?;
    for m in &ms[1..] {
        if m.order()? != n {
            return Err(Error::Shape(format!(
                "operands must share one order, got {} and {}",
                n,
                m.order()?
            )));
        }
    }
    Ok(n)
}

/// `[A, B] = A *_j B - B *_j A` for cubic matrices of one order.
pub fn commutator<S: Scalar>(a: &Matrix3<S>, b: &Matrix3<S>) -> Result<Matrix3<S>> {
    common_order(&[a, b])?;
    mul_dir(a, b, Direction::J)?.sub(&mul_dir(b, a, Direction::J)?)
}

/// `(ABC) = Tr^(j)(B) (A *_j C)`.
pub fn triple_product<S: Scalar>(a: &Matrix3<S>, b: &Matrix3<S>, c: &Matrix3<S>) -> Result<Matrix3<S>> {
    common_order(&[a, b, c])?;
    let t = b.trace_dir(Direction::J)?;
    Ok(mul_dir(a, c, Direction::J)?.scale(&t))
}

/// Residual matrices of the three associativity patterns of the triple
/// product, all relative to `((ABC)DF)`:
/// lr `(AB(CDF))`, first kind `(A(BCD)F)`, second kind `(A(DCB)F)`.
pub fn associativity_residual_matrices<S: Scalar>(
    a: &Matrix3<S>,
    b: &Matrix3<S>,
    c: &Matrix3<S>,
    d: &Matrix3<S>,
    f: &Matrix3<S>,
) -> Result<[Matrix3<S>; 3]> {
    common_order(&[a, b, c, d, f])?;
    let left = triple_product(&triple_product(a, b, c)?, d, f)?;
    let lr = left.sub(&triple_product(a, b, &triple_product(c, d, f)?)?)?;
    let first = left.sub(&triple_product(a, &triple_product(b, c, d)?, f)?)?;
    let second = left.sub(&triple_product(a, &triple_product(d, c, b)?, f)?)?;
    Ok([lr, first, second])
}

/// The three associativity residuals judged against a tolerance.
pub fn associativity_residuals<S: Scalar>(
    a: &Matrix3<S>,
    b: &Matrix3<S>,
    c: &Matrix3<S>,
    d: &Matrix3<S>,
    f: &Matrix3<S>,
    tol: f64,
) -> Result<[ResidualReport; 3]> {
    let [lr, first, second] = associativity_residual_matrices(a, b, c, d, f)?;
    Ok([
        ResidualReport::judged("lr-associativity", lr.max_abs(), 1, tol),
        ResidualReport::judged("first-kind-associativity", first.max_abs(), 1, tol),
        ResidualReport::judged("second-kind-associativity", second.max_abs(), 1, tol),
    ])
}

/// Residual matrices of the four triple-product laws:
///
/// 1. `((ABC)DF) = (AB(CDF))`
/// 2. `(ABC)^+ = (C^+ B^+ A^+)` (adjoint relative to `(j)`)
/// 3. `(A(BCD)F) = (A(DCB)F)`
/// 4. `((ABC)DF) = ((ADC)BF)`
pub fn triple_product_law_residual_matrices<S: Scalar>(
    a: &Matrix3<S>,
    b: &Matrix3<S>,
    c: &Matrix3<S>,
    d: &Matrix3<S>,
    f: &Matrix3<S>,
) -> Result<[Matrix3<S>; 4]> {
    common_order(&[a, b, c, d, f])?;
    let left = triple_product(&triple_product(a, b, c)?, d, f)?;
    let lr = left.sub(&triple_product(a, b, &triple_product(c, d, f)?)?)?;
    let adj = triple_product(a, b, c)?.hermitian_adjoint(Direction::J).sub(&triple_product(
        &c.hermitian_adjoint(Direction::J),
        &b.hermitian_adjoint(Direction::J),
        &a.hermitian_adjoint(Direction::J),
    )?)?;
    let middle = triple_product(a, &triple_product(b, c, d)?, f)?
        .sub(&triple_product(a, &triple_product(d, c, b)?, f)?)?;
    let outer = left.sub(&triple_product(&triple_product(a, d, c)?, b, f)?)?;
    Ok([lr, adj, middle, outer])
}

/// The four triple-product laws judged against a tolerance.
pub fn prop1_residuals<S: Scalar>(
    a: &Matrix3<S>,
    b: &Matrix3<S>,
    c: &Matrix3<S>,
    d: &Matrix3<S>,
    f: &Matrix3<S>,
    tol: f64,
) -> Result<[ResidualReport; 4]> {
    let [lr, adj, middle, outer] = triple_product_law_residual_matrices(a, b, c, d, f)?;
    Ok([
        ResidualReport::judged("lr-associativity", lr.max_abs(), 1, tol),
        ResidualReport::judged("adjoint-reversal", adj.max_abs(), 1, tol),
        ResidualReport::judged("middle-reversal", middle.max_abs(), 1, tol),
        ResidualReport::judged("outer-swap", outer.max_abs(), 1, tol),
    ])
}

/// The alternating sum of the triple product over all six argument orders:
/// `(ABC) + (BCA) + (CAB) - (CBA) - (BAC) - (ACB)`.
pub fn ternary_commutator<S: Scalar>(a: &Matrix3<S>, b: &Matrix3<S>, c: &Matrix3<S>) -> Result<Matrix3<S>> {
    common_order(&[a, b, c])?;
    triple_product(a, b, c)?
        .add(&triple_product(b, c, a)?)?
        .add(&triple_product(c, a, b)?)?
        .sub(&triple_product(c, b, a)?)?
        .sub(&triple_product(b, a, c)?)?
        .sub(&triple_product(a, c, b)?)
}

/// The quantum Nambu bracket
/// `[A,B,C] = Tr^(j)(B)[A,C] + Tr^(j)(A)[C,B] + Tr^(j)(C)[B,A]`,
/// the collapsed form of [`ternary_commutator`].
pub fn quantum_nambu<S: Scalar>(a: &Matrix3<S>, b: &Matrix3<S>, c: &Matrix3<S>) -> Result<Matrix3<S>> {
    common_order(&[a, b, c])?;
    let ta = a.trace_dir(Direction::J)?;
    let tb = b.trace_dir(Direction::J)?;
    let tc = c.trace_dir(Direction::J)?;
    commutator(a, c)?
        .scale(&tb)
        .add(&commutator(c, b)?.scale(&ta))?
        .add(&commutator(b, a)?.scale(&tc))
}

/// Residual matrix of the ternary Filippov-Jacobi identity for the quantum
/// Nambu bracket:
///
/// ```text
/// [A,B,[C,D,E]] - [[A,B,C],D,E] - [C,[A,B,D],E] - [C,D,[A,B,E]]
/// ```
pub fn fi_residual_matrix_cubic<S: Scalar>(
    a: &Matrix3<S>,
    b: &Matrix3<S>,
    c: &Matrix3<S>,
    d: &Matrix3<S>,
    e: &Matrix3<S>,
) -> Result<Matrix3<S>> {
    common_order(&[a, b, c, d, e])?;
    let lhs = quantum_nambu(a, b, &quantum_nambu(c, d, e)?)?;
    lhs.sub(&quantum_nambu(&quantum_nambu(a, b, c)?, d, e)?)?
        .sub(&quantum_nambu(c, &quantum_nambu(a, b, d)?, e)?)?
        .sub(&quantum_nambu(c, d, &quantum_nambu(a, b, e)?)?)
}

/// The Filippov-Jacobi residual judged against a tolerance.
pub fn fi_residual_cubic<S: Scalar>(
    a: &Matrix3<S>,
    b: &Matrix3<S>,
    c: &Matrix3<S>,
    d: &Matrix3<S>,
    e: &Matrix3<S>,
    tol: f64,
) -> Result<ResidualReport> {
    let r = fi_residual_matrix_cubic(a, b, c, d, e)?;
    Ok(ResidualReport::judged("filippov-jacobi", r.max_abs(), 1, tol))
}
