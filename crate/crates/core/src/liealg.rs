//! Finite-dimensional Lie algebras and superalgebras presented by
//! structure constants.
//!
//! A `d`-dimensional algebra over basis `e_1, ..., e_d` (1-based, each
//! basis vector carrying a parity) is stored as the dense table
//! `c_{ab}^e` with `[e_a, e_b] = sum_e c_{ab}^e e_e`. A valid algebra
//! satisfies, over all basis indices:
//!
//! * graded skew-symmetry: `c_{ab}^e = -(-1)^{p(a) p(b)} c_{ba}^e`;
//! * parity closure: `c_{ab}^e = 0` unless `p(e) = p(a) + p(b)`;
//! * the graded Jacobi identity
//!   `[x,[y,z]] = [[x,y],z] + (-1)^{p(x) p(y)} [y,[x,z]]`.
//!
//! Validation reports residuals instead of failing, so a broken input
//! algebra surfaces as a failed check with a witness rather than an error.

use crate::error::{Error, Result};
use crate::grading::{neg_one_pow, Degree};
use crate::report::ResidualReport;
use crate::scalar::Scalar;
use serde_json::json;

/// Structure-constant presentation of a Lie (super)algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct StructureAlgebra<S> {
    dim: usize,
    parity: Vec<u8>,
    /// Dense `d^3` table, `c[((a-1) d + (b-1)) d + (e-1)]`.
    c: Vec<S>,
}

/// An element as a coefficient vector over the basis.
#[derive(Debug, Clone, PartialEq)]
pub struct Element<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> StructureAlgebra<S> {
    /// The abelian algebra with the given parities; fill in brackets with
    /// [`set_structure_constant`](Self::set_structure_constant).
    pub fn new(dim: usize, parity: Vec<u8>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Shape("algebra dimension must be positive".into()));
        }
        if parity.len() != dim {
            return Err(Error::Shape(format!(
                "parity vector has length {}, expected {dim}",
                parity.len()
            )));
        }
        if parity.iter().any(|&p| p > 1) {
            return Err(Error::Input("parities must be 0 or 1".into()));
        }
        Ok(StructureAlgebra {
            dim,
            parity,
            c: vec![S::zero(); dim * dim * dim],
        })
    }

    /// The abelian ungraded algebra of the given dimension.
    pub fn ungraded(dim: usize) -> Result<Self> {
        StructureAlgebra::new(dim, vec![0; dim])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_ungraded(&self) -> bool {
        self.parity.iter().all(|&p| p == 0)
    }

    /// Parity of the 1-based basis index `a`.
    pub fn parity_of_basis(&self, a: usize) -> u8 {
        self.parity[a - 1]
    }

    pub fn parities(&self) -> &[u8] {
        &self.parity
    }

    fn check_basis_index(&self, a: usize) -> Result<()> {
        if (1..=self.dim).contains(&a) {
            Ok(())
        } else {
            Err(Error::Index(format!(
                "basis index {a} out of range 1..={}",
                self.dim
            )))
        }
    }

    #[inline]
    fn at(&self, a: usize, b: usize, e: usize) -> usize {
        ((a - 1) * self.dim + (b - 1)) * self.dim + (e - 1)
    }

    /// `c_{ab}^e`, 1-based indices.
    pub fn structure_constant(&self, a: usize, b: usize, e: usize) -> &S {
        &self.c[self.at(a, b, e)]
    }

    pub fn set_structure_constant(&mut self, a: usize, b: usize, e: usize, v: S) -> Result<()> {
        self.check_basis_index(a)?;
        self.check_basis_index(b)?;
        self.check_basis_index(e)?;
        let at = self.at(a, b, e);
        self.c[at] = v;
        Ok(())
    }

    pub fn add_to_structure_constant(&mut self, a: usize, b: usize, e: usize, v: S) -> Result<()> {
        self.check_basis_index(a)?;
        self.check_basis_index(b)?;
        self.check_basis_index(e)?;
        let at = self.at(a, b, e);
        self.c[at] = self.c[at].clone() + v;
        Ok(())
    }

    /// `[e_a, e_b]` as an element.
    pub fn bracket2_basis(&self, a: usize, b: usize) -> Result<Element<S>> {
        self.check_basis_index(a)?;
        self.check_basis_index(b)?;
        Ok(Element {
            coeffs: (1..=self.dim)
                .map(|e| self.structure_constant(a, b, e).clone())
                .collect(),
        })
    }

    /// Binary bracket by bilinear expansion:
    /// `([x, y])^e = sum_{a,b} x^a y^b c_{ab}^e`.
    pub fn bracket2(&self, x: &Element<S>, y: &Element<S>) -> Result<Element<S>> {
        self.check_element(x)?;
        self.check_element(y)?;
        let mut out = vec![S::zero(); self.dim];
        for a in 1..=self.dim {
            let xa = x.coeff(a);
            if xa.is_zero() {
                continue;
            }
            for b in 1..=self.dim {
                let yb = y.coeff(b);
                if yb.is_zero() {
                    continue;
                }
                let w = xa.clone() * yb.clone();
                for e in 1..=self.dim {
                    let cst = self.structure_constant(a, b, e);
                    if !cst.is_zero() {
                        out[e - 1] = out[e - 1].clone() + w.clone() * cst.clone();
                    }
                }
            }
        }
        Ok(Element { coeffs: out })
    }

    pub fn check_element(&self, x: &Element<S>) -> Result<()> {
        if x.dim() != self.dim {
            return Err(Error::Shape(format!(
                "element lives in dimension {}, algebra has dimension {}",
                x.dim(),
                self.dim
            )));
        }
        Ok(())
    }

    /// Residuals of the three algebra axioms over all basis tuples:
    /// graded skew-symmetry, parity closure, graded Jacobi. Failures are
    /// reported, never thrown.
    pub fn validate(&self) -> Vec<ResidualReport> {
        let d = self.dim;
        let mut skew = 0.0f64;
        let mut skew_wit = None;
        let mut closure = 0.0f64;
        let mut closure_wit = None;
        for a in 1..=d {
            for b in 1..=d {
                let sgn = neg_one_pow(self.parity_of_basis(a) * self.parity_of_basis(b));
                for e in 1..=d {
                    let cab = self.structure_constant(a, b, e).clone();
                    let cba = self.structure_constant(b, a, e).clone();
                    let r = if sgn < 0 { cab.clone() - cba.clone() } else { cab.clone() + cba };
                    if r.abs_max() > skew {
                        skew = r.abs_max();
                        skew_wit = Some(json!({"x": a, "y": b, "idx": e}));
                    }
                    let pe = (self.parity_of_basis(a) + self.parity_of_basis(b)) % 2;
                    if self.parity_of_basis(e) != pe && cab.abs_max() > closure {
                        closure = cab.abs_max();
                        closure_wit = Some(json!({"x": a, "y": b, "idx": e}));
                    }
                }
            }
        }

        let mut jacobi = 0.0f64;
        let mut jacobi_wit = None;
        for a in 1..=d {
            for b in 1..=d {
                let sgn = neg_one_pow(self.parity_of_basis(a) * self.parity_of_basis(b));
                for cc in 1..=d {
                    for e in 1..=d {
                        let mut acc = S::zero();
                        for f in 1..=d {
                            let t1 = self.structure_constant(b, cc, f).clone()
                                * self.structure_constant(a, f, e).clone();
                            let t2 = self.structure_constant(a, b, f).clone()
                                * self.structure_constant(f, cc, e).clone();
                            let t3 = self.structure_constant(a, cc, f).clone()
                                * self.structure_constant(b, f, e).clone();
                            let t3 = if sgn < 0 { -t3 } else { t3 };
                            acc = acc + t1 - t2 - t3;
                        }
                        if acc.abs_max() > jacobi {
                            jacobi = acc.abs_max();
                            jacobi_wit = Some(json!({"x": a, "y": b, "z": cc, "idx": e}));
                        }
                    }
                }
            }
        }

        let trials = (d * d * d) as u64;
        vec![
            ResidualReport::judged("algebra-skew-symmetry", skew, (d * d) as u64, 0.0)
                .with_witness(if skew > 0.0 { skew_wit } else { None }),
            ResidualReport::judged("algebra-parity-closure", closure, (d * d) as u64, 0.0)
                .with_witness(if closure > 0.0 { closure_wit } else { None }),
            ResidualReport::judged("algebra-graded-jacobi", jacobi, trials, 0.0)
                .with_witness(if jacobi > 0.0 { jacobi_wit } else { None }),
        ]
    }
}

impl<S: Scalar> Element<S> {
    pub fn from_coeffs(coeffs: Vec<S>) -> Self {
        Element { coeffs }
    }

    pub fn zero(dim: usize) -> Self {
        Element {
            coeffs: vec![S::zero(); dim],
        }
    }

    /// The basis vector `e_a`, 1-based.
    pub fn basis(dim: usize, a: usize) -> Result<Self> {
        if !(1..=dim).contains(&a) {
            return Err(Error::Index(format!("basis index {a} out of range 1..={dim}")));
        }
        let mut coeffs = vec![S::zero(); dim];
        coeffs[a - 1] = S::one();
        Ok(Element { coeffs })
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient on `e_a`, 1-based.
    pub fn coeff(&self, a: usize) -> &S {
        &self.coeffs[a - 1]
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn add(&self, other: &Element<S>) -> Result<Element<S>> {
        self.zip(other, |a, b| a.clone() + b.clone())
    }

    pub fn sub(&self, other: &Element<S>) -> Result<Element<S>> {
        self.zip(other, |a, b| a.clone() - b.clone())
    }

    fn zip(&self, other: &Element<S>, f: impl Fn(&S, &S) -> S) -> Result<Element<S>> {
        if self.dim() != other.dim() {
            return Err(Error::Shape(format!(
                "element dimensions differ: {} vs {}",
                self.dim(),
                other.dim()
            )));
        }
        Ok(Element {
            coeffs: self
                .coeffs
                .iter()
                .zip(other.coeffs.iter())
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn neg(&self) -> Element<S> {
        Element {
            coeffs: self.coeffs.iter().map(|v| -v.clone()).collect(),
        }
    }

    pub fn scale(&self, c: &S) -> Element<S> {
        Element {
            coeffs: self.coeffs.iter().map(|v| c.clone() * v.clone()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|v| v.is_zero())
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(S::abs_max).fold(0.0, f64::max)
    }

    /// Homogeneity of the support with respect to the algebra's parities.
    pub fn degree(&self, g: &StructureAlgebra<S>) -> Result<Degree> {
        g.check_element(self)?;
        let mut has_even = false;
        let mut has_odd = false;
        for a in 1..=g.dim() {
            if !self.coeff(a).is_zero() {
                if g.parity_of_basis(a) == 0 {
                    has_even = true;
                } else {
                    has_odd = true;
                }
            }
        }
        Ok(match (has_even, has_odd) {
            (false, false) => Degree::Zero,
            (true, false) => Degree::Even,
            (false, true) => Degree::Odd,
            (true, true) => Degree::Inhomogeneous,
        })
    }
}

/// 1-based basis index of the matrix unit `E_{ab}` in `gl(n)`-style bases:
/// row-major over `(a, b)`.
pub fn gl_basis_index(n: usize, a: usize, b: usize) -> usize {
    (a - 1) * n + b
}

/// The general linear Lie algebra `gl(n)` over the matrix-unit basis
/// `E_{ab}` with `[E_{ab}, E_{cd}] = delta_{bc} E_{ad} - delta_{da} E_{cb}`,
/// together with the trace 1-cochain `omega(E_{ab}) = delta_{ab}`.
pub fn build_gl<S: Scalar>(n: usize) -> Result<(StructureAlgebra<S>, crate::cochain::Cochain<S>)> {
    if n == 0 {
        return Err(Error::Shape("gl(n) needs n >= 1".into()));
    }
    let dim = n * n;
    let mut g = StructureAlgebra::ungraded(dim)?;
    for a in 1..=n {
        for b in 1..=n {
            let u = gl_basis_index(n, a, b);
            for c in 1..=n {
                for d in 1..=n {
                    let v = gl_basis_index(n, c, d);
                    if b == c {
                        g.add_to_structure_constant(u, v, gl_basis_index(n, a, d), S::one())?;
                    }
                    if d == a {
                        let e = gl_basis_index(n, c, b);
                        g.add_to_structure_constant(u, v, e, -S::one())?;
                    }
                }
            }
        }
    }
    let omega = crate::cochain::Cochain::new(
        dim,
        1,
        (1..=n)
            .map(|a| (vec![gl_basis_index(n, a, a)], S::one()))
            .collect(),
    )?;
    Ok((g, omega))
}

/// The general linear Lie superalgebra `gl(m, n)`: matrix units `E_{ab}`
/// over `m + n` labels, parity `p(a) + p(b)` with the first `m` labels
/// even, graded bracket
/// `[E_{ab}, E_{cd}] = delta_{bc} E_{ad} - (-1)^{p(E_ab) p(E_cd)} delta_{da} E_{cb}`,
/// together with the supertrace 1-cochain
/// `omega(E_{aa}) = +1` for `a <= m` and `-1` above (str = tr_00 - tr_11).
pub fn build_gl_super<S: Scalar>(
    m: usize,
    n: usize,
) -> Result<(StructureAlgebra<S>, crate::cochain::Cochain<S>)> {
    if m == 0 || n == 0 {
        return Err(Error::Shape("gl(m, n) needs m >= 1 and n >= 1".into()));
    }
    let side = m + n;
    let dim = side * side;
    let lp = |a: usize| -> u8 { u8::from(a > m) };
    let mut parity = vec![0u8; dim];
    for a in 1..=side {
        for b in 1..=side {
            parity[gl_basis_index(side, a, b) - 1] = (lp(a) + lp(b)) % 2;
        }
    }
    let mut g = StructureAlgebra::new(dim, parity)?;
    for a in 1..=side {
        for b in 1..=side {
            let u = gl_basis_index(side, a, b);
            let pu = (lp(a) + lp(b)) % 2;
            for c in 1..=side {
                for d in 1..=side {
                    let v = gl_basis_index(side, c, d);
                    let pv = (lp(c) + lp(d)) % 2;
                    if b == c {
                        g.add_to_structure_constant(u, v, gl_basis_index(side, a, d), S::one())?;
                    }
                    if d == a {
                        let sgn = neg_one_pow(pu * pv);
                        let val = if sgn < 0 { S::one() } else { -S::one() };
                        g.add_to_structure_constant(u, v, gl_basis_index(side, c, b), val)?;
                    }
                }
            }
        }
    }
    let omega = crate::cochain::Cochain::new(
        dim,
        1,
        (1..=side)
            .map(|a| {
                let v = if a <= m { S::one() } else { -S::one() };
                (vec![gl_basis_index(side, a, a)], v)
            })
            .collect(),
    )?;
    Ok((g, omega))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ExactScalar;
    use num_traits::Zero;

    fn c(re: i64) -> ExactScalar {
        ExactScalar::new(re, 0)
    }

    /// The 3-dimensional Heisenberg algebra: [e1, e2] = e3.
    pub(crate) fn heisenberg() -> StructureAlgebra<ExactScalar> {
        let mut g = StructureAlgebra::ungraded(3).unwrap();
        g.set_structure_constant(1, 2, 3, c(1)).unwrap();
        g.set_structure_constant(2, 1, 3, c(-1)).unwrap();
        g
    }

    /// sl(2) over (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h.
    fn sl2() -> StructureAlgebra<ExactScalar> {
        let mut g = StructureAlgebra::ungraded(3).unwrap();
        g.set_structure_constant(1, 2, 2, c(2)).unwrap();
        g.set_structure_constant(2, 1, 2, c(-2)).unwrap();
        g.set_structure_constant(1, 3, 3, c(-2)).unwrap();
        g.set_structure_constant(3, 1, 3, c(2)).unwrap();
        g.set_structure_constant(2, 3, 1, c(1)).unwrap();
        g.set_structure_constant(3, 2, 1, c(-1)).unwrap();
        g
    }

    fn all_pass(reps: &[ResidualReport]) {
        for r in reps {
            assert!(r.pass, "{} residual {}", r.name, r.max_abs);
        }
    }

    #[test]
    fn heisenberg_and_sl2_validate() {
        all_pass(&heisenberg().validate());
        all_pass(&sl2().validate());
    }

    #[test]
    fn broken_jacobi_is_reported_not_thrown() {
        // [e1, e2] = e1 and [e2, e3] = e2: the cyclic sum on (e1, e2, e3)
        // leaves -e1, so the Jacobi identity fails.
        let mut g = StructureAlgebra::<ExactScalar>::ungraded(3).unwrap();
        for (a, b, e) in [(1, 2, 1), (2, 3, 2)] {
            g.set_structure_constant(a, b, e, c(1)).unwrap();
            g.set_structure_constant(b, a, e, c(-1)).unwrap();
        }
        let reps = g.validate();
        assert!(reps.iter().any(|r| r.name == "algebra-graded-jacobi" && !r.pass));
        let bad = reps.iter().find(|r| !r.pass).unwrap();
        assert!(bad.witness.is_some(), "failed validation carries a witness");
    }

    #[test]
    fn broken_skew_and_closure_are_reported() {
        let mut g = StructureAlgebra::<ExactScalar>::ungraded(2).unwrap();
        g.set_structure_constant(1, 2, 1, c(1)).unwrap(); // no matching (2,1) entry
        let reps = g.validate();
        assert!(reps.iter().any(|r| r.name == "algebra-skew-symmetry" && !r.pass));

        let mut h = StructureAlgebra::<ExactScalar>::new(2, vec![0, 1]).unwrap();
        h.set_structure_constant(1, 1, 2, c(1)).unwrap(); // even pair landing on odd basis
        let reps = h.validate();
        assert!(reps.iter().any(|r| r.name == "algebra-parity-closure" && !r.pass));
    }

    #[test]
    fn bracket_expands_bilinearly() {
        let g = heisenberg();
        let x = Element::from_coeffs(vec![c(2), c(0), c(5)]);
        let y = Element::from_coeffs(vec![c(0), c(3), c(-1)]);
        // [2 e1 + 5 e3, 3 e2 - e3] = 6 [e1, e2] = 6 e3
        let b = g.bracket2(&x, &y).unwrap();
        assert_eq!(b.coeffs(), &[c(0), c(0), c(6)]);
    }

    #[test]
    fn element_degree_classification() {
        let g = StructureAlgebra::<ExactScalar>::new(3, vec![0, 1, 0]).unwrap();
        assert_eq!(Element::zero(3).degree(&g).unwrap(), Degree::Zero);
        assert_eq!(
            Element::from_coeffs(vec![c(1), c(0), c(2)]).degree(&g).unwrap(),
            Degree::Even
        );
        assert_eq!(
            Element::from_coeffs(vec![c(0), c(4), c(0)]).degree(&g).unwrap(),
            Degree::Odd
        );
        assert_eq!(
            Element::from_coeffs(vec![c(1), c(4), c(0)]).degree(&g).unwrap(),
            Degree::Inhomogeneous
        );
    }

    #[test]
    fn gl2_matches_the_matrix_unit_relations() {
        let (g, omega) = build_gl::<ExactScalar>(2).unwrap();
        assert_eq!(g.dim(), 4);
        all_pass(&g.validate());
        let idx = |a, b| gl_basis_index(2, a, b);
        // [E11, E12] = E12
        let b = g.bracket2_basis(idx(1, 1), idx(1, 2)).unwrap();
        assert_eq!(*b.coeff(idx(1, 2)), c(1));
        assert_eq!(b.coeffs().iter().filter(|v| !v.is_zero()).count(), 1);
        // [E12, E21] = E11 - E22
        let b = g.bracket2_basis(idx(1, 2), idx(2, 1)).unwrap();
        assert_eq!(*b.coeff(idx(1, 1)), c(1));
        assert_eq!(*b.coeff(idx(2, 2)), c(-1));
        // [E11, E22] = 0
        assert!(g.bracket2_basis(idx(1, 1), idx(2, 2)).unwrap().is_zero());
        // omega = trace
        assert_eq!(omega.eval_basis(&g, &[idx(1, 1)]).unwrap(), c(1));
        assert_eq!(omega.eval_basis(&g, &[idx(1, 2)]).unwrap(), c(0));
    }

    #[test]
    fn gl_super_11_matches_the_graded_relations() {
        let (g, omega) = build_gl_super::<ExactScalar>(1, 1).unwrap();
        assert_eq!(g.dim(), 4);
        assert_eq!(g.parities(), &[0, 1, 1, 0]);
        all_pass(&g.validate());
        let idx = |a, b| gl_basis_index(2, a, b);
        // [E12, E21] = E12 E21 + E21 E12 = E11 + E22 (both factors odd)
        let b = g.bracket2_basis(idx(1, 2), idx(2, 1)).unwrap();
        assert_eq!(*b.coeff(idx(1, 1)), c(1));
        assert_eq!(*b.coeff(idx(2, 2)), c(1));
        // [E12, E12] = 2 E12 E12 = 0 as a matrix product
        assert!(g.bracket2_basis(idx(1, 2), idx(1, 2)).unwrap().is_zero());
        // supertrace values
        assert_eq!(omega.eval_basis(&g, &[idx(1, 1)]).unwrap(), c(1));
        assert_eq!(omega.eval_basis(&g, &[idx(2, 2)]).unwrap(), c(-1));
        assert_eq!(omega.eval_basis(&g, &[idx(1, 2)]).unwrap(), c(0));
    }

    #[test]
    fn gl_super_21_validates() {
        let (g, _) = build_gl_super::<ExactScalar>(2, 1).unwrap();
        assert_eq!(g.dim(), 9);
        all_pass(&g.validate());
    }

    #[test]
    fn gl3_validates() {
        let (g, _) = build_gl::<ExactScalar>(3).unwrap();
        assert_eq!(g.dim(), 9);
        all_pass(&g.validate());
    }

    #[test]
    fn index_errors_are_reported() {
        let g = heisenberg();
        assert!(matches!(g.bracket2_basis(0, 1), Err(Error::Index(_))));
        assert!(matches!(g.bracket2_basis(1, 4), Err(Error::Index(_))));
        assert!(matches!(Element::<ExactScalar>::basis(3, 0), Err(Error::Index(_))));
        let short = Element::from_coeffs(vec![c(1)]);
        assert!(matches!(g.bracket2(&short, &short), Err(Error::Shape(_))));
    }
}
