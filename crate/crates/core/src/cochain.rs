//! Alternating multilinear cochains on a structure-constant algebra, the
//! coboundary operator, the wedge product, and the n-ary brackets a
//! 1-cochain (more generally an (n-2)-cochain) induces from the binary
//! bracket.
//!
//! A cochain of degree `m` on a `d`-dimensional algebra is stored sparsely
//! by its values on strictly increasing basis tuples `1 <= t_1 < ... <= d`;
//! every other value follows by (graded) alternation. Over a graded
//! algebra the alternation rule is
//! `omega(..., x, y, ...) = -(-1)^{p(x) p(y)} omega(..., y, x, ...)`,
//! so repeated odd indices are meaningful; such diagonal values arise only
//! through [`Cochain::coboundary`] and are never read from input files.
//!
//! The induced bracket of arity `n = m + 2` is
//!
//! ```text
//! [x_1, ..., x_n] = sum_{i<j} (-1)^{i+j+1}
//!     omega(x_1, .., ^x_i, .., ^x_j, .., x_n) [x_i, x_j]
//! ```
//!
//! (hats mark omitted arguments, indices 1-based). The verification
//! reports in this module sample its fundamental identity and record the
//! hypothesis quantities (wedge norm, vanishing on odd arguments, ternary
//! closure) that are sufficient for the identity to hold.

use crate::error::{Error, Result};
use crate::grading::neg_one_pow;
use crate::liealg::{Element, StructureAlgebra};
use crate::report::{MaxTracker, ResidualReport, VerificationReport};
use crate::rng::{gen_random_element, gen_random_homogeneous_element, DrawScalar, Stream};
use crate::scalar::Scalar;
use serde_json::{json, Value};
use std::collections::BTreeMap;

/// Upper bound on the tuple space for which `Sampling::Auto` picks an
/// exhaustive basis sweep instead of random trials.
pub const MAX_EXHAUSTIVE_TUPLES: u64 = 1_000_000;

/// How identity checks choose their sample set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sampling {
    /// Exhaustive over basis tuples when the space has at most
    /// [`MAX_EXHAUSTIVE_TUPLES`] members, random otherwise.
    Auto,
    /// Sweep every basis tuple.
    Exhaustive,
    /// Seeded random trials.
    Random,
}

/// Sampling parameters shared by the verification reports.
#[derive(Debug, Clone)]
pub struct SampleOptions {
    pub sampling: Sampling,
    /// Number of random trials (ignored by an exhaustive sweep).
    pub trials: u64,
    pub seed: u64,
    /// Half-width of the integer draw; real draws ignore it.
    pub range: i64,
    pub tol: f64,
}

impl SampleOptions {
    /// Defaults for the exact integer regime: residuals must vanish.
    pub fn exact(seed: u64, trials: u64) -> Self {
        SampleOptions {
            sampling: Sampling::Auto,
            trials,
            seed,
            range: 3,
            tol: 0.0,
        }
    }

    /// Defaults for the floating-point regime.
    pub fn float(seed: u64, trials: u64) -> Self {
        SampleOptions {
            sampling: Sampling::Auto,
            trials,
            seed,
            range: 3,
            tol: crate::scalar::DEFAULT_FLOAT_TOL,
        }
    }

    pub fn with_sampling(mut self, sampling: Sampling) -> Self {
        self.sampling = sampling;
        self
    }
}

/// Sparse alternating cochain; see the module docs for conventions.
#[derive(Debug, Clone, PartialEq)]
pub struct Cochain<S> {
    dim: usize,
    degree: usize,
    values: BTreeMap<Vec<usize>, S>,
}

impl<S: Scalar> Cochain<S> {
    /// Build from values on strictly increasing basis tuples. Zero values
    /// are dropped; duplicate or non-increasing keys are rejected.
    pub fn new(dim: usize, degree: usize, entries: Vec<(Vec<usize>, S)>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Shape("cochain dimension must be positive".into()));
        }
        if degree == 0 {
            return Err(Error::Input("cochain degree must be at least 1".into()));
        }
        let mut values = BTreeMap::new();
        for (key, v) in entries {
            if key.len() != degree {
                return Err(Error::Input(format!(
                    "cochain key {key:?} has {} indices, expected {degree}",
                    key.len()
                )));
            }
            for &t in &key {
                if !(1..=dim).contains(&t) {
                    return Err(Error::Index(format!(
                        "cochain key index {t} out of range 1..={dim}"
                    )));
                }
            }
            if key.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Input(format!(
                    "cochain key {key:?} is not strictly increasing"
                )));
            }
            if v.is_zero() {
                continue;
            }
            if values.insert(key.clone(), v).is_some() {
                return Err(Error::Input(format!("duplicate cochain key {key:?}")));
            }
        }
        Ok(Cochain { dim, degree, values })
    }

    /// The zero cochain of the given degree.
    pub fn zero(dim: usize, degree: usize) -> Result<Self> {
        Cochain::new(dim, degree, Vec::new())
    }

    /// Internal constructor for coboundaries: keys are weakly increasing,
    /// repeats only where alternation allows a nonzero value.
    fn from_sorted_map(dim: usize, degree: usize, values: BTreeMap<Vec<usize>, S>) -> Self {
        Cochain { dim, degree, values }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Stored (strictly or weakly increasing) keys with their values, in
    /// sorted key order.
    pub fn entries(&self) -> impl Iterator<Item = (&[usize], &S)> {
        self.values.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// Sup-norm over all (weakly) increasing basis tuples; by alternation
    /// this is the sup-norm over all basis tuples.
    pub fn max_abs(&self) -> f64 {
        self.values.values().map(S::abs_max).fold(0.0, f64::max)
    }

    fn has_repeated_key(&self) -> bool {
        self.values
            .keys()
            .any(|k| k.windows(2).any(|w| w[0] == w[1]))
    }

    fn check_algebra(&self, g: &StructureAlgebra<S>) -> Result<()> {
        if g.dim() != self.dim {
            return Err(Error::Shape(format!(
                "cochain lives in dimension {}, algebra has dimension {}",
                self.dim,
                g.dim()
            )));
        }
        Ok(())
    }

    /// Value on a tuple of basis indices in any order, resolved through
    /// graded alternation (parities come from `g`).
    pub fn eval_basis(&self, g: &StructureAlgebra<S>, idxs: &[usize]) -> Result<S> {
        self.check_algebra(g)?;
        if idxs.len() != self.degree {
            return Err(Error::Arity(format!(
                "cochain of degree {} evaluated on {} arguments",
                self.degree,
                idxs.len()
            )));
        }
        for &t in idxs {
            if !(1..=self.dim).contains(&t) {
                return Err(Error::Index(format!(
                    "basis index {t} out of range 1..={}",
                    self.dim
                )));
            }
        }
        // Insertion sort, tracking the graded alternation sign per adjacent
        // swap. Equal entries never swap, so repeats stay adjacent.
        let mut v = idxs.to_vec();
        let mut sign = 1i64;
        for i in 1..v.len() {
            let mut j = i;
            while j > 0 && v[j - 1] > v[j] {
                let p = g.parity_of_basis(v[j - 1]);
                let q = g.parity_of_basis(v[j]);
                sign *= -neg_one_pow(p * q);
                v.swap(j - 1, j);
                j -= 1;
            }
        }
        // A repeated even index forces the value to zero by alternation.
        if v.windows(2).any(|w| w[0] == w[1] && g.parity_of_basis(w[0]) == 0) {
            return Ok(S::zero());
        }
        Ok(match self.values.get(&v) {
            Some(c) if sign < 0 => -c.clone(),
            Some(c) => c.clone(),
            None => S::zero(),
        })
    }

    /// Multilinear evaluation on algebra elements.
    pub fn eval(&self, g: &StructureAlgebra<S>, args: &[Element<S>]) -> Result<S> {
        self.check_algebra(g)?;
        if args.len() != self.degree {
            return Err(Error::Arity(format!(
                "cochain of degree {} evaluated on {} arguments",
                self.degree,
                args.len()
            )));
        }
        for x in args {
            g.check_element(x)?;
        }
        let mut total = S::zero();
        let mut idxs = Vec::with_capacity(self.degree);
        self.eval_expand(g, args, &mut idxs, &S::one(), &mut total)?;
        Ok(total)
    }

    fn eval_expand(
        &self,
        g: &StructureAlgebra<S>,
        args: &[Element<S>],
        idxs: &mut Vec<usize>,
        acc: &S,
        total: &mut S,
    ) -> Result<()> {
        let depth = idxs.len();
        if depth == args.len() {
            let v = self.eval_basis(g, idxs)?;
            if !v.is_zero() {
                *total = total.clone() + acc.clone() * v;
            }
            return Ok(());
        }
        for a in 1..=self.dim {
            let c = args[depth].coeff(a);
            if c.is_zero() {
                continue;
            }
            let acc2 = acc.clone() * c.clone();
            idxs.push(a);
            self.eval_expand(g, args, idxs, &acc2, total)?;
            idxs.pop();
        }
        Ok(())
    }

    /// Coboundary with respect to the binary bracket:
    ///
    /// ```text
    /// (d omega)(x_0, ..., x_m) = sum_{i<j} (-1)^{i+j+1}
    ///     omega([x_i, x_j], x_0, .., ^x_i, .., ^x_j, .., x_m)
    /// ```
    ///
    /// For a 1-cochain this reduces to `(d omega)(x, y) = omega([x, y])`
    /// and is supported over any algebra; for higher degrees it is
    /// supported over ungraded algebras only.
    pub fn coboundary(&self, g: &StructureAlgebra<S>) -> Result<Cochain<S>> {
        self.check_algebra(g)?;
        let d = self.dim;
        if self.degree == 1 {
            let mut values = BTreeMap::new();
            for a in 1..=d {
                for b in a..=d {
                    if a == b && g.parity_of_basis(a) == 0 {
                        // Alternation forces the even diagonal to zero.
                        continue;
                    }
                    let br = g.bracket2_basis(a, b)?;
                    let v = self.eval(g, std::slice::from_ref(&br))?;
                    if !v.is_zero() {
                        values.insert(vec![a, b], v);
                    }
                }
            }
            return Ok(Cochain::from_sorted_map(d, 2, values));
        }
        if !g.is_ungraded() {
            return Err(Error::Unsupported(
                "coboundary of a cochain of degree >= 2 over a graded algebra".into(),
            ));
        }
        let m = self.degree;
        let mut values = BTreeMap::new();
        for_each_strict_tuple(d, m + 1, &mut |t: &[usize]| {
            let mut total = S::zero();
            let mut rest = Vec::with_capacity(m);
            for i in 0..t.len() {
                for j in (i + 1)..t.len() {
                    let sgn = neg_one_pow(((i + j + 1) % 2) as u8);
                    let br = g.bracket2_basis(t[i], t[j])?;
                    for e in 1..=d {
                        let ce = br.coeff(e);
                        if ce.is_zero() {
                            continue;
                        }
                        rest.clear();
                        rest.push(e);
                        rest.extend(
                            t.iter()
                                .enumerate()
                                .filter(|&(l, _)| l != i && l != j)
                                .map(|(_, &x)| x),
                        );
                        let w = self.eval_basis(g, &rest)?;
                        if w.is_zero() {
                            continue;
                        }
                        let term = ce.clone() * w;
                        total = if sgn < 0 { total - term } else { total + term };
                    }
                }
            }
            if !total.is_zero() {
                values.insert(t.to_vec(), total);
            }
            Ok(())
        })?;
        Ok(Cochain::from_sorted_map(d, m + 1, values))
    }

    /// Wedge product by the shuffle sum: for strictly increasing `T` of
    /// length `p + q`,
    ///
    /// ```text
    /// (phi ^ psi)(T) = sum_{|A| = p} sign(A) phi(T_A) psi(T_comp)
    /// ```
    ///
    /// over position subsets `A`, with the shuffle sign. Degree above the
    /// dimension yields the zero cochain. Operands must be supported on
    /// strictly increasing keys (no graded diagonal values).
    pub fn wedge(&self, other: &Cochain<S>) -> Result<Cochain<S>> {
        if self.dim != other.dim {
            return Err(Error::Shape(format!(
                "wedge operands live in dimensions {} and {}",
                self.dim, other.dim
            )));
        }
        if self.has_repeated_key() || other.has_repeated_key() {
            return Err(Error::Unsupported(
                "wedge of a cochain with graded diagonal values".into(),
            ));
        }
        let d = self.dim;
        let p = self.degree;
        let q = other.degree;
        let mut values = BTreeMap::new();
        if p + q > d {
            return Ok(Cochain::from_sorted_map(d, p + q, values));
        }
        let positions: Vec<usize> = (0..p + q).collect();
        let mut subsets = Vec::new();
        collect_strict_tuples(&positions, p, &mut subsets);
        for_each_strict_tuple(d, p + q, &mut |t: &[usize]| {
            let mut total = S::zero();
            for sel in &subsets {
                // Shuffle sign: inversions created by pulling the selected
                // positions to the front.
                let inversions: usize = sel.iter().enumerate().map(|(r, &s)| s - r).sum();
                let sgn = neg_one_pow((inversions % 2) as u8);
                let left: Vec<usize> = sel.iter().map(|&s| t[s]).collect();
                let a = match self.values.get(&left) {
                    Some(a) => a.clone(),
                    None => continue,
                };
                let right: Vec<usize> = positions
                    .iter()
                    .filter(|s| !sel.contains(s))
                    .map(|&s| t[s])
                    .collect();
                let b = match other.values.get(&right) {
                    Some(b) => b.clone(),
                    None => continue,
                };
                let term = a * b;
                total = if sgn < 0 { total - term } else { total + term };
            }
            if !total.is_zero() {
                values.insert(t.to_vec(), total);
            }
            Ok(())
        })?;
        Ok(Cochain::from_sorted_map(d, p + q, values))
    }
}

/// Call `f` on every strictly increasing `k`-tuple over `1..=dim`.
fn for_each_strict_tuple(
    dim: usize,
    k: usize,
    f: &mut impl FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    fn go(
        dim: usize,
        k: usize,
        start: usize,
        cur: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]) -> Result<()>,
    ) -> Result<()> {
        if cur.len() == k {
            return f(cur);
        }
        let remaining = k - cur.len();
        for a in start..=dim {
            if dim - a + 1 < remaining {
                break;
            }
            cur.push(a);
            go(dim, k, a + 1, cur, f)?;
            cur.pop();
        }
        Ok(())
    }
    if k > dim {
        return Ok(());
    }
    let mut cur = Vec::with_capacity(k);
    go(dim, k, 1, &mut cur, f)
}

/// All strictly increasing `k`-subsets of `items`, in lexicographic order.
fn collect_strict_tuples(items: &[usize], k: usize, out: &mut Vec<Vec<usize>>) {
    fn go(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            go(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut cur = Vec::with_capacity(k);
    go(items, k, 0, &mut cur, out);
}

/// Call `f` on every `k`-tuple over `1..=dim` (repeats allowed), in
/// lexicographic order with the first slot most significant.
fn for_each_full_tuple(
    dim: usize,
    k: usize,
    f: &mut impl FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    let mut t = vec![1usize; k];
    loop {
        f(&t)?;
        let mut slot = k;
        loop {
            if slot == 0 {
                return Ok(());
            }
            slot -= 1;
            if t[slot] < dim {
                t[slot] += 1;
                for x in &mut t[slot + 1..] {
                    *x = 1;
                }
                break;
            }
        }
    }
}

/// The n-ary bracket induced by an (n-2)-cochain over an ungraded algebra
/// (see the module docs for the formula).
pub fn nary_bracket_from_cochain<S: Scalar>(
    g: &StructureAlgebra<S>,
    omega: &Cochain<S>,
    args: &[Element<S>],
) -> Result<Element<S>> {
    omega.check_algebra(g)?;
    if !g.is_ungraded() {
        return Err(Error::Unsupported(
            "the ungraded induced bracket over a graded algebra (use the graded ternary bracket)"
                .into(),
        ));
    }
    let n = omega.degree() + 2;
    if args.len() != n {
        return Err(Error::Arity(format!(
            "induced bracket of arity {n} applied to {} arguments",
            args.len()
        )));
    }
    for x in args {
        g.check_element(x)?;
    }
    let mut total = Element::zero(g.dim());
    let mut rest = Vec::with_capacity(n - 2);
    for i in 0..n {
        for j in (i + 1)..n {
            // 1-based positions: (-1)^{(i+1)+(j+1)+1} = (-1)^{i+j+1}.
            let sgn = neg_one_pow(((i + j + 1) % 2) as u8);
            rest.clear();
            rest.extend(
                args.iter()
                    .enumerate()
                    .filter(|&(l, _)| l != i && l != j)
                    .map(|(_, x)| x.clone()),
            );
            let w = omega.eval(g, &rest)?;
            if w.is_zero() {
                continue;
            }
            let br = g.bracket2(&args[i], &args[j])?.scale(&w);
            total = if sgn < 0 { total.sub(&br)? } else { total.add(&br)? };
        }
    }
    Ok(total)
}

/// The graded ternary bracket induced by a 1-cochain over a graded
/// algebra:
///
/// ```text
/// [x, y, z] = omega(x) [y, z] + (-1)^{p(x)(p(y)+p(z))} omega(y) [z, x]
///           + (-1)^{p(z)(p(x)+p(y))} omega(z) [x, y]
/// ```
///
/// Arguments must be homogeneous.
pub fn graded_ternary_bracket_from_cochain<S: Scalar>(
    g: &StructureAlgebra<S>,
    omega: &Cochain<S>,
    x: &Element<S>,
    y: &Element<S>,
    z: &Element<S>,
) -> Result<Element<S>> {
    omega.check_algebra(g)?;
    if omega.degree() != 1 {
        return Err(Error::Arity(format!(
            "the graded ternary bracket needs a 1-cochain, got degree {}",
            omega.degree()
        )));
    }
    let px = x.degree(g)?.parity()?;
    let py = y.degree(g)?.parity()?;
    let pz = z.degree(g)?.parity()?;
    let mut total = Element::zero(g.dim());
    for (w, a, b, e) in [
        (omega.eval(g, std::slice::from_ref(x))?, y, z, 0u8),
        (
            omega.eval(g, std::slice::from_ref(y))?,
            z,
            x,
            px * ((py + pz) % 2),
        ),
        (
            omega.eval(g, std::slice::from_ref(z))?,
            x,
            y,
            pz * ((px + py) % 2),
        ),
    ] {
        if w.is_zero() {
            continue;
        }
        let br = g.bracket2(a, b)?.scale(&w);
        total = if neg_one_pow(e) < 0 {
            total.sub(&br)?
        } else {
            total.add(&br)?
        };
    }
    Ok(total)
}

/// Residual of the fundamental identity of the induced n-ary bracket:
///
/// ```text
/// [xs, [ys]] - sum_k [y_1, .., [xs, y_k], .., y_n]
/// ```
///
/// with `xs` of length `n - 1` and `ys` of length `n`.
pub fn fi_residual_element<S: Scalar>(
    g: &StructureAlgebra<S>,
    omega: &Cochain<S>,
    xs: &[Element<S>],
    ys: &[Element<S>],
) -> Result<Element<S>> {
    let n = omega.degree() + 2;
    if xs.len() != n - 1 || ys.len() != n {
        return Err(Error::Arity(format!(
            "fundamental identity of arity {n} needs {} outer and {n} inner arguments, got {} and {}",
            n - 1,
            xs.len(),
            ys.len()
        )));
    }
    let nary = |args: &[Element<S>]| nary_bracket_from_cochain(g, omega, args);
    let mut outer = xs.to_vec();
    outer.push(nary(ys)?);
    let lhs = nary(&outer)?;
    let mut rhs = Element::zero(g.dim());
    for k in 0..n {
        let mut inner_args = xs.to_vec();
        inner_args.push(ys[k].clone());
        let mut shifted = ys.to_vec();
        shifted[k] = nary(&inner_args)?;
        rhs = rhs.add(&nary(&shifted)?)?;
    }
    lhs.sub(&rhs)
}

/// Residual of the graded fundamental identity of the graded ternary
/// bracket, with the sign `(-1)^{(p(x_1)+p(x_2)) (p(y_1)+..+p(y_{k-1}))}`
/// in front of the `k`-th term on the right.
pub fn gfi_residual_element<S: Scalar>(
    g: &StructureAlgebra<S>,
    omega: &Cochain<S>,
    x1: &Element<S>,
    x2: &Element<S>,
    ys: &[Element<S>],
) -> Result<Element<S>> {
    if ys.len() != 3 {
        return Err(Error::Arity(format!(
            "the graded fundamental identity needs 3 inner arguments, got {}",
            ys.len()
        )));
    }
    let px = (x1.degree(g)?.parity()? + x2.degree(g)?.parity()?) % 2;
    let tern = |a: &Element<S>, b: &Element<S>, c: &Element<S>| {
        graded_ternary_bracket_from_cochain(g, omega, a, b, c)
    };
    let inner = tern(&ys[0], &ys[1], &ys[2])?;
    let lhs = tern(x1, x2, &inner)?;
    let mut rhs = Element::zero(g.dim());
    let mut prefix = 0u8;
    for k in 0..3 {
        let replaced = tern(x1, x2, &ys[k])?;
        let mut shifted = ys.to_vec();
        shifted[k] = replaced;
        let term = tern(&shifted[0], &shifted[1], &shifted[2])?;
        let alpha = (px * prefix) % 2;
        rhs = if neg_one_pow(alpha) < 0 {
            rhs.sub(&term)?
        } else {
            rhs.add(&term)?
        };
        prefix = (prefix + ys[k].degree(g)?.parity()?) % 2;
    }
    lhs.sub(&rhs)
}

fn resolve_sampling(requested: Sampling, space: u64) -> Sampling {
    match requested {
        Sampling::Auto => {
            if space <= MAX_EXHAUSTIVE_TUPLES {
                Sampling::Exhaustive
            } else {
                Sampling::Random
            }
        }
        s => s,
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

fn sampling_config(mode: Sampling, samples: u64, opts: &SampleOptions) -> Value {
    match mode {
        Sampling::Random => json!({
            "mode": "random",
            "samples": samples,
            "seed": opts.seed,
            "range": opts.range,
        }),
        _ => json!({ "mode": "exhaustive", "samples": samples }),
    }
}

/// Verification report for the induced n-ary bracket over an ungraded
/// algebra: records the sup-norm of `omega ^ d omega` (whose vanishing is
/// sufficient for the fundamental identity) and the sampled residual of
/// the identity itself. When the wedge norm exceeds the tolerance the
/// residual is still recorded but carries no judgment.
pub fn theorem1_report<S: DrawScalar>(
    g: &StructureAlgebra<S>,
    omega: &Cochain<S>,
    opts: &SampleOptions,
) -> Result<VerificationReport> {
    omega.check_algebra(g)?;
    if !g.is_ungraded() {
        return Err(Error::Unsupported(
            "the induced-bracket report over a graded algebra (use the graded report)".into(),
        ));
    }
    let d = g.dim();
    let n = omega.degree() + 2;

    let delta = omega.coboundary(g)?;
    let wedge = omega.wedge(&delta)?;
    let wedge_norm = wedge.max_abs();
    let wedge_tuples = binomial(d as u64, (2 * n - 3) as u64);
    let wedge_ok = wedge_norm <= opts.tol;

    let slots = 2 * n - 1;
    let space = (d as u64)
        .checked_pow(slots as u32)
        .unwrap_or(u64::MAX);
    let mode = resolve_sampling(opts.sampling, space);

    let mut tracker = MaxTracker::new();
    match mode {
        Sampling::Random => {
            let mut stream = Stream::new(opts.seed);
            for trial in 1..=opts.trials {
                let xs: Vec<Element<S>> = (0..n - 1)
                    .map(|_| gen_random_element(g, &mut stream, opts.range))
                    .collect();
                let ys: Vec<Element<S>> = (0..n)
                    .map(|_| gen_random_element(g, &mut stream, opts.range))
                    .collect();
                let r = fi_residual_element(g, omega, &xs, &ys)?;
                tracker.record(r.max_abs(), || json!({ "trial": trial }));
            }
        }
        _ => {
            for_each_full_tuple(d, slots, &mut |t: &[usize]| {
                let xs: Vec<Element<S>> = t[..n - 1]
                    .iter()
                    .map(|&a| Element::basis(d, a))
                    .collect::<Result<_>>()?;
                let ys: Vec<Element<S>> = t[n - 1..]
                    .iter()
                    .map(|&a| Element::basis(d, a))
                    .collect::<Result<_>>()?;
                let r = fi_residual_element(g, omega, &xs, &ys)?;
                tracker.record(r.max_abs(), || {
                    json!({ "xs": t[..n - 1], "ys": t[n - 1..] })
                });
                Ok(())
            })?;
        }
    }

    let wedge_note = if wedge_ok {
        "hypothesis: wedge product of the cochain with its coboundary vanishes"
    } else {
        "hypothesis fails: wedge product does not vanish, so the identity is not implied"
    };
    let wedge_row = ResidualReport::measured("wedge-norm", wedge_norm, wedge_tuples, wedge_note);
    let fi_row = if wedge_ok {
        tracker.judged("induced-filippov-jacobi", opts.tol, false)
    } else {
        let mut row = ResidualReport::measured(
            "induced-filippov-jacobi",
            tracker.max_abs,
            tracker.trials,
            "recorded only: the vanishing hypothesis fails, no judgment applies",
        );
        if tracker.max_abs > opts.tol {
            row.witness = tracker.witness.clone();
        }
        row
    };

    let config = json!({
        "check": "induced-bracket",
        "arity": n,
        "dim": d,
        "sampling": sampling_config(mode, if mode == Sampling::Random { opts.trials } else { space }, opts),
        "tolerance": opts.tol,
    });
    Ok(VerificationReport::new(config, vec![wedge_row, fi_row]))
}

/// Verification report for the graded ternary bracket induced by a
/// 1-cochain over a graded algebra. Hypotheses: the cochain vanishes on
/// odd arguments, and the trilinear closure `omega([x, y, z]) = 0` holds
/// on basis triples. Both are recorded, the cross-parity coboundary is
/// recorded as a derived diagnostic, and the graded fundamental identity
/// is judged only when the hypotheses hold.
pub fn theorem2_report<S: DrawScalar>(
    g: &StructureAlgebra<S>,
    omega: &Cochain<S>,
    opts: &SampleOptions,
) -> Result<VerificationReport> {
    omega.check_algebra(g)?;
    if omega.degree() != 1 {
        return Err(Error::Arity(format!(
            "the graded induced-bracket report needs a 1-cochain, got degree {}",
            omega.degree()
        )));
    }
    let d = g.dim();

    let mut cond_odd = MaxTracker::new();
    for a in 1..=d {
        if g.parity_of_basis(a) == 1 {
            let v = omega.eval_basis(g, &[a])?;
            cond_odd.record(v.abs_max(), || json!({ "idx": a }));
        }
    }

    let mut cond_closure = MaxTracker::new();
    for a in 1..=d {
        for b in 1..=d {
            for c in 1..=d {
                let ea = Element::basis(d, a)?;
                let eb = Element::basis(d, b)?;
                let ec = Element::basis(d, c)?;
                let br = graded_ternary_bracket_from_cochain(g, omega, &ea, &eb, &ec)?;
                let v = omega.eval(g, std::slice::from_ref(&br))?;
                cond_closure.record(v.abs_max(), || json!({ "x": a, "y": b, "z": c }));
            }
        }
    }

    let delta = omega.coboundary(g)?;
    let mut cross = MaxTracker::new();
    for a in 1..=d {
        for b in (a + 1)..=d {
            if g.parity_of_basis(a) != g.parity_of_basis(b) {
                let v = delta.eval_basis(g, &[a, b])?;
                cross.record(v.abs_max(), || json!({ "x": a, "y": b }));
            }
        }
    }

    let conds_hold = cond_odd.max_abs <= opts.tol && cond_closure.max_abs <= opts.tol;

    let space = (d as u64).checked_pow(5).unwrap_or(u64::MAX);
    let mode = resolve_sampling(opts.sampling, space);
    let mut tracker = MaxTracker::new();
    let gfi_row = if conds_hold {
        match mode {
            Sampling::Random => {
                let mut stream = Stream::new(opts.seed);
                for trial in 1..=opts.trials {
                    // Degree pattern: bit l of (trial - 1) mod 32 makes
                    // argument l odd, in the order x1, x2, y1, y2, y3.
                    let pattern = ((trial - 1) % 32) as u8;
                    let mut args: Vec<Element<S>> = Vec::with_capacity(5);
                    for l in 0..5 {
                        let odd = pattern >> l & 1 == 1;
                        args.push(gen_random_homogeneous_element(g, &mut stream, opts.range, odd));
                    }
                    let r = gfi_residual_element(g, omega, &args[0], &args[1], &args[2..])?;
                    tracker.record(r.max_abs(), || json!({ "trial": trial, "pattern": pattern }));
                }
            }
            _ => {
                for_each_full_tuple(d, 5, &mut |t: &[usize]| {
                    let args: Vec<Element<S>> = t
                        .iter()
                        .map(|&a| Element::basis(d, a))
                        .collect::<Result<_>>()?;
                    let r = gfi_residual_element(g, omega, &args[0], &args[1], &args[2..])?;
                    tracker.record(r.max_abs(), || {
                        json!({ "xs": t[..2], "ys": t[2..] })
                    });
                    Ok(())
                })?;
            }
        }
        tracker.judged("induced-graded-filippov-jacobi", opts.tol, false)
    } else {
        ResidualReport::measured(
            "induced-graded-filippov-jacobi",
            0.0,
            0,
            "not sampled: a hypothesis fails, so the identity is not implied",
        )
    };

    let odd_note = if cond_odd.max_abs <= opts.tol {
        "hypothesis: the cochain vanishes on odd basis vectors"
    } else {
        "hypothesis fails: the cochain does not vanish on odd basis vectors"
    };
    let closure_note = if cond_closure.max_abs <= opts.tol {
        "hypothesis: the cochain vanishes on the induced ternary bracket"
    } else {
        "hypothesis fails: the cochain does not vanish on the induced ternary bracket"
    };
    let mut odd_row =
        ResidualReport::measured("odd-argument-vanishing", cond_odd.max_abs, cond_odd.trials, odd_note);
    if cond_odd.max_abs > opts.tol {
        odd_row.witness = cond_odd.witness.clone();
    }
    let mut closure_row = ResidualReport::measured(
        "ternary-closure",
        cond_closure.max_abs,
        cond_closure.trials,
        closure_note,
    );
    if cond_closure.max_abs > opts.tol {
        closure_row.witness = cond_closure.witness.clone();
    }
    let cross_row = ResidualReport::measured(
        "coboundary-cross-parity",
        cross.max_abs,
        cross.trials,
        "diagnostic: the coboundary on mixed-parity pairs, implied by the hypotheses",
    );

    let config = json!({
        "check": "induced-graded-bracket",
        "arity": 3,
        "dim": d,
        "sampling": sampling_config(mode, if mode == Sampling::Random { opts.trials } else { space }, opts),
        "tolerance": opts.tol,
    });
    Ok(VerificationReport::new(
        config,
        vec![odd_row, closure_row, cross_row, gfi_row],
    ))
}
