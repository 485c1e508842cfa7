//! Sparse multivariate polynomials over an exact [`Field`].
//!
//! Terms live in a `BTreeMap` keyed by [`Monomial`], whose order is graded
//! lexicographic with `x1 > x2 > ...`; the last entry is the leading term.
//! Zero coefficients are never stored.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::{common_denominator, Field, Scalar};

/// Exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }
    pub fn exps(&self) -> &[u32] {
        &self.0
    }
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
    pub fn weighted_degree(&self, weights: &[u32]) -> u32 {
        self.0.iter().zip(weights).map(|(e, w)| e * w).sum()
    }
    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug)]
pub struct MultiPoly {
    nvars: usize,
    field: Field,
    terms: BTreeMap<Monomial, Scalar>,
}

/// Equality is mathematical: same variable count and same terms. The field tag
/// is not compared (a polynomial with rational coefficients is equal to itself
/// viewed over an extension).
impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.terms == other.terms
    }
}
impl Eq for MultiPoly {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

/// Checked binary arithmetic; the operator impls panic on mismatched
/// variable counts, this reports it.
pub fn poly_arith(a: &MultiPoly, b: &MultiPoly, op: PolyOp) -> Result<MultiPoly> {
    if a.nvars != b.nvars {
        return Err(Error::VarCountMismatch(a.nvars, b.nvars));
    }
    a.field.join(&b.field)?;
    Ok(match op {
        PolyOp::Add => a + b,
        PolyOp::Sub => a - b,
        PolyOp::Mul => a * b,
    })
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            field: Field::Rational,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        Self::monomial(Monomial::one(nvars), c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Scalar::one())
    }

    /// The coordinate function `x_i` (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index {i} out of range for {nvars} variables");
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(Monomial(e), Scalar::one())
    }

    pub fn monomial(m: Monomial, c: Scalar) -> Self {
        let nvars = m.0.len();
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.field = c.field();
            p.terms.insert(m, c);
        }
        p
    }

    /// Build from `(exponents, coefficient)` pairs; repeated monomials are summed.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, Scalar)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector has wrong length");
            p.add_term(Monomial(e), c);
        }
        p
    }

    /// Linear form `sum_i coeffs[i] x_i`.
    pub fn linear_form(coeffs: &[Scalar]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_term(Monomial(e), c.clone());
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        self.absorb_field(&c);
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn absorb_field(&mut self, c: &Scalar) {
        if let Scalar::Extension(_) = c {
            self.field = self
                .field
                .join(&c.field())
                .expect("coefficient from an incompatible extension field");
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Tag the polynomial as living over `field` (must contain its coefficients).
    pub fn with_field(mut self, field: Field) -> Result<Self> {
        self.field = self.field.join(&field)?;
        Ok(self)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> Scalar {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Weighted degree if the polynomial is weighted-homogeneous (zero gives `None`).
    pub fn weighted_degree(&self, weights: &[u32]) -> Option<u32> {
        let mut it = self.terms.keys().map(|m| m.weighted_degree(weights));
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn homogeneous_components(&self) -> BTreeMap<u32, MultiPoly> {
        let mut out: BTreeMap<u32, MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree())
                .or_insert_with(|| MultiPoly::zero(self.nvars))
                .add_term(m.clone(), c.clone());
        }
        out
    }

    /// Leading term in graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> Option<&Scalar> {
        self.leading_term().map(|(_, c)| c)
    }

    /// Scale so that the leading coefficient is 1 (zero stays zero).
    pub fn monic(&self) -> MultiPoly {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(c) => self.scale(&c.inv().expect("leading coefficient is nonzero")),
        }
    }

    pub fn scale(&self, c: &Scalar) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        let mut out = MultiPoly::zero(self.nvars);
        out.field = self.field.clone();
        out.absorb_field(c);
        for (m, a) in &self.terms {
            let v = a * c;
            if !v.is_zero() {
                out.terms.insert(m.clone(), v);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut acc = MultiPoly::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Formal partial derivative in variable `i` (0-based).
    pub fn partial_derivative(&self, i: usize) -> Result<MultiPoly> {
        if i >= self.nvars {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.nvars,
            });
        }
        Ok(self.diff(i))
    }

    /// Partial derivative; panics on an out-of-range index.
    pub fn diff(&self, i: usize) -> MultiPoly {
        assert!(i < self.nvars, "variable index {i} out of range");
        let mut out = MultiPoly::zero(self.nvars);
        out.field = self.field.clone();
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut m2 = m.0.clone();
            m2[i] -= 1;
            out.terms.insert(Monomial(m2), c * &Scalar::int(e as i64));
        }
        out
    }

    /// `sum_i zeta_i d/dx_i`.
    pub fn directional_derivative(&self, zeta: &[Scalar]) -> Result<MultiPoly> {
        if zeta.len() != self.nvars {
            return Err(Error::VarCountMismatch(zeta.len(), self.nvars));
        }
        let mut out = MultiPoly::zero(self.nvars);
        for (i, z) in zeta.iter().enumerate() {
            if !z.is_zero() {
                out = &out + &self.diff(i).scale(z);
            }
        }
        Ok(out)
    }

    /// Euler operator `sum_i x_i d/dx_i`.
    pub fn euler(&self) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        out.field = self.field.clone();
        for (m, c) in &self.terms {
            let d = m.degree();
            if d > 0 {
                out.terms.insert(m.clone(), c * &Scalar::int(d as i64));
            }
        }
        out
    }

    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.nvars);
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t = &t * &x.pow(e);
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// `p(A x)` for a square matrix `A` given by rows.
    pub fn substitute_linear(&self, a: &[Vec<Scalar>]) -> Result<MultiPoly> {
        let n = self.nvars;
        if a.len() != n || a.iter().any(|row| row.len() != n) {
            return Err(Error::Shape(format!("expected a {n}x{n} matrix")));
        }
        if let Some(map) = monomial_map(a) {
            return Ok(self.substitute_monomial(&map));
        }
        let forms: Vec<MultiPoly> = a.iter().map(|row| MultiPoly::linear_form(row)).collect();
        Ok(self.compose(&forms))
    }

    /// Substitution `x_i -> scale_i * x_{target_i}` (a monomial matrix).
    pub fn substitute_monomial(&self, map: &[(usize, Scalar)]) -> MultiPoly {
        assert_eq!(map.len(), self.nvars);
        let mut out = MultiPoly::zero(self.nvars);
        out.field = self.field.clone();
        let mut powers: Vec<HashMap<u32, Scalar>> = vec![HashMap::new(); self.nvars];
        for (m, c) in &self.terms {
            let mut e2 = vec![0; self.nvars];
            let mut coef = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let (target, s) = &map[i];
                e2[*target] += e;
                if !s.is_one() {
                    let f = powers[i].entry(e).or_insert_with(|| s.pow(e));
                    coef = &coef * f;
                }
            }
            out.add_term(Monomial(e2), coef);
        }
        out
    }

    /// Substitute `x_i -> polys[i]`; the result lives in the variables of `polys`.
    pub fn compose(&self, polys: &[MultiPoly]) -> MultiPoly {
        assert_eq!(polys.len(), self.nvars, "one polynomial per variable is required");
        let target_vars = polys.first().map(|p| p.nvars).unwrap_or(0);
        let mut cache: Vec<Vec<MultiPoly>> = polys
            .iter()
            .map(|p| vec![MultiPoly::one(target_vars), p.clone()])
            .collect();
        let mut out = MultiPoly::zero(target_vars);
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(target_vars, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while cache[i].len() <= e as usize {
                    let next = cache[i].last().unwrap() * &polys[i];
                    cache[i].push(next);
                }
                t = &t * &cache[i][e as usize];
            }
            out = &out + &t;
        }
        out
    }

    /// Exact quotient by the linear form `(gamma, x)`; errors on a nonzero remainder.
    pub fn exact_divide_by_linear_form(&self, gamma: &[Scalar]) -> Result<MultiPoly> {
        let n = self.nvars;
        if gamma.len() != n {
            return Err(Error::VarCountMismatch(gamma.len(), n));
        }
        let k = gamma
            .iter()
            .position(|g| !g.is_zero())
            .ok_or_else(|| Error::InvalidParameter("division by the zero linear form".into()))?;
        if self.is_zero() {
            return Ok(MultiPoly::zero(n));
        }
        let lead_inv = gamma[k].inv().unwrap();
        let mut rest_coeffs = gamma.to_vec();
        rest_coeffs[k] = Scalar::zero();
        let rest = MultiPoly::linear_form(&rest_coeffs);

        // Split p = sum_e p_e x_k^e.
        let mut slices: BTreeMap<u32, MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.0[k];
            let mut m2 = m.0.clone();
            m2[k] = 0;
            slices
                .entry(e)
                .or_insert_with(|| MultiPoly::zero(n))
                .add_term(Monomial(m2), c.clone());
        }
        let top = *slices.keys().next_back().unwrap();
        let mut quotient = MultiPoly::zero(n);
        // q_{e-1} = (p_e - rest * q_e) / gamma_k, from the top down.
        let mut q_e = MultiPoly::zero(n);
        for e in (1..=top).rev() {
            let p_e = slices.remove(&e).unwrap_or_else(|| MultiPoly::zero(n));
            let q_prev = (&p_e - &(&rest * &q_e)).scale(&lead_inv);
            quotient = &quotient + &q_prev.shift_var(k, e - 1);
            q_e = q_prev;
        }
        let p_0 = slices.remove(&0).unwrap_or_else(|| MultiPoly::zero(n));
        let remainder = &p_0 - &(&rest * &q_e);
        if !remainder.is_zero() {
            return Err(Error::NotDivisible(MultiPoly::linear_form(gamma).to_string()));
        }
        Ok(quotient)
    }

    /// Multiply by `x_k^e`.
    fn shift_var(&self, k: usize, e: u32) -> MultiPoly {
        if e == 0 {
            return self.clone();
        }
        let mut out = MultiPoly::zero(self.nvars);
        out.field = self.field.clone();
        for (m, c) in &self.terms {
            let mut m2 = m.0.clone();
            m2[k] += e;
            out.terms.insert(Monomial(m2), c.clone());
        }
        out
    }

    /// Substitute the last variable by minus the sum of the others, giving a
    /// polynomial in one fewer variable (restriction to `sum x_i = 0`).
    pub fn restrict_to_sum_zero(&self) -> MultiPoly {
        let n = self.nvars;
        assert!(n >= 2);
        let mut forms: Vec<MultiPoly> = (0..n - 1).map(|i| MultiPoly::var(n - 1, i)).collect();
        forms.push(-&MultiPoly::linear_form(&vec![Scalar::one(); n - 1]));
        self.compose(&forms)
    }

    /// `Some(k)` with `self = k * other` when both are nonzero and proportional.
    pub fn ratio_to(&self, other: &MultiPoly) -> Option<Scalar> {
        if self.is_zero() || other.is_zero() || self.len() != other.len() || self.nvars != other.nvars {
            return None;
        }
        let (m, c) = self.leading_term()?;
        let k = c * &other.terms.get(m)?.inv()?;
        (other.scale(&k) == *self).then_some(k)
    }

    /// `p(x - mean(x) * (1, ..., 1))`: the translation-invariant polynomial
    /// agreeing with `p` on `sum x_i = 0`.
    pub fn center(&self) -> MultiPoly {
        let n = self.nvars;
        let off = Scalar::frac(-1, n as i64);
        let diag = &Scalar::one() + &off;
        let a: Vec<Vec<Scalar>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { diag.clone() } else { off.clone() }).collect())
            .collect();
        self.substitute_linear(&a).expect("square matrix")
    }

    fn combine(&self, other: &MultiPoly, negate: bool) -> MultiPoly {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            if negate {
                out.add_term(m.clone(), -c);
            } else {
                out.add_term(m.clone(), c.clone());
            }
        }
        out.field = out.field.join(&other.field).expect("incompatible fields");
        out
    }

    /// Integer numerators over one common denominator, when every
    /// coefficient is rational.
    fn integer_form(&self) -> Option<(BigInt, Vec<(&Monomial, BigInt)>)> {
        let rats = self.terms.values().map(Scalar::as_rational).collect::<Option<Vec<_>>>()?;
        let den = common_denominator(rats.iter().copied());
        let nums = self
            .terms
            .keys()
            .zip(rats)
            .map(|(m, r)| (m, r.numer() * (&den / r.denom())))
            .collect();
        Some((den, nums))
    }

    fn product(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        if let (Some((da, a)), Some((db, b))) = (self.integer_form(), other.integer_form()) {
            let mut acc: HashMap<Monomial, BigInt> = HashMap::with_capacity(a.len() * b.len());
            for (ma, ca) in &a {
                for (mb, cb) in &b {
                    let v = ca * cb;
                    match acc.entry(ma.mul(mb)) {
                        std::collections::hash_map::Entry::Vacant(e) => {
                            e.insert(v);
                        }
                        std::collections::hash_map::Entry::Occupied(mut e) => {
                            *e.get_mut() += v;
                        }
                    }
                }
            }
            let den = da * db;
            return MultiPoly {
                nvars: self.nvars,
                field: self.field.join(&other.field).expect("incompatible fields"),
                terms: acc
                    .into_iter()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(m, c)| (m, Scalar::Rational(BigRational::new(c, den.clone()))))
                    .collect(),
            };
        }
        let field = self.field.join(&other.field).expect("incompatible fields");
        let mut acc: HashMap<Monomial, Scalar> = HashMap::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let v = ca * cb;
                match acc.entry(m) {
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(v);
                    }
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        let s = e.get() + &v;
                        *e.get_mut() = s;
                    }
                }
            }
        }
        MultiPoly {
            nvars: self.nvars,
            field,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

/// Detect a monomial (generalized permutation) matrix: `x_i -> s x_j` per row.
fn monomial_map(a: &[Vec<Scalar>]) -> Option<Vec<(usize, Scalar)>> {
    // p(Ax): the variable x_i of p becomes sum_j a[i][j] x_j.
    let mut out = Vec::with_capacity(a.len());
    for row in a {
        let mut nz = row.iter().enumerate().filter(|(_, c)| !c.is_zero());
        let (j, c) = nz.next()?;
        if nz.next().is_some() {
            return None;
        }
        out.push((j, c.clone()));
    }
    Some(out)
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.combine(rhs, false)
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.combine(rhs, true)
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.product(rhs)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&Scalar::int(-1))
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: MultiPoly) -> MultiPoly {
        &self + &rhs
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        &self - &rhs
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, e)
                    }
                })
                .collect();
            let (neg, mag) = match c.as_rational() {
                Some(r) if r < &num_rational::BigRational::from_integer(0.into()) => {
                    (true, Scalar::Rational(-r))
                }
                _ => (false, c.clone()),
            };
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{mag}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldContext;

    fn x(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(n, i)
    }

    #[test]
    fn arithmetic_examples() {
        let (x1, x2) = (x(2, 0), x(2, 1));
        assert_eq!(
            poly_arith(&x1, &x2, PolyOp::Mul).unwrap(),
            MultiPoly::from_terms(2, [(vec![1, 1], Scalar::one())])
        );
        let lhs = &(&x1 + &x2) * &(&x1 - &x2);
        assert_eq!(lhs, &x1.pow(2) - &x2.pow(2));
        let p = &x1.pow(3) + &x2.scale(&Scalar::frac(1, 3));
        assert_eq!(&p + &MultiPoly::zero(2), p);
        assert!(matches!(
            poly_arith(&x1, &x(3, 0), PolyOp::Add),
            Err(Error::VarCountMismatch(2, 3))
        ));
        let prod = &x1.pow(2) * &(&x1 + &x2).pow(3);
        assert!(prod.is_homogeneous());
        assert_eq!(prod.total_degree(), Some(5));
    }

    #[test]
    fn derivatives() {
        let (x1, x2) = (x(2, 0), x(2, 1));
        assert_eq!(x1.pow(3).partial_derivative(0).unwrap(), x1.pow(2).scale(&Scalar::int(3)));
        assert!(x2.partial_derivative(0).unwrap().is_zero());
        assert_eq!((&x1.pow(2) * &x2).partial_derivative(1).unwrap(), x1.pow(2));
        assert!(matches!(x1.partial_derivative(2), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn linear_substitution() {
        let (x1, x2) = (x(2, 0), x(2, 1));
        let swap = vec![vec![Scalar::zero(), Scalar::one()], vec![Scalar::one(), Scalar::zero()]];
        assert_eq!(x1.substitute_linear(&swap).unwrap(), x2);
        let id = vec![vec![Scalar::one(), Scalar::zero()], vec![Scalar::zero(), Scalar::one()]];
        assert_eq!(x1.substitute_linear(&id).unwrap(), x1);
        // Reflection in e1 + e2 (B2), orthogonal: quadratic form preserved.
        let refl = vec![vec![Scalar::zero(), Scalar::int(-1)], vec![Scalar::int(-1), Scalar::zero()]];
        let q = &x1.pow(2) + &x2.pow(2);
        assert_eq!(q.substitute_linear(&refl).unwrap(), q);
        // A dense rotation-like matrix goes through the general path.
        let a = vec![
            vec![Scalar::frac(3, 5), Scalar::frac(-4, 5)],
            vec![Scalar::frac(4, 5), Scalar::frac(3, 5)],
        ];
        assert_eq!(q.substitute_linear(&a).unwrap(), q);
        assert!(x1.substitute_linear(&[vec![Scalar::one()]]).is_err());
    }

    #[test]
    fn linear_division_examples() {
        let (x1, x2) = (x(2, 0), x(2, 1));
        let one = Scalar::one();
        let m1 = Scalar::int(-1);
        let q = (&x1.pow(2) - &x2.pow(2)).exact_divide_by_linear_form(&[one.clone(), m1.clone()]).unwrap();
        assert_eq!(q, &x1 + &x2);
        assert!(MultiPoly::zero(2).exact_divide_by_linear_form(&[one.clone(), one.clone()]).unwrap().is_zero());
        let s = &x1 + &x2;
        assert_eq!(s.pow(3).exact_divide_by_linear_form(&[one.clone(), one.clone()]).unwrap(), s.pow(2));
        assert!(matches!(
            (&x1.pow(2) + &x2).exact_divide_by_linear_form(&[one.clone(), m1]),
            Err(Error::NotDivisible(_))
        ));
    }

    #[test]
    fn cyclotomic_coefficients() {
        let ctx = FieldContext::cyclotomic(3).unwrap();
        let w = ctx.generator();
        let (x1, x2) = (x(2, 0), x(2, 1));
        // x1^3 - x2^3 is divisible by x1 - w x2.
        let p = &x1.pow(3) - &x2.pow(3);
        let q = p.exact_divide_by_linear_form(&[Scalar::one(), -&w]).unwrap();
        let back = &q * &MultiPoly::linear_form(&[Scalar::one(), -&w]);
        assert_eq!(back, p);
        assert_eq!(q.field(), &Field::Extension(ctx));
    }

    #[test]
    fn grlex_leading_term() {
        let (x1, x2) = (x(2, 0), x(2, 1));
        let p = &(&x2.pow(3) + &x1.scale(&Scalar::int(5))) + &(&x1 * &x2.pow(2)).scale(&Scalar::int(2));
        let (m, c) = p.leading_term().unwrap();
        assert_eq!(m.exps(), &[1, 2]);
        assert_eq!(c, &Scalar::int(2));
        assert_eq!(p.to_string(), "2*x1*x2^2 + x2^3 + 5*x1");
    }

    #[test]
    fn restriction_to_hyperplane() {
        let p = &x(3, 0) - &x(3, 2);
        // z3 -> -z1 - z2
        let r = p.restrict_to_sum_zero();
        assert_eq!(r, &x(2, 0).scale(&Scalar::int(2)) + &x(2, 1));
    }
}
