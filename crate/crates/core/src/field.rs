//! Exact scalars: arbitrary-precision rationals and elements of simple
//! algebraic extensions `Q[w]/(mu(w))` (quadratic and cyclotomic).
//!
//! A [`Scalar`] is a tagged value. Extension elements always carry a handle
//! to their [`FieldContext`] and are kept reduced modulo the minimal
//! polynomial; an extension element that happens to lie in `Q` is stored as a
//! plain rational, so equality is structural.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Which simple extension a context describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtensionKind {
    /// `Q(sqrt(d))` for square-free `d`.
    QuadraticSqrt(i64),
    /// `Q(zeta_l)`, the `l`-th cyclotomic field.
    Cyclotomic(u32),
}

/// Minimal polynomial data for a simple algebraic extension of `Q`.
#[derive(Debug)]
pub struct FieldContext {
    kind: ExtensionKind,
    /// Monic minimal polynomial, coefficients from low to high degree.
    modulus: Vec<BigRational>,
}

impl PartialEq for FieldContext {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}
impl Eq for FieldContext {}

impl FieldContext {
    /// `Q(sqrt(d))`; `d` must be square-free and different from 0 and 1.
    pub fn quadratic(d: i64) -> Result<Arc<Self>> {
        if d == 0 || d == 1 || !is_square_free(d) {
            return Err(Error::InvalidParameter(format!(
                "Q(sqrt({d})) needs a square-free d other than 0 and 1"
            )));
        }
        let modulus = vec![rat(-d), BigRational::zero(), BigRational::one()];
        Ok(Arc::new(FieldContext {
            kind: ExtensionKind::QuadraticSqrt(d),
            modulus,
        }))
    }

    /// The `l`-th cyclotomic field, with `w = exp(2 pi i / l)`.
    pub fn cyclotomic(l: u32) -> Result<Arc<Self>> {
        if l == 0 {
            return Err(Error::InvalidParameter("cyclotomic order must be positive".into()));
        }
        Ok(Arc::new(FieldContext {
            kind: ExtensionKind::Cyclotomic(l),
            modulus: cyclotomic_polynomial(l),
        }))
    }

    pub fn kind(&self) -> ExtensionKind {
        self.kind
    }

    /// Degree of the extension over `Q`.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[BigRational] {
        &self.modulus
    }

    /// The distinguished generator: `sqrt(d)` or `w = zeta_l`.
    pub fn generator(self: &Arc<Self>) -> Scalar {
        let mut coeffs = vec![BigRational::zero(); 2];
        coeffs[1] = BigRational::one();
        Scalar::from_coeffs(self, coeffs)
    }

    /// `w^k` for a cyclotomic context (negative `k` allowed).
    pub fn root_power(self: &Arc<Self>, k: i64) -> Scalar {
        let l = match self.kind {
            ExtensionKind::Cyclotomic(l) => l as i64,
            ExtensionKind::QuadraticSqrt(_) => {
                panic!("root_power is only defined for cyclotomic contexts")
            }
        };
        let e = k.rem_euclid(l) as usize;
        let mut coeffs = vec![BigRational::zero(); e + 1];
        coeffs[e] = BigRational::one();
        Scalar::from_coeffs(self, coeffs)
    }

    /// Reduce a coefficient vector modulo the minimal polynomial.
    fn reduce(&self, mut coeffs: Vec<BigRational>) -> Vec<BigRational> {
        let deg = self.degree();
        while coeffs.len() > deg {
            let top = coeffs.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = coeffs.len() - deg;
            for (k, m) in self.modulus[..deg].iter().enumerate() {
                if !m.is_zero() {
                    coeffs[shift + k] -= &top * m;
                }
            }
        }
        coeffs.resize(deg, BigRational::zero());
        coeffs
    }

    fn param(&self) -> i64 {
        match self.kind {
            ExtensionKind::QuadraticSqrt(d) => d,
            ExtensionKind::Cyclotomic(l) => l as i64,
        }
    }
}

/// The coefficient domain of a polynomial.
#[derive(Debug, Clone, Default)]
pub enum Field {
    #[default]
    Rational,
    Extension(Arc<FieldContext>),
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Field::Rational, Field::Rational) => true,
            (Field::Extension(a), Field::Extension(b)) => a == b,
            _ => false,
        }
    }
}
impl Eq for Field {}

impl Field {
    /// Smallest field containing both, if the two are compatible.
    pub fn join(&self, other: &Field) -> Result<Field> {
        match (self, other) {
            (Field::Rational, f) | (f, Field::Rational) => Ok(f.clone()),
            (Field::Extension(a), Field::Extension(b)) if a == b => Ok(self.clone()),
            _ => Err(Error::FieldMismatch(format!("{self} vs {other}"))),
        }
    }

    /// `("Q" | "Qsqrt" | "cyclotomic", param)` as used by the JSON schema.
    pub fn tag(&self) -> (&'static str, i64) {
        match self {
            Field::Rational => ("Q", 0),
            Field::Extension(ctx) => match ctx.kind {
                ExtensionKind::QuadraticSqrt(_) => ("Qsqrt", ctx.param()),
                ExtensionKind::Cyclotomic(_) => ("cyclotomic", ctx.param()),
            },
        }
    }

    pub fn from_tag(kind: &str, param: i64) -> Result<Field> {
        match kind {
            "Q" => Ok(Field::Rational),
            "Qsqrt" => Ok(Field::Extension(FieldContext::quadratic(param)?)),
            "cyclotomic" => {
                let l = u32::try_from(param)
                    .map_err(|_| Error::InvalidParameter(format!("bad cyclotomic order {param}")))?;
                Ok(Field::Extension(FieldContext::cyclotomic(l)?))
            }
            other => Err(Error::InvalidParameter(format!("unknown field kind {other:?}"))),
        }
    }

    pub fn context(&self) -> Option<&Arc<FieldContext>> {
        match self {
            Field::Rational => None,
            Field::Extension(ctx) => Some(ctx),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Extension(ctx) => match ctx.kind {
                ExtensionKind::QuadraticSqrt(d) => write!(f, "Q(sqrt({d}))"),
                ExtensionKind::Cyclotomic(l) => write!(f, "Q(zeta_{l})"),
            },
        }
    }
}

/// An element of a simple extension that is not in `Q`.
#[derive(Debug, Clone)]
pub struct ExtElem {
    ctx: Arc<FieldContext>,
    coeffs: Vec<BigRational>,
}

impl ExtElem {
    pub fn context(&self) -> &Arc<FieldContext> {
        &self.ctx
    }
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }
}

/// Exact scalar.
#[derive(Debug, Clone)]
pub enum Scalar {
    Rational(BigRational),
    Extension(ExtElem),
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a == b,
            (Scalar::Extension(a), Scalar::Extension(b)) => a.ctx == b.ctx && a.coeffs == b.coeffs,
            _ => false,
        }
    }
}
impl Eq for Scalar {}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rational(BigRational::zero())
    }
    pub fn one() -> Self {
        Scalar::Rational(BigRational::one())
    }
    pub fn int(n: i64) -> Self {
        Scalar::Rational(rat(n))
    }
    /// `n/d`; panics if `d == 0`.
    pub fn frac(n: i64, d: i64) -> Self {
        Scalar::Rational(ratio(n, d))
    }

    /// Build from a (not necessarily reduced) coefficient vector over `ctx`.
    pub fn from_coeffs(ctx: &Arc<FieldContext>, coeffs: Vec<BigRational>) -> Self {
        let coeffs = ctx.reduce(coeffs);
        if coeffs[1..].iter().all(Zero::is_zero) {
            Scalar::Rational(coeffs.into_iter().next().unwrap_or_else(BigRational::zero))
        } else {
            Scalar::Extension(ExtElem {
                ctx: ctx.clone(),
                coeffs,
            })
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Extension(_) => false,
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_one())
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Extension(_) => None,
        }
    }

    /// The field this scalar needs.
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Extension(e) => Field::Extension(e.ctx.clone()),
        }
    }

    /// Coefficient vector over `ctx` (length `deg ctx`).
    pub fn coeffs_in(&self, ctx: &FieldContext) -> Vec<BigRational> {
        match self {
            Scalar::Rational(r) => {
                let mut v = vec![BigRational::zero(); ctx.degree()];
                v[0] = r.clone();
                v
            }
            Scalar::Extension(e) => {
                assert!(*e.ctx == *ctx, "scalar from a different extension field");
                e.coeffs.clone()
            }
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rational(r) => (!r.is_zero()).then(|| Scalar::Rational(r.recip())),
            Scalar::Extension(e) => Some(ext_inverse(e)),
        }
    }

    pub fn pow(&self, k: u32) -> Scalar {
        let mut acc = Scalar::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    fn ext_binop(
        a: &Scalar,
        b: &Scalar,
        f: impl Fn(&[BigRational], &[BigRational], &FieldContext) -> Vec<BigRational>,
    ) -> Scalar {
        let ctx = match (a, b) {
            (Scalar::Extension(x), Scalar::Extension(y)) => {
                assert!(x.ctx == y.ctx, "arithmetic across different extension fields");
                x.ctx.clone()
            }
            (Scalar::Extension(x), _) | (_, Scalar::Extension(x)) => x.ctx.clone(),
            _ => unreachable!(),
        };
        let va = a.coeffs_in(&ctx);
        let vb = b.coeffs_in(&ctx);
        let out = f(&va, &vb, &ctx);
        Scalar::from_coeffs(&ctx, out)
    }
}

fn ext_inverse(e: &ExtElem) -> Scalar {
    // Solve (multiplication-by-e matrix) * y = 1 over Q.
    let deg = e.ctx.degree();
    let mut cols = Vec::with_capacity(deg);
    for k in 0..deg {
        let mut basis = vec![BigRational::zero(); k + 1];
        basis[k] = BigRational::one();
        let prod = poly_mul_rat(&e.coeffs, &basis);
        cols.push(e.ctx.reduce(prod));
    }
    // Augmented matrix rows: row r = [cols[0][r], ..., cols[deg-1][r] | rhs_r].
    let mut m: Vec<Vec<BigRational>> = (0..deg)
        .map(|r| {
            let mut row: Vec<BigRational> = (0..deg).map(|c| cols[c][r].clone()).collect();
            row.push(if r == 0 { BigRational::one() } else { BigRational::zero() });
            row
        })
        .collect();
    for col in 0..deg {
        let piv = (col..deg)
            .find(|&r| !m[r][col].is_zero())
            .expect("nonzero element of a field must be invertible");
        m.swap(col, piv);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..deg {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=deg {
                    let d = &f * &m[col][c];
                    m[r][c] -= d;
                }
            }
        }
    }
    let y: Vec<BigRational> = m.into_iter().map(|row| row[deg].clone()).collect();
    Scalar::from_coeffs(&e.ctx, y)
}

fn poly_mul_rat(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// Univariate exact division `a / b` over `Q` (coefficients low to high); the
/// remainder must vanish.
fn poly_div_exact(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let lead = b[db].clone();
    let mut q = vec![BigRational::zero(); rem.len().saturating_sub(db)];
    while rem.len() > db {
        let top = rem.pop().unwrap();
        let k = rem.len() - db;
        let c = &top / &lead;
        for j in 0..db {
            rem[k + j] -= &c * &b[j];
        }
        q[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    q
}

/// The `l`-th cyclotomic polynomial, coefficients low to high.
pub fn cyclotomic_polynomial(l: u32) -> Vec<BigRational> {
    let mut p = vec![BigRational::zero(); l as usize + 1];
    p[0] = rat(-1);
    p[l as usize] = BigRational::one();
    for d in 1..l {
        if l.is_multiple_of(d) {
            p = poly_div_exact(&p, &cyclotomic_polynomial(d));
        }
    }
    p
}

fn is_square_free(d: i64) -> bool {
    let n = d.unsigned_abs();
    let mut k = 2u64;
    while k * k <= n {
        if n.is_multiple_of(k * k) {
            return false;
        }
        k += 1;
    }
    true
}

macro_rules! forward_value_ops {
    ($tr:ident, $method:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            _ => Scalar::ext_binop(self, rhs, |a, b, _| {
                a.iter().zip(b).map(|(x, y)| x + y).collect()
            }),
        }
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            _ => Scalar::ext_binop(self, rhs, |a, b, _| {
                a.iter().zip(b).map(|(x, y)| x - y).collect()
            }),
        }
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Rational(a), Scalar::Extension(e)) | (Scalar::Extension(e), Scalar::Rational(a)) => {
                if a.is_zero() {
                    return Scalar::zero();
                }
                Scalar::Extension(ExtElem {
                    ctx: e.ctx.clone(),
                    coeffs: e.coeffs.iter().map(|c| c * a).collect(),
                })
            }
            _ => Scalar::ext_binop(self, rhs, |a, b, ctx| ctx.reduce(poly_mul_rat(a, b))),
        }
    }
}

forward_value_ops!(Add, add);
forward_value_ops!(Sub, sub);
forward_value_ops!(Mul, mul);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Extension(e) => Scalar::Extension(ExtElem {
                ctx: e.ctx.clone(),
                coeffs: e.coeffs.iter().map(|c| -c).collect(),
            }),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::Rational(r)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

/// Format a rational as `p/q` in lowest terms (always with a denominator).
pub fn format_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parse `p/q` or `p`; rejects a zero denominator.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("malformed rational {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (
            BigInt::from_str(n.trim()).map_err(|_| bad())?,
            BigInt::from_str(d.trim()).map_err(|_| bad())?,
        ),
        None => (BigInt::from_str(s).map_err(|_| bad())?, BigInt::one()),
    };
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(n, d))
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Extension(e) => {
                let gen = match e.ctx.kind {
                    ExtensionKind::QuadraticSqrt(d) => format!("sqrt({d})"),
                    ExtensionKind::Cyclotomic(_) => "w".to_string(),
                };
                let mut parts = Vec::new();
                for (k, c) in e.coeffs.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let cs = if c.denom().is_one() {
                        c.numer().to_string()
                    } else {
                        format!("{}/{}", c.numer(), c.denom())
                    };
                    parts.push(match k {
                        0 => cs,
                        1 => format!("{cs}*{gen}"),
                        _ => format!("{cs}*{gen}^{k}"),
                    });
                }
                write!(f, "({})", parts.join(" + "))
            }
        }
    }
}

/// `nu (nu-1) ... (nu-k+1) / k!`, and 1 for `k = 0`.
pub fn generalized_binomial(nu: &BigRational, k: u32) -> BigRational {
    let mut acc = BigRational::one();
    for j in 0..k {
        acc = acc * (nu - rat(j as i64)) / rat(j as i64 + 1);
    }
    acc
}

/// Exact rational square root, if it exists.
pub fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| BigRational::new(n, d))
}

/// A square root of `r`: rational when possible, otherwise `(k/q) sqrt(d)`
/// in `Q(sqrt(d))` with `d` the square-free part of `r`.
pub fn sqrt_in_extension(r: &BigRational) -> Result<Scalar> {
    if let Some(q) = rational_sqrt(r) {
        return Ok(Scalar::Rational(q));
    }
    let pq = r.numer() * r.denom();
    let pq: i64 = pq
        .to_i64()
        .ok_or_else(|| Error::InvalidParameter(format!("sqrt({r}) is too large to factor")))?;
    let mut d = pq.signum();
    let mut k: i64 = 1;
    let mut n = pq.unsigned_abs();
    let mut f = 2u64;
    while f * f <= n {
        while n.is_multiple_of(f * f) {
            n /= f * f;
            k *= f as i64;
        }
        if n.is_multiple_of(f) {
            n /= f;
            d *= f as i64;
        }
        f += 1;
    }
    d *= n as i64;
    let ctx = FieldContext::quadratic(d)?;
    let factor = BigRational::new(k.into(), r.denom().clone());
    Ok(&Scalar::Rational(factor) * &ctx.generator())
}

/// Least common multiple of denominators of a slice of rationals.
pub fn common_denominator<'a>(it: impl IntoIterator<Item = &'a BigRational>) -> BigInt {
    it.into_iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_examples() {
        assert_eq!(generalized_binomial(&ratio(7, 3), 0), rat(1));
        assert_eq!(generalized_binomial(&ratio(1, 2), 2), ratio(-1, 8));
        assert_eq!(generalized_binomial(&ratio(5, 3), 1), ratio(5, 3));
        assert_eq!(generalized_binomial(&rat(5), 2), rat(10));
        assert_eq!(generalized_binomial(&rat(2), 3), rat(0));
    }

    #[test]
    fn square_roots() {
        let r = ratio(-49, 243);
        let s = sqrt_in_extension(&r).unwrap();
        assert_eq!(&s * &s, Scalar::Rational(r));
        assert!(matches!(s.field(), Field::Extension(_)));
        assert_eq!(sqrt_in_extension(&ratio(9, 4)).unwrap(), Scalar::frac(3, 2));
        let t = sqrt_in_extension(&ratio(12, 5)).unwrap();
        assert_eq!(&t * &t, Scalar::frac(12, 5));
    }

    #[test]
    fn binomial_pascal() {
        for (n, d) in [(1, 2), (-3, 4), (7, 5), (3, 1)] {
            let nu = ratio(n, d);
            for k in 1..7 {
                let lhs = generalized_binomial(&nu, k);
                let nu1 = &nu - rat(1);
                let rhs = generalized_binomial(&nu1, k) + generalized_binomial(&nu1, k - 1);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn cyclotomic_polys() {
        let show = |l| cyclotomic_polynomial(l).iter().map(|c| c.to_string()).collect::<Vec<_>>();
        assert_eq!(show(1), ["-1", "1"]);
        assert_eq!(show(2), ["1", "1"]);
        assert_eq!(show(3), ["1", "1", "1"]);
        assert_eq!(show(4), ["1", "0", "1"]);
        assert_eq!(show(6), ["1", "-1", "1"]);
        assert_eq!(cyclotomic_polynomial(12).len(), 5);
    }

    #[test]
    fn roots_of_unity() {
        for l in 2..=8u32 {
            let ctx = FieldContext::cyclotomic(l).unwrap();
            let w = ctx.generator();
            assert_eq!(w.pow(l), Scalar::one(), "w^{l} = 1");
            for b in 1..l {
                let mut sum = Scalar::zero();
                for a in 0..l {
                    sum = &sum + &w.pow(a * b);
                }
                assert!(sum.is_zero(), "sum_a w^(ab) = 0 for l={l}, b={b}");
            }
            assert_eq!(&ctx.root_power(-1) * &w, Scalar::one());
        }
        // l = 2 collapses to Q.
        let w2 = FieldContext::cyclotomic(2).unwrap().generator();
        assert_eq!(w2, Scalar::int(-1));
    }

    #[test]
    fn extension_inverse() {
        let ctx = FieldContext::cyclotomic(5).unwrap();
        let w = ctx.generator();
        let x = &(&w * &w) + &Scalar::frac(3, 7);
        let y = x.inv().unwrap();
        assert_eq!(&x * &y, Scalar::one());

        let q = FieldContext::quadratic(2).unwrap();
        let s = q.generator();
        assert_eq!(&s * &s, Scalar::int(2));
        let z = &s + &Scalar::one();
        assert_eq!(&z * &z.inv().unwrap(), Scalar::one());
        assert!(FieldContext::quadratic(8).is_err());
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("-6/4").unwrap(), ratio(-3, 2));
        assert_eq!(parse_rational("5").unwrap(), rat(5));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert_eq!(format_rational(&ratio(4, -6)), "-2/3");
    }

    #[test]
    fn sqrt_of_rationals() {
        assert_eq!(rational_sqrt(&ratio(9, 4)), Some(ratio(3, 2)));
        assert_eq!(rational_sqrt(&ratio(2, 1)), None);
        assert_eq!(rational_sqrt(&ratio(-1, 1)), None);
    }
}
