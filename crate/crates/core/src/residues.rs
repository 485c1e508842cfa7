//! Closed-form invariant twisted periods of `A_n`, `B_n`, `D_n` and the
//! singular families of the complex reflection groups `G(l, 1, n)`.
//!
//! Every residue is evaluated through its multinomial expansion, so no
//! branch of a fractional power is ever chosen.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::{generalized_binomial, ratio, FieldContext, Scalar};
use crate::linalg::PolySpan;
use crate::poly::MultiPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ResidueKind {
    A,
    B,
    /// `D_n` residue at infinity, degrees `2s + 2(n-1)m`.
    DInfinity,
    /// `D_n` residue at zero, built on `x_1 ... x_n`.
    DZero,
}

impl FromStr for ResidueKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "a" => Ok(ResidueKind::A),
            "b" => Ok(ResidueKind::B),
            "d" | "dinf" | "d-inf" | "d-infinity" | "dinfinity" => Ok(ResidueKind::DInfinity),
            "d0" | "d-zero" | "dzero" => Ok(ResidueKind::DZero),
            _ => Err(Error::Parse(format!("unknown residue kind {s:?}"))),
        }
    }
}

impl fmt::Display for ResidueKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ResidueKind::A => "A",
            ResidueKind::B => "B",
            ResidueKind::DInfinity => "D-infinity",
            ResidueKind::DZero => "D-zero",
        })
    }
}

/// Calls `f` on every tuple of `parts` nonnegative integers summing to `total`.
pub fn for_each_composition(total: u32, parts: usize, f: &mut impl FnMut(&[u32])) {
    fn rec(left: u32, slot: usize, buf: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
        if slot + 1 == buf.len() {
            buf[slot] = left;
            f(buf);
            return;
        }
        for k in 0..=left {
            buf[slot] = k;
            rec(left - k, slot + 1, buf, f);
        }
    }
    if parts == 0 {
        if total == 0 {
            f(&[]);
        }
        return;
    }
    let mut buf = vec![0; parts];
    rec(total, 0, &mut buf, f);
}

/// `sum_{|k| = total} prod_j binom(nu, k_j) (-1)^{k_j} x_j^{step k_j}`.
fn power_sum_expansion(nvars: usize, nu: &BigRational, total: u32, step: u32) -> MultiPoly {
    let binoms: Vec<BigRational> = (0..=total)
        .map(|k| {
            let b = generalized_binomial(nu, k);
            if k % 2 == 1 {
                -b
            } else {
                b
            }
        })
        .collect();
    let mut terms = Vec::new();
    for_each_composition(total, nvars, &mut |ks| {
        let coef = ks.iter().fold(BigRational::one(), |acc, &k| acc * &binoms[k as usize]);
        if !coef.is_zero() {
            terms.push((ks.iter().map(|k| k * step).collect(), Scalar::from(coef)));
        }
    });
    MultiPoly::from_terms(nvars, terms)
}

/// Variable count of the residue polynomial of a given kind and rank.
pub fn residue_nvars(kind: ResidueKind, rank: usize) -> usize {
    if kind == ResidueKind::A {
        rank + 1
    } else {
        rank
    }
}

/// The invariant twisted period of the given kind, normalized to leading
/// coefficient 1. Type A output lives in `rank + 1` variables and is
/// translation invariant; `s` is ignored for `DZero`.
pub fn residue_twisted_period(kind: ResidueKind, rank: usize, s: u32, m: u32) -> Result<MultiPoly> {
    let n = rank;
    let bad = |msg: &str| Err(Error::InvalidParameter(format!("{kind} residue, rank {n}: {msg}")));
    if n == 0 {
        return bad("rank must be positive");
    }
    let p = match kind {
        ResidueKind::A => {
            if s == 0 || s as usize > n {
                return bad("need 1 <= s <= n");
            }
            let nu = residue_parameter(kind, n, s, m);
            let total = s + (n as u32 + 1) * m + 1;
            power_sum_expansion(n + 1, &nu, total, 1).center()
        }
        ResidueKind::B => {
            if s == 0 || s as usize > n {
                return bad("need 1 <= s <= n");
            }
            let nu = residue_parameter(kind, n, s, m);
            power_sum_expansion(n, &nu, s + n as u32 * m, 2)
        }
        ResidueKind::DInfinity => {
            if n < 2 || s == 0 || s as usize >= n {
                return bad("need n >= 2 and 1 <= s <= n - 1");
            }
            let nu = residue_parameter(kind, n, s, m);
            power_sum_expansion(n, &nu, s + (n as u32 - 1) * m, 2)
        }
        ResidueKind::DZero => {
            if n < 2 {
                return bad("need n >= 2");
            }
            let nu = residue_parameter(kind, n, s, m);
            // prod x_j^{2m+1} * sum prod binom(nu, k_j) (-1)^{k_j} x_j^{-2k_j}
            let inner = power_sum_expansion(n, &nu, m, 2);
            let terms: Vec<(Vec<u32>, Scalar)> = inner
                .terms()
                .map(|(mono, c)| {
                    (mono.exps().iter().map(|e| 2 * m + 1 - e).collect(), c.clone())
                })
                .collect();
            MultiPoly::from_terms(n, terms)
        }
    };
    if p.is_zero() {
        return Err(Error::Inconsistent(format!("{kind} residue vanished for s={s}, m={m}")));
    }
    Ok(p.monic())
}

/// The exponent `nu` of the residue, which is also the parameter `c` at which
/// its gradient is singular.
pub fn residue_parameter(kind: ResidueKind, rank: usize, s: u32, m: u32) -> BigRational {
    let (n, s, m) = (rank as i64, s as i64, m as i64);
    match kind {
        ResidueKind::A => ratio(s + (n + 1) * m, n + 1),
        ResidueKind::B => ratio(2 * s - 1 + 2 * n * m, 2 * n),
        ResidueKind::DInfinity => ratio(2 * s - 1 + 2 * (n - 1) * m, 2 * (n - 1)),
        ResidueKind::DZero => ratio(2 * m + 1, 2),
    }
}

/// The degree `d_beta + h m` a residue polynomial must have.
pub fn residue_degree(kind: ResidueKind, rank: usize, s: u32, m: u32) -> u32 {
    let n = rank as u32;
    match kind {
        ResidueKind::A => s + (n + 1) * m + 1,
        ResidueKind::B => 2 * s + 2 * n * m,
        ResidueKind::DInfinity => 2 * s + 2 * (n - 1) * m,
        ResidueKind::DZero => n * (2 * m + 1) - 2 * m,
    }
}

/// Parameters of a singular family for `G(l, 1, n)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexGroupSpec {
    pub n: usize,
    pub ell: u32,
    pub q: u32,
    pub s: u32,
    pub m: u32,
    /// `c_0, ..., c_{l-1}` with `c_0 = 0`.
    c: Vec<BigRational>,
    ctx: Arc<FieldContext>,
}

impl ComplexGroupSpec {
    /// Sets `c_{-s} = s/l`, `c_{q-s} = 0` and the remaining `c_b` to zero.
    pub fn new(n: usize, ell: u32, q: u32, s: u32, m: u32) -> Result<Self> {
        Self::with_parameters(n, ell, q, s, m, vec![BigRational::zero(); ell.max(1) as usize])
    }

    /// Like `new`, with free parameters taken from `c`; the forced entries
    /// `c_0`, `c_{q-s}`, `c_{-s}` must already agree or be zero.
    pub fn with_parameters(n: usize, ell: u32, q: u32, s: u32, m: u32, mut c: Vec<BigRational>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidParameter(msg));
        if n == 0 {
            return bad("n must be positive".into());
        }
        if ell < 2 {
            return bad(format!("l = {ell} must be at least 2"));
        }
        if q == 0 || q >= ell {
            return bad(format!("q = {q} must satisfy 1 <= q <= l - 1"));
        }
        if c.len() != ell as usize {
            return bad(format!("expected {ell} parameters c_0..c_(l-1), got {}", c.len()));
        }
        let l = ell as i64;
        let idx = |k: i64| k.rem_euclid(l) as usize;
        let forced = [
            (0, BigRational::zero()),
            (idx(q as i64 - s as i64), BigRational::zero()),
            (idx(-(s as i64)), ratio(s as i64, l)),
        ];
        for (k, v) in &forced {
            if !c[*k].is_zero() && c[*k] != *v {
                return bad(format!("c_{k} = {} conflicts with the required value {}", c[*k], v));
            }
        }
        // The forced values must also agree with each other.
        for (i, (ka, va)) in forced.iter().enumerate() {
            for (kb, vb) in &forced[i + 1..] {
                if ka == kb && va != vb {
                    return bad(format!("constraints force c_{ka} to both {va} and {vb}"));
                }
            }
        }
        for (k, v) in forced {
            c[k] = v;
        }
        Ok(ComplexGroupSpec {
            n,
            ell,
            q,
            s,
            m,
            c,
            ctx: FieldContext::cyclotomic(ell)?,
        })
    }

    /// `nu = m + (l - q + s)/l`.
    pub fn nu(&self) -> BigRational {
        ratio(self.ell_nu() as i64, self.ell as i64)
    }

    /// `l * nu`, always a positive integer.
    pub fn ell_nu(&self) -> u32 {
        self.ell * self.m + self.ell - self.q + self.s
    }

    pub fn parameters(&self) -> &[BigRational] {
        &self.c
    }

    pub fn context(&self) -> &Arc<FieldContext> {
        &self.ctx
    }

    pub fn omega_pow(&self, k: i64) -> Scalar {
        self.ctx.root_power(k)
    }

    /// `(n - 1)(m l + l - q) + n s`.
    pub fn degree(&self) -> u32 {
        (self.n as u32 - 1) * (self.m * self.ell + self.ell - self.q) + self.n as u32 * self.s
    }

    /// The Dunkl operators at this spec's parameters.
    pub fn operator(&self) -> ComplexDunkl {
        ComplexDunkl {
            n: self.n,
            nu: self.nu(),
            c: self.c.clone(),
            ctx: self.ctx.clone(),
        }
    }
}

/// Dunkl operators of `G(l, 1, n)` with parameters `nu` and `c_0, ..., c_{l-1}`.
#[derive(Debug, Clone)]
pub struct ComplexDunkl {
    n: usize,
    nu: BigRational,
    c: Vec<BigRational>,
    ctx: Arc<FieldContext>,
}

impl ComplexDunkl {
    /// `c[0]` must be zero; `c.len()` is the order `l` of the roots of unity.
    pub fn new(n: usize, nu: BigRational, c: Vec<BigRational>) -> Result<Self> {
        if c.len() < 2 || !c[0].is_zero() {
            return Err(Error::InvalidParameter("need l >= 2 parameters with c_0 = 0".into()));
        }
        let ctx = FieldContext::cyclotomic(c.len() as u32)?;
        Ok(ComplexDunkl { n, nu, c, ctx })
    }

    pub fn ell(&self) -> i64 {
        self.c.len() as i64
    }

    pub fn omega_pow(&self, k: i64) -> Scalar {
        self.ctx.root_power(k)
    }

    /// `sigma^(a)_{ij} p`: `x_i -> w^a x_j`, `x_j -> w^{-a} x_i`.
    pub fn sigma(&self, i: usize, j: usize, a: i64, p: &MultiPoly) -> MultiPoly {
        let mut map: Vec<(usize, Scalar)> = (0..self.n).map(|k| (k, Scalar::one())).collect();
        map[i] = (j, self.omega_pow(a));
        map[j] = (i, self.omega_pow(-a));
        p.substitute_monomial(&map)
    }

    /// `s_i^a p`: `x_i -> w^{-a} x_i`.
    pub fn s_power(&self, i: usize, a: i64, p: &MultiPoly) -> MultiPoly {
        let mut map: Vec<(usize, Scalar)> = (0..self.n).map(|k| (k, Scalar::one())).collect();
        map[i] = (i, self.omega_pow(-a));
        p.substitute_monomial(&map)
    }

    pub fn apply(&self, i: usize, p: &MultiPoly) -> Result<MultiPoly> {
        let n = self.n;
        if p.nvars() != n {
            return Err(Error::VarCountMismatch(p.nvars(), n));
        }
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, len: n });
        }
        let l = self.ell();
        let nu = Scalar::from(self.nu.clone());
        let mut out = p.diff(i);
        if !self.nu.is_zero() {
            for a in 0..l {
                for j in (0..n).filter(|&j| j != i) {
                    let diff = p - &self.sigma(i, j, a, p);
                    if diff.is_zero() {
                        continue;
                    }
                    let mut gamma = vec![Scalar::zero(); n];
                    gamma[i] = Scalar::one();
                    gamma[j] = -self.omega_pow(a);
                    out = &out - &diff.exact_divide_by_linear_form(&gamma)?.scale(&nu);
                }
            }
        }
        let mut numer = MultiPoly::zero(n);
        for (b, cb) in self.c.iter().enumerate().skip(1) {
            if cb.is_zero() {
                continue;
            }
            let cb = Scalar::from(cb.clone());
            for a in 0..l {
                let w = &cb * &self.omega_pow(-a * b as i64);
                numer = &numer + &self.s_power(i, a, p).scale(&w);
            }
        }
        if !numer.is_zero() {
            let mut e = vec![Scalar::zero(); n];
            e[i] = Scalar::one();
            out = &out - &numer.exact_divide_by_linear_form(&e)?;
        }
        Ok(out)
    }
}

/// The polynomials `f_1, ..., f_n` from the multinomial expansion.
pub fn complex_singular_family(spec: &ComplexGroupSpec) -> Vec<MultiPoly> {
    let n = spec.n;
    let ell = spec.ell;
    let nu = spec.nu();
    let nu1 = &nu - BigRational::one();
    let m = spec.m;
    let b_nu: Vec<BigRational> = (0..=m).map(|k| generalized_binomial(&nu, k)).collect();
    let b_nu1: Vec<BigRational> = (0..=m).map(|k| generalized_binomial(&nu1, k)).collect();
    let sign = if m.is_multiple_of(2) { BigRational::one() } else { -BigRational::one() };
    (0..n)
        .map(|j| {
            let mut terms = Vec::new();
            for_each_composition(m, n, &mut |ks| {
                let mut coef = sign.clone();
                let mut exps = vec![0u32; n];
                for (i, &k) in ks.iter().enumerate() {
                    if i == j {
                        coef *= &b_nu1[k as usize];
                        exps[i] = ell * (m - k) + spec.s;
                    } else {
                        coef *= &b_nu[k as usize];
                        exps[i] = spec.ell_nu() - ell * k;
                    }
                }
                terms.push((exps, Scalar::from(coef)));
            });
            MultiPoly::from_terms(n, terms)
        })
        .collect()
}

/// The Dunkl operator of `G(l, 1, n)` in direction `i` at the spec's parameters.
pub fn complex_dunkl_apply(spec: &ComplexGroupSpec, i: usize, p: &MultiPoly) -> Result<MultiPoly> {
    spec.operator().apply(i, p)
}

/// Exact check of the action of the generators on the family and that the
/// family spans an `n`-dimensional space.
pub fn complex_group_action_check(spec: &ComplexGroupSpec, fs: &[MultiPoly]) -> bool {
    let n = spec.n;
    if fs.len() != n || fs.iter().any(|f| f.nvars() != n) {
        return false;
    }
    let op = spec.operator();
    let q = spec.q as i64;
    let s = spec.s as i64;
    for a in 0..spec.ell as i64 {
        for i in 0..n {
            for j in (0..n).filter(|&j| j != i) {
                if op.sigma(i, j, a, &fs[i]) != fs[j].scale(&spec.omega_pow(a * q)) {
                    return false;
                }
                if op.sigma(i, j, a, &fs[j]) != fs[i].scale(&spec.omega_pow(-a * q)) {
                    return false;
                }
                for k in (0..n).filter(|&k| k != i && k != j) {
                    if op.sigma(i, j, a, &fs[k]) != fs[k] {
                        return false;
                    }
                }
            }
        }
    }
    for i in 0..n {
        for (k, f) in fs.iter().enumerate() {
            let expect = if k == i { spec.omega_pow(-s) } else { spec.omega_pow(q - s) };
            if op.s_power(i, 1, f) != f.scale(&expect) {
                return false;
            }
        }
    }
    PolySpan::from_polys(n, fs).dim() == n
}

/// Whether every `nabla_i f_j` vanishes.
pub fn complex_family_singular(spec: &ComplexGroupSpec, fs: &[MultiPoly]) -> Result<bool> {
    let op = spec.operator();
    for f in fs {
        for i in 0..spec.n {
            if !op.apply(i, f)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Sign of the leading coefficient, for reporting.
pub fn leading_sign(p: &MultiPoly) -> i32 {
    match p.leading_coefficient().and_then(Scalar::as_rational) {
        Some(r) if r.is_negative() => -1,
        Some(r) if r.is_positive() => 1,
        _ => 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{build_root_system, GroupType};
    use crate::dunkl::Dunkl;

    fn x(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(n, i)
    }

    #[test]
    fn compositions() {
        let mut count = 0;
        for_each_composition(4, 3, &mut |ks| {
            assert_eq!(ks.iter().sum::<u32>(), 4);
            count += 1;
        });
        assert_eq!(count, 15);
    }

    #[test]
    fn a2_quadratic() {
        let p = residue_twisted_period(ResidueKind::A, 2, 1, 0).unwrap();
        let z = |i| x(3, i);
        let p2 = (0..3).map(|i| z(i).pow(2)).fold(MultiPoly::zero(3), |a, b| &a + &b);
        assert_eq!(p.restrict_to_sum_zero().monic(), p2.restrict_to_sum_zero().monic());
    }

    #[test]
    fn b2_quartic() {
        let p = residue_twisted_period(ResidueKind::B, 2, 2, 0).unwrap();
        let e = &(&x(2, 0).pow(4) + &x(2, 1).pow(4)) - &(&x(2, 0).pow(2) * &x(2, 1).pow(2)).scale(&Scalar::int(6));
        assert_eq!(p, e);
    }

    #[test]
    fn d_zero_product() {
        let p = residue_twisted_period(ResidueKind::DZero, 4, 0, 0).unwrap();
        assert_eq!(p, MultiPoly::from_terms(4, [(vec![1, 1, 1, 1], Scalar::one())]));
    }

    #[test]
    fn degrees_and_ranges() {
        for (kind, n, s, m) in [
            (ResidueKind::A, 3, 2, 2),
            (ResidueKind::B, 3, 1, 2),
            (ResidueKind::DInfinity, 4, 3, 1),
            (ResidueKind::DZero, 4, 0, 2),
            (ResidueKind::DZero, 3, 0, 1),
        ] {
            let p = residue_twisted_period(kind, n, s, m).unwrap();
            assert!(p.is_homogeneous());
            assert_eq!(p.total_degree(), Some(residue_degree(kind, n, s, m)));
        }
        assert!(residue_twisted_period(ResidueKind::A, 2, 3, 0).is_err());
        assert!(residue_twisted_period(ResidueKind::B, 2, 0, 0).is_err());
        assert!(residue_twisted_period(ResidueKind::DInfinity, 4, 4, 0).is_err());
    }

    #[test]
    fn d_zero_singular() {
        for n in [3, 4] {
            let rs = build_root_system(GroupType::D, n).unwrap();
            for m in 0..=1 {
                let q = residue_twisted_period(ResidueKind::DZero, n, 0, m).unwrap();
                let d = Dunkl::new(&rs, Scalar::frac(2 * m as i64 + 1, 2));
                for j in 0..n {
                    assert!(d.apply_all(&q.diff(j)).unwrap().iter().all(MultiPoly::is_zero));
                }
            }
        }
    }

    #[test]
    fn complex_examples() {
        let spec = ComplexGroupSpec::new(2, 2, 1, 0, 0).unwrap();
        let f = complex_singular_family(&spec);
        assert_eq!(f, vec![x(2, 1), x(2, 0)]);
        assert_eq!(spec.degree(), 1);
        assert!(complex_dunkl_apply(&spec, 0, &f[1]).unwrap().is_zero());
        // x_1 is f_2 itself; x_1^2 is not singular: nabla_1 x_1^2 = (2 - 2 nu) x_1.
        assert!(complex_dunkl_apply(&spec, 0, &x(2, 0)).unwrap().is_zero());
        assert_eq!(complex_dunkl_apply(&spec, 0, &x(2, 0).pow(2)).unwrap(), x(2, 0));

        let spec = ComplexGroupSpec::new(2, 2, 1, 0, 1).unwrap();
        let f = complex_singular_family(&spec);
        let expect = -&(&x(2, 1).pow(3).scale(&Scalar::frac(1, 2))
            + &(&x(2, 0).pow(2) * &x(2, 1)).scale(&Scalar::frac(3, 2)));
        assert_eq!(f[0], expect);
        assert_eq!(f[0].total_degree(), Some(3));
    }

    #[test]
    fn complex_zero_parameters_is_derivative() {
        // s = 0 makes every c_b zero, but nu stays positive; check the
        // derivative part on an invariant of the symmetric group instead.
        let spec = ComplexGroupSpec::new(2, 3, 2, 0, 0).unwrap();
        assert!(spec.parameters().iter().all(Zero::is_zero));
        let p = &x(2, 0).pow(3) + &x(2, 1).pow(3);
        assert_eq!(complex_dunkl_apply(&spec, 0, &p).unwrap(), p.diff(0));
    }

    #[test]
    fn complex_certified() {
        for (n, ell) in [(2usize, 2u32), (3, 2), (2, 3)] {
            for q in 1..ell {
                for s in 0..=1 {
                    for m in 0..=1 {
                        let spec = ComplexGroupSpec::new(n, ell, q, s, m).unwrap();
                        let f = complex_singular_family(&spec);
                        assert!(complex_family_singular(&spec, &f).unwrap(), "{n} {ell} {q} {s} {m}");
                        assert!(complex_group_action_check(&spec, &f));
                        for fj in &f {
                            assert_eq!(fj.total_degree(), Some(spec.degree()));
                        }
                    }
                }
            }
        }
        let spec = ComplexGroupSpec::new(2, 3, 1, 0, 0).unwrap();
        let mut f = complex_singular_family(&spec);
        f[0] = &f[0] + &f[1];
        assert!(!complex_group_action_check(&spec, &f));
    }

    #[test]
    fn parameter_constraints() {
        // s = 2, l = 2: c_0 would have to be 1.
        assert!(ComplexGroupSpec::new(2, 2, 1, 2, 0).is_err());
        assert!(ComplexGroupSpec::new(2, 3, 3, 0, 0).is_err());
        assert!(ComplexGroupSpec::new(2, 1, 1, 0, 0).is_err());
        let bad = vec![BigRational::zero(), BigRational::zero(), BigRational::one()];
        assert!(ComplexGroupSpec::with_parameters(2, 3, 1, 1, 0, bad).is_err());
        let spec = ComplexGroupSpec::new(2, 3, 1, 1, 0).unwrap();
        assert_eq!(spec.parameters()[2], ratio(1, 3));
    }

    #[test]
    fn zero_parameters_give_derivatives() {
        let op = ComplexDunkl::new(2, BigRational::zero(), vec![BigRational::zero(); 3]).unwrap();
        let p = &x(2, 0).pow(3) * &x(2, 1);
        for i in 0..2 {
            assert_eq!(op.apply(i, &p).unwrap(), p.diff(i));
        }
    }

    #[test]
    fn ell_two_matches_b_n() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for n in [2usize, 3] {
            let b = build_root_system(GroupType::B, n).unwrap();
            for c in [ratio(1, 3), ratio(-5, 4)] {
                let op = ComplexDunkl::new(n, c.clone(), vec![BigRational::zero(), c.clone()]).unwrap();
                let real = Dunkl::new(&b, Scalar::from(c));
                for _ in 0..12 {
                    let terms: Vec<(Vec<u32>, Scalar)> = (0..4)
                        .map(|_| {
                            let e: Vec<u32> = (0..n).map(|_| rng.gen_range(0..4)).collect();
                            (e, Scalar::frac(rng.gen_range(-5..=5), rng.gen_range(1..=3)))
                        })
                        .collect();
                    let p = MultiPoly::from_terms(n, terms);
                    for i in 0..n {
                        assert_eq!(op.apply(i, &p).unwrap(), real.apply(i, &p).unwrap());
                    }
                }
            }
        }
    }
}
