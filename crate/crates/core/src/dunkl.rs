//! Dunkl operators of a real root system at a constant parameter `c`.
//!
//! `nabla_i p = d_i p - c * sum_{gamma > 0} gamma_i (p - s_gamma p) / (gamma, x)`,
//! where each quotient is an exact polynomial division.

use std::collections::HashMap;

use crate::coxeter::RootSystem;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::poly::{Monomial, MultiPoly};

/// The family `nabla_1, ..., nabla_N` for a root system and parameter.
#[derive(Debug, Clone)]
pub struct Dunkl<'a> {
    rs: &'a RootSystem,
    c: Scalar,
}

impl<'a> Dunkl<'a> {
    pub fn new(rs: &'a RootSystem, c: Scalar) -> Self {
        Dunkl { rs, c }
    }

    pub fn parameter(&self) -> &Scalar {
        &self.c
    }

    /// Divided difference `(p - s_gamma p) / (gamma, x)` for root `k`.
    pub fn divided_difference(&self, k: usize, p: &MultiPoly) -> Result<MultiPoly> {
        let diff = p - &self.rs.reflect_by_index(k, p);
        diff.exact_divide_by_linear_form(&self.rs.roots()[k].vector)
            .map_err(|e| Error::Inconsistent(format!("reflection difference not divisible: {e}")))
    }

    pub fn apply(&self, i: usize, p: &MultiPoly) -> Result<MultiPoly> {
        let n = self.rs.ambient_dim();
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, len: n });
        }
        self.rs.check_vars(p)?;
        let mut out = p.diff(i);
        if self.c.is_zero() {
            return Ok(out);
        }
        for (k, root) in self.rs.roots().iter().enumerate() {
            if root.vector[i].is_zero() {
                continue;
            }
            let d = self.divided_difference(k, p)?;
            out = &out - &d.scale(&(&self.c * &root.vector[i]));
        }
        Ok(out)
    }

    /// All directions at once; each divided difference is computed once.
    pub fn apply_all(&self, p: &MultiPoly) -> Result<Vec<MultiPoly>> {
        self.rs.check_vars(p)?;
        let n = self.rs.ambient_dim();
        let mut out: Vec<MultiPoly> = (0..n).map(|i| p.diff(i)).collect();
        if self.c.is_zero() {
            return Ok(out);
        }
        for (k, root) in self.rs.roots().iter().enumerate() {
            let d = self.divided_difference(k, p)?;
            if d.is_zero() {
                continue;
            }
            for (i, g) in root.vector.iter().enumerate() {
                if !g.is_zero() {
                    out[i] = &out[i] - &d.scale(&(&self.c * g));
                }
            }
        }
        Ok(out)
    }

    /// `g(nabla_1, ..., nabla_N) p`, using that the operators commute.
    pub fn apply_polynomial(&self, g: &MultiPoly, p: &MultiPoly) -> Result<MultiPoly> {
        let n = self.rs.ambient_dim();
        if g.nvars() != n {
            return Err(Error::VarCountMismatch(g.nvars(), n));
        }
        let mut memo: HashMap<Vec<u32>, MultiPoly> = HashMap::new();
        memo.insert(vec![0; n], p.clone());
        let mut out = MultiPoly::zero(n);
        for (m, coef) in g.terms() {
            let v = self.apply_monomial(m.exps(), &mut memo)?;
            out = &out + &v.scale(coef);
        }
        Ok(out)
    }

    fn apply_monomial(
        &self,
        exps: &[u32],
        memo: &mut HashMap<Vec<u32>, MultiPoly>,
    ) -> Result<MultiPoly> {
        if let Some(v) = memo.get(exps) {
            return Ok(v.clone());
        }
        let i = exps.iter().position(|&e| e > 0).expect("zero exponent is memoized");
        let mut lower = exps.to_vec();
        lower[i] -= 1;
        let inner = self.apply_monomial(&lower, memo)?;
        let v = self.apply(i, &inner)?;
        memo.insert(exps.to_vec(), v.clone());
        Ok(v)
    }
}

pub fn dunkl_apply(rs: &RootSystem, c: &Scalar, i: usize, p: &MultiPoly) -> Result<MultiPoly> {
    Dunkl::new(rs, c.clone()).apply(i, p)
}

/// Residuals `nabla_i q` for every direction.
#[derive(Debug, Clone, PartialEq)]
pub struct SingularityCertificate {
    pub c: Scalar,
    pub residuals: Vec<MultiPoly>,
    pub singular: bool,
}

pub fn is_singular(rs: &RootSystem, c: &Scalar, q: &MultiPoly) -> Result<SingularityCertificate> {
    let residuals = Dunkl::new(rs, c.clone()).apply_all(q)?;
    let singular = !q.is_zero() && residuals.iter().all(MultiPoly::is_zero);
    Ok(SingularityCertificate {
        c: c.clone(),
        residuals,
        singular,
    })
}

/// Every polynomial in the family is annihilated.
pub fn all_singular(rs: &RootSystem, c: &Scalar, qs: &[MultiPoly]) -> Result<bool> {
    let d = Dunkl::new(rs, c.clone());
    for q in qs {
        if !d.apply_all(q)?.iter().all(MultiPoly::is_zero) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Default)]
pub struct CommutativityReport {
    pub pairs_checked: usize,
    /// `(sample, i, j, [nabla_i, nabla_j] p)` for every nonzero commutator.
    pub violations: Vec<(usize, usize, usize, MultiPoly)>,
}

impl CommutativityReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn check_commutativity(rs: &RootSystem, c: &Scalar, samples: &[MultiPoly]) -> Result<CommutativityReport> {
    let d = Dunkl::new(rs, c.clone());
    let n = rs.ambient_dim();
    let mut report = CommutativityReport::default();
    for (s, p) in samples.iter().enumerate() {
        let first = d.apply_all(p)?;
        let second: Vec<Vec<MultiPoly>> = first.iter().map(|f| d.apply_all(f)).collect::<Result<_>>()?;
        for i in 0..n {
            for j in i + 1..n {
                report.pairs_checked += 1;
                let comm = &second[j][i] - &second[i][j];
                if !comm.is_zero() {
                    report.violations.push((s, i, j, comm));
                }
            }
        }
    }
    Ok(report)
}

/// Whether `g(nabla) Q = 0` for invariant `g` and `Q`.
pub fn calogero_kernel_check(rs: &RootSystem, c: &Scalar, g: &MultiPoly, q: &MultiPoly) -> Result<bool> {
    for (name, p) in [("g", g), ("Q", q)] {
        if !rs.is_invariant(p) {
            return Err(Error::NotInvariant(format!("{name} = {p}")));
        }
    }
    if g.total_degree().unwrap_or(0) == 0 {
        return Err(Error::InvalidParameter("g must have positive degree".into()));
    }
    Ok(Dunkl::new(rs, c.clone()).apply_polynomial(g, q)?.is_zero())
}

/// `sum_i x_i nabla_i q - (E q - c sum_gamma (1 - s_gamma) q)`; identically zero.
pub fn euler_identity_residual(rs: &RootSystem, c: &Scalar, q: &MultiPoly) -> Result<MultiPoly> {
    let n = rs.ambient_dim();
    let nab = Dunkl::new(rs, c.clone()).apply_all(q)?;
    let mut lhs = MultiPoly::zero(n);
    for (i, v) in nab.iter().enumerate() {
        lhs = &lhs + &(&MultiPoly::var(n, i) * v);
    }
    let mut rhs = q.euler();
    for k in 0..rs.roots().len() {
        let diff = q - &rs.reflect_by_index(k, q);
        rhs = &rhs - &diff.scale(c);
    }
    Ok(&lhs - &rhs)
}

/// All monomials of total degree `d` in `n` variables, in ascending order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(Monomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in 0..=d {
            prefix.push(e);
            rec(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    rec(n, d, &mut Vec::new(), &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{build_root_system, GroupType};
    use proptest::prelude::*;

    fn x(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(n, i)
    }

    #[test]
    fn a1_examples() {
        let a1 = build_root_system(GroupType::A, 1).unwrap();
        let xx = &x(2, 0) - &x(2, 1);
        for c in [Scalar::frac(1, 3), Scalar::frac(2, 5), Scalar::int(-3)] {
            let v = dunkl_apply(&a1, &c, 0, &xx).unwrap();
            assert_eq!(v, MultiPoly::constant(2, &Scalar::one() - &(&Scalar::int(2) * &c)));
            let cube = xx.pow(3);
            let v3 = dunkl_apply(&a1, &c, 0, &cube).unwrap();
            assert_eq!(v3, xx.pow(2).scale(&(&Scalar::int(3) - &(&Scalar::int(2) * &c))));
            assert!(dunkl_apply(&a1, &c, 1, &MultiPoly::one(2)).unwrap().is_zero());
        }
        assert!(!is_singular(&a1, &Scalar::frac(1, 3), &xx).unwrap().singular);
        assert!(is_singular(&a1, &Scalar::frac(3, 2), &xx.pow(3)).unwrap().singular);
        assert!(dunkl_apply(&a1, &Scalar::one(), 2, &xx).is_err());
    }

    #[test]
    fn b2_examples() {
        let b2 = build_root_system(GroupType::B, 2).unwrap();
        let c = Scalar::frac(2, 7);
        let v = dunkl_apply(&b2, &c, 0, &x(2, 0)).unwrap();
        assert_eq!(v, MultiPoly::constant(2, &Scalar::one() - &(&Scalar::int(4) * &c)));
        let cert = is_singular(&b2, &Scalar::frac(1, 4), &x(2, 0)).unwrap();
        assert!(cert.singular);
        assert_eq!(cert.residuals.len(), 2);
    }

    #[test]
    fn calogero() {
        let a1 = build_root_system(GroupType::A, 1).unwrap();
        let z = |i| x(2, i);
        let g = &z(0).pow(2) + &z(1).pow(2);
        let xx = &z(0) - &z(1);
        let q = xx.pow(2).scale(&Scalar::frac(1, 2));
        assert!(calogero_kernel_check(&a1, &Scalar::frac(1, 2), &g, &q).unwrap());
        assert!(!calogero_kernel_check(&a1, &Scalar::frac(1, 3), &g, &q).unwrap());
        assert!(calogero_kernel_check(&a1, &Scalar::frac(1, 2), &z(0), &q).is_err());

        let b2 = build_root_system(GroupType::B, 2).unwrap();
        let r2 = &x(2, 0).pow(2) + &x(2, 1).pow(2);
        assert!(calogero_kernel_check(&b2, &Scalar::frac(1, 4), &r2, &r2).unwrap());
    }

    #[test]
    fn commutativity_small() {
        let b2 = build_root_system(GroupType::B, 2).unwrap();
        let mut samples = Vec::new();
        for d in 0..=4 {
            for m in monomials_of_degree(2, d) {
                samples.push(MultiPoly::monomial(m, Scalar::one()));
            }
        }
        for c in [Scalar::frac(5, 7), Scalar::zero()] {
            let r = check_commutativity(&b2, &c, &samples).unwrap();
            assert!(r.ok());
            assert_eq!(r.pairs_checked, samples.len());
        }
    }

    #[test]
    fn apply_polynomial_matches_composition() {
        let b2 = build_root_system(GroupType::B, 2).unwrap();
        let d = Dunkl::new(&b2, Scalar::frac(1, 3));
        let p = &x(2, 0).pow(4) * &x(2, 1).pow(2);
        let g = &x(2, 0) * &x(2, 1);
        let direct = d.apply(0, &d.apply(1, &p).unwrap()).unwrap();
        assert_eq!(d.apply_polynomial(&g, &p).unwrap(), direct);
    }

    #[test]
    fn monomial_enumeration() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(4, 3).len(), 20);
        assert_eq!(monomials_of_degree(1, 5).len(), 1);
    }

    fn arb_poly(n: usize, max_deg: u32) -> impl Strategy<Value = MultiPoly> {
        proptest::collection::vec(
            (proptest::collection::vec(0..=max_deg, n), -5i64..=5, 1i64..=4),
            1..6,
        )
        .prop_map(move |terms| {
            MultiPoly::from_terms(
                n,
                terms.into_iter().map(|(e, a, b)| (e, Scalar::frac(a, b))),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn linear_and_degree_lowering(p in arb_poly(3, 3), q in arb_poly(3, 3), a in -4i64..=4, cn in 1i64..=5) {
            let a2 = build_root_system(GroupType::A, 2).unwrap();
            let d = Dunkl::new(&a2, Scalar::frac(cn, 7));
            let lhs = d.apply_all(&(&p + &q.scale(&Scalar::int(a)))).unwrap();
            let pa = d.apply_all(&p).unwrap();
            let qa = d.apply_all(&q).unwrap();
            for i in 0..3 {
                prop_assert_eq!(&lhs[i], &(&pa[i] + &qa[i].scale(&Scalar::int(a))));
            }
            for (deg, comp) in p.homogeneous_components() {
                for r in d.apply_all(&comp).unwrap() {
                    if !r.is_zero() {
                        prop_assert!(r.is_homogeneous());
                        prop_assert_eq!(r.total_degree(), Some(deg - 1));
                    }
                }
            }
        }

        #[test]
        fn euler_identity(p in arb_poly(3, 4), cn in -6i64..=6) {
            let b3 = build_root_system(GroupType::B, 3).unwrap();
            let r = euler_identity_residual(&b3, &Scalar::frac(cn, 5), &p).unwrap();
            prop_assert!(r.is_zero());
        }
    }
}
