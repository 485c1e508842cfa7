//! The acceptance suite at desk scale: every check is exact, with zero
//! tolerance. Frames and families are memoized per process.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};
use std::time::Instant;

use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::coxeter::{build_root_system, GroupSpec, GroupType, RootSystem};
use crate::dunkl::{all_singular, check_commutativity, Dunkl};
use crate::error::Result;
use crate::field::{FieldContext, Scalar};
use crate::linalg::PolySpan;
use crate::poly::MultiPoly;
use crate::residues::{
    complex_family_singular, complex_group_action_check, complex_singular_family, residue_twisted_period,
    ComplexGroupSpec, ResidueKind,
};
use crate::saito::{saito_frame, verify_saito, SaitoFrame};
use crate::serial::{family_from_json, family_to_json, frame_from_json, frame_to_json, poly_from_json, poly_to_json};
use crate::shift::{
    certify_family, homogeneous_twisted_periods, isotypic_singular_space, singular_families_upto, top_pairing_potential,
    SingularFamily,
};

/// Outcome of one acceptance criterion.
#[derive(Debug, Clone, serde::Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    /// Counts on success, the first failure otherwise.
    pub detail: String,
    pub seconds: f64,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criterion {:>2} {:<31} {}  ({:.2}s) {}",
            self.id,
            self.name,
            if self.passed { "PASS" } else { "FAIL" },
            self.seconds,
            self.detail
        )
    }
}

/// A1-A4, B1-B4, D3, D4.
pub fn desk_groups() -> Vec<GroupSpec> {
    let mut out = Vec::new();
    for n in 1..=4 {
        out.push(GroupSpec::new(GroupType::A, n));
    }
    for n in 1..=4 {
        out.push(GroupSpec::new(GroupType::B, n));
    }
    out.push(GroupSpec::new(GroupType::D, 3));
    out.push(GroupSpec::new(GroupType::D, 4));
    out
}

type FrameEntry = Arc<(RootSystem, SaitoFrame)>;
type FamilyMemo = Mutex<HashMap<(String, usize), Arc<Vec<SingularFamily>>>>;

/// Root system and Saito frame, computed once per process.
pub fn frame_for(spec: GroupSpec) -> Result<FrameEntry> {
    static FRAMES: OnceLock<Mutex<HashMap<String, FrameEntry>>> = OnceLock::new();
    let key = spec.to_string();
    let cache = FRAMES.get_or_init(Default::default);
    if let Some(e) = cache.lock().unwrap().get(&key) {
        return Ok(e.clone());
    }
    let rs = RootSystem::from_spec(spec)?;
    let frame = saito_frame(&rs)?;
    let entry = Arc::new((rs, frame));
    cache.lock().unwrap().insert(key, entry.clone());
    Ok(entry)
}

/// Certified families for `m = 0, 1, 2`, computed once per process.
pub fn families_for(spec: GroupSpec, beta: usize) -> Result<Arc<Vec<SingularFamily>>> {
    static FAMILIES: OnceLock<FamilyMemo> = OnceLock::new();
    let key = (spec.to_string(), beta);
    let cache = FAMILIES.get_or_init(Default::default);
    if let Some(e) = cache.lock().unwrap().get(&key) {
        return Ok(e.clone());
    }
    let entry = frame_for(spec)?;
    let (rs, frame) = (&entry.0, &entry.1);
    let mut fams = singular_families_upto(frame, beta, 2)?;
    for fam in &mut fams {
        fam.certificate = Some(certify_family(rs, frame, fam)?);
    }
    let fams = Arc::new(fams);
    cache.lock().unwrap().insert(key, fams.clone());
    Ok(fams)
}

fn timed(id: u8, name: &'static str, body: impl FnOnce() -> Result<std::result::Result<String, String>>) -> CriterionResult {
    let start = Instant::now();
    let (passed, detail) = match body() {
        Ok(Ok(d)) => (true, d),
        Ok(Err(d)) => (false, d),
        Err(e) => (false, format!("error: {e}")),
    };
    CriterionResult {
        id,
        name,
        passed,
        detail,
        seconds: start.elapsed().as_secs_f64(),
    }
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)*) => {
        if !$cond {
            return Ok(Err(format!($($msg)*)));
        }
    };
}

fn c_beta(frame: &SaitoFrame, beta: usize) -> Scalar {
    Scalar::frac(frame.degrees[beta - 1] as i64 - 1, frame.h as i64)
}

pub fn saito_flatness() -> CriterionResult {
    timed(1, "saito flatness", || {
        let groups = desk_groups();
        for spec in &groups {
            let e = frame_for(*spec)?;
            let report = verify_saito(&e.0, &e.1);
            ensure!(report.ok(), "{spec}: {report:?}");
        }
        Ok(Ok(format!("{} frames flat", groups.len())))
    })
}

pub fn saito_derivatives_singular() -> CriterionResult {
    timed(2, "saito derivatives singular", || {
        let mut checked = 0;
        for spec in desk_groups() {
            let e = frame_for(spec)?;
            let (rs, frame) = (&e.0, &e.1);
            for beta in 1..=frame.rank() {
                let qs: Vec<MultiPoly> = (0..rs.ambient_dim()).map(|j| frame.t[beta - 1].diff(j)).collect();
                ensure!(all_singular(rs, &c_beta(frame, beta), &qs)?, "{spec} beta={beta}");
                checked += qs.len();
            }
        }
        Ok(Ok(format!("{checked} derivatives annihilated")))
    })
}

pub fn shift_families() -> CriterionResult {
    timed(3, "shift families certified", || {
        let mut count = 0;
        for spec in desk_groups() {
            let e = frame_for(spec)?;
            for beta in 1..=e.1.rank() {
                for fam in families_for(spec, beta)?.iter() {
                    let cert = fam.certificate.as_ref().expect("certified");
                    ensure!(cert.ok(e.0.rank()), "{spec} beta={beta} m={}: {cert:?}", fam.m);
                    count += 1;
                }
            }
        }
        Ok(Ok(format!("{count} families")))
    })
}

pub fn top_pairing() -> CriterionResult {
    timed(4, "top pairing potential", || {
        let mut count = 0;
        for spec in desk_groups() {
            let e = frame_for(spec)?;
            let (rs, frame) = (&e.0, &e.1);
            let q = top_pairing_potential(frame);
            let c = Scalar::frac(frame.h as i64 + 1, frame.h as i64);
            let qs: Vec<MultiPoly> = (0..rs.ambient_dim()).map(|z| q.diff(z)).collect();
            ensure!(qs.iter().any(|p| !p.is_zero()), "{spec}: vanishing gradient");
            ensure!(all_singular(rs, &c, &qs)?, "{spec}");
            count += qs.len();
        }
        Ok(Ok(format!("{count} directions")))
    })
}

fn proportional(a: &MultiPoly, b: &MultiPoly, centered: bool) -> bool {
    if centered {
        a.restrict_to_sum_zero().ratio_to(&b.restrict_to_sum_zero()).is_some()
    } else {
        a.ratio_to(b).is_some()
    }
}

pub fn route_equivalence() -> CriterionResult {
    timed(5, "residues match families", || {
        let mut count = 0;
        for (kind, ty) in [(ResidueKind::A, GroupType::A), (ResidueKind::B, GroupType::B)] {
            for n in 2..=3 {
                let spec = GroupSpec::new(ty, n);
                for s in 1..=n as u32 {
                    let beta = n + 1 - s as usize;
                    let fams = families_for(spec, beta)?;
                    for m in 0..=2u32 {
                        let r = residue_twisted_period(kind, n, s, m)?;
                        let q = &fams[m as usize].potential;
                        ensure!(proportional(&r, q, ty == GroupType::A), "{spec} s={s} m={m}");
                        count += 1;
                    }
                }
            }
        }
        let d4 = GroupSpec::new(GroupType::D, 4);
        for m in 0..=2u32 {
            let q: Vec<MultiPoly> =
                (1..=4).map(|b| Ok(families_for(d4, b)?[m as usize].potential.clone())).collect::<Result<_>>()?;
            let middle = PolySpan::from_polys(4, &q[1..3]);
            ensure!(middle.dim() == 2, "D4 m={m}: middle potentials dependent");
            let r = residue_twisted_period(ResidueKind::DInfinity, 4, 3, m)?;
            ensure!(proportional(&r, &q[0], false), "D4 D-infinity s=3 m={m}");
            let r = residue_twisted_period(ResidueKind::DInfinity, 4, 1, m)?;
            ensure!(proportional(&r, &q[3], false), "D4 D-infinity s=1 m={m}");
            let r = residue_twisted_period(ResidueKind::DInfinity, 4, 2, m)?;
            ensure!(middle.contains(&r), "D4 D-infinity s=2 m={m}");
            let r = residue_twisted_period(ResidueKind::DZero, 4, 0, m)?;
            ensure!(middle.contains(&r), "D4 D-zero m={m}");
            count += 4;
        }
        Ok(Ok(format!("{count} residues")))
    })
}

pub fn isotypic_dimensions() -> CriterionResult {
    timed(6, "period and isotypic dimensions", || {
        let a2 = build_root_system(GroupType::A, 2)?;
        let b2 = build_root_system(GroupType::B, 2)?;
        let a3 = build_root_system(GroupType::A, 3)?;
        let d4 = build_root_system(GroupType::D, 4)?;
        let periods = [
            (&a2, Scalar::frac(1, 3), 2, 1),
            (&a2, Scalar::frac(1, 2), 2, 0),
            (&d4, Scalar::frac(1, 2), 4, 2),
        ];
        for (rs, nu, deg, want) in periods {
            let got = homogeneous_twisted_periods(rs, &nu, deg)?.len();
            ensure!(got == want, "{} nu={nu} D={deg}: periods dim {got}, expected {want}", rs.spec());
        }
        let isotypic = [
            (&d4, Scalar::frac(1, 2), 3, 8),
            (&a2, Scalar::frac(2, 3), 2, 2),
            (&b2, Scalar::frac(3, 4), 3, 2),
            (&a3, Scalar::frac(1, 2), 2, 3),
        ];
        for (rs, c, deg, want) in isotypic {
            let got = isotypic_singular_space(rs, &c, deg)?.len();
            ensure!(got == want, "{} c={c} D={deg}: isotypic dim {got}, expected {want}", rs.spec());
        }
        Ok(Ok("3 period and 4 isotypic dimensions".into()))
    })
}

pub fn d_zero_singular() -> CriterionResult {
    timed(7, "D-zero residue singular", || {
        for n in 3..=4 {
            let rs = build_root_system(GroupType::D, n)?;
            for m in 0..=1u32 {
                let p = residue_twisted_period(ResidueKind::DZero, n, 0, m)?;
                let qs: Vec<MultiPoly> = (0..n).map(|i| p.diff(i)).collect();
                let c = Scalar::frac(2 * m as i64 + 1, 2);
                ensure!(all_singular(&rs, &c, &qs)?, "D{n} m={m}");
            }
        }
        Ok(Ok("4 cases".into()))
    })
}

pub fn complex_groups() -> CriterionResult {
    timed(8, "complex reflection groups", || {
        let mut count = 0;
        for (n, ell) in [(2usize, 2u32), (3, 2), (2, 3)] {
            for q in 1..ell {
                for s in 0..=1 {
                    for m in 0..=1 {
                        let spec = ComplexGroupSpec::new(n, ell, q, s, m)?;
                        let fs = complex_singular_family(&spec);
                        let want = (n as u32 - 1) * (m * ell + ell - q) + n as u32 * s;
                        ensure!(
                            fs.iter().all(|f| f.is_homogeneous() && f.total_degree() == Some(want)),
                            "G({ell},1,{n}) q={q} s={s} m={m}: degree"
                        );
                        ensure!(complex_group_action_check(&spec, &fs), "G({ell},1,{n}) q={q} s={s} m={m}: action");
                        ensure!(complex_family_singular(&spec, &fs)?, "G({ell},1,{n}) q={q} s={s} m={m}: singular");
                        count += 1;
                    }
                }
            }
        }
        Ok(Ok(format!("{count} families")))
    })
}

fn random_poly(rng: &mut StdRng, n: usize, max_deg: u32) -> MultiPoly {
    let terms: Vec<(Vec<u32>, Scalar)> = (0..rng.gen_range(1..=4))
        .map(|_| {
            let exps: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=max_deg)).collect();
            (exps, Scalar::frac(rng.gen_range(-5..=5), rng.gen_range(1..=3)))
        })
        .collect();
    MultiPoly::from_terms(n, terms)
}

fn random_rational(rng: &mut StdRng) -> Scalar {
    Scalar::frac(rng.gen_range(-7..=7), rng.gen_range(1..=6))
}

pub fn property_suites() -> CriterionResult {
    timed(9, "property suites", || {
        let mut rng = StdRng::seed_from_u64(0x5eed);
        let groups = [(GroupType::A, 2), (GroupType::A, 3), (GroupType::B, 2), (GroupType::B, 3), (GroupType::D, 4)];
        let mut cases = 0;
        for round in 0..120 {
            let (ty, n) = groups[round % groups.len()];
            let rs = build_root_system(ty, n)?;
            let c = random_rational(&mut rng);
            let p = random_poly(&mut rng, rs.ambient_dim(), 3);
            let report = check_commutativity(&rs, &c, std::slice::from_ref(&p))?;
            ensure!(report.ok(), "{} c={c}: commutator nonzero on {p}", rs.spec());
            cases += 1;
        }

        let mut families = 0;
        for spec in desk_groups() {
            let e = frame_for(spec)?;
            for beta in 1..=e.1.rank() {
                let fams = families_for(spec, beta)?;
                for fam in fams.iter() {
                    let cert = fam.certificate.as_ref().expect("certified");
                    ensure!(cert.cross_symmetric, "{spec} beta={beta} m={}: cross derivatives", fam.m);
                    ensure!(cert.euler_ok, "{spec} beta={beta} m={}: Euler identity", fam.m);
                    families += 1;
                }
                for m in 1..fams.len() {
                    let d = fams[m].potential_t.diff(0);
                    ensure!(
                        d.ratio_to(&fams[m - 1].potential_t).is_some(),
                        "{spec} beta={beta}: descent from m={m}"
                    );
                }
            }
        }

        let ctx = FieldContext::cyclotomic(3)?;
        let w = ctx.generator();
        for _ in 0..50 {
            let a = random_poly(&mut rng, 3, 3);
            let b = random_poly(&mut rng, 3, 3);
            let c = &random_poly(&mut rng, 3, 2) + &MultiPoly::constant(3, w.clone());
            ensure!(&(&a * &b) * &c == &a * &(&b * &c), "associativity");
            ensure!(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), "distributivity");
            ensure!(&a * &b == &b * &a, "commutativity");
            ensure!(poly_from_json(&poly_to_json(&c))? == c, "polynomial round trip");
        }
        let e = frame_for(GroupSpec::new(GroupType::D, 4))?;
        ensure!(frame_from_json(&frame_to_json(&e.1))? == e.1, "frame round trip");
        let fam = &families_for(GroupSpec::new(GroupType::B, 3), 2)?[1];
        ensure!(family_from_json(&family_to_json(fam))? == *fam, "family round trip");

        Ok(Ok(format!("{cases} commutativity cases, {families} families, 50 ring-law rounds")))
    })
}

pub fn type_a_example() -> CriterionResult {
    timed(10, "type A standard embedding", || {
        let mut count = 0;
        for n in 2..=3 {
            let e = frame_for(GroupSpec::new(GroupType::A, n))?;
            let (rs, frame) = (&e.0, &e.1);
            for alpha in 1..=n {
                let c = Scalar::from(BigRational::new((n + 1 - alpha).into(), (n + 1).into()));
                let d = Dunkl::new(rs, c);
                for zeta in 0..=n {
                    let q = frame.t[alpha - 1].diff(zeta);
                    ensure!(!q.is_zero(), "A{n} alpha={alpha}: zero derivative");
                    ensure!(d.apply_all(&q)?.iter().all(MultiPoly::is_zero), "A{n} alpha={alpha} zeta={zeta}");
                    count += 1;
                }
            }
        }
        Ok(Ok(format!("{count} derivatives")))
    })
}

/// Every criterion in order.
pub fn run_all() -> Vec<CriterionResult> {
    vec![
        saito_flatness(),
        saito_derivatives_singular(),
        shift_families(),
        top_pairing(),
        route_equivalence(),
        isotypic_dimensions(),
        d_zero_singular(),
        complex_groups(),
        property_suites(),
        type_a_example(),
    ]
}
