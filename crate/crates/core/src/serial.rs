//! JSON encoding of polynomials, Saito frames and singular families.
//!
//! Polynomial schema:
//! `{"vars": n, "field": {"kind": "Q" | "Qsqrt" | "cyclotomic", "param": k},
//!   "terms": [{"exp": [e_1, ..., e_n], "coef": c}]}`
//! where a rational `c` is the string `"p/q"` and an extension element is an
//! array of such strings (coefficients of `1, w, w^2, ...`).

use serde_json::{json, Map, Value};

use crate::coxeter::{GroupSpec, RootSystem};
use crate::error::{Error, Result};
use crate::field::{format_rational, parse_rational, Field, Scalar};
use crate::linalg::PolyMatrix;
use crate::poly::MultiPoly;
use crate::saito::SaitoFrame;
use crate::shift::{FamilyCertificate, SingularFamily};

fn schema(path: &str, msg: impl Into<String>) -> Error {
    Error::Schema {
        path: path.to_string(),
        msg: msg.into(),
    }
}

pub fn scalar_to_json(c: &Scalar) -> Value {
    match c {
        Scalar::Rational(r) => Value::String(format_rational(r)),
        Scalar::Extension(e) => Value::Array(e.coeffs().iter().map(|r| Value::String(format_rational(r))).collect()),
    }
}

fn scalar_from_json(v: &Value, field: &Field, path: &str) -> Result<Scalar> {
    let rat = |v: &Value, path: &str| -> Result<_> {
        let s = v.as_str().ok_or_else(|| schema(path, "expected a \"p/q\" string"))?;
        parse_rational(s).map_err(|e| schema(path, e.to_string()))
    };
    match v {
        Value::String(_) => Ok(Scalar::Rational(rat(v, path)?)),
        Value::Array(items) => {
            let ctx = field
                .context()
                .ok_or_else(|| schema(path, "extension coefficient in a polynomial over Q"))?;
            if items.len() != ctx.degree() {
                return Err(schema(path, format!("expected {} coefficients, got {}", ctx.degree(), items.len())));
            }
            let coeffs = items
                .iter()
                .enumerate()
                .map(|(k, x)| rat(x, &format!("{path}[{k}]")))
                .collect::<Result<Vec<_>>>()?;
            Ok(Scalar::from_coeffs(ctx, coeffs))
        }
        _ => Err(schema(path, "expected a string or an array of strings")),
    }
}

pub fn poly_to_json(p: &MultiPoly) -> Value {
    let (kind, param) = p.field().tag();
    let terms: Vec<Value> = p
        .terms()
        .map(|(m, c)| json!({"exp": m.exps(), "coef": scalar_to_json(c)}))
        .collect();
    json!({
        "vars": p.nvars(),
        "field": {"kind": kind, "param": param},
        "terms": terms,
    })
}

fn get<'a>(obj: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| schema(path, format!("missing key {key:?}")))
}

fn as_object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| schema(path, "expected an object"))
}

fn as_array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| schema(path, "expected an array"))
}

fn as_u64(v: &Value, path: &str) -> Result<u64> {
    v.as_u64().ok_or_else(|| schema(path, "expected a nonnegative integer"))
}

pub fn poly_from_json_at(v: &Value, path: &str) -> Result<MultiPoly> {
    let obj = as_object(v, path)?;
    let nvars = as_u64(get(obj, "vars", path)?, &format!("{path}.vars"))? as usize;
    let fpath = format!("{path}.field");
    let fobj = as_object(get(obj, "field", path)?, &fpath)?;
    let kind = get(fobj, "kind", &fpath)?
        .as_str()
        .ok_or_else(|| schema(&format!("{fpath}.kind"), "expected a string"))?;
    let param = get(fobj, "param", &fpath)?
        .as_i64()
        .ok_or_else(|| schema(&format!("{fpath}.param"), "expected an integer"))?;
    let field = Field::from_tag(kind, param).map_err(|e| schema(&fpath, e.to_string()))?;
    let tpath = format!("{path}.terms");
    let mut terms = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (k, t) in as_array(get(obj, "terms", path)?, &tpath)?.iter().enumerate() {
        let here = format!("{tpath}[{k}]");
        let tobj = as_object(t, &here)?;
        let epath = format!("{here}.exp");
        let exps = as_array(get(tobj, "exp", &here)?, &epath)?
            .iter()
            .enumerate()
            .map(|(i, e)| {
                let p = format!("{epath}[{i}]");
                u32::try_from(as_u64(e, &p)?).map_err(|_| schema(&p, "exponent too large"))
            })
            .collect::<Result<Vec<u32>>>()?;
        if exps.len() != nvars {
            return Err(schema(&epath, format!("expected {nvars} exponents, got {}", exps.len())));
        }
        if !seen.insert(exps.clone()) {
            return Err(schema(&epath, "repeated exponent vector"));
        }
        let coef = scalar_from_json(get(tobj, "coef", &here)?, &field, &format!("{here}.coef"))?;
        if coef.is_zero() {
            return Err(schema(&format!("{here}.coef"), "zero coefficients are not stored"));
        }
        terms.push((exps, coef));
    }
    MultiPoly::from_terms(nvars, terms).with_field(field)
}

pub fn poly_from_json(v: &Value) -> Result<MultiPoly> {
    poly_from_json_at(v, "$")
}

pub fn poly_to_string(p: &MultiPoly) -> String {
    serde_json::to_string_pretty(&poly_to_json(p)).expect("JSON values always serialize")
}

pub fn poly_from_str(s: &str) -> Result<MultiPoly> {
    let v: Value = serde_json::from_str(s)?;
    poly_from_json(&v)
}

fn polys_from_json(v: &Value, path: &str) -> Result<Vec<MultiPoly>> {
    as_array(v, path)?
        .iter()
        .enumerate()
        .map(|(i, p)| poly_from_json_at(p, &format!("{path}[{i}]")))
        .collect()
}

fn degrees_from_json(v: &Value, path: &str) -> Result<Vec<u32>> {
    as_array(v, path)?
        .iter()
        .enumerate()
        .map(|(i, d)| Ok(as_u64(d, &format!("{path}[{i}]"))? as u32))
        .collect()
}

fn group_from_json(v: &Value, path: &str) -> Result<GroupSpec> {
    v.as_str()
        .ok_or_else(|| schema(path, "expected a group string such as \"D4\""))?
        .parse()
        .map_err(|e: Error| schema(path, e.to_string()))
}

/// `{group, degrees, h, t: [poly], U: [[poly]]}`.
pub fn frame_to_json(frame: &SaitoFrame) -> Value {
    let u = crate::shift::compute_u(frame);
    json!({
        "group": frame.group.to_string(),
        "degrees": frame.degrees,
        "h": frame.h,
        "t": frame.t.iter().map(poly_to_json).collect::<Vec<_>>(),
        "U": u.rows().iter().map(|r| r.iter().map(poly_to_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

pub fn frame_from_json(v: &Value) -> Result<SaitoFrame> {
    let obj = as_object(v, "$")?;
    let group = group_from_json(get(obj, "group", "$")?, "$.group")?;
    let degrees = degrees_from_json(get(obj, "degrees", "$")?, "$.degrees")?;
    let h = as_u64(get(obj, "h", "$")?, "$.h")? as u32;
    let t = polys_from_json(get(obj, "t", "$")?, "$.t")?;
    let n = t.len();
    if degrees.len() != n {
        return Err(schema("$.degrees", format!("expected {n} degrees")));
    }
    let urows = as_array(get(obj, "U", "$")?, "$.U")?;
    if urows.len() != n {
        return Err(schema("$.U", format!("expected {n} rows")));
    }
    let mut g = vec![Vec::new(); n];
    for (b, row) in urows.iter().enumerate() {
        let path = format!("$.U[{b}]");
        let row = polys_from_json(row, &path)?;
        if row.len() != n {
            return Err(schema(&path, format!("expected {n} entries")));
        }
        if let Some(a) = row.iter().position(|p| p.nvars() != n) {
            return Err(schema(&format!("{path}[{a}].vars"), format!("expected {n} variables")));
        }
        g[b] = row.into_iter().rev().collect();
    }
    let g = PolyMatrix::new(n, g).map_err(|e| schema("$.U", e.to_string()))?;
    Ok(SaitoFrame { group, degrees, h, t, g })
}

fn certificate_to_json(c: &FamilyCertificate) -> Value {
    json!({
        "dunkl_annihilated": c.dunkl_annihilated,
        "degree_ok": c.degree_ok,
        "span_dim": c.span_dim,
        "reflection_type": c.reflection_type,
        "cross_symmetric": c.cross_symmetric,
        "euler_ok": c.euler_ok,
        "gradient_ok": c.gradient_ok,
    })
}

fn certificate_from_json(v: &Value, path: &str) -> Result<FamilyCertificate> {
    let obj = as_object(v, path)?;
    let flag = |k: &str| -> Result<bool> {
        get(obj, k, path)?
            .as_bool()
            .ok_or_else(|| schema(&format!("{path}.{k}"), "expected a boolean"))
    };
    Ok(FamilyCertificate {
        dunkl_annihilated: flag("dunkl_annihilated")?,
        degree_ok: flag("degree_ok")?,
        span_dim: as_u64(get(obj, "span_dim", path)?, &format!("{path}.span_dim"))? as usize,
        reflection_type: flag("reflection_type")?,
        cross_symmetric: flag("cross_symmetric")?,
        euler_ok: flag("euler_ok")?,
        gradient_ok: flag("gradient_ok")?,
    })
}

pub fn family_to_json(f: &SingularFamily) -> Value {
    json!({
        "group": f.group.to_string(),
        "beta": f.beta,
        "m": f.m,
        "c": format_rational(&f.c),
        "xi": f.xi.iter().map(poly_to_json).collect::<Vec<_>>(),
        "q": f.q.iter().map(poly_to_json).collect::<Vec<_>>(),
        "Q_t": poly_to_json(&f.potential_t),
        "Q": poly_to_json(&f.potential),
        "certificate": f.certificate.as_ref().map(certificate_to_json),
    })
}

pub fn family_from_json(v: &Value) -> Result<SingularFamily> {
    let obj = as_object(v, "$")?;
    let group = group_from_json(get(obj, "group", "$")?, "$.group")?;
    let beta = as_u64(get(obj, "beta", "$")?, "$.beta")? as usize;
    let m = as_u64(get(obj, "m", "$")?, "$.m")? as u32;
    let c = get(obj, "c", "$")?
        .as_str()
        .ok_or_else(|| schema("$.c", "expected a \"p/q\" string"))
        .and_then(|s| parse_rational(s).map_err(|e| schema("$.c", e.to_string())))?;
    let certificate = match get(obj, "certificate", "$")? {
        Value::Null => None,
        v => Some(certificate_from_json(v, "$.certificate")?),
    };
    Ok(SingularFamily {
        group,
        beta,
        m,
        c,
        xi: polys_from_json(get(obj, "xi", "$")?, "$.xi")?,
        q: polys_from_json(get(obj, "q", "$")?, "$.q")?,
        potential_t: poly_from_json_at(get(obj, "Q_t", "$")?, "$.Q_t")?,
        potential: poly_from_json_at(get(obj, "Q", "$")?, "$.Q")?,
        certificate,
    })
}

/// `{group, rank, ambient_dim, roots: [{vector, norm2}], simple_roots, degrees, h}`.
pub fn root_system_to_json(rs: &RootSystem) -> Value {
    let roots: Vec<Value> = rs
        .roots()
        .iter()
        .map(|r| {
            json!({
                "vector": r.vector.iter().map(scalar_to_json).collect::<Vec<_>>(),
                "norm2": scalar_to_json(&r.norm2),
            })
        })
        .collect();
    json!({
        "group": rs.spec().to_string(),
        "rank": rs.rank(),
        "ambient_dim": rs.ambient_dim(),
        "positive_roots": rs.roots().len(),
        "roots": roots,
        "simple_roots": rs.simple_indices(),
        "degrees": rs.degrees(),
        "h": rs.coxeter_number(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{build_root_system, GroupType};
    use crate::field::FieldContext;
    use crate::saito::saito_frame;
    use crate::shift::certified_family;

    #[test]
    fn poly_round_trip() {
        let p = &MultiPoly::var(2, 0).pow(2) - &MultiPoly::var(2, 1).scale(&Scalar::frac(1, 3));
        let s = poly_to_string(&p);
        assert!(s.contains("\"-1/3\""));
        assert_eq!(poly_from_str(&s).unwrap(), p);

        let ctx = FieldContext::cyclotomic(3).unwrap();
        let w = ctx.generator();
        let q = &MultiPoly::var(2, 0).scale(&w) + &MultiPoly::var(2, 1).pow(3);
        let back = poly_from_str(&poly_to_string(&q)).unwrap();
        assert_eq!(back, q);
        assert_eq!(back.field(), q.field());
    }

    #[test]
    fn rejects_malformed() {
        let bad = r#"{"vars": 1, "field": {"kind": "Q", "param": 0}, "terms": [{"exp": [1], "coef": "1/0"}]}"#;
        match poly_from_str(bad) {
            Err(Error::Schema { path, .. }) => assert_eq!(path, "$.terms[0].coef"),
            other => panic!("expected a schema error, got {other:?}"),
        }
        let bad = r#"{"vars": 2, "field": {"kind": "Q", "param": 0}, "terms": [{"exp": [1], "coef": "1"}]}"#;
        assert!(matches!(poly_from_str(bad), Err(Error::Schema { path, .. }) if path == "$.terms[0].exp"));
        let bad = r#"{"vars": 1, "field": {"kind": "Q", "param": 0}, "terms": [{"exp": [1], "coef": ["1", "2"]}]}"#;
        assert!(matches!(poly_from_str(bad), Err(Error::Schema { .. })));
        let bad = r#"{"vars": 1, "field": {"kind": "R", "param": 0}, "terms": []}"#;
        assert!(matches!(poly_from_str(bad), Err(Error::Schema { path, .. }) if path == "$.field"));
        assert!(poly_from_str("{").is_err());
    }

    #[test]
    fn frame_and_family_round_trip() {
        let d4 = build_root_system(GroupType::D, 4).unwrap();
        let f = saito_frame(&d4).unwrap();
        let back = frame_from_json(&frame_to_json(&f)).unwrap();
        assert_eq!(back, f);
        let fam = certified_family(&d4, &f, 2, 1).unwrap();
        let back = family_from_json(&family_to_json(&fam)).unwrap();
        assert_eq!(back, fam);
    }
}
