//! Command implementations producing JSON reports. Every matrix reported as
//! a witness or an automorphism is checked against the structure-constant
//! oracle before it is returned.

use bl4kit::automorphisms::aut_family_of;
use bl4kit::groups::FamilyParams;
use bl4kit::normal_form::{canonical_label, classify_constants, property_table, WitnessChain};
use bl4kit::selftest::SuiteReport;
use bl4kit::{is_isomorphism, Constants4, Label, Mat4, Rational};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use crate::document::{
    matrix_doc, parse_matrix, read_document, read_json, Algebra, AlgebraDocument, InputError, LabelDoc, Q,
};
use crate::{Failure, Format};

fn load(arg: &str) -> Result<Algebra, Failure> {
    Ok(read_document(arg)?.to_algebra()?)
}

fn classify_algebra(a: &Algebra) -> Result<(Label, WitnessChain<Rational>), Failure> {
    let (label, chain) = match a {
        Algebra::Presentation(p) => canonical_label(p)?,
        Algebra::Constants(sc) => classify_constants(sc)?,
    };
    verify(&a.constants(), &label.structure_constants(), chain.product());
    Ok((label, chain))
}

fn verify(a: &Constants4, b: &Constants4, m: &Mat4) {
    assert!(is_isomorphism(a, b, m).unwrap_or(false), "internal error: witness failed verification");
}

fn label_json(l: &Label) -> Value {
    serde_json::to_value(LabelDoc::from(l)).expect("labels serialize")
}

fn params_json(p: &FamilyParams<Rational>) -> Value {
    let mut m = Map::new();
    if let FamilyParams::Signed { coset, .. } = p {
        m.insert("coset".into(), json!(coset));
    }
    for (k, v) in p.named() {
        m.insert(k.into(), json!(Q(v)));
    }
    Value::Object(m)
}

pub fn classify(input: &str, witness: bool) -> Result<Value, Failure> {
    let algebra = load(input)?;
    let (label, chain) = classify_algebra(&algebra)?;
    let props = property_table(&label);
    let family = aut_family_of(&label)?;
    let mut out = json!({
        "label": label_json(&label),
        "canonical": AlgebraDocument::from_presentation(&label.presentation()),
        "properties": { "lie": props.lie, "malcev": props.malcev, "binary_lie": props.binary_lie },
        "aut_group": { "abstract_id": family.abstract_id.name() },
    });
    if witness {
        out["witness"] = json!(matrix_doc(chain.product()));
        out["steps"] = json!(chain.steps().iter().map(|(k, _)| k.as_str()).collect::<Vec<_>>());
    }
    Ok(out)
}

pub fn iso(a: &str, b: &str) -> Result<Value, Failure> {
    let (a, b) = (load(a)?, load(b)?);
    let (la, ca) = classify_algebra(&a)?;
    let (lb, cb) = classify_algebra(&b)?;
    if la != lb {
        return Ok(json!({ "isomorphic": false, "labels": [label_json(&la), label_json(&lb)] }));
    }
    let w = ca.product() * &cb.product().inverse().expect("witnesses are invertible");
    verify(&a.constants(), &b.constants(), &w);
    Ok(json!({ "isomorphic": true, "witness": matrix_doc(&w) }))
}

/// Automorphisms of the input are `W g W^-1` for `g` in the canonical
/// family, where `W` maps the canonical algebra onto the input.
pub fn aut(input: &str, sample: Option<usize>, check: Option<&str>, seed: u64, height: i64) -> Result<Value, Failure> {
    let algebra = load(input)?;
    let sc = algebra.constants();
    let (label, chain) = classify_algebra(&algebra)?;
    let family = aut_family_of(&label)?;
    let w = chain.product().clone();
    let w_inv = w.inverse().expect("witnesses are invertible");
    let mut out = json!({
        "label": label_json(&label),
        "aut_group": { "abstract_id": family.abstract_id.name(), "literal": format!("{:?}", family.literal) },
    });
    if let Some(n) = sample {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let samples: Vec<Value> = (0..n)
            .map(|_| {
                let (params, g) = family.literal.sample(&mut rng, height);
                let m = &(&w * &g) * &w_inv;
                verify(&sc, &sc, &m);
                json!({ "params": params_json(&params), "matrix": matrix_doc(&m) })
            })
            .collect();
        out["samples"] = Value::Array(samples);
    }
    if let Some(arg) = check {
        let m = parse_matrix(&read_json(arg)?)?;
        if !m.is_invertible() {
            return Err(InputError::Document("matrix is singular".into()).into());
        }
        let g = &(&w_inv * &m) * &w;
        let member = family.literal.membership(&g);
        let oracle = is_isomorphism(&sc, &sc, &m)?;
        assert_eq!(oracle, member.is_ok(), "internal error: membership disagrees with the oracle");
        out["check"] = match member {
            Ok(params) => json!({ "accepted": true, "params": params_json(&params) }),
            Err(reason) => json!({ "accepted": false, "reason": reason.to_string() }),
        };
    }
    Ok(out)
}

pub fn print(value: &Value, format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(value).expect("values serialize")),
        Format::Text => print_text(value, ""),
    }
}

fn print_text(value: &Value, prefix: &str) {
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                print_text(v, &key);
            }
        }
        Value::String(s) => println!("{prefix}: {s}"),
        other => println!("{prefix}: {other}"),
    }
}

pub fn print_selftest(reports: &[SuiteReport], format: Format) {
    match format {
        Format::Json => {
            let v: Vec<Value> = reports
                .iter()
                .map(|r| {
                    json!({
                        "criterion": r.criterion, "name": r.name, "passed": r.passed,
                        "failed": r.failed, "ok": r.ok(), "failures": r.failures,
                    })
                })
                .collect();
            print(&Value::Array(v), format);
        }
        Format::Text => {
            for r in reports {
                let verdict = if r.ok() { "PASS" } else { "FAIL" };
                println!("{:>2} {verdict} {} ({} passed, {} failed)", r.criterion, r.name, r.passed, r.failed);
                for f in &r.failures {
                    println!("     {f}");
                }
            }
        }
    }
}
