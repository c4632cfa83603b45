use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use orbgenus::algebra::format_rational;
use orbgenus::classes::{brute_force_classes, centralizer_order, class_size, default_guard};
use orbgenus::classfn::{
    augmentation, induce_young, inner_product, restrict_young, thm_d_induction_oracle,
    young_inner_product, INDUCTION_ORACLE_GUARD,
};
use orbgenus::genus::{
    hecke_series, lambda_operations, todd_orbifold_series, total_symmetric_power, verify_dmvv,
};
use orbgenus::json::{
    class_function_from_json, class_to_json, class_type_to_json, mode_to_json, orbit_to_json,
    report_to_json,
};
use orbgenus::{enumerate_classes, enumerate_orbits, ClassFunction, OrderMode, PsiPolynomial};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::model::{degree, mode, parse_model};
use crate::output::{coefficient_json, coefficient_text, json_line};
use crate::{Command, Failure, Format, Genus, GenusArgs, Verify, MAX_SIZE};

type Outcome = Result<String, Failure>;

pub fn run(command: Command) -> Outcome {
    match command {
        Command::Orbits { level, size, out } => {
            let (h, mode) = mode(level)?;
            if size == 0 || size > MAX_SIZE {
                return Err(Failure::Usage(format!("--size must be between 1 and {MAX_SIZE}")));
            }
            orbits(h, mode, size, out.format)
        }
        Command::Classes { level, l, out } => {
            let (h, mode) = mode(level)?;
            classes(h, mode, degree("--l", l)?, out.format)
        }
        Command::Verify { what } => match what {
            Verify::Dmvv { level, n, model, out } => {
                let (h, mode) = mode(level)?;
                let n = degree("--n", n)?;
                dmvv(h, mode, n as usize, &model, out.format)
            }
            Verify::Frobenius { level, l, seed, guard, out } => {
                let (h, mode) = mode(level)?;
                frobenius(h, mode, degree("--l", l)?, seed, guard, out.format)
            }
            Verify::Oracle { level, l, guard, out } => {
                let (h, mode) = mode(level)?;
                oracle(h, mode, degree("--l", l)?, guard, out.format)
            }
        },
        Command::Genus { what } => match what {
            Genus::Sigma(args) => genus_series(GenusKind::Sigma, args),
            Genus::Hecke(args) => genus_series(GenusKind::Hecke, args),
            Genus::Lambda(args) => genus_series(GenusKind::Lambda, args),
            Genus::Todd { d, n, out } => todd(d, degree("--n", n)?, out.format),
        },
        Command::InnerProduct { level, l, lhs, rhs, out } => {
            let (h, mode) = mode(level)?;
            let l = degree("--l", l)?;
            let chi = load_class_function(lhs.as_deref(), h, l, mode)?;
            let xi = load_class_function(rhs.as_deref(), h, l, mode)?;
            let value = format_rational(&inner_product(&chi, &xi)?);
            Ok(match out.format {
                Format::Text => format!("{value}\n"),
                Format::Tsv => format!("value\n{value}\n"),
                Format::Json => json_line(&json!({
                    "h": h, "mode": mode_to_json(mode), "l": l, "value": value,
                })),
            })
        }
    }
}

fn orbits(h: usize, mode: OrderMode, size: u64, format: Format) -> Outcome {
    let list = enumerate_orbits(h, size, mode)?;
    let mut s = String::new();
    match format {
        Format::Text => {
            for t in &list {
                writeln!(s, "{t}").unwrap();
            }
        }
        Format::Tsv => {
            s.push_str("index\tsize\thnf\n");
            for (i, t) in list.iter().enumerate() {
                writeln!(s, "{i}\t{}\t{t}", t.size()).unwrap();
            }
        }
        Format::Json => {
            let orbits: Vec<Value> = list.iter().map(orbit_to_json).collect();
            s = json_line(&json!({
                "h": h, "mode": mode_to_json(mode), "size": size, "orbits": orbits,
            }));
        }
    }
    Ok(s)
}

fn classes(h: usize, mode: OrderMode, l: u64, format: Format) -> Outcome {
    let list = enumerate_classes(h, l, mode)?;
    let total: BigInt = list.iter().map(class_size).sum();
    let mut s = String::new();
    match format {
        Format::Text => {
            for c in &list {
                writeln!(s, "{c}\t{}\t{}", centralizer_order(c), class_size(c)).unwrap();
            }
            writeln!(s, "{} classes, {total} tuples", list.len()).unwrap();
        }
        Format::Tsv => {
            s.push_str("class\tcentralizer_order\tclass_size\n");
            for c in &list {
                writeln!(s, "{c}\t{}\t{}", centralizer_order(c), class_size(c)).unwrap();
            }
            writeln!(s, "# {} classes\t{total} tuples", list.len()).unwrap();
        }
        Format::Json => {
            let records: Vec<Value> = list.iter().map(class_to_json).collect();
            s = json_line(&json!({
                "h": h, "mode": mode_to_json(mode), "l": l, "classes": records,
                "class_count": list.len(), "total_tuples": total.to_string(),
            }));
        }
    }
    Ok(s)
}

fn dmvv(h: usize, mode: OrderMode, n: usize, model: &str, format: Format) -> Outcome {
    let model = parse_model(model, h)?;
    let report = verify_dmvv(&model, n, h, mode)?;
    let s = match format {
        Format::Text => {
            let mut s = String::new();
            for k in 0..=n {
                let (l, r) = (report.lhs.coeff(k), report.rhs.coeff(k));
                if l == r {
                    writeln!(s, "t^{k}: equal").unwrap();
                } else {
                    writeln!(s, "t^{k}: {} != {}", coefficient_text(l), coefficient_text(r)).unwrap();
                }
            }
            match report.first_mismatch {
                None => writeln!(s, "identity holds through t^{n}").unwrap(),
                Some(k) => writeln!(s, "identity fails at t^{k}").unwrap(),
            }
            s
        }
        Format::Tsv => {
            let mut s = String::from("n\tlhs\trhs\tequal\n");
            for k in 0..=n {
                let (l, r) = (report.lhs.coeff(k), report.rhs.coeff(k));
                writeln!(s, "{k}\t{}\t{}\t{}", coefficient_text(l), coefficient_text(r), l == r)
                    .unwrap();
            }
            s
        }
        Format::Json => json_line(&report_to_json(&report)),
    };
    finish(s, report.equal)
}

/// Prints the report and converts a failed check into exit status 1.
fn finish(s: String, ok: bool) -> Outcome {
    if ok {
        Ok(s)
    } else {
        print!("{s}");
        Err(Failure::Mismatch)
    }
}

fn oracle(h: usize, mode: OrderMode, l: u64, guard: Option<usize>, format: Format) -> Outcome {
    let guard = guard.unwrap_or_else(|| default_guard(h));
    let brute = brute_force_classes(h, l as usize, mode, Some(guard))?;
    let predicted: Vec<(orbgenus::OrbitTypeMultiset, BigInt)> = enumerate_classes(h, l, mode)?
        .into_iter()
        .map(|c| {
            let size = class_size(&c);
            (c, size)
        })
        .collect();
    let ok = brute == predicted;
    let classes = brute.len();
    let tuples: BigInt = brute.iter().map(|(_, n)| n).sum();
    let verdict = if ok { "match" } else { "mismatch" };
    let s = match format {
        Format::Text => {
            let mut s = String::new();
            if !ok {
                for (c, n) in &brute {
                    let expected = predicted.iter().find(|(p, _)| p == c).map(|(_, m)| m.to_string());
                    writeln!(s, "{c}\tcounted {n}\tpredicted {}", expected.unwrap_or("-".into()))
                        .unwrap();
                }
            }
            writeln!(s, "{classes} classes, {tuples} tuples, {verdict}").unwrap();
            s
        }
        Format::Tsv => {
            let mut s = String::from("class\tcounted\tpredicted\n");
            for (c, n) in &brute {
                let expected = predicted.iter().find(|(p, _)| p == c).map(|(_, m)| m.to_string());
                writeln!(s, "{c}\t{n}\t{}", expected.unwrap_or("-".into())).unwrap();
            }
            writeln!(s, "# {classes} classes\t{tuples} tuples\t{verdict}").unwrap();
            s
        }
        Format::Json => {
            let records: Vec<Value> = brute
                .iter()
                .map(|(c, n)| json!({"type": class_type_to_json(c), "count": n.to_string()}))
                .collect();
            json_line(&json!({
                "h": h, "mode": mode_to_json(mode), "l": l, "classes": records,
                "class_count": classes, "total_tuples": tuples.to_string(), "match": ok,
            }))
        }
    };
    finish(s, ok)
}

/// One line of the Frobenius report.
struct SplitCheck {
    j: u64,
    reciprocity: bool,
    augmentation: bool,
    literal: Option<bool>,
}

fn frobenius(
    h: usize,
    mode: OrderMode,
    l: u64,
    seed: u64,
    guard: Option<usize>,
    format: Format,
) -> Outcome {
    let guard = guard.unwrap_or(INDUCTION_ORACLE_GUARD);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();
    for j in 0..=l {
        let k = l - j;
        let chi = random_class_function(&mut rng, h, j, mode)?;
        let xi = random_class_function(&mut rng, h, k, mode)?;
        let zeta = random_class_function(&mut rng, h, l, mode)?;
        let induced = induce_young(&chi, &xi)?;
        let reciprocity = inner_product(&induced, &zeta)?
            == young_inner_product(&chi, &xi, &restrict_young(&zeta, j)?)?;
        let augmentation_ok =
            augmentation(&induced)? == augmentation(&chi)? * augmentation(&xi)?;
        let literal = if (l as usize) <= guard {
            Some(thm_d_induction_oracle(&chi, &xi, Some(guard))? == induced)
        } else {
            None
        };
        checks.push(SplitCheck { j, reciprocity, augmentation: augmentation_ok, literal });
    }
    let ok = checks
        .iter()
        .all(|c| c.reciprocity && c.augmentation && c.literal.unwrap_or(true));
    let word = |b: bool| if b { "ok" } else { "FAIL" };
    let literal_word = |c: &SplitCheck| c.literal.map_or("skipped", word);
    let s = match format {
        Format::Text => {
            let mut s = String::new();
            for c in &checks {
                writeln!(
                    s,
                    "j={} k={}: reciprocity {}, augmentation {}, literal induction {}",
                    c.j,
                    l - c.j,
                    word(c.reciprocity),
                    word(c.augmentation),
                    literal_word(c)
                )
                .unwrap();
            }
            writeln!(s, "{}", if ok { "all checks passed" } else { "some checks failed" }).unwrap();
            s
        }
        Format::Tsv => {
            let mut s = String::from("j\tk\treciprocity\taugmentation\tliteral_induction\n");
            for c in &checks {
                writeln!(
                    s,
                    "{}\t{}\t{}\t{}\t{}",
                    c.j,
                    l - c.j,
                    word(c.reciprocity),
                    word(c.augmentation),
                    literal_word(c)
                )
                .unwrap();
            }
            s
        }
        Format::Json => {
            let records: Vec<Value> = checks
                .iter()
                .map(|c| {
                    json!({
                        "j": c.j, "k": l - c.j, "reciprocity": c.reciprocity,
                        "augmentation": c.augmentation, "literal_induction": c.literal,
                    })
                })
                .collect();
            json_line(&json!({
                "h": h, "mode": mode_to_json(mode), "l": l, "seed": seed,
                "splits": records, "ok": ok,
            }))
        }
    };
    finish(s, ok)
}

fn random_class_function(
    rng: &mut ChaCha8Rng,
    h: usize,
    l: u64,
    mode: OrderMode,
) -> Result<ClassFunction<BigRational>, Failure> {
    Ok(ClassFunction::from_fn(h, l, mode, |_| {
        BigRational::new(BigInt::from(rng.gen_range(-9..=9)), BigInt::from(rng.gen_range(1..=6)))
    })?)
}

fn load_class_function(
    path: Option<&Path>,
    h: usize,
    l: u64,
    mode: OrderMode,
) -> Result<ClassFunction<BigRational>, Failure> {
    let Some(path) = path else {
        return Ok(ClassFunction::one(h, l, mode)?);
    };
    let shown = path.display();
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {shown}: {e}")))?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| Failure::Usage(format!("{shown} is not JSON: {e}")))?;
    let chi = class_function_from_json(&value)?;
    let cat = chi.catalog();
    if cat.h() != h || cat.mode() != mode || cat.degree() != l {
        return Err(Failure::Usage(format!(
            "{shown} is a class function for h={}, l={}, not h={h}, l={l}",
            cat.h(),
            cat.degree()
        )));
    }
    Ok(chi)
}

#[derive(Clone, Copy)]
enum GenusKind {
    Sigma,
    Hecke,
    Lambda,
}

fn genus_series(kind: GenusKind, args: GenusArgs) -> Outcome {
    let (h, mode) = mode(args.level)?;
    let n = degree("--n", args.n)? as usize;
    let model = parse_model(&args.model, h)?;
    let (name, first, values): (&str, usize, Vec<PsiPolynomial>) = match kind {
        GenusKind::Sigma => {
            ("sigma", 0, total_symmetric_power(&model, n, h, mode)?.into_coefficients())
        }
        GenusKind::Lambda => ("lambda", 0, lambda_operations(&model, n, h, mode)?.into_coefficients()),
        GenusKind::Hecke => {
            let coeffs = hecke_series(&model, n, h, mode)?.into_coefficients();
            ("hecke", 1, coeffs.into_iter().skip(1).collect())
        }
    };
    Ok(render_values(name, first, &values, coefficient_text, coefficient_json, args.out.format, |v| {
        v.insert("h".into(), json!(h));
        v.insert("mode".into(), mode_to_json(mode));
    }))
}

fn todd(d: i64, n: u64, format: Format) -> Outcome {
    let series = todd_orbifold_series(&BigInt::from(d), n as usize)?;
    Ok(render_values(
        "todd",
        0,
        series.coefficients(),
        format_rational,
        |r| Value::String(format_rational(r)),
        format,
        |v| {
            v.insert("d".into(), json!(d));
        },
    ))
}

/// Renders `values[i]` as the coefficient of index `first + i`.
fn render_values<T>(
    name: &str,
    first: usize,
    values: &[T],
    text: impl Fn(&T) -> String,
    to_json: impl Fn(&T) -> Value,
    format: Format,
    extra: impl FnOnce(&mut serde_json::Map<String, Value>),
) -> String {
    match format {
        Format::Text => {
            let parts: Vec<String> = values.iter().map(&text).collect();
            format!("{}\n", parts.join(" "))
        }
        Format::Tsv => {
            let mut s = String::from("n\tvalue\n");
            for (i, v) in values.iter().enumerate() {
                writeln!(s, "{}\t{}", first + i, text(v)).unwrap();
            }
            s
        }
        Format::Json => {
            let mut map = serde_json::Map::new();
            map.insert("kind".into(), json!(name));
            extra(&mut map);
            map.insert("first_index".into(), json!(first));
            map.insert("values".into(), Value::Array(values.iter().map(to_json).collect()));
            json_line(&Value::Object(map))
        }
    }
}

