//! Request dispatch: build modules from the payload, run the command,
//! and assemble the report.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use socle::exactfield::{FactoredRatFun, GaussianRational, PartialFraction, Polynomial};
use socle::latex;
use socle::oracle::{
    closure_over_sl2, closure_over_weyl, compare_patterns, pole_lattice, ClosureReport,
    OracleComparison, OracleWindow,
};
use socle::osp::{self, GradedElement, OspParams, UngradedOspModule};
use socle::sample;
use socle::skewlaurent::{coboundary_witness, ShiftAut};
use socle::sl2::{self, sl2_shift, Sl2Module, SocleDescriptor};
use socle::weyl::{self, weyl_shift, WeylModule};
use socle::{Error, Result};

use crate::report::{emit_error, emit_report, Report};
use crate::request::{read_payload, Algebra, Cli, Command, Format, Payload};

/// Fixed seed so `verify` runs are reproducible.
const VERIFY_SEED: u64 = 2024;

type RunResult = std::result::Result<Report, (&'static str, Error)>;

pub fn execute(cli: &Cli) -> i32 {
    let raw = match read_payload(&cli.input) {
        Ok(raw) => raw,
        Err(error) => return emit_error("read-input", &error),
    };
    let payload: Payload = match serde_json::from_str(&raw) {
        Ok(payload) => payload,
        Err(error) => {
            return emit_error("parse-request", &Error::Parse(error.to_string()));
        }
    };
    match dispatch(cli, &payload) {
        Ok(report) => emit_report(
            cli.algebra.name(),
            cli.command.name(),
            &report,
            cli.format == Format::Latex,
        ),
        Err((operation, error)) => emit_error(operation, &error),
    }
}

fn dispatch(cli: &Cli, payload: &Payload) -> RunResult {
    match cli.command {
        Command::Normalize => normalize(cli, payload).map_err(|e| ("normalize", e)),
        Command::Basis => basis(cli, payload).map_err(|e| ("basis", e)),
        Command::Act => act(cli, payload).map_err(|e| ("act", e)),
        Command::Iso => iso(cli, payload).map_err(|e| ("iso", e)),
        Command::Verify => verify(cli, payload).map_err(|e| ("verify", e)),
        Command::OracleCheck => oracle_check(cli, payload).map_err(|e| ("oracle-check", e)),
        Command::Fg => fg(cli, payload).map_err(|e| ("fg", e)),
    }
}

fn missing(field: &str) -> Error {
    Error::InvalidParameter(format!("field `{field}` is required"))
}

fn require_u(payload: &Payload) -> Result<FactoredRatFun> {
    payload.u.clone().ok_or_else(|| missing("u"))
}

fn require_r1(payload: &Payload) -> Result<GaussianRational> {
    payload.r1.clone().ok_or_else(|| missing("r1"))
}

fn require_lambda(payload: &Payload) -> Result<GaussianRational> {
    payload.lambda.clone().ok_or_else(|| missing("lambda"))
}

fn require_element(payload: &Payload) -> Result<PartialFraction> {
    payload.element.clone().ok_or_else(|| missing("element"))
}

fn require_operator(payload: &Payload) -> Result<&str> {
    payload.operator.as_deref().ok_or_else(|| missing("operator"))
}

fn sl2_from(payload: &Payload) -> Result<Sl2Module> {
    Ok(Sl2Module::from_r1(require_r1(payload)?, require_u(payload)?))
}

fn weyl_from(payload: &Payload) -> Result<WeylModule> {
    Ok(WeylModule::new(require_u(payload)?))
}

fn osp_from(payload: &Payload) -> Result<OspParams> {
    Ok(OspParams::new(require_u(payload)?, require_lambda(payload)?))
}

fn ungraded_from(payload: &Payload) -> Result<UngradedOspModule> {
    Ok(UngradedOspModule::new(WeylModule::new(require_u(payload)?)))
}

fn to_value<T: serde::Serialize>(value: &T) -> serde_json::Value {
    serde_json::to_value(value).expect("library types serialize")
}

fn parse_side<T: serde::de::DeserializeOwned>(
    value: &Option<serde_json::Value>,
    field: &str,
) -> Result<T> {
    let value = value.as_ref().ok_or_else(|| missing(field))?;
    serde_json::from_value(value.clone())
        .map_err(|e| Error::Parse(format!("field `{field}`: {e}")))
}

fn normalize(cli: &Cli, payload: &Payload) -> Result<Report> {
    match cli.algebra {
        Algebra::Sl2 => {
            let module = sl2_from(payload)?;
            let family = module.family();
            let result = json!({
                "module": to_value(&module),
                "theta": to_value(family.theta()),
                "omega": family.omega().to_string(),
                "roots": [to_value(family.roots()[0]), to_value(family.roots()[1])],
            });
            let latex = format!(
                "u = {}, \\quad \\theta = {}",
                latex::factored(module.u()),
                latex::gaussian(family.theta())
            );
            Ok(Report::new(result, latex))
        }
        Algebra::Weyl => {
            let module = weyl_from(payload)?;
            let latex = format!("u = {}", latex::factored(module.u()));
            Ok(Report::new(json!({ "module": to_value(&module) }), latex))
        }
        Algebra::OspGraded => {
            let params = osp_from(payload)?.sign_normalized();
            let latex = format!(
                "u = {}, \\quad \\lambda = {}",
                latex::factored(params.u()),
                latex::gaussian(params.lambda())
            );
            Ok(Report::new(json!({ "params": to_value(&params) }), latex))
        }
        Algebra::OspUngraded => {
            let module = ungraded_from(payload)?;
            let latex = format!("u = {}", latex::factored(module.weyl().u()));
            Ok(Report::new(json!({ "module": to_value(&module) }), latex))
        }
    }
}

fn descriptor_block(
    descriptor: &SocleDescriptor,
    window: &OracleWindow,
) -> serde_json::Value {
    let elements: Vec<serde_json::Value> = descriptor
        .enumerate_window(window.max_shift, window.max_degree)
        .iter()
        .map(to_value)
        .collect();
    json!({ "descriptor": to_value(descriptor), "elements": elements })
}

fn basis(cli: &Cli, payload: &Payload) -> Result<Report> {
    let window = cli.window(payload)?;
    match cli.algebra {
        Algebra::Sl2 => {
            let module = sl2_from(payload)?;
            let descriptor = sl2::socle_descriptor(&module);
            Ok(Report::new(
                descriptor_block(&descriptor, &window),
                latex::descriptor(&descriptor),
            ))
        }
        Algebra::Weyl => {
            let module = weyl_from(payload)?;
            let descriptor = weyl::socle_descriptor(&module);
            Ok(Report::new(
                descriptor_block(&descriptor, &window),
                latex::descriptor(&descriptor),
            ))
        }
        Algebra::OspGraded => {
            let params = osp_from(payload)?;
            let (even, odd) = params.graded_socle_descriptor();
            let result = json!({
                "even": descriptor_block(&even, &window),
                "odd": descriptor_block(&odd, &window),
            });
            Ok(Report::new(result, latex::graded_descriptor(&even, &odd)))
        }
        Algebra::OspUngraded => {
            let module = ungraded_from(payload)?;
            let descriptor = weyl::socle_descriptor(module.weyl());
            Ok(Report::new(
                descriptor_block(&descriptor, &window),
                latex::descriptor(&descriptor),
            ))
        }
    }
}

fn unknown_operator(operator: &str, algebra: &str) -> Error {
    Error::InvalidParameter(format!("unknown operator `{operator}` for {algebra}"))
}

fn element_report(result: PartialFraction) -> Report {
    let latex = latex::partial_fraction(&result);
    Report::new(json!({ "element": to_value(&result) }), latex)
}

fn act(cli: &Cli, payload: &Payload) -> Result<Report> {
    let operator = require_operator(payload)?;
    match cli.algebra {
        Algebra::Sl2 => {
            let module = sl2_from(payload)?;
            let v = require_element(payload)?;
            let result = match operator {
                "e" => module.act_e(&v),
                "f" => module.act_f(&v),
                "h" => module.act_h(&v),
                "casimir" => module.act_casimir(&v),
                _ => return Err(unknown_operator(operator, "sl2")),
            };
            Ok(element_report(result))
        }
        Algebra::Weyl => {
            let module = weyl_from(payload)?;
            let v = require_element(payload)?;
            let result = match operator {
                "a" => module.act_a(&v),
                "b" => module.act_b(&v),
                "h" => module.act_h(&v),
                _ => return Err(unknown_operator(operator, "weyl")),
            };
            Ok(element_report(result))
        }
        Algebra::OspGraded => {
            let params = osp_from(payload)?;
            let element = GradedElement::new(
                payload.even.clone().unwrap_or_else(PartialFraction::zero),
                payload.odd.clone().unwrap_or_else(PartialFraction::zero),
            );
            let result = match operator {
                "p" => osp::act_p(&params, &element),
                "q" => osp::act_q(&params, &element),
                "e" => osp::act_e(&params, &element),
                "f" => osp::act_f(&params, &element),
                "h" => element.mul_h(),
                "scasimir" => osp::scasimir_apply(&params, &element),
                "casimir" => osp::casimir_apply(&params, &element),
                _ => return Err(unknown_operator(operator, "osp-graded")),
            };
            let latex = format!(
                "\\text{{even: }} {} \\\\ \\text{{odd: }} {}",
                latex::partial_fraction(result.even()),
                latex::partial_fraction(result.odd())
            );
            let value = json!({
                "even": to_value(result.even()),
                "odd": to_value(result.odd()),
            });
            Ok(Report::new(value, latex))
        }
        Algebra::OspUngraded => {
            let module = ungraded_from(payload)?;
            let v = require_element(payload)?;
            let result = match operator {
                "p" => module.act_p_scaled(&v),
                "q" => module.act_q_scaled(&v),
                "h" => module.act_h(&v),
                "scasimir" => module.scasimir_apply(&v),
                _ => return Err(unknown_operator(operator, "osp-ungraded")),
            };
            Ok(element_report(result))
        }
    }
}

/// The parameters of an isomorphism-request side, kept exactly as written
/// so the reported witness relates the original parameters rather than
/// their canonical forms.
#[derive(serde::Deserialize)]
struct RawSl2Side {
    r1: GaussianRational,
    u: FactoredRatFun,
}

#[derive(serde::Deserialize)]
struct RawParameterSide {
    u: FactoredRatFun,
}

fn witness_for(
    left: &FactoredRatFun,
    right: &FactoredRatFun,
    shift: &ShiftAut,
) -> serde_json::Value {
    match coboundary_witness(&right.div(left), shift) {
        Ok(witness) => to_value(&witness),
        Err(_) => serde_json::Value::Null,
    }
}

fn iso_report(
    isomorphic: bool,
    left: serde_json::Value,
    right: serde_json::Value,
    witness: serde_json::Value,
) -> Report {
    let latex = format!("\\text{{isomorphic: {isomorphic}}}");
    Report::new(
        json!({
            "isomorphic": isomorphic,
            "left": left,
            "right": right,
            "witness": witness,
        }),
        latex,
    )
}

fn iso(cli: &Cli, payload: &Payload) -> Result<Report> {
    match cli.algebra {
        Algebra::Sl2 => {
            let raw_left: RawSl2Side = parse_side(&payload.left, "left")?;
            let raw_right: RawSl2Side = parse_side(&payload.right, "right")?;
            let left = Sl2Module::from_r1(raw_left.r1, raw_left.u.clone());
            let right = Sl2Module::from_r1(raw_right.r1, raw_right.u.clone());
            let isomorphic = left.is_isomorphic(&right);
            let witness = if isomorphic {
                witness_for(&raw_left.u, &raw_right.u, &sl2_shift())
            } else {
                serde_json::Value::Null
            };
            Ok(iso_report(isomorphic, to_value(&left), to_value(&right), witness))
        }
        Algebra::Weyl => {
            let raw_left: RawParameterSide = parse_side(&payload.left, "left")?;
            let raw_right: RawParameterSide = parse_side(&payload.right, "right")?;
            let left = WeylModule::new(raw_left.u.clone());
            let right = WeylModule::new(raw_right.u.clone());
            let isomorphic = left.is_isomorphic(&right);
            let witness = if isomorphic {
                witness_for(&raw_left.u, &raw_right.u, &weyl_shift())
            } else {
                serde_json::Value::Null
            };
            Ok(iso_report(isomorphic, to_value(&left), to_value(&right), witness))
        }
        Algebra::OspGraded => {
            let left: OspParams = parse_side(&payload.left, "left")?;
            let right: OspParams = parse_side(&payload.right, "right")?;
            let isomorphic = left.graded_iso(&right);
            Ok(iso_report(
                isomorphic,
                to_value(&left),
                to_value(&right),
                serde_json::Value::Null,
            ))
        }
        Algebra::OspUngraded => {
            let raw_left: RawParameterSide = parse_side(&payload.left, "left")?;
            let raw_right: RawParameterSide = parse_side(&payload.right, "right")?;
            let left = UngradedOspModule::new(WeylModule::new(raw_left.u.clone()));
            let right = UngradedOspModule::new(WeylModule::new(raw_right.u.clone()));
            let isomorphic = left.is_isomorphic(&right);
            let witness = if isomorphic {
                witness_for(&raw_left.u, &raw_right.u, &weyl_shift())
            } else {
                serde_json::Value::Null
            };
            Ok(iso_report(isomorphic, to_value(&left), to_value(&right), witness))
        }
    }
}

fn verify_report(samples: usize, checks: Vec<(&str, bool)>) -> Report {
    let verified = checks.iter().all(|(_, ok)| *ok);
    let listed: Vec<serde_json::Value> = checks
        .iter()
        .map(|(name, ok)| json!({ "check": name, "passed": ok }))
        .collect();
    let latex = format!("\\text{{verified: {verified} ({samples} samples)}}");
    let result = json!({
        "verified": verified,
        "samples": samples,
        "checks": listed,
    });
    if verified {
        Report::new(result, latex)
    } else {
        Report::failing(result, latex)
    }
}

fn verify(cli: &Cli, payload: &Payload) -> Result<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(VERIFY_SEED);
    let samples = payload.samples.unwrap_or(20).clamp(1, 500);
    match cli.algebra {
        Algebra::Sl2 => {
            let module = sl2_from(payload)?;
            let locations = sample::nearby_locations(module.u(), &sl2_shift(), 3);
            let theta = module.family().theta().clone();
            let two = GaussianRational::from_int(2);
            let mut checks =
                [("[e,f] = h", true), ("[h,e] = 2e", true), ("[h,f] = -2f", true), ("casimir scalar", true)];
            for _ in 0..samples {
                let v = sample::partial_fraction_on(&mut rng, &locations, 2, 3);
                let ef = module.act_e(&module.act_f(&v));
                let fe = module.act_f(&module.act_e(&v));
                checks[0].1 &= &ef - &fe == module.act_h(&v);
                let he = module.act_h(&module.act_e(&v));
                let eh = module.act_e(&module.act_h(&v));
                checks[1].1 &= &he - &eh == module.act_e(&v).scale(&two);
                let hf = module.act_h(&module.act_f(&v));
                let fh = module.act_f(&module.act_h(&v));
                checks[2].1 &= &hf - &fh == -&module.act_f(&v).scale(&two);
                checks[3].1 &= module.act_casimir(&v) == v.scale(&theta);
            }
            Ok(verify_report(samples, checks.to_vec()))
        }
        Algebra::Weyl => {
            let module = weyl_from(payload)?;
            let locations = sample::nearby_locations(module.u(), &weyl_shift(), 3);
            let mut checks = [("ab - ba = 1", true), ("-2ab = h", true)];
            for _ in 0..samples {
                let v = sample::partial_fraction_on(&mut rng, &locations, 2, 3);
                let ab = module.act_a(&module.act_b(&v));
                let ba = module.act_b(&module.act_a(&v));
                checks[0].1 &= &ab - &ba == v;
                checks[1].1 &= module.act_h(&v) == v.mul_poly(&Polynomial::h());
            }
            Ok(verify_report(samples, checks.to_vec()))
        }
        Algebra::OspGraded => {
            let params = osp_from(payload)?;
            let lambda = params.lambda().clone();
            let relations = osp::verify_superrelations(&params, samples.min(25), &mut rng);
            let sigma = osp::scasimir_action(&params)?;
            let expected = &lambda + &GaussianRational::from_ratio(1, 2);
            let sigma_ok = sigma.0 == expected && sigma.1 == -&expected;
            let (even, odd) = osp::casimir_scalars(&params)?;
            let lp1 = lambda.add_int(1);
            let casimir_ok = even == &lp1 * &lp1 && odd == &lambda * &lambda;
            let parity_ok = params.graded_iso(&params.parity_change().parity_change());
            Ok(verify_report(
                samples,
                vec![
                    ("superrelations", relations),
                    ("scasimir scalars", sigma_ok),
                    ("casimir scalars", casimir_ok),
                    ("parity involution", parity_ok),
                ],
            ))
        }
        Algebra::OspUngraded => {
            let module = ungraded_from(payload)?;
            let locations =
                sample::nearby_locations(module.weyl().u(), &weyl_shift(), 3);
            let half = GaussianRational::from_ratio(1, 2);
            let h_plus_one = Polynomial::h_minus(&GaussianRational::from_int(-1));
            let mut checks = [
                ("quotient realization", socle::osp::theta_quotient_check()),
                ("scasimir vanishes", true),
                ("h acts as (h+1)/2", true),
            ];
            for _ in 0..samples {
                let v = sample::partial_fraction_on(&mut rng, &locations, 2, 3);
                checks[1].1 &= module.scasimir_apply(&v).is_zero();
                checks[2].1 &= module.act_h(&v) == v.mul_poly(&h_plus_one).scale(&half);
            }
            Ok(verify_report(samples, checks.to_vec()))
        }
    }
}

fn patterns_json(
    report: &ClosureReport,
    interior: &std::collections::BTreeSet<GaussianRational>,
) -> Vec<serde_json::Value> {
    report
        .patterns_on(interior)
        .iter()
        .map(|(location, order)| json!({ "location": to_value(location), "order": order }))
        .collect()
}

fn comparison_json(
    comparison: &OracleComparison,
    patterns: Vec<serde_json::Value>,
) -> serde_json::Value {
    let outcome = if comparison.matched() { "MATCH" } else { "MISMATCH" };
    let missing: Vec<serde_json::Value> = comparison
        .missing
        .iter()
        .map(|(location, order)| json!({ "location": to_value(location), "order": order }))
        .collect();
    let extra: Vec<serde_json::Value> = comparison
        .extra
        .iter()
        .map(|(location, order)| json!({ "location": to_value(location), "order": order }))
        .collect();
    json!({
        "outcome": outcome,
        "patterns": patterns,
        "missing": missing,
        "extra": extra,
        "roundsUsed": comparison.rounds_used,
    })
}

fn sl2_oracle_block(module: &Sl2Module, window: &OracleWindow) -> Result<(bool, serde_json::Value)> {
    let descriptor = sl2::socle_descriptor(module);
    let report = closure_over_sl2(module, window)?;
    let interior = pole_lattice(module.u(), &sl2_shift(), window.max_shift - 1);
    let comparison = compare_patterns(&report, &descriptor, &interior);
    let value = comparison_json(&comparison, patterns_json(&report, &interior));
    Ok((comparison.matched(), value))
}

fn weyl_oracle_block(module: &WeylModule, window: &OracleWindow) -> Result<(bool, serde_json::Value)> {
    let descriptor = weyl::socle_descriptor(module);
    let report = closure_over_weyl(module, window)?;
    let interior = pole_lattice(module.u(), &weyl_shift(), window.max_shift - 1);
    let comparison = compare_patterns(&report, &descriptor, &interior);
    let value = comparison_json(&comparison, patterns_json(&report, &interior));
    Ok((comparison.matched(), value))
}

fn oracle_outcome_report(matched: bool, result: serde_json::Value) -> Report {
    let outcome = if matched { "MATCH" } else { "MISMATCH" };
    let latex = format!("\\text{{{outcome}}}");
    if matched {
        Report::new(result, latex)
    } else {
        Report::failing(result, latex)
    }
}

fn oracle_check(cli: &Cli, payload: &Payload) -> Result<Report> {
    let window = cli.window(payload)?;
    match cli.algebra {
        Algebra::Sl2 => {
            let module = sl2_from(payload)?;
            let (matched, value) = sl2_oracle_block(&module, &window)?;
            Ok(oracle_outcome_report(matched, value))
        }
        Algebra::Weyl => {
            let module = weyl_from(payload)?;
            let (matched, value) = weyl_oracle_block(&module, &window)?;
            Ok(oracle_outcome_report(matched, value))
        }
        Algebra::OspGraded => {
            let params = osp_from(payload)?;
            let (even_ok, even) = sl2_oracle_block(&params.even_restriction(), &window)?;
            let (odd_ok, odd) = sl2_oracle_block(&params.odd_restriction(), &window)?;
            let matched = even_ok && odd_ok;
            let outcome = if matched { "MATCH" } else { "MISMATCH" };
            Ok(oracle_outcome_report(
                matched,
                json!({ "outcome": outcome, "even": even, "odd": odd }),
            ))
        }
        Algebra::OspUngraded => {
            let module = ungraded_from(payload)?;
            let (matched, value) = weyl_oracle_block(module.weyl(), &window)?;
            Ok(oracle_outcome_report(matched, value))
        }
    }
}

fn fg_report(value: bool) -> Report {
    Report::new(
        json!({ "finitelyGenerated": value }),
        format!("\\text{{finitely generated: {value}}}"),
    )
}

fn fg(cli: &Cli, payload: &Payload) -> Result<Report> {
    match cli.algebra {
        Algebra::Sl2 => Ok(fg_report(sl2::is_finitely_generated(&sl2_from(payload)?))),
        Algebra::Weyl => Ok(fg_report(weyl::is_finitely_generated(&weyl_from(payload)?))),
        Algebra::OspGraded => {
            let params = osp_from(payload)?;
            let even = sl2::is_finitely_generated(&params.even_restriction());
            let odd = sl2::is_finitely_generated(&params.odd_restriction());
            let latex = format!(
                "\\text{{even finitely generated: {even}}} \\\\ \\text{{odd finitely generated: {odd}}}"
            );
            Ok(Report::new(json!({ "even": even, "odd": odd }), latex))
        }
        Algebra::OspUngraded => {
            let module = ungraded_from(payload)?;
            Ok(fg_report(weyl::is_finitely_generated(module.weyl())))
        }
    }
}
