use ainvariant_core::bounds::{
    verify_eg_inequality, verify_main_bound, verify_prop_3_1, verify_prop_3_1_monomial,
    verify_prop_3_3, verify_prop_3_4,
};
use ainvariant_core::corpus::run_corpus;
use ainvariant_core::filtration::{
    g_hilbert_data, h0_g, minimal_reduction_sg, multiplicity_samuel, ratliff_rush,
    reduction_number, reduction_number_wrt_sg, vv_cm_certificate,
};
use ainvariant_core::hilbert::{hilbert_series, HilbertSeries};
use ainvariant_core::parse::parse_int_list;
use ainvariant_core::semigroup::{multiplicity_sg, reduction_number_sg, rr_power_sg};
use ainvariant_core::{
    BoundName, BoundReport, CohomologyTable, CorpusSpec, Error, HilbertData, MonomialIdeal,
    NumericalSemigroup, PolyRing, ReductionOptions, SemigroupIdeal, Status, VerifyOptions,
};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::args::{QuotientArgs, ReductionArgs, ReductionFlags, VerifyArgs};

/// Failures split by exit code.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Compute(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Compute(e)
    }
}

pub type Outcome = std::result::Result<Value, Failure>;

fn usage(e: Error) -> Failure {
    Failure::Usage(e.to_string())
}

pub fn parse_quotient(ring: &str, ideal: &str) -> Result<(PolyRing, MonomialIdeal), Failure> {
    let ring = PolyRing::parse(ring).map_err(usage)?;
    let ideal = ring.parse_ideal(ideal).map_err(usage)?;
    Ok((ring, ideal))
}

pub fn parse_semigroup(gens: &str, ideal: &str) -> Result<SemigroupIdeal, Failure> {
    let s = NumericalSemigroup::new(&parse_int_list(gens).map_err(usage)?).map_err(usage)?;
    SemigroupIdeal::new(&s, &parse_int_list(ideal).map_err(usage)?).map_err(usage)
}

pub fn big(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

pub fn poly_string(coeffs: &[BigInt], var: &str) -> String {
    let mut parts = Vec::new();
    for (i, c) in coeffs.iter().enumerate() {
        if *c == BigInt::from(0) {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        let abs = if *c < BigInt::from(0) { -c } else { c.clone() };
        let body = if mono.is_empty() {
            abs.to_string()
        } else if abs == BigInt::from(1) {
            mono
        } else {
            format!("{abs}{mono}")
        };
        if parts.is_empty() {
            parts.push(if *c < BigInt::from(0) { format!("-{body}") } else { body });
        } else {
            parts.push(format!("{} {body}", if *c < BigInt::from(0) { "-" } else { "+" }));
        }
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" ")
    }
}

pub fn series_json(series: &HilbertSeries) -> Value {
    let q = series.reduced_numerator();
    let d = series.dim();
    let den = match d {
        0 => String::new(),
        1 => "/(1 - λ)".into(),
        _ => format!("/(1 - λ)^{d}"),
    };
    json!({
        "numerator": series.numerator().iter().map(big).collect::<Vec<_>>(),
        "reduced_numerator": q.iter().map(big).collect::<Vec<_>>(),
        "dim": d,
        "series": format!("({}){den}", poly_string(q, "λ")),
    })
}

fn data_json(data: &HilbertData) -> Value {
    let mut v = series_json(&data.series);
    let obj = v.as_object_mut().expect("object");
    obj.insert("multiplicity".into(), json!(data.multiplicity));
    obj.insert("hilbert_polynomial".into(), json!(data.hilbert_polynomial.to_string_in("n")));
    v
}

fn default_window(ideal: &MonomialIdeal) -> i64 {
    ideal.max_exponents().iter().map(|&r| r as i64).sum()
}

pub fn hilbert(args: &QuotientArgs) -> Outcome {
    let (ring, ideal) = parse_quotient(&args.ring, &args.ideal)?;
    let series = hilbert_series(&ideal);
    let mut out = json!({
        "ring": ring.names(),
        "ideal": ring.format_ideal(&ideal),
        "zero_ring": series.is_zero_ring(),
    });
    if series.is_zero_ring() {
        return Ok(out);
    }
    let data = HilbertData::from_series(series)?;
    let window = args.window.unwrap_or_else(|| default_window(&ideal)).max(0);
    let values: Vec<Value> = (0..=window)
        .map(|n| {
            Ok(json!({
                "n": n,
                "h": big(&data.series.coefficient(n)),
                "p": data.hilbert_polynomial.eval_int(n)?,
            }))
        })
        .collect::<Result<_, Error>>()?;
    let obj = out.as_object_mut().expect("object");
    for (k, v) in data_json(&data).as_object().expect("object") {
        obj.insert(k.clone(), v.clone());
    }
    obj.insert("codim".into(), json!(ideal.nvars() - data.dim));
    obj.insert("postulation_bound".into(), json!(data.series.postulation_bound()));
    obj.insert("values".into(), Value::Array(values));
    Ok(out)
}

pub fn cohomology(args: &QuotientArgs) -> Outcome {
    let (ring, ideal) = parse_quotient(&args.ring, &args.ideal)?;
    if ideal.is_unit() {
        return Err(Failure::Compute(Error::ZeroRing("local cohomology")));
    }
    let table = CohomologyTable::compute(&ideal)?;
    let data = HilbertData::from_series(hilbert_series(&ideal))?;
    let window = args.window.unwrap_or_else(|| default_window(&ideal)).max(0);
    let mut rows = Vec::new();
    for i in 0..=ideal.nvars() {
        for n in -window..=window {
            let h = table.h(i, n);
            if h > 0 {
                rows.push(json!({"i": i, "n": n, "h": h}));
            }
        }
    }
    Ok(json!({
        "ring": ring.names(),
        "ideal": ring.format_ideal(&ideal),
        "dim": table.dim(),
        "depth": table.depth(),
        "cohen_macaulay": table.is_cohen_macaulay(),
        "a": table.a_invariant(),
        "eg": table.eg(),
        "e": data.multiplicity,
        "window": window,
        "table": rows,
    }))
}

pub fn reduction_options(f: &ReductionFlags) -> ReductionOptions {
    ReductionOptions {
        n_bound: f.n_bound,
        max_truncation: f.max_truncation,
        coeff_bound: f.coeff_bound,
        level_slack: 0,
    }
}

fn verify_options(f: &ReductionFlags) -> VerifyOptions {
    VerifyOptions {
        trials: f.trials,
        seed: f.seed,
        reduction: reduction_options(f),
    }
}

pub fn reduction(args: &ReductionArgs) -> Outcome {
    match (&args.ring, &args.semigroup) {
        (Some(ring), _) => reduction_monomial(ring, args),
        (None, Some(gens)) => reduction_semigroup(gens, args),
        (None, None) => Err(Failure::Usage("need --ring or --semigroup".into())),
    }
}

fn reduction_monomial(ring: &str, args: &ReductionArgs) -> Outcome {
    let (ring, ideal) = parse_quotient(ring, &args.ideal)?;
    if !ideal.is_m_primary() {
        return Err(Failure::Compute(Error::NotPrimary));
    }
    let opts = reduction_options(&args.flags);
    let summary = reduction_number(&ideal, args.flags.trials, args.flags.seed, &opts)?;
    let r = summary.reduction_number;
    let cm = vv_cm_certificate(&ideal, &summary.best, r)?;
    let g = g_hilbert_data(&ideal)?;
    let a_g = g.series.reduced_numerator().len() as i64 - 1 - g.dim as i64;
    let mut powers = Vec::new();
    let mut pow = MonomialIdeal::unit(ideal.nvars());
    for n in 1..=args.window {
        pow = pow.product(&ideal)?;
        let rr = ratliff_rush(&ideal, n)?;
        powers.push(json!({
            "n": n,
            "colength": pow.quotient_length()?,
            "mu": pow.gens().len(),
            "ratliff_rush_closed": rr == pow,
            "ratliff_rush": ring.format_ideal(&rr),
            "h0_g": h0_g(&ideal, n - 1)?,
        }));
    }
    let trials: Vec<Value> = summary
        .trials
        .iter()
        .map(|t| json!({"seed": t.seed, "reduction_number": t.reduction_number}))
        .collect();
    Ok(json!({
        "ring": ring.names(),
        "ideal": ring.format_ideal(&ideal),
        "multiplicity": multiplicity_samuel(&ideal)?,
        "reduction_number": r,
        "best_seed": summary.best.seed,
        "reduction": summary.best.generators.iter().map(|e| e.display_with(|m| ring.format_monomial(m))).collect::<Vec<_>>(),
        "cm_certificate": cm,
        "a_g": if cm { json!(a_g) } else { Value::Null },
        "g_series": data_json(&g),
        "powers": powers,
        "trials": trials,
    }))
}

fn reduction_semigroup(gens: &str, args: &ReductionArgs) -> Outcome {
    let e = parse_semigroup(gens, &args.ideal)?;
    let s = e.semigroup().clone();
    let (r, j) = reduction_number_sg(&e)?;
    let generic = minimal_reduction_sg(&e, args.flags.seed, args.flags.coeff_bound);
    let bound = args.flags.n_bound.unwrap_or(multiplicity_sg(&e) as u32 + 2);
    let r_generic = reduction_number_wrt_sg(&generic, &e, bound)?;
    let mut powers = Vec::new();
    for n in 1..=args.window {
        let p = e.power(n);
        let rr = rr_power_sg(&e, n)?;
        powers.push(json!({
            "n": n,
            "generators": p.generators(),
            "threshold": p.threshold(),
            "colength": p.colength(),
            "ratliff_rush_closed": rr == p,
        }));
    }
    Ok(json!({
        "semigroup": s.generators(),
        "frobenius": s.frobenius(),
        "conductor": s.conductor(),
        "ideal": e.generators(),
        "multiplicity": multiplicity_sg(&e),
        "reduction": format!("t^{j}"),
        "reduction_number": r,
        "generic_reduction": generic.generators[0].display_with(|m| format!("t^{}", m.exponents()[0])),
        "generic_reduction_number": r_generic,
        "l_r_i": e.colength(),
        "l_i_i2": e.length_over(&e.power(2))?,
        "powers": powers,
    }))
}

fn skipped(instance: &str, bound: BoundName, reason: &str) -> BoundReport {
    BoundReport {
        instance: instance.to_string(),
        bound,
        relation: bound.relation(),
        lhs: None,
        rhs: None,
        status: Status::Skipped,
        gap: None,
        reason: Some(reason.to_string()),
        witness: Default::default(),
    }
}

fn parse_bounds(names: &[String]) -> Result<Vec<BoundName>, Failure> {
    names
        .iter()
        .map(|s| {
            BoundName::parse(s.trim())
                .ok_or_else(|| Failure::Usage(format!("unknown bound `{s}`; expected one of thm2.1, eg-lower, prop3.1, prop3.3, prop3.4")))
        })
        .collect()
}

pub fn verify(args: &VerifyArgs) -> Outcome {
    let requested = parse_bounds(&args.bound)?;
    let opts = verify_options(&args.flags);
    if let Some(ideal_text) = &args.ideal {
        let reports = if let Some(gens) = &args.semigroup {
            let e = parse_semigroup(gens, ideal_text)?;
            let bounds = if requested.is_empty() { vec![BoundName::DimOne] } else { requested };
            bounds
                .into_iter()
                .map(|b| match b {
                    BoundName::DimOne => verify_prop_3_1("input", &e).map_err(Failure::from),
                    other => Ok(skipped("input", other, "needs a monomial quotient")),
                })
                .collect::<Result<Vec<_>, _>>()?
        } else {
            let ring = args.ring.as_deref().ok_or_else(|| Failure::Usage("--ideal needs --ring or --semigroup".into()))?;
            let (_, ideal) = parse_quotient(ring, ideal_text)?;
            let bounds = if requested.is_empty() {
                let mut b = vec![BoundName::MainBound, BoundName::EgLower];
                if ideal.is_m_primary() {
                    b.push(match ideal.nvars() {
                        1 => BoundName::DimOne,
                        2 => BoundName::DimTwo,
                        _ => BoundName::HighDim,
                    });
                }
                b
            } else {
                requested
            };
            bounds
                .into_iter()
                .map(|b| {
                    Ok(match b {
                        BoundName::MainBound => verify_main_bound("input", &ideal)?,
                        BoundName::EgLower => verify_eg_inequality("input", &ideal)?,
                        BoundName::DimOne if ideal.nvars() == 1 && ideal.is_m_primary() => {
                            verify_prop_3_1_monomial("input", &ideal)?
                        }
                        BoundName::DimOne => skipped("input", b, "needs an m-primary ideal of k[x]"),
                        BoundName::DimTwo => verify_prop_3_3("input", &ideal, &opts)?,
                        BoundName::HighDim => verify_prop_3_4("input", &ideal, &opts)?,
                    })
                })
                .collect::<Result<Vec<_>, Failure>>()?
        };
        return Ok(json!({ "mode": "instance", "reports": reports }));
    }
    let bounds = if requested.is_empty() { BoundName::ALL.to_vec() } else { requested };
    let mut aggregates = Vec::new();
    let mut reports = Vec::new();
    for b in bounds {
        let exp = args.max_exponent.unwrap_or(if b == BoundName::HighDim { 3 } else { 6 });
        let spec = CorpusSpec::new(args.corpus_seed, args.count, args.min_vars, args.max_vars, exp);
        let run = run_corpus(b, &spec, &opts)?;
        let mut agg = serde_json::to_value(&run.aggregate).expect("aggregate serializes");
        agg.as_object_mut()
            .expect("object")
            .insert("bound".into(), json!(b.as_str()));
        aggregates.push(agg);
        reports.extend(run.reports);
    }
    let violations: usize = aggregates.iter().map(|a| a["violations"].as_u64().unwrap_or(0) as usize).sum();
    Ok(json!({
        "mode": "corpus",
        "violations": violations,
        "reports": reports,
        "aggregates": aggregates,
    }))
}
