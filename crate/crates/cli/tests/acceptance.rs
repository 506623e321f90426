//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::process::{Command, ExitCode};
use std::time::Instant;

use ainvariant_core::bounds::{verify_main_bound, verify_prop_3_1};
use ainvariant_core::corpus::{
    plane_corpus, primary_corpus, quotient_corpus, run_quotient_bounds, semigroup_corpus,
};
use ainvariant_core::filtration::{
    fiber_cone_series, g_hilbert_data, minimal_reduction, minimal_reduction_sg, monomial_reduction,
    mu, multiplicity_samuel, reduction_number_wrt, reduction_number_wrt_sg, vv_cm_certificate,
    ReductionOptions, DEFAULT_COEFF_BOUND,
};
use ainvariant_core::hilbert::{hilbert_data, serre_difference};
use ainvariant_core::semigroup::{multiplicity_sg, reduction_number_sg, rr_power_sg};
use ainvariant_core::{
    CohomologyTable, CorpusSpec, MonomialIdeal, NumericalSemigroup, PolyRing, SemigroupIdeal,
    Status,
};
use num_bigint::BigInt;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn graded_quotient_case() -> Outcome {
    let ring = PolyRing::parse("a,b,c,d").map_err(err)?;
    let n = ring.parse_ideal("b*d, b*c, b^2, c^3").map_err(err)?;
    let data = hilbert_data(&n).map_err(err)?;
    ensure(data.series.reduced_numerator() == ints(&[1, 2]).as_slice(), "reduced numerator")?;
    ensure(data.dim == 2, format!("dim {}", data.dim))?;
    ensure(data.multiplicity == 3, format!("e {}", data.multiplicity))?;
    let t = CohomologyTable::compute(&n).map_err(err)?;
    ensure(t.depth() == 1, "depth")?;
    ensure(t.a_invariant() == 0, "a")?;
    ensure(t.h(1, 0) == 1, "h^1_0")?;
    ensure(t.eg() == 1, "EG")?;
    let b = verify_main_bound("N", &n).map_err(err)?;
    ensure(b.status == Status::Sharp && b.lhs == Some(0) && b.rhs == Some(0), "main bound not sharp 0 <= 0")?;
    let j = ring.parse_ideal("b, c^3").map_err(err)?;
    let k = ring.parse_ideal("c, d, b^2").map_err(err)?;
    ensure(j.intersection(&k).map_err(err)? == n, "intersection")?;
    let aux: Vec<i64> = [j.clone(), k.clone(), j.sum(&k).map_err(err)?]
        .iter()
        .map(|q| CohomologyTable::compute(q).map(|t| t.a_invariant()))
        .collect::<Result<_, _>>()
        .map_err(err)?;
    ensure(aux == [0, 0, -1], format!("auxiliary a-invariants {aux:?}"))?;
    Ok("(1+2λ)/(1-λ)^2, e=3, depth=1, a=0, h1_0=1, EG=1, sharp 0<=0, aux a = 0,0,-1".into())
}

fn fiber_cone() -> Outcome {
    let i = MonomialIdeal::from_exponents(2, &[&[3, 0], &[2, 4], &[1, 5], &[0, 7]]).map_err(err)?;
    let mus: Vec<usize> = (1..=6).map(|n| mu(&i, n)).collect::<Result<_, _>>().map_err(err)?;
    let expected: Vec<usize> = (1..=6).map(|n| 3 * n + 1).collect();
    ensure(mus == expected, format!("mu {mus:?}"))?;
    let s = fiber_cone_series(&i, 12).map_err(err)?;
    ensure(s.reduced_numerator() == ints(&[1, 2]).as_slice() && s.dim() == 2, "fiber cone series")?;
    Ok(format!("mu = {mus:?}, series (1+2λ)/(1-λ)^2"))
}

fn semigroup_ring_case() -> Outcome {
    let start = Instant::now();
    let s = NumericalSemigroup::new(&[4, 5, 6, 7]).map_err(err)?;
    let i = SemigroupIdeal::new(&s, &[4, 5, 6]).map_err(err)?;
    let i2 = i.power(2);
    ensure(i2 == s.maximal_ideal().power(2), "I^2 = m^2")?;
    ensure(rr_power_sg(&i, 2).map_err(err)? == i2, "Ratliff-Rush of I^2")?;
    ensure(multiplicity_sg(&i) == 4, "e(I)")?;
    ensure(i.length_over(&i2).map_err(err)? == 3, "l(I/I^2)")?;
    let (r, j) = reduction_number_sg(&i).map_err(err)?;
    ensure(r == 2 && j == 4, "r_(t^4)(I)")?;
    let b = verify_prop_3_1("I", &i).map_err(err)?;
    ensure(b.status == Status::Sharp && b.lhs == Some(2) && b.rhs == Some(2), "sharp 2 = 4 - (3 - 1)")?;
    Ok(format!("r=2, e=4, l(I/I^2)=3, sharp, {:?}", start.elapsed()))
}

fn grothendieck_serre() -> Outcome {
    let start = Instant::now();
    let mut instances = quotient_corpus(&CorpusSpec::new(101, 80, 2, 3, 5));
    instances.extend(primary_corpus(&CorpusSpec::new(102, 40, 2, 3, 5)));
    let mut checks = 0;
    for inst in &instances {
        let t = CohomologyTable::compute(&inst.ideal).map_err(err)?;
        let edge: i64 = inst.ideal.max_exponents().iter().map(|&r| r as i64).sum();
        for n in -edge..=edge {
            let lhs = t.euler_characteristic(n);
            let rhs = serre_difference(&inst.ideal, n).map_err(err)?;
            ensure(lhs == rhs, format!("{} at n={n}: {lhs} vs {rhs}", inst.id))?;
            checks += 1;
        }
    }
    Ok(format!("{} ideals, {checks} degrees, 0 failures, {:?}", instances.len(), start.elapsed()))
}

fn main_bound_corpus() -> Outcome {
    let (main, eg) = run_quotient_bounds(&CorpusSpec::new(2024, 120, 2, 4, 6)).map_err(err)?;
    ensure(main.aggregate.total >= 100, "corpus size")?;
    ensure(main.aggregate.violations == 0, format!("{} main-bound violations", main.aggregate.violations))?;
    ensure(eg.aggregate.violations == 0, format!("{} EG violations", eg.aggregate.violations))?;
    ensure(main.reports.iter().all(|r| r.is_verified()), "every main-bound report verified")?;
    Ok(format!(
        "{} quotients: main bound {} sharp / {} holds, EG inequality {} sharp / {} holds, 0 violations",
        main.aggregate.total,
        main.aggregate.counts["sharp"],
        main.aggregate.counts["holds"],
        eg.aggregate.counts["sharp"],
        eg.aggregate.counts["holds"],
    ))
}

fn dim_one_corpus() -> Outcome {
    let instances = semigroup_corpus(7, 60);
    let mut sharp = 0;
    for inst in &instances {
        let r = verify_prop_3_1(&inst.id, &inst.ideal).map_err(err)?;
        ensure(r.is_verified(), format!("{}: {:?}", inst.id, r.status))?;
        sharp += (r.status == Status::Sharp) as usize;
    }
    let s = NumericalSemigroup::new(&[4, 5, 6, 7]).map_err(err)?;
    let ex = verify_prop_3_1("example", &SemigroupIdeal::new(&s, &[4, 5, 6]).map_err(err)?).map_err(err)?;
    ensure(ex.status == Status::Sharp, "worked example not sharp")?;
    Ok(format!("{} semigroup instances, 0 violations, {sharp} sharp; worked example sharp", instances.len()))
}

fn oracle_equivalence() -> Outcome {
    let mut one_dim = 0;
    for inst in semigroup_corpus(31, 24) {
        let (r, _) = reduction_number_sg(&inst.ideal).map_err(err)?;
        let j = minimal_reduction_sg(&inst.ideal, 9, DEFAULT_COEFF_BOUND);
        let t = reduction_number_wrt_sg(&j, &inst.ideal, 64).map_err(err)?;
        ensure(r == t, format!("{}: sumset {r} vs truncation {t}", inst.id))?;
        one_dim += 1;
    }
    let opts = ReductionOptions::default();
    for a in 1..=6u32 {
        let i = MonomialIdeal::from_exponents(1, &[&[a]]).map_err(err)?;
        let e = SemigroupIdeal::new(&NumericalSemigroup::naturals(), &[a]).map_err(err)?;
        let j = minimal_reduction(&i, 0, DEFAULT_COEFF_BOUND).map_err(err)?;
        let t = reduction_number_wrt(&j, &i, &opts).map_err(err)?;
        ensure(t == reduction_number_sg(&e).map_err(err)?.0, format!("k[x], (x^{a})"))?;
        one_dim += 1;
    }
    let mut plane = 0;
    for inst in plane_corpus(32, 24, 5) {
        let oracle = (0..64)
            .find(|&n| {
                let p = inst.ideal.power(n).unwrap();
                inst.reduction.product(&p).unwrap() == p.product(&inst.ideal).unwrap()
            })
            .ok_or("brute force found no reduction number")?;
        let t = reduction_number_wrt(&monomial_reduction(&inst.reduction), &inst.ideal, &opts).map_err(err)?;
        ensure(t == oracle, format!("{}: brute force {oracle} vs truncation {t}", inst.id))?;
        plane += 1;
    }
    Ok(format!("{one_dim} one-dimensional and {plane} plane instances agree"))
}

fn self_consistency() -> Outcome {
    let opts = ReductionOptions::default();
    let mut instances = primary_corpus(&CorpusSpec::new(41, 40, 2, 2, 5));
    instances.extend(primary_corpus(&CorpusSpec::new(42, 15, 3, 3, 3)));
    let mut certified = 0;
    for inst in &instances {
        let i = &inst.ideal;
        let g = g_hilbert_data(i).map_err(err)?;
        let e = multiplicity_samuel(i).map_err(err)?;
        ensure(g.multiplicity == e, format!("{}: Q(1) = {} but e = {e}", inst.id, g.multiplicity))?;
        let j = minimal_reduction(i, 1, DEFAULT_COEFF_BOUND).map_err(err)?;
        let r = reduction_number_wrt(&j, i, &opts).map_err(err)?;
        if vv_cm_certificate(i, &j, r).map_err(err)? {
            let a_g = g.series.reduced_numerator().len() as i64 - 1 - g.dim as i64;
            ensure(r as i64 == a_g + g.dim as i64, format!("{}: r = {r}, a(G) + d = {}", inst.id, a_g + g.dim as i64))?;
            certified += 1;
        }
    }
    ensure(certified >= 20, format!("only {certified} certified instances"))?;
    Ok(format!("{certified} certified instances with r = a(G) + d; e = Q(1) on all {}", instances.len()))
}

fn determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_ainvariant");
    let run = |bound: &str| {
        Command::new(bin)
            .args(["verify", "--bound", bound, "--corpus-seed", "5", "--count", "15", "--seed", "3"])
            .output()
            .map_err(err)
    };
    let mut bytes = 0;
    for bound in ["thm2.1,eg-lower", "prop3.1", "prop3.3"] {
        let a = run(bound)?;
        let b = run(bound)?;
        ensure(a.status.success(), format!("verify {bound} failed"))?;
        ensure(a.stdout == b.stdout, format!("verify {bound} output differs"))?;
        bytes += a.stdout.len();
    }
    Ok(format!("3 verify configurations repeated, {bytes} bytes identical"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("worked example: graded quotient invariants", graded_quotient_case),
        ("fiber cone generator counts", fiber_cone),
        ("worked example: semigroup ring", semigroup_ring_case),
        ("Grothendieck-Serre identity", grothendieck_serre),
        ("main bound and EG inequality corpus", main_bound_corpus),
        ("dimension-one bound corpus", dim_one_corpus),
        ("oracle equivalence of reduction numbers", oracle_equivalence),
        ("engine self-consistency", self_consistency),
        ("determinism of verify output", determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
