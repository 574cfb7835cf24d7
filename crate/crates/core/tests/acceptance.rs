//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use fcl_reliability::cost::{levelized_cost, rank_configurations, CostParams};
use fcl_reliability::failure::{
    split_rates, temperature_factor, CoverageParams, SwitchRates, THYRISTOR_ACTIVATION,
};
use fcl_reliability::markov::mttf;
use fcl_reliability::montecarlo::{simulate_mttf, McConfig};
use fcl_reliability::thermal::{junction_from_case, junction_temperature, ThermalStack};
use fcl_reliability::topology::closed_form::{self, perfect};
use fcl_reliability::topology::{
    boundary_constants, build_diagram, diagram_matches_closed_form, heatsink_condition,
    imperfect_coverage_threshold, mttf_closed_form, perfect_coverage_winner, Preferred,
    ThresholdForm, Topology,
};
use fcl_reliability::Scenario;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

fn ulps(a: f64, b: f64) -> u64 {
    (a.to_bits() as i64 - b.to_bits() as i64).unsigned_abs()
}

fn log_uniform(rng: &mut impl Rng, lo: f64, hi: f64) -> f64 {
    (lo.ln() + rng.random::<f64>() * (hi.ln() - lo.ln())).exp()
}

fn random_rates(rng: &mut impl Rng) -> SwitchRates {
    let mut r = || log_uniform(rng, 1e-9, 1e-3);
    SwitchRates::new(r(), r(), r(), r()).unwrap()
}

fn paper_repro() -> Scenario {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("scenarios/paper_repro.scn");
    Scenario::load(&path).expect("bundled scenario loads")
}

fn markov_matches_closed_form() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let samples = 250;
    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let r = random_rates(&mut rng);
        let p_s: f64 = rng.random();
        let c = CoverageParams::new(p_s, 1.0, 0.98).unwrap();
        for t in [
            Topology::ShuntParallel,
            Topology::ShuntStandby,
            Topology::SeriesParallel,
        ] {
            let engine = mttf(&build_diagram(t, &r, &c).unwrap()).map_err(|e| e.to_string())?;
            let closed = mttf_closed_form(t, &r, &c).unwrap();
            worst = worst.max(rel(engine, closed));
            ensure(rel(engine, closed) < 1e-9, || {
                format!("{t} p_s={p_s} {r:?}: engine {engine} vs closed form {closed}")
            })?;
        }
        let full = CoverageParams::perfect();
        let t = Topology::SeriesStandby;
        let engine = mttf(&build_diagram(t, &r, &full).unwrap()).map_err(|e| e.to_string())?;
        let closed = mttf_closed_form(t, &r, &full).unwrap();
        worst = worst.max(rel(engine, closed));
        ensure(rel(engine, closed) < 1e-9, || {
            format!("series_standby {r:?}: engine {engine} vs closed form {closed}")
        })?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "{samples} samples, worst relative error {worst:.2e}, {:.0} ms",
        elapsed.as_secs_f64() * 1e3
    ))
}

fn perfect_coverage_closed_forms() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut worst = 0;
    for _ in 0..10_000 {
        let l = log_uniform(&mut rng, 1e-9, 1e-3);
        for (got, want) in [
            (perfect::shunt_parallel(l, l), 1.5 / l),
            (perfect::standby(l), 2.0 / l),
            (perfect::series_parallel(l), 1.5 / l),
        ] {
            worst = worst.max(ulps(got, want));
            ensure(ulps(got, want) <= 4, || format!("λ={l}: {got} vs {want}"))?;
        }
        let r = random_rates(&mut rng);
        let sh = closed_form::shunt_standby(&r, 1.0);
        let se = closed_form::series_standby(&r, 1.0);
        ensure(sh == se, || {
            format!("{r:?}: shunt standby {sh} != series standby {se}")
        })?;
    }
    Ok(format!(
        "10000 samples, worst deviation {worst} ulp, standby pair bit-identical"
    ))
}

fn boundary_constants_in_range() -> Outcome {
    let k = boundary_constants(THYRISTOR_ACTIVATION).map_err(|e| e.to_string())?;
    ensure((1.1298..=1.1318).contains(&k.c1), || {
        format!("C1 = {}", k.c1)
    })?;
    ensure((17.848..=17.868).contains(&k.c2), || {
        format!("C2 = {}", k.c2)
    })?;
    Ok(format!("C1 = {:.6}, C2 = {:.6}", k.c1, k.c2))
}

fn imperfect_threshold_at_full_coverage() -> Outcome {
    let c = CoverageParams::new(1.0, 1.0, 0.98).unwrap();
    let mut parts = Vec::new();
    for form in [ThresholdForm::Full, ThresholdForm::Truncated] {
        let th = imperfect_coverage_threshold(&c, form).map_err(|e| e.to_string())?;
        ensure((th - 0.5).abs() <= 1e-12, || {
            format!("{form:?}: threshold {th}")
        })?;
        // shunt parallel wins iff λH/λ < th, i.e. λ/λH > 1/th = 2
        let ratio = 1.0 / th;
        for probe in [0.99 * ratio, 1.01 * ratio] {
            let perfect = perfect_coverage_winner(probe).winner;
            let imperfect = if 1.0 / probe < th {
                Preferred::ShuntParallel
            } else {
                Preferred::Standby
            };
            ensure(perfect == imperfect, || {
                format!("disagree at λ/λH = {probe}")
            })?;
        }
        parts.push(format!("{form:?} = {th}"));
    }
    Ok(parts.join(", "))
}

fn temperature_arithmetic() -> Outcome {
    let half = junction_from_case(44.46, 0.335, 1.3);
    let full = junction_from_case(104.46, 1.34, 1.3);
    ensure((half - 44.90).abs() <= 0.005, || {
        format!("half-load T_j = {half}")
    })?;
    ensure((full - 106.20).abs() <= 0.005, || {
        format!("full-load T_j = {full}")
    })?;
    let s = paper_repro();
    let op = s.operating_point().map_err(|e| e.to_string())?;
    let v = heatsink_condition(op.p_loss, op.p_loss_half, &op.stack, op.part.a)
        .map_err(|e| e.to_string())?;
    ensure(v.winner == Preferred::ShuntParallel, || format!("{v:?}"))?;
    Ok(format!(
        "T_j = {half:.4} / {full:.4} °C, heat-sink condition {:.4} > {:.4} -> {}",
        v.evaluated, v.boundary_value, v.winner
    ))
}

fn check_mc(
    label: &str,
    d: &fcl_reliability::markov::StateDiagram,
    analytic: f64,
) -> Result<String, String> {
    let cfg = McConfig::new(1_000_000, 20_240_601);
    let start = Instant::now();
    let r = simulate_mttf(d, &cfg).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || {
        format!("{label}: took {elapsed:?}")
    })?;
    let z = r.z_score(analytic);
    ensure(z.abs() < 3.0, || {
        format!("{label}: z = {z} ({r:?}, analytic {analytic})")
    })?;
    Ok(format!("{label} z={z:+.2}"))
}

fn monte_carlo_agrees() -> Outcome {
    let mut notes = Vec::new();

    let single = fcl_reliability::markov::StateDiagram::builder()
        .transition("S1", "S2", 1e-6)
        .absorbing("S2")
        .initial("S1")
        .build()
        .unwrap();
    notes.push(check_mc("single", &single, 1e6)?);

    let equal = SwitchRates::uniform(0.5e-6, 0.5e-6).unwrap();
    let sp = build_diagram(Topology::ShuntParallel, &equal, &CoverageParams::perfect()).unwrap();
    notes.push(check_mc("equal-rate shunt_parallel", &sp, 1.5e6)?);

    let op = paper_repro().operating_point().map_err(|e| e.to_string())?;
    let rates = op.switch_rates().map_err(|e| e.to_string())?;
    let partial = CoverageParams::new(0.9, 0.95, 0.98).unwrap();
    let mut validated = 0;
    for c in [CoverageParams::perfect(), partial] {
        for t in Topology::ALL {
            if !diagram_matches_closed_form(t, &c) {
                continue;
            }
            let d = build_diagram(t, &rates, &c).unwrap();
            let analytic = mttf_closed_form(t, &rates, &c).unwrap();
            notes.push(check_mc(&format!("{t}@p_s={}", c.p_s), &d, analytic)?);
            validated += 1;
        }
    }

    let cfg = McConfig::new(1_000_000, 99);
    let a = simulate_mttf(&sp, &cfg).map_err(|e| e.to_string())?;
    let b = simulate_mttf(&sp, &cfg).map_err(|e| e.to_string())?;
    ensure(a == b, || format!("same seed differs: {a:?} vs {b:?}"))?;

    Ok(format!(
        "{} diagrams ({validated} topology diagrams), seeded rerun bit-identical; {}",
        validated + 2,
        notes.join(", ")
    ))
}

fn cost_ranking() -> Outcome {
    let s = paper_repro();
    let op = s.operating_point().map_err(|e| e.to_string())?;
    let cost = s.cost().map_err(|e| e.to_string())?;
    let ranked = rank_configurations(&op, &cost).map_err(|e| e.to_string())?;
    let order: Vec<Topology> = ranked.iter().map(|r| r.topology).collect();
    let lc = |t: Topology| {
        ranked
            .iter()
            .find(|r| r.topology == t)
            .map(|r| r.bill)
            .unwrap()
    };
    let summary = ranked
        .iter()
        .map(|r| format!("{} {:.2}", r.topology, r.bill.lc_per_mh))
        .collect::<Vec<_>>()
        .join(" < ");
    ensure(order[0] == Topology::ShuntParallel, || summary.clone())?;
    ensure(
        order[1..3].contains(&Topology::ShuntStandby)
            && order[1..3].contains(&Topology::SeriesStandby),
        || summary.clone(),
    )?;
    ensure(order[3] == Topology::SeriesParallel, || summary.clone())?;
    ensure(order[4] == Topology::NonRedundant, || summary.clone())?;
    let (a, b) = (lc(Topology::ShuntStandby), lc(Topology::SeriesStandby));
    ensure(a == b, || format!("standby bills differ: {a:?} vs {b:?}"))?;
    ensure(lc(Topology::ShuntParallel).lc_per_mh < a.lc_per_mh, || {
        summary.clone()
    })?;
    ensure(a.lc_per_mh < lc(Topology::SeriesParallel).lc_per_mh, || {
        summary.clone()
    })?;
    Ok(format!("{summary} $/Mh"))
}

fn property_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let n = 500;
    for _ in 0..n {
        // MTTF(k·rates) = MTTF(rates) / k
        let r = random_rates(&mut rng);
        let k = log_uniform(&mut rng, 1e-3, 1e3);
        let c = CoverageParams::new(rng.random(), rng.random(), rng.random()).unwrap();
        for t in Topology::ALL {
            let base = mttf(&build_diagram(t, &r, &c).unwrap()).map_err(|e| e.to_string())?;
            let scaled =
                mttf(&build_diagram(t, &r.scaled(k), &c).unwrap()).map_err(|e| e.to_string())?;
            ensure(rel(scaled * k, base) < 1e-12, || {
                format!("{t}: scaling by {k}")
            })?;
        }

        // π_T at the reference temperature
        let a = rng.random_range(100.0..10_000.0);
        ensure(temperature_factor(25.0, a).unwrap() == 1.0, || {
            format!("π_T(25) at a={a}")
        })?;

        // mode split reconstruction
        let l = log_uniform(&mut rng, 1e-9, 1e-3);
        let chi: f64 = rng.random();
        let (sc, oc) = split_rates(l, chi).unwrap();
        ensure(rel(sc + oc, l) <= f64::EPSILON, || {
            format!("split of {l} at χ={chi}")
        })?;
        ensure(
            (sc - chi * l).abs() == 0.0 && (oc - (1.0 - chi) * l).abs() == 0.0,
            || "split components".to_owned(),
        )?;

        // junction temperature: affine and increasing in loss
        let stack = ThermalStack::new(
            rng.random_range(-40.0..60.0),
            rng.random_range(0.0..5.0),
            rng.random_range(0.0..2.0),
            rng.random_range(0.01..100.0),
        )
        .unwrap();
        let (p1, p2) = (rng.random_range(0.0..10.0), rng.random_range(0.0..10.0));
        let (t1, t2) = (
            junction_temperature(&stack, p1),
            junction_temperature(&stack, p2),
        );
        let tm = junction_temperature(&stack, 0.5 * (p1 + p2));
        ensure((tm - 0.5 * (t1 + t2)).abs() < 1e-9, || {
            "junction temperature not affine".into()
        })?;
        ensure((p1 < p2) == (t1 < t2) || p1 == p2, || {
            "junction temperature not monotone".into()
        })?;
        ensure(junction_temperature(&stack, 0.0) == stack.t_a, || {
            "T_j(0) != T_a".into()
        })?;

        // LC homogeneity in the cost coefficients
        let cost = CostParams {
            c0: rng.random_range(0.0..2000.0),
            i_rating: rng.random_range(0.0..2.0),
            x_switches: 2,
            c_l0: rng.random_range(0.0..20.0),
            c_lt: rng.random_range(0.0..500.0),
            c_d0: rng.random_range(0.0..5000.0),
            mttr_days: rng.random_range(0.0..60.0),
        };
        let kc = log_uniform(&mut rng, 1e-2, 1e2);
        let scaled = CostParams {
            c0: cost.c0 * kc,
            c_l0: cost.c_l0 * kc,
            c_lt: cost.c_lt * kc,
            c_d0: cost.c_d0 * kc,
            ..cost
        };
        let m = log_uniform(&mut rng, 1e3, 1e7);
        let p = rng.random_range(0.0..5.0);
        let a = levelized_cost(&cost, m, p).unwrap();
        let b = levelized_cost(&scaled, m, p).unwrap();
        ensure(
            a.lc_per_mh == 0.0 && b.lc_per_mh == 0.0 || rel(b.lc_per_mh, kc * a.lc_per_mh) < 1e-12,
            || format!("LC homogeneity: {a:?} vs {b:?} (k={kc})"),
        )?;
        ensure(
            rel(a.total() / (a.mttf_h + a.mttr_h) * 1e6, a.lc_per_mh) <= 1e-15
                || a.lc_per_mh == 0.0,
            || "LC != total / (MTTF + MTTR)".into(),
        )?;
    }
    Ok(format!("{n} seeded cases per property"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (
            "1 markov engine matches closed forms",
            markov_matches_closed_form,
        ),
        (
            "2 perfect-coverage closed forms",
            perfect_coverage_closed_forms,
        ),
        ("3 boundary constants", boundary_constants_in_range),
        (
            "4 imperfect-coverage threshold",
            imperfect_threshold_at_full_coverage,
        ),
        (
            "5 temperature arithmetic and heat-sink condition",
            temperature_arithmetic,
        ),
        ("6 monte carlo cross-validation", monte_carlo_agrees),
        ("7 levelized cost ranking", cost_ranking),
        ("8 property suite", property_suite),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let outcome =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".to_owned()));
        match outcome {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {name}: {detail}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
