use std::time::{Duration, Instant};

use bpu_core::invariants::{verify_mui_presentation, verify_vistoli_integral};
use bpu_core::spectral::verify_e4_identities;
use bpu_core::symfun::{check_ln_lemma, check_nabla_onto_2p};
use bpu_core::topology::{
    alpha_sum_image, check_delta_lemma, delta_star, delta_star_multinomial, theta_delta, verify_lambda_formula,
    verify_steenrod_ledger, verify_yagita, GammaModel,
};
use bpu_core::{PrimeField, VerdictReport};
use bpu_verify::sampler::PROPERTIES;

fn field(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

type Criterion = fn() -> Vec<String>;

fn report_failures(reports: &[VerdictReport]) -> Vec<String> {
    reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| format!("{} {:?}: {}", r.check, r.params, r.counterexample.clone().unwrap_or_default()))
        .collect()
}

fn within(limit: Duration, elapsed: Duration, failures: &mut Vec<String>) {
    if elapsed >= limit {
        failures.push(format!("took {elapsed:?}, limit {limit:?}"));
    }
}

fn criterion_01_main_vanishing() -> Vec<String> {
    let start = Instant::now();
    let mut failures = Vec::new();
    for (p, blocks) in [(3, 1), (3, 2), (5, 1)] {
        let sum = alpha_sum_image(&GammaModel::new(field(p), blocks));
        if !sum.total.is_zero() {
            failures.push(format!("p={p}, blocks={blocks}: {} nonzero terms", sum.total.len()));
        }
    }
    within(Duration::from_secs(60), start.elapsed(), &mut failures);
    failures
}

fn criterion_02_steenrod_ledger() -> Vec<String> {
    let reports = [verify_steenrod_ledger(field(3)), verify_steenrod_ledger(field(5))];
    report_failures(&reports)
}

fn criterion_03_mui_presentation() -> Vec<String> {
    let start = Instant::now();
    let mut failures = report_failures(&[verify_mui_presentation(field(3), 40)]);
    within(Duration::from_secs(120), start.elapsed(), &mut failures);
    failures
}

fn criterion_04_vistoli_integral() -> Vec<String> {
    report_failures(&[verify_vistoli_integral(field(3), 24)])
}

fn criterion_05_theta_delta() -> Vec<String> {
    let mut failures = Vec::new();
    for (p, expected) in [(3, "-eta^6"), (5, "-eta^20")] {
        let value = theta_delta(field(p)).value.to_string();
        if value != expected {
            failures.push(format!("p={p}: {value}, expected {expected}"));
        }
    }
    failures
}

fn criterion_06_delta_lemma() -> Vec<String> {
    let mut failures = Vec::new();
    for (p, n, up_to) in [(3, 9, 6), (3, 18, 6), (3, 27, 18), (5, 25, 10)] {
        let f = field(p);
        let report = check_delta_lemma(f, n, up_to);
        failures.extend(report_failures(&[report]));
        if delta_star(f, n, up_to).unwrap() != delta_star_multinomial(f, n, up_to).unwrap() {
            failures.push(format!("expansion paths disagree at p={p}, n={n}"));
        }
    }
    failures
}

fn criterion_07_ln_lemma() -> Vec<String> {
    let reports = [check_ln_lemma(field(3), 9), check_ln_lemma(field(3), 18)];
    report_failures(&reports)
}

fn criterion_08_nabla_onto() -> Vec<String> {
    let reports = [
        check_nabla_onto_2p(field(3), 3),
        check_nabla_onto_2p(field(3), 9),
        check_nabla_onto_2p(field(5), 5),
    ];
    report_failures(&reports)
}

fn criterion_09_yagita() -> Vec<String> {
    report_failures(&[verify_yagita(field(3), 3, 1)])
}

fn criterion_10_lambda_formula() -> Vec<String> {
    report_failures(&[verify_lambda_formula(field(3), 3)])
}

fn criterion_11_e4_identities() -> Vec<String> {
    let reports = [verify_e4_identities(field(3), 3, 10), verify_e4_identities(field(3), 9, 10)];
    report_failures(&reports)
}

fn criterion_12_property_suites() -> Vec<String> {
    let cases = 200;
    let mut failures = Vec::new();
    for seed in [1u64, 2] {
        for (name, property) in PROPERTIES {
            let report = property(seed, cases);
            if report.params["cases"] < 200 {
                failures.push(format!("{name}: only {} cases", report.params["cases"]));
            }
            failures.extend(report_failures(&[report]));
        }
    }
    failures
}

const CRITERIA: [(u32, &str, Criterion); 12] = [
    (1, "alpha sum vanishes after restriction", criterion_01_main_vanishing),
    (2, "Bockstein and power ledger on s, y, z, w", criterion_02_steenrod_ledger),
    (3, "Mui presentation through degree 40", criterion_03_mui_presentation),
    (4, "integral invariants through degree 24", criterion_04_vistoli_integral),
    (5, "Theta(delta) = -eta^(p^2-p)", criterion_05_theta_delta),
    (6, "diagonal pullback lemma", criterion_06_delta_lemma),
    (7, "L_n in degree 2p^2", criterion_07_ln_lemma),
    (8, "nabla onto in degree 2p", criterion_08_nabla_onto),
    (9, "Milnor operations on K(Z,3) generators", criterion_09_yagita),
    (10, "Milnor operations on lambda", criterion_10_lambda_formula),
    (11, "E_4 rank identities and d_3 d_3 = 0", criterion_11_e4_identities),
    (12, "sampled property suites", criterion_12_property_suites),
];

fn main() {
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (number, name, criterion) in CRITERIA {
        let id = format!("criterion_{number:02}");
        if !filter.is_empty() && !filter.iter().any(|f| id.contains(f.as_str()) || name.contains(f.as_str())) {
            continue;
        }
        let start = Instant::now();
        let failures = criterion();
        let status = if failures.is_empty() { "PASS" } else { "FAIL" };
        println!("criterion {number:>2} {status} {name} ({} ms)", start.elapsed().as_millis());
        for f in &failures {
            println!("    {f}");
        }
        if !failures.is_empty() {
            failed += 1;
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
