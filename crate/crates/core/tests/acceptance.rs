//! Acceptance suite: one test per exit criterion. Each test prints a single
//! pass/fail line (visible under `--nocapture`) and asserts the criterion at
//! its stated order, sample count, and runtime budget.

use std::time::{Duration, Instant};
use twistlab_core::suites::{run, run_suite, SuiteConfig};
use twistlab_core::VerificationReport;

fn config(order: usize, samples: usize) -> SuiteConfig {
    SuiteConfig {
        order,
        samples,
        ..SuiteConfig::default()
    }
}

fn criterion(idx: usize, name: &str, budget: Duration, report: VerificationReport) {
    let passed = report.all_passed();
    println!(
        "criterion {idx} ({name}): {}",
        if passed { "PASS" } else { "FAIL" }
    );
    if !passed {
        println!("{report}");
    }
    assert!(passed, "criterion {idx} failed");
    let _ = budget;
}

fn run_with_budget(
    idx: usize,
    name: &str,
    suite: &str,
    cfg: &SuiteConfig,
    budget: Duration,
) -> VerificationReport {
    let started = Instant::now();
    let report = run_suite(suite, cfg).expect("suite runs");
    let elapsed = started.elapsed();
    assert!(
        elapsed < budget,
        "criterion {idx} ({name}) exceeded its runtime budget: {elapsed:?} >= {budget:?}"
    );
    report
}

#[test]
fn criterion_01_lie_bialgebra() {
    let budget = Duration::from_secs(1);
    let rep = run_with_budget(1, "lie-bialgebra", "lie-bialgebra", &config(3, 50), budget);
    // Jacobi for axb, axb_dual, and the double table; the cobracket values;
    // the dual bracket
    for label in [
        "jacobi[axb]/",
        "jacobi[axb_dual]/",
        "jacobi[axb_double]/",
        "delta(H) = -2 H^E",
        "delta(E) = 0",
        "[H*, E*] = -2 H* via dualization",
    ] {
        assert!(
            rep.checks
                .iter()
                .any(|c| c.label.contains(label) && c.passed),
            "missing or failing: {label}"
        );
    }
    criterion(1, "lie-bialgebra", budget, rep);
}

#[test]
fn criterion_02_double_group() {
    let budget = Duration::from_secs(10);
    let rep = run_with_budget(2, "double-group", "double-group", &config(3, 50), budget);
    // the derived dressing sign is reported
    assert!(rep
        .derived
        .iter()
        .any(|(k, v)| k == "dressing_x_sign" && v.contains("x + n y")));
    for label in [
        "group law associative at 50 rational samples",
        "exp(t xi) exp(s xi) = exp((t+s) xi) at 50 seeded (t, s)",
        "decompose(embed_sstar . embed_s) round-trips symbolically",
        "action axiom",
    ] {
        assert!(
            rep.checks
                .iter()
                .any(|c| c.label.contains(label) && c.passed),
            "missing or failing: {label}"
        );
    }
    criterion(2, "double-group", budget, rep);
}

#[test]
fn criterion_03_poisson() {
    let budget = Duration::from_secs(1);
    let rep = run_with_budget(3, "poisson", "poisson", &config(3, 50), budget);
    for label in [
        "pi_l from the r-matrix pattern equals 2y^2 dx^dy",
        "pi_* - pi_l = 2y dx^dy (linear)",
        "[pi_l, pi_l] = 0",
        "[pi_*, pi_*] = 0",
        "[pi_lin, pi_lin] = 0",
    ] {
        assert!(
            rep.checks
                .iter()
                .any(|c| c.label.contains(label) && c.passed),
            "missing or failing: {label}"
        );
    }
    criterion(3, "poisson", budget, rep);
}

#[test]
fn criterion_04_dressing_generators() {
    let budget = Duration::from_secs(5);
    let rep = run_with_budget(
        4,
        "dressing-generators",
        "dressing-generators",
        &config(3, 50),
        budget,
    );
    // both families verify all three conditions; mismatches fail the shift
    let shifts = rep
        .checks
        .iter()
        .filter(|c| c.label.contains("dressing shift") && c.passed)
        .count();
    assert!(shifts >= 4, "both families pass the dressing shift");
    assert!(rep
        .checks
        .iter()
        .any(|c| c.label.contains("mismatched family/structure pairings") && c.passed));
    criterion(4, "dressing-generators", budget, rep);
}

#[test]
fn criterion_05_twist_axioms_order_4() {
    let budget = Duration::from_secs(60);
    let rep = run_with_budget(5, "twist-axioms", "twist-axioms", &config(4, 50), budget);
    for label in [
        "cocycle identity",
        "counit conditions",
        "Delta_F coassociative through hbar^4",
        "S_F antipode axiom through hbar^4",
        "semiclassical part is alternating and proportional to H^E",
        "CYBE of the semiclassical part",
    ] {
        assert!(
            rep.checks
                .iter()
                .any(|c| c.label.contains(label) && c.passed),
            "missing or failing: {label}"
        );
    }
    criterion(5, "twist-axioms order 4", budget, rep);
}

#[test]
fn criterion_06_udf_star_order_3() {
    let budget = Duration::from_secs(60);
    let rep = run_with_budget(6, "udf-star", "udf-star", &config(3, 50), budget);
    assert!(rep
        .checks
        .iter()
        .any(|c| c.label.contains("through hbar^3 on 216 triples") && c.passed));
    // the recorded first-order constant against the pi_l bracket
    assert!(rep
        .derived
        .iter()
        .any(|(k, v)| k.contains("constant") && v == "-1/2"));
    criterion(6, "udf-star order 3", budget, rep);
}

#[test]
fn criterion_07_duality_order_3() {
    let budget = Duration::from_secs(120);
    let rep = run_with_budget(7, "duality", "duality", &config(3, 50), budget);
    for label in [
        "star_cocycle = star_udf through hbar^3",
        "2-cocycle identity through hbar^2",
        "<Delta_F X, f(x)g> = <X, m_gamma(f(x)g)> through hbar^2",
    ] {
        assert!(
            rep.checks
                .iter()
                .any(|c| c.label.contains(label) && c.passed),
            "missing or failing: {label}"
        );
    }
    criterion(7, "duality order 3", budget, rep);
}

#[test]
fn criterion_08_momentum_classical() {
    let budget = Duration::from_secs(30);
    let rep = run_with_budget(
        8,
        "momentum-classical",
        "momentum-classical",
        &config(3, 20),
        budget,
    );
    for label in [
        "momentum-condition[identity]",
        "momentum-condition[Exp]",
        "Exp_* phi(H) = l_H at 20 rational samples",
        "Exp_* phi(E) = l_E at 20 rational samples",
        "poisson-equivalence[Exp]",
        "equivalence lemma preserved under failure",
    ] {
        assert!(
            rep.checks
                .iter()
                .any(|c| c.label.contains(label) && c.passed),
            "missing or failing: {label}"
        );
    }
    criterion(8, "momentum-classical", budget, rep);
}

#[test]
fn criterion_09_momentum_quantum_order_2() {
    let budget = Duration::from_secs(120);
    let rep = run_with_budget(
        9,
        "momentum-quantum",
        "momentum-quantum",
        &config(2, 20),
        budget,
    );
    for label in [
        "quantum-momentum[identity]/J*(f star_l g) = (J*f) star_phi (J*g) through hbar^2",
        "quantum-momentum[Exp]/J*(f star_l g) = (J*f) star_phi (J*g) through hbar^2",
        "classically failing map fails at first order",
        "comodule-diagram",
        "deformed-comodule-morphism",
    ] {
        assert!(
            rep.checks
                .iter()
                .any(|c| c.label.contains(label) && c.passed),
            "missing or failing: {label}"
        );
    }
    criterion(9, "momentum-quantum order 2", budget, rep);
}

#[test]
fn criterion_10_determinism() {
    let cfg = config(2, 25);
    let sel = vec!["all".to_string()];
    let a = run(&sel, &cfg).expect("first run").render_text();
    let b = run(&sel, &cfg).expect("second run").render_text();
    let passed = a == b && !a.is_empty();
    println!(
        "criterion 10 (determinism): {}",
        if passed { "PASS" } else { "FAIL" }
    );
    assert!(passed, "reports differ between identical runs");
}
