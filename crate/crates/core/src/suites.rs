//! Verification-suite registry: every checker bundle behind one batch entry
//! point, shared by the CLI and the acceptance tests. Runs are deterministic
//! for a fixed configuration and seed.

use crate::axb::{double_exp, double_mul, AxbModel, DoubleElt, DoubleVec, StructureTag};
use crate::geom::{Chart, ChartMap, Multivector};
use crate::liealg::{
    axb, axb_double, axb_dual, cobracket, dual_algebra, parse_fixture, schouten_cybe, RMatrix,
    TensorElt,
};
use crate::momentum::{
    adjoint_action_certificate, check_ell_equivariance, check_momentum_condition,
    check_poisson_map, coadjoint_action, coadjoint_coaction, exp_intertwines_at_samples,
    exp_modified_map, pi_r, poisson_action_check, poisson_eq_equivalence, quantum_momentum_check,
    rsharp_intertwine_check, HamiltonianCertificate, MomentumMap,
};
use crate::quantize::{
    assoc_check, comodule_algebra_morphism_check, comodule_check, mgamma_duality_check,
    semiclassical_check, star_cocycle, star_udf, two_cocycle_check, Coaction, CocycleGamma,
    GroupCoproduct, GroupPairing, HopfAction,
};
use crate::rng::SplitMix64;
use crate::scalar::{Assignment, Scalar};
use crate::uea::twist::{
    antipode_axiom_first_failure, coassoc_first_failure, jordanian_twist, parse_twist, twist_check,
    twist_semiclassical, twisted_antipode_data, twisted_counit_first_failure, TwistSeries,
};
use crate::uea::UEAElement;
use crate::{convention, int, rat, Error, Rat, Result, VerificationReport};
use num_traits::Zero;

pub const JORDANIAN_FIXTURE: &str = include_str!("../fixtures/jordanian.twist");
pub const JORDANIAN_BAD_FIXTURE: &str = include_str!("../fixtures/jordanian_bad.twist");

/// Batch configuration: suite selection happens at the call site; the config
/// carries the shared knobs.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// hbar truncation order, clamped to `[0, 4]`.
    pub order: usize,
    /// Seed for every sampled identity (replayable).
    pub seed: u64,
    /// Sample count for point-checked identities.
    pub samples: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            order: 3,
            seed: 0x7157_1ab,
            samples: 50,
        }
    }
}

impl SuiteConfig {
    fn order_at_least(&self, n: usize) -> usize {
        self.order.clamp(n, 4)
    }
}

/// One run: ledger snapshot plus one report per executed suite.
#[derive(Clone, Debug)]
pub struct RunReport {
    pub order: usize,
    pub seed: u64,
    pub samples: usize,
    pub ledger: Vec<(&'static str, &'static str)>,
    pub suites: Vec<VerificationReport>,
}

impl RunReport {
    pub fn all_passed(&self) -> bool {
        self.suites.iter().all(|s| s.all_passed())
    }

    /// Canonical machine-readable rendering; byte-identical across runs with
    /// the same configuration and seed.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "config order={} seed={} samples={}\n",
            self.order, self.seed, self.samples
        ));
        for (k, v) in &self.ledger {
            out.push_str(&format!("ledger {k} = {v}\n"));
        }
        for s in &self.suites {
            out.push_str(&format!(
                "suite {} {}\n",
                s.name,
                if s.all_passed() { "PASS" } else { "FAIL" }
            ));
            for c in &s.checks {
                out.push_str(&format!(
                    "check {} :: {} {}\n",
                    s.name,
                    if c.passed { "ok" } else { "FAIL" },
                    c.label
                ));
                if let Some(d) = &c.details {
                    if !d.is_empty() {
                        out.push_str(&format!("  detail {d}\n"));
                    }
                }
            }
            for (k, v) in &s.derived {
                out.push_str(&format!("derived {} :: {k} = {v}\n", s.name));
            }
        }
        out
    }
}

/// All registered suite names, in execution order.
pub fn registry() -> Vec<&'static str> {
    vec![
        "lie-bialgebra",
        "double-group",
        "poisson",
        "dressing-generators",
        "twist-axioms",
        "udf-star",
        "duality",
        "momentum-classical",
        "momentum-quantum",
    ]
}

/// Resolve a suite selector (a name, `all`, or the `appendix-a` bundle).
pub fn resolve(selector: &str) -> Result<Vec<&'static str>> {
    match selector {
        "all" => Ok(registry()),
        "appendix-a" => Ok(vec!["double-group", "poisson", "dressing-generators"]),
        other => registry()
            .into_iter()
            .find(|n| *n == other)
            .map(|n| vec![n])
            .ok_or_else(|| Error::UnknownSuite(other.to_string())),
    }
}

/// Shipped fixtures addressable from the CLI.
pub fn fixtures_list() -> Vec<(&'static str, &'static str)> {
    vec![
        ("axb", "structure constants"),
        ("axb_dual", "structure constants"),
        ("axb_double", "structure constants"),
        ("axb_double_group", "double group model (R x V x R)"),
        ("jordanian", "twist series, order 4"),
        ("jordanian_bad", "tampered twist series (expected to fail)"),
    ]
}

pub fn run_suite(name: &str, config: &SuiteConfig) -> Result<VerificationReport> {
    match name {
        "lie-bialgebra" => lie_bialgebra_suite(config),
        "double-group" => double_group_suite(config),
        "poisson" => poisson_suite(config),
        "dressing-generators" => dressing_generator_suite(config),
        "twist-axioms" => twist_axioms_suite(config),
        "udf-star" => udf_star_suite(config),
        "duality" => duality_suite(config),
        "momentum-classical" => momentum_classical_suite(config),
        "momentum-quantum" => momentum_quantum_suite(config),
        other => Err(Error::UnknownSuite(other.to_string())),
    }
}

/// Run a list of suite selectors into one report.
pub fn run(selectors: &[String], config: &SuiteConfig) -> Result<RunReport> {
    let mut names: Vec<&'static str> = Vec::new();
    for sel in selectors {
        for n in resolve(sel)? {
            if !names.contains(&n) {
                names.push(n);
            }
        }
    }
    let mut suites = Vec::new();
    for n in names {
        suites.push(run_suite(n, config)?);
    }
    Ok(RunReport {
        order: config.order,
        seed: config.seed,
        samples: config.samples,
        ledger: convention::ledger_entries(),
        suites,
    })
}

// ---------------------------------------------------------------------------
// Suite bodies.
// ---------------------------------------------------------------------------

fn lie_bialgebra_suite(_config: &SuiteConfig) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("lie-bialgebra");
    let s = axb();
    let sd = axb_dual();
    let d = axb_double();
    for g in [&s, &sd, &d] {
        rep.merge(g.jacobi_check());
    }
    // cobracket values
    let r = RMatrix::from_wedge(2, &[(0, 1, int(1))]);
    let dh = cobracket(&s, &r, &TensorElt::basis(2, 0))?;
    let de = cobracket(&s, &r, &TensorElt::basis(2, 1))?;
    rep.check(
        "delta(H) = -2 H^E",
        dh.terms == TensorElt::wedge2(2, 0, 1, int(-2)).terms,
        "",
    );
    rep.check("delta(E) = 0", de.is_zero(), "");
    // dual bracket from the cobracket table
    let dual = dual_algebra(&s, &[dh, de], "axb_dual", vec!["Hs".into(), "Es".into()])?;
    rep.check("[H*, E*] = -2 H* via dualization", dual == sd, "");
    // CYBE inside the double
    let r4 = RMatrix::from_wedge(4, &[(0, 1, int(1))]);
    rep.check(
        "[r, r] = 0 for H^E inside the double",
        schouten_cybe(&d, &r4).is_zero(),
        "",
    );
    // Heisenberg data of the derived subalgebra and the Z scaling
    let basis = |i| TensorElt::basis(4, i);
    let f = basis(2).add(&basis(0).scale(&int(-1)));
    let z = basis(1).scale(&int(2)).add(&basis(3).scale(&int(-2)));
    let ef = d.bracket(&basis(1), &f)?;
    rep.check(
        "[E, F] = Z with F = bH - H, Z = 2E - 2bE",
        ef.terms == z.terms,
        "",
    );
    rep.check(
        "[E, Z] = [F, Z] = 0",
        d.bracket(&basis(1), &z)?.is_zero() && d.bracket(&f, &z)?.is_zero(),
        "",
    );
    rep.record("heisenberg_z_scaling", "1");
    // tampered table fails with listed triples
    let tampered =
        parse_fixture(&crate::liealg::AXB_DOUBLE_FIXTURE.replace("c H E E 2", "c H E E 3"))?;
    let bad = tampered.jacobi_check();
    rep.check(
        "tampered c^E_{HE} = 3 fails the Jacobi gate",
        !bad.all_passed(),
        "",
    );
    Ok(rep)
}

fn double_group_suite(config: &SuiteConfig) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("double-group");
    let m = AxbModel::new();
    let mut rng = SplitMix64::new(config.seed).fork("double-group");

    // group law: symbolic associativity over three generic elements
    let mk = |tag: &str| -> Result<DoubleElt> {
        let ch = Chart::new(tag, &["a", "ve", "vf", "z"]);
        let a = Scalar::coord(&ch.coords[0]);
        Ok(DoubleElt {
            log_scale: Some(a.clone()),
            scale: Scalar::exp_of(
                &a.as_linear_form()
                    .expect("coordinate is linear")
                    .scaled(&int(2)),
            ),
            ve: Scalar::coord(&ch.coords[1]),
            vf: Scalar::coord(&ch.coords[2]),
            z: Scalar::coord(&ch.coords[3]),
        })
    };
    let (g1, g2, g3) = (mk("d1")?, mk("d2")?, mk("d3")?);
    let assoc_l = double_mul(&double_mul(&g1, &g2)?, &g3)?;
    let assoc_r = double_mul(&g1, &double_mul(&g2, &g3)?)?;
    rep.check(
        "group law associative (symbolic)",
        assoc_l.group_eq(&assoc_r),
        "",
    );
    rep.check(
        "unit laws",
        double_mul(&DoubleElt::identity(), &g1)?.group_eq(&g1)
            && double_mul(&g1, &DoubleElt::identity())?.group_eq(&g1),
        "",
    );
    // ... and at seeded rational points
    let sampled_eq = |lhs: &Scalar, rhs: &Scalar, rng: &mut SplitMix64, trials: usize| -> bool {
        let mut coords = lhs.coords();
        coords.extend(rhs.coords());
        let mut atoms = lhs.atom_coords();
        atoms.extend(rhs.atom_coords());
        let mut done = 0;
        while done < trials {
            let mut asn = Assignment::new();
            for c in &coords {
                asn.coords.insert(c.clone(), rng.rat_nonzero());
            }
            for c in &atoms {
                asn.atoms.insert(c.clone(), rng.rat_positive());
            }
            match (lhs.eval(&asn), rhs.eval(&asn)) {
                (Ok(a), Ok(b)) => {
                    if a != b {
                        return false;
                    }
                    done += 1;
                }
                _ => continue,
            }
        }
        true
    };
    rep.check(
        format!(
            "group law associative at {} rational samples",
            config.samples
        ),
        sampled_eq(&assoc_l.z, &assoc_r.z, &mut rng, config.samples)
            && sampled_eq(&assoc_l.ve, &assoc_r.ve, &mut rng, config.samples),
        "",
    );

    // exponential: one-parameter property at seeded integer (t, s)
    let ch = Chart::new("xi", &["a0", "ve", "vf", "z0"]);
    let xi = DoubleVec::new(
        Scalar::coord(&ch.coords[0]),
        Scalar::coord(&ch.coords[1]),
        Scalar::coord(&ch.coords[2]),
        Scalar::coord(&ch.coords[3]),
    );
    let scale_vec = |t: i64| -> DoubleVec {
        DoubleVec::new(
            xi.a0.scale(&int(t)),
            xi.ve.scale(&int(t)),
            xi.vf.scale(&int(t)),
            xi.z0.scale(&int(t)),
        )
    };
    let mut one_param_ok = true;
    for _ in 0..config.samples {
        let t = rng.int_in(-4, 4);
        let s = rng.int_in(-4, 4);
        let lhs = double_mul(&double_exp(&scale_vec(t))?, &double_exp(&scale_vec(s))?)?;
        let rhs = double_exp(&scale_vec(t + s))?;
        if !lhs.group_eq(&rhs) {
            one_param_ok = false;
            break;
        }
    }
    rep.check(
        format!(
            "exp(t xi) exp(s xi) = exp((t+s) xi) at {} seeded (t, s)",
            config.samples
        ),
        one_param_ok,
        "",
    );
    // derivative at the identity via the t-series
    let tch = Chart::new("curve", &["t"]);
    let t = tch.coords[0].clone();
    let series = crate::axb::double_exp_t_series(&xi, &t, 3)?;
    let d1 = |f: &Scalar| -> Result<Scalar> { f.differentiate(&t).set_coord_zero(&t) };
    rep.check(
        "d/dt exp(t xi)|_0 = xi (series coefficient)",
        d1(series.log_scale.as_ref().unwrap())? == xi.a0
            && d1(&series.ve)? == xi.ve
            && d1(&series.vf)? == xi.vf
            && d1(&series.z)? == xi.z0,
        "",
    );

    // decompose round trip, symbolic
    let (x, y, a, n) = (m.x(), m.y(), m.a(), m.n());
    let d = double_mul(&m.embed_sstar_xy(&x, &y)?, &m.embed_s(&a, &n)?)?;
    let ((x2, y2), sfac) = m.decompose(&d)?;
    rep.check(
        "decompose(embed_sstar . embed_s) round-trips symbolically",
        x2 == x && y2 == y && sfac.n == n && sfac.a.as_ref() == Some(&a),
        "",
    );
    // multiply-back at seeded samples
    let back = double_mul(&m.embed_sstar_xy(&x2, &y2)?, &m.embed_s(&a, &n)?)?;
    rep.check(
        format!("multiply-back oracle at {} samples", config.samples),
        sampled_eq(&back.z, &d.z, &mut rng, config.samples),
        "",
    );

    // dressing action: derived sign, axiom orientation, fundamental fields
    let (xx, yy) = m.dressing_action(&x, &y, &a, &n)?;
    let plus = &x + &(&n * &y);
    let minus = &x - &(&n * &y);
    let sign = if xx == plus {
        "+1 (x + n y)"
    } else if xx == minus {
        "-1 (x - n y)"
    } else {
        "neither"
    };
    rep.check("dressing x-component is x +- n y", sign != "neither", "");
    rep.record("dressing_x_sign", sign);
    rep.check(
        "dressing y-component is exp(-2a) y",
        {
            let e2a_inv = Scalar::exp_of(&a.as_linear_form().unwrap().scaled(&int(-2)));
            yy == &e2a_inv * &y
        },
        "",
    );
    let s2chart = Chart::new("s2", &["a2", "n2"]);
    let a2 = Scalar::coord(&s2chart.coords[0]);
    let n2 = Scalar::coord(&s2chart.coords[1]);
    let (px, py) = m.dressing_action(&x, &y, &a, &n)?;
    let lhs = m.dressing_action(&px, &py, &a2, &n2)?;
    let (sa, sn) = m.s_group_mul(&a2, &n2, &a, &n)?;
    let rhs = m.dressing_action(&x, &y, &sa, &sn)?;
    rep.check(
        "action axiom (p.s).s' = p.(s's) in the derived orientation",
        lhs.0 == rhs.0 && lhs.1 == rhs.1,
        "",
    );
    rep.record("action_composition", "opposite");
    // S-side embed consistency and S* unit/inverse
    let emb = double_mul(&m.embed_s(&a, &n)?, &m.embed_s(&a2, &n2)?)?;
    let (ma, mn) = m.s_group_mul(&a, &n, &a2, &n2)?;
    rep.check(
        "embed_s(s) embed_s(s') = embed_s(s s')",
        emb.group_eq(&m.embed_s(&ma, &mn)?),
        "",
    );
    let (ux, uy) = m.sstar_group_mul(&x, &y, &Scalar::zero(), &Scalar::zero());
    let (ix, iy) = m.sstar_inverse(&x, &y)?;
    let (zx, zy) = m.sstar_group_mul(&x, &y, &ix, &iy);
    rep.check(
        "S* chart law: unit and local inverse",
        ux == x && uy == y && zx.is_zero() && zy.is_zero(),
        "",
    );
    Ok(rep)
}

fn poisson_suite(_config: &SuiteConfig) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("poisson");
    let m = AxbModel::new();
    let y = m.y();
    let pi_ell = m.pi_ell()?;
    rep.check(
        "pi_l from the r-matrix pattern equals 2y^2 dx^dy",
        pi_ell == Multivector::bivector(&m.gstar, &[(0, 1, (&y * &y).scale(&int(2)))]),
        "",
    );
    let lin = m.pi_lin()?;
    rep.check(
        "pi_* - pi_l = 2y dx^dy (linear)",
        lin == Multivector::bivector(&m.gstar, &[(0, 1, y.scale(&int(2)))]),
        "",
    );
    for (label, pi) in [("pi_l", &pi_ell), ("pi_*", &m.pi_star()), ("pi_lin", &lin)] {
        rep.check(
            format!("[{label}, {label}] = 0"),
            crate::geom::schouten_bracket(pi, pi)?.is_zero(),
            "",
        );
    }
    // coadjoint structure on the dual chart
    let (phi, _) = coadjoint_action(&m)?;
    let pr = pi_r(&m, &phi);
    rep.check(
        "[pi_r, pi_r] = 0",
        crate::geom::schouten_bracket(&pr, &pr)?.is_zero(),
        "",
    );
    let xe = Scalar::coord(&m.gdual.coords[1]);
    rep.check(
        "pi_r differs from the linear structure",
        pr.component(&[0, 1]) != xe.scale(&int(-2)) && !pr.is_zero(),
        "",
    );
    // sharp compatibility identities used by the Poisson-action lemma
    let gens = m.generators_lambda();
    let compat = crate::geom::sharp_compat_check(&pi_ell, &gens.alpha_h)?;
    rep.merge(compat);
    let dx = crate::geom::OneForm::new(&m.gstar, vec![Scalar::one(), Scalar::zero()]);
    let compat = crate::geom::sharp_compat_check(&m.pi_star(), &dx)?;
    rep.merge(compat);
    Ok(rep)
}

fn dressing_generator_suite(_config: &SuiteConfig) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("dressing-generators");
    let m = AxbModel::new();
    let star = m.generators_star();
    let lambda = m.generators_lambda();
    let star_pi = m.structure_for(StructureTag::Star)?;
    let lambda_pi = m.structure_for(StructureTag::Lambda)?;
    rep.merge(m.verify_dressing_generator(&star, &star_pi)?);
    rep.merge(m.verify_dressing_generator(&lambda, &lambda_pi)?);
    // mismatched pairings fail the dressing shift
    let swapped1 = m.verify_dressing_generator(&star, &lambda_pi)?;
    let swapped2 = m.verify_dressing_generator(&lambda, &star_pi)?;
    let shift_fails = |r: &VerificationReport| {
        r.checks
            .iter()
            .any(|c| c.label.contains("dressing shift") && !c.passed)
    };
    rep.check(
        "mismatched family/structure pairings fail the dressing shift",
        shift_fails(&swapped1) && shift_fails(&swapped2),
        "",
    );
    rep.record("dressingstar_alpha_h_sign", "+1/(y+1) dx (derived)");
    Ok(rep)
}

fn twist_axioms_suite(config: &SuiteConfig) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("twist-axioms");
    let g = axb();
    let n = config.order_at_least(1);
    let f = jordanian_twist(&g, n);
    rep.merge(twist_check(&g, &f));
    // identity twist sanity
    rep.check(
        "identity twist passes every order",
        twist_check(&g, &TwistSeries::identity(2, n)).all_passed(),
        "",
    );
    // inverse multiplies back to 1 (x) 1
    let inv = f.inverse(&g)?;
    rep.check(
        "series inverse multiplies back",
        f.f.mul(&inv, &g) == crate::uea::HSeries::constant(UEAElement::unit(2, 2), n),
        "",
    );
    // deformed Hopf structure
    let he = UEAElement::monomial(2, vec![vec![1, 1]], Rat::from_integer(1.into()));
    let elems = [UEAElement::gen(2, 0), UEAElement::gen(2, 1), he];
    let mut coassoc = true;
    let mut counits = true;
    let mut antipode = true;
    for u in &elems {
        coassoc &= coassoc_first_failure(&g, &f, u)?.is_none();
        counits &= twisted_counit_first_failure(&g, &f, u)?.is_none();
        antipode &= antipode_axiom_first_failure(&g, &f, u)?.is_none();
    }
    rep.check(
        format!("Delta_F coassociative through hbar^{n} on H, E, HE"),
        coassoc,
        "",
    );
    rep.check(format!("counit axioms through hbar^{n}"), counits, "");
    rep.check(format!("S_F antipode axiom through hbar^{n}"), antipode, "");
    let data = twisted_antipode_data(&g, &f)?;
    rep.check(
        "u_F has unit leading term",
        data.u_f.coeffs[0] == UEAElement::unit(2, 1),
        "",
    );
    // semiclassical limit
    let r = twist_semiclassical(&g, &f)?;
    rep.check(
        "semiclassical part is alternating and proportional to H^E",
        r.to_tensor().is_antisymmetric() && !r.component(0, 1).is_zero(),
        "",
    );
    rep.record(
        "twist_semiclassical_coefficient",
        crate::liealg::fmt_rat(&r.component(0, 1)),
    );
    rep.check(
        "CYBE of the semiclassical part",
        schouten_cybe(&g, &r).is_zero(),
        "",
    );
    let mut independent = true;
    for k in 1..=n {
        independent &= twist_semiclassical(&g, &jordanian_twist(&g, k))? == r;
    }
    rep.check(
        "semiclassical part independent of the truncation order",
        independent,
        "",
    );
    // shipped fixtures: the good one round-trips and passes; the tampered one
    // fails at the reported order
    let parsed = parse_twist(JORDANIAN_FIXTURE, &g)?;
    rep.check(
        "shipped jordanian fixture matches the generator",
        parsed.f.truncated(n) == f.f,
        "",
    );
    let bad = parse_twist(JORDANIAN_BAD_FIXTURE, &g)?;
    let bad_rep = twist_check(&g, &bad);
    let cocycle_detail = bad_rep
        .checks
        .iter()
        .find(|c| c.label.contains("cocycle"))
        .and_then(|c| c.details.clone())
        .unwrap_or_default();
    rep.check(
        "tampered fixture fails the cocycle at hbar^2",
        !bad_rep.all_passed() && cocycle_detail.contains("hbar^2"),
        cocycle_detail,
    );
    Ok(rep)
}

fn gstar_monomials(m: &AxbModel, max_total: u32) -> Vec<Scalar> {
    let (x, y) = (m.x(), m.y());
    let mut out = Vec::new();
    for i in 0..=max_total {
        for j in 0..=(max_total - i) {
            let mut f = Scalar::one();
            for _ in 0..i {
                f = &f * &x;
            }
            for _ in 0..j {
                f = &f * &y;
            }
            out.push(f);
        }
    }
    out
}

fn lambda_action(m: &AxbModel) -> Result<HopfAction> {
    let (lh, le) = m.dressing_fields()?;
    HopfAction::new("lambda", &m.algebra, &m.gstar, vec![lh, le])
}

fn udf_star_suite(config: &SuiteConfig) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("udf-star");
    let m = AxbModel::new();
    let act = lambda_action(&m)?;
    let n = config.order_at_least(1);
    let f = jordanian_twist(&m.algebra, n);
    let samples = gstar_monomials(&m, 2);
    rep.merge(assoc_check(&f, &act, &samples)?);
    rep.merge(semiclassical_check(&f, &act, &m.pi_ell()?)?);
    // unit laws
    let probe = &(&m.x() * &m.x()) + &m.y();
    let left = star_udf(&f, &act, &probe, &Scalar::one())?;
    let right = star_udf(&f, &act, &Scalar::one(), &probe)?;
    let expect = crate::uea::HSeries::constant(probe.clone(), n);
    rep.check(
        "f * 1 = 1 * f = f at all orders",
        left == expect && right == expect,
        "",
    );
    // coadjoint action against its induced structure
    let (phi, _) = coadjoint_action(&m)?;
    rep.merge(semiclassical_check(&f, &phi, &pi_r(&m, &phi))?);
    Ok(rep)
}

/// Group-side fixture bundle shared by the duality checks.
struct GroupSide {
    pairing_main: GroupPairing,
    pairing_left: GroupPairing,
    pairing_right: GroupPairing,
    pairing_w: GroupPairing,
    outer: GroupCoproduct,
    inner: GroupCoproduct,
}

fn group_side(m: &AxbModel) -> Result<GroupSide> {
    let gl = m.s.renamed("gl", "l");
    let gr = m.s.renamed("gr", "r");
    let w = m.s.renamed("w", "w");
    let pairing = |ch: &Chart| -> Result<GroupPairing> {
        let (hl, el) = m.li_fields_on(ch)?;
        Ok(GroupPairing::new(ch, vec![hl, el]))
    };
    Ok(GroupSide {
        pairing_main: pairing(&m.s)?,
        pairing_left: pairing(&gl)?,
        pairing_right: pairing(&gr)?,
        pairing_w: pairing(&w)?,
        outer: GroupCoproduct {
            legs2: m.s_mul_map(&gl, &w, &m.s)?,
            left: gl.clone(),
            right: w.clone(),
        },
        inner: GroupCoproduct {
            legs2: m.s_mul_map(&m.s, &gr, &w)?,
            left: m.s.clone(),
            right: gr.clone(),
        },
    })
}

fn duality_suite(config: &SuiteConfig) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("duality");
    let m = AxbModel::new();
    let act = lambda_action(&m)?;
    let n = config.order_at_least(1);
    let f_twist = jordanian_twist(&m.algebra, n);
    let gamma = CocycleGamma::new(f_twist.clone());
    let coact = Coaction::new(&m.gstar, &m.s, m.inverse_dressing_action_map());
    let gs = group_side(&m)?;

    // central duality oracle: the two deformation routes agree
    let samples = gstar_monomials(&m, 2);
    let mut dual_ok = true;
    let mut detail = String::new();
    'outer: for f in &samples {
        for g in &samples {
            let via_udf = star_udf(&f_twist, &act, f, g)?;
            let via_cocycle = star_cocycle(&gamma, &coact, &gs.pairing_main, &m.algebra, f, g)?;
            if via_udf != via_cocycle {
                dual_ok = false;
                detail = format!("first mismatch at f = {f}, g = {g}");
                break 'outer;
            }
        }
    }
    rep.check(
        format!("star_cocycle = star_udf through hbar^{n} on monomials of degree <= 2"),
        dual_ok,
        detail,
    );

    // 2-cocycle identity
    let (a, ns) = (m.a(), m.n());
    let triples = [
        (a.clone(), ns.clone(), &a * &ns),
        (ns.clone(), a.clone(), a.clone()),
        (&a * &a, ns.clone(), a.clone()),
    ];
    rep.merge(two_cocycle_check(
        &gamma,
        &gs.outer,
        &gs.pairing_main,
        &gs.pairing_left,
        &gs.pairing_w,
        &triples,
        2.min(n),
    )?);

    // quantum-group duality
    let pairs = [
        (a.clone(), ns.clone()),
        (ns.clone(), a.clone()),
        (&a * &ns, ns.clone()),
    ];
    rep.merge(mgamma_duality_check(
        &gamma,
        &m.algebra,
        &gs.outer,
        &gs.inner,
        &gs.pairing_main,
        &gs.pairing_left,
        &gs.pairing_right,
        &pairs,
        2.min(n),
    )?);
    Ok(rep)
}

fn momentum_classical_suite(config: &SuiteConfig) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("momentum-classical");
    let m = AxbModel::new();
    let lambda = lambda_action(&m)?;
    let pi_l = m.pi_ell()?;
    let samples: Vec<Scalar> = {
        let (x, y) = (m.x(), m.y());
        vec![x.clone(), y.clone(), &x * &y]
    };

    // dressing example: identity momentum map, assembled as a certificate
    let id = MomentumMap::new("identity", ChartMap::identity(&m.gstar));
    let id_cert = HamiltonianCertificate {
        name: "identity".into(),
        momentum: check_momentum_condition(&id, &lambda, &pi_l, &m.generators_lambda())?,
        equivariance: check_ell_equivariance(&id, &lambda, &lambda, &samples)?,
        poisson_map: Some(check_poisson_map(&id, &pi_l, &pi_l)?),
        poisson_action: poisson_action_check(&m, &lambda, &pi_l)?,
        quantum: None,
    };
    for r in id_cert.reports() {
        rep.merge(r.clone());
    }
    rep.record(
        "hamiltonian[identity]",
        id_cert.is_hamiltonian().to_string(),
    );
    rep.merge(poisson_eq_equivalence(
        &id, &lambda, &lambda, &pi_l, &pi_l, &samples,
    )?);

    // coadjoint example through the modified exponential
    let (phi, oracle) = coadjoint_action(&m)?;
    rep.merge(oracle);
    let exp = exp_modified_map(&m)?;
    let jexp = MomentumMap::new("Exp", exp.clone());
    let pi_m = pi_r(&m, &phi);
    let exp_cert = HamiltonianCertificate {
        name: "Exp".into(),
        momentum: check_momentum_condition(&jexp, &phi, &pi_m, &m.generators_lambda())?,
        equivariance: check_ell_equivariance(&jexp, &phi, &lambda, &samples)?,
        poisson_map: Some(check_poisson_map(&jexp, &pi_m, &pi_l)?),
        poisson_action: poisson_action_check(&m, &phi, &pi_m)?,
        quantum: None,
    };
    for r in exp_cert.reports() {
        rep.merge(r.clone());
    }
    rep.record("hamiltonian[Exp]", exp_cert.is_hamiltonian().to_string());
    rep.merge(exp_intertwines_at_samples(
        &m,
        &exp,
        &phi,
        config.samples.max(20),
        config.seed,
    )?);
    rep.merge(poisson_eq_equivalence(
        &jexp, &phi, &lambda, &pi_m, &pi_l, &samples,
    )?);

    // mutations: the equivalence lemma must hold on failures too
    let (x, y) = (m.x(), m.y());
    let scaled = ChartMap::new(&m.gstar, &m.gstar, vec![x.clone(), y.scale(&int(2))])
        .with_inverse(vec![x.clone(), y.scale(&rat(1, 2))])?;
    let bad = MomentumMap::new("x-2y", scaled);
    let bad_momentum = check_momentum_condition(&bad, &lambda, &pi_l, &m.generators_lambda())?;
    rep.check(
        "mutated map (x, 2y) fails the momentum condition",
        !bad_momentum.all_passed(),
        "",
    );
    let equiv = poisson_eq_equivalence(&bad, &lambda, &lambda, &pi_l, &pi_l, &samples)?;
    rep.check(
        "equivalence lemma preserved under failure (fail, fail)",
        equiv.all_passed(),
        "",
    );
    let constant = MomentumMap::new(
        "constant",
        ChartMap::new(&m.gstar, &m.gstar, vec![Scalar::zero(), Scalar::one()]),
    );
    let const_momentum =
        check_momentum_condition(&constant, &lambda, &pi_l, &m.generators_lambda())?;
    rep.check(
        "constant map fails the momentum condition for H",
        !const_momentum.all_passed(),
        "",
    );

    // r-sharp intertwining: verdicts recorded as computed, non-gating
    let inter = rsharp_intertwine_check(&m);
    for c in &inter.checks {
        rep.record(
            format!("rsharp[{}]", c.label),
            if c.passed { "holds" } else { "fails" },
        );
    }
    let adj = adjoint_action_certificate(&m)?;
    rep.record(
        "adjoint_action_certificate",
        if adj.all_passed() {
            "pass"
        } else {
            "gated: intertwining fails for H"
        },
    );
    rep.check("rsharp intertwining outcomes recorded", true, "");
    Ok(rep)
}

fn momentum_quantum_suite(config: &SuiteConfig) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("momentum-quantum");
    let m = AxbModel::new();
    let lambda = lambda_action(&m)?;
    let n = config.order_at_least(2).min(3);
    let f_twist = jordanian_twist(&m.algebra, n);
    let monos = gstar_monomials(&m, 2);
    let mut pairs = Vec::new();
    for f in &monos {
        for g in &monos {
            pairs.push((f.clone(), g.clone()));
        }
    }

    // identity map: exact at all orders
    let id = MomentumMap::new("identity", ChartMap::identity(&m.gstar));
    rep.merge(quantum_momentum_check(
        &id, &f_twist, &lambda, &lambda, &pairs,
    )?);

    // Exp: symbolic (hence exact), plus seeded rational spot checks
    let (phi, _) = coadjoint_action(&m)?;
    let exp = MomentumMap::new("Exp", exp_modified_map(&m)?);
    rep.merge(quantum_momentum_check(
        &exp, &f_twist, &lambda, &phi, &pairs,
    )?);
    let mut rng = SplitMix64::new(config.seed).fork("momentum-quantum");
    let mut sampled_ok = true;
    for (f, g) in pairs.iter().take(6) {
        let star_g = star_udf(&f_twist, &lambda, f, g)?;
        let lhs = exp.map.pullback(&star_g.coeffs[1])?;
        let rhs = star_udf(&f_twist, &phi, &exp.map.pullback(f)?, &exp.map.pullback(g)?)?;
        let mut done = 0;
        while done < config.samples.min(20) {
            let asn = Assignment::new()
                .coord(m.gdual.coords[0].clone(), rng.rat_nonzero())
                .coord(m.gdual.coords[1].clone(), rng.rat_nonzero());
            match (lhs.eval(&asn), rhs.coeffs[1].eval(&asn)) {
                (Ok(u), Ok(v)) => {
                    if u != v {
                        sampled_ok = false;
                    }
                    done += 1;
                }
                _ => continue,
            }
        }
    }
    rep.check(
        "Exp morphism identity re-checked at seeded rational points",
        sampled_ok,
        "",
    );

    // classically failing map fails at first order
    let (x, y) = (m.x(), m.y());
    let scaled = ChartMap::new(&m.gstar, &m.gstar, vec![x.clone(), y.scale(&int(2))])
        .with_inverse(vec![x, y.scale(&rat(1, 2))])?;
    let bad = MomentumMap::new("x-2y", scaled);
    let bad_rep = quantum_momentum_check(&bad, &f_twist, &lambda, &lambda, &pairs)?;
    rep.check(
        "classically failing map fails at first order",
        !bad_rep.all_passed()
            && bad_rep.checks[0]
                .details
                .as_ref()
                .map(|d| d.contains("hbar^1"))
                .unwrap_or(false),
        "",
    );

    // deformed comodule diagram and algebra-morphism property
    let coact_gstar = Coaction::new(&m.gstar, &m.s, m.inverse_dressing_action_map());
    let coact_m = coadjoint_coaction(&m)?;
    let samples: Vec<Scalar> = monos.iter().take(4).cloned().collect();
    rep.merge(comodule_check(&coact_m, &coact_gstar, &exp.map, &samples)?);
    let gs = group_side(&m)?;
    let gamma = CocycleGamma::new(f_twist.clone());
    let morphism_pairs: Vec<(Scalar, Scalar)> =
        vec![(m.x(), m.y()), (m.y(), m.x()), (&m.x() * &m.y(), m.y())];
    rep.merge(comodule_algebra_morphism_check(
        &f_twist,
        &lambda,
        &gamma,
        &coact_gstar,
        &gs.outer,
        &gs.inner,
        &gs.pairing_left,
        &gs.pairing_right,
        &morphism_pairs,
        2.min(n),
    )?);
    Ok(rep)
}

// ---------------------------------------------------------------------------
// CLI star calculator.
// ---------------------------------------------------------------------------

fn format_series(s: &crate::uea::HSeries<Scalar>) -> String {
    let mut parts = vec![s.coeffs[0].to_string()];
    for (k, c) in s.coeffs.iter().enumerate().skip(1) {
        if k == 1 {
            parts.push(format!("hbar*({c})"));
        } else {
            parts.push(format!("hbar^{k}*({c})"));
        }
    }
    parts.join(" + ")
}

/// Exact star product of two expressions in one of the supported spaces:
/// `gstar` (dressing action on the dual chart), `gdual-coadjoint` (coadjoint
/// action on the linear dual chart), `group` (quantum-group product on the
/// group chart).
pub fn star_calc(space: &str, f_src: &str, g_src: &str, order: usize) -> Result<String> {
    let m = AxbModel::new();
    let order = order.min(4);
    let n = order.max(1);
    let f_twist = jordanian_twist(&m.algebra, n);
    let parse_on = |chart: &Chart, src: &str| -> Result<Scalar> {
        crate::scalar::parse::parse_scalar(src, &crate::scalar::parse::binding(&chart.coords))
    };
    let series = match space {
        "gstar" => {
            let act = lambda_action(&m)?;
            let f = parse_on(&m.gstar, f_src)?;
            let g = parse_on(&m.gstar, g_src)?;
            star_udf(&f_twist, &act, &f, &g)?
        }
        "gdual-coadjoint" => {
            let (phi, _) = coadjoint_action(&m)?;
            let f = parse_on(&m.gdual, f_src)?;
            let g = parse_on(&m.gdual, g_src)?;
            star_udf(&f_twist, &phi, &f, &g)?
        }
        "group" => {
            let gs = group_side(&m)?;
            let gamma = CocycleGamma::new(f_twist);
            let f = parse_on(&m.s, f_src)?;
            let g = parse_on(&m.s, g_src)?;
            crate::quantize::quantum_group_product(
                &gamma,
                &m.algebra,
                &gs.outer,
                &gs.inner,
                &gs.pairing_left,
                &gs.pairing_right,
                &f,
                &g,
            )?
        }
        other => return Err(Error::UnknownSuite(format!("space `{other}`"))),
    };
    Ok(format_series(&series.truncated(order)))
}
