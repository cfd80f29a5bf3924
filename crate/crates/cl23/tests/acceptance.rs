//! Acceptance gate: every release criterion with its pinned tolerance, one
//! pass/fail line each. Run with `cargo test --test acceptance -- --nocapture`
//! to see the lines on success.

use std::collections::BTreeMap;

use cl23::verify::{run_all, Check, Config};

struct Criterion {
    id: &'static str,
    description: &'static str,
    check_ids: &'static [&'static str],
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        id: "AC1",
        description: "signature: 25 generator products and 32-blade orthonormality, exact",
        check_ids: &["algebra/signature-products", "algebra/basis-orthonormality"],
    },
    Criterion {
        id: "AC2",
        description: "pseudoscalar: I^2 = -1, centrality, hermite and reversal signs, exact",
        check_ids: &[
            "algebra/pseudoscalar-square",
            "algebra/pseudoscalar-central",
            "algebra/pseudoscalar-hermite",
            "algebra/pseudoscalar-reverse",
        ],
    },
    Criterion {
        id: "AC3",
        description: "oracle equivalence: product matches the regular representation on 1000 pairs < 1e-12",
        check_ids: &["algebra/oracle-gp-agreement", "algebra/oracle-homomorphism"],
    },
    Criterion {
        id: "AC4",
        description: "Lorentz: closed forms vs exponentials < 1e-10, unitarity, hermite identity, metric preservation < 1e-12, 3/5 boost fixture",
        check_ids: &[
            "lorentz/rotor-closed-form",
            "lorentz/boost-closed-form",
            "lorentz/unitarity",
            "lorentz/hermite-conjugate-identity",
            "lorentz/metric-preservation",
            "lorentz/boost-fixture-three-fifths",
        ],
    },
    Criterion {
        id: "AC5",
        description: "generator algebra: 27 so(3,1) commutators and split su(2) relations with parity swap, exact",
        check_ids: &["lorentz/so31-commutators", "lorentz/su2-relations"],
    },
    Criterion {
        id: "AC6",
        description: "spinor ideal: action homomorphism on 500 triples < 1e-12, eigenstructure, Lorentz closure",
        check_ids: &["spinor/action-homomorphism", "spinor/eigenstructure", "spinor/lorentz-closure"],
    },
    Criterion {
        id: "AC7",
        description: "free solutions: residuals < 1e-11 on 200 states, (1, 0, 1/3, 0) fixture, boost covariance < 1e-10, rest frame",
        check_ids: &[
            "dirac/free-residual-random",
            "dirac/fixture-components",
            "dirac/boosted-covariance",
            "dirac/rest-frame-chi",
        ],
    },
    Criterion {
        id: "AC8",
        description: "bilinears: two-path agreement < 1e-11 on 200 pairs, j0 >= 0, Lorentz behavior, exact conservation with failing control",
        check_ids: &[
            "bilinears/two-path-agreement",
            "bilinears/density-positive",
            "bilinears/scalar-invariance",
            "bilinears/pseudoscalar-invariance",
            "bilinears/current-norm-invariance",
            "bilinears/conservation-two-wave",
            "bilinears/conservation-negative-control",
        ],
    },
    Criterion {
        id: "AC9",
        description: "squared equation: identically zero residual for magnetic, electric, and plane-wave potentials",
        check_ids: &[
            "pauli/squared-identity-magnetic",
            "pauli/squared-identity-electric",
            "pauli/squared-identity-plane-wave",
        ],
    },
    Criterion {
        id: "AC10",
        description: "Pauli: Zeeman splitting equals hbar e B / m < 1e-12 and g = 2",
        check_ids: &["pauli/zeeman-splitting", "pauli/g-factor"],
    },
    Criterion {
        id: "AC11",
        description: "symmetries: charge-conjugation forms, T-orthogonality < 1e-12, spin swap, Lagrangian invariances",
        check_ids: &[
            "symmetries/charge-conj-forms",
            "symmetries/t-orthogonality",
            "symmetries/spin-swap-tables",
            "symmetries/lagrangian-on-shell",
            "symmetries/lagrangian-cpt",
            "symmetries/lagrangian-lorentz",
        ],
    },
    Criterion {
        id: "AC12",
        description: "position-momentum commutator identity exact on all monomials of degree <= 2",
        check_ids: &["pauli/xp-commutator-wedge", "pauli/xp-commutator-generators"],
    },
];

#[test]
fn acceptance() {
    let cfg = Config { seed: 2023, tol_override: None };
    let reports = run_all(&cfg);
    let mut checks: BTreeMap<String, Check> = BTreeMap::new();
    for r in reports {
        for c in r.checks {
            checks.insert(c.id.clone(), c);
        }
    }

    let mut failures = Vec::new();
    for criterion in CRITERIA {
        let mut passed = true;
        let mut worst: f64 = 0.0;
        let mut tightest: f64 = f64::INFINITY;
        for id in criterion.check_ids {
            let check = checks
                .get(*id)
                .unwrap_or_else(|| panic!("{}: missing check {id}", criterion.id));
            passed &= check.passed;
            // negative controls pass by exceeding a floor; their residual is
            // not an accuracy figure
            if !id.ends_with("negative-control") {
                worst = worst.max(check.max_residual);
                tightest = tightest.min(check.tolerance);
            }
        }
        println!(
            "[{}] {:<5} max residual {:>10.3e} (tightest tol {:.1e})  {}",
            if passed { "PASS" } else { "FAIL" },
            criterion.id,
            worst,
            tightest,
            criterion.description
        );
        if !passed {
            failures.push(criterion.id);
        }
    }

    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
