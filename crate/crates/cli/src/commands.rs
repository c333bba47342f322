//! Command implementations: each builds the `results` payload of the
//! envelope and reports the process exit code.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use genbell_core::genbell::{genbell_via_definition, genbell_via_recurrence, genbell_via_rho};
use genbell_core::laguerre::{
    laguerre_phi_sequence, multiple_laguerre, orthogonality_table, AlphaVector, MultiIndex,
};
use genbell_core::phi::PhiSequence;
use genbell_core::poly::ExactPoly;
use genbell_core::rational::{format_rational, parse_rational, Rational};
use genbell_core::roots::{
    isolate_roots, leftmost_strictly_less, leftmost_zero_bounds, LeftmostBounds, RootIsolation,
    RootLoc, REFINEMENT_BUDGET,
};
use genbell_core::stirling::bell_poly;
use genbell_core::verify::{
    default_perturbations, default_probes, explore_conjecture, explore_shift_interlacing,
    nonneg_trials, one_negative_trials, verify_finite_support, verify_monotonicity,
    verify_negative_pair, verify_nonneg_theorem, verify_one_negative, verify_zero_multiplicity,
    VerificationReport,
};

/// User-facing failures map to exit 2 (internal invariant breaks exit with
/// code 3 through the command's returned status).
#[derive(Debug)]
pub enum CmdError {
    User(String),
}

impl From<genbell_core::Error> for CmdError {
    fn from(e: genbell_core::Error) -> Self {
        CmdError::User(e.to_string())
    }
}

pub type CmdResult = Result<(Value, i32), CmdError>;

fn coeff_strings(p: &ExactPoly) -> Vec<Value> {
    let d = match p.degree() {
        None => return vec![Value::String("0".into())],
        Some(d) => d,
    };
    (0..=d)
        .map(|j| Value::String(format_rational(&p.coeff(j))))
        .collect()
}

// intervals serialize as [lo, hi] rational-string pairs; exact roots as a
// single string with a point marker
fn root_value(loc: &RootLoc) -> Value {
    match loc {
        RootLoc::Point { value, multiplicity } => json!({
            "value": format_rational(value),
            "point": true,
            "multiplicity": multiplicity,
        }),
        RootLoc::Interval { lo, hi, multiplicity } => json!({
            "interval": [format_rational(lo), format_rational(hi)],
            "multiplicity": multiplicity,
        }),
    }
}

pub fn cmd_construct(phi: &PhiSequence, n: usize, route: &str) -> CmdResult {
    let mut routes = Vec::new();
    let mut computed: Vec<ExactPoly> = Vec::new();
    let selected: Vec<&str> = match route {
        "all" => vec!["definition", "recurrence", "rho"],
        one => vec![one],
    };
    for name in &selected {
        let p = match *name {
            "definition" => genbell_via_definition(phi, n),
            "recurrence" => genbell_via_recurrence(phi, n),
            "rho" => genbell_via_rho(phi, n),
            other => return Err(CmdError::User(format!("unknown route `{other}`"))),
        };
        routes.push(json!({ "route": name, "coefficients": coeff_strings(&p) }));
        computed.push(p);
    }
    let mut results = json!({ "n": n, "routes": routes });
    let mut code = 0;
    if route == "all" {
        let agree = computed.windows(2).all(|w| w[0] == w[1]);
        results["agree"] = Value::Bool(agree);
        if !agree {
            code = 3; // construction routes must agree; disagreement is a bug
        }
    }
    Ok((results, code))
}

pub fn cmd_roots(phi: &PhiSequence, n: usize, width: &Rational) -> CmdResult {
    if n == 0 {
        return Err(CmdError::User("roots requires n >= 1".into()));
    }
    let p = genbell_via_recurrence(phi, n);
    let mut iso = isolate_roots(&p, width)?;
    let counts = iso.sign_counts();
    let roots: Vec<Value> = iso.roots().iter().map(root_value).collect();
    let mut results = json!({
        "degree": n,
        "roots": roots,
        "counts": {
            "negative": counts.negative,
            "zero_multiplicity": counts.zero_multiplicity,
            "positive": counts.positive,
            "nonreal": iso.nonreal_count(),
        },
        "simple": iso.is_all_simple(),
    });

    // Corollary-style leftmost-zero bounds for nonnegative sequences
    if phi.is_nonneg() {
        let bounds = leftmost_zero_bounds(phi, n, width)?;
        results["bounds"] = bound_status(&p, n, &mut iso, bounds);
    }
    Ok((results, 0))
}

fn bound_status(p: &ExactPoly, n: usize, iso: &mut RootIsolation, bounds: LeftmostBounds) -> Value {
    let lower = &bounds.lower;
    let mut classical = bounds.classical;

    // strict lower bound: refine the leftmost root until decisive
    let mut lower_status = "undecided";
    for step in 0..=REFINEMENT_BUDGET {
        match iso.leftmost().expect("n >= 1 so a root exists") {
            RootLoc::Point { value, .. } => {
                lower_status = if &value > lower { "verified" } else { "failed" };
                break;
            }
            RootLoc::Interval { lo, hi, .. } => {
                if &lo >= lower {
                    lower_status = "verified"; // root > lo >= lower
                    break;
                }
                if &hi <= lower {
                    lower_status = "failed";
                    break;
                }
            }
        }
        if step == REFINEMENT_BUDGET {
            break;
        }
        iso.refine_entry(0, 1);
    }

    // upper reference: the leftmost classical zero; equal polynomials reach it
    let upper_status = if *p == bell_poly(n) {
        "verified (equal polynomials)".to_string()
    } else {
        match leftmost_strictly_less(iso, &mut classical, REFINEMENT_BUDGET) {
            Err(e) => format!("undecided: {e}"),
            Ok(true) => "verified".to_string(),
            Ok(false) => "failed".to_string(),
        }
    };

    json!({
        "alpha_n": format_rational(&bounds.alpha_n),
        "lower": format_rational(lower),
        "classical_leftmost": root_value(&classical.leftmost().unwrap()),
        "lower_status": lower_status,
        "upper_status": upper_status,
    })
}

pub struct VerifyArgs {
    pub suite: String,
    pub phi: Option<PhiSequence>,
    pub psi: Option<PhiSequence>,
    pub n: Option<usize>,
    pub n_max: Option<usize>,
    pub n_lo: Option<usize>,
    pub n_hi: Option<usize>,
    pub trials: Option<usize>,
    pub s: Option<String>,
    pub gamma: Option<String>,
    pub m: Option<usize>,
    pub seed: u64,
    pub width: Rational,
}

fn require<T>(v: Option<T>, what: &str, suite: &str) -> Result<T, CmdError> {
    v.ok_or_else(|| CmdError::User(format!("suite `{suite}` requires --{what}")))
}

pub fn cmd_verify(args: &VerifyArgs) -> CmdResult {
    let width = &args.width;
    let report: VerificationReport = match args.suite.as_str() {
        "nonneg" => match &args.phi {
            Some(phi) => {
                let n_max = args.n_max.unwrap_or(10);
                let probes = default_probes(phi);
                let perts = default_perturbations(phi);
                let mut r = verify_nonneg_theorem(phi, n_max, &probes, &perts, width)?;
                r.seed = args.seed;
                r
            }
            None => nonneg_trials(
                args.trials.unwrap_or(20),
                args.n_max.unwrap_or(10),
                args.seed,
                width,
            )?,
        },
        "monotonicity" => {
            let phi = require(args.phi.clone(), "phi", "monotonicity")?;
            let psi = require(args.psi.clone(), "psi", "monotonicity")?;
            let n = require(args.n, "n", "monotonicity")?;
            verify_monotonicity(&phi, &psi, n, width)?
        }
        "one-negative" => match &args.phi {
            Some(phi) => verify_one_negative(phi, args.n_max.unwrap_or(10), width)?,
            None => one_negative_trials(
                args.trials.unwrap_or(20),
                args.n_max.unwrap_or(10),
                args.seed,
                width,
            )?,
        },
        "finite-support" => {
            let phi = require(args.phi.clone(), "phi", "finite-support")?;
            let n_lo = args.n_lo.unwrap_or(1);
            let n_hi = args.n_hi.unwrap_or(30);
            if n_lo > n_hi {
                return Err(CmdError::User(format!(
                    "empty scan window: --n-lo {n_lo} exceeds --n-hi {n_hi}"
                )));
            }
            verify_finite_support(&phi, n_lo, n_hi, width)?
        }
        "zero-mult" => {
            let phi = require(args.phi.clone(), "phi", "zero-mult")?;
            let n = require(args.n, "n", "zero-mult")?;
            verify_zero_multiplicity(&phi, n)?
        }
        "negative-pair" => {
            let m = require(args.m, "m", "negative-pair")?;
            verify_negative_pair(m, args.n_max.unwrap_or(12), width)?
        }
        "shift" => {
            let phi = require(args.phi.clone(), "phi", "shift")?;
            let s_text = require(args.s.clone(), "s", "shift")?;
            let s = parse_rational(&s_text).map_err(|e| CmdError::User(e.to_string()))?;
            explore_shift_interlacing(&phi, &s, args.n_max.unwrap_or(12), width)?
        }
        "conjecture" => {
            let gamma_text = require(args.gamma.clone(), "gamma", "conjecture")?;
            let gamma: Vec<Rational> = gamma_text
                .split(',')
                .map(|t| parse_rational(t).map_err(|e| CmdError::User(e.to_string())))
                .collect::<Result<_, _>>()?;
            let n_max = args.n_max.unwrap_or(40);
            if n_max + 1 < gamma.len() {
                return Err(CmdError::User(format!(
                    "--n-max {n_max} is below the combination length K = {}",
                    gamma.len() - 1
                )));
            }
            explore_conjecture(&gamma, n_max, width)?
        }
        other => {
            return Err(CmdError::User(format!(
                "unknown suite `{other}` (expected nonneg, monotonicity, one-negative, \
                 finite-support, zero-mult, negative-pair, shift, or conjecture)"
            )))
        }
    };
    let code = if report.overall_pass() { 0 } else { 1 };
    let results = json!({
        "width": format_rational(width),
        "report": serde_json::to_value(&report).expect("report serializes"),
    });
    Ok((results, code))
}

pub fn cmd_laguerre(alpha_text: &str, nvec_text: &str, check_orth: bool) -> CmdResult {
    let alphas: Vec<Rational> = alpha_text
        .split(',')
        .map(|t| parse_rational(t).map_err(|e| CmdError::User(e.to_string())))
        .collect::<Result<_, _>>()?;
    let parts: Vec<usize> = nvec_text
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| CmdError::User(format!("invalid multi-index part `{t}`")))
        })
        .collect::<Result<_, _>>()?;
    let alpha = AlphaVector::new(alphas);
    let nvec = MultiIndex::new(parts)?;
    let phi = laguerre_phi_sequence(&alpha, &nvec)?;
    let poly = multiple_laguerre(&alpha, &nvec)?;

    let mut results = json!({
        "total_degree": nvec.total(),
        "phi_prefix": phi.prefix().iter().map(|v| Value::String(format_rational(v))).collect::<Vec<_>>(),
        "coefficients": coeff_strings(&poly),
        "integer_difference_warning": alpha.has_integer_differences(),
    });
    if check_orth {
        // divergent weights are rejected before any integral interpretation
        for (idx, a) in alpha.values().iter().enumerate() {
            if *a <= -Rational::from_integer(1.into()) {
                return Err(CmdError::User(
                    genbell_core::Error::DivergentWeight {
                        index: idx + 1,
                        value: format_rational(a),
                    }
                    .to_string(),
                ));
            }
        }
        let table = orthogonality_table(&alpha, &nvec)?;
        let all = table.iter().all(|(_, _, ok)| *ok);
        results["orthogonality"] = Value::Array(
            table
                .into_iter()
                .map(|(j, k, holds)| json!({ "j": j, "k": k, "holds": holds }))
                .collect(),
        );
        results["orthogonal"] = Value::Bool(all);
    }
    Ok((results, 0))
}

/// Echoed-inputs map shared by main.
pub fn echo(pairs: &[(&str, Option<String>)]) -> BTreeMap<String, String> {
    pairs
        .iter()
        .filter_map(|(k, v)| v.clone().map(|v| (k.to_string(), v)))
        .collect()
}
