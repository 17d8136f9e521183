use std::fmt::Write as _;

use genstirling::checks::{self, Identity, IdentityArgs};
use genstirling::family::{family_assoc_lah, family_laguerre, family_u, family_v, FamilyParams};
use genstirling::zeros::{check_newton_logconcave, check_theorem3};
use genstirling::{format_rational, Error, QPolynomial, Rational};
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::args::{Command, FamilyName, Format, Params, VerifyArgs};

pub struct Output {
    pub text: String,
    pub code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Self { text, code: 0 }
    }

    fn checked(text: String, passed: bool) -> Self {
        Self {
            text,
            code: if passed { 0 } else { 3 },
        }
    }
}

pub enum Failure {
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<Output, Failure>;

const LAGUERRE_NOTE: &str = "note: L_n(x) = P_n^(-lambda-1,-1)(x) / n!; the classical Laguerre polynomial is this evaluated at -x";

pub fn run(command: Command) -> Outcome {
    match command {
        Command::Table { params, nmax, format } => table(&params, nmax, format),
        Command::Poly { params, n, format } => poly(&params, n, format),
        Command::Eval { params, n, x, epsilon, format } => eval(&params, n, &x, epsilon, format),
        Command::Zeros { params, nmax, logconcave, format } => zeros(&params, nmax, logconcave, format),
        Command::Verify(args) => verify(&args),
        Command::Family { which, n, lambda, m, format } => family(which, n, lambda, m, format),
    }
}

fn family_params(p: &Params) -> Result<FamilyParams<Rational>, Failure> {
    Ok(FamilyParams::new(p.alpha.clone(), p.beta.clone())?)
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn wire_list(values: &[Rational]) -> Vec<Value> {
    values.iter().map(|v| Value::String(format_rational(v))).collect()
}

fn table(p: &Params, nmax: usize, format: Format) -> Outcome {
    let table = family_params(p)?.table(nmax);
    let text = match format {
        Format::Csv => table.to_csv(),
        Format::Json => json_text(&table.to_json()),
        Format::Pretty => {
            let mut s = String::new();
            for (n, row) in table.rows().iter().enumerate() {
                let cells: Vec<String> = row.iter().map(format_rational).collect();
                writeln!(s, "{n}: {}", cells.join("  ")).unwrap();
            }
            s
        }
    };
    Ok(Output::ok(text))
}

fn polynomial_text(poly: &QPolynomial, format: Format, meta: Value, note: Option<&str>) -> String {
    match format {
        Format::Csv => format!("{}\n", poly.to_wire()),
        Format::Pretty => {
            let mut s = format!("{}\n{}\n", poly.to_wire(), poly.pretty());
            if let Some(note) = note {
                s.push_str(note);
                s.push('\n');
            }
            s
        }
        Format::Json => {
            let mut v = meta;
            v["coefficients"] = Value::Array(wire_list(poly.coeffs()));
            v["pretty"] = Value::String(poly.pretty());
            if let Some(note) = note {
                v["note"] = Value::String(note.to_string());
            }
            json_text(&v)
        }
    }
}

fn poly(p: &Params, n: usize, format: Format) -> Outcome {
    let poly = family_params(p)?.poly(n);
    let meta = json!({
        "alpha": format_rational(&p.alpha),
        "beta": format_rational(&p.beta),
        "n": n,
    });
    Ok(Output::ok(polynomial_text(&poly, format, meta, None)))
}

fn eval(p: &Params, n: usize, x: &Rational, epsilon: f64, format: Format) -> Outcome {
    let params = family_params(p)?;
    let exact = params.poly(n).eval(x);
    let approx = params.eval_dobinski(n, x, epsilon)?;
    let exact_f = exact.to_f64().unwrap_or(f64::NAN);
    let diff = (approx - exact_f).abs();
    let text = match format {
        Format::Csv => format!(
            "n,x,exact,dobinski,abs_diff\n{n},{},{},{approx:e},{diff:e}\n",
            format_rational(x),
            format_rational(&exact)
        ),
        Format::Json => json_text(&json!({
            "alpha": format_rational(&p.alpha),
            "beta": format_rational(&p.beta),
            "n": n,
            "x": format_rational(x),
            "exact": format_rational(&exact),
            "dobinski": approx,
            "abs_diff": diff,
        })),
        Format::Pretty => format!(
            "exact:    {}\ndobinski: {approx:e}\nabs diff: {diff:e}\n",
            format_rational(&exact)
        ),
    };
    Ok(Output::ok(text))
}

fn zeros(p: &Params, nmax: usize, logconcave: bool, format: Format) -> Outcome {
    let params = family_params(p)?;
    let report = check_theorem3(&params, nmax)?;
    let newton: Vec<(usize, bool)> = if logconcave {
        (2..=nmax)
            .map(|n| check_newton_logconcave(&params, n).map(|ok| (n, ok)))
            .collect::<Result<_, _>>()?
    } else {
        Vec::new()
    };
    let passed = report.holds() && newton.iter().all(|(_, ok)| *ok);
    let interval = |(a, b): &(Rational, Rational)| format!("({}, {}]", format_rational(a), format_rational(b));
    let text = match format {
        Format::Json => {
            let mut v = report.to_json();
            if logconcave {
                v["logconcave"] = newton
                    .iter()
                    .map(|(n, ok)| json!({ "n": n, "holds": ok }))
                    .collect();
            }
            json_text(&v)
        }
        Format::Csv => {
            let mut s = String::from("n,all_real,asserted,roots\n");
            for r in &report.results {
                let roots: Vec<String> = r
                    .roots
                    .iter()
                    .map(|(a, b)| format!("{}:{}", format_rational(a), format_rational(b)))
                    .collect();
                writeln!(s, "{},{},{},{}", r.n, r.all_real, r.asserted, roots.join(";")).unwrap();
            }
            s
        }
        Format::Pretty => {
            let mut s = format!("region: {}\n", report.region.as_str());
            for r in &report.results {
                let roots: Vec<String> = r.roots.iter().map(interval).collect();
                writeln!(
                    s,
                    "n={} all_real={} {} roots: {}",
                    r.n,
                    r.all_real,
                    if r.asserted { "asserted" } else { "not asserted" },
                    roots.join(" ")
                )
                .unwrap();
            }
            for (n, ok) in &newton {
                writeln!(s, "newton n={n}: {}", if *ok { "PASS" } else { "FAIL" }).unwrap();
            }
            s
        }
    };
    Ok(Output::checked(text, passed))
}

fn verify(args: &VerifyArgs) -> Outcome {
    if args.all {
        return Ok(verify_all());
    }
    let name = args.identity.as_deref().unwrap_or_default();
    let id = Identity::parse(name).ok_or_else(|| Failure::Usage(format!("unknown identity `{name}`")))?;
    let order = args.order.unwrap_or(args.nmax + 2);
    let pair = |a: &Option<Rational>, b: &Option<Rational>, what: &str| match (a, b) {
        (Some(a), Some(b)) => Ok(Some((a.clone(), b.clone()))),
        (None, None) => Ok(None),
        _ => Err(Failure::Usage(format!("give both {what} or neither"))),
    };
    let base = pair(&args.alpha, &args.beta, "--alpha and --beta")?;
    let second = pair(&args.alpha2, &args.beta2, "--alpha2 and --beta2")?;
    let needs_second = matches!(id, Identity::Composition | Identity::Rebase);

    // Without explicit parameters the identity runs over the acceptance grid.
    let cases: Vec<(Rational, Rational, Rational, Rational)> = match (base, second) {
        (Some((a, b)), Some((a2, b2))) => vec![(a, b, a2, b2)],
        (Some(_), None) if needs_second => {
            return Err(Failure::Usage(format!("{} needs --alpha2 and --beta2", id.name())))
        }
        (Some((a, b)), None) => vec![(a, b, Rational::zero(), -Rational::from_integer(1.into()))],
        (None, _) if needs_second => checks::sampled_pairs()
            .into_iter()
            .map(|(f, t)| (f.alpha().clone(), f.beta().clone(), t.alpha().clone(), t.beta().clone()))
            .collect(),
        (None, _) => checks::grid()
            .into_iter()
            .map(|p| (p.alpha().clone(), p.beta().clone(), Rational::zero(), -Rational::from_integer(1.into())))
            .collect(),
    };

    let mut text = String::new();
    let mut notes: Vec<String> = Vec::new();
    let mut passed = true;
    for (alpha, beta, alpha2, beta2) in cases {
        let run_args = IdentityArgs {
            alpha,
            beta,
            alpha2,
            beta2,
            lambda: args.lambda.clone(),
            r: args.r,
            nmax: args.nmax,
            order,
        };
        checks::validate_identity_args(&run_args)?;
        let run = checks::run_identity(id, &run_args)?;
        for line in &run.lines {
            writeln!(text, "{}", line.render()).unwrap();
        }
        passed &= run.passed();
        for note in run.notes {
            if !notes.contains(&note) {
                notes.push(note);
            }
        }
    }
    for note in notes {
        writeln!(text, "{note}").unwrap();
    }
    Ok(Output::checked(text, passed))
}

fn verify_all() -> Output {
    let results = checks::run_all();
    let mut text = String::new();
    for r in &results {
        writeln!(text, "{}", r.report()).unwrap();
    }
    let passing = results.iter().filter(|r| r.passed).count();
    writeln!(text, "summary: {passing} of {} criteria pass", results.len()).unwrap();
    Output::checked(text, passing == results.len())
}

fn family(which: FamilyName, n: usize, lambda: Option<Rational>, m: Option<usize>, format: Format) -> Outcome {
    let (poly, meta, note) = match which {
        FamilyName::U => (family_u(n), json!({ "family": "U", "n": n }), None),
        FamilyName::V => (family_v(n), json!({ "family": "V", "n": n }), None),
        FamilyName::Laguerre => {
            let lambda = lambda.ok_or_else(|| Failure::Usage("laguerre needs --lambda".into()))?;
            let meta = json!({ "family": "laguerre", "lambda": format_rational(&lambda), "n": n });
            (family_laguerre(&lambda, n), meta, Some(LAGUERRE_NOTE))
        }
        FamilyName::AssocLah => {
            let m = m.ok_or_else(|| Failure::Usage("assoc-lah needs --m".into()))?;
            (family_assoc_lah(m, n)?, json!({ "family": "assoc-lah", "m": m, "n": n }), None)
        }
    };
    Ok(Output::ok(polynomial_text(&poly, format, meta, note)))
}
