//! The means / convexity / trace command runners. Each consumes validated
//! arguments and produces a [`Report`].

use crate::coeffs::format_complex;
use crate::report::{format_sig, Cell, Report};
use gml::convexity::{self, Classification};
use gml::linear_map;
use gml::measure::MeasureSpec;
use gml::trace::{self, LatticeParams, TestFunctionFamily};
use gml::{means, PowerSeriesFunction, QuadratureConfig};
use num_complex::Complex64;

fn cfg() -> QuadratureConfig {
    QuadratureConfig::composite_2d()
}

fn classification_name(c: Classification) -> &'static str {
    match c {
        Classification::Convex => "convex",
        Classification::Concave => "concave",
        Classification::ConvexThenConcave => "convex-then-concave",
        Classification::Degenerate => "degenerate",
        Classification::Indeterminate => "indeterminate",
    }
}

pub struct MeansArgs {
    pub coeffs: Vec<Complex64>,
    pub p: f64,
    pub alpha: f64,
    pub radii: Vec<f64>,
}

/// Per-radius means by every applicable route, the derivative, and the
/// maximum-principle chain.
pub fn run_means(args: &MeansArgs) -> gml::Result<Report> {
    let f = PowerSeriesFunction::new(args.coeffs.clone());
    let mut radii = args.radii.clone();
    radii.sort_by(|a, b| a.partial_cmp(b).expect("finite radii"));
    radii.dedup();
    if radii.is_empty() {
        return Err(gml::Error::Domain("at least one radius is required".into()));
    }

    let mut report = Report::new("means");
    report
        .param(
            "coeffs",
            args.coeffs.iter().map(|&z| format_complex(z)).collect::<Vec<_>>().join(","),
        )
        .param("p", args.p)
        .param("alpha", args.alpha);
    report.columns = vec![
        "r".into(),
        "value_closed_form".into(),
        "value_series".into(),
        "value_quadrature".into(),
        "derivative".into(),
    ];

    let monomial = f.as_monomial();
    for &r in &radii {
        let closed = match monomial {
            Some((k, c)) => Cell::Num(
                c.norm_sqr().powf(0.5 * args.p) * means::means_monomial(k as u32, args.p, args.alpha, r)?,
            ),
            None => Cell::Empty,
        };
        let series = if args.p == 2.0 {
            Cell::Num(means::means_series_p2(&f, args.alpha, r)?)
        } else {
            Cell::Empty
        };
        let quadrature = means::means_generic(&f, args.p, args.alpha, r, &cfg())?;
        let derivative = means::means_derivative(&f, args.p, args.alpha, r, &cfg())?;
        report.rows.push(vec![
            Cell::Num(r),
            closed,
            series,
            Cell::Num(quadrature),
            Cell::Num(derivative),
        ]);
    }

    let chain = means::maximum_principle_check(&f, args.p, args.alpha, &radii, &cfg())?;
    report.note(format!("maximum principle lower bound |f(0)|^p = {}", format_sig(chain.lower_bound)));
    if let Some(upper) = chain.upper_bound {
        report.note(format!("maximum principle upper bound M(inf) = {}", format_sig(upper)));
    }
    if chain.passed() {
        report.note("maximum principle chain: monotone within slack");
    } else {
        for v in &chain.violations {
            report.note(format!("VIOLATION: {v}"));
        }
    }
    Ok(report)
}

pub enum ConvexityArgs {
    Classify { k: u32, p: f64, alpha: f64, x_max: f64 },
    RemarkG0,
    RemarkLinear { c: f64, x_max: f64 },
}

/// Convexity classification with transitions in x = r² and r, the limit
/// indicator root, or the linear-map analysis.
pub fn run_convexity(args: &ConvexityArgs) -> gml::Result<Report> {
    let mut report = Report::new("convexity");
    match *args {
        ConvexityArgs::Classify { k, p, alpha, x_max } => {
            report.param("k", k).param("p", p).param("alpha", alpha).param("x_max", x_max);
            report.columns = vec![
                "transition_x0".into(),
                "transition_r".into(),
                "bracket_lo".into(),
                "bracket_hi".into(),
            ];
            let result = convexity::classify_monomial_means(k, p, alpha, x_max, &cfg())?;
            for t in &result.transitions {
                report.rows.push(vec![
                    Cell::Num(t.x0),
                    Cell::Num(t.x0.sqrt()),
                    Cell::Num(t.bracket.0),
                    Cell::Num(t.bracket.1),
                ]);
            }
            report.note(format!("classification: {}", classification_name(result.classification)));
            if alpha < 0.0 && k > 0 {
                let c_bound = convexity::corollary_c_bound(k, p, alpha)?;
                report.note(format!("guaranteed convexity radius c = {}", format_sig(c_bound)));
            }
            if let Some(bound) = result.corollary_bound_x {
                report.note(format!("proof lower bound for x0: {}", format_sig(bound)));
            }
            if let Some(note) = &result.note {
                report.note(note.clone());
            }
            let profile: Vec<String> = result
                .sign_profile
                .iter()
                .map(|seg| {
                    format!(
                        "[{}, {}] {}",
                        format_sig(seg.x_lo),
                        format_sig(seg.x_hi),
                        match seg.sign {
                            convexity::SignClass::Positive => "+",
                            convexity::SignClass::Negative => "-",
                            convexity::SignClass::Zero => "0",
                        }
                    )
                })
                .collect();
            report.note(format!("sign profile in x: {}", profile.join(" | ")));
        }
        ConvexityArgs::RemarkG0 => {
            report.param("mode", "limit-indicator-root");
            report.columns = vec!["root".into(), "bracket_lo".into(), "bracket_hi".into()];
            let root = linear_map::limit_indicator_root()?;
            report.rows.push(vec![
                Cell::Num(root.root),
                Cell::Num(root.bracket.0),
                Cell::Num(root.bracket.1),
            ]);
            report.note("unique positive root of the limit indicator; concavity of the linear-map means is guaranteed on (sqrt(root), inf) for every |a|");
        }
        ConvexityArgs::RemarkLinear { c, x_max } => {
            report.param("c", c).param("x_max", x_max);
            report.columns = vec![
                "c".into(),
                "curvature_at_zero".into(),
                "transition_x0".into(),
                "transition_r".into(),
            ];
            let analysis = linear_map::analyze(c, x_max)?;
            let (x0, r0) = match &analysis.transition {
                Some(t) => (Cell::Num(t.root), Cell::Num(t.root.sqrt())),
                None => (Cell::Empty, Cell::Empty),
            };
            report.rows.push(vec![Cell::Num(c), Cell::Num(analysis.curvature_at_zero), x0, r0]);
            report.note(format!("classification: {}", classification_name(analysis.classification)));
            report.note(format!(
                "curvature nonincreasing: {}; slope limit ok: {}; indicator sign agreement: {}",
                analysis.curvature_nonincreasing, analysis.slope_limit_ok, analysis.indicator_sign_agrees
            ));
            if let Some(concave) = analysis.concave_everywhere {
                report.note(format!("concave on the whole sampled range: {concave}"));
            }
        }
    }
    Ok(report)
}

pub struct TraceArgs {
    pub measure: MeasureSpec,
    pub measure_name: String,
    pub p: f64,
    pub q: f64,
    pub m: u32,
    pub r: f64,
    pub s: Option<f64>,
    pub r_trunc: Option<f64>,
    pub max_degree: u32,
}

/// Ball-mass statistics, the boundedness verdict, and trace ratios over the
/// monomial and kernel families.
pub fn run_trace(args: &TraceArgs) -> gml::Result<Report> {
    let s = args.s.unwrap_or(0.5 * args.r);
    let r_trunc = args.r_trunc.unwrap_or(10.0 * args.r.max(1.0));
    let lat = LatticeParams::new(s, args.r, r_trunc, args.p, args.q, args.m)?;

    let mut report = Report::new("trace");
    report
        .param("measure", &args.measure_name)
        .param("p", args.p)
        .param("q", args.q)
        .param("m", args.m)
        .param("r", args.r)
        .param("s", s)
        .param("r_trunc", r_trunc);
    report.columns = vec!["quantity".into(), "value".into(), "detail".into()];

    let sup = trace::carleson_sup_statistic(&args.measure, &lat, &cfg())?;
    report.rows.push(vec![
        "sup_statistic".into(),
        Cell::Num(sup.sup),
        format!(
            "argmax = ({}, {}), centers = {}",
            format_sig(sup.argmax.0),
            format_sig(sup.argmax.1),
            sup.centers_evaluated
        )
        .into(),
    ]);
    report.rows.push(vec![
        "edge_growth_ratio".into(),
        Cell::Num(sup.edge_growth_ratio),
        if sup.unbounded_suspected { "growing at truncation edge" } else { "settled" }.into(),
    ]);
    if sup.truncation_warning {
        report.note("WARNING: measure support extends beyond the truncation radius");
    }

    let verdict = if args.p <= args.q {
        if sup.unbounded_suspected {
            "unbounded (sup condition fails)"
        } else {
            "bounded (sup condition holds on the sampled lattice)"
        }
    } else {
        let sum = trace::carleson_sum_statistic(&args.measure, &lat, &cfg())?;
        report.rows.push(vec![
            "sum_statistic".into(),
            Cell::Num(sum.sum),
            format!(
                "exponent = {}, nonzero terms = {}, tail = {:?}",
                format_sig(sum.exponent),
                sum.nonzero_terms,
                sum.tail
            )
            .into(),
        ]);
        if sum.divergent_suspected {
            "unbounded (lattice sum diverges)"
        } else {
            "bounded (lattice sum converges on the sampled window)"
        }
    };

    let monomials = trace::trace_ratio_family(
        &TestFunctionFamily::Monomials { max_degree: args.max_degree },
        &args.measure,
        args.p,
        args.q,
        args.m,
        &cfg(),
    )?;
    report.rows.push(vec![
        "monomial_family_max_ratio".into(),
        Cell::Num(monomials.max_ratio),
        format!("argmax = {}", monomials.argmax).into(),
    ]);
    let kernel_points: Vec<Complex64> = [0.0, 2.0, 4.0, 6.0]
        .iter()
        .filter(|&&t| t <= r_trunc)
        .map(|&t| Complex64::new(t, 0.0))
        .collect();
    let kernels = trace::trace_ratio_family(
        &TestFunctionFamily::Kernels { points: kernel_points },
        &args.measure,
        args.p,
        args.q,
        args.m,
        &cfg(),
    )?;
    for e in &kernels.entries {
        report.rows.push(vec![
            format!("kernel_ratio {}", e.label).into(),
            Cell::Num(e.ratio),
            Cell::Empty,
        ]);
    }
    report.note(format!("verdict: {verdict}"));
    Ok(report)
}
