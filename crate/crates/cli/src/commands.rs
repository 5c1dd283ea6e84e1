//! One function per subcommand, each producing a [`Report`].

use num_traits::One;
use rand::distr::{weighted::WeightedIndex, Distribution};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use salem_core::analysis::{
    cylinder_image, derivative_estimate, integral_closed_form, integral_riemann, integral_series,
    jump_at,
};
use salem_core::fractal::{
    graph_dimension_estimate, ifs_graph_points, moran_dimension, MoranSpec, IFS_BUDGET,
};
use salem_core::{
    classify, cylinder_bounds, eval_g, eval_p, expand, expand_exact, ratio_ln, ratio_to_f64,
    BarredSystem, Digit, DigitSeq, Error, PointClass, ProbVector, Rational, Tail,
};

use crate::report::{exact, ExactValue, Interval, Report};
use crate::{CliError, SystemConfig};

/// Orbit steps allowed when looking for an exact expansion.
const EXACT_STEPS: usize = 4096;

fn digit_string(digits: &[Digit], q: u32) -> String {
    let sep = if q > 10 { "," } else { "" };
    digits
        .iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

fn class_name(class: &PointClass) -> &'static str {
    match class {
        PointClass::PRational => "PRational",
        PointClass::PIrrational => "PIrrational",
        PointClass::Undetermined { .. } => "Undetermined",
    }
}

fn f64_string(x: f64) -> String {
    format!("{x}")
}

#[derive(Serialize)]
struct Convert {
    x: ExactValue,
    q: u32,
    digits: String,
    tail: &'static str,
    tail_block: Vec<Digit>,
    residual: Option<ExactValue>,
    classification: &'static str,
    exact_expansion: Option<String>,
    cylinder: Interval,
}

/// Digits of `x` to `depth` places, its classification and cylinder.
pub fn convert(cfg: &SystemConfig, x: &Rational, depth: usize) -> Result<Report, CliError> {
    let pv = cfg.prob_vector()?;
    let expansion = expand(x, &pv, depth)?;
    let class = classify(x, &pv, depth.max(EXACT_STEPS))?;
    let exact_expansion = expand_exact(x, &pv, depth.max(EXACT_STEPS))?.map(|d| d.to_string());
    let d = &expansion.digits;
    let tail = match (d.tail(), &expansion.residual) {
        (_, Some(_)) => "truncated",
        (Tail::Zero, None) => "zero",
        (Tail::Max, None) => "max",
        (Tail::Periodic(_), None) => "periodic",
    };
    let enclosure = cylinder_bounds(d.prefix(), &pv)?;
    let enclosure = salem_core::Enclosure::new(enclosure.lo().clone(), enclosure.hi().clone());
    let report = Convert {
        x: x.into(),
        q: pv.q(),
        digits: digit_string(d.prefix(), pv.q()),
        tail,
        tail_block: d.tail_block(),
        residual: expansion.residual.as_ref().map(ExactValue::from),
        classification: class_name(&class),
        exact_expansion,
        cylinder: (&enclosure).into(),
    };
    let row = vec![
        exact(x),
        report.digits.clone(),
        tail.into(),
        report.classification.into(),
        report.exact_expansion.clone().unwrap_or_default(),
        exact(enclosure.lo()),
        exact(enclosure.hi()),
    ];
    let headers = vec![
        "x",
        "digits",
        "tail",
        "classification",
        "exact_expansion",
        "cylinder_lo",
        "cylinder_hi",
    ];
    Ok(Report::new(report, headers, vec![row]))
}

#[derive(Serialize)]
struct EvalG {
    x: ExactValue,
    flips: String,
    digits: String,
    exact: bool,
    value: Interval,
}

/// `g(x)`: exact when `x` has an eventually periodic expansion, otherwise
/// the image of its rank-`depth` cylinder.
pub fn eval_g_cmd(cfg: &SystemConfig, x: &Rational, depth: usize) -> Result<Report, CliError> {
    let sys = cfg.system()?;
    let pv = sys.pv();
    let (digits, value) = match expand_exact(x, pv, depth.max(EXACT_STEPS))? {
        Some(d) => {
            let e = eval_g(&d, &sys, d.prefix_len())?;
            (d.to_string(), e)
        }
        None => {
            let e = expand(x, pv, depth)?;
            let shown = format!("{}...", digit_string(e.digits.prefix(), pv.q()));
            (shown, cylinder_image(e.digits.prefix(), &sys)?)
        }
    };
    let report = EvalG {
        x: x.into(),
        flips: sys.flips().to_string(),
        digits: digits.clone(),
        exact: value.is_exact(),
        value: (&value).into(),
    };
    let row = vec![
        exact(x),
        digits,
        exact(value.lo()),
        exact(value.hi()),
        f64_string(ratio_to_f64(value.lo())),
        f64_string(ratio_to_f64(value.hi())),
    ];
    let headers = vec!["x", "digits", "lo", "hi", "lo_float", "hi_float"];
    Ok(Report::new(report, headers, vec![row]))
}

#[derive(Serialize)]
struct Riemann {
    rank: usize,
    #[serde(flatten)]
    value: Interval,
}

#[derive(Serialize)]
struct Integral {
    #[serde(skip_serializing_if = "Option::is_none")]
    closed_form: Option<ExactValue>,
    series: Interval,
    riemann: Riemann,
}

/// Largest rank whose cylinder count stays below `2^16`.
pub fn default_riemann_rank(q: u32) -> usize {
    let mut rank = 1;
    while (q as u64).pow(rank as u32 + 1) <= 1 << 16 {
        rank += 1;
    }
    rank
}

/// The closed form (when defined), series and Riemann enclosures of `∫ g`.
pub fn integral(
    cfg: &SystemConfig,
    tol: &Rational,
    rank: Option<usize>,
) -> Result<Report, CliError> {
    let sys = cfg.system()?;
    let closed = match integral_closed_form(&sys) {
        Ok(v) => Some(v),
        Err(Error::NotShiftInvariant) => None,
        Err(e) => return Err(e.into()),
    };
    let series = integral_series(&sys, tol)?;
    let rank = rank.unwrap_or_else(|| default_riemann_rank(sys.q()));
    let riemann = integral_riemann(&sys, rank)?;
    let mut rows = Vec::new();
    if let Some(c) = &closed {
        rows.push(vec![
            "closed_form".into(),
            exact(c),
            exact(c),
            f64_string(ratio_to_f64(c)),
        ]);
    }
    for (name, e) in [("series", &series), ("riemann", &riemann)] {
        let mid = ratio_to_f64(&e.midpoint());
        rows.push(vec![
            name.into(),
            exact(e.lo()),
            exact(e.hi()),
            f64_string(mid),
        ]);
    }
    let report = Integral {
        closed_form: closed.as_ref().map(ExactValue::from),
        series: (&series).into(),
        riemann: Riemann {
            rank,
            value: (&riemann).into(),
        },
    };
    Ok(Report::new(
        report,
        vec!["method", "lo", "hi", "float"],
        rows,
    ))
}

/// The first `count` P-rationals in `(0, 1)`, by rank and then
/// lexicographically by base.
pub fn p_rationals(pv: &ProbVector, count: usize) -> Vec<(usize, Rational)> {
    let q = pv.q();
    let mut out = Vec::with_capacity(count);
    let mut level: Vec<Vec<Digit>> = vec![vec![]];
    let mut rank = 0;
    while out.len() < count {
        rank += 1;
        level = level
            .iter()
            .flat_map(|b| {
                (0..q).map(move |c| {
                    let mut next = b.clone();
                    next.push(c);
                    next
                })
            })
            .collect();
        for base in level.iter().filter(|b| *b.last().unwrap() != 0) {
            if out.len() == count {
                break;
            }
            let d = DigitSeq::zero_tail(q, base.clone()).expect("digits below q");
            out.push((rank, eval_p(&d, pv).expect("base matches vector")));
        }
    }
    out
}

#[derive(Serialize)]
struct Jump {
    rank: usize,
    point: ExactValue,
    left_limit: ExactValue,
    right_limit: ExactValue,
    jump: ExactValue,
}

/// One-sided limits and jumps at the first `count` P-rationals.
pub fn jumps(cfg: &SystemConfig, count: usize, depth: usize) -> Result<Report, CliError> {
    let sys = cfg.system()?;
    let mut items = Vec::new();
    let mut rows = Vec::new();
    for (rank, x) in p_rationals(sys.pv(), count) {
        let r = jump_at(&x, &sys, depth.max(rank + 1))?;
        rows.push(vec![
            rank.to_string(),
            exact(&r.point),
            exact(&r.left_limit),
            exact(&r.right_limit),
            exact(&r.jump),
            f64_string(ratio_to_f64(&r.point)),
            f64_string(ratio_to_f64(&r.jump)),
        ]);
        items.push(Jump {
            rank,
            point: (&r.point).into(),
            left_limit: (&r.left_limit).into(),
            right_limit: (&r.right_limit).into(),
            jump: (&r.jump).into(),
        });
    }
    let headers = vec![
        "rank",
        "point",
        "left_limit",
        "right_limit",
        "jump",
        "point_float",
        "jump_float",
    ];
    Ok(Report::new(items, headers, rows))
}

#[derive(Serialize)]
struct Point {
    x: f64,
    y: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    x_exact: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    y_exact: Option<String>,
}

#[derive(Serialize)]
struct Graph {
    method: &'static str,
    depth: usize,
    points: Vec<Point>,
}

/// Points of the graph of `g` over the rank-`depth` cylinder endpoints.
///
/// Shift-invariant flip sets use the affine maps of the graph; other flip
/// sets evaluate `g` at every endpoint directly.
pub fn graph(cfg: &SystemConfig, depth: usize, with_exact: bool) -> Result<Report, CliError> {
    let sys = cfg.system()?;
    let (method, points) = if sys.flips().is_shift_invariant() {
        ("ifs", ifs_graph_points(&sys, depth)?)
    } else {
        ("cylinder-endpoints", endpoint_points(&sys, depth)?)
    };
    let points: Vec<Point> = points
        .iter()
        .map(|(x, y)| Point {
            x: ratio_to_f64(x),
            y: ratio_to_f64(y),
            x_exact: with_exact.then(|| exact(x)),
            y_exact: with_exact.then(|| exact(y)),
        })
        .collect();
    let mut headers = vec!["x", "y"];
    if with_exact {
        headers.extend(["x_exact", "y_exact"]);
    }
    let rows = points
        .iter()
        .map(|p| {
            let mut row = vec![f64_string(p.x), f64_string(p.y)];
            row.extend(p.x_exact.clone());
            row.extend(p.y_exact.clone());
            row
        })
        .collect();
    Ok(Report::new(
        Graph {
            method,
            depth,
            points,
        },
        headers,
        rows,
    ))
}

fn endpoint_points(
    sys: &BarredSystem,
    depth: usize,
) -> Result<Vec<(Rational, Rational)>, CliError> {
    let q = sys.q();
    let count = (q as u128).checked_pow(depth as u32).unwrap_or(u128::MAX);
    if count > IFS_BUDGET {
        return Err(Error::BudgetExceeded {
            count,
            budget: IFS_BUDGET,
        }
        .into());
    }
    let mut out = Vec::with_capacity(count as usize);
    let mut base = vec![0; depth];
    loop {
        let d = DigitSeq::zero_tail(q, base.clone())?;
        let x = eval_p(&d, sys.pv())?;
        let y = eval_g(&d, sys, depth)?.lo().clone();
        out.push((x, y));
        // next base in lexicographic order
        let Some(k) = base.iter().rposition(|&c| c + 1 < q) else {
            break;
        };
        base[k] += 1;
        base[k + 1..].fill(0);
    }
    Ok(out)
}

#[derive(Serialize)]
struct RankAlpha {
    rank: usize,
    alpha: f64,
}

#[derive(Serialize)]
struct Moran {
    u: Digit,
    alpha: f64,
}

#[derive(Serialize)]
struct Dimension {
    entropy_estimates: Vec<RankAlpha>,
    trend: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    moran: Option<Moran>,
}

/// Entropy-sum exponents per rank, their trend, and optionally the Moran
/// dimension of the set with block digit `u`.
pub fn dimension(
    cfg: &SystemConfig,
    ranks: &[usize],
    u: Option<Digit>,
    tol: f64,
) -> Result<Report, CliError> {
    let sys = cfg.system()?;
    let est = graph_dimension_estimate(&sys, ranks)?;
    let moran = match u {
        Some(u) => {
            let spec = MoranSpec::new(sys.pv().clone(), u)?;
            Some(Moran {
                u,
                alpha: moran_dimension(&spec, tol)?,
            })
        }
        None => None,
    };
    let mut rows: Vec<Vec<String>> = est
        .per_rank
        .iter()
        .map(|(r, a)| vec!["entropy".into(), r.to_string(), f64_string(*a)])
        .collect();
    rows.push(vec!["trend".into(), String::new(), f64_string(est.trend)]);
    if let Some(m) = &moran {
        rows.push(vec!["moran".into(), String::new(), f64_string(m.alpha)]);
    }
    let report = Dimension {
        entropy_estimates: est
            .per_rank
            .iter()
            .map(|&(rank, alpha)| RankAlpha { rank, alpha })
            .collect(),
        trend: est.trend,
        moran,
    };
    Ok(Report::new(report, vec!["quantity", "rank", "value"], rows))
}

#[derive(Serialize)]
struct Sample {
    sample: usize,
    digits: String,
    log10_ratios: Vec<f64>,
    last: ExactValue,
}

/// Cylinder ratios along `points` digit strings of length `rank`, drawn with
/// independent digits of law `p` (the law of Lebesgue-random `x`).
pub fn scan_derivative(
    cfg: &SystemConfig,
    points: usize,
    rank: usize,
    seed: u64,
) -> Result<Report, CliError> {
    let sys = cfg.system()?;
    let pv = sys.pv();
    if rank == 0 {
        return Err(Error::ZeroRank.into());
    }
    let law = WeightedIndex::new(pv.probabilities().iter().map(ratio_to_f64))
        .expect("probabilities are positive");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ln10 = core::f64::consts::LN_10;
    let mut samples = Vec::with_capacity(points);
    let mut rows = Vec::new();
    for sample in 0..points {
        let digits: Vec<Digit> = (0..rank).map(|_| law.sample(&mut rng) as Digit).collect();
        let trace = derivative_estimate(&digits, &sys, rank)?;
        let logs: Vec<f64> = trace.ratios.iter().map(|r| ratio_ln(r) / ln10).collect();
        for (m, (r, l)) in trace.ratios.iter().zip(&logs).enumerate() {
            rows.push(vec![
                sample.to_string(),
                (m + 1).to_string(),
                digits[m].to_string(),
                f64_string(ratio_to_f64(r)),
                f64_string(*l),
            ]);
        }
        samples.push(Sample {
            sample,
            digits: digit_string(&digits, pv.q()),
            log10_ratios: logs,
            last: trace.last().unwrap_or(&Rational::one()).into(),
        });
    }
    let headers = vec!["sample", "rank", "digit", "ratio", "log10_ratio"];
    Ok(Report::new(samples, headers, rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use salem_core::ratio;

    fn cfg(p: &str, flips: &str) -> SystemConfig {
        SystemConfig::new(p, flips)
    }

    #[test]
    fn p_rational_order() {
        let pv = ProbVector::uniform(2).unwrap();
        let xs: Vec<_> = p_rationals(&pv, 4).into_iter().map(|(_, x)| x).collect();
        assert_eq!(xs, vec![ratio(1, 2), ratio(1, 4), ratio(3, 4), ratio(1, 8)]);
        let pv3 = ProbVector::uniform(3).unwrap();
        let ranks: Vec<_> = p_rationals(&pv3, 3).into_iter().map(|(r, _)| r).collect();
        assert_eq!(ranks, vec![1, 1, 2]);
    }

    #[test]
    fn riemann_default_rank() {
        assert_eq!(default_riemann_rank(2), 16);
        assert_eq!(default_riemann_rank(3), 10);
        assert_eq!(default_riemann_rank(300), 1);
    }

    #[test]
    fn endpoints_match_ifs() {
        let sys = cfg("1/4,3/4", "all").system().unwrap();
        assert_eq!(
            endpoint_points(&sys, 5).unwrap(),
            ifs_graph_points(&sys, 5).unwrap()
        );
    }

    #[test]
    fn convert_json() {
        let r = convert(&cfg("1/5,3/10,1/2", "none"), &ratio(7, 20), 8).unwrap();
        assert_eq!(r.json["digits"], "12");
        assert_eq!(r.json["tail"], "zero");
        assert_eq!(r.json["classification"], "PRational");
        let r = convert(&cfg("1/2,1/2", "none"), &ratio(1, 3), 8).unwrap();
        assert_eq!(r.json["digits"], "01010101");
        assert_eq!(r.json["classification"], "PIrrational");
        assert_eq!(r.json["exact_expansion"], "(01)");
    }

    #[test]
    fn eval_g_values() {
        let r = eval_g_cmd(&cfg("1/2,1/2", "all"), &ratio(1, 4), 32).unwrap();
        assert_eq!(r.json["value"]["lo"]["exact"], "3/4");
        assert_eq!(r.json["exact"], true);
    }

    #[test]
    fn scan_is_seeded() {
        let c = cfg("1/4,3/4", "all");
        let a = scan_derivative(&c, 3, 16, 7).unwrap();
        let b = scan_derivative(&c, 3, 16, 7).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.rows.len(), 48);
        assert_ne!(a, scan_derivative(&c, 3, 16, 8).unwrap());
    }
}
