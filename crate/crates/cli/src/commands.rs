use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde_json::{json, Value};

use permstat::statistics::{charge_values, stat_polynomial, stat_polynomial_par};
use permstat::tableaux::{
    ballot_rank, count_two_row, enumerate_two_row_syt, fast_ch_321, involution_phi, rsk_insert, verify_corollary9,
    verify_lemma5, verify_theorem8, ParityReport, StandardTableau,
};
use permstat::wilf::{
    lemma1_counterexample, s3_pair_candidates, st_wilf_classes, verify_lemma2, verify_theorem3, verify_theorem4,
    WilfClassReport,
};
use permstat::{enumerate_avoiders, perm::s3, Error, ExhaustionLimit, PatternSet, Statistic};

use crate::args::{
    AvoidArgs, ClassesArgs, Command, InvolutionArgs, PolyArgs, Preset, RskArgs, StatArgs, Target, VerifyArgs,
};
use crate::output::{row, Rendered};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAILED: i32 = 2;

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub kind: &'static str,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_USAGE,
            kind: "usage",
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let (code, kind) = match &e {
            Error::ImageMismatch { .. }
            | Error::ClassMismatch { .. }
            | Error::CountMismatch { .. }
            | Error::PolynomialMismatch { .. } => (EXIT_FAILED, "verification_failed"),
            Error::Overflow(_) => (EXIT_USAGE, "overflow"),
            Error::ExhaustionLimit { .. } | Error::Resource(_) => (EXIT_USAGE, "resource"),
            _ => (EXIT_USAGE, "usage"),
        };
        CliError {
            code,
            kind,
            message: e.to_string(),
        }
    }
}

pub struct Context {
    pub limit: ExhaustionLimit,
    pub threads: usize,
}

impl Context {
    fn check_exhaustive(&self, n: usize, patterns: &PatternSet) -> Result<(), CliError> {
        if !patterns.restricts(n) && n > self.limit.0 {
            return Err(Error::ExhaustionLimit { n, limit: self.limit.0 }.into());
        }
        Ok(())
    }
}

fn union(sets: &[PatternSet]) -> PatternSet {
    sets.iter().flat_map(|s| s.iter().cloned()).collect()
}

fn pattern_strings(set: &PatternSet) -> Vec<String> {
    set.iter().map(|p| p.to_string()).collect()
}

pub fn run_parameters(command: &Command) -> (&'static str, BTreeMap<String, Value>) {
    let mut m = BTreeMap::new();
    let name = match command {
        Command::Stat(a) => {
            m.insert("perm".into(), json!(a.perm.to_string()));
            m.insert("stat".into(), json!(a.stat.to_string()));
            "stat"
        }
        Command::Poly(a) => {
            m.insert("n".into(), json!(a.n));
            m.insert("avoid".into(), json!(pattern_strings(&union(&a.avoid))));
            m.insert("stat".into(), json!(a.stat.to_string()));
            m.insert("fast".into(), json!(a.fast));
            "poly"
        }
        Command::Avoid(a) => {
            m.insert("n".into(), json!(a.n));
            m.insert("avoid".into(), json!(pattern_strings(&union(&a.avoid))));
            m.insert("count".into(), json!(a.count));
            "avoid"
        }
        Command::Classes(a) => {
            m.insert("nmax".into(), json!(a.nmax));
            m.insert("stat".into(), json!(a.stat.to_string()));
            let sets: Vec<Vec<String>> = a.avoid.iter().map(pattern_strings).collect();
            m.insert("avoid".into(), json!(sets));
            if let Some(p) = a.preset {
                m.insert("preset".into(), json!(format!("{p:?}")));
            }
            "classes"
        }
        Command::Verify(a) => {
            m.insert("target".into(), json!(format!("{:?}", a.target).to_lowercase()));
            for (key, v) in [("n", a.n.map(|x| x as u64)), ("k", a.k.map(u64::from)), ("nmax", a.nmax.map(|x| x as u64))] {
                if let Some(v) = v {
                    m.insert(key.into(), json!(v));
                }
            }
            if let Some(s) = a.stat {
                m.insert("stat".into(), json!(s.to_string()));
            }
            "verify"
        }
        Command::Rsk(a) => {
            m.insert("perm".into(), json!(a.perm.to_string()));
            "rsk"
        }
        Command::Involution(a) => {
            m.insert("word".into(), json!(a.word.to_string()));
            "involution"
        }
    };
    (name, m)
}

pub fn run(command: &Command, ctx: &Context) -> Result<Rendered, CliError> {
    match command {
        Command::Stat(a) => stat(a),
        Command::Poly(a) => poly(a, ctx),
        Command::Avoid(a) => avoid(a, ctx),
        Command::Classes(a) => classes(a, ctx),
        Command::Verify(a) => verify(a, ctx),
        Command::Rsk(a) => rsk(a),
        Command::Involution(a) => involution(a),
    }
}

fn stat(a: &StatArgs) -> Result<Rendered, CliError> {
    let value = a.stat.eval(&a.perm);
    let mut result = json!({ "statistic": a.stat.to_string(), "value": value });
    let mut text = format!("{}({}) = {value}\n", a.stat.short_name(), a.perm);
    let mut csv = vec![row(["key", "value"]), row([a.stat.to_string(), value.to_string()])];
    if a.stat == Statistic::Charge {
        let chv = charge_values(&a.perm);
        let map: BTreeMap<String, u64> = chv.iter().map(|(k, v)| (k.to_string(), *v)).collect();
        result["charge_values"] = json!(map);
        // Listed in the order the values appear in the permutation.
        let cells: Vec<String> = a.perm.entries().iter().map(|v| chv[v].to_string()).collect();
        let _ = writeln!(text, "charge values: {}", cells.join(" "));
        csv.extend(chv.iter().map(|(k, v)| row([format!("chv({k})"), v.to_string()])));
    }
    Ok(Rendered {
        result,
        text,
        csv,
        verdict: None,
    })
}

fn render_poly(poly: &permstat::StatPolynomial, route: &str) -> Result<Rendered, CliError> {
    let total = poly.total()?;
    let result = json!({
        "n": poly.n,
        "patterns": pattern_strings(&poly.patterns),
        "stat": poly.stat.to_string(),
        "route": route,
        "coefficients": poly.coeffs(),
        "total": total,
    });
    let text = format!(
        "F_{}^{}({}; q) = {}\ncoefficients: {:?}\ntotal: {total}\n",
        poly.n,
        poly.stat.short_name(),
        poly.patterns,
        poly,
        poly.coeffs()
    );
    let mut csv = vec![row(["exponent", "coefficient"])];
    csv.extend(poly.coeffs().iter().enumerate().map(|(i, c)| row([i.to_string(), c.to_string()])));
    Ok(Rendered {
        result,
        text,
        csv,
        verdict: None,
    })
}

fn poly(a: &PolyArgs, ctx: &Context) -> Result<Rendered, CliError> {
    let patterns = union(&a.avoid);
    if a.fast {
        let only_321 = patterns == PatternSet::single("321".parse().unwrap());
        if !only_321 || a.stat != Statistic::Charge {
            return Err(CliError::usage("--fast requires --avoid 321 --stat ch"));
        }
        return render_poly(&fast_ch_321(a.n)?, "tableaux");
    }
    ctx.check_exhaustive(a.n, &patterns)?;
    let poly = if ctx.threads > 1 {
        stat_polynomial_par(a.n, &patterns, a.stat)?
    } else {
        stat_polynomial(a.n, &patterns, a.stat)?
    };
    render_poly(&poly, "enumeration")
}

fn avoid(a: &AvoidArgs, ctx: &Context) -> Result<Rendered, CliError> {
    let patterns = union(&a.avoid);
    ctx.check_exhaustive(a.n, &patterns)?;
    let (result, text, csv) = if a.count {
        let count = enumerate_avoiders(a.n, &patterns).count();
        (
            json!({ "n": a.n, "patterns": pattern_strings(&patterns), "count": count }),
            format!("|Av_{}({patterns})| = {count}\n", a.n),
            vec![row(["n", "count"]), row([a.n, count])],
        )
    } else {
        let perms: Vec<String> = enumerate_avoiders(a.n, &patterns).map(|p| p.to_string()).collect();
        let mut csv = vec![row(["index", "permutation"])];
        csv.extend(perms.iter().enumerate().map(|(i, p)| row([i.to_string(), p.clone()])));
        let mut text = String::new();
        for p in &perms {
            let _ = writeln!(text, "{p}");
        }
        let _ = writeln!(text, "count: {}", perms.len());
        (
            json!({ "n": a.n, "patterns": pattern_strings(&patterns), "count": perms.len(), "permutations": perms }),
            text,
            csv,
        )
    };
    Ok(Rendered {
        result,
        text,
        csv,
        verdict: None,
    })
}

fn candidates(a: &ClassesArgs) -> Result<Vec<PatternSet>, CliError> {
    let mut out: Vec<PatternSet> = match a.preset {
        Some(Preset::S3Singletons) => s3().into_iter().map(PatternSet::single).collect(),
        Some(Preset::S3Pairs) => s3_pair_candidates(),
        Some(Preset::S3All) => {
            let all = s3();
            (0u32..64)
                .map(|mask| (0..6).filter(|i| mask >> i & 1 == 1).map(|i| all[i].clone()).collect())
                .collect()
        }
        None => Vec::new(),
    };
    out.extend(a.avoid.iter().cloned());
    if out.is_empty() {
        return Err(CliError::usage("give candidates with --avoid or --preset"));
    }
    Ok(out)
}

fn render_classes(report: &WilfClassReport) -> (Value, String, Vec<Vec<String>>) {
    let classes: Vec<Vec<Vec<String>>> = report
        .classes
        .iter()
        .map(|c| c.iter().map(pattern_strings).collect())
        .collect();
    let witnesses: BTreeMap<String, Vec<&[u64]>> = report
        .witness_polynomials
        .iter()
        .map(|(set, polys)| (set.to_string(), polys.iter().map(|p| p.coeffs()).collect()))
        .collect();
    let result = json!({
        "stat": report.stat.to_string(),
        "n_max": report.n_max,
        "classes": classes,
        "witness_coefficients": witnesses,
    });
    let mut text = format!(
        "{}-Wilf classes, compared for n = 0..={} ({} classes)\n",
        report.stat.short_name(),
        report.n_max,
        report.classes.len()
    );
    let mut csv = vec![row(["class", "member"])];
    for (i, class) in report.classes.iter().enumerate() {
        let members: Vec<String> = class.iter().map(|s| s.to_string()).collect();
        let _ = writeln!(text, "  [{}]", members.join(", "));
        csv.extend(members.into_iter().map(|m| row([i.to_string(), m])));
    }
    (result, text, csv)
}

fn classes(a: &ClassesArgs, ctx: &Context) -> Result<Rendered, CliError> {
    let cands = candidates(a)?;
    for c in &cands {
        ctx.check_exhaustive(a.nmax, c)?;
    }
    let report = st_wilf_classes(&cands, a.stat, a.nmax)?;
    let (result, text, csv) = render_classes(&report);
    Ok(Rendered {
        result,
        text,
        csv,
        verdict: None,
    })
}

fn verdict_rendered(target: &str, passed: bool, details: Value, summary: String) -> Rendered {
    let mut result = json!({ "target": target, "passed": passed });
    if let (Value::Object(r), Value::Object(d)) = (&mut result, details) {
        r.extend(d);
    }
    let status = if passed { "PASS" } else { "FAIL" };
    let text = format!("{target}: {status}\n{summary}");
    let mut csv = vec![row(["key", "value"])];
    if let Value::Object(r) = &result {
        csv.extend(r.iter().map(|(k, v)| row([k.clone(), v.to_string()])));
    }
    Rendered {
        result,
        text,
        csv,
        verdict: Some(passed),
    }
}

fn parity_rendered(target: &str, r: &ParityReport) -> Rendered {
    let details = json!({
        "k": r.k,
        "n": r.n,
        "route": r.route,
        "cross_checked": r.cross_checked,
        "coefficients": r.polynomial.coeffs(),
        "total": r.polynomial.total().ok(),
    });
    let summary = format!(
        "n = {} via {}{}\ncoefficients: {:?}\n",
        r.n,
        json!(r.route).as_str().unwrap_or_default(),
        if r.cross_checked { " (cross-checked by enumeration)" } else { "" },
        r.polynomial.coeffs()
    );
    verdict_rendered(target, r.holds, details, summary)
}

fn verify(a: &VerifyArgs, ctx: &Context) -> Result<Rendered, CliError> {
    let stat = a.stat.unwrap_or(Statistic::Charge);
    let limit = ctx.limit;
    let rendered = match a.target {
        Target::Lemma1 => {
            let n = a.n.unwrap_or(8);
            let counter = lemma1_counterexample(n, limit)?;
            verdict_rendered(
                "lemma1",
                counter.is_none(),
                json!({ "n": n, "counterexample": counter.as_ref().map(|p| p.to_string()) }),
                match &counter {
                    None => format!("maj(p) = ch(f(p)) for all of S_{n}\n"),
                    Some(p) => format!("counterexample: {p}\n"),
                },
            )
        }
        Target::Lemma2 => {
            let n = a.n.unwrap_or(7);
            let map = verify_lemma2(n, limit)?;
            let shown: BTreeMap<String, String> = map.iter().map(|(s, t)| (s.to_string(), t.to_string())).collect();
            let mut summary = String::new();
            for (s, t) in &shown {
                let _ = writeln!(summary, "f(Av_{n}({s})) = Av_{n}({t})");
            }
            verdict_rendered("lemma2", true, json!({ "n": n, "correspondence": shown }), summary)
        }
        Target::Theorem3 | Target::Theorem4 => {
            let n_max = a.nmax.unwrap_or(8);
            let (name, report) = if a.target == Target::Theorem3 {
                ("theorem3", verify_theorem3(n_max, stat, limit)?)
            } else {
                ("theorem4", verify_theorem4(n_max, stat, limit)?)
            };
            let (classes, text, _) = render_classes(&report);
            verdict_rendered(name, true, classes, text)
        }
        Target::Lemma5 => {
            let k = a.k.unwrap_or(4);
            let r = verify_lemma5(k, limit)?;
            verdict_rendered(
                "lemma5",
                r.odd,
                json!({ "k": r.k, "n": r.n, "count": r.count, "enumerated": r.enumerated }),
                format!("|Av_{}(321)| = {}\n", r.n, r.count),
            )
        }
        Target::Theorem8 => parity_rendered("theorem8", &verify_theorem8(a.k.unwrap_or(4), limit)?),
        Target::Corollary9 => parity_rendered("corollary9", &verify_corollary9(a.k.unwrap_or(4), limit)?),
        Target::Involution => {
            let n = a.n.unwrap_or(15);
            let count = count_two_row(n)?;
            let mut failure = None;
            for w in enumerate_two_row_syt(n) {
                let image = involution_phi(&w)?;
                if image == w || involution_phi(&image)? != w {
                    failure = Some(w.to_string());
                    break;
                }
            }
            verdict_rendered(
                "involution",
                failure.is_none(),
                json!({ "n": n, "words": count, "counterexample": failure }),
                format!("{count} two-row words of size {n}\n"),
            )
        }
    };
    Ok(rendered)
}

fn tableau_json(t: &StandardTableau) -> Value {
    json!(t.rows())
}

fn rsk(a: &RskArgs) -> Result<Rendered, CliError> {
    let (p, q) = rsk_insert(&a.perm);
    let result = json!({
        "perm": a.perm.to_string(),
        "shape": p.shape(),
        "p": tableau_json(&p),
        "q": tableau_json(&q),
    });
    let text = format!("P: {p}\nQ: {q}\nshape: {:?}\n", p.shape());
    let mut csv = vec![row(["tableau", "row", "entries"])];
    for (name, t) in [("P", &p), ("Q", &q)] {
        for (i, r) in t.rows().iter().enumerate() {
            let cells: Vec<String> = r.iter().map(|v| v.to_string()).collect();
            csv.push(row([name.to_string(), i.to_string(), cells.join(" ")]));
        }
    }
    Ok(Rendered {
        result,
        text,
        csv,
        verdict: None,
    })
}

fn involution(a: &InvolutionArgs) -> Result<Rendered, CliError> {
    let image = involution_phi(&a.word)?;
    let result = json!({
        "word": a.word.to_string(),
        "rank": ballot_rank(&a.word)?,
        "tableau": tableau_json(&a.word.to_tableau()),
        "image": image.to_string(),
        "image_rank": ballot_rank(&image)?,
        "image_tableau": tableau_json(&image.to_tableau()),
    });
    let text = format!(
        "{} ({}) -> {} ({})\n",
        a.word,
        a.word.to_tableau(),
        image,
        image.to_tableau()
    );
    let csv = vec![row(["word", "image"]), row([a.word.to_string(), image.to_string()])];
    Ok(Rendered {
        result,
        text,
        csv,
        verdict: None,
    })
}
