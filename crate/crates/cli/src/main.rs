mod report;

use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use derangements::bijections;
use derangements::enumerate::{FamilySpec, Member, WeightSpec};
use derangements::identities::{self, IdentityCase, IdentityId};
use derangements::numbers::{self, RlmTable};
use derangements::orthopoly;
use derangements::perm::Permutation;
use derangements::poly::MultiPoly;
use derangements::series::{jf_moments, JFraction, SeriesPreset};
use derangements::signed::SignedPermutation;
use serde_json::{json, Map, Value};

use report::{Case, Format, Report, Table};

const BRUTE_CHECK_LIMIT: usize = 9;

#[derive(Parser)]
#[command(name = "derangements", version, about = "Exact derangement statistics, identities and moment sequences")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Omit the wall-time field so repeated runs are byte-identical.
    #[arg(long, global = true)]
    deterministic: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Statistics of one permutation (one-line word) or signed window (comma list).
    Stats { perm: String },
    /// List a family with the weight of every member.
    Enumerate(EnumerateArgs),
    /// Check catalog identities by exact polynomial comparison.
    Verify(VerifyArgs),
    /// Right-to-left minimum triangle d_{n,k}.
    Table(TableArgs),
    /// Moments of a continued-fraction preset.
    Jfraction(JfractionArgs),
    /// Coefficients of a generating-function preset.
    Series(SeriesArgs),
    /// Orthogonality of the derangement-moment polynomials.
    Ortho {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// Run the bijection and matching checks at one size.
    Bijections {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Args)]
struct EnumerateArgs {
    /// Sn, Dn, Dnj, Dnj_tilde, Dnj_bar, Unj, Enj, Bn, Bn_plus, Bn_minus,
    /// Bn_mixed, Cn_1, Cn_1p, Cn_2, Cn_2p or Cnk.
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    j: Option<usize>,
    /// Weight preset; defaults to lambda-rlm-exc on type A and type-b-exc on type B.
    #[arg(long)]
    weight: Option<String>,
    /// Print only the count and the total weight.
    #[arg(long)]
    sum_only: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, conflicts_with = "all")]
    id: Option<String>,
    #[arg(long, requires = "id")]
    n: Option<usize>,
    #[arg(long, requires = "n")]
    j: Option<usize>,
    #[arg(long)]
    all: bool,
    /// Largest n for type-A identities.
    #[arg(long, default_value_t = 7)]
    max_n: usize,
    /// Largest n for type-B identities.
    #[arg(long, default_value_t = 5)]
    max_n_b: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Route {
    Both,
    Enumeration,
    Fraction,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, default_value_t = 8)]
    max_n: usize,
    #[arg(long, value_enum, default_value_t = Route::Both)]
    route: Route,
}

#[derive(Args)]
struct JfractionArgs {
    /// full, dnx or dn1.
    #[arg(long, default_value = "full")]
    preset: String,
    #[arg(long, default_value_t = 7)]
    order: usize,
}

#[derive(Args)]
struct SeriesArgs {
    /// derangement-egf, first-column-egf, subdiagonal-ogf, lambda-minus-one or laguerre-egf.
    #[arg(long)]
    expr: String,
    #[arg(long, default_value_t = 8)]
    order: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let mut report = match run(&cli.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if !cli.deterministic {
        report.wall_time_ms = Some(start.elapsed().as_millis());
    }
    if let Err(e) = report.emit(cli.format) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if report.all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

type CmdResult = Result<Report, Box<dyn std::error::Error>>;

fn params(pairs: &[(&str, Value)]) -> Map<String, Value> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn run(command: &Command) -> CmdResult {
    match command {
        Command::Stats { perm } => stats(perm),
        Command::Enumerate(a) => enumerate(a),
        Command::Verify(a) => verify(a),
        Command::Table(a) => table(a),
        Command::Jfraction(a) => jfraction(a),
        Command::Series(a) => series(a),
        Command::Ortho { max_n } => ortho(*max_n),
        Command::Bijections { n } => bijection_checks(*n),
    }
}

fn set_text<T: std::fmt::Display>(s: &std::collections::BTreeSet<T>) -> String {
    let items: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn key_values(report: &mut Report, rows: Vec<(&str, String)>) {
    let text: String = rows.iter().map(|(k, v)| format!("{k}: {v}\n")).collect();
    report.data = Some(Value::Object(rows.iter().map(|(k, v)| (k.to_string(), json!(v))).collect()));
    report.table = Some(Table {
        header: vec!["statistic".into(), "value".into()],
        rows: rows.into_iter().map(|(k, v)| vec![k.to_string(), v]).collect(),
    });
    report.text = Some(text);
}

fn stats(input: &str) -> CmdResult {
    let mut report = Report::new("stats", params(&[("perm", json!(input))]));
    if input.contains('-') {
        let s: SignedPermutation = input.parse()?;
        let st = s.stats_b();
        key_values(
            &mut report,
            vec![
                ("window", s.to_bar_string()),
                ("cycles", s.cycles_to_bar_string()),
                ("EXC_B", set_text(&st.exc_b)),
                ("AnEXC_B", set_text(&st.anexc_b)),
                ("RLM_B", set_text(&st.rlm_b)),
                ("neg", st.neg.to_string()),
                ("nsum", st.nsum.to_string()),
                ("cyc", st.cyc_b.to_string()),
            ],
        );
    } else {
        let p: Permutation = input.parse()?;
        let st = p.statistics();
        key_values(
            &mut report,
            vec![
                ("word", p.to_string()),
                ("cycles", p.cycles().to_string()),
                ("EXCi", set_text(&st.exc_i)),
                ("EXCv", set_text(&st.exc_v)),
                ("RLMi", set_text(&st.rlm_i)),
                ("RLMv", set_text(&st.rlm_v)),
                ("FIX", set_text(&st.fix)),
                ("cyc", st.cyc.to_string()),
                ("inv", st.inv.to_string()),
                ("flip", p.flip().to_string()),
            ],
        );
    }
    Ok(report)
}

fn weight_preset(name: &str) -> Option<WeightSpec> {
    Some(match name {
        "cyc-rlmv-excv" => WeightSpec::cyc_rlmv_excv(),
        "inv-rlmv-excv" => WeightSpec::inv_rlmv_excv(),
        "cyc-rlmi-exci" => WeightSpec::cyc_rlmi_exci(),
        "inv-rlmi-exci" => WeightSpec::inv_rlmi_exci(),
        "lambda-rlm-exc" => WeightSpec::lambda_rlm_exc(),
        "cyc-exc" => WeightSpec::cyc_exc(),
        "inv-exc" => WeightSpec::inv_exc(),
        "cyc-exci" => WeightSpec::cyc_exci(),
        "cyc-rlmv-y" => WeightSpec::cyc_rlmv_y(),
        "qinv-rlmv-y" => WeightSpec::qinv_rlmv_y(),
        "type-b-exc" => WeightSpec::type_b_exc(),
        "type-b-rlm" => WeightSpec::type_b_rlm(),
        _ => return None,
    })
}

fn enumerate(a: &EnumerateArgs) -> CmdResult {
    let spec = FamilySpec::from_label(&a.family, a.n, a.j)?;
    let weight_name = a
        .weight
        .clone()
        .unwrap_or_else(|| if spec.is_signed() { "type-b-exc" } else { "lambda-rlm-exc" }.to_string());
    let weight = weight_preset(&weight_name).ok_or_else(|| format!("unknown weight preset {weight_name:?}"))?;
    let members: Vec<Member> = spec.iterate()?.collect();
    let mut rows = Vec::new();
    let mut total = MultiPoly::zero();
    for m in &members {
        let w = match m {
            Member::A(p) => weight.weight_poly(p)?,
            Member::B(s) => weight.weight_poly_signed(s)?,
        };
        if !a.sum_only {
            rows.push(vec![m.to_string(), w.to_string()]);
        }
        total += &w;
    }
    let mut report = Report::new(
        "enumerate",
        params(&[
            ("family", json!(a.family)),
            ("n", json!(a.n)),
            ("j", json!(a.j)),
            ("weight", json!(weight_name)),
        ]),
    );
    let mut text: String = rows.iter().map(|r| format!("{}  {}\n", r[0], r[1])).collect();
    text.push_str(&format!("count: {}\ntotal: {total}\n", members.len()));
    report.data = Some(json!({
        "count": members.len(),
        "members": rows.iter().map(|r| json!({"perm": r[0], "weight": r[1]})).collect::<Vec<_>>(),
        "total": total.to_string(),
    }));
    report.table = Some(Table { header: vec!["perm".into(), "weight".into()], rows });
    report.text = Some(text);
    Ok(report)
}

fn identity_case(c: IdentityCase) -> Case {
    Case::sides(c.id.label(), c.n, c.j, c.pass, c.lhs.to_string(), c.rhs.to_string())
}

/// Runs the cases on all cores; results keep the input order.
fn verify_parallel(cases: Vec<(IdentityId, usize, Option<usize>)>) -> Result<Vec<IdentityCase>, identities::IdentityError> {
    let next = AtomicUsize::new(0);
    let slots: Vec<Mutex<Option<Result<IdentityCase, identities::IdentityError>>>> =
        cases.iter().map(|_| Mutex::new(None)).collect();
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get()).min(cases.len().max(1));
    std::thread::scope(|scope| {
        for _ in 0..threads {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(&(id, n, j)) = cases.get(i) else { break };
                *slots[i].lock().unwrap() = Some(identities::verify(id, n, j));
            });
        }
    });
    slots.into_iter().map(|s| s.into_inner().unwrap().expect("every slot is filled")).collect()
}

fn verify(a: &VerifyArgs) -> CmdResult {
    let cases = if let Some(label) = &a.id {
        let id: IdentityId = label.parse()?;
        let max = if id.is_type_b() { a.max_n_b } else { a.max_n };
        let sizes: Vec<usize> = match a.n {
            Some(n) => vec![n],
            None => (id.min_n()..=max).collect(),
        };
        let mut out = Vec::new();
        for n in sizes {
            match a.j {
                Some(j) => out.push((id, n, Some(j))),
                None if id.is_sliced() => out.extend((1..n).map(|j| (id, n, Some(j)))),
                None => out.push((id, n, None)),
            }
        }
        out
    } else if a.all {
        identities::catalog_cases(a.max_n, a.max_n_b)
    } else {
        return Err("verify needs --id or --all".into());
    };
    let mut report = Report::new(
        "verify",
        params(&[
            ("id", json!(a.id)),
            ("n", json!(a.n)),
            ("j", json!(a.j)),
            ("all", json!(a.all)),
            ("max_n", json!(a.max_n)),
            ("max_n_b", json!(a.max_n_b)),
        ]),
    );
    for c in verify_parallel(cases)? {
        report.push(identity_case(c));
    }
    Ok(report)
}

fn table(a: &TableArgs) -> CmdResult {
    if a.max_n < 2 {
        return Err("table needs --max-n >= 2".into());
    }
    let t: RlmTable = match a.route {
        Route::Both => numbers::rlm_table(a.max_n)?,
        Route::Enumeration => numbers::rlm_table_enumerated(a.max_n),
        Route::Fraction => numbers::rlm_table_fraction(a.max_n),
    };
    let route = match a.route {
        Route::Both => "both",
        Route::Enumeration => "enumeration",
        Route::Fraction => "fraction",
    };
    let mut report = Report::new("table", params(&[("max_n", json!(a.max_n)), ("route", json!(route))]));
    report.data = Some(json!({
        "rows": (2..=a.max_n)
            .map(|n| json!({"n": n, "values": t.row(n).iter().map(|v| v.to_string()).collect::<Vec<_>>()}))
            .collect::<Vec<_>>(),
    }));
    report.csv = Some(t.to_csv());
    report.text = Some(t.to_text());
    Ok(report)
}

fn brute_moment(preset: &str, n: usize, dn1_table: &Option<RlmTable>) -> MultiPoly {
    let full = || derangements::series::derangement_polynomial(n);
    match preset {
        "full" => full(),
        "dnx" => full().subs([(derangements::poly::Y, MultiPoly::one()), (derangements::poly::LAMBDA, MultiPoly::one())]),
        _ => MultiPoly::constant(dn1_table.as_ref().expect("table built for dn1").get(n + 2, 1)),
    }
}

fn jfraction(a: &JfractionArgs) -> CmdResult {
    let spec = JFraction::preset(&a.preset).ok_or_else(|| format!("unknown continued-fraction preset {:?}", a.preset))?;
    let moments = jf_moments(&spec, a.order);
    let mut report = Report::new("jfraction", params(&[("preset", json!(a.preset)), ("order", json!(a.order))]));
    let check_to = a.order.min(BRUTE_CHECK_LIMIT);
    let dn1_table = (a.preset == "dn1").then(|| numbers::rlm_table_enumerated((check_to + 2).min(BRUTE_CHECK_LIMIT)));
    let rows: Vec<Vec<String>> = moments.iter().enumerate().map(|(n, m)| vec![n.to_string(), m.to_string()]).collect();
    for (n, m) in moments.iter().enumerate() {
        if n > check_to || (a.preset == "dn1" && n + 2 > BRUTE_CHECK_LIMIT) {
            break;
        }
        let brute = brute_moment(&a.preset, n, &dn1_table);
        report.push(Case::sides(format!("JF-{}", a.preset.to_uppercase()), n, None, *m == brute, m.to_string(), brute.to_string()));
    }
    report.data = Some(json!({ "moments": moments.iter().map(|m| m.to_string()).collect::<Vec<_>>() }));
    report.text = Some(rows.iter().map(|r| format!("mu_{} = {}\n", r[0], r[1])).collect());
    report.table = Some(Table { header: vec!["n".into(), "moment".into()], rows });
    Ok(report)
}

fn series(a: &SeriesArgs) -> CmdResult {
    let preset = SeriesPreset::parse(&a.expr)?;
    let s = preset.expand(a.order);
    let mut report = Report::new("series", params(&[("expr", json!(a.expr)), ("order", json!(a.order))]));
    let rows: Vec<Vec<String>> =
        s.coefficients().iter().enumerate().map(|(n, c)| vec![n.to_string(), c.to_string()]).collect();
    report.data = Some(json!({
        "flavor": format!("{:?}", s.flavor()).to_lowercase(),
        "coefficients": rows.iter().map(|r| r[1].clone()).collect::<Vec<_>>(),
    }));
    report.text = Some(s.to_string());
    report.table = Some(Table { header: vec!["n".into(), "coefficient".into()], rows });
    Ok(report)
}

fn ortho(max_n: usize) -> CmdResult {
    let r = orthopoly::orthogonality_check(max_n)?;
    let mut report = Report::new("ortho", params(&[("max_n", json!(max_n))]));
    for (i, row) in r.matrix.iter().enumerate() {
        for (k, value) in row.iter().enumerate() {
            report.push(Case::sides("ORTHO", i + 1, Some(k), value.is_zero(), value.to_string(), "0".into()));
        }
    }
    report.push(Case::detail(
        "CONSTRUCTIONS",
        max_n,
        None,
        r.constructions_agree,
        "recurrence and Laguerre forms agree".into(),
    ));
    let polys: Vec<String> = r.polynomials.iter().map(|p| p.to_string()).collect();
    report.text = Some(polys.iter().enumerate().map(|(n, p)| format!("P_{n} = {p}\n")).collect());
    report.data = Some(json!({ "polynomials": polys }));
    Ok(report)
}

fn bijection_checks(n: usize) -> CmdResult {
    if n == 0 {
        return Err("bijections needs --n >= 1".into());
    }
    let mut report = Report::new("bijections", params(&[("n", json!(n))]));
    for s in bijections::all_checks(n) {
        report.push(Case::detail(s.name, n, None, s.pass, format!("{} elements, {}", s.domain_size, s.detail)));
    }
    Ok(report)
}
