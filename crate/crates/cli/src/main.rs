mod report;

use std::path::Path;
use std::process::ExitCode;

use abclosure::closure::{
    abelian_member, corridor_member, exists_hl_factor, periodic_census, periodic_members, scan_hl_factor, HlKind,
};
use abclosure::generators::TernaryRotation;
use abclosure::spec::{parse_word_spec, ternary_spec};
use abclosure::subshift::{
    abelian_minimal_forbidden, binary_order6, binary_sft_report, bounded_language, four_letter_nonsofic,
    golden_mean, legal, minimal_forbidden, nonsofic_witness, parse_forbidden, sft_counterexample_report,
    three_letter, ForbiddenSet,
};
use abclosure::verify::{run_suite, suite_ids};
use abclosure::words::{AbelianIndex, FactorTrie};
use abclosure::{Error, Result};
use clap::{ArgGroup, Parser, Subcommand};
use serde_json::json;

use report::{Format, Report};

const WORKERS_VAR: &str = "ABCLOSURE_WORKERS";

/// Abelian closures of infinite words at finite scale.
#[derive(Parser)]
#[command(name = "abclosure", version, after_help = "Set ABCLOSURE_WORKERS to cap the worker threads.")]
struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print a prefix of a word
    Generate {
        spec: String,
        #[arg(short = 'n')]
        n: usize,
    },
    /// Abelian or factor complexity for n = 1..L
    #[command(group(ArgGroup::new("which").required(true).args(["abelian", "factor"])))]
    Complexity {
        spec: String,
        #[arg(long)]
        abelian: bool,
        #[arg(long)]
        factor: bool,
        #[arg(short = 'L')]
        max_len: usize,
        #[arg(short = 'N', default_value_t = 10_000)]
        window: usize,
    },
    /// Range of a letter's count over length-n factors, n = 1..L
    Corridor {
        spec: String,
        #[arg(long)]
        letter: String,
        #[arg(short = 'L')]
        max_len: usize,
        #[arg(short = 'N', default_value_t = 10_000)]
        window: usize,
    },
    /// Is Y in the abelian closure of X up to length L?
    Member {
        y: String,
        x: String,
        #[arg(short = 'L')]
        max_len: usize,
        #[arg(short = 'N')]
        window: usize,
        /// use the binary corridor criterion instead of Parikh sets
        #[arg(long)]
        corridor: bool,
    },
    /// Periodic words in the closure of a periodic word, up to shift
    Census {
        spec: String,
        #[arg(short = 'N', default_value_t = 500)]
        window: usize,
        /// enumerate every period up to Q instead of the divisors of n0
        #[arg(long)]
        max_q: Option<usize>,
    },
    /// Circle criterion for 1-2 heavy/light factors of a ternary rotation word
    HlExists {
        spec: String,
        #[arg(long)]
        kind: HlKind,
        #[arg(short = 'm')]
        m: usize,
        /// also scan a window of this length
        #[arg(long)]
        scan: Option<usize>,
    },
    /// Forbidden-factor subshifts: a fixture name or a file
    Subshift {
        /// golden-mean, three-letter, four-letter, binary-order6, or a path
        source: String,
        #[command(subcommand)]
        op: SubshiftOp,
    },
    /// Run the acceptance battery
    Verify {
        /// all, words, closure, subshift, determinism, or ids like 1,3,5
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

#[derive(Subcommand)]
enum SubshiftOp {
    /// Legality, extendability and abelian legality of a word
    Legal {
        word: String,
        #[arg(short = 'H')]
        horizon: Option<usize>,
    },
    /// Legal and bi-extendable word counts per length
    Language {
        #[arg(short = 'H')]
        horizon: usize,
    },
    MinimalForbidden {
        #[arg(short = 'L')]
        max_len: usize,
    },
    AbelianMinimalForbidden {
        #[arg(short = 'L')]
        max_len: usize,
        #[arg(short = 'H')]
        horizon: usize,
    },
    /// three-letter only: c^K ab c^n ba c^K against b c^n b
    SftReport {
        #[arg(short = 'n')]
        n: usize,
    },
    /// binary-order6 only: one vs two surplus zeros
    BinaryReport {
        #[arg(short = 'k')]
        k: usize,
    },
    /// four-letter only: minimal forbidden cwd of the abelian closure
    Nonsofic {
        #[arg(short = 'L')]
        max_len: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = cap_workers() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match run(cli.cmd) {
        Ok(r) => ExitCode::from(r.emit(cli.format) as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn cap_workers() -> std::result::Result<(), String> {
    let Ok(v) = std::env::var(WORKERS_VAR) else { return Ok(()) };
    let n: usize = v
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("{WORKERS_VAR} must be a positive integer, got `{v}`"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}

fn run(cmd: Cmd) -> Result<Report> {
    match cmd {
        Cmd::Generate { spec, n } => {
            let w = parse_word_spec(&spec)?;
            let p = w.alphabet().render(&w.prefix(n)?);
            Ok(Report::new("generate", json!({"word": w.name(), "n": n, "prefix": p}))
                .table(vec!["prefix"], vec![vec![p.clone()]])
                .text(p))
        }
        Cmd::Complexity { spec, abelian, factor: _, max_len, window } => {
            let w = parse_word_spec(&spec)?;
            let values: Vec<usize> = if abelian {
                let ix = AbelianIndex::build(w.as_ref(), max_len, window)?;
                (1..=max_len).map(|n| ix.parikhs(n).map(|s| s.len())).collect::<Result<_>>()?
            } else {
                let p = abclosure::words::window_prefix(w.as_ref(), window)?;
                if p.len() < max_len {
                    return Err(Error::WindowTooSmall { n: max_len, window: p.len() });
                }
                let t = FactorTrie::new(&p, w.alphabet().size(), max_len);
                (1..=max_len).map(|n| t.count(n)).collect()
            };
            let kind = if abelian { "abelian" } else { "factor" };
            let rows = values.iter().enumerate().map(|(i, v)| vec![(i + 1).to_string(), v.to_string()]).collect();
            Ok(Report::new(
                "complexity",
                json!({"word": w.name(), "kind": kind, "L": max_len, "window": window, "values": values}),
            )
            .table(vec!["n", kind], rows))
        }
        Cmd::Corridor { spec, letter, max_len, window } => {
            let w = parse_word_spec(&spec)?;
            let a = w
                .alphabet()
                .index_of(&letter)
                .ok_or_else(|| Error::InvalidSpec(format!("letter `{letter}` not in the alphabet of {}", w.name())))?;
            let ix = AbelianIndex::build(w.as_ref(), max_len, window)?;
            let cs = (1..=max_len).map(|n| ix.corridor(a, n)).collect::<Result<Vec<_>>>()?;
            let rows = cs
                .iter()
                .enumerate()
                .map(|(i, (lo, hi))| vec![(i + 1).to_string(), lo.to_string(), hi.to_string()])
                .collect();
            Ok(Report::new(
                "corridor",
                json!({"word": w.name(), "letter": letter, "L": max_len, "window": ix.window(), "corridor": cs}),
            )
            .table(vec!["n", "min", "max"], rows))
        }
        Cmd::Member { y, x, max_len, window, corridor } => {
            let (y, x) = (parse_word_spec(&y)?, parse_word_spec(&x)?);
            let v = if corridor {
                corridor_member(y.as_ref(), x.as_ref(), max_len, window)?
            } else {
                abelian_member(y.as_ref(), x.as_ref(), max_len, window)?
            };
            let verdict = if v.is_member() { format!("member-up-to-{max_len}") } else { "rejected".into() };
            let (wf, wn, wp) = match &v.witness {
                Some(w) => (w.factor.clone(), w.length.to_string(), w.position.to_string()),
                None => Default::default(),
            };
            Ok(Report::new("member", serde_json::to_value(&v).expect("serializable"))
                .table(
                    vec!["query", "verdict", "witness", "length", "position"],
                    vec![vec![v.query.clone(), verdict, wf, wn, wp]],
                )
                .fail_if(!v.is_member()))
        }
        Cmd::Census { spec, window, max_q } => {
            let z = parse_word_spec(&spec)?;
            let c = match max_q {
                Some(q) => periodic_members(z.as_ref(), window, q)?,
                None => periodic_census(z.as_ref(), window)?,
            };
            let rows = c.orbits.iter().map(|o| vec![o.clone()]).collect();
            Ok(Report::new("census", serde_json::to_value(&c).expect("serializable")).table(vec!["orbit"], rows))
        }
        Cmd::HlExists { spec, kind, m, scan } => {
            let t = ternary_spec(&spec)?;
            let o = exists_hl_factor(kind, &t, m)?;
            let scanned = match scan {
                Some(n) => Some(scan_hl_factor(kind, &TernaryRotation::new(t)?, m, n)?),
                None => None,
            };
            let mut data = serde_json::to_value(&o).expect("serializable");
            data["scan"] = json!(scanned);
            let agree = scanned.is_none_or(|s| s == o.value);
            Ok(Report::new("hl-exists", data)
                .table(
                    vec!["kind", "m", "exists", "branch", "scan"],
                    vec![vec![
                        kind.to_string(),
                        m.to_string(),
                        o.value.to_string(),
                        o.branch.to_string(),
                        scanned.map(|s| s.to_string()).unwrap_or_default(),
                    ]],
                )
                .fail_if(!o.value || !agree))
        }
        Cmd::Subshift { source, op } => subshift(&source, op),
        Cmd::Verify { suite } => {
            let out = run_suite(&suite_ids(&suite)?);
            let failed = out.iter().any(|o| !o.passed);
            let rows = out
                .iter()
                .map(|o| {
                    vec![
                        o.id.to_string(),
                        if o.passed { "PASS" } else { "FAIL" }.into(),
                        o.title.to_string(),
                        o.details.join("; "),
                    ]
                })
                .collect();
            let text = out
                .iter()
                .map(|o| {
                    let mut s = format!("{:>2} {} {}", o.id, if o.passed { "PASS" } else { "FAIL" }, o.title);
                    for d in &o.details {
                        s += &format!("\n     {d}");
                    }
                    s
                })
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Report::new("verify", json!({"suite": suite, "passed": !failed, "criteria": out}))
                .table(vec!["id", "status", "title", "details"], rows)
                .text(text)
                .fail_if(failed))
        }
    }
}

fn load(source: &str) -> Result<(String, ForbiddenSet)> {
    let f = match source {
        "golden-mean" => golden_mean(),
        "three-letter" => three_letter(),
        "four-letter" => four_letter_nonsofic(),
        "binary-order6" => binary_order6(),
        path if Path::new(path).exists() => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::InvalidSpec(format!("{path}: {e}")))?;
            parse_forbidden(&text)?
        }
        other => {
            return Err(Error::InvalidSpec(format!(
                "`{other}` is neither a fixture (golden-mean, three-letter, four-letter, binary-order6) nor a file"
            )))
        }
    };
    Ok((source.to_string(), f))
}

fn only_for(name: &str, fixture: &str, op: &str) -> Result<()> {
    if name != fixture {
        return Err(Error::InvalidSpec(format!("`{op}` needs the {fixture} fixture")));
    }
    Ok(())
}

fn subshift(source: &str, op: SubshiftOp) -> Result<Report> {
    let (name, f) = load(source)?;
    let render = |ws: &[abclosure::words::FiniteWord]| ws.iter().map(|w| f.alphabet.render(w)).collect::<Vec<_>>();
    match op {
        SubshiftOp::Legal { word, horizon } => {
            let w = f.alphabet.parse_word(&word)?;
            let h = horizon.unwrap_or(w.len()).max(w.len());
            let lang = bounded_language(&f, h)?;
            let (is_legal, ext, ab) = (legal(&w, &f), lang.is_extendable(&w), lang.abelian_legal(&w)?);
            let witness = lang.first_abelian_illegal(&w).map(|(i, n)| f.alphabet.render(&w[i..i + n]));
            Ok(Report::new(
                "subshift-legal",
                json!({"subshift": name, "word": word, "horizon": h, "legal": is_legal,
                       "bi-extendable": ext, "abelian-legal": ab, "abelian-witness": witness}),
            )
            .table(
                vec!["word", "legal", "bi-extendable", "abelian-legal", "witness"],
                vec![vec![word.clone(), is_legal.to_string(), ext.to_string(), ab.to_string(), witness.unwrap_or_default()]],
            )
            .fail_if(!is_legal))
        }
        SubshiftOp::Language { horizon } => {
            let lang = bounded_language(&f, horizon)?;
            let counts: Vec<(usize, usize, usize)> = (0..=horizon)
                .map(|n| (n, lang.legal_words(n).count(), lang.extendable_words(n).count()))
                .collect();
            let rows = counts.iter().map(|c| vec![c.0.to_string(), c.1.to_string(), c.2.to_string()]).collect();
            Ok(Report::new("subshift-language", json!({"subshift": name, "horizon": horizon, "counts": counts}))
                .table(vec!["n", "legal", "bi-extendable"], rows))
        }
        SubshiftOp::MinimalForbidden { max_len } => {
            let ws = render(&minimal_forbidden(&f, max_len)?);
            let rows = ws.iter().map(|w| vec![w.clone()]).collect();
            Ok(Report::new("subshift-minimal-forbidden", json!({"subshift": name, "L": max_len, "words": ws}))
                .table(vec!["word"], rows))
        }
        SubshiftOp::AbelianMinimalForbidden { max_len, horizon } => {
            let ws = render(&abelian_minimal_forbidden(&f, max_len, horizon)?);
            let rows = ws.iter().map(|w| vec![w.clone()]).collect();
            Ok(Report::new(
                "subshift-abelian-minimal-forbidden",
                json!({"subshift": name, "L": max_len, "horizon": horizon, "words": ws}),
            )
            .table(vec!["word"], rows))
        }
        SubshiftOp::SftReport { n } => {
            only_for(&name, "three-letter", "sft-report")?;
            let r = sft_counterexample_report(n)?;
            Ok(Report::new("subshift-sft-report", serde_json::to_value(&r).expect("serializable"))
                .table(
                    vec!["n", "fragment", "short factors ok", "long factor", "rejected"],
                    vec![vec![
                        n.to_string(),
                        r.fragment.clone(),
                        r.short_factors_ok.to_string(),
                        r.long_factor.clone(),
                        r.long_factor_rejected.to_string(),
                    ]],
                )
                .fail_if(!r.passed))
        }
        SubshiftOp::BinaryReport { k } => {
            only_for(&name, "binary-order6", "binary-report")?;
            let r = binary_sft_report(k)?;
            Ok(Report::new("subshift-binary-report", serde_json::to_value(&r).expect("serializable"))
                .table(
                    vec!["k", "accepted", "accepted ok", "rejected", "witness"],
                    vec![vec![
                        k.to_string(),
                        r.accepted.clone(),
                        r.accepted_ok.to_string(),
                        r.rejected.clone(),
                        r.rejected_witness.clone().unwrap_or_default(),
                    ]],
                )
                .fail_if(!r.passed))
        }
        SubshiftOp::Nonsofic { max_len } => {
            only_for(&name, "four-letter", "nonsofic")?;
            let r = nonsofic_witness(max_len)?;
            let rows = r
                .counts
                .iter()
                .map(|(n, (found, want))| vec![n.to_string(), found.to_string(), want.to_string()])
                .collect();
            Ok(Report::new("subshift-nonsofic", serde_json::to_value(&r).expect("serializable"))
                .table(vec!["|w|", "found", "2^n - C(n,n/2)"], rows)
                .fail_if(!r.matches_unbalanced))
        }
    }
}
