//! `gorlink`: command-line front end for the h-vector toolkit.
//!
//! Exit status: 0 on success, 1 when the mathematics says no (inadmissible
//! input, failed link, no partner), 2 on malformed arguments.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gorlink::catalog::{
    build_table, enumerate_ag, render_csv, render_json, render_markdown, TableData,
};
use gorlink::dimension::{dim_acm, dim_pgor, g_cm, DimensionReport};
use gorlink::hvector::{c2_violation, first_half, g3_violation, scheme_invariants, CurveClass};
use gorlink::liaison::{ag_from_curve, biliaison, ci_biliaison_chain, g_link, representing_curves};
use gorlink::theorems::{
    biliaison_verdict_is_established, default_partner_catalog, glicci_descent,
    liaison_verdict_is_established, parse_partner_catalog, verify_no_descending_biliaison,
    verify_no_descending_liaison, DescentVerdict,
};
use gorlink::{Error, HVector};

/// Label for verdicts the engine derives but no published result covers.
const UNCONFIRMED: &str = "derived, unconfirmed";

fn parse_hvector(s: &str) -> Result<HVector, String> {
    s.parse::<HVector>().map_err(|e| {
        format!("{e}; expected comma-separated integers starting with 1, e.g. 1,3,6,3,1")
    })
}

#[derive(Parser)]
#[command(
    name = "gorlink",
    version,
    about = "h-vector calculus for AG zero-schemes and ACM curves in P^3"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
    Md,
}

#[derive(Subcommand)]
enum Command {
    /// G3-admissibility report (C2 with --curve).
    Check {
        #[arg(value_parser = parse_hvector)]
        h: HVector,
        #[arg(long)]
        curve: bool,
    },
    /// Degree, socle degree, m, s and first half of an AG h-vector
    /// (degree, genus and s of a curve with --curve).
    Invariants {
        #[arg(value_parser = parse_hvector)]
        h: HVector,
        #[arg(long)]
        curve: bool,
        #[arg(long)]
        json: bool,
    },
    /// First half of a G3-admissible h-vector.
    FirstHalf {
        #[arg(value_parser = parse_hvector)]
        h: HVector,
    },
    /// Residual of V in the AG scheme X.
    Link {
        #[arg(value_parser = parse_hvector)]
        h_x: HVector,
        #[arg(value_parser = parse_hvector)]
        h_v: HVector,
    },
    /// Elementary biliaison of V on the ACM curve C; negative heights descend.
    Biliaison {
        #[arg(value_parser = parse_hvector)]
        h_c: HVector,
        #[arg(value_parser = parse_hvector)]
        h_v: HVector,
        #[arg(long, allow_hyphen_values = true, default_value_t = 1)]
        height: i64,
    },
    /// h-vector of an mH - K divisor on the ACM curve with h-vector c.
    Mhk {
        #[arg(value_parser = parse_hvector)]
        c: HVector,
        #[arg(allow_hyphen_values = true)]
        m: i64,
    },
    /// ACM curves on which a general member is an mH - K divisor.
    Represent {
        #[arg(value_parser = parse_hvector)]
        h: HVector,
    },
    /// Dimension of the family of AG zero-schemes with h-vector h.
    DimPgor {
        #[arg(value_parser = parse_hvector)]
        h: HVector,
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        json: bool,
    },
    /// Dimension of the family of ACM curves with h-vector c.
    DimAcm {
        #[arg(value_parser = parse_hvector)]
        c: HVector,
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        json: bool,
    },
    /// Maximal genus of an ACM curve of degree d not on a surface of degree s-1.
    Gcm { d: i64, s: i64 },
    /// AG h-vectors of degree at most D.
    Enumerate {
        #[arg(long)]
        max_degree: i64,
        /// Include h-vectors with h(1) < 3.
        #[arg(long)]
        degenerate: bool,
    },
    /// Catalog of nondegenerate AG h-vectors with dimensions and point counts.
    Table {
        #[arg(long, default_value_t = 30)]
        max_degree: i64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Table data file; defaults to $GORLINK_DATA, then the shipped file.
        #[arg(long)]
        data: Option<PathBuf>,
    },
    /// Whether n general points admit a strictly descending G-liaison.
    VerifyDl {
        #[arg(long)]
        from: i64,
        #[arg(long)]
        to: i64,
        #[arg(long)]
        json: bool,
    },
    /// Whether n general points admit a strictly descending biliaison.
    VerifyDb {
        #[arg(long)]
        from: i64,
        #[arg(long)]
        to: i64,
        #[arg(long)]
        refined: bool,
        #[arg(long)]
        json: bool,
    },
    /// Descending G-liaisons from n general points down to one or two.
    Glicci {
        n: i64,
        /// Partner catalog in JSON; defaults to the shipped one.
        #[arg(long)]
        catalog: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Complete-intersection biliaison descent.
    Chain {
        #[arg(value_parser = parse_hvector)]
        h: HVector,
    },
}

/// Text to print and whether the answer counts as success.
struct Output {
    text: String,
    ok: bool,
}

impl From<String> for Output {
    fn from(text: String) -> Self {
        Output { text, ok: true }
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String, Error> {
    serde_json::to_string_pretty(value).map_err(|e| Error::Data(e.to_string()))
}

fn trace_lines(report: &DimensionReport) -> String {
    let mut out = String::new();
    for step in &report.chain {
        let ci = step.t.map(|t| format!(" t={t}")).unwrap_or_default();
        writeln!(
            out,
            "{} s={}{ci} -> {} +{}",
            step.h, step.s, step.h_prime, step.increment
        )
        .unwrap();
    }
    writeln!(out, "base {}", report.base).unwrap();
    write!(out, "{}", report.value).unwrap();
    out
}

fn dimension_output(report: DimensionReport, trace: bool, json: bool) -> Result<Output, Error> {
    Ok(if json {
        to_json(&report)?.into()
    } else if trace {
        trace_lines(&report).into()
    } else {
        report.value.to_string().into()
    })
}

fn verdict_sweep(
    from: i64,
    to: i64,
    json: bool,
    verdict: impl Fn(i64) -> Result<DescentVerdict, Error>,
    established: impl Fn(&DescentVerdict) -> bool,
) -> Result<Output, Error> {
    if from > to {
        return Err(Error::OutOfRange(format!("empty range {from}..{to}")));
    }
    let verdicts = (from..=to).map(verdict).collect::<Result<Vec<_>, _>>()?;
    if json {
        let records: Vec<serde_json::Value> = verdicts
            .iter()
            .map(|v| {
                let mut record = serde_json::to_value(v).expect("verdicts serialize");
                record["established"] = established(v).into();
                record
            })
            .collect();
        return Ok(to_json(&records)?.into());
    }
    let mut out = String::new();
    for v in &verdicts {
        let status = if v.ruled_out {
            "ruled out"
        } else {
            "not ruled out"
        };
        let label = if established(v) {
            String::new()
        } else {
            format!(" [{UNCONFIRMED}]")
        };
        write!(out, "n={} s={} a={}: {status}", v.n, v.s, v.a).unwrap();
        for w in &v.witnesses {
            write!(out, "; {} dim {} >= {}", w.h, w.dim, w.bound).unwrap();
        }
        for w in &v.eliminated {
            write!(out, "; {} eliminated by genus", w.h).unwrap();
        }
        writeln!(out, "{label}").unwrap();
    }
    let open: BTreeSet<i64> = verdicts
        .iter()
        .filter(|v| !v.ruled_out)
        .map(|v| v.n)
        .collect();
    let open: Vec<String> = open.iter().map(i64::to_string).collect();
    write!(out, "not ruled out: {{{}}}", open.join(",")).unwrap();
    Ok(out.into())
}

fn run(command: Command) -> Result<Output, Error> {
    match command {
        Command::Check { h, curve } => {
            let (kind, violation) = if curve {
                ("C2", c2_violation(&h))
            } else {
                ("G3", g3_violation(&h))
            };
            Ok(match violation {
                None => format!("{kind}-admissible").into(),
                Some(v) => Output {
                    text: format!("not {kind}-admissible: {v}"),
                    ok: false,
                },
            })
        }
        Command::Invariants { h, curve, json } => {
            if curve {
                let c = CurveClass::new(h)?;
                let dim = dim_acm(&c.h)?.value;
                if json {
                    return Ok(to_json(&c)?.into());
                }
                Ok(format!(
                    "degree {}\ngenus {}\ns {}\nsocle_degree {}\ndim_acm {dim}",
                    c.degree, c.genus, c.s, c.socle_degree
                )
                .into())
            } else {
                let z = scheme_invariants(&h)?;
                if json {
                    return Ok(to_json(&z)?.into());
                }
                Ok(format!(
                    "degree {}\nsocle_degree {}\nm {}\ns {}\nfirst_half {}\ngeneration_degree {}",
                    z.degree, z.socle_degree, z.m, z.s, z.first_half, z.generation_degree
                )
                .into())
            }
        }
        Command::FirstHalf { h } => Ok(first_half(&h)?.to_string().into()),
        Command::Link { h_x, h_v } => Ok(g_link(&h_x, &h_v)?.to_string().into()),
        Command::Biliaison { h_c, h_v, height } => {
            Ok(biliaison(&h_c, &h_v, height)?.to_string().into())
        }
        Command::Mhk { c, m } => {
            let h = ag_from_curve(&c, m, 1)?;
            Ok(format!("{h} (degree {})", h.degree()).into())
        }
        Command::Represent { h } => {
            let mut out = Vec::new();
            for c in representing_curves(&h)? {
                let class = CurveClass::new(c)?;
                out.push(format!("{} ({},{})", class.h, class.degree, class.genus));
            }
            if out.is_empty() {
                return Ok(Output {
                    text: "no representing curve".into(),
                    ok: false,
                });
            }
            Ok(out.join("\n").into())
        }
        Command::DimPgor { h, trace, json } => dimension_output(dim_pgor(&h)?, trace, json),
        Command::DimAcm { c, trace, json } => dimension_output(dim_acm(&c)?, trace, json),
        Command::Gcm { d, s } => Ok(g_cm(d, s)?.to_string().into()),
        Command::Enumerate {
            max_degree,
            degenerate,
        } => {
            let rows = enumerate_ag(max_degree, !degenerate)?;
            let lines: Vec<String> = rows.iter().map(|h| format!("{} {h}", h.degree())).collect();
            Ok(lines.join("\n").into())
        }
        Command::Table {
            max_degree,
            format,
            data,
        } => {
            let data = match data {
                Some(path) => TableData::from_path(&path)?,
                None => TableData::load()?,
            };
            let rows = build_table(max_degree, &data)?;
            let text = match format {
                Format::Csv => render_csv(&rows)?,
                Format::Json => render_json(&rows)?,
                Format::Md => render_markdown(&rows),
            };
            Ok(text.trim_end().to_string().into())
        }
        Command::VerifyDl { from, to, json } => verdict_sweep(
            from,
            to,
            json,
            verify_no_descending_liaison,
            liaison_verdict_is_established,
        ),
        Command::VerifyDb {
            from,
            to,
            refined,
            json,
        } => verdict_sweep(
            from,
            to,
            json,
            |n| verify_no_descending_biliaison(n, refined),
            biliaison_verdict_is_established,
        ),
        Command::Glicci { n, catalog, json } => {
            let owned;
            let partners = match catalog {
                Some(path) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| Error::Data(format!("{}: {e}", path.display())))?;
                    owned = parse_partner_catalog(&text)?;
                    &owned[..]
                }
                None => default_partner_catalog(),
            };
            let chain = glicci_descent(n, partners)?;
            if json {
                return Ok(to_json(&chain)?.into());
            }
            let mut out = String::new();
            for step in &chain.steps {
                writeln!(
                    out,
                    "{} points in {} (degree {}, mu >= {}) -> {} points {}",
                    step.n,
                    step.partner,
                    step.degree,
                    step.mu_lower,
                    step.residual,
                    step.residual_h
                )
                .unwrap();
            }
            write!(out, "terminal: {} point(s)", chain.terminal).unwrap();
            Ok(out.into())
        }
        Command::Chain { h } => {
            let lines: Vec<String> = ci_biliaison_chain(&h)?
                .iter()
                .map(|link| match link.ci {
                    Some((s, t)) => format!("{} via CI({s},{t})", link.h),
                    None => format!("{} terminal", link.h),
                })
                .collect();
            Ok(lines.join("\n").into())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Output { text, ok }) => {
            println!("{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
