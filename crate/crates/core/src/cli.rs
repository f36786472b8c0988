//! Command-line front end. [`run`] is pure: it takes argv and returns the exit
//! code and both output streams, so the binary and the tests share one path.

use std::ffi::OsString;
use std::fs;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bb::BbContext;
use crate::complex::{parse_graph, DirectedCycle, FlagComplex, HomologyGroup, DEFAULT_TIETZE_BUDGET};
use crate::facering::{group_euler_characteristic, hilbert_series, FinitenessReport};
use crate::presentations::Presentation;
use crate::words::{RaagContext, Word};

#[derive(Debug, Parser)]
#[command(name = "raagkit", version, about = "Right-angled Artin groups and Bestvina-Brady kernels")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Longest closed walk used by truncated relator families.
    #[arg(long, global = true, default_value_t = 6)]
    pub max_len: usize,
    /// Largest |n| for the relators c^[n].
    #[arg(long, global = true, default_value_t = 3)]
    pub max_exp: i64,
    /// Tietze move budget for simple-connectivity certificates.
    #[arg(long, global = true, default_value_t = DEFAULT_TIETZE_BUDGET)]
    pub budget: usize,
    /// Stop clique enumeration at this dimension.
    #[arg(long, global = true)]
    pub dim_cap: Option<usize>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Vertices, edges, f-vector, connectivity and Euler characteristic.
    Info { complex: String },
    /// Integral homology via Smith normal form.
    Homology {
        complex: String,
        #[arg(long)]
        reduced: bool,
    },
    /// Emit a group presentation.
    Present {
        complex: String,
        #[arg(long, value_enum)]
        kind: PresentKind,
        /// Basepoint vertex (default: the first vertex).
        #[arg(long)]
        basepoint: Option<String>,
        /// Extra cycle for bb-finite, as comma-separated vertices; repeatable.
        #[arg(long = "cycle")]
        cycles: Vec<String>,
        /// Run bounded Tietze simplification on the result.
        #[arg(long)]
        simplify: bool,
    },
    /// Check that every relator of an edge-letter presentation maps to 1 in the Artin group.
    Verify { complex: String, presentation: String },
    /// Write a zero-exponent-sum vertex word as a word in the directed edges.
    Express {
        complex: String,
        word: String,
        #[arg(long)]
        basepoint: Option<String>,
    },
    /// Artin group normal form of a vertex word.
    Reduce { complex: String, word: String },
    /// Finiteness properties of the Bestvina-Brady kernel.
    Report { complex: String },
    /// Ranks of the exterior face ring by degree.
    Hilbert { complex: String },
    /// Euler characteristics of the complex and of the Artin group.
    Euler { complex: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PresentKind {
    /// Edge-path presentation of the fundamental group.
    Pi1,
    /// Edges and triangles, plus any --cycle relators.
    BbFinite,
    /// All closed walks up to --max-len, exponents up to --max-exp.
    BbTruncated,
}

/// Exit code and captured output streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    /// Bad arguments, unreadable or malformed input: exit 2.
    Usage(String),
    /// The library rejected well-formed input: exit 1.
    Domain(String),
}

fn domain(e: impl std::fmt::Display) -> Failure {
    Failure::Domain(e.to_string())
}

/// Output of a successful command; `code` is 1 only when `verify` finds a failing relator.
struct Rendered {
    code: i32,
    text: String,
    json: Value,
}

impl Rendered {
    fn ok(text: String, json: Value) -> Self {
        Rendered { code: 0, text, json }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match execute(&cli) {
        Ok(r) => {
            let stdout = if cli.json {
                serde_json::to_string_pretty(&r.json).expect("json values serialize") + "\n"
            } else {
                r.text
            };
            Outcome { code: r.code, stdout, stderr: String::new() }
        }
        Err(Failure::Usage(m)) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {m}\n") },
        Err(Failure::Domain(m)) => Outcome { code: 1, stdout: String::new(), stderr: format!("error: {m}\n") },
    }
}

/// Runs [`run`] and writes its streams; returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let out = run(args);
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    out.code
}

fn read(path: &str) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))
}

fn load_complex(path: &str, dim_cap: Option<usize>) -> Result<FlagComplex, Failure> {
    parse_graph(&read(path)?, dim_cap).map_err(|e| Failure::Usage(format!("{path}:{e}")))
}

fn load_presentation(path: &str) -> Result<Presentation, Failure> {
    Presentation::parse(&read(path)?).map_err(|e| match e {
        crate::presentations::PresentationError::Parse(p) => Failure::Usage(format!("{path}:{p}")),
        other => Failure::Usage(format!("{path}: {other}")),
    })
}

fn vertex(complex: &FlagComplex, name: Option<&str>) -> Result<usize, Failure> {
    match name {
        None => Ok(0),
        Some(n) => complex.vertex(n).ok_or_else(|| Failure::Usage(format!("unknown basepoint `{n}`"))),
    }
}

fn vertex_word(complex: &FlagComplex, text: &str) -> Result<Word, Failure> {
    Word::parse_vertex_word(complex, text).map_err(|e| Failure::Usage(format!("word:{e}")))
}

fn show(w: &Word, complex: &FlagComplex) -> String {
    if w.is_empty() {
        "1".to_string()
    } else {
        w.display(complex).to_string()
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn group_text(g: &HomologyGroup) -> String {
    let mut parts = Vec::new();
    match g.betti {
        0 => {}
        1 => parts.push("Z".to_string()),
        b => parts.push(format!("Z^{b}")),
    }
    parts.extend(g.torsion.iter().map(|t| format!("Z/{t}")));
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn execute(cli: &Cli) -> Result<Rendered, Failure> {
    let dim_cap = cli.dim_cap;
    match &cli.command {
        Command::Info { complex } => {
            let c = load_complex(complex, dim_cap)?;
            let edges: Vec<String> = c.edges().iter().map(|&(u, v)| format!("{}-{}", c.name(u), c.name(v))).collect();
            let f = c.f_vector();
            let chi = c.euler_characteristic().ok();
            let components = c.components().len();
            let text = format!(
                "vertices: {}\nedges: {}\nf_vector: {}\ndimension: {}\ntruncated: {}\nconnected: {}\ncomponents: {}\neuler_characteristic: {}\n",
                join(c.vertex_names()),
                join(&edges),
                join(&f),
                c.dimension(),
                yes_no(c.is_truncated()),
                yes_no(c.is_connected()),
                components,
                chi.map_or("unknown".to_string(), |x| x.to_string()),
            );
            let json = json!({
                "vertices": c.vertex_names(),
                "edges": edges,
                "f_vector": f,
                "dimension": c.dimension(),
                "truncated": c.is_truncated(),
                "connected": c.is_connected(),
                "components": components,
                "euler_characteristic": chi,
            });
            Ok(Rendered::ok(text, json))
        }
        Command::Homology { complex, reduced } => {
            let c = load_complex(complex, dim_cap)?;
            let h = c.homology(*reduced).map_err(domain)?;
            let prefix = if *reduced { "~H" } else { "H" };
            let mut text = String::new();
            for (k, g) in h.groups.iter().enumerate() {
                text.push_str(&format!("{prefix}_{k}: {}\n", group_text(g)));
            }
            text.push_str(&format!("betti: {}\n", join(&h.betti_numbers())));
            let groups: Vec<Value> = h
                .groups
                .iter()
                .enumerate()
                .map(|(k, g)| {
                    json!({
                        "degree": k,
                        "group": group_text(g),
                        "betti": g.betti,
                        "torsion": g.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let json = json!({ "reduced": reduced, "groups": groups, "betti": h.betti_numbers() });
            Ok(Rendered::ok(text, json))
        }
        Command::Present { complex, kind, basepoint, cycles, simplify } => {
            let c = load_complex(complex, dim_cap)?;
            let a = vertex(&c, basepoint.as_deref())?;
            if *kind != PresentKind::BbFinite && !cycles.is_empty() {
                return Err(Failure::Usage("--cycle applies to --kind bb-finite only".to_string()));
            }
            let p = match kind {
                PresentKind::Pi1 => c.pi1_presentation(a).map_err(domain)?,
                PresentKind::BbFinite => {
                    let cyc = cycles
                        .iter()
                        .map(|s| {
                            DirectedCycle::parse_vertices(&c, s)
                                .map_err(|e| Failure::Usage(format!("--cycle {s}: {e}")))
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    let ctx = BbContext::new(&c, a).map_err(domain)?.with_tietze_budget(cli.budget);
                    ctx.finite_presentation(&cyc, cli.max_exp).map_err(domain)?.presentation
                }
                PresentKind::BbTruncated => {
                    let ctx = BbContext::new(&c, a).map_err(domain)?.with_tietze_budget(cli.budget);
                    ctx.relators_theorem1(cli.max_len, cli.max_exp).map_err(domain)?.presentation
                }
            };
            let p = if *simplify { p.tietze_simplify(cli.budget).presentation } else { p };
            Ok(Rendered::ok(p.serialize(), p.to_json()))
        }
        Command::Verify { complex, presentation } => {
            let c = load_complex(complex, dim_cap)?;
            let p = load_presentation(presentation)?;
            let ctx = BbContext::new(&c, 0).map_err(domain)?;
            let results = ctx.verify_presentation(&p).map_err(domain)?;
            let passed = results.iter().filter(|&&b| b).count();
            let mut text = String::new();
            let mut rows = Vec::new();
            for (i, (r, ok)) in p.relators().iter().zip(&results).enumerate() {
                let rel = p.render_relator(r);
                text.push_str(&format!("rel {}: {} {rel}\n", i + 1, if *ok { "ok" } else { "FAIL" }));
                rows.push(json!({ "index": i + 1, "ok": ok, "relator": rel }));
            }
            text.push_str(&format!("verified: {passed}/{}\n", results.len()));
            let json = json!({ "relators": rows, "passed": passed, "total": results.len() });
            let code = if passed == results.len() { 0 } else { 1 };
            Ok(Rendered { code, text, json })
        }
        Command::Express { complex, word, basepoint } => {
            let c = load_complex(complex, dim_cap)?;
            let a = vertex(&c, basepoint.as_deref())?;
            let w = vertex_word(&c, word)?;
            let ctx = BbContext::new(&c, a).map_err(domain)?;
            let e = ctx.express_in_kernel(&w).map_err(domain)?;
            let image = ctx.phi(&e).map_err(domain)?;
            let check = ctx.raag().equal(&image, &w).map_err(domain)?;
            let text = format!(
                "basepoint: {}\nedge_word: {}\nphi: {}\ncheck: {}\n",
                c.name(a),
                show(&e, &c),
                show(&image, &c),
                if check { "ok" } else { "FAIL" }
            );
            let json = json!({
                "basepoint": c.name(a),
                "edge_word": show(&e, &c),
                "phi": show(&image, &c),
                "check": check,
            });
            Ok(Rendered { code: if check { 0 } else { 1 }, text, json })
        }
        Command::Reduce { complex, word } => {
            let c = load_complex(complex, dim_cap)?;
            let w = vertex_word(&c, word)?;
            let nf = RaagContext::new(&c).normal_form(&w).map_err(domain)?;
            let text = format!("normal_form: {}\nidentity: {}\n", show(&nf, &c), yes_no(nf.is_empty()));
            let json = json!({ "normal_form": show(&nf, &c), "identity": nf.is_empty() });
            Ok(Rendered::ok(text, json))
        }
        Command::Report { complex } => {
            let c = load_complex(complex, dim_cap)?;
            let r = FinitenessReport::new(&c, cli.budget).map_err(domain)?;
            let json = serde_json::to_value(&r).expect("report serializes");
            Ok(Rendered::ok(r.render_text(), json))
        }
        Command::Hilbert { complex } => {
            let c = load_complex(complex, dim_cap)?;
            let h = hilbert_series(&c).map_err(domain)?;
            Ok(Rendered::ok(format!("hilbert: {}\n", join(&h)), json!({ "hilbert": h })))
        }
        Command::Euler { complex } => {
            let c = load_complex(complex, dim_cap)?;
            let chi = c.euler_characteristic().map_err(domain)?;
            let chi_g = group_euler_characteristic(&c).map_err(domain)?;
            let text = format!("chi_delta: {chi}\nchi_group: {chi_g}\n");
            Ok(Rendered::ok(text, json!({ "chi_delta": chi, "chi_group": chi_g })))
        }
    }
}
