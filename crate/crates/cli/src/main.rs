mod caps;

use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use ultra_lpa_core::algebra::CycleCorner;
use ultra_lpa_core::classify::{is_von_neumann_regular, trichotomy};
use ultra_lpa_core::dsl::{emit_error, emit_report, parse_doc, parse_expr};
use ultra_lpa_core::gf::{build_gf, graph_is_acyclic, matricial_structure, resolve_f, MatricialMethod};
use ultra_lpa_core::ideals::{enumerate_hs, hereditary_closure, saturate};
use ultra_lpa_core::model::validate;
use ultra_lpa_core::paths::{enumerate_cycles, enumerate_paths, has_exit};
use ultra_lpa_core::{Error, LeavittAlgebra, Ultragraph};

use caps::Caps;

/// Ultragraphs and their Leavitt path algebras.
#[derive(Parser, Debug)]
#[command(name = "ultra-lpa", version, about)]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Maximum size of the generated lattice of vertex sets.
    #[arg(long, global = true, value_parser = positive)]
    lattice_cap: Option<usize>,

    /// Maximum number of enumerated paths.
    #[arg(long, global = true, value_parser = positive)]
    path_cap: Option<usize>,

    /// Largest vertex count for exhaustive hereditary-saturated enumeration.
    #[arg(long, global = true, value_parser = positive)]
    hs_cap: Option<usize>,

    /// Maximum size of the cycle-corner index set.
    #[arg(long, global = true, value_parser = positive)]
    lambda_cap: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check an ultragraph description and summarize it.
    Validate { file: PathBuf },
    /// Classify the Leavitt path algebra (trichotomy).
    Classify { file: PathBuf },
    /// List the hereditary saturated sets, or trace one saturation.
    Ideals {
        file: PathBuf,
        /// Comma-separated vertices; prints the saturation of their hereditary closure.
        #[arg(long, value_delimiter = ',')]
        closure: Option<Vec<String>>,
    },
    /// Build the finite graph G_F.
    Gf {
        file: PathBuf,
        /// Comma-separated edges and sink vertices.
        #[arg(long = "F", value_delimiter = ',', required = true)]
        f: Vec<String>,
        /// Write the graph in Graphviz format.
        #[arg(long)]
        emit_dot: Option<PathBuf>,
    },
    /// Enumerate paths up to a length.
    Paths {
        file: PathBuf,
        #[arg(long)]
        max_len: usize,
    },
    /// List cycle classes and their exits.
    Cycles { file: PathBuf },
    /// Evaluate an algebra expression.
    Eval {
        file: PathBuf,
        #[command(flatten)]
        expr: ExprSource,
        #[command(flatten)]
        mode: EvalMode,
    },
    /// Check the defining relations under canonical-form equality.
    Relations { file: PathBuf },
    /// Image of an expression in M_Λ(K[x, x⁻¹]); needs exactly one cycle class.
    Matrix {
        file: PathBuf,
        #[command(flatten)]
        expr: ExprSource,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct ExprSource {
    /// Expression text, e.g. "p{u} - s(e)*s*(e)".
    #[arg(long)]
    expr: Option<String>,
    /// Read the expression from a file (`.ugexpr`).
    #[arg(long)]
    expr_file: Option<PathBuf>,
}

#[derive(Args, Debug)]
#[group(multiple = false)]
struct EvalMode {
    /// Print the canonical form (the default).
    #[arg(long)]
    canon: bool,
    /// Split the canonical form into homogeneous components.
    #[arg(long)]
    degree: bool,
    /// Print the involution of the canonical form.
    #[arg(long)]
    star: bool,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(n) if n > 0 => Ok(n),
        _ => Err(format!("expected a positive integer, got `{s}`")),
    }
}

/// A finished command: JSON result plus its text rendering.
struct Output {
    json: Value,
    text: String,
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn read_input(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load(path: &PathBuf) -> Result<Ultragraph, Failure> {
    let doc = parse_doc(&read_input(path)?)?;
    Ok(Ultragraph::from_doc(&doc)?)
}

fn expr_text(src: &ExprSource) -> Result<String, Failure> {
    match (&src.expr, &src.expr_file) {
        (Some(e), _) => Ok(e.clone()),
        (None, Some(p)) => read_input(p).map(|s| s.trim().to_string()),
        (None, None) => Err(Failure::Usage("an expression is required".into())),
    }
}

fn set_json(ug: &Ultragraph, s: ultra_lpa_core::VertexSet) -> Value {
    json!(ug.set_names(s))
}

fn run(cli: &Cli, caps: Caps) -> Result<Output, Failure> {
    match &cli.command {
        Command::Validate { file } => {
            let doc = parse_doc(&read_input(file)?)?;
            let report = validate(&doc);
            if !report.is_valid() {
                return Err(Error::Validation(report).into());
            }
            let ug = Ultragraph::from_doc(&doc)?;
            let tax = ug.taxonomy();
            let lattice = ug.generate_lattice(caps.lattice).ok().map(|l| l.len());
            let json = json!({
                "valid": true,
                "name": ug.name(),
                "vertices": ug.vertex_count(),
                "edges": ug.edge_count(),
                "sinks": set_json(&ug, tax.sinks),
                "regular": set_json(&ug, tax.regular),
                "unital": ug.is_unital(),
                "lattice_size": lattice,
            });
            let text = format!(
                "{}: valid, {} vertices, {} edges, sinks {}, lattice size {}",
                ug.name(),
                ug.vertex_count(),
                ug.edge_count(),
                ug.format_set(tax.sinks),
                lattice.map_or_else(|| format!("> {}", caps.lattice), |n| n.to_string())
            );
            Ok(Output { json, text })
        }

        Command::Classify { file } => {
            let ug = load(file)?;
            let class = trichotomy(&ug, caps.classify())?;
            let regular = is_von_neumann_regular(&ug)?;
            let mut json = class.to_json(&ug);
            json["regular"] = json!(regular);
            if regular && json.get("blocks").is_none() {
                json["blocks"] = json!(matricial_structure(&ug, MatricialMethod::DirectSinkCount)?);
            }
            let mut text = format!("class: {}\nvon Neumann regular: {regular}", class.class_name());
            if let Some(b) = json.get("blocks") {
                text.push_str(&format!("\nblocks: {b}"));
            }
            if let Some(n) = json.get("lambda_size") {
                text.push_str(&format!("\nlambda_size: {n}"));
            }
            text.push_str(&format!("\nwitness: {}", json["witness"]));
            Ok(Output { json, text })
        }

        Command::Ideals { file, closure } => {
            let ug = load(file)?;
            match closure {
                None => {
                    let hs = enumerate_hs(&ug, caps.hs)?;
                    let sets: Vec<Value> = hs.iter().map(|h| set_json(&ug, h.0)).collect();
                    let text = hs.iter().map(|h| ug.format_set(h.0)).collect::<Vec<_>>().join("\n");
                    Ok(Output { json: json!({ "hereditary_saturated": sets }), text })
                }
                Some(seed) => {
                    let seed = ug.vertex_set(seed)?;
                    let h = hereditary_closure(&ug, seed);
                    let (sat, trace) = saturate(&ug, h)?;
                    let stages = trace.named(&ug);
                    let mut text = format!("hereditary closure: {}\n", ug.format_set(h.0));
                    for (i, (hs, s)) in trace.stages.iter().enumerate() {
                        text.push_str(&format!("H{i} = {}  S{i} = {}\n", ug.format_set(hs.0), ug.format_set(*s)));
                    }
                    text.push_str(&format!("saturation: {}", ug.format_set(sat.0)));
                    let json = json!({
                        "hereditary_closure": set_json(&ug, h.0),
                        "trace": serde_json::to_value(stages).expect("trace serializes"),
                        "saturation": set_json(&ug, sat.0),
                    });
                    Ok(Output { json, text })
                }
            }
        }

        Command::Gf { file, f, emit_dot } => {
            let ug = load(file)?;
            let members = resolve_f(&ug, f)?;
            let g = build_gf(&ug, &members)?;
            if let Some(path) = emit_dot {
                fs::write(path, g.to_dot(&ug)).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            }
            let nodes: Vec<String> = (0..g.nodes.len()).map(|i| g.node_label(&ug, i)).collect();
            let arcs: Vec<Value> = g
                .arcs
                .iter()
                .map(|(s, t, l)| json!({ "from": nodes[*s], "to": nodes[*t], "label": l }))
                .collect();
            let acyclic = graph_is_acyclic(&g);
            let mut text = format!("nodes: {}\n", nodes.join(", "));
            for (s, t, l) in &g.arcs {
                text.push_str(&format!("{} -> {} {l}\n", nodes[*s], nodes[*t]));
            }
            text.push_str(&format!("acyclic: {acyclic}"));
            Ok(Output { json: json!({ "nodes": nodes, "arcs": arcs, "acyclic": acyclic }), text })
        }

        Command::Paths { file, max_len } => {
            let ug = load(file)?;
            let paths = enumerate_paths(&ug, *max_len, caps.paths)?;
            let text = paths.iter().map(|p| p.display(&ug)).collect::<Vec<_>>().join("\n");
            let json = json!({
                "count": paths.len(),
                "paths": paths.iter().map(|p| p.to_json(&ug)).collect::<Vec<_>>(),
            });
            Ok(Output { json, text })
        }

        Command::Cycles { file } => {
            let ug = load(file)?;
            let cycles = enumerate_cycles(&ug);
            let mut rows = Vec::new();
            let mut lines = Vec::new();
            for c in &cycles {
                let exit = has_exit(&ug, c);
                lines.push(format!(
                    "{}  exit: {}",
                    c.display(&ug),
                    exit.map_or_else(|| "none".to_string(), |x| x.display(&ug))
                ));
                rows.push(json!({
                    "edges": c.edges().iter().map(|&e| ug.edge_name(e)).collect::<Vec<_>>(),
                    "exit": exit.map(|x| x.display(&ug)),
                }));
            }
            let text = if lines.is_empty() { "no cycles".to_string() } else { lines.join("\n") };
            Ok(Output { json: json!({ "count": cycles.len(), "cycles": rows }), text })
        }

        Command::Eval { file, expr, mode } => {
            let ug = load(file)?;
            let text = expr_text(expr)?;
            let ast = parse_expr(&text, &ug)?;
            let alg = LeavittAlgebra::new(&ug);
            let x = ast.eval(&alg);
            if mode.degree {
                let parts = x.degree_components();
                let text = parts
                    .iter()
                    .map(|(d, p)| format!("{d}: {}", p.display(&ug)))
                    .collect::<Vec<_>>()
                    .join("\n");
                let json = json!({
                    "degrees": parts.iter().map(|(d, p)| (d.to_string(), json!(p.display(&ug)))).collect::<serde_json::Map<_, _>>(),
                });
                return Ok(Output { json, text: if text.is_empty() { "0".into() } else { text } });
            }
            let y = if mode.star { alg.canonicalize(&x.star()) } else { x };
            let shown = y.display(&ug);
            Ok(Output { json: json!({ "value": shown, "terms": y.len() }), text: shown })
        }

        Command::Relations { file } => {
            let ug = load(file)?;
            let report = LeavittAlgebra::new(&ug).check_defining_relations();
            let mut text = format!("checked {} instances, {} failures", report.checked, report.failures.len());
            for f in &report.failures {
                text.push_str(&format!("\n({}) {}", f.relation, f.instance));
            }
            let json = json!({
                "passed": report.passed(),
                "checked": report.checked,
                "failures": serde_json::to_value(&report.failures).expect("failures serialize"),
            });
            Ok(Output { json, text })
        }

        Command::Matrix { file, expr } => {
            let ug = load(file)?;
            let text = expr_text(expr)?;
            let ast = parse_expr(&text, &ug)?;
            let mut cycles = enumerate_cycles(&ug);
            if cycles.len() != 1 {
                return Err(Error::NotOneCycle { found: cycles.len() }.into());
            }
            let corner = CycleCorner::new(&ug, cycles.remove(0), caps.lambda)?;
            let alg = LeavittAlgebra::new(&ug);
            let m = corner.to_matrix(&alg, &ast.eval(&alg))?;
            let index: Vec<String> = m.index().iter().map(|p| p.display(&ug)).collect();
            let text = format!("Λ = [{}]\n{}", index.join(", "), m.display(&ug));
            Ok(Output { json: m.to_json(&ug), text })
        }
    }
}

fn input_label(cli: &Cli) -> String {
    let file = match &cli.command {
        Command::Validate { file }
        | Command::Classify { file }
        | Command::Ideals { file, .. }
        | Command::Gf { file, .. }
        | Command::Paths { file, .. }
        | Command::Cycles { file }
        | Command::Eval { file, .. }
        | Command::Relations { file }
        | Command::Matrix { file, .. } => file,
    };
    file.display().to_string()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let env_caps = match std::env::var(caps::ENV_VAR) {
        Ok(v) => match Caps::from_env_value(&v) {
            Ok(c) => c,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        },
        Err(_) => Caps::default(),
    };
    let caps = Caps {
        lattice: cli.lattice_cap.unwrap_or(env_caps.lattice),
        paths: cli.path_cap.unwrap_or(env_caps.paths),
        hs: cli.hs_cap.unwrap_or(env_caps.hs),
        lambda: cli.lambda_cap.unwrap_or(env_caps.lambda),
    };
    let input = input_label(&cli);

    match run(&cli, caps) {
        Ok(out) => {
            if cli.json {
                println!("{}", emit_report(&input, out.json));
            } else {
                println!("{}", out.text);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(e)) => {
            if cli.json {
                println!("{}", emit_error(&input, &e));
            } else {
                eprintln!("error[{}]: {e}", e.code());
                if let Error::Validation(report) = &e {
                    eprintln!("{report}");
                }
            }
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
