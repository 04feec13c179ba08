//! Command-line interface. Every subcommand reads declarations from a
//! document (path or `-` for stdin), runs one library operation, and
//! prints either aligned text or a JSON object
//! `{"command": ..., "inputs": ..., "result": ...}` with all integers
//! rendered as decimal strings.
//!
//! Exit codes: 0 success, 2 parse error, 3 semantic or validation
//! error, 4 oracle disagreement, 5 usage error. Diagnostics go to the
//! error stream only; identical invocations produce byte-identical
//! output.

use crate::category::{grothendieck, nerve, poset_as_category};
use crate::dsl::{
    self, category_to_decl, parse, serialize, sset_to_decl, Decl, Document, Entities,
};
use crate::homology::betti_numbers;
use crate::mobius::{
    class_mobius, component_partition, hocolim_chi, mobius_by_peeling, mobius_function,
    ClassPartition, MobiusTable,
};
use crate::oracle::{
    self, diagram_instance_document, oracle_grothendieck, oracle_pushout, oracle_trivial_bundle,
    random_diagram, random_poset, random_pushout_instance, random_sset, DiagramBounds,
    OracleReport, SplitMix64, SsetBounds,
};
use crate::sset::{cylinder, double_mapping_cylinder, euler_char_combinatorial, product};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::io::{Read, Write};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_SEMANTIC: i32 = 3;
pub const EXIT_DISAGREE: i32 = 4;
pub const EXIT_USAGE: i32 = 5;

#[derive(Parser)]
#[command(
    name = "hocolim",
    version,
    about = "Mobius functions of finite simplicial sets and Euler characteristics of glued spaces"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check every declaration in a document and report violations.
    Validate { file: String },
    /// Euler characteristic by counting and by homology, with Betti numbers.
    Euler {
        file: String,
        #[arg(long)]
        sset: String,
    },
    /// Per-vertex Mobius values, optionally aggregated over classes.
    Mobius {
        file: String,
        #[arg(long)]
        sset: String,
        /// Aggregate over edge-connected components.
        #[arg(long, value_parser = ["components"], conflicts_with = "partition")]
        classes: Option<String>,
        /// Aggregate over a partition file (one block of vertex names per line).
        #[arg(long)]
        partition: Option<String>,
        /// Compute by peeling top cells instead of direct counting.
        #[arg(long)]
        peeling: bool,
    },
    /// Weighted Mobius sum over the vertices of a set.
    #[command(name = "hocolim-chi")]
    HocolimChi {
        file: String,
        #[arg(long)]
        sset: String,
        #[arg(long)]
        weights: String,
    },
    /// Nerve of a category (or of a poset, taken as a category).
    Nerve {
        file: String,
        #[arg(long)]
        category: String,
        #[arg(short, long)]
        out: Option<String>,
    },
    /// Total category of a poset-valued diagram.
    Grothendieck {
        file: String,
        #[arg(long)]
        diagram: String,
        #[arg(short, long)]
        out: Option<String>,
    },
    /// Product of two simplicial sets.
    Product {
        file: String,
        #[arg(long)]
        sset: String,
        #[arg(long = "sset-b")]
        sset_b: String,
        #[arg(short, long)]
        out: Option<String>,
    },
    /// Cylinder over a simplicial set.
    Cylinder {
        file: String,
        #[arg(long)]
        sset: String,
        #[arg(short, long)]
        out: Option<String>,
    },
    /// Double mapping cylinder of two maps out of a common source.
    Pushout {
        file: String,
        #[arg(long = "map")]
        map_f: String,
        #[arg(long = "map-g")]
        map_g: String,
        #[arg(short, long)]
        out: Option<String>,
    },
    /// Compare the weighted Mobius formula with an explicit construction.
    Oracle {
        file: String,
        #[arg(long, value_enum)]
        kind: OracleKind,
        /// Seed for generated instances.
        #[arg(long)]
        seed: Option<u64>,
        /// Number of generated instances.
        #[arg(long)]
        count: Option<usize>,
        /// Pushout instance from the document: the first map.
        #[arg(long = "map")]
        map_f: Option<String>,
        /// Pushout instance from the document: the second map.
        #[arg(long = "map-g")]
        map_g: Option<String>,
        /// Diagram instance from the document.
        #[arg(long)]
        diagram: Option<String>,
        /// Bundle instance from the document: the fiber set.
        #[arg(long)]
        fiber: Option<String>,
        /// Bundle instance from the document: the base set.
        #[arg(long)]
        base: Option<String>,
    },
    /// Generate a seeded random instance and print it as a document.
    Gen {
        #[arg(long, value_enum)]
        kind: GenKind,
        #[arg(long)]
        seed: u64,
        #[arg(short, long)]
        out: Option<String>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OracleKind {
    Pushout,
    Grothendieck,
    Bundle,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenKind {
    Poset,
    Sset,
    Diagram,
}

pub fn run_from_env() -> i32 {
    let args: Vec<String> = std::env::args().collect();
    let mut out = std::io::stdout();
    let mut err = std::io::stderr();
    run(&args, &mut out, &mut err)
}

pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e);
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e);
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(&cli, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "{}", f.message);
            f.code
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

fn fail(code: i32, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| fail(EXIT_USAGE, format!("cannot read stdin: {}", e)))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| fail(EXIT_USAGE, format!("cannot read '{}': {}", path, e)))
    }
}

fn load(path: &str) -> Result<Entities, Failure> {
    let text = read_input(path)?;
    let doc = parse(&text).map_err(|e| fail(EXIT_PARSE, format!("parse error: {}", e)))?;
    dsl::elaborate(&doc).map_err(|errors| {
        let lines: Vec<String> = errors.iter().map(|e| format!("error: {}", e)).collect();
        fail(EXIT_SEMANTIC, lines.join("\n"))
    })
}

fn emit(
    format: Format,
    out: &mut dyn Write,
    command: &str,
    inputs: Value,
    result: Value,
    text: String,
) -> i32 {
    match format {
        Format::Text => {
            let _ = write!(out, "{}", text);
        }
        Format::Json => {
            let payload = json!({
                "command": command,
                "inputs": inputs,
                "result": result,
            });
            let _ = writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&payload).expect("serializable")
            );
        }
    }
    EXIT_OK
}

fn counts_json(counts: &[usize]) -> Value {
    Value::Array(counts.iter().map(|c| Value::String(c.to_string())).collect())
}

/// Writes the produced document to the output file when `-o` is given;
/// otherwise text mode streams it to stdout (JSON mode embeds it in the
/// payload instead).
fn write_document(
    doc: &Document,
    out_path: &Option<String>,
    format: Format,
    out: &mut dyn Write,
) -> Result<String, Failure> {
    let text = serialize(doc);
    match out_path {
        Some(path) => {
            std::fs::write(path, &text)
                .map_err(|e| fail(EXIT_USAGE, format!("cannot write '{}': {}", path, e)))?;
        }
        None => {
            if format == Format::Text {
                let _ = write!(out, "{}", text);
            }
        }
    }
    Ok(text)
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match &cli.cmd {
        Cmd::Validate { file } => {
            let text = read_input(file)?;
            let doc =
                parse(&text).map_err(|e| fail(EXIT_PARSE, format!("parse error: {}", e)))?;
            match dsl::elaborate(&doc) {
                Ok(ents) => {
                    let summary = format!(
                        "ok: {} declaration(s) validate\n",
                        ents.ssets.len()
                            + ents.maps.len()
                            + ents.posets.len()
                            + ents.categories.len()
                            + ents.diagrams.len()
                            + ents.weights.len()
                    );
                    Ok(emit(
                        cli.format,
                        out,
                        "validate",
                        json!({"file": file}),
                        json!({"valid": true, "diagnostics": []}),
                        summary,
                    ))
                }
                Err(errors) => {
                    let mut text = String::new();
                    for e in &errors {
                        text.push_str(&format!("violation: {}\n", e));
                    }
                    let diags: Vec<Value> = errors
                        .iter()
                        .map(|e| Value::String(e.to_string()))
                        .collect();
                    emit(
                        cli.format,
                        out,
                        "validate",
                        json!({"file": file}),
                        json!({"valid": false, "diagnostics": diags}),
                        text,
                    );
                    Ok(EXIT_SEMANTIC)
                }
            }
        }

        Cmd::Euler { file, sset } => {
            let ents = load(file)?;
            let k = ents
                .ssets
                .get(sset)
                .ok_or_else(|| fail(EXIT_SEMANTIC, format!("no sset named '{}'", sset)))?;
            let counts = k.counts_by_dimension();
            let chi = euler_char_combinatorial(k);
            let betti = betti_numbers(k)
                .map_err(|e| fail(EXIT_SEMANTIC, e.to_string()))?;
            let chi_h = betti.euler();
            let text = format!(
                "counts = {:?}\nchi = {}\nbetti = {:?}\nchi_via_homology = {}\n",
                counts, chi, betti.0, chi_h
            );
            Ok(emit(
                cli.format,
                out,
                "euler",
                json!({"file": file, "sset": sset}),
                json!({
                    "counts": counts_json(&counts),
                    "chi": chi.to_string(),
                    "betti": counts_json(&betti.0),
                    "chi_via_homology": chi_h.to_string(),
                }),
                text,
            ))
        }

        Cmd::Mobius {
            file,
            sset,
            classes,
            partition,
            peeling,
        } => {
            let ents = load(file)?;
            let k = ents
                .ssets
                .get(sset)
                .ok_or_else(|| fail(EXIT_SEMANTIC, format!("no sset named '{}'", sset)))?;
            let table: MobiusTable = if *peeling {
                mobius_by_peeling(k)
            } else {
                mobius_function(k)
            }
            .map_err(|e| fail(EXIT_SEMANTIC, e.to_string()))?;

            let chosen: Option<ClassPartition> = if classes.is_some() {
                Some(
                    component_partition(k)
                        .map_err(|e| fail(EXIT_SEMANTIC, e.to_string()))?,
                )
            } else if let Some(pfile) = partition {
                let ptext = read_input(pfile)?;
                Some(parse_partition(&ptext, k).map_err(|m| fail(EXIT_SEMANTIC, m))?)
            } else {
                None
            };

            let mut text = String::new();
            let result = match &chosen {
                None => {
                    let mut mu = serde_json::Map::new();
                    for (v, value) in table.iter() {
                        let label = k.label(v).unwrap_or("?").to_string();
                        text.push_str(&format!("mu({}) = {}\n", label, value));
                        mu.insert(label, Value::String(value.to_string()));
                    }
                    text.push_str(&format!("sum = {}\n", table.sum()));
                    json!({"mu": Value::Object(mu), "sum": table.sum().to_string()})
                }
                Some(p) => {
                    let sums =
                        class_mobius(k, p).map_err(|e| fail(EXIT_SEMANTIC, e.to_string()))?;
                    let mut arr = Vec::new();
                    for (block, mu) in p.blocks().iter().zip(&sums) {
                        let names: Vec<&str> =
                            block.iter().map(|v| k.label(*v).unwrap_or("?")).collect();
                        text.push_str(&format!(
                            "mu[{{{}}}] = {}\n",
                            names.join(", "),
                            mu
                        ));
                        arr.push(json!({
                            "vertices": names,
                            "mu": mu.to_string(),
                        }));
                    }
                    text.push_str(&format!("sum = {}\n", table.sum()));
                    json!({"classes": arr, "sum": table.sum().to_string()})
                }
            };
            Ok(emit(
                cli.format,
                out,
                "mobius",
                json!({
                    "file": file,
                    "sset": sset,
                    "peeling": peeling,
                    "classes": classes,
                    "partition": partition,
                }),
                result,
                text,
            ))
        }

        Cmd::HocolimChi {
            file,
            sset,
            weights,
        } => {
            let ents = load(file)?;
            let k = ents
                .ssets
                .get(sset)
                .ok_or_else(|| fail(EXIT_SEMANTIC, format!("no sset named '{}'", sset)))?;
            let (over, w) = ents
                .weights
                .get(weights)
                .ok_or_else(|| fail(EXIT_SEMANTIC, format!("no weights named '{}'", weights)))?;
            if over != sset {
                return Err(fail(
                    EXIT_SEMANTIC,
                    format!("weights '{}' are over '{}', not '{}'", weights, over, sset),
                ));
            }
            let chi = hocolim_chi(k, w).map_err(|e| fail(EXIT_SEMANTIC, e.to_string()))?;
            let strings: Vec<String> = chi.iter().map(|x| x.to_string()).collect();
            let text = format!("chi = [{}]\n", strings.join(", "));
            Ok(emit(
                cli.format,
                out,
                "hocolim-chi",
                json!({"file": file, "sset": sset, "weights": weights}),
                json!({ "chi": strings }),
                text,
            ))
        }

        Cmd::Nerve {
            file,
            category,
            out: out_path,
        } => {
            let ents = load(file)?;
            let cat = if let Some(c) = ents.categories.get(category) {
                c.clone()
            } else if let Some(p) = ents.posets.get(category) {
                poset_as_category(p)
            } else {
                return Err(fail(
                    EXIT_SEMANTIC,
                    format!("no category or poset named '{}'", category),
                ));
            };
            let n = nerve(&cat).map_err(|e| fail(EXIT_SEMANTIC, e.to_string()))?;
            let doc = Document {
                decls: vec![Decl::Sset(sset_to_decl("nerve", &n))],
            };
            let text = write_document(&doc, out_path, cli.format, out)?;
            Ok(emit_document(
                cli.format,
                out,
                "nerve",
                json!({"file": file, "category": category, "out": out_path}),
                &n.counts_by_dimension(),
                text,
                out_path.is_some(),
            ))
        }

        Cmd::Grothendieck {
            file,
            diagram,
            out: out_path,
        } => {
            let ents = load(file)?;
            let d = ents
                .diagrams
                .get(diagram)
                .ok_or_else(|| fail(EXIT_SEMANTIC, format!("no diagram named '{}'", diagram)))?;
            let total = grothendieck(d).map_err(|e| fail(EXIT_SEMANTIC, e.to_string()))?;
            let doc = Document {
                decls: vec![Decl::Category(category_to_decl("total", &total))],
            };
            let text = write_document(&doc, out_path, cli.format, out)?;
            let n = nerve(&total).map_err(|e| fail(EXIT_SEMANTIC, e.to_string()))?;
            Ok(emit_document(
                cli.format,
                out,
                "grothendieck",
                json!({"file": file, "diagram": diagram, "out": out_path}),
                &n.counts_by_dimension(),
                text,
                out_path.is_some(),
            ))
        }

        Cmd::Product {
            file,
            sset,
            sset_b,
            out: out_path,
        } => {
            let ents = load(file)?;
            let a = ents
                .ssets
                .get(sset)
                .ok_or_else(|| fail(EXIT_SEMANTIC, format!("no sset named '{}'", sset)))?;
            let b = ents
                .ssets
                .get(sset_b)
                .ok_or_else(|| fail(EXIT_SEMANTIC, format!("no sset named '{}'", sset_b)))?;
            let p = product(a, b);
            let doc = Document {
                decls: vec![Decl::Sset(sset_to_decl("product", &p))],
            };
            let text = write_document(&doc, out_path, cli.format, out)?;
            Ok(emit_document(
                cli.format,
                out,
                "product",
                json!({"file": file, "sset": sset, "sset_b": sset_b, "out": out_path}),
                &p.counts_by_dimension(),
                text,
                out_path.is_some(),
            ))
        }

        Cmd::Cylinder {
            file,
            sset,
            out: out_path,
        } => {
            let ents = load(file)?;
            let a = ents
                .ssets
                .get(sset)
                .ok_or_else(|| fail(EXIT_SEMANTIC, format!("no sset named '{}'", sset)))?;
            let c = cylinder(a);
            let doc = Document {
                decls: vec![Decl::Sset(sset_to_decl("cylinder", &c))],
            };
            let text = write_document(&doc, out_path, cli.format, out)?;
            Ok(emit_document(
                cli.format,
                out,
                "cylinder",
                json!({"file": file, "sset": sset, "out": out_path}),
                &c.counts_by_dimension(),
                text,
                out_path.is_some(),
            ))
        }

        Cmd::Pushout {
            file,
            map_f,
            map_g,
            out: out_path,
        } => {
            let ents = load(file)?;
            let f = ents
                .maps
                .get(map_f)
                .ok_or_else(|| fail(EXIT_SEMANTIC, format!("no map named '{}'", map_f)))?;
            let g = ents
                .maps
                .get(map_g)
                .ok_or_else(|| fail(EXIT_SEMANTIC, format!("no map named '{}'", map_g)))?;
            let m = double_mapping_cylinder(f, g)
                .map_err(|e| fail(EXIT_SEMANTIC, e.to_string()))?;
            let doc = Document {
                decls: vec![Decl::Sset(sset_to_decl("pushout", &m))],
            };
            let text = write_document(&doc, out_path, cli.format, out)?;
            Ok(emit_document(
                cli.format,
                out,
                "pushout",
                json!({"file": file, "map": map_f, "map_g": map_g, "out": out_path}),
                &m.counts_by_dimension(),
                text,
                out_path.is_some(),
            ))
        }

        Cmd::Oracle {
            file,
            kind,
            seed,
            count,
            map_f,
            map_g,
            diagram,
            fiber,
            base,
        } => {
            let ents = load(file)?;
            let reports = collect_oracle_reports(
                &ents, *kind, *seed, *count, map_f, map_g, diagram, fiber, base,
            )?;
            let mut text = String::new();
            let mut arr = Vec::new();
            for (label, r) in &reports {
                text.push_str(&format!(
                    "{}: formula = {}, construction = {}, {}\n",
                    label,
                    r.formula_value,
                    r.construction_value,
                    if r.agree { "agree" } else { "DISAGREE" }
                ));
                arr.push(json!({
                    "label": label,
                    "formula": r.formula_value.to_string(),
                    "construction": r.construction_value.to_string(),
                    "agree": r.agree,
                    "witness": r.witness,
                    "instance": r.instance,
                }));
            }
            let all_agree = reports.iter().all(|(_, r)| r.agree);
            text.push_str(&format!(
                "{} of {} instances agree\n",
                reports.iter().filter(|(_, r)| r.agree).count(),
                reports.len()
            ));
            for (label, r) in &reports {
                if !r.agree {
                    let _ = writeln!(err, "disagreement at {}: {}", label, r.witness);
                    let _ = writeln!(err, "{}", r.instance);
                }
            }
            let code = emit(
                cli.format,
                out,
                "oracle",
                json!({
                    "file": file,
                    "kind": match kind {
                        OracleKind::Pushout => "pushout",
                        OracleKind::Grothendieck => "grothendieck",
                        OracleKind::Bundle => "bundle",
                    },
                    "seed": seed,
                    "count": count,
                }),
                json!({"reports": arr, "all_agree": all_agree}),
                text,
            );
            Ok(if all_agree { code } else { EXIT_DISAGREE })
        }

        Cmd::Gen {
            kind,
            seed,
            out: out_path,
        } => {
            let doc = match kind {
                GenKind::Poset => Document {
                    decls: vec![Decl::Poset(dsl::poset_to_decl(
                        "P",
                        &random_poset(*seed, 5),
                    ))],
                },
                GenKind::Sset => Document {
                    decls: vec![Decl::Sset(sset_to_decl(
                        "K",
                        &random_sset(*seed, &SsetBounds::default()),
                    ))],
                },
                GenKind::Diagram => {
                    diagram_instance_document(&random_diagram(*seed, &DiagramBounds::default()))
                }
            };
            let text = write_document(&doc, out_path, cli.format, out)?;
            Ok(emit_document(
                cli.format,
                out,
                "gen",
                json!({
                    "kind": match kind {
                        GenKind::Poset => "poset",
                        GenKind::Sset => "sset",
                        GenKind::Diagram => "diagram",
                    },
                    "seed": seed.to_string(),
                    "out": out_path,
                }),
                &[],
                text,
                out_path.is_some(),
            ))
        }
    }
}

/// Text mode already streamed the document in `write_document`; JSON
/// mode wraps it with the construction's generator counts.
fn emit_document(
    format: Format,
    out: &mut dyn Write,
    command: &str,
    inputs: Value,
    counts: &[usize],
    document: String,
    wrote_file: bool,
) -> i32 {
    match format {
        Format::Text => EXIT_OK,
        Format::Json => {
            let _ = wrote_file;
            let payload = json!({
                "command": command,
                "inputs": inputs,
                "result": {
                    "counts": counts_json(counts),
                    "document": document,
                },
            });
            let _ = writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&payload).expect("serializable")
            );
            EXIT_OK
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn collect_oracle_reports(
    ents: &Entities,
    kind: OracleKind,
    seed: Option<u64>,
    count: Option<usize>,
    map_f: &Option<String>,
    map_g: &Option<String>,
    diagram: &Option<String>,
    fiber: &Option<String>,
    base: &Option<String>,
) -> Result<Vec<(String, OracleReport)>, Failure> {
    let mut reports = Vec::new();
    match kind {
        OracleKind::Pushout => {
            if let (Some(fname), Some(gname)) = (map_f, map_g) {
                let f = ents
                    .maps
                    .get(fname)
                    .ok_or_else(|| fail(EXIT_SEMANTIC, format!("no map named '{}'", fname)))?;
                let g = ents
                    .maps
                    .get(gname)
                    .ok_or_else(|| fail(EXIT_SEMANTIC, format!("no map named '{}'", gname)))?;
                let r = oracle_pushout(f, g).map_err(|e| fail(EXIT_SEMANTIC, e.to_string()))?;
                reports.push((format!("{} / {}", fname, gname), r));
            } else {
                let bounds = SsetBounds {
                    max_vertices: 4,
                    max_dim: 2,
                    max_generators: 30,
                    max_attachments: 6,
                };
                let mut stream = SplitMix64::new(seed.unwrap_or(1));
                for i in 0..count.unwrap_or(20) {
                    let instance_seed = stream.next_u64();
                    let inst = random_pushout_instance(instance_seed, &bounds);
                    let r = oracle_pushout(&inst.f, &inst.g)
                        .map_err(|e| fail(EXIT_SEMANTIC, e.to_string()))?;
                    reports.push((format!("instance {} (seed {})", i, instance_seed), r));
                }
            }
        }
        OracleKind::Grothendieck => {
            if let Some(dname) = diagram {
                let d = ents
                    .diagrams
                    .get(dname)
                    .ok_or_else(|| fail(EXIT_SEMANTIC, format!("no diagram named '{}'", dname)))?;
                let r =
                    oracle_grothendieck(d).map_err(|e| fail(EXIT_SEMANTIC, e.to_string()))?;
                reports.push((dname.clone(), r));
            } else {
                let bounds = DiagramBounds::default();
                let mut stream = SplitMix64::new(seed.unwrap_or(1));
                for i in 0..count.unwrap_or(20) {
                    let instance_seed = stream.next_u64();
                    let d = random_diagram(instance_seed, &bounds);
                    let r = oracle_grothendieck(&d)
                        .map_err(|e| fail(EXIT_SEMANTIC, e.to_string()))?;
                    reports.push((format!("instance {} (seed {})", i, instance_seed), r));
                }
            }
        }
        OracleKind::Bundle => {
            if let (Some(fname), Some(bname)) = (fiber, base) {
                let f = ents
                    .ssets
                    .get(fname)
                    .ok_or_else(|| fail(EXIT_SEMANTIC, format!("no sset named '{}'", fname)))?;
                let b = ents
                    .ssets
                    .get(bname)
                    .ok_or_else(|| fail(EXIT_SEMANTIC, format!("no sset named '{}'", bname)))?;
                let r = oracle_trivial_bundle(f, b)
                    .map_err(|e| fail(EXIT_SEMANTIC, e.to_string()))?;
                reports.push((format!("{} x {}", fname, bname), r));
            } else {
                let bounds = SsetBounds {
                    max_vertices: 4,
                    max_dim: 2,
                    max_generators: 20,
                    max_attachments: 5,
                };
                let mut stream = SplitMix64::new(seed.unwrap_or(1));
                for i in 0..count.unwrap_or(20) {
                    let instance_seed = stream.next_u64();
                    let f = random_sset(instance_seed, &bounds);
                    let b = oracle::random_connected_sset(instance_seed ^ 0x5555, &bounds);
                    let r = oracle_trivial_bundle(&f, &b)
                        .map_err(|e| fail(EXIT_SEMANTIC, e.to_string()))?;
                    reports.push((format!("instance {} (seed {})", i, instance_seed), r));
                }
            }
        }
    }
    Ok(reports)
}

/// One block of whitespace-separated vertex names per nonempty line;
/// `#` starts a comment.
fn parse_partition(
    text: &str,
    k: &crate::sset::SimplicialSet,
) -> Result<ClassPartition, String> {
    let mut blocks = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut block = Vec::new();
        for name in line.split_whitespace() {
            let id = k
                .id_by_label(name)
                .filter(|id| id.dim == 0)
                .ok_or_else(|| format!("'{}' is not a vertex", name))?;
            block.push(id);
        }
        blocks.push(block);
    }
    ClassPartition::new(k, blocks).map_err(|e| e.to_string())
}
