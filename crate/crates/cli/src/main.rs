//! Command-line surface of the toolkit: lattice and system validation,
//! spectra, duality round trips, Kripke evaluation, countermodel search, and
//! DOT export.
//!
//! Exit codes: 0 for ok/true outcomes, 1 for mathematical failures or false
//! outcomes (with findings on stdout), 2 for input errors (reported on
//! stderr). File formats are documented in the core `files` module.

// Table math reads better with explicit indices.
#![allow(clippy::needless_range_loop)]

mod dot;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use esakia_core::files::{
    parse_hom_file, parse_lattice_file, parse_model_file, parse_morphism_file, parse_poset_file,
    parse_system_file, to_json_string, LatticeFile, ModelFile, SpectrumFile, SystemFile,
};
use esakia_core::lattice::{
    build_lattice, check_hom, residuate, HeytingAlgebra, HomKind, LatticeSpec,
};
use esakia_core::topsys::{
    build_system, canonical_system, check_morphism, unit_and_triangle, ITopSystem, UniquenessCheck,
};
use esakia_core::{
    countermodel_search, dualize_hom, model_from_system, roundtrip_algebra, roundtrip_poset,
    spectrum, Formula, Poset,
};

#[derive(Parser)]
#[command(
    name = "esakia",
    version,
    about = "Finite Heyting algebras, their dual posets and topological systems, and intuitionistic Kripke models"
)]
struct Cli {
    /// Output rendering.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Build a lattice file and check all lattice laws.
    ValidateLattice { file: PathBuf },
    /// Print the implication table of a lattice.
    Residuate { file: PathBuf },
    /// Enumerate the two-valued homs (prime filters) of a lattice.
    Spectrum { file: PathBuf },
    /// Build the up-set algebra of a poset.
    UpsetAlgebra { file: PathBuf },
    /// Check a duality round trip, starting from a poset or an algebra.
    Roundtrip {
        #[arg(long, conflicts_with = "algebra")]
        poset: Option<PathBuf>,
        #[arg(long)]
        algebra: Option<PathBuf>,
    },
    /// Decide whether every principal up-set of a poset is a chain.
    IsForest { file: PathBuf },
    /// Dualize an algebra homomorphism to a map of spectra.
    Dualize { file: PathBuf },
    /// Validate the satisfaction axioms of a system file.
    ValidateSystem { file: PathBuf },
    /// Report whether a system is Heyting algebraic, Gödel algebraic, and T0.
    Classify { file: PathBuf },
    /// Build the canonical system over a lattice's spectrum.
    Canonical { file: PathBuf },
    /// Check a morphism between two system files.
    CheckMorphism {
        morphism: PathBuf,
        source: PathBuf,
        target: PathBuf,
    },
    /// Factor a morphism into a canonical system through the unit.
    UnitCheck {
        system: PathBuf,
        target_lattice: PathBuf,
        morphism: PathBuf,
    },
    /// Extract the Kripke model of a system.
    ToKripke { system: PathBuf },
    /// Evaluate a formula at a world of a model.
    Eval {
        model: PathBuf,
        world: String,
        formula: String,
    },
    /// Search for a countermodel over all frames up to a size bound.
    Countermodel {
        formula: String,
        #[arg(long, default_value_t = 6)]
        max_size: usize,
    },
    /// Render the Hasse diagram of a lattice, poset, or model frame.
    ExportDot { file: PathBuf },
}

/// A finished command: mathematical outcome plus both renderings.
struct Outcome {
    ok: bool,
    json: Value,
    text: String,
}

impl Outcome {
    fn ok(json: Value, text: impl Into<String>) -> Outcome {
        Outcome {
            ok: true,
            json,
            text: text.into(),
        }
    }

    fn fail(json: Value, text: impl Into<String>) -> Outcome {
        Outcome {
            ok: false,
            json,
            text: text.into(),
        }
    }
}

/// Input errors: unreadable files, malformed JSON, unresolvable names.
struct InputError(String);

type CommandResult = Result<Outcome, InputError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(outcome) => {
            let rendered = match cli.format {
                Format::Text => {
                    let mut t = outcome.text.clone();
                    if !t.ends_with('\n') {
                        t.push('\n');
                    }
                    t
                }
                Format::Json => to_json_string(&outcome.json),
            };
            if let Some(path) = &cli.out {
                if let Err(e) = fs::write(path, &rendered) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                print!("{rendered}");
            }
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(InputError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: &Command) -> CommandResult {
    match command {
        Command::ValidateLattice { file } => validate_lattice(file),
        Command::Residuate { file } => residuate_cmd(file),
        Command::Spectrum { file } => spectrum_cmd(file),
        Command::UpsetAlgebra { file } => upset_algebra_cmd(file),
        Command::Roundtrip { poset, algebra } => roundtrip_cmd(poset.as_ref(), algebra.as_ref()),
        Command::IsForest { file } => is_forest_cmd(file),
        Command::Dualize { file } => dualize_cmd(file),
        Command::ValidateSystem { file } => validate_system_cmd(file),
        Command::Classify { file } => classify_cmd(file),
        Command::Canonical { file } => canonical_cmd(file),
        Command::CheckMorphism {
            morphism,
            source,
            target,
        } => check_morphism_cmd(morphism, source, target),
        Command::UnitCheck {
            system,
            target_lattice,
            morphism,
        } => unit_check_cmd(system, target_lattice, morphism),
        Command::ToKripke { system } => to_kripke_cmd(system),
        Command::Eval {
            model,
            world,
            formula,
        } => eval_cmd(model, world, formula),
        Command::Countermodel { formula, max_size } => countermodel_cmd(formula, *max_size),
        Command::ExportDot { file } => export_dot_cmd(file),
    }
}

fn read(path: &PathBuf) -> Result<String, InputError> {
    fs::read_to_string(path).map_err(|e| InputError(format!("cannot read {}: {e}", path.display())))
}

fn input<E: std::fmt::Display>(e: E) -> InputError {
    InputError(e.to_string())
}

fn load_lattice_spec(path: &PathBuf) -> Result<LatticeSpec, InputError> {
    parse_lattice_file(&read(path)?)
        .map_err(input)?
        .to_spec()
        .map_err(input)
}

/// Builds and residuates; mathematical failures become `Err(Outcome)` so the
/// caller can return them as findings with exit code 1.
fn load_algebra(path: &PathBuf) -> Result<Result<HeytingAlgebra, Box<Outcome>>, InputError> {
    let spec = load_lattice_spec(path)?;
    Ok(algebra_of(&spec))
}

fn algebra_of(spec: &LatticeSpec) -> Result<HeytingAlgebra, Box<Outcome>> {
    let lattice = match build_lattice(spec) {
        Ok(l) => l,
        Err(e) => {
            return Err(Box::new(Outcome::fail(
                json!({"status": "fail", "error": e.to_string()}),
                format!("fail: {e}"),
            )))
        }
    };
    match residuate(&lattice) {
        Ok(a) => Ok(a),
        Err(e) => Err(Box::new(Outcome::fail(
            json!({"status": "fail", "error": e.to_string()}),
            format!("fail: {e}"),
        ))),
    }
}

fn load_poset(path: &PathBuf) -> Result<Poset, InputError> {
    parse_poset_file(&read(path)?)
        .map_err(input)?
        .to_poset()
        .map_err(input)
}

fn load_system(
    path: &PathBuf,
) -> Result<Result<(SystemFile, ITopSystem), Box<Outcome>>, InputError> {
    let file = parse_system_file(&read(path)?).map_err(input)?;
    let spec = file.lattice.to_spec().map_err(input)?;
    let algebra = match algebra_of(&spec) {
        Ok(a) => a,
        Err(out) => return Ok(Err(out)),
    };
    let sat = file.resolve_sat(&algebra).map_err(input)?;
    match build_system(file.points.clone(), algebra, sat) {
        Ok(system) => Ok(Ok((file, system))),
        Err(e) => Ok(Err(Box::new(Outcome::fail(
            json!({"status": "fail", "error": e.to_string()}),
            format!("fail: {e}"),
        )))),
    }
}

macro_rules! algebra_or_return {
    ($expr:expr) => {
        match $expr {
            Ok(value) => value,
            Err(outcome) => return Ok(*outcome),
        }
    };
}

fn validate_lattice(file: &PathBuf) -> CommandResult {
    let algebra = algebra_or_return!(load_algebra(file)?);
    let text = format!(
        "ok: bounded distributive lattice with {} elements\nelements (canonical order): {}\nbottom: {}  top: {}\ngoedel: {}",
        algebra.n(),
        algebra.names().join(", "),
        algebra.name(algebra.bottom()),
        algebra.name(algebra.top()),
        algebra.is_goedel(),
    );
    Ok(Outcome::ok(
        json!({
            "status": "ok",
            "elements": algebra.names(),
            "bottom": algebra.name(algebra.bottom()),
            "top": algebra.name(algebra.top()),
            "goedel": algebra.is_goedel(),
        }),
        text,
    ))
}

fn residuate_cmd(file: &PathBuf) -> CommandResult {
    let algebra = algebra_or_return!(load_algebra(file)?);
    let n = algebra.n();
    let table: Vec<Vec<String>> = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| algebra.name(algebra.imp(a, b)).to_string())
                .collect()
        })
        .collect();
    let mut text = format!("implication table ({n} elements)\n");
    for a in 0..n {
        for b in 0..n {
            text.push_str(&format!(
                "{} -> {} = {}\n",
                algebra.name(a),
                algebra.name(b),
                table[a][b]
            ));
        }
    }
    Ok(Outcome::ok(
        json!({"elements": algebra.names(), "table": table}),
        text.trim_end().to_string(),
    ))
}

fn spectrum_cmd(file: &PathBuf) -> CommandResult {
    let algebra = algebra_or_return!(load_algebra(file)?);
    let sp = spectrum(&algebra);
    let spectrum_file = SpectrumFile::of(&sp, &algebra);
    let mut text = format!("{} hom(s)\n", sp.len());
    for (i, hom) in sp.homs().iter().enumerate() {
        let bits: String = hom
            .bits()
            .iter()
            .map(|&b| if b { '1' } else { '0' })
            .collect();
        text.push_str(&format!(
            "h{i}: bits={bits} filter={{{}}}\n",
            hom.filter_names(&algebra).join(","),
        ));
    }
    for (x, y) in &spectrum_file.leq {
        text.push_str(&format!("{x} R {y}\n"));
    }
    Ok(Outcome::ok(
        serde_json::to_value(&spectrum_file).expect("serializable"),
        text.trim_end().to_string(),
    ))
}

fn upset_algebra_cmd(file: &PathBuf) -> CommandResult {
    let poset = load_poset(file)?;
    let algebra = esakia_core::upset_algebra(&poset);
    let lattice_file = LatticeFile::of(algebra.lattice());
    let text = format!(
        "up-set algebra with {} elements over {} point(s)\nelements: {}",
        algebra.n(),
        poset.len(),
        algebra.names().join(", "),
    );
    Ok(Outcome::ok(
        serde_json::to_value(&lattice_file).expect("serializable"),
        text,
    ))
}

fn roundtrip_cmd(poset: Option<&PathBuf>, algebra: Option<&PathBuf>) -> CommandResult {
    match (poset, algebra) {
        (Some(path), None) => {
            let poset = load_poset(path)?;
            match roundtrip_poset(&poset) {
                Ok(rt) => {
                    let forward: Vec<Value> = (0..poset.len())
                        .map(|x| {
                            json!({
                                "point": poset.name(x),
                                "hom": format!("h{}", rt.iso.forward[x]),
                            })
                        })
                        .collect();
                    Ok(Outcome::ok(
                        json!({
                            "status": "ok",
                            "kind": "poset",
                            "points": poset.len(),
                            "upset_algebra_size": rt.algebra.n(),
                            "forward": forward,
                        }),
                        format!(
                            "ok: poset with {} point(s) is order-isomorphic to the spectrum of its up-set algebra ({} elements)",
                            poset.len(),
                            rt.algebra.n(),
                        ),
                    ))
                }
                Err(e) => Ok(Outcome::fail(
                    json!({"status": "fail", "error": e.to_string()}),
                    format!("fail: {e}"),
                )),
            }
        }
        (None, Some(path)) => {
            let alg = algebra_or_return!(load_algebra(path)?);
            match roundtrip_algebra(&alg) {
                Ok(rt) => {
                    let forward: Vec<Value> = (0..alg.n())
                        .map(|a| {
                            json!({
                                "element": alg.name(a),
                                "upset": rt.image.name(rt.iso.forward[a]),
                            })
                        })
                        .collect();
                    Ok(Outcome::ok(
                        json!({
                            "status": "ok",
                            "kind": "algebra",
                            "elements": alg.n(),
                            "spectrum_size": rt.spectrum.len(),
                            "forward": forward,
                        }),
                        format!(
                            "ok: algebra with {} elements is isomorphic to the up-set algebra of its {}-point spectrum",
                            alg.n(),
                            rt.spectrum.len(),
                        ),
                    ))
                }
                Err(e) => Ok(Outcome::fail(
                    json!({"status": "fail", "error": e.to_string()}),
                    format!("fail: {e}"),
                )),
            }
        }
        _ => Err(InputError(
            "roundtrip takes exactly one of --poset or --algebra".into(),
        )),
    }
}

fn is_forest_cmd(file: &PathBuf) -> CommandResult {
    let poset = load_poset(file)?;
    match poset.forest_witness() {
        None => Ok(Outcome::ok(
            json!({"forest": true}),
            "forest: every principal up-set is a chain",
        )),
        Some((x, y, z)) => Ok(Outcome::fail(
            json!({
                "forest": false,
                "witness": {
                    "point": poset.name(x),
                    "incomparable_above": [poset.name(y), poset.name(z)],
                }
            }),
            format!(
                "not a forest: above `{}` the points `{}` and `{}` are incomparable",
                poset.name(x),
                poset.name(y),
                poset.name(z),
            ),
        )),
    }
}

fn dualize_cmd(file: &PathBuf) -> CommandResult {
    let hom_file = parse_hom_file(&read(file)?).map_err(input)?;
    let source = algebra_or_return!(algebra_of(&hom_file.source.to_spec().map_err(input)?));
    let target = algebra_or_return!(algebra_of(&hom_file.target.to_spec().map_err(input)?));
    let hom = hom_file.resolve_map(&source, &target).map_err(input)?;
    let report = check_hom(&hom, &source, &target, HomKind::Heyting);
    if !report.is_ok() {
        let violations: Vec<String> = report.violations.iter().map(|v| v.to_string()).collect();
        return Ok(Outcome::fail(
            json!({
                "status": "fail",
                "error": "not a Heyting homomorphism",
                "violations": violations,
            }),
            format!(
                "fail: not a Heyting homomorphism\n{}",
                violations.join("\n")
            ),
        ));
    }
    let dual = dualize_hom(&hom, &source, &target).expect("hom was checked");
    let map: Vec<Value> = dual
        .map
        .iter()
        .enumerate()
        .map(|(v, &w)| json!({"from": format!("h{v}"), "to": format!("h{w}")}))
        .collect();
    let ok = dual.monotone && dual.bounded_morphism;
    let json = json!({
        "status": if ok { "ok" } else { "fail" },
        "map": map,
        "monotone": dual.monotone,
        "p_morphism": dual.bounded_morphism,
        "domain": serde_json::to_value(SpectrumFile::of(&dual.domain, &target)).expect("serializable"),
        "codomain": serde_json::to_value(SpectrumFile::of(&dual.codomain, &source)).expect("serializable"),
    });
    let text = format!(
        "dual map on spectra: {}\nmonotone: {}\np-morphism: {}",
        dual.map
            .iter()
            .enumerate()
            .map(|(v, &w)| format!("h{v} -> h{w}"))
            .collect::<Vec<_>>()
            .join(", "),
        dual.monotone,
        dual.bounded_morphism,
    );
    Ok(if ok {
        Outcome::ok(json, text)
    } else {
        Outcome::fail(json, text)
    })
}

fn validate_system_cmd(file: &PathBuf) -> CommandResult {
    let (_, system) = algebra_or_return!(load_system(file)?);
    Ok(Outcome::ok(
        json!({
            "status": "ok",
            "points": system.points(),
            "algebra_size": system.algebra().n(),
        }),
        format!(
            "ok: system with {} point(s) over an algebra of {} elements satisfies all axioms",
            system.len(),
            system.algebra().n(),
        ),
    ))
}

fn classify_cmd(file: &PathBuf) -> CommandResult {
    let (_, system) = algebra_or_return!(load_system(file)?);
    let c = system.classify();
    Ok(Outcome::ok(
        json!({
            "heyting_algebraic": c.heyting_algebraic,
            "goedel_algebraic": c.goedel_algebraic,
            "t0": c.t0,
        }),
        format!(
            "heyting_algebraic: {}\ngoedel_algebraic: {}\nt0: {}",
            c.heyting_algebraic, c.goedel_algebraic, c.t0,
        ),
    ))
}

fn canonical_cmd(file: &PathBuf) -> CommandResult {
    let algebra = algebra_or_return!(load_algebra(file)?);
    let system = canonical_system(&algebra);
    let system_file = SystemFile::of(&system);
    Ok(Outcome::ok(
        serde_json::to_value(&system_file).expect("serializable"),
        format!(
            "canonical system with {} point(s): {}",
            system.len(),
            system.points().join(", "),
        ),
    ))
}

fn check_morphism_cmd(morphism: &PathBuf, source: &PathBuf, target: &PathBuf) -> CommandResult {
    let (_, source_system) = algebra_or_return!(load_system(source)?);
    let (_, target_system) = algebra_or_return!(load_system(target)?);
    let m = parse_morphism_file(&read(morphism)?)
        .map_err(input)?
        .resolve(&source_system, &target_system)
        .map_err(input)?;
    let report = check_morphism(&source_system, &target_system, &m).map_err(input)?;
    if report.is_ok() {
        Ok(Outcome::ok(
            json!({"status": "ok"}),
            "ok: continuous morphism with a Heyting f2",
        ))
    } else {
        let homs: Vec<String> = report
            .hom_violations
            .iter()
            .map(|v| v.to_string())
            .collect();
        let cont: Vec<Value> = report
            .continuity_violations
            .iter()
            .map(|(p, e)| json!({"point": p, "element": e}))
            .collect();
        let mut text = String::from("fail:");
        for v in &homs {
            text.push_str(&format!("\n  f2: {v}"));
        }
        for (p, e) in &report.continuity_violations {
            text.push_str(&format!(
                "\n  continuity fails at point `{p}`, element `{e}`"
            ));
        }
        Ok(Outcome::fail(
            json!({
                "status": "fail",
                "hom_violations": homs,
                "continuity_violations": cont,
            }),
            text,
        ))
    }
}

fn unit_check_cmd(system: &PathBuf, target_lattice: &PathBuf, morphism: &PathBuf) -> CommandResult {
    let (_, s) = algebra_or_return!(load_system(system)?);
    let b = algebra_or_return!(load_algebra(target_lattice)?);
    let canonical_target = canonical_system(&b);
    let m = parse_morphism_file(&read(morphism)?)
        .map_err(input)?
        .resolve(&s, &canonical_target)
        .map_err(input)?;
    match unit_and_triangle(&s, &b, &m) {
        Ok(report) => {
            let uniqueness = match report.uniqueness {
                UniquenessCheck::Verified => "verified",
                UniquenessCheck::Skipped => "skipped",
            };
            Ok(Outcome::ok(
                json!({
                    "status": "ok",
                    "commutes": true,
                    "uniqueness": uniqueness,
                    "unit_is_isomorphism": report.unit_is_isomorphism,
                }),
                format!(
                    "ok: triangle commutes\nuniqueness: {uniqueness}\nunit is isomorphism: {}",
                    report.unit_is_isomorphism,
                ),
            ))
        }
        Err(e) => Ok(Outcome::fail(
            json!({"status": "fail", "error": e.to_string()}),
            format!("fail: {e}"),
        )),
    }
}

fn to_kripke_cmd(system: &PathBuf) -> CommandResult {
    let (_, s) = algebra_or_return!(load_system(system)?);
    match model_from_system(&s) {
        Ok(model) => {
            let model_file = ModelFile::of(&model);
            Ok(Outcome::ok(
                serde_json::to_value(&model_file).expect("serializable"),
                format!(
                    "Kripke model with {} world(s) over atoms {}",
                    model.frame().len(),
                    model.atoms().join(", "),
                ),
            ))
        }
        Err(e) => Ok(Outcome::fail(
            json!({"status": "fail", "error": e.to_string()}),
            format!("fail: {e}"),
        )),
    }
}

fn eval_cmd(model: &PathBuf, world: &str, formula: &str) -> CommandResult {
    let model = parse_model_file(&read(model)?)
        .map_err(input)?
        .to_model()
        .map_err(input)?;
    let phi = Formula::parse(formula).map_err(input)?;
    let forces = model.forces_named(world, &phi).map_err(input)?;
    let json = json!({"world": world, "formula": phi.to_string(), "forces": forces});
    let text = format!("{forces}");
    Ok(if forces {
        Outcome::ok(json, text)
    } else {
        Outcome::fail(json, text)
    })
}

fn countermodel_cmd(formula: &str, max_size: usize) -> CommandResult {
    if max_size == 0 {
        return Err(InputError("--max-size must be at least 1".into()));
    }
    let phi = Formula::parse(formula).map_err(input)?;
    match countermodel_search(&phi, max_size) {
        None => Ok(Outcome::ok(
            json!({
                "formula": phi.to_string(),
                "countermodel": null,
                "checked_up_to": max_size,
            }),
            format!("no countermodel with up to {max_size} world(s)"),
        )),
        Some((model, world)) => {
            let world_name = model.frame().name(world).to_string();
            let model_file = ModelFile::of(&model);
            let mut text = format!(
                "countermodel with {} world(s); refuted at `{}`\n",
                model.frame().len(),
                world_name,
            );
            for w in 0..model.frame().len() {
                let atoms: Vec<&str> = model
                    .atoms()
                    .iter()
                    .enumerate()
                    .filter(|&(p, _)| model.holds(w, p))
                    .map(|(_, a)| a.as_str())
                    .collect();
                text.push_str(&format!(
                    "  {}: {{{}}}\n",
                    model.frame().name(w),
                    atoms.join(","),
                ));
            }
            Ok(Outcome::fail(
                json!({
                    "formula": phi.to_string(),
                    "countermodel": serde_json::to_value(&model_file).expect("serializable"),
                    "world": world_name,
                }),
                text.trim_end().to_string(),
            ))
        }
    }
}

fn export_dot_cmd(file: &PathBuf) -> CommandResult {
    let text = read(file)?;
    let value: Value =
        serde_json::from_str(&text).map_err(|e| InputError(format!("invalid JSON: {e}")))?;
    let (names, covers) = if value.get("elements").is_some() {
        let spec = parse_lattice_file(&text)
            .map_err(input)?
            .to_spec()
            .map_err(input)?;
        let lattice = match algebra_of(&spec) {
            Ok(a) => a.lattice().clone(),
            Err(outcome) => return Ok(*outcome),
        };
        (lattice.names().to_vec(), lattice.covers())
    } else if value.get("worlds").is_some() {
        let model = parse_model_file(&text)
            .map_err(input)?
            .to_model()
            .map_err(input)?;
        (model.frame().names().to_vec(), model.frame().covers())
    } else if value.get("points").is_some() {
        let poset = parse_poset_file(&text)
            .map_err(input)?
            .to_poset()
            .map_err(input)?;
        (poset.names().to_vec(), poset.covers())
    } else {
        return Err(InputError(
            "expected a lattice (\"elements\"), poset (\"points\"), or model (\"worlds\") file"
                .into(),
        ));
    };
    let dot = dot::hasse_dot(&names, &covers);
    Ok(Outcome::ok(json!({"dot": dot}), dot.trim_end().to_string()))
}
