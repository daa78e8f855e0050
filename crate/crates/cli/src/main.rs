//! `groupext`: build group extensions, act on shaped objects, verify
//! reference listings and transform rhythms from the command line.
//!
//! Output is JSON on stdout. Exit status is 0 on success, 1 when a
//! verification fails or a reference diff is non-empty, 2 on invalid input.

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use groupext::error::Error;
use groupext::extension::{
    build_extension, check_short_exact, classify_extension, verify_aut_action, verify_cocycle,
    ExtensionGroup, ExtensionKind, ExtensionSpec, SpecDoc,
};
use groupext::group::verify_group_axioms;
use groupext::iso::Fingerprint;
use groupext::metacyclic::{enumerate_extensions, metacyclic, MetacyclicParams};
use groupext::presets::{preset, verify_against_golden, ActionDoc, GoldenDiff, Preset};
use groupext::report::ValidationReport;
use groupext::smallgroups::identify;
use groupext::timespan::{
    iterate_twoline, right_transform_rhythm, transform_rhythm, AffineOp, RightImage, Rhythm, TimeSpan,
    TwoLineObject, TwoLineOp,
};
use groupext::torsor::Side;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "groupext", version, about = "Group extensions, shaped-object actions and rhythm algebra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the isomorphism classes of extensions of Z_n by Z_2.
    Enumerate {
        #[arg(long)]
        n: u64,
    },
    /// Build an extension and describe it.
    Build {
        #[command(flatten)]
        source: Source,
        /// Include the multiplication table.
        #[arg(long)]
        table: bool,
        /// Print the extension data document instead of a summary.
        #[arg(long)]
        emit_spec: bool,
    },
    /// Apply a group element to an object.
    Act {
        #[arg(long)]
        preset: String,
        #[arg(long)]
        element: String,
        #[arg(long)]
        object: String,
        #[arg(long, default_value = "left")]
        side: Side,
    },
    /// The unique element taking one object to another.
    Interval {
        #[arg(long)]
        preset: String,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long, default_value = "left")]
        side: Side,
    },
    /// Whether an element's root change depends on the shape, or every
    /// element for which it does.
    Contextual {
        #[arg(long)]
        preset: String,
        #[arg(long)]
        element: Option<String>,
        #[arg(long, default_value = "left")]
        side: Side,
    },
    /// Check a preset action (optionally against its reference listing) or
    /// an extension data document.
    Verify {
        #[arg(long, conflicts_with = "spec", required_unless_present = "spec")]
        preset: Option<String>,
        /// Compare with the preset's reference listing.
        #[arg(long, requires = "preset")]
        golden: bool,
        #[arg(long)]
        spec: Option<PathBuf>,
    },
    /// Transform a rhythm file by an affine operator.
    Rhythm {
        /// `u,delta`
        #[arg(long, allow_hyphen_values = true)]
        op: String,
        #[arg(long, default_value = "left")]
        side: Side,
        /// Rhythm file, or `-` for stdin.
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Iterate a two-line operator on a two-line object.
    Twoline {
        /// `u1,u2;m11,m12,m21,m22`
        #[arg(long, allow_hyphen_values = true)]
        op: String,
        #[arg(long, default_value_t = 3)]
        iterations: usize,
        #[arg(long, default_value = "0,0;1,0,0,1", allow_hyphen_values = true)]
        initial: String,
        #[arg(long, default_value = "right")]
        side: Side,
    },
    /// Name the group built from an extension data document or presentation.
    Identify {
        #[command(flatten)]
        source: Source,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// `n,p,q` for `⟨z, x | z^n, x^2 = z^p, x^-1 z x = z^q⟩`.
    #[arg(long, allow_hyphen_values = true)]
    metacyclic: Option<String>,
    /// JSON extension data `{N, K, phi, zeta}`.
    #[arg(long)]
    spec: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// What to print and whether the command succeeded.
enum Outcome {
    Json(Value, bool),
    Text(String),
}

fn emit<T: Serialize>(value: T, ok: bool) -> Result<Outcome, Error> {
    let v = serde_json::to_value(value).map_err(|e| Error::Parse(e.to_string()))?;
    Ok(Outcome::Json(v, ok))
}

fn read_input(path: &Path) -> Result<String, Error> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::InvalidArgument(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))
    }
}

fn read_spec(path: &Path) -> Result<ExtensionSpec, Error> {
    let doc: SpecDoc = serde_json::from_str(&read_input(path)?)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    ExtensionSpec::from_doc(&doc)
}

fn load(source: &Source) -> Result<ExtensionGroup, Error> {
    match (&source.metacyclic, &source.spec) {
        (Some(m), _) => metacyclic(m.parse::<MetacyclicParams>()?),
        (None, Some(path)) => build_extension(read_spec(path)?),
        (None, None) => Err(Error::InvalidArgument("give --metacyclic or --spec".into())),
    }
}

#[derive(Serialize)]
struct Summary {
    order: usize,
    name: String,
    kind: ExtensionKind,
    normal_order: usize,
    quotient_order: usize,
    labels: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    table: Option<Vec<Vec<usize>>>,
}

fn name_of(ext: &ExtensionGroup) -> Result<String, Error> {
    match identify(&ext.group) {
        Ok(name) => Ok(name.to_string()),
        Err(Error::UnsupportedOrder(_)) => Ok(format!("unidentified ({})", Fingerprint::of(&ext.group))),
        Err(e) => Err(e),
    }
}

fn build(source: &Source, table: bool, emit_spec: bool) -> Result<Outcome, Error> {
    let ext = load(source)?;
    if emit_spec {
        return emit(ext.spec.to_doc(), true);
    }
    emit(
        Summary {
            order: ext.group.order(),
            name: name_of(&ext)?,
            kind: classify_extension(&ext),
            normal_order: ext.spec.normal.order(),
            quotient_order: ext.spec.quotient.order(),
            labels: ext.group.labels().to_vec(),
            table: table.then(|| ext.group.table_rows()),
        },
        true,
    )
}

fn enumerate(n: u64) -> Result<Outcome, Error> {
    let classes: Vec<Value> = enumerate_extensions(n)?
        .iter()
        .map(|c| {
            json!({
                "name": c.name.to_string(),
                "representative": format!("({},{})", c.representative.p, c.representative.q),
                "members": c.members.iter().map(|m| format!("({},{})", m.p, m.q)).collect::<Vec<_>>(),
            })
        })
        .collect();
    emit(json!({ "n": n, "count": classes.len(), "classes": classes }), true)
}

fn act(p: &Preset, element: &str, object: &str, side: Side) -> Result<Outcome, Error> {
    let g = p.element(element)?;
    let o = p.parse_object(object)?;
    let image = p.action.act(g, o, side);
    emit(
        json!({
            "preset": p.name,
            "element": p.group().label(g),
            "object": p.action.label(o),
            "side": side,
            "image": p.action.label(image),
        }),
        true,
    )
}

fn interval(p: &Preset, from: &str, to: &str, side: Side) -> Result<Outcome, Error> {
    let (a, b) = (p.parse_object(from)?, p.parse_object(to)?);
    let g = p.action.interval(a, b, side);
    emit(
        json!({
            "preset": p.name,
            "from": p.action.label(a),
            "to": p.action.label(b),
            "side": side,
            "element": p.group().label(g),
        }),
        true,
    )
}

fn contextual(p: &Preset, element: Option<&str>, side: Side) -> Result<Outcome, Error> {
    if let Some(e) = element {
        let g = p.element(e)?;
        return emit(
            json!({
                "preset": p.name,
                "element": p.group().label(g),
                "side": side,
                "contextual": p.action.is_contextual(g, side),
            }),
            true,
        );
    }
    let found: Vec<&str> = p
        .group()
        .elements()
        .filter(|&g| p.action.is_contextual(g, side))
        .map(|g| p.group().label(g))
        .collect();
    emit(
        json!({ "preset": p.name, "side": side, "count": found.len(), "contextual": found }),
        true,
    )
}

#[derive(Serialize)]
struct PresetCheck {
    preset: String,
    action: ActionDoc,
    group_axioms: ValidationReport,
    short_exact: ValidationReport,
    left_action: ValidationReport,
    right_action: ValidationReport,
}

fn verify_preset(p: &Preset, golden: bool) -> Result<Outcome, Error> {
    if golden {
        let diff: GoldenDiff = verify_against_golden(p)?;
        let ok = diff.is_clean();
        return emit(diff, ok);
    }
    let check = PresetCheck {
        preset: p.name.clone(),
        action: p.action_doc(Side::Left),
        group_axioms: verify_group_axioms(&p.group().table_rows())?,
        short_exact: check_short_exact(p.ext()),
        left_action: p.action.check_action_laws(Side::Left),
        right_action: p.action.check_action_laws(Side::Right),
    };
    let ok = [&check.group_axioms, &check.short_exact, &check.left_action, &check.right_action]
        .iter()
        .all(|r| r.is_empty());
    emit(check, ok)
}

fn verify_spec(path: &Path) -> Result<Outcome, Error> {
    let spec = read_spec(path)?;
    let action = verify_aut_action(&spec.normal, &spec.quotient, &spec.phi)?;
    let cocycle = if action.is_empty() {
        verify_cocycle(&spec)?
    } else {
        ValidationReport::new()
    };
    let ok = action.is_empty() && cocycle.is_empty();
    emit(json!({ "action": action, "cocycle": cocycle, "valid": ok }), ok)
}

fn rhythm(op: &str, side: Side, input: &Path, format: Format) -> Result<Outcome, Error> {
    let g: AffineOp = op.parse()?;
    let r = Rhythm::parse(&read_input(input)?)?;
    let image = match side {
        Side::Left => RightImage::Rhythm {
            rhythm: transform_rhythm(&g, &r),
        },
        Side::Right => right_transform_rhythm(&g, &r),
    };
    match (image, format) {
        (RightImage::Rhythm { rhythm }, Format::Text) => Ok(Outcome::Text(rhythm.format())),
        (RightImage::Rhythm { rhythm }, Format::Json) => {
            emit(json!({ "op": g, "side": side, "rhythm": rhythm }), true)
        }
        (RightImage::Overlap { witness }, _) => {
            emit(json!({ "op": g, "side": side, "overlap": witness }), false)
        }
    }
}

#[derive(Serialize)]
struct TwoLineStep {
    object: TwoLineObject,
    lines: [TimeSpan; 2],
}

fn twoline(op: &str, iterations: usize, initial: &str, side: Side) -> Result<Outcome, Error> {
    let g: TwoLineOp = op.parse()?;
    let start: TwoLineObject = initial.parse()?;
    let steps: Vec<TwoLineStep> = iterate_twoline(&g, &start, side, iterations)?
        .into_iter()
        .map(|object| TwoLineStep {
            lines: [object.line(0), object.line(1)],
            object,
        })
        .collect();
    emit(json!({ "op": g, "side": side, "sequence": steps }), true)
}

fn identify_cmd(source: &Source) -> Result<Outcome, Error> {
    let ext = load(source)?;
    emit(
        json!({
            "order": ext.group.order(),
            "name": name_of(&ext)?,
            "fingerprint": Fingerprint::of(&ext.group),
        }),
        true,
    )
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    match cli.command {
        Command::Enumerate { n } => enumerate(n),
        Command::Build { source, table, emit_spec } => build(&source, table, emit_spec),
        Command::Act { preset: name, element, object, side } => act(&preset(&name)?, &element, &object, side),
        Command::Interval { preset: name, from, to, side } => interval(&preset(&name)?, &from, &to, side),
        Command::Contextual { preset: name, element, side } => {
            contextual(&preset(&name)?, element.as_deref(), side)
        }
        Command::Verify { preset: Some(name), golden, .. } => verify_preset(&preset(&name)?, golden),
        Command::Verify { spec: Some(path), .. } => verify_spec(&path),
        Command::Verify { .. } => Err(Error::InvalidArgument("give --preset or --spec".into())),
        Command::Rhythm { op, side, input, format } => rhythm(&op, side, &input, format),
        Command::Twoline { op, iterations, initial, side } => twoline(&op, iterations, &initial, side),
        Command::Identify { source } => identify_cmd(&source),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Json(value, ok)) => {
            let text = serde_json::to_string_pretty(&value).expect("JSON values serialize");
            let _ = writeln!(std::io::stdout(), "{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Ok(Outcome::Text(text)) => {
            let _ = write!(std::io::stdout(), "{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
