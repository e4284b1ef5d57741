//! Command-line interface.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on usage or resource errors.

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::characters::character_table;
use crate::classes::{enumerate_involution_classes, predicted_shapes, ClassSet, InvolutionClassType};
use crate::colored_perm::{ColoredPermutation, ProjectiveElement};
use crate::error::{Error, Result};
use crate::group::{GroupParams, DEFAULT_MAX_ORDER};
use crate::model::{gelfand_check, verify_class_decomposition, ModelBasis};
use crate::rs::{projective_rs, rs, shape_of};

#[derive(Parser, Debug)]
#[command(name = "gelfand", version, about = "Gelfand models of projective reflection groups G(r,p,q,n)")]
struct Cli {
    /// Worker threads for parallel sections.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Largest r^n·n! that may be enumerated.
    #[arg(long, global = true, env = "MODEL_MAX_ORDER", default_value_t = DEFAULT_MAX_ORDER)]
    max_group_order: u128,
    /// Emit JSON instead of TSV.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct GroupArgs {
    #[arg(long)]
    r: usize,
    #[arg(long, default_value_t = 1)]
    p: usize,
    #[arg(long, default_value_t = 1)]
    q: usize,
    #[arg(long)]
    n: usize,
}

impl GroupArgs {
    fn params(&self) -> Result<GroupParams> {
        GroupParams::new(self.r, self.p, self.q, self.n)
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Group order and class counts.
    Group {
        #[command(subcommand)]
        cmd: GroupCmd,
    },
    /// Absolute involutions of the dual group.
    Involutions {
        #[command(subcommand)]
        cmd: InvolutionsCmd,
    },
    /// Robinson–Schensted correspondence.
    Rs {
        #[command(subcommand)]
        cmd: RsCmd,
    },
    /// Conjugacy classes.
    Classes {
        #[command(subcommand)]
        cmd: ClassesCmd,
    },
    /// Character table of G(r,p,q,n).
    Chartable(GroupArgs),
    /// Decomposition of the model.
    Model {
        #[command(subcommand)]
        cmd: ModelCmd,
    },
}

#[derive(Subcommand, Debug)]
enum GroupCmd {
    Info(GroupArgs),
}

#[derive(Subcommand, Debug)]
enum InvolutionsCmd {
    /// Every basis involution with its kind, type and shape orbit.
    List(GroupArgs),
    /// S_n-conjugacy class types with sizes and predicted shapes.
    Types(GroupArgs),
}

#[derive(Subcommand, Debug)]
enum RsCmd {
    /// Apply RS to a window such as [3^0,4^1,6^1,2^0,5^2,1^2].
    Apply {
        window: String,
        #[arg(long)]
        r: usize,
        /// Reduce both tableaux modulo shifts by r/q.
        #[arg(long, default_value_t = 1)]
        q: usize,
    },
}

#[derive(Subcommand, Debug)]
enum ClassesCmd {
    /// Conjugacy classes of G(r,p,n) with sizes and normal elements.
    List {
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 1)]
        p: usize,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand, Debug)]
enum ModelCmd {
    /// Compare each block M(c) with its predicted decomposition.
    Decompose {
        #[command(flatten)]
        group: GroupArgs,
        /// Restrict to one class type, e.g. sym[1,1;1,1] or asym[2].
        #[arg(long)]
        class: Option<String>,
    },
    /// Multiplicity of every irreducible in the model.
    GelfandCheck(GroupArgs),
}

/// Text produced by a command and whether its verification passed.
struct Output {
    text: String,
    pass: bool,
}

fn ok(text: String) -> Result<Output> {
    Ok(Output { text, pass: true })
}

fn to_json(v: &impl serde::Serialize) -> Result<String> {
    serde_json::to_string_pretty(v).map_err(|e| Error::Inconsistency(e.to_string()))
}

/// Runs the CLI on `argv` (including the program name) and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let result = match cli.threads {
        Some(k) => match rayon::ThreadPoolBuilder::new().num_threads(k).build() {
            Ok(pool) => pool.install(|| execute(&cli)),
            Err(e) => Err(Error::Resource(e.to_string())),
        },
        None => execute(&cli),
    };
    match result {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = writeln!(stdout, "{}", out.text.trim_end());
            if out.pass {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Inconsistency(_) => 1,
                _ => 2,
            }
        }
    }
}

fn execute(cli: &Cli) -> Result<Output> {
    let max = cli.max_group_order;
    match &cli.command {
        Command::Group { cmd: GroupCmd::Info(g) } => group_info(g.params()?, cli.json),
        Command::Involutions { cmd: InvolutionsCmd::List(g) } => involutions_list(g.params()?, max, cli.json),
        Command::Involutions { cmd: InvolutionsCmd::Types(g) } => involution_types(g.params()?, max, cli.json),
        Command::Rs { cmd: RsCmd::Apply { window, r, q } } => rs_apply(window, *r, *q),
        Command::Classes { cmd: ClassesCmd::List { r, p, n } } => classes_list(*r, *p, *n, cli.json),
        Command::Chartable(g) => chartable(g.params()?, cli.json),
        Command::Model { cmd: ModelCmd::Decompose { group, class } } => {
            let params = group.params()?;
            let only = class.as_deref().map(|s| InvolutionClassType::parse(s, params)).transpose()?;
            let report = verify_class_decomposition(params, only.as_ref(), max)?;
            Ok(Output { text: to_json(&report)?, pass: report.pass })
        }
        Command::Model { cmd: ModelCmd::GelfandCheck(g) } => {
            let report = gelfand_check(g.params()?, max)?;
            if cli.json {
                return Ok(Output { text: to_json(&report)?, pass: report.pass });
            }
            let mut text = String::from("irreducible\tdegree\tmultiplicity\n");
            for m in &report.rows {
                text.push_str(&format!("{}\t{}\t{}\n", m.label, m.degree, m.multiplicity));
            }
            text.push_str(&format!("{}\n", if report.pass { "PASS" } else { "FAIL" }));
            Ok(Output { text, pass: report.pass })
        }
    }
}

fn group_info(params: GroupParams, json: bool) -> Result<Output> {
    let classes = ClassSet::new(params.r, params.p, params.n)?;
    let class_count = classes.quotient_class_count(params.q)?;
    let irreducibles = if params.is_involutory() { Some(character_table(params)?.rows().len()) } else { None };
    if json {
        return ok(to_json(&json!({
            "schema": 1,
            "group": params.to_string(),
            "order": params.order().to_string(),
            "classes": class_count,
            "irreducibles": irreducibles,
        }))?);
    }
    let irr = irreducibles.map_or("-".to_string(), |k| k.to_string());
    ok(format!("group\t{params}\norder\t{}\nclasses\t{class_count}\nirreducibles\t{irr}\n", params.order()))
}

fn involutions_list(params: GroupParams, max: u128, json: bool) -> Result<Output> {
    let basis = ModelBasis::new(params, max)?;
    let mut rows = Vec::new();
    for (k, v) in basis.elements().iter().enumerate() {
        rows.push((v.rep().to_string(), basis.kind(k), basis.class_type(k).to_string(), shape_of(v)?.to_string()));
    }
    if json {
        let items: Vec<Value> = rows
            .iter()
            .map(|(v, kind, t, sh)| json!({"involution": v, "kind": kind, "type": t, "shape": sh}))
            .collect();
        return ok(to_json(&json!({"schema": 1, "group": params.to_string(), "involutions": items}))?);
    }
    let mut text = String::from("involution\tkind\ttype\tshape\n");
    for (v, kind, t, sh) in rows {
        let kind = serde_json::to_value(kind).ok().and_then(|x| x.as_str().map(String::from)).unwrap_or_default();
        text.push_str(&format!("{v}\t{kind}\t{t}\t{sh}\n"));
    }
    ok(text)
}

fn involution_types(params: GroupParams, max: u128, json: bool) -> Result<Output> {
    let classes = enumerate_involution_classes(params, max)?;
    let mut rows = Vec::new();
    for (t, members) in &classes {
        let shapes: Vec<String> = predicted_shapes(t, params)?.iter().map(|o| o.to_string()).collect();
        rows.push((t.to_string(), members.len(), t.iota(), shapes));
    }
    if json {
        let items: Vec<Value> = rows
            .iter()
            .map(|(t, size, iota, sh)| json!({"type": t, "size": size, "iota": iota, "shapes": sh}))
            .collect();
        return ok(to_json(&json!({"schema": 1, "group": params.to_string(), "types": items}))?);
    }
    let mut text = String::from("type\tsize\tiota\tshapes\n");
    for (t, size, iota, sh) in rows {
        text.push_str(&format!("{t}\t{size}\t{iota}\t{}\n", sh.join(" ")));
    }
    ok(text)
}

fn rs_apply(window: &str, r: usize, q: usize) -> Result<Output> {
    let g = ColoredPermutation::parse_window(r, window)?;
    let (p, qt) = if q > 1 {
        let pair = projective_rs(&ProjectiveElement::new(g.clone(), q)?);
        (pair.p, pair.q)
    } else {
        rs(&g)
    };
    ok(to_json(&json!({
        "schema": 1,
        "element": g.to_string(),
        "shape": p.shape().to_string(),
        "P": p,
        "Q": qt,
    }))?)
}

fn classes_list(r: usize, p: usize, n: usize, json: bool) -> Result<Output> {
    let classes = ClassSet::new(r, p, n)?;
    let rows: Vec<(String, u128, String)> = classes
        .labels()
        .iter()
        .zip(classes.sizes())
        .zip(classes.normal_elements())
        .map(|((l, s), g)| (l.to_string(), *s, g.to_string()))
        .collect();
    if json {
        let items: Vec<Value> = rows
            .iter()
            .map(|(l, s, g)| json!({"label": l, "size": s.to_string(), "normal_element": g}))
            .collect();
        return ok(to_json(&json!({"schema": 1, "group": format!("G({r},{p},{n})"), "classes": items}))?);
    }
    let mut text = String::from("class\tsize\tnormal_element\n");
    for (l, s, g) in rows {
        text.push_str(&format!("{l}\t{s}\t{g}\n"));
    }
    ok(text)
}

fn chartable(params: GroupParams, json: bool) -> Result<Output> {
    let table = character_table(params)?;
    let classes = table.classes();
    if json {
        let cls: Vec<Value> = classes
            .labels()
            .iter()
            .zip(classes.sizes())
            .map(|(l, s)| json!({"label": l.to_string(), "size": s.to_string()}))
            .collect();
        let rows: Vec<Value> = table
            .rows()
            .iter()
            .map(|(l, f)| {
                let values: Vec<String> = f.values().iter().map(|v| v.to_string()).collect();
                json!({"label": l.to_string(), "degree": l.degree().to_string(), "values": values})
            })
            .collect();
        return ok(to_json(&json!({"schema": 1, "group": params.to_string(), "classes": cls, "rows": rows}))?);
    }
    let mut text = String::from("irreducible");
    for l in classes.labels() {
        text.push_str(&format!("\t{l}"));
    }
    text.push('\n');
    for (l, f) in table.rows() {
        text.push_str(&l.to_string());
        for v in f.values() {
            text.push_str(&format!("\t{v}"));
        }
        text.push('\n');
    }
    ok(text)
}
