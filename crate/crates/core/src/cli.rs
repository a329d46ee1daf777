//! Command-line front end.

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::block::{block_classes_of, is_rock_block, is_rouquier_block, rouquier_multicore, scopes_move_legal};
use crate::error::{Error, Result};
use crate::fock::{canonical_basis_block, TransitionMatrix};
use crate::formula::{
    conjectural_schur_multiplicity, contributing_tuples, g_poly, max_component_hook, q_vector, rock_g, RouquierPair,
};
use crate::laurent::LaurentPoly;
use crate::lr::lr_coeff_multi;
use crate::multipartition::{
    compose, decompose, omega, parse_charges, quotient_size, residue_data, rouquier_data, scopes_move, Multicharge,
    Multicore, Multipartition, Quotient, RouquierData,
};
use crate::partition::Partition;
use crate::verify::verify_block;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

const ABOUT: &str = "Graded decomposition numbers g_{λμ}(v) for Rouquier and RoCK blocks of Ariki-Koike algebras";

#[derive(Parser, Debug)]
#[command(name = "rouquier", version = version_string(), about = ABOUT)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

fn version_string() -> &'static str {
    concat!(
        env!("CARGO_PKG_VERSION"),
        " (g_{λμ}(v) = v^{ω(λ)−ω(μ)} Σ_{α,β,γ,δ} Π_{k,i} c^{δ^k_i}_{μ^k_i γ^k_i} c^{δ^k_i}_{α^k_i β^k_i γ^{k+1}_i} c^{λ^k_i}_{β^k_i (α^k_{i+1})′})"
    )
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Littlewood–Richardson coefficient c^λ_{α₁…α_t}.
    Lr {
        #[arg(long)]
        outer: String,
        /// Factors separated by ';'.
        #[arg(long)]
        factors: String,
    },
    /// The ≈-classes of a block.
    Block {
        #[command(flatten)]
        ctx: Ctx,
        #[command(flatten)]
        input: Input,
        /// List the members of each class.
        #[arg(long)]
        members: bool,
    },
    /// Multicore, quotient, hook and ω of a multipartition.
    Core {
        #[command(flatten)]
        ctx: Ctx,
        #[command(flatten)]
        input: Input,
    },
    /// Rouquier data of a multipartition and its block.
    RouquierCheck {
        #[command(flatten)]
        ctx: Ctx,
        #[command(flatten)]
        input: Input,
    },
    /// RoCK data of a multipartition and its block.
    RockCheck {
        #[command(flatten)]
        ctx: Ctx,
        #[command(flatten)]
        input: Input,
    },
    /// Applies the Scopes move Φ_i and reports whether it is legal on the block.
    Scopes {
        #[command(flatten)]
        ctx: Ctx,
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        i: usize,
    },
    /// Canonical basis of a block as a transition matrix.
    Canon {
        #[command(flatten)]
        ctx: Ctx,
        #[arg(long = "block-of", allow_hyphen_values = true)]
        block_of: String,
        /// Only labels whose first component has at most this many nodes.
        #[arg(long = "max-n")]
        max_n: Option<usize>,
    },
    /// g_{λμ}(v) for a pair in a Rouquier block.
    G {
        #[command(flatten)]
        ctx: Ctx,
        #[command(flatten)]
        pair: PairInput,
        /// Print the graded polynomial instead of its value at v = 1.
        #[arg(long)]
        graded: bool,
        /// Also list the contributing (α, β, γ, δ).
        #[arg(long)]
        tuples: bool,
    },
    /// Q(μ) = Σ_{λ≈μ} g_{λμ}(v) s_λ.
    Q {
        #[command(flatten)]
        ctx: Ctx,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
        #[arg(long = "mu-quotient", allow_hyphen_values = true)]
        mu_quotient: Option<String>,
        #[command(flatten)]
        core: CoreInput,
    },
    /// Ungraded value for a pair in a RoCK block.
    RockG {
        #[command(flatten)]
        ctx: Ctx,
        #[command(flatten)]
        pair: PairInput,
    },
    /// Conjectured Weyl-module multiplicity [Δ(λ):L(μ)] for μ arbitrary.
    SchurConj {
        #[command(flatten)]
        ctx: Ctx,
        #[command(flatten)]
        pair: PairInput,
    },
    /// Compares g_{λμ}(v) with the canonical basis over a block.
    Verify {
        #[command(flatten)]
        ctx: Ctx,
        #[arg(long = "block-of", allow_hyphen_values = true)]
        block_of: String,
        #[arg(long = "max-hook")]
        max_hook: usize,
    },
}

#[derive(Args, Debug, Clone)]
pub struct Ctx {
    #[arg(long)]
    pub e: usize,
    /// Multicharge, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    pub mc: String,
}

impl Ctx {
    fn multicharge(&self) -> Result<Multicharge> {
        Multicharge::new(self.e, parse_charges(&self.mc).map_err(|e| field("--mc", e))?).map_err(|e| field("--mc", e))
    }
}

/// A shared multicore given either as a multipartition of cores or as the
/// minimal Rouquier multicore with a given runner gap.
#[derive(Args, Debug, Clone, Default)]
pub struct CoreInput {
    /// Multicore, in multipartition syntax.
    #[arg(long, allow_hyphen_values = true)]
    pub multicore: Option<String>,
    /// Use the smallest multicore whose runners differ by at least this gap.
    #[arg(long = "rouquier-gap")]
    pub rouquier_gap: Option<i64>,
}

impl CoreInput {
    fn runner_charges(&self, mc: &Multicharge) -> Result<Option<Multicore>> {
        match (&self.multicore, self.rouquier_gap) {
            (Some(_), Some(_)) => Err(Error::InvalidParameter("give only one of --multicore and --rouquier-gap".into())),
            (Some(s), None) => {
                let m: Multipartition = s.parse().map_err(|e| field("--multicore", e))?;
                let (core, q) = decompose(&m, mc).map_err(|e| field("--multicore", e))?;
                if quotient_size(&q) != 0 {
                    return Err(field("--multicore", Error::InvalidParameter(format!("{m} is not a multicore"))));
                }
                Ok(Some(core))
            }
            (None, Some(d)) => Ok(Some(rouquier_multicore(mc, d))),
            (None, None) => Ok(None),
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct Input {
    /// Multipartition, components separated by ';', '-' for the empty partition.
    #[arg(long, allow_hyphen_values = true)]
    pub of: Option<String>,
    /// Quotient: components separated by ';', runners by '|'.
    #[arg(long, allow_hyphen_values = true)]
    pub quotient: Option<String>,
    #[command(flatten)]
    pub core: CoreInput,
}

#[derive(Args, Debug, Clone)]
pub struct PairInput {
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Option<String>,
    #[arg(long = "lambda-quotient", allow_hyphen_values = true)]
    pub lambda_quotient: Option<String>,
    #[arg(long = "mu-quotient", allow_hyphen_values = true)]
    pub mu_quotient: Option<String>,
    #[command(flatten)]
    pub core: CoreInput,
    /// Characteristic used to annotate the result.
    #[arg(long, default_value_t = 0)]
    pub p: usize,
}

fn field(name: &str, e: Error) -> Error {
    match e {
        Error::Precondition(_) | Error::UnknownLabel(_) => e,
        Error::Parse(m) => Error::Parse(format!("{name}: {m}")),
        other => Error::Parse(format!("{name}: {other}")),
    }
}

/// Parses the quotient syntax `-|1|1;-|-|-`.
pub fn parse_quotient(s: &str) -> Result<Quotient> {
    s.split(';')
        .map(|comp| comp.split('|').map(str::parse::<Partition>).collect::<Result<Vec<_>>>())
        .collect()
}

pub fn format_quotient(q: &Quotient) -> String {
    q.iter()
        .map(|row| row.iter().map(ToString::to_string).collect::<Vec<_>>().join("|"))
        .collect::<Vec<_>>()
        .join(";")
}

fn resolve(
    name: &str,
    text: Option<&String>,
    quotient: Option<&String>,
    core: &CoreInput,
    mc: &Multicharge,
) -> Result<Multipartition> {
    match (text, quotient) {
        (Some(t), None) => {
            let m: Multipartition = t.parse().map_err(|e| field(name, e))?;
            mc.check_rank(&m).map_err(|e| field(name, e))?;
            Ok(m)
        }
        (None, Some(q)) => {
            let qname = format!("{name}-quotient");
            let q = parse_quotient(q).map_err(|e| field(&qname, e))?;
            let Some(c) = core.runner_charges(mc)? else {
                return Err(Error::Parse(format!("{qname} needs --multicore or --rouquier-gap")));
            };
            if q.len() != mc.rank() || q.iter().any(|row| row.len() != mc.e()) {
                return Err(Error::Parse(format!("{qname}: expected {} components of {} runners", mc.rank(), mc.e())));
            }
            compose(&c, &q).map_err(|e| field(&qname, e))
        }
        (Some(_), Some(_)) => Err(Error::Parse(format!("give {name} or its quotient, not both"))),
        (None, None) => Err(Error::Parse(format!("missing {name}"))),
    }
}

impl Input {
    fn get(&self, mc: &Multicharge) -> Result<Multipartition> {
        resolve("--of", self.of.as_ref(), self.quotient.as_ref(), &self.core, mc)
    }
}

impl PairInput {
    fn get(&self, mc: &Multicharge) -> Result<(Multipartition, Multipartition)> {
        Ok((
            resolve("--lambda", self.lambda.as_ref(), self.lambda_quotient.as_ref(), &self.core, mc)?,
            resolve("--mu", self.mu.as_ref(), self.mu_quotient.as_ref(), &self.core, mc)?,
        ))
    }
}

/// The JSON record for a single value.
#[derive(Serialize, Debug)]
pub struct ValueRecord {
    pub value: LaurentPoly,
    pub rouquier: bool,
    pub rock: bool,
    pub charp_valid_for: String,
    pub conjectural: bool,
}

fn charp_text(h_max: usize) -> String {
    format!("p=0 or p>{h_max}")
}

fn sorted(mut v: Vec<Multipartition>) -> Vec<Multipartition> {
    v.sort_by(|a, b| b.order_key().cmp(&a.order_key()).then_with(|| a.cmp(b)));
    v
}

struct Output {
    json: bool,
    text: String,
    value: serde_json::Value,
}

fn emit(text: impl Into<String>, value: serde_json::Value) -> Output {
    Output { json: false, text: text.into(), value }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Precondition(_) | Error::UnknownLabel(_) => EXIT_PRECONDITION,
        Error::OrderingViolation(_) => EXIT_INTERNAL,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// to `out` and `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    let json = cli.json;
    let verify = matches!(cli.command, Command::Verify { .. });
    match dispatch(cli.command) {
        Ok(mut o) => {
            o.json = json;
            let body = if o.json {
                serde_json::to_string_pretty(&o.value).expect("serializable output")
            } else {
                o.text.trim_end().to_string()
            };
            let _ = writeln!(out, "{body}");
            if verify && o.value.get("ok") == Some(&serde_json::Value::Bool(false)) {
                EXIT_MISMATCH
            } else {
                EXIT_OK
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(cmd: Command) -> Result<Output> {
    match cmd {
        Command::Lr { outer, factors } => {
            let outer: Partition = outer.parse().map_err(|e| field("--outer", e))?;
            let factors = factors
                .split(';')
                .map(str::parse::<Partition>)
                .collect::<Result<Vec<_>>>()
                .map_err(|e| field("--factors", e))?;
            let c = lr_coeff_multi(&outer, &factors).map_err(|e| field("--factors", e))?;
            Ok(emit(c.to_string(), json!({ "value": c })))
        }
        Command::Block { ctx, input, members } => {
            let mc = ctx.multicharge()?;
            let lam = input.get(&mc)?;
            let data = residue_data(&lam, &mc)?;
            let mut text = format!("n = {}, residues = {:?}\n", data.n, data.counts);
            let mut classes = Vec::new();
            for c in block_classes_of(&lam, &mc)? {
                let rd = c.rouquier_data();
                let ms = sorted(c.members()?);
                text += &format!(
                    "multicore {} hook {} members {} rouquier {} rock {}\n",
                    c.multicore()?,
                    c.hook,
                    ms.len(),
                    rd.is_rouquier(),
                    rd.is_rock()
                );
                if members {
                    for m in &ms {
                        text += &format!("  {m}\n");
                    }
                }
                let mut rec = json!({
                    "multicore": c.multicore()?.to_string(),
                    "runner_charges": c.core,
                    "hook": c.hook,
                    "size": ms.len(),
                    "rouquier": rd.is_rouquier(),
                    "rock": rd.is_rock(),
                });
                if members {
                    rec["members"] = json!(ms.iter().map(ToString::to_string).collect::<Vec<_>>());
                }
                classes.push(rec);
            }
            Ok(emit(text, json!({ "n": data.n, "residues": data.counts, "classes": classes })))
        }
        Command::Core { ctx, input } => {
            let mc = ctx.multicharge()?;
            let lam = input.get(&mc)?;
            let (core, q) = decompose(&lam, &mc)?;
            let mcore = compose(&core, &vec![vec![Partition::empty(); mc.e()]; mc.rank()])?;
            let h = quotient_size(&q);
            let w = omega(&q, mc.e());
            let text = format!("multicore {mcore}\nquotient {}\nhook {h}\nomega {w}", format_quotient(&q));
            Ok(emit(
                text,
                json!({
                    "multicore": mcore.to_string(),
                    "runner_charges": core,
                    "quotient": q,
                    "hook": h,
                    "omega": w,
                }),
            ))
        }
        Command::RouquierCheck { ctx, input } => {
            let mc = ctx.multicharge()?;
            let lam = input.get(&mc)?;
            let rd = rouquier_data(&lam, &mc)?;
            let block = is_rouquier_block(&lam, &mc)?;
            let text = format!(
                "b {:?}\nd {:?}\nhook {}\nrouquier {}\nrouquier block {block}",
                rd.b,
                rd.d,
                rd.hook,
                rd.is_rouquier()
            );
            Ok(emit(
                text,
                json!({ "b": rd.b, "d": rd.d, "hook": rd.hook, "rouquier": rd.is_rouquier(), "rouquier_block": block }),
            ))
        }
        Command::RockCheck { ctx, input } => {
            let mc = ctx.multicharge()?;
            let lam = input.get(&mc)?;
            let rd = rouquier_data(&lam, &mc)?;
            let block = is_rock_block(&lam, &mc)?;
            let text = format!("pi {:?}\nb* {:?}\nrock {}\nrock block {block}", rd.pi(), rd.b_star(), rd.is_rock());
            Ok(emit(
                text,
                json!({ "pi": rd.pi(), "b_star": rd.b_star(), "rock": rd.is_rock(), "rock_block": block }),
            ))
        }
        Command::Scopes { ctx, input, i } => {
            let mc = ctx.multicharge()?;
            let lam = input.get(&mc)?;
            let moved = scopes_move(&lam, &mc, i)?;
            let legal = scopes_move_legal(&lam, &mc, i)?;
            Ok(emit(format!("{moved}\nlegal {legal}"), json!({ "image": moved.to_string(), "legal": legal })))
        }
        Command::Canon { ctx, block_of, max_n } => {
            let mc = ctx.multicharge()?;
            let lam: Multipartition = block_of.parse().map_err(|e| field("--block-of", e))?;
            mc.check_rank(&lam).map_err(|e| field("--block-of", e))?;
            let elems = canonical_basis_block(&mc, &residue_data(&lam, &mc)?, max_n)?;
            let mut elems = elems;
            elems.sort_by(|a, b| b.label.order_key().cmp(&a.label.order_key()));
            let tm = TransitionMatrix::from_elements(&elems);
            let mut text = String::new();
            for el in &elems {
                text += &format!("G({}) =", el.label);
                for (l, c) in el.vector.sorted_terms() {
                    text += &format!(" + ({c}) s({l})");
                }
                text += "\n";
            }
            Ok(emit(text, serde_json::to_value(&tm).expect("serializable")))
        }
        Command::G { ctx, pair, graded, tuples } => {
            let mc = ctx.multicharge()?;
            let (lam, mu) = pair.get(&mc)?;
            let rp = RouquierPair::new(&lam, &mu, &mc)?;
            let g = g_poly(&rp);
            let value = if graded { g.clone() } else { LaurentPoly::from(g.eval_one()) };
            let h_max = max_component_hook(&mu, &mc)?;
            let mut text = value.to_string();
            let mut rec = serde_json::to_value(ValueRecord {
                value,
                rouquier: true,
                rock: true,
                charp_valid_for: charp_text(h_max),
                conjectural: false,
            })
            .expect("serializable");
            if pair.p != 0 {
                let ok = pair.p > h_max;
                rec["valid_in_p"] = json!(ok);
                text += &format!("\nvalid in characteristic {}: {ok}", pair.p);
            }
            if tuples {
                let ts = contributing_tuples(&rp);
                for t in &ts {
                    text += &format!(
                        "\nalpha {} beta {} gamma {} delta {} weight {}",
                        t.alpha, t.beta, t.gamma, t.delta, t.weight
                    );
                }
                rec["tuples"] = serde_json::to_value(&ts).expect("serializable");
            }
            Ok(emit(text, rec))
        }
        Command::Q { ctx, mu, mu_quotient, core } => {
            let mc = ctx.multicharge()?;
            let mu = resolve("--mu", mu.as_ref(), mu_quotient.as_ref(), &core, &mc)?;
            RouquierPair::new(&mu, &mu, &mc)?;
            let q = q_vector(&mu, &mc)?;
            let mut text = String::new();
            let mut entries = Vec::new();
            for (l, c) in q.sorted_terms() {
                text += &format!("{c}\t{l}\n");
                entries.push(json!({ "lambda": l.to_string(), "value": c }));
            }
            Ok(emit(text, json!({ "mu": mu.to_string(), "terms": entries })))
        }
        Command::RockG { ctx, pair } => {
            let mc = ctx.multicharge()?;
            let (lam, mu) = pair.get(&mc)?;
            let v = rock_g(&lam, &mu, &mc)?;
            let rouquier = is_rouquier_block(&lam, &mc)?;
            let h_max = max_component_hook(&mu, &mc)?;
            let rec = ValueRecord {
                value: LaurentPoly::from(v as i64),
                rouquier,
                rock: true,
                charp_valid_for: charp_text(h_max),
                conjectural: false,
            };
            Ok(emit(v.to_string(), serde_json::to_value(rec).expect("serializable")))
        }
        Command::SchurConj { ctx, pair } => {
            let mc = ctx.multicharge()?;
            let (lam, mu) = pair.get(&mc)?;
            let v = conjectural_schur_multiplicity(&lam, &mu, &mc)?;
            let (core, _) = decompose(&lam, &mc)?;
            let rock = RouquierData::from_multicore(&core, quotient_size(&decompose(&lam, &mc)?.1)).is_rock();
            let h_max = max_component_hook(&mu, &mc)?;
            let rec = ValueRecord {
                value: LaurentPoly::from(v as i64),
                rouquier: true,
                rock,
                charp_valid_for: charp_text(h_max),
                conjectural: true,
            };
            Ok(emit(format!("{v} (conjectural)"), serde_json::to_value(rec).expect("serializable")))
        }
        Command::Verify { ctx, block_of, max_hook } => {
            let mc = ctx.multicharge()?;
            let lam: Multipartition = block_of.parse().map_err(|e| field("--block-of", e))?;
            mc.check_rank(&lam).map_err(|e| field("--block-of", e))?;
            let report = verify_block(&lam, &mc, max_hook)?;
            let mut text = format!(
                "classes {} labels {} pairs {} skipped classes {}\n",
                report.classes, report.labels, report.pairs, report.skipped_classes
            );
            if report.ok() {
                text += "all pairs match";
            } else {
                for m in &report.mismatches {
                    text += &format!("mismatch lambda {} mu {}: formula {} oracle {}\n", m.lambda, m.mu, m.formula, m.oracle);
                }
            }
            let mut rec = serde_json::to_value(&report).expect("serializable");
            rec["ok"] = json!(report.ok());
            Ok(emit(text, rec))
        }
    }
}
