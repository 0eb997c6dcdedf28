//! Command-line front end for the `reestype` toolkit.
//!
//! [`run`] parses arguments, dispatches to the library and returns an exit
//! code together with a JSON report.

pub mod ringfile;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use reestype::monres::{mapping_cone_resolution, verify_rank_height, MonomialIdeal};
use reestype::multipliers::{cm_multiplier_check, cm_multiplier_power_search, rt_perturbation_experiment};
use reestype::quotient::{fedder_fpure, sample_frobenius_closure};
use reestype::ramsey::{longest_chain, ramsey_number_search, RamseySearch};
use reestype::rees::{is_relation, rees_presentation, reducible_to_lower_degree, relation_type, two_param_descent, Descent, ReesRing};
use reestype::{groebner, Error, ErrorKind, Ideal, PolyRing, Polynomial, QuotientRing};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::ringfile::parse_ring_file;

pub const DEGREE_CAP_ENV: &str = "REESTYPE_DEGREE_CAP";

#[derive(Debug, Parser)]
#[command(name = "reestype", version, about = "Relation type and Rees algebra computations over prime fields")]
struct Cli {
    /// Bound on S-pair degrees in every Groebner basis computation
    /// [default: $REESTYPE_DEGREE_CAP, else 60]
    #[arg(long, global = true)]
    degree_cap: Option<u32>,
    /// Leave timings out of the report so that output is byte-for-byte
    /// reproducible.
    #[arg(long, global = true)]
    no_timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct RingArg {
    /// Ring file (`char p`, `vars ...`, `rel ...` lines)
    #[arg(long)]
    ring: PathBuf,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Reduced Groebner basis of an ideal of the ambient polynomial ring
    Gb {
        #[command(flatten)]
        ring: RingArg,
        /// Comma-separated generators
        #[arg(long)]
        gens: String,
        /// Add the ring's relations to the generators
        #[arg(long)]
        with_relations: bool,
    },
    /// Rees presentation ideal and relation type of an ideal of R
    ReesRt {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        gens: String,
    },
    /// Two-parameter descent of a relation on (x, y)
    Descent {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        /// Relation in T1, T2 with coefficients in R
        #[arg(long)]
        relation: String,
        #[arg(long)]
        gamma: String,
    },
    /// Mapping-cone resolution of a monomial ideal and its rank and height table
    Resolve {
        /// Variables of the polynomial ring holding the monomial ideal
        #[arg(long)]
        vars: String,
        #[arg(long = "char", default_value_t = 32003)]
        characteristic: u64,
        /// Comma-separated monomial generators
        #[arg(long)]
        ideal: String,
        /// Base-change into this ring...
        #[arg(long, requires = "params")]
        ring: Option<PathBuf>,
        /// ...sending the variables to these elements
        #[arg(long, requires = "ring")]
        params: Option<String>,
    },
    /// Cohen-Macaulay multiplier certificate for z against a system of parameters
    Multiplier {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        sop: String,
        #[arg(long)]
        z: String,
        /// Also try z^2, ..., z^N when z fails
        #[arg(long, default_value_t = 1)]
        max_power: u32,
    },
    /// Relation types before and after adding alpha to one parameter
    Perturb {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        sop: String,
        #[arg(long)]
        alpha: String,
        /// 1-based position of the parameter to perturb
        #[arg(long)]
        index: usize,
    },
    /// Exhaustive search for the chain threshold M(d, k, l)
    Ramsey {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        l: usize,
        #[arg(long, default_value_t = 12)]
        mmax: usize,
    },
    /// Fedder's F-purity criterion for the ring
    Fedder {
        #[command(flatten)]
        ring: RingArg,
        /// Number of random Frobenius-closure samples to compare against
        #[arg(long, default_value_t = 0)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// The family I_n = (x^(n-1) y + z^n, x^n, y^n) in F_p[x,y,z,w]/(w^2, wz)
    ReplicateExample21 {
        #[arg(long, conflicts_with = "sweep")]
        n: Option<u32>,
        /// Inclusive range such as 2..4
        #[arg(long)]
        sweep: Option<String>,
        #[arg(long = "char", default_value_t = 32003)]
        characteristic: u64,
    },
}

/// Exit code and report of one invocation.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub code: i32,
    pub report: Value,
}

impl Outcome {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.report).expect("reports are valid JSON")
    }
}

pub fn exit_code(kind: ErrorKind) -> i32 {
    match kind {
        ErrorKind::Parse => 2,
        ErrorKind::Precondition => 3,
        ErrorKind::DegreeCap => 4,
        ErrorKind::Internal => 1,
    }
}

fn kind_name(kind: ErrorKind) -> &'static str {
    match kind {
        ErrorKind::Parse => "parse",
        ErrorKind::Precondition => "precondition",
        ErrorKind::DegreeCap => "degree-cap",
        ErrorKind::Internal => "internal",
    }
}

struct Ctx {
    degree_cap: u32,
    timings: BTreeMap<String, f64>,
    warnings: Vec<String>,
    digest: Sha256,
}

impl Ctx {
    fn time<T>(&mut self, label: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.timings.insert(label.to_string(), start.elapsed().as_secs_f64() * 1000.0);
        out
    }

    fn load_ring(&mut self, path: &PathBuf) -> Result<QuotientRing, Error> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Precondition(format!("cannot read {}: {e}", path.display())))?;
        self.digest.update(text.as_bytes());
        self.digest.update([0]);
        parse_ring_file(&text)?.build(self.degree_cap)
    }

    fn check_graded(&mut self, r: &QuotientRing, elems: &[Polynomial]) {
        if !r.is_standard_graded(elems) {
            self.warnings.push(
                "inputs are not homogeneous; graded computations only approximate the local ring".into(),
            );
        }
    }
}

fn strings(ring: &PolyRing, fs: &[Polynomial]) -> Vec<String> {
    fs.iter().map(|f| ring.format(f)).collect()
}

fn parse_sweep(text: &str) -> Result<Vec<u32>, Error> {
    let bad = || Error::Parse { pos: 0, msg: format!("bad range `{text}`, expected a..b") };
    let (a, b) = text.split_once("..").ok_or_else(bad)?;
    let a: u32 = a.trim().parse().map_err(|_| bad())?;
    let b: u32 = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok((a..=b).collect())
}

fn degree_cap(flag: Option<u32>) -> Result<u32, Error> {
    if let Some(c) = flag {
        return Ok(c);
    }
    match std::env::var(DEGREE_CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Parse { pos: 0, msg: format!("{DEGREE_CAP_ENV}=`{v}` is not a number") }),
        Err(_) => Ok(reestype::DEFAULT_DEGREE_CAP),
    }
}

/// Runs one invocation. `args` excludes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let version = env!("CARGO_PKG_VERSION");
    let cli = match Cli::try_parse_from(std::iter::once("reestype".to_string()).chain(args.iter().cloned())) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind as K;
            let code = match e.kind() {
                K::DisplayHelp | K::DisplayVersion | K::DisplayHelpOnMissingArgumentOrSubcommand => 0,
                _ => 2,
            };
            return Outcome { code, report: json!({ "command": args, "message": e.to_string(), "version": version }) };
        }
    };
    let no_timings = cli.no_timings;
    let mut digest = Sha256::new();
    for a in &args {
        digest.update(a.as_bytes());
        digest.update([0]);
    }
    let result = degree_cap(cli.degree_cap).and_then(|cap| {
        let mut ctx = Ctx { degree_cap: cap, timings: BTreeMap::new(), warnings: Vec::new(), digest };
        let res = dispatch(&mut ctx, cli.command)?;
        Ok((res, ctx))
    });
    match result {
        Ok((mut results, ctx)) => {
            if !ctx.warnings.is_empty() {
                results["warnings"] = json!(ctx.warnings);
            }
            let mut report = json!({
                "command": args,
                "inputs_sha256": hex::encode(ctx.digest.finalize()),
                "degree_cap": ctx.degree_cap,
                "results": results,
                "version": version,
            });
            if !no_timings {
                report["timings_ms"] = json!(ctx.timings);
            }
            Outcome { code: 0, report }
        }
        Err(e) => Outcome {
            code: exit_code(e.kind()),
            report: json!({
                "command": args,
                "error": { "kind": kind_name(e.kind()), "message": e.to_string() },
                "version": version,
            }),
        },
    }
}

fn dispatch(ctx: &mut Ctx, cmd: Command) -> Result<Value, Error> {
    match cmd {
        Command::Gb { ring, gens, with_relations } => {
            let r = ctx.load_ring(&ring.ring)?;
            let s = r.ring().clone();
            let mut g = s.parse_list(&gens)?;
            if with_relations {
                g.extend(r.relations().iter().cloned());
            }
            let gb = ctx.time("groebner", || groebner::buchberger(&s, &g))?;
            Ok(json!({ "basis": strings(&s, &gb), "size": gb.len() }))
        }
        Command::ReesRt { ring, gens } => {
            let r = ctx.load_ring(&ring.ring)?;
            let g = r.ring().parse_list(&gens)?;
            ctx.check_graded(&r, &g);
            let p = ctx.time("presentation", || rees_presentation(&r, &g))?;
            let rt = ctx.time("relation_type", || relation_type(&p))?;
            let rr = p.rees_ring();
            let rels: Vec<Value> = p
                .relations()
                .iter()
                .map(|rel| json!({ "relation": rr.format(&rel.poly), "degree": rel.degree }))
                .collect();
            Ok(json!({
                "generators": strings(r.ring(), p.generators()),
                "relations": rels,
                "rt": rt,
            }))
        }
        Command::Descent { ring, x, y, relation, gamma } => {
            let r = ctx.load_ring(&ring.ring)?;
            let s = r.ring();
            let (x, y, gamma) = (s.parse(&x)?, s.parse(&y)?, s.parse(&gamma)?);
            ctx.check_graded(&r, &[x.clone(), y.clone()]);
            let rr = ReesRing::new(&r, 2)?;
            let f = rr.parse(&relation)?;
            let input_degree = rr.relation(f.clone())?.degree;
            let out = ctx.time("descent", || two_param_descent(&rr, &x, &y, &f, &gamma))?;
            Ok(match out {
                Descent::Lowered { relation, p, s: svals } => json!({
                    "outcome": "lowered",
                    "input_degree": input_degree,
                    "relation": rr.format(&relation.poly),
                    "degree": relation.degree,
                    "p": p,
                    "s": strings(s, &svals),
                }),
                Descent::Unchanged(rel) => json!({
                    "outcome": "unchanged",
                    "input_degree": input_degree,
                    "relation": rr.format(&rel.poly),
                    "degree": rel.degree,
                }),
                Descent::Failed { reason, s: svals } => json!({
                    "outcome": "failed",
                    "input_degree": input_degree,
                    "reason": reason,
                    "s": strings(s, &svals),
                }),
            })
        }
        Command::Resolve { vars, characteristic, ideal, ring, params } => {
            let names: Vec<&str> = vars.split(',').map(str::trim).collect();
            let field = reestype::PrimeField::new(characteristic)?;
            let s = Arc::new(
                PolyRing::new(field, names.iter().map(|n| n.to_string()).collect(), reestype::MonomialOrder::Grevlex)?
                    .with_degree_cap(ctx.degree_cap),
            );
            let mi = MonomialIdeal::from_polynomials(&s, &s.parse_list(&ideal)?)?;
            let c = ctx.time("resolution", || mapping_cone_resolution(&s, &mi))?;
            let (target, complex, xs) = match (ring, params) {
                (Some(path), Some(p)) => {
                    let r = ctx.load_ring(&path)?;
                    let xs = r.ring().parse_list(&p)?;
                    if xs.len() != s.nvars() {
                        return Err(Error::VariableCount(xs.len(), s.nvars()));
                    }
                    let bc = c.base_change(&r, &xs)?;
                    (r, bc, xs)
                }
                _ => {
                    let vars = (0..s.nvars()).map(|i| s.var(i)).collect();
                    (QuotientRing::polynomial(s.clone()), c.clone(), vars)
                }
            };
            let is_complex = complex.is_complex(&target)?;
            let rep = ctx.time("rank_height", || verify_rank_height(&target, &complex, Some(&xs)))?;
            let table: Vec<Value> = rep
                .rows
                .iter()
                .map(|row| {
                    json!({
                        "i": row.index,
                        "expected_rank": row.expected_rank,
                        "rank": row.rank,
                        "height": row.height,
                        "rank_ok": row.rank_ok,
                        "height_ok": row.height_ok,
                        "radical_ok": row.radical_ok,
                    })
                })
                .collect();
            let maps: Vec<Vec<Vec<String>>> = complex
                .maps()
                .iter()
                .map(|m| (0..m.rows).map(|i| (0..m.cols).map(|j| target.format(m.get(i, j))).collect()).collect())
                .collect();
            Ok(json!({
                "generators": strings(&s, &mi.to_polynomials(&s)),
                "betti": complex.betti(),
                "expected_ranks": complex.expected_ranks(),
                "length": complex.length(),
                "is_complex": is_complex,
                "conditions": table,
                "passes": rep.passes(),
                "differentials": maps,
            }))
        }
        Command::Multiplier { ring, sop, z, max_power } => {
            let r = ctx.load_ring(&ring.ring)?;
            let sop = r.ring().parse_list(&sop)?;
            let z = r.parse(&z)?;
            ctx.check_graded(&r, &sop);
            let cert = ctx.time("certificate", || {
                if max_power > 1 {
                    cm_multiplier_power_search(&r, &z, &sop, max_power)
                } else {
                    cm_multiplier_check(&r, &z, &sop)
                }
            })?;
            let witnesses: Vec<Value> =
                cert.witnesses.iter().map(|w| w.as_ref().map_or(Value::Null, |p| json!(r.format(p)))).collect();
            Ok(json!({
                "z": r.format(&cert.z),
                "power": cert.power,
                "checks": cert.checks,
                "witnesses": witnesses,
                "passes": cert.passes(),
                "first_failure": cert.first_failure(),
                "degenerate": cert.degenerate,
            }))
        }
        Command::Perturb { ring, sop, alpha, index } => {
            let r = ctx.load_ring(&ring.ring)?;
            let sop = r.ring().parse_list(&sop)?;
            let alpha = r.parse(&alpha)?;
            if index == 0 {
                return Err(Error::Precondition("index is 1-based".into()));
            }
            ctx.check_graded(&r, &sop);
            let rep = ctx.time("perturbation", || rt_perturbation_experiment(&r, &sop, &alpha, index - 1))?;
            Ok(json!({
                "original": strings(r.ring(), &rep.original),
                "perturbed": strings(r.ring(), &rep.perturbed),
                "rt_original": rep.rt_original,
                "rt_perturbed": rep.rt_perturbed,
                "equal": rep.equal(),
                "certified": rep.certified,
            }))
        }
        Command::Ramsey { d, k, l, mmax } => {
            let res = ctx.time("search", || ramsey_number_search(d, k, l, mmax))?;
            let (value, witness) = match &res {
                RamseySearch::Found { m, witness } => (json!(m), witness),
                RamseySearch::UnknownAbove { witness, .. } => (Value::Null, witness),
            };
            Ok(json!({
                "d": d, "k": k, "l": l, "mmax": mmax,
                "value": value,
                "unknown_above": if value.is_null() { json!(mmax) } else { Value::Null },
                "witness": witness.tuples(),
                "witness_longest_chain": longest_chain(witness).len(),
            }))
        }
        Command::Fedder { ring, samples, seed } => {
            let r = ctx.load_ring(&ring.ring)?;
            let p = r.characteristic();
            let pure = ctx.time("criterion", || fedder_fpure(r.defining(), p))?;
            let mut out = json!({ "char": p, "f_pure": pure });
            if samples > 0 {
                let w = ctx.time("sampling", || sample_frobenius_closure(&r, samples, seed))?;
                out["samples"] = json!(samples);
                out["seed"] = json!(seed);
                out["frobenius_witness"] = match w {
                    None => Value::Null,
                    Some(w) => json!({ "ideal": strings(r.ring(), &w.ideal), "element": r.format(&w.element) }),
                };
                out["agrees"] = json!(pure == w_is_none(&out));
            }
            Ok(out)
        }
        Command::ReplicateExample21 { n, sweep, characteristic } => {
            let ns = match (n, sweep) {
                (Some(n), _) => vec![n],
                (None, Some(s)) => parse_sweep(&s)?,
                (None, None) => return Err(Error::Precondition("give --n or --sweep".into())),
            };
            let mut instances = Vec::new();
            for n in ns {
                instances.push(example21_instance(ctx, n, characteristic)?);
            }
            Ok(json!({ "instances": instances }))
        }
    }
}

fn w_is_none(out: &Value) -> bool {
    out["frobenius_witness"].is_null()
}

fn example21_instance(ctx: &mut Ctx, n: u32, p: u64) -> Result<Value, Error> {
    if n < 1 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    let field = reestype::PrimeField::new(p)?;
    let names = ["x", "y", "z", "w"].map(String::from).to_vec();
    let s = Arc::new(PolyRing::new(field, names, reestype::MonomialOrder::Grevlex)?.with_degree_cap(ctx.degree_cap));
    let r = QuotientRing::new(s.clone(), s.parse_list("w^2, w*z")?)?;
    let gens = s.parse_list(&format!("x^{}*y + z^{n}, x^{n}, y^{n}", n - 1))?;
    let label = format!("n={n}");
    let p = ctx.time(&format!("{label} presentation"), || rees_presentation(&r, &gens))?;
    let rt = ctx.time(&format!("{label} relation_type"), || relation_type(&p))?;
    let rr = p.rees_ring();
    let rel = if n == 1 { rr.parse("w*T1 - w*T3")? } else { rr.parse(&format!("w*T1^{n} - w*T2^{}*T3", n - 1))? };
    let holds = is_relation(rr, &rel, &gens)?;
    let reducible = if holds { Some(reducible_to_lower_degree(&p, &rel)?) } else { None };
    let degrees = p.degrees();
    Ok(json!({
        "n": n,
        "generators": strings(&s, &gens),
        "relation": rr.format(&rel),
        "is_relation": holds,
        "reducible_to_lower_degree": reducible,
        "rt": rt,
        "rt_at_least_n": rt >= n,
        "presentation_degrees": degrees,
        "ideal_is_proper": !Ideal::new(s.clone(), gens.clone()).is_unit()?,
    }))
}
