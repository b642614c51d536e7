//! Command-line front end. `run` is the whole program minus process exit,
//! so it can be driven from tests.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::fockrep::{act, cartan_series, change_basis, Basis, Family, FockVec, Kind, Op};
use crate::gzmodel::{factors_as_ratfun, nt_a_eigenvalue, nt_matrix_elements, partition_to_gz, signed_roots, uglov_a_eigenvalue_ratio};
use crate::partitions::Partition;
use crate::quiverloc::{b_normalization, b_prime_normalization, h_form, h_form_closed, tangent_character, tangent_character_tautological, v_dim, vv_weight_identities};
use crate::relcheck::{run_suite, Suite};
use crate::symfun::{jack_gl_n, jack_norm_formula, jack_norm_gs, SymBasis};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

pub const VERSION: &str = "0.1.0 (variables: e1, e2)";

#[derive(Parser, Debug)]
#[command(name = "yfock", version = VERSION, about = "Jack(gl_N) functions and Yangian actions on the level-one Fock space")]
pub struct Cli {
    /// Human-readable rendering instead of JSON.
    #[arg(long, global = true, conflicts_with = "json")]
    pub text: bool,
    /// JSON output (the default).
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum SymBasisArg {
    Schur,
    Power,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum NormMethod {
    Formula,
    Gs,
    Both,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Gen {
    #[value(name = "x+")]
    XPlus,
    #[value(name = "x-")]
    XMinus,
    #[value(name = "h")]
    H,
    #[value(name = "X+")]
    BigXPlus,
    #[value(name = "X-")]
    BigXMinus,
    #[value(name = "H")]
    BigH,
    #[value(name = "e")]
    E,
    #[value(name = "f")]
    F,
    #[value(name = "hcart")]
    HCart,
}

impl Gen {
    fn op(self, i: usize, r: u32) -> Op {
        let (family, kind) = match self {
            Gen::XPlus => (Family::AffineYangian, Kind::Raise),
            Gen::XMinus => (Family::AffineYangian, Kind::Lower),
            Gen::H => (Family::AffineYangian, Kind::Cartan),
            Gen::BigXPlus => (Family::YangianSl, Kind::Raise),
            Gen::BigXMinus => (Family::YangianSl, Kind::Lower),
            Gen::BigH => (Family::YangianSl, Kind::Cartan),
            Gen::E => (Family::AffineLie, Kind::Raise),
            Gen::F => (Family::AffineLie, Kind::Lower),
            Gen::HCart => (Family::AffineLie, Kind::Cartan),
        };
        Op::new(family, kind, i, r)
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum BasisArg {
    /// Fixed-point basis.
    B,
    /// Jack basis.
    #[value(name = "P")]
    P,
    /// Schur basis.
    S,
}

impl BasisArg {
    fn basis(self) -> Basis {
        match self {
            BasisArg::B => Basis::Fixed,
            BasisArg::P => Basis::Jack,
            BasisArg::S => Basis::Schur,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum SuiteArg {
    AffineYangian,
    YangianSl,
    AffineLie,
    Adjoint,
    Appendix,
    All,
}

impl SuiteArg {
    fn suite(self) -> Suite {
        match self {
            SuiteArg::AffineYangian => Suite::AffineYangian,
            SuiteArg::YangianSl => Suite::YangianSl,
            SuiteArg::AffineLie => Suite::AffineLie,
            SuiteArg::Adjoint => Suite::Adjoint,
            SuiteArg::Appendix => Suite::Appendix,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum GzOp {
    MatrixElements,
    AEigen,
    Scheme,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum QuiverOp {
    Tangent,
    Form,
    Normalization,
    VvCheck,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum CurrentFamily {
    /// `h_i(u)` of the affine Yangian.
    Affine,
    /// `H_i(u)` of the Yangian of sl_N.
    Sl,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Jack(gl_N) symmetric function P_lambda.
    Jack {
        #[arg(long = "N")]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, value_enum, default_value = "schur")]
        basis: SymBasisArg,
    },
    /// Norm of P_lambda by the closed product, by Gram-Schmidt, or both.
    Norm {
        #[arg(long = "N")]
        n: usize,
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum, default_value = "both")]
        method: NormMethod,
    },
    /// Applies one generator to a basis vector.
    Act {
        #[arg(long = "N")]
        n: usize,
        #[arg(long, value_enum)]
        gen: Gen,
        #[arg(long)]
        i: usize,
        #[arg(long, default_value_t = 0)]
        r: u32,
        #[arg(long, value_enum, default_value = "b")]
        basis: BasisArg,
        #[arg(long)]
        lambda: String,
    },
    /// Runs relation-check suites; one JSON object per instance.
    Check {
        #[arg(long = "N")]
        n: usize,
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long = "max-degree", default_value_t = 6)]
        max_degree: usize,
        #[arg(long, default_value_t = 2)]
        rmax: u32,
        /// Worker threads (0 = one per core).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Gelfand-Tsetlin model data for lambda.
    Gz {
        #[arg(long = "N")]
        n: usize,
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value_t = 1)]
        i: usize,
        #[arg(long, value_enum)]
        op: GzOp,
    },
    /// Fixed-point data of the quiver variety at lambda.
    Quiver {
        #[arg(long = "N")]
        n: usize,
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum)]
        op: QuiverOp,
        /// Residue for vv-check (all residues when omitted).
        #[arg(long)]
        i: Option<usize>,
    },
    /// Eigenvalue series of a Cartan current on a basis vector.
    ExpandH {
        #[arg(long = "N")]
        n: usize,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        i: usize,
        #[arg(long, value_enum, default_value = "affine")]
        family: CurrentFamily,
        /// Number of coefficients `h_{i,0} .. h_{i,order-1}`.
        #[arg(long, default_value_t = 3)]
        order: usize,
    },
}

/// Result of one invocation: exit code and the text for stdout and stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(code: i32, kind: &str, msg: &str) -> Self {
        let line = msg.lines().next().unwrap_or("").trim();
        Outcome { code, stdout: String::new(), stderr: format!("error: {kind}: {line}\n") }
    }
}

struct DomainError(String);

impl<E: std::fmt::Display> From<E> for DomainError {
    fn from(e: E) -> Self {
        DomainError(e.to_string())
    }
}

fn partition(s: &str) -> Result<Partition, DomainError> {
    Ok(s.parse::<Partition>()?)
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(e.to_string()),
                _ => {
                    let msg = e.to_string();
                    let msg = msg.trim_start_matches("error: ");
                    Outcome::fail(EXIT_USAGE, "usage", msg)
                }
            };
        }
    };
    let text = cli.text;
    match dispatch(cli.command) {
        Ok((code, values)) => {
            let mut out = String::new();
            for v in values {
                if text {
                    render_text(&v, 0, &mut out);
                } else {
                    out += &serde_json::to_string(&v).expect("serializable");
                    out.push('\n');
                }
            }
            Outcome { code, stdout: out, stderr: String::new() }
        }
        Err(DomainError(m)) => Outcome::fail(EXIT_DOMAIN, "domain", &m),
    }
}

fn render_text(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match x {
                    Value::Object(_) | Value::Array(_) => {
                        let _ = writeln!(out, "{pad}{k}:");
                        render_text(x, indent + 1, out);
                    }
                    _ => {
                        let _ = writeln!(out, "{pad}{k}: {}", scalar(x));
                    }
                }
            }
        }
        Value::Array(a) => {
            for x in a {
                match x {
                    Value::Object(_) | Value::Array(_) => {
                        let _ = writeln!(out, "{pad}-");
                        render_text(x, indent + 1, out);
                    }
                    _ => {
                        let _ = writeln!(out, "{pad}- {}", scalar(x));
                    }
                }
            }
        }
        _ => {
            let _ = writeln!(out, "{pad}{}", scalar(v));
        }
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn fock_json(v: &FockVec) -> Value {
    v.to_json_value()
}

fn dispatch(cmd: Command) -> Result<(i32, Vec<Value>), DomainError> {
    let one = |v: Value| Ok((EXIT_OK, vec![v]));
    match cmd {
        Command::Jack { n, lambda, basis } => {
            let lam = partition(&lambda)?;
            let p = jack_gl_n(&lam, n)?;
            let p = match basis {
                SymBasisArg::Schur => p,
                SymBasisArg::Power => p.to_power(),
            };
            debug_assert!(matches!(p.basis, SymBasis::Schur | SymBasis::Power));
            let pj: Value = serde_json::from_str(&p.to_json())?;
            one(json!({"N": n, "lambda": lam.to_string(), "jack": pj}))
        }
        Command::Norm { n, lambda, method } => {
            let lam = partition(&lambda)?;
            let mut obj = serde_json::Map::new();
            obj.insert("N".into(), json!(n));
            obj.insert("lambda".into(), json!(lam.to_string()));
            let formula = if method != NormMethod::Gs { Some(jack_norm_formula(&lam, n)?) } else { None };
            let gs = if method != NormMethod::Formula { Some(jack_norm_gs(&lam, n)?) } else { None };
            if let Some(f) = &formula {
                obj.insert("formula".into(), json!(f.to_string()));
            }
            if let Some(g) = &gs {
                obj.insert("gram_schmidt".into(), json!(g.to_string()));
            }
            if let (Some(f), Some(g)) = (&formula, &gs) {
                obj.insert("agree".into(), json!(f == g));
            }
            one(Value::Object(obj))
        }
        Command::Act { n, gen, i, r, basis, lambda } => {
            let lam = partition(&lambda)?;
            let op = gen.op(i, r);
            op.validate(n)?;
            let target = basis.basis();
            let v = FockVec::basis_vector(target, lam.clone());
            let natural = op.natural_basis();
            let compatible = |a: Basis, b: Basis| (a == Basis::Schur) == (b == Basis::Schur);
            let out = if compatible(natural, target) {
                act(&op, &v, n)?
            } else {
                let w = change_basis(&v, natural, n)?;
                change_basis(&act(&op, &w, n)?, target, n)?
            };
            one(json!({"N": n, "generator": op.to_string(), "input": lam.to_string(), "result": fock_json(&out)}))
        }
        Command::Check { n, suite, max_degree, rmax, jobs } => {
            let reps = run_suite(suite.suite(), n, max_degree, rmax, jobs)?;
            let all = reps.iter().all(|r| r.pass);
            let values = reps.iter().map(|r| serde_json::to_value(r).expect("serializable")).collect();
            Ok((if all { EXIT_OK } else { EXIT_CHECK_FAILED }, values))
        }
        Command::Gz { n, lambda, i, op } => {
            let lam = partition(&lambda)?;
            match op {
                GzOp::Scheme => {
                    let (m, scheme) = partition_to_gz(&lam, n)?;
                    let blocks: Vec<Value> = m.blocks().iter().map(|(mv, p)| json!({"m": mv, "size": p})).collect();
                    let rows: Vec<Value> = (1..=scheme.blocks())
                        .map(|s| {
                            let size = m.size(s);
                            let tri: Vec<Vec<u8>> = (1..=size).map(|ii| (1..=ii).map(|p| scheme.entry(s, ii, p)).collect()).collect();
                            json!({"block": s, "thresholds": scheme.thresholds()[s - 1], "rows": tri})
                        })
                        .collect();
                    one(json!({"N": n, "lambda": lam.to_string(), "blocks": blocks, "schemes": rows}))
                }
                GzOp::MatrixElements => {
                    let els = nt_matrix_elements(&lam, i, n)?;
                    let v: Vec<Value> = els
                        .iter()
                        .map(|e| {
                            json!({
                                "cell": [e.cell.x, e.cell.y],
                                "mu": e.mu.to_string(),
                                "block": e.block,
                                "pos": e.pos,
                                "e_tilde": e.e_tilde.to_string(),
                                "f_tilde": e.f_tilde.to_string(),
                                "weight": e.weight.to_string(),
                            })
                        })
                        .collect();
                    one(json!({"N": n, "lambda": lam.to_string(), "i": i, "elements": v}))
                }
                GzOp::AEigen => {
                    let nt = nt_a_eigenvalue(&lam, i, n)?;
                    let ug = uglov_a_eigenvalue_ratio(&lam, i, n)?;
                    let roots = |f: &[(_, _)]| -> Value {
                        signed_roots(f).into_iter().map(|(k, m)| json!({"root": k.to_string(), "mult": m})).collect()
                    };
                    let a = factors_as_ratfun(&nt)?;
                    let b = factors_as_ratfun(&ug)?;
                    one(json!({
                        "N": n, "lambda": lam.to_string(), "i": i,
                        "gz": a.to_string(), "closed": b.to_string(), "agree": a == b,
                        "gz_roots": roots(&nt), "closed_roots": roots(&ug),
                    }))
                }
            }
        }
        Command::Quiver { n, lambda, op, i } => {
            let lam = partition(&lambda)?;
            if n == 0 {
                return Err(DomainError("N must be positive".into()));
            }
            match op {
                QuiverOp::Tangent => {
                    let t = tangent_character(&lam, n);
                    let taut = tangent_character_tautological(&lam, n);
                    let w: Vec<Value> = t.terms().iter().map(|((a, b), k)| json!({"t1": a, "t2": b, "mult": k})).collect();
                    one(json!({"N": n, "lambda": lam.to_string(), "v": v_dim(&lam, n), "weights": w, "rank": t.rank(), "tautological_agrees": t == taut}))
                }
                QuiverOp::Form => {
                    let e = h_form(&lam, &lam, n)?;
                    let c = h_form_closed(&lam, n);
                    one(json!({"N": n, "lambda": lam.to_string(), "euler": e.to_string(), "closed": c.to_string(), "agree": e == c}))
                }
                QuiverOp::Normalization => {
                    let bp = b_prime_normalization(&lam, n)?;
                    let b = b_normalization(&lam, n)?;
                    one(json!({"N": n, "lambda": lam.to_string(), "primed": bp.to_string(), "signed": b.to_string(), "sign_exponent": lam.epsilon_sign(n)}))
                }
                QuiverOp::VvCheck => {
                    let is: Vec<usize> = match i {
                        Some(i) if i < n => vec![i],
                        Some(i) => return Err(DomainError(format!("index i = {i} out of range for N = {n}"))),
                        None => (0..n).collect(),
                    };
                    let res: Vec<Value> = is.iter().map(|&i| json!({"i": i, "holds": vv_weight_identities(&lam, i, n)})).collect();
                    let all = is.iter().all(|&i| vv_weight_identities(&lam, i, n));
                    Ok((if all { EXIT_OK } else { EXIT_CHECK_FAILED }, vec![json!({"N": n, "lambda": lam.to_string(), "residues": res})]))
                }
            }
        }
        Command::ExpandH { n, lambda, i, family, order } => {
            let lam = partition(&lambda)?;
            let fam = match family {
                CurrentFamily::Affine => Family::AffineYangian,
                CurrentFamily::Sl => Family::YangianSl,
            };
            let s = cartan_series(fam, &lam, i, n, order)?;
            let hb = crate::ratfield::hbar();
            let mut coeffs = Vec::new();
            for r in 0..order {
                let c = s.coeff(r + 1).expect("within order").checked_div(&hb)?;
                coeffs.push(json!({"r": r, "coeff": c.to_string()}));
            }
            let name = match family {
                CurrentFamily::Affine => "h",
                CurrentFamily::Sl => "H",
            };
            one(json!({"N": n, "lambda": lam.to_string(), "current": format!("{name}_{i}"), "coefficients": coeffs}))
        }
    }
}
