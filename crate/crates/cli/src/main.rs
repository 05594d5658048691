use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use tilegroups::artin::{abelianization, certify_nontrivial, coxeter_image, CoxeterSystem, Presentation};
use tilegroups::braid::{cable, equal, handle_reduce, is_trivial, BraidWord};
use tilegroups::homs::{discrepancy, omega_gamma, phi, phi1, phi_tile, theta};
use tilegroups::tiles::{endo_group, endo_group_hat, normal_form, tree_of, TileExpr};
use tilegroups::verify::{paper_suite, random_suite, SuiteConfig, VerificationReport};
use tilegroups::{IntMatrix, Integer};

mod edge_word;

#[derive(Parser)]
#[command(name = "tilegroups", version, about = "Braid groups, tile Artin groups and their representations")]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Opts {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Longest random braid word in randomized checks.
    #[arg(long, global = true)]
    max_len: Option<usize>,
    /// Genus for symplectic maps (largest genus for `verify`).
    #[arg(long, global = true)]
    genus: Option<usize>,
    /// Only print the final verdict.
    #[arg(long, global = true)]
    quiet: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Braid words: `b<n>: s1 s2^-1 ...`.
    #[command(subcommand)]
    Braid(BraidCmd),
    /// Tile expressions: `(F + F) ; P`.
    #[command(subcommand)]
    Tile(TileCmd),
    /// Artin groups of tile graphs.
    #[command(subcommand)]
    Artin(ArtinCmd),
    /// Homomorphisms between the groups.
    #[command(subcommand)]
    Hom(HomCmd),
    /// Verification suites.
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Subcommand)]
enum BraidCmd {
    /// Handle-reduce a word (empty iff trivial).
    Reduce { word: String },
    /// Decide whether a word is the identity braid.
    Trivial { word: String },
    /// Decide whether two words are the same braid.
    Equal { a: String, b: String },
    /// Cable `sigma` with one braid per strand.
    Cable { sigma: String, mus: Vec<String> },
    /// Replace every letter by its inverse.
    Mirror { word: String },
}

#[derive(Subcommand)]
enum TileCmd {
    /// Canonical expression of the tile.
    Nf { tile: String },
    /// The marked graph of the tile.
    Tree { tile: String },
    /// Artin presentation of its endomorphism group.
    Group { tile: String },
    /// Braid group of its marked points.
    Mcg { tile: String },
}

#[derive(Subcommand)]
enum ArtinCmd {
    /// Abelianization of a tile's Artin group, or of `β_n` with `--strands`.
    Abelianize {
        tile: Option<String>,
        #[arg(long)]
        strands: Option<usize>,
    },
    /// Image of an edge word in the Coxeter quotient's Tits representation.
    Coxeter {
        tile: String,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Try to certify an edge word nontrivial via the Coxeter quotient.
    Certify {
        tile: String,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
}

#[derive(Subcommand)]
enum HomCmd {
    /// Symplectic image of a braid on `2g` strands.
    Phi { word: String },
    /// Braid image of an edge word.
    Theta {
        tile: String,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Edge-transvection image of an edge word.
    Phitile {
        tile: String,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Block map of `sigma` with blocks `phi(mu_i)`.
    OmegaGamma { sigma: String, mus: Vec<String> },
    /// Block permutation of a braid.
    Phi1 { word: String },
    /// Compare `phi(cable(sigma; mus))` with `omega-gamma(sigma; phi(mus))`.
    Discrepancy { sigma: String, mus: Vec<String> },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// The acceptance suite.
    Paper,
    /// Randomized property checks.
    Random,
}

/// What a command produced: text, JSON, and whether it counts as a failure.
struct Output {
    text: String,
    json: Value,
    failed: bool,
}

impl Output {
    fn ok(text: impl Into<String>, json: Value) -> Self {
        Self {
            text: text.into(),
            json,
            failed: false,
        }
    }
}

type Result<T> = std::result::Result<T, String>;

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn braid(s: &str) -> Result<BraidWord> {
    s.parse().map_err(|e| format!("braid word {s:?}: {e}"))
}

fn braids(v: &[String]) -> Result<Vec<BraidWord>> {
    v.iter().map(|s| braid(s)).collect()
}

fn tile(s: &str) -> Result<TileExpr> {
    s.parse().map_err(|e| format!("tile {s:?}: {e}"))
}

fn matrix_text(m: &IntMatrix) -> String {
    m.to_string()
}

fn matrix_json(m: &IntMatrix) -> Value {
    serde_json::to_value(m).expect("matrices serialize")
}

fn bool_output(v: bool) -> Output {
    Output::ok(v.to_string(), json!(v))
}

fn word_json(w: &BraidWord) -> Value {
    json!(w.to_string())
}

fn run_braid(cmd: BraidCmd) -> Result<Output> {
    Ok(match cmd {
        BraidCmd::Reduce { word } => {
            let w = braid(&word)?;
            let r = BraidWord::from_signed(w.strands(), &handle_reduce(&w.signed_letters())).map_err(err)?;
            Output::ok(r.to_string(), word_json(&r))
        }
        BraidCmd::Trivial { word } => bool_output(is_trivial(&braid(&word)?).map_err(err)?),
        BraidCmd::Equal { a, b } => bool_output(equal(&braid(&a)?, &braid(&b)?).map_err(err)?),
        BraidCmd::Cable { sigma, mus } => {
            let sigma = braid(&sigma)?;
            let mus = braids(&mus)?;
            let k = mus.first().map_or(1, BraidWord::strands);
            let c = cable(sigma.strands(), k, &sigma, &mus).map_err(err)?;
            Output::ok(c.to_string(), word_json(&c))
        }
        BraidCmd::Mirror { word } => {
            let m = braid(&word)?.mirror();
            Output::ok(m.to_string(), word_json(&m))
        }
    })
}

fn run_tile(cmd: TileCmd) -> Result<Output> {
    Ok(match cmd {
        TileCmd::Nf { tile: t } => {
            let nf = normal_form(&tile(&t)?).to_expr();
            Output::ok(nf.to_string(), json!(nf.to_string()))
        }
        TileCmd::Tree { tile: t } => {
            let g = tree_of(&tile(&t)?);
            let edges = g.labelled_edges();
            let text = format!(
                "{} marked points; edges {}",
                g.vertex_count(),
                edges
                    .iter()
                    .map(|(a, b)| format!("({a},{b})"))
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            Output::ok(
                text,
                json!({
                    "points": g.vertex_count(),
                    "edges": edges,
                    "half_edges": g.incomplete_half_edges(),
                }),
            )
        }
        TileCmd::Group { tile: t } => {
            let p = endo_group(&tile(&t)?);
            Output::ok(p.to_string(), serde_json::to_value(&p).map_err(err)?)
        }
        TileCmd::Mcg { tile: t } => {
            let k = endo_group_hat(&tile(&t)?);
            let p = Presentation::braid_group(k.max(1));
            Output::ok(
                format!("braid group on {k} strands: {p}"),
                json!({ "strands": k, "presentation": p }),
            )
        }
    })
}

fn run_artin(cmd: ArtinCmd) -> Result<Output> {
    Ok(match cmd {
        ArtinCmd::Abelianize { tile: t, strands } => {
            let p = match (t, strands) {
                (Some(t), None) => endo_group(&tile(&t)?),
                (None, Some(n)) => Presentation::braid_group(n),
                _ => return Err("give exactly one of a tile or --strands".into()),
            };
            let a = abelianization(&p);
            Output::ok(a.to_string(), serde_json::to_value(&a).map_err(err)?)
        }
        ArtinCmd::Coxeter { tile: t, word } => {
            let g = tree_of(&tile(&t)?);
            let w = edge_word::parse(&word)?;
            let m = coxeter_image(&CoxeterSystem::from_graph(&g), &w).map_err(err)?;
            Output::ok(m.to_string(), serde_json::to_value(&m).map_err(err)?)
        }
        ArtinCmd::Certify { tile: t, word } => {
            let g = tree_of(&tile(&t)?);
            let w = edge_word::parse(&word)?;
            let c = certify_nontrivial(&g, &w).map_err(err)?;
            let v = serde_json::to_value(c).map_err(err)?;
            Output::ok(v.as_str().unwrap_or_default().to_string(), v)
        }
    })
}

fn genus_for(word: &BraidWord, flag: Option<usize>) -> Result<usize> {
    match flag {
        Some(g) => Ok(g),
        None if word.strands() % 2 == 0 => Ok(word.strands() / 2),
        None => Err(format!("expected an even strand count, found {}", word.strands())),
    }
}

fn run_hom(cmd: HomCmd, opts: &Opts) -> Result<Output> {
    Ok(match cmd {
        HomCmd::Phi { word } => {
            let w = braid(&word)?;
            let m: IntMatrix = phi(genus_for(&w, opts.genus)?, &w).map_err(err)?;
            Output::ok(matrix_text(&m), matrix_json(&m))
        }
        HomCmd::Theta { tile: t, word } => {
            let b = theta(&tile(&t)?, &edge_word::parse(&word)?).map_err(err)?;
            Output::ok(b.to_string(), word_json(&b))
        }
        HomCmd::Phitile { tile: t, word } => {
            let m: IntMatrix = phi_tile(&tile(&t)?, &edge_word::parse(&word)?).map_err(err)?;
            Output::ok(matrix_text(&m), matrix_json(&m))
        }
        HomCmd::OmegaGamma { sigma, mus } => {
            let sigma = braid(&sigma)?;
            let mus = braids(&mus)?;
            let fs = mus
                .iter()
                .map(|m| genus_for(m, opts.genus).and_then(|g| phi::<Integer>(g, m).map_err(err)))
                .collect::<Result<Vec<_>>>()?;
            if fs.is_empty() {
                return Err(format!("expected {} block braids, found 0", sigma.strands()));
            }
            let m = omega_gamma(&sigma, &fs).map_err(err)?;
            Output::ok(matrix_text(&m), matrix_json(&m))
        }
        HomCmd::Phi1 { word } => {
            let m: IntMatrix = phi1(opts.genus.unwrap_or(1), &braid(&word)?);
            Output::ok(matrix_text(&m), matrix_json(&m))
        }
        HomCmd::Discrepancy { sigma, mus } => {
            let sigma = braid(&sigma)?;
            let mus = braids(&mus)?;
            let first = mus
                .first()
                .ok_or_else(|| format!("expected {} block braids, found 0", sigma.strands()))?;
            let g = genus_for(first, opts.genus)?;
            let d = discrepancy::<Integer>(g, &sigma, &mus).map_err(err)?;
            let text = format!(
                "A = phi(cable):\n{}\nB = omega-gamma:\n{}\nequal: {}",
                d.twisted_cable, d.permuted_blocks, d.commutes
            );
            Output::ok(
                text,
                json!({
                    "a": matrix_json(&d.twisted_cable),
                    "b": matrix_json(&d.permuted_blocks),
                    "equal": d.commutes,
                }),
            )
        }
    })
}

fn run_verify(cmd: VerifyCmd, opts: &Opts) -> Result<Output> {
    let defaults = SuiteConfig::default();
    let cfg = SuiteConfig {
        seed: opts.seed,
        max_len: opts.max_len.unwrap_or(defaults.max_len),
        genus: opts.genus.unwrap_or(defaults.genus),
    };
    let report: VerificationReport = match cmd {
        VerifyCmd::Paper => paper_suite(&cfg),
        VerifyCmd::Random => random_suite(&cfg),
    };
    let text = if opts.quiet {
        format!("overall: {}", report.overall)
    } else {
        report.to_string()
    };
    Ok(Output {
        text,
        json: serde_json::to_value(&report).map_err(err)?,
        failed: !report.passed(),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = cli.opts;
    let result = match cli.command {
        Command::Braid(c) => run_braid(c),
        Command::Tile(c) => run_tile(c),
        Command::Artin(c) => run_artin(c),
        Command::Hom(c) => run_hom(c, &opts),
        Command::Verify(c) => run_verify(c, &opts),
    };
    match result {
        Ok(out) => {
            if opts.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("values serialize"));
            } else {
                println!("{}", out.text);
            }
            if out.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
