//! Command-line front end for the `ginlab` library: parses rings, orders,
//! and ideals from flags, dispatches to the library operations, and renders
//! either human-readable text or schema-stable JSON.
//!
//! The JSON schema is language-neutral on purpose: monomials are integer
//! exponent arrays, rational coefficients are strings like `"3/2"`, and
//! Betti tables are sparse `[i, j, value]` triples.  With a fixed seed, two
//! invocations with identical flags produce identical bytes on stdout.

use clap::{Parser, Subcommand};
use serde::Serialize;

use ginlab::{
    betti_table, buchberger, distinguishing_ideal, first_disagreement, gin, initial_ideal,
    is_segment, membership, parse_ideal, parse_monomials, parse_order, parse_polynomial,
    parse_ring, reduce_gb, regularity_gap_ideal, rlex_gap_witness, BettiTable, Disagreement,
    Error, GapWitness, GinConfig, GinResult, GroebnerBasis, Ideal, Monomial, MonomialIdeal,
    OrderSpec, Polynomial, Result, Ring, DEFAULT_SCAN_DEGREE,
};

/// Exact Gröbner-basis and generic-initial-ideal computations over Q.
#[derive(Parser, Debug)]
#[command(name = "ginlab", version, about)]
pub struct Cli {
    /// Ring variables: comma-separated names ("x,y,z") or a count ("n=6",
    /// naming them x1..x6).
    #[arg(long, global = true)]
    pub ring: Option<String>,

    /// Monomial order: "lex", "rlex", or "weight:w1,...,wn;tie=lex|rlex".
    #[arg(long, global = true, default_value = "rlex")]
    pub order: String,

    /// Second order, for commands that compare two orders.
    #[arg(long, global = true)]
    pub order2: Option<String>,

    /// Ideal generators: comma-separated homogeneous polynomials.
    #[arg(long, global = true)]
    pub ideal: Option<String>,

    /// Seed for the randomized coordinate changes (falls back to the
    /// GINLAB_SEED environment variable, then to 0).
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Random matrix entries are drawn from [-entry_bound, entry_bound].
    #[arg(long, global = true)]
    pub entry_bound: Option<u64>,

    /// Consecutive agreeing trials required to declare stabilization.
    #[arg(long, global = true)]
    pub agreement: Option<u32>,

    /// Total trial budget for the stabilization search.
    #[arg(long, global = true)]
    pub max_trials: Option<u32>,

    /// Degree bound for disagreement and gap-witness scans.
    #[arg(long, global = true)]
    pub dmax: Option<u32>,

    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: CommandKind,
}

#[derive(Subcommand, Debug, Clone)]
pub enum CommandKind {
    /// Reduced Gröbner basis of --ideal under --order.
    Gb,
    /// Initial ideal (ideal of leading monomials) of --ideal under --order.
    In,
    /// Generic initial ideal of --ideal under --order.
    Gin,
    /// Castelnuovo-Mumford regularity of --ideal, via the reverse-lex
    /// generic initial ideal.
    Reg,
    /// Is the monomial ideal given by --ideal Borel-fixed?
    Borel,
    /// Are the --ideal monomials, degree by degree, top segments of --order?
    Segment,
    /// Is the monomial ideal given by --ideal a segment ideal for --order?
    SegmentIdeal,
    /// Betti table of the monomial ideal given by --ideal.
    Betti,
    /// Construct an ideal on which --order and --order2 have different
    /// generic initial ideals.
    Distinguish,
    /// Earliest comparison where --order ranks x1^d*xk above x_{k-1}^(d+1),
    /// i.e. deviates from reverse-lex.
    GapWitness,
    /// Construct the ideal whose regularity --order overestimates at the
    /// comparison indexed by k and d.
    GapIdeal {
        /// Variable index of the gap comparison (3 <= k <= n).
        #[arg(long)]
        k: usize,
        /// Degree of the gap comparison (d >= 1).
        #[arg(long)]
        d: u32,
    },
    /// Does --poly lie in --ideal?  Decided by Gröbner-basis reduction.
    Membership {
        /// Polynomial to test for membership.
        #[arg(long)]
        poly: String,
    },
}

/// A fully validated invocation: everything parsed into domain types.
#[derive(Debug)]
pub struct Request {
    pub ring: Ring,
    pub order: OrderSpec,
    pub command: Command,
    pub config: GinConfig,
    pub dmax: u32,
    pub json: bool,
}

#[derive(Debug)]
pub enum Command {
    GroebnerBasis { ideal: Ideal },
    InitialIdeal { ideal: Ideal },
    GenericInitialIdeal { ideal: Ideal },
    Regularity { ideal: Ideal },
    BorelCheck { generators: Vec<Monomial> },
    SegmentCheck { monomials: Vec<Monomial> },
    SegmentIdealCheck { generators: Vec<Monomial> },
    BettiTable { generators: Vec<Monomial> },
    Distinguish { second: OrderSpec },
    GapWitness,
    GapIdeal { k: usize, d: u32 },
    Membership { ideal: Ideal, poly: Polynomial },
}

/// Validates the raw flags into a [`Request`].  All semantic errors (bad
/// grammar, unknown variables, non-homogeneous generators, invalid
/// configuration) surface here, before any computation starts.
///
/// `env_seed` is the value of the `GINLAB_SEED` environment variable, if
/// set; an explicit `--seed` wins over it.
pub fn parse_request(cli: Cli, env_seed: Option<&str>) -> Result<Request> {
    let Cli {
        ring,
        order,
        order2,
        ideal,
        seed,
        entry_bound,
        agreement,
        max_trials,
        dmax,
        json,
        command,
    } = cli;

    let ring_text = ring.ok_or_else(|| {
        Error::InvalidConfig("--ring is required (e.g. --ring x,y,z or --ring n=4)".to_string())
    })?;
    let ring = parse_ring(&ring_text)?;
    let order = parse_order(&order, ring.nvars())?;

    let defaults = GinConfig::default();
    let seed = match seed {
        Some(s) => s,
        None => match env_seed {
            Some(text) => text.trim().parse().map_err(|_| {
                Error::InvalidConfig(format!("invalid GINLAB_SEED value '{text}'"))
            })?,
            None => defaults.seed,
        },
    };
    let config = GinConfig {
        entry_bound: entry_bound.unwrap_or(defaults.entry_bound),
        agreement: agreement.unwrap_or(defaults.agreement),
        max_trials: max_trials.unwrap_or(defaults.max_trials),
        seed,
    };
    config.validate()?;

    let dmax = dmax.unwrap_or(DEFAULT_SCAN_DEGREE);
    if dmax == 0 {
        return Err(Error::InvalidConfig("--dmax must be at least 1".to_string()));
    }

    let need_ideal = |name: &str| {
        ideal.as_deref().ok_or_else(|| {
            Error::InvalidConfig(format!("--ideal is required for the {name} command"))
        })
    };

    let command = match command {
        CommandKind::Gb => Command::GroebnerBasis {
            ideal: parse_ideal(need_ideal("gb")?, &ring)?,
        },
        CommandKind::In => Command::InitialIdeal {
            ideal: parse_ideal(need_ideal("in")?, &ring)?,
        },
        CommandKind::Gin => Command::GenericInitialIdeal {
            ideal: parse_ideal(need_ideal("gin")?, &ring)?,
        },
        CommandKind::Reg => Command::Regularity {
            ideal: parse_ideal(need_ideal("reg")?, &ring)?,
        },
        CommandKind::Borel => Command::BorelCheck {
            generators: parse_monomials(need_ideal("borel")?, &ring)?,
        },
        CommandKind::Segment => Command::SegmentCheck {
            monomials: parse_monomials(need_ideal("segment")?, &ring)?,
        },
        CommandKind::SegmentIdeal => Command::SegmentIdealCheck {
            generators: parse_monomials(need_ideal("segment-ideal")?, &ring)?,
        },
        CommandKind::Betti => Command::BettiTable {
            generators: parse_monomials(need_ideal("betti")?, &ring)?,
        },
        CommandKind::Distinguish => {
            let text = order2.ok_or_else(|| {
                Error::InvalidConfig(
                    "--order2 is required for the distinguish command".to_string(),
                )
            })?;
            Command::Distinguish {
                second: parse_order(&text, ring.nvars())?,
            }
        }
        CommandKind::GapWitness => Command::GapWitness,
        CommandKind::GapIdeal { k, d } => Command::GapIdeal { k, d },
        CommandKind::Membership { poly } => Command::Membership {
            ideal: parse_ideal(need_ideal("membership")?, &ring)?,
            poly: parse_polynomial(&poly, &ring)?,
        },
    };

    Ok(Request {
        ring,
        order,
        command,
        config,
        dmax,
        json,
    })
}

/// The result of one command, in domain types.
#[derive(Debug)]
pub enum Outcome {
    Basis(GroebnerBasis),
    InIdeal(MonomialIdeal),
    GinIdeal(GinResult),
    RegValue { value: u32, via: GinResult },
    Flag(bool),
    Betti(BettiTable),
    Witness(Option<GapWitness>),
    Separation { disagreement: Disagreement, ideal: Ideal },
    GapIdealOut(Ideal),
}

/// Executes the request's command.  Errors propagate unchanged, so a
/// stabilization failure is distinguishable from domain errors by the caller.
pub fn run(request: &Request) -> Result<Outcome> {
    let ring = &request.ring;
    let order = &request.order;
    let nvars = ring.nvars();
    Ok(match &request.command {
        Command::GroebnerBasis { ideal } => Outcome::Basis(reduce_gb(&buchberger(ideal, order))),
        Command::InitialIdeal { ideal } => Outcome::InIdeal(initial_ideal(ideal, order)),
        Command::GenericInitialIdeal { ideal } => {
            Outcome::GinIdeal(gin(ideal, order, &request.config)?)
        }
        Command::Regularity { ideal } => {
            let via = gin(ideal, &OrderSpec::RevLex, &request.config)?;
            let value = via.ideal.regularity_borel()?;
            Outcome::RegValue { value, via }
        }
        Command::BorelCheck { generators } => {
            Outcome::Flag(MonomialIdeal::new(nvars, generators.clone()).is_borel_fixed())
        }
        Command::SegmentCheck { monomials } => Outcome::Flag(is_segment(monomials, order)),
        Command::SegmentIdealCheck { generators } => {
            Outcome::Flag(MonomialIdeal::new(nvars, generators.clone()).is_segment_ideal(order))
        }
        Command::BettiTable { generators } => {
            Outcome::Betti(betti_table(&MonomialIdeal::new(nvars, generators.clone())))
        }
        Command::Distinguish { second } => {
            let disagreement = first_disagreement(order, second, nvars, request.dmax)
                .ok_or(Error::NoDisagreement { dmax: request.dmax })?;
            let ideal = distinguishing_ideal(order, second, ring, request.dmax)?;
            Outcome::Separation { disagreement, ideal }
        }
        Command::GapWitness => Outcome::Witness(rlex_gap_witness(order, nvars, request.dmax)),
        Command::GapIdeal { k, d } => Outcome::GapIdealOut(regularity_gap_ideal(*k, *d, ring)?),
        Command::Membership { ideal, poly } => {
            let gb = buchberger(ideal, order);
            Outcome::Flag(membership(poly, &gb))
        }
    })
}

// ---------------------------------------------------------------------------
// JSON schema

#[derive(Serialize)]
struct JsonReport {
    command: String,
    ring: Vec<String>,
    order: String,
    payload: Payload,
    #[serde(skip_serializing_if = "Option::is_none")]
    trials: Option<TrialMeta>,
}

#[derive(Serialize)]
struct TrialMeta {
    trials_used: u32,
    borel_verified: bool,
    seed: u64,
}

#[derive(Serialize)]
struct JsonTerm {
    coeff: String,
    monomial: Vec<u32>,
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum Payload {
    Basis {
        elements: Vec<Vec<JsonTerm>>,
    },
    MonomialIdeal {
        generators: Vec<Vec<u32>>,
    },
    Ideal {
        generators: Vec<Vec<JsonTerm>>,
    },
    Integer {
        value: u32,
    },
    Boolean {
        value: bool,
    },
    Betti {
        truncation: u32,
        entries: Vec<(u32, u32, u64)>,
    },
    GapWitness {
        found: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        k: Option<usize>,
        #[serde(skip_serializing_if = "Option::is_none")]
        d: Option<u32>,
    },
    Disagreement {
        degree: u32,
        position: usize,
        first: Vec<u32>,
        second: Vec<u32>,
        generators: Vec<Vec<JsonTerm>>,
    },
}

fn json_poly(p: &Polynomial, order: &OrderSpec) -> Vec<JsonTerm> {
    p.sorted_terms(order)
        .iter()
        .map(|t| JsonTerm {
            coeff: t.coeff.to_string(),
            monomial: t.monomial.exponents().to_vec(),
        })
        .collect()
}

fn json_ideal(ideal: &Ideal, order: &OrderSpec) -> Vec<Vec<JsonTerm>> {
    ideal.generators().iter().map(|g| json_poly(g, order)).collect()
}

fn json_monomial_ideal(j: &MonomialIdeal) -> Vec<Vec<u32>> {
    j.min_gens().iter().map(|m| m.exponents().to_vec()).collect()
}

fn trial_meta(g: &GinResult) -> TrialMeta {
    TrialMeta {
        trials_used: g.trials_used,
        borel_verified: g.borel_verified,
        seed: g.seed,
    }
}

fn command_name(command: &Command) -> &'static str {
    match command {
        Command::GroebnerBasis { .. } => "gb",
        Command::InitialIdeal { .. } => "in",
        Command::GenericInitialIdeal { .. } => "gin",
        Command::Regularity { .. } => "reg",
        Command::BorelCheck { .. } => "borel",
        Command::SegmentCheck { .. } => "segment",
        Command::SegmentIdealCheck { .. } => "segment-ideal",
        Command::BettiTable { .. } => "betti",
        Command::Distinguish { .. } => "distinguish",
        Command::GapWitness => "gap-witness",
        Command::GapIdeal { .. } => "gap-ideal",
        Command::Membership { .. } => "membership",
    }
}

fn render_json(request: &Request, outcome: &Outcome) -> String {
    let order = &request.order;
    let (payload, trials) = match outcome {
        Outcome::Basis(gb) => (
            Payload::Basis {
                elements: gb.elements().iter().map(|g| json_poly(g, order)).collect(),
            },
            None,
        ),
        Outcome::InIdeal(j) => (
            Payload::MonomialIdeal {
                generators: json_monomial_ideal(j),
            },
            None,
        ),
        Outcome::GinIdeal(g) => (
            Payload::MonomialIdeal {
                generators: json_monomial_ideal(&g.ideal),
            },
            Some(trial_meta(g)),
        ),
        Outcome::RegValue { value, via } => (
            Payload::Integer { value: *value },
            Some(trial_meta(via)),
        ),
        Outcome::Flag(value) => (Payload::Boolean { value: *value }, None),
        Outcome::Betti(table) => (
            Payload::Betti {
                truncation: table.truncation(),
                entries: table.entries().collect(),
            },
            None,
        ),
        Outcome::Witness(w) => (
            Payload::GapWitness {
                found: w.is_some(),
                k: w.map(|w| w.k),
                d: w.map(|w| w.d),
            },
            None,
        ),
        Outcome::Separation { disagreement, ideal } => (
            Payload::Disagreement {
                degree: disagreement.degree,
                position: disagreement.position,
                first: disagreement.first.exponents().to_vec(),
                second: disagreement.second.exponents().to_vec(),
                generators: json_ideal(ideal, order),
            },
            None,
        ),
        Outcome::GapIdealOut(ideal) => (
            Payload::Ideal {
                generators: json_ideal(ideal, order),
            },
            None,
        ),
    };
    let report = JsonReport {
        command: command_name(&request.command).to_string(),
        ring: (0..request.ring.nvars())
            .map(|i| request.ring.var_name(i).to_string())
            .collect(),
        order: order.to_string(),
        payload,
        trials,
    };
    let mut text = serde_json::to_string_pretty(&report).expect("report serializes");
    text.push('\n');
    text
}

// ---------------------------------------------------------------------------
// Text rendering

fn ideal_text(ideal: &Ideal, ring: &Ring, order: &OrderSpec) -> String {
    let gens: Vec<String> = ideal
        .generators()
        .iter()
        .map(|g| g.display_under(ring, order).to_string())
        .collect();
    format!("({})", gens.join(", "))
}

fn trials_text(g: &GinResult) -> String {
    let borel = if g.borel_verified {
        "Borel-fixed"
    } else {
        "not Borel-checked"
    };
    format!(
        "# stabilized after {} trials, {}, seed {}\n",
        g.trials_used, borel, g.seed
    )
}

fn render_text(request: &Request, outcome: &Outcome) -> String {
    let ring = &request.ring;
    let order = &request.order;
    match outcome {
        Outcome::Basis(gb) => {
            let mut out = String::new();
            for g in gb.elements() {
                out.push_str(&g.display_under(ring, order).to_string());
                out.push('\n');
            }
            out
        }
        Outcome::InIdeal(j) => format!("{}\n", j.display(ring)),
        Outcome::GinIdeal(g) => format!("{}\n{}", g.ideal.display(ring), trials_text(g)),
        Outcome::RegValue { value, via } => format!("{}\n{}", value, trials_text(via)),
        Outcome::Flag(value) => format!("{value}\n"),
        Outcome::Betti(table) => {
            let mut out = String::new();
            for (i, j, v) in table.entries() {
                out.push_str(&format!("beta({i}, {j}) = {v}\n"));
            }
            out.push_str(&format!("# table exact below degree {}\n", table.truncation()));
            out
        }
        Outcome::Witness(None) => format!("no witness up to degree {}\n", request.dmax),
        Outcome::Witness(Some(w)) => format!("witness: k={}, d={}\n", w.k, w.d),
        Outcome::Separation { disagreement, ideal } => {
            let first = disagreement.first.display(ring);
            let second = disagreement.second.display(ring);
            format!(
                "degree {}, position {}: {} vs {}\nideal: {}\n",
                disagreement.degree,
                disagreement.position,
                first,
                second,
                ideal_text(ideal, ring, order)
            )
        }
        Outcome::GapIdealOut(ideal) => format!("{}\n", ideal_text(ideal, ring, order)),
    }
}

/// Renders an outcome per the request's output mode.  The returned string is
/// the complete stdout payload, trailing newline included.
pub fn render(request: &Request, outcome: &Outcome) -> String {
    if request.json {
        render_json(request, outcome)
    } else {
        render_text(request, outcome)
    }
}

/// Parse, run, render: the whole pipeline behind the binary, exposed for
/// in-process testing.
pub fn execute(cli: Cli, env_seed: Option<&str>) -> Result<String> {
    let request = parse_request(cli, env_seed)?;
    let outcome = run(&request)?;
    Ok(render(&request, &outcome))
}
