//! Argument model and dispatch for the `coideal` binary.

use std::collections::BTreeMap;

use clap::{Args, Parser, Subcommand, ValueEnum};
use coideal_core::costructure::{bi_ideal_left, bi_ideal_right, cocommutator, legs_in, TensorElement};
use coideal_core::lie::{verify_presentation, RelationSet};
use coideal_core::manin::{verify_triple, DEFAULT_WINDOW};
use coideal_core::quantum::{
    match_stated, semiclassical_coaction, semiclassical_coproduct, solve_intertwiner, stated_k_matrix,
    verify_coassociativity, verify_reflection, verify_relations, verify_yang_baxter, Family, KMatch, MGen, RKind,
    RelContext, UGen,
};
use coideal_core::twist::{classify, verify_symmetric_space};
use coideal_core::{
    Check, Classification, Context, Kind, MatrixRF, ModelId, PairingId, RationalFn, RepId, Report, Result as CoreResult,
    SubspaceId, Symbol, Triple, TripleId, TwistId, Var,
};

use crate::dsl::{parse_binding, parse_generator, parse_scalar, DslError, GenRef};
use crate::props;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "coideal", version, about = "Exact checks for Manin triples, Lie bi-ideals and K-matrices")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Variable binding `VAR=EXPR`, applied to every parsed scalar and K-matrix.
    #[arg(long = "bind", global = true, value_name = "VAR=EXPR")]
    pub bind: Vec<String>,
    /// Seed for the randomized property subset of `report --all`.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a triple, twist, presentation, representation, coaction or R-matrix
    #[command(subcommand)]
    Verify(Verify),
    /// Cocommutator of an element of p+.
    Delta(DeltaArgs),
    /// Left (or right) bi-ideal map of an element of k+.
    Tau(TauArgs),
    /// Solve the intertwiner equation for a model's K-matrix.
    Kmatrix(KmatrixArgs),
    /// First-order comparison of a coproduct or coaction with its classical limit.
    Semiclassical(SemiclassicalArgs),
    /// Run every verification.
    Report {
        #[arg(long)]
        all: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum Verify {
    /// Manin triple axioms at a mode window
    Triple {
        #[arg(long)]
        id: TripleId,
        #[arg(long, default_value_t = DEFAULT_WINDOW)]
        window: i32,
        /// Replace the triple's own pairing, e.g. for a negative control.
        #[arg(long, value_enum)]
        form: Option<FormArg>,
    },
    /// Twist classification and symmetric-space checks
    Twist {
        #[arg(long)]
        id: TwistId,
        #[arg(long)]
        triple: TripleId,
        #[arg(long, default_value_t = DEFAULT_WINDOW)]
        window: i32,
    },
    /// Classical relations derived from the definitions
    Presentation {
        #[arg(long)]
        id: RelationSet,
        #[arg(long, default_value_t = 4)]
        range: i32,
    },
    /// Defining relations in an evaluation representation and its coproduct
    Rep {
        #[arg(long, value_enum)]
        id: RepArg,
        #[arg(long)]
        alpha: Option<String>,
    },
    /// Counit, boundary, tensor-coaction and coassociativity checks for a model
    Coaction {
        #[arg(long)]
        model: ModelId,
        #[arg(long)]
        alpha: Option<String>,
    },
    /// Yang-Baxter equation for an R-matrix
    Ybe {
        #[arg(long, value_enum)]
        r: RArg,
    },
    /// Reflection equation for a model's displayed K-matrix
    Re {
        #[arg(long)]
        model: ModelId,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormArg {
    Loop,
    HalfLoop,
    Double,
    A,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RepArg {
    Uhl,
    Yangian,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RArg {
    Trig,
    Rational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DeltaTriple {
    #[value(name = "D")]
    D,
    #[value(name = "L")]
    L,
    #[value(name = "A")]
    A,
    #[value(name = "A-invariant")]
    AInvariant,
}

#[derive(Debug, Args)]
pub struct DeltaArgs {
    #[arg(long, value_enum)]
    pub triple: DeltaTriple,
    #[arg(long)]
    pub element: String,
    #[arg(long, default_value_t = DEFAULT_WINDOW)]
    pub window: i32,
}

#[derive(Debug, Args)]
pub struct TauArgs {
    /// Use the right bi-ideal map instead of the left one
    #[arg(long)]
    pub right: bool,
    #[arg(long)]
    pub triple: TripleId,
    #[arg(long)]
    pub twist: TwistId,
    #[arg(long)]
    pub element: String,
    #[arg(long, default_value_t = DEFAULT_WINDOW)]
    pub window: i32,
}

#[derive(Debug, Args)]
pub struct KmatrixArgs {
    #[arg(long)]
    pub model: ModelId,
    #[arg(long, conflicts_with = "symbolic_alpha")]
    pub alpha: Option<String>,
    #[arg(long)]
    pub symbolic_alpha: bool,
}

#[derive(Debug, Args)]
pub struct SemiclassicalArgs {
    #[arg(long)]
    pub target: String,
    /// Coideal model owning the target; without it the target is a generator
    /// of U_h(L) or of the Yangian.
    #[arg(long)]
    pub model: Option<ModelId>,
    #[arg(long, default_value_t = DEFAULT_WINDOW)]
    pub window: i32,
}

/// A finished command: the report plus the bindings it ran under.
pub struct Outcome {
    pub report: Report,
    pub bindings: BTreeMap<String, String>,
}

/// Errors that stop a command before any check runs (exit status 2).
#[derive(Debug)]
pub enum UsageError {
    Dsl(DslError),
    Invalid(String),
}

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            UsageError::Dsl(e) => write!(f, "{e}"),
            UsageError::Invalid(m) => f.write_str(m),
        }
    }
}

impl From<DslError> for UsageError {
    fn from(e: DslError) -> Self {
        UsageError::Dsl(e)
    }
}

struct Env {
    bindings: BTreeMap<Var, RationalFn>,
}

impl Env {
    fn scalar(&self, text: &str) -> Result<RationalFn, DslError> {
        parse_scalar(text)?.substitute(&self.bindings).map_err(|e| DslError::Scalar(e.to_string()))
    }

    fn matrix(&self, m: &MatrixRF) -> MatrixRF {
        m.substitute(&self.bindings).unwrap_or_else(|_| m.clone())
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome, UsageError> {
    let mut bindings = BTreeMap::new();
    for b in &cli.bind {
        let (v, value) = parse_binding(b)?;
        bindings.insert(v, value);
    }
    let env = Env { bindings };
    let report = match &cli.command {
        Command::Verify(v) => verify(&env, v)?,
        Command::Delta(a) => delta(&env, a)?,
        Command::Tau(a) => tau(&env, a)?,
        Command::Kmatrix(a) => kmatrix(&env, a)?,
        Command::Semiclassical(a) => semiclassical(a)?,
        Command::Report { all } => {
            if !all {
                return Err(UsageError::Invalid("`report` needs `--all`".into()));
            }
            report_all(cli.seed)
        }
    };
    let bindings = env.bindings.iter().map(|(k, v)| (k.name().to_string(), v.to_string())).collect();
    Ok(Outcome { report, bindings })
}

fn failed_run(command: String, anchor: &str, err: impl std::fmt::Display) -> Report {
    let mut rep = Report::new(command);
    rep.push(Check::fail("computation", anchor, err.to_string()));
    rep
}

fn fold(command: String, parts: Vec<(String, CoreResult<Report>)>) -> Report {
    let mut rep = Report::new(command);
    for (prefix, r) in parts {
        match r {
            Ok(r) => rep.absorb(&prefix, r),
            Err(e) => rep.push(Check::fail(prefix, "evaluation", e.to_string())),
        }
    }
    rep
}

fn rep_family(arg: RepArg) -> Family {
    match arg {
        RepArg::Uhl => Family::UhL,
        RepArg::Yangian => Family::Yangian,
    }
}

fn r_kind(family: Family) -> RKind {
    match family {
        Family::UhL => RKind::Trig,
        Family::Yangian => RKind::Rational,
    }
}

fn pairing(form: FormArg) -> PairingId {
    match form {
        FormArg::Loop => PairingId::LoopForm,
        FormArg::HalfLoop => PairingId::HalfLoopForm,
        FormArg::Double => PairingId::DoubleForm,
        FormArg::A => PairingId::AForm,
    }
}

fn alpha_or_symbolic(env: &Env, alpha: &Option<String>) -> Result<RationalFn, DslError> {
    match alpha {
        Some(text) => env.scalar(text),
        None => Ok(RationalFn::var(Var::Alpha)),
    }
}

fn verify(env: &Env, v: &Verify) -> Result<Report, UsageError> {
    Ok(match v {
        Verify::Triple { id, window, form } => {
            let triple = form.map_or(Triple::new(*id), |f| Triple::with_form(*id, pairing(f)));
            verify_triple(triple, *window)
        }
        Verify::Twist { id, triple, window } => twist_report(*id, *triple, *window),
        Verify::Presentation { id, range } => verify_presentation(*id, *range),
        Verify::Rep { id, alpha } => {
            let family = rep_family(*id);
            let r1 = RepId::of(family, Var::U, alpha_or_symbolic(env, alpha)?);
            let r2 = r1.at(Var::V);
            let mut rep = fold(
                format!("verify rep --id {}", family.name()),
                vec![
                    ("single".into(), verify_relations(&RelContext::SingleRep(r1.clone()))),
                    ("coproduct".into(), verify_relations(&RelContext::CoproductPair(r1.clone(), r2))),
                ],
            );
            rep.set_context("rep", r1.name());
            rep
        }
        Verify::Coaction { model, alpha } => coaction_report(*model, alpha_or_symbolic(env, alpha)?),
        Verify::Ybe { r } => verify_yang_baxter(match r {
            RArg::Trig => RKind::Trig,
            RArg::Rational => RKind::Rational,
        }),
        Verify::Re { model } => re_report(env, *model),
    })
}

fn twist_report(t: TwistId, id: TripleId, w: i32) -> Report {
    let triple = Triple::new(id);
    let (class, rep) = classify(t, triple, w);
    if class == Classification::Neither {
        return rep;
    }
    match verify_symmetric_space(t, triple, w) {
        Ok(r) => r,
        Err(e) => failed_run(rep.command.clone(), "symmetric space", e),
    }
}

fn coaction_report(m: ModelId, alpha: RationalFn) -> Report {
    let r1 = RepId::of(m.family(), Var::U, alpha);
    let r2 = r1.at(Var::V);
    let mut rep = fold(
        format!("verify coaction --model {m}"),
        vec![
            ("counit".into(), verify_relations(&RelContext::Counit(m))),
            ("boundary".into(), verify_relations(&RelContext::Boundary(m, r1.clone()))),
            ("tensor".into(), verify_relations(&RelContext::TensorCoaction(m, r1.clone(), r2.clone()))),
            ("coassociativity".into(), verify_coassociativity(m, &r1, &r2)),
        ],
    );
    rep.set_context("model", m);
    rep.set_context("rep", r1.name());
    if m == ModelId::YMinus {
        rep.set_context("note", "the source lists T(K(e)) twice; the second entry is read as T(K(f))");
    }
    rep
}

fn re_report(env: &Env, m: ModelId) -> Report {
    let k = env.matrix(&stated_k_matrix(m));
    let kind = r_kind(m.family());
    let mut rep = match verify_reflection(kind, &k, Var::U) {
        Ok(r) => r,
        Err(e) => failed_run("reflection equation".into(), "reflection equation", e),
    };
    rep.command = format!("verify re --model {m}");
    rep.set_context("model", m);
    rep.set_context("K", &k);
    rep.set_context("R", kind.name());
    rep
}

fn delta(env: &Env, a: &DeltaArgs) -> Result<Report, UsageError> {
    let ctx = match a.triple {
        DeltaTriple::D => Context::of(TripleId::D),
        DeltaTriple::L => Context::of(TripleId::L),
        DeltaTriple::A => Context::of(TripleId::A),
        DeltaTriple::AInvariant => Context::twisted(TripleId::A, TwistId::SignOdd),
    };
    let x = crate::dsl::parse_expr(&a.element)?.substitute(&env.bindings)?.elaborate(ctx.algebra())?;
    let triple = a.triple.to_possible_value().expect("named").get_name().to_string();
    let mut rep = Report::new(format!("delta --triple {triple} --element {} --window {}", a.element, a.window))
        .with_context("element", &x)
        .with_context("window", a.window);
    match cocommutator(&ctx, &x, a.window) {
        Ok(t) => {
            rep.set_context("delta", &t);
            rep.push(Check::pass("delta is stable from window w to w + 2", "<delta(x), a (x) b> = <x, [a, b]>"));
            rep.record("delta is skew-symmetric", "delta(x) = -flip(delta(x))", t.is_skew(), || t.render());
        }
        Err(e) => rep.push(Check::fail("delta", "<delta(x), a (x) b> = <x, [a, b]>", e.to_string())),
    }
    Ok(rep)
}

fn tau(env: &Env, a: &TauArgs) -> Result<Report, UsageError> {
    let ctx = Context::twisted(a.triple, a.twist);
    let x = crate::dsl::parse_expr(&a.element)?.substitute(&env.bindings)?.elaborate(ctx.algebra())?;
    let side = if a.right { " --right" } else { "" };
    let mut rep = Report::new(format!(
        "tau{side} --triple {} --twist {} --element {} --window {}",
        a.triple, a.twist, a.element, a.window
    ))
    .with_context("element", &x)
    .with_context("window", a.window);
    let (result, legs, anchor) = if a.right {
        (bi_ideal_right(&ctx, &x, a.window), (SubspaceId::KPlus, SubspaceId::MPlus), "tau'(x) in k+ (x) m+")
    } else {
        (bi_ideal_left(&ctx, &x, a.window), (SubspaceId::MPlus, SubspaceId::KPlus), "tau(x) in m+ (x) k+")
    };
    match result {
        Ok(t) => {
            rep.set_context("tau", &t);
            rep.push(Check::pass("tau is stable from window w to w + 2", "dual of the k- action on m-"));
            let ok = legs_in(&ctx, &t, legs.0, legs.1);
            rep.record("leg membership", anchor, matches!(ok, Ok(true)), || describe_legs(&t, ok));
        }
        Err(e) => rep.push(Check::fail("tau", "dual of the k- action on m-", e.to_string())),
    }
    Ok(rep)
}

fn describe_legs(t: &TensorElement, ok: CoreResult<bool>) -> String {
    match ok {
        Ok(_) => format!("legs of {t} leave the expected subspaces"),
        Err(e) => e.to_string(),
    }
}

fn kmatrix(env: &Env, a: &KmatrixArgs) -> Result<Report, UsageError> {
    let m = a.model;
    if a.symbolic_alpha {
        return Ok(kmatrix_symbolic(m));
    }
    let alpha = match &a.alpha {
        Some(text) => env.scalar(text)?,
        None => m.stated_alpha(),
    };
    let mut rep = kmatrix_at(env, m, alpha);
    if let Some(text) = &a.alpha {
        rep.command = format!("kmatrix --model {m} --alpha {text}");
    }
    Ok(rep)
}

fn kmatrix_at(env: &Env, m: ModelId, alpha: RationalFn) -> Report {
    let r = RepId::of(m.family(), Var::U, alpha.clone());
    let mut rep = Report::new(format!("kmatrix --model {m}")).with_context("model", m).with_context("alpha", &alpha);
    let sol = match solve_intertwiner(m, &r, m.involution()) {
        Ok(s) => s,
        Err(e) => return failed_run(rep.command, "K M(u) = M(sigma(u)) K", e),
    };
    rep.set_context("dimension", sol.dim());
    rep.record("solution space is 1-dimensional", "K(u) M_X(u) = M_X(sigma(u)) K(u)", sol.dim() == 1, || {
        format!("dimension {} at alpha = {alpha}", sol.dim())
    });
    let stated = env.matrix(&stated_k_matrix(m));
    for (i, k) in sol.basis.iter().enumerate() {
        let k = env.matrix(k);
        rep.set_context(format!("K{i}"), &k);
        let how = match_stated(m, &k);
        let name = match how {
            KMatch::Relabeled => "K matches the displayed K up to scalar and diagonal conjugation, with c -> 1/2 - c",
            _ => "K matches the displayed K up to scalar and diagonal conjugation",
        };
        rep.record(name, "K(u) proportional to the displayed matrix", how != KMatch::None, || {
            format!("computed {k}; displayed {stated}")
        });
        match verify_reflection(r_kind(m.family()), &k, Var::U) {
            Ok(r) => rep.absorb(&format!("K{i}"), r),
            Err(e) => rep.push(Check::fail(format!("K{i}: reflection equation"), "reflection equation", e.to_string())),
        }
    }
    rep
}

fn kmatrix_symbolic(m: ModelId) -> Report {
    let r = RepId::of(m.family(), Var::U, RationalFn::var(Var::Alpha));
    let mut rep = Report::new(format!("kmatrix --model {m} --symbolic-alpha")).with_context("model", m);
    let sol = match solve_intertwiner(m, &r, m.involution()) {
        Ok(s) => s,
        Err(e) => return failed_run(rep.command, "alpha condition", e),
    };
    let cond = sol.alpha_condition.clone().unwrap_or_default();
    rep.set_context("alpha_condition", format!("{cond} = 0"));
    rep.set_context("generic_dimension", sol.dim());
    let stated = m.stated_alpha();
    let at_stated = RationalFn::from_poly(cond.clone()).substitute_one(Var::Alpha, &stated);
    rep.record(
        format!("alpha = {stated} solves the alpha condition"),
        "nontrivial K(u) exists",
        matches!(&at_stated, Ok(v) if v.is_zero()),
        || match &at_stated {
            Ok(v) => format!("condition at alpha = {stated} is {v}"),
            Err(e) => e.to_string(),
        },
    );
    rep
}

fn ugen(g: &GenRef) -> Option<UGen> {
    if g.index.is_some() {
        return None;
    }
    Some(match g.symbol {
        Symbol::Xp0 => UGen::Xp(0),
        Symbol::Xp1 => UGen::Xp(1),
        Symbol::Xm0 => UGen::Xm(0),
        Symbol::Xm1 => UGen::Xm(1),
        Symbol::H0 => UGen::H(0),
        Symbol::H1 => UGen::H(1),
        Symbol::E => UGen::Sl(Kind::E),
        Symbol::F => UGen::Sl(Kind::F),
        Symbol::H => UGen::Sl(Kind::H),
        Symbol::J(k) => UGen::J(k),
        _ => return None,
    })
}

fn mgen(g: &GenRef) -> Option<MGen> {
    if g.index.is_some() {
        return None;
    }
    Some(match g.symbol {
        Symbol::A => MGen::A,
        Symbol::Astar => MGen::Astar,
        Symbol::B => MGen::B,
        Symbol::Bstar => MGen::Bstar,
        Symbol::K => MGen::K,
        Symbol::BigH => MGen::BigH,
        Symbol::BigE => MGen::BigE,
        Symbol::BigF => MGen::BigF,
        Symbol::E => MGen::Sl(Kind::E),
        Symbol::F => MGen::Sl(Kind::F),
        Symbol::H => MGen::Sl(Kind::H),
        Symbol::Kop(k) => MGen::KOp(k),
        _ => return None,
    })
}

fn semiclassical(a: &SemiclassicalArgs) -> Result<Report, UsageError> {
    let g = parse_generator(&a.target)?;
    let result = match a.model {
        Some(m) => {
            let x = mgen(&g)
                .filter(|x| m.generators().contains(x))
                .ok_or_else(|| UsageError::Invalid(format!("`{}` is not a generator of {m}", a.target)))?;
            semiclassical_coaction(m, &x, a.window)
        }
        None => {
            let x = ugen(&g).ok_or_else(|| {
                UsageError::Invalid(format!("`{}` is not a generator of U_h(L) or of the Yangian", a.target))
            })?;
            semiclassical_coproduct(&x, a.window)
        }
    };
    Ok(match result {
        Ok(r) => r,
        Err(e) => failed_run(format!("semiclassical --target {}", a.target), "first order in hbar", e),
    })
}

/// Every verification the tool knows, in a fixed order.
pub fn report_all_parts(seed: u64) -> Vec<(String, Report)> {
    let env = Env { bindings: BTreeMap::new() };
    let w = DEFAULT_WINDOW;
    let mut parts = Vec::new();
    for id in [TripleId::D, TripleId::L, TripleId::A] {
        parts.push((format!("triple {id}"), verify_triple(Triple::new(id), w)));
    }
    let control = verify_triple(Triple::with_form(TripleId::L, PairingId::LoopForm), w);
    let mut neg = Report::new("negative control (L, L+, L-) with the loop form");
    neg.record("negative control fails isotropy", "p+ and p- isotropic", control.failures().any(|c| c.name.contains("isotrop")), || {
        control.to_text()
    });
    parts.push(("negative control".into(), neg));
    for (t, id) in [
        (TwistId::Phi1, TripleId::D),
        (TwistId::Phi2, TripleId::D),
        (TwistId::SignOdd, TripleId::A),
        (TwistId::SignOdd, TripleId::L),
        (TwistId::SignEven, TripleId::L),
    ] {
        parts.push((format!("twist {t} on {id}"), twist_report(t, id, w)));
    }
    for set in RelationSet::ALL {
        let range = if set == RelationSet::AugOnsager { 3 } else { 4 };
        parts.push((format!("presentation {set}"), verify_presentation(set, range)));
    }
    for family in [Family::UhL, Family::Yangian] {
        let v = Verify::Rep {
            id: match family {
                Family::UhL => RepArg::Uhl,
                Family::Yangian => RepArg::Yangian,
            },
            alpha: None,
        };
        parts.push((format!("rep {}", family.name()), verify(&env, &v).expect("no user input")));
    }
    for m in ModelId::ALL {
        parts.push((format!("coaction {m}"), coaction_report(m, RationalFn::var(Var::Alpha))));
    }
    for kind in [RKind::Trig, RKind::Rational] {
        parts.push((format!("ybe {}", kind.name()), verify_yang_baxter(kind)));
    }
    for m in ModelId::ALL {
        parts.push((format!("kmatrix {m}"), kmatrix_at(&env, m, m.stated_alpha())));
        parts.push((format!("re {m}"), re_report(&env, m)));
    }
    let coproduct_targets = ["X+0", "X+1", "X-0", "X-1", "H0", "H1", "e", "f", "h", "J(e)", "J(f)", "J(h)"];
    for t in coproduct_targets {
        let a = SemiclassicalArgs { target: t.into(), model: None, window: w };
        parts.push((format!("semiclassical {t}"), semiclassical(&a).expect("known target")));
    }
    for m in [ModelId::QOnsager, ModelId::AugQOnsager, ModelId::YPlus] {
        for g in m.generators() {
            let a = SemiclassicalArgs { target: g.to_string(), model: Some(m), window: w };
            parts.push((format!("semiclassical {m} {g}"), semiclassical(&a).expect("known target")));
        }
    }
    parts.push(("properties".into(), props::property_report(seed, 100)));
    parts
}

fn report_all(seed: u64) -> Report {
    let mut rep = Report::new("report --all").with_context("seed", seed);
    for (prefix, r) in report_all_parts(seed) {
        rep.absorb(&prefix, r);
    }
    rep
}
