//! `sdcheck check`: one verdict per invocation, as text or JSON, with the exit-code contract
//! 0 = verified, 2 = definite failure, 3 = verified only up to the bound.

use std::fmt::Write as _;
use std::sync::Arc;

use anyhow::{bail, Result};
use clap::ValueEnum;
use serde::Serialize;
use serde_json::{json, Value};
use sdcheck_core::foxby::{
    bcschar_complex, check_faithful, check_semidualizing, cclass_membership, foxby_backward, foxby_forward,
    theorem2_complex, CClass, Condition, FoxbyContext, Overall, Status,
};
use sdcheck_core::modrep::{Bimodule, LeftModule};
use sdcheck_core::Algebra;

use crate::resolve::{resolve_bimodule, resolve_module};
use crate::workspace::Workspace;

pub const REPORT_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_FAIL: i32 = 2;
pub const EXIT_UP_TO_BOUND: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    Semidualizing,
    Faithful,
    Auslander,
    Bass,
    Cclass,
    FoxbyRoundtrip,
    TheoremComplex,
}

/// Which algebra a `--module` lives over: `R` (the right algebra) or `S` (the left one).
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
pub enum Side {
    R,
    S,
}

#[derive(Clone, Debug)]
pub struct CheckArgs {
    pub kind: CheckKind,
    pub bimodule: String,
    pub module: Option<String>,
    pub over: Option<Side>,
    /// `F_C`, `P_C` or `I_C`
    pub class: Option<String>,
    pub length: usize,
    pub bound: usize,
}

impl CheckArgs {
    pub fn new(kind: CheckKind, bimodule: &str) -> Self {
        CheckArgs {
            kind,
            bimodule: bimodule.into(),
            module: None,
            over: None,
            class: None,
            length: 6,
            bound: 8,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub exit_code: i32,
    pub json: Value,
    pub text: String,
}

fn exit_for(overall: &Overall) -> i32 {
    match overall {
        Overall::Yes => EXIT_OK,
        Overall::YesUpToBound => EXIT_UP_TO_BOUND,
        Overall::No { .. } => EXIT_FAIL,
    }
}

fn exit_for_bool(ok: bool) -> i32 {
    if ok {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}

pub fn format_condition(c: &Condition) -> String {
    let status = match c.status {
        Status::Pass => "pass",
        Status::PassUpToBound => "pass (up to bound)",
        Status::Fail => "FAIL",
    };
    let mut line = format!("  ({}) {status}", c.label);
    if let Some(d) = c.degree {
        let _ = write!(line, " at degree {d}");
    }
    if !c.dims.is_empty() {
        let dims: Vec<String> = c.dims.iter().map(|d| d.to_string()).collect();
        let _ = write!(line, " [dims {}]", dims.join(" "));
    }
    if !c.note.is_empty() {
        let _ = write!(line, ": {}", c.note);
    }
    line
}

fn format_overall(o: &Overall) -> String {
    match o {
        Overall::Yes => "yes".into(),
        Overall::YesUpToBound => "yes, up to the bound".into(),
        Overall::No { failing } => format!("no (failing: {})", failing.join(", ")),
    }
}

fn module_side(args: &CheckArgs, default: Side) -> Side {
    args.over.unwrap_or(default)
}

fn algebra_of(c: &Bimodule, side: Side) -> Arc<Algebra> {
    match side {
        Side::R => c.right_algebra().clone(),
        Side::S => c.left_algebra().clone(),
    }
}

fn need_module(ws: &Workspace, args: &CheckArgs, c: &Bimodule, side: Side) -> Result<(String, LeftModule)> {
    let Some(name) = &args.module else {
        bail!("check {:?} needs --module", args.kind);
    };
    let m = resolve_module(ws, name, &algebra_of(c, side))?;
    Ok((name.clone(), m))
}

pub fn parse_class(s: &str) -> Result<CClass> {
    Ok(match s {
        "F_C" | "FC" | "flat" => CClass::FlatC,
        "P_C" | "PC" | "projective" => CClass::ProjectiveC,
        "I_C" | "IC" | "injective" => CClass::InjectiveC,
        _ => bail!("unknown class {s:?}; expected F_C, P_C or I_C"),
    })
}

pub fn run_check(ws: &Workspace, args: &CheckArgs) -> Result<CheckOutcome> {
    let c = resolve_bimodule(ws, &args.bimodule)?;
    let mut text = format!(
        "{:?} check of {} (dim {}, S = {}, R = {}), bound {}\n",
        args.kind,
        args.bimodule,
        c.dim(),
        c.left_algebra().name(),
        c.right_algebra().name(),
        args.bound
    );
    let mut extra = json!({});
    let (exit_code, report) = match args.kind {
        CheckKind::Semidualizing => {
            let rep = check_semidualizing(&c, args.bound)?;
            for cond in &rep.conditions {
                text += &format_condition(cond);
                text.push('\n');
            }
            let _ = writeln!(text, "semidualizing: {}", format_overall(&rep.overall));
            (exit_for(&rep.overall), serde_json::to_value(&rep)?)
        }
        CheckKind::Faithful => {
            let rep = check_faithful(&c)?;
            for (side, s) in [("S", &rep.left), ("R^op", &rep.right)] {
                let _ = writeln!(
                    text,
                    "  {side}: top(C) has dim {}, annihilator in the semisimple quotient has dim {}",
                    s.top_dim,
                    s.annihilator.len()
                );
            }
            let _ = writeln!(text, "faithful: {}", if rep.faithful { "yes" } else { "no" });
            (exit_for_bool(rep.faithful), serde_json::to_value(&rep)?)
        }
        CheckKind::Auslander | CheckKind::Bass => {
            let default = if args.kind == CheckKind::Auslander { Side::R } else { Side::S };
            let side = module_side(args, default);
            if side != default {
                bail!("{:?} membership is for modules over {:?}", args.kind, default);
            }
            let (name, m) = need_module(ws, args, &c, side)?;
            extra = json!({ "module": name, "module_dim": m.dim() });
            let ctx = FoxbyContext::new(&c, args.bound);
            let rep = if side == Side::R { ctx.auslander(&m)? } else { ctx.bass(&m)? };
            let _ = writeln!(text, "module {name} (dim {})", m.dim());
            for cond in &rep.conditions {
                text += &format_condition(cond);
                text.push('\n');
            }
            let _ = writeln!(text, "member: {}", format_overall(&rep.verdict));
            if let Some(w) = rep.witness() {
                let _ = writeln!(text, "witness: ({})", w.label);
            }
            (exit_for(&rep.verdict), serde_json::to_value(&rep)?)
        }
        CheckKind::Cclass => {
            let Some(class) = &args.class else { bail!("check cclass needs --class F_C|P_C|I_C") };
            let class = parse_class(class)?;
            let side = if class == CClass::InjectiveC { Side::R } else { Side::S };
            let (name, m) = need_module(ws, args, &c, side)?;
            extra = json!({ "module": name, "module_dim": m.dim() });
            let ctx = FoxbyContext::new(&c, args.bound);
            let rep = cclass_membership(&ctx, &m, class)?;
            let _ = writeln!(text, "module {name} (dim {}) in {:?}", m.dim(), class);
            for cond in &rep.membership.conditions {
                text += &format_condition(cond);
                text.push('\n');
            }
            let _ = writeln!(
                text,
                "  companion of dim {} is {}: {}",
                rep.companion_dim,
                if rep.companion_ok { "as required" } else { "NOT as required" },
                rep.note
            );
            let _ = writeln!(text, "member: {}", if rep.member { "yes" } else { "no" });
            let code = match (rep.member, &rep.membership.verdict) {
                (false, _) => EXIT_FAIL,
                (true, v) => exit_for(v),
            };
            (code, serde_json::to_value(&rep)?)
        }
        CheckKind::FoxbyRoundtrip => {
            let side = module_side(args, Side::R);
            let (name, m) = need_module(ws, args, &c, side)?;
            // the unit on m and the counit on its image (or the other way round)
            let (first, second) = match side {
                Side::R => {
                    let f = foxby_forward(&c, &m)?;
                    let b = foxby_backward(&c, &f.image)?;
                    (("mu", f), ("nu", b))
                }
                Side::S => {
                    let b = foxby_backward(&c, &m)?;
                    let f = foxby_forward(&c, &b.image)?;
                    (("nu", b), ("mu", f))
                }
            };
            let mut rows = Vec::new();
            for (label, rt) in [&first, &second] {
                let _ = writeln!(
                    text,
                    "  {label}: {}x{} witness, image of dim {}, {}",
                    rt.shape().0,
                    rt.shape().1,
                    rt.image.dim(),
                    if rt.invertible { "invertible" } else { "NOT invertible" }
                );
                rows.push(json!({
                    "map": label,
                    "shape": [rt.shape().0, rt.shape().1],
                    "image_dim": rt.image.dim(),
                    "invertible": rt.invertible,
                    "witness": &rt.witness,
                }));
            }
            let ok = first.1.invertible && second.1.invertible;
            let _ = writeln!(text, "round trip: {}", if ok { "invertible" } else { "fails" });
            extra = json!({ "module": name, "module_dim": m.dim() });
            (exit_for_bool(ok), json!({ "maps": rows, "invertible": ok }))
        }
        CheckKind::TheoremComplex => {
            let side = module_side(args, Side::R);
            let (name, m) = need_module(ws, args, &c, side)?;
            let x = match side {
                Side::R => theorem2_complex(&c, &m, args.length)?,
                Side::S => bcschar_complex(&c, &m, args.length)?,
            };
            let terms: Vec<String> = x.terms.iter().map(|(d, n)| format!("{d}:{n}")).collect();
            let _ = writeln!(text, "module {name} (dim {}), terms {}", m.dim(), terms.join(" "));
            for cond in &x.conditions {
                text += &format_condition(cond);
                text.push('\n');
            }
            let _ = writeln!(
                text,
                "conditions: {}",
                if x.all_hold() { "all hold".to_string() } else { format!("failing {}", x.failing().join(", ")) }
            );
            extra = json!({ "module": name, "module_dim": m.dim(), "length": args.length });
            (exit_for_bool(x.all_hold()), serde_json::to_value(&x)?)
        }
    };
    let mut json = json!({
        "report_version": REPORT_VERSION,
        "command": "check",
        "kind": args.kind,
        "bimodule": args.bimodule,
        "bimodule_dim": c.dim(),
        "bound": args.bound,
        "exit_code": exit_code,
        "report": report,
    });
    if let (Value::Object(out), Value::Object(more)) = (&mut json, extra) {
        out.extend(more);
    }
    Ok(CheckOutcome { exit_code, json, text })
}
