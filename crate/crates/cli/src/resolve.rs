//! Looking up algebras, modules and bimodules by workspace name or builder expression.

use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use sdcheck_core::algebra::{
    cyclic_group_table, group_ring, matrix_ring, square_zero_local_ring, triangular_ring, truncated_polynomial_ring,
};
use sdcheck_core::corpus::{base_change_matrix, corpus_algebra, corpus_algebras, dualizing, morita, rsquared};
use sdcheck_core::foxby::injective_cogenerator;
use sdcheck_core::modrep::{random_module, simple_module, Bimodule, LeftModule};
use sdcheck_core::{Algebra, PrimeField};

use crate::workspace::Workspace;

/// `name(a, b, …)` → (`name`, [`a`, `b`, …]); arguments may nest parentheses and brackets.
pub fn split_call(expr: &str) -> Option<(&str, Vec<&str>)> {
    let open = expr.find('(')?;
    if !expr.ends_with(')') {
        return None;
    }
    let head = &expr[..open];
    let inner = &expr[open + 1..expr.len() - 1];
    let mut args = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, ch) in inner.char_indices() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                args.push(inner[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    if !inner.trim().is_empty() {
        args.push(inner[start..].trim());
    }
    Some((head, args))
}

fn number<T: std::str::FromStr>(s: &str, what: &str) -> Result<T> {
    s.parse().map_err(|_| anyhow!("{what} must be a number, got {s:?}"))
}

fn field(p: &str) -> Result<PrimeField> {
    Ok(PrimeField::new(number(p, "p")?)?)
}

/// Algebra builders available to `examples build` and to expressions.
pub fn build_algebra(name: &str, args: &[&str]) -> Result<Algebra> {
    let want = |n: usize| -> Result<()> {
        if args.len() != n {
            bail!("{name} takes {n} parameters, got {}", args.len());
        }
        Ok(())
    };
    Ok(match name {
        "matrix_ring" => {
            want(2)?;
            matrix_ring(field(args[0])?, number(args[1], "n")?)?
        }
        "triangular_ring" => {
            want(2)?;
            triangular_ring(field(args[0])?, number(args[1], "f")?)?
        }
        "group_ring" => {
            want(2)?;
            group_ring(field(args[0])?, &cyclic_group_table(number(args[1], "n")?))?
        }
        "truncated_polynomial" => {
            want(2)?;
            truncated_polynomial_ring(field(args[0])?, number(args[1], "k")?)?
        }
        "square_zero" => {
            want(2)?;
            square_zero_local_ring(field(args[0])?, number(args[1], "d")?)?
        }
        _ => bail!("unknown algebra builder {name}"),
    })
}

pub fn resolve_algebra(ws: &Workspace, name: &str) -> Result<Arc<Algebra>> {
    if let Some(a) = ws.algebras.get(name) {
        return Ok(a.clone());
    }
    if let Some(a) = corpus_algebra(name) {
        return Ok(a);
    }
    if let Some((head, args)) = split_call(name) {
        if let Ok(a) = build_algebra(head, &args) {
            return Ok(Arc::new(a));
        }
    }
    let known: Vec<String> = corpus_algebras().iter().map(|a| a.name().to_string()).collect();
    bail!("unknown algebra {name:?}; corpus algebras: {}", known.join(", "))
}

/// Bimodule builders: `regular(A)`, `morita(p,n)`, `dualizing(A)`, `rsquared(A)`,
/// `base_change(Q,n)`; bare `morita` and `Rsquared` use `p = 2`.
pub fn resolve_bimodule(ws: &Workspace, expr: &str) -> Result<Bimodule> {
    if let Some(c) = ws.bimodules.get(expr) {
        return Ok(c.clone());
    }
    let f2 = || resolve_algebra(ws, "F2");
    match expr {
        "morita" => return Ok(morita(2, 2)?),
        "Rsquared" | "rsquared" => return Ok(rsquared(&f2()?)),
        _ => {}
    }
    let (head, args) = split_call(expr).ok_or_else(|| anyhow!("unknown bimodule {expr:?}"))?;
    let one = || -> Result<Arc<Algebra>> {
        match args.as_slice() {
            [a] => resolve_algebra(ws, a),
            _ => bail!("{head} takes one algebra"),
        }
    };
    Ok(match head {
        "regular" => Bimodule::regular(one()?),
        "dualizing" => dualizing(&one()?)?,
        "rsquared" | "Rsquared" => rsquared(&one()?),
        "morita" => match args.as_slice() {
            [p, n] => morita(number(p, "p")?, number(n, "n")?)?,
            _ => bail!("morita takes p and n"),
        },
        "base_change" => match args.as_slice() {
            [q, n] => base_change_matrix(&resolve_algebra(ws, q)?, number(n, "n")?)?,
            _ => bail!("base_change takes an algebra Q and a size n"),
        },
        _ => bail!("unknown bimodule {expr:?}"),
    })
}

/// Modules over `a`: a workspace name, `k` (a simple module), `regular`, `free(n)`, `zero`, `cogenerator` or `random(seed,dim)`.
pub fn resolve_module(ws: &Workspace, expr: &str, a: &Arc<Algebra>) -> Result<LeftModule> {
    if let Some(m) = ws.modules.get(expr) {
        if !m.algebra().same_structure(a) {
            bail!("module {expr} is over {}, expected {}", m.algebra().name(), a.name());
        }
        return Ok(m.clone().rebase(a.clone())?);
    }
    match expr {
        "k" => return Ok(simple_module(a)),
        "regular" => return Ok(LeftModule::regular(a.clone())),
        "zero" => return Ok(LeftModule::zero(a.clone())),
        "cogenerator" | "E" => return Ok(injective_cogenerator(a)),
        _ => {}
    }
    let (head, args) = split_call(expr).ok_or_else(|| anyhow!("unknown module {expr:?}"))?;
    match (head, args.as_slice()) {
        ("free", [n]) => Ok(LeftModule::free(a.clone(), number(n, "rank")?)),
        ("random", [seed, dim]) => Ok(random_module(a, number(dim, "dim")?, number(seed, "seed")?)),
        _ => Err(anyhow!("unknown module {expr:?}")),
    }
    .with_context(|| format!("resolving a module over {}", a.name()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn calls_split_with_nesting() {
        assert_eq!(split_call("regular(F2)"), Some(("regular", vec!["F2"])));
        assert_eq!(
            split_call("base_change(F2[x]/(x2), 2)"),
            Some(("base_change", vec!["F2[x]/(x2)", "2"]))
        );
        assert_eq!(split_call("k"), None);
    }

    #[test]
    fn expressions_resolve() {
        let ws = Workspace::default();
        assert_eq!(resolve_bimodule(&ws, "regular(M2(F3))").unwrap().dim(), 4);
        assert_eq!(resolve_bimodule(&ws, "morita").unwrap().dim(), 2);
        assert_eq!(resolve_bimodule(&ws, "dualizing(F2[x,y]/(x2,xy,y2))").unwrap().dim(), 3);
        assert_eq!(resolve_bimodule(&ws, "base_change(F2[x]/(x2),2)").unwrap().dim(), 8);
        assert_eq!(resolve_bimodule(&ws, "Rsquared").unwrap().dim(), 2);
        assert!(resolve_bimodule(&ws, "nonsense").is_err());
        let a = resolve_algebra(&ws, "matrix_ring(5,2)").unwrap();
        assert_eq!(resolve_module(&ws, "free(2)", &a).unwrap().dim(), 8);
        assert_eq!(resolve_module(&ws, "k", &a).unwrap().dim(), 2);
    }
}
