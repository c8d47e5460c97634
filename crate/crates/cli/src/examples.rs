//! `examples list` and `examples build`: workspace fragments for the standard constructions.

use anyhow::{bail, Result};
use sdcheck_core::corpus::{base_change_matrix, dualizing, morita};
use sdcheck_core::modrep::Bimodule;

use crate::resolve::{build_algebra, resolve_algebra};
use crate::workspace::{Workspace, WorkspaceDoc};

pub struct Builder {
    pub name: &'static str,
    pub params: &'static str,
    pub about: &'static str,
}

pub const BUILDERS: &[Builder] = &[
    Builder { name: "regular", params: "<algebra>", about: "the regular bimodule of a named algebra" },
    Builder { name: "morita", params: "<p> <n>", about: "the row space over (F_p, M_n(F_p))" },
    Builder { name: "matrix_ring", params: "<p> <n>", about: "M_n(F_p) and its regular bimodule" },
    Builder { name: "triangular_ring", params: "<p> <f>", about: "[[F, F], [0, F]] over F = F_p^f" },
    Builder { name: "group_ring", params: "<p> <n>", about: "F_p[C_n] for the cyclic group of order n" },
    Builder { name: "truncated_polynomial", params: "<p> <k>", about: "F_p[x]/(x^k)" },
    Builder { name: "square_zero", params: "<p> <d>", about: "F_p[x_1..x_d]/(x_1..x_d)^2" },
    Builder { name: "dualizing", params: "<algebra>", about: "the linear dual D(R) as an (R, R)-bimodule" },
    Builder { name: "base_change", params: "<algebra Q> <n>", about: "D(Q) ⊗_Q M_n(Q) for commutative Q" },
];

pub fn list() -> String {
    BUILDERS
        .iter()
        .map(|b| format!("{:<22} {:<18} {}\n", b.name, b.params, b.about))
        .collect()
}

/// Builds the named example into a fresh document, validating it before returning.
pub fn build(ws: &Workspace, name: &str, params: &[String]) -> Result<WorkspaceDoc> {
    let args: Vec<&str> = params.iter().map(String::as_str).collect();
    let mut doc = WorkspaceDoc::new();
    let one = || -> Result<&str> {
        match args.as_slice() {
            [a] => Ok(a),
            _ => bail!("{name} takes one algebra name"),
        }
    };
    match name {
        "regular" => {
            let a = resolve_algebra(ws, one()?)?;
            doc.add_bimodule(&format!("regular({})", a.name()), &Bimodule::regular(a));
        }
        "morita" => {
            let [p, n] = args.as_slice() else { bail!("morita takes <p> <n>") };
            let c = morita(parse(p, "p")?, parse(n, "n")?)?;
            doc.add_bimodule(&format!("morita({p},{n})"), &c);
        }
        "dualizing" => {
            let a = resolve_algebra(ws, one()?)?;
            doc.add_bimodule(&format!("dualizing({})", a.name()), &dualizing(&a)?);
        }
        "base_change" => {
            let [q, n] = args.as_slice() else { bail!("base_change takes <algebra Q> <n>") };
            let q = resolve_algebra(ws, q)?;
            let c = base_change_matrix(&q, parse(n, "n")?)?;
            doc.add_bimodule(&format!("base_change({},{n})", q.name()), &c);
        }
        _ if BUILDERS.iter().any(|b| b.name == name) => {
            let a = std::sync::Arc::new(build_algebra(name, &args)?);
            doc.add_bimodule(&format!("regular({})", a.name()), &Bimodule::regular(a));
        }
        _ => bail!("unknown builder {name:?}; try `examples list`"),
    }
    doc.validate()?;
    Ok(doc)
}

fn parse<T: std::str::FromStr>(s: &str, what: &str) -> Result<T> {
    match s.parse() {
        Ok(v) => Ok(v),
        Err(_) => bail!("{what} must be a number, got {s:?}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strs(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn morita_fragment() {
        let doc = build(&Workspace::default(), "morita", &strs(&["2", "2"])).unwrap();
        let c = &doc.bimodules["morita(2,2)"];
        assert_eq!(c.dim, 2);
        assert_eq!(doc.algebras[&c.left].dim, 1);
        assert_eq!(doc.algebras[&c.right].dim, 4);
    }

    #[test]
    fn dualizing_fragment_is_symmetric_of_dim_three() {
        let ws = Workspace::default();
        let doc = build(&ws, "dualizing", &strs(&["F2[x,y]/(x2,xy,y2)"])).unwrap();
        let c = doc.bimodules.values().next().unwrap();
        assert_eq!(c.dim, 3);
        assert_eq!(c.left, c.right);
        // commutative algebra, so left and right actions agree
        assert_eq!(c.left_action, c.right_action);
    }

    #[test]
    fn list_names_every_builder_and_all_build() {
        let text = list();
        let ws = Workspace::default();
        for b in BUILDERS {
            assert!(text.contains(b.name));
            let params: &[&str] = match b.name {
                "regular" | "dualizing" => &["F3[x]/(x3)"],
                "base_change" => &["F2[x]/(x2)", "2"],
                "truncated_polynomial" | "square_zero" | "triangular_ring" => &["2", "2"],
                _ => &["3", "2"],
            };
            build(&ws, b.name, &strs(params)).unwrap_or_else(|e| panic!("{}: {e}", b.name));
        }
        assert!(build(&ws, "nope", &[]).is_err());
        assert!(build(&ws, "morita", &strs(&["4", "2"])).is_err());
    }
}
