//! Text renderings of atlases, figure tables and orbit tables.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::classifier::Atlas;
use crate::functors::{OrbitLabel, OrbitTable};
use crate::level::LevelParams;
use crate::module_data::{twisted_data, untwisted_data, top_space_dim, ModuleLabel};
use crate::weights::{enumerate_surviving, NatTriple};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OutputFormat {
    Json,
    Tsv,
    Markdown,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "tsv" => Ok(OutputFormat::Tsv),
            "md" | "markdown" => Ok(OutputFormat::Markdown),
            other => Err(format!("unknown format {other:?} (expected json, tsv or md)")),
        }
    }
}

fn triple(t: NatTriple) -> String {
    format!("[{},{},{}]", t[0], t[1], t[2])
}

const TSV_HEADER: &str = "record\tsector\tclass\tj\tDelta\tomega\ttopDim\tlambdaI\tlambdaF";

fn tsv_module(out: &mut String, record: &str, m: &ModuleLabel) {
    let omega = m.omega.map(|x| x.to_string()).unwrap_or_default();
    let _ = writeln!(
        out,
        "{record}\t{}\t{}\t{}\t{}\t{omega}\t{}\t{}\t{}",
        m.sector.as_str(),
        m.class.as_str(),
        m.j,
        m.delta,
        m.top_dim,
        triple(m.source.lambda_i()),
        triple(m.source.lambda_f()),
    );
}

pub fn atlas_json(atlas: &Atlas) -> String {
    let mut s = serde_json::to_string_pretty(atlas).expect("atlas serializes");
    s.push('\n');
    s
}

/// One row per module; families list their raw charges separated by `;`.
pub fn atlas_tsv(atlas: &Atlas) -> String {
    let mut out = String::new();
    out.push_str(TSV_HEADER);
    out.push('\n');
    for m in &atlas.untwisted_hw {
        tsv_module(&mut out, "module", m);
    }
    for m in &atlas.twisted_hw {
        tsv_module(&mut out, "module", m);
    }
    for f in &atlas.families {
        let charges: Vec<String> = f.raw_charges.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(
            out,
            "family\ttwisted\trelaxedSimple\t{}\t{}\t{}\tinf\t{}\t{}",
            charges.join(";"),
            f.delta,
            f.omega,
            triple(f.orbit_key.lambda_i()),
            triple(f.orbit_key.lambda_f()),
        );
    }
    for r in &atlas.nonsemisimple {
        let class = match r.kind {
            crate::smith::FamilyKind::Plus => "relaxedPlus",
            crate::smith::FamilyKind::Minus => "relaxedMinus",
            crate::smith::FamilyKind::Semisimple => "relaxedSimple",
        };
        let _ = writeln!(
            out,
            "sequence\ttwisted\t{class}\t{}\t{}\t{}\tinf\t{}\t{}",
            r.coset,
            r.delta,
            r.omega,
            triple(r.source.lambda_i()),
            triple(r.source.lambda_f()),
        );
    }
    out
}

pub fn atlas_markdown(atlas: &Atlas) -> String {
    let p = atlas.level;
    let c = atlas.counts;
    let mut out = String::new();
    let _ = writeln!(out, "# BP({}, {}): k = {}, c = {}\n", p.u(), p.v(), p.k(), p.c());
    let _ = writeln!(
        out,
        "{} untwisted highest-weight modules, {} twisted with finite top, {} twisted with infinite top, {} relaxed families.\n",
        c.n_untwisted, c.n_twisted_fdim, c.n_twisted_infdim, c.n_families
    );
    out.push_str(&figure_markdown(&p));
    if !atlas.families.is_empty() {
        out.push_str("\n## Relaxed families\n\n| lambdaI | lambdaF | Delta | omega | raw charges | cosets |\n|---|---|---|---|---|---|\n");
        for f in &atlas.families {
            let raw: Vec<String> = f.raw_charges.iter().map(|x| x.to_string()).collect();
            let can: Vec<String> = f.excluded.iter().map(|x| x.to_string()).collect();
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} | {} | {} |",
                triple(f.orbit_key.lambda_i()),
                triple(f.orbit_key.lambda_f()),
                f.delta,
                f.omega,
                raw.join(", "),
                can.join(", "),
            );
        }
    }
    if !atlas.nonsemisimple.is_empty() {
        out.push_str("\n## Nonsemisimple relaxed modules\n\n| kind | coset | Delta | submodule | quotient |\n|---|---|---|---|---|\n");
        for r in &atlas.nonsemisimple {
            let kind = match r.kind {
                crate::smith::FamilyKind::Plus => "plus",
                crate::smith::FamilyKind::Minus => "minus",
                crate::smith::FamilyKind::Semisimple => "semisimple",
            };
            let _ = writeln!(
                out,
                "| {kind} | {} | {} | {} | {} |",
                r.coset, r.delta, r.submodule, r.quotient
            );
        }
    }
    out
}

pub fn render_atlas(atlas: &Atlas, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => atlas_json(atlas),
        OutputFormat::Tsv => atlas_tsv(atlas),
        OutputFormat::Markdown => atlas_markdown(atlas),
    }
}

/// The untwisted and twisted highest-weight tables, rows in source-weight
/// order. The twisted table's `top` column is the top-space dimension.
pub fn figure_markdown(p: &LevelParams) -> String {
    let ws = enumerate_surviving(p);
    let mut out = String::new();
    out.push_str("## Untwisted highest-weight modules\n\n| lambdaI | lambdaF | j | Delta |\n|---|---|---|---|\n");
    for w in &ws {
        let d = untwisted_data(w);
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} |",
            triple(w.lambda_i()),
            triple(w.lambda_f()),
            d.j,
            d.delta
        );
    }
    out.push_str("\n## Twisted highest-weight modules\n\n| lambdaI | lambdaF | j | Delta | top |\n|---|---|---|---|---|\n");
    for w in &ws {
        let d = twisted_data(w);
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} | {} |",
            triple(w.lambda_i()),
            triple(w.lambda_f()),
            d.j,
            d.delta,
            top_space_dim(w)
        );
    }
    out
}

pub fn render_orbit(table: &OrbitTable, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(table).expect("orbit serializes");
            s.push('\n');
            s
        }
        OutputFormat::Tsv => {
            let mut out = String::from("ell\tsector\tstatus\tclass\tj\tDelta\ttopDim\n");
            for e in &table.entries {
                let (class, top) = orbit_columns(&e.label);
                let cw = e.label.charge_weight();
                let _ = writeln!(
                    out,
                    "{}\t{}\t{}\t{class}\t{}\t{}\t{top}",
                    e.ell,
                    e.sector.as_str(),
                    e.status.as_str(),
                    cw.j,
                    cw.delta
                );
            }
            out
        }
        OutputFormat::Markdown => {
            let mut out = String::from(
                "| ell | sector | status | class | j | Delta | top |\n|---|---|---|---|---|---|---|\n",
            );
            for e in &table.entries {
                let (class, top) = orbit_columns(&e.label);
                let cw = e.label.charge_weight();
                let _ = writeln!(
                    out,
                    "| {} | {} | {} | {class} | {} | {} | {top} |",
                    e.ell,
                    e.sector.as_str(),
                    e.status.as_str(),
                    cw.j,
                    cw.delta
                );
            }
            out
        }
    }
}

fn orbit_columns(label: &OrbitLabel) -> (&'static str, String) {
    match label {
        OrbitLabel::Module(m) => (m.class.as_str(), m.top_dim.to_string()),
        OrbitLabel::Unbounded(_) => ("-", "-".to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifier::build_atlas;
    use crate::level::make_level;

    #[test]
    fn tsv_has_one_row_per_module() {
        let a = build_atlas(&make_level(5, 2).unwrap()).unwrap();
        let s = atlas_tsv(&a);
        assert_eq!(s.lines().count(), 1 + 12);
        assert!(s.lines().all(|l| l.split('\t').count() == 9));
    }

    #[test]
    fn figure_rows() {
        let s = figure_markdown(&make_level(3, 2).unwrap());
        assert!(s.contains("| [0,0,0] | [1,0,0] | 0 | 0 |\n"));
        assert!(s.contains("| [0,0,0] | [1,0,0] | 0 | 0 | 1 |\n"));
    }

    #[test]
    fn formats_parse() {
        assert_eq!("md".parse::<OutputFormat>().unwrap(), OutputFormat::Markdown);
        assert!("xml".parse::<OutputFormat>().is_err());
    }
}
