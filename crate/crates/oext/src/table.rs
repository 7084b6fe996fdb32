//! Table generation and serialization for the CLI: full ext tables in
//! text/CSV/JSON, plus the list-style reports (base, bm, cells, phi, socle).
//!
//! Output is deterministic: rows and columns follow the global order
//! (length, then lexicographic one-line notation), and every rendering is
//! byte-identical across runs for identical requests.

use serde::{Deserialize, Serialize};

use crate::cells::{penultimate_cell, shape, small_cell, Shape};
use crate::error::{Error, Result};
use crate::ext_o::{ExtStatus, GradedExtAnswer, Normalization};
use crate::ext_s::{
    proper_standard_cell, proper_standard_column, standard_cell, standard_column,
    SCategoryContext,
};
use crate::parabolic::ParabolicSubset;
use crate::perm::Permutation;
use crate::sweep;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableKind {
    Verma,
    SingularVerma,
    ProperStandard,
    Standard,
}

impl TableKind {
    pub fn tag(self) -> &'static str {
        match self {
            TableKind::Verma => "verma",
            TableKind::SingularVerma => "singular-verma",
            TableKind::ProperStandard => "proper-standard",
            TableKind::Standard => "standard",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Csv,
    Json,
}

/// A request for one ext table. `parabolic` is required for the S-subcategory
/// kinds, `stabilizer` for the singular block.
#[derive(Debug, Clone)]
pub struct TableRequest {
    pub n: usize,
    pub kind: TableKind,
    pub parabolic: Option<ParabolicSubset>,
    pub stabilizer: Option<ParabolicSubset>,
    pub graded: bool,
    pub format: OutputFormat,
}

/// One cell of an ext table; mirrors [`GradedExtAnswer`] with serialized
/// permutation labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableCell {
    pub x: String,
    pub y: String,
    pub status: ExtStatus,
    pub dim: Option<u64>,
    pub degrees: Option<Vec<i64>>,
}

/// A fully evaluated table, row-major in the global order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub n: usize,
    pub kind: TableKind,
    pub parabolic: Option<String>,
    pub normalization: String,
    pub cells: Vec<TableCell>,
}

fn answers_to_cells(
    rows: &[Permutation],
    cols: &[Permutation],
    columns: Vec<Vec<GradedExtAnswer>>,
) -> Vec<TableCell> {
    let mut cells = Vec::with_capacity(rows.len() * cols.len());
    for (ri, x) in rows.iter().enumerate() {
        for (ci, y) in cols.iter().enumerate() {
            let a = &columns[ci][ri];
            cells.push(TableCell {
                x: x.to_string(),
                y: y.to_string(),
                status: a.status,
                dim: a.dim,
                degrees: a.degrees.clone(),
            });
        }
    }
    cells
}

fn compute_impl(req: &TableRequest, parallel: bool) -> Result<Table> {
    let n = req.n;
    if n < 3 {
        return Err(Error::RankTooSmall { n, min: 3 });
    }
    let w0 = Permutation::longest_element(n)?;
    let map = |len: usize, f: &(dyn Fn(usize) -> Result<Vec<GradedExtAnswer>> + Sync)| {
        if parallel {
            sweep::map_indexed(len, f)
        } else {
            sweep::map_indexed_seq(len, f)
        }
    };
    let (rows, cols, parabolic_label, normalization, columns) = match req.kind {
        TableKind::Verma => {
            if req.parabolic.is_some() || req.stabilizer.is_some() {
                return Err(Error::InvalidParabolic(
                    "verma tables take neither a parabolic nor a stabilizer".into(),
                ));
            }
            let all = Permutation::all(n);
            let rows = all.clone();
            let compute_col = |ci: usize| -> Result<Vec<GradedExtAnswer>> {
                let y = &all[ci];
                let profile = crate::ext_o::bm_phi_profile(y)?;
                Ok(rows
                    .iter()
                    .map(|x| crate::ext_o::verma_cell(x, y, &w0, &profile))
                    .collect())
            };
            let columns = map(all.len(), &compute_col);
            (
                rows.clone(),
                all,
                None,
                Normalization::TopDegreeZero,
                columns,
            )
        }
        TableKind::SingularVerma => {
            let stab = req.stabilizer.clone().ok_or_else(|| {
                Error::InvalidParabolic("singular-verma tables require a stabilizer".into())
            })?;
            if stab.n() != n {
                return Err(Error::RankMismatch(stab.n(), n));
            }
            // Rows are the longest representatives of the cosets w·W^stab,
            // columns the shortest ones; these index the simples and Vermas
            // of the singular block.
            let rows: Vec<Permutation> = Permutation::all(n)
                .into_iter()
                .filter(|w| stab.simples().all(|i| w.has_right_descent(i)))
                .collect();
            let cols: Vec<Permutation> = Permutation::all(n)
                .into_iter()
                .filter(|w| stab.simples().all(|i| !w.has_right_descent(i)))
                .collect();
            let compute_col = |ci: usize| -> Result<Vec<GradedExtAnswer>> {
                let y = &cols[ci];
                let profile = crate::ext_o::bm_phi_profile(y)?;
                Ok(rows
                    .iter()
                    .map(|x| crate::ext_o::singular_cell(x, &stab, y, &w0, &profile))
                    .collect())
            };
            let columns = map(cols.len(), &compute_col);
            (
                rows,
                cols,
                Some(stab.to_string()),
                Normalization::TopDegreeZero,
                columns,
            )
        }
        TableKind::ProperStandard | TableKind::Standard => {
            if req.stabilizer.is_some() {
                return Err(Error::InvalidParabolic(
                    "S-subcategory tables take a parabolic, not a stabilizer".into(),
                ));
            }
            let p = req.parabolic.clone().ok_or_else(|| {
                Error::InvalidParabolic("S-subcategory tables require a parabolic".into())
            })?;
            if p.n() != n {
                return Err(Error::RankMismatch(p.n(), n));
            }
            let label = Some(p.to_string());
            let ctx = SCategoryContext::new(p)?;
            let rows = ctx.x_long().to_vec();
            let cols = rows.clone();
            let standard = req.kind == TableKind::Standard;
            let compute_col = |ci: usize| -> Result<Vec<GradedExtAnswer>> {
                let y = &cols[ci];
                if standard {
                    let col = standard_column(&ctx, y)?;
                    rows.iter().map(|x| standard_cell(&ctx, x, &col)).collect()
                } else {
                    let col = proper_standard_column(&ctx, y)?;
                    Ok(rows
                        .iter()
                        .map(|x| proper_standard_cell(&ctx, x, &col))
                        .collect())
                }
            };
            let columns = map(cols.len(), &compute_col);
            let normalization = if standard {
                Normalization::STopDegreeZero
            } else {
                Normalization::TopDegreeZero
            };
            (rows, cols, label, normalization, columns)
        }
    };
    let columns = columns.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(Table {
        n,
        kind: req.kind,
        parabolic: parabolic_label,
        normalization: normalization.tag().to_string(),
        cells: answers_to_cells(&rows, &cols, columns),
    })
}

/// Evaluates the requested table, fanning the columns out in parallel when
/// the `parallel` feature is enabled.
pub fn compute(req: &TableRequest) -> Result<Table> {
    compute_impl(req, true)
}

/// Sequential reference path; used by the benchmarks to compare against the
/// parallel one.
#[doc(hidden)]
pub fn compute_seq(req: &TableRequest) -> Result<Table> {
    compute_impl(req, false)
}

/// Evaluates and renders in the requested format.
pub fn run(req: &TableRequest) -> Result<String> {
    let table = compute(req)?;
    Ok(match req.format {
        OutputFormat::Text => render_text(&table, req.graded),
        OutputFormat::Csv => render_csv(&table),
        OutputFormat::Json => render_json(&table),
    })
}

fn cell_text(cell: &TableCell, graded: bool) -> String {
    match cell.status {
        ExtStatus::Zero => "-".to_string(),
        ExtStatus::Unknown => "?".to_string(),
        ExtStatus::Exact => {
            let dim = cell.dim.expect("exact cells carry a dimension");
            if !graded {
                return dim.to_string();
            }
            match &cell.degrees {
                Some(degrees) => {
                    let joined: Vec<String> = degrees.iter().map(|d| d.to_string()).collect();
                    format!("({},{})", dim, joined.join(";"))
                }
                None => format!("({dim})"),
            }
        }
    }
}

/// Renders the grid in the layout of the reference tables: rows labelled by
/// `x`, columns by `y`, `(dim,degree)` entries, `-` for zero, `?` for
/// unknown.
pub fn render_text(table: &Table, graded: bool) -> String {
    let mut rows: Vec<String> = Vec::new();
    let mut cols: Vec<String> = Vec::new();
    for cell in &table.cells {
        if !rows.contains(&cell.x) {
            rows.push(cell.x.clone());
        }
        if !cols.contains(&cell.y) {
            cols.push(cell.y.clone());
        }
    }
    let mut grid: Vec<Vec<String>> = Vec::with_capacity(rows.len() + 1);
    let mut header = vec!["x\\y".to_string()];
    header.extend(cols.iter().cloned());
    grid.push(header);
    for (ri, x) in rows.iter().enumerate() {
        let mut line = vec![x.clone()];
        for ci in 0..cols.len() {
            line.push(cell_text(&table.cells[ri * cols.len() + ci], graded));
        }
        grid.push(line);
    }
    let mut widths = vec![0usize; cols.len() + 1];
    for line in &grid {
        for (i, entry) in line.iter().enumerate() {
            widths[i] = widths[i].max(entry.len());
        }
    }
    let mut out = String::new();
    out.push_str(&format!("kind: {}\n", table.kind.tag()));
    out.push_str(&format!("n: {}\n", table.n));
    if let Some(p) = &table.parabolic {
        let label = if p.is_empty() { "(empty)" } else { p.as_str() };
        out.push_str(&format!("parabolic: {label}\n"));
    }
    out.push_str(&format!("normalization: {}\n", table.normalization));
    out.push_str(&format!("graded: {graded}\n\n"));
    for line in &grid {
        let mut rendered = String::new();
        for (i, entry) in line.iter().enumerate() {
            if i > 0 {
                rendered.push_str("  ");
            }
            rendered.push_str(entry);
            let pad = widths[i] - entry.len();
            if i + 1 < line.len() {
                rendered.push_str(&" ".repeat(pad));
            }
        }
        out.push_str(rendered.trim_end());
        out.push('\n');
    }
    out
}

/// One cell per line; permutation labels are quoted because one-line
/// notation contains commas. The normalization tag rides on every row so
/// the degree convention survives cutting the file apart.
pub fn render_csv(table: &Table) -> String {
    let mut out = String::from("x,y,status,dim,degrees,normalization\n");
    for cell in &table.cells {
        let status = match cell.status {
            ExtStatus::Exact => "exact",
            ExtStatus::Zero => "zero",
            ExtStatus::Unknown => "unknown",
        };
        let dim = cell.dim.map(|d| d.to_string()).unwrap_or_default();
        let degrees = cell
            .degrees
            .as_ref()
            .map(|ds| {
                ds.iter()
                    .map(|d| d.to_string())
                    .collect::<Vec<_>>()
                    .join(";")
            })
            .unwrap_or_default();
        out.push_str(&format!(
            "\"{}\",\"{}\",{},{},{},{}\n",
            cell.x, cell.y, status, dim, degrees, table.normalization
        ));
    }
    out
}

pub fn render_json(table: &Table) -> String {
    let mut s = serde_json::to_string_pretty(table).expect("table serialization");
    s.push('\n');
    s
}

// ---------------------------------------------------------------------
// List-style reports for the remaining subcommands.
// ---------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoordEntry {
    pub perm: String,
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

/// `base --n N`: all bigrassmannians, optionally with coordinates.
pub fn base_report(n: usize, coords: bool) -> Result<String> {
    let elements = crate::base::bigrassmannians(n)?;
    let rendered = if coords {
        let entries: Vec<CoordEntry> = elements
            .iter()
            .map(|b| {
                let c = crate::base::coord_of(b)?;
                Ok(CoordEntry {
                    perm: b.to_string(),
                    i: c.i,
                    j: c.j,
                    k: c.k,
                })
            })
            .collect::<Result<_>>()?;
        serde_json::to_string_pretty(&entries)
    } else {
        let names: Vec<String> = elements.iter().map(|b| b.to_string()).collect();
        serde_json::to_string_pretty(&names)
    };
    Ok(rendered.expect("report serialization") + "\n")
}

/// `bm --n N --perm w`: the set `BM(w)`.
pub fn bm_report(w: &Permutation) -> Result<String> {
    let names: Vec<String> = crate::base::bm(w).iter().map(|b| b.to_string()).collect();
    Ok(serde_json::to_string_pretty(&names).expect("report serialization") + "\n")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellClassReport {
    pub shape: String,
    pub size: usize,
    pub small: bool,
    pub penultimate: bool,
    pub elements: Vec<String>,
}

/// `cells --n N [--shape P]`: the two-sided cells as shape classes.
pub fn cells_report(n: usize, filter: Option<&Shape>) -> Result<String> {
    if n < 3 {
        return Err(Error::RankTooSmall { n, min: 3 });
    }
    let small: std::collections::HashSet<Permutation> =
        small_cell(n)?.into_iter().collect();
    let penultimate: std::collections::HashSet<Permutation> =
        penultimate_cell(n)?.into_iter().collect();
    let mut classes: std::collections::BTreeMap<Vec<usize>, Vec<Permutation>> =
        std::collections::BTreeMap::new();
    for w in Permutation::all(n) {
        classes.entry(shape(&w).parts().to_vec()).or_default().push(w);
    }
    let mut reports = Vec::new();
    for (parts, elements) in classes.iter().rev() {
        let sh = Shape::new(parts.clone())?;
        if let Some(f) = filter {
            if f != &sh {
                continue;
            }
        }
        reports.push(CellClassReport {
            shape: sh.to_string(),
            size: elements.len(),
            small: small.contains(&elements[0]),
            penultimate: penultimate.contains(&elements[0]),
            elements: elements.iter().map(|w| w.to_string()).collect(),
        });
    }
    Ok(serde_json::to_string_pretty(&reports).expect("report serialization") + "\n")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiReport {
    pub perm: String,
    pub phi: String,
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub m: i64,
}

/// `phi --n N --perm b`: the image `Phi(b)` with coordinates and degree.
pub fn phi_report(b: &Permutation) -> Result<String> {
    let (image, c) = crate::cells::phi_with_coord(b)?;
    let report = PhiReport {
        perm: b.to_string(),
        phi: image.to_string(),
        i: c.i,
        j: c.j,
        k: c.k,
        m: crate::ext_o::m_degree(b)?,
    };
    Ok(serde_json::to_string_pretty(&report).expect("report serialization") + "\n")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SocleReport {
    pub x: String,
    pub m: i64,
}

/// `socle --n N --v v --w w [--parabolic p]`: socle of the cokernel of the
/// Verma (or proper standard) inclusion.
pub fn socle_report(
    v: &Permutation,
    w: &Permutation,
    parabolic: Option<&ParabolicSubset>,
) -> Result<String> {
    let entries = match parabolic {
        None => crate::ext_o::socle_coker_verma(v, w)?,
        Some(p) => {
            let ctx = SCategoryContext::new(p.clone())?;
            // Proper standard quotients: Δ̄_w ↪ Δ̄_v needs w >= v, so the
            // CLI's (v, w) maps to (x, y) = (w, v).
            crate::ext_s::socle_coker_proper_standard(&ctx, w, v)?
        }
    };
    let reports: Vec<SocleReport> = entries
        .iter()
        .map(|e| SocleReport {
            x: e.x.to_string(),
            m: e.m,
        })
        .collect();
    Ok(serde_json::to_string_pretty(&reports).expect("report serialization") + "\n")
}
