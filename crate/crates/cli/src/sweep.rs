//! Grid sweeps and growth tables.

use std::io;

use bcml::identities::growth_estimate;
use bcml::{Bicomplex, Error, MLEvalOptions};
use serde_json::{json, Value};

use crate::Target;

/// Values of each cartesian coefficient; the grid is their product with
/// `x0` varying slowest.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    pub axes: [Vec<f64>; 4],
}

impl Grid {
    pub fn points(&self) -> Vec<Bicomplex> {
        let mut out = Vec::new();
        for &x0 in &self.axes[0] {
            for &x1 in &self.axes[1] {
                for &x2 in &self.axes[2] {
                    for &x3 in &self.axes[3] {
                        out.push(Bicomplex::new(x0, x1, x2, x3));
                    }
                }
            }
        }
        out
    }
}

fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![a],
        _ => (0..n).map(|i| a + (b - a) * i as f64 / (n - 1) as f64).collect(),
    }
}

/// Parse `x0=a:b:n,x3=v,...`. A count of zero gives an empty grid.
pub fn parse_grid(src: &str) -> Result<Grid, Error> {
    let mut axes: [Option<Vec<f64>>; 4] = Default::default();
    let bad = |m: String| Error::Parse(format!("grid: {m}"));
    for item in src.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (name, spec) = item
            .split_once('=')
            .ok_or_else(|| bad(format!("expected `xk=...`, got `{item}`")))?;
        let k = match name.trim() {
            "x0" => 0,
            "x1" => 1,
            "x2" => 2,
            "x3" => 3,
            other => return Err(bad(format!("unknown coefficient `{other}`"))),
        };
        if axes[k].is_some() {
            return Err(bad(format!("coefficient x{k} given twice")));
        }
        let num = |s: &str| -> Result<f64, Error> {
            let v: f64 = s.trim().parse().map_err(|_| bad(format!("bad number `{s}`")))?;
            if v.is_finite() {
                Ok(v)
            } else {
                Err(bad(format!("non-finite value `{s}`")))
            }
        };
        let parts: Vec<&str> = spec.split(':').collect();
        axes[k] = Some(match parts.as_slice() {
            [v] => vec![num(v)?],
            [a, b, n] => {
                let n: usize = n.trim().parse().map_err(|_| bad(format!("bad count `{n}`")))?;
                linspace(num(a)?, num(b)?, n)
            }
            _ => return Err(bad(format!("expected `a:b:n` or a value, got `{spec}`"))),
        });
    }
    Ok(Grid {
        axes: axes.map(|a| a.unwrap_or_else(|| vec![0.0])),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Text(String),
    Empty,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

pub const SWEEP_COLUMNS: [&str; 19] = [
    "x0", "x1", "x2", "x3", "xi1_re", "xi1_im", "xi2_re", "xi2_im", "v0", "v1", "v2", "v3",
    "v_xi1_re", "v_xi1_im", "v_xi2_re", "v_xi2_im", "algorithm", "error_estimate", "error",
];

/// One row per grid point; evaluation errors go into the `error` column.
pub fn sweep_rows(target: &Target, grid: &Grid, opts: &MLEvalOptions) -> Table {
    let rows = grid
        .points()
        .iter()
        .map(|xi| {
            let (a, b) = xi.to_idempotent();
            let mut row: Vec<Cell> = [xi.x0, xi.x1, xi.x2, xi.x3, a.re, a.im, b.re, b.im]
                .into_iter()
                .map(Cell::Num)
                .collect();
            match target.eval(xi, opts) {
                Ok(v) => {
                    let x = v.value;
                    let (c, d) = x.to_idempotent();
                    row.extend([x.x0, x.x1, x.x2, x.x3, c.re, c.im, d.re, d.im].map(Cell::Num));
                    row.push(Cell::Text(target.algorithm_name().into()));
                    row.push(Cell::Num(v.error_estimate));
                    row.push(Cell::Empty);
                }
                Err(e) => {
                    row.extend(std::iter::repeat_n(Cell::Empty, 8));
                    row.push(Cell::Text(target.algorithm_name().into()));
                    row.push(Cell::Empty);
                    row.push(Cell::Text(e.to_string()));
                }
            }
            row
        })
        .collect();
    Table {
        columns: SWEEP_COLUMNS.to_vec(),
        rows,
    }
}

/// `M(r)` per radius and the secant slope of `ln ln M` against `ln r` from
/// the previous usable radius.
pub fn growth_rows(alpha: f64, radii: &[f64], angles: usize, opts: &MLEvalOptions) -> Result<Table, Error> {
    let g = growth_estimate(alpha, radii, angles, opts)?;
    let mut prev: Option<(f64, f64)> = None;
    let rows = g
        .radii
        .iter()
        .zip(&g.max_abs)
        .map(|(&r, m)| {
            let ll = m.filter(|m| *m > std::f64::consts::E).map(|m| m.ln().ln());
            let slope = match (prev, ll) {
                (Some((lr0, ll0)), Some(ll1)) if r.ln() != lr0 => Some((ll1 - ll0) / (r.ln() - lr0)),
                _ => None,
            };
            if let Some(ll) = ll {
                prev = Some((r.ln(), ll));
            }
            let opt = |v: Option<f64>| v.map(Cell::Num).unwrap_or(Cell::Empty);
            vec![Cell::Num(alpha), Cell::Num(r), opt(*m), opt(ll), opt(slope)]
        })
        .collect();
    Ok(Table {
        columns: vec!["alpha", "r", "max_abs", "log_log_max", "slope"],
        rows,
    })
}

fn cell_json(c: &Cell) -> Value {
    match c {
        Cell::Num(x) => json!(x),
        Cell::Text(s) => json!(s),
        Cell::Empty => Value::Null,
    }
}

pub fn write_table(t: &Table, as_json: bool) -> io::Result<String> {
    if as_json {
        let rows: Vec<Vec<Value>> = t.rows.iter().map(|r| r.iter().map(cell_json).collect()).collect();
        let mut s = serde_json::to_string_pretty(&json!({ "columns": t.columns, "rows": rows }))
            .map_err(io::Error::other)?;
        s.push('\n');
        return Ok(s);
    }
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&t.columns).map_err(io::Error::other)?;
    for row in &t.rows {
        w.write_record(row.iter().map(|c| match c {
            Cell::Num(x) => format!("{x:?}"),
            Cell::Text(s) => s.clone(),
            Cell::Empty => String::new(),
        }))
        .map_err(io::Error::other)?;
    }
    let bytes = w.into_inner().map_err(|e| io::Error::other(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
