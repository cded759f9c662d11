//! JSON forms of graphs, points and fixtures. Rationals travel as `"p/q"` strings and
//! matrices as row-major arrays of rows.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sigma_quiver_core::rational::{self as rat};
use sigma_quiver_core::{Error, Graph, QMatrix, RepPoint, Q};

#[derive(Debug)]
pub enum InputError {
    Io(String),
    Json(String),
    Core(Error),
}

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            InputError::Io(s) => write!(f, "io: {s}"),
            InputError::Json(s) => write!(f, "json: {s}"),
            InputError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for InputError {}

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError::Core(e)
    }
}

impl From<serde_json::Error> for InputError {
    fn from(e: serde_json::Error) -> Self {
        InputError::Json(e.to_string())
    }
}

pub type InputResult<T> = Result<T, InputError>;

/// Either `{"vertices", "edges", "orientation"}` or a Dynkin label such as `"A3"`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum GraphJson {
    Named(String),
    Explicit {
        vertices: Vec<serde_json::Value>,
        edges: Vec<[usize; 2]>,
        orientation: Vec<i8>,
    },
}

impl GraphJson {
    pub fn to_graph(&self) -> InputResult<Graph> {
        match self {
            GraphJson::Named(name) => named_graph(name),
            GraphJson::Explicit { vertices, edges, orientation } => {
                let e: Vec<(usize, usize)> = edges.iter().map(|[a, b]| (*a, *b)).collect();
                Ok(Graph::new(vertices.len(), &e, orientation)?)
            }
        }
    }

    pub fn from_graph(g: &Graph) -> Self {
        let edges = g.edges();
        GraphJson::Explicit {
            vertices: (0..g.num_vertices()).map(|i| serde_json::Value::from(i as u64)).collect(),
            edges: edges.iter().map(|&(a, b, _)| [a, b]).collect(),
            orientation: edges.iter().map(|&(_, _, e)| e).collect(),
        }
    }
}

pub fn named_graph(name: &str) -> InputResult<Graph> {
    let bad = || InputError::Json(format!("unknown graph label {name:?}"));
    let (family, rank) = name.split_at(1.min(name.len()));
    let n: usize = rank.parse().map_err(|_| bad())?;
    match family {
        "A" if n >= 1 => Ok(Graph::type_a(n)),
        "D" if n >= 4 => Ok(Graph::type_d(n)),
        "E" if (6..=8).contains(&n) => Ok(Graph::type_e(n)),
        _ => Err(bad()),
    }
}

pub type MatrixJson = Vec<Vec<String>>;

pub fn matrix_to_json(m: &QMatrix) -> MatrixJson {
    (0..m.rows()).map(|r| m.row(r).iter().map(rat::to_string).collect()).collect()
}

/// `rows × cols` is taken from the expected shape so that empty matrices round-trip.
pub fn matrix_from_json(j: &MatrixJson, rows: usize, cols: usize) -> InputResult<QMatrix> {
    if j.len() != rows || j.iter().any(|r| r.len() != cols) {
        return Err(InputError::Core(Error::Shape(format!("expected a {rows}×{cols} matrix"))));
    }
    let data = j.iter().flatten().map(|s| rat::parse(s)).collect::<Result<Vec<Q>, _>>()?;
    Ok(QMatrix::from_vec(rows, cols, data))
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct PointJson {
    pub graph: GraphJson,
    pub v: Vec<i64>,
    pub w: Vec<i64>,
    #[serde(default)]
    pub x: BTreeMap<String, MatrixJson>,
    #[serde(default)]
    pub p: BTreeMap<String, MatrixJson>,
    #[serde(default)]
    pub q: BTreeMap<String, MatrixJson>,
}

fn dim(x: i64) -> usize {
    x.max(0) as usize
}

impl PointJson {
    pub fn from_point(pt: &RepPoint) -> Self {
        let key = |i: usize| i.to_string();
        PointJson {
            graph: GraphJson::from_graph(&pt.graph),
            v: pt.v.clone(),
            w: pt.w.clone(),
            x: pt.x.iter().enumerate().map(|(h, m)| (key(h), matrix_to_json(m))).collect(),
            p: pt.p.iter().enumerate().map(|(i, m)| (key(i), matrix_to_json(m))).collect(),
            q: pt.q.iter().enumerate().map(|(i, m)| (key(i), matrix_to_json(m))).collect(),
        }
    }

    /// Missing entries are zero.
    pub fn to_point(&self) -> InputResult<RepPoint> {
        let g = self.graph.to_graph()?;
        g.check_dims(&self.v, "v")?;
        g.check_dims(&self.w, "w")?;
        let get = |map: &BTreeMap<String, MatrixJson>, k: usize, r: usize, c: usize| match map.get(&k.to_string()) {
            Some(j) => matrix_from_json(j, r, c),
            None => Ok(QMatrix::zeros(r, c)),
        };
        let (v, w) = (&self.v, &self.w);
        let x = (0..g.num_arrows()).map(|h| get(&self.x, h, dim(v[g.dst(h)]), dim(v[g.src(h)]))).collect::<InputResult<Vec<_>>>()?;
        let p = (0..g.num_vertices()).map(|i| get(&self.p, i, dim(v[i]), dim(w[i]))).collect::<InputResult<Vec<_>>>()?;
        let q = (0..g.num_vertices()).map(|i| get(&self.q, i, dim(w[i]), dim(v[i]))).collect::<InputResult<Vec<_>>>()?;
        Ok(RepPoint::new(g, v.clone(), w.clone(), x, p, q)?)
    }
}

/// Fixture file: a graph with dimension data and optional extras used by individual commands.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Default)]
pub struct Fixture {
    #[serde(default)]
    pub name: String,
    pub graph: Option<GraphJson>,
    #[serde(default)]
    pub v: Vec<i64>,
    #[serde(default)]
    pub w: Vec<i64>,
    /// Signs `δ_i` of the forms on `W`.
    pub delta: Option<Vec<i8>>,
    /// Real part `ξ` of the parameter.
    pub xi: Option<Vec<i64>>,
    /// Complex part `ζ_ℂ` as `"p/q"` strings.
    pub zeta_c: Option<Vec<String>>,
    pub point: Option<PointJson>,
    /// Torus data: `w¹` and the blocks `w², …`.
    pub w1: Option<Vec<i64>>,
    pub blocks: Option<Vec<Vec<i64>>>,
    /// Rows to add for the row-addition symmetry.
    pub rows: Option<usize>,
}

impl Fixture {
    pub fn load(path: &Path) -> InputResult<Self> {
        let text = fs::read_to_string(path).map_err(|e| InputError::Io(format!("{}: {e}", path.display())))?;
        let f: Fixture = serde_json::from_str(&text)?;
        f.validate()?;
        Ok(f)
    }

    pub fn graph(&self) -> InputResult<Graph> {
        match (&self.graph, &self.point) {
            (Some(g), _) => g.to_graph(),
            (None, Some(p)) => p.graph.to_graph(),
            (None, None) => Ok(Graph::type_a(self.v.len().max(self.w.len()))),
        }
    }

    pub fn validate(&self) -> InputResult<()> {
        let g = self.graph()?;
        if !self.v.is_empty() || !self.w.is_empty() {
            g.check_dims(&self.v, "v")?;
            g.check_dims(&self.w, "w")?;
        }
        if let Some(p) = &self.point {
            p.to_point()?;
        }
        Ok(())
    }

    pub fn zeta_c(&self) -> InputResult<Vec<Q>> {
        match &self.zeta_c {
            Some(z) => Ok(z.iter().map(|s| rat::parse(s)).collect::<Result<_, _>>()?),
            None => Ok(vec![Q::from_integer(0.into()); self.graph()?.num_vertices()]),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_round_trip() {
        let g = Graph::type_a(2);
        let mut rng = rat::rng_from_seed(3);
        let pt = RepPoint::random(&g, &[1, 2], &[1, 0], &mut rng);
        let j = serde_json::to_string(&PointJson::from_point(&pt)).unwrap();
        let back: PointJson = serde_json::from_str(&j).unwrap();
        assert_eq!(back.to_point().unwrap(), pt);
    }

    #[test]
    fn named_graphs() {
        assert_eq!(named_graph("A3").unwrap().num_vertices(), 3);
        assert!(named_graph("Z2").is_err());
        assert!(named_graph("D3").is_err());
    }
}
