//! JSON file formats for T-coalgebras, modules, YD modules and twist-paired
//! modules.
//!
//! Scalars are strings (`"3"`, `"-1/2"`); plain JSON integers are accepted
//! on input. Matrices are lists of rows. Every document carries `kind` and
//! `field` (`"Q"` or `"F<p>"`). A path of the form `demo:NAME` loads a
//! built-in fixture instead of reading a file.

use std::cell::Cell;
use std::fmt::Write as _;
use std::path::Path;

use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};
use serde_json::Value;

use crate::algebra::Component;
use crate::coalgebra::TCoalg;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::linalg::{Matrix, Tensor3, Vector};
use crate::quasi::RMatrix;
use crate::rep::HModule;
use crate::rib::RibObject;
use crate::scalar::{Field, Scalar};
use crate::yd::YDModule;

thread_local! {
    static FIELD: Cell<Field> = const { Cell::new(Field::Rational) };
}

/// A scalar as written in files.
#[derive(Clone, Debug, PartialEq)]
struct Sc(Scalar);

impl Serialize for Sc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for Sc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Sc, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Sc;
            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                f.write_str("a scalar such as \"-3/4\"")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Sc, E> {
                let field = FIELD.with(|c| c.get());
                field.parse_scalar(v).map(Sc).map_err(|e| E::custom(format!("`{v}`: {e}")))
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Sc, E> {
                Ok(Sc(FIELD.with(|c| c.get()).from_i64(v)))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Sc, E> {
                let v = i64::try_from(v).map_err(|_| E::custom("integer too large; write it as a string"))?;
                self.visit_i64(v)
            }
        }
        d.deserialize_any(V)
    }
}

type Rows = Vec<Vec<Sc>>;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupBlock {
    order: usize,
    table: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComponentBlock {
    dim: usize,
    unit: Vec<Sc>,
    /// `mul[i][j]` holds the coordinates of `e_i e_j`.
    mul: Vec<Vec<Vec<Sc>>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TCoalgFile {
    kind: String,
    field: String,
    group: GroupBlock,
    components: Vec<ComponentBlock>,
    /// `comul[α][β] = Δ_{α,β}`.
    comul: Vec<Vec<Rows>>,
    counit: Vec<Sc>,
    antipode: Vec<Rows>,
    /// `conj[β][α] = φ_β` on `H_α`.
    conj: Vec<Vec<Rows>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rmatrix: Option<Vec<Vec<Rows>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rmatrix_inverse: Option<Vec<Vec<Rows>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    twist: Option<Vec<Vec<Sc>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    basis_names: Option<Vec<Vec<String>>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModuleFile {
    kind: String,
    field: String,
    grade: usize,
    dim: usize,
    action: Vec<Rows>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    coaction: Option<Vec<Rows>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    t: Option<Rows>,
}

/// Any document this module reads.
#[derive(Clone, Debug)]
pub enum Document {
    TCoalg(Box<TCoalg>),
    Module(HModule),
    YD(YDModule),
    Rib(RibObject),
}

fn rows_of(m: &Matrix) -> Rows {
    (0..m.rows()).map(|r| vec_of(m.row(r))).collect()
}

fn vec_of(v: &[Scalar]) -> Vec<Sc> {
    v.iter().cloned().map(Sc).collect()
}

fn matrix_of(rows: Rows, what: &str) -> Result<Matrix> {
    let r = rows.len();
    let c = rows.first().map_or(0, |x| x.len());
    if rows.iter().any(|x| x.len() != c) {
        return Err(Error::shape(format!("{what}: rows have different lengths")));
    }
    Matrix::from_vec(r, c, rows.into_iter().flatten().map(|s| s.0).collect())
}

fn scalars(v: Vec<Sc>) -> Vector {
    v.into_iter().map(|s| s.0).collect()
}

fn field_name(f: Field) -> String {
    f.to_string()
}

/// Reads `kind` and `field` ahead of the typed pass, so scalars can be
/// coerced while their source position is still known.
fn prescan(text: &str) -> Result<(String, Field)> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::parse(e.line(), "", e.to_string()))?;
    let kind = v
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::parse(1, "kind", "missing document kind"))?
        .to_string();
    let field = match v.get("field").and_then(Value::as_str) {
        Some(f) => Field::parse(f).map_err(|_| Error::parse(1, "field", format!("unknown field `{f}`")))?,
        None => return Err(Error::parse(1, "field", "missing field descriptor")),
    };
    Ok((kind, field))
}

fn typed<T: for<'de> Deserialize<'de>>(text: &str, field: Field) -> Result<T> {
    FIELD.with(|c| c.set(field));
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        Error::parse(inner.line(), path, inner.to_string())
    })
}

fn read(path: &Path) -> Result<String> {
    Ok(std::fs::read_to_string(path)?)
}

/// Parses any document.
pub fn parse_document(text: &str) -> Result<Document> {
    let (kind, field) = prescan(text)?;
    match kind.as_str() {
        "tcoalg" => Ok(Document::TCoalg(Box::new(tcoalg_from_file(typed(text, field)?, field)?))),
        "module" | "yd" | "rib" => {
            let f: ModuleFile = typed(text, field)?;
            module_doc(f)
        }
        other => Err(Error::parse(1, "kind", format!("unknown kind `{other}`"))),
    }
}

fn tcoalg_from_file(f: TCoalgFile, field: Field) -> Result<TCoalg> {
    let n = f.group.order;
    if f.group.table.len() != n {
        return Err(Error::shape(format!("group table has {} rows for order {n}", f.group.table.len())));
    }
    let group = FiniteGroup::new(f.group.table)?;
    if f.components.len() != n {
        return Err(Error::shape(format!("{} components for a group of order {n}", f.components.len())));
    }
    let mut components = Vec::with_capacity(n);
    for (a, c) in f.components.into_iter().enumerate() {
        let d = c.dim;
        if c.unit.len() != d || c.mul.len() != d || c.mul.iter().any(|r| r.len() != d || r.iter().any(|v| v.len() != d)) {
            return Err(Error::shape(format!("component {a}: structure constants do not match dim {d}")));
        }
        let elems = c.mul.into_iter().flatten().flatten().map(|s| s.0).collect();
        components.push(Component::new(Tensor3::from_vec(d, d, d, elems)?, scalars(c.unit))?);
    }
    let square = |m: Vec<Vec<Rows>>, what: &str| -> Result<Vec<Matrix>> {
        if m.len() != n || m.iter().any(|r| r.len() != n) {
            return Err(Error::shape(format!("{what} must be a {n}x{n} family")));
        }
        let mut out = Vec::with_capacity(n * n);
        for (a, row) in m.into_iter().enumerate() {
            for (b, rows) in row.into_iter().enumerate() {
                out.push(matrix_of(rows, &format!("{what} at ({a},{b})"))?);
            }
        }
        Ok(out)
    };
    let comul = square(f.comul, "comul")?;
    let conj = square(f.conj, "conj")?;
    if f.antipode.len() != n {
        return Err(Error::shape(format!("antipode must list {n} maps")));
    }
    let antipode = f
        .antipode
        .into_iter()
        .enumerate()
        .map(|(a, r)| matrix_of(r, &format!("antipode at {a}")))
        .collect::<Result<Vec<_>>>()?;
    let mut h = TCoalg::new(group, components, comul, scalars(f.counit), antipode, conj)?;
    h.field = field;
    if let Some(r) = f.rmatrix {
        let r = square(r, "rmatrix")?;
        let fam = match f.rmatrix_inverse {
            Some(inv) => RMatrix::with_inverse(r, square(inv, "rmatrix_inverse")?),
            None => RMatrix::new(r, &h),
        };
        h = h.with_rmatrix(fam)?;
    }
    if let Some(t) = f.twist {
        if t.len() != n || t.iter().enumerate().any(|(a, v)| v.len() != h.dim(a)) {
            return Err(Error::shape("twist must list one element of H_α per α"));
        }
        h = h.with_twist(t.into_iter().map(scalars).collect());
    }
    if let Some(names) = f.basis_names {
        if names.len() != n || names.iter().enumerate().any(|(a, v)| v.len() != h.dim(a)) {
            return Err(Error::shape("basis_names must name every basis vector"));
        }
        h.basis_names = Some(names);
    }
    Ok(h)
}

fn module_doc(f: ModuleFile) -> Result<Document> {
    let d = f.dim;
    let square = |rows: Rows, what: String| -> Result<Matrix> {
        let m = matrix_of(rows, &what)?;
        if m.rows() != d || m.cols() != d {
            return Err(Error::shape(format!("{what} is {}x{}, expected {d}x{d}", m.rows(), m.cols())));
        }
        Ok(m)
    };
    let action = f
        .action
        .into_iter()
        .enumerate()
        .map(|(i, r)| square(r, format!("action[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    let module = HModule::new(f.grade, d, action);
    match f.kind.as_str() {
        "module" => Ok(Document::Module(module)),
        "yd" => {
            let co = f.coaction.ok_or_else(|| Error::parse(1, "coaction", "YD document needs a coaction"))?;
            let coaction = co
                .into_iter()
                .enumerate()
                .map(|(l, r)| {
                    let m = matrix_of(r, &format!("coaction[{l}]"))?;
                    if m.cols() != d || m.rows() % d.max(1) != 0 {
                        return Err(Error::shape(format!("coaction[{l}] is {}x{}", m.rows(), m.cols())));
                    }
                    Ok(m)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Document::YD(YDModule { module, coaction }))
        }
        _ => {
            let t = f.t.ok_or_else(|| Error::parse(1, "t", "rib document needs t"))?;
            Ok(Document::Rib(RibObject { module, t: square(t, "t".into())? }))
        }
    }
}

fn tcoalg_to_file(h: &TCoalg) -> TCoalgFile {
    let n = h.order();
    let family = |ms: &[Matrix]| -> Vec<Vec<Rows>> {
        (0..n).map(|a| (0..n).map(|b| rows_of(&ms[a * n + b])).collect()).collect()
    };
    let components = h
        .components
        .iter()
        .map(|c| ComponentBlock {
            dim: c.dim(),
            unit: vec_of(c.unit()),
            mul: (0..c.dim())
                .map(|i| (0..c.dim()).map(|j| vec_of(&c.mul(&c.basis(i), &c.basis(j)))).collect())
                .collect(),
        })
        .collect();
    let (rmatrix, rmatrix_inverse) = match &h.rmatrix {
        Some(r) => {
            let inv: Option<Vec<Matrix>> = r.inverses().iter().cloned().collect();
            (Some(family(r.all())), inv.map(|i| family(&i)))
        }
        None => (None, None),
    };
    TCoalgFile {
        kind: "tcoalg".into(),
        field: field_name(h.field),
        group: GroupBlock { order: n, table: h.group.table().to_vec() },
        components,
        comul: family(&h.comul),
        counit: vec_of(&h.counit),
        antipode: h.antipode.iter().map(rows_of).collect(),
        conj: family(&h.conj),
        rmatrix,
        rmatrix_inverse,
        twist: h.twist.as_ref().map(|t| t.iter().map(|v| vec_of(v)).collect()),
        basis_names: h.basis_names.clone(),
    }
}

fn field_of(m: &HModule) -> Field {
    m.action.iter().flat_map(|a| a.elems()).map(Scalar::field).find(|f| *f != Field::Rational).unwrap_or(Field::Rational)
}

fn module_to_file(kind: &str, m: &HModule) -> ModuleFile {
    ModuleFile {
        kind: kind.into(),
        field: field_name(field_of(m)),
        grade: m.grade,
        dim: m.dim,
        action: m.action.iter().map(rows_of).collect(),
        coaction: None,
        t: None,
    }
}

/// Serializes with one line per matrix row.
fn render<T: Serialize>(doc: &T) -> String {
    let v = serde_json::to_value(doc).expect("documents serialize");
    let mut out = String::new();
    write_value(&mut out, &v, 0);
    out.push('\n');
    out
}

fn is_leaf_array(v: &Value) -> bool {
    matches!(v, Value::Array(xs) if xs.iter().all(|x| !x.is_array() && !x.is_object()))
}

fn write_value(out: &mut String, v: &Value, indent: usize) {
    let pad = |k: usize| " ".repeat(k);
    match v {
        Value::Object(map) => {
            out.push_str("{\n");
            let len = map.len();
            for (i, (k, x)) in map.iter().enumerate() {
                let _ = write!(out, "{}{}: ", pad(indent + 2), Value::String(k.clone()));
                write_value(out, x, indent + 2);
                out.push_str(if i + 1 < len { ",\n" } else { "\n" });
            }
            let _ = write!(out, "{}}}", pad(indent));
        }
        Value::Array(xs) if is_leaf_array(v) => {
            let items: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
            let _ = write!(out, "[{}]", items.join(", "));
        }
        Value::Array(xs) => {
            out.push_str("[\n");
            for (i, x) in xs.iter().enumerate() {
                out.push_str(&pad(indent + 2));
                write_value(out, x, indent + 2);
                out.push_str(if i + 1 < xs.len() { ",\n" } else { "\n" });
            }
            let _ = write!(out, "{}]", pad(indent));
        }
        other => out.push_str(&other.to_string()),
    }
}

pub fn tcoalg_to_string(h: &TCoalg) -> String {
    render(&tcoalg_to_file(h))
}

pub fn module_to_string(m: &HModule) -> String {
    render(&module_to_file("module", m))
}

pub fn yd_to_string(v: &YDModule) -> String {
    let mut f = module_to_file("yd", &v.module);
    f.coaction = Some(v.coaction.iter().map(rows_of).collect());
    render(&f)
}

pub fn rib_to_string(o: &RibObject) -> String {
    let mut f = module_to_file("rib", &o.module);
    f.t = Some(rows_of(&o.t));
    render(&f)
}

pub fn parse_tcoalg(text: &str) -> Result<TCoalg> {
    match parse_document(text)? {
        Document::TCoalg(h) => Ok(*h),
        _ => Err(Error::parse(1, "kind", "expected a tcoalg document")),
    }
}

/// Loads a T-coalgebra from a file, or a fixture for `demo:NAME`.
pub fn load_tcoalg(path: &str) -> Result<TCoalg> {
    if let Some(name) = path.strip_prefix("demo:") {
        return crate::demos::demo(name);
    }
    parse_tcoalg(&read(Path::new(path))?)
}

pub fn load_document(path: &str) -> Result<Document> {
    if path.starts_with("demo:") {
        return load_tcoalg(path).map(|h| Document::TCoalg(Box::new(h)));
    }
    parse_document(&read(Path::new(path))?)
}

pub fn load_module(path: &str) -> Result<HModule> {
    match load_document(path)? {
        Document::Module(m) => Ok(m),
        Document::YD(v) => Ok(v.module),
        Document::Rib(o) => Ok(o.module),
        Document::TCoalg(_) => Err(Error::parse(1, "kind", "expected a module document")),
    }
}

pub fn load_yd(path: &str) -> Result<YDModule> {
    match load_document(path)? {
        Document::YD(v) => Ok(v),
        _ => Err(Error::parse(1, "kind", "expected a yd document")),
    }
}

pub fn load_rib(path: &str) -> Result<RibObject> {
    match load_document(path)? {
        Document::Rib(o) => Ok(o),
        _ => Err(Error::parse(1, "kind", "expected a rib document")),
    }
}

pub fn save(path: &str, text: &str) -> Result<()> {
    Ok(std::fs::write(path, text)?)
}
