//! Command execution and output formatting for the `eqfix` binary.
//!
//! Every command reads a [`SceneDocument`](crate::scene::SceneDocument) and
//! renders its result either as text or as JSON. Exit statuses: 0 on
//! success, 2 for unreadable or inconsistent input, 3 when a mathematical
//! precondition fails (singular map, marks outside the image of `A(G)`,
//! chain map violation).

use std::fmt::Write as _;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::burnside::{
    from_marks, induce, restrict, BurnsideElement, BurnsideError, FixedPointMap, MarkVector, RationalBurnsideElement,
    TableOfMarks,
};
use crate::fuller::{fuller_sum, FullerError};
use crate::lefschetz::{hopf_lefschetz, lefschetz_from_orbits, LefschetzError};
use crate::rep::{equivariant_degree, RepError};
use crate::scene::{integer_vector, parse_fraction, Scene, SceneDocument};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format `{other}`")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BurnsideOp {
    Mul,
    Eta,
    Induce,
    Restrict,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LefschetzRoute {
    Orbits,
    Marks,
    Cellular,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    GroupInfo,
    Marks,
    Burnside(BurnsideOp),
    Degree,
    Lefschetz(LefschetzRoute),
    Fuller,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::GroupInfo => "group-info",
            Command::Marks => "marks",
            Command::Burnside(BurnsideOp::Mul) => "burnside mul",
            Command::Burnside(BurnsideOp::Eta) => "burnside eta",
            Command::Burnside(BurnsideOp::Induce) => "burnside induce",
            Command::Burnside(BurnsideOp::Restrict) => "burnside restrict",
            Command::Degree => "degree",
            Command::Lefschetz(LefschetzRoute::Orbits) => "lefschetz orbits",
            Command::Lefschetz(LefschetzRoute::Marks) => "lefschetz marks",
            Command::Lefschetz(LefschetzRoute::Cellular) => "lefschetz cellular",
            Command::Fuller => "fuller",
        }
    }
}

impl FromStr for Command {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let words: Vec<&str> = s.split_whitespace().collect();
        Ok(match words.as_slice() {
            ["group-info"] => Command::GroupInfo,
            ["marks"] => Command::Marks,
            ["burnside", "mul"] => Command::Burnside(BurnsideOp::Mul),
            ["burnside", "eta"] => Command::Burnside(BurnsideOp::Eta),
            ["burnside", "induce"] => Command::Burnside(BurnsideOp::Induce),
            ["burnside", "restrict"] => Command::Burnside(BurnsideOp::Restrict),
            ["degree"] => Command::Degree,
            ["lefschetz", "orbits"] => Command::Lefschetz(LefschetzRoute::Orbits),
            ["lefschetz", "marks"] => Command::Lefschetz(LefschetzRoute::Marks),
            ["lefschetz", "cellular"] => Command::Lefschetz(LefschetzRoute::Cellular),
            ["fuller"] => Command::Fuller,
            _ => return Err(format!("unknown command `{s}`")),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// unreadable, malformed or inconsistent input
    Input(String),
    /// a mathematical precondition failed
    Math(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Math(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Math(m) => m,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "input error: {m}"),
            CliError::Math(m) => write!(f, "precondition failed: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<BurnsideError> for CliError {
    fn from(e: BurnsideError) -> Self {
        match e {
            BurnsideError::NotInImage { .. } => CliError::Math(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<RepError> for CliError {
    fn from(e: RepError) -> Self {
        match e {
            RepError::SingularMap => CliError::Math(e.to_string()),
            RepError::Burnside(b) => b.into(),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<LefschetzError> for CliError {
    fn from(e: LefschetzError) -> Self {
        match e {
            LefschetzError::SingularMap { .. } | LefschetzError::ChainMapViolation(_) => CliError::Math(e.to_string()),
            LefschetzError::Rep(r) => r.into(),
            LefschetzError::Burnside(b) => b.into(),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<FullerError> for CliError {
    fn from(e: FullerError) -> Self {
        match e {
            FullerError::SingularMap { .. } => CliError::Math(e.to_string()),
            FullerError::Lefschetz(l) => l.into(),
            FullerError::Burnside(b) => b.into(),
            other => CliError::Input(other.to_string()),
        }
    }
}

/// Parses and resolves a scene, then runs `command` (or the scene's own
/// `command` field when `None`).
pub fn run(scene_text: &str, command: Option<Command>, format: Format, max_order: Option<usize>) -> Result<String, CliError> {
    let doc = SceneDocument::parse(scene_text).map_err(CliError::Input)?;
    let command = match command {
        Some(c) => c,
        None => doc
            .command
            .as_deref()
            .ok_or_else(|| CliError::Input("no command given and the scene has no `command` field".into()))?
            .parse()
            .map_err(CliError::Input)?,
    };
    let scene = Scene::resolve(doc, max_order).map_err(CliError::Input)?;
    execute(&scene, command, format)
}

pub fn execute(scene: &Scene, command: Command, format: Format) -> Result<String, CliError> {
    match command {
        Command::GroupInfo => Ok(group_info(&scene.table, format)),
        Command::Marks => Ok(marks_grid(&scene.table, format)),
        Command::Burnside(op) => burnside(scene, op, format),
        Command::Degree => degree(scene, format),
        Command::Lefschetz(route) => lefschetz(scene, route, format),
        Command::Fuller => fuller(scene, format),
    }
}

fn class_json(table: &TableOfMarks) -> Value {
    let g = table.group();
    Value::Array(
        table
            .classes()
            .iter()
            .enumerate()
            .map(|(j, h)| {
                let gens: Vec<Vec<usize>> = h.generators().iter().map(|&s| g.element(s).images().to_vec()).collect();
                json!({
                    "index": j,
                    "label": table.class_label(j),
                    "order": h.order(),
                    "weyl_order": table.weyl_order(j),
                    "generators": gens,
                })
            })
            .collect(),
    )
}

fn legend(table: &TableOfMarks) -> String {
    let parts: Vec<String> = (0..table.len())
        .map(|j| format!("{} = #{j} (order {})", table.class_label(j), table.classes().representative(j).order()))
        .collect();
    format!("classes: {}", parts.join(", "))
}

fn group_info(table: &TableOfMarks, format: Format) -> String {
    let g = table.group();
    match format {
        Format::Json => pretty(json!({
            "command": "group-info",
            "order": g.order(),
            "degree": g.degree(),
            "classes": class_json(table),
        })),
        Format::Text => {
            let mut out = String::new();
            let n = table.len();
            let points = if g.degree() == 1 { "point" } else { "points" };
            writeln!(out, "group of order {} on {} {points}", g.order(), g.degree()).unwrap();
            writeln!(out, "{n} {}", if n == 1 { "class" } else { "classes" }).unwrap();
            writeln!(out, "{:>5}  {:<6} {:>6} {:>6}  generators", "class", "label", "order", "weyl").unwrap();
            for (j, h) in table.classes().iter().enumerate() {
                let gens: Vec<String> = h.generators().iter().map(|&s| g.element(s).to_string()).collect();
                writeln!(
                    out,
                    "{:>5}  {:<6} {:>6} {:>6}  {}",
                    j,
                    table.class_label(j),
                    h.order(),
                    table.weyl_order(j),
                    if gens.is_empty() { "-".to_string() } else { gens.join(", ") }
                )
                .unwrap();
            }
            out
        }
    }
}

fn marks_grid(table: &TableOfMarks, format: Format) -> String {
    match format {
        Format::Json => pretty(json!({
            "command": "marks",
            "classes": class_json(table),
            "marks": table.rows(),
        })),
        Format::Text => {
            let width = table
                .rows()
                .iter()
                .flatten()
                .map(|m| m.to_string().len())
                .chain((0..table.len()).map(|j| table.class_label(j).len()))
                .max()
                .unwrap_or(1);
            let mut out = String::new();
            writeln!(out, "{}", legend(table)).unwrap();
            let header: Vec<String> = (0..table.len()).map(|j| format!("{:>width$}", table.class_label(j))).collect();
            writeln!(out, "{:>width$} | {}", "", header.join(" ")).unwrap();
            for (i, row) in table.rows().iter().enumerate() {
                let cells: Vec<String> = row.iter().map(|m| format!("{m:>width$}")).collect();
                writeln!(out, "{:>width$} | {}", table.class_label(i), cells.join(" ")).unwrap();
            }
            out
        }
    }
}

fn pretty(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn element_json(x: &BurnsideElement) -> Value {
    json!({
        "group_order": x.group().order(),
        "coeffs": x.coeffs().iter().map(BigInt::to_string).collect::<Vec<_>>(),
        "marks": x.marks().values().iter().map(BigInt::to_string).collect::<Vec<_>>(),
        "text": x.to_string(),
    })
}

fn rational_json(x: &RationalBurnsideElement) -> Value {
    json!({
        "group_order": x.table().group().order(),
        "coeffs": x.coeffs().iter().map(BigRational::to_string).collect::<Vec<_>>(),
        "marks": x.marks().iter().map(BigRational::to_string).collect::<Vec<_>>(),
        "text": x.to_string(),
    })
}

/// Reads back an element printed in JSON mode.
pub fn element_from_json(table: &Arc<TableOfMarks>, v: &Value) -> Result<BurnsideElement, CliError> {
    let coeffs = v["coeffs"]
        .as_array()
        .ok_or_else(|| CliError::Input("element has no `coeffs` array".into()))?
        .iter()
        .map(|c| {
            c.as_str()
                .and_then(|s| s.parse::<BigInt>().ok())
                .ok_or_else(|| CliError::Input(format!("bad coefficient {c}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(BurnsideElement::new(table, coeffs)?)
}

/// Reads back a rational element printed in JSON mode.
pub fn rational_from_json(table: &Arc<TableOfMarks>, v: &Value) -> Result<RationalBurnsideElement, CliError> {
    let coeffs = v["coeffs"]
        .as_array()
        .ok_or_else(|| CliError::Input("element has no `coeffs` array".into()))?
        .iter()
        .map(|c| {
            c.as_str()
                .ok_or_else(|| CliError::Input(format!("bad coefficient {c}")))
                .and_then(|s| parse_fraction(s).map_err(CliError::Input))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RationalBurnsideElement::new(table, coeffs)?)
}

fn element_output(command: Command, symbol: &str, x: &BurnsideElement, format: Format) -> String {
    match format {
        Format::Json => pretty(json!({
            "command": command.name(),
            "classes": class_json(x.table()),
            "result": element_json(x),
        })),
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "{}", legend(x.table())).unwrap();
            writeln!(out, "{symbol} = {x}").unwrap();
            writeln!(out, "marks = {}", x.marks()).unwrap();
            out
        }
    }
}

fn burnside(scene: &Scene, op: BurnsideOp, format: Format) -> Result<String, CliError> {
    let spec = scene
        .doc
        .burnside
        .as_ref()
        .ok_or_else(|| CliError::Input("scene has no `burnside` section".into()))?;
    let vector = |v: &Option<Vec<crate::scene::Number>>, field: &str| -> Result<Vec<BigInt>, CliError> {
        let v = v.as_ref().ok_or_else(|| CliError::Input(format!("burnside.{field} is required")))?;
        integer_vector(v, &format!("burnside.{field}")).map_err(CliError::Input)
    };
    let subgroup = || -> Result<_, CliError> {
        let name = spec
            .subgroup
            .as_ref()
            .ok_or_else(|| CliError::Input("burnside.subgroup is required".into()))?;
        scene.subgroup(name).map_err(CliError::Input)
    };
    let table = &scene.table;
    let command = Command::Burnside(op);
    let result = match op {
        BurnsideOp::Mul => {
            let x = BurnsideElement::new(table, vector(&spec.x, "x")?)?;
            let y = BurnsideElement::new(table, vector(&spec.y, "y")?)?;
            x.try_mul(&y)?
        }
        BurnsideOp::Eta => {
            let x = BurnsideElement::new(table, vector(&spec.x, "x")?)?;
            FixedPointMap::new(table, subgroup()?)?.apply(&x)?
        }
        BurnsideOp::Induce => {
            let h = subgroup()?;
            let th = TableOfMarks::new(&h.promote().group);
            let x = BurnsideElement::new(&th, vector(&spec.x, "x")?)?;
            induce(table, h, &x)?
        }
        BurnsideOp::Restrict => {
            let h = subgroup()?;
            let th = TableOfMarks::new(&h.promote().group);
            let x = BurnsideElement::new(table, vector(&spec.x, "x")?)?;
            restrict(&th, h, &x)?
        }
    };
    Ok(element_output(command, "result", &result, format))
}

fn degree(scene: &Scene, format: Format) -> Result<String, CliError> {
    let spec = scene
        .doc
        .degree
        .as_ref()
        .ok_or_else(|| CliError::Input("scene has no `degree` section".into()))?;
    let map = scene.map(&spec.map).map_err(CliError::Input)?;
    let table = TableOfMarks::new(map.rep().group());
    let deg = equivariant_degree(&table, &map)?;
    Ok(element_output(Command::Degree, "Deg", &deg, format))
}

fn lefschetz(scene: &Scene, route: LefschetzRoute, format: Format) -> Result<String, CliError> {
    let command = Command::Lefschetz(route);
    match route {
        LefschetzRoute::Orbits => {
            let data = scene.fixed_orbit_data().map_err(CliError::Input)?;
            let l = lefschetz_from_orbits(&scene.table, &data)?;
            Ok(element_output(command, "L_G(f)", &l, format))
        }
        LefschetzRoute::Marks => {
            let v = scene
                .doc
                .marks
                .as_ref()
                .ok_or_else(|| CliError::Input("scene has no `marks` vector".into()))?;
            let v = MarkVector::new(&scene.table, integer_vector(v, "marks").map_err(CliError::Input)?)?;
            let l = from_marks(&v)?;
            Ok(element_output(command, "L_G(f)", &l, format))
        }
        LefschetzRoute::Cellular => {
            let c = scene.chain_map().map_err(CliError::Input)?;
            let l = hopf_lefschetz(&c)?;
            Ok(match format {
                Format::Json => pretty(json!({ "command": command.name(), "lefschetz": l.to_string() })),
                Format::Text => format!("L(f) = {}\n", signed(&l)),
            })
        }
    }
}

fn signed(x: &BigInt) -> String {
    let s = x.to_string();
    match s.strip_prefix('-') {
        Some(rest) => format!("−{rest}"),
        None => s,
    }
}

fn fuller(scene: &Scene, format: Format) -> Result<String, CliError> {
    let data = scene.periodic_orbit_data().map_err(CliError::Input)?;
    let table = &scene.table;
    let f = fuller_sum(table, &data)?;
    let detect = table
        .classes()
        .iter()
        .map(|h| Ok(!FixedPointMap::new(table, h)?.apply_rational(&f)?.is_zero()))
        .collect::<Result<Vec<bool>, BurnsideError>>()?;
    Ok(match format {
        Format::Json => pretty(json!({
            "command": "fuller",
            "classes": class_json(table),
            "result": rational_json(&f),
            "detect": detect
                .iter()
                .enumerate()
                .map(|(j, d)| json!({ "class": j, "label": table.class_label(j), "detected": d }))
                .collect::<Vec<_>>(),
        })),
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "{}", legend(table)).unwrap();
            writeln!(out, "F_G = {f}").unwrap();
            let marks: Vec<String> = f.marks().iter().map(signed_fraction).collect();
            writeln!(out, "marks = ({})", marks.join(", ")).unwrap();
            for (j, d) in detect.iter().enumerate() {
                let verdict = if *d { "periodic orbit of type ≥ this class" } else { "no conclusion" };
                writeln!(out, "eta[{}] {}: {verdict}", table.class_label(j), if *d { "≠ 0" } else { "= 0" }).unwrap();
            }
            out
        }
    })
}

fn signed_fraction(x: &BigRational) -> String {
    let s = x.to_string();
    match s.strip_prefix('-') {
        Some(rest) => format!("−{rest}"),
        None => s,
    }
}
