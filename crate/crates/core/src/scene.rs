//! Scene documents: JSON descriptions of a group, named subgroups,
//! representations and maps, and the local data consumed by the commands.
//!
//! Exact numbers are written as strings (`"3"`, `"-1/2"`); plain JSON
//! integers are accepted as well.
//!
//! ```json
//! {
//!   "group": { "degree": 2, "generators": [[1, 0]] },
//!   "subgroups": { "C2": { "generators": [[1, 0]] }, "e": { "generators": [] } },
//!   "representations": {
//!     "sign": { "over": "C2", "dimension": 1, "generators": [[["-1"]]] },
//!     "line": { "over": "e", "dimension": 1, "generators": [] }
//!   },
//!   "maps": {
//!     "N0": { "representation": "sign", "matrix": [["0"]] },
//!     "N1": { "representation": "line", "matrix": [["3"]] }
//!   },
//!   "fixed_orbits": [
//!     { "isotropy": "C2", "normal_derivative": "N0" },
//!     { "isotropy": "e", "normal_derivative": "N1" }
//!   ],
//!   "command": "lefschetz orbits"
//! }
//! ```

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::burnside::TableOfMarks;
use crate::fuller::PeriodicOrbitDatum;
use crate::group::{FiniteGroup, Subgroup, DEFAULT_ORDER_CAP};
use crate::lefschetz::{ChainMapData, FixedOrbitDatum};
use crate::linalg::{QMatrix, ZMatrix};
use crate::perm::Permutation;
use crate::rep::{rep_from_generators, rep_from_images, restrict_rep, EquivariantLinearMap, RationalRepresentation};

/// A JSON number or a numeric string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Number {
    Int(i64),
    Text(String),
}

impl Number {
    pub fn to_integer(&self) -> Result<BigInt, String> {
        match self {
            Number::Int(i) => Ok(BigInt::from(*i)),
            Number::Text(s) => s.trim().parse().map_err(|_| format!("`{s}` is not an integer")),
        }
    }

    pub fn to_rational(&self) -> Result<BigRational, String> {
        match self {
            Number::Int(i) => Ok(BigRational::from_integer(BigInt::from(*i))),
            Number::Text(s) => parse_fraction(s),
        }
    }
}

/// Parses `"p"` or `"p/q"` exactly.
pub fn parse_fraction(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| format!("`{s}` is not an exact fraction"))?;
    let den: BigInt = den.parse().map_err(|_| format!("`{s}` is not an exact fraction"))?;
    if den.is_zero() {
        return Err(format!("`{s}` has a zero denominator"));
    }
    Ok(BigRational::new(num, den))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    pub degree: usize,
    #[serde(default)]
    pub generators: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubgroupSpec {
    #[serde(default)]
    pub generators: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepresentationSpec {
    /// Named subgroup the representation lives over; the whole group if absent.
    #[serde(default)]
    pub over: Option<String>,
    pub dimension: usize,
    /// One matrix per generator of `over` (or of the group), in declared order.
    #[serde(default)]
    pub generators: Vec<Vec<Vec<Number>>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapSpec {
    pub representation: String,
    pub matrix: Vec<Vec<Number>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FixedOrbitSpec {
    pub isotropy: String,
    pub normal_derivative: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PeriodicOrbitSpec {
    pub isotropy: String,
    pub poincare: String,
    pub multiplicity: u32,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChainMapSpec {
    pub maps: Vec<Vec<Vec<Number>>>,
    #[serde(default)]
    pub boundaries: Option<Vec<Vec<Vec<Number>>>>,
    /// Cell count per dimension; needed only for empty chain groups, whose
    /// matrices cannot carry their size.
    #[serde(default)]
    pub cells: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BurnsideSpec {
    #[serde(default)]
    pub x: Option<Vec<Number>>,
    #[serde(default)]
    pub y: Option<Vec<Number>>,
    #[serde(default)]
    pub subgroup: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DegreeSpec {
    pub map: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SceneDocument {
    pub group: GroupSpec,
    #[serde(default)]
    pub max_order: Option<usize>,
    #[serde(default)]
    pub command: Option<String>,
    #[serde(default)]
    pub subgroups: BTreeMap<String, SubgroupSpec>,
    #[serde(default)]
    pub representations: BTreeMap<String, RepresentationSpec>,
    #[serde(default)]
    pub maps: BTreeMap<String, MapSpec>,
    #[serde(default)]
    pub fixed_orbits: Vec<FixedOrbitSpec>,
    #[serde(default)]
    pub periodic_orbits: Vec<PeriodicOrbitSpec>,
    #[serde(default)]
    pub marks: Option<Vec<Number>>,
    #[serde(default)]
    pub chain_map: Option<ChainMapSpec>,
    #[serde(default)]
    pub burnside: Option<BurnsideSpec>,
    #[serde(default)]
    pub degree: Option<DegreeSpec>,
}

impl SceneDocument {
    /// Parses JSON, reporting the failing field path and line.
    pub fn parse(text: &str) -> Result<Self, String> {
        let de = &mut serde_json::Deserializer::from_str(text);
        serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            let inner = e.into_inner();
            format!("at `{path}` (line {}, column {}): {inner}", inner.line(), inner.column())
        })
    }
}

/// A scene with every name resolved.
pub struct Scene {
    pub doc: SceneDocument,
    pub group: Arc<FiniteGroup>,
    pub table: Arc<TableOfMarks>,
    pub subgroups: BTreeMap<String, Subgroup>,
    reps: BTreeMap<String, (Option<String>, RationalRepresentation)>,
}

fn permutation(degree: usize, images: &[usize], field: &str) -> Result<Permutation, String> {
    if images.len() != degree {
        return Err(format!("{field}: expected {degree} images, found {}", images.len()));
    }
    Permutation::new(images.to_vec()).map_err(|e| format!("{field}: {e}"))
}

fn rational_matrix(rows: &[Vec<Number>], field: &str) -> Result<QMatrix, String> {
    let rows = rows
        .iter()
        .map(|r| r.iter().map(Number::to_rational).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| format!("{field}: {e}"))?;
    QMatrix::from_rows(rows).ok_or_else(|| format!("{field}: rows have different lengths"))
}

fn integer_matrix(rows: &[Vec<Number>], field: &str) -> Result<ZMatrix, String> {
    let rows = rows
        .iter()
        .map(|r| r.iter().map(Number::to_integer).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| format!("{field}: {e}"))?;
    ZMatrix::from_rows(rows).ok_or_else(|| format!("{field}: rows have different lengths"))
}

pub fn integer_vector(v: &[Number], field: &str) -> Result<Vec<BigInt>, String> {
    v.iter()
        .map(Number::to_integer)
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| format!("{field}: {e}"))
}

impl Scene {
    /// Resolves the group (with the given order cap) and all named objects.
    pub fn resolve(doc: SceneDocument, max_order: Option<usize>) -> Result<Self, String> {
        let cap = max_order.or(doc.max_order).unwrap_or(DEFAULT_ORDER_CAP);
        let degree = doc.group.degree;
        let gens = doc
            .group
            .generators
            .iter()
            .enumerate()
            .map(|(i, g)| permutation(degree, g, &format!("group.generators[{i}]")))
            .collect::<Result<Vec<_>, _>>()?;
        let group = FiniteGroup::generate_with_cap(degree, gens, cap).map_err(|e| format!("group: {e}"))?;
        let table = TableOfMarks::new(&group);

        let mut subgroups = BTreeMap::new();
        for (name, spec) in &doc.subgroups {
            let gens = spec
                .generators
                .iter()
                .enumerate()
                .map(|(i, g)| permutation(degree, g, &format!("subgroups.{name}.generators[{i}]")))
                .collect::<Result<Vec<_>, _>>()?;
            let h = Subgroup::from_permutations(&group, &gens).map_err(|e| format!("subgroups.{name}: {e}"))?;
            subgroups.insert(name.clone(), h);
        }

        let mut scene = Scene {
            doc,
            group,
            table,
            subgroups,
            reps: BTreeMap::new(),
        };
        let specs = scene.doc.representations.clone();
        for (name, spec) in &specs {
            let field = format!("representations.{name}");
            let matrices = spec
                .generators
                .iter()
                .enumerate()
                .map(|(i, m)| rational_matrix(m, &format!("{field}.generators[{i}]")))
                .collect::<Result<Vec<_>, _>>()?;
            let rep = match &spec.over {
                None => rep_from_generators(&scene.group, spec.dimension, matrices),
                Some(over) => {
                    let s = scene.subgroup(over).map_err(|e| format!("{field}.over: {e}"))?;
                    let promoted = s.promote();
                    let declared = &scene.doc.subgroups[over].generators;
                    if declared.len() != matrices.len() {
                        return Err(format!(
                            "{field}: subgroup `{over}` has {} generators but {} matrices were given",
                            declared.len(),
                            matrices.len()
                        ));
                    }
                    let pairs: Vec<(usize, QMatrix)> = declared
                        .iter()
                        .zip(matrices)
                        .map(|(g, m)| {
                            let p = Permutation::new(g.clone()).expect("validated above");
                            let idx = scene.group.index_of(&p).expect("validated above");
                            (promoted.from_parent[&idx], m)
                        })
                        .collect();
                    rep_from_images(&promoted.group, spec.dimension, &pairs)
                }
            }
            .map_err(|e| format!("{field}: {e}"))?;
            scene.reps.insert(name.clone(), (spec.over.clone(), rep));
        }
        for (name, spec) in &scene.doc.maps {
            if !scene.reps.contains_key(&spec.representation) {
                return Err(format!("maps.{name}: unknown representation `{}`", spec.representation));
            }
        }
        Ok(scene)
    }

    pub fn subgroup(&self, name: &str) -> Result<&Subgroup, String> {
        self.subgroups.get(name).ok_or_else(|| format!("unknown subgroup `{name}`"))
    }

    pub fn representation(&self, name: &str) -> Result<&RationalRepresentation, String> {
        self.reps
            .get(name)
            .map(|(_, r)| r)
            .ok_or_else(|| format!("unknown representation `{name}`"))
    }

    /// A named map over its own representation.
    pub fn map(&self, name: &str) -> Result<EquivariantLinearMap, String> {
        let spec = self.doc.maps.get(name).ok_or_else(|| format!("unknown map `{name}`"))?;
        let rep = self.representation(&spec.representation)?;
        let m = rational_matrix(&spec.matrix, &format!("maps.{name}.matrix"))?;
        EquivariantLinearMap::new(rep, m).map_err(|e| format!("maps.{name}: {e}"))
    }

    /// A named map, restricted to the slice representation of `isotropy`.
    ///
    /// The map's representation may live over the isotropy group itself or
    /// over any named subgroup (or the whole group) containing it.
    pub fn map_over(&self, name: &str, isotropy: &Subgroup) -> Result<EquivariantLinearMap, String> {
        let spec = self.doc.maps.get(name).ok_or_else(|| format!("unknown map `{name}`"))?;
        let (over, rep) = self
            .reps
            .get(&spec.representation)
            .ok_or_else(|| format!("unknown representation `{}`", spec.representation))?;
        let restricted = match over {
            None => restrict_rep(rep, isotropy).map_err(|e| e.to_string())?,
            Some(over) => {
                let s = self.subgroup(over)?;
                if !isotropy.is_subgroup_of(s) {
                    return Err(format!(
                        "map `{name}` lives over `{over}`, which does not contain the isotropy group"
                    ));
                }
                let promoted = s.promote();
                let k = promoted.subgroup_from_parent(isotropy).map_err(|e| e.to_string())?;
                restrict_rep(rep, &k).map_err(|e| e.to_string())?
            }
        };
        let m = rational_matrix(&spec.matrix, &format!("maps.{name}.matrix"))?;
        EquivariantLinearMap::new(&restricted, m).map_err(|e| format!("maps.{name}: {e}"))
    }

    pub fn fixed_orbit_data(&self) -> Result<Vec<FixedOrbitDatum>, String> {
        self.doc
            .fixed_orbits
            .iter()
            .enumerate()
            .map(|(i, o)| {
                let h = self.subgroup(&o.isotropy).map_err(|e| format!("fixed_orbits[{i}]: {e}"))?;
                let n = self
                    .map_over(&o.normal_derivative, h)
                    .map_err(|e| format!("fixed_orbits[{i}]: {e}"))?;
                FixedOrbitDatum::new(h.clone(), n).map_err(|e| format!("fixed_orbits[{i}]: {e}"))
            })
            .collect()
    }

    pub fn periodic_orbit_data(&self) -> Result<Vec<PeriodicOrbitDatum>, String> {
        self.doc
            .periodic_orbits
            .iter()
            .enumerate()
            .map(|(i, o)| {
                let h = self.subgroup(&o.isotropy).map_err(|e| format!("periodic_orbits[{i}]: {e}"))?;
                let p = self.map_over(&o.poincare, h).map_err(|e| format!("periodic_orbits[{i}]: {e}"))?;
                PeriodicOrbitDatum::new(h.clone(), p, o.multiplicity).map_err(|e| format!("periodic_orbits[{i}]: {e}"))
            })
            .collect()
    }

    pub fn chain_map(&self) -> Result<ChainMapData, String> {
        let spec = self.doc.chain_map.as_ref().ok_or("scene has no `chain_map`")?;
        let sized = |rows: &[Vec<Number>], r: usize, c: usize, field: &str| -> Result<ZMatrix, String> {
            if rows.is_empty() {
                Ok(ZMatrix::zeros(r, c))
            } else {
                integer_matrix(rows, field)
            }
        };
        let cells = spec.cells.clone().unwrap_or_else(|| spec.maps.iter().map(Vec::len).collect());
        if cells.len() != spec.maps.len() {
            return Err("chain_map.cells: one count per dimension is required".into());
        }
        let maps = spec
            .maps
            .iter()
            .enumerate()
            .map(|(k, m)| sized(m, cells[k], cells[k], &format!("chain_map.maps[{k}]")))
            .collect::<Result<Vec<_>, _>>()?;
        let boundaries = match &spec.boundaries {
            None => None,
            Some(bs) => Some(
                bs.iter()
                    .enumerate()
                    .map(|(i, b)| {
                        let k = i + 1;
                        let r = cells.get(k - 1).copied().unwrap_or(0);
                        let c = cells.get(k).copied().unwrap_or(0);
                        sized(b, r, c, &format!("chain_map.boundaries[{i}]"))
                    })
                    .collect::<Result<Vec<_>, _>>()?,
            ),
        };
        Ok(ChainMapData::new(maps, boundaries))
    }
}
