//! JSON input formats.
//!
//! Every rational is a string, either `"p/q"` or an integer. Matrices are
//! lists of `[row, col, "value"]` triplets. Parsing happens in two passes:
//! serde checks the shape of the document (errors carry line and column),
//! then the raw records are converted with errors that name the offending
//! field.

use std::fs;
use std::path::Path;

use hcdim_core::hochschild::{Bimodule, FiniteDimAlgebra};
use hcdim_core::lie::{GModule, LieAlgebra};
use hcdim_core::ncalg::{NcPolynomial, Presentation, Word};
use hcdim_core::{parse_rational, Rational, SparseMatrix};
use serde::{Deserialize, Serialize};

use crate::Error;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub coeff: String,
    pub word: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationJson {
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationJson {
    pub generators: Vec<String>,
    pub relations: Vec<RelationJson>,
}

pub type Triplet = (usize, usize, String);

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleJson {
    pub dimension: usize,
    /// One triplet list per Lie algebra basis element.
    pub actions: Vec<Vec<Triplet>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LieJson {
    /// `structure_constants[i][j][k]` is the coefficient of `e_k` in `[e_i, e_j]`.
    pub structure_constants: Vec<Vec<Vec<String>>>,
    /// Defaults to the one-dimensional trivial module.
    #[serde(default)]
    pub module: Option<ModuleJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BimoduleJson {
    pub dimension: usize,
    pub left: Vec<Vec<Triplet>>,
    pub right: Vec<Vec<Triplet>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraJson {
    pub dimension: usize,
    pub unit: Vec<String>,
    /// `[i, j, k, "c"]`: `e_i e_j` has coefficient `c` on `e_k`.
    pub multiplication: Vec<(usize, usize, usize, String)>,
    /// Defaults to the algebra over itself.
    #[serde(default)]
    pub bimodule: Option<BimoduleJson>,
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, Error> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|e| Error::Json {
        path: path.display().to_string(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

fn rational(field: impl Fn() -> String, s: &str) -> Result<Rational, Error> {
    parse_rational(s).map_err(|e| Error::Field {
        field: field(),
        message: e.to_string(),
    })
}

fn matrix(field: &str, n: usize, triplets: &[Triplet]) -> Result<SparseMatrix, Error> {
    let entries = triplets
        .iter()
        .enumerate()
        .map(|(t, (r, c, v))| Ok((*r, *c, rational(|| format!("{field}[{t}]"), v)?)))
        .collect::<Result<Vec<_>, Error>>()?;
    SparseMatrix::from_triplets(n, n, entries).map_err(|e| Error::Field {
        field: field.to_string(),
        message: e.to_string(),
    })
}

impl PresentationJson {
    pub fn to_presentation(&self) -> Result<Presentation, Error> {
        let relations = self
            .relations
            .iter()
            .enumerate()
            .map(|(r, rel)| {
                let mut p = NcPolynomial::zero();
                for (t, term) in rel.terms.iter().enumerate() {
                    let c = rational(|| format!("relations[{r}].terms[{t}].coeff"), &term.coeff)?;
                    let letters = term
                        .word
                        .iter()
                        .map(|name| {
                            self.generators
                                .iter()
                                .position(|g| g == name)
                                .ok_or_else(|| Error::Field {
                                    field: format!("relations[{r}].terms[{t}].word"),
                                    message: format!("unknown generator {name:?}"),
                                })
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    p.add_term(Word::new(letters), c);
                }
                Ok(p)
            })
            .collect::<Result<Vec<_>, Error>>()?;
        Ok(Presentation::new(self.generators.clone(), relations)?)
    }

    pub fn from_presentation(p: &Presentation) -> Self {
        let names = p.generators();
        PresentationJson {
            generators: names.to_vec(),
            relations: p
                .relations()
                .iter()
                .map(|rel| RelationJson {
                    terms: rel
                        .terms()
                        .map(|(w, c)| TermJson {
                            coeff: c.to_string(),
                            word: w.letters().iter().map(|&g| names[g].clone()).collect(),
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

impl ModuleJson {
    pub fn to_module(&self, g: &LieAlgebra) -> Result<GModule, Error> {
        let actions = self
            .actions
            .iter()
            .enumerate()
            .map(|(i, a)| matrix(&format!("actions[{i}]"), self.dimension, a))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(GModule::new(g, self.dimension, actions)?)
    }
}

impl LieJson {
    pub fn to_lie_algebra(&self) -> Result<LieAlgebra, Error> {
        let structure = self
            .structure_constants
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, v)| {
                        v.iter()
                            .enumerate()
                            .map(|(k, s)| rational(|| format!("structure_constants[{i}][{j}][{k}]"), s))
                            .collect::<Result<Vec<_>, _>>()
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(LieAlgebra::new(structure)?)
    }

    pub fn to_module(&self, g: &LieAlgebra) -> Result<GModule, Error> {
        match &self.module {
            Some(m) => m.to_module(g),
            None => Ok(GModule::trivial(g, 1)),
        }
    }
}

impl AlgebraJson {
    pub fn to_algebra(&self) -> Result<FiniteDimAlgebra, Error> {
        let unit = self
            .unit
            .iter()
            .enumerate()
            .map(|(i, s)| rational(|| format!("unit[{i}]"), s))
            .collect::<Result<Vec<_>, _>>()?;
        let entries = self
            .multiplication
            .iter()
            .enumerate()
            .map(|(t, (i, j, k, v))| Ok((*i, *j, *k, rational(|| format!("multiplication[{t}]"), v)?)))
            .collect::<Result<Vec<_>, Error>>()?;
        Ok(FiniteDimAlgebra::from_quadruples(self.dimension, entries, unit)?)
    }

    pub fn to_bimodule(&self, alg: &FiniteDimAlgebra) -> Result<Bimodule, Error> {
        let Some(b) = &self.bimodule else {
            return Ok(Bimodule::regular(alg));
        };
        let side = |name: &str, mats: &[Vec<Triplet>]| {
            mats.iter()
                .enumerate()
                .map(|(i, a)| matrix(&format!("bimodule.{name}[{i}]"), b.dimension, a))
                .collect::<Result<Vec<_>, _>>()
        };
        Ok(Bimodule::new(
            alg,
            b.dimension,
            side("left", &b.left)?,
            side("right", &b.right)?,
        )?)
    }
}

pub fn parse_presentation(path: &Path) -> Result<Presentation, Error> {
    read_json::<PresentationJson>(path)?.to_presentation()
}

pub fn parse_lie(path: &Path) -> Result<(LieAlgebra, GModule), Error> {
    let raw: LieJson = read_json(path)?;
    let g = raw.to_lie_algebra()?;
    let m = raw.to_module(&g)?;
    Ok((g, m))
}

pub fn parse_module(path: &Path, g: &LieAlgebra) -> Result<GModule, Error> {
    read_json::<ModuleJson>(path)?.to_module(g)
}

pub fn parse_algebra(path: &Path) -> Result<(FiniteDimAlgebra, Bimodule), Error> {
    let raw: AlgebraJson = read_json(path)?;
    let alg = raw.to_algebra()?;
    let m = raw.to_bimodule(&alg)?;
    Ok((alg, m))
}
