//! JSON input files. Rationals are strings such as `"3"` or `"-1/2"`.
//!
//! ```json
//! {"basis": ["x", "y"], "convention": "left",
//!  "brackets": [{"left": "x", "right": "x", "value": {"y": "1"}}]}
//! ```

use std::collections::{BTreeMap, HashMap, HashSet};

use leibniz_core::exactla::{format_scalar, parse_scalar};
use leibniz_core::leibcore::{
    check_leibniz, check_representation, opposite, opposite_representation, QuotientData,
};
use leibniz_core::{
    Convention, LeibnizAlgebra, LieModule, Representation, Scalar, Tensor3, Violation,
};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("axioms fail: {}", .0.join("; "))]
    Axiom(Vec<String>),
}

/// `[left, right] = Σ value[name] · name`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    pub left: String,
    pub right: String,
    pub value: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub basis: Vec<String>,
    pub convention: String,
    #[serde(default)]
    pub brackets: Vec<Entry>,
}

/// `left_action` entries are `[x, m]` with `x` in the algebra, `right_action`
/// entries are `[m, x]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepresentationFile {
    pub basis: Vec<String>,
    #[serde(default)]
    pub left_action: Vec<Entry>,
    #[serde(default)]
    pub right_action: Vec<Entry>,
}

/// A module over the Lie quotient; `left` names a quotient basis vector,
/// either as `x~` or as the algebra element `x` it lifts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LieModuleFile {
    pub basis: Vec<String>,
    #[serde(default)]
    pub action: Vec<Entry>,
}

/// A parsed value together with notices for the report.
#[derive(Clone, Debug)]
pub struct Parsed<T> {
    pub value: T,
    pub notices: Vec<String>,
}

struct Names<'a> {
    what: &'a str,
    index: HashMap<&'a str, usize>,
}

impl<'a> Names<'a> {
    fn new(what: &'a str, names: &'a [String]) -> Result<Self, FormatError> {
        let mut index = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() {
                return Err(FormatError::Parse(format!("empty {what} name")));
            }
            if index.insert(n.as_str(), i).is_some() {
                return Err(FormatError::Parse(format!("duplicate {what} name {n:?}")));
            }
        }
        Ok(Names { what, index })
    }

    fn get(&self, n: &str) -> Result<usize, FormatError> {
        self.index
            .get(n)
            .copied()
            .ok_or_else(|| FormatError::Parse(format!("unknown {} name {n:?}", self.what)))
    }
}

fn fill(
    t: &mut Tensor3,
    entries: &[Entry],
    left: &Names,
    right: &Names,
    out: &Names,
) -> Result<(), FormatError> {
    let mut seen = HashSet::new();
    for e in entries {
        let (i, j) = (left.get(&e.left)?, right.get(&e.right)?);
        if !seen.insert((i, j)) {
            return Err(FormatError::Parse(format!(
                "[{}, {}] given twice",
                e.left, e.right
            )));
        }
        for (name, v) in &e.value {
            let k = out.get(name)?;
            let x = parse_scalar(v).map_err(|err| FormatError::Parse(err.to_string()))?;
            t.set(i, j, k, x);
        }
    }
    Ok(())
}

fn json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, FormatError> {
    serde_json::from_str(text).map_err(|e| FormatError::Parse(e.to_string()))
}

fn describe(g: &LeibnizAlgebra, v: &Violation) -> String {
    let names: Vec<&str> = v
        .indices
        .iter()
        .map(|&i| g.basis_names[i].as_str())
        .collect();
    format!("{} fails at ({})", v.rule.name(), names.join(", "))
}

/// Parses and validates an algebra; right-convention input is replaced by its
/// opposite.
pub fn parse_algebra(text: &str) -> Result<Parsed<LeibnizAlgebra>, FormatError> {
    let file: AlgebraFile = json(text)?;
    let convention = match file.convention.as_str() {
        "left" => Convention::Left,
        "right" => Convention::Right,
        other => {
            return Err(FormatError::Parse(format!(
                "convention must be \"left\" or \"right\", got {other:?}"
            )))
        }
    };
    let names = Names::new("basis", &file.basis)?;
    let n = file.basis.len();
    if n == 0 {
        return Err(FormatError::Parse("empty basis".into()));
    }
    let mut t = Tensor3::zeros(n, n, n);
    fill(&mut t, &file.brackets, &names, &names, &names)?;
    let g = LeibnizAlgebra::new(file.basis.clone(), t, convention);
    let violations = check_leibniz(&g);
    if !violations.is_empty() {
        return Err(FormatError::Axiom(
            violations.iter().map(|v| describe(&g, v)).collect(),
        ));
    }
    let mut notices = vec![];
    let value = match convention {
        Convention::Left => g,
        Convention::Right => {
            notices.push(
                "right Leibniz input replaced by its opposite left Leibniz algebra".to_string(),
            );
            opposite(&g)
        }
    };
    Ok(Parsed { value, notices })
}

/// Parses a representation of `g`. `was_right` says the algebra file used the
/// right convention, in which case the actions are converted along with it.
pub fn parse_representation(
    text: &str,
    g: &LeibnizAlgebra,
    was_right: bool,
) -> Result<Parsed<Representation>, FormatError> {
    let file: RepresentationFile = json(text)?;
    let gnames = Names::new("algebra", &g.basis_names)?;
    let mnames = Names::new("module", &file.basis)?;
    let (n, d) = (g.dim(), file.basis.len());
    let mut left = Tensor3::zeros(n, d, d);
    fill(&mut left, &file.left_action, &gnames, &mnames, &mnames)?;
    let mut right = Tensor3::zeros(d, n, d);
    fill(&mut right, &file.right_action, &mnames, &gnames, &mnames)?;
    let mut m = Representation {
        basis_names: file.basis,
        left_action: left,
        right_action: right,
    };
    let mut notices = vec![];
    if was_right {
        m = opposite_representation(&m);
        notices.push("representation converted along with the opposite algebra".to_string());
    }
    let violations = check_representation(g, &m);
    if !violations.is_empty() {
        return Err(FormatError::Axiom(
            violations.iter().map(ToString::to_string).collect(),
        ));
    }
    Ok(Parsed { value: m, notices })
}

pub fn parse_lie_module(
    text: &str,
    g: &LeibnizAlgebra,
    q: &QuotientData,
) -> Result<Parsed<LieModule>, FormatError> {
    let file: LieModuleFile = json(text)?;
    let mut aliases: Vec<(String, usize)> =
        q.quotient.basis_names.iter().cloned().zip(0..).collect();
    aliases.extend(
        q.lift
            .iter()
            .enumerate()
            .map(|(a, &i)| (g.basis_names[i].clone(), a)),
    );
    let mnames = Names::new("module", &file.basis)?;
    let d = file.basis.len();
    let mut action = Tensor3::zeros(q.dim(), d, d);
    let mut seen = HashSet::new();
    for e in &file.action {
        let a = aliases
            .iter()
            .find(|(n, _)| *n == e.left)
            .map(|(_, a)| *a)
            .ok_or_else(|| FormatError::Parse(format!("unknown quotient name {:?}", e.left)))?;
        let j = mnames.get(&e.right)?;
        if !seen.insert((a, j)) {
            return Err(FormatError::Parse(format!(
                "action of {} on {} given twice",
                e.left, e.right
            )));
        }
        for (name, v) in &e.value {
            let k = mnames.get(name)?;
            action.set(
                a,
                j,
                k,
                parse_scalar(v).map_err(|err| FormatError::Parse(err.to_string()))?,
            );
        }
    }
    let m = LieModule {
        basis_names: file.basis,
        action,
    };
    let violations = m.check(&q.quotient);
    if !violations.is_empty() {
        return Err(FormatError::Axiom(
            violations.iter().map(ToString::to_string).collect(),
        ));
    }
    Ok(Parsed {
        value: m,
        notices: vec![],
    })
}

fn entries(t: &Tensor3, left: &[String], right: &[String], out: &[String]) -> Vec<Entry> {
    let mut v = vec![];
    for (i, l) in left.iter().enumerate() {
        for (j, r) in right.iter().enumerate() {
            let value: BTreeMap<String, String> = t
                .vec(i, j)
                .iter()
                .zip(out)
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, name)| (name.clone(), format_scalar(c)))
                .collect();
            if !value.is_empty() {
                v.push(Entry {
                    left: l.clone(),
                    right: r.clone(),
                    value,
                });
            }
        }
    }
    v
}

pub fn algebra_file(g: &LeibnizAlgebra) -> AlgebraFile {
    AlgebraFile {
        basis: g.basis_names.clone(),
        convention: g.convention.as_str().into(),
        brackets: entries(&g.structure, &g.basis_names, &g.basis_names, &g.basis_names),
    }
}

pub fn lie_entries(names: &[String], structure: &Tensor3) -> Vec<Entry> {
    entries(structure, names, names, names)
}

pub fn scalar_strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(format_scalar).collect()
}
