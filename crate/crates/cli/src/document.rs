//! The JSON algebra format:
//!
//! ```json
//! {"p": 3, "even": ["x"], "odd": ["y"], "bracket": {"y,y": {"x": 2}}, "pmap": {"x": {}}}
//! ```
//!
//! `bracket` keys are comma-joined basis names. When only one of `"a,b"` and `"b,a"` is
//! given, the other is filled in by super-antisymmetry; when both are given they are stored
//! as written and `check` reports any inconsistency. Coefficients are integers reduced mod
//! `p`. Omitted entries are zero.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{Map, Value};
use superu_core::linalg::Field;
use superu_core::liesuper::LieSuperAlgebraSpec;

const TOP_KEYS: [&str; 5] = ["p", "even", "odd", "bracket", "pmap"];

/// Schema violation located by a JSON pointer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DocumentError {
    pub pointer: String,
    pub message: String,
}

impl fmt::Display for DocumentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let at = if self.pointer.is_empty() { "/" } else { &self.pointer };
        write!(f, "{at}: {}", self.message)
    }
}

impl std::error::Error for DocumentError {}

fn err(pointer: impl Into<String>, message: impl Into<String>) -> DocumentError {
    DocumentError { pointer: pointer.into(), message: message.into() }
}

/// RFC 6901 escaping of one reference token.
pub fn escape_token(token: &str) -> String {
    token.replace('~', "~0").replace('/', "~1")
}

fn child(pointer: &str, token: &str) -> String {
    format!("{pointer}/{}", escape_token(token))
}

/// A parsed algebra definition with coefficients already reduced mod `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraDocument {
    pub p: u32,
    pub even: Vec<String>,
    pub odd: Vec<String>,
    /// `(left, right) → {name: coefficient}`, as written in the file.
    pub bracket: BTreeMap<(String, String), BTreeMap<String, u32>>,
    pub pmap: BTreeMap<String, BTreeMap<String, u32>>,
}

impl AlgebraDocument {
    pub fn parse(text: &str) -> Result<AlgebraDocument, DocumentError> {
        let value: Value = serde_json::from_str(text).map_err(|e| err("", format!("not valid JSON: {e}")))?;
        Self::from_value(&value)
    }

    pub fn from_value(value: &Value) -> Result<AlgebraDocument, DocumentError> {
        let root = value.as_object().ok_or_else(|| err("", "expected a JSON object"))?;
        for key in root.keys() {
            if !TOP_KEYS.contains(&key.as_str()) {
                return Err(err(child("", key), format!("unknown key (allowed: {})", TOP_KEYS.join(", "))));
            }
        }
        let p = match root.get("p") {
            None => return Err(err("/p", "missing required key")),
            Some(v) => v.as_u64().ok_or_else(|| err("/p", "expected a non-negative integer"))?,
        };
        let p = u32::try_from(p).map_err(|_| err("/p", "characteristic is too large"))?;
        let field = Field::prime(p).map_err(|e| err("/p", e.to_string()))?;

        let even = name_list(root, "even")?;
        let odd = name_list(root, "odd")?;
        let mut seen = BTreeMap::new();
        for (list, key) in [(&even, "even"), (&odd, "odd")] {
            for (i, name) in list.iter().enumerate() {
                let ptr = format!("/{key}/{i}");
                if name.is_empty() {
                    return Err(err(ptr, "basis names must be non-empty"));
                }
                if name.contains(',') {
                    return Err(err(ptr, "basis names may not contain a comma"));
                }
                if let Some(prev) = seen.insert(name.clone(), ptr.clone()) {
                    return Err(err(ptr, format!("duplicate basis name `{name}` (first at {prev})")));
                }
            }
        }
        let is_even = |n: &str| even.iter().any(|e| e == n);

        let mut bracket = BTreeMap::new();
        if let Some(v) = root.get("bracket") {
            let obj = v.as_object().ok_or_else(|| err("/bracket", "expected an object"))?;
            for (key, coeffs) in obj {
                let ptr = child("/bracket", key);
                let (a, b) = key
                    .split_once(',')
                    .ok_or_else(|| err(&ptr, "bracket keys have the form \"a,b\""))?;
                for n in [a, b] {
                    if !seen.contains_key(n) {
                        return Err(err(&ptr, format!("unknown basis name `{n}`")));
                    }
                }
                let combo = combination(coeffs, &ptr, &seen, &field)?;
                bracket.insert((a.to_string(), b.to_string()), combo);
            }
        }

        let mut pmap = BTreeMap::new();
        if let Some(v) = root.get("pmap") {
            let obj = v.as_object().ok_or_else(|| err("/pmap", "expected an object"))?;
            for (key, coeffs) in obj {
                let ptr = child("/pmap", key);
                if !seen.contains_key(key.as_str()) {
                    return Err(err(&ptr, format!("unknown basis name `{key}`")));
                }
                if !is_even(key) {
                    return Err(err(&ptr, "the p-map is defined on even basis elements only"));
                }
                pmap.insert(key.clone(), combination(coeffs, &ptr, &seen, &field)?);
            }
        }
        Ok(AlgebraDocument { p, even, odd, bracket, pmap })
    }

    /// Builds the `LieSuperAlgebraSpec`, filling in missing bracket partners by super-antisymmetry.
    pub fn to_spec(&self) -> Result<LieSuperAlgebraSpec, DocumentError> {
        let mut spec = LieSuperAlgebraSpec::new(self.p, self.even.clone(), self.odd.clone())
            .map_err(|e| err("", e.to_string()))?;
        let d = spec.dim();
        let vector = |combo: &BTreeMap<String, u32>, spec: &LieSuperAlgebraSpec| {
            let mut v = vec![0u32; d];
            for (name, &c) in combo {
                v[spec.index_of(name).expect("names validated on parse")] = c;
            }
            v
        };
        for ((a, b), combo) in &self.bracket {
            let (i, j) = (spec.index_of(a).unwrap(), spec.index_of(b).unwrap());
            let v = vector(combo, &spec);
            let partner = (b.clone(), a.clone());
            if i == j || self.bracket.contains_key(&partner) {
                spec.set_bracket(i, j, v);
            } else {
                spec.set_bracket_antisymmetric(i, j, v);
            }
        }
        for (x, combo) in &self.pmap {
            let i = spec.index_of(x).unwrap();
            spec.set_pmap(i, vector(combo, &spec));
        }
        Ok(spec)
    }

    /// Canonical document for a spec: one bracket key per unordered pair (plus the reversed
    /// key only where it differs from the antisymmetric partner), nonzero coefficients only.
    pub fn from_spec(spec: &LieSuperAlgebraSpec) -> AlgebraDocument {
        let f = spec.field();
        let d = spec.dim();
        let combo = |v: &[u32]| -> BTreeMap<String, u32> {
            v.iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(k, &c)| (spec.name(k).to_string(), c))
                .collect()
        };
        let mut bracket = BTreeMap::new();
        for i in 0..d {
            for j in i..d {
                let v = spec.bracket_basis(i, j);
                let w = spec.bracket_basis(j, i);
                let flip = !spec.parity(i).koszul(spec.parity(j));
                let forced: Vec<u32> = v.iter().map(|&c| if flip { f.neg(c) } else { c }).collect();
                let both = i != j && w != forced.as_slice();
                if both || v.iter().any(|&c| c != 0) {
                    bracket.insert((spec.name(i).to_string(), spec.name(j).to_string()), combo(v));
                }
                if both {
                    bracket.insert((spec.name(j).to_string(), spec.name(i).to_string()), combo(w));
                }
            }
        }
        let mut pmap = BTreeMap::new();
        for i in 0..spec.even_dim() {
            let v = spec.pmap_basis(i);
            if v.iter().any(|&c| c != 0) {
                pmap.insert(spec.name(i).to_string(), combo(v));
            }
        }
        AlgebraDocument {
            p: spec.p(),
            even: spec.even_names().to_vec(),
            odd: spec.odd_names().to_vec(),
            bracket,
            pmap,
        }
    }

    pub fn to_value(&self) -> Value {
        let combo = |m: &BTreeMap<String, u32>| -> Value {
            Value::Object(m.iter().map(|(k, &c)| (k.clone(), Value::from(c))).collect())
        };
        let mut root = Map::new();
        root.insert("p".into(), Value::from(self.p));
        root.insert("even".into(), Value::from(self.even.clone()));
        root.insert("odd".into(), Value::from(self.odd.clone()));
        root.insert(
            "bracket".into(),
            Value::Object(self.bracket.iter().map(|((a, b), m)| (format!("{a},{b}"), combo(m))).collect()),
        );
        root.insert(
            "pmap".into(),
            Value::Object(self.pmap.iter().map(|(x, m)| (x.clone(), combo(m))).collect()),
        );
        Value::Object(root)
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("documents serialize");
        s.push('\n');
        s
    }
}

fn name_list(root: &Map<String, Value>, key: &str) -> Result<Vec<String>, DocumentError> {
    let ptr = format!("/{key}");
    let arr = match root.get(key) {
        None => return Err(err(ptr, "missing required key")),
        Some(v) => v.as_array().ok_or_else(|| err(&ptr, "expected an array of strings"))?,
    };
    arr.iter()
        .enumerate()
        .map(|(i, v)| {
            v.as_str()
                .map(str::to_string)
                .ok_or_else(|| err(format!("{ptr}/{i}"), "expected a string"))
        })
        .collect()
}

fn combination(
    value: &Value,
    pointer: &str,
    names: &BTreeMap<String, String>,
    field: &Field,
) -> Result<BTreeMap<String, u32>, DocumentError> {
    let obj = value
        .as_object()
        .ok_or_else(|| err(pointer, "expected an object mapping basis names to integers"))?;
    let mut out = BTreeMap::new();
    for (name, c) in obj {
        let ptr = child(pointer, name);
        if !names.contains_key(name.as_str()) {
            return Err(err(ptr, format!("unknown basis name `{name}`")));
        }
        let c = c.as_i64().ok_or_else(|| err(&ptr, "coefficients must be integers"))?;
        let c = field.from_i64(c);
        if c != 0 {
            out.insert(name.clone(), c);
        }
    }
    Ok(out)
}
