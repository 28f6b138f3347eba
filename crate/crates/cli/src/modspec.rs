//! Named modules built from an algebra, written prefix-style with `:` separators:
//!
//! | form | module |
//! |---|---|
//! | `trivial` | `k` |
//! | `regular` | `A` acting on itself |
//! | `simple:i` | the `i`-th simple, in the order `simples` prints |
//! | `carlson:n:c1,c2,..` | `L_ζ` for `ζ = Σ c_i ζ_i` in `H^n(A, k)` |
//! | `tensor:A:B`, `sum:A:B` | `A ⊗ B`, `A ⊕ B` |
//! | `dual:A`, `shift:A` | `A^*`, `ΠA` |
//! | `omega:n:A`, `cover:A` | `Ω^n(A)`, the projective cover of `A` |

use std::collections::HashMap;
use std::fmt;

use superu_core::cohomology::Resolution;
use superu_core::linalg::Field;
use superu_core::repcat::{direct_sum, dual, regular_module, tensor, trivial_module, RepCategory, Supermodule};
use superu_core::varieties::{carlson_module, trivial_resolution};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleSpec {
    Trivial,
    Regular,
    Simple(usize),
    Carlson { degree: usize, coords: Vec<i64> },
    Tensor(Box<ModuleSpec>, Box<ModuleSpec>),
    Sum(Box<ModuleSpec>, Box<ModuleSpec>),
    Dual(Box<ModuleSpec>),
    Shift(Box<ModuleSpec>),
    Omega(usize, Box<ModuleSpec>),
    Cover(Box<ModuleSpec>),
}

impl fmt::Display for ModuleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleSpec::Trivial => f.write_str("trivial"),
            ModuleSpec::Regular => f.write_str("regular"),
            ModuleSpec::Simple(i) => write!(f, "simple:{i}"),
            ModuleSpec::Carlson { degree, coords } => {
                let cs: Vec<String> = coords.iter().map(|c| c.to_string()).collect();
                write!(f, "carlson:{degree}:{}", cs.join(","))
            }
            ModuleSpec::Tensor(a, b) => write!(f, "tensor:{a}:{b}"),
            ModuleSpec::Sum(a, b) => write!(f, "sum:{a}:{b}"),
            ModuleSpec::Dual(a) => write!(f, "dual:{a}"),
            ModuleSpec::Shift(a) => write!(f, "shift:{a}"),
            ModuleSpec::Omega(n, a) => write!(f, "omega:{n}:{a}"),
            ModuleSpec::Cover(a) => write!(f, "cover:{a}"),
        }
    }
}

impl std::str::FromStr for ModuleSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let tokens: Vec<&str> = s.split(':').map(str::trim).collect();
        let mut pos = 0;
        let spec = parse_tokens(&tokens, &mut pos)?;
        if pos != tokens.len() {
            return Err(format!("module `{s}`: unexpected trailing `{}`", tokens[pos..].join(":")));
        }
        Ok(spec)
    }
}

fn parse_tokens(tokens: &[&str], pos: &mut usize) -> Result<ModuleSpec, String> {
    let next = |pos: &mut usize, what: &str| -> Result<String, String> {
        let t = tokens.get(*pos).ok_or_else(|| format!("expected {what} at end of module"))?;
        *pos += 1;
        Ok(t.to_string())
    };
    let number = |t: String, what: &str| -> Result<usize, String> {
        t.parse().map_err(|_| format!("expected {what}, found `{t}`"))
    };
    let head = next(pos, "a module name")?;
    Ok(match head.as_str() {
        "trivial" | "k" => ModuleSpec::Trivial,
        "regular" => ModuleSpec::Regular,
        "simple" => ModuleSpec::Simple(number(next(pos, "a simple index")?, "a simple index")?),
        "carlson" => {
            let degree = number(next(pos, "a degree")?, "a degree")?;
            let list = next(pos, "class coordinates")?;
            let coords = list
                .split(',')
                .map(|c| c.trim().parse::<i64>().map_err(|_| format!("expected an integer coordinate, found `{c}`")))
                .collect::<Result<Vec<_>, _>>()?;
            ModuleSpec::Carlson { degree, coords }
        }
        "tensor" => ModuleSpec::Tensor(Box::new(parse_tokens(tokens, pos)?), Box::new(parse_tokens(tokens, pos)?)),
        "sum" => ModuleSpec::Sum(Box::new(parse_tokens(tokens, pos)?), Box::new(parse_tokens(tokens, pos)?)),
        "dual" => ModuleSpec::Dual(Box::new(parse_tokens(tokens, pos)?)),
        "shift" => ModuleSpec::Shift(Box::new(parse_tokens(tokens, pos)?)),
        "omega" => {
            let n = number(next(pos, "a syzygy degree")?, "a syzygy degree")?;
            ModuleSpec::Omega(n, Box::new(parse_tokens(tokens, pos)?))
        }
        "cover" => ModuleSpec::Cover(Box::new(parse_tokens(tokens, pos)?)),
        other => {
            return Err(format!(
                "unknown module `{other}` (expected trivial, regular, simple, carlson, tensor, sum, dual, shift, omega or cover)"
            ))
        }
    })
}

/// Field element for an integer coordinate: reduced mod `p` over a prime field; over
/// `F_{p^e}` the integers `0..p^e` name elements by their base-`p` digits and a minus sign
/// negates.
pub fn field_element(f: &Field, v: i64) -> Result<u32, CliError> {
    if f.is_prime_field() {
        return Ok(f.from_i64(v));
    }
    let q = f.order() as i64;
    if v.abs() >= q {
        return Err(CliError::input(format!("coordinate {v} is not an element of F_{q}")));
    }
    Ok(if v < 0 { f.neg((-v) as u32) } else { v as u32 })
}

/// Builds modules over one category, caching the resolutions of `k` used by Carlson
/// modules.
pub struct ModuleBuilder<'a> {
    cat: &'a RepCategory,
    resolutions: HashMap<usize, Resolution>,
}

impl<'a> ModuleBuilder<'a> {
    pub fn new(cat: &'a RepCategory) -> ModuleBuilder<'a> {
        ModuleBuilder { cat, resolutions: HashMap::new() }
    }

    /// A resolution of `k` reaching at least degree `degree`.
    pub fn trivial_resolution(&mut self, degree: usize) -> Result<&Resolution, CliError> {
        if !self.resolutions.contains_key(&degree) {
            let res = trivial_resolution(self.cat, degree)?;
            self.resolutions.insert(degree, res);
        }
        Ok(&self.resolutions[&degree])
    }

    pub fn build(&mut self, spec: &ModuleSpec) -> Result<Supermodule, CliError> {
        let cat = self.cat;
        let alg = cat.algebra();
        Ok(match spec {
            ModuleSpec::Trivial => trivial_module(alg)?,
            ModuleSpec::Regular => regular_module(alg),
            ModuleSpec::Simple(i) => {
                let n = cat.simples().len();
                cat.simples()
                    .get(*i)
                    .ok_or_else(|| CliError::input(format!("simple:{i} out of range (there are {n} simples)")))?
                    .module
                    .clone()
            }
            ModuleSpec::Carlson { degree, coords } => {
                if *degree == 0 {
                    return Err(CliError::input("Carlson modules need a class of positive degree"));
                }
                let f = cat.field().clone();
                let coords = coords.iter().map(|&c| field_element(&f, c)).collect::<Result<Vec<_>, _>>()?;
                let res = self.trivial_resolution(*degree)?;
                let zeta = res.class_from_coords(cat, *degree, &coords)?;
                carlson_module(res, &zeta)?
            }
            ModuleSpec::Tensor(a, b) => {
                let (a, b) = (self.build(a)?, self.build(b)?);
                tensor(&a, &b)?
            }
            ModuleSpec::Sum(a, b) => {
                let (a, b) = (self.build(a)?, self.build(b)?);
                direct_sum(&a, &b)?
            }
            ModuleSpec::Dual(a) => dual(&self.build(a)?)?,
            ModuleSpec::Shift(a) => self.build(a)?.parity_shift(),
            ModuleSpec::Omega(n, a) => {
                let m = self.build(a)?;
                superu_core::cohomology::syzygy(cat, &m, *n)?
            }
            ModuleSpec::Cover(a) => cat.projective_cover(&self.build(a)?)?.module,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use superu_core::enveloping::build_uea;
    use superu_core::liesuper::catalog;

    #[test]
    fn grammar_round_trips() {
        for s in [
            "trivial",
            "regular",
            "simple:3",
            "carlson:2:1,0,-1",
            "tensor:dual:simple:1:carlson:2:0,1",
            "sum:trivial:tensor:regular:trivial",
            "shift:omega:2:trivial",
            "cover:dual:trivial",
        ] {
            let spec: ModuleSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
    }

    #[test]
    fn grammar_errors() {
        assert!("tensor:trivial".parse::<ModuleSpec>().is_err());
        assert!("trivial:trivial".parse::<ModuleSpec>().is_err());
        assert!("simple:x".parse::<ModuleSpec>().is_err());
        assert!("carlson:2:1,a".parse::<ModuleSpec>().is_err());
        assert!("widget".parse::<ModuleSpec>().is_err());
    }

    #[test]
    fn builds_modules_with_expected_dimensions() {
        let alg = build_uea(&catalog("abelian(0|2)", 3).unwrap()).unwrap();
        let cat = RepCategory::new(&alg).unwrap();
        let mut b = ModuleBuilder::new(&cat);
        let dim = |b: &mut ModuleBuilder, s: &str| b.build(&s.parse().unwrap()).unwrap().dim();
        assert_eq!(dim(&mut b, "trivial"), 1);
        assert_eq!(dim(&mut b, "regular"), 4);
        assert_eq!(dim(&mut b, "omega:2:trivial"), 5);
        assert_eq!(dim(&mut b, "carlson:2:1,0,0"), 4);
        assert_eq!(dim(&mut b, "tensor:carlson:2:1,0,0:carlson:2:0,0,1"), 16);
        assert_eq!(dim(&mut b, "sum:trivial:cover:trivial"), 5);
        assert!(b.build(&"simple:1".parse().unwrap()).is_err());
        assert!(b.build(&"carlson:2:0,0,0".parse().unwrap()).is_err());
        assert!(b.build(&"carlson:2:1,0".parse().unwrap()).is_err());
    }
}
