//! Named graded generators and the declaration context that owns them.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::AlgebraError;
use crate::scalar::Field;

/// Largest accepted generator degree. Keeps every sign-exponent bookkeeping
/// sum comfortably inside `u64`.
pub const MAX_DEGREE: u32 = 1_000_000;

/// A named generator of the underlying free graded-commutative algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    name: String,
    degree: u32,
}

impl Generator {
    /// Creates a generator. Names match `[a-zA-Z][a-zA-Z0-9]*`.
    pub fn new(name: &str, degree: u32) -> Result<Generator, AlgebraError> {
        let mut chars = name.chars();
        let head_ok = chars.next().is_some_and(|c| c.is_ascii_alphabetic());
        if !head_ok || !chars.all(|c| c.is_ascii_alphanumeric()) {
            return Err(AlgebraError::InvalidGeneratorName {
                name: name.to_owned(),
            });
        }
        if degree > MAX_DEGREE {
            return Err(AlgebraError::DegreeTooLarge {
                degree,
                max: MAX_DEGREE,
            });
        }
        Ok(Generator {
            name: name.to_owned(),
            degree,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_odd(&self) -> bool {
        self.degree % 2 == 1
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

/// A coefficient field together with uniquely named generators.
#[derive(Debug, Clone)]
pub struct Context {
    field: Field,
    generators: BTreeMap<String, Generator>,
}

impl Context {
    pub fn new(field: Field) -> Context {
        Context {
            field,
            generators: BTreeMap::new(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Declares a generator. Redeclaring a name is an error.
    pub fn declare(&mut self, name: &str, degree: u32) -> Result<Generator, AlgebraError> {
        if let Some(existing) = self.generators.get(name) {
            return Err(AlgebraError::DuplicateGenerator {
                name: name.to_owned(),
                existing: existing.degree(),
            });
        }
        let gen = Generator::new(name, degree)?;
        self.generators.insert(name.to_owned(), gen.clone());
        Ok(gen)
    }

    /// Looks a name up, failing if it was never declared.
    pub fn generator(&self, name: &str) -> Result<&Generator, AlgebraError> {
        self.lookup(name)
            .ok_or_else(|| AlgebraError::UnknownGenerator {
                name: name.to_owned(),
            })
    }

    pub fn lookup(&self, name: &str) -> Option<&Generator> {
        self.generators.get(name)
    }

    /// Generators in name order.
    pub fn generators(&self) -> impl Iterator<Item = &Generator> {
        self.generators.values()
    }
}

/// The full evaluation context for expressions: a tensor arity on top of a
/// declaration context.
#[derive(Debug, Clone)]
pub struct ContextSpec {
    arity: usize,
    context: Context,
}

impl ContextSpec {
    pub fn new(arity: usize, context: Context) -> Result<ContextSpec, AlgebraError> {
        if arity == 0 {
            return Err(AlgebraError::ArityTooSmall { arity, min: 1 });
        }
        Ok(ContextSpec { arity, context })
    }

    /// Parses a spec string such as `n=4;field=f2;gens=a:1,b:2`.
    ///
    /// The three `key=value` parts may come in any order; each is required
    /// exactly once. Generator entries are `name:degree` pairs.
    pub fn parse_spec(spec: &str) -> Result<ContextSpec, AlgebraError> {
        let invalid = |detail: &str| AlgebraError::InvalidContextSpec {
            detail: detail.to_owned(),
        };
        let mut arity: Option<usize> = None;
        let mut field: Option<Field> = None;
        let mut gens: Option<Vec<(String, u32)>> = None;
        for part in spec.split(';') {
            let part = part.trim();
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| invalid(&format!("expected key=value, got `{part}`")))?;
            match key.trim() {
                "n" => {
                    let n = value
                        .trim()
                        .parse()
                        .map_err(|_| invalid(&format!("bad arity `{}`", value.trim())))?;
                    if arity.replace(n).is_some() {
                        return Err(invalid("duplicate `n`"));
                    }
                }
                "field" => {
                    if field.replace(Field::parse_code(value)?).is_some() {
                        return Err(invalid("duplicate `field`"));
                    }
                }
                "gens" => {
                    let mut list = Vec::new();
                    for entry in value.split(',') {
                        let (name, degree) = entry.trim().split_once(':').ok_or_else(|| {
                            invalid(&format!("expected name:degree, got `{entry}`"))
                        })?;
                        let degree = degree
                            .trim()
                            .parse()
                            .map_err(|_| invalid(&format!("bad degree `{}`", degree.trim())))?;
                        list.push((name.trim().to_owned(), degree));
                    }
                    if gens.replace(list).is_some() {
                        return Err(invalid("duplicate `gens`"));
                    }
                }
                other => return Err(invalid(&format!("unknown key `{other}`"))),
            }
        }
        let arity = arity.ok_or_else(|| invalid("missing `n`"))?;
        let field = field.ok_or_else(|| invalid("missing `field`"))?;
        let gens = gens.ok_or_else(|| invalid("missing `gens`"))?;
        let mut context = Context::new(field);
        for (name, degree) in gens {
            context.declare(&name, degree)?;
        }
        ContextSpec::new(arity, context)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn context(&self) -> &Context {
        &self.context
    }

    pub fn field(&self) -> Field {
        self.context.field()
    }

    /// Names of declared degree-zero generators, for caller-side warnings:
    /// such generators are units of the grading and usually a typo.
    pub fn zero_degree_generators(&self) -> Vec<&str> {
        self.context
            .generators()
            .filter(|g| g.degree() == 0)
            .map(|g| g.name())
            .collect()
    }
}
