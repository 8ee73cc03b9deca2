use std::sync::Arc;

use crate::error::{Error, Result};

/// What a variable stands for.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum VarRole {
    /// An ambient coordinate.
    Base,
    /// The jet coordinate `a_{i,j}`: coefficient of `t^j` in the arc component `x_i` (0-based `i`).
    Jet { i: usize, j: usize },
    /// A helper variable introduced by an algorithm.
    Aux,
}

/// Ordered variable names shared by every polynomial built over them.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VarContext {
    names: Vec<String>,
    roles: Vec<VarRole>,
}

/// Shared handle to a context.
pub type Ctx = Arc<VarContext>;

impl VarContext {
    /// Context of base variables.
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Ctx> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        let roles = vec![VarRole::Base; names.len()];
        Self::with_roles(names, roles)
    }

    pub fn with_roles(names: Vec<String>, roles: Vec<VarRole>) -> Result<Ctx> {
        if names.len() != roles.len() {
            return Err(Error::DimensionMismatch {
                expected: names.len(),
                got: roles.len(),
            });
        }
        for (k, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::invalid("empty variable name"));
            }
            if names[..k].contains(name) {
                return Err(Error::DuplicateVariable(name.clone()));
            }
        }
        Ok(Arc::new(VarContext { names, roles }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn role(&self, i: usize) -> &VarRole {
        &self.roles[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// A name starting with `stem` that is not yet taken.
    pub fn fresh_name(&self, stem: &str) -> String {
        if self.index_of(stem).is_none() {
            return stem.to_string();
        }
        (1..)
            .map(|k| format!("{stem}{k}"))
            .find(|c| self.index_of(c).is_none())
            .unwrap()
    }

    /// This context followed by fresh auxiliary variables, one per stem.
    pub fn extended(&self, stems: &[&str]) -> Ctx {
        let mut names = self.names.clone();
        let mut roles = self.roles.clone();
        for stem in stems {
            let tmp = VarContext {
                names: names.clone(),
                roles: roles.clone(),
            };
            names.push(tmp.fresh_name(stem));
            roles.push(VarRole::Aux);
        }
        Arc::new(VarContext { names, roles })
    }
}

pub(crate) fn same_ctx(a: &Ctx, b: &Ctx) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}
