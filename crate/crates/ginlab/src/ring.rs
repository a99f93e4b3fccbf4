use crate::error::{Error, Result};

/// A polynomial ring over the rationals, identified by its ordered list of
/// variable names. Variables are indexed `0..nvars`, and every order in this
/// crate treats earlier variables as larger: `x1 > x2 > ... > xn`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ring {
    vars: Vec<String>,
}

fn valid_var_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    /// Builds a ring from explicit variable names. Names must be nonempty
    /// identifiers (`[A-Za-z_][A-Za-z0-9_]*`) and pairwise distinct.
    pub fn new(vars: Vec<String>) -> Result<Self> {
        if vars.is_empty() {
            return Err(Error::InvalidRing("need at least one variable".into()));
        }
        for name in &vars {
            if !valid_var_name(name) {
                return Err(Error::InvalidRing(format!(
                    "`{name}` is not a valid variable name"
                )));
            }
        }
        for i in 1..vars.len() {
            if vars[..i].contains(&vars[i]) {
                return Err(Error::InvalidRing(format!(
                    "duplicate variable `{}`",
                    vars[i]
                )));
            }
        }
        Ok(Ring { vars })
    }

    /// Convenience constructor from string slices.
    pub fn from_names(names: &[&str]) -> Result<Self> {
        Ring::new(names.iter().map(|s| s.to_string()).collect())
    }

    /// Ring with auto-named variables `x1, .., xn`.
    pub fn with_numbered_vars(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidRing("need at least one variable".into()));
        }
        Ring::new((1..=n).map(|i| format!("x{i}")).collect())
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.vars[i]
    }

    /// Index of a variable by name, if declared.
    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }
}
