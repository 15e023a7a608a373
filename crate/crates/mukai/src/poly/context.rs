use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::PolyError;

/// A shared, immutable variable context.
pub type Ctx = Arc<VariableContext>;

/// An ordered list of distinct variable names. The order is fixed at
/// creation and defines the variable indices used by monomial exponent
/// vectors; earlier variables are considered larger by every monomial order.
#[derive(Clone)]
pub struct VariableContext {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl VariableContext {
    /// Build a context from variable names. Names must be distinct and
    /// match the identifier grammar `letter (letter|digit|'_')*`, so that
    /// every polynomial prints and re-parses losslessly.
    pub fn new<I, S>(names: I) -> Result<Ctx, PolyError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(PolyError::InvalidVariableName(name.clone()));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(PolyError::DuplicateVariable(name.clone()));
            }
        }
        Ok(Arc::new(VariableContext { names, index }))
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

    pub fn position(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Context without the given variable indices, together with the map
    /// from old indices to new ones (`None` for dropped variables).
    pub fn without(&self, dropped: &[usize]) -> Result<(Ctx, Vec<Option<usize>>), PolyError> {
        for &d in dropped {
            if d >= self.len() {
                return Err(PolyError::VariableOutOfRange(d));
            }
        }
        let mut map = Vec::with_capacity(self.len());
        let mut kept = Vec::new();
        for (i, name) in self.names.iter().enumerate() {
            if dropped.contains(&i) {
                map.push(None);
            } else {
                map.push(Some(kept.len()));
                kept.push(name.clone());
            }
        }
        Ok((VariableContext::new(kept)?, map))
    }

    /// Context extended by one fresh variable (appended last). The name is
    /// derived from `hint`, suffixed until it avoids every existing name.
    pub fn with_fresh(&self, hint: &str) -> Ctx {
        let mut name = hint.to_string();
        let mut k = 0usize;
        while self.index.contains_key(&name) {
            name = format!("{hint}_{k}");
            k += 1;
        }
        let mut names = self.names.clone();
        names.push(name);
        VariableContext::new(names).expect("fresh name is a valid identifier")
    }
}

impl PartialEq for VariableContext {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
    }
}

impl Eq for VariableContext {}

impl fmt::Debug for VariableContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VariableContext[{}]", self.names.join(" "))
    }
}

/// Fast same-context test: pointer equality first, name lists otherwise.
pub(crate) fn same_ctx(a: &Ctx, b: &Ctx) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
