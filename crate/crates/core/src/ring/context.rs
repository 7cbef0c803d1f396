use std::collections::HashMap;

use super::RingError;

/// A named group of variables. Orders of block form refer to blocks by name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub name: String,
    pub vars: Vec<usize>,
}

/// The variables of a polynomial ring, their partition into blocks and their
/// bidegrees `(internal degree, t-degree)`.
#[derive(Clone, Debug)]
pub struct VarContext {
    names: Vec<String>,
    index: HashMap<String, usize>,
    blocks: Vec<Block>,
    bidegrees: Vec<(u32, u32)>,
}

impl PartialEq for VarContext {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.blocks == other.blocks && self.bidegrees == other.bidegrees
    }
}

impl Eq for VarContext {}

pub const DEFAULT_BLOCK: &str = "main";

impl VarContext {
    /// All variables in a single block named `main`, bidegree `(1, 0)`.
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self, RingError> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        let all: Vec<String> = names.clone();
        Self::with_blocks(names, vec![(DEFAULT_BLOCK.to_string(), all)])
    }

    /// Variables in declaration order plus a partition into named blocks.
    pub fn with_blocks(names: Vec<String>, blocks: Vec<(String, Vec<String>)>) -> Result<Self, RingError> {
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(RingError::InvalidContext(format!("`{name}` is not a valid variable name")));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(RingError::InvalidContext(format!("duplicate variable `{name}`")));
            }
        }
        let mut seen = vec![false; names.len()];
        let mut out = Vec::with_capacity(blocks.len());
        for (bname, vars) in blocks {
            if out.iter().any(|b: &Block| b.name == bname) {
                return Err(RingError::InvalidContext(format!("duplicate block `{bname}`")));
            }
            let mut idx = Vec::with_capacity(vars.len());
            for v in &vars {
                let i = *index.get(v).ok_or_else(|| RingError::UnknownVariable(v.clone()))?;
                if seen[i] {
                    return Err(RingError::InvalidContext(format!("variable `{v}` is in more than one block")));
                }
                seen[i] = true;
                idx.push(i);
            }
            idx.sort_unstable();
            out.push(Block { name: bname, vars: idx });
        }
        if let Some(i) = seen.iter().position(|s| !s) {
            return Err(RingError::InvalidContext(format!("variable `{}` is in no block", names[i])));
        }
        let bidegrees = vec![(1, 0); names.len()];
        Ok(Self { names, index, blocks: out, bidegrees })
    }

    pub fn with_bidegrees(mut self, bidegrees: Vec<(u32, u32)>) -> Result<Self, RingError> {
        if bidegrees.len() != self.names.len() {
            return Err(RingError::InvalidContext("bidegree list has the wrong length".into()));
        }
        self.bidegrees = bidegrees;
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn var(&self, name: &str) -> Result<usize, RingError> {
        self.index_of(name).ok_or_else(|| RingError::UnknownVariable(name.to_string()))
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn block(&self, name: &str) -> Option<&Block> {
        self.blocks.iter().find(|b| b.name == name)
    }

    pub fn bidegree(&self, i: usize) -> (u32, u32) {
        self.bidegrees[i]
    }

    pub fn bidegrees(&self) -> &[(u32, u32)] {
        &self.bidegrees
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
