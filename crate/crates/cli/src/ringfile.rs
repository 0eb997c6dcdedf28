//! The line-oriented ring file format:
//!
//! ```text
//! # comments and blank lines are ignored
//! char 32003
//! vars x,y,z,w
//! rel w^2
//! rel w*z
//! ```

use std::sync::Arc;

use reestype::{Error, PolyRing, PrimeField, QuotientRing, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingFile {
    pub characteristic: u64,
    pub vars: Vec<String>,
    pub relations: Vec<String>,
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub fn parse_ring_file(text: &str) -> Result<RingFile> {
    let mut characteristic = None;
    let mut vars: Option<Vec<String>> = None;
    let mut relations = Vec::new();
    let mut offset = 0;
    for raw in text.split_inclusive('\n') {
        let pos = offset;
        offset += raw.len();
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        let err = |msg: String| Error::Parse { pos, msg };
        match key {
            "char" => {
                if characteristic.is_some() {
                    return Err(err("duplicate `char` line".into()));
                }
                let p = rest.parse::<u64>().map_err(|_| err(format!("bad characteristic `{rest}`")))?;
                characteristic = Some(p);
            }
            "vars" => {
                if characteristic.is_none() {
                    return Err(err("`vars` must follow the `char` line".into()));
                }
                if vars.is_some() {
                    return Err(err("duplicate `vars` line".into()));
                }
                let names: Vec<String> = rest.split(',').map(|s| s.trim().to_string()).collect();
                if let Some(bad) = names.iter().find(|s| !is_identifier(s)) {
                    return Err(err(format!("bad variable name `{bad}`")));
                }
                let mut sorted = names.clone();
                sorted.sort();
                sorted.dedup();
                if sorted.len() != names.len() {
                    return Err(err("repeated variable name".into()));
                }
                vars = Some(names);
            }
            "rel" => {
                if vars.is_none() {
                    return Err(err("`rel` before `vars`".into()));
                }
                if rest.is_empty() {
                    return Err(err("empty relation".into()));
                }
                relations.push(rest.to_string());
            }
            other => return Err(err(format!("unknown directive `{other}`"))),
        }
    }
    let characteristic = characteristic.ok_or(Error::Parse { pos: 0, msg: "missing `char` line".into() })?;
    let vars = vars.ok_or(Error::Parse { pos: 0, msg: "missing `vars` line".into() })?;
    Ok(RingFile { characteristic, vars, relations })
}

impl RingFile {
    pub fn polynomial_ring(&self, degree_cap: u32) -> Result<PolyRing> {
        let field = PrimeField::new(self.characteristic)?;
        Ok(PolyRing::new(field, self.vars.clone(), reestype::MonomialOrder::Grevlex)?.with_degree_cap(degree_cap))
    }

    /// Parses the relations and builds the quotient ring.
    pub fn build(&self, degree_cap: u32) -> Result<QuotientRing> {
        let ring = Arc::new(self.polynomial_ring(degree_cap)?);
        let rels = self.relations.iter().map(|r| ring.parse(r)).collect::<Result<Vec<_>>>()?;
        QuotientRing::new(ring, rels)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("char {}\nvars {}\n", self.characteristic, self.vars.join(","));
        for r in &self.relations {
            out.push_str("rel ");
            out.push_str(r);
            out.push('\n');
        }
        out
    }
}
