//! Ordered collections of skew braces and the `SKB1` text format.
//!
//! A catalog file looks like:
//!
//! ```text
//! SKB1
//! # a comment
//! brace o2_1 n 2
//! add
//! 0 1
//! 1 0
//! mul
//! 0 1
//! 1 0
//! end
//! ```
//!
//! Lines starting with `#` are ignored; the file must end with a newline.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::brace::{BraceError, SkewBrace};
use crate::group::{FiniteGroup, GroupError};

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("entry {entry}: validation failed: {source}")]
    Validation { entry: String, source: BraceError },
    #[error("entry {entry}: invalid group table: {source}")]
    GroupValidation { entry: String, source: GroupError },
    #[error("duplicate entry id {0}")]
    DuplicateId(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: String,
    pub key: Vec<u8>,
    pub brace: SkewBrace,
}

/// An ordered list of validated skew braces with canonical keys.
#[derive(Clone, Debug, Default)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    /// Builds a deduplicated catalog: entries are sorted by canonical key
    /// (which sorts by order first) and named `o<order>_<index>`.
    pub fn from_braces(braces: impl IntoIterator<Item = SkewBrace>) -> Catalog {
        let mut by_key: BTreeMap<Vec<u8>, SkewBrace> = BTreeMap::new();
        for b in braces {
            by_key.entry(b.canonical_key().to_vec()).or_insert(b);
        }
        let mut entries = Vec::new();
        let mut per_order: BTreeMap<usize, usize> = BTreeMap::new();
        for (key, brace) in by_key {
            let order = brace.order();
            let index = per_order.entry(order).or_insert(0);
            *index += 1;
            entries.push(CatalogEntry { id: format!("o{order}_{index}"), key, brace });
        }
        Catalog { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, id: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn keys(&self) -> Vec<&[u8]> {
        self.entries.iter().map(|e| e.key.as_slice()).collect()
    }

    /// Entry ranges per order, for order-indexed access.
    pub fn order_index(&self) -> BTreeMap<usize, std::ops::Range<usize>> {
        let mut out: BTreeMap<usize, std::ops::Range<usize>> = BTreeMap::new();
        for (i, e) in self.entries.iter().enumerate() {
            let order = e.brace.order();
            out.entry(order).and_modify(|r| r.end = i + 1).or_insert(i..i + 1);
        }
        out
    }

    /// Merges catalogs, deduplicating by canonical key.
    pub fn merge(catalogs: impl IntoIterator<Item = Catalog>) -> Catalog {
        Catalog::from_braces(catalogs.into_iter().flat_map(|c| c.entries.into_iter().map(|e| e.brace)))
    }

    /// Serializes in the `SKB1` format, bit-exact and newline-terminated.
    pub fn to_skb_string(&self) -> String {
        let mut out = String::from("SKB1\n");
        for entry in &self.entries {
            let n = entry.brace.order();
            out.push_str(&format!("brace {} n {}\n", entry.id, n));
            out.push_str("add\n");
            for row in entry.brace.add_group().table() {
                out.push_str(&join_row(row));
                out.push('\n');
            }
            out.push_str("mul\n");
            for row in entry.brace.mul_group().table() {
                out.push_str(&join_row(row));
                out.push('\n');
            }
            out.push_str("end\n");
        }
        out
    }

    pub fn write_to(&self, path: &std::path::Path) -> Result<(), CatalogError> {
        std::fs::write(path, self.to_skb_string())?;
        Ok(())
    }

    /// Parses and validates an `SKB1` document.
    pub fn from_skb_str(text: &str) -> Result<Catalog, CatalogError> {
        if !text.ends_with('\n') {
            let line = text.lines().count();
            return Err(CatalogError::Parse { line, reason: "missing final newline".into() });
        }
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim_end()))
            .filter(|(_, l)| !l.starts_with('#'));
        let (line, magic) = lines
            .next()
            .ok_or(CatalogError::Parse { line: 1, reason: "empty file".into() })?;
        if magic != "SKB1" {
            return Err(CatalogError::Parse { line, reason: format!("expected magic SKB1, found {magic:?}") });
        }
        let mut entries: Vec<CatalogEntry> = Vec::new();
        while let Some((line, header)) = lines.next() {
            if header.is_empty() {
                continue;
            }
            let parts: Vec<&str> = header.split_whitespace().collect();
            if parts.len() != 4 || parts[0] != "brace" || parts[2] != "n" {
                return Err(CatalogError::Parse {
                    line,
                    reason: format!("expected `brace <id> n <order>`, found {header:?}"),
                });
            }
            let id = parts[1].to_string();
            if entries.iter().any(|e| e.id == id) {
                return Err(CatalogError::DuplicateId(id));
            }
            let n: usize = parts[3]
                .parse()
                .map_err(|_| CatalogError::Parse { line, reason: format!("bad order {:?}", parts[3]) })?;
            if n == 0 {
                return Err(CatalogError::Parse { line, reason: "order must be positive".into() });
            }
            let add = parse_block(&mut lines, "add", n)?;
            let mul = parse_block(&mut lines, "mul", n)?;
            match lines.next() {
                Some((_, "end")) => {}
                Some((line, other)) => {
                    return Err(CatalogError::Parse { line, reason: format!("expected `end`, found {other:?}") })
                }
                None => return Err(CatalogError::Parse { line, reason: "unexpected end of file".into() }),
            }
            let add = FiniteGroup::new(add)
                .map_err(|source| CatalogError::GroupValidation { entry: id.clone(), source })?;
            let mul = FiniteGroup::new(mul)
                .map_err(|source| CatalogError::GroupValidation { entry: id.clone(), source })?;
            let brace = SkewBrace::new(add, mul)
                .map_err(|source| CatalogError::Validation { entry: id.clone(), source })?;
            let key = brace.canonical_key().to_vec();
            entries.push(CatalogEntry { id, key, brace });
        }
        Ok(Catalog { entries })
    }

    pub fn read_from(path: &std::path::Path) -> Result<Catalog, CatalogError> {
        let text = std::fs::read_to_string(path)?;
        Catalog::from_skb_str(&text)
    }
}

fn join_row(row: &[usize]) -> String {
    row.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn parse_block<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    tag: &str,
    n: usize,
) -> Result<Vec<Vec<usize>>, CatalogError> {
    match lines.next() {
        Some((_, l)) if l == tag => {}
        Some((line, other)) => {
            return Err(CatalogError::Parse { line, reason: format!("expected `{tag}`, found {other:?}") })
        }
        None => return Err(CatalogError::Parse { line: 0, reason: format!("missing `{tag}` block") }),
    }
    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        match lines.next() {
            Some((line, text)) => {
                let row: Result<Vec<usize>, _> = text.split_whitespace().map(str::parse).collect();
                let row = row.map_err(|_| CatalogError::Parse { line, reason: format!("bad table row {text:?}") })?;
                if row.len() != n {
                    return Err(CatalogError::Parse {
                        line,
                        reason: format!("expected {n} entries per row, found {}", row.len()),
                    });
                }
                rows.push(row);
            }
            None => return Err(CatalogError::Parse { line: 0, reason: "unexpected end of file in table".into() }),
        }
    }
    Ok(rows)
}
