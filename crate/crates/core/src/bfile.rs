//! OEIS b-file reading and writing.
//!
//! Canonical form is ASCII `<index> <value>\n` with contiguous ascending
//! indices. On input, lines starting with `#` and blank lines are skipped.

use std::fmt::Write as _;

use num_bigint::BigInt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFile {
    /// Index of the first value.
    pub offset: i64,
    pub values: Vec<BigInt>,
}

fn bad(line: usize, message: impl Into<String>) -> Error {
    Error::BFile {
        line,
        message: message.into(),
    }
}

impl BFile {
    pub fn new(offset: i64, values: Vec<BigInt>) -> Self {
        BFile { offset, values }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut offset = None;
        let mut values = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut fields = line.split_whitespace();
            let (Some(idx), Some(val), None) = (fields.next(), fields.next(), fields.next()) else {
                return Err(bad(line_no, "expected `<index> <value>`"));
            };
            let idx: i64 = idx
                .parse()
                .map_err(|_| bad(line_no, format!("bad index `{idx}`")))?;
            let val: BigInt = val
                .parse()
                .map_err(|_| bad(line_no, format!("bad value `{val}`")))?;
            let start = *offset.get_or_insert(idx);
            let expected = start + values.len() as i64;
            if idx != expected {
                return Err(bad(
                    line_no,
                    format!("index {idx} where {expected} was expected"),
                ));
            }
            values.push(val);
        }
        match offset {
            Some(offset) => Ok(BFile { offset, values }),
            None => Err(bad(0, "no data lines")),
        }
    }

    pub fn emit(&self) -> String {
        let mut out = String::new();
        for (i, v) in self.values.iter().enumerate() {
            writeln!(out, "{} {}", self.offset + i as i64, v).expect("writing to a String");
        }
        out
    }

    /// Same values, first index moved to `offset`.
    pub fn reindexed(self, offset: i64) -> Self {
        BFile {
            offset,
            values: self.values,
        }
    }
}
