//! OEIS b-file and single-line CSV rendering of integer sequences.
//!
//! A b-file is optional `#` comment lines followed by one `index value` pair
//! per line, LF-terminated, with indices increasing by exactly one.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::sets::Count;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BFile {
    /// Comment text without the leading `#`.
    pub comments: Vec<String>,
    pub lines: Vec<(u64, Count)>,
}

impl BFile {
    /// Numbers `values` consecutively from `first_index`.
    pub fn from_values<I>(first_index: u64, values: I) -> Self
    where
        I: IntoIterator<Item = Count>,
    {
        let lines = (first_index..).zip(values).collect();
        Self {
            comments: Vec::new(),
            lines,
        }
    }

    pub fn with_comment(mut self, text: impl Into<String>) -> Self {
        self.comments.push(text.into());
        self
    }

    pub fn values(&self) -> impl Iterator<Item = &Count> {
        self.lines.iter().map(|(_, v)| v)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.comments {
            let _ = writeln!(out, "# {c}");
        }
        for (i, v) in &self.lines {
            let _ = writeln!(out, "{i} {v}");
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut bfile = Self::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line_no = lineno + 1;
            let err = |reason: &str| Error::BFileParse {
                line: line_no,
                reason: reason.to_string(),
            };
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(c) = line.strip_prefix('#') {
                if !bfile.lines.is_empty() {
                    return Err(err("comment after data"));
                }
                bfile.comments.push(c.trim_start().to_string());
                continue;
            }
            let mut parts = line.split_whitespace();
            let (Some(idx), Some(val), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(err("expected `index value`"));
            };
            let idx: u64 = idx.parse().map_err(|_| err("bad index"))?;
            let val: Count = val.parse().map_err(|_| err("bad value"))?;
            if let Some((prev, _)) = bfile.lines.last() {
                if idx != prev + 1 {
                    return Err(err("indices must increase by one"));
                }
            }
            bfile.lines.push((idx, val));
        }
        Ok(bfile)
    }
}

/// Comma-separated values on one line, no trailing comma or newline.
pub fn render_csv<'a, I>(values: I) -> String
where
    I: IntoIterator<Item = &'a Count>,
{
    values
        .into_iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(xs: &[u64]) -> Vec<Count> {
        xs.iter().map(|&x| Count::from(x)).collect()
    }

    #[test]
    fn render_and_parse() {
        let b = BFile::from_values(1, counts(&[1, 2, 3, 5, 9])).with_comment("S^{1/2}_n");
        let text = b.render();
        assert_eq!(text, "# S^{1/2}_n\n1 1\n2 2\n3 3\n4 5\n5 9\n");
        assert_eq!(BFile::parse(&text).unwrap(), b);
    }

    #[test]
    fn parse_errors() {
        assert!(BFile::parse("1 1\n3 2\n").is_err());
        assert!(BFile::parse("1\n").is_err());
        assert!(BFile::parse("1 2 3\n").is_err());
        assert!(BFile::parse("1 -2\n").is_err());
        assert!(BFile::parse("1 1\n# late\n").is_err());
        assert!(BFile::parse("").unwrap().lines.is_empty());
    }

    #[test]
    fn csv() {
        assert_eq!(render_csv(&counts(&[1, 1, 2, 3, 5, 8])), "1,1,2,3,5,8");
        assert_eq!(render_csv(&counts(&[1])), "1");
    }
}
