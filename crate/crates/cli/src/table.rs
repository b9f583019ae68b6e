//! Plain-text tables with aligned columns.

use std::fmt;

/// A titled table. The first column holds row labels.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub title: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(title: impl Into<String>, header: impl IntoIterator<Item = impl Into<String>>) -> Self {
        Self { title: title.into(), header: header.into_iter().map(Into::into).collect(), rows: Vec::new() }
    }

    pub fn row(&mut self, cells: impl IntoIterator<Item = impl Into<String>>) {
        self.rows.push(cells.into_iter().map(Into::into).collect());
    }
}

impl fmt::Display for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ncols = self.rows.iter().map(Vec::len).chain([self.header.len()]).max().unwrap_or(0);
        let mut width = vec![0; ncols];
        for r in self.rows.iter().chain([&self.header]) {
            for (w, c) in width.iter_mut().zip(r) {
                *w = (*w).max(c.chars().count());
            }
        }
        let line = |f: &mut fmt::Formatter<'_>, r: &[String]| -> fmt::Result {
            let cells: Vec<String> = (0..ncols)
                .map(|k| {
                    let c = r.get(k).map(String::as_str).unwrap_or("");
                    format!("{c:<w$}", w = width[k])
                })
                .collect();
            writeln!(f, "  {}", cells.join("  ").trim_end())
        };
        writeln!(f, "{}", self.title)?;
        if !self.header.is_empty() {
            line(f, &self.header)?;
            let rule: Vec<String> = width.iter().map(|&w| "-".repeat(w)).collect();
            writeln!(f, "  {}", rule.join("  "))?;
        }
        for r in &self.rows {
            line(f, r)?;
        }
        Ok(())
    }
}
