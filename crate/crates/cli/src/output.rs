// Copyright 2026 The casimir authors
//
// Licensed under the Apache license, version 2.0 (the "license");
// you may not use this file except in compliance with the license.
// You may obtain a copy of the license at
//
//     http://www.apache.org/licenses/license-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the license is distributed on an "as is" basis,
// without warranties or conditions of any kind, either express or implied.
// See the license for the specific language governing permissions and
// limitations under the license.

//! Table writers and number formatting for the command-line front end.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use casimir::figures::FigureTable;
use serde_json::{Map, Value};

/// Seventeen significant digits, enough to round-trip any f64.
pub fn num(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn write_csv(table: &FigureTable, path: &Path) -> io::Result<()> {
    let mut out = BufWriter::new(File::create(path)?);
    for (key, value) in &table.metadata {
        writeln!(out, "# {key}: {value}")?;
    }
    let mut writer = csv::Writer::from_writer(out);
    writer.write_record(&table.columns)?;
    for row in &table.rows {
        writer.write_record(row.iter().map(|v| num(*v)))?;
    }
    writer.flush()
}

/// An array of row objects keyed by column name.
pub fn write_json(table: &FigureTable, path: &Path) -> io::Result<()> {
    let rows: Vec<Value> = table
        .rows
        .iter()
        .map(|row| {
            let object: Map<String, Value> = table
                .columns
                .iter()
                .zip(row)
                .map(|(name, v)| (name.clone(), Value::from(*v)))
                .collect();
            Value::Object(object)
        })
        .collect();
    let mut out = BufWriter::new(File::create(path)?);
    serde_json::to_writer_pretty(&mut out, &rows)?;
    writeln!(out)?;
    out.flush()
}
