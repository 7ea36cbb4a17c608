//! Characteristic-number tables: parallel evaluation and TSV/JSON output.

use std::collections::BTreeMap;
use std::str::FromStr;
use std::thread;

use qtoric_core::quasitoric::{char_number_with, TopClass};
use qtoric_core::{BigInt, Composition, Error};
use serde::Serialize;
use serde_json::{Number, Value};

use crate::input::ParseError;

pub type Table = BTreeMap<Composition, BigInt>;

/// Evaluates every composition on `threads` workers. The result does not
/// depend on the thread count or scheduling.
pub fn evaluate(top: &TopClass, comps: &[Composition], threads: usize) -> Result<Table, Error> {
    let threads = threads.clamp(1, comps.len().max(1));
    let chunk = comps.len().div_ceil(threads).max(1);
    let parts: Vec<Result<Vec<(Composition, BigInt)>, Error>> = thread::scope(|s| {
        let handles: Vec<_> = comps
            .chunks(chunk)
            .map(|c| {
                s.spawn(move || {
                    c.iter().map(|a| Ok((a.clone(), char_number_with(top, a)?))).collect::<Result<Vec<_>, Error>>()
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    let mut table = Table::new();
    for p in parts {
        table.extend(p?);
    }
    Ok(table)
}

pub fn to_tsv(table: &Table) -> String {
    table.iter().map(|(a, v)| format!("{a}\t{v}\n")).collect()
}

#[derive(Serialize)]
struct Row<'a> {
    composition: &'a [u32],
    value: Number,
}

/// `{"name": .., "m": .., "charnums": [{"composition": [..], "value": ..}, ..]}`
/// in canonical composition order, one row per line; values are exact
/// integers of any size.
pub fn to_json(name: &str, m: usize, table: &Table) -> String {
    let mut out = format!(
        "{{\n  \"name\": {},\n  \"m\": {m},\n  \"charnums\": [\n",
        serde_json::to_string(name).expect("string serializes")
    );
    let rows: Vec<String> = table
        .iter()
        .map(|(a, v)| {
            let value = Number::from_str(&v.to_string()).expect("integers are valid JSON numbers");
            let row = Row { composition: a.parts(), value };
            format!("    {}", serde_json::to_string(&row).expect("row serializes"))
        })
        .collect();
    out += &rows.join(",\n");
    out += "\n  ]\n}\n";
    out
}

pub fn from_json(text: &str) -> Result<Table, ParseError> {
    let bad = |msg: &str| ParseError::Shape(msg.to_string());
    let doc: Value = serde_json::from_str(text)?;
    let rows = doc.get("charnums").and_then(Value::as_array).ok_or_else(|| bad("missing charnums array"))?;
    let mut table = Table::new();
    for row in rows {
        let parts: Vec<u32> = row
            .get("composition")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing composition"))?
            .iter()
            .map(|p| p.as_u64().and_then(|p| u32::try_from(p).ok()))
            .collect::<Option<_>>()
            .ok_or_else(|| bad("composition parts must be positive integers"))?;
        let a = Composition::new(parts).map_err(|e| ParseError::Shape(e.to_string()))?;
        let value = match row.get("value") {
            Some(Value::Number(n)) => n.to_string().parse::<BigInt>().map_err(|_| bad("value is not an integer"))?,
            _ => return Err(bad("missing value")),
        };
        table.insert(a, value);
    }
    Ok(table)
}
