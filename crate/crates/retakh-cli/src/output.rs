//! Output records and their renderings.
//!
//! Every command produces one [`Record`] — the command name, the echoed
//! parameters, and a payload — and the record renders in three formats:
//! JSON (the default; byte-stable, used by the golden tests), CSV (the
//! payload table only), and a human-oriented plain layout. Exact values
//! are never rendered as floats: big integers print as decimal strings,
//! non-integer rationals as `"p/q"`, and genuinely floating quantities
//! are fixed to 12 significant digits.

use clap::ValueEnum;
use retakh::Rat;
use serde_json::{Map, Value};

/// Wire format selector, shared by every subcommand.
#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    /// Single pretty-printed record (default).
    Json,
    /// Payload rows only; parameters are not echoed.
    Csv,
    /// Human-oriented layout; not covered by golden tests.
    Plain,
}

/// One scalar slot in a record: preformatted text, a small structural
/// integer, a flag, or an absent optional parameter.
#[derive(Clone, Debug)]
pub enum Cell {
    Text(String),
    Num(u64),
    Flag(bool),
    Null,
}

impl Cell {
    fn json(&self) -> Value {
        match self {
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Num(n) => Value::from(*n),
            Cell::Flag(b) => Value::Bool(*b),
            Cell::Null => Value::Null,
        }
    }

    fn plain(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Num(n) => n.to_string(),
            Cell::Flag(b) => b.to_string(),
            Cell::Null => "none".into(),
        }
    }

    fn csv(&self) -> String {
        match self {
            Cell::Null => String::new(),
            other => other.plain(),
        }
    }
}

/// Command payload: either a fixed list of named scalars, or scalars
/// followed by one homogeneous table.
pub enum Payload {
    Fields(Vec<(&'static str, Cell)>),
    WithTable {
        fields: Vec<(&'static str, Cell)>,
        /// JSON key holding the rows.
        table: &'static str,
        /// Column names; a single-column table renders as a flat JSON
        /// array.
        header: Vec<&'static str>,
        rows: Vec<Vec<Cell>>,
    },
}

/// The complete result of one invocation.
pub struct Record {
    pub command: &'static str,
    pub params: Vec<(&'static str, Cell)>,
    pub payload: Payload,
}

/// Environment details appended outside the payload when `--meta` is
/// given. CSV output has no slot outside the payload, so it omits this.
pub struct Meta {
    pub tool: &'static str,
    pub version: &'static str,
}

/// Render a rational exactly: plain decimal when integral, `p/q`
/// otherwise.
pub fn rat_str(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Fixed 12-significant-digit decimal for floating quantities. Trailing
/// zeros are kept so the width is a function of magnitude alone.
pub fn fmt_real(x: f64) -> String {
    assert!(x.is_finite(), "non-finite value in output");
    if x == 0.0 {
        return "0".into();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let precision = (11 - magnitude).clamp(0, 40) as usize;
    format!("{x:.precision$}")
}

fn csv_escape(field: &str) -> String {
    if field.contains([',', '"', '\n']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

fn csv_line(cells: impl IntoIterator<Item = String>) -> String {
    let joined: Vec<String> = cells.into_iter().map(|c| csv_escape(&c)).collect();
    joined.join(",")
}

/// Render `record` in the requested format. The output always ends with
/// exactly one trailing newline.
pub fn render(record: &Record, format: Format, meta: Option<&Meta>) -> String {
    match format {
        Format::Json => render_json(record, meta),
        Format::Csv => render_csv(record),
        Format::Plain => render_plain(record, meta),
    }
}

fn fields_object(fields: &[(&'static str, Cell)]) -> Map<String, Value> {
    let mut map = Map::new();
    for (key, cell) in fields {
        map.insert((*key).into(), cell.json());
    }
    map
}

fn render_json(record: &Record, meta: Option<&Meta>) -> String {
    let mut root = Map::new();
    root.insert("command".into(), Value::String(record.command.into()));
    root.insert("params".into(), Value::Object(fields_object(&record.params)));

    let payload = match &record.payload {
        Payload::Fields(fields) => Value::Object(fields_object(fields)),
        Payload::WithTable {
            fields,
            table,
            header,
            rows,
        } => {
            let mut map = fields_object(fields);
            let row_values: Vec<Value> = if header.len() == 1 {
                rows.iter().map(|row| row[0].json()).collect()
            } else {
                rows.iter()
                    .map(|row| {
                        assert_eq!(row.len(), header.len(), "ragged table row");
                        let mut obj = Map::new();
                        for (key, cell) in header.iter().zip(row) {
                            obj.insert((*key).into(), cell.json());
                        }
                        Value::Object(obj)
                    })
                    .collect()
            };
            map.insert((*table).into(), Value::Array(row_values));
            Value::Object(map)
        }
    };
    root.insert("payload".into(), payload);

    if let Some(meta) = meta {
        let mut m = Map::new();
        m.insert("tool".into(), Value::String(meta.tool.into()));
        m.insert("version".into(), Value::String(meta.version.into()));
        root.insert("meta".into(), Value::Object(m));
    }

    let mut text = serde_json::to_string_pretty(&Value::Object(root)).expect("record serializes");
    text.push('\n');
    text
}

fn render_csv(record: &Record) -> String {
    let mut lines = Vec::new();
    match &record.payload {
        Payload::Fields(fields) => {
            lines.push(csv_line(fields.iter().map(|(k, _)| (*k).to_string())));
            lines.push(csv_line(fields.iter().map(|(_, c)| c.csv())));
        }
        Payload::WithTable { header, rows, .. } => {
            lines.push(csv_line(header.iter().map(|h| (*h).to_string())));
            for row in rows {
                lines.push(csv_line(row.iter().map(Cell::csv)));
            }
        }
    }
    lines.join("\n") + "\n"
}

fn render_plain(record: &Record, meta: Option<&Meta>) -> String {
    let params: Vec<String> = record
        .params
        .iter()
        .map(|(k, c)| format!("{k}={}", c.plain()))
        .collect();
    let mut lines = vec![format!("{} ({})", record.command, params.join(", "))];

    let push_fields = |lines: &mut Vec<String>, fields: &[(&'static str, Cell)]| {
        for (key, cell) in fields {
            lines.push(format!("{key}: {}", cell.plain()));
        }
    };
    match &record.payload {
        Payload::Fields(fields) => push_fields(&mut lines, fields),
        Payload::WithTable {
            fields,
            table,
            header,
            rows,
        } => {
            push_fields(&mut lines, fields);
            if header.len() == 1 {
                lines.push(format!("{table}:"));
            } else {
                lines.push(format!("{table} ({}):", header.join(", ")));
            }
            for row in rows {
                let cells: Vec<String> = row.iter().map(Cell::plain).collect();
                lines.push(format!("  {}", cells.join("  ")));
            }
        }
    }
    if let Some(meta) = meta {
        lines.push(format!("meta: {} {}", meta.tool, meta.version));
    }
    lines.join("\n") + "\n"
}
