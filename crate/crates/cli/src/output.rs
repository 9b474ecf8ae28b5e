use std::io::Write;
use std::path::Path;

use num_complex::Complex64;
use serde_json::Value;

use crate::error::{CliError, CliResult};

/// Writes `text` to `out`, or to stdout when no path is given.
pub fn emit(text: &str, out: Option<&Path>) -> CliResult<()> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|source| CliError::Io {
                    path: "<stdout>".into(),
                    source,
                })
        }
    }
}

pub fn json(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("JSON values always serialize");
    text.push('\n');
    text
}

pub fn csv<S: AsRef<str>>(header: &[&str], rows: &[Vec<S>]) -> CliResult<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(header)?;
    for row in rows {
        writer.write_record(row.iter().map(AsRef::as_ref))?;
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| csv::Error::from(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("CSV input was UTF-8"))
}

/// Left-aligned columns separated by two spaces.
pub fn table<S: AsRef<str>>(rows: &[Vec<S>]) -> String {
    let columns = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut widths = vec![0; columns];
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.as_ref().chars().count());
        }
    }
    let mut text = String::new();
    for row in rows {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            let cell = cell.as_ref();
            line.push_str(cell);
            if i + 1 < row.len() {
                let pad = widths[i] - cell.chars().count() + 2;
                line.push_str(&" ".repeat(pad));
            }
        }
        text.push_str(line.trim_end());
        text.push('\n');
    }
    text
}

fn real(x: f64) -> String {
    let rounded = x.round();
    if (x - rounded).abs() < 1e-9 {
        format!("{}", rounded as i64)
    } else {
        let s = format!("{x:.6}");
        s.trim_end_matches('0').to_string()
    }
}

/// Compact complex formatting: `1`, `-i`, `2i`, `0.309017+0.951057i`.
pub fn complex(z: Complex64) -> String {
    let re_zero = z.re.abs() < 1e-9;
    let im_zero = z.im.abs() < 1e-9;
    let imag = |y: f64| match real(y).as_str() {
        "1" => "i".to_string(),
        "-1" => "-i".to_string(),
        s => format!("{s}i"),
    };
    match (re_zero, im_zero) {
        (_, true) => real(z.re),
        (true, false) => imag(z.im),
        (false, false) => {
            let im = imag(z.im);
            if im.starts_with('-') {
                format!("{}{im}", real(z.re))
            } else {
                format!("{}+{im}", real(z.re))
            }
        }
    }
}

pub fn list<T: ToString>(values: &[T]) -> String {
    let parts: Vec<String> = values.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(","))
}
