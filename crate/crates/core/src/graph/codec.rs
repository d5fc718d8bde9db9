//! graph6 and plain edge-list codecs.

use super::Graph;
use crate::error::{Error, Result};
use std::fmt::Write as _;

const BIAS: u8 = 63;
const HEADER: &str = ">>graph6<<";

fn push_size(out: &mut String, n: usize) {
    if n <= 62 {
        out.push((n as u8 + BIAS) as char);
    } else if n <= 258_047 {
        out.push(126 as char);
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + BIAS) as char);
        }
    } else {
        out.push(126 as char);
        out.push(126 as char);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + BIAS) as char);
        }
    }
}

/// Encodes `g` as a graph6 string (no header, no trailing newline).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + BIAS) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + BIAS) as char);
    }
    out
}

fn sextet(bytes: &[u8], at: usize) -> Result<u8> {
    match bytes.get(at) {
        Some(&b) if (63..=126).contains(&b) => Ok(b - BIAS),
        Some(&b) => Err(Error::parse(
            at,
            format!("byte 0x{b:02x} outside graph6 range"),
        )),
        None => Err(Error::parse(at, "unexpected end of input")),
    }
}

/// Decodes one graph6 string. An optional `>>graph6<<` header and surrounding
/// whitespace are accepted; error offsets index into the given text.
pub fn decode_graph6(text: &str) -> Result<Graph> {
    let lead = text.len() - text.trim_start().len();
    let mut body = text.trim();
    let mut base = lead;
    if let Some(rest) = body.strip_prefix(HEADER) {
        body = rest;
        base += HEADER.len();
    }
    let bytes = body.as_bytes();
    match bytes.first() {
        None => return Err(Error::parse(base, "empty graph6 string")),
        Some(b':') => return Err(Error::parse(base, "sparse6 is not supported")),
        Some(b'&') => return Err(Error::parse(base, "digraph6 is not supported")),
        _ => {}
    }
    let locate = |e: Error| match e {
        Error::Parse { offset, message } => Error::Parse {
            offset: offset + base,
            message,
        },
        other => other,
    };

    let (n, mut pos) = if bytes[0] != 126 {
        (sextet(bytes, 0).map_err(locate)? as usize, 1)
    } else if bytes.get(1) != Some(&126) {
        let mut n = 0usize;
        for i in 1..4 {
            n = (n << 6) | sextet(bytes, i).map_err(locate)? as usize;
        }
        (n, 4)
    } else {
        let mut n = 0usize;
        for i in 2..8 {
            n = (n << 6) | sextet(bytes, i).map_err(locate)? as usize;
        }
        (n, 8)
    };

    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    if bytes.len() != pos + needed {
        let at = (pos + needed).min(bytes.len());
        return Err(locate(Error::parse(
            at,
            format!(
                "expected {} edge bytes for n={n}, found {}",
                needed,
                bytes.len().saturating_sub(pos)
            ),
        )));
    }

    let mut g = Graph::empty(n);
    let (mut i, mut j) = (0usize, 1usize);
    let mut seen = 0;
    while seen < bits {
        let chunk = sextet(bytes, pos).map_err(locate)?;
        for b in (0..6).rev() {
            if seen == bits {
                if chunk & ((1 << (b + 1)) - 1) != 0 {
                    return Err(locate(Error::parse(pos, "non-zero padding bits")));
                }
                break;
            }
            if chunk >> b & 1 == 1 {
                g.add_edge(i, j);
            }
            seen += 1;
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
        }
        pos += 1;
    }
    Ok(g)
}

/// `n <count>` header followed by one `u v` line per edge in canonical order.
pub fn encode_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Parses the edge-list format. Blank lines and `#` comments are skipped.
pub fn decode_edge_list(text: &str) -> Result<Graph> {
    let mut n = None;
    let mut edges = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let here = offset;
        offset += line.len();
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        match (n, fields.as_slice()) {
            (None, ["n", count]) => {
                n = Some(
                    count
                        .parse::<usize>()
                        .map_err(|_| Error::parse(here, format!("bad vertex count {count:?}")))?,
                );
            }
            (None, _) => return Err(Error::parse(here, "expected header `n <count>`")),
            (Some(_), [u, v]) => {
                let u = u
                    .parse::<usize>()
                    .map_err(|_| Error::parse(here, format!("bad vertex {u:?}")))?;
                let v = v
                    .parse::<usize>()
                    .map_err(|_| Error::parse(here, format!("bad vertex {v:?}")))?;
                edges.push((here, u, v));
            }
            (Some(_), _) => return Err(Error::parse(here, "expected `u v`")),
        }
    }
    let n = n.ok_or_else(|| Error::parse(0, "missing header `n <count>`"))?;
    let mut g = Graph::empty(n);
    for (at, u, v) in edges {
        if u >= n || v >= n || u == v {
            return Err(Error::parse(at, format!("invalid edge {u} {v} for n={n}")));
        }
        g.add_edge(u, v);
    }
    Ok(g)
}

/// Reads either format: edge lists start with an `n` header line, anything
/// else is treated as graph6 on the first non-blank line.
pub fn parse_graph_text(text: &str) -> Result<Graph> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l == "n" || l.starts_with("n ") => decode_edge_list(text),
        Some(l) => {
            let at = text.find(l).unwrap_or(0);
            decode_graph6(l).map_err(|e| match e {
                Error::Parse { offset, message } => Error::Parse {
                    offset: offset + at,
                    message,
                },
                other => other,
            })
        }
        None => Err(Error::parse(0, "no graph found")),
    }
}
