//! Text formats for graphs, interval representations, set-cover instances
//! and codes. All formats are whitespace-separated, LF-terminated, and skip
//! blank lines and lines starting with `#`.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::interval::{Interval, IntervalRep};
use crate::lp::Rational;
use crate::reductions::SetCover1Instance;

fn parse(line: usize, msg: impl Into<String>) -> Error {
    Error::parse(line, msg)
}

/// Non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.trim();
        (!line.is_empty() && !line.starts_with('#'))
            .then(|| (i + 1, line.split_whitespace().collect()))
    })
}

fn field<T: FromStr>(line: usize, token: &str, what: &str) -> Result<T> {
    token
        .parse()
        .map_err(|_| parse(line, format!("bad {what} '{token}'")))
}

fn expect_len(line: usize, tokens: &[&str], n: usize) -> Result<()> {
    if tokens.len() == n {
        Ok(())
    } else {
        Err(parse(line, format!("expected {n} fields, got {}", tokens.len())))
    }
}

/// Edge list: `n m`, then `m` lines `u v` with 0-based ids.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| parse(1, "missing header 'n m'"))?;
    expect_len(hl, &header, 2)?;
    let n: usize = field(hl, header[0], "vertex count")?;
    let m: usize = field(hl, header[1], "edge count")?;
    let mut edges = Vec::with_capacity(m);
    for (line, tokens) in lines {
        expect_len(line, &tokens, 2)?;
        let u: usize = field(line, tokens[0], "vertex")?;
        let v: usize = field(line, tokens[1], "vertex")?;
        if u >= n || v >= n {
            return Err(parse(line, format!("edge {u} {v} outside 0..{n}")));
        }
        if u == v {
            return Err(parse(line, format!("self-loop at {u}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(parse(hl, format!("header declares {m} edges, found {}", edges.len())));
    }
    let mut sorted: Vec<_> = edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::InvalidInput(format!(
            "duplicate edge {} {}",
            w[0].0, w[0].1
        )));
    }
    Graph::from_edges(n, edges)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Accepts `7`, `-3`, `2.25` and `5/4`.
pub fn parse_rational(token: &str) -> Option<Rational> {
    if let Some((num, den)) = token.split_once('/') {
        let num: BigInt = num.parse().ok()?;
        let den: BigInt = den.parse().ok()?;
        return (!den.is_zero()).then(|| Rational::new(num, den));
    }
    let (negative, body) = match token.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, token.strip_prefix('+').unwrap_or(token)),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && frac.is_empty() {
        return None;
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{whole}{frac}");
    let num: BigInt = if digits.is_empty() {
        BigInt::zero()
    } else {
        digits.parse().ok()?
    };
    let den = (0..frac.len()).fold(BigInt::one(), |d, _| d * 10);
    let value = Rational::new(num, den);
    Some(if negative { -value } else { value })
}

/// Interval file: `n`, then `n` lines `id begin end` with 0-based ids, each
/// id exactly once.
pub fn parse_intervals(text: &str) -> Result<IntervalRep> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| parse(1, "missing header 'n'"))?;
    expect_len(hl, &header, 1)?;
    let n: usize = field(hl, header[0], "vertex count")?;
    let mut slots: Vec<Option<Interval>> = vec![None; n];
    for (line, tokens) in lines {
        expect_len(line, &tokens, 3)?;
        let id: usize = field(line, tokens[0], "id")?;
        let begin = parse_rational(tokens[1]).ok_or_else(|| parse(line, "bad begin"))?;
        let end = parse_rational(tokens[2]).ok_or_else(|| parse(line, "bad end"))?;
        let slot = slots
            .get_mut(id)
            .ok_or_else(|| parse(line, format!("id {id} outside 0..{n}")))?;
        if slot.is_some() {
            return Err(parse(line, format!("id {id} repeated")));
        }
        *slot = Some(Interval::new(begin, end));
    }
    let intervals = slots
        .into_iter()
        .enumerate()
        .map(|(id, s)| s.ok_or_else(|| parse(hl, format!("no interval for id {id}"))))
        .collect::<Result<Vec<_>>>()?;
    IntervalRep::new(intervals)
}

pub fn write_intervals(rep: &IntervalRep) -> String {
    let mut out = format!("{}\n", rep.len());
    for (id, iv) in rep.intervals().iter().enumerate() {
        let _ = writeln!(out, "{id} {} {}", iv.begin, iv.end);
    }
    out
}

/// Set-cover file: `n k`, then `k` lines `c e1 … ec` with 1-based elements.
pub fn parse_setcover(text: &str) -> Result<SetCover1Instance> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| parse(1, "missing header 'n k'"))?;
    expect_len(hl, &header, 2)?;
    let n: usize = field(hl, header[0], "element count")?;
    let k: usize = field(hl, header[1], "set count")?;
    let mut sets = Vec::with_capacity(k);
    for (line, tokens) in lines {
        let c: usize = field(line, tokens[0], "set size")?;
        expect_len(line, &tokens, c + 1)?;
        let set = tokens[1..]
            .iter()
            .map(|t| {
                let e: usize = field(line, t, "element")?;
                if e == 0 || e > n {
                    return Err(parse(line, format!("element {e} outside 1..={n}")));
                }
                Ok(e - 1)
            })
            .collect::<Result<Vec<_>>>()?;
        sets.push(set);
    }
    if sets.len() != k {
        return Err(parse(hl, format!("header declares {k} sets, found {}", sets.len())));
    }
    SetCover1Instance::new(n, sets)
}

pub fn write_setcover(sc: &SetCover1Instance) -> String {
    let mut out = format!("{} {}\n", sc.ground_size(), sc.sets().len());
    for set in sc.sets() {
        let _ = write!(out, "{}", set.len());
        for e in set {
            let _ = write!(out, " {}", e + 1);
        }
        out.push('\n');
    }
    out
}

/// Comma- or whitespace-separated 0-based vertex ids; empty means no ids.
pub fn parse_code(text: &str, n: usize) -> Result<VertexSet> {
    let ids = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::InvalidInput(format!("bad vertex id '{t}'")))
        })
        .collect::<Result<Vec<_>>>()?;
    VertexSet::new(n, ids)
}

pub fn format_ids(ids: impl IntoIterator<Item = usize>) -> String {
    ids.into_iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}
