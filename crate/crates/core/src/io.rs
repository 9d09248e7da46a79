//! Edge-list and role-file text formats.
//!
//! Edge list: one `src,dst` per line, optional `src,dst` header, blank lines
//! and `#` comments ignored. Role file: `node,role` rows with an optional
//! `node,role` header; roles are matched case-insensitively.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{EdgeList, EdgeRecord, Graph, NodeId, Role, RoleRecord};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn is_header(line: &str, a: &str, b: &str) -> bool {
    let mut parts = line.split(',').map(|p| p.trim().to_ascii_lowercase());
    parts.next().as_deref() == Some(a) && parts.next().as_deref() == Some(b) && parts.next().is_none()
}

fn two_fields(line: usize, text: &str) -> Result<(&str, &str)> {
    let mut parts = text.split(',');
    match (parts.next(), parts.next(), parts.next()) {
        (Some(a), Some(b), None) => Ok((a.trim(), b.trim())),
        _ => Err(Error::Parse { line, message: format!("expected two comma-separated fields, got {text:?}") }),
    }
}

fn node_id(line: usize, field: &str) -> Result<NodeId> {
    field.parse().map_err(|_| Error::Parse { line, message: format!("invalid node id {field:?}") })
}

pub fn parse_edge_list(text: &str) -> Result<EdgeList> {
    let mut records = Vec::new();
    for (k, (line, l)) in content_lines(text).enumerate() {
        if k == 0 && is_header(l, "src", "dst") {
            continue;
        }
        let (a, b) = two_fields(line, l)?;
        records.push(EdgeRecord { src: node_id(line, a)?, dst: node_id(line, b)?, line });
    }
    Ok(EdgeList { records })
}

pub fn parse_roles(text: &str) -> Result<Vec<RoleRecord>> {
    let mut out = Vec::new();
    for (k, (line, l)) in content_lines(text).enumerate() {
        if k == 0 && is_header(l, "node", "role") {
            continue;
        }
        let (a, b) = two_fields(line, l)?;
        let role: Role = b.parse().map_err(|message| Error::Parse { line, message })?;
        out.push(RoleRecord { node: node_id(line, a)?, role, line });
    }
    Ok(out)
}

pub fn read_edge_list(path: impl AsRef<Path>) -> Result<EdgeList> {
    parse_edge_list(&std::fs::read_to_string(path)?)
}

pub fn read_roles(path: impl AsRef<Path>) -> Result<Vec<RoleRecord>> {
    parse_roles(&std::fs::read_to_string(path)?)
}

/// Reads an edge list and optional role file into a graph.
pub fn load_graph(edges: impl AsRef<Path>, roles: Option<&Path>) -> Result<Graph> {
    let list = read_edge_list(edges)?;
    let roles = roles.map(read_roles).transpose()?;
    Graph::from_edge_list(&list, roles.as_deref())
}

/// One `lo,hi` line per edge in ascending order, no header. Isolated nodes
/// are not representable in this format.
pub fn format_edge_list(g: &Graph) -> String {
    let mut s = String::with_capacity(g.edge_count() * 12);
    for (a, b) in g.edges() {
        let _ = writeln!(s, "{a},{b}");
    }
    s
}

/// `node,role` header followed by every node whose role is known.
pub fn format_roles(g: &Graph) -> String {
    let mut s = String::from("node,role\n");
    for (id, role) in g.roles().filter(|(_, r)| *r != Role::Unknown) {
        let _ = writeln!(s, "{id},{role}");
    }
    s
}
