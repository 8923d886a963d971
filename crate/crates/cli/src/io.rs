use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use shiftlab::{graph_from_json, AcyclicDigraph, ParsedGraph, ToDot, UndirectedGraph};

use crate::error::{CliError, CliResult};

pub fn read_file(path: &Path) -> CliResult<Vec<u8>> {
    fs::read(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn read_graph(path: &Path) -> CliResult<ParsedGraph> {
    Ok(graph_from_json(&read_file(path)?)?)
}

/// The undirected graph, or the underlying graph of a directed input.
pub fn read_undirected(path: &Path) -> CliResult<Arc<UndirectedGraph>> {
    Ok(Arc::new(read_graph(path)?.into_undirected()))
}

pub fn read_digraph(path: &Path) -> CliResult<AcyclicDigraph> {
    match read_graph(path)? {
        ParsedGraph::Directed(d) => Ok(d),
        ParsedGraph::Undirected(_) => Err(CliError::Usage(format!(
            "{} holds an undirected graph; this command needs \"directed\": true",
            path.display()
        ))),
    }
}

/// Writes `text` to `dest`, or to stdout when no file is given.
pub fn emit(dest: Option<&Path>, text: &str) -> CliResult<()> {
    let mut text = text.to_owned();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match dest {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        }),
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: PathBuf::from("<stdout>"),
                source,
            }),
    }
}

/// Prints a human summary: to stdout when the payload went to a file,
/// otherwise to stderr so stdout stays machine-readable.
pub fn summary(dest: Option<&Path>, line: &str) {
    if dest.is_some() {
        println!("{line}");
    } else {
        eprintln!("{line}");
    }
}

/// Graph payload in the requested format.
pub fn render<G: ToDot>(g: &G, json: impl FnOnce(&G) -> String, dot: bool) -> String {
    if dot {
        g.to_dot()
    } else {
        json(g)
    }
}
