use std::collections::BTreeMap;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::Failure;

/// An input file read once, so the digest always matches what was parsed.
pub struct Input {
    pub path: PathBuf,
    pub text: String,
    pub sha256: String,
}

impl Input {
    pub fn read(path: &Path) -> Result<Input, Failure> {
        let bytes = std::fs::read(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
        let sha256 = hex::encode(Sha256::digest(&bytes));
        let text =
            String::from_utf8(bytes).map_err(|_| Failure::input(format!("{}: not valid UTF-8", path.display())))?;
        Ok(Input { path: path.to_owned(), text, sha256 })
    }
}

#[derive(Serialize)]
struct InputDigest {
    role: String,
    path: String,
    sha256: String,
}

#[derive(Serialize)]
pub struct Manifest {
    command: &'static str,
    inputs: Vec<InputDigest>,
    seed: Option<u64>,
    params: BTreeMap<String, String>,
    tool_version: String,
}

impl Manifest {
    pub fn new(command: &'static str) -> Self {
        Manifest {
            command,
            inputs: Vec::new(),
            seed: None,
            params: BTreeMap::new(),
            tool_version: format!("netresil {}", env!("CARGO_PKG_VERSION")),
        }
    }

    pub fn input(&mut self, role: &str, input: &Input) {
        self.inputs.push(InputDigest {
            role: role.to_owned(),
            path: input.path.display().to_string(),
            sha256: input.sha256.clone(),
        });
    }

    pub fn seed(&mut self, seed: u64) {
        self.seed = Some(seed);
    }

    pub fn param(&mut self, key: &str, value: impl ToString) {
        self.params.insert(key.to_owned(), value.to_string());
    }
}

/// Result files of one command, held in memory until everything succeeded.
pub struct Outputs {
    files: Vec<(&'static str, String)>,
}

impl Outputs {
    pub fn new() -> Self {
        Outputs { files: Vec::new() }
    }

    pub fn add(&mut self, name: &'static str, contents: String) {
        self.files.push((name, contents));
    }

    pub fn json(&mut self, name: &'static str, value: &impl Serialize) {
        let mut text = serde_json::to_string_pretty(value).expect("serializable output");
        text.push('\n');
        self.add(name, text);
    }

    /// Writes every file plus `manifest.json` into `dir`. Each file goes to a
    /// temporary sibling first and is renamed into place.
    pub fn commit(mut self, dir: &Path, manifest: &Manifest) -> Result<(), Failure> {
        self.json("manifest.json", manifest);
        std::fs::create_dir_all(dir).map_err(|e| Failure::io(dir, e))?;
        let mut staged = Vec::with_capacity(self.files.len());
        for (name, contents) in &self.files {
            let mut tmp = tempfile::Builder::new()
                .prefix(&format!(".{name}."))
                .tempfile_in(dir)
                .map_err(|e| Failure::io(dir, e))?;
            tmp.write_all(contents.as_bytes()).map_err(|e| Failure::io(tmp.path(), e))?;
            staged.push((tmp, dir.join(name)));
        }
        for (tmp, target) in staged {
            tmp.persist(&target).map_err(|e| Failure::io(&target, e.error))?;
        }
        Ok(())
    }
}
