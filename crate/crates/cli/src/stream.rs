//! Census that appends certificates to a JSON-lines file as it goes, so an
//! interrupted run can pick up where it stopped.

use std::collections::BTreeMap;
use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use annulus_core::budget::ExtNuFloor;
use annulus_core::verifier::census::summarize;
use annulus_core::verifier::{certify_all, enumerate_with, CensusOptions, CensusReport, Certificate, NormalForm};
use annulus_core::AnnulusProfile;
use serde::{Deserialize, Serialize};

const CHUNK: usize = 4096;

/// First line of the partial file; a resumed run must match it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct Header {
    max_exponent: i64,
    n_points: usize,
    extnu_floor: ExtNuFloor,
    normal_form: NormalForm,
}

impl Header {
    fn of(options: &CensusOptions) -> Self {
        Header {
            max_exponent: options.max_exponent,
            n_points: options.n_points,
            extnu_floor: options.floor,
            normal_form: options.normal_form,
        }
    }
}

pub fn partial_path(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".partial.jsonl");
    PathBuf::from(name)
}

/// Reads certificates from an earlier run; a torn last line is dropped.
fn load_partial(path: &Path, header: &Header) -> Result<Vec<Certificate>, String> {
    let file = File::open(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let mut lines = BufReader::new(file).lines();
    let first = lines
        .next()
        .transpose()
        .map_err(|e| e.to_string())?
        .ok_or_else(|| format!("{} is empty", path.display()))?;
    let found: Header = serde_json::from_str(&first).map_err(|e| format!("bad header in {}: {e}", path.display()))?;
    if found != *header {
        return Err(format!("{} was written with different options", path.display()));
    }
    let mut certs = Vec::new();
    for line in lines {
        let line = line.map_err(|e| e.to_string())?;
        match serde_json::from_str(&line) {
            Ok(cert) => certs.push(cert),
            Err(_) => break,
        }
    }
    Ok(certs)
}

fn write_line<T: Serialize>(w: &mut impl Write, value: &T) -> Result<(), String> {
    serde_json::to_writer(&mut *w, value).map_err(|e| e.to_string())?;
    w.write_all(b"\n").map_err(|e| e.to_string())
}

/// Runs the census; with `out` set, progress is streamed next to it and
/// `resume` reuses an existing partial file.
pub fn run(options: &CensusOptions, out: Option<&Path>, resume: bool) -> Result<CensusReport, String> {
    let enumeration = enumerate_with(options.max_exponent, options.n_points, options.normal_form);
    let header = Header::of(options);
    let Some(out) = out else {
        let certs = certify_all(&enumeration.profiles, options.optimizer(), options.workers).map_err(|e| e.to_string())?;
        let summary = summarize(options, &certs, enumeration.rejected);
        return Ok(CensusReport { certificates: certs, summary });
    };

    let partial = partial_path(out);
    let mut done: BTreeMap<AnnulusProfile, Certificate> = BTreeMap::new();
    if resume && partial.exists() {
        for cert in load_partial(&partial, &header)? {
            done.insert(cert.profile, cert);
        }
    }
    // rewrite so that a torn line from an earlier crash is gone
    {
        let file = File::create(&partial).map_err(|e| format!("{}: {e}", partial.display()))?;
        let mut w = BufWriter::new(file);
        write_line(&mut w, &header)?;
        for cert in done.values() {
            write_line(&mut w, cert)?;
        }
        w.flush().map_err(|e| e.to_string())?;
    }
    let todo: Vec<AnnulusProfile> = enumeration
        .profiles
        .iter()
        .filter(|p| !done.contains_key(p))
        .copied()
        .collect();
    let file = OpenOptions::new()
        .append(true)
        .open(&partial)
        .map_err(|e| format!("{}: {e}", partial.display()))?;
    let mut w = BufWriter::new(file);
    for chunk in todo.chunks(CHUNK) {
        let certs = certify_all(chunk, options.optimizer(), options.workers).map_err(|e| e.to_string())?;
        for cert in certs {
            write_line(&mut w, &cert)?;
            done.insert(cert.profile, cert);
        }
        w.flush().map_err(|e| e.to_string())?;
    }
    drop(w);

    let certificates: Vec<Certificate> = done.into_values().collect();
    let summary = summarize(options, &certificates, enumeration.rejected);
    let report = CensusReport { certificates, summary };
    let text = annulus_core::export::to_sorted_json(&report).map_err(|e| e.to_string())?;
    fs::write(out, text).map_err(|e| format!("{}: {e}", out.display()))?;
    fs::remove_file(&partial).map_err(|e| format!("{}: {e}", partial.display()))?;
    Ok(report)
}
