//! One function per subcommand, each returning a JSON report and an exit code.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde_json::{json, Value};

use seqspec_core::corpus::{self, is_small};
use seqspec_core::cospectrum::{
    frame_predicate, realize_left_adjoint, standard_frame, standard_frame_comparison, TruncatedCospectrum,
};
use seqspec_core::json::{homology_doc, spectrum_to_string, CospectrumDoc, SpectrumDoc};
use seqspec_core::limits::limits;
use seqspec_core::simplicial::{sphere, Budget};
use seqspec_core::smash_product::{commute_check, kunneth_compare, make_partition, naive_smash, twist_iso};
use seqspec_core::smash_product::{PartitionFunction, PartitionSpec};
use seqspec_core::spectra::{adjunction_check, coequalizer_presentation, stable_homology, Spectrum};
use seqspec_core::Error;

pub const OK: u8 = 0;
pub const FAILED: u8 = 1;
pub const INVALID: u8 = 2;
pub const OVER_BUDGET: u8 = 3;

pub struct Outcome {
    pub report: Value,
    pub code: u8,
    pub summary: String,
}

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
    pub index: Option<usize>,
}

impl CliError {
    pub fn parse(message: impl Into<String>) -> Self {
        CliError { code: INVALID, message: message.into(), index: None }
    }

    pub fn report(&self) -> Value {
        let mut r = json!({ "error": self.message, "exit": self.code });
        if let Some(i) = self.index {
            r["index"] = json!(i);
        }
        r
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::BudgetExceeded { .. }) { OVER_BUDGET } else { INVALID };
        let index = match e {
            Error::Partition { index, .. } => Some(index),
            _ => None,
        };
        CliError { code, message: e.to_string(), index }
    }
}

/// The worse of two exit codes, ranked failed verdict, invalid input, spent budget, success.
fn worst(a: u8, b: u8) -> u8 {
    let rank = |c| match c {
        FAILED => 3,
        INVALID => 2,
        OVER_BUDGET => 1,
        _ => 0,
    };
    if rank(b) > rank(a) {
        b
    } else {
        a
    }
}

fn id(path: &Path) -> String {
    path.file_stem().map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned())
}

fn load(path: &Path) -> Result<Arc<Spectrum>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::parse(format!("cannot read {}: {e}", path.display())))?;
    let doc: SpectrumDoc =
        serde_json::from_str(&text).map_err(|e| CliError::parse(format!("{}: {e}", path.display())))?;
    doc.build()
        .map(Arc::new)
        .map_err(|e| CliError { message: format!("{}: {e}", path.display()), ..CliError::from(e) })
}

/// Files as given; directories contribute their `.json` files in name order.
fn expand(inputs: &[PathBuf]) -> Result<Vec<PathBuf>, CliError> {
    let mut out = Vec::new();
    for p in inputs {
        if p.is_dir() {
            let entries = std::fs::read_dir(p).map_err(|e| CliError::parse(format!("cannot list {}: {e}", p.display())))?;
            let mut files: Vec<PathBuf> = entries
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|f| f.extension().is_some_and(|x| x == "json"))
                .collect();
            files.sort();
            out.extend(files);
        } else {
            out.push(p.clone());
        }
    }
    Ok(out)
}

fn partition(text: &str) -> Result<PartitionFunction, CliError> {
    let spec = PartitionSpec::parse(text)?;
    Ok(make_partition(&spec, limits().max_level)?)
}

fn budget(requested: Option<u64>) -> Result<u64, CliError> {
    match requested {
        Some(0) => Err(CliError::parse("--budget must be positive")),
        Some(b) => Ok(b),
        None => Ok(limits().budget),
    }
}

pub fn validate(inputs: &[PathBuf]) -> Result<Outcome, CliError> {
    let mut entries = Vec::new();
    let mut bad = 0;
    for path in expand(inputs)? {
        match load(&path) {
            Ok(a) => entries.push(json!({ "input": id(&path), "valid": true, "truncation": a.truncation() })),
            Err(e) => {
                bad += 1;
                entries.push(json!({ "input": id(&path), "valid": false, "error": e.message }));
            }
        }
    }
    let code = if bad == 0 { OK } else { INVALID };
    let summary = format!("validate: {} of {} inputs valid", entries.len() - bad, entries.len());
    Ok(Outcome { report: json!({ "command": "validate", "inputs": entries }), code, summary })
}

pub fn homology(input: &Path) -> Result<Outcome, CliError> {
    let a = load(input)?;
    let h = stable_homology(&a)?;
    let summary = format!("homology of {}: {h}", id(input));
    let report = json!({
        "command": "homology",
        "input": id(input),
        "truncation": a.truncation(),
        "homology": homology_doc(&h),
    });
    Ok(Outcome { report, code: OK, summary })
}

pub fn smash(a: &Path, b: &Path, q: &str, spectrum_out: Option<&Path>) -> Result<Outcome, CliError> {
    let q = partition(q)?;
    let (x, y) = (load(a)?, load(b)?);
    let s = naive_smash(&x, &y, &q)?;
    let twist = twist_iso(&x, &y, &q)?;
    let twist_ok = twist.forward.is_levelwise_iso() && twist.two_sided()?;
    if let Some(path) = spectrum_out {
        std::fs::write(path, spectrum_to_string(s.spectrum()) + "\n")
            .map_err(|e| CliError::parse(format!("cannot write {}: {e}", path.display())))?;
    }
    let h = stable_homology(s.spectrum())?;
    let report = json!({
        "command": "smash",
        "pair": [id(a), id(b)],
        "q": q.name(),
        "truncation": s.spectrum().truncation(),
        "level_sizes": s.spectrum().levels().iter().map(|l| l.total_count()).collect::<Vec<_>>(),
        "homology": homology_doc(&h),
        "twist_iso": twist_ok,
    });
    let summary = format!("smash {} ^ {} along {}: {h}, twist {twist_ok}", id(a), id(b), q.name());
    Ok(Outcome { report, code: if twist_ok { OK } else { FAILED }, summary })
}

pub fn kunneth(a: &Path, b: &Path, q: &str) -> Result<Outcome, CliError> {
    let q = partition(q)?;
    let (x, y) = (load(a)?, load(b)?);
    let r = kunneth_compare(&x, &y, &q)?;
    let report = json!({
        "command": "kunneth",
        "pair": [id(a), id(b)],
        "q": q.name(),
        "homology_left": homology_doc(&r.left),
        "homology_right": homology_doc(&r.right),
        "equal": r.equal,
    });
    let summary = format!("kunneth {} ^ {}: {} vs {}, equal {}", id(a), id(b), r.left, r.right, r.equal);
    Ok(Outcome { report, code: if r.equal { OK } else { FAILED }, summary })
}

pub fn verify_coeq(inputs: &[PathBuf]) -> Result<Outcome, CliError> {
    let mut entries = Vec::new();
    let mut isos = 0;
    for path in expand(inputs)? {
        let a = load(&path)?;
        let iso = coequalizer_presentation(&a)?.is_iso();
        isos += usize::from(iso);
        entries.push(json!({ "input": id(&path), "truncation": a.truncation(), "iso": iso }));
    }
    let code = if isos == entries.len() { OK } else { FAILED };
    let summary = format!("verify-coeq: {isos}/{} isomorphism witnesses", entries.len());
    Ok(Outcome { report: json!({ "command": "verify-coeq", "inputs": entries }), code, summary })
}

/// One triple; a spent budget is reported in place rather than aborting the run.
fn adjunction_entry(n: usize, k: usize, b: &Arc<Spectrum>, limit: u64) -> Result<(Value, u8), CliError> {
    match adjunction_check(n, &sphere(k), b, &mut Budget::new(limit)) {
        Ok(r) => {
            let v = json!({
                "level": n,
                "sphere": k,
                "spectrum_maps": r.spectrum_maps,
                "pointed_maps": r.pointed_maps,
                "restriction": r.restriction,
                "bijective": r.bijective,
            });
            Ok((v, if r.bijective { OK } else { FAILED }))
        }
        Err(Error::BudgetExceeded { budget }) => {
            Ok((json!({ "level": n, "sphere": k, "budget_exceeded": budget }), OVER_BUDGET))
        }
        Err(e) => Err(e.into()),
    }
}

pub fn verify_adjunction(inputs: &[PathBuf], levels: &[usize], spheres: &[usize], limit: Option<u64>) -> Result<Outcome, CliError> {
    let limit = budget(limit)?;
    let levels = if levels.is_empty() { vec![0, 1, 2] } else { levels.to_vec() };
    let spheres = if spheres.is_empty() { vec![0, 1] } else { spheres.to_vec() };
    let mut entries = Vec::new();
    let mut code = OK;
    let (mut done, mut passed) = (0, 0);
    for path in expand(inputs)? {
        let b = load(&path)?;
        for &n in &levels {
            for &k in &spheres {
                let (mut v, c) = adjunction_entry(n, k, &b, limit)?;
                v["input"] = json!(id(&path));
                done += usize::from(c != OVER_BUDGET);
                passed += usize::from(c == OK);
                code = worst(code, c);
                entries.push(v);
            }
        }
    }
    let summary = format!("verify-adjunction: {passed}/{done} bijections, {} over budget", entries.len() - done);
    Ok(Outcome { report: json!({ "command": "verify-adjunction", "budget": limit, "triples": entries }), code, summary })
}

fn load_cospectrum(path: &Path) -> Result<TruncatedCospectrum, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::parse(format!("cannot read {}: {e}", path.display())))?;
    let doc: CospectrumDoc =
        serde_json::from_str(&text).map_err(|e| CliError::parse(format!("{}: {e}", path.display())))?;
    Ok(doc.build()?)
}

pub fn verify_frame(inputs: &[PathBuf], degree: usize, cospectrum: Option<&Path>) -> Result<Outcome, CliError> {
    let (x, name, standard) = match cospectrum {
        Some(p) => (load_cospectrum(p)?, id(p), false),
        None => (standard_frame(degree)?, format!("standard({degree})"), true),
    };
    let predicate = frame_predicate(&x)?;
    let mut entries = Vec::new();
    let mut recovered = true;
    for path in expand(inputs)? {
        let a = load(&path)?;
        if a.truncation() > x.degree() {
            entries.push(json!({ "input": id(&path), "skipped": "truncation exceeds the cospectrum degree" }));
            continue;
        }
        let r = realize_left_adjoint(&x, &a)?;
        let mut v = json!({
            "input": id(&path),
            "realized_homology": homology_doc(&stable_homology(r.spectrum())?),
        });
        if standard {
            let iso = standard_frame_comparison(&x, &r, &a)?.is_levelwise_iso();
            recovered &= iso;
            v["iso"] = json!(iso);
        }
        entries.push(v);
    }
    let pass = predicate.holds && recovered;
    let report = json!({
        "command": "verify-frame",
        "frame": name,
        "degree": x.degree(),
        "label": predicate.label,
        "cofibrant": predicate.cofibrant,
        "equivalences": predicate.equivalences,
        "holds": predicate.holds,
        "inputs": entries,
    });
    let summary = format!("verify-frame {name}: predicate {}, inputs recovered {recovered}", predicate.holds);
    Ok(Outcome { report, code: if pass { OK } else { FAILED }, summary })
}

pub fn corpus_run(inputs: &[PathBuf], q: &str, limit: Option<u64>) -> Result<Outcome, CliError> {
    let q = partition(q)?;
    let limit = budget(limit)?;
    let frame = standard_frame(3)?;
    let mut spectra: BTreeMap<String, Arc<Spectrum>> = BTreeMap::new();
    let mut per_input = serde_json::Map::new();
    let mut code = OK;
    for path in expand(inputs)? {
        let key = id(&path);
        let a = match load(&path) {
            Ok(a) => a,
            Err(e) => {
                code = worst(code, e.code);
                per_input.insert(key, json!({ "valid": false, "error": e.message }));
                continue;
            }
        };
        let coeq = coequalizer_presentation(&a)?.is_iso();
        let mut v = json!({
            "valid": true,
            "truncation": a.truncation(),
            "homology": homology_doc(&stable_homology(&a)?),
            "coequalizer_iso": coeq,
        });
        let mut ok = coeq;
        if a.truncation() <= frame.degree() {
            let r = realize_left_adjoint(&frame, &a)?;
            let iso = standard_frame_comparison(&frame, &r, &a)?.is_levelwise_iso();
            ok &= iso;
            v["frame_recovers"] = json!(iso);
        }
        if is_small(&a, 6) {
            let mut triples = Vec::new();
            for n in 0..=2 {
                for k in [0, 1] {
                    let (t, c) = adjunction_entry(n, k, &a, limit)?;
                    code = worst(code, c);
                    triples.push(t);
                }
            }
            v["adjunction"] = json!(triples);
        }
        if !ok {
            code = worst(code, FAILED);
        }
        per_input.insert(key.clone(), v);
        spectra.insert(key, a);
    }
    let mut pairs = serde_json::Map::new();
    let mut agreeing = 0;
    for (ka, a) in &spectra {
        for (kb, b) in &spectra {
            let k = kunneth_compare(a, b, &q)?;
            let c = commute_check(a, b, &q, &q)?;
            let t = twist_iso(a, b, &q)?;
            let twist = t.forward.is_levelwise_iso() && t.two_sided()?;
            let ok = k.equal && c.equal && twist;
            agreeing += usize::from(ok);
            if !ok {
                code = worst(code, FAILED);
            }
            pairs.insert(
                format!("{ka} ^ {kb}"),
                json!({ "kunneth": k.equal, "commute": c.equal, "twist_iso": twist, "homology": homology_doc(&k.left) }),
            );
        }
    }
    let summary = format!(
        "corpus-run: {} spectra, {agreeing}/{} pairs pass along {}",
        spectra.len(),
        pairs.len(),
        q.name()
    );
    let report = json!({ "command": "corpus-run", "q": q.name(), "spectra": per_input, "pairs": pairs });
    Ok(Outcome { report, code, summary })
}

pub fn generate_corpus(seed: u64, size: usize, dir: &Path) -> Result<Outcome, CliError> {
    let entries = corpus::generate_corpus(seed, size)?;
    std::fs::create_dir_all(dir).map_err(|e| CliError::parse(format!("cannot create {}: {e}", dir.display())))?;
    let mut files = Vec::new();
    for e in &entries {
        let path = dir.join(format!("{}.json", e.name));
        std::fs::write(&path, spectrum_to_string(&e.spectrum) + "\n")
            .map_err(|err| CliError::parse(format!("cannot write {}: {err}", path.display())))?;
        files.push(format!("{}.json", e.name));
    }
    let summary = format!("generate-corpus: {} files in {}", files.len(), dir.display());
    Ok(Outcome { report: json!({ "command": "generate-corpus", "seed": seed, "size": size, "files": files }), code: OK, summary })
}
