use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::{bail, Context, Result};
use platsurf::paths::{enumerate_allowable, parse_entries};
use platsurf::{
    certify, certify_haken, count_allowable, extremal_paths, random_diagram, render,
    to_braid_word, to_pd_code, AllowablePath, Certificate, CertificateMode, LinkTopology,
    PlatDiagram, RenderFormat, Strictness, SurgerySpec,
};

use crate::{Command, DrawFormat, ExportFormat, Mode};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Positive = 0,
    Refused = 1,
}

impl Status {
    fn from_verdict(ok: bool) -> Self {
        if ok {
            Status::Positive
        } else {
            Status::Refused
        }
    }
}

pub fn run(command: Command) -> Result<Status> {
    match command {
        Command::Validate { file, relaxed, json } => {
            let d = load(&file)?;
            let mode = if relaxed { Strictness::Relaxed } else { Strictness::Strict };
            let report = d.check_hypotheses(mode);
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                println!("{report}");
            }
            Ok(Status::from_verdict(report.passed()))
        }
        Command::Paths { file, what } => {
            let d = load(&file)?;
            if d.n() <= 2 {
                println!("0");
                println!("n = {} <= 2: two-bridge link, no allowable paths and no closed essential surface", d.n());
                return Ok(Status::Refused);
            }
            if what.count {
                println!("{}", count_allowable(d.n(), d.m())?);
            } else {
                let mut out = std::io::stdout().lock();
                for p in enumerate_allowable(&d) {
                    writeln!(out, "{p}")?;
                }
            }
            Ok(Status::Positive)
        }
        Command::Certify { file, path, mode, json } => {
            let d = load(&file)?;
            let entries = path_or_leftmost(&d, path.as_deref())?;
            let mode = match mode {
                Mode::Theorem1 => CertificateMode::Theorem1,
                Mode::Relaxed => CertificateMode::RelaxedRemark1,
                Mode::Composite => CertificateMode::CompositeRemark3,
            };
            let cert = certify(&d, &entries, mode)?;
            emit_certificate(&cert, json.as_deref())
        }
        Command::Surgery { file, slopes, json } => {
            let d = load(&file)?;
            let spec = SurgerySpec::parse(&slopes)?;
            let cert = certify_haken(&d, &spec)?;
            emit_certificate(&cert, json.as_deref())
        }
        Command::Export { file, format } => {
            let d = load(&file)?;
            match format {
                ExportFormat::Braid => println!("{}", to_braid_word(&d)?),
                ExportFormat::Pd => println!("{}", to_pd_code(&d)?),
                ExportFormat::Json => println!("{}", d.to_json()),
            }
            Ok(Status::Positive)
        }
        Command::Render { file, path, format, out } => {
            let d = load(&file)?;
            let path = match path {
                Some(s) => Some(AllowablePath::new(&d, parse_entries(&s)?)?),
                None => None,
            };
            let format = match format {
                DrawFormat::Svg => RenderFormat::Svg,
                DrawFormat::Ascii => RenderFormat::Ascii,
            };
            let bytes = render(&d, path.as_ref(), format)?;
            write_or_print(out.as_deref(), &bytes)?;
            Ok(Status::Positive)
        }
        Command::Random { n, m, max_twist, seed, require_parity, out } => {
            let d = random_diagram(n, m, max_twist, seed, require_parity)?;
            let mut text = d.to_json();
            text.push('\n');
            write_or_print(out.as_deref(), text.as_bytes())?;
            Ok(Status::Positive)
        }
        Command::Info { file, json } => {
            let d = load(&file)?;
            let components = LinkTopology::build(&d).component_count();
            let genus = d.m().div_ceil(2);
            if json {
                let value = serde_json::json!({
                    "n": d.n(),
                    "m": d.m(),
                    "components": components,
                    "crossing_number": d.crossing_number(),
                    "genus_preview": genus,
                    "digest": d.digest(),
                });
                println!("{}", serde_json::to_string_pretty(&value)?);
            } else {
                println!("n: {}", d.n());
                println!("m: {}", d.m());
                println!("components: {components}");
                println!("crossing number: {}", d.crossing_number());
                println!("genus of F, F': {genus}");
            }
            Ok(Status::Positive)
        }
    }
}

fn load(file: &Path) -> Result<PlatDiagram> {
    let text = fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    PlatDiagram::from_json(&text).with_context(|| format!("loading {}", file.display()))
}

fn path_or_leftmost(d: &PlatDiagram, path: Option<&str>) -> Result<Vec<usize>> {
    Ok(match path {
        Some(s) => {
            let entries = parse_entries(s)?;
            if d.n() >= 3 {
                let check = platsurf::check_allowable(d, &entries)?;
                if !check.allowable {
                    bail!(
                        "path {s} is not allowable: {}",
                        check.diagnostic.unwrap_or_default()
                    );
                }
            }
            entries
        }
        None if d.n() >= 3 => extremal_paths(d)?.0.entries().to_vec(),
        None => vec![1; d.m()],
    })
}

fn emit_certificate(cert: &Certificate, out: Option<&Path>) -> Result<Status> {
    let text = cert.to_json() + "\n";
    match out {
        Some(p) => {
            fs::write(p, &text).with_context(|| format!("writing {}", p.display()))?;
            println!(
                "{}: {}",
                if cert.certified() { "certified" } else { "refused" },
                p.display()
            );
        }
        None => print!("{text}"),
    }
    Ok(Status::from_verdict(cert.certified()))
}

fn write_or_print(out: Option<&Path>, bytes: &[u8]) -> Result<()> {
    match out {
        Some(p) => fs::write(p, bytes).with_context(|| format!("writing {}", p.display())),
        None => {
            std::io::stdout().write_all(bytes)?;
            Ok(())
        }
    }
}
